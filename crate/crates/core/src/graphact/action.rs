use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeSet;
use std::hash::{Hash, Hasher};

use super::graph::FiniteGraph;
use super::morphism::{EdgeImage, GraphMorphism};
use super::GraphError;
use crate::gersten::{closure, EffectiveGroup, ElementSet};

/// The automorphism group of a fixed graph, as an effective group.
struct AutomorphismGroup<'a> {
    graph: &'a FiniteGraph,
}

impl EffectiveGroup for AutomorphismGroup<'_> {
    type Element = GraphMorphism;

    fn identity(&self) -> GraphMorphism {
        GraphMorphism::identity(self.graph)
    }

    fn multiply(&self, a: &GraphMorphism, b: &GraphMorphism) -> GraphMorphism {
        a.compose(b).expect("automorphisms of one graph compose")
    }

    fn invert(&self, a: &GraphMorphism) -> GraphMorphism {
        a.inverse().expect("action elements are automorphisms")
    }

    fn equal(&self, a: &GraphMorphism, b: &GraphMorphism) -> bool {
        a == b
    }

    fn fingerprint(&self, a: &GraphMorphism) -> u64 {
        let mut h = DefaultHasher::new();
        a.hash(&mut h);
        h.finish()
    }
}

/// Upper bound on enumerated group elements.
pub const ACTION_CAP: usize = 100_000;

/// A finite group acting on a graph, given by named generating automorphisms
/// and enumerated by closure.
#[derive(Clone, Debug)]
pub struct GroupActionOnGraph {
    graph: FiniteGraph,
    generators: Vec<(String, GraphMorphism)>,
    elements: ElementSet<GraphMorphism>,
}

impl GroupActionOnGraph {
    pub fn new(
        graph: &FiniteGraph,
        generators: Vec<(String, GraphMorphism)>,
    ) -> Result<Self, GraphError> {
        for (name, g) in &generators {
            if g.source() != graph || !g.is_automorphism() {
                return Err(GraphError::InvalidMorphism(format!(
                    "generator {name} is not an automorphism of the graph"
                )));
            }
        }
        let gens: Vec<GraphMorphism> = generators.iter().map(|(_, g)| g.clone()).collect();
        let set = closure(&gens, &AutomorphismGroup { graph }, ACTION_CAP)
            .map_err(|_| GraphError::ActionTooLarge(ACTION_CAP))?;
        Ok(GroupActionOnGraph {
            graph: graph.clone(),
            generators,
            elements: set,
        })
    }

    pub fn trivial(graph: &FiniteGraph) -> Self {
        Self::new(graph, Vec::new()).expect("trivial action")
    }

    pub fn graph(&self) -> &FiniteGraph {
        &self.graph
    }

    pub fn generators(&self) -> &[(String, GraphMorphism)] {
        &self.generators
    }

    pub fn elements(&self) -> &[GraphMorphism] {
        self.elements.elements()
    }

    pub fn order(&self) -> usize {
        self.elements.order()
    }

    /// Checks closure under products and inverses, and that the identity is present.
    pub fn is_group(&self) -> bool {
        let g = AutomorphismGroup { graph: &self.graph };
        let has = |x: &GraphMorphism| self.elements.contains(&g, x);
        let all = self.elements();
        has(&g.identity())
            && all
                .iter()
                .all(|a| has(&g.invert(a)) && all.iter().all(|b| has(&g.multiply(a, b))))
    }

    pub fn edge_orbit(&self, e: usize) -> BTreeSet<usize> {
        self.elements()
            .iter()
            .filter_map(|g| match g.edge_image(e) {
                EdgeImage::Edge { edge, .. } => Some(edge),
                EdgeImage::Vertex(_) => None,
            })
            .collect()
    }

    pub fn edge_orbits(&self) -> Vec<BTreeSet<usize>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for e in 0..self.graph.edge_count() {
            if seen.contains(&e) {
                continue;
            }
            let orbit = self.edge_orbit(e);
            seen.extend(orbit.iter().copied());
            out.push(orbit);
        }
        out
    }

    pub fn vertex_orbits(&self) -> Vec<BTreeSet<usize>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in 0..self.graph.vertex_count() {
            if seen.contains(&v) {
                continue;
            }
            let orbit: BTreeSet<usize> =
                self.elements().iter().map(|g| g.vertex_image(v)).collect();
            seen.extend(orbit.iter().copied());
            out.push(orbit);
        }
        out
    }

    pub fn is_edge_transitive(&self) -> bool {
        self.edge_orbits().len() <= 1
    }

    /// One generator per line: `gen <name>: v a->b ...; e x->y+ z->w- ...`.
    /// Vertices and edges not mentioned are fixed; an edge target without a
    /// sign keeps its direction.
    pub fn parse(graph: &FiniteGraph, text: &str) -> Result<Self, GraphError> {
        let mut gens = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| GraphError::Parse {
                line: lineno + 1,
                message: msg,
            };
            let rest = line
                .strip_prefix("gen")
                .ok_or_else(|| bad("expected `gen <name>: ...`".into()))?;
            let (name, body) = rest
                .split_once(':')
                .ok_or_else(|| bad("missing `:` after the generator name".into()))?;
            let name = name.trim();
            if name.is_empty() {
                return Err(bad("empty generator name".into()));
            }
            let mut vertex_map: Vec<usize> = (0..graph.vertex_count()).collect();
            let mut edge_map: Vec<EdgeImage> = (0..graph.edge_count())
                .map(|e| EdgeImage::Edge { edge: e, sign: 1 })
                .collect();
            for part in body.split(';').map(str::trim).filter(|p| !p.is_empty()) {
                let mut words = part.split_whitespace();
                let kind = words.next().unwrap_or("");
                for pair in words {
                    let (from, to) = pair
                        .split_once("->")
                        .ok_or_else(|| bad(format!("expected `a->b`, found {pair}")))?;
                    match kind {
                        "v" => {
                            let a = graph
                                .vertex_index(from)
                                .ok_or_else(|| bad(format!("unknown vertex {from}")))?;
                            let b = graph
                                .vertex_index(to)
                                .ok_or_else(|| bad(format!("unknown vertex {to}")))?;
                            vertex_map[a] = b;
                        }
                        "e" => {
                            let a = graph
                                .edge_index(from)
                                .ok_or_else(|| bad(format!("unknown edge {from}")))?;
                            let (target, sign) = match to.strip_suffix('-') {
                                Some(t) => (t, -1),
                                None => (to.strip_suffix('+').unwrap_or(to), 1),
                            };
                            let b = graph
                                .edge_index(target)
                                .ok_or_else(|| bad(format!("unknown edge {target}")))?;
                            edge_map[a] = EdgeImage::Edge { edge: b, sign };
                        }
                        _ => {
                            return Err(bad(format!(
                                "section must start with `v` or `e`, found `{kind}`"
                            )))
                        }
                    }
                }
            }
            let m = GraphMorphism::new(graph, graph, vertex_map, edge_map)
                .map_err(|e| bad(e.to_string()))?;
            gens.push((name.to_string(), m));
        }
        Self::new(graph, gens)
    }

    /// Inverse of `parse`.
    pub fn to_text(&self) -> String {
        self.generators
            .iter()
            .map(|(name, m)| format!("gen {name}: {m}\n"))
            .collect()
    }
}
