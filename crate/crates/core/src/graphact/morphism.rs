use std::collections::BTreeMap;
use std::fmt;

use super::graph::{FiniteGraph, UnionFind};
use super::GraphError;
use crate::{Rational, RationalMatrix};

/// Where a morphism sends an edge: onto an edge, with `sign = -1` when the
/// direction is reversed, or to a vertex.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum EdgeImage {
    Edge { edge: usize, sign: i8 },
    Vertex(usize),
}

/// A morphism of graphs, carrying its source and target.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphMorphism {
    source: FiniteGraph,
    target: FiniteGraph,
    vertex_map: Vec<usize>,
    edge_map: Vec<EdgeImage>,
}

impl GraphMorphism {
    /// Checks that every edge image is compatible with the vertex map.
    pub fn new(
        source: &FiniteGraph,
        target: &FiniteGraph,
        vertex_map: Vec<usize>,
        edge_map: Vec<EdgeImage>,
    ) -> Result<Self, GraphError> {
        if vertex_map.len() != source.vertex_count() || edge_map.len() != source.edge_count() {
            return Err(GraphError::InvalidMorphism(
                "maps must be total on the source".into(),
            ));
        }
        if vertex_map.iter().any(|&w| w >= target.vertex_count()) {
            return Err(GraphError::InvalidMorphism(
                "vertex image out of range".into(),
            ));
        }
        for (k, (e, img)) in source.edges().iter().zip(&edge_map).enumerate() {
            let (i, t) = (vertex_map[e.iota], vertex_map[e.tau]);
            let ok = match *img {
                EdgeImage::Vertex(w) => w < target.vertex_count() && i == w && t == w,
                EdgeImage::Edge { edge, sign } => {
                    edge < target.edge_count() && {
                        let f = target.edge(edge);
                        match sign {
                            1 => (f.iota, f.tau) == (i, t),
                            -1 => (f.tau, f.iota) == (i, t),
                            _ => false,
                        }
                    }
                }
            };
            if !ok {
                return Err(GraphError::InvalidMorphism(format!(
                    "edge {} is not mapped compatibly",
                    source.edge(k).name
                )));
            }
        }
        Ok(GraphMorphism {
            source: source.clone(),
            target: target.clone(),
            vertex_map,
            edge_map,
        })
    }

    pub fn identity(g: &FiniteGraph) -> Self {
        let edges = (0..g.edge_count())
            .map(|e| EdgeImage::Edge { edge: e, sign: 1 })
            .collect();
        GraphMorphism {
            source: g.clone(),
            target: g.clone(),
            vertex_map: (0..g.vertex_count()).collect(),
            edge_map: edges,
        }
    }

    /// For graphs without parallel edges: each edge goes to the unique edge
    /// joining the image endpoints.
    pub fn from_vertex_map(
        source: &FiniteGraph,
        target: &FiniteGraph,
        vertex_map: Vec<usize>,
    ) -> Result<Self, GraphError> {
        let mut edge_map = Vec::with_capacity(source.edge_count());
        for e in source.edges() {
            let (i, t) = (vertex_map[e.iota], vertex_map[e.tau]);
            let img = if i == t && !e.is_loop() {
                EdgeImage::Vertex(i)
            } else {
                let found = target.edges().iter().enumerate().find_map(|(k, f)| {
                    if (f.iota, f.tau) == (i, t) {
                        Some(EdgeImage::Edge { edge: k, sign: 1 })
                    } else if (f.tau, f.iota) == (i, t) {
                        Some(EdgeImage::Edge { edge: k, sign: -1 })
                    } else {
                        None
                    }
                });
                found.ok_or_else(|| {
                    GraphError::InvalidMorphism(format!("no edge joins the images of {}", e.name))
                })?
            };
            edge_map.push(img);
        }
        Self::new(source, target, vertex_map, edge_map)
    }

    pub fn source(&self) -> &FiniteGraph {
        &self.source
    }

    pub fn target(&self) -> &FiniteGraph {
        &self.target
    }

    pub fn vertex_image(&self, v: usize) -> usize {
        self.vertex_map[v]
    }

    pub fn edge_image(&self, e: usize) -> EdgeImage {
        self.edge_map[e]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GraphMorphism) -> Result<GraphMorphism, GraphError> {
        if other.target != self.source {
            return Err(GraphError::InvalidMorphism(
                "composition of non-composable morphisms".into(),
            ));
        }
        let vertex_map = other
            .vertex_map
            .iter()
            .map(|&v| self.vertex_map[v])
            .collect();
        let edge_map = other
            .edge_map
            .iter()
            .map(|img| match *img {
                EdgeImage::Vertex(w) => EdgeImage::Vertex(self.vertex_map[w]),
                EdgeImage::Edge { edge, sign } => match self.edge_map[edge] {
                    EdgeImage::Vertex(w) => EdgeImage::Vertex(w),
                    EdgeImage::Edge { edge: f, sign: s } => EdgeImage::Edge {
                        edge: f,
                        sign: sign * s,
                    },
                },
            })
            .collect();
        Ok(GraphMorphism {
            source: other.source.clone(),
            target: self.target.clone(),
            vertex_map,
            edge_map,
        })
    }

    /// Bijective on vertices and edges, with source equal to target.
    pub fn is_automorphism(&self) -> bool {
        if self.source != self.target {
            return false;
        }
        let mut hit_v = vec![false; self.target.vertex_count()];
        let mut hit_e = vec![false; self.target.edge_count()];
        for &v in &self.vertex_map {
            hit_v[v] = true;
        }
        for img in &self.edge_map {
            match *img {
                EdgeImage::Edge { edge, .. } => hit_e[edge] = true,
                EdgeImage::Vertex(_) => return false,
            }
        }
        hit_v.iter().all(|&b| b) && hit_e.iter().all(|&b| b)
    }

    pub fn inverse(&self) -> Result<GraphMorphism, GraphError> {
        if !self.is_automorphism() {
            return Err(GraphError::InvalidMorphism(
                "only automorphisms are inverted".into(),
            ));
        }
        let mut vertex_map = vec![0; self.vertex_map.len()];
        for (v, &w) in self.vertex_map.iter().enumerate() {
            vertex_map[w] = v;
        }
        let mut edge_map = vec![EdgeImage::Vertex(0); self.edge_map.len()];
        for (e, img) in self.edge_map.iter().enumerate() {
            if let EdgeImage::Edge { edge, sign } = *img {
                edge_map[edge] = EdgeImage::Edge { edge: e, sign };
            }
        }
        Ok(GraphMorphism {
            source: self.target.clone(),
            target: self.source.clone(),
            vertex_map,
            edge_map,
        })
    }

    /// Surjective on vertices, each target edge hit by exactly one edge, and
    /// the preimage of every target vertex connected.
    pub fn is_collapsing(&self) -> bool {
        let mut hits = vec![0usize; self.target.edge_count()];
        for img in &self.edge_map {
            if let EdgeImage::Edge { edge, .. } = *img {
                hits[edge] += 1;
            }
        }
        if hits.iter().any(|&h| h != 1) {
            return false;
        }
        let mut uf = UnionFind::new(self.source.vertex_count());
        for (e, img) in self.source.edges().iter().zip(&self.edge_map) {
            if matches!(img, EdgeImage::Vertex(_)) {
                uf.union(e.iota, e.tau);
            }
        }
        let mut roots: BTreeMap<usize, usize> = BTreeMap::new();
        for (v, &w) in self.vertex_map.iter().enumerate() {
            let r = uf.find(v);
            if *roots.entry(w).or_insert(r) != r {
                return false;
            }
        }
        roots.len() == self.target.vertex_count()
    }

    /// Pushforward on edge weights, `|E(target)| × |E(source)|`.
    pub fn edge_pushforward(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.target.edge_count(), self.source.edge_count());
        for (e, img) in self.edge_map.iter().enumerate() {
            if let EdgeImage::Edge { edge, sign } = *img {
                m[(edge, e)] = Rational::from_integer(i64::from(sign).into());
            }
        }
        m
    }

    /// The map `H_1(source) → H_1(target)` in the canonical cycle-space bases.
    pub fn induced_homology(&self) -> Result<RationalMatrix, GraphError> {
        if !self.is_collapsing() {
            return Err(GraphError::InvalidMorphism(
                "homology is induced only for collapsing maps and isomorphisms".into(),
            ));
        }
        Ok(self.homology_matrix())
    }

    /// As `induced_homology`, without the precondition; any graph morphism
    /// carries cycles to cycles.
    pub fn homology_matrix(&self) -> RationalMatrix {
        let src = self.source.cycle_space();
        let dst = self.target.cycle_space();
        let push = self.edge_pushforward();
        let columns: Vec<Vec<Rational>> = src
            .basis()
            .iter()
            .map(|b| {
                dst.coordinates(&push.mul_vec(b))
                    .expect("graph morphisms map cycles to cycles")
            })
            .collect();
        RationalMatrix::from_columns(dst.dim(), &columns)
    }
}

impl fmt::Display for GraphMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self
            .vertex_map
            .iter()
            .enumerate()
            .map(|(v, &w)| {
                format!(
                    "{}->{}",
                    self.source.vertex_name(v),
                    self.target.vertex_name(w)
                )
            })
            .collect();
        let es: Vec<String> = self
            .edge_map
            .iter()
            .enumerate()
            .map(|(e, img)| match *img {
                EdgeImage::Edge { edge, sign } => {
                    format!(
                        "{}->{}{}",
                        self.source.edge(e).name,
                        self.target.edge(edge).name,
                        if sign > 0 { "+" } else { "-" }
                    )
                }
                EdgeImage::Vertex(w) => format!(
                    "{}->{}",
                    self.source.edge(e).name,
                    self.target.vertex_name(w)
                ),
            })
            .collect();
        write!(f, "v {}; e {}", vs.join(" "), es.join(" "))
    }
}
