use std::collections::{BTreeMap, BTreeSet};

use super::action::GroupActionOnGraph;
use super::graph::{FiniteGraph, UnionFind};
use super::morphism::{EdgeImage, GraphMorphism};
use super::GraphError;

/// Contracts each component of the chosen edge set to a vertex.
///
/// Quotient vertices are numbered by first appearance of their class and
/// named by joining member names with `+`; surviving edges keep their names
/// and order.
pub fn collapse(g: &FiniteGraph, edges: &BTreeSet<usize>) -> (FiniteGraph, GraphMorphism) {
    let mut uf = UnionFind::new(g.vertex_count());
    for &e in edges {
        uf.union(g.edge(e).iota, g.edge(e).tau);
    }
    let mut class_of_root: BTreeMap<usize, usize> = BTreeMap::new();
    let mut members: Vec<Vec<&str>> = Vec::new();
    let mut vertex_map = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let r = uf.find(v);
        let next = members.len();
        let c = *class_of_root.entry(r).or_insert(next);
        if c == next {
            members.push(Vec::new());
        }
        members[c].push(g.vertex_name(v));
        vertex_map.push(c);
    }
    let mut q = FiniteGraph::new();
    for m in &members {
        q.add_vertex(m.join("+"));
    }
    let mut edge_map = Vec::with_capacity(g.edge_count());
    for (k, e) in g.edges().iter().enumerate() {
        if edges.contains(&k) {
            edge_map.push(EdgeImage::Vertex(vertex_map[e.iota]));
        } else {
            let idx = q
                .add_edge(e.name.clone(), vertex_map[e.iota], vertex_map[e.tau])
                .expect("classes are vertices");
            edge_map.push(EdgeImage::Edge { edge: idx, sign: 1 });
        }
    }
    let m = GraphMorphism::new(g, &q, vertex_map, edge_map).expect("collapse is a morphism");
    (q, m)
}

/// `X_e` with its collapsing map and the action it inherits.
#[derive(Clone, Debug)]
pub struct OrbitCollapse {
    pub graph: FiniteGraph,
    pub map: GraphMorphism,
    pub action: GroupActionOnGraph,
}

/// Collapses every edge outside the orbit of `e`; the action descends because
/// the collapsed set is invariant.
pub fn orbit_collapse(act: &GroupActionOnGraph, e: usize) -> Result<OrbitCollapse, GraphError> {
    let g = act.graph();
    let orbit = act.edge_orbit(e);
    let rest: BTreeSet<usize> = (0..g.edge_count()).filter(|k| !orbit.contains(k)).collect();
    let (q, map) = collapse(g, &rest);
    let kept: Vec<usize> = (0..g.edge_count()).filter(|k| orbit.contains(k)).collect();
    let mut gens = Vec::new();
    for (name, h) in act.generators() {
        let vertex_map: Vec<usize> = (0..q.vertex_count())
            .map(|c| {
                let v = (0..g.vertex_count())
                    .find(|&v| map.vertex_image(v) == c)
                    .expect("collapse is onto");
                map.vertex_image(h.vertex_image(v))
            })
            .collect();
        let edge_map = kept
            .iter()
            .map(|&old| match h.edge_image(old) {
                EdgeImage::Edge { edge, sign } => match map.edge_image(edge) {
                    EdgeImage::Edge { edge: new, sign: s } => EdgeImage::Edge {
                        edge: new,
                        sign: sign * s,
                    },
                    EdgeImage::Vertex(_) => unreachable!("orbits are invariant"),
                },
                EdgeImage::Vertex(_) => unreachable!("actions are by automorphisms"),
            })
            .collect();
        gens.push((
            name.clone(),
            GraphMorphism::new(&q, &q, vertex_map, edge_map)?,
        ));
    }
    let action = GroupActionOnGraph::new(&q, gens)?;
    Ok(OrbitCollapse {
        graph: q,
        map,
        action,
    })
}

fn check_admissibility_hypotheses(g: &FiniteGraph) -> Result<(), GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.valence(v) == 2) {
        return Err(GraphError::Precondition(format!(
            "vertex {} has valence 2",
            g.vertex_name(v)
        )));
    }
    Ok(())
}

/// No invariant forest with an edge exists.
///
/// An invariant edge set is a union of orbits, and a subset of a forest is a
/// forest, so it suffices to test single orbits.
pub fn is_admissible(act: &GroupActionOnGraph) -> Result<bool, GraphError> {
    let g = act.graph();
    check_admissibility_hypotheses(g)?;
    Ok(!act.edge_orbits().iter().any(|o| g.is_forest(o)))
}

/// Edge count above which the exhaustive check refuses to run.
pub const BRUTE_FORCE_EDGE_LIMIT: usize = 12;

/// Exhaustive counterpart of `is_admissible` over all nonempty unions of
/// orbits, for cross-validation on small graphs.
pub fn is_admissible_brute_force(act: &GroupActionOnGraph) -> Result<bool, GraphError> {
    let g = act.graph();
    check_admissibility_hypotheses(g)?;
    if g.edge_count() > BRUTE_FORCE_EDGE_LIMIT {
        return Err(GraphError::Precondition(format!(
            "more than {BRUTE_FORCE_EDGE_LIMIT} edges"
        )));
    }
    let orbits = act.edge_orbits();
    for mask in 1u32..1 << orbits.len() {
        let union: BTreeSet<usize> = orbits
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .flat_map(|(_, o)| o.iter().copied())
            .collect();
        if g.is_forest(&union) {
            return Ok(false);
        }
    }
    Ok(true)
}
