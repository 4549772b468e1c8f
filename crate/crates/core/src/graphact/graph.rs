use std::collections::BTreeSet;
use std::fmt;

use super::GraphError;
use crate::{Rational, RationalMatrix, RationalSubspace};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub name: String,
    pub iota: usize,
    pub tau: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.iota == self.tau
    }
}

/// A finite graph with named vertices and explicitly identified, oriented
/// edges. Loops and parallel edges are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FiniteGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

/// Disjoint-set forest over `0..n` with path halving.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

impl FiniteGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> usize {
        self.vertices.push(name.into());
        self.vertices.len() - 1
    }

    pub fn add_edge(
        &mut self,
        name: impl Into<String>,
        iota: usize,
        tau: usize,
    ) -> Result<usize, GraphError> {
        let n = self.vertices.len();
        if iota >= n || tau >= n {
            return Err(GraphError::UnknownVertex(format!("{}", iota.max(tau))));
        }
        self.edges.push(Edge {
            name: name.into(),
            iota,
            tau,
        });
        Ok(self.edges.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.name == name)
    }

    /// Number of edge ends at `v`; a loop contributes two.
    pub fn valence(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| (e.iota == v) as usize + (e.tau == v) as usize)
            .sum()
    }

    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.vertex_count());
        let merges = self
            .edges
            .iter()
            .filter(|e| uf.union(e.iota, e.tau))
            .count();
        self.vertex_count() - merges
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.component_count() == 1
    }

    /// Whether the given edges contain no cycle (loops count as cycles).
    pub fn is_forest(&self, edges: &BTreeSet<usize>) -> bool {
        let mut uf = UnionFind::new(self.vertex_count());
        edges
            .iter()
            .all(|&e| uf.union(self.edges[e].iota, self.edges[e].tau))
    }

    /// `E - V + 1`, the rank of the fundamental group.
    pub fn rank(&self) -> Result<usize, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(self.edge_count() + 1 - self.vertex_count())
    }

    /// Vertex-by-edge matrix of `τ - ι`; a loop column is zero.
    pub fn boundary_matrix(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.vertex_count(), self.edge_count());
        for (k, e) in self.edges.iter().enumerate() {
            m[(e.tau, k)] += Rational::from_integer(1.into());
            m[(e.iota, k)] -= Rational::from_integer(1.into());
        }
        m
    }

    /// Edge weights with equal inflow and outflow at every vertex: `H_1` with
    /// rational coefficients, inside the edge space.
    pub fn cycle_space(&self) -> RationalSubspace {
        self.boundary_matrix().kernel()
    }

    /// One declaration per line: `vertex <name>` and `edge <name> <iota> <tau>`.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut g = FiniteGraph::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: &str| GraphError::Parse {
                line: lineno + 1,
                message: msg.to_string(),
            };
            let words: Vec<&str> = line.split_whitespace().collect();
            match words.as_slice() {
                ["vertex", name] => {
                    if g.vertex_index(name).is_some() {
                        return Err(bad("duplicate vertex"));
                    }
                    g.add_vertex(*name);
                }
                ["edge", name, iota, tau] => {
                    if g.edge_index(name).is_some() {
                        return Err(bad("duplicate edge"));
                    }
                    let i = g.vertex_index(iota).ok_or_else(|| bad("unknown vertex"))?;
                    let t = g.vertex_index(tau).ok_or_else(|| bad("unknown vertex"))?;
                    g.add_edge(*name, i, t)?;
                }
                _ => {
                    return Err(bad(
                        "expected `vertex <name>` or `edge <name> <iota> <tau>`",
                    ))
                }
            }
        }
        Ok(g)
    }
}

impl fmt::Display for FiniteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.vertices {
            writeln!(f, "vertex {v}")?;
        }
        for e in &self.edges {
            writeln!(
                f,
                "edge {} {} {}",
                e.name, self.vertices[e.iota], self.vertices[e.tau]
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphact::builders::*;

    #[test]
    fn ranks() {
        assert_eq!(n_rose(3).unwrap().rank().unwrap(), 3);
        assert_eq!(n_cage(3).unwrap().rank().unwrap(), 2);
        assert_eq!(cube_skeleton().rank().unwrap(), 5);
        let mut g = FiniteGraph::new();
        g.add_vertex("a");
        g.add_vertex("b");
        assert_eq!(g.rank(), Err(GraphError::Disconnected));
    }

    #[test]
    fn cycle_space_dimensions() {
        assert_eq!(n_cage(3).unwrap().cycle_space().dim(), 2);
        assert_eq!(n_rose(4).unwrap().cycle_space().dim(), 4);
        assert_eq!(k33().cycle_space().dim(), 4);
    }

    #[test]
    fn text_round_trip() {
        let g = dumbbell();
        let back = FiniteGraph::parse(&g.to_string()).unwrap();
        assert_eq!(back, g);
        assert!(matches!(
            FiniteGraph::parse("edge x a b"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(FiniteGraph::parse("vertex a\n# comment\n\nedge l a a\n")
            .unwrap()
            .edge(0)
            .is_loop());
    }

    #[test]
    fn valence_counts_loop_twice() {
        let g = dumbbell();
        assert!((0..2).all(|v| g.valence(v) == 3));
    }
}
