use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use super::decomposition::{epsilon_decomposition, EigenDecomposition};
use super::representation::Representation;
use super::RepError;
use crate::freegrp::GeneratorWord;
use crate::perm::{Permutation, Subset};
use crate::RationalMatrix;

/// A directed graph on subsets of `{1..n}`; self-loops are part of the data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    rank: usize,
    vertices: BTreeSet<Subset>,
    edges: BTreeSet<(Subset, Subset)>,
}

impl Diagram {
    pub fn new(rank: usize, vertices: BTreeSet<Subset>, edges: BTreeSet<(Subset, Subset)>) -> Self {
        debug_assert!(edges
            .iter()
            .all(|(a, b)| vertices.contains(a) && vertices.contains(b)));
        Diagram {
            rank,
            vertices,
            edges,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertices(&self) -> &BTreeSet<Subset> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(Subset, Subset)> {
        &self.edges
    }

    pub fn has_edge(&self, from: Subset, to: Subset) -> bool {
        self.edges.contains(&(from, to))
    }

    /// Vertex sets of the connected components of the underlying undirected graph.
    pub fn components(&self) -> Vec<BTreeSet<Subset>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.vertices {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = BTreeSet::from([start]);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &(a, b) in &self.edges {
                    let other = if a == v {
                        b
                    } else if b == v {
                        a
                    } else {
                        continue;
                    };
                    if seen.insert(other) {
                        comp.insert(other);
                        stack.push(other);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// `{"rank": n, "adjacency": {"<mask>": [<mask>, ...]}}`, one key per vertex.
    pub fn to_json(&self) -> Value {
        let mut adjacency = Map::new();
        for v in &self.vertices {
            let targets: Vec<u32> = self
                .edges
                .iter()
                .filter(|(a, _)| a == v)
                .map(|(_, b)| b.mask())
                .collect();
            adjacency.insert(v.mask().to_string(), json!(targets));
        }
        json!({ "rank": self.rank, "adjacency": adjacency })
    }

    pub fn from_json(value: &Value) -> Result<Self, RepError> {
        let bad = || RepError::Parse("diagram JSON needs rank and adjacency".into());
        let rank = value["rank"].as_u64().ok_or_else(bad)? as usize;
        let adjacency = value["adjacency"].as_object().ok_or_else(bad)?;
        let mut vertices = BTreeSet::new();
        let mut edges = BTreeSet::new();
        for (key, targets) in adjacency {
            let from = Subset(key.parse().map_err(|_| bad())?);
            vertices.insert(from);
            for t in targets.as_array().ok_or_else(bad)? {
                edges.insert((from, Subset(t.as_u64().ok_or_else(bad)? as u32)));
            }
        }
        if edges.iter().any(|(_, b)| !vertices.contains(b)) {
            return Err(RepError::Parse("edge into an undeclared vertex".into()));
        }
        Ok(Diagram {
            rank,
            vertices,
            edges,
        })
    }

    /// Rows `V_n` down to `V_0`, then the edges. Loops are not drawn; a
    /// vertex without a loop marks its outgoing edges with a tail `>`, and a
    /// pair joined both ways is drawn once without arrowheads.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for level in (0..=self.rank).rev() {
            let row: Vec<String> = self
                .vertices
                .iter()
                .filter(|v| v.len() == level)
                .map(Subset::to_string)
                .collect();
            let _ = writeln!(
                out,
                "V{level}:{}",
                row.iter().map(|v| format!(" {v}")).collect::<String>()
            );
        }
        let looped = |v: Subset| self.has_edge(v, v);
        for &(a, b) in &self.edges {
            if a == b {
                continue;
            }
            let tail = |v: Subset, mark: &'static str| if looped(v) { "" } else { mark };
            if self.has_edge(b, a) {
                if a < b {
                    let _ = writeln!(out, "{a} {}-{} {b}", tail(a, ">"), tail(b, "<"));
                }
            } else {
                let _ = writeln!(out, "{a} {}-> {b}", tail(a, ">"));
            }
        }
        out
    }
}

/// The minimal diagram for `x`: vertices are the `I` with `E_I ≠ 0`, and
/// `I → J` whenever `p_J(x(E_I)) ≠ 0`.
pub fn minimal_diagram(rep: &Representation, x: &GeneratorWord) -> Result<Diagram, RepError> {
    let dec = epsilon_decomposition(rep)?;
    minimal_diagram_in(&dec, &rep.image_of_word(x)?)
}

/// As `minimal_diagram`, reusing a decomposition and an already evaluated image.
pub fn minimal_diagram_in(
    dec: &EigenDecomposition,
    x: &RationalMatrix,
) -> Result<Diagram, RepError> {
    let a = dec.in_adapted_basis(x);
    let vertices: BTreeSet<Subset> = dec.support().collect();
    let edges = vertices
        .iter()
        .flat_map(|&i| vertices.iter().map(move |&j| (i, j)))
        .filter(|&(i, j)| dec.block_nonzero(&a, i, j))
        .collect();
    Ok(Diagram {
        rank: dec.rank(),
        vertices,
        edges,
    })
}

/// Relabels every vertex `I` as `perm(I)`.
pub fn diagram_pushforward(d: &Diagram, perm: &Permutation) -> Diagram {
    Diagram {
        rank: d.rank,
        vertices: d.vertices.iter().map(|&v| perm.apply_subset(v)).collect(),
        edges: d
            .edges
            .iter()
            .map(|&(a, b)| (perm.apply_subset(a), perm.apply_subset(b)))
            .collect(),
    }
}

/// Checks that for every component `C` of the diagram, `x` maps `⊕_{I∈C} E_I`
/// onto itself.
pub fn components_invariant(
    dec: &EigenDecomposition,
    x: &RationalMatrix,
    d: &Diagram,
) -> Result<bool, RepError> {
    for comp in d.components() {
        let sum = dec.sum_of(&comp);
        if sum.image(x)? != sum {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(xs: &[usize]) -> Subset {
        Subset::from_indices(xs.iter().copied())
    }

    fn word(t: &str) -> GeneratorWord {
        GeneratorWord::parse(t).unwrap()
    }

    #[test]
    fn rho21_on_standard() {
        let d = minimal_diagram(&Representation::standard(3), &word("r21")).unwrap();
        assert_eq!(d.vertices().len(), 3);
        let expected: BTreeSet<_> = [
            (s(&[1]), s(&[1])),
            (s(&[2]), s(&[2])),
            (s(&[3]), s(&[3])),
            (s(&[2]), s(&[1])),
        ]
        .into();
        assert_eq!(d.edges(), &expected);
        let text = d.render_text();
        assert!(text.contains("V1: {1} {2} {3}"));
        assert!(text.contains("{2} -> {1}"));
    }

    #[test]
    fn rho21_on_det() {
        let d = minimal_diagram(&Representation::det(3), &word("r21")).unwrap();
        assert_eq!(
            d.vertices().iter().copied().collect::<Vec<_>>(),
            vec![s(&[1, 2, 3])]
        );
        assert!(d.has_edge(s(&[1, 2, 3]), s(&[1, 2, 3])));
    }

    #[test]
    fn pushforward_matches_conjugate() {
        let std = Representation::standard(3);
        let d21 = minimal_diagram(&std, &word("r21")).unwrap();
        let d31 = minimal_diagram(&std, &word("r31")).unwrap();
        let p = Permutation::transposition(3, 2, 3);
        assert_eq!(diagram_pushforward(&d21, &p), d31);
        assert_eq!(diagram_pushforward(&d21, &Permutation::identity(3)), d21);
        let q = Permutation::from_images(vec![2, 3, 1]).unwrap();
        assert_eq!(
            diagram_pushforward(&diagram_pushforward(&d21, &q), &q.inverse()),
            d21
        );
    }

    #[test]
    fn tails_and_undirected_edges() {
        let vs: BTreeSet<_> = [s(&[1]), s(&[2]), s(&[3])].into();
        let es: BTreeSet<_> = [
            (s(&[1]), s(&[1])),
            (s(&[2]), s(&[1])),
            (s(&[2]), s(&[3])),
            (s(&[3]), s(&[2])),
            (s(&[3]), s(&[3])),
        ]
        .into();
        let text = Diagram::new(3, vs, es).render_text();
        assert!(text.contains("{2} >-> {1}"));
        assert!(text.contains("{2} >- {3}"));
        assert!(!text.contains("{1} -> {1}"));
    }

    #[test]
    fn json_round_trip() {
        let d = minimal_diagram(
            &Representation::builtin("standard+det", 3).unwrap(),
            &word("l21"),
        )
        .unwrap();
        let v = d.to_json();
        assert_eq!(v["adjacency"]["2"], json!([1, 2]));
        assert_eq!(Diagram::from_json(&v).unwrap(), d);
    }
}
