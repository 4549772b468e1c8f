//! Named graphs and the symmetry actions used by the test suites.

use super::action::GroupActionOnGraph;
use super::graph::FiniteGraph;
use super::morphism::{EdgeImage, GraphMorphism};
use super::GraphError;

/// One vertex and `n` loops.
pub fn n_rose(n: usize) -> Result<FiniteGraph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidParameter(
            "a rose needs at least one petal".into(),
        ));
    }
    let mut g = FiniteGraph::new();
    let v = g.add_vertex("v");
    for k in 1..=n {
        g.add_edge(format!("e{k}"), v, v)?;
    }
    Ok(g)
}

/// Two vertices and `n` edges from the first to the second.
pub fn n_cage(n: usize) -> Result<FiniteGraph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidParameter(
            "a cage needs at least one edge".into(),
        ));
    }
    let mut g = FiniteGraph::new();
    let u = g.add_vertex("u");
    let w = g.add_vertex("w");
    for k in 1..=n {
        g.add_edge(format!("e{k}"), u, w)?;
    }
    Ok(g)
}

/// Vertices are 3-bit strings; edges join strings differing in one bit and
/// point from the smaller to the larger.
pub fn cube_skeleton() -> FiniteGraph {
    let mut g = FiniteGraph::new();
    for v in 0..8 {
        g.add_vertex(format!("{v:03b}"));
    }
    for u in 0..8usize {
        for bit in [1, 2, 4] {
            if u & bit == 0 {
                g.add_edge(format!("{u:03b}-{:03b}", u | bit), u, u | bit)
                    .expect("valid vertices");
            }
        }
    }
    g
}

/// The complete graph on four vertices; edges point from lower to higher index.
pub fn tetrahedron_skeleton() -> FiniteGraph {
    let mut g = FiniteGraph::new();
    for v in 0..4 {
        g.add_vertex(format!("t{v}"));
    }
    for i in 0..4 {
        for j in i + 1..4 {
            g.add_edge(format!("t{i}{j}"), i, j)
                .expect("valid vertices");
        }
    }
    g
}

/// `K(3,3)` with edge `3i + j` running from `a_i` to `b_j`.
pub fn k33() -> FiniteGraph {
    let mut g = FiniteGraph::new();
    for i in 0..3 {
        g.add_vertex(format!("a{i}"));
    }
    for j in 0..3 {
        g.add_vertex(format!("b{j}"));
    }
    for i in 0..3 {
        for j in 0..3 {
            g.add_edge(format!("a{i}b{j}"), i, 3 + j)
                .expect("valid vertices");
        }
    }
    g
}

/// Two loops joined by a bar: vertices `u`, `w`; edges `lu`, `bar`, `lw`.
pub fn dumbbell() -> FiniteGraph {
    let mut g = FiniteGraph::new();
    let u = g.add_vertex("u");
    let w = g.add_vertex("w");
    g.add_edge("lu", u, u).expect("valid vertices");
    g.add_edge("bar", u, w).expect("valid vertices");
    g.add_edge("lw", w, w).expect("valid vertices");
    g
}

fn edge(edge: usize, sign: i8) -> EdgeImage {
    EdgeImage::Edge { edge, sign }
}

fn action(g: &FiniteGraph, gens: Vec<(&str, GraphMorphism)>) -> GroupActionOnGraph {
    GroupActionOnGraph::new(
        g,
        gens.into_iter().map(|(n, m)| (n.to_string(), m)).collect(),
    )
    .expect("suite action")
}

/// The swap of the two ends, reversing the bar.
pub fn dumbbell_flip_action() -> GroupActionOnGraph {
    let g = dumbbell();
    let flip = GraphMorphism::new(
        &g,
        &g,
        vec![1, 0],
        vec![edge(2, 1), edge(1, -1), edge(0, 1)],
    )
    .expect("flip");
    action(&g, vec![("flip", flip)])
}

/// All permutations and reversals of the petals, of order `2^n n!`.
pub fn rose_action(n: usize) -> Result<GroupActionOnGraph, GraphError> {
    let g = n_rose(n)?;
    let mut gens = Vec::new();
    gens.push((
        "flip",
        GraphMorphism::new(
            &g,
            &g,
            vec![0],
            (0..n)
                .map(|k| edge(k, if k == 0 { -1 } else { 1 }))
                .collect(),
        )?,
    ));
    if n >= 2 {
        gens.push((
            "shift",
            GraphMorphism::new(
                &g,
                &g,
                vec![0],
                (0..n).map(|k| edge((k + 1) % n, 1)).collect(),
            )?,
        ));
        let swap = (0..n)
            .map(|k| edge(if k < 2 { 1 - k } else { k }, 1))
            .collect();
        gens.push(("swap", GraphMorphism::new(&g, &g, vec![0], swap)?));
    }
    Ok(action(&g, gens))
}

/// End swap together with all permutations of the edges, of order `2 n!`.
pub fn cage_action(n: usize) -> Result<GroupActionOnGraph, GraphError> {
    let g = n_cage(n)?;
    let mut gens = vec![(
        "ends",
        GraphMorphism::new(&g, &g, vec![1, 0], (0..n).map(|k| edge(k, -1)).collect())?,
    )];
    if n >= 2 {
        gens.push((
            "shift",
            GraphMorphism::new(
                &g,
                &g,
                vec![0, 1],
                (0..n).map(|k| edge((k + 1) % n, 1)).collect(),
            )?,
        ));
        let swap = (0..n)
            .map(|k| edge(if k < 2 { 1 - k } else { k }, 1))
            .collect();
        gens.push(("swap", GraphMorphism::new(&g, &g, vec![0, 1], swap)?));
    }
    Ok(action(&g, gens))
}

/// The full symmetry group of the cube, of order 48.
pub fn cube_action() -> GroupActionOnGraph {
    let g = cube_skeleton();
    let by = |f: fn(usize) -> usize| {
        GraphMorphism::from_vertex_map(&g, &g, (0..8).map(f).collect()).expect("cube symmetry")
    };
    let swap01 = by(|v| (v & 4) | ((v & 1) << 1) | ((v & 2) >> 1));
    let rotate = by(|v| ((v << 1) & 7) | (v >> 2));
    let flip0 = by(|v| v ^ 1);
    action(
        &g,
        vec![("swap01", swap01), ("rotate", rotate), ("flip0", flip0)],
    )
}

/// `S_4` permuting the vertices of the tetrahedron.
pub fn tetrahedron_action() -> GroupActionOnGraph {
    let g = tetrahedron_skeleton();
    let swap = GraphMorphism::from_vertex_map(&g, &g, vec![1, 0, 2, 3]).expect("transposition");
    let cycle = GraphMorphism::from_vertex_map(&g, &g, vec![1, 2, 3, 0]).expect("4-cycle");
    action(&g, vec![("swap", swap), ("cycle", cycle)])
}

/// `(S_3 × S_3) ⋊ Z/2`, of order 72.
pub fn k33_action() -> GroupActionOnGraph {
    let g = k33();
    let sides = GraphMorphism::from_vertex_map(&g, &g, vec![3, 4, 5, 0, 1, 2]).expect("side swap");
    let a_swap = GraphMorphism::from_vertex_map(&g, &g, vec![1, 0, 2, 3, 4, 5]).expect("a swap");
    let a_cycle = GraphMorphism::from_vertex_map(&g, &g, vec![1, 2, 0, 3, 4, 5]).expect("a cycle");
    action(
        &g,
        vec![("sides", sides), ("aswap", a_swap), ("acycle", a_cycle)],
    )
}

/// Every named action, for suite-wide invariants.
pub fn suite_actions() -> Vec<(String, GroupActionOnGraph)> {
    let mut out = vec![
        ("dumbbell flip".to_string(), dumbbell_flip_action()),
        ("cube".to_string(), cube_action()),
        ("tetrahedron".to_string(), tetrahedron_action()),
        ("K(3,3)".to_string(), k33_action()),
    ];
    for n in 1..=4 {
        out.push((format!("{n}-rose"), rose_action(n).expect("n >= 1")));
        out.push((
            format!("{n}-rose trivial"),
            GroupActionOnGraph::trivial(&n_rose(n).expect("n >= 1")),
        ));
    }
    for n in [3, 4, 6] {
        out.push((format!("{n}-cage"), cage_action(n).expect("n >= 1")));
    }
    out
}
