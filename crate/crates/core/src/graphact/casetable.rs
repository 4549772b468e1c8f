use serde::Serialize;

use super::GraphError;

/// One admissible valence profile: `counts[k]` vertices of valence `k + 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseRow {
    pub case: usize,
    pub counts: Vec<u32>,
    pub edges: u32,
    pub rank: u32,
}

impl CaseRow {
    pub fn count(&self, valence: usize) -> u32 {
        self.counts.get(valence - 2).copied().unwrap_or(0)
    }

    pub fn vertices(&self) -> u32 {
        self.counts.iter().sum()
    }
}

/// Weight of a valence-`i` vertex in `2(R - 1) ≥ 2 v_2 + Σ_{i≥3} (i - 2) v_i`.
fn weight(valence: u32) -> u32 {
    if valence == 2 {
        2
    } else {
        valence - 2
    }
}

/// Valence profiles of edge-transitive quotients of rank at most `rank_bound`.
///
/// At most two valences occur; with two, `i v_i = j v_j`; with a single odd
/// valence its count is even. Rows are sorted by descending `(v_2, v_3, ...)`
/// and numbered from 1. The reduced table keeps rows with at least 3 edges,
/// rank at least 2 and edge count dividing `group_order`, under their
/// original numbers.
pub fn enumerate_case_table(
    rank_bound: u32,
    group_order: u32,
    reduced: bool,
) -> Result<Vec<CaseRow>, GraphError> {
    if rank_bound < 1 {
        return Err(GraphError::InvalidParameter(
            "rank bound must be at least 1".into(),
        ));
    }
    let budget = 2 * rank_bound - 2;
    let max_valence = (2 * rank_bound).max(2);
    let width = (max_valence - 1) as usize;
    let mut profiles: Vec<Vec<u32>> = Vec::new();
    for i in 2..=max_valence {
        for ci in 1..=budget / weight(i) {
            if i % 2 == 1 && ci % 2 == 1 {
                continue;
            }
            let mut v = vec![0; width];
            v[(i - 2) as usize] = ci;
            profiles.push(v);
        }
        for j in i + 1..=max_valence {
            for ci in 1..=budget / weight(i) {
                if (i * ci) % j != 0 {
                    continue;
                }
                let cj = i * ci / j;
                if cj >= 1 && weight(i) * ci + weight(j) * cj <= budget {
                    let mut v = vec![0; width];
                    v[(i - 2) as usize] = ci;
                    v[(j - 2) as usize] = cj;
                    profiles.push(v);
                }
            }
        }
    }
    profiles.sort_by(|a, b| b.cmp(a));
    let rows = profiles.into_iter().enumerate().map(|(k, counts)| {
        let ends: u32 = counts
            .iter()
            .enumerate()
            .map(|(x, c)| (x as u32 + 2) * c)
            .sum();
        let edges = ends / 2;
        let vertices: u32 = counts.iter().sum();
        CaseRow {
            case: k + 1,
            counts,
            edges,
            rank: edges + 1 - vertices,
        }
    });
    Ok(rows
        .filter(|r| {
            !reduced || (r.edges >= 3 && r.rank >= 2 && group_order.is_multiple_of(r.edges))
        })
        .collect())
}

pub fn case_table_csv(rows: &[CaseRow], rank_bound: u32) -> String {
    let max_valence = (2 * rank_bound).max(2);
    let mut header = vec!["case".to_string()];
    header.extend((2..=max_valence).map(|i| format!("v{i}")));
    header.extend(["edges".to_string(), "rank".to_string()]);
    let mut out = header.join(",") + "\n";
    for r in rows {
        let mut cells = vec![r.case.to_string()];
        cells.extend((2..=max_valence as usize).map(|i| r.count(i).to_string()));
        cells.extend([r.edges.to_string(), r.rank.to_string()]);
        out += &(cells.join(",") + "\n");
    }
    out
}

pub fn case_table_json(rows: &[CaseRow]) -> serde_json::Value {
    serde_json::to_value(rows).expect("case rows serialize")
}
