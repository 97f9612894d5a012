//! Edge domination: predicates, the exact edge domination number, and the
//! vertex domination number used to cross-check it through line graphs.

use itertools::Itertools;

use crate::error::Result;
use crate::graph::{EdgeSet, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationResult {
    pub gamma_prime: usize,
    pub witness: EdgeSet,
}

/// Edges dominated by `d`: the members of `d` together with their neighbours.
pub(crate) fn dominated(g: &Graph, d: &EdgeSet) -> EdgeSet {
    let mut out = d.clone();
    for e in d.iter() {
        out.union_with(g.neighborhood_set(e));
    }
    out
}

/// Unchecked variant for callers that already validated `d` against `g`.
pub(crate) fn dominates(g: &Graph, d: &EdgeSet) -> bool {
    dominated(g, d).len() == g.m()
}

/// Every edge outside `d` shares an endpoint with some edge of `d`. Edges
/// inside `d` need no dominator, so `E(G)` always dominates and the empty
/// set dominates only the edgeless graph.
pub fn is_edge_dominating_set(g: &Graph, d: &EdgeSet) -> Result<bool> {
    g.check_set(d)?;
    Ok(dominates(g, d))
}

pub fn is_minimal_edge_dominating_set(g: &Graph, d: &EdgeSet) -> Result<bool> {
    if !is_edge_dominating_set(g, d)? {
        return Ok(false);
    }
    Ok(d.iter().all(|e| {
        let mut smaller = d.clone();
        smaller.remove(e);
        !dominates(g, &smaller)
    }))
}

/// Any maximal matching dominates every edge, so the greedy one caps γ′.
fn greedy_matching(g: &Graph) -> EdgeSet {
    let mut covered = vec![false; g.n()];
    let mut matching = EdgeSet::empty(g.m());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if !covered[u] && !covered[v] {
            covered[u] = true;
            covered[v] = true;
            matching.insert(e);
        }
    }
    matching
}

/// Exact γ′(G). Subsets are tried by increasing size in lexicographic
/// order, so the witness is the lexicographically least minimum set.
pub fn edge_domination_number(g: &Graph) -> DominationResult {
    let m = g.m();
    if m == 0 {
        return DominationResult {
            gamma_prime: 0,
            witness: EdgeSet::empty(0),
        };
    }
    let upper = greedy_matching(g).len();
    let closed = g.closed_masks();
    for k in 1..=upper {
        for combo in (0..m).combinations(k) {
            let hit = match &closed {
                Some(masks) => {
                    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
                    combo.iter().fold(0u64, |acc, &e| acc | masks[e]) == full
                }
                None => dominates(g, &EdgeSet::from_indices(m, combo.iter().copied()).unwrap()),
            };
            if hit {
                return DominationResult {
                    gamma_prime: k,
                    witness: EdgeSet::from_indices(m, combo).unwrap(),
                };
            }
        }
    }
    unreachable!("a maximal matching of size {upper} is always edge dominating")
}

/// Exact vertex domination number γ(G) by increasing-cardinality search.
pub fn vertex_domination_number(g: &Graph) -> usize {
    let n = g.n();
    let closed: Vec<Vec<bool>> = (0..n)
        .map(|v| {
            let mut row = vec![false; n];
            row[v] = true;
            for &w in g.neighbors(v) {
                row[w] = true;
            }
            row
        })
        .collect();
    for k in 0..=n {
        let found = (0..n)
            .combinations(k)
            .any(|combo| (0..n).all(|u| combo.iter().any(|&v| closed[v][u])));
        if found {
            return k;
        }
    }
    n
}
