//! Known lower and upper bounds on EC(G), each reported with whether its
//! hypotheses hold for the given graph.

use std::fmt;

use serde::Serialize;

use crate::domination::edge_domination_number;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Lower,
    Upper,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub value: usize,
    pub kind: BoundKind,
    pub source: &'static str,
    pub applicable: bool,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn applicable(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| e.applicable)
    }

    /// Largest applicable lower bound.
    pub fn best_lower(&self) -> usize {
        self.applicable()
            .filter(|e| e.kind == BoundKind::Lower)
            .map(|e| e.value)
            .max()
            .unwrap_or(1)
    }

    /// Smallest applicable upper bound.
    pub fn best_upper(&self) -> usize {
        self.applicable()
            .filter(|e| e.kind == BoundKind::Upper)
            .map(|e| e.value)
            .min()
            .unwrap_or(usize::MAX)
    }

    pub fn get(&self, source: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.source == source)
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<20} {:<6} {:>6}  {:<10} reason",
            "source", "kind", "value", "applies"
        )?;
        for e in &self.entries {
            let kind = match e.kind {
                BoundKind::Lower => "lower",
                BoundKind::Upper => "upper",
            };
            let applies = if e.applicable { "yes" } else { "no" };
            writeln!(
                f,
                "{:<20} {:<6} {:>6}  {:<10} {}",
                e.source, kind, e.value, applies, e.reason
            )?;
        }
        Ok(())
    }
}

/// Part sizes `(r, s)` with `r <= s` when `g` is a complete bipartite graph
/// without isolated vertices.
pub fn complete_bipartite_parts(g: &Graph) -> Option<(usize, usize)> {
    if g.n() < 2 || !g.is_connected() {
        return None;
    }
    let mut side = vec![None; g.n()];
    side[0] = Some(false);
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            match side[w] {
                None => {
                    side[w] = Some(!side[v].unwrap());
                    stack.push(w);
                }
                Some(s) if s == side[v].unwrap() => return None,
                Some(_) => {}
            }
        }
    }
    let a = side.iter().filter(|s| **s == Some(false)).count();
    let b = g.n() - a;
    (g.m() == a * b).then_some((a.min(b), a.max(b)))
}

fn entry(
    value: usize,
    kind: BoundKind,
    source: &'static str,
    applicable: bool,
    reason: String,
) -> BoundEntry {
    BoundEntry {
        value,
        kind,
        source,
        applicable,
        reason,
    }
}

pub fn ec_bounds(g: &Graph) -> Result<BoundReport> {
    let (n, m) = (g.n(), g.m());
    if m == 0 {
        return Err(Error::EmptyGraph);
    }
    use BoundKind::{Lower, Upper};
    let full = g.full_edges().len();
    let isolated = (0..m).filter(|&e| g.edge_degree(e) == Ok(0)).count();
    let min_degree = (0..n).map(|v| g.degree(v)).min().unwrap_or(0);
    let k = (0..n).filter(|&v| g.degree(v) == n - 1).count();
    let complete = g.is_complete();

    let mut entries = vec![
        entry(
            1,
            Lower,
            "trivial",
            true,
            "every graph with an edge has an ec-partition".into(),
        ),
        entry(m, Upper, "size", true, "blocks are nonempty".into()),
        entry(
            n * (n - 1) / 2,
            Upper,
            "pairs",
            true,
            "m <= n(n-1)/2".into(),
        ),
    ];

    let gamma = edge_domination_number(g).gamma_prime;
    let (ok, reason) = if isolated > 0 {
        (false, format!("{isolated} isolated edge(s)"))
    } else if full > 0 {
        (false, format!("{full} full edge(s)"))
    } else {
        (true, format!("gamma' = {gamma}"))
    };
    entries.push(entry(
        (2 * gamma).saturating_sub(1),
        Lower,
        "domination",
        ok,
        reason,
    ));

    let (ok, reason) = if complete {
        (false, "graph is complete".to_string())
    } else {
        (true, format!("k = {k} vertices of degree n-1"))
    };
    let universal = (k * n).saturating_sub(k * (k + 1) / 2);
    entries.push(entry(universal, Lower, "universal_vertices", ok, reason));

    let (ok, reason) = if full > 0 {
        (false, format!("{full} full edge(s)"))
    } else if min_degree == 0 {
        (false, "isolated vertex".to_string())
    } else {
        (true, format!("delta = {min_degree}"))
    };
    entries.push(entry(1 + min_degree, Lower, "min_degree", ok, reason));

    let ok = complete && n >= 4 && n % 2 == 0;
    let reason = if ok {
        format!("K_{n} with n even")
    } else if complete && n % 2 == 0 {
        "needs n >= 4".to_string()
    } else {
        "needs a complete graph of even order".to_string()
    };
    entries.push(entry(
        2 * n.saturating_sub(1),
        Lower,
        "complete_even",
        ok,
        reason,
    ));

    let parts = complete_bipartite_parts(g);
    let (value, ok, reason) = match parts {
        Some((r, s)) if r >= 2 => (2 * s, true, format!("K_{{{r},{s}}}")),
        Some((r, s)) => (2 * s, false, format!("K_{{{r},{s}}} needs r >= 2")),
        None => (0, false, "not complete bipartite".to_string()),
    };
    entries.push(entry(value, Lower, "complete_bipartite", ok, reason));

    Ok(BoundReport { entries })
}
