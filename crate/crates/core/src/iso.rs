//! Isomorphism testing for small graphs: colour refinement followed by
//! backtracking over colour-respecting vertex maps.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_ISO_CAP: usize = 12;

/// Hard limit imposed by the bitset adjacency rows.
const MAX_ISO_VERTICES: usize = 64;

pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    are_isomorphic_capped(g1, g2, DEFAULT_ISO_CAP)
}

pub fn are_isomorphic_capped(g1: &Graph, g2: &Graph, cap: usize) -> Result<bool> {
    let cap = cap.min(MAX_ISO_VERTICES);
    for g in [g1, g2] {
        if g.n() > cap {
            return Err(Error::SizeLimitExceeded { n: g.n(), cap });
        }
    }
    if g1.n() != g2.n() || g1.m() != g2.m() || g1.degree_sequence() != g2.degree_sequence() {
        return Ok(false);
    }
    let Some((c1, c2)) = refine(g1, g2) else {
        return Ok(false);
    };
    let (a1, a2) = (rows(g1), rows(g2));
    let order = search_order(g1, &c1);
    let mut map = vec![usize::MAX; g1.n()];
    let mut used = 0u64;
    Ok(extend(&order, 0, &a1, &a2, &c1, &c2, &mut map, &mut used))
}

fn rows(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |r, &w| r | 1 << w))
        .collect()
}

/// Joint colour refinement of both graphs. Returns `None` as soon as the
/// colour histograms diverge.
fn refine(g1: &Graph, g2: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut c1: Vec<usize> = (0..g1.n()).map(|v| g1.degree(v)).collect();
    let mut c2: Vec<usize> = (0..g2.n()).map(|v| g2.degree(v)).collect();
    let mut classes = 0;
    loop {
        let sig = |g: &Graph, c: &[usize], v: usize| {
            let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| c[w]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let s1: Vec<_> = (0..g1.n()).map(|v| sig(g1, &c1, v)).collect();
        let s2: Vec<_> = (0..g2.n()).map(|v| sig(g2, &c2, v)).collect();
        let mut ids = BTreeMap::new();
        for s in s1.iter().chain(&s2) {
            ids.entry(s.clone()).or_insert(0usize);
        }
        for (i, id) in ids.values_mut().enumerate() {
            *id = i;
        }
        c1 = s1.iter().map(|s| ids[s]).collect();
        c2 = s2.iter().map(|s| ids[s]).collect();

        let mut h1 = c1.clone();
        let mut h2 = c2.clone();
        h1.sort_unstable();
        h2.sort_unstable();
        if h1 != h2 {
            return None;
        }
        if ids.len() == classes {
            return Some((c1, c2));
        }
        classes = ids.len();
    }
}

/// Vertices of `g` ordered so each one has as many already-placed
/// neighbours as possible, breaking ties toward rarer colours.
fn search_order(g: &Graph, colors: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut class_size = BTreeMap::new();
    for &c in colors {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                (
                    links[v],
                    std::cmp::Reverse(class_size[&colors[v]]),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            links[w] += 1;
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    order: &[usize],
    depth: usize,
    a1: &[u64],
    a2: &[u64],
    c1: &[usize],
    c2: &[usize],
    map: &mut [usize],
    used: &mut u64,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..a2.len() {
        if *used & (1 << w) != 0 || c2[w] != c1[v] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            let e1 = a1[v] & (1 << u) != 0;
            let e2 = a2[w] & (1 << map[u]) != 0;
            e1 == e2
        });
        if !consistent {
            continue;
        }
        map[v] = w;
        *used |= 1 << w;
        if extend(order, depth + 1, a1, a2, c1, c2, map, used) {
            return true;
        }
        *used &= !(1 << w);
        map[v] = usize::MAX;
    }
    false
}

/// A cheap isomorphism invariant, used to bucket graphs before exact tests.
pub fn invariant_key(g: &Graph) -> (usize, usize, Vec<(usize, Vec<usize>)>) {
    let mut local: Vec<(usize, Vec<usize>)> = (0..g.n())
        .map(|v| {
            let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nb.sort_unstable();
            (g.degree(v), nb)
        })
        .collect();
    local.sort_unstable();
    (g.n(), g.m(), local)
}
