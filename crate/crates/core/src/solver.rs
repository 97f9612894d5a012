//! Exact edge coalition number by branch and bound over set partitions.
//!
//! For `k = m, m-1, ...` the solver looks for an ec-partition with exactly
//! `k` blocks, assigning edges in index order to blocks in restricted growth
//! order (existing blocks first, then a fresh one). The first `k` that
//! admits a partition is `EC(G)`, and the partition found is the
//! lexicographically least restricted growth string of that order.
//!
//! Pruning rules:
//! - a block of two or more edges that dominates can never become legal,
//!   since domination is monotone;
//! - a block needs a partner `j` whose final closure, together with its own,
//!   covers `E(G)`; closures only grow by absorbing unassigned edges, so if
//!   even the optimistic closure misses an edge the branch is dead;
//! - the remaining edges must be able to open the blocks still missing.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::coalition::{is_ec_partition, EcCertificate, EdgePartition};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_MAX_EDGES: usize = 16;
pub const MAX_EDGES_ENV: &str = "ECLAB_MAX_EDGES";

/// Bitmask width; no exact or lower-bound search goes beyond it.
const HARD_MAX_EDGES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest edge count accepted by exact search.
    pub max_edges: usize,
    /// Worker threads; 1 means a plain single-threaded search.
    pub jobs: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_edges: DEFAULT_MAX_EDGES,
            jobs: 1,
        }
    }
}

impl SolverConfig {
    /// Default configuration with the edge cap taken from `ECLAB_MAX_EDGES`
    /// when it is set to a valid integer.
    pub fn from_env() -> Self {
        let mut cfg = Self::default();
        if let Some(cap) = std::env::var(MAX_EDGES_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            cfg.max_edges = cap;
        }
        cfg
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProofMode {
    /// Every larger order was refuted by exhaustive search.
    ExhaustedSearch,
    /// The singleton partition works, meeting the upper bound `m`.
    UpperBoundMet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EcResult {
    pub ec: usize,
    pub certificate: EcCertificate,
    pub proof: ProofMode,
}

/// Best ec-partition found by the time-bounded search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundResult {
    pub certificate: EcCertificate,
    /// True when the certificate is provably optimal (it has `m` blocks).
    pub optimal: bool,
}

impl LowerBoundResult {
    pub fn value(&self) -> usize {
        self.certificate.order()
    }
}

pub fn edge_coalition_number(g: &Graph) -> Result<EcResult> {
    edge_coalition_number_with(g, &SolverConfig::default())
}

pub fn edge_coalition_number_with(g: &Graph, cfg: &SolverConfig) -> Result<EcResult> {
    let m = g.m();
    if m == 0 {
        return Err(Error::EmptyGraph);
    }
    let cap = cfg.max_edges.min(HARD_MAX_EDGES);
    if m > cap {
        return Err(Error::BudgetExceeded { m, cap });
    }
    let search = Search::new(g);
    let pool = (cfg.jobs > 1)
        .then(|| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(cfg.jobs)
                .build()
        })
        .transpose()
        .expect("failed to build worker pool");
    for k in (1..=m).rev() {
        let found = match &pool {
            Some(pool) => pool.install(|| search.find_parallel(k, cfg.jobs)),
            None => search.find(k, None),
        };
        if let Found::Yes(rgs) = found {
            let certificate = certify(g, &rgs);
            let proof = if k == m {
                ProofMode::UpperBoundMet
            } else {
                ProofMode::ExhaustedSearch
            };
            return Ok(EcResult {
                ec: k,
                certificate,
                proof,
            });
        }
    }
    unreachable!("every graph with at least one edge has an ec-partition")
}

/// Time-bounded search for large ec-partitions, trying orders `1, 2, ...`
/// until the budget runs out. The result is a valid certificate but, unless
/// flagged optimal, only a lower bound on `EC(G)`.
pub fn ec_lower_bound(g: &Graph, budget: Duration) -> Result<LowerBoundResult> {
    let m = g.m();
    if m == 0 {
        return Err(Error::EmptyGraph);
    }
    if m > HARD_MAX_EDGES {
        return Err(Error::BudgetExceeded {
            m,
            cap: HARD_MAX_EDGES,
        });
    }
    let deadline = Instant::now() + budget;
    let search = Search::new(g);
    let mut best: Option<Vec<u8>> = None;
    // The singleton partition settles the question outright when it works.
    if let Found::Yes(rgs) = search.find(m, Some(deadline)) {
        return Ok(LowerBoundResult {
            certificate: certify(g, &rgs),
            optimal: true,
        });
    }
    for k in 1..m {
        match search.find(k, Some(deadline)) {
            Found::Yes(rgs) => best = Some(rgs),
            Found::No => {}
            Found::Aborted => break,
        }
    }
    let rgs = best.ok_or(Error::TimeBudgetExhausted)?;
    Ok(LowerBoundResult {
        certificate: certify(g, &rgs),
        optimal: false,
    })
}

fn certify(g: &Graph, rgs: &[u8]) -> EcCertificate {
    let labels: Vec<usize> = rgs.iter().map(|&b| b as usize).collect();
    let partition = EdgePartition::from_rgs(g, &labels).expect("search emits valid partitions");
    is_ec_partition(g, &partition).expect("search emits ec-partitions")
}

enum Found {
    Yes(Vec<u8>),
    No,
    Aborted,
}

/// Partial assignment of the first `next` edges.
#[derive(Clone)]
struct State {
    next: usize,
    rgs: Vec<u8>,
    blocks: Vec<u64>,
    closures: Vec<u64>,
}

impl State {
    fn root(m: usize) -> Self {
        State {
            next: 0,
            rgs: Vec::with_capacity(m),
            blocks: Vec::with_capacity(m),
            closures: Vec::with_capacity(m),
        }
    }
}

struct Search {
    m: usize,
    all: u64,
    closed: Vec<u64>,
    /// `suffix[e]` is the union of closed neighbourhoods of edges `e..m`.
    suffix: Vec<u64>,
}

const DEADLINE_STRIDE: u64 = 1 << 12;

struct Budget {
    deadline: Option<Instant>,
    nodes: u64,
    aborted: bool,
}

impl Budget {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if let Some(d) = self.deadline {
            if self.nodes.is_multiple_of(DEADLINE_STRIDE) && Instant::now() >= d {
                self.aborted = true;
            }
        }
        self.aborted
    }
}

impl Search {
    fn new(g: &Graph) -> Self {
        let m = g.m();
        let closed = g
            .closed_masks()
            .expect("edge count checked against mask width");
        let mut suffix = vec![0u64; m + 1];
        for e in (0..m).rev() {
            suffix[e] = suffix[e + 1] | closed[e];
        }
        Search {
            m,
            all: if m == 64 { u64::MAX } else { (1u64 << m) - 1 },
            closed,
            suffix,
        }
    }

    /// Children of `st` in restricted growth order, already pruned.
    fn children(&self, st: &State, k: usize) -> Vec<State> {
        let mut out = Vec::new();
        let e = st.next;
        let left_after = self.m - e - 1;
        let open = st.blocks.len();
        let bit = 1u64 << e;
        if left_after >= k - open {
            for i in 0..open {
                let block = st.blocks[i] | bit;
                let closure = st.closures[i] | self.closed[e];
                if closure == self.all && block.count_ones() > 1 {
                    continue;
                }
                let mut child = st.clone();
                child.next += 1;
                child.rgs.push(i as u8);
                child.blocks[i] = block;
                child.closures[i] = closure;
                if self.partners_possible(&child, k) {
                    out.push(child);
                }
            }
        }
        if open < k && left_after + 1 >= k - open {
            let mut child = st.clone();
            child.next += 1;
            child.rgs.push(open as u8);
            child.blocks.push(bit);
            child.closures.push(self.closed[e]);
            if self.partners_possible(&child, k) {
                out.push(child);
            }
        }
        out
    }

    /// Optimistic partner check: every non-dominating block must still be
    /// able to reach a partner once the unassigned edges are placed.
    fn partners_possible(&self, st: &State, k: usize) -> bool {
        let rest = self.suffix[st.next];
        let can_open = st.blocks.len() < k;
        let closures = &st.closures;
        (0..closures.len()).all(|i| {
            if closures[i] == self.all {
                return true;
            }
            let reach = closures[i] | rest;
            if can_open && reach == self.all {
                return true;
            }
            closures
                .iter()
                .enumerate()
                .any(|(j, &c)| j != i && c != self.all && reach | c == self.all)
        })
    }

    fn dfs(&self, st: &State, k: usize, budget: &mut Budget) -> Option<Vec<u8>> {
        if budget.tick() {
            return None;
        }
        if st.next == self.m {
            // partners_possible is exact once nothing is left to assign.
            return (st.blocks.len() == k).then(|| st.rgs.clone());
        }
        for child in self.children(st, k) {
            if let Some(rgs) = self.dfs(&child, k, budget) {
                return Some(rgs);
            }
            if budget.aborted {
                return None;
            }
        }
        None
    }

    fn find(&self, k: usize, deadline: Option<Instant>) -> Found {
        let mut budget = Budget {
            deadline,
            nodes: 0,
            aborted: false,
        };
        let root = State::root(self.m);
        if !self.partners_possible(&root, k) {
            return Found::No;
        }
        match self.dfs(&root, k, &mut budget) {
            Some(rgs) => Found::Yes(rgs),
            None if budget.aborted => Found::Aborted,
            None => Found::No,
        }
    }

    /// Splits the tree into ordered frontier states and searches them on the
    /// current rayon pool. `find_map_first` keeps the leftmost hit, so the
    /// witness matches the sequential search.
    fn find_parallel(&self, k: usize, jobs: usize) -> Found {
        let mut frontier = vec![State::root(self.m)];
        while frontier.len() < jobs * 16 {
            if frontier.iter().any(|s| s.next == self.m) || frontier.is_empty() {
                break;
            }
            frontier = frontier.iter().flat_map(|s| self.children(s, k)).collect();
        }
        let hit = frontier.par_iter().find_map_first(|st| {
            let mut budget = Budget {
                deadline: None,
                nodes: 0,
                aborted: false,
            };
            self.dfs(st, k, &mut budget)
        });
        match hit {
            Some(rgs) => Found::Yes(rgs),
            None => Found::No,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalition::Justification;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn small_values() {
        let r = edge_coalition_number(&path(6)).unwrap();
        assert_eq!(r.ec, 4);
        assert_eq!(r.proof, ProofMode::ExhaustedSearch);
        r.certificate.verify(&path(6)).unwrap();

        let r = edge_coalition_number(&path(2)).unwrap();
        assert_eq!(r.ec, 1);
        assert_eq!(r.certificate.justification, vec![Justification::FullEdge]);

        let r = edge_coalition_number(&complete(4)).unwrap();
        assert_eq!((r.ec, r.proof), (6, ProofMode::UpperBoundMet));

        let k22 = Graph::new(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(edge_coalition_number(&k22).unwrap().ec, 4);
    }

    #[test]
    fn empty_graph_and_cap() {
        assert_eq!(
            edge_coalition_number(&Graph::empty(3)),
            Err(Error::EmptyGraph)
        );
        let k7 = complete(7);
        assert_eq!(
            edge_coalition_number(&k7),
            Err(Error::BudgetExceeded { m: 21, cap: 16 })
        );
    }

    #[test]
    fn parallel_matches_sequential() {
        let cfg = SolverConfig::default().with_jobs(4);
        for g in [path(8), cycle(7), cycle(9), complete(4)] {
            let a = edge_coalition_number(&g).unwrap();
            let b = edge_coalition_number_with(&g, &cfg).unwrap();
            assert_eq!(a, b, "{g:?}");
        }
    }

    #[test]
    fn lower_bound_mode() {
        let r = ec_lower_bound(&cycle(5), Duration::from_secs(5)).unwrap();
        assert!(r.optimal);
        assert_eq!(r.value(), 5);

        let r = ec_lower_bound(&path(8), Duration::from_secs(5)).unwrap();
        assert!(!r.optimal);
        assert_eq!(r.value(), 5);
        r.certificate.verify(&path(8)).unwrap();
    }
}
