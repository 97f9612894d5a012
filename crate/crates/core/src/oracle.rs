//! Brute-force ground truth and small-graph corpora.
//!
//! Nothing here reuses the domination or coalition code paths: domination
//! is tested through vertex coverage (an edge is dominated by `D` exactly
//! when one of its endpoints is an endpoint of some edge in `D`), and every
//! set partition is scanned without pruning.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{are_isomorphic_capped, invariant_key};

/// Bell(10) = 115975 partitions is the largest scan allowed.
pub const BRUTE_FORCE_MAX_EDGES: usize = 10;

/// Restricted growth strings of a fixed length in lexicographic order.
/// `a[0] = 0` and `a[i] <= 1 + max(a[..i])`.
#[derive(Debug, Clone)]
pub struct RestrictedGrowth {
    a: Vec<usize>,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(len: usize) -> Self {
        RestrictedGrowth {
            a: vec![0; len],
            done: false,
        }
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.a.clone();
        // Advance: bump the rightmost position that may grow, reset the tail.
        let mut i = self.a.len();
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            let prefix_max = self.a[..i].iter().copied().max().unwrap_or(0);
            if self.a[i] <= prefix_max {
                self.a[i] += 1;
                for x in &mut self.a[i + 1..] {
                    *x = 0;
                }
                break;
            }
        }
        Some(out)
    }
}

fn dominates_literal(g: &Graph, d: &[usize]) -> bool {
    let mut touched = vec![false; g.n()];
    for &e in d {
        let (u, v) = g.edges()[e];
        touched[u] = true;
        touched[v] = true;
    }
    g.edges().iter().all(|&(u, v)| touched[u] || touched[v])
}

/// Definition check for the partition `labels` (edge `e` in block
/// `labels[e]`), written directly from the definition.
pub fn is_ec_partition_literal(g: &Graph, labels: &[usize]) -> bool {
    let k = labels.iter().max().map_or(0, |&x| x + 1);
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (e, &b) in labels.iter().enumerate() {
        blocks[b].push(e);
    }
    if blocks.iter().any(Vec::is_empty) || labels.len() != g.m() {
        return false;
    }
    let dom: Vec<bool> = blocks.iter().map(|b| dominates_literal(g, b)).collect();
    (0..k).all(|i| {
        if dom[i] {
            return blocks[i].len() == 1;
        }
        (0..k).any(|j| {
            j != i && !dom[j] && {
                let union: Vec<usize> = blocks[i].iter().chain(&blocks[j]).copied().collect();
                dominates_literal(g, &union)
            }
        })
    })
}

/// `EC(G)` as the largest order over every set partition of `E(G)`.
pub fn brute_force_ec(g: &Graph) -> Result<usize> {
    let m = g.m();
    if m == 0 {
        return Err(Error::EmptyGraph);
    }
    if m > BRUTE_FORCE_MAX_EDGES {
        return Err(Error::TooManyEdges {
            m,
            max: BRUTE_FORCE_MAX_EDGES,
        });
    }
    let best = RestrictedGrowth::new(m)
        .filter(|rgs| is_ec_partition_literal(g, rgs))
        .map(|rgs| rgs.iter().max().unwrap() + 1)
        .max();
    Ok(best.expect("every graph with an edge has an ec-partition"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    All,
    Connected,
    Trees,
    Unicyclic,
}

impl GraphClass {
    pub fn name(self) -> &'static str {
        match self {
            GraphClass::All => "all",
            GraphClass::Connected => "connected",
            GraphClass::Trees => "trees",
            GraphClass::Unicyclic => "unicyclic",
        }
    }

    fn max_vertices(self) -> usize {
        match self {
            GraphClass::All | GraphClass::Connected => 9,
            GraphClass::Trees | GraphClass::Unicyclic => 10,
        }
    }
}

impl std::str::FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(GraphClass::All),
            "connected" => Ok(GraphClass::Connected),
            "trees" | "tree" => Ok(GraphClass::Trees),
            "unicyclic" => Ok(GraphClass::Unicyclic),
            other => Err(Error::InvalidSpec(format!("unknown graph class {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub max_vertices: usize,
    pub classes: Vec<GraphClass>,
    /// Abort with `CorpusBudgetExceeded` past this many graphs per class.
    pub max_graphs: usize,
}

impl CorpusSpec {
    pub fn new(max_vertices: usize, classes: &[GraphClass]) -> Self {
        CorpusSpec {
            max_vertices,
            classes: classes.to_vec(),
            max_graphs: 50_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusGraph {
    pub class: GraphClass,
    /// Position among the class members of the same order.
    pub index: usize,
    pub graph: Graph,
}

impl CorpusGraph {
    /// Export file name, `<class>_<n>_<index>.el`.
    pub fn file_name(&self) -> String {
        format!("{}_{}_{}.el", self.class.name(), self.graph.n(), self.index)
    }
}

/// One representative per isomorphism class, in a fixed order: by class as
/// listed, then by order, then by size, then by discovery.
pub fn enumerate_corpus(spec: &CorpusSpec) -> Result<Vec<CorpusGraph>> {
    let mut out = Vec::new();
    for &class in &spec.classes {
        if spec.max_vertices > class.max_vertices() {
            return Err(Error::InvalidSpec(format!(
                "class {} supports at most {} vertices",
                class.name(),
                class.max_vertices()
            )));
        }
        let mut count = 0;
        let mut trees: Vec<Graph> = vec![Graph::empty(1)];
        for n in 1..=spec.max_vertices {
            if n > 1 {
                trees = grow_trees(&trees);
            }
            let members = match class {
                GraphClass::All => all_graphs(n, spec.max_graphs)?,
                GraphClass::Connected => all_graphs(n, spec.max_graphs)?
                    .into_iter()
                    .filter(Graph::is_connected)
                    .collect(),
                GraphClass::Trees => trees.clone(),
                GraphClass::Unicyclic => close_one_cycle(&trees),
            };
            count += members.len();
            if count > spec.max_graphs {
                return Err(Error::CorpusBudgetExceeded(spec.max_graphs));
            }
            out.extend(
                members
                    .into_iter()
                    .enumerate()
                    .map(|(index, graph)| CorpusGraph {
                        class,
                        index,
                        graph,
                    }),
            );
        }
    }
    Ok(out)
}

type InvariantKey = (usize, usize, Vec<(usize, Vec<usize>)>);

/// Keeps the first graph of every isomorphism class, preserving order.
#[derive(Default)]
struct IsoFilter {
    kept: Vec<Graph>,
    buckets: HashMap<InvariantKey, Vec<usize>>,
}

impl IsoFilter {
    fn offer(&mut self, g: Graph) {
        let bucket = self.buckets.entry(invariant_key(&g)).or_default();
        let seen = bucket.iter().any(|&i| {
            are_isomorphic_capped(&self.kept[i], &g, 64).expect("corpus orders are small")
        });
        if !seen {
            bucket.push(self.kept.len());
            self.kept.push(g);
        }
    }
}

fn with_edge(g: &Graph, u: usize, v: usize) -> Graph {
    let mut edges = g.edges().to_vec();
    edges.push((u, v));
    edges.sort_unstable();
    Graph::new(g.n(), edges).expect("adding a non-edge keeps the graph simple")
}

fn all_graphs(n: usize, budget: usize) -> Result<Vec<Graph>> {
    let mut level = vec![Graph::empty(n)];
    let mut out = level.clone();
    for _ in 0..n * n.saturating_sub(1) / 2 {
        let mut filter = IsoFilter::default();
        for g in &level {
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        filter.offer(with_edge(g, u, v));
                    }
                }
            }
        }
        level = filter.kept;
        out.extend(level.iter().cloned());
        if out.len() > budget {
            return Err(Error::CorpusBudgetExceeded(budget));
        }
    }
    Ok(out)
}

fn grow_trees(smaller: &[Graph]) -> Vec<Graph> {
    let mut filter = IsoFilter::default();
    for t in smaller {
        let n = t.n();
        for v in 0..n {
            let mut edges = t.edges().to_vec();
            edges.push((v, n));
            filter.offer(Graph::new(n + 1, edges).expect("leaf attachment"));
        }
    }
    filter.kept
}

fn close_one_cycle(trees: &[Graph]) -> Vec<Graph> {
    let mut filter = IsoFilter::default();
    for t in trees {
        let n = t.n();
        for u in 0..n {
            for v in u + 1..n {
                if !t.has_edge(u, v) {
                    filter.offer(with_edge(t, u, v));
                }
            }
        }
    }
    filter.kept
}
