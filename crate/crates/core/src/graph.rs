//! Simple undirected graphs with stable edge indices.
//!
//! Everything edge-level in this crate (domination, coalitions, partitions)
//! talks about edges by their 0-based index in insertion order, so a
//! [`Graph`] never reorders or deduplicates silently.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A set of edge indices drawn from `0..universe`, where `universe` is the
/// size of the graph the set belongs to.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    universe: usize,
    words: Vec<u64>,
}

impl EdgeSet {
    pub fn empty(universe: usize) -> Self {
        EdgeSet {
            universe,
            words: vec![0; universe.div_ceil(WORD)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for e in 0..universe {
            s.insert(e);
        }
        s
    }

    pub fn singleton(universe: usize, e: usize) -> Result<Self> {
        Self::from_indices(universe, [e])
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(
        universe: usize,
        indices: I,
    ) -> Result<Self> {
        let mut s = Self::empty(universe);
        for e in indices {
            if e >= universe {
                return Err(Error::EdgeIndexOutOfRange {
                    index: e,
                    m: universe,
                });
            }
            s.insert(e);
        }
        Ok(s)
    }

    /// Builds a set from the low `universe` bits of `mask`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        debug_assert!(universe <= WORD);
        let mut s = Self::empty(universe);
        if universe > 0 {
            let keep = if universe == WORD {
                u64::MAX
            } else {
                (1u64 << universe) - 1
            };
            s.words[0] = mask & keep;
        }
        s
    }

    /// The set as a single machine word, if the universe fits in one.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, e: usize) -> bool {
        assert!(
            e < self.universe,
            "edge {e} outside universe {}",
            self.universe
        );
        let (w, b) = (e / WORD, e % WORD);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, e: usize) -> bool {
        if e >= self.universe {
            return false;
        }
        let (w, b) = (e / WORD, e % WORD);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    pub fn contains(&self, e: usize) -> bool {
        e < self.universe && self.words[e / WORD] & (1 << (e % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + b)
            })
        })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(
            self.universe, other.universe,
            "edge sets over different graphs"
        );
        EdgeSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    pub(crate) fn union_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// The open neighborhood N(e) of an edge: every other edge sharing an endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeNeighborhood {
    pub center: usize,
    pub neighbors: EdgeSet,
}

impl EdgeNeighborhood {
    pub fn degree(&self) -> usize {
        self.neighbors.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMetrics {
    pub min_degree: usize,
    pub max_degree: usize,
    pub connected: bool,
    pub tree: bool,
    pub unicyclic: bool,
    /// Absent for disconnected graphs.
    pub diameter: Option<usize>,
    pub longest_path_length: usize,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
    neighborhoods: Vec<EdgeSet>,
}

impl Graph {
    /// Builds a graph on `n` vertices; edges keep the order of `pairs`.
    pub fn new<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges = Vec::new();
        let mut seen = HashSet::new();
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::OutOfRangeVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
            edges.push(key);
        }

        let m = edges.len();
        let mut adj = vec![Vec::new(); n];
        let mut incident = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u].push(v);
            adj[v].push(u);
            incident[u].push(i);
            incident[v].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let neighborhoods = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                let mut s = EdgeSet::empty(m);
                for &f in incident[u].iter().chain(&incident[v]) {
                    if f != i {
                        s.insert(f);
                    }
                }
                s
            })
            .collect();

        Ok(Graph {
            n,
            edges,
            adj,
            incident,
            neighborhoods,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, []).expect("edgeless graph is always valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of edge `e`, smaller vertex first.
    pub fn edge(&self, e: usize) -> Result<(usize, usize)> {
        self.edges
            .get(e)
            .copied()
            .ok_or(Error::EdgeIndexOutOfRange {
                index: e,
                m: self.m(),
            })
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub(crate) fn check_edge(&self, e: usize) -> Result<()> {
        if e < self.m() {
            Ok(())
        } else {
            Err(Error::EdgeIndexOutOfRange {
                index: e,
                m: self.m(),
            })
        }
    }

    pub(crate) fn check_set(&self, s: &EdgeSet) -> Result<()> {
        if s.universe() == self.m() {
            Ok(())
        } else {
            Err(Error::GraphMismatch {
                expected: self.m(),
                found: s.universe(),
            })
        }
    }

    pub fn edge_neighborhood(&self, e: usize) -> Result<EdgeNeighborhood> {
        self.check_edge(e)?;
        Ok(EdgeNeighborhood {
            center: e,
            neighbors: self.neighborhoods[e].clone(),
        })
    }

    pub(crate) fn neighborhood_set(&self, e: usize) -> &EdgeSet {
        &self.neighborhoods[e]
    }

    pub fn edge_degree(&self, e: usize) -> Result<usize> {
        self.check_edge(e)?;
        Ok(self.neighborhoods[e].len())
    }

    /// An edge adjacent to every other edge, i.e. a one-edge dominating set.
    pub fn is_full_edge(&self, e: usize) -> Result<bool> {
        Ok(self.edge_degree(e)? + 1 == self.m())
    }

    pub fn full_edges(&self) -> EdgeSet {
        let mut s = EdgeSet::empty(self.m());
        for e in 0..self.m() {
            if self.neighborhoods[e].len() + 1 == self.m() {
                s.insert(e);
            }
        }
        s
    }

    /// Closed neighborhoods `{e} ∪ N(e)` as bitmasks; `None` when m > 64.
    pub(crate) fn closed_masks(&self) -> Option<Vec<u64>> {
        (0..self.m())
            .map(|e| self.neighborhoods[e].to_mask().map(|w| w | (1 << e)))
            .collect()
    }

    pub fn line_graph(&self) -> Graph {
        let mut pairs = Vec::new();
        for (i, nb) in self.neighborhoods.iter().enumerate() {
            pairs.extend(nb.iter().filter(|&j| j > i).map(|j| (i, j)));
        }
        Graph::new(self.m(), pairs).expect("line graph of a simple graph is simple")
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Number of edges on a longest simple path, by exhaustive DFS.
    pub fn longest_path_length(&self) -> usize {
        fn dfs(g: &Graph, u: usize, depth: usize, visited: &mut [bool], best: &mut usize) {
            *best = (*best).max(depth);
            if *best + 1 >= g.n {
                return;
            }
            for &w in &g.adj[u] {
                if !visited[w] {
                    visited[w] = true;
                    dfs(g, w, depth + 1, visited, best);
                    visited[w] = false;
                }
            }
        }
        let mut best = 0;
        let mut visited = vec![false; self.n];
        for s in 0..self.n {
            visited[s] = true;
            dfs(self, s, 0, &mut visited, &mut best);
            visited[s] = false;
            if best + 1 >= self.n {
                break;
            }
        }
        best
    }

    pub fn metrics(&self) -> GraphMetrics {
        let degrees = (0..self.n).map(|v| self.degree(v));
        let min_degree = degrees.clone().min().unwrap_or(0);
        let max_degree = degrees.max().unwrap_or(0);
        let connected = self.is_connected();
        let diameter = connected.then(|| {
            (0..self.n)
                .flat_map(|s| self.distances_from(s))
                .map(|d| d.expect("connected"))
                .max()
                .unwrap_or(0)
        });
        GraphMetrics {
            min_degree,
            max_degree,
            connected,
            tree: connected && self.m() + 1 == self.n,
            unicyclic: connected && self.m() == self.n,
            diameter,
            longest_path_length: self.longest_path_length(),
        }
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`. Edge order is kept.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Parses the edge-list text format: a header line `n m`, then `m` lines
    /// `u v`. Lines starting with `#` and blank lines are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
            let fields: Vec<&str> = l.split_whitespace().collect();
            let bad = |message: String| Error::Parse { line, message };
            if fields.len() != 2 {
                return Err(bad(format!("expected two integers, found {:?}", l)));
            }
            let a = fields[0]
                .parse()
                .map_err(|e| bad(format!("{e}: {:?}", fields[0])))?;
            let b = fields[1]
                .parse()
                .map_err(|e| bad(format!("{e}: {:?}", fields[1])))?;
            Ok((a, b))
        };
        let (line, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            message: "missing header line".into(),
        })?;
        let (n, m) = parse_pair(line, header)?;
        let pairs = lines
            .map(|(line, l)| parse_pair(line, l))
            .collect::<Result<Vec<_>>>()?;
        if pairs.len() != m {
            return Err(Error::Parse {
                line,
                message: format!("header declares {m} edges, found {}", pairs.len()),
            });
        }
        Graph::new(n, pairs)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, pairs).unwrap()
    }

    #[test]
    fn construction() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.m(), 2);
        assert_eq!(p3.edge(0).unwrap(), (0, 1));
        assert_eq!(p3.edge(1).unwrap(), (1, 2));
        assert_eq!(cycle(4).m(), 4);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::new(2, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::new(2, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(Error::OutOfRangeVertex { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn neighborhoods() {
        let p4 = path(4);
        let nb = p4.edge_neighborhood(1).unwrap();
        assert_eq!(nb.neighbors.to_vec(), vec![0, 2]);
        assert_eq!(nb.degree(), 2);

        let k4 = complete(4);
        for e in 0..6 {
            assert_eq!(k4.edge_degree(e).unwrap(), 4);
            assert!(!k4.is_full_edge(e).unwrap());
        }

        let s = star(4);
        for e in 0..4 {
            assert_eq!(s.edge_degree(e).unwrap(), 3);
        }
        assert_eq!(
            p4.edge_neighborhood(3),
            Err(Error::EdgeIndexOutOfRange { index: 3, m: 3 })
        );
    }

    #[test]
    fn full_edges() {
        assert!((0..5).all(|e| star(5).is_full_edge(e).unwrap()));
        assert!(!path(5).is_full_edge(1).unwrap());
        assert!(path(3).is_full_edge(0).unwrap() && path(3).is_full_edge(1).unwrap());
        assert_eq!(path(4).full_edges().to_vec(), vec![1]);
    }

    #[test]
    fn line_graphs() {
        let lp4 = path(4).line_graph();
        assert_eq!((lp4.n(), lp4.m()), (3, 2));
        assert_eq!(lp4.degree_sequence(), vec![1, 1, 2]);

        let lc5 = cycle(5).line_graph();
        assert_eq!((lc5.n(), lc5.m()), (5, 5));
        assert_eq!(lc5.degree_sequence(), vec![2; 5]);

        let ls = star(4).line_graph();
        assert!(ls.is_complete());
        assert_eq!(ls.n(), 4);
    }

    #[test]
    fn metrics() {
        let m = path(6).metrics();
        assert_eq!((m.min_degree, m.max_degree), (1, 2));
        assert!(m.tree && m.connected && !m.unicyclic);
        assert_eq!(m.diameter, Some(5));
        assert_eq!(m.longest_path_length, 5);

        let m = cycle(5).metrics();
        assert_eq!((m.min_degree, m.max_degree), (2, 2));
        assert!(m.unicyclic && !m.tree);
        assert_eq!(m.longest_path_length, 4);
        assert_eq!(m.diameter, Some(2));

        let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let m = two_k2.metrics();
        assert!(!m.connected);
        assert_eq!(m.diameter, None);
        assert_eq!((m.min_degree, m.max_degree), (1, 1));
        assert_eq!(m.longest_path_length, 1);
    }

    #[test]
    fn isolated_vertices_only_affect_order() {
        let g = Graph::new(5, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.metrics().min_degree, 0);
        assert!(!g.is_connected());
        assert!(g.is_full_edge(0).unwrap());
    }

    #[test]
    fn edge_list_round_trip() {
        let text = "# a path\n4 3\n0 1\n\n1 2\n# trailing\n2 3\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g, path(4));
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            Graph::parse_edge_list("3 2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("3 1\n0 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert_eq!(
            Graph::parse_edge_list("2 1\n0 0\n"),
            Err(Error::SelfLoop(0))
        );
    }

    #[test]
    fn edge_set_algebra() {
        let a = EdgeSet::from_indices(70, [0, 3, 65]).unwrap();
        let b = EdgeSet::from_indices(70, [3, 69]).unwrap();
        assert_eq!(a.union(&b).to_vec(), vec![0, 3, 65, 69]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 65]);
        assert!(!a.is_disjoint(&b));
        assert!(EdgeSet::from_indices(70, [3]).unwrap().is_subset(&a));
        assert_eq!(a.len(), 3);
        assert_eq!(
            EdgeSet::from_indices(4, [4]),
            Err(Error::EdgeIndexOutOfRange { index: 4, m: 4 })
        );
        assert_eq!(
            EdgeSet::from_mask(5, 0b111_1111).to_vec(),
            vec![0, 1, 2, 3, 4]
        );
    }
}
