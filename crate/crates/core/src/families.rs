//! Named graph families, their known EC values, and recognizers for the
//! graphs whose singleton partition is an ec-partition.

use std::fmt;
use std::str::FromStr;

use crate::coalition::EdgePartition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::are_isomorphic_capped;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    /// `K_{1,n}`: centre 0, leaves `1..=n`.
    Star(usize),
    /// `S(p, q)`: centres 0 and 1, with `p` and `q` leaves respectively.
    DoubleStar(usize, usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            FamilySpec::Path(n) => n >= 2,
            FamilySpec::Cycle(n) => n >= 3,
            FamilySpec::Star(n) => n >= 1,
            FamilySpec::DoubleStar(p, q) => p >= q,
            FamilySpec::Complete(n) => n >= 2,
            FamilySpec::CompleteBipartite(r, s) => r >= 1 && s >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSpec(format!(
                "parameters out of range: {self}"
            )))
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::DoubleStar(p, q) => write!(f, "dstar:{p},{q}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(r, s) => write!(f, "kbip:{r},{s}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `path:6`, `cycle:7`, `star:5`, `dstar:3,2`, `complete:4`, `kbip:2,4`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSpec(format!("cannot parse family {s:?}"));
        let (kind, args) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad())?;
        let spec = match (kind, nums.as_slice()) {
            ("path", &[n]) => FamilySpec::Path(n),
            ("cycle", &[n]) => FamilySpec::Cycle(n),
            ("star", &[n]) => FamilySpec::Star(n),
            ("dstar", &[p, q]) => FamilySpec::DoubleStar(p, q),
            ("complete", &[n]) => FamilySpec::Complete(n),
            ("kbip", &[r, s]) => FamilySpec::CompleteBipartite(r, s),
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Builds the family member with its canonical numbering; edges are listed
/// in lexicographic order of their endpoint pairs.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let (n, mut edges): (usize, Vec<(usize, usize)>) = match *spec {
        FamilySpec::Path(n) => (n, (1..n).map(|i| (i - 1, i)).collect()),
        FamilySpec::Cycle(n) => (n, (0..n).map(|i| (i, (i + 1) % n)).collect()),
        FamilySpec::Star(n) => (n + 1, (1..=n).map(|i| (0, i)).collect()),
        FamilySpec::DoubleStar(p, q) => {
            let mut e = vec![(0, 1)];
            e.extend((2..2 + p).map(|i| (0, i)));
            e.extend((2 + p..2 + p + q).map(|i| (1, i)));
            (p + q + 2, e)
        }
        FamilySpec::Complete(n) => (n, complete_pairs(n)),
        FamilySpec::CompleteBipartite(r, s) => (
            r + s,
            (0..r)
                .flat_map(|u| (r..r + s).map(move |v| (u, v)))
                .collect(),
        ),
    };
    for e in &mut edges {
        if e.0 > e.1 {
            *e = (e.1, e.0);
        }
    }
    edges.sort_unstable();
    Graph::new(n, edges)
}

fn complete_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Known EC value, or `None` where only bounds are known.
pub fn closed_form_ec(spec: &FamilySpec) -> Result<Option<usize>> {
    spec.validate()?;
    Ok(match *spec {
        FamilySpec::Path(n) => Some(match n {
            ..=5 => n - 1,
            6 => 4,
            7..=10 => 5,
            _ => 6,
        }),
        FamilySpec::Cycle(n) => Some(match n {
            ..=6 => n,
            7 => 5,
            _ => 6,
        }),
        FamilySpec::Star(n) => Some(n),
        FamilySpec::DoubleStar(p, q) => Some(p + q + 1),
        FamilySpec::Complete(n) if n <= 5 => Some(n * (n - 1) / 2),
        FamilySpec::Complete(_) | FamilySpec::CompleteBipartite(..) => None,
    })
}

/// Trees of diameter at most 3, or of diameter 4 whose centre has degree 2.
pub fn phi_recognizer(t: &Graph) -> Result<bool> {
    let metrics = t.metrics();
    if !metrics.tree {
        return Err(Error::NotATree);
    }
    if t.m() == 0 {
        return Err(Error::EmptyGraph);
    }
    let diameter = metrics.diameter.expect("trees are connected");
    if diameter <= 3 {
        return Ok(true);
    }
    if diameter > 4 {
        return Ok(false);
    }
    // A tree of diameter 4 has a unique centre: the middle of every longest path.
    let centre = (0..t.n())
        .find(|&v| t.distances_from(v).into_iter().flatten().max() == Some(2))
        .expect("diameter-4 trees have a centre of eccentricity 2");
    Ok(t.degree(centre) == 2)
}

/// What hangs off one cycle vertex of a unicyclic graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Attachment {
    leaves: usize,
    /// Leaf counts of off-cycle neighbours whose other neighbours are all leaves.
    stars: Vec<usize>,
    /// Something deeper than a double star hangs here.
    deep: bool,
}

impl Attachment {
    fn is_bare(&self) -> bool {
        self.leaves == 0 && self.stars.is_empty() && !self.deep
    }

    fn only_leaves(&self) -> bool {
        self.stars.is_empty() && !self.deep
    }
}

/// The unique cycle, in order around the cycle.
fn unique_cycle(g: &Graph) -> Vec<usize> {
    // Peel leaves until only the cycle remains.
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; g.n()];
    let mut stack: Vec<usize> = (0..g.n()).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let start = (0..g.n())
        .find(|&v| alive[v])
        .expect("unicyclic graphs have a cycle");
    let mut cycle = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| alive[w] && w != prev)
            .expect("cycle vertices have two cycle neighbours");
        if next == start {
            break;
        }
        cycle.push(next);
        prev = cur;
        cur = next;
    }
    cycle
}

fn attachment(g: &Graph, v: usize, on_cycle: &[bool]) -> Attachment {
    let mut a = Attachment::default();
    for &w in g.neighbors(v) {
        if on_cycle[w] {
            continue;
        }
        if g.degree(w) == 1 {
            a.leaves += 1;
        } else if g.neighbors(w).iter().all(|&x| x == v || g.degree(x) == 1) {
            a.stars.push(g.degree(w) - 1);
        } else {
            a.deep = true;
        }
    }
    a
}

/// Unicyclic graphs whose singleton partition is an ec-partition: short bare
/// cycles, and triangles, squares and pentagons with restricted pendant trees.
pub fn theta_recognizer(g: &Graph) -> Result<bool> {
    let metrics = g.metrics();
    if !metrics.unicyclic {
        return Err(Error::NotUnicyclic);
    }
    let cycle = unique_cycle(g);
    let mut on_cycle = vec![false; g.n()];
    for &v in &cycle {
        on_cycle[v] = true;
    }
    let att: Vec<Attachment> = cycle.iter().map(|&v| attachment(g, v, &on_cycle)).collect();
    if att.iter().any(|a| a.deep) {
        return Ok(false);
    }
    let loaded: Vec<usize> = (0..att.len()).filter(|&i| !att[i].is_bare()).collect();
    Ok(match cycle.len() {
        len if loaded.is_empty() => len <= 6,
        3 => {
            let with_stars: Vec<usize> = loaded
                .iter()
                .copied()
                .filter(|&i| !att[i].stars.is_empty())
                .collect();
            match with_stars.as_slice() {
                [] => true,
                // The shared centre carries no leaves of its own; the other
                // cycle vertices stay bare.
                [i] => att[*i].stars.len() == 1 && att[*i].leaves == 0 && loaded.len() == 1,
                _ => false,
            }
        }
        4 => loaded.iter().all(|&i| att[i].only_leaves()) && loaded.len() <= 2,
        5 => loaded.len() == 1 && att[loaded[0]].only_leaves(),
        _ => false,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SmallEcClass {
    Ec1,
    Ec2,
    Ec3,
    Other,
}

/// Classifies by isomorphism against `K_2`; `P_3`, `2K_2`; and, for
/// connected graphs, `C_3`, `P_4`, `K_{1,3}`.
pub fn small_ec_classifier(g: &Graph) -> SmallEcClass {
    let iso = |h: &Graph| g.n() == h.n() && are_isomorphic_capped(g, h, 64).unwrap_or(false);
    let build = |spec: FamilySpec| generate(&spec).expect("fixed valid spec");
    let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).expect("fixed graph");
    if iso(&build(FamilySpec::Path(2))) {
        SmallEcClass::Ec1
    } else if iso(&build(FamilySpec::Path(3))) || iso(&two_k2) {
        SmallEcClass::Ec2
    } else if g.n() > 0
        && g.is_connected()
        && [
            FamilySpec::Cycle(3),
            FamilySpec::Path(4),
            FamilySpec::Star(3),
        ]
        .into_iter()
        .any(|s| iso(&build(s)))
    {
        SmallEcClass::Ec3
    } else {
        SmallEcClass::Other
    }
}

/// Hand-encoded members of the catalogue of graphs with `EC = m` beyond
/// trees and unicyclic graphs: `K_4 - e`, `K_4`, and the bowtie.
pub fn psi_catalog() -> Vec<(&'static str, Graph)> {
    let g = |n, e: &[(usize, usize)]| Graph::new(n, e.iter().copied()).expect("fixed graph");
    vec![
        ("H1", g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])),
        ("H2", g(4, &complete_pairs(4))),
        (
            "H58",
            g(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]),
        ),
    ]
}

/// The two graphs isomorphic to their own singleton-partition coalition graph.
pub fn self_coalition_graphs() -> Vec<(&'static str, Graph)> {
    let g = |n, e: &[(usize, usize)]| Graph::new(n, e.iter().copied()).expect("fixed graph");
    vec![
        ("G3", g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])),
        (
            "G7",
            g(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]),
        ),
    ]
}

/// Named partitions `pi1..pi6` of `K_{2,4}` as generated by `kbip:2,4`.
/// Edge labels `a..h` are edge indices `0..7`: `a = (0,2)`, ..., `h = (1,5)`.
pub fn k24_presets() -> Vec<(&'static str, EdgePartition)> {
    let k24 = generate(&FamilySpec::CompleteBipartite(2, 4)).expect("fixed spec");
    let p = |blocks: &[&[usize]]| {
        let blocks: Vec<Vec<usize>> = blocks.iter().map(|b| b.to_vec()).collect();
        EdgePartition::from_indices(&k24, &blocks).expect("fixed preset")
    };
    vec![
        ("pi1", p(&[&[0], &[1], &[2], &[3], &[4], &[5], &[6], &[7]])),
        ("pi2", p(&[&[0, 1], &[2], &[3], &[4], &[5], &[6], &[7]])),
        ("pi3", p(&[&[0, 1, 2], &[3], &[4], &[5], &[6], &[7]])),
        ("pi4", p(&[&[0, 1], &[2], &[3], &[4, 5], &[6], &[7]])),
        ("pi5", p(&[&[0, 1], &[2, 3], &[4, 5], &[6], &[7]])),
        ("pi6", p(&[&[0, 1], &[2, 3], &[4, 5], &[6, 7]])),
    ]
}

pub fn k24_preset(name: &str) -> Option<EdgePartition> {
    k24_presets()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, p)| p)
}

/// Coalition graphs the presets produce, in preset order:
/// `K_{4,4}`, `K_{3,4}`, `K_{2,4}+e`, `K_{3,3}`, `K_{2,3}+e`, `K_4`.
pub fn k24_expected_coalition_graphs() -> Vec<Graph> {
    let kbip = |r, s| generate(&FamilySpec::CompleteBipartite(r, s)).expect("fixed spec");
    // `K_{2,s}+e`: the two vertices of the small part joined.
    let plus_part_edge = |r: usize, s: usize| {
        let mut e = kbip(r, s).edges().to_vec();
        e.push((0, 1));
        Graph::new(r + s, e).expect("fixed graph")
    };
    vec![
        kbip(4, 4),
        kbip(3, 4),
        plus_part_edge(2, 4),
        kbip(3, 3),
        plus_part_edge(2, 3),
        generate(&FamilySpec::Complete(4)).expect("fixed spec"),
    ]
}
