//! Edge coalitions, ec-partitions and their certificates, and edge
//! coalition graphs.
//!
//! Two disjoint edge sets form an edge coalition when neither dominates on
//! its own but their union does. An ec-partition is a partition of `E(G)`
//! in which every block is either a single full edge (a one-edge dominating
//! set) or a non-dominating block with a coalition partner among the other
//! blocks. A dominating block with two or more edges is never allowed.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::domination::{dominates, is_edge_dominating_set};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};
use crate::iso::are_isomorphic_capped;

/// An ordered list of disjoint nonempty blocks covering every edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePartition {
    m: usize,
    blocks: Vec<EdgeSet>,
}

impl EdgePartition {
    pub fn new(g: &Graph, blocks: Vec<EdgeSet>) -> Result<Self> {
        let m = g.m();
        if m == 0 {
            return Err(Error::InvalidPartition("graph has no edges".into()));
        }
        let mut seen = EdgeSet::empty(m);
        for (i, b) in blocks.iter().enumerate() {
            g.check_set(b)?;
            if b.is_empty() {
                return Err(Error::InvalidPartition(format!("block {i} is empty")));
            }
            if let Some(e) = b.intersection(&seen).iter().next() {
                return Err(Error::InvalidPartition(format!(
                    "edge {e} appears in more than one block"
                )));
            }
            seen.union_with(b);
        }
        if let Some(e) = EdgeSet::full(m).difference(&seen).iter().next() {
            return Err(Error::InvalidPartition(format!("edge {e} is in no block")));
        }
        Ok(EdgePartition { m, blocks })
    }

    /// Builds a partition from lists of edge indices.
    pub fn from_indices(g: &Graph, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut sets = Vec::with_capacity(blocks.len());
        for (i, b) in blocks.iter().enumerate() {
            let mut s = EdgeSet::empty(g.m());
            for &e in b {
                if e >= g.m() {
                    return Err(Error::InvalidPartition(format!(
                        "block {i} names edge {e}, but the graph has {} edges",
                        g.m()
                    )));
                }
                if !s.insert(e) {
                    return Err(Error::InvalidPartition(format!(
                        "edge {e} repeated in block {i}"
                    )));
                }
            }
            sets.push(s);
        }
        Self::new(g, sets)
    }

    /// The partition of `E(G)` into `m` one-edge blocks, in edge order.
    pub fn singleton(g: &Graph) -> Result<Self> {
        let blocks = (0..g.m())
            .map(|e| EdgeSet::singleton(g.m(), e))
            .collect::<Result<Vec<_>>>()?;
        Self::new(g, blocks)
    }

    /// Builds a partition from a restricted growth string: edge `e` goes to
    /// block `rgs[e]`.
    pub fn from_rgs(g: &Graph, rgs: &[usize]) -> Result<Self> {
        if rgs.len() != g.m() {
            return Err(Error::InvalidPartition(format!(
                "labelling covers {} edges, graph has {}",
                rgs.len(),
                g.m()
            )));
        }
        let k = rgs.iter().max().map_or(0, |&x| x + 1);
        let mut blocks = vec![EdgeSet::empty(g.m()); k];
        for (e, &b) in rgs.iter().enumerate() {
            blocks[b].insert(e);
        }
        Self::new(g, blocks)
    }

    pub fn blocks(&self) -> &[EdgeSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn universe(&self) -> usize {
        self.m
    }

    /// Block label of every edge.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.m];
        for (i, b) in self.blocks.iter().enumerate() {
            for e in b.iter() {
                labels[e] = i;
            }
        }
        labels
    }

    pub fn to_index_lists(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(EdgeSet::to_vec).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Justification {
    /// A one-edge block whose edge is a full edge.
    FullEdge,
    /// A non-dominating block forming an edge coalition with block `with`.
    Partner { with: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectionReason {
    NonSingletonDominating,
    NoPartnerFound,
}

/// Why a partition is not an ec-partition: the first offending block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rejection {
    pub block: usize,
    pub reason: RejectionReason,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.reason {
            RejectionReason::NonSingletonDominating => write!(
                f,
                "block {} is an edge dominating set with more than one edge",
                self.block
            ),
            RejectionReason::NoPartnerFound => write!(f, "block {} has no partner", self.block),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EcCertificate {
    pub partition: EdgePartition,
    pub justification: Vec<Justification>,
}

impl EcCertificate {
    pub fn order(&self) -> usize {
        self.partition.len()
    }

    /// Re-checks every justification from scratch.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let blocks = self.partition.blocks();
        if self.partition.universe() != g.m() {
            return Err(Error::GraphMismatch {
                expected: g.m(),
                found: self.partition.universe(),
            });
        }
        if self.justification.len() != blocks.len() {
            return Err(Error::InvalidPartition(format!(
                "{} justifications for {} blocks",
                self.justification.len(),
                blocks.len()
            )));
        }
        let reject = |block, reason| Err(Error::NotAnEcPartition(Rejection { block, reason }));
        for (i, (b, j)) in blocks.iter().zip(&self.justification).enumerate() {
            let ok = match *j {
                Justification::FullEdge => b.len() == 1 && is_edge_dominating_set(g, b)?,
                Justification::Partner { with } => {
                    with != i && with < blocks.len() && forms_edge_coalition(g, b, &blocks[with])?
                }
            };
            if !ok {
                let reason = if b.len() > 1 && is_edge_dominating_set(g, b)? {
                    RejectionReason::NonSingletonDominating
                } else {
                    RejectionReason::NoPartnerFound
                };
                return reject(i, reason);
            }
        }
        Ok(())
    }
}

/// Disjoint, each non-dominating, union dominating.
pub fn forms_edge_coalition(g: &Graph, a: &EdgeSet, b: &EdgeSet) -> Result<bool> {
    g.check_set(a)?;
    g.check_set(b)?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(a.is_disjoint(b) && !dominates(g, a) && !dominates(g, b) && dominates(g, &a.union(b)))
}

/// Checks the ec-partition conditions block by block and returns a
/// certificate naming, for each block, either the full-edge clause or its
/// lowest-indexed coalition partner.
pub fn is_ec_partition(g: &Graph, p: &EdgePartition) -> Result<EcCertificate> {
    if p.universe() != g.m() {
        return Err(Error::GraphMismatch {
            expected: g.m(),
            found: p.universe(),
        });
    }
    let blocks = p.blocks();
    let dominating: Vec<bool> = blocks.iter().map(|b| dominates(g, b)).collect();
    let mut justification = Vec::with_capacity(blocks.len());
    for (i, b) in blocks.iter().enumerate() {
        if dominating[i] {
            if b.len() == 1 {
                justification.push(Justification::FullEdge);
                continue;
            }
            return Err(Error::NotAnEcPartition(Rejection {
                block: i,
                reason: RejectionReason::NonSingletonDominating,
            }));
        }
        let partner = (0..blocks.len())
            .find(|&j| j != i && !dominating[j] && dominates(g, &b.union(&blocks[j])));
        match partner {
            Some(with) => justification.push(Justification::Partner { with }),
            None => {
                return Err(Error::NotAnEcPartition(Rejection {
                    block: i,
                    reason: RejectionReason::NoPartnerFound,
                }))
            }
        }
    }
    Ok(EcCertificate {
        partition: p.clone(),
        justification,
    })
}

/// The edge coalition graph: one vertex per block, adjacent when the two
/// blocks form an edge coalition.
pub fn coalition_graph(g: &Graph, p: &EdgePartition) -> Result<Graph> {
    is_ec_partition(g, p)?;
    let blocks = p.blocks();
    let mut pairs = Vec::new();
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            if forms_edge_coalition(g, &blocks[i], &blocks[j])? {
                pairs.push((i, j));
            }
        }
    }
    Graph::new(blocks.len(), pairs)
}

pub fn coalition_partner_count(g: &Graph, p: &EdgePartition, i: usize) -> Result<usize> {
    is_ec_partition(g, p)?;
    let blocks = p.blocks();
    if i >= blocks.len() {
        return Err(Error::BlockIndexOutOfRange {
            index: i,
            blocks: blocks.len(),
        });
    }
    let mut count = 0;
    for (j, other) in blocks.iter().enumerate() {
        if j != i && forms_edge_coalition(g, &blocks[i], other)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Whether the singleton partition of `g` is an ec-partition.
pub fn is_singleton_ec_graph(g: &Graph) -> bool {
    EdgePartition::singleton(g).is_ok_and(|p| is_ec_partition(g, &p).is_ok())
}

/// Whether `g` is isomorphic to its own singleton-partition coalition graph.
pub fn is_self_edge_coalition_graph(g: &Graph) -> bool {
    if g.n() != g.m() {
        return false;
    }
    let Ok(p) = EdgePartition::singleton(g) else {
        return false;
    };
    let Ok(ecg) = coalition_graph(g, &p) else {
        return false;
    };
    // Both graphs have m vertices; m is small wherever the singleton check is.
    are_isomorphic_capped(g, &ecg, 64).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    fn set(g: &Graph, e: &[usize]) -> EdgeSet {
        EdgeSet::from_indices(g.m(), e.iter().copied()).unwrap()
    }

    fn p6_example(g: &Graph) -> EdgePartition {
        // {e1,e5}, {e2}, {e3}, {e4} in 1-based path labels.
        EdgePartition::from_indices(g, &[vec![0, 4], vec![1], vec![2], vec![3]]).unwrap()
    }

    #[test]
    fn coalition_examples() {
        let p6 = path(6);
        assert!(forms_edge_coalition(&p6, &set(&p6, &[0, 4]), &set(&p6, &[1])).unwrap());
        assert!(!forms_edge_coalition(&p6, &set(&p6, &[1]), &set(&p6, &[2])).unwrap());
        let a = set(&p6, &[2]);
        assert!(!forms_edge_coalition(&p6, &a, &a).unwrap());
        assert_eq!(
            forms_edge_coalition(&p6, &EdgeSet::empty(5), &a),
            Err(Error::EmptySet)
        );
        assert!(matches!(
            forms_edge_coalition(&p6, &EdgeSet::empty(4), &a),
            Err(Error::GraphMismatch { .. })
        ));
    }

    #[test]
    fn p6_partition_certificate() {
        let p6 = path(6);
        let cert = is_ec_partition(&p6, &p6_example(&p6)).unwrap();
        assert_eq!(
            cert.justification,
            vec![
                Justification::Partner { with: 1 },
                Justification::Partner { with: 0 },
                Justification::Partner { with: 0 },
                Justification::Partner { with: 0 },
            ]
        );
        cert.verify(&p6).unwrap();
    }

    #[test]
    fn p6_singleton_partition_rejected_at_middle_edge() {
        let p6 = path(6);
        let err = is_ec_partition(&p6, &EdgePartition::singleton(&p6).unwrap()).unwrap_err();
        let Error::NotAnEcPartition(r) = err else {
            panic!("unexpected error {err:?}");
        };
        assert_eq!(r.block, 2);
        assert_eq!(r.reason, RejectionReason::NoPartnerFound);
        assert_eq!(r.to_string(), "block 2 has no partner");
    }

    #[test]
    fn c5_singleton_partition_accepted() {
        let c5 = cycle(5);
        let cert = is_ec_partition(&c5, &EdgePartition::singleton(&c5).unwrap()).unwrap();
        assert_eq!(cert.order(), 5);
    }

    #[test]
    fn full_edge_clause() {
        // A singleton dominating block is legal only as a full edge.
        let s = star(3);
        let cert = is_ec_partition(&s, &EdgePartition::singleton(&s).unwrap()).unwrap();
        assert!(cert
            .justification
            .iter()
            .all(|j| *j == Justification::FullEdge));

        // A dominating block of two edges is always illegal, even if the rest
        // could pair up.
        let p4 = path(4);
        let p = EdgePartition::from_indices(&p4, &[vec![0, 1], vec![2]]).unwrap();
        let err = is_ec_partition(&p4, &p).unwrap_err();
        assert_eq!(
            err,
            Error::NotAnEcPartition(Rejection {
                block: 0,
                reason: RejectionReason::NonSingletonDominating
            })
        );
    }

    #[test]
    fn full_edge_cannot_be_a_partner() {
        // P4: the middle edge is full; {e0} and {e2} need each other.
        let p4 = path(4);
        let cert = is_ec_partition(&p4, &EdgePartition::singleton(&p4).unwrap()).unwrap();
        assert_eq!(
            cert.justification,
            vec![
                Justification::Partner { with: 2 },
                Justification::FullEdge,
                Justification::Partner { with: 0 },
            ]
        );
    }

    #[test]
    fn tampered_certificate_fails_verification() {
        let p6 = path(6);
        let mut cert = is_ec_partition(&p6, &p6_example(&p6)).unwrap();
        cert.justification[2] = Justification::Partner { with: 1 };
        assert!(matches!(cert.verify(&p6), Err(Error::NotAnEcPartition(_))));
        cert.justification[2] = Justification::FullEdge;
        assert!(cert.verify(&p6).is_err());
    }

    #[test]
    fn invalid_partitions() {
        let p4 = path(4);
        for blocks in [
            vec![vec![0, 1], vec![1, 2]],
            vec![vec![0], vec![2]],
            vec![vec![0, 1, 2], vec![]],
            vec![vec![0, 0], vec![1, 2]],
            vec![vec![0, 1, 2, 3]],
        ] {
            assert!(
                matches!(
                    EdgePartition::from_indices(&p4, &blocks),
                    Err(Error::InvalidPartition(_))
                ),
                "{blocks:?}"
            );
        }
        assert!(EdgePartition::singleton(&Graph::empty(3)).is_err());
    }

    #[test]
    fn rgs_round_trip() {
        let p6 = path(6);
        let p = EdgePartition::from_rgs(&p6, &[0, 1, 2, 3, 0]).unwrap();
        assert_eq!(p, p6_example(&p6));
        assert_eq!(p.labels(), vec![0, 1, 2, 3, 0]);
    }

    #[test]
    fn p6_coalition_graph_is_a_paw() {
        let p6 = path(6);
        let ecg = coalition_graph(&p6, &p6_example(&p6)).unwrap();
        assert_eq!(ecg.edges(), &[(0, 1), (0, 2), (0, 3), (1, 3)]);
        let paw = Graph::new(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        assert!(are_isomorphic(&ecg, &paw).unwrap());
        assert_eq!(
            coalition_partner_count(&p6, &p6_example(&p6), 0).unwrap(),
            3
        );
        assert_eq!(
            coalition_partner_count(&p6, &p6_example(&p6), 4),
            Err(Error::BlockIndexOutOfRange {
                index: 4,
                blocks: 4
            })
        );
    }

    #[test]
    fn coalition_graph_requires_ec_partition() {
        let p6 = path(6);
        let err = coalition_graph(&p6, &EdgePartition::singleton(&p6).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotAnEcPartition(_)));
    }

    #[test]
    fn star_coalition_graph_is_edgeless() {
        let s = star(4);
        let p = EdgePartition::singleton(&s).unwrap();
        let ecg = coalition_graph(&s, &p).unwrap();
        assert_eq!((ecg.n(), ecg.m()), (4, 0));
        assert_eq!(coalition_partner_count(&s, &p, 0).unwrap(), 0);
    }

    #[test]
    fn c5_partner_counts_respect_cap() {
        let c5 = cycle(5);
        let p = EdgePartition::singleton(&c5).unwrap();
        for i in 0..5 {
            assert!(coalition_partner_count(&c5, &p, i).unwrap() <= 3);
        }
    }

    #[test]
    fn singleton_predicates() {
        assert!(is_singleton_ec_graph(&cycle(5)));
        assert!(!is_singleton_ec_graph(&path(6)));
        let k5 = Graph::new(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        assert!(is_singleton_ec_graph(&k5));
        assert!(!is_singleton_ec_graph(&Graph::empty(2)));
    }

    #[test]
    fn self_coalition_graphs() {
        // In C5 two edges dominate exactly when they are non-adjacent, so the
        // coalition graph is the complement of C5, which is again C5.
        let c5 = cycle(5);
        let ecg = coalition_graph(&c5, &EdgePartition::singleton(&c5).unwrap()).unwrap();
        assert!(ecg.edges().iter().all(|&(i, j)| !c5
            .edge_neighborhood(i)
            .unwrap()
            .neighbors
            .contains(j)));
        assert!(is_self_edge_coalition_graph(&c5));
        assert!(!is_self_edge_coalition_graph(&star(4)));
        assert!(!is_self_edge_coalition_graph(&cycle(3)));
    }
}
