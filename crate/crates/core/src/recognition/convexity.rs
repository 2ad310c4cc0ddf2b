//! Star and comb convexity witnesses for split graphs.
//!
//! A witness is an auxiliary tree over one side of a split partition. The
//! graph is convex with respect to it when every vertex on the opposite side
//! has a neighbourhood (restricted to the witness side) that induces a
//! connected subtree.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::recognition::SplitPartition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    /// Tree over the clique side; independent vertices are tested.
    K,
    /// Tree over the independent side; clique vertices are tested.
    I,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "kebab-case")]
pub enum WitnessTree {
    Star {
        center: Vertex,
        leaves: Vec<Vertex>,
    },
    /// A spine path with teeth; each tooth hangs off a distinct spine vertex.
    Comb {
        spine: Vec<Vertex>,
        teeth: Vec<(Vertex, Vertex)>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexityWitness {
    pub side: Side,
    pub tree: WitnessTree,
}

impl ConvexityWitness {
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut vs = match &self.tree {
            WitnessTree::Star { center, leaves } => std::iter::once(*center)
                .chain(leaves.iter().copied())
                .collect(),
            WitnessTree::Comb { spine, teeth } => {
                let mut v = spine.clone();
                v.extend(teeth.iter().map(|&(t, _)| t));
                v
            }
        };
        vs.sort_unstable();
        vs
    }

    pub fn tree_edges(&self) -> Vec<(Vertex, Vertex)> {
        match &self.tree {
            WitnessTree::Star { center, leaves } => leaves.iter().map(|&l| (*center, l)).collect(),
            WitnessTree::Comb { spine, teeth } => spine
                .windows(2)
                .map(|w| (w[0], w[1]))
                .chain(teeth.iter().map(|&(t, a)| (a, t)))
                .collect(),
        }
    }

    /// Shape checks: distinct vertices, teeth anchored on distinct spine vertices.
    fn check_shape(&self) -> Result<()> {
        let vs = self.vertices();
        if vs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Input("witness repeats a vertex".into()));
        }
        if let WitnessTree::Comb { spine, teeth } = &self.tree {
            if spine.is_empty() && !teeth.is_empty() {
                return Err(Error::Input("comb teeth need a spine".into()));
            }
            let mut anchors: Vec<_> = teeth.iter().map(|&(_, a)| a).collect();
            anchors.sort_unstable();
            if anchors.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Input("two comb teeth share a spine vertex".into()));
            }
            if anchors.iter().any(|a| !spine.contains(a)) {
                return Err(Error::Input("comb tooth anchored off the spine".into()));
            }
        }
        Ok(())
    }
}

fn side_sets(p: &SplitPartition, side: Side) -> (&VertexSet, &VertexSet) {
    match side {
        Side::K => (&p.clique, &p.independent),
        Side::I => (&p.independent, &p.clique),
    }
}

/// Whether `members` induces a connected subgraph of the witness tree; the
/// empty set counts as connected.
fn connected_in_tree(n: usize, edges: &[(Vertex, Vertex)], members: &VertexSet) -> bool {
    let Some(start) = members.first() else {
        return true;
    };
    let mut seen = VertexSet::from_iter(n, [start]);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &(a, b) in edges {
            let next = if a == u {
                b
            } else if b == u {
                a
            } else {
                continue;
            };
            if members.contains(next) && !seen.contains(next) {
                seen.insert(next);
                stack.push(next);
            }
        }
    }
    seen.len() == members.len()
}

/// Checks convexity of `g` with respect to the witness tree.
pub fn check_pi_convexity(g: &Graph, p: &SplitPartition, w: &ConvexityWitness) -> Result<bool> {
    w.check_shape()?;
    let (tree_side, tested) = side_sets(p, w.side);
    if w.vertices() != tree_side.to_vec() {
        return Err(Error::Input(
            "witness tree does not span exactly the declared side".into(),
        ));
    }
    let edges = w.tree_edges();
    Ok(tested
        .iter()
        .all(|u| connected_in_tree(g.n(), &edges, &g.neighbors_in(u, tree_side))))
}

/// A star witness on `side` rooted at the smallest vertex that lies in every
/// tested neighbourhood with two or more members. Subtrees of a star are the
/// sets containing the root and the singletons.
pub fn find_star_witness(g: &Graph, p: &SplitPartition, side: Side) -> Option<ConvexityWitness> {
    let (tree_side, tested) = side_sets(p, side);
    let mut candidates = tree_side.clone();
    for u in tested.iter() {
        let nb = g.neighbors_in(u, tree_side);
        if nb.len() >= 2 {
            candidates = candidates.intersection(&nb);
        }
    }
    let center = candidates.first()?;
    let leaves = tree_side.iter().filter(|&v| v != center).collect();
    Some(ConvexityWitness {
        side,
        tree: WitnessTree::Star { center, leaves },
    })
}

/// Largest side [`find_comb_witness`] will search.
pub const COMB_SEARCH_CAP: usize = 7;

/// Exhaustive search for a comb witness on `side`: every spine order, spine
/// length and injective tooth placement. Returns the first one found.
pub fn find_comb_witness(
    g: &Graph,
    p: &SplitPartition,
    side: Side,
) -> Result<Option<ConvexityWitness>> {
    let (tree_side, _) = side_sets(p, side);
    let t = tree_side.len();
    if t > COMB_SEARCH_CAP {
        return Err(Error::SizeLimit {
            what: "find_comb_witness",
            n: t,
            cap: COMB_SEARCH_CAP,
        });
    }
    let mut perm = tree_side.to_vec();
    loop {
        for spine_len in t.div_ceil(2).max(1)..=t {
            let spine = &perm[..spine_len];
            let teeth = &perm[spine_len..];
            // teeth stay in order; anchors are an increasing choice of spine slots,
            // and the permutation loop covers every tooth-to-slot matching
            let mut slots: Vec<usize> = (0..teeth.len()).collect();
            loop {
                let w = ConvexityWitness {
                    side,
                    tree: WitnessTree::Comb {
                        spine: spine.to_vec(),
                        teeth: teeth
                            .iter()
                            .zip(&slots)
                            .map(|(&v, &i)| (v, spine[i]))
                            .collect(),
                    },
                };
                if check_pi_convexity(g, p, &w)? {
                    return Ok(Some(w));
                }
                let k = slots.len();
                let mut i = k;
                while i > 0 && slots[i - 1] == spine_len - k + i - 1 {
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
                slots[i - 1] += 1;
                for j in i..k {
                    slots[j] = slots[j - 1] + 1;
                }
            }
        }
        let Some(i) = (1..t).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return Ok(None);
        };
        let j = (i..t)
            .rev()
            .find(|&j| perm[j] > perm[i - 1])
            .expect("exists");
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

/// Adds `v` as a new leaf of a star witness.
pub fn extend_star(w: &ConvexityWitness, v: Vertex) -> Result<ConvexityWitness> {
    match &w.tree {
        WitnessTree::Star { center, leaves } => {
            let mut leaves = leaves.clone();
            leaves.push(v);
            Ok(ConvexityWitness {
                side: w.side,
                tree: WitnessTree::Star {
                    center: *center,
                    leaves,
                },
            })
        }
        WitnessTree::Comb { .. } => Err(Error::Input("extend_star needs a star witness".into())),
    }
}

/// Adds `v` to a comb witness: as a tooth on the last toothless spine vertex
/// if there is one, otherwise as a new spine vertex at the end.
pub fn extend_comb(w: &ConvexityWitness, v: Vertex) -> Result<ConvexityWitness> {
    match &w.tree {
        WitnessTree::Comb { spine, teeth } => {
            let mut spine = spine.clone();
            let mut teeth = teeth.clone();
            let free = spine
                .iter()
                .rev()
                .find(|s| teeth.iter().all(|&(_, a)| a != **s))
                .copied();
            match free {
                Some(anchor) => teeth.push((v, anchor)),
                None => spine.push(v),
            }
            Ok(ConvexityWitness {
                side: w.side,
                tree: WitnessTree::Comb { spine, teeth },
            })
        }
        WitnessTree::Star { .. } => Err(Error::Input("extend_comb needs a comb witness".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// K = {0,1,2}, I = {3,4}; 3 ~ {0,1}, 4 ~ {1,2}.
    fn sample() -> (Graph, SplitPartition) {
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (3, 0), (3, 1), (4, 1), (4, 2)]).unwrap();
        let p = SplitPartition::new(5, &[0, 1, 2], &[3, 4]).unwrap();
        (g, p)
    }

    #[test]
    fn star_on_k() {
        let (g, p) = sample();
        let w = find_star_witness(&g, &p, Side::K).unwrap();
        assert_eq!(
            w.tree,
            WitnessTree::Star {
                center: 1,
                leaves: vec![0, 2]
            }
        );
        assert!(check_pi_convexity(&g, &p, &w).unwrap());
        // rooting at 0 breaks the neighbourhood {1,2}
        let bad = ConvexityWitness {
            side: Side::K,
            tree: WitnessTree::Star {
                center: 0,
                leaves: vec![1, 2],
            },
        };
        assert!(!check_pi_convexity(&g, &p, &bad).unwrap());
    }

    #[test]
    fn complete_split_any_root() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (3, 0), (3, 1), (3, 2)]).unwrap();
        let p = SplitPartition::new(4, &[0, 1, 2], &[3]).unwrap();
        for c in 0..3 {
            let leaves = (0..3).filter(|&v| v != c).collect();
            let w = ConvexityWitness {
                side: Side::K,
                tree: WitnessTree::Star { center: c, leaves },
            };
            assert!(check_pi_convexity(&g, &p, &w).unwrap());
        }
    }

    #[test]
    fn disjoint_neighbourhoods_have_no_star() {
        // K = {0,1,2,3}, I = {4,5}; 4 ~ {0,1}, 5 ~ {2,3}
        let mut edges = vec![(4, 0), (4, 1), (5, 2), (5, 3)];
        edges.extend([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let g = Graph::new(6, &edges).unwrap();
        let p = SplitPartition::new(6, &[0, 1, 2, 3], &[4, 5]).unwrap();
        assert!(find_star_witness(&g, &p, Side::K).is_none());
    }

    #[test]
    fn comb_on_i() {
        // I = {4,5,6,7}; comb spine 4-5 with teeth 6 on 4 and 7 on 5.
        // K vertices see {4,6}, {4,5}, {5,7}: all subtrees.
        let g = Graph::new(
            8,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (0, 4),
                (0, 6),
                (1, 4),
                (1, 5),
                (2, 5),
                (2, 7),
                (3, 0),
                (3, 1),
                (3, 2),
            ],
        )
        .unwrap();
        let p = SplitPartition::new(8, &[0, 1, 2, 3], &[4, 5, 6, 7]).unwrap();
        let w = ConvexityWitness {
            side: Side::I,
            tree: WitnessTree::Comb {
                spine: vec![4, 5],
                teeth: vec![(6, 4), (7, 5)],
            },
        };
        assert!(check_pi_convexity(&g, &p, &w).unwrap());
        let w2 = extend_comb(&w, 8).unwrap();
        assert_eq!(
            w2.tree,
            WitnessTree::Comb {
                spine: vec![4, 5, 8],
                teeth: vec![(6, 4), (7, 5)]
            }
        );
    }

    #[test]
    fn comb_search() {
        let g = Graph::new(
            8,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (0, 4),
                (0, 6),
                (1, 4),
                (1, 5),
                (2, 5),
                (2, 7),
                (3, 0),
                (3, 1),
                (3, 2),
            ],
        )
        .unwrap();
        let p = SplitPartition::new(8, &[0, 1, 2, 3], &[4, 5, 6, 7]).unwrap();
        let w = find_comb_witness(&g, &p, Side::I).unwrap().unwrap();
        assert!(check_pi_convexity(&g, &p, &w).unwrap());
        // each of 0..4 sees {4, 5 + i}: the tree needs 4 with degree four
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for k in 0..4 {
            edges.extend([(k, 4), (k, 5 + k)]);
        }
        let g = Graph::new(9, &edges).unwrap();
        let p = SplitPartition::new(9, &[0, 1, 2, 3], &[4, 5, 6, 7, 8]).unwrap();
        assert!(find_comb_witness(&g, &p, Side::I).unwrap().is_none());
        assert!(find_star_witness(&g, &p, Side::I).is_some());
    }

    #[test]
    fn malformed_witnesses() {
        let (g, p) = sample();
        let short = ConvexityWitness {
            side: Side::K,
            tree: WitnessTree::Star {
                center: 0,
                leaves: vec![1],
            },
        };
        assert!(matches!(
            check_pi_convexity(&g, &p, &short),
            Err(Error::Input(_))
        ));
        let dup = ConvexityWitness {
            side: Side::I,
            tree: WitnessTree::Comb {
                spine: vec![3],
                teeth: vec![(4, 3), (4, 3)],
            },
        };
        assert!(matches!(
            check_pi_convexity(&g, &p, &dup),
            Err(Error::Input(_))
        ));
    }
}
