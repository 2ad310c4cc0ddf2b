use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::first_k_subset;

/// Exact bisplit search refuses graphs above this many vertices.
pub const BISPLIT_CAP: usize = 20;

/// Three stable sets with `y ∪ z` inducing a complete bipartite graph.
/// Both biclique sides are non-empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BisplitPartition {
    pub x: VertexSet,
    pub y: VertexSet,
    pub z: VertexSet,
}

impl BisplitPartition {
    pub fn new(n: usize, x: &[usize], y: &[usize], z: &[usize]) -> Result<Self> {
        Ok(Self {
            x: VertexSet::try_from_slice(n, x)?,
            y: VertexSet::try_from_slice(n, y)?,
            z: VertexSet::try_from_slice(n, z)?,
        })
    }

    pub(crate) fn validate(&self, g: &Graph) -> Result<()> {
        if verify_bisplit_partition(g, self) {
            Ok(())
        } else {
            Err(Error::Input(
                "not a valid bisplit partition of the graph".into(),
            ))
        }
    }
}

/// Checks disjointness and coverage, stability of each part, non-empty
/// biclique sides, and full adjacency between `y` and `z`.
pub fn verify_bisplit_partition(g: &Graph, p: &BisplitPartition) -> bool {
    let n = g.n();
    if [&p.x, &p.y, &p.z].iter().any(|s| s.universe() != n) {
        return false;
    }
    let disjoint = p.x.is_disjoint(&p.y) && p.x.is_disjoint(&p.z) && p.y.is_disjoint(&p.z);
    disjoint
        && p.x.len() + p.y.len() + p.z.len() == n
        && !p.y.is_empty()
        && !p.z.is_empty()
        && g.is_stable_on(&p.x)
        && g.is_stable_on(&p.y)
        && g.is_stable_on(&p.z)
        && p.y.iter().all(|v| g.degree_in(v, &p.z) == p.z.len())
}

/// Splits `rest` into the two sides of a complete bipartite graph, or `None`.
fn biclique_sides(g: &Graph, rest: &VertexSet) -> Option<(VertexSet, VertexSet)> {
    let r = rest.first()?;
    let other = g.neighbors_in(r, rest);
    if other.is_empty() {
        return None;
    }
    let mine = rest.difference(&other);
    let ok = mine.iter().all(|v| g.neighbors_in(v, rest) == other)
        && other.iter().all(|v| g.neighbors_in(v, rest) == mine);
    ok.then_some((mine, other))
}

/// Every valid bisplit partition, in a fixed order: larger `x` first, then
/// lexicographic `x`; for each biclique the smaller side (ties: the side with
/// the smallest vertex) is offered as `y` first, then the swapped orientation.
pub fn bisplit_partitions(g: &Graph) -> Result<Vec<BisplitPartition>> {
    let n = g.n();
    if n > BISPLIT_CAP {
        return Err(Error::SizeLimit {
            what: "bisplit recognition (supply a declared partition instead)",
            n,
            cap: BISPLIT_CAP,
        });
    }
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        first_k_subset(n, k, |mask| {
            let x = VertexSet::from_mask(n, mask);
            if !g.is_stable_on(&x) {
                return false;
            }
            if let Some((a, b)) = biclique_sides(g, &x.complement()) {
                let (y, z) = if b.len() < a.len() { (b, a) } else { (a, b) };
                out.push(BisplitPartition {
                    x: x.clone(),
                    y: y.clone(),
                    z: z.clone(),
                });
                out.push(BisplitPartition { x, y: z, z: y });
            }
            false
        });
    }
    Ok(out)
}

/// Exact search for a bisplit partition (n ≤ [`BISPLIT_CAP`]).
pub fn recognize_bisplit(g: &Graph) -> Result<Option<BisplitPartition>> {
    let n = g.n();
    if n > BISPLIT_CAP {
        return Err(Error::SizeLimit {
            what: "bisplit recognition (supply a declared partition instead)",
            n,
            cap: BISPLIT_CAP,
        });
    }
    let mut found = None;
    for k in (0..=n).rev() {
        first_k_subset(n, k, |mask| {
            let x = VertexSet::from_mask(n, mask);
            if !g.is_stable_on(&x) {
                return false;
            }
            if let Some((a, b)) = biclique_sides(g, &x.complement()) {
                let (y, z) = if b.len() < a.len() { (b, a) } else { (a, b) };
                found = Some(BisplitPartition { x, y, z });
                return true;
            }
            false
        });
        if found.is_some() {
            break;
        }
    }
    Ok(found)
}

/// The chordal-bisplit characterization on a declared partition:
/// the biclique is a star with the single `y` vertex as centre, every
/// `x` of degree at least two is adjacent to it, and `z ∪ x` induces a forest.
pub fn check_chordal_bisplit(g: &Graph, p: &BisplitPartition) -> Result<bool> {
    if !verify_bisplit_partition(g, p) {
        return Err(Error::Precondition(
            "check_chordal_bisplit needs a valid bisplit partition".into(),
        ));
    }
    if p.y.len() != 1 {
        return Ok(false);
    }
    let y1 = p.y.first().expect("one vertex");
    let hubbed = p.x.iter().all(|x| g.degree(x) < 2 || g.has_edge(x, y1));
    Ok(hubbed && g.is_forest_on(&p.x.union(&p.z)))
}

/// A partition witnessing chordal-bisplit membership, searched over every
/// bisplit partition (n ≤ [`BISPLIT_CAP`]).
pub fn recognize_chordal_bisplit(g: &Graph) -> Result<Option<BisplitPartition>> {
    for p in bisplit_partitions(g)? {
        if check_chordal_bisplit(g, &p)? {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::recognition::is_chordal;

    fn part(n: usize, x: &[usize], y: &[usize], z: &[usize]) -> BisplitPartition {
        BisplitPartition::new(n, x, y, z).unwrap()
    }

    /// Brute force over all 3^n labelings.
    fn brute_bisplit(g: &Graph) -> bool {
        let n = g.n();
        let mut lab = vec![0u8; n];
        let total = 3usize.pow(n as u32);
        (0..total).any(|mut code| {
            for l in lab.iter_mut() {
                *l = (code % 3) as u8;
                code /= 3;
            }
            let side = |c| VertexSet::from_iter(n, (0..n).filter(|&v| lab[v] == c));
            verify_bisplit_partition(
                g,
                &BisplitPartition {
                    x: side(0),
                    y: side(1),
                    z: side(2),
                },
            )
        })
    }

    #[test]
    fn c4_partition() {
        // Biclique requirements 0-1, 0-3, 2-1, 2-3 all hold on C4.
        let c4 = cycle(4);
        assert!(verify_bisplit_partition(
            &c4,
            &part(4, &[], &[0, 2], &[1, 3])
        ));
        assert!(!verify_bisplit_partition(
            &c4,
            &part(4, &[], &[0, 1], &[2, 3])
        ));
    }

    #[test]
    fn star_partition() {
        assert!(verify_bisplit_partition(
            &star(3),
            &part(4, &[1, 2], &[0], &[3])
        ));
    }

    #[test]
    fn p5_recognized() {
        let p5 = path(5);
        assert!(brute_bisplit(&p5));
        let p = recognize_bisplit(&p5).unwrap().unwrap();
        assert!(verify_bisplit_partition(&p5, &p));
        assert_eq!(p.x.to_vec(), vec![0, 4]);
        assert_eq!(p.y.to_vec(), vec![2]);
    }

    #[test]
    fn recognizer_matches_brute_force() {
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for code in 0u32..1 << pairs.len() {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| code >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::new(n, &edges).unwrap();
                let found = recognize_bisplit(&g).unwrap();
                assert_eq!(found.is_some(), brute_bisplit(&g), "{g:?}");
                for p in bisplit_partitions(&g).unwrap() {
                    assert!(verify_bisplit_partition(&g, &p));
                }
            }
        }
    }

    #[test]
    fn size_cap() {
        assert!(matches!(
            recognize_bisplit(&path(21)),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn chordal_bisplit_examples() {
        let k15 = star(5);
        assert!(check_chordal_bisplit(&k15, &part(6, &[], &[0], &[1, 2, 3, 4, 5])).unwrap());
        // K_{2,3}: |Y| = 2.
        let k23 = complete_bipartite(2, 3);
        assert!(!check_chordal_bisplit(&k23, &part(5, &[], &[0, 1], &[2, 3, 4])).unwrap());
        // y1=0, z1=1, x=2 pendant on z1.
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(check_chordal_bisplit(&g, &part(3, &[2], &[0], &[1])).unwrap());
        // add x'=3 on z1 and z2=4 with x adjacent to y1 and z2: x-z1-x'? keep forest check honest
        // y1=0; z1=1, z2=4; x=2 ~ {0,1,4}; x'=3 ~ {0,1,4} closes the cycle 1-2-4-3-1 in Z ∪ X.
        let g = Graph::new(
            5,
            &[
                (0, 1),
                (0, 4),
                (2, 0),
                (2, 1),
                (2, 4),
                (3, 0),
                (3, 1),
                (3, 4),
            ],
        )
        .unwrap();
        let p = part(5, &[2, 3], &[0], &[1, 4]);
        assert!(verify_bisplit_partition(&g, &p));
        assert!(!check_chordal_bisplit(&g, &p).unwrap());
        assert!(!is_chordal(&g));
        let g2 = Graph::new(5, &[(0, 1), (0, 4), (2, 0), (2, 1), (2, 4), (3, 0), (3, 1)]).unwrap();
        assert!(check_chordal_bisplit(&g2, &p).unwrap());
        assert!(is_chordal(&g2));
    }

    #[test]
    fn chordal_bisplit_precondition() {
        let g = path(3);
        let bad = part(3, &[0, 1], &[2], &[]);
        assert!(matches!(
            check_chordal_bisplit(&g, &bad),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn x_vertex_of_degree_two_must_touch_hub() {
        // y1=0, z1=1, z2=2, x=3 ~ {1,2} not adjacent to y1.
        let g = Graph::new(4, &[(0, 1), (0, 2), (3, 1), (3, 2)]).unwrap();
        let p = part(4, &[3], &[0], &[1, 2]);
        assert!(!check_chordal_bisplit(&g, &p).unwrap());
    }
}
