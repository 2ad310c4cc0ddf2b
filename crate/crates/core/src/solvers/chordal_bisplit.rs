use serde::{Deserialize, Serialize};

use crate::domination::is_secure_dominating;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::recognition::{check_chordal_bisplit, BisplitPartition};
use crate::solvers::{certify, safeguard, SolveOptions, SolveReport};

/// One occurrence of a drawn structure around the hub `y_1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseWitness {
    pub case: u8,
    /// Case 1: `[z_i, x_p]`; Case 2: `[z_i, z_j, x_k]`; Case 3: `[z_i, z_j, z_k, z_l, x_m]`;
    /// Cases 4 and 5: `[z_i, z_j, z_k, z_l, x_p, x_q, x_r]`.
    pub vertices: Vec<Vertex>,
}

/// Structures found around `y_1` after stripping pendants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubstructureReport {
    pub y1: Vertex,
    /// Vertex set of the reduced graph the patterns were matched in.
    pub reduced: VertexSet,
    /// Which of Cases 1..=5 occur (index 0 is Case 1).
    pub present: [bool; 5],
    /// First witness of every present case, by case number.
    pub witnesses: Vec<CaseWitness>,
    /// X vertices whose removal Cases 1, 4 and 5 propose, ascending.
    pub removal_candidates: Vec<Vertex>,
}

impl SubstructureReport {
    pub fn has(&self, case: u8) -> bool {
        self.present[usize::from(case) - 1]
    }

    pub fn present_cases(&self) -> Vec<u8> {
        (1..=5).filter(|&c| self.has(c)).collect()
    }
}

fn check_pre(g: &Graph, p: &BisplitPartition) -> Result<Vertex> {
    let ok = check_chordal_bisplit(g, p).map_err(|e| Error::Class(e.to_string()))?;
    if !ok {
        return Err(Error::Class(
            "partition fails the chordal bisplit characterization".into(),
        ));
    }
    Ok(p.y.first().expect("|Y| = 1"))
}

/// Pendant Z vertices of the full graph.
fn pendant_z(g: &Graph, p: &BisplitPartition) -> VertexSet {
    p.z.intersection(&g.pendant_vertices())
}

/// Strips pendant Z and pendant X vertices, then the Z vertices left pendant
/// by that, and matches the drawn patterns around `y_1` in what remains.
///
/// Every drawn X vertex must have exactly the drawn neighbourhood inside the
/// reduced graph: `y_1` plus one Z neighbour (Case 1), two (Case 2) or four
/// (Case 3). Case 4 is three such two-Z vertices along a path
/// `z_i x_p z_j x_q z_k x_r z_l`; Case 5 is three two-Z vertices sharing
/// `z_j`, each with a private second Z neighbour.
pub fn detect_y1_substructures(g: &Graph, p: &BisplitPartition) -> Result<SubstructureReport> {
    let y1 = check_pre(g, p)?;
    let n = g.n();
    let pendants = g.pendant_vertices();
    let first_cut = pendant_z(g, p).union(&p.x.intersection(&pendants));
    let g1 = VertexSet::full(n).difference(&first_cut);
    let second_cut = VertexSet::from_iter(
        n,
        g1.iter()
            .filter(|&v| p.z.contains(v) && g.degree_in(v, &g1) == 1),
    );
    let reduced = g1.difference(&second_cut);

    let zs = p.z.intersection(&reduced);
    let hubbed: Vec<(Vertex, Vec<Vertex>)> = if reduced.contains(y1) {
        p.x.intersection(&reduced)
            .iter()
            .filter(|&x| g.has_edge(x, y1))
            .map(|x| (x, g.neighbors_in(x, &zs).to_vec()))
            .collect()
    } else {
        Vec::new()
    };
    let with_z = |k: usize| hubbed.iter().filter(move |(_, z)| z.len() == k);

    let mut present = [false; 5];
    let mut witnesses = Vec::new();
    let mut removal = Vec::new();
    let mut hit = |case: u8, vertices: Vec<Vertex>, present: &mut [bool; 5]| {
        if !present[usize::from(case) - 1] {
            present[usize::from(case) - 1] = true;
            witnesses.push(CaseWitness { case, vertices });
        }
    };

    for (x, z) in with_z(1) {
        hit(1, vec![z[0], *x], &mut present);
        removal.push(*x);
    }
    if let Some((x, z)) = with_z(2).next() {
        hit(2, vec![z[0], z[1], *x], &mut present);
    }
    if let Some((x, z)) = with_z(4).next() {
        hit(3, vec![z[0], z[1], z[2], z[3], *x], &mut present);
    }

    let pairs: Vec<&(Vertex, Vec<Vertex>)> = with_z(2).collect();
    let shared = |a: &[Vertex], b: &[Vertex]| -> Vec<Vertex> {
        a.iter().copied().filter(|v| b.contains(v)).collect()
    };
    for (qi, (xq, zq)) in pairs.iter().map(|e| (&e.0, &e.1)).enumerate() {
        for (pi, (xp, zp)) in pairs.iter().map(|e| (&e.0, &e.1)).enumerate() {
            for (ri, (xr, zr)) in pairs.iter().map(|e| (&e.0, &e.1)).enumerate() {
                if pi == qi || qi == ri || pi >= ri {
                    continue;
                }
                let pq = shared(zp, zq);
                let qr = shared(zq, zr);
                let pr = shared(zp, zr);
                if pq.len() != 1 || qr.len() != 1 {
                    continue;
                }
                let mut four: Vec<Vertex> = zp.iter().chain(zq).chain(zr).copied().collect();
                four.sort_unstable();
                four.dedup();
                let zi = zp.iter().copied().find(|v| *v != pq[0]).unwrap();
                let zl = zr.iter().copied().find(|v| *v != qr[0]).unwrap();
                if pq[0] != qr[0] && pr.is_empty() && four.len() == 4 {
                    // path z_i x_p z_j x_q z_k x_r z_l
                    hit(4, vec![zi, pq[0], qr[0], zl, *xp, *xq, *xr], &mut present);
                    removal.extend([*xp, *xr]);
                } else if pq[0] == qr[0] && pr == pq && four.len() == 4 {
                    // fan: all three share z_j
                    let zk = zq.iter().copied().find(|v| *v != pq[0]).unwrap();
                    hit(5, vec![zi, pq[0], zk, zl, *xp, *xq, *xr], &mut present);
                    removal.extend([*xp, *xq, *xr]);
                }
            }
        }
    }
    witnesses.sort_by_key(|w| w.case);
    removal.sort_unstable();
    removal.dedup();
    Ok(SubstructureReport {
        y1,
        reduced,
        present,
        witnesses,
        removal_candidates: removal,
    })
}

/// Minimum secure domination on a connected chordal bisplit graph.
///
/// Starts from `X ∪ Y`. Pendant Z vertices all join except the
/// lowest-id one. Without pendant Z vertices, a Case 1/4/5 structure lets one
/// proposed X vertex leave, provided the verifier accepts the smaller set.
pub fn solve_chordal_bisplit(
    g: &Graph,
    p: &BisplitPartition,
    opts: SolveOptions,
) -> Result<SolveReport> {
    check_pre(g, p)?;
    if !g.is_connected() {
        return Err(Error::Class(
            "chordal bisplit solver needs a connected graph".into(),
        ));
    }
    let base = p.x.union(&p.y);
    let zp = pendant_z(g, p);
    let report = detect_y1_substructures(g, p)?;

    let (raw, branch) = if let Some(keep_out) = zp.first() {
        let mut s = base.union(&zp);
        s.remove(keep_out);
        (s, "pendant-z")
    } else {
        let removal = report.removal_candidates.iter().find_map(|&x| {
            let mut s = base.clone();
            s.remove(x);
            is_secure_dominating(g, &s).is_some().then_some(s)
        });
        match removal {
            Some(s) => (s, "case-removal"),
            None => (base.clone(), "base"),
        }
    };

    let mut family = vec![base.clone()];
    family.extend(p.x.iter().map(|x| {
        let mut s = base.clone();
        s.remove(x);
        s
    }));
    for z in zp.iter() {
        let mut s = base.union(&zp);
        s.remove(z);
        family.push(s);
    }
    if let Some(z0) = zp.first() {
        let mut with_z = base.union(&zp);
        with_z.remove(z0);
        family.extend(p.x.iter().map(|x| {
            let mut s = with_z.clone();
            s.remove(x);
            s
        }));
    }

    let (chosen, raw_verified, safeguard_applied) = safeguard(g, &raw, family);
    let (set, certified) = certify(g, chosen, opts)?;
    Ok(SolveReport {
        set,
        branch_taken: branch.to_string(),
        raw,
        raw_verified,
        safeguard_applied,
        cases_detected: Some(report),
        certified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::oracle::secure_domination_number;

    fn part(n: usize, x: &[usize], y: &[usize], z: &[usize]) -> BisplitPartition {
        BisplitPartition::new(n, x, y, z).unwrap()
    }

    #[test]
    fn star_takes_pendant_branch() {
        for l in 1..=6 {
            let g = star(l);
            let z: Vec<_> = (1..=l).collect();
            let p = part(l + 1, &[], &[0], &z);
            let r = solve_chordal_bisplit(&g, &p, SolveOptions::default()).unwrap();
            assert_eq!(r.branch_taken, "pendant-z");
            let mut expected = vec![0];
            expected.extend(2..=l);
            assert_eq!(r.raw.to_vec(), expected);
            assert!(r.raw_verified);
            assert_eq!(r.size(), l);
            let report = detect_y1_substructures(&g, &p).unwrap();
            assert_eq!(report.present, [false; 5]);
        }
    }

    #[test]
    fn triangle_case_one() {
        // y1 = 0, z1 = 1, x1 = 2
        let g = cycle(3);
        let p = part(3, &[2], &[0], &[1]);
        let report = detect_y1_substructures(&g, &p).unwrap();
        assert_eq!(report.present_cases(), vec![1]);
        assert_eq!(report.witnesses[0].vertices, vec![1, 2]);
        let r = solve_chordal_bisplit(&g, &p, SolveOptions { certify: true }).unwrap();
        // {y1} alone is secure on K3, so the removal verifies
        assert_eq!(r.branch_taken, "case-removal");
        assert_eq!(r.raw.to_vec(), vec![0]);
        assert_eq!(r.size(), secure_domination_number(&g).unwrap());
        assert!(!r.certified.unwrap().replaced);
    }

    /// y1 = 0, z = 1..=4, x_p = 5 ~ {1,2}, x_q = 6 ~ {2,3}, x_r = 7 ~ {3,4}, all on y1.
    fn case4_graph() -> (Graph, BisplitPartition) {
        let mut edges: Vec<(usize, usize)> = (1..=4).map(|z| (0, z)).collect();
        edges.extend([
            (5, 0),
            (5, 1),
            (5, 2),
            (6, 0),
            (6, 2),
            (6, 3),
            (7, 0),
            (7, 3),
            (7, 4),
        ]);
        (
            Graph::new(8, &edges).unwrap(),
            part(8, &[5, 6, 7], &[0], &[1, 2, 3, 4]),
        )
    }

    #[test]
    fn case_four_verbatim() {
        let (g, p) = case4_graph();
        assert!(check_chordal_bisplit(&g, &p).unwrap());
        let report = detect_y1_substructures(&g, &p).unwrap();
        assert!(report.has(4));
        assert!(report.has(2));
        assert!(!report.has(5));
        let w = report.witnesses.iter().find(|w| w.case == 4).unwrap();
        assert_eq!(w.vertices, vec![1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(report.removal_candidates, vec![5, 7]);
    }

    #[test]
    fn case_five_verbatim() {
        // x_p = 5 ~ {1,2}, x_q = 6 ~ {2,3}, x_r = 7 ~ {2,4}
        let mut edges: Vec<(usize, usize)> = (1..=4).map(|z| (0, z)).collect();
        edges.extend([
            (5, 0),
            (5, 1),
            (5, 2),
            (6, 0),
            (6, 2),
            (6, 3),
            (7, 0),
            (7, 2),
            (7, 4),
        ]);
        let g = Graph::new(8, &edges).unwrap();
        let p = part(8, &[5, 6, 7], &[0], &[1, 2, 3, 4]);
        let report = detect_y1_substructures(&g, &p).unwrap();
        assert!(report.has(5));
        assert!(!report.has(4));
        assert_eq!(report.removal_candidates, vec![5, 6, 7]);
    }

    #[test]
    fn case_three() {
        let mut edges: Vec<(usize, usize)> = (1..=4).map(|z| (0, z)).collect();
        edges.extend((0..=4).map(|v| (5, v)));
        let g = Graph::new(6, &edges).unwrap();
        let p = part(6, &[5], &[0], &[1, 2, 3, 4]);
        let report = detect_y1_substructures(&g, &p).unwrap();
        assert_eq!(report.present_cases(), vec![3]);
        assert!(report.removal_candidates.is_empty());
    }

    /// Six vertices, no pendant Z and no Case 1/4/5: y1 = 0, z = {1,2},
    /// x3 ~ {0,1,2}, x4 ~ {1}, x5 ~ {2}.
    #[test]
    fn base_branch() {
        let g = Graph::new(6, &[(0, 1), (0, 2), (3, 0), (3, 1), (3, 2), (4, 1), (5, 2)]).unwrap();
        let p = part(6, &[3, 4, 5], &[0], &[1, 2]);
        assert!(check_chordal_bisplit(&g, &p).unwrap());
        let report = detect_y1_substructures(&g, &p).unwrap();
        assert!(!report.has(1) && !report.has(4) && !report.has(5));
        let r = solve_chordal_bisplit(&g, &p, SolveOptions { certify: true }).unwrap();
        assert_eq!(r.branch_taken, "base");
        assert_eq!(r.raw.to_vec(), vec![0, 3, 4, 5]);
        assert!(r.raw_verified);
        let gamma_s = secure_domination_number(&g).unwrap();
        assert_eq!(r.size(), gamma_s);
    }

    #[test]
    fn rejects_non_members() {
        let g = complete_bipartite(2, 3);
        let p = part(5, &[], &[0, 1], &[2, 3, 4]);
        assert!(matches!(
            solve_chordal_bisplit(&g, &p, SolveOptions::default()),
            Err(Error::Class(_))
        ));
    }
}
