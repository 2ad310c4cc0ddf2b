use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::{min_secure_dominating_brute, ORACLE_CAP};
use crate::recognition::{verify_chain_partition, ChainPartition};
use crate::solvers::{certify, safeguard, SolveOptions, SolveReport};

/// Minimum secure domination on a connected chain graph.
///
/// The base set is the two X vertices with the largest neighbourhoods and the
/// two Y vertices with the largest neighbourhoods. When two or more X
/// vertices are pendant, all of them except `x_1` (first in the chain order)
/// join; likewise for pendant Y vertices except `y_m` (last in the order).
/// Stars and single edges have no four-vertex base and go to the exact oracle
/// (or the closed form above the oracle cap).
pub fn solve_chain(g: &Graph, p: &ChainPartition, opts: SolveOptions) -> Result<SolveReport> {
    if !verify_chain_partition(g, p) {
        return Err(Error::Input(
            "not a valid chain partition of the graph".into(),
        ));
    }
    let n = g.n();
    let (xs, ys) = (&p.x_order, &p.y_order);

    if xs.len() < 2 || ys.len() < 2 {
        let (set, branch) = if n <= ORACLE_CAP {
            (min_secure_dominating_brute(g)?, "degenerate-oracle")
        } else {
            // connected with one side a singleton: a star K_{1,q}
            let (center, leaves) = if xs.len() == 1 {
                (xs[0], ys)
            } else {
                (ys[0], xs)
            };
            let mut s = VertexSet::from_iter(n, leaves.iter().copied());
            if let Some(&last) = leaves.last() {
                s.remove(last);
            }
            s.insert(center);
            (s, "degenerate-closed-form")
        };
        let (chosen, raw_verified, safeguard_applied) = safeguard(g, &set, []);
        let (set_final, certified) = certify(g, chosen, opts)?;
        return Ok(SolveReport {
            set: set_final,
            branch_taken: branch.into(),
            raw: set,
            raw_verified,
            safeguard_applied,
            cases_detected: None,
            certified,
        });
    }

    let base_members = [xs[xs.len() - 2], xs[xs.len() - 1], ys[0], ys[1]];
    let base = VertexSet::from_iter(n, base_members);
    let x1 = xs[0];
    let y_last = *ys.last().expect("|Y| >= 2");
    let x_extra = (p.x_pendants.len() >= 2)
        .then(|| VertexSet::from_iter(n, p.x_pendants.iter().copied().filter(|&v| v != x1)));
    let y_extra = (p.y_pendants.len() >= 2)
        .then(|| VertexSet::from_iter(n, p.y_pendants.iter().copied().filter(|&v| v != y_last)));

    let mut raw = base.clone();
    let branch = match (&x_extra, &y_extra) {
        (Some(a), Some(b)) => {
            raw = raw.union(a).union(b);
            "x-and-y-pendants"
        }
        (Some(a), None) => {
            raw = raw.union(a);
            "x-pendants"
        }
        (None, Some(b)) => {
            raw = raw.union(b);
            "y-pendants"
        }
        (None, None) => "base",
    };

    // drop one or two of the base vertices
    let mut family = Vec::new();
    for i in 0..4 {
        let mut s = raw.clone();
        s.remove(base_members[i]);
        family.push(s.clone());
        for &b in &base_members[i + 1..] {
            let mut t = s.clone();
            t.remove(b);
            family.push(t);
        }
    }

    let (chosen, raw_verified, safeguard_applied) = safeguard(g, &raw, family);
    let (set, certified) = certify(g, chosen, opts)?;
    Ok(SolveReport {
        set,
        branch_taken: branch.into(),
        raw,
        raw_verified,
        safeguard_applied,
        cases_detected: None,
        certified,
    })
}
