//! Moving solutions across a reduction.

use serde::{Deserialize, Serialize};

use crate::domination::{defenders, is_dominating, is_secure_dominating, undominated};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::reductions::{Gadget, Origin, Reduction, ReductionKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    /// Source solution to target solution.
    Forward,
    /// Target secure dominating set to source solution.
    Backward,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftOutcome {
    pub set: VertexSet,
    /// Which case of the argument produced the set.
    pub case: String,
}

/// Lifts `s` across `r`. The result is re-verified: a forward lift must be a
/// secure dominating set of the target of size `a·|s| + b`; a backward lift
/// must be a (secure) dominating set of the source of size at most
/// `(|s| - b) / a`. A failed check is a [`Error::ClaimViolation`].
pub fn lift_solution(r: &Reduction, dir: Direction, s: &VertexSet) -> Result<LiftOutcome> {
    match dir {
        Direction::Forward => forward(r, s),
        Direction::Backward => backward(r, s),
    }
}

fn forward(r: &Reduction, s: &VertexSet) -> Result<LiftOutcome> {
    let g = &r.source;
    if s.universe() != g.n() {
        return Err(Error::Input(
            "set universe does not match the source".into(),
        ));
    }
    let ok = if r.kind.source_is_domination() {
        is_dominating(g, s)
    } else {
        is_secure_dominating(g, s).is_some()
    };
    if !ok {
        return Err(Error::Precondition(format!(
            "{}: forward input is not a {}dominating set of the source",
            r.kind.as_str(),
            if r.kind.source_is_domination() {
                ""
            } else {
                "secure "
            }
        )));
    }
    let tn = r.target.n();
    let mut t = VertexSet::from_iter(tn, s.iter());
    let (extra, case): (Vec<Vertex>, &str) = match r.kind {
        ReductionKind::SplitDd => (vec![r.gadget(Gadget::X)], "add-x"),
        ReductionKind::BisplitDd => (vec![r.gadget(Gadget::Y), r.gadget(Gadget::Z)], "add-y-z"),
        ReductionKind::CbipSdd | ReductionKind::SplitSdd => {
            let mut e: Vec<_> = s.iter().map(|v| r.mirror(v)).collect();
            e.extend([r.gadget(Gadget::K), r.gadget(Gadget::M)]);
            (e, "mirror-add-k-m")
        }
    };
    for v in extra {
        t.insert(v);
    }
    if t.len() != r.param_map.apply(s.len()) || is_secure_dominating(&r.target, &t).is_none() {
        return Err(Error::ClaimViolation(format!(
            "{} forward lift of {:?} is not a secure dominating set of size {}",
            r.kind.as_str(),
            s.to_vec(),
            r.param_map.apply(s.len())
        )));
    }
    Ok(LiftOutcome {
        set: t,
        case: case.into(),
    })
}

fn backward(r: &Reduction, s: &VertexSet) -> Result<LiftOutcome> {
    if s.universe() != r.target.n() {
        return Err(Error::Input(
            "set universe does not match the target".into(),
        ));
    }
    if is_secure_dominating(&r.target, s).is_none() {
        return Err(Error::Precondition(format!(
            "{}: backward input is not a secure dominating set of the target",
            r.kind.as_str()
        )));
    }
    let pm = r.param_map;
    let budget = s.len().checked_sub(pm.b).map(|v| v / pm.a).ok_or_else(|| {
        Error::ClaimViolation(format!(
            "{}: target set smaller than the offset",
            r.kind.as_str()
        ))
    })?;
    match r.kind {
        ReductionKind::SplitDd | ReductionKind::BisplitDd => backward_domination(r, s, budget),
        ReductionKind::CbipSdd | ReductionKind::SplitSdd => backward_doubling(r, s, budget),
    }
}

fn gadget_label(r: &Reduction, s: &VertexSet) -> String {
    let names: Vec<&str> = s
        .iter()
        .filter_map(|v| match r.provenance[v] {
            Origin::Gadget(g) => Some(match g {
                Gadget::X => "x",
                Gadget::Y => "y",
                Gadget::Z => "z",
                Gadget::XPrime => "x'",
                Gadget::K => "k",
                Gadget::L => "l",
                Gadget::M => "m",
                Gadget::N => "n",
            }),
            _ => None,
        })
        .collect();
    if names.is_empty() {
        "no-gadgets".into()
    } else {
        names.join("+")
    }
}

/// Keeps the source part of `s` and repairs whatever it leaves undominated
/// with the fewest extra vertices, searched exhaustively up to the budget.
fn backward_domination(r: &Reduction, s: &VertexSet, budget: usize) -> Result<LiftOutcome> {
    let g = &r.source;
    let n = g.n();
    let base = VertexSet::from_iter(n, s.iter().filter(|&v| v < n));
    let label = gadget_label(r, s);
    let missing = undominated(g, &base);
    let case = if missing.is_empty() {
        format!("{label}/source-part")
    } else {
        format!("{label}/repair-{}", missing.len())
    };
    let spare = budget.saturating_sub(base.len());
    if base.len() <= budget {
        if let Some(d) = repair(g, &base, &missing, spare) {
            return Ok(LiftOutcome { set: d, case });
        }
    }
    Err(Error::ClaimViolation(format!(
        "{} backward lift ({case}): no dominating set of size <= {budget} extends {:?}",
        r.kind.as_str(),
        base.to_vec()
    )))
}

fn repair(g: &Graph, base: &VertexSet, missing: &VertexSet, spare: usize) -> Option<VertexSet> {
    if missing.is_empty() {
        return Some(base.clone());
    }
    // candidates: closed neighbourhoods of the missing vertices
    let mut pool = missing.clone();
    for w in missing.iter() {
        pool = pool.union(&g.neighbors(w).expect("in range"));
    }
    let pool = pool.to_vec();
    for k in 1..=spare.min(pool.len()) {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mut d = base.clone();
            for &i in &idx {
                d.insert(pool[i]);
            }
            if is_dominating(g, &d) {
                return Some(d);
            }
            let mut i = k;
            while i > 0 && idx[i - 1] == pool.len() - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    None
}

/// Projects `s` onto the source through either copy (or both), keeping the
/// smallest projection that secures the source. When none does, the smaller
/// copy is repaired by adding undefended vertices one at a time.
fn backward_doubling(r: &Reduction, s: &VertexSet, budget: usize) -> Result<LiftOutcome> {
    let g = &r.source;
    let n = g.n();
    let first = VertexSet::from_iter(n, s.iter().filter(|&v| v < n));
    let second = VertexSet::from_iter(n, s.iter().filter(|&v| v >= n && v < 2 * n).map(|v| v - n));
    let both = first.union(&second);
    let label = gadget_label(r, s);
    let mut options = [
        (first, "first-copy"),
        (second, "second-copy"),
        (both, "both-copies"),
    ];
    options.sort_by_key(|(c, _)| c.len());
    for (cand, which) in &options {
        if cand.len() <= budget && is_secure_dominating(g, cand).is_some() {
            return Ok(LiftOutcome {
                set: cand.clone(),
                case: format!("{label}/{which}"),
            });
        }
    }
    let (mut cand, which) = options[0].clone();
    let mut added = 0;
    while cand.len() < budget {
        let Some(u) = g
            .vertices()
            .find(|&u| !cand.contains(u) && defenders(g, u, &cand).map_or(true, |d| d.is_empty()))
        else {
            break;
        };
        cand.insert(u);
        added += 1;
    }
    let case = format!("{label}/{which}+repair-{added}");
    if is_secure_dominating(g, &cand).is_some() && cand.len() <= budget {
        return Ok(LiftOutcome { set: cand, case });
    }
    Err(Error::ClaimViolation(format!(
        "{} backward lift ({case}): no projection of {:?} is a secure dominating set of size <= {budget}",
        r.kind.as_str(),
        s.to_vec()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::oracle::{min_dominating_brute, min_secure_dominating_brute};
    use crate::recognition::{recognize_split, BisplitPartition, SplitPartition};
    use crate::reductions::*;

    fn roundtrip_dd(r: &Reduction) {
        let d = min_dominating_brute(&r.source).unwrap();
        let f = lift_solution(r, Direction::Forward, &d).unwrap();
        assert_eq!(f.set.len(), r.param_map.apply(d.len()));
        let opt = min_secure_dominating_brute(&r.target).unwrap();
        let b = lift_solution(r, Direction::Backward, &opt).unwrap();
        assert!(is_dominating(&r.source, &b.set));
        assert!(b.set.len() <= d.len());
    }

    #[test]
    fn split_dd_roundtrip() {
        for g in [complete(3), star(3), path(4)] {
            let p = recognize_split(&g).unwrap();
            roundtrip_dd(&split_dd_to_sdd(&g, &p).unwrap());
        }
    }

    #[test]
    fn bisplit_dd_roundtrip() {
        let c4 = cycle(4);
        let p = BisplitPartition::new(4, &[], &[0, 2], &[1, 3]).unwrap();
        roundtrip_dd(&bisplit_dd_to_sdd(&c4, &p).unwrap());
    }

    #[test]
    fn doubling_roundtrip() {
        let p4 = path(4);
        let r = cbip_sdd_to_cbip_bisplit_sdd(
            &p4,
            &VertexSet::from_iter(4, [0, 2]),
            &VertexSet::from_iter(4, [1, 3]),
        )
        .unwrap();
        let s = min_secure_dominating_brute(&p4).unwrap();
        let f = lift_solution(&r, Direction::Forward, &s).unwrap();
        assert_eq!(f.set.len(), 6);
        let opt = min_secure_dominating_brute(&r.target).unwrap();
        let b = lift_solution(&r, Direction::Backward, &opt).unwrap();
        assert_eq!(b.set.len(), 2);

        let k3 = complete(3);
        let p = SplitPartition::new(3, &[0, 1, 2], &[]).unwrap();
        let r = split_sdd_to_bisplit_sdd(&k3, &p).unwrap();
        let opt = min_secure_dominating_brute(&r.target).unwrap();
        let b = lift_solution(&r, Direction::Backward, &opt).unwrap();
        assert_eq!(b.set.len(), 1);
    }

    #[test]
    fn preconditions() {
        let k3 = complete(3);
        let p = SplitPartition::new(3, &[0, 1, 2], &[]).unwrap();
        let r = split_dd_to_sdd(&k3, &p).unwrap();
        assert!(matches!(
            lift_solution(&r, Direction::Forward, &VertexSet::empty(3)),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            lift_solution(&r, Direction::Backward, &VertexSet::from_iter(5, [0])),
            Err(Error::Precondition(_))
        ));
    }
}
