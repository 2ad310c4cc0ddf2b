//! Domination and secure domination: verifiers, external private neighbours,
//! defender certificates and a greedy constructor.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// For every vertex outside a secure dominating set, the lowest-id defender
/// whose swap keeps the set dominating.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefenseCertificate {
    pub assignments: BTreeMap<Vertex, Vertex>,
}

impl DefenseCertificate {
    /// Re-checks every assignment definitionally.
    pub fn validate(&self, g: &Graph, s: &VertexSet) -> bool {
        let outside = s.complement();
        outside.iter().all(|u| {
            self.assignments.get(&u).is_some_and(|&v| {
                s.contains(v) && g.has_edge(u, v) && is_dominating(g, &swap(s, v, u))
            })
        }) && self.assignments.len() == outside.len()
    }
}

fn swap(s: &VertexSet, out: Vertex, inn: Vertex) -> VertexSet {
    let mut t = s.clone();
    t.remove(out);
    t.insert(inn);
    t
}

/// Every vertex outside `d` has a neighbour in `d`.
pub fn is_dominating(g: &Graph, d: &VertexSet) -> bool {
    g.vertices().all(|v| d.contains(v) || g.degree_in(v, d) > 0)
}

/// Vertices not dominated by `d`.
pub fn undominated(g: &Graph, d: &VertexSet) -> VertexSet {
    VertexSet::from_iter(
        g.n(),
        g.vertices()
            .filter(|&v| !d.contains(v) && g.degree_in(v, d) == 0),
    )
}

/// External private neighbours of `v` with respect to `d`: vertices outside
/// `d` whose only neighbour in `d` is `v`.
pub fn epn(g: &Graph, v: Vertex, d: &VertexSet) -> Result<VertexSet> {
    if v >= g.n() || !d.contains(v) {
        return Err(Error::Precondition(format!(
            "epn: vertex {v} is not in the set"
        )));
    }
    Ok(VertexSet::from_iter(
        g.n(),
        g.neighbor_iter(v)
            .filter(|&u| !d.contains(u) && g.degree_in(u, d) == 1),
    ))
}

/// Members `v` of `s` adjacent to `u` such that `(s \ {v}) ∪ {u}` dominates.
/// Computed straight from the definition.
pub fn defenders(g: &Graph, u: Vertex, s: &VertexSet) -> Result<VertexSet> {
    if u >= g.n() {
        return Err(Error::Input(format!("vertex {u} out of range")));
    }
    if s.contains(u) {
        return Err(Error::Precondition(format!(
            "defenders: vertex {u} is in the set"
        )));
    }
    Ok(VertexSet::from_iter(
        g.n(),
        g.neighbors_in(u, s)
            .iter()
            .filter(|&v| is_dominating(g, &swap(s, v, u))),
    ))
}

/// Secure-domination check with a full certificate, or `None` when `s` is not
/// a secure dominating set.
///
/// Each member `v` gets its private set: the closed-neighbourhood vertices
/// whose only dominator is `v`. Swapping `v` out for `u` keeps domination
/// exactly when that private set lies inside `N[u]`. Building the private sets
/// and testing every (u, v) pair is O(n³) in the worst case, with word-level
/// parallelism on the inner subset test.
pub fn is_secure_dominating(g: &Graph, s: &VertexSet) -> Option<DefenseCertificate> {
    let n = g.n();
    debug_assert_eq!(s.universe(), n);
    let mut count = vec![0u32; n];
    for v in s.iter() {
        count[v] += 1;
        for w in g.neighbor_iter(v) {
            count[w] += 1;
        }
    }
    if count.contains(&0) {
        return None;
    }
    let mut private: Vec<Option<FixedBitSet>> = vec![None; n];
    for v in s.iter() {
        let mut p = FixedBitSet::with_capacity(n);
        if count[v] == 1 {
            p.insert(v);
        }
        for w in g.neighbor_iter(v) {
            if count[w] == 1 {
                p.insert(w);
            }
        }
        private[v] = Some(p);
    }
    let mut assignments = BTreeMap::new();
    for u in g.vertices().filter(|&u| !s.contains(u)) {
        let row = g.row(u);
        let defender = g.neighbors_in(u, s).iter().find(|&v| {
            let p = private[v].as_ref().expect("members have private sets");
            // N[u] is the row plus u itself.
            p.ones().all(|w| w == u || row.contains(w))
        })?;
        assignments.insert(u, defender);
    }
    Some(DefenseCertificate { assignments })
}

/// Greedy secure dominating set: maximum-coverage domination first, then each
/// undefended vertex joins the set until the verifier accepts. Never optimal
/// by contract, always verified; falls back to `V`.
pub fn greedy_secure_dominating(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut s = VertexSet::empty(n);
    let mut undom = VertexSet::full(n);
    while let Some(best) = g.vertices().filter(|&v| !s.contains(v)).max_by_key(|&v| {
        let gain = g.degree_in(v, &undom) + usize::from(undom.contains(v));
        (gain, std::cmp::Reverse(v))
    }) {
        if undom.is_empty() {
            break;
        }
        s.insert(best);
        undom.remove(best);
        for w in g.neighbor_iter(best) {
            undom.remove(w);
        }
    }
    loop {
        if is_secure_dominating(g, &s).is_some() {
            return s;
        }
        let unsecured = g
            .vertices()
            .find(|&u| !s.contains(u) && defenders(g, u, &s).map_or(true, |d| d.is_empty()));
        match unsecured {
            Some(u) => s.insert(u),
            None => return VertexSet::full(n),
        }
    }
}

/// Violations of the complete-epn property for an accepted secure dominating
/// set: members whose external private neighbours are not pairwise adjacent.
pub fn epn_completeness_violations(g: &Graph, s: &VertexSet) -> Vec<Vertex> {
    s.iter()
        .filter(|&v| {
            let e = epn(g, v, s).expect("member");
            !g.is_complete_on(&e)
        })
        .collect()
}
