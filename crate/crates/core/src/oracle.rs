//! Exact minimum (secure) dominating sets by subset enumeration.
//!
//! Subsets are visited by nondecreasing cardinality and, within one
//! cardinality, in lexicographic order of their sorted member lists; the first
//! hit is returned, so witnesses are the lexicographically least minimum sets.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Hard vertex cap for the exact searches.
pub const ORACLE_CAP: usize = 24;

/// Precomputed closed-neighbourhood masks for a graph with at most 64 vertices.
#[derive(Debug, Clone)]
pub struct MaskGraph {
    n: usize,
    closed: Vec<u64>,
    open: Vec<u64>,
}

impl MaskGraph {
    pub fn new(g: &Graph) -> Self {
        assert!(g.n() <= 64, "mask graphs hold at most 64 vertices");
        let open: Vec<u64> = g.vertices().map(|v| g.row_mask(v)).collect();
        let closed = open.iter().enumerate().map(|(v, &r)| r | 1 << v).collect();
        Self {
            n: g.n(),
            closed,
            open,
        }
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn is_dominating(&self, s: u64) -> bool {
        let mut covered = 0u64;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            covered |= self.closed[v];
        }
        covered == self.full()
    }

    /// Secure domination on masks, via private closed neighbourhoods.
    pub fn is_secure_dominating(&self, s: u64) -> bool {
        let members: Vec<usize> = ones(s).collect();
        let k = members.len();
        // prefix/suffix unions give the coverage of S \ {v} in O(k).
        let mut prefix = vec![0u64; k + 1];
        for (i, &v) in members.iter().enumerate() {
            prefix[i + 1] = prefix[i] | self.closed[v];
        }
        if prefix[k] != self.full() {
            return false;
        }
        let mut suffix = vec![0u64; k + 1];
        for i in (0..k).rev() {
            suffix[i] = suffix[i + 1] | self.closed[members[i]];
        }
        let mut private = [0u64; 64];
        for (i, &v) in members.iter().enumerate() {
            private[v] = self.closed[v] & !(prefix[i] | suffix[i + 1]);
        }
        let outside = self.full() & !s;
        ones(outside).all(|u| {
            let nu = self.closed[u];
            ones(self.open[u] & s).any(|v| private[v] & !nu == 0)
        })
    }
}

fn ones(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// Calls `visit` on every `k`-subset of `0..n` in lexicographic order until it
/// returns `true`; returns that subset.
pub(crate) fn first_k_subset(
    n: usize,
    k: usize,
    mut visit: impl FnMut(u64) -> bool,
) -> Option<u64> {
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | 1 << i);
        if visit(mask) {
            return Some(mask);
        }
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return None;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn check_cap(what: &'static str, g: &Graph) -> Result<()> {
    if g.n() > ORACLE_CAP {
        return Err(Error::SizeLimit {
            what,
            n: g.n(),
            cap: ORACLE_CAP,
        });
    }
    Ok(())
}

fn search(
    g: &Graph,
    max_size: usize,
    accept: impl Fn(&MaskGraph, u64) -> bool,
) -> Option<VertexSet> {
    let mg = MaskGraph::new(g);
    (0..=max_size.min(g.n()))
        .find_map(|k| first_k_subset(g.n(), k, |m| accept(&mg, m)))
        .map(|m| VertexSet::from_mask(g.n(), m))
}

/// Lexicographically least minimum dominating set.
pub fn min_dominating_brute(g: &Graph) -> Result<VertexSet> {
    check_cap("min_dominating_brute", g)?;
    Ok(search(g, g.n(), |mg, m| mg.is_dominating(m)).expect("V dominates"))
}

/// Lexicographically least minimum secure dominating set.
pub fn min_secure_dominating_brute(g: &Graph) -> Result<VertexSet> {
    check_cap("min_secure_dominating_brute", g)?;
    Ok(search(g, g.n(), |mg, m| mg.is_secure_dominating(m)).expect("V is secure"))
}

/// Least secure dominating set of size at most `max_size`, if one exists.
/// Runs in O(n^max_size) set checks, so it stays polynomial for a fixed bound.
pub fn secure_dominating_at_most(g: &Graph, max_size: usize) -> Result<Option<VertexSet>> {
    if g.n() > 64 {
        return Err(Error::SizeLimit {
            what: "secure_dominating_at_most",
            n: g.n(),
            cap: 64,
        });
    }
    Ok(search(g, max_size, |mg, m| mg.is_secure_dominating(m)))
}

/// γ(G).
pub fn domination_number(g: &Graph) -> Result<usize> {
    min_dominating_brute(g).map(|s| s.len())
}

/// γ_s(G).
pub fn secure_domination_number(g: &Graph) -> Result<usize> {
    min_secure_dominating_brute(g).map(|s| s.len())
}
