use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Clique side `clique` and independent side `independent` of a split graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

impl SplitPartition {
    pub fn new(n: usize, clique: &[usize], independent: &[usize]) -> Result<Self> {
        Ok(Self {
            clique: VertexSet::try_from_slice(n, clique)?,
            independent: VertexSet::try_from_slice(n, independent)?,
        })
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        let n = g.n();
        self.clique.universe() == n
            && self.independent.universe() == n
            && self.clique.is_disjoint(&self.independent)
            && self.clique.union(&self.independent).len() == n
            && g.is_complete_on(&self.clique)
            && g.is_stable_on(&self.independent)
    }

    pub(crate) fn validate(&self, g: &Graph) -> Result<()> {
        if self.is_valid(g) {
            Ok(())
        } else {
            Err(Error::Input(
                "not a valid split partition of the graph".into(),
            ))
        }
    }
}

/// Degree-sequence recognition: with degrees sorted non-increasingly
/// (ties by vertex id) and `m` the largest index with `d_m >= m - 1`, the graph
/// is split iff the first `m` degrees sum to `m(m-1)` plus the remaining
/// degrees; those `m` vertices then form the clique side.
pub fn recognize_split(g: &Graph) -> Option<SplitPartition> {
    let n = g.n();
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degs: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (0..n)
        .filter(|&i| degs[i] >= i)
        .map(|i| i + 1)
        .max()
        .unwrap_or(0);
    let head: usize = degs[..m].iter().sum();
    let tail: usize = degs[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let p = SplitPartition {
        clique: VertexSet::from_iter(n, order[..m].iter().copied()),
        independent: VertexSet::from_iter(n, order[m..].iter().copied()),
    };
    debug_assert!(p.is_valid(g));
    p.is_valid(g).then_some(p)
}
