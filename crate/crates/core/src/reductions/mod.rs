//! Polynomial-time constructions relating (secure) domination across graph
//! classes, with parameter transforms and vertex provenance.
//!
//! Target layouts put source vertices first under their original ids.
//! Gadget vertices always take the highest ids:
//!
//! | kind        | layout                                                   |
//! |-------------|----------------------------------------------------------|
//! | `split-dd`  | `0..n` source, `n` = x, `n+1` = y                         |
//! | `bisplit-dd`| `0..n` source, then x, y, z, x'                           |
//! | `cbip-sdd`, `split-sdd` | `0..n` source, `n..2n` mirrors, then k, l, m, n |

mod approx;
mod lift;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::recognition::{
    extend_comb, extend_star, find_star_witness, is_chordal_bipartite, verify_bisplit_partition,
    BisplitPartition, ConvexityWitness, Side, SplitPartition, WitnessTree,
};

pub use approx::{approx_msd_split, ApproxConfig, ApproxOutcome};
pub use lift::{lift_solution, Direction, LiftOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionKind {
    /// Domination on split graphs to secure domination on split graphs.
    SplitDd,
    /// Domination on bisplit graphs to secure domination on bisplit graphs.
    BisplitDd,
    /// Secure domination on chordal bipartite graphs to chordal bipartite bisplit graphs.
    CbipSdd,
    /// Secure domination on split graphs to bisplit graphs.
    SplitSdd,
}

impl ReductionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::SplitDd => "split-dd",
            Self::BisplitDd => "bisplit-dd",
            Self::CbipSdd => "cbip-sdd",
            Self::SplitSdd => "split-sdd",
        }
    }

    pub fn param_map(self) -> ParamMap {
        match self {
            Self::SplitDd => ParamMap { a: 1, b: 1 },
            Self::BisplitDd => ParamMap { a: 1, b: 2 },
            Self::CbipSdd | Self::SplitSdd => ParamMap { a: 2, b: 2 },
        }
    }

    /// Whether the source-side problem is plain domination.
    pub fn source_is_domination(self) -> bool {
        matches!(self, Self::SplitDd | Self::BisplitDd)
    }
}

impl std::str::FromStr for ReductionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "split-dd" => Ok(Self::SplitDd),
            "bisplit-dd" => Ok(Self::BisplitDd),
            "cbip-sdd" => Ok(Self::CbipSdd),
            "split-sdd" => Ok(Self::SplitSdd),
            other => Err(Error::Input(format!("unknown reduction kind {other:?}"))),
        }
    }
}

/// Affine threshold transform `k ↦ a·k + b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamMap {
    pub a: usize,
    pub b: usize,
}

impl ParamMap {
    pub fn apply(self, k: usize) -> usize {
        self.a * k + self.b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Gadget {
    X,
    Y,
    Z,
    XPrime,
    K,
    L,
    M,
    N,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "origin", content = "vertex", rename_all = "kebab-case")]
pub enum Origin {
    Original(Vertex),
    Mirror(Vertex),
    Gadget(Gadget),
}

/// Partition handed to the construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum SourcePartition {
    Split(SplitPartition),
    Bisplit(BisplitPartition),
    Bipartition { x: VertexSet, y: VertexSet },
}

/// Certified class partition of the target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum TargetPartition {
    Split(SplitPartition),
    Bisplit(BisplitPartition),
}

#[derive(Debug, Clone)]
pub struct Reduction {
    pub kind: ReductionKind,
    pub source: Graph,
    pub target: Graph,
    pub param_map: ParamMap,
    pub provenance: Vec<Origin>,
    pub source_partition: SourcePartition,
    pub target_partition: TargetPartition,
    /// Convexity witnesses on the target (split-dd only): the star on `K*`
    /// and, when the source has one, the extended star on `I*`.
    pub witnesses: Vec<ConvexityWitness>,
}

/// JSON sidecar written next to a target edge list.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReductionSidecar {
    pub schema: u32,
    pub kind: ReductionKind,
    pub param_map: ParamMap,
    pub provenance: Vec<Origin>,
    pub partition: TargetPartition,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<ConvexityWitness>,
}

impl Reduction {
    pub fn gadget(&self, which: Gadget) -> Vertex {
        self.provenance
            .iter()
            .position(|o| *o == Origin::Gadget(which))
            .unwrap_or_else(|| panic!("{} has no {which:?} gadget", self.kind.as_str()))
    }

    /// Target id of the mirror copy of source vertex `v` (doubling kinds).
    pub fn mirror(&self, v: Vertex) -> Vertex {
        debug_assert!(matches!(
            self.kind,
            ReductionKind::CbipSdd | ReductionKind::SplitSdd
        ));
        self.source.n() + v
    }

    /// Expected target vertex and edge counts from the size formulas.
    pub fn expected_counts(&self) -> (usize, usize) {
        let (n, m) = (self.source.n(), self.source.m());
        match self.kind {
            ReductionKind::SplitDd => (n + 2, m + n + 1),
            ReductionKind::BisplitDd => (n + 4, m + n + 3),
            ReductionKind::CbipSdd => {
                let p = match &self.source_partition {
                    SourcePartition::Bipartition { x, .. } => x.len(),
                    _ => unreachable!(),
                };
                (2 * n + 4, 2 * m + (p + 1) * (p + 1) + 2)
            }
            ReductionKind::SplitSdd => {
                let SourcePartition::Split(sp) = &self.source_partition else {
                    unreachable!()
                };
                let p = sp.clique.len();
                let clique_edges = p * p.saturating_sub(1) / 2;
                (2 * n + 4, 2 * (m - clique_edges) + (p + 1) * (p + 1) + 2)
            }
        }
    }

    pub fn counts_match(&self) -> bool {
        self.expected_counts() == (self.target.n(), self.target.m())
    }

    /// Re-verifies the target partition against the target graph.
    pub fn target_partition_valid(&self) -> bool {
        match &self.target_partition {
            TargetPartition::Split(p) => p.is_valid(&self.target),
            TargetPartition::Bisplit(p) => verify_bisplit_partition(&self.target, p),
        }
    }

    pub fn sidecar(&self) -> ReductionSidecar {
        ReductionSidecar {
            schema: 1,
            kind: self.kind,
            param_map: self.param_map,
            provenance: self.provenance.clone(),
            partition: self.target_partition.clone(),
            witnesses: self.witnesses.clone(),
        }
    }

    /// Extends an I-side star or comb witness of the source to `I* = I ∪ {y}`.
    pub fn extend_source_witness(&self, w: &ConvexityWitness) -> Result<ConvexityWitness> {
        if self.kind != ReductionKind::SplitDd || w.side != Side::I {
            return Err(Error::Input(
                "only I-side witnesses of a split-dd source can be extended".into(),
            ));
        }
        let y = self.gadget(Gadget::Y);
        match w.tree {
            WitnessTree::Star { .. } => extend_star(w, y),
            WitnessTree::Comb { .. } => extend_comb(w, y),
        }
    }
}

fn originals(n: usize) -> Vec<Origin> {
    (0..n).map(Origin::Original).collect()
}

/// Adds `x` adjacent to every source vertex and a pendant `y` on `x`.
pub fn split_dd_to_sdd(g: &Graph, p: &SplitPartition) -> Result<Reduction> {
    p.validate(g)?;
    let n = g.n();
    let (x, y) = (n, n + 1);
    let mut edges: Vec<_> = g.edges().collect();
    edges.extend((0..n).map(|v| (x, v)));
    edges.push((x, y));
    let target = Graph::new(n + 2, &edges)?;
    let mut provenance = originals(n);
    provenance.extend([Origin::Gadget(Gadget::X), Origin::Gadget(Gadget::Y)]);

    let mut clique = p.clique.to_vec();
    clique.push(x);
    let mut independent = p.independent.to_vec();
    independent.push(y);
    let tp = SplitPartition::new(n + 2, &clique, &independent)?;

    let mut witnesses = Vec::new();
    witnesses.extend(find_star_witness(&target, &tp, Side::K));
    let mut r = Reduction {
        kind: ReductionKind::SplitDd,
        source: g.clone(),
        target,
        param_map: ReductionKind::SplitDd.param_map(),
        provenance,
        source_partition: SourcePartition::Split(p.clone()),
        target_partition: TargetPartition::Split(tp.clone()),
        witnesses: Vec::new(),
    };
    if let Some(src_star) = find_star_witness(g, p, Side::I) {
        let lifted = r.extend_source_witness(&src_star)?;
        witnesses.push(lifted);
    }
    r.witnesses = witnesses;
    Ok(r)
}

/// Adds the path `x - y - z - x'` with `y` joined to all of `X ∪ Z` and `z`
/// joined to all of `Y`.
pub fn bisplit_dd_to_sdd(g: &Graph, p: &BisplitPartition) -> Result<Reduction> {
    p.validate(g)?;
    let n = g.n();
    let (x, y, z, xp) = (n, n + 1, n + 2, n + 3);
    let mut edges: Vec<_> = g.edges().collect();
    edges.extend(p.x.iter().chain(p.z.iter()).map(|v| (y, v)));
    edges.extend(p.y.iter().map(|v| (z, v)));
    edges.extend([(x, y), (y, z), (z, xp)]);
    let target = Graph::new(n + 4, &edges)?;
    let mut provenance = originals(n);
    provenance.extend([Gadget::X, Gadget::Y, Gadget::Z, Gadget::XPrime].map(Origin::Gadget));

    let grow = |s: &VertexSet, extra: &[Vertex]| {
        VertexSet::from_iter(n + 4, s.iter().chain(extra.iter().copied()))
    };
    let tp = BisplitPartition {
        x: grow(&p.x, &[x, xp]),
        y: grow(&p.y, &[y]),
        z: grow(&p.z, &[z]),
    };
    Ok(Reduction {
        kind: ReductionKind::BisplitDd,
        source: g.clone(),
        target,
        param_map: ReductionKind::BisplitDd.param_map(),
        provenance,
        source_partition: SourcePartition::Bisplit(p.clone()),
        target_partition: TargetPartition::Bisplit(tp),
        witnesses: Vec::new(),
    })
}

/// Shared doubling construction. `hub_side` plays the role of the `k_i`
/// vertices, `leaf_side` the `l_j` vertices; `edges` are the source edges kept
/// (and mirrored).
fn doubling(
    kind: ReductionKind,
    g: &Graph,
    hub_side: &VertexSet,
    leaf_side: &VertexSet,
    kept: &[(Vertex, Vertex)],
    source_partition: SourcePartition,
) -> Result<Reduction> {
    let n = g.n();
    let total = 2 * n + 4;
    let (k, l, m, nn) = (2 * n, 2 * n + 1, 2 * n + 2, 2 * n + 3);
    let mirror = |v: Vertex| n + v;
    let mut edges: Vec<(Vertex, Vertex)> = kept.to_vec();
    edges.extend(kept.iter().map(|&(u, v)| (mirror(u), mirror(v))));
    for a in hub_side.iter() {
        for b in hub_side.iter() {
            edges.push((a, mirror(b)));
        }
        edges.push((k, mirror(a)));
        edges.push((m, a));
    }
    edges.extend([(l, k), (k, m), (m, nn)]);
    let target = Graph::new(total, &edges)?;

    let mut provenance = originals(n);
    provenance.extend((0..n).map(Origin::Mirror));
    provenance.extend([Gadget::K, Gadget::L, Gadget::M, Gadget::N].map(Origin::Gadget));

    let side = |s: &VertexSet, mirrored: bool, extra: Vertex| {
        VertexSet::from_iter(
            total,
            s.iter()
                .map(|v| if mirrored { mirror(v) } else { v })
                .chain(std::iter::once(extra)),
        )
    };
    let tp = BisplitPartition {
        x: side(leaf_side, false, l).union(&side(leaf_side, true, nn)),
        y: side(hub_side, false, k),
        z: side(hub_side, true, m),
    };
    Ok(Reduction {
        kind,
        source: g.clone(),
        target,
        param_map: kind.param_map(),
        provenance,
        source_partition,
        target_partition: TargetPartition::Bisplit(tp),
        witnesses: Vec::new(),
    })
}

/// Doubles a chordal bipartite graph with sides `x` (the `k_i`) and `y` (the
/// `l_j`), joins `{k} ∪ X` completely to `{m} ∪ X̄`, and hangs `l` on `k`
/// and `n` on `m`.
pub fn cbip_sdd_to_cbip_bisplit_sdd(g: &Graph, x: &VertexSet, y: &VertexSet) -> Result<Reduction> {
    let n = g.n();
    if x.universe() != n
        || y.universe() != n
        || !x.is_disjoint(y)
        || x.len() + y.len() != n
        || !g.is_stable_on(x)
        || !g.is_stable_on(y)
    {
        return Err(Error::Input("not a bipartition of the graph".into()));
    }
    if !is_chordal_bipartite(g)? {
        return Err(Error::Class("source is not chordal bipartite".into()));
    }
    let kept: Vec<_> = g.edges().collect();
    doubling(
        ReductionKind::CbipSdd,
        g,
        x,
        y,
        &kept,
        SourcePartition::Bipartition {
            x: x.clone(),
            y: y.clone(),
        },
    )
}

/// Same doubling on a split graph, with the clique edges dropped from both copies.
pub fn split_sdd_to_bisplit_sdd(g: &Graph, p: &SplitPartition) -> Result<Reduction> {
    p.validate(g)?;
    let kept: Vec<_> = g
        .edges()
        .filter(|&(u, v)| !(p.clique.contains(u) && p.clique.contains(v)))
        .collect();
    doubling(
        ReductionKind::SplitSdd,
        g,
        &p.clique,
        &p.independent,
        &kept,
        SourcePartition::Split(p.clone()),
    )
}

/// Builds the reduction of `kind` from a source partition.
pub fn reduce(kind: ReductionKind, g: &Graph, part: &SourcePartition) -> Result<Reduction> {
    match (kind, part) {
        (ReductionKind::SplitDd, SourcePartition::Split(p)) => split_dd_to_sdd(g, p),
        (ReductionKind::SplitSdd, SourcePartition::Split(p)) => split_sdd_to_bisplit_sdd(g, p),
        (ReductionKind::BisplitDd, SourcePartition::Bisplit(p)) => bisplit_dd_to_sdd(g, p),
        (ReductionKind::CbipSdd, SourcePartition::Bipartition { x, y }) => {
            cbip_sdd_to_cbip_bisplit_sdd(g, x, y)
        }
        _ => Err(Error::Input(format!(
            "{} needs a different source partition",
            kind.as_str()
        ))),
    }
}
