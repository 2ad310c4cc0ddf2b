//! Seeded instance generators per graph class, plus exhaustive enumeration of
//! small graphs up to isomorphism.
//!
//! Randomness comes from ChaCha8 seeded with `seed_from_u64`, so an `InstanceSpec`
//! reproduces the same edge list on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{families, Graph, Vertex, VertexSet};
use crate::recognition::{
    is_chordal_bipartite, recognize_chain, BisplitPartition, ChainPartition, SplitPartition,
};

const REJECTION_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum InstanceSpec {
    /// Clique of size `clique`, independent side of size `independent`, each
    /// independent vertex joined to a random non-empty part of the clique.
    Split {
        clique: usize,
        independent: usize,
        seed: u64,
    },
    /// Biclique `y × z` plus a stable `x` side with random non-empty
    /// neighbourhoods in `y ∪ z`.
    Bisplit {
        x: usize,
        y: usize,
        z: usize,
        seed: u64,
    },
    /// Connected chain graph with nested neighbourhoods, randomly relabelled.
    Chain {
        x: usize,
        y: usize,
        seed: u64,
    },
    /// Star biclique `y_1 × Z` (`leaves` = |Z|) with `x` vertices forming a
    /// forest over `Z`; every `x` of degree two or more sees `y_1`.
    ChordalBisplit {
        leaves: usize,
        x: usize,
        seed: u64,
    },
    /// Random bipartite graph rejected until chordal bipartite.
    ChordalBipartite {
        x: usize,
        y: usize,
        seed: u64,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    CompleteBipartite {
        p: usize,
        q: usize,
    },
}

impl InstanceSpec {
    pub fn class(&self) -> &'static str {
        match self {
            Self::Split { .. } => "split",
            Self::Bisplit { .. } => "bisplit",
            Self::Chain { .. } => "chain",
            Self::ChordalBisplit { .. } => "chordal-bisplit",
            Self::ChordalBipartite { .. } => "chordal-bipartite",
            Self::Path { .. } => "path",
            Self::Cycle { .. } => "cycle",
            Self::CompleteBipartite { .. } => "complete-bipartite",
        }
    }

    /// Compact label used in reports.
    pub fn label(&self) -> String {
        serde_json::to_string(self).expect("spec serializes")
    }
}

/// The class partition that comes with a generated graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ClassPartition {
    Split(SplitPartition),
    Bisplit(BisplitPartition),
    Chain(ChainPartition),
    Bipartition { x: VertexSet, y: VertexSet },
    None,
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub spec: InstanceSpec,
    pub graph: Graph,
    pub partition: ClassPartition,
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random non-empty subset of `pool`, each member kept with probability 1/2.
fn nonempty_subset(rng: &mut ChaCha8Rng, pool: &[Vertex]) -> Vec<Vertex> {
    let mut pick: Vec<_> = pool.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
    if pick.is_empty() {
        pick.push(pool[rng.gen_range(0..pool.len())]);
    }
    pick
}

pub fn generate(spec: &InstanceSpec) -> Result<Instance> {
    let (graph, partition) = match *spec {
        InstanceSpec::Split {
            clique,
            independent,
            seed,
        } => split(clique, independent, seed)?,
        InstanceSpec::Bisplit { x, y, z, seed } => bisplit(x, y, z, seed)?,
        InstanceSpec::Chain { x, y, seed } => chain(x, y, seed)?,
        InstanceSpec::ChordalBisplit { leaves, x, seed } => chordal_bisplit(leaves, x, seed)?,
        InstanceSpec::ChordalBipartite { x, y, seed } => chordal_bipartite(x, y, seed)?,
        InstanceSpec::Path { n } => {
            if n == 0 {
                return Err(Error::Input("path needs n >= 1".into()));
            }
            (families::path(n), ClassPartition::None)
        }
        InstanceSpec::Cycle { n } => {
            if n < 3 {
                return Err(Error::Input("cycle needs n >= 3".into()));
            }
            (families::cycle(n), ClassPartition::None)
        }
        InstanceSpec::CompleteBipartite { p, q } => {
            if p == 0 || q == 0 {
                return Err(Error::Input("complete bipartite needs p, q >= 1".into()));
            }
            let g = families::complete_bipartite(p, q);
            let part = match recognize_chain(&g)? {
                Some(c) => ClassPartition::Chain(c),
                None => ClassPartition::None,
            };
            (g, part)
        }
    };
    Ok(Instance {
        spec: spec.clone(),
        graph,
        partition,
    })
}

fn split(p: usize, q: usize, seed: u64) -> Result<(Graph, ClassPartition)> {
    if p == 0 && q != 1 {
        return Err(Error::Input(
            "a connected split graph with empty clique has one vertex".into(),
        ));
    }
    let mut r = rng(seed);
    let clique: Vec<Vertex> = (0..p).collect();
    let mut edges = Vec::new();
    for a in 0..p {
        for b in a + 1..p {
            edges.push((a, b));
        }
    }
    if p > 0 {
        for i in p..p + q {
            edges.extend(nonempty_subset(&mut r, &clique).into_iter().map(|k| (k, i)));
        }
    }
    let g = Graph::new(p + q, &edges)?;
    let part = SplitPartition::new(p + q, &clique, &(p..p + q).collect::<Vec<_>>())?;
    Ok((g, ClassPartition::Split(part)))
}

/// Ids: `x` side first, then `y`, then `z`.
fn bisplit(x: usize, y: usize, z: usize, seed: u64) -> Result<(Graph, ClassPartition)> {
    if y == 0 || z == 0 {
        return Err(Error::Input("bisplit needs non-empty y and z sides".into()));
    }
    let mut r = rng(seed);
    let n = x + y + z;
    let ys: Vec<Vertex> = (x..x + y).collect();
    let zs: Vec<Vertex> = (x + y..n).collect();
    let mut edges = Vec::new();
    for &a in &ys {
        for &b in &zs {
            edges.push((a, b));
        }
    }
    let yz: Vec<Vertex> = (x..n).collect();
    for v in 0..x {
        edges.extend(nonempty_subset(&mut r, &yz).into_iter().map(|w| (v, w)));
    }
    let g = Graph::new(n, &edges)?;
    let part = BisplitPartition::new(n, &(0..x).collect::<Vec<_>>(), &ys, &zs)?;
    Ok((g, ClassPartition::Bisplit(part)))
}

fn chain(x: usize, y: usize, seed: u64) -> Result<(Graph, ClassPartition)> {
    if x == 0 || y == 0 {
        return Err(Error::Input("chain needs non-empty sides".into()));
    }
    let mut r = rng(seed);
    let n = x + y;
    // x_i sees the first t_i vertices of Y; the largest reaches all of Y
    let mut reach: Vec<usize> = (0..x).map(|_| r.gen_range(1..=y)).collect();
    let top = r.gen_range(0..x);
    reach[top] = y;
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(&mut r);
    let mut edges = Vec::new();
    for (i, &t) in reach.iter().enumerate() {
        for j in 0..t {
            edges.push((perm[i], perm[x + j]));
        }
    }
    let g = Graph::new(n, &edges)?;
    let part = recognize_chain(&g)?
        .ok_or_else(|| Error::Input("generated graph is not a chain graph".into()))?;
    Ok((g, ClassPartition::Chain(part)))
}

/// Ids: `x` side first, then `y_1`, then the `z` leaves.
fn chordal_bisplit(leaves: usize, x: usize, seed: u64) -> Result<(Graph, ClassPartition)> {
    if leaves == 0 {
        return Err(Error::Input(
            "chordal bisplit needs at least one z vertex".into(),
        ));
    }
    let mut r = rng(seed);
    let n = x + 1 + leaves;
    let y1 = x;
    let zs: Vec<Vertex> = (x + 1..n).collect();
    let mut edges: Vec<_> = zs.iter().map(|&z| (y1, z)).collect();
    // union-find over X ∪ Z keeps the X-Z edges a forest
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], v: usize) -> usize {
        let mut v = v;
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for v in 0..x {
        let want = r.gen_range(0..=3usize.min(leaves));
        let mut pool = zs.clone();
        pool.shuffle(&mut r);
        let mut chosen = Vec::new();
        for z in pool {
            if chosen.len() == want {
                break;
            }
            let (a, b) = (find(&mut parent, v), find(&mut parent, z));
            if a != b {
                parent[a] = b;
                chosen.push(z);
            }
        }
        let hub = chosen.len() != 1 || r.gen_bool(0.5);
        if hub {
            edges.push((v, y1));
        }
        edges.extend(chosen.into_iter().map(|z| (v, z)));
    }
    let g = Graph::new(n, &edges)?;
    let part = BisplitPartition::new(n, &(0..x).collect::<Vec<_>>(), &[y1], &zs)?;
    Ok((g, ClassPartition::Bisplit(part)))
}

/// Sides `0..x` and `x..x+y`, no isolated vertices.
fn chordal_bipartite(x: usize, y: usize, seed: u64) -> Result<(Graph, ClassPartition)> {
    if x == 0 || y == 0 {
        return Err(Error::Input(
            "chordal bipartite needs non-empty sides".into(),
        ));
    }
    let mut r = rng(seed);
    let n = x + y;
    for _ in 0..REJECTION_ATTEMPTS {
        let mut edges = Vec::new();
        for a in 0..x {
            for b in x..n {
                if r.gen_bool(0.5) {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::new(n, &edges)?;
        if g.vertices().any(|v| g.degree(v) == 0) || !is_chordal_bipartite(&g)? {
            continue;
        }
        let part = ClassPartition::Bipartition {
            x: VertexSet::from_iter(n, 0..x),
            y: VertexSet::from_iter(n, x..n),
        };
        return Ok((g, part));
    }
    Err(Error::Input(format!(
        "no chordal bipartite graph with sides {x}, {y} after {REJECTION_ATTEMPTS} attempts"
    )))
}

/// Smallest adjacency code over all relabellings (n ≤ 8).
fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    let mut perm: Vec<Vertex> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut code = 0u64;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if g.has_edge(perm[i], perm[j]) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(code);
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return best;
        };
        let j = (i..n)
            .rev()
            .find(|&j| perm[j] > perm[i - 1])
            .expect("exists");
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

/// All connected graphs on `n` vertices, one per isomorphism class (n ≤ 7),
/// ordered by canonical code.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > 7 {
        return Err(Error::SizeLimit {
            what: "connected_graphs",
            n,
            cap: 7,
        });
    }
    let pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut seen = std::collections::BTreeMap::new();
    for code in 0u64..1 << pairs.len() {
        if (code.count_ones() as usize) + 1 < n {
            continue;
        }
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| code >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges)?;
        if !g.is_connected() {
            continue;
        }
        seen.entry(canonical_code(&g)).or_insert(g);
    }
    Ok(seen.into_values().collect())
}
