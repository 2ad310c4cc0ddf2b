//! Undirected simple graphs over dense vertex ids and bitset-backed vertex sets.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Vertex identifier, always in `0..n` for the ambient graph.
pub type Vertex = usize;

/// A subset of the vertices `0..universe` of some graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        Self { bits }
    }

    /// Builds a set from members; panics if a member is outside the universe.
    pub fn from_iter<I: IntoIterator<Item = Vertex>>(universe: usize, members: I) -> Self {
        let mut s = Self::empty(universe);
        for v in members {
            s.insert(v);
        }
        s
    }

    /// Checked constructor for untrusted input.
    pub fn try_from_slice(universe: usize, members: &[Vertex]) -> Result<Self> {
        let mut s = Self::empty(universe);
        for &v in members {
            if v >= universe {
                return Err(Error::Input(format!(
                    "vertex {v} out of range for a graph on {universe} vertices"
                )));
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Builds a set from the low `universe` bits of a mask (`universe <= 64`).
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        debug_assert!(universe <= 64);
        Self::from_iter(universe, (0..universe).filter(|&v| mask >> v & 1 == 1))
    }

    /// The set as a bit mask; only meaningful for `universe <= 64`.
    pub fn to_mask(&self) -> u64 {
        debug_assert!(self.universe() <= 64);
        self.iter().fold(0u64, |m, v| m | 1 << v)
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.bits.contains(v)
    }

    pub fn insert(&mut self, v: Vertex) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: Vertex) {
        self.bits.set(v, false);
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.ones()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.bits.minimum()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Self { bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Self { bits }
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        Self { bits }
    }

    pub fn complement(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        Self { bits }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersection_count(&self, other: &Self) -> usize {
        self.bits.intersection_count(&other.bits)
    }

    pub(crate) fn bits(&self) -> &FixedBitSet {
        &self.bits
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Deserializes as a plain member list; the universe is the smallest one holding every member.
impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<Vertex>::deserialize(deserializer)?;
        let universe = members.iter().max().map_or(0, |&m| m + 1);
        Ok(VertexSet::from_iter(universe, members))
    }
}

/// Undirected simple graph on vertices `0..n`. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    m: usize,
}

impl Graph {
    /// Builds a graph, deduplicating repeated pairs. Rejects self-loops and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        let mut m = 0;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
            }
            if !adj[u].put(v) {
                adj[v].insert(u);
                m += 1;
            }
        }
        Ok(Self { adj, m })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![FixedBitSet::with_capacity(n); n],
            m: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            self.adj[u]
                .ones()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n() {
            return Err(Error::Input(format!(
                "vertex {v} out of range for a graph on {} vertices",
                self.n()
            )));
        }
        Ok(())
    }

    /// Open neighbourhood N(v).
    pub fn neighbors(&self, v: Vertex) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet {
            bits: self.adj[v].clone(),
        })
    }

    /// Closed neighbourhood N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: Vertex) -> Result<VertexSet> {
        let mut s = self.neighbors(v)?;
        s.insert(v);
        Ok(s)
    }

    /// Unchecked neighbour iteration for internal hot loops.
    pub fn neighbor_iter(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].ones()
    }

    pub(crate) fn row(&self, v: Vertex) -> &FixedBitSet {
        &self.adj[v]
    }

    /// Neighbourhood as a bit mask (`n <= 64`).
    pub fn row_mask(&self, v: Vertex) -> u64 {
        debug_assert!(self.n() <= 64);
        self.adj[v].ones().fold(0u64, |m, w| m | 1 << w)
    }

    /// Number of neighbours of `v` inside `s`.
    pub fn degree_in(&self, v: Vertex, s: &VertexSet) -> usize {
        self.adj[v].intersection_count(s.bits())
    }

    /// Neighbours of `v` restricted to `s`.
    pub fn neighbors_in(&self, v: Vertex, s: &VertexSet) -> VertexSet {
        let mut bits = self.adj[v].clone();
        bits.intersect_with(s.bits());
        VertexSet { bits }
    }

    /// Degree-one vertices.
    pub fn pendant_vertices(&self) -> VertexSet {
        VertexSet::from_iter(self.n(), self.vertices().filter(|&v| self.degree(v) == 1))
    }

    /// Subgraph induced by `s`, with `mapping[old] = Some(new)` for members of `s`.
    /// New ids follow the increasing order of the old ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Vec<Option<Vertex>>) {
        let mut mapping = vec![None; self.n()];
        for (new, old) in s.iter().enumerate() {
            mapping[old] = Some(new);
        }
        let edges: Vec<_> = self
            .edges()
            .filter_map(|(u, v)| Some((mapping[u]?, mapping[v]?)))
            .collect();
        let g = Graph::new(s.len(), &edges).expect("induced edges are valid");
        (g, mapping)
    }

    /// True when every pair of distinct members of `s` is adjacent.
    pub fn is_complete_on(&self, s: &VertexSet) -> bool {
        let k = s.len();
        s.iter().all(|v| self.degree_in(v, s) == k - 1)
    }

    /// True when no two members of `s` are adjacent.
    pub fn is_stable_on(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.degree_in(v, s) == 0)
    }

    /// Connected components as sets, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_on(&VertexSet::full(self.n()))
    }

    /// Components of the subgraph induced by `s`.
    pub fn components_on(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n());
        let mut out = Vec::new();
        for start in s.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n());
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(u) = stack.pop() {
                comp.insert(u);
                for w in self.adj[u].ones() {
                    if s.contains(w) && !seen.contains(w) {
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True when the subgraph induced by `s` is acyclic.
    pub fn is_forest_on(&self, s: &VertexSet) -> bool {
        let edges: usize = s.iter().map(|v| self.degree_in(v, s)).sum::<usize>() / 2;
        edges + self.components_on(s).len() == s.len()
    }

    /// Proper 2-colouring (colour 0 on the smallest vertex of each component),
    /// or `None` when the graph has an odd cycle.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for w in self.adj[u].ones() {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        stack.push(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n(), &edges).expect("permutation keeps edges valid")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// Parametric families used throughout tests and generators.
pub mod families {
    use super::{Graph, Vertex};

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, &edges).unwrap()
    }

    /// K_{p,q} with sides `0..p` and `p..p+q`.
    pub fn complete_bipartite(p: usize, q: usize) -> Graph {
        let edges: Vec<(Vertex, Vertex)> = (0..p)
            .flat_map(|u| (p..p + q).map(move |v| (u, v)))
            .collect();
        Graph::new(p + q, &edges).unwrap()
    }

    /// K_{1,l}: centre 0, leaves `1..=l`.
    pub fn star(l: usize) -> Graph {
        complete_bipartite(1, l)
    }
}
