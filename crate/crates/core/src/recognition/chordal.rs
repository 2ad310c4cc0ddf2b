use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Induced-cycle enumeration in [`is_chordal_bipartite`] refuses larger graphs.
pub const CHORDAL_BIPARTITE_CAP: usize = 16;

/// Maximum cardinality search; returns vertices in visiting order.
fn mcs_order(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex remains");
        done[v] = true;
        order.push(v);
        for w in g.neighbor_iter(v) {
            if !done[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// Checks that `peo` (first vertex eliminated first) is a perfect elimination ordering.
fn is_perfect_elimination(g: &Graph, peo: &[Vertex]) -> bool {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    peo.iter().all(|&v| {
        let later: Vec<_> = g.neighbor_iter(v).filter(|&w| pos[w] > pos[v]).collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else {
            return true;
        };
        later.iter().all(|&w| w == parent || g.has_edge(parent, w))
    })
}

/// Chordality via maximum cardinality search: the reverse visiting order is a
/// perfect elimination ordering iff the graph is chordal.
pub fn is_chordal(g: &Graph) -> bool {
    let mut peo = mcs_order(g);
    peo.reverse();
    is_perfect_elimination(g, &peo)
}

/// Extends the induced path `path` (starting at its minimum vertex) looking
/// for an induced cycle with at least `min_len` vertices.
fn long_induced_cycle(
    g: &Graph,
    path: &mut Vec<Vertex>,
    on_path: &mut VertexSet,
    min_len: usize,
) -> bool {
    let s = path[0];
    let last = *path.last().expect("non-empty path");
    for w in g.neighbor_iter(last) {
        if w <= s || on_path.contains(w) {
            continue;
        }
        // w may touch only `last` and possibly `s` among the path vertices
        let touches = g.degree_in(w, on_path);
        let closes = g.has_edge(w, s) && path.len() >= 2;
        if touches != 1 + usize::from(closes) {
            continue;
        }
        if closes {
            if path.len() + 1 >= min_len {
                return true;
            }
            continue;
        }
        path.push(w);
        on_path.insert(w);
        if long_induced_cycle(g, path, on_path, min_len) {
            return true;
        }
        on_path.remove(w);
        path.pop();
    }
    false
}

/// Whether the graph has an induced cycle on at least `min_len` vertices.
pub(crate) fn has_induced_cycle_at_least(g: &Graph, min_len: usize) -> bool {
    let n = g.n();
    (0..n).any(|s| {
        let mut path = vec![s];
        let mut on_path = VertexSet::from_iter(n, [s]);
        long_induced_cycle(g, &mut path, &mut on_path, min_len)
    })
}

/// Bipartite with no induced cycle of length six or more (n ≤ [`CHORDAL_BIPARTITE_CAP`]).
pub fn is_chordal_bipartite(g: &Graph) -> Result<bool> {
    if g.n() > CHORDAL_BIPARTITE_CAP {
        return Err(Error::SizeLimit {
            what: "is_chordal_bipartite",
            n: g.n(),
            cap: CHORDAL_BIPARTITE_CAP,
        });
    }
    Ok(g.is_bipartite() && !has_induced_cycle_at_least(g, 6))
}
