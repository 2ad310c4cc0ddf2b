use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Chain ordering plus the proper ordered chain partition of a connected
/// chain graph.
///
/// `x_order` lists X by nondecreasing neighbourhood and `y_order` lists Y by
/// nonincreasing neighbourhood; equal neighbourhoods are ordered by vertex id.
/// `x_classes[i]` groups equal X neighbourhoods (smallest first), and
/// `y_classes[i]` holds the Y vertices first reached by `x_classes[i]`.
/// `x_pendants ⊆ x_classes[0]` and `y_pendants ⊆ y_classes[k-1]` are exactly
/// the degree-one vertices of the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainPartition {
    pub x_order: Vec<Vertex>,
    pub y_order: Vec<Vertex>,
    pub x_classes: Vec<Vec<Vertex>>,
    pub y_classes: Vec<Vec<Vertex>>,
    pub x_pendants: Vec<Vertex>,
    pub y_pendants: Vec<Vertex>,
}

impl ChainPartition {
    pub fn class_count(&self) -> usize {
        self.x_classes.len()
    }
}

/// Builds the partition from a chosen X side, or `None` if the neighbourhoods
/// do not nest.
fn build(g: &Graph, xs: Vec<Vertex>, ys: Vec<Vertex>) -> Option<ChainPartition> {
    let mut x_order = xs;
    x_order.sort_by_key(|&v| (g.degree(v), v));
    let mut y_order = ys;
    y_order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let nb = |v| g.neighbors(v).expect("in range");
    let nested = |order: &[Vertex]| order.windows(2).all(|w| nb(w[0]).is_subset(&nb(w[1])));
    let y_rev: Vec<_> = y_order.iter().rev().copied().collect();
    if !nested(&x_order) || !nested(&y_rev) {
        return None;
    }

    let mut x_classes: Vec<Vec<Vertex>> = Vec::new();
    for &v in &x_order {
        match x_classes.last_mut() {
            Some(c) if nb(c[0]) == nb(v) => c.push(v),
            _ => x_classes.push(vec![v]),
        }
    }
    let mut reached = VertexSet::empty(g.n());
    let mut y_classes = Vec::with_capacity(x_classes.len());
    for c in &x_classes {
        let fresh = nb(c[0]).difference(&reached);
        reached = reached.union(&fresh);
        let mut cls: Vec<Vertex> = fresh.iter().collect();
        cls.sort_by_key(|&v| y_order.iter().position(|&y| y == v));
        y_classes.push(cls);
    }
    if y_classes.len() != x_classes.len() || y_classes.iter().any(Vec::is_empty) {
        return None;
    }
    let x_pendants: Vec<_> = x_classes[0]
        .iter()
        .copied()
        .filter(|&v| g.degree(v) == 1)
        .collect();
    let y_pendants: Vec<_> = y_classes
        .last()
        .expect("non-empty")
        .iter()
        .copied()
        .filter(|&v| g.degree(v) == 1)
        .collect();
    Some(ChainPartition {
        x_order,
        y_order,
        x_classes,
        y_classes,
        x_pendants,
        y_pendants,
    })
}

/// Recognizes connected chain graphs: 2-colour, order each side by degree and
/// verify the nesting. X is the smaller colour class (ties: the class holding
/// vertex 0). Graphs with fewer than two vertices are not reported as chain graphs.
pub fn recognize_chain(g: &Graph) -> Result<Option<ChainPartition>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() < 2 {
        return Ok(None);
    }
    let Some(color) = g.two_coloring() else {
        return Ok(None);
    };
    let side = |c| -> Vec<Vertex> { g.vertices().filter(|&v| color[v] == c).collect() };
    let (zero, one) = (side(0), side(1));
    let (xs, ys) = if one.len() < zero.len() {
        (one, zero)
    } else {
        (zero, one)
    };
    let p = build(g, xs, ys);
    debug_assert!(p.as_ref().is_none_or(|p| verify_chain_partition(g, p)));
    Ok(p)
}

/// Re-derives every invariant of a declared chain partition.
pub fn verify_chain_partition(g: &Graph, p: &ChainPartition) -> bool {
    let n = g.n();
    let xs = VertexSet::from_iter(n, p.x_order.iter().copied().filter(|&v| v < n));
    let ys = VertexSet::from_iter(n, p.y_order.iter().copied().filter(|&v| v < n));
    if xs.len() != p.x_order.len()
        || ys.len() != p.y_order.len()
        || !xs.is_disjoint(&ys)
        || xs.len() + ys.len() != n
        || !g.is_stable_on(&xs)
        || !g.is_stable_on(&ys)
        || !g.is_connected()
    {
        return false;
    }
    let Some(expected) = build(g, p.x_order.clone(), p.y_order.clone()) else {
        return false;
    };
    let all_pendants = g.pendant_vertices();
    let mut declared = p.x_pendants.clone();
    declared.extend(&p.y_pendants);
    declared.sort_unstable();
    expected == *p && declared == all_pendants.to_vec()
}
