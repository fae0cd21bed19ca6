//! Backtracking maps of a small pattern into a host graph.
//!
//! Used for embeddings (injective, arc-preserving) and homomorphisms
//! (arc-preserving only). Pattern vertices are placed in a fixed plan order;
//! candidates for the next vertex are the intersection of the host
//! neighbourhoods demanded by already placed pattern neighbours.

use crate::bits::{self, VertexSet};
use crate::graph::OrientedGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Link {
    /// pattern arc from this position to the earlier one
    ToEarlier,
    /// pattern arc from the earlier position to this one
    FromEarlier,
}

#[derive(Clone, Debug)]
pub(crate) struct Plan {
    order: Vec<usize>,
    back: Vec<Vec<(usize, Link)>>,
}

impl Plan {
    fn from_order(f: &OrientedGraph, order: Vec<usize>) -> Plan {
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                order[..i]
                    .iter()
                    .enumerate()
                    .filter_map(|(j, &b)| {
                        if f.has_arc(a, b) {
                            Some((j, Link::ToEarlier))
                        } else if f.has_arc(b, a) {
                            Some((j, Link::FromEarlier))
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect();
        Plan { order, back }
    }

    /// Vertices sorted by non-increasing total degree, ties by index.
    pub(crate) fn by_degree(f: &OrientedGraph) -> Plan {
        let mut order: Vec<usize> = (0..f.order()).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(f.total_degree(v)));
        Plan::from_order(f, order)
    }

    /// `seeds` first, then greedily the vertex with most links to those already placed.
    pub(crate) fn connected_first(f: &OrientedGraph, seeds: &[usize]) -> Plan {
        let h = f.order();
        let mut order: Vec<usize> = seeds.to_vec();
        let mut placed = bits::from_slice(seeds);
        while order.len() < h {
            let next = (0..h)
                .filter(|&v| !bits::contains(placed, v))
                .max_by_key(|&v| {
                    let nb = f.out_neighbors(v) | f.in_neighbors(v);
                    // prefer links to placed vertices, then high degree, then low index
                    (
                        bits::len(nb & placed),
                        f.total_degree(v),
                        std::cmp::Reverse(v),
                    )
                })
                .expect("unplaced vertex exists");
            order.push(next);
            placed |= bits::singleton(next);
        }
        Plan::from_order(f, order)
    }

    pub(crate) fn len(&self) -> usize {
        self.order.len()
    }

    #[inline]
    fn candidates(&self, g: &OrientedGraph, pos: usize, images: &[usize]) -> VertexSet {
        let mut c = g.vertex_set();
        for &(j, link) in &self.back[pos] {
            c &= match link {
                Link::ToEarlier => g.in_neighbors(images[j]),
                Link::FromEarlier => g.out_neighbors(images[j]),
            };
            if c == 0 {
                break;
            }
        }
        c
    }
}

/// Number of injective arc-preserving maps of the planned pattern into `g`.
pub(crate) fn count_embeddings(g: &OrientedGraph, plan: &Plan) -> u128 {
    if plan.len() > g.order() {
        return 0;
    }
    let mut images = vec![0usize; plan.len()];
    count_from(g, plan, 0, 0, &mut images)
}

fn count_from(
    g: &OrientedGraph,
    plan: &Plan,
    pos: usize,
    used: VertexSet,
    images: &mut [usize],
) -> u128 {
    let cands = plan.candidates(g, pos, images) & !used;
    if pos + 1 == plan.len() {
        return bits::len(cands) as u128;
    }
    let mut total = 0;
    for v in bits::iter(cands) {
        images[pos] = v;
        total += count_from(g, plan, pos + 1, used | bits::singleton(v), images);
    }
    total
}

/// True if some embedding extends the given images of the first `fixed.len()` plan positions.
pub(crate) fn embedding_extends(g: &OrientedGraph, plan: &Plan, fixed: &[usize]) -> bool {
    if plan.len() > g.order() {
        return false;
    }
    let mut images = vec![0usize; plan.len()];
    let mut used = 0;
    for (pos, &v) in fixed.iter().enumerate() {
        if bits::contains(used, v) || !bits::contains(plan.candidates(g, pos, &images), v) {
            return false;
        }
        images[pos] = v;
        used |= bits::singleton(v);
    }
    if fixed.len() == plan.len() {
        return true;
    }
    extends_from(g, plan, fixed.len(), used, &mut images)
}

fn extends_from(
    g: &OrientedGraph,
    plan: &Plan,
    pos: usize,
    used: VertexSet,
    images: &mut [usize],
) -> bool {
    let cands = plan.candidates(g, pos, images) & !used;
    if pos + 1 == plan.len() {
        return cands != 0;
    }
    for v in bits::iter(cands) {
        images[pos] = v;
        if extends_from(g, plan, pos + 1, used | bits::singleton(v), images) {
            return true;
        }
    }
    false
}

/// Some arc-preserving map of the pattern into `g`, indexed by pattern vertex.
pub(crate) fn find_homomorphism(g: &OrientedGraph, plan: &Plan) -> Option<Vec<usize>> {
    let mut images = vec![0usize; plan.len()];
    if plan.len() == 0 || hom_from(g, plan, 0, &mut images) {
        let mut by_vertex = vec![0usize; plan.len()];
        for (pos, &a) in plan.order.iter().enumerate() {
            by_vertex[a] = images[pos];
        }
        Some(by_vertex)
    } else {
        None
    }
}

fn hom_from(g: &OrientedGraph, plan: &Plan, pos: usize, images: &mut [usize]) -> bool {
    if pos == plan.len() {
        return true;
    }
    for v in bits::iter(plan.candidates(g, pos, images)) {
        images[pos] = v;
        if hom_from(g, plan, pos + 1, images) {
            return true;
        }
    }
    false
}
