//! Exact canonical forms by exhaustive relabelling.
//!
//! The canonical form of `g` is the lexicographically smallest row-major
//! adjacency bit string over all vertex permutations. Because digraph6 keeps
//! that bit order, the form is stored as the digraph6 string of the minimising
//! relabelling; two graphs are isomorphic iff their forms are equal.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::io::digraph6;

/// Largest order handled by the permutation-exhaustive strategy.
pub const MAX_CANONICAL_ORDER: usize = 10;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// The canonically labelled representative.
    pub fn to_graph(&self) -> OrientedGraph {
        digraph6::decode(&self.0).expect("canonical forms are valid digraph6")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

pub fn canonical_form(g: &OrientedGraph) -> Result<CanonicalForm> {
    Ok(CanonicalForm(digraph6::encode(&canonical_labeling(g)?)))
}

/// The relabelling of `g` whose adjacency matrix is lexicographically least.
pub fn canonical_labeling(g: &OrientedGraph) -> Result<OrientedGraph> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::Budget(format!(
            "exact canonical form needs order <= {MAX_CANONICAL_ORDER}, got {n}"
        )));
    }
    // perm[i] is the old vertex placed at new position i
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best_key = matrix_key(g, &perm);
    let mut best = perm.clone();
    // Heap's algorithm, iterative form
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let key = matrix_key(g, &perm);
            if key < best_key {
                best_key = key;
                best.copy_from_slice(&perm);
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    let mut new_index = vec![0usize; n];
    for (pos, &old) in best.iter().enumerate() {
        new_index[old] = pos;
    }
    g.relabel(&new_index)
}

/// Row-major adjacency bits of the relabelled graph; bit (0,0) is most significant.
#[inline]
fn matrix_key(g: &OrientedGraph, perm: &[usize]) -> u128 {
    let mut key = 0u128;
    for &a in perm {
        let row = g.out_neighbors(a);
        for &b in perm {
            key = key << 1 | (row >> b & 1);
        }
    }
    key
}

/// An isomorphism `a -> b` as a vertex map, found by degree-guided backtracking.
///
/// Works at any order, unlike [`canonical_form`].
pub fn find_isomorphism(a: &OrientedGraph, b: &OrientedGraph) -> Option<Vec<usize>> {
    let n = a.order();
    if n != b.order() || a.arc_count() != b.arc_count() {
        return None;
    }
    let signature = |g: &OrientedGraph, v: usize| (g.out_degree(v), g.in_degree(v));
    let mut a_sig: Vec<_> = (0..n).map(|v| signature(a, v)).collect();
    let mut b_sig: Vec<_> = (0..n).map(|v| signature(b, v)).collect();
    let (ra, rb) = (a_sig.clone(), b_sig.clone());
    a_sig.sort_unstable();
    b_sig.sort_unstable();
    if a_sig != b_sig {
        return None;
    }
    // place the vertices of `a` with the rarest signatures first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (ra.iter().filter(|&&s| s == ra[v]).count(), v));
    let mut search = IsoSearch {
        a,
        b,
        ra,
        rb,
        order,
        map: vec![usize::MAX; n],
        used: 0,
    };
    search.extend(0).then_some(search.map)
}

struct IsoSearch<'g> {
    a: &'g OrientedGraph,
    b: &'g OrientedGraph,
    ra: Vec<(usize, usize)>,
    rb: Vec<(usize, usize)>,
    order: Vec<usize>,
    map: Vec<usize>,
    used: u128,
}

impl IsoSearch<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        for w in 0..self.b.order() {
            if self.used >> w & 1 == 1 || self.ra[v] != self.rb[w] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&u| {
                let m = self.map[u];
                self.a.has_arc(u, v) == self.b.has_arc(m, w)
                    && self.a.has_arc(v, u) == self.b.has_arc(w, m)
            });
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used |= 1 << w;
            if self.extend(depth + 1) {
                return true;
            }
            self.used &= !(1 << w);
        }
        self.map[v] = usize::MAX;
        false
    }
}

pub fn is_isomorphic(a: &OrientedGraph, b: &OrientedGraph) -> Result<bool> {
    if a.order() != b.order() || a.arc_count() != b.arc_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_directed_cycle, make_transitive_tournament, random_oriented_graph};

    #[test]
    fn relabelling_invariance() {
        let g = random_oriented_graph(7, 0.6, 5).unwrap();
        let form = canonical_form(&g).unwrap();
        let h = g.relabel(&[3, 6, 0, 1, 5, 2, 4]).unwrap();
        assert_eq!(canonical_form(&h).unwrap(), form);
        assert!(is_isomorphic(&g, &h).unwrap());
        let map = find_isomorphism(&g, &h).unwrap();
        for (u, v) in g.arcs() {
            assert!(h.has_arc(map[u], map[v]));
        }
        let other = random_oriented_graph(7, 0.6, 6).unwrap();
        assert_eq!(
            find_isomorphism(&g, &other).is_some(),
            is_isomorphic(&g, &other).unwrap()
        );
    }

    #[test]
    fn distinguishes_tt3_and_c3() {
        let tt3 = canonical_form(&make_transitive_tournament(3).unwrap()).unwrap();
        let c3 = canonical_form(&make_directed_cycle(3).unwrap()).unwrap();
        assert_ne!(tt3, c3);
        // least matrix for TT_3 puts the sink first: rows 000, 100, 110
        let canon = canonical_labeling(&make_transitive_tournament(3).unwrap()).unwrap();
        assert_eq!(
            canon.arcs().collect::<Vec<_>>(),
            vec![(1, 0), (2, 0), (2, 1)]
        );
    }

    #[test]
    fn order_limit() {
        let g = OrientedGraph::empty(11).unwrap();
        assert!(matches!(canonical_form(&g), Err(Error::Budget(_))));
        assert!(canonical_form(&OrientedGraph::empty(1).unwrap()).is_ok());
    }
}
