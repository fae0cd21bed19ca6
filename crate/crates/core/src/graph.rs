//! Bitset-adjacency oriented graphs and the standard constructions on them.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::{self, VertexSet};
use crate::error::{Error, Result};

/// Largest supported vertex count; one neighbourhood fits a single `u128`.
pub const MAX_VERTICES: usize = 128;

/// A loopless digraph without 2-cycles on the vertices `0..n`.
///
/// Both adjacency views are stored and kept consistent by every mutator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedGraph {
    n: usize,
    out_adj: Vec<VertexSet>,
    in_adj: Vec<VertexSet>,
}

impl OrientedGraph {
    /// The arcless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(OrientedGraph {
            n,
            out_adj: vec![0; n],
            in_adj: vec![0; n],
        })
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out_adj.iter().map(|&s| bits::len(s)).sum()
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        bits::contains(self.out_adj[u], v)
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        bits::contains(self.out_adj[u] | self.in_adj[u], v)
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        self.out_adj[v]
    }

    #[inline]
    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        self.in_adj[v]
    }

    #[inline]
    pub fn out_degree(&self, v: usize) -> usize {
        bits::len(self.out_adj[v])
    }

    #[inline]
    pub fn in_degree(&self, v: usize) -> usize {
        bits::len(self.in_adj[v])
    }

    #[inline]
    pub fn total_degree(&self, v: usize) -> usize {
        self.out_degree(v) + self.in_degree(v)
    }

    /// Set of all vertices.
    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        bits::full(self.n)
    }

    /// Inserts the arc `u -> v`.
    ///
    /// Fails when the arc is a loop, already present, or its reverse is present.
    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Domain {
                u,
                v,
                reason: "loop",
            });
        }
        if self.has_arc(v, u) {
            return Err(Error::Domain {
                u,
                v,
                reason: "2-cycle",
            });
        }
        if self.has_arc(u, v) {
            return Err(Error::invalid(format!("arc {u}->{v} already present")));
        }
        self.insert_unchecked(u, v);
        Ok(())
    }

    /// Removes `u -> v`, returning whether it was present.
    pub fn remove_arc(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n || !self.has_arc(u, v) {
            return false;
        }
        self.remove_unchecked(u, v);
        true
    }

    #[inline]
    pub(crate) fn insert_unchecked(&mut self, u: usize, v: usize) {
        self.out_adj[u] |= bits::singleton(v);
        self.in_adj[v] |= bits::singleton(u);
    }

    #[inline]
    pub(crate) fn remove_unchecked(&mut self, u: usize, v: usize) {
        self.out_adj[u] &= !bits::singleton(v);
        self.in_adj[v] &= !bits::singleton(u);
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits::iter(self.out_adj[u]).map(move |v| (u, v)))
    }

    pub fn is_tournament(&self) -> bool {
        self.arc_count() == self.n * (self.n - 1) / 2
    }

    /// True when every vertex is a source or a sink.
    pub fn is_antidirected(&self) -> bool {
        (0..self.n).all(|v| self.out_adj[v] == 0 || self.in_adj[v] == 0)
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm on bitsets.
        let mut remaining = self.vertex_set();
        while remaining != 0 {
            let source = bits::iter(remaining).find(|&v| self.in_adj[v] & remaining == 0);
            match source {
                Some(v) => remaining &= !bits::singleton(v),
                None => return false,
            }
        }
        true
    }

    /// Returns the graph with vertex `v` removed; the map sends new indices to old ones.
    pub fn delete_vertex(&self, v: usize) -> Result<(OrientedGraph, Vec<usize>)> {
        self.check_vertex(v)?;
        if self.n == 1 {
            return Err(Error::invalid("cannot delete the only vertex"));
        }
        let map: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        Ok((self.induced_on(&map), map))
    }

    /// Subgraph induced on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced_on(&self, vertices: &[usize]) -> OrientedGraph {
        let k = vertices.len();
        let mut g = OrientedGraph {
            n: k,
            out_adj: vec![0; k],
            in_adj: vec![0; k],
        };
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate() {
                if self.has_arc(a, b) {
                    g.insert_unchecked(i, j);
                }
            }
        }
        g
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<OrientedGraph> {
        if perm.len() != self.n {
            return Err(Error::invalid("permutation length differs from order"));
        }
        let mut seen = 0u128;
        for &p in perm {
            if p >= self.n || bits::contains(seen, p) {
                return Err(Error::invalid("not a permutation"));
            }
            seen |= bits::singleton(p);
        }
        let mut g = OrientedGraph::empty(self.n)?;
        for (u, v) in self.arcs() {
            g.insert_unchecked(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Checks every representation invariant over all vertex pairs.
    pub fn validate(&self) -> Result<()> {
        if self.out_adj.len() != self.n || self.in_adj.len() != self.n {
            return Err(Error::Internal("adjacency length mismatch".into()));
        }
        let outside = !self.vertex_set();
        for u in 0..self.n {
            if (self.out_adj[u] | self.in_adj[u]) & outside != 0 {
                return Err(Error::Internal(format!(
                    "vertex {u} has out-of-range neighbour"
                )));
            }
            for v in 0..self.n {
                let uv = self.has_arc(u, v);
                if uv != bits::contains(self.in_adj[v], u) {
                    return Err(Error::Internal(format!(
                        "adjacency views disagree at ({u}, {v})"
                    )));
                }
                if u == v && uv {
                    return Err(Error::Domain {
                        u,
                        v,
                        reason: "loop",
                    });
                }
                if uv && self.has_arc(v, u) {
                    return Err(Error::Domain {
                        u,
                        v,
                        reason: "2-cycle",
                    });
                }
            }
        }
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::invalid(format!(
                "vertex {v} out of range for order {}",
                self.n
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for OrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrientedGraph(n={}, arcs=[", self.n)?;
        for (i, (u, v)) in self.arcs().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}->{v}")?;
        }
        f.write_str("])")
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "vertex count",
            value: n,
            limit: MAX_VERTICES,
        });
    }
    Ok(())
}

/// Blow-up class sizes, one per vertex of the base tournament.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartSizes(Vec<usize>);

impl PartSizes {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::invalid("at least one part is required"));
        }
        if sizes.contains(&0) {
            return Err(Error::invalid("part sizes must be positive"));
        }
        Ok(PartSizes(sizes))
    }

    /// `k` parts whose sizes sum to `n` and differ by at most one.
    pub fn balanced(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::invalid(format!(
                "cannot split {n} vertices into {k} parts"
            )));
        }
        Ok(PartSizes(balanced_sizes(n, k)))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

fn balanced_sizes(n: usize, k: usize) -> Vec<usize> {
    (0..k).map(|i| n / k + usize::from(i < n % k)).collect()
}

/// `TT_r`: arcs `i -> j` for every `i < j`.
pub fn make_transitive_tournament(r: usize) -> Result<OrientedGraph> {
    let mut g = OrientedGraph::empty(r)?;
    for i in 0..r {
        for j in i + 1..r {
            g.insert_unchecked(i, j);
        }
    }
    Ok(g)
}

/// The directed cycle `0 -> 1 -> ... -> k-1 -> 0`.
pub fn make_directed_cycle(k: usize) -> Result<OrientedGraph> {
    if k < 3 {
        return Err(Error::invalid(format!(
            "directed cycle needs at least 3 vertices, got {k}"
        )));
    }
    let mut g = OrientedGraph::empty(k)?;
    for i in 0..k {
        g.insert_unchecked(i, (i + 1) % k);
    }
    Ok(g)
}

/// Edge count of the balanced complete `k`-partite graph on `n` vertices.
pub fn turan_edge_count(n: usize, k: usize) -> u64 {
    if k == 0 {
        return 0;
    }
    let k = k.min(n.max(1));
    let pairs = |x: usize| (x as u64) * (x as u64).saturating_sub(1) / 2;
    pairs(n) - balanced_sizes(n, k).into_iter().map(pairs).sum::<u64>()
}

/// Replaces each vertex of a tournament by an independent class.
pub fn blow_up(base: &OrientedGraph, parts: &PartSizes) -> Result<OrientedGraph> {
    if !base.is_tournament() {
        return Err(Error::invalid("blow-up base must be a tournament"));
    }
    if parts.sizes().len() != base.order() {
        return Err(Error::invalid(format!(
            "{} part sizes given for a base of order {}",
            parts.sizes().len(),
            base.order()
        )));
    }
    let total = parts.total();
    if total > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "blow-up order",
            value: total,
            limit: MAX_VERTICES,
        });
    }
    let mut class_of = Vec::with_capacity(total);
    for (i, &s) in parts.sizes().iter().enumerate() {
        class_of.extend(std::iter::repeat_n(i, s));
    }
    let mut g = OrientedGraph::empty(total)?;
    for x in 0..total {
        for y in 0..total {
            if base.has_arc(class_of[x], class_of[y]) {
                g.insert_unchecked(x, y);
            }
        }
    }
    Ok(g)
}

/// Each pair gets an arc with probability `arc_probability`, oriented by a fair coin.
pub fn random_oriented_graph(n: usize, arc_probability: f64, seed: u64) -> Result<OrientedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_oriented_graph_with(n, arc_probability, &mut rng)
}

pub fn random_oriented_graph_with<R: Rng>(
    n: usize,
    arc_probability: f64,
    rng: &mut R,
) -> Result<OrientedGraph> {
    if !(0.0..=1.0).contains(&arc_probability) {
        return Err(Error::invalid(format!(
            "arc probability {arc_probability} outside [0, 1]"
        )));
    }
    let mut g = OrientedGraph::empty(n)?;
    for j in 1..n {
        for i in 0..j {
            if rng.random_bool(arc_probability) {
                if rng.random_bool(0.5) {
                    g.insert_unchecked(i, j);
                } else {
                    g.insert_unchecked(j, i);
                }
            }
        }
    }
    Ok(g)
}

/// A uniformly random labelled oriented graph with exactly `arcs` arcs.
pub fn random_with_arc_count<R: Rng>(n: usize, arcs: usize, rng: &mut R) -> Result<OrientedGraph> {
    let pairs = pair_order(n);
    if arcs > pairs.len() {
        return Err(Error::invalid(format!(
            "{arcs} arcs do not fit on {n} vertices"
        )));
    }
    let mut g = OrientedGraph::empty(n)?;
    let mut chosen = pairs;
    chosen.shuffle(rng);
    for &(i, j) in &chosen[..arcs] {
        if rng.random_bool(0.5) {
            g.insert_unchecked(i, j);
        } else {
            g.insert_unchecked(j, i);
        }
    }
    Ok(g)
}

/// Unordered pairs in the order `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn pair_order(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

pub(crate) fn binomial2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transitive_tournament_small_cases() {
        let t1 = make_transitive_tournament(1).unwrap();
        assert_eq!(t1.arc_count(), 0);

        let t3 = make_transitive_tournament(3).unwrap();
        assert_eq!(t3.arcs().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
        assert!(t3.is_tournament());
        assert!(t3.is_acyclic());
    }

    #[test]
    fn transitive_tournament_triples_are_transitive() {
        let t8 = make_transitive_tournament(8).unwrap();
        assert_eq!(t8.arc_count(), 28);
        for a in 0..8 {
            for b in a + 1..8 {
                for c in b + 1..8 {
                    let sub = t8.induced_on(&[a, b, c]);
                    assert!(sub.is_tournament() && sub.is_acyclic());
                }
            }
        }
        let mut outs: Vec<_> = (0..8).map(|v| t8.out_degree(v)).collect();
        outs.sort_unstable();
        assert_eq!(outs, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn capacity_errors() {
        assert!(matches!(
            make_transitive_tournament(0),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(
            make_transitive_tournament(MAX_VERTICES + 1),
            Err(Error::Capacity { .. })
        ));
        assert!(make_transitive_tournament(MAX_VERTICES).is_ok());
    }

    #[test]
    fn directed_cycles() {
        let c3 = make_directed_cycle(3).unwrap();
        assert_eq!(c3.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 0)]);
        let c5 = make_directed_cycle(5).unwrap();
        assert_eq!(c5.arc_count(), 5);
        assert!((0..5).all(|v| c5.out_degree(v) == 1 && c5.in_degree(v) == 1));
        assert!(make_directed_cycle(2).is_err());
        assert!(!c5.is_acyclic());
    }

    #[test]
    fn turan_counts() {
        assert_eq!(turan_edge_count(6, 3), 12);
        assert_eq!(turan_edge_count(5, 3), 8);
        assert_eq!(turan_edge_count(4, 3), 5);
        for k in 1..10 {
            assert_eq!(turan_edge_count(3 * k, 3), 3 * (k as u64).pow(2));
        }
        for n in 1..12 {
            for k in n..n + 3 {
                assert_eq!(turan_edge_count(n, k), (n * (n - 1) / 2) as u64);
            }
        }
        assert_eq!(turan_edge_count(7, 1), 0);
    }

    #[test]
    fn blow_up_examples() {
        let c3 = make_directed_cycle(3).unwrap();
        let g = blow_up(&c3, &PartSizes::new(vec![2, 2, 2]).unwrap()).unwrap();
        assert_eq!(g.arc_count(), 12);
        g.validate().unwrap();

        let single = OrientedGraph::empty(1).unwrap();
        let e = blow_up(&single, &PartSizes::new(vec![5]).unwrap()).unwrap();
        assert_eq!((e.order(), e.arc_count()), (5, 0));

        let t2 = make_transitive_tournament(2).unwrap();
        let k33 = blow_up(&t2, &PartSizes::new(vec![3, 3]).unwrap()).unwrap();
        assert_eq!(k33.arc_count(), 9);
        assert!(k33.is_antidirected());

        let not_tournament = OrientedGraph::empty(3).unwrap();
        assert!(blow_up(&not_tournament, &PartSizes::new(vec![1, 1, 1]).unwrap()).is_err());
        assert!(blow_up(&t2, &PartSizes::new(vec![1]).unwrap()).is_err());
        assert!(PartSizes::new(vec![1, 0]).is_err());
    }

    #[test]
    fn blow_up_arc_count_formula() {
        let base = make_transitive_tournament(4).unwrap();
        let parts = PartSizes::new(vec![3, 1, 4, 2]).unwrap();
        let g = blow_up(&base, &parts).unwrap();
        let expected: usize = base
            .arcs()
            .map(|(i, j)| parts.sizes()[i] * parts.sizes()[j])
            .sum();
        assert_eq!(g.arc_count(), expected);
    }

    #[test]
    fn random_graph_extremes_and_determinism() {
        assert_eq!(random_oriented_graph(10, 0.0, 1).unwrap().arc_count(), 0);
        assert!(random_oriented_graph(10, 1.0, 1).unwrap().is_tournament());
        let a = random_oriented_graph(20, 0.5, 7).unwrap();
        let b = random_oriented_graph(20, 0.5, 7).unwrap();
        assert_eq!(a, b);
        a.validate().unwrap();
        assert!(random_oriented_graph(5, 1.5, 0).is_err());
    }

    #[test]
    fn mutation_keeps_invariants() {
        let mut g = OrientedGraph::empty(4).unwrap();
        g.add_arc(0, 1).unwrap();
        assert!(matches!(g.add_arc(1, 0), Err(Error::Domain { .. })));
        assert!(matches!(g.add_arc(2, 2), Err(Error::Domain { .. })));
        assert!(g.add_arc(0, 1).is_err());
        g.add_arc(2, 3).unwrap();
        g.validate().unwrap();
        assert!(g.remove_arc(0, 1));
        assert!(!g.remove_arc(0, 1));
        g.validate().unwrap();
        assert_eq!(g.arc_count(), 1);

        let t4 = make_transitive_tournament(4).unwrap();
        let (h, map) = t4.delete_vertex(1).unwrap();
        assert_eq!(map, vec![0, 2, 3]);
        assert_eq!(h, make_transitive_tournament(3).unwrap());
    }

    #[test]
    fn random_arc_count_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for m in 0..=15 {
            let g = random_with_arc_count(6, m, &mut rng).unwrap();
            assert_eq!(g.arc_count(), m);
            g.validate().unwrap();
        }
        assert!(random_with_arc_count(6, 16, &mut rng).is_err());
    }
}
