//! Exact copy counting.
//!
//! Transitive tournaments are counted by extending along nested common
//! out-neighbourhoods: a copy of `TT_r` is visited once, through its unique
//! topological order. Large candidate sets are memoised so that highly
//! structured hosts (transitive tournaments in particular) stay polynomial.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::arith::binomial;
use crate::bits::{self, VertexSet};
use crate::embed;
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::pattern::{Pattern, PatternKind};

/// Candidate sets at least this large are memoised.
const MEMO_MIN: usize = 10;

/// `(N_1, ..., N_rmax)` where `N_r` counts copies of `TT_r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CopyProfile {
    counts: Vec<u128>,
}

impl CopyProfile {
    pub fn r_max(&self) -> usize {
        self.counts.len()
    }

    /// `N_r`, with `N_0 = 1` (the empty vertex set) and zero past `r_max`.
    pub fn get(&self, r: usize) -> u128 {
        match r {
            0 => 1,
            _ => self.counts.get(r - 1).copied().unwrap_or(0),
        }
    }

    pub fn counts(&self) -> &[u128] {
        &self.counts
    }
}

struct Profiler<'g> {
    g: &'g OrientedGraph,
    memo: HashMap<(VertexSet, usize), Vec<u128>>,
}

impl Profiler<'_> {
    /// Adds the number of `TT_j` inside `set` to `out[j]` for `j <= len`.
    fn accumulate(&mut self, set: VertexSet, len: usize, out: &mut [u128]) {
        out[0] += 1;
        if len == 0 || set == 0 {
            return;
        }
        if len == 1 {
            out[1] += bits::len(set) as u128;
            return;
        }
        if bits::len(set) >= MEMO_MIN {
            let key = (set, len);
            if !self.memo.contains_key(&key) {
                let mut local = vec![0u128; len + 1];
                self.extend(set, len, &mut local);
                self.memo.insert(key, local);
            }
            // index 0 of a memo entry is always zero
            for (o, c) in out.iter_mut().zip(&self.memo[&key]).skip(1) {
                *o += c;
            }
            return;
        }
        self.extend(set, len, out);
    }

    /// Adds every `TT_j` (`1 <= j <= len`) in `set` to `out[j]`, split by its source.
    fn extend(&mut self, set: VertexSet, len: usize, out: &mut [u128]) {
        for v in bits::iter(set) {
            let next = set & self.g.out_neighbors(v);
            self.accumulate(next, len - 1, &mut out[1..]);
        }
    }
}

/// Counts of `TT_1 ..= TT_rmax` in one traversal.
pub fn count_profile(g: &OrientedGraph, r_max: usize) -> CopyProfile {
    if r_max == 0 {
        return CopyProfile { counts: vec![] };
    }
    let mut out = vec![0u128; r_max + 1];
    let mut profiler = Profiler {
        g,
        memo: HashMap::new(),
    };
    profiler.accumulate(g.vertex_set(), r_max, &mut out);
    out.remove(0);
    CopyProfile { counts: out }
}

/// Number of `r`-vertex subsets inducing a transitive tournament.
pub fn count_tt(g: &OrientedGraph, r: usize) -> u128 {
    count_profile(g, r).get(r)
}

/// `sum_v C(d+(v), t)`: copies of the out-star `K_{1,t}`.
pub fn count_out_stars(g: &OrientedGraph, t: usize) -> u128 {
    (0..g.order())
        .map(|v| binomial(g.out_degree(v) as u64, t as u64))
        .sum()
}

/// Number of vertices sending an arc to every member of `vertices`.
pub fn common_in_degree(g: &OrientedGraph, vertices: &[usize]) -> Result<usize> {
    if vertices.is_empty() {
        return Err(Error::invalid("common in-degree of an empty set"));
    }
    let mut common = g.vertex_set();
    for &v in vertices {
        if v >= g.order() {
            return Err(Error::invalid(format!("vertex {v} out of range")));
        }
        common &= g.in_neighbors(v);
    }
    Ok(bits::len(common))
}

/// Copies of `K_{s,t}`: the sum over `t`-sets `T` of `C(d-(T), s)`.
pub fn count_kst(g: &OrientedGraph, s: usize, t: usize) -> Result<u128> {
    if s == 0 || t == 0 {
        return Err(Error::invalid("K_{s,t} needs s, t >= 1"));
    }
    Ok(sum_over_t_sets(g, t, &|common| {
        binomial(common as u64, s as u64)
    }))
}

/// Applies `weight` to the common in-degree of every `t`-subset and sums.
///
/// Subsets are grown in increasing vertex order with the in-neighbourhood
/// intersection carried along the prefix.
fn sum_over_t_sets(g: &OrientedGraph, t: usize, weight: &dyn Fn(usize) -> u128) -> u128 {
    fn grow(
        g: &OrientedGraph,
        start: usize,
        left: usize,
        common: VertexSet,
        weight: &dyn Fn(usize) -> u128,
    ) -> u128 {
        if left == 0 {
            return weight(bits::len(common));
        }
        let mut total = 0;
        for v in start..=g.order() - left {
            let next = common & g.in_neighbors(v);
            if next == 0 {
                // every superset has common in-degree zero
                total += weight(0) * binomial((g.order() - v - 1) as u64, (left - 1) as u64);
                continue;
            }
            total += grow(g, v + 1, left - 1, next, weight);
        }
        total
    }
    if t > g.order() {
        return 0;
    }
    grow(g, 0, t, g.vertex_set(), weight)
}

/// `sum_T d-(T)` over all `t`-sets; equals [`count_out_stars`].
pub fn total_common_in_degree(g: &OrientedGraph, t: usize) -> u128 {
    if t == 0 {
        return 0;
    }
    sum_over_t_sets(g, t, &|common| common as u128)
}

/// Unlabelled copies of `f` in `g` by backtracking: embeddings over automorphisms.
pub fn count_generic(g: &OrientedGraph, f: &Pattern) -> Result<u128> {
    let embeddings = embed::count_embeddings(g, f.count_plan());
    let aut = f.automorphism_count() as u128;
    if !embeddings.is_multiple_of(aut) {
        return Err(Error::Internal(format!(
            "{embeddings} embeddings not divisible by {aut} automorphisms"
        )));
    }
    Ok(embeddings / aut)
}

/// Copies of `f`, using the specialised counter when `f` has one.
pub fn count_copies(g: &OrientedGraph, f: &Pattern) -> Result<u128> {
    match f.kind() {
        PatternKind::Transitive(r) => Ok(count_tt(g, r)),
        PatternKind::CompleteBipartite { sources, sinks } => count_kst(g, sources, sinks),
        PatternKind::General => count_generic(g, f),
    }
}
