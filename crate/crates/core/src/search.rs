//! Exact oriented Turán numbers and exhaustive minimum-copy scans.
//!
//! Every search walks the unordered pairs in the order `(0,1), (0,2), (1,2),
//! (0,3), ...` and assigns each pair one of "no arc", `i -> j`, `j -> i`.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::ratio;
use crate::canonical::{canonical_form, CanonicalForm, MAX_CANONICAL_ORDER};
use crate::count::count_copies;
use crate::error::{Error, Result};
use crate::graph::{
    binomial2, make_transitive_tournament, pair_order, random_with_arc_count, OrientedGraph,
};
use crate::pattern::Pattern;
use crate::suite::instance_rng;

/// Default exhaustive limit: `3^C(6,2)` labelled graphs.
pub const DEFAULT_EXHAUSTIVE_ORDER: usize = 6;
pub const DEFAULT_WITNESS_CAP: usize = 16;
pub const DEFAULT_SAMPLES: u64 = 1_000_000;

#[derive(Clone, Debug)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
    /// Largest order for which full labelled enumeration is attempted.
    pub max_exhaustive_order: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: None,
            time_limit: None,
            max_exhaustive_order: DEFAULT_EXHAUSTIVE_ORDER,
        }
    }
}

/// Result of [`exo_exact`].
#[derive(Clone, Debug, Serialize)]
pub struct ExtremalCertificate {
    pub n: usize,
    pub pattern_id: CanonicalForm,
    /// `exo(n, F)` when `exact`; otherwise the best lower bound found.
    pub value: usize,
    pub exact: bool,
    /// Canonical forms of `F`-free graphs with `value` arcs, least first, capped.
    pub witnesses: Vec<CanonicalForm>,
    #[serde(skip)]
    pub nodes_explored: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

struct Incumbent {
    value: usize,
    forms: BTreeSet<CanonicalForm>,
}

struct Shared {
    best: AtomicUsize,
    nodes: AtomicU64,
    stop: AtomicBool,
    incumbent: Mutex<Incumbent>,
    cap: usize,
    deadline: Option<Instant>,
    max_nodes: Option<u64>,
}

impl Shared {
    fn record(&self, g: &OrientedGraph, arcs: usize) {
        let form = if self.cap > 0 {
            Some(canonical_form(g).expect("search orders are within the canonical limit"))
        } else {
            None
        };
        let mut inc = self.incumbent.lock().expect("incumbent lock");
        if arcs > inc.value {
            inc.value = arcs;
            inc.forms.clear();
        }
        if arcs == inc.value {
            if let Some(form) = form {
                inc.forms.insert(form);
                if inc.forms.len() > self.cap {
                    inc.forms.pop_last();
                }
            }
        }
        self.best.fetch_max(arcs, Ordering::AcqRel);
    }

    fn charge(&self, nodes: u64) {
        let total = self.nodes.fetch_add(nodes, Ordering::Relaxed) + nodes;
        if self.max_nodes.is_some_and(|m| total >= m)
            || self.deadline.is_some_and(|d| Instant::now() >= d)
        {
            self.stop.store(true, Ordering::Relaxed);
        }
    }
}

/// Vertices whose total degrees must end up non-increasing.
const SYMMETRY_PREFIX: usize = 4;
const CHARGE_EVERY: u64 = 4096;

struct Search<'a> {
    f: &'a Pattern,
    pairs: &'a [(usize, usize)],
    /// `open[idx][v]`: pairs at index `>= idx` that touch `v`
    open: &'a [Vec<usize>],
    shared: &'a Shared,
    g: OrientedGraph,
    arcs: usize,
    pending: u64,
}

impl Search<'_> {
    fn dfs(&mut self, idx: usize) {
        self.pending += 1;
        if self.pending == CHARGE_EVERY {
            self.shared.charge(self.pending);
            self.pending = 0;
        }
        if self.shared.stop.load(Ordering::Relaxed) {
            return;
        }
        let bound = self.arcs + self.pairs.len() - idx;
        let best = self.shared.best.load(Ordering::Relaxed);
        if bound < best || (bound == best && self.shared.cap == 0) {
            return;
        }
        if !self.degree_order_possible(idx) {
            return;
        }
        if idx == self.pairs.len() {
            self.shared.record(&self.g, self.arcs);
            return;
        }
        let (i, j) = self.pairs[idx];
        for (a, b) in [(i, j), (j, i)] {
            self.g.insert_unchecked(a, b);
            if !self.f.has_copy_through_arc(&self.g, a, b) {
                self.arcs += 1;
                self.dfs(idx + 1);
                self.arcs -= 1;
            }
            self.g.remove_unchecked(a, b);
        }
        self.dfs(idx + 1);
    }

    /// Can the first vertices still end with non-increasing total degree?
    fn degree_order_possible(&self, idx: usize) -> bool {
        let k = SYMMETRY_PREFIX.min(self.g.order());
        for a in 0..k {
            let upper = self.g.total_degree(a) + self.open[idx][a];
            for b in a + 1..k {
                if upper < self.g.total_degree(b) {
                    return false;
                }
            }
        }
        true
    }
}

/// `exo(n, F)` by branch and bound, with up to `witness_cap` extremal graphs.
///
/// Pruning: incremental detection of `F` through the newest arc, the bound
/// `arcs + undecided pairs`, and non-increasing total degree on the first
/// vertices. The top two pair decisions are searched in parallel against a
/// shared incumbent. If the budget runs out the certificate is not `exact`.
pub fn exo_exact(
    n: usize,
    f: &Pattern,
    budget: &Budget,
    witness_cap: usize,
) -> Result<ExtremalCertificate> {
    let started = Instant::now();
    if f.arc_count() == 0 {
        return Err(Error::invalid(
            "exo is undefined for a pattern without arcs",
        ));
    }
    let pattern_id = canonical_form(f.graph())?;
    if n < f.order() {
        let witnesses = if witness_cap > 0 {
            vec![canonical_form(&make_transitive_tournament(n)?)?]
        } else {
            vec![]
        };
        return Ok(ExtremalCertificate {
            n,
            pattern_id,
            value: binomial2(n),
            exact: true,
            witnesses,
            nodes_explored: 0,
            elapsed: started.elapsed(),
        });
    }
    let empty = OrientedGraph::empty(n)?;
    if witness_cap > 0 && n > MAX_CANONICAL_ORDER {
        return Err(Error::Budget(format!(
            "witness collection needs order <= {MAX_CANONICAL_ORDER}; pass a witness cap of 0"
        )));
    }
    let pairs = pair_order(n);
    let open: Vec<Vec<usize>> = (0..=pairs.len())
        .map(|idx| {
            let mut counts = vec![0usize; n];
            for &(i, j) in &pairs[idx..] {
                counts[i] += 1;
                counts[j] += 1;
            }
            counts
        })
        .collect();
    let shared = Shared {
        best: AtomicUsize::new(0),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        incumbent: Mutex::new(Incumbent {
            value: 0,
            forms: BTreeSet::new(),
        }),
        cap: witness_cap,
        deadline: budget.time_limit.map(|t| started + t),
        max_nodes: budget.max_nodes,
    };

    let split = pairs.len().min(2);
    let prefixes: Vec<Vec<u8>> = (0..3usize.pow(split as u32))
        .map(|code| {
            (0..split)
                .map(|d| (code / 3usize.pow(d as u32) % 3) as u8)
                .collect()
        })
        .collect();
    prefixes.par_iter().for_each(|prefix| {
        let mut g = empty.clone();
        let mut arcs = 0;
        for (d, &c) in prefix.iter().enumerate() {
            let (i, j) = pairs[d];
            let (a, b) = match c {
                0 => continue,
                1 => (i, j),
                _ => (j, i),
            };
            g.insert_unchecked(a, b);
            if f.has_copy_through_arc(&g, a, b) {
                return;
            }
            arcs += 1;
        }
        let mut search = Search {
            f,
            pairs: &pairs,
            open: &open,
            shared: &shared,
            g,
            arcs,
            pending: 0,
        };
        search.dfs(split);
        shared.charge(search.pending);
    });

    let exhausted = shared.stop.load(Ordering::Relaxed);
    let incumbent = shared.incumbent.into_inner().expect("incumbent lock");
    Ok(ExtremalCertificate {
        n,
        pattern_id,
        value: incumbent.value,
        exact: !exhausted,
        witnesses: incumbent.forms.into_iter().collect(),
        nodes_explored: shared.nodes.load(Ordering::Relaxed),
        elapsed: started.elapsed(),
    })
}

/// Streams labelled oriented graphs on a fixed vertex set.
///
/// With an arc-count target, prefixes that cannot reach it are cut off.
pub struct OrientedEnumerator {
    pairs: Vec<(usize, usize)>,
    target: Option<usize>,
    graph: OrientedGraph,
    arcs: usize,
    applied: Vec<u8>,
    next_choice: Vec<u8>,
    depth: usize,
    floor: usize,
    leaf_pending: bool,
    done: bool,
}

impl OrientedEnumerator {
    /// No size check; the first `prefix.len()` pairs are pinned to the given choices
    /// (0: no arc, 1: `i -> j`, 2: `j -> i`).
    pub fn new(n: usize, arc_count: Option<usize>, prefix: &[u8]) -> Result<Self> {
        let pairs = pair_order(n);
        if prefix.len() > pairs.len() || prefix.iter().any(|&c| c > 2) {
            return Err(Error::invalid("invalid enumeration prefix"));
        }
        let mut e = OrientedEnumerator {
            graph: OrientedGraph::empty(n)?,
            target: arc_count,
            arcs: 0,
            applied: vec![0; pairs.len()],
            next_choice: vec![0; pairs.len() + 1],
            depth: prefix.len(),
            floor: prefix.len(),
            leaf_pending: true,
            done: false,
            pairs,
        };
        for (d, &c) in prefix.iter().enumerate() {
            e.apply(d, c);
            e.applied[d] = c;
        }
        let left = e.pairs.len() - prefix.len();
        e.done = !e.feasible(left);
        Ok(e)
    }

    fn apply(&mut self, d: usize, c: u8) {
        let (i, j) = self.pairs[d];
        match c {
            1 => self.graph.insert_unchecked(i, j),
            2 => self.graph.insert_unchecked(j, i),
            _ => return,
        }
        self.arcs += 1;
    }

    fn unapply(&mut self, d: usize, c: u8) {
        let (i, j) = self.pairs[d];
        match c {
            1 => self.graph.remove_unchecked(i, j),
            2 => self.graph.remove_unchecked(j, i),
            _ => return,
        }
        self.arcs -= 1;
    }

    fn feasible(&self, undecided: usize) -> bool {
        match self.target {
            None => true,
            Some(m) => self.arcs <= m && self.arcs + undecided >= m,
        }
    }

    fn retreat(&mut self) -> bool {
        if self.depth == self.floor {
            return false;
        }
        self.depth -= 1;
        let c = self.applied[self.depth];
        self.unapply(self.depth, c);
        true
    }
}

impl Iterator for OrientedEnumerator {
    type Item = OrientedGraph;

    fn next(&mut self) -> Option<OrientedGraph> {
        loop {
            if self.done {
                return None;
            }
            if self.depth == self.pairs.len() {
                if self.leaf_pending {
                    self.leaf_pending = false;
                    return Some(self.graph.clone());
                }
                self.leaf_pending = true;
                self.done = !self.retreat();
                continue;
            }
            let d = self.depth;
            let c = self.next_choice[d];
            if c > 2 {
                self.done = !self.retreat();
                continue;
            }
            self.next_choice[d] += 1;
            self.apply(d, c);
            if self.feasible(self.pairs.len() - d - 1) {
                self.applied[d] = c;
                self.depth += 1;
                self.next_choice[self.depth] = 0;
            } else {
                self.unapply(d, c);
            }
        }
    }
}

/// Every labelled oriented graph on `n <= 6` vertices, optionally with exactly `arc_count` arcs.
pub fn enumerate_oriented(n: usize, arc_count: Option<usize>) -> Result<OrientedEnumerator> {
    enumerate_oriented_up_to(n, arc_count, DEFAULT_EXHAUSTIVE_ORDER)
}

pub fn enumerate_oriented_up_to(
    n: usize,
    arc_count: Option<usize>,
    max_order: usize,
) -> Result<OrientedEnumerator> {
    if n > max_order {
        return Err(Error::Budget(format!(
            "labelled enumeration of order {n} exceeds the limit {max_order} (3^{} graphs)",
            binomial2(n)
        )));
    }
    OrientedEnumerator::new(n, arc_count, &[])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScanMode {
    Exhaustive,
    /// Uniform draws among the `m`-arc labelled graphs.
    Sampled {
        samples: u64,
        seed: u64,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassMinimum {
    pub n: usize,
    pub m: usize,
    pub pattern_id: CanonicalForm,
    pub minimum: u128,
    pub argmin_witness: CanonicalForm,
    pub instances_scanned: u64,
    pub exhaustive: bool,
}

/// Least number of copies of `f` over `n`-vertex oriented graphs with `m` arcs.
pub fn min_copies_in_class(
    n: usize,
    m: usize,
    f: &Pattern,
    mode: &ScanMode,
    budget: &Budget,
) -> Result<ClassMinimum> {
    if m > binomial2(n) {
        return Err(Error::invalid(format!(
            "{m} arcs do not fit on {n} vertices"
        )));
    }
    let pattern_id = canonical_form(f.graph())?;
    let (minimum, argmin, scanned) = match *mode {
        ScanMode::Exhaustive => {
            if n > budget.max_exhaustive_order {
                return Err(Error::Budget(format!(
                    "exhaustive scan of order {n} exceeds the limit {}; use sampled mode",
                    budget.max_exhaustive_order
                )));
            }
            exhaustive_minimum(n, m, f)?
        }
        ScanMode::Sampled { samples, seed } => sampled_minimum(n, m, f, samples, seed)?,
    };
    Ok(ClassMinimum {
        n,
        m,
        pattern_id,
        minimum,
        argmin_witness: canonical_form(&argmin)?,
        instances_scanned: scanned,
        exhaustive: matches!(mode, ScanMode::Exhaustive),
    })
}

/// Running minimum over a stream of graphs; the earliest minimiser is kept.
#[derive(Default)]
struct Scan {
    best: Option<(u128, OrientedGraph)>,
    scanned: u64,
}

impl Scan {
    fn push(&mut self, copies: u128, g: OrientedGraph) {
        self.scanned += 1;
        if self.best.as_ref().is_none_or(|(min, _)| copies < *min) {
            self.best = Some((copies, g));
        }
    }

    /// Combines in order, so earlier parts win ties.
    fn merge(parts: Vec<Scan>) -> Result<(u128, OrientedGraph, u64)> {
        let mut acc = Scan::default();
        for part in parts {
            acc.scanned += part.scanned;
            if let Some((c, g)) = part.best {
                if acc.best.as_ref().is_none_or(|(min, _)| c < *min) {
                    acc.best = Some((c, g));
                }
            }
        }
        let (min, g) = acc
            .best
            .ok_or_else(|| Error::Internal("empty scan".into()))?;
        Ok((min, g, acc.scanned))
    }
}

fn exhaustive_minimum(n: usize, m: usize, f: &Pattern) -> Result<(u128, OrientedGraph, u64)> {
    let split = pair_order(n).len().min(3);
    let prefixes: Vec<Vec<u8>> = (0..3usize.pow(split as u32))
        .map(|code| {
            (0..split)
                .map(|d| (code / 3usize.pow(d as u32) % 3) as u8)
                .collect()
        })
        .collect();
    let parts = prefixes
        .par_iter()
        .map(|prefix| -> Result<Scan> {
            let mut scan = Scan::default();
            for g in OrientedEnumerator::new(n, Some(m), prefix)? {
                scan.push(count_copies(&g, f)?, g);
            }
            Ok(scan)
        })
        .collect::<Result<Vec<_>>>()?;
    Scan::merge(parts)
}

const SAMPLE_CHUNK: u64 = 4096;

fn sampled_minimum(
    n: usize,
    m: usize,
    f: &Pattern,
    samples: u64,
    seed: u64,
) -> Result<(u128, OrientedGraph, u64)> {
    if samples == 0 {
        return Err(Error::invalid("sampled mode needs at least one sample"));
    }
    let chunks = samples.div_ceil(SAMPLE_CHUNK);
    let parts = (0..chunks)
        .into_par_iter()
        .map(|chunk| -> Result<Scan> {
            let mut scan = Scan::default();
            let end = ((chunk + 1) * SAMPLE_CHUNK).min(samples);
            for i in chunk * SAMPLE_CHUNK..end {
                let g = random_with_arc_count(n, m, &mut instance_rng(seed, i))?;
                scan.push(count_copies(&g, f)?, g);
            }
            Ok(scan)
        })
        .collect::<Result<Vec<_>>>()?;
    Scan::merge(parts)
}

#[derive(Clone, Debug, Serialize)]
pub struct DensityEntry {
    pub n: usize,
    pub exo: Option<usize>,
    /// `exo(n, F) / C(n, 2)` in lowest terms, e.g. `"4/5"`.
    pub density: Option<String>,
    #[serde(skip)]
    pub exact_density: Option<BigRational>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DensitySequence {
    pub entries: Vec<DensityEntry>,
    pub non_increasing: bool,
    /// Orders `n` with `a_n < a_{n+1}`.
    pub violations: Vec<usize>,
}

/// `a_n = exo(n, F) / C(n, 2)` for `2 <= n <= n_max`.
///
/// Stops at the first order whose search exhausts its budget.
pub fn density_sequence(f: &Pattern, n_max: usize, budget: &Budget) -> Result<DensitySequence> {
    let mut entries = Vec::new();
    let mut truncated = false;
    for n in 2..=n_max {
        if truncated {
            entries.push(DensityEntry {
                n,
                exo: None,
                density: None,
                exact_density: None,
            });
            continue;
        }
        let cert = exo_exact(n, f, budget, 0)?;
        if !cert.exact {
            truncated = true;
            entries.push(DensityEntry {
                n,
                exo: None,
                density: None,
                exact_density: None,
            });
            continue;
        }
        let a = ratio(cert.value as u64, binomial2(n) as u64);
        entries.push(DensityEntry {
            n,
            exo: Some(cert.value),
            density: Some(a.to_string()),
            exact_density: Some(a),
        });
    }
    let mut violations = Vec::new();
    for w in entries.windows(2) {
        if let (Some(a), Some(b)) = (&w[0].exact_density, &w[1].exact_density) {
            if a < b {
                violations.push(w[0].n);
            }
        }
    }
    Ok(DensitySequence {
        non_increasing: violations.is_empty(),
        entries,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::{count_generic, count_tt};
    use crate::graph::{blow_up, make_directed_cycle, turan_edge_count, PartSizes};

    #[test]
    fn enumerator_counts() {
        assert_eq!(enumerate_oriented(2, None).unwrap().count(), 3);
        assert_eq!(enumerate_oriented(3, None).unwrap().count(), 27);
        assert_eq!(enumerate_oriented(4, None).unwrap().count(), 729);
        assert_eq!(enumerate_oriented(1, None).unwrap().count(), 1);
        let tours: Vec<_> = enumerate_oriented(3, Some(3)).unwrap().collect();
        assert_eq!(tours.len(), 8);
        assert!(tours.iter().all(|g| g.is_tournament()));
        assert_eq!(enumerate_oriented(4, Some(6)).unwrap().count(), 64);
        // C(6,2) * 2^2 graphs with two arcs on four vertices
        assert_eq!(enumerate_oriented(4, Some(2)).unwrap().count(), 60);
        assert!(matches!(enumerate_oriented(7, None), Err(Error::Budget(_))));
    }

    #[test]
    fn enumerator_yields_distinct_valid_graphs() {
        let all: Vec<_> = enumerate_oriented(4, None).unwrap().collect();
        let distinct: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), all.len());
        for g in &all {
            g.validate().unwrap();
        }
        let by_prefix: usize = (0..3u8)
            .map(|c| OrientedEnumerator::new(4, None, &[c]).unwrap().count())
            .sum();
        assert_eq!(by_prefix, 729);
    }

    #[test]
    fn exo_of_tt3_small() {
        let tt3 = Pattern::transitive(3).unwrap();
        for n in 3..=5 {
            let cert = exo_exact(n, &tt3, &Budget::default(), DEFAULT_WITNESS_CAP).unwrap();
            assert!(cert.exact);
            assert_eq!(cert.value as u64, turan_edge_count(n, 3));
            for w in &cert.witnesses {
                let g = w.to_graph();
                assert_eq!(g.arc_count(), cert.value);
                assert_eq!(count_tt(&g, 3), 0);
            }
        }
    }

    #[test]
    fn exo_of_single_arc_is_zero() {
        let cert = exo_exact(3, &Pattern::single_arc(), &Budget::default(), 4).unwrap();
        assert_eq!(cert.value, 0);
        assert_eq!(cert.witnesses.len(), 1);
    }

    #[test]
    fn exo_small_orders_below_pattern() {
        let tt3 = Pattern::transitive(3).unwrap();
        let cert = exo_exact(2, &tt3, &Budget::default(), 4).unwrap();
        assert_eq!(cert.value, 1);
        assert!(exo_exact(
            3,
            &Pattern::new(OrientedGraph::empty(2).unwrap()).unwrap(),
            &Budget::default(),
            0
        )
        .is_err());
    }

    #[test]
    fn exo_budget_exhaustion_is_flagged() {
        let tt3 = Pattern::transitive(3).unwrap();
        let budget = Budget {
            max_nodes: Some(1),
            ..Budget::default()
        };
        let cert = exo_exact(6, &tt3, &budget, 0).unwrap();
        assert!(!cert.exact);
        assert!(cert.value <= 12);
    }

    #[test]
    fn cycle_blow_up_is_tt3_free_and_extremal_lower_bound() {
        let c3 = make_directed_cycle(3).unwrap();
        let g = blow_up(&c3, &PartSizes::balanced(6, 3).unwrap()).unwrap();
        assert_eq!(
            count_generic(&g, &Pattern::transitive(3).unwrap()).unwrap(),
            0
        );
        assert_eq!(g.arc_count() as u64, turan_edge_count(6, 3));
    }

    #[test]
    fn class_minimum_tournaments_on_four() {
        let tt3 = Pattern::transitive(3).unwrap();
        let m = min_copies_in_class(4, 6, &tt3, &ScanMode::Exhaustive, &Budget::default()).unwrap();
        assert_eq!(m.minimum, 2);
        assert_eq!(m.instances_scanned, 64);
        assert!(m.exhaustive);
        assert_eq!(count_tt(&m.argmin_witness.to_graph(), 3), 2);
        assert!(
            min_copies_in_class(4, 7, &tt3, &ScanMode::Exhaustive, &Budget::default()).is_err()
        );
        assert!(matches!(
            min_copies_in_class(7, 17, &tt3, &ScanMode::Exhaustive, &Budget::default()),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn sampled_minimum_is_deterministic() {
        let tt3 = Pattern::transitive(3).unwrap();
        let mode = ScanMode::Sampled {
            samples: 5000,
            seed: 9,
        };
        let a = min_copies_in_class(5, 9, &tt3, &mode, &Budget::default()).unwrap();
        let b = min_copies_in_class(5, 9, &tt3, &mode, &Budget::default()).unwrap();
        assert_eq!(a.minimum, b.minimum);
        assert_eq!(a.argmin_witness, b.argmin_witness);
        assert_eq!(a.instances_scanned, 5000);
        assert!(!a.exhaustive);
        assert!(a.minimum >= 3);
    }

    #[test]
    fn density_sequence_of_single_arc() {
        let seq = density_sequence(&Pattern::single_arc(), 5, &Budget::default()).unwrap();
        assert!(seq.non_increasing);
        assert!(seq
            .entries
            .iter()
            .all(|e| e.density.as_deref() == Some("0")));
    }
}
