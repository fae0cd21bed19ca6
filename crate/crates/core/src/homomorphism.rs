//! Homomorphisms, tournament catalogues and compressibility.

use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::bits;
use crate::canonical::{canonical_form, find_isomorphism, CanonicalForm};
use crate::embed::{self, Plan};
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::io::digraph6;
use crate::pattern::Pattern;

/// Largest tournament order that can be catalogued exhaustively.
pub const MAX_CATALOG_ORDER: usize = 7;

/// Does an arc-preserving (not necessarily injective) map `f -> d` exist?
pub fn has_homomorphism(f: &Pattern, d: &OrientedGraph) -> bool {
    find_homomorphism(f, d).is_some()
}

/// An arc-preserving map, indexed by pattern vertex.
pub fn find_homomorphism(f: &Pattern, d: &OrientedGraph) -> Option<Vec<usize>> {
    embed::find_homomorphism(d, &Plan::by_degree(f.graph()))
}

/// One representative per isomorphism class of `order`-vertex tournaments.
#[derive(Clone, Debug)]
pub struct TournamentCatalog {
    order: usize,
    representatives: Vec<OrientedGraph>,
    forms: Vec<CanonicalForm>,
}

impl TournamentCatalog {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Canonically labelled representatives, sorted by canonical form.
    pub fn representatives(&self) -> &[OrientedGraph] {
        &self.representatives
    }

    pub fn forms(&self) -> &[CanonicalForm] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// One digraph6 line per representative.
    pub fn to_digraph6_lines(&self) -> String {
        self.representatives
            .iter()
            .map(|g| digraph6::encode(g) + "\n")
            .collect()
    }
}

static CATALOGS: [OnceLock<TournamentCatalog>; MAX_CATALOG_ORDER + 1] =
    [const { OnceLock::new() }; MAX_CATALOG_ORDER + 1];

/// Non-isomorphic tournaments of order `k`, built once per process by
/// adding a vertex to each class of order `k - 1` in every possible way.
pub fn enumerate_tournaments(k: usize) -> Result<&'static TournamentCatalog> {
    if k == 0 {
        return Err(Error::invalid("tournament order must be positive"));
    }
    if k > MAX_CATALOG_ORDER {
        return Err(Error::Budget(format!(
            "tournament catalogue limited to order {MAX_CATALOG_ORDER}, got {k}"
        )));
    }
    if let Some(c) = CATALOGS[k].get() {
        return Ok(c);
    }
    let built = build_catalog(k)?;
    Ok(CATALOGS[k].get_or_init(|| built))
}

fn build_catalog(k: usize) -> Result<TournamentCatalog> {
    let candidates = match k {
        1 => vec![OrientedGraph::empty(1)?],
        _ => extend_by_one_vertex(enumerate_tournaments(k - 1)?),
    };
    // keep one candidate per class, comparing only within invariant buckets
    let mut buckets: HashMap<Vec<(usize, usize)>, Vec<usize>> = HashMap::new();
    let mut kept: Vec<OrientedGraph> = Vec::new();
    for g in candidates {
        let bucket = buckets.entry(score_invariant(&g)).or_default();
        if bucket
            .iter()
            .any(|&i| find_isomorphism(&kept[i], &g).is_some())
        {
            continue;
        }
        bucket.push(kept.len());
        kept.push(g);
    }
    let mut forms: Vec<CanonicalForm> =
        kept.par_iter().map(canonical_form).collect::<Result<_>>()?;
    forms.sort();
    Ok(TournamentCatalog {
        order: k,
        representatives: forms.iter().map(CanonicalForm::to_graph).collect(),
        forms,
    })
}

/// Sorted pairs (score, total score of the out-neighbourhood).
fn score_invariant(g: &OrientedGraph) -> Vec<(usize, usize)> {
    let mut inv: Vec<(usize, usize)> = (0..g.order())
        .map(|v| {
            let beaten: usize = bits::iter(g.out_neighbors(v))
                .map(|u| g.out_degree(u))
                .sum();
            (g.out_degree(v), beaten)
        })
        .collect();
    inv.sort_unstable();
    inv
}

/// Every way of adding one vertex to each catalogued tournament.
fn extend_by_one_vertex(smaller: &TournamentCatalog) -> Vec<OrientedGraph> {
    let k = smaller.order();
    let mut out = Vec::with_capacity(smaller.len() << k);
    for base in smaller.representatives() {
        for mask in 0u64..1 << k {
            let mut g = OrientedGraph::empty(k + 1).expect("k + 1 within capacity");
            for (u, v) in base.arcs() {
                g.insert_unchecked(u, v);
            }
            for u in 0..k {
                if mask >> u & 1 == 1 {
                    g.insert_unchecked(k, u);
                } else {
                    g.insert_unchecked(u, k);
                }
            }
            out.push(g);
        }
    }
    out
}

/// Whether every `order`-tournament receives a homomorphism from the pattern.
#[derive(Clone, Debug, Serialize)]
pub struct OrderProbe {
    pub order: usize,
    pub classes: usize,
    pub all_admit: bool,
    /// The first class (in catalogue order) with no homomorphism, as digraph6.
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Compressibility {
    /// Smallest probed order at which every tournament admits a homomorphism.
    pub z: Option<usize>,
    pub k_max: usize,
    pub probes: Vec<OrderProbe>,
}

impl Compressibility {
    pub fn exceeds_k_max(&self) -> bool {
        self.z.is_none()
    }
}

/// Probes orders `2..=k_max` independently and reports the least passing one.
///
/// A pattern without arcs maps anywhere, so its value is 1 by convention.
pub fn compressibility(f: &Pattern, k_max: usize) -> Result<Compressibility> {
    if k_max > MAX_CATALOG_ORDER {
        return Err(Error::Budget(format!(
            "compressibility probes limited to k_max <= {MAX_CATALOG_ORDER}"
        )));
    }
    if f.arc_count() == 0 {
        return Ok(Compressibility {
            z: Some(1),
            k_max,
            probes: vec![],
        });
    }
    let plan = Plan::by_degree(f.graph());
    let mut probes = Vec::new();
    for k in 2..=k_max {
        let catalog = enumerate_tournaments(k)?;
        let failures: Vec<usize> = catalog
            .representatives()
            .par_iter()
            .enumerate()
            .filter(|(_, t)| embed::find_homomorphism(t, &plan).is_none())
            .map(|(i, _)| i)
            .collect();
        probes.push(OrderProbe {
            order: k,
            classes: catalog.len(),
            all_admit: failures.is_empty(),
            counterexample: failures
                .first()
                .map(|&i| digraph6::encode(&catalog.representatives()[i])),
        });
    }
    let z = probes.iter().find(|p| p.all_admit).map(|p| p.order);
    Ok(Compressibility { z, k_max, probes })
}
