//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line and then
//! asserts the criterion, so `cargo test --test acceptance -- --nocapture`
//! gives a readable summary.

use std::time::{Duration, Instant};

use num_bigint::BigInt;

use orient_turan::arith::{binomial, ratio};
use orient_turan::canonical::is_isomorphic;
use orient_turan::graph::{
    blow_up, make_directed_cycle, make_transitive_tournament, turan_edge_count,
};
use orient_turan::homomorphism::{compressibility, enumerate_tournaments};
use orient_turan::io::digraph6;
use orient_turan::pattern::make_antidirected_complete_bipartite;
use orient_turan::search::{density_sequence, exo_exact, min_copies_in_class, Budget, ScanMode};
use orient_turan::suite::{RandomSuite, DEFAULT_SEED};
use orient_turan::verify::{
    build_supersaturation_certificate, check_prop31a, check_supersat, check_supersaturation,
    check_t17, check_t18, check_t19, kst_copy_bound, Verdict, KST_TRANSITIVE_ORDERS,
};
use orient_turan::{count_generic, count_kst, count_tt, PartSizes, Pattern};

const SUITE_SIZE: u64 = 100_000;

fn small_suite() -> RandomSuite {
    RandomSuite::new(SUITE_SIZE, 1, 32, DEFAULT_SEED)
}

fn report(id: u32, ok: bool, started: Instant, limit: Duration, detail: String) {
    let elapsed = started.elapsed();
    let ok = ok && elapsed < limit;
    println!(
        "{} criterion {id}: {detail} [{:.2}s, limit {}s]",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    assert!(ok, "criterion {id} failed: {detail}");
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

#[test]
fn criterion_01_exo_tt3_small_orders() {
    let started = Instant::now();
    let tt3 = Pattern::transitive(3).unwrap();
    let c3_blowup = blow_up(
        &make_directed_cycle(3).unwrap(),
        &PartSizes::balanced(6, 3).unwrap(),
    )
    .unwrap();
    let mut values = Vec::new();
    let mut ok = true;
    for (n, expected) in [(4, 5), (5, 8), (6, 12)] {
        let cert = exo_exact(n, &tt3, &Budget::default(), 16).unwrap();
        ok &= cert.exact && cert.value == expected && cert.value == turan_edge_count(n, 3) as usize;
        if n == 6 {
            let found = cert
                .witnesses
                .iter()
                .any(|w| is_isomorphic(&w.to_graph(), &c3_blowup).unwrap());
            ok &= found;
        }
        values.push(cert.value);
    }
    report(
        1,
        ok,
        started,
        secs(60),
        format!("exo(n, TT_3) for n = 4, 5, 6 is {values:?}; C_3 blow-up witness at n = 6"),
    );
}

#[test]
fn criterion_02_four_tournaments_minimum() {
    let started = Instant::now();
    let r = check_prop31a().unwrap();
    let minimum = r.parameters["minimum_tt3"].as_u64().unwrap();
    let ok = r.instances == 64 && minimum == 2 && r.passed();
    report(
        2,
        ok,
        started,
        secs(1),
        format!(
            "{} labelled 4-tournaments, minimum TT_3 count {minimum}",
            r.instances
        ),
    );
}

#[test]
fn criterion_03_exhaustive_class_minima() {
    let started = Instant::now();
    let tt3 = Pattern::transitive(3).unwrap();
    let mut ok = true;
    let mut minima = Vec::new();
    for (n, m, floor) in [(4, 6, 2), (5, 9, 3), (6, 13, 4)] {
        assert_eq!(m, turan_edge_count(n, 3) as usize + 1);
        let class =
            min_copies_in_class(n, m, &tt3, &ScanMode::Exhaustive, &Budget::default()).unwrap();
        ok &= class.exhaustive && class.minimum >= floor;
        ok &= count_tt(&class.argmin_witness.to_graph(), 3) == class.minimum;
        minima.push(format!(
            "({n},{m})->{} over {} graphs",
            class.minimum, class.instances_scanned
        ));
    }
    report(
        3,
        ok,
        started,
        secs(600),
        format!("minimum TT_3 counts {}", minima.join(", ")),
    );
}

#[test]
fn criterion_04_compressibility_and_catalogs() {
    let started = Instant::now();
    let sizes: Vec<usize> = (1..=7)
        .map(|k| enumerate_tournaments(k).unwrap().len())
        .collect();
    let z = compressibility(&Pattern::transitive(3).unwrap(), 7).unwrap();
    let probe = |k: usize| z.probes.iter().find(|p| p.order == k).unwrap();
    let c3 = make_directed_cycle(3).unwrap();
    let k3_blocker = probe(3)
        .counterexample
        .as_deref()
        .map(|d6| is_isomorphic(&digraph6::decode(d6).unwrap(), &c3).unwrap())
        .unwrap_or(false);
    let ok = z.z == Some(4)
        && !probe(2).all_admit
        && probe(2).counterexample.is_some()
        && !probe(3).all_admit
        && k3_blocker
        && probe(4).all_admit
        && probe(4).classes == 4
        && sizes == [1, 1, 2, 4, 12, 56, 456];
    report(
        4,
        ok,
        started,
        secs(120),
        format!(
            "z(TT_3) = {:?}, C_3 blocks k = 3: {k3_blocker}, catalog sizes {sizes:?}",
            z.z
        ),
    );
}

#[test]
fn criterion_05_oriented_moon_moser() {
    let started = Instant::now();
    let r = check_t17(&small_suite(), 32).unwrap();
    let equalities = r.parameters["tt_equalities"].as_u64().unwrap();
    let expected_equalities: u64 = (3..=32u64).map(|n| n - 2).sum();
    let equality_ok = equalities == expected_equalities;
    let first = r
        .violations
        .first()
        .map(|v| format!("; first {} ({} vs {})", v.graph, v.measured, v.required))
        .unwrap_or_default();
    report(
        5,
        r.passed() && equality_ok,
        started,
        secs(300),
        format!(
            "{} random graphs, {} with a violation{first}; TT_n equality {equalities}/{expected_equalities}",
            SUITE_SIZE,
            r.violations.len()
        ),
    );
}

#[test]
fn criterion_06_tt_density_bound() {
    let started = Instant::now();
    let r = check_t18(&small_suite(), 32).unwrap();
    let equalities = r.parameters["tt_equalities"].as_u64().unwrap();
    let expected_equalities: u64 = (1..=32u64).map(|n| n.min(6)).sum();
    let equality_ok = equalities == expected_equalities;
    let first = r
        .violations
        .first()
        .map(|v| format!("; first {} ({}, bound {})", v.graph, v.measured, v.required))
        .unwrap_or_default();
    report(
        6,
        r.passed() && equality_ok,
        started,
        secs(300),
        format!(
            "{} random graphs, {} with a violation{first}; TT_n equality {equalities}/{expected_equalities}",
            SUITE_SIZE,
            r.violations.len()
        ),
    );
}

#[test]
fn criterion_07_antidirected_bipartite_bound() {
    let started = Instant::now();
    let r = check_t19(&small_suite()).unwrap();
    let mut ok = r.passed() && r.parameters["reported_small_n_violations"] == 0;
    let mut slacks = Vec::new();
    for n in KST_TRANSITIVE_ORDERS {
        let g = make_transitive_tournament(n).unwrap();
        let a = orient_turan::verify::check_kst(&g, 1, 2).unwrap();
        let count = count_kst(&g, 1, 2).unwrap();
        let slack = count as f64 / kst_copy_bound(n, 2);
        ok &= a.verdict == Verdict::Holds && count == binomial(n as u64, 3) && slack > 3.0;
        slacks.push(format!("n={n}: {slack:.2}"));
    }
    report(
        7,
        ok,
        started,
        secs(300),
        format!(
            "TT_n slack {}; random suite violations {}",
            slacks.join(", "),
            r.violations.len()
        ),
    );
}

#[test]
fn criterion_08_finite_supersaturation_certificate() {
    let started = Instant::now();
    let cert =
        build_supersaturation_certificate(&Pattern::transitive(3).unwrap(), 6, &Budget::default())
            .unwrap();
    let t20 = make_transitive_tournament(20).unwrap();
    let a = check_supersaturation(&cert, &t20).unwrap();
    let mut ok = cert.a_m == "4/5"
        && cert.gamma(20, t20.arc_count()) == ratio(1, 5)
        && a.verdict == Verdict::Holds
        && a.count == Some(1140)
        && a.required == Some(BigInt::from(12));
    let suite = RandomSuite::new(10_000, 10, 40, DEFAULT_SEED);
    let r = check_supersat(&cert, &suite, &[]).unwrap();
    ok &= r.passed() && r.instances == 10_000;
    report(
        8,
        ok,
        started,
        secs(120),
        format!(
            "a_6 = {}, TT_20 count {:?} >= {:?}; {} random graphs, {} meeting the hypothesis, {} violations",
            cert.a_m,
            a.count,
            a.required.map(|r| r.to_string()),
            r.instances,
            r.parameters["hypothesis_held"],
            r.violations.len()
        ),
    );
}

#[test]
fn criterion_09_density_sequence_non_increasing() {
    let started = Instant::now();
    let seq = density_sequence(&Pattern::transitive(3).unwrap(), 6, &Budget::default()).unwrap();
    let density = |n: usize| {
        seq.entries
            .iter()
            .find(|e| e.n == n)
            .and_then(|e| e.density.clone())
    };
    let got: Vec<Option<String>> = (4..=6).map(density).collect();
    let want = ["5/6", "4/5", "4/5"].map(|s| Some(s.to_owned()));
    let ok = got == want && seq.non_increasing && seq.violations.is_empty();
    report(
        9,
        ok,
        started,
        secs(60),
        format!(
            "a_4, a_5, a_6 = {got:?}, non-increasing {}",
            seq.non_increasing
        ),
    );
}

#[test]
fn criterion_10_counter_oracles_and_round_trip() {
    let started = Instant::now();
    let suite = RandomSuite::new(10_000, 1, 8, DEFAULT_SEED ^ 0x0a);
    let tt: Vec<Pattern> = (1..=5).map(|r| Pattern::transitive(r).unwrap()).collect();
    let kst: Vec<(usize, usize, Pattern)> = (1..=3)
        .flat_map(|s| {
            (1..=3).map(move |t| (s, t, make_antidirected_complete_bipartite(s, t).unwrap()))
        })
        .collect();
    let mut mismatches = 0u64;
    let mut round_trip_failures = 0u64;
    for i in 0..suite.count {
        let g = suite.instance(i).unwrap();
        for (r, p) in (1..).zip(&tt) {
            if r <= g.order() && count_tt(&g, r) != count_generic(&g, p).unwrap() {
                mismatches += 1;
            }
        }
        for (s, t, p) in &kst {
            if s + t <= g.order() && count_kst(&g, *s, *t).unwrap() != count_generic(&g, p).unwrap()
            {
                mismatches += 1;
            }
        }
        if digraph6::decode(&digraph6::encode(&g)).unwrap() != g {
            round_trip_failures += 1;
        }
    }
    report(
        10,
        mismatches == 0 && round_trip_failures == 0,
        started,
        secs(120),
        format!("{} graphs: {mismatches} counter mismatches, {round_trip_failures} digraph6 round-trip failures", suite.count),
    );
}
