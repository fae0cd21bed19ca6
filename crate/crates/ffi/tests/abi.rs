use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use orient_turan_ffi::*;

fn graph(d6: &str) -> *mut OtGraph {
    let text = CString::new(d6).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { ot_graph_from_digraph6(text.as_ptr(), &mut g) },
        OtStatus::Ok
    );
    g
}

fn last_error() -> String {
    let p = ot_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn graph_round_trip() {
    unsafe {
        let g = graph("&AO");
        assert_eq!(ot_graph_order(g), 2);
        assert_eq!(ot_graph_arc_count(g), 1);
        assert!(ot_graph_has_arc(g, 0, 1));
        assert!(!ot_graph_has_arc(g, 1, 0));
        assert!(!ot_graph_has_arc(g, 0, 9));
        let mut s = ptr::null_mut();
        assert_eq!(ot_graph_to_digraph6(g, &mut s), OtStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "&AO");
        ot_string_free(s);
        ot_graph_free(g);

        let mut e = ptr::null_mut();
        assert_eq!(ot_graph_empty(3, &mut e), OtStatus::Ok);
        assert_eq!(ot_graph_add_arc(e, 0, 1), OtStatus::Ok);
        assert_eq!(ot_graph_add_arc(e, 1, 0), OtStatus::Domain);
        assert!(last_error().contains("0"));
        assert_eq!(ot_graph_add_arc(e, 2, 2), OtStatus::Domain);
        ot_graph_free(e);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let bad = CString::new("&A").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(
            ot_graph_from_digraph6(bad.as_ptr(), &mut g),
            OtStatus::Parse
        );
        assert!(g.is_null());
        assert_eq!(
            ot_graph_from_digraph6(ptr::null(), &mut g),
            OtStatus::NullPointer
        );
        let mut n = 0u64;
        assert_eq!(ot_count_tt(ptr::null(), 3, &mut n), OtStatus::NullPointer);
        assert_eq!(ot_graph_empty(500, &mut g), OtStatus::Capacity);
        assert_eq!(ot_directed_cycle(2, &mut g), OtStatus::InvalidInput);
        ot_graph_free(ptr::null_mut());
        ot_pattern_free(ptr::null_mut());
        ot_string_free(ptr::null_mut());
    }
}

#[test]
fn counting() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(ot_transitive_tournament(10, &mut t), OtStatus::Ok);
        let mut n = 0u64;
        assert_eq!(ot_count_tt(t, 3, &mut n), OtStatus::Ok);
        assert_eq!(n, 120);
        assert_eq!(ot_count_kst(t, 1, 2, &mut n), OtStatus::Ok);
        assert_eq!(n, 120);
        assert_eq!(ot_count_out_stars(t, 2, &mut n), OtStatus::Ok);
        assert_eq!(n, 120);
        assert_eq!(ot_count_kst(t, 0, 2, &mut n), OtStatus::InvalidInput);

        let mut p = ptr::null_mut();
        assert_eq!(ot_pattern_kst(2, 2, &mut p), OtStatus::Ok);
        assert_eq!(ot_pattern_order(p), 4);
        assert_eq!(ot_pattern_automorphism_count(p), 4);
        assert_eq!(ot_count_copies(t, p, &mut n), OtStatus::Ok);
        // pairs of sinks {a<b} with two common in-neighbours below a
        assert_eq!(
            n,
            (0..10u64)
                .map(|a| (a * a.saturating_sub(1) / 2) * (9 - a))
                .sum::<u64>()
        );
        ot_pattern_free(p);

        let mut big = ptr::null_mut();
        assert_eq!(ot_transitive_tournament(128, &mut big), OtStatus::Ok);
        assert_eq!(ot_count_tt(big, 64, &mut n), OtStatus::Overflow);
        ot_graph_free(big);
        ot_graph_free(t);
    }
}

#[test]
fn homomorphisms_and_search() {
    unsafe {
        let mut tt3 = ptr::null_mut();
        assert_eq!(ot_pattern_transitive(3, &mut tt3), OtStatus::Ok);
        let mut c3 = ptr::null_mut();
        assert_eq!(ot_directed_cycle(3, &mut c3), OtStatus::Ok);
        let mut found = true;
        assert_eq!(ot_has_homomorphism(tt3, c3, &mut found), OtStatus::Ok);
        assert!(!found);

        let mut z = 0usize;
        assert_eq!(ot_compressibility(tt3, 5, &mut z), OtStatus::Ok);
        assert_eq!(z, 4);
        assert_eq!(ot_compressibility(tt3, 9, &mut z), OtStatus::Budget);

        let (mut value, mut exact) = (0usize, false);
        assert_eq!(
            ot_exo_exact(5, tt3, 0, &mut value, &mut exact),
            OtStatus::Ok
        );
        assert_eq!((value, exact), (8, true));
        assert_eq!(
            ot_exo_exact(5, tt3, 0, ptr::null_mut(), &mut exact),
            OtStatus::NullPointer
        );

        let mut form = ptr::null_mut();
        assert_eq!(ot_graph_canonical_form(c3, &mut form), OtStatus::Ok);
        assert!(CStr::from_ptr(form).to_str().unwrap().starts_with("&B"));
        ot_string_free(form);

        let mut p = ptr::null_mut();
        assert_eq!(ot_pattern_from_graph(c3, &mut p), OtStatus::Ok);
        assert_eq!(ot_pattern_automorphism_count(p), 3);
        ot_pattern_free(p);
        ot_graph_free(c3);
        ot_pattern_free(tt3);
    }
}

#[test]
fn header_declares_the_interface() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/orient_turan.h");
    let text = std::fs::read_to_string(&header).expect("header generated by the build script");
    for name in [
        "OT_STATUS_OK",
        "typedef struct OtGraph OtGraph",
        "ot_graph_from_digraph6",
        "ot_count_kst",
        "ot_exo_exact",
        "ot_last_error_message",
    ] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let source = std::env::temp_dir().join(format!("ot_header_{}.c", std::process::id()));
    std::fs::write(
        &source,
        "#include \"orient_turan.h\"\nint main(void) { OtGraph *g = 0; return (int)ot_graph_order(g); }\n",
    )
    .unwrap();
    let status = Command::new(&cc)
        .arg("-fsyntax-only")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(header.parent().unwrap())
        .arg(&source)
        .status();
    let _ = std::fs::remove_file(&source);
    match status {
        Ok(s) => assert!(s.success(), "header does not compile as C"),
        Err(e) => panic!("cannot run {cc}: {e}"),
    }
}
