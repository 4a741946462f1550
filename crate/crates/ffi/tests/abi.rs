use std::ffi::{CStr, CString};
use std::ptr;

use quasiprolong_ffi::*;

const EXAMPLE1: &str = "5\n1 2 3 4 5\n4 3 1 5 2\n2 5 4 1 3\n5 4 2 3 1\n3 1 5 2 4\n";

fn parse(text: &str) -> *mut QpSquare {
    let c = CString::new(text).unwrap();
    let mut sq = ptr::null_mut();
    assert_eq!(unsafe { qp_square_parse(c.as_ptr(), &mut sq) }, QpStatus::Ok);
    sq
}

fn rows(sq: *const QpSquare) -> Vec<Vec<u32>> {
    let n = unsafe { qp_square_order(sq) };
    (1..=n)
        .map(|r| {
            (1..=n)
                .map(|c| {
                    let mut v = 0;
                    assert_eq!(unsafe { qp_square_cell(sq, r, c, &mut v) }, QpStatus::Ok);
                    v
                })
                .collect()
        })
        .collect()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(qp_last_error()) }.to_string_lossy().into_owned()
}

#[test]
fn parse_text_round_trip() {
    let sq = parse(EXAMPLE1);
    assert_eq!(unsafe { qp_square_order(sq) }, 5);
    let text = unsafe { qp_square_to_text(sq) };
    assert_eq!(unsafe { CStr::from_ptr(text) }.to_str().unwrap(), EXAMPLE1);
    unsafe {
        qp_string_free(text);
        qp_square_free(sq);
    }
}

#[test]
fn parse_errors_set_status_and_message() {
    let bad = CString::new("2\n1 1\n2 2\n").unwrap();
    let mut sq = ptr::null_mut();
    assert_eq!(unsafe { qp_square_parse(bad.as_ptr(), &mut sq) }, QpStatus::NotLatin);
    assert!(sq.is_null());
    assert!(last_error().contains("row 1"));

    let garbage = CString::new("x\n").unwrap();
    assert_eq!(unsafe { qp_square_parse(garbage.as_ptr(), &mut sq) }, QpStatus::ParseError);
    assert_eq!(unsafe { qp_square_parse(ptr::null(), &mut sq) }, QpStatus::NullPointer);
    assert_eq!(unsafe { qp_square_order(ptr::null()) }, 0);
    assert!(unsafe { qp_square_to_text(ptr::null()) }.is_null());
}

#[test]
fn validate_cells_reports_violation() {
    let cells = [1u32, 1, 2, 2];
    let mut v = QpViolation { kind: QpViolationKind::None, row: 0, col: 0, symbol: 0 };
    assert_eq!(unsafe { qp_validate_cells(cells.as_ptr(), 2, &mut v) }, QpStatus::NotLatin);
    assert_eq!(v, QpViolation { kind: QpViolationKind::RowDuplicate, row: 1, col: 2, symbol: 1 });
    let ok = [1u32, 2, 2, 1];
    assert_eq!(unsafe { qp_validate_cells(ok.as_ptr(), 2, &mut v) }, QpStatus::Ok);
    assert_eq!(v.kind, QpViolationKind::None);

    let mut sq = ptr::null_mut();
    assert_eq!(unsafe { qp_square_from_cells(ok.as_ptr(), 2, &mut sq) }, QpStatus::Ok);
    assert_eq!(rows(sq), vec![vec![1, 2], vec![2, 1]]);
    unsafe { qp_square_free(sq) };
    assert_eq!(unsafe { qp_square_from_cells(cells.as_ptr(), 2, &mut sq) }, QpStatus::NotLatin);
}

#[test]
fn classify_and_search() {
    let sq = parse(EXAMPLE1);
    let sigma = [4u32, 5, 2, 3, 1];
    let mut c = QpClassification { kind: QpMappingKind::Neither, defect_size: 0, defect: 0, special: 0, x1: 0, x2: 0 };
    assert_eq!(unsafe { qp_classify(sq, sigma.as_ptr(), 5, &mut c) }, QpStatus::Ok);
    assert_eq!(
        c,
        QpClassification { kind: QpMappingKind::Quasicomplete, defect_size: 1, defect: 1, special: 2, x1: 2, x2: 4 }
    );
    let short = [1u32, 2, 3];
    assert_eq!(unsafe { qp_classify(sq, short.as_ptr(), 3, &mut c) }, QpStatus::OrderMismatch);
    let dup = [1u32, 1, 2, 3, 4];
    assert_eq!(unsafe { qp_classify(sq, dup.as_ptr(), 5, &mut c) }, QpStatus::InvalidPermutation);

    let mut list = ptr::null_mut();
    assert_eq!(unsafe { qp_find_mappings(sq, QpMappingKind::Complete as u32, 0, &mut list) }, QpStatus::Ok);
    let len = unsafe { qp_mapping_list_len(list) };
    let mut found = Vec::new();
    for i in 0..len {
        let mut buf = [0u32; 5];
        assert_eq!(unsafe { qp_mapping_list_get(list, i, buf.as_mut_ptr(), 5) }, QpStatus::Ok);
        found.push(buf);
    }
    assert!(found.contains(&[4, 2, 1, 5, 3]));
    assert!(found.contains(&[3, 1, 2, 5, 4]));
    let mut small = [0u32; 2];
    assert_eq!(unsafe { qp_mapping_list_get(list, 0, small.as_mut_ptr(), 2) }, QpStatus::BufferTooSmall);
    assert_eq!(unsafe { qp_mapping_list_get(list, len, small.as_mut_ptr(), 5) }, QpStatus::OutOfRange);
    unsafe { qp_mapping_list_free(list) };

    assert_eq!(unsafe { qp_find_mappings(sq, 7, 0, &mut list) }, QpStatus::OutOfRange);

    let (mut r, mut cl, mut n) = ([0u32; 5], [0u32; 5], 0usize);
    assert_eq!(
        unsafe { qp_max_partial_transversal(sq, r.as_mut_ptr(), cl.as_mut_ptr(), 5, &mut n) },
        QpStatus::Ok
    );
    assert_eq!(n, 5);
    unsafe { qp_square_free(sq) };
}

#[test]
fn prolongations() {
    let sq = parse(EXAMPLE1);
    let sigma = [4u32, 2, 1, 5, 3];
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { qp_prolong(sq, QpMethod::Classical as u32, sigma.as_ptr(), 5, 0, &mut out) },
        QpStatus::Ok
    );
    assert_eq!(rows(out)[0], vec![1, 2, 3, 6, 5, 4]);
    assert_eq!(rows(out)[5], vec![2, 3, 5, 4, 1, 6]);
    unsafe { qp_square_free(out) };

    assert_eq!(
        unsafe { qp_prolong(sq, QpMethod::Belyavskaya as u32, sigma.as_ptr(), 5, 2, &mut out) },
        QpStatus::Ok
    );
    assert_eq!(rows(out)[5], vec![6, 3, 5, 4, 1, 2]);
    unsafe { qp_square_free(out) };

    let quasi = [4u32, 5, 2, 3, 1];
    assert_eq!(
        unsafe { qp_prolong(sq, QpMethod::DeriyenkoDudek as u32, quasi.as_ptr(), 5, 4, &mut out) },
        QpStatus::Ok
    );
    assert_eq!(rows(out)[5], vec![3, 5, 6, 4, 2, 1]);
    unsafe { qp_square_free(out) };

    assert_eq!(
        unsafe { qp_prolong(sq, QpMethod::Classical as u32, quasi.as_ptr(), 5, 0, &mut out) },
        QpStatus::NotComplete
    );
    assert_eq!(
        unsafe { qp_prolong(sq, QpMethod::DeriyenkoDudek as u32, quasi.as_ptr(), 5, 3, &mut out) },
        QpStatus::OutOfRange
    );
    assert_eq!(unsafe { qp_prolong(sq, 9, quasi.as_ptr(), 5, 0, &mut out) }, QpStatus::OutOfRange);

    assert_eq!(unsafe { qp_prolong_any(sq, &mut out) }, QpStatus::Ok);
    assert_eq!(unsafe { qp_square_order(out) }, 6);
    unsafe {
        qp_square_free(out);
        qp_square_free(sq);
    }
}

#[test]
fn isotopy_and_scan() {
    let (mut z4, mut k4) = (ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { qp_square_cyclic(4, &mut z4) }, QpStatus::Ok);
    assert_eq!(unsafe { qp_square_klein(&mut k4) }, QpStatus::Ok);
    let mut iso = true;
    let (mut a, mut b, mut g) = ([0u32; 4], [0u32; 4], [0u32; 4]);
    assert_eq!(
        unsafe { qp_are_isotopic(z4, k4, &mut iso, a.as_mut_ptr(), b.as_mut_ptr(), g.as_mut_ptr()) },
        QpStatus::Ok
    );
    assert!(!iso);
    assert_eq!(
        unsafe { qp_are_isotopic(z4, z4, &mut iso, a.as_mut_ptr(), b.as_mut_ptr(), g.as_mut_ptr()) },
        QpStatus::Ok
    );
    assert!(iso);
    assert_eq!((a, b, g), ([1, 2, 3, 4], [1, 2, 3, 4], [1, 2, 3, 4]));
    unsafe {
        qp_square_free(z4);
        qp_square_free(k4);
    }

    let mut report = QpScanReport { order: 0, squares_scanned: 0, min_max_transversal: 0, witnesses: 0 };
    assert_eq!(unsafe { qp_brualdi_scan(5, 2, &mut report) }, QpStatus::Ok);
    assert_eq!(report, QpScanReport { order: 5, squares_scanned: 56, min_max_transversal: 5, witnesses: 0 });
    assert_eq!(unsafe { qp_brualdi_scan(7, 0, &mut report) }, QpStatus::UnsupportedOrder);
}

#[test]
fn header_lists_the_exported_functions() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/quasiprolong.h")).unwrap();
    for f in [
        "qp_last_error",
        "qp_square_parse",
        "qp_square_from_cells",
        "qp_validate_cells",
        "qp_square_free",
        "qp_classify",
        "qp_find_mappings",
        "qp_prolong",
        "qp_prolong_any",
        "qp_are_isotopic",
        "qp_brualdi_scan",
    ] {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
}
