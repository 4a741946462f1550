//! C ABI over `quasiprolong`.
//!
//! Squares cross the boundary as opaque [`QpSquare`] handles. Every fallible
//! function returns a [`QpStatus`]; on failure a message is available from
//! [`qp_last_error`] until the next call on the same thread. Symbols, rows,
//! columns and permutation images are 1-based, as in the text format.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use quasiprolong::{
    are_isotopic, brualdi_scan, classify, find_complete_mappings, find_quasicomplete_mappings,
    max_partial_transversal, parse_square, prolong_any, prolong_belyavskaya, prolong_classical,
    prolong_deriyenko_dudek, validate, Error, LatinSquare, MappingKind, Permutation, Violation,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QpStatus {
    Ok = 0,
    NullPointer,
    ParseError,
    NotLatin,
    OrderMismatch,
    UnsupportedOrder,
    InvalidPermutation,
    NotComplete,
    NotQuasicomplete,
    OutOfRange,
    BufferTooSmall,
    InvalidUtf8,
    BrualdiCounterexample,
    Internal,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QpMethod {
    Classical = 0,
    Belyavskaya,
    DeriyenkoDudek,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QpMappingKind {
    Complete = 0,
    Quasicomplete,
    Neither,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QpViolationKind {
    None = 0,
    RowDuplicate,
    ColumnDuplicate,
    OutOfRange,
}

/// First violation of the Latin property, row-major.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QpViolation {
    pub kind: QpViolationKind,
    pub row: u32,
    pub col: u32,
    pub symbol: u32,
}

/// Result of classifying a mapping. `defect`, `special`, `x1`, `x2` are set
/// only for quasicomplete mappings and 0 otherwise; `defect_size` is always set.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QpClassification {
    pub kind: QpMappingKind,
    pub defect_size: u32,
    pub defect: u32,
    pub special: u32,
    pub x1: u32,
    pub x2: u32,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QpScanReport {
    pub order: u32,
    pub squares_scanned: u64,
    pub min_max_transversal: u32,
    pub witnesses: u64,
}

/// Opaque Latin square handle.
pub struct QpSquare(LatinSquare);

/// Opaque list of permutations.
pub struct QpMappingList(Vec<Permutation>);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(err: &Error) -> QpStatus {
    match err {
        Error::MalformedHeader { .. }
        | Error::NotAnInteger { .. }
        | Error::SymbolOutOfRange { .. }
        | Error::RowLength { .. }
        | Error::RowCount { .. } => QpStatus::ParseError,
        Error::NotLatin(_) => QpStatus::NotLatin,
        Error::OrderMismatch { .. } => QpStatus::OrderMismatch,
        Error::UnsupportedOrder(_) | Error::IsotopyOrderTooLarge { .. } | Error::ScanOrderOutOfRange { .. } => {
            QpStatus::UnsupportedOrder
        }
        Error::InvalidPermutation(_) | Error::InvalidTransversal(_) | Error::TransversalTooShort { .. } => {
            QpStatus::InvalidPermutation
        }
        Error::NotComplete { .. } | Error::DiagonalNotBijective => QpStatus::NotComplete,
        Error::NotQuasicomplete { .. } => QpStatus::NotQuasicomplete,
        Error::ParameterOutOfRange { .. } | Error::NotSpecialPreimage { .. } => QpStatus::OutOfRange,
        Error::BrualdiCounterexample { .. } => QpStatus::BrualdiCounterexample,
    }
}

/// Runs `f`, recording its error message and containing panics.
fn guard(f: impl FnOnce() -> Result<(), (QpStatus, String)>) -> QpStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QpStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            QpStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (QpStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (QpStatus, String) {
    (QpStatus::NullPointer, format!("{what} is null"))
}

unsafe fn square_ref<'a>(sq: *const QpSquare) -> Result<&'a LatinSquare, (QpStatus, String)> {
    // SAFETY: caller passes a handle obtained from this library or null.
    unsafe { sq.as_ref() }.map(|s| &s.0).ok_or_else(|| null("square"))
}

unsafe fn permutation(images: *const u32, len: usize) -> Result<Permutation, (QpStatus, String)> {
    if images.is_null() {
        return Err(null("permutation"));
    }
    // SAFETY: caller guarantees `images` points to `len` readable values.
    let slice = unsafe { std::slice::from_raw_parts(images, len) };
    let v: Vec<usize> = slice.iter().map(|&x| x as usize).collect();
    Permutation::from_images(&v).map_err(lib_err)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (QpStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    // SAFETY: non-null, caller guarantees it is writable.
    unsafe { out.write(value) };
    Ok(())
}

unsafe fn write_square(out: *mut *mut QpSquare, sq: LatinSquare) -> Result<(), (QpStatus, String)> {
    unsafe { write_out(out, Box::into_raw(Box::new(QpSquare(sq)))) }
}

unsafe fn write_images(out: *mut u32, p: &Permutation) {
    if !out.is_null() {
        for (i, v) in p.images().into_iter().enumerate() {
            // SAFETY: caller provides room for `order` values.
            unsafe { out.add(i).write(v as u32) };
        }
    }
}

/// Message for the last failed call on this thread. Never null; owned by the
/// library and valid until the next call.
#[no_mangle]
pub extern "C" fn qp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses the text format from a NUL-terminated string.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qp_square_parse(text: *const c_char, out: *mut *mut QpSquare) -> QpStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        // SAFETY: caller guarantees a NUL-terminated string.
        let text = unsafe { CStr::from_ptr(text) }
            .to_str()
            .map_err(|e| (QpStatus::InvalidUtf8, e.to_string()))?;
        let sq = parse_square(text).map_err(lib_err)?;
        unsafe { write_square(out, sq) }
    })
}

/// Builds a square from `order * order` row-major 1-based cells.
///
/// # Safety
/// `cells` must point to `order * order` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qp_square_from_cells(cells: *const u32, order: usize, out: *mut *mut QpSquare) -> QpStatus {
    guard(|| {
        if cells.is_null() {
            return Err(null("cells"));
        }
        let count = order.checked_mul(order).ok_or((QpStatus::UnsupportedOrder, "order overflow".into()))?;
        // SAFETY: caller guarantees `order * order` readable values.
        let cells = unsafe { std::slice::from_raw_parts(cells, count) };
        let rows = cells.chunks(order.max(1)).map(|r| r.iter().map(|&v| v as usize).collect()).collect();
        let sq = LatinSquare::new(rows).map_err(lib_err)?;
        unsafe { write_square(out, sq) }
    })
}

/// Checks `order * order` row-major cells. Returns `QP_STATUS_NOT_LATIN` and
/// fills `violation` (when non-null) if the array is not a Latin square.
///
/// # Safety
/// `cells` must point to `order * order` values; `violation` may be null.
#[no_mangle]
pub unsafe extern "C" fn qp_validate_cells(cells: *const u32, order: usize, violation: *mut QpViolation) -> QpStatus {
    guard(|| {
        if cells.is_null() {
            return Err(null("cells"));
        }
        let count = order.checked_mul(order).ok_or((QpStatus::UnsupportedOrder, "order overflow".into()))?;
        // SAFETY: caller guarantees `order * order` readable values.
        let cells = unsafe { std::slice::from_raw_parts(cells, count) };
        let rows: Vec<Vec<usize>> = cells.chunks(order.max(1)).map(|r| r.iter().map(|&v| v as usize).collect()).collect();
        let found = validate(&rows);
        let report = match found {
            Ok(()) => QpViolation { kind: QpViolationKind::None, row: 0, col: 0, symbol: 0 },
            Err(v) => {
                let (kind, row, col, symbol) = match v {
                    Violation::RowDuplicate { row, col, symbol } => (QpViolationKind::RowDuplicate, row, col, symbol),
                    Violation::ColumnDuplicate { row, col, symbol } => {
                        (QpViolationKind::ColumnDuplicate, row, col, symbol)
                    }
                    Violation::OutOfRange { row, col, symbol } => (QpViolationKind::OutOfRange, row, col, symbol),
                };
                QpViolation { kind, row: row as u32, col: col as u32, symbol: symbol as u32 }
            }
        };
        if !violation.is_null() {
            // SAFETY: non-null and writable per contract.
            unsafe { violation.write(report) };
        }
        found.map_err(|v| (QpStatus::NotLatin, v.to_string()))
    })
}

/// Addition table of ℤ_n on symbols 1..n.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qp_square_cyclic(order: usize, out: *mut *mut QpSquare) -> QpStatus {
    guard(|| {
        let sq = LatinSquare::cyclic(order).map_err(lib_err)?;
        unsafe { write_square(out, sq) }
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qp_square_klein(out: *mut *mut QpSquare) -> QpStatus {
    guard(|| unsafe { write_square(out, LatinSquare::klein()) })
}

/// Releases a square. Null is ignored.
///
/// # Safety
/// `sq` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qp_square_free(sq: *mut QpSquare) {
    if !sq.is_null() {
        // SAFETY: handle was created by Box::into_raw in this crate.
        drop(unsafe { Box::from_raw(sq) });
    }
}

/// Order of the square, or 0 for null.
///
/// # Safety
/// `sq` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qp_square_order(sq: *const QpSquare) -> usize {
    unsafe { sq.as_ref() }.map_or(0, |s| s.0.order())
}

/// The product `row · col`, 1-based.
///
/// # Safety
/// `sq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qp_square_cell(sq: *const QpSquare, row: usize, col: usize, out: *mut u32) -> QpStatus {
    guard(|| {
        let sq = unsafe { square_ref(sq) }?;
        let n = sq.order();
        if !(1..=n).contains(&row) || !(1..=n).contains(&col) {
            return Err((QpStatus::OutOfRange, format!("cell ({row}, {col}) outside order {n}")));
        }
        unsafe { write_out(out, sq.cell(row, col) as u32) }
    })
}

/// Serializes to the text format. Free the result with [`qp_string_free`].
/// Returns null for a null handle.
///
/// # Safety
/// `sq` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qp_square_to_text(sq: *const QpSquare) -> *mut c_char {
    match unsafe { sq.as_ref() } {
        Some(s) => CString::new(s.0.to_string()).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `s` must come from [`qp_square_to_text`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qp_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by CString::into_raw in this crate.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Classifies the mapping with 1-based `images[0..len]`.
///
/// # Safety
/// `sq` must be a live handle, `images` must hold `len` values, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qp_classify(
    sq: *const QpSquare,
    images: *const u32,
    len: usize,
    out: *mut QpClassification,
) -> QpStatus {
    guard(|| {
        let sq = unsafe { square_ref(sq) }?;
        let sigma = unsafe { permutation(images, len) }?;
        let c = classify(sq, &sigma).map_err(lib_err)?;
        let mut result = QpClassification {
            kind: QpMappingKind::Neither,
            defect_size: c.defect.len() as u32,
            defect: 0,
            special: 0,
            x1: 0,
            x2: 0,
        };
        match c.kind {
            MappingKind::Complete => result.kind = QpMappingKind::Complete,
            MappingKind::Quasicomplete { defect, special, preimages } => {
                result = QpClassification {
                    kind: QpMappingKind::Quasicomplete,
                    defect: defect as u32,
                    special: special as u32,
                    x1: preimages.0 as u32,
                    x2: preimages.1 as u32,
                    ..result
                };
            }
            MappingKind::Neither => {}
        }
        unsafe { write_out(out, result) }
    })
}

/// Complete or quasicomplete mappings in lexicographic order. `kind` is a
/// [`QpMappingKind`] other than `Neither`; `limit` 0 means no limit.
///
/// # Safety
/// `sq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qp_find_mappings(
    sq: *const QpSquare,
    kind: u32,
    limit: usize,
    out: *mut *mut QpMappingList,
) -> QpStatus {
    guard(|| {
        let sq = unsafe { square_ref(sq) }?;
        let limit = (limit > 0).then_some(limit);
        let found = match kind {
            k if k == QpMappingKind::Complete as u32 => find_complete_mappings(sq, limit),
            k if k == QpMappingKind::Quasicomplete as u32 => find_quasicomplete_mappings(sq, limit),
            _ => return Err((QpStatus::OutOfRange, format!("cannot search for mapping kind {kind}"))),
        };
        unsafe { write_out(out, Box::into_raw(Box::new(QpMappingList(found)))) }
    })
}

/// # Safety
/// `list` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qp_mapping_list_len(list: *const QpMappingList) -> usize {
    unsafe { list.as_ref() }.map_or(0, |l| l.0.len())
}

/// Copies the `index`-th mapping's 1-based images into `out[0..cap]`.
///
/// # Safety
/// `list` must be a live handle; `out` must have room for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn qp_mapping_list_get(
    list: *const QpMappingList,
    index: usize,
    out: *mut u32,
    cap: usize,
) -> QpStatus {
    guard(|| {
        let list = unsafe { list.as_ref() }.ok_or_else(|| null("list"))?;
        let p = list
            .0
            .get(index)
            .ok_or_else(|| (QpStatus::OutOfRange, format!("index {index} of {}", list.0.len())))?;
        if out.is_null() {
            return Err(null("out"));
        }
        if cap < p.order() {
            return Err((QpStatus::BufferTooSmall, format!("need {} values", p.order())));
        }
        unsafe { write_images(out, p) };
        Ok(())
    })
}

/// # Safety
/// `list` must come from [`qp_find_mappings`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qp_mapping_list_free(list: *mut QpMappingList) {
    if !list.is_null() {
        // SAFETY: created by Box::into_raw in this crate.
        drop(unsafe { Box::from_raw(list) });
    }
}

/// Writes a maximum partial transversal as parallel 1-based `rows`/`cols`
/// arrays (each with room for `cap` values) and its length to `len`.
///
/// # Safety
/// `sq` must be a live handle; `rows`, `cols` must hold `cap` values; `len` writable.
#[no_mangle]
pub unsafe extern "C" fn qp_max_partial_transversal(
    sq: *const QpSquare,
    rows: *mut u32,
    cols: *mut u32,
    cap: usize,
    len: *mut usize,
) -> QpStatus {
    guard(|| {
        let sq = unsafe { square_ref(sq) }?;
        if rows.is_null() || cols.is_null() {
            return Err(null("rows/cols"));
        }
        let t = max_partial_transversal(sq);
        unsafe { write_out(len, t.len()) }?;
        if cap < t.len() {
            return Err((QpStatus::BufferTooSmall, format!("need {} values", t.len())));
        }
        for (i, c) in t.cells.iter().enumerate() {
            // SAFETY: i < t.len() <= cap.
            unsafe {
                rows.add(i).write(c.row as u32);
                cols.add(i).write(c.col as u32);
            }
        }
        Ok(())
    })
}

/// Prolongs `sq` with the mapping `images[0..len]`. `method` is a
/// [`QpMethod`]; `param` is Belyavskaya's
/// `a` or the special preimage `x1`, and is ignored by the classical method.
///
/// # Safety
/// `sq` must be a live handle, `images` must hold `len` values, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qp_prolong(
    sq: *const QpSquare,
    method: u32,
    images: *const u32,
    len: usize,
    param: u32,
    out: *mut *mut QpSquare,
) -> QpStatus {
    guard(|| {
        let sq = unsafe { square_ref(sq) }?;
        let sigma = unsafe { permutation(images, len) }?;
        let p = match method {
            m if m == QpMethod::Classical as u32 => prolong_classical(sq, &sigma),
            m if m == QpMethod::Belyavskaya as u32 => prolong_belyavskaya(sq, &sigma, param as usize),
            m if m == QpMethod::DeriyenkoDudek as u32 => prolong_deriyenko_dudek(sq, &sigma, param as usize),
            _ => return Err((QpStatus::OutOfRange, format!("unknown method {method}"))),
        }
        .map_err(lib_err)?;
        unsafe { write_square(out, p.result) }
    })
}

/// Prolongs via a maximum partial transversal.
///
/// # Safety
/// `sq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qp_prolong_any(sq: *const QpSquare, out: *mut *mut QpSquare) -> QpStatus {
    guard(|| {
        let sq = unsafe { square_ref(sq) }?;
        let p = prolong_any(sq).map_err(lib_err)?;
        unsafe { write_square(out, p.result) }
    })
}

/// Decides isotopy. On a positive verdict the witness is written to
/// `alpha`, `beta`, `gamma` (each with room for `order` values) when non-null.
///
/// # Safety
/// `first`, `second` must be live handles; `isotopic` writable; witness
/// buffers null or sized for the order.
#[no_mangle]
pub unsafe extern "C" fn qp_are_isotopic(
    first: *const QpSquare,
    second: *const QpSquare,
    isotopic: *mut bool,
    alpha: *mut u32,
    beta: *mut u32,
    gamma: *mut u32,
) -> QpStatus {
    guard(|| {
        let l = unsafe { square_ref(first) }?;
        let m = unsafe { square_ref(second) }?;
        let w = are_isotopic(l, m).map_err(lib_err)?;
        unsafe { write_out(isotopic, w.is_some()) }?;
        if let Some(w) = w {
            unsafe {
                write_images(alpha, &w.alpha);
                write_images(beta, &w.beta);
                write_images(gamma, &w.gamma);
            }
        }
        Ok(())
    })
}

/// Scans all reduced squares of `order` (1..6). `threads` 0 uses the default pool.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qp_brualdi_scan(order: usize, threads: usize, out: *mut QpScanReport) -> QpStatus {
    guard(|| {
        let r = brualdi_scan(order, (threads > 0).then_some(threads)).map_err(lib_err)?;
        unsafe {
            write_out(
                out,
                QpScanReport {
                    order: r.order as u32,
                    squares_scanned: r.squares_scanned,
                    min_max_transversal: r.min_max_transversal as u32,
                    witnesses: r.witnesses.len() as u64,
                },
            )
        }
    })
}
