//! C ABI for stickkit.
//!
//! Conventions:
//!
//! * Every fallible call returns a [`StickkitStatus`] and writes its result
//!   through an out-pointer. On failure the out-pointer is left untouched and
//!   [`stickkit_last_error`] describes the problem.
//! * Exact integers cross the boundary as NUL-terminated decimal strings,
//!   released with [`stickkit_string_free`].
//! * Rows and reports are opaque handles with their own `_free` functions.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use stickkit::identity::{Evaluator, SweepOptions};
use stickkit::report::report_json;
use stickkit::{ExactCoefficients, Family, TriangleRow, VerificationReport};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StickkitStatus {
    Ok = 0,
    InvalidArgument = 1,
    NullPointer = 2,
    OutOfRange = 3,
    Internal = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StickkitKind {
    Pascal = 0,
    Trinomial = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StickkitFamily {
    LittleStick = 0,
    BigStickPuck = 1,
    PascalHockey = 2,
    TrinomialHockey = 3,
    Pyramid = 4,
}

/// Opaque triangle row.
pub struct StickkitRow(TriangleRow);

/// Opaque verification report.
pub struct StickkitReport(VerificationReport);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: StickkitStatus, msg: impl Into<String>) -> StickkitStatus {
    set_error(msg);
    status
}

fn from_lib_error(e: stickkit::Error) -> StickkitStatus {
    fail(StickkitStatus::InvalidArgument, e.to_string())
}

fn guarded(f: impl FnOnce() -> StickkitStatus) -> StickkitStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(StickkitStatus::Internal, "internal panic"),
    }
}

unsafe fn write_string(out: *mut *mut c_char, value: String) -> StickkitStatus {
    if out.is_null() {
        return fail(StickkitStatus::NullPointer, "out pointer is null");
    }
    match CString::new(value) {
        Ok(s) => {
            *out = s.into_raw();
            StickkitStatus::Ok
        }
        Err(_) => fail(StickkitStatus::Internal, "string contains NUL"),
    }
}

impl From<StickkitFamily> for Family {
    fn from(f: StickkitFamily) -> Self {
        match f {
            StickkitFamily::LittleStick => Family::LittleStick,
            StickkitFamily::BigStickPuck => Family::BigStickPuck,
            StickkitFamily::PascalHockey => Family::PascalHockey,
            StickkitFamily::TrinomialHockey => Family::TrinomialHockey,
            StickkitFamily::Pyramid => Family::Pyramid,
        }
    }
}

/// Message for the most recent failure on this thread. Valid until the next
/// stickkit call on the same thread; never NULL.
#[no_mangle]
pub extern "C" fn stickkit_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn stickkit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Binomial coefficient `C(n, k)` as a decimal string; 0 outside `0 <= k <= n`.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn stickkit_binomial(n: i64, k: i64, out: *mut *mut c_char) -> StickkitStatus {
    guarded(|| write_string(out, stickkit::binomial(n, k).to_string()))
}

/// Trinomial coefficient as a decimal string; 0 outside `|k| <= n`.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn stickkit_trinomial(n: i64, k: i64, out: *mut *mut c_char) -> StickkitStatus {
    guarded(|| write_string(out, stickkit::trinomial(n, k).to_string()))
}

/// Multinomial coefficient `n! / prod(parts[i]!)`; 0 unless the parts are
/// non-negative and sum to `n`.
///
/// # Safety
/// `parts` must point to `len` readable values (it may be NULL when `len`
/// is 0) and `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn stickkit_multinomial(
    n: i64,
    parts: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> StickkitStatus {
    guarded(|| {
        let parts: &[i64] = if len == 0 {
            &[]
        } else if parts.is_null() {
            return fail(StickkitStatus::NullPointer, "parts is null");
        } else {
            std::slice::from_raw_parts(parts, len)
        };
        write_string(out, stickkit::multinomial(n, parts).to_string())
    })
}

/// Builds row `n` of the requested triangle.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn stickkit_row_new(kind: StickkitKind, n: i64, out: *mut *mut StickkitRow) -> StickkitStatus {
    guarded(|| {
        if out.is_null() {
            return fail(StickkitStatus::NullPointer, "out pointer is null");
        }
        let row = match kind {
            StickkitKind::Pascal => stickkit::pascal_row(n),
            StickkitKind::Trinomial => stickkit::trinomial_row(n),
        };
        match row {
            Ok(row) => {
                *out = Box::into_raw(Box::new(StickkitRow(row)));
                StickkitStatus::Ok
            }
            Err(e) => from_lib_error(e),
        }
    })
}

/// Number of entries; 0 for NULL.
///
/// # Safety
/// `row` must be NULL or a live handle from [`stickkit_row_new`].
#[no_mangle]
pub unsafe extern "C" fn stickkit_row_len(row: *const StickkitRow) -> usize {
    row.as_ref().map_or(0, |r| r.0.len())
}

/// Triangle position of entry 0: 0 for Pascal rows, `-n` for trinomial rows.
///
/// # Safety
/// `row` must be NULL or a live handle from [`stickkit_row_new`].
#[no_mangle]
pub unsafe extern "C" fn stickkit_row_first_position(row: *const StickkitRow) -> i64 {
    row.as_ref().map_or(0, |r| r.0.kind.first_position(r.0.n))
}

/// Entry `index` (0-based, left to right) as a decimal string.
///
/// # Safety
/// `row` must be a live handle and `out` valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn stickkit_row_entry(
    row: *const StickkitRow,
    index: usize,
    out: *mut *mut c_char,
) -> StickkitStatus {
    guarded(|| {
        let Some(row) = row.as_ref() else {
            return fail(StickkitStatus::NullPointer, "row is null");
        };
        match row.0.entries.get(index) {
            Some(c) => write_string(out, c.to_string()),
            None => fail(
                StickkitStatus::OutOfRange,
                format!("index {index} outside row of length {}", row.0.len()),
            ),
        }
    })
}

/// # Safety
/// `row` must be NULL or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn stickkit_row_free(row: *mut StickkitRow) {
    if !row.is_null() {
        drop(Box::from_raw(row));
    }
}

/// Sweeps `family` over `[0, n_max] x [0, k_max]`. A report with failing
/// cases still returns `STICKKIT_STATUS_OK`; inspect
/// [`stickkit_report_failed`].
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn stickkit_verify(
    family: StickkitFamily,
    n_max: i64,
    k_max: i64,
    fail_fast: bool,
    out: *mut *mut StickkitReport,
) -> StickkitStatus {
    guarded(|| {
        if out.is_null() {
            return fail(StickkitStatus::NullPointer, "out pointer is null");
        }
        let exact = ExactCoefficients::global();
        let result = Evaluator::new(&exact).verify_family_with(family.into(), n_max, k_max, SweepOptions { fail_fast });
        match result {
            Ok(report) => {
                *out = Box::into_raw(Box::new(StickkitReport(report)));
                StickkitStatus::Ok
            }
            Err(e) => from_lib_error(e),
        }
    })
}

/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn stickkit_report_checked(report: *const StickkitReport) -> u64 {
    report.as_ref().map_or(0, |r| r.0.checked as u64)
}

/// # Safety
/// `report` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn stickkit_report_failed(report: *const StickkitReport) -> u64 {
    report.as_ref().map_or(0, |r| r.0.failed as u64)
}

/// The report in its JSON form.
///
/// # Safety
/// `report` must be a live handle and `out` valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn stickkit_report_json(report: *const StickkitReport, out: *mut *mut c_char) -> StickkitStatus {
    guarded(|| match report.as_ref() {
        Some(r) => write_string(out, report_json(&r.0)),
        None => fail(StickkitStatus::NullPointer, "report is null"),
    })
}

/// # Safety
/// `report` must be NULL or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn stickkit_report_free(report: *mut StickkitReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
