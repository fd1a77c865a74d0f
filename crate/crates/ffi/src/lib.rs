//! C ABI over the `psik` engine.
//!
//! Groups cross the boundary as opaque [`PsikGroup`] handles owned by the
//! caller and released with [`psik_group_free`]. Every fallible function
//! returns a [`PsikStatus`] and writes its result through an out-pointer,
//! which is left untouched on failure. The message for the most recent
//! failure on the calling thread is available from [`psik_last_error`].
//! Strings returned by the library are NUL-terminated, UTF-8 and released
//! with [`psik_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use psik::catalog::{catalog_with_cap, load_groups, CatalogError};
use psik::criteria::{run_all, RunOptions};
use psik::group::{cyclic_group_with_cap, DEFAULT_CAP};
use psik::psi::{claim_inequality_holds, order_spectrum};
use psik::{report, Error, FiniteGroup};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsikStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// No built-in group has the requested name.
    UnknownGroup = 3,
    /// The input was rejected (bad table, bad document, bad parameter).
    InvalidInput = 4,
    /// The group would exceed the size cap.
    TooLarge = 5,
    /// An index was outside the valid range.
    OutOfRange = 6,
    /// An internal error was caught at the boundary.
    Internal = 7,
}

/// A finite group.
pub struct PsikGroup(FiniteGroup);

/// The groups defined by one document, in document order.
pub struct PsikGroupList(Vec<FiniteGroup>);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).unwrap_or_default());
}

struct Failure(PsikStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::TooLarge { .. } => PsikStatus::TooLarge,
            Error::IndexOutOfRange { .. } => PsikStatus::OutOfRange,
            _ => PsikStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Unknown(_) => Failure(PsikStatus::UnknownGroup, e.to_string()),
            CatalogError::Build { source, .. } => Failure::from(source),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure(PsikStatus::InvalidInput, message.into())
}

/// Runs `body`, converting failures and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> PsikStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            PsikStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal error");
            PsikStatus::Internal
        }
    }
}

fn non_null<T>(p: *const T, what: &str) -> Result<(), Failure> {
    if p.is_null() {
        Err(Failure(PsikStatus::NullPointer, format!("{what} is null")))
    } else {
        Ok(())
    }
}

/// # Safety
/// `p` must be null or point to a NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    non_null(p, what)?;
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(PsikStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

/// # Safety
/// `p` must be null or a live handle.
unsafe fn group<'a>(p: *const PsikGroup) -> Result<&'a FiniteGroup, Failure> {
    non_null(p, "group")?;
    Ok(&(*p).0)
}

fn cap_or_default(cap: usize) -> usize {
    if cap == 0 {
        DEFAULT_CAP
    } else {
        cap
    }
}

fn into_c_string(text: String) -> Result<*mut c_char, Failure> {
    CString::new(text)
        .map(CString::into_raw)
        .map_err(|_| Failure(PsikStatus::Internal, "string contains NUL".into()))
}

fn emit_group(out: *mut *mut PsikGroup, g: FiniteGroup) {
    // SAFETY: callers check `out` for null first.
    unsafe { *out = Box::into_raw(Box::new(PsikGroup(g))) };
}

/// Builds a catalog group by name. `cap` of 0 selects the default cap.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn psik_catalog(
    name: *const c_char,
    cap: usize,
    out: *mut *mut PsikGroup,
) -> PsikStatus {
    guard(|| {
        non_null(out, "out")?;
        let name = read_str(name, "name")?;
        emit_group(out, catalog_with_cap(name, cap_or_default(cap))?);
        Ok(())
    })
}

/// Builds the cyclic group of order `n`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn psik_cyclic(n: usize, out: *mut *mut PsikGroup) -> PsikStatus {
    guard(|| {
        non_null(out, "out")?;
        emit_group(out, cyclic_group_with_cap(n, DEFAULT_CAP)?);
        Ok(())
    })
}

/// Imports an `n × n` row-major Cayley table whose identity is element 0.
///
/// # Safety
/// `name` must be a NUL-terminated string, `table` must point to `n * n`
/// readable values and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn psik_group_from_table(
    name: *const c_char,
    table: *const u32,
    n: usize,
    out: *mut *mut PsikGroup,
) -> PsikStatus {
    guard(|| {
        non_null(out, "out")?;
        non_null(table, "table")?;
        let name = read_str(name, "name")?;
        if n == 0 {
            return Err(Failure::from(Error::ZeroOrder));
        }
        if n > DEFAULT_CAP {
            return Err(Failure::from(Error::TooLarge {
                size: n,
                cap: DEFAULT_CAP,
            }));
        }
        let flat = std::slice::from_raw_parts(table, n * n);
        let rows: Vec<Vec<usize>> = flat
            .chunks(n)
            .map(|r| r.iter().map(|&x| x as usize).collect())
            .collect();
        emit_group(out, FiniteGroup::from_table(name, &rows, false)?);
        Ok(())
    })
}

/// Releases a group handle. Null is ignored.
///
/// # Safety
/// `group` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn psik_group_free(group: *mut PsikGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Parses and builds every group in a definition document.
///
/// # Safety
/// `document` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn psik_defs_load(
    document: *const c_char,
    cap: usize,
    out: *mut *mut PsikGroupList,
) -> PsikStatus {
    guard(|| {
        non_null(out, "out")?;
        let document = read_str(document, "document")?;
        let groups =
            load_groups(document, cap_or_default(cap)).map_err(|e| invalid(e.to_string()))?;
        *out = Box::into_raw(Box::new(PsikGroupList(groups)));
        Ok(())
    })
}

/// Number of groups in a list; 0 for null.
///
/// # Safety
/// `list` must be null or a live list handle.
#[no_mangle]
pub unsafe extern "C" fn psik_group_list_len(list: *const PsikGroupList) -> usize {
    if list.is_null() {
        0
    } else {
        (*list).0.len()
    }
}

/// Copies group `index` of a list into a new handle.
///
/// # Safety
/// `list` must be a live list handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn psik_group_list_get(
    list: *const PsikGroupList,
    index: usize,
    out: *mut *mut PsikGroup,
) -> PsikStatus {
    guard(|| {
        non_null(out, "out")?;
        non_null(list, "list")?;
        let groups = &(*list).0;
        let g = groups.get(index).ok_or_else(|| {
            Failure(
                PsikStatus::OutOfRange,
                format!("index {index} out of range for {} groups", groups.len()),
            )
        })?;
        emit_group(out, g.clone());
        Ok(())
    })
}

/// Releases a list handle. Null is ignored.
///
/// # Safety
/// `list` must be null or a list handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn psik_group_list_free(list: *mut PsikGroupList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// Writes the order of `group` to `out`.
///
/// # Safety
/// `group` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn psik_group_order(group: *const PsikGroup, out: *mut usize) -> PsikStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = self::group(group)?.order();
        Ok(())
    })
}

/// Writes `ψ_k(group)` as a decimal string. Free it with `psik_string_free`.
///
/// # Safety
/// `group` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn psik_psi_k(
    group: *const PsikGroup,
    k: u32,
    out: *mut *mut c_char,
) -> PsikStatus {
    guard(|| {
        non_null(out, "out")?;
        let value = order_spectrum(self::group(group)?).psi_k(k)?;
        *out = into_c_string(value.to_string())?;
        Ok(())
    })
}

/// Writes whether the derived series of `group` reaches the trivial group.
///
/// # Safety
/// `group` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn psik_is_solvable(group: *const PsikGroup, out: *mut bool) -> PsikStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = self::group(group)?.is_solvable();
        Ok(())
    })
}

/// Runs every criterion with `k` scanned over `k_lo..=k_hi` and writes the
/// TSV report, header included. Free it with `psik_string_free`.
///
/// # Safety
/// `group` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn psik_report_tsv(
    group: *const PsikGroup,
    k_lo: u32,
    k_hi: u32,
    out: *mut *mut c_char,
) -> PsikStatus {
    guard(|| {
        non_null(out, "out")?;
        let g = self::group(group)?;
        if k_lo == 0 || k_lo > k_hi {
            return Err(invalid(format!("invalid k window {k_lo}..{k_hi}")));
        }
        let options = RunOptions {
            k_window: k_lo..=k_hi,
            ..RunOptions::default()
        };
        *out = into_c_string(report::render(&[run_all(g, &options)]))?;
        Ok(())
    })
}

/// Writes whether `D_k > 1/(2^k p^(k-1))` for prime `p`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn psik_claim_holds(p: u64, k: u32, out: *mut bool) -> PsikStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = claim_inequality_holds(p, k)?;
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn psik_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or the empty string.
/// Valid until the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn psik_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
