//! C ABI for cocyred.
//!
//! Every function returns a [`CocyredStatus`]; on failure the message is
//! available from [`cocyred_last_error`] on the same thread. Handles are
//! opaque and must be released with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use cocyred::reduction::full_cocycle_basis;
use cocyred::search::enumerate_span;
use cocyred::tensor::{is_hadamard_2d, is_improper_hadamard, is_proper_hadamard};
use cocyred::{
    BitRow, CoboundaryMode, CohModel, Error, FiniteGroup, GroupSpec, Predicate, ReductionOutput, SearchOptions,
    SearchSpace, SignTensor,
};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CocyredStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ModelNotProvided = 3,
    SpanTooLarge = 4,
    BufferTooSmall = 5,
    Internal = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CocyredMode {
    /// Normalized for degree 2, all generators otherwise.
    Default = 0,
    All = 1,
    Normalized = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CocyredPredicate {
    Improper = 0,
    Proper = 1,
    Hadamard2d = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CocyredSearchResult {
    pub examined: u64,
    pub hits: u64,
}

/// Opaque finite group.
pub struct CocyredGroup {
    group: FiniteGroup,
}

/// Opaque reduced basis: representatives followed by coboundaries.
pub struct CocyredBasis {
    output: ReductionOutput,
    space: SearchSpace,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

struct Fail(CocyredStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::ModelNotProvided { .. } => CocyredStatus::ModelNotProvided,
            Error::SpanTooLarge { .. } => CocyredStatus::SpanTooLarge,
            Error::Io(_) | Error::Json(_) | Error::NotAComplex { .. } | Error::Dependent(_) => CocyredStatus::Internal,
            _ => CocyredStatus::InvalidArgument,
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(CocyredStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> CocyredStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            CocyredStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CocyredStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(CocyredStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

fn spec_of(s: &str) -> Result<GroupSpec, Fail> {
    Ok(s.parse::<GroupSpec>()?)
}

unsafe fn write_signs(t: &SignTensor, buf: *mut i8, len: usize) -> Result<(), Fail> {
    if buf.is_null() {
        return Err(null("buf"));
    }
    if len < t.len() {
        return Err(Fail(CocyredStatus::BufferTooSmall, format!("buffer holds {len} entries, need {}", t.len())));
    }
    std::slice::from_raw_parts_mut(buf, t.len()).copy_from_slice(&t.signs());
    Ok(())
}

unsafe fn read_tensor(signs: *const i8, side: usize, arity: usize) -> Result<SignTensor, Fail> {
    if signs.is_null() {
        return Err(null("signs"));
    }
    let len = side
        .checked_pow(arity as u32)
        .ok_or_else(|| Fail(CocyredStatus::InvalidArgument, "tensor too large".into()))?;
    Ok(SignTensor::from_signs(side, arity, std::slice::from_raw_parts(signs, len))?)
}

/// Message of the last failed call on this thread, or an empty string.
/// The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn cocyred_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds the group named by `spec` (for example `"g1:2"`).
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cocyred_group_new(spec: *const c_char, out: *mut *mut CocyredGroup) -> CocyredStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let group = FiniteGroup::build(spec_of(str_arg(spec, "spec")?)?);
        *out = Box::into_raw(Box::new(CocyredGroup { group }));
        Ok(())
    })
}

/// # Safety
/// `group` must come from [`cocyred_group_new`] or be null.
#[no_mangle]
pub unsafe extern "C" fn cocyred_group_free(group: *mut CocyredGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// # Safety
/// `group` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cocyred_group_order(group: *const CocyredGroup, out: *mut usize) -> CocyredStatus {
    guard(|| {
        *out_arg(out, "out")? = ref_arg(group, "group")?.group.order();
        Ok(())
    })
}

/// Product of the 1-based elements `i` and `j`, as a 1-based index.
///
/// # Safety
/// `group` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cocyred_group_multiply(
    group: *const CocyredGroup,
    i: usize,
    j: usize,
    out: *mut usize,
) -> CocyredStatus {
    guard(|| {
        let product = ref_arg(group, "group")?.group.multiply(i, j)?;
        *out_arg(out, "out")? = product;
        Ok(())
    })
}

/// Reduces the built-in model of `spec` in `degree`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cocyred_basis_new(
    spec: *const c_char,
    degree: usize,
    mode: CocyredMode,
    out: *mut *mut CocyredBasis,
) -> CocyredStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let model = CohModel::builtin(spec_of(str_arg(spec, "spec")?)?, degree)?;
        let mode = match mode {
            CocyredMode::Default => CoboundaryMode::default_for(degree),
            CocyredMode::All => CoboundaryMode::All,
            CocyredMode::Normalized => CoboundaryMode::Normalized,
        };
        let output = full_cocycle_basis(&model, degree, mode)?;
        let space = SearchSpace::from_reduction(&output)?;
        *out = Box::into_raw(Box::new(CocyredBasis { output, space }));
        Ok(())
    })
}

/// # Safety
/// `basis` must come from [`cocyred_basis_new`] or be null.
#[no_mangle]
pub unsafe extern "C" fn cocyred_basis_free(basis: *mut CocyredBasis) {
    if !basis.is_null() {
        drop(Box::from_raw(basis));
    }
}

/// Dimension of the cohomology group.
///
/// # Safety
/// `basis` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cocyred_basis_hdim(basis: *const CocyredBasis, out: *mut usize) -> CocyredStatus {
    guard(|| {
        *out_arg(out, "out")? = ref_arg(basis, "basis")?.output.hdim;
        Ok(())
    })
}

/// Number of basis elements, representatives and coboundaries together.
///
/// # Safety
/// `basis` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cocyred_basis_len(basis: *const CocyredBasis, out: *mut usize) -> CocyredStatus {
    guard(|| {
        *out_arg(out, "out")? = ref_arg(basis, "basis")?.space.dim();
        Ok(())
    })
}

/// Number of entries of each tensor, `|G|^n`.
///
/// # Safety
/// `basis` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cocyred_basis_tensor_len(basis: *const CocyredBasis, out: *mut usize) -> CocyredStatus {
    guard(|| {
        let space = &ref_arg(basis, "basis")?.space;
        *out_arg(out, "out")? = space.side().pow(space.arity() as u32);
        Ok(())
    })
}

/// Writes the NUL-terminated label of element `index` (0-based) into `buf`.
///
/// # Safety
/// `basis` must be valid and `buf` must hold `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn cocyred_basis_label(
    basis: *const CocyredBasis,
    index: usize,
    buf: *mut c_char,
    len: usize,
) -> CocyredStatus {
    guard(|| {
        let labels = ref_arg(basis, "basis")?.space.labels();
        let label = labels
            .get(index)
            .ok_or_else(|| {
                Fail(CocyredStatus::InvalidArgument, format!("index {index} out of range 0..{}", labels.len()))
            })?
            .to_string();
        if buf.is_null() {
            return Err(null("buf"));
        }
        if len <= label.len() {
            return Err(Fail(CocyredStatus::BufferTooSmall, format!("label needs {} bytes", label.len() + 1)));
        }
        let dst = std::slice::from_raw_parts_mut(buf as *mut u8, label.len() + 1);
        dst[..label.len()].copy_from_slice(label.as_bytes());
        dst[label.len()] = 0;
        Ok(())
    })
}

/// Writes the ±1 entries of element `index` (0-based) in row-major order.
///
/// # Safety
/// `basis` must be valid and `buf` must hold `len` entries.
#[no_mangle]
pub unsafe extern "C" fn cocyred_basis_element(
    basis: *const CocyredBasis,
    index: usize,
    buf: *mut i8,
    len: usize,
) -> CocyredStatus {
    guard(|| {
        let tensors = ref_arg(basis, "basis")?.space.tensors();
        let t = tensors.get(index).ok_or_else(|| {
            Fail(CocyredStatus::InvalidArgument, format!("index {index} out of range 0..{}", tensors.len()))
        })?;
        write_signs(t, buf, len)
    })
}

/// Writes the pointwise product of the elements selected by `mask`, one byte
/// per basis element, nonzero meaning selected.
///
/// # Safety
/// `basis` must be valid, `mask` must hold `mask_len` bytes and `buf` `len` entries.
#[no_mangle]
pub unsafe extern "C" fn cocyred_basis_combination(
    basis: *const CocyredBasis,
    mask: *const u8,
    mask_len: usize,
    buf: *mut i8,
    len: usize,
) -> CocyredStatus {
    guard(|| {
        let space = &ref_arg(basis, "basis")?.space;
        if mask.is_null() && mask_len > 0 {
            return Err(null("mask"));
        }
        if mask_len != space.dim() {
            return Err(Fail(
                CocyredStatus::InvalidArgument,
                format!("mask has {mask_len} entries, basis has {}", space.dim()),
            ));
        }
        let mut combo = BitRow::zeros(mask_len);
        for i in 0..mask_len {
            if *mask.add(i) != 0 {
                combo.set(i, true);
            }
        }
        write_signs(&space.tensor_of_mask(&combo), buf, len)
    })
}

/// Exhaustively counts combinations of the basis satisfying `predicate`.
/// Fails with `SpanTooLarge` when the span exceeds `limit` combinations.
///
/// # Safety
/// `basis` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn cocyred_basis_search(
    basis: *const CocyredBasis,
    predicate: CocyredPredicate,
    workers: usize,
    limit: u64,
    out: *mut CocyredSearchResult,
) -> CocyredStatus {
    guard(|| {
        let space = &ref_arg(basis, "basis")?.space;
        let out = out_arg(out, "out")?;
        let p = predicate_of(predicate);
        let options = SearchOptions { limit, workers: workers.max(1), max_witnesses: 0, ..SearchOptions::default() };
        let report = enumerate_span(space, &[p], &options)?;
        *out = CocyredSearchResult { examined: report.examined, hits: report.hits_for(p).unwrap_or(0) };
        Ok(())
    })
}

fn predicate_of(p: CocyredPredicate) -> Predicate {
    match p {
        CocyredPredicate::Improper => Predicate::Improper,
        CocyredPredicate::Proper => Predicate::Proper,
        CocyredPredicate::Hadamard2d => Predicate::Hadamard2d,
    }
}

/// Tests a ±1 tensor of `side^arity` entries given in row-major order.
///
/// # Safety
/// `signs` must hold `side^arity` entries and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cocyred_tensor_test(
    signs: *const i8,
    side: usize,
    arity: usize,
    predicate: CocyredPredicate,
    out: *mut bool,
) -> CocyredStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let t = read_tensor(signs, side, arity)?;
        *out = match predicate {
            CocyredPredicate::Improper => is_improper_hadamard(&t),
            CocyredPredicate::Proper => is_proper_hadamard(&t),
            CocyredPredicate::Hadamard2d => is_hadamard_2d(&t)?,
        };
        Ok(())
    })
}
