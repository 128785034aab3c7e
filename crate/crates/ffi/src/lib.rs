// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! C ABI over `cayleyaut`.
//!
//! Graphs and permutation groups are handed out as opaque heap handles that
//! the caller releases with the matching `*_free` function. Every fallible
//! call returns a [`CayStatus`]; on failure a message is available from
//! [`cay_last_error_message`] on the same thread. Status values 2 and 3
//! match the CLI exit codes for validation and resource errors.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cayleyaut::abelian::GroupSpec;
use cayleyaut::autgroup::{brute_force_aut, group_equal, is_subgroup, PermutationGroup};
use cayleyaut::cayley::{build_cayley, check_us, CayleyGraph, ConnectionSet};
use cayleyaut::cli::{analyze, AnalyzeOptions, FamilyParams, GraphSpecFile};
use cayleyaut::connect::{edge_connectivity, vertex_connectivity};
use cayleyaut::predict::predicted_group;
use cayleyaut::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CayStatus {
    Ok = 0,
    Validation = 2,
    Resource = 3,
    Internal = 4,
    NullPointer = 5,
    OutOfRange = 6,
    Panic = 7,
}

/// Skip timings in `cay_analyze_json` output.
pub const CAY_ANALYZE_STABLE: u32 = 1;
/// Skip the exhaustive automorphism search.
pub const CAY_ANALYZE_NO_BRUTE: u32 = 2;
/// Include vertex and edge connectivity.
pub const CAY_ANALYZE_CONNECTIVITY: u32 = 4;

/// Opaque Cayley graph handle.
pub struct CayGraph {
    inner: CayleyGraph,
}

/// Opaque permutation group handle.
pub struct CayGroup {
    inner: PermutationGroup,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: CayStatus, msg: impl Into<String>) -> CayStatus {
    set_error(msg.into());
    status
}

fn from_error(err: Error) -> CayStatus {
    let status = match err {
        Error::Dimension { .. } | Error::Argument(_) | Error::Validation(_) => {
            CayStatus::Validation
        }
        Error::Resource { .. } => CayStatus::Resource,
        Error::Inconsistency(_) => CayStatus::Internal,
    };
    fail(status, err.to_string())
}

fn guard(f: impl FnOnce() -> CayStatus) -> CayStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail(CayStatus::Panic, "panic inside cayleyaut"),
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, CayStatus> {
    if p.is_null() {
        return Err(fail(CayStatus::NullPointer, format!("{what} is NULL")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(CayStatus::Validation, format!("{what} is not valid UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> CayStatus {
    if out.is_null() {
        return fail(CayStatus::NullPointer, "output pointer is NULL");
    }
    out.write(value);
    CayStatus::Ok
}

unsafe fn graph_ref<'a>(g: *const CayGraph) -> Result<&'a CayleyGraph, CayStatus> {
    g.as_ref()
        .map(|g| &g.inner)
        .ok_or_else(|| fail(CayStatus::NullPointer, "graph handle is NULL"))
}

unsafe fn group_ref<'a>(g: *const CayGroup) -> Result<&'a PermutationGroup, CayStatus> {
    g.as_ref()
        .map(|g| &g.inner)
        .ok_or_else(|| fail(CayStatus::NullPointer, "group handle is NULL"))
}

fn boxed_graph(inner: CayleyGraph) -> *mut CayGraph {
    Box::into_raw(Box::new(CayGraph { inner }))
}

fn boxed_group(inner: PermutationGroup) -> *mut CayGroup {
    Box::into_raw(Box::new(CayGroup { inner }))
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! try_core {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return from_error(err),
        }
    };
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next `cay_*` call on the same thread.
#[no_mangle]
pub extern "C" fn cay_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds `Cay(Z_{m1} x ... x Z_{mr}; S)`. `elements` holds `count` residue
/// tuples of length `rank`, flattened.
///
/// # Safety
/// `moduli` must point to `rank` values and `elements` to `rank * count`
/// values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cay_graph_new(
    moduli: *const u32,
    rank: usize,
    elements: *const u32,
    count: usize,
    out: *mut *mut CayGraph,
) -> CayStatus {
    guard(|| {
        if moduli.is_null() || (elements.is_null() && count > 0) {
            return fail(CayStatus::NullPointer, "moduli or elements is NULL");
        }
        let moduli = std::slice::from_raw_parts(moduli, rank).to_vec();
        let Some(total) = rank.checked_mul(count) else {
            return fail(CayStatus::OutOfRange, "rank * count overflows");
        };
        let flat: &[u32] = if total == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(elements, total)
        };
        let spec = try_core!(GroupSpec::new(moduli));
        let els = try_core!(flat
            .chunks(rank.max(1))
            .map(|r| spec.element(r))
            .collect::<Result<Vec<_>, _>>());
        let conn = try_core!(ConnectionSet::new(&spec, &els));
        let graph = try_core!(build_cayley(&spec, &conn));
        write_out(out, boxed_graph(graph))
    })
}

/// Builds a graph from spec-file JSON (explicit or family form).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cay_graph_from_spec_json(
    json: *const c_char,
    out: *mut *mut CayGraph,
) -> CayStatus {
    guard(|| {
        let text = try_status!(str_arg(json, "json"));
        let spec = try_core!(GraphSpecFile::parse(text));
        let graph = try_core!(spec.build(&Default::default()));
        write_out(out, boxed_graph(graph))
    })
}

/// Builds a named family graph. `params` uses the CLI syntax, whitespace
/// separated: `"5"`, `"3 2"` or `"n=25 d=5 m=2 powers=0,1"`.
///
/// # Safety
/// `name` and `params` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cay_graph_from_family(
    name: *const c_char,
    params: *const c_char,
    out: *mut *mut CayGraph,
) -> CayStatus {
    guard(|| {
        let name = try_status!(str_arg(name, "name"));
        let params = try_status!(str_arg(params, "params"));
        let args: Vec<String> = params.split_whitespace().map(str::to_string).collect();
        let family =
            try_core!(FamilyParams::from_args(name, &args).and_then(|p| p.into_family(name)));
        let graph = try_core!(family.build());
        write_out(out, boxed_graph(graph))
    })
}

/// # Safety
/// `graph` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cay_graph_free(graph: *mut CayGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Number of vertices, or 0 for a NULL handle.
///
/// # Safety
/// `graph` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cay_graph_vertex_count(graph: *const CayGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.graph().vertex_count())
}

/// Size of the connection set, or 0 for a NULL handle.
///
/// # Safety
/// `graph` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cay_graph_degree(graph: *const CayGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.connection_set().len())
}

/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cay_graph_has_edge(
    graph: *const CayGraph,
    u: usize,
    v: usize,
    out: *mut bool,
) -> CayStatus {
    guard(|| {
        let g = try_status!(graph_ref(graph));
        let n = g.graph().vertex_count();
        if u >= n || v >= n {
            return fail(CayStatus::OutOfRange, format!("vertex out of range 0..{n}"));
        }
        write_out(out, g.graph().has_edge(u, v))
    })
}

/// Whether the connection set has the unique-summation property.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cay_graph_check_us(graph: *const CayGraph, out: *mut bool) -> CayStatus {
    guard(|| {
        let g = try_status!(graph_ref(graph));
        let report = try_core!(check_us(g.group(), g.connection_set()));
        write_out(out, report.holds)
    })
}

/// Full automorphism group by exhaustive search (default limits).
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cay_graph_automorphisms(
    graph: *const CayGraph,
    out: *mut *mut CayGroup,
) -> CayStatus {
    guard(|| {
        let g = try_status!(graph_ref(graph));
        let aut = try_core!(brute_force_aut(g.graph()));
        write_out(out, boxed_group(aut))
    })
}

/// The affine group `L(H) ⋊ Aut(H, S)` as vertex permutations.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cay_graph_predicted_group(
    graph: *const CayGraph,
    out: *mut *mut CayGroup,
) -> CayStatus {
    guard(|| {
        let g = try_status!(graph_ref(graph));
        let group = try_core!(predicted_group(g.group(), g.connection_set()));
        write_out(out, boxed_group(group))
    })
}

/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cay_graph_vertex_connectivity(
    graph: *const CayGraph,
    out: *mut usize,
) -> CayStatus {
    guard(|| {
        let g = try_status!(graph_ref(graph));
        write_out(out, try_core!(vertex_connectivity(g.graph())))
    })
}

/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cay_graph_edge_connectivity(
    graph: *const CayGraph,
    out: *mut usize,
) -> CayStatus {
    guard(|| {
        let g = try_status!(graph_ref(graph));
        write_out(out, try_core!(edge_connectivity(g.graph())))
    })
}

/// # Safety
/// `group` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cay_group_free(group: *mut CayGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Number of elements, or 0 for a NULL handle.
///
/// # Safety
/// `group` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cay_group_order(group: *const CayGroup) -> usize {
    group.as_ref().map_or(0, |g| g.inner.order())
}

/// Number of points acted on, or 0 for a NULL handle.
///
/// # Safety
/// `group` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cay_group_degree(group: *const CayGroup) -> usize {
    group.as_ref().map_or(0, |g| g.inner.degree())
}

/// Copies the image array of element `index` (elements are sorted
/// lexicographically) into `buf`, which must hold `degree` values.
///
/// # Safety
/// `group` must be a live handle; `buf` must be writable for `len` values.
#[no_mangle]
pub unsafe extern "C" fn cay_group_element(
    group: *const CayGroup,
    index: usize,
    buf: *mut u32,
    len: usize,
) -> CayStatus {
    guard(|| {
        let g = try_status!(group_ref(group));
        if buf.is_null() {
            return fail(CayStatus::NullPointer, "buffer is NULL");
        }
        let Some(p) = g.elements().get(index) else {
            return fail(
                CayStatus::OutOfRange,
                format!("element {index} out of range 0..{}", g.order()),
            );
        };
        if len < p.degree() {
            return fail(
                CayStatus::OutOfRange,
                format!("buffer holds {len}, need {}", p.degree()),
            );
        }
        ptr::copy_nonoverlapping(p.images().as_ptr(), buf, p.degree());
        CayStatus::Ok
    })
}

/// # Safety
/// `group` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cay_group_is_transitive(
    group: *const CayGroup,
    out: *mut bool,
) -> CayStatus {
    guard(|| {
        let g = try_status!(group_ref(group));
        write_out(out, g.is_transitive())
    })
}

/// Whether every element of `sub` lies in `sup`.
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cay_group_is_subgroup(
    sub: *const CayGroup,
    sup: *const CayGroup,
    out: *mut bool,
) -> CayStatus {
    guard(|| {
        let a = try_status!(group_ref(sub));
        let b = try_status!(group_ref(sup));
        write_out(out, try_core!(is_subgroup(a, b)))
    })
}

/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cay_group_equal(
    a: *const CayGroup,
    b: *const CayGroup,
    out: *mut bool,
) -> CayStatus {
    guard(|| {
        let a = try_status!(group_ref(a));
        let b = try_status!(group_ref(b));
        write_out(out, try_core!(group_equal(a, b)))
    })
}

/// Runs the analysis pipeline on spec-file JSON and returns the JSON
/// report in `*out`, to be released with `cay_string_free`. `flags` is a
/// bitwise OR of the `CAY_ANALYZE_*` constants.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cay_analyze_json(
    json: *const c_char,
    flags: u32,
    out: *mut *mut c_char,
) -> CayStatus {
    guard(|| {
        let text = try_status!(str_arg(json, "json"));
        let spec = try_core!(GraphSpecFile::parse(text));
        let opts = AnalyzeOptions {
            stable: flags & CAY_ANALYZE_STABLE != 0,
            no_brute: flags & CAY_ANALYZE_NO_BRUTE != 0,
            connectivity: flags & CAY_ANALYZE_CONNECTIVITY != 0,
            ..AnalyzeOptions::default()
        };
        let report = try_core!(analyze(&spec, &opts));
        let s = CString::new(report.to_json()).expect("JSON has no NUL");
        write_out(out, s.into_raw())
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cay_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
