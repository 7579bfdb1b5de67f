//! C ABI for the sylvan3 library.
//!
//! Conventions:
//! - Ideals are opaque handles created by [`sylvan3_ideal_parse`] and
//!   released by [`sylvan3_ideal_free`].
//! - Every function returns a [`Sylvan3Status`]; results come back through
//!   out-pointers.
//! - Strings returned through out-pointers are NUL-terminated, allocated by
//!   this library, and must be released with [`sylvan3_string_free`].
//! - Degree vectors are passed as pointers to three u32 exponents (x, y, z).
//!
//! Computation results are JSON documents with the same "sylvan3/1" schema
//! the command-line tool prints, so bindings in any language can share one
//! decoder.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use serde_json::json;

use sylvan3::closed;
use sylvan3::fence;
use sylvan3::ideal::{DegreeVector, MonomialIdeal};
use sylvan3::resolution::{betti_support, build_resolution, degree_box, Method};

/// Status codes returned by every function in this library.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sylvan3Status {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    ComputeError = 5,
}

/// Opaque handle to a monomial ideal in three variables.
pub struct Sylvan3Ideal {
    inner: MonomialIdeal,
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(std::ptr::null_mut(), CString::into_raw)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Sylvan3Status {
    if out.is_null() {
        return Sylvan3Status::NullPointer;
    }
    unsafe { out.write(value) };
    Sylvan3Status::Ok
}

unsafe fn ideal_ref<'a>(ideal: *const Sylvan3Ideal) -> Option<&'a MonomialIdeal> {
    unsafe { ideal.as_ref().map(|i| &i.inner) }
}

unsafe fn degree_from(ptr: *const u32) -> Option<DegreeVector> {
    if ptr.is_null() {
        return None;
    }
    let s = unsafe { std::slice::from_raw_parts(ptr, 3) };
    Some(DegreeVector::new(s[0], s[1], s[2]))
}

fn method_from(code: u8) -> Option<Method> {
    match code {
        0 => Some(Method::Oracle),
        1 => Some(Method::Closed),
        2 => Some(Method::Both),
        _ => None,
    }
}

/// Guard against panics crossing the boundary.
fn guarded(f: impl FnOnce() -> Sylvan3Status) -> Sylvan3Status {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(Sylvan3Status::ComputeError)
}

/// Parse a generator list ("x^3*z, xyz" or one monomial per line) into an
/// ideal handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be a valid
/// pointer.  The returned handle must be freed with [`sylvan3_ideal_free`].
#[no_mangle]
pub unsafe extern "C" fn sylvan3_ideal_parse(
    text: *const c_char,
    out: *mut *mut Sylvan3Ideal,
) -> Sylvan3Status {
    guarded(|| {
        if text.is_null() || out.is_null() {
            return Sylvan3Status::NullPointer;
        }
        let Ok(text) = (unsafe { CStr::from_ptr(text) }).to_str() else {
            return Sylvan3Status::InvalidUtf8;
        };
        match MonomialIdeal::parse(text) {
            Ok(inner) => {
                let handle = Box::into_raw(Box::new(Sylvan3Ideal { inner }));
                unsafe { write_out(out, handle) }
            }
            Err(_) => Sylvan3Status::ParseError,
        }
    })
}

/// Release an ideal handle.  Passing NULL is a no-op.
///
/// # Safety
/// `ideal` must be a handle from [`sylvan3_ideal_parse`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sylvan3_ideal_free(ideal: *mut Sylvan3Ideal) {
    if !ideal.is_null() {
        drop(unsafe { Box::from_raw(ideal) });
    }
}

/// Number of minimal generators.
///
/// # Safety
/// `ideal` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sylvan3_ideal_generator_count(
    ideal: *const Sylvan3Ideal,
    out: *mut usize,
) -> Sylvan3Status {
    guarded(|| {
        let Some(i) = (unsafe { ideal_ref(ideal) }) else {
            return Sylvan3Status::NullPointer;
        };
        unsafe { write_out(out, i.gens().len()) }
    })
}

/// Write the minimal generators as exponent triples into `buf`
/// (3·generator_count u32 values, x,y,z per generator).
///
/// # Safety
/// `buf` must point to at least `len` writable u32 values.
#[no_mangle]
pub unsafe extern "C" fn sylvan3_ideal_generators(
    ideal: *const Sylvan3Ideal,
    buf: *mut u32,
    len: usize,
) -> Sylvan3Status {
    guarded(|| {
        let Some(i) = (unsafe { ideal_ref(ideal) }) else {
            return Sylvan3Status::NullPointer;
        };
        if buf.is_null() {
            return Sylvan3Status::NullPointer;
        }
        if len < 3 * i.gens().len() {
            return Sylvan3Status::InvalidArgument;
        }
        let slice = unsafe { std::slice::from_raw_parts_mut(buf, 3 * i.gens().len()) };
        for (g, chunk) in i.gens().iter().zip(slice.chunks_mut(3)) {
            chunk.copy_from_slice(&g.0);
        }
        Sylvan3Status::Ok
    })
}

/// Canonical generator list, e.g. "z, y^3, x*y".
///
/// # Safety
/// `out` receives a string owned by the caller; free it with
/// [`sylvan3_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sylvan3_ideal_render(
    ideal: *const Sylvan3Ideal,
    out: *mut *mut c_char,
) -> Sylvan3Status {
    guarded(|| {
        let Some(i) = (unsafe { ideal_ref(ideal) }) else {
            return Sylvan3Status::NullPointer;
        };
        unsafe { write_out(out, to_c_string(i.render())) }
    })
}

/// Free summand degrees and ranks as a JSON document.
///
/// # Safety
/// As for [`sylvan3_ideal_render`].
#[no_mangle]
pub unsafe extern "C" fn sylvan3_betti_json(
    ideal: *const Sylvan3Ideal,
    out: *mut *mut c_char,
) -> Sylvan3Status {
    guarded(|| {
        let Some(i) = (unsafe { ideal_ref(ideal) }) else {
            return Sylvan3Status::NullPointer;
        };
        let support = betti_support(i);
        let summands: Vec<serde_json::Value> = support
            .iter()
            .enumerate()
            .flat_map(|(hom, level)| {
                level
                    .iter()
                    .map(move |(d, r)| {
                        json!({"hom": hom, "degree": [d.0[0], d.0[1], d.0[2]], "rank": r})
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        let doc = json!({"schema": "sylvan3/1", "summands": summands});
        unsafe { write_out(out, to_c_string(doc.to_string())) }
    })
}

/// One differential block between degrees `a` (target) and `b` (source), as
/// JSON.  `hom` is 0 or 1; `method` is 0 = fence sum, 1 = closed form,
/// 2 = both (and compare).
///
/// # Safety
/// `a` and `b` must each point to three u32 exponents.
#[no_mangle]
pub unsafe extern "C" fn sylvan3_matrix_json(
    ideal: *const Sylvan3Ideal,
    a: *const u32,
    b: *const u32,
    hom: u8,
    method: u8,
    out: *mut *mut c_char,
) -> Sylvan3Status {
    guarded(|| {
        let Some(i) = (unsafe { ideal_ref(ideal) }) else {
            return Sylvan3Status::NullPointer;
        };
        let (Some(a), Some(b)) = (unsafe { degree_from(a) }, unsafe { degree_from(b) }) else {
            return Sylvan3Status::NullPointer;
        };
        let Some(method) = method_from(method) else {
            return Sylvan3Status::InvalidArgument;
        };
        if hom > 1 {
            return Sylvan3Status::InvalidArgument;
        }
        let mut doc = json!({
            "schema": "sylvan3/1",
            "from": [b.0[0], b.0[1], b.0[2]],
            "to": [a.0[0], a.0[1], a.0[2]],
            "hom": hom,
        });
        if matches!(method, Method::Oracle | Method::Both) {
            doc["oracle"] = fence::matrix(i, &a, &b, hom).to_json();
        }
        if matches!(method, Method::Closed | Method::Both) {
            match closed::matrix(i, &a, &b, hom) {
                Ok(m) => doc["closed"] = m.to_json(),
                Err(_) => return Sylvan3Status::ComputeError,
            }
        }
        if method == Method::Both {
            doc["equal"] = json!(doc["oracle"] == doc["closed"]);
        }
        unsafe { write_out(out, to_c_string(doc.to_string())) }
    })
}

/// The full resolution (summands and blocks) as JSON.
///
/// # Safety
/// As for [`sylvan3_betti_json`].
#[no_mangle]
pub unsafe extern "C" fn sylvan3_resolve_json(
    ideal: *const Sylvan3Ideal,
    method: u8,
    out: *mut *mut c_char,
) -> Sylvan3Status {
    guarded(|| {
        let Some(i) = (unsafe { ideal_ref(ideal) }) else {
            return Sylvan3Status::NullPointer;
        };
        let Some(method) = method_from(method) else {
            return Sylvan3Status::InvalidArgument;
        };
        let Ok(res) = build_resolution(i, method) else {
            return Sylvan3Status::ComputeError;
        };
        let mut summands = Vec::new();
        for (hom, level) in res.summands.iter().enumerate() {
            for s in level {
                summands.push(json!({
                    "hom": hom,
                    "degree": [s.degree.0[0], s.degree.0[1], s.degree.0[2]],
                    "rank": s.rank(),
                }));
            }
        }
        let mut maps = Vec::new();
        for (hom, level) in res.maps.iter().enumerate() {
            for blk in level {
                let tgt = &res.summands[hom][blk.target];
                let src = &res.summands[hom + 1][blk.source];
                maps.push(json!({
                    "hom": hom,
                    "target": [tgt.degree.0[0], tgt.degree.0[1], tgt.degree.0[2]],
                    "source": [src.degree.0[0], src.degree.0[1], src.degree.0[2]],
                    "chain": blk.chain_matrix.to_json(),
                }));
            }
        }
        let doc = json!({"schema": "sylvan3/1", "summands": summands, "maps": maps});
        unsafe { write_out(out, to_c_string(doc.to_string())) }
    })
}

/// Build the resolution and verify it (complex, degreewise exactness,
/// Betti ranks, unimodularity).  Writes 1 into `out_ok` on success, 0 on a
/// verification failure.
///
/// # Safety
/// `out_ok` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sylvan3_verify(
    ideal: *const Sylvan3Ideal,
    method: u8,
    out_ok: *mut u8,
) -> Sylvan3Status {
    guarded(|| {
        let Some(i) = (unsafe { ideal_ref(ideal) }) else {
            return Sylvan3Status::NullPointer;
        };
        let Some(method) = method_from(method) else {
            return Sylvan3Status::InvalidArgument;
        };
        let Ok(res) = build_resolution(i, method) else {
            return Sylvan3Status::ComputeError;
        };
        let report = res.verify_exact_and_minimal(i);
        let unimodular = degree_box(i)
            .iter()
            .all(|d| sylvan3::hedge::verify_unimodular(&sylvan3::koszul::koszul_complex(i, d)));
        unsafe { write_out(out_ok, u8::from(report.ok() && unimodular)) }
    })
}

/// Compare the fence sum and the closed form on every summand block.
/// Writes 1 into `out_equal` when all blocks agree.
///
/// # Safety
/// `out_equal` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sylvan3_crosscheck(
    ideal: *const Sylvan3Ideal,
    out_equal: *mut u8,
) -> Sylvan3Status {
    guarded(|| {
        let Some(i) = (unsafe { ideal_ref(ideal) }) else {
            return Sylvan3Status::NullPointer;
        };
        let support = betti_support(i);
        let mut equal = true;
        for hom in 0..2usize {
            let mut oracle = fence::Oracle::new(i, hom as u8);
            for (b, _) in &support[hom + 1] {
                for (a, _) in &support[hom] {
                    if !a.lt(b) {
                        continue;
                    }
                    let o = fence::matrix_with(&mut oracle, a, b);
                    let Ok(c) = closed::matrix(i, a, b, hom as u8) else {
                        return Sylvan3Status::ComputeError;
                    };
                    equal &= o == c;
                }
            }
        }
        unsafe { write_out(out_equal, u8::from(equal)) }
    })
}

/// Release a string returned by this library.  Passing NULL is a no-op.
///
/// # Safety
/// `s` must originate from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sylvan3_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
