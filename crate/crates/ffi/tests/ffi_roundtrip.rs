//! Exercise the C entry points exactly as a foreign caller would: through
//! raw pointers and status codes.

use std::ffi::{c_char, CStr, CString};

use sylvan3_ffi::*;

fn parse(text: &str) -> *mut Sylvan3Ideal {
    let c = CString::new(text).unwrap();
    let mut handle: *mut Sylvan3Ideal = std::ptr::null_mut();
    let status = unsafe { sylvan3_ideal_parse(c.as_ptr(), &mut handle) };
    assert_eq!(status, Sylvan3Status::Ok);
    assert!(!handle.is_null());
    handle
}

fn take_string(ptr: *mut c_char) -> String {
    assert!(!ptr.is_null());
    let s = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_string();
    unsafe { sylvan3_string_free(ptr) };
    s
}

#[test]
fn parse_inspect_free() {
    let ideal = parse("xy, y^3, z");
    let mut count = 0usize;
    assert_eq!(
        unsafe { sylvan3_ideal_generator_count(ideal, &mut count) },
        Sylvan3Status::Ok
    );
    assert_eq!(count, 3);
    let mut buf = vec![0u32; 3 * count];
    assert_eq!(
        unsafe { sylvan3_ideal_generators(ideal, buf.as_mut_ptr(), buf.len()) },
        Sylvan3Status::Ok
    );
    assert_eq!(buf, vec![0, 0, 1, 0, 3, 0, 1, 1, 0]);
    let mut rendered: *mut c_char = std::ptr::null_mut();
    assert_eq!(
        unsafe { sylvan3_ideal_render(ideal, &mut rendered) },
        Sylvan3Status::Ok
    );
    assert_eq!(take_string(rendered), "z, y^3, x*y");
    unsafe { sylvan3_ideal_free(ideal) };
}

#[test]
fn error_codes() {
    let mut handle: *mut Sylvan3Ideal = std::ptr::null_mut();
    assert_eq!(
        unsafe { sylvan3_ideal_parse(std::ptr::null(), &mut handle) },
        Sylvan3Status::NullPointer
    );
    let bad = CString::new("w^2").unwrap();
    assert_eq!(
        unsafe { sylvan3_ideal_parse(bad.as_ptr(), &mut handle) },
        Sylvan3Status::ParseError
    );
    let ideal = parse("xy, z");
    let mut buf = [0u32; 2];
    assert_eq!(
        unsafe { sylvan3_ideal_generators(ideal, buf.as_mut_ptr(), buf.len()) },
        Sylvan3Status::InvalidArgument
    );
    let mut out: *mut c_char = std::ptr::null_mut();
    let a = [1u32, 1, 0];
    let b = [1u32, 1, 1];
    assert_eq!(
        unsafe { sylvan3_matrix_json(ideal, a.as_ptr(), b.as_ptr(), 7, 2, &mut out) },
        Sylvan3Status::InvalidArgument
    );
    unsafe { sylvan3_ideal_free(ideal) };
    unsafe { sylvan3_ideal_free(std::ptr::null_mut()) };
    unsafe { sylvan3_string_free(std::ptr::null_mut()) };
}

#[test]
fn matrix_json_reproduces_block() {
    let ideal = parse("xy, y^3, z");
    let a = [1u32, 1, 1];
    let b = [1u32, 3, 1];
    let mut out: *mut c_char = std::ptr::null_mut();
    let status = unsafe { sylvan3_matrix_json(ideal, a.as_ptr(), b.as_ptr(), 1, 2, &mut out) };
    assert_eq!(status, Sylvan3Status::Ok);
    let doc: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(doc["equal"], serde_json::json!(true));
    assert_eq!(doc["oracle"]["cols"], serde_json::json!(["zy", "yx", "xz"]));
    assert_eq!(doc["oracle"]["entries"][0][0], serde_json::json!("4/9"));
    unsafe { sylvan3_ideal_free(ideal) };
}

#[test]
fn betti_resolve_verify_crosscheck() {
    let ideal = parse("yz, xz, xy^2, x^2y");
    let mut out: *mut c_char = std::ptr::null_mut();
    assert_eq!(
        unsafe { sylvan3_betti_json(ideal, &mut out) },
        Sylvan3Status::Ok
    );
    let doc: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(doc["summands"].as_array().unwrap().len(), 9);

    assert_eq!(
        unsafe { sylvan3_resolve_json(ideal, 2, &mut out) },
        Sylvan3Status::Ok
    );
    let doc: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert!(doc["maps"].as_array().unwrap().len() >= 8);

    let mut ok = 0u8;
    assert_eq!(
        unsafe { sylvan3_verify(ideal, 2, &mut ok) },
        Sylvan3Status::Ok
    );
    assert_eq!(ok, 1);

    let mut equal = 0u8;
    assert_eq!(
        unsafe { sylvan3_crosscheck(ideal, &mut equal) },
        Sylvan3Status::Ok
    );
    assert_eq!(equal, 1);
    unsafe { sylvan3_ideal_free(ideal) };
}
