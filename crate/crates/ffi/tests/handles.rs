use std::ffi::{CStr, CString};
use std::ptr;

use fcnlab_ffi::*;

fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { fcn_string_free(p) };
    s
}

fn last_error() -> String {
    let p = fcn_last_error();
    assert!(!p.is_null(), "expected an error message");
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn fcn1_domination_round_trip() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(fcn_graph_fcn(1, &mut g), FcnStatus::Ok);
        assert_eq!(fcn_graph_order(g), 16);
        assert_eq!(fcn_graph_size(g), 20);

        let mut r = ptr::null_mut();
        assert_eq!(fcn_solve(g, FcnKind::Dom, 0.0, true, 1, &mut r), FcnStatus::Ok);
        let (mut status, mut lo, mut hi) = (FcnSolveStatus::BoundsOnly, 0, 0);
        assert_eq!(fcn_result_bounds(r, &mut status, &mut lo, &mut hi), FcnStatus::Ok);
        assert_eq!((status, lo, hi), (FcnSolveStatus::Exact, 6, 6));

        let mut w = ptr::null_mut();
        assert_eq!(fcn_result_witness(r, &mut w), FcnStatus::Ok);
        assert_eq!(fcn_certificate_size(w), 6);
        let mut valid = false;
        assert_eq!(fcn_certificate_verify(w, g, &mut valid), FcnStatus::Ok);
        assert!(valid);

        let mut json = ptr::null_mut();
        assert_eq!(fcn_result_to_json(r, &mut json), FcnStatus::Ok);
        assert!(take_string(json).contains("\"status\":\"exact\""));

        fcn_certificate_free(w);
        fcn_result_free(r);
        fcn_graph_free(g);
    }
}

#[test]
fn construction_and_certificate_json() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(fcn_construct(FcnKind::Tdom, 2, &mut c), FcnStatus::Ok);
        assert_eq!(fcn_certificate_size(c), 30);
        let mut json = ptr::null_mut();
        assert_eq!(fcn_certificate_to_json(c, &mut json), FcnStatus::Ok);
        let text = CString::new(take_string(json)).unwrap();

        let mut back = ptr::null_mut();
        assert_eq!(fcn_certificate_parse(text.as_ptr(), &mut back), FcnStatus::Ok);
        let mut g = ptr::null_mut();
        assert_eq!(fcn_graph_fcn(2, &mut g), FcnStatus::Ok);
        let mut valid = false;
        assert_eq!(fcn_certificate_verify(back, g, &mut valid), FcnStatus::Ok);
        assert!(valid);

        // Checked against a different graph the digest guard fires.
        let mut g1 = ptr::null_mut();
        assert_eq!(fcn_graph_fcn(1, &mut g1), FcnStatus::Ok);
        assert_eq!(fcn_certificate_verify(back, g1, &mut valid), FcnStatus::DigestMismatch);
        assert!(last_error().contains("digest"));

        for p in [g, g1] {
            fcn_graph_free(p);
        }
        fcn_certificate_free(back);
        fcn_certificate_free(c);
    }
}

#[test]
fn invalid_witness_reports_violation() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(fcn_graph_fcn(0, &mut g), FcnStatus::Ok);
        let mut json = ptr::null_mut();
        assert_eq!(fcn_graph_to_json(g, &mut json), FcnStatus::Ok);
        let graph_json: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(graph_json["n"], 4);

        let mut c = ptr::null_mut();
        assert_eq!(fcn_construct(FcnKind::Dom, 1, &mut c), FcnStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(fcn_certificate_to_json(c, &mut text), FcnStatus::Ok);
        let mut cert: serde_json::Value = serde_json::from_str(&take_string(text)).unwrap();
        // Drop one vertex; a five-vertex set cannot dominate FCN(1).
        cert["vertices"].as_array_mut().unwrap().pop();
        let text = CString::new(cert.to_string()).unwrap();
        let mut bad = ptr::null_mut();
        assert_eq!(fcn_certificate_parse(text.as_ptr(), &mut bad), FcnStatus::Ok);
        let mut g1 = ptr::null_mut();
        assert_eq!(fcn_graph_fcn(1, &mut g1), FcnStatus::Ok);
        let mut valid = true;
        assert_eq!(fcn_certificate_verify(bad, g1, &mut valid), FcnStatus::Ok);
        assert!(!valid);
        assert!(!last_error().is_empty());

        fcn_certificate_free(bad);
        fcn_certificate_free(c);
        fcn_graph_free(g1);
        fcn_graph_free(g);
    }
}

#[test]
fn errors_are_codes_not_crashes() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(fcn_graph_parse(ptr::null(), &mut g), FcnStatus::NullPointer);
        assert!(g.is_null());

        let text = CString::new("0 0\n").unwrap();
        assert_eq!(fcn_graph_parse(text.as_ptr(), &mut g), FcnStatus::InvalidGraph);
        assert!(last_error().contains("self-loop"));

        let text = CString::new("{\"n\": 3, \"edges\": [[0,").unwrap();
        assert_eq!(fcn_graph_parse(text.as_ptr(), &mut g), FcnStatus::Parse);
        assert!(last_error().contains("line 1"));

        let mut c = ptr::null_mut();
        assert_eq!(fcn_construct(FcnKind::Dim, 2, &mut c), FcnStatus::Unsupported);
        assert_eq!(fcn_construct(FcnKind::Dom, 0, &mut c), FcnStatus::Unsupported);
        assert!(c.is_null());

        let mut r = ptr::null_mut();
        assert_eq!(
            fcn_solve(ptr::null(), FcnKind::Dom, 1.0, false, 1, &mut r),
            FcnStatus::NullPointer
        );

        let mut big = ptr::null_mut();
        assert_eq!(fcn_graph_fcn(2, &mut big), FcnStatus::Ok);
        assert_eq!(fcn_solve(big, FcnKind::Dom, 0.0, true, 1, &mut r), FcnStatus::TooLarge);
        fcn_graph_free(big);

        // Freeing null is a no-op.
        fcn_graph_free(ptr::null_mut());
        fcn_result_free(ptr::null_mut());
        fcn_certificate_free(ptr::null_mut());
        fcn_string_free(ptr::null_mut());
        assert_eq!(fcn_graph_order(ptr::null()), 0);
    }
}

#[test]
fn rooted_product_and_infeasible_result() {
    unsafe {
        let (p2, c4) = (
            CString::new("0 1\n").unwrap(),
            CString::new("0 1\n1 2\n2 3\n3 0\n").unwrap(),
        );
        let (mut gamma, mut omega, mut prod) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        assert_eq!(fcn_graph_parse(p2.as_ptr(), &mut gamma), FcnStatus::Ok);
        assert_eq!(fcn_graph_parse(c4.as_ptr(), &mut omega), FcnStatus::Ok);
        let root = CString::new("0").unwrap();
        assert_eq!(
            fcn_graph_rooted_product(gamma, omega, root.as_ptr(), &mut prod),
            FcnStatus::Ok
        );
        assert_eq!(fcn_graph_order(prod), 8);
        assert_eq!(fcn_graph_size(prod), 9);
        let missing = CString::new("nope").unwrap();
        let mut none = ptr::null_mut();
        assert_eq!(
            fcn_graph_rooted_product(gamma, omega, missing.as_ptr(), &mut none),
            FcnStatus::InvalidArgument
        );

        let mut r = ptr::null_mut();
        assert_eq!(fcn_solve(omega, FcnKind::Ridom, 0.0, true, 1, &mut r), FcnStatus::Ok);
        let (mut status, mut lo, mut hi) = (FcnSolveStatus::Exact, 0, 0);
        assert_eq!(fcn_result_bounds(r, &mut status, &mut lo, &mut hi), FcnStatus::Ok);
        assert_eq!(status, FcnSolveStatus::Infeasible);
        assert_eq!(hi, usize::MAX);
        let mut w = ptr::dangling_mut();
        assert_eq!(fcn_result_witness(r, &mut w), FcnStatus::Ok);
        assert!(w.is_null());

        fcn_result_free(r);
        for g in [gamma, omega, prod] {
            fcn_graph_free(g);
        }
    }
}
