use std::ffi::{CStr, CString};
use std::ptr;

use berger_spectra_ffi::*;

fn param(num: i64, den: i64) -> *mut BergerParam {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { berger_param_new(num, den, &mut p) }, BergerStatus::Ok);
    p
}

fn last_error() -> String {
    let e = berger_last_error();
    assert!(!e.is_null());
    unsafe { CStr::from_ptr(e) }.to_string_lossy().into_owned()
}

#[test]
fn clifford_index_through_handles() {
    unsafe {
        let tau = param(1, 3);
        let mut model = ptr::null_mut();
        assert_eq!(berger_model_clifford(0, 0, &mut model), BergerStatus::Ok);
        assert_eq!(berger_model_dim(model), 2);
        let mut report = ptr::null_mut();
        assert_eq!(berger_index(model, tau, &mut report), BergerStatus::Ok);
        let (mut index, mut nullity) = (0u64, 0u64);
        assert_eq!(berger_report_counts(report, &mut index, &mut nullity), BergerStatus::Ok);
        assert_eq!((index, nullity), (1, 6));
        assert_eq!(berger_report_mode_count(report), 4);
        let (mut v, mut m) = (0.0, 0u64);
        assert_eq!(berger_report_mode(report, 0, &mut v, &mut m), BergerStatus::Ok);
        assert_eq!((v, m), (-4.0, 1));
        assert_eq!(berger_report_mode(report, 5, &mut v, &mut m), BergerStatus::InvalidInput);
        let mut json = ptr::null_mut();
        assert_eq!(berger_report_json(report, &mut json), BergerStatus::Ok);
        let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
        berger_string_free(json);
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed["index"], 1);
        assert_eq!(parsed["tau_sq"], "1/3");
        berger_report_free(report);
        berger_model_free(model);
        berger_param_free(tau);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(berger_param_new(0, 1, &mut p), BergerStatus::Domain);
        assert!(p.is_null());
        assert!(last_error().contains("not in (0, 1]"));
        let text = CString::new("0.3").unwrap();
        assert_eq!(berger_param_parse(text.as_ptr(), &mut p), BergerStatus::InvalidInput);
        assert!(last_error().contains("fraction"));
        let mut m = ptr::null_mut();
        assert_eq!(berger_model_tg_berger(2, 2, &mut m), BergerStatus::Domain);
        assert_eq!(berger_model_totally_real(1, 2, &mut m), BergerStatus::Domain);
        assert_eq!(berger_param_new(1, 2, ptr::null_mut()), BergerStatus::NullPointer);
        // a successful call clears the message
        let tau = param(1, 2);
        assert!(berger_last_error().is_null());
        let mut r = ptr::null_mut();
        assert_eq!(berger_index(ptr::null(), tau, &mut r), BergerStatus::NullPointer);
        assert_eq!(berger_model_veronese(true, &mut m), BergerStatus::Ok);
        assert_eq!(berger_index_with_kmax(m, tau, 1, &mut r), BergerStatus::Truncation);
        berger_model_free(m);
        berger_param_free(tau);
        berger_param_free(ptr::null_mut());
    }
}

#[test]
fn scalar_queries() {
    unsafe {
        let text = CString::new("3/10").unwrap();
        let mut tau = ptr::null_mut();
        assert_eq!(berger_param_parse(text.as_ptr(), &mut tau), BergerStatus::Ok);
        let (mut num, mut den) = (0i64, 0i64);
        assert_eq!(berger_param_tau_sq(tau, &mut num, &mut den), BergerStatus::Ok);
        assert_eq!((num, den), (3, 10));

        let third = param(1, 3);
        let (mut mult, mut a, mut b) = (0u64, 0i64, 0i64);
        assert_eq!(berger_laplace_eigenvalue(1, third, 1, 0, &mut a, &mut b, &mut mult), BergerStatus::Ok);
        assert_eq!((a, b, mult), (5, 1, 4));
        assert_eq!(berger_laplace_eigenvalue(1, third, 1, 1, &mut a, &mut b, &mut mult), BergerStatus::Domain);

        let (mut x, mut y) = (0.0, 0.0);
        assert_eq!(berger_moduli_vector(third, &mut x, &mut y), BergerStatus::Ok);
        assert!((x - 0.5).abs() < 1e-12 && (y - 3f64.sqrt() / 2.0).abs() < 1e-12);

        let mut sign = 0;
        assert_eq!(berger_proof_polynomial_sign(3, 1, tau, 1, 2, &mut sign), BergerStatus::Ok);
        assert_eq!(sign, -1);
        let quarter = param(1, 4);
        assert_eq!(berger_proof_polynomial_sign(3, 1, quarter, 0, 1, &mut sign), BergerStatus::Ok);
        assert_eq!(sign, 0);

        let mut model = ptr::null_mut();
        let mut v = BergerVerdict::Undetermined;
        assert_eq!(berger_model_circle(1, 2, &mut model), BergerStatus::Ok);
        assert_eq!(berger_stability(model, third, &mut v), BergerStatus::Ok);
        assert_eq!(v, BergerVerdict::Unstable);
        berger_model_free(model);
        assert_eq!(berger_model_tg_berger(2, 1, &mut model), BergerStatus::Ok);
        assert_eq!(berger_stability(model, quarter, &mut v), BergerStatus::Ok);
        assert_eq!(v, BergerVerdict::Stable);
        berger_model_free(model);
        for p in [tau, third, quarter] {
            berger_param_free(p);
        }
    }
}

#[test]
fn errors_are_thread_local() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(berger_param_new(2, 1, &mut p), BergerStatus::Domain);
    }
    std::thread::spawn(|| assert!(berger_last_error().is_null())).join().unwrap();
    assert!(!berger_last_error().is_null());
}
