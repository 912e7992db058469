use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use mq_ffi::*;

fn last_error() -> Option<String> {
    let p = mq_last_error_message();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { mq_string_free(p) };
    s
}

#[test]
fn default_run_round_trip() {
    let mut report = ptr::null_mut();
    let status = unsafe { mq_report_run(42, ptr::null(), 0, 0, &mut report) };
    assert_eq!(status, MqStatus::Ok, "{:?}", last_error());
    assert!(last_error().is_none());
    unsafe {
        assert!(mq_report_overall(report));
        assert_eq!(mq_report_fail_count(report), 0);
        assert!(mq_report_check_count(report) > 0);

        let mut json = ptr::null_mut();
        assert_eq!(mq_report_to_json(report, &mut json), MqStatus::Ok);
        let doc: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(doc["overall"], true);
        assert_eq!(doc["checks"].as_array().unwrap().len(), mq_report_check_count(report));

        let mut text = ptr::null_mut();
        assert_eq!(mq_report_to_text(report, &mut text), MqStatus::Ok);
        assert!(take_string(text).contains("overall: PASS"));

        let id = CString::new("q_S").unwrap();
        let mut st = MqCheckStatus::Pass;
        assert_eq!(mq_report_check_status(report, id.as_ptr(), &mut st), MqStatus::Ok);
        assert_eq!(st, MqCheckStatus::Assumption);

        let missing = CString::new("no_such_check").unwrap();
        assert_eq!(mq_report_check_status(report, missing.as_ptr(), &mut st), MqStatus::NotFound);
        assert!(last_error().unwrap().contains("no_such_check"));

        mq_report_free(report);
    }
}

#[test]
fn explicit_degenerate_forms_fail_verification() {
    let r = CString::new("x0^2").unwrap();
    let s = CString::new("x0^3").unwrap();
    let primes = [7u64];
    let mut report = ptr::null_mut();
    unsafe {
        let status = mq_report_run_explicit(r.as_ptr(), s.as_ptr(), primes.as_ptr(), primes.len(), &mut report);
        assert_eq!(status, MqStatus::Ok, "{:?}", last_error());
        assert!(!mq_report_overall(report));
        assert!(mq_report_fail_count(report) > 0);
        mq_report_free(report);
    }
}

#[test]
fn errors_map_to_status_codes() {
    let mut report = ptr::null_mut();
    unsafe {
        assert_eq!(mq_report_run(1, ptr::null(), 0, 0, ptr::null_mut()), MqStatus::NullPointer);
        assert_eq!(mq_report_run(1, ptr::null(), 2, 0, &mut report), MqStatus::NullPointer);

        let bad = [11u64];
        assert_eq!(mq_report_run(1, bad.as_ptr(), 1, 0, &mut report), MqStatus::ConfigError);
        assert!(report.is_null());
        assert!(last_error().is_some());

        let r = CString::new("x0^2 +").unwrap();
        let s = CString::new("x1^3").unwrap();
        assert_eq!(
            mq_report_run_explicit(r.as_ptr(), s.as_ptr(), ptr::null(), 0, &mut report),
            MqStatus::ConfigError
        );
        assert_eq!(
            mq_report_run_explicit(ptr::null(), s.as_ptr(), ptr::null(), 0, &mut report),
            MqStatus::NullPointer
        );

        let mut text = ptr::null_mut();
        assert_eq!(mq_report_to_text(ptr::null(), &mut text), MqStatus::NullPointer);
        assert!(!mq_report_overall(ptr::null()));
        assert_eq!(mq_report_check_count(ptr::null()), 0);
        mq_report_free(ptr::null_mut());
        mq_string_free(ptr::null_mut());
    }
}

#[test]
fn exhausted_resamples_status() {
    let primes = [7u64, 13];
    let exhausted = (0..20u64).any(|seed| {
        let mut report = ptr::null_mut();
        let st = unsafe { mq_report_run(seed, primes.as_ptr(), primes.len(), 1, &mut report) };
        unsafe { mq_report_free(report) };
        st == MqStatus::ExhaustedResamples
    });
    assert!(exhausted);
}

#[test]
fn subgroup_count() {
    let mut n = 0u64;
    assert_eq!(unsafe { mq_count_order_q_subgroups(3, 4, &mut n) }, MqStatus::Ok);
    assert_eq!(n, 40);
    assert_eq!(unsafe { mq_count_order_q_subgroups(4, 2, &mut n) }, MqStatus::InvalidArgument);
    assert_eq!(unsafe { mq_count_order_q_subgroups(3, 4, ptr::null_mut()) }, MqStatus::NullPointer);
}

#[test]
fn certify_seed() {
    let mut cert = MqCurveCertificate::default();
    assert_eq!(unsafe { mq_certify_seed(5, 13, &mut cert) }, MqStatus::Ok, "{:?}", last_error());
    assert!(cert.valid);
    assert_eq!(cert.prime, 13);
    assert_eq!(cert.zeta_image, 3);
    assert_eq!(cert.points_found % 3, 0);
    assert_eq!(cert.orbit_count * 3, cert.points_found);
    assert_eq!(unsafe { mq_certify_seed(5, 5, &mut cert) }, MqStatus::ConfigError);
}

#[test]
fn header_is_generated_and_compiles() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = dir.join("include/mq.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "mq_report_run",
        "mq_report_run_explicit",
        "mq_report_free",
        "mq_string_free",
        "mq_last_error_message",
        "mq_certify_seed",
        "MQ_STATUS_OK",
        "typedef struct MqReport MqReport",
    ] {
        assert!(text.contains(name), "header lacks {name}");
    }

    let Ok(probe) = Command::new("cc").arg("--version").output() else {
        eprintln!("cc not found; skipping header compile check");
        return;
    };
    if !probe.status.success() {
        return;
    }
    let tmp = std::env::temp_dir().join(format!("mq_header_check_{}.c", std::process::id()));
    std::fs::write(
        &tmp,
        "#include \"mq.h\"\nint main(void) { MqReport *r = 0; (void)mq_report_run(42, 0, 0, 0, &r); mq_report_free(r); return 0; }\n",
    )
    .unwrap();
    let out = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(dir.join("include"))
        .arg(&tmp)
        .output()
        .unwrap();
    let _ = std::fs::remove_file(&tmp);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
