//! C ABI for the mq-core verification pipeline.
//!
//! Every entry point returns an [`MqStatus`] (or a plain value for the
//! infallible accessors) and never unwinds across the boundary. On failure a
//! message is available from [`mq_last_error_message`] on the same thread.
//!
//! Reports are opaque [`MqReport`] handles released with
//! [`mq_report_free`]; strings returned through `char **` out-parameters are
//! released with [`mq_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use mq_core::curve::{certify_over_fp, CurveCertificate};
use mq_core::group::count_order_q_subgroups;
use mq_core::poly::{build_curve_forms, io};
use mq_core::report::{
    default_zeta_image, render_report, run_pipeline, select_forms, ConfigError, Format, PipelineConfig,
    PipelineError, Status, VerificationReport, DEFAULT_MAX_RESAMPLES,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ConfigError = 3,
    ExhaustedResamples = 4,
    ComputationError = 5,
    NotFound = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MqCheckStatus {
    Pass = 0,
    Fail = 1,
    Assumption = 2,
}

/// Opaque verification report.
pub struct MqReport {
    inner: VerificationReport,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MqCurveCertificate {
    pub prime: u64,
    pub zeta_image: u64,
    pub points_enumerated: u64,
    pub points_found: u64,
    pub singular_points: u64,
    pub orbit_count: u64,
    pub all_smooth: bool,
    pub free_orbits: bool,
    pub hasse_weil_ok: bool,
    pub resultant_nonzero: bool,
    pub coordinate_points_excluded: bool,
    pub valid: bool,
}

impl From<&CurveCertificate> for MqCurveCertificate {
    fn from(c: &CurveCertificate) -> Self {
        Self {
            prime: c.prime,
            zeta_image: c.zeta_image,
            points_enumerated: c.points_enumerated,
            points_found: c.points_found,
            singular_points: c.singular_points,
            orbit_count: c.orbit_count,
            all_smooth: c.all_smooth,
            free_orbits: c.free_orbits,
            hasse_weil_ok: c.hasse_weil_ok,
            resultant_nonzero: c.resultant_nonzero,
            coordinate_points_excluded: c.coordinate_points_excluded,
            valid: c.is_valid(),
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_last_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(MqStatus, String);

impl From<PipelineError> for Failure {
    fn from(e: PipelineError) -> Self {
        let status = match e {
            PipelineError::Config(_) => MqStatus::ConfigError,
            PipelineError::ExhaustedResamples { .. } => MqStatus::ExhaustedResamples,
            _ => MqStatus::ComputationError,
        };
        Failure(status, e.to_string())
    }
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure(MqStatus::ConfigError, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(MqStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into a status code.
fn guard<F>(f: F) -> MqStatus
where
    F: FnOnce() -> Result<(), Failure>,
{
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MqStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_last_error(format!("panic: {msg}"));
            MqStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(MqStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn read_primes(primes: *const u64, n: usize) -> Result<Vec<u64>, Failure> {
    if n == 0 {
        return Ok(mq_core::report::DEFAULT_PRIMES.to_vec());
    }
    if primes.is_null() {
        return Err(null("primes"));
    }
    Ok(slice::from_raw_parts(primes, n).to_vec())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior NUL").into_raw()
}

fn finish_run(config: PipelineConfig, out: *mut *mut MqReport) -> Result<(), Failure> {
    config.validate()?;
    let inner = run_pipeline(&config)?;
    unsafe { *out = Box::into_raw(Box::new(MqReport { inner })) };
    Ok(())
}

/// Runs the pipeline on forms sampled from `seed`.
///
/// `primes` may be null when `n_primes` is 0, which selects the default
/// primes 7 and 13. `max_resamples` of 0 selects the default (100).
///
/// # Safety
/// `primes` must point to `n_primes` readable values and `out` must be a
/// valid pointer to write the handle to.
#[no_mangle]
pub unsafe extern "C" fn mq_report_run(
    seed: u64,
    primes: *const u64,
    n_primes: usize,
    max_resamples: u32,
    out: *mut *mut MqReport,
) -> MqStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let mut config = PipelineConfig::with_seed(seed);
        config.primes = read_primes(primes, n_primes)?;
        config.max_resamples = if max_resamples == 0 { DEFAULT_MAX_RESAMPLES } else { max_resamples };
        finish_run(config, out)
    })
}

/// Runs the pipeline on explicit forms r (degree 2) and s (degree 3) in
/// x0, x1, given as text (`"2*x0^2 + x1^2"`) or JSON.
///
/// # Safety
/// `r` and `s` must be NUL-terminated strings; `primes` and `out` as in
/// [`mq_report_run`].
#[no_mangle]
pub unsafe extern "C" fn mq_report_run_explicit(
    r: *const c_char,
    s: *const c_char,
    primes: *const u64,
    n_primes: usize,
    out: *mut *mut MqReport,
) -> MqStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let parse = |text: &str| io::parse_any(text, 2).map_err(|e| ConfigError::Parse(e.to_string()));
        let r = parse(read_str(r, "r")?)?;
        let s = parse(read_str(s, "s")?)?;
        let mut config = PipelineConfig::explicit(&r, &s)?;
        config.primes = read_primes(primes, n_primes)?;
        finish_run(config, out)
    })
}

/// Whether no check failed. A null handle reports false.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mq_report_overall(report: *const MqReport) -> bool {
    report.as_ref().is_some_and(|r| r.inner.overall)
}

/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mq_report_check_count(report: *const MqReport) -> usize {
    report.as_ref().map_or(0, |r| r.inner.checks.len())
}

/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mq_report_fail_count(report: *const MqReport) -> usize {
    report.as_ref().map_or(0, |r| r.inner.summary.fail)
}

/// Looks up the status of the check with the given id.
///
/// # Safety
/// `report` must be a live handle, `id` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn mq_report_check_status(
    report: *const MqReport,
    id: *const c_char,
    out: *mut MqCheckStatus,
) -> MqStatus {
    guard(|| {
        let report = report.as_ref().ok_or_else(|| null("report"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let id = read_str(id, "id")?;
        let check = report
            .inner
            .check(id)
            .ok_or_else(|| Failure(MqStatus::NotFound, format!("no check with id {id:?}")))?;
        *out = match check.status {
            Status::Pass => MqCheckStatus::Pass,
            Status::Fail => MqCheckStatus::Fail,
            Status::Assumption => MqCheckStatus::Assumption,
        };
        Ok(())
    })
}

unsafe fn render_into(report: *const MqReport, format: Format, out: *mut *mut c_char) -> MqStatus {
    guard(|| {
        let report = report.as_ref().ok_or_else(|| null("report"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = into_c_string(render_report(&report.inner, format));
        Ok(())
    })
}

/// Renders the report as JSON. Free the string with [`mq_string_free`].
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mq_report_to_json(report: *const MqReport, out: *mut *mut c_char) -> MqStatus {
    render_into(report, Format::Json, out)
}

/// Renders the report as a text table. Free the string with
/// [`mq_string_free`].
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mq_report_to_text(report: *const MqReport, out: *mut *mut c_char) -> MqStatus {
    render_into(report, Format::Text, out)
}

/// # Safety
/// `report` must be null or a handle from `mq_report_run*` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mq_report_free(report: *mut MqReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of subgroups of order q in (Z/q)^rank.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mq_count_order_q_subgroups(q: u64, rank: u32, out: *mut u64) -> MqStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = count_order_q_subgroups(q, rank).map_err(|e| Failure(MqStatus::InvalidArgument, e.to_string()))?;
        Ok(())
    })
}

/// Samples forms from `seed` (resampling until the curve is certified at
/// `prime`) and returns the certificate over F_prime.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mq_certify_seed(seed: u64, prime: u64, out: *mut MqCurveCertificate) -> MqStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let mut config = PipelineConfig::with_seed(seed);
        config.primes = vec![prime];
        config.validate()?;
        let selected = select_forms(&config)?;
        let (v2, v3) = build_curve_forms(&selected.r, &selected.s).map_err(PipelineError::from)?;
        let zeta = default_zeta_image(prime).map_err(PipelineError::from)?;
        let cert = certify_over_fp(&io::to_cyclotomic(&v2), &io::to_cyclotomic(&v3), prime, zeta)
            .map_err(PipelineError::from)?;
        *out = MqCurveCertificate::from(&cert);
        Ok(())
    })
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn mq_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
