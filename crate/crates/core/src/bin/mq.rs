use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use mq_core::arith::Rationals;
use mq_core::curve::certify_over_fp;
use mq_core::group::{count_order_q_subgroups, enumerate_order_q_subgroups};
use mq_core::ledger::{derive_lattice_ledger, derive_surface_ledger, IMPORTED_IRREGULARITY};
use mq_core::poly::{build_curve_forms, io, Form};
use mq_core::report::{
    default_zeta_image, parse_primes, render_report, run_pipeline, select_forms, ConfigError, Format, PipelineConfig,
    PipelineError, DEFAULT_MAX_RESAMPLES, DEFAULT_SEED,
};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "mq", version, about = "Exact verification of the (C4 x C4)/G surface construction")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline and print the report.
    Verify(VerifyArgs),
    /// Print the intersection ledger only (no polynomial work).
    Invariants {
        #[arg(long)]
        json: bool,
    },
    /// Certify one sampled or given curve over F_p.
    Certify(CertifyArgs),
    /// Count subgroups of order q in (Z/q)^rank.
    CountCovers {
        #[arg(long, default_value_t = 3)]
        q: u64,
        #[arg(long, default_value_t = 4)]
        rank: u32,
    },
}

#[derive(Args)]
struct FormArgs {
    /// Seed for sampling r and s (ChaCha8).
    #[arg(long, conflicts_with_all = ["r", "s"])]
    seed: Option<u64>,
    /// Explicit quadratic form r(x0, x1), as text or JSON.
    #[arg(long, requires = "s")]
    r: Option<String>,
    /// Explicit cubic form s(x0, x1), as text or JSON.
    #[arg(long, requires = "r")]
    s: Option<String>,
    #[arg(long, default_value_t = DEFAULT_MAX_RESAMPLES)]
    max_resamples: u32,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    forms: FormArgs,
    /// Comma-separated primes congruent to 1 mod 3.
    #[arg(long, env = "MQ_PRIMES", default_value = "7,13")]
    primes: String,
    /// Write the JSON report here ("-" for stdout).
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Suppress the text report.
    #[arg(long)]
    quiet: bool,
}

#[derive(Args)]
struct CertifyArgs {
    #[command(flatten)]
    forms: FormArgs,
    #[arg(long)]
    prime: u64,
    /// Image of the cube root of unity mod p (default: the smallest one).
    #[arg(long)]
    zeta: Option<u64>,
}

fn parse_form(text: &str) -> Result<Form<Rationals>, ConfigError> {
    io::parse_any(text, 2).map_err(|e| ConfigError::Parse(e.to_string()))
}

fn build_config(forms: &FormArgs, primes: Vec<u64>) -> Result<PipelineConfig, ConfigError> {
    let mut config = match (&forms.r, &forms.s) {
        (Some(r), Some(s)) => PipelineConfig::explicit(&parse_form(r)?, &parse_form(s)?)?,
        _ => PipelineConfig::with_seed(forms.seed.unwrap_or(DEFAULT_SEED)),
    };
    config.primes = primes;
    config.max_resamples = forms.max_resamples;
    config.validate()?;
    Ok(config)
}

fn exit_for(err: &PipelineError) -> ExitCode {
    eprintln!("mq: {err}");
    match err {
        PipelineError::Config(_) => ExitCode::from(EXIT_USAGE),
        _ => ExitCode::from(EXIT_FAIL),
    }
}

fn verify(args: VerifyArgs) -> Result<ExitCode, PipelineError> {
    let primes = parse_primes(&args.primes)?;
    let config = build_config(&args.forms, primes)?;
    let report = run_pipeline(&config)?;
    if !args.quiet {
        print!("{}", render_report(&report, Format::Text));
    }
    if let Some(path) = args.json {
        let json = render_report(&report, Format::Json);
        if path.as_os_str() == "-" {
            print!("{json}");
        } else if let Err(e) = fs::write(&path, json) {
            eprintln!("mq: cannot write {}: {e}", path.display());
            return Ok(ExitCode::from(EXIT_USAGE));
        }
    }
    Ok(if report.overall { ExitCode::SUCCESS } else { ExitCode::from(EXIT_FAIL) })
}

fn invariants(json: bool) -> Result<ExitCode, PipelineError> {
    let s = derive_surface_ledger()?;
    let l = derive_lattice_ledger()?;
    if json {
        let doc = serde_json::json!({ "surface": s, "lattice": l });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        let row = |name: &str, inv: &mq_core::ledger::SurfaceInvariants| {
            println!("{name:<8} K^2 = {:>3}  c2 = {:>3}  chi = {:>2}  p_g = {:>2}  q = {:>2}", inv.k2, inv.c2, inv.chi, inv.p_g, inv.q);
        };
        row("C4 x C4", &s.product);
        row("T", &s.t);
        row("S", &s.s);
        println!("q(S) = {IMPORTED_IRREGULARITY} is imported, not derived");
        println!();
        println!("Gamma^2 = {}  Sigma^2 = {}  D_S^2 = {}  R^2 = {}", s.gamma_sq, s.sigma_sq, s.d_s_sq, s.r_sq);
        println!("K_S.D_S = {}  Z.R = {}  Z^2 = {}  K_S.R = {}", s.k_dot_d_s, s.zr, s.z_sq, s.k_dot_r);
        println!();
        println!("Theta^2 = {}  E^2 = {}  x^2 = {}  x.E = {}", l.theta_sq, l.e_sq, l.x_sq, l.x_dot_e);
        println!(
            "D_B.E = {}  D_B^2 = {} (double cover: {})  pushforward D_B = {}",
            l.d_b_dot_e, l.d_b_sq, l.d_b_sq_double_cover, l.pushforward_d_b
        );
        println!();
        for c in &s.section2 {
            println!("{:<28} {:>3}  {}", c.name, c.value, if c.holds { "ok" } else { "FAILS" });
        }
    }
    let ok = s.s.satisfies_noether() && s.section2.iter().all(|c| c.holds);
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(EXIT_FAIL) })
}

fn certify(args: CertifyArgs) -> Result<ExitCode, PipelineError> {
    let config = build_config(&args.forms, vec![args.prime])?;
    let selected = select_forms(&config)?;
    let (v2, v3) = build_curve_forms(&selected.r, &selected.s)?;
    let zeta = match args.zeta {
        Some(z) => z,
        None => default_zeta_image(args.prime)?,
    };
    let cert = certify_over_fp(&io::to_cyclotomic(&v2), &io::to_cyclotomic(&v3), args.prime, zeta)?;
    let doc = serde_json::json!({
        "r": io::to_inline(&selected.r),
        "s": io::to_inline(&selected.s),
        "certificate": cert,
        "valid": cert.is_valid(),
    });
    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    Ok(if cert.is_valid() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_FAIL) })
}

fn count_covers(q: u64, rank: u32) -> Result<ExitCode, PipelineError> {
    let count = count_order_q_subgroups(q, rank).map_err(|e| ConfigError::Parse(e.to_string()))?;
    println!("subgroups of order {q} in (Z/{q})^{rank}: {count}");
    if q.checked_pow(rank).is_some_and(|n| n <= 1 << 16) {
        let enumerated = enumerate_order_q_subgroups(q, rank)?;
        println!("by enumeration: {enumerated}");
        if enumerated != count {
            return Ok(ExitCode::from(EXIT_FAIL));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(args) => verify(args),
        Command::Invariants { json } => invariants(json),
        Command::Certify(args) => certify(args),
        Command::CountCovers { q, rank } => count_covers(q, rank),
    };
    result.unwrap_or_else(|e| exit_for(&e))
}
