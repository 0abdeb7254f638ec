use clap::{Parser, Subcommand, ValueEnum};
use mzv_shuffle::numeric::{identity_check, mzv_eval, DEFAULT_TERMS};
use mzv_shuffle::suites::{run_suite, Suite, DEFAULT_MAX_WEIGHT};
use mzv_shuffle::{expand_general, parse_word, shuffle_permutation, shuffle_recursive, to_exponent_form, Error, Format, MzvIndex};
use std::process::ExitCode;

const EXIT_FAIL: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

#[derive(Parser)]
#[command(name = "mzv", version, about = "Shuffle products of words over {x, y} and multiple zeta values")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Shuffle two words, e.g. `mzv shuffle xy x^2y`.
    Shuffle {
        w1: String,
        w2: String,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[arg(long, value_enum, default_value_t = OutFormat::Plain)]
        format: OutFormat,
    },
    /// Run an exhaustive verification grid against the recursive shuffle.
    Verify {
        /// general, special, res11, res12, res22, nfold, appendixA, appendixB or all
        suite: String,
        /// Largest total word length in the grid; capped by MZV_MAX_WEIGHT (default 10).
        #[arg(long, default_value_t = 8)]
        max_weight: u32,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate ζ(k₁,…,k_n) by truncated nested sums, e.g. `mzv zeta 3,1`.
    Zeta {
        index: String,
        #[arg(long, default_value_t = DEFAULT_TERMS)]
        terms: u64,
    },
    /// Check ζ(w₁)ζ(w₂) = ζ(w₁ ⧢ w₂) numerically.
    Identity {
        w1: String,
        w2: String,
        /// Residual tolerance; defaults to max(1e-6, 3·error estimate).
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_TERMS)]
        terms: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Recursive,
    Permutation,
    General,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Plain,
    Latex,
    Json,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Syntax { .. } | Error::ExponentOverflow { .. } | Error::InvalidIndex { .. } => EXIT_PARSE,
        _ => EXIT_DOMAIN,
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(exit_code(&e))
}

fn weight_cap() -> Result<u32, String> {
    match std::env::var("MZV_MAX_WEIGHT") {
        Ok(v) => v.trim().parse().map_err(|_| format!("MZV_MAX_WEIGHT={v:?} is not a non-negative integer")),
        Err(_) => Ok(DEFAULT_MAX_WEIGHT),
    }
}

fn shuffle(w1: &str, w2: &str, method: Method, format: OutFormat) -> Result<String, Error> {
    let u = parse_word(w1)?;
    let v = parse_word(w2)?;
    let general = || -> Result<_, Error> { Ok(expand_general(&to_exponent_form(&u)?, &to_exponent_form(&v)?)) };
    let p = match method {
        Method::Recursive => shuffle_recursive(&u, &v),
        Method::Permutation => shuffle_permutation(&u, &v),
        Method::General => general()?,
        Method::Auto => general().unwrap_or_else(|_| shuffle_recursive(&u, &v)),
    };
    Ok(p.render(match format {
        OutFormat::Plain => Format::Plain,
        OutFormat::Latex => Format::Latex,
        OutFormat::Json => Format::Json,
    }))
}

fn verify(suite: &str, max_weight: u32, json: bool) -> ExitCode {
    let suite: Suite = match suite.parse() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let cap = match weight_cap() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    if max_weight > cap {
        eprintln!("error: max weight {max_weight} exceeds the cap of {cap} (set MZV_MAX_WEIGHT to raise it)");
        return ExitCode::from(EXIT_DOMAIN);
    }
    let report = run_suite(suite, max_weight);
    if json {
        // timings would make the output differ between identical runs
        let mut value = serde_json::to_value(&report).expect("report serializes");
        value.as_object_mut().expect("report is an object").remove("elapsed_ms");
        println!("{value}");
    } else {
        let failed = report.failures.len();
        println!("{suite} max-weight {max_weight}: {} passed, {failed} failed", report.checked - failed);
        if let Some(f) = report.failures.first() {
            println!("first failure [{}] {}: {}", f.suite, f.case, f.detail);
        }
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn zeta(index: &str, terms: u64) -> Result<String, Error> {
    let idx: MzvIndex = index.parse()?;
    let r = mzv_eval(&idx, terms)?;
    Ok(format!("zeta({idx}) = {:.12} ± {:.3e} (M = {})", r.value, r.err_est, r.terms_used))
}

fn identity(w1: &str, w2: &str, tol: Option<f64>, terms: u64) -> Result<(String, bool), Error> {
    let u = parse_word(w1)?;
    let v = parse_word(w2)?;
    let c = identity_check(&u, &v, terms)?;
    let bound = tol.unwrap_or(c.bound);
    let ok = c.residual <= bound;
    let verdict = if ok { "holds" } else { "FAILS" };
    Ok((format!("residual {:.3e}, bound {bound:.3e}: {verdict}", c.residual), ok))
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Shuffle { w1, w2, method, format } => match shuffle(&w1, &w2, method, format) {
            Ok(s) => {
                println!("{s}");
                ExitCode::SUCCESS
            }
            Err(e) => fail(e),
        },
        Command::Verify { suite, max_weight, json } => verify(&suite, max_weight, json),
        Command::Zeta { index, terms } => match zeta(&index, terms) {
            Ok(s) => {
                println!("{s}");
                ExitCode::SUCCESS
            }
            Err(e) => fail(e),
        },
        Command::Identity { w1, w2, tol, terms } => match identity(&w1, &w2, tol, terms) {
            Ok((s, ok)) => {
                println!("{s}");
                if ok {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(EXIT_FAIL)
                }
            }
            Err(e) => fail(e),
        },
    }
}
