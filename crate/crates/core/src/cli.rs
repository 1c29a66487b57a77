//! Command-line front end. Exit codes: 0 when every report passes, 1 when
//! any report fails or is indeterminate, 2 on usage or evaluation errors.

use std::io::Write;
use std::time::Duration;

use clap::{Parser, Subcommand};
use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::catalog::{self, list_errata, list_identities, named_symbol, Correction, Mode};
use crate::error::Result;
use crate::numeric::{self, BigReal, ClosedFormReport, CrossCheckReport, NumericIdentityReport, TransformReport};
use crate::qseries::{Exponent, Rational};
use crate::verifier::{self, FactorReport, IdentityReport, Status};

#[derive(Debug, Parser)]
#[command(name = "modeq21", version, about = "Verify degree-21 mixed modular equations")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

fn order_arg() -> clap::builder::RangedI64ValueParser<i64> {
    clap::value_parser!(i64).range(1..)
}

fn digits_arg() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(10..)
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the q-expansion of a named quotient (u, w, r, s, u<k>, w<k>, f<k>, fplus<k>).
    Expand {
        #[arg(long)]
        symbol: String,
        #[arg(long, default_value_t = 60, value_parser = order_arg())]
        order: i64,
    },
    /// Verify one series identity, or all of them without --id.
    Verify {
        #[arg(long)]
        id: Option<String>,
        #[arg(long, default_value_t = 60, value_parser = order_arg())]
        order: i64,
    },
    /// Verify every series identity.
    VerifyAll {
        #[arg(long, default_value_t = 60, value_parser = order_arg())]
        order: i64,
    },
    /// Resolve the sign and reading choices of an identity.
    Signs {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 60, value_parser = order_arg())]
        order: i64,
    },
    /// Decide which factors of a factored candidate vanish.
    Vanish {
        #[arg(long)]
        id: Option<String>,
        #[arg(long, default_value_t = 40, value_parser = order_arg())]
        order: i64,
    },
    /// Evaluate r_{k,n}, or r'_{k,n} with --primed.
    EvalR {
        #[arg(long, value_parser = parse_rational)]
        k: Rational,
        #[arg(long, value_parser = parse_rational)]
        n: Rational,
        #[arg(long)]
        primed: bool,
        #[arg(long, default_value_t = 60, value_parser = digits_arg())]
        digits: u32,
    },
    /// Compare closed forms with their radicals.
    CheckValues {
        #[arg(long)]
        id: Option<String>,
        #[arg(long, default_value_t = 60, value_parser = digits_arg())]
        digits: u32,
    },
    /// Check the reciprocity, symmetry and quotient laws at (k, n, m).
    CheckTransforms {
        #[arg(long, value_parser = parse_rational)]
        k: Rational,
        #[arg(long, value_parser = parse_rational)]
        n: Rational,
        #[arg(long, value_parser = parse_rational)]
        m: Rational,
        #[arg(long, default_value_t = 60, value_parser = digits_arg())]
        digits: u32,
    },
    /// Check a numeric-mode identity at n, or all of them without --id.
    NumericIdentity {
        #[arg(long)]
        id: Option<String>,
        #[arg(long, value_parser = parse_rational)]
        n: Rational,
        #[arg(long, default_value_t = 60, value_parser = digits_arg())]
        digits: u32,
    },
    /// Compare a truncated expansion with the product form at a real q.
    CrossCheck {
        #[arg(long)]
        symbol: String,
        #[arg(long, value_parser = parse_rational)]
        q: Rational,
        #[arg(long, default_value_t = 30, value_parser = order_arg())]
        order: i64,
        #[arg(long, default_value_t = 40, value_parser = digits_arg())]
        digits: u32,
    },
    /// Print the catalog as JSON.
    ExportCatalog,
    /// List errata and check the corrected forms.
    Errata {
        #[arg(long, default_value_t = 60, value_parser = order_arg())]
        order: i64,
        #[arg(long, default_value_t = 60, value_parser = digits_arg())]
        digits: u32,
    },
}

/// Parses `p/q` or an integer; rejects zero denominators.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num = num.parse().map_err(|_| format!("`{s}` is not a rational p/q"))?;
    let den: num_bigint::BigInt = den.parse().map_err(|_| format!("`{s}` is not a rational p/q"))?;
    if den.is_zero() {
        return Err(format!("`{s}` has a zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// One report, rendered both ways.
struct Rendered {
    status: Option<Status>,
    text: String,
    json: Value,
}

fn ms(d: Duration) -> Value {
    json!(d.as_millis() as u64)
}

fn term_json(t: &Option<(Exponent, Rational)>) -> Option<Value> {
    t.as_ref()
        .map(|(e, c)| json!({ "exponent": e.to_string(), "coefficient": c.to_string() }))
}

fn term_text((e, c): &(Exponent, Rational)) -> String {
    format!("{c}*q^{{{e}}}")
}

fn sci(x: &BigReal) -> String {
    x.to_sci(6)
}

fn identity_rendered(r: &IdentityReport) -> Rendered {
    let mut m = Map::new();
    m.insert("id".into(), json!(r.id));
    m.insert("status".into(), json!(r.status.to_string()));
    m.insert("order".into(), json!(r.order.to_string()));
    if let Some(t) = term_json(&r.first_nonzero) {
        m.insert("first_nonzero".into(), t);
    }
    if let Some(res) = &r.resolution {
        m.insert("resolution".into(), json!(res));
    }
    if !r.candidates.is_empty() {
        m.insert("candidates".into(), json!(r.candidates));
    }
    if let Some(v) = r.residual_valid_to {
        m.insert("residual_valid_to".into(), json!(v.to_string()));
    }
    if let Some(n) = &r.note {
        m.insert("note".into(), json!(n));
    }
    m.insert("elapsed_ms".into(), ms(r.elapsed));

    let mut text = format!("{:<7} {:<13} order {}", r.id, r.status, r.order);
    if let Some(t) = &r.first_nonzero {
        text += &format!("  first nonzero {}", term_text(t));
    }
    if let Some(res) = &r.resolution {
        text += &format!("  [{}]", res.join("; "));
    }
    for c in &r.candidates {
        text += &format!("\n        candidate: {}", c.join("; "));
    }
    if let Some(n) = &r.note {
        text += &format!("  ({n})");
    }
    Rendered {
        status: Some(r.status),
        text,
        json: Value::Object(m),
    }
}

fn factor_rendered(r: &FactorReport) -> Rendered {
    let factors: Vec<Value> = r
        .factors
        .iter()
        .map(|f| {
            let mut m = Map::new();
            m.insert("index".into(), json!(f.index));
            m.insert("status".into(), json!(f.status.to_string()));
            if let Some(t) = term_json(&f.first_nonzero) {
                m.insert("first_nonzero".into(), t);
            }
            Value::Object(m)
        })
        .collect();
    let json = json!({
        "id": r.id,
        "status": r.status().to_string(),
        "order": r.order.to_string(),
        "vanishing": r.vanishing,
        "nonvanishing": r.nonvanishing,
        "factors": factors,
        "elapsed_ms": ms(r.elapsed),
    });
    let mut text = format!("{:<14} {:<5} order {}", r.id, r.status(), r.order);
    for f in &r.factors {
        let word = match f.status {
            Status::Pass => "vanishes".to_string(),
            Status::Fail => format!(
                "nonvanishing, first nonzero {}",
                f.first_nonzero.as_ref().map(term_text).unwrap_or_default()
            ),
            Status::Indeterminate => "undecided".to_string(),
        };
        text += &format!("\n  factor {}: {word}", f.index);
    }
    Rendered {
        status: Some(r.status()),
        text,
        json,
    }
}

fn closed_form_rendered(r: &ClosedFormReport) -> Rendered {
    let json = json!({
        "id": r.id,
        "status": r.status.to_string(),
        "digits": r.digits,
        "value": r.computed.to_fixed(r.digits as usize),
        "radical": r.radical.to_fixed(r.digits as usize),
        "difference": sci(&r.difference),
        "error_bound": sci(&r.error_bound),
        "tolerance": format!("1e{}", r.tolerance_exp),
        "elapsed_ms": ms(r.elapsed),
    });
    let text = format!(
        "{:<6} {:<5} value {}  |diff| {}  bound {}",
        r.id,
        r.status,
        r.computed.to_fixed(30),
        sci(&r.difference),
        sci(&r.error_bound)
    );
    Rendered {
        status: Some(r.status),
        text,
        json,
    }
}

fn transform_rendered(r: &TransformReport) -> Rendered {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| json!({ "relation": c.name, "residual": sci(&c.residual), "pass": c.pass }))
        .collect();
    let json = json!({
        "id": format!("k={},n={},m={}", r.k, r.n, r.m),
        "status": r.status.to_string(),
        "digits": r.digits,
        "checks": checks,
        "elapsed_ms": ms(r.elapsed),
    });
    let mut text = format!("k={} n={} m={}: {}", r.k, r.n, r.m, r.status);
    for c in &r.checks {
        let mark = if c.pass { "pass" } else { "fail" };
        text += &format!("\n  {:<40} {mark}  residual {}", c.name, sci(&c.residual));
    }
    Rendered {
        status: Some(r.status),
        text,
        json,
    }
}

fn numeric_identity_rendered(r: &NumericIdentityReport) -> Rendered {
    let json = json!({
        "id": r.id,
        "status": r.status.to_string(),
        "digits": r.digits,
        "n": r.n.to_string(),
        "value": r.lhs.to_fixed(r.digits as usize),
        "rhs": r.rhs.to_fixed(r.digits as usize),
        "residual": sci(&r.residual),
        "tolerance": format!("1e{}", r.tolerance_exp),
        "elapsed_ms": ms(r.elapsed),
    });
    let text = format!(
        "{:<7} {:<5} n={}  lhs {}  |lhs - rhs| {}",
        r.id,
        r.status,
        r.n,
        r.lhs.to_fixed(30),
        sci(&r.residual)
    );
    Rendered {
        status: Some(r.status),
        text,
        json,
    }
}

fn cross_check_rendered(r: &CrossCheckReport) -> Rendered {
    let json = json!({
        "id": r.symbol,
        "status": r.status.to_string(),
        "digits": r.digits,
        "order": r.order.to_string(),
        "q": r.q.to_string(),
        "value": r.exact_value.to_fixed(r.digits as usize),
        "series_value": r.series_value.to_fixed(r.digits as usize),
        "difference": sci(&r.difference),
        "tail_bound": sci(&r.tail_bound),
        "error_bound": sci(&r.combined_bound),
    });
    let text = format!(
        "{} at q={} order {}: {}  product {}  series {}  |diff| {}  bound {}",
        r.symbol,
        r.q,
        r.order,
        r.status,
        r.exact_value.to_fixed(30),
        r.series_value.to_fixed(30),
        sci(&r.difference),
        sci(&r.combined_bound)
    );
    Rendered {
        status: Some(r.status),
        text,
        json,
    }
}

fn run_command(command: &Command) -> Result<Vec<Rendered>> {
    let order = |o: i64| Exponent::from_int(o);
    let out = match command {
        Command::Expand { symbol, order: o } => {
            let spec = named_symbol(symbol)?;
            let series = catalog::build_symbol_series(&spec, order(*o))?;
            vec![Rendered {
                status: None,
                text: series.to_string(),
                json: json!({
                    "id": symbol,
                    "order": o.to_string(),
                    "series": series.to_string(),
                    "terms": series.terms().map(|(e, c)| json!([e.to_string(), c.to_string()])).collect::<Vec<_>>(),
                }),
            }]
        }
        Command::Verify { id: Some(id), order: o } => {
            vec![identity_rendered(&verifier::verify_identity(id, order(*o))?)]
        }
        Command::Verify { id: None, order: o } | Command::VerifyAll { order: o } => {
            verifier::verify_all(order(*o)).iter().map(identity_rendered).collect()
        }
        Command::Signs { id, order: o } => {
            let (_, report) = verifier::resolve_signs(id, order(*o))?;
            vec![identity_rendered(&report)]
        }
        Command::Vanish { id, order: o } => match id {
            Some(id) => vec![factor_rendered(&verifier::factor_vanish_test(id, order(*o))?)],
            None => catalog::list_factor_tests()
                .iter()
                .map(|t| verifier::factor_definition(t, order(*o)).map(|r| factor_rendered(&r)))
                .collect::<Result<_>>()?,
        },
        Command::EvalR { k, n, primed, digits } => {
            let r = if *primed {
                numeric::compute_r_prime(k, n, *digits)?
            } else {
                numeric::compute_r(k, n, *digits)?
            };
            let name = format!("r{}_{{{k},{n}}}", if *primed { "'" } else { "" });
            let certified = r.certified_digits();
            let value = r.value.to_fixed(*digits as usize);
            vec![Rendered {
                status: None,
                text: format!("{name} = {value}\ncertified digits: {certified}"),
                json: json!({
                    "id": name,
                    "digits": digits,
                    "value": value,
                    "error_bound": sci(&r.error_bound),
                    "certified_digits": certified,
                }),
            }]
        }
        Command::CheckValues { id, digits } => match id {
            Some(id) => vec![closed_form_rendered(&numeric::check_closed_form(id, *digits)?)],
            None => numeric::check_all_closed_forms(*digits)
                .into_iter()
                .map(|r| r.map(|r| closed_form_rendered(&r)))
                .collect::<Result<_>>()?,
        },
        Command::CheckTransforms { k, n, m, digits } => {
            vec![transform_rendered(&numeric::check_transformations(k, n, m, *digits)?)]
        }
        Command::NumericIdentity { id, n, digits } => match id {
            Some(id) => vec![numeric_identity_rendered(&numeric::verify_numeric_identity(id, n, *digits)?)],
            None => list_identities()
                .iter()
                .filter(|d| d.mode == Mode::Numeric)
                .map(|d| numeric::verify_numeric_definition(d, n, *digits).map(|r| numeric_identity_rendered(&r)))
                .collect::<Result<_>>()?,
        },
        Command::CrossCheck { symbol, q, order: o, digits } => {
            vec![cross_check_rendered(&numeric::cross_check_series_vs_numeric(
                symbol,
                q,
                order(*o),
                *digits,
            )?)]
        }
        Command::ExportCatalog => vec![Rendered {
            status: None,
            text: serde_json::to_string_pretty(&catalog::export_json()).expect("catalog serialises"),
            json: catalog::export_json(),
        }],
        Command::Errata { order: o, digits } => {
            let one = Rational::from_integer(1.into());
            list_errata()
                .iter()
                .map(|e| {
                    let mut r = match &e.corrected {
                        Correction::Identity(d) if d.mode == Mode::Series => {
                            identity_rendered(&verifier::verify_definition(d, order(*o))?)
                        }
                        Correction::Identity(d) => {
                            numeric_identity_rendered(&numeric::verify_numeric_definition(d, &one, *digits)?)
                        }
                        Correction::ClosedForm(d) => closed_form_rendered(&numeric::check_closed_form_def(d, *digits)?),
                    };
                    r.text = format!("{} (corrected): {}\n  {}", e.id, r.status.expect("checked"), e.note);
                    if let Value::Object(m) = &mut r.json {
                        m.insert("note".into(), json!(e.note));
                    }
                    Ok(r)
                })
                .collect::<Result<_>>()?
        }
    };
    Ok(out)
}

/// Whether the subcommand may emit several reports.
fn is_suite(command: &Command) -> bool {
    matches!(
        command,
        Command::Verify { id: None, .. }
            | Command::VerifyAll { .. }
            | Command::Vanish { id: None, .. }
            | Command::CheckValues { id: None, .. }
            | Command::NumericIdentity { id: None, .. }
            | Command::Errata { .. }
    )
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if code == 0 { 0 } else { 2 };
        }
    };
    let reports = match run_command(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let written = if cli.json {
        let doc = if is_suite(&cli.command) {
            Value::Array(reports.iter().map(|r| r.json.clone()).collect())
        } else {
            reports[0].json.clone()
        };
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("report serialises"))
    } else {
        reports.iter().try_for_each(|r| writeln!(out, "{}", r.text))
    };
    if written.is_err() {
        return 2;
    }
    let all_pass = reports
        .iter()
        .all(|r| r.status.is_none_or(|s| s == Status::Pass));
    if all_pass {
        0
    } else {
        1
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
