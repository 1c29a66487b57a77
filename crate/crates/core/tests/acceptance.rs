//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria that fail because a printed statement is wrong are listed in
//! `KNOWN_RED`; the run aborts only if something outside that list fails or
//! a listed item unexpectedly passes.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use modeq21::catalog::{get_closed_form, get_factor_test, get_identity, IdentityDef, Mode};
use modeq21::numeric::{
    check_closed_form, check_transformations, compute_r, cross_check_series_vs_numeric, verify_numeric_identity,
    BigReal,
};
use modeq21::verifier::{factor_vanish_test, resolve_definition, series_through, verify_all, verify_definition, Status};
use modeq21::{Exponent, Expr, QSeries, Rational};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const SERIES_IDS: [&str; 19] = [
    "E15", "L21-7", "L21-3", "L9A", "L9B", "L15", "R1", "R2SQ", "R3SQ", "CUBED", "MN", "W2", "W3", "W5", "W7", "U2",
    "U3", "U5", "U7",
];

const CLOSED_FORM_IDS: &[&str] = &[
    "S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8", "S9", "S10", "S11", "S12", "S13", "S14", "S15", "S79", "S79P", "P2",
    "P4", "P6", "P8", "P10", "P12", "P15", "P17", "P21", "P23", "P25", "P27", "P29",
];

const NUMERIC_IDS: [&str; 4] = ["R7R9", "R7R9P", "R3R49", "R3R49P"];

/// Printed statements that fail their check; each has a catalogued erratum.
const KNOWN_RED: [(u8, &[&str]); 3] = [
    (1, &["W5", "W7"]),
    (3, &["S13", "S14", "S15", "S79P", "P27"]),
    (4, &["R7R9P"]),
];

fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

fn pow10(e: i32) -> BigReal {
    BigReal::pow10_neg(e.unsigned_abs(), 400)
}

struct Outcome {
    criterion: u8,
    title: &'static str,
    failed: BTreeSet<String>,
    detail: String,
}

impl Outcome {
    fn print(&self) {
        let verdict = if self.failed.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {}: {verdict}  {}  {}", self.criterion, self.title, self.detail);
        if !self.failed.is_empty() {
            println!("    failing: {}", self.failed.iter().cloned().collect::<Vec<_>>().join(", "));
        }
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let reports = verify_all(Exponent::from_int(60));
    let elapsed = start.elapsed();
    let mut failed = BTreeSet::new();
    for id in SERIES_IDS {
        let r = reports.iter().find(|r| r.id == id).expect("series identity present");
        if r.status != Status::Pass {
            failed.insert(id.to_string());
        }
        if let Some(res) = &r.resolution {
            println!("    {id} resolved: {}", res.join("; "));
        }
    }
    if elapsed > Duration::from_secs(120) {
        failed.insert(format!("time {elapsed:?}"));
    }
    Outcome {
        criterion: 1,
        title: "series identities at order 60",
        failed,
        detail: format!("({} identities, {:.2}s, limit 120s)", SERIES_IDS.len(), elapsed.as_secs_f64()),
    }
}

fn criterion_2() -> Outcome {
    let order = Exponent::from_int(40);
    let mut failed = BTreeSet::new();
    let w2 = factor_vanish_test("F-W2-FACTORS", order).unwrap();
    if w2.vanishing != [1] {
        failed.insert(format!("F-W2-FACTORS vanishing {:?}", w2.vanishing));
    }
    let u2 = factor_vanish_test("F-U2-FACTORS", order).unwrap();
    if u2.vanishing != [2] || u2.nonvanishing != [1] {
        failed.insert(format!("F-U2-FACTORS vanishing {:?} nonvanishing {:?}", u2.vanishing, u2.nonvanishing));
    }
    get_factor_test("F-CONTROL").unwrap();
    Outcome {
        criterion: 2,
        title: "factor-vanish reproduction through order 40",
        failed,
        detail: format!("(F-W2 vanishing {:?}; F-U2 vanishing {:?})", w2.vanishing, u2.vanishing),
    }
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let tol = pow10(-40);
    let results: Vec<_> = CLOSED_FORM_IDS
        .par_iter()
        .map(|id| (id, check_closed_form(id, 60).unwrap()))
        .collect();
    let elapsed = start.elapsed();
    let mut failed = BTreeSet::new();
    let mut worst_pass = f64::NEG_INFINITY;
    for (id, r) in &results {
        get_closed_form(id).unwrap();
        if r.difference >= tol {
            failed.insert(id.to_string());
        } else {
            worst_pass = worst_pass.max(r.difference.log10_abs());
        }
    }
    if elapsed > Duration::from_secs(60) {
        failed.insert(format!("time {elapsed:?}"));
    }
    Outcome {
        criterion: 3,
        title: "closed forms within 1e-40 at 60 digits",
        failed,
        detail: format!(
            "({} entries, worst passing |diff| 1e{:.0}, {:.2}s, limit 60s)",
            results.len(),
            worst_pass,
            elapsed.as_secs_f64()
        ),
    }
}

fn criterion_4() -> Outcome {
    let tol = pow10(-35);
    let points = [rat(1, 21), rat(1, 6), rat(1, 1), rat(2, 1)];
    let mut failed = BTreeSet::new();
    let mut worst = f64::NEG_INFINITY;
    for id in NUMERIC_IDS {
        for n in &points {
            let r = verify_numeric_identity(id, n, 40).unwrap();
            if r.residual >= tol {
                failed.insert(id.to_string());
            } else {
                worst = worst.max(r.residual.log10_abs());
            }
        }
    }
    Outcome {
        criterion: 4,
        title: "numeric identities at n in {1/21, 1/6, 1, 2}, residual < 1e-35 at 40 digits",
        failed,
        detail: format!("(worst passing residual 1e{worst:.0})"),
    }
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let ks = [2, 3, 5, 7];
    let small = [rat(1, 3), rat(1, 2), rat(2, 3), rat(1, 1), rat(3, 2), rat(2, 1), rat(3, 1)];
    let tol = pow10(-40);
    let mut failed = BTreeSet::new();
    let mut worst = f64::NEG_INFINITY;
    let triples: Vec<_> = (0..10)
        .map(|_| {
            (
                rat(ks[rng.gen_range(0..ks.len())], 1),
                small[rng.gen_range(0..small.len())].clone(),
                small[rng.gen_range(0..small.len())].clone(),
            )
        })
        .collect();
    for (k, n, m) in &triples {
        let report = check_transformations(k, n, m, 50).unwrap();
        for c in &report.checks {
            if c.residual >= tol {
                failed.insert(format!("k={k} n={n} m={m}: {}", c.name));
            } else {
                worst = worst.max(c.residual.log10_abs());
            }
        }
    }
    for k in [3, 7] {
        let r = compute_r(&rat(k, 1), &rat(1, 1), 50).unwrap();
        let dev = (&r.value - &BigReal::one(r.value.bits())).abs();
        if dev >= pow10(-49) {
            failed.insert(format!("r_{{{k},1}} = 1"));
        }
    }
    Outcome {
        criterion: 5,
        title: "transformation laws on 10 seeded triples, residual < 1e-40 at 50 digits",
        failed,
        detail: format!("(worst residual 1e{worst:.0}; r_{{3,1}}, r_{{7,1}} within 1e-49)"),
    }
}

fn random_series(rng: &mut ChaCha8Rng, step: i64) -> QSeries {
    let lead = rng.gen_range(-3i64..4);
    let len = rng.gen_range(3i64..12);
    let mut c0 = 0;
    while c0 == 0 {
        c0 = rng.gen_range(-3i64..4);
    }
    let terms = (0..len).map(|i| {
        let c = if i == 0 { c0 } else { rng.gen_range(-4i64..5) };
        (Exponent::from_ticks((lead + i) * step), rat(c, 1))
    });
    QSeries::from_terms(terms, Exponent::from_ticks((lead + len) * step))
}

fn agree(a: &QSeries, b: &QSeries) -> bool {
    let v = a.valid_to().min(b.valid_to());
    a.truncate(v) == b.truncate(v)
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut failed = BTreeSet::new();
    let cases = 256;
    for case in 0..cases {
        let step = [24, 12, 8, 6][case % 4];
        let a = random_series(&mut rng, step);
        let lead = a.lead().unwrap();

        let prod = a.mul(&a.invert().unwrap());
        let expect = a.valid_to().saturating_sub(lead);
        if prod != QSeries::one().truncate(expect) {
            failed.insert(format!("invert/mul case {case}"));
        }

        let b = if a.lead_term().unwrap().1 < &rat(0, 1) { a.negate() } else { a.clone() };
        let root = b.mul(&b).sqrt().unwrap();
        if !agree(&root, &b) || root.valid_to() != b.valid_to() {
            failed.insert(format!("sqrt/square case {case}"));
        }

        let int = random_series(&mut rng, 24);
        if int.substitute_neg_q().unwrap().substitute_neg_q().unwrap() != int {
            failed.insert(format!("neg-q involution case {case}"));
        }

        let c = random_series(&mut rng, step);
        let k = rng.gen_range(1u32..5);
        if a.mul(&c).rescale(k) != a.rescale(k).mul(&c.rescale(k)) {
            failed.insert(format!("rescale case {case}"));
        }
    }
    Outcome {
        criterion: 6,
        title: "series algebra properties",
        failed,
        detail: format!("({cases} random series per property)"),
    }
}

/// Replaces sign slots by their chosen sign.
fn pin(e: &Expr, choices: &[usize]) -> Expr {
    let b = |x: &Expr| Box::new(pin(x, choices));
    match e {
        Expr::Const(_) | Expr::Sym(_) => e.clone(),
        Expr::Neg(x) => Expr::Neg(b(x)),
        Expr::Add(x, y) => Expr::Add(b(x), b(y)),
        Expr::Sub(x, y) => Expr::Sub(b(x), b(y)),
        Expr::Mul(x, y) => Expr::Mul(b(x), b(y)),
        Expr::Div(x, y) => Expr::Div(b(x), b(y)),
        Expr::PowInt(x, n) => Expr::PowInt(b(x), *n),
        Expr::Sqrt(x) => Expr::Sqrt(b(x)),
        Expr::NthRoot(x, n) => Expr::NthRoot(b(x), *n),
        Expr::Signed(k, x) => {
            if choices[*k] == 0 {
                pin(x, choices)
            } else {
                Expr::Neg(b(x))
            }
        }
    }
}

/// The identity with every slot fixed to its resolved choice.
fn pinned(ident: &IdentityDef, order: Exponent) -> IdentityDef {
    let choices = if ident.slots.is_empty() {
        vec![]
    } else {
        resolve_definition(ident, order).0.expect("resolved")
    };
    IdentityDef {
        bindings: ident.effective_bindings(&choices),
        lhs: pin(&ident.lhs, &choices),
        rhs: pin(&ident.rhs, &choices),
        slots: vec![],
        ..ident.clone()
    }
}

fn criterion_7() -> Outcome {
    let order = Exponent::from_int(60);
    let passing: Vec<&IdentityDef> = SERIES_IDS
        .iter()
        .map(|id| get_identity(id).unwrap())
        .filter(|d| d.mode == Mode::Series && verify_definition(d, order).unwrap().status == Status::Pass)
        .collect();
    let mut jobs = Vec::new();
    for ident in &passing {
        let base = pinned(ident, order);
        assert_eq!(verify_definition(&base, order).unwrap().status, Status::Pass, "{}", base.id);
        for lhs_side in [true, false] {
            let side = if lhs_side { &base.lhs } else { &base.rhs };
            for i in 0..side.constant_count() {
                jobs.push((base.clone(), lhs_side, i));
            }
        }
    }
    let one = rat(1, 1);
    let failures: Vec<String> = jobs
        .par_iter()
        .filter_map(|(base, lhs_side, i)| {
            let original = if *lhs_side { &base.lhs } else { &base.rhs };
            let perturbed = original.perturb_constant(*i, &one);
            let mut def = base.clone();
            if *lhs_side {
                def.lhs = perturbed.clone();
            } else {
                def.rhs = perturbed.clone();
            }
            // oracle: lead term of the change in lhs − rhs
            let before = series_through(original, &base.bindings, order, &[]).unwrap();
            let after = series_through(&perturbed, &base.bindings, order, &[]).unwrap();
            let delta = if *lhs_side { after.sub(&before) } else { before.sub(&after) };
            let expected = delta
                .first_nonzero_below(order)
                .map(|(e, c)| (e, c.clone()));
            let report = verify_definition(&def, order).unwrap();
            let side = if *lhs_side { "lhs" } else { "rhs" };
            if report.status != Status::Fail || expected.is_none() || report.first_nonzero != expected {
                Some(format!(
                    "{} {side} constant #{i}: status {} first_nonzero {:?} expected {:?}",
                    base.id, report.status, report.first_nonzero, expected
                ))
            } else {
                None
            }
        })
        .collect();
    Outcome {
        criterion: 7,
        title: "single-constant perturbations fail at the predicted term",
        failed: failures.into_iter().collect(),
        detail: format!("({} perturbations over {} passing identities)", jobs.len(), passing.len()),
    }
}

fn criterion_8() -> Outcome {
    let mut failed = BTreeSet::new();
    let mut notes = Vec::new();
    for symbol in ["u", "w1", "r", "s"] {
        match cross_check_series_vs_numeric(symbol, &rat(3, 100), Exponent::from_int(30), 40) {
            Ok(r) if r.status == Status::Pass => notes.push(format!(
                "{symbol}: |diff| {} <= {}",
                r.difference.to_sci(2),
                r.combined_bound.to_sci(2)
            )),
            Ok(_) => {
                failed.insert(symbol.to_string());
            }
            Err(e) => {
                failed.insert(format!("{symbol}: {e}"));
            }
        }
    }
    Outcome {
        criterion: 8,
        title: "series vs numeric at q = 0.03, order 30, 40 digits",
        failed,
        detail: format!("({})", notes.join("; ")),
    }
}

fn main() {
    let start = Instant::now();
    let outcomes = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
    ];
    println!();
    for o in &outcomes {
        o.print();
    }
    let mut unexpected = Vec::new();
    for o in &outcomes {
        let known: BTreeSet<String> = KNOWN_RED
            .iter()
            .filter(|(c, _)| *c == o.criterion)
            .flat_map(|(_, ids)| ids.iter().map(|s| s.to_string()))
            .collect();
        if o.failed != known {
            unexpected.push(format!(
                "criterion {}: failing {:?}, documented {:?}",
                o.criterion, o.failed, known
            ));
        }
    }
    println!(
        "acceptance: {} of {} criteria PASS ({:.1}s)",
        outcomes.iter().filter(|o| o.failed.is_empty()).count(),
        outcomes.len(),
        start.elapsed().as_secs_f64()
    );
    if !unexpected.is_empty() {
        for u in &unexpected {
            eprintln!("unexpected: {u}");
        }
        std::process::exit(1);
    }
}
