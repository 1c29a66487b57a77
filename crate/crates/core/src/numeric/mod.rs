//! High-precision evaluation of `f(−q)`, `f(q)`, the parameters `r_{k,n}`
//! and `r'_{k,n}`, radicals, and series cross-checks.
//!
//! All arithmetic is binary fixed point ([`BigReal`]) carrying
//! [`GUARD_DIGITS`] decimal digits beyond the request. Every evaluation
//! returns an error bound made of a truncation tail plus a rounding budget
//! counted in units in the last place.

mod bigreal;

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_traits::{One, Signed};
use rayon::prelude::*;

pub use bigreal::BigReal;

use crate::catalog::{
    self, named_symbol, Binding, ClosedFormDef, EtaQuotientSpec, IdentityDef, Mode, RParam,
    ThetaSign,
};
use crate::error::{Error, Result};
use crate::expr::{evaluate, Algebra, Expr};
use crate::qseries::{pentagonal, Exponent, QSeries, Rational};
use crate::verifier::Status;

pub const GUARD_DIGITS: u32 = 20;

/// Closed forms pass when `|computed − radical| ≤ 10^-(digits − CLOSED_FORM_SLACK)`.
pub const CLOSED_FORM_SLACK: u32 = 10;
/// Numeric identities pass when `|lhs − rhs| ≤ 10^-(digits − IDENTITY_SLACK)`.
pub const IDENTITY_SLACK: u32 = 5;

fn working_bits(digits: u32) -> u32 {
    BigReal::bits_for_digits(digits + GUARD_DIGITS)
}

fn check_digits(digits: u32) -> Result<()> {
    if digits == 0 {
        return Err(Error::Domain("digits must be positive".into()));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct EvalResult {
    pub value: BigReal,
    pub error_bound: BigReal,
    /// Upper bound for `Σ e·|x|^e` over the summed terms, the sensitivity
    /// of the sum to a relative perturbation of its argument.
    pub sensitivity: BigReal,
    pub terms: usize,
}

impl EvalResult {
    /// Decimal digits guaranteed by the error bound.
    pub fn certified_digits(&self) -> i64 {
        if self.error_bound.is_zero() {
            return i64::MAX;
        }
        (-self.error_bound.log10_abs()).floor() as i64
    }

    fn relative_error(&self) -> Result<BigReal> {
        self.error_bound.div(&self.value.abs())
    }
}

/// `Σ (−1)^n x^{n(3n−1)/2}`, or with `twisted` the `x → −x` companion.
fn theta_sum(x: &BigReal, twisted: bool, digits: u32) -> Result<EvalResult> {
    let bits = x.bits();
    if x.is_negative() || *x >= BigReal::one(bits) {
        return Err(Error::Domain(format!("argument {} outside [0, 1)", x.to_sci(6))));
    }
    let target = BigReal::pow10_neg(digits + GUARD_DIGITS / 2, bits);
    let denom = &BigReal::one(bits) - x;
    let mut sum = BigReal::zero(bits);
    let mut sensitivity = BigReal::zero(bits);
    let mut tail = BigReal::zero(bits);
    let mut terms = 0usize;
    let mut rounding_ulps = 0i64;
    for (n, e) in pentagonal() {
        let t = x.powi(e)?;
        if terms > 0 {
            // remaining terms are dominated by 2·x^E/(1 − x)
            let bound = t.mul_int(2).div(&denom)?;
            if bound < target {
                tail = &bound + &BigReal::ulp(bits);
                break;
            }
        }
        let flips = if twisted { n + e } else { n };
        if flips.rem_euclid(2) == 0 {
            sum = &sum + &t;
        } else {
            sum = &sum - &t;
        }
        sensitivity = &sensitivity + &t.mul_int(e);
        rounding_ulps += 2 * (64 - e.max(1).leading_zeros() as i64) + 2;
        terms += 1;
    }
    let error_bound = &tail + &BigReal::ulp(bits).mul_int(rounding_ulps);
    Ok(EvalResult {
        value: sum,
        error_bound,
        sensitivity,
        terms,
    })
}

fn unit_interval(qv: &Rational) -> Result<()> {
    if qv.is_negative() || *qv >= Rational::one() {
        return Err(Error::Domain(format!("q = {qv} outside [0, 1)")));
    }
    Ok(())
}

/// `f(−x^k)` at a rational point `0 ≤ x < 1`.
pub fn eval_f_minus_at(qv: &Rational, k: u32, digits: u32) -> Result<EvalResult> {
    check_digits(digits)?;
    unit_interval(qv)?;
    let x = BigReal::from_rational(qv, working_bits(digits)).powi(i64::from(k))?;
    theta_sum(&x, false, digits)
}

/// `f(x^k)` at a rational point `0 ≤ x < 1`.
pub fn eval_f_plus_at(qv: &Rational, k: u32, digits: u32) -> Result<EvalResult> {
    check_digits(digits)?;
    unit_interval(qv)?;
    let x = BigReal::from_rational(qv, working_bits(digits)).powi(i64::from(k))?;
    theta_sum(&x, true, digits)
}

/// Combined relative error of a quotient `num / den` whose argument `x`
/// carries a relative error of `rel_x`.
fn quotient_relative_error(num: &EvalResult, den: &EvalResult, rel_x: &BigReal, k: &BigReal) -> Result<BigReal> {
    let sens = &num.sensitivity.div(&num.value.abs())?
        + &(k * &den.sensitivity.div(&den.value.abs())?);
    Ok(&(&num.relative_error()? + &den.relative_error()?) + &(rel_x * &sens))
}

fn compute_param(k: &Rational, n: &Rational, primed: bool, digits: u32) -> Result<EvalResult> {
    check_digits(digits)?;
    if !k.is_positive() || !n.is_positive() {
        return Err(Error::Domain(format!("k = {k} and n = {n} must be positive")));
    }
    let bits = working_bits(digits);
    let kr = BigReal::from_rational(k, bits);
    let ratio = BigReal::from_rational(&(n / k), bits);
    let mut t = &BigReal::pi(bits) * &ratio.sqrt()?;
    if !primed {
        t = t.mul_int(2);
    }
    // q = e^{−t}, q^k = e^{−tk}
    let q = (-&t).exp();
    let qk = (-&(&t * &kr)).exp();
    let num = theta_sum(&q, primed, digits)?;
    let den = theta_sum(&qk, primed, digits)?;
    let shift = BigReal::from_rational(&((k - Rational::one()) / Rational::from_integer(24.into())), bits);
    let pref = &kr.sqrt()?.sqrt()? * &(-&(&t * &shift)).exp();
    let value = num.value.div(&(&pref * &den.value))?;

    let rel_x = BigReal::ulp(bits).mul_int(1 << 16);
    let rel = &quotient_relative_error(&num, &den, &rel_x, &kr)? + &BigReal::ulp(bits).mul_int(1 << 12);
    let error_bound = &(&value.abs() * &rel) + &BigReal::ulp(bits).mul_int(16);
    Ok(EvalResult {
        value,
        error_bound,
        sensitivity: BigReal::zero(bits),
        terms: num.terms + den.terms,
    })
}

/// `r_{k,n} = f(−q) / (k^{1/4} q^{(k−1)/24} f(−q^k))` with `q = e^{−2π√(n/k)}`.
pub fn compute_r(k: &Rational, n: &Rational, digits: u32) -> Result<EvalResult> {
    compute_param(k, n, false, digits)
}

/// `r'_{k,n} = f(q) / (k^{1/4} q^{(k−1)/24} f(q^k))` with `q = e^{−π√(n/k)}`.
pub fn compute_r_prime(k: &Rational, n: &Rational, digits: u32) -> Result<EvalResult> {
    compute_param(k, n, true, digits)
}

pub fn compute_r_param(p: &RParam, n: &Rational, digits: u32) -> Result<EvalResult> {
    compute_param(&p.k, &(&p.scale * n), p.primed, digits)
}

/// Real-valued evaluation with named values.
pub struct RealAlgebra {
    bits: u32,
    symbols: HashMap<String, BigReal>,
}

impl RealAlgebra {
    pub fn new(digits: u32) -> Self {
        RealAlgebra {
            bits: working_bits(digits),
            symbols: HashMap::new(),
        }
    }

    pub fn bind(&mut self, name: &str, value: BigReal) {
        self.symbols.insert(name.to_string(), value.with_bits(self.bits));
    }
}

impl Algebra for RealAlgebra {
    type Value = BigReal;

    fn constant(&self, c: &Rational) -> Result<BigReal> {
        Ok(BigReal::from_rational(c, self.bits))
    }
    fn symbol(&self, name: &str) -> Result<BigReal> {
        self.symbols
            .get(name)
            .cloned()
            .ok_or_else(|| Error::UnboundSymbol(name.to_string()))
    }
    fn add(&self, a: &BigReal, b: &BigReal) -> Result<BigReal> {
        Ok(a + b)
    }
    fn sub(&self, a: &BigReal, b: &BigReal) -> Result<BigReal> {
        Ok(a - b)
    }
    fn mul(&self, a: &BigReal, b: &BigReal) -> Result<BigReal> {
        Ok(a * b)
    }
    fn div(&self, a: &BigReal, b: &BigReal) -> Result<BigReal> {
        a.div(b)
    }
    fn neg(&self, a: &BigReal) -> Result<BigReal> {
        Ok(-a)
    }
    fn pow_int(&self, a: &BigReal, n: i64) -> Result<BigReal> {
        a.powi(n)
    }
    fn sqrt(&self, a: &BigReal) -> Result<BigReal> {
        a.sqrt()
    }
    fn nth_root(&self, a: &BigReal, n: u32) -> Result<BigReal> {
        a.nth_root(n)
    }
}

/// Evaluates a symbol-free expression.
pub fn expr_to_real(e: &Expr, digits: u32) -> Result<BigReal> {
    check_digits(digits)?;
    evaluate(e, &RealAlgebra::new(digits), &[])
}

#[derive(Clone, Debug)]
pub struct ClosedFormReport {
    pub id: String,
    pub digits: u32,
    pub computed: BigReal,
    pub radical: BigReal,
    pub difference: BigReal,
    pub error_bound: BigReal,
    /// Pass threshold is `10^tolerance_exp`.
    pub tolerance_exp: i32,
    pub status: Status,
    pub elapsed: Duration,
}

pub fn check_closed_form_def(def: &ClosedFormDef, digits: u32) -> Result<ClosedFormReport> {
    check_digits(digits)?;
    let start = Instant::now();
    let bits = working_bits(digits);
    let mut computed = BigReal::one(bits);
    let mut rel = BigReal::zero(bits);
    for entry in &def.entries {
        let r = compute_param(&entry.k, &entry.n, entry.primed, digits)?;
        rel = &rel + &r.relative_error()?.mul_int(i64::from(entry.power.unsigned_abs()));
        computed = &computed * &r.value.powi(i64::from(entry.power))?;
    }
    let radical = expr_to_real(&def.radical, digits)?;
    let difference = (&computed - &radical).abs();
    let error_bound = &(&computed.abs() * &rel) + &BigReal::ulp(bits).mul_int(1 << 8);
    let tol_digits = digits.saturating_sub(CLOSED_FORM_SLACK);
    let status = if difference <= BigReal::pow10_neg(tol_digits, bits) {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(ClosedFormReport {
        id: def.id.clone(),
        digits,
        computed,
        radical,
        difference,
        error_bound,
        tolerance_exp: -(tol_digits as i32),
        status,
        elapsed: start.elapsed(),
    })
}

pub fn check_closed_form(id: &str, digits: u32) -> Result<ClosedFormReport> {
    check_closed_form_def(catalog::get_closed_form(id)?, digits)
}

pub fn check_all_closed_forms(digits: u32) -> Vec<Result<ClosedFormReport>> {
    catalog::list_closed_forms()
        .par_iter()
        .map(|d| check_closed_form_def(d, digits))
        .collect()
}

#[derive(Clone, Debug)]
pub struct TransformCheck {
    pub name: String,
    pub residual: BigReal,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct TransformReport {
    pub k: Rational,
    pub n: Rational,
    pub m: Rational,
    pub digits: u32,
    pub checks: Vec<TransformCheck>,
    pub status: Status,
    pub elapsed: Duration,
}

/// Checks `r_{k,n} r_{k,1/n} = 1`, `r_{k,n} = r_{n,k}` and
/// `r_{k,n/m} = r_{mk,n} / r_{nk,m}`, together with their primed forms.
pub fn check_transformations(k: &Rational, n: &Rational, m: &Rational, digits: u32) -> Result<TransformReport> {
    check_digits(digits)?;
    if !k.is_positive() || !n.is_positive() || !m.is_positive() {
        return Err(Error::Domain("k, n and m must be positive".into()));
    }
    let start = Instant::now();
    let bits = working_bits(digits);
    let tol = BigReal::pow10_neg(digits.saturating_sub(CLOSED_FORM_SLACK), bits);
    let mut checks = Vec::new();
    for primed in [false, true] {
        let r = |a: &Rational, b: &Rational| compute_param(a, b, primed, digits).map(|e| e.value);
        let tag = if primed { "'" } else { "" };
        let one = BigReal::one(bits);
        let inv = (&(&r(k, n)? * &r(k, &n.recip())?) - &one).abs();
        let swap = (&r(k, n)? - &r(n, k)?).abs();
        let ratio = (&r(k, &(n / m))? - &r(&(m * k), n)?.div(&r(&(n * k), m)?)?).abs();
        for (name, residual) in [
            (format!("r{tag}_{{k,n}} r{tag}_{{k,1/n}} = 1"), inv),
            (format!("r{tag}_{{k,n}} = r{tag}_{{n,k}}"), swap),
            (format!("r{tag}_{{k,n/m}} = r{tag}_{{mk,n}}/r{tag}_{{nk,m}}"), ratio),
        ] {
            let pass = residual <= tol;
            checks.push(TransformCheck { name, residual, pass });
        }
    }
    let status = if checks.iter().all(|c| c.pass) {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(TransformReport {
        k: k.clone(),
        n: n.clone(),
        m: m.clone(),
        digits,
        checks,
        status,
        elapsed: start.elapsed(),
    })
}

#[derive(Clone, Debug)]
pub struct NumericIdentityReport {
    pub id: String,
    pub n: Rational,
    pub digits: u32,
    pub lhs: BigReal,
    pub rhs: BigReal,
    pub residual: BigReal,
    pub tolerance_exp: i32,
    pub status: Status,
    pub elapsed: Duration,
}

pub fn verify_numeric_definition(def: &IdentityDef, n: &Rational, digits: u32) -> Result<NumericIdentityReport> {
    check_digits(digits)?;
    if def.mode != Mode::Numeric {
        return Err(Error::WrongMode(def.id.clone()));
    }
    let start = Instant::now();
    let mut alg = RealAlgebra::new(digits);
    for (name, binding) in &def.bindings {
        match binding {
            Binding::R(p) => alg.bind(name, compute_r_param(p, n, digits)?.value),
            Binding::Expr(e) => {
                let v = evaluate(e, &alg, &[])?;
                alg.bind(name, v);
            }
            Binding::Quotient(_) => return Err(Error::WrongMode(def.id.clone())),
        }
    }
    let lhs = evaluate(&def.lhs, &alg, &[])?;
    let rhs = evaluate(&def.rhs, &alg, &[])?;
    let residual = (&lhs - &rhs).abs();
    let tol_digits = digits.saturating_sub(IDENTITY_SLACK);
    let status = if residual <= BigReal::pow10_neg(tol_digits, alg.bits) {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(NumericIdentityReport {
        id: def.id.clone(),
        n: n.clone(),
        digits,
        lhs,
        rhs,
        residual,
        tolerance_exp: -(tol_digits as i32),
        status,
        elapsed: start.elapsed(),
    })
}

pub fn verify_numeric_identity(id: &str, n: &Rational, digits: u32) -> Result<NumericIdentityReport> {
    verify_numeric_definition(catalog::get_identity(id)?, n, digits)
}

#[derive(Clone, Debug)]
pub struct CrossCheckReport {
    pub symbol: String,
    pub q: Rational,
    pub order: Exponent,
    pub digits: u32,
    pub series_value: BigReal,
    pub exact_value: BigReal,
    pub difference: BigReal,
    pub tail_bound: BigReal,
    pub combined_bound: BigReal,
    pub status: Status,
}

/// Evaluates `q^p Π f(±q^k)^e` directly at `x`.
fn eval_quotient(spec: &EtaQuotientSpec, x: &BigReal, x_tick: &BigReal, digits: u32) -> Result<EvalResult> {
    let bits = x.bits();
    let mut value = x_tick.powi(spec.prefactor.ticks())?;
    let mut rel = BigReal::ulp(bits).mul_int(1 << 8);
    for f in &spec.factors {
        let arg = x.powi(i64::from(f.scale))?;
        let t = theta_sum(&arg, f.sign == ThetaSign::Plus, digits)?;
        rel = &rel + &t.relative_error()?.mul_int(i64::from(f.power.unsigned_abs()));
        value = &value * &t.value.powi(i64::from(f.power))?;
    }
    let error_bound = &value.abs() * &rel;
    Ok(EvalResult {
        value,
        error_bound,
        sensitivity: BigReal::zero(bits),
        terms: 0,
    })
}

/// Coefficientwise majorant of the product part: every factor becomes
/// `f(−q^k)^{−|e|}`, which has nonnegative coefficients dominating those of
/// `f(±q^k)^{±e}`.
fn majorant(spec: &EtaQuotientSpec) -> EtaQuotientSpec {
    let mut m = spec.clone();
    m.prefactor = Exponent::ZERO;
    for f in &mut m.factors {
        f.sign = ThetaSign::Minus;
        f.power = -(f.power.abs());
    }
    m
}

/// Compares the truncated `q`-expansion of a named quotient, summed at
/// `q`, with direct evaluation of its product form.
///
/// The truncation tail is bounded by summing the majorant's exact
/// coefficients up to three times the truncation depth and a Cauchy
/// estimate on the radius `√q` beyond that. Fails with
/// [`Error::TailBoundTooLarge`] when that tail exceeds `10^-⌈digits/2⌉`.
pub fn cross_check_series_vs_numeric(symbol: &str, qv: &Rational, order: Exponent, digits: u32) -> Result<CrossCheckReport> {
    check_digits(digits)?;
    if !qv.is_positive() || *qv >= Rational::one() {
        return Err(Error::Domain(format!("q = {qv} outside (0, 1)")));
    }
    let spec = named_symbol(symbol)?;
    let bits = working_bits(digits);
    let x = BigReal::from_rational(qv, bits);
    let x_tick = x.nth_root(Exponent::TICKS_PER_UNIT as u32)?;

    let series = catalog::build_symbol_series(&spec, order)?;
    let valid_to = series.valid_to();
    let mut series_value = BigReal::zero(bits);
    let mut rounding = 0i64;
    for (e, c) in series.terms() {
        series_value = &series_value + &(&BigReal::from_rational(c, bits) * &x_tick.powi(e.ticks())?);
        rounding += 4 + (64 - e.ticks().unsigned_abs().max(1).leading_zeros() as i64);
    }

    // tail: x^p Σ_{j ≥ depth} m_j x^j
    let depth = valid_to.saturating_sub(spec.prefactor);
    if depth.ticks() <= 0 {
        return Err(Error::Domain(format!("order {order} is below the lead of {symbol}")));
    }
    let depth_int = num_integer::Integer::div_ceil(&depth.ticks(), &Exponent::TICKS_PER_UNIT);
    let far = 3 * depth_int;
    let maj_spec = majorant(&spec);
    let maj: QSeries = catalog::build_symbol_series(&maj_spec, Exponent::from_int(far))?;
    let mut near = BigReal::zero(bits);
    for (e, c) in maj.terms() {
        if e.ticks() >= depth.ticks() {
            near = &near + &(&BigReal::from_rational(c, bits) * &x_tick.powi(e.ticks())?);
        }
    }
    let rho = x.sqrt()?;
    let rho_tick = rho.nth_root(Exponent::TICKS_PER_UNIT as u32)?;
    let m_rho = eval_quotient(&maj_spec, &rho, &rho_tick, digits)?;
    let ratio = x.div(&rho)?;
    let cauchy = (&m_rho.value + &m_rho.error_bound).div(&(&BigReal::one(bits) - &ratio))?;
    let cauchy = &cauchy * &ratio.powi(far)?;
    let tail = &x_tick.powi(spec.prefactor.ticks())? * &(&near + &cauchy);
    let tail = &tail + &BigReal::ulp(bits).mul_int(rounding);

    let limit_digits = digits.div_ceil(2);
    if tail > BigReal::pow10_neg(limit_digits, bits) {
        return Err(Error::TailBoundTooLarge { bound: tail.to_f64() });
    }

    let exact = eval_quotient(&spec, &x, &x_tick, digits)?;
    let difference = (&series_value - &exact.value).abs();
    let combined_bound = &(&tail + &exact.error_bound) + &BigReal::ulp(bits).mul_int(rounding);
    let status = if difference <= combined_bound {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(CrossCheckReport {
        symbol: symbol.to_string(),
        q: qv.clone(),
        order,
        digits,
        series_value,
        exact_value: exact.value,
        difference,
        tail_bound: tail,
        combined_bound,
        status,
    })
}

/// `true` when `a` is within `10^-digits` of a rational `b`.
pub fn agrees_with(a: &BigReal, b: &Rational, digits: u32) -> bool {
    let b = BigReal::from_rational(b, a.bits());
    (a - &b).abs() <= BigReal::pow10_neg(digits, a.bits())
}
