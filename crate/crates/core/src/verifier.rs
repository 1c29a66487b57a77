//! Series-mode verification of catalog identities and factor tests.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::catalog::{
    self, Binding, FactorTestDef, IdentityDef, Mode, SeriesAlgebra,
};
use crate::error::{Error, Result};
use crate::expr::{evaluate, Expr};
use crate::qseries::{Exponent, QSeries, Rational};

/// Default verification order, in integer powers of `q`.
pub const DEFAULT_ORDER: i64 = 60;

const MAX_ATTEMPTS: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Indeterminate,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Indeterminate => "indeterminate",
        })
    }
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub id: String,
    pub order: Exponent,
    pub status: Status,
    pub first_nonzero: Option<(Exponent, Rational)>,
    /// Truncation of the residual that decided the status.
    pub residual_valid_to: Option<Exponent>,
    /// Slot choices under which the identity holds, one line per slot.
    pub resolution: Option<Vec<String>>,
    /// When sign resolution is not unique: every passing assignment.
    pub candidates: Vec<Vec<String>>,
    pub note: Option<String>,
    pub elapsed: Duration,
}

/// Evaluates `expr` with bindings generated far enough that the result is
/// trusted through `order`. Starts from twice the most negative quotient
/// lead and then widens by the observed shortfall.
pub fn series_through(
    expr: &Expr,
    bindings: &[(String, Binding)],
    order: Exponent,
    choices: &[usize],
) -> Result<QSeries> {
    let most_negative = bindings
        .iter()
        .filter_map(|(_, b)| match b {
            Binding::Quotient(spec) => Some(spec.lead().ticks()),
            _ => None,
        })
        .min()
        .unwrap_or(0)
        .min(0);
    let mut pad = -2 * most_negative;
    let mut result = None;
    for _ in 0..MAX_ATTEMPTS {
        let generate = Exponent::from_ticks(order.ticks() + pad);
        let alg = SeriesAlgebra::new(bindings, generate)?;
        let value = evaluate(expr, &alg, choices)?;
        let shortfall = order.ticks().saturating_sub(value.valid_to().ticks());
        let decided = shortfall <= 0 || value.first_nonzero_below(value.valid_to()).is_some_and(|(e, _)| e < order);
        result = Some(value);
        if decided {
            break;
        }
        pad += shortfall.max(Exponent::TICKS_PER_UNIT);
    }
    Ok(result.expect("at least one attempt"))
}

/// `lhs − rhs` for the given slot choices.
pub fn residual_series(ident: &IdentityDef, order: Exponent, choices: &[usize]) -> Result<QSeries> {
    if ident.mode != Mode::Series {
        return Err(Error::WrongMode(ident.id.clone()));
    }
    let slots_used = ident.lhs.slots().into_iter().chain(ident.rhs.slots()).max();
    if choices.len() < ident.slots.len() || slots_used.is_some_and(|k| k >= choices.len()) {
        return Err(Error::UnresolvedSigns(ident.id.clone()));
    }
    let residual = Expr::Sub(Box::new(ident.lhs.clone()), Box::new(ident.rhs.clone()));
    series_through(&residual, &ident.effective_bindings(choices), order, choices)
}

fn classify(s: &QSeries, order: Exponent) -> (Status, Option<(Exponent, Rational)>) {
    let horizon = order.min(s.valid_to());
    if let Some((e, c)) = s.first_nonzero_below(horizon) {
        return (Status::Fail, Some((e, c.clone())));
    }
    if s.valid_to() >= order {
        (Status::Pass, None)
    } else {
        (Status::Indeterminate, None)
    }
}

fn report(id: &str, order: Exponent, started: Instant) -> IdentityReport {
    IdentityReport {
        id: id.to_string(),
        order,
        status: Status::Indeterminate,
        first_nonzero: None,
        residual_valid_to: None,
        resolution: None,
        candidates: vec![],
        note: None,
        elapsed: started.elapsed(),
    }
}

fn check_choices(ident: &IdentityDef, order: Exponent, choices: &[usize]) -> IdentityReport {
    let started = Instant::now();
    let mut out = report(&ident.id, order, started);
    match residual_series(ident, order, choices) {
        Ok(res) => {
            let (status, first) = classify(&res, order);
            out.status = status;
            out.first_nonzero = first;
            out.residual_valid_to = Some(res.valid_to());
            if status == Status::Indeterminate {
                out.note = Some(format!("residual only valid below q^{}", res.valid_to()));
            }
        }
        Err(e) => {
            out.status = Status::Fail;
            out.note = Some(e.to_string());
        }
    }
    out.elapsed = started.elapsed();
    out
}

/// Verifies an identity record that need not be in the catalog. Records
/// with ambiguity slots are resolved first.
pub fn verify_definition(ident: &IdentityDef, order: Exponent) -> Result<IdentityReport> {
    if ident.mode != Mode::Series {
        return Err(Error::WrongMode(ident.id.clone()));
    }
    if ident.slots.is_empty() {
        Ok(check_choices(ident, order, &[]))
    } else {
        Ok(resolve_definition(ident, order).1)
    }
}

pub fn verify_identity(id: &str, order: Exponent) -> Result<IdentityReport> {
    verify_definition(catalog::get_identity(id)?, order)
}

/// One report per series-mode catalog identity, evaluated in parallel.
pub fn verify_all(order: Exponent) -> Vec<IdentityReport> {
    catalog::list_identities()
        .par_iter()
        .filter(|d| d.mode == Mode::Series)
        .map(|d| verify_definition(d, order).expect("series-mode record"))
        .collect()
}

/// Tries every slot assignment. A unique passing assignment resolves the
/// identity; several passing assignments mean the order is too low to tell
/// them apart.
pub fn resolve_definition(ident: &IdentityDef, order: Exponent) -> (Option<Vec<usize>>, IdentityReport) {
    let started = Instant::now();
    let assignments = ident.assignments();
    let reports: Vec<IdentityReport> = assignments
        .par_iter()
        .map(|choices| check_choices(ident, order, choices))
        .collect();
    let passing: Vec<usize> = (0..reports.len())
        .filter(|&i| reports[i].status == Status::Pass)
        .collect();
    let mut out = report(&ident.id, order, started);
    let chosen = match passing.as_slice() {
        [only] => {
            out = reports[*only].clone();
            out.resolution = Some(ident.describe_choices(&assignments[*only]));
            Some(assignments[*only].clone())
        }
        [] => {
            if let Some(r) = reports.iter().find(|r| r.status == Status::Indeterminate) {
                out.status = Status::Indeterminate;
                out.residual_valid_to = r.residual_valid_to;
                out.note = r.note.clone();
            } else {
                let printed = &reports[0];
                out.status = Status::Fail;
                out.first_nonzero = printed.first_nonzero.clone();
                out.residual_valid_to = printed.residual_valid_to;
                out.note = Some(match &printed.note {
                    Some(n) => format!("no assignment passes; printed reading: {n}"),
                    None => "no assignment passes; first_nonzero is for the printed reading".into(),
                });
            }
            None
        }
        many => {
            out.status = Status::Indeterminate;
            out.candidates = many
                .iter()
                .map(|&i| ident.describe_choices(&assignments[i]))
                .collect();
            out.note = Some(format!("{} assignments pass; raise the order", many.len()));
            None
        }
    };
    out.elapsed = started.elapsed();
    (chosen, out)
}

pub fn resolve_signs(id: &str, order: Exponent) -> Result<(Option<Vec<usize>>, IdentityReport)> {
    let ident = catalog::get_identity(id)?;
    if ident.mode != Mode::Series {
        return Err(Error::WrongMode(id.to_string()));
    }
    if ident.slots.is_empty() {
        return Err(Error::NoSignSlots(id.to_string()));
    }
    Ok(resolve_definition(ident, order))
}

#[derive(Clone, Debug)]
pub struct FactorOutcome {
    pub index: usize,
    pub status: Status,
    pub first_nonzero: Option<(Exponent, Rational)>,
}

#[derive(Clone, Debug)]
pub struct FactorReport {
    pub id: String,
    pub order: Exponent,
    pub factors: Vec<FactorOutcome>,
    pub vanishing: Vec<usize>,
    pub nonvanishing: Vec<usize>,
    pub matches_expectation: bool,
    pub elapsed: Duration,
}

impl FactorReport {
    pub fn status(&self) -> Status {
        if self.matches_expectation {
            Status::Pass
        } else if self.factors.iter().any(|f| f.status == Status::Indeterminate) {
            Status::Indeterminate
        } else {
            Status::Fail
        }
    }
}

pub fn factor_definition(test: &FactorTestDef, order: Exponent) -> Result<FactorReport> {
    let started = Instant::now();
    let mut factors = Vec::new();
    for (i, e) in test.factors.iter().enumerate() {
        let s = series_through(e, &test.bindings, order, &[])?;
        let (status, first_nonzero) = classify(&s, order);
        factors.push(FactorOutcome {
            index: i + 1,
            // a vanishing factor is a passing residual
            status,
            first_nonzero,
        });
    }
    let vanishing: Vec<usize> = factors
        .iter()
        .filter(|f| f.status == Status::Pass)
        .map(|f| f.index)
        .collect();
    let nonvanishing: Vec<usize> = factors
        .iter()
        .filter(|f| f.status == Status::Fail)
        .map(|f| f.index)
        .collect();
    let matches_expectation = test.expected_vanishing.iter().all(|i| vanishing.contains(i))
        && test.expected_nonvanishing.iter().all(|i| nonvanishing.contains(i));
    Ok(FactorReport {
        id: test.id.clone(),
        order,
        factors,
        vanishing,
        nonvanishing,
        matches_expectation,
        elapsed: started.elapsed(),
    })
}

pub fn factor_vanish_test(id: &str, order: Exponent) -> Result<FactorReport> {
    factor_definition(catalog::get_factor_test(id)?, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(k: i64) -> Exponent {
        Exponent::from_int(k)
    }

    #[test]
    fn small_identity_and_wrong_mode() {
        let r = verify_identity("L21-7", n(40)).unwrap();
        assert_eq!(r.status, Status::Pass, "{r:?}");
        assert!(r.residual_valid_to.unwrap() >= n(40));
        assert!(matches!(verify_identity("R7R9", n(40)), Err(Error::WrongMode(_))));
        assert!(matches!(verify_identity("NOPE", n(40)), Err(Error::UnknownId(_))));
        assert!(matches!(resolve_signs("L21-7", n(40)), Err(Error::NoSignSlots(_))));
    }

    #[test]
    fn perturbed_constant_leaves_unit_residual() {
        let mut d = catalog::get_identity("L21-7").unwrap().clone();
        let idx = (0..d.rhs.constant_count())
            .find(|&i| d.rhs.constant_at(i).unwrap() == &catalog::rational(3, 1))
            .unwrap();
        d.rhs = d.rhs.perturb_constant(idx, &catalog::rational(-1, 1));
        let res = residual_series(&d, n(40), &[]).unwrap();
        assert_eq!(res.len(), 1);
        // rhs grew by 1, so lhs − rhs drops by 1
        assert_eq!(res.lead_term().unwrap(), (Exponent::ZERO, &catalog::rational(-1, 1)));
    }

    #[test]
    fn unresolved_slots_are_rejected() {
        let d = catalog::get_identity("W3").unwrap();
        assert!(matches!(residual_series(d, n(10), &[]), Err(Error::UnresolvedSigns(_))));
    }

    #[test]
    fn sign_resolution_needs_order() {
        let (choice, r) = resolve_signs("W3", n(-5)).unwrap();
        assert_eq!(choice, None);
        assert_eq!(r.status, Status::Indeterminate);
        assert_eq!(r.candidates.len(), 2);
        for order in [-4, 2, 40] {
            let (choice, r) = resolve_signs("W3", n(order)).unwrap();
            assert_eq!(r.status, Status::Pass, "{r:?}");
            assert_eq!(choice, Some(vec![0, 0]));
            assert!(r.resolution.unwrap().iter().any(|l| l.ends_with(": +")));
        }
    }
}
