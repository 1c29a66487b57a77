//! Truncated Puiseux series in `q` with exact rational coefficients.
//!
//! Exponents live on the lattice `(1/24)·Z`, stored as integer "ticks". A
//! series carries its own truncation point `valid_to`: every coefficient
//! strictly below it is exact, nothing is known at or above it. All
//! operations propagate the tightest truncation the inputs justify, so a
//! series that compares equal to zero below some order really is zero there.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::SeriesError;

/// Scalar field for every series coefficient. Always in lowest terms with a
/// positive denominator (guaranteed by `num-rational`).
pub type Rational = BigRational;

/// Exponent of `q`, stored in units of 1/24.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent(i64);

impl Exponent {
    pub const TICKS_PER_UNIT: i64 = 24;
    /// Truncation of a series that is known exactly (a constant, say).
    pub const EXACT: Exponent = Exponent(i64::MAX);
    pub const ZERO: Exponent = Exponent(0);

    pub const fn from_ticks(ticks: i64) -> Self {
        Exponent(ticks)
    }

    pub const fn from_int(n: i64) -> Self {
        Exponent(n * Self::TICKS_PER_UNIT)
    }

    /// `num/den` as an exponent, if it lies on the lattice.
    pub fn from_ratio(num: i64, den: i64) -> Option<Self> {
        if den == 0 {
            return None;
        }
        let scaled = num.checked_mul(Self::TICKS_PER_UNIT)?;
        if scaled % den != 0 {
            return None;
        }
        Some(Exponent(scaled / den))
    }

    pub const fn ticks(self) -> i64 {
        self.0
    }

    pub fn is_exact(self) -> bool {
        self == Self::EXACT
    }

    pub fn is_integer(self) -> bool {
        self.0 % Self::TICKS_PER_UNIT == 0
    }

    /// Largest integer exponent not above `self`.
    pub fn floor_integer(self) -> Self {
        if self.is_exact() {
            return self;
        }
        Exponent(Integer::div_floor(&self.0, &Self::TICKS_PER_UNIT) * Self::TICKS_PER_UNIT)
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(BigInt::from(self.0), BigInt::from(Self::TICKS_PER_UNIT))
    }

    pub fn saturating_add(self, other: Exponent) -> Exponent {
        if self.is_exact() || other.is_exact() {
            return Self::EXACT;
        }
        Exponent(self.0.saturating_add(other.0))
    }

    pub fn saturating_sub(self, other: Exponent) -> Exponent {
        if self.is_exact() {
            return Self::EXACT;
        }
        Exponent(self.0.saturating_sub(other.0))
    }

    fn saturating_mul(self, k: i64) -> Exponent {
        if self.is_exact() {
            return Self::EXACT;
        }
        Exponent(self.0.saturating_mul(k))
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            return write!(f, "inf");
        }
        let g = self.0.gcd(&Self::TICKS_PER_UNIT);
        let (num, den) = (self.0 / g, Self::TICKS_PER_UNIT / g);
        if den == 1 {
            write!(f, "{num}")
        } else {
            write!(f, "{num}/{den}")
        }
    }
}

/// A sparse truncated series `Σ c_e q^e + O(q^valid_to)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    terms: BTreeMap<Exponent, Rational>,
    valid_to: Exponent,
}

impl QSeries {
    /// The zero series, known below `valid_to`.
    pub fn zero(valid_to: Exponent) -> Self {
        QSeries {
            terms: BTreeMap::new(),
            valid_to,
        }
    }

    /// The exact constant `c`.
    pub fn constant(c: Rational) -> Self {
        Self::monomial(Exponent::ZERO, c, Exponent::EXACT)
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `c·q^e + O(q^valid_to)`. A zero `c`, or `e ≥ valid_to`, gives the
    /// empty term set.
    pub fn monomial(e: Exponent, c: Rational, valid_to: Exponent) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() && e < valid_to {
            terms.insert(e, c);
        }
        QSeries { terms, valid_to }
    }

    /// Builds a series from raw terms, dropping zeros and anything at or
    /// beyond `valid_to`. Repeated exponents are summed.
    pub fn from_terms<I>(terms: I, valid_to: Exponent) -> Self
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let mut map: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (e, c) in terms {
            if e < valid_to {
                *map.entry(e).or_insert_with(Rational::zero) += c;
            }
        }
        map.retain(|_, c| !c.is_zero());
        QSeries {
            terms: map,
            valid_to,
        }
    }

    pub fn valid_to(&self) -> Exponent {
        self.valid_to
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Exponent, &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Smallest stored exponent.
    pub fn lead(&self) -> Option<Exponent> {
        self.terms.keys().next().copied()
    }

    pub fn lead_term(&self) -> Option<(Exponent, &Rational)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    /// The lowest term strictly below `order`, if any.
    pub fn first_nonzero_below(&self, order: Exponent) -> Option<(Exponent, &Rational)> {
        self.lead_term().filter(|(e, _)| *e < order)
    }

    /// `Some(c)` if the series is exactly the constant `c` (no truncation).
    pub fn as_exact_constant(&self) -> Option<Rational> {
        if !self.valid_to.is_exact() {
            return None;
        }
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Exponent::ZERO).cloned(),
            _ => None,
        }
    }

    pub fn coeff_at(&self, e: Exponent) -> Result<Rational, SeriesError> {
        if e >= self.valid_to {
            return Err(SeriesError::BeyondTruncation {
                exponent: e,
                valid_to: self.valid_to,
            });
        }
        Ok(self.terms.get(&e).cloned().unwrap_or_else(Rational::zero))
    }

    /// Lowers the truncation point to `to` (never raises it).
    pub fn truncate(&self, to: Exponent) -> QSeries {
        let valid_to = self.valid_to.min(to);
        QSeries {
            terms: self
                .terms
                .range(..valid_to)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
            valid_to,
        }
    }

    /// Multiplies by `q^by`.
    pub fn shift(&self, by: Exponent) -> QSeries {
        QSeries {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exponent(e.0 + by.0), c.clone()))
                .collect(),
            valid_to: self.valid_to.saturating_add(by),
        }
    }

    pub fn scale(&self, c: &Rational) -> QSeries {
        if c.is_zero() {
            return QSeries::zero(self.valid_to);
        }
        QSeries {
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (*e, x * c))
                .collect(),
            valid_to: self.valid_to,
        }
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let valid_to = self.valid_to.min(other.valid_to);
        let mut terms: BTreeMap<Exponent, Rational> = self
            .terms
            .range(..valid_to)
            .map(|(e, c)| (*e, c.clone()))
            .collect();
        for (e, c) in other.terms.range(..valid_to) {
            let slot = terms.entry(*e).or_insert_with(Rational::zero);
            *slot += c;
            if slot.is_zero() {
                terms.remove(e);
            }
        }
        QSeries { terms, valid_to }
    }

    pub fn negate(&self) -> QSeries {
        QSeries {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
            valid_to: self.valid_to,
        }
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.negate())
    }

    /// Exponent used in place of the lead when bounding products: an empty
    /// series is `O(q^valid_to)`.
    fn lead_or_valid_to(&self) -> Exponent {
        self.lead().unwrap_or(self.valid_to)
    }

    /// gcd of the gaps between stored exponents and the lead (0 for at most
    /// one term).
    fn lattice_step(&self) -> i64 {
        let Some(lead) = self.lead() else { return 0 };
        self.terms
            .keys()
            .fold(0i64, |g, e| g.gcd(&(e.0 - lead.0)))
    }

    pub fn mul(&self, other: &QSeries) -> QSeries {
        let valid_to = self
            .valid_to
            .saturating_add(other.lead_or_valid_to())
            .min(other.valid_to.saturating_add(self.lead_or_valid_to()));
        if self.is_empty() || other.is_empty() {
            return QSeries::zero(valid_to);
        }
        if let Some(c) = self.as_exact_constant() {
            return other.scale(&c).truncate(valid_to);
        }
        if let Some(c) = other.as_exact_constant() {
            return self.scale(&c).truncate(valid_to);
        }

        let base = self.lead().unwrap().0 + other.lead().unwrap().0;
        let step = self.lattice_step().gcd(&other.lattice_step()).max(1);
        let top = self.terms.keys().next_back().unwrap().0
            + other.terms.keys().next_back().unwrap().0;
        let mut len = ((top - base) / step + 1) as usize;
        if !valid_to.is_exact() {
            let limit = Integer::div_ceil(&(valid_to.0 - base), &step).max(0) as usize;
            len = len.min(limit);
        }
        let mut acc = vec![Rational::zero(); len];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.0 + eb.0;
                if e >= valid_to.0 {
                    break;
                }
                acc[((e - base) / step) as usize] += ca * cb;
            }
        }
        let terms = acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (Exponent(base + step * i as i64), c))
            .collect();
        QSeries { terms, valid_to }
    }

    /// Normalised coefficient vector on the series' own lattice:
    /// `self = lead_coeff · q^lead · Σ alpha[j] q^{j·step}` with `alpha[0] = 1`,
    /// holding every lattice position below `valid_to`.
    fn normalized_dense(&self, count: usize, step: i64) -> Vec<Rational> {
        let (lead, lead_coeff) = self.lead_term().unwrap();
        let mut alpha = vec![Rational::zero(); count];
        for (e, c) in &self.terms {
            let j = ((e.0 - lead.0) / step) as usize;
            if j < count {
                alpha[j] = c / lead_coeff;
            }
        }
        alpha
    }

    /// Multiplicative inverse through the propagated truncation
    /// `valid_to − 2·lead`.
    pub fn invert(&self) -> Result<QSeries, SeriesError> {
        let (lead, lead_coeff) = self.lead_term().ok_or(SeriesError::EmptySeries)?;
        let inv_lead = lead_coeff.recip();
        let valid_to = self
            .valid_to
            .saturating_sub(lead)
            .saturating_sub(lead);
        let step = self.lattice_step();
        if step == 0 {
            return Ok(QSeries::monomial(Exponent(-lead.0), inv_lead, valid_to));
        }
        if valid_to.is_exact() {
            return Err(SeriesError::Unbounded);
        }
        let count = Integer::div_ceil(&(self.valid_to.0 - lead.0), &step).max(0) as usize;
        let alpha = self.normalized_dense(count, step);
        let mut beta: Vec<Rational> = Vec::with_capacity(count);
        beta.push(Rational::one());
        for n in 1..count {
            let mut s = Rational::zero();
            for i in 1..=n {
                if !alpha[i].is_zero() && !beta[n - i].is_zero() {
                    s += &alpha[i] * &beta[n - i];
                }
            }
            beta.push(-s);
        }
        let terms = beta
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (Exponent(-lead.0 + step * j as i64), c * &inv_lead));
        Ok(QSeries::from_terms(terms, valid_to))
    }

    /// Integer power by repeated squaring; negative powers invert first.
    pub fn pow_int(&self, n: i64) -> Result<QSeries, SeriesError> {
        if n == 0 {
            return Ok(QSeries::one());
        }
        let base = if n < 0 { self.invert()? } else { self.clone() };
        let mut exp = n.unsigned_abs();
        let mut square = base;
        let mut acc: Option<QSeries> = None;
        loop {
            if exp & 1 == 1 {
                acc = Some(match acc {
                    None => square.clone(),
                    Some(a) => a.mul(&square),
                });
            }
            exp >>= 1;
            if exp == 0 {
                break;
            }
            square = square.mul(&square);
        }
        Ok(acc.unwrap())
    }

    /// Square root with positive leading coefficient, valid through
    /// `valid_to − lead/2`.
    pub fn sqrt(&self) -> Result<QSeries, SeriesError> {
        let (lead, lead_coeff) = self.lead_term().ok_or(SeriesError::EmptySeries)?;
        if lead.0 % 2 != 0 {
            return Err(SeriesError::OddLeadExponent(lead));
        }
        let root = rational_sqrt(lead_coeff)
            .ok_or_else(|| SeriesError::NonSquareLeadCoefficient(lead_coeff.clone()))?;
        let half = Exponent(lead.0 / 2);
        let valid_to = self.valid_to.saturating_sub(half);
        let step = self.lattice_step();
        if step == 0 {
            return Ok(QSeries::monomial(half, root, valid_to));
        }
        if valid_to.is_exact() {
            return Err(SeriesError::Unbounded);
        }
        let count = Integer::div_ceil(&(self.valid_to.0 - lead.0), &step).max(0) as usize;
        let alpha = self.normalized_dense(count, step);
        let two = Rational::from_integer(BigInt::from(2));
        let mut beta: Vec<Rational> = Vec::with_capacity(count);
        beta.push(Rational::one());
        for n in 1..count {
            let mut s = alpha[n].clone();
            for i in 1..n {
                if !beta[i].is_zero() && !beta[n - i].is_zero() {
                    s -= &beta[i] * &beta[n - i];
                }
            }
            beta.push(s / &two);
        }
        let terms = beta
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (Exponent(half.0 + step * j as i64), c * &root));
        Ok(QSeries::from_terms(terms, valid_to))
    }

    /// `q → −q`. Defined only on integer exponents; a fractional truncation
    /// point is lowered to the integer below it.
    pub fn substitute_neg_q(&self) -> Result<QSeries, SeriesError> {
        if let Some(e) = self.terms.keys().find(|e| !e.is_integer()) {
            return Err(SeriesError::NonIntegerExponent(*e));
        }
        let valid_to = self.valid_to.floor_integer();
        let terms = self
            .terms
            .range(..valid_to)
            .map(|(e, c)| {
                let odd = (e.0 / Exponent::TICKS_PER_UNIT) % 2 != 0;
                (*e, if odd { -c } else { c.clone() })
            })
            .collect();
        Ok(QSeries { terms, valid_to })
    }

    /// `q → q^k`.
    pub fn rescale(&self, k: u32) -> QSeries {
        let k = i64::from(k);
        QSeries {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exponent(e.0 * k), c.clone()))
                .collect(),
            valid_to: self.valid_to.saturating_mul(k),
        }
    }
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Generalised pentagonal exponents `n(3n−1)/2` for `n = 0, 1, −1, 2, −2, …`
/// in increasing order, paired with `n`.
pub(crate) fn pentagonal() -> impl Iterator<Item = (i64, i64)> {
    std::iter::once((0, 0)).chain((1i64..).flat_map(|m| {
        [(m, m * (3 * m - 1) / 2), (-m, m * (3 * m + 1) / 2)]
    }))
}

fn pentagonal_generator(k: u32, order: Exponent, twisted: bool) -> QSeries {
    let k = i64::from(k);
    let mut terms = BTreeMap::new();
    for (n, e) in pentagonal() {
        let ticks = e * k * Exponent::TICKS_PER_UNIT;
        if ticks >= order.ticks() {
            break;
        }
        let flips = if twisted { n + e } else { n };
        let sign = if flips.rem_euclid(2) == 0 { 1 } else { -1 };
        terms.insert(Exponent(ticks), Rational::from_integer(BigInt::from(sign)));
    }
    QSeries {
        terms,
        valid_to: order,
    }
}

/// `f(−q^k) = Σ (−1)^n q^{k·n(3n−1)/2}`, valid below `order`.
pub fn euler_f_minus(k: u32, order: Exponent) -> QSeries {
    pentagonal_generator(k, order, false)
}

/// `f(q^k)`, the `q → −q` companion of [`euler_f_minus`].
pub fn theta_f_plus(k: u32, order: Exponent) -> QSeries {
    pentagonal_generator(k, order, true)
}

impl fmt::Display for QSeries {
    /// Ascending terms, e.g. `1 - q - q^2 + 3/2*q^{1/2}`. The truncation is
    /// shown only with the alternate flag (`{:#}`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in &self.terms {
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            if e.0 == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !unit {
                write!(f, "{mag}*")?;
            }
            if *e == Exponent::from_int(1) {
                write!(f, "q")?;
            } else if e.is_integer() {
                write!(f, "q^{}", e.0 / Exponent::TICKS_PER_UNIT)?;
            } else {
                write!(f, "q^{{{e}}}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        if f.alternate() && !self.valid_to.is_exact() {
            write!(f, " + O(q^{{{}}})", self.valid_to)?;
        }
        Ok(())
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        QSeries::add(self, rhs)
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        QSeries::sub(self, rhs)
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        QSeries::mul(self, rhs)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        self.negate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn q_int(coeffs: &[(i64, i64)], valid_to: i64) -> QSeries {
        QSeries::from_terms(
            coeffs.iter().map(|&(e, c)| (Exponent::from_int(e), r(c))),
            Exponent::from_int(valid_to),
        )
    }

    fn ints(s: &QSeries) -> Vec<(i64, i64)> {
        s.terms()
            .map(|(e, c)| {
                assert!(e.is_integer() && c.is_integer());
                (e.ticks() / 24, i64::try_from(c.to_integer()).unwrap())
            })
            .collect()
    }

    #[test]
    fn monomials() {
        let one = QSeries::monomial(Exponent::ZERO, r(1), Exponent::from_int(40));
        assert_eq!(ints(&one), vec![(0, 1)]);
        let inv_q = QSeries::monomial(Exponent::from_int(-1), r(1), Exponent::from_int(40));
        assert_eq!(inv_q.lead(), Some(Exponent::from_int(-1)));
        let a = QSeries::monomial(Exponent::from_ticks(1), r(1), Exponent::from_int(40));
        let b = QSeries::monomial(Exponent::from_ticks(-1), r(1), Exponent::from_int(40));
        assert_eq!(ints(&a.mul(&b)), vec![(0, 1)]);
        assert!(QSeries::monomial(Exponent::ZERO, r(0), Exponent::from_int(4)).is_empty());
    }

    #[test]
    fn add_cancels() {
        let a = q_int(&[(0, 1), (1, -1)], 10);
        let b = q_int(&[(1, 1)], 10);
        assert_eq!(ints(&a.add(&b)), vec![(0, 1)]);
        let z = a.add(&a.negate());
        assert!(z.is_empty());
        assert_eq!(z.valid_to(), Exponent::from_int(10));
    }

    #[test]
    fn telescoping_product() {
        let a = q_int(&[(0, 1), (1, -1)], 20);
        let geo = q_int(&(0..20).map(|e| (e, 1)).collect::<Vec<_>>(), 20);
        let p = a.mul(&geo);
        assert_eq!(ints(&p), vec![(0, 1)]);
        assert_eq!(p.valid_to(), Exponent::from_int(20));
    }

    #[test]
    fn invert_geometric_and_shifted() {
        let a = q_int(&[(0, 1), (1, -1)], 12);
        let b = a.invert().unwrap();
        assert_eq!(ints(&b), (0..12).map(|e| (e, 1)).collect::<Vec<_>>());
        // q^-1 (1 + q)
        let c = q_int(&[(-1, 1), (0, 1)], 10);
        let d = c.invert().unwrap();
        assert_eq!(d.lead(), Some(Exponent::from_int(1)));
        assert_eq!(d.valid_to(), Exponent::from_int(12));
        let expect: Vec<_> = (1..12).map(|e| (e, if e % 2 == 1 { 1 } else { -1 })).collect();
        assert_eq!(ints(&d), expect);
        assert_eq!(
            QSeries::zero(Exponent::from_int(3)).invert(),
            Err(SeriesError::EmptySeries)
        );
    }

    #[test]
    fn pow_small() {
        let a = q_int(&[(0, 1), (1, 1)], 10);
        assert_eq!(ints(&a.pow_int(0).unwrap()), vec![(0, 1)]);
        assert_eq!(ints(&a.pow_int(2).unwrap()), vec![(0, 1), (1, 2), (2, 1)]);
        assert_eq!(
            QSeries::zero(Exponent::from_int(3)).pow_int(-2),
            Err(SeriesError::EmptySeries)
        );
    }

    #[test]
    fn sqrt_cases() {
        let a = q_int(&[(0, 1), (1, 1)], 10).pow_int(2).unwrap();
        assert_eq!(ints(&a.sqrt().unwrap()), vec![(0, 1), (1, 1)]);
        let odd = QSeries::monomial(Exponent::from_ticks(1), r(1), Exponent::from_int(4));
        assert!(matches!(odd.sqrt(), Err(SeriesError::OddLeadExponent(_))));
        let two = QSeries::monomial(Exponent::ZERO, r(2), Exponent::from_int(4));
        assert!(matches!(two.sqrt(), Err(SeriesError::NonSquareLeadCoefficient(_))));
        // sqrt(q) is fine on the 1/24 lattice
        let q = QSeries::monomial(Exponent::from_int(1), r(1), Exponent::from_int(4));
        assert_eq!(q.sqrt().unwrap().lead(), Some(Exponent::from_ticks(12)));
    }

    #[test]
    fn substitution_and_rescale() {
        let f = euler_f_minus(1, Exponent::from_int(16));
        let g = f.substitute_neg_q().unwrap();
        assert_eq!(
            ints(&g),
            vec![(0, 1), (1, 1), (2, -1), (5, -1), (7, -1), (12, -1), (15, 1)]
        );
        assert_eq!(g.substitute_neg_q().unwrap(), f);
        let half = QSeries::monomial(Exponent::from_ticks(12), r(1), Exponent::from_int(4));
        assert!(matches!(
            half.substitute_neg_q(),
            Err(SeriesError::NonIntegerExponent(_))
        ));
        let f3 = f.rescale(3);
        assert_eq!(
            ints(&f3).into_iter().take(4).collect::<Vec<_>>(),
            vec![(0, 1), (3, -1), (6, -1), (15, 1)]
        );
        assert_eq!(f.rescale(1), f);
    }

    #[test]
    fn generators() {
        let f = euler_f_minus(1, Exponent::from_int(16));
        assert_eq!(
            ints(&f),
            vec![(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1), (15, -1)]
        );
        assert_eq!(
            ints(&euler_f_minus(21, Exponent::from_int(22))),
            vec![(0, 1), (21, -1)]
        );
        let p = theta_f_plus(1, Exponent::from_int(16));
        assert_eq!(p, f.substitute_neg_q().unwrap());
        assert_eq!(
            theta_f_plus(2, Exponent::from_int(16)),
            theta_f_plus(1, Exponent::from_int(8)).rescale(2)
        );
    }

    #[test]
    fn coefficient_lookup() {
        let f = euler_f_minus(1, Exponent::from_int(16));
        assert_eq!(f.coeff_at(Exponent::from_int(5)).unwrap(), r(1));
        assert_eq!(f.coeff_at(Exponent::from_int(3)).unwrap(), r(0));
        assert!(matches!(
            f.coeff_at(Exponent::from_int(40)),
            Err(SeriesError::BeyondTruncation { .. })
        ));
    }

    #[test]
    fn display() {
        let f = euler_f_minus(1, Exponent::from_int(16));
        assert_eq!(f.to_string(), "1 - q - q^2 + q^5 + q^7 - q^12 - q^15");
        let s = QSeries::from_terms(
            [
                (Exponent::from_ticks(-2), r(1)),
                (Exponent::from_ticks(12), Rational::new(BigInt::from(3), BigInt::from(2))),
            ],
            Exponent::from_int(2),
        );
        assert_eq!(format!("{s:#}"), "q^{-1/12} + 3/2*q^{1/2} + O(q^{2})");
        assert_eq!(Exponent::from_ticks(14).to_string(), "7/12");
    }
}
