//! Binary fixed-point reals: `mant · 2^-bits`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::qseries::Rational;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigReal {
    mant: BigInt,
    bits: u32,
}

fn pow2(n: u32) -> BigInt {
    BigInt::one() << n
}

/// `round(a / 2^n)`, ties toward +∞.
fn shr_round(a: &BigInt, n: u32) -> BigInt {
    if n == 0 {
        return a.clone();
    }
    (a + (BigInt::one() << (n - 1))) >> n
}

impl BigReal {
    /// Fractional bits needed to carry `digits` decimal digits.
    pub fn bits_for_digits(digits: u32) -> u32 {
        (f64::from(digits) * LOG2_10).ceil() as u32 + 8
    }

    pub fn zero(bits: u32) -> Self {
        BigReal {
            mant: BigInt::zero(),
            bits,
        }
    }

    pub fn one(bits: u32) -> Self {
        Self::from_int(1, bits)
    }

    pub fn from_int(n: i64, bits: u32) -> Self {
        BigReal {
            mant: BigInt::from(n) << bits,
            bits,
        }
    }

    pub fn from_rational(r: &Rational, bits: u32) -> Self {
        let num = r.numer() << bits;
        let den = r.denom();
        // round to nearest
        let q = Integer::div_floor(&(&num * 2 + den), &(den * 2));
        BigReal { mant: q, bits }
    }

    /// `10^-d`, rounded up so that comparisons against it stay conservative.
    pub fn pow10_neg(d: u32, bits: u32) -> Self {
        let den = BigInt::from(10).pow(d);
        let num = BigInt::one() << bits;
        let q = (&num + &den - 1) / &den;
        BigReal { mant: q, bits }
    }

    /// One unit in the last place.
    pub fn ulp(bits: u32) -> Self {
        BigReal {
            mant: BigInt::one(),
            bits,
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn with_bits(&self, bits: u32) -> Self {
        let mant = match bits.cmp(&self.bits) {
            Ordering::Equal => self.mant.clone(),
            Ordering::Greater => &self.mant << (bits - self.bits),
            Ordering::Less => shr_round(&self.mant, self.bits - bits),
        };
        BigReal { mant, bits }
    }

    fn aligned(&self, other: &BigReal) -> (BigInt, BigInt, u32) {
        let bits = self.bits.max(other.bits);
        (
            self.with_bits(bits).mant,
            other.with_bits(bits).mant,
            bits,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        BigReal {
            mant: self.mant.abs(),
            bits: self.bits,
        }
    }

    pub fn div(&self, other: &BigReal) -> Result<BigReal> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (a, b, bits) = self.aligned(other);
        Ok(BigReal {
            mant: (a << bits) / b,
            bits,
        })
    }

    pub fn recip(&self) -> Result<BigReal> {
        BigReal::one(self.bits).div(self)
    }

    pub fn mul_int(&self, n: i64) -> BigReal {
        BigReal {
            mant: &self.mant * n,
            bits: self.bits,
        }
    }

    pub fn sqrt(&self) -> Result<BigReal> {
        if self.is_negative() {
            return Err(Error::NegativeRadicand);
        }
        Ok(BigReal {
            mant: (&self.mant << self.bits).sqrt(),
            bits: self.bits,
        })
    }

    /// Real `n`-th root; odd roots of negative values are negative.
    pub fn nth_root(&self, n: u32) -> Result<BigReal> {
        if n == 0 {
            return Err(Error::Domain("zeroth root".into()));
        }
        if self.is_negative() {
            if n.is_multiple_of(2) {
                return Err(Error::NegativeRadicand);
            }
            return Ok(-&self.abs().nth_root(n)?);
        }
        let scaled = &self.mant << (self.bits as usize * (n as usize - 1));
        Ok(BigReal {
            mant: scaled.nth_root(n),
            bits: self.bits,
        })
    }

    pub fn powi(&self, n: i64) -> Result<BigReal> {
        if n < 0 {
            return self.powi(-n)?.recip();
        }
        let mut result = BigReal::one(self.bits);
        let mut base = self.clone();
        let mut e = n as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// `e^self`, computed with enough extra bits that small results keep
    /// their relative precision.
    pub fn exp(&self) -> BigReal {
        let magnitude = self.to_f64().abs();
        let halvings = if magnitude < 1e-3 {
            0
        } else {
            (magnitude.log2().ceil() as i64 + 10).max(0) as u32
        };
        let underflow = if self.is_negative() {
            (magnitude * std::f64::consts::LOG2_E).ceil() as u32
        } else {
            0
        };
        let work = self.bits + halvings + underflow + 32;
        // x / 2^halvings at `work` bits, exactly
        let x = BigReal {
            mant: &self.mant << (work - self.bits - halvings),
            bits: work,
        };
        let mut sum = BigReal::one(work);
        let mut term = BigReal::one(work);
        let mut i = 1i64;
        loop {
            term = &term * &x;
            term.mant /= i;
            if term.is_zero() {
                break;
            }
            sum = &sum + &term;
            i += 1;
        }
        for _ in 0..halvings {
            sum = &sum * &sum;
        }
        sum.with_bits(self.bits)
    }

    /// π by Machin's formula.
    pub fn pi(bits: u32) -> BigReal {
        let work = bits + 16;
        let atan_inv = |n: i64| -> BigInt {
            let n2 = BigInt::from(n * n);
            let mut term = pow2(work) / n;
            let mut sum = BigInt::zero();
            let mut k = 0i64;
            while !term.is_zero() {
                let t = &term / (2 * k + 1);
                if k % 2 == 0 {
                    sum += t;
                } else {
                    sum -= t;
                }
                term /= &n2;
                k += 1;
            }
            sum
        };
        let mant = atan_inv(5) * 16 - atan_inv(239) * 4;
        BigReal { mant, bits: work }.with_bits(bits)
    }

    /// Nearest `f64`; 0 on underflow.
    pub fn to_f64(&self) -> f64 {
        let len = self.mant.bits() as i64;
        if len == 0 {
            return 0.0;
        }
        let shift = (len - 60).max(0);
        let top = (&self.mant >> shift as usize).to_f64().unwrap_or(0.0);
        top * 2f64.powi((shift - i64::from(self.bits)).clamp(-1100, 1100) as i32)
    }

    /// `log10 |self|`, −∞ for zero. Works far outside the `f64` range.
    pub fn log10_abs(&self) -> f64 {
        let len = self.mant.bits() as i64;
        if len == 0 {
            return f64::NEG_INFINITY;
        }
        let shift = (len - 60).max(0);
        let top = (self.mant.abs() >> shift as usize).to_f64().unwrap_or(1.0);
        (top.log2() + (shift - i64::from(self.bits)) as f64) / LOG2_10
    }

    /// Fixed notation with `places` digits after the point.
    pub fn to_fixed(&self, places: usize) -> String {
        let scaled = shr_round(&(&self.mant * BigInt::from(10).pow(places as u32)), self.bits);
        let negative = scaled.sign() == Sign::Minus;
        let digits = scaled.abs().to_string();
        let digits = format!("{digits:0>width$}", width = places + 1);
        let (int, frac) = digits.split_at(digits.len() - places);
        let sign = if negative { "-" } else { "" };
        if places == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }

    /// Scientific notation with `sig` significant digits.
    pub fn to_sci(&self, sig: usize) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let sig = sig.max(1);
        let mut e10 = self.log10_abs().floor() as i64;
        loop {
            let shift = sig as i64 - 1 - e10;
            let ten = BigInt::from(10);
            let scaled = if shift >= 0 {
                shr_round(&(self.mant.abs() * ten.pow(shift as u32)), self.bits)
            } else {
                let den = ten.pow((-shift) as u32) << self.bits;
                (self.mant.abs() * 2 + &den) / (den * 2)
            };
            let text = scaled.to_string();
            if text.len() > sig {
                e10 += 1;
                continue;
            }
            if text.len() < sig {
                e10 -= 1;
                continue;
            }
            let sign = if self.is_negative() { "-" } else { "" };
            let (head, tail) = text.split_at(1);
            return if tail.is_empty() {
                format!("{sign}{head}e{e10}")
            } else {
                format!("{sign}{head}.{tail}e{e10}")
            };
        }
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigReal {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl Add for &BigReal {
    type Output = BigReal;
    fn add(self, other: &BigReal) -> BigReal {
        let (a, b, bits) = self.aligned(other);
        BigReal { mant: a + b, bits }
    }
}

impl Sub for &BigReal {
    type Output = BigReal;
    fn sub(self, other: &BigReal) -> BigReal {
        let (a, b, bits) = self.aligned(other);
        BigReal { mant: a - b, bits }
    }
}

impl Mul for &BigReal {
    type Output = BigReal;
    fn mul(self, other: &BigReal) -> BigReal {
        let (a, b, bits) = self.aligned(other);
        BigReal {
            mant: shr_round(&(a * b), bits),
            bits,
        }
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal {
            mant: -&self.mant,
            bits: self.bits,
        }
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let places = f
            .precision()
            .unwrap_or(((f64::from(self.bits) - 8.0) / LOG2_10).floor().max(0.0) as usize);
        f.write_str(&self.to_fixed(places))
    }
}
