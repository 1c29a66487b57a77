//! Expression trees over named symbols and rational constants.
//!
//! The same tree type describes both sides of a series identity and the
//! radical constants of the closed-form table. A small infix syntax keeps
//! the catalog readable:
//!
//! ```text
//! P*Q + 7/(P*Q) - ((Q/P)^2 - 3 + (P/Q)^2)
//! root(2^-11, 24) * sqrt(sqrt(7) + sqrt(3))
//! Q^(3/2) + pm0(3*(sqrt(P) + 7/sqrt(P)))
//! ```
//!
//! `x^(p/2)` becomes `sqrt(x^p)`, any other fractional power `x^(p/n)` becomes
//! `root(x^p, n)`. `pmK(e)` is `±e` where the sign is chosen by ambiguity
//! slot `K`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::qseries::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Const(Rational),
    Sym(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    PowInt(Box<Expr>, i64),
    Sqrt(Box<Expr>),
    NthRoot(Box<Expr>, u32),
    /// `+e` or `−e` depending on the choice made for the given slot.
    Signed(usize, Box<Expr>),
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        Parser::new(src).parse_all()
    }

    pub fn int(n: i64) -> Expr {
        Expr::Const(Rational::from_integer(BigInt::from(n)))
    }

    pub fn sym(name: &str) -> Expr {
        Expr::Sym(name.to_string())
    }

    fn children(&self) -> Vec<&Expr> {
        match self {
            Expr::Const(_) | Expr::Sym(_) => vec![],
            Expr::Neg(a)
            | Expr::PowInt(a, _)
            | Expr::Sqrt(a)
            | Expr::NthRoot(a, _)
            | Expr::Signed(_, a) => vec![a],
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => vec![a, b],
        }
    }

    fn walk<'a>(&'a self, visit: &mut impl FnMut(&'a Expr)) {
        visit(self);
        for c in self.children() {
            c.walk(visit);
        }
    }

    pub fn symbols(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.walk(&mut |e| {
            if let Expr::Sym(s) = e {
                out.insert(s.clone());
            }
        });
        out
    }

    pub fn has_nth_root(&self) -> bool {
        let mut found = false;
        self.walk(&mut |e| found |= matches!(e, Expr::NthRoot(..)));
        found
    }

    pub fn slots(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        self.walk(&mut |e| {
            if let Expr::Signed(k, _) = e {
                out.insert(*k);
            }
        });
        out
    }

    /// Number of `Const` leaves, counted in pre-order.
    pub fn constant_count(&self) -> usize {
        let mut n = 0;
        self.walk(&mut |e| n += usize::from(matches!(e, Expr::Const(_))));
        n
    }

    /// Value of the `index`-th `Const` leaf in pre-order.
    pub fn constant_at(&self, index: usize) -> Option<&Rational> {
        let mut seen = 0;
        let mut hit = None;
        self.walk(&mut |e| {
            if let Expr::Const(c) = e {
                if seen == index {
                    hit = Some(c);
                }
                seen += 1;
            }
        });
        hit
    }

    /// Copy with the `index`-th `Const` leaf (pre-order) shifted by `delta`.
    pub fn perturb_constant(&self, index: usize, delta: &Rational) -> Expr {
        fn go(e: &Expr, index: usize, delta: &Rational, seen: &mut usize) -> Expr {
            let bx = |x: &Expr, seen: &mut usize| Box::new(go(x, index, delta, seen));
            match e {
                Expr::Const(c) => {
                    let out = if *seen == index { c + delta } else { c.clone() };
                    *seen += 1;
                    Expr::Const(out)
                }
                Expr::Sym(s) => Expr::Sym(s.clone()),
                Expr::Neg(a) => Expr::Neg(bx(a, seen)),
                Expr::Add(a, b) => {
                    let a = bx(a, seen);
                    Expr::Add(a, bx(b, seen))
                }
                Expr::Sub(a, b) => {
                    let a = bx(a, seen);
                    Expr::Sub(a, bx(b, seen))
                }
                Expr::Mul(a, b) => {
                    let a = bx(a, seen);
                    Expr::Mul(a, bx(b, seen))
                }
                Expr::Div(a, b) => {
                    let a = bx(a, seen);
                    Expr::Div(a, bx(b, seen))
                }
                Expr::PowInt(a, n) => Expr::PowInt(bx(a, seen), *n),
                Expr::Sqrt(a) => Expr::Sqrt(bx(a, seen)),
                Expr::NthRoot(a, n) => Expr::NthRoot(bx(a, seen), *n),
                Expr::Signed(k, a) => Expr::Signed(*k, bx(a, seen)),
            }
        }
        let mut seen = 0;
        go(self, index, delta, &mut seen)
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::PowInt(..) => 4,
            Expr::Const(c) if c.is_negative() || !c.is_integer() => 2,
            _ => 5,
        }
    }
}

/// Operations an evaluation target must provide.
pub trait Algebra {
    type Value: Clone;

    fn constant(&self, c: &Rational) -> Result<Self::Value>;
    fn symbol(&self, name: &str) -> Result<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn div(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn neg(&self, a: &Self::Value) -> Result<Self::Value>;
    fn pow_int(&self, a: &Self::Value, n: i64) -> Result<Self::Value>;
    fn sqrt(&self, a: &Self::Value) -> Result<Self::Value>;
    fn nth_root(&self, a: &Self::Value, n: u32) -> Result<Self::Value>;
}

/// Bottom-up evaluation with memoisation of repeated subtrees.
/// `choices[k]` selects the sign of slot `k` (0 is `+`, anything else `−`).
pub fn evaluate<A: Algebra>(expr: &Expr, alg: &A, choices: &[usize]) -> Result<A::Value> {
    let mut cache: HashMap<&Expr, A::Value> = HashMap::new();
    eval_rec(expr, alg, choices, &mut cache)
}

fn eval_rec<'e, A: Algebra>(
    expr: &'e Expr,
    alg: &A,
    choices: &[usize],
    cache: &mut HashMap<&'e Expr, A::Value>,
) -> Result<A::Value> {
    if let Some(v) = cache.get(expr) {
        return Ok(v.clone());
    }
    let value = match expr {
        Expr::Const(c) => alg.constant(c)?,
        Expr::Sym(s) => alg.symbol(s)?,
        Expr::Neg(a) => {
            let a = eval_rec(a, alg, choices, cache)?;
            alg.neg(&a)?
        }
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
            let x = eval_rec(a, alg, choices, cache)?;
            let y = eval_rec(b, alg, choices, cache)?;
            match expr {
                Expr::Add(..) => alg.add(&x, &y)?,
                Expr::Sub(..) => alg.sub(&x, &y)?,
                Expr::Mul(..) => alg.mul(&x, &y)?,
                _ => alg.div(&x, &y)?,
            }
        }
        Expr::PowInt(a, n) => {
            let a = eval_rec(a, alg, choices, cache)?;
            alg.pow_int(&a, *n)?
        }
        Expr::Sqrt(a) => {
            let a = eval_rec(a, alg, choices, cache)?;
            alg.sqrt(&a)?
        }
        Expr::NthRoot(a, n) => {
            let a = eval_rec(a, alg, choices, cache)?;
            alg.nth_root(&a, *n)?
        }
        Expr::Signed(k, a) => {
            let choice = *choices
                .get(*k)
                .ok_or_else(|| Error::UnresolvedSigns(format!("slot {k}")))?;
            let a = eval_rec(a, alg, choices, cache)?;
            if choice == 0 {
                a
            } else {
                alg.neg(&a)?
            }
        }
    };
    cache.insert(expr, value.clone());
    Ok(value)
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, e: &Expr, min: u8| -> fmt::Result {
            if e.precedence() < min {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        match self {
            Expr::Const(c) => write!(f, "{c}"),
            Expr::Sym(s) => write!(f, "{s}"),
            Expr::Neg(a) => {
                write!(f, "-")?;
                wrap(f, a, 4)
            }
            Expr::Add(a, b) => {
                wrap(f, a, 1)?;
                write!(f, " + ")?;
                wrap(f, b, 2)
            }
            Expr::Sub(a, b) => {
                wrap(f, a, 1)?;
                write!(f, " - ")?;
                wrap(f, b, 2)
            }
            Expr::Mul(a, b) => {
                wrap(f, a, 2)?;
                write!(f, "*")?;
                wrap(f, b, 3)
            }
            Expr::Div(a, b) => {
                wrap(f, a, 2)?;
                write!(f, "/")?;
                wrap(f, b, 3)
            }
            Expr::PowInt(a, n) => {
                wrap(f, a, 5)?;
                if *n < 0 {
                    write!(f, "^({n})")
                } else {
                    write!(f, "^{n}")
                }
            }
            Expr::Sqrt(a) => write!(f, "sqrt({a})"),
            Expr::NthRoot(a, n) => write!(f, "root({a}, {n})"),
            Expr::Signed(k, a) => write!(f, "pm{k}({a})"),
        }
    }
}

struct Parser<'s> {
    src: &'s str,
    chars: Vec<char>,
    pos: usize,
}

impl<'s> Parser<'s> {
    fn new(src: &'s str) -> Self {
        Parser {
            src,
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn fail<T>(&self, reason: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            expr: self.src.to_string(),
            reason: format!("{} at offset {}", reason.into(), self.pos),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(format!("expected `{c}`"))
        }
    }

    fn parse_all(mut self) -> Result<Expr> {
        let e = self.expr()?;
        if self.peek().is_some() {
            return self.fail("trailing input");
        }
        Ok(e)
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let (num, den) = if self.eat('(') {
            let neg = self.eat('-');
            let num = self.integer()?;
            let den = if self.eat('/') { self.integer()? } else { 1 };
            self.expect(')')?;
            (if neg { -num } else { num }, den)
        } else {
            let neg = self.eat('-');
            let num = self.integer()?;
            (if neg { -num } else { num }, 1)
        };
        if den <= 0 {
            return self.fail("exponent denominator must be positive");
        }
        let powered = if num == 1 {
            base
        } else {
            Expr::PowInt(Box::new(base), num)
        };
        Ok(match den {
            1 => powered,
            2 => Expr::Sqrt(Box::new(powered)),
            n => Expr::NthRoot(Box::new(powered), n as u32),
        })
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected an integer");
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        match text.parse() {
            Ok(n) => Ok(n),
            Err(_) => self.fail("integer out of range"),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let text: String = self.chars[start..self.pos].iter().collect();
                let n: BigInt = text.parse().expect("digits");
                Ok(Expr::Const(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self
                    .chars
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                if self.peek() != Some('(') {
                    return Ok(Expr::Sym(name));
                }
                self.pos += 1;
                let arg = self.expr()?;
                let out = match name.as_str() {
                    "sqrt" => Expr::Sqrt(Box::new(arg)),
                    "root" => {
                        self.expect(',')?;
                        let n = self.integer()?;
                        if n < 1 {
                            return self.fail("root index must be positive");
                        }
                        Expr::NthRoot(Box::new(arg), n as u32)
                    }
                    _ => match name.strip_prefix("pm").and_then(|k| k.parse().ok()) {
                        Some(k) => Expr::Signed(k, Box::new(arg)),
                        None => return self.fail(format!("unknown function `{name}`")),
                    },
                };
                self.expect(')')?;
                Ok(out)
            }
            _ => self.fail("unexpected token"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    struct Floats<'a>(&'a [(&'a str, f64)]);

    impl Algebra for Floats<'_> {
        type Value = f64;
        fn constant(&self, c: &Rational) -> Result<f64> {
            Ok(c.numer().to_string().parse::<f64>().unwrap()
                / c.denom().to_string().parse::<f64>().unwrap())
        }
        fn symbol(&self, name: &str) -> Result<f64> {
            self.0
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, v)| *v)
                .ok_or_else(|| Error::UnboundSymbol(name.into()))
        }
        fn add(&self, a: &f64, b: &f64) -> Result<f64> {
            Ok(a + b)
        }
        fn sub(&self, a: &f64, b: &f64) -> Result<f64> {
            Ok(a - b)
        }
        fn mul(&self, a: &f64, b: &f64) -> Result<f64> {
            Ok(a * b)
        }
        fn div(&self, a: &f64, b: &f64) -> Result<f64> {
            Ok(a / b)
        }
        fn neg(&self, a: &f64) -> Result<f64> {
            Ok(-a)
        }
        fn pow_int(&self, a: &f64, n: i64) -> Result<f64> {
            Ok(a.powi(n as i32))
        }
        fn sqrt(&self, a: &f64) -> Result<f64> {
            Ok(a.sqrt())
        }
        fn nth_root(&self, a: &f64, n: u32) -> Result<f64> {
            Ok(a.powf(1.0 / n as f64))
        }
    }

    fn eval(src: &str, env: &[(&str, f64)], choices: &[usize]) -> f64 {
        evaluate(&Expr::parse(src).unwrap(), &Floats(env), choices).unwrap()
    }

    #[test]
    fn precedence_and_powers() {
        assert_eq!(eval("1 + 2*3^2", &[], &[]), 19.0);
        assert_eq!(eval("-2^2", &[], &[]), -4.0);
        assert_eq!(eval("2^-1", &[], &[]), 0.5);
        assert_eq!(eval("8/2/2", &[], &[]), 2.0);
        assert!((eval("4^(3/2)", &[], &[]) - 8.0).abs() < 1e-12);
        assert!((eval("root(2^-11, 24)", &[], &[]) - 2f64.powf(-11.0 / 24.0)).abs() < 1e-15);
        assert!((eval("2^(-11/24)", &[], &[]) - 2f64.powf(-11.0 / 24.0)).abs() < 1e-15);
        assert_eq!(eval("P*Q + 7/(P*Q)", &[("P", 2.0), ("Q", 0.5)], &[]), 8.0);
    }

    #[test]
    fn sign_slots() {
        let e = Expr::parse("1 + pm0(3) + pm1(10)").unwrap();
        assert_eq!(e.slots().into_iter().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(evaluate(&e, &Floats(&[]), &[0, 0]).unwrap(), 14.0);
        assert_eq!(evaluate(&e, &Floats(&[]), &[1, 0]).unwrap(), 8.0);
        assert!(matches!(
            evaluate(&e, &Floats(&[]), &[0]),
            Err(Error::UnresolvedSigns(_))
        ));
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "1 +", "(1", "foo(2)", "2^x", "root(2, 0)", "1 2"] {
            assert!(Expr::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn constants_and_perturbation() {
        let e = Expr::parse("u1^3 - 2*u1^2*u2 - 7*u1*u2 + 42").unwrap();
        assert_eq!(e.constant_count(), 3);
        assert_eq!(e.constant_at(1).unwrap(), &Rational::from_integer(7.into()));
        let p = e.perturb_constant(1, &Rational::one());
        assert_eq!(p.to_string(), "u1^3 - 2*u1^2*u2 - 8*u1*u2 + 42");
        assert_eq!(
            e.symbols().into_iter().collect::<Vec<_>>(),
            vec!["u1".to_string(), "u2".to_string()]
        );
        assert!(!e.has_nth_root());
        assert!(Expr::parse("root(2, 3)").unwrap().has_nth_root());
    }

    fn arb_expr() -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            (0i64..50).prop_map(Expr::int),
            prop_oneof![Just("P"), Just("Q"), Just("u1")].prop_map(Expr::sym),
        ];
        leaf.prop_recursive(4, 32, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(a.into(), b.into())),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(a.into(), b.into())),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(a.into(), b.into())),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Div(a.into(), b.into())),
                (inner.clone(), -3i64..5)
                    .prop_filter("unit power", |(_, n)| *n != 1)
                    .prop_map(|(a, n)| Expr::PowInt(a.into(), n)),
                inner.clone().prop_map(|a| Expr::Neg(a.into())),
                inner.clone().prop_map(|a| Expr::Sqrt(a.into())),
                (inner.clone(), 3u32..7).prop_map(|(a, n)| Expr::NthRoot(a.into(), n)),
                inner.prop_map(|a| Expr::Signed(0, a.into())),
            ]
        })
    }

    proptest! {
        #[test]
        fn display_parses_back(e in arb_expr()) {
            let printed = e.to_string();
            let reparsed = Expr::parse(&printed).unwrap();
            prop_assert_eq!(reparsed, e, "printed as {}", printed);
        }
    }
}
