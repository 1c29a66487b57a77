//! Built-in registry of quotients, identities, closed-form values and
//! factor tests, plus the evaluation of catalog expressions as q-series.

mod data;

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::expr::{evaluate, Algebra, Expr};
use crate::qseries::{euler_f_minus, theta_f_plus, Exponent, QSeries, Rational};

pub use data::named_symbol;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThetaSign {
    /// `f(−q^k)`
    Minus,
    /// `f(q^k)`
    Plus,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EtaFactor {
    pub sign: ThetaSign,
    pub scale: u32,
    pub power: i32,
}

/// `q^prefactor · Π f(±q^scale)^power`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EtaQuotientSpec {
    pub prefactor: Exponent,
    pub factors: Vec<EtaFactor>,
}

impl EtaQuotientSpec {
    /// Quotient of `f(−q^k)` factors given as `(scale, power)` pairs.
    pub fn minus(prefactor: Exponent, factors: &[(u32, i32)]) -> Self {
        Self::with_sign(ThetaSign::Minus, prefactor, factors)
    }

    pub fn with_sign(sign: ThetaSign, prefactor: Exponent, factors: &[(u32, i32)]) -> Self {
        EtaQuotientSpec {
            prefactor,
            factors: factors
                .iter()
                .map(|&(scale, power)| EtaFactor { sign, scale, power })
                .collect(),
        }
    }

    /// Every `f` factor starts with 1, so the lead is the prefactor.
    pub fn lead(&self) -> Exponent {
        self.prefactor
    }

    /// The same quotient evaluated at `q^k`.
    pub fn at_power(&self, k: u32) -> Self {
        EtaQuotientSpec {
            prefactor: Exponent::from_ticks(self.prefactor.ticks() * i64::from(k)),
            factors: self
                .factors
                .iter()
                .map(|f| EtaFactor {
                    scale: f.scale * k,
                    ..f.clone()
                })
                .collect(),
        }
    }

    pub fn reciprocal(&self) -> Self {
        EtaQuotientSpec {
            prefactor: Exponent::from_ticks(-self.prefactor.ticks()),
            factors: self
                .factors
                .iter()
                .map(|f| EtaFactor {
                    power: -f.power,
                    ..f.clone()
                })
                .collect(),
        }
    }
}

impl fmt::Display for EtaQuotientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^{{{}}}", self.prefactor)?;
        for factor in &self.factors {
            let sign = match factor.sign {
                ThetaSign::Minus => "-",
                ThetaSign::Plus => "",
            };
            write!(f, " f({sign}q^{})^{}", factor.scale, factor.power)?;
        }
        Ok(())
    }
}

/// `r_{k, scale·n}` or `r′_{k, scale·n}` for the identity's parameter `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct RParam {
    pub k: Rational,
    pub scale: Rational,
    pub primed: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Binding {
    Quotient(EtaQuotientSpec),
    Expr(Expr),
    R(RParam),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Series,
    Numeric,
}

/// An alternative set of bindings for symbols whose printed definition is
/// ambiguous.
#[derive(Clone, Debug, PartialEq)]
pub struct Reading {
    pub label: String,
    pub bindings: Vec<(String, Binding)>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SlotKind {
    /// An `Expr::Signed` node with this slot index decides between `+` and `−`.
    Sign,
    /// Choice among alternative definitions; index 0 is the printed one.
    Reading(Vec<Reading>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct AmbiguitySlot {
    pub description: String,
    pub kind: SlotKind,
}

impl AmbiguitySlot {
    pub fn arity(&self) -> usize {
        match &self.kind {
            SlotKind::Sign => 2,
            SlotKind::Reading(r) => r.len(),
        }
    }

    pub fn choice_label(&self, choice: usize) -> String {
        match &self.kind {
            SlotKind::Sign => if choice == 0 { "+" } else { "-" }.to_string(),
            SlotKind::Reading(r) => r[choice].label.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityDef {
    pub id: String,
    pub mode: Mode,
    pub bindings: Vec<(String, Binding)>,
    pub lhs: Expr,
    pub rhs: Expr,
    /// Slot `k` is addressed by `choices[k]` during evaluation.
    pub slots: Vec<AmbiguitySlot>,
    /// The equation as printed, in ASCII.
    pub printed_form: String,
}

impl IdentityDef {
    /// Bindings in effect for the given slot choices. Readings override the
    /// base bindings of the same name.
    pub fn effective_bindings(&self, choices: &[usize]) -> Vec<(String, Binding)> {
        let mut out = self.bindings.clone();
        for (slot, &choice) in self.slots.iter().zip(choices) {
            if let SlotKind::Reading(readings) = &slot.kind {
                for (name, b) in &readings[choice].bindings {
                    match out.iter_mut().find(|(n, _)| n == name) {
                        Some(entry) => entry.1 = b.clone(),
                        None => out.insert(0, (name.clone(), b.clone())),
                    }
                }
            }
        }
        out
    }

    /// All choice vectors, printed reading first.
    pub fn assignments(&self) -> Vec<Vec<usize>> {
        let mut all = vec![vec![]];
        for slot in &self.slots {
            all = all
                .into_iter()
                .flat_map(|prefix: Vec<usize>| {
                    (0..slot.arity()).map(move |c| {
                        let mut v = prefix.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        all
    }

    pub fn describe_choices(&self, choices: &[usize]) -> Vec<String> {
        self.slots
            .iter()
            .zip(choices)
            .map(|(s, &c)| format!("{}: {}", s.description, s.choice_label(c)))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormEntry {
    pub k: Rational,
    pub n: Rational,
    pub primed: bool,
    pub power: i32,
}

/// `Π r_{k,n}^power` (or primed) claimed equal to `radical`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormDef {
    pub id: String,
    pub entries: Vec<ClosedFormEntry>,
    pub radical: Expr,
    pub printed_form: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FactorTestDef {
    pub id: String,
    pub bindings: Vec<(String, Binding)>,
    /// Numbered from 1 in reports.
    pub factors: Vec<Expr>,
    pub expected_vanishing: Vec<usize>,
    pub expected_nonvanishing: Vec<usize>,
    pub printed_form: String,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Correction {
    Identity(IdentityDef),
    ClosedForm(ClosedFormDef),
}

/// A printed statement that fails its check, paired with a corrected form
/// that passes.
#[derive(Clone, Debug, PartialEq)]
pub struct Erratum {
    pub id: String,
    pub note: String,
    pub corrected: Correction,
}

struct Catalog {
    identities: Vec<IdentityDef>,
    closed_forms: Vec<ClosedFormDef>,
    factor_tests: Vec<FactorTestDef>,
    errata: Vec<Erratum>,
}

fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| Catalog {
        identities: data::identities(),
        closed_forms: data::closed_forms(),
        factor_tests: data::factor_tests(),
        errata: data::errata(),
    })
}

pub fn list_identities() -> &'static [IdentityDef] {
    &catalog().identities
}

pub fn get_identity(id: &str) -> Result<&'static IdentityDef> {
    list_identities()
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

pub fn list_closed_forms() -> &'static [ClosedFormDef] {
    &catalog().closed_forms
}

pub fn get_closed_form(id: &str) -> Result<&'static ClosedFormDef> {
    list_closed_forms()
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

pub fn list_factor_tests() -> &'static [FactorTestDef] {
    &catalog().factor_tests
}

pub fn get_factor_test(id: &str) -> Result<&'static FactorTestDef> {
    list_factor_tests()
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

pub fn list_errata() -> &'static [Erratum] {
    &catalog().errata
}

/// Caches `f(±q^k)` so that quotients sharing factors generate them once.
#[derive(Default)]
pub struct ThetaCache {
    series: HashMap<(ThetaSign, u32, Exponent), QSeries>,
}

impl ThetaCache {
    pub fn new() -> Self {
        Self::default()
    }

    fn get(&mut self, sign: ThetaSign, scale: u32, order: Exponent) -> &QSeries {
        self.series
            .entry((sign, scale, order))
            .or_insert_with(|| match sign {
                ThetaSign::Minus => euler_f_minus(scale, order),
                ThetaSign::Plus => theta_f_plus(scale, order),
            })
    }
}

pub fn build_symbol_series(spec: &EtaQuotientSpec, order: Exponent) -> Result<QSeries> {
    build_symbol_series_cached(spec, order, &mut ThetaCache::new())
}

/// Every factor starts with 1, so generating each to `order − prefactor`
/// makes the product valid through `order`.
pub fn build_symbol_series_cached(
    spec: &EtaQuotientSpec,
    order: Exponent,
    cache: &mut ThetaCache,
) -> Result<QSeries> {
    let inner = Exponent::from_ticks((order.ticks() - spec.prefactor.ticks()).max(1));
    let mut acc = QSeries::one();
    let mut denominator = QSeries::one();
    for factor in &spec.factors {
        let base = cache.get(factor.sign, factor.scale, inner).clone();
        let p = base.pow_int(i64::from(factor.power.unsigned_abs()))?;
        if factor.power > 0 {
            acc = acc.mul(&p);
        } else {
            denominator = denominator.mul(&p);
        }
    }
    let acc = acc.mul(&denominator.invert()?);
    Ok(acc.shift(spec.prefactor))
}

/// Evaluates expressions over q-series.
pub struct SeriesAlgebra {
    values: HashMap<String, QSeries>,
}

impl SeriesAlgebra {
    /// Builds every binding in order; expression bindings may refer to
    /// earlier names. Numeric parameters are rejected.
    pub fn new(bindings: &[(String, Binding)], order: Exponent) -> Result<Self> {
        let mut alg = SeriesAlgebra {
            values: HashMap::new(),
        };
        let mut cache = ThetaCache::new();
        for (name, binding) in bindings {
            let value = match binding {
                Binding::Quotient(spec) => build_symbol_series_cached(spec, order, &mut cache)?,
                Binding::Expr(e) => evaluate(e, &alg, &[])?,
                Binding::R(_) => return Err(Error::WrongMode(name.clone())),
            };
            alg.values.insert(name.clone(), value);
        }
        Ok(alg)
    }

    pub fn value(&self, name: &str) -> Option<&QSeries> {
        self.values.get(name)
    }
}

impl Algebra for SeriesAlgebra {
    type Value = QSeries;

    fn constant(&self, c: &Rational) -> Result<QSeries> {
        Ok(QSeries::constant(c.clone()))
    }

    fn symbol(&self, name: &str) -> Result<QSeries> {
        self.values
            .get(name)
            .cloned()
            .ok_or_else(|| Error::UnboundSymbol(name.to_string()))
    }

    fn add(&self, a: &QSeries, b: &QSeries) -> Result<QSeries> {
        Ok(a.add(b))
    }

    fn sub(&self, a: &QSeries, b: &QSeries) -> Result<QSeries> {
        Ok(a.sub(b))
    }

    fn mul(&self, a: &QSeries, b: &QSeries) -> Result<QSeries> {
        Ok(a.mul(b))
    }

    fn div(&self, a: &QSeries, b: &QSeries) -> Result<QSeries> {
        Ok(a.mul(&b.invert()?))
    }

    fn neg(&self, a: &QSeries) -> Result<QSeries> {
        Ok(a.negate())
    }

    fn pow_int(&self, a: &QSeries, n: i64) -> Result<QSeries> {
        Ok(a.pow_int(n)?)
    }

    fn sqrt(&self, a: &QSeries) -> Result<QSeries> {
        Ok(a.sqrt()?)
    }

    fn nth_root(&self, _a: &QSeries, n: u32) -> Result<QSeries> {
        Err(Error::RootInSeries(format!("root(_, {n})")))
    }
}

/// Evaluates `e` with every binding generated to `order`. Sign slots are
/// read from `choices`.
pub fn expr_to_series(
    e: &Expr,
    bindings: &[(String, Binding)],
    order: Exponent,
    choices: &[usize],
) -> Result<QSeries> {
    if e.has_nth_root() {
        return Err(Error::RootInSeries(e.to_string()));
    }
    let alg = SeriesAlgebra::new(bindings, order)?;
    evaluate(e, &alg, choices)
}

pub(crate) fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn rational_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn binding_json(b: &Binding) -> Value {
    match b {
        Binding::Quotient(spec) => json!({
            "kind": "quotient",
            "prefactor": spec.prefactor.to_string(),
            "factors": spec.factors.iter().map(|f| json!({
                "theta": match f.sign { ThetaSign::Minus => "f(-q^k)", ThetaSign::Plus => "f(q^k)" },
                "scale": f.scale,
                "power": f.power,
            })).collect::<Vec<_>>(),
        }),
        Binding::Expr(e) => json!({ "kind": "expr", "expr": e.to_string() }),
        Binding::R(p) => json!({
            "kind": if p.primed { "r_prime" } else { "r" },
            "k": rational_json(&p.k),
            "n_scale": rational_json(&p.scale),
        }),
    }
}

fn bindings_json(bindings: &[(String, Binding)]) -> Value {
    Value::Array(
        bindings
            .iter()
            .map(|(n, b)| json!({ "symbol": n, "binding": binding_json(b) }))
            .collect(),
    )
}

pub fn identity_json(d: &IdentityDef) -> Value {
    json!({
        "id": d.id,
        "mode": match d.mode { Mode::Series => "series", Mode::Numeric => "numeric" },
        "bindings": bindings_json(&d.bindings),
        "lhs": d.lhs.to_string(),
        "rhs": d.rhs.to_string(),
        "slots": d.slots.iter().map(|s| match &s.kind {
            SlotKind::Sign => json!({ "description": s.description, "kind": "sign" }),
            SlotKind::Reading(rs) => json!({
                "description": s.description,
                "kind": "reading",
                "readings": rs.iter().map(|r| json!({
                    "label": r.label,
                    "bindings": bindings_json(&r.bindings),
                })).collect::<Vec<_>>(),
            }),
        }).collect::<Vec<_>>(),
        "printed_form": d.printed_form,
    })
}

pub fn closed_form_json(d: &ClosedFormDef) -> Value {
    json!({
        "id": d.id,
        "combine": if d.entries.len() == 1 { "single" } else { "product" },
        "entries": d.entries.iter().map(|e| json!({
            "k": rational_json(&e.k),
            "n": rational_json(&e.n),
            "primed": e.primed,
            "power": e.power,
        })).collect::<Vec<_>>(),
        "radical": d.radical.to_string(),
        "printed_form": d.printed_form,
    })
}

pub fn factor_test_json(d: &FactorTestDef) -> Value {
    json!({
        "id": d.id,
        "bindings": bindings_json(&d.bindings),
        "factors": d.factors.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "expected_vanishing": d.expected_vanishing,
        "expected_nonvanishing": d.expected_nonvanishing,
        "printed_form": d.printed_form,
    })
}

pub fn erratum_json(e: &Erratum) -> Value {
    json!({
        "id": e.id,
        "note": e.note,
        "corrected": match &e.corrected {
            Correction::Identity(d) => identity_json(d),
            Correction::ClosedForm(d) => closed_form_json(d),
        },
    })
}

/// The whole catalog as one JSON document.
pub fn export_json() -> Value {
    json!({
        "identities": list_identities().iter().map(identity_json).collect::<Vec<_>>(),
        "closed_forms": list_closed_forms().iter().map(closed_form_json).collect::<Vec<_>>(),
        "factor_tests": list_factor_tests().iter().map(factor_test_json).collect::<Vec<_>>(),
        "errata": list_errata().iter().map(erratum_json).collect::<Vec<_>>(),
    })
}
