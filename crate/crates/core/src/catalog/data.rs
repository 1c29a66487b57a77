//! The built-in records.

use super::{
    rational, AmbiguitySlot, Binding, ClosedFormDef, ClosedFormEntry, Correction, Erratum,
    EtaQuotientSpec, FactorTestDef, IdentityDef, Mode, RParam, Reading, SlotKind, ThetaSign,
};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::qseries::Exponent;

fn ex(src: &str) -> Expr {
    Expr::parse(src).unwrap_or_else(|e| panic!("catalog expression `{src}`: {e}"))
}

fn q(num: i64, den: i64) -> Exponent {
    Exponent::from_ratio(num, den).expect("exponent on the 1/24 lattice")
}

fn quot(prefactor: Exponent, factors: &[(u32, i32)]) -> Binding {
    Binding::Quotient(EtaQuotientSpec::minus(prefactor, factors))
}

fn bind(pairs: Vec<(&str, Binding)>) -> Vec<(String, Binding)> {
    pairs.into_iter().map(|(n, b)| (n.to_string(), b)).collect()
}

/// `u := q f_7 f_21 / (f_1 f_3)`
fn u_spec() -> EtaQuotientSpec {
    EtaQuotientSpec::minus(q(1, 1), &[(7, 1), (21, 1), (1, -1), (3, -1)])
}

/// `u_r := f_r f_3r / (q^r f_7r f_21r)`
fn ur_spec(r: u32) -> EtaQuotientSpec {
    u_spec().at_power(r).reciprocal()
}

/// `w_r := q^{r/2} f_r f_21r / (f_3r f_7r)`
fn wr_spec(r: u32) -> EtaQuotientSpec {
    EtaQuotientSpec::minus(q(1, 2), &[(1, 1), (21, 1), (3, -1), (7, -1)]).at_power(r)
}

/// `r := f_1 / (q^{1/12} f_3)`
fn r_spec() -> EtaQuotientSpec {
    EtaQuotientSpec::minus(q(-1, 12), &[(1, 1), (3, -1)])
}

/// `s := f_7 / (q^{7/12} f_21)`
fn s_spec() -> EtaQuotientSpec {
    EtaQuotientSpec::minus(q(-7, 12), &[(7, 1), (21, -1)])
}

/// Quotients addressable by name: `u`, `w`, `r`, `s`, `u<k>`, `w<k>`,
/// `f<k>` for `f(−q^k)` and `fplus<k>` for `f(q^k)`.
pub fn named_symbol(name: &str) -> Result<EtaQuotientSpec> {
    let index = |prefix: &str| -> Option<u32> {
        name.strip_prefix(prefix)
            .and_then(|k| k.parse::<u32>().ok())
            .filter(|k| *k > 0)
    };
    let spec = match name {
        "u" => u_spec(),
        "w" => wr_spec(1),
        "r" => r_spec(),
        "s" => s_spec(),
        _ => {
            if let Some(k) = index("fplus") {
                EtaQuotientSpec::with_sign(ThetaSign::Plus, Exponent::ZERO, &[(k, 1)])
            } else if let Some(k) = index("f") {
                EtaQuotientSpec::minus(Exponent::ZERO, &[(k, 1)])
            } else if let Some(k) = index("u") {
                ur_spec(k)
            } else if let Some(k) = index("w") {
                wr_spec(k)
            } else {
                return Err(Error::UnknownId(name.to_string()));
            }
        }
    };
    Ok(spec)
}

fn u_reading(indices: &[u32]) -> AmbiguitySlot {
    let with = |spec: &dyn Fn(u32) -> EtaQuotientSpec| {
        indices
            .iter()
            .map(|&r| (format!("u{r}"), Binding::Quotient(spec(r))))
            .collect()
    };
    AmbiguitySlot {
        description: "u_r".into(),
        kind: SlotKind::Reading(vec![
            Reading {
                label: "f_r f_3r/(q^r f_7r f_21r)".into(),
                bindings: with(&ur_spec),
            },
            Reading {
                label: "u(q^r) = q^r f_7r f_21r/(f_r f_3r)".into(),
                bindings: with(&|r| u_spec().at_power(r)),
            },
        ]),
    }
}

fn f_reading(indices: &[u32]) -> AmbiguitySlot {
    let with = |spec: &dyn Fn(u32) -> EtaQuotientSpec| {
        indices
            .iter()
            .map(|&r| (format!("F{r}"), Binding::Quotient(spec(r))))
            .collect()
    };
    AmbiguitySlot {
        description: "F_r".into(),
        kind: SlotKind::Reading(vec![
            Reading {
                label: "w_r".into(),
                bindings: with(&wr_spec),
            },
            Reading {
                label: "u_r".into(),
                bindings: with(&ur_spec),
            },
        ]),
    }
}

fn sign_slot(description: &str) -> AmbiguitySlot {
    AmbiguitySlot {
        description: description.into(),
        kind: SlotKind::Sign,
    }
}

fn series(
    id: &str,
    bindings: Vec<(&str, Binding)>,
    lhs: &str,
    rhs: &str,
    slots: Vec<AmbiguitySlot>,
    printed: &str,
) -> IdentityDef {
    IdentityDef {
        id: id.into(),
        mode: Mode::Series,
        bindings: bind(bindings),
        lhs: ex(lhs),
        rhs: ex(rhs),
        slots,
        printed_form: printed.into(),
    }
}

fn numeric(id: &str, k: i64, mult: i64, primed: bool, lhs: &str, rhs: &str, printed: &str) -> IdentityDef {
    let r = |scale: i64| {
        Binding::R(RParam {
            k: rational(k, 1),
            scale: rational(scale, 1),
            primed,
        })
    };
    IdentityDef {
        id: id.into(),
        mode: Mode::Numeric,
        bindings: bind(vec![("a", r(1)), ("b", r(mult))]),
        lhs: ex(lhs),
        rhs: ex(rhs),
        slots: vec![],
        printed_form: printed.into(),
    }
}

const W5_RHS: &str = "30*(Q^2 + 1/Q^2) + 215*(Q + 1/Q) + (P^2 + 7^4/P^2) + 270 \
    + 15*(P + 7^2/P)*(sqrt(Q) + 1/sqrt(Q))^2 + 5*(sqrt(P^3) + 7^3/sqrt(P)^3) \
    + 5*(sqrt(P) + 7/sqrt(P))*(6*(sqrt(Q^3) + 1/sqrt(Q^3)) + 19*(sqrt(Q) + 1/sqrt(Q)))";

const W5_RHS_CORRECTED: &str = "30*(Q^2 + 1/Q^2) + 215*(Q + 1/Q) + (P^2 + 7^4/P^2) + 270 \
    + 15*(P + 7^2/P)*(sqrt(Q) + 1/sqrt(Q))^2 + 5*(sqrt(P^3) + 7^3/sqrt(P)^3)*(sqrt(Q) + 1/sqrt(Q)) \
    + 5*(sqrt(P) + 7/sqrt(P))*(6*(sqrt(Q^3) + 1/sqrt(Q^3)) + 19*(sqrt(Q) + 1/sqrt(Q)))";

const W7_RHS: &str = "161*u7^2/u1 + 112*u7^2/u1^2 + 196*(u1*u7 + 49/(u1*u7)) \
    + 28*(u1^2*u7^2 + 7^4/(u1^2*u7^2)) + 1372 + 980*u7/u1 + 1127*u7/u1^2 \
    + (u1^4*u7^2 + 7^6/(u1^2*u7^4)) + 539*(u7 + 7/u1) + 343*(u1 + 7/u7) \
    + 77*(u7^2*u1 + 7^3/(u1^2*u7)) + 49*(u7*u1^2 + 7^3/(u1*u7^2)) \
    + 7*(u7^2*u1^3 + 7^5/(u1^2*u7^3)) + 49*(u1^2 + 7^2/u7^2) + 140*(u7^2 + 7^2/u1^2) \
    + 7*(u1^3*u7 + 7^4/(u1*u7^3)) + 343*u1/u7";

const U7_RHS: &str = "49*(Q^2 + 1/Q^2) - 28*(Q + 1/Q) - 464 \
    + (P^5 + 1/P^5)*(29 + 7*(Q + 1/Q)) - (P^4 + 1/P^4)*(106 + 14*(Q + 1/Q)) \
    + (P^3 + 1/P^3)*(183 + 21*(Q + 1/Q) - 7*(Q^3 + 1/Q^3) + (Q^4 + 1/Q^4)) \
    - (P^2 + 1/P^2)*(260 + 28*(Q + 1/Q) - 49*(Q^2 + 1/Q^2) + (Q^4 + 1/Q^4)) \
    + (P + 1/P)*(337 + 35*(Q + 1/Q) - 49*(Q^2 + 1/Q^2) + (Q^4 + 1/Q^4))";

fn w5(rhs: &str, slots: Vec<AmbiguitySlot>, printed: &str) -> IdentityDef {
    series(
        "W5",
        vec![("P", Binding::Expr(ex("u1*u5"))), ("Q", Binding::Expr(ex("u1/u5")))],
        "Q^3 + 1/Q^3",
        rhs,
        slots,
        printed,
    )
}

fn w7(lhs: &str, slots: Vec<AmbiguitySlot>, printed: &str) -> IdentityDef {
    series("W7", vec![], lhs, W7_RHS, slots, printed)
}

fn r7r9p(rhs: &str) -> IdentityDef {
    numeric(
        "R7R9P",
        7,
        9,
        true,
        "sqrt(7)*(a*b + 1/(a*b))",
        rhs,
        "sqrt7(r'_{7,n}r'_{7,9n}+1/(r'_{7,n}r'_{7,9n}))=3-(r'_{7,9n}/r'_{7,n})^2-(r'_{7,n}/r'_{7,9n})^2",
    )
}

pub(super) fn identities() -> Vec<IdentityDef> {
    let pq = |p: &str, q: &str| vec![("P", Binding::Expr(ex(p))), ("Q", Binding::Expr(ex(q)))];
    vec![
        series(
            "E15",
            vec![
                ("P", quot(q(-1, 3), &[(3, 1), (5, 1), (1, -1), (15, -1)])),
                ("Q", quot(q(-2, 3), &[(6, 1), (10, 1), (2, -1), (30, -1)])),
            ],
            "P*Q + 1/(P*Q)",
            "(Q/P)^3 + (P/Q)^3 + 4",
            vec![],
            "PQ+1/(PQ)=(Q/P)^3+(P/Q)^3+4, P=f_3f_5/(q^{1/3}f_1f_15), Q=f_6f_10/(q^{2/3}f_2f_30)",
        ),
        series(
            "L21-7",
            vec![
                ("P", quot(q(-1, 4), &[(1, 1), (7, -1)])),
                ("Q", quot(q(-3, 4), &[(3, 1), (21, -1)])),
            ],
            "P*Q + 7/(P*Q)",
            "(Q/P)^2 - 3 + (P/Q)^2",
            vec![],
            "PQ+7/(PQ)=(Q/P)^2-3+(P/Q)^2, P=f_1/(q^{1/4}f_7), Q=f_3/(q^{3/4}f_21)",
        ),
        series(
            "L21-3",
            vec![
                ("P", quot(q(-1, 12), &[(1, 1), (3, -1)])),
                ("Q", quot(q(-7, 12), &[(7, 1), (21, -1)])),
            ],
            "(P*Q)^3 + 27/(P*Q)^3",
            "(Q/P)^4 - 7*(Q/P)^2 + 7*(P/Q)^2 - (P/Q)^4",
            vec![],
            "(PQ)^3+27/(PQ)^3=(Q/P)^4-7(Q/P)^2+7(P/Q)^2-(P/Q)^4, P=f_1/(q^{1/12}f_3), Q=f_7/(q^{7/12}f_21)",
        ),
        series(
            "L9A",
            vec![
                ("u", quot(q(-1, 6), &[(1, 2), (3, -2)])),
                ("v", quot(q(-1, 3), &[(2, 2), (6, -2)])),
            ],
            "u*v + 9/(u*v)",
            "(u/v)^3 + (v/u)^3",
            vec![],
            "uv+9/(uv)=(u/v)^3+(v/u)^3, u=f_1^2/(q^{1/6}f_3^2), v=f_2^2/(q^{1/3}f_6^2)",
        ),
        series(
            "L9B",
            vec![
                ("u", quot(q(-1, 4), &[(1, 3), (3, -3)])),
                ("v", quot(q(-3, 4), &[(3, 3), (9, -3)])),
            ],
            "u*v + 27/(u*v) + 9",
            "v^2/u^2",
            vec![],
            "uv+27/(uv)+9=v^2/u^2, u=f_1^3/(q^{1/4}f_3^3), v=f_3^3/(q^{3/4}f_9^3)",
        ),
        series(
            "L15",
            vec![
                ("u", quot(q(-1, 12), &[(1, 1), (3, -1)])),
                ("v", quot(q(-5, 12), &[(5, 1), (15, -1)])),
            ],
            "(u*v)^2 + 5 + 9/(u*v)^2",
            "v^3/u^3 - u^3/v^3",
            vec![],
            "(uv)^2+5+9/(uv)^2=v^3/u^3-u^3/v^3, u=f_1/(q^{1/12}f_3), v=f_5/(q^{5/12}f_15)",
        ),
        series(
            "R1",
            vec![("u", Binding::Quotient(u_spec())), ("w", Binding::Quotient(wr_spec(1)))],
            "7*u + 1/u + 3",
            "w^2 + 1/w^2",
            vec![],
            "7u+1/u+3=w^2+1/w^2",
        ),
        series(
            "R2SQ",
            vec![("r", Binding::Quotient(r_spec())), ("u", Binding::Quotient(u_spec()))],
            "(r^6 + 27/r^6)^2",
            "(1 + 7*u)^6*(7*u + 1 + 1/u)",
            vec![],
            "r^6+(sqrt3/r)^6=(1+7u)^3*sqrt(7u+1+1/u)  [stored squared]",
        ),
        series(
            "R3SQ",
            vec![("s", Binding::Quotient(s_spec())), ("u", Binding::Quotient(u_spec()))],
            "(s^6 + 27/s^6)^2",
            "(1 + 1/u)^6*(7*u + 1 + 1/u)",
            vec![],
            "s^6+(sqrt3/s)^6=(1+1/u)^3*sqrt(7u+1+1/u)  [stored squared]",
        ),
        series(
            "CUBED",
            vec![],
            "d^36 - 729*c^12*d^12 - c^24*d^24 + c^36 - 24*c^24*d^12 - 24*c^12*d^24",
            "0",
            vec![AmbiguitySlot {
                description: "c, d".into(),
                kind: SlotKind::Reading(vec![
                    Reading {
                        label: "c = f_1^2/(q^{1/6}f_3^2), d = f_2^2/(q^{1/3}f_6^2)".into(),
                        bindings: bind(vec![
                            ("c", quot(q(-1, 6), &[(1, 2), (3, -2)])),
                            ("d", quot(q(-1, 3), &[(2, 2), (6, -2)])),
                        ]),
                    },
                    Reading {
                        label: "c = f_1/(q^{1/12}f_3), d = f_2/(q^{1/6}f_6)".into(),
                        bindings: bind(vec![
                            ("c", Binding::Quotient(r_spec())),
                            ("d", Binding::Quotient(r_spec().at_power(2))),
                        ]),
                    },
                ]),
            }],
            "d^36-729c^12d^12-c^24d^24+c^36-24c^24d^12-24c^12d^24=0, c=f_1^2/(q^{1/6}f_3^2), d=f_2^2/(q^{1/3}f_6^2)",
        ),
        series(
            "MN",
            vec![
                ("u", Binding::Quotient(u_spec())),
                ("v", Binding::Quotient(u_spec().at_power(2))),
                ("M2", Binding::Expr(ex("(1 + 7*u)^6*(7*u + 1 + 1/u)"))),
                ("N2", Binding::Expr(ex("(1 + 7*v)^6*(7*v + 1 + 1/v)"))),
            ],
            "M2^3 + N2^3 - 324*(M2^2 + N2^2) + 34992*(M2 + N2) + 10287*M2*N2 \
             + 84*(M2*N2^2 + M2^2*N2) - M2^2*N2^2",
            "1259712",
            vec![],
            "M^6+N^6-324(M^4+N^4)+34992(M^2+N^2)+10287M^2N^2+84(M^2N^4+M^4N^2)-M^4N^4=1259712, \
             M=(1+7u)^3sqrt(7u+1+1/u), N=M(q^2)",
        ),
        series(
            "W2",
            vec![],
            "u1^3 - 2*u1^2*u2 - u1*u2 - 7*u1^2*u2^2 - 2*u1*u2^2 + u2^3",
            "0",
            vec![u_reading(&[1, 2])],
            "u_1^3-2u_1^2u_2-u_1u_2-7u_1^2u_2^2-2u_1u_2^2+u_2^3=0",
        ),
        series(
            "W3",
            pq("u1*u3", "u1/u3"),
            "Q^3 + 1/Q^3",
            "5*(Q^2 + 1/Q^2) + 20*(Q + 1/Q) + (P + 7^2/P)*(Q + 1/Q + 1) \
             + pm1(3*(sqrt(P) + 7/sqrt(P))*((sqrt(Q^3) + 1/sqrt(Q^3)) + 3*(sqrt(Q) + 1/sqrt(Q)))) + 42",
            vec![u_reading(&[1, 3]), sign_slot("operator before 3(sqrt P + 7/sqrt P)[...]")],
            "Q^3+1/Q^3=5(Q^2+1/Q^2)+20(Q+1/Q)+(P+7^2/P)[Q+1/Q+1] 3(sqrtP+7/sqrtP)[(sqrtQ^3+1/sqrtQ^3)+3(sqrtQ+1/sqrtQ)]+42, \
             P=u_1u_3, Q=u_1/u_3",
        ),
        w5(
            W5_RHS,
            vec![u_reading(&[1, 5])],
            "Q^3+1/Q^3=30(Q^2+1/Q^2)+215(Q+1/Q)+(P^2+7^4/P^2)+270+15(P+7^2/P)[sqrtQ+1/sqrtQ]^2\
             +5(sqrtP^3+7^3/sqrtP^3)+5(sqrtP+7/sqrtP)[6(sqrtQ^3+1/sqrtQ^3)+19(sqrtQ+1/sqrtQ)], P=u_1u_5, Q=u_1/u_5",
        ),
        w7(
            "u1^3/u7^3",
            vec![u_reading(&[1, 7])],
            "u_1^3/u_7^3=161u_7^2/u_1+112u_7^2/u_1^2+196(u_1u_7+49/(u_1u_7))+...+343u_1/u_7",
        ),
        series(
            "U2",
            vec![
                ("w1", Binding::Quotient(wr_spec(1))),
                ("w2", Binding::Quotient(wr_spec(2))),
                ("P", Binding::Expr(ex("w1*w2"))),
                ("Q", Binding::Expr(ex("w1/w2"))),
            ],
            "P + 1/P",
            "Q^3 + 1/Q^3 + 4*(Q + 1/Q)",
            vec![],
            "P+1/P=Q^3+1/Q^3+4(Q+1/Q), P=w_1w_2, Q=w_1/w_2",
        ),
        series(
            "U3",
            vec![
                ("w1", Binding::Quotient(wr_spec(1))),
                ("w3", Binding::Quotient(wr_spec(3))),
                ("P", Binding::Expr(ex("w1*w3"))),
                ("Q", Binding::Expr(ex("w1/w3"))),
            ],
            "P^2 + 1/P^2",
            "Q^2 + 1/Q^2 + (P + 1/P)*(3 + (Q + 1/Q)^2 + 3*(Q + 1/Q)) + 1",
            vec![],
            "P^2+1/P^2=Q^2+1/Q^2+(P+1/P)[3+(Q+1/Q)^2+3(Q+1/Q)]+1, P=w_1w_3, Q=w_1/w_3",
        ),
        series(
            "U5",
            pq("F1*F5", "F1/F5"),
            "P^2 + 1/P^2",
            "Q^3 + 1/Q^3 + 5*(Q^2 + 1/Q^2) + 20*(Q + 1/Q) + 5*(P + 1/P)*((Q + 1/Q) + 2) + 35",
            vec![f_reading(&[1, 5])],
            "P^2+1/P^2=Q^3+1/Q^3+5(Q^2+1/Q^2)+20(Q+1/Q)+5(P+1/P)[(Q+1/Q)+2]+35, P=F_1F_5, Q=F_1/F_5",
        ),
        series(
            "U7",
            pq("F1*F7", "F1/F7"),
            "P^6 + 1/P^6 + Q^4 + 1/Q^4",
            U7_RHS,
            vec![f_reading(&[1, 7])],
            "P^6+1/P^6+Q^4+1/Q^4=49(Q^2+1/Q^2)-28(Q+1/Q)-464+(P^5+1/P^5)[29+7(Q+1/Q)]-...\
             +(P+1/P)[337+35(Q+1/Q)-49(Q^2+1/Q^2)+(Q^4+1/Q^4)], P=F_1F_7, Q=F_1/F_7",
        ),
        numeric(
            "R7R9",
            7,
            9,
            false,
            "sqrt(7)*(a*b + 1/(a*b))",
            "(b/a)^2 - 3 + (a/b)^2",
            "sqrt7(r_{7,n}r_{7,9n}+1/(r_{7,n}r_{7,9n}))=(r_{7,9n}/r_{7,n})^2-3+(r_{7,n}/r_{7,9n})^2",
        ),
        r7r9p("3 - (b/a)^2 - (a/b)^2"),
        numeric(
            "R3R49",
            3,
            49,
            false,
            "3*sqrt(3)*((a*b)^3 + 1/(a*b)^3)",
            "(b/a)^4 - 7*(b/a)^2 + 7*(a/b)^2 - (a/b)^4",
            "3sqrt3((r_{3,n}r_{3,49n})^3+1/(r_{3,n}r_{3,49n})^3)=(r_{3,49n}/r_{3,n})^4-7(r_{3,49n}/r_{3,n})^2\
             +7(r_{3,n}/r_{3,49n})^2-(r_{3,n}/r_{3,49n})^4",
        ),
        numeric(
            "R3R49P",
            3,
            49,
            true,
            "3*sqrt(3)*((a*b)^3 + 1/(a*b)^3)",
            "(b/a)^4 + 7*(b/a)^2 - 7*(a/b)^2 - (a/b)^4",
            "3sqrt3((r'_{3,n}r'_{3,49n})^3+1/(r'_{3,n}r'_{3,49n})^3)=(r'_{3,49n}/r'_{3,n})^4+7(r'_{3,49n}/r'_{3,n})^2\
             -7(r'_{3,n}/r'_{3,49n})^2-(r'_{3,n}/r'_{3,49n})^4",
        ),
    ]
}

/// `(k, n, primed, power)`
type Entry = (i64, (i64, i64), bool, i32);

fn cf(id: &str, entries: &[Entry], radical: &str, printed: &str) -> ClosedFormDef {
    ClosedFormDef {
        id: id.into(),
        entries: entries
            .iter()
            .map(|&(k, (nn, nd), primed, power)| ClosedFormEntry {
                k: rational(k, 1),
                n: rational(nn, nd),
                primed,
                power,
            })
            .collect(),
        radical: ex(radical),
        printed_form: printed.into(),
    }
}

fn single(id: &str, k: i64, n: (i64, i64), primed: bool, radical: &str, printed: &str) -> ClosedFormDef {
    cf(id, &[(k, n, primed, 1)], radical, printed)
}

fn pair(id: &str, k: i64, n1: (i64, i64), n2: (i64, i64), primed: bool, radical: &str, printed: &str) -> ClosedFormDef {
    cf(id, &[(k, n1, primed, 1), (k, n2, primed, 1)], radical, printed)
}

const S9_A: &str = "(100*sqrt(7) + 200*sqrt(3))^(1/6)*(342 + 78*sqrt(21))^(1/12)";
const S25: &str = "(7*2^(1/3)*7^(1/6) + 5*sqrt(7) + 2*2^(2/3)*7^(5/6))/3";
const A_PRINTED: &str = "(21*7^(2/3)*2^(1/3) + 37*7^(1/3)*2^(2/3))";
const A_CORRECTED: &str = "(24*7^(2/3)*2^(1/3) + 39*7^(1/3)*2^(2/3))";

fn s13(a: &str) -> String {
    format!("({S25})^(1/2)*((sqrt(147 + {a}) + sqrt(111 + {a}))/6)^(1/2)")
}

fn s14(a: &str) -> String {
    format!("({S25})^(1/2)*((sqrt(147 + {a}) - sqrt(111 + {a}))/6)^(1/2)")
}

fn s15(a: &str) -> String {
    format!("(sqrt(147 + {a}) + sqrt(111 + {a}))/6")
}

fn s79p(radical: &str) -> ClosedFormDef {
    single(
        "S79P",
        7,
        (9, 1),
        true,
        radical,
        "r'_{7,9}=2^{-3/8}{sqrt(11+sqrt21)+sqrt(3+sqrt21)}^{1/4}",
    )
}

fn p28(entries: &[Entry], printed: &str) -> ClosedFormDef {
    cf("P28", entries, "1", printed)
}

pub(super) fn closed_forms() -> Vec<ClosedFormDef> {
    let a_printed = "a=21*7^{2/3}2^{1/3}+37*7^{1/3}2^{2/3}";
    vec![
        single("S1", 7, (6, 1), false,
            "2^(-1/2)*sqrt((sqrt(7) + sqrt(3))*(sqrt(3) + sqrt(2)))",
            "r_{7,6}=2^{-1/2}{(sqrt7+sqrt3)(sqrt3+sqrt2)}^{1/2}"),
        single("S2", 7, (3, 2), false,
            "2^(-1/2)*sqrt((sqrt(7) - sqrt(3))*(sqrt(3) + sqrt(2)))",
            "r_{7,3/2}=2^{-1/2}{(sqrt7-sqrt3)(sqrt3+sqrt2)}^{1/2}"),
        single("S3", 7, (6, 1), true,
            "2^(-1/2)*(5 + sqrt(21))^(1/2)*(2 - sqrt(3))^(1/2)*(sqrt(7) - sqrt(6))^(1/4)*(5 + 2*sqrt(6))^(1/4)",
            "r'_{7,6}=2^{-1/2}(5+sqrt21)^{1/2}(2-sqrt3)^{1/2}(sqrt7-sqrt6)^{1/4}(5+2sqrt6)^{1/4}"),
        single("S4", 7, (3, 2), true,
            "2^(-1/2)*(5 - sqrt(21))^(1/2)*(2 + sqrt(3))^(1/2)*(sqrt(7) - sqrt(6))^(1/4)*(5 + 2*sqrt(6))^(1/4)",
            "r'_{7,3/2}=2^{-1/2}(5-sqrt21)^{1/2}(2+sqrt3)^{1/2}(sqrt7-sqrt6)^{1/4}(5+2sqrt6)^{1/4}"),
        single("S5", 3, (14, 1), false,
            "(sqrt(3) + sqrt(2))^(1/2)*(2*sqrt(2) + sqrt(7))^(1/6)",
            "r_{3,14}=(sqrt3+sqrt2)^{1/2}(2sqrt2+sqrt7)^{1/6}"),
        single("S6", 3, (7, 2), false,
            "(sqrt(3) + sqrt(2))^(1/2)*(2*sqrt(2) - sqrt(7))^(1/6)",
            "r_{3,7/2}=(sqrt3+sqrt2)^{1/2}(2sqrt2-sqrt7)^{1/6}"),
        single("S7", 2, (21, 1), false,
            "2^(-1/2)*(sqrt(7) + sqrt(3))^(1/2)*(2*sqrt(2) + sqrt(7))^(1/6)",
            "r_{2,21}=2^{-1/2}(sqrt7+sqrt3)^{1/2}(2sqrt2+sqrt7)^{1/6}"),
        single("S8", 2, (7, 3), false,
            "2^(-1/2)*(sqrt(7) + sqrt(3))^(1/2)*(2*sqrt(2) - sqrt(7))^(1/6)",
            "r_{2,7/3}=2^{-1/2}(sqrt7+sqrt3)^{1/2}(2sqrt2-sqrt7)^{1/6}"),
        single("S9", 3, (21, 1), false,
            &format!("20^(-1/2)*(sqrt(358 + 78*sqrt(21)) + sqrt(342 + 78*sqrt(21)))^(1/4)*{S9_A}"),
            "r_{3,21}=20^{-1/2}{sqrt(358+78sqrt21)+sqrt(342+78sqrt21)}^{1/4}*a, a=(100sqrt7+200sqrt3)^{1/6}(342+78sqrt21)^{1/12}"),
        single("S10", 3, (3, 7), false,
            &format!("20^(-1/2)*(sqrt(358 + 78*sqrt(21)) - sqrt(342 + 78*sqrt(21)))^(1/4)*{S9_A}"),
            "r_{3,3/7}=20^{-1/2}{sqrt(358+78sqrt21)-sqrt(342+78sqrt21)}^{1/4}*a, a=(100sqrt7+200sqrt3)^{1/6}(342+78sqrt21)^{1/12}"),
        single("S11", 3, (21, 1), true,
            "2^(-11/24)*3^(1/8)*(sqrt(7) + sqrt(3))^(1/12)*(sqrt(11 + sqrt(21)) + sqrt(3 + sqrt(21)))^(1/4)",
            "r'_{3,21}=2^{-11/24}3^{1/8}(sqrt7+sqrt3)^{1/12}{sqrt(11+sqrt21)+sqrt(3+sqrt21)}^{1/4}"),
        single("S12", 3, (3, 7), true,
            "2^(-11/24)*3^(1/8)*(sqrt(7) + sqrt(3))^(1/12)*(sqrt(11 + sqrt(21)) - sqrt(3 + sqrt(21)))^(1/4)",
            "r'_{3,3/7}=2^{-11/24}3^{1/8}(sqrt7+sqrt3)^{1/12}{sqrt(11+sqrt21)-sqrt(3+sqrt21)}^{1/4}"),
        single("S13", 7, (21, 1), false, &s13(A_PRINTED),
            &format!("r_{{7,21}}={{(7*2^{{1/3}}7^{{1/6}}+5sqrt7+2*2^{{2/3}}7^{{5/6}})/3}}^{{1/2}}{{(sqrt(147+a)+sqrt(111+a))/6}}^{{1/2}}, {a_printed}")),
        single("S14", 7, (7, 3), false, &s14(A_PRINTED),
            &format!("r_{{7,7/3}}={{(7*2^{{1/3}}7^{{1/6}}+5sqrt7+2*2^{{2/3}}7^{{5/6}})/3}}^{{1/2}}{{(sqrt(147+a)-sqrt(111+a))/6}}^{{1/2}}, {a_printed}")),
        single("S15", 3, (49, 1), false, &s15(A_PRINTED),
            &format!("r_{{3,49}}=(sqrt(147+a)+sqrt(111+a))/6, {a_printed}")),
        single("S79", 7, (9, 1), false,
            "(sqrt(34 + 6*sqrt(21)) + sqrt(18 + 6*sqrt(21)))/4",
            "r_{7,9}=(sqrt(34+6sqrt21)+sqrt(18+6sqrt21))/4"),
        s79p("2^(-3/8)*(sqrt(11 + sqrt(21)) + sqrt(3 + sqrt(21)))^(1/4)"),
        pair("P2", 7, (6, 1), (2, 3), false, "(sqrt(7) + sqrt(3))/2",
            "r_{7,6}r_{7,2/3}=(sqrt7+sqrt3)/2"),
        pair("P4", 7, (6, 1), (3, 2), false, "sqrt(3) + sqrt(2)",
            "r_{7,6}r_{7,3/2}=sqrt3+sqrt2"),
        pair("P6", 7, (6, 1), (2, 3), true, "(5 + sqrt(21))*(2 - sqrt(3))/2",
            "r'_{7,6}r'_{7,2/3}=(5+sqrt21)(2-sqrt3)/2"),
        pair("P8", 7, (6, 1), (3, 2), true, "sqrt((sqrt(7) - sqrt(6))*(5 + 2*sqrt(6)))",
            "r'_{7,6}r'_{7,3/2}=sqrt((sqrt7-sqrt6)(5+2sqrt6))"),
        pair("P10", 3, (14, 1), (7, 2), false, "sqrt(3) + sqrt(2)",
            "r_{3,14}r_{3,7/2}=sqrt3+sqrt2"),
        pair("P12", 3, (14, 1), (2, 7), false, "(sqrt(7) + 2*sqrt(2))^(1/3)",
            "r_{3,14}r_{3,2/7}=(sqrt7+2sqrt2)^{1/3}"),
        pair("P15", 3, (21, 1), (7, 3), false,
            "(sqrt(358 + 78*sqrt(21)) + sqrt(342 + 78*sqrt(21)))^(1/2)/2",
            "r_{3,21}r_{3,7/3}=(sqrt(358+78sqrt21)+sqrt(342+78sqrt21))^{1/2}/2"),
        pair("P17", 3, (21, 1), (3, 7), false,
            "(100*sqrt(7) + 200*sqrt(3))^(1/3)*(342 + 78*sqrt(21))^(1/6)/10",
            "r_{3,21}r_{3,3/7}=(100sqrt7+200sqrt3)^{1/3}(342+78sqrt21)^{1/6}/10"),
        pair("P21", 3, (21, 1), (7, 3), true,
            "2^(-3/4)*(sqrt(11 + sqrt(21)) + sqrt(3 + sqrt(21)))^(1/2)",
            "r'_{3,21}r'_{3,7/3}=2^{-3/4}{sqrt(11+sqrt21)+sqrt(3+sqrt21)}^{1/2}"),
        pair("P29", 3, (21, 1), (3, 7), true, "2^(-1/3)*(18 + 6*sqrt(21))^(1/6)",
            "r'_{3,21}r'_{3,3/7}=2^{-1/3}(18+6sqrt21)^{1/6}"),
        cf("P23", &[(2, (21, 1), false, 1), (7, (6, 1), false, -1), (3, (2, 7), false, -1)], "1",
            "r_{2,21}=r_{7,6}r_{3,2/7}"),
        pair("P25", 7, (21, 1), (7, 3), false, S25,
            "r_{7,21}r_{7,7/3}=(7*2^{1/3}7^{1/6}+5sqrt7+2*2^{2/3}7^{5/6})/3"),
        pair("P27", 7, (21, 1), (3, 7), false, &s15(A_PRINTED),
            &format!("r_{{7,21}}r_{{7,3/7}}=(sqrt(147+a)+sqrt(111+a))/6, {a_printed}")),
        p28(&[(3, (49, 1), false, 1), (7, (7, 3), false, -1), (7, (1, 21), false, -1)],
            "r_{3,49}=r_{7,7/3}r_{7,1/21}"),
        cf("P18", &[(7, (9, 1), false, 1), (3, (21, 1), false, -1), (3, (7, 3), false, -1)], "1",
            "r_{7,9}=r_{3,21}r_{3,7/3}"),
        cf("P30", &[(7, (9, 1), true, 1), (3, (21, 1), true, -1), (3, (7, 3), true, -1)], "1",
            "r'_{7,9}=r'_{3,21}r'_{3,7/3}"),
    ]
}

pub(super) fn factor_tests() -> Vec<FactorTestDef> {
    let w12 = || {
        bind(vec![
            ("w1", Binding::Quotient(wr_spec(1))),
            ("w2", Binding::Quotient(wr_spec(2))),
        ])
    };
    vec![
        FactorTestDef {
            id: "F-W2-FACTORS".into(),
            bindings: bind(vec![
                ("u", Binding::Quotient(u_spec())),
                ("v", Binding::Quotient(u_spec().at_power(2))),
            ]),
            factors: vec![ex("u^3 - 2*u^2*v - u*v - 7*u^2*v^2 - 2*u*v^2 + v^3")],
            expected_vanishing: vec![1],
            expected_nonvanishing: vec![],
            printed_form: "(u^3-2u^2v-uv-7u^2v^2-2uv^2+v^3)(1+47uvH(q))=0, v=u(q^2)".into(),
        },
        FactorTestDef {
            id: "F-U2-FACTORS".into(),
            bindings: w12(),
            factors: vec![
                ex("w1^6*w2^6 + 1 - w1^4*w2^2 + 4*w1^2*w2^2 + 4*w1^4*w2^4 - w1^2*w2^4"),
                ex("w1^6 + 4*w1^4*w2^2 - w1^4*w2^4 + 4*w1^2*w2^4 - w1^2*w2^2 + w2^6"),
            ],
            expected_vanishing: vec![2],
            expected_nonvanishing: vec![1],
            printed_form: "(w_1^6w_2^6+1-w_1^4w_2^2+4w_1^2w_2^2+4w_1^4w_2^4-w_1^2w_2^4)\
                (w_1^6+4w_1^4w_2^2-w_1^4w_2^4+4w_1^2w_2^4-w_1^2w_2^2+w_2^6)(...)=0"
                .into(),
        },
        FactorTestDef {
            id: "F-CONTROL".into(),
            bindings: w12(),
            factors: vec![ex("w1^6 + w2^6")],
            expected_vanishing: vec![],
            expected_nonvanishing: vec![1],
            printed_form: "w_1^6+w_2^6 (control, leading terms cannot cancel)".into(),
        },
    ]
}

pub(super) fn errata() -> Vec<Erratum> {
    let fixed_u = |indices: &[u32]| -> Vec<(String, Binding)> {
        indices
            .iter()
            .map(|&r| (format!("u{r}"), Binding::Quotient(ur_spec(r))))
            .collect()
    };
    let mut w5_fixed = w5(W5_RHS_CORRECTED, vec![], "");
    w5_fixed.bindings.splice(0..0, fixed_u(&[1, 5]));
    let mut w7_fixed = w7("u7^3/u1^3", vec![], "");
    w7_fixed.bindings = fixed_u(&[1, 7]);
    let entry = |id: &str, note: &str, corrected: Correction| Erratum {
        id: id.into(),
        note: note.into(),
        corrected,
    };
    let retag = |mut d: ClosedFormDef, printed: &str| {
        d.printed_form = printed.into();
        Correction::ClosedForm(d)
    };
    let a_fixed = "a=24*7^{2/3}2^{1/3}+39*7^{1/3}2^{2/3}";
    vec![
        entry(
            "W5",
            "with u_r = f_r f_3r/(q^r f_7r f_21r) the (sqrtP^3+7^3/sqrtP^3) term needs the factor \
             (sqrtQ+1/sqrtQ)",
            Correction::Identity(IdentityDef {
                printed_form: "Q^3+1/Q^3=30(Q^2+1/Q^2)+215(Q+1/Q)+(P^2+7^4/P^2)+270+15(P+7^2/P)(sqrtQ+1/sqrtQ)^2\
                    +5(sqrtP^3+7^3/sqrtP^3)(sqrtQ+1/sqrtQ)+5(sqrtP+7/sqrtP)[6(sqrtQ^3+1/sqrtQ^3)+19(sqrtQ+1/sqrtQ)]"
                    .into(),
                ..w5_fixed
            }),
        ),
        entry(
            "W7",
            "with u_r = f_r f_3r/(q^r f_7r f_21r) the right-hand side is correct and the left-hand \
             side is u_7^3/u_1^3",
            Correction::Identity(IdentityDef {
                printed_form: "u_7^3/u_1^3=161u_7^2/u_1+...+343u_1/u_7".into(),
                ..w7_fixed
            }),
        ),
        entry(
            "S13",
            "the coefficients 21 and 37 in a should be 24 and 39",
            retag(single("S13", 7, (21, 1), false, &s13(A_CORRECTED), ""), a_fixed),
        ),
        entry(
            "S14",
            "the coefficients 21 and 37 in a should be 24 and 39",
            retag(single("S14", 7, (7, 3), false, &s14(A_CORRECTED), ""), a_fixed),
        ),
        entry(
            "S15",
            "the coefficients 21 and 37 in a should be 24 and 39",
            retag(single("S15", 3, (49, 1), false, &s15(A_CORRECTED), ""), a_fixed),
        ),
        entry(
            "P27",
            "the coefficients 21 and 37 in a should be 24 and 39",
            retag(pair("P27", 7, (21, 1), (3, 7), false, &s15(A_CORRECTED), ""), a_fixed),
        ),
        entry(
            "S79P",
            "the printed value is the square root of r'_{7,9}; exponents should be -3/4 and 1/2",
            retag(
                s79p("2^(-3/4)*(sqrt(11 + sqrt(21)) + sqrt(3 + sqrt(21)))^(1/2)"),
                "r'_{7,9}=2^{-3/4}{sqrt(11+sqrt21)+sqrt(3+sqrt21)}^{1/2}",
            ),
        ),
        entry(
            "P28",
            "r_{3,49} equals r_{7,21}r_{7,3/7}, not r_{7,7/3}r_{7,1/21}",
            retag(
                p28(&[(3, (49, 1), false, 1), (7, (21, 1), false, -1), (7, (3, 7), false, -1)], ""),
                "r_{3,49}=r_{7,21}r_{7,3/7}",
            ),
        ),
        entry(
            "R7R9P",
            "the q -> -q substitution gives (b/a)^2 + 3 + (a/b)^2 on the right",
            Correction::Identity(IdentityDef {
                printed_form: "sqrt7(r'_{7,n}r'_{7,9n}+1/(r'_{7,n}r'_{7,9n}))=(r'_{7,9n}/r'_{7,n})^2+3+(r'_{7,n}/r'_{7,9n})^2"
                    .into(),
                ..r7r9p("(b/a)^2 + 3 + (a/b)^2")
            }),
        ),
    ]
}
