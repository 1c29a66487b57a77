//! Prints the q-expansions of the named quotients and a derived expression.
//!
//! `cargo run --release --example expand_series -- [order]`

use modeq21::catalog::{build_symbol_series, expr_to_series, named_symbol, Binding};
use modeq21::{Exponent, Expr};

fn main() {
    let order = Exponent::from_int(std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(12));
    for name in ["f1", "fplus1", "u", "w", "r", "s", "u3", "w2"] {
        let spec = named_symbol(name).expect("built-in symbol");
        let series = build_symbol_series(&spec, order).expect("expansion");
        println!("{name:<7} = {spec}\n        = {series:#}");
    }

    let bindings = vec![
        ("w1".to_string(), Binding::Quotient(named_symbol("w1").unwrap())),
        ("w2".to_string(), Binding::Quotient(named_symbol("w2").unwrap())),
    ];
    let e = Expr::parse("w1*w2 + 1/(w1*w2)").unwrap();
    let series = expr_to_series(&e, &bindings, order, &[]).expect("expansion");
    println!("{e} = {series:#}");
}
