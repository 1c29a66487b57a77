//! Decides which factor of each factored candidate vanishes identically.
//!
//! `cargo run --release --example factor_vanish -- [order]`

use modeq21::catalog::list_factor_tests;
use modeq21::verifier::{factor_definition, Status};
use modeq21::Exponent;

fn main() {
    let order = Exponent::from_int(std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(40));
    for test in list_factor_tests() {
        let report = factor_definition(test, order).expect("factor test");
        println!("{} ({}): {}", test.id, test.printed_form, report.status());
        for (f, expr) in report.factors.iter().zip(&test.factors) {
            let word = match f.status {
                Status::Pass => "vanishes".to_string(),
                _ => match &f.first_nonzero {
                    Some((e, c)) => format!("nonzero, first term {c} q^{{{e}}}"),
                    None => "undecided".to_string(),
                },
            };
            println!("  factor {} = {expr}: {word}", f.index);
        }
    }
}
