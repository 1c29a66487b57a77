//! Checks the numeric-mode identities between `r`-parameters at several `n`.
//!
//! `cargo run --release --example numeric_identities -- [digits]`

use modeq21::catalog::{list_identities, Mode};
use modeq21::numeric::verify_numeric_definition;
use modeq21::Rational;

fn main() {
    let digits = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(50);
    let points = [(1, 2), (1, 1), (2, 1), (3, 1)];
    for def in list_identities().iter().filter(|d| d.mode == Mode::Numeric) {
        for (p, q) in points {
            let n = Rational::new(p.into(), q.into());
            match verify_numeric_definition(def, &n, digits) {
                Ok(r) => println!(
                    "{:<7} n={:<4} {:<5} lhs {}  |lhs - rhs| {}",
                    r.id,
                    r.n.to_string(),
                    r.status,
                    r.lhs.to_fixed(15),
                    r.residual.to_sci(3)
                ),
                Err(e) => println!("{} n={n}: error: {e}", def.id),
            }
        }
    }
}
