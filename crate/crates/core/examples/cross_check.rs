//! Sums truncated q-expansions at a real point and compares them with the
//! product forms, inside a certified tail bound.
//!
//! `cargo run --release --example cross_check -- [order] [digits]`

use modeq21::numeric::cross_check_series_vs_numeric;
use modeq21::{Exponent, Rational};

fn main() {
    let mut args = std::env::args().skip(1);
    let order = args.next().and_then(|a| a.parse().ok()).unwrap_or(30);
    let digits = args.next().and_then(|a| a.parse().ok()).unwrap_or(40);
    let q = Rational::new(3.into(), 100.into());
    for symbol in ["u", "w1", "r", "s", "u3", "w2"] {
        match cross_check_series_vs_numeric(symbol, &q, Exponent::from_int(order), digits) {
            Ok(r) => println!(
                "{:<3} q={} {:<5} series {}  |diff| {}  bound {}",
                r.symbol,
                r.q,
                r.status,
                r.series_value.to_fixed(25),
                r.difference.to_sci(3),
                r.combined_bound.to_sci(3)
            ),
            Err(e) => println!("{symbol}: error: {e}"),
        }
    }
    let slow = Rational::new(9.into(), 10.into());
    match cross_check_series_vs_numeric("u", &slow, Exponent::from_int(10), digits) {
        Ok(r) => println!("u   q=9/10 {}", r.status),
        Err(e) => println!("u   q=9/10 refused: {e}"),
    }
}
