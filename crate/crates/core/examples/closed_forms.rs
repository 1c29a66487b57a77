//! Evaluates every catalogued closed form against its radical.
//!
//! `cargo run --release --example closed_forms -- [digits]`

use modeq21::numeric::check_all_closed_forms;

fn main() {
    let digits = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(60);
    for report in check_all_closed_forms(digits) {
        match report {
            Ok(r) => println!(
                "{:<6} {:<5} value {}  |diff| {}  bound {}",
                r.id,
                r.status,
                r.computed.to_fixed(20),
                r.difference.to_sci(3),
                r.error_bound.to_sci(3),
            ),
            Err(e) => println!("error: {e}"),
        }
    }
}
