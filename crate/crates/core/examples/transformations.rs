//! Checks the reciprocity, symmetry and quotient relations of `r_{k,n}`
//! and `r'_{k,n}` on a few parameter triples.
//!
//! `cargo run --release --example transformations -- [digits]`

use modeq21::numeric::check_transformations;
use modeq21::Rational;

fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

fn main() {
    let digits = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(50);
    let triples = [
        (rat(7, 1), rat(3, 2), rat(2, 3)),
        (rat(3, 1), rat(2, 1), rat(1, 2)),
        (rat(5, 1), rat(1, 3), rat(3, 1)),
    ];
    for (k, n, m) in &triples {
        match check_transformations(k, n, m, digits) {
            Ok(report) => {
                println!("k={k} n={n} m={m}: {}", report.status);
                for c in &report.checks {
                    println!("  {:<40} residual {}", c.name, c.residual.to_sci(3));
                }
            }
            Err(e) => println!("k={k} n={n} m={m}: error: {e}"),
        }
    }
}
