//! Evaluates r_{k,n} and r'_{k,n} with certified digit counts.
//!
//! `cargo run --release --example eval_r -- [digits]`

use modeq21::numeric::{compute_r, compute_r_prime, eval_f_minus_at, eval_f_plus_at};
use modeq21::Rational;

fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

fn main() {
    let digits = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(50);
    let half = rat(1, 2);
    let fm = eval_f_minus_at(&half, 1, digits).unwrap();
    let fp = eval_f_plus_at(&half, 1, digits).unwrap();
    println!("f(-1/2) = {}  ({} terms)", fm.value.to_fixed(digits as usize), fm.terms);
    println!("f(1/2)  = {}  ({} terms)", fp.value.to_fixed(digits as usize), fp.terms);
    for (k, n) in [(rat(7, 1), rat(6, 1)), (rat(3, 1), rat(49, 1)), (rat(7, 1), rat(7, 3)), (rat(2, 7), rat(1, 1))] {
        let r = compute_r(&k, &n, digits).unwrap();
        let rp = compute_r_prime(&k, &n, digits).unwrap();
        println!(
            "k={k} n={n}: r = {} [{} digits], r' = {} [{} digits]",
            r.value.to_fixed(30),
            r.certified_digits(),
            rp.value.to_fixed(30),
            rp.certified_digits()
        );
    }
}
