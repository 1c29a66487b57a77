use modeq21::qseries::Exponent;
use modeq21::verifier::verify_all;

fn main() {
    let order: i64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(60);
    let started = std::time::Instant::now();
    for r in verify_all(Exponent::from_int(order)) {
        println!(
            "{:<6} {:<13} {:>8.2?} {:?} {:?} {:?} {:?}",
            r.id, r.status, r.elapsed, r.first_nonzero, r.resolution, r.candidates, r.note
        );
    }
    println!("total {:.2?}", started.elapsed());
}
