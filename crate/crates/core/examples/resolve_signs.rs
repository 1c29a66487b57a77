//! Resolves the sign and reading choices of W3 at increasing orders.
//!
//! `cargo run --release --example resolve_signs`

use modeq21::catalog::get_identity;
use modeq21::verifier::resolve_signs;
use modeq21::Exponent;

fn main() {
    let ident = get_identity("W3").unwrap();
    println!("W3: {}", ident.printed_form);
    for slot in &ident.slots {
        println!("  slot: {}", slot.description);
    }
    for order in [-6, -5, -4, 2, 20, 60] {
        let (choice, report) = resolve_signs("W3", Exponent::from_int(order)).unwrap();
        println!("order {order:>3}: {} choice {:?}", report.status, choice);
        for c in &report.candidates {
            println!("           candidate {}", c.join("; "));
        }
        if let Some(res) = &report.resolution {
            println!("           resolved {}", res.join("; "));
        }
    }
}
