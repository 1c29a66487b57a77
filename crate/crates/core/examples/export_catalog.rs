//! Dumps the built-in catalog as JSON and prints a short summary.
//!
//! `cargo run --release --example export_catalog > catalog.json`

use modeq21::catalog::{export_json, list_closed_forms, list_errata, list_factor_tests, list_identities};

fn main() {
    eprintln!(
        "{} identities, {} closed forms, {} factor tests, {} errata",
        list_identities().len(),
        list_closed_forms().len(),
        list_factor_tests().len(),
        list_errata().len()
    );
    println!("{}", serde_json::to_string_pretty(&export_json()).unwrap());
}
