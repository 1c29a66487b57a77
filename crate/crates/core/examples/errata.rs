//! Lists the catalogued errata and checks each corrected form.
//!
//! `cargo run --release --example errata`

use modeq21::catalog::{list_errata, Correction, Mode};
use modeq21::numeric::{check_closed_form_def, verify_numeric_definition};
use modeq21::verifier::verify_definition;
use modeq21::{Exponent, Rational};

fn main() {
    for erratum in list_errata() {
        let status = match &erratum.corrected {
            Correction::Identity(def) if def.mode == Mode::Series => {
                verify_definition(def, Exponent::from_int(60)).map(|r| r.status)
            }
            Correction::Identity(def) => {
                verify_numeric_definition(def, &Rational::from_integer(1.into()), 50).map(|r| r.status)
            }
            Correction::ClosedForm(def) => check_closed_form_def(def, 50).map(|r| r.status),
        };
        match status {
            Ok(s) => println!("{:<6} corrected form: {s}\n       {}", erratum.id, erratum.note),
            Err(e) => println!("{:<6} error: {e}", erratum.id),
        }
    }
}
