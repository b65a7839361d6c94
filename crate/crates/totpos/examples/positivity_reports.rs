//! Witness-carrying check reports across a small corpus, including the JSON
//! wire form and what a failing witness looks like.
//!
//! ```bash
//! cargo run -p totpos --example positivity_reports
//! ```

use totpos::families::{bell_matrix, beta_matrix, pascal_matrix, stirling_matrix, StirlingKind};
use totpos::io::{report_to_json, report_to_pretty};
use totpos::matrix::{IndexOffset, Matrix};
use totpos::numerics::Rational;
use totpos::positivity::{is_pd_exact, is_psd_exact, is_tn, is_tp, TpMode};

fn main() {
    println!("## passes\n");
    for (name, report) in [
        ("beta(5) positive definite", is_pd_exact(&beta_matrix(5)).unwrap()),
        ("pascal(4) totally positive", is_tp(&pascal_matrix(4), TpMode::AllMinors).unwrap()),
        ("bell(5) totally positive (solid minors)", is_tp(&bell_matrix(5), TpMode::SolidMinors).unwrap()),
        ("stirling1(5) totally nonnegative", is_tn(&stirling_matrix(StirlingKind::First, 5)).unwrap()),
    ] {
        print!("{name}: {}", report_to_pretty(&report));
    }

    // failing checks carry the offending index sets and minor value
    println!("\n## failures with witnesses\n");
    let not_tn = Matrix::from_rows(
        vec![
            vec![Rational::from_integer(1.into()), Rational::from_integer(2.into())],
            vec![Rational::from_integer(3.into()), Rational::from_integer(1.into())],
        ],
        IndexOffset::One,
    )
    .unwrap();
    let report = is_tn(&not_tn).unwrap();
    print!("[[1,2],[3,1]] TN: {}", report_to_pretty(&report));

    let not_psd = Matrix::from_rows(
        vec![
            vec![Rational::from_integer(1.into()), Rational::from_integer(2.into())],
            vec![Rational::from_integer(2.into()), Rational::from_integer(1.into())],
        ],
        IndexOffset::One,
    )
    .unwrap();
    let report = is_psd_exact(&not_psd).unwrap();
    print!("[[1,2],[2,1]] PSD: {}", report_to_pretty(&report));

    // triangular matrices fail strict total positivity at the first
    // above-diagonal zero; the witness names it in the family's own labels
    let report = is_tp(&stirling_matrix(StirlingKind::First, 3), TpMode::AllMinors).unwrap();
    print!("stirling1(3) TP: {}", report_to_pretty(&report));

    println!("\n## the same report as JSON\n");
    println!("{}", report_to_json(&report));
}
