//! Stirling matrices of both kinds: the bidiagonal factorization of the
//! first kind, triangular total positivity and the shift identity of the
//! second kind, and total positivity of the symmetrized products.
//!
//! ```bash
//! cargo run -p totpos --example stirling
//! ```

use totpos::factor::{seb_compose, stirling_first_seb_closed};
use totpos::families::{stirling_matrix, symmetrized_stirling, StirlingKind};
use totpos::io::{matrix_to_pretty, report_to_pretty, seb_to_pretty, MatrixData};
use totpos::positivity::{is_tn, is_tp, is_triangular_tp, tshift_identity_check, TpMode};

fn main() {
    let n = 5;
    let s1 = stirling_matrix(StirlingKind::First, n);
    let s2 = stirling_matrix(StirlingKind::Second, n);
    println!("unsigned Stirling matrix of the first kind, n = {n}:");
    print!("{}", matrix_to_pretty(&MatrixData::Exact(s1.clone())));
    println!("Stirling matrix of the second kind:");
    print!("{}", matrix_to_pretty(&MatrixData::Exact(s2.clone())));

    // lower bidiagonal factors only, unit diagonal, nothing above
    let f = stirling_first_seb_closed(n);
    println!("\nbidiagonal factorization of the first kind:");
    print!("{}", seb_to_pretty(&f));
    println!("composes back exactly: {}", seb_compose(&f).unwrap() == s1);

    // both kinds are totally nonnegative (zeros above the diagonal rule
    // out strict total positivity)
    println!("\nTN check, first kind:  {}", report_to_pretty(&is_tn(&s1).unwrap()));
    println!("TN check, second kind: {}", report_to_pretty(&is_tn(&s2).unwrap()));

    // the second kind is triangular totally positive, and its initial-column
    // minors shift by a factor of p!
    println!("triangular TP, second kind: {}", report_to_pretty(&is_triangular_tp(&s2).unwrap()));
    println!("shift identity, n = {n}: {}", report_to_pretty(&tshift_identity_check(n).unwrap()));

    // the symmetrized products are fully totally positive
    for kind in [StirlingKind::First, StirlingKind::Second] {
        let sym = symmetrized_stirling(kind, n);
        let report = is_tp(&sym, TpMode::AllMinors).unwrap();
        println!("symmetrized {kind:?} TP: {}", report_to_pretty(&report));
    }
}
