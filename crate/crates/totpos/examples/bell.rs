//! The Bell–Hankel matrix `[𝔴(i+j)]`: Cholesky through the Bell triangle,
//! total positivity through the Hankel shortcut, and the infinite-
//! divisibility boundary at order 4 — the order-5 matrix has a negative
//! quarter-power determinant.
//!
//! ```bash
//! cargo run -p totpos --example bell
//! ```

use totpos::factor::bell_ldl_closed;
use totpos::families::{bell_matrix, delta_log, hadamard_power_real};
use totpos::io::{matrix_to_pretty, report_to_pretty, MatrixData};
use totpos::numerics::Rational;
use totpos::positivity::{hankel_tp_via_pd, hp_det, infdiv_horn, infdiv_sample};

fn main() {
    let b4 = bell_matrix(4);
    println!("Bell matrix, n = 4:");
    print!("{}", matrix_to_pretty(&MatrixData::Exact(b4.clone())));

    // Cholesky through the Bell triangle: X·diag(0!,…,3!)·Xᵀ
    let c = bell_ldl_closed(4);
    println!("\nBell triangle X (congruence factor):");
    print!("{}", matrix_to_pretty(&MatrixData::Exact(c.z.clone())));
    println!("X·diag(i!)·Xᵀ reproduces the matrix: {}", c.compose() == b4);

    // Hankel + positive definite (twice) ⇒ totally positive
    println!("\nTP via the Hankel shortcut, n = 8: {}",
        report_to_pretty(&hankel_tp_via_pd(&bell_matrix(8)).unwrap()));

    // order 4 is infinitely divisible: Δ log 𝔅₄ is positive definite
    let d = delta_log(&b4, 128).unwrap();
    println!("Δ log of the order-4 matrix:");
    print!("{}", matrix_to_pretty(&MatrixData::Real(d)));
    println!("sufficient criterion: {}", report_to_pretty(&infdiv_horn(&b4, 128, 64).unwrap()));

    // order 5 is not: the quarter power has a negative determinant
    let quarter = Rational::new(1.into(), 4.into());
    let powered = hadamard_power_real(&bell_matrix(5), &quarter, 256).unwrap();
    let det = hp_det(&powered).unwrap();
    println!("\ndet(bell(5)^(1/4)) = {det}");
    let grid = vec![quarter, Rational::new(1.into(), 2.into())];
    let report = infdiv_sample(&bell_matrix(5), &grid, 128, 64).unwrap();
    println!("counterexample search: {}", report_to_pretty(&report));
}
