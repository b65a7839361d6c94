//! Tour of the beta matrix `[1/β(i,j)]`: construction, exact determinant,
//! closed-form inverse, and the radical-free Cholesky congruence.
//!
//! ```bash
//! cargo run -p totpos --example beta_matrix
//! ```

use totpos::factor::{bareiss_det, beta_inverse_closed, beta_ldl_closed, exact_inverse, sym_congruence_ldl};
use totpos::families::{beta_matrix, cauchy_matrix, pascal_matrix};
use totpos::io::{matrix_to_pretty, MatrixData};
use totpos::numerics::format_rational_plain;

fn main() {
    let n = 5;
    let b = beta_matrix(n);
    println!("beta matrix, n = {n}:");
    print!("{}", matrix_to_pretty(&MatrixData::Exact(b.clone())));

    // the entries factor through the Cauchy and shifted Pascal matrices
    let shifted_pascal = pascal_matrix(n).delete_rc(1, 1).unwrap();
    let rebuilt = cauchy_matrix(n).schur_product(&shifted_pascal).unwrap();
    println!("\nequals Cauchy ∘ shifted-Pascal entrywise: {}", rebuilt.same_entries(&b));

    // determinant is n!, exactly
    let det = bareiss_det(&b).unwrap();
    println!("det = {} (= {n}!)", format_rational_plain(&det));

    // the closed-form inverse has entries (-1)^(i+j) Σ C(k,i)C(k,j)/k
    let closed = beta_inverse_closed(n);
    let inv = exact_inverse(&b).unwrap();
    println!("closed-form inverse matches Gauss-Jordan: {}", inv.same_entries(&closed));
    println!("\ninverse:");
    print!("{}", matrix_to_pretty(&MatrixData::Exact(inv)));

    // A = Z·diag(d)·Zᵀ with Z the binomial matrix and d = (1..n);
    // the textbook Cholesky factor is Z·diag(√d)
    let closed = beta_ldl_closed(n);
    let algo = sym_congruence_ldl(&b).unwrap();
    println!(
        "\ncongruence: Z = [C(i,j)] and d = (1..{n}): {}",
        algo.z.same_entries(&closed.z) && algo.diagonal == closed.diagonal
    );
    println!("Z:");
    print!("{}", matrix_to_pretty(&MatrixData::Exact(closed.z)));
    let d: Vec<String> = closed.diagonal.iter().map(format_rational_plain).collect();
    println!("d = ({})", d.join(", "));
}
