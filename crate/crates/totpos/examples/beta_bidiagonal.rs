//! Successive elementary bidiagonal (Neville) factorization of the beta
//! matrix: the algorithmic factors agree with the grouped closed form
//! `(L_n(n/(n-1)) ⋯ L_2(2)) ⋯ (L_n(n/(n-1))) · diag(1..n) · (mirror)`,
//! and the composed lower half is the binomial matrix.
//!
//! ```bash
//! cargo run -p totpos --example beta_bidiagonal
//! ```

use totpos::factor::{beta_seb_closed, neville_seb, seb_compose, y_k};
use totpos::families::beta_matrix;
use totpos::io::{matrix_to_pretty, seb_to_pretty, MatrixData};
use totpos::matrix::identity_exact;

fn main() {
    let n = 4;
    let b = beta_matrix(n);

    let algo = neville_seb(&b).unwrap();
    println!("Neville factorization of beta({n}):");
    print!("{}", seb_to_pretty(&algo));

    let closed = beta_seb_closed(n);
    println!("matches the closed form factor for factor: {}", algo == closed);
    println!("composes back exactly: {}", seb_compose(&algo).unwrap() == b);

    // the product of all lower factors alone is the binomial matrix [C(i,j)]
    let mut lower = identity_exact(n);
    for f in &closed.lower {
        lower = lower.mul(&f.as_matrix(n).unwrap()).unwrap();
    }
    println!("\nproduct of the lower factors:");
    print!("{}", matrix_to_pretty(&MatrixData::Exact(lower)));

    // the grouped products build up through the intermediate matrices Y_k
    for k in 1..n {
        let y = y_k(n, k).unwrap();
        println!("\nY_{k}:");
        print!("{}", matrix_to_pretty(&MatrixData::Exact(y)));
    }
}
