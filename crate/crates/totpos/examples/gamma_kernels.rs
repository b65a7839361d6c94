//! High-precision gamma values and the gamma-kernel matrices
//! `[Γ(λ_i + μ_j)]` and `[1/β(λ_i, μ_j)]` at real index sets, with
//! certified-positivity evidence for their minors.
//!
//! ```bash
//! cargo run -p totpos --example gamma_kernels
//! ```

use totpos::families::{beta_recip_matrix, gamma_matrix, RealIndexSet};
use totpos::io::{matrix_to_pretty, report_to_pretty, MatrixData};
use totpos::numerics::{beta_recip_hp, gamma_hp, HpReal};
use totpos::positivity::{hp_solid_minors_positive, is_pd_hp};

fn main() {
    let p = 128;

    // a few point values
    for x in ["0.5", "1", "2.5", "5"] {
        let v = gamma_hp(&HpReal::parse_decimal(x, p).unwrap(), p).unwrap();
        println!("Γ({x}) = {v}");
    }
    let half = HpReal::parse_decimal("0.5", p).unwrap();
    println!("1/β(1/2, 1/2) = {} (= 1/π)", beta_recip_hp(&half, &half, p).unwrap());

    // gamma matrix on strictly increasing real indices
    let lambda = RealIndexSet::parse("0.5,1.25,2.5,4", p).unwrap();
    let g = gamma_matrix(&lambda, &lambda, p).unwrap();
    println!("\n[Γ(λ_i+λ_j)] for λ = (0.5, 1.25, 2.5, 4):");
    print!("{}", matrix_to_pretty(&MatrixData::Real(g.clone())));

    // every solid minor certified positive at 128 bits
    println!("solid minors: {}", report_to_pretty(&hp_solid_minors_positive(&g, 64).unwrap()));
    println!("leading minors: {}", report_to_pretty(&is_pd_hp(&g, 64).unwrap()));

    // the reciprocal-beta matrix is the diagonal congruence of the gamma one
    let b = beta_recip_matrix(&lambda, &lambda, p).unwrap();
    println!("[1/β(λ_i,λ_j)]:");
    print!("{}", matrix_to_pretty(&MatrixData::Real(b.clone())));
    println!("leading minors: {}", report_to_pretty(&is_pd_hp(&b, 64).unwrap()));
}
