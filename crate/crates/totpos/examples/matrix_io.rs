//! Matrix wire formats: JSON with scalar kind and offset metadata, CSV with
//! the same entry encodings, and strict parsing with located errors.
//!
//! ```bash
//! cargo run -p totpos --example matrix_io
//! ```

use totpos::families::{bell_matrix, cauchy_matrix};
use totpos::io::{matrix_from_csv, matrix_from_json, matrix_to_csv, matrix_to_json, MatrixData};
use totpos::matrix::IndexOffset;

fn main() {
    // JSON round trip carries rows, cols, scalar kind and index offset
    let m = MatrixData::Exact(cauchy_matrix(3));
    let text = matrix_to_json(&m);
    println!("cauchy(3) as JSON:\n{text}\n");
    let back = matrix_from_json(&text).unwrap();
    match (&m, &back) {
        (MatrixData::Exact(a), MatrixData::Exact(b)) => {
            println!("round trip exact: {}", a == b);
        }
        _ => unreachable!(),
    }

    // CSV uses the same entry encodings, one row per line
    let csv = matrix_to_csv(&m);
    println!("\nthe same matrix as CSV:\n{csv}");

    // bare integers parse as rationals; Bell entries reproduce bell_matrix(3)
    let text = "1,1,2\n1,2,5\n2,5,15\n";
    match matrix_from_csv(text, None, IndexOffset::Zero, 128).unwrap() {
        MatrixData::Exact(b) => {
            println!("CSV of Bell numbers equals bell_matrix(3): {}", b.same_entries(&bell_matrix(3)));
        }
        _ => unreachable!(),
    }

    // parse failures carry the 1-based cell position
    let bad = "1,2\n3,2//3\n";
    match matrix_from_csv(bad, None, IndexOffset::Zero, 128) {
        Err(e) => println!("\nmalformed CSV rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    // mixed scalar kinds in one file are rejected too
    let mixed = "1/2,2.5\n1,1\n";
    match matrix_from_csv(mixed, None, IndexOffset::Zero, 128) {
        Err(e) => println!("mixed kinds rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
