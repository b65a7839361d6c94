//! JSON and CSV wire formats for matrices, factorizations, and check
//! reports.
//!
//! Matrix JSON: `{ "rows", "cols", "scalar": "rational"|"real", "offset",
//! "data": [[...strings...]], "precision_bits"? }` with rational entries in
//! canonical `num/den` form and real entries as decimal strings. CSV carries
//! the same entry encodings, one matrix row per line. Reports and
//! factorizations carry a `"schema": 1` version field.

use crate::error::Error;
use crate::factor::{BidiagonalFactor, FactorSide, SebFactorization, SymCongruence};
use crate::matrix::{IndexOffset, Matrix};
use crate::numerics::{format_rational, format_rational_plain, parse_rational, HpReal, Rational};
use crate::positivity::{CheckReport, ReportScalar, Verdict, Witness};
use serde::{Deserialize, Serialize};

/// A matrix of either scalar kind, as it travels through files and the CLI.
#[derive(Debug, Clone)]
pub enum MatrixData {
    Exact(Matrix<Rational>),
    Real(Matrix<HpReal>),
}

impl MatrixData {
    pub fn rows(&self) -> usize {
        match self {
            MatrixData::Exact(m) => m.rows(),
            MatrixData::Real(m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            MatrixData::Exact(m) => m.cols(),
            MatrixData::Real(m) => m.cols(),
        }
    }

    pub fn offset(&self) -> IndexOffset {
        match self {
            MatrixData::Exact(m) => m.offset(),
            MatrixData::Real(m) => m.offset(),
        }
    }

    pub fn as_exact(&self) -> Result<&Matrix<Rational>, Error> {
        match self {
            MatrixData::Exact(m) => Ok(m),
            MatrixData::Real(_) => Err(Error::domain(
                "this operation needs an exact rational matrix",
            )),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixWire {
    rows: usize,
    cols: usize,
    scalar: String,
    offset: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    precision_bits: Option<u32>,
    data: Vec<Vec<String>>,
}

pub fn matrix_to_json(m: &MatrixData) -> String {
    let wire = match m {
        MatrixData::Exact(a) => MatrixWire {
            rows: a.rows(),
            cols: a.cols(),
            scalar: "rational".into(),
            offset: a.offset().base() as u8,
            precision_bits: None,
            data: (0..a.rows())
                .map(|i| a.row(i).iter().map(format_rational).collect())
                .collect(),
        },
        MatrixData::Real(a) => {
            let p = a.entries().map(HpReal::precision).max().unwrap_or(64);
            MatrixWire {
                rows: a.rows(),
                cols: a.cols(),
                scalar: "real".into(),
                offset: a.offset().base() as u8,
                precision_bits: Some(p),
                data: (0..a.rows())
                    .map(|i| a.row(i).iter().map(HpReal::to_decimal_string).collect())
                    .collect(),
            }
        }
    };
    serde_json::to_string_pretty(&wire).expect("serializable")
}

pub fn matrix_from_json(text: &str) -> Result<MatrixData, Error> {
    let wire: MatrixWire =
        serde_json::from_str(text).map_err(|e| Error::parse(format!("bad matrix JSON: {e}")))?;
    if wire.data.len() != wire.rows {
        return Err(Error::parse(format!(
            "declared {} rows but data has {}",
            wire.rows,
            wire.data.len()
        )));
    }
    let offset = IndexOffset::from_base(wire.offset)?;
    match wire.scalar.as_str() {
        "rational" => {
            let rows = parse_cells(&wire.data, wire.cols, |s| parse_rational(s))?;
            Ok(MatrixData::Exact(Matrix::from_rows(rows, offset)?))
        }
        "real" => {
            let p = wire.precision_bits.unwrap_or(128);
            let rows = parse_cells(&wire.data, wire.cols, |s| HpReal::parse_decimal(s, p))?;
            Ok(MatrixData::Real(Matrix::from_rows(rows, offset)?))
        }
        other => Err(Error::parse(format!("unknown scalar kind '{other}'"))),
    }
}

fn parse_cells<T>(
    data: &[Vec<String>],
    cols: usize,
    parse: impl Fn(&str) -> Result<T, Error>,
) -> Result<Vec<Vec<T>>, Error> {
    let mut out = Vec::with_capacity(data.len());
    for (i, row) in data.iter().enumerate() {
        if row.len() != cols {
            return Err(Error::parse(format!(
                "row {} has {} entries, expected {cols}",
                i + 1,
                row.len()
            )));
        }
        let mut parsed = Vec::with_capacity(row.len());
        for (j, cell) in row.iter().enumerate() {
            parsed.push(parse(cell).map_err(|e| match e {
                Error::Parse { msg, .. } => Error::parse_at(i + 1, j + 1, msg),
                other => other,
            })?);
        }
        out.push(parsed);
    }
    Ok(out)
}

pub fn matrix_to_csv(m: &MatrixData) -> String {
    let mut out = String::new();
    match m {
        MatrixData::Exact(a) => {
            for i in 0..a.rows() {
                let cells: Vec<String> = a.row(i).iter().map(format_rational).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
        MatrixData::Real(a) => {
            for i in 0..a.rows() {
                let cells: Vec<String> = a.row(i).iter().map(HpReal::to_decimal_string).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
    }
    out
}

/// Scalar kind selector for CSV ingestion, where the file carries no
/// metadata.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarKind {
    Rational,
    Real,
}

/// Parse CSV text. Without an explicit `kind`, the scalar kind is inferred:
/// `/` marks a rational, `.`/`e` marks a real, bare integers are neutral;
/// mixing marked kinds is rejected.
pub fn matrix_from_csv(
    text: &str,
    kind: Option<ScalarKind>,
    offset: IndexOffset,
    precision: u32,
) -> Result<MatrixData, Error> {
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    if lines.is_empty() {
        return Err(Error::parse("empty CSV"));
    }
    let cells: Vec<Vec<&str>> = lines.iter().map(|l| l.split(',').map(str::trim).collect()).collect();
    let cols = cells[0].len();
    let kind = match kind {
        Some(k) => k,
        None => {
            let mut saw_rational = false;
            let mut saw_real = false;
            for row in &cells {
                for cell in row {
                    if cell.contains('/') {
                        saw_rational = true;
                    } else if cell.contains(['.', 'e', 'E']) {
                        saw_real = true;
                    }
                }
            }
            match (saw_rational, saw_real) {
                (true, true) => {
                    return Err(Error::parse(
                        "mixed rational and real entries in one CSV matrix",
                    ))
                }
                (false, true) => ScalarKind::Real,
                _ => ScalarKind::Rational,
            }
        }
    };
    let string_rows: Vec<Vec<String>> = cells
        .iter()
        .map(|row| row.iter().map(|s| s.to_string()).collect())
        .collect();
    match kind {
        ScalarKind::Rational => {
            let rows = parse_cells(&string_rows, cols, |s| parse_rational(s))?;
            Ok(MatrixData::Exact(Matrix::from_rows(rows, offset)?))
        }
        ScalarKind::Real => {
            let rows = parse_cells(&string_rows, cols, |s| HpReal::parse_decimal(s, precision))?;
            Ok(MatrixData::Real(Matrix::from_rows(rows, offset)?))
        }
    }
}

/// Aligned, human-readable matrix block.
pub fn matrix_to_pretty(m: &MatrixData) -> String {
    let cells: Vec<Vec<String>> = match m {
        MatrixData::Exact(a) => (0..a.rows())
            .map(|i| a.row(i).iter().map(format_rational_plain).collect())
            .collect(),
        MatrixData::Real(a) => (0..a.rows())
            .map(|i| a.row(i).iter().map(HpReal::to_decimal_string).collect())
            .collect(),
    };
    let cols = m.cols();
    let mut widths = vec![0usize; cols];
    for row in &cells {
        for (j, c) in row.iter().enumerate() {
            widths[j] = widths[j].max(c.len());
        }
    }
    let mut out = String::new();
    for row in &cells {
        out.push('[');
        for (j, c) in row.iter().enumerate() {
            if j > 0 {
                out.push_str("  ");
            }
            out.push_str(&" ".repeat(widths[j] - c.len()));
            out.push_str(c);
        }
        out.push_str("]\n");
    }
    out
}

#[derive(Serialize)]
struct WitnessWire {
    rows: Vec<usize>,
    cols: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    stage: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    power: Option<String>,
}

#[derive(Serialize)]
struct ReportWire {
    schema: u32,
    verdict: String,
    method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessWire>,
    #[serde(skip_serializing_if = "Option::is_none")]
    precision_bits: Option<u32>,
}

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::Indeterminate => "indeterminate",
    }
}

fn witness_wire(w: &Witness) -> WitnessWire {
    WitnessWire {
        rows: w.rows.clone(),
        cols: w.cols.clone(),
        value: w.value.as_ref().map(|v| match v {
            ReportScalar::Exact(r) => format_rational_plain(r),
            ReportScalar::Real(x) => x.to_decimal_string(),
        }),
        stage: w.stage,
        power: w.power.as_ref().map(format_rational),
    }
}

pub fn report_to_json(r: &CheckReport) -> String {
    let wire = ReportWire {
        schema: 1,
        verdict: verdict_str(r.verdict).into(),
        method: r.method.clone(),
        witness: r.witness.as_ref().map(witness_wire),
        precision_bits: r.precision_bits,
    };
    serde_json::to_string_pretty(&wire).expect("serializable")
}

pub fn report_to_pretty(r: &CheckReport) -> String {
    let mut out = format!("verdict: {}  [method: {}]", verdict_str(r.verdict), r.method);
    if let Some(p) = r.precision_bits {
        out.push_str(&format!("  (precision {p} bits)"));
    }
    if let Some(w) = &r.witness {
        out.push('\n');
        out.push_str("witness:");
        if !w.rows.is_empty() {
            out.push_str(&format!(" rows {:?} cols {:?}", w.rows, w.cols));
        }
        if let Some(stage) = w.stage {
            out.push_str(&format!(" stage {stage}"));
        }
        if let Some(p) = &w.power {
            out.push_str(&format!(" power {}", format_rational_plain(p)));
        }
        if let Some(v) = &w.value {
            out.push_str(&format!(" value {v}"));
        }
    }
    out.push('\n');
    out
}

#[derive(Serialize)]
struct FactorWire {
    i: usize,
    param: String,
}

#[derive(Serialize)]
struct SebWire {
    schema: u32,
    size: usize,
    offset: u8,
    lower: Vec<FactorWire>,
    diag: Vec<String>,
    upper: Vec<FactorWire>,
}

pub fn seb_to_json(f: &SebFactorization) -> String {
    let factor = |b: &BidiagonalFactor| FactorWire {
        i: b.index,
        param: format_rational(&b.param),
    };
    let wire = SebWire {
        schema: 1,
        size: f.size,
        offset: f.offset.base() as u8,
        lower: f.lower.iter().map(factor).collect(),
        diag: f.diagonal.iter().map(format_rational).collect(),
        upper: f.upper.iter().map(factor).collect(),
    };
    serde_json::to_string_pretty(&wire).expect("serializable")
}

pub fn seb_to_pretty(f: &SebFactorization) -> String {
    let side = |b: &BidiagonalFactor| match b.side {
        FactorSide::Lower => format!("L_{}({})", b.index, format_rational_plain(&b.param)),
        FactorSide::Upper => format!("U_{}({})", b.index, format_rational_plain(&b.param)),
    };
    let lower: Vec<String> = f.lower.iter().map(side).collect();
    let upper: Vec<String> = f.upper.iter().map(side).collect();
    let diag: Vec<String> = f.diagonal.iter().map(format_rational_plain).collect();
    format!(
        "lower: {}\ndiag:  ({})\nupper: {}\n",
        if lower.is_empty() { "(none)".into() } else { lower.join(" ") },
        diag.join(", "),
        if upper.is_empty() { "(none)".into() } else { upper.join(" ") },
    )
}

/// `Z·diag(d)·Zᵀ` congruence serialized the same way as an SEB
/// factorization: Z is itself unrolled into its Neville lower factors and
/// mirrored on the upper side, so composing the output reproduces A.
pub fn congruence_to_seb(c: &SymCongruence) -> Result<SebFactorization, Error> {
    let n = c.z.rows();
    let f = crate::factor::neville_seb(&c.z)?;
    // Z is unit lower triangular, so its own factorization has a unit
    // diagonal and parameter-free upper side.
    debug_assert!(f.diagonal.iter().all(num_traits::One::is_one));
    let lower = f.lower;
    let upper: Vec<BidiagonalFactor> = lower.iter().rev().map(BidiagonalFactor::mirrored).collect();
    Ok(SebFactorization {
        size: n,
        offset: c.z.offset(),
        lower,
        diagonal: c.diagonal.clone(),
        upper,
    })
}

pub fn congruence_to_pretty(c: &SymCongruence) -> String {
    format!(
        "Z (unit lower triangular):\n{}\ndiag: ({})\n",
        matrix_to_pretty(&MatrixData::Exact(c.z.clone())),
        c.diagonal
            .iter()
            .map(format_rational_plain)
            .collect::<Vec<_>>()
            .join(", ")
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::{bell_ldl_closed, beta_seb_closed, seb_compose, sym_congruence_ldl};
    use crate::families::{bell_matrix, beta_matrix, cauchy_matrix};

    #[test]
    fn json_roundtrip_exact() {
        let m = MatrixData::Exact(beta_matrix(3));
        let text = matrix_to_json(&m);
        let back = matrix_from_json(&text).unwrap();
        match back {
            MatrixData::Exact(b) => assert_eq!(b, beta_matrix(3)),
            _ => panic!("kind changed"),
        }
    }

    #[test]
    fn json_roundtrip_real_within_tolerance() {
        let l = crate::families::RealIndexSet::parse("0.5,1.5", 128).unwrap();
        let g = crate::families::gamma_matrix(&l, &l, 128).unwrap();
        let text = matrix_to_json(&MatrixData::Real(g.clone()));
        match matrix_from_json(&text).unwrap() {
            MatrixData::Real(b) => {
                for i in 0..2 {
                    for j in 0..2 {
                        assert!(b.at(i, j).rel_close(g.at(i, j), 120));
                    }
                }
            }
            _ => panic!("kind changed"),
        }
    }

    #[test]
    fn json_example_from_wire() {
        let text = r#"{"rows":2,"cols":2,"scalar":"rational","offset":1,
                       "data":[["1/1","2/1"],["2/1","6/1"]]}"#;
        match matrix_from_json(text).unwrap() {
            MatrixData::Exact(m) => assert_eq!(m, beta_matrix(2)),
            _ => panic!(),
        }
    }

    #[test]
    fn csv_roundtrip_and_inference() {
        let m = MatrixData::Exact(cauchy_matrix(3));
        let text = matrix_to_csv(&m);
        match matrix_from_csv(&text, None, IndexOffset::One, 128).unwrap() {
            MatrixData::Exact(b) => assert!(b.same_entries(&cauchy_matrix(3))),
            _ => panic!("expected rational inference"),
        }
        // bell entries as bare integers
        let text = "1,1,2\n1,2,5\n2,5,15\n";
        match matrix_from_csv(text, None, IndexOffset::Zero, 128).unwrap() {
            MatrixData::Exact(b) => assert!(b.same_entries(&bell_matrix(3))),
            _ => panic!(),
        }
        // decimals infer real
        let text = "1.5,2\n0.25,1e2\n";
        assert!(matches!(
            matrix_from_csv(text, None, IndexOffset::Zero, 128).unwrap(),
            MatrixData::Real(_)
        ));
        // mixed kinds rejected
        let text = "1/2,2.5\n1,1\n";
        assert!(matrix_from_csv(text, None, IndexOffset::Zero, 128).is_err());
    }

    #[test]
    fn malformed_cell_is_located() {
        let text = "1,2\n3,2//3\n";
        match matrix_from_csv(text, None, IndexOffset::Zero, 128) {
            Err(Error::Parse { location, .. }) => assert_eq!(location, Some((2, 2))),
            other => panic!("expected located parse error, got {other:?}"),
        }
    }

    #[test]
    fn report_json_shape() {
        let report = crate::positivity::is_pd_exact(&beta_matrix(3)).unwrap();
        let text = report_to_json(&report);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["verdict"], "pass");
        assert!(v.get("witness").is_none());
        let fail = crate::positivity::is_tn(
            &Matrix::from_rows(
                vec![
                    vec![parse_rational("1").unwrap(), parse_rational("2").unwrap()],
                    vec![parse_rational("3").unwrap(), parse_rational("1").unwrap()],
                ],
                IndexOffset::One,
            )
            .unwrap(),
        )
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&report_to_json(&fail)).unwrap();
        assert_eq!(v["verdict"], "fail");
        assert_eq!(v["witness"]["value"], "-5");
    }

    #[test]
    fn seb_json_has_spec_fields() {
        let f = beta_seb_closed(3);
        let v: serde_json::Value = serde_json::from_str(&seb_to_json(&f)).unwrap();
        assert!(v["lower"].is_array());
        assert!(v["diag"].is_array());
        assert!(v["upper"].is_array());
        assert_eq!(v["lower"][0]["i"], 3);
        assert_eq!(v["lower"][0]["param"], "3/2");
        assert_eq!(v["diag"][1], "2/1");
    }

    #[test]
    fn congruence_as_seb_composes_back() {
        for n in 1..=6 {
            let c = sym_congruence_ldl(&beta_matrix(n)).unwrap();
            let f = congruence_to_seb(&c).unwrap();
            assert_eq!(seb_compose(&f).unwrap(), beta_matrix(n), "beta n={n}");
        }
        let c = bell_ldl_closed(5);
        let f = congruence_to_seb(&c).unwrap();
        assert_eq!(seb_compose(&f).unwrap(), bell_matrix(5));
    }

    #[test]
    fn pretty_formats_run() {
        let m = MatrixData::Exact(beta_matrix(2));
        let p = matrix_to_pretty(&m);
        assert!(p.contains('['));
        let report = crate::positivity::is_pd_exact(&beta_matrix(2)).unwrap();
        assert!(report_to_pretty(&report).contains("pass"));
        assert!(seb_to_pretty(&beta_seb_closed(2)).contains("L_2(2)"));
        assert!(congruence_to_pretty(&bell_ldl_closed(2)).contains("diag"));
    }
}
