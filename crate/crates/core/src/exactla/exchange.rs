//! Plain-text matrix exchange: a header line `rows cols Z` (or `rows cols p`)
//! followed by one line of space-separated integers per row.

use num_bigint::BigInt;

use super::fp::{check_prime, FpMatrix};
use crate::error::{Error, Result};
use crate::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExchangeMatrix {
    Integer(IntMatrix),
    Modular(FpMatrix),
}

pub fn write_int_matrix(m: &IntMatrix) -> String {
    let mut out = format!("{} {} Z\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_fp_matrix(m: &FpMatrix) -> String {
    let mut out = format!("{} {} {}\n", m.rows(), m.cols(), m.prime());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<ExchangeMatrix> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [rows, cols, kind] = fields[..] else {
        return Err(Error::Parse(format!("bad header {header:?}")));
    };
    let rows: usize = rows.parse().map_err(|_| Error::Parse(format!("bad row count {rows:?}")))?;
    let cols: usize = cols.parse().map_err(|_| Error::Parse(format!("bad column count {cols:?}")))?;
    let mut entries: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
    for (i, line) in lines.enumerate() {
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad entry {t:?} in row {i}"))))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != cols {
            return Err(Error::Parse(format!("row {i} has {} entries, expected {cols}", row.len())));
        }
        entries.push(row);
    }
    if entries.len() != rows {
        return Err(Error::Parse(format!("expected {rows} rows, found {}", entries.len())));
    }
    if kind == "Z" {
        let m = if rows == 0 {
            IntMatrix::zeros(0, cols)
        } else {
            IntMatrix::from_rows(entries)?
        };
        return Ok(ExchangeMatrix::Integer(m));
    }
    let p: u32 = kind.parse().map_err(|_| Error::Parse(format!("bad ring {kind:?}")))?;
    check_prime(p)?;
    let pb = BigInt::from(p);
    let mut m = FpMatrix::zeros(p, rows, cols);
    for (i, row) in entries.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let r = ((v % &pb) + &pb) % &pb;
            m.set(i, j, u32::try_from(&r).expect("reduced"));
        }
    }
    Ok(ExchangeMatrix::Modular(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_round_trip() {
        let m = IntMatrix::from_i64_rows(&[&[1, -2, 3], &[0, 5, -60]]).unwrap();
        let text = write_int_matrix(&m);
        assert!(text.starts_with("2 3 Z\n"));
        assert_eq!(parse_matrix(&text).unwrap(), ExchangeMatrix::Integer(m));
    }

    #[test]
    fn modular_entries_are_reduced() {
        let parsed = parse_matrix("1 3 3\n4 -1 3\n").unwrap();
        let ExchangeMatrix::Modular(m) = parsed else { panic!() };
        assert_eq!(m.row(0), vec![1, 2, 0]);
        assert_eq!(parse_matrix(&write_fp_matrix(&m)).unwrap(), ExchangeMatrix::Modular(m));
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_matrix("").is_err());
        assert!(parse_matrix("2 2 Z\n1 2\n").is_err());
        assert!(parse_matrix("1 2 4\n1 2\n").is_err());
        assert!(parse_matrix("1 2 Z\n1 x\n").is_err());
    }
}
