//! Characteristic q x q matrices over {*} U [q].
//!
//! A characteristic matrix encodes a (q,k,3)-homogeneous code: an entry
//! `c_i(j) = a` stands for the codeword (a, i, j), a `*` for no codeword.
//! Valid matrices carry each symbol exactly k times, have exactly q-k stars
//! in every row and column, and never repeat a symbol within a row or column.

use std::fmt::Write as _;

use crate::codebook::QaryCode;

use super::ConstructError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharMatrix {
    q: usize,
    k: usize,
    /// row-major, None = *
    entries: Vec<Option<u32>>,
}

impl CharMatrix {
    pub fn new(q: usize, entries: Vec<Option<u32>>) -> Result<Self, ConstructError> {
        if q == 0 || entries.len() != q * q {
            return Err(ConstructError::InvalidCharMatrix(format!(
                "expected {q}x{q} entries"
            )));
        }
        let filled = entries.iter().flatten().count();
        if filled == 0 || !filled.is_multiple_of(q) {
            return Err(ConstructError::InvalidCharMatrix(
                "symbol count is not a multiple of q".into(),
            ));
        }
        let m = CharMatrix {
            q,
            k: filled / q,
            entries,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn q(&self) -> usize {
        self.q
    }
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        self.entries[i * self.q + j]
    }

    /// The three defining properties.
    fn validate(&self) -> Result<(), ConstructError> {
        let q = self.q;
        let mut symbol_total = vec![0usize; q];
        for e in self.entries.iter().flatten() {
            let a = *e as usize;
            if a < 1 || a > q {
                return Err(ConstructError::InvalidCharMatrix(format!(
                    "symbol {a} out of range 1..={q}"
                )));
            }
            symbol_total[a - 1] += 1;
        }
        if symbol_total.iter().any(|&c| c != self.k) {
            return Err(ConstructError::InvalidCharMatrix(format!(
                "every symbol must appear exactly k={} times",
                self.k
            )));
        }
        for i in 0..q {
            let row_stars = (0..q).filter(|&j| self.get(i, j).is_none()).count();
            let col_stars = (0..q).filter(|&j| self.get(j, i).is_none()).count();
            if row_stars != q - self.k || col_stars != q - self.k {
                return Err(ConstructError::InvalidCharMatrix(format!(
                    "row/column {i} must contain exactly q-k stars"
                )));
            }
            let mut row_seen = vec![false; q];
            let mut col_seen = vec![false; q];
            for j in 0..q {
                if let Some(a) = self.get(i, j) {
                    if std::mem::replace(&mut row_seen[a as usize - 1], true) {
                        return Err(ConstructError::InvalidCharMatrix(format!(
                            "symbol {a} repeats in row {}",
                            i + 1
                        )));
                    }
                }
                if let Some(a) = self.get(j, i) {
                    if std::mem::replace(&mut col_seen[a as usize - 1], true) {
                        return Err(ConstructError::InvalidCharMatrix(format!(
                            "symbol {a} repeats in column {}",
                            i + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The (q,k,3)-homogeneous code listing codewords (a,i,j) in row-major
    /// cell order.
    pub fn to_code(&self) -> QaryCode {
        let mut cols = Vec::with_capacity(self.k * self.q);
        for i in 0..self.q {
            for j in 0..self.q {
                if let Some(a) = self.get(i, j) {
                    cols.push(vec![a, i as u32 + 1, j as u32 + 1]);
                }
            }
        }
        QaryCode::from_columns(self.q as u32, &cols).expect("valid by construction")
    }

    /// Inverse of `to_code` for any 3-row code in which every (row2, row3)
    /// pair occurs at most once.
    pub fn from_code(code: &QaryCode) -> Result<Self, ConstructError> {
        if code.rows() != 3 {
            return Err(ConstructError::InvalidCharMatrix(
                "characteristic matrices encode 3-row codes".into(),
            ));
        }
        let q = code.q() as usize;
        let mut entries = vec![None; q * q];
        for u in 0..code.size() {
            let (a, i, j) = (code.get(0, u), code.get(1, u), code.get(2, u));
            let cell = (i as usize - 1) * q + (j as usize - 1);
            if entries[cell].is_some() {
                return Err(ConstructError::InvalidCharMatrix(format!(
                    "two codewords share cell ({i},{j})"
                )));
            }
            entries[cell] = Some(a);
        }
        CharMatrix::new(q, entries)
    }

    /// Product matrix: cell ((i,l),(j,m)) carries q2(c1-1)+c2 when both
    /// factors are symbols, star otherwise. Valid for (q1q2, k1k2).
    pub fn product(&self, other: &CharMatrix) -> Result<CharMatrix, ConstructError> {
        let (q1, q2) = (self.q, other.q);
        let q = q1 * q2;
        let mut entries = vec![None; q * q];
        for i in 0..q1 {
            for j in 0..q1 {
                for l in 0..q2 {
                    for m in 0..q2 {
                        let r = q2 * i + l;
                        let u = q2 * j + m;
                        if let (Some(c1), Some(c2)) = (self.get(i, j), other.get(l, m)) {
                            entries[r * q + u] = Some(q2 as u32 * (c1 - 1) + c2);
                        }
                    }
                }
            }
        }
        CharMatrix::new(q, entries)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.q {
            let row: Vec<String> = (0..self.q)
                .map(|j| match self.get(i, j) {
                    Some(a) => a.to_string(),
                    None => "*".into(),
                })
                .collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, ConstructError> {
        let rows: Vec<Vec<&str>> = text
            .lines()
            .map(|l| l.split_whitespace().collect())
            .filter(|r: &Vec<&str>| !r.is_empty())
            .collect();
        let q = rows.len();
        let mut entries = Vec::with_capacity(q * q);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != q {
                return Err(ConstructError::InvalidCharMatrix(format!(
                    "row {} has {} tokens, expected {q}",
                    i + 1,
                    row.len()
                )));
            }
            for tok in row {
                if *tok == "*" {
                    entries.push(None);
                } else {
                    let a: u32 = tok.parse().map_err(|_| {
                        ConstructError::InvalidCharMatrix(format!("bad token {tok:?}"))
                    })?;
                    entries.push(Some(a));
                }
            }
        }
        CharMatrix::new(q, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_validate_round_trip() {
        let m = CharMatrix::parse("1 2 *\n* 1 3\n3 * 2\n").unwrap();
        assert_eq!((m.q(), m.k()), (3, 2));
        assert_eq!(CharMatrix::parse(&m.to_text()).unwrap(), m);
    }

    #[test]
    fn rejects_repeated_symbol_in_row() {
        let err = CharMatrix::parse("1 1 *\n* 2 3\n3 * 2\n").unwrap_err();
        assert!(err.to_string().contains("repeats"));
    }

    #[test]
    fn rejects_uneven_symbol_counts() {
        // symbol 1 appears three times, symbol 3 once
        assert!(CharMatrix::parse("1 2 *\n* 1 3\n2 * 1\n").is_err());
    }

    #[test]
    fn code_round_trip() {
        let m = CharMatrix::parse("1 2 *\n* 1 3\n3 * 2\n").unwrap();
        let code = m.to_code();
        assert_eq!(code.size(), 6);
        assert!(code.is_homogeneous(2));
        assert_eq!(CharMatrix::from_code(&code).unwrap(), m);
    }
}
