//! Core data types: binary and q-ary codes, Boolean-sum algebra, weight and
//! correlation statistics, composition tables, and the text/JSON formats.
//!
//! Binary codes are stored column-major as packed 64-bit blocks: cover tests
//! and Boolean sums over columns dominate every oracle and decoder, so a
//! column must be a contiguous word slice.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodeError {
    #[error("column length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("empty input")]
    Empty,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("entry {value} out of range 1..={q} at row {row}, column {col}")]
    EntryOutOfRange {
        value: u64,
        q: u32,
        row: usize,
        col: usize,
    },
}

/// A single binary column of length `len`, bit i in word i/64.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitColumn {
    len: usize,
    words: Vec<u64>,
}

impl BitColumn {
    pub fn zero(len: usize) -> Self {
        BitColumn {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut c = BitColumn::zero(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                c.set(i, true);
            }
        }
        c
    }

    pub fn len(&self) -> usize {
        self.len
    }
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        if v {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn or_assign(&mut self, other: &BitColumn) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn dot(&self, other: &BitColumn) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn complement(&self) -> BitColumn {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        // clear padding above len
        let spare = out.words.len() * 64 - out.len;
        if spare > 0 {
            let last = out.words.len() - 1;
            out.words[last] &= u64::MAX >> spare;
        }
        out
    }
}

/// Componentwise OR of a nonempty set of equal-length columns.
pub fn boolean_sum<'a, I>(columns: I) -> Result<BitColumn, CodeError>
where
    I: IntoIterator<Item = &'a BitColumn>,
{
    let mut it = columns.into_iter();
    let first = it.next().ok_or(CodeError::Empty)?;
    let mut acc = first.clone();
    for c in it {
        if c.len() != acc.len() {
            return Err(CodeError::LengthMismatch(acc.len(), c.len()));
        }
        acc.or_assign(c);
    }
    Ok(acc)
}

/// x covers y iff x OR y = x.
pub fn covers(x: &BitColumn, y: &BitColumn) -> Result<bool, CodeError> {
    if x.len() != y.len() {
        return Err(CodeError::LengthMismatch(x.len(), y.len()));
    }
    Ok(x.words.iter().zip(&y.words).all(|(a, b)| b & !a == 0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ternary {
    Zero,
    One,
    Star,
}

/// Output of a symmetric Boolean sum: per component 0 / 1 / erasure.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TernaryColumn(pub Vec<Ternary>);

impl TernaryColumn {
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Diamond-cover test: z is covered iff adding z to the sum changes
    /// nothing, i.e. z agrees with every non-erased component.
    pub fn diamond_covers(&self, z: &BitColumn) -> Result<bool, CodeError> {
        if self.len() != z.len() {
            return Err(CodeError::LengthMismatch(self.len(), z.len()));
        }
        Ok(self.0.iter().enumerate().all(|(i, t)| match t {
            Ternary::Zero => !z.get(i),
            Ternary::One => z.get(i),
            Ternary::Star => true,
        }))
    }
}

/// Per component: 0 if all inputs are 0, 1 if all are 1, erasure otherwise.
pub fn symmetric_boolean_sum<'a, I>(columns: I) -> Result<TernaryColumn, CodeError>
where
    I: IntoIterator<Item = &'a BitColumn>,
{
    let cols: Vec<&BitColumn> = columns.into_iter().collect();
    let first = cols.first().ok_or(CodeError::Empty)?;
    let n = first.len();
    for c in &cols {
        if c.len() != n {
            return Err(CodeError::LengthMismatch(n, c.len()));
        }
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let ones = cols.iter().filter(|c| c.get(i)).count();
        out.push(if ones == 0 {
            Ternary::Zero
        } else if ones == cols.len() {
            Ternary::One
        } else {
            Ternary::Star
        });
    }
    Ok(TernaryColumn(out))
}

/// Binary N x t code; rows are tests, columns are codewords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    n: usize,
    t: usize,
    wpc: usize,
    bits: Vec<u64>,
}

impl BinaryCode {
    pub fn zero(n: usize, t: usize) -> Self {
        assert!(n >= 1 && t >= 1, "code dimensions must be positive");
        let wpc = n.div_ceil(64);
        BinaryCode {
            n,
            t,
            wpc,
            bits: vec![0; wpc * t],
        }
    }

    pub fn from_columns(cols: &[BitColumn]) -> Result<Self, CodeError> {
        let first = cols.first().ok_or(CodeError::Empty)?;
        let mut code = BinaryCode::zero(first.len(), cols.len());
        for (u, c) in cols.iter().enumerate() {
            if c.len() != first.len() {
                return Err(CodeError::LengthMismatch(first.len(), c.len()));
            }
            code.bits[u * code.wpc..(u + 1) * code.wpc].copy_from_slice(c.words());
        }
        Ok(code)
    }

    /// rows[i][u] over {0,1}.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self, CodeError> {
        let n = rows.len();
        let t = rows.first().ok_or(CodeError::Empty)?.len();
        let mut code = BinaryCode::zero(n, t);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != t {
                return Err(CodeError::LengthMismatch(t, row.len()));
            }
            for (u, &b) in row.iter().enumerate() {
                if b != 0 {
                    code.set(i, u, true);
                }
            }
        }
        Ok(code)
    }

    pub fn len(&self) -> usize {
        self.n
    }
    pub fn is_empty(&self) -> bool {
        false
    }
    pub fn size(&self) -> usize {
        self.t
    }

    pub fn get(&self, i: usize, u: usize) -> bool {
        (self.bits[u * self.wpc + i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, u: usize, v: bool) {
        let w = u * self.wpc + i / 64;
        if v {
            self.bits[w] |= 1 << (i % 64);
        } else {
            self.bits[w] &= !(1 << (i % 64));
        }
    }

    pub fn column_words(&self, u: usize) -> &[u64] {
        &self.bits[u * self.wpc..(u + 1) * self.wpc]
    }

    pub fn column(&self, u: usize) -> BitColumn {
        BitColumn {
            len: self.n,
            words: self.column_words(u).to_vec(),
        }
    }

    pub fn row(&self, i: usize) -> Vec<u8> {
        (0..self.t).map(|u| self.get(i, u) as u8).collect()
    }

    pub fn row_weight(&self, i: usize) -> usize {
        (0..self.t).filter(|&u| self.get(i, u)).count()
    }

    pub fn column_weight(&self, u: usize) -> usize {
        self.column_words(u)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// OR of the selected columns, written into `out` (len n).
    pub fn or_into(&self, subset: &[usize], out: &mut BitColumn) {
        debug_assert_eq!(out.len, self.n);
        out.words.iter_mut().for_each(|w| *w = 0);
        for &u in subset {
            for (a, b) in out.words.iter_mut().zip(self.column_words(u)) {
                *a |= b;
            }
        }
    }

    pub fn or_of(&self, subset: &[usize]) -> BitColumn {
        let mut out = BitColumn::zero(self.n);
        self.or_into(subset, &mut out);
        out
    }

    /// Does the OR of `subset` cover column v?
    pub fn subset_covers(&self, or: &BitColumn, v: usize) -> bool {
        or.words
            .iter()
            .zip(self.column_words(v))
            .all(|(a, b)| b & !a == 0)
    }

    pub fn complement(&self) -> BinaryCode {
        let cols: Vec<BitColumn> = (0..self.t).map(|u| self.column(u).complement()).collect();
        BinaryCode::from_columns(&cols).unwrap()
    }

    /// Rows of self followed by rows of other.
    pub fn vstack(&self, other: &BinaryCode) -> Result<BinaryCode, CodeError> {
        if self.t != other.t {
            return Err(CodeError::LengthMismatch(self.t, other.t));
        }
        let mut rows: Vec<Vec<u8>> = (0..self.n).map(|i| self.row(i)).collect();
        rows.extend((0..other.n).map(|i| other.row(i)));
        BinaryCode::from_rows(&rows)
    }
}

/// q-ary J x t code over the alphabet 1..=q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QaryCode {
    j: usize,
    t: usize,
    q: u32,
    /// column-major, entries[u*j + row]
    entries: Vec<u32>,
}

impl QaryCode {
    pub fn from_columns(q: u32, cols: &[Vec<u32>]) -> Result<Self, CodeError> {
        let first = cols.first().ok_or(CodeError::Empty)?;
        let j = first.len();
        let mut entries = Vec::with_capacity(j * cols.len());
        for (u, col) in cols.iter().enumerate() {
            if col.len() != j {
                return Err(CodeError::LengthMismatch(j, col.len()));
            }
            for (row, &v) in col.iter().enumerate() {
                if v < 1 || v > q {
                    return Err(CodeError::EntryOutOfRange {
                        value: v as u64,
                        q,
                        row,
                        col: u,
                    });
                }
                entries.push(v);
            }
        }
        Ok(QaryCode {
            j,
            t: cols.len(),
            q,
            entries,
        })
    }

    pub fn from_rows(q: u32, rows: &[Vec<u32>]) -> Result<Self, CodeError> {
        let j = rows.len();
        let t = rows.first().ok_or(CodeError::Empty)?.len();
        let cols: Vec<Vec<u32>> = (0..t)
            .map(|u| (0..j).map(|r| rows[r][u]).collect())
            .collect();
        let mut code = QaryCode::from_columns(q, &cols)?;
        code.j = j;
        Ok(code)
    }

    pub fn rows(&self) -> usize {
        self.j
    }
    pub fn size(&self) -> usize {
        self.t
    }
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn get(&self, row: usize, u: usize) -> u32 {
        self.entries[u * self.j + row]
    }

    pub fn column(&self, u: usize) -> &[u32] {
        &self.entries[u * self.j..(u + 1) * self.j]
    }

    pub fn row_vec(&self, row: usize) -> Vec<u32> {
        (0..self.t).map(|u| self.get(row, u)).collect()
    }

    /// q-ary Hamming distance between codewords u and v.
    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.column(u)
            .iter()
            .zip(self.column(v))
            .filter(|(a, b)| a != b)
            .count()
    }

    /// Number of coordinates where codewords u and v agree.
    pub fn coincidence(&self, u: usize, v: usize) -> usize {
        self.j - self.distance(u, v)
    }

    pub fn min_distance(&self) -> usize {
        let mut d = self.j;
        for u in 0..self.t {
            for v in u + 1..self.t {
                d = d.min(self.distance(u, v));
            }
        }
        d
    }

    /// Count of each symbol in a row; index a-1 holds the count of symbol a.
    pub fn row_symbol_counts(&self, row: usize) -> Vec<usize> {
        let mut counts = vec![0usize; self.q as usize];
        for u in 0..self.t {
            counts[self.get(row, u) as usize - 1] += 1;
        }
        counts
    }

    /// Every symbol appears exactly k times in every row.
    pub fn is_homogeneous(&self, k: usize) -> bool {
        self.t == k * self.q as usize
            && (0..self.j).all(|r| self.row_symbol_counts(r).iter().all(|&c| c == k))
    }
}

/// Weight / correlation / row-weight statistics of a binary code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CodeStats {
    pub w_min: usize,
    pub w_max: usize,
    pub lambda_max: usize,
    pub k_row: usize,
}

/// Exact statistics by full scan. lambda_max over a single column is 0.
pub fn code_stats(code: &BinaryCode) -> CodeStats {
    let t = code.size();
    let mut w_min = usize::MAX;
    let mut w_max = 0;
    for u in 0..t {
        let w = code.column_weight(u);
        w_min = w_min.min(w);
        w_max = w_max.max(w);
    }
    let mut lambda_max = 0;
    for u in 0..t {
        let cu = code.column(u);
        for v in u + 1..t {
            lambda_max = lambda_max.max(cu.dot(&code.column(v)));
        }
    }
    let k_row = (0..code.len()).map(|i| code.row_weight(i)).max().unwrap();
    CodeStats {
        w_min,
        w_max,
        lambda_max,
        k_row,
    }
}

/// Joint count table n(pattern, z) over row patterns of s selected columns
/// and an output word; pattern bit k is the value of the k-th selected column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    s: usize,
    z_size: usize,
    total: usize,
    counts: Vec<u64>,
}

impl Composition {
    /// Tally positions of the code restricted to `cols` against output word z.
    pub fn of(
        code: &BinaryCode,
        cols: &[usize],
        z: &[u16],
        z_size: usize,
    ) -> Result<Composition, CodeError> {
        if z.len() != code.len() {
            return Err(CodeError::LengthMismatch(code.len(), z.len()));
        }
        let s = cols.len();
        assert!((1..=24).contains(&s), "composition supports 1..=24 inputs");
        let mut counts = vec![0u64; (1usize << s) * z_size];
        for i in 0..code.len() {
            let mut pat = 0usize;
            for (k, &u) in cols.iter().enumerate() {
                if code.get(i, u) {
                    pat |= 1 << k;
                }
            }
            counts[pat * z_size + z[i] as usize] += 1;
        }
        Ok(Composition {
            s,
            z_size,
            total: code.len(),
            counts,
        })
    }

    pub fn inputs(&self) -> usize {
        self.s
    }
    pub fn z_size(&self) -> usize {
        self.z_size
    }
    pub fn total(&self) -> usize {
        self.total
    }

    pub fn count(&self, pattern: usize, z: usize) -> u64 {
        self.counts[pattern * self.z_size + z]
    }

    /// Count of ones among the pattern bits, tallied over (pattern, z).
    /// Returns counts indexed by number of ones 0..=s.
    pub fn ones_histogram(&self) -> Vec<u64> {
        let mut h = vec![0u64; self.s + 1];
        for pat in 0..1usize << self.s {
            for z in 0..self.z_size {
                h[pat.count_ones() as usize] += self.count(pat, z);
            }
        }
        h
    }

    /// Marginal n(x_k): positions where selected column k carries bit x_k.
    pub fn marginal_input(&self, k: usize, x_k: bool) -> u64 {
        let mut n = 0;
        for pat in 0..1usize << self.s {
            if ((pat >> k) & 1 == 1) == x_k {
                for z in 0..self.z_size {
                    n += self.count(pat, z);
                }
            }
        }
        n
    }

    /// Marginal n(suffix pattern, z) over the columns k.. (0-based k).
    pub fn marginal_suffix(&self, k: usize, suffix: usize, z: usize) -> u64 {
        let mut n = 0;
        for pat in 0..1usize << self.s {
            if pat >> k == suffix {
                n += self.count(pat, z);
            }
        }
        n
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        (0..1usize << self.s)
            .flat_map(move |pat| (0..self.z_size).map(move |z| (pat, z, self.count(pat, z))))
    }
}

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------

pub fn write_binary(code: &BinaryCode) -> String {
    let mut out = String::new();
    writeln!(out, "SUPERCODE v1 BIN N={} T={}", code.len(), code.size()).unwrap();
    for i in 0..code.len() {
        for u in 0..code.size() {
            out.push(if code.get(i, u) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

pub fn write_qary(code: &QaryCode) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "SUPERCODE v1 QARY J={} T={} Q={}",
        code.rows(),
        code.size(),
        code.q()
    )
    .unwrap();
    for r in 0..code.rows() {
        let row: Vec<String> = (0..code.size())
            .map(|u| code.get(r, u).to_string())
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyCode {
    Binary(BinaryCode),
    Qary(QaryCode),
}

fn header_field(tok: &str, key: &str, line: usize) -> Result<u64, CodeError> {
    tok.strip_prefix(key)
        .and_then(|v| v.strip_prefix('='))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| CodeError::Parse {
            line,
            msg: format!("expected {key}=<int>, got {tok:?}"),
        })
}

pub fn parse_code(text: &str) -> Result<AnyCode, CodeError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(CodeError::Empty)?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() < 3 || toks[0] != "SUPERCODE" || toks[1] != "v1" {
        return Err(CodeError::Parse {
            line: 1,
            msg: "expected header SUPERCODE v1 <BIN|QARY> ...".into(),
        });
    }
    match toks[2] {
        "BIN" => {
            if toks.len() != 5 {
                return Err(CodeError::Parse {
                    line: 1,
                    msg: "BIN header needs N= and T=".into(),
                });
            }
            let n = header_field(toks[3], "N", 1)? as usize;
            let t = header_field(toks[4], "T", 1)? as usize;
            let mut rows = Vec::with_capacity(n);
            for _ in 0..n {
                let (idx, line) = lines.next().ok_or(CodeError::Parse {
                    line: n + 1,
                    msg: "unexpected end of file".into(),
                })?;
                let row: Result<Vec<u8>, CodeError> = line
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(0),
                        '1' => Ok(1),
                        other => Err(CodeError::Parse {
                            line: idx + 1,
                            msg: format!("invalid bit character {other:?}"),
                        }),
                    })
                    .collect();
                let row = row?;
                if row.len() != t {
                    return Err(CodeError::Parse {
                        line: idx + 1,
                        msg: format!("expected {t} bits, got {}", row.len()),
                    });
                }
                rows.push(row);
            }
            Ok(AnyCode::Binary(BinaryCode::from_rows(&rows)?))
        }
        "QARY" => {
            if toks.len() != 6 {
                return Err(CodeError::Parse {
                    line: 1,
                    msg: "QARY header needs J=, T= and Q=".into(),
                });
            }
            let j = header_field(toks[3], "J", 1)? as usize;
            let t = header_field(toks[4], "T", 1)? as usize;
            let q = header_field(toks[5], "Q", 1)? as u32;
            let mut rows = Vec::with_capacity(j);
            for _ in 0..j {
                let (idx, line) = lines.next().ok_or(CodeError::Parse {
                    line: j + 1,
                    msg: "unexpected end of file".into(),
                })?;
                let row: Result<Vec<u32>, CodeError> = line
                    .split_whitespace()
                    .map(|tok| {
                        tok.parse().map_err(|_| CodeError::Parse {
                            line: idx + 1,
                            msg: format!("invalid integer {tok:?}"),
                        })
                    })
                    .collect();
                let row = row?;
                if row.len() != t {
                    return Err(CodeError::Parse {
                        line: idx + 1,
                        msg: format!("expected {t} entries, got {}", row.len()),
                    });
                }
                rows.push(row);
            }
            Ok(AnyCode::Qary(QaryCode::from_rows(q, &rows)?))
        }
        other => Err(CodeError::Parse {
            line: 1,
            msg: format!("unknown code kind {other:?}"),
        }),
    }
}

/// Pool layout: row i lists the 1-based clone numbers in pool i.
#[derive(Debug, Serialize)]
struct PoolLayout {
    pools: Vec<Vec<usize>>,
    t: usize,
}

pub fn pools_json(code: &BinaryCode) -> String {
    let pools = (0..code.len())
        .map(|i| {
            (0..code.size())
                .filter(|&u| code.get(i, u))
                .map(|u| u + 1)
                .collect()
        })
        .collect();
    serde_json::to_string(&PoolLayout {
        pools,
        t: code.size(),
    })
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(bits: &[u8]) -> BitColumn {
        BitColumn::from_bits(bits)
    }

    #[test]
    fn boolean_sum_examples() {
        let z = col(&[0, 0, 0]);
        assert_eq!(boolean_sum([&z]).unwrap(), z);
        let a = col(&[1, 0, 1]);
        assert_eq!(boolean_sum([&a, &a]).unwrap(), a);
        let b = col(&[1, 0, 0]);
        let c = col(&[0, 0, 1]);
        assert_eq!(boolean_sum([&b, &c]).unwrap(), col(&[1, 0, 1]));
        assert!(matches!(
            boolean_sum([&b, &col(&[1, 0])]),
            Err(CodeError::LengthMismatch(3, 2))
        ));
    }

    #[test]
    fn covers_examples() {
        assert!(covers(&col(&[1, 1, 0]), &col(&[1, 0, 0])).unwrap());
        let x = col(&[1, 0, 1]);
        assert!(covers(&x, &x).unwrap());
        assert!(!covers(&col(&[1, 0, 0]), &col(&[0, 1, 0])).unwrap());
    }

    #[test]
    fn symmetric_sum_examples() {
        let a = col(&[0, 1]);
        let s = symmetric_boolean_sum([&a, &a]).unwrap();
        assert_eq!(s.0, vec![Ternary::Zero, Ternary::One]);
        let b = col(&[1, 1]);
        let s = symmetric_boolean_sum([&a, &b]).unwrap();
        assert_eq!(s.0, vec![Ternary::Star, Ternary::One]);
        // the erased position accepts either bit, the 1 position pins z
        assert!(s.diamond_covers(&col(&[1, 1])).unwrap());
        assert!(s.diamond_covers(&col(&[0, 1])).unwrap());
        assert!(!s.diamond_covers(&col(&[1, 0])).unwrap());
    }

    #[test]
    fn stats_identity_and_ones() {
        let id = BinaryCode::from_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(
            code_stats(&id),
            CodeStats {
                w_min: 1,
                w_max: 1,
                lambda_max: 0,
                k_row: 1
            }
        );
        let ones = BinaryCode::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(
            code_stats(&ones),
            CodeStats {
                w_min: 2,
                w_max: 2,
                lambda_max: 2,
                k_row: 2
            }
        );
    }

    #[test]
    fn composition_examples() {
        // s=1, x=(1,0), z=(a,b) with alphabet {a=0, b=1}
        let code = BinaryCode::from_rows(&[vec![1], vec![0]]).unwrap();
        let c = Composition::of(&code, &[0], &[0, 1], 2).unwrap();
        assert_eq!(c.count(1, 0), 1);
        assert_eq!(c.count(0, 1), 1);
        assert_eq!(c.total(), 2);

        // N=3, s=2, columns (1,1,0),(1,0,0), z=(1,1,0)
        let code = BinaryCode::from_rows(&[vec![1, 1], vec![1, 0], vec![0, 0]]).unwrap();
        let c = Composition::of(&code, &[0, 1], &[1, 1, 0], 2).unwrap();
        assert_eq!(c.count(0b11, 1), 1);
        assert_eq!(c.count(0b01, 1), 1);
        assert_eq!(c.count(0b00, 0), 1);
        assert_eq!(c.iter().map(|(_, _, n)| n).sum::<u64>(), 3);
        // marginal n(x_1 = 1) = 2
        assert_eq!(c.marginal_input(0, true), 2);
        // suffix marginal over column 2 only
        assert_eq!(c.marginal_suffix(1, 1, 1), 1);
        assert_eq!(c.marginal_suffix(1, 0, 1), 1);
    }

    #[test]
    fn format_round_trip() {
        let code = BinaryCode::from_rows(&[vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        let text = write_binary(&code);
        assert!(text.starts_with("SUPERCODE v1 BIN N=2 T=3\n"));
        match parse_code(&text).unwrap() {
            AnyCode::Binary(c) => assert_eq!(c, code),
            _ => panic!("wrong kind"),
        }

        let q = QaryCode::from_rows(3, &[vec![1, 2, 3], vec![3, 3, 1]]).unwrap();
        let text = write_qary(&q);
        match parse_code(&text).unwrap() {
            AnyCode::Qary(c) => assert_eq!(c, q),
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_code("SUPERCODE v1 BIN N=2 T=3\n101\n0x1\n").unwrap_err();
        assert_eq!(
            err,
            CodeError::Parse {
                line: 3,
                msg: "invalid bit character 'x'".into()
            }
        );
    }

    #[test]
    fn pool_export() {
        let code = BinaryCode::from_rows(&[vec![1, 0, 1], vec![0, 1, 0]]).unwrap();
        assert_eq!(pools_json(&code), r#"{"pools":[[1,3],[2]],"t":3}"#);
    }

    #[test]
    fn qary_validation() {
        let err = QaryCode::from_rows(3, &[vec![1, 4]]).unwrap_err();
        assert!(matches!(err, CodeError::EntryOutOfRange { value: 4, .. }));
    }
}
