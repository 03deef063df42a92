//! Explicit code constructions: shortened Reed-Solomon codes and their
//! binary expansions, concatenation with constant-weight inner codes,
//! circulant and three-row homogeneous codes, the recurrent homogeneous
//! construction, characteristic-matrix products, subset-incidence codes and
//! complement doubling.

use thiserror::Error;

use crate::codebook::{BinaryCode, QaryCode};
use crate::combin::{binomial, colex_unrank, Subsets};
use crate::galois::Field;

pub mod charmat;
pub use charmat::CharMatrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("bad RS dimension k={k} for GF({q0}): need 2 <= k <= q0+1")]
    BadDimension { q0: u32, k: u32 },
    #[error("bad shortening depth r={r}: need 0 <= r <= k-1 = {}", k - 1)]
    BadShortenDepth { k: u32, r: u32 },
    #[error("inner code has {inner} columns, outer alphabet needs {needed}")]
    AlphabetTooLarge { inner: usize, needed: usize },
    #[error("inner code is not constant-weight")]
    NotConstantWeight,
    #[error("first row has weight {got}, expected {want}")]
    WeightMismatch { got: usize, want: usize },
    #[error("base code is not ({q},{k},{j})-homogeneous")]
    NotHomogeneous { q: u32, k: usize, j: usize },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("invalid characteristic matrix: {0}")]
    InvalidCharMatrix(String),
}

/// A (possibly shortened) extended Reed-Solomon code together with the
/// parameters that produced it. Entries are field elements shifted to 1..=q0.
#[derive(Debug, Clone)]
pub struct RsCode {
    pub code: QaryCode,
    pub q0: u32,
    pub k: u32,
    pub r: u32,
}

impl RsCode {
    /// Length q0 + 1 - r.
    pub fn length(&self) -> usize {
        self.code.rows()
    }
    /// Size q0^(k-r).
    pub fn size(&self) -> usize {
        self.code.size()
    }
    /// Distance q0 - k + 2.
    pub fn distance(&self) -> u32 {
        self.q0 - self.k + 2
    }
    /// Maximal number of coordinates where two codewords agree: k - r - 1.
    pub fn coincidence(&self) -> u32 {
        self.k - self.r - 1
    }
}

/// Extended RS code of length q0+1: evaluations of every polynomial of
/// degree < k at all q0 field elements, plus the coefficient of x^(k-1).
///
/// Message m in 0..q0^k encodes the polynomial sum c_i x^i with
/// c_i = (m / q0^i) mod q0; messages are emitted in increasing m.
pub fn extended_rs(f: &Field, k: u32) -> Result<RsCode, ConstructError> {
    shorten_rs(f, k, 0)
}

/// Shortened extended RS code: the subcode vanishing on the first r
/// evaluation points (field elements 0..r-1 in integer encoding), with those
/// coordinates deleted. Generated directly as Z(x)g(x) for the annihilator
/// Z of the removed points and every g of degree < k-r, so the cost is
/// q0^(k-r) rather than q0^k.
pub fn shorten_rs(f: &Field, k: u32, r: u32) -> Result<RsCode, ConstructError> {
    let q0 = f.q();
    if k < 2 || k > q0 + 1 {
        return Err(ConstructError::BadDimension { q0, k });
    }
    if r >= k {
        return Err(ConstructError::BadShortenDepth { k, r });
    }
    // annihilator Z(x) = prod_{i<r} (x - i), little-endian coefficients
    let mut annihilator = vec![1u32];
    for point in 0..r {
        let neg = f.neg(point);
        let mut next = vec![0u32; annihilator.len() + 1];
        for (d, &c) in annihilator.iter().enumerate() {
            next[d + 1] = f.add(next[d + 1], c);
            next[d] = f.add(next[d], f.mul(c, neg));
        }
        annihilator = next;
    }

    let msg_len = (k - r) as usize;
    let t = (q0 as u64).pow(k - r);
    assert!(t <= 1_000_000, "code size {t} exceeds the 10^6 cap");

    let points: Vec<u32> = (r..q0).collect();
    let mut cols = Vec::with_capacity(t as usize);
    let mut poly = vec![0u32; k as usize]; // Z * g, degree < k
    for m in 0..t {
        // g coefficients from base-q0 digits of m
        let mut digits = vec![0u32; msg_len];
        let mut rem = m;
        for d in digits.iter_mut() {
            *d = (rem % q0 as u64) as u32;
            rem /= q0 as u64;
        }
        poly.iter_mut().for_each(|c| *c = 0);
        for (dg, &g) in digits.iter().enumerate() {
            if g == 0 {
                continue;
            }
            for (da, &a) in annihilator.iter().enumerate() {
                let idx = dg + da;
                poly[idx] = f.add(poly[idx], f.mul(g, a));
            }
        }
        let mut col = Vec::with_capacity(points.len() + 1);
        for &x in &points {
            col.push(f.eval_poly(&poly, x).expect("in range") + 1);
        }
        col.push(poly[k as usize - 1] + 1); // top coefficient coordinate
        cols.push(col);
    }
    let code = QaryCode::from_columns(q0, &cols).expect("entries shifted into 1..=q0");
    Ok(RsCode { code, q0, k, r })
}

/// Replace each q-ary symbol by the weight-1 binary column of length q with
/// the 1 at the symbol's position. N = J*q, constant column weight J.
pub fn binary_expand(code: &QaryCode) -> BinaryCode {
    let q = code.q() as usize;
    let n = code.rows() * q;
    let mut out = BinaryCode::zero(n, code.size());
    for u in 0..code.size() {
        for (j, &sym) in code.column(u).iter().enumerate() {
            out.set(j * q + (sym as usize - 1), u, true);
        }
    }
    out
}

/// Concatenation: outer symbol a is replaced by column a of the inner
/// constant-weight code. N = J * inner.N, weight w' * J.
pub fn concatenate(outer: &QaryCode, inner: &BinaryCode) -> Result<BinaryCode, ConstructError> {
    if inner.size() < outer.q() as usize {
        return Err(ConstructError::AlphabetTooLarge {
            inner: inner.size(),
            needed: outer.q() as usize,
        });
    }
    let w = inner.column_weight(0);
    if (1..inner.size()).any(|u| inner.column_weight(u) != w) {
        return Err(ConstructError::NotConstantWeight);
    }
    let block = inner.len();
    let n = outer.rows() * block;
    let mut out = BinaryCode::zero(n, outer.size());
    for u in 0..outer.size() {
        for (j, &sym) in outer.column(u).iter().enumerate() {
            let inner_col = sym as usize - 1;
            for i in 0..block {
                if inner.get(i, inner_col) {
                    out.set(j * block + i, u, true);
                }
            }
        }
    }
    Ok(out)
}

/// The q x q circulant 0/1 matrix whose m-th row is the cyclic shift of the
/// (m-1)-th, starting from `first_row`.
pub fn circulant_matrix(q: usize, first_row: &[u8]) -> Result<BinaryCode, ConstructError> {
    if first_row.len() != q {
        return Err(ConstructError::BadParams(format!(
            "first row has length {}, expected {q}",
            first_row.len()
        )));
    }
    let mut rows = Vec::with_capacity(q);
    let mut row: Vec<u8> = first_row.to_vec();
    for _ in 0..q {
        rows.push(row.clone());
        row.rotate_right(1);
    }
    Ok(BinaryCode::from_rows(&rows).expect("nonempty"))
}

/// First row with 1s at positions 2^(n-1), n = 1..k (1-based).
pub fn powers_of_two_row(q: usize, k: usize) -> Vec<u8> {
    let mut row = vec![0u8; q];
    for n in 0..k {
        row[(1usize << n) - 1] = 1;
    }
    row
}

/// The (q,k,2)-homogeneous pair code of a q x q incidence matrix: one
/// codeword (i,j) per 1-cell, in row-major order.
pub fn pair_code(incidence: &BinaryCode) -> Result<QaryCode, ConstructError> {
    let q = incidence.len();
    if incidence.size() != q {
        return Err(ConstructError::BadParams(
            "incidence matrix must be square".into(),
        ));
    }
    let mut cols = Vec::new();
    for i in 0..q {
        for j in 0..q {
            if incidence.get(i, j) {
                cols.push(vec![i as u32 + 1, j as u32 + 1]);
            }
        }
    }
    QaryCode::from_columns(q as u32, &cols).map_err(|e| ConstructError::BadParams(e.to_string()))
}

/// Binary expansion of the circulant pair code: a superimposed (1,kq,k)-code
/// of length 2q for any weight-k first row, and a (2,kq,k)-design when the
/// first row is supported on powers of two and q >= 2^k - 1.
pub fn circulant_design(q: usize, first_row: &[u8]) -> Result<BinaryCode, ConstructError> {
    let k = first_row.iter().filter(|&&b| b != 0).count();
    if k == 0 || k > q {
        return Err(ConstructError::WeightMismatch {
            got: k,
            want: q.min(1),
        });
    }
    let c = circulant_matrix(q, first_row)?;
    Ok(binary_expand(&pair_code(&c)?))
}

/// Two-step recurrent construction: a (q,k,s)-homogeneous code on kq
/// codewords yields a (kq,k,s+1)-homogeneous code on k^2 q codewords.
/// Group m shifts the first s rows by qm and repeats the identity row.
pub fn recurrent_homogeneous(base: &QaryCode) -> Result<QaryCode, ConstructError> {
    let q = base.q();
    let s = base.rows();
    let t = base.size();
    if !t.is_multiple_of(q as usize) {
        return Err(ConstructError::NotHomogeneous { q, k: 0, j: s });
    }
    let k = t / q as usize;
    if !base.is_homogeneous(k) {
        return Err(ConstructError::NotHomogeneous { q, k, j: s });
    }
    let kq = t as u32;
    let mut cols = Vec::with_capacity(k * t);
    for m in 0..k as u32 {
        for l in 0..t {
            let mut col: Vec<u32> = base.column(l).iter().map(|&b| b + q * m).collect();
            col.push(l as u32 + 1);
            cols.push(col);
        }
    }
    QaryCode::from_columns(kq, &cols).map_err(|e| ConstructError::BadParams(e.to_string()))
}

/// Three-row (q,k,3)-homogeneous code of distance 2 (hence 2-disjunct):
/// b1 = q constant blocks of length k, b2 = k copies of (1..q), b3 block m =
/// the (m-1)-step cyclic shift of (1..q). Requires q >= k+1, k >= 4.
pub fn three_row_disjunct(q: u32, k: u32) -> Result<QaryCode, ConstructError> {
    if q <= k || k < 4 {
        return Err(ConstructError::BadParams(format!(
            "need q >= k+1 and k >= 4, got q={q}, k={k}"
        )));
    }
    Ok(three_row(q, k, 1))
}

/// Three-row (q,k,3)-homogeneous 3-hash code: b3 block m is the k(m-1)-step
/// cyclic shift of (1..q). Requires q >= k^2.
pub fn three_row_hash(q: u32, k: u32) -> Result<QaryCode, ConstructError> {
    if q < k * k {
        return Err(ConstructError::BadParams(format!(
            "need q >= k^2, got q={q}, k={k}"
        )));
    }
    Ok(three_row(q, k, k))
}

fn three_row(q: u32, k: u32, shift_step: u32) -> QaryCode {
    let t = (k * q) as usize;
    let mut rows = vec![
        Vec::with_capacity(t),
        Vec::with_capacity(t),
        Vec::with_capacity(t),
    ];
    for m in 1..=q {
        for _ in 0..k {
            rows[0].push(m);
        }
    }
    for _ in 0..k {
        for a in 1..=q {
            rows[1].push(a);
        }
    }
    for m in 0..k {
        let start = (shift_step * m) % q;
        for i in 0..q {
            rows[2].push((start + i) % q + 1);
        }
    }
    QaryCode::from_rows(q, &rows).expect("entries in range")
}

/// Subset-incidence code: rows are the s-subsets and columns the
/// (s+l)-subsets of 1..n in colexicographic order; a cell is 1 iff the row
/// subset is contained in the column subset.
pub fn subset_incidence(n: usize, s: usize, l: usize) -> Result<BinaryCode, ConstructError> {
    if s < 1 || l < 1 || n <= 2 * s + l {
        return Err(ConstructError::BadParams(format!(
            "need s >= 1, l >= 1, n > 2s+l; got n={n}, s={s}, l={l}"
        )));
    }
    let rows = binomial(n as u64, s as u64);
    let cols = binomial(n as u64, (s + l) as u64);
    assert!(
        rows <= 1_000_000 && cols <= 1_000_000,
        "dimensions exceed the 10^6 cap"
    );
    let mut code = BinaryCode::zero(rows as usize, cols as usize);
    for a_rank in 0..cols {
        let a = colex_unrank(a_rank, n, s + l);
        // all s-subsets of a, ranked in the row order
        for picks in Subsets::new(s + l, s) {
            let b: Vec<usize> = picks.iter().map(|&i| a[i]).collect();
            let b_rank = crate::combin::colex_rank(&b);
            code.set(b_rank as usize, a_rank as usize, true);
        }
    }
    Ok(code)
}

/// Stack a code over its bitwise complement: 2N x t. Turns a symmetric
/// superimposed code into a plain superimposed code with the same (s, L).
pub fn complement_double(code: &BinaryCode) -> BinaryCode {
    code.vstack(&code.complement()).expect("same size")
}
