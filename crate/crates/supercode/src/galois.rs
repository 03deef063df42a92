//! Exact arithmetic in GF(q) for prime powers q <= 2^16.
//!
//! Elements are encoded as integers `0..q-1` read as base-p digit tuples
//! (digit i = coefficient of x^i). For extension fields the modulus is the
//! irreducible monic polynomial of degree r with the smallest integer
//! encoding, found by deterministic search at construction; this makes every
//! derived codeword bit-reproducible across runs.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} exceeds 2^16")]
    TooLarge(u64),
    #[error("element {element} out of range for GF({q})")]
    ElementOutOfRange { element: u64, q: u32 },
}

/// GF(p^r) with on-the-fly digit-tuple arithmetic.
#[derive(Debug, Clone)]
pub struct Field {
    q: u32,
    p: u32,
    r: u32,
    /// Coefficients of the monic irreducible modulus, degree 0..=r.
    /// Empty for prime fields (r = 1).
    modulus: Vec<u32>,
}

fn factor_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut n = q;
    let mut p = 0u64;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            p = d;
            while n.is_multiple_of(d) {
                n /= d;
            }
            break;
        }
        d += 1;
    }
    if p == 0 {
        return Some((q, 1)); // q itself prime
    }
    if n != 1 {
        return None; // second prime factor
    }
    let mut r = 0u32;
    let mut m = 1u64;
    while m < q {
        m *= p;
        r += 1;
    }
    (m == q).then_some((p, r))
}

/// Polynomials over GF(p), little-endian coefficient vectors.
mod gfp_poly {
    pub fn trim(v: &mut Vec<u32>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + ai as u64 * bj as u64) % p as u64;
            }
        }
        let mut out: Vec<u32> = out.into_iter().map(|x| x as u32).collect();
        trim(&mut out);
        out
    }

    /// Remainder of a by monic b.
    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut a: Vec<u32> = a.to_vec();
        trim(&mut a);
        let db = b.len() - 1;
        debug_assert_eq!(b[db], 1, "divisor must be monic");
        while a.len() > db {
            let lead = *a.last().unwrap() as u64;
            let shift = a.len() - 1 - db;
            if lead != 0 {
                for (i, &bi) in b.iter().enumerate() {
                    let idx = shift + i;
                    let sub = (lead * bi as u64) % p as u64;
                    let cur = a[idx] as u64;
                    a[idx] = ((cur + p as u64 - sub) % p as u64) as u32;
                }
            }
            a.pop();
            trim(&mut a);
        }
        a
    }
}

fn encode(poly: &[u32], p: u32) -> u32 {
    let mut v = 0u64;
    for &c in poly.iter().rev() {
        v = v * p as u64 + c as u64;
    }
    v as u32
}

fn decode(mut e: u32, p: u32, r: u32) -> Vec<u32> {
    let mut out = vec![0u32; r as usize];
    for d in out.iter_mut() {
        *d = e % p;
        e /= p;
    }
    out
}

/// Irreducibility of a monic polynomial over GF(p) by trial division by all
/// monic polynomials of degree 1..=deg/2.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        // all monic polynomials of degree d: encodings 0..p^d for the low part
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut g = decode(low as u32, p, d as u32);
            g.push(1);
            if gfp_poly::rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, r: u32) -> Vec<u32> {
    // monic degree-r polynomials ordered by the integer encoding of their
    // lower coefficients
    let count = (p as u64).pow(r);
    for low in 0..count {
        let mut f = decode(low as u32, p, r);
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

impl Field {
    pub fn new(q: u32) -> Result<Field, FieldError> {
        if q as u64 > 65536 {
            return Err(FieldError::TooLarge(q as u64));
        }
        let (p, r) = factor_prime_power(q as u64).ok_or(FieldError::NotPrimePower(q as u64))?;
        let p = p as u32;
        let modulus = if r == 1 {
            vec![]
        } else {
            smallest_irreducible(p, r)
        };
        let f = Field { q, p, r, modulus };
        f.spot_check();
        Ok(f)
    }

    pub fn q(&self) -> u32 {
        self.q
    }
    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn r(&self) -> u32 {
        self.r
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    fn check(&self, a: u32) -> Result<u32, FieldError> {
        if a < self.q {
            Ok(a)
        } else {
            Err(FieldError::ElementOutOfRange {
                element: a as u64,
                q: self.q,
            })
        }
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.q && b < self.q);
        if self.r == 1 {
            return ((a as u64 + b as u64) % self.p as u64) as u32;
        }
        let (mut x, y) = (decode(a, self.p, self.r), decode(b, self.p, self.r));
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = (*xi + *yi) % self.p;
        }
        encode(&x, self.p)
    }

    pub fn neg(&self, a: u32) -> u32 {
        debug_assert!(a < self.q);
        if self.r == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let mut x = decode(a, self.p, self.r);
        for xi in x.iter_mut() {
            *xi = (self.p - *xi) % self.p;
        }
        encode(&x, self.p)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.q && b < self.q);
        if self.r == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let (x, y) = (decode(a, self.p, self.r), decode(b, self.p, self.r));
        let prod = gfp_poly::mul(&x, &y, self.p);
        let rem = gfp_poly::rem(&prod, &self.modulus, self.p);
        encode(&rem, self.p)
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat: a^(q-2).
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "zero has no inverse in GF({})", self.q);
        self.pow(a, self.q as u64 - 2)
    }

    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    /// Horner evaluation of sum coeffs[i] x^i.
    pub fn eval_poly(&self, coeffs: &[u32], x: u32) -> Result<u32, FieldError> {
        assert!(!coeffs.is_empty(), "eval_poly needs a nonempty polynomial");
        self.check(x)?;
        for &c in coeffs {
            self.check(c)?;
        }
        let mut acc = 0u32;
        for &c in coeffs.iter().rev() {
            acc = self.add(self.mul(acc, x), c);
        }
        Ok(acc)
    }

    /// Consistency probe run once at construction: commutativity on all pairs
    /// and associativity/distributivity on a triple sweep for q <= 16, on a
    /// strided sample for larger q <= 64.
    fn spot_check(&self) {
        if self.q > 64 {
            return;
        }
        let stride = if self.q <= 16 { 1 } else { 5 };
        for a in (0..self.q).step_by(stride) {
            for b in (0..self.q).step_by(stride) {
                assert_eq!(self.add(a, b), self.add(b, a));
                assert_eq!(self.mul(a, b), self.mul(b, a));
                for c in (0..self.q).step_by(stride) {
                    assert_eq!(self.mul(a, self.mul(b, c)), self.mul(self.mul(a, b), c));
                    assert_eq!(
                        self.mul(a, self.add(b, c)),
                        self.add(self.mul(a, b), self.mul(a, c))
                    );
                }
            }
        }
    }
}
