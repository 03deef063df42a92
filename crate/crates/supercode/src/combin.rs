//! Small combinatorial helpers shared by the oracles and bound calculators.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// C(n, k) saturating at u128::MAX; 0 when k > n.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

pub fn binomial_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// log2 of a positive BigUint, accurate enough for rate computations.
pub fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 53 {
        let v: u64 = x.try_into().expect("fits");
        return (v as f64).log2();
    }
    let shift = bits - 53;
    let top: u64 = (x >> shift).try_into().expect("53 bits fit");
    (top as f64).log2() + shift as f64
}

/// Iterator over k-subsets of 0..n in lexicographic order.
pub struct Subsets {
    n: usize,
    k: usize,
    cur: Vec<usize>,
    done: bool,
}

impl Subsets {
    pub fn new(n: usize, k: usize) -> Self {
        let done = k > n;
        Subsets {
            n,
            k,
            cur: (0..k).collect(),
            done,
        }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        if self.k == 0 {
            self.done = true;
            return Some(out);
        }
        // advance
        let mut i = self.k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.cur[i] < self.n - self.k + i {
                self.cur[i] += 1;
                for j in i + 1..self.k {
                    self.cur[j] = self.cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// k-subsets of 0..n in colexicographic order (rank r has sum C(a_i, i+1)
/// over sorted elements a_0 < a_1 < ...).
pub fn colex_unrank(mut rank: u128, n: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0usize; k];
    let mut i = k;
    while i > 0 {
        // largest a with C(a, i) <= rank
        let mut a = i - 1;
        while a + 1 < n && binomial((a + 1) as u64, i as u64) <= rank {
            a += 1;
        }
        rank -= binomial(a as u64, i as u64);
        out[i - 1] = a;
        i -= 1;
    }
    out
}

pub fn colex_rank(subset: &[usize]) -> u128 {
    subset
        .iter()
        .enumerate()
        .map(|(i, &a)| binomial(a as u64, i as u64 + 1))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(1331, 3), 392_105_945);
    }

    #[test]
    fn subsets_lex() {
        let all: Vec<Vec<usize>> = Subsets::new(4, 2).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(Subsets::new(5, 0).count(), 1);
        assert_eq!(Subsets::new(5, 5).count(), 1);
        assert_eq!(Subsets::new(3, 4).count(), 0);
    }

    #[test]
    fn colex_round_trip() {
        let n = 7;
        for k in 1..=4usize {
            for r in 0..binomial(n as u64, k as u64) {
                let s = colex_unrank(r, n, k);
                assert!(s.windows(2).all(|w| w[0] < w[1]));
                assert_eq!(colex_rank(&s), r);
            }
        }
    }

    #[test]
    fn log2_big_matches_f64() {
        let x = BigUint::from(12345u64);
        assert!((log2_big(&x) - (12345f64).log2()).abs() < 1e-12);
        let big = BigUint::from(10u64).pow(40);
        assert!((log2_big(&big) - 40.0 * 10f64.log2()).abs() < 1e-9);
    }
}
