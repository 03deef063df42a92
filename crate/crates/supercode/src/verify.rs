//! Exhaustive oracles for the combinatorial code properties, plus the
//! Kautz-Singleton sufficient condition.
//!
//! Every oracle enumerates the full definition and returns either `holds` or
//! a witness that re-checks as a genuine violation. Work is estimated before
//! enumeration and gated by a budget of elementary comparisons (default
//! 10^8). Witnesses are the first violation in lexicographic enumeration
//! order (not necessarily minimal); all indices are 0-based.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::channels::{transmit, ChannelModel};
use crate::codebook::{code_stats, BinaryCode, BitColumn, QaryCode};
use crate::combin::{binomial, Subsets};

pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("estimated work {estimate} exceeds budget {budget}")]
    BudgetExceeded { estimate: u128, budget: u128 },
    #[error("property {property} needs a {needs} code")]
    TypeMismatch {
        property: &'static str,
        needs: &'static str,
    },
    #[error("code is not constant-weight (w_min={w_min}, w_max={w_max})")]
    NotConstantWeight { w_min: usize, w_max: usize },
    #[error("invalid parameters: {0}")]
    BadParams(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PropertyKind {
    /// (s, L)-list-decoding superimposed: the OR of any s columns covers at
    /// most L-1 outsiders. L = 1 is plain s-disjunct.
    Superimposed { s: usize, list: usize },
    /// All channel outputs over s-subsets are pairwise distinct.
    Design { s: usize, model: ChannelModel },
    /// Superimposed under the symmetric Boolean sum and its cover relation.
    SymmetricSuperimposed { s: usize, list: usize },
    /// q-ary: every codeword differs somewhere from every s-subset.
    QaryDisjunct { s: usize },
    /// q-ary: coordinate-set tuples distinguish all subsets of sizes <= s.
    QarySeparable { s: usize },
    /// q-ary: every s-subset has a coordinate with all symbols distinct.
    QaryHash { s: usize },
    /// All multiset sums of s columns are distinct.
    BsCode { s: usize },
}

#[derive(Debug, Clone, Copy)]
pub struct PropertySpec {
    pub kind: PropertyKind,
    pub budget: u128,
}

impl PropertySpec {
    pub fn new(kind: PropertyKind) -> Self {
        PropertySpec {
            kind,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_budget(kind: PropertyKind, budget: u128) -> Self {
        PropertySpec { kind, budget }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Witness {
    /// The OR (or diamond sum) of `subset` covers the listed outsiders.
    CoverViolation {
        subset: Vec<usize>,
        covered: Vec<usize>,
    },
    /// Two different messages produce the same output / signature / sum.
    Collision { a: Vec<usize>, b: Vec<usize> },
    /// No coordinate separates the symbols of `subset`.
    HashViolation { subset: Vec<usize> },
    /// For every coordinate, the outsider's symbol appears in the subset.
    QaryCover { outsider: usize, subset: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn ok() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }
    fn fail(w: Witness) -> Self {
        Verdict {
            holds: false,
            witness: Some(w),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum CodeRef<'a> {
    Binary(&'a BinaryCode),
    Qary(&'a QaryCode),
}

impl<'a> From<&'a BinaryCode> for CodeRef<'a> {
    fn from(c: &'a BinaryCode) -> Self {
        CodeRef::Binary(c)
    }
}

impl<'a> From<&'a QaryCode> for CodeRef<'a> {
    fn from(c: &'a QaryCode) -> Self {
        CodeRef::Qary(c)
    }
}

/// Estimated elementary comparisons for a property on a size-t code.
pub fn work_estimate(kind: PropertyKind, t: usize, n_or_j: usize) -> u128 {
    let t64 = t as u64;
    match kind {
        PropertyKind::Superimposed { s, .. } | PropertyKind::SymmetricSuperimposed { s, .. } => {
            binomial(t64, s as u64).saturating_mul((t - s) as u128)
        }
        PropertyKind::Design { s, .. } => binomial(t64, s as u64).saturating_mul(n_or_j as u128),
        PropertyKind::QaryDisjunct { s } => binomial(t64, s as u64).saturating_mul((t - s) as u128),
        PropertyKind::QarySeparable { s } => {
            let m: u128 = (1..=s).map(|n| binomial(t64, n as u64)).sum();
            let log = (128 - m.leading_zeros()) as u128;
            m.saturating_mul(n_or_j as u128 + log)
        }
        PropertyKind::QaryHash { s } => binomial(t64, s as u64).saturating_mul(n_or_j as u128),
        PropertyKind::BsCode { s } => {
            binomial(t64 + s as u64 - 1, s as u64).saturating_mul(n_or_j as u128)
        }
    }
}

fn check_budget(
    kind: PropertyKind,
    t: usize,
    n_or_j: usize,
    budget: u128,
) -> Result<(), VerifyError> {
    let estimate = work_estimate(kind, t, n_or_j);
    if estimate > budget {
        Err(VerifyError::BudgetExceeded { estimate, budget })
    } else {
        Ok(())
    }
}

/// Exact verdict for `spec` on `code` by exhaustive enumeration.
pub fn verify_property(code: CodeRef, spec: PropertySpec) -> Result<Verdict, VerifyError> {
    match (code, spec.kind) {
        (CodeRef::Binary(c), PropertyKind::Superimposed { s, list }) => {
            check_params(s, list, c.size())?;
            check_budget(spec.kind, c.size(), c.len(), spec.budget)?;
            Ok(superimposed(c, s, list, false))
        }
        (CodeRef::Binary(c), PropertyKind::SymmetricSuperimposed { s, list }) => {
            check_params(s, list, c.size())?;
            check_budget(spec.kind, c.size(), c.len(), spec.budget)?;
            Ok(superimposed(c, s, list, true))
        }
        (CodeRef::Binary(c), PropertyKind::Design { s, model }) => {
            check_params(s, 1, c.size())?;
            check_budget(spec.kind, c.size(), c.len(), spec.budget)?;
            Ok(design(c, s, model))
        }
        (CodeRef::Binary(c), PropertyKind::BsCode { s }) => {
            if s < 1 {
                return Err(VerifyError::BadParams("s must be >= 1".into()));
            }
            check_budget(spec.kind, c.size(), c.len(), spec.budget)?;
            Ok(bs_code(c, s))
        }
        (CodeRef::Qary(c), PropertyKind::QaryDisjunct { s }) => {
            check_params(s, 1, c.size())?;
            check_budget(spec.kind, c.size(), c.rows(), spec.budget)?;
            Ok(qary_disjunct(c, s))
        }
        (CodeRef::Qary(c), PropertyKind::QarySeparable { s }) => {
            check_params(s, 1, c.size())?;
            check_budget(spec.kind, c.size(), c.rows(), spec.budget)?;
            Ok(qary_separable(c, s))
        }
        (CodeRef::Qary(c), PropertyKind::QaryHash { s }) => {
            check_params(s, 1, c.size())?;
            check_budget(spec.kind, c.size(), c.rows(), spec.budget)?;
            Ok(qary_hash(c, s))
        }
        (CodeRef::Binary(_), k) => Err(VerifyError::TypeMismatch {
            property: kind_name(k),
            needs: "q-ary",
        }),
        (CodeRef::Qary(_), k) => Err(VerifyError::TypeMismatch {
            property: kind_name(k),
            needs: "binary",
        }),
    }
}

fn kind_name(kind: PropertyKind) -> &'static str {
    match kind {
        PropertyKind::Superimposed { .. } => "superimposed",
        PropertyKind::Design { .. } => "design",
        PropertyKind::SymmetricSuperimposed { .. } => "symmetric-superimposed",
        PropertyKind::QaryDisjunct { .. } => "qary-disjunct",
        PropertyKind::QarySeparable { .. } => "qary-separable",
        PropertyKind::QaryHash { .. } => "qary-hash",
        PropertyKind::BsCode { .. } => "bs-code",
    }
}

fn check_params(s: usize, list: usize, t: usize) -> Result<(), VerifyError> {
    if s < 1 || s >= t || list < 1 {
        return Err(VerifyError::BadParams(format!(
            "need 1 <= s < t and L >= 1, got s={s}, L={list}, t={t}"
        )));
    }
    Ok(())
}

/// Subsets of 0..t of size s with fixed first element `e1`, in lex order.
fn subsets_with_first(t: usize, s: usize, e1: usize) -> impl Iterator<Item = Vec<usize>> {
    Subsets::new(t - e1 - 1, s - 1).map(move |rest| {
        let mut v = Vec::with_capacity(s);
        v.push(e1);
        v.extend(rest.iter().map(|&x| x + e1 + 1));
        v
    })
}

fn superimposed(code: &BinaryCode, s: usize, list: usize, symmetric: bool) -> Verdict {
    let t = code.size();
    let hit = (0..=t - s)
        .into_par_iter()
        .filter_map(|e1| {
            for subset in subsets_with_first(t, s, e1) {
                let covered: Vec<usize> = if symmetric {
                    let cols: Vec<BitColumn> = subset.iter().map(|&u| code.column(u)).collect();
                    let sum =
                        crate::codebook::symmetric_boolean_sum(cols.iter()).expect("equal lengths");
                    (0..t)
                        .filter(|u| !subset.contains(u))
                        .filter(|&u| sum.diamond_covers(&code.column(u)).expect("equal lengths"))
                        .collect()
                } else {
                    let or = code.or_of(&subset);
                    (0..t)
                        .filter(|u| !subset.contains(u))
                        .filter(|&u| code.subset_covers(&or, u))
                        .collect()
                };
                if covered.len() >= list {
                    return Some(Witness::CoverViolation { subset, covered });
                }
            }
            None
        })
        .min_by(|a, b| witness_key(a).cmp(&witness_key(b)));
    match hit {
        Some(w) => Verdict::fail(w),
        None => Verdict::ok(),
    }
}

fn witness_key(w: &Witness) -> Vec<usize> {
    match w {
        Witness::CoverViolation { subset, .. } => subset.clone(),
        Witness::Collision { a, b } => {
            let mut k = a.clone();
            k.extend(b);
            k
        }
        Witness::HashViolation { subset } => subset.clone(),
        Witness::QaryCover { subset, outsider } => {
            let mut k = subset.clone();
            k.push(*outsider);
            k
        }
    }
}

/// Lexicographically smallest colliding pair among sorted (key, tag) items.
fn first_collision<K: Ord + Clone>(
    mut items: Vec<(K, Vec<usize>)>,
) -> Option<(Vec<usize>, Vec<usize>)> {
    items.sort();
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    let mut i = 0;
    while i < items.len() {
        let mut j = i + 1;
        while j < items.len() && items[j].0 == items[i].0 {
            j += 1;
        }
        if j - i > 1 {
            let mut group: Vec<&Vec<usize>> = items[i..j].iter().map(|(_, tag)| tag).collect();
            group.sort();
            let pair = (group[0].clone(), group[1].clone());
            if best.as_ref().is_none_or(|b| pair < *b) {
                best = Some(pair);
            }
        }
        i = j;
    }
    best
}

fn design(code: &BinaryCode, s: usize, model: ChannelModel) -> Verdict {
    let t = code.size();
    let mut items: Vec<(Vec<u16>, Vec<usize>)> = Vec::new();
    for subset in Subsets::new(t, s) {
        let z = transmit(code, &subset, model).expect("indices in range");
        items.push((z, subset));
    }
    match first_collision(items) {
        Some((a, b)) => Verdict::fail(Witness::Collision { a, b }),
        None => Verdict::ok(),
    }
}

fn bs_code(code: &BinaryCode, s: usize) -> Verdict {
    let t = code.size();
    let n = code.len();
    // non-decreasing s-tuples over 0..t
    let mut items: Vec<(Vec<u16>, Vec<usize>)> = Vec::new();
    let mut tuple = vec![0usize; s];
    loop {
        let mut sum = vec![0u16; n];
        for &u in &tuple {
            for (i, si) in sum.iter_mut().enumerate() {
                *si += code.get(i, u) as u16;
            }
        }
        items.push((sum, tuple.clone()));
        // advance non-decreasing tuple
        let mut i = s;
        loop {
            if i == 0 {
                return match first_collision(items) {
                    Some((a, b)) => Verdict::fail(Witness::Collision { a, b }),
                    None => Verdict::ok(),
                };
            }
            i -= 1;
            if tuple[i] < t - 1 {
                let v = tuple[i] + 1;
                for x in tuple.iter_mut().skip(i) {
                    *x = v;
                }
                break;
            }
        }
    }
}

fn qary_disjunct(code: &QaryCode, s: usize) -> Verdict {
    let t = code.size();
    let j = code.rows();
    let hit = (0..=t - s)
        .into_par_iter()
        .filter_map(|e1| {
            for subset in subsets_with_first(t, s, e1) {
                for u in 0..t {
                    if subset.contains(&u) {
                        continue;
                    }
                    let separated = (0..j).any(|row| {
                        let bu = code.get(row, u);
                        subset.iter().all(|&v| code.get(row, v) != bu)
                    });
                    if !separated {
                        return Some(Witness::QaryCover {
                            outsider: u,
                            subset,
                        });
                    }
                }
            }
            None
        })
        .min_by(|a, b| witness_key(a).cmp(&witness_key(b)));
    match hit {
        Some(w) => Verdict::fail(w),
        None => Verdict::ok(),
    }
}

fn qary_hash(code: &QaryCode, s: usize) -> Verdict {
    let t = code.size();
    let j = code.rows();
    let hit = (0..=t - s)
        .into_par_iter()
        .filter_map(|e1| {
            let mut seen = vec![0u32; code.q() as usize + 1];
            let mut stamp = 0u32;
            for subset in subsets_with_first(t, s, e1) {
                let all_distinct = (0..j).any(|row| {
                    stamp += 1;
                    subset.iter().all(|&u| {
                        let sym = code.get(row, u) as usize;
                        if seen[sym] == stamp {
                            false
                        } else {
                            seen[sym] = stamp;
                            true
                        }
                    })
                });
                if !all_distinct {
                    return Some(Witness::HashViolation { subset });
                }
            }
            None
        })
        .min_by(|a, b| witness_key(a).cmp(&witness_key(b)));
    match hit {
        Some(w) => Verdict::fail(w),
        None => Verdict::ok(),
    }
}

/// Coordinate-set signature: per row the sorted distinct symbols, with 0 as
/// separator (symbols are >= 1).
fn coordinate_signature(code: &QaryCode, subset: &[usize]) -> Vec<u32> {
    let mut sig = Vec::with_capacity(code.rows() * (subset.len() + 1));
    for row in 0..code.rows() {
        let mut syms: Vec<u32> = subset.iter().map(|&u| code.get(row, u)).collect();
        syms.sort_unstable();
        syms.dedup();
        sig.extend(syms);
        sig.push(0);
    }
    sig
}

fn qary_separable(code: &QaryCode, s: usize) -> Verdict {
    let t = code.size();
    let mut items: Vec<(Vec<u32>, Vec<usize>)> = Vec::new();
    for size in 1..=s {
        for subset in Subsets::new(t, size) {
            items.push((coordinate_signature(code, &subset), subset));
        }
    }
    match first_collision(items) {
        Some((a, b)) => Verdict::fail(Witness::Collision { a, b }),
        None => Verdict::ok(),
    }
}

/// Genuine-violation re-check for a witness produced by (or claimed for)
/// `kind` on `code`.
pub fn witness_is_genuine(code: CodeRef, kind: PropertyKind, witness: &Witness) -> bool {
    match (code, kind, witness) {
        (
            CodeRef::Binary(c),
            PropertyKind::Superimposed { s, list },
            Witness::CoverViolation { subset, covered },
        ) => {
            subset.len() == s && covered.len() >= list && {
                let or = c.or_of(subset);
                covered
                    .iter()
                    .all(|&u| !subset.contains(&u) && c.subset_covers(&or, u))
            }
        }
        (
            CodeRef::Binary(c),
            PropertyKind::SymmetricSuperimposed { s, list },
            Witness::CoverViolation { subset, covered },
        ) => {
            subset.len() == s && covered.len() >= list && {
                let cols: Vec<BitColumn> = subset.iter().map(|&u| c.column(u)).collect();
                let sum =
                    crate::codebook::symmetric_boolean_sum(cols.iter()).expect("equal lengths");
                covered.iter().all(|&u| {
                    !subset.contains(&u) && sum.diamond_covers(&c.column(u)).expect("equal lengths")
                })
            }
        }
        (CodeRef::Binary(c), PropertyKind::Design { s, model }, Witness::Collision { a, b }) => {
            a != b
                && a.len() == s
                && b.len() == s
                && transmit(c, a, model).unwrap() == transmit(c, b, model).unwrap()
        }
        (CodeRef::Qary(c), PropertyKind::QarySeparable { s }, Witness::Collision { a, b }) => {
            a != b
                && a.len() <= s
                && b.len() <= s
                && coordinate_signature(c, a) == coordinate_signature(c, b)
        }
        (CodeRef::Qary(c), PropertyKind::QaryHash { s }, Witness::HashViolation { subset }) => {
            subset.len() == s
                && (0..c.rows()).all(|row| {
                    let mut syms: Vec<u32> = subset.iter().map(|&u| c.get(row, u)).collect();
                    syms.sort_unstable();
                    syms.dedup();
                    syms.len() < s
                })
        }
        (
            CodeRef::Qary(c),
            PropertyKind::QaryDisjunct { s },
            Witness::QaryCover { outsider, subset },
        ) => {
            subset.len() == s
                && !subset.contains(outsider)
                && (0..c.rows()).all(|row| {
                    let bu = c.get(row, *outsider);
                    subset.iter().any(|&v| c.get(row, v) == bu)
                })
        }
        (CodeRef::Binary(c), PropertyKind::BsCode { .. }, Witness::Collision { a, b }) => {
            let sum = |tuple: &[usize]| -> Vec<u16> {
                let mut acc = vec![0u16; c.len()];
                for &u in tuple {
                    for (i, x) in acc.iter_mut().enumerate() {
                        *x += c.get(i, u) as u16;
                    }
                }
                acc
            };
            a != b && sum(a) == sum(b)
        }
        _ => false,
    }
}

/// Constant-weight Kautz-Singleton strength floor((w-1)/lambda); codes with
/// lambda = 0 have pairwise disjoint supports and are (t-1)-disjunct.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KsStrength {
    pub strength: usize,
    pub distinct_support: bool,
}

pub fn ks_strength(code: &BinaryCode) -> Result<KsStrength, VerifyError> {
    let stats = code_stats(code);
    if stats.w_min != stats.w_max {
        return Err(VerifyError::NotConstantWeight {
            w_min: stats.w_min,
            w_max: stats.w_max,
        });
    }
    if stats.lambda_max == 0 {
        return Ok(KsStrength {
            strength: code.size() - 1,
            distinct_support: true,
        });
    }
    Ok(KsStrength {
        strength: (stats.w_min - 1) / stats.lambda_max,
        distinct_support: false,
    })
}

/// Are all Boolean sums of at most s columns distinct? (Small codes only:
/// no budget gate.)
pub fn distinct_bool_sums(code: &BinaryCode, s: usize) -> bool {
    let t = code.size();
    let mut seen: Vec<(BitColumn, usize)> = Vec::new();
    for size in 1..=s {
        for subset in Subsets::new(t, size) {
            seen.push((code.or_of(&subset), size));
        }
    }
    let mut sums: Vec<&BitColumn> = seen.iter().map(|(c, _)| c).collect();
    sums.sort();
    sums.windows(2).all(|w| w[0] != w[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codebook::BinaryCode;

    fn identity(t: usize) -> BinaryCode {
        let mut c = BinaryCode::zero(t, t);
        for i in 0..t {
            c.set(i, i, true);
        }
        c
    }

    #[test]
    fn identity_is_maximally_disjunct() {
        let c = identity(5);
        let v = verify_property(
            (&c).into(),
            PropertySpec::new(PropertyKind::Superimposed { s: 4, list: 1 }),
        )
        .unwrap();
        assert!(v.holds);
    }

    #[test]
    fn cover_violation_witness_rechecks() {
        // column 2 = column 0 OR column 1
        let c = BinaryCode::from_rows(&[vec![1, 0, 1], vec![0, 1, 1], vec![0, 0, 0]]).unwrap();
        let v = verify_property(
            (&c).into(),
            PropertySpec::new(PropertyKind::Superimposed { s: 2, list: 1 }),
        )
        .unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert!(witness_is_genuine(
            (&c).into(),
            PropertyKind::Superimposed { s: 2, list: 1 },
            &w
        ));
        assert_eq!(
            w,
            Witness::CoverViolation {
                subset: vec![0, 1],
                covered: vec![2]
            }
        );
    }

    #[test]
    fn budget_gate_reports_estimate() {
        let c = identity(2000);
        let err = verify_property(
            (&c).into(),
            PropertySpec::new(PropertyKind::Superimposed { s: 3, list: 1 }),
        )
        .unwrap_err();
        match err {
            VerifyError::BudgetExceeded { estimate, budget } => {
                assert_eq!(budget, DEFAULT_BUDGET);
                assert_eq!(estimate, binomial(2000, 3) * 1997);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn design_collision_on_duplicate_column() {
        let mut c = identity(4);
        // duplicate column: 3 == 2
        c.set(3, 3, false);
        c.set(2, 3, true);
        let v = verify_property(
            (&c).into(),
            PropertySpec::new(PropertyKind::Design {
                s: 2,
                model: ChannelModel::Disjunct,
            }),
        )
        .unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert!(witness_is_genuine(
            (&c).into(),
            PropertyKind::Design {
                s: 2,
                model: ChannelModel::Disjunct
            },
            &w
        ));
    }

    #[test]
    fn identity_is_bs_code_small() {
        let c = identity(4);
        let v = verify_property(
            (&c).into(),
            PropertySpec::new(PropertyKind::BsCode { s: 2 }),
        )
        .unwrap();
        assert!(v.holds);
        // all-ones column twice vs two distinct unit columns collide only in
        // a code built to collide
        let bad = BinaryCode::from_rows(&[vec![1, 1, 1], vec![0, 0, 0]]).unwrap();
        let v = verify_property(
            (&bad).into(),
            PropertySpec::new(PropertyKind::BsCode { s: 2 }),
        )
        .unwrap();
        assert!(!v.holds); // columns 0 and 1 are equal
    }

    #[test]
    fn ks_strength_examples() {
        // w=7, lambda=2 -> 3 is exercised on the real RS code in integration
        // tests; here the degenerate cases.
        let id = identity(4); // w=1, lambda=0
        let ks = ks_strength(&id).unwrap();
        assert!(ks.distinct_support);
        assert_eq!(ks.strength, 3);

        let ones = BinaryCode::from_rows(&[vec![1, 1]]).unwrap(); // w=1, lambda=1
        let ks = ks_strength(&ones).unwrap();
        assert_eq!(ks.strength, 0);

        let uneven = BinaryCode::from_rows(&[vec![1, 1], vec![1, 0]]).unwrap();
        assert!(matches!(
            ks_strength(&uneven),
            Err(VerifyError::NotConstantWeight { .. })
        ));
    }

    #[test]
    fn type_mismatch() {
        let c = identity(3);
        assert!(matches!(
            verify_property(
                (&c).into(),
                PropertySpec::new(PropertyKind::QaryHash { s: 2 })
            ),
            Err(VerifyError::TypeMismatch { .. })
        ));
    }

    #[test]
    fn symmetric_sum_distinguishes_where_plain_fails() {
        // column 1 covers column 0, but the diamond sum of either single
        // column pins both positions, so the symmetric property holds
        let c = BinaryCode::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap();
        let plain = verify_property(
            (&c).into(),
            PropertySpec::new(PropertyKind::Superimposed { s: 1, list: 1 }),
        )
        .unwrap();
        assert!(!plain.holds);
        let symmetric = verify_property(
            (&c).into(),
            PropertySpec::new(PropertyKind::SymmetricSuperimposed { s: 1, list: 1 }),
        )
        .unwrap();
        assert!(symmetric.holds);
    }

    #[test]
    fn distinct_sums_helper() {
        assert!(distinct_bool_sums(&identity(4), 2));
        let c = BinaryCode::from_rows(&[vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        // {0,1} and {2} have the same OR
        assert!(!distinct_bool_sums(&c, 2));
    }
}
