//! Decoders for all channel models: cover decoding for the disjunct channel,
//! exhaustive design decoding, maximum-likelihood decoding, and the universal
//! decoder that scores messages through their composition only.
//!
//! Score comparisons run in the log domain with a relative tie tolerance of
//! 1e-9; ties make the result ambiguous, and ambiguity counts as an error in
//! the Monte-Carlo experiments.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::channels::{
    sample_ensemble, sample_mac, transmit, ChannelModel, EnsembleSpec, SymmetricMac,
};
use crate::codebook::{BinaryCode, BitColumn, Composition};
use crate::combin::{binomial, Subsets};
use crate::rng::{mix, stream};

pub const CANDIDATE_CAP: usize = 64;
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecodingError {
    #[error("estimated work {estimate} exceeds budget {budget}")]
    BudgetExceeded { estimate: u128, budget: u128 },
    #[error("invalid parameters: {0}")]
    BadParams(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DecodeStatus {
    Unique,
    Ambiguous,
    None,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecodeResult {
    pub status: DecodeStatus,
    /// The decoded subset when unique.
    pub message: Option<Vec<usize>>,
    /// Tied candidates when ambiguous, capped at CANDIDATE_CAP.
    pub candidates: Vec<Vec<usize>>,
    pub overflow: bool,
}

impl DecodeResult {
    fn from_candidates(mut candidates: Vec<Vec<usize>>, overflow: bool) -> Self {
        match candidates.len() {
            0 => DecodeResult {
                status: DecodeStatus::None,
                message: None,
                candidates,
                overflow,
            },
            1 if !overflow => DecodeResult {
                status: DecodeStatus::Unique,
                message: Some(candidates.remove(0)),
                candidates: Vec::new(),
                overflow,
            },
            _ => DecodeResult {
                status: DecodeStatus::Ambiguous,
                message: None,
                candidates,
                overflow,
            },
        }
    }
}

/// All columns covered by the outcome word y. For an s-disjunct code and a
/// Boolean sum of at most s columns this is exactly the sent subset; on
/// other inputs it may over-report. At most t cover tests.
pub fn cover_decode(code: &BinaryCode, y: &BitColumn) -> Vec<usize> {
    (0..code.size())
        .filter(|&u| code.subset_covers(y, u))
        .collect()
}

fn subset_budget(t: usize, s: usize, n: usize, budget: u128) -> Result<(), DecodingError> {
    let estimate = binomial(t as u64, s as u64).saturating_mul(n as u128);
    if estimate > budget {
        return Err(DecodingError::BudgetExceeded { estimate, budget });
    }
    Ok(())
}

/// Brute-force decoding for a deterministic channel: the messages whose
/// outputs equal z.
pub fn design_decode(
    code: &BinaryCode,
    z: &[u16],
    s: usize,
    model: ChannelModel,
    budget: u128,
) -> Result<DecodeResult, DecodingError> {
    if z.len() != code.len() {
        return Err(DecodingError::BadParams(format!(
            "outcome length {} != code length {}",
            z.len(),
            code.len()
        )));
    }
    subset_budget(code.size(), s, code.len(), budget)?;
    let mut candidates = Vec::new();
    let mut overflow = false;
    // OR-channel outcomes compare word-wise against the packed target
    let packed_target = if model == ChannelModel::Disjunct {
        if z.iter().any(|&v| v > 1) {
            return Ok(DecodeResult::from_candidates(candidates, false));
        }
        let mut y = BitColumn::zero(code.len());
        for (i, &v) in z.iter().enumerate() {
            if v == 1 {
                y.set(i, true);
            }
        }
        Some(y)
    } else {
        None
    };
    let mut buf = BitColumn::zero(code.len());
    for subset in Subsets::new(code.size(), s) {
        let matches = match &packed_target {
            Some(y) => {
                code.or_into(&subset, &mut buf);
                buf == *y
            }
            None => transmit(code, &subset, model).expect("indices in range") == z,
        };
        if matches {
            if candidates.len() == CANDIDATE_CAP {
                overflow = true;
                break;
            }
            candidates.push(subset);
        }
    }
    Ok(DecodeResult::from_candidates(candidates, overflow))
}

fn near_equal(a: f64, b: f64) -> bool {
    (a - b).abs() <= TIE_TOLERANCE * (1.0 + a.abs().max(b.abs()))
}

/// Maximal-score candidates under `score`, with tie tolerance.
fn argmax_subsets<F>(t: usize, s: usize, score: F) -> DecodeResult
where
    F: Fn(&[usize]) -> f64,
{
    let mut best = f64::NEG_INFINITY;
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    let mut overflow = false;
    for subset in Subsets::new(t, s) {
        let v = score(&subset);
        if v == f64::NEG_INFINITY {
            continue;
        }
        if best == f64::NEG_INFINITY {
            best = v;
            candidates.push(subset);
        } else if near_equal(v, best) {
            if candidates.len() == CANDIDATE_CAP {
                overflow = true;
            } else {
                candidates.push(subset);
            }
        } else if v > best {
            best = v;
            candidates.clear();
            candidates.push(subset);
            overflow = false;
        }
    }
    DecodeResult::from_candidates(candidates, overflow)
}

/// Maximum-likelihood decoding: maximize sum_i ln P(z_i | ones_i(e)).
pub fn ml_decode(
    code: &BinaryCode,
    z: &[u16],
    mac: &SymmetricMac,
    s: usize,
    budget: u128,
) -> Result<DecodeResult, DecodingError> {
    if z.len() != code.len() {
        return Err(DecodingError::BadParams(format!(
            "outcome length {} != code length {}",
            z.len(),
            code.len()
        )));
    }
    if s != mac.s {
        return Err(DecodingError::BadParams(format!(
            "MAC has s={}, decoding with s={s}",
            mac.s
        )));
    }
    subset_budget(code.size(), s, code.len(), budget)?;
    Ok(argmax_subsets(code.size(), s, |subset| {
        let mut acc = 0.0;
        for (i, &zi) in z.iter().enumerate() {
            let ones = subset.iter().filter(|&&u| code.get(i, u)).count();
            let p = mac.prob(zi, ones);
            if p == 0.0 {
                return f64::NEG_INFINITY;
            }
            acc += p.ln();
        }
        acc
    }))
}

/// log of the universal score D_Q for a composition:
/// sum ln n(pattern,z)! - sum_k sum_{x_k} n(x_k) ln Q(x_k).
pub fn u_score(comp: &Composition, q0: f64, ln_fact: &[f64]) -> f64 {
    let mut acc = 0.0;
    for (_, _, n) in comp.iter() {
        acc += ln_fact[n as usize];
    }
    let (lq0, lq1) = (q0.ln(), (1.0 - q0).ln());
    for k in 0..comp.inputs() {
        acc -= comp.marginal_input(k, false) as f64 * lq0;
        acc -= comp.marginal_input(k, true) as f64 * lq1;
    }
    acc
}

fn ln_factorials(n: usize) -> Vec<f64> {
    let mut v = Vec::with_capacity(n + 1);
    v.push(0.0);
    for i in 1..=n {
        v.push(v[i - 1] + (i as f64).ln());
    }
    v
}

/// Universal decoding: decode to the message whose composition score
/// strictly exceeds all others; any tie is ambiguous. Depends only on the
/// composition, never on the channel table.
pub fn u_decode(
    code: &BinaryCode,
    z: &[u16],
    z_size: usize,
    q0: f64,
    s: usize,
    budget: u128,
) -> Result<DecodeResult, DecodingError> {
    if !(q0 > 0.0 && q0 < 1.0) {
        return Err(DecodingError::BadParams(format!(
            "need 0 < Q(0) < 1, got {q0}"
        )));
    }
    if z.len() != code.len() {
        return Err(DecodingError::BadParams(format!(
            "outcome length {} != code length {}",
            z.len(),
            code.len()
        )));
    }
    subset_budget(code.size(), s, code.len(), budget)?;
    let ln_fact = ln_factorials(code.len());
    Ok(argmax_subsets(code.size(), s, |subset| {
        let comp = Composition::of(code, subset, z, z_size).expect("length checked");
        u_score(&comp, q0, &ln_fact)
    }))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Decoder {
    Ml,
    /// Universal decoding with parameter Q(0).
    Universal {
        q0: f64,
    },
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ErrorRateReport {
    pub trials: u64,
    pub errors: u64,
    pub p_hat: f64,
    pub wilson_low: f64,
    pub wilson_high: f64,
}

fn wilson(errors: u64, trials: u64) -> (f64, f64) {
    let n = trials as f64;
    let p = errors as f64 / n;
    let z = 1.959963984540054; // 95%
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// Monte-Carlo estimate of the average error probability. By default a
/// fresh code is drawn per trial (averaging over the ensemble); with
/// `fixed_code` the code drawn from (spec.seed) is reused. Messages are
/// uniform s-subsets. Ambiguous decodes count as errors.
#[allow(clippy::too_many_arguments)]
pub fn error_rate(
    mac: &SymmetricMac,
    spec: &EnsembleSpec,
    decoder: Decoder,
    s: usize,
    trials: u64,
    seed: u64,
    fixed_code: bool,
    budget: u128,
) -> Result<ErrorRateReport, DecodingError> {
    if trials < 1 {
        return Err(DecodingError::BadParams("trials must be >= 1".into()));
    }
    subset_budget(spec.t, s, spec.n, budget)?;
    let fixed = if fixed_code {
        Some(sample_ensemble(spec).map_err(|e| DecodingError::BadParams(e.to_string()))?)
    } else {
        None
    };
    const MESSAGE_STREAM: u64 = 1 << 62;
    const NOISE_STREAM: u64 = (1 << 62) + 1;
    let errors: u64 = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let trial_seed = mix(seed, trial);
            let code = match &fixed {
                Some(c) => c.clone(),
                None => {
                    let mut s2 = *spec;
                    s2.seed = trial_seed;
                    sample_ensemble(&s2).expect("validated above")
                }
            };
            // uniform s-subset by partial Fisher-Yates
            let mut rng = stream(trial_seed, MESSAGE_STREAM);
            let mut idx: Vec<usize> = (0..spec.t).collect();
            for i in 0..s {
                let j = rand::Rng::gen_range(&mut rng, i..spec.t);
                idx.swap(i, j);
            }
            let mut message: Vec<usize> = idx[..s].to_vec();
            message.sort_unstable();

            let z = sample_mac(mac, &code, &message, mix(trial_seed, NOISE_STREAM))
                .expect("indices valid");
            let result = match decoder {
                Decoder::Ml => ml_decode(&code, &z, mac, s, u128::MAX),
                Decoder::Universal { q0 } => u_decode(&code, &z, mac.z_size(), q0, s, u128::MAX),
            }
            .expect("budget unlimited inside trials");
            let correct = result.status == DecodeStatus::Unique
                && result.message.as_deref() == Some(&message);
            (!correct) as u64
        })
        .sum();
    let (lo, hi) = wilson(errors, trials);
    Ok(ErrorRateReport {
        trials,
        errors,
        p_hat: errors as f64 / trials as f64,
        wilson_low: lo,
        wilson_high: hi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::EnsembleKind;
    use crate::codebook::boolean_sum;

    fn identity(t: usize) -> BinaryCode {
        let mut c = BinaryCode::zero(t, t);
        for i in 0..t {
            c.set(i, i, true);
        }
        c
    }

    #[test]
    fn cover_decode_identity() {
        let c = identity(4);
        let y = BitColumn::from_bits(&[1, 0, 1, 0]);
        assert_eq!(cover_decode(&c, &y), vec![0, 2]);
    }

    #[test]
    fn cover_decode_over_reports_on_non_disjunct() {
        let c = BinaryCode::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap();
        let y = boolean_sum([&c.column(1)]).unwrap();
        assert_eq!(cover_decode(&c, &y), vec![0, 1]);
    }

    #[test]
    fn design_decode_identity_adder() {
        let c = identity(3);
        let r = design_decode(&c, &[1, 1, 0], 2, ChannelModel::Adder, u128::MAX).unwrap();
        assert_eq!(r.status, DecodeStatus::Unique);
        assert_eq!(r.message, Some(vec![0, 1]));
    }

    #[test]
    fn design_decode_ambiguous_on_duplicate_column() {
        let mut c = identity(3);
        c.set(2, 2, false);
        c.set(1, 2, true); // column 2 == column 1
        let z = transmit(&c, &[0, 1], ChannelModel::Disjunct).unwrap();
        let r = design_decode(&c, &z, 2, ChannelModel::Disjunct, u128::MAX).unwrap();
        assert_eq!(r.status, DecodeStatus::Ambiguous);
        assert_eq!(r.candidates, vec![vec![0, 1], vec![0, 2]]);
    }

    #[test]
    fn design_decode_none_when_unreachable() {
        let c = identity(3);
        let r = design_decode(&c, &[1, 1, 1], 2, ChannelModel::Disjunct, u128::MAX).unwrap();
        assert_eq!(r.status, DecodeStatus::None);
    }

    #[test]
    fn budget_gate() {
        let c = identity(200);
        assert!(matches!(
            design_decode(&c, &vec![0; 200], 4, ChannelModel::Disjunct, 1000),
            Err(DecodingError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn ml_agrees_with_design_on_deterministic_mac() {
        let c = BinaryCode::from_rows(&[
            vec![1, 0, 1, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 1],
            vec![1, 1, 0, 0],
        ])
        .unwrap();
        let mac = SymmetricMac::deterministic(ChannelModel::Disjunct, 2);
        for subset in Subsets::new(4, 2) {
            let z = transmit(&c, &subset, ChannelModel::Disjunct).unwrap();
            let a = design_decode(&c, &z, 2, ChannelModel::Disjunct, u128::MAX).unwrap();
            let b = ml_decode(&c, &z, &mac, 2, u128::MAX).unwrap();
            assert_eq!(a.status, b.status, "subset {subset:?}");
            if a.status == DecodeStatus::Unique {
                assert_eq!(a.message, b.message);
            } else {
                assert_eq!(a.candidates, b.candidates);
            }
        }
    }

    #[test]
    fn ml_flat_rows_tie() {
        let mac = SymmetricMac::new(
            1,
            vec!["0".into(), "1".into()],
            vec![vec![0.5, 0.5], vec![0.5, 0.5]],
        )
        .unwrap();
        let c = identity(3);
        let r = ml_decode(&c, &[1, 0, 0], &mac, 1, u128::MAX).unwrap();
        assert_eq!(r.status, DecodeStatus::Ambiguous);
        assert_eq!(r.candidates.len(), 3);
    }

    #[test]
    fn u_decode_trivial_and_duplicate_cases() {
        // t = s: single message
        let c = BinaryCode::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        let r = u_decode(&c, &[1, 1], 2, 0.5, 2, u128::MAX).unwrap();
        assert_eq!(r.status, DecodeStatus::Unique);
        assert_eq!(r.message, Some(vec![0, 1]));

        // duplicate columns share every composition, so they always tie;
        // a column with a less concentrated joint table scores lower
        let c =
            BinaryCode::from_rows(&[vec![1, 1, 1], vec![1, 1, 1], vec![0, 0, 1], vec![0, 0, 0]])
                .unwrap();
        let z = transmit(&c, &[0], ChannelModel::Disjunct).unwrap();
        let r = u_decode(&c, &z, 2, 0.5, 1, u128::MAX).unwrap();
        assert_eq!(r.status, DecodeStatus::Ambiguous);
        assert_eq!(r.candidates, vec![vec![0], vec![1]]);
    }

    #[test]
    fn u_decode_relabeling_invariance() {
        let c = BinaryCode::from_rows(&[
            vec![1, 0, 1, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 1],
            vec![1, 1, 0, 1],
        ])
        .unwrap();
        let z = vec![0u16, 1, 1, 0];
        let swapped: Vec<u16> = z.iter().map(|&v| 1 - v).collect();
        let a = u_decode(&c, &z, 2, 0.3, 2, u128::MAX).unwrap();
        let b = u_decode(&c, &swapped, 2, 0.3, 2, u128::MAX).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn error_rate_noiseless_is_zero() {
        let mac = SymmetricMac::deterministic(ChannelModel::Adder, 2);
        let spec = EnsembleSpec {
            kind: EnsembleKind::Cwe,
            q1: 0.45,
            n: 24,
            t: 6,
            seed: 3,
        };
        // the adder output of distinct subsets of a CWE code can collide,
        // but with n=24 it rarely does; use ML and demand a small rate
        let rep = error_rate(&mac, &spec, Decoder::Ml, 2, 60, 17, false, u128::MAX).unwrap();
        assert!(rep.p_hat < 0.2, "p_hat = {}", rep.p_hat);
        // replaying the same seed reproduces the exact count
        let rep2 = error_rate(&mac, &spec, Decoder::Ml, 2, 60, 17, false, u128::MAX).unwrap();
        assert_eq!(rep.errors, rep2.errors);
    }

    #[test]
    fn candidate_cap_sets_overflow() {
        // an all-zero code: every single column reproduces the zero outcome
        let c = BinaryCode::zero(1, CANDIDATE_CAP + 6);
        let r = design_decode(&c, &[0], 1, ChannelModel::Disjunct, u128::MAX).unwrap();
        assert_eq!(r.status, DecodeStatus::Ambiguous);
        assert!(r.overflow);
        assert_eq!(r.candidates.len(), CANDIDATE_CAP);
    }

    #[test]
    fn fixed_code_mode_is_deterministic() {
        let mac = SymmetricMac::deterministic(ChannelModel::Adder, 2);
        let spec = EnsembleSpec {
            kind: EnsembleKind::Cwe,
            q1: 0.4,
            n: 16,
            t: 5,
            seed: 21,
        };
        let a = error_rate(&mac, &spec, Decoder::Ml, 2, 30, 4, true, u128::MAX).unwrap();
        let b = error_rate(&mac, &spec, Decoder::Ml, 2, 30, 4, true, u128::MAX).unwrap();
        assert_eq!(a.errors, b.errors);
    }

    #[test]
    fn error_rate_grows_with_noise_and_shrinks_with_length() {
        let noisy = |p: f64| {
            SymmetricMac::new(
                2,
                vec!["0".into(), "1".into()],
                vec![vec![1.0 - p, p], vec![p, 1.0 - p], vec![p, 1.0 - p]],
            )
            .unwrap()
        };
        let spec_n = |n: usize| EnsembleSpec {
            kind: EnsembleKind::Cwe,
            q1: 0.35,
            n,
            t: 8,
            seed: 2,
        };
        let rate = |mac: &SymmetricMac, n: usize| {
            error_rate(mac, &spec_n(n), Decoder::Ml, 2, 300, 11, false, u128::MAX)
                .unwrap()
                .p_hat
        };
        // flatter transition rows decode worse
        assert!(rate(&noisy(0.05), 12) < rate(&noisy(0.35), 12));
        // longer codes decode better
        let (p8, p16, p32) = (
            rate(&noisy(0.2), 8),
            rate(&noisy(0.2), 16),
            rate(&noisy(0.2), 32),
        );
        assert!(p8 >= p16 && p16 >= p32, "{p8} {p16} {p32}");
        assert!(p8 > p32);
    }

    #[test]
    fn error_rate_pure_noise_approaches_uniform_miss() {
        // P(z|m) independent of m: posterior is flat, every decode ties
        let mac = SymmetricMac::new(
            1,
            vec!["0".into(), "1".into()],
            vec![vec![0.5, 0.5], vec![0.5, 0.5]],
        )
        .unwrap();
        let spec = EnsembleSpec {
            kind: EnsembleKind::Cre,
            q1: 0.5,
            n: 8,
            t: 4,
            seed: 0,
        };
        let rep = error_rate(&mac, &spec, Decoder::Ml, 1, 200, 5, false, u128::MAX).unwrap();
        // ties count as errors, so the rate is 1
        assert!(rep.p_hat > 0.99);
    }
}
