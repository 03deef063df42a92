//! Channel models: the deterministic adder / disjunct / symmetric-disjunct
//! channels, symmetric MACs with arbitrary transition tables, and the two
//! random code ensembles.
//!
//! Output symbols are dense alphabet indices. The adder channel outputs the
//! arithmetic sum 0..=s; the disjunct channel 0/1; the symmetric-disjunct
//! channel uses index 2 for the erasure (the erasure is always the last
//! symbol of its alphabet).

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codebook::{BinaryCode, BitColumn, Ternary, TernaryColumn};
use crate::rng::stream;

#[derive(Debug, Error, PartialEq)]
pub enum ChannelError {
    #[error("column index {index} out of range for size {t}")]
    IndexOutOfRange { index: usize, t: usize },
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("invalid MAC table: {0}")]
    InvalidMac(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ChannelModel {
    Adder,
    Disjunct,
    SymmetricDisjunct,
}

pub const ERASURE: u16 = 2;

impl ChannelModel {
    pub fn alphabet_size(&self, s: usize) -> usize {
        match self {
            ChannelModel::Adder => s + 1,
            ChannelModel::Disjunct => 2,
            ChannelModel::SymmetricDisjunct => 3,
        }
    }

    /// Output symbol for a row with `ones` ones among `s` inputs.
    pub fn output(&self, ones: usize, s: usize) -> u16 {
        match self {
            ChannelModel::Adder => ones as u16,
            ChannelModel::Disjunct => (ones != 0) as u16,
            ChannelModel::SymmetricDisjunct => {
                if ones == 0 {
                    0
                } else if ones == s {
                    1
                } else {
                    ERASURE
                }
            }
        }
    }
}

/// Symbol produced by one test on an explicit input row.
pub fn channel_output(model: ChannelModel, input_row: &[u8]) -> u16 {
    let ones = input_row.iter().filter(|&&b| b != 0).count();
    model.output(ones, input_row.len())
}

/// Componentwise channel outputs for the s-subset `e` of columns. The OR
/// channel runs word-wise over the packed columns; the counting channels
/// accumulate set bits per column.
pub fn transmit(
    code: &BinaryCode,
    e: &[usize],
    model: ChannelModel,
) -> Result<Vec<u16>, ChannelError> {
    for &u in e {
        if u >= code.size() {
            return Err(ChannelError::IndexOutOfRange {
                index: u,
                t: code.size(),
            });
        }
    }
    let s = e.len();
    match model {
        ChannelModel::Disjunct => {
            let or = code.or_of(e);
            Ok((0..code.len()).map(|i| or.get(i) as u16).collect())
        }
        ChannelModel::Adder | ChannelModel::SymmetricDisjunct => {
            let mut sums = vec![0u16; code.len()];
            for &u in e {
                for (w, &word) in code.column_words(u).iter().enumerate() {
                    let mut bits = word;
                    while bits != 0 {
                        sums[w * 64 + bits.trailing_zeros() as usize] += 1;
                        bits &= bits - 1;
                    }
                }
            }
            if model == ChannelModel::Adder {
                Ok(sums)
            } else {
                Ok(sums
                    .into_iter()
                    .map(|ones| model.output(ones as usize, s))
                    .collect())
            }
        }
    }
}

/// Symmetric-disjunct output as a ternary column.
pub fn transmit_ternary(code: &BinaryCode, e: &[usize]) -> Result<TernaryColumn, ChannelError> {
    let z = transmit(code, e, ChannelModel::SymmetricDisjunct)?;
    Ok(TernaryColumn(
        z.into_iter()
            .map(|v| match v {
                0 => Ternary::Zero,
                1 => Ternary::One,
                _ => Ternary::Star,
            })
            .collect(),
    ))
}

/// Symmetric memoryless MAC: P(z | m) depends only on the number m of ones
/// among the s inputs. Row m of `table` is the output distribution given m.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SymmetricMac {
    pub s: usize,
    /// Display names of the output symbols, e.g. ["0", "1", "*"].
    pub z_names: Vec<String>,
    /// (s+1) x |Z| transition probabilities.
    pub table: Vec<Vec<f64>>,
}

#[derive(Deserialize)]
struct MacJson {
    s: usize,
    #[serde(rename = "Z")]
    z: Vec<String>,
    #[serde(rename = "P")]
    p: Vec<Vec<f64>>,
}

impl SymmetricMac {
    pub fn new(s: usize, z_names: Vec<String>, table: Vec<Vec<f64>>) -> Result<Self, ChannelError> {
        if table.len() != s + 1 {
            return Err(ChannelError::InvalidMac(format!(
                "need s+1 = {} rows, got {}",
                s + 1,
                table.len()
            )));
        }
        let z = z_names.len();
        for (m, row) in table.iter().enumerate() {
            if row.len() != z {
                return Err(ChannelError::InvalidMac(format!(
                    "row {m} has {} entries, expected {z}",
                    row.len()
                )));
            }
            if row.iter().any(|&p| !(0.0..=1.0).contains(&p)) {
                return Err(ChannelError::InvalidMac(format!(
                    "row {m} has probabilities outside [0,1]"
                )));
            }
            let sum: f64 = row.iter().sum();
            if (sum - 1.0).abs() > 1e-12 {
                return Err(ChannelError::InvalidMac(format!(
                    "row {m} sums to {sum}, not 1"
                )));
            }
        }
        Ok(SymmetricMac { s, z_names, table })
    }

    pub fn from_json(text: &str) -> Result<Self, ChannelError> {
        let raw: MacJson =
            serde_json::from_str(text).map_err(|e| ChannelError::InvalidMac(e.to_string()))?;
        SymmetricMac::new(raw.s, raw.z, raw.p)
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({"s": self.s, "Z": self.z_names, "P": self.table}).to_string()
    }

    /// Degenerate MAC reproducing a deterministic channel model.
    pub fn deterministic(model: ChannelModel, s: usize) -> Self {
        let z = model.alphabet_size(s);
        let names = match model {
            ChannelModel::Adder => (0..z).map(|v| v.to_string()).collect(),
            ChannelModel::Disjunct => vec!["0".into(), "1".into()],
            ChannelModel::SymmetricDisjunct => vec!["0".into(), "1".into(), "*".into()],
        };
        let mut table = vec![vec![0.0; z]; s + 1];
        for (m, row) in table.iter_mut().enumerate() {
            row[model.output(m, s) as usize] = 1.0;
        }
        SymmetricMac::new(s, names, table).expect("rows are unit vectors")
    }

    pub fn z_size(&self) -> usize {
        self.z_names.len()
    }

    pub fn prob(&self, z: u16, ones: usize) -> f64 {
        self.table[ones][z as usize]
    }
}

/// Per-position independent draws z_i ~ P(.| number of ones in row i of the
/// selected columns), in position order from the stream for (seed, 0).
pub fn sample_mac(
    mac: &SymmetricMac,
    code: &BinaryCode,
    e: &[usize],
    seed: u64,
) -> Result<Vec<u16>, ChannelError> {
    for &u in e {
        if u >= code.size() {
            return Err(ChannelError::IndexOutOfRange {
                index: u,
                t: code.size(),
            });
        }
    }
    let mut rng = stream(seed, 0);
    let mut out = Vec::with_capacity(code.len());
    for i in 0..code.len() {
        let ones = e.iter().filter(|&&u| code.get(i, u)).count();
        let x: f64 = rng.gen();
        let row = &mac.table[ones];
        let mut acc = 0.0;
        let mut z = row.len() - 1;
        for (idx, &p) in row.iter().enumerate() {
            acc += p;
            if x < acc {
                z = idx;
                break;
            }
        }
        out.push(z as u16);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EnsembleKind {
    /// Completely randomized: i.i.d. Bernoulli(Q(1)) bits.
    Cre,
    /// Constant-weight: columns uniform over weight floor(N*Q(1)).
    Cwe,
}

#[derive(Debug, Clone, Copy)]
pub struct EnsembleSpec {
    pub kind: EnsembleKind,
    /// Q(1), the probability (or fraction) of ones; 0 < q1 < 1.
    pub q1: f64,
    pub n: usize,
    pub t: usize,
    pub seed: u64,
}

impl EnsembleSpec {
    pub fn validate(&self) -> Result<(), ChannelError> {
        if !(self.q1 > 0.0 && self.q1 < 1.0) {
            return Err(ChannelError::InvalidDistribution(format!(
                "need 0 < Q(1) < 1, got {}",
                self.q1
            )));
        }
        Ok(())
    }

    pub fn cwe_weight(&self) -> usize {
        (self.n as f64 * self.q1).floor() as usize
    }
}

/// Draw a code from the ensemble; column u uses the stream (seed, u), so
/// columns are reproducible in isolation.
pub fn sample_ensemble(spec: &EnsembleSpec) -> Result<BinaryCode, ChannelError> {
    spec.validate()?;
    let mut cols = Vec::with_capacity(spec.t);
    for u in 0..spec.t {
        let mut rng = stream(spec.seed, u as u64);
        let mut col = BitColumn::zero(spec.n);
        match spec.kind {
            EnsembleKind::Cre => {
                for i in 0..spec.n {
                    let x: f64 = rng.gen();
                    if x < spec.q1 {
                        col.set(i, true);
                    }
                }
            }
            EnsembleKind::Cwe => {
                // partial Fisher-Yates over position indices
                let w = spec.cwe_weight();
                let mut idx: Vec<usize> = (0..spec.n).collect();
                for i in 0..w.min(spec.n) {
                    let j = rng.gen_range(i..spec.n);
                    idx.swap(i, j);
                    col.set(idx[i], true);
                }
            }
        }
        cols.push(col);
    }
    Ok(BinaryCode::from_columns(&cols).expect("equal lengths"))
}
