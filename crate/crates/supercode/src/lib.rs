//! Toolkit for non-adaptive group testing: superimposed (disjunct) code
//! constructions, exhaustive combinatorial property oracles, deterministic
//! and probabilistic multiple-access channel simulation with cover/ML/universal
//! decoding, and numeric evaluation of the classical rate and length bounds.
//!
//! A code is a binary `N x t` matrix: rows are tests (pools), columns are
//! codewords (clones). The crate is organized around that object:
//!
//! - [`galois`]: exact GF(q) arithmetic for the Reed-Solomon constructions.
//! - [`codebook`]: binary and q-ary code types, Boolean-sum algebra,
//!   weight/correlation statistics, composition tables, file formats.
//! - [`constructions`]: explicit code families (shortened Reed-Solomon,
//!   circulant, recurrent homogeneous, three-row, characteristic-matrix
//!   products, subset incidence, complement doubling, concatenation).
//! - [`verify`]: exhaustive oracles for every combinatorial property, plus
//!   the Kautz-Singleton sufficient condition.
//! - [`channels`]: adder / disjunct / symmetric-disjunct channels, symmetric
//!   MACs with arbitrary transition tables, random code ensembles.
//! - [`decoding`]: cover decoding, brute-force design decoding, maximum
//!   likelihood and universal decoding, Monte-Carlo error-rate estimation.
//! - [`bounds`]: closed-form, fixed-point and optimization-defined rate and
//!   length bounds, and the random-coding error exponents.
//! - [`paramsearch`]: optimal-parameter solvers for shortened-RS and
//!   concatenated code families over ingested constant-weight code tables.

pub mod bounds;
pub mod channels;
pub mod codebook;
pub mod combin;
pub mod constructions;
pub mod decoding;
pub mod galois;
pub mod paramsearch;
pub mod rng;
pub mod verify;
