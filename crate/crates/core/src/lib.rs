//! Smooth-word (C-infinity word) calculus over two-letter alphabets:
//! run-length derivatives and primitives, height classes, MRSE chain
//! partitions, length-based enumeration with growth diagnostics, Kolakoski
//! sequence statistics, and the generalized {a, b} alphabet.
//!
//! All operations are pure functions of immutable inputs.

pub mod chain;
pub mod enumeration;
pub mod error;
pub mod general;
pub mod growth;
pub mod kolakoski;
pub mod primitive;
pub mod word;

pub use chain::{
    chain_complement, chain_count_law, chain_primitives, chains_of_height,
    simple_right_extensions, split_by_first_letter, verify_partition, Chain, ChainFamily,
    PartitionReport,
};
pub use enumeration::{
    chain_bounds_check, fe_length_extrema, frequency_extrema, gamma, gamma_prime,
    height_extrema_by_length, is_fe, is_lde, lde_count_by_height, smooth_words_of_length,
    stats_table, ChainBoundsReport, Method, StatsRecord,
};
pub use error::{Error, Result};
pub use general::{
    gen_chain_primitives, gen_chains_of_height, gen_complement, gen_coverage_gap,
    gen_derivative, gen_expand, gen_gamma, gen_h1_chains, gen_height, gen_height_class,
    gen_is_smooth, gen_primitives, AlphabetParams,
};
pub use growth::{
    dekking_envelope_check, empirical_theta, fit_growth_exponent, reference_q,
    sing_exponents, theorem5_exponents, theorem6_exponents, DekkingReport, ExponentReport,
};
pub use kolakoski::{
    alpha_candidate, alpha_estimate, factor_complexity, kolakoski_prefix,
    prefix_letter_stats, shallit_iterate, ShallitIterate,
};
pub use primitive::{expand, height_class, primitives, ClassStore, HeightClass};
pub use word::{
    complement, derivative, derivative_k, height, is_smooth, runs, RunDecomposition, Word,
};
