//! Shuffle products of words over `{x, y}`: a recursive oracle, closed-form
//! expansions, restricted families, and numerical multiple zeta values.

pub mod closed_form;
pub mod combinatorics;
mod count;
pub mod equivalence;
pub mod error;
pub mod numeric;
pub mod poly;
pub mod restricted;
pub mod shuffle;
pub mod suites;
pub mod words;

pub use closed_form::{
    beta_sequence, binom, coeff_general, expand_1_s, expand_euler, expand_general, expand_small, gamma_sequence,
    vandermonde_check, AlphaTuple, Composition, SmallCase,
};
pub use error::{Error, Result};
pub use poly::{Format, LinComb};
pub use shuffle::{shuffle_lincomb, shuffle_nfold, shuffle_permutation, shuffle_recursive};
pub use words::{
    from_exponent_form, is_admissible, parse_word, to_exponent_form, word_to_mzv, ExponentForm, Letter, MzvIndex, Word,
};
