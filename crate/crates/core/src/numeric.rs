//! Double-precision multiple zeta values by truncated nested summation.
//!
//! `ζ(k_1, …, k_n) = Σ_{m_1 > ⋯ > m_n > 0} m_1^{−k_1} ⋯ m_n^{−k_n}`, truncated
//! at `m_1 ≤ M`. The error estimate adds the change between `M/2` and `M`
//! to the outer tail `M^{1−k_1}/(k_1−1)`, scaled by the inner sum at the
//! cutoff (1 at depth one). This is a heuristic, not a rigorous bound.

use crate::error::{Error, Result};
use crate::poly::LinComb;
use crate::shuffle::shuffle_recursive;
use crate::words::{word_to_mzv, MzvIndex, Word};
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

/// Truncation used when none is given.
pub const DEFAULT_TERMS: u64 = 20_000;

/// Smallest accepted truncation.
pub const MIN_TERMS: u64 = 16;

/// Residuals at or below this are always accepted.
pub const RESIDUAL_FLOOR: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericResult {
    pub value: f64,
    pub err_est: f64,
    pub terms_used: u64,
}

/// Truncated sums of `ζ(idx)` at `m_1 ≤ terms` and at `m_1 ≤ terms/2`, and
/// the inner sum `Σ_{terms ≥ m_2 > ⋯ > m_n > 0} m_2^{−k_2}⋯m_n^{−k_n}`.
fn truncated(ks: &[u32], terms: usize) -> (f64, f64, f64) {
    let pow = |m: usize, k: u32| (m as f64).powi(-(k as i32));
    let n = ks.len();
    let mut level: Vec<f64> = (1..=terms).map(|m| pow(m, ks[n - 1])).collect();
    let mut inner = 1.0;
    for &k in ks[..n - 1].iter().rev() {
        let mut below = 0.0;
        for (i, t) in level.iter_mut().enumerate() {
            let here = *t;
            *t = pow(i + 1, k) * below;
            below += here;
        }
        inner = below;
    }
    let half = terms / 2;
    let head: f64 = level[..half].iter().sum();
    let tail: f64 = level[half..].iter().sum();
    (head + tail, head, inner)
}

/// `ζ(idx)` truncated at `m_1 ≤ terms`.
pub fn mzv_eval(idx: &MzvIndex, terms: u64) -> Result<NumericResult> {
    if terms < MIN_TERMS {
        return Err(Error::TooFewTerms(terms));
    }
    let k1 = idx.ks()[0];
    let (full, half, inner) = truncated(idx.ks(), terms as usize);
    let tail = inner * (terms as f64).powi(1 - k1 as i32) / (k1 as f64 - 1.0);
    Ok(NumericResult { value: full, err_est: (full - half).abs() + tail, terms_used: terms })
}

/// `ζ(w)` for an admissible word; the empty word maps to 1.
fn eval_word(w: &Word, terms: u64) -> Result<NumericResult> {
    if w.is_empty() {
        if terms < MIN_TERMS {
            return Err(Error::TooFewTerms(terms));
        }
        return Ok(NumericResult { value: 1.0, err_est: 0.0, terms_used: terms });
    }
    mzv_eval(&word_to_mzv(w)?, terms)
}

/// `Σ c_w ζ(w)`, with error `Σ |c_w|·err(w)`.
pub fn zeta_of_lincomb(p: &LinComb, terms: u64) -> Result<NumericResult> {
    if terms < MIN_TERMS {
        return Err(Error::TooFewTerms(terms));
    }
    let bad: Vec<String> =
        p.words().filter(|w| !crate::words::is_admissible(w)).map(Word::to_string).collect();
    if !bad.is_empty() {
        return Err(Error::NotAdmissible(bad.join(", ")));
    }
    let mut value = 0.0;
    let mut err_est = 0.0;
    for (w, c) in p.iter() {
        let r = eval_word(w, terms)?;
        let c_f = c.to_f64().unwrap_or(f64::INFINITY);
        value += c_f * r.value;
        err_est += c.abs().to_f64().unwrap_or(f64::INFINITY) * r.err_est;
    }
    Ok(NumericResult { value, err_est, terms_used: terms })
}

/// Numeric check of `ζ(u)ζ(v) = ζ(u ⧢ v)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub residual: f64,
    /// Propagated error of both sides.
    pub err_est: f64,
    /// `max(RESIDUAL_FLOOR, 3·err_est)`
    pub bound: f64,
}

impl IdentityCheck {
    pub fn passes(&self) -> bool {
        self.residual <= self.bound
    }
}

pub fn identity_check(u: &Word, v: &Word, terms: u64) -> Result<IdentityCheck> {
    for w in [u, v] {
        if !crate::words::is_admissible(w) {
            return Err(Error::NotAdmissible(w.to_string()));
        }
    }
    let zu = eval_word(u, terms)?;
    let zv = eval_word(v, terms)?;
    let zp = zeta_of_lincomb(&shuffle_recursive(u, v), terms)?;
    let residual = (zu.value * zv.value - zp.value).abs();
    let err_est = zu.err_est * zv.value.abs() + zv.err_est * zu.value.abs() + zu.err_est * zv.err_est + zp.err_est;
    Ok(IdentityCheck { residual, err_est, bound: RESIDUAL_FLOOR.max(3.0 * err_est) })
}

/// `|ζ(u)ζ(v) − ζ(u ⧢ v)|`
pub fn identity_residual(u: &Word, v: &Word, terms: u64) -> Result<f64> {
    Ok(identity_check(u, v, terms)?.residual)
}
