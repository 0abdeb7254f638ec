//! Closed-form coefficients for `x^{a_1}y⋯x^{a_r}y ⧢ x^{b_1}y⋯x^{b_s}y`.
//!
//! The product is a sum over exponent tuples `α = (α_1, …, α_{r+s})` with
//! `Σα = Σa + Σb` of `c_α · x^{α_1}y⋯x^{α_{r+s}}y`. The general coefficient
//! sums over the four ways the `y`s of both factors can interleave, each
//! described by compositions `l` (block sizes from the left factor) and `n`
//! (block sizes from the right factor).
//!
//! Binomials follow the vanishing convention: `binom(α, k) = 0` whenever
//! `k < 0` or `α < k`, so negative intermediate counts simply drop out.

use crate::combinatorics::{for_each_weak_composition, Compositions};
use crate::count::{choose, mul_choose, Count};
use crate::error::{Error, Result};
use crate::poly::LinComb;
use crate::words::{from_exponent_form, ExponentForm};
use num_bigint::BigInt;

/// Binomial coefficient; zero when `k < 0` or `k > n`.
pub fn binom(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::NegativeUpperIndex(n));
    }
    Ok(choose(n, k).to_bigint())
}

/// `Σ_i binom(k, i)·binom(l, n − i) == binom(k + l, n)`.
pub fn vandermonde_check(k: u32, l: u32, n: u32) -> bool {
    let (k, l, n) = (k as i64, l as i64, n as i64);
    let mut lhs = Count::ZERO;
    for i in 0..=n {
        lhs.add_assign(&choose(k, i).mul(&choose(l, n - i)));
    }
    lhs == choose(k + l, n)
}

/// An ordered tuple of positive parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::DimensionMismatch("composition parts must be positive".into()));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Exponent tuple `(α_1, …, α_{r+s})` of one output word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaTuple(Vec<u32>);

impl AlphaTuple {
    pub fn new(alphas: Vec<u32>) -> Self {
        AlphaTuple(alphas)
    }

    pub fn alphas(&self) -> &[u32] {
        &self.0
    }
}

/// Per-position counts for a `y`-pattern that alternates blocks of `first`
/// and `second`, starting with `first`. At the start of each block the
/// count is (exponents of every `y` placed so far, this one included) minus
/// the `α`s already used; inside a block it is the factor's own exponent.
fn block_counts(
    first: &[u32],
    second: &[u32],
    first_blocks: &[u32],
    second_blocks: &[u32],
    alphas: &[u32],
) -> Vec<i64> {
    let mut out = Vec::with_capacity(alphas.len());
    let (mut used_first, mut used_second) = (0usize, 0usize);
    let mut exps_so_far: i64 = 0;
    let mut alpha_so_far: i64 = 0;
    let mut push = |own: u32, is_start: bool, exps_so_far: &mut i64, out: &mut Vec<i64>| {
        *exps_so_far += own as i64;
        let pos = out.len();
        out.push(if is_start { *exps_so_far - alpha_so_far } else { own as i64 });
        alpha_so_far += alphas[pos] as i64;
    };
    for (j, &fb) in first_blocks.iter().enumerate() {
        for t in 0..fb as usize {
            push(first[used_first + t], t == 0, &mut exps_so_far, &mut out);
        }
        used_first += fb as usize;
        if let Some(&nb) = second_blocks.get(j) {
            for t in 0..nb as usize {
                push(second[used_second + t], t == 0, &mut exps_so_far, &mut out);
            }
            used_second += nb as usize;
        }
    }
    out
}

fn check_blocks(
    leading: &Composition,
    trailing: &Composition,
    leading_len: usize,
    trailing_len: usize,
    alphas: &AlphaTuple,
) -> Result<()> {
    let ok_counts = leading.len() == trailing.len() || leading.len() == trailing.len() + 1;
    if !ok_counts {
        return Err(Error::DimensionMismatch(format!(
            "{} leading blocks cannot alternate with {} trailing blocks",
            leading.len(),
            trailing.len()
        )));
    }
    if leading.total() as usize != leading_len || trailing.total() as usize != trailing_len {
        return Err(Error::DimensionMismatch("block sizes do not cover the factors".into()));
    }
    if alphas.0.len() != leading_len + trailing_len {
        return Err(Error::DimensionMismatch(format!(
            "expected {} alphas, got {}",
            leading_len + trailing_len,
            alphas.0.len()
        )));
    }
    Ok(())
}

/// β-values for a pattern starting with a block of `y`s from `a`.
/// `lcomp` has as many parts as `ncomp` (pattern ends with `b`) or one more
/// (pattern ends with `a`).
pub fn beta_sequence(
    lcomp: &Composition,
    ncomp: &Composition,
    alphas: &AlphaTuple,
    a: &ExponentForm,
    b: &ExponentForm,
) -> Result<Vec<i64>> {
    check_blocks(lcomp, ncomp, a.depth(), b.depth(), alphas)?;
    Ok(block_counts(a.exps(), b.exps(), lcomp.parts(), ncomp.parts(), alphas.alphas()))
}

/// γ-values for a pattern starting with a block of `y`s from `b`.
/// `ncomp` has as many parts as `lcomp` or one more.
pub fn gamma_sequence(
    lcomp: &Composition,
    ncomp: &Composition,
    alphas: &AlphaTuple,
    a: &ExponentForm,
    b: &ExponentForm,
) -> Result<Vec<i64>> {
    check_blocks(ncomp, lcomp, b.depth(), a.depth(), alphas)?;
    Ok(block_counts(b.exps(), a.exps(), ncomp.parts(), lcomp.parts(), alphas.alphas()))
}

/// `Π_{i<cut} binom(α_i, counts_i) · Π_{i>cut} δ(α_i, tail_i)` with 0-based
/// `cut`; `tail` is the exponent list of the factor owning the final block,
/// offset so that position `i` reads `tail[i - tail_offset]`.
fn pattern_term(alphas: &[u32], counts: &[i64], cut: usize, tail: &[u32], tail_offset: usize) -> Count {
    for i in cut + 1..alphas.len() {
        if alphas[i] != tail[i - tail_offset] {
            return Count::ZERO;
        }
    }
    let mut acc = Count::ONE;
    for i in 0..cut {
        if !mul_choose(&mut acc, alphas[i] as i64, counts[i]) {
            return Count::ZERO;
        }
    }
    acc
}

/// The coefficient without input validation.
pub(crate) fn general_coefficient(alphas: &[u32], a: &[u32], b: &[u32]) -> Count {
    let (r, s) = (a.len(), b.len());
    let mut total = Count::ZERO;
    for p in 1..=r.min(s) {
        // (i): l_1 n_1 … l_p n_p l_{p+1}; binomials over 1..L_p+s, then
        // δ(α_j, a_{j−s}) for j ≥ L_p+s+2.
        for l in Compositions::new(r as u32, p + 1) {
            let lp = r - *l.last().unwrap() as usize;
            for n in Compositions::new(s as u32, p) {
                let beta = block_counts(a, b, &l, &n, alphas);
                total.add_assign(&pattern_term(alphas, &beta, lp + s, a, s));
            }
        }
        // (ii): l_1 n_1 … l_p n_p; binomials over 1..r+N_{p−1}, then
        // δ(α_j, b_{j−r}) for j ≥ r+N_{p−1}+2.
        for l in Compositions::new(r as u32, p) {
            for n in Compositions::new(s as u32, p) {
                let np1 = s - *n.last().unwrap() as usize;
                let beta = block_counts(a, b, &l, &n, alphas);
                total.add_assign(&pattern_term(alphas, &beta, r + np1, b, r));
            }
        }
        // (iii): n_1 l_1 … n_p l_p n_{p+1}; binomials over 1..r+N_p, then
        // δ(α_j, b_{j−r}) for j ≥ r+N_p+2.
        for l in Compositions::new(r as u32, p) {
            for n in Compositions::new(s as u32, p + 1) {
                let np = s - *n.last().unwrap() as usize;
                let gamma = block_counts(b, a, &n, &l, alphas);
                total.add_assign(&pattern_term(alphas, &gamma, r + np, b, r));
            }
        }
        // (iv): n_1 l_1 … n_p l_p; binomials over 1..L_{p−1}+s, then
        // δ(α_j, a_{j−s}) for j ≥ L_{p−1}+s+2.
        for l in Compositions::new(r as u32, p) {
            let lp1 = r - *l.last().unwrap() as usize;
            for n in Compositions::new(s as u32, p) {
                let gamma = block_counts(b, a, &n, &l, alphas);
                total.add_assign(&pattern_term(alphas, &gamma, lp1 + s, a, s));
            }
        }
    }
    total
}

/// The coefficient of `x^{α_1}y⋯x^{α_{r+s}}y` in `x^{a}y… ⧢ x^{b}y…`.
pub fn coeff_general(alphas: &AlphaTuple, a: &ExponentForm, b: &ExponentForm) -> Result<BigInt> {
    let expected_len = a.depth() + b.depth();
    if alphas.0.len() != expected_len {
        return Err(Error::DimensionMismatch(format!(
            "expected {expected_len} alphas, got {}",
            alphas.0.len()
        )));
    }
    let got: u64 = alphas.0.iter().map(|&x| x as u64).sum();
    let expected = a.x_count() as u64 + b.x_count() as u64;
    if got != expected {
        return Err(Error::SumMismatch { got, expected });
    }
    Ok(general_coefficient(&alphas.0, a.exps(), b.exps()).to_bigint())
}

/// `Σ_α coefficient(α) · x^{α_1}y⋯x^{α_parts}y` over all weak compositions of
/// `x_total` into `parts`.
pub(crate) fn expand_by_coefficient(
    x_total: u32,
    parts: usize,
    mut coefficient: impl FnMut(&[u32]) -> Count,
) -> LinComb {
    let mut out = LinComb::zero();
    for_each_weak_composition(x_total, parts, |alphas| {
        let c = coefficient(alphas);
        if !c.is_zero() {
            out.add_term(from_exponent_form(alphas), c.to_bigint());
        }
    });
    out
}

pub fn expand_general(a: &ExponentForm, b: &ExponentForm) -> LinComb {
    expand_by_coefficient(a.x_count() + b.x_count(), a.depth() + b.depth(), |al| {
        general_coefficient(al, a.exps(), b.exps())
    })
}

/// `x^a y ⧢ x^b y = Σ [binom(α_1, a) + binom(α_1, b)] x^{α_1}y x^{α_2}y`.
pub fn expand_euler(a: u32, b: u32) -> LinComb {
    expand_by_coefficient(a + b, 2, |al| {
        let mut c = choose(al[0] as i64, a as i64);
        c.add_assign(&choose(al[0] as i64, b as i64));
        c
    })
}

fn prod(factors: &[(i64, i64)]) -> Count {
    let mut acc = Count::ONE;
    for &(n, k) in factors {
        if !mul_choose(&mut acc, n, k) {
            return Count::ZERO;
        }
    }
    acc
}

fn sum(terms: &[Count]) -> Count {
    let mut acc = Count::ZERO;
    for t in terms {
        acc.add_assign(t);
    }
    acc
}

fn gate(cond: bool, c: Count) -> Count {
    if cond {
        c
    } else {
        Count::ZERO
    }
}

/// Coefficient of the `r = 1` specialization.
pub(crate) fn one_s_coefficient(al: &[u32], a: u32, b: &[u32]) -> Count {
    let s = b.len();
    let al_ = |i: usize| al[i - 1] as i64;
    let b_ = |i: usize| b[i - 1] as i64;
    let delta_tail = |from: usize| (from..=s + 1).all(|j| al_(j) == b_(j - 1));

    let mut total = gate(delta_tail(3), choose(al_(1), a as i64));
    total.add_assign(&prod(&(1..=s).map(|i| (al_(i), b_(i))).collect::<Vec<_>>()));
    for k in 1..s {
        if !delta_tail(k + 3) {
            continue;
        }
        let mut f: Vec<(i64, i64)> = (1..=k).map(|i| (al_(i), b_(i))).collect();
        f.push((al_(k + 1), b_(k + 1) - al_(k + 2)));
        total.add_assign(&prod(&f));
    }
    total
}

/// `x^a y ⧢ x^{b_1}y⋯x^{b_s}y`.
pub fn expand_1_s(a: u32, b: &ExponentForm) -> LinComb {
    expand_by_coefficient(a + b.x_count(), b.depth() + 1, |al| one_s_coefficient(al, a, b.exps()))
}

/// The hand-expanded small cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmallCase {
    /// `x^a y ⧢ x^{b_1}y x^{b_2}y`
    C12 { a: u32, b: [u32; 2] },
    /// `x^a y ⧢ x^{b_1}y x^{b_2}y x^{b_3}y`
    C13 { a: u32, b: [u32; 3] },
    /// `x^{a_1}y x^{a_2}y ⧢ x^{b_1}y x^{b_2}y`
    C22 { a: [u32; 2], b: [u32; 2] },
    /// `x^{a_1}y x^{a_2}y ⧢ x^{b_1}y x^{b_2}y x^{b_3}y`
    C23 { a: [u32; 2], b: [u32; 3] },
    /// `x^{a_1}y x^{a_2}y x^{a_3}y ⧢ x^{b_1}y x^{b_2}y x^{b_3}y`
    C33 { a: [u32; 3], b: [u32; 3] },
}

impl SmallCase {
    /// Exponent forms of the two factors.
    pub fn factors(&self) -> (Vec<u32>, Vec<u32>) {
        match *self {
            SmallCase::C12 { a, b } => (vec![a], b.to_vec()),
            SmallCase::C13 { a, b } => (vec![a], b.to_vec()),
            SmallCase::C22 { a, b } => (a.to_vec(), b.to_vec()),
            SmallCase::C23 { a, b } => (a.to_vec(), b.to_vec()),
            SmallCase::C33 { a, b } => (a.to_vec(), b.to_vec()),
        }
    }

    pub(crate) fn coefficient(&self, al: &[u32]) -> Count {
        let x = |i: usize| al[i - 1] as i64;
        match *self {
            SmallCase::C12 { a, b } => {
                let (a, b1, b2) = (a as i64, b[0] as i64, b[1] as i64);
                sum(&[
                    gate(x(3) == b2, prod(&[(x(1), a)])),
                    prod(&[(x(1), b1), (x(2), b2)]),
                    prod(&[(x(1), b1), (x(2), b2 - x(3))]),
                ])
            }
            SmallCase::C13 { a, b } => {
                let (a, b1, b2, b3) = (a as i64, b[0] as i64, b[1] as i64, b[2] as i64);
                sum(&[
                    gate(x(3) == b2 && x(4) == b3, prod(&[(x(1), a)])),
                    gate(x(4) == b3, prod(&[(x(1), b1), (x(2), b2 - x(3))])),
                    prod(&[(x(1), b1), (x(2), b2)]).mul(&sum(&[
                        choose(x(3), b3),
                        choose(x(3), b3 - x(4)),
                    ])),
                ])
            }
            SmallCase::C22 { a, b } => {
                let (a1, a2, b1, b2) = (a[0] as i64, a[1] as i64, b[0] as i64, b[1] as i64);
                sum(&[
                    gate(x(4) == b2, prod(&[(x(1), a1), (x(2), a2)])),
                    gate(x(4) == a2, prod(&[(x(1), b1), (x(2), b2)])),
                    prod(&[(x(1), a1), (x(2), a1 + b1 - x(1))])
                        .mul(&sum(&[choose(x(3), b2), choose(x(3), b2 - x(4))])),
                    prod(&[(x(1), b1), (x(2), a1 + b1 - x(1))])
                        .mul(&sum(&[choose(x(3), a2), choose(x(3), a2 - x(4))])),
                ])
            }
            SmallCase::C23 { a, b } => {
                let (a1, a2) = (a[0] as i64, a[1] as i64);
                let (b1, b2, b3) = (b[0] as i64, b[1] as i64, b[2] as i64);
                let m = a1 + b1 - x(1);
                sum(&[
                    gate(x(4) == b2 && x(5) == b3, prod(&[(x(1), a1), (x(2), a2)])),
                    // printed as binom(α_3, b_2 − a_4); a_4 does not exist, read α_4.
                    gate(x(5) == b3, prod(&[(x(1), a1), (x(2), m), (x(3), b2 - x(4))])),
                    prod(&[(x(1), a1), (x(2), m), (x(3), b2)])
                        .mul(&sum(&[choose(x(4), b3), choose(x(4), b3 - x(5))])),
                    gate(x(5) == a2, prod(&[(x(1), b1), (x(2), b2), (x(3), b3)])),
                    gate(x(5) == b3, prod(&[(x(1), b1), (x(2), m), (x(3), a2)])),
                    prod(&[(x(1), b1), (x(2), b2), (x(3), a2 + b3 - x(4) - x(5))])
                        .mul(&sum(&[choose(x(4), a2), choose(x(4), a2 - x(5))])),
                    prod(&[(x(1), b1), (x(2), m), (x(3), a2 + b3 - x(4) - x(5))])
                        .mul(&sum(&[choose(x(4), b3), choose(x(4), b3 - x(5))])),
                ])
            }
            SmallCase::C33 { a, b } => {
                let mut c = c33_half(al, a, b);
                c.add_assign(&c33_half(al, b, a));
                c
            }
        }
    }
}

/// One half of the symmetrized `r = s = 3` coefficient: the patterns whose
/// first `y` comes from the left factor.
fn c33_half(al: &[u32], a: [u32; 3], b: [u32; 3]) -> Count {
    let x = |i: usize| al[i - 1] as i64;
    let (a1, a2, a3) = (a[0] as i64, a[1] as i64, a[2] as i64);
    let (b1, b2, b3) = (b[0] as i64, b[1] as i64, b[2] as i64);
    let m1 = a1 + b1 - x(1);
    let m2 = a1 + a2 + b1 - x(1) - x(2);
    let m3 = a3 + b3 - x(5) - x(6);
    sum(&[
        gate(x(5) == b2 && x(6) == b3, prod(&[(x(1), a1), (x(2), a2), (x(3), a3)])),
        gate(x(6) == a3, prod(&[(x(1), a1), (x(2), m1), (x(3), b2), (x(4), b3)])),
        gate(x(6) == b3, prod(&[(x(1), a1), (x(2), m1), (x(3), m2), (x(4), a3)])),
        gate(x(6) == b3, prod(&[(x(1), a1), (x(2), a2), (x(3), m2), (x(4), b2 - x(5))])),
        prod(&[(x(1), a1), (x(2), a2), (x(3), m2), (x(4), b2)])
            .mul(&sum(&[choose(x(5), b3), choose(x(5), b3 - x(6))])),
        prod(&[(x(1), a1), (x(2), m1), (x(3), b2), (x(4), m3)])
            .mul(&sum(&[choose(x(5), a3), choose(x(5), a3 - x(6))])),
        prod(&[(x(1), a1), (x(2), m1), (x(3), m2), (x(4), m3)])
            .mul(&sum(&[choose(x(5), b3), choose(x(5), b3 - x(6))])),
    ])
}

pub fn expand_small(case: SmallCase) -> LinComb {
    let (a, b) = case.factors();
    let x_total = a.iter().sum::<u32>() + b.iter().sum::<u32>();
    expand_by_coefficient(x_total, a.len() + b.len(), |al| case.coefficient(al))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shuffle::shuffle_recursive;
    use crate::words::parse_word;

    fn ef(v: &[u32]) -> ExponentForm {
        ExponentForm::new(v.to_vec()).unwrap()
    }

    fn comp(v: &[u32]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn oracle(a: &[u32], b: &[u32]) -> LinComb {
        shuffle_recursive(&from_exponent_form(a), &from_exponent_form(b))
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2).unwrap(), BigInt::from(10));
        assert_eq!(binom(3, -1).unwrap(), BigInt::from(0));
        assert_eq!(binom(2, 5).unwrap(), BigInt::from(0));
        assert_eq!(binom(-1, 0), Err(Error::NegativeUpperIndex(-1)));
    }

    #[test]
    fn vandermonde_small() {
        assert!(vandermonde_check(2, 2, 2));
        assert!(vandermonde_check(0, 4, 3));
        assert!(vandermonde_check(7, 5, 6));
        // direct: Σ_i C(7,i)C(5,6−i) = 924 = C(12,6)
        assert_eq!(binom(12, 6).unwrap(), BigInt::from(924));
    }

    #[test]
    fn beta_depth_one() {
        // r = s = 1, l = (1), n = (1): β_1 = a_1, β_2 = a_1 + b_1 − α_1.
        let beta = beta_sequence(&comp(&[1]), &comp(&[1]), &AlphaTuple::new(vec![3, 2]), &ef(&[2]), &ef(&[3]))
            .unwrap();
        assert_eq!(beta, vec![2, 2 + 3 - 3]);
    }

    #[test]
    fn beta_leading_block_is_a() {
        let a = ef(&[4, 1, 2]);
        let b = ef(&[1, 1]);
        let al = AlphaTuple::new(vec![5, 1, 0, 1, 2]);
        let beta = beta_sequence(&comp(&[3]), &comp(&[2]), &al, &a, &b).unwrap();
        // First l_1 = 3 entries: a_1, a_2, a_3; then b_1 offset by the α deficit.
        assert_eq!(&beta[..3], &[4, 1, 2]);
        assert_eq!(beta[3], 4 + 1 + 2 + 1 - (5 + 1));
        assert_eq!(beta[4], 1);
        assert!(beta_sequence(&comp(&[1, 1, 1]), &comp(&[2]), &al, &a, &b).is_err());
    }

    #[test]
    fn negative_beta_vanishes() {
        // α_1 exceeds a_1 + b_1, so β_2 < 0 and the consuming binomial is 0.
        let beta = beta_sequence(&comp(&[1]), &comp(&[1]), &AlphaTuple::new(vec![5, 0]), &ef(&[1]), &ef(&[1]))
            .unwrap();
        assert!(beta[1] < 0);
        assert_eq!(choose(0, beta[1]), Count::ZERO);
    }

    #[test]
    fn gamma_mirrors_beta() {
        let a = ef(&[2, 0, 1]);
        let b = ef(&[1, 3]);
        let al = AlphaTuple::new(vec![1, 2, 1, 2, 1]);
        let l = comp(&[2, 1]);
        let n = comp(&[1, 1]);
        let gamma = gamma_sequence(&l, &n, &al, &a, &b).unwrap();
        let beta_swapped = beta_sequence(&n, &l, &al, &b, &a).unwrap();
        assert_eq!(gamma, beta_swapped);
        // r = s = 1: γ_1 = b_1.
        let g = gamma_sequence(&comp(&[1]), &comp(&[1]), &AlphaTuple::new(vec![1, 1]), &ef(&[1]), &ef(&[1]))
            .unwrap();
        assert_eq!(g[0], 1);
    }

    #[test]
    fn coeff_euler_values() {
        let a = ef(&[1]);
        let c = |al: &[u32]| coeff_general(&AlphaTuple::new(al.to_vec()), &a, &a).unwrap();
        assert_eq!(c(&[1, 1]), BigInt::from(2));
        assert_eq!(c(&[2, 0]), BigInt::from(4));
        assert_eq!(c(&[0, 2]), BigInt::from(0));
        assert!(matches!(
            coeff_general(&AlphaTuple::new(vec![1, 0]), &a, &a),
            Err(Error::SumMismatch { .. })
        ));
        assert!(coeff_general(&AlphaTuple::new(vec![2]), &a, &a).is_err());
    }

    #[test]
    fn coeff_depth_one_is_euler() {
        for a in 0..5u32 {
            for b in 0..5u32 {
                for a1 in 0..=a + b {
                    let al = AlphaTuple::new(vec![a1, a + b - a1]);
                    let expected = choose(a1 as i64, a as i64).to_bigint() + choose(a1 as i64, b as i64).to_bigint();
                    assert_eq!(coeff_general(&al, &ef(&[a]), &ef(&[b])).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn coeff_two_by_two_matches_oracle() {
        let p = oracle(&[1, 1], &[1, 1]);
        for (w, c) in p.iter() {
            let al = crate::words::to_exponent_form(w).unwrap().exps().to_vec();
            assert_eq!(&coeff_general(&AlphaTuple::new(al), &ef(&[1, 1]), &ef(&[1, 1])).unwrap(), c);
        }
    }

    #[test]
    fn expansions_small_examples() {
        let euler = oracle(&[1], &[1]);
        assert_eq!(expand_general(&ef(&[1]), &ef(&[1])), euler);
        assert_eq!(expand_euler(1, 1), euler);
        assert_eq!(expand_general(&ef(&[0]), &ef(&[0])), LinComb::monomial(parse_word("yy").unwrap(), 2));
        assert_eq!(expand_euler(0, 0), LinComb::monomial(parse_word("yy").unwrap(), 2));
        assert_eq!(expand_general(&ef(&[2, 0]), &ef(&[1])), oracle(&[2, 0], &[1]));
        assert_eq!(expand_euler(2, 1), oracle(&[2], &[1]));
    }

    #[test]
    fn one_s_examples() {
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(expand_1_s(a, &ef(&[b])), expand_euler(a, b));
            }
        }
        assert_eq!(expand_1_s(1, &ef(&[1, 0, 1])), oracle(&[1], &[1, 0, 1]));
        assert_eq!(expand_1_s(1, &ef(&[1, 1])), expand_small(SmallCase::C12 { a: 1, b: [1, 1] }));
    }

    #[test]
    fn small_case_examples() {
        assert_eq!(expand_small(SmallCase::C22 { a: [1, 0], b: [1, 0] }), oracle(&[1, 0], &[1, 0]));
        let zeros = expand_small(SmallCase::C33 { a: [0; 3], b: [0; 3] });
        assert_eq!(zeros, LinComb::monomial(parse_word("y^6").unwrap(), 20));
        assert_eq!(zeros.coefficient_sum(), BigInt::from(20));
        assert_eq!(
            expand_small(SmallCase::C23 { a: [1, 2], b: [0, 1, 1] }),
            oracle(&[1, 2], &[0, 1, 1])
        );
        assert_eq!(expand_small(SmallCase::C13 { a: 2, b: [1, 0, 1] }), oracle(&[2], &[1, 0, 1]));
    }

    #[test]
    fn general_is_symmetric() {
        let a = ef(&[1, 0, 2]);
        let b = ef(&[0, 1]);
        assert_eq!(expand_general(&a, &b), expand_general(&b, &a));
    }
}
