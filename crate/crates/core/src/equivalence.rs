//! Independent transcriptions of two older formulas for
//! `x^a y^r ⧢ x^b y^s` and `x^a y^r ⧢ x^{b_1} y^{s_1} x^{b_2} y^{s_2}`, stated
//! for positive parameters only, and exact comparison against the
//! restricted formulas.

use crate::combinatorics::WeakCompositions;
use crate::count::choose;
use crate::error::{Error, Result};
use crate::poly::LinComb;
use crate::restricted::{expand_res_1_1, expand_res_1_2};
use crate::words::{Letter, Word};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::time::Instant;

fn require_positive(values: &[u32], what: &'static str) -> Result<()> {
    if values.contains(&0) {
        return Err(Error::PositivityRequired(what));
    }
    Ok(())
}

/// Appends `x^{α_1+first} y x^{α_2} y ⋯ x^{α_m+last} y^{trailing}`.
fn push_block(word: &mut Vec<Letter>, alphas: &[u32], first: u32, last: u32, trailing: u32) {
    let m = alphas.len();
    for (i, &al) in alphas.iter().enumerate() {
        let mut xs = al;
        if i == 0 {
            xs += first;
        }
        if i + 1 == m {
            xs += last;
        }
        let ys = if i + 1 == m { trailing } else { 1 };
        word.extend(std::iter::repeat_n(Letter::X, xs as usize));
        word.extend(std::iter::repeat_n(Letter::Y, ys as usize));
    }
}

fn add(out: &mut LinComb, word: Vec<Letter>, factors: &[(i64, i64)]) {
    let mut c = num_bigint::BigInt::from(1);
    for &(n, k) in factors {
        c *= choose(n, k).to_bigint();
    }
    out.add_term(Word::new(word), c);
}

/// Splits of `total` into `parts` nonnegative pieces.
fn splits(total: u32, parts: usize) -> WeakCompositions {
    WeakCompositions::new(total, parts)
}

/// `x^a y^r ⧢ x^b y^s` for `a, b, r, s ≥ 1`, as a sum over where the first
/// `x` of the right factor lands.
pub fn expand_lgm_1_1(a: u32, r: u32, b: u32, s: u32) -> Result<LinComb> {
    require_positive(&[a, r, b, s], "a, r, b, s must all be positive")?;
    let mut out = LinComb::zero();
    let (ai, bi, si) = (a as i64, b as i64, s as i64);
    for k in 0..=b {
        for rr in splits(r, 2) {
            let (r1, r2) = (rr[0], rr[1]);
            for al in splits(b - k, r1 as usize + 1) {
                let mut w = Vec::new();
                push_block(&mut w, &al, a + k, 0, r2 + s);
                add(&mut out, w, &[(ai - 1 + k as i64, ai - 1), (r2 as i64 + si - 1, si - 1)]);
            }
        }
    }
    for l in 1..=s {
        for aa in splits(a - 1, 2) {
            let (a1, a2) = (aa[0], aa[1]);
            for al in splits(a2, l as usize + 1) {
                let mut w = Vec::new();
                push_block(&mut w, &al, a1 + b, 1, r + s - l);
                add(&mut out, w, &[(a1 as i64 + bi - 1, bi - 1), ((r + s - l) as i64, r as i64)]);
            }
        }
    }
    Ok(out)
}

/// One of the four sums making up [`expand_lgm_1_2`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LgmSum {
    S1,
    S2,
    S3,
    S4,
}

impl LgmSum {
    pub const ALL: [LgmSum; 4] = [LgmSum::S1, LgmSum::S2, LgmSum::S3, LgmSum::S4];
}

/// A single sum of the older `x^a y^r ⧢ x^{b_1} y^{s_1} x^{b_2} y^{s_2}`
/// formula; all six parameters must be positive.
pub fn expand_lgm_1_2_sum(a: u32, r: u32, b1: u32, s1: u32, b2: u32, s2: u32, which: LgmSum) -> Result<LinComb> {
    require_positive(&[a, r, b1, s1, b2, s2], "a, r, b1, s1, b2, s2 must all be positive")?;
    let mut out = LinComb::zero();
    let c = |n: u32, k: u32| (n as i64, k as i64);
    match which {
        LgmSum::S1 => {
            for k in 0..=b1 {
                for rr in splits(r, 4) {
                    for al in splits(b1 - k, rr[0] as usize + 1) {
                        for alt in splits(b2 - 1, rr[2] as usize + 1) {
                            let mut w = Vec::new();
                            push_block(&mut w, &al, a + k, 0, rr[1] + s1);
                            push_block(&mut w, &alt, 1, 0, rr[3] + s2);
                            add(
                                &mut out,
                                w,
                                &[c(a - 1 + k, a - 1), c(rr[1] + s1 - 1, s1 - 1), c(rr[3] + s2 - 1, s2 - 1)],
                            );
                        }
                    }
                }
            }
        }
        LgmSum::S2 => {
            for l in 1..=s1 {
                for aa in splits(a - 1, 2) {
                    for rr in splits(r, 3) {
                        for al in splits(aa[1], l as usize + 1) {
                            for alt in splits(b2 - 1, rr[1] as usize + 1) {
                                let mut w = Vec::new();
                                push_block(&mut w, &al, aa[0] + b1, 1, rr[0] + s1 - l);
                                push_block(&mut w, &alt, 1, 0, rr[2] + s2);
                                add(
                                    &mut out,
                                    w,
                                    &[c(aa[0] + b1 - 1, b1 - 1), c(rr[0] + s1 - l, s1 - l), c(rr[2] + s2 - 1, s2 - 1)],
                                );
                            }
                        }
                    }
                }
            }
        }
        LgmSum::S3 => {
            for k in 1..=b2 {
                for aa in splits(a - 1, 3) {
                    for rr in splits(r, 2) {
                        for al in splits(aa[1], s1 as usize + 1) {
                            for alt in splits(b2 - k, rr[0] as usize + 1) {
                                let mut w = Vec::new();
                                push_block(&mut w, &al[..s1 as usize], aa[0] + b1, 0, 1);
                                push_block(&mut w, &alt, al[s1 as usize] + aa[2] + k + 1, 0, rr[1] + s2);
                                add(
                                    &mut out,
                                    w,
                                    &[c(aa[0] + b1 - 1, b1 - 1), c(aa[2] + k - 1, k - 1), c(rr[1] + s2 - 1, s2 - 1)],
                                );
                            }
                        }
                    }
                }
            }
        }
        LgmSum::S4 => {
            for l in 1..=s2 {
                for aa in splits(a - 1, 4) {
                    for al in splits(aa[1], s1 as usize) {
                        for alt in splits(aa[3], l as usize + 1) {
                            let mut w = Vec::new();
                            push_block(&mut w, &al, aa[0] + b1, 0, 1);
                            push_block(&mut w, &alt, aa[2] + b2, 1, r + s2 - l);
                            add(
                                &mut out,
                                w,
                                &[c(aa[0] + b1 - 1, b1 - 1), c(aa[2] + b2 - 1, b2 - 1), c(r + s2 - l, r)],
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `x^a y^r ⧢ x^{b_1} y^{s_1} x^{b_2} y^{s_2}` for positive parameters, as
/// the sum of the four older sums.
pub fn expand_lgm_1_2(a: u32, r: u32, b1: u32, s1: u32, b2: u32, s2: u32) -> Result<LinComb> {
    let mut out = LinComb::zero();
    for which in LgmSum::ALL {
        out += &expand_lgm_1_2_sum(a, r, b1, s1, b2, s2, which)?;
    }
    Ok(out)
}

/// Which pair of formulas to compare.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Pair {
    /// `x^a y^r ⧢ x^b y^s`, parameters `(a, r, b, s)`.
    A,
    /// `x^a y^r ⧢ x^{b_1} y^{s_1} x^{b_2} y^{s_2}`, parameters `(a, r, b_1, s_1, b_2, s_2)`.
    B,
}

impl Pair {
    pub fn arity(self) -> usize {
        match self {
            Pair::A => 4,
            Pair::B => 6,
        }
    }
}

/// Every parameter ranges over `min..=max`; when `max_len` is set, only
/// points whose two words have total length at most `max_len` are kept.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub min: u32,
    pub max: u32,
    pub max_len: Option<u32>,
}

impl Grid {
    pub fn points(&self, arity: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        if self.min > self.max {
            return out;
        }
        let mut p = vec![self.min; arity];
        loop {
            if self.max_len.is_none_or(|m| p.iter().sum::<u32>() <= m) {
                out.push(p.clone());
            }
            let mut i = arity;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if p[i] < self.max {
                    p[i] += 1;
                    break;
                }
                p[i] = self.min;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridPoint {
    pub params: Vec<u32>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub pair: Pair,
    pub grid: Grid,
    pub points: Vec<GridPoint>,
    pub failures: Vec<GridPoint>,
    pub elapsed_ms: u64,
}

impl EquivalenceReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

fn compare(pair: Pair, p: &[u32]) -> Result<bool> {
    Ok(match pair {
        Pair::A => expand_res_1_1(p[0], p[1], p[2], p[3])? == expand_lgm_1_1(p[0], p[1], p[2], p[3])?,
        Pair::B => {
            expand_res_1_2(p[0], p[1], p[2], p[3], p[4], p[5])? == expand_lgm_1_2(p[0], p[1], p[2], p[3], p[4], p[5])?
        }
    })
}

/// Compares both formulas of `pair` at every grid point.
pub fn check_equivalence(pair: Pair, grid: Grid) -> EquivalenceReport {
    let start = Instant::now();
    let points: Vec<GridPoint> = grid
        .points(pair.arity())
        .into_par_iter()
        .map(|params| match compare(pair, &params) {
            Ok(pass) => GridPoint { params, pass, error: None },
            Err(e) => GridPoint { params, pass: false, error: Some(e.to_string()) },
        })
        .collect();
    let failures = points.iter().filter(|p| !p.pass).cloned().collect();
    EquivalenceReport { pair, grid, points, failures, elapsed_ms: start.elapsed().as_millis() as u64 }
}
