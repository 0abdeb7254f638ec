//! Exhaustive verification grids: every closed form against the recursive
//! oracle, and the older formulas against the restricted ones.

use crate::closed_form::{expand_1_s, expand_euler, expand_general, expand_small, SmallCase};
use crate::combinatorics::WeakCompositions;
use crate::equivalence::{expand_lgm_1_1, expand_lgm_1_2};
use crate::error::Result;
use crate::poly::LinComb;
use crate::restricted::{expand_nfold, expand_nfold_depth1, expand_res_1_1, expand_res_1_2, expand_res_2_2, DoubleRun};
use crate::shuffle::{shuffle_nfold, shuffle_recursive};
use crate::words::{from_exponent_form, ExponentForm, Word};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

/// Weight cap used by the command-line tool unless overridden.
pub const DEFAULT_MAX_WEIGHT: u32 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Suite {
    General,
    Special,
    Res11,
    Res12,
    Res22,
    Nfold,
    AppendixA,
    AppendixB,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 8] = [
        Suite::General,
        Suite::Special,
        Suite::Res11,
        Suite::Res12,
        Suite::Res22,
        Suite::Nfold,
        Suite::AppendixA,
        Suite::AppendixB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::General => "general",
            Suite::Special => "special",
            Suite::Res11 => "res11",
            Suite::Res12 => "res12",
            Suite::Res22 => "res22",
            Suite::Nfold => "nfold",
            Suite::AppendixA => "appendixA",
            Suite::AppendixB => "appendixB",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::INDIVIDUAL
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// A grid point that did not match.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub suite: Suite,
    pub case: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_weight: u32,
    pub checked: usize,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Exponent forms whose words have length at most `max_len`, by depth and
/// then lexicographically.
pub fn exponent_forms(max_len: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for depth in 1..=max_len {
        for xs in 0..=max_len - depth {
            out.extend(WeakCompositions::new(xs, depth as usize));
        }
    }
    out
}

fn word_len(exps: &[u32]) -> u32 {
    exps.iter().sum::<u32>() + exps.len() as u32
}

fn ef(exps: &[u32]) -> ExponentForm {
    ExponentForm::new(exps.to_vec()).expect("nonempty exponent form")
}

fn oracle(a: &[u32], b: &[u32]) -> LinComb {
    shuffle_recursive(&from_exponent_form(a), &from_exponent_form(b))
}

type Check = Box<dyn Fn() -> Result<Option<String>> + Send + Sync>;

/// `None` when equal, else a short description of the first differing word.
fn diff(got: &LinComb, expected: &LinComb) -> Option<String> {
    if got == expected {
        return None;
    }
    let word = got
        .words()
        .chain(expected.words())
        .find(|w| got.coefficient(w) != expected.coefficient(w))
        .cloned()
        .unwrap_or_else(Word::empty);
    Some(format!("coefficient of {word}: got {}, expected {}", got.coefficient(&word), expected.coefficient(&word)))
}

fn eq_check(f: impl Fn() -> Result<(LinComb, LinComb)> + Send + Sync + 'static) -> Check {
    Box::new(move || f().map(|(got, expected)| diff(&got, &expected)))
}

fn general_checks(w: u32) -> Vec<(String, Check)> {
    let forms = exponent_forms(w.saturating_sub(1));
    let mut out = Vec::new();
    for a in &forms {
        for b in &forms {
            if word_len(a) + word_len(b) > w {
                continue;
            }
            let (a, b) = (a.clone(), b.clone());
            out.push((
                format!("{} ⧢ {}", ef(&a), ef(&b)),
                eq_check(move || Ok((expand_general(&ef(&a), &ef(&b)), oracle(&a, &b)))),
            ));
        }
    }
    out
}

fn special_checks(w: u32) -> Vec<(String, Check)> {
    let mut out: Vec<(String, Check)> = Vec::new();
    for a in 0..=w.saturating_sub(2) {
        for b in 0..=w.saturating_sub(2) - a {
            out.push((format!("euler ({a}) ⧢ ({b})"), eq_check(move || Ok((expand_euler(a, b), oracle(&[a], &[b]))))));
        }
    }
    let forms = exponent_forms(w.saturating_sub(1));
    for b in &forms {
        for a in 0..w {
            if a + 1 + word_len(b) > w {
                break;
            }
            let b = b.clone();
            out.push((
                format!("1_s ({a}) ⧢ {}", ef(&b)),
                eq_check(move || Ok((expand_1_s(a, &ef(&b)), oracle(&[a], &b)))),
            ));
        }
    }
    for case in small_cases(&forms, w) {
        out.push((
            format!("{case:?}"),
            eq_check(move || {
                let (a, b) = case.factors();
                Ok((expand_small(case), oracle(&a, &b)))
            }),
        ));
    }
    out
}

fn small_cases(forms: &[Vec<u32>], w: u32) -> Vec<SmallCase> {
    let of_depth = |d: usize| forms.iter().filter(move |f| f.len() == d);
    let mut out = Vec::new();
    for a in of_depth(1) {
        for b in of_depth(2) {
            out.push(SmallCase::C12 { a: a[0], b: [b[0], b[1]] });
        }
        for b in of_depth(3) {
            out.push(SmallCase::C13 { a: a[0], b: [b[0], b[1], b[2]] });
        }
    }
    for a in of_depth(2) {
        for b in of_depth(2) {
            out.push(SmallCase::C22 { a: [a[0], a[1]], b: [b[0], b[1]] });
        }
        for b in of_depth(3) {
            out.push(SmallCase::C23 { a: [a[0], a[1]], b: [b[0], b[1], b[2]] });
        }
    }
    for a in of_depth(3) {
        for b in of_depth(3) {
            out.push(SmallCase::C33 { a: [a[0], a[1], a[2]], b: [b[0], b[1], b[2]] });
        }
    }
    out.retain(|c| {
        let (a, b) = c.factors();
        word_len(&a) + word_len(&b) <= w
    });
    out
}

/// All `(a, r)` with `r ≥ 1` and `a + r ≤ max_len`.
fn single_runs(max_len: u32) -> Vec<(u32, u32)> {
    (1..=max_len).flat_map(|r| (0..=max_len - r).map(move |a| (a, r))).collect()
}

fn double_runs(max_len: u32) -> Vec<DoubleRun> {
    let mut out = Vec::new();
    for (a1, r1) in single_runs(max_len) {
        for (a2, r2) in single_runs(max_len.saturating_sub(a1 + r1)) {
            out.push(DoubleRun::new(a1, r1, a2, r2));
        }
    }
    out.sort();
    out
}

fn run_word((a, r): (u32, u32)) -> Word {
    Word::x_pow_y_pow(a, r)
}

fn res11_checks(w: u32) -> Vec<(String, Check)> {
    let mut out = Vec::new();
    for p in single_runs(w) {
        for q in single_runs(w - p.0 - p.1) {
            out.push((
                format!("x^{}y^{} ⧢ x^{}y^{}", p.0, p.1, q.0, q.1),
                eq_check(move || Ok((expand_res_1_1(p.0, p.1, q.0, q.1)?, shuffle_recursive(&run_word(p), &run_word(q))))),
            ));
        }
    }
    out
}

fn res12_checks(w: u32) -> Vec<(String, Check)> {
    let mut out = Vec::new();
    for p in single_runs(w) {
        for v in double_runs(w - p.0 - p.1) {
            out.push((
                format!("x^{}y^{} ⧢ {}", p.0, p.1, v.to_word()),
                eq_check(move || {
                    Ok((expand_res_1_2(p.0, p.1, v.a1, v.r1, v.a2, v.r2)?, shuffle_recursive(&run_word(p), &v.to_word())))
                }),
            ));
        }
    }
    out
}

fn res22_checks(w: u32) -> Vec<(String, Check)> {
    let mut out = Vec::new();
    for u in double_runs(w) {
        for v in double_runs(w.saturating_sub(u.len())) {
            out.push((
                format!("{} ⧢ {}", u.to_word(), v.to_word()),
                eq_check(move || Ok((expand_res_2_2(u, v)?, shuffle_recursive(&u.to_word(), &v.to_word())))),
            ));
        }
    }
    out
}

fn nfold_checks(w: u32) -> Vec<(String, Check)> {
    let mut out: Vec<(String, Check)> = Vec::new();
    let describe = |ps: &[(u32, u32)]| ps.iter().map(|&p| run_word(p).to_string()).collect::<Vec<_>>().join(" ⧢ ");
    for p in single_runs(w) {
        for q in single_runs(w - p.0 - p.1) {
            let pair = [p, q];
            out.push((
                describe(&pair),
                eq_check(move || Ok((expand_nfold(&pair)?, shuffle_nfold(&pair.map(run_word))?))),
            ));
            for t in single_runs(w - p.0 - p.1 - q.0 - q.1) {
                let triple = [p, q, t];
                out.push((
                    describe(&triple),
                    eq_check(move || Ok((expand_nfold(&triple)?, shuffle_nfold(&triple.map(run_word))?))),
                ));
            }
        }
    }
    // depth one against unit runs, up to four factors
    for n in 1..=4u32 {
        if 2 * n > w {
            break;
        }
        for exps in (0..=w - 2 * n).flat_map(|t| WeakCompositions::new(t, n as usize)) {
            out.push((
                format!("depth one {exps:?}"),
                eq_check(move || {
                    let pairs: Vec<(u32, u32)> = exps.iter().map(|&a| (a, 1)).collect();
                    Ok((expand_nfold_depth1(&exps)?, expand_nfold(&pairs)?))
                }),
            ));
        }
    }
    out
}

fn appendix_a_checks(w: u32) -> Vec<(String, Check)> {
    let mut out = Vec::new();
    for (a, r) in single_runs(w).into_iter().filter(|p| p.0 >= 1) {
        for (b, s) in single_runs(w - a - r).into_iter().filter(|p| p.0 >= 1) {
            out.push((
                format!("({a},{r},{b},{s})"),
                eq_check(move || Ok((expand_lgm_1_1(a, r, b, s)?, expand_res_1_1(a, r, b, s)?))),
            ));
        }
    }
    out
}

fn appendix_b_checks(w: u32) -> Vec<(String, Check)> {
    let mut out = Vec::new();
    for (a, r) in single_runs(w).into_iter().filter(|p| p.0 >= 1) {
        for v in double_runs(w - a - r).into_iter().filter(|v| v.a1 >= 1 && v.a2 >= 1) {
            let (b1, s1, b2, s2) = (v.a1, v.r1, v.a2, v.r2);
            out.push((
                format!("({a},{r},{b1},{s1},{b2},{s2})"),
                eq_check(move || Ok((expand_lgm_1_2(a, r, b1, s1, b2, s2)?, expand_res_1_2(a, r, b1, s1, b2, s2)?))),
            ));
        }
    }
    out
}

fn checks(suite: Suite, w: u32) -> Vec<(String, Check)> {
    match suite {
        Suite::General => general_checks(w),
        Suite::Special => special_checks(w),
        Suite::Res11 => res11_checks(w),
        Suite::Res12 => res12_checks(w),
        Suite::Res22 => res22_checks(w),
        Suite::Nfold => nfold_checks(w),
        Suite::AppendixA => appendix_a_checks(w),
        Suite::AppendixB => appendix_b_checks(w),
        Suite::All => Vec::new(),
    }
}

/// Runs one suite (or every suite for [`Suite::All`]) with words of total
/// length at most `max_weight`. Grid points are checked in parallel and
/// failures reported in grid order.
pub fn run_suite(suite: Suite, max_weight: u32) -> SuiteReport {
    let start = Instant::now();
    let members: Vec<Suite> = if suite == Suite::All { Suite::INDIVIDUAL.to_vec() } else { vec![suite] };
    let mut checked = 0;
    let mut failures = Vec::new();
    for member in members {
        let grid = checks(member, max_weight);
        checked += grid.len();
        let results: Vec<Option<Failure>> = grid
            .par_iter()
            .map(|(case, check)| {
                let detail = match check() {
                    Ok(None) => return None,
                    Ok(Some(d)) => d,
                    Err(e) => e.to_string(),
                };
                Some(Failure { suite: member, case: case.clone(), detail })
            })
            .collect();
        failures.extend(results.into_iter().flatten());
    }
    SuiteReport { suite, max_weight, checked, failures, elapsed_ms: start.elapsed().as_millis() as u64 }
}
