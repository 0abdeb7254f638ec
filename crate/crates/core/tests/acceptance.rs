//! Acceptance gate. Prints one line per criterion and exits non-zero if any
//! criterion fails or overruns its time budget.

use mzv_shuffle::numeric::identity_check;
use mzv_shuffle::suites::{run_suite, Suite, SuiteReport};
use mzv_shuffle::words::all_words;
use mzv_shuffle::{
    binom, expand_euler, expand_general, is_admissible, parse_word, shuffle_permutation, shuffle_recursive,
    vandermonde_check, ExponentForm, LinComb, Word,
};
use mzv_shuffle::restricted::expand_res_1_1;
use num_bigint::BigInt;
use rayon::prelude::*;
use std::process::ExitCode;
use std::time::{Duration, Instant};

struct Outcome {
    pass: bool,
    detail: String,
}

fn from_reports(reports: &[SuiteReport]) -> Outcome {
    let checked: usize = reports.iter().map(|r| r.checked).sum();
    let first = reports.iter().flat_map(|r| r.failures.first()).next();
    let failed: usize = reports.iter().map(|r| r.failures.len()).sum();
    match first {
        None => Outcome { pass: true, detail: format!("{checked} cases") },
        Some(f) => Outcome {
            pass: false,
            detail: format!("{failed}/{checked} failed, first {} {}: {}", f.suite, f.case, f.detail),
        },
    }
}

fn euler() -> Outcome {
    let xy = parse_word("xy").unwrap();
    let expected: LinComb =
        [(parse_word("xyxy").unwrap(), BigInt::from(2)), (parse_word("xxyy").unwrap(), BigInt::from(4))]
            .into_iter()
            .collect();
    let methods = [
        ("recursive", shuffle_recursive(&xy, &xy)),
        ("permutation", shuffle_permutation(&xy, &xy)),
        ("general", expand_general(&ExponentForm::new(vec![1]).unwrap(), &ExponentForm::new(vec![1]).unwrap())),
        ("res11", expand_res_1_1(1, 1, 1, 1).unwrap()),
        ("euler", expand_euler(1, 1)),
    ];
    let bad: Vec<&str> = methods.iter().filter(|(_, p)| *p != expected).map(|(n, _)| *n).collect();
    Outcome { pass: bad.is_empty(), detail: if bad.is_empty() { format!("= {expected}") } else { format!("mismatch in {bad:?}") } }
}

fn words_up_to(n: usize) -> Vec<Word> {
    (0..=n).flat_map(all_words).collect()
}

fn properties() -> Outcome {
    let words = words_up_to(10);
    let pairs: Vec<(&Word, &Word)> =
        words.iter().flat_map(|u| words.iter().filter(move |v| u.len() + v.len() <= 10).map(move |v| (u, v))).collect();
    let pair_fail = pairs.par_iter().find_map_first(|&(u, v)| {
        let p = shuffle_recursive(u, v);
        if p != shuffle_recursive(v, u) {
            return Some(format!("commutativity {u} {v}"));
        }
        let (n, ys) = (u.len() + v.len(), u.count(mzv_shuffle::Letter::Y) + v.count(mzv_shuffle::Letter::Y));
        if p.words().any(|w| w.len() != n || w.count(mzv_shuffle::Letter::Y) != ys) {
            return Some(format!("homogeneity {u} {v}"));
        }
        if p.coefficient_sum() != binom(n as i64, u.len() as i64).unwrap() {
            return Some(format!("coefficient sum {u} {v}"));
        }
        let h1 = |w: &Word| w.ends_with_y();
        if h1(u) && h1(v) && !p.words().all(h1) {
            return Some(format!("h1 closure {u} {v}"));
        }
        let h0 = |w: &Word| !w.is_empty() && is_admissible(w);
        if h0(u) && h0(v) && !p.words().all(h0) {
            return Some(format!("h0 closure {u} {v}"));
        }
        None
    });
    let short = words_up_to(9);
    let triples: Vec<(&Word, &Word, &Word)> = short
        .iter()
        .flat_map(|u| short.iter().filter(move |v| u.len() + v.len() <= 9).map(move |v| (u, v)))
        .flat_map(|(u, v)| short.iter().filter(move |w| u.len() + v.len() + w.len() <= 9).map(move |w| (u, v, w)))
        .collect();
    let triple_fail = triples.par_iter().find_map_first(|&(u, v, w)| {
        let left = mzv_shuffle::shuffle_lincomb(&shuffle_recursive(u, v), &LinComb::monomial(w.clone(), 1));
        let right = mzv_shuffle::shuffle_lincomb(&LinComb::monomial(u.clone(), 1), &shuffle_recursive(v, w));
        (left != right).then(|| format!("associativity {u} {v} {w}"))
    });
    match pair_fail.or(triple_fail) {
        None => Outcome { pass: true, detail: format!("{} pairs, {} triples", pairs.len(), triples.len()) },
        Some(d) => Outcome { pass: false, detail: d },
    }
}

fn vandermonde() -> Outcome {
    let bad: Vec<_> = (0..=12)
        .flat_map(|k| (0..=12).flat_map(move |l| (0..=12).map(move |n| (k, l, n))))
        .filter(|&(k, l, n)| !vandermonde_check(k, l, n))
        .collect();
    Outcome { pass: bad.is_empty(), detail: if bad.is_empty() { "2197 triples".into() } else { format!("fails at {:?}", bad[0]) } }
}

fn homomorphism() -> Outcome {
    let adm: Vec<Word> = (2..=5).flat_map(all_words).filter(is_admissible).collect();
    let pairs: Vec<(&Word, &Word)> = adm
        .iter()
        .flat_map(|u| adm.iter().filter(move |v| u.len() + v.len() <= 7).map(move |v| (u, v)))
        .collect();
    let results: Vec<_> = pairs.par_iter().map(|&(u, v)| (u, v, identity_check(u, v, 20_000))).collect();
    let mut worst = 0.0f64;
    for (u, v, r) in &results {
        match r {
            Ok(c) if c.passes() => worst = worst.max(c.residual),
            Ok(c) => {
                return Outcome { pass: false, detail: format!("{u} {v}: residual {:.3e} > bound {:.3e}", c.residual, c.bound) }
            }
            Err(e) => return Outcome { pass: false, detail: format!("{u} {v}: {e}") },
        }
    }
    Outcome { pass: true, detail: format!("{} pairs, max residual {worst:.2e}", results.len()) }
}

fn main() -> ExitCode {
    type Criterion = (&'static str, Duration, Box<dyn Fn() -> Outcome>);
    let criteria: Vec<Criterion> = vec![
        ("euler case xy ⧢ xy, every method", Duration::from_millis(1), Box::new(euler)),
        ("general formula, length <= 8", Duration::from_secs(60), Box::new(|| from_reports(&[run_suite(Suite::General, 8)]))),
        ("specializations, length <= 9", Duration::from_secs(120), Box::new(|| from_reports(&[run_suite(Suite::Special, 9)]))),
        (
            "restricted families, length <= 10",
            Duration::from_secs(180),
            Box::new(|| from_reports(&[Suite::Res11, Suite::Res12, Suite::Res22].map(|s| run_suite(s, 10)))),
        ),
        ("n-fold, length <= 9", Duration::from_secs(120), Box::new(|| from_reports(&[run_suite(Suite::Nfold, 9)]))),
        (
            "older formulas vs restricted, length <= 10",
            Duration::from_secs(120),
            Box::new(|| from_reports(&[Suite::AppendixA, Suite::AppendixB].map(|s| run_suite(s, 10)))),
        ),
        ("algebraic properties", Duration::from_secs(60), Box::new(properties)),
        ("vandermonde, 0..=12", Duration::from_secs(1), Box::new(vandermonde)),
        ("numeric homomorphism, weight <= 7", Duration::from_secs(30), Box::new(homomorphism)),
    ];
    let mut all = true;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let pass = out.pass && took <= budget;
        all &= pass;
        let over = if took > budget { " OVER BUDGET" } else { "" };
        println!(
            "{} {name}: {} ({:.3}s, budget {}s{over})",
            if pass { "PASS" } else { "FAIL" },
            out.detail,
            took.as_secs_f64(),
            budget.as_secs_f64()
        );
    }
    if all { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
