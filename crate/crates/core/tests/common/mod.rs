#![allow(dead_code)]

use mzv_shuffle::{LinComb, Letter, Word};
use num_bigint::BigInt;

/// Every interleaving of `u` and `v`, with the factor (0 for `u`, 1 for `v`)
/// each `y` came from.
pub fn labeled_shuffle(u: &Word, v: &Word) -> Vec<(Word, Vec<u8>)> {
    let (u, v) = (u.letters(), v.letters());
    let mut out = Vec::new();
    let mut letters = Vec::with_capacity(u.len() + v.len());
    let mut labels = Vec::new();
    walk(u, v, &mut letters, &mut labels, &mut out);
    out
}

fn walk(u: &[Letter], v: &[Letter], letters: &mut Vec<Letter>, labels: &mut Vec<u8>, out: &mut Vec<(Word, Vec<u8>)>) {
    if u.is_empty() && v.is_empty() {
        out.push((Word::new(letters.clone()), labels.clone()));
        return;
    }
    for (side, rest) in [(0u8, u), (1u8, v)] {
        if let Some((&first, tail)) = rest.split_first() {
            letters.push(first);
            if first == Letter::Y {
                labels.push(side);
            }
            if side == 0 {
                walk(tail, v, letters, labels, out);
            } else {
                walk(u, tail, letters, labels, out);
            }
            if first == Letter::Y {
                labels.pop();
            }
            letters.pop();
        }
    }
}

/// Sum of the interleavings whose `y`-labels satisfy `keep`.
pub fn shuffle_where(u: &Word, v: &Word, keep: impl Fn(&[u8]) -> bool) -> LinComb {
    labeled_shuffle(u, v)
        .into_iter()
        .filter(|(_, labels)| keep(labels))
        .map(|(w, _)| (w, BigInt::from(1)))
        .collect()
}

/// 1-based position of the `k`-th `y` with label `side`; past the end when
/// there is none.
pub fn nth(labels: &[u8], side: u8, k: usize) -> usize {
    labels
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == side)
        .nth(k - 1)
        .map(|(i, _)| i + 1)
        .unwrap_or(usize::MAX)
}
