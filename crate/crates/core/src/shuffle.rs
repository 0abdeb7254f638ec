//! Ground-truth shuffle products.
//!
//! Two structurally independent routes: a dynamic program over suffix pairs
//! implementing `a·w₁ ⧢ b·w₂ = a(w₁ ⧢ b·w₂) + b(a·w₁ ⧢ w₂)`, and a direct
//! enumeration of the `binom(|u|+|v|, |u|)` order-preserving interleavings.

use crate::count::Count;
use crate::error::{Error, Result};
use crate::poly::LinComb;
use crate::words::{Letter, Word};
use itertools::Itertools;
use num_bigint::BigInt;
use std::collections::HashMap;

type Cell = HashMap<Vec<Letter>, Count>;

/// `u ⧢ v` via the recursive rules, tabulated over suffix pairs
/// `(u[i..], v[j..])`. Words are built back to front.
pub fn shuffle_recursive(u: &Word, v: &Word) -> LinComb {
    let (u, v) = (u.letters(), v.letters());
    let (n, m) = (u.len(), v.len());

    // row[j] holds u[i..] ⧢ v[j..] with each word stored reversed.
    let mut next: Vec<Cell> = Vec::with_capacity(m + 1);
    for j in 0..=m {
        let mut c = Cell::new();
        c.insert(v[j..].iter().rev().copied().collect(), Count::ONE);
        next.push(c);
    }
    for i in (0..n).rev() {
        let mut row: Vec<Cell> = vec![Cell::new(); m + 1];
        row[m] = prepend(&next[m], u[i]);
        for j in (0..m).rev() {
            let mut cell = prepend(&next[j], u[i]);
            for (w, c) in &row[j + 1] {
                let mut w = w.clone();
                w.push(v[j]);
                cell.entry(w).or_insert(Count::ZERO).add_assign(c);
            }
            row[j] = cell;
        }
        next = row;
    }
    next.swap_remove(0)
        .into_iter()
        .map(|(mut w, c)| {
            w.reverse();
            (Word::new(w), c.to_bigint())
        })
        .collect()
}

fn prepend(cell: &Cell, letter: Letter) -> Cell {
    cell.iter()
        .map(|(w, c)| {
            let mut w = w.clone();
            w.push(letter);
            (w, c.clone())
        })
        .collect()
}

/// `u ⧢ v` by enumerating every choice of the positions occupied by `u`.
pub fn shuffle_permutation(u: &Word, v: &Word) -> LinComb {
    let (u, v) = (u.letters(), v.letters());
    let total = u.len() + v.len();
    let mut counts: HashMap<Vec<Letter>, u64> = HashMap::new();
    for positions in (0..total).combinations(u.len()) {
        let mut word = Vec::with_capacity(total);
        let (mut iu, mut iv) = (0, 0);
        let mut next_pos = positions.iter().peekable();
        for k in 0..total {
            if next_pos.peek() == Some(&&k) {
                next_pos.next();
                word.push(u[iu]);
                iu += 1;
            } else {
                word.push(v[iv]);
                iv += 1;
            }
        }
        *counts.entry(word).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(w, c)| (Word::new(w), BigInt::from(c)))
        .collect()
}

/// Bilinear extension of [`shuffle_recursive`].
pub fn shuffle_lincomb(p: &LinComb, q: &LinComb) -> LinComb {
    let mut out = LinComb::zero();
    for (u, cu) in p.iter() {
        for (v, cv) in q.iter() {
            let coeff = cu * cv;
            for (w, c) in shuffle_recursive(u, v).iter() {
                out.add_term(w.clone(), c * &coeff);
            }
        }
    }
    out
}

/// `w₁ ⧢ w₂ ⧢ ... ⧢ w_n` as a left fold.
pub fn shuffle_nfold(ws: &[Word]) -> Result<LinComb> {
    let (first, rest) = ws.split_first().ok_or(Error::EmptyProduct)?;
    let mut acc = LinComb::monomial(first.clone(), 1);
    for w in rest {
        acc = shuffle_lincomb(&acc, &LinComb::monomial(w.clone(), 1));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    fn lc(terms: &[(&str, i64)]) -> LinComb {
        terms.iter().map(|(s, c)| (w(s), BigInt::from(*c))).collect()
    }

    #[test]
    fn euler_example() {
        let expected = lc(&[("xyxy", 2), ("xxyy", 4)]);
        assert_eq!(shuffle_recursive(&w("xy"), &w("xy")), expected);
        assert_eq!(shuffle_permutation(&w("xy"), &w("xy")), expected);
    }

    #[test]
    fn unit_is_identity() {
        assert_eq!(shuffle_recursive(&Word::empty(), &w("xyy")), lc(&[("xyy", 1)]));
        assert_eq!(shuffle_recursive(&w("yx"), &Word::empty()), lc(&[("yx", 1)]));
        assert_eq!(shuffle_permutation(&Word::empty(), &Word::empty()), lc(&[("1", 1)]));
        assert_eq!(shuffle_recursive(&Word::empty(), &Word::empty()), lc(&[("1", 1)]));
    }

    #[test]
    fn hand_unrolled() {
        // x(y ⧢ y) + y·xy
        assert_eq!(shuffle_recursive(&w("xy"), &w("y")), lc(&[("xyy", 2), ("yxy", 1)]));
        assert_eq!(shuffle_permutation(&w("x"), &w("y")), lc(&[("xy", 1), ("yx", 1)]));
        // Four interleavings of y into xxy.
        assert_eq!(
            shuffle_permutation(&w("xxy"), &w("y")),
            lc(&[("xxyy", 2), ("xyxy", 1), ("yxxy", 1)])
        );
    }

    #[test]
    fn nfold() {
        assert_eq!(shuffle_nfold(&[w("xy")]).unwrap(), lc(&[("xy", 1)]));
        assert_eq!(shuffle_nfold(&[w("y"), w("y"), w("y")]).unwrap(), lc(&[("yyy", 6)]));
        let p = shuffle_nfold(&[w("xy"), w("xy"), w("xy")]).unwrap();
        assert_eq!(p.coefficient_sum(), BigInt::from(90));
        assert_eq!(shuffle_nfold(&[]), Err(Error::EmptyProduct));
    }
}
