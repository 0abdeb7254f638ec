//! Integer linear combinations of words: elements of h with ℤ coefficients.

use crate::error::{Error, Result};
use crate::words::{is_admissible, parse_word, word_to_mzv, Letter, Word};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

/// Finite map `Word -> BigInt` with no zero entries, iterated in canonical
/// word order (length, then lexicographic with `x < y`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LinComb {
    terms: BTreeMap<Word, BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Plain,
    /// LaTeX; switches to ζ-notation when every word is admissible.
    Latex,
    Json,
}

impl LinComb {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(word: Word, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(word, coeff.into());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Word, BigInt> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, word: Word, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> LinComb {
        if c.is_zero() {
            return LinComb::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.render_plain(),
            Format::Latex => {
                let zeta = self.words().all(is_admissible);
                self.render_latex(zeta)
            }
            Format::Json => self.to_json(),
        }
    }

    fn render_plain(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => out.push('-'),
                (_, false) => out.push_str(" + "),
                (_, true) => out.push_str(" - "),
            }
            if mag.is_one() {
                out.push_str(&w.to_string());
            } else {
                out.push_str(&format!("{mag}*{w}"));
            }
        }
        out
    }

    /// LaTeX rendering. With `zeta`, every word must be admissible and is
    /// written as `\zeta(k_1,...,k_n)` (the empty word as `1`).
    pub fn render_latex(&self, zeta: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let mag = c.abs();
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            if w.is_empty() {
                if mag.is_one() {
                    out.push('1');
                }
                continue;
            }
            match word_to_mzv(w) {
                Ok(idx) if zeta => out.push_str(&format!("\\zeta({idx})")),
                _ => out.push_str(&latex_word(w)),
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&JsonLinComb::from(self)).expect("serializing strings cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: JsonLinComb = serde_json::from_str(text)
            .map_err(|e| Error::Syntax { offset: e.column(), found: e.to_string() })?;
        let mut p = LinComb::zero();
        for t in raw.terms {
            let coeff: BigInt = t.coeff.parse().map_err(|_| Error::Syntax {
                offset: 0,
                found: t.coeff.clone(),
            })?;
            p.add_term(parse_word(&t.word)?, coeff);
        }
        Ok(p)
    }
}

fn latex_word(w: &Word) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut out = String::new();
    let letters = w.letters();
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut j = i;
        while j < letters.len() && letters[j] == l {
            j += 1;
        }
        let c = if l == Letter::X { 'x' } else { 'y' };
        if j - i == 1 {
            out.push(c);
        } else {
            out.push_str(&format!("{c}^{{{}}}", j - i));
        }
        i = j;
    }
    out
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    word: String,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct JsonLinComb {
    terms: Vec<JsonTerm>,
}

impl From<&LinComb> for JsonLinComb {
    fn from(p: &LinComb) -> Self {
        JsonLinComb {
            terms: p
                .iter()
                .map(|(w, c)| JsonTerm { word: w.to_string(), coeff: c.to_string() })
                .collect(),
        }
    }
}

impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_plain())
    }
}

impl AddAssign<&LinComb> for LinComb {
    fn add_assign(&mut self, rhs: &LinComb) {
        for (w, c) in rhs.iter() {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl Add<&LinComb> for &LinComb {
    type Output = LinComb;

    fn add(self, rhs: &LinComb) -> LinComb {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LinComb {
    type Output = LinComb;

    fn add(mut self, rhs: LinComb) -> LinComb {
        self += &rhs;
        self
    }
}

impl Neg for &LinComb {
    type Output = LinComb;

    fn neg(self) -> LinComb {
        LinComb { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Sub<&LinComb> for &LinComb {
    type Output = LinComb;

    fn sub(self, rhs: &LinComb) -> LinComb {
        self + &(-rhs)
    }
}

impl FromIterator<(Word, BigInt)> for LinComb {
    fn from_iter<I: IntoIterator<Item = (Word, BigInt)>>(iter: I) -> Self {
        let mut p = LinComb::zero();
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    fn lc(terms: &[(&str, i64)]) -> LinComb {
        terms.iter().map(|(s, c)| (w(s), BigInt::from(*c))).collect()
    }

    #[test]
    fn addition() {
        let p = &lc(&[("xyxy", 2)]) + &lc(&[("xxyy", 4)]);
        assert_eq!(p.coefficient(&w("xyxy")), BigInt::from(2));
        assert_eq!(p.coefficient(&w("xxyy")), BigInt::from(4));
        assert_eq!(&p + &LinComb::zero(), p);
        assert!((&lc(&[("xy", 3)]) + &lc(&[("xy", -3)])).is_zero());
    }

    #[test]
    fn scaling() {
        assert_eq!(lc(&[("xy", 1)]).scale(&2.into()), lc(&[("xy", 2)]));
        assert!(lc(&[("xy", 5)]).scale(&0.into()).is_zero());
        assert_eq!(lc(&[("xxyy", 4)]).scale(&(-1).into()), lc(&[("xxyy", -4)]));
    }

    #[test]
    fn coefficient_sums() {
        assert_eq!(lc(&[("xyxy", 2), ("xxyy", 4)]).coefficient_sum(), BigInt::from(6));
        assert_eq!(LinComb::zero().coefficient_sum(), BigInt::from(0));
        assert_eq!(lc(&[("xy", -1), ("yy", 1)]).coefficient_sum(), BigInt::from(0));
    }

    #[test]
    fn rendering() {
        let p = lc(&[("xyxy", 2), ("xxyy", 4)]);
        assert_eq!(p.render(Format::Plain), "4*x^2y^2 + 2*xyxy");
        assert_eq!(p.render(Format::Latex), "4\\zeta(3,1)+2\\zeta(2,2)");
        assert_eq!(p.render_latex(false), "4x^{2}y^{2}+2xyxy");
        assert_eq!(LinComb::zero().render(Format::Plain), "0");
        assert_eq!(LinComb::zero().render(Format::Latex), "0");
        assert_eq!(lc(&[("xy", -1), ("yy", 3)]).render(Format::Plain), "-xy + 3*y^2");
        assert_eq!(lc(&[("xy", 1), ("yx", -1)]).render(Format::Latex), "xy-yx");
        assert_eq!(LinComb::monomial(Word::empty(), 1).render(Format::Latex), "1");
        assert_eq!(LinComb::monomial(Word::empty(), 3).render(Format::Plain), "3*1");
    }

    #[test]
    fn json_schema_shape() {
        let p = lc(&[("xyxy", 2), ("xxyy", 4)]);
        let v: serde_json::Value = serde_json::from_str(&p.to_json()).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"terms": [
                {"word": "x^2y^2", "coeff": "4"},
                {"word": "xyxy", "coeff": "2"}
            ]})
        );
        assert_eq!(LinComb::from_json(&p.to_json()).unwrap(), p);
        let huge = LinComb::monomial(w("y"), BigInt::from(u128::MAX) * 7);
        assert_eq!(LinComb::from_json(&huge.to_json()).unwrap(), huge);
    }

    fn arb_lincomb() -> impl Strategy<Value = LinComb> {
        let word = proptest::collection::vec(prop_oneof![Just(Letter::X), Just(Letter::Y)], 0..4)
            .prop_map(Word::new);
        proptest::collection::vec((word, -5i64..5), 0..6)
            .prop_map(|ts| ts.into_iter().map(|(w, c)| (w, BigInt::from(c))).collect())
    }

    proptest! {
        #[test]
        fn add_commutes_and_associates(p in arb_lincomb(), q in arb_lincomb(), r in arb_lincomb()) {
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert!(p.iter().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn scale_distributes(p in arb_lincomb(), q in arb_lincomb(), c in -4i64..4) {
            let c = BigInt::from(c);
            prop_assert_eq!((&p + &q).scale(&c), &p.scale(&c) + &q.scale(&c));
        }

        #[test]
        fn plain_render_is_injective(p in arb_lincomb(), q in arb_lincomb()) {
            prop_assert_eq!(p.render(Format::Plain) == q.render(Format::Plain), p == q);
        }
    }
}
