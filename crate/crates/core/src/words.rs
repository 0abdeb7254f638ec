//! Words over the alphabet {x, y}, their exponent form, and MZV indices.
//!
//! A word in h¹ (nonempty, ending in `y`) is written `x^{a_1} y x^{a_2} y ... x^{a_r} y`
//! and is identified with its exponent form `(a_1, ..., a_r)`. An admissible
//! word additionally starts with `x` and maps to the MZV index
//! `(a_1 + 1, ..., a_r + 1)`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// Default cap on a single exponent in the textual word grammar.
pub const DEFAULT_EXPONENT_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

/// A finite word over {x, y}. The empty word is the unit `1`.
///
/// Words are ordered by length first, then lexicographically with `x < y`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    pub fn ends_with_y(&self) -> bool {
        self.0.last() == Some(&Letter::Y)
    }

    /// `x^a y^r`.
    pub fn x_pow_y_pow(a: u32, r: u32) -> Self {
        let mut v = vec![Letter::X; a as usize];
        v.extend(std::iter::repeat_n(Letter::Y, r as usize));
        Word(v)
    }

    /// Concatenation.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

/// Canonical form: runs collapsed to `x^n`/`y^n`, empty word as `1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (letter, run) in runs(&self.0) {
            if run == 1 {
                write!(f, "{}", letter.as_char())?;
            } else {
                write!(f, "{}^{}", letter.as_char(), run)?;
            }
        }
        Ok(())
    }
}

fn runs(letters: &[Letter]) -> Vec<(Letter, usize)> {
    let mut out: Vec<(Letter, usize)> = Vec::new();
    for &l in letters {
        match out.last_mut() {
            Some((prev, n)) if *prev == l => *n += 1,
            _ => out.push((l, 1)),
        }
    }
    out
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

/// Parses `term*` with `term := ('x' | 'y') ('^' uint)?`, ignoring whitespace.
/// The literal `1` denotes the empty word.
pub fn parse_word(text: &str) -> Result<Word> {
    parse_word_with_cap(text, DEFAULT_EXPONENT_CAP)
}

pub fn parse_word_with_cap(text: &str, cap: u64) -> Result<Word> {
    if text.trim() == "1" {
        return Ok(Word::empty());
    }
    let bytes = text.as_bytes();
    let mut letters = Vec::new();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    loop {
        skip_ws(&mut i);
        if i >= bytes.len() {
            break;
        }
        let letter = match bytes[i] {
            b'x' => Letter::X,
            b'y' => Letter::Y,
            _ => return Err(syntax(text, i)),
        };
        i += 1;
        skip_ws(&mut i);
        let mut count = 1u64;
        if i < bytes.len() && bytes[i] == b'^' {
            i += 1;
            skip_ws(&mut i);
            let start = i;
            let mut value: u64 = 0;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                value = value
                    .saturating_mul(10)
                    .saturating_add(u64::from(bytes[i] - b'0'));
                i += 1;
            }
            if i == start {
                return Err(syntax(text, i));
            }
            if value > cap {
                return Err(Error::ExponentOverflow { offset: start, cap });
            }
            count = value;
        }
        letters.extend(std::iter::repeat_n(letter, count as usize));
    }
    Ok(Word(letters))
}

fn syntax(text: &str, offset: usize) -> Error {
    let found = text[offset..]
        .chars()
        .next()
        .map(|c| c.to_string())
        .unwrap_or_else(|| "end of input".to_string());
    Error::Syntax { offset, found }
}

/// Empty, or starts with `x` and ends with `y` (the words spanning h⁰).
pub fn is_admissible(w: &Word) -> bool {
    match (w.0.first(), w.0.last()) {
        (None, _) => true,
        (Some(first), Some(last)) => *first == Letter::X && *last == Letter::Y,
        _ => unreachable!(),
    }
}

/// `(a_1, ..., a_r)` for `x^{a_1} y ... x^{a_r} y`, with `r >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentForm(Vec<u32>);

impl ExponentForm {
    /// Fails with `DimensionMismatch` on an empty tuple.
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::DimensionMismatch(
                "an exponent form needs at least one block".into(),
            ));
        }
        Ok(ExponentForm(exps))
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    /// Number of `y`s.
    pub fn depth(&self) -> usize {
        self.0.len()
    }

    /// Number of `x`s.
    pub fn x_count(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn to_word(&self) -> Word {
        from_exponent_form(&self.0)
    }
}

impl fmt::Display for ExponentForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

pub fn to_exponent_form(w: &Word) -> Result<ExponentForm> {
    if !w.ends_with_y() {
        return Err(Error::NotInH1(w.to_string()));
    }
    let mut exps = Vec::with_capacity(w.count(Letter::Y));
    let mut run = 0u32;
    for &l in &w.0 {
        match l {
            Letter::X => run += 1,
            Letter::Y => {
                exps.push(run);
                run = 0;
            }
        }
    }
    Ok(ExponentForm(exps))
}

/// Builds `x^{e_1} y ... x^{e_r} y`.
pub fn from_exponent_form(exps: &[u32]) -> Word {
    let len = exps.iter().map(|&e| e as usize + 1).sum();
    let mut v = Vec::with_capacity(len);
    for &e in exps {
        v.extend(std::iter::repeat_n(Letter::X, e as usize));
        v.push(Letter::Y);
    }
    Word(v)
}

/// `(k_1, ..., k_n)` with every `k_i >= 1` and `k_1 >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MzvIndex(Vec<u32>);

impl MzvIndex {
    pub fn new(ks: Vec<u32>) -> Result<Self> {
        let text = ks.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        if ks.is_empty() {
            return Err(Error::InvalidIndex { text, reason: "empty index".into() });
        }
        if ks.contains(&0) {
            return Err(Error::InvalidIndex { text, reason: "entries must be positive".into() });
        }
        if ks[0] < 2 {
            return Err(Error::NotAdmissible(format!("zeta({text}) diverges: k_1 must be at least 2")));
        }
        Ok(MzvIndex(ks))
    }

    pub fn ks(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    /// The admissible word `x^{k_1-1} y ... x^{k_n-1} y`.
    pub fn to_word(&self) -> Word {
        let exps: Vec<u32> = self.0.iter().map(|k| k - 1).collect();
        from_exponent_form(&exps)
    }
}

impl fmt::Display for MzvIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for MzvIndex {
    type Err = Error;

    /// Comma-separated positive integers, e.g. `"3,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut ks = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let k: u32 = part.parse().map_err(|_| Error::InvalidIndex {
                text: s.to_string(),
                reason: format!("{part:?} is not a positive integer"),
            })?;
            ks.push(k);
        }
        MzvIndex::new(ks)
    }
}

pub fn word_to_mzv(w: &Word) -> Result<MzvIndex> {
    if w.is_empty() || !is_admissible(w) {
        return Err(Error::NotAdmissible(w.to_string()));
    }
    let ef = to_exponent_form(w)?;
    Ok(MzvIndex(ef.0.iter().map(|a| a + 1).collect()))
}

/// All words of exactly length `n`, in canonical order.
pub fn all_words(n: usize) -> impl Iterator<Item = Word> {
    (0u64..1u64 << n).map(move |bits| {
        Word(
            (0..n)
                .map(|i| if bits >> (n - 1 - i) & 1 == 1 { Letter::Y } else { Letter::X })
                .collect(),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::{X, Y};

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(w("xxyy"), Word::new(vec![X, X, Y, Y]));
        assert_eq!(w("x^2 y x y"), Word::new(vec![X, X, Y, X, Y]));
        assert_eq!(w(""), Word::empty());
        assert_eq!(w("1"), Word::empty());
        assert_eq!(w("y^0x"), Word::new(vec![X]));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            parse_word("xyz"),
            Err(Error::Syntax { offset: 2, found: "z".into() })
        );
        assert!(matches!(parse_word("x^"), Err(Error::Syntax { offset: 2, .. })));
        assert_eq!(
            parse_word("x^1000001"),
            Err(Error::ExponentOverflow { offset: 2, cap: DEFAULT_EXPONENT_CAP })
        );
        assert!(parse_word_with_cap("x^11", 10).is_err());
    }

    #[test]
    fn canonical_printing() {
        assert_eq!(w("xxyxy").to_string(), "x^2yxy");
        assert_eq!(Word::empty().to_string(), "1");
        assert_eq!(w("yyyx").to_string(), "y^3x");
    }

    #[test]
    fn admissibility() {
        assert!(is_admissible(&w("xy")));
        assert!(!is_admissible(&w("yx")));
        assert!(is_admissible(&Word::empty()));
        assert!(!is_admissible(&w("y")));
        assert!(!is_admissible(&w("x")));
    }

    #[test]
    fn exponent_forms() {
        assert_eq!(to_exponent_form(&w("xxyy")).unwrap().exps(), &[2, 0]);
        assert_eq!(to_exponent_form(&w("xyxy")).unwrap().exps(), &[1, 1]);
        assert_eq!(to_exponent_form(&w("xxy")).unwrap().exps(), &[2]);
        assert!(matches!(to_exponent_form(&w("yx")), Err(Error::NotInH1(_))));
        assert!(matches!(to_exponent_form(&Word::empty()), Err(Error::NotInH1(_))));
        assert!(ExponentForm::new(vec![]).is_err());
    }

    #[test]
    fn mzv_indices() {
        assert_eq!(word_to_mzv(&w("xxyy")).unwrap().ks(), &[3, 1]);
        assert_eq!(word_to_mzv(&w("xyxy")).unwrap().ks(), &[2, 2]);
        assert_eq!(word_to_mzv(&w("xyy")).unwrap().ks(), &[2, 1]);
        assert!(matches!(word_to_mzv(&w("yxy")), Err(Error::NotAdmissible(_))));
        assert!(word_to_mzv(&Word::empty()).is_err());
        let idx: MzvIndex = "3,1".parse().unwrap();
        assert_eq!(idx.to_word(), w("x^2yy"));
        assert_eq!(idx.to_string(), "3,1");
        assert!(matches!("1,2".parse::<MzvIndex>(), Err(Error::NotAdmissible(_))));
        assert!(matches!("2,0".parse::<MzvIndex>(), Err(Error::InvalidIndex { .. })));
        assert!("2,a".parse::<MzvIndex>().is_err());
    }

    #[test]
    fn ordering_is_length_then_lex() {
        let mut v = [w("y"), w("xx"), w("x"), w("yx"), w("xy")];
        v.sort();
        let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["x", "y", "x^2", "xy", "yx"]);
    }

    #[test]
    fn exhaustive_round_trips() {
        for n in 0..=12 {
            for word in all_words(n) {
                assert_eq!(parse_word(&word.to_string()).unwrap(), word);
                if word.ends_with_y() {
                    let ef = to_exponent_form(&word).unwrap();
                    assert_eq!(ef.to_word(), word);
                }
                if !word.is_empty() && is_admissible(&word) {
                    let idx = word_to_mzv(&word).unwrap();
                    assert_eq!(idx.weight() as usize, word.len());
                    assert_eq!(idx.depth(), word.count(Letter::Y));
                }
            }
        }
    }
}
