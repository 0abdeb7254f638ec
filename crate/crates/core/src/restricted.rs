//! Expansions for words with runs of `y`: `x^a y^r ⧢ x^b y^s`, the one-run by
//! two-run product, the two-run by two-run product, and the `n`-fold product
//! of single-run words.
//!
//! Each closed form sums over the possible orders of the `y`s of the two
//! factors (written `y_1` and `y_2`), then places the `x`s. Run counts such
//! as `binom(l + s − 2, l)` count interleavings `y_1^l ⧢ y_2^{s−2}`; when
//! `s = 1` the bracket is empty and the count is `[l = 0]`.

use crate::closed_form::expand_by_coefficient;
use crate::combinatorics::{permutations, Compositions, WeakCompositions};
use crate::count::{choose, Count};
use crate::error::{Error, Result};
use crate::poly::LinComb;
use crate::words::Word;

/// Largest number of factors accepted by [`expand_nfold`].
pub const NFOLD_MAX_FACTORS: usize = 8;

/// The word `x^{a_1} y^{r_1} x^{a_2} y^{r_2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoubleRun {
    pub a1: u32,
    pub r1: u32,
    pub a2: u32,
    pub r2: u32,
}

impl DoubleRun {
    pub fn new(a1: u32, r1: u32, a2: u32, r2: u32) -> Self {
        DoubleRun { a1, r1, a2, r2 }
    }

    pub fn to_word(&self) -> Word {
        Word::x_pow_y_pow(self.a1, self.r1).concat(&Word::x_pow_y_pow(self.a2, self.r2))
    }

    pub fn len(&self) -> u32 {
        self.a1 + self.r1 + self.a2 + self.r2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Interleavings of `k` letters with `top − k` others, i.e. `binom(top, k)`,
/// reading an empty bracket (`top = −1`, `k = 0`) as one arrangement.
fn runs(top: i64, k: i64) -> Count {
    if top == -1 && k == 0 {
        Count::ONE
    } else {
        choose(top, k)
    }
}

/// 1-indexed view of an exponent tuple with prefix sums.
struct Alphas<'a> {
    al: &'a [u32],
    prefix: Vec<i64>,
}

impl<'a> Alphas<'a> {
    fn new(al: &'a [u32]) -> Self {
        let mut prefix = Vec::with_capacity(al.len() + 1);
        prefix.push(0);
        for &x in al {
            prefix.push(prefix.last().unwrap() + x as i64);
        }
        Alphas { al, prefix }
    }

    fn at(&self, i: usize) -> i64 {
        self.al[i - 1] as i64
    }

    /// `α_1 + … + α_p`
    fn sum_to(&self, p: usize) -> i64 {
        self.prefix[p]
    }

    /// `α_lo + … + α_hi`, zero when empty.
    fn sum(&self, lo: usize, hi: usize) -> i64 {
        if hi < lo {
            0
        } else {
            self.prefix[hi] - self.prefix[lo - 1]
        }
    }

    /// `α_i = 0` for `lo ≤ i ≤ hi`.
    fn zeros(&self, lo: usize, hi: usize) -> bool {
        self.sum(lo, hi.min(self.al.len())) == 0
    }
}

fn product(factors: &[Count]) -> Count {
    let mut acc = Count::ONE;
    for f in factors {
        if f.is_zero() {
            return Count::ZERO;
        }
        acc = acc.mul(f);
    }
    acc
}

fn require_runs(values: &[u32], what: &'static str) -> Result<()> {
    if values.contains(&0) {
        return Err(Error::PositivityRequired(what));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// x^a y^r ⧢ x^b y^s

fn res11_half(al: &Alphas, a: u32, r: u32, s: u32) -> Count {
    let (r, s) = (r as usize, s as usize);
    let mut total = Count::ZERO;
    for l in 1..=r {
        if !al.zeros(l + 2, r + s) {
            continue;
        }
        total.add_assign(&product(&[
            choose(al.at(1), a as i64),
            runs((r + s - l - 1) as i64, (r - l) as i64),
        ]));
    }
    total
}

pub(crate) fn res11_coefficient(al: &[u32], a: u32, r: u32, b: u32, s: u32) -> Count {
    let al = Alphas::new(al);
    let mut c = res11_half(&al, a, r, s);
    c.add_assign(&res11_half(&al, b, s, r));
    c
}

/// `x^a y^r ⧢ x^b y^s` for `r, s ≥ 1`.
pub fn expand_res_1_1(a: u32, r: u32, b: u32, s: u32) -> Result<LinComb> {
    require_runs(&[r, s], "run lengths r, s must be at least 1")?;
    Ok(expand_by_coefficient(a + b, (r + s) as usize, |al| {
        res11_coefficient(al, a, r, b, s)
    }))
}

// ---------------------------------------------------------------------------
// x^a y^r ⧢ x^{b_1} y^{s_1} x^{b_2} y^{s_2}

/// Parameters `(a, r; b_1, s_1, b_2, s_2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Res12 {
    pub a: u32,
    pub r: u32,
    pub b: DoubleRun,
}

impl Res12 {
    fn depth(&self) -> usize {
        (self.r + self.b.r1 + self.b.r2) as usize
    }

    fn x_total(&self) -> u32 {
        self.a + self.b.a1 + self.b.a2
    }
}

/// Orders of the `y`s in the one-run by two-run product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Res12Case {
    /// A `y_1` comes first.
    I,
    /// `y_2` first, the first `y_1` before the last `y_2` of the first run.
    II,
    /// The first `y_2`-run complete, then `y_1` before the second run starts.
    III,
    /// Both the first run and part of the second run precede every `y_1`.
    IV,
}

impl Res12Case {
    pub const ALL: [Res12Case; 4] = [Res12Case::I, Res12Case::II, Res12Case::III, Res12Case::IV];
}

fn res12_case(al: &Alphas, p: &Res12, case: Res12Case) -> Count {
    let (a, b1, b2) = (p.a as i64, p.b.a1 as i64, p.b.a2 as i64);
    let (r, s1, s2) = (p.r as usize, p.b.r1 as usize, p.b.r2 as usize);
    let n = r + s1 + s2;
    let mut total = Count::ZERO;
    match case {
        Res12Case::I => {
            for rs in WeakCompositions::new(r as u32 - 1, 4) {
                let (r1, r2, r3, r4) = (rs[0] as usize + 1, rs[1] as usize, rs[2] as usize, rs[3] as usize);
                if al.sum_to(r1 + 1) != a + b1
                    || !al.zeros(r1 + 2, r1 + r2 + s1)
                    || !al.zeros(r1 + r2 + r3 + s1 + 2, n)
                {
                    continue;
                }
                total.add_assign(&product(&[
                    choose(al.at(1), a),
                    runs((r2 + s1) as i64 - 2, r2 as i64),
                    runs((r4 + s2) as i64 - 1, r4 as i64),
                ]));
            }
        }
        Res12Case::II => {
            for rs in WeakCompositions::new(r as u32 - 1, 3) {
                let (r1, r2, r3) = (rs[0] as usize + 1, rs[1] as usize, rs[2] as usize);
                for l in 1..s1 {
                    if al.sum_to(l + 1) != a + b1 || !al.zeros(l + 2, r1 + s1) || !al.zeros(r1 + r2 + s1 + 2, n) {
                        continue;
                    }
                    total.add_assign(&product(&[
                        choose(al.at(1), b1),
                        runs((r1 + s1 - l) as i64 - 2, r1 as i64 - 1),
                        runs((r3 + s2) as i64 - 1, r3 as i64),
                    ]));
                }
            }
        }
        Res12Case::III => {
            for r1 in 1..=r {
                let r2 = r - r1;
                if !al.zeros(r1 + s1 + 2, n) {
                    continue;
                }
                total.add_assign(&product(&[
                    choose(al.at(1), b1),
                    choose(al.at(s1 + 1), a + b1 - al.sum_to(s1)),
                    runs((r2 + s2) as i64 - 1, r2 as i64),
                ]));
            }
        }
        Res12Case::IV => {
            for l in 1..=s2 {
                if !al.zeros(s1 + l + 2, n) {
                    continue;
                }
                total.add_assign(&product(&[
                    choose(al.at(1), b1),
                    choose(al.at(s1 + 1), b2),
                    runs((r + s2 - l) as i64 - 1, r as i64 - 1),
                ]));
            }
        }
    }
    total
}

fn check_res12(p: &Res12) -> Result<()> {
    require_runs(&[p.r, p.b.r1, p.b.r2], "run lengths r, s1, s2 must be at least 1")
}

/// `x^a y^r ⧢ x^{b_1} y^{s_1} x^{b_2} y^{s_2}` for `r, s_1, s_2 ≥ 1`.
pub fn expand_res_1_2(a: u32, r: u32, b1: u32, s1: u32, b2: u32, s2: u32) -> Result<LinComb> {
    let p = Res12 { a, r, b: DoubleRun::new(b1, s1, b2, s2) };
    check_res12(&p)?;
    Ok(expand_by_coefficient(p.x_total(), p.depth(), |al| {
        let al = Alphas::new(al);
        let mut c = Count::ZERO;
        for case in Res12Case::ALL {
            c.add_assign(&res12_case(&al, &p, case));
        }
        c
    }))
}

/// The part of `x^a y^r ⧢ x^{b_1} y^{s_1} x^{b_2} y^{s_2}` coming from one
/// order of the `y`s.
pub fn expand_res_1_2_case(p: Res12, case: Res12Case) -> Result<LinComb> {
    check_res12(&p)?;
    Ok(expand_by_coefficient(p.x_total(), p.depth(), |al| {
        res12_case(&Alphas::new(al), &p, case)
    }))
}

// ---------------------------------------------------------------------------
// x^{a_1} y^{r_1} x^{a_2} y^{r_2} ⧢ x^{b_1} y^{s_1} x^{b_2} y^{s_2}

/// The ten orders of `y`s that start with a `y` from the left factor.
/// Markers: `P` = last `y_1` of the first run, `Q` = first `y_1` of the
/// second run, `F` = first `y_2`, `M` = last `y_2` of the first run,
/// `S` = first `y_2` of the second run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Res22Case {
    /// `P < F`, `Q < F`
    I,
    /// `P < F < Q < M`
    II,
    /// `P < F`, `M < Q < S`
    III,
    /// `P < F`, `S < Q`
    IV,
    /// `F < P < M`, `Q < M`
    V,
    /// `F < P < M < Q < S`
    VI,
    /// `F < P < M`, `S < Q`
    VII,
    /// `M < P < S`, `Q < S`
    VIII,
    /// `M < P < S < Q`
    IX,
    /// `S < P`
    X,
}

impl Res22Case {
    pub const ALL: [Res22Case; 10] = [
        Res22Case::I,
        Res22Case::II,
        Res22Case::III,
        Res22Case::IV,
        Res22Case::V,
        Res22Case::VI,
        Res22Case::VII,
        Res22Case::VIII,
        Res22Case::IX,
        Res22Case::X,
    ];
}

fn res22_case(al: &Alphas, u: &DoubleRun, v: &DoubleRun, case: Res22Case) -> Count {
    let (a1, a2, b1, b2) = (u.a1 as i64, u.a2 as i64, v.a1 as i64, v.a2 as i64);
    let (r1, r2, s1, s2) = (u.r1 as usize, u.r2 as usize, v.r1 as usize, v.r2 as usize);
    let n = r1 + r2 + s1 + s2;
    let b_at = |i: usize, k: i64| choose(al.at(i), k);
    let mut total = Count::ZERO;
    let mut add = |c: Count| total.add_assign(&c);
    match case {
        Res22Case::I => {
            for ls in WeakCompositions::new(r2 as u32 - 1, 4) {
                let (l1, l2, l3, l4) = (ls[0] as usize + 1, ls[1] as usize, ls[2] as usize, ls[3] as usize);
                if al.sum_to(r1 + l1 + 1) != a1 + a2 + b1
                    || !al.zeros(r1 + l1 + 2, r1 + l1 + l2 + s1)
                    || !al.zeros(r1 + l1 + l2 + l3 + s1 + 2, n)
                {
                    continue;
                }
                add(product(&[
                    b_at(1, a1),
                    b_at(r1 + 1, a2),
                    runs((l2 + s1) as i64 - 2, l2 as i64),
                    runs((l4 + s2) as i64 - 1, l4 as i64),
                ]));
            }
        }
        Res22Case::II => {
            for ls in WeakCompositions::new(r2 as u32 - 1, 3) {
                let (l1, l2, l3) = (ls[0] as usize + 1, ls[1] as usize, ls[2] as usize);
                for k in 1..s1 {
                    if al.sum_to(r1 + k + 1) != a1 + a2 + b1
                        || !al.zeros(r1 + k + 2, r1 + l1 + s1)
                        || !al.zeros(r1 + l1 + l2 + s1 + 2, n)
                    {
                        continue;
                    }
                    add(product(&[
                        b_at(1, a1),
                        b_at(r1 + 1, a1 + b1 - al.sum_to(r1)),
                        runs((l1 + s1 - k) as i64 - 2, l1 as i64 - 1),
                        runs((l3 + s2) as i64 - 1, l3 as i64),
                    ]));
                }
            }
        }
        Res22Case::III => {
            for l1 in 1..=r2 {
                let l2 = r2 - l1;
                if !al.zeros(r1 + l1 + s1 + 2, n) {
                    continue;
                }
                add(product(&[
                    b_at(1, a1),
                    b_at(r1 + 1, a1 + b1 - al.sum_to(r1)),
                    b_at(r1 + s1 + 1, a1 + a2 + b1 - al.sum_to(r1 + s1)),
                    runs((l2 + s2) as i64 - 1, l2 as i64),
                ]));
            }
        }
        Res22Case::IV => {
            for k in 1..=s2 {
                if !al.zeros(r1 + s1 + k + 2, n) {
                    continue;
                }
                add(product(&[
                    b_at(1, a1),
                    b_at(r1 + 1, a1 + b1 - al.sum_to(r1)),
                    b_at(r1 + s1 + 1, b2),
                    runs((r2 + s2 - k) as i64 - 1, r2 as i64 - 1),
                ]));
            }
        }
        Res22Case::V => {
            if s1 < 2 {
                return Count::ZERO;
            }
            for l in 1..r1 {
                if al.sum_to(l + 1) != a1 + b1 {
                    continue;
                }
                for ks in WeakCompositions::new(s1 as u32 - 2, 3) {
                    let (k1, k2, k3) = (ks[0] as usize + 1, ks[1] as usize, ks[2] as usize + 1);
                    if !al.zeros(l + 2, r1 + k1) {
                        continue;
                    }
                    for ls in WeakCompositions::new(r2 as u32 - 1, 3) {
                        let (l1, l2, l3) = (ls[0] as usize + 1, ls[1] as usize, ls[2] as usize);
                        if !al.zeros(r1 + k1 + k2 + 2, r1 + k1 + k2 + k3 + l1)
                            || !al.zeros(r1 + l1 + l2 + s1 + 2, n)
                        {
                            continue;
                        }
                        // Only x's of the left factor reach the slots between its
                        // two runs, so their sum is forced rather than chosen.
                        if al.sum(r1 + k1 + 1, r1 + k1 + k2 + 1) != a2 {
                            continue;
                        }
                        add(product(&[
                            b_at(1, a1),
                            runs((r1 + k1 - l) as i64 - 2, k1 as i64 - 1),
                            runs((k3 + l1) as i64 - 2, l1 as i64 - 1),
                            runs((l3 + s2) as i64 - 1, l3 as i64),
                        ]));
                    }
                }
            }
        }
        Res22Case::VI => {
            for l1 in 1..r1 {
                if al.sum_to(l1 + 1) != a1 + b1 {
                    continue;
                }
                for l2 in 1..=r2 {
                    if !al.zeros(r1 + l2 + s1 + 2, n) {
                        continue;
                    }
                    for k in 1..s1 {
                        if !al.zeros(l1 + 2, k + r1) {
                            continue;
                        }
                        add(product(&[
                            b_at(1, a1),
                            runs((k + r1 - l1) as i64 - 2, k as i64 - 1),
                            b_at(r1 + s1 + 1, a2 - al.sum(k + r1 + 1, r1 + s1)),
                            runs((r2 + s2 - l2) as i64 - 1, s2 as i64 - 1),
                        ]));
                    }
                }
            }
        }
        Res22Case::VII => {
            for l in 1..r1 {
                if al.sum_to(l + 1) != a1 + b1 {
                    continue;
                }
                for k1 in 1..s1 {
                    if !al.zeros(l + 2, k1 + r1) {
                        continue;
                    }
                    for k2 in 1..=s2 {
                        if !al.zeros(k2 + r1 + s1 + 2, n) {
                            continue;
                        }
                        add(product(&[
                            b_at(1, a1),
                            runs((k1 + r1 - l) as i64 - 2, k1 as i64 - 1),
                            b_at(r1 + s1 + 1, b2),
                            runs((r2 + s2 - k2) as i64 - 1, r2 as i64 - 1),
                        ]));
                    }
                }
            }
        }
        Res22Case::VIII => {
            if r1 < 2 {
                return Count::ZERO;
            }
            for ls in WeakCompositions::new(r1 as u32 - 2, 3) {
                let (l1, l2) = (ls[0] as usize + 1, ls[1] as usize);
                if al.sum_to(l1 + 1) != a1 + b1 || !al.zeros(l1 + 2, l1 + l2 + s1) {
                    continue;
                }
                for l in 1..=r2 {
                    if !al.zeros(r1 + s1 + l + 2, n) {
                        continue;
                    }
                    add(product(&[
                        b_at(1, a1),
                        runs((l2 + s1) as i64 - 2, l2 as i64),
                        b_at(r1 + s1 + 1, a2),
                        runs((r2 + s2 - l) as i64 - 1, s2 as i64 - 1),
                    ]));
                }
            }
        }
        Res22Case::IX => {
            if r1 < 2 {
                return Count::ZERO;
            }
            for ls in WeakCompositions::new(r1 as u32 - 2, 3) {
                let (l1, l2) = (ls[0] as usize + 1, ls[1] as usize);
                if al.sum_to(l1 + 1) != a1 + b1 || !al.zeros(l1 + 2, l1 + l2 + s1) {
                    continue;
                }
                for k in 1..=s2 {
                    if !al.zeros(k + r1 + s1 + 2, n) {
                        continue;
                    }
                    add(product(&[
                        b_at(1, a1),
                        runs((l2 + s1) as i64 - 2, l2 as i64),
                        b_at(r1 + s1 + 1, b2 - al.sum(l1 + l2 + s1 + 1, r1 + s1)),
                        runs((r2 + s2 - k) as i64 - 1, r2 as i64 - 1),
                    ]));
                }
            }
        }
        Res22Case::X => {
            if r1 < 2 {
                return Count::ZERO;
            }
            for ls in WeakCompositions::new(r1 as u32 - 2, 4) {
                let (l1, l2, l3, l4) = (ls[0] as usize + 1, ls[1] as usize, ls[2] as usize, ls[3] as usize + 1);
                if al.sum_to(l1 + 1) != a1 + b1 || !al.zeros(l1 + 2, l1 + l2 + s1) {
                    continue;
                }
                for ks in WeakCompositions::new(s2 as u32 - 1, 3) {
                    let (k1, k2, k3) = (ks[0] as usize + 1, ks[1] as usize, ks[2] as usize);
                    if !al.zeros(l1 + l2 + l3 + s1 + 2, k1 + r1 + s1) || !al.zeros(k1 + k2 + r1 + s1 + 2, n) {
                        continue;
                    }
                    if al.sum(l1 + l2 + s1 + 1, l1 + l2 + l3 + s1 + 1) != b2 {
                        continue;
                    }
                    add(product(&[
                        b_at(1, a1),
                        runs((l2 + s1) as i64 - 2, l2 as i64),
                        runs((k1 + l4) as i64 - 2, l4 as i64 - 1),
                        runs((k3 + r2) as i64 - 1, k3 as i64),
                    ]));
                }
            }
        }
    }
    total
}

fn check_double(u: &DoubleRun, v: &DoubleRun) -> Result<()> {
    require_runs(&[u.r1, u.r2, v.r1, v.r2], "run lengths r1, r2, s1, s2 must be at least 1")
}

fn res22_dims(u: &DoubleRun, v: &DoubleRun) -> (u32, usize) {
    (u.a1 + u.a2 + v.a1 + v.a2, (u.r1 + u.r2 + v.r1 + v.r2) as usize)
}

/// `x^{a_1} y^{r_1} x^{a_2} y^{r_2} ⧢ x^{b_1} y^{s_1} x^{b_2} y^{s_2}` with all
/// runs `≥ 1`.
pub fn expand_res_2_2(u: DoubleRun, v: DoubleRun) -> Result<LinComb> {
    check_double(&u, &v)?;
    let (x_total, depth) = res22_dims(&u, &v);
    Ok(expand_by_coefficient(x_total, depth, |al| {
        let al = Alphas::new(al);
        let mut c = Count::ZERO;
        for case in Res22Case::ALL {
            c.add_assign(&res22_case(&al, &u, &v, case));
            c.add_assign(&res22_case(&al, &v, &u, case));
        }
        c
    }))
}

/// The part of `u ⧢ v` whose `y`-order starts with a `y` of `u` and falls
/// under `case`.
pub fn expand_res_2_2_case(u: DoubleRun, v: DoubleRun, case: Res22Case) -> Result<LinComb> {
    check_double(&u, &v)?;
    let (x_total, depth) = res22_dims(&u, &v);
    Ok(expand_by_coefficient(x_total, depth, |al| {
        res22_case(&Alphas::new(al), &u, &v, case)
    }))
}

// ---------------------------------------------------------------------------
// x^{a_1} y^{r_1} ⧢ ⋯ ⧢ x^{a_n} y^{r_n}

fn nfold_coefficient(al: &[u32], pairs: &[(u32, u32)], perms: &[Vec<usize>]) -> Count {
    let n = pairs.len();
    let total_runs: u32 = pairs.iter().map(|p| p.1).sum();
    let al = Alphas::new(al);
    let mut c = Count::ZERO;
    for l in Compositions::new(total_runs, n) {
        // L_j = l_1 + … + l_j
        let mut big_l = vec![0usize; n + 1];
        for j in 0..n {
            big_l[j + 1] = big_l[j] + l[j] as usize;
        }
        if !al.zeros(big_l[n - 1] + 2, total_runs as usize) {
            continue;
        }
        for sigma in perms {
            let a = |j: usize| pairs[sigma[j - 1]].0 as i64;
            let r = |j: usize| pairs[sigma[j - 1]].1 as i64;
            let mut term = Count::ONE;
            let mut tail_l: i64 = 0;
            let mut tail_r: i64 = 0;
            for j in (2..=n).rev() {
                tail_l += l[j - 1] as i64;
                let f = choose(tail_l - tail_r - 1, r(j) - 1);
                tail_r += r(j);
                if f.is_zero() {
                    term = Count::ZERO;
                    break;
                }
                term = term.mul(&f);
            }
            if term.is_zero() {
                continue;
            }
            let mut placed: i64 = 0;
            for j in 1..n {
                let f = choose(al.sum_to(big_l[j - 1] + 1) - placed, a(j));
                placed += a(j);
                if f.is_zero() {
                    term = Count::ZERO;
                    break;
                }
                term = term.mul(&f);
            }
            c.add_assign(&term);
        }
    }
    c
}

/// `x^{a_1} y^{r_1} ⧢ ⋯ ⧢ x^{a_n} y^{r_n}` for pairs `(a_i, r_i)` with
/// `r_i ≥ 1` and at most [`NFOLD_MAX_FACTORS`] factors.
pub fn expand_nfold(pairs: &[(u32, u32)]) -> Result<LinComb> {
    if pairs.is_empty() {
        return Err(Error::EmptyProduct);
    }
    if pairs.len() > NFOLD_MAX_FACTORS {
        return Err(Error::CapExceeded {
            what: "factors",
            got: pairs.len(),
            cap: NFOLD_MAX_FACTORS,
        });
    }
    if pairs.iter().any(|p| p.1 == 0) {
        return Err(Error::PositivityRequired("every run length must be at least 1"));
    }
    let perms: Vec<Vec<usize>> = permutations(pairs.len()).collect();
    let x_total = pairs.iter().map(|p| p.0).sum();
    let depth = pairs.iter().map(|p| p.1 as usize).sum();
    Ok(expand_by_coefficient(x_total, depth, |al| nfold_coefficient(al, pairs, &perms)))
}

/// `x^{a_1} y ⧢ ⋯ ⧢ x^{a_n} y`.
pub fn expand_nfold_depth1(exps: &[u32]) -> Result<LinComb> {
    if exps.is_empty() {
        return Err(Error::EmptyProduct);
    }
    if exps.len() > NFOLD_MAX_FACTORS {
        return Err(Error::CapExceeded {
            what: "factors",
            got: exps.len(),
            cap: NFOLD_MAX_FACTORS,
        });
    }
    let n = exps.len();
    let perms: Vec<Vec<usize>> = permutations(n).collect();
    let x_total = exps.iter().sum();
    Ok(expand_by_coefficient(x_total, n, |al| {
        let al = Alphas::new(al);
        let mut c = Count::ZERO;
        for sigma in &perms {
            let mut term = Count::ONE;
            let mut placed: i64 = 0;
            for j in 1..n {
                let a = exps[sigma[j - 1]] as i64;
                let f = choose(al.sum_to(j) - placed, a);
                placed += a;
                if f.is_zero() {
                    term = Count::ZERO;
                    break;
                }
                term = term.mul(&f);
            }
            c.add_assign(&term);
        }
        c
    }))
}
