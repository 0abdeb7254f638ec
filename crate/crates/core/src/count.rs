//! Nonnegative integer counts with a `u128` fast path.
//!
//! Every coefficient produced by the shuffle formulas is a sum of products of
//! binomials, hence a natural number. Counting stays in `u128` until a
//! multiplication or addition overflows, then promotes to `BigUint`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use std::sync::OnceLock;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Count {
    Small(u128),
    Big(BigUint),
}

impl Count {
    pub(crate) const ZERO: Count = Count::Small(0);
    pub(crate) const ONE: Count = Count::Small(1);

    pub(crate) fn is_zero(&self) -> bool {
        match self {
            Count::Small(v) => *v == 0,
            Count::Big(v) => v.is_zero(),
        }
    }

    fn to_big(&self) -> BigUint {
        match self {
            Count::Small(v) => BigUint::from(*v),
            Count::Big(v) => v.clone(),
        }
    }

    pub(crate) fn mul(&self, other: &Count) -> Count {
        match (self, other) {
            (Count::Small(a), Count::Small(b)) => match a.checked_mul(*b) {
                Some(v) => Count::Small(v),
                None => Count::Big(BigUint::from(*a) * BigUint::from(*b)),
            },
            _ => Count::Big(self.to_big() * other.to_big()),
        }
    }

    pub(crate) fn add_assign(&mut self, other: &Count) {
        if let (Count::Small(a), Count::Small(b)) = (&*self, other) {
            if let Some(v) = a.checked_add(*b) {
                *self = Count::Small(v);
                return;
            }
        }
        *self = Count::Big(self.to_big() + other.to_big());
    }

    pub(crate) fn to_bigint(&self) -> BigInt {
        BigInt::from(self.to_big())
    }

    #[cfg(test)]
    pub(crate) fn to_u128(&self) -> Option<u128> {
        match self {
            Count::Small(v) => Some(*v),
            Count::Big(v) => v.to_u128(),
        }
    }
}

impl From<u128> for Count {
    fn from(v: u128) -> Self {
        Count::Small(v)
    }
}

const TABLE_ROWS: usize = 131;

fn pascal() -> &'static Vec<Vec<u128>> {
    static TABLE: OnceLock<Vec<Vec<u128>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut rows: Vec<Vec<u128>> = Vec::with_capacity(TABLE_ROWS);
        for n in 0..TABLE_ROWS {
            let mut row = vec![1u128; n + 1];
            for k in 1..n {
                row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
            }
            rows.push(row);
        }
        rows
    })
}

/// Binomial coefficient under the vanishing convention: zero when `k < 0`
/// or `n < k` (this includes every negative `n` with `k >= 0`).
pub(crate) fn choose(n: i64, k: i64) -> Count {
    if k < 0 || n < k {
        return Count::ZERO;
    }
    let (n, k) = (n as u64, k as u64);
    if (n as usize) < TABLE_ROWS {
        return Count::Small(pascal()[n as usize][k as usize]);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc = acc * BigUint::from(n - k + i) / BigUint::from(i);
    }
    match acc.to_u128() {
        Some(v) => Count::Small(v),
        None => Count::Big(acc),
    }
}

/// Multiplies `acc` by `choose(n, k)`, returning `false` (and leaving `acc`
/// unspecified) once the product is known to vanish.
#[inline]
pub(crate) fn mul_choose(acc: &mut Count, n: i64, k: i64) -> bool {
    if k < 0 || n < k {
        return false;
    }
    *acc = acc.mul(&choose(n, k));
    true
}
