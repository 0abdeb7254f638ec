//! Enumeration of compositions and weak compositions in lexicographic order.

/// Advances `parts` to the next weak composition of the same total in
/// lexicographic order. Returns `false` when `parts` was the last one.
pub fn next_weak_composition(parts: &mut [u32]) -> bool {
    let k = parts.len();
    if k < 2 {
        return false;
    }
    // The last composition has everything in parts[0].
    // Find the rightmost i < k-1 with a nonzero suffix to its right.
    let mut tail: u32 = parts[k - 1];
    let mut i = k - 1;
    while i > 0 {
        i -= 1;
        if tail > 0 {
            parts[i] += 1;
            for p in parts.iter_mut().skip(i + 1) {
                *p = 0;
            }
            parts[k - 1] = tail - 1;
            return true;
        }
        tail += parts[i];
    }
    false
}

/// The lexicographically first weak composition of `total` into `k` parts.
fn first_weak(total: u32, k: usize) -> Vec<u32> {
    let mut v = vec![0; k];
    if let Some(last) = v.last_mut() {
        *last = total;
    }
    v
}

/// Iterator over the weak compositions of `total` into `k` nonnegative parts.
///
/// `k = 0` yields the empty tuple iff `total = 0`.
#[derive(Clone, Debug)]
pub struct WeakCompositions {
    current: Option<Vec<u32>>,
}

impl WeakCompositions {
    pub fn new(total: u32, k: usize) -> Self {
        let current = if k == 0 && total != 0 {
            None
        } else {
            Some(first_weak(total, k))
        };
        WeakCompositions { current }
    }
}

impl Iterator for WeakCompositions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let cur = self.current.take()?;
        let mut nxt = cur.clone();
        if next_weak_composition(&mut nxt) {
            self.current = Some(nxt);
        }
        Some(cur)
    }
}

/// Iterator over the compositions of `total` into `k` positive parts.
#[derive(Clone, Debug)]
pub struct Compositions {
    inner: Option<WeakCompositions>,
}

impl Compositions {
    pub fn new(total: u32, k: usize) -> Self {
        let inner = if (k as u64) > total as u64 || (k == 0 && total > 0) {
            None
        } else {
            Some(WeakCompositions::new(total - k as u32, k))
        };
        Compositions { inner }
    }
}

impl Iterator for Compositions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let mut v = self.inner.as_mut()?.next()?;
        v.iter_mut().for_each(|p| *p += 1);
        Some(v)
    }
}

/// Calls `f` on every weak composition of `total` into `k` parts, reusing one
/// buffer.
pub fn for_each_weak_composition(total: u32, k: usize, mut f: impl FnMut(&[u32])) {
    if k == 0 {
        if total == 0 {
            f(&[]);
        }
        return;
    }
    let mut buf = first_weak(total, k);
    loop {
        f(&buf);
        if !next_weak_composition(&mut buf) {
            break;
        }
    }
}

/// Iterator over all permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current = Some((0..n).collect::<Vec<_>>());
    std::iter::from_fn(move || {
        let cur = current.take()?;
        let mut nxt = cur.clone();
        if next_permutation(&mut nxt) {
            current = Some(nxt);
        }
        Some(cur)
    })
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn weak_counts_match_stars_and_bars() {
        for total in 0..7u32 {
            for k in 1..6usize {
                let all: Vec<_> = WeakCompositions::new(total, k).collect();
                assert_eq!(all.len() as u64, binom(total as u64 + k as u64 - 1, k as u64 - 1));
                assert!(all.iter().all(|c| c.iter().sum::<u32>() == total));
                assert!(all.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn degenerate_weak() {
        assert_eq!(WeakCompositions::new(0, 0).collect::<Vec<_>>(), vec![Vec::<u32>::new()]);
        assert_eq!(WeakCompositions::new(3, 0).count(), 0);
        assert_eq!(WeakCompositions::new(4, 1).collect::<Vec<_>>(), vec![vec![4]]);
    }

    #[test]
    fn compositions_of_four() {
        let all: Vec<_> = Compositions::new(4, 2).collect();
        assert_eq!(all, vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(Compositions::new(2, 3).count(), 0);
        assert_eq!(Compositions::new(0, 0).count(), 1);
        for total in 1..9u32 {
            for k in 1..=total as usize {
                assert_eq!(
                    Compositions::new(total, k).count() as u64,
                    binom(total as u64 - 1, k as u64 - 1)
                );
            }
        }
    }

    #[test]
    fn callback_agrees_with_iterator() {
        let mut seen = Vec::new();
        for_each_weak_composition(5, 3, |c| seen.push(c.to_vec()));
        assert_eq!(seen, WeakCompositions::new(5, 3).collect::<Vec<_>>());
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).count(), 24);
        assert_eq!(permutations(0).count(), 1);
        assert_eq!(permutations(3).nth(1), Some(vec![0, 2, 1]));
    }
}
