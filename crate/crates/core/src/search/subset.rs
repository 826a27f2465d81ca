//! Fixed-cardinality subset sum: choose exactly `k` distinct items whose values add
//! up to a target. Both solvers return the lexicographically least index set.

use std::collections::HashMap;
use std::hash::Hash;
use std::ops::{Add, Sub};

/// `Σ_{j ≤ k} C(n, j)`, saturating.
pub(crate) fn subsets_up_to(n: usize, k: usize) -> u64 {
    let mut total = 0u64;
    let mut c = 1u64;
    for j in 0..=k.min(n) {
        total = total.saturating_add(c);
        c = c.saturating_mul((n - j) as u64) / (j as u64 + 1);
    }
    total
}

/// Entries a meet-in-the-middle pass over `n` items would materialize.
pub(crate) fn mitm_cost(n: usize, k: usize) -> u64 {
    let h = n / 2;
    subsets_up_to(h, k).saturating_add(subsets_up_to(n - h, k))
}

fn for_each_subset<T, F>(values: &[T], offset: usize, k: usize, zero: &T, f: &mut F)
where
    T: Clone + for<'a> Add<&'a T, Output = T>,
    F: FnMut(&[usize], &T),
{
    fn rec<T, F>(values: &[T], offset: usize, start: usize, k: usize, idx: &mut Vec<usize>, sum: &T, f: &mut F)
    where
        T: Clone + for<'a> Add<&'a T, Output = T>,
        F: FnMut(&[usize], &T),
    {
        f(idx, sum);
        if idx.len() == k {
            return;
        }
        for i in start..values.len() {
            idx.push(offset + i);
            let s = sum.clone() + &values[i];
            rec(values, offset, i + 1, k, idx, &s, f);
            idx.pop();
        }
    }
    let mut idx = Vec::with_capacity(k);
    rec(values, offset, 0, k, &mut idx, zero, f);
}

/// Meet in the middle: subsets of the first half are hashed by `(size, sum)` and joined
/// against subsets of the second half.
pub(crate) fn mitm<T>(values: &[T], k: usize, target: &T, zero: &T) -> Option<Vec<usize>>
where
    T: Clone + Eq + Hash + for<'a> Add<&'a T, Output = T> + for<'a> Sub<&'a T, Output = T>,
{
    if k > values.len() {
        return None;
    }
    let h = values.len() / 2;
    let (left, right) = values.split_at(h);
    let mut table: HashMap<(usize, T), Vec<Vec<usize>>> = HashMap::new();
    for_each_subset(left, 0, k, zero, &mut |idx, sum| {
        table.entry((idx.len(), sum.clone())).or_default().push(idx.to_vec());
    });
    let mut best: Option<Vec<usize>> = None;
    for_each_subset(right, h, k, zero, &mut |idx, sum| {
        let need = (k - idx.len(), target.clone() - sum);
        if let Some(lefts) = table.get(&need) {
            // lefts are generated in lexicographic order
            let mut cand = lefts[0].clone();
            cand.extend_from_slice(idx);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    });
    best
}

struct Bits {
    words: Vec<u64>,
}

impl Bits {
    fn new(len: usize) -> Bits {
        Bits { words: vec![0; len.div_ceil(64)] }
    }

    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    /// `self |= other << shift` (a negative shift moves bits down).
    fn or_shifted(&mut self, other: &Bits, shift: i64, len: usize) {
        let n = self.words.len();
        let (ws, bs) = ((shift.unsigned_abs() / 64) as usize, (shift.unsigned_abs() % 64) as u32);
        if shift >= 0 {
            for i in (ws..n).rev() {
                let src = i - ws;
                let mut w = other.words[src] << bs;
                if bs > 0 && src > 0 {
                    w |= other.words[src - 1] >> (64 - bs);
                }
                self.words[i] |= w;
            }
        } else {
            for i in 0..n.saturating_sub(ws) {
                let src = i + ws;
                let mut w = other.words[src] >> bs;
                if bs > 0 && src + 1 < n {
                    w |= other.words[src + 1] << (64 - bs);
                }
                self.words[i] |= w;
            }
        }
        let extra = n * 64 - len;
        if extra > 0 {
            self.words[n - 1] &= u64::MAX >> extra;
        }
    }
}

/// Bit cells the dynamic-programming solver needs for these inputs.
pub(crate) fn dp_cells(values: &[i128], k: usize) -> u128 {
    let span: u128 = values.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0) * k as u128;
    (values.len() as u128 + 1) * (k as u128 + 1) * (2 * span + 1)
}

/// Reachability over suffixes: `reach[i][j]` holds every sum of `j` items from `values[i..]`.
pub(crate) fn dp(values: &[i128], k: usize, target: i128) -> Option<Vec<usize>> {
    let n = values.len();
    if k > n {
        return None;
    }
    let bound: i128 = values.iter().map(|v| v.abs()).max().unwrap_or(0) * k as i128;
    if target.abs() > bound {
        return None;
    }
    let len = (2 * bound + 1) as usize;
    let at = |s: i128| (s + bound) as usize;
    let mut reach: Vec<Vec<Bits>> = Vec::with_capacity(n + 1);
    let mut base: Vec<Bits> = (0..=k).map(|_| Bits::new(len)).collect();
    base[0].set(at(0));
    reach.push(base);
    for i in (0..n).rev() {
        let next = reach.last().unwrap();
        let mut row: Vec<Bits> = (0..=k).map(|_| Bits { words: next[0].words.clone() }).collect();
        for j in 1..=k {
            row[j].words.clone_from(&next[j].words);
            let (prev, cur) = (&next[j - 1], &mut row[j]);
            cur.or_shifted(prev, values[i] as i64, len);
        }
        reach.push(row);
    }
    reach.reverse();
    if !reach[0][k].get(at(target)) {
        return None;
    }
    let (mut j, mut t) = (k, target);
    let mut picked = Vec::with_capacity(k);
    for (i, &v) in values.iter().enumerate() {
        if j == 0 {
            break;
        }
        let rest = t - v;
        if rest.abs() <= bound && reach[i + 1][j - 1].get(at(rest)) {
            picked.push(i);
            t = rest;
            j -= 1;
        }
    }
    debug_assert!(j == 0 && t == 0);
    Some(picked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute(values: &[i128], k: usize, target: i128) -> Option<Vec<usize>> {
        fn rec(v: &[i128], k: usize, t: i128, start: usize, cur: &mut Vec<usize>) -> bool {
            if cur.len() == k {
                return cur.iter().map(|&i| v[i]).sum::<i128>() == t;
            }
            for i in start..v.len() {
                cur.push(i);
                if rec(v, k, t, i + 1, cur) {
                    return true;
                }
                cur.pop();
            }
            false
        }
        let mut cur = Vec::new();
        rec(values, k, target, 0, &mut cur).then_some(cur)
    }

    #[test]
    fn counts() {
        assert_eq!(subsets_up_to(5, 2), 1 + 5 + 10);
        assert_eq!(subsets_up_to(3, 10), 8);
        assert_eq!(mitm_cost(4, 1), 3 + 3);
    }

    #[test]
    fn known_instance() {
        let xs = [-87i128, -38, 81, -81, 38, 87, 5];
        assert_eq!(dp(&xs, 3, -44), Some(vec![0, 1, 2]));
        assert_eq!(mitm(&xs, 3, &-44, &0), Some(vec![0, 1, 2]));
        assert_eq!(dp(&xs, 3, 1000), None);
        assert_eq!(dp(&xs, 8, 0), None);
    }

    proptest! {
        #[test]
        fn solvers_agree_with_brute_force(
            values in proptest::collection::vec(-60i128..60, 1..12),
            k in 1usize..5,
            target in -120i128..120,
        ) {
            let want = brute(&values, k, target);
            prop_assert_eq!(dp(&values, k, target), want.clone());
            prop_assert_eq!(mitm(&values, k, &target, &0), want);
        }
    }
}
