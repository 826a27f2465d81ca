//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use equigon::polygon::angle_cmp;
use equigon::{canonicalize, unit_set, Certificate, LatticeVector, Representation, UnitVector};
use num_integer::{Integer, Roots};

pub fn angle_sorted_units(m: u64, cap: u64) -> Vec<UnitVector> {
    let mut units = unit_set(m, cap).unwrap();
    units.sort_by(|u, v| angle_cmp(&LatticeVector::new(u.a, u.b), &LatticeVector::new(v.a, v.b)));
    units
}

/// Integer images of the units after clearing every denominator at once.
pub fn scaled(units: &[UnitVector]) -> Vec<(i128, i128)> {
    let l = units.iter().fold(1i128, |l, u| l.lcm(&(u.c as i128)));
    units.iter().map(|u| (u.a as i128 * (l / u.c as i128), u.b as i128 * (l / u.c as i128))).collect()
}

/// Lexicographically least `n`-subset with zero sum.
pub fn naive_general(pts: &[(i128, i128)], n: usize) -> Option<Vec<usize>> {
    fn rec(pts: &[(i128, i128)], n: usize, start: usize, sum: (i128, i128), cur: &mut Vec<usize>) -> bool {
        if cur.len() == n {
            return sum == (0, 0);
        }
        for i in start..pts.len() {
            cur.push(i);
            if rec(pts, n, i + 1, (sum.0 + pts[i].0, sum.1 + pts[i].1), cur) {
                return true;
            }
            cur.pop();
        }
        false
    }
    let mut cur = Vec::new();
    rec(pts, n, 0, (0, 0), &mut cur).then_some(cur)
}

/// Whether an axis unit plus `(n − 1)/2` conjugate pairs can sum to zero.
pub fn naive_symmetric(units: &[UnitVector], n: usize) -> bool {
    let pairs: Vec<UnitVector> = units.iter().copied().filter(|u| u.b > 0).collect();
    let xs: Vec<(i128, i128)> = scaled(&pairs).into_iter().map(|(x, _)| (x, 0)).collect();
    let l = pairs.iter().fold(1i128, |l, u| l.lcm(&(u.c as i128)));
    let k = (n - 1) / 2;
    fn rec(xs: &[(i128, i128)], k: usize, start: usize, sum: i128, want: i128, depth: usize) -> bool {
        if depth == k {
            return sum == want;
        }
        (start..xs.len()).any(|i| rec(xs, k, i + 1, sum + xs[i].0, want, depth + 1))
    }
    // 2·Σx = ∓L for the axis vector (±1, 0)
    [-l, l].iter().any(|&s| s % 2 == 0 && rec(&xs, k, 0, 0, s / 2, 0))
}

pub fn certificate_of(m: u64, units: &[UnitVector], idx: &[usize]) -> Certificate {
    let chosen: Vec<UnitVector> = idx.iter().map(|&i| units[i]).collect();
    let l = chosen.iter().fold(1i128, |l, u| l.lcm(&(u.c as i128)));
    let vectors = chosen
        .iter()
        .map(|u| LatticeVector::new(u.a as i128 * (l / u.c as i128), u.b as i128 * (l / u.c as i128)))
        .collect();
    canonicalize(&Certificate::from_vectors(m, vectors)).unwrap()
}

/// Primitive `a² + m·b² = c²` with `c ≤ cap`, `b ≥ 0`, by trying every `(c, b)`.
pub fn naive_reps(m: u64, cap: u64) -> Vec<Representation> {
    let mut out = Vec::new();
    for c in 1..=cap as i64 {
        let mut b = 0i64;
        while (m as i64) * b * b <= c * c {
            let r = c * c - m as i64 * b * b;
            let a = r.sqrt();
            if a * a == r && a.gcd(&b) == 1 {
                out.push(Representation::new(a, b, c));
                if a != 0 {
                    out.push(Representation::new(-a, b, c));
                }
            }
            b += 1;
        }
    }
    out.sort();
    out
}
