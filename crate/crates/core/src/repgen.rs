//! Enumeration of primitive solutions of `a² + m·b² = c²`, the unit vectors they
//! define in `Q × √m·Q`, and integer vectors of a fixed norm in `Λ(m)`.

use std::fmt;

use num_integer::{Integer, Roots};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{ensure_squarefree, factorize};
use crate::error::Result;
use crate::rational::Rational;
use crate::wide::Wide;

/// A primitive triple with `a² + m·b² = c²`, `b ≥ 0`, `c ≥ 1` and `gcd(a, b) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Representation {
    pub c: i64,
    pub a: i64,
    pub b: i64,
}

impl Representation {
    pub fn new(a: i64, b: i64, c: i64) -> Representation {
        Representation { a, b, c }
    }

    pub fn satisfies(&self, m: u64) -> bool {
        let (a, b, c) = (self.a as i128, self.b as i128, self.c as i128);
        a * a + m as i128 * b * b == c * c
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// The unit vector `(a/c, b·√m/c)`; `b` carries the sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UnitVector {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl UnitVector {
    pub fn rep(&self) -> Representation {
        Representation::new(self.a, self.b.abs(), self.c)
    }

    pub fn sign_b(&self) -> i8 {
        if self.b < 0 {
            -1
        } else {
            1
        }
    }

    pub fn neg(&self) -> UnitVector {
        UnitVector { a: -self.a, b: -self.b, c: self.c }
    }

    pub fn conj(&self) -> UnitVector {
        UnitVector { a: self.a, b: -self.b, c: self.c }
    }

    pub fn x(&self) -> Rational {
        Rational::new(self.a, self.c).unwrap()
    }

    /// Coefficient of `√m` in the second coordinate.
    pub fn y(&self) -> Rational {
        Rational::new(self.b, self.c).unwrap()
    }
}

/// The point `(x, y·√m)` of `Λ(m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LatticeVector {
    pub x: Wide,
    pub y: Wide,
}

impl LatticeVector {
    pub fn new(x: impl Into<Wide>, y: impl Into<Wide>) -> LatticeVector {
        LatticeVector { x: x.into(), y: y.into() }
    }

    pub fn zero() -> LatticeVector {
        LatticeVector::default()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Squared Euclidean length `x² + m·y²`.
    pub fn norm_sq(&self, m: u64) -> Wide {
        self.x.square() + Wide::from(m) * self.y.square()
    }

    pub fn scale(&self, t: &Wide) -> LatticeVector {
        LatticeVector { x: &self.x * t, y: &self.y * t }
    }

    pub fn div_exact(&self, q: &Wide) -> Option<LatticeVector> {
        Some(LatticeVector { x: self.x.div_exact(q)?, y: self.y.div_exact(q)? })
    }

    pub fn add(&self, o: &LatticeVector) -> LatticeVector {
        LatticeVector { x: &self.x + &o.x, y: &self.y + &o.y }
    }

    pub fn neg(&self) -> LatticeVector {
        LatticeVector { x: -&self.x, y: -&self.y }
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn spf_sieve(limit: usize) -> Vec<u32> {
    let mut spf = vec![0u32; limit + 1];
    for i in 2..=limit {
        if spf[i] == 0 {
            let mut j = i;
            while j <= limit {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

fn merge_factor(factors: &mut Vec<(u64, u32)>, p: u64, e: u32) {
    match factors.iter_mut().find(|(q, _)| *q == p) {
        Some(entry) => entry.1 += e,
        None => factors.push((p, e)),
    }
}

fn divisors(factors: &[(u64, u32)]) -> Vec<u128> {
    let mut divs = vec![1u128];
    for &(p, e) in factors {
        let len = divs.len();
        let mut pk = 1u128;
        for _ in 0..e {
            pk *= p as u128;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs
}

/// Primitive representations with `1 ≤ c ≤ cap`, both signs of `a`, sorted by `(c, a, b)`.
///
/// For each `b ≥ 1` the factorization `(c − a)(c + a) = m·b²` turns every divisor pair
/// `d·e = m·b²` with `d ≤ e` and `d ≡ e (mod 2)` into `c = (d + e)/2`, `a = (e − d)/2`.
pub fn enumerate_reps(m: u64, cap: u64) -> Result<Vec<Representation>> {
    ensure_squarefree(m)?;
    let mut out = Vec::new();
    if cap == 0 {
        return Ok(out);
    }
    out.push(Representation::new(1, 0, 1));
    out.push(Representation::new(-1, 0, 1));

    let cap2 = cap as u128 * cap as u128;
    let b_max = (cap2 / m as u128).sqrt() as usize;
    let spf = spf_sieve(b_max.max(1));
    let mut m_factors: Vec<(u64, u32)> = Vec::new();
    for p in factorize(m) {
        merge_factor(&mut m_factors, p, 1);
    }

    let rest: Vec<Representation> = (1..=b_max)
        .into_par_iter()
        .flat_map_iter(|b| {
            let mut factors = m_factors.clone();
            let mut r = b;
            while r > 1 {
                let p = spf[r] as usize;
                let mut e = 0;
                while r % p == 0 {
                    r /= p;
                    e += 2;
                }
                merge_factor(&mut factors, p as u64, e);
            }
            let big = m as u128 * (b as u128) * (b as u128);
            let mut found = Vec::new();
            for d in divisors(&factors) {
                if d * d > big {
                    continue;
                }
                let e = big / d;
                if !(d + e).is_multiple_of(2) || (d + e) / 2 > cap as u128 {
                    continue;
                }
                let c = ((d + e) / 2) as i64;
                let a = ((e - d) / 2) as i64;
                if a.gcd(&(b as i64)) != 1 {
                    continue;
                }
                found.push(Representation::new(a, b as i64, c));
                if a != 0 {
                    found.push(Representation::new(-a, b as i64, c));
                }
            }
            found
        })
        .collect();
    out.extend(rest);
    out.sort();
    Ok(out)
}

/// `U(m)_N`: every unit vector `(a/c, ±b√m/c)` coming from a primitive representation
/// with `c ≤ cap`. Sorted by `(a, b, c)` field order of [`UnitVector`].
pub fn unit_set(m: u64, cap: u64) -> Result<Vec<UnitVector>> {
    let reps = enumerate_reps(m, cap)?;
    let mut out = Vec::with_capacity(2 * reps.len());
    for r in reps {
        out.push(UnitVector { a: r.a, b: r.b, c: r.c });
        if r.b != 0 {
            out.push(UnitVector { a: r.a, b: -r.b, c: r.c });
        }
    }
    out.sort();
    Ok(out)
}

/// All `(x, y)` with `x² + m·y² = q`, every sign combination, lexicographically sorted.
pub fn reps_of_norm(m: u64, q: u128) -> Vec<LatticeVector> {
    let mut out = Vec::new();
    let m = m as u128;
    let mut y = 0u128;
    while m * y * y <= q {
        let r = q - m * y * y;
        let x = r.sqrt();
        if x * x == r {
            let (x, y) = (x as i128, y as i128);
            for sx in [1, -1] {
                for sy in [1, -1] {
                    if (sx < 0 && x == 0) || (sy < 0 && y == 0) {
                        continue;
                    }
                    out.push(LatticeVector::new(sx * x, sy * y));
                }
            }
        }
        y += 1;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Double loop over `c ≤ cap`, `b ≥ 0`: the independent oracle.
    pub(crate) fn naive_reps(m: u64, cap: u64) -> Vec<Representation> {
        let mut out = Vec::new();
        for c in 1..=cap as i64 {
            let mut b = 0i64;
            while (m as i64) * b * b <= c * c {
                let r = c * c - m as i64 * b * b;
                let a = (r as u64).sqrt() as i64;
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

    fn triples(v: &[Representation]) -> Vec<(i64, i64, i64)> {
        v.iter().map(|r| (r.a, r.b, r.c)).collect()
    }

    #[test]
    fn reps_m3_n10() {
        let got = triples(&enumerate_reps(3, 10).unwrap());
        assert_eq!(got, vec![(-1, 0, 1), (1, 0, 1), (-1, 1, 2), (1, 1, 2), (-1, 4, 7), (1, 4, 7)]);
        assert_eq!(triples(&naive_reps(3, 10)), got);
    }

    #[test]
    fn reps_contain_known_triples() {
        assert!(enumerate_reps(7, 90).unwrap().contains(&Representation::new(81, 13, 88)));
        let r1 = enumerate_reps(1, 5).unwrap();
        assert!(r1.contains(&Representation::new(3, 4, 5)));
        assert!(r1.contains(&Representation::new(4, 3, 5)));
        assert!(r1.contains(&Representation::new(0, 1, 1)));
    }

    #[test]
    fn rejects_non_squarefree() {
        assert!(enumerate_reps(12, 10).is_err());
        assert!(unit_set(0, 10).is_err());
    }

    #[test]
    fn unit_set_small() {
        let u = unit_set(3, 2).unwrap();
        assert_eq!(u.len(), 6);
        let u1 = unit_set(3, 1).unwrap();
        assert_eq!(u1, vec![UnitVector { a: -1, b: 0, c: 1 }, UnitVector { a: 1, b: 0, c: 1 }]);
        let u7 = unit_set(7, 88).unwrap();
        assert!(u7.contains(&UnitVector { a: 81, b: 13, c: 88 }));
        assert!(u7.contains(&UnitVector { a: 81, b: -13, c: 88 }));
    }

    #[test]
    fn unit_set_closed_and_counted() {
        for m in [1u64, 2, 3, 7, 11, 15] {
            let reps = enumerate_reps(m, 120).unwrap();
            let u = unit_set(m, 120).unwrap();
            let axis = reps.iter().filter(|r| r.b == 0).count();
            assert_eq!(u.len(), axis + 2 * (reps.len() - axis));
            let set: std::collections::HashSet<_> = u.iter().copied().collect();
            assert_eq!(set.len(), u.len());
            for v in &u {
                assert!(set.contains(&v.neg()) && set.contains(&v.conj()));
            }
        }
    }

    #[test]
    fn norm_reps_examples() {
        let v = |x: i64, y: i64| LatticeVector::new(x, y);
        let mut want = vec![v(2, 0), v(-2, 0), v(1, 1), v(1, -1), v(-1, 1), v(-1, -1)];
        want.sort();
        assert_eq!(reps_of_norm(3, 4), want);

        // brute force over x in [-14, 14]
        let mut brute = Vec::new();
        for x in -14i64..=14 {
            for y in -14i64..=14 {
                if x * x + 3 * y * y == 196 {
                    brute.push(v(x, y));
                }
            }
        }
        brute.sort();
        assert_eq!(brute.len(), 18);
        assert_eq!(reps_of_norm(3, 196), brute);

        let mut want7 = vec![v(4, 0), v(-4, 0), v(3, 1), v(3, -1), v(-3, 1), v(-3, -1)];
        want7.sort();
        assert_eq!(reps_of_norm(7, 16), want7);
        assert!(reps_of_norm(3, 5).is_empty());
    }

    #[test]
    fn norm_reps_scaling_closure() {
        for m in [1u64, 3, 7, 11] {
            for q in 1u128..60 {
                let base = reps_of_norm(m, q);
                for t in 2i64..5 {
                    let scaled = reps_of_norm(m, q * (t * t) as u128);
                    for v in &base {
                        assert!(scaled.contains(&v.scale(&Wide::from(t))));
                    }
                }
            }
        }
    }

    #[test]
    fn unit_sets_are_nested() {
        for m in [3u64, 7, 23] {
            let small = unit_set(m, 60).unwrap();
            let large: std::collections::HashSet<_> = unit_set(m, 150).unwrap().into_iter().collect();
            assert!(small.iter().all(|u| large.contains(u)));
        }
    }

    #[test]
    fn every_rep_satisfies_norm_equation() {
        for m in [3u64, 5, 35, 231] {
            for r in enumerate_reps(m, 2000).unwrap() {
                assert!(r.satisfies(m), "{r} for m={m}");
                assert_eq!(r.a.gcd(&r.b), 1);
            }
        }
    }
}
