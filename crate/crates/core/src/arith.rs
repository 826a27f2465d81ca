//! Integer factorization, the square-free lattice invariant, and the existence
//! decision for equilateral polygons.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::wide::Wide;

/// Prime factors of `n` with multiplicity, ascending. Empty for `n <= 1`.
pub fn factorize(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    while n.is_multiple_of(2) {
        out.push(2);
        n /= 2;
    }
    let mut d = 3u64;
    while d <= n / d {
        while n.is_multiple_of(d) {
            out.push(d);
            n /= d;
        }
        d += 2;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    let mut f = factorize(n);
    f.dedup();
    f
}

pub fn largest_prime_factor(n: u64) -> Option<u64> {
    factorize(n).last().copied()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).len() == 1
}

pub fn is_squarefree(n: u64) -> bool {
    n >= 1 && factorize(n).windows(2).all(|w| w[0] != w[1])
}

/// Writes `n = k² · ν` with `ν` square-free. Returns `(ν, k)`; `(1, 1)` for `n = 1`.
///
/// # Panics
/// If `n == 0`.
pub fn squarefree_part(n: u64) -> (u64, u64) {
    assert!(n >= 1, "squarefree_part requires n >= 1");
    let f = factorize(n);
    let (mut nu, mut k) = (1u64, 1u64);
    let mut i = 0;
    while i < f.len() {
        let p = f[i];
        let mut e = 0;
        while i < f.len() && f[i] == p {
            e += 1;
            i += 1;
        }
        k *= p.pow(e / 2);
        if e % 2 == 1 {
            nu *= p;
        }
    }
    (nu, k)
}

pub(crate) fn ensure_squarefree(m: u64) -> Result<()> {
    if is_squarefree(m) {
        Ok(())
    } else {
        Err(Error::MNotSquarefree(m))
    }
}

/// Gram matrix `[[g11, g12], [g12, g22]]` of a planar lattice basis, with rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    pub g11: Rational,
    pub g12: Rational,
    pub g22: Rational,
}

impl GramMatrix {
    pub fn new(g11: Rational, g12: Rational, g22: Rational) -> Result<GramMatrix> {
        let g = GramMatrix { g11, g12, g22 };
        if g.g11.signum() <= 0 || g.determinant().signum() <= 0 {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(g)
    }

    pub fn from_ints(g11: i64, g12: i64, g22: i64) -> Result<GramMatrix> {
        GramMatrix::new(g11.into(), g12.into(), g22.into())
    }

    /// Gram matrix of the rectangular lattice generated by `(1, 0)` and `(0, √m)`.
    pub fn rectangular(m: u64) -> GramMatrix {
        GramMatrix::from_ints(1, 0, m as i64).expect("rectangular Gram is positive definite")
    }

    /// Squared area of a fundamental parallelogram.
    pub fn determinant(&self) -> Rational {
        &self.g11 * &self.g22 - self.g12.square()
    }

    /// Integer entries with gcd 1 obtained by scaling with the least positive rational.
    pub fn primitive_entries(&self) -> [Wide; 3] {
        let entries = [&self.g11, &self.g12, &self.g22];
        let lcm = entries.iter().fold(Wide::ONE, |acc, e| {
            let d = e.denom();
            let g = acc.gcd(d);
            (&acc * d).checked_div(&g).unwrap()
        });
        let ints: Vec<Wide> = entries.iter().map(|e| (e.numer() * &lcm).checked_div(e.denom()).unwrap()).collect();
        let g = ints.iter().fold(Wide::ZERO, |acc, v| acc.gcd(v));
        [ints[0].checked_div(&g).unwrap(), ints[1].checked_div(&g).unwrap(), ints[2].checked_div(&g).unwrap()]
    }

    /// Applies the basis change `Uᵀ G U` for an integer matrix `U = [[a, b], [c, d]]`.
    pub fn transform(&self, u: [[i64; 2]; 2]) -> Result<GramMatrix> {
        let [[a, b], [c, d]] = u.map(|row| row.map(Rational::from));
        let (p, q, r) = (&self.g11, &self.g12, &self.g22);
        // columns of U are the new basis vectors in terms of the old ones
        let quad =
            |x: &Rational, y: &Rational, z: &Rational, w: &Rational| p * &(x * z) + q * &(x * w + y * z) + r * &(y * w);
        GramMatrix::new(quad(&a, &c, &a, &c), quad(&a, &c, &b, &d), quad(&b, &d, &b, &d))
    }

    pub fn scale(&self, q: &Rational) -> Result<GramMatrix> {
        GramMatrix::new(&self.g11 * q, &self.g12 * q, &self.g22 * q)
    }
}

impl std::str::FromStr for GramMatrix {
    type Err = Error;

    /// Parses `g11,g12,g22`, each entry an integer or `p/q` fraction.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Parse {
                location: "gram".into(),
                message: format!("expected three comma-separated entries, got `{s}`"),
            });
        }
        let mut vals = Vec::with_capacity(3);
        for (i, p) in parts.iter().enumerate() {
            vals.push(
                p.parse::<Rational>()
                    .map_err(|e| Error::Parse { location: format!("gram entry {}", i + 1), message: e.to_string() })?,
            );
        }
        let g22 = vals.pop().unwrap();
        let g12 = vals.pop().unwrap();
        let g11 = vals.pop().unwrap();
        GramMatrix::new(g11, g12, g22)
    }
}

/// `ν` together with the cofactor `k` such that `k² · ν` is the determinant of the
/// primitive Gram matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NuInvariant {
    pub nu: u64,
    pub cofactor: u64,
}

pub fn nu_of_gram(g: &GramMatrix) -> Result<NuInvariant> {
    if g.g11.signum() <= 0 || g.determinant().signum() <= 0 {
        return Err(Error::NotPositiveDefinite);
    }
    let [a, b, c] = g.primitive_entries();
    let det = &a * &c - b.square();
    let det = det.to_u64().ok_or_else(|| Error::ValueTooLarge(det.to_string()))?;
    let (nu, cofactor) = squarefree_part(det);
    Ok(NuInvariant { nu, cofactor })
}

/// Odd polygons are settled for lattices whose largest prime factor of `ν` is below this.
pub const SETTLED_PRIME_BOUND: u64 = 29;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Contains,
    NotContains,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reason {
    /// Every integral lattice contains a convex equilateral n-gon for even n ≥ 4.
    EvenAlways,
    /// Odd n needs ν ≡ 3 (mod 4).
    ParityFail,
    /// Some prime factor of ν exceeds n.
    PrimeBoundFail,
    /// ν ≡ 3 (mod 4) and its largest prime factor p satisfies p ≤ n and p < 29.
    PrimeBoundOk,
    /// Necessary conditions hold but sufficiency is unsettled.
    OpenCase,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub verdict: Verdict,
    pub reason: Reason,
    pub nu: u64,
    pub largest_prime: Option<u64>,
    pub n: usize,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for ClassificationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}: nu={}", self.verdict, self.reason, self.nu)?;
        if let Some(p) = self.largest_prime {
            write!(f, ", p={p}")?;
        }
        write!(f, ", n={})", self.n)
    }
}

/// Decides from `ν` alone whether a lattice with that invariant contains an equilateral n-gon.
pub fn classify_nu(nu: u64, n: usize) -> Result<ClassificationResult> {
    if n < 3 {
        return Err(Error::BadN(n));
    }
    let largest_prime = largest_prime_factor(nu);
    let (verdict, reason) = if n.is_multiple_of(2) {
        (Verdict::Contains, Reason::EvenAlways)
    } else if nu % 4 != 3 {
        (Verdict::NotContains, Reason::ParityFail)
    } else {
        // nu ≡ 3 (mod 4) forces nu ≥ 3, so a prime factor exists
        let p = largest_prime.expect("nu >= 3");
        if p > n as u64 {
            (Verdict::NotContains, Reason::PrimeBoundFail)
        } else if p < SETTLED_PRIME_BOUND {
            (Verdict::Contains, Reason::PrimeBoundOk)
        } else {
            (Verdict::Unknown, Reason::OpenCase)
        }
    };
    Ok(ClassificationResult { verdict, reason, nu, largest_prime, n })
}

pub fn classify_lattice(g: &GramMatrix, n: usize) -> Result<ClassificationResult> {
    let inv = nu_of_gram(g)?;
    classify_nu(inv.nu, n)
}
