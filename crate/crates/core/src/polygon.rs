//! Certificate verification, convex assembly, and the similarity and descent
//! operations on equilateral polygons in `Λ(m)`.
//!
//! All predicates are exact. A vector `(x, y)` stands for `(x, y·√m)`, so the real
//! cross product of two vectors is `√m·(x₁y₂ − x₂y₁)` and has the sign of the integer
//! expression. Angles are never computed.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, is_squarefree, largest_prime_factor};
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::repgen::{reps_of_norm, LatticeVector};
use crate::search::canonicalize;
use crate::wide::Wide;

/// `x₁y₂ − x₂y₁`; its sign is the orientation of the pair.
pub fn cross(u: &LatticeVector, v: &LatticeVector) -> Wide {
    &u.x * &v.y - &v.x * &u.y
}

/// Euclidean inner product in `Λ(m)`.
pub fn dot(u: &LatticeVector, v: &LatticeVector, m: u64) -> Wide {
    &u.x * &v.x + Wide::from(m) * (&u.y * &v.y)
}

/// 0 for directions in `[0, π)`, 1 for `[π, 2π)`.
fn half(v: &LatticeVector) -> u8 {
    if v.y.is_positive() || (v.y.is_zero() && v.x.is_positive()) {
        0
    } else {
        1
    }
}

/// Counter-clockwise order of directions starting at the positive x-axis.
pub fn angle_cmp(u: &LatticeVector, v: &LatticeVector) -> Ordering {
    half(u).cmp(&half(v)).then_with(|| 0.cmp(&cross(u, v).signum()))
}

/// Counter-clockwise order of directions starting at `start` (which sorts first).
pub fn angle_cmp_from(start: &LatticeVector, m: u64, u: &LatticeVector, v: &LatticeVector) -> Ordering {
    let rel_half = |w: &LatticeVector| {
        let c = cross(start, w).signum();
        if c > 0 || (c == 0 && dot(start, w, m).is_positive()) {
            0u8
        } else {
            1
        }
    };
    rel_half(u).cmp(&rel_half(v)).then_with(|| 0.cmp(&cross(u, v).signum()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Failure {
    TooFewVectors(usize),
    CountMismatch { declared: usize, actual: usize },
    MNotSquarefree(u64),
    ZeroVector(usize),
    Duplicate { first: usize, second: usize },
    NormMismatch { index: usize, norm_sq: String },
    NonZeroSum { x: String, y: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Advisory {
    /// Odd polygons need `m ≡ 3 (mod 4)`.
    NotThreeModFour { m_mod_4: u64 },
    /// Odd polygons need every prime factor of `m` to be at most `n`.
    PrimeExceedsN { p: u64, n: usize },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::TooFewVectors(k) => write!(f, "only {k} vectors, need at least 3"),
            Failure::CountMismatch { declared, actual } => {
                write!(f, "declared n = {declared} but {actual} vectors given")
            }
            Failure::MNotSquarefree(m) => write!(f, "m = {m} is not square-free"),
            Failure::ZeroVector(i) => write!(f, "vector {i} is zero"),
            Failure::Duplicate { first, second } => {
                write!(f, "vectors {first} and {second} coincide")
            }
            Failure::NormMismatch { index, norm_sq } => {
                write!(f, "vector {index} has squared norm {norm_sq}, not side_sq")
            }
            Failure::NonZeroSum { x, y } => write!(f, "vectors sum to ({x}, {y}), not zero"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub failures: Vec<Failure>,
    pub advisories: Vec<Advisory>,
}

/// Checks every certificate condition independently and reports all that fail.
pub fn verify_certificate(cert: &Certificate) -> VerificationReport {
    let mut failures = Vec::new();
    let mut advisories = Vec::new();
    let m = cert.m;
    let actual = cert.vectors.len();
    if actual < 3 {
        failures.push(Failure::TooFewVectors(actual));
    }
    if cert.n != actual {
        failures.push(Failure::CountMismatch { declared: cert.n, actual });
    }
    if !is_squarefree(m) {
        failures.push(Failure::MNotSquarefree(m));
    }
    let mut seen = std::collections::HashMap::new();
    for (i, v) in cert.vectors.iter().enumerate() {
        if v.is_zero() {
            failures.push(Failure::ZeroVector(i));
        }
        if let Some(&j) = seen.get(v) {
            failures.push(Failure::Duplicate { first: j, second: i });
        } else {
            seen.insert(v, i);
        }
        let nsq = v.norm_sq(m);
        if nsq != cert.side_sq {
            failures.push(Failure::NormMismatch { index: i, norm_sq: nsq.to_string() });
        }
    }
    let s = cert.sum();
    if !s.is_zero() {
        failures.push(Failure::NonZeroSum { x: s.x.to_string(), y: s.y.to_string() });
    }
    if m >= 1 && actual % 2 == 1 {
        if m % 4 != 3 {
            advisories.push(Advisory::NotThreeModFour { m_mod_4: m % 4 });
        }
        if let Some(p) = largest_prime_factor(m) {
            if p as usize > actual {
                advisories.push(Advisory::PrimeExceedsN { p, n: actual });
            }
        }
    }
    VerificationReport { valid: failures.is_empty(), failures, advisories }
}

pub(crate) fn ensure_valid(cert: &Certificate) -> Result<()> {
    let report = verify_certificate(cert);
    if report.valid {
        Ok(())
    } else {
        let msg = report.failures.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ");
        Err(Error::InvalidCertificate(msg))
    }
}

/// A closed polygon in `Λ(m)`; vertex 0 is the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    pub m: u64,
    pub vertices: Vec<LatticeVector>,
}

impl Polygon {
    pub fn edges(&self) -> Vec<LatticeVector> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let (a, b) = (&self.vertices[i], &self.vertices[(i + 1) % n]);
                LatticeVector { x: &b.x - &a.x, y: &b.y - &a.y }
            })
            .collect()
    }

    pub fn is_equilateral(&self) -> bool {
        let edges = self.edges();
        let first = edges[0].norm_sq(self.m);
        !first.is_zero() && edges.iter().all(|e| e.norm_sq(self.m) == first)
    }

    /// Consecutive edge cross products `x₁y₂ − x₂y₁` (cyclic).
    pub fn turn_crosses(&self) -> Vec<Wide> {
        let edges = self.edges();
        let n = edges.len();
        (0..n).map(|i| cross(&edges[i], &edges[(i + 1) % n])).collect()
    }

    /// Every turn is strictly left and the edge directions wind exactly once.
    pub fn is_strictly_convex(&self) -> bool {
        let edges = self.edges();
        if edges.len() < 3 || !self.turn_crosses().iter().all(Wide::is_positive) {
            return false;
        }
        // a single revolution: directions are strictly increasing after rotating to start
        let start = edges.iter().enumerate().min_by(|a, b| angle_cmp(a.1, b.1)).map(|(i, _)| i).unwrap();
        let n = edges.len();
        (0..n - 1).all(|k| {
            let (u, v) = (&edges[(start + k) % n], &edges[(start + k + 1) % n]);
            angle_cmp(u, v) == Ordering::Less
        })
    }
}

/// Orders the certificate's edge vectors by direction and chains them into a polygon.
pub fn assemble_convex(cert: &Certificate) -> Result<Polygon> {
    ensure_valid(cert)?;
    let mut edges = cert.vectors.clone();
    edges.sort_by(angle_cmp);
    for w in edges.windows(2) {
        if angle_cmp(&w[0], &w[1]) == Ordering::Equal {
            return Err(Error::DuplicateDirection);
        }
    }
    let mut vertices = Vec::with_capacity(edges.len());
    let mut cur = LatticeVector::zero();
    for e in &edges {
        vertices.push(cur.clone());
        cur = cur.add(e);
    }
    debug_assert!(cur.is_zero());
    Ok(Polygon { m: cert.m, vertices })
}

/// The similarity `(x, y) ↦ (s·x + t·m·y, −t·x + s·y)` of `Λ(m)` into itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FMapParams {
    pub s: Wide,
    pub t: Wide,
}

impl FMapParams {
    pub fn new(s: impl Into<Wide>, t: impl Into<Wide>) -> Result<FMapParams> {
        let p = FMapParams { s: s.into(), t: t.into() };
        if p.s.is_zero() && p.t.is_zero() {
            return Err(Error::DegenerateFMap);
        }
        Ok(p)
    }

    /// Factor by which squared lengths grow: `s² + t²·m`.
    pub fn scale_sq(&self, m: u64) -> Wide {
        self.s.square() + Wide::from(m) * self.t.square()
    }

    pub fn apply(&self, v: &LatticeVector, m: u64) -> LatticeVector {
        let mw = Wide::from(m);
        LatticeVector { x: &self.s * &v.x + &self.t * &v.y * &mw, y: -(&self.t * &v.x) + &self.s * &v.y }
    }
}

pub fn apply_fmap(edges: &[LatticeVector], params: &FMapParams, m: u64) -> Vec<LatticeVector> {
    edges.iter().map(|v| params.apply(v, m)).collect()
}

/// Maps the certificate by the f-map read off the edge at `index`, which lands that
/// edge on the positive x-axis. The new side length is the old `side_sq`.
pub fn make_side_integral_with(cert: &Certificate, index: usize) -> Result<Certificate> {
    ensure_valid(cert)?;
    let e = cert.vectors.get(index).ok_or_else(|| Error::InvalidCertificate(format!("no edge at index {index}")))?;
    let params = FMapParams::new(e.x.clone(), e.y.clone())?;
    let vectors = apply_fmap(&cert.vectors, &params, cert.m);
    Ok(Certificate { m: cert.m, n: cert.n, side_sq: &cert.side_sq * &params.scale_sq(cert.m), vectors })
}

/// Certificate with an integer side. Certificates whose side is already an integer come
/// back canonicalized; otherwise the canonical first edge drives the f-map.
pub fn make_side_integral(cert: &Certificate) -> Result<Certificate> {
    let canon = canonicalize(cert)?;
    if canon.integer_side().is_some() {
        return Ok(canon);
    }
    make_side_integral_with(&canon, 0)
}

pub fn scale_certificate(cert: &Certificate, t: u64) -> Certificate {
    cert.scale(&Wide::from(t))
}

/// Divides every coordinate by the prime `q`.
pub fn descend_by_prime(cert: &Certificate, q: u64) -> Result<Certificate> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let qw = Wide::from(q);
    let vectors =
        cert.vectors.iter().map(|v| v.div_exact(&qw)).collect::<Option<Vec<_>>>().ok_or(Error::NotDivisible(q))?;
    let side_sq = cert.side_sq.div_exact(&qw.square()).ok_or(Error::NotDivisible(q))?;
    Ok(Certificate { m: cert.m, n: cert.n, side_sq, vectors })
}

/// Divides out the gcd of all coordinates, keeping the vector order.
pub fn reduce_primitive(cert: &Certificate) -> Result<Certificate> {
    ensure_valid(cert)?;
    let g = cert.coordinate_gcd();
    if g == Wide::ONE {
        return Ok(cert.clone());
    }
    let vectors: Vec<_> = cert.vectors.iter().map(|v| v.div_exact(&g).unwrap()).collect();
    Ok(Certificate::from_vectors(cert.m, vectors))
}

/// Result of [`extend_plus_two`]: the larger certificate and the scale factor that worked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    pub certificate: Certificate,
    pub t: u64,
}

/// Grows an n-vector certificate to n + 2 vectors.
///
/// For `t = 1, 2, …, max_t` the scaled edges `tE` are kept and the lexicographically
/// least `w` of squared norm `t²·side_sq` with `w ∉ tE` and `−w ∉ tE` is added
/// together with `−w`.
pub fn extend_plus_two(cert: &Certificate, max_t: u64) -> Result<Extension> {
    ensure_valid(cert)?;
    for t in 1..=max_t {
        let tw = Wide::from(t);
        let scaled = cert.scale(&tw);
        let norm = scaled
            .side_sq
            .to_i128()
            .and_then(|v| u128::try_from(v).ok())
            .ok_or_else(|| Error::ValueTooLarge(scaled.side_sq.to_string()))?;
        let present: HashSet<&LatticeVector> = scaled.vectors.iter().collect();
        let pick = reps_of_norm(cert.m, norm).into_iter().find(|w| !present.contains(w) && !present.contains(&w.neg()));
        if let Some(w) = pick {
            let mut vectors = scaled.vectors.clone();
            vectors.push(w.neg());
            vectors.push(w);
            let certificate = Certificate::from_vectors(cert.m, vectors);
            debug_assert!(verify_certificate(&certificate).valid);
            return Ok(Extension { certificate, t });
        }
    }
    Err(Error::BudgetExhausted(format!("no extension with t <= {max_t}")))
}

/// An n-gon for even `n ≥ 4` built from `n/2` antipodal pairs of one norm.
///
/// Norms are scanned upward from `1 + m` up to `max_norm`.
pub fn even_gon(m: u64, n: usize, max_norm: u128) -> Result<Certificate> {
    crate::arith::ensure_squarefree(m)?;
    if n < 4 || n % 2 == 1 {
        return Err(Error::BadN(n));
    }
    let pairs = n / 2;
    for q in (1 + m as u128)..=max_norm {
        // one representative per antipodal pair: upper half-plane
        let reps: Vec<LatticeVector> = reps_of_norm(m, q).into_iter().filter(|v| half(v) == 0).take(pairs).collect();
        if reps.len() == pairs {
            let mut vectors = Vec::with_capacity(n);
            for v in reps {
                vectors.push(v.neg());
                vectors.push(v);
            }
            return canonicalize(&Certificate::from_vectors(m, vectors));
        }
    }
    Err(Error::BudgetExhausted(format!("no norm up to {max_norm} has {pairs} antipodal pairs")))
}
