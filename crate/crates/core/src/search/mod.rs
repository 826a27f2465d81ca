//! Zero-sum search over `U(m)_N` and packaging of the result as an integer certificate.

mod general;
mod residue;
mod subset;
mod symmetric;

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::ensure_squarefree;
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::polygon::{angle_cmp_from, ensure_valid};
use crate::repgen::{LatticeVector, UnitVector};
use crate::wide::Wide;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Symmetric,
    General,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "symmetric" => Ok(Mode::Symmetric),
            "general" => Ok(Mode::General),
            _ => Err(Error::Parse { location: "mode".into(), message: format!("unknown mode {s:?}") }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Denominator cap `N`.
    pub cap: u64,
    /// Work limit; counts search nodes (and loop steps in the side scan).
    pub max_nodes: u64,
    pub mode: Mode,
    /// Worker threads.
    pub jobs: usize,
}

impl SearchBudget {
    pub const DEFAULT_MAX_NODES: u64 = 200_000_000;

    pub fn new(cap: u64, mode: Mode) -> SearchBudget {
        SearchBudget { cap, max_nodes: Self::DEFAULT_MAX_NODES, mode, jobs: 1 }
    }

    pub fn with_max_nodes(mut self, max_nodes: u64) -> SearchBudget {
        self.max_nodes = max_nodes;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> SearchBudget {
        self.jobs = jobs.max(1);
        self
    }

    pub(crate) fn pool(&self) -> rayon::ThreadPool {
        rayon::ThreadPoolBuilder::new().num_threads(self.jobs.max(1)).build().expect("thread pool")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Route {
    SymmetricExhaustive,
    SymmetricCommonSide,
    General,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found {
        certificate: Certificate,
        route: Route,
    },
    /// Every candidate set inside `U(m)_N` was ruled out.
    ProvenEmptyWithinN,
    /// The node cap was hit first.
    BudgetExhausted,
}

impl SearchOutcome {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            SearchOutcome::Found { certificate, .. } => Some(certificate),
            _ => None,
        }
    }

    pub fn is_proven_empty(&self) -> bool {
        matches!(self, SearchOutcome::ProvenEmptyWithinN)
    }
}

impl fmt::Display for SearchOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchOutcome::Found { certificate, route } => write!(f, "found ({route:?}): {certificate}"),
            SearchOutcome::ProvenEmptyWithinN => f.write_str("proven empty within N"),
            SearchOutcome::BudgetExhausted => f.write_str("budget exhausted"),
        }
    }
}

/// One axis vector and `(p − 1)/2` conjugate pairs.
pub fn find_zero_sum_symmetric(m: u64, p: usize, budget: &SearchBudget) -> Result<SearchOutcome> {
    ensure_squarefree(m)?;
    if p < 3 || p.is_multiple_of(2) {
        return Err(Error::BadN(p));
    }
    symmetric::search(m, p, budget)
}

/// Any `n` distinct unit vectors.
pub fn find_zero_sum_general(m: u64, n: usize, budget: &SearchBudget) -> Result<SearchOutcome> {
    ensure_squarefree(m)?;
    if n < 3 {
        return Err(Error::BadN(n));
    }
    general::search(m, n, budget)
}

/// Dispatches on `budget.mode`.
pub fn find_zero_sum(m: u64, n: usize, budget: &SearchBudget) -> Result<SearchOutcome> {
    match budget.mode {
        Mode::Symmetric => find_zero_sum_symmetric(m, n, budget),
        Mode::General => find_zero_sum_general(m, n, budget),
    }
}

/// Primitive form of a valid certificate: coordinates divided by their gcd, vectors in
/// counter-clockwise order from the one with the largest `x` (positive `y` on ties).
pub fn canonicalize(cert: &Certificate) -> Result<Certificate> {
    ensure_valid(cert)?;
    let g = cert.coordinate_gcd();
    let vectors = cert.vectors.iter().map(|v| v.div_exact(&g).expect("gcd divides")).collect();
    Ok(sort_canonically(&Certificate::from_vectors(cert.m, vectors)))
}

/// The vector order of [`canonicalize`] without dividing out the gcd.
pub fn sort_canonically(cert: &Certificate) -> Certificate {
    let mut vectors = cert.vectors.clone();
    let Some(start) = vectors.iter().max_by(|u, v| u.x.cmp(&v.x).then_with(|| u.y.cmp(&v.y))).cloned() else {
        return cert.clone();
    };
    vectors.sort_by(|u, v| angle_cmp_from(&start, cert.m, u, v));
    Certificate { vectors, ..cert.clone() }
}

/// Clears the denominators of unit vectors with their lcm and canonicalizes.
pub(crate) fn certificate_from_units(m: u64, units: &[UnitVector]) -> Certificate {
    let l = units.iter().fold(1i128, |l, u| l.lcm(&(u.c as i128)));
    let vectors = units
        .iter()
        .map(|u| {
            let s = Wide::from(l / u.c as i128);
            LatticeVector::new(&s * &Wide::from(u.a), &s * &Wide::from(u.b))
        })
        .collect();
    canonicalize(&Certificate::from_vectors(m, vectors)).expect("zero-sum unit vectors form a certificate")
}
