//! Searches shaped as one axis vector plus conjugate pairs `(x, ±y)`.
//!
//! The y-sum of such a set vanishes by construction, so only the x-coordinates
//! matter: with axis vector `(s₀, 0)` and pair abscissae `a_i / c_i`, the condition is
//! `s₀ + 2·Σ a_i/c_i = 0`. Candidate sets are closed under `a ↦ −a`, so a solution
//! with `s₀ = −1` exists exactly when one with `s₀ = +1` does; only `s₀ = +1` is searched.
//!
//! Two routes:
//! * exhaustive: meet in the middle over every pair in `U(m)_N`, used when the
//!   half-subset tables fit in the budget; completes with a proof of emptiness;
//! * common side: scan even side lengths `K`, collect the vectors of norm `K²` whose
//!   unit vectors lie in `U(m)_N`, and solve an integer subset sum for each `K`.

use std::sync::atomic::{AtomicU64, Ordering};

use num_integer::{Integer, Roots};
use rayon::prelude::*;

use super::residue::{filters_for, residue};
use super::subset::{dp, dp_cells, mitm, mitm_cost};
use super::{certificate_from_units, Route, SearchBudget, SearchOutcome};
use crate::certificate::Certificate;
use crate::error::Result;
use crate::rational::Rational;
use crate::repgen::{enumerate_reps, LatticeVector, UnitVector};

/// Largest meet-in-the-middle table the exhaustive route will build.
const EXHAUSTIVE_ENTRY_CAP: u64 = 4_000_000;
/// Largest bit table the per-side dynamic program will allocate.
const DP_CELL_CAP: u128 = 1 << 31;

pub(crate) fn search(m: u64, p: usize, budget: &SearchBudget) -> Result<SearchOutcome> {
    let k = (p - 1) / 2;
    let pairs: Vec<UnitVector> = enumerate_reps(m, budget.cap)?
        .into_iter()
        .filter(|r| r.b > 0)
        .map(|r| UnitVector { a: r.a, b: r.b, c: r.c })
        .collect();

    if residue_obstructed(&pairs, k) {
        return Ok(SearchOutcome::ProvenEmptyWithinN);
    }
    let cost = mitm_cost(pairs.len(), k);
    if cost <= EXHAUSTIVE_ENTRY_CAP.min(budget.max_nodes) {
        return Ok(exhaustive(m, &pairs, k));
    }
    common_side(m, k, budget)
}

/// The x-equation mod `q`: `1 + Σ 2·a_i/c_i ≡ 0` over `k` pairs.
fn residue_obstructed(pairs: &[UnitVector], k: usize) -> bool {
    let dens: Vec<i64> = pairs.iter().map(|u| u.c).collect();
    let filters = filters_for(&dens, k, |q| pairs.iter().map(|u| ((2 * residue(u.a, u.c, q)) % q, 0)).collect());
    filters.iter().any(|f| !f.feasible(k, 1 % f.q, 0))
}

fn exhaustive(m: u64, pairs: &[UnitVector], k: usize) -> SearchOutcome {
    let values: Vec<Rational> = pairs.iter().map(UnitVector::x).collect();
    let target = Rational::new(-1, 2).unwrap();
    match mitm(&values, k, &target, &Rational::zero()) {
        Some(idx) => {
            let mut units = vec![UnitVector { a: 1, b: 0, c: 1 }];
            for i in idx {
                units.push(pairs[i]);
                units.push(pairs[i].conj());
            }
            SearchOutcome::Found { certificate: certificate_from_units(m, &units), route: Route::SymmetricExhaustive }
        }
        None => SearchOutcome::ProvenEmptyWithinN,
    }
}

/// Vectors `(x, y)` with `y > 0` and `x² + m·y² = K²` whose unit vector has denominator
/// at most `cap`; sorted by `x`. Also reports the loop length for budget accounting.
fn side_candidates(m: u64, side: u64, cap: u64) -> (Vec<(i128, i128)>, u64) {
    let k2 = side as u128 * side as u128;
    let m = m as u128;
    let mut out = Vec::new();
    let mut y = 1u128;
    while m * y * y <= k2 {
        let r = k2 - m * y * y;
        let x = r.sqrt();
        if x * x == r {
            let g = x.gcd(&y);
            if (side as u128) / g <= cap as u128 {
                out.push((x as i128, y as i128));
                if x != 0 {
                    out.push((-(x as i128), y as i128));
                }
            }
        }
        y += 1;
    }
    out.sort_unstable();
    (out, y as u64)
}

enum SideResult {
    Found(Vec<(i128, i128)>),
    None,
    TooLarge,
}

fn solve_side(m: u64, side: u64, k: usize, cap: u64, nodes: &AtomicU64) -> SideResult {
    let (cands, work) = side_candidates(m, side, cap);
    nodes.fetch_add(work, Ordering::Relaxed);
    if cands.len() < k {
        return SideResult::None;
    }
    let xs: Vec<i128> = cands.iter().map(|c| c.0).collect();
    let target = -(side as i128) / 2;
    let picked = if dp_cells(&xs, k) <= DP_CELL_CAP {
        nodes.fetch_add((xs.len() * (k + 1)) as u64, Ordering::Relaxed);
        dp(&xs, k, target)
    } else if mitm_cost(xs.len(), k) <= EXHAUSTIVE_ENTRY_CAP {
        nodes.fetch_add(mitm_cost(xs.len(), k), Ordering::Relaxed);
        mitm(&xs, k, &target, &0)
    } else {
        return SideResult::TooLarge;
    };
    match picked {
        Some(idx) => SideResult::Found(idx.into_iter().map(|i| cands[i]).collect()),
        None => SideResult::None,
    }
}

fn common_side(m: u64, k: usize, budget: &SearchBudget) -> Result<SearchOutcome> {
    let nodes = AtomicU64::new(0);
    let pool = budget.pool();
    let batch = 16 * budget.jobs.max(1) as u64;
    let mut next_side = 2u64;
    loop {
        if nodes.load(Ordering::Relaxed) > budget.max_nodes {
            return Ok(SearchOutcome::BudgetExhausted);
        }
        let sides: Vec<u64> = (0..batch).map(|i| next_side + 2 * i).collect();
        next_side += 2 * batch;
        let results: Vec<SideResult> =
            pool.install(|| sides.par_iter().map(|&s| solve_side(m, s, k, budget.cap, &nodes)).collect());
        let mut skipped = false;
        for (side, r) in sides.iter().zip(results) {
            match r {
                SideResult::Found(picked) if !skipped => {
                    let mut vectors = vec![LatticeVector::new(*side, 0)];
                    for (x, y) in picked {
                        vectors.push(LatticeVector::new(x, y));
                        vectors.push(LatticeVector::new(x, -y));
                    }
                    let cert = Certificate::from_vectors(m, vectors);
                    return Ok(SearchOutcome::Found {
                        certificate: super::canonicalize(&cert)?,
                        route: Route::SymmetricCommonSide,
                    });
                }
                SideResult::TooLarge => skipped = true,
                _ => {}
            }
        }
        if skipped {
            return Ok(SearchOutcome::BudgetExhausted);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn side_candidates_m7() {
        let (c, _) = side_candidates(7, 88, 1000);
        let xs: Vec<i128> = c.iter().map(|p| p.0).collect();
        for x in [81, -38, -87] {
            assert!(xs.contains(&x));
        }
        // the cap removes vectors whose unit vector has a large denominator
        let (c, _) = side_candidates(7, 88, 10);
        assert!(c.iter().all(|&(x, y)| 88 / (x.unsigned_abs().gcd(&(y as u128))) <= 10));
    }
}
