//! Depth-first search for `n` distinct unit vectors of `U(m)_N` summing to zero.
//!
//! Vectors are visited in counter-clockwise order and chosen with increasing index.
//! A node is cut when
//! * the partial sum is longer than the number of vectors still to add, or
//! * some residue filter shows the remaining vectors cannot cancel it mod `q`.
//!
//! The last two vectors are never enumerated: one vector is a hash lookup of `−s`,
//! and two unit vectors adding to `t` are the (at most two) intersection points of the
//! unit circle with the unit circle around `t`.

use std::cell::Cell;
use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

use super::residue::{filters_for, residue, ResidueFilter};
use super::{certificate_from_units, Route, SearchBudget, SearchOutcome};
use crate::error::Result;
use crate::polygon::angle_cmp;
use crate::rational::Rational;
use crate::repgen::{unit_set, LatticeVector, UnitVector};

struct Space {
    m: u64,
    m_rat: Rational,
    n: usize,
    units: Vec<UnitVector>,
    xs: Vec<Rational>,
    ys: Vec<Rational>,
    index: HashMap<UnitVector, usize>,
    filters: Vec<ResidueFilter>,
    /// `points[f][i]`: residue of unit `i` under filter `f`.
    points: Vec<Vec<(u64, u64)>>,
}

enum Flow {
    Found(Vec<usize>),
    Exhausted,
    Aborted,
    /// A lower partition already has a solution.
    Superseded,
}

struct Worker<'a> {
    space: &'a Space,
    nodes: &'a AtomicU64,
    max_nodes: u64,
    best: &'a AtomicUsize,
    /// Nodes not yet added to the shared counter.
    pending: Cell<u64>,
}

/// Nodes a worker visits between looks at the shared state.
const TICK_BATCH: u64 = 256;

impl Space {
    fn new(m: u64, n: usize, cap: u64) -> Result<Space> {
        let mut units = unit_set(m, cap)?;
        units.sort_by(|u, v| angle_cmp(&LatticeVector::new(u.a, u.b), &LatticeVector::new(v.a, v.b)));
        let xs = units.iter().map(UnitVector::x).collect();
        let ys = units.iter().map(UnitVector::y).collect();
        let index = units.iter().enumerate().map(|(i, u)| (*u, i)).collect();
        let dens: Vec<i64> = units.iter().map(|u| u.c).collect();
        let filters =
            filters_for(&dens, n, |q| units.iter().map(|u| (residue(u.a, u.c, q), residue(u.b, u.c, q))).collect());
        let points = filters
            .iter()
            .map(|f| units.iter().map(|u| (residue(u.a, u.c, f.q), residue(u.b, u.c, f.q))).collect())
            .collect();
        Ok(Space { m, m_rat: Rational::integer(m), n, units, xs, ys, index, filters, points })
    }

    fn norm_sq(&self, x: &Rational, y: &Rational) -> Rational {
        x.square() + &self.m_rat * &y.square()
    }

    fn residues_ok(&self, res: &[(u64, u64)], remaining: usize) -> bool {
        self.filters.iter().zip(res).all(|(f, &(x, y))| f.feasible(remaining, x, y))
    }

    /// Index of the unit vector `(x, y)` if it belongs to the space.
    fn lookup(&self, x: &Rational, y: &Rational) -> Option<usize> {
        let c = x.denom().gcd(y.denom());
        let c = (x.denom() * y.denom()).checked_div(&c)?;
        let a = (x.numer() * &c).checked_div(x.denom())?;
        let b = (y.numer() * &c).checked_div(y.denom())?;
        let key = UnitVector { a: a.to_i64()?, b: b.to_i64()?, c: c.to_i64()? };
        self.index.get(&key).copied()
    }
}

impl Worker<'_> {
    fn tick(&self, top: usize) -> Option<Flow> {
        let pending = self.pending.get() + 1;
        if pending < TICK_BATCH.min(self.max_nodes) {
            self.pending.set(pending);
            return None;
        }
        self.pending.set(0);
        if self.best.load(Ordering::Relaxed) < top {
            Some(Flow::Superseded)
        } else if self.nodes.fetch_add(pending, Ordering::Relaxed) >= self.max_nodes {
            Some(Flow::Aborted)
        } else {
            None
        }
    }

    fn dfs(&self, chosen: &mut Vec<usize>, x: &Rational, y: &Rational, res: &[(u64, u64)]) -> Flow {
        let sp = self.space;
        let remaining = sp.n - chosen.len();
        let last = *chosen.last().unwrap();
        match remaining {
            1 => {
                return match sp.lookup(&-x, &-y) {
                    Some(j) if j > last => {
                        chosen.push(j);
                        Flow::Found(chosen.clone())
                    }
                    _ => Flow::Exhausted,
                };
            }
            2 => {
                return match self.close_with_two(last, &-x, &-y) {
                    Some((i, j)) => {
                        chosen.extend([i, j]);
                        Flow::Found(chosen.clone())
                    }
                    None => Flow::Exhausted,
                };
            }
            _ => {}
        }
        let after = Rational::integer((remaining - 1) as i64).square();
        let mut next_res = res.to_vec();
        for i in last + 1..=sp.units.len() - remaining {
            if let Some(flow) = self.tick(chosen[0]) {
                return flow;
            }
            let nx = x + &sp.xs[i];
            let ny = y + &sp.ys[i];
            if sp.norm_sq(&nx, &ny) > after {
                continue;
            }
            for (f, r) in next_res.iter_mut().enumerate() {
                let (px, py) = sp.points[f][i];
                let q = sp.filters[f].q;
                *r = ((res[f].0 + px) % q, (res[f].1 + py) % q);
            }
            if !sp.residues_ok(&next_res, remaining - 1) {
                continue;
            }
            chosen.push(i);
            match self.dfs(chosen, &nx, &ny, &next_res) {
                Flow::Exhausted => {
                    chosen.pop();
                }
                other => return other,
            }
        }
        Flow::Exhausted
    }

    /// Two distinct unit vectors with indices above `last` adding up to `(tx, ty)`.
    fn close_with_two(&self, last: usize, tx: &Rational, ty: &Rational) -> Option<(usize, usize)> {
        let sp = self.space;
        let r = sp.norm_sq(tx, ty);
        if r.is_zero() {
            // antipodal pair
            for i in last + 1..sp.units.len() {
                let j = sp.lookup(&-&sp.xs[i], &-&sp.ys[i])?;
                if j > i {
                    return Some((i, j));
                }
            }
            return None;
        }
        let four = Rational::integer(4);
        if r >= four {
            return None;
        }
        // u = t/2 + w·(−y√m, x)/√m with w² = m(4 − R)/(4R)
        let w2 = &(&sp.m_rat * &(&four - &r)) * &(&four * &r).recip()?;
        let w = w2.exact_sqrt()?;
        let half = Rational::new(1, 2).unwrap();
        let w_over_m = &w * &sp.m_rat.recip()?;
        let ux = &(tx * &half) - &(&w * ty);
        let uy = &(ty * &half) + &(&w_over_m * tx);
        let vx = tx - &ux;
        let vy = ty - &uy;
        let i = sp.lookup(&ux, &uy)?;
        let j = sp.lookup(&vx, &vy)?;
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        (i > last && i != j).then_some((i, j))
    }
}

pub(crate) fn search(m: u64, n: usize, budget: &SearchBudget) -> Result<SearchOutcome> {
    let space = Space::new(m, n, budget.cap)?;
    let zero_res = vec![(0u64, 0u64); space.filters.len()];
    if space.units.len() < n || !space.residues_ok(&zero_res, n) {
        return Ok(SearchOutcome::ProvenEmptyWithinN);
    }
    let nodes = AtomicU64::new(0);
    let best = AtomicUsize::new(usize::MAX);
    let tops = space.units.len() - n + 1;
    let results: Vec<Flow> = budget.pool().install(|| {
        (0..tops)
            .into_par_iter()
            .map(|i| {
                if i > best.load(Ordering::Relaxed) {
                    return Flow::Superseded;
                }
                let mut res = zero_res.clone();
                for (f, r) in res.iter_mut().enumerate() {
                    *r = space.points[f][i];
                }
                if !space.residues_ok(&res, n - 1) {
                    return Flow::Exhausted;
                }
                let worker = Worker {
                    space: &space,
                    nodes: &nodes,
                    max_nodes: budget.max_nodes,
                    best: &best,
                    pending: Cell::new(0),
                };
                let mut chosen = vec![i];
                let flow = worker.dfs(&mut chosen, &space.xs[i], &space.ys[i], &res);
                if let Flow::Found(_) = flow {
                    best.fetch_min(i, Ordering::Relaxed);
                }
                flow
            })
            .collect()
    });
    // partitions are scanned in order so the result does not depend on scheduling
    for flow in results {
        match flow {
            Flow::Found(idx) => {
                let units: Vec<UnitVector> = idx.iter().map(|&i| space.units[i]).collect();
                return Ok(SearchOutcome::Found {
                    certificate: certificate_from_units(space.m, &units),
                    route: Route::General,
                });
            }
            Flow::Aborted => return Ok(SearchOutcome::BudgetExhausted),
            Flow::Exhausted | Flow::Superseded => {}
        }
    }
    Ok(SearchOutcome::ProvenEmptyWithinN)
}
