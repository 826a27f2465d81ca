//! Modular pruning. If a prime `q` divides none of the denominators in the search
//! space, every unit vector reduces to a point of `(Z/q)²` and a zero sum over `Q`
//! must also vanish mod `q`. Precomputing which residues `r` more vectors can reach
//! turns that into an O(1) feasibility test per search node.

use crate::rational::{inv_mod, mul_mod};

/// Primes tried as moduli.
const MODULI: [u64; 11] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];

pub(crate) struct ResidueFilter {
    pub q: u64,
    /// `reach[r][x * q + y]`: some `r` residues (repetition allowed) add up to `(x, y)`.
    reach: Vec<Vec<bool>>,
}

impl ResidueFilter {
    fn build(q: u64, points: &[(u64, u64)], max_r: usize) -> ResidueFilter {
        let cells = (q * q) as usize;
        let mut pts: Vec<(u64, u64)> = points.to_vec();
        pts.sort_unstable();
        pts.dedup();
        let mut reach = vec![vec![false; cells]];
        reach[0][0] = true;
        for r in 1..=max_r {
            let prev = &reach[r - 1];
            let mut cur = vec![false; cells];
            for (cell, _) in prev.iter().enumerate().filter(|(_, &b)| b) {
                let (x, y) = (cell as u64 / q, cell as u64 % q);
                for &(px, py) in &pts {
                    cur[(((x + px) % q) * q + (y + py) % q) as usize] = true;
                }
            }
            reach.push(cur);
        }
        ResidueFilter { q, reach }
    }

    /// Whether `r` more vectors can move the running residue `(x, y)` to zero.
    pub fn feasible(&self, r: usize, x: u64, y: u64) -> bool {
        let q = self.q;
        let cell = ((q - x) % q) * q + (q - y) % q;
        self.reach[r][cell as usize]
    }
}

/// `a / c mod q`, with `c` invertible.
pub(crate) fn residue(a: i64, c: i64, q: u64) -> u64 {
    let a = a.rem_euclid(q as i64) as u64;
    let c = c.rem_euclid(q as i64) as u64;
    mul_mod(a, inv_mod(c, q).expect("denominator is a unit"), q)
}

/// Filters for every prime in [`MODULI`] that divides no denominator. `points` maps a
/// modulus to the residues of the available steps.
pub(crate) fn filters_for<F>(denominators: &[i64], max_r: usize, points: F) -> Vec<ResidueFilter>
where
    F: Fn(u64) -> Vec<(u64, u64)>,
{
    MODULI
        .iter()
        .copied()
        .filter(|&q| denominators.iter().all(|&c| c % q as i64 != 0))
        .map(|q| ResidueFilter::build(q, &points(q), max_r))
        .collect()
}
