use std::fmt;

use crate::repgen::LatticeVector;
use crate::wide::Wide;

/// `n` distinct vectors of `Λ(m)` sharing the squared norm `side_sq` and summing to zero.
///
/// The struct itself does not enforce these conditions; see
/// [`verify_certificate`](crate::polygon::verify_certificate).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub m: u64,
    pub n: usize,
    pub side_sq: Wide,
    pub vectors: Vec<LatticeVector>,
}

impl Certificate {
    /// Takes `n` and `side_sq` from the vectors themselves.
    pub fn from_vectors(m: u64, vectors: Vec<LatticeVector>) -> Certificate {
        let side_sq = vectors.first().map(|v| v.norm_sq(m)).unwrap_or_default();
        Certificate { m, n: vectors.len(), side_sq, vectors }
    }

    pub fn coordinate_gcd(&self) -> Wide {
        self.vectors.iter().fold(Wide::ZERO, |g, v| g.gcd(&v.x).gcd(&v.y))
    }

    pub fn scale(&self, t: &Wide) -> Certificate {
        Certificate {
            m: self.m,
            n: self.n,
            side_sq: &self.side_sq * &t.square(),
            vectors: self.vectors.iter().map(|v| v.scale(t)).collect(),
        }
    }

    /// The side length when it is an integer.
    pub fn integer_side(&self) -> Option<Wide> {
        self.side_sq.exact_sqrt()
    }

    pub fn sum(&self) -> LatticeVector {
        self.vectors.iter().fold(LatticeVector::zero(), |acc, v| acc.add(v))
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={} n={} side_sq={} :", self.m, self.n, self.side_sq)?;
        for (i, v) in self.vectors.iter().enumerate() {
            let sep = if i == 0 { " " } else { "; " };
            write!(f, "{sep}{},{}", v.x, v.y)?;
        }
        Ok(())
    }
}
