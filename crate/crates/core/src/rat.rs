//! Exact rational vectors and matrices: the realization arithmetic behind
//! orthogonal matrix groups, reflection words and representations.
//!
//! Rationals are arbitrary-precision and always stored reduced with a
//! positive denominator (`num_rational` guarantees both).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

pub type Rat = BigRational;

/// Dense row-major square matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatMat {
    pub dim: usize,
    pub entries: Vec<Rat>,
}

impl RatMat {
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Option<RatMat> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return None;
        }
        Some(RatMat { dim, entries: rows.into_iter().flatten().collect() })
    }

    pub fn identity(dim: usize) -> RatMat {
        let mut entries = vec![Rat::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Rat::one();
        }
        RatMat { dim, entries }
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.dim + c]
    }

    pub fn is_identity(&self) -> bool {
        *self == RatMat::identity(self.dim)
    }

    pub fn mul(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut entries = vec![Rat::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        entries[i * n + j] += a * b;
                    }
                }
            }
        }
        RatMat { dim: n, entries }
    }

    pub fn transpose(&self) -> RatMat {
        let n = self.dim;
        let mut entries = vec![Rat::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.at(i, j).clone();
            }
        }
        RatMat { dim: n, entries }
    }

    /// g^T g = I, exactly.
    pub fn is_orthogonal(&self) -> bool {
        self.transpose().mul(self).is_identity()
    }

    /// Column `c` as a vector.
    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.dim).map(|r| self.at(r, c).clone()).collect()
    }

    /// Exact determinant by fraction-free elimination on a working copy.
    pub fn det(&self) -> Rat {
        let n = self.dim;
        let mut work: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut det = Rat::one();
        for col in 0..n {
            let piv = match (col..n).find(|&r| !work[r][col].is_zero()) {
                Some(p) => p,
                None => return Rat::zero(),
            };
            if piv != col {
                work.swap(col, piv);
                det = -det;
            }
            let pv = work[col][col].clone();
            det *= &pv;
            for r in col + 1..n {
                if !work[r][col].is_zero() {
                    let f = &work[r][col] / &pv;
                    for c in col..n {
                        let sub = &f * &work[col][c];
                        work[r][c] -= sub;
                    }
                }
            }
        }
        det
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &RatMat) -> RatMat {
        let n = self.dim + other.dim;
        let mut entries = vec![Rat::zero(); n * n];
        for i in 0..self.dim {
            for j in 0..self.dim {
                entries[i * n + j] = self.at(i, j).clone();
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                entries[(self.dim + i) * n + (self.dim + j)] = other.at(i, j).clone();
            }
        }
        RatMat { dim: n, entries }
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.at(i, j) * &v[j]).sum())
            .collect()
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// x |-> x - 2 (x.v)/(v.v) v applied to every column of m (i.e. r_v * m).
pub fn reflect_matrix(v: &[Rat], m: &RatMat) -> RatMat {
    let n = v.len();
    assert_eq!(n, m.dim);
    let vv = dot(v, v);
    let mut entries = vec![Rat::zero(); n * n];
    for c in 0..n {
        let col = m.column(c);
        let coef = Rat::from_integer(BigInt::from(2)) * dot(&col, v) / &vv;
        for r in 0..n {
            entries[r * n + c] = &col[r] - &coef * &v[r];
        }
    }
    RatMat { dim: n, entries }
}

/// Parse "p/q" (or plain "p"); the result is reduced with positive
/// denominator regardless of the input form.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((_, den)) = s.split_once('/') {
        // Ratio::new panics on a zero denominator; reject it here
        if BigInt::from_str(den.trim()).ok()?.is_zero() {
            return None;
        }
    }
    Rat::from_str(s).ok()
}

/// Canonical "p/q" rendering with explicit positive denominator.
pub fn rat_str(r: &Rat) -> String {
    debug_assert!(r.denom().is_positive());
    format!("{}/{}", r.numer(), r.denom())
}
