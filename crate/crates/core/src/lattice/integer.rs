//! Integer linear algebra: Hermite reduction, integer kernels and sublattice indices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{BilinearLattice, LatticeVector};
use crate::error::{Error, Result};
use crate::rational::Rat;

/// Index of a sublattice: finite, or infinite when the span has lower rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticeIndex {
    Finite(String),
    Infinite,
}

impl LatticeIndex {
    pub fn finite(n: &BigInt) -> Self {
        LatticeIndex::Finite(n.to_string())
    }

    pub fn as_u64(&self) -> Option<u64> {
        match self {
            LatticeIndex::Finite(s) => s.parse().ok(),
            LatticeIndex::Infinite => None,
        }
    }
}

impl std::fmt::Display for LatticeIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LatticeIndex::Finite(s) => f.write_str(s),
            LatticeIndex::Infinite => f.write_str("infinite"),
        }
    }
}

/// Row-style Hermite reduction of an integer matrix. Returns the nonzero rows
/// of an echelon form spanning the same `Z`-module.
pub fn row_echelon(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..ncols {
        if pivot_row >= m.len() {
            break;
        }
        // Euclid on the column below pivot_row until one nonzero entry remains.
        loop {
            let nz: Vec<usize> = (pivot_row..m.len())
                .filter(|&r| !m[r][col].is_zero())
                .collect();
            if nz.is_empty() {
                break;
            }
            let best = *nz
                .iter()
                .min_by(|&&a, &&b| m[a][col].abs().cmp(&m[b][col].abs()))
                .unwrap();
            m.swap(pivot_row, best);
            let mut done = true;
            for r in pivot_row + 1..m.len() {
                if m[r][col].is_zero() {
                    continue;
                }
                let q = m[r][col].div_floor(&m[pivot_row][col]);
                let prow = m[pivot_row].clone();
                for (x, p) in m[r].iter_mut().zip(&prow) {
                    *x -= &q * p;
                }
                if !m[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !m[pivot_row][col].is_zero() {
            if m[pivot_row][col].is_negative() {
                for x in m[pivot_row].iter_mut() {
                    *x = -x.clone();
                }
            }
            pivot_row += 1;
        }
    }
    m.truncate(pivot_row);
    m
}

/// Absolute value of the product of the elementary divisors of a full-row-rank
/// echelon basis, i.e. the index of its span in `Z^ncols` when square.
fn echelon_index(echelon: &[Vec<BigInt>]) -> BigInt {
    let mut prod = BigInt::one();
    let mut col = 0;
    for row in echelon {
        while row[col].is_zero() {
            col += 1;
        }
        prod *= row[col].abs();
        col += 1;
    }
    prod
}

/// A `Z`-basis of `{x ∈ Z^n : row·x = 0 for every row}`.
pub fn integer_kernel(rows: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    // Column operations on [A; I] tracked through row reduction of the transpose.
    let mut aug: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            let mut r: Vec<BigInt> = rows.iter().map(|row| row[j].clone()).collect();
            r.extend((0..n).map(|k| {
                if k == j {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }));
            r
        })
        .collect();
    let m = rows.len();
    let mut pivot_row = 0;
    for col in 0..m {
        loop {
            let nz: Vec<usize> = (pivot_row..n).filter(|&r| !aug[r][col].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let best = *nz
                .iter()
                .min_by(|&&a, &&b| aug[a][col].abs().cmp(&aug[b][col].abs()))
                .unwrap();
            aug.swap(pivot_row, best);
            let mut done = true;
            for r in pivot_row + 1..n {
                if aug[r][col].is_zero() {
                    continue;
                }
                let q = aug[r][col].div_floor(&aug[pivot_row][col]);
                let prow = aug[pivot_row].clone();
                for (x, p) in aug[r].iter_mut().zip(&prow) {
                    *x -= &q * p;
                }
                if !aug[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if pivot_row < n && !aug[pivot_row][col].is_zero() {
            pivot_row += 1;
        }
    }
    aug[pivot_row..].iter().map(|r| r[m..].to_vec()).collect()
}

/// Scales a rational row to a primitive-free integer row with the same kernel.
pub fn clear_denominators(row: &[Rat]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
}

/// Index of the integer span of `span_of` inside the lattice `Z^rank` of
/// `ambient`; infinite when the span has smaller rank.
pub fn sublattice_index(
    span_of: &[LatticeVector],
    ambient: &BilinearLattice,
) -> Result<LatticeIndex> {
    let mut rows = Vec::with_capacity(span_of.len());
    for v in span_of {
        if v.coords().len() != ambient.rank() {
            return Err(Error::Dimension {
                expected: ambient.rank(),
                got: v.coords().len(),
            });
        }
        if !v.is_integral() {
            return Err(Error::InvalidLattice(format!(
                "vector {v:?} is not in the lattice"
            )));
        }
        rows.push(
            v.coords()
                .iter()
                .map(|q| q.numer().clone())
                .collect::<Vec<_>>(),
        );
    }
    let ech = row_echelon(&rows);
    if ech.len() < ambient.rank() {
        return Ok(LatticeIndex::Infinite);
    }
    Ok(LatticeIndex::finite(&echelon_index(&ech)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::BilinearLattice;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn index_trivial_cases() {
        let l = BilinearLattice::diagonal(&[-2], &["a"]).unwrap();
        let a = LatticeVector::from_i64(&l, &[1]).unwrap();
        assert_eq!(
            sublattice_index(std::slice::from_ref(&a), &l)
                .unwrap()
                .as_u64(),
            Some(1)
        );
        assert_eq!(
            sublattice_index(&[a.scale(&crate::rational::rat(2))], &l)
                .unwrap()
                .as_u64(),
            Some(2)
        );
        let l2 = BilinearLattice::diagonal(&[1, 1], &["x", "y"]).unwrap();
        let x = LatticeVector::from_i64(&l2, &[1, 1]).unwrap();
        assert_eq!(sublattice_index(&[x], &l2).unwrap(), LatticeIndex::Infinite);
    }

    #[test]
    fn index_matches_determinant() {
        let l = BilinearLattice::diagonal(&[1, 1, 1], &["x", "y", "z"]).unwrap();
        let vs: Vec<_> = [[2, 1, 0], [0, 3, 1], [1, 0, 4], [3, 4, 5]]
            .iter()
            .map(|c| LatticeVector::from_i64(&l, c).unwrap())
            .collect();
        // det of first three rows = 2*12 - 1*(0-1) = 25; the fourth is their sum.
        assert_eq!(sublattice_index(&vs, &l).unwrap().as_u64(), Some(25));
    }

    #[test]
    fn kernel_of_anticanonical_pairing() {
        // K·v for the diagonal (1,-1^7) form and K = 3l - sum e_i.
        let row = big(&[&[3, 1, 1, 1, 1, 1, 1, 1]]);
        let ker = integer_kernel(&row, 8);
        assert_eq!(ker.len(), 7);
        for v in &ker {
            let s: BigInt = v.iter().zip(&row[0]).map(|(a, b)| a * b).sum();
            assert!(s.is_zero());
        }
        // saturated: the kernel basis together with a vector of pairing 1 spans Z^8
        let mut all = ker.clone();
        all.push(big(&[&[0, 1, 0, 0, 0, 0, 0, 0]]).remove(0));
        let ech = row_echelon(&all);
        assert_eq!(ech.len(), 8);
        assert_eq!(echelon_index(&ech), BigInt::one());
    }
}
