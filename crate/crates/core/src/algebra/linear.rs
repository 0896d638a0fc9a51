//! Exact Gaussian elimination.
//!
//! The pivot in each column is the first row (top to bottom) with a nonzero
//! entry, so the elimination sequence, and therefore any report derived from
//! it, is reproducible. Right-hand sides may be any [`LinearValue`]: plain
//! rationals, or polynomials when the unknowns depend on a symbolic parameter.

use super::poly::Poly;
use super::rational::Rational;
use crate::error::AlgebraError;

/// A vector space over the rationals, as far as elimination needs one.
pub trait LinearValue: Clone {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn scaled(&self, c: &Rational) -> Self;
    fn minus(&self, other: &Self) -> Self;
}

impl LinearValue for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn scaled(&self, c: &Rational) -> Self {
        self * c
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
}

impl LinearValue for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem<V = Rational> {
    pub matrix: Vec<Vec<Rational>>,
    pub rhs: Vec<V>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution<V = Rational> {
    Unique(Vec<V>),
    Underdetermined,
    Infeasible,
}

impl<V> Solution<V> {
    pub fn unique(self) -> Option<Vec<V>> {
        match self {
            Solution::Unique(x) => Some(x),
            _ => None,
        }
    }
}

impl<V: LinearValue> LinearSystem<V> {
    pub fn new(matrix: Vec<Vec<Rational>>, rhs: Vec<V>) -> Result<Self, AlgebraError> {
        if matrix.len() != rhs.len() {
            return Err(AlgebraError::Shape(format!(
                "{} rows but {} right-hand sides",
                matrix.len(),
                rhs.len()
            )));
        }
        if let Some(width) = matrix.first().map(Vec::len) {
            if let Some(bad) = matrix.iter().position(|row| row.len() != width) {
                return Err(AlgebraError::Shape(format!(
                    "row {bad} has {} entries, expected {width}",
                    matrix[bad].len()
                )));
            }
        }
        Ok(LinearSystem { matrix, rhs })
    }

    pub fn unknowns(&self) -> usize {
        self.matrix.first().map_or(0, Vec::len)
    }

    pub fn solve(&self) -> Solution<V> {
        let cols = self.unknowns();
        let mut a = self.matrix.clone();
        let mut b = self.rhs.clone();
        let rows = a.len();
        let mut pivots: Vec<usize> = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&k| !a[k][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            b.swap(r, p);
            let inv = a[r][c].recip().expect("pivot is nonzero");
            for x in a[r].iter_mut() {
                *x = &*x * &inv;
            }
            b[r] = b[r].scaled(&inv);
            for k in 0..rows {
                if k == r || a[k][c].is_zero() {
                    continue;
                }
                let factor = a[k][c].clone();
                let pivot_row = a[r].clone();
                for (x, p) in a[k].iter_mut().zip(&pivot_row) {
                    *x -= &(&factor * p);
                }
                b[k] = b[k].minus(&b[r].scaled(&factor));
            }
            pivots.push(c);
            r += 1;
        }
        if (r..rows).any(|k| !b[k].is_zero()) {
            return Solution::Infeasible;
        }
        if pivots.len() < cols {
            return Solution::Underdetermined;
        }
        Solution::Unique(b.into_iter().take(cols).collect())
    }
}

/// `solve_linear` over the rationals.
pub fn solve_linear(sys: &LinearSystem) -> Solution {
    sys.solve()
}

/// Matrix-vector product.
pub fn apply(matrix: &[Vec<Rational>], x: &[Rational]) -> Vec<Rational> {
    matrix
        .iter()
        .map(|row| row.iter().zip(x).map(|(a, v)| a * v).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::q;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
            .collect()
    }

    fn vec_of(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from_int(x)).collect()
    }

    #[test]
    fn certificate_subsystem_for_16_8() {
        // lambda: 40 c1 + 407 c2 = 13, delta_irr: 8 c1 + 61 c2 = 2
        let sys = LinearSystem::new(ints(&[&[40, 407], &[8, 61]]), vec_of(&[13, 2])).unwrap();
        assert_eq!(sys.solve(), Solution::Unique(vec![q(7, 272), q(1, 34)]));
    }

    #[test]
    fn identity_returns_rhs() {
        let rhs = vec![q(1, 3), q(-5, 7), Rational::from_int(11)];
        let sys = LinearSystem::new(ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), rhs.clone()).unwrap();
        assert_eq!(sys.solve(), Solution::Unique(rhs));
    }

    #[test]
    fn inconsistent_rank_one_system() {
        let sys = LinearSystem::new(ints(&[&[1, 1], &[2, 2]]), vec_of(&[1, 3])).unwrap();
        assert_eq!(sys.solve(), Solution::Infeasible);
    }

    #[test]
    fn consistent_rank_one_system_is_underdetermined() {
        let sys = LinearSystem::new(ints(&[&[1, 1], &[2, 2]]), vec_of(&[1, 2])).unwrap();
        assert_eq!(sys.solve(), Solution::Underdetermined);
    }

    #[test]
    fn overdetermined_but_consistent() {
        let sys = LinearSystem::new(ints(&[&[1, 0], &[0, 1], &[1, 1]]), vec_of(&[2, 3, 5])).unwrap();
        assert_eq!(sys.solve(), Solution::Unique(vec_of(&[2, 3])));
        let bad = LinearSystem::new(ints(&[&[1, 0], &[0, 1], &[1, 1]]), vec_of(&[2, 3, 6])).unwrap();
        assert_eq!(bad.solve(), Solution::Infeasible);
    }

    #[test]
    fn needs_row_swap() {
        let sys = LinearSystem::new(ints(&[&[0, 1], &[1, 0]]), vec_of(&[4, 9])).unwrap();
        assert_eq!(sys.solve(), Solution::Unique(vec_of(&[9, 4])));
    }

    #[test]
    fn ragged_matrix_is_rejected() {
        assert!(LinearSystem::new(ints(&[&[1, 0], &[1]]), vec_of(&[1, 1])).is_err());
        assert!(LinearSystem::new(ints(&[&[1, 0]]), vec_of(&[1, 1])).is_err());
    }

    #[test]
    fn polynomial_right_hand_side() {
        // b11 = 4, -b10 + b11 = -t  =>  b10 = t + 4
        let t = Poly::var("t");
        let sys = LinearSystem::new(ints(&[&[0, 1], &[-1, 1]]), vec![Poly::constant(4i64), -t.clone()])
            .unwrap();
        let x = sys.solve().unique().unwrap();
        assert_eq!(x[0], t + Poly::constant(4i64));
        assert_eq!(x[1], Poly::constant(4i64));
    }
}
