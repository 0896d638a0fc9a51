//! Multivariate polynomials over the rationals.
//!
//! Sparse map from dense exponent vectors to coefficients. The variable list is
//! kept sorted and trimmed to the variables that actually occur, and zero terms
//! are never stored, so structural equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::Rational;
use crate::error::AlgebraError;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), c.into());
        Poly::from_parts(Vec::new(), terms)
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Rational::one());
        Poly::from_parts(vec![name.to_string()], terms)
    }

    /// Builds a polynomial from `(coefficient, [(variable, exponent)])` pairs.
    pub fn from_terms<'a, I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Vec<(&'a str, u32)>)>,
    {
        terms
            .into_iter()
            .map(|(c, monomial)| {
                monomial
                    .into_iter()
                    .fold(Poly::constant(c), |acc, (v, e)| acc * Poly::var(v).pow(e))
            })
            .fold(Poly::zero(), |acc, t| acc + t)
    }

    fn from_parts(vars: Vec<String>, terms: BTreeMap<Vec<u32>, Rational>) -> Self {
        let mut p = Poly { vars, terms };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> = (0..self.vars.len())
            .map(|k| self.terms.keys().any(|e| e[k] != 0))
            .collect();
        if used.iter().all(|&u| u) {
            return;
        }
        let vars = self
            .vars
            .iter()
            .zip(&used)
            .filter(|(_, &u)| u)
            .map(|(v, _)| v.clone())
            .collect();
        let terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(e, c)| {
                let e = e
                    .into_iter()
                    .zip(&used)
                    .filter(|(_, &u)| u)
                    .map(|(x, _)| x)
                    .collect();
                (e, c)
            })
            .collect();
        self.vars = vars;
        self.terms = terms;
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        if !self.vars.is_empty() {
            return None;
        }
        Some(self.terms.get(&Vec::new()).cloned().unwrap_or_else(Rational::zero))
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        match self.vars.iter().position(|v| v == name) {
            Some(k) => self.terms.keys().map(|e| e[k]).max().unwrap_or(0),
            None => 0,
        }
    }

    fn union_vars(&self, other: &Poly) -> Vec<String> {
        let mut vars: Vec<String> = self.vars.iter().chain(&other.vars).cloned().collect();
        vars.sort();
        vars.dedup();
        vars
    }

    fn embedded(&self, vars: &[String]) -> impl Iterator<Item = (Vec<u32>, &Rational)> + '_ {
        let positions: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("variable in union"))
            .collect();
        let width = vars.len();
        self.terms.iter().map(move |(e, c)| {
            let mut full = vec![0; width];
            for (k, &x) in e.iter().enumerate() {
                full[positions[k]] = x;
            }
            (full, c)
        })
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        let terms = self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect();
        Poly::from_parts(self.vars.clone(), terms)
    }

    pub fn pow(&self, exp: u32) -> Poly {
        (0..exp).fold(Poly::constant(1i64), |acc, _| &acc * self)
    }

    pub fn eval(&self, assignment: &BTreeMap<String, Rational>) -> Result<Rational, AlgebraError> {
        let values = self
            .vars
            .iter()
            .map(|v| {
                assignment
                    .get(v)
                    .cloned()
                    .ok_or_else(|| AlgebraError::MissingVariable(v.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(&values)
                    .fold(c.clone(), |acc, (&x, v)| acc * v.pow(x))
            })
            .sum())
    }

    /// Convenience form of [`Poly::eval`] taking `(name, value)` pairs.
    pub fn eval_at(&self, assignment: &[(&str, Rational)]) -> Result<Rational, AlgebraError> {
        let map = assignment
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        self.eval(&map)
    }

    /// Replaces every occurrence of `name` with `value`.
    pub fn substitute(&self, name: &str, value: &Poly) -> Poly {
        let Some(k) = self.vars.iter().position(|v| v == name) else {
            return self.clone();
        };
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            for (j, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let factor = if j == k {
                    value.pow(x)
                } else {
                    Poly::var(&self.vars[j]).pow(x)
                };
                term = &term * &factor;
            }
            out = out + term;
        }
        out
    }

    /// Splits `self = coeff * name + rest` when `self` is at most linear in
    /// `name`; `None` otherwise.
    pub fn split_linear(&self, name: &str) -> Option<(Poly, Poly)> {
        let Some(k) = self.vars.iter().position(|v| v == name) else {
            return Some((Poly::zero(), self.clone()));
        };
        let mut coeff = BTreeMap::new();
        let mut rest = BTreeMap::new();
        for (e, c) in &self.terms {
            match e[k] {
                0 => {
                    rest.insert(e.clone(), c.clone());
                }
                1 => {
                    let mut e = e.clone();
                    e[k] = 0;
                    coeff.insert(e, c.clone());
                }
                _ => return None,
            }
        }
        Some((
            Poly::from_parts(self.vars.clone(), coeff),
            Poly::from_parts(self.vars.clone(), rest),
        ))
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Self {
        Poly::constant(c)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let vars = self.union_vars(rhs);
        let mut terms: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (e, c) in self.embedded(&vars).chain(rhs.embedded(&vars)) {
            *terms.entry(e).or_default() += c;
        }
        Poly::from_parts(vars, terms)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let vars = self.union_vars(rhs);
        let right: Vec<(Vec<u32>, &Rational)> = rhs.embedded(&vars).collect();
        let mut terms: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (a, x) in self.embedded(&vars) {
            for (b, y) in &right {
                let e = a.iter().zip(b).map(|(p, q)| p + q).collect();
                *terms.entry(e).or_default() += x * *y;
            }
        }
        Poly::from_parts(vars, terms)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&Rational::from_int(-1))
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest total degree first
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (n, (e, c)) in terms.into_iter().enumerate() {
            let monomial: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(&x, _)| x > 0)
                .map(|(&x, v)| if x == 1 { v.clone() } else { format!("{v}^{x}") })
                .collect();
            let magnitude = c.abs();
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if monomial.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude == Rational::one() {
                write!(f, "{}", monomial.join("*"))?;
            } else {
                write!(f, "{magnitude}*{}", monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl serde::Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `poly_eval`: exact evaluation under a full assignment.
pub fn poly_eval(p: &Poly, assignment: &BTreeMap<String, Rational>) -> Result<Rational, AlgebraError> {
    p.eval(assignment)
}

/// `poly_equal`: true iff `p - q` is the zero polynomial.
pub fn poly_equal(p: &Poly, q: &Poly) -> bool {
    (p - q).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::q;

    fn t() -> Poly {
        Poly::var("t")
    }
    fn s() -> Poly {
        Poly::var("s")
    }

    #[test]
    fn eval_t_plus_four_at_zero() {
        let p = t() + Poly::constant(4i64);
        assert_eq!(p.eval_at(&[("t", Rational::zero())]).unwrap(), 4);
    }

    #[test]
    fn zero_poly_evaluates_to_zero() {
        let p = Poly::zero();
        assert_eq!(p.eval_at(&[("t", q(7, 3))]).unwrap(), 0);
        assert_eq!(p.eval(&BTreeMap::new()).unwrap(), 0);
    }

    #[test]
    fn eval_b1_closed_form() {
        // 1/2 (s^2 t + s^2 - s t + s + 6) at (s, t) = (2, 1)
        let p = (&s() * &s() * t() + &s() * &s() - &s() * &t() + s() + Poly::constant(6i64))
            .scale(&q(1, 2));
        let v = p
            .eval_at(&[("s", Rational::from_int(2)), ("t", Rational::one())])
            .unwrap();
        assert_eq!(v, 7);
    }

    #[test]
    fn missing_binding_is_an_error() {
        let p = t() * s();
        let err = p.eval_at(&[("t", Rational::one())]).unwrap_err();
        assert_eq!(err, AlgebraError::MissingVariable("s".into()));
    }

    #[test]
    fn commutativity_is_structural_equality() {
        let a = t() + Poly::constant(4i64);
        let b = Poly::constant(4i64) + t();
        assert!(poly_equal(&a, &b));
        assert_eq!(a, b);
    }

    #[test]
    fn cancellation_trims_variables() {
        let p = (t() + s()) - s();
        assert_eq!(p.variables(), &["t".to_string()]);
        assert_eq!(p, t());
        assert!((t() - t()).is_zero());
        assert_eq!((t() - t()).variables().len(), 0);
    }

    #[test]
    fn substitution_composes() {
        // (t + 1)^2 with t := s - 1 gives s^2
        let p = (t() + Poly::constant(1i64)).pow(2);
        let r = p.substitute("t", &(s() - Poly::constant(1i64)));
        assert_eq!(r, s().pow(2));
    }

    #[test]
    fn split_linear_separates_coefficient() {
        let b = Poly::var("b");
        let p = &b * &t() + Poly::constant(3i64) * b.clone() + t() - Poly::constant(4i64);
        let (coeff, rest) = p.split_linear("b").unwrap();
        assert_eq!(coeff, t() + Poly::constant(3i64));
        assert_eq!(rest, t() - Poly::constant(4i64));
        assert!(b.pow(2).split_linear("b").is_none());
    }

    #[test]
    fn display_is_readable() {
        let p = (t().pow(2) - t().scale(&q(3, 2))) + Poly::constant(-5i64);
        assert_eq!(p.to_string(), "t^2 - 3/2*t - 5");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
