//! Intersection numbers against the one-parameter test curves `T_{i:S}`.
//!
//! `T_{i:S}` fixes a general genus-`i` curve carrying `S` and a node point,
//! and moves the attachment point along a general genus-`(g - i)` curve
//! carrying `S^c`. Its nonzero intersections with the generators are
//!
//! * `T·ψ_j = 1` for `j ∈ S^c`,
//! * `T·δ_{i:S∪{j}} = 1` for `j ∈ S^c`,
//! * `T·δ_{i:S} = -(2(g - i) - 2 + n - |S|)`.

use serde::Serialize;

use super::class::{DivisorClass, Generator};
use super::coefficient::Coefficient;
use super::index::{canonical_index, BoundaryIndex, LabelSet, Space};
use crate::algebra::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TestCurve {
    space: Space,
    i: u32,
    #[serde(rename = "S")]
    set: LabelSet,
}

impl Serialize for LabelSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(serializer)
    }
}

impl TestCurve {
    /// Requires `0 <= i <= g`, `S ⊆ {1..n}` and a stable splitting `(i, S)`.
    pub fn new(space: Space, i: u32, set: LabelSet) -> Result<Self> {
        canonical_index(&space, i, set)?;
        Ok(TestCurve { space, i, set })
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn genus(&self) -> u32 {
        self.i
    }

    pub fn set(&self) -> LabelSet {
        self.set
    }

    /// The boundary divisor the curve lies in.
    pub fn host(&self) -> BoundaryIndex {
        canonical_index(&self.space, self.i, self.set).expect("validated at construction")
    }

    /// `2(g - i) - 2 + n - s`, the negated self-intersection.
    pub fn host_degree(&self) -> i64 {
        let (g, n) = (self.space.g() as i64, self.space.n() as i64);
        2 * (g - self.i as i64) - 2 + n - self.set.len() as i64
    }

    /// Generators with nonzero intersection, paired with the intersection
    /// number. Generators that coincide after canonicalization are merged.
    pub fn intersections(&self) -> Vec<(Generator, Rational)> {
        let n = self.space.n();
        let mut out: Vec<(Generator, Rational)> = Vec::new();
        let mut push = |gen: Generator, value: Rational| {
            if let Some(slot) = out.iter_mut().find(|(g, _)| *g == gen) {
                slot.1 += value;
            } else {
                out.push((gen, value));
            }
        };
        for j in self.set.complement(n).iter() {
            push(Generator::Psi(j), Rational::one());
            // δ_{i:S∪{j}} does not exist when the far side becomes unstable
            if let Ok(idx) = canonical_index(&self.space, self.i, self.set.with(j)) {
                push(Generator::Boundary(idx), Rational::one());
            }
        }
        push(Generator::Boundary(self.host()), Rational::from_int(-self.host_degree()));
        out.retain(|(_, v)| !v.is_zero());
        out
    }
}

/// Pairs a class with a test curve. Every generator met by the curve must
/// carry an exact coefficient.
pub fn intersect_test_curve(class: &DivisorClass, curve: &TestCurve) -> Result<Rational> {
    class.space().check_same(&curve.space)?;
    let mut total = Rational::zero();
    for (gen, mult) in curve.intersections() {
        match class.coefficient(&gen) {
            Coefficient::Exact(c) => total += &c * &mult,
            _ => return Err(Error::InsufficientInformation(gen.to_string())),
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m83() -> Space {
        Space::new(8, 3).unwrap()
    }

    fn set(labels: &[u32]) -> LabelSet {
        LabelSet::from_labels(labels).unwrap()
    }

    #[test]
    fn self_intersection_of_host_divisor() {
        let m = m83();
        let curve = TestCurve::new(m, 1, set(&[1])).unwrap();
        let mut c = DivisorClass::zero(m);
        c.set_boundary(curve.host(), 1);
        assert_eq!(intersect_test_curve(&c, &curve).unwrap(), -14);
    }

    #[test]
    fn lambda_pairs_to_zero() {
        let m = m83();
        let curve = TestCurve::new(m, 1, set(&[1])).unwrap();
        let mut c = DivisorClass::zero(m);
        c.set_lambda(1);
        assert_eq!(intersect_test_curve(&c, &curve).unwrap(), 0);
    }

    #[test]
    fn psi_and_neighbouring_boundary() {
        let m = m83();
        let curve = TestCurve::new(m, 1, set(&[1])).unwrap();
        let mut c = DivisorClass::zero(m);
        c.set_psi(1, 100).unwrap();
        c.set_psi(2, 1).unwrap();
        c.set_psi(3, 1).unwrap();
        assert_eq!(intersect_test_curve(&c, &curve).unwrap(), 2);
        let mut d = DivisorClass::zero(m);
        d.set_boundary(canonical_index(&m, 1, set(&[1, 2])).unwrap(), 1);
        assert_eq!(intersect_test_curve(&d, &curve).unwrap(), 1);
    }

    #[test]
    fn bound_on_a_met_generator_is_insufficient() {
        let m = m83();
        let curve = TestCurve::new(m, 1, set(&[1])).unwrap();
        let mut c = DivisorClass::zero(m);
        c.set_boundary(curve.host(), Coefficient::AtLeast(1.into()));
        assert!(matches!(
            intersect_test_curve(&c, &curve),
            Err(Error::InsufficientInformation(_))
        ));
        // a bound on a generator the curve misses is harmless
        let mut d = DivisorClass::zero(m);
        d.set_boundary(canonical_index(&m, 2, set(&[])).unwrap(), Coefficient::Unknown);
        assert_eq!(intersect_test_curve(&d, &curve).unwrap(), 0);
    }

    #[test]
    fn unstable_test_curve_is_rejected() {
        assert!(TestCurve::new(m83(), 0, set(&[1])).is_err());
        assert!(TestCurve::new(m83(), 9, set(&[])).is_err());
    }

    #[test]
    fn full_subset_drops_missing_neighbours() {
        // T_{0:{1,2}} on M(8,3): δ_{0:{1,2,3}} exists (genus 8 side keeps the node)
        let m = m83();
        let curve = TestCurve::new(m, 0, set(&[1, 2])).unwrap();
        assert_eq!(curve.intersections().len(), 3);
        // on M(0,4) the divisors δ_{0:{1,2,j}} would leave an unstable far side,
        // and the host pairs to zero
        let m04 = Space::new(0, 4).unwrap();
        let curve = TestCurve::new(m04, 0, set(&[1, 2])).unwrap();
        let boundary = curve
            .intersections()
            .into_iter()
            .filter(|(g, _)| matches!(g, Generator::Boundary(_)))
            .count();
        assert_eq!(boundary, 0);
    }
}
