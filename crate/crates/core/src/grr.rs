//! First Chern classes of pushforwards along the universal curve
//! `π: M̄_{g,n+1} → M̄_{g,n}`, by Grothendieck–Riemann–Roch, and the
//! Porteous class of an equal-rank map between such pushforwards.
//!
//! Upstairs classes are combinations of `ψ = ψ_{n+1}`, the sections
//! `Δ_j = δ_{0:{j,n+1}}` and pullbacks `π*α`. The relative dualizing class is
//! `K = ψ - ΣΔ_j`. Degree-two products push forward by
//!
//! | product        | `π_*`                  |
//! |----------------|------------------------|
//! | `ψ·ψ`          | `κ₁ = 12λ - δ + Σψ_j`  |
//! | `ψ·Δ_j`        | `0`                    |
//! | `Δ_j·Δ_k`      | `0` for `j ≠ k`        |
//! | `Δ_j·Δ_j`      | `-ψ_j`                 |
//! | `ψ·π*α`        | `(2g - 2 + n)·α`       |
//! | `Δ_j·π*α`      | `α`                    |
//! | `π*α·π*β`      | `0`                    |
//!
//! where `δ` is the total boundary `δ_irr + Σ δ_{i:S}`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::picard::{Coefficient, DivisorClass, Space};

/// `δ_irr` plus every `δ_{i:S}`, each with coefficient one.
pub fn delta_total(space: Space) -> DivisorClass {
    let mut d = DivisorClass::zero(space);
    d.set_delta_irr(1).set_all_boundary(1);
    d
}

/// `κ₁ = 12λ - δ + Σψ_j`.
pub fn kappa1(space: Space) -> DivisorClass {
    let mut k = delta_total(space).scale(&Rational::from_int(-1));
    k.set_lambda(12).set_psi_all(1);
    k
}

fn lambda_class(space: Space) -> DivisorClass {
    let mut l = DivisorClass::zero(space);
    l.set_lambda(1);
    l
}

/// A divisor class on the universal curve over `space`:
/// `psi·ψ + Σ sections[j-1]·Δ_j + π*base`.
#[derive(Debug, Clone, PartialEq)]
pub struct UpstairsClass {
    pub psi: Rational,
    pub sections: Vec<Rational>,
    pub base: DivisorClass,
}

impl UpstairsClass {
    pub fn zero(space: Space) -> Self {
        UpstairsClass {
            psi: Rational::zero(),
            sections: vec![Rational::zero(); space.n() as usize],
            base: DivisorClass::zero(space),
        }
    }

    /// The relative dualizing class `ψ - ΣΔ_j`.
    pub fn relative_dualizing(space: Space) -> Self {
        let mut k = UpstairsClass::zero(space);
        k.psi = Rational::one();
        k.sections = vec![Rational::from_int(-1); space.n() as usize];
        k
    }

    pub fn space(&self) -> Space {
        self.base.space()
    }

    pub fn add(&self, other: &UpstairsClass) -> Result<UpstairsClass> {
        Ok(UpstairsClass {
            psi: &self.psi + &other.psi,
            sections: self.sections.iter().zip(&other.sections).map(|(a, b)| a + b).collect(),
            base: self.base.add(&other.base)?,
        })
    }

    pub fn scale(&self, c: &Rational) -> UpstairsClass {
        UpstairsClass {
            psi: &self.psi * c,
            sections: self.sections.iter().map(|a| a * c).collect(),
            base: self.base.scale(c),
        }
    }

    /// Degree on a fibre.
    pub fn fibre_degree(&self) -> Rational {
        let (g, n) = (self.space().g() as i64, self.space().n() as i64);
        &self.psi * Rational::from_int(2 * g - 2 + n) + self.sections.iter().sum::<Rational>()
    }
}

/// `π_*(A·B)`, bilinear in the table above.
pub fn push_product(a: &UpstairsClass, b: &UpstairsClass) -> Result<DivisorClass> {
    let space = a.space();
    space.check_same(&b.space())?;
    let (g, n) = (space.g() as i64, space.n() as i64);
    let mut out = kappa1(space).scale(&(&a.psi * &b.psi));
    let mut self_sections = DivisorClass::zero(space);
    for (j, (x, y)) in (1..).zip(a.sections.iter().zip(&b.sections)) {
        self_sections.set_psi(j, Coefficient::Exact(-(x * y)))?;
    }
    out = out.add(&self_sections)?;
    let psi_weight = Rational::from_int(2 * g - 2 + n);
    out = out.add(&b.base.scale(&(&a.psi * &psi_weight)))?;
    out = out.add(&a.base.scale(&(&b.psi * &psi_weight)))?;
    out = out.add(&b.base.scale(&a.sections.iter().sum::<Rational>()))?;
    out = out.add(&a.base.scale(&b.sections.iter().sum::<Rational>()))?;
    Ok(out)
}

/// A line bundle on the universal curve of the form `ω^a(Σ m_j σ_j)`, so
/// `c₁ = aK + Σ m_j Δ_j`. Labels without a twist have `m_j = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberwiseLineBundle {
    pub a: i64,
    pub twists: BTreeMap<u32, i64>,
}

impl FiberwiseLineBundle {
    /// The same twist `m` at every one of the `n` sections.
    pub fn uniform(a: i64, m: i64, n: u32) -> Self {
        FiberwiseLineBundle { a, twists: (1..=n).map(|j| (j, m)).collect() }
    }

    pub fn c1(&self, space: Space) -> Result<UpstairsClass> {
        let mut c = UpstairsClass::relative_dualizing(space).scale(&Rational::from_int(self.a));
        for (&j, &m) in &self.twists {
            space.check_label(j)?;
            c.sections[j as usize - 1] += Rational::from_int(m);
        }
        Ok(c)
    }
}

/// `c₁(π_*L) = λ + ½π_*(c₁(L)² - c₁(L)·K) + c₁(R¹π_*L)`.
///
/// The higher direct image is supplied by the caller: a zero class both when
/// `R¹π_*L = 0` and when it is the trivial line bundle.
pub fn c1_pushforward(
    space: Space,
    bundle: &FiberwiseLineBundle,
    r1_correction: &DivisorClass,
) -> Result<DivisorClass> {
    let l = bundle.c1(space)?;
    let k = UpstairsClass::relative_dualizing(space);
    let quadratic = push_product(&l, &l)?.sub(&push_product(&l, &k)?)?;
    lambda_class(space)
        .add(&quadratic.scale(&Rational::new(1, 2)))?
        .add(r1_correction)
}

/// Degeneracy class of `Sym² E → F` when both sides have the same rank:
/// `c₁(F) - (rank_E + 1)·c₁(E)`.
pub fn porteous_equal_rank(c1_e: &DivisorClass, rank_e: i64, c1_f: &DivisorClass) -> Result<DivisorClass> {
    if rank_e < 1 {
        return Err(Error::OutOfRange(format!("rank must be positive, got {rank_e}")));
    }
    c1_f.sub(&c1_e.scale(&Rational::from_int(rank_e + 1)))
}

/// The multiplication map `Sym² π_*ω(-Σσ) → π_*ω²(-2Σσ)` on `space`.
///
/// With general points `E` has rank `g - n` and `R¹ ≅ 𝒪`; `F` has rank
/// `3g - 3 - 2n` and no `R¹`. The ranks of `Sym² E` and `F` must agree.
pub fn quadric_degeneracy(space: Space) -> Result<DivisorClass> {
    let (g, n) = (space.g() as i64, space.n() as i64);
    let rank_e = g - n;
    let rank_f = 3 * g - 3 - 2 * n;
    if rank_e < 1 || rank_e * (rank_e + 1) / 2 != rank_f {
        return Err(Error::OutOfRange(format!(
            "Sym² of a rank-{rank_e} bundle cannot match rank {rank_f} on {space}"
        )));
    }
    let no_correction = DivisorClass::zero(space);
    let c1_e = c1_pushforward(space, &FiberwiseLineBundle::uniform(1, -1, space.n()), &no_correction)?;
    let c1_f = c1_pushforward(space, &FiberwiseLineBundle::uniform(2, -2, space.n()), &no_correction)?;
    porteous_equal_rank(&c1_e, rank_e, &c1_f)
}
