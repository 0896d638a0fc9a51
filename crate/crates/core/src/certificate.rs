//! General-type certificates: writing the canonical class as
//! `K = a·Σψ + Σ c_k·D_k + E` with `a > 0`, `c_k >= 0`, known effective
//! `D_k`, and a residual `E` that vanishes on `λ`, every `ψ_j` and `δ_irr`.

use serde::Serialize;

use crate::algebra::{LinearSystem, Rational, Solution};
use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::picard::{Coefficient, DivisorClass, Generator, SizeClass, Space};
use crate::pullback::{averaged_quad_16_8, averaged_quad_17_8};
use crate::report::Check;

/// `K = 13λ - 2δ_irr + Σψ_j - 2Σ_{|S|>=2} δ_{0:S} - 3Σ δ_{1:S} - 2Σ_{i>=2} δ_{i:S}`.
pub fn canonical_class(g: u32, n: u32) -> Result<DivisorClass> {
    let space = Space::new(g, n)?;
    let mut k = DivisorClass::zero(space);
    k.set_lambda(13).set_delta_irr(-2).set_psi_all(1);
    for size in space.size_classes() {
        let c = if size.i == 1 { -3 } else { -2 };
        k.set_profile(size, c)?;
    }
    Ok(k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ResidualStatus {
    #[serde(rename = "zero")]
    Zero,
    #[serde(rename = "nonnegative-proven")]
    Nonnegative,
    #[serde(rename = "negative")]
    Negative,
    #[serde(rename = "unknown")]
    Unknown,
}

impl ResidualStatus {
    fn of(c: &Coefficient) -> Self {
        if c.is_zero() {
            ResidualStatus::Zero
        } else if c.is_provably_nonnegative() {
            ResidualStatus::Nonnegative
        } else if c.is_provably_negative() {
            ResidualStatus::Negative
        } else {
            ResidualStatus::Unknown
        }
    }
}

/// The status of the residual on all `δ_{i:S}` with `|S| = s`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundaryResidual {
    pub index: SizeClass,
    pub count: String,
    pub status: ResidualStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualReport {
    pub lambda: Rational,
    pub psi: Rational,
    pub delta_irr: Rational,
    pub boundary: Vec<BoundaryResidual>,
}

impl ResidualReport {
    /// True when no boundary class is known to be negative.
    pub fn has_no_negative(&self) -> bool {
        self.boundary.iter().all(|b| b.status != ResidualStatus::Negative)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Component {
    pub name: String,
    pub c: Rational,
}

#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub space: Space,
    pub a: Rational,
    pub components: Vec<Component>,
    pub residual: ResidualReport,
    #[serde(skip)]
    pub residual_class: DivisorClass,
}

fn exact(c: &Coefficient, what: &str) -> Result<Rational> {
    c.as_exact()
        .cloned()
        .ok_or_else(|| Error::InsufficientInformation(what.to_string()))
}

/// The common `ψ` coefficient, or an error naming the first mismatch.
fn symmetric_psi(class: &DivisorClass, name: &str) -> Result<Rational> {
    let first = exact(&class.psi(1), &format!("ψ_1 of {name}"))?;
    for l in class.space().labels() {
        if class.psi(l) != Coefficient::Exact(first.clone()) {
            return Err(Error::AsymmetricPsi(format!("{name}: ψ_{l} differs from ψ_1")));
        }
    }
    Ok(first)
}

/// Solves `K - a·Σψ - Σ c_k·D_k = E` with `E` vanishing on `λ`, `ψ` and
/// `δ_irr`. The three equations determine `a` and two components exactly.
pub fn solve_certificate(space: Space, components: &[(String, DivisorClass)]) -> Result<Certificate> {
    if space.n() == 0 {
        return Err(Error::OutOfRange("a certificate needs at least one marked point".into()));
    }
    let k = canonical_class(space.g(), space.n())?;
    let mut columns = vec![[Rational::zero(), Rational::one(), Rational::zero()]];
    for (name, d) in components {
        d.space().check_same(&space)?;
        columns.push([
            exact(d.lambda(), &format!("λ of {name}"))?,
            symmetric_psi(d, name)?,
            exact(d.delta_irr(), &format!("δ_irr of {name}"))?,
        ]);
    }
    let rhs = vec![
        exact(k.lambda(), "λ of K")?,
        symmetric_psi(&k, "K")?,
        exact(k.delta_irr(), "δ_irr of K")?,
    ];
    let matrix = (0..3).map(|r| columns.iter().map(|col| col[r].clone()).collect()).collect();
    let x = match LinearSystem::new(matrix, rhs)?.solve() {
        Solution::Unique(x) => x,
        Solution::Underdetermined => return Err(Error::Underdetermined),
        Solution::Infeasible => return Err(Error::Infeasible),
    };
    if !x[0].is_positive() {
        return Err(Error::NegativeCoefficient(format!("a = {}", x[0])));
    }
    for ((name, _), c) in components.iter().zip(&x[1..]) {
        if c.is_negative() {
            return Err(Error::NegativeCoefficient(format!("{name}: {c}")));
        }
    }

    let mut psi = DivisorClass::zero(space);
    psi.set_psi_all(1);
    let mut residual = k.sub(&psi.scale(&x[0]))?;
    for ((_, d), c) in components.iter().zip(&x[1..]) {
        residual = residual.sub(&d.scale(c))?;
    }
    let report = ResidualReport {
        lambda: exact(residual.lambda(), "λ of E")?,
        psi: symmetric_psi(&residual, "E")?,
        delta_irr: exact(residual.delta_irr(), "δ_irr of E")?,
        boundary: boundary_report(&residual),
    };
    if !(report.lambda.is_zero() && report.psi.is_zero() && report.delta_irr.is_zero()) {
        return Err(Error::Infeasible);
    }
    Ok(Certificate {
        space,
        a: x[0].clone(),
        components: components
            .iter()
            .zip(&x[1..])
            .map(|((name, _), c)| Component { name: name.clone(), c: c.clone() })
            .collect(),
        residual: report,
        residual_class: residual,
    })
}

/// One row per size class. A size class with per-index overrides is
/// reported with the weakest status among its members.
fn boundary_report(residual: &DivisorClass) -> Vec<BoundaryResidual> {
    let space = residual.space();
    let overrides: Vec<_> = residual.explicit_boundary().map(|(k, v)| (*k, v.clone())).collect();
    space
        .size_classes()
        .into_iter()
        .map(|size| {
            let base = residual.profile(size);
            let mine: Vec<&Coefficient> =
                overrides.iter().filter(|(k, _)| size.contains(k)).map(|(_, v)| v).collect();
            let uniform = mine.iter().all(|c| **c == base);
            let status = if uniform {
                ResidualStatus::of(&base)
            } else {
                let base_used = (mine.len() as u128) < size.count(&space);
                let statuses: Vec<ResidualStatus> = base_used
                    .then_some(&base)
                    .into_iter()
                    .chain(mine.iter().copied())
                    .map(ResidualStatus::of)
                    .collect();
                weakest(&statuses)
            };
            BoundaryResidual {
                index: size,
                count: size.count(&space).to_string(),
                status,
                value: if uniform { base.as_exact().cloned() } else { None },
            }
        })
        .collect()
}

fn weakest(statuses: &[ResidualStatus]) -> ResidualStatus {
    use ResidualStatus::*;
    if statuses.contains(&Negative) {
        Negative
    } else if statuses.contains(&Unknown) {
        Unknown
    } else if statuses.iter().all(|s| *s == Zero) {
        Zero
    } else {
        Nonnegative
    }
}

/// The components used for each space with a known certificate.
pub fn recipe(g: u32, n: u32, catalog: &Catalog) -> Result<Vec<(String, DivisorClass)>> {
    let space = Space::new(g, n)?;
    let from_catalog = |name: &str| -> Result<(String, DivisorClass)> {
        Ok((name.to_string(), catalog.get(name)?.on_space(space)?))
    };
    match (g, n) {
        (16, 8) => Ok(vec![("D_16_8".to_string(), averaged_quad_16_8()?), from_catalog("Z16")?]),
        (17, 8) => Ok(vec![("D_17_8".to_string(), averaged_quad_17_8()?), from_catalog("BN17")?]),
        (12, 10) => Ok(vec![from_catalog("D12")?, from_catalog("F12_10")?]),
        _ => Err(Error::NoRecipe { g, n }),
    }
}

pub fn certify(g: u32, n: u32, catalog: &Catalog) -> Result<Certificate> {
    solve_certificate(Space::new(g, n)?, &recipe(g, n, catalog)?)
}

fn shifted(class: &DivisorClass, generator: &str) -> Result<DivisorClass> {
    let mut out = class.clone();
    let bump = |c: &Coefficient| c.add(&Coefficient::exact(1));
    match generator {
        "lambda" => {
            out.set_lambda(bump(class.lambda()));
        }
        "delta_irr" => {
            out.set_delta_irr(bump(class.delta_irr()));
        }
        "psi" => {
            for l in class.space().labels() {
                out.set_psi(l, bump(&class.psi(l)))?;
            }
        }
        "psi_1" => {
            out.set_psi(1, bump(&class.psi(1)))?;
        }
        other => return Err(Error::UnknownGenerator(other.to_string())),
    }
    Ok(out)
}

/// Raises one interior coefficient of one component by 1 and re-solves. A
/// sound solver must then return a different solution or fail.
pub fn perturbation_checks(space: Space, components: &[(String, DivisorClass)]) -> Result<Vec<Check>> {
    let base = solve_certificate(space, components)?;
    let solution = |c: &Certificate| {
        std::iter::once(c.a.to_string())
            .chain(c.components.iter().map(|x| x.c.to_string()))
            .collect::<Vec<_>>()
            .join(", ")
    };
    let original = solution(&base);
    let mut out = Vec::new();
    for (idx, (name, class)) in components.iter().enumerate() {
        for generator in ["lambda", "psi", "delta_irr", "psi_1"] {
            let mut perturbed = components.to_vec();
            perturbed[idx].1 = shifted(class, generator)?;
            let outcome = match solve_certificate(space, &perturbed) {
                Ok(c) => solution(&c),
                Err(e) => format!("error: {e}"),
            };
            let pass = outcome != original;
            out.push(
                Check::new("perturbation")
                    .input("space", space.to_string())
                    .input("component", name.as_str())
                    .input("generator", generator)
                    .values(outcome, original.clone(), pass),
            );
        }
    }
    Ok(out)
}

/// Whether a generator's residual coefficient is exactly zero.
pub fn residual_vanishes(cert: &Certificate, generator: &Generator) -> bool {
    cert.residual_class.coefficient(generator).is_zero()
}
