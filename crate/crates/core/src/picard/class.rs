//! Divisor classes on marked and unmarked moduli spaces.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::coefficient::Coefficient;
use super::index::{require_canonical, BoundaryIndex, LabelSet, SizeClass, Space};
use crate::algebra::Rational;
use crate::error::{Error, Result};

/// A generator of the rational Picard group of a marked space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Lambda,
    Psi(u32),
    DeltaIrr,
    Boundary(BoundaryIndex),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Lambda => write!(f, "λ"),
            Generator::Psi(j) => write!(f, "ψ_{j}"),
            Generator::DeltaIrr => write!(f, "δ_irr"),
            Generator::Boundary(idx) => write!(f, "{idx}"),
        }
    }
}

/// A linear combination of `λ`, the `ψ_j`, `δ_irr` and the boundary
/// divisors `δ_{i:S}` on a marked space.
///
/// Boundary coefficients come from two layers. `profile` assigns one
/// coefficient to every canonical `δ_{i:S}` with a given `(i, |S|)`, which is
/// how label-symmetric classes stay small on spaces with many labels.
/// `boundary` holds per-index entries that override the profile. Missing
/// entries are exact zeros.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "ClassDoc", into = "ClassDoc")]
pub struct DivisorClass {
    space: Space,
    lambda: Coefficient,
    psi: BTreeMap<u32, Coefficient>,
    delta_irr: Coefficient,
    boundary: BTreeMap<BoundaryIndex, Coefficient>,
    profile: BTreeMap<SizeClass, Coefficient>,
}

impl DivisorClass {
    pub fn zero(space: Space) -> Self {
        DivisorClass {
            space,
            lambda: Coefficient::zero(),
            psi: BTreeMap::new(),
            delta_irr: Coefficient::zero(),
            boundary: BTreeMap::new(),
            profile: BTreeMap::new(),
        }
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn lambda(&self) -> &Coefficient {
        &self.lambda
    }

    pub fn delta_irr(&self) -> &Coefficient {
        &self.delta_irr
    }

    pub fn psi(&self, label: u32) -> Coefficient {
        self.psi.get(&label).cloned().unwrap_or_default()
    }

    pub fn profile(&self, class: SizeClass) -> Coefficient {
        self.profile.get(&class).cloned().unwrap_or_default()
    }

    pub fn boundary(&self, idx: &BoundaryIndex) -> Coefficient {
        match self.boundary.get(idx) {
            Some(c) => c.clone(),
            None => self.profile(idx.size_class()),
        }
    }

    pub fn coefficient(&self, generator: &Generator) -> Coefficient {
        match generator {
            Generator::Lambda => self.lambda.clone(),
            Generator::Psi(j) => self.psi(*j),
            Generator::DeltaIrr => self.delta_irr.clone(),
            Generator::Boundary(idx) => self.boundary(idx),
        }
    }

    pub fn explicit_boundary(&self) -> impl Iterator<Item = (&BoundaryIndex, &Coefficient)> {
        self.boundary.iter()
    }

    pub fn profile_entries(&self) -> impl Iterator<Item = (&SizeClass, &Coefficient)> {
        self.profile.iter()
    }

    /// The common `ψ` coefficient if all labels carry the same one.
    pub fn symmetric_psi(&self) -> Option<Coefficient> {
        let mut labels = self.space.labels();
        let first = match labels.next() {
            Some(l) => self.psi(l),
            None => return Some(Coefficient::zero()),
        };
        labels.all(|l| self.psi(l) == first).then_some(first)
    }

    pub fn set_lambda(&mut self, c: impl Into<Coefficient>) -> &mut Self {
        self.lambda = c.into();
        self
    }

    pub fn set_delta_irr(&mut self, c: impl Into<Coefficient>) -> &mut Self {
        self.delta_irr = c.into();
        self
    }

    pub fn set_psi(&mut self, label: u32, c: impl Into<Coefficient>) -> Result<&mut Self> {
        self.space.check_label(label)?;
        let c = c.into();
        if c.is_zero() {
            self.psi.remove(&label);
        } else {
            self.psi.insert(label, c);
        }
        Ok(self)
    }

    /// Sets every `ψ_j` to `c`.
    pub fn set_psi_all(&mut self, c: impl Into<Coefficient>) -> &mut Self {
        let c = c.into();
        self.psi.clear();
        if !c.is_zero() {
            for l in self.space.labels() {
                self.psi.insert(l, c.clone());
            }
        }
        self
    }

    pub fn set_boundary(&mut self, idx: BoundaryIndex, c: impl Into<Coefficient>) -> &mut Self {
        let c = c.into();
        if c == self.profile(idx.size_class()) {
            self.boundary.remove(&idx);
        } else {
            self.boundary.insert(idx, c);
        }
        self
    }

    /// Sets the coefficient of every `δ_{i:S}` with `|S| = s` and clears any
    /// per-index overrides in that class.
    pub fn set_profile(&mut self, class: SizeClass, c: impl Into<Coefficient>) -> Result<&mut Self> {
        if class.count(&self.space) == 0 {
            return Err(Error::UnstableIndex {
                g: self.space.g(),
                n: self.space.n(),
                i: class.i,
                subset: format!("|S|={}", class.s),
            });
        }
        let c = c.into();
        self.boundary.retain(|idx, _| idx.size_class() != class);
        if c.is_zero() {
            self.profile.remove(&class);
        } else {
            self.profile.insert(class, c);
        }
        Ok(self)
    }

    /// Sets the coefficient of every boundary divisor.
    pub fn set_all_boundary(&mut self, c: impl Into<Coefficient>) -> &mut Self {
        let c = c.into();
        self.boundary.clear();
        self.profile.clear();
        if !c.is_zero() {
            for class in self.space.size_classes() {
                self.profile.insert(class, c.clone());
            }
        }
        self
    }

    /// Generator-wise sum.
    pub fn add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.combine(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.combine(other, |a, b| a.sub(b))
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> DivisorClass {
        let mut out = DivisorClass::zero(self.space);
        out.lambda = self.lambda.scale(c);
        out.delta_irr = self.delta_irr.scale(c);
        out.psi = self.psi.iter().map(|(l, x)| (*l, x.scale(c))).collect();
        out.profile = self.profile.iter().map(|(k, x)| (*k, x.scale(c))).collect();
        out.boundary = self.boundary.iter().map(|(k, x)| (*k, x.scale(c))).collect();
        out.normalize();
        out
    }

    fn combine(
        &self,
        other: &DivisorClass,
        op: impl Fn(&Coefficient, &Coefficient) -> Coefficient,
    ) -> Result<DivisorClass> {
        self.space.check_same(&other.space)?;
        let mut out = DivisorClass::zero(self.space);
        out.lambda = op(&self.lambda, &other.lambda);
        out.delta_irr = op(&self.delta_irr, &other.delta_irr);
        for l in self.space.labels() {
            out.psi.insert(l, op(&self.psi(l), &other.psi(l)));
        }
        let classes: BTreeSet<SizeClass> =
            self.profile.keys().chain(other.profile.keys()).copied().collect();
        for class in classes {
            out.profile.insert(class, op(&self.profile(class), &other.profile(class)));
        }
        let keys: BTreeSet<BoundaryIndex> =
            self.boundary.keys().chain(other.boundary.keys()).copied().collect();
        for idx in keys {
            out.boundary.insert(idx, op(&self.boundary(&idx), &other.boundary(&idx)));
        }
        out.normalize();
        Ok(out)
    }

    fn normalize(&mut self) {
        self.psi.retain(|_, c| !c.is_zero());
        self.profile.retain(|_, c| !c.is_zero());
        let profile = &self.profile;
        self.boundary.retain(|idx, c| {
            let fallback = profile.get(&idx.size_class()).cloned().unwrap_or_default();
            *c != fallback
        });
    }

    /// Whether every coefficient (including boundary) is exact.
    pub fn is_fully_exact(&self) -> bool {
        self.lambda.is_exact()
            && self.delta_irr.is_exact()
            && self.psi.values().all(Coefficient::is_exact)
            && self.profile.values().all(Coefficient::is_exact)
            && self.boundary.values().all(Coefficient::is_exact)
    }

    /// Whether `λ`, all `ψ_j` and `δ_irr` are exact.
    pub fn is_interior_exact(&self) -> bool {
        self.lambda.is_exact() && self.delta_irr.is_exact() && self.psi.values().all(Coefficient::is_exact)
    }

    fn boundary_equal(&self, other: &DivisorClass) -> bool {
        let keys: BTreeSet<BoundaryIndex> =
            self.boundary.keys().chain(other.boundary.keys()).copied().collect();
        if keys.iter().any(|k| self.boundary(k) != other.boundary(k)) {
            return false;
        }
        let mut classes: BTreeSet<SizeClass> =
            self.profile.keys().chain(other.profile.keys()).copied().collect();
        classes.extend(keys.iter().map(BoundaryIndex::size_class));
        classes.into_iter().all(|class| {
            let covered = keys.iter().filter(|k| class.contains(k)).count() as u128;
            covered == class.count(&self.space) || self.profile(class) == other.profile(class)
        })
    }
}

impl PartialEq for DivisorClass {
    /// Equal iff the spaces agree and every generator has the same coefficient.
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space
            && self.lambda == other.lambda
            && self.delta_irr == other.delta_irr
            && self.space.labels().all(|l| self.psi(l) == other.psi(l))
            && self.boundary_equal(other)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(Coefficient, String)> = Vec::new();
        terms.push((self.lambda.clone(), "λ".into()));
        match self.symmetric_psi() {
            Some(c) => terms.push((c, "Σψ".into())),
            None => {
                for l in self.space.labels() {
                    terms.push((self.psi(l), format!("ψ_{l}")));
                }
            }
        }
        terms.push((self.delta_irr.clone(), "δ_irr".into()));
        for (class, c) in &self.profile {
            terms.push((c.clone(), class.to_string()));
        }
        for (idx, c) in &self.boundary {
            terms.push((c.clone(), idx.to_string()));
        }
        write_terms(f, &terms)
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(Coefficient, String)]) -> fmt::Result {
    let mut first = true;
    for (c, name) in terms {
        if c.is_zero() {
            continue;
        }
        let negative = matches!(c, Coefficient::Exact(v) if v.is_negative());
        match (first, negative) {
            (true, true) => write!(f, "-")?,
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
            (true, false) => {}
        }
        first = false;
        match c {
            Coefficient::Exact(v) if v.abs() == Rational::one() => write!(f, "{name}")?,
            Coefficient::Exact(v) => write!(f, "{}·{name}", v.abs())?,
            other => write!(f, "({other})·{name}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// A class on an unmarked space: `a·λ + Σ_i c_i·δ_i`, with `δ_0` the
/// irreducible boundary and `δ_i` (`1 <= i <= g/2`) the reducible ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "UnmarkedDoc", into = "UnmarkedDoc")]
pub struct UnmarkedClass {
    g: u32,
    lambda: Coefficient,
    delta: BTreeMap<u32, Coefficient>,
}

impl UnmarkedClass {
    pub fn new(g: u32) -> Result<Self> {
        Space::new(g, 0)?;
        Ok(UnmarkedClass {
            g,
            lambda: Coefficient::zero(),
            delta: BTreeMap::new(),
        })
    }

    pub fn genus(&self) -> u32 {
        self.g
    }

    pub fn lambda(&self) -> &Coefficient {
        &self.lambda
    }

    pub fn delta(&self, i: u32) -> Coefficient {
        self.delta.get(&i).cloned().unwrap_or_default()
    }

    pub fn set_lambda(&mut self, c: impl Into<Coefficient>) -> &mut Self {
        self.lambda = c.into();
        self
    }

    pub fn set_delta(&mut self, i: u32, c: impl Into<Coefficient>) -> Result<&mut Self> {
        if i > self.g / 2 {
            return Err(Error::OutOfRange(format!("δ_{i} on M({}) needs i <= {}", self.g, self.g / 2)));
        }
        let c = c.into();
        if c.is_zero() {
            self.delta.remove(&i);
        } else {
            self.delta.insert(i, c);
        }
        Ok(self)
    }

    /// Builds `a·λ + Σ c_i·δ_i` from exact integers.
    pub fn from_ints(g: u32, lambda: i64, delta: &[i64]) -> Result<Self> {
        let mut c = UnmarkedClass::new(g)?;
        c.set_lambda(lambda);
        for (i, &d) in delta.iter().enumerate() {
            c.set_delta(i as u32, d)?;
        }
        Ok(c)
    }
}

impl fmt::Display for UnmarkedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = vec![(self.lambda.clone(), "λ".to_string())];
        for i in 0..=self.g / 2 {
            terms.push((self.delta(i), format!("δ_{i}")));
        }
        write_terms(f, &terms)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BoundaryEntryDoc {
    i: u32,
    #[serde(rename = "S")]
    set: Vec<u32>,
    c: Coefficient,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SizeEntryDoc {
    i: u32,
    s: u32,
    c: Coefficient,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassDoc {
    space: Space,
    lambda: Coefficient,
    psi: BTreeMap<u32, Coefficient>,
    delta_irr: Coefficient,
    boundary: Vec<BoundaryEntryDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    boundary_by_size: Vec<SizeEntryDoc>,
}

impl From<DivisorClass> for ClassDoc {
    fn from(c: DivisorClass) -> Self {
        ClassDoc {
            space: c.space,
            lambda: c.lambda,
            psi: c.psi,
            delta_irr: c.delta_irr,
            boundary: c
                .boundary
                .into_iter()
                .map(|(idx, c)| BoundaryEntryDoc {
                    i: idx.genus(),
                    set: idx.set().to_vec(),
                    c,
                })
                .collect(),
            boundary_by_size: c
                .profile
                .into_iter()
                .map(|(k, c)| SizeEntryDoc { i: k.i, s: k.s, c })
                .collect(),
        }
    }
}

impl TryFrom<ClassDoc> for DivisorClass {
    type Error = Error;

    fn try_from(doc: ClassDoc) -> Result<Self> {
        let mut out = DivisorClass::zero(doc.space);
        out.lambda = doc.lambda;
        out.delta_irr = doc.delta_irr;
        for (l, c) in doc.psi {
            out.set_psi(l, c)?;
        }
        for e in doc.boundary_by_size {
            let class = SizeClass::new(e.i, e.s);
            if out.profile.contains_key(&class) {
                return Err(Error::Malformed(format!("duplicate size class ({}, {})", e.i, e.s)));
            }
            out.set_profile(class, e.c)?;
        }
        let mut seen = BTreeSet::new();
        for e in doc.boundary {
            let set = LabelSet::from_labels(&e.set)?;
            if set.len() as usize != e.set.len() {
                return Err(Error::Malformed(format!("repeated label in {:?}", e.set)));
            }
            let idx = require_canonical(&out.space, e.i, set)?;
            if !seen.insert(idx) {
                return Err(Error::Malformed(format!("duplicate boundary entry {idx}")));
            }
            out.set_boundary(idx, e.c);
        }
        out.normalize();
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct UnmarkedDoc {
    g: u32,
    lambda: Coefficient,
    delta: BTreeMap<u32, Coefficient>,
}

impl From<UnmarkedClass> for UnmarkedDoc {
    fn from(c: UnmarkedClass) -> Self {
        UnmarkedDoc {
            g: c.g,
            lambda: c.lambda,
            delta: c.delta,
        }
    }
}

impl TryFrom<UnmarkedDoc> for UnmarkedClass {
    type Error = Error;

    fn try_from(doc: UnmarkedDoc) -> Result<Self> {
        let mut out = UnmarkedClass::new(doc.g)?;
        out.lambda = doc.lambda;
        for (i, c) in doc.delta {
            out.set_delta(i, c)?;
        }
        Ok(out)
    }
}

/// Serializes a class to its canonical JSON document.
pub fn serialize(class: &DivisorClass) -> String {
    serde_json::to_string(class).expect("class serialization is infallible")
}

pub fn deserialize(json: &str) -> Result<DivisorClass> {
    serde_json::from_str(json).map_err(|e| Error::Malformed(e.to_string()))
}
