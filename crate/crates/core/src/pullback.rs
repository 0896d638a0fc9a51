//! Pullbacks along forgetful and clutching maps, averaging over marked
//! points, and the reduction of relations on `M̄_{1,2}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{Poly, Rational};
use crate::error::{Error, Result};
use crate::picard::{canonical_index, BoundaryIndex, Coefficient, DivisorClass, LabelSet, Space, UnmarkedClass};
use crate::quad::quad_class;

/// Pullback along the map `M̄_{g,n} → M̄_g` forgetting every marked point.
///
/// `λ` and `δ_irr` pull back to themselves and `δ_i` to the sum of all
/// `δ_{i:S}`. Divisors `δ_{0:S}` are contracted and get coefficient zero.
pub fn forgetful_pullback(class: &UnmarkedClass, n: u32) -> Result<DivisorClass> {
    let space = Space::new(class.genus(), n)?;
    let mut out = DivisorClass::zero(space);
    out.set_lambda(class.lambda().clone()).set_delta_irr(class.delta(0));
    for size in space.size_classes() {
        if size.i >= 1 {
            out.set_profile(size, class.delta(size.i))?;
        }
    }
    Ok(out)
}

/// A fixed general curve of genus `genus` carrying the target labels
/// `labels`, glued at the source label `at`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailAttachment {
    pub at: u32,
    pub genus: u32,
    pub labels: Vec<u32>,
}

/// A clutching map `M̄_{g',n'} → M̄_{g,n}` gluing fixed tails onto some of
/// the source points. The other source points keep their role under
/// `label_map`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MapDoc", into = "MapDoc")]
pub struct ClutchingMap {
    source: Space,
    target: Space,
    label_map: BTreeMap<u32, u32>,
    tails: Vec<TailAttachment>,
}

#[derive(Serialize, Deserialize)]
struct MapDoc {
    source: Space,
    target: Space,
    label_map: Vec<(u32, u32)>,
    tails: Vec<TailAttachment>,
}

impl From<ClutchingMap> for MapDoc {
    fn from(m: ClutchingMap) -> Self {
        MapDoc {
            source: m.source,
            target: m.target,
            label_map: m.label_map.into_iter().collect(),
            tails: m.tails,
        }
    }
}

impl TryFrom<MapDoc> for ClutchingMap {
    type Error = Error;
    fn try_from(doc: MapDoc) -> Result<Self> {
        let mut label_map = BTreeMap::new();
        for (src, tgt) in doc.label_map {
            if label_map.insert(src, tgt).is_some() {
                return Err(Error::MalformedMap(format!("source label {src} mapped twice")));
            }
        }
        ClutchingMap::new(doc.source, doc.target, label_map, doc.tails)
    }
}

impl ClutchingMap {
    /// Checks that source labels split into retained points and attachment
    /// points, that target labels are covered exactly once, that genera add
    /// up and that every tail is stable.
    pub fn new(
        source: Space,
        target: Space,
        label_map: BTreeMap<u32, u32>,
        tails: Vec<TailAttachment>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::MalformedMap(msg));
        let mut source_seen = BTreeSet::new();
        let mut target_seen = BTreeSet::new();
        for (&src, &tgt) in &label_map {
            source_seen.insert(src);
            if !target_seen.insert(tgt) {
                return bad(format!("target label {tgt} hit twice"));
            }
        }
        let mut genus = source.g();
        for tail in &tails {
            if !source_seen.insert(tail.at) {
                return bad(format!("source label {} used twice", tail.at));
            }
            if 2 * tail.genus + tail.labels.len() as u32 + 1 < 3 {
                return bad(format!("tail at {} is unstable", tail.at));
            }
            for &l in &tail.labels {
                if !target_seen.insert(l) {
                    return bad(format!("target label {l} hit twice"));
                }
            }
            genus += tail.genus;
        }
        if source_seen != source.labels().collect() {
            return bad(format!("source labels must be exactly 1..={}", source.n()));
        }
        if target_seen != target.labels().collect() {
            return bad(format!("target labels must be exactly 1..={}", target.n()));
        }
        if genus != target.g() {
            return bad(format!("genera add up to {genus}, target has {}", target.g()));
        }
        Ok(ClutchingMap { source, target, label_map, tails })
    }

    /// Attaches a tail of genus `hi` with `ki` labels at source point `i` and
    /// one of genus `hj` with `kj` labels at `j`. The remaining source points
    /// become target labels `1, 2, ...` in order, followed by the labels of
    /// the tail at `i` and then those of the tail at `j`.
    pub fn two_tails(source: Space, i: u32, (hi, ki): (u32, u32), j: u32, (hj, kj): (u32, u32)) -> Result<Self> {
        source.check_label(i)?;
        source.check_label(j)?;
        if i == j {
            return Err(Error::MalformedMap("tails must sit at distinct points".into()));
        }
        let retained: Vec<u32> = source.labels().filter(|&l| l != i && l != j).collect();
        let mut next = retained.len() as u32 + 1;
        let label_map = retained.iter().zip(1..).map(|(&s, t)| (s, t)).collect();
        let mut take = |k: u32| {
            let labels: Vec<u32> = (next..next + k).collect();
            next += k;
            labels
        };
        let tails = vec![
            TailAttachment { at: i, genus: hi, labels: take(ki) },
            TailAttachment { at: j, genus: hj, labels: take(kj) },
        ];
        let target = Space::new(source.g() + hi + hj, next - 1)?;
        ClutchingMap::new(source, target, label_map, tails)
    }

    pub fn source(&self) -> Space {
        self.source
    }

    pub fn target(&self) -> Space {
        self.target
    }

    pub fn tails(&self) -> &[TailAttachment] {
        &self.tails
    }

    pub fn label_map(&self) -> &BTreeMap<u32, u32> {
        &self.label_map
    }

    /// The target boundary divisor cut out by each tail.
    pub fn tail_divisors(&self) -> Result<Vec<BoundaryIndex>> {
        self.tails
            .iter()
            .map(|tail| canonical_index(&self.target, tail.genus, LabelSet::from_labels(&tail.labels)?))
            .collect()
    }
}

impl fmt::Display for ClutchingMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.source, self.target)?;
        for tail in &self.tails {
            let labels: Vec<String> = tail.labels.iter().map(u32::to_string).collect();
            write!(f, ", genus-{} tail {{{}}} at {}", tail.genus, labels.join(","), tail.at)?;
        }
        Ok(())
    }
}

/// Whether every boundary coefficient off `allowed` is an exact zero.
fn boundary_supported_on(class: &DivisorClass, allowed: &[BoundaryIndex]) -> bool {
    let explicit: BTreeMap<BoundaryIndex, Coefficient> =
        class.explicit_boundary().map(|(k, v)| (*k, v.clone())).collect();
    if explicit.iter().any(|(k, v)| !v.is_zero() && !allowed.contains(k)) {
        return false;
    }
    let space = class.space();
    class.profile_entries().all(|(size, c)| {
        if c.is_zero() {
            return true;
        }
        let overridden = explicit.keys().filter(|k| size.contains(k)).count() as u128;
        let allowed_default = allowed
            .iter()
            .filter(|k| size.contains(k) && !explicit.contains_key(k))
            .count() as u128;
        size.count(&space) == overridden + allowed_default
    })
}

/// Pullback along a clutching map.
///
/// `λ`, `δ_irr` and the retained `ψ` keep their coefficients. Points on a
/// fixed tail contribute nothing, and the attachment point `ℓ` of a tail
/// cutting out `δ_{h:T}` gets `-coef(δ_{h:T})` from the normal bundle.
/// Source boundary coefficients are exact zeros when the class has no
/// boundary support away from the tail divisors, and `Unknown` otherwise.
pub fn clutch_pullback(class: &DivisorClass, map: &ClutchingMap) -> Result<DivisorClass> {
    class.space().check_same(&map.target)?;
    let mut out = DivisorClass::zero(map.source);
    out.set_lambda(class.lambda().clone()).set_delta_irr(class.delta_irr().clone());
    for (&src, &tgt) in &map.label_map {
        out.set_psi(src, class.psi(tgt))?;
    }
    let tail_divisors = map.tail_divisors()?;
    for (tail, idx) in map.tails.iter().zip(&tail_divisors) {
        out.set_psi(tail.at, class.boundary(idx).scale(&Rational::from_int(-1)))?;
    }
    if !boundary_supported_on(class, &tail_divisors) {
        out.set_all_boundary(Coefficient::Unknown);
    }
    Ok(out)
}

/// `normalization / (n(n-1))` times the sum of the pullbacks along
/// [`ClutchingMap::two_tails`] over all ordered pairs `i ≠ j` of source
/// points. The result is symmetric in the source labels.
pub fn average_over_pairs(
    class: &DivisorClass,
    source: Space,
    tail_i: (u32, u32),
    tail_j: (u32, u32),
    normalization: &Rational,
) -> Result<DivisorClass> {
    let mut total: Option<DivisorClass> = None;
    let mut pairs = 0i64;
    for i in source.labels() {
        for j in source.labels().filter(|&j| j != i) {
            let map = ClutchingMap::two_tails(source, i, tail_i, j, tail_j)?;
            let pulled = clutch_pullback(class, &map)?;
            total = Some(match total {
                Some(acc) => acc.add(&pulled)?,
                None => pulled,
            });
            pairs += 1;
        }
    }
    let total = total.ok_or(Error::EmptyFamily)?;
    Ok(total.scale(&(normalization * &Rational::new(1, pairs))))
}

/// Normalization making the averaged class on `M̄_{16,8}` integral.
pub const NORMALIZATION_16_8: i64 = 8;
/// Normalization making the averaged class on `M̄_{17,8}` integral.
pub const NORMALIZATION_17_8: i64 = 4;

/// The symmetric class on `M̄_{16,8}` obtained from the `t = 3` member by
/// gluing an elliptic tail with two points and a rational tail with two
/// points: `40λ + 37Σψ - 8δ_irr` on the interior.
pub fn averaged_quad_16_8() -> Result<DivisorClass> {
    average_over_pairs(
        &quad_class(3)?,
        Space::new(16, 8)?,
        (1, 2),
        (0, 2),
        &NORMALIZATION_16_8.into(),
    )
}

/// The symmetric class on `M̄_{17,8}` obtained from the `t = 3` member by
/// gluing two rational tails with two points each: `20λ + 19Σψ - 4δ_irr`.
pub fn averaged_quad_17_8() -> Result<DivisorClass> {
    average_over_pairs(
        &quad_class(3)?,
        Space::new(17, 8)?,
        (0, 2),
        (0, 2),
        &NORMALIZATION_17_8.into(),
    )
}

/// The Brill–Noether divisor `8λ - δ_0 - 4δ_1 - 6δ_2` on `M̄_5`.
pub fn brill_noether_5() -> UnmarkedClass {
    UnmarkedClass::from_ints(5, 8, &[-1, -4, -6]).expect("valid genus-5 class")
}

/// Named pullback computations exposed to the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// Brill–Noether on `M̄_5` pulled back to `M̄_{5,1}`.
    Bn5To51,
    /// The `t = 3` member pulled back to `M̄_{16,8}`.
    Quad3To168,
    /// The `t = 3` member pulled back to `M̄_{17,8}`.
    Quad3To178,
}

impl Preset {
    pub const ALL: [Preset; 3] = [Preset::Bn5To51, Preset::Quad3To168, Preset::Quad3To178];

    pub fn name(&self) -> &'static str {
        match self {
            Preset::Bn5To51 => "bn5-to-51",
            Preset::Quad3To168 => "quad3-to-168",
            Preset::Quad3To178 => "quad3-to-178",
        }
    }
}

impl FromStr for Preset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::MalformedMap(format!("unknown preset {s}")))
    }
}

/// The outcome of a preset: the pullback along one representative map and,
/// for clutching presets, the normalized average over all point pairs.
#[derive(Debug, Clone, Serialize)]
pub struct PresetResult {
    pub preset: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<ClutchingMap>,
    pub pullback: DivisorClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub averaged: Option<DivisorClass>,
}

pub fn run_preset(preset: Preset) -> Result<PresetResult> {
    let clutched = |source: Space, tail_i, tail_j, averaged: DivisorClass| -> Result<PresetResult> {
        let map = ClutchingMap::two_tails(source, 1, tail_i, 2, tail_j)?;
        let pullback = clutch_pullback(&quad_class(3)?, &map)?;
        Ok(PresetResult { preset: preset.name(), map: Some(map), pullback, averaged: Some(averaged) })
    };
    match preset {
        Preset::Bn5To51 => Ok(PresetResult {
            preset: preset.name(),
            map: None,
            pullback: forgetful_pullback(&brill_noether_5(), 1)?,
            averaged: None,
        }),
        Preset::Quad3To168 => clutched(Space::new(16, 8)?, (1, 2), (0, 2), averaged_quad_16_8()?),
        Preset::Quad3To178 => clutched(Space::new(17, 8)?, (0, 2), (0, 2), averaged_quad_17_8()?),
    }
}

/// Generators of `Pic(M̄_{1,2}) ⊗ Q` before reduction. The two points are
/// `p` and `q`; `Delta0` is the divisor where they bubble off together.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Pic12Generator {
    Lambda,
    PsiP,
    PsiQ,
    DeltaIrr,
    Delta0,
}

impl FromStr for Pic12Generator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "lambda" => Pic12Generator::Lambda,
            "psi_p" => Pic12Generator::PsiP,
            "psi_q" => Pic12Generator::PsiQ,
            "delta_irr" => Pic12Generator::DeltaIrr,
            "delta_0" => Pic12Generator::Delta0,
            _ => return Err(Error::UnknownGenerator(s.to_string())),
        })
    }
}

/// A combination of the `M̄_{1,2}` generators with polynomial coefficients.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Pic12Expr {
    terms: BTreeMap<Pic12Generator, Poly>,
}

impl Pic12Expr {
    pub fn set(&mut self, generator: Pic12Generator, coeff: Poly) -> &mut Self {
        self.terms.insert(generator, coeff);
        self
    }

    pub fn get(&self, generator: Pic12Generator) -> Poly {
        self.terms.get(&generator).cloned().unwrap_or_else(Poly::zero)
    }

    /// Builds an expression from generator names such as `"psi_p"`.
    pub fn from_named(terms: &[(&str, Poly)]) -> Result<Self> {
        let mut expr = Pic12Expr::default();
        for (name, coeff) in terms {
            let generator = name.parse()?;
            let sum = expr.get(generator) + coeff;
            expr.set(generator, sum);
        }
        Ok(expr)
    }
}

/// Rewrites an expression in the basis `{λ, δ_{0:{p,q}}}` using
/// `δ_irr = 12λ` and `ψ_p = ψ_q = λ + δ_{0:{p,q}}`. Returns the two
/// coordinates.
pub fn pic12_reduce(expr: &Pic12Expr) -> (Poly, Poly) {
    use Pic12Generator::*;
    let psi = expr.get(PsiP) + expr.get(PsiQ);
    let lambda = expr.get(Lambda) + Poly::constant(12) * expr.get(DeltaIrr) + &psi;
    let delta = expr.get(Delta0) + psi;
    (lambda, delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::SizeClass;

    #[test]
    fn brill_noether_pullback_to_one_point() {
        let pulled = forgetful_pullback(&brill_noether_5(), 1).unwrap();
        assert_eq!(pulled.lambda(), &Coefficient::exact(8));
        assert_eq!(pulled.delta_irr(), &Coefficient::exact(-1));
        assert_eq!(pulled.psi(1), Coefficient::zero());
        assert_eq!(pulled.profile(SizeClass::new(1, 0)), Coefficient::exact(-4));
        assert_eq!(pulled.profile(SizeClass::new(1, 1)), Coefficient::exact(-4));
        assert_eq!(pulled.profile(SizeClass::new(2, 0)), Coefficient::exact(-6));
        assert_eq!(pulled.profile(SizeClass::new(2, 1)), Coefficient::exact(-6));
        assert_eq!(pulled, quad_class(0).unwrap());
    }

    #[test]
    fn forgetful_pullback_leaves_rational_tails_out() {
        let pulled = forgetful_pullback(&brill_noether_5(), 3).unwrap();
        assert_eq!(pulled.profile(SizeClass::new(0, 2)), Coefficient::zero());
        assert_eq!(pulled.profile(SizeClass::new(2, 3)), Coefficient::exact(-6));
    }

    #[test]
    fn two_tail_map_shape() {
        let map = ClutchingMap::two_tails(Space::new(16, 8).unwrap(), 3, (1, 2), 5, (0, 2)).unwrap();
        assert_eq!(map.target(), Space::new(17, 10).unwrap());
        assert_eq!(map.label_map()[&1], 1);
        assert_eq!(map.label_map()[&4], 3);
        assert_eq!(map.label_map()[&8], 6);
        assert_eq!(map.tails()[0].labels, vec![7, 8]);
        assert_eq!(map.tails()[1].labels, vec![9, 10]);
    }

    #[test]
    fn malformed_maps_are_rejected() {
        let src = Space::new(2, 2).unwrap();
        let tgt = Space::new(2, 3).unwrap();
        let unstable = vec![TailAttachment { at: 2, genus: 0, labels: vec![2] }];
        let lm: BTreeMap<u32, u32> = [(1, 1)].into();
        assert!(matches!(ClutchingMap::new(src, tgt, lm.clone(), unstable), Err(Error::MalformedMap(_))));
        let short = vec![TailAttachment { at: 2, genus: 0, labels: vec![2, 3] }];
        assert!(ClutchingMap::new(src, tgt, lm.clone(), short.clone()).is_ok());
        let wrong_genus = Space::new(3, 3).unwrap();
        assert!(ClutchingMap::new(src, wrong_genus, lm, short).is_err());
        let json = r#"{"source":{"g":2,"n":2},"target":{"g":2,"n":3},"label_map":[[1,1],[1,2]],"tails":[]}"#;
        assert!(serde_json::from_str::<ClutchingMap>(json).is_err());
    }

    #[test]
    fn map_json_round_trip() {
        let map = ClutchingMap::two_tails(Space::new(17, 8).unwrap(), 1, (0, 2), 2, (0, 2)).unwrap();
        let json = serde_json::to_string(&map).unwrap();
        assert_eq!(serde_json::from_str::<ClutchingMap>(&json).unwrap(), map);
    }

    #[test]
    fn clutched_quad_interior() {
        let q3 = quad_class(3).unwrap();
        let map = ClutchingMap::two_tails(Space::new(16, 8).unwrap(), 1, (1, 2), 2, (0, 2)).unwrap();
        let pulled = clutch_pullback(&q3, &map).unwrap();
        assert_eq!(pulled.lambda(), &Coefficient::exact(5));
        assert_eq!(pulled.psi(1), Coefficient::exact(9));
        assert_eq!(pulled.psi(2), Coefficient::exact(10));
        assert_eq!(pulled.psi(3), Coefficient::exact(3));
        assert_eq!(pulled.delta_irr(), &Coefficient::exact(-1));
        assert_eq!(pulled.profile(SizeClass::new(0, 2)), Coefficient::Unknown);

        let map = ClutchingMap::two_tails(Space::new(17, 8).unwrap(), 1, (0, 2), 2, (0, 2)).unwrap();
        let pulled = clutch_pullback(&q3, &map).unwrap();
        assert_eq!(pulled.psi(1), Coefficient::exact(10));
        assert_eq!(pulled.psi(2), Coefficient::exact(10));
    }

    #[test]
    fn tail_only_boundary_gives_exact_source_boundary() {
        let target = Space::new(3, 4).unwrap();
        let map = ClutchingMap::two_tails(Space::new(3, 2).unwrap(), 1, (0, 2), 2, (0, 2)).unwrap();
        let mut class = DivisorClass::zero(target);
        class.set_lambda(1);
        for idx in map.tail_divisors().unwrap() {
            class.set_boundary(idx, -5);
        }
        let pulled = clutch_pullback(&class, &map).unwrap();
        assert_eq!(pulled.psi(1), Coefficient::exact(5));
        assert!(pulled.is_fully_exact());
        // a whole size class carrying the coefficient reaches past the tails
        let mut wide = DivisorClass::zero(target);
        wide.set_profile(SizeClass::new(0, 2), -5).unwrap();
        assert!(!clutch_pullback(&wide, &map).unwrap().is_fully_exact());
    }

    #[test]
    fn averaged_classes() {
        let d16 = averaged_quad_16_8().unwrap();
        assert_eq!(d16.lambda(), &Coefficient::exact(40));
        assert_eq!(d16.symmetric_psi(), Some(Coefficient::exact(37)));
        assert_eq!(d16.delta_irr(), &Coefficient::exact(-8));
        let d17 = averaged_quad_17_8().unwrap();
        assert_eq!(d17.lambda(), &Coefficient::exact(20));
        assert_eq!(d17.symmetric_psi(), Some(Coefficient::exact(19)));
        assert_eq!(d17.delta_irr(), &Coefficient::exact(-4));
    }

    #[test]
    fn presets_parse_and_run() {
        assert_eq!("bn5-to-51".parse::<Preset>().unwrap(), Preset::Bn5To51);
        assert!("nope".parse::<Preset>().is_err());
        let r = run_preset(Preset::Quad3To178).unwrap();
        assert_eq!(r.averaged.unwrap().symmetric_psi(), Some(Coefficient::exact(19)));
    }

    #[test]
    fn pic12_reduction() {
        let expr = Pic12Expr::from_named(&[("delta_irr", Poly::constant(1))]).unwrap();
        assert_eq!(pic12_reduce(&expr), (Poly::constant(12), Poly::zero()));
        let expr = Pic12Expr::from_named(&[("psi_p", Poly::constant(1)), ("lambda", Poly::constant(-1))]).unwrap();
        assert_eq!(pic12_reduce(&expr), (Poly::zero(), Poly::constant(1)));
        let expr = Pic12Expr::from_named(&[("psi_p", Poly::constant(1)), ("psi_q", Poly::constant(-1))]).unwrap();
        assert_eq!(pic12_reduce(&expr), (Poly::zero(), Poly::zero()));
        let t = Poly::var("t");
        let (lambda, delta) = pic12_reduce(&crate::quad::pic12_relation(&t));
        assert_eq!(lambda, Poly::var("b11") - Poly::constant(4));
        assert_eq!(delta, Poly::var("b11") - Poly::var("b10") + t);
        assert!(matches!(
            Pic12Expr::from_named(&[("kappa", Poly::constant(1))]),
            Err(Error::UnknownGenerator(_))
        ));
    }
}
