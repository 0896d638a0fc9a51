//! Verification suites. Each suite sweeps one group of identities and
//! returns one [`Check`] per case, in a deterministic order.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{Poly, Rational};
use crate::catalog::{Catalog, CatalogEntry};
use crate::certificate::{canonical_class, certify, perturbation_checks, recipe};
use crate::error::{Error, Result};
use crate::grr::{c1_pushforward, delta_total, porteous_equal_rank, push_product, quadric_degeneracy, FiberwiseLineBundle, UpstairsClass};
use crate::picard::{
    canonical_index, deserialize, intersect_test_curve, serialize, subsets_of_size, Coefficient, DivisorClass,
    Generator, Space, TestCurve, UnmarkedClass,
};
use crate::pullback::{
    average_over_pairs, averaged_quad_16_8, averaged_quad_17_8, brill_noether_5, clutch_pullback,
    forgetful_pullback, pic12_reduce, run_preset, ClutchingMap, Pic12Expr, Preset,
};
use crate::quad::{
    b0, b0_poly, b10_poly, b1, b1_poly, balanced_pairs, family_space, gn_pair, pic12_relation, quad_class,
    solve_pic12, tilde_b, tilde_b_poly, tilde_vs_known, verify_b1_recurrence_on, verify_b1_recurrence_symbolic,
    verify_balance, verify_balance_symbolic, verify_tilde_recurrence, verify_tilde_recurrence_fixed,
    verify_tilde_recurrence_symbolic,
};
use crate::report::Check;

/// Largest `t` whose family space fits the label bitmask.
pub const MAX_SWEEP_T: u32 = 9;

/// Upper end of the numeric balance sweep.
pub const BALANCE_T_MAX: u32 = 100;

const FAMILY_TABLE: [(u32, u32); 7] = [(5, 1), (8, 3), (12, 6), (17, 10), (23, 15), (30, 21), (38, 28)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Balance,
    Recurrences,
    Grr,
    Pullbacks,
    Pic12,
    Certificates,
    Properties,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Balance,
        Suite::Recurrences,
        Suite::Grr,
        Suite::Pullbacks,
        Suite::Pic12,
        Suite::Certificates,
        Suite::Properties,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Balance => "balance",
            Suite::Recurrences => "recurrences",
            Suite::Grr => "grr",
            Suite::Pullbacks => "pullbacks",
            Suite::Pic12 => "pic12",
            Suite::Certificates => "certificates",
            Suite::Properties => "properties",
        }
    }

    pub fn run(&self, t_max: u32) -> Vec<Check> {
        match self {
            Suite::Balance => balance_suite(t_max),
            Suite::Recurrences => recurrence_suite(t_max),
            Suite::Grr => grr_suite(t_max),
            Suite::Pullbacks => pullback_suite(),
            Suite::Pic12 => pic12_suite(t_max),
            Suite::Certificates => certificate_suite(),
            Suite::Properties => property_suite(t_max),
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown suite {s}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The outcome of one or more suites.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suites: Vec<Suite>,
    pub t_max: u32,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.total > 0
    }
}

/// Runs the given suites in order. `t_max` bounds the family sweeps.
pub fn run(suites: &[Suite], t_max: u32) -> Result<Report> {
    if t_max > MAX_SWEEP_T {
        return Err(Error::OutOfRange(format!("--t-max must be at most {MAX_SWEEP_T}, got {t_max}")));
    }
    let checks: Vec<Check> = suites.iter().flat_map(|s| s.run(t_max)).collect();
    let passed = checks.iter().filter(|c| c.pass).count();
    Ok(Report {
        suites: suites.to_vec(),
        t_max,
        total: checks.len(),
        passed,
        failed: checks.len() - passed,
        checks,
    })
}

fn check_bool(op: &str, what: impl fmt::Display, expected: impl fmt::Display, pass: bool) -> Check {
    Check::new(op).values(what, expected, pass)
}

fn from_result(op: &str, result: Result<Check>) -> Check {
    result.unwrap_or_else(|e| Check::new(op).failed(e.to_string()))
}

/// `λ`, every `ψ_j` and `δ_irr` agree.
pub fn interior_equal(a: &DivisorClass, b: &DivisorClass) -> bool {
    a.space() == b.space()
        && a.lambda() == b.lambda()
        && a.delta_irr() == b.delta_irr()
        && a.space().labels().all(|l| a.psi(l) == b.psi(l))
}

fn interior_string(c: &DivisorClass) -> String {
    let psi = match c.symmetric_psi() {
        Some(p) => format!("Σψ:{p}"),
        None => {
            let all: Vec<String> = c.space().labels().map(|l| c.psi(l).to_string()).collect();
            format!("ψ:[{}]", all.join(","))
        }
    };
    format!("λ:{} {psi} δ_irr:{}", c.lambda(), c.delta_irr())
}

fn interior_class(space: Space, lambda: i64, psi: i64, delta_irr: i64) -> DivisorClass {
    let mut c = DivisorClass::zero(space);
    c.set_lambda(lambda).set_psi_all(psi).set_delta_irr(delta_irr);
    c
}

fn compare_interior(op: &str, got: &DivisorClass, want: &DivisorClass) -> Check {
    check_bool(op, interior_string(got), interior_string(want), interior_equal(got, want))
}

pub fn balance_suite(t_max: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for (t, &(g, n)) in (0u32..).zip(FAMILY_TABLE.iter()) {
        let got = gn_pair(t);
        out.push(
            check_bool("gn_pair", format!("{got:?}"), format!("{:?}", (g, n)), got == (g, n)).input("t", t),
        );
    }
    for t in 0..=BALANCE_T_MAX.max(t_max) {
        out.push(verify_balance(t));
    }
    out.push(verify_balance_symbolic());
    let g_top = gn_pair(6).0;
    let expected: Vec<(u32, u32, u32)> = (0..=6).map(|t| (gn_pair(t).0, gn_pair(t).1, t)).collect();
    let found = balanced_pairs(g_top);
    out.push(
        check_bool("balanced_pairs", format!("{found:?}"), format!("{expected:?}"), found == expected)
            .input("g_max", g_top),
    );
    out
}

pub fn recurrence_suite(t_max: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for t in 0..=t_max {
        let (_, n) = gn_pair(t);
        for s in 1..=n {
            for i in 0..s {
                out.push(verify_tilde_recurrence(i, s, t));
            }
        }
    }
    out.push(verify_tilde_recurrence_symbolic());
    for s in 1..=4 {
        for i in 0..s {
            out.push(verify_tilde_recurrence_fixed(i, s));
        }
    }
    for t in 0..=t_max {
        match quad_class(t) {
            Ok(class) => {
                let (_, n) = gn_pair(t);
                for s in 1..=n {
                    out.push(verify_b1_recurrence_on(&class, s, t));
                }
            }
            Err(e) => out.push(Check::new("verify_b1_recurrence").input("t", t).failed(e.to_string())),
        }
    }
    out.push(verify_b1_recurrence_symbolic());
    let zero = Poly::constant(0);
    out.push(Check::compare_poly(
        "tilde_b_at_i0_minus_b0",
        tilde_b_poly().substitute("i", &zero) - b0_poly(),
        zero.clone(),
    ));
    out.push(Check::compare_poly(
        "b1_at_s1",
        b1_poly().substitute("s", &Poly::constant(1)),
        Poly::constant(4),
    ));
    out.push(Check::compare_poly(
        "b1_minus_tilde_b_at_i1",
        b1_poly() - tilde_b_poly().substitute("i", &Poly::constant(1)),
        Poly::constant(2),
    ));
    out.push(Check::compare("tilde_b", tilde_b(1, 2, 1), 5.into()).input("i", 1).input("s", 2).input("t", 1));
    out.push(from_result(
        "b0",
        b0(2, 3).map(|v| Check::compare("b0", v, 10.into()).input("s", 2).input("t", 3)),
    ));
    for t in 0..=t_max {
        out.push(Check::compare("b1", b1(0, t), Rational::from_int(t as i64 + 4)).input("s", 0).input("t", t));
        out.push(Check::compare("b1", b1(1, t), 4.into()).input("s", 1).input("t", t));
        out.extend(tilde_vs_known(t));
    }
    out
}

fn grr_expectations(space: Space) -> Vec<(FiberwiseLineBundle, DivisorClass, &'static str)> {
    let n = space.n();
    let mut twisted_bicanonical = delta_total(space).scale(&(-1).into());
    twisted_bicanonical.set_lambda(13).set_psi_all(-5);
    vec![
        (FiberwiseLineBundle::uniform(1, -1, n), interior_class(space, 1, -1, 0), "λ - Σψ"),
        (FiberwiseLineBundle::uniform(2, -2, n), twisted_bicanonical, "13λ - 5Σψ - δ"),
        (FiberwiseLineBundle::uniform(1, 0, n), interior_class(space, 1, 0, 0), "λ"),
    ]
}

pub fn grr_suite(t_max: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for t in 0..=t_max.min(3) {
        let Ok(space) = family_space(t) else { continue };
        for (bundle, want, label) in grr_expectations(space) {
            let zero = DivisorClass::zero(space);
            out.push(match c1_pushforward(space, &bundle, &zero) {
                Ok(got) => check_bool("c1_pushforward", got.to_string(), want.to_string(), got == want)
                    .input("a", bundle.a)
                    .input("m", bundle.twists.values().next().copied().unwrap_or(0))
                    .input("space", space.to_string())
                    .extra("expected", label),
                Err(e) => Check::new("c1_pushforward").failed(e.to_string()),
            });
        }
    }
    for t in 0..=t_max {
        let op = "porteous_vs_quad";
        let result = family_space(t).and_then(|space| {
            let d = quadric_degeneracy(space)?;
            let q = quad_class(t)?;
            let mut head = interior_class(space, 8 - t as i64, t as i64, -1);
            head.set_all_boundary(-1);
            let total_ok = d == head;
            Ok(check_bool(op, interior_string(&d), interior_string(&q), interior_equal(&d, &q) && total_ok)
                .input("t", t))
        });
        out.push(from_result(op, result));
    }
    let space = Space::new(8, 3).expect("stable");
    let e = interior_class(space, 1, -1, 0);
    let trivial = porteous_equal_rank(&e, 4, &e.scale(&5.into()));
    out.push(from_result(
        "porteous_trivial",
        trivial.map(|d| check_bool("porteous_trivial", d.to_string(), "0", d == DivisorClass::zero(space))),
    ));
    // every degree-two monomial in ψ and the sections pushes forward to a
    // fully exact class
    let mut monomials = vec![UpstairsClass::zero(space)];
    monomials[0].psi = Rational::one();
    for j in 0..space.n() as usize {
        let mut d = UpstairsClass::zero(space);
        d.sections[j] = Rational::one();
        monomials.push(d);
    }
    let mut closed = true;
    for a in &monomials {
        for b in &monomials {
            closed &= push_product(a, b).map(|c| c.is_fully_exact()).unwrap_or(false);
        }
    }
    out.push(check_bool("rule_table_closed", closed, true, closed).input("space", space.to_string()));
    out
}

fn ordered_pairs(n: u32) -> impl Iterator<Item = (u32, u32)> {
    (1..=n).flat_map(move |i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
}

pub fn pullback_suite() -> Vec<Check> {
    let mut out = Vec::new();
    let bn = forgetful_pullback(&brill_noether_5(), 1);
    let q0 = quad_class(0);
    out.push(match (bn, q0) {
        (Ok(bn), Ok(q0)) => check_bool("bn5_pullback_vs_quad0", bn.to_string(), q0.to_string(), bn == q0),
        (Err(e), _) | (_, Err(e)) => Check::new("bn5_pullback_vs_quad0").failed(e.to_string()),
    });
    let lambda_only = {
        let mut c = UnmarkedClass::new(17).expect("stable");
        c.set_lambda(1);
        c
    };
    out.push(from_result(
        "forgetful_lambda",
        forgetful_pullback(&lambda_only, 8).map(|c| {
            let want = interior_class(c.space(), 1, 0, 0);
            check_bool("forgetful_lambda", c.to_string(), want.to_string(), c == want)
        }),
    ));

    let q3 = match quad_class(3) {
        Ok(q) => q,
        Err(e) => {
            out.push(Check::new("quad_class").input("t", 3).failed(e.to_string()));
            return out;
        }
    };
    // tail gain: ψ at the attachment point picks up b_{h:2}(3)
    let rational_gain = b0(2, 3).expect("s >= 2");
    let maps = [
        ("clutch_16_8", Space::new(16, 8), (1, 2), (0, 2), b1(2, 3), rational_gain.clone()),
        ("clutch_17_8", Space::new(17, 8), (0, 2), (0, 2), rational_gain.clone(), rational_gain),
    ];
    for (op, source, tail_i, tail_j, gain_i, gain_j) in maps {
        let Ok(source) = source else { continue };
        for (i, j) in ordered_pairs(source.n()) {
            let result = ClutchingMap::two_tails(source, i, tail_i, j, tail_j).and_then(|map| {
                let pulled = clutch_pullback(&q3, &map)?;
                let mut want = interior_class(source, 5, 3, -1);
                want.set_psi(i, gain_i.clone())?;
                want.set_psi(j, gain_j.clone())?;
                Ok(compare_interior(op, &pulled, &want).input("i", i).input("j", j))
            });
            out.push(from_result(op, result));
        }
    }
    for (op, built, want) in [
        ("average_16_8", averaged_quad_16_8(), (40, 37, -8)),
        ("average_17_8", averaged_quad_17_8(), (20, 19, -4)),
    ] {
        out.push(from_result(
            op,
            built.map(|d| {
                let expected = interior_class(d.space(), want.0, want.1, want.2);
                compare_interior(op, &d, &expected)
            }),
        ));
    }
    // linearity in the class argument
    let linear = Space::new(16, 8).and_then(|source| {
        let map = ClutchingMap::two_tails(source, 2, (1, 2), 7, (0, 2))?;
        let k = canonical_class(17, 10)?;
        let sum = q3.add(&k)?.scale(&Rational::new(3, 2));
        let lhs = clutch_pullback(&sum, &map)?;
        let rhs = clutch_pullback(&q3, &map)?
            .add(&clutch_pullback(&k, &map)?)?
            .scale(&Rational::new(3, 2));
        Ok(check_bool("clutch_linear", interior_string(&lhs), interior_string(&rhs), interior_equal(&lhs, &rhs)))
    });
    out.push(from_result("clutch_linear", linear));
    // a constant family averages to itself
    let constant = Space::new(16, 8).and_then(|source| {
        let mut lambda = DivisorClass::zero(Space::new(17, 10)?);
        lambda.set_lambda(1);
        let avg = average_over_pairs(&lambda, source, (1, 2), (0, 2), &Rational::one())?;
        let want = interior_class(source, 1, 0, 0);
        Ok(check_bool("average_constant", avg.to_string(), want.to_string(), avg == want))
    });
    out.push(from_result("average_constant", constant));
    for preset in Preset::ALL {
        let result = run_preset(preset).map(|r| {
            let symmetric = r.averaged.as_ref().is_none_or(|a| a.symmetric_psi().is_some());
            check_bool("preset", symmetric, true, symmetric).input("preset", preset.name())
        });
        out.push(from_result("preset", result));
    }
    out
}

pub fn pic12_suite(t_max: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for t in 0..=t_max {
        let op = "b_from_pic12";
        let result = solve_pic12(&Poly::constant(t as i64)).map(|(b10, b11)| {
            let want = (Poly::constant(t as i64 + 4), Poly::constant(4));
            let pass = (b10.clone(), b11.clone()) == want;
            check_bool(op, format!("({b10}, {b11})"), format!("({}, {})", want.0, want.1), pass).input("t", t)
        });
        out.push(from_result(op, result));
    }
    let symbolic = solve_pic12(&Poly::var("t")).map(|(b10, b11)| {
        let pass = b10 == b10_poly() && b11 == Poly::constant(4);
        check_bool("b_from_pic12_symbolic", format!("({b10}, {b11})"), "(t + 4, 4)", pass)
    });
    out.push(from_result("b_from_pic12_symbolic", symbolic));
    let t = Poly::var("t");
    let (lambda, delta) = pic12_reduce(&pic12_relation(&t));
    out.push(Check::compare_poly("pic12_reduce_lambda", lambda, Poly::var("b11") - Poly::constant(4)));
    out.push(Check::compare_poly(
        "pic12_reduce_delta",
        delta,
        Poly::var("b11") - Poly::var("b10") + t,
    ));
    let relations: [(&str, Vec<(&str, i64)>); 2] = [
        ("pic12_relation_irr", vec![("lambda", 12), ("delta_irr", -1)]),
        ("pic12_relation_psi", vec![("psi_p", 1), ("psi_q", -1)]),
    ];
    for (op, terms) in relations {
        let terms: Vec<(&str, Poly)> = terms.into_iter().map(|(k, v)| (k, Poly::constant(v))).collect();
        let result = Pic12Expr::from_named(&terms).map(|e| {
            let (l, d) = pic12_reduce(&e);
            let pass = l.is_zero() && d.is_zero();
            check_bool(op, format!("({l}, {d})"), "(0, 0)", pass)
        });
        out.push(from_result(op, result));
    }
    out
}

pub fn certificate_suite() -> Vec<Check> {
    let mut out = Vec::new();
    let catalog = Catalog::builtin();
    let expected = [
        ((16, 8), [(13, 272), (7, 272), (1, 34)]),
        ((17, 8), [(1, 20), (1, 20), (3, 5)]),
        ((12, 10), [(59, 4415), (13, 13245), (484, 4415)]),
    ];
    for ((g, n), want) in expected {
        let want: Vec<Rational> = want.iter().map(|&(p, q)| Rational::new(p, q)).collect();
        let space = format!("M({g},{n})");
        match certify(g, n, &catalog) {
            Ok(cert) => {
                let got: Vec<Rational> =
                    std::iter::once(cert.a.clone()).chain(cert.components.iter().map(|c| c.c.clone())).collect();
                out.push(
                    check_bool("certificate", fmt_list(&got), fmt_list(&want), got == want)
                        .input("space", space.clone()),
                );
                let e = &cert.residual_class;
                let zero = [Generator::Lambda, Generator::DeltaIrr]
                    .iter()
                    .chain(e.space().labels().map(Generator::Psi).collect::<Vec<_>>().iter())
                    .all(|gen| e.coefficient(gen).is_zero());
                out.push(
                    check_bool("residual_interior_zero", interior_string(e), "λ:0 Σψ:0 δ_irr:0", zero)
                        .input("space", space.clone()),
                );
            }
            Err(e) => out.push(Check::new("certificate").input("space", space.clone()).failed(e.to_string())),
        }
        let perturbed = recipe(g, n, &catalog)
            .and_then(|components| perturbation_checks(Space::new(g, n)?, &components));
        match perturbed {
            Ok(checks) => out.extend(checks),
            Err(e) => out.push(Check::new("perturbation").input("space", space).failed(e.to_string())),
        }
    }
    let canonical = canonical_class(16, 8).map(|k| {
        let want = interior_class(k.space(), 13, 1, -2);
        compare_interior("canonical_class", &k, &want).input("space", "M(16,8)")
    });
    out.push(from_result("canonical_class", canonical));
    out
}

fn fmt_list(xs: &[Rational]) -> String {
    let parts: Vec<String> = xs.iter().map(Rational::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Canonicalization is idempotent and identifies `(i, S)` with
/// `(g - i, S^c)`, for every stable index with `g <= 8`, `n <= 4`.
pub fn canonical_involution_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for g in 0..=8u32 {
        for n in 0..=4u32 {
            let Ok(space) = Space::new(g, n) else { continue };
            let mut cases = 0u32;
            let mut ok = true;
            for i in 0..=g {
                for s in 0..=n {
                    for set in subsets_of_size(n, s) {
                        let Ok(idx) = canonical_index(&space, i, set) else { continue };
                        cases += 1;
                        let again = canonical_index(&space, idx.genus(), idx.set());
                        let mirror = canonical_index(&space, g - i, set.complement(n));
                        ok &= again.as_ref() == Ok(&idx) && mirror.as_ref() == Ok(&idx);
                    }
                }
            }
            out.push(
                check_bool("canonical_involution", cases, cases, ok)
                    .input("g", g)
                    .input("n", n),
            );
        }
    }
    out
}

/// A random class on `space` with small integer coefficients.
pub fn random_class(rng: &mut impl Rng, space: Space) -> DivisorClass {
    let mut c = DivisorClass::zero(space);
    let draw = |rng: &mut _| Coefficient::exact(Rng::random_range(rng, -20i64..=20));
    c.set_lambda(draw(rng)).set_delta_irr(draw(rng));
    for l in space.labels() {
        c.set_psi(l, draw(rng)).expect("label in range");
    }
    for size in space.size_classes() {
        if rng.random_bool(0.5) {
            c.set_profile(size, draw(rng)).expect("stable size class");
        }
    }
    let indices = space.boundary_indices();
    for _ in 0..indices.len().min(6) {
        let idx = indices[rng.random_range(0..indices.len())];
        c.set_boundary(idx, draw(rng));
    }
    c
}

/// Pairing with a test curve is linear: `T·(aX + bY) = a·T·X + b·T·Y`.
pub fn pairing_linearity_checks(seed: u64, cases: usize) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..cases {
        let g = rng.random_range(2..=8u32);
        let n = rng.random_range(1..=4u32);
        let space = Space::new(g, n).expect("stable");
        let x = random_class(&mut rng, space);
        let y = random_class(&mut rng, space);
        let a = Rational::new(rng.random_range(-5..=5), rng.random_range(1..=4));
        let b = Rational::new(rng.random_range(-5..=5), rng.random_range(1..=4));
        let curves: Vec<TestCurve> = (0..=g)
            .flat_map(|i| {
                (0..=n).flat_map(move |s| subsets_of_size(n, s).into_iter().map(move |set| (i, set)))
            })
            .filter_map(|(i, set)| TestCurve::new(space, i, set).ok())
            .collect();
        let curve = curves[rng.random_range(0..curves.len())];
        let result = (|| -> Result<Check> {
            let combo = x.scale(&a).add(&y.scale(&b))?;
            let lhs = intersect_test_curve(&combo, &curve)?;
            let rhs = &a * &intersect_test_curve(&x, &curve)? + &b * &intersect_test_curve(&y, &curve)?;
            Ok(Check::compare("pairing_linear", lhs, rhs)
                .input("space", space.to_string())
                .input("curve", format!("T_{{{}:{}}}", curve.genus(), curve.set())))
        })();
        out.push(from_result("pairing_linear", result));
    }
    out
}

/// Every class, unmarked class, map and catalog entry the crate builds.
pub struct JsonCorpus {
    pub classes: Vec<DivisorClass>,
    pub unmarked: Vec<UnmarkedClass>,
    pub maps: Vec<ClutchingMap>,
    pub entries: Vec<CatalogEntry>,
}

pub fn json_corpus(t_max: u32) -> Result<JsonCorpus> {
    let mut classes = Vec::new();
    for t in 0..=t_max.min(MAX_SWEEP_T) {
        classes.push(quad_class(t)?);
        if t <= 3 {
            classes.push(quadric_degeneracy(family_space(t)?)?);
        }
    }
    for (g, n) in [(16, 8), (17, 8), (12, 10), (3, 1), (0, 4)] {
        classes.push(canonical_class(g, n)?);
    }
    classes.push(averaged_quad_16_8()?);
    classes.push(averaged_quad_17_8()?);
    let mut maps = Vec::new();
    for preset in Preset::ALL {
        let r = run_preset(preset)?;
        classes.push(r.pullback);
        classes.extend(r.averaged);
        maps.extend(r.map);
    }
    let catalog = Catalog::builtin();
    let entries: Vec<CatalogEntry> = catalog.names().map(|n| catalog.get(n).cloned()).collect::<Result<_>>()?;
    for ((g, n), names) in [((16, 8), ["Z16"]), ((17, 8), ["BN17"]), ((12, 10), ["D12"])] {
        for name in names {
            classes.push(catalog.get(name)?.on_space(Space::new(g, n)?)?);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (g, n) in [(2, 3), (5, 4), (8, 2)] {
        classes.push(random_class(&mut rng, Space::new(g, n)?));
    }
    let unmarked = vec![brill_noether_5(), UnmarkedClass::from_ints(4, 1, &[-1, 2, 0])?];
    Ok(JsonCorpus { classes, unmarked, maps, entries })
}

fn round_trip<T>(op: &str, label: String, value: &T) -> Check
where
    T: Serialize + serde::de::DeserializeOwned + PartialEq,
{
    let first = serde_json::to_string(value).expect("serializable");
    match serde_json::from_str::<T>(&first) {
        Ok(back) => {
            let second = serde_json::to_string(&back).expect("serializable");
            let pass = back == *value && first == second;
            check_bool(op, second.len(), first.len(), pass).input("item", label)
        }
        Err(e) => Check::new(op).input("item", label).failed(e.to_string()),
    }
}

pub fn round_trip_checks(t_max: u32) -> Vec<Check> {
    let JsonCorpus { classes, unmarked, maps, entries } = match json_corpus(t_max) {
        Ok(c) => c,
        Err(e) => return vec![Check::new("json_round_trip").failed(e.to_string())],
    };
    let mut out = Vec::new();
    for c in &classes {
        let text = serialize(c);
        let pass = deserialize(&text).map(|back| back == *c && serialize(&back) == text);
        out.push(
            check_bool("json_round_trip", pass.is_ok(), true, pass.unwrap_or(false))
                .input("item", c.space().to_string()),
        );
    }
    for u in &unmarked {
        out.push(round_trip("json_round_trip", format!("M({})", u.genus()), u));
    }
    for m in &maps {
        out.push(round_trip("json_round_trip", m.to_string(), m));
    }
    for e in &entries {
        out.push(round_trip("json_round_trip", e.name.clone(), e));
    }
    out
}

pub fn property_suite(t_max: u32) -> Vec<Check> {
    let mut out = canonical_involution_checks();
    out.extend(pairing_linearity_checks(2024, 64));
    out.extend(round_trip_checks(t_max));
    for t in 0..=t_max.min(MAX_SWEEP_T) {
        let result = quad_class(t).and_then(|q| {
            let doubled = q.add(&q)?;
            Ok(check_bool("class_doubling", doubled.lambda(), q.scale(&2.into()).lambda(), doubled == q.scale(&2.into()))
                .input("t", t))
        });
        out.push(from_result("class_doubling", result));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pass(checks: &[Check]) {
        let failures: Vec<String> = checks.iter().filter(|c| !c.pass).map(|c| c.to_string()).collect();
        assert!(failures.is_empty(), "{}", failures.join("\n"));
        assert!(!checks.is_empty());
    }

    #[test]
    fn small_sweeps_pass() {
        for suite in Suite::ALL {
            all_pass(&suite.run(2));
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn t_max_is_bounded() {
        assert!(run(&[Suite::Balance], MAX_SWEEP_T + 1).is_err());
        let report = run(&[Suite::Pic12], 1).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.total, report.passed);
    }

    #[test]
    fn linearity_is_seeded() {
        assert_eq!(pairing_linearity_checks(5, 4), pairing_linearity_checks(5, 4));
    }
}
