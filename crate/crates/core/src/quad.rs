//! The quadric-degeneracy divisor family on `M̄_{g(t),n(t)}`.
//!
//! For each `t >= 0` the pair `g(t) = (t² + 5t + 10)/2`, `n(t) = (t² + 3t + 2)/2`
//! makes the multiplication map `Sym² H⁰(K - Σp) → H⁰(2K - 2Σp)` square, and
//! its degeneracy locus is a divisor. This module holds the closed forms for
//! its coefficients, the intersection numbers used to derive them, and the
//! recurrences that tie the two together. Every closed form exists both as an
//! exact evaluator and as a [`Poly`] so identities can be checked symbolically.

use crate::algebra::{LinearSystem, Poly, Rational, Solution};
use crate::error::{Error, Result};
use crate::picard::{intersect_test_curve, Coefficient, DivisorClass, LabelSet, SizeClass, Space, TestCurve};
use crate::pullback::{pic12_reduce, Pic12Expr, Pic12Generator};
use crate::report::Check;

fn var(name: &str) -> Poly {
    Poly::var(name)
}

fn int(c: i64) -> Poly {
    Poly::constant(c)
}

fn half() -> Rational {
    Rational::new(1, 2)
}

fn at(p: &Poly, bindings: &[(&str, i64)]) -> Rational {
    let bindings: Vec<(&str, Rational)> = bindings.iter().map(|(k, v)| (*k, Rational::from_int(*v))).collect();
    p.eval_at(&bindings).expect("all variables bound")
}

/// `g(t)` as a polynomial in `t`.
pub fn genus_poly() -> Poly {
    let t = var("t");
    (t.pow(2) + int(5) * &t + int(10)).scale(&half())
}

/// `n(t)` as a polynomial in `t`.
pub fn marked_poly() -> Poly {
    let t = var("t");
    (t.pow(2) + int(3) * &t + int(2)).scale(&half())
}

/// `(g(t), n(t))`. Both numerators are even, so the values are integers.
pub fn gn_pair(t: u32) -> (u32, u32) {
    let t = t as u64;
    (((t * t + 5 * t + 10) / 2) as u32, ((t * t + 3 * t + 2) / 2) as u32)
}

/// The family's space `M̄_{g(t),n(t)}`.
pub fn family_space(t: u32) -> Result<Space> {
    let (g, n) = gn_pair(t);
    Space::new(g, n)
}

/// Rank of `Sym²` of the rank-`(t + 4)` bundle.
fn sym2_rank(t: u32) -> Rational {
    let r = Rational::from_int(t as i64 + 4);
    &r * &(&r + &Rational::one()) * half()
}

/// `h⁰(2K - 2Σp) = 3g - 3 - 2n` on the family space.
fn quadric_target_rank(t: u32) -> Rational {
    let (g, n) = gn_pair(t);
    Rational::from_int(3 * g as i64 - 3 - 2 * n as i64)
}

/// Both sides of the multiplication map have the same dimension.
pub fn verify_balance(t: u32) -> Check {
    let lhs = sym2_rank(t);
    let rhs = quadric_target_rank(t);
    Check::compare("verify_balance", lhs, rhs).input("t", t)
}

/// The balance identity as a polynomial identity in `t`.
pub fn verify_balance_symbolic() -> Check {
    let t = var("t");
    let lhs = (&t + int(4)) * (&t + int(5));
    let lhs = lhs.scale(&half());
    let rhs = int(3) * genus_poly() - int(3) - int(2) * marked_poly();
    Check::compare_poly("verify_balance_symbolic", lhs, rhs)
}

/// All `(g, n, t)` with `g <= g_max`, `g - n >= 4` and
/// `(g - n)(g - n + 1)/2 = 3g - 3 - 2n`, found by brute-force search rather
/// than through [`gn_pair`].
pub fn balanced_pairs(g_max: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for g in 0..=g_max as i64 {
        for n in 0..=(g - 4) {
            let d = g - n;
            if d * (d + 1) / 2 == 3 * g - 3 - 2 * n {
                out.push((g as u32, n as u32, (d - 4) as u32));
            }
        }
    }
    out
}

/// `b_{0:s}(t) = s(st + s + t - 1)/2` as a polynomial in `(s, t)`.
pub fn b0_poly() -> Poly {
    let (s, t) = (var("s"), var("t"));
    (&s * (&s * &t + &s + &t - int(1))).scale(&half())
}

/// `b_{1:s}(t) = (s²t + s² - st + s + 6)/2` for `s >= 1`, in `(s, t)`.
pub fn b1_poly() -> Poly {
    let (s, t) = (var("s"), var("t"));
    (s.pow(2) * &t + s.pow(2) - &s * &t + &s + int(6)).scale(&half())
}

/// `b_{1:0}(t) = t + 4`.
pub fn b10_poly() -> Poly {
    var("t") + int(4)
}

/// Valid for `s >= 2`.
pub fn b0(s: u32, t: u32) -> Result<Rational> {
    if s < 2 {
        return Err(Error::OutOfRange(format!("b_{{0:s}} needs s >= 2, got s = {s}")));
    }
    Ok(at(&b0_poly(), &[("s", s as i64), ("t", t as i64)]))
}

/// `b_{1:0}(t)` for `s = 0`, the closed form otherwise.
pub fn b1(s: u32, t: u32) -> Rational {
    if s == 0 {
        at(&b10_poly(), &[("t", t as i64)])
    } else {
        at(&b1_poly(), &[("s", s as i64), ("t", t as i64)])
    }
}

/// `b̃_{i:s}(t) = (i²(t - 3) - i(2s(t - 1) + t - 5) + s(st + s + t - 1))/2`,
/// in `(i, s, t)`.
pub fn tilde_b_poly() -> Poly {
    let (i, s, t) = (var("i"), var("s"), var("t"));
    let quad_i = i.pow(2) * (&t - int(3));
    let lin_i = &i * (int(2) * &s * (&t - int(1)) + &t - int(5));
    let rest = &s * (&s * &t + &s + &t - int(1));
    (quad_i - lin_i + rest).scale(&half())
}

pub fn tilde_b(i: i64, s: i64, t: i64) -> Rational {
    at(&tilde_b_poly(), &[("i", i), ("s", s), ("t", t)])
}

/// The class of the family divisor on `M̄_{g(t),n(t)}`:
/// `(8 - t)λ + tΣψ - δ_irr - Σ b_{i:|S|}(t) δ_{i:S}`, keyed by canonical
/// `(i, S)`.
///
/// Coefficients with `i ∈ {0, 1}` are exact. For `2 <= i <= g/2` only
/// `b_{i:s}(t) >= 1` is known, stored as the bound "coefficient <= -1";
/// at `t = 0` the divisor is the pullback of the Brill–Noether divisor
/// `8λ - δ_0 - 4δ_1 - 6δ_2` on `M̄_5`, which pins `b_{2:s}(0) = 6`.
pub fn quad_class(t: u32) -> Result<DivisorClass> {
    let space = family_space(t)?;
    let ti = t as i64;
    let mut class = DivisorClass::zero(space);
    class
        .set_lambda(8 - ti)
        .set_psi_all(ti)
        .set_delta_irr(-1);
    for size in space.size_classes() {
        let SizeClass { i, s } = size;
        let coeff = match i {
            0 => Coefficient::Exact(-b0(s, t)?),
            1 => Coefficient::Exact(-b1(s, t)),
            _ if t == 0 => Coefficient::exact(-6),
            _ => Coefficient::AtMost(Rational::from_int(-1)),
        };
        class.set_profile(size, coeff)?;
    }
    Ok(class)
}

/// `T_{i:S}·c₁(π_*𝓛')` in `(i, s, g, n)`.
pub fn c1_pushforward_l_poly() -> Poly {
    let (i, s, g, n) = (var("i"), var("s"), var("g"), var("n"));
    let d = &i - &s;
    -(&d * ((&d - int(1)) * (&g - &i - int(1)) + &n - &s))
}

/// `T_{i:S}·c₁(π_*(𝓛'^{⊗2}))` in `(i, s, g, n)`.
pub fn c1_pushforward_l2_poly() -> Poly {
    let (i, s, g, n) = (var("i"), var("s"), var("g"), var("n"));
    let a = i.pow(2) * (int(4) * &g + int(6) * &s + int(1));
    let b = &i * (-(&g * (int(6) * &s + int(5))) + int(3) * &n - int(2) * s.pow(2) + int(5));
    let c = &s * (&g * (int(2) * &s + int(3)) - int(2) * &n - int(3));
    int(-2) * (a + b) - int(2) * c + int(8) * i.pow(3)
}

fn check_lemma_range(i: u32, s: u32, g: u32) -> Result<()> {
    if i > g || i >= s {
        return Err(Error::OutOfRange(format!(
            "intersection numbers need 0 <= i <= g and i < s, got (i, s, g) = ({i}, {s}, {g})"
        )));
    }
    Ok(())
}

pub fn c1_pushforward_l(i: u32, s: u32, g: u32, n: u32) -> Result<Rational> {
    check_lemma_range(i, s, g)?;
    Ok(at(
        &c1_pushforward_l_poly(),
        &[("i", i as i64), ("s", s as i64), ("g", g as i64), ("n", n as i64)],
    ))
}

pub fn c1_pushforward_l2(i: u32, s: u32, g: u32, n: u32) -> Result<Rational> {
    check_lemma_range(i, s, g)?;
    Ok(at(
        &c1_pushforward_l2_poly(),
        &[("i", i as i64), ("s", s as i64), ("g", g as i64), ("n", n as i64)],
    ))
}

/// `T_{i:S}·[D₁(φ')]` by Porteous on the equal-rank map:
/// `c₁(π_*𝓛'^{⊗2}) - (t + 5)·c₁(π_*𝓛')` on the family space.
pub fn d1_phi_prime(i: u32, s: u32, t: u32) -> Result<Rational> {
    let (g, n) = gn_pair(t);
    let l = c1_pushforward_l(i, s, g, n)?;
    let l2 = c1_pushforward_l2(i, s, g, n)?;
    Ok(l2 - Rational::from_int(t as i64 + 5) * l)
}

fn tilde_rhs(i: u32, s: u32, t: u32) -> Rational {
    let (g, n) = gn_pair(t);
    let (i, s, t, g, n) = (i as i64, s as i64, t as i64, g as i64, n as i64);
    Rational::from_int(2 * g - 2 * i - 2 + n - s) * tilde_b(i, s, t)
        - Rational::from_int(n - s) * tilde_b(i, s + 1, t)
        + Rational::from_int((n - s) * t)
}

/// `T_{i:S}·[D₁(φ')]` computed from the intersection numbers must match the
/// test-curve expansion in the `b̃` closed form.
pub fn verify_tilde_recurrence(i: u32, s: u32, t: u32) -> Check {
    let base = Check::new("verify_tilde_recurrence")
        .input("i", i)
        .input("s", s)
        .input("t", t);
    match d1_phi_prime(i, s, t) {
        Ok(lhs) => base.values(lhs.clone(), tilde_rhs(i, s, t), lhs == tilde_rhs(i, s, t)),
        Err(e) => base.failed(e.to_string()),
    }
}

/// The recurrence as an identity in `(i, s, t)` after substituting `g(t)`
/// and `n(t)`.
pub fn verify_tilde_recurrence_symbolic() -> Check {
    let (lhs, rhs) = tilde_recurrence_sides();
    Check::compare_poly("verify_tilde_recurrence_symbolic", lhs, rhs)
}

/// The same identity for one fixed `(i, s)`, as a polynomial in `t`.
pub fn verify_tilde_recurrence_fixed(i: u32, s: u32) -> Check {
    let full = tilde_recurrence_sides();
    let fix = |p: &Poly| {
        p.substitute("i", &int(i as i64))
            .substitute("s", &int(s as i64))
    };
    Check::compare_poly("verify_tilde_recurrence_fixed", fix(&full.0), fix(&full.1))
        .input("i", i)
        .input("s", s)
}

fn tilde_recurrence_sides() -> (Poly, Poly) {
    let (g, n) = (genus_poly(), marked_poly());
    let on_family = |p: Poly| p.substitute("g", &g).substitute("n", &n);
    let t = var("t");
    let lhs = on_family(c1_pushforward_l2_poly()) - (&t + int(5)) * on_family(c1_pushforward_l_poly());
    let (i, s) = (var("i"), var("s"));
    let tb = tilde_b_poly();
    let tb_next = tb.substitute("s", &(&s + int(1)));
    let rhs = (int(2) * &g - int(2) * &i - int(2) + &n - &s) * tb - (&n - &s) * tb_next + (&n - &s) * &t;
    (lhs, rhs)
}

/// `[D₁(θ)]`, the degree of the degeneracy class over `T_{1:S}`, as a
/// polynomial in `(s, t)`.
pub fn d1_theta_poly() -> Poly {
    let (s, t) = (var("s"), var("t"));
    let a = t.pow(3) + int(6) * t.pow(2) + int(13) * &t + int(8);
    let b = t.pow(3) + int(4) * t.pow(2) + int(4) * &t - int(3);
    let c = t.pow(3) + int(8) * t.pow(2) + int(29) * &t + int(34);
    (s.pow(2) * a - int(2) * &s * b + c).scale(&half())
}

pub fn d1_theta(s: u32, t: u32) -> Rational {
    at(&d1_theta_poly(), &[("s", s as i64), ("t", t as i64)])
}

fn b1_rhs(s: u32, t: u32) -> Rational {
    let (g, n) = gn_pair(t);
    let (si, ti, g, n) = (s as i64, t as i64, g as i64, n as i64);
    Rational::from_int(ti * (n - si)) + Rational::from_int(2 * g - 4 + n - si) * b1(s, t)
        - Rational::from_int(n - si) * b1(s + 1, t)
}

/// Three-way agreement on `T_{1:S}·Quad`: the degeneracy cubic, the
/// test-curve expansion in the `b_{1:s}` closed forms, and the pairing of
/// [`quad_class`] with `T_{1:{1..s}}`.
pub fn verify_b1_recurrence(s: u32, t: u32) -> Check {
    match quad_class(t) {
        Ok(class) => verify_b1_recurrence_on(&class, s, t),
        Err(e) => Check::new("verify_b1_recurrence").input("s", s).input("t", t).failed(e.to_string()),
    }
}

/// [`verify_b1_recurrence`] against a prebuilt `quad_class(t)`.
pub fn verify_b1_recurrence_on(class: &DivisorClass, s: u32, t: u32) -> Check {
    let base = Check::new("verify_b1_recurrence").input("s", s).input("t", t);
    let (_, n) = gn_pair(t);
    if s == 0 || s > n {
        return base.failed(format!("needs 1 <= s <= n(t) = {n}"));
    }
    let lhs = d1_theta(s, t);
    let rhs = b1_rhs(s, t);
    let pairing = LabelSet::from_labels(&(1..=s).collect::<Vec<_>>())
        .and_then(|set| TestCurve::new(class.space(), 1, set))
        .and_then(|curve| intersect_test_curve(class, &curve));
    match pairing {
        Ok(p) => {
            let pass = lhs == rhs && rhs == p;
            base.values(lhs, rhs, pass).extra("pairing", p.to_string())
        }
        Err(e) => base.failed(e.to_string()),
    }
}

/// The recurrence as an identity in `(s, t)`.
pub fn verify_b1_recurrence_symbolic() -> Check {
    let (s, t) = (var("s"), var("t"));
    let (g, n) = (genus_poly(), marked_poly());
    let b1 = b1_poly();
    let b1_next = b1.substitute("s", &(&s + int(1)));
    let rhs = &t * (&n - &s) + (int(2) * &g - int(4) + &n - &s) * b1 - (&n - &s) * b1_next;
    Check::compare_poly("verify_b1_recurrence_symbolic", d1_theta_poly(), rhs)
}

/// Builds the relation `(8 - t)λ - δ_irr + tψ_p + b_{1:1}ψ_{q'} - b_{1:0}δ_{0:{p,q'}}`
/// on `M̄_{1,2}` with `b_{1:0}`, `b_{1:1}` left as unknowns `b10`, `b11`.
pub fn pic12_relation(t: &Poly) -> Pic12Expr {
    let mut expr = Pic12Expr::default();
    expr.set(Pic12Generator::Lambda, int(8) - t);
    expr.set(Pic12Generator::DeltaIrr, int(-1));
    expr.set(Pic12Generator::PsiP, t.clone());
    expr.set(Pic12Generator::PsiQ, var("b11"));
    expr.set(Pic12Generator::Delta0, -var("b10"));
    expr
}

/// Solves the vanishing of the reduced relation for `(b_{1:0}, b_{1:1})`.
/// `t` may be a constant or the variable `t`.
pub fn solve_pic12(t: &Poly) -> Result<(Poly, Poly)> {
    let (lambda, delta) = pic12_reduce(&pic12_relation(t));
    let mut matrix = Vec::new();
    let mut rhs = Vec::new();
    for row in [lambda, delta] {
        let (c10, rest) = row
            .split_linear("b10")
            .ok_or_else(|| Error::Malformed("relation is not linear in b10".into()))?;
        let (c11, rest) = rest
            .split_linear("b11")
            .ok_or_else(|| Error::Malformed("relation is not linear in b11".into()))?;
        let constant = |p: &Poly| {
            p.as_constant()
                .ok_or_else(|| Error::Malformed(format!("non-constant coefficient {p}")))
        };
        matrix.push(vec![constant(&c10)?, constant(&c11)?]);
        rhs.push(-rest);
    }
    match LinearSystem::new(matrix, rhs)?.solve() {
        Solution::Unique(x) => Ok((x[0].clone(), x[1].clone())),
        Solution::Underdetermined => Err(Error::Underdetermined),
        Solution::Infeasible => Err(Error::Infeasible),
    }
}

/// `(b_{1:0}(t), b_{1:1}(t))` from the relation on `M̄_{1,2}`.
pub fn b_from_pic12(t: u32) -> Result<(Rational, Rational)> {
    let (b10, b11) = solve_pic12(&int(t as i64))?;
    let value = |p: Poly| {
        p.as_constant()
            .ok_or_else(|| Error::Malformed(format!("non-constant solution {p}")))
    };
    Ok((value(b10)?, value(b11)?))
}

/// Known `b` values against `b̃`: the excess `b - b̃` must be `>= 0`.
/// A failing row is flagged, not corrected.
pub fn tilde_vs_known(t: u32) -> Vec<Check> {
    let (_, n) = gn_pair(t);
    let mut out = Vec::new();
    for s in 0..=n {
        let mut known: Vec<(u32, Rational)> = vec![(1, b1(s, t))];
        if s >= 2 {
            known.push((0, b0(s, t).expect("s >= 2")));
        }
        for (i, b) in known {
            let tb = tilde_b(i as i64, s as i64, t as i64);
            let pass = tb <= b;
            out.push(
                Check::new("tilde_vs_known")
                    .input("i", i)
                    .input("s", s)
                    .input("t", t)
                    .values(tb.clone(), b.clone(), pass)
                    .extra("excess", (b - tb).to_string()),
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly_equal;
    use crate::picard::{canonical_index, LabelSet};

    #[test]
    fn family_table() {
        assert_eq!(gn_pair(0), (5, 1));
        assert_eq!(gn_pair(3), (17, 10));
        assert_eq!(gn_pair(6), (38, 28));
    }

    #[test]
    fn balance_at_small_t() {
        // (t+4)(t+5)/2 = 3g - 3 - 2n: 10 at t = 0, 28 at t = 3
        let c = verify_balance(0);
        assert!(c.pass);
        assert_eq!(c.lhs, "10");
        let c = verify_balance(3);
        assert!(c.pass);
        assert_eq!(c.rhs, "28");
        assert!(verify_balance_symbolic().pass);
    }

    #[test]
    fn brute_force_balanced_pairs() {
        assert_eq!(balanced_pairs(12), vec![(5, 1, 0), (8, 3, 1), (12, 6, 2)]);
        assert!(balanced_pairs(4).is_empty());
        let all = balanced_pairs(38);
        assert_eq!(all.len(), 7);
        assert_eq!(*all.last().unwrap(), (38, 28, 6));
    }

    #[test]
    fn closed_form_values() {
        for t in 0..10 {
            assert_eq!(b1(1, t), 4);
            assert_eq!(b1(0, t), Rational::from_int(t as i64 + 4));
        }
        assert_eq!(b0(2, 3).unwrap(), 10);
        assert_eq!(b1(2, 3), 9);
        assert!(b0(1, 3).is_err());
        assert_eq!(tilde_b(1, 2, 1), 5);
    }

    #[test]
    fn symbolic_corollaries() {
        let at_zero = tilde_b_poly().substitute("i", &int(0));
        assert!(poly_equal(&at_zero, &b0_poly()));
        let at_one = tilde_b_poly().substitute("i", &int(1));
        assert!(poly_equal(&(b1_poly() - at_one.clone()), &int(2)));
        assert!(!poly_equal(&at_one, &b1_poly()));
        assert!(poly_equal(&b1_poly().substitute("s", &int(1)), &int(4)));
    }

    #[test]
    fn intersection_numbers() {
        assert_eq!(c1_pushforward_l(0, 1, 5, 1).unwrap(), -8);
        assert_eq!(c1_pushforward_l2(0, 1, 5, 1).unwrap(), -40);
        assert_eq!(c1_pushforward_l(0, 1, 8, 3).unwrap(), -12);
        assert_eq!(c1_pushforward_l2(0, 1, 8, 3).unwrap(), -62);
        assert_eq!(c1_pushforward_l(1, 2, 8, 3).unwrap(), -11);
        assert_eq!(c1_pushforward_l2(1, 2, 8, 3).unwrap(), -10);
        assert!(c1_pushforward_l(2, 2, 8, 3).is_err());
        assert!(c1_pushforward_l2(9, 10, 8, 3).is_err());
    }

    #[test]
    fn porteous_over_tilde_curves() {
        assert_eq!(d1_phi_prime(0, 1, 0).unwrap(), 0);
        assert_eq!(d1_phi_prime(0, 1, 1).unwrap(), 10);
        assert_eq!(d1_phi_prime(1, 2, 1).unwrap(), 56);
        assert!(d1_phi_prime(1, 1, 1).is_err());
    }

    #[test]
    fn tilde_recurrence_spot_values() {
        for (i, s, t, v) in [(0, 1, 1, "10"), (1, 2, 1, "56"), (0, 1, 0, "0")] {
            let c = verify_tilde_recurrence(i, s, t);
            assert!(c.pass, "{c:?}");
            assert_eq!(c.lhs, v);
            assert_eq!(c.rhs, v);
        }
        assert!(verify_tilde_recurrence_symbolic().pass);
        assert!(verify_tilde_recurrence_fixed(2, 5).pass);
    }

    #[test]
    fn degeneracy_cubic() {
        assert_eq!(d1_theta(1, 0), 24);
        assert_eq!(d1_theta(1, 1), 44);
        assert_eq!(d1_theta(2, 1), 80);
    }

    #[test]
    fn b1_recurrence_three_ways() {
        for (s, t, v) in [(1, 0, "24"), (1, 1, "44"), (2, 1, "80")] {
            let c = verify_b1_recurrence(s, t);
            assert!(c.pass, "{c:?}");
            assert_eq!(c.lhs, v);
        }
        assert!(!verify_b1_recurrence(0, 1).pass);
        assert!(verify_b1_recurrence_symbolic().pass);
    }

    #[test]
    fn quad_class_heads() {
        let q3 = quad_class(3).unwrap();
        assert_eq!(q3.lambda(), &Coefficient::exact(5));
        assert_eq!(q3.symmetric_psi(), Some(Coefficient::exact(3)));
        assert_eq!(q3.delta_irr(), &Coefficient::exact(-1));
        let q1 = quad_class(1).unwrap();
        let m = q1.space();
        let idx = canonical_index(&m, 1, LabelSet::from_labels(&[1, 2]).unwrap()).unwrap();
        assert_eq!(q1.boundary(&idx), Coefficient::exact(-7));
        // the mirror (g - 1, S') carries -b_{1:n-|S'|}
        let mirror = canonical_index(&m, 7, LabelSet::from_labels(&[3]).unwrap()).unwrap();
        assert_eq!(q1.boundary(&mirror), Coefficient::exact(-7));
        let deep = canonical_index(&m, 2, LabelSet::empty()).unwrap();
        assert_eq!(q1.boundary(&deep), Coefficient::AtMost((-1).into()));
    }

    #[test]
    fn quad_class_doubling() {
        let q0 = quad_class(0).unwrap();
        let sum = q0.add(&q0).unwrap();
        assert_eq!(sum, q0.scale(&2.into()));
        assert_eq!(sum.lambda(), &Coefficient::exact(16));
    }

    #[test]
    fn quad_class_label_limit() {
        assert!(quad_class(9).is_ok());
        assert!(matches!(quad_class(10), Err(Error::TooManyLabels { .. })));
    }

    #[test]
    fn pic12_solution() {
        assert_eq!(b_from_pic12(0).unwrap(), (4.into(), 4.into()));
        assert_eq!(b_from_pic12(3).unwrap(), (7.into(), 4.into()));
        let (b10, b11) = solve_pic12(&var("t")).unwrap();
        assert_eq!(b10, b10_poly());
        assert_eq!(b11, int(4));
    }

    #[test]
    fn excess_is_never_negative_on_known_values() {
        for t in 0..=4 {
            assert!(tilde_vs_known(t).iter().all(|c| c.pass));
        }
    }
}
