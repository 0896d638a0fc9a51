use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quadrank_core::algebra::{apply, LinearSystem};
use quadrank_core::picard::{deserialize, serialize};
use quadrank_core::verify::random_class;
use quadrank_core::{canonical_index, intersect_test_curve, LabelSet, Poly, Rational, Space, TestCurve};

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(p, q)| Rational::new(p, q))
}

fn label_set(n: u32) -> impl Strategy<Value = LabelSet> {
    proptest::collection::vec(any::<bool>(), n as usize).prop_map(|bits| {
        let labels: Vec<u32> = (1u32..).zip(bits).filter(|(_, b)| *b).map(|(l, _)| l).collect();
        LabelSet::from_labels(&labels).expect("labels in range")
    })
}

/// A polynomial in `s` and `t` of degree at most 2 in each.
fn poly() -> impl Strategy<Value = Poly> {
    proptest::collection::vec(-9i64..9, 9).prop_map(|cs| {
        let (s, t) = (Poly::var("s"), Poly::var("t"));
        let mut p = Poly::zero();
        for (k, c) in cs.into_iter().enumerate() {
            p = p + (s.pow(k as u32 / 3) * t.pow(k as u32 % 3)).scale(&c.into());
        }
        p
    })
}

fn stable_space() -> impl Strategy<Value = Space> {
    (0u32..10, 0u32..7).prop_filter_map("unstable", |(g, n)| Space::new(g, n).ok())
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip().unwrap(), Rational::one());
        } else {
            prop_assert!(a.recip().is_err());
        }
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn poly_equality_matches_evaluation(p in poly(), q in poly(), s in rational(), t in rational()) {
        let at = |x: &Poly| x.eval_at(&[("s", s.clone()), ("t", t.clone())]).unwrap();
        prop_assert_eq!(at(&(&p * &q)), at(&p) * at(&q));
        prop_assert_eq!(at(&(&p - &q)), at(&p) - at(&q));
        prop_assert!((&p - &p).is_zero());
        if p == q {
            prop_assert_eq!(at(&p), at(&q));
        }
        let sub = p.substitute("t", &Poly::constant(t.clone()));
        prop_assert_eq!(sub.eval_at(&[("s", s.clone())]).unwrap(), at(&p));
    }

    #[test]
    fn solver_reproduces_rhs(entries in proptest::collection::vec(-6i64..6, 9), rhs in proptest::collection::vec(rational(), 3)) {
        let matrix: Vec<Vec<Rational>> = entries.chunks(3).map(|r| r.iter().map(|&v| v.into()).collect()).collect();
        let sys = LinearSystem::new(matrix.clone(), rhs.clone()).unwrap();
        if let Some(x) = sys.solve().unique() {
            prop_assert_eq!(apply(&matrix, &x), rhs);
        }
    }

    #[test]
    fn canonical_index_is_an_involution((space, i, set) in stable_space().prop_flat_map(|sp| (Just(sp), 0..=sp.g(), label_set(sp.n())))) {
        if let Ok(idx) = canonical_index(&space, i, set) {
            let again = canonical_index(&space, idx.genus(), idx.set()).unwrap();
            prop_assert_eq!(&again, &idx);
            let mirror = canonical_index(&space, space.g() - i, set.complement(space.n())).unwrap();
            prop_assert_eq!(mirror, idx);
        } else {
            prop_assert!(canonical_index(&space, space.g() - i, set.complement(space.n())).is_err());
        }
    }

    #[test]
    fn pairing_is_linear(
        (space, i, set) in stable_space().prop_flat_map(|sp| (Just(sp), 0..=sp.g(), label_set(sp.n()))),
        seed in any::<u64>(),
        a in rational(),
        b in rational(),
    ) {
        let Ok(curve) = TestCurve::new(space, i, set) else { return Ok(()) };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (random_class(&mut rng, space), random_class(&mut rng, space));
        let combo = x.scale(&a).add(&y.scale(&b)).unwrap();
        let lhs = intersect_test_curve(&combo, &curve).unwrap();
        let rhs = &a * &intersect_test_curve(&x, &curve).unwrap() + &b * &intersect_test_curve(&y, &curve).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_round_trip(space in stable_space(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let class = random_class(&mut rng, space);
        let text = serialize(&class);
        prop_assert_eq!(deserialize(&text).unwrap(), class);
    }
}
