use liebial::algebra::{Covector, LieAlgebra, Vector};
use liebial::bialgebra::{self, Cocycle};
use liebial::io::{AlgebraSpec, BivectorSpec, Document};
use liebial::multivector::{self, Bivector};
use liebial::oracle;
use liebial::oscillator::{build_oscillator, OscillatorAlgebra};
use liebial::scalar::{self, Scalar};
use liebial::verify::test_algebra;
use proptest::prelude::*;

fn small() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(p, q)| scalar::ratio(p, q))
}

fn scalars(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(small(), n)
}

fn bivector(d: usize) -> impl Strategy<Value = Bivector> {
    scalars(d * (d - 1) / 2).prop_map(move |c| Bivector::from_upper_coordinates(d, &c))
}

/// An algebra of dimension 3..=7 with a bivector on it.
fn algebra_and_bivector() -> impl Strategy<Value = (LieAlgebra, Bivector)> {
    (3usize..=7).prop_flat_map(|d| (Just(test_algebra(d)), bivector(d)))
}

fn oscillator() -> impl Strategy<Value = OscillatorAlgebra> {
    prop_oneof![Just(vec![1]), Just(vec![1, 2]), Just(vec![1, 3]), Just(vec![2, 3])].prop_map(|l| {
        let l: Vec<Scalar> = l.into_iter().map(scalar::int).collect();
        build_oscillator(&l).unwrap()
    })
}

fn oscillator_and_bivectors() -> impl Strategy<Value = (OscillatorAlgebra, Bivector, Bivector)> {
    oscillator().prop_flat_map(|g| {
        let d = g.dim();
        (Just(g), bivector(d), bivector(d))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sharp_reproduces_pairing((r, a, b) in (2usize..=6).prop_flat_map(|d| (bivector(d), scalars(d), scalars(d)))) {
        let (a, b) = (Covector::new(a), Covector::new(b));
        prop_assert_eq!(r.pair(&a, &b), b.pair(&r.sharp(&a)));
        prop_assert_eq!(r.pair(&a, &b), -r.pair(&b, &a));
    }

    #[test]
    fn schouten_agrees_with_decomposable_expansion((g, r) in algebra_and_bivector()) {
        prop_assert_eq!(multivector::schouten_self(&g, &r), oracle::schouten_by_decomposables(&g, &r));
    }

    #[test]
    fn polarized_schouten_is_bilinear_and_symmetric(
        (g, r1, r2) in (3usize..=6).prop_flat_map(|d| (Just(test_algebra(d)), bivector(d), bivector(d))),
        c in small(),
    ) {
        let s12 = multivector::schouten_polarized(&g, &r1, &r2);
        prop_assert_eq!(&s12, &multivector::schouten_polarized(&g, &r2, &r1));
        prop_assert_eq!(multivector::schouten_polarized(&g, &r1, &r2.scale(&c)), s12.scale(&c));
        prop_assert_eq!(multivector::schouten_polarized(&g, &r1, &r1), multivector::schouten_self(&g, &r1));
    }

    #[test]
    fn ad_dagger_is_a_representation(
        (g, r, u, v) in (3usize..=6).prop_flat_map(|d| (Just(test_algebra(d)), bivector(d), scalars(d), scalars(d))),
    ) {
        let (u, v) = (Vector::new(u), Vector::new(v));
        let ad = |x: &Vector, r: &Bivector| multivector::ad_dag_bivector(&g, x, r);
        let lhs = ad(&g.bracket(&u, &v), &r);
        let rhs = &ad(&u, &ad(&v, &r)) - &ad(&v, &ad(&u, &r));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn omega_pairing_is_symmetric((g, r1, r2) in oscillator_and_bivectors()) {
        prop_assert_eq!(g.omega_pair(&r1, &r2), g.omega_pair(&r2, &r1));
    }

    #[test]
    fn j_a_is_a_derivation_commuting_with_ad_em1(
        (g, a) in oscillator().prop_flat_map(|g| { let n = g.n(); (Just(g), scalars(n)) }),
    ) {
        let j = g.j_a(&a).unwrap();
        prop_assert!(g.algebra().is_derivation(&j.map));
        prop_assert!(j.map.commutator(&g.ad_em1()).is_zero());
    }

    #[test]
    fn coboundary_dual_matches_r_bracket((g, r) in algebra_and_bivector()) {
        let xi = Cocycle::coboundary(&g, &r);
        prop_assert!(bialgebra::is_cocycle(&g, &xi));
        prop_assert_eq!(
            bialgebra::cocycle_bracket_table(&g, &xi).unwrap(),
            bialgebra::r_bracket_table(&g, &r).unwrap()
        );
    }

    #[test]
    fn documents_round_trip((g, r, _) in oscillator_and_bivectors()) {
        let mut doc = Document::new(AlgebraSpec::oscillator(g.lambda()));
        doc.bivector = Some(BivectorSpec::from_bivector(&r));
        let text = doc.to_canonical_string();
        let back = Document::from_json(&text).unwrap();
        prop_assert_eq!(back.to_canonical_string(), text);
        let loaded = back.algebra.load().unwrap();
        prop_assert_eq!(back.bivector(&loaded).unwrap(), Some(r));
    }

    #[test]
    fn scalars_round_trip_through_text(x in small()) {
        prop_assert_eq!(scalar::parse(&scalar::format(&x)).unwrap(), x);
    }
}
