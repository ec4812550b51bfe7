use std::sync::OnceLock;

use cobord_core::partition::partitions;
use cobord_core::series::antisymmetric_pair;
use cobord_core::specialize::phi_w;
use cobord_core::{CobordismClass, Context, GradedPoly, Monomial, Rational, Series1};
use num_traits::Zero;
use proptest::prelude::*;

fn ctx() -> &'static Context {
    static CTX: OnceLock<Context> = OnceLock::new();
    CTX.get_or_init(|| Context::new(8).unwrap())
}

fn rat() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

/// A homogeneous class of weight `n` with small rational coordinates.
fn class_of(n: usize) -> impl Strategy<Value = CobordismClass> {
    let parts = partitions(n);
    proptest::collection::vec(rat(), parts.len()).prop_map(move |coeffs| {
        let poly = GradedPoly::from_terms(
            parts
                .iter()
                .zip(coeffs)
                .map(|(l, c)| (Monomial::from_parts(l.parts()), c)),
            8,
        );
        CobordismClass::with_weight(poly, n).unwrap()
    })
}

/// A W class of weight `n`: a random combination of the W basis.
fn w_class_of(n: usize) -> impl Strategy<Value = CobordismClass> {
    let basis = ctx().chern().unwrap().w_basis(n).unwrap();
    proptest::collection::vec(-3i64..=3, basis.len()).prop_map(move |cs| {
        basis
            .iter()
            .zip(cs)
            .fold(CobordismClass::zero(n, 8), |acc, (b, c)| {
                acc.add(&b.scale(&Rational::from_integer(c.into())))
                    .unwrap()
            })
    })
}

fn series_with_unit_linear(order: usize) -> impl Strategy<Value = Series1> {
    proptest::collection::vec(rat(), order - 1).prop_map(move |tail| {
        let mut coeffs = vec![GradedPoly::zero(8), GradedPoly::one(8)];
        coeffs.extend(tail.into_iter().map(|c| GradedPoly::constant(c, 8)));
        Series1::from_coeffs(coeffs, order, 8)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reversion_is_an_involution(s in series_with_unit_linear(7)) {
        let r = s.reversion().unwrap();
        prop_assert_eq!(r.reversion().unwrap(), s.clone());
        prop_assert_eq!(Series1::compose(&r, &s).unwrap(), Series1::x(7, 8));
    }

    #[test]
    fn divide_then_multiply(s in series_with_unit_linear(6)) {
        let pair = antisymmetric_pair(&s.shift_down().unwrap());
        let num = ctx().fgl().unwrap().series().truncate(6).mul(&pair);
        let q = num.divide(&pair).unwrap();
        prop_assert_eq!(q.mul_to_order(&pair, q.order() + 1), num.truncate(q.order() + 1));
    }

    #[test]
    fn chern_round_trip(z in (1usize..=8).prop_flat_map(class_of)) {
        let e = ctx().chern().unwrap();
        prop_assert_eq!(e.class_from_chern(&e.chern_vector(&z).unwrap()).unwrap(), z);
    }

    #[test]
    fn boundary_is_linear(a in class_of(4), b in class_of(4), c in rat()) {
        let e = ctx().chern().unwrap();
        let lhs = e.boundary(&a.add(&b.scale(&c)).unwrap()).unwrap();
        let rhs = e.boundary(&a).unwrap().add(&e.boundary(&b).unwrap().scale(&c)).unwrap();
        prop_assert_eq!(lhs.weight(), 3);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn star_is_commutative_and_closed(a in w_class_of(3), b in w_class_of(4)) {
        let c = ctx();
        let ab = c.star(&a, &b).unwrap();
        prop_assert!(c.chern().unwrap().is_w_class(&ab).unwrap());
        prop_assert_eq!(ab, c.star(&b, &a).unwrap());
    }

    #[test]
    fn star_is_associative(a in w_class_of(1), b in w_class_of(2), d in w_class_of(3)) {
        let c = ctx();
        let left = c.star(&c.star(&a, &b).unwrap(), &d).unwrap();
        let right = c.star(&a, &c.star(&b, &d).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn phi_w_is_multiplicative(a in w_class_of(3), b in w_class_of(4)) {
        let c = ctx();
        let lhs = phi_w(c, &c.star(&a, &b).unwrap()).unwrap();
        let rhs = &phi_w(c, &a).unwrap() * &phi_w(c, &b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn decomposables_have_zero_s_number() {
    let e = ctx().chern().unwrap();
    for n in 2..=8 {
        for l in partitions(n).into_iter().filter(|l| l.len() >= 2) {
            let z = CobordismClass::with_weight(
                GradedPoly::term(
                    Monomial::from_parts(l.parts()),
                    Rational::from_integer(1.into()),
                    8,
                ),
                n,
            )
            .unwrap();
            assert!(e.s_number(&z).unwrap().is_zero(), "{l}");
        }
        let pn = CobordismClass::with_weight(GradedPoly::var(n, 8), n).unwrap();
        assert_eq!(
            e.s_number(&pn).unwrap(),
            Rational::from_integer((n as i64 + 1).into())
        );
    }
}

#[test]
fn universal_law_is_graded_and_symmetric() {
    let f = ctx().fgl().unwrap();
    f.series().check_grading(-1).unwrap();
    assert_eq!(f.series(), &f.series().swap());
    for ((i, j), _) in f.series().terms() {
        assert!(i + j <= 9);
    }
    let w = f.w();
    for i in 1..=w.order() {
        assert_eq!(w.coeff(i), &f.coeff(1, i).unwrap());
    }
}

#[test]
fn universal_law_survives_division_by_its_pair() {
    let f = ctx().fgl().unwrap();
    let pair = antisymmetric_pair(f.w());
    let q = f.series().mul(&pair).divide(&pair).unwrap();
    assert!(q.order() >= 7);
    assert_eq!(q, f.series().truncate(q.order()));
}
