use proptest::prelude::*;
use twistcheck::algebras::qplane;
use twistcheck::ncalg::TensorElement;
use twistcheck::qcalc::{identity_suite, qexp, qexp_inverse, QBase, Variant};
use twistcheck::scalars::QCoeff;

#[test]
fn identity_suite_at_low_order() {
    for c in identity_suite(5, 4).unwrap() {
        assert_eq!(c.residual_terms, 0, "{}", c.name);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, rng_seed: proptest::test_runner::RngSeed::Fixed(7), ..ProptestConfig::default() })]

    #[test]
    fn qexp_inverse_is_inverse(n in -5i64..6, d in 1i64..5, base in prop_oneof![Just(QBase::Q2), Just(QBase::QInv2)]) {
        let p = qplane::<QCoeff>().unwrap();
        let c = QCoeff::from_int(n).mul(&QCoeff::from_int(d).inv().unwrap());
        let x = TensorElement::gen(&p, "x", 5).unwrap().shift(1).scale(&c);
        let y = TensorElement::gen(&p, "y", 5).unwrap().shift(2);
        let u = x.add(&y).unwrap();
        let e = qexp(&u, Variant::Singular, base, &p).unwrap();
        let prod = e.mul(&qexp_inverse(&u, base, &p).unwrap(), &p).unwrap();
        prop_assert_eq!(prod, TensorElement::one(1, 5));
    }
}
