use super::*;
use crate::algebras::{d2, five_term_algebra, line, qplane};
use crate::ncalg::{GenKind, Word};
use crate::scalars::{specialize_q1, QCoeff, Rat};

fn gen<C: Coeff>(p: &Presentation<C>, name: &str, order: usize) -> TensorElement<C> {
    TensorElement::gen(p, name, order).unwrap().shift(1)
}

#[test]
fn exponential_of_zero_is_one() {
    let p = line::<QCoeff>().unwrap();
    let z = TensorElement::zero(1, 5);
    assert!(qexp(&z, Variant::Regular, QBase::Q2, &p).unwrap().is_one());
}

#[test]
fn second_order_expansion() {
    let p = line::<QCoeff>().unwrap();
    let z = gen(&p, "z", 2);
    let e = qexp(&z, Variant::Regular, QBase::Q2, &p).unwrap();
    let inv = QCoeff::one().add(&QCoeff::q_pow(2, 1)).inv().unwrap();
    let want = TensorElement::one(1, 2)
        .add(&z)
        .unwrap()
        .add(&z.mul(&z, &p).unwrap().scale(&inv))
        .unwrap();
    assert_eq!(e, want);
}

#[test]
fn zero_valuation_is_rejected() {
    let p = line::<QCoeff>().unwrap();
    let z = TensorElement::gen(&p, "z", 3).unwrap();
    assert!(matches!(
        qexp(&z, Variant::Regular, QBase::Q2, &p),
        Err(QcalcError::ZeroOrderArgument)
    ));
}

#[test]
fn singular_exponential_inverse() {
    let p = qplane::<QCoeff>().unwrap();
    let x = gen(&p, "x", 8).add(&gen(&p, "y", 8).shift(1)).unwrap();
    for base in [QBase::Q2, QBase::QInv2] {
        let e = qexp(&x, Variant::Singular, base, &p).unwrap();
        let ei = qexp_inverse(&x, base, &p).unwrap();
        assert!(e.mul(&ei, &p).unwrap().is_one());
        assert!(ei.mul(&e, &p).unwrap().is_one());
    }
}

#[test]
fn merge_in_the_q_plane() {
    let p = qplane::<QCoeff>().unwrap();
    let (x, y) = (gen(&p, "x", 8), gen(&p, "y", 8));
    // yx = q²xy is [y, x]_{q²} = 0
    let merged = qexp_merge(&y, &x, &p).unwrap();
    assert_eq!(merged.order(), 8);
    assert!(matches!(
        qexp_merge(&x, &y, &p),
        Err(QcalcError::Hypothesis(_))
    ));
    assert!(matches!(
        qexp_merge(&x, &x, &p),
        Err(QcalcError::Hypothesis(_))
    ));
}

#[test]
fn classical_exponentials_add() {
    let p = qplane::<Rat>().unwrap();
    let (x, y) = (gen(&p, "x", 6), gen(&p, "y", 6));
    let lhs = exp(&x.add(&y).unwrap(), &p).unwrap();
    assert_eq!(
        lhs,
        exp(&x, &p).unwrap().mul(&exp(&y, &p).unwrap(), &p).unwrap()
    );
    assert_eq!(
        lhs,
        qexp(&x.add(&y).unwrap(), Variant::Regular, QBase::Q2, &p).unwrap()
    );
}

#[test]
fn log_inverts_exp() {
    let p = line::<Rat>().unwrap();
    let z = gen(&p, "z", 7);
    let e = exp(&z, &p).unwrap();
    let back = log1p(&e.sub(&TensorElement::one(1, 7)).unwrap(), &p).unwrap();
    assert_eq!(back, z);
}

#[test]
fn five_term_identity() {
    let p = five_term_algebra::<QCoeff>().unwrap();
    let (u, v) = (gen(&p, "u", 6), gen(&p, "v", 6));
    let ft = five_term_flip(&u, &v, &p).unwrap();
    assert!(ft.residual.is_zero());
    assert!(!ft.lhs.is_one());
}

#[test]
fn five_term_commuting_and_violated() {
    let mut p = Presentation::<QCoeff>::new(
        "comm",
        1,
        &[("a", GenKind::Ordinary), ("b", GenKind::Ordinary)],
    )
    .unwrap();
    let (a, b) = (p.gen("a").unwrap(), p.gen("b").unwrap());
    p.add_rule(
        b,
        a,
        vec![(
            Word::from_letters(p.parse_word("a b").unwrap()),
            ZetaSeries::one(crate::ncalg::RULE_ORDER),
        )],
    )
    .unwrap();
    let ft = five_term_flip(&gen(&p, "a", 5), &gen(&p, "b", 5), &p).unwrap();
    assert!(ft.residual.is_zero());
    let q = qplane::<QCoeff>().unwrap();
    assert!(matches!(
        five_term_flip(&gen(&q, "x", 5), &gen(&q, "y", 5), &q),
        Err(QcalcError::Hypothesis(_))
    ));
}

fn heine_rhs(
    u: &TensorElement<QCoeff>,
    g: &TensorElement<QCoeff>,
    base: QBase,
    p: &Presentation<QCoeff>,
) -> TensorElement<QCoeff> {
    // (1−u)^{(v)}_{q^{±2}} = e(u)·e(u q^{∓2v})⁻¹, with G = q^{−2v}
    let shift = match base {
        QBase::Q2 => g.clone(),
        QBase::QInv2 => g.inverse(p).unwrap(),
    };
    let e = qexp(u, Variant::Singular, base, p).unwrap();
    e.mul(
        &qexp_inverse(&u.mul(&shift, p).unwrap(), base, p).unwrap(),
        p,
    )
    .unwrap()
}

#[test]
fn heine_with_scalar_exponent() {
    let p = line::<QCoeff>().unwrap();
    let u = gen(&p, "z", 6);
    for (k, base) in [
        (-6, QBase::Q2),
        (1, QBase::Q2),
        (4, QBase::QInv2),
        (-3, QBase::QInv2),
    ] {
        let g = TensorElement::scalar(1, ZetaSeries::constant(QCoeff::q_pow(k, 1), 6));
        let f = QPowerFactor {
            u: u.clone(),
            exponent: PowerExponent::GroupLike(g.clone()),
            base,
        };
        assert_eq!(
            qpow(&f, &p).unwrap(),
            heine_rhs(&u, &g, base, &p),
            "k={k} {base:?}"
        );
    }
}

#[test]
fn heine_with_group_like_generator() {
    let p = d2().unwrap();
    let o = 6;
    let u =
        TensorElement::from_leg_words(&p, &["", "ed"], ZetaSeries::monomial(QCoeff::one(), 1, o))
            .unwrap();
    let g = TensorElement::from_leg_words(&p, &["k", ""], ZetaSeries::one(o)).unwrap();
    for base in [QBase::Q2, QBase::QInv2] {
        let f = QPowerFactor {
            u: u.clone(),
            exponent: PowerExponent::GroupLike(g.clone()),
            base,
        };
        assert_eq!(qpow(&f, &p).unwrap(), heine_rhs(&u, &g, base, &p));
    }
}

#[test]
fn degenerate_q_powers() {
    let p = d2().unwrap();
    let g = TensorElement::from_leg_words(&p, &["k", ""], ZetaSeries::one(4)).unwrap();
    let f = QPowerFactor {
        u: TensorElement::zero(2, 4),
        exponent: PowerExponent::GroupLike(g),
        base: QBase::Q2,
    };
    assert!(qpow(&f, &p).unwrap().is_one());
    let u =
        TensorElement::from_leg_words(&p, &["", "ed"], ZetaSeries::monomial(QCoeff::one(), 1, 4))
            .unwrap();
    let f = QPowerFactor {
        u,
        exponent: PowerExponent::GroupLike(TensorElement::one(2, 4)),
        base: QBase::Q2,
    };
    assert!(qpow(&f, &p).unwrap().is_one());
}

#[test]
fn additive_exponent_is_the_binomial_series() {
    let p = line::<Rat>().unwrap();
    let u = gen(&p, "z", 6);
    let one = TensorElement::one(1, 6);
    let cube = QPowerFactor {
        u: u.clone(),
        exponent: PowerExponent::Additive(one.scale(&Rat::from_int(3))),
        base: QBase::Q2,
    };
    let m = one.sub(&u).unwrap();
    assert_eq!(
        qpow(&cube, &p).unwrap(),
        m.mul(&m, &p).unwrap().mul(&m, &p).unwrap()
    );
    let half = QPowerFactor {
        u,
        exponent: PowerExponent::Additive(one.scale(&Rat::from_int(2).inv().unwrap())),
        base: QBase::Q2,
    };
    let h = qpow(&half, &p).unwrap();
    assert_eq!(h.mul(&h, &p).unwrap(), m);
}

#[test]
fn q_exponential_specialises_to_exp() {
    let pq = line::<QCoeff>().unwrap();
    let pr = line::<Rat>().unwrap();
    let e = qexp(&gen(&pq, "z", 7), Variant::Regular, QBase::Q2, &pq).unwrap();
    let spec = e.try_map_coeffs(specialize_q1).unwrap();
    assert_eq!(spec, exp(&gen(&pr, "z", 7), &pr).unwrap());
}

#[test]
fn identity_suite_passes() {
    let r = identity_suite(8, 6).unwrap();
    assert_eq!(r.len(), 4);
    assert!(r.iter().all(|c| c.residual_terms == 0), "{r:?}");
}
