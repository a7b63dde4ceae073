use super::*;
use crate::hopf::cocycle_residual;
use crate::ncalg::{GenId, Presentation, TensorElement};
use crate::scalars::{Coeff, QCoeff, Rat};

#[test]
fn w2_first_order() {
    let ctx = d2_context().unwrap();
    let w = build_w2(&ctx, 1).unwrap().expand(1).unwrap();
    let c = QCoeff::one().sub(&QCoeff::q_pow(2, 1)).inv().unwrap();
    let expect = ctx.el(&[(QCoeff::one(), 0, ""), (c, 1, "ed")], 1).unwrap();
    assert_eq!(*w, expect);
}

#[test]
fn f2_trivial_is_a_twist() {
    let ctx = d2_context().unwrap();
    let f = build_f2_trivial(&ctx, 4).unwrap();
    assert!(f.expand(4).unwrap().zeta_part(0).is_one());
    assert!(cocycle_residual(&f, &ctx.table, 4).unwrap().is_zero());
}

#[test]
fn phi2_starts_at_third_order() {
    let ctx = d2_context().unwrap();
    let p = build_phi2(&ctx, 4).unwrap().expand(4).unwrap();
    assert_eq!(p.truncate(2).len(), 1);
    assert!(!p.zeta_part(3).is_zero());
}

#[test]
fn factorization_n2() {
    let r = verify_factorization_2(6).unwrap();
    assert!(r.is_zero(), "{} terms", r.len());
}

#[test]
fn factorization_n2_mutated() {
    let ctx = d2_context().unwrap();
    let o = 4;
    let r = affine2::factorization_residual(
        &ctx,
        &build_w2(&ctx, o).unwrap(),
        &affine2::phi2_with_sign(&ctx, o, 1).unwrap(),
        &build_f2_aff(&ctx, o).unwrap(),
        o,
    )
    .unwrap();
    assert_eq!(r.valuation(), Some(3));
}

#[test]
fn f2_aff_is_a_twist() {
    let ctx = d2_context().unwrap();
    let f = build_f2_aff(&ctx, 5).unwrap();
    assert!(cocycle_residual(&f, &ctx.table, 5).unwrap().is_zero());
}

#[test]
fn lambda3_first_order() {
    let ctx = d3_context().unwrap();
    let [_, _, l3] = build_lambdas(&ctx, 1).unwrap();
    let q = |k| QCoeff::q_pow(k, 3);
    let expect = ctx
        .el2(
            &[
                (QCoeff::one(), 0, "", ""),
                (q(1).sub(&q(-1)).neg(), 1, "ea", "emb"),
            ],
            1,
        )
        .unwrap();
    assert_eq!(*l3.expand(1).unwrap(), expect);
}

#[test]
fn f3_aff_forms_agree() {
    let ctx = d3_context().unwrap();
    let a = build_f3_aff(&ctx, 3).unwrap().expand(3).unwrap();
    let b = build_f3_aff_proof_form(&ctx, 3, "emb")
        .unwrap()
        .expand(3)
        .unwrap();
    let d = a.sub(&b).unwrap();
    assert!(d.is_zero(), "{}", d.render(&ctx.pres));
}

#[test]
fn factorization_n3() {
    assert!(verify_factorization_3(3, W3Variant::Printed)
        .unwrap()
        .is_zero());
    assert_eq!(
        verify_factorization_3(3, W3Variant::TwoFactor)
            .unwrap()
            .valuation(),
        Some(2)
    );
}

#[test]
fn f3_aff_is_a_twist() {
    let ctx = d3_context().unwrap();
    let f = build_f3_aff(&ctx, 3).unwrap();
    assert!(cocycle_residual(&f, &ctx.table, 3).unwrap().is_zero());
}

#[test]
fn factorization_n3_order4() {
    assert!(verify_factorization_3(4, W3Variant::Printed)
        .unwrap()
        .is_zero());
}

/// `b·a` in the A-form alphabet specialises to `b̄·ā`, for every rewriting rule.
fn rules_specialize(basis: &AFormBasis, to: &Presentation<Rat>, map: &Specialization) {
    let a = basis.target();
    let bar = |g: GenId| {
        map.letters
            .iter()
            .find(|(x, _)| *x == a.gen_name(g))
            .unwrap()
            .1
    };
    for rule in a.rules() {
        let (b, c) = rule.lhs;
        let prod = ctx_gen(a, b).mul(&ctx_gen(a, c), a).unwrap();
        let s = specialize(&prod, a, to, map).unwrap();
        let expect = TensorElement::gen(to, bar(b), 4)
            .unwrap()
            .mul(&TensorElement::gen(to, bar(c), 4).unwrap(), to)
            .unwrap();
        assert_eq!(s, expect, "rule {} {}", a.gen_name(b), a.gen_name(c));
    }
}

fn ctx_gen(p: &Presentation<QCoeff>, g: GenId) -> TensorElement<QCoeff> {
    TensorElement::gen(p, p.gen_name(g), 4).unwrap()
}

#[test]
fn f2a_rules_specialize_to_f2bar() {
    let ctx = d2_context().unwrap();
    let b = f2a_basis(ctx.pres.clone()).unwrap();
    let bar = f2bar_context().unwrap();
    rules_specialize(&b, &bar.pres, &f2_specialization());
}

#[test]
fn f3a_rules_specialize_to_f3bar() {
    let ctx = d3_context().unwrap();
    let b = f3a_basis(ctx.pres.clone()).unwrap();
    let bar = f3bar_context().unwrap();
    rules_specialize(&b, &bar.pres, &f3_specialization());
}

#[test]
fn aform_round_trip() {
    let ctx = d3_context().unwrap();
    let b = f3a_basis(ctx.pres.clone()).unwrap();
    let x = build_f3_aff(&ctx, 2).unwrap().expand(2).unwrap();
    let a = b.from_source_legs(&x).unwrap();
    assert_eq!(b.to_source(&a).unwrap(), *x);
}

#[test]
fn specialization_n2() {
    let r = build_f_aff_rational(2, 4).unwrap();
    let bar = f2bar_context().unwrap();
    let oracle = build_f2bar_aff(&bar, 4).unwrap().expand(4).unwrap();
    let d = r.specialized.sub(&oracle).unwrap();
    assert!(d.is_zero(), "{}", d.render(&bar.pres));
}

#[test]
fn specialization_n3() {
    let r = build_f_aff_rational(3, 3).unwrap();
    let bar = f3bar_context().unwrap();
    let oracle = build_f3bar_aff(&bar, 3).unwrap().expand(3).unwrap();
    let d = r.specialized.sub(&oracle).unwrap();
    assert!(d.is_zero(), "{}", d.render(&bar.pres));
}

#[test]
fn classical_aff_cocycles() {
    let c2 = f2bar_context().unwrap();
    assert!(
        cocycle_residual(&build_f2bar_aff(&c2, 5).unwrap(), &c2.table, 5)
            .unwrap()
            .is_zero()
    );
    let c3 = f3bar_context().unwrap();
    assert!(
        cocycle_residual(&build_f3bar_aff(&c3, 4).unwrap(), &c3.table, 4)
            .unwrap()
            .is_zero()
    );
}

#[test]
fn bare_root_vector_has_a_pole() {
    let ctx = d2_context().unwrap();
    let b = f2a_basis(ctx.pres.clone()).unwrap();
    let em = b
        .from_source(&ctx.el(&[(QCoeff::one(), 0, "em")], 2).unwrap())
        .unwrap();
    let bar = f2bar_context().unwrap();
    assert!(matches!(
        specialize(&em, b.target(), &bar.pres, &f2_specialization()),
        Err(TwistError::PoleAtOne(_))
    ));
}

#[test]
fn psi3_first_order() {
    let u = usl_context(3).unwrap();
    let p = build_psi(&u, 3, 1).unwrap().expand(1).unwrap();
    let expect = u
        .el2(
            &[
                (Rat::one(), 0, "", ""),
                (Rat::one(), 1, "E32", "E13"),
                (Rat::new(-1, 1), 1, "D1", "E12"),
            ],
            1,
        )
        .unwrap();
    assert_eq!(*p, expect);
}

#[test]
fn psi_cocycles() {
    for n in [3, 4] {
        let u = usl_context(n).unwrap();
        let p = build_psi(&u, n, 4).unwrap();
        assert!(
            cocycle_residual(&p, &u.table, 4).unwrap().is_zero(),
            "n = {n}"
        );
    }
}

#[test]
fn iota2_table() {
    let m = build_iota(IotaVariant::Iota2, 4).unwrap();
    let psi = build_psi(&m.target, 3, 4).unwrap();
    assert!(verify_iota(&m, &psi).unwrap().is_empty());
    let m = build_iota(IotaVariant::Iota2Printed, 4).unwrap();
    let names: Vec<_> = verify_iota(&m, &psi)
        .unwrap()
        .into_iter()
        .map(|f| f.check)
        .collect();
    assert_eq!(
        names,
        [
            "relation H f0",
            "relation f1 H",
            "coproduct H",
            "coproduct f1"
        ]
    );
}

#[test]
fn iota3_family_tables() {
    for v in [
        IotaVariant::Iota3,
        IotaVariant::Iota3Family(Rat::one()),
        IotaVariant::Iota3Family(Rat::new(2, 1)),
        IotaVariant::Iota3Family(Rat::new(1, 3)),
    ] {
        let m = build_iota(v.clone(), 3).unwrap();
        let psi = build_psi(&m.target, 4, 3).unwrap();
        let rep = verify_iota(&m, &psi).unwrap();
        assert!(
            rep.is_empty(),
            "{v:?}: {:?}",
            rep.iter().map(|f| &f.check).collect::<Vec<_>>()
        );
    }
}

#[test]
fn iota3_printed_is_family_member() {
    let a = build_iota(IotaVariant::Iota3, 3).unwrap();
    let b = build_iota(IotaVariant::Iota3Family(Rat::new(-1, 1)), 3).unwrap();
    for g in ["Ha", "Hb", "f0", "f1", "f2", "f3", "ea", "em"] {
        assert_eq!(a.image(g).unwrap(), b.image(g).unwrap(), "{g}");
    }
}

#[test]
fn fp4_matches_display() {
    let m = build_iota(IotaVariant::Iota3, 4).unwrap();
    let a = build_fp(&m, 4).unwrap().expand(4).unwrap();
    let b = build_fp4_display(&m.target, 4).unwrap().expand(4).unwrap();
    let d = a.sub(&b).unwrap();
    assert!(d.is_zero(), "{}", d.render(&m.target.pres));
}

#[test]
fn fp_cocycles_and_limits() {
    let cases = [
        (3, Rat::one()),
        (4, Rat::one()),
        (4, Rat::new(2, 1)),
        (4, Rat::new(-1, 1)),
        (4, Rat::new(1, 3)),
    ];
    for (n, a) in cases {
        let m = iota_for_r(n, &a, 4).unwrap();
        let f = build_fp(&m, 4).unwrap();
        assert!(
            cocycle_residual(&f, &m.target.table, 4).unwrap().is_zero(),
            "n={n} a={a:?}"
        );
        let r = build_rp(&f, 2).unwrap();
        assert!(r.zeta_part(0).is_one());
        let c = classical_r(&m.target.pres, n, &a).unwrap();
        assert_eq!(
            r.zeta_coefficient(1),
            c.zeta_coefficient(0),
            "n={n} a={a:?}"
        );
    }
}

#[test]
fn printed_iota3_gives_printed_r() {
    let m = build_iota(IotaVariant::Iota3, 2).unwrap();
    let r = build_rp(&build_fp(&m, 2).unwrap(), 2).unwrap();
    assert_eq!(
        r.zeta_coefficient(1),
        classical_r(&m.target.pres, 4, &Rat::one())
            .unwrap()
            .zeta_coefficient(0)
    );
}

#[test]
fn classical_r_n3_has_three_wedges() {
    let ctx = usl_context(3).unwrap();
    let r = classical_r(&ctx.pres, 3, &Rat::one()).unwrap();
    let expect = ctx
        .el2(
            &[
                (Rat::one(), 0, "D1", "E12"),
                (Rat::one(), 0, "D2", "E23"),
                (Rat::one(), 0, "E13", "E32"),
            ],
            0,
        )
        .unwrap();
    assert_eq!(r, expect.sub(&expect.swap().unwrap()).unwrap());
}

#[test]
fn errata_registry_parses() {
    let e = errata();
    assert!(e
        .iter()
        .any(|x| x.check == "iota:n=3" && x.corrected.contains("D₂")));
    assert!(e
        .iter()
        .all(|x| !x.location.is_empty() && x.printed != x.corrected));
}
