use super::*;
use crate::algebras::usl;
use crate::scalars::{Coeff, Rat};
use crate::twists::{build_fp, build_psi, classical_r, iota_for_r, usl_context};
use num_rational::BigRational;

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn fundamental_cartan_entries() {
    let v3 = fundamental_rep(3).unwrap();
    let d1 = v3.image("D1").unwrap();
    assert_eq!((0..3).map(|i| d1.get(i, i).coeff(0)).collect::<Vec<_>>(), [r(2, 3), r(-1, 3), r(-1, 3)]);
    let v4 = fundamental_rep(4).unwrap();
    let d3 = v4.image("D3").unwrap();
    assert_eq!((0..4).map(|i| d3.get(i, i).coeff(0)).collect::<Vec<_>>(), [r(1, 4), r(1, 4), r(1, 4), r(-3, 4)]);
    assert!(d3.trace().is_zero());
}

#[test]
fn fundamental_reps_are_homomorphisms() {
    for n in [3, 4] {
        let v = fundamental_rep(n).unwrap();
        assert_eq!(v.homomorphism_failures(&usl(n).unwrap()).unwrap(), Vec::<String>::new());
        let vv = MatrixRep::coproduct(&v, &v).unwrap();
        assert!(vv.homomorphism_failures(&usl(n).unwrap()).unwrap().is_empty());
    }
}

#[test]
fn sigma_is_a_single_term() {
    use crate::twists::sigma_in;
    let v = fundamental_rep(3).unwrap();
    let s = sigma_in(&v).unwrap();
    assert_eq!(s, v.image("E12").unwrap().shift(1).neg());
}

#[test]
fn inverse_and_permutation() {
    let v = fundamental_rep(3).unwrap();
    let x = v.image("E12").unwrap().kron(v.image("E23").unwrap()).shift(1);
    let m = x.exp_nilpotent().unwrap();
    let inv = m.inverse().unwrap();
    assert!(m.mul(&inv).unwrap().is_identity());
    let swapped = x.permute_legs(&[3, 3], &[1, 0]).unwrap();
    assert_eq!(swapped, v.image("E23").unwrap().kron(v.image("E12").unwrap()).shift(1));
}

#[test]
fn unit_twist_evaluates_to_identity() {
    let ctx = usl_context(3).unwrap();
    let v = fundamental_rep(3).unwrap();
    let one = crate::hopf::TwistElement::unit(ctx.pres.clone(), 2);
    assert!(evaluate_twist(&one, &[&v, &v]).unwrap().is_identity());
}

#[test]
fn truncated_universal_elements_are_refused() {
    let ctx = usl_context(3).unwrap();
    let v = fundamental_rep(3).unwrap();
    let psi = build_psi(&ctx, 3, 3).unwrap();
    assert!(matches!(evaluate_twist(&psi, &[&v, &v]), Err(RepError::Truncated)));
}

#[test]
fn matrix_fp_agrees_with_universal_expansion() {
    for (n, a) in [(3, Rat::one()), (4, Rat::one()), (4, Rat::new(2, 1))] {
        let v = fundamental_rep(n).unwrap();
        let m = iota_for_r(n, &a, 4).unwrap();
        let f = build_fp(&m, 4).unwrap().expand(4).unwrap();
        let universal = evaluate_truncated(&f, &m.target.pres, &[&v, &v]).unwrap();
        let exact = fp_matrix(n, &a, [&v, &v]).unwrap();
        assert_eq!(exact.truncate(4), universal, "n={n}");
    }
}

#[test]
fn classical_r_trace_vanishes() {
    let ctx = usl_context(3).unwrap();
    let v = fundamental_rep(3).unwrap();
    let m = evaluate_pair(&classical_r(&ctx.pres, 3, &Rat::one()).unwrap(), &ctx.pres, &v).unwrap();
    assert!(m.trace().is_zero());
}

#[test]
fn qybe_trivial_and_mutated() {
    let v = fundamental_rep(3).unwrap();
    assert!(qybe_check(&RepMatrix::identity(9), 3).unwrap().is_zero());
    // D₁∧E₂₃ does not solve the classical equation
    let ctx = usl_context(3).unwrap();
    let bad = ctx.el2(&[(Rat::one(), 0, "D1", "E23"), (Rat::new(-1, 1), 0, "E23", "D1"), (Rat::one(), 0, "E12", "E32")], 0).unwrap();
    let big = RepMatrix::identity(9).add(&evaluate_pair(&bad, &ctx.pres, &v).unwrap().shift(1)).unwrap();
    let res = qybe_check(&big, 3).unwrap();
    assert!(!res.zeta_coefficient(2).is_zero());
}

#[test]
fn cybe_symbolic_and_in_representation() {
    for (n, a) in [(3, Rat::one()), (4, Rat::one()), (4, Rat::new(2, 1))] {
        let ctx = usl_context(n).unwrap();
        let rr = classical_r(&ctx.pres, n, &a).unwrap();
        let c = cybe_check(&rr, &ctx.pres).unwrap();
        assert!(c.is_zero(), "n={n}: {}", c.render(&ctx.pres));
        let v = fundamental_rep(n).unwrap();
        assert!(evaluate(&c, &ctx.pres, &[&v, &v, &v]).unwrap().is_zero());
    }
    let ctx = usl_context(3).unwrap();
    assert!(cybe_check(&crate::ncalg::TensorElement::zero(2, 0), &ctx.pres).unwrap().is_zero());
}

#[test]
fn frobenius_determinants() {
    for n in [3, 4] {
        let ctx = usl_context(n).unwrap();
        let rr = classical_r(&ctx.pres, n, &Rat::one()).unwrap();
        assert_eq!(parabolic_basis(n).len(), n * n - n);
        let d = frobenius_check(&rr, &ctx.pres, n).unwrap();
        assert!(!d.is_zero(), "n={n}");
    }
}

#[test]
fn determinant_small() {
    let m = vec![vec![r(0, 1), r(1, 1)], vec![r(-1, 1), r(0, 1)]];
    assert_eq!(determinant(m), r(1, 1));
}

#[test]
fn bivector_latex_n4() {
    let ctx = usl_context(4).unwrap();
    let s = bivector_latex(&classical_r(&ctx.pres, 4, &Rat::one()).unwrap(), &ctx.pres).unwrap();
    assert_eq!(s.matches("\\wedge").count(), 7);
}

#[test]
fn rp_qybe_and_limit() {
    for (n, a) in [(3, Rat::one()), (4, Rat::one()), (4, Rat::new(2, 1))] {
        let v = fundamental_rep(n).unwrap();
        let big = rp_matrix(n, &a, &v).unwrap();
        let ctx = usl_context(n).unwrap();
        let lim = classical_limit_check(&big, &classical_r(&ctx.pres, n, &a).unwrap(), &ctx.pres, &v).unwrap();
        assert!(lim.is_zero(), "n={n}");
        let q = qybe_check(&big, n).unwrap();
        assert!(q.is_zero(), "n={n}");
    }
}

#[test]
fn matrix_cocycles() {
    for (n, a) in [(3, Rat::one()), (4, Rat::one()), (4, Rat::new(1, 3))] {
        let v = fundamental_rep(n).unwrap();
        assert!(matrix_cocycle_residual(n, &a, &v).unwrap().is_zero(), "n={n}");
    }
}

#[test]
fn evaluation_is_multiplicative() {
    for n in [3, 4] {
        let v = fundamental_rep(n).unwrap();
        assert_eq!(multiplicativity_failures(&usl(n).unwrap(), &v, 7, 20).unwrap(), 0);
    }
}
