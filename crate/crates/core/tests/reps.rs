use num_rational::BigRational;
use proptest::prelude::*;
use twistcheck::algebras::usl;
use twistcheck::reps::{fundamental_rep, multiplicativity_failures, qybe_check, rp_matrix, MatrixRep, RepMatrix, ZPoly};
use twistcheck::scalars::Rat;

fn poly(c: &[i64]) -> ZPoly {
    ZPoly::from_coeffs(c.iter().map(|&x| BigRational::from_integer(x.into())).collect())
}

fn matrix(dim: usize, entries: &[(usize, usize, Vec<i64>)]) -> RepMatrix {
    RepMatrix::from_entries(dim, entries.iter().map(|(i, j, c)| (i % dim, j % dim, poly(c))))
}

fn entries() -> impl Strategy<Value = Vec<(usize, usize, Vec<i64>)>> {
    proptest::collection::vec((0usize..3, 0usize..3, proptest::collection::vec(-3i64..4, 0..3)), 0..5)
}

#[test]
fn rp_n4_solves_qybe_for_a_fresh_parameter() {
    let v = fundamental_rep(4).unwrap();
    let r = rp_matrix(4, &Rat::new(-2, 7), &v).unwrap();
    assert!(qybe_check(&r, 4).unwrap().nnz() == 0);
}

#[test]
fn tensor_square_is_multiplicative() {
    let v = fundamental_rep(3).unwrap();
    let vv = MatrixRep::coproduct(&v, &v).unwrap();
    assert_eq!(multiplicativity_failures(&usl(3).unwrap(), &vv, 11, 6).unwrap(), 0);
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, rng_seed: proptest::test_runner::RngSeed::Fixed(3), ..ProptestConfig::default() })]

    #[test]
    fn fundamental_rep_is_multiplicative(seed in any::<u64>(), n in 3usize..5) {
        let v = fundamental_rep(n).unwrap();
        prop_assert_eq!(multiplicativity_failures(&usl(n).unwrap(), &v, seed, 3).unwrap(), 0);
    }

    #[test]
    fn kron_mixed_product(a in entries(), b in entries(), c in entries(), d in entries()) {
        let (a, b, c, d) = (matrix(3, &a), matrix(3, &b), matrix(3, &c), matrix(3, &d));
        let lhs = a.kron(&b).mul(&c.kron(&d)).unwrap();
        prop_assert_eq!(lhs, a.mul(&c).unwrap().kron(&b.mul(&d).unwrap()));
    }

    #[test]
    fn unipotent_inverse(e in entries()) {
        let upper: Vec<_> = e.into_iter().filter(|(i, j, _)| i % 3 < j % 3).collect();
        let m = RepMatrix::identity(3).add(&matrix(3, &upper).shift(1)).unwrap();
        prop_assert!(m.mul(&m.inverse().unwrap()).unwrap().is_identity());
    }

    #[test]
    fn swapping_legs_twice_is_identity(a in entries(), b in entries()) {
        let x = matrix(3, &a).kron(&matrix(3, &b));
        let back = x.permute_legs(&[3, 3], &[1, 0]).unwrap().permute_legs(&[3, 3], &[1, 0]).unwrap();
        prop_assert_eq!(back, x);
    }
}
