use twistcheck::hopf::cocycle_residual;
use twistcheck::reps::{cybe_check, frobenius_check};
use twistcheck::scalars::Rat;
use twistcheck::twists::{build_fp, build_rp, classical_r, errata, iota_for_r, usl_context, verify_iota};

#[test]
fn fp3_is_a_cocycle_with_the_expected_limit() {
    let m = iota_for_r(3, &Rat::new(1, 1), 3).unwrap();
    let f = build_fp(&m, 3).unwrap();
    assert!(cocycle_residual(&f, &m.target.table, 3).unwrap().is_zero());
    let r = build_rp(&f, 3).unwrap();
    let c = usl_context(3).unwrap();
    let cr = classical_r(&c.pres, 3, &Rat::new(1, 1)).unwrap();
    assert_eq!(r.zeta_coefficient(1), cr.zeta_coefficient(0));
}

#[test]
fn a_family_is_frobenius_and_solves_cybe() {
    let c = usl_context(4).unwrap();
    for a in [Rat::new(2, 1), Rat::new(-3, 5)] {
        let r = classical_r(&c.pres, 4, &a).unwrap();
        assert!(cybe_check(&r, &c.pres).unwrap().is_zero());
        assert_ne!(frobenius_check(&r, &c.pres, 4).unwrap(), Rat::new(0, 1));
    }
}

#[test]
fn classical_r_is_antisymmetric() {
    let c = usl_context(4).unwrap();
    let r = classical_r(&c.pres, 4, &Rat::new(1, 3)).unwrap();
    assert!(r.add(&r.swap().unwrap()).unwrap().is_zero());
}

#[test]
fn zero_parameter_is_rejected() {
    assert!(iota_for_r(4, &Rat::new(0, 1), 2).is_err());
}

#[test]
fn iota_for_r_is_a_homomorphism_at_low_order() {
    let m = iota_for_r(4, &Rat::new(2, 1), 2).unwrap();
    let psi = twistcheck::twists::build_psi(&m.target, 4, 2).unwrap();
    assert!(verify_iota(&m, &psi).unwrap().is_empty());
}

#[test]
fn errata_entries_name_a_check() {
    assert!(errata().iter().all(|e| !e.check.is_empty() && e.printed != e.corrected));
}
