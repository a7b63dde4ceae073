use super::*;
use crate::algebras::{d2, d3, d3_derived, f2bar, poly, usl};
use crate::scalars::{Coeff, QCoeff, Rat, ZetaSeries};
use proptest::prelude::*;
use smallvec::smallvec;

fn r(n: i64) -> Rat {
    Rat::from_int(n)
}

#[test]
fn f2bar_reorders_with_zeta_correction() {
    let p = f2bar().unwrap();
    let x = NcPoly::monomial(&p, "f1 f0", r(1), 4).unwrap();
    let f0f1 = NcPoly::monomial(&p, "f0 f1", r(1), 4).unwrap();
    let f00 = NcPoly::monomial(&p, "f0^2", r(1), 4).unwrap().shift(1);
    assert_eq!(x, f0f1.sub(&f00).unwrap());
}

#[test]
fn sl3_bracket_gives_cartan() {
    let p = usl(3).unwrap();
    let x = NcPoly::monomial(&p, "E12 E21", r(1), 0).unwrap();
    // E11 − E22 = 2 D1 − D2
    let want = poly(&p, &[(r(1), "E21 E12"), (r(2), "D1"), (r(-1), "D2")], 0).unwrap();
    assert_eq!(x, want);
}

#[test]
fn affine_root_vectors_commute() {
    let p = d2().unwrap();
    let x = NcPoly::monomial(&p, "ed em", QCoeff::one(), 2).unwrap();
    assert_eq!(x, NcPoly::monomial(&p, "em ed", QCoeff::one(), 2).unwrap());
    let k = NcPoly::monomial(&p, "ed k", QCoeff::one(), 0).unwrap();
    assert_eq!(
        k,
        NcPoly::monomial(&p, "k ed", QCoeff::q_pow(2, 1), 0).unwrap()
    );
    assert!(
        NcPoly::monomial(&p, "k^2 em k^-2", QCoeff::one(), 0).unwrap()
            == NcPoly::monomial(&p, "em", QCoeff::q_pow(-4, 1), 0).unwrap()
    );
}

#[test]
fn missing_rule_is_reported() {
    let mut p = usl(3).unwrap();
    let (b, a) = (p.gen("E12").unwrap(), p.gen("E21").unwrap());
    p.remove_rule(b, a);
    let e = NcPoly::monomial(&p, "E12 E21", r(1), 0).unwrap_err();
    assert!(matches!(e, NcError::MissingRule { .. }));
}

#[test]
fn sl4_table_is_confluent_and_mutation_is_caught() {
    let mut p = usl(4).unwrap();
    assert_eq!(check_local_confluence(&p, 3).unwrap(), vec![]);
    let (b, a) = (p.gen("E23").unwrap(), p.gen("E32").unwrap());
    let mut rhs = p.rule(b, a).unwrap().clone();
    for (w, c) in rhs.iter_mut() {
        if w.letters().len() == 1 {
            *c = c.neg();
        }
    }
    p.add_rule(b, a, rhs).unwrap();
    let report = check_local_confluence(&p, 3).unwrap();
    assert!(!report.is_empty());
    assert!(report
        .iter()
        .any(|amb| amb.word.contains("E23") || amb.word.contains("E32")));
}

#[test]
fn rule_files_round_trip() {
    for text in [
        render_rules(&usl(3).unwrap()),
        render_rules(&f2bar().unwrap()),
    ] {
        assert_eq!(render_rules(&parse_rules::<Rat>(&text).unwrap()), text);
    }
    let text = render_rules(&d3().unwrap());
    assert_eq!(render_rules(&parse_rules::<QCoeff>(&text).unwrap()), text);
}

#[test]
fn derived_table_is_stable_and_matches_shipped() {
    let shipped = render_rules(&d3().unwrap());
    assert_eq!(render_rules(&d3_derived(6).unwrap()), shipped);
    assert_eq!(render_rules(&d3_derived(7).unwrap()), shipped);
}

#[test]
fn derived_brackets_of_the_hatted_generators() {
    let p = d3().unwrap();
    let o = 0;
    let one = QCoeff::one();
    let m = |w: &str| NcPoly::monomial(&p, w, one.clone(), o).unwrap();
    let br = |x: &str, y: &str| m(&format!("{x} {y}")).sub(&m(&format!("{y} {x}"))).unwrap();
    assert!(br("edb", "emb").is_zero());
    assert!(br("edb", "ea").is_zero());
    assert!(br("edb", "edab").is_zero());
    // [ê_α, ê_{−α}] = (q^{h⊥_{α+β}} − q^{−h⊥_β})/(q − q⁻¹)
    let c = QCoeff::q_pow(1, 3)
        .sub(&QCoeff::q_pow(-1, 3))
        .inv()
        .unwrap();
    let want = poly(
        &p,
        &[(c.clone(), "ka^2 kb^-2"), (c.neg(), "ka^-4 kb^-2")],
        o,
    )
    .unwrap();
    assert_eq!(br("ea", "ema"), want);
    // [[ê_α, ê_{δ−α−β}], ê_{−α}] = −q ê_{δ−α−β} q^{−h⊥_β}
    let ep = br("ea", "edab");
    let lhs = ep
        .mul(&m("ema"), &p)
        .unwrap()
        .sub(&m("ema").mul(&ep, &p).unwrap())
        .unwrap();
    let want = NcPoly::monomial(&p, "edab ka^-4 kb^-2", QCoeff::q_pow(1, 3).neg(), o).unwrap();
    assert_eq!(lhs, want);
}

#[test]
fn tensor_leg_operations() {
    let p = usl(3).unwrap();
    let a = p.gen("E12").unwrap();
    let b = p.gen("E21").unwrap();
    let s = ZetaSeries::one(2);
    let a1 = TensorElement::<Rat>::term(smallvec![Word::single(a, 1), Word::empty()], s.clone());
    let b2 = TensorElement::<Rat>::term(smallvec![Word::empty(), Word::single(b, 1)], s.clone());
    let ab = TensorElement::term(smallvec![Word::single(a, 1), Word::single(b, 1)], s.clone());
    assert_eq!(a1.mul(&b2, &p).unwrap(), ab);
    let e13 = ab.embed(&[0, 2], 3).unwrap();
    assert_eq!(
        e13,
        TensorElement::term(
            smallvec![Word::single(a, 1), Word::empty(), Word::single(b, 1)],
            s.clone()
        )
    );
    // (a⊗b)(b⊗a) = (ab)⊗(ba), each leg normal-ordered
    let ba = ab.swap().unwrap();
    let prod = ab.mul(&ba, &p).unwrap();
    let ab1 = NcPoly::monomial(&p, "E12 E21", r(1), 2).unwrap();
    let ba1 = NcPoly::monomial(&p, "E21 E12", r(1), 2).unwrap();
    assert_eq!(prod, ab1.tensor(&ba1));
    assert!(matches!(ab.mul(&e13, &p), Err(NcError::LegMismatch(2, 3))));
}

#[test]
fn inverse_of_grouplike_times_unipotent() {
    let p = d2().unwrap();
    let x = poly(&p, &[(QCoeff::one(), "k")], 3)
        .unwrap()
        .add(
            &NcPoly::monomial(&p, "em", QCoeff::one(), 3)
                .unwrap()
                .shift(1),
        )
        .unwrap();
    let y = x.inverse(&p).unwrap();
    assert!(x.mul(&y, &p).unwrap().is_one());
    assert!(y.mul(&x, &p).unwrap().is_one());
}

fn word_strategy(names: &'static [&'static str]) -> impl Strategy<Value = String> {
    proptest::collection::vec(0..names.len(), 0..5).prop_map(move |v| {
        v.into_iter()
            .map(|i| names[i])
            .collect::<Vec<_>>()
            .join(" ")
    })
}

const SL3: &[&str] = &["E12", "E21", "E13", "E31", "E23", "E32", "D1", "D2"];
const D3G: &[&str] = &["emb", "emab", "ema", "ka", "kb^-1", "ea", "edb", "edab"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn normal_form_is_associative_sl3(a in word_strategy(SL3), b in word_strategy(SL3), c in word_strategy(SL3)) {
        let p = usl(3).unwrap();
        let m = |w: &str| NcPoly::monomial(&p, w, r(1), 0).unwrap();
        let (x, y, z) = (m(&a), m(&b), m(&c));
        let l = x.mul(&y, &p).unwrap().mul(&z, &p).unwrap();
        let rr = x.mul(&y.mul(&z, &p).unwrap(), &p).unwrap();
        prop_assert_eq!(&l, &rr);
        prop_assert_eq!(l, m(&format!("{a} {b} {c}")));
    }

    #[test]
    fn normal_form_is_associative_d3(a in word_strategy(D3G), b in word_strategy(D3G)) {
        let p = d3().unwrap();
        let m = |w: &str| NcPoly::monomial(&p, w, QCoeff::one(), 0).unwrap();
        let x = m(&a).mul(&m(&b), &p).unwrap();
        prop_assert_eq!(x, m(&format!("{a} {b}")));
    }
}
