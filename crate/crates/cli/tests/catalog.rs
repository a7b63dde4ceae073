use std::collections::{BTreeMap, BTreeSet};
use twistcheck_cli::catalog::{catalog, matches, parse_rat, select};

#[test]
fn ids_are_unique() {
    let all = catalog();
    let ids: BTreeSet<_> = all.iter().map(|c| c.id.clone()).collect();
    assert_eq!(ids.len(), all.len());
}

#[test]
fn prefixes_stop_at_colons() {
    assert!(matches("cocycle:Fp4", "cocycle:Fp4:a=1"));
    assert!(matches("cocycle", "cocycle:F2aff"));
    assert!(!matches("cocycle:F", "cocycle:F2aff"));
    assert!(!matches("cocycle", "matrix-cocycle:n=3"));
}

#[test]
fn selection_keeps_catalog_order() {
    let picked = select("qybe,identities", &BTreeMap::new()).unwrap();
    let ids: Vec<_> = picked.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids, ["identities", "qybe:n=3", "qybe:n=4"]);
}

#[test]
fn overrides_apply_by_prefix() {
    let o = BTreeMap::from([("cocycle:Fp4".to_string(), 2)]);
    let picked = select("cocycle", &o).unwrap();
    for c in &picked {
        let expect = if c.id.starts_with("cocycle:Fp4") { 2 } else { catalog().into_iter().find(|d| d.id == c.id).unwrap().order.unwrap() };
        assert_eq!(c.order, Some(expect), "{}", c.id);
    }
}

#[test]
fn bad_selections_fail_early() {
    assert!(select("", &BTreeMap::new()).is_err());
    assert!(select("qybe:n=5", &BTreeMap::new()).is_err());
    assert!(select("all", &BTreeMap::from([("bogus".to_string(), 3)])).is_err());
}

#[test]
fn rationals_parse() {
    assert_eq!(parse_rat("1/3").unwrap().to_string(), "1/3");
    assert_eq!(parse_rat("-2").unwrap().to_string(), "-2");
    assert!(parse_rat("1/0").is_err());
    assert!(parse_rat("x").is_err());
}
