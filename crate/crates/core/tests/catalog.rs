use qutrit_core::catalog::run_catalog;
use qutrit_core::circuit::Registry;

#[test]
fn every_builtin_claim_verifies() {
    let reg = Registry::builtin().unwrap();
    let results = run_catalog(&reg);
    for r in &results {
        println!("{r}");
    }
    let failed: Vec<_> = results.iter().filter(|r| !r.passed()).collect();
    assert!(failed.is_empty(), "{failed:#?}");
}

#[test]
fn catalog_is_deterministic() {
    let reg = Registry::builtin().unwrap();
    assert_eq!(run_catalog(&reg), run_catalog(&reg));
}
