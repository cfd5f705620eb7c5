use std::sync::Arc;

use hopf_core::axioms::mutation::{standard_mutations, PalSwapped};
use hopf_core::axioms::{
    check_all, check_comonoid, check_compat, check_connected, check_monoid, check_morphism, check_naturality,
};
use hopf_core::exactalg::rat;
use hopf_core::species::{QVector, Structure};
use hopf_core::structures::{parse_monoid, parse_morphism, HopfMorphism, Pal, E, L, X};

#[test]
fn shipped_monoids_satisfy_every_axiom() {
    for id in ["E", "L", "Pi", "PiS:2", "Sigma", "Pal", "Ek:2", "Ek:3", "Hadamard(L,Pi)"] {
        let h = parse_monoid(id).unwrap();
        let report = check_all(h.as_ref(), 4);
        assert!(report.passed, "{id}: {:?}", report.first());
    }
}

#[test]
fn pal_satisfies_every_axiom_at_five() {
    let report = check_all(&Pal, 5);
    assert!(report.passed, "{:?}", report.first());
}

#[test]
fn individual_checks_pass_on_examples() {
    assert!(check_monoid(&L, 4).passed);
    assert!(check_comonoid(&E, 5).passed);
    let sigma = parse_monoid("Sigma").unwrap();
    assert!(check_comonoid(sigma.as_ref(), 4).passed);
    let lpi = parse_monoid("Hadamard(L,Pi)").unwrap();
    assert!(check_compat(lpi.as_ref(), 3).passed);
}

#[test]
fn swapped_pal_product_is_caught_with_witness() {
    assert!(check_monoid(&PalSwapped, 4).passed);
    let report = check_all(&PalSwapped, 4);
    assert!(!report.passed);
    let v = report.first().unwrap();
    assert!(report.axioms.contains(&"compatibility".to_string()));
    assert_eq!(v.axiom, "coproduct after product");
    assert_eq!(v.witnesses.len(), 2);
    assert_ne!(v.left, v.right);
}

#[test]
fn every_single_entry_mutation_is_detected() {
    let mutations = standard_mutations();
    assert_eq!(mutations.len(), 10);
    for m in &mutations {
        let report = check_all(m, 3);
        assert!(!report.passed, "undetected: {}", m.description());
    }
}

#[test]
fn singletons_are_not_connected() {
    let report = check_connected(&X);
    assert!(!report.passed);
    assert_eq!(report.first().unwrap().axiom, "connected");
    assert!(check_connected(&E).passed);
}

#[test]
fn naturality_of_hadamard() {
    let h = parse_monoid("Hadamard(Pal,Ek:2)").unwrap();
    assert!(check_naturality(h.as_ref(), 3).passed);
}

#[test]
fn shipped_morphisms_are_morphisms() {
    for id in ["L->E", "E->Pi", "L->Sigma", "Ek:2->Ek:3", "Pi->PiS:2", "Pal->Pal"] {
        let f = parse_morphism(id).unwrap();
        let report = check_morphism(&f, 4);
        assert!(report.passed, "{id}: {:?}", report.first());
    }
}

#[test]
fn doubling_map_is_not_a_morphism() {
    let f = HopfMorphism::new("L->2E", Arc::new(L), Arc::new(E), |s| {
        QVector::basis(Structure::Mark(s.labels())).scale(&rat(2, 1))
    });
    let report = check_morphism(&f, 3);
    assert!(!report.passed);
    assert!(report.violations.iter().any(|v| v.axiom == "preserves unit"));
}
