use std::sync::Arc;

use hopf_core::exactalg::{rat, CycleIndexPoly, Monomial, Rational, Specialization, TruncatedSeries};
use hopf_core::species::{
    burnside_count, cycle_index, dimension, egf, ogf, orbit_count, tgf, Bijection, FiniteSet, HadamardSpecies, Species,
    UnitSpecies,
};
use hopf_core::structures::{parse_species, Ek, El, Pal, Pi, PiPrime, Sigma, E, L, X};
use num_bigint::BigInt;
use proptest::prelude::*;

fn series(coeffs: &[(i64, i64)]) -> TruncatedSeries {
    TruncatedSeries::new(coeffs.iter().map(|&(p, q)| rat(p, q)).collect())
}

fn dims(sp: &dyn Species, upto: usize) -> Vec<usize> {
    (0..=upto).map(|n| dimension(sp, &FiniteSet::standard(n))).collect()
}

fn concrete() -> Vec<Arc<dyn Species>> {
    vec![
        Arc::new(E),
        Arc::new(X),
        Arc::new(L),
        Arc::new(Pi),
        Arc::new(PiPrime),
        Arc::new(Sigma),
        Arc::new(Pal),
        Arc::new(Ek::new(2)),
        Arc::new(El),
        parse_species("PiS:2").unwrap(),
        parse_species("Hadamard(L,Pi)").unwrap(),
    ]
}

#[test]
fn dimension_examples() {
    let abc = FiniteSet::parse("a,b,c").unwrap();
    assert_eq!(dimension(&Pi, &abc), 5);
    assert_eq!(dimension(&Pal, &FiniteSet::standard(5)), 171);
    assert_eq!(dimension(&E, &FiniteSet::empty()), 1);
}

#[test]
fn orbit_count_examples() {
    assert_eq!(orbit_count(&Pal, 5), 4);
    assert_eq!(orbit_count(&Pi, 4), 5);
    for n in 0..6 {
        assert_eq!(orbit_count(&L, n), 1);
    }
}

#[test]
fn generating_series_examples() {
    assert_eq!(egf(&PiPrime, 4), series(&[(1, 1), (1, 1), (1, 2), (2, 3), (5, 24)]));
    assert_eq!(tgf(&PiPrime, 7), TruncatedSeries::from_integers(&[1, 1, 1, 2, 2, 3, 4, 5]));
    assert_eq!(ogf(&UnitSpecies, 6), TruncatedSeries::one(6));
}

#[test]
fn cycle_index_examples() {
    let z = cycle_index(&E, 5).unwrap();
    let exp = TruncatedSeries::monomial(Rational::from_integer(1.into()), 1, 5).exp().unwrap();
    assert_eq!(z.specialize(Specialization::Exp), exp);

    let z = cycle_index(&L, 5).unwrap();
    assert_eq!(z.specialize(Specialization::Type), TruncatedSeries::from_integers(&[1; 6]));

    let z = cycle_index(&X, 4).unwrap();
    let mut x1 = CycleIndexPoly::zero(4);
    x1.add_term(Monomial::var(1), rat(1, 1));
    assert_eq!(z, x1);
}

#[test]
fn hadamard_species_examples() {
    let lpi = HadamardSpecies::new(Arc::new(L), Arc::new(Pi));
    let bell = [1usize, 1, 2, 5, 15];
    let fact = [1usize, 1, 2, 6, 24];
    let expected: Vec<usize> = (0..5).map(|n| bell[n] * fact[n]).collect();
    assert_eq!(dims(&lpi, 4), expected);

    let epal = HadamardSpecies::new(Arc::new(E), Arc::new(Pal));
    assert_eq!(dims(&epal, 5), dims(&Pal, 5));

    let lpal = HadamardSpecies::new(Arc::new(L), Arc::new(Pal));
    assert_eq!(egf(&lpal, 5), ogf(&Pal, 5));
}

#[test]
fn dimension_overrides_match_enumeration() {
    for sp in concrete() {
        for n in 0..=4 {
            assert_eq!(sp.dim(n), BigInt::from(dimension(sp.as_ref(), &FiniteSet::standard(n))), "{}", sp.name());
        }
    }
}

#[test]
fn series_agree_with_cycle_index() {
    for sp in concrete() {
        let order = if sp.name().starts_with("Hadamard") { 4 } else { 6 };
        let z = cycle_index(sp.as_ref(), order).unwrap();
        assert_eq!(z.specialize(Specialization::Exp), egf(sp.as_ref(), order), "{}", sp.name());
        assert_eq!(z.specialize(Specialization::Type), tgf(sp.as_ref(), order), "{}", sp.name());
    }
}

#[test]
fn orbit_count_matches_burnside() {
    for sp in concrete() {
        for n in 0..=5 {
            if sp.name().starts_with("Hadamard") && n > 4 {
                continue;
            }
            let burnside = burnside_count(sp.as_ref(), n);
            assert_eq!(burnside, Rational::from_integer(orbit_count(sp.as_ref(), n).into()), "{} at {n}", sp.name());
        }
    }
}

#[test]
fn dimension_is_relabeling_invariant() {
    let other = FiniteSet::parse("x,y,zz,w").unwrap();
    for sp in concrete() {
        assert_eq!(dimension(sp.as_ref(), &other), dimension(sp.as_ref(), &FiniteSet::standard(4)));
    }
}

fn bijection(n: usize, images: &[usize]) -> Bijection {
    let set = FiniteSet::standard(n);
    let to: Vec<_> = images.iter().map(|&i| set.labels()[i].clone()).collect();
    Bijection::zip(set.labels(), &to).unwrap()
}

fn perm_strategy() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>)> {
    (0usize..=5).prop_flat_map(|n| {
        let idx: Vec<usize> = (0..n).collect();
        (Just(n), Just(idx.clone()).prop_shuffle(), Just(idx).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn relabeling_is_functorial((n, p, q) in perm_strategy(), which in 0usize..11) {
        let sp = &concrete()[which];
        let (sigma, tau) = (bijection(n, &p), bijection(n, &q));
        let set = FiniteSet::standard(n);
        let basis = sp.enumerate(&set);
        let id = Bijection::identity(&set);
        for s in basis.iter().take(200) {
            prop_assert_eq!(&sp.relabel(&id, s), s);
            prop_assert_eq!(sp.relabel(&sigma.compose(&tau), s), sp.relabel(&sigma, &sp.relabel(&tau, s)));
        }
    }
}
