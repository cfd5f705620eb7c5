//! Species: label sets, structures, relabeling and generating series.

pub mod combinat;
pub mod label;
pub mod structure;
pub mod vector;

use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactalg::rational::{factorial, int};
use crate::exactalg::{CycleIndexPoly, Monomial, Rational, TruncatedSeries};

pub use label::{triple_decompositions, Bijection, Decomposition, FiniteSet, Label};
pub use structure::Structure;
pub use vector::{QTensor, QVector};

/// A species given by an explicit basis on every finite set.
pub trait Species: Send + Sync {
    fn name(&self) -> String;

    /// The basis of `q[I]`, in a deterministic order.
    fn enumerate(&self, set: &FiniteSet) -> Vec<Structure>;

    /// Transport of a basis element along a bijection.
    fn relabel(&self, sigma: &Bijection, s: &Structure) -> Structure {
        s.relabel(sigma)
    }

    /// Whether relabeling permutes the basis, so that cycle indices and
    /// orbit counts are meaningful.
    fn is_linearized(&self) -> bool {
        true
    }

    /// `dim q[n]`. Species with a closed formula may override this.
    fn dim(&self, n: usize) -> BigInt {
        BigInt::from(self.enumerate(&FiniteSet::standard(n)).len())
    }
}

impl std::fmt::Debug for dyn Species {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Species({})", self.name())
    }
}

pub fn dimension(sp: &dyn Species, set: &FiniteSet) -> usize {
    sp.enumerate(set).len()
}

/// Number of `S_n`-orbits on the basis of `q[n]`.
///
/// Uses the structures' orbit invariants when every structure has one and
/// otherwise sweeps whole orbits.
pub fn orbit_count(sp: &dyn Species, n: usize) -> usize {
    let set = FiniteSet::standard(n);
    let basis = sp.enumerate(&set);
    let invariants: Option<HashSet<(String, Vec<usize>)>> =
        basis.iter().map(|s| s.orbit_invariant().map(|inv| (s.kind(), inv))).collect();
    if let Some(invariants) = invariants {
        return invariants.len();
    }
    let perms = Bijection::permutations(&set);
    let mut seen: HashSet<Structure> = HashSet::with_capacity(basis.len());
    let mut orbits = 0;
    for s in &basis {
        if seen.contains(s) {
            continue;
        }
        orbits += 1;
        for sigma in &perms {
            seen.insert(sp.relabel(sigma, s));
        }
    }
    orbits
}

/// Number of basis elements of `q[n]` fixed by the permutation `perm` of
/// `0..n`.
pub fn fixed_points(sp: &dyn Species, n: usize, perm: &[usize]) -> usize {
    let set = FiniteSet::standard(n);
    let labels = set.labels();
    let image: Vec<Label> = perm.iter().map(|&i| labels[i].clone()).collect();
    let sigma = Bijection::zip(labels, &image).expect("permutation of a standard set");
    sp.enumerate(&set).iter().filter(|s| &sp.relabel(&sigma, s) == *s).count()
}

/// `Σ dim q[n] x^n / n!` up to order `order`.
pub fn egf(sp: &dyn Species, order: usize) -> TruncatedSeries {
    let dims: Vec<BigInt> = (0..=order).map(|n| sp.dim(n)).collect();
    TruncatedSeries::egf_from_counts(&dims)
}

/// `Σ dim q[n] x^n` up to order `order`.
pub fn ogf(sp: &dyn Species, order: usize) -> TruncatedSeries {
    let dims: Vec<BigInt> = (0..=order).map(|n| sp.dim(n)).collect();
    TruncatedSeries::ogf_from_counts(&dims)
}

/// The type generating function `Σ dim q[n]_{S_n} x^n` up to order `order`.
pub fn tgf(sp: &dyn Species, order: usize) -> TruncatedSeries {
    let counts: Vec<usize> = (0..=order).map(|n| orbit_count(sp, n)).collect();
    TruncatedSeries::ogf_from_counts(&counts)
}

/// A permutation of `0..n` with the given cycle lengths.
fn permutation_of_type(parts: &[usize]) -> Vec<usize> {
    let n: usize = parts.iter().sum();
    let mut perm = vec![0; n];
    let mut start = 0;
    for &len in parts {
        for i in 0..len {
            perm[start + i] = start + (i + 1) % len;
        }
        start += len;
    }
    perm
}

/// The cycle index `Σ_n Σ_λ fix(σ_λ)/z_λ · x^λ` up to weighted degree `order`.
pub fn cycle_index(sp: &dyn Species, order: usize) -> Result<CycleIndexPoly> {
    if !sp.is_linearized() {
        return Err(Error::NotLinearized(sp.name()));
    }
    let mut z = CycleIndexPoly::zero(order);
    for n in 0..=order {
        for parts in combinat::integer_partitions(n) {
            let fix = fixed_points(sp, n, &permutation_of_type(&parts));
            let coeff = int(fix) / int(combinat::z_lambda(&parts));
            z.add_term(Monomial::from_cycle_type(&parts), coeff);
        }
    }
    Ok(z)
}

/// Orbit count by Burnside's lemma, as an independent check on
/// [`orbit_count`].
pub fn burnside_count(sp: &dyn Species, n: usize) -> Rational {
    let total: usize = combinat::permutations(n).iter().map(|p| fixed_points(sp, n, p)).sum();
    int(total) / Rational::from_integer(factorial(n))
}

/// The unit species `1`: one structure on the empty set, nothing elsewhere.
#[derive(Debug, Clone, Copy, Default)]
pub struct UnitSpecies;

impl Species for UnitSpecies {
    fn name(&self) -> String {
        "1".into()
    }

    fn enumerate(&self, set: &FiniteSet) -> Vec<Structure> {
        if set.is_empty() {
            vec![Structure::Mark(FiniteSet::empty())]
        } else {
            Vec::new()
        }
    }
}

/// The Hadamard product `(a × b)[I] = a[I] ⊗ b[I]` as a species.
#[derive(Clone)]
pub struct HadamardSpecies {
    pub a: Arc<dyn Species>,
    pub b: Arc<dyn Species>,
}

impl HadamardSpecies {
    pub fn new(a: Arc<dyn Species>, b: Arc<dyn Species>) -> Self {
        HadamardSpecies { a, b }
    }
}

pub fn pair_enumerate(a: &dyn Species, b: &dyn Species, set: &FiniteSet) -> Vec<Structure> {
    let right = b.enumerate(set);
    a.enumerate(set)
        .into_iter()
        .flat_map(|x| right.iter().map(move |y| Structure::pair(x.clone(), y.clone())))
        .collect()
}

pub fn pair_relabel(a: &dyn Species, b: &dyn Species, sigma: &Bijection, s: &Structure) -> Structure {
    match s {
        Structure::Pair(x, y) => Structure::pair(a.relabel(sigma, x), b.relabel(sigma, y)),
        other => panic!("Hadamard structure expected, got {other}"),
    }
}

impl Species for HadamardSpecies {
    fn name(&self) -> String {
        format!("Hadamard({},{})", self.a.name(), self.b.name())
    }

    fn enumerate(&self, set: &FiniteSet) -> Vec<Structure> {
        pair_enumerate(self.a.as_ref(), self.b.as_ref(), set)
    }

    fn relabel(&self, sigma: &Bijection, s: &Structure) -> Structure {
        pair_relabel(self.a.as_ref(), self.b.as_ref(), sigma, s)
    }

    fn is_linearized(&self) -> bool {
        self.a.is_linearized() && self.b.is_linearized()
    }

    fn dim(&self, n: usize) -> BigInt {
        self.a.dim(n) * self.b.dim(n)
    }
}
