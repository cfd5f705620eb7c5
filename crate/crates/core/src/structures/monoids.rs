//! The concrete Hopf monoids and the species that carry no Hopf structure.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::HopfMonoid;
use crate::exactalg::Rational;
use crate::species::combinat::{compositions_with_sizes, integer_compositions, permutations, set_partitions};
use crate::species::pair_relabel;
use crate::species::structure::is_palindrome;
use crate::species::{
    pair_enumerate, Bijection, Decomposition, FiniteSet, Label, QTensor, QVector, Species, Structure,
};

fn sorted(mut v: Vec<Structure>) -> Vec<Structure> {
    v.sort();
    v
}

fn unexpected(name: &str, s: &Structure) -> ! {
    panic!("{name}: unexpected structure {s}")
}

/// The tensor `x|_S ⊗ x|_T` for kinds whose coproduct is plain restriction.
fn restriction_coproduct(d: &Decomposition, z: &Structure) -> QTensor {
    match (z.restrict(d.s()), z.restrict(d.t())) {
        (Some(x), Some(y)) => QTensor::pure(x, y),
        _ => QTensor::zero(d.s().clone(), d.t().clone()),
    }
}

/// The exponential species `E`: one structure `*_I` on every set.
#[derive(Debug, Clone, Copy, Default)]
pub struct E;

impl Species for E {
    fn name(&self) -> String {
        "E".into()
    }

    fn enumerate(&self, set: &FiniteSet) -> Vec<Structure> {
        vec![Structure::Mark(set.clone())]
    }

    fn dim(&self, _n: usize) -> BigInt {
        BigInt::one()
    }
}

impl HopfMonoid for E {
    fn product(&self, d: &Decomposition, _x: &Structure, _y: &Structure) -> QVector {
        QVector::basis(Structure::Mark(d.ambient().clone()))
    }

    fn coproduct(&self, d: &Decomposition, _z: &Structure) -> QTensor {
        QTensor::pure(Structure::Mark(d.s().clone()), Structure::Mark(d.t().clone()))
    }
}

/// The species `X` of singletons. It is not connected, and its product and
/// coproduct vanish.
#[derive(Debug, Clone, Copy, Default)]
pub struct X;

impl Species for X {
    fn name(&self) -> String {
        "X".into()
    }

    fn enumerate(&self, set: &FiniteSet) -> Vec<Structure> {
        match set.labels() {
            [only] => vec![Structure::Singleton(only.clone())],
            _ => Vec::new(),
        }
    }
}

impl HopfMonoid for X {
    fn product(&self, d: &Decomposition, _x: &Structure, _y: &Structure) -> QVector {
        QVector::zero(d.ambient().clone())
    }

    fn coproduct(&self, d: &Decomposition, _z: &Structure) -> QTensor {
        QTensor::zero(d.s().clone(), d.t().clone())
    }
}

/// Linear orders, with concatenation and restriction.
#[derive(Debug, Clone, Copy, Default)]
pub struct L;

impl Species for L {
    fn name(&self) -> String {
        "L".into()
    }

    fn enumerate(&self, set: &FiniteSet) -> Vec<Structure> {
        let labels = set.labels();
        permutations(labels.len())
            .into_iter()
            .map(|p| Structure::Order(p.into_iter().map(|i| labels[i].clone()).collect()))
            .collect()
    }

    fn dim(&self, n: usize) -> BigInt {
        (1..=n).map(BigInt::from).product()
    }
}

impl HopfMonoid for L {
    fn product(&self, _d: &Decomposition, x: &Structure, y: &Structure) -> QVector {
        match (x, y) {
            (Structure::Order(a), Structure::Order(b)) => {
                QVector::basis(Structure::Order([a.as_slice(), b.as_slice()].concat()))
            }
            _ => unexpected("L", x),
        }
    }

    fn coproduct(&self, d: &Decomposition, z: &Structure) -> QTensor {
        restriction_coproduct(d, z)
    }
}

fn partitions_of(set: &FiniteSet) -> Vec<Structure> {
    sorted(set_partitions(set.labels()).into_iter().map(Structure::partition).collect())
}

fn partition_union(x: &Structure, y: &Structure) -> Structure {
    match (x, y) {
        (Structure::Partition(a), Structure::Partition(b)) => {
            Structure::partition([a.as_slice(), b.as_slice()].concat())
        }
        _ => unexpected("Pi", x),
    }
}

/// Set partitions, with disjoint union and restriction.
#[derive(Debug, Clone, Copy, Default)]
pub struct Pi;

impl Species for Pi {
    fn name(&self) -> String {
        "Pi".into()
    }

    fn enumerate(&self, set: &FiniteSet) -> Vec<Structure> {
        partitions_of(set)
    }
}

impl HopfMonoid for Pi {
    fn product(&self, _d: &Decomposition, x: &Structure, y: &Structure) -> QVector {
        QVector::basis(partition_union(x, y))
    }

    fn coproduct(&self, d: &Decomposition, z: &Structure) -> QTensor {
        restriction_coproduct(d, z)
    }
}

/// Set partitions whose blocks have pairwise distinct sizes. A species only.
#[derive(Debug, Clone, Copy, Default)]
pub struct PiPrime;

impl Species for PiPrime {
    fn name(&self) -> String {
        "PiPrime".into()
    }

    fn enumerate(&self, set: &FiniteSet) -> Vec<Structure> {
        partitions_of(set)
            .into_iter()
            .filter(|p| {
                let mut sizes = p.orbit_invariant().expect("partition invariant");
                let len = sizes.len();
                sizes.dedup();
                sizes.len() == len
            })
            .collect()
    }
}

/// The additive submonoid of the naturals generated by a set of positive
/// integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Submonoid {
    generators: Vec<usize>,
}

impl Submonoid {
    pub fn new(mut generators: Vec<usize>) -> Option<Self> {
        generators.sort_unstable();
        generators.dedup();
        if generators.is_empty() || generators[0] == 0 {
            return None;
        }
        Some(Submonoid { generators })
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Membership by dynamic programming over `0..=n`.
    pub fn contains(&self, n: usize) -> bool {
        let mut reach = vec![false; n + 1];
        reach[0] = true;
        for m in 1..=n {
            reach[m] = self.generators.iter().any(|&g| g <= m && reach[m - g]);
        }
        reach[n]
    }
}

/// The quotient `Π_S` of `Π` spanned by partitions with every block size in
/// the submonoid `S`.
#[derive(Debug, Clone)]
pub struct PiS {
    allowed: Submonoid,
}

impl PiS {
    pub fn new(allowed: Submonoid) -> Self {
        PiS { allowed }
    }

    pub fn allowed(&self) -> &Submonoid {
        &self.allowed
    }

    pub fn admits(&self, s: &Structure) -> bool {
        match s {
            Structure::Partition(bs) => bs.iter().all(|b| self.allowed.contains(b.len())),
            _ => false,
        }
    }

    fn project(&self, s: Structure) -> QVector {
        if self.admits(&s) {
            QVector::basis(s)
        } else {
            QVector::zero(s.labels())
        }
    }
}

impl Species for PiS {
    fn name(&self) -> String {
        let gens: Vec<String> = self.allowed.generators.iter().map(usize::to_string).collect();
        format!("PiS:{}", gens.join(","))
    }

    fn enumerate(&self, set: &FiniteSet) -> Vec<Structure> {
        partitions_of(set).into_iter().filter(|p| self.admits(p)).collect()
    }
}

impl HopfMonoid for PiS {
    fn product(&self, _d: &Decomposition, x: &Structure, y: &Structure) -> QVector {
        self.project(partition_union(x, y))
    }

    fn coproduct(&self, d: &Decomposition, z: &Structure) -> QTensor {
        let t = restriction_coproduct(d, z);
        match t.as_basis_element() {
            Some((x, y)) if self.admits(x) && self.admits(y) => t,
            _ => QTensor::zero(d.s().clone(), d.t().clone()),
        }
    }
}

fn compositions_of(set: &FiniteSet, keep: impl Fn(&[usize]) -> bool) -> Vec<Structure> {
    let mut out = Vec::new();
    for sizes in integer_compositions(set.len()).into_iter().filter(|c| keep(c)) {
        out.extend(compositions_with_sizes(set.labels(), &sizes).into_iter().map(Structure::composition));
    }
    sorted(out)
}

/// Set compositions, with concatenation and restriction.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sigma;

impl Species for Sigma {
    fn name(&self) -> String {
        "Sigma".into()
    }

    fn enumerate(&self, set: &FiniteSet) -> Vec<Structure> {
        compositions_of(set, |_| true)
    }
}

impl HopfMonoid for Sigma {
    fn product(&self, _d: &Decomposition, x: &Structure, y: &Structure) -> QVector {
        match (x, y) {
            (Structure::Composition(a), Structure::Composition(b)) => {
                QVector::basis(Structure::Composition([a.as_slice(), b.as_slice()].concat()))
            }
            _ => unexpected("Sigma", x),
        }
    }

    fn coproduct(&self, d: &Decomposition, z: &Structure) -> QTensor {
        restriction_coproduct(d, z)
    }
}

/// Splits a palindromic composition into its initial blocks, its central
/// block (empty when the number of blocks is even) and its final blocks.
fn pal_triple(blocks: &[Vec<Label>]) -> (&[Vec<Label>], Vec<Label>, &[Vec<Label>]) {
    let r = blocks.len();
    let half = r / 2;
    let centre = if r % 2 == 1 { blocks[half].clone() } else { Vec::new() };
    (&blocks[..half], centre, &blocks[r - half..])
}

/// Whether `#(F_i ∩ S) = #(F_{r+1-i} ∩ S)` for every block index `i`.
pub fn pal_admissible(blocks: &[Vec<Label>], s: &FiniteSet) -> bool {
    let counts: Vec<usize> = blocks.iter().map(|b| b.iter().filter(|l| s.contains(l)).count()).collect();
    is_palindrome(&counts)
}

/// Palindromic set compositions.
#[derive(Debug, Clone, Copy, Default)]
pub struct Pal;

impl Species for Pal {
    fn name(&self) -> String {
        "Pal".into()
    }

    fn enumerate(&self, set: &FiniteSet) -> Vec<Structure> {
        compositions_of(set, is_palindrome)
            .into_iter()
            .map(|c| match c {
                Structure::Composition(bs) => Structure::PalComposition(bs),
                other => other,
            })
            .collect()
    }
}

impl HopfMonoid for Pal {
    fn product(&self, _d: &Decomposition, x: &Structure, y: &Structure) -> QVector {
        let (Structure::PalComposition(f), Structure::PalComposition(g)) = (x, y) else { unexpected("Pal", x) };
        let (f_minus, f_zero, f_plus) = pal_triple(f);
        let (g_minus, g_zero, g_plus) = pal_triple(g);
        let mut blocks: Vec<Vec<Label>> = Vec::with_capacity(f.len() + g.len());
        blocks.extend_from_slice(f_minus);
        blocks.extend_from_slice(g_minus);
        let centre = [f_zero, g_zero].concat();
        if !centre.is_empty() {
            blocks.push(centre);
        }
        blocks.extend_from_slice(g_plus);
        blocks.extend_from_slice(f_plus);
        QVector::basis(Structure::pal_composition(blocks))
    }

    fn coproduct(&self, d: &Decomposition, z: &Structure) -> QTensor {
        let Structure::PalComposition(f) = z else { unexpected("Pal", z) };
        if pal_admissible(f, d.s()) {
            restriction_coproduct(d, z)
        } else {
            QTensor::zero(d.s().clone(), d.t().clone())
        }
    }
}

/// `E^{·k}`: functions `I → {1, ..., k}`, with union of graphs and
/// restriction.
#[derive(Debug, Clone, Copy)]
pub struct Ek {
    k: u32,
}

impl Ek {
    /// Panics if `k` is zero.
    pub fn new(k: u32) -> Self {
        assert!(k >= 1, "E^k needs k >= 1");
        Ek { k }
    }

    pub fn k(&self) -> u32 {
        self.k
    }
}

impl Species for Ek {
    fn name(&self) -> String {
        format!("Ek:{}", self.k)
    }

    fn enumerate(&self, set: &FiniteSet) -> Vec<Structure> {
        let mut out: Vec<Vec<(Label, u32)>> = vec![Vec::new()];
        for l in set.labels() {
            out = out
                .into_iter()
                .flat_map(|f| {
                    (1..=self.k).map(move |v| {
                        let mut g = f.clone();
                        g.push((l.clone(), v));
                        g
                    })
                })
                .collect();
        }
        out.into_iter().map(Structure::function).collect()
    }

    fn dim(&self, n: usize) -> BigInt {
        BigInt::from(self.k).pow(n as u32)
    }
}

impl HopfMonoid for Ek {
    fn product(&self, _d: &Decomposition, x: &Structure, y: &Structure) -> QVector {
        match (x, y) {
            (Structure::Function(a), Structure::Function(b)) => {
                QVector::basis(Structure::function([a.as_slice(), b.as_slice()].concat()))
            }
            _ => unexpected("Ek", x),
        }
    }

    fn coproduct(&self, d: &Decomposition, z: &Structure) -> QTensor {
        restriction_coproduct(d, z)
    }
}

/// The species `el` of elements: `el[I]` has basis `I`. A species only.
#[derive(Debug, Clone, Copy, Default)]
pub struct El;

impl Species for El {
    fn name(&self) -> String {
        "el".into()
    }

    fn enumerate(&self, set: &FiniteSet) -> Vec<Structure> {
        set.iter().map(|l| Structure::Element { ambient: set.clone(), chosen: l.clone() }).collect()
    }

    fn dim(&self, n: usize) -> BigInt {
        BigInt::from(n)
    }
}

/// The Hadamard product `h × k` with componentwise structure maps.
#[derive(Clone)]
pub struct Hadamard {
    pub a: Arc<dyn HopfMonoid>,
    pub b: Arc<dyn HopfMonoid>,
}

impl Hadamard {
    pub fn new(a: Arc<dyn HopfMonoid>, b: Arc<dyn HopfMonoid>) -> Self {
        Hadamard { a, b }
    }
}

fn split_pair(s: &Structure) -> (&Structure, &Structure) {
    match s {
        Structure::Pair(x, y) => (x, y),
        other => unexpected("Hadamard", other),
    }
}

impl Species for Hadamard {
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

impl HopfMonoid for Hadamard {
    fn product(&self, d: &Decomposition, x: &Structure, y: &Structure) -> QVector {
        let (x1, x2) = split_pair(x);
        let (y1, y2) = split_pair(y);
        let left = self.a.product(d, x1, y1);
        let right = self.b.product(d, x2, y2);
        let mut out = QVector::zero(d.ambient().clone());
        for (p, c) in left.iter() {
            for (q, e) in right.iter() {
                out.add_term(Structure::pair(p.clone(), q.clone()), c * e);
            }
        }
        out
    }

    fn coproduct(&self, d: &Decomposition, z: &Structure) -> QTensor {
        let (z1, z2) = split_pair(z);
        let left = self.a.coproduct(d, z1);
        let right = self.b.coproduct(d, z2);
        let mut out = QTensor::zero(d.s().clone(), d.t().clone());
        for ((p1, p2), c) in left.iter() {
            for ((q1, q2), e) in right.iter() {
                let coeff: Rational = c * e;
                out.add_term(Structure::pair(p1.clone(), q1.clone()), Structure::pair(p2.clone(), q2.clone()), coeff);
            }
        }
        out
    }
}
