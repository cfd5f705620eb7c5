//! Primitive elements, Lie and Hopf kernels of morphisms, the ideal `k₊h`,
//! and exact dimension checks of the Lagrange factorization.

pub mod lie;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::axioms::check_cocommutative;
use crate::error::{Error, Result};
use crate::exactalg::linalg::SparseRow;
use crate::exactalg::rational::{binomial, int};
use crate::exactalg::{Echelon, Rational, TruncatedSeries};
use crate::report::TestReport;
use crate::species::{combinat, egf, Decomposition, FiniteSet, QVector, Structure};
use crate::structures::{product_vec, HopfMonoid, HopfMorphism};

pub use lie::{
    bracket_expression, derangement_expression, derangement_vector, hker_basis_derangement, labels_of, lie_basis,
    lie_basis_p, lie_bracket, CyclicOrder, Derangement, ReferenceOrder,
};

/// Coordinates on `h[I]` with respect to its sorted structure basis.
#[derive(Debug, Clone)]
struct Coords {
    basis: Vec<Structure>,
    index: HashMap<Structure, usize>,
}

impl Coords {
    fn new(h: &dyn HopfMonoid, set: &FiniteSet) -> Self {
        let mut basis = h.enumerate(set);
        basis.sort();
        let index = basis.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        Coords { basis, index }
    }

    fn row(&self, v: &QVector) -> Option<SparseRow> {
        let mut row: SparseRow = Vec::with_capacity(v.len());
        for (s, c) in v.iter() {
            row.push((*self.index.get(s)?, c.clone()));
        }
        row.sort_by_key(|e| e.0);
        Some(row)
    }

    fn vector(&self, ambient: &FiniteSet, row: &SparseRow) -> QVector {
        let mut v = QVector::zero(ambient.clone());
        for (i, c) in row {
            v.add_term(self.basis[*i].clone(), c.clone());
        }
        v
    }
}

/// A subspace of `h[I]`, kept as a reduced echelon basis over the sorted
/// structure basis of `h[I]`.
#[derive(Debug, Clone)]
pub struct SubspaceBasis {
    ambient: FiniteSet,
    coords: Arc<Coords>,
    echelon: Echelon,
}

impl Serialize for SubspaceBasis {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut out = s.serialize_struct("SubspaceBasis", 4)?;
        out.serialize_field("ambient", &self.ambient)?;
        out.serialize_field("ambient_dim", &self.ambient_dim())?;
        out.serialize_field("dim", &self.dim())?;
        out.serialize_field("vectors", &self.vectors())?;
        out.end()
    }
}

impl SubspaceBasis {
    fn from_echelon(ambient: &FiniteSet, coords: Arc<Coords>, echelon: Echelon) -> Self {
        SubspaceBasis { ambient: ambient.clone(), coords, echelon }
    }

    fn from_rows(ambient: &FiniteSet, coords: Arc<Coords>, rows: impl IntoIterator<Item = SparseRow>) -> Self {
        let mut echelon = Echelon::new(coords.basis.len());
        for row in rows {
            if !row.is_empty() {
                echelon.insert(row);
            }
        }
        SubspaceBasis::from_echelon(ambient, coords, echelon)
    }

    /// The span of `vectors` inside `h[I]`.
    pub fn span(h: &dyn HopfMonoid, set: &FiniteSet, vectors: &[QVector]) -> Result<Self> {
        let coords = Arc::new(Coords::new(h, set));
        let rows = vectors
            .iter()
            .map(|v| {
                coords
                    .row(v)
                    .ok_or_else(|| Error::DimensionMismatch(format!("{v} is not a vector of {}[{set}]", h.name())))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SubspaceBasis::from_rows(set, coords, rows))
    }

    /// The zero subspace of `h[I]`.
    pub fn zero(h: &dyn HopfMonoid, set: &FiniteSet) -> Self {
        let coords = Arc::new(Coords::new(h, set));
        let n = coords.basis.len();
        SubspaceBasis::from_echelon(set, coords, Echelon::new(n))
    }

    pub fn ambient(&self) -> &FiniteSet {
        &self.ambient
    }

    pub fn ambient_dim(&self) -> usize {
        self.coords.basis.len()
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// The reduced echelon basis, in increasing pivot order.
    pub fn vectors(&self) -> Vec<QVector> {
        self.echelon.rref().iter().map(|r| self.coords.vector(&self.ambient, r)).collect()
    }

    pub fn contains(&self, v: &QVector) -> bool {
        match self.coords.row(v) {
            Some(row) => self.echelon.contains(row),
            None => false,
        }
    }

    /// Whether every basis vector of `self` lies in `other`.
    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> bool {
        self.vectors().iter().all(|v| other.contains(v))
    }

    /// Equality as mutual containment.
    pub fn same_space(&self, other: &SubspaceBasis) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }
}

/// Accumulates rows of a linear map `h[I] → W` keyed by a coordinate of `W`,
/// one column per basis element of `h[I]`.
struct RowBuilder<K> {
    rows: BTreeMap<K, SparseRow>,
}

impl<K: Ord> RowBuilder<K> {
    fn new() -> Self {
        RowBuilder { rows: BTreeMap::new() }
    }

    fn add(&mut self, key: K, col: usize, c: Rational) {
        self.rows.entry(key).or_default().push((col, c));
    }

    fn finish(self) -> Vec<SparseRow> {
        self.rows
            .into_values()
            .map(|mut r| {
                r.sort_by_key(|e| e.0);
                merge_duplicates(r)
            })
            .filter(|r| !r.is_empty())
            .collect()
    }
}

fn merge_duplicates(row: SparseRow) -> SparseRow {
    let mut out: SparseRow = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((last, acc)) if *last == c => *acc += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// The common kernel of the given rows, as a subspace of `h[I]`.
fn kernel_of(set: &FiniteSet, coords: Arc<Coords>, rows: Vec<SparseRow>) -> SubspaceBasis {
    let n = coords.basis.len();
    let mut constraints = Echelon::new(n);
    for row in rows {
        if constraints.rank() == n {
            break;
        }
        constraints.insert(row);
    }
    let kernel = constraints.kernel();
    SubspaceBasis::from_rows(set, coords, kernel)
}

/// Rows of the stacked coproducts `Δ_{S,T}` over `decompositions`, with the
/// left tensor factor sent through `left`.
fn coproduct_rows(
    h: &dyn HopfMonoid,
    coords: &Coords,
    decompositions: &[Decomposition],
    left: &(dyn Fn(&Structure) -> QVector + Sync),
) -> Vec<SparseRow> {
    decompositions
        .par_iter()
        .enumerate()
        .flat_map_iter(|(di, d)| {
            let mut builder = RowBuilder::new();
            for (col, z) in coords.basis.iter().enumerate() {
                for ((x, y), c) in h.coproduct(d, z).iter() {
                    for (x2, c2) in left(x).iter() {
                        builder.add((di, x2.clone(), y.clone()), col, c * c2);
                    }
                }
            }
            builder.finish()
        })
        .collect()
}

/// Rows of the linear map `f: h[I] → k[I]`.
fn morphism_rows(f: &HopfMorphism, coords: &Coords) -> Vec<SparseRow> {
    let mut builder = RowBuilder::new();
    for (col, z) in coords.basis.iter().enumerate() {
        for (s, c) in f.apply(z).iter() {
            builder.add(s.clone(), col, c.clone());
        }
    }
    builder.finish()
}

/// `P(h)[I]`: the common kernel of `Δ_{S,T}` over proper decompositions.
/// Zero for `I = ∅`.
pub fn primitive_space(h: &dyn HopfMonoid, set: &FiniteSet) -> SubspaceBasis {
    if set.is_empty() {
        return SubspaceBasis::zero(h, set);
    }
    let coords = Arc::new(Coords::new(h, set));
    let rows = coproduct_rows(h, &coords, &Decomposition::proper(set), &|x| QVector::basis(x.clone()));
    kernel_of(set, coords, rows)
}

/// `Lker(f)[I] = ker(f: P(h)[I] → P(k)[I])`.
pub fn lker_space(f: &HopfMorphism, set: &FiniteSet) -> SubspaceBasis {
    let h = f.source.as_ref();
    if set.is_empty() {
        return SubspaceBasis::zero(h, set);
    }
    let coords = Arc::new(Coords::new(h, set));
    let mut rows = coproduct_rows(h, &coords, &Decomposition::proper(set), &|x| QVector::basis(x.clone()));
    rows.extend(morphism_rows(f, &coords));
    kernel_of(set, coords, rows)
}

/// `Hker(f)[I]`: the common kernel of `(f ⊗ id)∘Δ_{S,T}` over all
/// decompositions with `S ≠ ∅`.
pub fn hker_space(f: &HopfMorphism, set: &FiniteSet) -> SubspaceBasis {
    let h = f.source.as_ref();
    let coords = Arc::new(Coords::new(h, set));
    let decompositions: Vec<Decomposition> =
        Decomposition::all(set).into_iter().filter(|d| !d.s().is_empty()).collect();
    let rows = coproduct_rows(h, &coords, &decompositions, &|x| f.apply(x));
    kernel_of(set, coords, rows)
}

/// Rank of `f` on the standard set of size `n`.
fn morphism_rank(f: &HopfMorphism, n: usize) -> usize {
    let set = FiniteSet::standard(n);
    let target = Coords::new(f.target.as_ref(), &set);
    let mut e = Echelon::new(target.basis.len());
    for z in f.source.enumerate(&set) {
        let row = target.row(&f.apply(&z)).expect("morphism lands in the target");
        if !row.is_empty() {
            e.insert(row);
        }
    }
    e.rank()
}

/// Checks injectivity of `f` on every size up to `nmax`.
pub fn check_injective(f: &HopfMorphism, nmax: usize) -> Result<()> {
    for n in 0..=nmax {
        if BigInt::from(morphism_rank(f, n)) != f.source.dim(n) {
            return Err(Error::NotInjective(f.name.clone(), n));
        }
    }
    Ok(())
}

/// Checks surjectivity of `f` on every size up to `nmax`.
pub fn check_surjective(f: &HopfMorphism, nmax: usize) -> Result<()> {
    for n in 0..=nmax {
        if BigInt::from(morphism_rank(f, n)) != f.target.dim(n) {
            return Err(Error::NotSurjective(f.name.clone(), n));
        }
    }
    Ok(())
}

fn usize_dim(d: BigInt) -> usize {
    usize::try_from(d).expect("dimension fits in usize")
}

/// `(k₊h)[I] = Σ_{S ≠ ∅} μ_{S,T}(f(k[S]) ⊗ h[T])` for an injection `f: k → h`.
pub fn ideal_kplus_h(f: &HopfMorphism, set: &FiniteSet) -> Result<SubspaceBasis> {
    check_injective(f, set.len())?;
    Ok(ideal_unchecked(f, set))
}

fn ideal_unchecked(f: &HopfMorphism, set: &FiniteSet) -> SubspaceBasis {
    let (k, h) = (f.source.as_ref(), f.target.as_ref());
    let coords = Arc::new(Coords::new(h, set));
    let rows: Vec<SparseRow> = Decomposition::all(set)
        .into_par_iter()
        .filter(|d| !d.s().is_empty())
        .flat_map_iter(|d| {
            let images: Vec<QVector> = k.enumerate(d.s()).iter().map(|x| f.apply(x)).collect();
            let ys = h.enumerate(d.t());
            let mut out = Vec::new();
            for fx in &images {
                for y in &ys {
                    let p = product_vec(h, &d, fx, &QVector::basis(y.clone()));
                    out.push(coords.row(&p).expect("product lands in h[I]"));
                }
            }
            out
        })
        .collect();
    SubspaceBasis::from_rows(set, coords, rows)
}

/// Outcome of a dimension factorization check
/// `dim h[n] = Σ_i C(n,i)·dim k[i]·q_{n−i}`.
#[derive(Debug, Clone, Serialize)]
pub struct FactorizationReport {
    pub morphism: String,
    pub h_dims: Vec<usize>,
    pub k_dims: Vec<usize>,
    /// Quotient dimensions for the Lagrange check, Hopf kernel dimensions for
    /// the dual check.
    pub q_dims: Vec<usize>,
    /// The right-hand side of the factorization at each size.
    pub convolution: Vec<BigInt>,
    pub report: TestReport,
}

impl FactorizationReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

fn factorization(
    test: &str,
    f: &HopfMorphism,
    h_dims: Vec<usize>,
    k_dims: Vec<usize>,
    q_dims: Vec<usize>,
) -> FactorizationReport {
    let mut report = TestReport::pass(test);
    let convolution: Vec<BigInt> = (0..h_dims.len())
        .map(|n| (0..=n).fold(BigInt::zero(), |acc, i| acc + binomial(n, i) * k_dims[i] * q_dims[n - i]))
        .collect();
    for (n, rhs) in convolution.iter().enumerate() {
        let diff = BigInt::from(h_dims[n]) - rhs;
        if !diff.is_zero() {
            report.violate(n, format!("dim h[{n}] - sum C({n},i) dim k[i] q[{n}-i]"), int(diff));
        }
    }
    FactorizationReport { morphism: f.name.clone(), h_dims, k_dims, q_dims, convolution, report }
}

/// Quotient dimensions `q_n = dim h[n] − dim (k₊h)[n]` for an injection
/// `f: k → h`, with the factorization `h ≅ k·(h/k₊h)` checked on dimensions.
pub fn lagrange_quotient_dims(f: &HopfMorphism, nmax: usize) -> Result<FactorizationReport> {
    check_injective(f, nmax)?;
    let h_dims: Vec<usize> = (0..=nmax).map(|n| usize_dim(f.target.dim(n))).collect();
    let k_dims: Vec<usize> = (0..=nmax).map(|n| usize_dim(f.source.dim(n))).collect();
    let q_dims: Vec<usize> =
        (0..=nmax).into_par_iter().map(|n| h_dims[n] - ideal_unchecked(f, &FiniteSet::standard(n)).dim()).collect();
    Ok(factorization("lagrange", f, h_dims, k_dims, q_dims))
}

/// The dual check for a surjection `f: h ↠ k`:
/// `dim h[n] = Σ_i C(n,i)·dim k[i]·dim Hker(f)[n−i]`.
pub fn dual_lagrange_check(f: &HopfMorphism, nmax: usize) -> Result<FactorizationReport> {
    check_surjective(f, nmax)?;
    let h_dims: Vec<usize> = (0..=nmax).map(|n| usize_dim(f.source.dim(n))).collect();
    let k_dims: Vec<usize> = (0..=nmax).map(|n| usize_dim(f.target.dim(n))).collect();
    let q_dims: Vec<usize> = (0..=nmax).into_par_iter().map(|n| hker_space(f, &FiniteSet::standard(n)).dim()).collect();
    Ok(factorization("lagrange-dual", f, h_dims, k_dims, q_dims))
}

/// Dimensions of `P(h)[n]` for `n ≤ nmax`.
pub fn primitive_dims(h: &dyn HopfMonoid, nmax: usize) -> Vec<usize> {
    (0..=nmax).into_par_iter().map(|n| primitive_space(h, &FiniteSet::standard(n)).dim()).collect()
}

/// Compares `exp(Σ dim P(h)[n] xⁿ/n!)` with the exponential series of `h`.
pub fn pbw_series_check(h: &dyn HopfMonoid, nmax: usize) -> Result<TestReport> {
    if !check_cocommutative(h, nmax).passed {
        return Err(Error::NotCocommutative(h.name()));
    }
    let dims = primitive_dims(h, nmax);
    let counts: Vec<BigInt> = dims.iter().map(|&d| BigInt::from(d)).collect();
    let predicted = TruncatedSeries::egf_from_counts(&counts).exp()?;
    let actual = egf(h, nmax);
    let mut report = TestReport::pass("pbw");
    report
        .notes
        .push(format!("primitive dimensions: {}", dims.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")));
    for n in 0..=nmax {
        let diff = actual.coeff(n) - predicted.coeff(n);
        if !diff.is_zero() {
            report.violate(n, format!("E_h[x^{n}] - exp(E_P)[x^{n}]"), diff);
        }
    }
    report.series = Some(predicted);
    Ok(report)
}

/// Checks that the products of `Lker(f)` basis vectors over set compositions
/// span `Hker(f)[n]` for every `n ≤ nmax`. Compositions with a block size at
/// which `Lker(f)` vanishes are skipped.
pub fn hker_generated_check(f: &HopfMorphism, nmax: usize) -> Result<TestReport> {
    for side in [&f.source, &f.target] {
        if !check_cocommutative(side.as_ref(), nmax).passed {
            return Err(Error::NotCocommutative(side.name()));
        }
    }
    check_surjective(f, nmax)?;
    let mut report = TestReport::pass("hker-generated");
    let mut dims = Vec::new();
    for n in 0..=nmax {
        let set = FiniteSet::standard(n);
        let hker = hker_space(f, &set);
        let generated = generated_span(f, &set);
        dims.push(hker.dim());
        if !generated.same_space(&hker) {
            report.violate(n, format!("dim Hker[{n}] - dim generated[{n}]"), int(hker.dim()) - int(generated.dim()));
        }
    }
    report
        .notes
        .push(format!("Hopf kernel dimensions: {}", dims.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")));
    Ok(report)
}

/// The span of `μ(x₁ ⊗ ⋯ ⊗ x_m)` over set compositions `(S₁, …, S_m)` of `I`
/// with `x_r` in a basis of `Lker(f)[S_r]`.
fn generated_span(f: &HopfMorphism, set: &FiniteSet) -> SubspaceBasis {
    let h = f.source.as_ref();
    let lker_dims: Vec<usize> = (0..=set.len()).map(|m| lker_space(f, &FiniteSet::standard(m)).dim()).collect();
    let mut lker_cache: HashMap<FiniteSet, Vec<QVector>> = HashMap::new();
    let mut products: Vec<QVector> = Vec::new();
    if set.is_empty() {
        products.extend(h.enumerate(set).into_iter().map(QVector::basis));
    }
    for sizes in combinat::integer_compositions(set.len()) {
        if sizes.iter().any(|&m| lker_dims[m] == 0) {
            continue;
        }
        for blocks in combinat::compositions_with_sizes(set.labels(), &sizes) {
            let mut partial: Vec<QVector> =
                vec![QVector::basis(crate::structures::unit_structure(h).expect("connected source"))];
            for block in blocks {
                let block = FiniteSet::new(block).expect("distinct labels");
                let basis = lker_cache.entry(block.clone()).or_insert_with(|| lker_space(f, &block).vectors()).clone();
                let mut next = Vec::with_capacity(partial.len() * basis.len());
                for acc in &partial {
                    let d = Decomposition::new(acc.ambient().clone(), block.clone()).expect("disjoint blocks");
                    for x in &basis {
                        next.push(product_vec(h, &d, acc, x));
                    }
                }
                partial = next;
            }
            products.extend(partial);
        }
    }
    SubspaceBasis::span(h, set, &products).expect("products lie in h[I]")
}
