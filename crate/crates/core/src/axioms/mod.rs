//! Exhaustive verification of the Hopf monoid axioms on all standard label
//! sets up to a given size.
//!
//! Every check runs over `[n] = {a, b, ...}` for `n ≤ nmax`; naturality is
//! checked separately, so standard sets stand for all sets of their size.

pub mod mutation;

use std::collections::BTreeMap;
use std::fmt::Display;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::exactalg::Rational;
use crate::species::{
    triple_decompositions, Bijection, Decomposition, FiniteSet, QTensor, QVector, Species, Structure,
};
use crate::structures::{coproduct_vec, product_vec, unit_structure, HopfMonoid, HopfMorphism};

/// Violations kept per axiom in a report; the total count is always exact.
pub const MAX_REPORTED: usize = 25;

/// Sorts and keeps at most [`MAX_REPORTED`] violations of each axiom.
fn cap(mut violations: Vec<Violation>) -> Vec<Violation> {
    violations.sort();
    let mut kept: Vec<Violation> = Vec::with_capacity(violations.len().min(MAX_REPORTED));
    let mut run = 0;
    for v in violations {
        run = match kept.last() {
            Some(prev) if prev.axiom == v.axiom => run + 1,
            _ => 1,
        };
        if run <= MAX_REPORTED {
            kept.push(v);
        }
    }
    kept
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub size: usize,
    pub labels: FiniteSet,
    pub decomposition: String,
    pub witnesses: Vec<String>,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    pub subject: String,
    pub axioms: Vec<String>,
    pub checked_sizes: Vec<usize>,
    pub passed: bool,
    pub total_violations: usize,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    fn new(subject: impl Into<String>, axiom: &str, sizes: Vec<usize>, violations: Vec<Violation>) -> Self {
        let total = violations.len();
        let violations = cap(violations);
        AxiomReport {
            subject: subject.into(),
            axioms: vec![axiom.to_string()],
            checked_sizes: sizes,
            passed: total == 0,
            total_violations: total,
            violations,
        }
    }

    /// Merges several reports on the same subject.
    pub fn merge(subject: impl Into<String>, reports: Vec<AxiomReport>) -> Self {
        let mut axioms = Vec::new();
        let mut sizes = Vec::new();
        let mut violations = Vec::new();
        let mut total = 0;
        for r in reports {
            axioms.extend(r.axioms);
            for s in r.checked_sizes {
                if !sizes.contains(&s) {
                    sizes.push(s);
                }
            }
            total += r.total_violations;
            violations.extend(r.violations);
        }
        sizes.sort_unstable();
        let violations = cap(violations);
        AxiomReport {
            subject: subject.into(),
            axioms,
            checked_sizes: sizes,
            passed: total == 0,
            total_violations: total,
            violations,
        }
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

fn sizes(nmax: usize) -> Vec<usize> {
    (0..=nmax).collect()
}

fn describe_decomposition(d: &Decomposition) -> String {
    format!("S={} T={}", d.s(), d.t())
}

fn violation(
    axiom: &str,
    set: &FiniteSet,
    decomposition: String,
    witnesses: &[&Structure],
    left: &impl Display,
    right: &impl Display,
) -> Violation {
    Violation {
        axiom: axiom.to_string(),
        size: set.len(),
        labels: set.clone(),
        decomposition,
        witnesses: witnesses.iter().map(|s| s.to_text()).collect(),
        left: left.to_string(),
        right: right.to_string(),
    }
}

/// An element of `h[R] ⊗ h[S] ⊗ h[T]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct Tensor3(BTreeMap<(Structure, Structure, Structure), Rational>);

impl Tensor3 {
    fn add(&mut self, key: (Structure, Structure, Structure), c: Rational) {
        let entry = self.0.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&key);
        }
    }
}

impl Display for Tensor3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self.0.iter().map(|((a, b, c), v)| format!("{v}·({a} ⊗ {b} ⊗ {c})")).collect();
        f.write_str(&terms.join(" + "))
    }
}

/// All decompositions of the standard sets of size `≤ nmax`.
fn all_decompositions(nmax: usize) -> Vec<Decomposition> {
    (0..=nmax).flat_map(|n| Decomposition::all(&FiniteSet::standard(n))).collect()
}

/// Associativity and unitality of the product.
pub fn check_monoid(h: &dyn HopfMonoid, nmax: usize) -> AxiomReport {
    let mut violations: Vec<Violation> = (0..=nmax)
        .into_par_iter()
        .flat_map_iter(|n| {
            let set = FiniteSet::standard(n);
            let mut out = Vec::new();
            for (r, s, t) in triple_decompositions(&set) {
                let rs = r.union(&s).expect("disjoint");
                let st = s.union(&t).expect("disjoint");
                let d_rs = Decomposition::new(r.clone(), s.clone()).expect("disjoint");
                let d_st = Decomposition::new(s.clone(), t.clone()).expect("disjoint");
                let d_rs_t = Decomposition::new(rs, t.clone()).expect("disjoint");
                let d_r_st = Decomposition::new(r.clone(), st).expect("disjoint");
                let (hr, hs, ht) = (h.enumerate(&r), h.enumerate(&s), h.enumerate(&t));
                for x in &hr {
                    for y in &hs {
                        let xy = h.product(&d_rs, x, y);
                        for z in &ht {
                            let left = product_vec(h, &d_rs_t, &xy, &QVector::basis(z.clone()));
                            let yz = h.product(&d_st, y, z);
                            let right = product_vec(h, &d_r_st, &QVector::basis(x.clone()), &yz);
                            if left != right {
                                out.push(violation(
                                    "associativity",
                                    &set,
                                    format!("R={r} S={s} T={t}"),
                                    &[x, y, z],
                                    &left,
                                    &right,
                                ));
                            }
                        }
                    }
                }
            }
            out
        })
        .collect();
    violations.extend(unit_violations(h, nmax));
    AxiomReport::new(h.name(), "monoid", sizes(nmax), violations)
}

fn missing_unit(h: &dyn HopfMonoid, axiom: &str) -> Violation {
    let dim = h.enumerate(&FiniteSet::empty()).len();
    Violation {
        axiom: axiom.to_string(),
        size: 0,
        labels: FiniteSet::empty(),
        decomposition: String::new(),
        witnesses: Vec::new(),
        left: format!("dim h[∅] = {dim}"),
        right: "1".to_string(),
    }
}

fn unit_violations(h: &dyn HopfMonoid, nmax: usize) -> Vec<Violation> {
    let Some(unit) = unit_structure(h) else { return vec![missing_unit(h, "unit")] };
    let mut out = Vec::new();
    for n in 0..=nmax {
        let set = FiniteSet::standard(n);
        let left_d = Decomposition::of(&set, FiniteSet::empty());
        let right_d = left_d.swapped();
        for x in h.enumerate(&set) {
            let expected = QVector::basis(x.clone());
            let l = h.product(&left_d, &unit, &x);
            if l != expected {
                out.push(violation("unit", &set, describe_decomposition(&left_d), &[&x], &l, &expected));
            }
            let r = h.product(&right_d, &x, &unit);
            if r != expected {
                out.push(violation("unit", &set, describe_decomposition(&right_d), &[&x], &r, &expected));
            }
        }
    }
    out
}

/// Coassociativity and counitality of the coproduct.
pub fn check_comonoid(h: &dyn HopfMonoid, nmax: usize) -> AxiomReport {
    let mut violations: Vec<Violation> = (0..=nmax)
        .into_par_iter()
        .flat_map_iter(|n| {
            let set = FiniteSet::standard(n);
            let basis = h.enumerate(&set);
            let mut out = Vec::new();
            for (r, s, t) in triple_decompositions(&set) {
                let rs = r.union(&s).expect("disjoint");
                let st = s.union(&t).expect("disjoint");
                let d_rs_t = Decomposition::new(rs, t.clone()).expect("disjoint");
                let d_r_st = Decomposition::new(r.clone(), st).expect("disjoint");
                let d_rs = Decomposition::new(r.clone(), s.clone()).expect("disjoint");
                let d_st = Decomposition::new(s.clone(), t.clone()).expect("disjoint");
                for z in &basis {
                    let mut left = Tensor3::default();
                    for ((a, c3), v) in h.coproduct(&d_rs_t, z).iter() {
                        for ((c1, c2), w) in h.coproduct(&d_rs, a).iter() {
                            left.add((c1.clone(), c2.clone(), c3.clone()), v * w);
                        }
                    }
                    let mut right = Tensor3::default();
                    for ((c1, b), v) in h.coproduct(&d_r_st, z).iter() {
                        for ((c2, c3), w) in h.coproduct(&d_st, b).iter() {
                            right.add((c1.clone(), c2.clone(), c3.clone()), v * w);
                        }
                    }
                    if left != right {
                        out.push(violation("coassociativity", &set, format!("R={r} S={s} T={t}"), &[z], &left, &right));
                    }
                }
            }
            out
        })
        .collect();
    violations.extend(counit_violations(h, nmax));
    AxiomReport::new(h.name(), "comonoid", sizes(nmax), violations)
}

fn counit_violations(h: &dyn HopfMonoid, nmax: usize) -> Vec<Violation> {
    let Some(unit) = unit_structure(h) else { return vec![missing_unit(h, "counit")] };
    let mut out = Vec::new();
    for n in 0..=nmax {
        let set = FiniteSet::standard(n);
        let right_d = Decomposition::of(&set, set.clone());
        let left_d = right_d.swapped();
        for z in h.enumerate(&set) {
            let expect_right = QTensor::pure(z.clone(), unit.clone());
            let got = h.coproduct(&right_d, &z);
            if got != expect_right {
                out.push(violation("counit", &set, describe_decomposition(&right_d), &[&z], &got, &expect_right));
            }
            let expect_left = QTensor::pure(unit.clone(), z.clone());
            let got = h.coproduct(&left_d, &z);
            if got != expect_left {
                out.push(violation("counit", &set, describe_decomposition(&left_d), &[&z], &got, &expect_left));
            }
        }
    }
    out
}

/// The bimonoid exchange law together with `Δ_{S,T} ∘ μ_{S,T} = id`.
pub fn check_compat(h: &dyn HopfMonoid, nmax: usize) -> AxiomReport {
    let violations: Vec<Violation> = all_decompositions(nmax)
        .into_par_iter()
        .flat_map_iter(|ab| {
            let set = ab.ambient().clone();
            let (a, b) = (ab.s().clone(), ab.t().clone());
            let (ha, hb) = (h.enumerate(&a), h.enumerate(&b));
            let mut out = Vec::new();
            for x in &ha {
                for y in &hb {
                    let xy = h.product(&ab, x, y);
                    let back = coproduct_vec(h, &ab, &xy);
                    let expected = QTensor::pure(x.clone(), y.clone());
                    if back != expected {
                        out.push(violation(
                            "coproduct after product",
                            &set,
                            describe_decomposition(&ab),
                            &[x, y],
                            &back,
                            &expected,
                        ));
                    }
                    for st in Decomposition::all(&set) {
                        let (s, t) = (st.s(), st.t());
                        let left = coproduct_vec(h, &st, &xy);
                        let d_a = Decomposition::new(a.intersection(s), a.intersection(t)).expect("disjoint");
                        let d_b = Decomposition::new(b.intersection(s), b.intersection(t)).expect("disjoint");
                        let d_s = Decomposition::new(d_a.s().clone(), d_b.s().clone()).expect("disjoint");
                        let d_t = Decomposition::new(d_a.t().clone(), d_b.t().clone()).expect("disjoint");
                        let mut right = QTensor::zero(s.clone(), t.clone());
                        for ((x1, x2), c) in h.coproduct(&d_a, x).iter() {
                            for ((y1, y2), e) in h.coproduct(&d_b, y).iter() {
                                let p = h.product(&d_s, x1, y1);
                                let q = h.product(&d_t, x2, y2);
                                let coeff = c * e;
                                for (u, cu) in p.iter() {
                                    for (v, cv) in q.iter() {
                                        right.add_term(u.clone(), v.clone(), &coeff * cu * cv);
                                    }
                                }
                            }
                        }
                        if left != right {
                            out.push(violation(
                                "exchange",
                                &set,
                                format!("A={a} B={b} S={s} T={t}"),
                                &[x, y],
                                &left,
                                &right,
                            ));
                        }
                    }
                }
            }
            out
        })
        .collect();
    AxiomReport::new(h.name(), "compatibility", sizes(nmax), violations)
}

/// Product and coproduct commute with relabeling along every permutation of
/// each standard set.
pub fn check_naturality(h: &dyn HopfMonoid, nmax: usize) -> AxiomReport {
    let violations: Vec<Violation> = (0..=nmax)
        .into_par_iter()
        .flat_map_iter(|n| {
            let set = FiniteSet::standard(n);
            let perms = Bijection::permutations(&set);
            let basis = h.enumerate(&set);
            let mut out = Vec::new();
            for d in Decomposition::all(&set) {
                let (hs, ht) = (h.enumerate(d.s()), h.enumerate(d.t()));
                for sigma in &perms {
                    let moved = Decomposition::new(sigma.apply_set(d.s()), sigma.apply_set(d.t()))
                        .expect("bijection preserves disjointness");
                    let context = format!("{} along {}", describe_decomposition(&d), describe_bijection(sigma));
                    for x in &hs {
                        for y in &ht {
                            let left = relabel_vec(h, sigma, &h.product(&d, x, y));
                            let right = h.product(&moved, &h.relabel(sigma, x), &h.relabel(sigma, y));
                            if left != right {
                                out.push(violation(
                                    "product naturality",
                                    &set,
                                    context.clone(),
                                    &[x, y],
                                    &left,
                                    &right,
                                ));
                            }
                        }
                    }
                    for z in &basis {
                        let left = relabel_tensor(h, sigma, &h.coproduct(&d, z));
                        let right = h.coproduct(&moved, &h.relabel(sigma, z));
                        if left != right {
                            out.push(violation("coproduct naturality", &set, context.clone(), &[z], &left, &right));
                        }
                    }
                }
            }
            out
        })
        .collect();
    AxiomReport::new(h.name(), "naturality", sizes(nmax), violations)
}

fn describe_bijection(sigma: &Bijection) -> String {
    sigma.to_string()
}

pub fn relabel_vec(h: &dyn Species, sigma: &Bijection, v: &QVector) -> QVector {
    let mut out = QVector::zero(sigma.apply_set(v.ambient()));
    for (s, c) in v.iter() {
        out.add_term(h.relabel(sigma, s), c.clone());
    }
    out
}

pub fn relabel_tensor(h: &dyn Species, sigma: &Bijection, t: &QTensor) -> QTensor {
    let mut out = QTensor::zero(sigma.apply_set(t.left()), sigma.apply_set(t.right()));
    for ((x, y), c) in t.iter() {
        out.add_term(h.relabel(sigma, x), h.relabel(sigma, y), c.clone());
    }
    out
}

/// `dim h[∅] = 1`.
pub fn check_connected(h: &dyn HopfMonoid) -> AxiomReport {
    let violations = if unit_structure(h).is_some() { Vec::new() } else { vec![missing_unit(h, "connected")] };
    AxiomReport::new(h.name(), "connected", vec![0], violations)
}

/// Products of basis elements are basis elements and coproducts of basis
/// elements are basis tensors or zero.
pub fn is_linearized(h: &dyn HopfMonoid, nmax: usize) -> AxiomReport {
    let violations: Vec<Violation> = all_decompositions(nmax)
        .into_par_iter()
        .flat_map_iter(|d| {
            let set = d.ambient().clone();
            let mut out = Vec::new();
            let (hs, ht) = (h.enumerate(d.s()), h.enumerate(d.t()));
            for x in &hs {
                for y in &ht {
                    let p = h.product(&d, x, y);
                    if p.as_basis_element().is_none() {
                        out.push(violation(
                            "linearized product",
                            &set,
                            describe_decomposition(&d),
                            &[x, y],
                            &p,
                            &"a basis element",
                        ));
                    }
                }
            }
            for z in h.enumerate(&set) {
                let c = h.coproduct(&d, &z);
                if !c.is_zero() && c.as_basis_element().is_none() {
                    out.push(violation(
                        "linearized coproduct",
                        &set,
                        describe_decomposition(&d),
                        &[&z],
                        &c,
                        &"a basis tensor or 0",
                    ));
                }
            }
            out
        })
        .collect();
    AxiomReport::new(h.name(), "linearized", sizes(nmax), violations)
}

/// `swap ∘ Δ_{S,T} = Δ_{T,S}`.
pub fn check_cocommutative(h: &dyn HopfMonoid, nmax: usize) -> AxiomReport {
    let violations: Vec<Violation> = all_decompositions(nmax)
        .into_par_iter()
        .flat_map_iter(|d| {
            let set = d.ambient().clone();
            let swapped = d.swapped();
            h.enumerate(&set)
                .into_iter()
                .filter_map(|z| {
                    let left = h.coproduct(&d, &z).swap();
                    let right = h.coproduct(&swapped, &z);
                    (left != right)
                        .then(|| violation("cocommutativity", &set, describe_decomposition(&d), &[&z], &left, &right))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    AxiomReport::new(h.name(), "cocommutative", sizes(nmax), violations)
}

/// `μ_{S,T}(x ⊗ y) = μ_{T,S}(y ⊗ x)`.
pub fn check_commutative(h: &dyn HopfMonoid, nmax: usize) -> AxiomReport {
    let violations: Vec<Violation> = all_decompositions(nmax)
        .into_par_iter()
        .flat_map_iter(|d| {
            let set = d.ambient().clone();
            let swapped = d.swapped();
            let (hs, ht) = (h.enumerate(d.s()), h.enumerate(d.t()));
            let mut out = Vec::new();
            for x in &hs {
                for y in &ht {
                    let left = h.product(&d, x, y);
                    let right = h.product(&swapped, y, x);
                    if left != right {
                        out.push(violation("commutativity", &set, describe_decomposition(&d), &[x, y], &left, &right));
                    }
                }
            }
            out
        })
        .collect();
    AxiomReport::new(h.name(), "commutative", sizes(nmax), violations)
}

/// Monoid, comonoid, compatibility, naturality and connectedness together.
pub fn check_all(h: &dyn HopfMonoid, nmax: usize) -> AxiomReport {
    AxiomReport::merge(
        h.name(),
        vec![
            check_connected(h),
            check_monoid(h, nmax),
            check_comonoid(h, nmax),
            check_compat(h, nmax),
            check_naturality(h, nmax),
        ],
    )
}

/// `f ∘ μ = μ ∘ (f ⊗ f)`, `Δ ∘ f = (f ⊗ f) ∘ Δ`, naturality of `f` and
/// preservation of the unit.
pub fn check_morphism(f: &HopfMorphism, nmax: usize) -> AxiomReport {
    let (src, tgt) = (f.source.as_ref(), f.target.as_ref());
    let mut violations: Vec<Violation> = all_decompositions(nmax)
        .into_par_iter()
        .flat_map_iter(|d| {
            let set = d.ambient().clone();
            let context = describe_decomposition(&d);
            let mut out = Vec::new();
            let (hs, ht) = (src.enumerate(d.s()), src.enumerate(d.t()));
            for x in &hs {
                for y in &ht {
                    let left = f.apply_vec(&src.product(&d, x, y));
                    let right = product_vec(tgt, &d, &f.apply(x), &f.apply(y));
                    if left != right {
                        out.push(violation("preserves product", &set, context.clone(), &[x, y], &left, &right));
                    }
                }
            }
            for z in src.enumerate(&set) {
                let left = coproduct_vec(tgt, &d, &f.apply(&z));
                let right = src.coproduct(&d, &z).map(d.s().clone(), d.t().clone(), |a| f.apply(a), |b| f.apply(b));
                if left != right {
                    out.push(violation("preserves coproduct", &set, context.clone(), &[&z], &left, &right));
                }
            }
            out
        })
        .collect();
    for n in 0..=nmax {
        let set = FiniteSet::standard(n);
        let basis = src.enumerate(&set);
        for sigma in Bijection::permutations(&set) {
            for z in &basis {
                let left = relabel_vec(tgt, &sigma, &f.apply(z));
                let right = f.apply(&src.relabel(&sigma, z));
                if left != right {
                    violations.push(violation(
                        "morphism naturality",
                        &set,
                        describe_bijection(&sigma),
                        &[z],
                        &left,
                        &right,
                    ));
                }
            }
        }
    }
    match (unit_structure(src), unit_structure(tgt)) {
        (Some(u), Some(v)) => {
            let image = f.apply(&u);
            let expected = QVector::basis(v);
            if image != expected {
                violations.push(violation(
                    "preserves unit",
                    &FiniteSet::empty(),
                    String::new(),
                    &[&u],
                    &image,
                    &expected,
                ));
            }
        }
        _ => violations.push(missing_unit(src, "preserves unit")),
    }
    AxiomReport::new(f.name.clone(), "morphism", sizes(nmax), violations)
}
