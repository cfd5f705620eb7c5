//! Explicit bases: `p_γ` for the Lie kernel of `L` and `p_ℓ` for the Hopf
//! kernel of `L ↠ E`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::species::{combinat, Decomposition, FiniteSet, Label, QVector, Structure};
use crate::structures::{product_vec, HopfMonoid, L};

/// `μ_{S,T}(x ⊗ y) − μ_{T,S}(y ⊗ x)` for `x ∈ h[S]`, `y ∈ h[T]`.
pub fn lie_bracket(h: &dyn HopfMonoid, d: &Decomposition, x: &QVector, y: &QVector) -> QVector {
    product_vec(h, d, x, y).sub(&product_vec(h, &d.swapped(), y, x))
}

/// A linear order `ℓ₀` on a finite set, used to pick recursive splittings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ReferenceOrder {
    labels: Vec<Label>,
}

impl ReferenceOrder {
    pub fn new(labels: Vec<Label>) -> Result<Self> {
        FiniteSet::new(labels.clone())?;
        Ok(ReferenceOrder { labels })
    }

    /// The sorted order of `set`.
    pub fn sorted(set: &FiniteSet) -> Self {
        ReferenceOrder { labels: set.labels().to_vec() }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let labels = text
            .split(['|', ','])
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(Label::new)
            .collect::<Result<Vec<_>>>()?;
        ReferenceOrder::new(labels)
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn set(&self) -> FiniteSet {
        FiniteSet::new(self.labels.clone()).expect("distinct labels")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// `ℓ₀|_S`.
    pub fn restrict(&self, s: &FiniteSet) -> ReferenceOrder {
        ReferenceOrder { labels: self.labels.iter().filter(|l| s.contains(l)).cloned().collect() }
    }
}

impl fmt::Display for ReferenceOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.labels.iter().map(Label::as_str).collect();
        f.write_str(&parts.join("|"))
    }
}

/// A cyclic order on a nonempty finite set, stored as a successor map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicOrder {
    labels: FiniteSet,
    succ: BTreeMap<Label, Label>,
}

impl CyclicOrder {
    /// The cyclic order `(l₁, l₂, …, l_n)`, with `succ(l_i) = l_{i+1}` and
    /// `succ(l_n) = l₁`.
    pub fn from_tuple(tuple: &[Label]) -> Result<Self> {
        if tuple.is_empty() {
            return Err(Error::InvalidLabels("a cyclic order needs at least one label".into()));
        }
        let labels = FiniteSet::new(tuple.to_vec())?;
        let succ = (0..tuple.len()).map(|i| (tuple[i].clone(), tuple[(i + 1) % tuple.len()].clone())).collect();
        Ok(CyclicOrder { labels, succ })
    }

    /// Parses `(b,a,c)`, `b,a,c` or `b|a|c`.
    pub fn parse(text: &str) -> Result<Self> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        let tuple = inner
            .split([',', '|'])
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(Label::new)
            .collect::<Result<Vec<_>>>()?;
        CyclicOrder::from_tuple(&tuple)
    }

    pub fn labels(&self) -> &FiniteSet {
        &self.labels
    }

    pub fn succ(&self, l: &Label) -> &Label {
        &self.succ[l]
    }

    /// The labels in cyclic order starting from `start`.
    pub fn tuple_from(&self, start: &Label) -> Vec<Label> {
        let mut out = vec![start.clone()];
        let mut cur = self.succ(start);
        while cur != start {
            out.push(cur.clone());
            cur = self.succ(cur);
        }
        out
    }

    /// The tuple starting at the `ℓ₀`-minimum.
    pub fn canonical_tuple(&self, ell0: &ReferenceOrder) -> Vec<Label> {
        let start = ell0.labels().iter().find(|l| self.labels.contains(l)).expect("nonempty");
        self.tuple_from(start)
    }

    /// The induced cyclic order on a nonempty subset.
    pub fn restrict(&self, s: &FiniteSet) -> CyclicOrder {
        let start = s.labels()[0].clone();
        let tuple: Vec<Label> = self.tuple_from(&start).into_iter().filter(|l| s.contains(l)).collect();
        CyclicOrder::from_tuple(&tuple).expect("nonempty subset")
    }

    /// All `(n−1)!` cyclic orders of a nonempty set.
    pub fn all(set: &FiniteSet) -> Vec<CyclicOrder> {
        let Some((first, rest)) = set.labels().split_first() else { return Vec::new() };
        combinat::permutations(rest.len())
            .into_iter()
            .map(|p| {
                let mut tuple = vec![first.clone()];
                tuple.extend(p.into_iter().map(|i| rest[i].clone()));
                CyclicOrder::from_tuple(&tuple).expect("distinct labels")
            })
            .collect()
    }
}

impl fmt::Display for CyclicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tuple = self.tuple_from(&self.labels.labels()[0]);
        let parts: Vec<&str> = tuple.iter().map(Label::as_str).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The element `p_γ ∈ L[I]`.
///
/// With `i₁, i₂` the first two labels of `ℓ₀`, `S` is the arc of `γ` from
/// `i₁` up to but excluding `i₂`, and `p_γ = [p_{γ|S}, p_{γ|T}]` with the
/// induced reference orders.
pub fn lie_basis_p(gamma: &CyclicOrder, ell0: &ReferenceOrder) -> Result<QVector> {
    if ell0.set() != *gamma.labels() {
        return Err(Error::InvalidLabels(format!("reference order {ell0} is not on the labels of {gamma}")));
    }
    Ok(p_gamma(gamma, ell0))
}

/// The arc of `γ` from the first label of `ℓ₀` up to but excluding the second.
fn first_arc(gamma: &CyclicOrder, ell0: &ReferenceOrder) -> FiniteSet {
    let (i1, i2) = (&ell0.labels()[0], &ell0.labels()[1]);
    let mut arc = vec![i1.clone()];
    let mut cur = gamma.succ(i1);
    while cur != i2 {
        arc.push(cur.clone());
        cur = gamma.succ(cur);
    }
    FiniteSet::new(arc).expect("distinct labels")
}

fn p_gamma(gamma: &CyclicOrder, ell0: &ReferenceOrder) -> QVector {
    if ell0.len() == 1 {
        return QVector::basis(Structure::Order(ell0.labels().to_vec()));
    }
    let s = first_arc(gamma, ell0);
    let d = Decomposition::of(gamma.labels(), s);
    let x = p_gamma(&gamma.restrict(d.s()), &ell0.restrict(d.s()));
    let y = p_gamma(&gamma.restrict(d.t()), &ell0.restrict(d.t()));
    lie_bracket(&L, &d, &x, &y)
}

/// The basis `{p_γ}` of `Lie[I]`, one vector per cyclic order.
pub fn lie_basis(ell0: &ReferenceOrder) -> Vec<(CyclicOrder, QVector)> {
    CyclicOrder::all(&ell0.set())
        .into_iter()
        .map(|g| {
            let p = p_gamma(&g, ell0);
            (g, p)
        })
        .collect()
}

/// A linear order `ℓ` with `ℓ(r) ≠ ℓ₀(r)` at every position `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Derangement {
    ell: Vec<Label>,
    ell0: ReferenceOrder,
}

impl Derangement {
    pub fn new(ell: Vec<Label>, ell0: &ReferenceOrder) -> Result<Self> {
        let text = ell.iter().map(Label::as_str).collect::<Vec<_>>().join("|");
        let set = FiniteSet::new(ell.clone())?;
        if set != ell0.set() {
            return Err(Error::InvalidLabels(format!("{text} is not an order on the labels of {ell0}")));
        }
        if ell.iter().zip(ell0.labels()).any(|(a, b)| a == b) {
            return Err(Error::NotADerangement(text));
        }
        Ok(Derangement { ell, ell0: ell0.clone() })
    }

    pub fn order(&self) -> &[Label] {
        &self.ell
    }

    /// The cycles of `σ = ℓ∘ℓ₀⁻¹`, each starting at its `ℓ₀`-minimum, sorted
    /// by that minimum.
    pub fn cycles(&self) -> Vec<CyclicOrder> {
        let sigma: BTreeMap<&Label, &Label> = self.ell0.labels().iter().zip(&self.ell).collect();
        let mut seen: Vec<&Label> = Vec::new();
        let mut out = Vec::new();
        for start in self.ell0.labels() {
            if seen.contains(&start) {
                continue;
            }
            let mut tuple = vec![start.clone()];
            seen.push(start);
            let mut cur = sigma[start];
            while cur != start {
                tuple.push(cur.clone());
                seen.push(cur);
                cur = sigma[cur];
            }
            out.push(CyclicOrder::from_tuple(&tuple).expect("distinct labels"));
        }
        out
    }

    /// Every derangement of `ℓ₀`.
    pub fn all(ell0: &ReferenceOrder) -> Vec<Derangement> {
        combinat::permutations(ell0.len())
            .into_iter()
            .filter(|p| p.iter().enumerate().all(|(i, &j)| i != j))
            .map(|p| Derangement { ell: p.into_iter().map(|i| ell0.labels()[i].clone()).collect(), ell0: ell0.clone() })
            .collect()
    }
}

impl fmt::Display for Derangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.ell.iter().map(Label::as_str).collect();
        f.write_str(&parts.join("|"))
    }
}

/// `p_ℓ = p_{γ₁} ⋯ p_{γ_k}` over the cycles of `ℓ∘ℓ₀⁻¹`, ordered by their
/// `ℓ₀`-minima.
pub fn hker_basis_derangement(ell: &[Label], ell0: &ReferenceOrder) -> Result<QVector> {
    let d = Derangement::new(ell.to_vec(), ell0)?;
    Ok(derangement_vector(&d))
}

pub fn derangement_vector(d: &Derangement) -> QVector {
    let mut acc = QVector::basis(Structure::Order(Vec::new()));
    for gamma in d.cycles() {
        let p = p_gamma(&gamma, &d.ell0.restrict(gamma.labels()));
        let dec = Decomposition::new(acc.ambient().clone(), gamma.labels().clone()).expect("disjoint cycles");
        acc = product_vec(&L, &dec, &acc, &p);
    }
    acc
}

/// Parses a label list written `a|b|c` or `a,b,c`.
pub fn labels_of(text: &str) -> Result<Vec<Label>> {
    text.split(['|', ',']).map(str::trim).filter(|t| !t.is_empty()).map(Label::new).collect()
}

/// `p_γ` written as nested brackets, e.g. `[[a,[c,d]],b]`.
pub fn bracket_expression(gamma: &CyclicOrder, ell0: &ReferenceOrder) -> String {
    if ell0.len() == 1 {
        return ell0.labels()[0].to_string();
    }
    let s = first_arc(gamma, ell0);
    let t = gamma.labels().difference(&s);
    format!(
        "[{},{}]",
        bracket_expression(&gamma.restrict(&s), &ell0.restrict(&s)),
        bracket_expression(&gamma.restrict(&t), &ell0.restrict(&t))
    )
}

/// `p_ℓ` written as a product of nested brackets, e.g. `[s,[i,e]]·[m,t]`.
pub fn derangement_expression(d: &Derangement) -> String {
    let parts: Vec<String> = d.cycles().iter().map(|g| bracket_expression(g, &d.ell0.restrict(g.labels()))).collect();
    parts.join("·")
}
