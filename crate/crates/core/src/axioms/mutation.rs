//! Deliberately corrupted Hopf monoids, used to show the axiom suite notices
//! a single wrong table entry.

use std::sync::Arc;

use num_traits::One;

use crate::exactalg::{rat, Rational};
use crate::species::{Bijection, Decomposition, FiniteSet, Label, QTensor, QVector, Species, Structure};
use crate::structures::monoids::{pal_admissible, Ek, Pal, Pi, Sigma, E, L};
use crate::structures::HopfMonoid;

#[derive(Clone)]
enum Entry {
    Product { d: Decomposition, x: Structure, y: Structure, value: QVector },
    Coproduct { d: Decomposition, z: Structure, value: QTensor },
}

/// A Hopf monoid agreeing with `base` except at one product or coproduct
/// entry.
#[derive(Clone)]
pub struct Mutated {
    base: Arc<dyn HopfMonoid>,
    description: String,
    entry: Entry,
}

impl Mutated {
    /// Replaces `μ_{S,T}(x ⊗ y)` by `change` applied to its true value.
    pub fn product(
        base: Arc<dyn HopfMonoid>,
        d: Decomposition,
        x: Structure,
        y: Structure,
        description: impl Into<String>,
        change: impl FnOnce(QVector) -> QVector,
    ) -> Self {
        let value = change(base.product(&d, &x, &y));
        Mutated { base, description: description.into(), entry: Entry::Product { d, x, y, value } }
    }

    /// Replaces `Δ_{S,T}(z)` by `change` applied to its true value.
    pub fn coproduct(
        base: Arc<dyn HopfMonoid>,
        d: Decomposition,
        z: Structure,
        description: impl Into<String>,
        change: impl FnOnce(QTensor) -> QTensor,
    ) -> Self {
        let value = change(base.coproduct(&d, &z));
        Mutated { base, description: description.into(), entry: Entry::Coproduct { d, z, value } }
    }

    pub fn description(&self) -> &str {
        &self.description
    }
}

impl Species for Mutated {
    fn name(&self) -> String {
        format!("{} [{}]", self.base.name(), self.description)
    }

    fn enumerate(&self, set: &FiniteSet) -> Vec<Structure> {
        self.base.enumerate(set)
    }

    fn relabel(&self, sigma: &Bijection, s: &Structure) -> Structure {
        self.base.relabel(sigma, s)
    }
}

impl HopfMonoid for Mutated {
    fn product(&self, d: &Decomposition, x: &Structure, y: &Structure) -> QVector {
        match &self.entry {
            Entry::Product { d: md, x: mx, y: my, value } if md == d && mx == x && my == y => value.clone(),
            _ => self.base.product(d, x, y),
        }
    }

    fn coproduct(&self, d: &Decomposition, z: &Structure) -> QTensor {
        match &self.entry {
            Entry::Coproduct { d: md, z: mz, value } if md == d && mz == z => value.clone(),
            _ => self.base.coproduct(d, z),
        }
    }
}

/// `Pal` with the final blocks concatenated in the wrong order:
/// `(F⁻|G⁻, F⁰ ∪ G⁰, F⁺|G⁺)`. This product is still associative; the
/// exchange law is what breaks.
#[derive(Debug, Clone, Copy, Default)]
pub struct PalSwapped;

impl Species for PalSwapped {
    fn name(&self) -> String {
        "Pal [final blocks swapped]".into()
    }

    fn enumerate(&self, set: &FiniteSet) -> Vec<Structure> {
        Pal.enumerate(set)
    }
}

impl HopfMonoid for PalSwapped {
    fn product(&self, _d: &Decomposition, x: &Structure, y: &Structure) -> QVector {
        let (Structure::PalComposition(f), Structure::PalComposition(g)) = (x, y) else {
            panic!("PalSwapped: unexpected structures {x}, {y}")
        };
        let (fh, gh) = (f.len() / 2, g.len() / 2);
        let centre_of = |b: &[Vec<Label>], h: usize| if b.len() % 2 == 1 { b[h].clone() } else { Vec::new() };
        let mut blocks: Vec<Vec<Label>> = Vec::new();
        blocks.extend_from_slice(&f[..fh]);
        blocks.extend_from_slice(&g[..gh]);
        let centre = [centre_of(f, fh), centre_of(g, gh)].concat();
        if !centre.is_empty() {
            blocks.push(centre);
        }
        blocks.extend_from_slice(&f[f.len() - fh..]);
        blocks.extend_from_slice(&g[g.len() - gh..]);
        QVector::basis(Structure::PalComposition(blocks))
    }

    fn coproduct(&self, d: &Decomposition, z: &Structure) -> QTensor {
        let Structure::PalComposition(f) = z else { panic!("PalSwapped: unexpected structure {z}") };
        if pal_admissible(f, d.s()) {
            Pal.coproduct(d, z)
        } else {
            QTensor::zero(d.s().clone(), d.t().clone())
        }
    }
}

fn set(text: &str) -> FiniteSet {
    FiniteSet::parse(text).expect("valid label list")
}

fn decomposition(s: &str, t: &str) -> Decomposition {
    Decomposition::new(set(s), set(t)).expect("disjoint")
}

fn structure(kind: &str, labels: &str, value: &str) -> Structure {
    Structure::from_text(kind, &set(labels), value).expect("valid structure")
}

/// Ten single-entry mutations across several monoids, each on a label set of
/// size at most three.
pub fn standard_mutations() -> Vec<Mutated> {
    let l: Arc<dyn HopfMonoid> = Arc::new(L);
    let two = rat(2, 1);
    vec![
        Mutated::product(
            l.clone(),
            decomposition("a", "b,c"),
            structure("order", "a", "a"),
            structure("order", "b,c", "b|c"),
            "L product entry set to zero",
            |v| QVector::zero(v.ambient().clone()),
        ),
        Mutated::product(
            l.clone(),
            decomposition("a", "b,c"),
            structure("order", "a", "a"),
            structure("order", "b,c", "b|c"),
            "L product entry doubled",
            |v| v.scale(&two),
        ),
        Mutated::product(
            l.clone(),
            decomposition("a", "b,c"),
            structure("order", "a", "a"),
            structure("order", "b,c", "b|c"),
            "L product entry replaced",
            |_| QVector::basis(structure("order", "a,b,c", "a|c|b")),
        ),
        Mutated::coproduct(
            l,
            decomposition("a", "b,c"),
            structure("order", "a,b,c", "b|a|c"),
            "L coproduct entry set to zero",
            |t| QTensor::zero(t.left().clone(), t.right().clone()),
        ),
        Mutated::coproduct(
            Arc::new(Pi),
            decomposition("a,b", "c"),
            structure("partition", "a,b,c", "ab.c"),
            "Pi coproduct entry negated",
            |t| t.scale(&-Rational::one()),
        ),
        Mutated::product(
            Arc::new(Sigma),
            decomposition("a", "b"),
            structure("composition", "a", "a"),
            structure("composition", "b", "b"),
            "Sigma product entry replaced",
            |_| QVector::basis(structure("composition", "a,b", "b|a")),
        ),
        Mutated::product(
            Arc::new(E),
            decomposition("", "a,b"),
            Structure::Mark(FiniteSet::empty()),
            Structure::Mark(set("a,b")),
            "E unit entry set to zero",
            |v| QVector::zero(v.ambient().clone()),
        ),
        Mutated::coproduct(
            Arc::new(E),
            decomposition("a,b", ""),
            Structure::Mark(set("a,b")),
            "E counit entry tripled",
            |t| t.scale(&rat(3, 1)),
        ),
        Mutated::product(
            Arc::new(Pal),
            decomposition("a,b", "c"),
            structure("pal", "a,b", "a|b"),
            structure("pal", "c", "c"),
            "Pal product entry replaced",
            |_| QVector::basis(structure("pal", "a,b,c", "b|c|a")),
        ),
        Mutated::coproduct(
            Arc::new(Ek::new(2)),
            decomposition("a", "b"),
            structure("function", "a,b", "a→1,b→2"),
            "Ek:2 coproduct entry gains a term",
            |mut t| {
                t.add_term(structure("function", "a", "a→2"), structure("function", "b", "b→2"), Rational::one());
                t
            },
        ),
    ]
}
