//! Concrete Hopf monoids, morphisms between them and the identifier registry.

pub mod monoids;
pub mod morphisms;
pub mod registry;

use std::fmt;
use std::sync::Arc;

use crate::species::{Decomposition, FiniteSet, QTensor, QVector, Species, Structure};

pub use monoids::{Ek, El, Hadamard, Pal, Pi, PiPrime, PiS, Sigma, Submonoid, E, L, X};
pub use morphisms::{e_to_pi, ek_to_ek1, l_to_e, l_to_sigma, pi_to_pis};
pub use registry::{parse_monoid, parse_morphism, parse_species};

/// A Hopf monoid in species, given by its structure maps on basis elements.
///
/// For connected monoids the maps with an empty side are the canonical
/// identifications; every implementation here produces them from the same
/// formulas that define the maps on proper decompositions.
pub trait HopfMonoid: Species {
    /// `μ_{S,T}(x ⊗ y)` for `x` on `S` and `y` on `T`.
    fn product(&self, d: &Decomposition, x: &Structure, y: &Structure) -> QVector;

    /// `Δ_{S,T}(z)` for `z` on `S ⊔ T`.
    fn coproduct(&self, d: &Decomposition, z: &Structure) -> QTensor;
}

impl fmt::Debug for dyn HopfMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HopfMonoid({})", self.name())
    }
}

/// `μ_{S,T}` extended bilinearly.
pub fn product_vec(h: &dyn HopfMonoid, d: &Decomposition, x: &QVector, y: &QVector) -> QVector {
    let mut out = QVector::zero(d.ambient().clone());
    for (a, c) in x.iter() {
        for (b, e) in y.iter() {
            out.add_scaled(&h.product(d, a, b), &(c * e));
        }
    }
    out
}

/// `Δ_{S,T}` extended linearly.
pub fn coproduct_vec(h: &dyn HopfMonoid, d: &Decomposition, z: &QVector) -> QTensor {
    let mut out = QTensor::zero(d.s().clone(), d.t().clone());
    for (a, c) in z.iter() {
        out.add_scaled(&h.coproduct(d, a), c);
    }
    out
}

/// The basis element of `h[∅]` of a connected monoid, if `h[∅]` is
/// one-dimensional.
pub fn unit_structure(h: &dyn Species) -> Option<Structure> {
    let mut basis = h.enumerate(&FiniteSet::empty());
    if basis.len() == 1 {
        basis.pop()
    } else {
        None
    }
}

type MapFn = dyn Fn(&Structure) -> QVector + Send + Sync;

/// A morphism of Hopf monoids given on basis elements.
#[derive(Clone)]
pub struct HopfMorphism {
    pub name: String,
    pub source: Arc<dyn HopfMonoid>,
    pub target: Arc<dyn HopfMonoid>,
    map: Arc<MapFn>,
}

impl fmt::Debug for HopfMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HopfMorphism({})", self.name)
    }
}

impl HopfMorphism {
    pub fn new(
        name: impl Into<String>,
        source: Arc<dyn HopfMonoid>,
        target: Arc<dyn HopfMonoid>,
        map: impl Fn(&Structure) -> QVector + Send + Sync + 'static,
    ) -> Self {
        HopfMorphism { name: name.into(), source, target, map: Arc::new(map) }
    }

    pub fn identity(h: Arc<dyn HopfMonoid>) -> Self {
        let name = format!("{0}->{0}", h.name());
        HopfMorphism::new(name, h.clone(), h, |s| QVector::basis(s.clone()))
    }

    /// The image of a basis element.
    pub fn apply(&self, s: &Structure) -> QVector {
        (self.map)(s)
    }

    /// The image of a vector, by linearity.
    pub fn apply_vec(&self, v: &QVector) -> QVector {
        let mut out = QVector::zero(v.ambient().clone());
        for (s, c) in v.iter() {
            out.add_scaled(&self.apply(s), c);
        }
        out
    }
}
