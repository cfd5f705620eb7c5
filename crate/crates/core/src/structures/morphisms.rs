//! The canonical morphisms between the shipped Hopf monoids.

use std::sync::Arc;

use super::monoids::{Ek, Pi, PiS, Sigma, Submonoid, E, L};
use super::HopfMorphism;
use crate::species::{QVector, Structure};

/// `L ↠ E`, sending every linear order on `I` to `*_I`.
pub fn l_to_e() -> HopfMorphism {
    HopfMorphism::new("L->E", Arc::new(L), Arc::new(E), |s| QVector::basis(Structure::Mark(s.labels())))
}

/// `E ↪ Π`, sending `*_I` to the partition of `I` into singletons.
pub fn e_to_pi() -> HopfMorphism {
    HopfMorphism::new("E->Pi", Arc::new(E), Arc::new(Pi), |s| {
        QVector::basis(Structure::partition(s.labels().iter().map(|l| vec![l.clone()]).collect()))
    })
}

/// `L ↪ Σ`, viewing a linear order as a composition into singletons.
pub fn l_to_sigma() -> HopfMorphism {
    HopfMorphism::new("L->Sigma", Arc::new(L), Arc::new(Sigma), |s| match s {
        Structure::Order(v) => QVector::basis(Structure::composition(v.iter().map(|l| vec![l.clone()]).collect())),
        other => panic!("L->Sigma: unexpected structure {other}"),
    })
}

/// `E^{·k} ↪ E^{·k+1}` along the inclusion `[k] ↪ [k+1]`, `i ↦ i`.
pub fn ek_to_ek1(k: u32) -> HopfMorphism {
    HopfMorphism::new(format!("Ek:{k}->Ek:{}", k + 1), Arc::new(Ek::new(k)), Arc::new(Ek::new(k + 1)), |s| {
        QVector::basis(s.clone())
    })
}

/// The quotient `Π ↠ Π_S`.
pub fn pi_to_pis(allowed: Submonoid) -> HopfMorphism {
    let target = PiS::new(allowed);
    let name = format!("Pi->{}", crate::species::Species::name(&target));
    let projection = target.clone();
    HopfMorphism::new(name, Arc::new(Pi), Arc::new(target), move |s| {
        if projection.admits(s) {
            QVector::basis(s.clone())
        } else {
            QVector::zero(s.labels())
        }
    })
}
