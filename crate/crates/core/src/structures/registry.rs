//! Textual identifiers for species, Hopf monoids and morphisms.
//!
//! Species: `E`, `X`, `L`, `Pi`, `PiPrime`, `PiS:2,4,6`, `Sigma`, `Pal`,
//! `Ek:3`, `el`, `Hadamard(L,Pi)`. Morphisms: `L->E`, `E->Pi`, `L->Sigma`,
//! `Ek:2->Ek:3`, `Pi->PiS:2`, and `h->h` for any monoid `h`.

use std::sync::Arc;

use super::monoids::{Ek, El, Hadamard, Pal, Pi, PiPrime, PiS, Sigma, Submonoid, E, L, X};
use super::morphisms::{e_to_pi, ek_to_ek1, l_to_e, l_to_sigma, pi_to_pis};
use super::{HopfMonoid, HopfMorphism};
use crate::error::{Error, Result};
use crate::species::{HadamardSpecies, Species};

fn unknown(id: &str) -> Error {
    Error::UnknownIdentifier(id.to_string())
}

/// Splits `Hadamard(a,b)` into `a` and `b`.
fn hadamard_args(id: &str) -> Option<(&str, &str)> {
    let inner = id.strip_prefix("Hadamard(")?.strip_suffix(')')?;
    let mut depth = 0i32;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((inner[..i].trim(), inner[i + 1..].trim())),
            _ => {}
        }
    }
    None
}

fn parse_k(id: &str, text: &str) -> Result<u32> {
    match text.trim().parse::<u32>() {
        Ok(k) if k >= 1 => Ok(k),
        _ => Err(unknown(id)),
    }
}

fn parse_submonoid(id: &str, text: &str) -> Result<Submonoid> {
    let gens =
        text.split(',').map(|g| g.trim().parse::<usize>().map_err(|_| unknown(id))).collect::<Result<Vec<_>>>()?;
    Submonoid::new(gens).ok_or_else(|| unknown(id))
}

/// A Hopf monoid by identifier.
pub fn parse_monoid(id: &str) -> Result<Arc<dyn HopfMonoid>> {
    let id = id.trim();
    if let Some((a, b)) = hadamard_args(id) {
        return Ok(Arc::new(Hadamard::new(parse_monoid(a)?, parse_monoid(b)?)));
    }
    if let Some(k) = id.strip_prefix("Ek:") {
        return Ok(Arc::new(Ek::new(parse_k(id, k)?)));
    }
    if let Some(gens) = id.strip_prefix("PiS:") {
        return Ok(Arc::new(PiS::new(parse_submonoid(id, gens)?)));
    }
    Ok(match id {
        "E" => Arc::new(E),
        "X" => Arc::new(X),
        "L" => Arc::new(L),
        "Pi" => Arc::new(Pi),
        "Sigma" => Arc::new(Sigma),
        "Pal" => Arc::new(Pal),
        "PiPrime" | "el" => return Err(Error::PreconditionFailed(format!("{id} is a species without Hopf structure"))),
        _ => return Err(unknown(id)),
    })
}

/// A species by identifier, including those without Hopf structure.
pub fn parse_species(id: &str) -> Result<Arc<dyn Species>> {
    let id = id.trim();
    if let Some((a, b)) = hadamard_args(id) {
        return Ok(Arc::new(HadamardSpecies::new(parse_species(a)?, parse_species(b)?)));
    }
    match id {
        "PiPrime" => Ok(Arc::new(PiPrime)),
        "el" => Ok(Arc::new(El)),
        _ => parse_monoid(id).map(|h| h as Arc<dyn Species>),
    }
}

/// A morphism by identifier `source->target`.
pub fn parse_morphism(id: &str) -> Result<HopfMorphism> {
    let id = id.trim();
    let (src, tgt) = id.split_once("->").ok_or_else(|| unknown(id))?;
    let (src, tgt) = (src.trim(), tgt.trim());
    if src == tgt {
        return Ok(HopfMorphism::identity(parse_monoid(src)?));
    }
    match (src, tgt) {
        ("L", "E") => return Ok(l_to_e()),
        ("E", "Pi") => return Ok(e_to_pi()),
        ("L", "Sigma") => return Ok(l_to_sigma()),
        _ => {}
    }
    if let (Some(k), Some(j)) = (src.strip_prefix("Ek:"), tgt.strip_prefix("Ek:")) {
        let (k, j) = (parse_k(id, k)?, parse_k(id, j)?);
        if j == k + 1 {
            return Ok(ek_to_ek1(k));
        }
    }
    if let ("Pi", Some(gens)) = (src, tgt.strip_prefix("PiS:")) {
        return Ok(pi_to_pis(parse_submonoid(id, gens)?));
    }
    Err(unknown(id))
}
