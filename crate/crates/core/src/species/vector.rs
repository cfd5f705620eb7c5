//! Sparse exact-rational linear combinations of structures.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::label::{Bijection, FiniteSet};
use super::structure::Structure;
use crate::exactalg::Rational;

fn add_into<K: Ord>(terms: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (String, &'a Rational)>,
{
    let mut first = true;
    for (text, c) in terms {
        let mag = c.abs();
        match (first, c.is_negative()) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        if !mag.is_one() {
            write!(f, "{mag}·")?;
        }
        f.write_str(&text)?;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// An element of `q[I]` written in the structure basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QVector {
    ambient: FiniteSet,
    terms: BTreeMap<Structure, Rational>,
}

impl QVector {
    pub fn zero(ambient: FiniteSet) -> Self {
        QVector { ambient, terms: BTreeMap::new() }
    }

    /// The basis vector of a single structure.
    pub fn basis(s: Structure) -> Self {
        Self::term(s, Rational::one())
    }

    pub fn term(s: Structure, c: Rational) -> Self {
        let mut v = QVector::zero(s.labels());
        v.add_term(s, c);
        v
    }

    pub fn ambient(&self) -> &FiniteSet {
        &self.ambient
    }

    /// Adds `c·s`. The structure must live on the ambient set.
    pub fn add_term(&mut self, s: Structure, c: Rational) {
        debug_assert_eq!(s.labels(), self.ambient, "structure {s} off the ambient set");
        add_into(&mut self.terms, s, c);
    }

    pub fn add_scaled(&mut self, other: &QVector, c: &Rational) {
        for (s, v) in &other.terms {
            self.add_term(s.clone(), v * c);
        }
    }

    pub fn add(&self, other: &QVector) -> QVector {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &QVector) -> QVector {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scale(&self, c: &Rational) -> QVector {
        let mut out = QVector::zero(self.ambient.clone());
        out.add_scaled(self, c);
        out
    }

    pub fn coeff(&self, s: &Structure) -> Rational {
        self.terms.get(s).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Structure, &Rational)> {
        self.terms.iter()
    }

    /// The single basis element with coefficient 1, if the vector is one.
    pub fn as_basis_element(&self) -> Option<&Structure> {
        match self.terms.iter().next() {
            Some((s, c)) if self.terms.len() == 1 && c.is_one() => Some(s),
            _ => None,
        }
    }

    pub fn relabel(&self, sigma: &Bijection) -> QVector {
        let mut out = QVector::zero(sigma.apply_set(&self.ambient));
        for (s, c) in &self.terms {
            out.add_term(s.relabel(sigma), c.clone());
        }
        out
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(s, c)| (s.to_text(), c)))
    }
}

impl Serialize for QVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            structure: String,
            coeff: String,
        }
        let terms: Vec<Term> =
            self.terms.iter().map(|(st, c)| Term { structure: st.to_text(), coeff: c.to_string() }).collect();
        let mut out = s.serialize_struct("QVector", 2)?;
        out.serialize_field("ambient", &self.ambient)?;
        out.serialize_field("terms", &terms)?;
        out.end()
    }
}

/// An element of `p[S] ⊗ q[T]` in the basis of pairs of structures.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QTensor {
    left: FiniteSet,
    right: FiniteSet,
    terms: BTreeMap<(Structure, Structure), Rational>,
}

impl QTensor {
    pub fn zero(left: FiniteSet, right: FiniteSet) -> Self {
        QTensor { left, right, terms: BTreeMap::new() }
    }

    /// `x ⊗ y` with coefficient 1.
    pub fn pure(x: Structure, y: Structure) -> Self {
        let mut t = QTensor::zero(x.labels(), y.labels());
        t.add_term(x, y, Rational::one());
        t
    }

    pub fn left(&self) -> &FiniteSet {
        &self.left
    }

    pub fn right(&self) -> &FiniteSet {
        &self.right
    }

    pub fn add_term(&mut self, x: Structure, y: Structure, c: Rational) {
        debug_assert_eq!(x.labels(), self.left);
        debug_assert_eq!(y.labels(), self.right);
        add_into(&mut self.terms, (x, y), c);
    }

    pub fn add_scaled(&mut self, other: &QTensor, c: &Rational) {
        for ((x, y), v) in &other.terms {
            self.add_term(x.clone(), y.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> QTensor {
        let mut out = QTensor::zero(self.left.clone(), self.right.clone());
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Structure, Structure), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, x: &Structure, y: &Structure) -> Rational {
        self.terms.get(&(x.clone(), y.clone())).cloned().unwrap_or_else(Rational::zero)
    }

    /// The flip `p[S] ⊗ q[T] → q[T] ⊗ p[S]`.
    pub fn swap(&self) -> QTensor {
        let mut out = QTensor::zero(self.right.clone(), self.left.clone());
        for ((x, y), c) in &self.terms {
            out.add_term(y.clone(), x.clone(), c.clone());
        }
        out
    }

    /// The single basis tensor with coefficient 1, if the tensor is one.
    pub fn as_basis_element(&self) -> Option<(&Structure, &Structure)> {
        match self.terms.iter().next() {
            Some(((x, y), c)) if self.terms.len() == 1 && c.is_one() => Some((x, y)),
            _ => None,
        }
    }

    pub fn relabel(&self, sigma: &Bijection) -> QTensor {
        let mut out = QTensor::zero(sigma.apply_set(&self.left), sigma.apply_set(&self.right));
        for ((x, y), c) in &self.terms {
            out.add_term(x.relabel(sigma), y.relabel(sigma), c.clone());
        }
        out
    }

    /// `(f ⊗ g)(self)` for linear maps given on basis elements.
    pub fn map(
        &self,
        left: FiniteSet,
        right: FiniteSet,
        f: impl Fn(&Structure) -> QVector,
        g: impl Fn(&Structure) -> QVector,
    ) -> QTensor {
        let mut out = QTensor::zero(left, right);
        for ((x, y), c) in &self.terms {
            let fx = f(x);
            let gy = g(y);
            for (a, ca) in fx.iter() {
                for (b, cb) in gy.iter() {
                    out.add_term(a.clone(), b.clone(), c * ca * cb);
                }
            }
        }
        out
    }
}

impl fmt::Display for QTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|((x, y), c)| (format!("({x} ⊗ {y})"), c)))
    }
}

impl Serialize for QTensor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            left: String,
            right: String,
            coeff: String,
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|((x, y), c)| Term { left: x.to_text(), right: y.to_text(), coeff: c.to_string() })
            .collect();
        let mut out = s.serialize_struct("QTensor", 3)?;
        out.serialize_field("left", &self.left)?;
        out.serialize_field("right", &self.right)?;
        out.serialize_field("terms", &terms)?;
        out.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;

    fn ord(text: &str) -> Structure {
        let set = FiniteSet::new(text.split('|').map(|l| super::super::Label::new(l).unwrap()).collect()).unwrap();
        Structure::from_text("order", &set, text).unwrap()
    }

    #[test]
    fn cancellation_never_stores_zero() {
        let mut v = QVector::basis(ord("a|b"));
        v.add_term(ord("b|a"), rat(-1, 1));
        assert_eq!(v.to_string(), "a|b - b|a");
        v.add_term(ord("a|b"), rat(-1, 1));
        assert_eq!(v.len(), 1);
        assert_eq!(v.to_string(), "-b|a");
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"{"ambient":["a","b"],"terms":[{"structure":"b|a","coeff":"-1"}]}"#);
    }

    #[test]
    fn tensor_swap() {
        let t = QTensor::pure(ord("a|c"), ord("b"));
        let s = t.swap();
        assert_eq!(s.coeff(&ord("b"), &ord("a|c")), rat(1, 1));
        assert_eq!(s.swap(), t);
    }
}
