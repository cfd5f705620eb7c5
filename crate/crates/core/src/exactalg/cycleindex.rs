//! Cycle index polynomials in `x_1, x_2, ...`, truncated by weighted degree
//! `Σ i·e_i`.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::series::TruncatedSeries;
use crate::error::{Error, Result};

/// Exponent vector: `exps[i]` is the exponent of `x_{i+1}`. Trailing zeros
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial { exps }
    }

    pub fn one() -> Self {
        Monomial::default()
    }

    /// `x_i` for `i ≥ 1`.
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "cycle index variables start at x_1");
        let mut exps = vec![0; i];
        exps[i - 1] = 1;
        Monomial { exps }
    }

    /// The monomial `Π x_i^{m_i}` of a cycle type given as a list of cycle lengths.
    pub fn from_cycle_type(lengths: &[usize]) -> Self {
        let mut exps = Vec::new();
        for &len in lengths {
            if exps.len() < len {
                exps.resize(len, 0);
            }
            exps[len - 1] += 1;
        }
        Monomial::new(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn weighted_degree(&self) -> usize {
        self.exps.iter().enumerate().map(|(i, &e)| (i + 1) * e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.exps.len().max(other.exps.len());
        let exps = (0..len)
            .map(|i| self.exps.get(i).copied().unwrap_or(0) + other.exps.get(i).copied().unwrap_or(0))
            .collect();
        Monomial::new(exps)
    }

    fn only_x1(&self) -> bool {
        self.exps.len() <= 1
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: weighted degree first, then exponent vectors.
    fn cmp(&self, other: &Self) -> Ordering {
        self.weighted_degree().cmp(&other.weighted_degree()).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Specialization {
    /// `x_1 = x`, `x_i = 0` for `i ≥ 2`: the exponential generating series.
    Exp,
    /// `x_i = x^i`: the type generating series.
    Type,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleIndexPoly {
    order: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl CycleIndexPoly {
    pub fn zero(order: usize) -> Self {
        CycleIndexPoly { order, terms: BTreeMap::new() }
    }

    pub fn one(order: usize) -> Self {
        let mut p = Self::zero(order);
        p.add_term(Monomial::one(), Rational::one());
        p
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c·m`, dropping it if it exceeds the truncation order.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if m.weighted_degree() > self.order || c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.order.min(other.order));
        for (m, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.order);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.order.min(other.order));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.weighted_degree() + mb.weighted_degree() <= out.order {
                    out.add_term(ma.mul(mb), ca * cb);
                }
            }
        }
        out
    }

    /// `self / den`; the constant term of `den` must be exactly 1.
    pub fn div(&self, den: &Self) -> Result<Self> {
        if !den.constant_term().is_one() {
            return Err(Error::BadConstantTerm(format!(
                "cycle index divisor needs constant term 1, got {}",
                den.constant_term()
            )));
        }
        let order = self.order.min(den.order);
        // 1/(1 + u) = Σ (-u)^k, and u has weighted degree ≥ 1.
        let mut minus_u = den.scale(&-Rational::one());
        minus_u.order = order;
        minus_u.terms.remove(&Monomial::one());
        let mut inverse = Self::one(order);
        let mut power = Self::one(order);
        for _ in 0..order {
            power = power.mul(&minus_u);
            inverse = inverse.add(&power);
        }
        Ok(self.mul(&inverse))
    }

    pub fn specialize(&self, mode: Specialization) -> TruncatedSeries {
        let mut coeffs = vec![Rational::zero(); self.order + 1];
        for (m, c) in &self.terms {
            match mode {
                Specialization::Exp => {
                    if m.only_x1() {
                        coeffs[m.exps.first().copied().unwrap_or(0) as usize] += c;
                    }
                }
                Specialization::Type => coeffs[m.weighted_degree()] += c,
            }
        }
        TruncatedSeries::new(coeffs)
    }
}

impl fmt::Display for CycleIndexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.exps.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;

    /// Z_E up to weighted degree 3, by Burnside over S_n: every permutation fixes
    /// the single structure, so the coefficient of a cycle type is 1/z_λ.
    fn z_e3() -> CycleIndexPoly {
        let mut z = CycleIndexPoly::zero(3);
        for (lengths, c) in [
            (vec![], rat(1, 1)),
            (vec![1], rat(1, 1)),
            (vec![1, 1], rat(1, 2)),
            (vec![2], rat(1, 2)),
            (vec![1, 1, 1], rat(1, 6)),
            (vec![2, 1], rat(1, 2)),
            (vec![3], rat(1, 3)),
        ] {
            z.add_term(Monomial::from_cycle_type(&lengths), c);
        }
        z
    }

    #[test]
    fn exp_and_type_specializations_of_e() {
        let z = z_e3();
        assert_eq!(
            z.specialize(Specialization::Exp),
            TruncatedSeries::new(vec![rat(1, 1), rat(1, 1), rat(1, 2), rat(1, 6)])
        );
        assert_eq!(z.specialize(Specialization::Type), TruncatedSeries::from_integers(&[1, 1, 1, 1]));
    }

    #[test]
    fn graded_lex_printing() {
        assert_eq!(z_e3().to_string(), "1 + x1 + 1/2*x2 + 1/2*x1^2 + 1/3*x3 + 1/2*x1*x2 + 1/6*x1^3");
    }

    #[test]
    fn division_round_trip_and_errors() {
        let z = z_e3();
        let sq = z.mul(&z);
        assert_eq!(sq.div(&z).unwrap(), z);
        let two = CycleIndexPoly::one(3).scale(&rat(2, 1));
        assert!(z.div(&two).is_err());
    }

    #[test]
    fn specialization_is_multiplicative() {
        let z = z_e3();
        let mut w = CycleIndexPoly::one(3);
        w.add_term(Monomial::var(2), rat(-3, 2));
        w.add_term(Monomial::var(1), rat(2, 1));
        for mode in [Specialization::Exp, Specialization::Type] {
            assert_eq!(z.mul(&w).specialize(mode), z.specialize(mode).mul(&w.specialize(mode)));
        }
    }

    #[test]
    fn truncation_drops_high_degree() {
        let mut p = CycleIndexPoly::zero(2);
        p.add_term(Monomial::var(3), rat(1, 1));
        assert_eq!(p, CycleIndexPoly::zero(2));
    }
}
