use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A short ASCII token naming one element of a finite set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(Arc<str>);

impl Label {
    pub fn new(text: &str) -> Result<Self> {
        if text.is_empty() || !text.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(Error::InvalidLabels(format!(
                "label `{text}` must be a nonempty token of ASCII letters, digits or `_`"
            )));
        }
        Ok(Label(Arc::from(text)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Label::new(&text).map_err(serde::de::Error::custom)
    }
}

/// A finite set of labels, kept sorted. The sorted order is the default
/// reference linear order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Label>", into = "Vec<Label>")]
pub struct FiniteSet {
    labels: Vec<Label>,
}

impl TryFrom<Vec<Label>> for FiniteSet {
    type Error = Error;

    fn try_from(labels: Vec<Label>) -> Result<Self> {
        FiniteSet::new(labels)
    }
}

impl From<FiniteSet> for Vec<Label> {
    fn from(set: FiniteSet) -> Self {
        set.labels
    }
}

impl FiniteSet {
    /// Sorts the labels; repeated labels are an error.
    pub fn new(mut labels: Vec<Label>) -> Result<Self> {
        labels.sort();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidLabels(format!("repeated label `{}`", w[0])));
        }
        Ok(FiniteSet { labels })
    }

    pub fn empty() -> Self {
        FiniteSet::default()
    }

    /// Parses `"a,b,c"` (commas and/or whitespace).
    pub fn parse(text: &str) -> Result<Self> {
        let labels = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(Label::new)
            .collect::<Result<Vec<_>>>()?;
        FiniteSet::new(labels)
    }

    /// `{a, b, c, ...}` with `n` letters; `n ≤ 26`.
    pub fn standard(n: usize) -> Self {
        assert!(n <= 26, "standard label sets use single letters");
        let labels = (0..n).map(|i| Label(Arc::from(((b'a' + i as u8) as char).to_string().as_str()))).collect();
        FiniteSet { labels }
    }

    pub(crate) fn from_sorted_unchecked(labels: Vec<Label>) -> Self {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        FiniteSet { labels }
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn contains(&self, label: &Label) -> bool {
        self.labels.binary_search(label).is_ok()
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Label> {
        self.labels.iter()
    }

    pub fn union(&self, other: &FiniteSet) -> Result<FiniteSet> {
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        FiniteSet::new(labels)
    }

    pub fn intersection(&self, other: &FiniteSet) -> FiniteSet {
        FiniteSet::from_sorted_unchecked(self.labels.iter().filter(|l| other.contains(l)).cloned().collect())
    }

    pub fn difference(&self, other: &FiniteSet) -> FiniteSet {
        FiniteSet::from_sorted_unchecked(self.labels.iter().filter(|l| !other.contains(l)).cloned().collect())
    }

    pub fn is_disjoint(&self, other: &FiniteSet) -> bool {
        self.labels.iter().all(|l| !other.contains(l))
    }

    /// Subset picked by a bitmask over positions.
    pub fn subset_by_mask(&self, mask: u64) -> FiniteSet {
        FiniteSet::from_sorted_unchecked(
            self.labels.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, l)| l.clone()).collect(),
        )
    }

    /// Whether every label is a single character; such sets print blocks as
    /// `ab` rather than `a,b`.
    pub fn single_char_labels(&self) -> bool {
        self.labels.iter().all(|l| l.0.len() == 1)
    }
}

impl fmt::Debug for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An ordered decomposition `I = S ⊔ T`. `(S, T)` and `(T, S)` differ.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decomposition {
    s: FiniteSet,
    t: FiniteSet,
    ambient: FiniteSet,
}

impl Decomposition {
    pub fn new(s: FiniteSet, t: FiniteSet) -> Result<Self> {
        if !s.is_disjoint(&t) {
            return Err(Error::InvalidLabels(format!("{s} and {t} are not disjoint")));
        }
        let ambient = s.union(&t)?;
        Ok(Decomposition { s, t, ambient })
    }

    /// The decomposition of `ambient` with first part `s`.
    pub fn of(ambient: &FiniteSet, s: FiniteSet) -> Self {
        let t = ambient.difference(&s);
        debug_assert_eq!(s.len() + t.len(), ambient.len());
        Decomposition { s, t, ambient: ambient.clone() }
    }

    pub fn s(&self) -> &FiniteSet {
        &self.s
    }

    pub fn t(&self) -> &FiniteSet {
        &self.t
    }

    pub fn ambient(&self) -> &FiniteSet {
        &self.ambient
    }

    pub fn swapped(&self) -> Decomposition {
        Decomposition { s: self.t.clone(), t: self.s.clone(), ambient: self.ambient.clone() }
    }

    pub fn is_proper(&self) -> bool {
        !self.s.is_empty() && !self.t.is_empty()
    }

    /// All `2^n` ordered decompositions of `set`.
    pub fn all(set: &FiniteSet) -> Vec<Decomposition> {
        (0..1u64 << set.len()).map(|m| Decomposition::of(set, set.subset_by_mask(m))).collect()
    }

    /// Decompositions with both parts nonempty.
    pub fn proper(set: &FiniteSet) -> Vec<Decomposition> {
        Decomposition::all(set).into_iter().filter(Decomposition::is_proper).collect()
    }
}

/// All `3^n` ordered triples `(R, S, T)` with `R ⊔ S ⊔ T = set`.
pub fn triple_decompositions(set: &FiniteSet) -> Vec<(FiniteSet, FiniteSet, FiniteSet)> {
    let n = set.len();
    let total = 3usize.pow(n as u32);
    (0..total)
        .map(|mut code| {
            let mut parts: [Vec<Label>; 3] = Default::default();
            for l in set.iter() {
                parts[code % 3].push(l.clone());
                code /= 3;
            }
            let [r, s, t] = parts.map(FiniteSet::from_sorted_unchecked);
            (r, s, t)
        })
        .collect()
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self.map.iter().map(|(k, v)| format!("{k}→{v}")).collect();
        write!(f, "{{{}}}", pairs.join(","))
    }
}

/// A bijection between two finite label sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bijection {
    map: BTreeMap<Label, Label>,
}

impl Bijection {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Label, Label)>) -> Result<Self> {
        let map: BTreeMap<Label, Label> = pairs.into_iter().collect();
        let mut images: Vec<&Label> = map.values().collect();
        images.sort();
        images.dedup();
        if images.len() != map.len() {
            return Err(Error::InvalidLabels("relabeling is not injective".into()));
        }
        Ok(Bijection { map })
    }

    pub fn identity(set: &FiniteSet) -> Self {
        Bijection { map: set.iter().map(|l| (l.clone(), l.clone())).collect() }
    }

    /// Sends `from[i]` to `to[i]`.
    pub fn zip(from: &[Label], to: &[Label]) -> Result<Self> {
        if from.len() != to.len() {
            return Err(Error::DimensionMismatch("bijection between sets of different sizes".into()));
        }
        Bijection::from_pairs(from.iter().cloned().zip(to.iter().cloned()))
    }

    pub fn apply(&self, l: &Label) -> Label {
        self.map.get(l).cloned().unwrap_or_else(|| panic!("label `{l}` outside the domain of the relabeling"))
    }

    pub fn apply_set(&self, set: &FiniteSet) -> FiniteSet {
        let mut labels: Vec<Label> = set.iter().map(|l| self.apply(l)).collect();
        labels.sort();
        FiniteSet::from_sorted_unchecked(labels)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Bijection) -> Bijection {
        Bijection { map: other.map.iter().map(|(k, v)| (k.clone(), self.apply(v))).collect() }
    }

    pub fn inverse(&self) -> Bijection {
        Bijection { map: self.map.iter().map(|(k, v)| (v.clone(), k.clone())).collect() }
    }

    /// All `n!` permutations of `set`, in lexicographic order of images.
    pub fn permutations(set: &FiniteSet) -> Vec<Bijection> {
        crate::species::combinat::permutations(set.len())
            .into_iter()
            .map(|p| Bijection { map: set.iter().cloned().zip(p.iter().map(|&i| set.labels()[i].clone())).collect() })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_validate() {
        assert!(Label::new("a").is_ok());
        assert!(Label::new("x_12").is_ok());
        assert!(Label::new("").is_err());
        assert!(Label::new("a|b").is_err());
        assert!(FiniteSet::parse("a,b,a").is_err());
    }

    #[test]
    fn sets_sort_and_decompose() {
        let set = FiniteSet::parse("c, a, b").unwrap();
        assert_eq!(set.to_string(), "{a,b,c}");
        assert_eq!(Decomposition::all(&set).len(), 8);
        assert_eq!(Decomposition::proper(&set).len(), 6);
        assert_eq!(triple_decompositions(&set).len(), 27);
        let d = Decomposition::new(FiniteSet::parse("a").unwrap(), FiniteSet::parse("b,c").unwrap()).unwrap();
        assert_eq!(d.ambient(), &set);
        assert_ne!(d, d.swapped());
        assert!(Decomposition::new(set.clone(), FiniteSet::parse("a").unwrap()).is_err());
    }

    #[test]
    fn bijection_algebra() {
        let set = FiniteSet::standard(3);
        let perms = Bijection::permutations(&set);
        assert_eq!(perms.len(), 6);
        for p in &perms {
            assert_eq!(p.compose(&p.inverse()), Bijection::identity(&set));
        }
    }
}
