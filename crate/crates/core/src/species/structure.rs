//! Labeled combinatorial structures: the basis elements of every species in
//! the crate.
//!
//! Every variant stores its content in a canonical form (blocks sorted,
//! partition blocks ordered by least label, functions ordered by label) so
//! derived equality and ordering are structural.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::label::{Bijection, FiniteSet, Label};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Structure {
    /// The basis element `*_I` of `E[I]`.
    Mark(FiniteSet),
    /// The basis element of `X[{a}]`.
    Singleton(Label),
    /// A linear order, first to last.
    Order(Vec<Label>),
    /// A set partition; blocks sorted, ordered by least label.
    Partition(Vec<Vec<Label>>),
    /// A set composition; each block sorted, blocks in their given order.
    Composition(Vec<Vec<Label>>),
    /// A set composition whose block-size word is a palindrome.
    PalComposition(Vec<Vec<Label>>),
    /// A function `I → {1, ..., k}`, as `(label, value)` pairs sorted by label.
    Function(Vec<(Label, u32)>),
    /// A distinguished label of the ambient set.
    Element { ambient: FiniteSet, chosen: Label },
    /// A structure of a Hadamard product.
    Pair(Box<Structure>, Box<Structure>),
}

fn sorted(mut v: Vec<Label>) -> Vec<Label> {
    v.sort();
    v
}

fn sizes(blocks: &[Vec<Label>]) -> Vec<usize> {
    blocks.iter().map(Vec::len).collect()
}

pub fn is_palindrome(word: &[usize]) -> bool {
    word.iter().eq(word.iter().rev())
}

impl Structure {
    pub fn order(labels: &[&str]) -> Result<Structure> {
        let labels = labels.iter().map(|l| Label::new(l)).collect::<Result<Vec<_>>>()?;
        FiniteSet::new(labels.clone())?;
        Ok(Structure::Order(labels))
    }

    pub fn partition(blocks: Vec<Vec<Label>>) -> Structure {
        let mut blocks: Vec<Vec<Label>> = blocks.into_iter().map(sorted).collect();
        blocks.sort();
        Structure::Partition(blocks)
    }

    pub fn composition(blocks: Vec<Vec<Label>>) -> Structure {
        Structure::Composition(blocks.into_iter().map(sorted).collect())
    }

    /// A palindromic composition; panics if the block sizes are not palindromic.
    pub fn pal_composition(blocks: Vec<Vec<Label>>) -> Structure {
        assert!(is_palindrome(&sizes(&blocks)), "block sizes are not palindromic");
        Structure::PalComposition(blocks.into_iter().map(sorted).collect())
    }

    pub fn function(mut pairs: Vec<(Label, u32)>) -> Structure {
        pairs.sort();
        Structure::Function(pairs)
    }

    pub fn pair(a: Structure, b: Structure) -> Structure {
        Structure::Pair(Box::new(a), Box::new(b))
    }

    pub fn kind(&self) -> String {
        match self {
            Structure::Mark(_) => "mark".into(),
            Structure::Singleton(_) => "singleton".into(),
            Structure::Order(_) => "order".into(),
            Structure::Partition(_) => "partition".into(),
            Structure::Composition(_) => "composition".into(),
            Structure::PalComposition(_) => "pal".into(),
            Structure::Function(_) => "function".into(),
            Structure::Element { .. } => "element".into(),
            Structure::Pair(a, b) => format!("pair({},{})", a.kind(), b.kind()),
        }
    }

    /// Every label occurring in the structure, with repetition.
    fn label_list(&self) -> Vec<Label> {
        match self {
            Structure::Mark(set) | Structure::Element { ambient: set, .. } => set.labels().to_vec(),
            Structure::Singleton(l) => vec![l.clone()],
            Structure::Order(v) => v.clone(),
            Structure::Partition(bs) | Structure::Composition(bs) | Structure::PalComposition(bs) => bs.concat(),
            Structure::Function(pairs) => pairs.iter().map(|(l, _)| l.clone()).collect(),
            Structure::Pair(a, _) => a.label_list(),
        }
    }

    /// The underlying label set.
    pub fn labels(&self) -> FiniteSet {
        FiniteSet::from_sorted_unchecked(sorted(self.label_list()))
    }

    /// Transport along a bijection defined on the underlying set.
    pub fn relabel(&self, sigma: &Bijection) -> Structure {
        let map = |v: &[Label]| v.iter().map(|l| sigma.apply(l)).collect::<Vec<_>>();
        match self {
            Structure::Mark(set) => Structure::Mark(sigma.apply_set(set)),
            Structure::Singleton(l) => Structure::Singleton(sigma.apply(l)),
            Structure::Order(v) => Structure::Order(map(v)),
            Structure::Partition(bs) => Structure::partition(bs.iter().map(|b| map(b)).collect()),
            Structure::Composition(bs) => Structure::composition(bs.iter().map(|b| map(b)).collect()),
            Structure::PalComposition(bs) => Structure::PalComposition(bs.iter().map(|b| sorted(map(b))).collect()),
            Structure::Function(pairs) => {
                Structure::function(pairs.iter().map(|(l, v)| (sigma.apply(l), *v)).collect())
            }
            Structure::Element { ambient, chosen } => {
                Structure::Element { ambient: sigma.apply_set(ambient), chosen: sigma.apply(chosen) }
            }
            Structure::Pair(a, b) => Structure::pair(a.relabel(sigma), b.relabel(sigma)),
        }
    }

    /// Restriction to `s ⊆ I`, deleting emptied blocks. `None` for kinds with
    /// no restriction (singletons, elements).
    pub fn restrict(&self, s: &FiniteSet) -> Option<Structure> {
        let keep = |v: &[Label]| v.iter().filter(|l| s.contains(l)).cloned().collect::<Vec<_>>();
        let keep_blocks = |bs: &[Vec<Label>]| bs.iter().map(|b| keep(b)).filter(|b| !b.is_empty()).collect::<Vec<_>>();
        Some(match self {
            Structure::Mark(set) => Structure::Mark(set.intersection(s)),
            Structure::Order(v) => Structure::Order(keep(v)),
            Structure::Partition(bs) => Structure::partition(keep_blocks(bs)),
            Structure::Composition(bs) => Structure::Composition(keep_blocks(bs)),
            Structure::PalComposition(bs) => {
                let blocks = keep_blocks(bs);
                if !is_palindrome(&sizes(&blocks)) {
                    return None;
                }
                Structure::PalComposition(blocks)
            }
            Structure::Function(pairs) => {
                Structure::Function(pairs.iter().filter(|(l, _)| s.contains(l)).cloned().collect())
            }
            Structure::Pair(a, b) => Structure::pair(a.restrict(s)?, b.restrict(s)?),
            Structure::Singleton(_) | Structure::Element { .. } => return None,
        })
    }

    /// A complete invariant of the `S_n`-orbit, when one is cheap to compute.
    pub fn orbit_invariant(&self) -> Option<Vec<usize>> {
        match self {
            Structure::Mark(_) | Structure::Singleton(_) | Structure::Order(_) => Some(Vec::new()),
            Structure::Element { .. } => Some(Vec::new()),
            Structure::Partition(bs) => {
                let mut s = sizes(bs);
                s.sort_unstable_by(|a, b| b.cmp(a));
                Some(s)
            }
            Structure::Composition(bs) | Structure::PalComposition(bs) => Some(sizes(bs)),
            Structure::Function(pairs) => {
                let max = pairs.iter().map(|p| p.1).max().unwrap_or(0) as usize;
                let mut fibers = vec![0usize; max];
                for (_, v) in pairs {
                    fibers[*v as usize - 1] += 1;
                }
                Some(fibers)
            }
            Structure::Pair(..) => None,
        }
    }

    /// Compact text: `ab.c` for partitions, `ab|c` for compositions,
    /// `a|b|c` for linear orders, `a→1,b→2` for functions.
    pub fn to_text(&self) -> String {
        let single = self.labels().single_char_labels();
        let block = |b: &[Label]| {
            let parts: Vec<&str> = b.iter().map(Label::as_str).collect();
            parts.join(if single { "" } else { "," })
        };
        let blocks = |bs: &[Vec<Label>], sep: &str| {
            if bs.is_empty() {
                "∅".to_string()
            } else {
                bs.iter().map(|b| block(b)).collect::<Vec<_>>().join(sep)
            }
        };
        match self {
            Structure::Mark(_) => "*".into(),
            Structure::Singleton(l) => l.to_string(),
            Structure::Order(v) if v.is_empty() => "∅".into(),
            Structure::Order(v) => v.iter().map(Label::as_str).collect::<Vec<_>>().join("|"),
            Structure::Partition(bs) => blocks(bs, "."),
            Structure::Composition(bs) | Structure::PalComposition(bs) => blocks(bs, "|"),
            Structure::Function(pairs) if pairs.is_empty() => "∅".into(),
            Structure::Function(pairs) => pairs.iter().map(|(l, v)| format!("{l}→{v}")).collect::<Vec<_>>().join(","),
            Structure::Element { chosen, .. } => chosen.to_string(),
            Structure::Pair(a, b) => {
                let wrap = |s: &Structure| {
                    let t = s.to_text();
                    if t.contains('×') {
                        format!("({t})")
                    } else {
                        t
                    }
                };
                format!("{}×{}", wrap(a), wrap(b))
            }
        }
    }

    /// Inverse of [`Structure::to_text`] given the kind and the label set.
    pub fn from_text(kind: &str, labels: &FiniteSet, value: &str) -> Result<Structure> {
        let bad = |why: &str| Error::Parse(format!("{kind} `{value}` on {labels}: {why}"));
        let single = labels.single_char_labels();
        let parse_label = |t: &str| -> Result<Label> {
            let l = Label::new(t)?;
            if !labels.contains(&l) {
                return Err(bad(&format!("label `{t}` not in the label set")));
            }
            Ok(l)
        };
        let parse_block = |t: &str| -> Result<Vec<Label>> {
            if single {
                t.chars().map(|c| parse_label(&c.to_string())).collect()
            } else {
                t.split(',').map(parse_label).collect()
            }
        };
        let parse_blocks = |sep: char| -> Result<Vec<Vec<Label>>> {
            if value == "∅" || value.is_empty() {
                return Ok(Vec::new());
            }
            value.split(sep).map(parse_block).collect()
        };
        let s = match kind {
            "mark" if value == "*" => Structure::Mark(labels.clone()),
            "singleton" => Structure::Singleton(parse_label(value)?),
            "order" => {
                if value == "∅" || value.is_empty() {
                    Structure::Order(Vec::new())
                } else {
                    Structure::Order(value.split('|').map(parse_label).collect::<Result<_>>()?)
                }
            }
            "partition" => Structure::partition(parse_blocks('.')?),
            "composition" => Structure::composition(parse_blocks('|')?),
            "pal" => {
                let bs = parse_blocks('|')?;
                if !is_palindrome(&sizes(&bs)) {
                    return Err(bad("block sizes are not palindromic"));
                }
                Structure::pal_composition(bs)
            }
            "function" => {
                let mut pairs = Vec::new();
                if value != "∅" && !value.is_empty() {
                    for item in value.split(',') {
                        let (l, v) = item
                            .split_once('→')
                            .or_else(|| item.split_once("->"))
                            .ok_or_else(|| bad("expected `label→value`"))?;
                        let v: u32 = v.trim().parse().map_err(|_| bad("bad function value"))?;
                        if v == 0 {
                            return Err(bad("function values start at 1"));
                        }
                        pairs.push((parse_label(l.trim())?, v));
                    }
                }
                Structure::function(pairs)
            }
            "element" => Structure::Element { ambient: labels.clone(), chosen: parse_label(value)? },
            k if k.starts_with("pair(") && k.ends_with(')') => {
                let inner = &k[5..k.len() - 1];
                let (ka, kb) = split_top_level(inner, ',').ok_or_else(|| bad("bad pair kind"))?;
                let (va, vb) = split_top_level(value, '×').ok_or_else(|| bad("expected `x×y`"))?;
                let unwrap = |t: &str| {
                    if t.starts_with('(') && t.ends_with(')') {
                        t[1..t.len() - 1].to_string()
                    } else {
                        t.to_string()
                    }
                };
                Structure::pair(
                    Structure::from_text(&ka, labels, &unwrap(&va))?,
                    Structure::from_text(&kb, labels, &unwrap(&vb))?,
                )
            }
            _ => return Err(bad("unknown kind or value")),
        };
        let listed = FiniteSet::new(s.label_list()).map_err(|_| bad("repeated label"))?;
        if &listed != labels {
            return Err(bad("structure does not cover exactly the label set"));
        }
        if let Structure::Pair(a, b) = &s {
            if a.labels() != b.labels() {
                return Err(bad("pair components live on different sets"));
            }
        }
        Ok(s)
    }
}

/// Splits at the first `sep` not nested in parentheses.
fn split_top_level(text: &str, sep: char) -> Option<(String, String)> {
    let mut depth = 0i32;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => return Some((text[..i].to_string(), text[i + c.len_utf8()..].to_string())),
            _ => {}
        }
    }
    None
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Serialize, Deserialize)]
struct RawStructure {
    kind: String,
    labels: FiniteSet,
    value: String,
}

impl Serialize for Structure {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawStructure { kind: self.kind(), labels: self.labels(), value: self.to_text() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Structure {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawStructure::deserialize(d)?;
        Structure::from_text(&raw.kind, &raw.labels, &raw.value).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Label {
        Label::new(s).unwrap()
    }

    fn blocks(text: &str, sep: char) -> Vec<Vec<Label>> {
        text.split(sep).map(|b| b.chars().map(|c| l(&c.to_string())).collect()).collect()
    }

    #[test]
    fn compact_text_forms() {
        assert_eq!(Structure::partition(blocks("c.ba", '.')).to_text(), "ab.c");
        assert_eq!(Structure::composition(blocks("ba|c", '|')).to_text(), "ab|c");
        assert_eq!(Structure::order(&["a", "b", "c"]).unwrap().to_text(), "a|b|c");
        assert_eq!(Structure::function(vec![(l("b"), 2), (l("a"), 1)]).to_text(), "a→1,b→2");
        assert_eq!(Structure::Order(vec![]).to_text(), "∅");
    }

    #[test]
    fn multi_char_labels_use_commas() {
        let p = Structure::partition(vec![vec![l("x1"), l("x2")], vec![l("y")]]);
        assert_eq!(p.to_text(), "x1,x2.y");
        let back = Structure::from_text("partition", &p.labels(), "x1,x2.y").unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn json_wrapping() {
        let s = Structure::pal_composition(blocks("e|abcd|f", '|'));
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"kind":"pal","labels":["a","b","c","d","e","f"],"value":"e|abcd|f"}"#);
        assert_eq!(serde_json::from_str::<Structure>(&json).unwrap(), s);
        let bad = r#"{"kind":"pal","labels":["a","b","c"],"value":"a|bc"}"#;
        assert!(serde_json::from_str::<Structure>(bad).is_err());
    }

    #[test]
    fn pair_round_trip() {
        let s = Structure::pair(Structure::order(&["b", "a"]).unwrap(), Structure::partition(blocks("ab", '.')));
        let text = s.to_text();
        assert_eq!(text, "b|a×ab");
        assert_eq!(Structure::from_text(&s.kind(), &s.labels(), &text).unwrap(), s);
    }

    #[test]
    fn from_text_rejects_wrong_cover() {
        let set = FiniteSet::standard(3);
        assert!(Structure::from_text("order", &set, "a|b").is_err());
        assert!(Structure::from_text("order", &set, "a|b|b").is_err());
        assert!(Structure::from_text("partition", &set, "ab.cd").is_err());
    }

    #[test]
    fn restriction_drops_empty_blocks() {
        let c = Structure::composition(blocks("ad|b|e|cf", '|'));
        let s = FiniteSet::parse("a,b").unwrap();
        assert_eq!(c.restrict(&s).unwrap().to_text(), "a|b");
        let pal = Structure::pal_composition(blocks("ab|cd", '|'));
        assert_eq!(pal.restrict(&FiniteSet::parse("a,c,d").unwrap()), None);
    }
}
