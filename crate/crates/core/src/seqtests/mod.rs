//! Necessary conditions on the dimension sequence of a connected Hopf monoid.
//!
//! Each test takes exact integer data and returns a [`TestReport`]. A failing
//! report names the least violated index and the exact offending value.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::rational::int;
use crate::exactalg::{binomial_transform, Rational, TruncatedSeries};
use crate::report::{InequalityCheck, TestReport, Verdict};
use crate::species::{orbit_count, Species};

/// A JSON integer, or a decimal string for values beyond `u64`.
#[derive(Deserialize)]
#[serde(untagged)]
enum JsonInt {
    Small(u64),
    Text(String),
}

fn parse_ints<'de, D: Deserializer<'de>>(raw: Vec<JsonInt>) -> std::result::Result<Vec<BigInt>, D::Error> {
    raw.into_iter()
        .map(|v| match v {
            JsonInt::Small(n) => Ok(BigInt::from(n)),
            JsonInt::Text(t) => match t.trim().parse::<BigInt>() {
                Ok(n) if !n.is_negative() => Ok(n),
                _ => Err(D::Error::custom(format!("`{t}` is not a nonnegative integer"))),
            },
        })
        .collect()
}

fn serialize_ints<S: Serializer>(values: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(values.len()))?;
    for v in values {
        match v.to_u64() {
            Some(n) => seq.serialize_element(&n)?,
            None => seq.serialize_element(&v.to_string())?,
        }
    }
    seq.end()
}

/// A dimension sequence `a_n = dim h[n]`, optionally with the type
/// dimensions `ā_n = dim h[n]_{S_n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimSequence {
    pub name: String,
    pub a: Vec<BigInt>,
    pub abar: Option<Vec<BigInt>>,
}

#[derive(Deserialize)]
struct RawDimSequence {
    #[serde(default)]
    name: String,
    a: Vec<JsonInt>,
    #[serde(default)]
    abar: Option<Vec<JsonInt>>,
}

impl<'de> Deserialize<'de> for DimSequence {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawDimSequence::deserialize(d)?;
        let a = parse_ints::<D>(raw.a)?;
        let abar = raw.abar.map(parse_ints::<D>).transpose()?;
        DimSequence::with_types(raw.name, a, abar).map_err(D::Error::custom)
    }
}

impl Serialize for DimSequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        struct Ints<'a>(&'a [BigInt]);
        impl Serialize for Ints<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                serialize_ints(self.0, s)
            }
        }
        let mut out = s.serialize_struct("DimSequence", 3)?;
        out.serialize_field("name", &self.name)?;
        out.serialize_field("a", &Ints(&self.a))?;
        if let Some(abar) = &self.abar {
            out.serialize_field("abar", &Ints(abar))?;
        }
        out.end()
    }
}

impl DimSequence {
    pub fn new<T: Into<BigInt>>(name: impl Into<String>, a: impl IntoIterator<Item = T>) -> Self {
        DimSequence { name: name.into(), a: a.into_iter().map(Into::into).collect(), abar: None }
    }

    /// A sequence with type dimensions; both lists must have equal length.
    pub fn with_types(name: impl Into<String>, a: Vec<BigInt>, abar: Option<Vec<BigInt>>) -> Result<Self> {
        if let Some(b) = &abar {
            if b.len() != a.len() {
                return Err(Error::DimensionMismatch(format!("a has {} terms but abar has {}", a.len(), b.len())));
            }
        }
        if a.iter().chain(abar.iter().flatten()).any(Signed::is_negative) {
            return Err(Error::Parse("dimensions must be nonnegative".into()));
        }
        Ok(DimSequence { name: name.into(), a, abar })
    }

    /// `dim h[n]` and, if requested, `dim h[n]_{S_n}` for `n ≤ nmax`.
    pub fn from_species(sp: &dyn Species, nmax: usize, with_types: bool) -> Self {
        let a = (0..=nmax).map(|n| sp.dim(n)).collect();
        let abar = with_types.then(|| (0..=nmax).map(|n| BigInt::from(orbit_count(sp, n))).collect());
        DimSequence { name: sp.name(), a, abar }
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    fn get(&self, n: usize) -> Rational {
        int(self.a.get(n).cloned().unwrap_or_default())
    }

    fn require_connected(&self, test: &str) -> Result<()> {
        match self.a.first() {
            Some(a0) if a0.is_one() => Ok(()),
            _ => Err(Error::PreconditionFailed(format!("{test} needs a_0 = 1 for `{}`", self.name))),
        }
    }

    fn require_len(&self, test: &str, len: usize) -> Result<()> {
        if self.a.len() < len {
            return Err(Error::PreconditionFailed(format!(
                "{test} needs at least {len} terms, `{}` has {}",
                self.name,
                self.a.len()
            )));
        }
        Ok(())
    }

    fn types(&self, test: &str) -> Result<&[BigInt]> {
        self.abar
            .as_deref()
            .ok_or_else(|| Error::PreconditionFailed(format!("{test} needs type dimensions for `{}`", self.name)))
    }
}

/// Which generating series to form from a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesKind {
    Ogf,
    Egf,
    Tgf,
}

impl FromStr for SeriesKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ogf" => Ok(SeriesKind::Ogf),
            "egf" => Ok(SeriesKind::Egf),
            "tgf" => Ok(SeriesKind::Tgf),
            other => Err(Error::Parse(format!("unknown series kind `{other}`"))),
        }
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesKind::Ogf => "ogf",
            SeriesKind::Egf => "egf",
            SeriesKind::Tgf => "tgf",
        })
    }
}

/// The generating series of a sequence. The type series uses `abar` when
/// present and `a` otherwise.
pub fn series_of(seq: &DimSequence, kind: SeriesKind) -> TruncatedSeries {
    match kind {
        SeriesKind::Ogf => TruncatedSeries::ogf_from_counts(&seq.a),
        SeriesKind::Egf => TruncatedSeries::egf_from_counts(&seq.a),
        SeriesKind::Tgf => TruncatedSeries::ogf_from_counts(seq.abar.as_deref().unwrap_or(&seq.a)),
    }
}

fn named(mut report: TestReport, test: &str, seq: &DimSequence) -> TestReport {
    report.test = test.to_string();
    report.notes.insert(0, format!("sequence: {}", seq.name));
    report
}

fn truncated_quotient(num: &TruncatedSeries, den: &TruncatedSeries, order: Option<usize>) -> Result<TruncatedSeries> {
    let mut order_used = num.order().min(den.order());
    if let Some(n) = order {
        order_used = order_used.min(n);
    }
    num.truncate(order_used).div(&den.truncate(order_used))
}

/// Nonnegativity of `series(numer) / series(denom)`.
pub fn quotient_nonneg_test(numer: &DimSequence, denom: &DimSequence, kind: SeriesKind) -> Result<TestReport> {
    if numer.is_empty() || denom.is_empty() {
        return Err(Error::PreconditionFailed("empty sequence".into()));
    }
    let q = truncated_quotient(&series_of(numer, kind), &series_of(denom, kind), None)?;
    let mut report = q.nonneg_prefix();
    report.test = format!("quotient-{kind}");
    report.notes.push(format!("{} / {}", numer.name, denom.name));
    Ok(report)
}

/// The coefficient of `x^3` in OGF/EGF times 6, and of `x^4` times 24, in
/// closed form.
fn ord_exp_inequalities(seq: &DimSequence) -> Vec<InequalityCheck> {
    let a = |n| seq.get(n);
    let mut out = Vec::new();
    if seq.len() > 3 {
        out.push(InequalityCheck::new("5a3 >= 3a2a1", int(5) * a(3), int(3) * a(2) * a(1)));
    }
    if seq.len() > 4 {
        out.push(InequalityCheck::new(
            "23a4 + 12a2a1^2 >= 20a3a1 + 6a2^2",
            int(23) * a(4) + int(12) * a(2) * a(1) * a(1),
            int(20) * a(3) * a(1) + int(6) * a(2) * a(2),
        ));
    }
    out
}

/// Nonnegativity of `(Σ a_n x^n) / (Σ a_n x^n / n!)` up to `order`.
pub fn ord_exp_test(seq: &DimSequence, order: Option<usize>) -> Result<TestReport> {
    seq.require_connected("ord/exp test")?;
    let q = truncated_quotient(&series_of(seq, SeriesKind::Ogf), &series_of(seq, SeriesKind::Egf), order)?;
    let mut report = named(q.nonneg_prefix(), "ord-exp", seq);
    for check in ord_exp_inequalities(seq) {
        report.with_inequality(check);
    }
    Ok(report)
}

/// Nonnegativity of `(Σ a_n x^n) / (Σ ā_n x^n)` up to `order`, warning about
/// coefficients that are not integers.
pub fn ord_type_test(seq: &DimSequence, order: Option<usize>) -> Result<TestReport> {
    let abar = seq.types("ord/type test")?;
    let den = TruncatedSeries::ogf_from_counts(abar);
    if den.coeff(0).is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let q = truncated_quotient(&series_of(seq, SeriesKind::Ogf), &den, order)?;
    let mut report = named(q.nonneg_prefix(), "ord-type", seq);
    for (i, c) in q.coeffs().iter().enumerate() {
        if !c.is_integer() {
            report.warnings.push(format!("coefficient of x^{i} is {c}, not an integer"));
        }
    }
    Ok(report)
}

/// The binomial transform of `a` is nonnegative and `ā` is nondecreasing.
pub fn e_test(seq: &DimSequence) -> Result<TestReport> {
    seq.require_connected("E-test")?;
    let b = binomial_transform(&seq.a);
    let mut report = TestReport::pass("e-test");
    report.notes.push(format!("sequence: {}", seq.name));
    for n in 0..seq.len() {
        if b[n].is_negative() {
            report.violate(n, format!("b{n}"), int(b[n].clone()));
        }
        if let Some(abar) = &seq.abar {
            if n > 0 && abar[n] < abar[n - 1] {
                report.violate(n, format!("abar{n} - abar{}", n - 1), int(&abar[n] - &abar[n - 1]));
            }
        }
    }
    report
        .notes
        .push(format!("binomial transform: {}", b.iter().map(BigInt::to_string).collect::<Vec<_>>().join(", ")));
    Ok(report)
}

/// `a_n ≥ n·a_{n-1}` and `ā_n ≥ ā_{n-1}`.
pub fn l_test(seq: &DimSequence) -> TestReport {
    let mut report = TestReport::pass("l-test");
    report.notes.push(format!("sequence: {}", seq.name));
    for n in 1..seq.len() {
        let diff = seq.get(n) - int(n) * seq.get(n - 1);
        if diff.is_negative() {
            report.violate(n, format!("a{n} - {n}a{}", n - 1), diff);
        }
        if let Some(abar) = &seq.abar {
            if abar[n] < abar[n - 1] {
                report.violate(n, format!("abar{n} - abar{}", n - 1), int(&abar[n] - &abar[n - 1]));
            }
        }
    }
    report
}

/// The sequence `c^n·a_n`.
fn scaled(seq: &DimSequence, c: u64) -> Vec<BigInt> {
    let c = BigInt::from(c);
    seq.a.iter().enumerate().map(|(n, a)| a * c.pow(n as u32)).collect()
}

/// Nonnegativity of `EGF((k+1)^n a_n) / EGF(k^n a_n)` up to `order`,
/// together with the closed forms of its coefficients at `x^2` and `x^3`.
pub fn ek_test(seq: &DimSequence, k: u64, order: Option<usize>) -> Result<TestReport> {
    seq.require_connected("E^k test")?;
    let num = TruncatedSeries::egf_from_counts(&scaled(seq, k + 1));
    let den = TruncatedSeries::egf_from_counts(&scaled(seq, k));
    let q = truncated_quotient(&num, &den, order)?;
    let mut report = named(q.nonneg_prefix(), &format!("ek-test:{k}"), seq);
    let a = |n| seq.get(n);
    let k = int(k);
    if seq.len() > 2 {
        report.with_inequality(InequalityCheck::new(
            "(2k+1)a2 >= 2k a1^2",
            (int(2) * &k + int(1)) * a(2),
            int(2) * &k * a(1) * a(1),
        ));
    }
    if seq.len() > 3 {
        let k2 = &k * &k;
        report.with_inequality(InequalityCheck::new(
            "(3k^2+3k+1)a3 >= 3(3k^2+k)a2a1 - 6k^2a1^3",
            (int(3) * &k2 + int(3) * &k + int(1)) * a(3),
            int(3) * (int(3) * &k2 + &k) * a(2) * a(1) - int(6) * &k2 * a(1) * a(1) * a(1),
        ));
    }
    Ok(report)
}

/// `a_2 ≥ a_1^2` and `a_3 ≥ 3a_2a_1 − 2a_1^3`, the limits of the `E^k`
/// inequalities.
pub fn ek_limit_test(seq: &DimSequence) -> Result<TestReport> {
    seq.require_len("E^k limit test", 4)?;
    let a = |n| seq.get(n);
    let mut report = TestReport::pass("ek-limit");
    report.notes.push(format!("sequence: {}", seq.name));
    let checks = [
        (2, InequalityCheck::new("a2 >= a1^2", a(2), a(1) * a(1))),
        (3, InequalityCheck::new("a3 >= 3a2a1 - 2a1^3", a(3), int(3) * a(2) * a(1) - int(2) * a(1) * a(1) * a(1))),
    ];
    for (n, check) in checks {
        if !check.holds {
            report.violate(n, check.inequality.clone(), &check.lhs - &check.rhs);
        }
        report.with_inequality(check);
    }
    Ok(report)
}

/// `a_{i+j} ≥ a_i·a_j` for all `i + j` in range.
pub fn supermult_test(seq: &DimSequence) -> TestReport {
    let mut report = TestReport::pass("supermult");
    report.notes.push(format!("sequence: {}", seq.name));
    for n in 0..seq.len() {
        for i in 0..=n / 2 {
            let diff = seq.get(n) - seq.get(i) * seq.get(n - i);
            if diff.is_negative() {
                report.violate(n, format!("a{n} - a{i}a{}", n - i), diff);
                break;
            }
        }
    }
    report
}

/// Monotonicity (when `a_1 ≥ 1`) and the lower bound `a_n ≥ 2^⌊n/k⌋`.
///
/// Requires `a_k ≥ 2` and `a_i ≥ 1` for `i < k`.
pub fn growth_test(seq: &DimSequence, k: usize) -> Result<TestReport> {
    if k == 0 || k >= seq.len() {
        return Err(Error::PreconditionFailed(format!("growth test needs 1 <= k < {}", seq.len())));
    }
    if seq.a[k] < BigInt::from(2) || seq.a[..k].iter().any(Zero::is_zero) {
        return Err(Error::PreconditionFailed(format!("growth test needs a_{k} >= 2 and a_i >= 1 for i < {k}")));
    }
    let mut report = TestReport::pass(format!("growth:{k}"));
    report.notes.push(format!("sequence: {}", seq.name));
    let monotone = seq.a.get(1).is_some_and(|a1| !a1.is_zero());
    for n in 0..seq.len() {
        if monotone && n > 0 && seq.a[n] < seq.a[n - 1] {
            report.violate(n, format!("a{n} - a{}", n - 1), seq.get(n) - seq.get(n - 1));
        }
        let bound = BigInt::from(2).pow((n / k) as u32);
        if seq.a[n] < bound {
            report.violate(n, format!("a{n} - 2^{}", n / k), seq.get(n) - int(bound));
        }
    }
    Ok(report)
}

/// Closure of the support under addition within the window, with its gcd.
pub fn support_test(seq: &DimSequence) -> TestReport {
    let support: Vec<usize> = (0..seq.len()).filter(|&n| !seq.a[n].is_zero()).collect();
    let mut report = TestReport::pass("support");
    report.notes.push(format!("sequence: {}", seq.name));
    for n in 0..seq.len() {
        if !seq.a[n].is_zero() {
            continue;
        }
        if let Some(&i) = support.iter().find(|&&i| i > 0 && i <= n && support.contains(&(n - i)) && n - i > 0) {
            report.violate(n, format!("a{n} with {i} and {} in the support", n - i), int(0));
        }
    }
    let gcd = support.iter().filter(|&&n| n > 0).fold(0usize, |g, &n| g.gcd(&n));
    report.with_inequality(InequalityCheck::new("gcd of support", int(gcd), int(gcd)));
    let positive: Vec<String> = support.iter().filter(|&&n| n > 0).map(usize::to_string).collect();
    report.notes.push(format!(
        "support within window: {{{}}}",
        support.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    ));
    report.notes.push(format!("gcd of positive support: {gcd}"));
    report.notes.push(if positive.is_empty() {
        "support within window is {0}".to_string()
    } else if gcd == 1 {
        "gcd 1: the complement of the support can be finite".to_string()
    } else {
        format!("gcd {gcd}: the complement of the support is infinite")
    });
    if report.verdict == Verdict::Pass {
        report.notes.push("closed under addition within the window".to_string());
    }
    report
}

/// The names accepted by [`run_test`].
pub const TEST_NAMES: [&str; 9] =
    ["ordexp", "ordtype", "etest", "ltest", "ek", "eklimit", "supermult", "growth", "support"];

/// Options shared by the tests run by name.
#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    pub order: Option<usize>,
    pub k: u64,
    pub exhaustive: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { order: None, k: 1, exhaustive: false }
    }
}

/// Runs one test by name.
pub fn run_test(name: &str, seq: &DimSequence, opts: RunOptions) -> Result<TestReport> {
    let report = match name {
        "ordexp" => ord_exp_test(seq, opts.order)?,
        "ordtype" => ord_type_test(seq, opts.order)?,
        "etest" => e_test(seq)?,
        "ltest" => l_test(seq),
        "ek" => ek_test(seq, opts.k, opts.order)?,
        "eklimit" => ek_limit_test(seq)?,
        "supermult" => supermult_test(seq),
        "growth" => growth_test(seq, opts.k as usize)?,
        "support" => support_test(seq),
        other => return Err(Error::UnknownIdentifier(other.to_string())),
    };
    Ok(report.finish(opts.exhaustive))
}
