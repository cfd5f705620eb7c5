use std::fs;
use std::path::Path;

use hopf_core::axioms::{
    check_all, check_cocommutative, check_commutative, check_comonoid, check_compat, check_connected, check_monoid,
    check_morphism, check_naturality, is_linearized, AxiomReport,
};
use hopf_core::kernels::{
    bracket_expression, derangement_expression, derangement_vector, dual_lagrange_check, hker_generated_check,
    hker_space, labels_of, lagrange_quotient_dims, lie_basis_p, lker_space, pbw_series_check, primitive_dims,
    primitive_space, CyclicOrder, Derangement, FactorizationReport, ReferenceOrder, SubspaceBasis,
};
use hopf_core::report::{TestReport, Verdict};
use hopf_core::seqtests::{quotient_nonneg_test, run_test, DimSequence, RunOptions, SeriesKind, TEST_NAMES};
use hopf_core::species::{egf, ogf, orbit_count, tgf, FiniteSet, QVector};
use hopf_core::structures::{parse_monoid, parse_morphism, parse_species, L};
use serde_json::{json, Value};

use crate::args::{
    AxiomGroup, AxiomsArgs, Command, HkerBasisArgs, Kind, LagrangeArgs, LieBasisArgs, MorphismArgs, PbwArgs,
    PrimitivesArgs, SeqTestsArgs, SeriesDivArgs, SpeciesArgs,
};
use crate::CliError;

/// Hard cap on label set sizes.
pub const MAX_N_CAP: usize = 9;
/// Hard cap on series truncation orders.
pub const MAX_ORDER: usize = 32;

const SEQUENCE_SCHEMA: &str =
    r#"expected {"name": "...", "a": [1, ...], "abar": [1, ...]} or an array of such objects; "abar" is optional"#;

pub struct Outcome {
    pub tool: &'static str,
    pub verdict: Verdict,
    pub details: Vec<Value>,
}

impl Outcome {
    fn new(tool: &'static str) -> Self {
        Outcome { tool, verdict: Verdict::Pass, details: Vec::new() }
    }

    fn push(&mut self, verdict: Verdict, detail: Value) {
        self.verdict = self.verdict.combine(verdict);
        self.details.push(detail);
    }

    pub fn to_json(&self) -> Value {
        json!({ "tool": self.tool, "verdict": self.verdict, "details": self.details })
    }
}

fn verdict_of(passed: bool) -> Verdict {
    if passed {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize to JSON")
}

/// The size cap, lowered by `HOPF_MAX_N` when set.
pub fn size_cap() -> Result<usize, CliError> {
    match std::env::var("HOPF_MAX_N") {
        Ok(v) => {
            let n: usize = v
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("HOPF_MAX_N must be a natural number, got `{v}`")))?;
            Ok(n.min(MAX_N_CAP))
        }
        Err(_) => Ok(MAX_N_CAP),
    }
}

fn check_size(n: usize) -> Result<usize, CliError> {
    let cap = size_cap()?;
    if n > cap {
        return Err(CliError::Usage(format!("size {n} exceeds the cap {cap}")));
    }
    Ok(n)
}

fn check_order(n: usize) -> Result<usize, CliError> {
    if n > MAX_ORDER {
        return Err(CliError::Usage(format!("order {n} exceeds the cap {MAX_ORDER}")));
    }
    Ok(n)
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::SeqTests(a) => seq_tests(a),
        Command::SeriesDiv(a) => series_div(a),
        Command::SpeciesDims(a) => species_dims(a),
        Command::Axioms(a) => axioms(a),
        Command::MorphismCheck(a) => morphism_check(a),
        Command::Primitives(a) => primitives(a),
        Command::LieBasis(a) => lie_basis_cmd(a),
        Command::HkerBasis(a) => hker_basis(a),
        Command::HkerDims(a) => hker_dims(a),
        Command::Lagrange(a) => lagrange(a),
        Command::PbwCheck(a) => pbw_check(a),
    }
}

fn read_sequences(path: &Path) -> Result<Vec<DimSequence>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display()), SEQUENCE_SCHEMA))?;
    let items = match value {
        Value::Array(items) => items,
        other => vec![other],
    };
    items
        .into_iter()
        .map(|v| {
            serde_json::from_value(v).map_err(|e| CliError::Input(format!("{}: {e}", path.display()), SEQUENCE_SCHEMA))
        })
        .collect()
}

fn seq_tests(args: &SeqTestsArgs) -> Result<Outcome, CliError> {
    if let Some(order) = args.order {
        check_order(order)?;
    }
    for name in &args.tests {
        if !TEST_NAMES.contains(&name.as_str()) {
            return Err(CliError::Usage(format!("unknown test `{name}`; known tests: {}", TEST_NAMES.join(", "))));
        }
    }
    let opts = RunOptions { order: args.order, k: args.k, exhaustive: args.exhaustive };
    let mut outcome = Outcome::new("seq-tests");
    for seq in read_sequences(&args.input)? {
        let requested = !args.tests.is_empty();
        let names: Vec<&str> = if requested {
            args.tests.iter().map(String::as_str).collect()
        } else {
            let mut names = vec!["ordexp", "eklimit", "supermult", "support"];
            if seq.abar.is_some() {
                names.insert(1, "ordtype");
            }
            names
        };
        for name in names {
            match run_test(name, &seq, opts) {
                Ok(report) => outcome.push(report.verdict, json!({ "sequence": seq.name, "report": report })),
                Err(e @ hopf_core::Error::PreconditionFailed(_)) if !requested => {
                    outcome.details.push(json!({ "sequence": seq.name, "test": name, "skipped": e.to_string() }));
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok(outcome)
}

fn sequence_source(
    file: &Option<std::path::PathBuf>,
    species: &Option<String>,
    n: usize,
    types: bool,
) -> Result<DimSequence, CliError> {
    match (file, species) {
        (Some(path), _) => {
            let mut seqs = read_sequences(path)?;
            if seqs.len() != 1 {
                return Err(CliError::Input(
                    format!("{}: expected exactly one sequence", path.display()),
                    SEQUENCE_SCHEMA,
                ));
            }
            Ok(seqs.remove(0))
        }
        (None, Some(id)) => {
            let sp = parse_species(id)?;
            Ok(DimSequence::from_species(sp.as_ref(), n, types))
        }
        (None, None) => Err(CliError::Usage("a sequence file or species is required".into())),
    }
}

fn truncated(mut seq: DimSequence, order: usize) -> DimSequence {
    seq.a.truncate(order + 1);
    if let Some(b) = seq.abar.as_mut() {
        b.truncate(order + 1);
    }
    seq
}

fn series_div(args: &SeriesDivArgs) -> Result<Outcome, CliError> {
    let order = check_order(args.order)?;
    if args.numer_species.is_some() || args.denom_species.is_some() {
        check_size(order)?;
    }
    let kind = match args.kind {
        Kind::Ogf => SeriesKind::Ogf,
        Kind::Egf => SeriesKind::Egf,
        Kind::Tgf => SeriesKind::Tgf,
    };
    let types = kind == SeriesKind::Tgf;
    let numer = truncated(sequence_source(&args.numer, &args.numer_species, order, types)?, order);
    let denom = truncated(sequence_source(&args.denom, &args.denom_species, order, types)?, order);
    let report = quotient_nonneg_test(&numer, &denom, kind)?;
    let mut outcome = Outcome::new("series-div");
    let quotient = report.series.as_ref().map(ToString::to_string);
    outcome.push(report.verdict, json!({ "quotient": quotient, "report": report }));
    Ok(outcome)
}

fn species_dims(args: &SpeciesArgs) -> Result<Outcome, CliError> {
    let n = check_size(args.size.max_n)?;
    let sp = parse_species(&args.species)?;
    let dims: Vec<String> = (0..=n).map(|k| sp.dim(k).to_string()).collect();
    let mut detail = json!({
        "species": sp.name(),
        "dims": dims,
        "egf": egf(sp.as_ref(), n).to_string(),
        "ogf": ogf(sp.as_ref(), n).to_string(),
    });
    if args.types {
        if !sp.is_linearized() {
            return Err(hopf_core::Error::NotLinearized(sp.name()).into());
        }
        let types: Vec<usize> = (0..=n).map(|k| orbit_count(sp.as_ref(), k)).collect();
        detail["types"] = json!(types);
        detail["tgf"] = json!(tgf(sp.as_ref(), n).to_string());
    }
    let mut outcome = Outcome::new("species-dims");
    outcome.push(Verdict::Pass, detail);
    Ok(outcome)
}

fn axioms(args: &AxiomsArgs) -> Result<Outcome, CliError> {
    let n = check_size(args.size.max_n)?;
    let h = parse_monoid(&args.monoid)?;
    let h = h.as_ref();
    let mut outcome = Outcome::new("axioms");
    for group in &args.axioms {
        let report: AxiomReport = match group {
            AxiomGroup::All => check_all(h, n),
            AxiomGroup::Monoid => check_monoid(h, n),
            AxiomGroup::Comonoid => check_comonoid(h, n),
            AxiomGroup::Compat => check_compat(h, n),
            AxiomGroup::Naturality => check_naturality(h, n),
            AxiomGroup::Connected => check_connected(h),
            AxiomGroup::Linearized => is_linearized(h, n),
            AxiomGroup::Cocommutative => check_cocommutative(h, n),
            AxiomGroup::Commutative => check_commutative(h, n),
        };
        outcome.push(verdict_of(report.passed), to_value(&report));
    }
    Ok(outcome)
}

fn morphism_check(args: &MorphismArgs) -> Result<Outcome, CliError> {
    let n = check_size(args.size.max_n)?;
    let f = parse_morphism(&args.morphism)?;
    let report = check_morphism(&f, n);
    let mut outcome = Outcome::new("morphism-check");
    outcome.push(verdict_of(report.passed), to_value(&report));
    Ok(outcome)
}

fn label_set(text: &str) -> Result<FiniteSet, CliError> {
    let set = FiniteSet::parse(text)?;
    check_size(set.len())?;
    Ok(set)
}

fn reference_order(set: &FiniteSet, ell0: &Option<String>) -> Result<ReferenceOrder, CliError> {
    match ell0 {
        None => Ok(ReferenceOrder::sorted(set)),
        Some(text) => {
            let r = ReferenceOrder::parse(text)?;
            if r.set() != *set {
                return Err(CliError::Usage(format!("reference order {r} is not an order on {set}")));
            }
            Ok(r)
        }
    }
}

fn primitives(args: &PrimitivesArgs) -> Result<Outcome, CliError> {
    let h = parse_monoid(&args.monoid)?;
    let mut outcome = Outcome::new("primitives");
    match &args.labels {
        Some(text) => {
            let set = label_set(text)?;
            let space = primitive_space(h.as_ref(), &set);
            outcome.push(Verdict::Pass, json!({ "monoid": h.name(), "space": to_value(&space) }));
        }
        None => {
            let n = check_size(args.size.max_n)?;
            outcome.push(Verdict::Pass, json!({ "monoid": h.name(), "dims": primitive_dims(h.as_ref(), n) }));
        }
    }
    Ok(outcome)
}

fn vector_json(v: &QVector) -> Value {
    json!({ "expansion": v.to_string(), "vector": to_value(v) })
}

fn lie_basis_cmd(args: &LieBasisArgs) -> Result<Outcome, CliError> {
    let set = label_set(&args.labels)?;
    if set.is_empty() {
        return Err(CliError::Usage("the label set must be nonempty".into()));
    }
    let ell0 = reference_order(&set, &args.ell0)?;
    let gammas = match &args.gamma {
        Some(text) => vec![CyclicOrder::parse(text)?],
        None => CyclicOrder::all(&set),
    };
    let lie = primitive_space(&L, &set);
    let mut outcome = Outcome::new("lie-basis");
    let mut vectors = Vec::new();
    for gamma in &gammas {
        let p = lie_basis_p(gamma, &ell0)?;
        let primitive = lie.contains(&p);
        let mut detail = vector_json(&p);
        detail["gamma"] = json!(gamma.to_string());
        detail["bracket"] = json!(bracket_expression(gamma, &ell0));
        detail["primitive"] = json!(primitive);
        outcome.push(verdict_of(primitive), detail);
        vectors.push(p);
    }
    let rank = SubspaceBasis::span(&L, &set, &vectors)?.dim();
    outcome.push(
        verdict_of(rank == vectors.len()),
        json!({ "ell0": ell0.to_string(), "vectors": vectors.len(), "rank": rank, "dim_lie": lie.dim() }),
    );
    Ok(outcome)
}

fn hker_basis(args: &HkerBasisArgs) -> Result<Outcome, CliError> {
    let set = label_set(&args.labels)?;
    let ell0 = reference_order(&set, &args.ell0)?;
    let derangements = match &args.ell {
        Some(text) => vec![Derangement::new(labels_of(text)?, &ell0)?],
        None => Derangement::all(&ell0),
    };
    let hker = hker_space(&parse_morphism("L->E")?, &set);
    let mut outcome = Outcome::new("hker-basis");
    let mut vectors = Vec::new();
    for d in &derangements {
        let p = derangement_vector(d);
        let inside = hker.contains(&p);
        let mut detail = vector_json(&p);
        detail["ell"] = json!(d.to_string());
        detail["cycles"] = json!(d.cycles().iter().map(|c| c.to_string()).collect::<Vec<_>>());
        detail["product"] = json!(derangement_expression(d));
        detail["in_hker"] = json!(inside);
        outcome.push(verdict_of(inside), detail);
        vectors.push(p);
    }
    let rank = SubspaceBasis::span(&L, &set, &vectors)?.dim();
    outcome.push(
        verdict_of(rank == vectors.len()),
        json!({ "ell0": ell0.to_string(), "vectors": vectors.len(), "rank": rank, "dim_hker": hker.dim() }),
    );
    Ok(outcome)
}

fn hker_dims(args: &MorphismArgs) -> Result<Outcome, CliError> {
    let n = check_size(args.size.max_n)?;
    let f = parse_morphism(&args.morphism)?;
    let sets: Vec<FiniteSet> = (0..=n).map(FiniteSet::standard).collect();
    let hker: Vec<usize> = sets.iter().map(|s| hker_space(&f, s).dim()).collect();
    let lker: Vec<usize> = sets.iter().map(|s| lker_space(&f, s).dim()).collect();
    let mut outcome = Outcome::new("hker-dims");
    outcome.push(Verdict::Pass, json!({ "morphism": f.name, "hker": hker, "lker": lker }));
    Ok(outcome)
}

fn factorization_detail(report: &FactorizationReport) -> Value {
    let mut v = to_value(report);
    v["convolution"] = json!(report.convolution.iter().map(ToString::to_string).collect::<Vec<_>>());
    v
}

fn lagrange(args: &LagrangeArgs) -> Result<Outcome, CliError> {
    let n = check_size(args.size.max_n)?;
    let report = match (&args.sub, &args.surj) {
        (Some(id), _) => lagrange_quotient_dims(&parse_morphism(id)?, n)?,
        (None, Some(id)) => dual_lagrange_check(&parse_morphism(id)?, n)?,
        (None, None) => return Err(CliError::Usage("one of --sub or --surj is required".into())),
    };
    let mut outcome = Outcome::new("lagrange");
    outcome.push(report.report.verdict, factorization_detail(&report));
    Ok(outcome)
}

fn pbw_check(args: &PbwArgs) -> Result<Outcome, CliError> {
    let n = check_size(args.size.max_n)?;
    let mut outcome = Outcome::new("pbw-check");
    let mut add = |subject: String, report: TestReport| {
        outcome.push(report.verdict, json!({ "subject": subject, "report": report }));
    };
    if let Some(id) = &args.monoid {
        let h = parse_monoid(id)?;
        add(h.name(), pbw_series_check(h.as_ref(), n)?);
    }
    if let Some(id) = &args.morphism {
        let f = parse_morphism(id)?;
        add(f.name.clone(), hker_generated_check(&f, n)?);
    }
    Ok(outcome)
}
