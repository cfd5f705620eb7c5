use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact computations with connected Hopf monoids in vector species.
#[derive(Debug, Parser)]
#[command(name = "hopf", version, about)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads for parallel checks; 1 disables parallelism.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Ogf,
    Egf,
    Tgf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AxiomGroup {
    All,
    Monoid,
    Comonoid,
    Compat,
    Naturality,
    Connected,
    Linearized,
    Cocommutative,
    Commutative,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run necessary-condition tests on dimension sequences read from JSON.
    SeqTests(SeqTestsArgs),
    /// Divide two generating series and test the quotient for nonnegativity.
    SeriesDiv(SeriesDivArgs),
    /// Dimensions, type dimensions and generating series of a species.
    SpeciesDims(SpeciesArgs),
    /// Check the Hopf monoid axioms on every label set up to a size.
    Axioms(AxiomsArgs),
    /// Check that a map of Hopf monoids is a morphism.
    MorphismCheck(MorphismArgs),
    /// Primitive elements of a Hopf monoid.
    Primitives(PrimitivesArgs),
    /// The basis `p_γ` of the Lie kernel of linear orders.
    LieBasis(LieBasisArgs),
    /// The derangement basis `p_ℓ` of the Hopf kernel of L onto E.
    HkerBasis(HkerBasisArgs),
    /// Dimensions of the Lie and Hopf kernels of a morphism.
    HkerDims(MorphismArgs),
    /// Quotient dimensions and the Lagrange factorization of a submonoid.
    Lagrange(LagrangeArgs),
    /// The series identity between primitives and dimensions, and Hopf kernel generation.
    PbwCheck(PbwArgs),
}

#[derive(Debug, Args)]
pub struct SizeArgs {
    /// Largest label set size to examine.
    #[arg(long = "max-n", default_value_t = 4)]
    pub max_n: usize,
}

#[derive(Debug, Args)]
pub struct SeqTestsArgs {
    /// JSON file holding one sequence object or an array of them.
    #[arg(long)]
    pub input: PathBuf,

    /// Comma-separated test names; defaults to every test applicable to the data.
    #[arg(long, value_delimiter = ',')]
    pub tests: Vec<String>,

    /// Truncation order of series tests.
    #[arg(long)]
    pub order: Option<usize>,

    /// Parameter `k` of the E^k and growth tests.
    #[arg(long, default_value_t = 1)]
    pub k: u64,

    /// List every violated index, not only the first.
    #[arg(long)]
    pub exhaustive: bool,
}

#[derive(Debug, Args)]
pub struct SeriesDivArgs {
    /// Numerator sequence file.
    #[arg(long, conflicts_with = "numer_species", required_unless_present = "numer_species")]
    pub numer: Option<PathBuf>,

    /// Numerator species identifier.
    #[arg(long)]
    pub numer_species: Option<String>,

    /// Denominator sequence file.
    #[arg(long, conflicts_with = "denom_species", required_unless_present = "denom_species")]
    pub denom: Option<PathBuf>,

    /// Denominator species identifier.
    #[arg(long)]
    pub denom_species: Option<String>,

    #[arg(long, value_enum, default_value_t = Kind::Egf)]
    pub kind: Kind,

    /// Truncation order; also the largest size computed for species.
    #[arg(long, default_value_t = 6)]
    pub order: usize,
}

#[derive(Debug, Args)]
pub struct SpeciesArgs {
    /// Species identifier, e.g. `Pi`, `PiPrime`, `Hadamard(L,Pal)`.
    #[arg(long)]
    pub species: String,

    #[command(flatten)]
    pub size: SizeArgs,

    /// Also count isomorphism types.
    #[arg(long)]
    pub types: bool,
}

#[derive(Debug, Args)]
pub struct AxiomsArgs {
    /// Hopf monoid identifier.
    #[arg(long)]
    pub monoid: String,

    #[command(flatten)]
    pub size: SizeArgs,

    /// Which axiom groups to check.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
    pub axioms: Vec<AxiomGroup>,
}

#[derive(Debug, Args)]
pub struct MorphismArgs {
    /// Morphism identifier `SRC->TGT`.
    #[arg(long)]
    pub morphism: String,

    #[command(flatten)]
    pub size: SizeArgs,
}

#[derive(Debug, Args)]
pub struct PrimitivesArgs {
    /// Hopf monoid identifier.
    #[arg(long)]
    pub monoid: String,

    #[command(flatten)]
    pub size: SizeArgs,

    /// Print a basis on this label set instead of dimensions.
    #[arg(long)]
    pub labels: Option<String>,
}

#[derive(Debug, Args)]
pub struct LieBasisArgs {
    /// Label set, e.g. `a,b,c`.
    #[arg(long)]
    pub labels: String,

    /// Reference order; defaults to the sorted labels.
    #[arg(long)]
    pub ell0: Option<String>,

    /// A single cyclic order such as `(b,a,c)`; defaults to all of them.
    #[arg(long)]
    pub gamma: Option<String>,
}

#[derive(Debug, Args)]
pub struct HkerBasisArgs {
    /// Label set, e.g. `a,b,c,d`.
    #[arg(long)]
    pub labels: String,

    /// Reference order; defaults to the sorted labels.
    #[arg(long)]
    pub ell0: Option<String>,

    /// A single derangement such as `b|a|d|c`; defaults to all of them.
    #[arg(long)]
    pub ell: Option<String>,
}

#[derive(Debug, Args)]
pub struct LagrangeArgs {
    /// Injective morphism `K->H` of a submonoid.
    #[arg(long, conflicts_with = "surj", required_unless_present = "surj")]
    pub sub: Option<String>,

    /// Surjective morphism `H->K` for the dual factorization through the Hopf kernel.
    #[arg(long)]
    pub surj: Option<String>,

    #[command(flatten)]
    pub size: SizeArgs,
}

#[derive(Debug, Args)]
pub struct PbwArgs {
    /// Cocommutative Hopf monoid for the series identity.
    #[arg(long, required_unless_present = "morphism")]
    pub monoid: Option<String>,

    /// Surjection whose Hopf kernel should be generated by its Lie kernel.
    #[arg(long)]
    pub morphism: Option<String>,

    #[command(flatten)]
    pub size: SizeArgs,
}
