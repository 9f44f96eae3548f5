use clap::{Args, Parser, Subcommand, ValueEnum};

/// Permutation-polynomial toolkit: criterion checks, compositional inverses
/// with oracle certification, diagram verification, and JSONL catalogs.
#[derive(Parser, Debug)]
#[command(name = "agw", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the canonical model of a field: modulus, primitive element.
    FieldInfo(FieldInfoArgs),
    /// Test whether a polynomial permutes the field.
    CheckPp(CheckPpArgs),
    /// Compute a compositional inverse by a closed-form recipe and certify it
    /// against the brute-force oracle.
    Invert(InvertArgs),
    /// Verify a commutative square, the permutation criterion, and the
    /// inverted square.
    VerifyDiagram(VerifyDiagramArgs),
    /// Enumerate all distinct two-branch permutation polynomials and check
    /// the census formula.
    EnumerateTwoBranch(EnumerateArgs),
}

#[derive(Args, Debug)]
pub struct FieldInfoArgs {
    /// Field spec: "p", "p^n", "p^n/[c0,...,1]", or a prime power like "9".
    #[arg(long)]
    pub q: String,
}

#[derive(Args, Debug)]
pub struct CheckPpArgs {
    #[arg(long)]
    pub q: String,
    /// Polynomial literal, e.g. "x^4+3*x".
    #[arg(long)]
    pub f: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Recipe {
    B,
    Ab,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Domain {
    Full,
    Nonzero,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Form {
    Index,
    GeneralMult,
    Hybrid,
    Additive,
    G0,
    Translator,
    Linearized,
    Branch,
}

#[derive(Args, Debug)]
pub struct InvertArgs {
    #[arg(long)]
    pub q: String,
    #[arg(long, value_enum)]
    pub form: Form,

    /// Index form: exponent r in x^r h(x^s).
    #[arg(long)]
    pub r: Option<u64>,
    /// Index/branch forms: s | q-1.
    #[arg(long)]
    pub s: Option<u64>,
    /// Polynomial h (index, general-mult, hybrid, additive, linearized).
    #[arg(long)]
    pub h: Option<String>,
    /// Exponent recipe for the index form.
    #[arg(long, value_enum, default_value = "both")]
    pub recipe: Recipe,

    /// f1 for the general multiplicative and additive forms.
    #[arg(long)]
    pub f1: Option<String>,
    /// lambda as a polynomial literal.
    #[arg(long)]
    pub lambda: Option<String>,
    /// lambda_bar as a polynomial literal (defaults to lambda).
    #[arg(long)]
    pub lambda_bar: Option<String>,
    /// Domain for the general multiplicative form.
    #[arg(long, value_enum, default_value = "nonzero")]
    pub domain: Domain,

    /// k for the hybrid form x*h(lambda(x)).
    #[arg(long)]
    pub k: Option<String>,

    /// g (a polynomial inducing the bijection) for the g0 form.
    #[arg(long)]
    pub g: Option<String>,
    /// g0 for the g0 form.
    #[arg(long)]
    pub g0: Option<String>,

    /// Translator element gamma.
    #[arg(long)]
    pub gamma: Option<String>,
    /// Translator slope b.
    #[arg(long)]
    pub b: Option<String>,
    /// G for the translator form x + gamma*G(lambda(x)).
    #[arg(long)]
    pub bigg: Option<String>,

    /// Base subfield order for the linearized form (tower F_q over base).
    #[arg(long)]
    pub base_q: Option<u64>,
    /// L as a linearized literal "L:[a0,a1,...]".
    #[arg(long)]
    pub l: Option<String>,
    /// L1 as a linearized literal.
    #[arg(long)]
    pub l1: Option<String>,
    /// Kernel element a with L(a) = 0.
    #[arg(long)]
    pub a: Option<String>,
    /// Shift delta.
    #[arg(long)]
    pub delta: Option<String>,

    /// Branch form: one polynomial per coset C_0..C_{l-1} (repeat the flag).
    #[arg(long = "branch")]
    pub branches: Vec<String>,

    /// Write records to a file instead of stdout.
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Args, Debug)]
pub struct VerifyDiagramArgs {
    #[arg(long)]
    pub q: String,
    #[arg(long)]
    pub f: String,
    #[arg(long)]
    pub lambda: String,
    #[arg(long)]
    pub lambda_bar: Option<String>,
    /// h as a polynomial evaluated on the image of lambda.
    #[arg(long)]
    pub h: String,
    #[arg(long, value_enum, default_value = "full")]
    pub domain: Domain,
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Jsonl,
    Tsv,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub q: String,
    #[arg(long, value_enum, default_value = "jsonl")]
    pub emit: Emit,
    #[arg(long)]
    pub out: Option<String>,
}
