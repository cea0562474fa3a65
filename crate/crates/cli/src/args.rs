use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use qeuler_core::Rat;

#[derive(Debug, Parser)]
#[command(name = "qeuler", version, about = "Exact q-Eulerian polynomials, gamma coefficients and their identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    /// Gamma coefficients a(n,k)
    #[value(name = "a")]
    GammaA,
    /// Gamma coefficients b(n,k)
    #[value(name = "b")]
    GammaB,
    /// Carlitz q-Eulerian A(n,k)
    #[value(name = "A")]
    CarlitzA,
    /// Type-B q-Eulerian B(n,k)
    #[value(name = "B")]
    TypeB,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyName {
    /// A_n(t,q), n >= 1
    #[value(name = "A")]
    A,
    /// B_n(t,q), n >= 0
    #[value(name = "B")]
    B,
    /// q-tangent T_{2n+1}(q)
    #[value(name = "T")]
    T,
    /// d_n(q), n >= 1
    #[value(name = "dn")]
    Dn,
    #[value(name = "Estar")]
    Estar,
    #[value(name = "Gstar")]
    Gstar,
    /// E_{2n}(q), a Laurent polynomial
    #[value(name = "Eq")]
    Eq,
    /// a(2n+1, n+1)
    #[value(name = "central")]
    Central,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    #[value(name = "all")]
    All,
    #[value(name = "expansionA")]
    ExpansionA,
    #[value(name = "expansionB")]
    ExpansionB,
    #[value(name = "series")]
    Series,
    #[value(name = "tangent")]
    Tangent,
    #[value(name = "secant")]
    Secant,
    #[value(name = "doubloon")]
    Doubloon,
    #[value(name = "reciprocity")]
    Reciprocity,
    #[value(name = "monotone")]
    Monotone,
    #[value(name = "brackets")]
    Brackets,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SequenceArg {
    #[value(name = "A101280")]
    A101280,
    #[value(name = "A008971")]
    A008971,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a triangle of polynomials, or integers with --q1
    Table {
        family: FamilyArg,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        #[arg(long)]
        q1: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print one polynomial
    Poly {
        name: PolyName,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run verification suites
    Verify {
        suite: SuiteArg,
        /// Overrides every suite's default bound
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: Option<u32>,
        /// Sample points for the monotone suite
        #[arg(long, value_delimiter = ',', value_parser = parse_rat)]
        points: Option<Vec<Rat>>,
        /// Allow doubloon enumeration beyond n = 4
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Scan G*_{2n}(q) for non-positive coefficients
    Conjecture {
        #[arg(long, default_value_t = 6)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare the q=1 gamma triangles with an OEIS b-file
    OeisCheck {
        sequence: SequenceArg,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        /// b-file to use instead of the bundled snapshot
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    s.trim().parse::<Rat>().map_err(|_| format!("not a rational number: {s:?}"))
}
