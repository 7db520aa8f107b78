//! `opcohom`: batch front end for the exact (co)homology workbench.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use opcohom::algebra::OperadTag;
use opcohom::hodge::{CotangentSide, CyclicSign, Variant};

use report::Format;

#[derive(Parser)]
#[command(name = "opcohom", version, about = "Exact operadic (co)homology over the rationals")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Cochain,
    Chain,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Hom,
    Tensor,
}

#[derive(Clone, Copy, ValueEnum)]
enum TagArg {
    Assoc,
    Comm,
    Lie,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    Degree,
    TensorLength,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an algebra (and a module) and check every axiom.
    Validate {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        module: Option<PathBuf>,
    },
    /// Print the shuffle element sh_n and optionally its spectrum on ℚS_n.
    Shuffle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        matrix: bool,
    },
    /// Bar complex dims and homology.
    Bar {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        max_length: usize,
        #[arg(long)]
        weight_cutoff: Option<i64>,
    },
    /// Hochschild (co)homology dims.
    Hochschild {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        module: PathBuf,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, value_enum, default_value = "cochain")]
        variant: VariantArg,
        #[arg(long)]
        weight_cutoff: Option<i64>,
    },
    /// Hodge decomposition table of Hochschild (co)homology.
    Hodge {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        module: PathBuf,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, value_enum, default_value = "cochain")]
        variant: VariantArg,
        #[arg(long)]
        weight_cutoff: Option<i64>,
    },
    /// Connes' complex dims and cyclic homology.
    Cyclic {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        max_length: usize,
        #[arg(long, value_enum, default_value = "degree")]
        cyclic_sign: SignArg,
    },
    /// Cotangent complex (co)homology for assoc, comm or lie.
    Cotangent {
        #[arg(long, value_enum)]
        tag: TagArg,
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        module: PathBuf,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, value_enum, default_value = "hom")]
        side: SideArg,
        #[arg(long)]
        weight_cutoff: Option<i64>,
    },
    /// Compare post-Lie homology with the splitting formula.
    PostlieCheck {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        module: PathBuf,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, value_enum, default_value = "tensor")]
        side: SideArg,
        #[arg(long)]
        weight_cutoff: Option<i64>,
    },
    /// Dimension table of a named operad.
    Dims {
        #[arg(long)]
        operad: String,
        #[arg(long)]
        max: usize,
    },
    /// Dimensions of a composite outer ∘ inner.
    ComposeDims {
        #[arg(long)]
        outer: String,
        #[arg(long)]
        inner: String,
        #[arg(long)]
        max: usize,
    },
    /// Check dim (P ∘ Q)(n) = dim O(n) (Hadamard product when O is Dias).
    LawCheck {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        #[arg(long)]
        o: String,
        #[arg(long)]
        max: usize,
    },
    /// Spectral sequence pages of a filtered complex file.
    Spectral {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        pages: usize,
    },
}

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or input files: exit 2.
    Input(String),
    /// A mathematical check failed inside the library: exit 1.
    Check(String),
}

impl From<opcohom::Error> for CliError {
    fn from(e: opcohom::Error) -> Self {
        use opcohom::Error::*;
        match e {
            NotAComplex { .. } | NonCommuting { .. } | EigenspacesDoNotSpan { .. } | NotInvariant { .. } | NonInteger { .. } => {
                CliError::Check(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

fn variant(v: VariantArg) -> Variant {
    match v {
        VariantArg::Cochain => Variant::Cochain,
        VariantArg::Chain => Variant::Chain,
    }
}

fn side(s: SideArg) -> CotangentSide {
    match s {
        SideArg::Hom => CotangentSide::Hom,
        SideArg::Tensor => CotangentSide::Tensor,
    }
}

fn run(cmd: Command) -> Result<report::Report, CliError> {
    use commands as c;
    match cmd {
        Command::Validate { algebra, module } => c::validate(&algebra, module.as_deref()),
        Command::Shuffle { n, matrix } => c::shuffle(n, matrix),
        Command::Bar {
            algebra,
            max_length,
            weight_cutoff,
        } => c::bar(&algebra, max_length, weight_cutoff),
        Command::Hochschild {
            algebra,
            module,
            max_degree,
            variant: v,
            weight_cutoff,
        } => c::hochschild(&algebra, &module, max_degree, variant(v), weight_cutoff),
        Command::Hodge {
            algebra,
            module,
            max_degree,
            variant: v,
            weight_cutoff,
        } => c::hodge(&algebra, &module, max_degree, variant(v), weight_cutoff),
        Command::Cyclic {
            algebra,
            max_length,
            cyclic_sign,
        } => {
            let sign = match cyclic_sign {
                SignArg::Degree => CyclicSign::Degree,
                SignArg::TensorLength => CyclicSign::TensorLength,
            };
            c::cyclic(&algebra, max_length, sign)
        }
        Command::Cotangent {
            tag,
            algebra,
            module,
            max_degree,
            side: s,
            weight_cutoff,
        } => {
            let tag = match tag {
                TagArg::Assoc => OperadTag::Assoc,
                TagArg::Comm => OperadTag::Comm,
                TagArg::Lie => OperadTag::Lie,
            };
            c::cotangent(tag, &algebra, &module, max_degree, side(s), weight_cutoff)
        }
        Command::PostlieCheck {
            algebra,
            module,
            max_degree,
            side: s,
            weight_cutoff,
        } => c::postlie_check(&algebra, &module, max_degree, side(s), weight_cutoff),
        Command::Dims { operad, max } => c::dims(&operad, max),
        Command::ComposeDims { outer, inner, max } => c::compose_dims(&outer, &inner, max),
        Command::LawCheck { p, q, o, max } => c::law_check(&p, &q, &o, max),
        Command::Spectral { input, pages } => c::spectral(&input, pages),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            if report.invalid_input {
                ExitCode::from(2)
            } else if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
    }
}
