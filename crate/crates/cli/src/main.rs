use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser)]
#[command(name = "cgschur", version, about = "Schur rings over products of Galois rings")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads for verification scans.
    #[arg(long, default_value_t = 1, global = true)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Ring structure.
    #[command(subcommand)]
    Ring(RingCmd),
    /// Operations on S-ring documents.
    #[command(subcommand)]
    Sring(SringCmd),
    /// Dual S-ring, or `dual check FILE` for the duality report.
    #[command(args_conflicts_with_subcommands = true)]
    Dual {
        #[command(subcommand)]
        check: Option<DualCmd>,
        file: Option<PathBuf>,
    },
    /// The dense non-pure S-ring over GR(p^2,d) x GR(q^2,e).
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Decomposition theorems.
    #[command(subcommand)]
    Classify(ClassifyCmd),
    /// Unit subgroups and cyclotomic S-rings.
    #[command(subcommand)]
    Enumerate(EnumerateCmd),
}

#[derive(Subcommand)]
enum RingCmd {
    /// Orders, unit group structure and the ideal lattice.
    Info { spec: String },
}

#[derive(Args)]
struct FileArg {
    /// S-ring document (JSON).
    file: PathBuf,
}

#[derive(Args)]
struct IdealArg {
    file: PathBuf,
    /// The ideal mR, given by the divisor m of the characteristic.
    #[arg(long)]
    ideal: u64,
}

#[derive(Subcommand)]
enum SringCmd {
    /// orb(K, R) for K generated by the given units (all units by default).
    Cyc {
        spec: String,
        /// Comma-separated element indices.
        #[arg(long, value_delimiter = ',')]
        gens: Option<Vec<usize>>,
    },
    /// Smallest S-ring in which every given set is a union of classes.
    Closure {
        spec: String,
        /// A set as comma-separated element indices; repeatable.
        #[arg(long = "set")]
        sets: Vec<String>,
        /// Also make every ideal an A-set.
        #[arg(long)]
        dense: bool,
    },
    /// Check the S-ring axioms.
    Verify(FileArg),
    /// The quotient S-ring over R/mR.
    Quotient(IdealArg),
    /// The restriction to the A-ideal mR.
    Restrict(IdealArg),
    /// Tensor product over the product ring.
    Tensor { left: PathBuf, right: PathBuf },
    /// Generalized wreath certificates.
    Wreath(FileArg),
    /// I_L of the class of 1, purity and density.
    Pure(FileArg),
    /// Rationality with respect to the units of the given components.
    Rational {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
    },
}

#[derive(Subcommand)]
enum DualCmd {
    /// Verify the duality theorems on the document.
    Check { file: PathBuf },
}

#[derive(Subcommand)]
enum ConstructCmd {
    #[command(alias = "nonpure-dense")]
    T210809a {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        e: u32,
        /// Also write the S-ring document here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ClassifyCmd {
    /// Pure S-rings over odd rings.
    Pure(FileArg),
    /// S-rings whose classes are all R^x-invariant.
    Rational(FileArg),
    /// S-rings with a maximal ideal that is not an A-ideal.
    Nondense(FileArg),
}

#[derive(Subcommand)]
enum EnumerateCmd {
    Subgroups { spec: String },
    Cyc { spec: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.max(1))
        .build_global()
    {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match commands::run(cli.command) {
        Ok(out) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string(&out.value),
                Format::Pretty => serde_json::to_string_pretty(&out.value),
            }
            .expect("JSON values serialize");
            // A closed pipe downstream is not an error of ours.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
