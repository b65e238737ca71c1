//! `umeb`: construct and verify unextendible maximally entangled bases.
//!
//! Exit codes: 0 success (including verdicts UMEB and MEB), 1 failing
//! verdict, 2 bad input, 3 malformed document.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use umeb_core::{
    compose_direct_sum, enumerate_compositions, enumerate_partitions, fixtures, umeb_from_holes,
    umeb_from_partition, verify_umeb, BasisDocument, BasisSet, DocumentError, HolePattern,
    PartitionSpec, Provenance, VerifyConfig,
};

const EXIT_FAILING_VERDICT: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_MALFORMED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "umeb",
    version,
    about = "Construct and verify unextendible maximally entangled bases in C^d (x) C^d'"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Tolerance for orthonormality and maximal-entanglement checks.
    #[arg(long, global = true, env = "UMEB_TOL", default_value_t = 1e-9)]
    tol: f64,

    /// Random restarts for the unextendibility search.
    #[arg(
        long,
        global = true,
        env = "UMEB_ORACLE_RESTARTS",
        default_value_t = 64
    )]
    oracle_restarts: usize,

    /// Seed for all randomized checks; echoed into reports.
    #[arg(long, global = true, env = "UMEB_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Construct the d(d'-1)-member basis from a hole pattern.
    ConstructHoles {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        dprime: usize,
        /// Comma-separated row:col pairs, one hole per row, e.g.
        /// 0:3,1:1,2:3,3:5,4:3
        #[arg(long)]
        holes: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Construct the d(d'-r)-member basis from a column partition.
    ConstructPartition {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        dprime: usize,
        /// Comma-separated block widths, e.g. 4,5
        #[arg(long)]
        parts: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Direct-sum two bases, shifting the right one by a column offset.
    Compose {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long)]
        offset: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Verify a basis document and print the report as JSON.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// List all column partitions admissible for the given dimensions.
    Partitions {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        dprime: usize,
        /// Treat different orderings of the same parts as distinct.
        #[arg(long)]
        ordered: bool,
    },
    /// Write one of the bundled reference bases.
    Fixtures {
        /// One of: upb3x3, umeb2x3, ex1, ex2, ex3a, ex3b
        name: String,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => err.report(),
    }
}

enum CliError {
    BadInput(String),
    Malformed(String),
}

impl CliError {
    fn report(self) -> ExitCode {
        match self {
            CliError::BadInput(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(EXIT_BAD_INPUT)
            }
            CliError::Malformed(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(EXIT_MALFORMED)
            }
        }
    }
}

impl From<umeb_core::Error> for CliError {
    fn from(err: umeb_core::Error) -> Self {
        CliError::BadInput(err.to_string())
    }
}

impl From<DocumentError> for CliError {
    fn from(err: DocumentError) -> Self {
        CliError::Malformed(err.to_string())
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::ConstructHoles {
            d,
            dprime,
            holes,
            out,
        } => {
            let holes = parse_holes(&holes)?;
            let pattern = HolePattern::new(d, dprime, holes)?;
            let basis = umeb_from_holes(&pattern);
            if let Provenance::HolePattern { canonical, .. } = basis.provenance() {
                println!("canonical b: {:?}", canonical.b);
            }
            write_basis(&basis, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ConstructPartition {
            d,
            dprime,
            parts,
            out,
        } => {
            let parts = parse_parts(&parts)?;
            let spec = PartitionSpec::new(d, dprime, parts)?;
            let basis = umeb_from_partition(&spec);
            println!("remainder r: {}", spec.remainder());
            write_basis(&basis, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Compose {
            left,
            right,
            offset,
            out,
        } => {
            let left = BasisDocument::load(&left)?.to_basis()?;
            let right = BasisDocument::load(&right)?.to_basis()?;
            let combined = compose_direct_sum(&left, &right, offset)?;
            write_basis(&combined, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { input } => {
            let basis = BasisDocument::load(&input)?.to_basis()?;
            let config = VerifyConfig {
                tol: cli.tol,
                oracle_restarts: cli.oracle_restarts,
                seed: cli.seed,
                ..VerifyConfig::default()
            };
            let report = verify_umeb(&basis, &config);
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
            if report.passing() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(EXIT_FAILING_VERDICT))
            }
        }
        Command::Partitions { d, dprime, ordered } => {
            let specs = if ordered {
                enumerate_compositions(d, dprime)?
            } else {
                enumerate_partitions(d, dprime)?
            };
            for spec in specs {
                let parts: Vec<String> = spec.parts().iter().map(|p| p.to_string()).collect();
                println!(
                    "{{{}}}+{} members={}",
                    parts.join(","),
                    spec.remainder(),
                    spec.member_count()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Fixtures { name, out } => {
            let basis = fixture_by_name(&name)?;
            write_basis(&basis, &out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn write_basis(basis: &BasisSet, out: &Path) -> Result<(), CliError> {
    BasisDocument::from_basis(basis).save(out)?;
    println!("members: {}", basis.len());
    println!("wrote {}", out.display());
    Ok(())
}

fn parse_holes(text: &str) -> Result<Vec<(usize, usize)>, CliError> {
    text.split(',')
        .map(|pair| {
            let (row, col) = pair
                .split_once(':')
                .ok_or_else(|| CliError::BadInput(format!("hole {pair:?} is not row:col")))?;
            let row = row
                .trim()
                .parse()
                .map_err(|_| CliError::BadInput(format!("bad hole row in {pair:?}")))?;
            let col = col
                .trim()
                .parse()
                .map_err(|_| CliError::BadInput(format!("bad hole column in {pair:?}")))?;
            Ok((row, col))
        })
        .collect()
}

fn parse_parts(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| CliError::BadInput(format!("bad part {p:?}")))
        })
        .collect()
}

fn fixture_by_name(name: &str) -> Result<BasisSet, CliError> {
    match name {
        "upb3x3" => {
            let members = fixtures::upb_tiles_3x3()
                .into_iter()
                .enumerate()
                .map(|(i, state)| umeb_core::BasisMember {
                    label: vec![i],
                    state,
                })
                .collect();
            Ok(BasisSet::from_members(
                3,
                3,
                members,
                Provenance::Fixture {
                    name: "upb3x3".into(),
                },
            )?)
        }
        "umeb2x3" => Ok(fixtures::umeb_2x3()),
        "ex1" => Ok(fixtures::example_umeb_5x6()),
        "ex2" => Ok(fixtures::example_umeb_5x12()),
        "ex3a" => Ok(fixtures::example_umeb_3x10_27()),
        "ex3b" => Ok(fixtures::example_umeb_3x10_24()),
        other => Err(CliError::BadInput(format!(
            "unknown fixture {other:?}; expected upb3x3, umeb2x3, ex1, ex2, ex3a or ex3b"
        ))),
    }
}
