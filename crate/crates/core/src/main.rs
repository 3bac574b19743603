use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use link_homotopy::braid::{mu_all, parse_word};
use link_homotopy::certificate;
use link_homotopy::commands::{self, HomotopyOptions, RowSelection, TrialReport, OMEGA_K};
use link_homotopy::polylinalg::{DetStrategy, OmegaCertificate, PerpReport, DEFAULT_PRIME, DEFAULT_TRIALS};
use link_homotopy::Result;

#[derive(Parser)]
#[command(name = "lhinv", version, about = "Polynomial link-homotopy invariant of 6-component links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum DetArg {
    /// Laplace expansion memoized on column subsets
    Subset,
    /// Fraction-free elimination (much slower)
    Bareiss,
}

#[derive(Subcommand)]
enum Command {
    /// Compute Ω, verify it, and write the certificate
    BuildOmega {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "subset")]
        det: DetArg,
    },
    /// Re-verify a certificate file
    VerifyOmega {
        #[arg(long)]
        cert: PathBuf,
    },
    /// Evaluate μ·Ω on a braid word or an explicit l/μ file
    Invariant {
        #[arg(long)]
        cert: PathBuf,
        #[arg(long, conflicts_with = "mu_file", required_unless_present = "mu_file")]
        word: Option<String>,
        #[arg(long)]
        mu_file: Option<PathBuf>,
    },
    /// Random partial-conjugation sequences must leave μ·Ω unchanged
    HomotopyTest {
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 9)]
        l_range: i64,
        #[arg(long, default_value_t = 9)]
        mu_range: i64,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
    },
    /// Random braid words: conjugation keeps μ·Ω, reversal negates it
    ReversalTest {
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Generic rank of a set of translation vectors
    Rank {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        rows: String,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
        #[arg(long)]
        seed: u64,
    },
    /// Check the linear relations among partial conjugations
    Relations {
        #[arg(long)]
        k: usize,
    },
    /// Linking numbers and triple linking numbers of a braid word
    Mu {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        word: String,
    },
}

fn load_cert(path: &PathBuf) -> Result<OmegaCertificate> {
    certificate::parse(&fs::read_to_string(path)?)
}

fn print_perp(report: &PerpReport) -> bool {
    for e in &report.entries {
        println!("{} {}", if e.holds { "PASS" } else { "FAIL" }, e.label);
    }
    report.all_hold()
}

fn print_trials(name: &str, report: &TrialReport) -> bool {
    for f in &report.failures {
        println!("FAIL {f}");
    }
    println!("{name}: {} trials, {} checks, {} failures", report.trials, report.checks, report.failures.len());
    report.passed()
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::BuildOmega { out, det } => {
            let strategy = match det {
                DetArg::Subset => DetStrategy::SubsetExpansion,
                DetArg::Bareiss => DetStrategy::Bareiss,
            };
            let start = Instant::now();
            let (cert, report) = commands::build_omega(strategy)?;
            fs::write(&out, certificate::render(&cert))?;
            println!("{:>3} {:>6} {:>6} {:>8}", "i", "L_i", "degree", "content");
            for (n, s) in cert.stats.iter().enumerate() {
                println!("{:>3} {:>6} {:>6} {:>8}", n + 1, s.terms, s.degree, s.content);
            }
            println!("total monomials {}", cert.total_terms());
            println!("orthogonal to {} vectors", report.entries.len());
            println!("wrote {} in {:.1?}", out.display(), start.elapsed());
            Ok(true)
        }
        Command::VerifyOmega { cert } => {
            let cert = load_cert(&cert)?;
            let ok = print_perp(&commands::verify_omega(&cert)?);
            println!("total monomials {}", cert.total_terms());
            Ok(ok)
        }
        Command::Invariant { cert, word, mu_file } => {
            let cert = load_cert(&cert)?;
            let value = match (word, mu_file) {
                (Some(w), _) => commands::invariant_of_word(&cert, &parse_word(&w, OMEGA_K)?)?,
                (None, Some(path)) => {
                    let data = commands::parse_mu_file(&fs::read_to_string(path)?, OMEGA_K)?;
                    commands::invariant_of_link(&cert, &data)?
                }
                (None, None) => unreachable!("clap requires one input"),
            };
            println!("{value}");
            Ok(true)
        }
        Command::HomotopyTest { cert, trials, seed, l_range, mu_range, max_len } => {
            let cert = load_cert(&cert)?;
            let opts = HomotopyOptions { l_range, mu_range, max_len };
            Ok(print_trials("homotopy-test", &commands::homotopy_test(&cert, trials, seed, &opts)?))
        }
        Command::ReversalTest { cert, trials, seed } => {
            let cert = load_cert(&cert)?;
            Ok(print_trials("reversal-test", &commands::reversal_test(&cert, trials, seed)?))
        }
        Command::Rank { k, rows, trials, prime, seed } => {
            let selection: RowSelection = rows.parse()?;
            let r = commands::rank_report(k, selection, trials, prime, seed)?;
            println!("k {} rows {} ({} vectors)", r.k, r.selection, r.n_rows);
            println!("generic rank {}", r.rank);
            println!("C(k,3) {}", r.lattice_dim);
            println!("k^2-3k {}", r.span_bound);
            let cmp = match (r.lattice_dim as i64).cmp(&r.span_bound) {
                std::cmp::Ordering::Less => "<",
                std::cmp::Ordering::Equal => "=",
                std::cmp::Ordering::Greater => ">",
            };
            println!("C(k,3) {cmp} k^2-3k");
            Ok(true)
        }
        Command::Relations { k } => {
            let report = commands::relations(k)?;
            for e in &report.entries {
                println!("{} {}", if e.holds { "PASS" } else { "FAIL" }, e.name);
            }
            println!(
                "{} identities, {} failed",
                report.entries.len(),
                report.entries.iter().filter(|e| !e.holds).count()
            );
            Ok(report.all_hold())
        }
        Command::Mu { k, word } => {
            let data = mu_all(&parse_word(&word, k)?)?;
            print!("{}", commands::format_link_data(&data));
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
