use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use equigon::io::{emit_certificate, emit_svg, load_corpus, parse_certificate, CertificateDocument, Provenance};
use equigon::polygon::{assemble_convex, descend_by_prime, even_gon, extend_plus_two, verify_certificate};
use equigon::{
    classify_lattice, enumerate_reps, find_zero_sum, sort_canonically, Certificate, Error, GramMatrix, Mode,
    SearchBudget, SearchOutcome,
};

#[derive(Parser)]
#[command(name = "equigon", version, about = "Equilateral polygons on planar integral lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a lattice contains a convex equilateral n-gon
    Classify {
        /// Gram matrix entries g11,g12,g22 (integers or p/q)
        #[arg(long)]
        gram: GramMatrix,
        #[arg(long)]
        n: usize,
    },
    /// Search U(m)_N for p unit vectors summing to zero
    Search {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        p: usize,
        /// Denominator cap
        #[arg(long = "N")]
        cap: u64,
        #[arg(long, default_value = "symmetric")]
        mode: Mode,
        #[arg(long, default_value_t = SearchBudget::DEFAULT_MAX_NODES)]
        max_nodes: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Verify a certificate file or the embedded corpus
    Verify {
        #[arg(long, conflicts_with = "corpus", required_unless_present = "corpus")]
        file: Option<PathBuf>,
        #[arg(long)]
        corpus: bool,
    },
    /// Assemble the convex polygon of a certificate and write it as SVG
    Polygon {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        svg: PathBuf,
    },
    /// Add two vectors to a certificate
    Extend {
        #[arg(long)]
        file: PathBuf,
        /// Largest scale factor tried
        #[arg(long, default_value_t = 1000)]
        max_t: u64,
    },
    /// Build an even polygon from antipodal pairs
    Even {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: usize,
        /// Largest squared side tried
        #[arg(long, default_value_t = 10_000_000)]
        max_norm: u128,
    },
    /// List primitive solutions of a² + m·b² = c² with c ≤ N
    Reps {
        #[arg(long)]
        m: u64,
        #[arg(long = "N")]
        cap: u64,
    },
    /// Divide every coordinate of a certificate by a prime
    Descend {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        q: u64,
    },
}

/// Exit code 1: nothing found or the input is invalid. Exit code 2: bad arguments.
enum Failure {
    NotFound(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::BadN(_)
            | Error::MNotSquarefree(_)
            | Error::NotPositiveDefinite
            | Error::NotPrime(_)
            | Error::DegenerateFMap => Failure::Usage(e.to_string()),
            _ => Failure::NotFound(e.to_string()),
        }
    }
}

fn read_certificate(path: &PathBuf) -> Result<Certificate, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::NotFound(format!("{}: {e}", path.display())))?;
    Ok(parse_certificate(&text)?.certificate)
}

fn print_certificate(cert: &Certificate, provenance: Provenance) {
    let doc = CertificateDocument::new(sort_canonically(cert), provenance);
    print!("{}", emit_certificate(&doc));
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Classify { gram, n } => {
            println!("{}", classify_lattice(&gram, n)?);
        }
        Command::Search { m, p, cap, mode, max_nodes, jobs } => {
            let budget = SearchBudget { cap, max_nodes, mode, jobs: jobs.max(1) };
            match find_zero_sum(m, p, &budget)? {
                SearchOutcome::Found { certificate, route } => {
                    eprintln!("found via {route:?}");
                    print_certificate(&certificate, Provenance::Search);
                }
                SearchOutcome::ProvenEmptyWithinN => {
                    return Err(Failure::NotFound(format!("no {p} zero-sum unit vectors in U({m})_{cap}")));
                }
                SearchOutcome::BudgetExhausted => {
                    return Err(Failure::NotFound(format!("budget exhausted after {max_nodes} nodes")));
                }
            }
        }
        Command::Verify { file: Some(path), .. } => {
            let cert = read_certificate(&path)?;
            let report = verify_certificate(&cert);
            for a in &report.advisories {
                println!("advisory: {a:?}");
            }
            println!("valid");
        }
        Command::Verify { file: None, .. } => {
            let rows = load_corpus()?;
            for row in &rows {
                println!("m={} p={} n={} valid", row.m, row.p, row.vectors.len());
            }
            println!("{} rows valid", rows.len());
        }
        Command::Polygon { file, svg } => {
            let cert = read_certificate(&file)?;
            let poly = assemble_convex(&cert)?;
            if !poly.is_strictly_convex() {
                return Err(Failure::NotFound("assembled polygon is not strictly convex".into()));
            }
            fs::write(&svg, emit_svg(&poly)).map_err(|e| Failure::NotFound(format!("{}: {e}", svg.display())))?;
            println!("wrote {} ({} vertices)", svg.display(), poly.vertices.len());
        }
        Command::Extend { file, max_t } => {
            let cert = read_certificate(&file)?;
            let ext = extend_plus_two(&cert, max_t)?;
            eprintln!("t = {}", ext.t);
            print_certificate(&ext.certificate, Provenance::Constructed);
        }
        Command::Even { m, n, max_norm } => {
            print_certificate(&even_gon(m, n, max_norm)?, Provenance::Constructed);
        }
        Command::Reps { m, cap } => {
            for r in enumerate_reps(m, cap)? {
                println!("{} {} {}", r.a, r.b, r.c);
            }
        }
        Command::Descend { file, q } => {
            let cert = read_certificate(&file)?;
            print_certificate(&descend_by_prime(&cert, q)?, Provenance::Constructed);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::NotFound(msg)) => {
            eprintln!("equigon: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("equigon: {msg}");
            ExitCode::from(2)
        }
    }
}
