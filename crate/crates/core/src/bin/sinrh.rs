//! Command-line driver: hypergraph generation, interference degree,
//! unit disk graphs, realization search, and the lemma-check suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 resource limit exceeded.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sinr_hypergraph::hypergraph::{Hypergraph, HypergraphError};
use sinr_hypergraph::realizability::{
    search_realization, RealizabilityError, RealizationSearchConfig,
};
use sinr_hypergraph::verification::{run_all, VerifyConfig};
use sinr_hypergraph::wireless::{unit_disk_graph, WirelessError, WirelessNetwork};

const EXIT_VERIFY_FAILURE: u8 = 1;
const EXIT_INPUT_ERROR: u8 = 2;
const EXIT_RESOURCE_LIMIT: u8 = 3;

#[derive(Parser)]
#[command(name = "sinrh", about = "SINR interference hypergraph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the interference hypergraph of a network JSON file.
    GenHypergraph {
        /// Network JSON: {"stations": [[x,y],...], "alpha": 4.0, "beta": 1.0}
        network: PathBuf,
        /// Cap on hyperedge size (default: number of stations).
        #[arg(long)]
        max_size: Option<usize>,
        /// Output path (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Interference degree of a hypergraph JSON file, exact and decimal.
    Sigma {
        /// Hypergraph JSON: {"n": <int>, "edges": [[v,...],...]}
        hypergraph: PathBuf,
    },
    /// Unit disk graph of the stations in a network JSON file.
    Udg {
        network: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a wireless network realizing a hypergraph.
    Realize {
        hypergraph: PathBuf,
        #[arg(long, default_value_t = 100)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the numeric lemma checks; nonzero exit if any fail.
    VerifyLemmas {
        #[arg(long, default_value_t = 2000)]
        trials: u64,
        #[arg(long, default_value_t = 1001)]
        grid: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum CmdError {
    Input(String),
    ResourceLimit(String),
}

impl CmdError {
    fn exit_code(&self) -> u8 {
        match self {
            CmdError::Input(_) => EXIT_INPUT_ERROR,
            CmdError::ResourceLimit(_) => EXIT_RESOURCE_LIMIT,
        }
    }

    fn message(&self) -> &str {
        match self {
            CmdError::Input(m) | CmdError::ResourceLimit(m) => m,
        }
    }
}

impl From<WirelessError> for CmdError {
    fn from(e: WirelessError) -> Self {
        match e {
            WirelessError::TooManyStations { .. } => CmdError::ResourceLimit(e.to_string()),
            WirelessError::Hypergraph(inner) => inner.into(),
            other => CmdError::Input(other.to_string()),
        }
    }
}

impl From<HypergraphError> for CmdError {
    fn from(e: HypergraphError) -> Self {
        match e {
            HypergraphError::TooLarge { .. } => CmdError::ResourceLimit(e.to_string()),
            other => CmdError::Input(other.to_string()),
        }
    }
}

impl From<RealizabilityError> for CmdError {
    fn from(e: RealizabilityError) -> Self {
        match e {
            RealizabilityError::TargetTooLarge { .. } => {
                CmdError::ResourceLimit(e.to_string())
            }
            RealizabilityError::Wireless(inner) => inner.into(),
            RealizabilityError::Hypergraph(inner) => inner.into(),
            other => CmdError::Input(other.to_string()),
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, CmdError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CmdError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CmdError::Input(format!("{}: {e}", path.display())))
}

fn emit(json: String, out: Option<PathBuf>) -> Result<(), CmdError> {
    match out {
        Some(path) => fs::write(&path, json + "\n")
            .map_err(|e| CmdError::Input(format!("{}: {e}", path.display()))),
        None => {
            println!("{json}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8, CmdError> {
    match cli.command {
        Command::GenHypergraph { network, max_size, out } => {
            let net: WirelessNetwork = read_json(&network)?;
            let cap = max_size.unwrap_or_else(|| net.n().max(2));
            let hypergraph = net.generate_hypergraph(cap)?;
            emit(serde_json::to_string(&hypergraph).unwrap(), out)?;
            Ok(0)
        }
        Command::Sigma { hypergraph } => {
            let h: Hypergraph = read_json(&hypergraph)?;
            let sigma = h.interference_degree()?;
            let decimal = *sigma.numer() as f64 / *sigma.denom() as f64;
            if sigma.is_integer() {
                println!("sigma = {} = {:.11e}", sigma.numer(), decimal);
            } else {
                println!("sigma = {}/{} = {:.11e}", sigma.numer(), sigma.denom(), decimal);
            }
            Ok(0)
        }
        Command::Udg { network, out } => {
            let net: WirelessNetwork = read_json(&network)?;
            let graph = unit_disk_graph(net.stations())?;
            emit(serde_json::to_string(graph.hypergraph()).unwrap(), out)?;
            Ok(0)
        }
        Command::Realize { hypergraph, restarts, seed } => {
            let target: Hypergraph = read_json(&hypergraph)?;
            let cfg = RealizationSearchConfig {
                restarts,
                rng_seed: seed,
                ..Default::default()
            };
            let result = search_realization(&target, &cfg)?;
            println!("{}", serde_json::to_string(&result).unwrap());
            Ok(0)
        }
        Command::VerifyLemmas { trials, grid, seed } => {
            let cfg = VerifyConfig { trials, grid, seed };
            let checks = run_all(cfg);
            let mut failed = false;
            for check in &checks {
                let status = if check.passed { "PASS" } else { "FAIL" };
                println!("{status} {}: {}", check.name, check.detail);
                failed |= !check.passed;
            }
            Ok(if failed { EXIT_VERIFY_FAILURE } else { 0 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}
