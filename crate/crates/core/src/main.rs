use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use modsep::harness::{collect_records, emit_features, run_experiment_with, ExperimentConfig, ResultsWriter};
use modsep::oracle::{beta_prime, rect_closed_forms, RectTheoryParams};
use modsep::{Error, ModulationScheme, Result, SchemeKind};

#[derive(Parser)]
#[command(name = "modsep", version, about = "FSK vs QAM/PSK separation experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the Monte Carlo experiment and write results.csv plus one model per h.
    Simulate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
        /// Overrides master_seed from the config.
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Dump every realization's drawn parameters and features.
    Features {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the rectangular-pulse closed forms of the features.
    Theory {
        #[arg(long)]
        h: f64,
        #[arg(long)]
        ns: u32,
        /// Residual carrier offset, radians per sample.
        #[arg(long, allow_hyphen_values = true)]
        delta: f64,
    },
}

fn simulate(config: &Path, out_dir: &Path, seed: Option<u64>) -> Result<()> {
    let mut cfg = ExperimentConfig::load(config)?;
    if let Some(seed) = seed {
        cfg.master_seed = seed;
    }
    std::fs::create_dir_all(out_dir).map_err(|source| Error::Io { path: out_dir.to_owned(), source })?;
    let mut results = ResultsWriter::create(&out_dir.join("results.csv"))?;
    run_experiment_with(&cfg, |res| {
        results.write_rows(&res.rows)?;
        res.anchor_model.save(&out_dir.join(format!("model_h{}.toml", res.h)))
    })?;
    log::info!("wrote {}", out_dir.join("results.csv").display());
    Ok(())
}

fn features(config: &Path, out: &Path) -> Result<()> {
    let cfg = ExperimentConfig::load(config)?;
    emit_features(&collect_records(&cfg)?, out)
}

fn theory(h: f64, ns: u32, delta: f64) -> Result<()> {
    let half = std::f64::consts::FRAC_PI_2;
    println!("scheme,placement,mean,variance");
    for kind in [SchemeKind::Bpsk, SchemeKind::Qam16, SchemeKind::Psk4, SchemeKind::Psk8, SchemeKind::Fsk2] {
        let scheme = ModulationScheme::with_index(kind, h)?;
        for (name, offset) in [("0", delta), ("pi/2", delta + half)] {
            let params = RectTheoryParams {
                samples_per_symbol: ns,
                carrier_offset: offset,
                beta_prime: Some(beta_prime(h, ns)),
                fourth_moment: scheme.fourth_moment(),
            };
            let (mean, var) = rect_closed_forms(&params, kind)?;
            println!("{kind},{name},{mean:.6},{var:.6}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Simulate { config, out_dir, seed, jobs } => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.unwrap_or(0)).build();
            match pool {
                Ok(pool) => pool.install(|| simulate(&config, &out_dir, seed)),
                Err(e) => Err(Error::Config(e.to_string())),
            }
        }
        Command::Features { config, out } => features(&config, &out),
        Command::Theory { h, ns, delta } => theory(h, ns, delta),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
