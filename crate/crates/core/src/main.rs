use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use affine_signature::campaign::{run_theorem1_campaign, run_zuber_campaign};
use affine_signature::config::{parse_range, CampaignConfig, Format};
use affine_signature::fusion::build_regular_graph;
use affine_signature::rational::parse;
use affine_signature::report::{emit, emit_point, inspect_point, Report};
use affine_signature::{Error, ParamPoint, Result};

#[derive(Parser)]
#[command(
    name = "affine-signature",
    version,
    about = "Exact sign-count verification for affine SL(N) intersection forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample parameter points and compare the sign counts of Q and G.
    Theorem1(CampaignArgs),
    /// Build fusion graphs and compare three signature computations.
    Zuber(CampaignArgs),
    /// Inspect one parameter point, e.g. `point 1/8,1/4`.
    Point {
        coords: String,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Dump the fusion graph at (N, level).
    Graph {
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        level: i64,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CampaignArgs {
    /// key=value file; flags override its settings
    #[arg(long)]
    config: Option<PathBuf>,
    /// comma-separated values of N
    #[arg(long = "N")]
    n: Option<String>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long = "den-bound")]
    den_bound: Option<i64>,
    #[arg(long)]
    seed: Option<u64>,
    /// rational in [0, 1], e.g. 1/4
    #[arg(long = "boundary-fraction")]
    boundary_fraction: Option<String>,
    #[arg(long)]
    level: Option<i64>,
    /// inclusive range A..B
    #[arg(long)]
    levels: Option<String>,
    #[arg(long)]
    tolerance: Option<f64>,
    #[arg(long, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// run work items on one thread
    #[arg(long)]
    sequential: bool,
    /// include wall-clock time (breaks byte-identical reports)
    #[arg(long)]
    timing: bool,
}

impl CampaignArgs {
    fn to_config(&self) -> Result<CampaignConfig> {
        let mut c = CampaignConfig::default();
        if let Some(path) = &self.config {
            c.apply_file(&std::fs::read_to_string(path)?)?;
        }
        if let Some(n) = &self.n {
            c.set("N", n)?;
        }
        if let Some(t) = self.trials {
            c.trials = t;
        }
        if let Some(b) = self.den_bound {
            c.denominator_bound = b;
        }
        if let Some(s) = self.seed {
            c.seed = s;
        }
        if let Some(f) = &self.boundary_fraction {
            c.boundary_fraction = parse(f)
                .ok_or_else(|| Error::InvalidInput(format!("bad boundary fraction {f:?}")))?;
        }
        if let Some(l) = self.level {
            c.level_range = vec![l];
        }
        if let Some(r) = &self.levels {
            c.level_range = parse_range(r)?;
        }
        if let Some(t) = self.tolerance {
            c.tolerance = t;
        }
        if self.out.is_some() {
            c.output_path = self.out.clone();
        }
        c.parallel &= !self.sequential;
        c.record_timing = self.timing;
        c.validate()?;
        Ok(c)
    }
}

fn write_output(bytes: &[u8], out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, bytes)?,
        None => {
            use std::io::Write;
            std::io::stdout().write_all(bytes)?;
        }
    }
    Ok(())
}

fn finish_campaign(report: Report, args: &CampaignArgs, config: &CampaignConfig) -> Result<bool> {
    write_output(&emit(&report, args.format)?, config.output_path.as_ref())?;
    Ok(report.pass)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Theorem1(args) => {
            let config = args.to_config()?;
            finish_campaign(run_theorem1_campaign(&config)?, &args, &config)
        }
        Command::Zuber(args) => {
            let config = args.to_config()?;
            finish_campaign(run_zuber_campaign(&config)?, &args, &config)
        }
        Command::Point { coords, format } => {
            let values = coords
                .split(',')
                .map(|s| parse(s).ok_or_else(|| Error::InvalidInput(format!("bad rational {s:?}"))))
                .collect::<Result<Vec<_>>>()?;
            let inspection = inspect_point(&ParamPoint::new(values)?, 1e-8);
            write_output(&emit_point(&inspection, format)?, None)?;
            Ok(inspection.check.pass)
        }
        Command::Graph { n, level, dot, out } => {
            let (graph, _) = build_regular_graph(n, level + n as i64)?;
            let text = if dot { graph.to_dot() } else { graph.dump() };
            write_output(text.as_bytes(), out.as_ref())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
