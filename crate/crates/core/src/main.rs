use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use curvact::classify::{classify_group, classify_invariant_curve, ClassifyOptions, SamplingConfig};
use curvact::corpus::{generate_corpus, Corpus, CorpusSpec, Sidecar};
use curvact::invariants::{curve_invariants, singular_parameters, CurveMap};
use curvact::json::{load, to_document, write_document};
use curvact::monomial::{iota, make_monomial_curve, ExponentTuple};
use curvact::projection::{project_curve_detailed, theta_critical_data, theta_for, ProjectionFrame};
use curvact::projective::{MobiusTransform, PnPoint, ProjSubspace, ProjTransform};
use curvact::report::{format_table, run_suite, SuiteOptions};
use curvact::Result;

#[derive(Parser)]
#[command(name = "curvact", version, about = "Exact classification of rational curves preserved by projective transformations")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Seed for randomized sampling and corpus generation.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Sample triples tried before declaring a transform not invariant.
    #[arg(long, global = true, default_value_t = 8)]
    retry_bound: u32,
    /// Longest generator word tried by group classification.
    #[arg(long, global = true, default_value_t = 6)]
    word_bound: usize,
    /// Largest power examined when deciding finite order.
    #[arg(long, global = true, default_value_t = curvact::projective::DEFAULT_ORDER_BOUND)]
    order_bound: u64,
}

impl GlobalOpts {
    fn classify(&self) -> ClassifyOptions {
        ClassifyOptions {
            sampling: SamplingConfig { seed: self.seed, retry_bound: self.retry_bound },
            order_bound: self.order_bound,
            word_bound: self.word_bound,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the monomial curve for an exponent tuple.
    Monomial {
        /// Comma-separated decreasing exponents, e.g. 5,4,1.
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<u32>,
        /// Ambient dimension (defaults to the number of exponents).
        #[arg(long)]
        n: Option<usize>,
    },
    /// Image of a 2×2 matrix under the representation preserving the rational normal curve.
    Iota {
        #[arg(long)]
        n: usize,
        /// Matrix JSON (inline or a file path).
        #[arg(long)]
        matrix: String,
    },
    /// Degrees, ramification and singular parameters of a curve.
    Invariants {
        #[arg(long)]
        curve: String,
    },
    /// Project a curve from a point, optionally solving for the parameter map onto a target.
    Project {
        #[arg(long)]
        curve: String,
        /// Center point JSON (inline or a file path).
        #[arg(long)]
        center: String,
        /// Hyperplane JSON; defaults to a coordinate hyperplane missing the center.
        #[arg(long)]
        hyperplane: Option<String>,
        /// Parametrization of the projected curve to solve `target ∘ ϑ = projection` against.
        #[arg(long)]
        target: Option<String>,
    },
    /// Classify a curve preserved by a transform (or a group of them).
    Classify {
        #[arg(long)]
        curve: String,
        #[arg(long, required_unless_present = "group")]
        transform: Option<String>,
        /// Generator files for group classification.
        #[arg(long, num_args = 1..)]
        group: Vec<String>,
    },
    /// Generate a random corpus with ground truth.
    Corpus {
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        sidecar: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        dims: Vec<usize>,
        /// Semicolon-separated tuples, e.g. "2,1;3,1"; overrides --dims.
        #[arg(long)]
        tuples: Option<String>,
        #[arg(long, default_value_t = 9)]
        max_degree: u32,
        #[arg(long, default_value_t = 3)]
        height: i64,
        #[arg(long, default_value_t = 30)]
        count: usize,
    },
    /// Classify every corpus instance and compare against the ground truth.
    Suite {
        #[arg(long)]
        corpus: String,
        #[arg(long)]
        sidecar: Option<String>,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record per-instance wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
}

fn emit<T: Serialize>(value: &T) -> Result<()> {
    print!("{}", to_document(value)?);
    Ok(())
}

fn parse_tuples(s: &str) -> std::result::Result<Vec<Vec<u32>>, String> {
    s.split(';')
        .map(|t| t.split(',').map(|x| x.trim().parse::<u32>().map_err(|e| format!("{x:?}: {e}"))).collect())
        .collect()
}

fn run(cli: Cli) -> Result<ExitCode> {
    let opts = cli.global.classify();
    match cli.command {
        Command::Monomial { k, n } => {
            let n = n.unwrap_or(k.len());
            let tuple = ExponentTuple::new(k, n)?;
            if !tuple.is_proper() {
                eprintln!("warning: exponents share the factor {}; the curve is covered several times", tuple.gcd());
            }
            emit(&make_monomial_curve(&tuple))?;
        }
        Command::Iota { n, matrix } => {
            let m: MobiusTransform = load(&matrix)?;
            emit(&iota(n, &m)?)?;
        }
        Command::Invariants { curve } => {
            let psi: CurveMap = load(&curve)?;
            let inv = curve_invariants(&psi)?;
            let sing = singular_parameters(&psi)?;
            emit(&json!({
                "r": inv.r,
                "s_totals": inv.s_totals,
                "genus": inv.genus,
                "wpoints": inv.wpoints,
                "wpoint_residual": inv.wpoint_residual,
                "simple_wpoints": inv.simple_wpoints,
                "profiles": inv.profiles,
                "singular": sing.parameters(),
                "singular_detail": sing,
            }))?;
        }
        Command::Project { curve, center, hyperplane, target } => {
            let psi: CurveMap = load(&curve)?;
            let p: PnPoint = load(&center)?;
            let l: Option<ProjSubspace> = hyperplane.as_deref().map(load).transpose()?;
            let frame = ProjectionFrame::new(p, l)?;
            let projected = project_curve_detailed(&psi, &frame)?;
            let mut out = json!({
                "projected": projected.curve,
                "removed_factor": projected.removed_factor,
                "frame": frame,
            });
            if let Some(t) = target {
                let nu: CurveMap = load(&t)?;
                let theta = theta_for(&projected.curve, &nu)?;
                out["theta"] = serde_json::to_value(&theta)?;
                out["theta_critical"] = serde_json::to_value(theta_critical_data(&theta))?;
            }
            emit(&out)?;
        }
        Command::Classify { curve, transform, group } => {
            let psi: CurveMap = load(&curve)?;
            if group.is_empty() {
                let g: ProjTransform = load(transform.as_deref().expect("required by clap"))?;
                let c = classify_invariant_curve(&psi, &g, &opts)?;
                for w in &c.warnings {
                    eprintln!("warning: {w}");
                }
                emit(&c)?;
                return Ok(ExitCode::from(c.result.exit_code() as u8));
            }
            let mut gens: Vec<ProjTransform> = transform.iter().map(|t| load(t)).collect::<Result<_>>()?;
            for g in &group {
                gens.push(load(g)?);
            }
            let c = classify_group(&gens, &psi, &opts)?;
            if c.heuristic {
                eprintln!("note: verdict rests on a bounded word search (length ≤ {})", opts.word_bound);
            }
            emit(&c)?;
            return Ok(ExitCode::from(c.result.exit_code() as u8));
        }
        Command::Corpus { out, sidecar, dims, tuples, max_degree, height, count } => {
            let tuples = match tuples {
                Some(t) => parse_tuples(&t).map_err(curvact::Error::Parse)?,
                None => Vec::new(),
            };
            let spec = CorpusSpec { dims, tuples, max_degree, height, count, seed: cli.global.seed.unwrap_or(0) };
            let (corpus, truth) = generate_corpus(&spec)?;
            write_document(&out, &corpus)?;
            write_document(&sidecar, &truth)?;
        }
        Command::Suite { corpus, sidecar, out, timing } => {
            let corpus: Corpus = load(&corpus)?;
            let sidecar: Option<Sidecar> = sidecar.as_deref().map(load).transpose()?;
            let suite = SuiteOptions { classify: opts, timing };
            let report = run_suite(&corpus, sidecar.as_ref(), &suite);
            eprint!("{}", format_table(&report));
            match out {
                Some(path) => write_document(&path, &report)?,
                None => emit(&report)?,
            }
            if !report.success() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

