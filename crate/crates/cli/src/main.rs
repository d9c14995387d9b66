//! `webcalc`: evaluate annular web terms, run verification suites, and
//! inspect circle values and Ariki-Koike reports.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use webcalc_core::ak::{self, AkConfig};
use webcalc_core::rep::coil::{essential_circle_value, predicted_circle_value, Side};
use webcalc_core::rep::LeviDatum;
use webcalc_core::scalar::{parse_scalar, Assignment, FieldElem};
use webcalc_core::suites::{run_suite, Bounds, SUITE_NAMES};
use webcalc_core::web::ast::WebTerm;
use webcalc_core::web::eval::{evaluate, EvalMode};
use webcalc_core::web::{parse, typecheck};

#[derive(Parser)]
#[command(name = "webcalc", about = "Exact annular web calculus engine", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Rank of gl_n
    #[arg(long)]
    n: Option<u8>,
    /// Levi composition, comma separated, summing to n (e.g. 2,1)
    #[arg(long)]
    levi: Option<String>,
    /// Seed for every random specialization point
    #[arg(long)]
    seed: Option<u64>,
    /// Config file with key=value defaults (n, levi, seed, mode)
    #[arg(long)]
    config: Option<PathBuf>,
    /// Evaluation mode
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Variable assignment for --mode spec, e.g. "v=3,u1=2,u2=5"
    #[arg(long)]
    assign: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    V1,
    Spec,
}

#[derive(Clone, Copy, ValueEnum)]
enum TensorArg {
    Skein,
    Hopf,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum AkCheck {
    Relations,
    Jm,
    Dimension,
    Kernel,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a web DSL file to a matrix
    Eval {
        #[command(flatten)]
        common: Common,
        /// Input file (UTF-8, '#' comments)
        #[arg(long)]
        file: PathBuf,
        /// Monoidal product used for the '@' operator
        #[arg(long, value_enum, default_value = "skein")]
        tensor: TensorArg,
    },
    /// Run a verification suite
    Check {
        #[command(flatten)]
        common: Common,
        /// Suite name, or "all"
        #[arg(long)]
        suite: String,
        /// Raise the bounds to n = 4, m = 4
        #[arg(long)]
        deep: bool,
    },
    /// Compare an essential circle against its Levi evaluation
    Circle {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum)]
        side: SideArg,
    },
    /// Ariki-Koike checks on m strands
    Ak {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        m: usize,
        /// Restrict to one family of checks
        #[arg(long, value_enum)]
        check: Option<AkCheck>,
    },
    /// Dimension of the generalized blob algebra
    Dim {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        m: usize,
    },
}

struct Config {
    ctx: LeviDatum,
    seed: u64,
    mode: EvalMode,
}

fn load_config_file(path: &PathBuf) -> Result<BTreeMap<String, String>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut map = BTreeMap::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!("bad config line: {line}"));
        };
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}

fn parse_assignment(text: &str, d: usize) -> Result<Assignment, String> {
    let mut v = FieldElem::constant(1);
    let mut u: Vec<Option<FieldElem>> = vec![None; d];
    for part in text.split(',') {
        let Some((key, value)) = part.split_once('=') else {
            return Err(format!("bad assignment entry: {part}"));
        };
        let val = parse_scalar(value.trim()).map_err(|e| e.to_string())?;
        let key = key.trim();
        if key == "v" {
            v = val;
        } else if let Some(idx) = key.strip_prefix('u') {
            let i: usize = idx.parse().map_err(|_| format!("bad variable {key}"))?;
            if i == 0 || i > d {
                return Err(format!("u index out of range: {key}"));
            }
            u[i - 1] = Some(val);
        } else {
            return Err(format!("unknown variable {key}"));
        }
    }
    let u = u
        .into_iter()
        .enumerate()
        .map(|(i, x)| x.ok_or(format!("missing u{}", i + 1)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Assignment { v, u })
}

fn resolve(common: &Common) -> Result<Config, String> {
    let file = match &common.config {
        Some(path) => load_config_file(path)?,
        None => BTreeMap::new(),
    };
    let n: u8 = match (&common.n, file.get("n")) {
        (Some(n), _) => *n,
        (None, Some(s)) => s.parse().map_err(|_| "bad n in config".to_string())?,
        (None, None) => return Err("missing --n".into()),
    };
    let levi_text = match (&common.levi, file.get("levi")) {
        (Some(l), _) => l.clone(),
        (None, Some(s)) => s.clone(),
        (None, None) => n.to_string(),
    };
    let comp: Vec<u8> = levi_text
        .split(',')
        .map(|s| s.trim().parse::<u8>().map_err(|_| format!("bad levi entry {s}")))
        .collect::<Result<_, _>>()?;
    let ctx = LeviDatum::new(n, comp).map_err(|e| e.to_string())?;
    let seed = match (&common.seed, file.get("seed")) {
        (Some(s), _) => *s,
        (None, Some(s)) => s.parse().map_err(|_| "bad seed in config".to_string())?,
        (None, None) => match std::env::var("WEBCALC_SEED") {
            Ok(s) => s.parse().map_err(|_| "bad WEBCALC_SEED".to_string())?,
            Err(_) => 0,
        },
    };
    let mode_key = match (&common.mode, file.get("mode")) {
        (Some(ModeArg::Exact), _) => "exact".to_string(),
        (Some(ModeArg::V1), _) => "v1".to_string(),
        (Some(ModeArg::Spec), _) => "spec".to_string(),
        (None, Some(s)) => s.clone(),
        (None, None) => "exact".to_string(),
    };
    let mode = match mode_key.as_str() {
        "exact" => EvalMode::Exact,
        "v1" => EvalMode::V1,
        "spec" => {
            let text = common
                .assign
                .clone()
                .or_else(|| file.get("assign").cloned())
                .ok_or("--mode spec requires --assign")?;
            EvalMode::Specialized(parse_assignment(&text, ctx.d())?)
        }
        other => return Err(format!("unknown mode {other}")),
    };
    Ok(Config { ctx, seed, mode })
}

/// Replace skein products by plain juxtaposition.
fn to_hopf(term: &WebTerm) -> WebTerm {
    match term {
        WebTerm::SkeinTensor(a, b) => WebTerm::tensor(to_hopf(a), to_hopf(b)),
        WebTerm::HTensor(a, b) => WebTerm::tensor(to_hopf(a), to_hopf(b)),
        WebTerm::VCompose(t, b) => WebTerm::compose(to_hopf(t), to_hopf(b)),
        WebTerm::Scale(c, t) => WebTerm::Scale(c.clone(), Box::new(to_hopf(t))),
        WebTerm::Sum(a, b) => WebTerm::Sum(Box::new(to_hopf(a)), Box::new(to_hopf(b))),
        other => other.clone(),
    }
}

fn cmd_eval(common: &Common, file: &PathBuf, tensor: TensorArg) -> Result<bool, String> {
    let cfg = resolve(common)?;
    let text = std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let term = parse(&text).map_err(|e| e.to_string())?;
    let term = match tensor {
        TensorArg::Skein => term,
        TensorArg::Hopf => to_hopf(&term),
    };
    typecheck(&term, &cfg.ctx).map_err(|e| e.to_string())?;
    let matrix = evaluate(&term, &cfg.ctx, &cfg.mode).map_err(|e| e.to_string())?;
    println!(
        "{}",
        serde_json::to_string(&matrix.to_json()).map_err(|e| e.to_string())?
    );
    Ok(true)
}

fn cmd_check(common: &Common, suite: &str, deep: bool) -> Result<bool, String> {
    let cfg = resolve_with_default_n(common)?;
    let bounds = if deep { Bounds::deep() } else { Bounds::default() };
    let names: Vec<&str> = if suite == "all" {
        SUITE_NAMES.to_vec()
    } else {
        vec![suite]
    };
    let mut all_pass = true;
    for name in names {
        let report = run_suite(name, &bounds, cfg.seed).map_err(|e| e.to_string())?;
        for instance in &report.instances {
            println!(
                "{}",
                serde_json::to_string(instance).map_err(|e| e.to_string())?
            );
        }
        if !report.pass {
            all_pass = false;
        }
        eprintln!(
            "suite {name}: {} instances, {}",
            report.instances.len(),
            if report.pass { "all pass" } else { "FAILURES" }
        );
    }
    Ok(all_pass)
}

fn resolve_with_default_n(common: &Common) -> Result<Config, String> {
    // suites fix their own Levi data; only the seed is needed
    let mut c = common.clone();
    if c.n.is_none() {
        c.n = Some(1);
    }
    resolve(&c)
}

fn cmd_circle(common: &Common, k: u32, side: SideArg) -> Result<bool, String> {
    let cfg = resolve(common)?;
    let side = match side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    let computed = essential_circle_value(&cfg.ctx, k, side).map_err(|e| e.to_string())?;
    let predicted = predicted_circle_value(&cfg.ctx, k, side);
    let agree = computed == predicted;
    println!(
        "{}",
        serde_json::json!({
            "n": cfg.ctx.n,
            "levi": cfg.ctx.comp,
            "k": k,
            "side": match side { Side::Left => "left", Side::Right => "right" },
            "computed": computed.to_string(),
            "predicted": predicted.to_string(),
            "agree": agree,
        })
    );
    Ok(agree)
}

fn cmd_ak(common: &Common, m: usize, check: Option<AkCheck>) -> Result<bool, String> {
    let cfg = resolve(common)?;
    let akcfg = AkConfig::default();
    match check {
        None => {
            let report =
                ak::ak_report(&cfg.ctx, &akcfg, m, cfg.seed).map_err(|e| e.to_string())?;
            let ok = report.relations_ok
                && report.jm_minpoly_ok
                && report.r2_kernel_ok
                && report.blob_dimension == report.image_rank;
            println!(
                "{}",
                serde_json::to_string(&report).map_err(|e| e.to_string())?
            );
            Ok(ok)
        }
        Some(AkCheck::Relations) => {
            let failures = ak::check_ak_relations(&cfg.ctx, &akcfg, m).map_err(|e| e.to_string())?;
            println!("{}", serde_json::json!({ "m": m, "failures": failures }));
            Ok(failures.is_empty())
        }
        Some(AkCheck::Jm) => {
            let failures = ak::check_jm(&cfg.ctx, &akcfg, m).map_err(|e| e.to_string())?;
            println!("{}", serde_json::json!({ "m": m, "failures": failures }));
            Ok(failures.is_empty())
        }
        Some(AkCheck::Dimension) => {
            let dim = ak::blob_dimension(&cfg.ctx, m);
            let rank = ak::image_rank(&cfg.ctx, &akcfg, m, cfg.seed, false)
                .map_err(|e| e.to_string())?;
            println!(
                "{}",
                serde_json::json!({ "m": m, "blob_dimension": dim, "image_rank": rank })
            );
            Ok(dim == rank)
        }
        Some(AkCheck::Kernel) => {
            if !cfg.ctx.comp.iter().all(|&l| l == 1) {
                return Err("kernel check needs the Cartan composition".into());
            }
            let i = if m >= 2 { 2 } else { 1 };
            let r = ak::r_element_image(&cfg.ctx, &akcfg, i, m).map_err(|e| e.to_string())?;
            let ok = r.is_zero_map();
            println!("{}", serde_json::json!({ "m": m, "r_index": i, "kernel_ok": ok }));
            Ok(ok)
        }
    }
}

fn cmd_dim(common: &Common, m: usize) -> Result<bool, String> {
    let cfg = resolve(common)?;
    println!("{}", ak::blob_dimension(&cfg.ctx, m));
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Eval { common, file, tensor } => cmd_eval(common, file, *tensor),
        Command::Check { common, suite, deep } => cmd_check(common, suite, *deep),
        Command::Circle { common, k, side } => cmd_circle(common, *k, *side),
        Command::Ak { common, m, check } => cmd_ak(common, *m, *check),
        Command::Dim { common, m } => cmd_dim(common, *m),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
