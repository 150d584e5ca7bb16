//! `fixedstart`: run sweeps, print predictions, fit scaling exponents, play
//! the black-box guessing game and run the self-test.
//!
//! Exit codes: 0 success, 1 runtime failure, 2 usage error.

use anyhow::{Context, Result};
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use fixedstart::blackbox::{random_guessing_solve, OmZInstance, QueryDomain};
use fixedstart::harness::{
    emit_csv, emit_raw_csv, fit_table, format_real, load_table, preset, render_csv, run_experiment_records,
    AggregateStats, AlgorithmSpec, DMode, ExperimentConfig, DEFAULT_MAX_N,
};
use fixedstart::harness::aggregate;
use fixedstart::init::init_exact_distance;
use fixedstart::samplers::{derive_seed, rng_from_seed};
use fixedstart::selftest::{run_selftest, SelftestOptions};
use fixedstart::theory::{optimal_static_lambda, predicted_runtime, PowerLawLimit, Target};
use fixedstart::BitString;
use std::fmt;
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "fixedstart", version, about = "Fixed-start runtime laboratory for evolutionary algorithms on OneMax")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run an experiment from a config file, a preset and/or flags.
    Run(RunArgs),
    /// Run a preset sweep (`--preset` required), scaled by `--max-n`.
    Sweep(RunArgs),
    /// Print constant-free runtime predictions for one (n, D).
    Predict(PredictArgs),
    /// Fit scaling exponents per algorithm from an emitted CSV.
    Fit(FitArgs),
    /// Random-guessing black-box strategy at small n.
    Blackbox(BlackboxArgs),
    /// Fast invariant checks.
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CapArg {
    /// λ ∈ [1, n].
    N,
    /// λ ∈ [1, 2 ln(n+1)].
    Log,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DModeArg {
    Exact,
    Bernoulli,
    Sqrt,
    Log,
}

impl From<DModeArg> for DMode {
    fn from(m: DModeArg) -> Self {
        match m {
            DModeArg::Exact => DMode::Exact,
            DModeArg::Bernoulli => DMode::Bernoulli,
            DModeArg::Sqrt => DMode::Sqrt,
            DModeArg::Log => DMode::Log,
        }
    }
}

#[derive(Args, Debug, Default)]
struct RunArgs {
    /// JSON config file.
    #[arg(long)]
    config: Option<String>,
    /// fig1 (D ≈ √n), fig2 (D ≈ ln(n+1)) or fig3 (D = 2^i at the largest n).
    #[arg(long)]
    preset: Option<String>,
    /// Largest n a preset may use.
    #[arg(long)]
    max_n: Option<usize>,
    /// Problem sizes.
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    /// Start distances.
    #[arg(long, value_delimiter = ',')]
    d: Vec<usize>,
    /// How the start is drawn.
    #[arg(long, value_enum)]
    d_mode: Option<DModeArg>,
    #[arg(long)]
    trials: Option<usize>,
    /// Master seed.
    #[arg(long, env = "FIXEDSTART_SEED")]
    seed: Option<u64>,
    #[arg(long)]
    workers: Option<usize>,
    /// Budget per trial is this factor times n.
    #[arg(long)]
    budget_factor: Option<f64>,
    /// Algorithms: rls, ea, fitdep, sa, sa-log, static:<λ>, static:opt,
    /// ht:<β>:<u>, or the shorthands `static` (with --lambda) and `ht`
    /// (with --beta and --u).
    #[arg(long, value_delimiter = ',')]
    algo: Vec<String>,
    #[arg(long)]
    beta: Option<f64>,
    /// Power-law upper limit: integer, `sqrt-n` or `n/2`.
    #[arg(long)]
    u: Option<String>,
    /// One-fifth rule factor.
    #[arg(long)]
    a: Option<f64>,
    /// Cap for `sa`.
    #[arg(long, value_enum)]
    cap: Option<CapArg>,
    #[arg(long)]
    lambda: Option<f64>,
    /// Redraw offspring identical to the parent instead of evaluating them.
    #[arg(long)]
    resample_identical: bool,
    /// Stats CSV path; standard output when absent.
    #[arg(long)]
    out: Option<String>,
    /// Per-trial CSV path.
    #[arg(long)]
    raw_out: Option<String>,
}

#[derive(Args, Debug)]
struct PredictArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    /// Restrict to these algorithms (same names as `run`, plus `blackbox`).
    #[arg(long, value_delimiter = ',')]
    algo: Vec<String>,
    /// Heavy-tailed exponent; adds a heavy-tailed row.
    #[arg(long)]
    beta: Option<f64>,
    /// Upper limit for --beta: integer, `sqrt-n`, `sqrt-n/d` or `n/2`.
    #[arg(long)]
    u: Option<String>,
    /// Adds a static-λ row.
    #[arg(long)]
    lambda: Option<f64>,
}

#[derive(Args, Debug)]
struct FitArgs {
    /// CSV written by `run`.
    csv: String,
    /// Column on the x axis.
    #[arg(long)]
    x: String,
    /// Column on the y axis.
    #[arg(long, default_value = "mean_evals")]
    y: String,
    /// Keep only these algorithms.
    #[arg(long, value_delimiter = ',')]
    algo: Vec<String>,
    /// Keep only these n.
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DomainArg {
    Cube,
    Sphere,
}

#[derive(Args, Debug)]
struct BlackboxArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    /// Number of independent runs.
    #[arg(long, alias = "trials")]
    runs: Option<u64>,
    #[arg(long, env = "FIXEDSTART_SEED", default_value_t = 0)]
    seed: u64,
    /// Where random queries come from.
    #[arg(long, value_enum, default_value = "cube")]
    domain: DomainArg,
    /// Also run the self-adjusting GA on the same (n, D) for comparison.
    #[arg(long)]
    compare: bool,
}

#[derive(Args, Debug)]
struct SelftestArgs {
    #[arg(long, env = "FIXEDSTART_SEED", default_value_t = 1)]
    seed: u64,
    #[arg(long, hide = true, default_value_t = 1.0)]
    normalizer_scale: f64,
}

/// A problem with the invocation itself; exits with code 2.
#[derive(Debug)]
struct Usage(String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn is_usage(e: &anyhow::Error) -> bool {
    if e.downcast_ref::<Usage>().is_some() {
        return true;
    }
    matches!(
        e.downcast_ref::<fixedstart::Error>(),
        Some(fixedstart::Error::InvalidParameter { .. } | fixedstart::Error::Config(_) | fixedstart::Error::LengthMismatch { .. })
    )
}

fn expand_algorithms(args: &RunArgs) -> Result<Vec<String>> {
    args.algo
        .iter()
        .map(|name| {
            Ok(match name.as_str() {
                "static" => match args.lambda {
                    Some(l) => format!("static:{l}"),
                    None => return Err(usage("`static` needs --lambda")),
                },
                "ht" => match (args.beta, &args.u) {
                    (Some(b), Some(u)) => format!("ht:{b}:{u}"),
                    _ => return Err(usage("`ht` needs --beta and --u")),
                },
                "sa" => match args.cap {
                    Some(CapArg::Log) => "sa-log".to_string(),
                    _ => "sa".to_string(),
                },
                other => other.to_string(),
            })
        })
        .collect()
}

fn build_config(args: &RunArgs, require_preset: bool) -> Result<ExperimentConfig> {
    let flags_given = !args.n.is_empty() || !args.algo.is_empty() || args.trials.is_some();
    if require_preset && args.preset.is_none() {
        return Err(usage("sweep needs --preset fig1|fig2|fig3"));
    }
    let mut cfg = if let Some(path) = &args.config {
        ExperimentConfig::load(path).map_err(|e| match e {
            fixedstart::Error::Parse { .. } => usage(e.to_string()),
            other => other.into(),
        })?
    } else if let Some(name) = &args.preset {
        preset(name, args.max_n.unwrap_or(DEFAULT_MAX_N), args.seed.unwrap_or(0))?
    } else if flags_given {
        let missing: Vec<&str> = [
            ("--n", args.n.is_empty()),
            ("--algo", args.algo.is_empty()),
            ("--trials", args.trials.is_none()),
        ]
        .into_iter()
        .filter(|m| m.1)
        .map(|m| m.0)
        .collect();
        if !missing.is_empty() {
            return Err(usage(format!("missing {}", missing.join(", "))));
        }
        let mode = args.d_mode.map(DMode::from).unwrap_or(DMode::Exact);
        if matches!(mode, DMode::Exact | DMode::Bernoulli) && args.d.is_empty() {
            return Err(usage("missing --d (required for --d-mode exact and bernoulli)"));
        }
        ExperimentConfig::new(vec![], args.n.clone(), mode, vec![], 0, 0)
    } else {
        return Err(usage("nothing to run: give --config, --preset, or --n, --d, --algo and --trials"));
    };

    if let (Some(_), Some(max_n)) = (&args.config, args.max_n) {
        cfg.n_values.retain(|&n| n <= max_n);
    }
    if !args.algo.is_empty() {
        cfg.algorithms = expand_algorithms(args)?;
    }
    if !args.n.is_empty() {
        cfg.n_values = args.n.clone();
    }
    if let Some(mode) = args.d_mode {
        cfg.d_mode = mode.into();
        if matches!(cfg.d_mode, DMode::Sqrt | DMode::Log) {
            cfg.d_values.clear();
        }
    }
    if !args.d.is_empty() {
        cfg.d_values = args.d.clone();
    }
    if let Some(t) = args.trials {
        cfg.trials = t;
    }
    if let Some(s) = args.seed {
        cfg.master_seed = s;
    }
    if let Some(w) = args.workers {
        cfg.workers = w;
    }
    if let Some(b) = args.budget_factor {
        cfg.budget_factor = b;
    }
    if let Some(a) = args.a {
        cfg.a = a;
    }
    if args.resample_identical {
        cfg.resample_identical = true;
    }
    if let Some(o) = &args.out {
        cfg.output_path = Some(o.clone());
    }
    if let Some(o) = &args.raw_out {
        cfg.raw_output_path = Some(o.clone());
    }
    cfg.validate()?;
    Ok(cfg)
}

fn summary_table(stats: &[AggregateStats]) -> String {
    let mut rows: Vec<&AggregateStats> = stats.iter().collect();
    rows.sort_by(|a, b| a.algorithm.cmp(&b.algorithm).then(a.n.cmp(&b.n)).then(a.d_nominal.total_cmp(&b.d_nominal)));
    let mut out = format!(
        "{:<16} {:>9} {:>10} {:>7} {:>8} {:>12} {:>12} {:>10} {:>10}\n",
        "algorithm", "n", "D", "trials", "censored", "mean T_F", "std T_F", "T_F/√nD", "std"
    );
    for s in rows {
        out.push_str(&format!(
            "{:<16} {:>9} {:>10} {:>7} {:>8} {:>12} {:>12} {:>10} {:>10}\n",
            s.algorithm,
            s.n,
            format_real(s.d_nominal),
            s.trials,
            s.censored,
            format_real(s.mean_evals),
            format_real(s.std_evals),
            format_real(s.mean_norm),
            format_real(s.std_norm)
        ));
    }
    out
}

fn cmd_run(args: &RunArgs, require_preset: bool) -> Result<()> {
    let cfg = build_config(args, require_preset)?;
    let cells = run_experiment_records(&cfg)?;
    let stats: Vec<AggregateStats> =
        cells.iter().map(|(cell, trials)| aggregate(cell, trials, cfg.budget(cell.n))).collect();
    let censored: u64 = stats.iter().map(|s| s.censored).sum();
    if censored > 0 {
        eprintln!("warning: {censored} trial(s) hit the evaluation budget; their rows are lower bounds");
    }
    if let Some(raw) = &cfg.raw_output_path {
        emit_raw_csv(&cells, raw)?;
    }
    match &cfg.output_path {
        Some(path) => {
            emit_csv(&stats, path)?;
            print!("{}", summary_table(&stats));
            eprintln!("wrote {path}");
        }
        None => {
            eprint!("{}", summary_table(&stats));
            print!("{}", render_csv(&stats));
        }
    }
    Ok(())
}

fn parse_power_limit(u: &str, n: usize) -> Result<PowerLawLimit> {
    Ok(match u {
        "sqrt-n" => PowerLawLimit::SqrtN,
        "sqrt-n/d" => PowerLawLimit::SqrtNOverD,
        "n/2" => PowerLawLimit::Value((n / 2) as u64),
        lit => PowerLawLimit::Value(
            lit.parse::<u64>()
                .ok()
                .filter(|&v| v >= 1)
                .ok_or_else(|| usage(format!("--u expects a positive integer, sqrt-n, sqrt-n/d or n/2, got {lit:?}")))?,
        ),
    })
}

fn predict_target(name: &str, n: usize, d: usize, args: &PredictArgs) -> Result<(String, Target<f64>)> {
    if name == "blackbox" {
        return Ok(("black-box lower bound".into(), Target::BlackBox));
    }
    let spec: AlgorithmSpec = match name {
        "static" => AlgorithmSpec::Static(args.lambda.ok_or_else(|| usage("`static` needs --lambda"))?),
        "ht" => {
            let beta = args.beta.ok_or_else(|| usage("`ht` needs --beta"))?;
            let u = args.u.as_deref().unwrap_or("sqrt-n");
            return Ok((format!("ht:{beta}:{u}"), Target::HeavyTailed { beta, u: parse_power_limit(u, n)? }));
        }
        other => other.parse()?,
    };
    let target = match spec {
        AlgorithmSpec::Rls => Target::Rls,
        AlgorithmSpec::Ea => Target::OnePlusOneEa,
        AlgorithmSpec::Static(lambda) => Target::Static { lambda },
        AlgorithmSpec::StaticOptimal => Target::Static { lambda: optimal_static_lambda(n, d)? },
        AlgorithmSpec::FitnessDependent => Target::FitnessDependent,
        AlgorithmSpec::SelfAdjusting { .. } => Target::SelfAdjusting,
        AlgorithmSpec::HeavyTailed { beta, u } => {
            Target::HeavyTailed { beta, u: parse_power_limit(&u.to_string(), n)? }
        }
    };
    Ok((spec.to_string(), target))
}

fn cmd_predict(args: &PredictArgs) -> Result<()> {
    let n = args.n.ok_or_else(|| usage("missing --n"))?;
    let d = args.d.ok_or_else(|| usage("missing --d"))?;
    if d == 0 {
        return Err(usage("D = 0: the start is already optimal, nothing to predict"));
    }
    let mut names: Vec<String> = args.algo.clone();
    if names.is_empty() {
        names = vec!["sa".into(), "fitdep".into()];
        if d >= 2 {
            names.push("static:opt".into());
        }
        names.push("ht:2:sqrt-n".into());
        names.extend(["ea".into(), "rls".into()]);
        if 2 * d <= n {
            names.push("blackbox".into());
        }
    }
    if args.beta.is_some() && !names.iter().any(|s| s == "ht") {
        names.push("ht".into());
    }
    if args.lambda.is_some() && !names.iter().any(|s| s == "static") {
        names.push("static".into());
    }

    let mut out = std::io::stdout().lock();
    writeln!(out, "n = {n}, D = {d}; constant-free values (natural logs, logs floored at 1)")?;
    writeln!(out, "{:<28} {:<26} {:>14}", "policy", "formula", "value")?;
    for name in &names {
        let (label, target) = predict_target(name, n, d, args)?;
        let p = predicted_runtime(target, n, d).with_context(|| format!("no prediction for {label}"))?;
        let label = if name == "ht:2:sqrt-n" && args.algo.is_empty() {
            format!("{label} (recommended)")
        } else if let Target::Static { lambda } = target {
            format!("{label} (λ={})", format_real(lambda))
        } else {
            label
        };
        writeln!(out, "{:<28} {:<26} {:>14}", label, p.expression.formula(), format_real(p.value))?;
    }
    Ok(())
}

fn cmd_fit(args: &FitArgs) -> Result<()> {
    let table = load_table(&args.csv)?;
    let rows: Vec<AggregateStats> = table
        .rows
        .into_iter()
        .filter(|r| args.algo.is_empty() || args.algo.contains(&r.algorithm))
        .filter(|r| args.n.is_empty() || args.n.contains(&r.n))
        .collect();
    let (fits, warnings) = fit_table(&rows, &args.x, &args.y)?;
    for w in warnings {
        eprintln!("warning: {w}");
    }
    println!("{:<16} {:>6} {:>10} {:>10} {:>8}", "algorithm", "points", "exponent", "intercept", "r²");
    for f in fits {
        println!(
            "{:<16} {:>6} {:>10.4} {:>10.4} {:>8.4}",
            f.algorithm, f.points, f.fit.exponent, f.fit.intercept, f.fit.r_squared
        );
    }
    Ok(())
}

fn cmd_blackbox(args: &BlackboxArgs) -> Result<()> {
    let n = args.n.ok_or_else(|| usage("missing --n"))?;
    let d = args.d.ok_or_else(|| usage("missing --d"))?;
    let runs = args.runs.ok_or_else(|| usage("missing --runs"))?;
    if runs == 0 {
        return Err(usage("--runs must be positive"));
    }
    let domain = match args.domain {
        DomainArg::Cube => QueryDomain::Cube,
        DomainArg::Sphere => QueryDomain::Sphere,
    };
    let mut queries = Vec::with_capacity(runs as usize);
    for t in 0..runs {
        let mut rng = rng_from_seed(derive_seed(args.seed, 0, t));
        let z = init_exact_distance(n, d, &mut rng)?;
        let out = random_guessing_solve(&OmZInstance::new(z.clone()), &BitString::ones(n), d, domain, &mut rng)?;
        if out.found != z {
            anyhow::bail!("run {t} returned a wrong optimum");
        }
        queries.push(out.queries as f64);
    }
    let mean = queries.iter().sum::<f64>() / runs as f64;
    let std = if runs > 1 {
        (queries.iter().map(|q| (q - mean) * (q - mean)).sum::<f64>() / (runs - 1) as f64).sqrt()
    } else {
        0.0
    };
    println!("n = {n}, D = {d}, runs = {runs}, all optimal");
    println!("mean queries {}  std {}", format_real(mean), format_real(std));
    match predicted_runtime(Target::<f64>::BlackBox, n, d) {
        Ok(p) => println!("lower bound {} = {}", p.expression.formula(), format_real(p.value)),
        Err(e) => println!("lower bound not defined here: {e}"),
    }
    if args.compare && d > 0 {
        let cfg = ExperimentConfig::new(vec!["sa".into()], vec![n], DMode::Exact, vec![d], runs as usize, args.seed);
        let stats = fixedstart::harness::run_experiment(&cfg)?;
        println!("self-adjusting GA mean T_F {}", format_real(stats[0].mean_evals));
    }
    Ok(())
}

fn cmd_selftest(args: &SelftestArgs) -> Result<bool> {
    let report = run_selftest(SelftestOptions {
        seed: args.seed,
        normalizer_scale: args.normalizer_scale,
    });
    println!("{report}");
    Ok(report.passed())
}

fn dispatch(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Run(a) => cmd_run(a, false).map(|_| true),
        Command::Sweep(a) => cmd_run(a, true).map(|_| true),
        Command::Predict(a) => cmd_predict(a).map(|_| true),
        Command::Fit(a) => cmd_fit(a).map(|_| true),
        Command::Blackbox(a) => cmd_blackbox(a).map(|_| true),
        Command::Selftest(a) => cmd_selftest(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match dispatch(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if is_usage(&e) => {
            eprintln!("error: {e:#}");
            let name = match &cli.command {
                Command::Run(_) => "run",
                Command::Sweep(_) => "sweep",
                Command::Predict(_) => "predict",
                Command::Fit(_) => "fit",
                Command::Blackbox(_) => "blackbox",
                Command::Selftest(_) => "selftest",
            };
            let mut cmd = Cli::command();
            cmd.build();
            if let Some(sub) = cmd.find_subcommand_mut(name) {
                eprintln!("\n{}", sub.render_usage());
            }
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
