//! Command-line front end: configuration files in, CSV trajectories and JSON reports out.
//!
//! Exit status is 0 on success, 2 when a solver did not converge (the report is still
//! written) and 1 for usage, validation and I/O errors.

pub mod config;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::expr::{self, EvalEnv, Expr, Var};
use crate::grid::{fmt17, Grid, GridFunction, WeightFunction};
use crate::ibp::{ibp_residual, IbpForm};
use crate::ml::mittag_leffler2;
use crate::ocp::{solve as solve_control, ControlProblem, SolverConfig, SweepResult, Terminal};
use crate::ops::{FracOperator, Kind, Side};
use crate::params::{Normalization, OperatorParams};
use crate::variational::{apply_preset, el_residual, interior_sup, solve_variational, Preset, VariationalProblem};
pub use config::Config;

#[derive(Debug, Parser)]
#[command(name = "wgfrac", version, about = "Weighted fractional operators with Mittag-Leffler kernels, optimal control and variational solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate the two-parameter Mittag-Leffler function (keys ml.beta, ml.gamma, ml.z).
    Ml(Common),
    /// Apply a derivative or integral to a sampled function.
    Op(Common),
    /// Both sides of an integration-by-parts identity.
    Ibp(Common),
    /// Solve an optimal control problem, or a variational problem with --variational.
    Solve(SolveArgs),
    /// Euler-Lagrange residual of a trajectory read from CSV.
    El(Common),
    /// List the named parameter presets.
    Presets(Common),
}

#[derive(Debug, Args)]
struct Common {
    /// Configuration file (`section.key = value` lines).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Override a configuration key; repeatable, applied after the file.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
    /// Write the sampled result as CSV (op, solve, el).
    #[arg(long, value_name = "PATH")]
    out_csv: Option<PathBuf>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out_json: Option<PathBuf>,
    /// Repeat on K successively doubled grids and report empirical orders.
    #[arg(long, value_name = "K", default_value_t = 0)]
    refine: u32,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[command(flatten)]
    common: Common,
    /// Treat problem.L as a Lagrangian in t, x, v with both endpoints fixed.
    #[arg(long)]
    variational: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Ml,
    Op,
    Ibp,
    Solve,
    Variational,
    El,
    Presets,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Ml => "ml",
            Mode::Op => "op",
            Mode::Ibp => "ibp",
            Mode::Solve | Mode::Variational => "solve",
            Mode::El => "el",
            Mode::Presets => "presets",
        }
    }

    fn allowed(self, key: &str) -> bool {
        const OPERATOR: &[&str] = &[
            "operator.alpha",
            "operator.beta",
            "operator.normalization",
            "operator.preset",
            "weight.kind",
            "weight.c",
            "weight.k",
        ];
        const GRID: &[&str] = &["grid.a", "grid.b", "grid.n"];
        const SOLVER: &[&str] = &[
            "solver.max_sweeps",
            "solver.tol_stationarity",
            "solver.tol_state",
            "solver.relaxation",
            "solver.step0",
            "solver.shooting_tol",
            "solver.shooting_max_iters",
        ];
        let own: &[&str] = match self {
            Mode::Ml => &["ml.beta", "ml.gamma", "ml.z"],
            Mode::Op => &["op.side", "op.kind", "op.f", "op.input"],
            Mode::Ibp => &["ibp.f", "ibp.g", "ibp.form"],
            Mode::Solve => &["problem.L", "problem.f", "problem.x_a", "problem.x_b", "terminal.mode"],
            Mode::Variational => &["problem.L", "problem.x_a", "problem.x_b", "terminal.mode"],
            Mode::El => &["problem.L", "el.input"],
            Mode::Presets => &[],
        };
        let uses_operator = !matches!(self, Mode::Ml | Mode::Presets);
        let uses_grid = matches!(self, Mode::Op | Mode::Ibp | Mode::Solve | Mode::Variational);
        let uses_solver = matches!(self, Mode::Solve | Mode::Variational);
        key == "mode"
            || own.contains(&key)
            || uses_operator && OPERATOR.contains(&key)
            || uses_grid && (GRID.contains(&key) || key == "op.input" && self == Mode::Op)
            || uses_solver && SOLVER.contains(&key)
    }
}

/// What a mode produced, before it is written out.
struct Outcome {
    result: Value,
    csv: Option<String>,
    text: String,
    converged: bool,
    refinement: Option<Value>,
}

/// Parse arguments and run; returns the process exit status.
pub fn main_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let (mode, common) = match &cli.command {
        Command::Ml(c) => (Mode::Ml, c),
        Command::Op(c) => (Mode::Op, c),
        Command::Ibp(c) => (Mode::Ibp, c),
        Command::Solve(s) => (if s.variational { Mode::Variational } else { Mode::Solve }, &s.common),
        Command::El(c) => (Mode::El, c),
        Command::Presets(c) => (Mode::Presets, c),
    };
    match run(mode, common) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("wgfrac: {e}");
            1
        }
    }
}

fn run(mode: Mode, common: &Common) -> Result<i32> {
    let mut cfg = match &common.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("cannot read config {}: {e}", path.display())))?;
            Config::parse(&text)?
        }
        None => Config::default(),
    };
    for s in &common.set {
        cfg.set(s)?;
    }
    if let Some(m) = cfg.get("mode") {
        if m != mode.name() {
            return Err(Error::Usage(format!("config is for mode `{m}` but the `{}` subcommand was given", mode.name())));
        }
    }
    for key in cfg.entries().keys() {
        if !mode.allowed(key) {
            return Err(Error::Usage(format!("key `{key}` is not used by `{}`", mode.name())));
        }
    }
    if common.refine > 0 && matches!(mode, Mode::Ml | Mode::El | Mode::Presets) {
        return Err(Error::Usage(format!("--refine does not apply to `{}`", mode.name())));
    }
    let base = common.config.as_deref().and_then(Path::parent).map(Path::to_path_buf).unwrap_or_default();

    let outcome = match mode {
        Mode::Ml => run_ml(&cfg)?,
        Mode::Presets => run_presets(),
        Mode::Op => run_op(&mut cfg, &base, common.refine)?,
        Mode::Ibp => run_ibp(&mut cfg, common.refine)?,
        Mode::Solve | Mode::Variational => run_solve(&mut cfg, mode == Mode::Variational, common.refine)?,
        Mode::El => run_el(&mut cfg, &base)?,
    };

    if let Some(path) = &common.out_csv {
        let csv = outcome
            .csv
            .as_ref()
            .ok_or_else(|| Error::Usage(format!("`{}` produces no CSV output", mode.name())))?;
        write_atomic(path, csv.as_bytes())?;
    }
    let mut report = Map::new();
    report.insert("version".into(), json!(crate::VERSION));
    report.insert("mode".into(), json!(mode.name()));
    report.insert("config".into(), json!(cfg.entries()));
    report.insert("result".into(), outcome.result);
    if let Some(r) = outcome.refinement {
        report.insert("refinement".into(), r);
    }
    let mut json_text = serde_json::to_string_pretty(&Value::Object(report)).expect("report serializes");
    json_text.push('\n');
    match &common.out_json {
        Some(path) => write_atomic(path, json_text.as_bytes())?,
        None if mode != Mode::Ml && mode != Mode::Presets && common.out_csv.is_none() => print!("{json_text}"),
        None => {}
    }
    print!("{}", outcome.text);
    Ok(if outcome.converged { 0 } else { 2 })
}

/// Write through a temporary file in the target directory, then rename over the target.
/// Existing non-regular targets (devices, pipes) are written in place instead.
fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let wrap = |e: std::io::Error| Error::Io(format!("cannot write {}: {e}", path.display()));
    if std::fs::metadata(path).is_ok_and(|m| !m.is_file()) {
        return std::fs::OpenOptions::new().write(true).open(path).and_then(|mut f| f.write_all(bytes)).map_err(wrap);
    }
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(wrap)?;
    tmp.write_all(bytes).map_err(wrap)?;
    tmp.persist(path).map_err(|e| wrap(e.error))?;
    Ok(())
}

/// `%.{digits}g`-style formatting.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mant, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let trim = |s: String| {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    };
    if exp < -5 || exp >= digits as i32 {
        format!("{}e{exp}", trim(mant.to_string()))
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim(format!("{:.*}", decimals, x))
    }
}

fn run_ml(cfg: &Config) -> Result<Outcome> {
    let beta = cfg.f64("ml.beta")?;
    let gamma = cfg.f64_or("ml.gamma", 1.0)?;
    let z = cfg.f64("ml.z")?;
    let value = mittag_leffler2(beta, gamma, z)?;
    Ok(Outcome {
        result: json!({ "beta": beta, "gamma": gamma, "z": z, "value": value }),
        csv: None,
        text: format!("{}\n", fmt_sig(value, 12)),
        converged: true,
        refinement: None,
    })
}

fn run_presets() -> Outcome {
    let mut text = format!("{:<18} {}\n", "preset", "binding");
    let mut rows = Vec::new();
    for p in Preset::ALL {
        text.push_str(&format!("{:<18} {}\n", p.name(), p.describe()));
        rows.push(json!({ "name": p.name(), "binding": p.describe() }));
    }
    Outcome { result: Value::Array(rows), csv: None, text, converged: true, refinement: None }
}

/// Resolve operator.* and weight.* (expanding a preset) and rewrite them in canonical form,
/// so equivalent configurations echo identically.
fn resolve_operator(cfg: &mut Config) -> Result<(OperatorParams, WeightFunction)> {
    let alpha = cfg.f64("operator.alpha")?;
    let normalization = match cfg.get("operator.normalization") {
        None => Normalization::Unit,
        Some(s) => Normalization::parse(s).ok_or_else(|| Error::BadValue {
            key: "operator.normalization".into(),
            msg: format!("expected `unit` or `ab`, got `{s}`"),
        })?,
    };
    let weight = parse_weight(cfg)?;
    let (params, weight) = match cfg.get("operator.preset") {
        None => {
            let beta = cfg.f64("operator.beta")?;
            let params = OperatorParams::new(alpha, beta, normalization)?;
            (params, weight.unwrap_or_else(WeightFunction::unit))
        }
        Some(name) => {
            let preset = Preset::parse(name).ok_or_else(|| Error::BadValue {
                key: "operator.preset".into(),
                msg: format!("unknown preset `{name}`; see `wgfrac presets`"),
            })?;
            let (params, bound) = apply_preset(preset, alpha, normalization, weight.unwrap_or_else(WeightFunction::unit))?;
            if let Some(beta) = cfg.get("operator.beta") {
                if beta.parse::<f64>().ok() != Some(params.beta()) {
                    return Err(Error::BadValue {
                        key: "operator.beta".into(),
                        msg: format!("preset {preset} binds beta = {}", params.beta()),
                    });
                }
            }
            if preset.binds_weight() && weight.is_some_and(|w| !w.is_unit()) {
                return Err(Error::BadValue { key: "weight.kind".into(), msg: format!("preset {preset} binds w = 1") });
            }
            (params, bound)
        }
    };
    for key in ["operator.preset", "operator.beta", "weight.kind", "weight.c", "weight.k"] {
        cfg.remove(key);
    }
    cfg.insert("operator.alpha", format!("{}", params.alpha()));
    cfg.insert("operator.beta", format!("{}", params.beta()));
    cfg.insert("operator.normalization", params.normalization().name().to_string());
    match weight {
        WeightFunction::Constant { c: 1.0 } => cfg.insert("weight.kind", "unit".into()),
        WeightFunction::Constant { c } => {
            cfg.insert("weight.kind", "const".into());
            cfg.insert("weight.c", format!("{c}"));
        }
        WeightFunction::Exponential { k } => {
            cfg.insert("weight.kind", "exp".into());
            cfg.insert("weight.k", format!("{k}"));
        }
        WeightFunction::Power { k } => {
            cfg.insert("weight.kind", "power".into());
            cfg.insert("weight.k", format!("{k}"));
        }
    }
    Ok((params, weight))
}

fn parse_weight(cfg: &Config) -> Result<Option<WeightFunction>> {
    let Some(kind) = cfg.get("weight.kind") else {
        return Ok(None);
    };
    let w = match kind {
        "unit" => WeightFunction::unit(),
        "const" => WeightFunction::constant(cfg.f64("weight.c")?)?,
        "exp" => WeightFunction::exponential(cfg.f64("weight.k")?)?,
        "power" => WeightFunction::power(cfg.f64("weight.k")?)?,
        other => {
            return Err(Error::BadValue {
                key: "weight.kind".into(),
                msg: format!("expected unit, const, exp or power, got `{other}`"),
            })
        }
    };
    Ok(Some(w))
}

fn parse_grid(cfg: &Config) -> Result<Grid> {
    Grid::new(cfg.f64("grid.a")?, cfg.f64("grid.b")?, cfg.usize("grid.n")?)
}

fn parse_expr(cfg: &Config, key: &str, vars: &[Var]) -> Result<Expr> {
    let e = expr::parse(cfg.string(key)?).map_err(|e| Error::BadValue { key: key.into(), msg: e.to_string() })?;
    if let Some(v) = e.variables().into_iter().find(|v| !vars.contains(v)) {
        let names: Vec<&str> = vars.iter().map(|v| v.name()).collect();
        return Err(Error::BadValue {
            key: key.into(),
            msg: format!("uses `{}`; allowed variables: {}", v.name(), names.join(", ")),
        });
    }
    Ok(e)
}

fn sample(e: &Expr, grid: Grid) -> Result<GridFunction> {
    let values = grid.nodes().into_iter().map(|t| e.eval(&EvalEnv::new(t, 0.0, 0.0, 0.0))).collect::<Result<Vec<_>>>()?;
    GridFunction::new(grid, values)
}

fn read_csv(base: &Path, cfg: &Config, key: &str, column: &str) -> Result<GridFunction> {
    let path = base.join(cfg.string(key)?);
    let text =
        std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
    GridFunction::from_csv(&text, Some(column))
}

/// Sup difference between successive refinements on the coarse nodes, with observed orders.
fn refinement_table(levels: &[(usize, Vec<f64>)], extra: &[Value]) -> Value {
    let mut diffs = Vec::new();
    for pair in levels.windows(2) {
        let (coarse, fine) = (&pair[0].1, &pair[1].1);
        let d = (0..coarse.len()).map(|i| (coarse[i] - fine[2 * i]).abs()).fold(0.0f64, f64::max);
        diffs.push(d);
    }
    let rows: Vec<Value> = levels
        .iter()
        .enumerate()
        .map(|(k, (n, _))| {
            let diff = diffs.get(k).copied();
            let order = match (diffs.get(k), diffs.get(k + 1)) {
                (Some(a), Some(b)) if *b > 0.0 => Some((a / b).log2()),
                _ => None,
            };
            let mut row = json!({ "n": n, "diff_to_next": diff, "order": order });
            if let (Some(Value::Object(m)), Value::Object(r)) = (extra.get(k), &mut row) {
                r.extend(m.clone());
            }
            row
        })
        .collect();
    Value::Array(rows)
}

fn grids(base: Grid, refine: u32) -> Vec<Grid> {
    let mut out = vec![base];
    for _ in 0..refine {
        let next = out.last().expect("nonempty").refined();
        out.push(next);
    }
    out
}

fn run_op(cfg: &mut Config, base: &Path, refine: u32) -> Result<Outcome> {
    let (params, w) = resolve_operator(cfg)?;
    let side = match cfg.string("op.side")? {
        "left" => Side::Left,
        "right" => Side::Right,
        s => return Err(Error::BadValue { key: "op.side".into(), msg: format!("expected left or right, got `{s}`") }),
    };
    let kind = match cfg.string("op.kind")? {
        "derivative" => Kind::Derivative,
        "integral" => Kind::Integral,
        s => {
            return Err(Error::BadValue {
                key: "op.kind".into(),
                msg: format!("expected derivative or integral, got `{s}`"),
            })
        }
    };
    let inputs: Vec<GridFunction> = match (cfg.has("op.f"), cfg.has("op.input")) {
        (true, false) => {
            let f = parse_expr(cfg, "op.f", &[Var::T])?;
            grids(parse_grid(cfg)?, refine).into_iter().map(|g| sample(&f, g)).collect::<Result<_>>()?
        }
        (false, true) => {
            if refine > 0 {
                return Err(Error::Usage("--refine needs op.f, not a CSV input".into()));
            }
            vec![read_csv(base, cfg, "op.input", "value")?]
        }
        (false, false) => return Err(Error::MissingKey("op.f".into())),
        (true, true) => return Err(Error::Usage("give either op.f or op.input, not both".into())),
    };
    let mut levels = Vec::new();
    for f in &inputs {
        let op = FracOperator::new(&params, &w, f.grid(), side, kind)?;
        levels.push((f.grid().n(), op.apply(f.values())));
    }
    let out = GridFunction::new(*inputs[0].grid(), levels[0].1.clone())?;
    let result = json!({ "n": out.grid().n(), "sup_norm": out.sup_norm() });
    Ok(Outcome {
        result,
        csv: Some(out.to_csv()),
        text: String::new(),
        converged: true,
        refinement: (refine > 0).then(|| refinement_table(&levels, &[])),
    })
}

fn run_ibp(cfg: &mut Config, refine: u32) -> Result<Outcome> {
    let (params, w) = resolve_operator(cfg)?;
    let f = parse_expr(cfg, "ibp.f", &[Var::T])?;
    let g = parse_expr(cfg, "ibp.g", &[Var::T])?;
    let form_name = cfg.get("ibp.form").unwrap_or("right");
    let form = IbpForm::parse(form_name).ok_or_else(|| Error::BadValue {
        key: "ibp.form".into(),
        msg: format!("expected right or left, got `{form_name}`"),
    })?;
    let mut reports = Vec::new();
    for grid in grids(parse_grid(cfg)?, refine) {
        reports.push(ibp_residual(&params, &w, &sample(&f, grid)?, &sample(&g, grid)?, form)?);
    }
    let mut result = serde_json::to_value(reports[0]).expect("report serializes");
    result["form"] = json!(form.name());
    let refinement = (refine > 0).then(|| {
        let rows: Vec<Value> = reports
            .iter()
            .enumerate()
            .map(|(k, r)| {
                let order = reports.get(k + 1).filter(|n| n.abs_residual > 0.0).map(|n| (r.abs_residual / n.abs_residual).log2());
                json!({ "n": r.grid_n, "abs_residual": r.abs_residual, "rel_residual": r.rel_residual, "order": order })
            })
            .collect();
        Value::Array(rows)
    });
    Ok(Outcome { result, csv: None, text: String::new(), converged: true, refinement })
}

fn solver_config(cfg: &Config) -> Result<SolverConfig> {
    let d = SolverConfig::default();
    let s = SolverConfig {
        max_sweeps: cfg.usize_or("solver.max_sweeps", d.max_sweeps)?,
        tol_stationarity: cfg.f64_or("solver.tol_stationarity", d.tol_stationarity)?,
        tol_state: cfg.f64_or("solver.tol_state", d.tol_state)?,
        relaxation: cfg.f64_or("solver.relaxation", d.relaxation)?,
        step0: cfg.f64_or("solver.step0", d.step0)?,
        shooting_tol: cfg.f64_or("solver.shooting_tol", d.shooting_tol)?,
        shooting_max_iters: cfg.usize_or("solver.shooting_max_iters", d.shooting_max_iters)?,
    };
    s.validate()?;
    Ok(s)
}

#[derive(Serialize)]
struct RefineRow {
    cost: Option<f64>,
    converged: bool,
    stationarity_norm: Option<f64>,
}

/// Binds a grid to a ready-to-run sweep.
type SolveBuilder = Box<dyn Fn(Grid) -> Result<Box<dyn Fn() -> Result<SweepResult>>>>;

fn run_solve(cfg: &mut Config, variational: bool, refine: u32) -> Result<Outcome> {
    let (params, w) = resolve_operator(cfg)?;
    let grid = parse_grid(cfg)?;
    let solver = solver_config(cfg)?;
    let x_a = cfg.f64("problem.x_a")?;
    let build: SolveBuilder = if variational {
        if let Some(m) = cfg.get("terminal.mode").filter(|m| *m != "fixed") {
            return Err(Error::BadValue {
                key: "terminal.mode".into(),
                msg: format!("variational problems fix both endpoints; got `{m}`"),
            });
        }
        let l = parse_expr(cfg, "problem.L", &[Var::T, Var::X, Var::V])?;
        let x_b = cfg.f64("problem.x_b")?;
        Box::new(move |g| {
            let vp = VariationalProblem::new(l.clone(), params, w, g, x_a, x_b, solver)?;
            Ok(Box::new(move || solve_variational(&vp)))
        })
    } else {
        let l = parse_expr(cfg, "problem.L", &[Var::T, Var::X, Var::U])?;
        let f = parse_expr(cfg, "problem.f", &[Var::T, Var::X, Var::U])?;
        let terminal = match cfg.get("terminal.mode").unwrap_or("free") {
            "free" => Terminal::Free,
            "fixed" => Terminal::Fixed(cfg.f64("problem.x_b")?),
            m => {
                return Err(Error::BadValue {
                    key: "terminal.mode".into(),
                    msg: format!("expected free or fixed, got `{m}`"),
                })
            }
        };
        if terminal == Terminal::Free && cfg.has("problem.x_b") {
            return Err(Error::Usage("problem.x_b is only used with terminal.mode = fixed".into()));
        }
        Box::new(move |g| {
            let p = ControlProblem::new(l.clone(), f.clone(), params, w, g, x_a, terminal, solver)?;
            Ok(Box::new(move || solve_control(&p)))
        })
    };

    let mut attempts = Vec::new();
    for g in grids(grid, refine) {
        attempts.push(match build(g)?() {
            Ok(r) => Ok(r),
            Err(Error::NonConvergence { what, history }) => Err((what, history)),
            Err(e) => return Err(e),
        });
    }
    let converged = attempts.iter().all(|a| matches!(a, Ok(r) if r.converged));
    let (result, csv, text) = match &attempts[0] {
        Ok(r) => {
            let mut csv = String::from("t,x,lambda,u,dH_du\n");
            for (i, t) in grid.nodes().iter().enumerate() {
                let row = [*t, r.x.values()[i], r.lambda.values()[i], r.u.values()[i], r.dh_du[i]];
                csv.push_str(&row.map(fmt17).join(","));
                csv.push('\n');
            }
            let text = format!(
                "converged: {}\nsweeps: {}\ncost: {}\nstationarity: {:e}\n",
                r.converged, r.sweeps_used, fmt17(r.cost), r.stationarity_norm
            );
            (serde_json::to_value(r).expect("result serializes"), Some(csv), text)
        }
        Err((what, history)) => (
            json!({ "converged": false, "error": format!("{what} did not converge"), "history": history }),
            None,
            format!("{what} did not converge\n"),
        ),
    };
    let refinement = (refine > 0).then(|| {
        let levels: Vec<(usize, Vec<f64>)> = attempts
            .iter()
            .zip(grids(grid, refine))
            .map(|(a, g)| (g.n(), a.as_ref().map(|r| r.x.values().to_vec()).unwrap_or_default()))
            .collect();
        let extra: Vec<Value> = attempts
            .iter()
            .map(|a| {
                let row = match a {
                    Ok(r) => RefineRow { cost: Some(r.cost), converged: r.converged, stationarity_norm: Some(r.stationarity_norm) },
                    Err(_) => RefineRow { cost: None, converged: false, stationarity_norm: None },
                };
                serde_json::to_value(row).expect("row serializes")
            })
            .collect();
        if levels.iter().all(|(_, v)| !v.is_empty()) {
            refinement_table(&levels, &extra)
        } else {
            Value::Array(extra)
        }
    });
    Ok(Outcome { result, csv, text, converged, refinement })
}

fn run_el(cfg: &mut Config, base: &Path) -> Result<Outcome> {
    let (params, w) = resolve_operator(cfg)?;
    let l = parse_expr(cfg, "problem.L", &[Var::T, Var::X, Var::V])?;
    let x = read_csv(base, cfg, "el.input", "x")?;
    let grid = *x.grid();
    // boundary values and solver settings play no part in the residual
    let vp = VariationalProblem::new(l, params, w, grid, x.values()[0], x.values()[grid.n() - 1], SolverConfig::default())?;
    let r = el_residual(&vp, &x)?;
    let mut csv = String::from("t,residual\n");
    for (t, v) in grid.nodes().iter().zip(r.values()) {
        csv.push_str(&format!("{},{}\n", fmt17(*t), fmt17(*v)));
    }
    let interior = interior_sup(&r);
    Ok(Outcome {
        result: json!({ "n": grid.n(), "interior_sup": interior, "sup": r.sup_norm() }),
        csv: Some(csv),
        text: format!("interior residual: {interior:e}\n"),
        converged: true,
        refinement: None,
    })
}
