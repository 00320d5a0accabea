//! Indirect solver for
//!
//! ```text
//! minimize   J[x, u] = ∫_a^b L(t, x, u) dt
//! subject to D_left x (t) = f(t, x, u),   x(a) = x_a,   x(b) = x_b or free
//! ```
//!
//! through the necessary conditions with H = L + λ f:
//! the state equation, the costate equation w² D_right(λ / w²) = ∂H/∂x, and ∂H/∂u = 0.
//!
//! The conjugated right derivative w² D_right[w](· / w²) is exactly the right derivative
//! built with weight 1/w, which is how the costate operator is assembled.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr::{eval_with_partials, EvalEnv, Expr, Var};
use crate::grid::{Grid, GridFunction, WeightFunction};
use crate::ops::{FracOperator, KernelTable, Side};
use crate::params::OperatorParams;

const MAX_HALVINGS: usize = 30;
const NEWTON_MAX: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Terminal {
    Free,
    Fixed(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SolverConfig {
    pub max_sweeps: usize,
    /// Target for sup |∂H/∂u|.
    pub tol_stationarity: f64,
    /// Bound on the discrete state and costate equation residuals.
    pub tol_state: f64,
    /// Damping ω on control updates.
    pub relaxation: f64,
    /// First trial step of each backtracking search.
    pub step0: f64,
    pub shooting_tol: f64,
    pub shooting_max_iters: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            max_sweeps: 500,
            tol_stationarity: 1e-6,
            tol_state: 1e-8,
            relaxation: 1.0,
            step0: 0.5,
            shooting_tol: 1e-8,
            shooting_max_iters: 30,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("tol_stationarity", self.tol_stationarity),
            ("tol_state", self.tol_state),
            ("step0", self.step0),
            ("shooting_tol", self.shooting_tol),
        ];
        for (name, v) in positive {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Problem(format!("solver.{name} must be positive, got {v}")));
            }
        }
        if !(self.relaxation > 0.0 && self.relaxation <= 1.0) {
            return Err(Error::Problem(format!("solver.relaxation must lie in (0, 1], got {}", self.relaxation)));
        }
        if self.max_sweeps == 0 || self.shooting_max_iters == 0 {
            return Err(Error::Problem("iteration limits must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct ControlProblem {
    pub running_cost: Expr,
    pub dynamics: Expr,
    pub params: OperatorParams,
    pub weight: WeightFunction,
    pub grid: Grid,
    pub x_a: f64,
    pub terminal: Terminal,
    pub solver: SolverConfig,
}

impl ControlProblem {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        running_cost: Expr,
        dynamics: Expr,
        params: OperatorParams,
        weight: WeightFunction,
        grid: Grid,
        x_a: f64,
        terminal: Terminal,
        solver: SolverConfig,
    ) -> Result<Self> {
        for (name, e) in [("L", &running_cost), ("f", &dynamics)] {
            if e.variables().contains(&Var::V) {
                return Err(Error::Problem(format!("{name} may only use t, x, u; found v")));
            }
            if e.uses_abs() {
                return Err(Error::Problem(format!("{name} uses abs, which is not differentiable")));
            }
        }
        weight.check_on(&grid)?;
        solver.validate()?;
        if !x_a.is_finite() {
            return Err(Error::Problem(format!("x_a must be finite, got {x_a}")));
        }
        if let Terminal::Fixed(xb) = terminal {
            if !xb.is_finite() {
                return Err(Error::Problem(format!("x_b must be finite, got {xb}")));
            }
        }
        Ok(Self { running_cost, dynamics, params, weight, grid, x_a, terminal, solver })
    }

    fn require_dynamics(&self) -> Result<()> {
        if self.params.alpha() == 0.0 {
            return Err(Error::Problem(
                "alpha = 0 turns the state equation into the algebraic relation x = f(t, x, u); \
                 optimal control needs alpha > 0"
                    .into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepResult {
    #[serde(skip)]
    pub x: GridFunction,
    #[serde(skip)]
    pub lambda: GridFunction,
    #[serde(skip)]
    pub u: GridFunction,
    /// ∂H/∂u at the returned triple.
    #[serde(skip)]
    pub dh_du: Vec<f64>,
    pub converged: bool,
    pub sweeps_used: usize,
    pub stationarity_norm: f64,
    pub state_residual: f64,
    pub adjoint_residual: f64,
    pub compat_initial: f64,
    pub compat_terminal: f64,
    pub cost: f64,
    /// Terminal costate λ(b) used for the final sweep.
    pub lambda_b: f64,
    /// J after the initial guess and after every accepted update. Non-increasing while
    /// the sweep backtracks on J; see `sweep`.
    pub cost_history: Vec<f64>,
    pub stationarity_history: Vec<f64>,
    /// x(b) - x_b per shooting iterate; empty for a free terminal state.
    pub shooting_history: Vec<f64>,
}

/// H = L + λ f and its partials in x and u.
pub fn hamiltonian(problem: &ControlProblem, t: f64, x: f64, lambda: f64, u: f64) -> Result<(f64, f64, f64)> {
    let env = EvalEnv::new(t, x, u, 0.0);
    let l = eval_with_partials(&problem.running_cost, &env)?;
    let f = eval_with_partials(&problem.dynamics, &env)?;
    Ok((l.value + lambda * f.value, l.d_dx + lambda * f.d_dx, l.d_du + lambda * f.d_du))
}

/// Operators and node data shared by every solve on one problem.
struct Discretization<'a> {
    problem: &'a ControlProblem,
    state_op: FracOperator,
    costate_op: FracOperator,
    nodes: Vec<f64>,
}

impl<'a> Discretization<'a> {
    fn new(problem: &'a ControlProblem) -> Result<Self> {
        let grid = &problem.grid;
        let table = KernelTable::new(&problem.params, grid)?;
        let w = problem.weight.samples(grid);
        let inv_w: Vec<f64> = w.iter().map(|w| 1.0 / w).collect();
        let state_op = FracOperator::derivative_from(&problem.params, grid, &table, w, Side::Left);
        let costate_op = FracOperator::derivative_from(&problem.params, grid, &table, inv_w, Side::Right);
        Ok(Self { problem, state_op, costate_op, nodes: grid.nodes() })
    }

    fn n(&self) -> usize {
        self.nodes.len()
    }

    fn check_grid(&self, f: &GridFunction, what: &str) -> Result<()> {
        if f.grid() != &self.problem.grid {
            return Err(Error::Usage(format!("{what} is not sampled on the problem grid")));
        }
        Ok(())
    }

    fn dynamics(&self, i: usize, x: f64, u: f64) -> Result<(f64, f64)> {
        let p = eval_with_partials(&self.problem.dynamics, &EvalEnv::new(self.nodes[i], x, u, 0.0))?;
        Ok((p.value, p.d_dx))
    }

    /// March through the lower-triangular state system; row 0 carries x(a) = x_a.
    fn forward(&self, u: &[f64]) -> Result<(Vec<f64>, f64, f64)> {
        let n = self.n();
        let x_a = self.problem.x_a;
        let mut x = vec![0.0; n];
        x[0] = x_a;
        for i in 1..n {
            let hist = self.state_op.history(i, &x);
            let d = self.state_op.entry(i, i);
            x[i] = self.solve_node(i, d, hist, x[i - 1], u[i])?;
        }
        let mut res = 0.0f64;
        for i in 1..n {
            let ax = self.state_op.history(i, &x) + self.state_op.entry(i, i) * x[i];
            res = res.max((ax - self.dynamics(i, x[i], u[i])?.0).abs());
        }
        let f0 = self.dynamics(0, x_a, u[0])?.0;
        let compat = (f0 - x_a / self.problem.params.phi()).abs();
        Ok((x, res, compat))
    }

    /// Damped scalar Newton for d·x + hist = f(t_i, x, u_i).
    fn solve_node(&self, i: usize, d: f64, hist: f64, guess: f64, u: f64) -> Result<f64> {
        let mut x = guess;
        let (f, fx) = self.dynamics(i, x, u)?;
        let mut r = d * x + hist - f;
        let mut jac = d - fx;
        let mut history = vec![r.abs()];
        for _ in 0..NEWTON_MAX {
            if jac == 0.0 {
                return Err(Error::Singular { row: i });
            }
            let step = r / jac;
            let mut damp = 1.0;
            let mut moved = false;
            while damp >= 1.0 / 1024.0 {
                let cand = x - damp * step;
                if let Ok((fc, fxc)) = self.dynamics(i, cand, u) {
                    let rc = d * cand + hist - fc;
                    if rc.abs() <= r.abs() || damp == 1.0 && rc.abs() < 10.0 * r.abs() {
                        x = cand;
                        r = rc;
                        jac = d - fxc;
                        moved = true;
                        break;
                    }
                }
                damp *= 0.5;
            }
            history.push(r.abs());
            if !moved {
                break;
            }
            if (damp * step).abs() <= 1e-15 * (1.0 + x.abs()) || r == 0.0 {
                return Ok(x);
            }
        }
        if r.abs() <= 1e-13 * (1.0 + hist.abs() + (d * x).abs()) {
            return Ok(x);
        }
        Err(Error::NonConvergence { what: format!("state equation at node {i}"), history })
    }

    /// Back substitution for the costate; row n-1 carries λ(b) = lambda_b.
    fn adjoint(&self, x: &[f64], u: &[f64], lambda_b: f64) -> Result<(Vec<f64>, f64, f64)> {
        let n = self.n();
        let mut lam = vec![0.0; n];
        lam[n - 1] = lambda_b;
        let mut lx = vec![0.0; n];
        let mut fx = vec![0.0; n];
        for i in 0..n {
            let env = EvalEnv::new(self.nodes[i], x[i], u[i], 0.0);
            lx[i] = eval_with_partials(&self.problem.running_cost, &env)?.d_dx;
            fx[i] = eval_with_partials(&self.problem.dynamics, &env)?.d_dx;
        }
        for i in (0..n - 1).rev() {
            let hist = self.costate_op.history(i, &lam);
            let d = self.costate_op.entry(i, i) - fx[i];
            if d == 0.0 || !d.is_finite() {
                return Err(Error::Singular { row: i });
            }
            lam[i] = (lx[i] - hist) / d;
        }
        let mut res = 0.0f64;
        for i in 0..n - 1 {
            let al = self.costate_op.history(i, &lam) + self.costate_op.entry(i, i) * lam[i];
            res = res.max((al - (lx[i] + lam[i] * fx[i])).abs());
        }
        let compat = (lx[n - 1] + lambda_b * fx[n - 1] - lambda_b / self.problem.params.phi()).abs();
        Ok((lam, res, compat))
    }

    /// ∂H/∂u per node. At t = a the state is imposed, so no multiplier acts there and
    /// only ∂L/∂u remains.
    fn stationarity(&self, x: &[f64], lam: &[f64], u: &[f64]) -> Result<Vec<f64>> {
        let mut g = Vec::with_capacity(self.n());
        for i in 0..self.n() {
            let mult = if i == 0 { 0.0 } else { lam[i] };
            g.push(hamiltonian(self.problem, self.nodes[i], x[i], mult, u[i])?.2);
        }
        Ok(g)
    }

    fn cost(&self, x: &[f64], u: &[f64]) -> Result<f64> {
        let vals = (0..self.n())
            .map(|i| self.problem.running_cost.eval(&EvalEnv::new(self.nodes[i], x[i], u[i], 0.0)))
            .collect::<Result<Vec<f64>>>()?;
        Ok(self.problem.grid.integrate(&vals))
    }

    /// State, costate and stationarity for one control iterate.
    fn iterate(&self, u: Vec<f64>, lambda_b: f64) -> Result<Iterate> {
        let (x, state_res, compat_i) = self.forward(&u)?;
        let cost = self.cost(&x, &u)?;
        let (lam, adj_res, compat_t) = self.adjoint(&x, &u, lambda_b)?;
        let g = self.stationarity(&x, &lam, &u)?;
        let q = self.problem.grid.trapezoid_weights();
        let residual = g.iter().zip(&q).map(|(g, q)| q * g * g).sum();
        Ok(Iterate { u, x, lam, g, cost, residual, state_res, adj_res, compat_i, compat_t })
    }

    fn sweep_from(&self, lambda_b: f64, u0: Vec<f64>, tol_stationarity: f64) -> Result<SweepResult> {
        let cfg = &self.problem.solver;
        let mut it = self.iterate(u0, lambda_b)?;
        let mut cost_history = vec![it.cost];
        let mut stationarity_history = Vec::new();
        let mut sweeps_used = 0;
        // J is only a valid merit while λ(b) = 0; with a terminal multiplier, steps must
        // shrink the stationarity residual instead. A stalled J-backtrack ends the sweep:
        // the costate gradient is only O(h)-consistent with the discrete J, so going
        // further would mean accepting uphill steps.
        let merit = if lambda_b == 0.0 { Merit::Cost } else { Merit::Residual };
        loop {
            let norm = it.g.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            stationarity_history.push(norm);
            let certified =
                norm <= tol_stationarity && it.state_res <= cfg.tol_state && it.adj_res <= cfg.tol_state;
            let mut next = None;
            if !certified && sweeps_used < cfg.max_sweeps {
                next = self.descend(&it, lambda_b, merit);
            }
            let Some(accepted) = next else {
                let grid = self.problem.grid;
                return Ok(SweepResult {
                    x: GridFunction::from_parts(grid, it.x),
                    lambda: GridFunction::from_parts(grid, it.lam),
                    u: GridFunction::from_parts(grid, it.u),
                    dh_du: it.g,
                    converged: certified,
                    sweeps_used,
                    stationarity_norm: norm,
                    state_residual: it.state_res,
                    adjoint_residual: it.adj_res,
                    compat_initial: it.compat_i,
                    compat_terminal: it.compat_t,
                    cost: it.cost,
                    lambda_b,
                    cost_history,
                    stationarity_history,
                    shooting_history: Vec::new(),
                });
            };
            it = accepted;
            sweeps_used += 1;
            cost_history.push(it.cost);
        }
    }

    /// Backtracking on u ← u - ω s ∂H/∂u; None when 30 halvings do not lower the merit.
    fn descend(&self, it: &Iterate, lambda_b: f64, merit: Merit) -> Option<Iterate> {
        let cfg = &self.problem.solver;
        let mut s = cfg.step0;
        for _ in 0..=MAX_HALVINGS {
            let trial: Vec<f64> = it.u.iter().zip(&it.g).map(|(u, g)| u - cfg.relaxation * s * g).collect();
            s *= 0.5;
            let Ok(t) = self.iterate(trial, lambda_b) else { continue };
            let better = match merit {
                Merit::Cost => t.cost <= it.cost,
                Merit::Residual => t.residual < it.residual,
            };
            if better {
                return Some(t);
            }
        }
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Merit {
    Cost,
    Residual,
}

struct Iterate {
    u: Vec<f64>,
    x: Vec<f64>,
    lam: Vec<f64>,
    g: Vec<f64>,
    cost: f64,
    /// Σ q_i (∂H/∂u)_i²
    residual: f64,
    state_res: f64,
    adj_res: f64,
    compat_i: f64,
    compat_t: f64,
}

/// Solve the state equation for a given control.
/// Returns (x, state_residual, compat_initial).
pub fn forward_solve(problem: &ControlProblem, u: &GridFunction) -> Result<(GridFunction, f64, f64)> {
    let disc = Discretization::new(problem)?;
    disc.check_grid(u, "control")?;
    let (x, res, compat) = disc.forward(u.values())?;
    Ok((GridFunction::from_parts(problem.grid, x), res, compat))
}

/// Solve the costate equation with terminal value lambda_b.
/// Returns (λ, adjoint_residual).
pub fn adjoint_solve(
    problem: &ControlProblem,
    x: &GridFunction,
    u: &GridFunction,
    lambda_b: f64,
) -> Result<(GridFunction, f64)> {
    let disc = Discretization::new(problem)?;
    disc.check_grid(x, "state")?;
    disc.check_grid(u, "control")?;
    let (lam, res, _) = disc.adjoint(x.values(), u.values(), lambda_b)?;
    Ok((GridFunction::from_parts(problem.grid, lam), res))
}

/// Forward-backward sweep from u ≡ 0 with a given terminal costate.
///
/// Control updates backtrack on J while λ(b) = 0. For λ(b) ≠ 0, or after J-backtracking
/// stalls, they backtrack on Σ q (∂H/∂u)² instead: the costate from the continuous
/// right operator is an O(h) approximation of the discrete gradient of J, so J-descent
/// alone need not reach ∂H/∂u = 0.
pub fn sweep(problem: &ControlProblem, lambda_b: f64) -> Result<SweepResult> {
    problem.require_dynamics()?;
    let disc = Discretization::new(problem)?;
    disc.sweep_from(lambda_b, vec![0.0; problem.grid.n()], problem.solver.tol_stationarity)
}

/// Secant iteration on λ(b) until x(b) hits the fixed terminal state.
pub fn shoot_terminal(problem: &ControlProblem) -> Result<SweepResult> {
    problem.require_dynamics()?;
    let Terminal::Fixed(x_b) = problem.terminal else {
        return Err(Error::Problem("shooting needs a fixed terminal state".into()));
    };
    let cfg = &problem.solver;
    let disc = Discretization::new(problem)?;
    let n = problem.grid.n();
    // x(b) moves with u(b), so inner sweeps must resolve ∂H/∂u below the shooting tolerance
    let tol = cfg.tol_stationarity.min(cfg.shooting_tol);
    let mismatch = |r: &SweepResult| r.x.values()[n - 1] - x_b;

    let mut history = Vec::new();
    let finish = |mut r: SweepResult, history: Vec<f64>| {
        r.converged = r.converged && history.last().is_some_and(|m: &f64| m.abs() <= cfg.shooting_tol);
        r.shooting_history = history;
        r
    };

    let (mut c0, mut r0) = (0.0, disc.sweep_from(0.0, vec![0.0; n], tol)?);
    let mut m0 = mismatch(&r0);
    history.push(m0);
    if m0.abs() <= cfg.shooting_tol {
        return Ok(finish(r0, history));
    }
    let mut c1 = 1.0;
    let mut r1 = disc.sweep_from(c1, r0.u.values().to_vec(), tol)?;
    let mut m1 = mismatch(&r1);
    history.push(m1);
    for _ in 0..cfg.shooting_max_iters {
        if m1.abs() <= cfg.shooting_tol {
            return Ok(finish(r1, history));
        }
        if m1 == m0 || !m1.is_finite() {
            return Err(Error::NonConvergence { what: "terminal shooting stagnated".into(), history });
        }
        let c2 = c1 - m1 * (c1 - c0) / (m1 - m0);
        let r2 = disc.sweep_from(c2, r1.u.values().to_vec(), tol)?;
        (c0, m0, r0) = (c1, m1, r1);
        (c1, r1) = (c2, r2);
        m1 = mismatch(&r1);
        history.push(m1);
    }
    drop(r0);
    if m1.abs() <= cfg.shooting_tol {
        return Ok(finish(r1, history));
    }
    Err(Error::NonConvergence { what: "terminal shooting hit the iteration limit".into(), history })
}

/// Free terminal state: one sweep with λ(b) = 0; fixed: shooting.
pub fn solve(problem: &ControlProblem) -> Result<SweepResult> {
    match problem.terminal {
        Terminal::Free => sweep(problem, 0.0),
        Terminal::Fixed(_) => shoot_terminal(problem),
    }
}
