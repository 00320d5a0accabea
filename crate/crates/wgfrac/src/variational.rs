//! Fractional calculus of variations: minimize ∫ L(t, x, D_left x) dt with both
//! endpoints fixed. Solved by rewriting as the control problem u = D_left x, f = u.

use std::fmt;

use crate::error::{Error, Result};
use crate::expr::{eval_with_partials, EvalEnv, Expr, Var};
use crate::grid::{Grid, GridFunction, WeightFunction};
use crate::ocp::{shoot_terminal, ControlProblem, SolverConfig, SweepResult, Terminal};
use crate::ops::{FracOperator, KernelTable, Side};
use crate::params::{Normalization, OperatorParams};

#[derive(Debug, Clone)]
pub struct VariationalProblem {
    /// Lagrangian over t, x and v, where v stands for D_left x.
    pub lagrangian: Expr,
    pub params: OperatorParams,
    pub weight: WeightFunction,
    pub grid: Grid,
    pub x_a: f64,
    pub x_b: f64,
    pub solver: SolverConfig,
}

impl VariationalProblem {
    pub fn new(
        lagrangian: Expr,
        params: OperatorParams,
        weight: WeightFunction,
        grid: Grid,
        x_a: f64,
        x_b: f64,
        solver: SolverConfig,
    ) -> Result<Self> {
        if lagrangian.variables().contains(&Var::U) {
            return Err(Error::Problem("the Lagrangian may only use t, x, v; found u".into()));
        }
        weight.check_on(&grid)?;
        Ok(Self { lagrangian, params, weight, grid, x_a, x_b, solver })
    }

    /// The equivalent control problem: v becomes the control u and the dynamics are f = u.
    pub fn to_control(&self) -> Result<ControlProblem> {
        ControlProblem::new(
            self.lagrangian.rename(Var::V, Var::U),
            Expr::Var(Var::U),
            self.params,
            self.weight,
            self.grid,
            self.x_a,
            Terminal::Fixed(self.x_b),
            self.solver,
        )
    }
}

/// Special cases obtained by pinning β and/or the weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// w ≡ 1, β = 1: exponential kernel.
    CaputoFabrizio,
    /// w ≡ 1, β = α.
    AtanganaBaleanu,
    /// β = α, weight left to the caller.
    WeightedAb,
}

impl Preset {
    pub const ALL: [Preset; 3] = [Preset::CaputoFabrizio, Preset::AtanganaBaleanu, Preset::WeightedAb];

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "caputo-fabrizio" => Some(Preset::CaputoFabrizio),
            "atangana-baleanu" => Some(Preset::AtanganaBaleanu),
            "weighted-ab" => Some(Preset::WeightedAb),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Preset::CaputoFabrizio => "caputo-fabrizio",
            Preset::AtanganaBaleanu => "atangana-baleanu",
            Preset::WeightedAb => "weighted-ab",
        }
    }

    pub fn binds_weight(self) -> bool {
        !matches!(self, Preset::WeightedAb)
    }

    pub fn describe(self) -> &'static str {
        match self {
            Preset::CaputoFabrizio => "w = 1, beta = 1",
            Preset::AtanganaBaleanu => "w = 1, beta = alpha",
            Preset::WeightedAb => "beta = alpha, w as given",
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Bind β and the weight for a preset. `w` is returned unchanged for weighted-ab.
/// The β = α presets need α > 0 since β must be positive.
pub fn apply_preset(
    preset: Preset,
    alpha: f64,
    normalization: Normalization,
    w: WeightFunction,
) -> Result<(OperatorParams, WeightFunction)> {
    let beta = match preset {
        Preset::CaputoFabrizio => 1.0,
        Preset::AtanganaBaleanu | Preset::WeightedAb => alpha,
    };
    let params = OperatorParams::new(alpha, beta, normalization)?;
    let w = if preset.binds_weight() { WeightFunction::unit() } else { w };
    Ok((params, w))
}

/// R = ∂L/∂x + w² D_right[(∂L/∂v) / w²] with v = D_left x, sampled on the grid.
pub fn el_residual(vp: &VariationalProblem, x: &GridFunction) -> Result<GridFunction> {
    if x.grid() != &vp.grid {
        return Err(Error::Usage("trajectory is not sampled on the problem grid".into()));
    }
    let grid = vp.grid;
    let table = KernelTable::new(&vp.params, &grid)?;
    let ws = vp.weight.samples(&grid);
    let left = FracOperator::derivative_from(&vp.params, &grid, &table, ws.clone(), Side::Left);
    // w² D_right[w](g / w²) is the right derivative taken with weight 1/w
    let inv: Vec<f64> = ws.iter().map(|w| 1.0 / w).collect();
    let right = FracOperator::derivative_from(&vp.params, &grid, &table, inv, Side::Right);

    let v = left.apply(x.values());
    let nodes = grid.nodes();
    let mut lx = Vec::with_capacity(grid.n());
    let mut lv = Vec::with_capacity(grid.n());
    for i in 0..grid.n() {
        let p = eval_with_partials(&vp.lagrangian, &EvalEnv::new(nodes[i], x.values()[i], 0.0, v[i]))?;
        lx.push(p.d_dx);
        lv.push(p.d_dv);
    }
    let r: Vec<f64> = right.apply(&lv).iter().zip(&lx).map(|(a, b)| a + b).collect();
    GridFunction::new(grid, r)
}

/// sup |R| over nodes 1..n-2; the endpoints carry boundary data instead of the equation.
pub fn interior_sup(r: &GridFunction) -> f64 {
    let v = r.values();
    v[1..v.len() - 1].iter().fold(0.0f64, |m, x| m.max(x.abs()))
}

pub fn solve_variational(vp: &VariationalProblem) -> Result<SweepResult> {
    shoot_terminal(&vp.to_control()?)
}
