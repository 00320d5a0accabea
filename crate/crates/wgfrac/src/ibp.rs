//! Numerical check of the weighted integration-by-parts identities
//!
//! ```text
//! right:  ∫ f · D_right g dt = ∫ w² g · D_left(f / w²) dt
//! left:   ∫ f · D_left g dt  = ∫ w² g · D_right(f / w²) dt
//! ```
//!
//! Both sides are computed with the grid operators and the composite trapezoid rule.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{Grid, GridFunction, WeightFunction};
use crate::ops::{FracOperator, KernelTable, Side};
use crate::params::OperatorParams;

/// Which identity to check, named by the derivative applied to g.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IbpForm {
    /// ∫ f D_right g = ∫ w² g D_left(f / w²)
    Right,
    /// ∫ f D_left g = ∫ w² g D_right(f / w²)
    Left,
}

impl IbpForm {
    pub fn name(self) -> &'static str {
        match self {
            IbpForm::Right => "right",
            IbpForm::Left => "left",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "right" => Some(IbpForm::Right),
            "left" => Some(IbpForm::Left),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IbpReport {
    pub lhs: f64,
    pub rhs: f64,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub grid_n: usize,
}

impl IbpReport {
    fn new(lhs: f64, rhs: f64, grid_n: usize) -> Self {
        let abs_residual = (lhs - rhs).abs();
        let rel_residual = abs_residual / lhs.abs().max(rhs.abs()).max(1e-30);
        Self { lhs, rhs, abs_residual, rel_residual, grid_n }
    }
}

pub fn ibp_residual(
    params: &OperatorParams,
    w: &WeightFunction,
    f: &GridFunction,
    g: &GridFunction,
    form: IbpForm,
) -> Result<IbpReport> {
    if f.grid() != g.grid() {
        return Err(Error::Usage("f and g must share a grid".into()));
    }
    IbpChecker::new(params, w, f.grid())?.residual(f, g, form)
}

/// Both derivative operators for one (params, weight, grid), reusable across many pairs.
pub struct IbpChecker {
    grid: Grid,
    w: Vec<f64>,
    left: FracOperator,
    right: FracOperator,
}

impl IbpChecker {
    pub fn new(params: &OperatorParams, w: &WeightFunction, grid: &Grid) -> Result<Self> {
        w.check_on(grid)?;
        let table = KernelTable::new(params, grid)?;
        let ws = w.samples(grid);
        let left = FracOperator::derivative_from(params, grid, &table, ws.clone(), Side::Left);
        let right = FracOperator::derivative_from(params, grid, &table, ws.clone(), Side::Right);
        Ok(Self { grid: *grid, w: ws, left, right })
    }

    pub fn residual(&self, f: &GridFunction, g: &GridFunction, form: IbpForm) -> Result<IbpReport> {
        if f.grid() != &self.grid || g.grid() != &self.grid {
            return Err(Error::Usage("f and g must live on the checker's grid".into()));
        }
        let ws = &self.w;
        let (on_g, on_f) = match form {
            IbpForm::Right => (&self.right, &self.left),
            IbpForm::Left => (&self.left, &self.right),
        };
        let dg = on_g.apply(g.values());
        let scaled: Vec<f64> = f.values().iter().zip(ws).map(|(f, w)| f / (w * w)).collect();
        let df = on_f.apply(&scaled);
        let lhs_int: Vec<f64> = f.values().iter().zip(&dg).map(|(a, b)| a * b).collect();
        let rhs_int: Vec<f64> = (0..self.grid.n()).map(|i| ws[i] * ws[i] * g.values()[i] * df[i]).collect();
        Ok(IbpReport::new(self.grid.integrate(&lhs_int), self.grid.integrate(&rhs_int), self.grid.n()))
    }
}

/// ‖Q A_right - (W² A_left W⁻²)ᵀ Q‖_∞ / ‖Q A_right‖_∞ for the assembled derivative
/// matrices, with W = diag(w) and Q the trapezoid weights.
pub fn adjointness_gap(params: &OperatorParams, w: &WeightFunction, grid: &Grid) -> Result<f64> {
    w.check_on(grid)?;
    let table = KernelTable::new(params, grid)?;
    let ws = w.samples(grid);
    let left = FracOperator::derivative_from(params, grid, &table, ws.clone(), Side::Left).to_dense();
    let right = FracOperator::derivative_from(params, grid, &table, ws.clone(), Side::Right).to_dense();
    let q = grid.trapezoid_weights();
    let n = grid.n();
    let qa = DMatrix::from_fn(n, n, |i, j| q[i] * right[(i, j)]);
    // (W² L W⁻²)ᵀ Q at (i, j) = w_j² L_ji / w_i² · q_j
    let conj = DMatrix::from_fn(n, n, |i, j| ws[j] * ws[j] * left[(j, i)] / (ws[i] * ws[i]) * q[j]);
    Ok(row_sum_norm(&(&qa - &conj)) / row_sum_norm(&qa))
}

fn row_sum_norm(m: &DMatrix<f64>) -> f64 {
    m.row_iter().map(|r| r.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
}
