//! Discrete left/right weighted generalized fractional derivatives and integrals.
//!
//! Left derivative:  D f(x) = 1/(φ w(x)) · d/dx ∫_a^x (wf)(s) k(x - s) ds, with
//! k(τ) = E_β(-μ τ^β).
//! Left integral:    I f(x) = φ f(x) + ψ/(Γ(β) w(x)) ∫_a^x (x - s)^{β-1} (wf)(s) ds.
//! Right operators mirror these on (x, b]; numerically they are the left operators
//! applied to the reversed samples and reversed weight, then reversed back.
//!
//! All convolutions use product integration: wf is replaced by its piecewise-linear
//! interpolant, which is then convolved exactly with the kernel through its cell
//! moments. The derivative is the exact derivative of that interpolated convolution,
//! C'(t_i) = g_0 k(t_i) + Σ_j (g_{j+1} - g_j)/h · ∫_{t_j}^{t_{j+1}} k(t_i - s) ds,
//! so every operator is a lower-triangular (right: upper-triangular) linear map.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::grid::{Grid, GridFunction, WeightFunction};
use crate::ml::{rgamma, MittagLeffler};
use crate::params::OperatorParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Derivative,
    Integral,
}

/// m0(τ) = ∫_0^τ k(s) ds and m1(τ) = ∫_0^τ (τ - s) k(s) ds.
pub fn kernel_moments(params: &OperatorParams, tau: f64) -> Result<(f64, f64)> {
    if !(tau.is_finite() && tau >= 0.0) {
        return Err(Error::Domain(format!("moment length must be nonnegative, got {tau}")));
    }
    let ml = MittagLeffler::new(params.beta())?;
    moments_with(&ml, params.mu(), tau)
}

fn moments_with(ml: &MittagLeffler, mu: f64, tau: f64) -> Result<(f64, f64)> {
    if tau == 0.0 {
        return Ok((0.0, 0.0));
    }
    if mu == 0.0 {
        return Ok((tau, 0.5 * tau * tau));
    }
    let z = -mu * tau.powf(ml.beta());
    Ok((tau * ml.eval(2.0, z)?, tau * tau * ml.eval(3.0, z)?))
}

/// Kernel samples k(mh), m = 0..n-1, and cell integrals P_m = ∫_{mh}^{(m+1)h} k.
#[derive(Debug, Clone)]
pub struct KernelTable {
    h: f64,
    k: Vec<f64>,
    p: Vec<f64>,
}

impl KernelTable {
    pub fn new(params: &OperatorParams, grid: &Grid) -> Result<Self> {
        let n = grid.n();
        let h = grid.h();
        let mu = params.mu();
        let beta = params.beta();
        if mu == 0.0 {
            return Ok(Self { h, k: vec![1.0; n], p: vec![h; n - 1] });
        }
        if beta == 1.0 {
            let cell = -(-mu * h).exp_m1() / mu;
            let k: Vec<f64> = (0..n).map(|m| (-mu * m as f64 * h).exp()).collect();
            let p = k[..n - 1].iter().map(|e| e * cell).collect();
            return Ok(Self { h, k, p });
        }
        let ml = MittagLeffler::new(beta)?;
        let mut k = Vec::with_capacity(n);
        let mut m0 = Vec::with_capacity(n);
        for m in 0..n {
            let tau = m as f64 * h;
            k.push(if m == 0 { 1.0 } else { ml.eval(1.0, -mu * tau.powf(beta))? });
            m0.push(if m == 0 { 0.0 } else { tau * ml.eval(2.0, -mu * tau.powf(beta))? });
        }
        let p = m0.windows(2).map(|w| w[1] - w[0]).collect();
        Ok(Self { h, k, p })
    }

    pub fn kernel(&self) -> &[f64] {
        &self.k
    }

    pub fn cells(&self) -> &[f64] {
        &self.p
    }
}

/// Coefficients c_ij (j ≤ i) of a left-oriented operator acting on g = w·f.
#[derive(Debug, Clone)]
enum Stencil {
    /// c_00 = 1; c_ii = P_0/h; c_i0 = k_i - P_{i-1}/h; c_ij = (P_{i-j} - P_{i-j-1})/h.
    Deriv { diag: f64, toe: Vec<f64>, col0: Vec<f64> },
    /// Product-trapezoid weights of the power kernel, already divided by Γ(β).
    Integral { a: Vec<f64>, b: Vec<f64> },
}

impl Stencil {
    fn deriv(table: &KernelTable) -> Self {
        let n = table.k.len();
        let h = table.h;
        let p = &table.p;
        let mut toe = vec![0.0; n];
        for m in 1..n - 1 {
            toe[m] = (p[m] - p[m - 1]) / h;
        }
        let mut col0 = vec![0.0; n];
        col0[0] = table.k[0];
        for i in 1..n {
            col0[i] = table.k[i] - p[i - 1] / h;
        }
        Stencil::Deriv { diag: p[0] / h, toe, col0 }
    }

    fn integral(beta: f64, grid: &Grid) -> Self {
        let n = grid.n();
        let scale = grid.h().powf(beta) * rgamma(beta);
        let mut a = Vec::with_capacity(n - 1);
        let mut b = Vec::with_capacity(n - 1);
        for m in 0..n - 1 {
            let (p, q) = power_cell(beta, m as f64);
            a.push(scale * (p - q));
            b.push(scale * q);
        }
        Stencil::Integral { a, b }
    }

    fn coef(&self, i: usize, j: usize) -> f64 {
        debug_assert!(j <= i);
        match self {
            Stencil::Deriv { diag, toe, col0 } => {
                if j == 0 {
                    col0[i]
                } else if j == i {
                    *diag
                } else {
                    toe[i - j]
                }
            }
            Stencil::Integral { a, b } => {
                if i == 0 {
                    0.0
                } else if j == i {
                    b[0]
                } else if j == 0 {
                    a[i - 1]
                } else {
                    a[i - j - 1] + b[i - j]
                }
            }
        }
    }

    /// Σ_{j<i} c_ij g_j, summed in increasing j.
    fn history(&self, i: usize, g: &[f64]) -> f64 {
        if i == 0 {
            return 0.0;
        }
        match self {
            Stencil::Deriv { toe, col0, .. } => {
                let mut s = col0[i] * g[0];
                for j in 1..i {
                    s += toe[i - j] * g[j];
                }
                s
            }
            Stencil::Integral { a, b } => {
                let mut s = a[i - 1] * g[0];
                for j in 1..i {
                    s += (a[i - j - 1] + b[i - j]) * g[j];
                }
                s
            }
        }
    }

    fn diag(&self, i: usize) -> f64 {
        self.coef(i, i)
    }
}

/// Cell moments of σ^{β-1} on [m, m+1] (unit spacing): P = ∫ σ^{β-1},
/// Q = ∫ (m+1-σ) σ^{β-1}. Large m uses a binomial series to avoid cancellation.
fn power_cell(beta: f64, m: f64) -> (f64, f64) {
    if m < 8.0 {
        let p = ((m + 1.0).powf(beta) - m.powf(beta)) / beta;
        let q = (m + 1.0) * p - ((m + 1.0).powf(beta + 1.0) - m.powf(beta + 1.0)) / (beta + 1.0);
        return (p, q);
    }
    let x = 1.0 / m;
    let p = m.powf(beta) * (beta * x.ln_1p()).exp_m1() / beta;
    // (1+x)^{β+1} - 1 - (β+1)x = Σ_{k≥2} C(β+1, k) x^k
    let c = beta + 1.0;
    let mut coef = c * (c - 1.0) / 2.0;
    let mut pw = x * x;
    let mut s = 0.0;
    for k in 2..60 {
        let t = coef * pw;
        s += t;
        if t.abs() <= 1e-17 * s.abs() {
            break;
        }
        coef *= (c - k as f64) / (k as f64 + 1.0);
        pw *= x;
    }
    // Q = (m+1)P - ((m+1)^{β+1} - m^{β+1})/(β+1) simplifies to m^{β+1} s / (β(β+1))
    let q = m.powf(c) * s / (beta * c);
    (p, q)
}

/// One of the four operators on a fixed grid, with its weight samples and stencil.
#[derive(Debug, Clone)]
pub struct FracOperator {
    params: OperatorParams,
    grid: Grid,
    side: Side,
    kind: Kind,
    w: Vec<f64>,
    stencil: Stencil,
}

impl FracOperator {
    pub fn new(params: &OperatorParams, w: &WeightFunction, grid: &Grid, side: Side, kind: Kind) -> Result<Self> {
        w.check_on(grid)?;
        let w = w.samples(grid);
        match kind {
            Kind::Derivative => {
                let table = KernelTable::new(params, grid)?;
                Ok(Self::derivative_from(params, grid, &table, w, side))
            }
            Kind::Integral => Ok(Self {
                params: *params,
                grid: *grid,
                side,
                kind,
                w,
                stencil: Stencil::integral(params.beta(), grid),
            }),
        }
    }

    /// Derivative with arbitrary positive weight samples; the table can be shared
    /// between several operators on the same grid.
    pub fn derivative_from(params: &OperatorParams, grid: &Grid, table: &KernelTable, w: Vec<f64>, side: Side) -> Self {
        assert_eq!(w.len(), grid.n());
        assert_eq!(table.k.len(), grid.n());
        Self { params: *params, grid: *grid, side, kind: Kind::Derivative, w, stencil: Stencil::deriv(table) }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }
    pub fn side(&self) -> Side {
        self.side
    }
    pub fn kind(&self) -> Kind {
        self.kind
    }
    pub fn weights(&self) -> &[f64] {
        &self.w
    }

    fn apply_left(&self, f: &[f64], w: &[f64]) -> Vec<f64> {
        let n = f.len();
        let g: Vec<f64> = f.iter().zip(w).map(|(f, w)| f * w).collect();
        let phi = self.params.phi();
        let psi = self.params.psi();
        (0..n)
            .map(|i| {
                let s = self.stencil.history(i, &g) + self.stencil.diag(i) * g[i];
                match self.kind {
                    Kind::Derivative => s / (phi * w[i]),
                    Kind::Integral => {
                        if psi == 0.0 {
                            phi * f[i]
                        } else {
                            phi * f[i] + psi * s / w[i]
                        }
                    }
                }
            })
            .collect()
    }

    /// Direct evaluation on raw samples.
    pub fn apply(&self, f: &[f64]) -> Vec<f64> {
        assert_eq!(f.len(), self.grid.n());
        match self.side {
            Side::Left => self.apply_left(f, &self.w),
            Side::Right => {
                let fr: Vec<f64> = f.iter().rev().copied().collect();
                let wr: Vec<f64> = self.w.iter().rev().copied().collect();
                let mut out = self.apply_left(&fr, &wr);
                out.reverse();
                out
            }
        }
    }

    pub fn apply_fn(&self, f: &GridFunction) -> Result<GridFunction> {
        if f.grid() != &self.grid {
            return Err(Error::Usage("function and operator live on different grids".into()));
        }
        Ok(GridFunction::from_parts(self.grid, self.apply(f.values())))
    }

    /// Matrix entry M[i][j]; zero outside the triangle.
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        let n = self.grid.n();
        let (ii, jj) = match self.side {
            Side::Left => (i, j),
            Side::Right => (n - 1 - i, n - 1 - j),
        };
        let base = if jj <= ii { self.stencil.coef(ii, jj) } else { 0.0 };
        let ratio = self.w[j] / self.w[i];
        match self.kind {
            Kind::Derivative => base * ratio / self.params.phi(),
            Kind::Integral => {
                let d = if i == j { self.params.phi() } else { 0.0 };
                d + self.params.psi() * base * ratio
            }
        }
    }

    /// Σ over the already-solved part of row i (j < i for left, j > i for right).
    pub(crate) fn history(&self, i: usize, f: &[f64]) -> f64 {
        match self.side {
            Side::Left => {
                let mut s = 0.0;
                for (j, fj) in f.iter().enumerate().take(i) {
                    s += self.entry(i, j) * fj;
                }
                s
            }
            Side::Right => {
                let n = self.grid.n();
                let mut s = 0.0;
                for j in (i + 1..n).rev() {
                    s += self.entry(i, j) * f[j];
                }
                s
            }
        }
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let n = self.grid.n();
        DMatrix::from_fn(n, n, |i, j| self.entry(i, j))
    }
}

/// Dense matrix form of an operator.
#[derive(Debug, Clone)]
pub struct OperatorMatrix {
    pub grid: Grid,
    pub side: Side,
    pub kind: Kind,
    pub entries: DMatrix<f64>,
}

impl OperatorMatrix {
    pub fn apply(&self, f: &GridFunction) -> Result<GridFunction> {
        if f.grid() != &self.grid {
            return Err(Error::Usage("function and matrix live on different grids".into()));
        }
        let v = nalgebra::DVector::from_column_slice(f.values());
        let out = &self.entries * v;
        Ok(GridFunction::from_parts(self.grid, out.as_slice().to_vec()))
    }
}

pub fn assemble_matrix(
    params: &OperatorParams,
    w: &WeightFunction,
    grid: &Grid,
    side: Side,
    kind: Kind,
) -> Result<OperatorMatrix> {
    let op = FracOperator::new(params, w, grid, side, kind)?;
    Ok(OperatorMatrix { grid: *grid, side, kind, entries: op.to_dense() })
}

fn run(params: &OperatorParams, w: &WeightFunction, f: &GridFunction, side: Side, kind: Kind) -> Result<GridFunction> {
    FracOperator::new(params, w, f.grid(), side, kind)?.apply_fn(f)
}

/// C(t_i) = ∫_a^{t_i} (wf)(s) k(t_i - s) ds by product trapezoid.
pub fn left_conv(params: &OperatorParams, w: &WeightFunction, f: &GridFunction) -> Result<GridFunction> {
    let grid = *f.grid();
    w.check_on(&grid)?;
    let n = grid.n();
    let h = grid.h();
    let ml = MittagLeffler::new(params.beta())?;
    let mut m0 = Vec::with_capacity(n);
    let mut m1 = Vec::with_capacity(n);
    for m in 0..n {
        let (a, b) = moments_with(&ml, params.mu(), m as f64 * h)?;
        m0.push(a);
        m1.push(b);
    }
    // cell m = [mh, (m+1)h]: weight a_m on the far node, b_m on the near node
    let mut wa = Vec::with_capacity(n - 1);
    let mut wb = Vec::with_capacity(n - 1);
    for m in 0..n - 1 {
        let p = m0[m + 1] - m0[m];
        let q = m1[m + 1] - m1[m] - h * m0[m];
        wb.push(q / h);
        wa.push(p - q / h);
    }
    let g: Vec<f64> = f.values().iter().zip(w.samples(&grid)).map(|(f, w)| f * w).collect();
    let mut out = vec![0.0; n];
    for i in 1..n {
        let mut s = wa[i - 1] * g[0];
        for j in 1..i {
            s += (wa[i - j - 1] + wb[i - j]) * g[j];
        }
        s += wb[0] * g[i];
        out[i] = s;
    }
    Ok(GridFunction::from_parts(grid, out))
}

pub fn left_deriv(params: &OperatorParams, w: &WeightFunction, f: &GridFunction) -> Result<GridFunction> {
    run(params, w, f, Side::Left, Kind::Derivative)
}

pub fn right_deriv(params: &OperatorParams, w: &WeightFunction, f: &GridFunction) -> Result<GridFunction> {
    run(params, w, f, Side::Right, Kind::Derivative)
}

pub fn left_integral(params: &OperatorParams, w: &WeightFunction, f: &GridFunction) -> Result<GridFunction> {
    run(params, w, f, Side::Left, Kind::Integral)
}

pub fn right_integral(params: &OperatorParams, w: &WeightFunction, f: &GridFunction) -> Result<GridFunction> {
    run(params, w, f, Side::Right, Kind::Integral)
}
