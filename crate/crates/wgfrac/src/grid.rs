use crate::error::{Error, Result};

/// Uniform grid t_i = a + i h on [a, b], i = 0..n-1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    a: f64,
    b: f64,
    n: usize,
}

impl Grid {
    pub fn new(a: f64, b: f64, n: usize) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && b > a) {
            return Err(Error::Domain(format!("grid needs finite a < b, got [{a}, {b}]")));
        }
        if n < 3 {
            return Err(Error::Domain(format!("grid needs at least 3 nodes, got {n}")));
        }
        Ok(Self { a, b, n })
    }

    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn h(&self) -> f64 {
        (self.b - self.a) / (self.n - 1) as f64
    }

    pub fn t(&self, i: usize) -> f64 {
        if i == self.n - 1 {
            self.b
        } else {
            self.a + i as f64 * self.h()
        }
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.t(i)).collect()
    }

    /// Composite trapezoid weights.
    pub fn trapezoid_weights(&self) -> Vec<f64> {
        let h = self.h();
        let mut q = vec![h; self.n];
        q[0] = 0.5 * h;
        q[self.n - 1] = 0.5 * h;
        q
    }

    pub fn integrate(&self, values: &[f64]) -> f64 {
        assert_eq!(values.len(), self.n);
        let q = self.trapezoid_weights();
        values.iter().zip(q.iter()).map(|(v, w)| v * w).sum()
    }

    /// Halve the spacing; the old nodes are the even-indexed new ones.
    pub fn refined(&self) -> Self {
        Self { a: self.a, b: self.b, n: 2 * self.n - 1 }
    }
}

/// Samples of a scalar function on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    grid: Grid,
    values: Vec<f64>,
}

impl GridFunction {
    pub fn new(grid: Grid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.n() {
            return Err(Error::Usage(format!(
                "{} samples supplied for a grid of {} nodes",
                values.len(),
                grid.n()
            )));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::Domain(format!("sample {i} is not finite")));
        }
        Ok(Self { grid, values })
    }

    pub fn sample(grid: Grid, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = grid.nodes().into_iter().map(f).collect();
        Self::new(grid, values)
    }

    pub fn constant(grid: Grid, c: f64) -> Self {
        Self { grid, values: vec![c; grid.n()] }
    }

    /// Unchecked constructor for values produced by the library itself.
    pub(crate) fn from_parts(grid: Grid, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), grid.n());
        Self { grid, values }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }
    pub fn values(&self) -> &[f64] {
        &self.values
    }
    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("t,value\n");
        for (i, v) in self.values.iter().enumerate() {
            s.push_str(&fmt17(self.grid.t(i)));
            s.push(',');
            s.push_str(&fmt17(*v));
            s.push('\n');
        }
        s
    }

    /// Read a CSV whose first column is t. The value column is `column` when the file
    /// has a header naming it, otherwise the second column.
    pub fn from_csv(text: &str, column: Option<&str>) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty()).peekable();
        let mut col = 1;
        if let Some(first) = lines.peek() {
            let cells: Vec<&str> = first.split(',').map(str::trim).collect();
            if cells[0].parse::<f64>().is_err() {
                if let Some(name) = column {
                    col = cells.iter().position(|c| *c == name).ok_or_else(|| {
                        Error::Usage(format!("CSV header has no column `{name}`"))
                    })?;
                }
                lines.next();
            }
        }
        let mut ts = Vec::new();
        let mut vs = Vec::new();
        for (lineno, line) in lines.enumerate() {
            let cells: Vec<&str> = line.split(',').map(str::trim).collect();
            let parse = |k: usize| -> Result<f64> {
                cells
                    .get(k)
                    .and_then(|c| c.parse::<f64>().ok())
                    .ok_or_else(|| Error::Usage(format!("bad CSV row {}: `{line}`", lineno + 1)))
            };
            ts.push(parse(0)?);
            vs.push(parse(col)?);
        }
        if ts.len() < 3 {
            return Err(Error::Usage("CSV needs at least 3 rows".into()));
        }
        let grid = Grid::new(ts[0], ts[ts.len() - 1], ts.len())?;
        let h = grid.h();
        for (i, t) in ts.iter().enumerate() {
            if (t - grid.t(i)).abs() > 1e-9 * h {
                return Err(Error::Usage(format!("CSV t column is not uniform at row {}", i + 1)));
            }
        }
        Self::new(grid, vs)
    }
}

/// 17 significant digits, enough to round-trip any f64.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

/// Positive C¹ weights available to the operators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightFunction {
    /// w(t) = c
    Constant { c: f64 },
    /// w(t) = e^{kt}
    Exponential { k: f64 },
    /// w(t) = (1 + t)^k
    Power { k: f64 },
}

impl WeightFunction {
    pub fn unit() -> Self {
        WeightFunction::Constant { c: 1.0 }
    }

    pub fn constant(c: f64) -> Result<Self> {
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::Domain(format!("constant weight must be positive, got {c}")));
        }
        Ok(WeightFunction::Constant { c })
    }

    pub fn exponential(k: f64) -> Result<Self> {
        if !k.is_finite() {
            return Err(Error::Domain(format!("exponential rate must be finite, got {k}")));
        }
        Ok(WeightFunction::Exponential { k })
    }

    pub fn power(k: f64) -> Result<Self> {
        if !k.is_finite() {
            return Err(Error::Domain(format!("power exponent must be finite, got {k}")));
        }
        Ok(WeightFunction::Power { k })
    }

    pub fn eval(&self, t: f64) -> f64 {
        match *self {
            WeightFunction::Constant { c } => c,
            WeightFunction::Exponential { k } => (k * t).exp(),
            WeightFunction::Power { k } => (1.0 + t).powf(k),
        }
    }

    /// Positivity on [a, b]: closed form for the catalog, then a sampling pass.
    pub fn check_on(&self, grid: &Grid) -> Result<()> {
        if let WeightFunction::Power { .. } = self {
            if grid.a() <= -1.0 {
                return Err(Error::Domain(format!(
                    "power weight (1+t)^k needs a > -1, got a = {}",
                    grid.a()
                )));
            }
        }
        for t in grid.nodes() {
            let w = self.eval(t);
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::Domain(format!("weight is {w} at t = {t}")));
            }
        }
        Ok(())
    }

    pub fn samples(&self, grid: &Grid) -> Vec<f64> {
        grid.nodes().into_iter().map(|t| self.eval(t)).collect()
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, WeightFunction::Constant { c } if *c == 1.0)
    }
}
