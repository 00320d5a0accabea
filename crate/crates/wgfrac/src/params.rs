use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ml::rgamma;

/// Choice of the normalization function B(α); both satisfy B(0) = B(1) = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    /// B ≡ 1.
    Unit,
    /// B(α) = 1 - α + α/Γ(α).
    Ab,
}

impl Normalization {
    pub fn eval(self, alpha: f64) -> f64 {
        match self {
            Normalization::Unit => 1.0,
            Normalization::Ab => 1.0 - alpha + alpha * rgamma(alpha),
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "unit" => Some(Normalization::Unit),
            "ab" => Some(Normalization::Ab),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Normalization::Unit => "unit",
            Normalization::Ab => "ab",
        }
    }
}

/// Fractional orders plus the derived constants φ = (1-α)/B, ψ = α/B, μ = α/(1-α).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorParams {
    alpha: f64,
    beta: f64,
    normalization: Normalization,
    phi: f64,
    psi: f64,
    mu: f64,
}

pub fn make_params(alpha: f64, beta: f64, normalization: Normalization) -> Result<OperatorParams> {
    OperatorParams::new(alpha, beta, normalization)
}

impl OperatorParams {
    pub fn new(alpha: f64, beta: f64, normalization: Normalization) -> Result<Self> {
        if !(alpha.is_finite() && (0.0..1.0).contains(&alpha)) {
            return Err(Error::Domain(format!("alpha must lie in [0, 1), got {alpha}")));
        }
        if !(beta.is_finite() && beta > 0.0) {
            return Err(Error::Domain(format!("beta must be positive, got {beta}")));
        }
        if beta >= 3.0 {
            return Err(Error::Domain(format!("beta must be below 3, got {beta}")));
        }
        let b = normalization.eval(alpha);
        Ok(Self {
            alpha,
            beta,
            normalization,
            phi: (1.0 - alpha) / b,
            psi: alpha / b,
            mu: alpha / (1.0 - alpha),
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn beta(&self) -> f64 {
        self.beta
    }
    pub fn normalization(&self) -> Normalization {
        self.normalization
    }
    pub fn phi(&self) -> f64 {
        self.phi
    }
    pub fn psi(&self) -> f64 {
        self.psi
    }
    pub fn mu(&self) -> f64 {
        self.mu
    }
}
