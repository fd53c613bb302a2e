use crate::error::{MathError, Result};
use crate::specfun::gamma_real;
#[allow(unused_imports)]
use num_traits::Float;

/// A fractional order α = m + α₀ with its normalization constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FractionalOrder {
    pub alpha: f64,
    pub m: u32,
    pub alpha0: f64,
    /// (−1)^{m+1} 2^{α+α₀−1} Γ(α)/Γ(1−α₀)
    pub c_alpha: f64,
}

impl FractionalOrder {
    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= 0.0 || alpha > 64.0 {
            return Err(MathError::InvalidOrder(alpha));
        }
        let m = alpha.floor();
        let alpha0 = alpha - m;
        let sign = if (m as u32) % 2 == 0 { -1.0 } else { 1.0 };
        let c_alpha = sign * 2.0.powf(alpha + alpha0 - 1.0) * gamma_real(alpha)? / gamma_real(1.0 - alpha0)?;
        Ok(Self {
            alpha,
            m: m as u32,
            alpha0,
            c_alpha,
        })
    }

    pub fn is_integer(&self) -> bool {
        self.alpha0 == 0.0
    }

    pub fn is_half_integer(&self) -> bool {
        let two = 2.0 * self.alpha;
        two == two.round()
    }

    /// Rejects 2α ∈ ℕ, as required by the integral and extension routes.
    pub fn require_non_half_integer(&self) -> Result<()> {
        if self.is_half_integer() {
            Err(MathError::HalfInteger(2.0 * self.alpha))
        } else {
            Ok(())
        }
    }

    /// α < n/2 for spacetime dimension n.
    pub fn require_below_half_dim(&self, n: u32) -> Result<()> {
        if self.alpha < n as f64 / 2.0 {
            Ok(())
        } else {
            Err(MathError::InvalidOrder(self.alpha))
        }
    }

    /// μ = α² − n²/4.
    pub fn mu(&self, n: u32) -> f64 {
        self.alpha * self.alpha - (n * n) as f64 / 4.0
    }
}
