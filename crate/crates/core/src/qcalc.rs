//! q-calculus coefficients for the hypersingular difference operator.

use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{MathError, Result};
use crate::order::FractionalOrder;

/// [k]_q = (1 − q^k)/(1 − q).
pub fn q_int(k: u32, q: f64) -> f64 {
    (1.0 - q.powi(k as i32)) / (1.0 - q)
}

/// [k]_q! = [1]_q ⋯ [k]_q.
pub fn q_factorial(k: u32, q: f64) -> f64 {
    (1..=k).map(|j| q_int(j, q)).product()
}

fn check_q(q: f64) -> Result<()> {
    if !(q > 0.0) || q == 1.0 || !q.is_finite() {
        return Err(MathError::InvalidScheme("q must be positive and different from 1"));
    }
    Ok(())
}

/// Gaussian binomial [l]_q!/([k]_q! [l−k]_q!).
pub fn q_binomial(l: u32, k: u32, q: f64) -> Result<f64> {
    check_q(q)?;
    if k > l {
        return Err(MathError::Domain("q_binomial needs k <= l"));
    }
    Ok(q_factorial(l, q) / (q_factorial(k, q) * q_factorial(l - k, q)))
}

/// C_k^l = q^{k((k+1)/2 − l)} binom(l, k)_q.
pub fn c_coefficient(k: u32, l: u32, q: f64) -> Result<f64> {
    let kk = k as f64;
    Ok(q.powf(kk * ((kk + 1.0) / 2.0 - l as f64)) * q_binomial(l, k, q)?)
}

/// A^l_μ = Σ_k (−1)^k q^{kμ} C_k^l.
pub fn a_coefficient(l: u32, mu: f64, q: f64) -> Result<f64> {
    let mut acc = 0.0;
    for k in 0..=l {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * q.powf(k as f64 * mu) * c_coefficient(k, l, q)?;
    }
    Ok(acc)
}

/// Product form ∏_{k=0}^{l−1}(1 − q^{μ+1−l+k}) of A^l_μ.
pub fn a_product(l: u32, mu: f64, q: f64) -> Result<f64> {
    check_q(q)?;
    Ok((0..l).map(|k| 1.0 - q.powf(mu + 1.0 - l as f64 + k as f64)).product())
}

/// Coefficient tables for a given (α, n, q, l).
#[derive(Debug, Clone, PartialEq)]
pub struct QScheme {
    pub n: u32,
    pub alpha: f64,
    pub q: f64,
    pub l: u32,
    pub l_star: u32,
    /// C_k^l, k = 0..=l
    pub c_l: Vec<f64>,
    /// C_j^{l*}, j = 0..=l*
    pub c_lstar: Vec<f64>,
    /// A^{l*}_{n/2−1+α}
    pub a_lstar: f64,
    /// A^l_{2α}
    pub a_l: f64,
}

impl QScheme {
    /// Default scheme: q = 2, l = ⌈2α⌉ + 1.
    pub fn default_for(order: &FractionalOrder, n: u32) -> Result<Self> {
        Self::new(order, n, 2.0, default_l(order.alpha))
    }

    pub fn new(order: &FractionalOrder, n: u32, q: f64, l: u32) -> Result<Self> {
        check_q(q)?;
        order.require_non_half_integer()?;
        if !(2..=3).contains(&n) {
            return Err(MathError::InvalidScheme("spacetime dimension must be 2 or 3"));
        }
        let alpha = order.alpha;
        if l == 0 || alpha >= l as f64 / 2.0 {
            return Err(MathError::InvalidScheme("need alpha < l/2"));
        }
        let l_star = (n + l - 1) / 2;
        let c_l = (0..=l).map(|k| c_coefficient(k, l, q)).collect::<Result<Vec<_>>>()?;
        let c_lstar = (0..=l_star)
            .map(|k| c_coefficient(k, l_star, q))
            .collect::<Result<Vec<_>>>()?;
        let a_lstar = a_coefficient(l_star, n as f64 / 2.0 - 1.0 + alpha, q)?;
        let a_l = a_coefficient(l, 2.0 * alpha, q)?;
        if a_lstar == 0.0 || a_l == 0.0 {
            return Err(MathError::InvalidScheme("vanishing normalization"));
        }
        Ok(Self {
            n,
            alpha,
            q,
            l,
            l_star,
            c_l,
            c_lstar,
            a_lstar,
            a_l,
        })
    }

    /// Weight (1 + q^j s)^{2α}/(2 + q^j s)^{n/2+α} of the j-th dilation.
    pub fn dilation_weight(&self, j: u32, s: f64) -> f64 {
        let qs = self.q.powi(j as i32) * s;
        (1.0 + qs).powf(2.0 * self.alpha) / (2.0 + qs).powf(self.n as f64 / 2.0 + self.alpha)
    }

    /// Δ^{l,α}_{s,y} f(t, x): the normalized double q-difference. `f` is evaluated
    /// at (t − q^k|y|, x − q^k y/(1 + q^j s)); `y` has n − 1 components.
    pub fn difference<F>(&self, f: F, t: f64, x: &[f64], s: f64, y: &[f64]) -> f64
    where
        F: Fn(f64, &[f64]) -> f64,
    {
        let dim = x.len();
        let ynorm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        let mut pt = [0.0f64; 3];
        let mut acc = 0.0;
        for j in 0..=self.l_star {
            let dil = 1.0 + self.q.powi(j as i32) * s;
            let wj = self.dilation_weight(j, s);
            let sj = if j % 2 == 0 { 1.0 } else { -1.0 };
            let mut inner = 0.0;
            for k in 0..=self.l {
                let qk = self.q.powi(k as i32);
                for d in 0..dim {
                    pt[d] = x[d] - qk * y[d] / dil;
                }
                let sk = if k % 2 == 0 { 1.0 } else { -1.0 };
                inner += sk * self.c_l[k as usize] * f(t - qk * ynorm, &pt[..dim]);
            }
            acc += sj * self.c_lstar[j as usize] * wj * inner;
        }
        acc / (self.a_lstar * self.a_l)
    }
}

/// l = ⌈2α⌉ + 1.
pub fn default_l(alpha: f64) -> u32 {
    (2.0 * alpha).ceil() as u32 + 1
}
