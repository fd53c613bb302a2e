//! The spectral route: □^α f = F⁻¹[σ_α f̂].

use fracwave_core::symbol::sigma;
use fracwave_core::{Complex64, FractionalOrder};

use crate::error::{Error, Result};
use crate::grid::{ScalarField, SpacetimeGrid, SpectralField};
use crate::spectral::{apply_real, dft_forward};

/// σ_α sampled on the frequency grid of a spacetime grid.
#[derive(Debug, Clone)]
pub struct SymbolGrid {
    pub grid: SpacetimeGrid,
    pub order: FractionalOrder,
    pub values: Vec<Complex64>,
}

impl SymbolGrid {
    pub fn new(grid: &SpacetimeGrid, order: &FractionalOrder) -> Self {
        let probe = SpectralField {
            grid: grid.clone(),
            coeffs: Vec::new(),
        };
        let values = (0..grid.len())
            .map(|k| {
                let (tau, xi) = probe.frequency(k);
                sigma(order, tau, xi)
            })
            .collect();
        Self {
            grid: grid.clone(),
            order: *order,
            values,
        }
    }
}

/// Periodic spectral application of σ_α on the grid window.
pub fn apply_box_alpha_spectral(f: &ScalarField, order: &FractionalOrder) -> Result<ScalarField> {
    if let Some(i) = f.values.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite(i));
    }
    let o = *order;
    apply_real(f, move |tau, xi| sigma(&o, tau, xi))
}

/// Spectral application on a window enlarged `pad` times (zeros outside the
/// data), cropped back to the original grid.
pub fn apply_box_alpha_padded(f: &ScalarField, order: &FractionalOrder, pad: usize) -> Result<ScalarField> {
    if pad == 0 {
        return Err(Error::Param("pad factor must be >= 1".into()));
    }
    let big = f.zero_padded(pad);
    Ok(apply_box_alpha_spectral(&big, order)?.cropped(&f.grid))
}

/// Approximation of the whole-space □^α f on the grid window. Two padded runs
/// (factors p and 2p) are extrapolated assuming a periodization error ∝ L^{−(1+α)}.
/// Integer orders are local and need no padding.
pub fn apply_box_alpha_reference(f: &ScalarField, order: &FractionalOrder, pad: usize) -> Result<ScalarField> {
    if order.is_integer() {
        return apply_box_alpha_spectral(f, order);
    }
    let a = apply_box_alpha_padded(f, order, pad)?;
    let b = apply_box_alpha_padded(f, order, 2 * pad)?;
    let r = 2f64.powf(1.0 + order.alpha);
    let values = a
        .values
        .iter()
        .zip(&b.values)
        .map(|(x, y)| (r * y - x) / (r - 1.0))
        .collect();
    ScalarField::new(f.grid.clone(), values)
}

/// Applies σ_α to a single sampled complex mode e^{i(τ₀t + ξ₀·x)} given as
/// separate real and imaginary fields; returns (re, im) of the result.
pub fn apply_box_alpha_complex(
    re: &ScalarField,
    im: &ScalarField,
    order: &FractionalOrder,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut spec = dft_forward(re);
    let spec_im = dft_forward(im);
    for (c, d) in spec.coeffs.iter_mut().zip(&spec_im.coeffs) {
        *c += d * Complex64::i();
    }
    let sym = SymbolGrid::new(&re.grid, order);
    for (c, s) in spec.coeffs.iter_mut().zip(&sym.values) {
        *c *= s;
    }
    let out = crate::spectral::dft_inverse_complex(&spec);
    Ok((out.iter().map(|c| c.re).collect(), out.iter().map(|c| c.im).collect()))
}
