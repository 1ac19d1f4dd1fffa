use num_complex::Complex;
use num_traits::Float;

use super::{check_lambda, Tolerances};
use crate::error::Result;
use crate::scalar::Field;
use crate::series::{binomial_series, series_mul};

/// Real part of the conjugate-product coefficient, with the imaginary part
/// that should have cancelled.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConjugateValue<T> {
    pub value: T,
    pub imag_residue: T,
    /// Set when `|imag| > tol * (1 + |real|)`: a numerical defect.
    pub flagged: bool,
}

/// `C_m^λ(cos φ)` as coefficient `m` of
/// `[sum binom(-λ,k) (-r e^{iφ})^k] * [sum binom(-λ,k) (-r e^{-iφ})^k]`.
pub fn value_via_conjugate_product<T>(lambda: T, phi: T, m: usize) -> Result<ConjugateValue<T>>
where
    T: Field + Float,
{
    value_via_conjugate_product_with(lambda, phi, m, Tolerances::default().imag_residue)
}

pub fn value_via_conjugate_product_with<T>(
    lambda: T,
    phi: T,
    m: usize,
    imag_tolerance: f64,
) -> Result<ConjugateValue<T>>
where
    T: Field + Float,
{
    check_lambda(&lambda)?;
    let base = binomial_series(&(-lambda), m).map(|&c| Complex::new(c, T::zero()));
    // (-e^{±iφ})^k, built per power so the two factors are exact conjugates
    let phase = |k: usize, sign: T| {
        let unit = if k % 2 == 0 { T::one() } else { -T::one() };
        Complex::from_polar(unit, sign * T::from_count(k) * phi)
    };
    let plus = base.scale_powers(|k| phase(k, T::one()));
    let minus = base.scale_powers(|k| phase(k, -T::one()));
    let c = *series_mul(&plus, &minus).coeff(m);
    let flagged = Field::to_f64(&c.im).abs() > imag_tolerance * (1.0 + Field::to_f64(&c.re).abs());
    Ok(ConjugateValue {
        value: c.re,
        imag_residue: c.im,
        flagged,
    })
}
