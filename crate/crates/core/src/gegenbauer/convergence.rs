//! Closed forms of the generating function, the `(1 - r)^{-2λ}` majorant and
//! the term-wise differentiation check.

use num_traits::Float;

use super::{check_lambda, table_via_recurrence, value_at_one, GegenbauerParams};
use crate::error::{Error, Result};
use crate::pochhammer::gamma_ratio_coefficients;
use crate::scalar::Field;

fn domain<F: Field>(name: &'static str, value: &F, domain: &'static str) -> Error {
    Error::Domain {
        name,
        value: value.to_literal(),
        domain,
    }
}

/// `(1 - r)^{-2λ}`, exactly when `2λ` is an integer.
fn majorant_closed_form<F: Field>(lambda: &F, r: &F) -> Result<F> {
    let two_lambda = F::from_count(2) * lambda.clone();
    let one_minus_r = F::one() - r.clone();
    match two_lambda.as_integer() {
        Some(n) if n >= 0 => {
            let power = (0..n).fold(F::one(), |acc, _| acc * one_minus_r.clone());
            F::one().checked_div(&power)
        }
        _ if F::EXACT => Err(Error::FloatOnly("a majorant with non-integer 2λ")),
        _ => {
            let x = one_minus_r.to_f64().powf(-two_lambda.to_f64());
            F::from_f64(x).ok_or_else(|| Error::NotRepresentable(x.to_string()))
        }
    }
}

/// Upper bound on `|sum_{m>N} C_m^λ(t) r^m|` valid for every `t` in `[-1, 1]`.
///
/// Computed as `(1 - r)^{-2λ} - sum_{m<=N} C_m^λ(1) r^m`, the exact tail of the
/// majorant series. Exact fields need `2λ` to be an integer. In float fields
/// the result is widened by a rounding allowance for both terms.
pub fn majorant_tail<F: Field>(lambda: &F, order: usize, r: &F) -> Result<F> {
    check_lambda(lambda)?;
    if !(r.is_positive() && *r < F::one()) {
        return Err(domain("r", r, "the open interval (0, 1)"));
    }
    let closed = majorant_closed_form(lambda, r)?;
    let coeffs = gamma_ratio_coefficients(&(F::from_count(2) * lambda.clone()), order + 1);
    let mut partial = F::zero();
    let mut power = F::one();
    for c in coeffs {
        partial = partial + c * power.clone();
        power = power * r.clone();
    }
    let mut tail = closed.clone() - partial.clone();
    if tail < F::zero() {
        tail = F::zero();
    }
    let u = F::rounding_unit();
    if !u.is_zero() {
        let weight_closed = F::from_count(8) + F::from_count(4) * lambda.clone();
        let weight_partial = F::from_count(4 * order + 4);
        tail = tail + u * (weight_closed * closed + weight_partial * partial);
    }
    Ok(tail)
}

/// `sum_{m<=N} C_m^λ(t) r^m` using the three-term recurrence on values.
///
/// Pointwise evaluation is stable in float fields for `|t| <= 1`, unlike
/// Horner on the monomial coefficients of a high-degree table.
pub fn generating_partial_sum<F: Field>(lambda: &F, t: &F, r: &F, order: usize) -> Result<F> {
    check_lambda(lambda)?;
    let two = F::from_count(2);
    let mut prev = F::zero();
    let mut cur = F::one();
    let mut power = F::one();
    let mut sum = F::one();
    for m in 1..=order {
        let a = two.clone() * t.clone() * (F::from_count(m) + lambda.clone() - F::one());
        let b = F::from_count(m) + two.clone() * lambda.clone() - two.clone();
        let next = (a * cur.clone() - b * prev).checked_div(&F::from_count(m))?;
        prev = cur;
        cur = next;
        power = power * r.clone();
        sum = sum + cur.clone() * power.clone();
    }
    Ok(sum)
}

/// `1 - 2rt + r^2`, written as `(1 - r)^2 + 2r(1 - t)` so that it is
/// nonnegative and free of cancellation for `t <= 1`.
fn generating_base<T: Field + Float>(t: T, r: T) -> T {
    let one = T::one();
    let two = one + one;
    (one - r) * (one - r) + two * r * (one - t)
}

fn pow_real<T: Field + Float>(base: T, exponent: T) -> T {
    match exponent.as_integer() {
        Some(n) if n.abs() <= i32::MAX as i64 => base.powi(n as i32),
        _ => base.powf(exponent),
    }
}

/// `(1 - 2rt + r^2)^{-λ}`.
pub fn generating_function<T: Field + Float>(lambda: T, t: T, r: T) -> T {
    pow_real(generating_base(t, r), -lambda)
}

/// `d/dt (1 - 2rt + r^2)^{-λ} = 2λr (1 - 2rt + r^2)^{-λ-1}`.
pub fn generating_function_derivative<T: Field + Float>(lambda: T, t: T, r: T) -> T {
    let two = T::one() + T::one();
    two * lambda * r * pow_real(generating_base(t, r), -lambda - T::one())
}

/// Outcome of comparing the closed-form `t`-derivative of the generating
/// function with the truncated term-wise derivative series.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DerivativeCheck<T> {
    /// `2λr (1 - 2rt + r^2)^{-λ-1}`
    pub closed_form: T,
    /// `sum_{m<=N} C_m'(t) r^m`
    pub partial_sum: T,
    pub residual: T,
    /// `2λr * majorant_tail(λ+1, N-1, r)`: bounds the omitted terms, using
    /// `C_m^λ' = 2λ C_{m-1}^{λ+1}`.
    pub tail_budget: T,
    /// A-priori bound on the Horner rounding error in `partial_sum`. Monomial
    /// coefficients of high-degree tables cancel heavily near `|t| = 1`.
    pub rounding_bound: T,
}

impl<T: Field + Float> DerivativeCheck<T> {
    pub fn within(&self, tolerance: T) -> bool {
        self.residual <= tolerance
    }
}

/// Float-mode harness for differentiating the generating function term by term.
pub fn derivative_interchange_check<T: Field + Float>(
    lambda: T,
    t: T,
    r: T,
    order: usize,
) -> Result<DerivativeCheck<T>> {
    check_lambda(&lambda)?;
    if Float::abs(t) > T::one() {
        return Err(domain("t", &t, "[-1, 1]"));
    }
    if !(r >= T::zero() && r < T::one()) {
        return Err(domain("r", &r, "[0, 1)"));
    }
    let closed_form = generating_function_derivative(lambda, t, r);
    let table = table_via_recurrence(&GegenbauerParams::new(lambda, order)?)?;
    let mut partial_sum = T::zero();
    let mut rounding_bound = T::zero();
    let mut power = T::one();
    let u = T::rounding_unit();
    for p in table.polys() {
        let dp = p.derivative();
        partial_sum = partial_sum + dp.eval(&t) * power;
        let magnitude = dp.map(|c| Float::abs(*c)).eval(&Float::abs(t));
        let steps = T::from_count(2 * dp.coeffs().len() + 4);
        rounding_bound = rounding_bound + steps * u * magnitude * power;
        power = power * r;
    }
    // the closed form's own rounding through powf
    rounding_bound = rounding_bound + T::from_count(8) * (T::one() + lambda) * u * closed_form;
    let two = T::one() + T::one();
    let tail_budget = if r.is_zero() {
        T::zero()
    } else if order == 0 {
        two * lambda * r * majorant_closed_form(&(lambda + T::one()), &r)?
    } else {
        two * lambda * r * majorant_tail(&(lambda + T::one()), order - 1, &r)?
    };
    Ok(DerivativeCheck {
        closed_form,
        partial_sum,
        residual: Float::abs(closed_form - partial_sum),
        tail_budget,
        rounding_bound,
    })
}

/// The `t = 1` specialization `sum_m C_m^λ(1) r^m`, truncated; mostly a test aid.
pub fn majorant_partial_sum<F: Field>(lambda: &F, r: &F, order: usize) -> F {
    let mut power = F::one();
    let mut sum = F::zero();
    for m in 0..=order {
        sum = sum + value_at_one(lambda, m) * power.clone();
        power = power * r.clone();
    }
    sum
}
