//! Gegenbauer polynomials `C_m^λ(t)`, the coefficients of `r^m` in
//! `(1 - 2rt + r^2)^{-λ}`.
//!
//! Three independent routes produce them: expanding the generating function
//! as a composed series with polynomial coefficients, multiplying the two
//! conjugate binomial factors `(1 - r e^{±iφ})^{-λ}` at `t = cos φ`, and the
//! classical three-term recurrence. They are meant to be checked against each
//! other.

mod conjugate;
mod convergence;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pochhammer::{gamma_ratio_coefficient, signed_binomial};
use crate::polynomial::Polynomial;
use crate::scalar::Field;
use crate::series::compose_inner_polynomial;

pub use conjugate::{value_via_conjugate_product, value_via_conjugate_product_with, ConjugateValue};
pub use convergence::{
    generating_partial_sum, majorant_partial_sum,
    derivative_interchange_check, generating_function, generating_function_derivative,
    majorant_tail, DerivativeCheck,
};

/// Default comparison tolerances for float-mode checks.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Relative tolerance (floored at absolute 1 in magnitude) for route agreement.
    pub route_rel: f64,
    /// Allowed `|imag| / (1 + |real|)` of the conjugate-product coefficient.
    pub imag_residue: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            route_rel: 1e-9,
            imag_residue: 1e-10,
        }
    }
}

impl Tolerances {
    /// `|a - b| <= route_rel * max(1, |b|)`
    pub fn routes_agree(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.route_rel * b.abs().max(1.0)
    }
}

/// `λ > 0` together with the highest degree to tabulate.
#[derive(Clone, Debug, PartialEq)]
pub struct GegenbauerParams<F> {
    lambda: F,
    order: usize,
}

impl<F: Field> GegenbauerParams<F> {
    pub fn new(lambda: F, order: usize) -> Result<Self> {
        check_lambda(&lambda)?;
        Ok(Self { lambda, order })
    }

    pub fn lambda(&self) -> &F {
        &self.lambda
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

pub(crate) fn check_lambda<F: Field>(lambda: &F) -> Result<()> {
    if lambda.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositiveLambda(lambda.to_literal()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Composition,
    ConjugateProduct,
    Recurrence,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::Composition => "composition",
            Route::ConjugateProduct => "conjugate_product",
            Route::Recurrence => "recurrence",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Route {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "composition" => Ok(Route::Composition),
            "conjugate_product" | "conjugate-product" => Ok(Route::ConjugateProduct),
            "recurrence" => Ok(Route::Recurrence),
            other => Err(format!("unknown route {other:?}")),
        }
    }
}

/// `[C_0^λ, ..., C_N^λ]` and the route that produced them.
#[derive(Clone, Debug, PartialEq)]
pub struct GegenbauerTable<F> {
    params: GegenbauerParams<F>,
    polys: Vec<Polynomial<F>>,
    route: Route,
}

impl<F: Field> GegenbauerTable<F> {
    pub fn params(&self) -> &GegenbauerParams<F> {
        &self.params
    }

    pub fn lambda(&self) -> &F {
        &self.params.lambda
    }

    pub fn order(&self) -> usize {
        self.params.order
    }

    pub fn route(&self) -> Route {
        self.route
    }

    pub fn polys(&self) -> &[Polynomial<F>] {
        &self.polys
    }

    pub fn poly(&self, m: usize) -> Result<&Polynomial<F>> {
        self.polys.get(m).ok_or(Error::OutOfRange {
            index: m,
            order: self.order(),
        })
    }
}

/// Expands `sum_j binom(-λ, j) (r^2 - 2tr)^j` with coefficients in `Q[t]`.
///
/// Exact fields only.
pub fn table_via_composition<F: Field>(params: &GegenbauerParams<F>) -> Result<GegenbauerTable<F>> {
    if !F::EXACT {
        return Err(Error::ExactOnly("the composition route"));
    }
    let n = params.order;
    let outer: Vec<Polynomial<F>> = (0..=n)
        .map(|j| Polynomial::constant(signed_binomial(&params.lambda, j)))
        .collect();
    let minus_two_t = Polynomial::monomial(-F::from_count(2), 1);
    let inner = Polynomial::new(vec![Polynomial::zero(), minus_two_t, Polynomial::one()]);
    let series = compose_inner_polynomial(|j| outer[j].clone(), &inner, n)?;
    Ok(GegenbauerTable {
        params: params.clone(),
        polys: series.into_coeffs(),
        route: Route::Composition,
    })
}

/// `C_0 = 1`, `C_1 = 2λt`, `m C_m = 2t(m+λ-1) C_{m-1} - (m+2λ-2) C_{m-2}`.
pub fn table_via_recurrence<F: Field>(params: &GegenbauerParams<F>) -> Result<GegenbauerTable<F>> {
    let lambda = &params.lambda;
    let two = F::from_count(2);
    let mut polys: Vec<Polynomial<F>> = Vec::with_capacity(params.order + 1);
    polys.push(Polynomial::one());
    for m in 1..=params.order {
        let prev = &polys[m - 1];
        let a = two.clone() * (F::from_count(m) + lambda.clone() - F::one());
        let mut next = prev.shift(1).scale(&a);
        if m >= 2 {
            let b = F::from_count(m) + two.clone() * lambda.clone() - two.clone();
            next = next - polys[m - 2].scale(&b);
        }
        let inv_m = F::one().checked_div(&F::from_count(m))?;
        polys.push(next.scale(&inv_m));
    }
    Ok(GegenbauerTable {
        params: params.clone(),
        polys,
        route: Route::Recurrence,
    })
}

/// `C_m^λ(1) = (2λ)_m / m!`.
pub fn value_at_one<F: Field>(lambda: &F, m: usize) -> F {
    gamma_ratio_coefficient(&(F::from_count(2) * lambda.clone()), m)
}

/// Horner evaluation of `C_m` from a table.
pub fn evaluate<F: Field>(table: &GegenbauerTable<F>, m: usize, t: &F) -> Result<F> {
    Ok(table.poly(m)?.eval(t))
}
