//! The convolution identity
//!
//! ```text
//! sum_{k=0}^{m} (λ)_k (λ)_{m-k} / (k! (m-k)!) = (2λ)_m / m!
//! ```
//!
//! as an executable check. The left side is `C_m^λ(1)` read off the conjugate
//! product, the right side is `C_m^λ(1)` read off `(1 - r)^{-2λ}`.

use rayon::prelude::*;

use crate::error::Result;
use crate::gegenbauer::check_lambda;
use crate::pochhammer::{gamma_ratio_coefficient, gamma_ratio_coefficients};
use crate::scalar::Field;

/// Default pass threshold for float residuals.
pub const DEFAULT_FLOAT_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Outcome {
    Exact { equal: bool },
    /// `|lhs - rhs| / max(1, |rhs|)`
    Float { residual: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport<F> {
    pub lambda: F,
    pub m: usize,
    pub lhs: F,
    pub rhs: F,
    pub outcome: Outcome,
}

impl<F: Field> IdentityReport<F> {
    fn new(lambda: F, m: usize, lhs: F, rhs: F) -> Self {
        let outcome = if F::EXACT {
            Outcome::Exact { equal: lhs == rhs }
        } else {
            let (l, r) = (lhs.to_f64(), rhs.to_f64());
            Outcome::Float {
                residual: (l - r).abs() / r.abs().max(1.0),
            }
        };
        Self {
            lambda,
            m,
            lhs,
            rhs,
            outcome,
        }
    }

    /// Exact reports pass on equality; float reports when the residual is within `tolerance`.
    pub fn passes(&self, tolerance: f64) -> bool {
        match self.outcome {
            Outcome::Exact { equal } => equal,
            Outcome::Float { residual } => residual <= tolerance,
        }
    }

    pub fn residual(&self) -> Option<f64> {
        match self.outcome {
            Outcome::Exact { .. } => None,
            Outcome::Float { residual } => Some(residual),
        }
    }
}

/// `sum_{k=0}^{m} a_k a_{m-k}` with `a_k = (λ)_k / k!`, summed left to right.
pub fn identity_lhs<F: Field>(lambda: &F, m: usize) -> F {
    lhs_from_coeffs(&gamma_ratio_coefficients(lambda, m + 1), m)
}

fn lhs_from_coeffs<F: Field>(coeffs: &[F], m: usize) -> F {
    (0..=m).fold(F::zero(), |acc, k| {
        acc + coeffs[k].clone() * coeffs[m - k].clone()
    })
}

/// `(2λ)_m / m!`.
pub fn identity_rhs<F: Field>(lambda: &F, m: usize) -> F {
    gamma_ratio_coefficient(&(F::from_count(2) * lambda.clone()), m)
}

pub fn verify<F: Field>(lambda: &F, m: usize) -> Result<IdentityReport<F>> {
    check_lambda(lambda)?;
    Ok(IdentityReport::new(
        lambda.clone(),
        m,
        identity_lhs(lambda, m),
        identity_rhs(lambda, m),
    ))
}

/// Reports for every `(λ, m)` with `m <= m_max`, ordered by `λ` (input order) then `m`.
///
/// Work items run in parallel; the result does not depend on the schedule.
pub fn sweep<F: Field>(lambdas: &[F], m_max: usize) -> Result<Vec<IdentityReport<F>>> {
    for lambda in lambdas {
        check_lambda(lambda)?;
    }
    let per_lambda: Vec<(Vec<F>, Vec<F>)> = lambdas
        .par_iter()
        .map(|lambda| {
            let two_lambda = F::from_count(2) * lambda.clone();
            (
                gamma_ratio_coefficients(lambda, m_max + 1),
                gamma_ratio_coefficients(&two_lambda, m_max + 1),
            )
        })
        .collect();
    let items: Vec<(usize, usize)> = (0..lambdas.len())
        .flat_map(|i| (0..=m_max).map(move |m| (i, m)))
        .collect();
    Ok(items
        .into_par_iter()
        .map(|(i, m)| {
            let (coeffs, rhs) = &per_lambda[i];
            IdentityReport::new(lambdas[i].clone(), m, lhs_from_coeffs(coeffs, m), rhs[m].clone())
        })
        .collect())
}
