//! Rising factorials and the Gamma-function ratios built from them.
//!
//! Gamma itself is never evaluated: every ratio `Γ(x+m)/Γ(x)` is the finite
//! product `x (x+1) ... (x+m-1)`.

use crate::scalar::Field;

/// Rising factorial `(x)_m = x (x+1) ... (x+m-1)`; `(x)_0 = 1`.
pub fn pochhammer<F: Field>(x: &F, m: usize) -> F {
    (0..m).fold(F::one(), |acc, j| acc * (x.clone() + F::from_count(j)))
}

/// `(lambda)_m / m!`, accumulated as `prod (lambda + k) / (k + 1)` so that
/// float evaluation never overflows through the factorial.
pub fn gamma_ratio_coefficient<F: Field>(lambda: &F, m: usize) -> F {
    let mut acc = F::one();
    for k in 0..m {
        // k + 1 >= 1, so the division cannot fail
        acc = acc * (lambda.clone() + F::from_count(k))
            .checked_div(&F::from_count(k + 1))
            .expect("nonzero divisor");
    }
    acc
}

/// The first `count` coefficients `(lambda)_k / k!`, k = 0..count.
pub fn gamma_ratio_coefficients<F: Field>(lambda: &F, count: usize) -> Vec<F> {
    let mut out = Vec::with_capacity(count);
    let mut acc = F::one();
    for k in 0..count {
        if k > 0 {
            acc = acc
                * (lambda.clone() + F::from_count(k - 1))
                    .checked_div(&F::from_count(k))
                    .expect("nonzero divisor");
        }
        out.push(acc.clone());
    }
    out
}

/// `binom(-lambda, m) = (-1)^m (lambda)_m / m!`.
pub fn signed_binomial<F: Field>(lambda: &F, m: usize) -> F {
    let value = gamma_ratio_coefficient(lambda, m);
    if m % 2 == 0 {
        value
    } else {
        -value
    }
}
