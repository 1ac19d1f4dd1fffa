//! Truncated formal power series in a formal variable `r`.

use std::ops::{Add, Mul};


use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::scalar::{Field, Ring};

/// Coefficients `c_0..=c_N` of a power series kept modulo `r^(N+1)`.
///
/// `N` is the truncation order, not the degree: trailing zeros are kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    /// Builds a series of order `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least one coefficient");
        Self { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| R::zero())
    }

    pub fn one(order: usize) -> Self {
        Self::from_fn(order, |m| if m == 0 { R::one() } else { R::zero() })
    }

    /// A polynomial in `r` viewed as a series of the given order.
    pub fn from_polynomial(p: &Polynomial<R>, order: usize) -> Self {
        Self::from_fn(order, |m| p.coeff(m))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `r^m`.
    ///
    /// # Panics
    /// If `m` exceeds the truncation order.
    pub fn coeff(&self, m: usize) -> &R {
        &self.coeffs[m]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Multiplies coefficient `m` by `factor(m)`; substituting `x = w r` uses `factor(m) = w^m`.
    pub fn scale_powers(&self, mut factor: impl FnMut(usize) -> R) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(m, c)| c.clone() * factor(m))
                .collect(),
        }
    }

    /// Product with a polynomial in `r`, keeping this series' order.
    ///
    /// Costs `O(N * nnz(p))` ring operations.
    pub fn mul_polynomial(&self, p: &Polynomial<R>) -> Self {
        let n = self.order();
        let mut out = vec![R::zero(); n + 1];
        for (shift, pc) in p.coeffs().iter().enumerate().take(n + 1) {
            if pc.is_zero() {
                continue;
            }
            for (m, c) in self.coeffs[..=n - shift].iter().enumerate() {
                out[m + shift] = out[m + shift].clone() + c.clone() * pc.clone();
            }
        }
        Self { coeffs: out }
    }
}

/// Coefficient-wise sum; the result has order `min(a.order, b.order)`.
pub fn series_add<R: Ring>(a: &TruncatedSeries<R>, b: &TruncatedSeries<R>) -> TruncatedSeries<R> {
    let n = a.order().min(b.order());
    TruncatedSeries::from_fn(n, |m| a.coeffs[m].clone() + b.coeffs[m].clone())
}

/// Cauchy product `c_m = sum_{k<=m} a_k b_{m-k}` up to order `min(a.order, b.order)`.
///
/// Terms `k` and `m - k` are added to each other before being accumulated, so
/// in floating point the result is exactly commutative and a product of two
/// conjugate series has exactly real coefficients.
pub fn series_mul<R: Ring>(a: &TruncatedSeries<R>, b: &TruncatedSeries<R>) -> TruncatedSeries<R> {
    let n = a.order().min(b.order());
    let (a, b) = (&a.coeffs, &b.coeffs);
    TruncatedSeries::from_fn(n, |m| {
        let mut acc = R::zero();
        let (mut lo, mut hi) = (0, m);
        while lo < hi {
            let pair = a[lo].clone() * b[hi].clone() + a[hi].clone() * b[lo].clone();
            acc = acc + pair;
            lo += 1;
            hi -= 1;
        }
        if lo == hi {
            acc = acc + a[lo].clone() * b[lo].clone();
        }
        acc
    })
}

impl<R: Ring> Add for TruncatedSeries<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        series_add(&self, &rhs)
    }
}

impl<R: Ring> Mul for TruncatedSeries<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        series_mul(&self, &rhs)
    }
}

/// Expansion of `(1 + x)^exponent` to order `order`: coefficient `m` is
/// `binom(exponent, m)`, built from the falling factorial.
pub fn binomial_series<F: Field>(exponent: &F, order: usize) -> TruncatedSeries<F> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut acc = F::one();
    coeffs.push(acc.clone());
    for j in 0..order {
        acc = acc
            * (exponent.clone() - F::from_count(j))
                .checked_div(&F::from_count(j + 1))
                .expect("nonzero divisor");
        coeffs.push(acc.clone());
    }
    TruncatedSeries { coeffs }
}

/// Truncated composition `sum_j outer(j) * inner(r)^j` collected by powers of `r`.
///
/// `inner` is a polynomial in `r` with zero constant term, so only
/// `j = 0..=order` contribute. Evaluated Horner-style from `j = order` down.
pub fn compose_inner_polynomial<R: Ring>(
    outer: impl Fn(usize) -> R,
    inner: &Polynomial<R>,
    order: usize,
) -> Result<TruncatedSeries<R>> {
    if !inner.coeff(0).is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let mut acc = TruncatedSeries::zero(order);
    for j in (0..=order).rev() {
        acc = acc.mul_polynomial(inner);
        acc.coeffs[0] = acc.coeffs[0].clone() + outer(j);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pochhammer::{gamma_ratio_coefficient, signed_binomial};
    use crate::Rational;
    use num_complex::Complex;
    use proptest::prelude::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    fn ints(c: &[i64]) -> TruncatedSeries<Rational> {
        TruncatedSeries::from_coeffs(c.iter().map(|&p| q(p, 1)).collect())
    }

    #[test]
    fn add_examples() {
        assert_eq!(series_add(&ints(&[1, 1]), &ints(&[1, -1])), ints(&[2, 0]));
        let a = ints(&[3, 1, 4, 1, 5]);
        assert_eq!(series_add(&a, &TruncatedSeries::zero(2)), ints(&[3, 1, 4]));
        assert_eq!(series_add(&ints(&[1, 2, 3, 4]), &ints(&[0, 0, 0, 0, 0, 0])).order(), 3);
    }

    #[test]
    fn mul_examples() {
        // geometric times (1 - r) telescopes, trailing zeros kept
        let p = series_mul(&ints(&[1, 1, 1, 1]), &ints(&[1, -1, 0, 0]));
        assert_eq!(p, ints(&[1, 0, 0, 0]));
        assert_eq!(p.order(), 3);
        let a = ints(&[2, -7, 1, 8, 2]);
        assert_eq!(series_mul(&a, &TruncatedSeries::one(4)), a);
        assert_eq!(series_mul(&ints(&[1, 1, 1, 1, 1, 1]), &ints(&[1, 1, 1])).order(), 2);
    }

    #[test]
    fn conjugate_product_at_phi_zero_lambda_one() {
        // [(1 - r)(1 - r)]^{-1}: both factors are binom(-1, m)(-1)^m = 1
        let n = 12;
        let factor = binomial_series(&q(-1, 1), n).scale_powers(|m| q(if m % 2 == 0 { 1 } else { -1 }, 1));
        let prod = series_mul(&factor, &factor);
        // brute-force convolution oracle for (1-r)^{-2}
        for m in 0..=n {
            let brute: i64 = (0..=m).map(|_| 1).sum();
            assert_eq!(prod.coeff(m), &q(brute, 1));
            assert_eq!(prod.coeff(m), &q(m as i64 + 1, 1));
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_series(&q(-1, 1), 3), ints(&[1, -1, 1, -1]));
        assert_eq!(binomial_series(&q(2, 1), 4), ints(&[1, 2, 1, 0, 0]));
        assert_eq!(
            binomial_series(&q(-1, 2), 2),
            TruncatedSeries::from_coeffs(vec![q(1, 1), q(-1, 2), q(3, 8)])
        );
        assert_eq!(binomial_series(&q(5, 3), 0), ints(&[1]));
    }

    #[test]
    fn binomial_of_negated_exponent_is_signed_binomial() {
        for lambda in [q(1, 2), q(7, 3), q(10, 1)] {
            let s = binomial_series(&(-lambda.clone()), 40);
            for m in 0..=40 {
                assert_eq!(s.coeff(m), &signed_binomial(&lambda, m));
                let doubled = lambda.clone() * q(2, 1);
                let sd = binomial_series(&(-doubled.clone()), m);
                let sign = q(if m % 2 == 0 { 1 } else { -1 }, 1);
                assert_eq!(sd.coeff(m).clone() * sign, gamma_ratio_coefficient(&doubled, m));
            }
        }
    }

    #[test]
    fn compose_examples() {
        let r = Polynomial::new(vec![q(0, 1), q(1, 1)]);
        assert_eq!(compose_inner_polynomial(|_| q(1, 1), &r, 3).unwrap(), ints(&[1, 1, 1, 1]));
        // (1 - u)^{-1} with u = 2tr - r^2 at t = 1 is (1 - r)^{-2}
        let u = Polynomial::new(vec![q(0, 1), q(2, 1), q(-1, 1)]);
        let outer = |j: usize| signed_binomial(&q(1, 1), j) * q(if j % 2 == 0 { 1 } else { -1 }, 1);
        assert_eq!(compose_inner_polynomial(outer, &u, 3).unwrap(), ints(&[1, 2, 3, 4]));
        let bad = Polynomial::new(vec![q(1, 1), q(1, 1)]);
        assert_eq!(
            compose_inner_polynomial(|_| q(1, 1), &bad, 3),
            Err(Error::NonzeroConstantTerm)
        );
        assert_eq!(compose_inner_polynomial(|_| q(4, 1), &u, 0).unwrap(), ints(&[4]));
    }

    /// Multiplies out (r^2 - 2tr)^j one factor at a time and sums.
    fn brute_force_compose(
        outer: &[Rational],
        t: &Rational,
        order: usize,
    ) -> Vec<Rational> {
        let mut total = vec![q(0, 1); order + 1];
        let factor = [q(0, 1), -(q(2, 1) * t.clone()), q(1, 1)];
        for (j, w) in outer.iter().enumerate() {
            let mut power = vec![q(1, 1)];
            for _ in 0..j {
                let mut next = vec![q(0, 1); power.len() + 2];
                for (a, pa) in power.iter().enumerate() {
                    for (b, fb) in factor.iter().enumerate() {
                        next[a + b] += pa.clone() * fb.clone();
                    }
                }
                power = next;
            }
            for (m, c) in power.iter().enumerate().take(order + 1) {
                total[m] += w.clone() * c.clone();
            }
        }
        total
    }

    #[test]
    fn compose_matches_brute_force() {
        for order in 0..=12usize {
            for (lambda, t) in [(q(1, 2), q(1, 3)), (q(7, 3), q(-2, 5)), (q(3, 1), q(1, 1))] {
                let outer: Vec<Rational> = (0..=order).map(|j| signed_binomial(&lambda, j)).collect();
                let inner = Polynomial::new(vec![q(0, 1), -(q(2, 1) * t.clone()), q(1, 1)]);
                let got = compose_inner_polynomial(|j| outer[j].clone(), &inner, order).unwrap();
                assert_eq!(got.coeffs(), brute_force_compose(&outer, &t, order).as_slice());
            }
        }
    }

    #[test]
    fn conjugate_factor_product_is_real() {
        for &lambda in &[0.25f64, 0.5, 1.0, 7.0 / 3.0, 5.5, 10.0] {
            for step in 0..=16 {
                let phi = std::f64::consts::PI * step as f64 / 16.0;
                let n = 50;
                let base = binomial_series(&(-lambda), n).map(|&c| Complex::new(c, 0.0));
                let sign = |m: usize| if m % 2 == 0 { 1.0 } else { -1.0 };
                let plus = base.scale_powers(|m| Complex::from_polar(sign(m), m as f64 * phi));
                let minus = base.scale_powers(|m| Complex::from_polar(sign(m), -(m as f64) * phi));
                let prod = series_mul(&plus, &minus);
                for c in prod.coeffs() {
                    assert!(c.im.abs() <= 1e-12 * (1.0 + c.re.abs()), "lambda={lambda} phi={phi}: {c}");
                }
            }
        }
    }

    fn rational_series(order: usize) -> impl Strategy<Value = TruncatedSeries<Rational>> {
        proptest::collection::vec((-20i64..=20, 1i64..=6), order + 1)
            .prop_map(|v| TruncatedSeries::from_coeffs(v.into_iter().map(|(p, d)| q(p, d)).collect()))
    }

    fn rational_triple() -> impl Strategy<Value = [TruncatedSeries<Rational>; 3]> {
        (0usize..=64).prop_flat_map(|n| {
            (rational_series(n), rational_series(n), rational_series(n)).prop_map(|(a, b, c)| [a, b, c])
        })
    }

    fn float_triple() -> impl Strategy<Value = [TruncatedSeries<f64>; 3]> {
        (0usize..=64).prop_flat_map(|n| {
            let s = || proptest::collection::vec(0.0f64..4.0, n + 1).prop_map(TruncatedSeries::from_coeffs);
            (s(), s(), s()).prop_map(|(a, b, c)| [a, b, c])
        })
    }

    fn close(a: &TruncatedSeries<f64>, b: &TruncatedSeries<f64>) -> bool {
        a.coeffs()
            .iter()
            .zip(b.coeffs())
            .all(|(x, y)| (x - y).abs() <= 1e-12 * x.abs().max(y.abs()).max(1e-300))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn exact_cauchy_ring_axioms([a, b, c] in rational_triple()) {
            prop_assert_eq!(series_mul(&a, &b), series_mul(&b, &a));
            prop_assert_eq!(series_mul(&series_mul(&a, &b), &c), series_mul(&a, &series_mul(&b, &c)));
            prop_assert_eq!(
                series_mul(&a, &series_add(&b, &c)),
                series_add(&series_mul(&a, &b), &series_mul(&a, &c))
            );
            prop_assert_eq!(series_mul(&a, &TruncatedSeries::one(a.order())), a.clone());
        }

        // Nonnegative coefficients keep the relative comparison meaningful.
        #[test]
        fn float_cauchy_ring_axioms([a, b, c] in float_triple()) {
            prop_assert!(close(&series_mul(&a, &b), &series_mul(&b, &a)));
            prop_assert!(close(&series_mul(&series_mul(&a, &b), &c), &series_mul(&a, &series_mul(&b, &c))));
            prop_assert!(close(
                &series_mul(&a, &series_add(&b, &c)),
                &series_add(&series_mul(&a, &b), &series_mul(&a, &c))
            ));
        }

        #[test]
        fn truncation_order_is_min(n1 in 0usize..20, n2 in 0usize..20) {
            let a = TruncatedSeries::<Rational>::one(n1);
            let b = TruncatedSeries::<Rational>::one(n2);
            prop_assert_eq!(series_mul(&a, &b).order(), n1.min(n2));
            prop_assert_eq!(series_add(&a, &b).order(), n1.min(n2));
            prop_assert_eq!(series_mul(&a, &b).coeffs().len(), n1.min(n2) + 1);
        }
    }
}
