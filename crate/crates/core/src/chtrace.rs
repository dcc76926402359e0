//! Newton's identities and the formal Cayley–Hamilton polynomial.
//!
//! The elementary symmetric function `sigma_i` is written as a polynomial in
//! the power sums `s_1..s_i`. The degree-`n` Cayley–Hamilton polynomial
//! built from traces `tr(a^j)` is
//!
//! ```text
//! chi(t) = t^n - sigma_1 t^{n-1} + sigma_2 t^{n-2} - ... + (-1)^n sigma_n
//! ```
//!
//! i.e. the coefficient of `t^{n-i}` is `(-1)^i sigma_i(s_1..s_i)`. These are
//! the signs of `det(t - a)`, which is what makes `chi(a) = 0` hold.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::mpoly::MPoly;
use crate::scalar::{Field, Rational, ScalarJson};

/// Polynomial in formal power sums `s_1, s_2, ...` (variable `j-1` is `s_j`).
pub type PowerSumPoly = MPoly;

/// `sigma_i` in terms of `s_1..s_i` via
/// `sigma_i = (1/i) * sum_{j=1..i} (-1)^{j-1} sigma_{i-j} s_j`, `sigma_0 = 1`.
pub fn newton_sigma(i: usize) -> PowerSumPoly {
    newton_sigmas(i).pop().expect("at least sigma_0")
}

/// `[sigma_0, ..., sigma_i]`, all as polynomials in `i` variables.
pub fn newton_sigmas(i: usize) -> Vec<PowerSumPoly> {
    let nvars = i.max(1);
    let mut sigmas = vec![MPoly::one(nvars)];
    for m in 1..=i {
        let mut acc = MPoly::zero(nvars);
        for j in 1..=m {
            let term = &sigmas[m - j] * &MPoly::var(nvars, j - 1);
            acc = if j % 2 == 1 { acc + term } else { acc - term };
        }
        sigmas.push(acc.scale(&Rational::new(1.into(), (m as i64).into())));
    }
    sigmas
}

pub fn power_sum_name(index: usize) -> String {
    format!("s{}", index + 1)
}

/// `t^n + c_{n-1} t^{n-1} + ... + c_0`.
#[derive(Clone, Debug, PartialEq)]
pub struct CHPolynomial<F> {
    /// `c_0, ..., c_{n-1}` (the leading coefficient 1 is implicit).
    coeffs: Vec<F>,
}

impl<F: Field> CHPolynomial<F> {
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn lower_coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// All coefficients `c_0..c_n`, ascending, including the leading 1.
    pub fn coeffs_ascending(&self, sample: &F) -> Vec<F> {
        let mut v = self.coeffs.clone();
        v.push(sample.one_like());
        v
    }

    /// `chi(a)` by Horner's rule.
    pub fn evaluate_matrix(&self, a: &Matrix<F>) -> Matrix<F> {
        let n = a.rows();
        let sample = a.get(0, 0);
        let mut acc = Matrix::identity_like(n, sample);
        for c in self.coeffs.iter().rev() {
            acc = &acc * a + Matrix::scalar_like(n, c.clone());
        }
        acc
    }

    pub fn evaluate(&self, t: &F) -> F {
        let mut acc = t.one_like();
        for c in self.coeffs.iter().rev() {
            acc = acc * t.clone() + c.clone();
        }
        acc
    }
}

impl<F: Field + ScalarJson> CHPolynomial<F> {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(ScalarJson::to_json).collect())
    }
}

impl fmt::Display for CHPolynomial<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut all = self.coeffs.clone();
        all.push(Rational::from_integer(1.into()));
        crate::upoly::write_univariate(f, &all, "t")
    }
}

/// Builds `chi` from the power sums `[tr(a), tr(a^2), ..., tr(a^n)]`.
pub fn ch_polynomial<F: Field>(n: usize, traces: &[F]) -> Result<CHPolynomial<F>> {
    if traces.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: traces.len(),
        });
    }
    let Some(sample) = traces.first() else {
        return Ok(CHPolynomial { coeffs: Vec::new() });
    };
    // Same recursion as `newton_sigma`, run on values.
    let mut sigma = vec![sample.one_like()];
    for m in 1..=n {
        let mut acc = sample.zero_like();
        for j in 1..=m {
            let term = sigma[m - j].clone() * traces[j - 1].clone();
            acc = if j % 2 == 1 { acc + term } else { acc - term };
        }
        let inv_m = sample
            .from_rational_like(&Rational::from_integer((m as i64).into()))
            .inv()?;
        sigma.push(acc * inv_m);
    }
    // coefficient of t^{n-i} is (-1)^i sigma_i
    let coeffs = (0..n)
        .map(|pos| {
            let i = n - pos;
            if i % 2 == 0 {
                sigma[i].clone()
            } else {
                -sigma[i].clone()
            }
        })
        .collect();
    Ok(CHPolynomial { coeffs })
}

/// `[tr(a), tr(a^2), ..., tr(a^n)]`.
pub fn power_traces<F: Field>(a: &Matrix<F>) -> Vec<F> {
    let n = a.rows();
    let mut out = Vec::with_capacity(n);
    let mut p = a.clone();
    for i in 0..n {
        if i > 0 {
            p = &p * a;
        }
        out.push(p.trace());
    }
    out
}

#[derive(Clone, Debug)]
pub struct CHVerification<F> {
    pub polynomial: CHPolynomial<F>,
    pub residual: Matrix<F>,
    pub holds: bool,
}

/// Evaluates the trace-built Cayley–Hamilton polynomial at `a`.
pub fn verify_ch<F: Field>(a: &Matrix<F>) -> Result<CHVerification<F>> {
    if !a.is_square() || a.rows() == 0 {
        return Err(Error::SizeMismatch(format!(
            "Cayley-Hamilton check needs a nonempty square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let polynomial = ch_polynomial(a.rows(), &power_traces(a))?;
    let residual = polynomial.evaluate_matrix(a);
    let holds = residual.is_zero_matrix();
    Ok(CHVerification {
        polynomial,
        residual,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{int_matrix, matrix_unit};
    use crate::scalar::{int, rat};

    #[test]
    fn sigma_one_is_first_power_sum() {
        assert_eq!(newton_sigma(1), MPoly::var(1, 0));
    }

    #[test]
    fn sigma_two_and_three() {
        let s = |i| MPoly::var(3, i);
        let s2 = newton_sigma(2);
        let expected2 = (MPoly::var(2, 0) * MPoly::var(2, 0) - MPoly::var(2, 1)).scale(&rat(1, 2));
        assert_eq!(s2, expected2);
        let expected3 = (s(0) * s(0) * s(0) - (s(0) * s(1)).scale(&int(3)) + s(2).scale(&int(2)))
            .scale(&rat(1, 6));
        assert_eq!(newton_sigma(3), expected3);
    }

    #[test]
    fn ch_examples() {
        let p = ch_polynomial(1, &[int(5)]).unwrap();
        assert_eq!(p.lower_coeffs(), &[int(-5)]);
        assert_eq!(p.to_string(), "t - 5");
        let id = ch_polynomial(2, &[int(2), int(2)]).unwrap();
        assert_eq!(id.to_string(), "t^2 - 2t + 1");
        let d = ch_polynomial(2, &[int(3), int(5)]).unwrap();
        assert_eq!(d.lower_coeffs(), &[int(2), int(-3)]);
        assert_eq!(
            ch_polynomial(2, &[int(1)]),
            Err(Error::LengthMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn verify_examples() {
        let id = int_matrix(&[&[1, 0], &[0, 1]]);
        let v = verify_ch(&id).unwrap();
        assert!(v.holds);
        assert!(v.residual.is_zero_matrix());

        let e12 = matrix_unit(2, 0, 1);
        let v = verify_ch(&e12).unwrap();
        assert!(v.holds);
        assert_eq!(v.polynomial.to_string(), "t^2");

        let a = int_matrix(&[&[2, -1, 3], &[0, 5, 1], &[4, 4, -2]]);
        assert!(verify_ch(&a).unwrap().holds);
    }

    #[test]
    fn trace_axioms_on_matrices() {
        let r = int_matrix(&[&[1, 2, 0], &[3, -1, 4], &[0, 1, 1]]);
        let s = int_matrix(&[&[0, 1, 1], &[2, 2, -3], &[1, 0, 5]]);
        assert_eq!((&r * &s).trace(), (&s * &r).trace());
        let tr_r = Matrix::scalar_like(3, r.trace());
        assert_eq!((&tr_r * &s).trace(), r.trace() * s.trace());
        assert_eq!(&tr_r * &s, &s * &tr_r);
    }
}
