//! Dense univariate polynomials over the rationals.
//!
//! Used for cyclotomic reduction and inversion, characteristic polynomials,
//! and exact rational root isolation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Rational;

/// Coefficients are stored in ascending degree order with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * x^d`.
    pub fn monomial(c: Rational, d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let f = &rem[i] * &lc_inv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let t = &f * d;
                rem[i - dd + j] -= t;
            }
            quot[i - dd] = f;
        }
        rem.truncate(dd);
        (UPoly::new(quot), UPoly::new(rem))
    }

    pub fn rem(&self, divisor: &UPoly) -> UPoly {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &UPoly) -> (UPoly, UPoly, UPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UPoly::constant(Rational::one()), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::constant(Rational::one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            Some(lc) => {
                let inv = lc.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            None => (r0, s0, t0),
        }
    }

    /// Squarefree part (monic).
    pub fn squarefree(&self) -> UPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// All distinct rational roots, in increasing order.
    ///
    /// Exact: the roots of the squarefree part are isolated with a Sturm
    /// sequence, each isolating interval is shrunk below `1/D^2` where `D`
    /// bounds the denominator of any rational root, and the simplest
    /// fraction in the interval is tested by exact evaluation.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut roots = Vec::new();
        let mut p = self.squarefree();
        if p.coeff(0).is_zero() {
            roots.push(Rational::zero());
            p = p.div_rem(&UPoly::x()).0;
        }
        if p.degree().unwrap_or(0) == 0 {
            return roots;
        }
        // Primitive integer form: the leading coefficient bounds denominators.
        let lcm_den = p
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm_den.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let lead = (ints.last().unwrap() / &content).abs();
        let max_den = Rational::from_integer(lead.clone());
        let width_bound = (&max_den * &max_den).recip() / Rational::from_integer(2.into());

        let lc = p.leading().unwrap().abs();
        let bound = p
            .coeffs
            .iter()
            .map(|c| c.abs() / &lc)
            .fold(Rational::zero(), |a, b| if b > a { b } else { a })
            + Rational::one();

        let sturm = sturm_sequence(&p);
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            let count = sign_variations(&sturm, &lo) - sign_variations(&sturm, &hi);
            if count == 0 {
                continue;
            }
            if count == 1 && &hi - &lo < width_bound {
                if let Some(r) = simplest_between(&lo, &hi) {
                    if r.denom() <= &lead && p.eval(&r).is_zero() {
                        roots.push(r);
                    }
                }
                continue;
            }
            let mid = (&lo + &hi) / Rational::from_integer(2.into());
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
        roots.sort();
        roots.dedup();
        roots
    }
}

fn sturm_sequence(p: &UPoly) -> Vec<UPoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-r);
    }
    seq
}

fn sign_variations(seq: &[UPoly], x: &Rational) -> i64 {
    let mut count = 0;
    let mut last: Option<bool> = None;
    for q in seq {
        let v = q.eval(x);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if let Some(l) = last {
            if l != pos {
                count += 1;
            }
        }
        last = Some(pos);
    }
    count
}

/// The fraction with smallest denominator in the closed interval `[lo, hi]`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Option<Rational> {
    if lo > hi {
        return None;
    }
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return Some(Rational::zero());
    }
    if hi.is_negative() {
        return simplest_between(&-hi, &-lo).map(|r| -r);
    }
    // 0 < lo <= hi: continued fraction descent.
    let fl = lo.floor();
    if fl == *lo {
        return Some(fl);
    }
    if fl.clone() + Rational::one() <= *hi {
        return Some(fl + Rational::one());
    }
    let inner = simplest_between(&(hi - &fl).recip(), &(lo - &fl).recip())?;
    Some(fl + inner.recip())
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
}

impl Neg for UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_univariate(f, &self.coeffs, "t")
    }
}

/// Writes `c_d t^d + ... + c_0` with signs folded into the separators.
pub(crate) fn write_univariate(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[Rational],
    var: &str,
) -> fmt::Result {
    let mut first = true;
    for (d, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        let unit = mag.is_one();
        match d {
            0 => write!(f, "{mag}")?,
            _ => {
                if !unit {
                    write!(f, "{mag}")?;
                }
                write!(f, "{var}")?;
                if d > 1 {
                    write!(f, "^{d}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = UPoly::from_ints(&[-1, 0, 0, 0, 1]);
        let b = UPoly::from_ints(&[1, 1]);
        let (quot, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(&quot * &b, a);
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = UPoly::from_ints(&[1, 0, 1]);
        let b = UPoly::from_ints(&[2, 3]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, UPoly::from_ints(&[1]));
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn rational_roots_of_products() {
        // (2t - 1)(t + 3)^2 (t^2 + 1) t
        let f = &(&(&UPoly::from_ints(&[-1, 2]) * &UPoly::from_ints(&[3, 1]))
            * &UPoly::from_ints(&[3, 1]))
            * &(&UPoly::from_ints(&[1, 0, 1]) * &UPoly::x());
        assert_eq!(
            f.rational_roots(),
            vec![q(-3, 1), q(0, 1), q(1, 2)]
        );
        assert!(UPoly::from_ints(&[-2, 0, 1]).rational_roots().is_empty());
        assert_eq!(
            UPoly::new(vec![q(-7, 3), q(1, 5)]).rational_roots(),
            vec![q(35, 3)]
        );
    }

    #[test]
    fn close_roots_are_separated() {
        // roots 1/7 and 1/6
        let f = &UPoly::from_ints(&[-1, 7]) * &UPoly::from_ints(&[-1, 6]);
        assert_eq!(f.rational_roots(), vec![q(1, 7), q(1, 6)]);
    }

    #[test]
    fn simplest_fraction() {
        assert_eq!(simplest_between(&q(3, 10), &q(4, 10)), Some(q(1, 3)));
        assert_eq!(simplest_between(&q(-4, 10), &q(-3, 10)), Some(q(-1, 3)));
        assert_eq!(simplest_between(&q(5, 2), &q(5, 2)), Some(q(5, 2)));
    }

    #[test]
    fn display() {
        assert_eq!(UPoly::from_ints(&[1, -2, 1]).to_string(), "t^2 - 2t + 1");
        assert_eq!(UPoly::zero().to_string(), "0");
    }
}
