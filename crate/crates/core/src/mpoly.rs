//! Sparse commutative polynomials over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::scalar::{Rational, Ring};

/// Polynomial in `nvars` variables; keys are dense exponent vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !Zero::is_zero(&c) {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(e, Rational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if Zero::is_zero(&c) {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if Zero::is_zero(o.get()) {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    /// Evaluates at `values`, which must have one entry per variable; `one`
    /// fixes the target ring.
    pub fn eval<R: Ring>(&self, one: &R, values: &[R]) -> R {
        assert_eq!(values.len(), self.nvars, "wrong number of values");
        let mut acc = one.zero_like();
        for (e, c) in &self.terms {
            let mut m = one.from_rational_like(c);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    m = m * values[i].pow(k);
                }
            }
            acc = acc + m;
        }
        acc
    }

    /// Display with a caller-supplied variable namer.
    pub fn display_with<'a, N: Fn(usize) -> String + 'a>(
        &'a self,
        name: N,
    ) -> impl fmt::Display + 'a {
        MPolyDisplay { poly: self, name }
    }
}

struct MPolyDisplay<'a, N> {
    poly: &'a MPoly,
    name: N,
}

impl<N: Fn(usize) -> String> fmt::Display for MPolyDisplay<'_, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.terms.is_empty() {
            return write!(f, "0");
        }
        // Largest exponent vectors first so leading variables lead.
        for (idx, (e, c)) in self.poly.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        (self.name)(i)
                    } else {
                        format!("{}^{k}", (self.name)(i))
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !One::is_one(&mag) {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(|i| format!("v{i}")))
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        self + (-rhs)
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(mut self) -> MPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Ring for MPoly {
    fn zero_like(&self) -> Self {
        MPoly::zero(self.nvars)
    }
    fn one_like(&self) -> Self {
        MPoly::one(self.nvars)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        MPoly::constant(self.nvars, r.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn binomial_square() {
        let x = MPoly::var(2, 0);
        let y = MPoly::var(2, 1);
        let s = (x.clone() + y.clone()) * (x + y);
        assert_eq!(s.coeff(&[1, 1]), int(2));
        assert_eq!(s.coeff(&[2, 0]), int(1));
        assert_eq!(s.num_terms(), 3);
        assert_eq!(s.eval(&int(1), &[int(2), int(3)]), int(25));
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = MPoly::var(1, 0);
        assert!(Ring::is_zero(&(x.clone() - x)));
    }
}
