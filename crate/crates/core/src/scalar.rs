//! Exact scalars: rationals and elements of cyclotomic fields `Q(zeta_N)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::upoly::UPoly;

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Commutative or noncommutative ring elements that carry enough context to
/// produce their own zero and one (a cyclotomic element knows its field, a
/// matrix knows its size).
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Image of a rational under the structure map `Q -> R`.
    fn from_rational_like(&self, r: &Rational) -> Self;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

pub trait Field: Ring {
    fn inv(&self) -> Result<Self>;
}

/// Scalars that can be written into and read back from reports.
pub trait ScalarJson: Sized {
    fn to_json(&self) -> Value;
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        r.clone()
    }
}

impl Field for Rational {
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

impl ScalarJson for Rational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Format(format!("not a rational number: `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn phi_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Integer coefficients of the N-th cyclotomic polynomial, ascending degree.
///
/// Computed as `(x^N - 1) / prod_{d | N, d < N} Phi_d(x)` by exact division.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<BigInt>> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(c) = phi_cache().lock().unwrap().get(&n) {
        return c.clone();
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n % d == 0) {
        let div = cyclotomic_polynomial(d);
        num = exact_monic_division(&num, &div);
    }
    let out = Arc::new(num);
    phi_cache().lock().unwrap().insert(n, out.clone());
    out
}

fn exact_monic_division(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for i in (dd..num.len()).rev() {
        let f = rem[i].clone();
        if f.is_zero() {
            continue;
        }
        for (j, c) in den.iter().enumerate() {
            rem[i - dd + j] -= &f * c;
        }
        quot[i - dd] = f;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// An element of `Q(zeta_N) = Q[x] / Phi_N(x)`, stored as the canonical
/// remainder of degree below `phi(N)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(order: u64) -> Self {
        assert!(order >= 1);
        Cyclotomic {
            order,
            coeffs: vec![Rational::zero(); euler_phi(order) as usize],
        }
    }

    pub fn one(order: u64) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u64, r: Rational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = r;
        z
    }

    /// Reduces an arbitrary polynomial in `zeta_N` (ascending coefficients).
    pub fn from_poly(order: u64, poly: Vec<Rational>) -> Self {
        assert!(order >= 1);
        Cyclotomic {
            order,
            coeffs: reduce(order, poly),
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(Zero::is_zero)
    }

    /// Embeds into `Q(zeta_M)` for a multiple `M` of the order, sending
    /// `zeta_N` to `zeta_M^(M/N)`.
    pub fn lift(&self, target: u64) -> Result<Self> {
        if target % self.order != 0 {
            return Err(Error::NotDivisible {
                n: self.order,
                m: target,
            });
        }
        let step = (target / self.order) as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Ok(Self::from_poly(target, poly))
    }

    pub fn pow_signed(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(Ring::pow(&base, e.unsigned_abs() as u32))
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(
            self.order, other.order,
            "cyclotomic elements from different fields"
        );
    }

    pub fn from_json(order: u64, v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => Ok(Self::from_rational(order, parse_rational(s)?)),
            Value::Number(n) => Ok(Self::from_rational(order, parse_rational(&n.to_string())?)),
            Value::Array(items) => {
                let poly = items
                    .iter()
                    .map(|x| match x {
                        Value::String(s) => parse_rational(s),
                        Value::Number(n) => parse_rational(&n.to_string()),
                        _ => Err(Error::Format(format!("bad coefficient {x}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Self::from_poly(order, poly))
            }
            Value::Object(map) => {
                let tagged = map.get("order").and_then(Value::as_u64);
                if tagged.is_some_and(|t| t != order) {
                    return Err(Error::Format(format!(
                        "scalar tagged with order {} inside a field of order {order}",
                        tagged.unwrap()
                    )));
                }
                let coeffs = map
                    .get("coeffs")
                    .ok_or_else(|| Error::Format("cyclotomic scalar without `coeffs`".into()))?;
                Self::from_json(order, coeffs)
            }
            _ => Err(Error::Format(format!("not a scalar: {v}"))),
        }
    }
}

fn reduce(order: u64, mut poly: Vec<Rational>) -> Vec<Rational> {
    let phi = cyclotomic_polynomial(order);
    let d = phi.len() - 1;
    if poly.len() > d {
        for i in (d..poly.len()).rev() {
            if Zero::is_zero(&poly[i]) {
                continue;
            }
            let f = std::mem::replace(&mut poly[i], Rational::zero());
            // x^d = -(phi_0 + ... + phi_{d-1} x^{d-1})
            for (j, c) in phi.iter().enumerate().take(d) {
                if !c.is_zero() {
                    poly[i - d + j] -= &f * Rational::from_integer(c.clone());
                }
            }
        }
    }
    poly.resize(d, Rational::zero());
    poly
}

/// `zeta_N^a`, exponent taken modulo N.
pub fn root_of_unity(order: u64, a: i64) -> Cyclotomic {
    let e = a.rem_euclid(order as i64) as usize;
    let mut poly = vec![Rational::zero(); e + 1];
    poly[e] = Rational::one();
    Cyclotomic::from_poly(order, poly)
}

impl Ring for Cyclotomic {
    fn zero_like(&self) -> Self {
        Cyclotomic::zero(self.order)
    }
    fn one_like(&self) -> Self {
        Cyclotomic::one(self.order)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        Cyclotomic::from_rational(self.order, r.clone())
    }
}

impl Field for Cyclotomic {
    fn inv(&self) -> Result<Self> {
        if Ring::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        let modulus = UPoly::new(
            cyclotomic_polynomial(self.order)
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        );
        let (g, s, _) = UPoly::new(self.coeffs.clone()).ext_gcd(&modulus);
        debug_assert_eq!(g.degree(), Some(0));
        Ok(Cyclotomic::from_poly(self.order, s.into_coeffs()))
    }
}

impl ScalarJson for Cyclotomic {
    fn to_json(&self) -> Value {
        serde_json::json!({
            "order": self.order,
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_order(rhs);
        let d = self.coeffs.len();
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !Zero::is_zero(b) {
                    prod[i + j] += a * b;
                }
            }
        }
        Cyclotomic::from_poly(self.order, prod)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({}; {})", self.order, self)
    }
}

/// Prints as a polynomial in `z{N}`, e.g. `-1`, `z4`, `1/2 + z3`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = format!("z{}", self.order);
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
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
            match d {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !One::is_one(&mag) {
                        write!(f, "{mag}*")?;
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
}
