//! The level-`n` quantum torus `C_q[U^±, V^±]` with `VU = qUV`, `q = zeta_n`.
//!
//! Coefficients live in `Q(zeta_N)` for a root order `N` divisible by `n`, so
//! `q = zeta_N^(N/n)`. Elements are finite sums of `c * U^i V^j`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lattice::{integer_kernel, ExponentLattice};
use crate::matrep::MatrixTuple;
use crate::matrix::Matrix;
use crate::ncalg::{NCPoly, Word};
use crate::scalar::{root_of_unity, Cyclotomic, Field, Rational, Ring, ScalarJson};

#[derive(Clone, PartialEq, Eq)]
pub struct QTElement {
    level: u64,
    root_order: u64,
    terms: BTreeMap<(i64, i64), Cyclotomic>,
}

fn check_level(level: u64, root_order: u64) -> Result<()> {
    if level == 0 || root_order == 0 || root_order % level != 0 {
        return Err(Error::LevelMismatch(format!(
            "root order {root_order} is not a positive multiple of level {level}"
        )));
    }
    Ok(())
}

impl QTElement {
    pub fn zero(level: u64, root_order: u64) -> Result<Self> {
        check_level(level, root_order)?;
        Ok(QTElement {
            level,
            root_order,
            terms: BTreeMap::new(),
        })
    }

    pub fn one(level: u64, root_order: u64) -> Result<Self> {
        Self::monomial(level, root_order, 0, 0, Cyclotomic::one(root_order))
    }

    /// `c * U^i V^j`.
    pub fn monomial(level: u64, root_order: u64, i: i64, j: i64, c: Cyclotomic) -> Result<Self> {
        let mut x = Self::zero(level, root_order)?;
        x.add_term((i, j), x.coerce(c)?);
        Ok(x)
    }

    pub fn u(level: u64, root_order: u64) -> Result<Self> {
        Self::monomial(level, root_order, 1, 0, Cyclotomic::one(root_order))
    }

    pub fn v(level: u64, root_order: u64) -> Result<Self> {
        Self::monomial(level, root_order, 0, 1, Cyclotomic::one(root_order))
    }

    pub fn from_terms(
        level: u64,
        root_order: u64,
        terms: impl IntoIterator<Item = (i64, i64, Cyclotomic)>,
    ) -> Result<Self> {
        let mut x = Self::zero(level, root_order)?;
        for (i, j, c) in terms {
            let c = x.coerce(c)?;
            x.add_term((i, j), c);
        }
        Ok(x)
    }

    fn coerce(&self, c: Cyclotomic) -> Result<Cyclotomic> {
        if c.order() == self.root_order {
            Ok(c)
        } else {
            c.lift(self.root_order)
        }
    }

    fn add_term(&mut self, e: (i64, i64), c: Cyclotomic) {
        if Ring::is_zero(&c) {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if Ring::is_zero(&sum) {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn root_order(&self) -> u64 {
        self.root_order
    }

    /// The deformation parameter `q = zeta_N^(N/n)`.
    pub fn q(&self) -> Cyclotomic {
        torus_q(self.level, self.root_order)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: i64, j: i64) -> Cyclotomic {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(self.root_order))
    }

    /// The exponent pair of a single-term element.
    pub fn monomial_exponent(&self) -> Option<(i64, i64)> {
        match self.terms.len() {
            1 => self.terms.keys().next().copied(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let mut out = self.zero_like();
        for (e, a) in &self.terms {
            out.add_term(*e, a * c);
        }
        out
    }

    fn same_torus(&self, other: &Self) -> Result<()> {
        if self.level != other.level || self.root_order != other.root_order {
            return Err(Error::LevelMismatch(format!(
                "level {} (root order {}) vs level {} (root order {})",
                self.level, self.root_order, other.level, other.root_order
            )));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|((i, j), c)| json!([i, j, coeff_json(c)]))
            .collect();
        json!({ "level": self.level, "root_order": self.root_order, "terms": terms })
    }

    /// Parses `[[i, j, coeff], ...]` in the given torus.
    pub fn terms_from_json(level: u64, root_order: u64, v: &Value) -> Result<Self> {
        let items = v
            .as_array()
            .ok_or_else(|| Error::Format("terms must be an array of [i, j, coeff]".into()))?;
        let mut x = Self::zero(level, root_order)?;
        for item in items {
            let t = item.as_array().filter(|t| t.len() == 3).ok_or_else(|| {
                Error::Format(format!("term {item} is not a triple [i, j, coeff]"))
            })?;
            let exp = |k: usize| {
                t[k].as_i64()
                    .ok_or_else(|| Error::Format(format!("exponent {} is not an integer", t[k])))
            };
            let c = Cyclotomic::from_json(root_order, &t[2])?;
            x.add_term((exp(0)?, exp(1)?), c);
        }
        Ok(x)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |k: &str| {
            v.get(k)
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Format(format!("element without integer `{k}`")))
        };
        let level = field("level")?;
        let root_order = match v.get("root_order") {
            Some(_) => field("root_order")?,
            None => level,
        };
        let terms = v
            .get("terms")
            .ok_or_else(|| Error::Format("element without `terms`".into()))?;
        Self::terms_from_json(level, root_order, terms)
    }
}

/// Rational coefficients print as `"p/q"`, others as tagged coefficient lists.
pub fn coeff_json(c: &Cyclotomic) -> Value {
    if c.is_rational() {
        Value::String(c.coeffs()[0].to_string())
    } else {
        c.to_json()
    }
}

pub fn torus_q(level: u64, root_order: u64) -> Cyclotomic {
    root_of_unity(root_order, (root_order / level) as i64)
}

/// Product with both operands checked to live in the same torus.
pub fn qt_mul(x: &QTElement, y: &QTElement) -> Result<QTElement> {
    x.same_torus(y)?;
    let n = x.level as i64;
    let step = (x.root_order / x.level) as i64;
    let qpow: Vec<Cyclotomic> = (0..n)
        .map(|e| root_of_unity(x.root_order, e * step))
        .collect();
    let mut out = x.zero_like();
    for (&(a, b), c1) in &x.terms {
        for (&(c, d), c2) in &y.terms {
            // (U^a V^b)(U^c V^d) = q^{bc} U^{a+c} V^{b+d}
            let e = (b * c).rem_euclid(n) as usize;
            out.add_term((a + c, b + d), &(c1 * c2) * &qpow[e]);
        }
    }
    Ok(out)
}

pub fn qt_add(x: &QTElement, y: &QTElement) -> Result<QTElement> {
    x.same_torus(y)?;
    let mut out = x.clone();
    for (e, c) in &y.terms {
        out.add_term(*e, c.clone());
    }
    Ok(out)
}

impl Add for QTElement {
    type Output = QTElement;
    fn add(self, rhs: Self) -> Self {
        qt_add(&self, &rhs).expect("quantum torus elements of different levels")
    }
}

impl Sub for QTElement {
    type Output = QTElement;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for QTElement {
    type Output = QTElement;
    fn mul(self, rhs: Self) -> Self {
        qt_mul(&self, &rhs).expect("quantum torus elements of different levels")
    }
}

impl Neg for QTElement {
    type Output = QTElement;
    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Ring for QTElement {
    fn zero_like(&self) -> Self {
        QTElement {
            level: self.level,
            root_order: self.root_order,
            terms: BTreeMap::new(),
        }
    }
    fn one_like(&self) -> Self {
        self.from_rational_like(&Rational::from_integer(1.into()))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_rational_like(&self, r: &Rational) -> Self {
        let mut out = self.zero_like();
        out.add_term((0, 0), Cyclotomic::from_rational(self.root_order, r.clone()));
        out
    }
}

impl fmt::Display for QTElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let one = Cyclotomic::one(self.root_order);
        for (idx, ((i, j), c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let mut factors = Vec::new();
            let pw = |name: &str, e: i64| match e {
                1 => name.to_string(),
                _ => format!("{name}^{e}"),
            };
            if *i != 0 {
                factors.push(pw("U", *i));
            }
            if *j != 0 {
                factors.push(pw("V", *j));
            }
            let cs = c.to_string();
            let cs = if cs.contains(' ') { format!("({cs})") } else { cs };
            match (factors.is_empty(), *c == one) {
                (true, _) => write!(f, "{cs}")?,
                (false, true) => write!(f, "{}", factors.join("*"))?,
                (false, false) if *c == -one.clone() => write!(f, "-{}", factors.join("*"))?,
                (false, false) => write!(f, "{cs}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QTElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QT[{}/{}]({self})", self.level, self.root_order)
    }
}

/// `U^a V^b` and `U^c V^d` commute iff `bc - ad = 0 (mod n)`.
pub fn monomials_commute(x: [i64; 2], y: [i64; 2], n: u64) -> bool {
    (x[1] * y[0] - x[0] * y[1]).rem_euclid(n as i64) == 0
}

/// Exponents of central monomials: `nZ x nZ`.
pub fn center_lattice(n: u64) -> ExponentLattice {
    let n_i = n as i64;
    ExponentLattice::span(n, &[[n_i, 0], [0, n_i]])
}

/// Exponents `(c, d)` of monomials commuting with every `U^a V^b` in `gens`,
/// i.e. `a d - b c = 0 (mod n)`. Solved as the integer kernel of
/// `a_i d - b_i c - n t_i = 0` in unknowns `(c, d, t_1, ..., t_g)`.
pub fn centralizer_lattice(gens: &[[i64; 2]], n: u64) -> ExponentLattice {
    let g = gens.len();
    let rows: Vec<Vec<i128>> = gens
        .iter()
        .enumerate()
        .map(|(i, [a, b])| {
            let mut row = vec![0i128; 2 + g];
            row[0] = -(*b as i128);
            row[1] = *a as i128;
            row[2 + i] = -(n as i128);
            row
        })
        .collect();
    let kernel = integer_kernel(&rows, 2 + g);
    let projected: Vec<[i64; 2]> = kernel
        .iter()
        .map(|v| {
            [
                i64::try_from(v[0]).expect("kernel entry exceeds i64"),
                i64::try_from(v[1]).expect("kernel entry exceeds i64"),
            ]
        })
        .collect();
    ExponentLattice::span(n, &projected)
}

/// The algebra map `i_{m,n}`: `U_n -> U_m^k`, `V_n -> V_m^k`, `k = m / n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub n: u64,
    pub m: u64,
    pub k: u64,
}

pub fn make_embedding(n: u64, m: u64) -> Result<Embedding> {
    if n == 0 || m == 0 || m % n != 0 {
        return Err(Error::NotDivisible { n, m });
    }
    Ok(Embedding { n, m, k: m / n })
}

impl Embedding {
    /// Generator images as exponent pairs at level `m`.
    pub fn images(&self) -> [(&'static str, [i64; 2]); 2] {
        let k = self.k as i64;
        [("U", [k, 0]), ("V", [0, k])]
    }

    /// Default root order of the target torus for an input of root order `n_src`.
    pub fn target_root_order(&self, source_root_order: u64) -> u64 {
        source_root_order.lcm(&self.m)
    }

    /// Image of `x` (at level `n`) in the level-`m` torus with the given root
    /// order, which must be divisible by `m` and by the root order of `x`.
    pub fn apply(&self, x: &QTElement, root_order: u64) -> Result<QTElement> {
        if x.level != self.n {
            return Err(Error::LevelMismatch(format!(
                "embedding from level {} applied to an element of level {}",
                self.n, x.level
            )));
        }
        let k = self.k as i64;
        // U^i V^j -> (U^k)^i (V^k)^j = U^{ki} V^{kj}
        let mut out = QTElement::zero(self.m, root_order)?;
        for (&(i, j), c) in &x.terms {
            out.add_term((k * i, k * j), c.lift(root_order)?);
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EmbeddingCheck {
    pub n: u64,
    pub m: u64,
    pub k: u64,
    pub passes: bool,
    /// `(k^2 - k) mod m`; zero exactly when the relation is preserved.
    pub obstruction: u64,
}

/// The images satisfy `V^k U^k = q_n U^k V^k` iff `q_m^{k^2} = q_m^k`, i.e.
/// `k^2 = k (mod m)`.
pub fn verify_embedding(n: u64, m: u64) -> Result<EmbeddingCheck> {
    let e = make_embedding(n, m)?;
    let obstruction = (e.k * e.k - e.k) % m;
    Ok(EmbeddingCheck {
        n,
        m,
        k: e.k,
        passes: obstruction == 0,
        obstruction,
    })
}

/// The same check carried out by multiplying the images in the level-`m`
/// torus: returns `V^k * U^k - q_n * U^k * V^k`.
pub fn embedding_relation_residual(n: u64, m: u64) -> Result<QTElement> {
    let e = make_embedding(n, m)?;
    let x = e.apply(&QTElement::u(n, n)?, m)?;
    let y = e.apply(&QTElement::v(n, n)?, m)?;
    let q_n = torus_q(n, n).lift(m)?;
    Ok(qt_mul(&y, &x)? - qt_mul(&x, &y)?.scale(&q_n))
}

fn common_order(orders: &[u64]) -> u64 {
    orders.iter().fold(1, |acc, o| acc.lcm(o))
}

/// Clock-and-shift pair `(mu * S, nu * D)` with `S e_i = e_{i+1 mod n}` and
/// `D = diag(1, q, ..., q^{n-1})`.
pub fn specialize(n: u64, mu: &Cyclotomic, nu: &Cyclotomic) -> Result<MatrixTuple<Cyclotomic>> {
    if Ring::is_zero(mu) {
        return Err(Error::ZeroScalar("mu"));
    }
    if Ring::is_zero(nu) {
        return Err(Error::ZeroScalar("nu"));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("level must be positive".into()));
    }
    let order = common_order(&[n, mu.order(), nu.order()]);
    let (mu, nu) = (mu.lift(order)?, nu.lift(order)?);
    let size = n as usize;
    let step = (order / n) as i64;
    let zero = Cyclotomic::zero(order);
    let u = Matrix::from_fn(size, size, |i, j| {
        if i == (j + 1) % size {
            mu.clone()
        } else {
            zero.clone()
        }
    });
    let v = Matrix::from_fn(size, size, |i, j| {
        if i == j {
            &nu * &root_of_unity(order, step * i as i64)
        } else {
            zero.clone()
        }
    });
    MatrixTuple::new(size, vec![u, v])
}

/// Image of `x` under the clock-and-shift representation with parameters
/// `mu`, `nu`.
pub fn specialize_element(
    x: &QTElement,
    mu: &Cyclotomic,
    nu: &Cyclotomic,
) -> Result<Matrix<Cyclotomic>> {
    let order = common_order(&[x.root_order, mu.order(), nu.order()]);
    let t = specialize(x.level, &mu.lift(order)?, &nu.lift(order)?)?;
    let (u, v) = (t.matrix(0), t.matrix(1));
    let (u_inv, v_inv) = (u.inverse()?, v.inverse()?);
    let power = |m: &Matrix<Cyclotomic>, inv: &Matrix<Cyclotomic>, e: i64| {
        let base = if e < 0 { inv } else { m };
        Ring::pow(base, e.unsigned_abs() as u32)
    };
    let size = x.level as usize;
    let mut acc = Matrix::zeros_like(size, size, &Cyclotomic::zero(order));
    for (&(i, j), c) in &x.terms {
        let term = &power(u, &u_inv, i) * &power(v, &v_inv, j);
        acc = acc + term.scale(&c.lift(order)?);
    }
    Ok(acc)
}

/// Defining relations of the level-`n` fiber in the generators `U, V`:
/// `VU - qUV`, `U^n - s0`, `V^n - t0`.
pub fn torus_relations(
    n: u64,
    root_order: u64,
    s0: &Cyclotomic,
    t0: &Cyclotomic,
) -> Result<Vec<NCPoly<Cyclotomic>>> {
    check_level(n, root_order)?;
    let one = Cyclotomic::one(root_order);
    let q = torus_q(n, root_order);
    let mono = |w: Vec<u32>, c: Cyclotomic| NCPoly::monomial(2, Word(w), c);
    let commutation = &mono(vec![1, 0], one.clone()) - &mono(vec![0, 1], q);
    let s0 = s0.lift(root_order)?;
    let t0 = t0.lift(root_order)?;
    let u_pow = &mono(vec![0; n as usize], one.clone()) - &mono(Vec::new(), s0);
    let v_pow = &mono(vec![1; n as usize], one) - &mono(Vec::new(), t0);
    Ok(vec![commutation, u_pow, v_pow])
}

/// Dimension of `{X : X A_l = A_l X for all l}`.
pub fn commutant_dimension<F: Field>(t: &MatrixTuple<F>) -> usize {
    let n = t.n();
    let Some(sample) = t.matrices().first().map(|m| m.get(0, 0).clone()) else {
        return n * n;
    };
    let zero = sample.zero_like();
    let mut rows = Vec::with_capacity(t.k() * n * n);
    for a in t.matrices() {
        for i in 0..n {
            for j in 0..n {
                // (XA - AX)_{ij} = sum_r x_{ir} a_{rj} - a_{ir} x_{rj}
                let mut row = vec![zero.clone(); n * n];
                for r in 0..n {
                    row[i * n + r] = row[i * n + r].clone() + a.get(r, j).clone();
                    row[r * n + j] = row[r * n + j].clone() - a.get(i, r).clone();
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_rows(rows).expect("rows of equal length");
    n * n - system.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::int_matrix;
    use crate::matrep::relation_residuals;

    fn mono(n: u64, i: i64, j: i64) -> QTElement {
        QTElement::monomial(n, n, i, j, Cyclotomic::one(n)).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let n = 5;
        let (u, v) = (mono(n, 1, 0), mono(n, 0, 1));
        let vu = qt_mul(&v, &u).unwrap();
        assert_eq!(vu, mono(n, 1, 1).scale(&torus_q(n, n)));
        assert_eq!(qt_mul(&u, &mono(n, -1, 0)).unwrap(), QTElement::one(n, n).unwrap());
        let uv = mono(n, 1, 1);
        assert_eq!(qt_mul(&uv, &uv).unwrap(), mono(n, 2, 2).scale(&torus_q(n, n)));
        assert!(matches!(
            qt_mul(&u, &mono(3, 1, 0)),
            Err(Error::LevelMismatch(_))
        ));
    }

    #[test]
    fn q_inside_larger_field() {
        // level 2 inside Q(zeta_4): q = zeta_4^2 = -1
        let x = QTElement::u(2, 4).unwrap();
        assert_eq!(x.q(), Cyclotomic::from_rational(4, Rational::from_integer((-1).into())));
    }

    #[test]
    fn centers() {
        assert!(center_lattice(1).is_full());
        assert_eq!(center_lattice(2).basis(), &[[2, 0], [0, 2]]);
        for n in 1..=8 {
            assert_eq!(centralizer_lattice(&[[1, 0], [0, 1]], n), center_lattice(n));
        }
    }

    #[test]
    fn centralizer_examples() {
        for n in 1..=6i64 {
            let l = centralizer_lattice(&[[n, 0], [0, 1]], n as u64);
            assert_eq!(l, ExponentLattice::span(n as u64, &[[n, 0], [0, 1]]));
        }
        let l = centralizer_lattice(&[[2, 3]], 6);
        assert!(l.contains([2, 3]));
        // level m = 6 = 2 * 3: gens (6,0), (0,3) -> {2 | c}
        let l = centralizer_lattice(&[[6, 0], [0, 3]], 6);
        assert_eq!(l, ExponentLattice::span(6, &[[2, 0], [0, 1]]));
        assert!(centralizer_lattice(&[], 4).is_full());
    }

    #[test]
    fn embeddings() {
        assert_eq!(make_embedding(2, 6).unwrap().k, 3);
        assert_eq!(make_embedding(3, 12).unwrap().k, 4);
        assert_eq!(make_embedding(4, 4).unwrap().k, 1);
        assert_eq!(make_embedding(4, 6), Err(Error::NotDivisible { n: 4, m: 6 }));
        let ok = verify_embedding(2, 6).unwrap();
        assert!(ok.passes && ok.obstruction == 0);
        let bad = verify_embedding(2, 4).unwrap();
        assert!(!bad.passes);
        assert_eq!(bad.obstruction, 2);
        assert!(verify_embedding(5, 5).unwrap().passes);
        assert!(Ring::is_zero(&embedding_relation_residual(2, 6).unwrap()));
        assert!(!Ring::is_zero(&embedding_relation_residual(2, 4).unwrap()));
    }

    #[test]
    fn clock_and_shift() {
        let one = |n| Cyclotomic::one(n);
        let t = specialize(2, &one(2), &one(2)).unwrap();
        let u = t.matrix(0).map(|c| c.coeffs()[0].clone());
        let v = t.matrix(1).map(|c| c.coeffs()[0].clone());
        assert_eq!(u, int_matrix(&[&[0, 1], &[1, 0]]));
        assert_eq!(v, int_matrix(&[&[1, 0], &[0, -1]]));
        for n in 1..=6 {
            let t = specialize(n, &one(n), &one(n)).unwrap();
            let rels = torus_relations(n, n, &one(n), &one(n)).unwrap();
            let res = relation_residuals(&rels, &t, &one(n)).unwrap();
            assert!(res.iter().all(Matrix::is_zero_matrix), "n = {n}");
            assert_eq!(commutant_dimension(&t), 1, "n = {n}");
        }
        assert_eq!(
            specialize(2, &Cyclotomic::zero(2), &one(2)),
            Err(Error::ZeroScalar("mu"))
        );
    }

    #[test]
    fn commutant_examples() {
        let id = MatrixTuple::from_matrices(vec![int_matrix(&[&[1, 0], &[0, 1]])]).unwrap();
        assert_eq!(commutant_dimension(&id), 4);
        let d = MatrixTuple::from_matrices(vec![int_matrix(&[&[1, 0], &[0, 2]])]).unwrap();
        assert_eq!(commutant_dimension(&d), 2);
    }

    #[test]
    fn specialize_element_is_multiplicative() {
        let n = 3;
        let mu = root_of_unity(3, 1);
        let nu = Cyclotomic::from_rational(3, Rational::from_integer(2.into()));
        let x = mono(n, 2, -1) + mono(n, 0, 1);
        let y = mono(n, -1, 1).scale(&root_of_unity(3, 2));
        let lhs = specialize_element(&qt_mul(&x, &y).unwrap(), &mu, &nu).unwrap();
        let rhs = &specialize_element(&x, &mu, &nu).unwrap() * &specialize_element(&y, &mu, &nu).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_round_trip_and_display() {
        let x = mono(4, 1, -2).scale(&root_of_unity(4, 1)) + mono(4, 0, 0);
        assert_eq!(QTElement::from_json(&x.to_json()).unwrap(), x);
        assert_eq!(x.to_string(), "1 + z4*U*V^-2");
        assert_eq!(mono(3, 0, 1).to_string(), "V");
    }
}
