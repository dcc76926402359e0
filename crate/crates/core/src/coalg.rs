//! Finite-dimensional coalgebras over `Q`: matrix and truncated path
//! coalgebras, axiom checks, convolution duals, grouplikes and
//! skew-primitives.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::chtrace::{ch_polynomial, power_traces};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{parse_rational, Rational};
use crate::upoly::UPoly;

/// Structure constants: `delta[c]` lists `(l, r, x)` for `Δ(c) = Σ x l ⊗ r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    basis: Vec<String>,
    delta: Vec<Vec<(usize, usize, Rational)>>,
    counit: Vec<Rational>,
}

type Tensor2 = BTreeMap<(usize, usize), Rational>;
type Tensor3 = BTreeMap<(usize, usize, usize), Rational>;

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Rational>, k: K, x: Rational) {
    if x.is_zero() {
        return;
    }
    match map.entry(k) {
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += x;
            if o.get().is_zero() {
                o.remove();
            }
        }
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(x);
        }
    }
}

impl Coalgebra {
    /// Validates indices; merges repeated `(l, r)` pairs and drops zeros.
    pub fn new(
        basis: Vec<String>,
        delta: Vec<Vec<(usize, usize, Rational)>>,
        counit: Vec<Rational>,
    ) -> Result<Self> {
        let d = basis.len();
        if delta.len() != d {
            return Err(Error::LengthMismatch {
                expected: d,
                found: delta.len(),
            });
        }
        if counit.len() != d {
            return Err(Error::LengthMismatch {
                expected: d,
                found: counit.len(),
            });
        }
        let mut normalized = Vec::with_capacity(d);
        for terms in delta {
            let mut t = Tensor2::new();
            for (l, r, x) in terms {
                for idx in [l, r] {
                    if idx >= d {
                        return Err(Error::IndexOutOfRange {
                            index: idx,
                            bound: d,
                        });
                    }
                }
                accumulate(&mut t, (l, r), x);
            }
            normalized.push(t.into_iter().map(|((l, r), x)| (l, r, x)).collect());
        }
        Ok(Coalgebra {
            basis,
            delta: normalized,
            counit,
        })
    }

    /// Coalgebra with every basis element grouplike.
    pub fn grouplike_spanned(labels: &[&str]) -> Self {
        let d = labels.len();
        Coalgebra {
            basis: labels.iter().map(|s| s.to_string()).collect(),
            delta: (0..d).map(|i| vec![(i, i, Rational::one())]).collect(),
            counit: vec![Rational::one(); d],
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == label)
    }

    pub fn delta(&self, c: usize) -> &[(usize, usize, Rational)] {
        &self.delta[c]
    }

    pub fn counit(&self) -> &[Rational] {
        &self.counit
    }

    /// `Δ` of a vector given in basis coordinates.
    pub fn apply_delta(&self, v: &[Rational]) -> Tensor2 {
        let mut out = Tensor2::new();
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (l, r, y) in &self.delta[c] {
                accumulate(&mut out, (*l, *r), x * y);
            }
        }
        out
    }

    pub fn apply_counit(&self, v: &[Rational]) -> Rational {
        v.iter().zip(&self.counit).map(|(a, b)| a * b).sum()
    }

    /// Renders `Δ(c)` as text, e.g. `v⊗a + a⊗w`.
    pub fn delta_string(&self, c: usize) -> String {
        if self.delta[c].is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self.delta[c]
            .iter()
            .map(|(l, r, x)| {
                let t = format!("{}⊗{}", self.basis[*l], self.basis[*r]);
                if x.is_one() {
                    t
                } else {
                    format!("{x}*{t}")
                }
            })
            .collect();
        parts.join(" + ")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "basis": self.basis,
            "delta": self
                .delta
                .iter()
                .map(|terms| terms
                    .iter()
                    .map(|(l, r, x)| json!([l, r, x.to_string()]))
                    .collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "counit": self.counit.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        })
    }

    /// Reads `{basis, delta: [[[l, r, coeff]]], counit}`; indices may be
    /// positions or basis labels.
    pub fn from_json(v: &Value) -> Result<Self> {
        let basis: Vec<String> = v
            .get("basis")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Format("coalgebra without `basis` array".into()))?
            .iter()
            .map(|b| {
                b.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| Error::Format(format!("basis label {b} is not a string")))
            })
            .collect::<Result<_>>()?;
        let index = |x: &Value| -> Result<usize> {
            match x {
                Value::Number(n) => n
                    .as_u64()
                    .map(|i| i as usize)
                    .ok_or_else(|| Error::Format(format!("bad index {x}"))),
                Value::String(s) => basis
                    .iter()
                    .position(|b| b == s)
                    .ok_or_else(|| Error::Format(format!("unknown basis label `{s}`"))),
                _ => Err(Error::Format(format!("bad index {x}"))),
            }
        };
        let delta = v
            .get("delta")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Format("coalgebra without `delta` array".into()))?
            .iter()
            .map(|terms| {
                terms
                    .as_array()
                    .ok_or_else(|| Error::Format("delta entry must be a list of triples".into()))?
                    .iter()
                    .map(|t| {
                        let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(|| {
                            Error::Format(format!("delta term {t} is not [l, r, coeff]"))
                        })?;
                        Ok((index(&t[0])?, index(&t[1])?, scalar(&t[2])?))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let counit = v
            .get("counit")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Format("coalgebra without `counit` array".into()))?
            .iter()
            .map(scalar)
            .collect::<Result<Vec<_>>>()?;
        Self::new(basis, delta, counit)
    }
}

fn scalar(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => parse_rational(&n.to_string()),
        _ => Err(Error::Format(format!("not a rational: {v}"))),
    }
}

/// Full matrix coalgebra: `Δ(e_ij) = Σ_k e_ik ⊗ e_kj`, `ε(e_ij) = δ_ij`.
pub fn matrix_coalgebra(n: usize) -> Coalgebra {
    let label = |i: usize, j: usize| {
        if n < 10 {
            format!("e{}{}", i + 1, j + 1)
        } else {
            format!("e{},{}", i + 1, j + 1)
        }
    };
    let idx = |i: usize, j: usize| i * n + j;
    let mut basis = Vec::with_capacity(n * n);
    let mut delta = Vec::with_capacity(n * n);
    let mut counit = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            basis.push(label(i, j));
            delta.push((0..n).map(|k| (idx(i, k), idx(k, j), Rational::one())).collect());
            counit.push(if i == j { Rational::one() } else { Rational::zero() });
        }
    }
    Coalgebra {
        basis,
        delta,
        counit,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<(usize, usize, String)>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(usize, usize, String)>) -> Result<Self> {
        let nv = vertices.len();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::Format(format!("vertex `{v}` declared twice")));
            }
        }
        for (i, (s, t, label)) in arrows.iter().enumerate() {
            for idx in [*s, *t] {
                if idx >= nv {
                    return Err(Error::IndexOutOfRange {
                        index: idx,
                        bound: nv,
                    });
                }
            }
            if arrows[..i].iter().any(|a| a.2 == *label) || vertices.contains(label) {
                return Err(Error::Format(format!("label `{label}` used twice")));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[(usize, usize, String)] {
        &self.arrows
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.vertices,
            "arrows": self
                .arrows
                .iter()
                .map(|(s, t, l)| json!([self.vertices[*s], self.vertices[*t], l]))
                .collect::<Vec<_>>(),
        })
    }

    /// Reads `{vertices: [..], arrows: [[source, target, label], ..]}`.
    pub fn from_json(v: &Value) -> Result<Self> {
        let vertices: Vec<String> = v
            .get("vertices")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Format("quiver without `vertices` array".into()))?
            .iter()
            .map(|x| {
                x.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| Error::Format(format!("vertex {x} is not a string")))
            })
            .collect::<Result<_>>()?;
        let vertex = |x: &Value| -> Result<usize> {
            let s = x
                .as_str()
                .ok_or_else(|| Error::Format(format!("arrow endpoint {x} is not a string")))?;
            vertices
                .iter()
                .position(|v| v == s)
                .ok_or_else(|| Error::Format(format!("arrow endpoint `{s}` is not a vertex")))
        };
        let arrows = v
            .get("arrows")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Format("quiver without `arrows` array".into()))?
            .iter()
            .map(|a| {
                let t = a.as_array().filter(|t| t.len() == 3).ok_or_else(|| {
                    Error::Format(format!("arrow {a} is not [source, target, label]"))
                })?;
                let label = t[2]
                    .as_str()
                    .ok_or_else(|| Error::Format(format!("arrow label {} is not a string", t[2])))?;
                Ok((vertex(&t[0])?, vertex(&t[1])?, label.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(vertices, arrows)
    }
}

/// Paths of length `<= max_len`; `Δ(p) = Σ_{p = p'p''} p' ⊗ p''` over all
/// splittings, with vertices as the trivial factors.
pub fn path_coalgebra(q: &Quiver, max_len: usize) -> Coalgebra {
    // A path is (start vertex, arrow sequence).
    let mut paths: Vec<(usize, Vec<usize>)> = (0..q.vertices.len()).map(|v| (v, vec![])).collect();
    let mut frontier: Vec<usize> = (0..paths.len()).collect();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for &p in &frontier {
            let (start, arrows) = paths[p].clone();
            let end = arrows.last().map_or(start, |&a| q.arrows[a].1);
            for (a, (s, _, _)) in q.arrows.iter().enumerate() {
                if *s == end {
                    let mut ext = arrows.clone();
                    ext.push(a);
                    paths.push((start, ext));
                    next.push(paths.len() - 1);
                }
            }
        }
        frontier = next;
    }
    let index: HashMap<(usize, Vec<usize>), usize> = paths
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let short_labels = q.arrows.iter().all(|a| a.2.chars().count() == 1);
    let label = |(start, arrows): &(usize, Vec<usize>)| {
        if arrows.is_empty() {
            q.vertices[*start].clone()
        } else {
            let names: Vec<&str> = arrows.iter().map(|&a| q.arrows[a].2.as_str()).collect();
            names.join(if short_labels { "" } else { "*" })
        }
    };
    let vertex_after = |start: usize, arrows: &[usize]| arrows.last().map_or(start, |&a| q.arrows[a].1);
    let mut basis = Vec::with_capacity(paths.len());
    let mut delta = Vec::with_capacity(paths.len());
    let mut counit = Vec::with_capacity(paths.len());
    for p in &paths {
        basis.push(label(p));
        let (start, arrows) = p;
        let terms = (0..=arrows.len())
            .map(|i| {
                let left = (*start, arrows[..i].to_vec());
                let right = (vertex_after(*start, &arrows[..i]), arrows[i..].to_vec());
                (index[&left], index[&right], Rational::one())
            })
            .collect();
        delta.push(terms);
        counit.push(if arrows.is_empty() {
            Rational::one()
        } else {
            Rational::zero()
        });
    }
    Coalgebra {
        basis,
        delta,
        counit,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoalgebraLaw {
    Coassociativity,
    LeftCounit,
    RightCounit,
}

impl fmt::Display for CoalgebraLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoalgebraLaw::Coassociativity => "coassociativity",
            CoalgebraLaw::LeftCounit => "left counit",
            CoalgebraLaw::RightCounit => "right counit",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraCheck {
    pub holds: bool,
    /// First basis index at which a law fails, and which law.
    pub counterexample: Option<(usize, CoalgebraLaw)>,
}

/// Compares `(Δ⊗id)Δ` with `(id⊗Δ)Δ` and checks `(ε⊗id)Δ = id = (id⊗ε)Δ`
/// on every basis element.
pub fn check_coassociative(c: &Coalgebra) -> CoalgebraCheck {
    for b in 0..c.dim() {
        let mut left = Tensor3::new();
        let mut right = Tensor3::new();
        let mut lc = BTreeMap::new();
        let mut rc = BTreeMap::new();
        for (l, r, x) in &c.delta[b] {
            for (l2, r2, y) in &c.delta[*l] {
                accumulate(&mut left, (*l2, *r2, *r), x * y);
            }
            for (l2, r2, y) in &c.delta[*r] {
                accumulate(&mut right, (*l, *l2, *r2), x * y);
            }
            accumulate(&mut lc, *r, &c.counit[*l] * x);
            accumulate(&mut rc, *l, &c.counit[*r] * x);
        }
        let id: BTreeMap<usize, Rational> = BTreeMap::from([(b, Rational::one())]);
        let failure = if left != right {
            Some(CoalgebraLaw::Coassociativity)
        } else if lc != id {
            Some(CoalgebraLaw::LeftCounit)
        } else if rc != id {
            Some(CoalgebraLaw::RightCounit)
        } else {
            None
        };
        if let Some(law) = failure {
            return CoalgebraCheck {
                holds: false,
                counterexample: Some((b, law)),
            };
        }
    }
    CoalgebraCheck {
        holds: true,
        counterexample: None,
    }
}

/// The convolution algebra `C*` on the dual basis:
/// `e*_a ★ e*_b = Σ_c Δ_c[a, b] e*_c`, unit `ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualAlgebra {
    dim: usize,
    products: BTreeMap<(usize, usize), BTreeMap<usize, Rational>>,
    unit: Vec<Rational>,
}

pub fn dual_algebra(c: &Coalgebra) -> DualAlgebra {
    let mut products: BTreeMap<(usize, usize), BTreeMap<usize, Rational>> = BTreeMap::new();
    for (b, terms) in c.delta.iter().enumerate() {
        for (l, r, x) in terms {
            accumulate(products.entry((*l, *r)).or_default(), b, x.clone());
        }
    }
    products.retain(|_, v| !v.is_empty());
    DualAlgebra {
        dim: c.dim(),
        products,
        unit: c.counit.clone(),
    }
}

impl DualAlgebra {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    /// `e*_a ★ e*_b` in coordinates.
    pub fn basis_product(&self, a: usize, b: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        if let Some(p) = self.products.get(&(a, b)) {
            for (c, x) in p {
                out[*c] = x.clone();
            }
        }
        out
    }

    pub fn nonzero_products(&self) -> impl Iterator<Item = (&(usize, usize), &BTreeMap<usize, Rational>)> {
        self.products.iter()
    }

    pub fn mul(&self, f: &[Rational], g: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for ((a, b), p) in &self.products {
            if f[*a].is_zero() || g[*b].is_zero() {
                continue;
            }
            let w = &f[*a] * &g[*b];
            for (c, x) in p {
                out[*c] += &w * x;
            }
        }
        out
    }

    pub fn is_associative(&self) -> bool {
        let e = |i: usize| {
            let mut v = vec![Rational::zero(); self.dim];
            v[i] = Rational::one();
            v
        };
        (0..self.dim).all(|a| {
            (0..self.dim).all(|b| {
                let ab = self.basis_product(a, b);
                (0..self.dim).all(|c| {
                    let bc = self.basis_product(b, c);
                    self.mul(&ab, &e(c)) == self.mul(&e(a), &bc)
                })
            })
        })
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|a| (a..self.dim).all(|b| self.basis_product(a, b) == self.basis_product(b, a)))
    }

    pub fn unit_law_holds(&self, f: &[Rational]) -> bool {
        self.mul(&self.unit, f) == f && self.mul(f, &self.unit) == f
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim,
            "unit": self.unit.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "products": self
                .products
                .iter()
                .map(|((a, b), p)| json!([a, b, p
                    .iter()
                    .map(|(c, x)| json!([c, x.to_string()]))
                    .collect::<Vec<_>>()]))
                .collect::<Vec<_>>(),
        })
    }
}

/// Incremental row echelon form over `Q` with sparse rows; each stored row
/// is normalized so its pivot (smallest column) has coefficient 1.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    ncols: usize,
    rows: BTreeMap<usize, BTreeMap<usize, Rational>>,
}

impl SparseEchelon {
    pub fn new(ncols: usize) -> Self {
        SparseEchelon {
            ncols,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut row: BTreeMap<usize, Rational>) -> BTreeMap<usize, Rational> {
        row.retain(|_, v| !v.is_zero());
        while let Some((&lead, x)) = row.iter().next() {
            let Some(p) = self.rows.get(&lead) else { break };
            let x = x.clone();
            for (c, y) in p {
                let e = row.entry(*c).or_insert_with(Rational::zero);
                *e -= &x * y;
            }
            row.retain(|_, v| !v.is_zero());
        }
        row
    }

    /// Adds a row; returns false if it was already in the span.
    pub fn insert(&mut self, row: BTreeMap<usize, Rational>) -> bool {
        let row = self.reduce(row);
        let Some((&lead, x)) = row.iter().next() else {
            return false;
        };
        let inv = x.recip();
        let row = row.into_iter().map(|(c, y)| (c, y * &inv)).collect();
        self.rows.insert(lead, row);
        true
    }

    pub fn contains(&self, row: BTreeMap<usize, Rational>) -> bool {
        self.reduce(row).is_empty()
    }

    /// Basis of the solution space of the homogeneous system.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.rows.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Rational::zero(); self.ncols];
                x[f] = Rational::one();
                for (&p, row) in self.rows.iter().rev() {
                    let s: Rational = row
                        .iter()
                        .filter(|(c, _)| **c != p)
                        .map(|(c, y)| y * &x[*c])
                        .sum();
                    x[p] = -s;
                }
                x
            })
            .collect()
    }
}

fn sparse(v: &[Rational]) -> BTreeMap<usize, Rational> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// True iff `Δv = v ⊗ v` and `ε(v) = 1`.
pub fn is_grouplike(c: &Coalgebra, v: &[Rational]) -> bool {
    if c.apply_counit(v) != Rational::one() {
        return false;
    }
    let mut square = Tensor2::new();
    for (a, x) in v.iter().enumerate() {
        for (b, y) in v.iter().enumerate() {
            accumulate(&mut square, (a, b), x * y);
        }
    }
    c.apply_delta(v) == square
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrouplikeMethod {
    /// All rational solutions of `Δc = c ⊗ c`.
    Exact,
    /// Only single basis vectors were tested.
    BasisScan,
}

impl fmt::Display for GrouplikeMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GrouplikeMethod::Exact => "exact",
            GrouplikeMethod::BasisScan => "basis-scan",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrouplikeReport {
    pub method: GrouplikeMethod,
    pub elements: Vec<Vec<Rational>>,
}

/// Largest dimension for which grouplikes are solved exactly.
pub const EXACT_GROUPLIKE_DIM: usize = 12;

/// Rational grouplikes. Up to [`EXACT_GROUPLIKE_DIM`] they are found as the
/// characters of the dual algebra; above it only basis vectors are tested.
pub fn grouplikes(c: &Coalgebra) -> GrouplikeReport {
    let mut elements = if c.dim() <= EXACT_GROUPLIKE_DIM {
        exact_grouplikes(c)
    } else {
        (0..c.dim())
            .map(|i| {
                let mut v = vec![Rational::zero(); c.dim()];
                v[i] = Rational::one();
                v
            })
            .filter(|v| is_grouplike(c, v))
            .collect()
    };
    elements.sort_by(|a, b| {
        let lead = |v: &[Rational]| v.iter().position(|x| !x.is_zero());
        lead(a).cmp(&lead(b)).then_with(|| a.cmp(b))
    });
    GrouplikeReport {
        method: if c.dim() <= EXACT_GROUPLIKE_DIM {
            GrouplikeMethod::Exact
        } else {
            GrouplikeMethod::BasisScan
        },
        elements,
    }
}

fn exact_grouplikes(c: &Coalgebra) -> Vec<Vec<Rational>> {
    let a = dual_algebra(c);
    let d = a.dim;
    // Two-sided ideal generated by commutators: characters vanish on it.
    let mut ideal = SparseEchelon::new(d);
    let mut gens: Vec<Vec<Rational>> = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let comm: Vec<Rational> = a
                .basis_product(i, j)
                .into_iter()
                .zip(a.basis_product(j, i))
                .map(|(x, y)| x - y)
                .collect();
            if ideal.insert(sparse(&comm)) {
                gens.push(comm);
            }
        }
    }
    let mut k = 0;
    while k < gens.len() {
        let g = gens[k].clone();
        for i in 0..d {
            let mut e = vec![Rational::zero(); d];
            e[i] = Rational::one();
            for p in [a.mul(&e, &g), a.mul(&g, &e)] {
                if ideal.insert(sparse(&p)) {
                    gens.push(p);
                }
            }
        }
        k += 1;
    }
    // Quotient B = A / I with basis the non-pivot coordinates.
    let complement: Vec<usize> = (0..d).filter(|i| !ideal.rows.contains_key(i)).collect();
    if complement.is_empty() {
        return Vec::new();
    }
    let project = |v: &[Rational]| -> Vec<Rational> {
        let r = ideal.reduce(sparse(v));
        complement
            .iter()
            .map(|i| r.get(i).cloned().unwrap_or_else(Rational::zero))
            .collect()
    };
    let lift = |i: usize| {
        let mut v = vec![Rational::zero(); d];
        v[complement[i]] = Rational::one();
        v
    };
    let db = complement.len();
    // Multiplication operators L_b of B (columns = images of basis vectors).
    let mult: Vec<Matrix<Rational>> = (0..db)
        .map(|i| {
            let cols: Vec<Vec<Rational>> = (0..db).map(|j| project(&a.mul(&lift(i), &lift(j)))).collect();
            Matrix::from_fn(db, db, |r, s| cols[s][r].clone())
        })
        .collect();
    let unit_b = project(&a.unit);

    // Branch over joint eigenspaces of the transposes L_b^T acting on B*.
    let mut branches: Vec<(Matrix<Rational>, Vec<Rational>)> = vec![(
        Matrix::from_fn(db, db, |r, s| Rational::from_integer((r == s).into())),
        Vec::new(),
    )];
    for l in &mult {
        let lt = l.transpose();
        let mut next = Vec::new();
        for (w, eig) in branches {
            for (lambda, w2) in eigenspaces(&lt, &w) {
                let mut e = eig.clone();
                e.push(lambda);
                next.push((w2, e));
            }
        }
        branches = next;
    }
    let mut out = Vec::new();
    for (_, eig) in branches {
        // The character would be chi(b_i) = lambda_i; confirm it.
        let chi = |v: &[Rational]| -> Rational { v.iter().zip(&eig).map(|(x, y)| x * y).sum() };
        if chi(&unit_b) != Rational::one() {
            continue;
        }
        let psi: Vec<Rational> = (0..d)
            .map(|i| {
                let mut e = vec![Rational::zero(); d];
                e[i] = Rational::one();
                chi(&project(&e))
            })
            .collect();
        if is_grouplike(c, &psi) && !out.contains(&psi) {
            out.push(psi);
        }
    }
    out
}

/// Rational eigenvalues of `op` restricted to the invariant subspace spanned
/// by the columns of `w`, with the corresponding eigenspaces.
fn eigenspaces(op: &Matrix<Rational>, w: &Matrix<Rational>) -> Vec<(Rational, Matrix<Rational>)> {
    let dim = w.cols();
    if dim == 0 {
        return Vec::new();
    }
    // Coordinates X of op restricted: w * X = op * w.
    let image = op * w;
    let mut aug = Matrix::from_fn(w.rows(), dim + dim, |r, s| {
        if s < dim {
            w.get(r, s).clone()
        } else {
            image.get(r, s - dim).clone()
        }
    });
    aug = aug.rref().0;
    let x = Matrix::from_fn(dim, dim, |r, s| aug.get(r, dim + s).clone());
    let chi = ch_polynomial(dim, &power_traces(&x)).expect("traces match size");
    let poly = UPoly::new(chi.coeffs_ascending(&Rational::one()));
    poly.rational_roots()
        .into_iter()
        .map(|lambda| {
            let shifted = x.clone() - Matrix::scalar_like(dim, lambda.clone());
            let ker = shifted.kernel();
            let sub = Matrix::from_fn(dim, ker.len(), |r, s| ker[s][r].clone());
            (lambda, w * &sub)
        })
        .collect()
}

/// Basis of `{x : Δx = g ⊗ x + x ⊗ h}` for grouplikes `g`, `h`.
pub fn skew_primitives(c: &Coalgebra, g: &[Rational], h: &[Rational]) -> Vec<Vec<Rational>> {
    skew_primitive_system(c, g, h).kernel()
}

/// The linear system `Σ_i x_i Δ_i[a, b] - g_a x_b - x_a h_b = 0`, one row per
/// `(a, b)` that can be nonzero.
pub fn skew_primitive_system(c: &Coalgebra, g: &[Rational], h: &[Rational]) -> SparseEchelon {
    let d = c.dim();
    let mut eqs: BTreeMap<(usize, usize), BTreeMap<usize, Rational>> = BTreeMap::new();
    for (i, terms) in c.delta.iter().enumerate() {
        for (l, r, x) in terms {
            accumulate(eqs.entry((*l, *r)).or_default(), i, x.clone());
        }
    }
    for a in 0..d {
        if !g[a].is_zero() {
            for b in 0..d {
                accumulate(eqs.entry((a, b)).or_default(), b, -g[a].clone());
            }
        }
    }
    for b in 0..d {
        if !h[b].is_zero() {
            for a in 0..d {
                accumulate(eqs.entry((a, b)).or_default(), a, -h[b].clone());
            }
        }
    }
    let mut sys = SparseEchelon::new(d);
    for (_, row) in eqs {
        if sys.rank() == d {
            break;
        }
        sys.insert(row);
    }
    sys
}

/// True iff `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    let mut e = SparseEchelon::new(v.len());
    for b in basis {
        e.insert(sparse(b));
    }
    e.contains(sparse(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn unit_vec(d: usize, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); d];
        v[i] = Rational::one();
        v
    }

    fn quiver(vertices: &[&str], arrows: &[(usize, usize, &str)]) -> Quiver {
        Quiver::new(
            vertices.iter().map(|s| s.to_string()).collect(),
            arrows.iter().map(|(s, t, l)| (*s, *t, l.to_string())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn matrix_coalgebra_examples() {
        let c = matrix_coalgebra(2);
        assert_eq!(c.dim(), 4);
        assert_eq!(c.delta_string(c.index_of("e12").unwrap()), "e11⊗e12 + e12⊗e22");
        for n in 1..=4 {
            let c = matrix_coalgebra(n);
            assert_eq!(c.dim(), n * n);
            assert!(check_coassociative(&c).holds);
        }
        let one = matrix_coalgebra(1);
        assert_eq!(grouplikes(&one).elements, vec![vec![int(1)]]);
        assert!(grouplikes(&matrix_coalgebra(2)).elements.is_empty());
    }

    #[test]
    fn corrupted_coalgebra_fails() {
        let c = matrix_coalgebra(2);
        let mut delta: Vec<Vec<_>> = (0..4).map(|i| c.delta(i).to_vec()).collect();
        delta[1].remove(0);
        let bad = Coalgebra::new(c.basis().to_vec(), delta, c.counit().to_vec()).unwrap();
        let check = check_coassociative(&bad);
        assert!(!check.holds);
        // Δ(e11) contains e12⊗e21, so e11 is already affected.
        assert_eq!(check.counterexample, Some((0, CoalgebraLaw::Coassociativity)));
    }

    #[test]
    fn path_coalgebra_examples() {
        let single = path_coalgebra(&quiver(&["v"], &[]), 0);
        assert_eq!(single.delta_string(0), "v⊗v");
        assert_eq!(single.counit(), &[int(1)]);

        let q = quiver(&["v", "w", "x"], &[(0, 1, "a"), (1, 2, "b")]);
        let c = path_coalgebra(&q, 2);
        assert_eq!(c.basis(), &["v", "w", "x", "a", "b", "ab"]);
        assert_eq!(c.delta_string(3), "v⊗a + a⊗w");
        assert_eq!(c.delta_string(5), "v⊗ab + a⊗b + ab⊗x");
        assert!(check_coassociative(&c).holds);

        let report = grouplikes(&c);
        assert_eq!(report.method, GrouplikeMethod::Exact);
        assert_eq!(report.elements, vec![unit_vec(6, 0), unit_vec(6, 1), unit_vec(6, 2)]);
        let sp = skew_primitives(&c, &unit_vec(6, 0), &unit_vec(6, 1));
        assert!(in_span(&sp, &unit_vec(6, 3)));
        // v - w is also (v, w)-skew-primitive.
        let mut diff = unit_vec(6, 0);
        diff[1] = int(-1);
        assert!(in_span(&sp, &diff));
        assert_eq!(sp.len(), 2);
    }

    #[test]
    fn loops_and_truncation() {
        let q = quiver(&["v"], &[(0, 0, "a")]);
        let c = path_coalgebra(&q, 4);
        assert_eq!(c.dim(), 5);
        assert!(check_coassociative(&c).holds);
        assert_eq!(grouplikes(&c).elements, vec![unit_vec(5, 0)]);
    }

    #[test]
    fn dual_of_matrix_coalgebra_is_matrix_algebra() {
        let n = 3;
        let a = dual_algebra(&matrix_coalgebra(n));
        assert!(a.is_associative());
        for (i, j, k, l) in (0..81).map(|x| (x / 27, x / 9 % 3, x / 3 % 3, x % 3)) {
            let expected = if j == k { unit_vec(9, i * n + l) } else { vec![Rational::zero(); 9] };
            assert_eq!(a.basis_product(i * n + j, k * n + l), expected);
        }
        let f: Vec<Rational> = (0..9).map(|i| int(i as i64 - 4)).collect();
        assert!(a.unit_law_holds(&f));
    }

    #[test]
    fn dual_of_grouplike_spanned() {
        let c = Coalgebra::grouplike_spanned(&["g", "h", "k"]);
        let a = dual_algebra(&c);
        assert!(a.is_commutative());
        for i in 0..3 {
            assert_eq!(a.basis_product(i, i), unit_vec(3, i));
        }
        assert_eq!(grouplikes(&c).elements.len(), 3);
    }

    #[test]
    fn non_basis_grouplikes_are_found() {
        // Change of basis: g, g + h in a grouplike-spanned coalgebra.
        // With p = g and r = g + h: Δp = p⊗p, Δr = Δg + Δh
        // = p⊗p + (r - p)⊗(r - p).
        let c = Coalgebra::new(
            vec!["p".into(), "r".into()],
            vec![
                vec![(0, 0, int(1))],
                vec![(0, 0, int(2)), (0, 1, int(-1)), (1, 0, int(-1)), (1, 1, int(1))],
            ],
            vec![int(1), int(2)],
        )
        .unwrap();
        assert!(check_coassociative(&c).holds);
        let g = grouplikes(&c).elements;
        // g = p, h = r - p
        assert_eq!(g, vec![vec![int(-1), int(1)], vec![int(1), int(0)]]);
    }

    #[test]
    fn json_round_trips() {
        let c = path_coalgebra(&quiver(&["v", "w"], &[(0, 1, "a"), (1, 0, "b")]), 3);
        assert_eq!(Coalgebra::from_json(&c.to_json()).unwrap(), c);
        let q = quiver(&["v", "w"], &[(0, 1, "a")]);
        assert_eq!(Quiver::from_json(&q.to_json()).unwrap(), q);
    }
}
