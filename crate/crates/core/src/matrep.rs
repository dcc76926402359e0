//! Representation schemes `rep_n R`: generic matrices, the defining ideal,
//! concrete representations, simultaneous conjugation and trace invariants.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::mpoly::MPoly;
use crate::ncalg::{necklace_basis, NCPoly, Necklace, Presentation, Word};
use crate::scalar::{Field, Rational, Ring};

/// Polynomial in the entries `x_ij(l)` of `k` generic `n x n` matrices.
///
/// Variables are ordered lexicographically by `(l, i, j)`.
pub type CommPoly = MPoly;

/// Position of `x_ij(l)` (all 0-based) in the exponent vectors.
pub fn variable_index(n: usize, l: usize, i: usize, j: usize) -> usize {
    l * n * n + i * n + j
}

/// `x12(1)` style name (1-based) for the variable at `index`.
pub fn variable_name(n: usize, index: usize) -> String {
    let l = index / (n * n);
    let i = (index / n) % n;
    let j = index % n;
    if n < 10 {
        format!("x{}{}({})", i + 1, j + 1, l + 1)
    } else {
        format!("x{},{}({})", i + 1, j + 1, l + 1)
    }
}

#[derive(Clone, Debug)]
pub struct GenericMatrixTuple {
    k: usize,
    n: usize,
    matrices: Vec<Matrix<CommPoly>>,
}

impl GenericMatrixTuple {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.k * self.n * self.n
    }

    pub fn matrices(&self) -> &[Matrix<CommPoly>] {
        &self.matrices
    }

    pub fn identity(&self) -> Matrix<CommPoly> {
        Matrix::identity_like(self.n, &MPoly::zero(self.nvars()))
    }
}

pub fn generic_matrices(k: usize, n: usize) -> GenericMatrixTuple {
    assert!(n >= 1, "matrix size must be positive");
    let nvars = k * n * n;
    let matrices = (0..k)
        .map(|l| Matrix::from_fn(n, n, |i, j| MPoly::var(nvars, variable_index(n, l, i, j))))
        .collect();
    GenericMatrixTuple { k, n, matrices }
}

/// One generator of the ideal of `rep_n R`: entry `(row, col)` of relation
/// `relation` evaluated at the generic matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealGenerator {
    pub relation: usize,
    pub row: usize,
    pub col: usize,
    pub poly: CommPoly,
}

#[derive(Clone, Debug)]
pub struct RepIdeal {
    pub n: usize,
    pub nvars: usize,
    /// `n^2` per relation, zero entries included.
    pub entry_count: usize,
    pub zero_entries: usize,
    /// Nonzero entries only.
    pub generators: Vec<IdealGenerator>,
}

impl RepIdeal {
    /// Evaluates every generator at the point given by a concrete tuple.
    pub fn vanishes_at<F: Field>(&self, t: &MatrixTuple<F>, one: &F) -> bool {
        let point = tuple_point(t);
        self.generators.iter().all(|g| g.poly.eval(one, &point).is_zero())
    }
}

pub fn rep_ideal(pres: &Presentation, n: usize) -> RepIdeal {
    let generic = generic_matrices(pres.ngens(), n);
    let one = generic.identity();
    let mut generators = Vec::new();
    let mut zero_entries = 0;
    for (r, rel) in pres.relations().iter().enumerate() {
        let m = rel
            .evaluate_in(&one, generic.matrices())
            .expect("generic tuple matches the generator count");
        for i in 0..n {
            for j in 0..n {
                let p = m.get(i, j);
                if p.is_zero() {
                    zero_entries += 1;
                } else {
                    generators.push(IdealGenerator {
                        relation: r,
                        row: i,
                        col: j,
                        poly: p.clone(),
                    });
                }
            }
        }
    }
    RepIdeal {
        n,
        nvars: generic.nvars(),
        entry_count: pres.relations().len() * n * n,
        zero_entries,
        generators,
    }
}

/// `k` square matrices of a common size `n` over an exact field.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixTuple<F> {
    n: usize,
    matrices: Vec<Matrix<F>>,
}

impl<F: Field> MatrixTuple<F> {
    pub fn new(n: usize, matrices: Vec<Matrix<F>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("matrix size must be positive".into()));
        }
        for (l, m) in matrices.iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(Error::SizeMismatch(format!(
                    "matrix {} is {}x{}, expected {n}x{n}",
                    l + 1,
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(MatrixTuple { n, matrices })
    }

    pub fn from_matrices(matrices: Vec<Matrix<F>>) -> Result<Self> {
        let n = matrices
            .first()
            .map(Matrix::rows)
            .ok_or_else(|| Error::InvalidArgument("empty tuple".into()))?;
        Self::new(n, matrices)
    }

    pub fn k(&self) -> usize {
        self.matrices.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrices(&self) -> &[Matrix<F>] {
        &self.matrices
    }

    pub fn matrix(&self, l: usize) -> &Matrix<F> {
        &self.matrices[l]
    }
}

/// Entries in `(l, i, j)` order, matching [`variable_index`].
pub fn tuple_point<F: Field>(t: &MatrixTuple<F>) -> Vec<F> {
    t.matrices
        .iter()
        .flat_map(|m| m.entries().iter().cloned())
        .collect()
}

fn unit_of<F: Field>(t: &MatrixTuple<F>, sample: &F) -> Matrix<F> {
    Matrix::identity_like(t.n, sample)
}

/// The value of each relation at `t` (the zero matrix where it holds).
pub fn relation_residuals<F: Field>(
    relations: &[NCPoly<F>],
    t: &MatrixTuple<F>,
    sample: &F,
) -> Result<Vec<Matrix<F>>> {
    let one = unit_of(t, sample);
    relations
        .iter()
        .map(|rel| {
            if rel.ngens() != t.k() {
                return Err(Error::SizeMismatch(format!(
                    "relation on {} generators, tuple of {} matrices",
                    rel.ngens(),
                    t.k()
                )));
            }
            rel.evaluate(&one, t.matrices(), |c, m| m.scale(c))
        })
        .collect()
}

/// Lifts the rational relations of a presentation into the field of `t`.
pub fn lift_relations<F: Field>(pres: &Presentation, sample: &F) -> Vec<NCPoly<F>> {
    pres.relations()
        .iter()
        .map(|r| r.map_coeffs(|c| sample.from_rational_like(c)))
        .collect()
}

/// True iff every relation of `pres` evaluates to the zero matrix at `t`.
pub fn is_representation<F: Field>(pres: &Presentation, t: &MatrixTuple<F>) -> Result<bool> {
    Ok(failing_relations(pres, t)?.is_empty())
}

/// Indices of relations that do not vanish at `t`.
pub fn failing_relations<F: Field>(pres: &Presentation, t: &MatrixTuple<F>) -> Result<Vec<usize>> {
    if t.k() != pres.ngens() {
        return Err(Error::SizeMismatch(format!(
            "presentation has {} generators, tuple has {} matrices",
            pres.ngens(),
            t.k()
        )));
    }
    let Some(sample) = t.matrices.first().map(|m| m.get(0, 0).clone()) else {
        // No generators: only constant relations, which vanish iff zero.
        return Ok(pres
            .relations()
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_zero())
            .map(|(i, _)| i)
            .collect());
    };
    let rels = lift_relations(pres, &sample);
    let residuals = relation_residuals(&rels, t, &sample)?;
    Ok(residuals
        .iter()
        .enumerate()
        .filter(|(_, m)| !m.is_zero_matrix())
        .map(|(i, _)| i)
        .collect())
}

/// Simultaneous conjugation `A_l -> g A_l g^{-1}`.
pub fn conjugate<F: Field>(t: &MatrixTuple<F>, g: &Matrix<F>) -> Result<MatrixTuple<F>> {
    if g.rows() != t.n || g.cols() != t.n {
        return Err(Error::SizeMismatch(format!(
            "conjugating {0}x{0} matrices by a {1}x{2} matrix",
            t.n,
            g.rows(),
            g.cols()
        )));
    }
    if g.determinant().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let g_inv = g.inverse()?;
    let matrices = t.matrices.iter().map(|a| &(g * a) * &g_inv).collect();
    Ok(MatrixTuple { n: t.n, matrices })
}

fn word_product<F: Field>(w: &Word, t: &MatrixTuple<F>) -> Result<Option<Matrix<F>>> {
    let mut acc: Option<Matrix<F>> = None;
    for &l in w.letters() {
        let m = t.matrices.get(l as usize).ok_or(Error::IndexOutOfRange {
            index: l as usize,
            bound: t.k(),
        })?;
        acc = Some(match acc {
            None => m.clone(),
            Some(a) => &a * m,
        });
    }
    Ok(acc)
}

/// `tr(A_{w_1} ... A_{w_m})`; the empty word gives `tr(1) = n`.
pub fn trace_word<F: Field>(w: &Word, t: &MatrixTuple<F>) -> Result<F> {
    match word_product(w, t)? {
        Some(m) => Ok(m.trace()),
        None => {
            let sample = t
                .matrices
                .first()
                .map(|m| m.get(0, 0).clone())
                .ok_or_else(|| Error::InvalidArgument("empty tuple".into()))?;
            Ok(sample.from_rational_like(&Rational::from_integer(t.n.into())))
        }
    }
}

/// Traces of one representative per necklace of length `1..=max_len`.
pub fn invariant_profile<F: Field>(t: &MatrixTuple<F>, max_len: usize) -> BTreeMap<Necklace, F> {
    necklace_basis(t.k(), max_len)
        .into_iter()
        .map(|nk| {
            let v = trace_word(nk.representative(), t).expect("necklace letters are in range");
            (nk, v)
        })
        .collect()
}

/// Some necklace of length at most `max_len` whose traces differ on the two
/// tuples, or `None` when all agree (the first one in shortlex order).
pub fn separate<F: Field>(
    t1: &MatrixTuple<F>,
    t2: &MatrixTuple<F>,
    max_len: usize,
) -> Result<Option<Necklace>> {
    if t1.k() != t2.k() || t1.n != t2.n {
        return Err(Error::SizeMismatch(format!(
            "tuples of shape ({}, {}) and ({}, {})",
            t1.k(),
            t1.n,
            t2.k(),
            t2.n
        )));
    }
    for nk in necklace_basis(t1.k(), max_len) {
        if trace_word(nk.representative(), t1)? != trace_word(nk.representative(), t2)? {
            return Ok(Some(nk));
        }
    }
    Ok(None)
}

/// Default trace degree bound used by the CLI: `n^2 + 1`.
pub fn default_max_length(n: usize) -> usize {
    n * n + 1
}
