//! Free associative algebras and finitely presented algebras.
//!
//! A [`Presentation`] is a list of generator names together with relation
//! polynomials in the free algebra on those generators. Relations are never
//! rewritten; questions about the quotient algebra are answered by
//! evaluating relations on concrete matrices or quantum-torus elements.

mod necklace;
mod parser;

use std::cmp::{Ordering, Reverse};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Ring};

pub use necklace::{count_necklaces, necklace_basis, necklace_normal_form, Necklace};
pub use parser::parse_presentation;

/// A monomial of the free algebra: a sequence of 0-based generator indices.
///
/// Ordered shortlex (length first, then lexicographically).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: &[u32]) -> Self {
        Word(letters.to_vec())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Rotation moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let mut v = self.0.clone();
        v.rotate_left(k % self.0.len());
        Word(v)
    }

    pub fn max_letter(&self) -> Option<u32> {
        self.0.iter().copied().max()
    }

    /// Renders with the given generator names, compressing runs as `x^k`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        WordDisplay { word: self, names }
    }

    /// Plain concatenation of names without separators (`xyy`), used for
    /// compact necklace labels.
    pub fn compact(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let sep = if names.iter().all(|n| n.chars().count() == 1) {
            ""
        } else {
            "*"
        };
        self.0
            .iter()
            .map(|&l| letter_name(names, l))
            .collect::<Vec<_>>()
            .join(sep)
    }
}

fn letter_name(names: &[String], l: u32) -> String {
    names
        .get(l as usize)
        .cloned()
        .unwrap_or_else(|| format!("g{l}"))
}

/// `x, y, z` for up to three letters, `x1, x2, ...` beyond that.
pub fn default_names(k: usize) -> Vec<String> {
    if k <= 3 {
        ["x", "y", "z"][..k].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=k).map(|i| format!("x{i}")).collect()
    }
}

struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = &self.word.0;
        if letters.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let mut j = i;
            while j < letters.len() && letters[j] == letters[i] {
                j += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", letter_name(self.names, letters[i]))?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0)
    }
}

/// Element of the free algebra on `ngens` generators with coefficients in `C`.
#[derive(Clone, PartialEq)]
pub struct NCPoly<C> {
    ngens: usize,
    terms: BTreeMap<Word, C>,
}

impl<C: Ring> NCPoly<C> {
    pub fn zero(ngens: usize) -> Self {
        NCPoly {
            ngens,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(ngens: usize, word: Word, coeff: C) -> Self {
        assert!(
            word.max_letter().map_or(true, |l| (l as usize) < ngens),
            "letter out of range"
        );
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        NCPoly { ngens, terms }
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Option<&C> {
        self.terms.get(w)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    fn check_ngens(&self, other: &Self) -> Result<()> {
        if self.ngens != other.ngens {
            return Err(Error::GeneratorCountMismatch {
                left: self.ngens,
                right: other.ngens,
            });
        }
        Ok(())
    }

    fn insert_term(terms: &mut BTreeMap<Word, C>, w: Word, c: C) {
        match terms.get_mut(&w) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    terms.remove(&w);
                } else {
                    *existing = sum;
                }
            }
            None => {
                if !c.is_zero() {
                    terms.insert(w, c);
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ngens(other)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            Self::insert_term(&mut terms, w.clone(), c.clone());
        }
        Ok(NCPoly {
            ngens: self.ngens,
            terms,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ngens(other)?;
        let mut terms = BTreeMap::new();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                Self::insert_term(&mut terms, w1.concat(w2), c1.clone() * c2.clone());
            }
        }
        Ok(NCPoly {
            ngens: self.ngens,
            terms,
        })
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut terms = BTreeMap::new();
        for (w, a) in &self.terms {
            let v = c.clone() * a.clone();
            if !v.is_zero() {
                terms.insert(w.clone(), v);
            }
        }
        NCPoly {
            ngens: self.ngens,
            terms,
        }
    }

    /// `p^e`, with `one` the unit polynomial.
    pub fn pow(&self, one: &Self, e: u32) -> Self {
        (0..e).fold(one.clone(), |acc, _| &acc * self)
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> NCPoly<D> {
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            let d = f(c);
            if !d.is_zero() {
                terms.insert(w.clone(), d);
            }
        }
        NCPoly {
            ngens: self.ngens,
            terms,
        }
    }

    /// Substitutes `images[i]` for generator `i`. `scale(c, r)` realises the
    /// coefficient action `c * r`; `one` is the unit of the target ring.
    pub fn evaluate<R: Ring>(
        &self,
        one: &R,
        images: &[R],
        scale: impl Fn(&C, &R) -> R,
    ) -> Result<R> {
        if images.len() != self.ngens {
            return Err(Error::GeneratorCountMismatch {
                left: self.ngens,
                right: images.len(),
            });
        }
        let mut acc = one.zero_like();
        for (w, c) in &self.terms {
            let mut prod = one.clone();
            for &l in w.letters() {
                prod = prod * images[l as usize].clone();
            }
            acc = acc + scale(c, &prod);
        }
        Ok(acc)
    }
}

impl NCPoly<Rational> {
    pub fn constant(ngens: usize, c: Rational) -> Self {
        Self::monomial(ngens, Word::empty(), c)
    }

    pub fn one(ngens: usize) -> Self {
        Self::constant(ngens, Rational::one())
    }

    pub fn var(ngens: usize, i: u32) -> Self {
        Self::monomial(ngens, Word(vec![i]), Rational::one())
    }

    pub fn word(ngens: usize, letters: &[u32]) -> Self {
        Self::monomial(ngens, Word(letters.to_vec()), Rational::one())
    }

    /// Evaluation into any ring through the structure map `Q -> R`.
    pub fn evaluate_in<R: Ring>(&self, one: &R, images: &[R]) -> Result<R> {
        self.evaluate(one, images, |c, r| r.from_rational_like(c) * r.clone())
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, names }
    }
}

/// Free-algebra product `p * q`.
pub fn nc_mul<C: Ring>(p: &NCPoly<C>, q: &NCPoly<C>) -> Result<NCPoly<C>> {
    p.checked_mul(q)
}

/// Free-algebra sum `p + q`.
pub fn nc_add<C: Ring>(p: &NCPoly<C>, q: &NCPoly<C>) -> Result<NCPoly<C>> {
    p.checked_add(q)
}

impl<C: Ring> Add for &NCPoly<C> {
    type Output = NCPoly<C>;
    fn add(self, rhs: &NCPoly<C>) -> NCPoly<C> {
        self.checked_add(rhs).expect("generator count mismatch")
    }
}

impl<C: Ring> Sub for &NCPoly<C> {
    type Output = NCPoly<C>;
    fn sub(self, rhs: &NCPoly<C>) -> NCPoly<C> {
        self.checked_add(&-rhs.clone())
            .expect("generator count mismatch")
    }
}

impl<C: Ring> Mul for &NCPoly<C> {
    type Output = NCPoly<C>;
    fn mul(self, rhs: &NCPoly<C>) -> NCPoly<C> {
        self.checked_mul(rhs).expect("generator count mismatch")
    }
}

impl<C: Ring> Neg for NCPoly<C> {
    type Output = NCPoly<C>;
    fn neg(self) -> NCPoly<C> {
        NCPoly {
            ngens: self.ngens,
            terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect(),
        }
    }
}

impl<C: Ring + fmt::Debug> fmt::Debug for NCPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

struct PolyDisplay<'a> {
    poly: &'a NCPoly<Rational>,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest degree first; lexicographic within a degree.
        let mut terms: Vec<_> = self.poly.terms.iter().collect();
        terms.sort_by_key(|(w, _)| (Reverse(w.len()), w.0.clone()));
        for (idx, (w, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if w.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !One::is_one(&mag) {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", w.display_with(self.names))?;
            }
        }
        Ok(())
    }
}

/// A finitely presented algebra `Q<x_1..x_k> / (p_i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Presentation {
    name: String,
    generators: Vec<String>,
    relations: Vec<NCPoly<Rational>>,
}

impl Presentation {
    pub fn new(
        name: impl Into<String>,
        generators: Vec<String>,
        relations: Vec<NCPoly<Rational>>,
    ) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(Error::DuplicateGenerator(g.clone()));
            }
        }
        for r in &relations {
            if r.ngens() != generators.len() {
                return Err(Error::GeneratorCountMismatch {
                    left: generators.len(),
                    right: r.ngens(),
                });
            }
        }
        Ok(Presentation {
            name: name.into(),
            generators,
            relations,
        })
    }

    /// The free algebra on the given generators.
    pub fn free(name: impl Into<String>, generators: &[&str]) -> Self {
        Self::new(
            name,
            generators.iter().map(|s| s.to_string()).collect(),
            Vec::new(),
        )
        .expect("distinct generator names")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn relations(&self) -> &[NCPoly<Rational>] {
        &self.relations
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn relation_string(&self, i: usize) -> String {
        self.relations[i].display_with(&self.generators).to_string()
    }
}

/// Pretty-prints in the presentation language; parsing the output yields an
/// equal presentation.
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra {};", self.name)?;
        writeln!(f, "generators {};", self.generators.join(", "))?;
        if self.relations.is_empty() {
            return writeln!(f, "relations;");
        }
        writeln!(f, "relations")?;
        for (i, r) in self.relations.iter().enumerate() {
            let end = if i + 1 == self.relations.len() { ";" } else { "," };
            writeln!(f, "  {}{end}", r.display_with(&self.generators))?;
        }
        Ok(())
    }
}
