//! Algebraic D-branes: algebra maps from a finitely presented algebra into a
//! quantum torus, compared through the centralizers of their images.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::lattice::ExponentLattice;
use crate::ncalg::{parse_presentation, Presentation};
use crate::qtorus::{
    center_lattice, centralizer_lattice, make_embedding, qt_mul, verify_embedding, EmbeddingCheck,
    QTElement,
};
use crate::scalar::{Cyclotomic, Ring};

/// Coordinate ring of `GL_2` on generators `s, t, u, v, w` (w inverts the
/// determinant `st - uv`).
pub const GL2_PRESENTATION: &str = "algebra GL2;
generators s, t, u, v, w;
relations [s,t], [s,u], [s,v], [s,w], [t,u], [t,v], [t,w], [u,v], [u,w], [v,w],
          w*(s*t - u*v) - 1;
";

pub fn gl2_presentation() -> Presentation {
    parse_presentation(GL2_PRESENTATION).expect("built-in presentation parses")
}

#[derive(Clone, Debug, PartialEq)]
pub struct DBrane {
    source: Presentation,
    level: u64,
    root_order: u64,
    images: Vec<QTElement>,
}

impl DBrane {
    /// Every generator needs an image in the torus of the given level and
    /// root order; unknown generator names are rejected.
    pub fn new(
        source: Presentation,
        level: u64,
        root_order: u64,
        mut images: BTreeMap<String, QTElement>,
    ) -> Result<Self> {
        let mut ordered = Vec::with_capacity(source.ngens());
        for g in source.generators() {
            let x = images
                .remove(g)
                .ok_or_else(|| Error::Format(format!("no image for generator `{g}`")))?;
            if x.level() != level || x.root_order() != root_order {
                return Err(Error::LevelMismatch(format!(
                    "image of `{g}` lives at level {} (root order {}), brane declares level {level} (root order {root_order})",
                    x.level(),
                    x.root_order()
                )));
            }
            ordered.push(x);
        }
        if let Some(extra) = images.keys().next() {
            return Err(Error::Format(format!(
                "image given for `{extra}`, which is not a generator of {}",
                source.name()
            )));
        }
        Ok(DBrane {
            source,
            level,
            root_order,
            images: ordered,
        })
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn root_order(&self) -> u64 {
        self.root_order
    }

    pub fn images(&self) -> &[QTElement] {
        &self.images
    }

    pub fn image(&self, generator: &str) -> Option<&QTElement> {
        self.source
            .generator_index(generator)
            .map(|i| &self.images[i])
    }

    pub fn to_json(&self) -> Value {
        let images: Map<String, Value> = self
            .source
            .generators()
            .iter()
            .zip(&self.images)
            .map(|(g, x)| (g.clone(), x.to_json()["terms"].clone()))
            .collect();
        json!({
            "presentation": self.source.name(),
            "level": self.level,
            "root_order": self.root_order,
            "images": images,
        })
    }

    /// Reads `{presentation, level, root_order, images: {gen: terms}}`;
    /// `resolve` maps the presentation name to its definition.
    pub fn from_json(v: &Value, resolve: impl Fn(&str) -> Result<Presentation>) -> Result<Self> {
        let name = v
            .get("presentation")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Format("brane without `presentation` name".into()))?;
        let level = v
            .get("level")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Format("brane without integer `level`".into()))?;
        let root_order = match v.get("root_order") {
            None => level,
            Some(r) => r
                .as_u64()
                .ok_or_else(|| Error::Format("`root_order` must be an integer".into()))?,
        };
        let source = resolve(name)?;
        if source.name() != name {
            return Err(Error::Format(format!(
                "brane refers to `{name}` but the presentation is `{}`",
                source.name()
            )));
        }
        let raw = v
            .get("images")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Format("brane without `images` object".into()))?;
        let mut images = BTreeMap::new();
        for (g, terms) in raw {
            images.insert(
                g.clone(),
                QTElement::terms_from_json(level, root_order, terms)?,
            );
        }
        Self::new(source, level, root_order, images)
    }
}

/// `beta_n` on `GL_2`: `s -> U^n`, `t -> V`, `u, v -> 0`, `w -> V^-1 U^-n`.
pub fn beta_brane(n: u64, root_order: u64) -> Result<DBrane> {
    let one = Cyclotomic::one(root_order);
    let mono = |i, j| QTElement::monomial(n, root_order, i, j, one.clone());
    let n_i = n as i64;
    let zero = QTElement::zero(n, root_order)?;
    let w = qt_mul(&mono(0, -1)?, &mono(-n_i, 0)?)?;
    let images = BTreeMap::from([
        ("s".to_string(), mono(n_i, 0)?),
        ("t".to_string(), mono(0, 1)?),
        ("u".to_string(), zero.clone()),
        ("v".to_string(), zero),
        ("w".to_string(), w),
    ]);
    DBrane::new(gl2_presentation(), n, root_order, images)
}

#[derive(Clone, Debug, PartialEq)]
pub struct BraneCheck {
    pub holds: bool,
    /// Indices of relations whose image is nonzero.
    pub failing: Vec<usize>,
}

/// Substitutes the images into every relation.
pub fn check_brane(b: &DBrane) -> Result<BraneCheck> {
    let one = QTElement::one(b.level, b.root_order)?;
    let mut failing = Vec::new();
    for (i, rel) in b.source.relations().iter().enumerate() {
        if !Ring::is_zero(&rel.evaluate_in(&one, &b.images)?) {
            failing.push(i);
        }
    }
    Ok(BraneCheck {
        holds: failing.is_empty(),
        failing,
    })
}

fn require_brane(b: &DBrane) -> Result<()> {
    let c = check_brane(b)?;
    if c.holds {
        Ok(())
    } else {
        Err(Error::NotABrane(c.failing))
    }
}

/// Exponent lattice spanned by the nonzero images, which must be monomials.
pub fn image_lattice(b: &DBrane) -> Result<ExponentLattice> {
    let mut vectors = Vec::new();
    for (g, x) in b.source.generators().iter().zip(&b.images) {
        if Ring::is_zero(x) {
            continue;
        }
        let (i, j) = x
            .monomial_exponent()
            .ok_or_else(|| Error::NonMonomialImage(g.clone()))?;
        vectors.push([i, j]);
    }
    Ok(ExponentLattice::span(b.level, &vectors))
}

/// Exponent lattice of the centralizer of the image.
pub fn image_centralizer(b: &DBrane) -> Result<ExponentLattice> {
    let image = image_lattice(b)?;
    Ok(centralizer_lattice(image.basis(), b.level))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoMorphismWitness {
    /// Coordinates of each basis vector of `C(Im f)` in the basis of `C(Im g)`.
    Containment(Vec<([i64; 2], Vec<i64>)>),
    /// A basis vector of `C(Im f)` outside `C(Im g)`.
    Separating([i64; 2]),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoMorphismReport {
    pub exists: bool,
    pub source_centralizer: ExponentLattice,
    pub target_centralizer: ExponentLattice,
    pub witness: TwoMorphismWitness,
}

impl TwoMorphismReport {
    pub fn witness_json(&self) -> Value {
        match &self.witness {
            TwoMorphismWitness::Containment(rows) => json!({
                "containment": rows
                    .iter()
                    .map(|(v, c)| json!({ "vector": v, "coordinates": c }))
                    .collect::<Vec<_>>()
            }),
            TwoMorphismWitness::Separating(v) => json!({ "separating": v }),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "exists": self.exists,
            "source_centralizer": self.source_centralizer.to_json(),
            "target_centralizer": self.target_centralizer.to_json(),
            "witness": self.witness_json(),
        })
    }
}

/// Decides `C(Im f) ⊆ C(Im g)`, realized as an inclusion of monomial algebras.
pub fn two_morphism_exists(f: &DBrane, g: &DBrane) -> Result<TwoMorphismReport> {
    if f.level != g.level {
        return Err(Error::Incomparable(format!(
            "branes at levels {} and {}",
            f.level, g.level
        )));
    }
    if f.source.name() != g.source.name() || f.source.generators() != g.source.generators() {
        return Err(Error::Incomparable(format!(
            "branes on different sources `{}` and `{}`",
            f.source.name(),
            g.source.name()
        )));
    }
    require_brane(f)?;
    require_brane(g)?;
    let cf = image_centralizer(f)?;
    let cg = image_centralizer(g)?;
    Ok(lattice_two_morphism(cf, cg))
}

fn lattice_two_morphism(cf: ExponentLattice, cg: ExponentLattice) -> TwoMorphismReport {
    let witness = match cf.separating_vector(&cg) {
        Some(v) => TwoMorphismWitness::Separating(v),
        None => TwoMorphismWitness::Containment(
            cf.basis()
                .iter()
                .map(|&v| (v, cg.coordinates(v).expect("contained vector")))
                .collect(),
        ),
    };
    TwoMorphismReport {
        exists: matches!(witness, TwoMorphismWitness::Containment(_)),
        source_centralizer: cf,
        target_centralizer: cg,
        witness,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Maximal,
    Minimal,
    Neither,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Maximal => "maximal",
            Classification::Minimal => "minimal",
            Classification::Neither => "neither",
        })
    }
}

/// Maximal when the image lattice is all of `Z^2`, minimal when it lies in the
/// center. At level 1 both hold for a full image; maximal is reported.
pub fn classify(b: &DBrane) -> Result<Classification> {
    require_brane(b)?;
    let image = image_lattice(b)?;
    Ok(if image.is_full() {
        Classification::Maximal
    } else if image.is_subset_of(&center_lattice(b.level)) {
        Classification::Minimal
    } else {
        Classification::Neither
    })
}

/// `i_{m,n} ∘ b` for a brane `b` at level `n`, landing in the level-`m` torus
/// with root order `lcm(N_b, m)`.
pub fn compose_with_embedding(b: &DBrane, m: u64) -> Result<DBrane> {
    let e = make_embedding(b.level, m)?;
    let root_order = e.target_root_order(b.root_order);
    let images = b
        .source
        .generators()
        .iter()
        .zip(&b.images)
        .map(|(g, x)| Ok((g.clone(), e.apply(x, root_order)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    DBrane::new(b.source.clone(), m, root_order, images)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairReport {
    pub n: u64,
    pub m: u64,
    pub embedding: EmbeddingCheck,
    /// Relations failing for `i_{m,n} ∘ b_n` (empty when it is a brane).
    pub composed_failing: Vec<usize>,
    pub two_morphism: TwoMorphismReport,
    pub passes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub pairs: Vec<PairReport>,
    pub passes: bool,
}

/// For each `(n, m)`: checks the embedding, that `i_{m,n} ∘ b_n` is a brane,
/// and that `C(Im b_m) ⊆ C(Im i_{m,n} ∘ b_n)`.
pub fn check_compatible_family(
    family: &BTreeMap<u64, DBrane>,
    pairs: &[(u64, u64)],
) -> Result<FamilyReport> {
    let mut out = Vec::with_capacity(pairs.len());
    for &(n, m) in pairs {
        let bn = family.get(&n).ok_or(Error::MissingLevel(n))?;
        let bm = family.get(&m).ok_or(Error::MissingLevel(m))?;
        if bn.level != n || bm.level != m {
            return Err(Error::LevelMismatch(format!(
                "family entries keyed {n} and {m} have levels {} and {}",
                bn.level, bm.level
            )));
        }
        require_brane(bn)?;
        require_brane(bm)?;
        let embedding = verify_embedding(n, m)?;
        let composed = compose_with_embedding(bn, m)?;
        let composed_failing = check_brane(&composed)?.failing;
        let two_morphism = lattice_two_morphism(image_centralizer(bm)?, image_centralizer(&composed)?);
        let passes = embedding.passes && composed_failing.is_empty() && two_morphism.exists;
        out.push(PairReport {
            n,
            m,
            embedding,
            composed_failing,
            two_morphism,
            passes,
        });
    }
    let passes = out.iter().all(|p| p.passes);
    Ok(FamilyReport { pairs: out, passes })
}

/// Root order shared by a family: the lcm of its levels.
pub fn family_root_order(levels: impl IntoIterator<Item = u64>) -> u64 {
    levels.into_iter().fold(1, |acc, l| acc.lcm(&l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtorus::QTElement;

    fn mono(n: u64, i: i64, j: i64) -> QTElement {
        QTElement::monomial(n, n, i, j, Cyclotomic::one(n)).unwrap()
    }

    fn two_gen(n: u64, rel: &str, s: QTElement, t: QTElement) -> DBrane {
        let p = parse_presentation(&format!("algebra P; generators s, t; relations {rel};")).unwrap();
        DBrane::new(
            p,
            n,
            n,
            BTreeMap::from([("s".into(), s), ("t".into(), t)]),
        )
        .unwrap()
    }

    #[test]
    fn beta_is_a_brane() {
        for n in 1..=6 {
            let b = beta_brane(n, n).unwrap();
            assert!(check_brane(&b).unwrap().holds, "n = {n}");
            let n_i = n as i64;
            assert_eq!(image_lattice(&b).unwrap(), ExponentLattice::span(n, &[[n_i, 0], [0, 1]]));
            assert_eq!(image_centralizer(&b).unwrap(), image_lattice(&b).unwrap());
        }
    }

    #[test]
    fn commutator_fails_for_u_v() {
        let b = two_gen(3, "[s,t]", mono(3, 1, 0), mono(3, 0, 1));
        assert_eq!(check_brane(&b).unwrap(), BraneCheck { holds: false, failing: vec![0] });
        let b = two_gen(1, "[s,t]", mono(1, 1, 0), mono(1, 0, 1));
        assert!(check_brane(&b).unwrap().holds);
        assert_eq!(classify(&b).unwrap(), Classification::Maximal);
    }

    #[test]
    fn classification() {
        for n in 2..=5 {
            assert_eq!(classify(&beta_brane(n, n).unwrap()).unwrap(), Classification::Neither);
            let n_i = n as i64;
            let b = two_gen(n, "[s,t]", mono(n, n_i, 0), mono(n, 0, 2 * n_i));
            assert_eq!(classify(&b).unwrap(), Classification::Minimal);
            assert!(image_centralizer(&b).unwrap().is_full());
        }
    }

    #[test]
    fn non_monomial_images_are_refused() {
        let b = two_gen(1, "[s,t]", mono(1, 1, 0) + mono(1, 0, 1), mono(1, 0, 1));
        assert!(check_brane(&b).unwrap().holds);
        assert_eq!(image_lattice(&b), Err(Error::NonMonomialImage("s".into())));
    }

    #[test]
    fn two_morphisms() {
        let b = beta_brane(4, 4).unwrap();
        let r = two_morphism_exists(&b, &b).unwrap();
        assert!(r.exists);
        let composed = compose_with_embedding(&beta_brane(2, 2).unwrap(), 4).unwrap();
        let r = two_morphism_exists(&b, &composed).unwrap();
        assert!(r.exists);
        assert_eq!(
            r.target_centralizer,
            ExponentLattice::span(4, &[[2, 0], [0, 1]])
        );
        assert!(matches!(
            two_morphism_exists(&b, &beta_brane(2, 2).unwrap()),
            Err(Error::Incomparable(_))
        ));
    }

    #[test]
    fn lemma_family() {
        let levels = [1u64, 2, 3, 4, 6, 12];
        let family: BTreeMap<u64, DBrane> = levels
            .iter()
            .map(|&n| (n, beta_brane(n, n).unwrap()))
            .collect();
        let pairs: Vec<(u64, u64)> = levels
            .iter()
            .flat_map(|&n| levels.iter().map(move |&m| (n, m)))
            .filter(|&(n, m)| m % n == 0)
            .collect();
        let report = check_compatible_family(&family, &pairs).unwrap();
        for p in &report.pairs {
            assert_eq!(p.passes, p.embedding.passes, "({}, {})", p.n, p.m);
            assert!(p.two_morphism.exists && p.composed_failing.is_empty());
        }
        assert!(!report.passes); // (2, 4) is obstructed
        assert!(matches!(
            check_compatible_family(&family, &[(5, 10)]),
            Err(Error::MissingLevel(5))
        ));
    }

    #[test]
    fn minimal_replacement_breaks_the_family() {
        let mut family = BTreeMap::new();
        family.insert(2, beta_brane(2, 2).unwrap());
        let p = gl2_presentation();
        let m = 6u64;
        let c = |i, j| mono(m, i, j);
        let images = BTreeMap::from([
            ("s".to_string(), c(6, 0)),
            ("t".to_string(), c(0, 6)),
            ("u".to_string(), QTElement::zero(m, m).unwrap()),
            ("v".to_string(), QTElement::zero(m, m).unwrap()),
            ("w".to_string(), c(-6, -6)),
        ]);
        family.insert(m, DBrane::new(p, m, m, images).unwrap());
        let report = check_compatible_family(&family, &[(2, 6)]).unwrap();
        let pair = &report.pairs[0];
        assert!(pair.embedding.passes && !pair.passes);
        assert_eq!(pair.two_morphism.witness, TwoMorphismWitness::Separating([1, 0]));
    }

    #[test]
    fn json_round_trip() {
        let b = beta_brane(3, 6).unwrap();
        let back = DBrane::from_json(&b.to_json(), |_| Ok(gl2_presentation())).unwrap();
        assert_eq!(back, b);
    }
}
