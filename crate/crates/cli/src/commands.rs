use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use azumaya::chtrace::verify_ch;
use azumaya::coalg::{
    check_coassociative, dual_algebra, grouplikes, in_span, is_grouplike, matrix_coalgebra,
    path_coalgebra, skew_primitives, Coalgebra, CoalgebraCheck, Quiver,
};
use azumaya::dbrane::{
    beta_brane, check_brane, check_compatible_family, classify, gl2_presentation, image_centralizer,
    image_lattice, two_morphism_exists, Classification, DBrane,
};
use azumaya::io::{matrix_to_json, AnyTuple};
use azumaya::lattice::ExponentLattice;
use azumaya::matrep::{
    conjugate, default_max_length, failing_relations, invariant_profile, is_representation, rep_ideal,
    separate, variable_name, MatrixTuple,
};
use azumaya::matrix::Matrix;
use azumaya::ncalg::{parse_presentation, Presentation};
use azumaya::qtorus::{
    center_lattice, centralizer_lattice, coeff_json, commutant_dimension, embedding_relation_residual,
    make_embedding, monomials_commute, qt_mul, specialize, specialize_element, torus_relations,
    verify_embedding, QTElement,
};
use azumaya::scalar::{Cyclotomic, Field, Rational, Ring, ScalarJson};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::{BraneCommand, CoalgCommand, Command, Global, QtorusCommand, Report};

/// Path length used for path coalgebras when `--max-length` is absent.
const DEFAULT_PATH_LENGTH: usize = 2;

pub fn run(g: &Global, cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Repideal => repideal(g),
        Command::Chpoly { matrix } => chpoly(g, matrix),
        Command::Invariants { tuple, other } => invariants(g, tuple, other.as_deref()),
        Command::Qtorus { command } => qtorus(g, command),
        Command::Brane { command } => brane(g, command),
        Command::Coalg { command } => coalg(g, command),
    }
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_json(path: &Path) -> Result<Value> {
    serde_json::from_str(&read_text(path)?).with_context(|| format!("{} is not valid JSON", path.display()))
}

fn read_presentation(path: &Path) -> Result<Presentation> {
    parse_presentation(&read_text(path)?).with_context(|| format!("in {}", path.display()))
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn rng(g: &Global) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(g.seed)
}

fn echo_common(r: &mut Report, g: &Global) {
    if let Some(p) = &g.presentation {
        r.input("presentation", path_str(p));
    }
    if let Some(l) = g.level {
        r.input("level", l);
    }
    if let Some(n) = g.root_order {
        r.input("root_order", n);
    }
}

fn require_level(g: &Global) -> Result<u64> {
    match g.level {
        Some(0) => bail!("--level must be positive"),
        Some(l) => Ok(l),
        None => bail!("--level is required"),
    }
}

fn small_int(rng: &mut ChaCha8Rng) -> Rational {
    Rational::from_integer(rng.gen_range(-3i64..=3).into())
}

fn random_matrix<F: Field>(rng: &mut ChaCha8Rng, n: usize, sample: &F) -> Matrix<F> {
    Matrix::from_fn(n, n, |_, _| sample.from_rational_like(&small_int(rng)))
}

fn random_invertible<F: Field>(rng: &mut ChaCha8Rng, n: usize, sample: &F) -> Matrix<F> {
    loop {
        let m = random_matrix(rng, n, sample);
        if !m.determinant().is_zero() {
            return m;
        }
    }
}

fn matrix_json<F: Field + ScalarJson>(m: &Matrix<F>) -> Value {
    matrix_to_json(m)
}

fn relation_names(p: &Presentation, idx: &[usize]) -> Value {
    Value::Array(idx.iter().map(|&i| Value::String(p.relation_string(i))).collect())
}

// ---------------------------------------------------------------- repideal

fn repideal(g: &Global) -> Result<Report> {
    let path = g.presentation.as_ref().ok_or_else(|| anyhow!("--presentation is required"))?;
    let pres = read_presentation(path)?;
    let n = require_level(g)? as usize;
    let mut r = Report::new("repideal");
    echo_common(&mut r, g);
    r.input("n", n).input("seed", g.seed);

    let ideal = rep_ideal(&pres, n);
    let generators: Vec<Value> = ideal
        .generators
        .iter()
        .map(|gen| {
            json!({
                "relation": pres.relation_string(gen.relation),
                "entry": [gen.row + 1, gen.col + 1],
                "polynomial": gen.poly.display_with(|i| variable_name(n, i)).to_string(),
            })
        })
        .collect();
    r.result("algebra", pres.name())
        .result("variables", ideal.nvars)
        .result("entry_count", ideal.entry_count)
        .result("zero_entries", ideal.zero_entries)
        .result("generator_count", ideal.generators.len())
        .result("generators", generators);

    // The ideal vanishes at a point iff the point is a representation.
    let mut rng = rng(g);
    let one = Rational::from_integer(1.into());
    let k = pres.ngens();
    let mut points: Vec<(&str, MatrixTuple<Rational>)> = Vec::new();
    if k > 0 && n > 0 {
        let scalar = (0..k)
            .map(|_| Matrix::scalar_like(n, small_int(&mut rng)))
            .collect();
        let random = (0..k).map(|_| random_matrix(&mut rng, n, &one)).collect();
        let zero = (0..k).map(|_| Matrix::zeros_like(n, n, &one)).collect();
        points.push(("zero", MatrixTuple::new(n, zero)?));
        points.push(("scalar", MatrixTuple::new(n, scalar)?));
        points.push(("random", MatrixTuple::new(n, random)?));
    }
    let mut mismatches = Vec::new();
    let mut evaluated = Vec::new();
    for (name, t) in &points {
        let vanishes = ideal.vanishes_at(t, &one);
        let rep = is_representation(&pres, t)?;
        evaluated.push(json!({ "point": name, "ideal_vanishes": vanishes, "is_representation": rep }));
        if vanishes != rep {
            mismatches.push(*name);
        }
    }
    r.result("sample_points", evaluated);
    r.verdict(
        "ideal vanishes exactly at representations",
        mismatches.is_empty(),
        json!({ "mismatched_points": mismatches }),
    );
    Ok(r)
}

// ---------------------------------------------------------------- chpoly

fn chpoly(g: &Global, path: &Path) -> Result<Report> {
    let tuple = AnyTuple::from_json(&read_json(path)?)?;
    let mut r = Report::new("chpoly");
    echo_common(&mut r, g);
    r.input("matrix", path_str(path)).input("field", tuple.field().name());
    if tuple.k() != 1 {
        bail!("chpoly expects a file with exactly one matrix, found {}", tuple.k());
    }
    match &tuple {
        AnyTuple::Rational(t) => {
            let v = verify_ch(t.matrix(0))?;
            r.result("n", t.n())
                .result("polynomial", v.polynomial.to_string())
                .result("coefficients", v.polynomial.to_json())
                .result("residual", matrix_json(&v.residual));
            r.verdict("cayley_hamilton", v.holds, json!({ "residual": matrix_json(&v.residual) }));
        }
        AnyTuple::Cyclotomic(_, t) => {
            let v = verify_ch(t.matrix(0))?;
            r.result("n", t.n())
                .result("coefficients", v.polynomial.to_json())
                .result("residual", matrix_json(&v.residual));
            r.verdict("cayley_hamilton", v.holds, json!({ "residual": matrix_json(&v.residual) }));
        }
    }
    Ok(r)
}

// ---------------------------------------------------------------- invariants

fn invariants(g: &Global, path: &Path, other: Option<&Path>) -> Result<Report> {
    let tuple = AnyTuple::from_json(&read_json(path)?)?;
    let other_tuple = other.map(|p| read_json(p).and_then(|v| Ok(AnyTuple::from_json(&v)?))).transpose()?;
    let pres = g.presentation.as_deref().map(read_presentation).transpose()?;
    let max_len = g.max_length.unwrap_or_else(|| default_max_length(tuple.n()));
    let mut r = Report::new("invariants");
    echo_common(&mut r, g);
    r.input("tuple", path_str(path));
    if let Some(p) = other {
        r.input("other", path_str(p));
    }
    r.input("field", tuple.field().name())
        .input("max_length", max_len)
        .input("seed", g.seed);
    match (tuple, other_tuple) {
        (AnyTuple::Rational(t), o) => {
            let o = match o {
                None => None,
                Some(AnyTuple::Rational(o)) => Some(o),
                Some(_) => bail!("tuples over different fields"),
            };
            invariants_over(g, &mut r, pres.as_ref(), &t, o.as_ref(), max_len)?;
        }
        (AnyTuple::Cyclotomic(n, t), o) => {
            let o = match o {
                None => None,
                Some(AnyTuple::Cyclotomic(m, o)) if m == n => Some(o),
                Some(_) => bail!("tuples over different fields"),
            };
            invariants_over(g, &mut r, pres.as_ref(), &t, o.as_ref(), max_len)?;
        }
    }
    Ok(r)
}

fn invariants_over<F: Field + ScalarJson>(
    g: &Global,
    r: &mut Report,
    pres: Option<&Presentation>,
    t: &MatrixTuple<F>,
    other: Option<&MatrixTuple<F>>,
    max_len: usize,
) -> Result<()> {
    let names = pres
        .map(|p| p.generators().to_vec())
        .unwrap_or_else(|| azumaya::ncalg::default_names(t.k()));
    if names.len() != t.k() {
        bail!("presentation has {} generators, tuple has {} matrices", names.len(), t.k());
    }
    let profile = invariant_profile(t, max_len);
    let profile_json: serde_json::Map<String, Value> = profile
        .iter()
        .map(|(nk, v)| (nk.compact(&names), v.to_json()))
        .collect();
    r.result("k", t.k())
        .result("n", t.n())
        .result("necklace_count", profile.len())
        .result("profile", profile_json);

    if let Some(p) = pres {
        let failing = failing_relations(p, t)?;
        r.verdict(
            "is_representation",
            failing.is_empty(),
            json!({ "failing_relations": relation_names(p, &failing) }),
        );
    }

    let sample = t.matrix(0).get(0, 0).clone();
    let mut rng = rng(g);
    let conj = random_invertible(&mut rng, t.n(), &sample);
    let moved = conjugate(t, &conj)?;
    let changed = separate(t, &moved, max_len)?;
    r.verdict(
        "profile invariant under conjugation",
        changed.is_none(),
        json!({
            "conjugator": matrix_json(&conj),
            "changed_necklace": changed.map(|nk| nk.compact(&names)),
        }),
    );

    if let Some(o) = other {
        let sep = separate(t, o, max_len)?;
        let witness = match &sep {
            Some(nk) => json!({
                "necklace": nk.compact(&names),
                "trace_first": azumaya::matrep::trace_word(nk.representative(), t)?.to_json(),
                "trace_other": azumaya::matrep::trace_word(nk.representative(), o)?.to_json(),
            }),
            None => Value::Null,
        };
        r.result("separated", sep.is_some()).result("separating", witness);
    }
    Ok(())
}

// ---------------------------------------------------------------- qtorus

fn parse_exponent(s: &str) -> Option<[i64; 2]> {
    let (a, b) = s.split_once(',')?;
    Some([a.trim().parse().ok()?, b.trim().parse().ok()?])
}

fn parse_scalar(s: &str, order: u64) -> Result<Cyclotomic> {
    let t = s.trim();
    let v = if t.starts_with('[') || t.starts_with('{') {
        serde_json::from_str(t).with_context(|| format!("bad scalar `{s}`"))?
    } else {
        Value::String(t.to_string())
    };
    Ok(Cyclotomic::from_json(order, &v)?)
}

fn root_order_for(g: &Global, level: u64) -> Result<u64> {
    let n = g.root_order.unwrap_or(level);
    if n == 0 || n % level != 0 {
        bail!("root order {n} is not a multiple of the level {level}");
    }
    Ok(n)
}

fn lattice_json(l: &ExponentLattice) -> Value {
    json!({ "basis": l.basis(), "rank": l.rank(), "index": l.index(), "display": l.to_string() })
}

fn qtorus(g: &Global, cmd: &QtorusCommand) -> Result<Report> {
    match cmd {
        QtorusCommand::Mul { x, y } => qt_mul_cmd(g, x, y),
        QtorusCommand::Center => {
            let n = require_level(g)?;
            let mut r = Report::new("qtorus center");
            echo_common(&mut r, g);
            let c = center_lattice(n);
            let via = centralizer_lattice(&[[1, 0], [0, 1]], n);
            r.result("center", lattice_json(&c));
            r.verdict(
                "center equals centralizer of U and V",
                c == via,
                json!({ "centralizer_of_generators": lattice_json(&via) }),
            );
            Ok(r)
        }
        QtorusCommand::Centralizer { gens } => {
            let n = require_level(g)?;
            let vs = gens
                .iter()
                .map(|s| parse_exponent(s).ok_or_else(|| anyhow!("expected `a,b`, got `{s}`")))
                .collect::<Result<Vec<_>>>()?;
            let mut r = Report::new("qtorus centralizer");
            echo_common(&mut r, g);
            r.input("generators", json!(vs));
            let c = centralizer_lattice(&vs, n);
            let center = center_lattice(n);
            r.result("centralizer", lattice_json(&c));
            let bad: Vec<Value> = c
                .basis()
                .iter()
                .flat_map(|b| vs.iter().map(move |v| (*b, *v)))
                .filter(|(b, v)| !monomials_commute(*b, *v, n))
                .map(|(b, v)| json!([b, v]))
                .collect();
            r.verdict("basis commutes with every generator", bad.is_empty(), json!({ "non_commuting": bad }));
            r.verdict(
                "contains the center",
                center.is_subset_of(&c),
                json!({ "outside": center.separating_vector(&c) }),
            );
            Ok(r)
        }
        QtorusCommand::Specialize { mu, nu } => qt_specialize(g, mu.as_deref(), nu.as_deref()),
        QtorusCommand::Embed { n, m } => {
            let mut r = Report::new("qtorus embed");
            echo_common(&mut r, g);
            r.input("n", *n).input("m", *m);
            let e = make_embedding(*n, *m)?;
            let check = verify_embedding(*n, *m)?;
            let residual = embedding_relation_residual(*n, *m)?;
            let direct = Ring::is_zero(&residual);
            r.result("k", e.k)
                .result(
                    "images",
                    json!({ "U": e.images()[0].1, "V": e.images()[1].1 }),
                )
                .result("obstruction", check.obstruction)
                .result("residual", residual.to_json())
                .result("residual_display", residual.to_string());
            r.verdict(
                "relation preserved",
                check.passes,
                json!({ "k_squared_minus_k_mod_m": check.obstruction }),
            );
            r.verdict(
                "congruence agrees with direct multiplication",
                check.passes == direct,
                json!({ "residual_is_zero": direct }),
            );
            Ok(r)
        }
    }
}

fn qt_operand(g: &Global, s: &str) -> Result<(Value, QTElement)> {
    if let Some([a, b]) = parse_exponent(s) {
        let n = require_level(g)?;
        let order = root_order_for(g, n)?;
        let x = QTElement::monomial(n, order, a, b, Cyclotomic::one(order))?;
        Ok((json!(s), x))
    } else {
        let x = QTElement::from_json(&read_json(Path::new(s))?)?;
        if g.level.is_some_and(|l| l != x.level()) {
            bail!("{s} has level {}, --level is {}", x.level(), g.level.unwrap_or_default());
        }
        Ok((json!(s), x))
    }
}

fn qt_mul_cmd(g: &Global, xs: &str, ys: &str) -> Result<Report> {
    let (xj, x) = qt_operand(g, xs)?;
    let (yj, y) = qt_operand(g, ys)?;
    let mut r = Report::new("qtorus mul");
    echo_common(&mut r, g);
    r.input("x", xj).input("y", yj);
    let p = qt_mul(&x, &y)?;
    r.result("product", p.to_json()).result("display", p.to_string());
    // Cross-check in the clock-and-shift representation with mu = nu = 1.
    let one = Cyclotomic::one(p.root_order());
    let lhs = specialize_element(&p, &one, &one)?;
    let rhs = &specialize_element(&x, &one, &one)? * &specialize_element(&y, &one, &one)?;
    r.verdict(
        "product agrees with clock-and-shift matrices",
        lhs == rhs,
        json!({ "difference_is_zero": (lhs.clone() - rhs.clone()).is_zero_matrix() }),
    );
    Ok(r)
}

fn qt_specialize(g: &Global, mu: Option<&str>, nu: Option<&str>) -> Result<Report> {
    let n = require_level(g)?;
    let order = root_order_for(g, n)?;
    let mu_c = mu.map(|s| parse_scalar(s, order)).transpose()?.unwrap_or_else(|| Cyclotomic::one(order));
    let nu_c = nu.map(|s| parse_scalar(s, order)).transpose()?.unwrap_or_else(|| Cyclotomic::one(order));
    let mut r = Report::new("qtorus specialize");
    echo_common(&mut r, g);
    r.input("mu", coeff_json(&mu_c)).input("nu", coeff_json(&nu_c));
    let t = specialize(n, &mu_c, &nu_c)?;
    let s0 = Ring::pow(&mu_c, n as u32);
    let t0 = Ring::pow(&nu_c, n as u32);
    r.result("root_order", order)
        .result("U", matrix_json(t.matrix(0)))
        .result("V", matrix_json(t.matrix(1)))
        .result("s0", coeff_json(&s0))
        .result("t0", coeff_json(&t0));
    let rels = torus_relations(n, order, &s0, &t0)?;
    let one = Matrix::identity_like(n as usize, &Cyclotomic::one(order));
    let names = ["VU - qUV", "U^n - s0", "V^n - t0"];
    let failing: Vec<&str> = rels
        .iter()
        .zip(names)
        .filter(|(rel, _)| {
            !rel.evaluate(&one, t.matrices(), |c, m| m.scale(c))
                .map(|m| m.is_zero_matrix())
                .unwrap_or(false)
        })
        .map(|(_, name)| name)
        .collect();
    r.verdict("level relations hold", failing.is_empty(), json!({ "failing": failing }));
    let dim = commutant_dimension(&t);
    r.result("commutant_dimension", dim);
    r.verdict("commutant is the scalars", dim == 1, json!({ "commutant_dimension": dim }));
    Ok(r)
}

// ---------------------------------------------------------------- brane

fn resolver(g: &Global) -> Result<impl Fn(&str) -> azumaya::Result<Presentation>> {
    let given = g.presentation.as_deref().map(read_presentation).transpose()?;
    Ok(move |name: &str| match &given {
        Some(p) if p.name() == name => Ok(p.clone()),
        Some(p) => Err(azumaya::Error::Format(format!(
            "brane is on `{name}`, the given presentation is `{}`",
            p.name()
        ))),
        None if name == "GL2" => Ok(gl2_presentation()),
        None => Err(azumaya::Error::Format(format!(
            "presentation `{name}` is not built in; pass --presentation"
        ))),
    })
}

fn read_brane(g: &Global, path: &Path) -> Result<DBrane> {
    let v = read_json(path)?;
    DBrane::from_json(&v, resolver(g)?).with_context(|| format!("in {}", path.display()))
}

fn brane_check_verdict(r: &mut Report, b: &DBrane) -> Result<bool> {
    let c = check_brane(b)?;
    r.verdict(
        "relations vanish on the images",
        c.holds,
        json!({ "failing_relations": relation_names(b.source(), &c.failing) }),
    );
    Ok(c.holds)
}

fn brane(g: &Global, cmd: &BraneCommand) -> Result<Report> {
    match cmd {
        BraneCommand::Check { brane } => {
            let b = read_brane(g, brane)?;
            let mut r = Report::new("brane check");
            echo_common(&mut r, g);
            r.input("brane", path_str(brane));
            r.result("presentation", b.source().name())
                .result("level", b.level())
                .result("images", brane_images(&b));
            brane_check_verdict(&mut r, &b)?;
            Ok(r)
        }
        BraneCommand::Classify { brane } => {
            let b = read_brane(g, brane)?;
            let mut r = Report::new("brane classify");
            echo_common(&mut r, g);
            r.input("brane", path_str(brane));
            if !brane_check_verdict(&mut r, &b)? {
                return Ok(r);
            }
            let class = classify(&b)?;
            let image = image_lattice(&b)?;
            let cent = image_centralizer(&b)?;
            let center = center_lattice(b.level());
            r.result("classification", class.to_string())
                .result("image_lattice", lattice_json(&image))
                .result("centralizer", lattice_json(&cent))
                .result("center", lattice_json(&center));
            let (check, pass) = match class {
                Classification::Maximal => ("maximal: centralizer is the center", cent == center),
                Classification::Minimal => ("minimal: centralizer is everything", cent.is_full()),
                Classification::Neither => ("centralizer contains the center", center.is_subset_of(&cent)),
            };
            r.verdict(check, pass, json!({ "centralizer": cent.to_string() }));
            Ok(r)
        }
        BraneCommand::Twomorph { f, g: gp } => {
            let bf = read_brane(g, f)?;
            let bg = read_brane(g, gp)?;
            let mut r = Report::new("brane twomorph");
            echo_common(&mut r, g);
            r.input("f", path_str(f)).input("g", path_str(gp));
            let rep = two_morphism_exists(&bf, &bg)?;
            r.result("exists", rep.exists)
                .result("source_centralizer", lattice_json(&rep.source_centralizer))
                .result("target_centralizer", lattice_json(&rep.target_centralizer));
            r.verdict("2-morphism f => g exists", rep.exists, rep.witness_json());
            Ok(r)
        }
        BraneCommand::Family { family } => brane_family(g, family),
        BraneCommand::Beta => {
            let n = require_level(g)?;
            let order = root_order_for(g, n)?;
            let b = beta_brane(n, order)?;
            let mut r = Report::new("brane beta");
            echo_common(&mut r, g);
            r.result("brane", b.to_json());
            brane_check_verdict(&mut r, &b)?;
            r.result("classification", classify(&b)?.to_string());
            Ok(r)
        }
    }
}

fn brane_images(b: &DBrane) -> Value {
    let map: serde_json::Map<String, Value> = b
        .source()
        .generators()
        .iter()
        .zip(b.images())
        .map(|(g, x)| (g.clone(), Value::String(x.to_string())))
        .collect();
    Value::Object(map)
}

fn brane_family(g: &Global, path: &Path) -> Result<Report> {
    let v = read_json(path)?;
    let base = path.parent().map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("."));
    let entries = v
        .get("branes")
        .and_then(Value::as_object)
        .ok_or_else(|| anyhow!("family file needs a `branes` object mapping levels to files"))?;
    let mut family = BTreeMap::new();
    for (key, file) in entries {
        let level: u64 = key.parse().with_context(|| format!("bad level key `{key}`"))?;
        let file = file.as_str().ok_or_else(|| anyhow!("brane entry `{key}` must be a file name"))?;
        family.insert(level, read_brane(g, &base.join(file))?);
    }
    let pairs = match v.get("pairs") {
        Some(p) => serde_json::from_value::<Vec<(u64, u64)>>(p.clone()).context("`pairs` must be [[n, m], ...]")?,
        None => {
            let levels: Vec<u64> = family.keys().copied().collect();
            levels
                .iter()
                .flat_map(|&n| levels.iter().map(move |&m| (n, m)))
                .filter(|&(n, m)| n < m && m % n == 0)
                .collect()
        }
    };
    let mut r = Report::new("brane family");
    echo_common(&mut r, g);
    r.input("family", path_str(path))
        .input("levels", json!(family.keys().collect::<Vec<_>>()))
        .input("pairs", json!(pairs));
    let rep = check_compatible_family(&family, &pairs)?;
    let mut rows = Vec::new();
    for p in &rep.pairs {
        let source = &family[&p.n];
        rows.push(json!({
            "n": p.n,
            "m": p.m,
            "k": p.embedding.k,
            "embedding_passes": p.embedding.passes,
            "composed_failing": relation_names(source.source(), &p.composed_failing),
            "two_morphism": p.two_morphism.to_json(),
            "passes": p.passes,
        }));
        r.verdict(
            format!("pair ({}, {})", p.n, p.m),
            p.passes,
            json!({
                "embedding_obstruction": p.embedding.obstruction,
                "composed_failing": relation_names(source.source(), &p.composed_failing),
                "two_morphism": p.two_morphism.witness_json(),
            }),
        );
    }
    r.result("pairs", rows).result("compatible", rep.passes);
    Ok(r)
}

// ---------------------------------------------------------------- coalg

enum CoalgInput {
    Coalgebra(Coalgebra),
    Quiver(Quiver, Coalgebra),
}

fn read_coalgebra(g: &Global, path: &Path) -> Result<CoalgInput> {
    let v = read_json(path)?;
    if v.get("vertices").is_some() {
        let q = Quiver::from_json(&v).with_context(|| format!("in {}", path.display()))?;
        let c = path_coalgebra(&q, g.max_length.unwrap_or(DEFAULT_PATH_LENGTH));
        Ok(CoalgInput::Quiver(q, c))
    } else {
        Ok(CoalgInput::Coalgebra(
            Coalgebra::from_json(&v).with_context(|| format!("in {}", path.display()))?,
        ))
    }
}

fn coalgebra_json(c: &Coalgebra) -> Value {
    let delta: serde_json::Map<String, Value> = (0..c.dim())
        .map(|i| (c.basis()[i].clone(), Value::String(c.delta_string(i))))
        .collect();
    let counit: serde_json::Map<String, Value> = (0..c.dim())
        .map(|i| (c.basis()[i].clone(), Value::String(c.counit()[i].to_string())))
        .collect();
    json!({ "dim": c.dim(), "basis": c.basis(), "delta": delta, "counit": counit })
}

fn law_verdict(r: &mut Report, c: &Coalgebra) -> CoalgebraCheck {
    let check = check_coassociative(c);
    let witness = match check.counterexample {
        Some((i, law)) => json!({
            "basis_element": c.basis()[i],
            "law": law.to_string(),
            "delta": c.delta_string(i),
        }),
        None => Value::Null,
    };
    r.verdict("coassociativity and counit laws", check.holds, witness);
    check
}

/// Linear combination of basis labels, e.g. `a - 2*b`.
fn expansion(c: &Coalgebra, v: &[Rational]) -> String {
    let mut out = String::new();
    for (i, x) in v.iter().enumerate() {
        if Ring::is_zero(x) {
            continue;
        }
        let neg = x < &Rational::from_integer(0.into());
        let mag = if neg { -x.clone() } else { x.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !Ring::is_one(&mag) {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(&c.basis()[i]);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn unit_vector(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::from_integer(0.into()); dim];
    v[i] = Rational::from_integer(1.into());
    v
}

fn coalg(g: &Global, cmd: &CoalgCommand) -> Result<Report> {
    match cmd {
        CoalgCommand::Matrix { n } => {
            let mut r = Report::new("coalg matrix");
            r.input("n", *n);
            let c = matrix_coalgebra(*n);
            r.result("coalgebra", coalgebra_json(&c));
            law_verdict(&mut r, &c);
            Ok(r)
        }
        CoalgCommand::Path { quiver } => {
            let v = read_json(quiver)?;
            let q = Quiver::from_json(&v).with_context(|| format!("in {}", quiver.display()))?;
            let len = g.max_length.unwrap_or(DEFAULT_PATH_LENGTH);
            let mut r = Report::new("coalg path");
            r.input("quiver", path_str(quiver)).input("max_length", len);
            let c = path_coalgebra(&q, len);
            r.result("coalgebra", coalgebra_json(&c));
            law_verdict(&mut r, &c);
            Ok(r)
        }
        CoalgCommand::Check { file } => {
            let mut r = Report::new("coalg check");
            r.input("file", path_str(file));
            let c = coalg_input(g, &mut r, file)?;
            r.result("dim", c.dim());
            law_verdict(&mut r, &c);
            Ok(r)
        }
        CoalgCommand::Dual { file } => {
            let mut r = Report::new("coalg dual");
            r.input("file", path_str(file));
            let c = coalg_input(g, &mut r, file)?;
            let a = dual_algebra(&c);
            let table: Vec<Value> = a
                .nonzero_products()
                .map(|((x, y), p)| {
                    let mut v = vec![Rational::from_integer(0.into()); c.dim()];
                    for (k, coef) in p {
                        v[*k] = coef.clone();
                    }
                    json!([c.basis()[*x], c.basis()[*y], expansion(&c, &v)])
                })
                .collect();
            r.result("dim", a.dim())
                .result("unit", expansion(&c, a.unit()))
                .result("products", table)
                .result("commutative", a.is_commutative());
            r.verdict("associative", a.is_associative(), Value::Null);
            let bad: Vec<&String> = (0..c.dim())
                .filter(|&i| !a.unit_law_holds(&unit_vector(c.dim(), i)))
                .map(|i| &c.basis()[i])
                .collect();
            r.verdict("counit is the unit", bad.is_empty(), json!({ "failing_basis_elements": bad }));
            Ok(r)
        }
        CoalgCommand::Grouplikes { file } => coalg_grouplikes(g, file),
    }
}

fn coalg_input(g: &Global, r: &mut Report, file: &Path) -> Result<Coalgebra> {
    Ok(match read_coalgebra(g, file)? {
        CoalgInput::Coalgebra(c) => c,
        CoalgInput::Quiver(_, c) => {
            r.input("max_length", g.max_length.unwrap_or(DEFAULT_PATH_LENGTH));
            c
        }
    })
}

fn coalg_grouplikes(g: &Global, file: &Path) -> Result<Report> {
    let mut r = Report::new("coalg grouplikes");
    r.input("file", path_str(file));
    let input = read_coalgebra(g, file)?;
    let c = match &input {
        CoalgInput::Coalgebra(c) => c,
        CoalgInput::Quiver(_, c) => {
            r.input("max_length", g.max_length.unwrap_or(DEFAULT_PATH_LENGTH));
            c
        }
    };
    let rep = grouplikes(c);
    let gl: Vec<String> = rep.elements.iter().map(|v| expansion(c, v)).collect();
    let mut skew = Vec::new();
    for (gi, gv) in rep.elements.iter().enumerate() {
        for (hi, hv) in rep.elements.iter().enumerate() {
            let basis = skew_primitives(c, gv, hv);
            skew.push(json!({
                "g": gl[gi],
                "h": gl[hi],
                "dim": basis.len(),
                "basis": basis.iter().map(|v| expansion(c, v)).collect::<Vec<_>>(),
            }));
        }
    }
    r.result("dim", c.dim())
        .result("method", rep.method.to_string())
        .result("grouplikes", json!(gl))
        .result("skew_primitives", skew);
    let bad: Vec<&String> = rep
        .elements
        .iter()
        .zip(&gl)
        .filter(|(v, _)| !is_grouplike(c, v))
        .map(|(_, s)| s)
        .collect();
    r.verdict("each element is grouplike", bad.is_empty(), json!({ "failing": bad }));
    if let CoalgInput::Quiver(q, c) = &input {
        let vertices: Vec<Vec<Rational>> = (0..q.vertices().len()).map(|i| unit_vector(c.dim(), i)).collect();
        let same = vertices.len() == rep.elements.len() && vertices.iter().all(|v| rep.elements.contains(v));
        r.verdict(
            "grouplikes are exactly the vertices",
            same,
            json!({ "vertices": q.vertices(), "found": gl }),
        );
        let mut not_skew = Vec::new();
        for (s, t, label) in q.arrows() {
            let idx = c
                .index_of(label)
                .ok_or_else(|| anyhow!("arrow `{label}` missing from the basis"))?;
            let basis = skew_primitives(c, &vertices[*s], &vertices[*t]);
            if !in_span(&basis, &unit_vector(c.dim(), idx)) {
                not_skew.push(label.clone());
            }
        }
        r.verdict(
            "arrows are (source, target)-skew-primitive",
            not_skew.is_empty(),
            json!({ "failing_arrows": not_skew }),
        );
    }
    Ok(r)
}
