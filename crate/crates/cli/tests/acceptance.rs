//! Acceptance criteria 1-10, exact arithmetic throughout. Prints one
//! PASS/FAIL line per criterion and exits nonzero if any fails.

mod common;

use std::collections::BTreeMap;
use std::panic;
use std::process::ExitCode;
use std::time::Instant;

use azumaya::chtrace::{newton_sigma, verify_ch};
use azumaya::coalg::{check_coassociative, dual_algebra, grouplikes, matrix_coalgebra, path_coalgebra, Quiver};
use azumaya::dbrane::{
    beta_brane, classify, compose_with_embedding, gl2_presentation, image_centralizer, image_lattice,
    two_morphism_exists, Classification, DBrane,
};
use azumaya::lattice::ExponentLattice;
use azumaya::matrep::{conjugate, invariant_profile, is_representation, rep_ideal, trace_word, MatrixTuple};
use azumaya::matrix::Matrix;
use azumaya::ncalg::{parse_presentation, Word};
use azumaya::qtorus::{
    center_lattice, commutant_dimension, embedding_relation_residual, monomials_commute, specialize,
    torus_relations, verify_embedding, QTElement,
};
use azumaya::scalar::{rat, Cyclotomic, Rational, Ring};
use azumaya::upoly::UPoly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Rational> {
    Matrix::from_fn(n, n, |_, _| random_rational(rng))
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Rational> {
    loop {
        let g = random_matrix(rng, n);
        if !Ring::is_zero(&g.determinant()) {
            return g;
        }
    }
}

/// `det(tI - A)` by cofactor expansion along the first row.
fn cofactor_charpoly(a: &Matrix<Rational>) -> UPoly {
    fn det(m: &[Vec<UPoly>]) -> UPoly {
        if m.len() == 1 {
            return m[0][0].clone();
        }
        let mut acc = UPoly::zero();
        for j in 0..m.len() {
            let minor: Vec<Vec<UPoly>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = &m[0][j] * &det(&minor);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }
    let n = a.rows();
    let rows: Vec<Vec<UPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let entry = UPoly::constant(-a.get(i, j).clone());
                    if i == j {
                        &UPoly::x() + &entry
                    } else {
                        entry
                    }
                })
                .collect()
        })
        .collect();
    det(&rows)
}

fn cayley_hamilton() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for trial in 0..200 {
        let n = 2 + trial % 3;
        let a = random_matrix(&mut rng, n);
        let v = verify_ch(&a).map_err(|e| e.to_string())?;
        ensure(v.residual.is_zero_matrix(), || format!("nonzero residual for {a:?}"))?;
        let oracle = cofactor_charpoly(&a);
        let ours = v.polynomial.coeffs_ascending(&rat(1, 1));
        for (i, c) in ours.iter().enumerate() {
            ensure(c == &oracle.coeff(i), || format!("coefficient {i} differs for {a:?}"))?;
        }
    }
    Ok(())
}

fn newton() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for n in 1..=6usize {
        let sigmas: Vec<_> = (1..=n).map(newton_sigma).collect();
        for _ in 0..50 {
            let lambdas: Vec<Rational> = (0..n).map(|_| random_rational(&mut rng)).collect();
            let e = lambdas
                .iter()
                .fold(UPoly::constant(rat(1, 1)), |acc, l| &acc * &UPoly::new(vec![rat(1, 1), l.clone()]));
            let p: Vec<Rational> = (1..=n).map(|i| lambdas.iter().map(|l| Ring::pow(l, i as u32)).sum()).collect();
            for i in 1..=n {
                ensure(sigmas[i - 1].eval(&rat(1, 1), &p[..i]) == e.coeff(i), || {
                    format!("sigma_{i} at {lambdas:?}")
                })?;
            }
        }
    }
    Ok(())
}

fn invariance() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    for trial in 0..100 {
        let n = 1 + trial % 4;
        let len = 1 + trial % 5;
        let t = MatrixTuple::from_matrices(vec![random_matrix(&mut rng, n), random_matrix(&mut rng, n)])
            .map_err(|e| e.to_string())?;
        let moved = conjugate(&t, &random_invertible(&mut rng, n)).map_err(|e| e.to_string())?;
        ensure(invariant_profile(&t, len) == invariant_profile(&moved, len), || {
            format!("profile changed (n={n}, L={len})")
        })?;
    }
    let t = MatrixTuple::from_matrices(vec![random_matrix(&mut rng, 3), random_matrix(&mut rng, 3)])
        .map_err(|e| e.to_string())?;
    for len in 1..=5u32 {
        for code in 0..(1u32 << len) {
            let w = Word::from_letters(&(0..len).map(|b| (code >> b) & 1).collect::<Vec<_>>());
            let tr = trace_word(&w, &t).map_err(|e| e.to_string())?;
            for r in 1..len as usize {
                ensure(trace_word(&w.rotate(r), &t).map_err(|e| e.to_string())? == tr, || {
                    format!("rotation {r} of {w:?}")
                })?;
            }
        }
    }
    Ok(())
}

fn rep_ideal_consistency() -> Check {
    let pres = parse_presentation("algebra Comm2; generators x, y; relations [x,y];").map_err(|e| e.to_string())?;
    let ideal = rep_ideal(&pres, 2);
    ensure(ideal.generators.len() == 4, || format!("{} generators", ideal.generators.len()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    let one = rat(1, 1);
    for i in 0..100 {
        let a = random_matrix(&mut rng, 2);
        let b = if i < 50 {
            // p(A) with p of degree 1 commutes with A.
            a.scale(&random_rational(&mut rng)) + Matrix::scalar_like(2, random_rational(&mut rng))
        } else {
            random_matrix(&mut rng, 2)
        };
        let t = MatrixTuple::from_matrices(vec![a, b]).map_err(|e| e.to_string())?;
        let rep = is_representation(&pres, &t).map_err(|e| e.to_string())?;
        ensure(i >= 50 || rep, || "commuting pair rejected".into())?;
        ensure(ideal.vanishes_at(&t, &one) == rep, || format!("mismatch at pair {i}"))?;
    }
    Ok(())
}

fn scan_matches(lattice: &ExponentLattice, gens: &[[i64; 2]], n: u64) -> bool {
    let m = n as i64;
    (-2 * m..=2 * m).all(|a| {
        (-2 * m..=2 * m).all(|b| lattice.contains([a, b]) == gens.iter().all(|&g| monomials_commute([a, b], g, n)))
    })
}

fn centralizers() -> Check {
    for n in 1..=8u64 {
        let c = center_lattice(n);
        ensure(c == ExponentLattice::span(n, &[[n as i64, 0], [0, n as i64]]), || format!("center at {n}: {c}"))?;
        ensure(scan_matches(&c, &[[1, 0], [0, 1]], n), || format!("center scan at {n}"))?;
        let b = beta_brane(n, n).map_err(|e| e.to_string())?;
        let image = image_lattice(&b).map_err(|e| e.to_string())?;
        let cent = image_centralizer(&b).map_err(|e| e.to_string())?;
        ensure(image == cent, || format!("C(Im beta_{n}) = {cent}, Im = {image}"))?;
        ensure(scan_matches(&cent, image.basis(), n), || format!("beta_{n} scan"))?;
    }
    for m in 1..=12u64 {
        for n in (1..=m).filter(|n| m % n == 0) {
            let bm = beta_brane(m, m).map_err(|e| e.to_string())?;
            let composed = compose_with_embedding(&beta_brane(n, n).map_err(|e| e.to_string())?, m)
                .map_err(|e| e.to_string())?;
            let report = two_morphism_exists(&bm, &composed).map_err(|e| e.to_string())?;
            ensure(report.exists, || format!("no 2-morphism for ({n}, {m})"))?;
            let gm = image_lattice(&bm).map_err(|e| e.to_string())?;
            let gc = image_lattice(&composed).map_err(|e| e.to_string())?;
            ensure(
                scan_matches(&report.source_centralizer, gm.basis(), m)
                    && scan_matches(&report.target_centralizer, gc.basis(), m),
                || format!("scan mismatch for ({n}, {m})"),
            )?;
        }
    }
    Ok(())
}

fn azumaya_fiber() -> Check {
    for n in 1..=6u64 {
        let one = Cyclotomic::one(n);
        let t = specialize(n, &one, &one).map_err(|e| e.to_string())?;
        let id = Matrix::identity_like(n as usize, &one);
        for rel in torus_relations(n, n, &one, &one).map_err(|e| e.to_string())? {
            let value = rel.evaluate(&id, t.matrices(), |c, m| m.scale(c)).map_err(|e| e.to_string())?;
            ensure(value.is_zero_matrix(), || format!("relation fails at n={n}"))?;
        }
        let dim = commutant_dimension(&t);
        ensure(dim == 1, || format!("commutant dimension {dim} at n={n}"))?;
    }
    Ok(())
}

fn embedding_table() -> Check {
    let mut rows = Vec::new();
    for m in 1..=12u64 {
        for n in (1..=m).filter(|n| m % n == 0) {
            let check = verify_embedding(n, m).map_err(|e| e.to_string())?;
            let k = m / n;
            ensure(check.passes == ((k * k) % m == k % m), || format!("({n}, {m})"))?;
            let residual = embedding_relation_residual(n, m).map_err(|e| e.to_string())?;
            ensure(check.passes == Ring::is_zero(&residual), || format!("multiplication disagrees at ({n}, {m})"))?;
            rows.push(((n, m), check.passes));
        }
    }
    let table: BTreeMap<_, _> = rows.into_iter().collect();
    ensure(table.get(&(2, 4)) == Some(&false), || "(2, 4) should fail".into())?;
    ensure(table.get(&(2, 6)) == Some(&true), || "(2, 6) should pass".into())?;
    // Direct monomial products in the level-m torus for the two named pairs.
    for (n, m, expect) in [(2u64, 4u64, false), (2, 6, true)] {
        let k = (m / n) as i64;
        let uk = QTElement::monomial(m, m, k, 0, Cyclotomic::one(m)).map_err(|e| e.to_string())?;
        let vk = QTElement::monomial(m, m, 0, k, Cyclotomic::one(m)).map_err(|e| e.to_string())?;
        let q_n = azumaya::qtorus::torus_q(n, n).lift(m).map_err(|e| e.to_string())?;
        let lhs = vk.clone() * uk.clone();
        let rhs = (uk * vk).scale(&q_n);
        ensure((lhs == rhs) == expect, || format!("direct product at ({n}, {m})"))?;
    }
    Ok(())
}

fn coalgebras() -> Check {
    for n in 1..=4 {
        let c = matrix_coalgebra(n);
        ensure(check_coassociative(&c).holds, || format!("matrix coalgebra {n}"))?;
        let a = dual_algebra(&c);
        let idx = |i: usize, j: usize| c.index_of(&format!("e{}{}", i + 1, j + 1)).expect("label");
        for (i, j, k, l) in (0..n).flat_map(|i| (0..n).flat_map(move |j| (0..n).flat_map(move |k| (0..n).map(move |l| (i, j, k, l))))) {
            let mut expected = vec![rat(0, 1); n * n];
            if j == k {
                expected[idx(i, l)] = rat(1, 1);
            }
            ensure(a.basis_product(idx(i, j), idx(k, l)) == expected, || format!("e{i}{j} * e{k}{l}"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    for _ in 0..20 {
        let nv = rng.gen_range(1..=3);
        let arrows = (0..rng.gen_range(0..=3u8))
            .map(|i| (rng.gen_range(0..nv), rng.gen_range(0..nv), ((b'a' + i) as char).to_string()))
            .collect();
        let q = Quiver::new((0..nv).map(|i| format!("v{i}")).collect(), arrows).map_err(|e| e.to_string())?;
        let c = path_coalgebra(&q, rng.gen_range(1..=3));
        ensure(check_coassociative(&c).holds, || format!("path coalgebra {:?}", q.to_json()))?;
        let vertices: Vec<Vec<Rational>> = (0..nv)
            .map(|i| (0..c.dim()).map(|j| if i == j { rat(1, 1) } else { rat(0, 1) }).collect())
            .collect();
        ensure(grouplikes(&c).elements == vertices, || format!("grouplikes of {:?}", q.to_json()))?;
    }
    ensure(grouplikes(&matrix_coalgebra(2)).elements.is_empty(), || "M_2 has grouplikes".into())
}

fn classification() -> Check {
    for n in 2..=6u64 {
        let class = classify(&beta_brane(n, n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(class == Classification::Neither, || format!("beta_{n} is {class}"))?;
    }
    let qplane = parse_presentation("algebra QPlane; generators x, y; relations y*x + x*y;").map_err(|e| e.to_string())?;
    let mono = |n: u64, i: i64, j: i64| QTElement::monomial(n, n, i, j, Cyclotomic::one(n)).expect("monomial");
    let maximal = DBrane::new(qplane, 2, 2, BTreeMap::from([("x".into(), mono(2, 1, 0)), ("y".into(), mono(2, 0, 1))]))
        .map_err(|e| e.to_string())?;
    let mut branes = vec![maximal];
    for n in 1..=6u64 {
        let s = n as i64;
        let zero = QTElement::zero(n, n).map_err(|e| e.to_string())?;
        branes.push(
            DBrane::new(
                gl2_presentation(),
                n,
                n,
                BTreeMap::from([
                    ("s".into(), mono(n, s, 0)),
                    ("t".into(), mono(n, 0, s)),
                    ("u".into(), zero.clone()),
                    ("v".into(), zero),
                    ("w".into(), mono(n, -s, -s)),
                ]),
            )
            .map_err(|e| e.to_string())?,
        );
    }
    let mut seen = (0, 0);
    for b in &branes {
        let class = classify(b).map_err(|e| e.to_string())?;
        let cent = image_centralizer(b).map_err(|e| e.to_string())?;
        match class {
            Classification::Maximal => {
                seen.0 += 1;
                ensure(cent == center_lattice(b.level()), || format!("maximal brane with C(Im) = {cent}"))?;
            }
            Classification::Minimal => {
                seen.1 += 1;
                ensure(cent.is_full(), || format!("minimal brane with C(Im) = {cent}"))?;
            }
            Classification::Neither => {}
        }
    }
    ensure(seen.0 >= 2 && seen.1 >= 5, || format!("too few extremal examples: {seen:?}"))
}

fn determinism() -> Check {
    for case in common::CORPUS {
        let (a, b) = (common::run(case.args), common::run(case.args));
        ensure(a.status.code() == Some(case.status), || {
            format!("{}: exit {:?}: {}", case.name, a.status.code(), String::from_utf8_lossy(&a.stderr))
        })?;
        ensure(a.stdout == b.stdout && a.status == b.status, || format!("{} differs between runs", case.name))?;
        ensure(!a.stdout.is_empty(), || format!("{} printed nothing", case.name))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("Cayley-Hamilton suite", cayley_hamilton),
        ("Newton suite", newton),
        ("invariance suite", invariance),
        ("rep-ideal consistency", rep_ideal_consistency),
        ("quantum-torus centralizer suite", centralizers),
        ("Azumaya-fiber suite", azumaya_fiber),
        ("embedding-obstruction table", embedding_table),
        ("coalgebra suite", coalgebras),
        ("D-brane classification", classification),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2} ({name}): PASS [{secs:.1}s]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} ({name}): FAIL: {msg}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
