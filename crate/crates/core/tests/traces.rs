use azumaya::chtrace::{ch_polynomial, newton_sigma, power_traces, verify_ch};
use azumaya::matrep::{
    conjugate, invariant_profile, is_representation, rep_ideal, trace_word, MatrixTuple,
};
use azumaya::matrix::Matrix;
use azumaya::ncalg::{parse_presentation, Word};
use azumaya::scalar::{rat, Rational, Ring};
use azumaya::upoly::UPoly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

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

/// `det(tI - A)` by cofactor expansion along the first row, over `Q[t]`.
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

#[test]
fn cayley_hamilton_against_cofactor_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for trial in 0..60 {
        let n = 2 + trial % 3;
        let a = random_matrix(&mut rng, n);
        let v = verify_ch(&a).unwrap();
        assert!(v.holds && v.residual.is_zero_matrix());
        let oracle = cofactor_charpoly(&a);
        let ours = v.polynomial.coeffs_ascending(&rat(1, 1));
        assert_eq!(ours.len(), n + 1);
        for (i, c) in ours.iter().enumerate() {
            assert_eq!(c, &oracle.coeff(i), "coefficient {i} of {a:?}");
        }
    }
}

#[test]
fn ch_polynomial_rejects_wrong_trace_count() {
    assert!(ch_polynomial(3, &[rat(1, 1), rat(2, 1)]).is_err());
    assert!(verify_ch(&Matrix::from_fn(2, 3, |_, _| rat(0, 1))).is_err());
}

#[test]
fn newton_sigmas_are_elementary_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in 1..=6usize {
        let sigmas: Vec<_> = (1..=n).map(newton_sigma).collect();
        for _ in 0..10 {
            let lambdas: Vec<Rational> = (0..n).map(|_| random_rational(&mut rng)).collect();
            // prod (1 + lambda t) = sum e_i t^i
            let e = lambdas.iter().fold(UPoly::constant(rat(1, 1)), |acc, l| {
                &acc * &UPoly::new(vec![rat(1, 1), l.clone()])
            });
            let power_sums: Vec<Rational> = (1..=n)
                .map(|i| lambdas.iter().map(|l| Ring::pow(l, i as u32)).sum())
                .collect();
            for i in 1..=n {
                let value = sigmas[i - 1].eval(&rat(1, 1), &power_sums[..i]);
                assert_eq!(value, e.coeff(i), "sigma_{i} at {lambdas:?}");
            }
        }
    }
}

#[test]
fn power_traces_of_diagonal_matrices() {
    let d = Matrix::from_fn(3, 3, |i, j| if i == j { rat(i as i64 + 1, 1) } else { rat(0, 1) });
    assert_eq!(power_traces(&d), vec![rat(6, 1), rat(14, 1), rat(36, 1)]);
}

#[test]
fn rep_ideal_vanishes_exactly_at_representations() {
    let pres = parse_presentation("algebra Comm2; generators x, y; relations [x,y];").unwrap();
    let ideal = rep_ideal(&pres, 2);
    assert_eq!(ideal.generators.len(), 4);
    let one = rat(1, 1);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut commuting, mut generic) = (0, 0);
    while commuting < 25 || generic < 25 {
        // Commuting pairs as polynomials in a common matrix; generic pairs at random.
        let a = random_matrix(&mut rng, 2);
        let (x, y) = if rng.gen_bool(0.5) {
            let (c0, c1) = (random_rational(&mut rng), random_rational(&mut rng));
            let b = a.scale(&c1) + Matrix::scalar_like(2, c0);
            (a, b)
        } else {
            (a, random_matrix(&mut rng, 2))
        };
        let t = MatrixTuple::from_matrices(vec![x, y]).unwrap();
        let rep = is_representation(&pres, &t).unwrap();
        assert_eq!(ideal.vanishes_at(&t, &one), rep);
        if rep {
            commuting += 1;
        } else {
            generic += 1;
        }
    }
}

#[test]
fn invariants_are_conjugation_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for trial in 0..20 {
        let n = 1 + trial % 3;
        let k = 1 + trial % 2;
        let t = MatrixTuple::from_matrices((0..k).map(|_| random_matrix(&mut rng, n)).collect()).unwrap();
        let g = random_invertible(&mut rng, n);
        let moved = conjugate(&t, &g).unwrap();
        assert_eq!(invariant_profile(&t, 4), invariant_profile(&moved, 4));
    }
}

#[test]
fn trace_word_is_rotation_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let t = MatrixTuple::from_matrices(vec![random_matrix(&mut rng, 3), random_matrix(&mut rng, 3)]).unwrap();
    for len in 1..=5u32 {
        for code in 0..(1u32 << len) {
            let letters: Vec<u32> = (0..len).map(|b| (code >> b) & 1).collect();
            let w = Word::from_letters(&letters);
            let tr = trace_word(&w, &t).unwrap();
            for r in 1..len as usize {
                assert_eq!(trace_word(&w.rotate(r), &t).unwrap(), tr);
            }
        }
    }
}
