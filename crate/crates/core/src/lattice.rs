//! Sublattices of `Z^2` in Hermite normal form, plus integer kernels.

use std::fmt;

use serde_json::{json, Value};

/// A sublattice of `Z^2` attached to a quantum-torus level.
///
/// The basis is canonical: rank 2 is `[[a, b], [0, d]]` with `a, d > 0` and
/// `0 <= b < d`; rank 1 is a single row whose first nonzero entry is
/// positive; rank 0 is empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExponentLattice {
    level: u64,
    basis: Vec<[i64; 2]>,
}

impl ExponentLattice {
    /// The lattice spanned by `vectors`.
    pub fn span(level: u64, vectors: &[[i64; 2]]) -> Self {
        ExponentLattice {
            level,
            basis: hnf2(vectors),
        }
    }

    pub fn full(level: u64) -> Self {
        Self::span(level, &[[1, 0], [0, 1]])
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn basis(&self) -> &[[i64; 2]] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full(&self) -> bool {
        self.basis == [[1, 0], [0, 1]]
    }

    /// Index `[Z^2 : L]`, or `None` when the rank is below 2.
    pub fn index(&self) -> Option<i64> {
        match self.basis.as_slice() {
            [[a, _], [_, d]] => Some(a * d),
            _ => None,
        }
    }

    /// Integer coordinates of `v` in the HNF basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: [i64; 2]) -> Option<Vec<i64>> {
        match self.basis.as_slice() {
            [] => (v == [0, 0]).then(Vec::new),
            [[a, b]] => {
                if *a != 0 {
                    (v[0] % a == 0 && v[1] == (v[0] / a) * b).then(|| vec![v[0] / a])
                } else {
                    (v[0] == 0 && v[1] % b == 0).then(|| vec![v[1] / b])
                }
            }
            [[a, b], [_, d]] => {
                if v[0] % a != 0 {
                    return None;
                }
                let x = v[0] / a;
                let rest = v[1] - x * b;
                (rest % d == 0).then(|| vec![x, rest / d])
            }
            _ => unreachable!("lattice in Z^2 has rank at most 2"),
        }
    }

    pub fn contains(&self, v: [i64; 2]) -> bool {
        self.coordinates(v).is_some()
    }

    /// True iff every basis vector of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &ExponentLattice) -> bool {
        self.basis.iter().all(|&v| other.contains(v))
    }

    /// First basis vector of `self` outside `other`.
    pub fn separating_vector(&self, other: &ExponentLattice) -> Option<[i64; 2]> {
        self.basis.iter().copied().find(|&v| !other.contains(v))
    }

    pub fn to_json(&self) -> Value {
        json!({ "level": self.level, "basis": self.basis })
    }
}

impl fmt::Display for ExponentLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|[a, b]| format!("({a},{b})"))
            .collect();
        write!(f, "span{{{}}}", rows.join(", "))
    }
}

impl fmt::Debug for ExponentLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExponentLattice(level {}, {self})", self.level)
    }
}

/// `(g, s, t)` with `g = gcd(a, b) >= 0` and `s*a + t*b = g`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

fn hnf2(vectors: &[[i64; 2]]) -> Vec<[i64; 2]> {
    // Combine all first coordinates into one row; the others end with a
    // zero first coordinate and only contribute to the gcd of the second.
    let mut pivot: Option<[i128; 2]> = None;
    let mut d: i128 = 0;
    for v in vectors {
        let v = [v[0] as i128, v[1] as i128];
        match pivot {
            None if v[0] != 0 => pivot = Some(v),
            None => d = ext_gcd(d, v[1]).0,
            Some(p) => {
                if v[0] == 0 {
                    d = ext_gcd(d, v[1]).0;
                    continue;
                }
                let (g, s, t) = ext_gcd(p[0], v[0]);
                let new_p = [g, s * p[1] + t * v[1]];
                // The complementary unimodular combination has first entry 0.
                let other = (v[0] / g) * p[1] - (p[0] / g) * v[1];
                d = ext_gcd(d, other).0;
                pivot = Some(new_p);
            }
        }
    }
    let narrow = |x: i128| i64::try_from(x).expect("lattice entry exceeds i64");
    match pivot {
        None if d == 0 => Vec::new(),
        None => vec![[0, narrow(d)]],
        Some(mut p) => {
            if p[0] < 0 {
                p = [-p[0], -p[1]];
            }
            if d == 0 {
                vec![[narrow(p[0]), narrow(p[1])]]
            } else {
                vec![[narrow(p[0]), narrow(p[1].rem_euclid(d))], [0, narrow(d)]]
            }
        }
    }
}

/// A basis of `{x in Z^m : A x = 0}` for an integer matrix `A` with `m`
/// columns, by unimodular column reduction of `A` tracked in `U`.
pub fn integer_kernel(a: &[Vec<i128>], m: usize) -> Vec<Vec<i128>> {
    let rows = a.len();
    // Column-major copies of A and of the transform U.
    let mut ac: Vec<Vec<i128>> = (0..m).map(|j| a.iter().map(|r| r[j]).collect()).collect();
    let mut uc: Vec<Vec<i128>> = (0..m)
        .map(|j| (0..m).map(|i| (i == j) as i128).collect())
        .collect();
    let mut p = 0;
    for r in 0..rows {
        if p == m {
            break;
        }
        for j in p + 1..m {
            let (x, y) = (ac[p][r], ac[j][r]);
            if y == 0 {
                continue;
            }
            let (g, s, t) = ext_gcd(x, y);
            let (xg, yg) = (x / g, y / g);
            for cols in [&mut ac, &mut uc] {
                let (cp, cj) = (cols[p].clone(), cols[j].clone());
                cols[p] = cp.iter().zip(&cj).map(|(u, v)| s * u + t * v).collect();
                cols[j] = cp.iter().zip(&cj).map(|(u, v)| yg * u - xg * v).collect();
            }
        }
        if ac[p][r] != 0 {
            p += 1;
        }
    }
    uc.split_off(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_shapes() {
        let l = ExponentLattice::span(2, &[[2, 0], [0, 2]]);
        assert_eq!(l.basis(), &[[2, 0], [0, 2]]);
        let l = ExponentLattice::span(1, &[[3, 5], [6, 1]]);
        // det = 3 - 30 = -27
        assert_eq!(l.index(), Some(27));
        assert!(l.contains([3, 5]) && l.contains([6, 1]) && !l.contains([1, 0]));
        let r1 = ExponentLattice::span(1, &[[-2, 4], [1, -2]]);
        assert_eq!(r1.basis(), &[[1, -2]]);
        let r1 = ExponentLattice::span(1, &[[0, -4], [0, 6]]);
        assert_eq!(r1.basis(), &[[0, 2]]);
        assert_eq!(ExponentLattice::span(1, &[[0, 0]]).rank(), 0);
        assert!(ExponentLattice::span(1, &[[2, 1], [1, 1]]).is_full());
    }

    #[test]
    fn coordinates_reconstruct() {
        let l = ExponentLattice::span(6, &[[6, 0], [0, 3], [2, 1]]);
        for x in -8..=8 {
            for y in -8..=8 {
                if let Some(c) = l.coordinates([x, y]) {
                    let b = l.basis();
                    let r = [
                        c.iter().zip(b).map(|(c, v)| c * v[0]).sum::<i64>(),
                        c.iter().zip(b).map(|(c, v)| c * v[1]).sum::<i64>(),
                    ];
                    assert_eq!(r, [x, y]);
                }
            }
        }
    }

    #[test]
    fn kernel_of_small_system() {
        // 2x - 4y + 6z = 0
        let k = integer_kernel(&[vec![2, -4, 6]], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(2 * v[0] - 4 * v[1] + 6 * v[2], 0);
        }
        // A full-rank square system has trivial kernel.
        assert!(integer_kernel(&[vec![1, 2], vec![3, 4]], 2).is_empty());
    }
}
