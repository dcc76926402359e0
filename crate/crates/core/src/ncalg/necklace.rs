use std::fmt;

use super::Word;

/// A cyclic word, represented by its lexicographically least rotation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Necklace(Word);

impl Necklace {
    pub fn representative(&self) -> &Word {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn compact(&self, names: &[String]) -> String {
        self.0.compact(names)
    }
}

impl fmt::Debug for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Necklace{:?}", self.0 .0)
    }
}

pub fn necklace_normal_form(w: &Word) -> Necklace {
    let n = w.len();
    let best = (0..n.max(1))
        .map(|k| w.rotate(k))
        .min_by(|a, b| a.0.cmp(&b.0))
        .unwrap_or_default();
    Necklace(best)
}

/// Every necklace of length `1..=max_len` on `k` letters, ordered by length
/// and then lexicographically.
pub fn necklace_basis(k: usize, max_len: usize) -> Vec<Necklace> {
    let mut out = Vec::new();
    for n in 1..=max_len {
        necklaces_of_length(k, n, &mut out);
    }
    out
}

/// Fredricksen–Kessler–Maiorana generation: emits necklaces in
/// lexicographic order.
fn necklaces_of_length(k: usize, n: usize, out: &mut Vec<Necklace>) {
    if k == 0 || n == 0 {
        return;
    }
    let mut a = vec![0u32; n + 1];
    fn gen(t: usize, p: usize, k: usize, n: usize, a: &mut Vec<u32>, out: &mut Vec<Necklace>) {
        if t > n {
            if n % p == 0 {
                out.push(Necklace(Word(a[1..=n].to_vec())));
            }
            return;
        }
        a[t] = a[t - p];
        gen(t + 1, p, k, n, a, out);
        for j in a[t - p] + 1..k as u32 {
            a[t] = j;
            gen(t + 1, t, k, n, a, out);
        }
    }
    gen(1, 1, k, n, &mut a, out);
}

/// Number of necklaces of length exactly `n` on `k` letters,
/// `(1/n) * sum_{d | n} phi(d) k^(n/d)`.
pub fn count_necklaces(k: u64, n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let total: u64 = (1..=n)
        .filter(|d| n % d == 0)
        .map(|d| crate::scalar::euler_phi(d) * k.pow((n / d) as u32))
        .sum();
    total / n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word(s.bytes().map(|b| (b - b'x') as u32).collect())
    }

    #[test]
    fn normal_forms() {
        assert_eq!(necklace_normal_form(&w("yx")).representative(), &w("xy"));
        assert_eq!(necklace_normal_form(&w("yxx")).representative(), &w("xxy"));
        assert_eq!(necklace_normal_form(&w("x")).representative(), &w("x"));
        assert!(necklace_normal_form(&Word::empty()).is_empty());
    }

    #[test]
    fn small_bases() {
        let b13: Vec<_> = necklace_basis(1, 3).into_iter().map(|n| n.0).collect();
        assert_eq!(b13, vec![w("x"), w("xx"), w("xxx")]);
        let b22: Vec<_> = necklace_basis(2, 2).into_iter().map(|n| n.0).collect();
        assert_eq!(b22, vec![w("x"), w("y"), w("xx"), w("xy"), w("yy")]);
        let len3: Vec<_> = necklace_basis(2, 3)
            .into_iter()
            .filter(|n| n.len() == 3)
            .map(|n| n.0)
            .collect();
        assert_eq!(len3, vec![w("xxx"), w("xxy"), w("xyy"), w("yyy")]);
        assert_eq!(necklace_basis(2, 3).len(), 9);
    }

    #[test]
    fn normal_form_is_rotation_invariant_exhaustively() {
        for len in 0..=6u32 {
            for bits in 0..(1u32 << len) {
                let word = Word((0..len).map(|i| (bits >> i) & 1).collect());
                let nf = necklace_normal_form(&word);
                assert_eq!(necklace_normal_form(nf.representative()), nf);
                for k in 0..len as usize {
                    assert_eq!(necklace_normal_form(&word.rotate(k)), nf);
                }
            }
        }
    }

    #[test]
    fn basis_sizes_match_counting_formula() {
        for k in 1..=3usize {
            for max_len in 0..=7usize {
                let expected: u64 = (1..=max_len as u64).map(|n| count_necklaces(k as u64, n)).sum();
                let basis = necklace_basis(k, max_len);
                assert_eq!(basis.len() as u64, expected, "k={k} L={max_len}");
                for n in &basis {
                    assert_eq!(&necklace_normal_form(n.representative()), n);
                }
            }
        }
    }
}
