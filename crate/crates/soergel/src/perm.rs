//! Permutations of `{1, ..., n+1}` in one-line notation.

use std::fmt;

/// A permutation `w` of `{1, ..., k}`, stored in one-line notation:
/// `oneline[j] = w(j+1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm {
    oneline: Vec<usize>,
}

impl Perm {
    /// The identity permutation of `{1, ..., k}`.
    pub fn identity(k: usize) -> Self {
        Perm {
            oneline: (1..=k).collect(),
        }
    }

    /// Construct from one-line notation. Panics if `oneline` is not a
    /// permutation of `1..=k`.
    pub fn from_oneline(oneline: Vec<usize>) -> Self {
        let k = oneline.len();
        let mut seen = vec![false; k + 1];
        for &v in &oneline {
            assert!(v >= 1 && v <= k && !seen[v], "not a permutation: {oneline:?}");
            seen[v] = true;
        }
        Perm { oneline }
    }

    /// The simple transposition `s_i` swapping `i` and `i+1` (1-based),
    /// inside `S_k`.
    pub fn simple(k: usize, i: usize) -> Self {
        assert!(i >= 1 && i < k);
        let mut p = Perm::identity(k);
        p.oneline.swap(i - 1, i);
        p
    }

    pub fn degree(&self) -> usize {
        self.oneline.len()
    }

    pub fn oneline(&self) -> &[usize] {
        &self.oneline
    }

    /// `w(j)` for 1-based `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.oneline[j - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Right multiplication by `s_i`: swaps positions `i`, `i+1` of the
    /// one-line word (1-based).
    pub fn mul_simple_right(&self, i: usize) -> Self {
        let mut p = self.clone();
        p.oneline.swap(i - 1, i);
        p
    }

    /// True iff `l(w s_i) > l(w)`.
    pub fn has_ascent(&self, i: usize) -> bool {
        self.oneline[i - 1] < self.oneline[i]
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let k = self.oneline.len();
        let mut inv = 0;
        for a in 0..k {
            for b in a + 1..k {
                if self.oneline[a] > self.oneline[b] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Self {
        let k = self.oneline.len();
        let mut out = vec![0; k];
        for (j, &v) in self.oneline.iter().enumerate() {
            out[v - 1] = j + 1;
        }
        Perm { oneline: out }
    }

    /// Group product `(self * other)(j) = self(other(j))`.
    pub fn compose(&self, other: &Perm) -> Self {
        assert_eq!(self.degree(), other.degree());
        Perm {
            oneline: (1..=self.degree())
                .map(|j| self.apply(other.apply(j)))
                .collect(),
        }
    }

    /// A reduced word `(i_1, ..., i_d)` with `w = s_{i_1} ... s_{i_d}`,
    /// found by repeatedly stripping a descent on the right.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while !w.is_identity() {
            let i = (1..w.degree())
                .find(|&i| !w.has_ascent(i))
                .expect("non-identity permutation has a descent");
            // w has a descent at i, so w = (w s_i) s_i with l(w s_i) < l(w).
            w = w.mul_simple_right(i);
            word.push(i);
        }
        word.reverse();
        word
    }

    /// All permutations of `{1, ..., k}` in lexicographic one-line order.
    pub fn all(k: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur = (1..=k).collect::<Vec<_>>();
        loop {
            out.push(Perm {
                oneline: cur.clone(),
            });
            // Next lexicographic permutation.
            let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..k).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.oneline.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_words_multiply_back() {
        for w in Perm::all(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            let mut p = Perm::identity(4);
            for &i in &word {
                p = p.mul_simple_right(i);
            }
            assert_eq!(p, w);
        }
    }

    #[test]
    fn inverse_and_compose() {
        for w in Perm::all(4) {
            assert!(w.compose(&w.inverse()).is_identity());
            assert_eq!(w.inverse().length(), w.length());
        }
        assert_eq!(Perm::all(4).len(), 24);
    }
}
