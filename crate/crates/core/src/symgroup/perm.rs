use std::fmt;

use crate::error::{Error, Result};
use crate::symgroup::partition::Partition;

/// A permutation of `{1, ..., n}`, stored 0-based in one-line notation.
///
/// Composition follows `(σ·τ)(i) = σ(τ(i))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n).collect())
    }

    /// From 1-based one-line notation, e.g. `[2, 3, 1]`.
    pub fn from_one_line(images: &[usize]) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[x - 1] = true;
        }
        Ok(Perm(images.iter().map(|x| x - 1).collect()))
    }

    /// From 0-based images; panics if not a bijection.
    pub fn from_images(images: Vec<usize>) -> Perm {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            assert!(x < n && !seen[x], "not a permutation: {images:?}");
            seen[x] = true;
        }
        Perm(images)
    }

    /// The adjacent transposition swapping `i` and `i + 1` (0-based).
    pub fn adjacent(i: usize, n: usize) -> Perm {
        assert!(i + 1 < n);
        let mut p: Vec<usize> = (0..n).collect();
        p.swap(i, i + 1);
        Perm(p)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self · other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }

    pub fn sign(&self) -> i64 {
        let ct = self.cycle_type();
        let even_cycles = ct.parts().iter().filter(|&&l| l % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// A permutation of the given cycle type with consecutive cycles
    /// `(1 2 ... μ₁)(μ₁+1 ...)...`.
    pub fn of_cycle_type(mu: &Partition) -> Perm {
        let n = mu.size();
        let mut p: Vec<usize> = (0..n).collect();
        let mut start = 0;
        for &len in mu.parts() {
            for k in 0..len {
                p[start + k] = start + (k + 1) % len;
            }
            start += len;
        }
        Perm(p)
    }

    /// Some `i` with `σ(i) > σ(i+1)`, if any.
    pub fn first_descent(&self) -> Option<usize> {
        self.0.windows(2).position(|w| w[0] > w[1])
    }

    /// Indices `w₁, ..., w_k` with `σ = s_{w_k} · ... · s_{w₁}`.
    pub fn descent_word(&self) -> Vec<usize> {
        let n = self.degree();
        let mut cur = self.clone();
        let mut word = Vec::new();
        while let Some(i) = cur.first_descent() {
            cur = cur.compose(&Perm::adjacent(i, n));
            word.push(i);
        }
        word
    }

    /// All permutations of degree `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut cur: Vec<usize> = (0..n).collect();
        let mut out = vec![Perm(cur.clone())];
        while next_permutation(&mut cur) {
            out.push(Perm(cur.clone()));
        }
        out
    }
}

/// Advances `v` to its next lexicographic permutation; false at the last one.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[i] < v[j]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = self.0.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", imgs.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_convention() {
        let s = Perm::from_one_line(&[2, 1, 3]).unwrap();
        let t = Perm::from_one_line(&[1, 3, 2]).unwrap();
        // (s·t)(1) = s(t(1)) = s(1) = 2; (s·t)(2) = s(3) = 3; (s·t)(3) = s(2) = 1
        assert_eq!(s.compose(&t), Perm::from_one_line(&[2, 3, 1]).unwrap());
        assert!(s.compose(&s).is_identity());
        let c = Perm::from_one_line(&[2, 3, 1]).unwrap();
        assert!(c.compose(&c.inverse()).is_identity());
    }

    #[test]
    fn cycle_types_and_signs() {
        let c = Perm::from_one_line(&[2, 3, 1, 5, 4]).unwrap();
        assert_eq!(c.cycle_type().to_string(), "[3,2]");
        assert_eq!(c.sign(), -1);
        let mu = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(Perm::of_cycle_type(&mu).cycle_type(), mu);
        assert!(Perm::from_one_line(&[1, 1]).is_err());
    }

    #[test]
    fn descent_word_reconstructs() {
        for p in Perm::all(4) {
            let n = p.degree();
            let mut acc = Perm::identity(n);
            for &i in p.descent_word().iter().rev() {
                acc = acc.compose(&Perm::adjacent(i, n));
            }
            assert_eq!(acc, p);
        }
        assert_eq!(Perm::all(4).len(), 24);
        assert_eq!(Perm::all(0).len(), 1);
    }
}
