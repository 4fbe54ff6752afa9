//! Basis-level formulas for the tensor, symmetric, exterior and divided
//! powers, generic over the coefficient ring.

use std::collections::HashMap;

use crate::exactmath::{Matrix, Ring};
use crate::symgroup::next_permutation;

/// All `n`-tuples over `0..d` in lexicographic order.
pub fn tuples(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    if d == 0 && n > 0 {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(k) = (0..n).rev().find(|&k| cur[k] + 1 < d) else {
            return out;
        };
        cur[k] += 1;
        for x in &mut cur[k + 1..] {
            *x = 0;
        }
    }
}

/// Weakly increasing `n`-tuples over `0..d` in lexicographic order.
pub fn multisets(d: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(d: usize, n: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in min..d {
            cur.push(x);
            rec(d, n, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, n, 0, &mut Vec::new(), &mut out);
    out
}

/// Strictly increasing `n`-tuples over `0..d` in lexicographic order.
pub fn subsets(d: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(d: usize, n: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in min..d {
            cur.push(x);
            rec(d, n, x + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, n, 0, &mut Vec::new(), &mut out);
    out
}

pub fn index_map(list: &[Vec<usize>]) -> HashMap<Vec<usize>, usize> {
    list.iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i))
        .collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `f^{⊗n}` on lexicographic index tuples.
pub fn tensor_map<R: Ring>(n: usize, f: &Matrix<R>) -> Matrix<R> {
    let mut out = Matrix::identity(1);
    for _ in 0..n {
        out = out.kron(f);
    }
    out
}

/// `Symⁿ f`: the monomial `e_{i₁}⋯e_{iₙ}` goes to `∏ₖ f(e_{iₖ})`.
pub fn sym_map<R: Ring>(n: usize, f: &Matrix<R>) -> Matrix<R> {
    let (e, d) = (f.rows(), f.cols());
    let sources = multisets(d, n);
    let targets = multisets(e, n);
    let index = index_map(&targets);
    let mut out = Matrix::zeros(targets.len(), sources.len());
    for (col, src) in sources.iter().enumerate() {
        let mut acc: HashMap<Vec<usize>, R> = HashMap::from([(Vec::new(), R::one())]);
        for &i in src {
            let mut next: HashMap<Vec<usize>, R> = HashMap::new();
            for (mono, c) in &acc {
                for j in 0..e {
                    let fji = f.get(j, i);
                    if fji.is_zero() {
                        continue;
                    }
                    let mut m = mono.clone();
                    let pos = m.partition_point(|&x| x <= j);
                    m.insert(pos, j);
                    next.entry(m)
                        .or_insert_with(R::zero)
                        .add_assign(&c.mul(fji));
                }
            }
            acc = next;
        }
        for (mono, c) in acc {
            if !c.is_zero() {
                out.set(index[&mono], col, c);
            }
        }
    }
    out
}

/// `Λⁿ f`: the wedge `e_{i₁}∧⋯∧e_{iₙ}` goes to `f(e_{i₁})∧⋯∧f(e_{iₙ})`.
pub fn wedge_map<R: Ring>(n: usize, f: &Matrix<R>) -> Matrix<R> {
    let (e, d) = (f.rows(), f.cols());
    let sources = subsets(d, n);
    let targets = subsets(e, n);
    let index = index_map(&targets);
    let mut out = Matrix::zeros(targets.len(), sources.len());
    for (col, src) in sources.iter().enumerate() {
        let mut acc: HashMap<Vec<usize>, R> = HashMap::from([(Vec::new(), R::one())]);
        for &i in src {
            let mut next: HashMap<Vec<usize>, R> = HashMap::new();
            for (set, c) in &acc {
                for j in 0..e {
                    let fji = f.get(j, i);
                    if fji.is_zero() || set.contains(&j) {
                        continue;
                    }
                    // e_S ∧ e_j: move e_j left past the larger indices.
                    let pos = set.partition_point(|&x| x < j);
                    let term = c.mul(fji);
                    let term = if (set.len() - pos) % 2 == 0 {
                        term
                    } else {
                        term.neg()
                    };
                    let mut s = set.clone();
                    s.insert(pos, j);
                    next.entry(s).or_insert_with(R::zero).add_assign(&term);
                }
            }
            acc = next;
        }
        for (set, c) in acc {
            if !c.is_zero() {
                out.set(index[&set], col, c);
            }
        }
    }
    out
}

/// `Γⁿ f` on the symmetric tensors of `(ℚ^d)^{⊗n}`, with the orbit sums of
/// weakly increasing tuples as basis.
pub fn gamma_map<R: Ring>(n: usize, f: &Matrix<R>) -> Matrix<R> {
    let (e, d) = (f.rows(), f.cols());
    let sources = multisets(d, n);
    let targets = multisets(e, n);
    let mut out = Matrix::zeros(targets.len(), sources.len());
    for (col, src) in sources.iter().enumerate() {
        let mut orbit = Vec::new();
        let mut t = src.clone();
        loop {
            orbit.push(t.clone());
            if !next_permutation(&mut t) {
                break;
            }
        }
        for (row, tgt) in targets.iter().enumerate() {
            let mut total = R::zero();
            for t in &orbit {
                let mut prod = R::one();
                for (k, &tk) in t.iter().enumerate() {
                    let x = f.get(tgt[k], tk);
                    if x.is_zero() {
                        prod = R::zero();
                        break;
                    }
                    prod = prod.mul(x);
                }
                if !prod.is_zero() {
                    total.add_assign(&prod);
                }
            }
            if !total.is_zero() {
                out.set(row, col, total);
            }
        }
    }
    out
}
