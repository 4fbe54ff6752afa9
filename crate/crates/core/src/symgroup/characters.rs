use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::exactmath::{factorial, Rat};
use crate::symgroup::partition::Partition;

/// A class function on Σₙ, one value per cycle type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharVector {
    pub n: usize,
    pub values: BTreeMap<Partition, Rat>,
}

impl CharVector {
    pub fn value(&self, cycle_type: &Partition) -> &Rat {
        &self.values[cycle_type]
    }

    /// `(1/n!) Σ_c |c| χ(c) ψ(c)`.
    pub fn inner(&self, other: &CharVector) -> Rat {
        assert_eq!(self.n, other.n);
        let total: Rat = conjugacy_classes(self.n)
            .iter()
            .map(|(c, size)| &(&Rat::from(*size as i64) * &self.values[c]) * &other.values[c])
            .sum();
        &total / &factorial(self.n)
    }
}

/// `z_μ = ∏ᵢ i^{mᵢ} mᵢ!`, the order of the centralizer of an element of type `μ`.
fn centralizer_order(mu: &Partition) -> Rat {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_default() += 1;
    }
    counts
        .iter()
        .map(|(&i, &m)| &Rat::from(i).pow(m as u32) * &factorial(m))
        .product()
}

/// Cycle types of Σₙ in increasing lexicographic order with class sizes.
pub fn conjugacy_classes(n: usize) -> Vec<(Partition, u64)> {
    let order = factorial(n);
    Partition::all(n)
        .into_iter()
        .map(|mu| {
            let size = (&order / &centralizer_order(&mu))
                .to_i64()
                .expect("class size fits in i64");
            (mu, size as u64)
        })
        .collect()
}

/// `χ_λ(μ)` by the Murnaghan–Nakayama rule, removing rim hooks on beta-sets.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.size(), mu.size());
    let mut memo = HashMap::new();
    mn_rec(lambda.parts().to_vec(), mu.parts(), &mut memo)
}

fn mn_rec(lambda: Vec<usize>, mu: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return if lambda.is_empty() { 1 } else { 0 };
    };
    let key = (lambda, mu.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let lambda = &key.0;
    let l = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (l - 1 - i))
        .collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let moved = b - r;
        let crossed = beta.iter().filter(|&&x| moved < x && x < b).count();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        let mut next = beta.clone();
        next[idx] = moved;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (l - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        total += sign * mn_rec(shape, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Irreducible characters of Σₙ, indexed by partitions of `n`.
pub fn character_table(n: usize) -> BTreeMap<Partition, CharVector> {
    let classes = Partition::all(n);
    Partition::all(n)
        .into_iter()
        .map(|lambda| {
            let values = classes
                .iter()
                .map(|mu| (mu.clone(), Rat::from_int(mn_character(&lambda, mu))))
                .collect();
            (lambda, CharVector { n, values })
        })
        .collect()
}
