use crate::exactmath::{factorial, Rat};
use crate::symgroup::partition::Partition;

/// A filling of a Young diagram, row by row. Entries are 0-based for
/// standard tableaux (`0..n`) and 1-based for semistandard ones (`1..=d`).
pub type Tableau = Vec<Vec<usize>>;

/// Number of standard Young tableaux of shape `λ`, by the hook-length formula.
pub fn hook_dimension(lambda: &Partition) -> u64 {
    let hooks: Rat = lambda
        .cells()
        .map(|(i, j)| Rat::from(lambda.hook(i, j)))
        .product();
    let dim = &factorial(lambda.size()) / &hooks;
    dim.to_i64().expect("hook dimension fits in i64") as u64
}

/// Number of semistandard tableaux of shape `λ` with entries in `1..=d`.
pub fn ssyt_count(lambda: &Partition, d: usize) -> u64 {
    if lambda.len() > d {
        return 0;
    }
    let count: Rat = lambda
        .cells()
        .map(|(i, j)| Rat::new((d + j - i) as i64, lambda.hook(i, j) as i64))
        .product();
    count.to_i64().expect("tableau count fits in i64") as u64
}

/// All standard tableaux of shape `λ` with entries `0..n`, in the order
/// produced by placing `0, 1, ...` into the topmost available row first.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    fn rec(shape: &[usize], next: usize, n: usize, cur: &mut Tableau, out: &mut Vec<Tableau>) {
        if next == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..shape.len() {
            let len = cur[i].len();
            let fits = len < shape[i] && (i == 0 || cur[i - 1].len() > len);
            if fits {
                cur[i].push(next);
                rec(shape, next + 1, n, cur, out);
                cur[i].pop();
            }
        }
    }
    let shape = lambda.parts();
    let mut out = Vec::new();
    let mut cur: Tableau = vec![Vec::new(); shape.len()];
    rec(shape, 0, lambda.size(), &mut cur, &mut out);
    out
}

/// All semistandard tableaux of shape `λ` with entries in `1..=d`.
pub fn semistandard_tableaux(lambda: &Partition, d: usize) -> Vec<Tableau> {
    let cells: Vec<(usize, usize)> = lambda.cells().collect();
    let mut out = Vec::new();
    let mut cur: Tableau = lambda.parts().iter().map(|&p| vec![0; p]).collect();
    fn rec(
        cells: &[(usize, usize)],
        k: usize,
        d: usize,
        cur: &mut Tableau,
        out: &mut Vec<Tableau>,
    ) {
        if k == cells.len() {
            out.push(cur.clone());
            return;
        }
        let (i, j) = cells[k];
        let mut lo = 1;
        if j > 0 {
            lo = lo.max(cur[i][j - 1]);
        }
        if i > 0 {
            lo = lo.max(cur[i - 1][j] + 1);
        }
        for v in lo..=d {
            cur[i][j] = v;
            rec(cells, k + 1, d, cur, out);
        }
    }
    rec(&cells, 0, d, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn hook_formula_matches_enumeration() {
        for n in 0..=7 {
            for lambda in Partition::all(n) {
                assert_eq!(
                    hook_dimension(&lambda),
                    standard_tableaux(&lambda).len() as u64,
                    "{lambda}"
                );
            }
        }
        assert_eq!(hook_dimension(&part(&[2, 1])), 2);
        assert_eq!(hook_dimension(&part(&[2, 2])), 2);
        assert_eq!(hook_dimension(&part(&[5])), 1);
    }

    #[test]
    fn content_formula_matches_enumeration() {
        for n in 0..=5 {
            for lambda in Partition::all(n) {
                for d in 0..=4 {
                    let brute = semistandard_tableaux(&lambda, d).len() as u64;
                    assert_eq!(ssyt_count(&lambda, d), brute, "{lambda} d={d}");
                    assert_eq!(brute > 0, lambda.len() <= d);
                }
            }
        }
        assert_eq!(ssyt_count(&part(&[2, 1]), 2), 2);
        assert_eq!(ssyt_count(&part(&[1, 1, 1]), 2), 0);
        assert_eq!(ssyt_count(&part(&[4]), 1), 1);
    }

    #[test]
    fn squares_of_dimensions_sum_to_group_order() {
        for n in 0..=7 {
            let total: u64 = Partition::all(n)
                .iter()
                .map(|l| hook_dimension(l).pow(2))
                .sum();
            assert_eq!(Rat::from(total as i64), factorial(n));
        }
    }
}
