use std::collections::HashMap;

use crate::exactmath::{inverse, QMatrix, Rat};
use crate::symgroup::partition::Partition;
use crate::symgroup::perm::Perm;
use crate::symgroup::rep::SymRep;
use crate::symgroup::tableaux::{standard_tableaux, Tableau};

/// A tabloid, recorded as the row index of each entry `0..n`.
type Tabloid = Vec<u8>;

fn tabloid_of(t: &Tableau, n: usize) -> Tabloid {
    let mut rows = vec![0u8; n];
    for (i, row) in t.iter().enumerate() {
        for &x in row {
            rows[x] = i as u8;
        }
    }
    rows
}

/// The polytabloid `e_T = Σ_{q ∈ C_T} sgn(q) {qT}` as tabloid coefficients.
fn polytabloid(t: &Tableau, n: usize) -> HashMap<Tabloid, i64> {
    let width = t.first().map_or(0, |r| r.len());
    let columns: Vec<Vec<usize>> = (0..width)
        .map(|j| t.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect())
        .collect();
    let mut out = HashMap::new();
    let mut rows = tabloid_of(t, n);
    fn rec(columns: &[Vec<usize>], sign: i64, rows: &mut Tabloid, out: &mut HashMap<Tabloid, i64>) {
        let Some((col, rest)) = columns.split_first() else {
            *out.entry(rows.clone()).or_insert(0) += sign;
            return;
        };
        for p in Perm::all(col.len()) {
            for (k, &x) in col.iter().enumerate() {
                rows[x] = p.apply(k) as u8;
            }
            rec(rest, sign * p.sign(), rows, out);
        }
    }
    rec(&columns, 1, &mut rows, &mut out);
    out.retain(|_, c| *c != 0);
    out
}

fn relabel(t: &Tableau, sigma: &Perm) -> Tableau {
    t.iter()
        .map(|row| row.iter().map(|&x| sigma.apply(x)).collect())
        .collect()
}

/// Young's natural representation on the span of standard polytabloids.
struct SpechtBasis {
    n: usize,
    tableaux: Vec<Tableau>,
    standard_index: HashMap<Tabloid, usize>,
    coeff_inverse: QMatrix,
}

impl SpechtBasis {
    fn new(lambda: &Partition) -> SpechtBasis {
        let n = lambda.size();
        let tableaux = standard_tableaux(lambda);
        let standard_index: HashMap<Tabloid, usize> = tableaux
            .iter()
            .enumerate()
            .map(|(i, t)| (tabloid_of(t, n), i))
            .collect();
        let f = tableaux.len();
        let mut coeffs = QMatrix::zeros(f, f);
        for (j, t) in tableaux.iter().enumerate() {
            for (tab, c) in polytabloid(t, n) {
                if let Some(&i) = standard_index.get(&tab) {
                    coeffs.set(i, j, Rat::from_int(c));
                }
            }
        }
        let coeff_inverse = inverse(&coeffs).expect("standard polytabloids are independent");
        SpechtBasis {
            n,
            tableaux,
            standard_index,
            coeff_inverse,
        }
    }

    /// Matrix of `e_T ↦ σ e_T = e_{σT}` in the standard polytabloid basis.
    fn left_action(&self, sigma: &Perm) -> QMatrix {
        let f = self.tableaux.len();
        let mut projected = QMatrix::zeros(f, f);
        for (j, t) in self.tableaux.iter().enumerate() {
            for (tab, c) in polytabloid(&relabel(t, sigma), self.n) {
                if let Some(&i) = self.standard_index.get(&tab) {
                    projected.set(i, j, Rat::from_int(c));
                }
            }
        }
        self.coeff_inverse.mul(&projected)
    }
}

/// The Specht module of `λ` as a right module: `R(σ) = L(σ⁻¹)` where `L` is
/// the left action on polytabloids. Entries are integers.
pub fn specht_representation(lambda: &Partition) -> SymRep {
    let n = lambda.size();
    let basis = SpechtBasis::new(lambda);
    let gens = (0..n.saturating_sub(1))
        .map(|i| basis.left_action(&Perm::adjacent(i, n)))
        .collect();
    SymRep::new_unchecked(n, basis.tableaux.len(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::characters::character_table;
    use crate::symgroup::rep::multiplicities;
    use crate::symgroup::tableaux::hook_dimension;
    use std::collections::BTreeMap;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn small_cases() {
        let triv = specht_representation(&part(&[4]));
        assert_eq!(triv.dim(), 1);
        for p in Perm::all(4) {
            assert!(triv.action(&p).is_identity());
        }
        let sign = specht_representation(&part(&[1, 1]));
        assert_eq!(
            *sign.action(&Perm::adjacent(0, 2)),
            QMatrix::from_ints(&[&[-1]])
        );
        let empty = specht_representation(&Partition::empty());
        assert_eq!(empty.dim(), 1);
    }

    #[test]
    fn right_action_law_exhaustive() {
        for n in 0..=4 {
            for lambda in Partition::all(n) {
                let rep = specht_representation(&lambda);
                let basis = SpechtBasis::new(&lambda);
                let perms = Perm::all(n);
                for s in &perms {
                    assert_eq!(
                        *rep.action(s),
                        basis.left_action(&s.inverse()),
                        "{lambda} {s}"
                    );
                    for t in &perms {
                        assert_eq!(
                            *rep.action(&s.compose(t)),
                            rep.action(t).mul(&rep.action(s))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn validates_as_module_with_integer_entries() {
        for n in 0..=5 {
            for lambda in Partition::all(n) {
                let rep = specht_representation(&lambda);
                assert_eq!(rep.dim() as u64, hook_dimension(&lambda));
                assert!(SymRep::new(n, rep.dim(), rep.generators().to_vec()).is_ok());
                assert!(rep
                    .generators()
                    .iter()
                    .all(|g| g.entries().iter().all(|e| e.is_integer())));
            }
        }
    }

    #[test]
    fn characters_match_table_and_multiplicities_are_indicators() {
        for n in 0..=5 {
            let table = character_table(n);
            for lambda in Partition::all(n) {
                let rep = specht_representation(&lambda);
                assert_eq!(rep.character(), table[&lambda], "{lambda}");
                assert_eq!(
                    multiplicities(&rep).unwrap(),
                    BTreeMap::from([(lambda.clone(), 1)])
                );
            }
        }
    }
}
