use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::exactmath::{inverse, kernel_basis, QMatrix, Rat};
use crate::symgroup::characters::{character_table, conjugacy_classes, CharVector};
use crate::symgroup::partition::Partition;
use crate::symgroup::perm::Perm;
use crate::symgroup::tableaux::hook_dimension;

/// A finite-dimensional right ℚΣₙ-module on column vectors.
///
/// `action(σ)` is the matrix `R(σ)` with `v·σ = R(σ) v`, so
/// `R(σ·τ) = R(τ) R(σ)`. The module is determined by the images of the
/// adjacent transpositions; other elements are built from descent words and
/// memoized.
#[derive(Clone)]
pub struct SymRep {
    n: usize,
    dim: usize,
    generators: Vec<QMatrix>,
    cache: Arc<Mutex<HashMap<Perm, Arc<QMatrix>>>>,
}

impl fmt::Debug for SymRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SymRep")
            .field("n", &self.n)
            .field("dim", &self.dim)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for SymRep {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.dim == other.dim && self.generators == other.generators
    }
}

impl SymRep {
    /// Builds a module from the images of `s₁, ..., s_{n-1}`, checking the
    /// Coxeter relations of Σₙ.
    pub fn new(n: usize, dim: usize, generators: Vec<QMatrix>) -> Result<SymRep> {
        let invalid = |msg: String| Err(Error::InvalidRepresentation(msg));
        if generators.len() != n.saturating_sub(1) {
            return invalid(format!(
                "expected {} generator matrices for n = {n}, got {}",
                n.saturating_sub(1),
                generators.len()
            ));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.rows() != dim || g.cols() != dim {
                return invalid(format!(
                    "generator {} is {}x{}, expected {dim}x{dim}",
                    i + 1,
                    g.rows(),
                    g.cols()
                ));
            }
        }
        for i in 0..generators.len() {
            if !generators[i].mul(&generators[i]).is_identity() {
                return invalid(format!("s{} does not square to the identity", i + 1));
            }
            for j in i + 1..generators.len() {
                let ab = generators[i].mul(&generators[j]);
                let ok = if j == i + 1 {
                    ab.mul(&ab).mul(&ab).is_identity()
                } else {
                    ab == generators[j].mul(&generators[i])
                };
                if !ok {
                    return invalid(format!(
                        "braid relation fails for s{} and s{}",
                        i + 1,
                        j + 1
                    ));
                }
            }
        }
        Ok(SymRep::new_unchecked(n, dim, generators))
    }

    pub(crate) fn new_unchecked(n: usize, dim: usize, generators: Vec<QMatrix>) -> SymRep {
        SymRep {
            n,
            dim,
            generators,
            cache: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    /// Builds a module from an arbitrary action map by reading off the
    /// adjacent transpositions.
    pub fn from_action(n: usize, dim: usize, action: impl Fn(&Perm) -> QMatrix) -> Result<SymRep> {
        let gens = (0..n.saturating_sub(1))
            .map(|i| action(&Perm::adjacent(i, n)))
            .collect();
        SymRep::new(n, dim, gens)
    }

    pub fn trivial(n: usize) -> SymRep {
        SymRep::new_unchecked(n, 1, vec![QMatrix::identity(1); n.saturating_sub(1)])
    }

    pub fn sign(n: usize) -> SymRep {
        SymRep::new_unchecked(
            n,
            1,
            vec![QMatrix::scalar(1, Rat::from_int(-1)); n.saturating_sub(1)],
        )
    }

    /// The zero module of Σₙ.
    pub fn zero(n: usize) -> SymRep {
        SymRep::new_unchecked(n, 0, vec![QMatrix::zeros(0, 0); n.saturating_sub(1)])
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn side(&self) -> &'static str {
        "right"
    }

    /// Image of the adjacent transposition `s_{i+1}` (0-based `i`).
    pub fn generator(&self, i: usize) -> &QMatrix {
        &self.generators[i]
    }

    pub fn generators(&self) -> &[QMatrix] {
        &self.generators
    }

    /// The matrix `R(σ)`.
    pub fn action(&self, sigma: &Perm) -> Arc<QMatrix> {
        assert_eq!(sigma.degree(), self.n, "permutation degree mismatch");
        if let Some(m) = self.cache.lock().unwrap().get(sigma) {
            return m.clone();
        }
        // σ = σ'·s_i with σ' = σ·s_i shorter, hence R(σ) = R(s_i) R(σ').
        let m = match sigma.first_descent() {
            None => QMatrix::identity(self.dim),
            Some(i) => {
                let shorter = sigma.compose(&Perm::adjacent(i, self.n));
                self.generators[i].mul(&self.action(&shorter))
            }
        };
        let m = Arc::new(m);
        self.cache.lock().unwrap().insert(sigma.clone(), m.clone());
        m
    }

    pub fn character_value(&self, cycle_type: &Partition) -> Rat {
        self.action(&Perm::of_cycle_type(cycle_type)).trace()
    }

    pub fn character(&self) -> CharVector {
        let values = conjugacy_classes(self.n)
            .into_iter()
            .map(|(mu, _)| {
                let v = self.character_value(&mu);
                (mu, v)
            })
            .collect();
        CharVector { n: self.n, values }
    }

    pub fn direct_sum(reps: &[SymRep], n: usize) -> SymRep {
        for r in reps {
            assert_eq!(r.n, n);
        }
        let dim = reps.iter().map(|r| r.dim).sum();
        let gens = (0..n.saturating_sub(1))
            .map(|i| {
                let blocks: Vec<QMatrix> = reps.iter().map(|r| r.generators[i].clone()).collect();
                QMatrix::block_diag(&blocks)
            })
            .collect();
        SymRep::new_unchecked(n, dim, gens)
    }

    /// The same module in the basis given by the columns of `p`, i.e.
    /// `R'(σ) = p⁻¹ R(σ) p`.
    pub fn change_basis(&self, p: &QMatrix) -> Result<SymRep> {
        let p_inv = inverse(p)?;
        let gens = self
            .generators
            .iter()
            .map(|g| p_inv.mul(g).mul(p))
            .collect();
        Ok(SymRep::new_unchecked(self.n, self.dim, gens))
    }

    /// A basis of the module maps `φ: self → other`, i.e. matrices with
    /// `φ R(σ) = R'(σ) φ` for all σ.
    pub fn intertwiners(&self, other: &SymRep) -> Vec<QMatrix> {
        assert_eq!(self.n, other.n);
        let (m, k) = (other.dim, self.dim);
        let nvars = m * k;
        // Unknown φ[a][b] is variable a * k + b; one block of m*k equations per generator.
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for (g_self, g_other) in self.generators.iter().zip(&other.generators) {
            for a in 0..m {
                for b in 0..k {
                    let mut row = vec![Rat::zero(); nvars];
                    for c in 0..k {
                        row[a * k + c] += g_self.get(c, b);
                    }
                    for c in 0..m {
                        row[c * k + b] -= g_other.get(a, c);
                    }
                    rows.push(row);
                }
            }
        }
        let system = if rows.is_empty() {
            QMatrix::zeros(0, nvars)
        } else {
            QMatrix::from_rows(rows, nvars).expect("rectangular system")
        };
        let ker = kernel_basis(&system);
        (0..ker.dim())
            .map(|j| {
                let col = ker.basis().column(j);
                QMatrix::from_fn(m, k, |a, b| col[a * k + b].clone())
            })
            .collect()
    }
}

/// The regular module ℚΣₙ with basis Σₙ in lexicographic order and
/// `e_g · σ = e_{g·σ}`.
pub fn regular_representation(n: usize) -> SymRep {
    let elements = Perm::all(n);
    let index: HashMap<&Perm, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let dim = elements.len();
    let gens = (0..n.saturating_sub(1))
        .map(|i| {
            let s = Perm::adjacent(i, n);
            let mut m = QMatrix::zeros(dim, dim);
            for (col, g) in elements.iter().enumerate() {
                m.set(index[&g.compose(&s)], col, Rat::one());
            }
            m
        })
        .collect();
    SymRep::new_unchecked(n, dim, gens)
}

/// Multiplicities of the irreducible modules in `rep`, keeping only the
/// nonzero ones.
pub fn multiplicities(rep: &SymRep) -> Result<BTreeMap<Partition, u64>> {
    let chi = rep.character();
    let mut out = BTreeMap::new();
    let mut total_dim = 0u64;
    for (lambda, row) in character_table(rep.degree()) {
        let m = chi.inner(&row);
        let value = match m.to_i64() {
            Some(v) if v >= 0 && m.is_integer() => v as u64,
            _ => {
                return Err(Error::InvalidRepresentation(format!(
                    "multiplicity of {lambda} would be {m}"
                )))
            }
        };
        if value > 0 {
            total_dim += value * hook_dimension(&lambda);
            out.insert(lambda, value);
        }
    }
    if total_dim != rep.dim() as u64 {
        return Err(Error::InvalidRepresentation(format!(
            "multiplicities account for dimension {total_dim}, not {}",
            rep.dim()
        )));
    }
    Ok(out)
}
