//! Schur operations `S_V(M) = V ⊗_{ℚΣₙ} M^{⊗n}` on free modules.
//!
//! Over ℚ the coinvariants are identified with the invariants of the
//! averaging idempotent `e = (1/n!) Σ_σ R(σ⁻¹) ⊗ π(σ)` on `V ⊗ (ℚ^d)^{⊗n}`.
//! An invariant vector is determined by its components at the weakly
//! increasing index tuples `I`, and the component at `I` ranges over the
//! fixed vectors `V^{Σ_I}` of the Young subgroup stabilizing `I`. The basis
//! used here is `e(b ⊗ e_I)` for `I` increasing and `b` running through a
//! basis of `V^{Σ_I}`; the ambient `V ⊗ (ℚ^d)^{⊗n}` is only materialized on
//! request.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::exactmath::{Matrix, QMatrix, Rat, Ring, Subspace};
use crate::polyfunctor::builtins::{multisets, tuples};
use crate::symgroup::{Perm, SymRep};

/// The permutation matrix of `σ` on `(ℚ^d)^{⊗n}`:
/// `σ·(e_{t₁} ⊗ ⋯ ⊗ e_{tₙ}) = e_{t_{σ⁻¹(1)}} ⊗ ⋯ ⊗ e_{t_{σ⁻¹(n)}}`.
pub fn tensor_power_action(sigma: &Perm, d: usize) -> QMatrix {
    let n = sigma.degree();
    let all = tuples(d, n);
    let inv = sigma.inverse();
    let mut m = QMatrix::zeros(all.len(), all.len());
    for (col, t) in all.iter().enumerate() {
        let moved: Vec<usize> = (0..n).map(|k| t[inv.apply(k)]).collect();
        m.set(tuple_index(&moved, d), col, Rat::one());
    }
    m
}

fn tuple_index(t: &[usize], d: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * d + x)
}

/// Lengths of the runs of equal entries of a weakly increasing tuple.
fn run_lengths(t: &[usize]) -> Vec<usize> {
    let mut runs: Vec<usize> = Vec::new();
    for (k, x) in t.iter().enumerate() {
        if k > 0 && t[k - 1] == *x {
            *runs.last_mut().unwrap() += 1;
        } else {
            runs.push(1);
        }
    }
    runs
}

/// Fixed vectors of a Young subgroup acting on `V`.
#[derive(Debug)]
pub struct StabilizerData {
    /// Averaging projector `P = (1/|H|) Σ_{h∈H} R(h)`.
    pub projector: QMatrix,
    pub invariants: Subspace,
    /// `P` restricted to the pivot rows: coordinates of `P v` in `invariants`.
    pub coordinates: QMatrix,
}

/// The stabilizer of `(0,...,0,1,...,1,...)` with the given run lengths.
fn young_stabilizer(rep: &SymRep, runs: &[usize]) -> StabilizerData {
    let n = rep.degree();
    let mut projector = QMatrix::identity(rep.dim());
    let mut start = 0;
    for &len in runs {
        if len > 1 {
            let perms = Perm::all(len);
            let mut sum = QMatrix::zeros(rep.dim(), rep.dim());
            for p in &perms {
                let mut images: Vec<usize> = (0..n).collect();
                for k in 0..len {
                    images[start + k] = start + p.apply(k);
                }
                sum = sum.add(&rep.action(&Perm::from_images(images)));
            }
            let avg = sum.scale(&Rat::new(1, perms.len() as i64));
            projector = projector.mul(&avg);
        }
        start += len;
    }
    let invariants = Subspace::span(&projector);
    let coordinates = invariants.pivot_rows(&projector);
    StabilizerData {
        projector,
        invariants,
        coordinates,
    }
}

/// A Schur operation `S_V` with memoized per-dimension data.
#[derive(Debug)]
pub struct SchurFunctor {
    rep: Arc<SymRep>,
    stabilizers: Mutex<HashMap<Vec<usize>, Arc<StabilizerData>>>,
    spaces: Mutex<HashMap<usize, Arc<SchurSpace>>>,
}

/// `S_V(ℚ^d)` in the orbit basis.
#[derive(Debug)]
pub struct SchurSpace {
    rep: Arc<SymRep>,
    d: usize,
    blocks: Vec<SchurBlock>,
    index: HashMap<Vec<usize>, usize>,
    dim: usize,
}

#[derive(Debug)]
pub struct SchurBlock {
    pub tuple: Vec<usize>,
    pub offset: usize,
    pub data: Arc<StabilizerData>,
}

impl SchurBlock {
    pub fn dim(&self) -> usize {
        self.data.invariants.dim()
    }
}

impl SchurFunctor {
    pub fn new(rep: Arc<SymRep>) -> SchurFunctor {
        SchurFunctor {
            rep,
            stabilizers: Mutex::new(HashMap::new()),
            spaces: Mutex::new(HashMap::new()),
        }
    }

    pub fn rep(&self) -> &Arc<SymRep> {
        &self.rep
    }

    fn stabilizer(&self, runs: Vec<usize>) -> Arc<StabilizerData> {
        if let Some(s) = self.stabilizers.lock().unwrap().get(&runs) {
            return s.clone();
        }
        let data = Arc::new(young_stabilizer(&self.rep, &runs));
        self.stabilizers
            .lock()
            .unwrap()
            .entry(runs)
            .or_insert(data)
            .clone()
    }

    pub fn space(&self, d: usize) -> Arc<SchurSpace> {
        if let Some(s) = self.spaces.lock().unwrap().get(&d) {
            return s.clone();
        }
        let n = self.rep.degree();
        let mut blocks = Vec::new();
        let mut index = HashMap::new();
        let mut offset = 0;
        for tuple in multisets(d, n) {
            let data = self.stabilizer(run_lengths(&tuple));
            let dim = data.invariants.dim();
            if dim == 0 {
                continue;
            }
            index.insert(tuple.clone(), blocks.len());
            blocks.push(SchurBlock {
                tuple,
                offset,
                data,
            });
            offset += dim;
        }
        let space = Arc::new(SchurSpace {
            rep: self.rep.clone(),
            d,
            blocks,
            index,
            dim: offset,
        });
        self.spaces
            .lock()
            .unwrap()
            .entry(d)
            .or_insert(space)
            .clone()
    }

    pub fn dim(&self, d: usize) -> usize {
        self.space(d).dim
    }

    /// `S_V(f)` for `f: ℚ^d → ℚ^e`.
    pub fn map<R: Ring>(&self, f: &Matrix<R>) -> Matrix<R> {
        let source = self.space(f.cols());
        let target = self.space(f.rows());
        let n = self.rep.degree();
        let e = f.rows();
        let mut out: Matrix<R> = Matrix::zeros(target.dim, source.dim);
        for block in &source.blocks {
            let basis = block.data.invariants.basis();
            // The image of e(b ⊗ e_I) is Σ_J (∏ₖ f[Jₖ][Iₖ]) e(b ⊗ e_J). Its
            // component at the sorted tuple J₀ = J∘p is P_{J₀} R(p) b.
            let mut stack: Vec<(Vec<usize>, R)> = vec![(Vec::new(), R::one())];
            while let Some((prefix, coeff)) = stack.pop() {
                let k = prefix.len();
                if k == n {
                    let mut order: Vec<usize> = (0..n).collect();
                    order.sort_by_key(|&m| prefix[m]);
                    let sorted: Vec<usize> = order.iter().map(|&m| prefix[m]).collect();
                    let Some(&ti) = target.index.get(&sorted) else {
                        continue;
                    };
                    let tblock = &target.blocks[ti];
                    let r = self.rep.action(&Perm::from_images(order));
                    let image = tblock.data.coordinates.mul(&r).mul(basis);
                    for row in 0..image.rows() {
                        for col in 0..image.cols() {
                            let c = image.get(row, col);
                            if !c.is_zero() {
                                out.entry_mut(tblock.offset + row, block.offset + col)
                                    .add_assign(&coeff.scale(c));
                            }
                        }
                    }
                    continue;
                }
                for j in 0..e {
                    let x = f.get(j, block.tuple[k]);
                    if x.is_zero() {
                        continue;
                    }
                    let mut next = prefix.clone();
                    next.push(j);
                    stack.push((next, coeff.mul(x)));
                }
            }
        }
        out
    }
}

impl SchurSpace {
    pub fn rep(&self) -> &SymRep {
        &self.rep
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn blocks(&self) -> &[SchurBlock] {
        &self.blocks
    }

    pub fn block_of(&self, sorted_tuple: &[usize]) -> Option<&SchurBlock> {
        self.index.get(sorted_tuple).map(|&i| &self.blocks[i])
    }

    /// `e = (1/n!) Σ_σ R(σ⁻¹) ⊗ π(σ)` on `V ⊗ (ℚ^d)^{⊗n}`, with the `V`
    /// index most significant.
    pub fn averaging_projector(&self) -> QMatrix {
        let n = self.rep.degree();
        let perms = Perm::all(n);
        let size = self.rep.dim() * self.d.pow(n as u32);
        let mut sum = QMatrix::zeros(size, size);
        for s in &perms {
            let term = self
                .rep
                .action(&s.inverse())
                .kron(&tensor_power_action(s, self.d));
            sum = sum.add(&term);
        }
        sum.scale(&Rat::new(1, perms.len() as i64))
    }

    /// The basis vectors `e(b ⊗ e_I)` as columns in `V ⊗ (ℚ^d)^{⊗n}`.
    pub fn ambient_basis(&self) -> QMatrix {
        let n = self.rep.degree();
        let perms = Perm::all(n);
        let width = self.d.pow(n as u32);
        let scale = Rat::new(1, perms.len() as i64);
        let mut out = QMatrix::zeros(self.rep.dim() * width, self.dim);
        for block in &self.blocks {
            let basis = block.data.invariants.basis();
            for s in &perms {
                let r = self.rep.action(&s.inverse()).mul(basis);
                let inv = s.inverse();
                let moved: Vec<usize> = (0..n).map(|k| block.tuple[inv.apply(k)]).collect();
                let t = tuple_index(&moved, self.d);
                for v in 0..r.rows() {
                    for b in 0..r.cols() {
                        let x = r.get(v, b);
                        if !x.is_zero() {
                            *out.entry_mut(v * width + t, block.offset + b) += &(x * &scale);
                        }
                    }
                }
            }
        }
        out
    }
}
