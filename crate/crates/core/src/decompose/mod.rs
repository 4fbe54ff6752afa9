//! Homogeneous components, multidegree pieces, linearizations, the
//! symmetric-group module `V_F` of a homogeneous operation, and
//! classification by Specht multiplicities.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactmath::{image_basis, lagrange_projector, MPoly, Matrix, QMatrix, Rat, Subspace};
use crate::polyfunctor::{degree_projector, eval, scaling_spectrum, FunctorExpr, FunctorValue};
use crate::symgroup::{multiplicities, ssyt_count, Partition, Perm, SymRep};

/// The degree-`n` summand of `F(ℚ^d)`.
#[derive(Clone, Debug)]
pub struct HomogeneousPiece {
    pub degree: usize,
    pub d: usize,
    pub ambient_dim: usize,
    pub projector: QMatrix,
    pub basis: Subspace,
}

impl HomogeneousPiece {
    pub fn rank(&self) -> usize {
        self.basis.dim()
    }
}

pub fn is_homogeneous(expr: &FunctorExpr, n: usize, d: usize) -> bool {
    is_homogeneous_value(&eval(expr), n, d)
}

/// Whether `F(T·I_d) = Tⁿ·I` over ℚ[T].
pub fn is_homogeneous_value(value: &FunctorValue, n: usize, d: usize) -> bool {
    let t = MPoly::var(0);
    let image = value.map(&Matrix::scalar(d, t.clone()));
    image == Matrix::scalar(value.dim(d), t.pow(n as u32))
}

pub fn homogeneous_pieces(expr: &FunctorExpr, d: usize) -> Vec<HomogeneousPiece> {
    homogeneous_pieces_value(&eval(expr), d)
}

/// Nonzero homogeneous components of `F(ℚ^d)` in increasing degree.
pub fn homogeneous_pieces_value(value: &FunctorValue, d: usize) -> Vec<HomogeneousPiece> {
    let ambient_dim = value.dim(d);
    (0..=value.degree_bound())
        .filter_map(|n| {
            let projector = degree_projector(value, d, n);
            let basis = image_basis(&projector);
            (basis.dim() > 0).then_some(HomogeneousPiece {
                degree: n,
                d,
                ambient_dim,
                projector,
                basis,
            })
        })
        .collect()
}

/// Degrees of the nonzero homogeneous components. A component of degree
/// `n` that vanishes on ℚ^d for some `d ≥ n` vanishes identically, so one
/// evaluation at `d = max(bound, 1)` suffices.
pub fn degrees_present(value: &FunctorValue) -> Vec<usize> {
    let d = value.degree_bound().max(1);
    homogeneous_pieces_value(value, d)
        .iter()
        .map(|p| p.degree)
        .collect()
}

/// The degree of a nonzero homogeneous operation.
pub fn homogeneous_degree(value: &FunctorValue) -> Result<usize> {
    match degrees_present(value).as_slice() {
        [n] => Ok(*n),
        [] => Err(Error::Precondition("the operation is zero".into())),
        many => Err(Error::Precondition(format!(
            "the operation is not homogeneous: components in degrees {many:?}"
        ))),
    }
}

/// The permutation `σ̃` of `ℚ^{d₁} ⊕ ⋯ ⊕ ℚ^{dₙ}` with `σ̃ ∘ ι_{σ(i)} = ι_i`:
/// source summand `σ(i)` becomes target summand `i`.
pub fn block_permutation(sigma: &Perm, dims: &[usize]) -> QMatrix {
    assert_eq!(sigma.degree(), dims.len(), "one dimension per summand");
    let total: usize = dims.iter().sum();
    let offsets: Vec<usize> = dims
        .iter()
        .scan(0, |acc, &d| {
            let o = *acc;
            *acc += d;
            Some(o)
        })
        .collect();
    let mut m = QMatrix::zeros(total, total);
    let mut target_offset = 0;
    for i in 0..dims.len() {
        let src = sigma.apply(i);
        for k in 0..dims[src] {
            m.set(target_offset + k, offsets[src] + k, Rat::one());
        }
        target_offset += dims[src];
    }
    m
}

/// `I ⊕ ⋯ ⊕ c·I ⊕ ⋯ ⊕ I` with the scalar in slot `j`.
pub fn slot_scaling(dims: &[usize], j: usize, c: &Rat) -> QMatrix {
    let diag = dims
        .iter()
        .enumerate()
        .flat_map(|(slot, &d)| {
            std::iter::repeat_n(if slot == j { c.clone() } else { Rat::one() }, d)
        })
        .collect();
    QMatrix::diagonal(diag)
}

/// The joint eigenspace of the slot scalings `B_j = F(I ⊕ ⋯ ⊕ 2I ⊕ ⋯ ⊕ I)`
/// for the eigenvalues `2^{i_j}`, without any precondition on `F`.
pub fn joint_piece(value: &FunctorValue, dims: &[usize], multidegree: &[usize]) -> Subspace {
    assert_eq!(dims.len(), multidegree.len());
    let total: usize = dims.iter().sum();
    let ambient = value.dim(total);
    let bound = value.degree_bound();
    if multidegree.iter().any(|&i| i > bound) {
        return Subspace::zero(ambient);
    }
    let spectrum = scaling_spectrum(bound);
    let two = Rat::from_int(2);
    let mut projector = QMatrix::identity(ambient);
    for (j, &i) in multidegree.iter().enumerate() {
        let b = value.map(&slot_scaling(dims, j, &two));
        let p = lagrange_projector(&b, &spectrum, &two.pow(i as u32))
            .expect("slot scalings have eigenvalues among the powers of 2");
        projector = projector.mul(&p);
    }
    image_basis(&projector)
}

/// The summand of `F(ℚ^{d₁} ⊕ ⋯ ⊕ ℚ^{dₙ})` of multidegree `(i₁, ..., iₙ)`
/// for `F` homogeneous of degree `n`.
pub fn multidegree_piece(
    expr: &FunctorExpr,
    dims: &[usize],
    multidegree: &[usize],
) -> Result<Subspace> {
    if dims.len() != multidegree.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} dimensions but multidegree of length {}",
            dims.len(),
            multidegree.len()
        )));
    }
    let value = eval(expr);
    let total: usize = dims.iter().sum();
    if value.dim(total) == 0 {
        return Ok(Subspace::zero(0));
    }
    let n = homogeneous_degree(&value)?;
    if multidegree.iter().sum::<usize>() != n {
        return Err(Error::MultidegreeOutsideTotal);
    }
    Ok(joint_piece(&value, dims, multidegree))
}

/// The multilinear part `L_F(ℚ^{d₁}, ..., ℚ^{dₙ})` for `F` homogeneous of
/// degree `n = dims.len()`.
pub fn linearization(expr: &FunctorExpr, dims: &[usize]) -> Result<Subspace> {
    let value = eval(expr);
    let n = dims.len();
    let total: usize = dims.iter().sum();
    if !is_homogeneous_value(&value, n, total) {
        return Err(Error::Precondition(format!(
            "operation is not homogeneous of degree {n}"
        )));
    }
    Ok(joint_piece(&value, dims, &vec![1; n]))
}

/// `V_n` of an operation: the multilinear part of `F(ℚ^n) = ℚ ⊕ ⋯ ⊕ ℚ`,
/// with `u·σ = F(σ̃) u`.
#[derive(Clone, Debug)]
pub struct SymmetricModule {
    pub rep: SymRep,
    /// The multilinear part inside `F(ℚ^n)`.
    pub subspace: Subspace,
}

/// The module `V_n` of the degree-`n` component of `F`; `F` need not be
/// homogeneous since the multilinear part of `F(ℚ^n)` lies in degree `n`.
pub fn component_module(value: &FunctorValue, n: usize) -> Result<SymmetricModule> {
    let dims = vec![1; n];
    let subspace = joint_piece(value, &dims, &vec![1; n]);
    let basis = subspace.basis();
    let mut gens = Vec::with_capacity(n.saturating_sub(1));
    for i in 0..n.saturating_sub(1) {
        let image = value
            .map(&block_permutation(&Perm::adjacent(i, n), &dims))
            .mul(basis);
        let restricted = subspace.coordinates_of_columns(&image).ok_or_else(|| {
            Error::Internal(format!(
                "F(s{}) does not preserve the multilinear part",
                i + 1
            ))
        })?;
        gens.push(restricted);
    }
    let rep = SymRep::new(n, subspace.dim(), gens)
        .map_err(|e| Error::Internal(format!("V_{n} is not a module: {e}")))?;
    Ok(SymmetricModule { rep, subspace })
}

/// `V_F` of a homogeneous operation.
pub fn symmetric_module(expr: &FunctorExpr) -> Result<SymRep> {
    let value = eval(expr);
    let n = homogeneous_degree(&value)?;
    Ok(component_module(&value, n)?.rep)
}

#[derive(Clone, Debug)]
pub struct ClassifiedPiece {
    pub degree: usize,
    pub module: SymRep,
    pub multiplicities: BTreeMap<Partition, u64>,
}

/// An operation up to isomorphism: one module `V_n` per nonzero degree.
#[derive(Clone, Debug, Default)]
pub struct ClassifiedOperation {
    pub pieces: Vec<ClassifiedPiece>,
}

impl ClassifiedOperation {
    /// `dim F(ℚ^d) = Σₙ Σ_λ m_λ(V_n) · #SSYT(λ, d)`.
    pub fn dim_at(&self, d: usize) -> u64 {
        self.pieces
            .iter()
            .flat_map(|p| p.multiplicities.iter())
            .map(|(lambda, m)| m * ssyt_count(lambda, d))
            .sum()
    }

    pub fn piece(&self, degree: usize) -> Option<&ClassifiedPiece> {
        self.pieces.iter().find(|p| p.degree == degree)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.pieces.iter().map(|p| p.degree).max()
    }

    pub fn to_json(&self) -> Value {
        let pieces: Vec<Value> = self
            .pieces
            .iter()
            .map(|p| {
                let mults: serde_json::Map<String, Value> = p
                    .multiplicities
                    .iter()
                    .map(|(l, m)| (l.to_string(), json!(m)))
                    .collect();
                json!({"degree": p.degree, "dim_V": p.module.dim(), "multiplicities": mults})
            })
            .collect();
        json!({ "pieces": pieces })
    }
}

pub fn classify(expr: &FunctorExpr) -> Result<ClassifiedOperation> {
    classify_value(&eval(expr))
}

pub fn classify_value(value: &FunctorValue) -> Result<ClassifiedOperation> {
    let mut pieces = Vec::new();
    for n in degrees_present(value) {
        let module = component_module(value, n)?.rep;
        let multiplicities = multiplicities(&module)?;
        pieces.push(ClassifiedPiece {
            degree: n,
            module,
            multiplicities,
        });
    }
    Ok(ClassifiedOperation { pieces })
}

/// For each `d` from 0 to the top degree, the partitions of length at most
/// `d` occurring in the classification.
pub fn boundedness_report(c: &ClassifiedOperation) -> BTreeMap<usize, Vec<Partition>> {
    let occurring: BTreeSet<&Partition> = c
        .pieces
        .iter()
        .flat_map(|p| p.multiplicities.iter())
        .filter(|(_, m)| **m > 0)
        .map(|(l, _)| l)
        .collect();
    (0..=c.max_degree().unwrap_or(0))
        .map(|d| {
            let shapes = occurring
                .iter()
                .filter(|l| l.len() <= d)
                .map(|l| (*l).clone())
                .collect();
            (d, shapes)
        })
        .collect()
}

#[cfg(test)]
mod tests;
