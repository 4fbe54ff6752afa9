//! Explicit comparison maps between operations and Schur operations, and
//! between modules and the modules of their Schur operations, together with
//! their verification.

pub mod sampling;

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::decompose::{component_module, degrees_present, homogeneous_degree, SymmetricModule};
use crate::error::{Error, Result};
use crate::exactmath::{inverse, is_invertible, matrix_to_json, MPoly, Matrix, QMatrix, Rat};
use crate::polyfunctor::{
    check_base_change, eval, FunctorExpr, FunctorValue, SchurArg, SchurFunctor,
};
use crate::symgroup::{multiplicities, Perm, SymRep};

use sampling::{random_assignment, random_map, random_poly_matrix};

/// Number of random maps used for naturality and linearity checks.
pub const SAMPLE_MAPS: usize = 3;

#[derive(Clone, Debug)]
pub struct DimCheck {
    pub d: usize,
    /// The comparison map at this dimension (empty when the dimensions
    /// disagree).
    pub alpha: QMatrix,
    pub invertible: bool,
}

#[derive(Clone, Debug)]
pub struct NaturalityCheck {
    /// The test map `f: ℚ^d → ℚ^e`.
    pub f: QMatrix,
    pub exact: bool,
}

#[derive(Clone, Debug)]
pub struct NamedCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct ComparisonReport {
    pub subject: String,
    pub per_dim: Vec<DimCheck>,
    pub naturality: Vec<NaturalityCheck>,
    pub checks: Vec<NamedCheck>,
    pub verdict: bool,
    pub seed: Option<u64>,
    pub diagnostic: Option<String>,
}

impl ComparisonReport {
    fn new(subject: String, seed: Option<u64>) -> ComparisonReport {
        ComparisonReport {
            subject,
            per_dim: Vec::new(),
            naturality: Vec::new(),
            checks: Vec::new(),
            verdict: false,
            seed,
            diagnostic: None,
        }
    }

    fn finish(mut self) -> ComparisonReport {
        self.verdict = self.diagnostic.is_none()
            && self.per_dim.iter().all(|c| c.invertible)
            && self.naturality.iter().all(|c| c.exact)
            && self.checks.iter().all(|c| c.passed);
        self
    }

    fn note(&mut self, msg: String) {
        match &mut self.diagnostic {
            Some(d) => {
                d.push_str("; ");
                d.push_str(&msg);
            }
            None => self.diagnostic = Some(msg),
        }
    }

    pub fn check(&mut self, name: &str, passed: bool) {
        self.checks.push(NamedCheck {
            name: name.to_string(),
            passed,
        });
        self.verdict = self.verdict && passed;
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("subject".into(), json!(self.subject));
        let per_dim: Vec<Value> = self
            .per_dim
            .iter()
            .map(|c| json!({"d": c.d, "invertible": c.invertible}))
            .collect();
        obj.insert("per_dim".into(), json!(per_dim));
        let naturality: Vec<Value> = self
            .naturality
            .iter()
            .map(|c| {
                json!({"d": c.f.cols(), "e": c.f.rows(), "f": matrix_to_json(&c.f), "exact": c.exact})
            })
            .collect();
        obj.insert("naturality".into(), json!(naturality));
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "passed": c.passed}))
            .collect();
        obj.insert("checks".into(), json!(checks));
        obj.insert("verdict".into(), json!(self.verdict));
        obj.insert("seed".into(), json!(self.seed));
        if let Some(d) = &self.diagnostic {
            obj.insert("diagnostic".into(), json!(d));
        }
        Value::Object(obj)
    }
}

/// `[e_{t₁} | ⋯ | e_{tₙ}]: ℚⁿ → ℚ^d`.
fn selection_matrix(tuple: &[usize], d: usize) -> QMatrix {
    let mut m = QMatrix::zeros(d, tuple.len());
    for (k, &t) in tuple.iter().enumerate() {
        m.set(t, k, Rat::one());
    }
    m
}

/// The canonical map `V_F ⊗ ℚ^{d₁} ⊗ ⋯ ⊗ ℚ^{dₙ} → F(ℚ^{d₁} ⊕ ⋯ ⊕ ℚ^{dₙ})`,
/// `v ⊗ m₁ ⊗ ⋯ ⊗ mₙ ↦ F(m₁ ⊕ ⋯ ⊕ mₙ) v`, with the `V_F` index most significant.
pub fn multilinear_canonical(expr: &FunctorExpr, dims: &[usize]) -> Result<QMatrix> {
    let value = eval(expr);
    let n = homogeneous_degree(&value)?;
    if n != dims.len() {
        return Err(Error::Precondition(format!(
            "operation has degree {n} but {} dimensions were given",
            dims.len()
        )));
    }
    let module = component_module(&value, n)?;
    Ok(multilinear_canonical_value(&value, &module, dims))
}

pub fn multilinear_canonical_value(
    value: &FunctorValue,
    module: &SymmetricModule,
    dims: &[usize],
) -> QMatrix {
    let total: usize = dims.iter().sum();
    let basis = module.subspace.basis();
    let tuples = tuples_in_box(dims);
    let width = tuples.len();
    let mut out = QMatrix::zeros(value.dim(total), basis.cols() * width);
    for (ti, t) in tuples.iter().enumerate() {
        let mut m = QMatrix::zeros(total, dims.len());
        let mut offset = 0;
        for (k, (&tk, &dk)) in t.iter().zip(dims).enumerate() {
            m.set(offset + tk, k, Rat::one());
            offset += dk;
        }
        let image = value.map(&m).mul(basis);
        for b in 0..basis.cols() {
            for row in 0..image.rows() {
                out.set(row, b * width + ti, image.get(row, b).clone());
            }
        }
    }
    out
}

/// All `(t₁, ..., tₙ)` with `0 ≤ tₖ < dₖ`, last index fastest.
fn tuples_in_box(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &d in dims {
        out = out
            .into_iter()
            .flat_map(|t: Vec<usize>| {
                (0..d).map(move |i| {
                    let mut next = t.clone();
                    next.push(i);
                    next
                })
            })
            .collect();
    }
    out
}

/// The Schur operation `⊕ₙ S_{V_n}` built from the modules of an operation.
struct SchurSide {
    modules: Vec<(usize, SymmetricModule, SchurFunctor)>,
}

impl SchurSide {
    fn new(value: &FunctorValue) -> Result<SchurSide> {
        let modules = degrees_present(value)
            .into_iter()
            .map(|n| {
                let module = component_module(value, n)?;
                let functor = SchurFunctor::new(Arc::new(module.rep.clone()));
                Ok((n, module, functor))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SchurSide { modules })
    }

    fn dim(&self, d: usize) -> usize {
        self.modules.iter().map(|(_, _, s)| s.dim(d)).sum()
    }

    fn map(&self, f: &QMatrix) -> QMatrix {
        let blocks: Vec<QMatrix> = self.modules.iter().map(|(_, _, s)| s.map(f)).collect();
        QMatrix::block_diag(&blocks)
    }

    /// `α_d: ⊕ₙ S_{V_n}(ℚ^d) → F(ℚ^d)`. The basis vector of `S_{V_n}(ℚ^d)`
    /// for the sorted tuple `I` and `b ∈ V_n` is the class of `b ⊗ e_I`,
    /// which goes to `F([e_{I₁} | ⋯ | e_{Iₙ}]) b`.
    fn alpha(&self, value: &FunctorValue, d: usize) -> QMatrix {
        let mut columns = Vec::new();
        for (_, module, functor) in &self.modules {
            let space = functor.space(d);
            let lbasis = module.subspace.basis();
            for block in space.blocks() {
                let e = selection_matrix(&block.tuple, d);
                let vectors = lbasis.mul(block.data.invariants.basis());
                columns.push(value.map(&e).mul(&vectors));
            }
        }
        QMatrix::hstack(value.dim(d), &columns)
    }
}

/// Compares every homogeneous component of `F` with the Schur operation of
/// its module: invertibility of `α_d` for `1 ≤ d ≤ d_max` and naturality on
/// seeded random maps.
pub fn operation_comparison(
    value: &FunctorValue,
    subject: &str,
    d_max: usize,
    seed: u64,
) -> Result<ComparisonReport> {
    let mut report = ComparisonReport::new(subject.to_string(), Some(seed));
    let side = SchurSide::new(value)?;
    let mut alphas: Vec<Option<QMatrix>> = vec![None];
    for d in 1..=d_max {
        let (s_dim, f_dim) = (side.dim(d), value.dim(d));
        if s_dim != f_dim {
            report.note(format!(
                "dim S_V(Q^{d}) = {s_dim} but dim F(Q^{d}) = {f_dim}"
            ));
            report.per_dim.push(DimCheck {
                d,
                alpha: QMatrix::zeros(0, 0),
                invertible: false,
            });
            alphas.push(None);
            continue;
        }
        let alpha = side.alpha(value, d);
        let invertible = is_invertible(&alpha);
        report.per_dim.push(DimCheck {
            d,
            alpha: alpha.clone(),
            invertible,
        });
        alphas.push(Some(alpha));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLE_MAPS {
        if d_max == 0 {
            break;
        }
        let d = rng.random_range(1..=d_max);
        let e = rng.random_range(1..=d_max);
        let f = random_map(&mut rng, e, d);
        let exact = match (&alphas[d], &alphas[e]) {
            (Some(a_d), Some(a_e)) => a_e.mul(&side.map(&f)) == value.map(&f).mul(a_d),
            _ => false,
        };
        report.naturality.push(NaturalityCheck { f, exact });
    }
    Ok(report.finish())
}

/// `S_{V_F} ≅ F` for a homogeneous operation.
pub fn schur_comparison(expr: &FunctorExpr, d_max: usize, seed: u64) -> Result<ComparisonReport> {
    let value = eval(expr);
    homogeneous_degree(&value)?;
    operation_comparison(&value, &expr.to_string(), d_max, seed)
}

/// `V ≅ V_{S_V}` via `v ↦ class of v ⊗ e₁ ⊗ ⋯ ⊗ eₙ`.
pub fn module_comparison(rep: &SymRep) -> Result<ComparisonReport> {
    let n = rep.degree();
    let subject = format!("module of degree {n}, dim {}", rep.dim());
    let mut report = ComparisonReport::new(subject, None);
    let expr = FunctorExpr::Schur(SchurArg::Module(Arc::new(rep.clone())));
    let value = eval(&expr);
    let module = component_module(&value, n)?;
    let space = value.as_schur().expect("a Schur operation").space(n);
    let identity_tuple: Vec<usize> = (0..n).collect();
    let mut embedded = QMatrix::zeros(space.dim(), rep.dim());
    if let Some(block) = space.block_of(&identity_tuple) {
        // The stabilizer of (1, ..., n) is trivial, so the block is all of V
        // in the standard basis.
        for i in 0..rep.dim() {
            embedded.set(block.offset + i, i, Rat::one());
        }
    }
    let Some(alpha) = module.subspace.coordinates_of_columns(&embedded) else {
        report.note("the image of V is not multilinear".into());
        return Ok(report.finish());
    };
    let invertible = is_invertible(&alpha);
    report.per_dim.push(DimCheck {
        d: n,
        alpha: alpha.clone(),
        invertible,
    });
    let equivariant = invertible
        && Perm::all(n)
            .iter()
            .all(|s| alpha.mul(&rep.action(s)) == module.rep.action(s).mul(&alpha));
    report.check("equivariance", equivariant);
    let same_multiplicities = multiplicities(rep)? == multiplicities(&module.rep)?;
    report.check("multiplicities", same_multiplicities);
    Ok(report.finish())
}

/// `Σᵢ Tᵢ fᵢ` over ℚ[T1, ..., Tm].
fn generic_combination(samples: &[QMatrix]) -> Matrix<MPoly> {
    let (rows, cols) = (samples[0].rows(), samples[0].cols());
    Matrix::from_fn(rows, cols, |i, j| {
        samples
            .iter()
            .enumerate()
            .fold(MPoly::zero(), |acc, (k, f)| {
                &acc + &MPoly::var(k).scale(f.get(i, j))
            })
    })
}

/// Whether every entry of `F(T₁f₁ + ⋯ + T_m f_m)` is zero or homogeneous of
/// total degree `n`, for `F` homogeneous of degree `n`.
pub fn polarization_check(expr: &FunctorExpr, samples: &[QMatrix]) -> Result<bool> {
    let value = eval(expr);
    let n = homogeneous_degree(&value)?;
    Ok(polarization_check_value(&value, n, samples))
}

pub fn polarization_check_value(value: &FunctorValue, n: usize, samples: &[QMatrix]) -> bool {
    if samples.is_empty() {
        return true;
    }
    let image = value.map(&generic_combination(samples));
    image
        .entries()
        .iter()
        .all(|p| p.is_zero() || p.is_homogeneous_of(n as u32))
}

/// Additivity of a degree-1 operation on random pairs of maps, together with
/// `F(T₁f + T₂g) = T₁F(f) + T₂F(g)` over ℚ[T1, T2].
pub fn linearity_check(expr: &FunctorExpr, d: usize, e: usize, seed: u64) -> Result<bool> {
    let value = eval(expr);
    let n = homogeneous_degree(&value)?;
    if n != 1 {
        return Err(Error::Precondition(format!(
            "operation has degree {n}, not 1"
        )));
    }
    Ok(linearity_check_value(&value, d, e, seed))
}

pub fn linearity_check_value(value: &FunctorValue, d: usize, e: usize, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..SAMPLE_MAPS).all(|_| {
        let f = random_map(&mut rng, e, d);
        let g = random_map(&mut rng, e, d);
        let (ff, fg) = (value.map(&f), value.map(&g));
        let additive = value.map(&f.add(&g)) == ff.add(&fg);
        let t1 = MPoly::var(0);
        let t2 = MPoly::var(1);
        let lhs = value.map(&generic_combination(&[f, g]));
        let rhs = ff.to_poly().scale_by(&t1).add(&fg.to_poly().scale_by(&t2));
        additive && lhs == rhs
    })
}

/// An isomorphism `ι_d: F(ℚ^d) → G(ℚ^d)` natural in `ℚ^d`, for homogeneous
/// `F`, `G` of the same degree with isomorphic modules, obtained as
/// `α_G ∘ S_φ ∘ α_F⁻¹` for a module isomorphism `φ: V_F → V_G`. `None` when
/// the modules are not isomorphic.
pub fn natural_isomorphism(
    f: &FunctorExpr,
    g: &FunctorExpr,
    d: usize,
    seed: u64,
) -> Result<Option<QMatrix>> {
    let (fv, gv) = (eval(f), eval(g));
    let n = homogeneous_degree(&fv)?;
    if homogeneous_degree(&gv)? != n {
        return Ok(None);
    }
    let (mf, mg) = (component_module(&fv, n)?, component_module(&gv, n)?);
    if mf.rep.dim() != mg.rep.dim() {
        return Ok(None);
    }
    let Some(phi) = module_isomorphism(&mf.rep, &mg.rep, seed) else {
        return Ok(None);
    };
    let sf = SchurSide {
        modules: vec![(n, mf.clone(), SchurFunctor::new(Arc::new(mf.rep.clone())))],
    };
    let sg = SchurSide {
        modules: vec![(n, mg.clone(), SchurFunctor::new(Arc::new(mg.rep.clone())))],
    };
    let alpha_f = sf.alpha(&fv, d);
    let alpha_g = sg.alpha(&gv, d);
    let (space_f, space_g) = (sf.modules[0].2.space(d), sg.modules[0].2.space(d));
    // S_φ on the orbit bases: block I sends b to the coordinates of φ b in V_G^{Σ_I}.
    let mut s_phi = QMatrix::zeros(space_g.dim(), space_f.dim());
    for block in space_f.blocks() {
        let target = space_g
            .block_of(&block.tuple)
            .expect("isomorphic modules have the same blocks");
        let image = target
            .data
            .invariants
            .pivot_rows(&phi.mul(block.data.invariants.basis()));
        for r in 0..image.rows() {
            for c in 0..image.cols() {
                s_phi.set(target.offset + r, block.offset + c, image.get(r, c).clone());
            }
        }
    }
    Ok(Some(alpha_g.mul(&s_phi).mul(&inverse(&alpha_f)?)))
}

/// An invertible intertwiner `V → W`, searched among seeded random integer
/// combinations of a basis of intertwiners.
pub fn module_isomorphism(v: &SymRep, w: &SymRep, seed: u64) -> Option<QMatrix> {
    let basis = v.intertwiners(w);
    if basis.is_empty() {
        return (v.dim() == 0 && w.dim() == 0).then(|| QMatrix::zeros(0, 0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..32 {
        let mut phi = QMatrix::zeros(w.dim(), v.dim());
        for b in &basis {
            let c = Rat::from_int(rng.random_range(-5..=5));
            phi = phi.add(&b.scale(&c));
        }
        if is_invertible(&phi) {
            return Some(phi);
        }
    }
    None
}

/// The full battery behind the `verify` command: the comparison with the
/// Schur operations of all components, polarization of each component and
/// base change on seeded random polynomial matrices.
pub fn verify(expr: &FunctorExpr, d_max: usize, seed: u64) -> Result<ComparisonReport> {
    let value = eval(expr);
    let mut report = operation_comparison(&value, &expr.to_string(), d_max, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let d = d_max.clamp(1, 2);
    let samples: Vec<QMatrix> = (0..2).map(|_| random_map(&mut rng, d, d)).collect();
    let polarized = degrees_present(&value)
        .into_iter()
        .all(|n| polarization_check_value(&value.component(n), n, &samples));
    report.check("polarization", polarized);
    let mut base_change = true;
    for _ in 0..2 {
        let m = random_poly_matrix(&mut rng, d, d, 2, 2);
        let a = random_assignment(&mut rng, 2);
        base_change &= check_base_change(expr, &m, &a)?;
    }
    report.check("base_change", base_change);
    Ok(report)
}
