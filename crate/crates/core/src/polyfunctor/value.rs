use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::Result;
use crate::exactmath::{
    lagrange_projector, Assignment, Matrix, PolyMatrix, QMatrix, RMatrix, Rat, Ring, Subspace,
};
use crate::polyfunctor::builtins::{binomial, gamma_map, sym_map, tensor_map, wedge_map};
use crate::polyfunctor::expr::{FunctorExpr, SchurArg};
use crate::polyfunctor::schur::SchurFunctor;
use crate::symgroup::specht_representation;

/// An evaluated functor: dimensions and action on matrices.
#[derive(Clone, Debug)]
pub struct FunctorValue {
    node: Arc<Node>,
    degree_bound: usize,
}

#[derive(Debug)]
enum Node {
    Const(usize),
    Id,
    Tensor(usize),
    Sym(usize),
    Wedge(usize),
    Gamma(usize),
    Schur(SchurFunctor),
    Sum(Vec<FunctorValue>),
    TensorProd(Vec<FunctorValue>),
    Compose(FunctorValue, FunctorValue),
    Component(Component),
}

/// The homogeneous component of a given degree, realized inside the
/// ambient functor as the image of its spectral projector.
#[derive(Debug)]
struct Component {
    inner: FunctorValue,
    degree: usize,
    pieces: Mutex<HashMap<usize, Arc<Subspace>>>,
}

impl Component {
    fn piece(&self, d: usize) -> Arc<Subspace> {
        if let Some(p) = self.pieces.lock().unwrap().get(&d) {
            return p.clone();
        }
        let projector = degree_projector(&self.inner, d, self.degree);
        let piece = Arc::new(Subspace::span(&projector));
        self.pieces
            .lock()
            .unwrap()
            .entry(d)
            .or_insert(piece)
            .clone()
    }
}

/// The eigenvalues `2⁰, ..., 2^N` of `F(2·I)`.
pub fn scaling_spectrum(bound: usize) -> Vec<Rat> {
    (0..=bound)
        .map(|k| Rat::from_int(2).pow(k as u32))
        .collect()
}

/// The projector of `F(ℚ^d)` onto its homogeneous component of degree `n`,
/// as the Lagrange interpolation polynomial of `F(2·I_d)` at `2ⁿ`.
pub fn degree_projector(value: &FunctorValue, d: usize, n: usize) -> QMatrix {
    let dim = value.dim(d);
    let bound = value.degree_bound();
    if n > bound {
        return QMatrix::zeros(dim, dim);
    }
    let a = value.map(&QMatrix::scalar(d, Rat::from_int(2)));
    lagrange_projector(
        &a,
        &scaling_spectrum(bound),
        &Rat::from_int(2).pow(n as u32),
    )
    .expect("F(2·I) is diagonalizable with eigenvalues among the powers of 2")
}

pub fn eval(expr: &FunctorExpr) -> FunctorValue {
    let node = match expr {
        FunctorExpr::Const(c) => Node::Const(*c),
        FunctorExpr::Id => Node::Id,
        FunctorExpr::TensorPow(n) => Node::Tensor(*n),
        FunctorExpr::SymPow(n) => Node::Sym(*n),
        FunctorExpr::WedgePow(n) => Node::Wedge(*n),
        FunctorExpr::GammaPow(n) => Node::Gamma(*n),
        FunctorExpr::Schur(SchurArg::Partition(p)) => {
            Node::Schur(SchurFunctor::new(Arc::new(specht_representation(p))))
        }
        FunctorExpr::Schur(SchurArg::Module(rep)) => Node::Schur(SchurFunctor::new(rep.clone())),
        FunctorExpr::Sum(terms) => Node::Sum(terms.iter().map(eval).collect()),
        FunctorExpr::TensorProd(factors) => Node::TensorProd(factors.iter().map(eval).collect()),
        FunctorExpr::Compose(outer, inner) => Node::Compose(eval(outer), eval(inner)),
    };
    FunctorValue {
        node: Arc::new(node),
        degree_bound: expr.degree_bound(),
    }
}

impl FunctorValue {
    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    /// `dim F(ℚ^d)`.
    pub fn dim(&self, d: usize) -> usize {
        match &*self.node {
            Node::Const(c) => *c,
            Node::Id => d,
            Node::Tensor(n) => d.pow(*n as u32),
            Node::Sym(n) | Node::Gamma(n) => {
                if *n == 0 {
                    1
                } else {
                    binomial(d + n - 1, *n)
                }
            }
            Node::Wedge(n) => binomial(d, *n),
            Node::Schur(s) => s.dim(d),
            Node::Sum(terms) => terms.iter().map(|t| t.dim(d)).sum(),
            Node::TensorProd(factors) => factors.iter().map(|t| t.dim(d)).product(),
            Node::Compose(outer, inner) => outer.dim(inner.dim(d)),
            Node::Component(c) => c.piece(d).dim(),
        }
    }

    /// `F(f)` for `f: ℚ^d → ℚ^e` given as an `e × d` matrix.
    pub fn map<R: Ring>(&self, f: &Matrix<R>) -> Matrix<R> {
        match &*self.node {
            Node::Const(c) => Matrix::identity(*c),
            Node::Id => f.clone(),
            Node::Tensor(n) => tensor_map(*n, f),
            Node::Sym(n) => sym_map(*n, f),
            Node::Wedge(n) => wedge_map(*n, f),
            Node::Gamma(n) => gamma_map(*n, f),
            Node::Schur(s) => s.map(f),
            Node::Sum(terms) => {
                let blocks: Vec<Matrix<R>> = terms.iter().map(|t| t.map(f)).collect();
                Matrix::block_diag(&blocks)
            }
            Node::TensorProd(factors) => factors
                .iter()
                .fold(Matrix::identity(1), |acc, t| acc.kron(&t.map(f))),
            Node::Compose(outer, inner) => outer.map(&inner.map(f)),
            Node::Component(c) => {
                let source = c.piece(f.cols());
                let target = c.piece(f.rows());
                let basis = source.basis().map_entries(R::from_rat);
                c.inner.map(f).mul(&basis).select_rows(target.pivots())
            }
        }
    }

    /// The homogeneous component of degree `n`, in the basis of the image of
    /// its projector.
    pub fn component(&self, n: usize) -> FunctorValue {
        FunctorValue {
            node: Arc::new(Node::Component(Component {
                inner: self.clone(),
                degree: n,
                pieces: Mutex::new(HashMap::new()),
            })),
            degree_bound: n.min(self.degree_bound),
        }
    }

    pub fn map_rmatrix(&self, f: &RMatrix) -> RMatrix {
        match f {
            RMatrix::Rat(m) => RMatrix::Rat(self.map(m)),
            RMatrix::Poly(m) => RMatrix::Poly(self.map(m)),
        }
    }

    /// The Schur operation at the root, if the value is one.
    pub fn as_schur(&self) -> Option<&SchurFunctor> {
        match &*self.node {
            Node::Schur(s) => Some(s),
            _ => None,
        }
    }
}

/// Whether specialising the variables commutes with `F`:
/// `F(m)|_{T=a} = F(m|_{T=a})`.
pub fn check_base_change(
    expr: &FunctorExpr,
    m: &PolyMatrix,
    assignment: &Assignment,
) -> Result<bool> {
    let value = eval(expr);
    let lhs: QMatrix = value.map(m).substitute(assignment)?;
    let rhs = value.map(&m.substitute(assignment)?);
    Ok(lhs == rhs)
}
