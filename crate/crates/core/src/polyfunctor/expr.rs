use std::fmt;
use std::sync::Arc;

use crate::symgroup::{Partition, SymRep};

/// The module a Schur operation is built from.
#[derive(Clone, Debug, PartialEq)]
pub enum SchurArg {
    /// Shorthand for the Specht module of the partition.
    Partition(Partition),
    Module(Arc<SymRep>),
}

impl SchurArg {
    /// Degree `n` of the symmetric group.
    pub fn degree(&self) -> usize {
        match self {
            SchurArg::Partition(p) => p.size(),
            SchurArg::Module(rep) => rep.degree(),
        }
    }
}

/// A functor expression built from the generating operations.
#[derive(Clone, Debug, PartialEq)]
pub enum FunctorExpr {
    /// The constant functor `M ↦ ℚ^c`.
    Const(usize),
    Id,
    TensorPow(usize),
    SymPow(usize),
    WedgePow(usize),
    GammaPow(usize),
    Schur(SchurArg),
    Sum(Vec<FunctorExpr>),
    TensorProd(Vec<FunctorExpr>),
    /// `Compose(outer, inner)` is `M ↦ outer(inner(M))`.
    Compose(Box<FunctorExpr>, Box<FunctorExpr>),
}

impl FunctorExpr {
    pub fn schur(lambda: Partition) -> FunctorExpr {
        FunctorExpr::Schur(SchurArg::Partition(lambda))
    }

    pub fn schur_module(rep: SymRep) -> FunctorExpr {
        FunctorExpr::Schur(SchurArg::Module(Arc::new(rep)))
    }

    pub fn compose(outer: FunctorExpr, inner: FunctorExpr) -> FunctorExpr {
        FunctorExpr::Compose(Box::new(outer), Box::new(inner))
    }

    /// An `N` such that `F(c·I)` has all eigenvalues among `c⁰, ..., c^N`.
    pub fn degree_bound(&self) -> usize {
        match self {
            FunctorExpr::Const(_) => 0,
            FunctorExpr::Id => 1,
            FunctorExpr::TensorPow(n)
            | FunctorExpr::SymPow(n)
            | FunctorExpr::WedgePow(n)
            | FunctorExpr::GammaPow(n) => *n,
            FunctorExpr::Schur(arg) => arg.degree(),
            FunctorExpr::Sum(terms) => terms.iter().map(|t| t.degree_bound()).max().unwrap_or(0),
            FunctorExpr::TensorProd(factors) => factors.iter().map(|t| t.degree_bound()).sum(),
            FunctorExpr::Compose(outer, inner) => outer.degree_bound() * inner.degree_bound(),
        }
    }

    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctorExpr::Sum(v) | FunctorExpr::TensorProd(v) if v.len() >= 2 => {
                write!(f, "({self})")
            }
            FunctorExpr::Compose(..) => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }

    fn fmt_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctorExpr::Sum(v) | FunctorExpr::TensorProd(v) if v.len() >= 2 => {
                write!(f, "({self})")
            }
            _ => write!(f, "{self}"),
        }
    }
}

/// Prints in the expression language. Sums and products with fewer than two
/// operands print as the equivalent single operand, `Const(0)` or `Const(1)`.
impl fmt::Display for FunctorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctorExpr::Const(c) => write!(f, "Const({c})"),
            FunctorExpr::Id => write!(f, "Id"),
            FunctorExpr::TensorPow(n) => write!(f, "Tensor^{n}"),
            FunctorExpr::SymPow(n) => write!(f, "Sym^{n}"),
            FunctorExpr::WedgePow(n) => write!(f, "Wedge^{n}"),
            FunctorExpr::GammaPow(n) => write!(f, "Gamma^{n}"),
            FunctorExpr::Schur(SchurArg::Partition(p)) => {
                let parts: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
                write!(f, "Schur[{}]", parts.join(","))
            }
            FunctorExpr::Schur(SchurArg::Module(rep)) => {
                write!(
                    f,
                    "Schur<module of degree {}, dim {}>",
                    rep.degree(),
                    rep.dim()
                )
            }
            FunctorExpr::Sum(terms) => match terms.as_slice() {
                [] => write!(f, "Const(0)"),
                [t] => write!(f, "{t}"),
                _ => {
                    for (i, t) in terms.iter().enumerate() {
                        if i > 0 {
                            write!(f, " + ")?;
                        }
                        match t {
                            FunctorExpr::Sum(v) if v.len() >= 2 => write!(f, "({t})")?,
                            _ => write!(f, "{t}")?,
                        }
                    }
                    Ok(())
                }
            },
            FunctorExpr::TensorProd(factors) => match factors.as_slice() {
                [] => write!(f, "Const(1)"),
                [t] => write!(f, "{t}"),
                _ => {
                    for (i, t) in factors.iter().enumerate() {
                        if i > 0 {
                            write!(f, " * ")?;
                        }
                        t.fmt_factor(f)?;
                    }
                    Ok(())
                }
            },
            FunctorExpr::Compose(outer, inner) => {
                outer.fmt_atom(f)?;
                write!(f, " o ")?;
                inner.fmt_atom(f)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_bounds() {
        let e = FunctorExpr::Sum(vec![FunctorExpr::SymPow(2), FunctorExpr::WedgePow(3)]);
        assert_eq!(e.degree_bound(), 3);
        let c = FunctorExpr::compose(FunctorExpr::SymPow(2), FunctorExpr::SymPow(2));
        assert_eq!(c.degree_bound(), 4);
        assert_eq!(FunctorExpr::Const(5).degree_bound(), 0);
        let p = FunctorExpr::TensorProd(vec![FunctorExpr::Id, FunctorExpr::SymPow(2)]);
        assert_eq!(p.degree_bound(), 3);
    }

    #[test]
    fn printing_parenthesizes_by_precedence() {
        let sum = FunctorExpr::Sum(vec![FunctorExpr::SymPow(2), FunctorExpr::WedgePow(3)]);
        let e = FunctorExpr::TensorProd(vec![sum.clone(), FunctorExpr::Id]);
        assert_eq!(e.to_string(), "(Sym^2 + Wedge^3) * Id");
        let c = FunctorExpr::compose(FunctorExpr::SymPow(2), e);
        assert_eq!(c.to_string(), "Sym^2 o ((Sym^2 + Wedge^3) * Id)");
        let nested = FunctorExpr::compose(
            FunctorExpr::compose(FunctorExpr::Id, FunctorExpr::Id),
            FunctorExpr::Id,
        );
        assert_eq!(nested.to_string(), "(Id o Id) o Id");
        let s = FunctorExpr::schur(Partition::new(vec![2, 1]).unwrap());
        assert_eq!(s.to_string(), "Schur[2,1]");
        let ss = FunctorExpr::Sum(vec![sum, FunctorExpr::Const(1)]);
        assert_eq!(ss.to_string(), "(Sym^2 + Wedge^3) + Const(1)");
    }
}
