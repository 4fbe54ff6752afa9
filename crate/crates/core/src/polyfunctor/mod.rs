//! Functor expressions and their exact evaluation on free modules and on
//! matrices over ℚ or ℚ[T1, ..., Tk].

pub mod builtins;
mod expr;
mod schur;
mod value;

pub use expr::{FunctorExpr, SchurArg};
pub use schur::{tensor_power_action, SchurBlock, SchurFunctor, SchurSpace, StabilizerData};
pub use value::{check_base_change, degree_projector, eval, scaling_spectrum, FunctorValue};

use std::sync::Arc;

use crate::symgroup::SymRep;

/// `S_V(ℚ^d)` for a module `V`.
pub fn schur_space(rep: &SymRep, d: usize) -> Arc<SchurSpace> {
    SchurFunctor::new(Arc::new(rep.clone())).space(d)
}
