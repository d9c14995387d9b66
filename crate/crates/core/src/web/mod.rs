//! The diagram side: the web AST, the text DSL, the typechecker, and the
//! evaluation functor with both monoidal products.

pub mod ast;
pub mod eval;
pub mod parse;
pub mod typecheck;

pub use ast::{Gen, ObjectWord, WebTerm};
pub use eval::{evaluate, generator_matrix, hopf_tensor, skein_tensor, skein_tensor_with, EvalMode, SkeinConvention};
pub use parse::parse;
pub use typecheck::typecheck;
