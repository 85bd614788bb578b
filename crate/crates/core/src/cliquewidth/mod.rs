//! k-expressions and triangle enumeration along them.

mod decomposition;
mod expr;
mod parse;

pub use decomposition::{
    binarize_decomposition, cw_enumerate, DecompNode, Decomposition, TwinClass,
};
pub use expr::{cotree_to_kexpression, KExprBuilder, KExpression, KNode, Label};
pub use parse::parse_kexpression;
