//! Finite groups, quandles, G-families of quandles and X-sets, all as dense
//! lookup tables over index ranges, with exhaustive axiom checkers.

pub mod family;
pub mod group;
pub mod mat2;
pub mod quandle;
pub mod report;
pub mod xset;

pub use family::{associated_quandle, gfamily_from_quandle, gfamily_linear, GFamily, QElem};
pub use group::{
    cyclic_group, group_from_matrix_generators, special_linear_group, FiniteGroup,
    DEFAULT_CLOSURE_BOUND,
};
pub use mat2::Mat2;
pub use quandle::{
    conjugation_quandle, dihedral_quandle, qfamily_product_quandle, Quandle, QuandleOpFamily,
};
pub use report::AxiomReport;
pub use xset::{xset_self, xset_trivial, XSet};
