//! Quandle cocycle invariants for handlebody-knots.
//!
//! The pipeline: build a G-family of quandles ([`algebra`]), parse a diagram
//! of a spatial trivalent graph ([`diagram`]), enumerate its colorings by the
//! associated quandle ([`coloring`]), weight the crossings with a verified
//! 2-cocycle ([`chains`]), and collect the state-sum evaluations into the
//! invariant multisets ([`invariants`]).

pub mod algebra;
pub mod app;
pub mod catalog;
pub mod chains;
pub mod coloring;
pub mod diagram;
pub mod error;
pub mod invariants;

pub use algebra::{
    associated_quandle, cyclic_group, dihedral_quandle, gfamily_from_quandle, gfamily_linear,
    group_from_matrix_generators, special_linear_group, xset_self, xset_trivial, AxiomReport,
    FiniteGroup, GFamily, Mat2, QElem, Quandle, XSet,
};
pub use chains::{
    check_cocycle2, lambda_ab, nosaka_theta, solve_cocycles2, Chain, Cocycle2, CocycleReport,
};
pub use coloring::{
    conj_key, count_colorings, enumerate_colorings, enumerate_homs, rho_of, Coloring, ConjKey,
    GroupMode, HomLabel,
};
pub use diagram::{parse_diagram, Diagram};
pub use invariants::{col_counts, negate, phi, state_cycle, weight, InvariantValue, ValueMultiset};
