//! The chain complex on Y x Q^n: boundary maps, degeneracy generators,
//! 2-cocycle verification and search, and the isomorphic cyclic-family
//! complex on Y x X^n with its chain maps.

pub mod chain;
pub mod cocycle;
pub mod iso;
pub mod solve;

pub use chain::{boundary, d2_generators, d_generators, Chain, DGenerator, DKind};
pub use cocycle::{check_cocycle2, lambda_ab, nosaka_theta, Cocycle2, CocycleReport};
pub use iso::{
    chain_map_f, chain_map_g, i_boundary, i_d_generators, pullback_cocycle, IChain, ICocycle2,
    IDGenerator, IDKind,
};
pub use solve::{solve_cocycles2, solve_icocycles2, ModMatrix, DEFAULT_SOLVE_BOUND};
