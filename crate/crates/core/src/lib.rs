//! Combinatorics of the Mullineux map and Serganova's odd-root algorithm for
//! `GL(m|n)`, with desk-scale Schur superalgebras and modular symmetric-group
//! representations to check the representation-theoretic identities behind them.
//!
//! | module | contents |
//! |---|---|
//! | [`partitions`] | partitions, p-rims, Xu's `J` and `j` |
//! | [`mullineux`] | the Mullineux symbol and map (two algorithms) |
//! | [`superweights`] | weights of `GL(m|n)`, odd-root orderings, the tilde map, `Λ⁺⁺(m|n,d)` |
//! | [`schur`] | the Schur superalgebra `S(m|n,d)` and its tensor-space representation |
//! | [`modrep`] | Specht modules, `D^μ`, sign twists and intertwiners |
//! | [`pflinalg`] | exact linear algebra over `F_p` and `ℤ` |

pub mod error;
pub mod modrep;
pub mod mullineux;
pub mod partitions;
pub mod pflinalg;
pub mod schur;
pub mod superweights;

pub use error::{Error, Result};
pub use mullineux::{
    from_symbol, j_chain, mullineux_regular, mullineux_symbolic, mullineux_xu, symbol, JStep,
    MullineuxSymbol,
};
pub use partitions::{
    p_rim, rim_count_a, xu_j_count, xu_j_map, xu_j_map_bits, Partition, RimNode,
};
pub use superweights::{
    embed_x, embed_y, enumerate_lambda_plus, form, in_lambda_plusplus, in_lambda_plusplus_dt,
    in_lambda_plusplus_tilde, restricted_split, serganova_tilde, tail, tilde, validate_ordering,
    OddRoot, RootOrdering, SerganovaStep, SerganovaTrace, Weight,
};
pub use schur::{
    alpha, canonical_rep, gamma, verify_algebra, DoubleIndex, MultiIndex, SchurAlgebra,
    SchurElement, SchurReport,
};
pub use modrep::{
    are_isomorphic, irreducible_d, specht, tensor_sign, verify_mullineux, GroupRep,
    MullineuxReport, SpechtData,
};
