//! Exact computation of symmetric-group-equivariant Serre characteristics
//! of configuration spaces and of the moduli spaces of n-pointed genus-one
//! curves.
//!
//! Everything is exact: arbitrary-precision integers and rationals, sparse
//! power-sum series over lambda-coefficient rings, Weyl-symmetric Laurent
//! polynomials for the rank-two local system, and formal cusp symbols in the
//! answers. Independent pipelines compute the same tables and are compared
//! term by term; there are no tolerances anywhere.

pub mod arnold;
pub mod characters;
pub mod configspace;
pub mod gl2;
pub mod golden;
pub mod moduli;
pub mod motive;
pub mod numbers;
pub mod partitions;
pub mod ring;
pub mod symfun;

pub use characters::{char_table, Character};
pub use gl2::{Gl2, HPoly, LPoly};
pub use motive::{MotiveClass, MotiveLaurent};
pub use partitions::{IntPartition, SetPartition, StirlingMatrices};
pub use ring::{Error, Int, Rat, Result};
pub use symfun::{FreeLambda, SymSeries};
