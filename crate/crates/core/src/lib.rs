//! Supercharacter theories and central Schur rings of finite groups.

pub mod characters;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod lattice;
pub mod partition;
pub mod products;
pub mod schur;
pub mod sct;
pub mod superinduction;

pub use characters::{CharacterTable, ClassFunction, GroupAlgebraElement};
pub use cyclotomic::{Cyclotomic, Rational};
pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupSpec, QuotientStructure, Subgroup};
pub use lattice::{enumerate_sup, SupLattice};
pub use partition::Partition;
pub use schur::{SchurPartition, SchurViolation};
pub use sct::{NormalContext, SupercharacterTheory, TheoryViolation};
