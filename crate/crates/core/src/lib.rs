//! Finite commutative residuated lattices.
//!
//! Algebras are validated from their tables. Derived structure such as the
//! Boolean center, filters, spectra and the radical is computed exactly, as
//! are quotients by filters and class membership. A registry of structural
//! claims checks each algebra, and an enumerator generates small models.

pub mod algebra;
pub mod claims;
pub mod classify;
pub mod corpus;
pub mod enumerate;
pub mod error;
pub mod filters;
pub mod lattice;
pub mod morphism;
pub mod property;
pub mod quotient;
pub mod regular;
pub mod set;
pub mod spec;

pub use algebra::{direct_product, subalgebra, validate, validate_capped, ElementOrder, OrderValue, ResiduatedLattice};
pub use error::{AlgebraError, Op};
pub use set::ElemSet;
pub use spec::AlgebraSpec;
