//! Subquotients, double complexes and the salamander lemma over two
//! interchangeable lattice backends: finite groups given by Cayley tables,
//! and finite-dimensional vector spaces over a prime field.

pub mod axioms;
pub mod complex;
pub mod error;
pub mod diagram;
pub mod fixtures;
pub mod fuzz;
pub mod lattice;
pub mod salamander;
pub mod sampling;
pub mod subquotient;
pub mod table;
pub mod translate;
pub mod vector;

pub use complex::{AnyComplex, DoubleComplex, HomologyKind, HomologyObject, LawKind, LocalStar, Pos};
pub use error::{Error, NormalToFailure, Result, TableViolation};
pub use lattice::{Backend, BackendTag, FactorizationTriple};
pub use salamander::{
    corner_iso, donor_receptor_iso, salamander_sequence, three_by_three, verify_salamander, Direction, Shape,
    SixTermSequence,
};
pub use subquotient::{form_subquotient, induced_morphism, ExactnessConfig, InducedMorphism, Subquotient};
pub use table::{CayleyGroup, TableBackend, TableMorphism, TableSubgroup};
pub use vector::{MatrixMorphism, Subspace, VecBackend, VectorSpace};
