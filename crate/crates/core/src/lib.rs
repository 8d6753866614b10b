//! Exact structure-constant toolkit for center-symmetric algebras.
//!
//! An algebra is center-symmetric when its associator
//! `(x,y,z) = (xy)z − x(yz)` satisfies `(x,y,z) = (z,y,x)`. This crate checks
//! that axiom and the surrounding theory (bimodules, matched pairs, Manin
//! triples and bialgebras) over the rationals, and builds the associated
//! constructions: sub-adjacent Lie algebras, semidirect sums, bicrossed
//! products and standard Manin triples.

pub mod algebra;
pub mod bialgebra;
pub mod bimodule;
pub mod error;
pub mod io;
pub mod linalg;
pub mod manin;
pub mod matched;
pub mod report;
pub mod scalar;
pub mod search;
pub mod tensor;

pub use algebra::{Algebra, GClass, LieAlgebra};
pub use bialgebra::{Bialgebra, Equivalence};
pub use bimodule::Bimodule;
pub use error::{Error, Result};
pub use linalg::{mat_commutator, mat_mul, Matrix, Vector};
pub use manin::{BilinearForm, ManinTriple, Subspace};
pub use matched::{CsMatchedPair, LieMatchedPair};
pub use report::{Report, Witness};
pub use scalar::Scalar;
pub use search::SearchSpec;
pub use tensor::{kron_sum_action, Tensor3};
