//! SU(3) spacetime algebra: Gell-Mann generators and their f/d structure
//! constants, the 6-dimensional block representation with its two momentum
//! branches, the 9-dimensional rotation/boost generators obtained from the
//! momentum adjoint action, the 10-dimensional affine (Poincaré-type) form,
//! finite transformations, and the quadratic and cubic invariants.
//!
//! Every construction is generic over [`numerics::Scalar`]; the exact backend
//! works in Q(√2,√3)(i) so algebraic identities check to a structural zero.

pub mod check;
pub mod error;
pub mod invariants;
pub mod ninerep;
pub mod numerics;
pub mod par;
pub mod relations;
pub mod sixrep;
pub mod su3;
pub mod suite;
pub mod transforms;

pub use error::AlgebraError;
