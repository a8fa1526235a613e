pub mod dsl;
pub mod halftwist;
pub mod linalg;
pub mod qmodule;
pub mod root_data;
pub mod scalar;
pub mod skein;
pub mod suite;
pub mod tangle;

pub use scalar::{Coefficient, LaurentPoly, Scalar, ScalarError};
