pub mod coefficients;
pub mod corpus;
pub mod error;
pub mod macdonald;
pub mod partitions;
pub mod plethysm;
pub mod symfun;
pub mod tensor;
pub mod verify;

pub use coefficients::{Coeff, MPoly, RatFun, Rat, Var};
pub use error::{Error, Result};
pub use partitions::{HookShape, Partition};
pub use symfun::{Basis, SymFun};
pub use tensor::TensorExp;
