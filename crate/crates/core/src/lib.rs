pub mod error;
pub mod ext;
pub mod fp;
pub mod linalg;
pub mod resolutions;
pub mod schur;
pub mod shapes;
pub mod weyl;

pub use error::{Error, Result};
pub use ext::{build_hom_complex, hom_dim_oracle, HomComplex, Target, Theorem, Verdict};
pub use fp::{fp_binomial, fp_multinomial, FpElement, PrimeField};
pub use linalg::{FpMatrix, SparseEchelon, SparseMatrix, Subspace};
pub use shapes::{Composition, MatrixWeight, Partition, Shift, Tableau, Tensor3};
pub use schur::{SchurAlgebra, SchurElement};
pub use weyl::{SimpleModule, WeightModule, WeightSpaceModel, WeylModule};

/// Version of the computation engine, recorded in every result.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
