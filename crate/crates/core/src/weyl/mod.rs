//! Weyl modules `Δ(μ)` as quotients of `D(μ)`, straightening, the Schur
//! algebra action, the contravariant form and the simple quotient `L(μ)`.

mod model;
mod module;
mod two_row;

pub use model::{build_weight_space, box_relation_vectors, straighten, WeightSpaceModel};
pub(crate) use model::{box_image, box_sources};
pub use module::{
    gram_matrix, kostka, p_kostka, simple_weight_dims, GramData, SimpleModule, WeightModule,
    WeylModule,
};
pub use two_row::{two_row_expansion, two_row_straighten};
