//! Nilpotent Lie algebras, their representations, weight spaces and block decompositions.

pub mod algebra;
pub mod blocks;
pub mod rep;
pub mod weights;

pub use algebra::{validate_lie_algebra, NilpotentLieAlgebra};
pub use blocks::{block_decomposition, nu_split, support, Block, BlockDecomposition, BlockField, NuSplit};
pub use rep::{validate_representation, RepData};
pub use weights::{real_form, weight_decomposition, RealForm, Weight, WeightClass, WeightData, WeightSpace};
