//! Exact integer and rational linear algebra. No floating point anywhere.

mod charpoly;
mod det;
mod inertia;
mod matrix;
mod perm;
mod poly;
mod snf;

pub use charpoly::char_poly;
pub use det::det_bareiss;
pub use inertia::{rank_of_symmetric, signature_of, Signature};
pub use matrix::IntMat;
pub(crate) use matrix::{serialize_bigint, serialize_bigints};
pub use perm::perm_congruent;
pub use poly::{cyclotomic, cyclotomic_factorization, cyclotomic_product, IntPoly};
pub use snf::smith_invariant_factors;

/// Default largest cyclotomic order tried when factoring Coxeter polynomials:
/// twice the largest degree `h = 42` in the dataset.
pub const DEFAULT_CYCLOTOMIC_BOUND: u64 = 84;
