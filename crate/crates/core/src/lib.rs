//! Exact computation in the free noncommutative Rota-Baxter algebra on a set
//! of letters.
//!
//! Basis elements are Rota-Baxter words ([`Rbw`]): alternating sequences of
//! letters and bracketed words. Elements are finite linear combinations with
//! coefficients that are polynomials in the weight `lambda` over the
//! rationals ([`Coeff`]). On top of the diamond product the crate provides the
//! coproduct and counit, the degree grading, and the antipode at weight zero.

pub mod algebra;
pub mod coalgebra;
pub mod coeffs;
pub mod combination;
pub mod error;
pub mod hopf;
pub mod suites;
pub mod textio;
pub mod words;

pub use algebra::{check_rota_baxter, diamond, diamond_basis, rb_operator, LinComb};
pub use coalgebra::{coproduct, coproduct_basis, counit, Tensor2, Tensor3};
pub use coeffs::{Coeff, WeightMode};
pub use combination::Combination;
pub use error::{Error, Result};
pub use hopf::{Antipode, LinearMap};
pub use words::{enumerate_words, Item, Letter, Rbw, StdBlock};
