//! Letter-braiding invariants of words in free and finitely presented groups.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is exact: coefficients
//! live in ℤ, ℚ or 𝔽p and every algorithm is a finite computation over them.
//!
//! The layout follows the computation:
//!
//! * [`coeff`] - scalars, dense matrices, Hermite/Smith reduction, kernels.
//! * [`words`] - free-group words over a named alphabet.
//! * [`coalg`] - the tensor coalgebra of generator functionals.
//! * [`braiding`] - the subdivided-circle model and weight reduction.
//! * [`magnus`] - truncated Magnus expansion and Fox calculus, used as oracles.
//! * [`presented`] - truncated group rings of presented groups and their invariants.
//! * [`johnson`] - Johnson filtration levels and the dual Johnson homomorphism.
//! * [`finite`] - brute-force group algebras of finite groups.

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod braiding;
pub mod coalg;
pub mod coeff;
mod error;
pub mod finite;
pub mod johnson;
pub mod magnus;
pub mod presented;
pub mod words;

pub use error::{Error, Result};

pub use braiding::{
    braiding_number, braiding_polynomial, cobound, iterated_sum, multi_evaluation, product_check, pullback_to_circle,
    weight_reduce, BarTensor, CircleForm, CircleWord, Factor, ProductCheck,
};
pub use coalg::{BraidPolynomial, Functional, Monomial, MultiTensor, TensorElement};
pub use coeff::{Matrix, RingSpec, Scalar};
pub use finite::FiniteGroupTable;
pub use johnson::{Endo, JohnsonLevel, JohnsonReport};
pub use magnus::{FreeGroupRingElement, TruncSeries};
pub use presented::{Depth, GroupHom, Invariance, InvariantBasis, Presentation, TruncatedQuotient, Witness};
pub use words::{Alphabet, Letter, Word};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeDoctests;
