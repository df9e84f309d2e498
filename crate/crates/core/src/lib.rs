//! Exact computation in the double affine Hecke algebra `Ḧ_κ`.
//!
//! The crate provides the coefficient ring `Z[s^±1, c^±1, d^±1]`, Laurent
//! polynomials in `X₁, …, Xκ`, words in the generators `σᵢ, xᵢ, yᵢ`, the
//! polynomial representation, the enhanced representation on the
//! braid-skein module `PR_κ`, and verification suites tying the two together
//! through the averaging map `S`.
//!
//! Every type is generic over an integer coefficient type. The aliases at the
//! crate root fix it to overflow-checked `i64`; the `Big*` aliases use
//! arbitrary precision.
//!
//! ```
//! use daha::{parse_word, rho_word, Skein};
//!
//! let w = parse_word("s1*y1", 2).unwrap();
//! let v = Skein::parse("(a1^2*a2^-1,[2 1])", 2).unwrap();
//! assert_eq!(rho_word(&w, &v).unwrap().to_string(), "c^4*(a1^-1*a2^2,[1 2])");
//! ```

pub mod coeff;
pub mod error;
pub mod laurent;
mod parse;
pub mod polyrep;
pub mod rep;
pub mod scalars;
pub mod skein;
pub mod verify;
pub mod words;

pub use coeff::Coefficient;
pub use error::{Error, Result};
pub use laurent::{apply_omega, apply_tau, exact_divide, lp_add, lp_mul, LaurentPoly, Monomial};
pub use polyrep::{p_sigma, p_sigma_inv, p_word, p_x, p_y1, p_y1_inv, PolynomialRep};
pub use rep::Representation;
pub use scalars::{hbar, scalar_add, scalar_mul, substitute_d_eq_s, ScalarMonomial, ScalarPoly};
pub use skein::{
    perm_compose_right, push_sigma_past_monomial, rho_sigma, rho_sigma_base, rho_sigma_inv, rho_word, rho_x, rho_y1,
    rho_y1_inv, substitute_d_eq_s_elem, BasisKey, Permutation, SkeinElement, SkeinRep,
};
pub use verify::{averaging_s, check_intertwiner, check_relations, check_subrep_closure, CheckReport};
pub use words::{
    expand_xi, expand_yi, parse_word, relation_table, Generator, GeneratorLetter, GeneratorWord, RelationPair,
    WordCombination,
};

pub use num_bigint::BigInt;

pub type Scalar = ScalarPoly<i64>;
pub type Laurent = LaurentPoly<i64>;
pub type Skein = SkeinElement<i64>;

pub type BigScalar = ScalarPoly<BigInt>;
pub type BigLaurent = LaurentPoly<BigInt>;
pub type BigSkein = SkeinElement<BigInt>;
