//! The polynomial kernel: exact coefficients in Q(ζ_n), homogeneous
//! trivariate forms, the text grammar, gcds, squarefree decomposition and
//! reduced quotients.
//!
//! Key items: [`Scalar`], [`Form`], [`parse_form`], [`form_gcd`],
//! [`squarefree_decompose`], [`mth_root`], [`FormRatio`].

pub mod factor;
pub mod form;
pub mod gcd;
pub mod parse;
pub mod ratio;
pub mod scalar;

pub use factor::{mth_root, squarefree_decompose, SquarefreeDecomposition};
pub use form::{Form, FormError, Mono};
pub use gcd::form_gcd;
pub use parse::{format_form, parse_form};
pub use ratio::FormRatio;
pub use scalar::Scalar;
