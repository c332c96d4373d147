//! Polyanalytic function algebras on regular compact sets.
//!
//! An element of `PA(K)` is a finite sum `f(z) = Σ_j a_j(z) z̄^j` whose
//! analytic components `a_j` are polynomials or truncated Taylor series.
//! Fixing an order bound `q` and reducing modulo the ideal generated by
//! `z̄^q` yields the quotient algebra `PA_q(K)` with the diamond product.
//!
//! The crate provides:
//!
//! - exact coefficient arithmetic for both algebras ([`element`]),
//! - truncated Taylor series with reciprocals ([`series`]),
//! - sampling, sup-norm and quotient-seminorm estimation ([`region`]),
//! - inverses, resolvents, spectra and the two-variable lift ([`spectral`]),
//! - recovery of analytic components from data ([`decompose`]),
//! - a small expression language for polyanalytic polynomials ([`expr`]).

pub mod component;
pub mod decompose;
pub mod element;
pub mod error;
pub mod expr;
pub mod polynomial;
pub mod region;
pub mod search;
pub mod series;
pub mod spectral;

pub use num_complex::Complex64;

pub use component::Component;
pub use decompose::{
    convergence_check, default_step, fit_components, peel_components, wirtinger_zbar,
    ConvergenceReport, FitResult, SampleSet,
};
pub use element::{PolyElement, QuotientElement, TRIM_TOLERANCE};
pub use error::{Error, Result};
pub use expr::{
    lower, lower_mod, parse, parse_complex, parse_expr, parse_region, print_canonical, tokenize,
    Ast, Token, TokenKind,
};
pub use polynomial::Polynomial;
pub use region::{
    min_modulus, quotient_seminorm, separates_points, sup_norm, sup_norm_with, NormEstimate,
    Region, SamplingConfig, SeminormEstimate, SeminormSearch,
};
pub use series::TaylorSeries;
pub use spectral::{
    hausdorff_distance, invert, is_invertible, lift, margin_floor, resolvent, spectrum,
    Invertibility, ResolventResult, SpectrumEstimate, TwoVarLift, DEFAULT_SERIES_CAP,
};

/// Returns an error unless `z` has finite real and imaginary parts.
pub(crate) fn check_finite(z: Complex64) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite)
    }
}
