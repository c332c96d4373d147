//! Invertibility, inverses, resolvents, spectra, and the two-variable lift.
//!
//! For `f = Σ_{j<q} a_j z̄^j` the element `λ - f` is invertible in the
//! quotient algebra exactly when `λ - a_0` has no zero on `K`. The inverse
//! `h = Σ c_j z̄^j` then solves the triangular system
//!
//! ```text
//! (λ - a_0) c_0 = 1
//! c_j = (λ - a_0)^{-1} Σ_{i=1..j} a_i c_{j-i},   j = 1..q-1
//! ```
//!
//! whose components are computed here as truncated Taylor series about the
//! region's center.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::component::Component;
use crate::element::{PolyElement, QuotientElement};
use crate::error::{Error, Result};
use crate::region::{min_modulus, sup_norm, Region, SamplingConfig};
use crate::series::TaylorSeries;

/// Default degree cap for inverse and resolvent components.
pub const DEFAULT_SERIES_CAP: usize = 64;

/// Number of points at which inverse identities are checked.
pub const VERIFICATION_POINTS: usize = 50;

/// Smallest admissible `min_K |λ - a_0|` for a resolvent at `λ`.
pub fn margin_floor(lambda: Complex64) -> f64 {
    1e-6 * (1.0 + lambda.norm())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Invertibility {
    pub invertible: bool,
    /// Sampled `min_K |a_0|`.
    pub margin: f64,
    /// Where the minimum was found.
    pub witness: Complex64,
}

/// Whether `f` is invertible in the quotient algebra, decided by the sampled
/// minimum modulus of its leading component.
pub fn is_invertible(
    f: &QuotientElement,
    region: &Region,
    cfg: &SamplingConfig,
) -> Result<Invertibility> {
    let est = min_modulus(&f.rep().component(0), Complex64::new(0.0, 0.0), region, cfg)?;
    Ok(Invertibility {
        invertible: est.value > margin_floor(Complex64::new(0.0, 0.0)),
        margin: est.value,
        witness: est.argmax,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResolventResult {
    /// `(λ - f)^{-1}`, or `f^{-1}` for [`invert`]; taylor-kind components.
    pub inverse: QuotientElement,
    /// Max over verification points of `|((λ - f) ⋄ h)(z) - 1|`.
    pub residual: f64,
    /// `None` for a plain inverse.
    pub lambda: Option<Complex64>,
    pub margin: f64,
    /// Heuristic truncation error of the leading component on the region.
    pub tail_bound: f64,
}

/// Taylor forms of the first `q` components of `f`.
fn taylor_components(
    f: &QuotientElement,
    center: Complex64,
    cap: usize,
) -> Result<Vec<TaylorSeries>> {
    (0..f.order_bound())
        .map(|j| f.rep().component(j).to_taylor(center, cap))
        .collect()
}

/// Solves `lead * c_0 = 1`, `lead * c_j = sign * Σ_{i≥1} a_i c_{j-i}`.
fn triangular_inverse(
    lead: &TaylorSeries,
    comps: &[TaylorSeries],
    sign: f64,
    region: &Region,
) -> Result<(Vec<TaylorSeries>, f64)> {
    let recip = lead.reciprocal()?;
    let reach = region.covering_radius();
    if recip.radius().is_nan() || recip.radius() <= reach {
        return Err(Error::OutsideValidity {
            distance: reach,
            radius: recip.radius(),
        });
    }
    let tail = recip.tail_bound(reach);
    let mut c: Vec<TaylorSeries> = Vec::with_capacity(comps.len());
    c.push(recip.clone());
    for j in 1..comps.len() {
        let mut acc = TaylorSeries::zero(lead.center(), lead.cap());
        for i in 1..=j {
            acc = acc.add(&comps[i].mul(&c[j - i])?)?;
        }
        c.push(recip.mul(&acc)?.scale(Complex64::new(sign, 0.0)));
    }
    Ok((c, tail))
}

/// `max_z |Σ_{j<q} (Σ_{k+l=j} A_k(z) C_l(z)) z̄^j - 1|` with every factor
/// evaluated pointwise, so truncation error in either factor shows up.
fn diamond_residual(
    left: &[Component],
    right: &PolyElement,
    q: usize,
    points: &[Complex64],
) -> Result<f64> {
    let residuals = points
        .par_iter()
        .map(|&z| {
            let a = left.iter().map(|c| c.eval(z)).collect::<Result<Vec<_>>>()?;
            let c = (0..q)
                .map(|l| right.component(l).eval(z))
                .collect::<Result<Vec<_>>>()?;
            let zb = z.conj();
            let mut total = Complex64::new(0.0, 0.0);
            for j in (0..q).rev() {
                let mut s = Complex64::new(0.0, 0.0);
                for k in 0..=j {
                    if let Some(&ak) = a.get(k) {
                        s += ak * c[j - k];
                    }
                }
                total = total * zb + s;
            }
            Ok((total - 1.0).norm())
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(residuals.into_iter().fold(0.0, f64::max))
}

/// `(λ - f)^{-1}` in the quotient algebra.
pub fn resolvent(
    f: &QuotientElement,
    lambda: Complex64,
    region: &Region,
    cap: usize,
    cfg: &SamplingConfig,
) -> Result<ResolventResult> {
    crate::check_finite(lambda)?;
    let q = f.order_bound();
    let margin = min_modulus(&f.rep().component(0), lambda, region, cfg)?.value;
    let floor = margin_floor(lambda);
    if margin <= floor {
        return Err(Error::NotInvertible { margin, floor });
    }
    let center = region.center();
    let comps = taylor_components(f, center, cap)?;
    let lead = TaylorSeries::constant(lambda, center, cap).add(&comps[0].neg())?;
    let (c, tail) = triangular_inverse(&lead, &comps, 1.0, region)?;
    let inverse = QuotientElement::new(
        PolyElement::from_components(c.into_iter().map(Component::Taylor).collect())?,
        q,
    )?;

    let shifted: Vec<Component> = (0..q)
        .map(|j| {
            let a = f.rep().component(j);
            if j == 0 {
                Component::Poly(crate::Polynomial::constant(lambda)).add(&a.neg())
            } else {
                Ok(a.neg())
            }
        })
        .collect::<Result<_>>()?;
    let points = region.verification_points(VERIFICATION_POINTS);
    let residual = diamond_residual(&shifted, inverse.rep(), q, &points)?;
    Ok(ResolventResult {
        inverse,
        residual,
        lambda: Some(lambda),
        margin,
        tail_bound: tail,
    })
}

/// `f^{-1}` in the quotient algebra, so that `f ⋄ f^{-1} = 1`.
pub fn invert(
    f: &QuotientElement,
    region: &Region,
    cap: usize,
    cfg: &SamplingConfig,
) -> Result<ResolventResult> {
    let q = f.order_bound();
    let inv = is_invertible(f, region, cfg)?;
    if !inv.invertible {
        return Err(Error::NotInvertible {
            margin: inv.margin,
            floor: margin_floor(Complex64::new(0.0, 0.0)),
        });
    }
    let center = region.center();
    let comps = taylor_components(f, center, cap)?;
    let (c, tail) = triangular_inverse(&comps[0], &comps, -1.0, region)?;
    let inverse = QuotientElement::new(
        PolyElement::from_components(c.into_iter().map(Component::Taylor).collect())?,
        q,
    )?;
    let left: Vec<Component> = (0..q).map(|j| f.rep().component(j)).collect();
    let points = region.verification_points(VERIFICATION_POINTS);
    let residual = diamond_residual(&left, inverse.rep(), q, &points)?;
    Ok(ResolventResult {
        inverse,
        residual,
        lambda: None,
        margin: inv.margin,
        tail_bound: tail,
    })
}

/// The sampled image `a_0(K)` and the radius bound `‖a_0‖_K`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumEstimate {
    pub points: Vec<Complex64>,
    pub bound_radius: f64,
    pub sample_n: usize,
}

impl SpectrumEstimate {
    pub fn max_modulus(&self) -> f64 {
        self.points.iter().map(|p| p.norm()).fold(0.0, f64::max)
    }
}

/// Spectrum estimate of `f`: the image of the sample under `a_0`, bounded by
/// the disc of radius `‖F(·, 0)‖_K = ‖a_0‖_K`.
///
/// The true spectrum is the spectrum of `a_0` in the analytic algebra; for a
/// leading component whose image is not polynomially convex the raw image may
/// differ from it. The bound holds in every case.
pub fn spectrum(f: &QuotientElement, region: &Region, n: usize) -> Result<SpectrumEstimate> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "sample size must be at least 2, got {n}"
        )));
    }
    let a0 = f.rep().component(0);
    let points = region
        .sample(n)
        .par_iter()
        .map(|&z| a0.eval(z))
        .collect::<Result<Vec<_>>>()?;
    let lead = PolyElement::from_components(vec![a0])?;
    let bound = sup_norm(&lead, region, &SamplingConfig::with_grid(n))?;
    Ok(SpectrumEstimate {
        points,
        bound_radius: bound.value,
        sample_n: n,
    })
}

/// Symmetric Hausdorff distance between two finite point sets.
pub fn hausdorff_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    let directed = |x: &[Complex64], y: &[Complex64]| {
        x.par_iter()
            .map(|p| {
                y.iter()
                    .map(|q| (p - q).norm())
                    .fold(f64::INFINITY, f64::min)
            })
            .reduce(|| 0.0, f64::max)
    };
    directed(a, b).max(directed(b, a))
}

/// `F(z, w) = Σ_j a_j(z) w^j`, holomorphic in both variables and equal to
/// `f` on the graph `w = z̄`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoVarLift {
    pub components: Vec<Component>,
}

pub fn lift(f: &QuotientElement) -> TwoVarLift {
    TwoVarLift {
        components: f.rep().components().to_vec(),
    }
}

impl TwoVarLift {
    pub fn eval(&self, z: Complex64, w: Complex64) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.components.iter().rev() {
            acc = acc * w + c.eval(z)?;
        }
        Ok(acc)
    }
}
