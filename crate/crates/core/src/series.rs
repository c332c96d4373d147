//! Truncated Taylor series about a fixed center.
//!
//! A [`TaylorSeries`] holds the coefficients of `(z - center)^k` for
//! `k = 0..=cap` together with a validity radius. Arithmetic is exact through
//! the cap: products are truncated Cauchy products and the reciprocal is the
//! usual triangular recursion, so `s * s.reciprocal()` is the unit series up to
//! rounding.
//!
//! The validity radius is a convergence heuristic. Series recentred from
//! polynomials are valid everywhere; reciprocals estimate it with a root test
//! over the upper half of the coefficients.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::polynomial::{symmetric_convolution, Polynomial};

/// Relative floor below which a constant term counts as zero.
pub const INVERTIBILITY_FLOOR: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct TaylorSeries {
    center: Complex64,
    coeffs: Vec<Complex64>,
    radius: f64,
}

impl TaylorSeries {
    /// Builds a series from `cap + 1` coefficients. `radius` may be infinite.
    pub fn new(center: Complex64, coeffs: Vec<Complex64>, radius: f64) -> Result<Self> {
        crate::check_finite(center)?;
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument(
                "series needs at least one coefficient".into(),
            ));
        }
        for &c in &coeffs {
            crate::check_finite(c)?;
        }
        if radius.is_nan() || radius <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "invalid validity radius {radius}"
            )));
        }
        Ok(Self {
            center,
            coeffs,
            radius,
        })
    }

    pub fn zero(center: Complex64, cap: usize) -> Self {
        Self {
            center,
            coeffs: vec![Complex64::new(0.0, 0.0); cap + 1],
            radius: f64::INFINITY,
        }
    }

    pub fn constant(c: Complex64, center: Complex64, cap: usize) -> Self {
        let mut s = Self::zero(center, cap);
        s.coeffs[0] = c;
        s
    }

    /// Re-expands `p` about `center` with a degree cap of `cap`.
    pub fn from_polynomial(p: &Polynomial, center: Complex64, cap: usize) -> Result<Self> {
        crate::check_finite(center)?;
        let degree = p.degree().unwrap_or(0);
        if degree > cap {
            return Err(Error::DegreeExceedsCap { degree, cap });
        }
        // Repeated synthetic division by (z - center).
        let mut a: Vec<Complex64> = p.coeffs().to_vec();
        let n = a.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let next = a[j + 1];
                a[j] += center * next;
            }
        }
        a.resize(cap + 1, Complex64::new(0.0, 0.0));
        Ok(Self {
            center,
            coeffs: a,
            radius: f64::INFINITY,
        })
    }

    pub fn center(&self) -> Complex64 {
        self.center
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Radius of the disc about the center inside which evaluation is allowed.
    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.center != other.center {
            return Err(Error::CenterMismatch);
        }
        if self.cap() != other.cap() {
            return Err(Error::CapMismatch {
                left: self.cap(),
                right: other.cap(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(Self {
            center: self.center,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
            radius: self.radius.min(other.radius),
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            center: self.center,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            radius: self.radius,
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            center: self.center,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
            radius: self.radius,
        }
    }

    /// Cauchy product truncated at the common cap.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let out = symmetric_convolution(&self.coeffs, &other.coeffs, self.coeffs.len());
        Ok(Self {
            center: self.center,
            coeffs: out,
            radius: self.radius.min(other.radius),
        })
    }

    /// Multiplicative inverse through the cap.
    ///
    /// Fails when the constant term is at or below
    /// [`INVERTIBILITY_FLOOR`] times the largest coefficient modulus.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = self.coeffs[0];
        let floor = INVERTIBILITY_FLOOR * self.max_abs();
        if c0.norm() <= floor || c0.norm() == 0.0 {
            return Err(Error::SeriesNotInvertible {
                constant: c0.norm(),
                floor,
            });
        }
        let inv0 = c0.inv();
        let n = self.coeffs.len();
        let mut out = Vec::with_capacity(n);
        out.push(inv0);
        for k in 1..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 1..=k {
                acc += self.coeffs[i] * out[k - i];
            }
            out.push(-acc * inv0);
        }
        let radius = estimate_radius(&out).min(self.radius);
        Ok(Self {
            center: self.center,
            coeffs: out,
            radius,
        })
    }

    /// Horner evaluation in `z - center`.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let w = z - self.center;
        let distance = w.norm();
        if distance.is_nan() || distance >= self.radius {
            return Err(Error::OutsideValidity {
                distance,
                radius: self.radius,
            });
        }
        Ok(self.eval_unchecked(w))
    }

    pub(crate) fn eval_unchecked(&self, w: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * w + c)
    }

    /// Ratio-test estimate of the truncation error `Σ_{k>cap} |c_k| r^k`.
    ///
    /// The decay rate is taken from the last two nonzero coefficients. A
    /// series whose top coefficient vanishes is treated as terminated (bound
    /// zero); a rate at or above one gives `+∞`.
    pub fn tail_bound(&self, r: f64) -> f64 {
        let significant: Vec<usize> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.norm() > f64::MIN_POSITIVE)
            .map(|(k, _)| k)
            .collect();
        let cap = self.cap();
        let Some(&last) = significant.last() else {
            return 0.0;
        };
        if last < cap {
            return 0.0;
        }
        let Some(&prev) = significant.iter().rev().nth(1) else {
            return f64::INFINITY;
        };
        let gap = (last - prev) as f64;
        let rate = (self.coeffs[last].norm() / self.coeffs[prev].norm()).powf(1.0 / gap) * r;
        if rate >= 1.0 {
            return f64::INFINITY;
        }
        self.coeffs[last].norm() * r.powi(last as i32) * rate / (1.0 - rate)
    }
}

/// Root-test radius over the upper half of the coefficients, normalized by the
/// largest modulus.
fn estimate_radius(coeffs: &[Complex64]) -> f64 {
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return f64::INFINITY;
    }
    let cap = coeffs.len() - 1;
    let start = (cap / 2).max(1);
    (start..=cap)
        .filter(|&k| coeffs[k].norm() > 0.0)
        .map(|k| (coeffs[k].norm() / scale).powf(-1.0 / k as f64))
        .fold(f64::INFINITY, f64::min)
}
