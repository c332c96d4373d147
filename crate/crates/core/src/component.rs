//! Analytic components: exact polynomials or truncated Taylor series.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::series::TaylorSeries;

#[derive(Debug, Clone, PartialEq)]
pub enum Component {
    Poly(Polynomial),
    Taylor(TaylorSeries),
}

impl Component {
    pub fn zero() -> Self {
        Component::Poly(Polynomial::zero())
    }

    pub fn is_taylor(&self) -> bool {
        matches!(self, Component::Taylor(_))
    }

    pub fn as_poly(&self) -> Option<&Polynomial> {
        match self {
            Component::Poly(p) => Some(p),
            Component::Taylor(_) => None,
        }
    }

    pub fn as_taylor(&self) -> Option<&TaylorSeries> {
        match self {
            Component::Taylor(s) => Some(s),
            Component::Poly(_) => None,
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        match self {
            Component::Poly(p) => p.coeffs(),
            Component::Taylor(s) => s.coeffs(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Whether every coefficient is at or below `threshold` in modulus.
    pub fn is_negligible(&self, threshold: f64) -> bool {
        self.coeffs().iter().all(|c| c.norm() <= threshold)
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        match self {
            Component::Poly(p) => Ok(p.eval(z)),
            Component::Taylor(s) => s.eval(z),
        }
    }

    /// Taylor form about `center` with the given cap.
    pub fn to_taylor(&self, center: Complex64, cap: usize) -> Result<TaylorSeries> {
        match self {
            Component::Poly(p) => TaylorSeries::from_polynomial(p, center, cap),
            Component::Taylor(s) => {
                if s.center() != center {
                    Err(Error::CenterMismatch)
                } else if s.cap() != cap {
                    Err(Error::CapMismatch {
                        left: s.cap(),
                        right: cap,
                    })
                } else {
                    Ok(s.clone())
                }
            }
        }
    }

    fn lift_pair(&self, other: &Self) -> Result<Option<(TaylorSeries, TaylorSeries)>> {
        let (center, cap) = match (self, other) {
            (Component::Poly(_), Component::Poly(_)) => return Ok(None),
            (Component::Taylor(s), _) | (_, Component::Taylor(s)) => (s.center(), s.cap()),
        };
        Ok(Some((
            self.to_taylor(center, cap)?,
            other.to_taylor(center, cap)?,
        )))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        match self.lift_pair(other)? {
            None => Ok(Component::Poly(
                self.as_poly().unwrap().add(other.as_poly().unwrap()),
            )),
            Some((a, b)) => Ok(Component::Taylor(a.add(&b)?)),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Component::Poly(p) => Component::Poly(p.neg()),
            Component::Taylor(s) => Component::Taylor(s.neg()),
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        match self {
            Component::Poly(p) => Component::Poly(p.scale(c)),
            Component::Taylor(s) => Component::Taylor(s.scale(c)),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        match self.lift_pair(other)? {
            None => Ok(Component::Poly(
                self.as_poly().unwrap().mul(other.as_poly().unwrap()),
            )),
            Some((a, b)) => Ok(Component::Taylor(a.mul(&b)?)),
        }
    }

    pub(crate) fn trim(&mut self, threshold: f64) {
        if let Component::Poly(p) = self {
            p.trim(threshold);
        }
    }
}

impl From<Polynomial> for Component {
    fn from(p: Polynomial) -> Self {
        Component::Poly(p)
    }
}

impl From<TaylorSeries> for Component {
    fn from(s: TaylorSeries) -> Self {
        Component::Taylor(s)
    }
}
