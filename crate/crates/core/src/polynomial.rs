//! Dense complex polynomials in `z`.

use num_complex::Complex64;

use crate::error::Result;

/// A polynomial `Σ_k c_k z^k` stored by ascending power.
///
/// The zero polynomial is the empty coefficient list.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    /// Builds a polynomial, rejecting non-finite coefficients. Exact
    /// trailing zeros are removed.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        for &c in &coeffs {
            crate::check_finite(c)?;
        }
        Ok(Self::from_raw(coeffs))
    }

    pub(crate) fn from_raw(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs
            .last()
            .is_some_and(|c| *c == Complex64::new(0.0, 0.0))
        {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Complex64) -> Self {
        Self::from_raw(vec![c])
    }

    /// `c z^k`
    pub fn monomial(c: Complex64, k: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); k + 1];
        coeffs[k] = c;
        Self::from_raw(coeffs)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Drops trailing coefficients with modulus at or below `threshold`.
    pub(crate) fn trim(&mut self, threshold: f64) {
        while self.coeffs.last().is_some_and(|c| c.norm() <= threshold) {
            self.coeffs.pop();
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| {
                let a = self.coeffs.get(k).copied().unwrap_or_default();
                let b = other.coeffs.get(k).copied().unwrap_or_default();
                a + b
            })
            .collect();
        Self::from_raw(coeffs)
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::from_raw(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let len = self.coeffs.len() + other.coeffs.len() - 1;
        Self::from_raw(symmetric_convolution(&self.coeffs, &other.coeffs, len))
    }
}

/// First `len` coefficients of the Cauchy product of `a` and `b`.
///
/// Terms `a_i b_{k-i}` and `a_{k-i} b_i` are added in pairs so that swapping
/// the operands gives bit-identical output.
pub(crate) fn symmetric_convolution(
    a: &[Complex64],
    b: &[Complex64],
    len: usize,
) -> Vec<Complex64> {
    let get = |v: &[Complex64], i: usize| v.get(i).copied().unwrap_or_default();
    (0..len)
        .map(|k| {
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..=k / 2 {
                let j = k - i;
                let term = if i == j {
                    get(a, i) * get(b, j)
                } else {
                    get(a, i) * get(b, j) + get(a, j) * get(b, i)
                };
                acc += term;
            }
            acc
        })
        .collect()
}
