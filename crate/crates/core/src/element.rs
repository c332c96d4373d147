//! Elements of `PA(K)` and of the quotient `PA(K)/⟨z̄^q⟩`.
//!
//! A [`PolyElement`] is the list of analytic components `a_0, a_1, …, a_m` of
//! `f(z) = Σ_j a_j(z) z̄^j`. Its product is the convolution in the `z̄` index,
//! which is ordinary pointwise multiplication of functions.
//!
//! A [`QuotientElement`] fixes an order bound `q` and keeps only the
//! components below it. Its product, the diamond product, is the same
//! convolution with every index `≥ q` discarded.

use num_complex::Complex64;

use crate::component::Component;
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;

/// Relative trim tolerance for canonicalization: coefficients at or below this
/// multiple of the element's largest coefficient modulus count as zero when
/// they trail.
pub const TRIM_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct PolyElement {
    components: Vec<Component>,
}

fn czero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

impl PolyElement {
    /// Builds an element from its components `a_0..a_m`, canonicalized.
    ///
    /// All taylor-kind components must share one center.
    pub fn from_components(components: Vec<Component>) -> Result<Self> {
        let mut center = None;
        for c in &components {
            if let Component::Taylor(s) = c {
                match center {
                    None => center = Some(s.center()),
                    Some(cc) if cc != s.center() => return Err(Error::CenterMismatch),
                    Some(_) => {}
                }
            }
        }
        Ok(Self::canonical(components))
    }

    /// Builds a polynomial-kind element from coefficient lists, one per power
    /// of `z̄`.
    pub fn from_coeffs(components: Vec<Vec<Complex64>>) -> Result<Self> {
        let comps = components
            .into_iter()
            .map(|c| Polynomial::new(c).map(Component::Poly))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::canonical(comps))
    }

    pub(crate) fn canonical(mut components: Vec<Component>) -> Self {
        let scale = components
            .iter()
            .map(Component::max_abs)
            .fold(0.0, f64::max);
        // An overflowed coefficient must stay visible rather than swamp the rest.
        let threshold = if scale.is_finite() {
            TRIM_TOLERANCE * scale
        } else {
            0.0
        };
        for c in &mut components {
            c.trim(threshold);
        }
        while components.len() > 1 && components.last().unwrap().is_negligible(threshold) {
            components.pop();
        }
        if components.is_empty()
            || (components.len() == 1 && components[0].is_negligible(threshold))
        {
            components = vec![Component::zero()];
        }
        Self { components }
    }

    pub fn zero() -> Self {
        Self {
            components: vec![Component::zero()],
        }
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Self {
        Self::canonical(vec![Component::Poly(Polynomial::constant(c))])
    }

    /// The monomial `c z^k z̄^j`.
    pub fn monomial(c: Complex64, k: usize, j: usize) -> Self {
        let mut comps = vec![Component::zero(); j + 1];
        comps[j] = Component::Poly(Polynomial::monomial(c, k));
        Self::canonical(comps)
    }

    pub fn z() -> Self {
        Self::monomial(Complex64::new(1.0, 0.0), 1, 0)
    }

    pub fn zbar() -> Self {
        Self::monomial(Complex64::new(1.0, 0.0), 0, 1)
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// The component of `z̄^j`, zero past the end.
    pub fn component(&self, j: usize) -> Component {
        self.components
            .get(j)
            .cloned()
            .unwrap_or_else(Component::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.components.len() == 1 && self.components[0].is_negligible(0.0)
    }

    pub fn has_taylor(&self) -> bool {
        self.components.iter().any(Component::is_taylor)
    }

    pub fn taylor_center(&self) -> Option<Complex64> {
        self.components
            .iter()
            .find_map(|c| c.as_taylor().map(|s| s.center()))
    }

    pub fn max_abs(&self) -> f64 {
        self.components
            .iter()
            .map(Component::max_abs)
            .fold(0.0, f64::max)
    }

    /// Index of the last component that is not identically zero, or `None`
    /// for the zero element.
    pub fn exact_order(&self) -> Option<usize> {
        self.exact_order_with_tol(TRIM_TOLERANCE)
    }

    /// As [`exact_order`](Self::exact_order) with a custom relative tolerance.
    pub fn exact_order_with_tol(&self, tol: f64) -> Option<usize> {
        let threshold = tol * self.max_abs();
        self.components
            .iter()
            .rposition(|c| !c.is_negligible(threshold) && c.max_abs() > 0.0)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self::canonical(self.add_raw(other)?.components))
    }

    /// Sum without canonicalization, for callers that canonicalize once at
    /// the end of a longer computation.
    pub(crate) fn add_raw(&self, other: &Self) -> Result<Self> {
        let n = self.components.len().max(other.components.len());
        let components = (0..n)
            .map(|j| self.component(j).add(&other.component(j)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { components })
    }

    pub fn neg(&self) -> Self {
        Self {
            components: self.components.iter().map(Component::neg).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::canonical(self.components.iter().map(|a| a.scale(c)).collect())
    }

    /// Product in `PA(K)`: component `ℓ` is `Σ_{j+k=ℓ} a_j b_k`.
    pub fn full_mul(&self, other: &Self) -> Result<Self> {
        Ok(Self::canonical(self.full_mul_raw(other)?.components))
    }

    pub(crate) fn full_mul_raw(&self, other: &Self) -> Result<Self> {
        let len = self.components.len() + other.components.len() - 1;
        Ok(Self {
            components: convolve(&self.components, &other.components, len)?,
        })
    }

    pub(crate) fn into_canonical(self) -> Self {
        Self::canonical(self.components)
    }

    /// Keeps the components of index `< q`.
    pub fn truncate(&self, q: usize) -> Result<QuotientElement> {
        QuotientElement::new(self.clone(), q)
    }

    /// `Σ_j a_j(z) z̄^j` by Horner's rule in `z̄`.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let zb = z.conj();
        let mut acc = czero();
        for c in self.components.iter().rev() {
            acc = acc * zb + c.eval(z)?;
        }
        Ok(acc)
    }
}

/// First `len` terms of the z̄-index convolution of two component lists,
/// summed in symmetric pairs so the product commutes bit for bit.
fn convolve(a: &[Component], b: &[Component], len: usize) -> Result<Vec<Component>> {
    let get = |v: &[Component], i: usize| v.get(i).cloned().unwrap_or_else(Component::zero);
    (0..len)
        .map(|l| {
            let mut acc = Component::zero();
            for j in 0..=l / 2 {
                let k = l - j;
                let term = if j == k {
                    get(a, j).mul(&get(b, k))?
                } else {
                    get(a, j)
                        .mul(&get(b, k))?
                        .add(&get(a, k).mul(&get(b, j))?)?
                };
                acc = acc.add(&term)?;
            }
            Ok(acc)
        })
        .collect()
}

/// An element of `PA(K)/⟨z̄^q⟩` stored by its canonical representative.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientElement {
    order_bound: usize,
    rep: PolyElement,
}

impl QuotientElement {
    /// The class of `f` modulo `z̄^q`.
    pub fn new(f: PolyElement, q: usize) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidArgument(
                "order bound q must be positive".into(),
            ));
        }
        let rep = if f.components.len() > q {
            PolyElement::canonical(f.components[..q].to_vec())
        } else {
            f
        };
        Ok(Self {
            order_bound: q,
            rep,
        })
    }

    pub fn one(q: usize) -> Result<Self> {
        Self::new(PolyElement::one(), q)
    }

    pub fn order_bound(&self) -> usize {
        self.order_bound
    }

    pub fn rep(&self) -> &PolyElement {
        &self.rep
    }

    pub fn into_rep(self) -> PolyElement {
        self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn exact_order(&self) -> Option<usize> {
        self.rep.exact_order()
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order_bound != other.order_bound {
            return Err(Error::OrderMismatch {
                left: self.order_bound,
                right: other.order_bound,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            order_bound: self.order_bound,
            rep: self.rep.add(&other.rep)?,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            order_bound: self.order_bound,
            rep: self.rep.sub(&other.rep)?,
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            order_bound: self.order_bound,
            rep: self.rep.neg(),
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            order_bound: self.order_bound,
            rep: self.rep.scale(c),
        }
    }

    /// The diamond product: `Σ_{j<q} (Σ_{k+l=j} a_k b_l) z̄^j`.
    pub fn diamond_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let a = &self.rep.components;
        let b = &other.rep.components;
        let len = (a.len() + b.len() - 1).min(self.order_bound);
        Ok(Self {
            order_bound: self.order_bound,
            rep: PolyElement::canonical(convolve(a, b, len)?),
        })
    }

    /// `n`-fold diamond power; the zeroth power is the unit.
    pub fn diamond_pow(&self, mut n: u32) -> Result<Self> {
        let mut result = Self::one(self.order_bound)?;
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.diamond_mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.diamond_mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        self.rep.eval(z)
    }
}
