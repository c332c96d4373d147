//! Recovering analytic components from samples.
//!
//! A q-analytic function has a unique expansion `Σ_{j<q} a_j(z) z̄^j`. Two
//! routes recover it here: a least-squares fit in the monomial basis
//! `z^k z̄^j`, and peeling, which takes the top component as
//! `∂_z̄^{q-1} f / (q-1)!` by central differences, subtracts it, and repeats.

use std::io::Read;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::component::Component;
use crate::element::{PolyElement, QuotientElement};
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::region::{sup_norm, sup_norm_with, Region, SamplingConfig};

/// Singular values below this multiple of the largest count as zero.
pub const RANK_TOLERANCE: f64 = 1e-10;

/// Sampled values `(z_i, f(z_i))` with distinct nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    points: Vec<(Complex64, Complex64)>,
}

impl SampleSet {
    pub fn new(points: Vec<(Complex64, Complex64)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::TooFewSamples { need: 1, got: 0 });
        }
        for &(z, v) in &points {
            crate::check_finite(z)?;
            crate::check_finite(v)?;
        }
        let mut nodes: Vec<(f64, f64)> = points.iter().map(|(z, _)| (z.re, z.im)).collect();
        nodes.sort_by(|a, b| a.partial_cmp(b).expect("finite nodes"));
        if nodes.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Data("sample nodes must be distinct".into()));
        }
        Ok(Self { points })
    }

    /// Samples `f` at the given nodes.
    pub fn from_fn<F: Fn(Complex64) -> Complex64>(nodes: &[Complex64], f: F) -> Result<Self> {
        Self::new(nodes.iter().map(|&z| (z, f(z))).collect())
    }

    /// Reads `re(z),im(z),re(f),im(f)` records; a non-numeric first line is
    /// taken as a header.
    pub fn from_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .from_reader(reader);
        let mut points = Vec::new();
        for (line, record) in rdr.records().enumerate() {
            let record = record.map_err(|e| Error::Data(e.to_string()))?;
            if record.len() != 4 {
                return Err(Error::Data(format!(
                    "record {} has {} fields, expected 4",
                    line + 1,
                    record.len()
                )));
            }
            let parsed: std::result::Result<Vec<f64>, _> =
                record.iter().map(str::parse::<f64>).collect();
            match parsed {
                Ok(v) => points.push((Complex64::new(v[0], v[1]), Complex64::new(v[2], v[3]))),
                Err(_) if line == 0 => continue,
                Err(_) => {
                    return Err(Error::Data(format!("record {} is not numeric", line + 1)));
                }
            }
        }
        Self::new(points)
    }

    pub fn points(&self) -> &[(Complex64, Complex64)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FitResult {
    pub element: QuotientElement,
    /// `max_i |fit(z_i) - value_i|`.
    pub residual: f64,
}

/// Least-squares fit of `Σ_{j<q, k≤deg} c_jk z^k z̄^j` to the samples.
///
/// The design matrix is column-scaled and solved by SVD; a numerical rank
/// below the column count is an error rather than being regularized away.
pub fn fit_components(samples: &SampleSet, q: usize, deg: usize) -> Result<FitResult> {
    if q == 0 {
        return Err(Error::InvalidArgument(
            "order bound q must be positive".into(),
        ));
    }
    let columns = q * (deg + 1);
    if samples.len() < columns {
        return Err(Error::TooFewSamples {
            need: columns,
            got: samples.len(),
        });
    }
    let rows = samples.len();
    let mut a = DMatrix::<Complex64>::from_fn(rows, columns, |i, col| {
        let (j, k) = (col / (deg + 1), col % (deg + 1));
        let z = samples.points[i].0;
        z.powu(k as u32) * z.conj().powu(j as u32)
    });
    let b = DMatrix::<Complex64>::from_fn(rows, 1, |i, _| samples.points[i].1);
    let scales: Vec<f64> = (0..columns)
        .map(|col| {
            let n = a.column(col).norm();
            if n > 0.0 {
                n
            } else {
                1.0
            }
        })
        .collect();
    for (col, &s) in scales.iter().enumerate() {
        a.column_mut(col).scale_mut(1.0 / s);
    }
    let svd = a.svd(true, true);
    let smax = svd.singular_values.max();
    let tol = RANK_TOLERANCE * smax;
    let rank = svd.singular_values.iter().filter(|&&s| s > tol).count();
    if rank < columns {
        return Err(Error::RankDeficient { rank, columns });
    }
    let x = svd
        .solve(&b, tol)
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let comps = (0..q)
        .map(|j| {
            let coeffs = (0..=deg)
                .map(|k| x[(j * (deg + 1) + k, 0)] / scales[j * (deg + 1) + k])
                .collect();
            Polynomial::new(coeffs).map(Component::Poly)
        })
        .collect::<Result<Vec<_>>>()?;
    let element = QuotientElement::new(PolyElement::from_components(comps)?, q)?;
    let residual = samples
        .points
        .iter()
        .map(|&(z, v)| element.eval(z).map(|w| (w - v).norm()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    Ok(FitResult { element, residual })
}

/// Default finite-difference step: `1e-3` of the region's diameter.
pub fn default_step(region: &Region) -> f64 {
    1e-3 * region.diameter()
}

/// `∂_z̄^order g(z)` by nested central differences with
/// `∂_z̄ = (∂_x + i ∂_y) / 2`.
pub fn wirtinger_zbar<F>(g: &F, z: Complex64, h: f64, order: usize) -> Complex64
where
    F: Fn(Complex64) -> Complex64 + ?Sized,
{
    if order == 0 {
        return g(z);
    }
    let inner = |w: Complex64| wirtinger_zbar(g, w, h, order - 1);
    let dx = (inner(z + h) - inner(z - h)) / (2.0 * h);
    let ih = Complex64::new(0.0, h);
    let dy = (inner(z + ih) - inner(z - ih)) / (2.0 * h);
    (dx + Complex64::i() * dy) * 0.5
}

/// Recovers the components of a black-box q-analytic function.
///
/// For `j = q-1, …, 0` the component `a_j` is fitted (degree `deg`) to
/// `∂_z̄^j r / j!` on interior sample points, where `r` is `f` minus the
/// components already found. Errors are `O(h²)` for smooth data.
pub fn peel_components<F>(
    f: &F,
    region: &Region,
    q: usize,
    h: f64,
    deg: usize,
) -> Result<QuotientElement>
where
    F: Fn(Complex64) -> Complex64 + Sync + ?Sized,
{
    if q == 0 {
        return Err(Error::InvalidArgument(
            "order bound q must be positive".into(),
        ));
    }
    let max = region.diameter() / 10.0;
    if !(h > 0.0 && h <= max) {
        return Err(Error::InvalidStep { step: h, max });
    }
    let mut n = (deg + 3).max(12);
    let mut nodes = region.interior_sample(n);
    while nodes.len() < 3 * (deg + 1) {
        n *= 2;
        nodes = region.interior_sample(n);
    }

    let mut found: Vec<(usize, Polynomial)> = Vec::new();
    for j in (0..q).rev() {
        let remainder = |z: Complex64| {
            let zb = z.conj();
            found
                .iter()
                .fold(f(z), |acc, (k, a)| acc - a.eval(z) * zb.powu(*k as u32))
        };
        let factorial: f64 = (1..=j).map(|i| i as f64).product();
        let values: Vec<Complex64> = nodes
            .par_iter()
            .map(|&z| wirtinger_zbar(&remainder, z, h, j) / factorial)
            .collect();
        let samples = SampleSet::new(nodes.iter().copied().zip(values).collect())?;
        let fit = fit_components(&samples, 1, deg)?;
        let a = fit
            .element
            .rep()
            .component(0)
            .as_poly()
            .cloned()
            .unwrap_or_default();
        found.push((j, a));
    }
    found.sort_by_key(|(j, _)| *j);
    let comps = found.into_iter().map(|(_, a)| Component::Poly(a)).collect();
    QuotientElement::new(PolyElement::from_components(comps)?, q)
}

/// Distances between consecutive members of a sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    /// `‖seq[i+1] - seq[i]‖_K`.
    pub sup_dists: Vec<f64>,
    /// `component_dists[i][k] = ‖a_k(seq[i+1]) - a_k(seq[i])‖_K`.
    pub component_dists: Vec<Vec<f64>>,
    /// `max_k component_dists[i][k] / sup_dists[i]`; zero when both vanish.
    pub ratios: Vec<f64>,
}

impl ConvergenceReport {
    pub fn max_ratio(&self) -> f64 {
        self.ratios.iter().copied().fold(0.0, f64::max)
    }
}

/// Reports how uniform Cauchy behaviour of a sequence carries over to its
/// components.
pub fn convergence_check(
    seq: &[QuotientElement],
    region: &Region,
    cfg: &SamplingConfig,
) -> Result<ConvergenceReport> {
    let Some(first) = seq.first() else {
        return Ok(ConvergenceReport {
            sup_dists: Vec::new(),
            component_dists: Vec::new(),
            ratios: Vec::new(),
        });
    };
    let q = first.order_bound();
    if let Some(bad) = seq.iter().find(|e| e.order_bound() != q) {
        return Err(Error::OrderMismatch {
            left: q,
            right: bad.order_bound(),
        });
    }
    let mut report = ConvergenceReport {
        sup_dists: Vec::with_capacity(seq.len().saturating_sub(1)),
        component_dists: Vec::with_capacity(seq.len().saturating_sub(1)),
        ratios: Vec::with_capacity(seq.len().saturating_sub(1)),
    };
    for pair in seq.windows(2) {
        let diff = pair[1].sub(&pair[0])?;
        let sup = sup_norm(diff.rep(), region, cfg)?.value;
        let comps = (0..q)
            .map(|k| {
                let a = diff.rep().component(k);
                sup_norm_with(region, cfg, |z| a.eval(z)).map(|e| e.value)
            })
            .collect::<Result<Vec<_>>>()?;
        let top = comps.iter().copied().fold(0.0, f64::max);
        let ratio = if sup > 0.0 {
            top / sup
        } else if top == 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
        report.sup_dists.push(sup);
        report.component_dists.push(comps);
        report.ratios.push(ratio);
    }
    Ok(report)
}
