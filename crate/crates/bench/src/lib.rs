//! Seeded inputs shared by the benchmarks.

use polyq::{Complex64, PolyElement, QuotientElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Element with `q` components of degree `deg` and coefficients in the unit box.
pub fn random_element(seed: u64, q: usize, deg: usize) -> PolyElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let comps = (0..q)
        .map(|_| {
            (0..=deg)
                .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                .collect()
        })
        .collect();
    PolyElement::from_coeffs(comps).expect("finite coefficients")
}

pub fn random_quotient(seed: u64, q: usize, deg: usize) -> QuotientElement {
    random_element(seed, q, deg).truncate(q).expect("q >= 1")
}

/// Random element shifted so that `λ - a_0` stays away from zero on the unit disc.
pub fn resolvent_input(seed: u64, q: usize, deg: usize) -> QuotientElement {
    let f = random_element(seed, q, deg);
    let scale = 0.5 / f.component(0).max_abs().max(1e-300);
    let comps = f
        .components()
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let s = if j == 0 { scale } else { 1.0 };
            c.coeffs().iter().map(|&x| x * s).collect()
        })
        .collect();
    PolyElement::from_coeffs(comps)
        .and_then(|g| g.truncate(q))
        .expect("finite coefficients")
}
