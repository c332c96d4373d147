//! Randomized properties of fitting, peeling and the expression language.

use polyq::{
    fit_components, lower, lower_mod, parse_expr, peel_components, print_canonical, tokenize, Ast,
    Complex64, PolyElement, Region, SampleSet,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn unit_box(rng: &mut ChaCha8Rng) -> Complex64 {
    c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

/// Random polynomial element with `q` components of degree `≤ deg`.
fn random_element(rng: &mut ChaCha8Rng, q: usize, deg: usize) -> PolyElement {
    let comps = (0..q)
        .map(|_| (0..=deg).map(|_| unit_box(rng)).collect())
        .collect();
    PolyElement::from_coeffs(comps).unwrap()
}

/// Coefficients with awkward binary expansions, widely varying magnitudes and
/// exact zeros, to stress number formatting.
fn awkward_coeff(rng: &mut ChaCha8Rng) -> Complex64 {
    let part = |rng: &mut ChaCha8Rng| match rng.random_range(0..5) {
        0 => 0.0,
        1 => rng.random_range(-9..=9) as f64,
        2 => rng.random_range(-1.0..1.0),
        _ => {
            let m: f64 = rng.random_range(-1.0..1.0);
            m * 10f64.powi(rng.random_range(-30..30))
        }
    };
    c(part(rng), part(rng))
}

fn coeff_close(a: &PolyElement, b: &PolyElement, q: usize, deg: usize, rel: f64) -> bool {
    let scale = a.max_abs().max(b.max_abs()).max(f64::MIN_POSITIVE);
    (0..q).all(|j| {
        let (x, y) = (a.component(j), b.component(j));
        (0..=deg).all(|k| {
            let u = x.coeffs().get(k).copied().unwrap_or_default();
            let v = y.coeffs().get(k).copied().unwrap_or_default();
            (u - v).norm() <= rel * scale
        })
    })
}

fn spread_nodes(count: usize) -> Vec<Complex64> {
    let n = (count as f64).sqrt().ceil() as usize;
    Region::rect(c(-1.0, -1.0), c(1.0, 1.0))
        .unwrap()
        .sample(n.max(2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fit_recovers_random_elements(seed in any::<u64>(), q in 1usize..=4, deg in 0usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_element(&mut rng, q, deg);
        let nodes = spread_nodes(3 * q * (deg + 1));
        let samples = SampleSet::from_fn(&nodes, |z| f.eval(z).unwrap()).unwrap();
        let fit = fit_components(&samples, q, deg).unwrap();
        prop_assert!(fit.residual <= 1e-9, "residual {}", fit.residual);
        prop_assert!(coeff_close(fit.element.rep(), &f, q, deg, 1e-8));
    }

    #[test]
    fn distinct_coefficients_are_distinguished(
        seed in any::<u64>(), q in 1usize..=4, deg in 0usize..=5, delta in 1e-6f64..1.0,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_element(&mut rng, q, deg);
        let (j, k) = (rng.random_range(0..q), rng.random_range(0..=deg));
        let g = f.add(&PolyElement::monomial(c(delta, 0.0), k, j)).unwrap();
        let nodes = spread_nodes(3 * q * (deg + 1));
        let samples = SampleSet::from_fn(&nodes, |z| f.eval(z).unwrap()).unwrap();
        // g fits the samples of f only with a visible residual.
        let gap = samples
            .points()
            .iter()
            .map(|&(z, v)| (g.eval(z).unwrap() - v).norm())
            .fold(0.0, f64::max);
        prop_assert!(gap > 1e-9, "gap {gap}");
        let fit = fit_components(&samples, q, deg).unwrap();
        prop_assert!(!coeff_close(fit.element.rep(), &g, q, deg, 0.1 * delta / g.max_abs()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn peeling_agrees_with_fitting(seed in any::<u64>(), q in 1usize..=3, deg in 0usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_element(&mut rng, q, deg);
        let region = Region::unit_disc();
        let h = 1e-3;
        let black_box = |z: Complex64| f.eval(z).unwrap();
        let peeled = peel_components(&black_box, &region, q, h, deg).unwrap();
        let nodes = region.interior_sample(12);
        let samples = SampleSet::from_fn(&nodes, black_box).unwrap();
        let fitted = fit_components(&samples, q, deg).unwrap();
        prop_assert!(coeff_close(peeled.rep(), fitted.element.rep(), q, deg, 100.0 * h * h));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn print_parse_lower_round_trip(seed in any::<u64>(), q in 1usize..=5, deg in 0usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let comps = (0..q)
            .map(|_| (0..=deg).map(|_| awkward_coeff(&mut rng)).collect())
            .collect();
        let f = PolyElement::from_coeffs(comps).unwrap();
        let text = print_canonical(&f).unwrap();
        let back = lower(&parse_expr(&text).unwrap()).unwrap();
        prop_assert_eq!(&back, &f, "text: {}", text);
        prop_assert_eq!(print_canonical(&back).unwrap(), text);
    }
}

fn ast_strategy() -> impl Strategy<Value = Ast> {
    let leaf = prop_oneof![
        Just(Ast::Z),
        Just(Ast::Zbar),
        (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(a, b)| Ast::Literal(c(a, b))),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Ast::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Ast::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Ast::Mul(Box::new(a), Box::new(b))),
            (inner, 0u32..4).prop_map(|(a, n)| Ast::Pow(Box::new(a), n)),
        ]
    })
}

/// Interpretation with every quantity replaced by its modulus and every
/// subtraction by an addition: a bound on the size of intermediate terms.
fn magnitude(ast: &Ast, r: f64) -> f64 {
    match ast {
        Ast::Literal(v) => v.norm(),
        Ast::Z | Ast::Zbar => r,
        Ast::Add(a, b) | Ast::Sub(a, b) => magnitude(a, r) + magnitude(b, r),
        Ast::Mul(a, b) => magnitude(a, r) * magnitude(b, r),
        Ast::Pow(a, n) => magnitude(a, r).powi(*n as i32),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn lowering_matches_direct_interpretation(ast in ast_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = lower(&ast).unwrap();
        for _ in 0..20 {
            let z = unit_box(&mut rng);
            let want = ast.eval(z);
            let got = f.eval(z).unwrap();
            let scale = magnitude(&ast, z.norm()).max(1.0);
            prop_assert!((got - want).norm() <= 1e-12 * scale, "{got} vs {want} (scale {scale})");
        }
    }

    #[test]
    fn truncation_commutes_with_lowering(ast in ast_strategy(), q in 1usize..=5) {
        let once = lower_mod(&ast, q).unwrap();
        let full = lower(&ast).unwrap().truncate(q).unwrap();
        prop_assert_eq!(once, full);
    }

    #[test]
    fn rejections_carry_valid_offsets(text in "[ z()+*^bar0-9.ie$-]{0,12}") {
        let len = text.chars().count();
        if let Err(e) = parse_expr(&text) {
            let off = e.offset().expect("parse errors carry an offset");
            prop_assert!(off <= len, "offset {off} beyond {len} for {text:?}");
        }
        if let Err(e) = tokenize(&text) {
            prop_assert!(e.offset().unwrap() <= len);
        }
    }
}
