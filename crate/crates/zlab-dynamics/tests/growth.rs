use zlab_core::{Bigraph, UGraph};
use zlab_dynamics::*;

fn a1hat() -> UGraph {
    UGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap()
}

fn classify(g: &Bigraph) -> GrowthVerdict {
    let tr = numeric_evolve(g, &vec![1.0; g.n()], 256).unwrap();
    growth_classify(&tr).unwrap()
}

#[test]
fn finite_tensor_finite_is_periodic() {
    let g = Bigraph::tensor(&UGraph::path(3), &UGraph::path(3)).unwrap();
    let v = classify(&g);
    assert_eq!(v.tag, GrowthTag::Bounded);
    assert!(v.diagnostics.revisit.is_some());
}

#[test]
fn affine_tensor_finite_is_exponential() {
    let v = classify(&Bigraph::tensor(&UGraph::cycle(4), &UGraph::path(3)).unwrap());
    assert_eq!(v.tag, GrowthTag::Exponential);
    assert!(v.rate > 0.0);
}

#[test]
fn affine_tensor_affine_is_quadratic_exponential() {
    let v = classify(&Bigraph::tensor(&a1hat(), &a1hat()).unwrap());
    assert_eq!(v.tag, GrowthTag::QuadraticExponential);
    // with all-ones seeds log T grows like (ln 2 / 2) t²
    assert!((v.rate - 2f64.ln() / 2.0).abs() < 1e-3, "{}", v.rate);
    let v = classify(&Bigraph::twist(&UGraph::star(4)).unwrap());
    assert_eq!(v.tag, GrowthTag::QuadraticExponential);
}

#[test]
fn star_tensor_a2_is_doubly_exponential() {
    let g = Bigraph::tensor(&UGraph::star(5), &UGraph::path(2)).unwrap();
    assert_eq!(classify(&g).tag, GrowthTag::DoublyExponential);
    let lam = zlab_spectral::perron(&g).unwrap().eigenvector;
    let trop = tropical_evolve(&g, &lam, 256).unwrap();
    let v = growth_classify(&log_series(&trop)).unwrap();
    assert_eq!(v.tag, GrowthTag::Exponential);
    // tropical values grow by the golden ratio per step
    assert!((v.rate - ((1.0 + 5f64.sqrt()) / 2.0).ln()).abs() < 1e-6, "{}", v.rate);
}

#[test]
fn short_series_rejected() {
    let g = Bigraph::tensor(&UGraph::path(3), &UGraph::path(3)).unwrap();
    let tr = numeric_evolve(&g, &vec![1.0; 9], 30).unwrap();
    assert!(matches!(growth_classify(&tr), Err(DynamicsError::ShortSeries(31, 64))));
}

#[test]
fn diagnostics_record_configuration() {
    let g = Bigraph::tensor(&UGraph::cycle(4), &UGraph::path(3)).unwrap();
    let tr = numeric_evolve(&g, &vec![1.0; g.n()], 200).unwrap();
    let cfg = GrowthConfig { sd_threshold: 0.03, ..GrowthConfig::default() };
    let v = growth_classify_with(&tr, &cfg).unwrap();
    assert_eq!(v.diagnostics.config, cfg);
    assert_eq!(v.diagnostics.window, (100, 200));
}

#[test]
fn too_strict_threshold_is_inconclusive() {
    let g = Bigraph::tensor(&a1hat(), &a1hat()).unwrap();
    let tr = numeric_evolve(&g, &[1.0; 4], 128).unwrap();
    let cfg = GrowthConfig { sd_threshold: 1e-9, ..GrowthConfig::default() };
    assert!(matches!(growth_classify_with(&tr, &cfg), Err(DynamicsError::Inconclusive(_))));
}
