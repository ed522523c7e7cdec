use proptest::prelude::*;
use zlab_core::{Bigraph, UGraph};
use zlab_dynkin::DynkinType;
use zlab_spectral::naming::{affine_templates, finite_templates};
use zlab_spectral::*;

fn self_bound_hexagon() -> Bigraph {
    // red 6-cycle, each vertex doubly joined to its opposite
    let mut blue = UGraph::new(6);
    for v in 0..3 {
        blue.add_edge(v, v + 3, 2).unwrap();
    }
    Bigraph::from_graphs(UGraph::cycle(6), blue).unwrap()
}

fn relabel_matrix(a: &[Vec<i64>], perm: &[usize]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut b = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            b[perm[i]][perm[j]] = a[i][j];
        }
    }
    b
}

#[test]
fn perron_eigenvalues() {
    let g = Bigraph::tensor(&UGraph::cycle(4), &UGraph::cycle(2)).unwrap();
    let p = perron(&g).unwrap();
    assert!((p.mu_red - 2.0).abs() < 1e-10 && (p.mu_blue - 2.0).abs() < 1e-10);

    let g = Bigraph::tensor(&UGraph::star(5), &UGraph::path(2)).unwrap();
    let p = perron(&g).unwrap();
    assert!((p.mu_red - 5f64.sqrt()).abs() < 1e-10);
    assert!((p.mu_blue - 1.0).abs() < 1e-10);
    assert!(p.eigenvector.iter().all(|&x| x >= 1.0 - 1e-12));
}

#[test]
fn dual_swaps_eigenvalues() {
    let g = Bigraph::tensor(&UGraph::star(5), &UGraph::path(3)).unwrap();
    let (p, q) = (perron(&g).unwrap(), perron(&g.dual()).unwrap());
    assert!((p.mu_red - q.mu_blue).abs() < 1e-10 && (p.mu_blue - q.mu_red).abs() < 1e-10);
}

#[test]
fn regimes() {
    let t = |s: &UGraph, u: &UGraph| labeling_regime(&Bigraph::tensor(s, u).unwrap()).unwrap();
    assert_eq!(t(&UGraph::path(3), &UGraph::path(3)).regime, Regime::FiniteFinite);
    assert_eq!(t(&UGraph::cycle(4), &UGraph::path(3)).regime, Regime::AffineFinite);
    assert_eq!(t(&UGraph::path(3), &UGraph::cycle(4)).regime, Regime::AffineFinite);
    let aa = t(&UGraph::cycle(4), &UGraph::cycle(4));
    assert_eq!(aa.regime, Regime::AffineAffine);
    assert_eq!(aa.labeling, Some(vec![1; 16]));
    assert_eq!(t(&UGraph::star(5), &UGraph::path(2)).regime, Regime::None);
    // D̂4 ⊗ Â1 carries the D̂4 labels on both layers
    let g = Bigraph::tensor(&UGraph::star(4), &UGraph::cycle(2)).unwrap();
    assert_eq!(labeling_regime(&g).unwrap().labeling, Some(vec![2, 2, 1, 1, 1, 1, 1, 1, 1, 1]));
}

#[test]
fn cartan_of_twist_is_affine_a1() {
    for h in [UGraph::cycle(4), UGraph::star(4), DynkinType::AffE6.diagram()] {
        let g = Bigraph::twist(&h).unwrap();
        let a = cartan_of(&g).unwrap();
        assert_eq!(a.entries(), &[vec![2, -2], vec![-2, 2]]);
        assert_eq!(scaling_factor(&g).unwrap(), (2, 2));
        let k = kac_type(&a).unwrap();
        assert_eq!(k.name.as_deref(), Some("A_1^(1)"));
        assert_eq!(k.delta, Some(vec![1, 1]));
    }
}

#[test]
fn cartan_of_affine_times_a3() {
    let g = Bigraph::tensor(&UGraph::cycle(4), &UGraph::path(3)).unwrap();
    let a = cartan_of(&g).unwrap();
    assert_eq!(a.entries(), &[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
    let k = kac_type(&a).unwrap();
    assert_eq!((k.class, k.name.as_deref()), (Trichotomy::Fin, Some("A_3")));
    let d = delta_vector(&g).unwrap();
    assert!((d[0] - 1.0).abs() < 1e-10 && (d[1] - 2f64.sqrt()).abs() < 1e-10 && (d[2] - 1.0).abs() < 1e-10);
    // A(G)·δ > 0
    for i in 0..3 {
        let s: f64 = (0..3).map(|j| a.get(i, j) as f64 * d[j]).sum();
        assert!(s > 0.0);
    }
}

#[test]
fn parallel_binding() {
    let g = Bigraph::tensor(&DynkinType::AffD(6).diagram(), &UGraph::path(2)).unwrap();
    assert_eq!(scaling_factor(&g).unwrap(), (1, 1));
    assert!(g.blue_components().iter().all(|c| c.len() == 2));
}

#[test]
fn affine_self_binding_is_zero_matrix() {
    let g = self_bound_hexagon();
    assert!(g.is_recurrent());
    assert_eq!(labeling_regime(&g).unwrap().regime, Regime::AffineAffine);
    let a = cartan_of(&g).unwrap();
    assert_eq!(a.entries(), &[vec![0]]);
    assert_eq!(kac_type(&a).unwrap().name.as_deref(), Some("A_0^(1)"));
}

#[test]
fn finite_self_binding_has_a_loop() {
    // hexagon with its three diameters
    let g = Bigraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)], &[(0, 3), (1, 4), (2, 5)]).unwrap();
    assert!(g.is_recurrent());
    let a = cartan_of(&g).unwrap();
    assert_eq!(a.entries(), &[vec![1]]);
    let k = kac_type(&a).unwrap();
    assert_eq!((k.class, k.name.as_deref()), (Trichotomy::Fin, Some("½A_2")));
}

#[test]
fn kac_examples() {
    let k = kac_type(&WeakGCM::new(vec![vec![2, -4], vec![-1, 2]]).unwrap()).unwrap();
    assert_eq!((k.class, k.name.as_deref(), k.delta), (Trichotomy::Aff, Some("A_2^(2)"), Some(vec![2, 1])));
    let k = kac_type(&WeakGCM::new(vec![vec![2, -3], vec![-3, 2]]).unwrap()).unwrap();
    assert_eq!(k.class, Trichotomy::Ind);
    assert!(kac_type(&WeakGCM::new(vec![vec![2, 0], vec![0, 2]]).unwrap()).is_err());
}

#[test]
fn affine_templates_are_affine() {
    for k in 1..12 {
        for t in affine_templates(k) {
            let a = WeakGCM::new(t.matrix.clone()).unwrap();
            let c = kac_type(&a).unwrap();
            assert_eq!(c.class, Trichotomy::Aff, "{}", t.name);
            assert_eq!(c.name.as_deref(), Some(t.name.as_str()));
            let delta = c.delta.unwrap();
            for i in 0..k {
                let s: i64 = (0..k).map(|j| t.matrix[i][j] * delta[j] as i64).sum();
                assert_eq!(s, 0, "{}", t.name);
            }
        }
        for t in finite_templates(k) {
            let c = kac_type(&WeakGCM::new(t.matrix.clone()).unwrap()).unwrap();
            assert_eq!(c.class, Trichotomy::Fin, "{}", t.name);
        }
    }
}

#[test]
fn affine_labels_match_fixture() {
    let delta = |name: &str, k: usize| -> Vec<u64> {
        let t = affine_templates(k).into_iter().find(|t| t.name == name).unwrap();
        kac_type(&WeakGCM::new(t.matrix).unwrap()).unwrap().delta.unwrap()
    };
    assert_eq!(delta("E_8^(1)", 9), vec![2, 4, 6, 3, 5, 4, 3, 2, 1]);
    assert_eq!(delta("G_2^(1)", 3), vec![1, 2, 3]);
    assert_eq!(delta("D_4^(3)", 3), vec![1, 2, 1]);
    assert_eq!(delta("F_4^(1)", 5), vec![1, 2, 3, 4, 2]);
    assert_eq!(delta("E_6^(2)", 5), vec![1, 2, 3, 2, 1]);
    assert_eq!(delta("C_3^(1)", 4), vec![1, 2, 2, 1]);
    assert_eq!(delta("A_4^(2)", 3), vec![2, 2, 1]);
    assert_eq!(delta("½A_5^(1)", 3), vec![1, 1, 1]);
}

#[test]
fn describe_uses_canonical_orientation() {
    let a = WeakGCM::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
    let d = describe(&a, &["D̂_6".to_string(), "Â_5".to_string()]).unwrap();
    assert_eq!(d, "A_1^(1)[D̂_6, Â_5]");
    let d = describe(&a, &["Â_5".to_string(), "D̂_6".to_string()]).unwrap();
    assert_eq!(d, "A_1^(1)[D̂_6, Â_5]");
}

#[test]
fn weak_gcm_json_round_trip() {
    let a = WeakGCM::new(vec![vec![2, -1], vec![-3, 2]]).unwrap();
    let s = serde_json::to_string(&a).unwrap();
    assert_eq!(s, "[[2,-1],[-3,2]]");
    assert_eq!(serde_json::from_str::<WeakGCM>(&s).unwrap(), a);
    assert!(serde_json::from_str::<WeakGCM>("[[2,1],[1,2]]").is_err());
}

proptest! {
    #[test]
    fn naming_survives_relabeling(k in 1usize..10, pick in 0usize..40, seed in proptest::collection::vec(0usize..100, 10)) {
        let ts: Vec<_> = affine_templates(k).into_iter().chain(finite_templates(k)).collect();
        let t = &ts[pick % ts.len()];
        let mut perm: Vec<usize> = (0..k).collect();
        for i in 0..k {
            perm.swap(i, i + seed[i] % (k - i));
        }
        let a = WeakGCM::new(relabel_matrix(&t.matrix, &perm)).unwrap();
        prop_assert_eq!(kac_type(&a).unwrap().name, Some(t.name.clone()));
    }

    #[test]
    fn double_count_on_tensors(l in 3usize..9, use_d in proptest::bool::ANY) {
        let h = if use_d { DynkinType::AffD(l.max(4)).diagram() } else { UGraph::cycle(2 * (l / 2).max(2)) };
        let g = Bigraph::tensor(&h, &UGraph::path(3)).unwrap();
        for b in double_bindings(&g).unwrap() {
            prop_assert!(b.double_count_holds().unwrap());
            prop_assert_eq!(b.scf, (1, 1));
        }
    }
}
