use nalgebra::DMatrix;
use proptest::prelude::*;
use zlab_core::UGraph;
use zlab_dynkin::DynkinType::{self, *};
use zlab_dynkin::{recognize, standard_automorphisms};

fn all_affine() -> Vec<DynkinType> {
    let mut v: Vec<DynkinType> = (1..12).map(AffA).collect();
    v.extend((4..12).map(AffD));
    v.extend([AffE6, AffE7, AffE8]);
    v
}

fn all_finite() -> Vec<DynkinType> {
    let mut v: Vec<DynkinType> = (1..12).map(A).collect();
    v.extend((4..12).map(D));
    v.extend([E6, E7, E8]);
    v
}

fn dominant_eigenvalue(g: &UGraph) -> f64 {
    let n = g.n();
    let a = g.adjacency();
    let m = DMatrix::from_fn(n, n, |i, j| a[i][j] as f64);
    m.symmetric_eigenvalues().iter().cloned().fold(f64::MIN, f64::max)
}

#[test]
fn mckay_numbers() {
    assert_eq!(AffE8.mckay_number().unwrap(), 120);
    assert_eq!(AffE7.mckay_number().unwrap(), 48);
    assert_eq!(AffE6.mckay_number().unwrap(), 24);
    assert_eq!(AffA(1).mckay_number().unwrap(), 2);
    assert_eq!(AffA(7).mckay_number().unwrap(), 8);
    assert_eq!(AffD(4).mckay_number().unwrap(), 8);
    assert_eq!(AffD(9).mckay_number().unwrap(), 28);
    assert!(A(3).mckay_number().is_err());
}

#[test]
fn coxeter_numbers() {
    assert_eq!(A(5).coxeter_number().unwrap(), Some(6));
    assert_eq!(D(4).coxeter_number().unwrap(), Some(6));
    assert_eq!(D(7).coxeter_number().unwrap(), Some(12));
    assert_eq!(E6.coxeter_number().unwrap(), Some(12));
    assert_eq!(E7.coxeter_number().unwrap(), Some(18));
    assert_eq!(E8.coxeter_number().unwrap(), Some(30));
    assert_eq!(AffA(3).coxeter_number().unwrap(), None);
    assert!(NonADE.coxeter_number().is_err());
}

#[test]
fn mckay_is_sum_of_squares() {
    for t in all_affine() {
        let lam = t.additive_function().unwrap();
        assert_eq!(lam.iter().map(|x| x * x).sum::<u64>(), t.mckay_number().unwrap(), "{t}");
    }
}

#[test]
fn coxeter_number_is_affine_label_sum() {
    for t in all_finite() {
        let lam = t.affine().unwrap().additive_function().unwrap();
        assert_eq!(Some(lam.iter().sum::<u64>()), t.coxeter_number().unwrap(), "{t}");
    }
}

#[test]
fn additive_functions_are_additive() {
    for t in all_affine() {
        let g = t.diagram();
        let a = g.adjacency();
        let lam = t.additive_function().unwrap();
        for v in 0..g.n() {
            let s: i64 = (0..g.n()).map(|u| a[v][u] * lam[u] as i64).sum();
            assert_eq!(s, 2 * lam[v] as i64, "{t} vertex {v}");
        }
    }
}

#[test]
fn recognition_agrees_with_spectrum() {
    for t in all_affine() {
        let r = recognize(&t.diagram()).unwrap();
        assert_eq!(r.ty, t);
        assert!((dominant_eigenvalue(&t.diagram()) - 2.0).abs() < 1e-10);
    }
    for t in all_finite() {
        let r = recognize(&t.diagram()).unwrap();
        assert_eq!(r.ty, t);
        let h = t.coxeter_number().unwrap().unwrap() as f64;
        let expect = 2.0 * (std::f64::consts::PI / h).cos();
        assert!((dominant_eigenvalue(&t.diagram()) - expect).abs() < 1e-10, "{t}");
    }
}

#[test]
fn small_examples() {
    assert_eq!(recognize(&UGraph::cycle(6)).unwrap().ty, AffA(5));
    assert_eq!(recognize(&UGraph::path(5)).unwrap().ty, A(5));
    assert_eq!(recognize(&UGraph::star(5)).unwrap().ty, NonADE);
    assert!(dominant_eigenvalue(&UGraph::star(5)) > 2.0);
    assert_eq!(recognize(&UGraph::cycle(2)).unwrap().ty, AffA(1));
}

#[test]
fn automorphisms_are_graph_automorphisms() {
    for t in all_affine() {
        let g = t.diagram();
        for a in standard_automorphisms(t).unwrap() {
            assert!(g.is_automorphism(&a.perm), "{t} {}", a.name);
        }
    }
}

#[test]
fn parse_types() {
    assert_eq!("E6".parse::<DynkinType>().unwrap(), E6);
    assert_eq!("AffE6".parse::<DynkinType>().unwrap(), AffE6);
    assert_eq!("Â_3".parse::<DynkinType>().unwrap(), AffA(3));
    assert_eq!("D̂_5".parse::<DynkinType>().unwrap(), AffD(5));
    assert!("D3".parse::<DynkinType>().is_err());
    assert_eq!(AffD(6).to_string().parse::<DynkinType>().unwrap(), AffD(6));
}

fn shuffled(t: DynkinType, seed: Vec<usize>) -> (UGraph, Vec<usize>) {
    let n = t.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    for (i, s) in seed.iter().enumerate().take(n) {
        perm.swap(i, i + s % (n - i));
    }
    (t.diagram().relabel(&perm), perm)
}

proptest! {
    #[test]
    fn recognition_survives_relabeling(k in 0usize..25, seed in proptest::collection::vec(0usize..100, 12)) {
        let types = all_affine();
        let t = types[k % types.len()];
        let (g, perm) = shuffled(t, seed);
        let r = recognize(&g).unwrap();
        prop_assert_eq!(r.ty, t);
        let lam = t.additive_function().unwrap();
        let add = r.additive.clone().unwrap();
        for v in 0..t.vertex_count() {
            prop_assert_eq!(add[perm[v]], lam[v]);
        }
        // the returned order is an isomorphism onto the canonical diagram
        let pos = r.position().unwrap();
        prop_assert_eq!(g.relabel(&pos), t.diagram());
    }
}
