use zlab_catalog::search::{bipartite_affine_types, double_bindings_on};
use zlab_catalog::{automorphism_group, binding_search, build_binding, build_toric, double_binding_search, is_conjugate, BindingKind};
use zlab_dynkin::DynkinType::*;
use zlab_spectral::scaling_factor;

#[test]
fn every_binding_pattern_is_the_unique_solution() {
    use BindingKind::*;
    for kind in [Parallel(AffA(3)), Parallel(AffD(5)), DA(2), DA(3), AA(1), AA(2), DD(2), E7E6, DD3(2), AA3(1), AA3(2), D5A3, E7D6, E6D4] {
        let p = kind.pattern().unwrap();
        let g = build_binding(kind).unwrap();
        let (a, b) = scaling_factor(&g).unwrap();
        let want = match kind {
            Parallel(_) => (1, 1),
            DD3(_) | AA3(_) | D5A3 | E7D6 | E6D4 => (1, 3),
            _ => (1, 2),
        };
        assert_eq!((a, b), want, "{kind:?}");
        let found = binding_search(p.x, p.y, a, b);
        assert_eq!(found.len(), 1, "{kind:?}");
        assert!(found[0].is_isomorphic(&g), "{kind:?}");
    }
}

#[test]
fn small_double_bindings_are_listed() {
    let r = double_binding_search(10).unwrap();
    assert!(r.all_matched(), "{:?}", r.matches);
    assert!(r.found.len() >= 10);
}

#[test]
fn twist_and_tensor_over_d4_appear() {
    // six pairwise non-isomorphic double bindings of two D̂_4
    assert_eq!(double_bindings_on(AffD(4), AffD(4)).len(), 6);
    assert!(bipartite_affine_types(9).contains(&AffE8));
}

/// Two toric bigraphs over `Â_{2m−1}` are isomorphic exactly when the gluing
/// automorphisms are conjugate up to inversion.
#[test]
fn toric_isomorphism_follows_conjugacy() {
    for m in 2..=6 {
        let t = AffA(2 * m - 1);
        let group = automorphism_group(t).unwrap();
        let colors = t.colors().unwrap();
        for n in 1..=3 {
            let admissible: Vec<(Vec<usize>, _)> =
                group.iter().filter_map(|eta| build_toric(t, eta, n).ok().map(|g| (eta.clone(), g))).collect();
            for (i, (a, ga)) in admissible.iter().enumerate() {
                for (b, gb) in &admissible[i..] {
                    let inv: Vec<usize> = {
                        let mut v = vec![0; b.len()];
                        for (x, &y) in b.iter().enumerate() {
                            v[y] = x;
                        }
                        v
                    };
                    let weak = is_conjugate(t, a, b).unwrap() || is_conjugate(t, a, &inv).unwrap();
                    assert_eq!(ga.is_isomorphic(gb), weak, "m = {m}, n = {n}, {a:?} vs {b:?}");
                }
            }
            let _ = &colors;
        }
    }
}
