mod common;

use zlab_catalog::{enumerate_catalog, FamilyId};
use zlab_spectral::double_bindings;

#[test]
fn duality_closure_up_to_forty_vertices() {
    for (f, g) in enumerate_catalog(40).unwrap() {
        let d = f.dual_family().unwrap();
        assert!(g.dual().is_isomorphic(&d.build().unwrap()), "{f}");
        if !f.info().unwrap().self_dual {
            let back = d.dual_family().unwrap();
            assert_eq!(back, f);
        }
    }
}

#[test]
fn independent_dual_constructions() {
    // duals built as path bigraphs or pseudo-twists rather than by swapping colors
    for (id, params) in [(4, vec![2, 2]), (4, vec![3, 4]), (7, vec![3, 2]), (10, vec![2, 4]), (18, vec![3, 1, 2]), (18, vec![5, 2, 2]), (22, vec![3, 2])] {
        let f = FamilyId::new(id, params).unwrap();
        let g = f.build().unwrap();
        let d = FamilyId { dual: true, ..f.clone() }.build().unwrap();
        assert!(g.dual().is_isomorphic(&d), "{f}");
    }
}

#[test]
fn double_count_identity() {
    for (f, g) in enumerate_catalog(40).unwrap() {
        for f2 in [f.clone(), f.dual_family().unwrap()] {
            let g = if f2 == f { g.clone() } else { f2.build().unwrap() };
            for b in double_bindings(&g).unwrap() {
                let (a, c) = b.scf;
                assert_eq!(a * b.x_type.mckay_number().unwrap(), c * b.y_type.mckay_number().unwrap(), "{f2}: {b:?}");
            }
        }
    }
}
