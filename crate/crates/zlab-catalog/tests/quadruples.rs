mod common;

use proptest::prelude::*;
use zlab_catalog::{enumerate_catalog, kac_quadruple, listed_quadruple, vertex_count, FamilyId};

#[test]
fn every_item_matches_its_listing_at_smallest_parameters() {
    let items = common::smallest();
    assert_eq!(items.len(), 53);
    let mut bad = Vec::new();
    for f in items {
        let got = f.build().and_then(|g| kac_quadruple(&g));
        let want = listed_quadruple(&f).unwrap();
        match got {
            Ok(q) if q == want => {}
            Ok(q) => bad.push(format!("{f}: got {q:?}\n   want {want:?}")),
            Err(e) => bad.push(format!("{f}: {e}")),
        }
    }
    assert!(bad.is_empty(), "{} mismatches:\n{}", bad.len(), bad.join("\n"));
}

#[test]
fn quadruple_examples() {
    let q = kac_quadruple(&common::f(2, &[2, 6]).build().unwrap()).unwrap();
    assert_eq!(q.s_g, "A_1^(1)");
    assert_eq!(q.descr_g, "A_1^(1)[D̂_6, D̂_6]");
    assert_eq!(q.descr_gstar, q.descr_g);

    // T(Â_{rd−1}, rot, n): S(G) = A_{n−1}^(1), S(G*) = A_{d−1}^(1)
    let q = kac_quadruple(&common::f(3, &[3, 1, 4, 2]).build().unwrap()).unwrap();
    assert_eq!(q.s_g, "A_3^(1)");
    assert_eq!(q.s_gstar, "A_1^(1)");

    let q = kac_quadruple(&common::f(29, &[2, 3]).build().unwrap()).unwrap();
    assert_eq!(q.s_g, "D_4^(2)");
    assert_eq!(q.s_gstar, "A_5^(2)");

    let q = kac_quadruple(&common::f(53, &[1, 2]).build().unwrap()).unwrap();
    assert_eq!(q.descr_g, "½C_5^(1)[D̂_5, Â_5, Â_5]");
}

#[test]
fn dual_instances_swap_the_quadruple() {
    for (f, g) in enumerate_catalog(30).unwrap() {
        let d = f.dual_family().unwrap();
        let q = kac_quadruple(&d.build().unwrap()).unwrap();
        let p = kac_quadruple(&g).unwrap();
        assert_eq!(q, p.swapped(), "{f}");
        assert_eq!(q, listed_quadruple(&d).unwrap(), "{d}");
    }
}

#[test]
fn listing_vertex_counts_agree_with_builds() {
    for (f, g) in enumerate_catalog(40).unwrap() {
        assert_eq!(vertex_count(&f).unwrap(), g.n(), "{f}");
    }
}

fn two_param() -> impl Strategy<Value = FamilyId> {
    (prop::sample::select(vec![4u8, 5, 6, 7, 8, 9, 10, 11, 20, 22, 23, 24, 25, 26, 27, 28, 29, 47, 48, 53]), 1usize..5, 1usize..6)
        .prop_filter_map("admissible", |(id, m, n)| FamilyId::new(id, vec![m, n]).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn listing_holds_across_parameters(f in two_param(), dual in any::<bool>()) {
        let f = if dual { f.dual_family().unwrap() } else { f };
        let g = f.build().unwrap();
        prop_assert_eq!(kac_quadruple(&g).unwrap(), listed_quadruple(&f).unwrap());
    }
}
