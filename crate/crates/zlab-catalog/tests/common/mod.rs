#![allow(dead_code)]

use zlab_catalog::FamilyId;
use zlab_core::Bigraph;

/// Smallest admissible parameters of every listed item, by vertex count.
pub fn smallest() -> Vec<FamilyId> {
    let mut p: Vec<(u8, Vec<usize>)> = vec![
        (1, vec![1, 1, 1, 1]),
        (2, vec![1, 1]),
        (3, vec![2, 1, 3, 1]),
        (4, vec![2, 2]),
        (5, vec![2, 3]),
        (6, vec![2, 2]),
        (7, vec![2, 2]),
        (8, vec![2, 2]),
        (9, vec![2, 3]),
        (10, vec![2, 2]),
        (11, vec![1, 3]),
        (17, vec![1, 0, 2, 2]),
        (18, vec![2, 1, 2]),
        (19, vec![5, 2]),
        (20, vec![2, 2]),
        (47, vec![2, 2]),
        (48, vec![2, 2]),
        (53, vec![1, 1]),
    ];
    p.extend((12..=16).chain([21]).chain(30..=35).chain([49, 50]).map(|id| (id, vec![2])));
    p.extend((22..=29).map(|id| (id, vec![2, 2])));
    p.extend((36..=46).chain([51, 52]).map(|id| (id, vec![])));
    let mut out: Vec<FamilyId> = p.into_iter().map(|(id, params)| FamilyId::new(id, params).unwrap()).collect();
    out.sort();
    out
}

pub fn fixture(name: &str) -> Bigraph {
    let path = format!("{}/tests/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"));
    Bigraph::from_json(&std::fs::read_to_string(path).unwrap()).unwrap()
}

pub fn f(id: u8, params: &[usize]) -> FamilyId {
    FamilyId::new(id, params.to_vec()).unwrap()
}
