use num_bigint::BigInt;
use proptest::prelude::*;
use zlab_core::UGraph;
use zlab_twist::*;

fn path4() -> UGraph {
    UGraph::path(4)
}

/// Affine map `h ↦ f(h)` as `(linear part, constant)`, read off from images of `0` and `α_k`.
fn affine_map(n: usize, f: impl Fn(&ReflectionVector) -> ReflectionVector) -> (Vec<Vec<i64>>, Vec<i64>) {
    let to_i = |h: &ReflectionVector| -> Vec<i64> { h.to_integers().unwrap().iter().map(|x| i64::try_from(x).unwrap()).collect() };
    let c = to_i(&f(&ReflectionVector::zero(n)));
    let mut lin = vec![vec![0; n]; n];
    for k in 0..n {
        let img = to_i(&f(&ReflectionVector::alpha(n, k)));
        for i in 0..n {
            lin[i][k] = img[i] - c[i];
        }
    }
    (lin, c)
}

#[test]
fn worked_table() {
    // vertices 1..4 are indices 0..3; marked vertex 2 is index 1; rows in terms of (a, b, c, d)
    let g = path4();
    let s = |i: usize, h: &ReflectionVector| reflect(&g, i, h).unwrap();
    let sb = |i: usize, h: &ReflectionVector| reflect_marked(&g, 1, i, h).unwrap();
    let a = [1, 0, 0, 0];
    let b = [0, 1, 0, 0];
    let c = [0, 0, 1, 0];
    let d = [0, 0, 0, 1];
    let row = |v: [[i64; 4]; 4]| -> Vec<Vec<i64>> { v.iter().map(|r| r.to_vec()).collect() };
    let comb = |terms: &[([i64; 4], i64)]| -> [i64; 4] {
        let mut out = [0; 4];
        for (v, k) in terms {
            for i in 0..4 {
                out[i] += v[i] * k;
            }
        }
        out
    };
    let r1 = row([a, comb(&[(a, 1), (c, 1), (b, -1)]), c, d]);
    let r2 = row([a, comb(&[(a, 1), (c, 1), (b, -1)]), comb(&[(a, 1), (d, 1), (b, -1)]), d]);
    let r3 = row([a, comb(&[(a, 1), (d, 1), (c, -1)]), comb(&[(a, 1), (d, 1), (b, -1)]), d]);
    let s2 = |h: &ReflectionVector| s(1, h);
    let s32 = |h: &ReflectionVector| s(2, &s(1, h));
    let s232 = |h: &ReflectionVector| s(1, &s(2, &s(1, h)));
    assert_eq!(affine_map(4, s2), (r1.clone(), vec![0; 4]));
    assert_eq!(affine_map(4, s32), (r2.clone(), vec![0; 4]));
    assert_eq!(affine_map(4, s232), (r3.clone(), vec![0; 4]));
    let b2 = |h: &ReflectionVector| sb(1, h);
    let b32 = |h: &ReflectionVector| sb(2, &sb(1, h));
    let b232 = |h: &ReflectionVector| sb(1, &sb(2, &sb(1, h)));
    assert_eq!(affine_map(4, b2), (r1, vec![0, 1, 0, 0]));
    assert_eq!(affine_map(4, b32), (r2, vec![0, 1, 1, 0]));
    assert_eq!(affine_map(4, b232), (r3, vec![0, 1, 1, 0]));
}

#[test]
fn unknown_vertex_rejected() {
    let g = path4();
    assert!(matches!(reflect(&g, 4, &ReflectionVector::zero(4)), Err(TwistError::UnknownVertex(4, 4))));
    assert!(matches!(reflect(&g, 0, &ReflectionVector::zero(3)), Err(TwistError::Length(3, 4))));
    assert!(matches!(reflect_marked(&g, 9, 0, &ReflectionVector::zero(4)), Err(TwistError::UnknownVertex(9, 4))));
}

#[test]
fn exponent_matrix_small_cases() {
    let g = UGraph::path(2);
    let a = exponent_matrix(&g, &[0]).unwrap();
    let z = BigInt::from(0);
    let one = BigInt::from(1);
    assert_eq!(a.entries, vec![vec![one, z.clone()], vec![z.clone(), z]]);
    assert!(exponent_matrix(&path4(), &[]).unwrap().is_zero());
}

fn random_graph(n: usize, bits: &[u8]) -> Option<UGraph> {
    let mut g = UGraph::new(n);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            let m = bits[k % bits.len()] % 3;
            k += 1;
            if m > 0 {
                g.add_edge(u, v, m as u32).unwrap();
            }
        }
    }
    g.is_connected().then_some(g)
}

proptest! {
    #[test]
    fn reflections_are_involutions(xs in proptest::collection::vec(-50i64..50, 4), i in 0usize..4, b in 0usize..4) {
        let g = path4();
        let h = ReflectionVector::from_ints(&xs);
        prop_assert_eq!(reflect(&g, i, &reflect(&g, i, &h).unwrap()).unwrap(), h.clone());
        // s_i^(b) is an involution too: the added α_b is negated by the second reflection
        prop_assert_eq!(reflect_marked(&g, b, i, &reflect_marked(&g, b, i, &h).unwrap()).unwrap(), h);
    }

    #[test]
    fn marked_braid_relations(
        n in 2usize..7,
        bits in proptest::collection::vec(0u8..2, 21),
        xs in proptest::collection::vec(-30i64..30, 6),
        b in 0usize..6,
        i in 0usize..6,
        j in 0usize..6,
    ) {
        let mut g = UGraph::new(n);
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits[k] == 1 {
                    g.add_edge(u, v, 1).unwrap();
                }
                k += 1;
            }
        }
        let (b, i, j) = (b % n, i % n, j % n);
        prop_assume!(i != j);
        let m = if g.mult(i, j) == 1 { 3 } else { 2 };
        let h = ReflectionVector::from_ints(&xs[..n]);
        let word: Vec<usize> = (0..m).flat_map(|_| [j, i]).collect();
        prop_assert_eq!(reflect_sequence(&g, b, &word, &h).unwrap(), h);
    }

    #[test]
    fn orbit_of_zero_is_nonnegative(
        n in 1usize..7,
        bits in proptest::collection::vec(0u8..3, 15),
        seq in proptest::collection::vec(0usize..6, 0..21),
    ) {
        let Some(g) = random_graph(n, &bits) else { return Ok(()) };
        let seq: Vec<usize> = seq.into_iter().map(|i| i % n).collect();
        prop_assert!(exponent_matrix(&g, &seq).unwrap().is_nonnegative());
    }
}
