use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zlab_core::{bigraph_of, Bigraph, Quiver, UGraph};
use zlab_dynamics::LaurentPolynomial;
use zlab_dynkin::DynkinType;
use zlab_twist::*;

/// Arrows from color 0 to color 1.
fn white_to_black(g: &UGraph) -> Quiver {
    let c = g.two_coloring().unwrap();
    let arrows: Vec<_> = g.edges().map(|(u, v, m)| if c[u] == 0 { (u, v, m) } else { (v, u, m) }).collect();
    Quiver::new(g.n(), &arrows, Some(c)).unwrap()
}

fn triangle() -> Quiver {
    Quiver::new(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)], None).unwrap()
}

fn random_seq(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> Vec<usize> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..n)).collect()
}

#[test]
fn triangle_twist_is_del_pezzo_3() {
    let dp3 = twist_quiver(&triangle());
    // primes 0..2, double primes 3..5, as drawn
    let mut expect = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 5), (5, 1), (1, 3), (3, 2), (2, 4), (4, 0)];
    expect.sort();
    let got: Vec<(usize, usize)> = dp3.arrows().map(|(u, v, m)| {
        assert_eq!(m, 1);
        (u, v)
    }).collect();
    assert_eq!(got, expect);
}

#[test]
fn twist_quiver_matches_bigraph_twist() {
    let a1hat = UGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
    for g in [UGraph::path(2), UGraph::path(4), UGraph::star(4), UGraph::cycle(6), a1hat, DynkinType::AffE6.diagram()] {
        let q = white_to_black(&g);
        let t = twist_quiver(&q);
        assert_eq!(t.arrow_count(), 4 * q.arrow_count());
        assert_eq!(bigraph_of(&t).unwrap(), Bigraph::twist(&g).unwrap());
    }
}

#[test]
fn tree_orientations_give_isomorphic_twists() {
    let g = DynkinType::AffD(6).diagram();
    let c = g.two_coloring().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let arrows: Vec<_> = g.edges().map(|(u, v, m)| if rng.gen_bool(0.5) { (u, v, m) } else { (v, u, m) }).collect();
        let q = Quiver::new(g.n(), &arrows, Some(c.clone())).unwrap();
        let b = bigraph_of(&twist_quiver(&q)).unwrap();
        assert!(b.is_recurrent());
        assert!(b.is_isomorphic(&Bigraph::twist(&g).unwrap()));
    }
}

#[test]
fn a2_one_step() {
    let q = Quiver::new(2, &[(0, 1, 1)], None).unwrap();
    let run = tau_evolve_symbolic(&q, &[0]).unwrap();
    // (x_2′ + x_2″) / x_1″ with x_1′, x_2′, x_1″, x_2″ = vars 0, 1, 2, 3
    let num = &LaurentPolynomial::var(4, 1) + &LaurentPolynomial::var(4, 3);
    let expect = &num * &LaurentPolynomial::monomial(4, vec![0, 0, -1, 0], 1);
    assert_eq!(run.values[0], expect);
    assert_eq!(run.quiver, twist_quiver(&q));
    let xs = x_variables(&q);
    assert_eq!(&LaurentPolynomial::var(4, 0) * &xs[0], expect);
    assert!(factorization_check(&q, &[0]).unwrap());
}

#[test]
fn empty_sequence_is_seed() {
    let q = triangle();
    let run = tau_evolve_symbolic(&q, &[]).unwrap();
    for (v, p) in run.values.iter().enumerate() {
        assert_eq!(*p, LaurentPolynomial::var(6, v));
    }
    assert!(factorization_check(&q, &[]).unwrap());
}

#[test]
fn factorization_on_small_quivers() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..40 {
        let n = rng.gen_range(2..=5);
        let mut arrows = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                match rng.gen_range(0..4) {
                    1 => arrows.push((u, v, 1)),
                    2 => arrows.push((v, u, 1)),
                    3 => arrows.push((u, v, 2)),
                    _ => {}
                }
            }
        }
        let q = Quiver::new(n, &arrows, None).unwrap();
        let seq = random_seq(&mut rng, n, 6);
        assert!(factorization_check(&q, &seq).unwrap(), "{arrows:?} {seq:?}");
    }
}

#[test]
fn same_color_tau_commute() {
    let g = DynkinType::AffD(4).diagram();
    let q = white_to_black(&g);
    let c = g.two_coloring().unwrap();
    let whites: Vec<usize> = (0..g.n()).filter(|&v| c[v] == 0).collect();
    let blacks: Vec<usize> = (0..g.n()).filter(|&v| c[v] == 1).collect();
    let forward: Vec<usize> = blacks.iter().chain(&whites).chain(&blacks).copied().collect();
    let reversed: Vec<usize> = blacks.iter().rev().chain(whites.iter().rev()).chain(blacks.iter().rev()).copied().collect();
    assert_eq!(tau_evolve_symbolic(&q, &forward).unwrap().values, tau_evolve_symbolic(&q, &reversed).unwrap().values);
    assert_eq!(exponent_matrix(&g, &forward).unwrap(), exponent_matrix(&g, &reversed).unwrap());
}

#[test]
fn devron_cases() {
    let a1hat = UGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
    for g in [UGraph::path(3), UGraph::star(4), a1hat, DynkinType::AffE6.diagram(), UGraph::star(5), UGraph::cycle(6)] {
        let q = white_to_black(&g);
        assert!(devron_check(&q).unwrap());
        let blacks = g.two_coloring().unwrap().iter().filter(|&&c| c == 1).count();
        assert_eq!(devron_exponents(&q).unwrap().len(), blacks);
    }
    let odd = Quiver::new(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)], None).unwrap();
    assert!(matches!(devron_check(&odd), Err(TwistError::NotBipartite)));
}

#[test]
fn devron_singularity_propagates() {
    // X_v = 0 at a backward singularity; the τ-value at v then vanishes
    let g = UGraph::path(3);
    let q = white_to_black(&g);
    let run = tau_evolve_symbolic(&q, &devron_sequence(&q).unwrap()).unwrap();
    let xs = x_variables(&q);
    for (v, _) in devron_exponents(&q).unwrap() {
        let quotient = run.values[v].div_exact(&xs[v]).expect("X_v divides the value at v");
        assert!(quotient.div_exact(&xs[v]).is_none());
    }
}
