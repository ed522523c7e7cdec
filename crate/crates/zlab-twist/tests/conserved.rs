use zlab_dynkin::DynkinType::*;
use zlab_twist::*;

#[test]
fn even_affine_coxeter_numbers_conserve() {
    for (ty, m, g) in [(AffD(4), 2, 1), (AffA(3), 2, 2), (AffE6, 6, 1), (AffD(5), 6, 2), (AffD(6), 4, 1), (AffE7, 12, 1)] {
        let r = conserved_check(ty, 5, 42, DEFAULT_TOL).unwrap_or_else(|e| panic!("{ty}: {e}"));
        assert!(r.passed);
        assert_eq!((r.m, r.g), (m, g), "{ty}");
        assert_eq!(r.sign, 1);
        assert!(r.worst_residual < 1e-10);
    }
    let r = conserved_check(AffD(4), 1, 0, DEFAULT_TOL).unwrap();
    assert_eq!(r.additive, vec![1, 1, 2, 1, 1]);
}

#[test]
fn odd_affine_coxeter_number_breaks_the_double_shift() {
    // with m odd the exponent over a 2m shift alternates around g λ(i); it is not constant
    for ty in [AffA(1), AffA(5)] {
        match conserved_check(ty, 3, 42, DEFAULT_TOL) {
            Err(TwistError::Violated(r)) => assert!(r.worst_residual > 1e-2, "{ty}"),
            other => panic!("{ty}: {other:?}"),
        }
    }
}

#[test]
fn reports_are_reproducible() {
    let a = conserved_check(AffE6, 3, 9, DEFAULT_TOL).unwrap();
    let b = conserved_check(AffE6, 3, 9, DEFAULT_TOL).unwrap();
    assert_eq!(a, b);
}

#[test]
fn finite_type_rejected() {
    assert!(matches!(conserved_check(E6, 1, 0, DEFAULT_TOL), Err(TwistError::NotAffine(_))));
}
