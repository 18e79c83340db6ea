mod support;

use gmspectral::exactla::{inertia, is_supersingular, is_weakly_singular, RatMatrix, SymRatMatrix};
use gmspectral::rational::{int, ratio};
use gmspectral::Rational;
use num_traits::Zero;
use support::*;

#[test]
fn oracle_sanity() {
    // x(x² - 3x + 1)
    let h = rows(&[&[1, -1, 0], &[-1, 2, 0], &[0, 0, 0]]);
    assert_eq!(char_poly(&h).0, vec![int(0), int(1), int(-3), int(1)]);
    assert_eq!(sturm_inertia(&h), (2, 1, 0));
    // (x - 1)² (x + 2)
    let d = rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -2]]);
    assert_eq!(sturm_inertia(&d), (2, 0, 1));
    assert_eq!(sturm_inertia(&rows(&[&[0, 0], &[0, 0]])), (0, 2, 0));
    assert_eq!(sturm_inertia(&rows(&[&[1, -1, 0], &[-1, 1, -1], &[0, -1, 1]])), (2, 0, 1));
}

#[test]
fn inertia_matches_sturm() {
    let mut r = rng(11);
    for _ in 0..300 {
        let m = random_symmetric(&mut r, 7);
        let i = inertia(&sym(m.clone()));
        assert_eq!((i.positive, i.zero, i.negative), sturm_inertia(&m), "{m:?}");
    }
}

#[test]
fn kernel_dimension_is_nullity() {
    let mut r = rng(12);
    for _ in 0..200 {
        let m = random_symmetric(&mut r, 6);
        let a = sym(m.clone());
        let k = a.kernel_basis();
        assert_eq!(k.len(), inertia(&a).zero);
        assert_eq!(k.len(), naive_kernel(&m).len());
        for x in &k {
            assert!(a.mul_vec(x).unwrap().iter().all(Zero::is_zero));
        }
    }
}

#[test]
fn congruence_invariance() {
    let mut r = rng(13);
    for _ in 0..150 {
        let m = random_symmetric(&mut r, 6);
        let p = random_invertible(&mut r, m.len());
        let a = sym(m);
        let b = a.congruent(&RatMatrix::from_rows(p).unwrap()).unwrap();
        assert_eq!(inertia(&a), inertia(&b));
    }
}

#[test]
fn quadratic_form_contract() {
    let mut r = rng(14);
    for _ in 0..100 {
        let m = random_symmetric(&mut r, 5);
        let a = sym(m.clone());
        let x: Vec<Rational> = (0..m.len()).map(|i| ratio(i as i64 - 2, 3)).collect();
        let ax = a.mul_vec(&x).unwrap();
        let dot = ax.iter().zip(&x).fold(Rational::zero(), |s, (p, q)| s + p * q);
        assert_eq!(a.quadratic_form(&x).unwrap(), dot);
    }
}

#[test]
fn weak_singularity_matches_brute_force() {
    let mut r = rng(15);
    let mut hits = 0;
    for _ in 0..400 {
        let m = random_symmetric(&mut r, 6);
        let got = is_weakly_singular(&sym(m.clone()), 24).unwrap();
        assert_eq!(got.is_some(), brute_weakly_singular(&m), "{m:?}");
        if let Some(x) = got {
            hits += 1;
            assert!(is_weak_witness(&m, &x));
        }
    }
    assert!(hits > 20, "generator too tame: {hits}");
}

#[test]
fn supersingular_chain() {
    let mut r = rng(16);
    for _ in 0..300 {
        let m = random_symmetric(&mut r, 6);
        let a = sym(m.clone());
        let ss = is_supersingular(&a);
        assert_eq!(ss.is_some(), naive_supersingular(&m));
        if let Some(x) = ss {
            assert!(x.iter().all(|c| !c.is_zero()));
            assert!(a.mul_vec(&x).unwrap().iter().all(Zero::is_zero));
            assert!(inertia(&a).is_singular());
            assert!(is_weakly_singular(&a, 24).unwrap().is_some());
        }
    }
}

#[test]
fn subset_cap_refuses() {
    let a = SymRatMatrix::identity(5);
    assert!(is_weakly_singular(&a, 4).is_err());
    assert_eq!(is_weakly_singular(&a, 5).unwrap(), None);
}
