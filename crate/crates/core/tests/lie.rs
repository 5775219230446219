use brauer_core::lie::{
    certified_closure, classify, exceptional_sets, lie_closure, verify_dimension_arithmetic, Affine, LieType,
};
use brauer_core::linalg::Matrix;
use brauer_core::{Rational, Ring};
use proptest::prelude::*;

fn int_matrix(rows: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from_int(x)).collect()).collect()).unwrap()
}

fn elementary(n: usize, i: usize, j: usize) -> Matrix<Rational> {
    let mut m = Matrix::zeros(n, n);
    m.set(i, j, Rational::one());
    m
}

fn small_matrix(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(-2i64..=2, n * n)
        .prop_map(move |v| Matrix::from_vec(n, n, v.into_iter().map(Rational::from_int).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closure_is_closed_and_minimal(a in small_matrix(3), b in small_matrix(3)) {
        let sub = lie_closure(&[a.clone(), b.clone()]).unwrap();
        prop_assert!(sub.is_bracket_closed());
        prop_assert!(sub.contains(&a) && sub.contains(&b));
        prop_assert!(sub.contains(&a.bracket(&b).bracket(&a)));
        // the derived algebra is traceless
        prop_assert!(lie_closure(&[a.bracket(&b)]).unwrap().is_traceless());
    }

    #[test]
    fn certificate_agrees_with_exact_closure(a in small_matrix(3), b in small_matrix(3)) {
        let exact = lie_closure(&[a.clone(), b.clone()]).unwrap();
        let cert = certified_closure(&[a, b]).unwrap();
        prop_assert_eq!(cert.dim, exact.dim());
        prop_assert_eq!(cert.traceless, exact.is_traceless());
    }
}

#[test]
fn classical_algebras_are_recognised() {
    // sl2 preserves the symplectic form on the plane
    let sl2 = lie_closure(&[elementary(2, 0, 1), elementary(2, 1, 0)]).unwrap();
    assert_eq!(classify(&sl2).unwrap().kind, LieType::Sp(2));
    let sl3 = lie_closure(&[elementary(3, 0, 1), elementary(3, 1, 2), elementary(3, 2, 0)]).unwrap();
    assert_eq!(classify(&sl3).unwrap().kind, LieType::Sl(3));

    let rot = |i, j| elementary(3, i, j).sub(&elementary(3, j, i));
    let so3 = lie_closure(&[rot(0, 1), rot(1, 2)]).unwrap();
    assert_eq!(so3.dim(), 3);
    assert_eq!(classify(&so3).unwrap().kind, LieType::So(3));

    // Hamiltonian matrices [[A, B], [C, -A^T]] with B, C symmetric
    let x = int_matrix(&[&[0, 0, 1, 0], &[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
    let y = int_matrix(&[&[0, 0, 0, 0], &[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 0]]);
    let z = int_matrix(&[&[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, -1, 0]]);
    let w = elementary(4, 1, 3);
    let sp4 = lie_closure(&[x, y, z, w]).unwrap();
    assert_eq!(sp4.dim(), 10);
    assert_eq!(classify(&sp4).unwrap().kind, LieType::Sp(4));

    let gl = certified_closure(&[elementary(2, 0, 1), elementary(2, 1, 0), elementary(2, 0, 0)]).unwrap();
    assert_eq!(gl.dim, 4);
    assert!(!gl.traceless);
    assert_eq!(gl.center_dim, 1);
}

#[test]
fn exceptional_set_s() {
    let x = [Affine::new(1, 0), Affine::new(-1, 0), Affine::new(-1, 1)];
    let sets = exceptional_sets(&x);
    let s: Vec<Rational> = [-2, 0, 1, 2, 4].into_iter().map(Rational::from_int).collect();
    assert_eq!(sets.s.into_iter().collect::<Vec<_>>(), s);
    assert!(sets.s_star.contains(&Rational::from_int(4)));
}

#[test]
fn dimension_arithmetic_headline() {
    let r = verify_dimension_arithmetic(5..=12).unwrap();
    let headline_failures: Vec<_> = r.failures().filter(|c| c.role == brauer_core::lie::CheckRole::Headline).collect();
    assert!(headline_failures.is_empty(), "{headline_failures:?}");
}
