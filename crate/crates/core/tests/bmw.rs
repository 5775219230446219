use brauer_core::bmw::{
    build_bmw, default_specializations, enumerate_bmw_dimension, expected_bmw_dimension, hecke_quotient,
    verify_hecke_surjection, RootConvention,
};
use brauer_core::{Field, Rational, Ring};

#[test]
fn rank_four_dimension_at_every_sample() {
    for (s, a) in default_specializations() {
        let b = build_bmw(4, &s, &a).unwrap();
        assert_eq!(b.algebra.dim, 105);
        assert!(b.algebra.check_associativity(100, 7));
    }
}

#[test]
fn double_factorial() {
    assert_eq!([1, 2, 3, 4].map(expected_bmw_dimension), [1, 3, 15, 105]);
}

#[test]
fn literal_cubic_gives_hecke_dimensions() {
    let (s, a) = default_specializations()[1].clone();
    for (n, d) in [(2, 3), (3, 6), (4, 24)] {
        assert_eq!(enumerate_bmw_dimension(n, &s, &a, RootConvention::Literal).unwrap(), d);
    }
}

#[test]
fn delta_matches_kauffman_loop_value() {
    // closing a strand of e_1 gives 1 + (α - α^{-1}) / (s - s^{-1})
    for (s, a) in default_specializations() {
        let b = build_bmw(3, &s, &a).unwrap();
        let gap = &s - &s.inv().unwrap();
        let expected = &Rational::one() + &(&a - &a.inv().unwrap()).div(&gap).unwrap();
        assert_eq!(b.delta, Some(expected));
    }
}

#[test]
fn hecke_is_a_quotient() {
    for n in 2..=4 {
        let (s, a) = default_specializations()[0].clone();
        let b = build_bmw(n, &s, &a).unwrap();
        let h = hecke_quotient(n, &s).unwrap();
        assert!(verify_hecke_surjection(&b, &h, 50, 3).unwrap());
    }
}

#[test]
fn hecke_rank_five() {
    assert_eq!(hecke_quotient(5, &Rational::from_int(3)).unwrap().dim, 120);
}

mod monodromy {
    use brauer_core::bmw::{consistent_third_root, formal_unitarity_report, verify_cubic_all, SeriesRoot};
    use brauer_core::cells::{irreducible_labels, is_irr_prime};
    use brauer_core::{Rational, Ring};

    #[test]
    fn one_third_root_for_every_cell_module() {
        let m = brauer_core::default_m();
        for n in 2..=4 {
            let reports = verify_cubic_all(n, &m, 8).unwrap();
            assert!(reports.iter().all(|r| r.ok), "{reports:?}");
            let root = consistent_third_root(&reports).unwrap();
            assert_eq!(root, SeriesRoot { sign: 1, rate: &Rational::one() - &m });
            for r in reports.iter().filter(|r| !is_irr_prime(n, &r.lambda)) {
                assert!(r.quadratic);
            }
        }
    }

    #[test]
    fn gram_form_hypotheses() {
        let m = brauer_core::default_m();
        for n in 1..=4 {
            for l in irreducible_labels(n) {
                let r = formal_unitarity_report(n, &l, &m, 8).unwrap();
                assert!(r.ok, "{r:?}");
            }
        }
    }
}
