use brauer_core::brauer::{gram_matrix, gram_positivity, BrauerAlgebra};
use brauer_core::cells::{bratteli, cell_dimension, irreducible_labels, is_irr_prime, CellRep};
use brauer_core::diagrams::enumerate;
use brauer_core::lie::{certified_closure, lie_closure, Certificate};
use brauer_core::linalg::ldlt_positive_definite;
use brauer_core::{Rational, RationalFunction, Ring};
use proptest::prelude::*;

fn generic_m() -> impl Strategy<Value = Rational> {
    // integers below n - 1 make Br_n non-semisimple, so stay above them
    (7i64..200, 1i64..5).prop_map(|(p, q)| Rational::new(p, q).unwrap()).prop_filter("m > 5", |m| m > &Rational::from_int(5))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn cell_modules_are_representations(m0 in generic_m(), n in 2usize..=4) {
        for lambda in irreducible_labels(n) {
            let rep = CellRep::new(n, lambda, m0.clone()).unwrap();
            prop_assert!(rep.verify_relations().is_ok());
        }
    }

    #[test]
    fn diagram_matrices_multiply_like_diagrams(m0 in generic_m(), i in 0usize..15, j in 0usize..15) {
        let all = enumerate(3).unwrap();
        let (a, b) = (&all[i], &all[j]);
        let (ab, loops) = a.compose(b).unwrap();
        for lambda in irreducible_labels(3) {
            let rep = CellRep::new(3, lambda, m0.clone()).unwrap();
            let lhs = rep.diagram_matrix(a).mul(&rep.diagram_matrix(b));
            let rhs = rep.diagram_matrix(&ab).scale(&m0.pow(loops as u32));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn specialized_trace_matches_generic(m0 in generic_m(), i in 0usize..105) {
        let d = enumerate(4).unwrap()[i].clone();
        let generic = BrauerAlgebra::new(4, RationalFunction::m()).diagram_trace(&d).unwrap();
        let special = BrauerAlgebra::new(4, m0.clone()).diagram_trace(&d).unwrap();
        prop_assert_eq!(generic.eval(&m0).unwrap(), special);
    }
}

#[test]
fn gram_matrix_degenerates_at_small_integers() {
    // the trace divides by m^n, so m = 0 is a pole rather than a degeneration
    assert!(gram_positivity(3, &Rational::zero()).is_err());
    for m0 in [1, -2] {
        let r = gram_positivity(3, &Rational::from_int(m0)).unwrap();
        assert!(!r.positive_definite, "m = {m0}");
    }
    let r = gram_positivity(4, &Rational::new(13, 2).unwrap()).unwrap();
    assert!(r.positive_definite);
    assert_eq!(r.dim, 105);
}

#[test]
fn blocked_and_dense_factorizations_agree() {
    for n in 1..=4 {
        for m0 in ["13/2", "1", "-2", "2", "3", "1/2", "-7/3"] {
            let m0: Rational = m0.parse().unwrap();
            let g = gram_matrix(n, &m0).unwrap();
            let dense = ldlt_positive_definite(&g).unwrap();
            let blocked = gram_positivity(n, &m0).unwrap();
            assert_eq!(dense.positive_definite, blocked.positive_definite, "n={n} m={m0}");
            if let (Some(i), Some(x)) = (blocked.failing_pivot_index, blocked.witness) {
                let gx = g.mul_vec(&x);
                let q = x.iter().zip(&gx).fold(Rational::zero(), |acc, (a, b)| acc.add(&a.mul(b)));
                assert_eq!(q, blocked.pivots[i], "n={n} m={m0}");
                assert!(!q.is_positive());
            } else {
                assert_eq!(blocked.pivots.len(), g.rows());
            }
        }
    }
}

#[test]
fn ldlt_witness_is_a_certificate() {
    let g = gram_matrix(3, &Rational::from_int(1)).unwrap();
    let r = ldlt_positive_definite(&g).unwrap();
    let (i, x) = (r.failing_pivot_index.unwrap(), r.witness.unwrap());
    let gx = g.mul_vec(&x);
    let q = x.iter().zip(&gx).fold(Rational::zero(), |acc, (a, b)| acc.add(&a.mul(b)));
    assert_eq!(q, r.pivots[i]);
    assert!(!q.is_positive());
}

#[test]
fn reflection_cell_of_rank_three() {
    let rep = CellRep::new(3, "1".parse().unwrap(), Rational::new(13, 2).unwrap()).unwrap();
    assert_eq!(rep.dim(), 3);
    assert_eq!(rep.spectrum_t().unwrap(), vec![Rational::new(-11, 2).unwrap(), Rational::from_int(-1), Rational::one()]);
    let g = rep.gram_cell_form().unwrap();
    assert!(ldlt_positive_definite(&g).unwrap().positive_definite);
}

#[test]
fn bratteli_layers() {
    let b = bratteli(4).unwrap();
    let sizes: Vec<usize> = b.layers.iter().map(Vec::len).collect();
    assert_eq!(sizes, [1, 1, 3, 4, 8]);
    for (n, layer) in b.layers.iter().enumerate() {
        let total: u128 = layer.iter().map(|(_, d)| d * d).sum();
        assert_eq!(total, (1..2 * n as u128).step_by(2).product::<u128>().max(1));
    }
}

#[test]
fn irr_prime_labels_are_the_smaller_partitions() {
    for n in 2..=5 {
        for l in irreducible_labels(n) {
            assert_eq!(is_irr_prime(n, &l), l.size() < n);
            assert!(cell_dimension(n, &l).unwrap() >= 1);
        }
    }
}

#[test]
fn modular_and_exact_closures_agree_on_rank_four() {
    let m0 = Rational::new(13, 2).unwrap();
    for l in irreducible_labels(4).into_iter().filter(|l| l.size() < 4) {
        let rep = CellRep::new(4, l.clone(), m0.clone()).unwrap();
        let gens = rep.t_prime_all();
        let exact = lie_closure(&gens).unwrap();
        let cert = certified_closure(&gens).unwrap();
        assert_eq!(exact.dim(), cert.dim, "{l}");
        if cert.certificate == Certificate::Modular {
            assert_eq!(cert.dim, rep.dim() * rep.dim() - 1);
        }
    }
}
