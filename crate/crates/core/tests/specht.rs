use brauer_core::linalg::Matrix;
use brauer_core::specht::{partitions, standard_tableaux, witt_index, Partition, SpechtRep};
use brauer_core::{Rational, Ring};
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    (1usize..=7).prop_flat_map(|n| {
        let all = partitions(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

proptest! {
    #[test]
    fn hook_length_counts_tableaux(lambda in partition()) {
        prop_assert_eq!(lambda.dimension(), standard_tableaux(&lambda).len() as u128);
        prop_assert_eq!(lambda.transpose().dimension(), lambda.dimension());
        prop_assert_eq!(lambda.transpose().transpose(), lambda);
    }

    #[test]
    fn adjacent_transpositions_satisfy_coxeter_relations(lambda in partition()) {
        let rep = SpechtRep::new(lambda.clone()).unwrap();
        let gens = rep.generators();
        let id = Matrix::<Rational>::identity(rep.dim());
        for (k, s) in gens.iter().enumerate() {
            prop_assert_eq!(s.mul(s), id.clone());
            if let Some(t) = gens.get(k + 1) {
                prop_assert_eq!(s.mul(t).mul(s), t.mul(s).mul(t));
            }
            for t in gens.iter().skip(k + 2) {
                prop_assert_eq!(s.mul(t), t.mul(s));
            }
        }
    }

    #[test]
    fn trace_of_transposition_is_the_content_sum(lambda in partition()) {
        // the class sum of transpositions acts by the sum of contents
        let rep = SpechtRep::new(lambda.clone()).unwrap();
        let n = rep.n();
        prop_assume!(n >= 2);
        let contents: i64 = (0..lambda.len())
            .flat_map(|r| (0..lambda.parts()[r]).map(move |c| c as i64 - r as i64))
            .sum();
        let pairs = (n * (n - 1) / 2) as i64;
        let tr = rep.transposition(0, 1).trace();
        prop_assert_eq!(tr.mul(&Rational::from_int(pairs)), Rational::from_int(contents * rep.dim() as i64));
    }

    #[test]
    fn branching_sums_dimensions(lambda in partition()) {
        let below: u128 = lambda.remove_box().iter().map(Partition::dimension).sum();
        prop_assert_eq!(below, lambda.dimension());
    }
}

#[test]
fn sum_of_squares_is_factorial() {
    for n in 1..=8 {
        let total: u128 = partitions(n).iter().map(|l| l.dimension().pow(2)).sum();
        assert_eq!(total, factorial(n));
    }
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (1..=10).map(|n| partitions(n).len()).collect();
    assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
}

#[test]
fn witt_index_of_small_forms() {
    let d = |v: &[i64]| {
        let n = v.len();
        let mut m = Matrix::zeros(n, n);
        for (i, &x) in v.iter().enumerate() {
            m.set(i, i, Rational::from_int(x));
        }
        m
    };
    assert_eq!(witt_index(&d(&[1, -1])).unwrap(), 1);
    assert_eq!(witt_index(&d(&[1, 1])).unwrap(), 0);
    assert_eq!(witt_index(&d(&[1, 1, -1, -1])).unwrap(), 2);
    // x^2 - 2y^2 is anisotropic over Q
    assert_eq!(witt_index(&d(&[1, -2])).unwrap(), 0);
    // x^2 + y^2 - 3z^2 is anisotropic over Q (no solutions mod 3 or 4)
    assert_eq!(witt_index(&d(&[1, 1, -3])).unwrap(), 0);
    assert_eq!(witt_index(&d(&[1, 1, -2])).unwrap(), 1);
}

#[test]
fn partition_parsing() {
    let p: Partition = "3,1,1".parse().unwrap();
    assert_eq!(p.parts(), &[3, 1, 1]);
    assert!(p.is_self_conjugate());
    assert!("3,4".parse::<Partition>().is_err());
}
