use brauer_core::diagrams::{enumerate, partial_matchings, BrauerDiagram};
use proptest::prelude::*;

fn matching(n: usize) -> impl Strategy<Value = BrauerDiagram> {
    Just((0..2 * n).collect::<Vec<usize>>()).prop_shuffle().prop_map(move |order| {
        let mut partner = vec![0; 2 * n];
        for pair in order.chunks(2) {
            partner[pair[0]] = pair[1];
            partner[pair[1]] = pair[0];
        }
        BrauerDiagram::from_partner(partner).unwrap()
    })
}

fn triple() -> impl Strategy<Value = (BrauerDiagram, BrauerDiagram, BrauerDiagram)> {
    (1usize..=7).prop_flat_map(|n| (matching(n), matching(n), matching(n)))
}

proptest! {
    #[test]
    fn composition_is_associative_with_loops((a, b, c) in triple()) {
        let (ab, l1) = a.compose(&b).unwrap();
        let (ab_c, l2) = ab.compose(&c).unwrap();
        let (bc, l3) = b.compose(&c).unwrap();
        let (a_bc, l4) = a.compose(&bc).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert_eq!(l1 + l2, l3 + l4);
    }

    #[test]
    fn tau_is_an_involutive_antihomomorphism((a, b, _) in triple()) {
        prop_assert_eq!(a.tau().tau(), a.clone());
        let (ab, loops) = a.compose(&b).unwrap();
        let (tb_ta, loops_t) = b.tau().compose(&a.tau()).unwrap();
        prop_assert_eq!(ab.tau(), tb_ta);
        prop_assert_eq!(loops, loops_t);
    }

    #[test]
    fn identity_is_a_two_sided_unit((a, _, _) in triple()) {
        let id = BrauerDiagram::identity(a.n());
        prop_assert_eq!(id.compose(&a).unwrap(), (a.clone(), 0));
        prop_assert_eq!(a.compose(&id).unwrap(), (a.clone(), 0));
    }

    #[test]
    fn display_round_trips((a, _, _) in triple()) {
        let back: BrauerDiagram = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn through_strands_match_parity_and_shrink((a, b, _) in triple()) {
        let n = a.n();
        prop_assert_eq!((n - a.through_strands()) % 2, 0);
        let (ab, _) = a.compose(&b).unwrap();
        prop_assert!(ab.through_strands() <= a.through_strands().min(b.through_strands()));
        prop_assert_eq!(a.as_permutation().is_some(), a.through_strands() == n);
    }

    #[test]
    fn closure_loops_are_conjugation_invariant((a, w, _) in triple()) {
        // conjugating by an invertible diagram keeps the trace closure
        if let Some(perm) = w.as_permutation() {
            let inv_perm = {
                let mut inv = vec![0; perm.len()];
                for (i, &p) in perm.iter().enumerate() {
                    inv[p] = i;
                }
                inv
            };
            let w = BrauerDiagram::from_permutation(&perm).unwrap();
            let w_inv = BrauerDiagram::from_permutation(&inv_perm).unwrap();
            prop_assert_eq!(w.compose(&w_inv).unwrap().0, BrauerDiagram::identity(a.n()));
            let (wa, _) = w.compose(&a).unwrap();
            let (conj, _) = wa.compose(&w_inv).unwrap();
            prop_assert_eq!(conj.closure_loops(), a.closure_loops());
        }
    }
}

#[test]
fn identity_closes_to_n_loops() {
    for n in 1..=6 {
        assert_eq!(BrauerDiagram::identity(n).closure_loops(), n);
    }
}

#[test]
fn enumeration_is_duplicate_free() {
    for n in 1..=5 {
        let all = enumerate(n).unwrap();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
    }
}

#[test]
fn partial_matching_counts() {
    // n! / (2^k k! (n-2k)!)
    for (n, k, count) in [(4, 1, 6), (4, 2, 3), (5, 2, 15), (6, 3, 15), (6, 1, 15), (3, 0, 1)] {
        assert_eq!(partial_matchings(n, k).len(), count, "n={n} k={k}");
    }
}

#[test]
fn loops_of_p_squared() {
    let p = BrauerDiagram::p(3, 0, 1).unwrap();
    assert_eq!(p.compose(&p).unwrap(), (p.clone(), 1));
    let s = BrauerDiagram::s(3, 0, 1).unwrap();
    assert_eq!(s.compose(&p).unwrap(), (p.clone(), 0));
}

#[test]
fn malformed_input_is_rejected() {
    assert!("(1,2)(1',1')".parse::<BrauerDiagram>().is_err());
    assert!(BrauerDiagram::from_partner(vec![1, 0, 2, 3]).is_err());
    assert!(BrauerDiagram::identity(2).compose(&BrauerDiagram::identity(3)).is_err());
}
