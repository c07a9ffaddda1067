//! Enumerators, permutations and the integer Iverson determinants.

use proptest::prelude::*;

use prepieri::permcomb::{
    binary_compositions, cover_det, eta_tuple, iverson_geq_det, oplus, signed_match_sum,
    weak_compositions, xi_tuple, IntTuple, Permutation,
};

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

#[test]
fn composition_counts() {
    for n in 1..=5usize {
        for p in 0..=5i64 {
            let weak: Vec<_> = weak_compositions(n, p).collect();
            assert_eq!(
                weak.len() as u64,
                binomial(p as u64 + n as u64 - 1, n as u64 - 1)
            );
            assert!(weak.windows(2).all(|w| w[0] > w[1]), "decreasing order");
            assert!(weak
                .iter()
                .all(|b| b.abs() == p && b.entries().iter().all(|&x| x >= 0)));
            let bin: Vec<_> = binary_compositions(n, p).collect();
            let expected = if p as usize > n {
                0
            } else {
                binomial(n as u64, p as u64)
            };
            assert_eq!(bin.len() as u64, expected);
            assert!(bin.windows(2).all(|w| w[0] > w[1]));
            assert!(bin
                .iter()
                .all(|b| b.abs() == p && b.entries().iter().all(|&x| x == 0 || x == 1)));
        }
    }
    assert_eq!(weak_compositions(3, -1).count(), 0);
    assert_eq!(weak_compositions(0, 0).count(), 1);
    assert_eq!(binary_compositions(2, 3).count(), 0);
}

#[test]
fn permutation_counts_and_signs() {
    for n in 0..=5usize {
        let all: Vec<_> = Permutation::all(n).collect();
        assert_eq!(all.len(), (1..=n).product::<usize>());
        let total: i64 = all.iter().map(|s| s.sign()).sum();
        assert_eq!(total, if n <= 1 { 1 } else { 0 });
    }
}

#[test]
fn special_tuples() {
    assert_eq!(eta_tuple(3, 2).unwrap(), IntTuple::from([1, 2, 5]));
    assert_eq!(xi_tuple(3, 2).unwrap(), IntTuple::from([1, 3, 4]));
    assert_eq!(xi_tuple(3, 0).unwrap(), IntTuple::staircase(3));
    assert_eq!(xi_tuple(3, 3).unwrap(), IntTuple::from([2, 3, 4]));
    for n in 1..=5usize {
        for p in 0..=3i64 {
            let eta = eta_tuple(n, p).unwrap();
            assert_eq!(iverson_geq_det(&eta), 1);
            assert_eq!(signed_match_sum(&eta, &eta).unwrap(), 1);
        }
    }
}

proptest! {
    #[test]
    fn sign_is_multiplicative(a in perm(5), b in perm(5)) {
        prop_assert_eq!(a.compose(&b).sign(), a.sign() * b.sign());
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.inverse().sign(), a.sign());
    }

    #[test]
    fn right_action_is_an_action(v in prop::collection::vec(-5i64..5, 4), a in perm(4), b in perm(4)) {
        let t = IntTuple::new(v);
        prop_assert_eq!(t.act(&a).unwrap().act(&b).unwrap(), t.act(&a.compose(&b)).unwrap());
        prop_assert_eq!(t.act(&a).unwrap().abs(), t.abs());
    }

    #[test]
    fn oplus_sign(a in perm(3), b in perm(2)) {
        let c = oplus(&a, &b);
        prop_assert_eq!(c.sign(), a.sign() * b.sign());
        prop_assert!(c.stabilizes_prefix(3));
    }

    #[test]
    fn tuple_text_round_trip(v in prop::collection::vec(-9i64..9, 0..6)) {
        let t = IntTuple::new(v);
        prop_assert_eq!(t.to_string().parse::<IntTuple>().unwrap(), t);
    }

    #[test]
    fn permutation_text_round_trip(a in perm(5)) {
        prop_assert_eq!(a.to_string().parse::<Permutation>().unwrap(), a);
    }

    #[test]
    fn additivity(a in prop::collection::vec(-9i64..9, 5), b in prop::collection::vec(-9i64..9, 5)) {
        let (a, b) = (IntTuple::new(a), IntTuple::new(b));
        prop_assert_eq!((&a + &b).abs(), a.abs() + b.abs());
    }

    #[test]
    fn cover_det_matches_xi(v in prop::collection::vec(-1i64..6, 3), p in 0i64..=4) {
        let xi = xi_tuple(4, p).unwrap();
        let head = IntTuple::new(v);
        let nu = head.pushed(xi.abs() - head.abs());
        prop_assert_eq!(cover_det(&nu), signed_match_sum(&nu, &xi).unwrap());
    }
}
