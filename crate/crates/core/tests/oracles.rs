mod common;

use canonical_scrolls::semigroup::enumerate_genus;
use canonical_scrolls::{MonomialCurve, NumericalSemigroup};
use proptest::prelude::*;

const GENUS_COUNTS: [usize; 9] = [1, 1, 2, 4, 7, 12, 23, 39, 67];

#[test]
fn enumeration_matches_gap_subset_search() {
    for g in 0..=8u32 {
        let mut oracle = common::gap_sets(g);
        oracle.sort();
        let mut ours: Vec<Vec<u32>> = enumerate_genus(g).unwrap().map(|s| s.gaps().to_vec()).collect();
        assert!(ours.windows(2).all(|w| w[0] < w[1]), "genus {g}: not strictly sorted");
        ours.sort();
        assert_eq!(ours.len(), GENUS_COUNTS[g as usize], "genus {g}");
        assert_eq!(ours, oracle, "genus {g}");
    }
}

#[test]
fn kappa_star_matches_definition() {
    for g in 1..=8 {
        for gaps in common::gap_sets(g) {
            let s = NumericalSemigroup::from_gaps(&gaps).unwrap();
            assert_eq!(s.kappa_sets().k_star, common::kappa_star(&gaps), "{s}");
        }
    }
}

#[test]
fn one_point_canonical_exponents_are_kappa_star() {
    for g in 2..=8 {
        for gaps in common::gap_sets(g) {
            let s = NumericalSemigroup::from_gaps(&gaps).unwrap();
            let c = MonomialCurve::one_point(&s);
            assert_eq!(c.genus(), g);
            let mut expected = common::kappa_star(&gaps);
            expected.sort_unstable();
            let got = c.canonical_exponents().unwrap();
            assert_eq!(got, expected, "{s}");
        }
    }
}

#[test]
fn pencil_degrees_match_direct_count() {
    for g in 1..=6 {
        for gaps in common::gap_sets(g) {
            let s = NumericalSemigroup::from_gaps(&gaps).unwrap();
            let c = MonomialCurve::one_point(&s);
            let w = c.pencil_window();
            for n in (-w..=w).filter(|&n| n != 0) {
                let ours = c.pencil_degree(n).unwrap() as i64;
                assert_eq!(ours, common::pencil_degree_one_point(&gaps, n), "{s}, n = {n}");
            }
        }
    }
}

#[test]
fn gonality_is_minimum_over_a_wide_window() {
    for g in 1..=7 {
        for gaps in common::gap_sets(g) {
            let s = NumericalSemigroup::from_gaps(&gaps).unwrap();
            let c = MonomialCurve::one_point(&s);
            let wide = 3 * c.pencil_window();
            let best =
                (-wide..=wide).filter(|&n| n != 0).map(|n| common::pencil_degree_one_point(&gaps, n)).min().unwrap();
            assert_eq!(i64::from(c.gonality()), best, "{s}");
        }
    }
}

#[test]
fn eta_counts_canonical_module_excess() {
    for g in 1..=8 {
        for gaps in common::gap_sets(g) {
            let s = NumericalSemigroup::from_gaps(&gaps).unwrap();
            let kstar = common::kappa_star(&gaps);
            let eta = kstar.iter().filter(|&&a| !common::in_semigroup(&gaps, i64::from(a))).count() as u32;
            assert_eq!(s.eta(), eta, "{s}");
            assert_eq!(s.is_symmetric(), eta == 0, "{s}");
        }
    }
}

fn exponent_tuple() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::btree_set(1u32..18, 2..6).prop_map(|s| s.into_iter().collect::<Vec<u32>>()).prop_filter(
        "gcd 1, singular",
        |v| {
            let g = v.iter().fold(0, |a, &b| num_gcd(a, b));
            g == 1 && MonomialCurve::new(v).is_ok_and(|c| c.genus() > 0)
        },
    )
}

fn num_gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

proptest! {
    #[test]
    fn genus_is_sum_of_branch_gap_counts(v in exponent_tuple()) {
        let c = MonomialCurve::new(&v).unwrap();
        let top = *v.last().unwrap();
        let at_inf: Vec<u32> = v.iter().map(|&a| top - a).filter(|&a| a > 0).chain([top]).collect();
        let bound = 4 * (top as usize) * (top as usize) + 8;
        let g = common::gap_count(&v, bound) + common::gap_count(&at_inf, bound);
        prop_assert_eq!(c.genus(), g);
    }

    #[test]
    fn canonical_differentials_have_degree_2g_minus_2(v in exponent_tuple()) {
        let c = MonomialCurve::new(&v).unwrap();
        let g = i64::from(c.genus());
        let k = c.canonical_differential_exponents();
        prop_assert_eq!(k.len() as i64, g);
        let data = c.sheaf_degree_h0(&k).unwrap();
        prop_assert_eq!(data.degree, 2 * g - 2);
        prop_assert_eq!(data.h0 as i64, g);
    }

    #[test]
    fn genus_identity_holds(v in exponent_tuple()) {
        let c = MonomialCurve::new(&v).unwrap();
        let a = c.analyze().unwrap();
        prop_assert_eq!(a.genus, a.g_prime + a.eta + a.mu);
        if a.eta == 1 && a.non_gorenstein_points == 1 {
            prop_assert_eq!(a.mu, 1);
        }
    }
}
