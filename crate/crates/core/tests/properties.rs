//! Randomized checks beyond the exhaustive range.

use dualgraded::growth::{
    build_growth_diagram, growth_insert_composition, growth_insert_tree, CompositionPair, TreePair,
};
use dualgraded::ribbon::{hypoplactic_insert, shadow_lines};
use dualgraded::trees::bst_insert;
use dualgraded::{parse_permutation, Permutation, Reading};
use proptest::prelude::*;

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_n)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn growth_matches_insertion(p in permutation(12)) {
        prop_assert_eq!(growth_insert_composition(&p).unwrap(), hypoplactic_insert(&p));
        prop_assert_eq!(growth_insert_tree(&p).unwrap(), bst_insert(&p, Reading::LeftToRight));
    }

    #[test]
    fn grids_are_well_formed(p in permutation(10)) {
        build_growth_diagram::<CompositionPair>(&p).unwrap().validate::<CompositionPair>().unwrap();
        build_growth_diagram::<TreePair>(&p).unwrap().validate::<TreePair>().unwrap();
    }

    #[test]
    fn shadow_lines_match_insertion(p in permutation(14)) {
        prop_assert_eq!(shadow_lines(&p), hypoplactic_insert(&p));
    }

    #[test]
    fn q_reads_the_inverse(p in permutation(14)) {
        let (big_p, big_q) = hypoplactic_insert(&p);
        prop_assert_eq!(big_q.reading_word(), p.inverse().word().to_vec());
        prop_assert_eq!(big_p.reading_word(), Permutation::identity(p.len()).word().to_vec());
        prop_assert_eq!(big_p.shape(), p.recoils_composition());
    }

    #[test]
    fn bst_insertion_trees(p in permutation(14)) {
        let (left, rec) = bst_insert(&p, Reading::LeftToRight);
        prop_assert!(left.is_binary_search_tree() && rec.is_increasing());
        prop_assert_eq!(left.shape(), rec.shape());
        let (right, rec) = bst_insert(&p, Reading::RightToLeft);
        prop_assert!(right.is_binary_search_tree() && rec.is_decreasing());
        // sylvester insertion of p is ordinary insertion of its reverse
        prop_assert_eq!(right, bst_insert(&p.reversed(), Reading::LeftToRight).0);
    }

    #[test]
    fn display_round_trips(p in permutation(20)) {
        prop_assert_eq!(parse_permutation(&p.to_string()).unwrap(), p);
    }
}
