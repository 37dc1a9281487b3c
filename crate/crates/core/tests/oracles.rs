mod common;

use common::{brute_partitions, brute_syt, character_oracle, linear_algebra_oracle};
use msw::partcomb::{enumerate_partitions, syt_count};

#[test]
fn elimination_matches_gauss_jordan() {
    assert_eq!(linear_algebra_oracle(150, 150, 0x5eed).unwrap(), 300);
}

#[test]
fn partitions_match_filtered_compositions() {
    for n in 0..=9 {
        let mut ours: Vec<Vec<usize>> = enumerate_partitions(n).iter().map(|p| p.parts().to_vec()).collect();
        ours.sort();
        assert_eq!(ours, brute_partitions(n), "n = {n}");
    }
}

#[test]
fn tableau_counts_match_peeling() {
    for n in 1..=8 {
        for l in enumerate_partitions(n) {
            assert_eq!(syt_count(&l), brute_syt(l.parts()), "{l}");
        }
    }
}

#[test]
fn characters_are_orthogonal() {
    character_oracle(6).unwrap();
}
