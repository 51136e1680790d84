//! Sanity checks of the brute-force embedding oracles, and the two readings
//! of "unique embedding" compared on small graphs.

mod common;

use common::{for_each_planar_rotation, strictly_unique, unique_up_to_automorphism};
use whitney_core::graph::{classify_unique_embeddability, Multigraph, Uniqueness};

const K4: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
const STAR4: [(usize, usize); 4] = [(0, 1), (0, 2), (0, 3), (0, 4)];
const BOND4: [(usize, usize); 4] = [(0, 1), (0, 1), (0, 1), (0, 1)];
const THETA: [(usize, usize); 3] = [(0, 1), (0, 1), (0, 1)];
const BOWTIE: [(usize, usize); 6] = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)];

fn planar_count(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut count = 0;
    for_each_planar_rotation(n, edges, &mut |_| {
        count += 1;
        true
    });
    count
}

fn tag(n: usize, edges: &[(usize, usize)]) -> Uniqueness {
    classify_unique_embeddability(&Multigraph::from_edges(n, edges)).unwrap().tag
}

#[test]
fn planar_rotation_counts() {
    assert_eq!(planar_count(4, &K4), 2);
    assert_eq!(planar_count(2, &THETA), 2);
    assert_eq!(planar_count(2, &BOND4), 6);
    assert_eq!(planar_count(5, &STAR4), 6);
    assert_eq!(planar_count(1, &[]), 1);
    assert_eq!(planar_count(1, &[(0, 0), (0, 0)]), 4);
}

#[test]
fn labelled_uniqueness() {
    assert!(strictly_unique(4, &K4));
    assert!(strictly_unique(2, &THETA));
    assert!(!strictly_unique(2, &BOND4));
    assert!(!strictly_unique(5, &STAR4));
    assert!(!strictly_unique(5, &BOWTIE));
}

/// Allowing graph automorphisms to relabel embeddings makes the bond with
/// four parallel edges and the star with four leaves uniquely embeddable,
/// while the classifier calls both not unique.
#[test]
fn automorphism_reading_disagrees_with_classifier() {
    assert!(unique_up_to_automorphism(2, &BOND4));
    assert!(unique_up_to_automorphism(5, &STAR4));
    assert!(unique_up_to_automorphism(5, &BOWTIE));
    assert_eq!(tag(2, &BOND4), Uniqueness::NotUnique);
    assert_eq!(tag(5, &STAR4), Uniqueness::NotUnique);
    assert_eq!(tag(5, &BOWTIE), Uniqueness::NotUnique);
    assert!(unique_up_to_automorphism(4, &K4));
}

#[test]
fn exhaustive_counts() {
    let sizes: Vec<usize> = common::connected_multigraphs(5).iter().map(Vec::len).collect();
    assert_eq!(sizes, [1, 2, 4, 11, 30, 95]);
}
