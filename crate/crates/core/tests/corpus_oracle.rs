mod common;

use std::collections::BTreeSet;

use common::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use termspace_core::corpus::{enumerate_commutative_monoids, make_family, FamilySpec};
use termspace_core::{is_isomorphic, validate_monoid, FiniteMonoid};

fn tables(ms: &[FiniteMonoid]) -> Vec<Vec<usize>> {
    ms.iter().map(|m| m.flat_table().to_vec()).collect()
}

#[test]
fn labeled_enumeration_matches_the_oracle() {
    for n in 1..=4 {
        let pruned = tables(&enumerate_commutative_monoids(n, false, false).unwrap());
        let oracle = brute_force_tables(n);
        assert_eq!(pruned, oracle, "order {n}");
        assert_eq!(oracle.len(), GOLDEN_LABELED_COUNTS[n - 1]);
    }
}

#[test]
fn isomorphism_classes_match_the_oracle() {
    for n in 1..=4 {
        let pruned = tables(&enumerate_commutative_monoids(n, true, false).unwrap());
        let oracle = brute_force_classes(n);
        assert_eq!(pruned, oracle, "order {n}");
        assert_eq!(oracle.len(), GOLDEN_ISO_COUNTS[n - 1]);
    }
}

#[test]
fn order_five_golden_count() {
    assert_eq!(
        enumerate_commutative_monoids(5, true, false).unwrap().len(),
        GOLDEN_ISO_COUNT_5
    );
}

#[test]
fn order_two_representatives() {
    let ms = enumerate_commutative_monoids(2, true, false).unwrap();
    // a^2 = 1 (the group) and a^2 = a (the semilattice)
    assert_eq!(tables(&ms), vec![vec![0, 1, 1, 0], vec![0, 1, 1, 1]]);
}

#[test]
fn every_generated_monoid_validates() {
    for n in 1..=5 {
        for m in enumerate_commutative_monoids(n, false, false).unwrap() {
            let rows: Vec<Vec<usize>> = m.rows().map(|r| r.to_vec()).collect();
            let again = validate_monoid(m.names().to_vec(), rows, m.name(m.identity())).unwrap();
            assert_eq!(again, m);
        }
    }
}

#[test]
fn dedup_is_idempotent_under_random_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in 1..=5 {
        let reps = enumerate_commutative_monoids(n, true, false).unwrap();
        let canonical: BTreeSet<Vec<usize>> = tables(&reps).into_iter().collect();
        for m in &reps {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let shuffled = m.permuted(&perm);
            let hits: Vec<&FiniteMonoid> = reps
                .iter()
                .filter(|r| is_isomorphic(r, &shuffled).is_some())
                .collect();
            assert_eq!(hits.len(), 1, "order {n}");
            assert!(canonical.contains(hits[0].flat_table()));
            if n <= 4 {
                assert_eq!(relabel(m.flat_table(), n, &perm), shuffled.flat_table());
            }
        }
    }
}

#[test]
fn isomorphism_witness_is_an_isomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for m in corpus(4) {
        let n = m.order();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let other = m.permuted(&perm);
        let w = is_isomorphic(&m, &other).expect("relabeled copies are isomorphic");
        for a in 0..n {
            for b in 0..n {
                assert_eq!(w[m.mul(a, b)], other.mul(w[a], w[b]));
            }
        }
        let inverse = is_isomorphic(&other, &m).unwrap();
        assert!((0..n).all(|a| inverse[w[a]] == a));
    }
}

#[test]
fn non_isomorphic_representatives_stay_apart() {
    let reps = enumerate_commutative_monoids(4, true, false).unwrap();
    for (k, a) in reps.iter().enumerate() {
        for b in &reps[k + 1..] {
            assert!(is_isomorphic(a, b).is_none());
        }
    }
}

#[test]
fn families_land_in_the_census() {
    let census = enumerate_commutative_monoids(4, true, false).unwrap();
    for expr in [
        "z_mult(4)",
        "cyclic(1,3)",
        "cyclic(3,1)",
        "cyclic(2,2)",
        "chain_semilattice(4)",
        "direct_product(boolean,boolean)",
        "direct_product(z_mult(2),cyclic(1,1))",
    ] {
        let m = make_family(&expr.parse::<FamilySpec>().unwrap()).unwrap();
        let hits = census
            .iter()
            .filter(|r| is_isomorphic(r, &m).is_some())
            .count();
        assert_eq!(hits, 1, "{expr}");
    }
}
