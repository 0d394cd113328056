//! Slow reference implementations used as oracles.
//!
//! Nothing here calls the library's enumeration, isomorphism or
//! classification code; monoids are only built through `FiniteMonoid`.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use itertools::Itertools;
use termspace_core::FiniteMonoid;

/// Commutative monoid counts up to isomorphism for orders 1..=4, as produced
/// by [`brute_force_classes`] and locked here.
pub const GOLDEN_ISO_COUNTS: [usize; 4] = [1, 2, 5, 19];
/// Labeled counts (identity at index 0) for orders 1..=4.
pub const GOLDEN_LABELED_COUNTS: [usize; 4] = [1, 2, 9, 94];
/// Order 5, locked from the pruned enumeration after it matched the oracle on 1..=4.
pub const GOLDEN_ISO_COUNT_5: usize = 78;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Every table with identity 0, found by counting through all assignments of
/// the non-identity cells and keeping the commutative, associative ones.
pub fn brute_force_tables(n: usize) -> Vec<Vec<usize>> {
    let free: Vec<(usize, usize)> = (1..n).cartesian_product(1..n).collect();
    let mut out = Vec::new();
    let mut digits = vec![0usize; free.len()];
    loop {
        let mut t = vec![0usize; n * n];
        for a in 0..n {
            t[a] = a;
            t[a * n] = a;
        }
        for (&(a, b), &v) in free.iter().zip(&digits) {
            t[a * n + b] = v;
        }
        if is_commutative(&t, n) && is_associative(&t, n) {
            out.push(t);
        }
        let mut k = 0;
        loop {
            if k == digits.len() {
                out.sort();
                return out;
            }
            digits[k] += 1;
            if digits[k] < n {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
    }
}

fn is_commutative(t: &[usize], n: usize) -> bool {
    (0..n).all(|a| (0..n).all(|b| t[a * n + b] == t[b * n + a]))
}

fn is_associative(t: &[usize], n: usize) -> bool {
    (0..n)
        .all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]])))
}

/// `new[p(a)][p(b)] = p(t[a][b])`.
pub fn relabel(t: &[usize], n: usize, p: &[usize]) -> Vec<usize> {
    let mut out = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            out[p[a] * n + p[b]] = p[t[a * n + b]];
        }
    }
    out
}

/// Least relabeling over every permutation fixing the identity.
pub fn canonical(t: &[usize], n: usize) -> Vec<usize> {
    (1..n)
        .permutations(n.saturating_sub(1))
        .map(|rest| {
            let p: Vec<usize> = std::iter::once(0).chain(rest).collect();
            relabel(t, n, &p)
        })
        .min()
        .unwrap_or_else(|| t.to_vec())
}

/// One canonical table per isomorphism class, sorted.
pub fn brute_force_classes(n: usize) -> Vec<Vec<usize>> {
    let classes: BTreeSet<Vec<usize>> = brute_force_tables(n)
        .iter()
        .map(|t| canonical(t, n))
        .collect();
    classes.into_iter().collect()
}

/// Nonempty subsets closed under multiplication by every element, as sorted member lists.
pub fn brute_force_ideals(m: &FiniteMonoid) -> Vec<Vec<usize>> {
    let n = m.order();
    let mut out: Vec<Vec<usize>> = (1u64..1 << n)
        .map(|mask| {
            (0..n)
                .filter(|x| mask >> x & 1 == 1)
                .collect::<Vec<usize>>()
        })
        .filter(|s| s.iter().all(|&x| (0..n).all(|y| s.contains(&m.mul(x, y)))))
        .collect();
    out.sort();
    out
}

fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

/// `I` proper and `A ∩ B ⊆ I ⟹ A ⊆ I or B ⊆ I` over every pair of ideals.
pub fn strongly_irreducible_by_definition(ideals: &[Vec<usize>], i: &[usize], n: usize) -> bool {
    if i.len() == n {
        return false;
    }
    ideals.iter().all(|a| {
        ideals.iter().all(|b| {
            let meet: Vec<usize> = a.iter().copied().filter(|x| b.contains(x)).collect();
            !subset(&meet, i) || subset(a, i) || subset(b, i)
        })
    })
}

/// `i*j ∈ P ⟹ i ∈ P or j ∈ P`, for proper `P`.
pub fn prime_by_definition(m: &FiniteMonoid, p: &[usize]) -> bool {
    let n = m.order();
    p.len() < n
        && (0..n)
            .all(|a| (0..n).all(|b| !p.contains(&m.mul(a, b)) || p.contains(&a) || p.contains(&b)))
}

/// The census corpus of all orders up to `max`, up to isomorphism.
pub fn corpus(max: usize) -> Vec<FiniteMonoid> {
    (1..=max)
        .flat_map(|n| termspace_core::enumerate_commutative_monoids(n, true, false).unwrap())
        .collect()
}
