//! Isomorphism search between finite commutative monoids.

use crate::monoid::FiniteMonoid;

/// Per-element data preserved by every isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementInvariant {
    pub is_identity: bool,
    pub is_unit: bool,
    pub is_idempotent: bool,
    /// Number of distinct powers `a, a^2, ...`.
    pub power_count: usize,
    /// Number of `b` with `a*b == a`.
    pub stabilizer: usize,
    /// Number of `b` with `b*b == a`.
    pub square_roots: usize,
}

pub fn element_invariants(m: &FiniteMonoid) -> Vec<ElementInvariant> {
    let n = m.order();
    (0..n)
        .map(|a| ElementInvariant {
            is_identity: a == m.identity(),
            is_unit: m.is_unit(a),
            is_idempotent: m.is_idempotent(a),
            power_count: m.powers(a).len(),
            stabilizer: (0..n).filter(|&b| m.mul(a, b) == a).count(),
            square_roots: (0..n).filter(|&b| m.mul(b, b) == a).count(),
        })
        .collect()
}

/// Sorted multiset of element invariants; equal for isomorphic monoids.
pub fn fingerprint(m: &FiniteMonoid) -> Vec<ElementInvariant> {
    let mut v = element_invariants(m);
    v.sort();
    v
}

/// Finds the lexicographically least bijection `perm` with
/// `perm[a*b] == perm[a]*perm[b]` and `perm[1] == 1'`, if any.
pub fn is_isomorphic(m1: &FiniteMonoid, m2: &FiniteMonoid) -> Option<Vec<usize>> {
    let n = m1.order();
    if n != m2.order() {
        return None;
    }
    let inv1 = element_invariants(m1);
    let inv2 = element_invariants(m2);
    let mut sorted1 = inv1.clone();
    let mut sorted2 = inv2.clone();
    sorted1.sort();
    sorted2.sort();
    if sorted1 != sorted2 {
        return None;
    }
    let mut search = Search {
        m1,
        m2,
        inv1,
        inv2,
        perm: vec![usize::MAX; n],
        used: vec![false; n],
    };
    search.extend(0).then_some(search.perm)
}

struct Search<'a> {
    m1: &'a FiniteMonoid,
    m2: &'a FiniteMonoid,
    inv1: Vec<ElementInvariant>,
    inv2: Vec<ElementInvariant>,
    perm: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, a: usize) -> bool {
        let n = self.m1.order();
        if a == n {
            return true;
        }
        for target in 0..n {
            if self.used[target] || self.inv1[a] != self.inv2[target] {
                continue;
            }
            self.perm[a] = target;
            self.used[target] = true;
            if self.consistent(a) && self.extend(a + 1) {
                return true;
            }
            self.used[target] = false;
            self.perm[a] = usize::MAX;
        }
        false
    }

    /// Checks every product among the assigned elements `0..=a`.
    fn consistent(&self, a: usize) -> bool {
        (0..=a).all(|b| {
            let ab = self.m1.mul(a, b);
            let image = self.m2.mul(self.perm[a], self.perm[b]);
            if ab <= a {
                self.perm[ab] == image
            } else {
                // ab is still unassigned, so its image must be free
                !self.used[image]
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::tests::z_mod;

    fn verify(m1: &FiniteMonoid, m2: &FiniteMonoid, perm: &[usize]) -> bool {
        let n = m1.order();
        perm[m1.identity()] == m2.identity()
            && (0..n).all(|a| (0..n).all(|b| perm[m1.mul(a, b)] == m2.mul(perm[a], perm[b])))
    }

    #[test]
    fn self_isomorphism_is_identity_permutation() {
        let z6 = z_mod(6);
        assert_eq!(is_isomorphic(&z6, &z6), Some((0..6).collect::<Vec<_>>()));
    }

    #[test]
    fn z2_multiplicative_matches_boolean() {
        let boolean = FiniteMonoid::from_table(
            vec!["z".into(), "1".into()],
            vec![vec![0, 0], vec![0, 1]],
            1,
        )
        .unwrap();
        assert_eq!(is_isomorphic(&z_mod(2), &boolean), Some(vec![0, 1]));
    }

    #[test]
    fn group_of_order_two_is_not_a_semilattice() {
        let group = FiniteMonoid::with_index_names(vec![vec![0, 1], vec![1, 0]], 0).unwrap();
        let semilattice = FiniteMonoid::with_index_names(vec![vec![0, 1], vec![1, 1]], 0).unwrap();
        assert_eq!(is_isomorphic(&group, &semilattice), None);
    }

    #[test]
    fn permuted_copies_are_found_and_witness_inverts() {
        let z6 = z_mod(6);
        let perm = [4, 2, 0, 5, 1, 3];
        let p = z6.permuted(&perm);
        let fwd = is_isomorphic(&z6, &p).unwrap();
        assert!(verify(&z6, &p, &fwd));
        let back = is_isomorphic(&p, &z6).unwrap();
        assert!(verify(&p, &z6, &back));
        for a in 0..6 {
            assert_eq!(back[fwd[a]], a);
        }
    }

    #[test]
    fn witness_is_lexicographically_least() {
        // the Klein group's automorphisms permute the three non-identity elements freely
        let klein = FiniteMonoid::with_index_names(
            vec![
                vec![0, 1, 2, 3],
                vec![1, 0, 3, 2],
                vec![2, 3, 0, 1],
                vec![3, 2, 1, 0],
            ],
            0,
        )
        .unwrap();
        let perm = [0, 3, 1, 2];
        let p = klein.permuted(&perm);
        let w = is_isomorphic(&klein, &p).unwrap();
        let mut all = Vec::new();
        for a in 1..4 {
            for b in 1..4 {
                for c in 1..4 {
                    let cand = vec![0, a, b, c];
                    if a != b && b != c && a != c && verify(&klein, &p, &cand) {
                        all.push(cand);
                    }
                }
            }
        }
        all.sort();
        assert_eq!(w, all[0]);
    }
}
