//! Fixed-width subsets of monoid elements.

use std::cmp::Ordering;
use std::fmt;

/// Largest monoid order representable by [`ElementSet`].
pub const MAX_ORDER: usize = 64;

/// A subset of the elements `0..order` of one monoid, stored as a bitmask.
///
/// Ordering is by cardinality first, then lexicographically on the sorted
/// member lists. Every deterministic listing in the crate uses it.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElementSet {
    bits: u64,
    order: u8,
}

impl ElementSet {
    pub fn empty(order: usize) -> Self {
        assert!(order <= MAX_ORDER, "order {order} exceeds {MAX_ORDER}");
        ElementSet {
            bits: 0,
            order: order as u8,
        }
    }

    pub fn full(order: usize) -> Self {
        let mut s = Self::empty(order);
        s.bits = if order == MAX_ORDER {
            u64::MAX
        } else {
            (1u64 << order) - 1
        };
        s
    }

    pub fn singleton(order: usize, x: usize) -> Self {
        let mut s = Self::empty(order);
        s.insert(x);
        s
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(order: usize, members: I) -> Self {
        let mut s = Self::empty(order);
        for x in members {
            s.insert(x);
        }
        s
    }

    /// Builds a set directly from a bitmask; bits at or above `order` are rejected.
    pub fn from_bits(order: usize, bits: u64) -> Option<Self> {
        let full = Self::full(order);
        (bits & !full.bits == 0).then_some(ElementSet {
            bits,
            order: order as u8,
        })
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Order of the owning monoid.
    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn insert(&mut self, x: usize) {
        assert!(x < self.order(), "element {x} out of range");
        self.bits |= 1 << x;
    }

    pub fn remove(&mut self, x: usize) {
        if x < self.order() {
            self.bits &= !(1 << x);
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.order() && self.bits & (1 << x) != 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.order())
    }

    pub fn iter(&self) -> Members {
        Members { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &Self) -> Self {
        self.same_owner(other);
        ElementSet {
            bits: self.bits | other.bits,
            order: self.order,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.same_owner(other);
        ElementSet {
            bits: self.bits & other.bits,
            order: self.order,
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.same_owner(other);
        ElementSet {
            bits: self.bits & !other.bits,
            order: self.order,
        }
    }

    pub fn complement(&self) -> Self {
        Self::full(self.order()).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_proper_subset(&self, other: &Self) -> bool {
        self.is_subset(other) && self.bits != other.bits
    }

    /// Maps every member through `perm` (new index of old element `x` is `perm[x]`).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self::from_members(self.order(), self.iter().map(|x| perm[x]))
    }

    fn same_owner(&self, other: &Self) {
        debug_assert_eq!(self.order, other.order, "element sets of different monoids");
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
            .then_with(|| self.order.cmp(&other.order))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// Ascending iterator over the members of an [`ElementSet`].
pub struct Members {
    bits: u64,
}

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let x = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.bits.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_cardinality_then_lexicographic() {
        let a = ElementSet::from_members(6, [0, 3]);
        let b = ElementSet::from_members(6, [0, 2, 4]);
        let c = ElementSet::from_members(6, [0, 2]);
        let mut v = vec![b, a, c];
        v.sort();
        assert_eq!(v, vec![c, a, b]);
    }

    #[test]
    fn full_set_of_max_order() {
        let s = ElementSet::full(MAX_ORDER);
        assert_eq!(s.len(), 64);
        assert!(s.is_full());
        assert!(ElementSet::from_bits(3, 0b1000).is_none());
    }

    #[test]
    fn display_lists_members() {
        assert_eq!(ElementSet::from_members(4, [2, 0]).to_string(), "{0,2}");
        assert_eq!(ElementSet::empty(4).to_string(), "{}");
    }
}
