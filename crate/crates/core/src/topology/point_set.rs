use std::cmp::Ordering;
use std::fmt;

/// A subset of the points of a terminal space (at most 32 points).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PointSet {
    bits: u32,
    len: u8,
}

impl PointSet {
    pub fn empty(space_len: usize) -> Self {
        assert!(space_len <= 32);
        PointSet {
            bits: 0,
            len: space_len as u8,
        }
    }

    pub fn full(space_len: usize) -> Self {
        let mut s = Self::empty(space_len);
        s.bits = if space_len == 32 {
            u32::MAX
        } else {
            (1u32 << space_len) - 1
        };
        s
    }

    pub fn from_bits(space_len: usize, bits: u32) -> Self {
        let full = Self::full(space_len);
        PointSet {
            bits: bits & full.bits,
            len: full.len,
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(space_len: usize, indices: I) -> Self {
        let mut s = Self::empty(space_len);
        for k in indices {
            assert!(k < space_len, "point {k} out of range");
            s.bits |= 1 << k;
        }
        s
    }

    pub fn singleton(space_len: usize, k: usize) -> Self {
        Self::from_indices(space_len, [k])
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn space_len(&self) -> usize {
        self.len as usize
    }

    pub fn contains(&self, k: usize) -> bool {
        k < 32 && self.bits & (1 << k) != 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            (bits != 0).then(|| {
                let k = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                k
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: Self) -> Self {
        PointSet {
            bits: self.bits | other.bits,
            len: self.len,
        }
    }

    pub fn intersection(&self, other: Self) -> Self {
        PointSet {
            bits: self.bits & other.bits,
            len: self.len,
        }
    }

    pub fn difference(&self, other: Self) -> Self {
        PointSet {
            bits: self.bits & !other.bits,
            len: self.len,
        }
    }

    pub fn complement(&self) -> Self {
        Self::full(self.space_len()).difference(*self)
    }

    pub fn is_subset(&self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_proper_subset(&self, other: Self) -> bool {
        self.is_subset(other) && self.bits != other.bits
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
