//! Bit-vector fingerprints of cones taken against a fixed table.

use num_bigint::BigUint;
use num_traits::Zero;

/// Membership fingerprint over a cone table: bit i records containment in
/// table member i, and the whole vector is read as one arbitrary-precision
/// integer so fingerprints can be compared, sorted, and binary-searched.
///
/// The same bits serve two equivalent readings.  For a cone λ produced by
/// the table (an intersection of members), bit i says λ ⊆ table[i]; for the
/// defining point w of such a cone, bit i says w ∈ table[i].  The two agree
/// because λ is exactly the intersection of the members containing w.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConeHash {
    len: usize,
    value: BigUint,
}

impl ConeHash {
    pub fn empty(len: usize) -> ConeHash {
        ConeHash {
            len,
            value: BigUint::zero(),
        }
    }

    pub fn from_indices(indices: &[usize], len: usize) -> ConeHash {
        let mut h = ConeHash::empty(len);
        for &i in indices {
            h.set_bit(i);
        }
        h
    }

    pub fn set_bit(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range for table of {}", self.len);
        self.value.set_bit(i as u64, true);
    }

    pub fn bit(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range for table of {}", self.len);
        self.value.bit(i as u64)
    }

    /// Number of table members, i.e. the fixed width of the fingerprint.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn count_ones(&self) -> usize {
        self.value.count_ones() as usize
    }

    /// Indices of the set bits, ascending.
    pub fn indices(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.value.bit(i as u64)).collect()
    }

    /// True when every set bit of `self` is also set in `other`.  In cone
    /// terms: the cone fingerprinted by `other` is a face of (or equal to)
    /// the one fingerprinted by `self` exactly when the reverse subset holds,
    /// so this is the test that a facet belongs to a candidate neighbor.
    pub fn is_subset_of(&self, other: &ConeHash) -> bool {
        assert_eq!(self.len, other.len, "fingerprints over different tables");
        &self.value & &other.value == self.value
    }

    pub fn to_decimal(&self) -> String {
        self.value.to_str_radix(10)
    }

    pub fn from_decimal(s: &str, len: usize) -> Option<ConeHash> {
        let value = BigUint::parse_bytes(s.as_bytes(), 10)?;
        if value.bits() > len as u64 {
            return None;
        }
        Some(ConeHash { len, value })
    }
}

/// Relabel the bits by an index permutation of the table: bit i of the input
/// becomes bit `perm[i]` of the output.  With `perm` describing how a group
/// element permutes the table, this is the group action on fingerprints.
pub fn act_on_hash(perm: &[usize], h: &ConeHash) -> ConeHash {
    assert_eq!(perm.len(), h.len, "permutation length differs from table size");
    let mut out = ConeHash::empty(h.len);
    for i in 0..h.len {
        if h.bit(i) {
            out.set_bit(perm[i]);
        }
    }
    out
}
