/// Subset of variable indices {0, .., len-1}, stored as a fixed-width
/// bitset. Comparison is by the 2-adic value of the bit pattern, which is
/// the canonical order used to pick orbit representatives.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceIndexSet {
    bits: u64,
    len: usize,
}

impl FaceIndexSet {
    pub fn empty(len: usize) -> Self {
        assert!(len <= 64, "face index sets support at most 64 variables");
        FaceIndexSet { bits: 0, len }
    }

    pub fn full(len: usize) -> Self {
        assert!(len <= 64);
        let bits = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        FaceIndexSet { bits, len }
    }

    pub fn from_indices(indices: &[usize], len: usize) -> Self {
        let mut s = FaceIndexSet::empty(len);
        for &i in indices {
            s.insert(i);
        }
        s
    }

    pub fn from_bits(bits: u64, len: usize) -> Self {
        assert!(len <= 64);
        if len < 64 {
            assert_eq!(bits >> len, 0, "bits outside the ambient range");
        }
        FaceIndexSet { bits, len }
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len);
        self.bits |= 1 << i;
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.bits & (1 << i) != 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Ambient variable count (not the cardinality).
    pub fn ambient(&self) -> usize {
        self.len
    }

    pub fn count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.contains(i))
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        FaceIndexSet { bits: !self.bits & FaceIndexSet::full(self.len).bits, len: self.len }
    }

    pub fn is_subset_of(&self, other: &FaceIndexSet) -> bool {
        assert_eq!(self.len, other.len);
        self.bits & !other.bits == 0
    }

    /// Image under a variable permutation: i maps to perm[i].
    pub fn apply_perm(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.len);
        let mut out = FaceIndexSet::empty(self.len);
        for i in self.iter() {
            out.insert(perm[i]);
        }
        out
    }
}

impl std::fmt::Debug for FaceIndexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for i in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
            first = false;
        }
        write!(f, "}}")
    }
}
