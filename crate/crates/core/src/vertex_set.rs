use std::fmt;

use fixedbitset::FixedBitSet;

/// A set of vertex indices drawn from a fixed universe `0..capacity`.
///
/// Iteration is always in increasing index order; every witness the
/// solvers report relies on that.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(FixedBitSet);

impl VertexSet {
    /// The empty set over `0..capacity`.
    pub fn new(capacity: usize) -> Self {
        VertexSet(FixedBitSet::with_capacity(capacity))
    }

    /// The set `{0, 1, ..., capacity - 1}`.
    pub fn full(capacity: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(capacity);
        bits.insert_range(..);
        VertexSet(bits)
    }

    /// Builds a set from the given members.
    ///
    /// Panics if a member is not below `capacity`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(capacity: usize, members: I) -> Self {
        let mut set = VertexSet::new(capacity);
        for v in members {
            set.insert(v);
        }
        set
    }

    pub fn capacity(&self) -> usize {
        self.0.len()
    }

    pub fn insert(&mut self, v: usize) {
        self.0.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.0.set(v, false);
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(v)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.0.minimum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.0.union_with(&other.0);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.0.intersect_with(&other.0);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.0.difference_with(&other.0);
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    /// Complement within `0..capacity`.
    pub fn complement(&self) -> VertexSet {
        let mut out = self.clone();
        out.0.toggle_range(..);
        out
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    /// Packs the set into a `u64` when the universe fits in one word.
    pub fn to_u64(&self) -> Option<u64> {
        (self.capacity() <= 64).then(|| self.iter().fold(0u64, |acc, v| acc | 1 << v))
    }

    /// Packs the set into a `u128` when the universe fits.
    pub fn to_u128(&self) -> Option<u128> {
        (self.capacity() <= 128).then(|| self.iter().fold(0u128, |acc, v| acc | 1 << v))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    /// Comma-separated members, e.g. `0,3,5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iteration_is_increasing() {
        let s = VertexSet::from_vertices(70, [65, 3, 0, 64, 17]);
        assert_eq!(s.to_vec(), vec![0, 3, 17, 64, 65]);
        assert_eq!(s.first(), Some(0));
        assert_eq!(s.len(), 5);
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_vertices(6, [0, 1, 2]);
        let b = VertexSet::from_vertices(6, [2, 3]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(a.intersection(&b).to_vec(), vec![2]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 1]);
        assert_eq!(a.complement().to_vec(), vec![3, 4, 5]);
        assert!(VertexSet::from_vertices(6, [1]).is_subset(&a));
        assert!(!a.is_disjoint(&b));
        assert_eq!(VertexSet::full(4).to_vec(), vec![0, 1, 2, 3]);
        assert!(VertexSet::new(0).is_empty());
    }

    #[test]
    fn packing() {
        let s = VertexSet::from_vertices(64, [0, 63]);
        assert_eq!(s.to_u64(), Some(1 | 1 << 63));
        assert_eq!(VertexSet::new(65).to_u64(), None);
        assert_eq!(VertexSet::from_vertices(100, [99]).to_u128(), Some(1 << 99));
        assert_eq!(format!("{}", s), "0,63");
    }
}
