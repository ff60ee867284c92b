//! Word-sized footprints for the exact solvers. Graphs up to 64 (128)
//! vertices run on a single `u64` (`u128`); larger ones fall back to
//! [`VertexSet`].

use std::hash::Hash;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub(crate) trait Mask: Clone + Eq + Hash + Send + Sync {
    fn from_set(set: &VertexSet) -> Self;
    fn empty(n: usize) -> Self;
    fn or(&self, other: &Self) -> Self;
    fn is_subset(&self, other: &Self) -> bool;
    fn count(&self) -> usize;
    fn contains(&self, v: usize) -> bool;
    fn with(&self, v: usize) -> Self;
    /// Smallest vertex of `universe` not in `self`.
    fn first_missing(&self, universe: &Self) -> Option<usize>;
    /// Approximate heap footprint of one memo entry keyed by this mask.
    fn entry_bytes(n: usize) -> usize;
}

macro_rules! word_mask {
    ($t:ty) => {
        impl Mask for $t {
            fn from_set(set: &VertexSet) -> Self {
                set.iter().fold(0, |acc, v| acc | (1 as $t) << v)
            }
            fn empty(_n: usize) -> Self {
                0
            }
            fn or(&self, other: &Self) -> Self {
                self | other
            }
            fn is_subset(&self, other: &Self) -> bool {
                self & !other == 0
            }
            fn count(&self) -> usize {
                self.count_ones() as usize
            }
            fn contains(&self, v: usize) -> bool {
                self >> v & 1 == 1
            }
            fn with(&self, v: usize) -> Self {
                self | (1 as $t) << v
            }
            fn first_missing(&self, universe: &Self) -> Option<usize> {
                let rest = universe & !self;
                (rest != 0).then(|| rest.trailing_zeros() as usize)
            }
            fn entry_bytes(_n: usize) -> usize {
                // key + value + hashbrown control byte, rounded for load factor
                2 * (std::mem::size_of::<$t>() + 8)
            }
        }
    };
}

word_mask!(u64);
word_mask!(u128);

impl Mask for VertexSet {
    fn from_set(set: &VertexSet) -> Self {
        set.clone()
    }
    fn empty(n: usize) -> Self {
        VertexSet::new(n)
    }
    fn or(&self, other: &Self) -> Self {
        self.union(other)
    }
    fn is_subset(&self, other: &Self) -> bool {
        VertexSet::is_subset(self, other)
    }
    fn count(&self) -> usize {
        self.len()
    }
    fn contains(&self, v: usize) -> bool {
        VertexSet::contains(self, v)
    }
    fn with(&self, v: usize) -> Self {
        let mut out = self.clone();
        out.insert(v);
        out
    }
    fn first_missing(&self, universe: &Self) -> Option<usize> {
        universe.difference(self).first()
    }
    fn entry_bytes(n: usize) -> usize {
        2 * (std::mem::size_of::<VertexSet>() + n.div_ceil(64) * 8 + 8)
    }
}

/// Neighborhoods of a graph packed into masks.
pub(crate) struct Kernel<M> {
    pub n: usize,
    pub nbhd: Vec<M>,
    pub full: M,
}

impl<M: Mask> Kernel<M> {
    pub fn new(g: &Graph) -> Self {
        Kernel {
            n: g.n(),
            nbhd: (0..g.n()).map(|v| M::from_set(g.neighbors(v))).collect(),
            full: M::from_set(&g.vertex_set()),
        }
    }

    /// v can still be played on footprint `fp`: N(v) has an uncovered vertex.
    #[inline]
    pub fn playable(&self, v: usize, fp: &M) -> bool {
        !self.nbhd[v].is_subset(fp)
    }
}

/// A computation that is generic over the mask width.
pub(crate) trait KernelTask {
    type Output;
    fn run<M: Mask>(self, kernel: &Kernel<M>) -> Self::Output;
}

pub(crate) fn dispatch<T: KernelTask>(g: &Graph, task: T) -> T::Output {
    match g.n() {
        0..=64 => task.run(&Kernel::<u64>::new(g)),
        65..=128 => task.run(&Kernel::<u128>::new(g)),
        _ => task.run(&Kernel::<VertexSet>::new(g)),
    }
}
