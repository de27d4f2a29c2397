//! Fixed-universe index sets.
//!
//! Every set-valued quantity in this crate (extents, intents, attribute
//! selections, discernibility entries) is a subset of an ordered label list
//! and is represented as a bit set over the label indices. The phantom
//! parameter keeps object-side and attribute-side sets apart at compile
//! time, so an extent can never be fed where an intent is expected.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::marker::PhantomData;

use smallvec::SmallVec;

/// Marker for sets over the object universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ObjectTag;

/// Marker for sets over an attribute universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AttributeTag;

/// Subset of the object list of a context.
pub type ObjectSet = IndexSet<ObjectTag>;

/// Subset of an attribute list of a context.
pub type AttributeSet = IndexSet<AttributeTag>;

const BITS: usize = u64::BITS as usize;

/// A subset of `{0, 1, …, universe-1}` stored as a bit vector.
///
/// Sets are totally ordered by cardinality first and then lexicographically
/// by ascending member index. This order is used everywhere a canonical,
/// platform-independent arrangement is needed (concept lists, rule lists,
/// clause lists), so sorted output is stable across runs.
pub struct IndexSet<T> {
    universe: usize,
    blocks: SmallVec<[u64; 2]>,
    _tag: PhantomData<fn() -> T>,
}

impl<T> IndexSet<T> {
    /// The empty subset of a universe with `universe` elements.
    pub fn empty(universe: usize) -> Self {
        let nblocks = universe.div_ceil(BITS).max(1);
        IndexSet {
            universe,
            blocks: SmallVec::from_elem(0, nblocks),
            _tag: PhantomData,
        }
    }

    /// The full subset `{0, …, universe-1}`.
    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for (i, block) in set.blocks.iter_mut().enumerate() {
            let lo = i * BITS;
            if lo + BITS <= universe {
                *block = u64::MAX;
            } else if lo < universe {
                *block = (1u64 << (universe - lo)) - 1;
            }
        }
        set
    }

    /// Builds a set from member indices. Panics if an index is out of range.
    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
        let mut set = Self::empty(universe);
        for i in indices {
            set.insert(i);
        }
        set
    }

    /// The singleton `{index}`.
    pub fn singleton(universe: usize, index: usize) -> Self {
        Self::from_indices(universe, [index])
    }

    /// Number of elements in the underlying universe.
    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    /// True when every universe element is a member.
    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.universe && self.blocks[index / BITS] & (1 << (index % BITS)) != 0
    }

    pub fn insert(&mut self, index: usize) {
        assert!(index < self.universe, "index {index} outside universe of {}", self.universe);
        self.blocks[index / BITS] |= 1 << (index % BITS);
    }

    pub fn remove(&mut self, index: usize) {
        assert!(index < self.universe, "index {index} outside universe of {}", self.universe);
        self.blocks[index / BITS] &= !(1 << (index % BITS));
    }

    fn check_same_universe(&self, other: &Self) {
        assert_eq!(
            self.universe, other.universe,
            "set operation on mismatched universes"
        );
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    /// Members of `self` that are not members of `other`.
    pub fn difference(&self, other: &Self) -> Self {
        self.check_same_universe(other);
        let mut out = self.clone();
        for (b, o) in out.blocks.iter_mut().zip(&other.blocks) {
            *b &= !o;
        }
        out
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.check_same_universe(other);
        let mut out = self.clone();
        for (b, o) in out.blocks.iter_mut().zip(&other.blocks) {
            *b ^= o;
        }
        out
    }

    /// Complement against the universe.
    pub fn complement(&self) -> Self {
        let mut out = Self::full(self.universe);
        for (b, s) in out.blocks.iter_mut().zip(&self.blocks) {
            *b &= !s;
        }
        out
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_same_universe(other);
        for (b, o) in self.blocks.iter_mut().zip(&other.blocks) {
            *b |= o;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_same_universe(other);
        for (b, o) in self.blocks.iter_mut().zip(&other.blocks) {
            *b &= o;
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_same_universe(other);
        self.blocks.iter().zip(&other.blocks).all(|(s, o)| s & !o == 0)
    }

    pub fn is_superset(&self, other: &Self) -> bool {
        other.is_subset(self)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_same_universe(other);
        self.blocks.iter().zip(&other.blocks).all(|(s, o)| s & o == 0)
    }

    /// True for a strict subset.
    pub fn is_proper_subset(&self, other: &Self) -> bool {
        self.is_subset(other) && self != other
    }

    /// Ascending iterator over member indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &block)| {
            let base = bi * BITS;
            BitIter { block }.map(move |off| base + off)
        })
    }

    /// Members collected into a vector.
    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compares the restriction of both sets to indices `< limit`.
    ///
    /// This is the canonicity test of the closure-enumeration routine: a
    /// candidate closure is accepted only when it introduces no new member
    /// below the generator just added.
    pub(crate) fn eq_below(&self, other: &Self, limit: usize) -> bool {
        self.check_same_universe(other);
        let full_blocks = limit / BITS;
        for i in 0..full_blocks.min(self.blocks.len()) {
            if self.blocks[i] != other.blocks[i] {
                return false;
            }
        }
        let rem = limit % BITS;
        if rem != 0 && full_blocks < self.blocks.len() {
            let mask = (1u64 << rem) - 1;
            if self.blocks[full_blocks] & mask != other.blocks[full_blocks] & mask {
                return false;
            }
        }
        true
    }
}

struct BitIter {
    block: u64,
}

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.block == 0 {
            return None;
        }
        let off = self.block.trailing_zeros() as usize;
        self.block &= self.block - 1;
        Some(off)
    }
}

impl<T> Clone for IndexSet<T> {
    fn clone(&self) -> Self {
        IndexSet {
            universe: self.universe,
            blocks: self.blocks.clone(),
            _tag: PhantomData,
        }
    }
}

impl<T> PartialEq for IndexSet<T> {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.blocks == other.blocks
    }
}

impl<T> Eq for IndexSet<T> {}

impl<T> Hash for IndexSet<T> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.universe.hash(state);
        self.blocks.hash(state);
    }
}

impl<T> PartialOrd for IndexSet<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T> Ord for IndexSet<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl<T> fmt::Debug for IndexSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_membership() {
        let s = ObjectSet::from_indices(10, [0, 3, 9]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(0) && s.contains(3) && s.contains(9));
        assert!(!s.contains(1));
        assert_eq!(s.indices(), vec![0, 3, 9]);
    }

    #[test]
    fn full_handles_multi_block_universes() {
        for n in [1, 63, 64, 65, 130] {
            let f = AttributeSet::full(n);
            assert_eq!(f.len(), n);
            assert!(f.is_full());
            assert!(f.complement().is_empty());
        }
    }

    #[test]
    fn boolean_algebra() {
        let a = ObjectSet::from_indices(8, [0, 1, 2]);
        let b = ObjectSet::from_indices(8, [2, 3]);
        assert_eq!(a.union(&b).indices(), vec![0, 1, 2, 3]);
        assert_eq!(a.intersection(&b).indices(), vec![2]);
        assert_eq!(a.difference(&b).indices(), vec![0, 1]);
        assert_eq!(a.symmetric_difference(&b).indices(), vec![0, 1, 3]);
        assert!(b.intersection(&a).is_subset(&a));
        assert!(!a.is_disjoint(&b));
    }

    #[test]
    fn canonical_order_is_cardinality_then_lexicographic() {
        let mk = |v: &[usize]| ObjectSet::from_indices(6, v.iter().copied());
        let mut sets = vec![mk(&[1, 2]), mk(&[5]), mk(&[0, 4]), mk(&[]), mk(&[0, 1, 2])];
        sets.sort();
        let got: Vec<Vec<usize>> = sets.iter().map(|s| s.indices()).collect();
        assert_eq!(
            got,
            vec![vec![], vec![5], vec![0, 4], vec![1, 2], vec![0, 1, 2]]
        );
    }

    #[test]
    fn eq_below_masks_high_bits() {
        let a = AttributeSet::from_indices(70, [2, 65]);
        let b = AttributeSet::from_indices(70, [2, 68]);
        assert!(a.eq_below(&b, 65));
        assert!(!a.eq_below(&b, 66));
        assert!(a.eq_below(&b, 3));
    }

    #[test]
    #[should_panic(expected = "mismatched universes")]
    fn mixing_universes_panics() {
        let a = ObjectSet::empty(4);
        let b = ObjectSet::empty(5);
        let _ = a.union(&b);
    }
}
