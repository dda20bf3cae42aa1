//! Finite set partitions and their distinction sets.
//!
//! Elements of a universe of size `n` are the indices `0..n`. A [`Partition`]
//! is kept in canonical form (blocks sorted internally and ordered by least
//! element), so two partitions are equal exactly when they have the same blocks.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};

/// Largest universe [`enumerate_partitions`] accepts unless a bound is given.
pub const DEFAULT_ENUMERATION_BOUND: usize = 9;

/// A finite universe `{0, .., n-1}` with `n >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Universe(usize);

impl Universe {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyUniverse);
        }
        Ok(Universe(size))
    }

    #[inline]
    pub fn size(self) -> usize {
        self.0
    }
}

/// A partition of a finite universe into disjoint, non-empty, covering blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    universe: Universe,
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl Partition {
    /// Validate and canonicalize a list of blocks.
    pub fn new(universe: Universe, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n = universe.size();
        let mut seen = vec![false; n];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::EmptyBlock);
            }
            for &e in block {
                if e >= n {
                    return Err(Error::IndexOutOfRange { element: e, size: n });
                }
                if seen[e] {
                    return Err(Error::OverlappingBlocks(e));
                }
                seen[e] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::UncoveredElement(missing));
        }
        Ok(Self::from_blocks_unchecked(universe, blocks))
    }

    fn from_blocks_unchecked(universe: Universe, mut blocks: Vec<Vec<usize>>) -> Self {
        for block in &mut blocks {
            block.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        let mut block_of = vec![0; universe.size()];
        for (i, block) in blocks.iter().enumerate() {
            for &e in block {
                block_of[e] = i;
            }
        }
        Partition { universe, blocks, block_of }
    }

    /// Group elements by a per-element key: elements with equal keys share a block.
    pub fn from_labels<K: Eq + Hash>(labels: &[K]) -> Result<Self> {
        let universe = Universe::new(labels.len())?;
        let mut index: HashMap<&K, usize> = HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (e, key) in labels.iter().enumerate() {
            let next = blocks.len();
            let b = *index.entry(key).or_insert(next);
            if b == next {
                blocks.push(Vec::new());
            }
            blocks[b].push(e);
        }
        Ok(Self::from_blocks_unchecked(universe, blocks))
    }

    /// The discrete partition `1`: every element in its own block.
    pub fn top(universe: Universe) -> Self {
        Partition {
            universe,
            blocks: (0..universe.size()).map(|e| vec![e]).collect(),
            block_of: (0..universe.size()).collect(),
        }
    }

    /// The indiscrete partition `0` (the blob): a single block.
    pub fn bottom(universe: Universe) -> Self {
        Partition {
            universe,
            blocks: vec![(0..universe.size()).collect()],
            block_of: vec![0; universe.size()],
        }
    }

    #[inline]
    pub fn universe(&self) -> Universe {
        self.universe
    }

    /// Universe size; never zero.
    #[inline]
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.universe.size()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing `e` in canonical block order.
    #[inline]
    pub fn block_of(&self, e: usize) -> usize {
        self.block_of[e]
    }

    /// Block index of every element.
    pub fn block_labels(&self) -> &[usize] {
        &self.block_of
    }

    pub fn is_top(&self) -> bool {
        self.blocks.len() == self.len()
    }

    pub fn is_bottom(&self) -> bool {
        self.blocks.len() == 1
    }

    /// Whether `(a, b)` is a distinction. O(1); needs no materialized ditset.
    #[inline]
    pub fn distinguishes(&self, a: usize, b: usize) -> bool {
        self.block_of[a] != self.block_of[b]
    }

    fn check_same(&self, other: &Partition) -> Result<()> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch(self.len(), other.len()));
        }
        Ok(())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("{")?;
            for (j, e) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}

/// A set of ordered pairs `(a, b)` in `U x U`, stored as an `n x n` bit matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairSet {
    n: usize,
    words: Vec<u64>,
}

impl PairSet {
    pub fn empty(universe: Universe) -> Self {
        let n = universe.size();
        PairSet { n, words: vec![0; (n * n).div_ceil(64)] }
    }

    pub fn full(universe: Universe) -> Self {
        let mut s = Self::empty(universe);
        for a in 0..s.n {
            for b in 0..s.n {
                s.insert(a, b);
            }
        }
        s
    }

    pub fn universe_size(&self) -> usize {
        self.n
    }

    #[inline]
    fn bit(&self, a: usize, b: usize) -> (usize, u64) {
        assert!(a < self.n && b < self.n, "pair ({a},{b}) outside universe of size {}", self.n);
        let k = a * self.n + b;
        (k / 64, 1u64 << (k % 64))
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        let (w, m) = self.bit(a, b);
        self.words[w] |= m;
    }

    #[inline]
    pub fn contains(&self, a: usize, b: usize) -> bool {
        let (w, m) = self.bit(a, b);
        self.words[w] & m != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn zip_with(&self, other: &PairSet, op: impl Fn(u64, u64) -> u64) -> PairSet {
        assert_eq!(self.n, other.n, "pair sets over different universes");
        PairSet {
            n: self.n,
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| op(a, b)).collect(),
        }
    }

    pub fn union(&self, other: &PairSet) -> PairSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &PairSet) -> PairSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &PairSet) -> PairSet {
        self.zip_with(other, |a, b| a & !b)
    }

    /// `U x U` minus this set.
    pub fn complement(&self) -> PairSet {
        let full = PairSet::full(Universe(self.n));
        full.difference(self)
    }

    pub fn is_subset(&self, other: &PairSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n * n).filter(move |k| self.words[k / 64] >> (k % 64) & 1 == 1).map(move |k| (k / n, k % n))
    }
}

/// All ordered pairs in different blocks.
pub fn ditset(p: &Partition) -> PairSet {
    let mut s = PairSet::empty(p.universe());
    for a in 0..p.len() {
        for b in 0..p.len() {
            if p.distinguishes(a, b) {
                s.insert(a, b);
            }
        }
    }
    s
}

/// All ordered pairs in the same block: the equivalence relation of `p`.
pub fn inditset(p: &Partition) -> PairSet {
    ditset(p).complement()
}

/// `sigma ⪯ pi`: every block of `pi` lies inside a block of `sigma`.
pub fn refines(sigma: &Partition, pi: &Partition) -> Result<bool> {
    sigma.check_same(pi)?;
    Ok(pi.blocks().iter().all(|b| contained_in_one_block(b, sigma)))
}

fn contained_in_one_block(block: &[usize], p: &Partition) -> bool {
    let first = p.block_of(block[0]);
    block.iter().all(|&e| p.block_of(e) == first)
}

/// Blocks are the non-empty intersections of a `pi` block with a `sigma` block.
pub fn join(pi: &Partition, sigma: &Partition) -> Result<Partition> {
    pi.check_same(sigma)?;
    let labels: Vec<(usize, usize)> = (0..pi.len()).map(|e| (pi.block_of(e), sigma.block_of(e))).collect();
    Partition::from_labels(&labels)
}

/// Classes of the equivalence relation generated by both partitions' blocks.
pub fn meet(pi: &Partition, sigma: &Partition) -> Result<Partition> {
    pi.check_same(sigma)?;
    let mut dsu = DisjointSets::new(pi.len());
    for block in pi.blocks().iter().chain(sigma.blocks()) {
        for &e in &block[1..] {
            dsu.union(block[0], e);
        }
    }
    let labels: Vec<usize> = (0..pi.len()).map(|e| dsu.find(e)).collect();
    Partition::from_labels(&labels)
}

/// `sigma ⇒ pi`: each `pi` block inside some `sigma` block is discretized, the rest kept whole.
pub fn implication(sigma: &Partition, pi: &Partition) -> Result<Partition> {
    sigma.check_same(pi)?;
    let mut blocks = Vec::with_capacity(pi.len());
    for block in pi.blocks() {
        if contained_in_one_block(block, sigma) {
            blocks.extend(block.iter().map(|&e| vec![e]));
        } else {
            blocks.push(block.clone());
        }
    }
    Ok(Partition::from_blocks_unchecked(pi.universe(), blocks))
}

/// Distinctions shared by both partitions.
pub fn common_dits(pi: &Partition, sigma: &Partition) -> Result<PairSet> {
    pi.check_same(sigma)?;
    let mut s = PairSet::empty(pi.universe());
    for a in 0..pi.len() {
        for b in 0..pi.len() {
            if pi.distinguishes(a, b) && sigma.distinguishes(a, b) {
                s.insert(a, b);
            }
        }
    }
    Ok(s)
}

/// Bell numbers via the Bell triangle. Saturates at `u128::MAX`.
pub fn bell_number(n: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let v = next.last().unwrap().saturating_add(x);
            next.push(v);
        }
        row = next;
    }
    row[0]
}

/// Every partition of the universe, up to [`DEFAULT_ENUMERATION_BOUND`] elements.
pub fn enumerate_partitions(universe: Universe) -> Result<Partitions> {
    enumerate_partitions_bounded(universe, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_partitions_bounded(universe: Universe, bound: usize) -> Result<Partitions> {
    if universe.size() > bound {
        return Err(Error::BoundExceeded { requested: universe.size() as u128, limit: bound as u128 });
    }
    Ok(Partitions { universe, rgs: Some(vec![0; universe.size()]) })
}

/// Iterator over set partitions in restricted-growth-string order.
///
/// A restricted growth string `a` has `a[0] = 0` and `a[i] <= 1 + max(a[..i])`;
/// `a[i]` is the block of element `i`.
#[derive(Debug, Clone)]
pub struct Partitions {
    universe: Universe,
    rgs: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.rgs.as_mut()?;
        let n = current.len();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (e, &b) in current.iter().enumerate() {
            if b == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[b].push(e);
        }
        let out = Partition::from_blocks_unchecked(self.universe, blocks);

        let mut prefix_max = vec![0; n];
        for i in 1..n {
            prefix_max[i] = prefix_max[i - 1].max(current[i]);
        }
        let advance = (1..n).rev().find(|&i| current[i] <= prefix_max[i - 1]);
        match advance {
            Some(i) => {
                current[i] += 1;
                current[i + 1..].iter_mut().for_each(|x| *x = 0);
            }
            None => self.rgs = None,
        }
        Some(out)
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(n: usize) -> Universe {
        Universe::new(n).unwrap()
    }

    fn part(n: usize, blocks: &[&[usize]]) -> Partition {
        Partition::new(u(n), blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    fn all(n: usize) -> Vec<Partition> {
        enumerate_partitions(u(n)).unwrap().collect()
    }

    #[test]
    fn make_partition_validates() {
        let p = part(4, &[&[3, 2], &[1, 0]]);
        assert_eq!(p.blocks(), &[vec![0, 1], vec![2, 3]]);
        assert_eq!(
            Partition::new(u(4), vec![vec![0, 1], vec![1, 2, 3]]),
            Err(Error::OverlappingBlocks(1))
        );
        assert_eq!(Partition::new(u(3), vec![vec![0, 1]]), Err(Error::UncoveredElement(2)));
        assert_eq!(Partition::new(u(2), vec![vec![0, 1], vec![]]), Err(Error::EmptyBlock));
        assert_eq!(
            Partition::new(u(2), vec![vec![0, 5]]),
            Err(Error::IndexOutOfRange { element: 5, size: 2 })
        );
        assert_eq!(part(2, &[&[0], &[1]]), Partition::top(u(2)));
        assert_eq!(Universe::new(0), Err(Error::EmptyUniverse));
    }

    #[test]
    fn top_and_bottom() {
        assert_eq!(Partition::top(u(3)).blocks(), &[vec![0], vec![1], vec![2]]);
        assert_eq!(Partition::bottom(u(3)).blocks(), &[vec![0, 1, 2]]);
        assert!(ditset(&Partition::bottom(u(3))).is_empty());
        for n in 1..8 {
            assert_eq!(ditset(&Partition::top(u(n))).len(), n * n - n);
        }
    }

    #[test]
    fn crossed_pair_ditset() {
        let p = part(4, &[&[0, 1], &[2, 3]]);
        // Brute force over all 16 pairs.
        let mut expected: Vec<(usize, usize)> = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                if (a < 2) != (b < 2) {
                    expected.push((a, b));
                }
            }
        }
        let got: Vec<_> = ditset(&p).iter().collect();
        assert_eq!(got, expected);
        assert_eq!(got.len(), 8);
        assert!(got.contains(&(0, 2)) && got.contains(&(3, 1)));
    }

    #[test]
    fn refines_examples() {
        let a = part(4, &[&[0, 1], &[2, 3]]);
        let b = part(4, &[&[0, 2], &[1, 3]]);
        assert!(refines(&Partition::bottom(u(4)), &a).unwrap());
        assert!(refines(&a, &a).unwrap());
        assert!(!refines(&a, &b).unwrap());
        assert!(!refines(&b, &a).unwrap());
        assert_eq!(refines(&a, &Partition::top(u(3))), Err(Error::UniverseMismatch(4, 3)));
    }

    #[test]
    fn join_meet_implication_examples() {
        let a = part(4, &[&[0, 1], &[2, 3]]);
        let b = part(4, &[&[0, 2], &[1, 3]]);
        let top = Partition::top(u(4));
        let bot = Partition::bottom(u(4));
        assert_eq!(join(&a, &b).unwrap(), top);
        assert_eq!(join(&a, &bot).unwrap(), a);
        assert_eq!(join(&a, &a).unwrap(), a);
        assert_eq!(meet(&a, &b).unwrap(), bot);
        assert_eq!(meet(&a, &top).unwrap(), a);
        assert_eq!(meet(&a, &a).unwrap(), a);
        assert_eq!(implication(&bot, &a).unwrap(), top);
        assert_eq!(implication(&top, &a).unwrap(), a);
        let c = part(4, &[&[0, 1], &[2], &[3]]);
        assert_eq!(implication(&a, &c).unwrap(), top);
    }

    #[test]
    fn bell_counts() {
        let bell = [1u128, 1, 2, 5, 15, 52, 203, 877];
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(bell_number(n), b);
            if n >= 1 {
                let ps = all(n);
                assert_eq!(ps.len() as u128, b);
                let distinct: std::collections::HashSet<_> = ps.iter().cloned().collect();
                assert_eq!(distinct.len(), ps.len());
            }
        }
        assert!(matches!(enumerate_partitions(u(10)), Err(Error::BoundExceeded { .. })));
        assert_eq!(enumerate_partitions_bounded(u(10), 10).unwrap().take(3).count(), 3);
    }

    #[test]
    fn enumeration_is_rgs_ordered() {
        let ps = all(3);
        assert_eq!(ps[0], Partition::bottom(u(3)));
        assert_eq!(ps[4], Partition::top(u(3)));
        assert_eq!(ps[1], part(3, &[&[0, 1], &[2]]));
    }

    #[test]
    fn dit_and_indit_split_the_square() {
        for n in 1..=5 {
            for p in all(n) {
                let d = ditset(&p);
                let i = inditset(&p);
                assert!(d.intersection(&i).is_empty());
                assert_eq!(d.union(&i), PairSet::full(u(n)));
                for a in 0..n {
                    assert!(i.contains(a, a));
                    for b in 0..n {
                        assert_eq!(i.contains(a, b), i.contains(b, a));
                        assert_eq!(d.contains(a, b), d.contains(b, a));
                        for c in 0..n {
                            if i.contains(a, b) && i.contains(b, c) {
                                assert!(i.contains(a, c));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn refinement_and_join_match_ditsets_exhaustively() {
        for n in 1..=5 {
            let ps = all(n);
            let dits: Vec<PairSet> = ps.iter().map(ditset).collect();
            for (i, p) in ps.iter().enumerate() {
                for (j, s) in ps.iter().enumerate() {
                    assert_eq!(refines(s, p).unwrap(), dits[j].is_subset(&dits[i]));
                    assert_eq!(ditset(&join(p, s).unwrap()), dits[i].union(&dits[j]));
                    let common = common_dits(p, s).unwrap();
                    assert_eq!(common, dits[i].intersection(&dits[j]));
                    if !p.is_bottom() && !s.is_bottom() {
                        assert!(!common.is_empty(), "{p} and {s} share no dit");
                    }
                }
            }
        }
    }

    #[test]
    fn lattice_laws_exhaustively() {
        for n in 1..=4 {
            let ps = all(n);
            let top = Partition::top(u(n));
            let bot = Partition::bottom(u(n));
            for a in &ps {
                assert_eq!(join(a, &bot).unwrap(), *a);
                assert_eq!(meet(a, &top).unwrap(), *a);
                assert_eq!(join(a, &top).unwrap(), top);
                assert_eq!(meet(a, &bot).unwrap(), bot);
                for b in &ps {
                    let ab = join(a, b).unwrap();
                    assert_eq!(ab, join(b, a).unwrap());
                    assert_eq!(meet(a, b).unwrap(), meet(b, a).unwrap());
                    assert_eq!(implication(b, a).unwrap() == top, refines(b, a).unwrap());
                    // meet is the greatest lower bound in the refinement order
                    let m = meet(a, b).unwrap();
                    assert!(refines(&m, a).unwrap() && refines(&m, b).unwrap());
                    for c in &ps {
                        assert_eq!(join(&ab, c).unwrap(), join(a, &join(b, c).unwrap()).unwrap());
                        assert_eq!(
                            meet(&m, c).unwrap(),
                            meet(a, &meet(b, c).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(part(4, &[&[2, 3], &[0, 1]]).to_string(), "{{0,1},{2,3}}");
    }
}
