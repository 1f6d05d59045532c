//! Set partitions of `0..n` in canonical form.
//!
//! The canonical block order puts the block containing `0` first and sorts the
//! rest by `(size, least element)`. Inside a block the members are sorted.
//! Element `0` is the identity element when partitioning a group and the
//! trivial character when partitioning `Irr(G)`, so the distinguished block is
//! always the first one.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl Partition {
    /// Builds a partition from arbitrary blocks, checking that they cover
    /// `0..n` exactly once.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidInput("empty block in partition".into()));
            }
            for &x in block {
                if x >= n {
                    return Err(Error::InvalidInput(format!("element {x} out of range 0..{n}")));
                }
                if seen[x] {
                    return Err(Error::InvalidInput(format!(
                        "element {x} appears in more than one block"
                    )));
                }
                seen[x] = true;
            }
        }
        if let Some(x) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidInput(format!("element {x} is not covered")));
        }
        Ok(Self::canonical(n, blocks))
    }

    /// Partition whose blocks are the fibres of `labels`.
    pub fn from_labels(labels: &[usize]) -> Self {
        let max = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); max];
        for (x, &l) in labels.iter().enumerate() {
            blocks[l].push(x);
        }
        blocks.retain(|b| !b.is_empty());
        Self::canonical(labels.len(), blocks)
    }

    fn canonical(n: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort_by(|a, b| {
            let a0 = a[0] == 0;
            let b0 = b[0] == 0;
            b0.cmp(&a0).then(a.len().cmp(&b.len())).then(a[0].cmp(&b[0]))
        });
        let mut block_of = vec![0; n];
        for (i, b) in blocks.iter().enumerate() {
            for &x in b {
                block_of[x] = i;
            }
        }
        Partition { blocks, block_of }
    }

    pub fn singletons(n: usize) -> Self {
        Self::canonical(n, (0..n).map(|x| vec![x]).collect())
    }

    /// `{0}` and everything else (or just `{0}` when `n == 1`).
    pub fn split_zero(n: usize) -> Self {
        let mut blocks = vec![vec![0]];
        if n > 1 {
            blocks.push((1..n).collect());
        }
        Self::canonical(n, blocks)
    }

    /// Number of elements of the underlying set.
    pub fn ground_size(&self) -> usize {
        self.block_of.len()
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.block_of
    }

    pub fn contains_block(&self, block: &[usize]) -> bool {
        let Some(&first) = block.first() else {
            return false;
        };
        if first >= self.ground_size() {
            return false;
        }
        let mut sorted = block.to_vec();
        sorted.sort_unstable();
        self.blocks[self.block_of[first]] == sorted
    }

    /// `self ≤ other`: every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.ground_size() == other.ground_size()
            && self.blocks.iter().all(|b| {
                let target = other.block_of[b[0]];
                b.iter().all(|&x| other.block_of[x] == target)
            })
    }

    /// Finest common coarsening, by union-find over overlapping blocks.
    pub fn join(&self, other: &Partition) -> Partition {
        assert_eq!(self.ground_size(), other.ground_size());
        let n = self.ground_size();
        let mut uf = UnionFind::new(n);
        for p in [self, other] {
            for b in &p.blocks {
                for w in b.windows(2) {
                    uf.union(w[0], w[1]);
                }
            }
        }
        let labels: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
        Partition::from_labels(&labels)
    }

    /// Coarsest common refinement.
    pub fn meet(&self, other: &Partition) -> Partition {
        assert_eq!(self.ground_size(), other.ground_size());
        let n = self.ground_size();
        let r = other.len();
        let labels: Vec<usize> = (0..n).map(|x| self.block_of[x] * r + other.block_of[x]).collect();
        let mut dense = std::collections::HashMap::new();
        let labels: Vec<usize> = labels
            .into_iter()
            .map(|l| {
                let next = dense.len();
                *dense.entry(l).or_insert(next)
            })
            .collect();
        Partition::from_labels(&labels)
    }

    /// True iff `set` is a union of blocks.
    pub fn is_union_of_blocks(&self, set: &[usize]) -> bool {
        let mut inside = vec![false; self.ground_size()];
        for &x in set {
            inside[x] = true;
        }
        set.iter()
            .all(|&x| self.blocks[self.block_of[x]].iter().all(|&y| inside[y]))
    }

    /// The blocks contained in `set`.
    pub fn blocks_within<'a>(&'a self, set: &'a [bool]) -> impl Iterator<Item = &'a Vec<usize>> {
        self.blocks.iter().filter(move |b| b.iter().all(|&x| set[x]))
    }

    /// Image of every block under an injective map into `0..new_n`; the images
    /// must cover `0..new_n`.
    pub fn map_elements(&self, map: &[usize], new_n: usize) -> Result<Partition> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| map[x]).collect())
            .collect();
        Partition::from_blocks(new_n, blocks)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            let s: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", s.join(","))?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct PartitionWire {
    blocks: Vec<Vec<usize>>,
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PartitionWire {
            blocks: self.blocks.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = PartitionWire::deserialize(d)?;
        let n = wire.blocks.iter().map(Vec::len).sum();
        Partition::from_blocks(n, wire.blocks).map_err(serde::de::Error::custom)
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Iterator over all set partitions of `0..n` as restricted growth strings:
/// `a[0] = 0` and `a[i] ≤ 1 + max(a[..i])`.
pub struct RestrictedGrowth {
    a: Vec<usize>,
    max_prefix: Vec<usize>,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        RestrictedGrowth {
            a: vec![0; n],
            max_prefix: vec![0; n],
            done: false,
        }
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.a.clone();
        let n = self.a.len();
        // advance: rightmost position that can still grow
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.a[i] <= self.max_prefix[i - 1] {
                self.a[i] += 1;
                self.max_prefix[i] = self.max_prefix[i - 1].max(self.a[i]);
                for j in i + 1..n {
                    self.a[j] = 0;
                    self.max_prefix[j] = self.max_prefix[i];
                }
                break;
            }
        }
        Some(out)
    }
}

/// All partitions of `0..n`.
pub fn all_partitions(n: usize) -> impl Iterator<Item = Partition> {
    RestrictedGrowth::new(n).map(|labels| Partition::from_labels(&labels))
}
