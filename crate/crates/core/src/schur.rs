//! Schur partitions and central Schur rings.
//!
//! A partition `K` of `G` is a Schur partition when `{1}` is a block, the
//! inverse of every block is a block, and the span of the block sums `K̂` is
//! closed under multiplication. Closure is checked by counting:
//! the coefficient of `m` in `K̂·L̂` is `#{(k, l) ∈ K×L : kl = m}`.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::partition::Partition;

/// Why a partition is not a Schur partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum SchurViolation {
    /// The partition is not over the group's elements.
    GroundMismatch { expected: usize, got: usize },
    /// `{1}` is not a block.
    IdentityNotBlock { block: Vec<usize> },
    /// The inverses of `block` do not form a block.
    InverseNotBlock { block: Vec<usize> },
    /// `K̂·L̂` has coefficient `count_a` at `element_a` but `count_b` at
    /// `element_b`, which lie in the same block.
    NotClosed {
        k: Vec<usize>,
        l: Vec<usize>,
        element_a: usize,
        count_a: usize,
        element_b: usize,
        count_b: usize,
    },
}

impl fmt::Display for SchurViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchurViolation::GroundMismatch { expected, got } => {
                write!(f, "partition covers {got} elements, the group has {expected}")
            }
            SchurViolation::IdentityNotBlock { block } => {
                write!(f, "the identity lies in the block {block:?}, not in {{1}}")
            }
            SchurViolation::InverseNotBlock { block } => {
                write!(f, "the inverse of block {block:?} is not a block")
            }
            SchurViolation::NotClosed {
                k,
                l,
                element_a,
                count_a,
                element_b,
                count_b,
            } => write!(
                f,
                "product of blocks {k:?} and {l:?} has coefficient {count_a} at {element_a} but {count_b} at {element_b}"
            ),
        }
    }
}

/// A validated Schur partition.
#[derive(Clone, PartialEq, Eq)]
pub struct SchurPartition {
    group: FiniteGroup,
    blocks: Partition,
    central: bool,
}

impl fmt::Debug for SchurPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SchurPartition{:?}", self.blocks)?;
        if self.central {
            write!(f, " (central)")?;
        }
        Ok(())
    }
}

impl SchurPartition {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn blocks(&self) -> &Partition {
        &self.blocks
    }

    /// Every block is a union of conjugacy classes.
    pub fn is_central(&self) -> bool {
        self.central
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block index of the inverse of block `i`.
    pub fn inverse_block(&self, i: usize) -> usize {
        let x = self.blocks.block(i)[0];
        self.blocks.block_of(self.group.inv(x))
    }
}

/// Validates `blocks` as a Schur partition of `g`.
pub fn check_schur(g: &FiniteGroup, blocks: &Partition) -> Result<SchurPartition> {
    if blocks.ground_size() != g.order() {
        return Err(SchurViolation::GroundMismatch {
            expected: g.order(),
            got: blocks.ground_size(),
        }
        .into());
    }
    let first = blocks.block(blocks.block_of(0));
    if first.len() != 1 {
        return Err(SchurViolation::IdentityNotBlock { block: first.to_vec() }.into());
    }
    for block in blocks.blocks() {
        let mut inverses: Vec<usize> = block.iter().map(|&x| g.inv(x)).collect();
        inverses.sort_unstable();
        if !blocks.contains_block(&inverses) {
            return Err(SchurViolation::InverseNotBlock { block: block.clone() }.into());
        }
    }
    let b = blocks.len();
    let witness = (0..b * b).into_par_iter().find_map_first(|kl| {
        let (k, l) = (kl / b, kl % b);
        let mut count = vec![0usize; g.order()];
        for &x in blocks.block(k) {
            for &y in blocks.block(l) {
                count[g.mul(x, y)] += 1;
            }
        }
        blocks.blocks().iter().find_map(|m| {
            let a = m[0];
            m.iter()
                .find(|&&z| count[z] != count[a])
                .map(|&z| SchurViolation::NotClosed {
                    k: blocks.block(k).to_vec(),
                    l: blocks.block(l).to_vec(),
                    element_a: a,
                    count_a: count[a],
                    element_b: z,
                    count_b: count[z],
                })
        })
    });
    if let Some(v) = witness {
        return Err(v.into());
    }
    let central = blocks.blocks().iter().all(|blk| g.classes().is_union_of_blocks(blk));
    Ok(SchurPartition {
        group: g.clone(),
        blocks: blocks.clone(),
        central,
    })
}

/// `c[K][L][M]` with `K̂·L̂ = Σ_M c[K][L][M]·M̂`.
pub fn structure_constants(s: &SchurPartition) -> Vec<Vec<Vec<usize>>> {
    let g = &s.group;
    let blocks = s.blocks.blocks();
    let b = blocks.len();
    (0..b)
        .into_par_iter()
        .map(|k| {
            (0..b)
                .map(|l| {
                    let mut count = vec![0usize; g.order()];
                    for &x in &blocks[k] {
                        for &y in &blocks[l] {
                            count[g.mul(x, y)] += 1;
                        }
                    }
                    blocks.iter().map(|m| count[m[0]]).collect()
                })
                .collect()
        })
        .collect()
}

/// The Schur partition whose span is `span{K̂} ∩ span{L̂}`: the partition join.
pub fn sring_intersection(a: &SchurPartition, b: &SchurPartition) -> Result<SchurPartition> {
    if a.group != b.group {
        return Err(Error::GroupMismatch);
    }
    let joined = a.blocks.join(&b.blocks);
    check_schur(&a.group, &joined)
}

/// Class multiplication coefficients `a[j][k][l] = #{(x, y) ∈ C_j×C_k : xy = z_l}`
/// for a fixed representative `z_l` of each class.
///
/// This is the class-level shadow of [`check_schur`]: a partition of the
/// classes is a central Schur partition exactly when identity and inversion
/// behave and every product of block sums has class coefficients constant on
/// blocks.
#[derive(Clone, Debug)]
pub struct ClassAlgebra {
    r: usize,
    coeff: Vec<u32>,
    inverse: Vec<usize>,
}

impl ClassAlgebra {
    pub fn new(g: &FiniteGroup) -> Self {
        let r = g.num_classes();
        let mut coeff = vec![0u32; r * r * r];
        for (j, block) in g.classes().blocks().iter().enumerate() {
            for &x in block {
                let xi = g.inv(x);
                for l in 0..r {
                    let k = g.class_of(g.mul(xi, g.class_rep(l)));
                    coeff[(j * r + k) * r + l] += 1;
                }
            }
        }
        ClassAlgebra {
            r,
            coeff,
            inverse: (0..r).map(|c| g.inverse_class(c)).collect(),
        }
    }

    pub fn num_classes(&self) -> usize {
        self.r
    }

    pub fn coefficient(&self, j: usize, k: usize, l: usize) -> u32 {
        self.coeff[(j * self.r + k) * self.r + l]
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse[c]
    }

    /// Whether a partition of the class indices gives a central Schur
    /// partition. Class `0` must be the identity class.
    pub fn is_schur(&self, class_blocks: &Partition) -> bool {
        let r = self.r;
        if class_blocks.ground_size() != r || class_blocks.block(class_blocks.block_of(0)).len() != 1 {
            return false;
        }
        for block in class_blocks.blocks() {
            let mut inv: Vec<usize> = block.iter().map(|&c| self.inverse[c]).collect();
            inv.sort_unstable();
            if !class_blocks.contains_block(&inv) {
                return false;
            }
        }
        let blocks = class_blocks.blocks();
        let mut acc = vec![0u64; r];
        for (bi, kb) in blocks.iter().enumerate() {
            // K̂·L̂ = L̂·K̂ in the center, so unordered pairs suffice
            for lb in &blocks[bi..] {
                acc.iter_mut().for_each(|a| *a = 0);
                for &j in kb {
                    for &k in lb {
                        let base = (j * r + k) * r;
                        for (a, &c) in acc.iter_mut().zip(&self.coeff[base..base + r]) {
                            *a += c as u64;
                        }
                    }
                }
                for m in blocks {
                    if m.iter().any(|&l| acc[l] != acc[m[0]]) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Expands a partition of class indices into a partition of elements.
pub fn classes_to_elements(g: &FiniteGroup, class_blocks: &Partition) -> Partition {
    let labels: Vec<usize> = (0..g.order()).map(|x| class_blocks.block_of(g.class_of(x))).collect();
    Partition::from_labels(&labels)
}

/// Inverse of [`classes_to_elements`]; `None` if some block is not a union of
/// classes.
pub fn elements_to_classes(g: &FiniteGroup, blocks: &Partition) -> Option<Partition> {
    if blocks.ground_size() != g.order() {
        return None;
    }
    let mut labels = vec![usize::MAX; g.num_classes()];
    for x in 0..g.order() {
        let c = g.class_of(x);
        let b = blocks.block_of(x);
        if labels[c] == usize::MAX {
            labels[c] = b;
        } else if labels[c] != b {
            return None;
        }
    }
    Some(Partition::from_labels(&labels))
}
