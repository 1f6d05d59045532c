//! The lattice `Sup(G)` of supercharacter theories.
//!
//! Enumeration runs over partitions of the conjugacy classes. Candidates are
//! generated already closed under inversion: the inversion map pairs up
//! classes, the orbit pairs are grouped by a restricted growth string, and
//! each group either becomes one inverse-closed block or splits into a block
//! and its inverse. Survivors of the class-level Schur check are turned into
//! theories.

use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::partition::{Partition, RestrictedGrowth};
use crate::schur::{classes_to_elements, ClassAlgebra};
use crate::sct::{from_classes, sct_leq, SupercharacterTheory};

pub use crate::sct::sct_join;

/// Default bound on the number of conjugacy classes for enumeration.
pub const DEFAULT_CLASS_CAP: usize = 14;

/// All supercharacter theories of a group with their partial order.
#[derive(Clone, Debug)]
pub struct SupLattice {
    table: Arc<CharacterTable>,
    theories: Vec<SupercharacterTheory>,
    order: Vec<Vec<bool>>,
    hasse: Vec<(usize, usize)>,
}

impl SupLattice {
    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    /// Theories in canonical order: finest first, `m(G)` at index 0 and
    /// `M(G)` last.
    pub fn theories(&self) -> &[SupercharacterTheory] {
        &self.theories
    }

    pub fn len(&self) -> usize {
        self.theories.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theories.is_empty()
    }

    /// `leq(i, j)` iff `theories[i] ≤ theories[j]`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.order[i][j]
    }

    pub fn order_matrix(&self) -> &[Vec<bool>] {
        &self.order
    }

    /// Covering pairs `(i, j)`: `i < j` with nothing strictly between.
    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn index_of(&self, c: &SupercharacterTheory) -> Option<usize> {
        self.theories.binary_search(c).ok()
    }

    pub fn minimum(&self) -> &SupercharacterTheory {
        &self.theories[0]
    }

    pub fn maximum(&self) -> &SupercharacterTheory {
        self.theories.last().expect("a lattice is never empty")
    }

    /// Graphviz rendering of the Hasse diagram, finest theory at the bottom.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph sup {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, c) in self.theories.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"|C|={}\\n{}\"];", c.len(), c.class_level());
        }
        for &(a, b) in &self.hasse {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Serialize)]
struct LatticeWire<'a> {
    group: String,
    theories: &'a [SupercharacterTheory],
    order: &'a [Vec<bool>],
    hasse: &'a [(usize, usize)],
}

impl Serialize for SupLattice {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LatticeWire {
            group: self.table.group().fingerprint(),
            theories: &self.theories,
            order: &self.order,
            hasse: &self.hasse,
        }
        .serialize(s)
    }
}

/// Partitions of the classes `0..r` with `{0}` a block and inversion
/// permuting the blocks. `inverse[c]` is the class of inverses of class `c`.
pub fn inversion_closed_partitions(inverse: &[usize]) -> Vec<Partition> {
    let r = inverse.len();
    let orbits: Vec<(usize, usize)> = (1..r).filter(|&c| c <= inverse[c]).map(|c| (c, inverse[c])).collect();
    let mut out = Vec::new();
    for labels in RestrictedGrowth::new(orbits.len()) {
        let groups = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut members: Vec<Vec<(usize, usize)>> = vec![Vec::new(); groups];
        for (o, &l) in labels.iter().enumerate() {
            members[l].push(orbits[o]);
        }
        // per group: merged, or split into B and B⁻¹ with the first pair oriented
        let options: Vec<Vec<Vec<Vec<usize>>>> = members
            .iter()
            .map(|group| {
                let mut opts = vec![vec![group
                    .iter()
                    .flat_map(|&(a, b)| if a == b { vec![a] } else { vec![a, b] })
                    .collect()]];
                if group.iter().all(|&(a, b)| a != b) {
                    for mask in 0..1usize << (group.len() - 1) {
                        let mut left = vec![group[0].0];
                        let mut right = vec![group[0].1];
                        for (i, &(a, b)) in group.iter().enumerate().skip(1) {
                            let (x, y) = if mask >> (i - 1) & 1 == 0 { (a, b) } else { (b, a) };
                            left.push(x);
                            right.push(y);
                        }
                        opts.push(vec![left, right]);
                    }
                }
                opts
            })
            .collect();
        let mut choice = vec![0usize; groups];
        loop {
            let mut blocks = vec![vec![0usize]];
            for (g, &c) in choice.iter().enumerate() {
                blocks.extend(options[g][c].iter().cloned());
            }
            out.push(Partition::from_blocks(r, blocks).expect("blocks cover the classes"));
            let mut i = 0;
            while i < groups {
                choice[i] += 1;
                if choice[i] < options[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == groups {
                break;
            }
        }
    }
    out
}

/// Enumerates `Sup(G)` with the default class cap.
pub fn enumerate_sup(table: &Arc<CharacterTable>) -> Result<SupLattice> {
    enumerate_sup_with_cap(table, DEFAULT_CLASS_CAP)
}

pub fn enumerate_sup_with_cap(table: &Arc<CharacterTable>, cap: usize) -> Result<SupLattice> {
    let g = table.group();
    if g.num_classes() > cap {
        return Err(Error::ClassCapExceeded {
            what: format!("group of order {}", g.order()),
            count: g.num_classes(),
            cap,
        });
    }
    let algebra = ClassAlgebra::new(g);
    let inverse: Vec<usize> = (0..g.num_classes()).map(|c| algebra.inverse_class(c)).collect();
    let candidates = inversion_closed_partitions(&inverse);
    let mut theories = candidates
        .into_par_iter()
        .filter(|p| algebra.is_schur(p))
        .map(|p| from_classes(table, classes_to_elements(g, &p)))
        .collect::<Result<Vec<_>>>()?;
    theories.sort();
    lattice_from_theories(table, theories)
}

/// Builds the order and Hasse diagram of a sorted, deduplicated list of theories.
fn lattice_from_theories(table: &Arc<CharacterTable>, theories: Vec<SupercharacterTheory>) -> Result<SupLattice> {
    let n = theories.len();
    let order = theories
        .par_iter()
        .map(|a| theories.iter().map(|b| sct_leq(a, b)).collect::<Result<Vec<bool>>>())
        .collect::<Result<Vec<_>>>()?;
    let mut hasse = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && order[i][j] && !(0..n).any(|k| k != i && k != j && order[i][k] && order[k][j]) {
                hasse.push((i, j));
            }
        }
    }
    Ok(SupLattice {
        table: table.clone(),
        theories,
        order,
        hasse,
    })
}

/// `C ∧ D`: the join of every theory below both.
pub fn sct_meet(
    c: &SupercharacterTheory,
    d: &SupercharacterTheory,
    lattice: &SupLattice,
) -> Result<SupercharacterTheory> {
    if c.group() != lattice.table.group() || d.group() != lattice.table.group() {
        return Err(Error::GroupMismatch);
    }
    let mut acc = lattice.minimum().clone();
    for e in &lattice.theories {
        if sct_leq(e, c)? && sct_leq(e, d)? {
            acc = sct_join(&acc, e)?;
        }
    }
    Ok(acc)
}

/// Covering pairs of the lattice.
pub fn hasse(lattice: &SupLattice) -> &[(usize, usize)] {
    lattice.hasse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::sct::{conj_theory, theory_big_m, theory_m};

    fn lattice(g: &FiniteGroup) -> SupLattice {
        enumerate_sup(&CharacterTable::shared(g).unwrap()).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(lattice(&FiniteGroup::trivial()).len(), 1);
        assert_eq!(lattice(&FiniteGroup::cyclic(2).unwrap()).len(), 1);
        assert_eq!(lattice(&FiniteGroup::cyclic(3).unwrap()).len(), 2);
        assert_eq!(lattice(&FiniteGroup::cyclic(4).unwrap()).len(), 3);
        assert_eq!(lattice(&FiniteGroup::symmetric(3).unwrap()).len(), 2);
    }

    #[test]
    fn extremes_and_hasse() {
        let g = FiniteGroup::cyclic(4).unwrap();
        let l = lattice(&g);
        assert_eq!(*l.minimum(), theory_m(l.table()));
        assert_eq!(*l.maximum(), theory_big_m(l.table()));
        assert_eq!(l.hasse(), &[(0, 1), (1, 2)]);
        assert_eq!(lattice(&FiniteGroup::symmetric(3).unwrap()).hasse().len(), 1);
        assert!(lattice(&FiniteGroup::trivial()).hasse().is_empty());
        let dot = l.to_dot();
        assert!(dot.starts_with("digraph") && dot.contains("n0 -> n1;"));
    }

    #[test]
    fn inversion_closed_candidates() {
        // C4 classes: 0, x, x², x³ with x ↔ x³
        let parts = inversion_closed_partitions(&[0, 3, 2, 1]);
        let mut blocks: Vec<Vec<Vec<usize>>> = parts.iter().map(|p| p.blocks().to_vec()).collect();
        blocks.sort();
        assert_eq!(blocks.len(), 3);
        let all = crate::partition::all_partitions(4)
            .filter(|p| p.block(0) == [0])
            .filter(|p| {
                p.blocks().iter().all(|b| {
                    let mut inv: Vec<usize> = b.iter().map(|&c| [0, 3, 2, 1][c]).collect();
                    inv.sort();
                    p.contains_block(&inv)
                })
            })
            .count();
        assert_eq!(all, 3);
    }

    #[test]
    fn meet_on_cyclic_eight() {
        let g = FiniteGroup::cyclic(8).unwrap();
        let l = lattice(&g);
        let t = l.table().clone();
        let by3 = conj_theory(&t, &[(0..8).map(|k| k * 3 % 8).collect()]).unwrap();
        let by5 = conj_theory(&t, &[(0..8).map(|k| k * 5 % 8).collect()]).unwrap();
        assert!(l.index_of(&by3).is_some() && l.index_of(&by5).is_some());
        assert_eq!(sct_meet(&by3, &by5, &l).unwrap(), theory_m(&t));
        assert_eq!(sct_meet(&by3, l.maximum(), &l).unwrap(), by3);
        assert_eq!(sct_meet(&by3, l.minimum(), &l).unwrap(), theory_m(&t));
    }
}
