#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use supercharacters::lattice::enumerate_sup;
use supercharacters::partition::{all_partitions, Partition};
use supercharacters::products::WedgeContext;
use supercharacters::{CharacterTable, Cyclotomic, FiniteGroup, Rational, Subgroup, SupercharacterTheory};

pub fn group(spec: &str) -> FiniteGroup {
    supercharacters::GroupSpec::parse_shorthand(spec)
        .unwrap()
        .build()
        .unwrap()
}

pub fn table(spec: &str) -> Arc<CharacterTable> {
    CharacterTable::shared(&group(spec)).unwrap()
}

/// The groups every criterion is checked on.
pub fn test_set() -> Vec<&'static str> {
    vec![
        "cyclic:1",
        "cyclic:2",
        "cyclic:3",
        "cyclic:4",
        "cyclic:5",
        "cyclic:6",
        "cyclic:7",
        "cyclic:8",
        "cyclic:9",
        "cyclic:10",
        "cyclic:11",
        "cyclic:12",
        "symmetric:3",
        "symmetric:4",
        "dihedral:4",
        "dihedral:5",
        "quaternion",
        "cyclic:2xcyclic:2xcyclic:2",
        "symmetric:3xcyclic:2",
    ]
}

/// Values of `σ_X` on each class, computed straight from the table rows.
pub fn sigma_on_classes(t: &CharacterTable, x: &[usize]) -> Vec<Cyclotomic> {
    (0..t.group().num_classes())
        .map(|c| {
            x.iter()
                .map(|&psi| t.value(psi, c).scale(&Rational::from_integer(t.degree(psi).into())))
                .sum()
        })
        .collect()
}

/// Replaces each value by a small integer id, equal ids for equal values.
pub fn value_ids(values: &[Cyclotomic]) -> Vec<usize> {
    let mut seen: Vec<&Cyclotomic> = Vec::new();
    values
        .iter()
        .map(|v| match seen.iter().position(|s| *s == v) {
            Some(i) => i,
            None => {
                seen.push(v);
                seen.len() - 1
            }
        })
        .collect()
}

/// Direct check of the definition on class-level partitions: `{1}` and
/// `{1_G}` are parts, the part counts agree and every `σ_X` is constant on
/// every part of `k`.
pub fn is_theory_on_classes(x: &Partition, k: &Partition, sigma_ids: &HashMap<Vec<usize>, Vec<usize>>) -> bool {
    if x.len() != k.len() || x.block(x.block_of(0)) != [0] || k.block(k.block_of(0)) != [0] {
        return false;
    }
    x.blocks().iter().all(|xb| {
        let ids = &sigma_ids[xb];
        k.blocks().iter().all(|kb| kb.iter().all(|&c| ids[c] == ids[kb[0]]))
    })
}

/// Every pair (class partition, character partition) satisfying the
/// definition, found by exhaustive search. Class partitions are returned.
pub fn brute_force_theories(t: &CharacterTable) -> Vec<(Partition, Partition)> {
    let r = t.group().num_classes();
    let char_parts: Vec<Partition> = all_partitions(r).filter(|p| p.block(0) == [0]).collect();
    let mut sigma_ids = HashMap::new();
    for x in &char_parts {
        for b in x.blocks() {
            sigma_ids
                .entry(b.clone())
                .or_insert_with(|| value_ids(&sigma_on_classes(t, b)));
        }
    }
    let mut out = Vec::new();
    for k in all_partitions(r) {
        for x in &char_parts {
            if is_theory_on_classes(x, &k, &sigma_ids) {
                out.push((k.clone(), x.clone()));
            }
        }
    }
    out
}

pub fn class_partition_to_elements(g: &FiniteGroup, k: &Partition) -> Partition {
    let labels: Vec<usize> = (0..g.order()).map(|x| k.block_of(g.class_of(x))).collect();
    Partition::from_labels(&labels)
}

pub fn q(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

/// Rank over the rationals by Gaussian elimination.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for v in m[r].iter_mut() {
            *v = &*v / &pivot;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

/// Indicator vectors of the blocks of an element partition.
pub fn block_sums(p: &Partition) -> Vec<Vec<Rational>> {
    p.blocks()
        .iter()
        .map(|b| {
            let mut v = vec![Rational::zero(); p.ground_size()];
            for &x in b {
                v[x] = Rational::one();
            }
            v
        })
        .collect()
}

pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    let mut ext = basis.to_vec();
    ext.push(v.to_vec());
    rank(&ext) == rank(basis)
}

/// Whether `span{M̂} = span{K̂} ∩ span{L̂}`, via
/// `dim(A ∩ B) = dim A + dim B − dim(A + B)` and containment.
pub fn span_is_intersection(m: &Partition, k: &Partition, l: &Partition) -> bool {
    let (mv, kv, lv) = (block_sums(m), block_sums(k), block_sums(l));
    let mut sum = kv.clone();
    sum.extend(lv.iter().cloned());
    let dim_cap = rank(&kv) + rank(&lv) - rank(&sum);
    rank(&mv) == dim_cap && mv.iter().all(|v| in_span(&kv, v) && in_span(&lv, v))
}

/// Product of two integer vectors in the group algebra.
pub fn algebra_mul(g: &FiniteGroup, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); g.order()];
    for (x, ax) in a.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (y, by) in b.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            out[g.mul(x, y)] += ax * by;
        }
    }
    out
}

/// Schur ring test by linear algebra: `{1}` is a block, blocks are permuted
/// by inversion and the span of the block sums is closed under products.
pub fn is_schur_by_span(g: &FiniteGroup, p: &Partition) -> bool {
    if p.block(p.block_of(0)) != [0] {
        return false;
    }
    for b in p.blocks() {
        let mut inv: Vec<usize> = b.iter().map(|&x| g.inv(x)).collect();
        inv.sort_unstable();
        if !p.contains_block(&inv) {
            return false;
        }
    }
    let basis = block_sums(p);
    basis
        .iter()
        .all(|a| basis.iter().all(|b| in_span(&basis, &algebra_mul(g, a, b))))
}

/// Checks a theory against the definition using only the table rows.
pub fn satisfies_definition(t: &CharacterTable, chars: &Partition, classes: &Partition) -> bool {
    let g = t.group();
    if chars.len() != classes.len()
        || chars.block(chars.block_of(0)) != [0]
        || classes.block(classes.block_of(0)) != [0]
    {
        return false;
    }
    chars.blocks().iter().all(|x| {
        let s = sigma_on_classes(t, x);
        classes
            .blocks()
            .iter()
            .all(|k| k.iter().all(|&e| s[g.class_of(e)] == s[g.class_of(k[0])]))
    })
}

/// Whether conjugation by every element of `g` fixes each block of a
/// partition of the subgroup `h` given in local indices.
pub fn conjugation_invariant(g: &FiniteGroup, h: &Subgroup, local: &Partition) -> bool {
    (0..g.order()).all(|x| {
        local.blocks().iter().all(|b| {
            let mut img: Vec<usize> = b
                .iter()
                .map(|&i| h.local_index(g.conjugate(h.members()[i], x)).unwrap())
                .collect();
            img.sort_unstable();
            img == *b
        })
    })
}

/// Superclasses inside `h`, in local indices; `None` if `h` is not a union of them.
pub fn restrict_classes(classes: &Partition, h: &Subgroup) -> Option<Partition> {
    let mut blocks = Vec::new();
    for b in classes.blocks() {
        let inside = b.iter().filter(|&&x| h.contains(x)).count();
        if inside == b.len() {
            blocks.push(b.iter().map(|&x| h.local_index(x).unwrap()).collect());
        } else if inside != 0 {
            return None;
        }
    }
    Partition::from_blocks(h.order(), blocks).ok()
}

/// Images of the superclasses in a quotient; `None` if they overlap
/// without coinciding.
pub fn project_classes(classes: &Partition, q: &supercharacters::QuotientStructure) -> Option<Partition> {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for b in classes.blocks() {
        let mut img: Vec<usize> = b.iter().map(|&x| q.project(x)).collect();
        img.sort_unstable();
        img.dedup();
        if !blocks.contains(&img) {
            blocks.push(img);
        }
    }
    Partition::from_blocks(q.group().order(), blocks).ok()
}

/// `G`-invariant theories of a normal subgroup, as an enumerated list of the
/// subgroup's theories filtered by a direct conjugation check.
pub fn invariant_theories(g: &FiniteGroup, n: &Subgroup, nt: &Arc<CharacterTable>) -> Vec<SupercharacterTheory> {
    enumerate_sup(nt)
        .unwrap()
        .theories()
        .iter()
        .filter(|c| conjugation_invariant(g, n, c.classes()))
        .cloned()
        .collect()
}

pub fn chains(g: &FiniteGroup) -> Vec<(Subgroup, Subgroup)> {
    let normals = g.normal_subgroups();
    let mut out = Vec::new();
    for n in &normals {
        for m in &normals {
            let proper = |a: &Subgroup, b: &Subgroup| a.is_subset_of(b) && a.order() < b.order();
            if n.order() > 1 && proper(n, m) && m.order() < g.order() {
                out.push((n.clone(), m.clone()));
            }
        }
    }
    out
}

/// Theories `F` of `G` with `N, M` both `F`-normal, `F_M = C`,
/// `F^{G/N} = D` and every superclass outside `M` a union of `N`-cosets.
pub fn competitors<'a>(
    lattice: &'a [SupercharacterTheory],
    w: &WedgeContext,
    c: &SupercharacterTheory,
    d: &SupercharacterTheory,
) -> Vec<&'a SupercharacterTheory> {
    let g = w.lower().group();
    let (n, m) = (w.lower().normal(), w.upper().normal());
    lattice
        .iter()
        .filter(|f| {
            restrict_classes(f.classes(), m).as_ref() == Some(c.classes())
                && restrict_classes(f.classes(), n).is_some()
                && project_classes(f.classes(), w.lower().quotient()).as_ref() == Some(d.classes())
                && (0..g.order()).filter(|&x| !m.contains(x)).all(|x| {
                    n.members()
                        .iter()
                        .all(|&y| f.superclass_of(g.mul(x, y)) == f.superclass_of(x))
                })
        })
        .collect()
}
