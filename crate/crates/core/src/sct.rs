//! Supercharacter theories.
//!
//! A theory of `G` is a pair `(X, K)` with `X` a partition of `Irr(G)` and
//! `K` a partition of `G` such that `|X| = |K|`, `{1} ∈ K`, `{1_G} ∈ X`, and
//! each `σ_X = Σ_{ψ∈X} ψ(1)ψ` is constant on every block of `K`. Theories
//! are compared by their superclass partition, which determines the rest.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::characters::{CharacterTable, ClassFunction};
use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, QuotientStructure, Subgroup};
use crate::partition::{Partition, UnionFind};
use crate::schur::{check_schur, elements_to_classes, SchurPartition};

/// Why a pair of partitions is not a supercharacter theory.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum TheoryViolation {
    /// A partition is over the wrong ground set.
    GroundMismatch { part: String, expected: usize, got: usize },
    /// `{1}` is not a superclass.
    IdentityNotSuperclass { block: Vec<usize> },
    /// `{1_G}` is not a part of the character partition.
    TrivialNotSeparate { block: Vec<usize> },
    /// A superclass is not a union of conjugacy classes.
    NotClassUnion { block: Vec<usize> },
    /// `|X| ≠ |K|`.
    CountMismatch { chars: usize, classes: usize },
    /// `σ_X` takes different values at two elements of one superclass.
    SigmaNotConstant {
        chars: Vec<usize>,
        superclass: Vec<usize>,
        element_a: usize,
        element_b: usize,
    },
    /// A Schur partition with a block that is not a union of classes.
    NotCentral { block: Vec<usize> },
}

impl fmt::Display for TheoryViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoryViolation::GroundMismatch { part, expected, got } => {
                write!(f, "{part} partition covers {got} indices, expected {expected}")
            }
            TheoryViolation::IdentityNotSuperclass { block } => {
                write!(f, "the identity lies in the superclass {block:?}, not in {{1}}")
            }
            TheoryViolation::TrivialNotSeparate { block } => {
                write!(f, "the trivial character lies in the part {block:?}, not alone")
            }
            TheoryViolation::NotClassUnion { block } => {
                write!(f, "superclass {block:?} is not a union of conjugacy classes")
            }
            TheoryViolation::CountMismatch { chars, classes } => {
                write!(f, "{chars} character parts but {classes} superclasses")
            }
            TheoryViolation::SigmaNotConstant {
                chars,
                superclass,
                element_a,
                element_b,
            } => write!(
                f,
                "the supercharacter of {chars:?} differs at {element_a} and {element_b} inside superclass {superclass:?}"
            ),
            TheoryViolation::NotCentral { block } => {
                write!(f, "Schur block {block:?} is not a union of conjugacy classes")
            }
        }
    }
}

/// A validated supercharacter theory `(X, K)`.
#[derive(Clone)]
pub struct SupercharacterTheory {
    table: Arc<CharacterTable>,
    chars: Partition,
    classes: Partition,
    class_level: Partition,
}

impl PartialEq for SupercharacterTheory {
    fn eq(&self, other: &Self) -> bool {
        self.classes == other.classes && self.group() == other.group()
    }
}

impl Eq for SupercharacterTheory {}

impl Hash for SupercharacterTheory {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.classes.hash(state);
    }
}

impl PartialOrd for SupercharacterTheory {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: finer theories first, then by superclass partition.
impl Ord for SupercharacterTheory {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .len()
            .cmp(&self.len())
            .then_with(|| self.classes.cmp(&other.classes))
    }
}

impl fmt::Debug for SupercharacterTheory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Theory(K = {:?}, X = {:?})", self.classes, self.chars)
    }
}

impl SupercharacterTheory {
    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    pub fn group(&self) -> &FiniteGroup {
        self.table.group()
    }

    /// The partition `X` of `Irr(G)`.
    pub fn chars(&self) -> &Partition {
        &self.chars
    }

    /// The superclass partition `K` of `G`.
    pub fn classes(&self) -> &Partition {
        &self.classes
    }

    /// `K` as a partition of conjugacy-class indices.
    pub fn class_level(&self) -> &Partition {
        &self.class_level
    }

    /// Number of superclasses, `|C|`.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn superclass_of(&self, g: usize) -> usize {
        self.classes.block_of(g)
    }

    /// `σ_X` for the `i`-th part of `X`.
    pub fn supercharacter(&self, i: usize) -> ClassFunction {
        self.table.sigma(self.chars.block(i)).expect("parts are nonempty")
    }

    /// Whether `h` is a union of superclasses.
    pub fn is_normal_subgroup(&self, h: &Subgroup) -> bool {
        is_sct_normal(self, h)
    }
}

#[derive(Serialize)]
struct TheoryWireOut<'a> {
    group: String,
    classes: &'a [Vec<usize>],
    chars: &'a [Vec<usize>],
}

impl Serialize for SupercharacterTheory {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TheoryWireOut {
            group: self.group().fingerprint(),
            classes: self.classes.blocks(),
            chars: self.chars.blocks(),
        }
        .serialize(s)
    }
}

/// Unvalidated theory description as read from JSON.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TheoryDescription {
    #[serde(default)]
    pub group: Option<String>,
    pub classes: Vec<Vec<usize>>,
    #[serde(default)]
    pub chars: Option<Vec<Vec<usize>>>,
}

impl TheoryDescription {
    /// Validates against `table`. Without `chars`, the character partition
    /// is derived from the superclasses.
    pub fn into_theory(self, table: &Arc<CharacterTable>) -> Result<SupercharacterTheory> {
        let g = table.group();
        if let Some(fp) = &self.group {
            if *fp != g.fingerprint() {
                return Err(Error::GroupMismatch);
            }
        }
        let classes = Partition::from_blocks(g.order(), self.classes)?;
        match self.chars {
            Some(chars) => {
                let chars = Partition::from_blocks(table.num_irr(), chars)?;
                validate_sct(table, chars, classes)
            }
            None => from_classes(table, classes),
        }
    }
}

fn ground_check(part: &str, p: &Partition, expected: usize) -> Result<()> {
    if p.ground_size() != expected {
        return Err(TheoryViolation::GroundMismatch {
            part: part.into(),
            expected,
            got: p.ground_size(),
        }
        .into());
    }
    Ok(())
}

fn class_structure(g: &FiniteGroup, classes: &Partition) -> Result<Partition> {
    ground_check("class", classes, g.order())?;
    let first = classes.block(classes.block_of(0));
    if first.len() != 1 {
        return Err(TheoryViolation::IdentityNotSuperclass { block: first.to_vec() }.into());
    }
    if let Some(block) = classes.blocks().iter().find(|b| !g.classes().is_union_of_blocks(b)) {
        return Err(TheoryViolation::NotClassUnion { block: block.clone() }.into());
    }
    Ok(elements_to_classes(g, classes).expect("checked to be class unions"))
}

/// Validates `(chars, classes)` against the definition.
pub fn validate_sct(table: &Arc<CharacterTable>, chars: Partition, classes: Partition) -> Result<SupercharacterTheory> {
    let g = table.group();
    ground_check("character", &chars, table.num_irr())?;
    let class_level = class_structure(g, &classes)?;
    let trivial = chars.block(chars.block_of(0));
    if trivial.len() != 1 {
        return Err(TheoryViolation::TrivialNotSeparate {
            block: trivial.to_vec(),
        }
        .into());
    }
    if chars.len() != classes.len() {
        return Err(TheoryViolation::CountMismatch {
            chars: chars.len(),
            classes: classes.len(),
        }
        .into());
    }
    for x in chars.blocks() {
        let sigma = table.sigma(x)?;
        for block in class_level.blocks() {
            let first = &sigma.values()[block[0]];
            if let Some(&c) = block.iter().find(|&&c| sigma.values()[c] != *first) {
                let superclass = classes.block(classes.block_of(g.class_rep(block[0])));
                return Err(TheoryViolation::SigmaNotConstant {
                    chars: x.clone(),
                    superclass: superclass.to_vec(),
                    element_a: g.class_rep(block[0]),
                    element_b: g.class_rep(c),
                }
                .into());
            }
        }
    }
    Ok(SupercharacterTheory {
        table: table.clone(),
        chars,
        classes,
        class_level,
    })
}

/// Groups irreducibles by their central characters on the block sums:
/// `χ ∼ χ'` iff `ω_χ(K̂) = ω_χ'(K̂)` for every block `K`.
fn chars_from_class_level(table: &CharacterTable, class_level: &Partition) -> Partition {
    let mut seen: HashMap<Vec<Cyclotomic>, usize> = HashMap::new();
    let labels: Vec<usize> = (0..table.num_irr())
        .map(|chi| {
            let key: Vec<Cyclotomic> = class_level
                .blocks()
                .iter()
                .map(|b| table.central_character(chi, b))
                .collect();
            let next = seen.len();
            *seen.entry(key).or_insert(next)
        })
        .collect();
    Partition::from_labels(&labels)
}

/// The theory with superclasses `classes`, if there is one.
pub fn from_classes(table: &Arc<CharacterTable>, classes: Partition) -> Result<SupercharacterTheory> {
    let class_level = class_structure(table.group(), &classes)?;
    let chars = chars_from_class_level(table, &class_level);
    validate_sct(table, chars, classes)
}

/// The theory with character partition `chars`, if there is one: the
/// superclasses are the level sets of `g ↦ (σ_X(g))_X`.
pub fn from_chars(table: &Arc<CharacterTable>, chars: Partition) -> Result<SupercharacterTheory> {
    let g = table.group();
    ground_check("character", &chars, table.num_irr())?;
    let sigmas: Vec<ClassFunction> = chars.blocks().iter().map(|x| table.sigma(x)).collect::<Result<_>>()?;
    let mut seen: HashMap<Vec<&Cyclotomic>, usize> = HashMap::new();
    let class_labels: Vec<usize> = (0..g.num_classes())
        .map(|c| {
            let key: Vec<&Cyclotomic> = sigmas.iter().map(|s| s.on_class(c)).collect();
            let next = seen.len();
            *seen.entry(key).or_insert(next)
        })
        .collect();
    let labels: Vec<usize> = (0..g.order()).map(|x| class_labels[g.class_of(x)]).collect();
    validate_sct(table, chars, Partition::from_labels(&labels))
}

/// `(X, K) ↦ K` as a central Schur partition.
pub fn sct_to_sring(c: &SupercharacterTheory) -> Result<SchurPartition> {
    let s = check_schur(c.group(), &c.classes)
        .map_err(|e| Error::Internal(format!("superclasses of a valid theory fail the Schur check: {e}")))?;
    if !s.is_central() {
        return Err(Error::Internal(
            "superclasses of a valid theory are not class unions".into(),
        ));
    }
    Ok(s)
}

/// The theory whose superclasses are the blocks of a central Schur partition.
pub fn sring_to_sct(s: &SchurPartition, table: &Arc<CharacterTable>) -> Result<SupercharacterTheory> {
    if s.group() != table.group() {
        return Err(Error::GroupMismatch);
    }
    if !s.is_central() {
        let g = s.group();
        let block = s
            .blocks()
            .blocks()
            .iter()
            .find(|b| !g.classes().is_union_of_blocks(b))
            .expect("a non-central partition has a non-class-union block");
        return Err(TheoryViolation::NotCentral { block: block.clone() }.into());
    }
    from_classes(table, s.blocks().clone())
}

/// `m(G)`: irreducible characters and conjugacy classes.
pub fn theory_m(table: &Arc<CharacterTable>) -> SupercharacterTheory {
    let g = table.group();
    SupercharacterTheory {
        table: table.clone(),
        chars: Partition::singletons(table.num_irr()),
        classes: g.classes().clone(),
        class_level: Partition::singletons(g.num_classes()),
    }
}

/// `M(G)`: `{{1_G}, Irr(G) − {1_G}}` and `{{1}, G − {1}}`.
pub fn theory_big_m(table: &Arc<CharacterTable>) -> SupercharacterTheory {
    let g = table.group();
    SupercharacterTheory {
        table: table.clone(),
        chars: Partition::split_zero(table.num_irr()),
        classes: Partition::split_zero(g.order()),
        class_level: Partition::split_zero(g.num_classes()),
    }
}

/// Checks that each map is an automorphism of `g`.
pub fn check_automorphisms(g: &FiniteGroup, autos: &[Vec<usize>]) -> Result<()> {
    let n = g.order();
    for a in autos {
        let mut hit = vec![false; n];
        if a.len() != n || a.iter().any(|&x| x >= n || std::mem::replace(&mut hit[x], true)) {
            return Err(Error::InvalidInput(
                "action map is not a permutation of the group".into(),
            ));
        }
        for x in 0..n {
            for y in 0..n {
                if a[g.mul(x, y)] != g.mul(a[x], a[y]) {
                    return Err(Error::InvalidInput(format!(
                        "action map is not a homomorphism at ({x}, {y})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Index of `χ∘a` for every automorphism `a` (rows) and irreducible `χ`.
fn char_images(table: &CharacterTable, autos: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let g = table.group();
    autos
        .iter()
        .map(|a| {
            let class_map: Vec<usize> = (0..g.num_classes()).map(|c| g.class_of(a[g.class_rep(c)])).collect();
            (0..table.num_irr())
                .map(|chi| {
                    let row: Vec<Cyclotomic> = class_map.iter().map(|&c| table.value(chi, c).clone()).collect();
                    table
                        .find_row(&row)
                        .ok_or_else(|| Error::Internal("twisted character is not irreducible".into()))
                })
                .collect()
        })
        .collect()
}

/// Orbits of `Irr(H)` under a group of automorphisms given by generators.
pub fn character_orbits(table: &CharacterTable, autos: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    check_automorphisms(table.group(), autos)?;
    let images = char_images(table, autos)?;
    let mut uf = UnionFind::new(table.num_irr());
    for img in &images {
        for (chi, &t) in img.iter().enumerate() {
            uf.union(chi, t);
        }
    }
    let labels: Vec<usize> = (0..table.num_irr()).map(|x| uf.find(x)).collect();
    Ok(Partition::from_labels(&labels).blocks().to_vec())
}

/// `Conj_G(H)` for `G` acting on `H` through `autos`: character orbits and
/// the finest invariant unions of classes.
pub fn conj_theory(table: &Arc<CharacterTable>, autos: &[Vec<usize>]) -> Result<SupercharacterTheory> {
    let h = table.group();
    let orbits = character_orbits(table, autos)?;
    let mut uf = UnionFind::new(h.order());
    for x in 0..h.order() {
        uf.union(x, h.class_rep(h.class_of(x)));
        for a in autos {
            uf.union(x, a[x]);
        }
    }
    let labels: Vec<usize> = (0..h.order()).map(|x| uf.find(x)).collect();
    let chars = Partition::from_blocks(table.num_irr(), orbits)?;
    validate_sct(table, chars, Partition::from_labels(&labels))
}

/// Whether every superclass and every character part is stable under
/// `autos`. The two sides always agree for a valid theory; a disagreement is
/// reported as an internal error.
pub fn is_g_invariant(c: &SupercharacterTheory, autos: &[Vec<usize>]) -> Result<bool> {
    let h = c.group();
    check_automorphisms(h, autos)?;
    let classes_ok = autos
        .iter()
        .all(|a| (0..h.order()).all(|x| c.classes.block_of(a[x]) == c.classes.block_of(x)));
    let images = char_images(&c.table, autos)?;
    let chars_ok = images.iter().all(|img| {
        img.iter()
            .enumerate()
            .all(|(chi, &t)| c.chars.block_of(t) == c.chars.block_of(chi))
    });
    if classes_ok != chars_ok {
        return Err(Error::Internal("superclass and character invariance disagree".into()));
    }
    Ok(classes_ok)
}

/// Whether `h` is `C`-normal: a union of superclasses.
pub fn is_sct_normal(c: &SupercharacterTheory, h: &Subgroup) -> bool {
    h.parent() == c.group() && c.classes.is_union_of_blocks(h.members())
}

/// All subgroups that are unions of superclasses, sorted by `(order, members)`.
pub fn sct_normal_subgroups(c: &SupercharacterTheory) -> Vec<Subgroup> {
    c.group()
        .normal_subgroups()
        .into_iter()
        .filter(|n| is_sct_normal(c, n))
        .collect()
}

fn rational(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Everything needed to move theories between `G`, a normal subgroup `N`,
/// and `G/N`: both auxiliary character tables, the canonical quotient, the
/// identification of `Irr(G/N)` inside `Irr(G)` by lifted values, and the
/// restriction multiplicities `[χ_N, ψ]`.
#[derive(Clone)]
pub struct NormalContext {
    table: Arc<CharacterTable>,
    normal: Subgroup,
    normal_table: Arc<CharacterTable>,
    quotient: QuotientStructure,
    quotient_table: Arc<CharacterTable>,
    lift: Vec<usize>,
    unlift: Vec<Option<usize>>,
    restriction: Vec<Vec<usize>>,
    autos: Vec<Vec<usize>>,
    orbits: Vec<Vec<usize>>,
}

impl fmt::Debug for NormalContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NormalContext")
            .field("order", &self.table.group().order())
            .field("normal", &self.normal)
            .finish()
    }
}

impl NormalContext {
    pub fn new(table: &Arc<CharacterTable>, normal: &Subgroup) -> Result<Self> {
        let g = table.group();
        if normal.parent() != g {
            return Err(Error::GroupMismatch);
        }
        if !normal.is_normal() {
            return Err(Error::NotNormal);
        }
        let normal_table = CharacterTable::shared(&normal.to_group())?;
        let quotient = normal.quotient()?;
        let quotient_table = CharacterTable::shared(quotient.group())?;
        Self::from_parts(table, normal, normal_table, quotient, quotient_table)
    }

    /// Like [`new`](Self::new) but reuses already computed tables for `N` and `G/N`.
    pub fn from_parts(
        table: &Arc<CharacterTable>,
        normal: &Subgroup,
        normal_table: Arc<CharacterTable>,
        quotient: QuotientStructure,
        quotient_table: Arc<CharacterTable>,
    ) -> Result<Self> {
        let g = table.group();
        if *normal_table.group() != normal.to_group()
            || quotient.normal() != normal
            || quotient_table.group() != quotient.group()
        {
            return Err(Error::GroupMismatch);
        }
        let q = quotient.group();
        let class_image: Vec<usize> = (0..g.num_classes())
            .map(|c| q.class_of(quotient.project(g.class_rep(c))))
            .collect();
        let lift = (0..quotient_table.num_irr())
            .map(|psi| {
                let row: Vec<Cyclotomic> = class_image
                    .iter()
                    .map(|&c| quotient_table.value(psi, c).clone())
                    .collect();
                table
                    .find_row(&row)
                    .ok_or_else(|| Error::Internal("lifted quotient character is not irreducible".into()))
            })
            .collect::<Result<Vec<usize>>>()?;
        let mut unlift = vec![None; table.num_irr()];
        for (psi, &chi) in lift.iter().enumerate() {
            unlift[chi] = Some(psi);
        }
        let restriction = table.restriction_matrix(normal, &normal_table)?;
        let autos = normal.conjugation_automorphisms()?;
        let orbits = character_orbits(&normal_table, &autos)?;
        Ok(NormalContext {
            table: table.clone(),
            normal: normal.clone(),
            normal_table,
            quotient,
            quotient_table,
            lift,
            unlift,
            restriction,
            autos,
            orbits,
        })
    }

    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    pub fn group(&self) -> &FiniteGroup {
        self.table.group()
    }

    pub fn normal(&self) -> &Subgroup {
        &self.normal
    }

    pub fn normal_table(&self) -> &Arc<CharacterTable> {
        &self.normal_table
    }

    pub fn quotient(&self) -> &QuotientStructure {
        &self.quotient
    }

    pub fn quotient_table(&self) -> &Arc<CharacterTable> {
        &self.quotient_table
    }

    /// `lift()[ψ]` is the index in `Irr(G)` of the inflation of `ψ ∈ Irr(G/N)`.
    pub fn lift(&self) -> &[usize] {
        &self.lift
    }

    /// Inverse of [`lift`](Self::lift) on characters with `N` in the kernel.
    pub fn unlift(&self, chi: usize) -> Option<usize> {
        self.unlift[chi]
    }

    /// `[χ_N, ψ]` indexed `[χ][ψ]`.
    pub fn restriction_multiplicities(&self) -> &[Vec<usize>] {
        &self.restriction
    }

    /// Conjugation action of `G` on `N`, in local indices of `N`.
    pub fn automorphisms(&self) -> &[Vec<usize>] {
        &self.autos
    }

    /// `G`-orbits on `Irr(N)`.
    pub fn character_orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    /// Parent indices of a set of local indices of `N`.
    pub fn to_parent(&self, local: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = local.iter().map(|&i| self.normal.members()[i]).collect();
        out.sort_unstable();
        out
    }

    /// Preimage in `G` of a set of quotient elements.
    pub fn pullback(&self, cosets: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = cosets
            .iter()
            .flat_map(|&c| self.quotient.coset(c).iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// `f(Z)`: the irreducible constituents of `(σ_Z)_N`.
    pub fn f_set(&self, z: &[usize]) -> Vec<usize> {
        (0..self.normal_table.num_irr())
            .filter(|&psi| z.iter().any(|&chi| self.restriction[chi][psi] > 0))
            .collect()
    }

    /// `Z^G = ∪_{ψ∈Z} Irr(G|ψ)` for a `G`-invariant `Z ⊆ Irr(N)`.
    pub fn induce_chars(&self, z: &[usize]) -> Result<Vec<usize>> {
        for orbit in &self.orbits {
            let hit = orbit.iter().filter(|psi| z.contains(psi)).count();
            if hit != 0 && hit != orbit.len() {
                return Err(Error::InvalidInput("character set is not a union of G-orbits".into()));
            }
        }
        Ok((0..self.table.num_irr())
            .filter(|&chi| z.iter().any(|&psi| self.restriction[chi][psi] > 0))
            .collect())
    }

    /// `Conj_G(N)`.
    pub fn conj_theory(&self) -> Result<SupercharacterTheory> {
        conj_theory(&self.normal_table, &self.autos)
    }

    /// Whether a theory of `N` is invariant under conjugation by `G`.
    pub fn is_g_invariant(&self, c: &SupercharacterTheory) -> Result<bool> {
        if c.group() != self.normal_table.group() {
            return Err(Error::GroupMismatch);
        }
        is_g_invariant(c, &self.autos)
    }

    /// `m_N^G = Conj_G(N) * m(G/N)`: the classes of `G` inside `N` and the
    /// preimages of the nontrivial classes of `G/N`.
    pub fn m_ng(&self) -> Result<SupercharacterTheory> {
        let g = self.group();
        let q = self.quotient.group();
        let r = g.num_classes();
        let labels: Vec<usize> = (0..g.order())
            .map(|x| {
                if self.normal.contains(x) {
                    g.class_of(x)
                } else {
                    r + q.class_of(self.quotient.project(x))
                }
            })
            .collect();
        from_classes(&self.table, Partition::from_labels(&labels))
    }

    fn check_theory(&self, c: &SupercharacterTheory) -> Result<()> {
        if c.group() != self.group() {
            return Err(Error::GroupMismatch);
        }
        if !is_sct_normal(c, &self.normal) {
            return Err(Error::NotSuperNormal);
        }
        Ok(())
    }

    /// The distinct sets `f(X)`, `X ∈ X(C)`. They partition `Irr(N)`.
    pub fn f_sets(&self, c: &SupercharacterTheory) -> Result<Vec<Vec<usize>>> {
        self.check_theory(c)?;
        let mut sets: Vec<Vec<usize>> = Vec::new();
        for x in c.chars.blocks() {
            let f = self.f_set(x);
            match sets.iter().find(|s| s.iter().any(|p| f.contains(p))) {
                Some(s) if *s == f => {}
                Some(s) => {
                    return Err(Error::Internal(format!(
                        "constituent sets {s:?} and {f:?} overlap without being equal"
                    )))
                }
                None => sets.push(f),
            }
        }
        if sets.iter().map(Vec::len).sum::<usize>() != self.normal_table.num_irr() {
            return Err(Error::Internal("constituent sets do not cover Irr(N)".into()));
        }
        Ok(sets)
    }

    /// `C_N = ({f(X)}, {K ∈ K : K ⊆ N})`, a theory of `N` in local indices.
    pub fn restrict(&self, c: &SupercharacterTheory) -> Result<SupercharacterTheory> {
        let chars = Partition::from_blocks(self.normal_table.num_irr(), self.f_sets(c)?)?;
        let classes: Vec<Vec<usize>> = c
            .classes
            .blocks_within(self.normal.mask())
            .map(|b| {
                b.iter()
                    .map(|&x| self.normal.local_index(x).expect("inside N"))
                    .collect()
            })
            .collect();
        let classes = Partition::from_blocks(self.normal.order(), classes)?;
        validate_sct(&self.normal_table, chars, classes)
    }

    /// `C^{G/N} = ({X ∈ X : X ⊆ Irr(G/N)}, {KN/N : K ∈ K})`.
    pub fn deflate(&self, c: &SupercharacterTheory) -> Result<SupercharacterTheory> {
        self.check_theory(c)?;
        let k = self.quotient.group().order();
        let mut images: Vec<Vec<usize>> = Vec::new();
        let mut owner = vec![usize::MAX; k];
        for block in c.classes.blocks() {
            let mut img: Vec<usize> = block.iter().map(|&x| self.quotient.project(x)).collect();
            img.sort_unstable();
            img.dedup();
            match owner[img[0]] {
                usize::MAX => {
                    if img.iter().any(|&y| owner[y] != usize::MAX) {
                        return Err(Error::Internal("superclass images overlap without being equal".into()));
                    }
                    for &y in &img {
                        owner[y] = images.len();
                    }
                    images.push(img);
                }
                i if images[i] == img => {}
                _ => return Err(Error::Internal("superclass images overlap without being equal".into())),
            }
        }
        let chars: Vec<Vec<usize>> = c
            .chars
            .blocks()
            .iter()
            .filter(|x| x.iter().all(|&chi| self.unlift[chi].is_some()))
            .map(|x| x.iter().map(|&chi| self.unlift[chi].unwrap()).collect())
            .collect();
        let chars = Partition::from_blocks(self.quotient_table.num_irr(), chars)?;
        let classes = Partition::from_blocks(k, images)?;
        validate_sct(&self.quotient_table, chars, classes)
    }

    /// Scales a class function of `N` by `[G:N]`.
    pub fn index_scale(&self, f: &ClassFunction) -> ClassFunction {
        f.scale(&rational(self.normal.index()))
    }
}

/// `C ∨ D` for theories of the same group.
pub fn sct_join(c: &SupercharacterTheory, d: &SupercharacterTheory) -> Result<SupercharacterTheory> {
    if c.group() != d.group() {
        return Err(Error::GroupMismatch);
    }
    validate_sct(&c.table, c.chars.join(&d.chars), c.classes.join(&d.classes))
}

/// `C ≤ D`: every superclass of `C` lies in a superclass of `D`. The same
/// comparison on character partitions is made and must agree.
pub fn sct_leq(c: &SupercharacterTheory, d: &SupercharacterTheory) -> Result<bool> {
    if c.group() != d.group() {
        return Err(Error::GroupMismatch);
    }
    let by_classes = c.class_level.refines(&d.class_level);
    let by_chars = c.chars.refines(&d.chars);
    if by_classes != by_chars {
        return Err(Error::Internal("character and superclass orders disagree".into()));
    }
    Ok(by_classes)
}
