//! Products of supercharacter theories: the `*`-product over a normal
//! subgroup, the wedge product over a chain `N ≤ M`, and direct products.

use std::sync::Arc;

use crate::characters::CharacterTable;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::partition::Partition;
use crate::schur::{check_schur, SchurPartition};
use crate::sct::{is_sct_normal, validate_sct, NormalContext, SupercharacterTheory};

/// Context for `*`-products over a normal subgroup.
pub type StarContext = NormalContext;

fn precondition(msg: &str) -> Error {
    Error::Precondition(msg.into())
}

/// `C * D = (Y ∪ X^G − {Irr(G/N)}, K ∪ L̃ − {N})` for a `G`-invariant theory
/// `C` of `N` and a theory `D` of `G/N`.
pub fn star_product(
    c: &SupercharacterTheory,
    d: &SupercharacterTheory,
    ctx: &StarContext,
) -> Result<SupercharacterTheory> {
    if c.group() != ctx.normal_table().group() || d.group() != ctx.quotient_table().group() {
        return Err(Error::GroupMismatch);
    }
    if !ctx.is_g_invariant(c)? {
        return Err(precondition("theory of N is not G-invariant"));
    }
    let g = ctx.group();
    let mut classes: Vec<Vec<usize>> = c.classes().blocks().iter().map(|k| ctx.to_parent(k)).collect();
    classes.extend(
        d.classes()
            .blocks()
            .iter()
            .filter(|l| l[0] != 0)
            .map(|l| ctx.pullback(l)),
    );
    let mut chars: Vec<Vec<usize>> = d
        .chars()
        .blocks()
        .iter()
        .map(|y| y.iter().map(|&psi| ctx.lift()[psi]).collect())
        .collect();
    for x in c.chars().blocks().iter().filter(|x| x[0] != 0) {
        chars.push(ctx.induce_chars(x)?);
    }
    let e = validate_sct(
        ctx.table(),
        Partition::from_blocks(ctx.table().num_irr(), chars)?,
        Partition::from_blocks(g.order(), classes)?,
    )?;
    if e.len() != c.len() + d.len() - 1 {
        return Err(Error::Internal(
            "star product has the wrong number of superclasses".into(),
        ));
    }
    Ok(e)
}

/// Everything needed for wedge products over a chain `N ≤ M` of normal
/// subgroups of `G`, including one canonical copy of `M/N` on each side.
///
/// `C^{M/N}` lives on the quotient of the group of `M` by `N`; `D_{M/N}` lives
/// on the subgroup `M/N` of `G/N`. A coset `mN` of the former is identified
/// with the element `ρ(m)` of the latter.
#[derive(Clone, Debug)]
pub struct WedgeContext {
    lower: NormalContext,
    upper: NormalContext,
    inner: NormalContext,
    outer: NormalContext,
    identification: Vec<usize>,
}

impl WedgeContext {
    pub fn new(table: &Arc<CharacterTable>, n: &Subgroup, m: &Subgroup) -> Result<Self> {
        if !n.is_subset_of(m) {
            return Err(precondition("N is not contained in M"));
        }
        let lower = NormalContext::new(table, n)?;
        let upper = NormalContext::new(table, m)?;
        Self::from_contexts(lower, upper)
    }

    /// Reuses contexts for `(G, N)` and `(G, M)`.
    pub fn from_contexts(lower: NormalContext, upper: NormalContext) -> Result<Self> {
        if lower.table().group() != upper.table().group() {
            return Err(Error::GroupMismatch);
        }
        let (n, m) = (lower.normal(), upper.normal());
        if !n.is_subset_of(m) {
            return Err(precondition("N is not contained in M"));
        }
        let m_group = upper.normal_table().group();
        let n_in_m = m_group.subgroup(
            &n.members()
                .iter()
                .map(|&x| m.local_index(x).unwrap())
                .collect::<Vec<_>>(),
        )?;
        let inner = NormalContext::new(upper.normal_table(), &n_in_m)?;
        let q = lower.quotient();
        let mut image: Vec<usize> = m.members().iter().map(|&x| q.project(x)).collect();
        image.sort_unstable();
        image.dedup();
        let m_mod_n = q.group().subgroup(&image)?;
        let outer = NormalContext::new(lower.quotient_table(), &m_mod_n)?;
        let identification = inner
            .quotient()
            .cosets()
            .iter()
            .map(|coset| {
                let x = m.members()[coset[0]];
                m_mod_n.local_index(q.project(x)).expect("image of M")
            })
            .collect();
        Ok(WedgeContext {
            lower,
            upper,
            inner,
            outer,
            identification,
        })
    }

    /// `(G, N)`.
    pub fn lower(&self) -> &NormalContext {
        &self.lower
    }

    /// `(G, M)`.
    pub fn upper(&self) -> &NormalContext {
        &self.upper
    }

    /// `(M, N)`, used for `C^{M/N}`.
    pub fn inner(&self) -> &NormalContext {
        &self.inner
    }

    /// `(G/N, M/N)`, used for `D_{M/N}`.
    pub fn outer(&self) -> &NormalContext {
        &self.outer
    }

    /// Maps the element `mN` of `inner().quotient()` to its local index in
    /// `outer().normal()`.
    pub fn identification(&self) -> &[usize] {
        &self.identification
    }

    /// Whether `C^{M/N} = D_{M/N}` under the canonical identification.
    pub fn overlap_matches(&self, c: &SupercharacterTheory, d: &SupercharacterTheory) -> Result<bool> {
        let top = self.inner.deflate(c)?;
        let bottom = self.outer.restrict(d)?;
        let mapped = top
            .classes()
            .map_elements(&self.identification, self.identification.len())?;
        Ok(mapped == *bottom.classes())
    }

    /// Every superclass outside `M` is a union of `N`-cosets.
    pub fn coset_condition(&self, e: &SupercharacterTheory) -> bool {
        let g = self.lower.group();
        let (n, m) = (self.lower.normal(), self.upper.normal());
        (0..g.order()).filter(|&x| !m.contains(x)).all(|x| {
            n.members()
                .iter()
                .all(|&y| e.superclass_of(g.mul(x, y)) == e.superclass_of(x))
        })
    }
}

/// `C Δ D` for `C ∈ Sup_G(M)` and `D ∈ Sup(G/N)` with matching overlap on
/// `M/N`. The returned theory is checked to restrict to `C`, deflate to `D`,
/// and satisfy the coset condition.
pub fn wedge_product(
    c: &SupercharacterTheory,
    d: &SupercharacterTheory,
    w: &WedgeContext,
) -> Result<SupercharacterTheory> {
    let (lower, upper) = (&w.lower, &w.upper);
    if c.group() != upper.normal_table().group() || d.group() != lower.quotient_table().group() {
        return Err(Error::GroupMismatch);
    }
    if !is_sct_normal(c, w.inner.normal()) {
        return Err(precondition("N is not C-normal"));
    }
    if !is_sct_normal(d, w.outer.normal()) {
        return Err(precondition("M/N is not D-normal"));
    }
    if !upper.is_g_invariant(c)? {
        return Err(precondition("theory of M is not G-invariant"));
    }
    if !w.overlap_matches(c, d)? {
        return Err(precondition("C and D disagree on M/N"));
    }
    let g = lower.group();
    let in_m_mod_n = w.outer.normal().mask();
    let mut classes: Vec<Vec<usize>> = c.classes().blocks().iter().map(|k| upper.to_parent(k)).collect();
    classes.extend(
        d.classes()
            .blocks()
            .iter()
            .filter(|l| !l.iter().all(|&y| in_m_mod_n[y]))
            .map(|l| lower.pullback(l)),
    );
    let mut chars: Vec<Vec<usize>> = d
        .chars()
        .blocks()
        .iter()
        .map(|y| y.iter().map(|&psi| lower.lift()[psi]).collect())
        .collect();
    for x in c.chars().blocks() {
        if !x.iter().all(|&chi| w.inner.unlift(chi).is_some()) {
            chars.push(upper.induce_chars(x)?);
        }
    }
    let e = validate_sct(
        lower.table(),
        Partition::from_blocks(lower.table().num_irr(), chars)?,
        Partition::from_blocks(g.order(), classes)?,
    )?;
    if upper.restrict(&e)? != *c || lower.deflate(&e)? != *d || !w.coset_condition(&e) {
        return Err(Error::Internal("wedge product fails its defining properties".into()));
    }
    Ok(e)
}

/// If `E` is a wedge product over `N ≤ M`, its factors `(E_M, E^{G/N})`.
/// The factorization is multiplied back out and compared with `E`.
pub fn wedge_recognize(
    e: &SupercharacterTheory,
    w: &WedgeContext,
) -> Result<Option<(SupercharacterTheory, SupercharacterTheory)>> {
    if e.group() != w.lower.group() {
        return Err(Error::GroupMismatch);
    }
    if !is_sct_normal(e, w.lower.normal()) || !is_sct_normal(e, w.upper.normal()) {
        return Err(Error::NotSuperNormal);
    }
    if !w.coset_condition(e) {
        return Ok(None);
    }
    let c = w.upper.restrict(e)?;
    let d = w.lower.deflate(e)?;
    if wedge_product(&c, &d, w)? != *e {
        return Err(Error::Internal("wedge factorization does not multiply back".into()));
    }
    Ok(Some((c, d)))
}

/// Tables of `A`, `B`, and `A × B` with `Irr(A × B) = Irr(A) × Irr(B)`
/// matched by values. Element `(a, b)` has index `a·|B| + b`.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    left: Arc<CharacterTable>,
    right: Arc<CharacterTable>,
    table: Arc<CharacterTable>,
    pairs: Vec<Vec<usize>>,
}

impl DirectProduct {
    pub fn new(left: &Arc<CharacterTable>, right: &Arc<CharacterTable>) -> Result<Self> {
        let (a, b) = (left.group(), right.group());
        let g = a.direct_product(b)?;
        let table = CharacterTable::shared(&g)?;
        let nb = b.order();
        let pairs = (0..left.num_irr())
            .map(|i| {
                (0..right.num_irr())
                    .map(|j| {
                        let row: Vec<Cyclotomic> = (0..g.num_classes())
                            .map(|c| {
                                let x = g.class_rep(c);
                                left.value(i, a.class_of(x / nb)) * right.value(j, b.class_of(x % nb))
                            })
                            .collect();
                        table
                            .find_row(&row)
                            .ok_or_else(|| Error::Internal("product of irreducibles is not irreducible".into()))
                    })
                    .collect()
            })
            .collect::<Result<Vec<Vec<usize>>>>()?;
        Ok(DirectProduct {
            left: left.clone(),
            right: right.clone(),
            table,
            pairs,
        })
    }

    pub fn left(&self) -> &Arc<CharacterTable> {
        &self.left
    }

    pub fn right(&self) -> &Arc<CharacterTable> {
        &self.right
    }

    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    pub fn group(&self) -> &FiniteGroup {
        self.table.group()
    }

    /// Index of `φ_i × θ_j` in `Irr(A × B)`.
    pub fn char_pair(&self, i: usize, j: usize) -> usize {
        self.pairs[i][j]
    }

    pub fn element(&self, a: usize, b: usize) -> usize {
        a * self.right.group().order() + b
    }
}

fn product_blocks(left: &Partition, right: &Partition, width: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(left.len() * right.len());
    for k in left.blocks() {
        for l in right.blocks() {
            out.push(k.iter().flat_map(|&a| l.iter().map(move |&b| a * width + b)).collect());
        }
    }
    out
}

/// `C × D = ({X × Y}, {K × L})`.
pub fn direct_product(
    c: &SupercharacterTheory,
    d: &SupercharacterTheory,
    dp: &DirectProduct,
) -> Result<SupercharacterTheory> {
    if c.group() != dp.left.group() || d.group() != dp.right.group() {
        return Err(Error::GroupMismatch);
    }
    let classes = product_blocks(c.classes(), d.classes(), d.group().order());
    let mut chars = Vec::with_capacity(c.len() * d.len());
    for x in c.chars().blocks() {
        for y in d.chars().blocks() {
            chars.push(x.iter().flat_map(|&i| y.iter().map(move |&j| dp.pairs[i][j])).collect());
        }
    }
    let e = validate_sct(
        &dp.table,
        Partition::from_blocks(dp.table.num_irr(), chars)?,
        Partition::from_blocks(dp.group().order(), classes)?,
    )?;
    if e.len() != c.len() * d.len() {
        return Err(Error::Internal(
            "direct product has the wrong number of superclasses".into(),
        ));
    }
    Ok(e)
}

/// The Schur partition `{K × L}` of `A × B`.
pub fn sring_dot_product(a: &SchurPartition, b: &SchurPartition) -> Result<SchurPartition> {
    let g = a.group().direct_product(b.group())?;
    let blocks = product_blocks(a.blocks(), b.blocks(), b.group().order());
    check_schur(&g, &Partition::from_blocks(g.order(), blocks)?)
}
