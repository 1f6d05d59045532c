//! Character tables, class functions and group-algebra elements.

mod dixon;

use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

pub use dixon::{dixon_prime, least_primitive_root};

use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

fn ratio(p: usize, q: usize) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Exact irreducible characters of a group, stored class-wise.
///
/// Row 0 is the trivial character; the remaining rows are sorted by degree
/// and then by their canonical value vectors. Columns follow the group's
/// canonical class order.
#[derive(Clone)]
pub struct CharacterTable {
    group: FiniteGroup,
    values: Vec<Vec<Cyclotomic>>,
    degrees: Vec<usize>,
    prime: u64,
    root: u64,
}

impl std::fmt::Debug for CharacterTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CharacterTable")
            .field("order", &self.group.order())
            .field("degrees", &self.degrees)
            .finish()
    }
}

impl CharacterTable {
    /// Computes the table with the Burnside–Dixon algorithm.
    pub fn compute(group: &FiniteGroup) -> Result<Self> {
        let out = dixon::dixon(group)?;
        let mut rows: Vec<(usize, Vec<Cyclotomic>)> = out.degrees.into_iter().zip(out.rows).collect();
        let one = Cyclotomic::one();
        rows.sort_by(|a, b| {
            let ta = a.1.iter().all(|v| *v == one);
            let tb = b.1.iter().all(|v| *v == one);
            tb.cmp(&ta).then(a.0.cmp(&b.0)).then(a.1.cmp(&b.1))
        });
        let (degrees, values) = rows.into_iter().unzip();
        Ok(CharacterTable {
            group: group.clone(),
            values,
            degrees,
            prime: out.prime,
            root: out.root,
        })
    }

    /// Shared handle, the form most of the library consumes.
    pub fn shared(group: &FiniteGroup) -> Result<Arc<Self>> {
        Self::compute(group).map(Arc::new)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn num_irr(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, chi: usize, class: usize) -> &Cyclotomic {
        &self.values[chi][class]
    }

    pub fn row(&self, chi: usize) -> &[Cyclotomic] {
        &self.values[chi]
    }

    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.values
    }

    pub fn degree(&self, chi: usize) -> usize {
        self.degrees[chi]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// The prime used for the modular computation.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// Least primitive root modulo [`prime`](Self::prime).
    pub fn primitive_root(&self) -> u64 {
        self.root
    }

    /// Character `chi` as a class function.
    pub fn character(&self, chi: usize) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            values: self.values[chi].clone(),
        }
    }

    /// Row index of a class-wise value vector, if it is irreducible.
    pub fn find_row(&self, values: &[Cyclotomic]) -> Option<usize> {
        self.values.iter().position(|r| r.as_slice() == values)
    }

    /// `σ_X = Σ_{ψ∈X} ψ(1)ψ`.
    pub fn sigma(&self, chars: &[usize]) -> Result<ClassFunction> {
        if chars.is_empty() {
            return Err(Error::InvalidInput("σ of an empty character set".into()));
        }
        let r = self.group.num_classes();
        let values = (0..r)
            .map(|c| {
                chars
                    .iter()
                    .map(|&i| self.values[i][c].scale(&Rational::from_integer(BigInt::from(self.degrees[i]))))
                    .sum()
            })
            .collect();
        Ok(ClassFunction {
            group: self.group.clone(),
            values,
        })
    }

    /// `e_χ = χ(1)/|G| Σ_g conj(χ(g)) g`.
    pub fn central_idempotent(&self, chi: usize) -> GroupAlgebraElement {
        let g = &self.group;
        let factor = ratio(self.degrees[chi], g.order());
        let per_class: Vec<Cyclotomic> = self.values[chi].iter().map(|v| v.conj().scale(&factor)).collect();
        GroupAlgebraElement {
            group: g.clone(),
            coeffs: (0..g.order()).map(|x| per_class[g.class_of(x)].clone()).collect(),
        }
    }

    /// `f_X = Σ_{ψ∈X} e_ψ = 1/|G| Σ_g conj(σ_X(g)) g`.
    pub fn f_of(&self, chars: &[usize]) -> Result<GroupAlgebraElement> {
        let sigma = self.sigma(chars)?;
        let g = &self.group;
        let factor = ratio(1, g.order());
        let per_class: Vec<Cyclotomic> = sigma.values.iter().map(|v| v.conj().scale(&factor)).collect();
        Ok(GroupAlgebraElement {
            group: g.clone(),
            coeffs: (0..g.order()).map(|x| per_class[g.class_of(x)].clone()).collect(),
        })
    }

    /// Central character `ω_χ(K̂) = Σ_{classes C ⊆ K} |C| χ(C) / χ(1)` of a
    /// union of classes.
    pub fn central_character(&self, chi: usize, classes: &[usize]) -> Cyclotomic {
        let g = &self.group;
        let sum: Cyclotomic = classes
            .iter()
            .map(|&c| self.values[chi][c].scale(&Rational::from_integer(BigInt::from(g.class_size(c)))))
            .sum();
        sum.scale(&ratio(1, self.degrees[chi]))
    }

    /// Multiplicities `[χ_N, ψ]` for every `χ ∈ Irr(G)` (rows) and
    /// `ψ ∈ Irr(N)` (columns).
    pub fn restriction_matrix(&self, sub: &Subgroup, sub_table: &CharacterTable) -> Result<Vec<Vec<usize>>> {
        check_subtable(&self.group, sub, sub_table)?;
        (0..self.num_irr())
            .map(|chi| {
                let res = restrict_classfn(&self.character(chi), sub, sub_table)?;
                (0..sub_table.num_irr())
                    .map(|psi| {
                        let ip = inner_product(&res, &sub_table.character(psi))?;
                        ip.as_i64().filter(|&m| m >= 0).map(|m| m as usize).ok_or_else(|| {
                            Error::Internal(format!("restriction multiplicity {ip} is not a natural number"))
                        })
                    })
                    .collect()
            })
            .collect()
    }
}

fn check_subtable(g: &FiniteGroup, sub: &Subgroup, sub_table: &CharacterTable) -> Result<()> {
    if sub.parent() != g || sub_table.group().order() != sub.order() || *sub_table.group() != sub.to_group() {
        return Err(Error::GroupMismatch);
    }
    Ok(())
}

/// A function constant on conjugacy classes, stored class-wise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassFunction {
    group: FiniteGroup,
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(group: &FiniteGroup, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != group.num_classes() {
            return Err(Error::InvalidInput(format!(
                "class function needs {} values, got {}",
                group.num_classes(),
                values.len()
            )));
        }
        Ok(ClassFunction {
            group: group.clone(),
            values,
        })
    }

    /// Class function from element-wise values, which must be class-constant.
    pub fn from_element_values(group: &FiniteGroup, values: &[Cyclotomic]) -> Result<Self> {
        if values.len() != group.order() {
            return Err(Error::InvalidInput("one value per group element expected".into()));
        }
        for block in group.classes().blocks() {
            if block.iter().any(|&x| values[x] != values[block[0]]) {
                return Err(Error::InvalidInput(
                    "values are not constant on conjugacy classes".into(),
                ));
            }
        }
        let classwise = group.classes().blocks().iter().map(|b| values[b[0]].clone()).collect();
        Ok(ClassFunction {
            group: group.clone(),
            values: classwise,
        })
    }

    pub fn constant(group: &FiniteGroup, value: Cyclotomic) -> Self {
        ClassFunction {
            group: group.clone(),
            values: vec![value; group.num_classes()],
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn on_class(&self, c: usize) -> &Cyclotomic {
        &self.values[c]
    }

    pub fn at(&self, g: usize) -> &Cyclotomic {
        &self.values[self.group.class_of(g)]
    }

    pub fn scale(&self, r: &Rational) -> Self {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.scale(r)).collect(),
        }
    }

    pub fn add(&self, other: &ClassFunction) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }
}

/// `[φ, θ] = 1/|G| Σ_g φ(g) conj(θ(g))`.
pub fn inner_product(phi: &ClassFunction, theta: &ClassFunction) -> Result<Cyclotomic> {
    if phi.group != theta.group {
        return Err(Error::GroupMismatch);
    }
    let g = &phi.group;
    let sum: Cyclotomic = (0..g.num_classes())
        .map(|c| {
            (&phi.values[c] * &theta.values[c].conj()).scale(&Rational::from_integer(BigInt::from(g.class_size(c))))
        })
        .sum();
    Ok(sum.scale(&ratio(1, g.order())))
}

/// `φ_H`: restriction to a subgroup, expressed on the classes of `sub_table`'s group.
pub fn restrict_classfn(phi: &ClassFunction, sub: &Subgroup, sub_table: &CharacterTable) -> Result<ClassFunction> {
    check_subtable(&phi.group, sub, sub_table)?;
    let h = sub_table.group();
    let values = (0..h.num_classes())
        .map(|c| phi.at(sub.members()[h.class_rep(c)]).clone())
        .collect();
    Ok(ClassFunction {
        group: h.clone(),
        values,
    })
}

/// Ordinary induction `φ^G(x) = 1/|H| Σ_{g∈G} φ⁰(g x g⁻¹)` of a class
/// function on the group of `sub` (local indices).
pub fn induce_classfn(phi: &ClassFunction, sub: &Subgroup) -> Result<ClassFunction> {
    let g = sub.parent();
    if phi.group.order() != sub.order() || phi.group != sub.to_group() {
        return Err(Error::GroupMismatch);
    }
    let values = (0..g.num_classes())
        .map(|c| {
            let x = g.class_rep(c);
            let sum: Cyclotomic = (0..g.order())
                .filter_map(|h| {
                    let y = g.conjugate(x, h);
                    sub.local_index(y).map(|i| phi.at(i).clone())
                })
                .sum();
            sum.scale(&ratio(1, sub.order()))
        })
        .collect();
    Ok(ClassFunction {
        group: g.clone(),
        values,
    })
}

/// `Irr(G|ψ) = {χ : [χ_N, ψ] > 0}`.
pub fn irr_over(
    table: &CharacterTable,
    sub_table: &CharacterTable,
    normal: &Subgroup,
    psi: usize,
) -> Result<Vec<usize>> {
    if !normal.is_normal() {
        return Err(Error::NotNormal);
    }
    let m = table.restriction_matrix(normal, sub_table)?;
    Ok((0..table.num_irr()).filter(|&chi| m[chi][psi] > 0).collect())
}

/// Orbits of `Irr(N)` under conjugation by `G`, as sorted index sets.
pub fn conjugation_orbits(sub_table: &CharacterTable, normal: &Subgroup) -> Result<Vec<Vec<usize>>> {
    let autos = normal.conjugation_automorphisms()?;
    crate::sct::character_orbits(sub_table, &autos)
}

/// `Z^G = ∪_{ψ∈Z} Irr(G|ψ)` for a `G`-invariant set `Z ⊆ Irr(N)`.
pub fn induce_char_part(
    table: &CharacterTable,
    sub_table: &CharacterTable,
    normal: &Subgroup,
    z: &[usize],
) -> Result<Vec<usize>> {
    if !normal.is_normal() {
        return Err(Error::NotNormal);
    }
    let orbits = conjugation_orbits(sub_table, normal)?;
    for orbit in &orbits {
        let hit = orbit.iter().filter(|psi| z.contains(psi)).count();
        if hit != 0 && hit != orbit.len() {
            return Err(Error::InvalidInput("character set is not a union of G-orbits".into()));
        }
    }
    let m = table.restriction_matrix(normal, sub_table)?;
    Ok((0..table.num_irr())
        .filter(|&chi| z.iter().any(|&psi| m[chi][psi] > 0))
        .collect())
}

/// Element of the group algebra `C[G]` with exact coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement {
    group: FiniteGroup,
    coeffs: Vec<Cyclotomic>,
}

impl GroupAlgebraElement {
    pub fn new(group: &FiniteGroup, coeffs: Vec<Cyclotomic>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::InvalidInput("one coefficient per element expected".into()));
        }
        Ok(GroupAlgebraElement {
            group: group.clone(),
            coeffs,
        })
    }

    pub fn zero(group: &FiniteGroup) -> Self {
        GroupAlgebraElement {
            group: group.clone(),
            coeffs: vec![Cyclotomic::zero(); group.order()],
        }
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        let mut e = Self::zero(group);
        e.coeffs[0] = Cyclotomic::one();
        e
    }

    /// `K̂ = Σ_{g∈K} g`.
    pub fn subset_sum(group: &FiniteGroup, subset: &[usize]) -> Self {
        let mut e = Self::zero(group);
        for &x in subset {
            e.coeffs[x] = Cyclotomic::one();
        }
        e
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn coeffs(&self) -> &[Cyclotomic] {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> &Cyclotomic {
        &self.coeffs[g]
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(GroupAlgebraElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let g = &self.group;
        let mut acc: Vec<Vec<Cyclotomic>> = vec![Vec::new(); g.order()];
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in other.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    acc[g.mul(a, b)].push(x * y);
                }
            }
        }
        Ok(GroupAlgebraElement {
            group: g.clone(),
            coeffs: acc.into_iter().map(|terms| terms.into_iter().sum()).collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Cyclotomic::is_zero)
    }

    /// Coefficients constant on conjugacy classes.
    pub fn is_central(&self) -> bool {
        let g = &self.group;
        (0..g.order()).all(|x| self.coeffs[x] == self.coeffs[g.class_rep(g.class_of(x))])
    }
}

#[derive(Serialize)]
struct TableWire<'a> {
    group: String,
    order: usize,
    prime: u64,
    primitive_root: u64,
    class_sizes: Vec<usize>,
    class_representatives: Vec<usize>,
    degrees: &'a [usize],
    values: &'a [Vec<Cyclotomic>],
}

impl Serialize for CharacterTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let g = &self.group;
        TableWire {
            group: g.fingerprint(),
            order: g.order(),
            prime: self.prime,
            primitive_root: self.root,
            class_sizes: (0..g.num_classes()).map(|c| g.class_size(c)).collect(),
            class_representatives: (0..g.num_classes()).map(|c| g.class_rep(c)).collect(),
            degrees: &self.degrees,
            values: &self.values,
        }
        .serialize(s)
    }
}

/// Sum of squared degrees; equals `|G|` for a complete table.
pub fn degree_square_sum(table: &CharacterTable) -> usize {
    table.degrees.iter().map(|d| d * d).sum()
}

/// Row and column orthogonality, checked exactly.
pub fn check_orthogonality(table: &CharacterTable) -> Result<()> {
    let g = &table.group;
    let r = table.num_irr();
    if r != g.num_classes() {
        return Err(Error::Internal("table is not square".into()));
    }
    for i in 0..r {
        for j in i..r {
            let ip = inner_product(&table.character(i), &table.character(j))?;
            let expect = if i == j { 1 } else { 0 };
            if ip.as_i64() != Some(expect) {
                return Err(Error::Internal(format!("rows {i} and {j} have inner product {ip}")));
            }
        }
    }
    for a in 0..r {
        for b in 0..r {
            let s: Cyclotomic = (0..r).map(|i| table.value(i, a) * &table.value(i, b).conj()).sum();
            let expect = if a == b {
                Cyclotomic::from_rational(ratio(g.order(), g.class_size(a)))
            } else {
                Cyclotomic::zero()
            };
            if s != expect {
                return Err(Error::Internal(format!("columns {a} and {b} fail orthogonality")));
            }
        }
    }
    if !table.values[0].iter().all(|v| *v == Cyclotomic::one()) || table.degrees[0] != 1 {
        return Err(Error::Internal("row 0 is not the trivial character".into()));
    }
    Ok(())
}

impl ClassFunction {
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_zero)
    }
}
