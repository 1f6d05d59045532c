//! Superinduction of functions from a subgroup.
//!
//! For a theory `C` of `G`, a subgroup `H` and any `φ: H → C`,
//! `φ^(G)(x) = [G:H]·1/|[x]|·Σ_{y∈[x]} φ⁰(y)` where `[x]` is the superclass
//! of `x` and `φ⁰` extends `φ` by zero.

use num_bigint::BigInt;

use crate::characters::ClassFunction;
use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::sct::{is_sct_normal, SupercharacterTheory};

fn ratio(p: usize, q: usize) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// A function constant on the superclasses of a theory, stored per superclass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperclassFunction {
    theory: SupercharacterTheory,
    values: Vec<Cyclotomic>,
}

impl SuperclassFunction {
    pub fn new(theory: &SupercharacterTheory, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != theory.len() {
            return Err(Error::InvalidInput(format!(
                "superclass function needs {} values, got {}",
                theory.len(),
                values.len()
            )));
        }
        Ok(SuperclassFunction {
            theory: theory.clone(),
            values,
        })
    }

    /// The supercharacter `σ_X` of the `i`-th character part.
    pub fn supercharacter(theory: &SupercharacterTheory, i: usize) -> Self {
        let sigma = theory.supercharacter(i);
        let values = theory
            .classes()
            .blocks()
            .iter()
            .map(|k| sigma.at(k[0]).clone())
            .collect();
        SuperclassFunction {
            theory: theory.clone(),
            values,
        }
    }

    pub fn theory(&self) -> &SupercharacterTheory {
        &self.theory
    }

    /// Values indexed by superclass.
    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn at(&self, g: usize) -> &Cyclotomic {
        &self.values[self.theory.superclass_of(g)]
    }

    /// Values on the elements of `h`, in its local order.
    pub fn restrict(&self, h: &Subgroup) -> Vec<Cyclotomic> {
        h.members().iter().map(|&x| self.at(x).clone()).collect()
    }

    /// The same function as a class function of `G`.
    pub fn to_class_function(&self) -> ClassFunction {
        let g = self.theory.group();
        let values = (0..g.num_classes()).map(|c| self.at(g.class_rep(c)).clone()).collect();
        ClassFunction::new(g, values).expect("one value per class")
    }

    /// `[φ, θ] = 1/|G| Σ_K |K| φ(K) conj(θ(K))`.
    pub fn inner_product(&self, other: &Self) -> Result<Cyclotomic> {
        if self.theory != other.theory {
            return Err(Error::GroupMismatch);
        }
        let blocks = self.theory.classes().blocks();
        let sum: Cyclotomic = blocks
            .iter()
            .zip(self.values.iter().zip(&other.values))
            .map(|(k, (a, b))| (a * &b.conj()).scale(&ratio(k.len(), 1)))
            .sum();
        Ok(sum.scale(&ratio(1, self.theory.group().order())))
    }
}

/// `φ^(G)` for `φ` given by its values on the elements of `h` (local order).
pub fn superinduce(c: &SupercharacterTheory, h: &Subgroup, phi: &[Cyclotomic]) -> Result<SuperclassFunction> {
    if h.parent() != c.group() {
        return Err(Error::GroupMismatch);
    }
    if phi.len() != h.order() {
        return Err(Error::InvalidInput(format!(
            "function on H needs {} values, got {}",
            h.order(),
            phi.len()
        )));
    }
    let values = c
        .classes()
        .blocks()
        .iter()
        .map(|k| {
            let sum: Cyclotomic = k.iter().filter_map(|&y| h.local_index(y)).map(|i| &phi[i]).sum();
            sum.scale(&ratio(h.index(), k.len()))
        })
        .collect();
    Ok(SuperclassFunction {
        theory: c.clone(),
        values,
    })
}

/// `[φ, ψ]_H = 1/|H| Σ_{y∈H} φ(y) conj(ψ(y))` for element-wise functions on `H`.
pub fn subgroup_inner_product(h: &Subgroup, phi: &[Cyclotomic], psi: &[Cyclotomic]) -> Cyclotomic {
    let sum: Cyclotomic = phi.iter().zip(psi).map(|(a, b)| a * &b.conj()).sum();
    sum.scale(&ratio(1, h.order()))
}

/// Both sides of `[φ^(G), θ] = [φ, θ_H]`.
pub fn reciprocity_sides(
    c: &SupercharacterTheory,
    h: &Subgroup,
    phi: &[Cyclotomic],
    theta: &SuperclassFunction,
) -> Result<(Cyclotomic, Cyclotomic)> {
    let lhs = superinduce(c, h, phi)?.inner_product(theta)?;
    let rhs = subgroup_inner_product(h, phi, &theta.restrict(h));
    Ok((lhs, rhs))
}

/// Whether Frobenius reciprocity holds for the given data.
pub fn check_reciprocity(
    c: &SupercharacterTheory,
    h: &Subgroup,
    phi: &[Cyclotomic],
    theta: &SuperclassFunction,
) -> Result<bool> {
    let (lhs, rhs) = reciprocity_sides(c, h, phi, theta)?;
    Ok(lhs == rhs)
}

/// `φ^(G)` for a `C`-normal `N` and `φ` constant on the superclasses inside
/// `N`; its restriction to `N` is checked to be `[G:N]·φ`.
pub fn superinduce_from_normal(
    c: &SupercharacterTheory,
    n: &Subgroup,
    phi: &[Cyclotomic],
) -> Result<SuperclassFunction> {
    if !is_sct_normal(c, n) {
        return Err(Error::NotSuperNormal);
    }
    if phi.len() != n.order() {
        return Err(Error::InvalidInput("one value per element of N expected".into()));
    }
    for k in c.classes().blocks_within(n.mask()) {
        let first = &phi[n.local_index(k[0]).unwrap()];
        if k.iter().any(|&y| phi[n.local_index(y).unwrap()] != *first) {
            return Err(Error::InvalidInput("function is not constant on superclasses".into()));
        }
    }
    let f = superinduce(c, n, phi)?;
    let index = ratio(n.index(), 1);
    if f.restrict(n).iter().zip(phi).any(|(a, b)| *a != b.scale(&index)) {
        return Err(Error::Internal(
            "superinduced function does not restrict to [G:N]·φ".into(),
        ));
    }
    Ok(f)
}
