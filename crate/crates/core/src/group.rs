//! Finite groups as dense multiplication tables.
//!
//! Elements are indices `0..order` with the identity at `0`. Groups built from
//! permutation generators are enumerated breadth-first from the identity, so
//! the element order is a deterministic function of the generator list.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::partition::Partition;

pub const DEFAULT_MAX_ORDER: usize = 2000;

/// Description of a group to build.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Family {
        family: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
    },
    Product {
        product: Vec<GroupSpec>,
    },
    Generators {
        generators: Vec<Vec<usize>>,
    },
    Table {
        table: Vec<Vec<usize>>,
    },
}

impl GroupSpec {
    pub fn cyclic(n: usize) -> Self {
        GroupSpec::Family {
            family: "cyclic".into(),
            n: Some(n),
        }
    }

    pub fn dihedral(n: usize) -> Self {
        GroupSpec::Family {
            family: "dihedral".into(),
            n: Some(n),
        }
    }

    pub fn symmetric(n: usize) -> Self {
        GroupSpec::Family {
            family: "symmetric".into(),
            n: Some(n),
        }
    }

    pub fn quaternion() -> Self {
        GroupSpec::Family {
            family: "quaternion".into(),
            n: None,
        }
    }

    pub fn product(specs: Vec<GroupSpec>) -> Self {
        GroupSpec::Product { product: specs }
    }

    /// Parses the `family:n` shorthand. Products are written with `x` or `*`
    /// between factors, e.g. `symmetric:3xcyclic:2`.
    pub fn parse_shorthand(s: &str) -> Result<Self> {
        let s = s.trim();
        let factors: Vec<&str> = s.split(['x', '*']).collect();
        if factors.len() > 1 {
            let specs = factors
                .iter()
                .map(|f| Self::parse_shorthand(f))
                .collect::<Result<Vec<_>>>()?;
            return Ok(GroupSpec::Product { product: specs });
        }
        let (family, n) = match s.split_once(':') {
            Some((f, n)) => {
                let n: usize = n
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad group size in '{s}'")))?;
                (f.trim(), Some(n))
            }
            None => (s, None),
        };
        Ok(GroupSpec::Family {
            family: family.to_string(),
            n,
        })
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        self.build_with_max(DEFAULT_MAX_ORDER)
    }

    pub fn build_with_max(&self, max_order: usize) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Family { family, n } => {
                let need =
                    |n: &Option<usize>| n.ok_or_else(|| Error::InvalidGroup(format!("family '{family}' needs n")));
                match family.as_str() {
                    "cyclic" => FiniteGroup::cyclic_with_max(need(n)?, max_order),
                    "dihedral" => FiniteGroup::dihedral_with_max(need(n)?, max_order),
                    "symmetric" => FiniteGroup::symmetric_with_max(need(n)?, max_order),
                    "quaternion" => match n {
                        None | Some(8) => Ok(FiniteGroup::quaternion()),
                        Some(m) => Err(Error::InvalidGroup(format!(
                            "quaternion group of order {m} is not supported (only 8)"
                        ))),
                    },
                    other => Err(Error::InvalidGroup(format!("unknown family '{other}'"))),
                }
            }
            GroupSpec::Product { product } => {
                let mut factors = product.iter();
                let first = factors
                    .next()
                    .ok_or_else(|| Error::InvalidGroup("empty product".into()))?
                    .build_with_max(max_order)?;
                factors.try_fold(first, |acc, spec| {
                    let g = spec.build_with_max(max_order)?;
                    acc.direct_product_with_max(&g, max_order)
                })
            }
            GroupSpec::Generators { generators } => FiniteGroup::from_permutations(generators, max_order),
            GroupSpec::Table { table } => FiniteGroup::from_table(table, max_order),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Family { family, n: Some(n) } => write!(f, "{family}:{n}"),
            GroupSpec::Family { family, n: None } => write!(f, "{family}"),
            GroupSpec::Product { product } => {
                let parts: Vec<String> = product.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", parts.join("x"))
            }
            GroupSpec::Generators { generators } => write!(f, "<{} generators>", generators.len()),
            GroupSpec::Table { table } => write!(f, "<table of order {}>", table.len()),
        }
    }
}

struct GroupData {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    elem_order: Vec<u32>,
    exponent: usize,
    classes: Partition,
}

/// A finite group with element indices `0..order`; the identity is `0`.
///
/// Cloning is cheap; the table is shared.
#[derive(Clone)]
pub struct FiniteGroup(Arc<GroupData>);

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order())
            .field("classes", &self.num_classes())
            .finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.mul == other.0.mul
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Trusted constructor: `mul` must already be a group table with identity 0.
    fn from_trusted_table(order: usize, mul: Vec<u32>) -> Self {
        let mut inv = vec![0u32; order];
        for a in 0..order {
            for b in 0..order {
                if mul[a * order + b] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
        }
        let mut elem_order = vec![1u32; order];
        for (g, o) in elem_order.iter_mut().enumerate() {
            let mut x = g;
            while x != 0 {
                x = mul[x * order + g] as usize;
                *o += 1;
            }
        }
        let exponent = elem_order.iter().fold(1usize, |acc, &o| acc.lcm(&(o as usize)));
        let mut data = GroupData {
            order,
            mul,
            inv,
            elem_order,
            exponent,
            classes: Partition::singletons(order),
        };
        data.classes = compute_classes(&data);
        FiniteGroup(Arc::new(data))
    }

    pub fn trivial() -> Self {
        Self::from_trusted_table(1, vec![0])
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::cyclic_with_max(n, DEFAULT_MAX_ORDER)
    }

    pub fn cyclic_with_max(n: usize, max_order: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("cyclic group of order 0".into()));
        }
        let gen: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        Self::from_permutations(&[gen], max_order)
    }

    /// Dihedral group of order `2n`, acting regularly on flags `(k, side)`.
    pub fn dihedral(n: usize) -> Result<Self> {
        Self::dihedral_with_max(n, DEFAULT_MAX_ORDER)
    }

    pub fn dihedral_with_max(n: usize, max_order: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("dihedral group with n = 0".into()));
        }
        let flag = |k: usize, side: usize| side * n + k;
        let mut rot = vec![0; 2 * n];
        let mut refl = vec![0; 2 * n];
        for k in 0..n {
            rot[flag(k, 0)] = flag((k + 1) % n, 0);
            rot[flag(k, 1)] = flag((k + 1) % n, 1);
            refl[flag(k, 0)] = flag((n - k) % n, 1);
            refl[flag(k, 1)] = flag((n - k) % n, 0);
        }
        Self::from_permutations(&[rot, refl], max_order)
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        Self::symmetric_with_max(n, DEFAULT_MAX_ORDER)
    }

    pub fn symmetric_with_max(n: usize, max_order: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("symmetric group on 0 points".into()));
        }
        let order = (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k));
        match order {
            Some(o) if o <= max_order => {}
            Some(o) => {
                return Err(Error::OrderOverflow {
                    order: o,
                    max: max_order,
                })
            }
            None => {
                return Err(Error::OrderOverflow {
                    order: usize::MAX,
                    max: max_order,
                })
            }
        }
        if n == 1 {
            return Ok(Self::trivial());
        }
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let mut transposition: Vec<usize> = (0..n).collect();
        transposition.swap(0, 1);
        Self::from_permutations(&[cycle, transposition], max_order)
    }

    /// The quaternion group `{±1, ±i, ±j, ±k}` generated by `i` and `j`
    /// acting on itself by right multiplication.
    pub fn quaternion() -> Self {
        // element = 4 * sign + unit, unit 0..4 = 1, i, j, k
        fn unit_mul(a: usize, b: usize) -> (usize, usize) {
            const T: [[(usize, usize); 4]; 4] = [
                [(0, 0), (0, 1), (0, 2), (0, 3)],
                [(0, 1), (1, 0), (0, 3), (1, 2)],
                [(0, 2), (1, 3), (1, 0), (0, 1)],
                [(0, 3), (0, 2), (1, 1), (1, 0)],
            ];
            T[a][b]
        }
        let mul = |x: usize, y: usize| {
            let (s, u) = unit_mul(x % 4, y % 4);
            4 * ((x / 4 + y / 4 + s) % 2) + u
        };
        let right = |g: usize| (0..8).map(|x| mul(x, g)).collect::<Vec<_>>();
        Self::from_permutations(&[right(1), right(2)], 8).expect("Q8 generators are valid")
    }

    /// Closure of permutation generators (0-indexed images). Products compose
    /// left to right: `(ab)(x) = b(a(x))`.
    pub fn from_permutations(gens: &[Vec<usize>], max_order: usize) -> Result<Self> {
        let degree = gens.first().map_or(1, Vec::len);
        for g in gens {
            if g.len() != degree {
                return Err(Error::InvalidGroup(
                    "permutation generators act on different domains".into(),
                ));
            }
            let mut seen = vec![false; degree];
            for &x in g {
                if x >= degree || seen[x] {
                    return Err(Error::InvalidGroup(format!(
                        "generator {g:?} is not a permutation of 0..{degree}"
                    )));
                }
                seen[x] = true;
            }
        }
        let compose = |a: &[usize], b: &[usize]| a.iter().map(|&x| b[x]).collect::<Vec<_>>();
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(h) = queue.pop_front() {
            for g in gens {
                let p = compose(&elements[h], g);
                if !index.contains_key(&p) {
                    if elements.len() >= max_order {
                        return Err(Error::OrderOverflow {
                            order: elements.len() + 1,
                            max: max_order,
                        });
                    }
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        let n = elements.len();
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = index[&compose(&elements[a], &elements[b])] as u32;
            }
        }
        Ok(Self::from_trusted_table(n, mul))
    }

    /// Validates an explicit multiplication table. If the identity is not at
    /// index 0 it is swapped there.
    pub fn from_table(table: &[Vec<usize>], max_order: usize) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty multiplication table".into()));
        }
        if n > max_order {
            return Err(Error::OrderOverflow {
                order: n,
                max: max_order,
            });
        }
        for row in table {
            if row.len() != n {
                return Err(Error::InvalidGroup("table is not square".into()));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidGroup(format!(
                    "table is not closed: entry {x} out of range"
                )));
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == e && table[b][a] == e) {
                return Err(Error::InvalidGroup(format!("element {a} has no inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[relabel(a) * n + relabel(b)] = relabel(table[a][b]) as u32;
            }
        }
        Ok(Self::from_trusted_table(n, mul))
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> Result<FiniteGroup> {
        self.direct_product_with_max(other, DEFAULT_MAX_ORDER)
    }

    /// `self × other` with element `(a, b)` at index `a * |other| + b`.
    pub fn direct_product_with_max(&self, other: &FiniteGroup, max_order: usize) -> Result<Self> {
        let (m, k) = (self.order(), other.order());
        let n = m * k;
        if n > max_order {
            return Err(Error::OrderOverflow {
                order: n,
                max: max_order,
            });
        }
        let mut mul = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                let a = self.mul(x / k, y / k);
                let b = other.mul(x % k, y % k);
                mul[x * n + y] = (a * k + b) as u32;
            }
        }
        Ok(Self::from_trusted_table(n, mul))
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.mul[a * self.0.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.0.inv[a] as usize
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// `h g h⁻¹`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        let k = k % self.element_order(g);
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        self.0.elem_order[g] as usize
    }

    pub fn exponent(&self) -> usize {
        self.0.exponent
    }

    pub fn is_abelian(&self) -> bool {
        self.num_classes() == self.order()
    }

    /// Conjugacy classes: identity class first, the rest by `(size, least element)`.
    pub fn classes(&self) -> &Partition {
        &self.0.classes
    }

    pub fn num_classes(&self) -> usize {
        self.0.classes.len()
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.0.classes.block_of(g)
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.0.classes.block(c).len()
    }

    pub fn class_rep(&self, c: usize) -> usize {
        self.0.classes.block(c)[0]
    }

    /// Index of the class containing the inverses of class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.class_of(self.inv(self.class_rep(c)))
    }

    /// Class of `g^k` for a representative `g` of class `c`.
    pub fn power_class(&self, c: usize, k: usize) -> usize {
        self.class_of(self.pow(self.class_rep(c), k))
    }

    /// Stable hex digest of the multiplication table.
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.order() as u64).to_le_bytes());
        for &x in &self.0.mul {
            h.update(x.to_le_bytes());
        }
        let digest = h.finalize();
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Smallest subgroup containing `gens`.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Subgroup {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut members = vec![0];
        let mut queue = VecDeque::from([0usize]);
        while let Some(h) = queue.pop_front() {
            for &g in gens {
                let p = self.mul(h, g);
                if !inside[p] {
                    inside[p] = true;
                    members.push(p);
                    queue.push_back(p);
                }
            }
        }
        members.sort_unstable();
        Subgroup {
            group: self.clone(),
            members,
            inside,
        }
    }

    /// Wraps an element set, checking that it is a subgroup.
    pub fn subgroup(&self, members: &[usize]) -> Result<Subgroup> {
        let mut inside = vec![false; self.order()];
        for &m in members {
            if m >= self.order() {
                return Err(Error::InvalidInput(format!("element {m} out of range")));
            }
            inside[m] = true;
        }
        if !inside[0] {
            return Err(Error::InvalidInput("subgroup must contain the identity".into()));
        }
        let mut sorted: Vec<usize> = (0..self.order()).filter(|&x| inside[x]).collect();
        sorted.dedup();
        for &a in &sorted {
            if !inside[self.inv(a)] || sorted.iter().any(|&b| !inside[self.mul(a, b)]) {
                return Err(Error::InvalidInput(
                    "element set is not closed under multiplication and inverses".into(),
                ));
            }
        }
        Ok(Subgroup {
            group: self.clone(),
            members: sorted,
            inside,
        })
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            group: self.clone(),
            members: (0..self.order()).collect(),
            inside: vec![true; self.order()],
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        self.subgroup_closure(&[])
    }

    /// All normal subgroups, sorted by `(order, members)`.
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        let mut found: Vec<Subgroup> = vec![self.trivial_subgroup()];
        let mut i = 0;
        while i < found.len() {
            for c in 0..self.num_classes() {
                let mut gens = found[i].members.clone();
                gens.extend_from_slice(self.classes().block(c));
                let s = self.subgroup_closure(&gens);
                if !found.iter().any(|f| f.members == s.members) {
                    found.push(s);
                }
            }
            i += 1;
        }
        found.sort_by(|a, b| a.order().cmp(&b.order()).then(a.members.cmp(&b.members)));
        found
    }
}

fn compute_classes(g: &GroupData) -> Partition {
    let n = g.order;
    let mul = |a: usize, b: usize| g.mul[a * n + b] as usize;
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for x in 0..n {
        if label[x] != usize::MAX {
            continue;
        }
        for h in 0..n {
            let y = mul(mul(h, x), g.inv[h] as usize);
            label[y] = next;
        }
        next += 1;
    }
    Partition::from_labels(&label)
}

/// A subgroup stored as a sorted set of parent indices.
#[derive(Clone)]
pub struct Subgroup {
    group: FiniteGroup,
    members: Vec<usize>,
    inside: Vec<bool>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.members)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub fn parent(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn mask(&self) -> &[bool] {
        &self.inside
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.group.order() / self.order()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.inside[g]
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// A union of conjugacy classes.
    pub fn is_normal(&self) -> bool {
        self.group.classes().is_union_of_blocks(&self.members)
    }

    /// Position of a parent element inside `members`.
    pub fn local_index(&self, g: usize) -> Option<usize> {
        self.members.binary_search(&g).ok()
    }

    /// The subgroup as a group in its own right: local index `i` is the
    /// parent element `members()[i]`.
    pub fn to_group(&self) -> FiniteGroup {
        let n = self.order();
        let mut mul = vec![0u32; n * n];
        for (i, &a) in self.members.iter().enumerate() {
            for (j, &b) in self.members.iter().enumerate() {
                let p = self.group.mul(a, b);
                mul[i * n + j] = self.local_index(p).expect("subgroup is closed") as u32;
            }
        }
        FiniteGroup::from_trusted_table(n, mul)
    }

    /// Automorphisms of the subgroup (in local indices) induced by
    /// conjugation with elements of the parent, deduplicated.
    pub fn conjugation_automorphisms(&self) -> Result<Vec<Vec<usize>>> {
        if !self.is_normal() {
            return Err(Error::NotNormal);
        }
        let mut autos: Vec<Vec<usize>> = Vec::new();
        for h in 0..self.group.order() {
            let a: Vec<usize> = self
                .members
                .iter()
                .map(|&m| self.local_index(self.group.conjugate(m, h)).unwrap())
                .collect();
            if !autos.contains(&a) {
                autos.push(a);
            }
        }
        Ok(autos)
    }

    pub fn quotient(&self) -> Result<QuotientStructure> {
        QuotientStructure::new(self)
    }
}

/// `G/N` with cosets ordered by least member (so the coset `N` is index 0).
#[derive(Clone, Debug)]
pub struct QuotientStructure {
    normal: Subgroup,
    cosets: Vec<Vec<usize>>,
    projection: Vec<usize>,
    quotient: FiniteGroup,
}

impl QuotientStructure {
    pub fn new(normal: &Subgroup) -> Result<Self> {
        if !normal.is_normal() {
            return Err(Error::NotNormal);
        }
        let g = normal.parent();
        let n = g.order();
        let mut projection = vec![usize::MAX; n];
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if projection[x] != usize::MAX {
                continue;
            }
            let mut coset: Vec<usize> = normal.members().iter().map(|&m| g.mul(x, m)).collect();
            coset.sort_unstable();
            for &y in &coset {
                projection[y] = cosets.len();
            }
            cosets.push(coset);
        }
        let k = cosets.len();
        let mut mul = vec![0u32; k * k];
        for a in 0..k {
            for b in 0..k {
                mul[a * k + b] = projection[g.mul(cosets[a][0], cosets[b][0])] as u32;
            }
        }
        Ok(QuotientStructure {
            normal: normal.clone(),
            cosets,
            projection,
            quotient: FiniteGroup::from_trusted_table(k, mul),
        })
    }

    pub fn parent(&self) -> &FiniteGroup {
        self.normal.parent()
    }

    pub fn normal(&self) -> &Subgroup {
        &self.normal
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    pub fn coset(&self, i: usize) -> &[usize] {
        &self.cosets[i]
    }

    pub fn project(&self, g: usize) -> usize {
        self.projection[g]
    }

    pub fn projection(&self) -> &[usize] {
        &self.projection
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.quotient
    }
}
