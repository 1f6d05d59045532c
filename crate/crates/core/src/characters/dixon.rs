//! Burnside–Dixon: irreducible characters from class multiplication
//! coefficients, computed modulo a prime `p ≡ 1 (mod exp G)` and lifted to
//! exact cyclotomic values.

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

pub(crate) struct DixonOutput {
    pub rows: Vec<Vec<Cyclotomic>>,
    pub degrees: Vec<usize>,
    pub prime: u64,
    pub root: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime `p ≡ 1 (mod exponent)` with `p > 2·√order`.
pub fn dixon_prime(order: usize, exponent: usize) -> u64 {
    let (order, e) = (order as u64, exponent as u64);
    let mut p = 1 + e;
    loop {
        if p * p > 4 * order && is_prime(p) {
            return p;
        }
        p += e;
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn least_primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&f| pow_mod(g, (p - 1) / f, p) != 1))
        .expect("primes have primitive roots")
}

/// Row-reduces `rows` in place over GF(p); returns pivot columns.
fn echelon(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for k in 0..ncols {
                    rows[i][k] = (rows[i][k] + p - f * rows[r][k] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of the kernel of a square matrix (given by rows) over GF(p).
fn kernel(mat: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = mat.len();
    let mut rows = mat.to_vec();
    let pivots = echelon(&mut rows, p);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = (p - row[f]) % p;
            }
            v
        })
        .collect()
}

/// Splits an invariant subspace (basis given as rows) into eigenspaces of `m`.
fn split(basis: &[Vec<u64>], m: &[Vec<u64>], p: u64) -> Result<Vec<Vec<Vec<u64>>>> {
    let d = basis.len();
    let r = m.len();
    let mut ech = basis.to_vec();
    let pivots = echelon(&mut ech, p);
    // images of the echelon basis vectors, in echelon coordinates
    let mut a = vec![vec![0u64; d]; d]; // a[row][col]: coordinate `row` of M·b_col
    for (col, b) in ech.iter().enumerate() {
        let img: Vec<u64> = (0..r)
            .map(|k| (0..r).fold(0u64, |acc, l| (acc + m[k][l] * b[l]) % p))
            .collect();
        for (row, &pc) in pivots.iter().enumerate() {
            a[row][col] = img[pc];
        }
    }
    let mut spaces = Vec::new();
    let mut found = 0;
    for lambda in 0..p {
        let shifted: Vec<Vec<u64>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { (a[i][j] + p - lambda) % p } else { a[i][j] })
                    .collect()
            })
            .collect();
        let ker = kernel(&shifted, p);
        if ker.is_empty() {
            continue;
        }
        found += ker.len();
        let vecs = ker
            .iter()
            .map(|c| {
                (0..r)
                    .map(|k| (0..d).fold(0u64, |acc, i| (acc + c[i] * ech[i][k]) % p))
                    .collect()
            })
            .collect();
        spaces.push(vecs);
        if found == d {
            return Ok(spaces);
        }
    }
    Err(Error::Internal(format!(
        "class matrix is not diagonalizable modulo {p} ({found} of {d} eigenvectors)"
    )))
}

pub(crate) fn dixon(g: &FiniteGroup) -> Result<DixonOutput> {
    let n = g.order();
    let r = g.num_classes();
    let e = g.exponent();
    let p = dixon_prime(n, e);
    let sizes: Vec<u64> = (0..r).map(|c| g.class_size(c) as u64).collect();

    // a[j][k][l] = #{x ∈ C_j : x⁻¹·z_l ∈ C_k} for the representative z_l of C_l
    let mut a = vec![vec![vec![0u64; r]; r]; r];
    for (j, block) in g.classes().blocks().iter().enumerate() {
        for &x in block {
            let xi = g.inv(x);
            for (l, al) in (0..r).map(|l| (l, g.class_rep(l))) {
                let k = g.class_of(g.mul(xi, al));
                a[j][k][l] += 1;
            }
        }
    }

    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect()];
    for mat in a.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let m: Vec<Vec<u64>> = mat.iter().map(|row| row.iter().map(|x| x % p).collect()).collect();
        let mut next = Vec::new();
        for s in spaces {
            if s.len() == 1 {
                next.push(s);
            } else {
                next.extend(split(&s, &m, p)?);
            }
        }
        spaces = next;
    }
    if spaces.len() != r || spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::Internal(
            "common eigenspaces of the class matrices did not split".into(),
        ));
    }

    let gen = least_primitive_root(p);
    let z = pow_mod(gen, (p - 1) / e as u64, p);
    let z_inv = inv_mod(z, p);
    let e_inv = inv_mod(e as u64 % p, p);
    let inv_class: Vec<usize> = (0..r).map(|c| g.inverse_class(c)).collect();
    // power_class[c][l] = class of rep_c^l
    let power_class: Vec<Vec<usize>> = (0..r)
        .map(|c| {
            let x = g.class_rep(c);
            let mut out = Vec::with_capacity(e);
            let mut y = 0;
            for _ in 0..e {
                out.push(g.class_of(y));
                y = g.mul(y, x);
            }
            out
        })
        .collect();

    let mut rows = Vec::with_capacity(r);
    let mut degrees = Vec::with_capacity(r);
    for s in &spaces {
        let w0 = &s[0];
        if w0[0] == 0 {
            return Err(Error::Internal("central character vanishes at the identity".into()));
        }
        let norm = inv_mod(w0[0], p);
        let w: Vec<u64> = w0.iter().map(|x| x * norm % p).collect();
        let sum = (0..r).fold(0u64, |acc, j| {
            (acc + w[j] * w[inv_class[j]] % p * inv_mod(sizes[j] % p, p)) % p
        });
        let deg_sq = (n as u64 % p) * inv_mod(sum, p) % p;
        let degree = (1..=n as u64)
            .take_while(|d| d * d <= n as u64)
            .find(|d| d * d % p == deg_sq)
            .ok_or_else(|| Error::Internal("no integer degree matches modulo p".into()))?;
        let chi_mod: Vec<u64> = (0..r)
            .map(|j| w[j] * degree % p * inv_mod(sizes[j] % p, p) % p)
            .collect();
        let mut row = Vec::with_capacity(r);
        for pc in &power_class {
            let mut mult = vec![0i64; e];
            let mut total = 0u64;
            for (k, m) in mult.iter_mut().enumerate() {
                let mut acc = 0u64;
                for (l, &cl) in pc.iter().enumerate() {
                    let zkl = pow_mod(z_inv, (k * l % e) as u64, p);
                    acc = (acc + chi_mod[cl] * zkl) % p;
                }
                let mk = acc * e_inv % p;
                if mk > degree {
                    return Err(Error::Internal(format!(
                        "eigenvalue multiplicity {mk} exceeds the degree {degree}"
                    )));
                }
                total += mk;
                *m = mk as i64;
            }
            if total != degree {
                return Err(Error::Internal(
                    "eigenvalue multiplicities do not sum to the degree".into(),
                ));
            }
            row.push(Cyclotomic::from_integer_coords(e, &mult)?);
        }
        rows.push(row);
        degrees.push(degree as usize);
    }
    Ok(DixonOutput {
        rows,
        degrees,
        prime: p,
        root: gen,
    })
}
