mod common;

use std::time::Instant;

use common::*;
use supercharacters::characters::{induce_char_part, induce_classfn, inner_product, irr_over, restrict_classfn};
use supercharacters::{CharacterTable, ClassFunction, Cyclotomic, GroupAlgebraElement, NormalContext, Rational};

fn frac(p: usize, q: usize) -> Rational {
    Rational::new(p.into(), q.into())
}

#[test]
fn orthogonality_and_degrees() {
    for spec in test_set() {
        let t = table(spec);
        let g = t.group();
        let r = t.num_irr();
        assert_eq!(r, g.num_classes(), "{spec}");
        assert_eq!(t.degrees().iter().map(|d| d * d).sum::<usize>(), g.order(), "{spec}");
        for i in 0..r {
            assert_eq!(t.value(i, 0).as_i64(), Some(t.degree(i) as i64));
            for j in 0..r {
                let s: Cyclotomic = (0..r)
                    .map(|c| (t.value(i, c) * &t.value(j, c).conj()).scale(&frac(g.class_size(c), 1)))
                    .sum();
                let expect = if i == j { g.order() as i64 } else { 0 };
                assert_eq!(s.as_i64(), Some(expect), "{spec} rows {i} {j}");
            }
        }
        for a in 0..r {
            for b in 0..r {
                let s: Cyclotomic = (0..r).map(|i| t.value(i, a) * &t.value(i, b).conj()).sum();
                let expect = if a == b {
                    Cyclotomic::from_rational(frac(g.order(), g.class_size(a)))
                } else {
                    Cyclotomic::zero()
                };
                assert_eq!(s, expect, "{spec} columns {a} {b}");
            }
        }
    }
}

#[test]
fn idempotents() {
    for spec in test_set() {
        let t = table(spec);
        let g = t.group();
        let e: Vec<GroupAlgebraElement> = (0..t.num_irr())
            .map(|chi| {
                let f = frac(t.degree(chi), g.order());
                let coeffs = (0..g.order())
                    .map(|x| t.value(chi, g.class_of(g.inv(x))).scale(&f))
                    .collect();
                GroupAlgebraElement::new(g, coeffs).unwrap()
            })
            .collect();
        let mut total = GroupAlgebraElement::zero(g);
        for (i, ei) in e.iter().enumerate() {
            assert_eq!(*ei, t.central_idempotent(i));
            assert!(ei.is_central());
            total = total.add(ei).unwrap();
            for (j, ej) in e.iter().enumerate() {
                let p = ei.mul(ej).unwrap();
                if i == j {
                    assert_eq!(p, *ei, "{spec} e_{i}");
                } else {
                    assert!(p.is_zero(), "{spec} e_{i} e_{j}");
                }
            }
        }
        assert_eq!(total, GroupAlgebraElement::identity(g));
    }
}

#[test]
fn cyclic_tables_are_closed_form() {
    for n in 1..=12 {
        let t = table(&format!("cyclic:{n}"));
        let g = t.group();
        let gen = (0..n).find(|&x| g.element_order(x) == n).unwrap();
        let mut found: Vec<usize> = (0..n)
            .map(|j| {
                let row: Vec<Cyclotomic> = (0..n)
                    .map(|c| {
                        let x = g.class_rep(c);
                        let k = (0..n).find(|&k| g.pow(gen, k) == x).unwrap();
                        Cyclotomic::root(n, (j * k % n) as i64).unwrap()
                    })
                    .collect();
                t.find_row(&row).expect("closed-form row present")
            })
            .collect();
        found.sort_unstable();
        found.dedup();
        assert_eq!(found.len(), n);
    }
}

#[test]
fn all_tables_are_fast() {
    let start = Instant::now();
    for spec in test_set().into_iter().chain(["cyclic:4xcyclic:2", "symmetric:5"]) {
        table(spec);
    }
    assert!(start.elapsed().as_secs_f64() < 10.0, "{:?}", start.elapsed());
}

#[test]
fn table_is_deterministic() {
    for spec in ["symmetric:4", "quaternion", "cyclic:12"] {
        let a = serde_json::to_string(&*table(spec)).unwrap();
        let b = serde_json::to_string(&*table(spec)).unwrap();
        assert_eq!(a, b);
    }
    let s3 = table("symmetric:3");
    assert_eq!(s3.degrees(), &[1, 1, 2]);
    // classes in canonical order: identity, 3-cycles, transpositions
    let row: Vec<i64> = s3.row(2).iter().map(|v| v.as_i64().unwrap()).collect();
    assert_eq!(row, vec![2, -1, 0]);
}

#[test]
fn induction_from_orbit_unions() {
    for spec in [
        "symmetric:4",
        "dihedral:4",
        "quaternion",
        "symmetric:3xcyclic:2",
        "dihedral:5",
    ] {
        let t = table(spec);
        let g = t.group().clone();
        for n in g.normal_subgroups() {
            let nc = NormalContext::new(&t, &n).unwrap();
            let nt = nc.normal_table();
            for orbit in nc.character_orbits() {
                let z = orbit.clone();
                let zg = induce_char_part(&t, nt, &n, &z).unwrap();
                // Irr(G|ψ) from inner products with induced characters
                let mut by_ip: Vec<usize> = Vec::new();
                for &psi in &z {
                    let induced = induce_classfn(&nt.character(psi), &n).unwrap();
                    let over: Vec<usize> = (0..t.num_irr())
                        .filter(|&chi| !inner_product(&induced, &t.character(chi)).unwrap().is_zero())
                        .collect();
                    assert_eq!(irr_over(&t, nt, &n, psi).unwrap(), over, "{spec}");
                    by_ip.extend(over);
                }
                by_ip.sort_unstable();
                by_ip.dedup();
                assert_eq!(zg, by_ip, "{spec}");
                // σ_{Z^G} = (σ_Z)^G
                let sigma_z = ClassFunction::new(nt.group(), sigma_on_classes(nt, &z)).unwrap();
                let lhs = ClassFunction::new(&g, sigma_on_classes(&t, &zg)).unwrap();
                assert_eq!(lhs, induce_classfn(&sigma_z, &n).unwrap(), "{spec}");
            }
        }
    }
}

#[test]
fn frobenius_reciprocity_for_ordinary_induction() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for spec in ["symmetric:4", "dihedral:5", "quaternion"] {
        let t = table(spec);
        let g = t.group().clone();
        for _ in 0..20 {
            let gens = [rng.gen_range(0..g.order())];
            let h = g.subgroup_closure(&gens);
            let ht = CharacterTable::compute(&h.to_group()).unwrap();
            let phi = ClassFunction::new(
                ht.group(),
                (0..ht.group().num_classes())
                    .map(|_| Cyclotomic::from_int(rng.gen_range(-3..4)))
                    .collect(),
            )
            .unwrap();
            let theta = ClassFunction::new(
                &g,
                (0..g.num_classes())
                    .map(|_| Cyclotomic::from_int(rng.gen_range(-3..4)))
                    .collect(),
            )
            .unwrap();
            let lhs = inner_product(&induce_classfn(&phi, &h).unwrap(), &theta).unwrap();
            let rhs = inner_product(&phi, &restrict_classfn(&theta, &h, &ht).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
