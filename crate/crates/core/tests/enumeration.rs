mod common;

use std::collections::HashMap;

use common::*;
use supercharacters::lattice::enumerate_sup;
use supercharacters::partition::{all_partitions, Partition};
use supercharacters::schur::{check_schur, classes_to_elements, elements_to_classes};
use supercharacters::sct::{from_chars, from_classes, sct_to_sring, sring_to_sct, validate_sct};

fn small_class_groups() -> Vec<&'static str> {
    test_set().into_iter().filter(|s| group(s).num_classes() <= 6).collect()
}

#[test]
fn counts_match_class_level_brute_force() {
    for spec in small_class_groups() {
        let t = table(spec);
        let g = t.group().clone();
        let lattice = enumerate_sup(&t).unwrap();
        let mut expected: Vec<Partition> = brute_force_theories(&t)
            .into_iter()
            .map(|(k, _)| class_partition_to_elements(&g, &k))
            .collect();
        expected.sort();
        let mut got: Vec<Partition> = lattice.theories().iter().map(|c| c.classes().clone()).collect();
        got.sort();
        assert_eq!(got, expected, "{spec}");
    }
}

#[test]
fn known_small_counts() {
    for (spec, n) in [
        ("cyclic:4", 3),
        ("symmetric:3", 2),
        ("cyclic:1", 1),
        ("cyclic:2", 1),
        ("cyclic:3", 2),
    ] {
        assert_eq!(brute_force_theories(&table(spec)).len(), n, "{spec}");
        assert_eq!(enumerate_sup(&table(spec)).unwrap().len(), n, "{spec}");
    }
}

/// Search over all partitions of the elements (not only unions of classes),
/// with each part of `Irr(G)` tested through `σ` values on elements.
fn element_level_count(spec: &str) -> usize {
    let t = table(spec);
    let g = t.group();
    let n = g.order();
    let r = t.num_irr();
    let char_parts: Vec<Partition> = all_partitions(r).filter(|p| p.block(0) == [0]).collect();
    let mut ids: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for x in &char_parts {
        for b in x.blocks() {
            ids.entry(b.clone()).or_insert_with(|| {
                let on_classes = sigma_on_classes(&t, b);
                let on_elements: Vec<_> = (0..n).map(|e| on_classes[g.class_of(e)].clone()).collect();
                value_ids(&on_elements)
            });
        }
    }
    let mut by_size: HashMap<usize, Vec<&Partition>> = HashMap::new();
    for x in &char_parts {
        by_size.entry(x.len()).or_default().push(x);
    }
    let mut count = 0;
    // element 0 is the identity; partition the rest and add {0}
    for rest in all_partitions(n - 1) {
        let Some(xs) = by_size.get(&(rest.len() + 1)) else {
            continue;
        };
        for x in xs {
            let ok = x.blocks().iter().all(|xb| {
                let id = &ids[xb];
                rest.blocks()
                    .iter()
                    .all(|kb| kb.iter().all(|&e| id[e + 1] == id[kb[0] + 1]))
            });
            if ok {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn counts_match_element_level_brute_force() {
    for spec in test_set()
        .into_iter()
        .filter(|s| group(s).order() <= 8 && group(s).order() > 1)
    {
        let expected = element_level_count(spec);
        assert_eq!(enumerate_sup(&table(spec)).unwrap().len(), expected, "{spec}");
    }
}

#[test]
fn each_side_determines_the_other() {
    for spec in test_set().into_iter().filter(|s| group(s).num_classes() <= 5) {
        let t = table(spec);
        let pairs = brute_force_theories(&t);
        let mut by_k: HashMap<Partition, usize> = HashMap::new();
        let mut by_x: HashMap<Partition, usize> = HashMap::new();
        for (k, x) in &pairs {
            *by_k.entry(k.clone()).or_default() += 1;
            *by_x.entry(x.clone()).or_default() += 1;
        }
        assert!(by_k.values().all(|&c| c == 1), "{spec}");
        assert!(by_x.values().all(|&c| c == 1), "{spec}");
        for (k, x) in &pairs {
            let elements = class_partition_to_elements(t.group(), k);
            let c = from_classes(&t, elements.clone()).unwrap();
            assert_eq!(c.chars(), x, "{spec}");
            assert_eq!(from_chars(&t, x.clone()).unwrap().classes(), &elements, "{spec}");
        }
    }
}

#[test]
fn check_schur_agrees_with_span_closure() {
    // every partition of the elements for very small groups
    for spec in [
        "cyclic:2",
        "cyclic:3",
        "cyclic:4",
        "cyclic:5",
        "cyclic:6",
        "symmetric:3",
    ] {
        let g = group(spec);
        for p in all_partitions(g.order()) {
            assert_eq!(check_schur(&g, &p).is_ok(), is_schur_by_span(&g, &p), "{spec} {p}");
        }
    }
    // class-respecting partitions for the rest with at most six classes
    for spec in small_class_groups() {
        let g = group(spec);
        for k in all_partitions(g.num_classes()) {
            let p = classes_to_elements(&g, &k);
            let s = check_schur(&g, &p);
            assert_eq!(s.is_ok(), is_schur_by_span(&g, &p), "{spec} {p}");
            if let Ok(s) = s {
                assert!(s.is_central());
            }
        }
    }
}

#[test]
fn enumerated_theories_are_central_schur_rings() {
    for spec in test_set() {
        let t = table(spec);
        let g = t.group().clone();
        for c in enumerate_sup(&t).unwrap().theories() {
            let s = check_schur(&g, c.classes()).unwrap();
            assert!(s.is_central(), "{spec}");
            assert!(elements_to_classes(&g, c.classes()).is_some());
            let back = sring_to_sct(&sct_to_sring(c).unwrap(), &t).unwrap();
            assert_eq!(back.chars(), c.chars());
            validate_sct(&t, c.chars().clone(), c.classes().clone()).unwrap();
        }
    }
}
