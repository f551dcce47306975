mod common;

use acg_core::chartab::{character_table, parse_export, CharacterTable, CyclotomicValue};
use acg_core::structure::{center, derived_subgroup};
use acg_core::zoo::{builtin_corpus, sl23_central_product, OrderEightKind};
use acg_core::{PermGroup, Permutation};
use common::{img, Oracle};
use num_rational::Ratio;

fn p(s: &str, n: usize) -> Permutation {
    Permutation::parse(s, n).unwrap()
}

fn grp(gens: &[&str], n: usize) -> PermGroup {
    PermGroup::from_cycles(n, gens).unwrap()
}

fn class_of(t: &CharacterTable, x: &Permutation) -> usize {
    t.classes().class_index(x).unwrap()
}

fn char_of_degree(t: &CharacterTable, d: u64) -> usize {
    t.degrees().iter().position(|&x| x == d).unwrap()
}

#[test]
fn table_examples() {
    let s3 = grp(&["(1 2)", "(1 2 3)"], 3);
    let mut degrees = character_table(&s3).unwrap().degrees().to_vec();
    degrees.sort_unstable();
    assert_eq!(degrees, vec![1, 1, 2]);

    let c4xc2 = grp(&["(1 2 3 4)", "(5 6)"], 6);
    let t = character_table(&c4xc2).unwrap();
    assert_eq!((t.len(), t.linear_count()), (8, 8));

    let g = sl23_central_product(OrderEightKind::D8).unwrap().group;
    let t = character_table(&g).unwrap();
    assert_eq!(t.linear_count(), 12);
    assert!(t.degrees().contains(&4));
}

#[test]
fn vanishing_examples() {
    let s3 = grp(&["(1 2)", "(1 2 3)"], 3);
    let t = character_table(&s3).unwrap();
    let chi = char_of_degree(&t, 2);
    assert!(t.is_zero_at(chi, class_of(&t, &p("(1 2)", 3))).unwrap());
    let trivial = (0..t.len())
        .find(|&i| (0..t.len()).all(|k| t.value(i, k).unwrap().as_integer() == Some(1)))
        .unwrap();
    assert!((0..t.len()).all(|k| !t.is_zero_at(trivial, k).unwrap()));

    let d8 = grp(&["(1 2 3 4)", "(1 3)"], 4);
    let t = character_table(&d8).unwrap();
    let chi = char_of_degree(&t, 2);
    assert!(t.is_zero_at(chi, class_of(&t, &p("(1 3)", 4))).unwrap());
    assert!(t.is_zero_at(chi, class_of(&t, &p("(1 2 3 4)", 4))).unwrap());
}

#[test]
fn orthogonality_examples() {
    let s3 = grp(&["(1 2)", "(1 2 3)"], 3);
    let t = character_table(&s3).unwrap();
    let id = class_of(&t, &s3.identity());
    let tr = class_of(&t, &p("(1 2)", 3));
    let cy = class_of(&t, &p("(1 2 3)", 3));
    assert_eq!(t.orthogonality_check(id, id).unwrap(), 6);
    assert_eq!(t.orthogonality_check(tr, cy).unwrap(), 0);
    assert_eq!(t.orthogonality_check(tr, tr).unwrap(), 2);
}

#[test]
fn restriction_examples() {
    let d8 = grp(&["(1 2 3 4)", "(1 3)"], 4);
    let t = character_table(&d8).unwrap();
    let d = derived_subgroup(&d8);
    assert!(d.same_group(&center(&d8).unwrap()));
    for chi in 0..t.len() {
        let norm = t.restriction_norm(&d8, &d, chi).unwrap();
        let want = if t.degrees()[chi] == 1 { 1 } else { 4 };
        assert_eq!(norm, Ratio::from_integer(want));
    }
    let a4 = grp(&["(1 2 3)", "(2 3 4)"], 4);
    let t = character_table(&a4).unwrap();
    let v4 = derived_subgroup(&a4);
    let chi = char_of_degree(&t, 3);
    assert!(t.restriction_norm(&a4, &v4, chi).unwrap() > Ratio::from_integer(1));
}

#[test]
fn export_round_trip() {
    let a4 = grp(&["(1 2 3)", "(2 3 4)"], 4);
    let t = character_table(&a4).unwrap();
    let back = parse_export(&t.export()).unwrap();
    assert_eq!(back.class_sizes, t.class_sizes());
    assert_eq!(back.conductor, t.conductor());
    for (i, row) in back.rows.iter().enumerate() {
        assert_eq!(row.as_slice(), t.row(i));
    }
}

fn inner(t: &CharacterTable, i: usize, j: usize) -> i64 {
    let sizes = t.class_sizes();
    let mut acc = CyclotomicValue::zero(t.conductor());
    for (k, &s) in sizes.iter().enumerate() {
        let term = t.value(i, k).unwrap() * &t.value(j, k).unwrap().conj();
        acc = &acc + &(&term * &CyclotomicValue::from_integer(t.conductor(), s as i64));
    }
    acc.as_integer().unwrap()
}

#[test]
fn corpus_table_invariants() {
    for z in builtin_corpus().unwrap().into_iter().filter(|z| z.group.order() <= 500) {
        let g = &z.group;
        let t = character_table(g).unwrap();
        let n = g.order();
        assert_eq!(t.degrees().iter().map(|d| d * d).sum::<u64>(), n, "{}", z.name());
        assert!(t.degrees().iter().all(|d| n % d == 0));
        let oracle = Oracle::new(g);
        for (k, c) in t.class_list().iter().enumerate() {
            let brute = oracle.centralizer(&img(&c.representative)).len() as i64;
            assert_eq!(t.orthogonality_check(k, k).unwrap(), brute, "{}", z.name());
        }
        if n <= 200 {
            for i in 0..t.len() {
                for j in i..t.len() {
                    let want = if i == j { n as i64 } else { 0 };
                    assert_eq!(inner(&t, i, j), want, "{} rows {i},{j}", z.name());
                }
            }
        }
    }
}

#[test]
fn corpus_vanishing_matches_centralizer_criterion() {
    for z in builtin_corpus().unwrap().into_iter().filter(|z| z.group.order() <= 300) {
        let g = &z.group;
        let t = character_table(g).unwrap();
        let oracle = Oracle::new(g);
        let index = oracle.commutator_index();
        for (k, c) in t.class_list().iter().enumerate() {
            let brute = oracle.is_anticentral(&img(&c.representative), index);
            assert_eq!(t.nonlinear_vanish_at(k).unwrap(), brute, "{} at {}", z.name(), c.representative);
        }
    }
}
