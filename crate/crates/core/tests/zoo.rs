mod common;

use acg_core::anticentral::{find_anticentral_classes, is_anticentral};
use acg_core::structure::{center, centralizer, derived_subgroup, nilpotency_class, quotient_group};
use acg_core::zoo::{
    abelian_group, builtin_corpus, central_product_sl23_e, construct, direct_product, extraspecial,
    fpf_semidirect, frobenius, manifest_report, two_generated_2group, unitriangular, wreath_pp,
    ExponentType, GroupManifest, OrderEightKind, Params, TwoGroupKind,
};
use acg_core::{PermGroup, Permutation};
use common::{img, Oracle};

fn kv(pairs: &[(&str, &str)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

fn anticentral_count(g: &PermGroup) -> u64 {
    find_anticentral_classes(g).unwrap().iter().map(|c| c.size).sum()
}

#[test]
fn abelian_examples() {
    let c6 = abelian_group(&[6]).unwrap();
    assert_eq!((c6.order(), c6.degree()), (6, 6));
    let v = abelian_group(&[2, 2]).unwrap();
    assert_eq!((v.order(), v.degree()), (4, 4));
    let g = abelian_group(&[4, 2]).unwrap();
    assert_eq!(g.order(), 8);
    assert_eq!(anticentral_count(&g), 8);
}

#[test]
fn two_group_examples() {
    let d8 = two_generated_2group(TwoGroupKind::Dihedral, 8).unwrap();
    let d = derived_subgroup(&d8);
    assert_eq!(anticentral_count(&d8), d8.order() - d.order());
    let q8 = two_generated_2group(TwoGroupKind::Quaternion, 8).unwrap();
    assert_eq!(nilpotency_class(&q8), Some(2));
    let d16 = two_generated_2group(TwoGroupKind::Dihedral, 16).unwrap();
    assert_eq!(nilpotency_class(&d16), Some(3));
    let reps = find_anticentral_classes(&d16).unwrap();
    assert!(!reps.is_empty());
    assert!(reps.iter().all(|c| c.representative.order() <= 4));
}

#[test]
fn extraspecial_examples() {
    let he = extraspecial(3, 27, ExponentType::Small).unwrap();
    assert_eq!(he.exponent().unwrap(), 3);
    assert_eq!(anticentral_count(&he), 24);
    let d8 = extraspecial(2, 8, ExponentType::Small).unwrap();
    assert_eq!(d8.order(), 8);
    assert_eq!(d8.elements().unwrap().iter().filter(|x| x.order() == 2).count(), 5);
    for kind in [ExponentType::Small, ExponentType::Large] {
        let g = extraspecial(2, 32, kind).unwrap();
        let z = center(&g).unwrap();
        let reps = find_anticentral_classes(&g).unwrap();
        assert!(!reps.is_empty());
        assert_eq!(anticentral_count(&g), g.order() - z.order());
        for c in reps {
            let ca = centralizer(&g, &c.representative).unwrap();
            assert!(!ca.is_abelian());
            assert!(!is_anticentral(&ca, &c.representative).unwrap());
        }
    }
}

#[test]
fn extraspecial_shape() {
    for (p, order) in [(2, 8), (2, 32), (3, 27), (3, 243)] {
        for kind in [ExponentType::Small, ExponentType::Large] {
            let g = extraspecial(p, order, kind).unwrap();
            let z = center(&g).unwrap();
            let d = derived_subgroup(&g);
            assert_eq!(z.order(), p);
            assert!(z.same_group(&d));
            let q = quotient_group(&g, &z).unwrap();
            assert!(q.image().is_abelian());
            assert_eq!(q.image().exponent().unwrap(), p);
        }
    }
}

#[test]
fn unitriangular_examples() {
    for (n, q, order, c) in [(3, 2, 8, 4), (4, 2, 64, 8), (3, 3, 27, 9)] {
        let (g, a) = unitriangular(n, q).unwrap();
        assert_eq!(g.order(), order);
        assert!(is_anticentral(&g, &a).unwrap());
        assert_eq!(Oracle::new(&g).centralizer(&img(&a)).len() as u64, c);
        let mut power = q;
        while power < n as u64 {
            power *= q;
        }
        assert_eq!(a.order(), power);
    }
}

#[test]
fn central_product_examples() {
    for kind in [OrderEightKind::D8, OrderEightKind::Q8] {
        let (g, a) = central_product_sl23_e(kind).unwrap();
        assert_eq!((g.order(), g.degree()), (96, 96));
        assert!(is_anticentral(&g, &a).unwrap());
        assert_eq!(centralizer(&g, &a).unwrap().order(), 12);
        let q = quotient_group(&g, &center(&g).unwrap()).unwrap();
        assert!(is_anticentral(q.image(), &q.project(&a).unwrap()).unwrap());
    }
}

#[test]
fn fpf_examples() {
    let (s3, t) = fpf_semidirect(&[3]).unwrap();
    assert_eq!(s3.order(), 6);
    assert!(is_anticentral(&s3, &t).unwrap());
    let (d10, t) = fpf_semidirect(&[5]).unwrap();
    assert_eq!(centralizer(&d10, &t).unwrap().order(), 2);
    assert!(is_anticentral(&d10, &t).unwrap());
    let (g, t) = fpf_semidirect(&[3, 3]).unwrap();
    assert_eq!(g.order(), 18);
    assert!(is_anticentral(&g, &t).unwrap());
}

#[test]
fn classical_examples() {
    let a5 = construct("classical", &kv(&[("kind", "alternating"), ("n", "5")])).unwrap();
    assert_eq!(a5.group.order(), 60);
    assert!(find_anticentral_classes(&a5.group).unwrap().is_empty());
    let (f21, y) = frobenius(7, 3).unwrap();
    assert_eq!(f21.order(), 21);
    for x in f21.elements().unwrap().iter() {
        assert_eq!(x.order() == 3, is_anticentral(&f21, x).unwrap());
    }
    assert_eq!(y.order(), 3);
    let w = wreath_pp(3).unwrap();
    assert_eq!(w.order(), 81);
    assert_eq!(nilpotency_class(&w), Some(3));
    assert!(anticentral_count(&w) > 0);
}

#[test]
fn direct_product_examples() {
    let s3 = PermGroup::from_cycles(3, &["(1 2)", "(1 2 3)"]).unwrap();
    let g = direct_product(&s3, &s3);
    assert_eq!((g.order(), g.degree()), (36, 6));
    let t = PermGroup::trivial(1);
    let g = direct_product(&s3, &t);
    assert_eq!(g.order(), 6);
    let a4 = PermGroup::from_cycles(4, &["(1 2 3)", "(2 3 4)"]).unwrap();
    let g = direct_product(&s3, &a4);
    assert_eq!(g.order(), 72);
    let a = Permutation::parse("(1 2)(4 5 6)", 7).unwrap();
    assert!(is_anticentral(&g, &a).unwrap());
    let o = Oracle::new(&g);
    assert!(o.is_anticentral(&img(&a), o.commutator_index()));
}

#[test]
fn manifests_are_checked() {
    let z = construct("unitriangular", &kv(&[("n", "4"), ("q", "2")])).unwrap();
    assert_eq!(z.manifest.expected.designated_centralizer_order, Some(8));
    let text = z.manifest.to_json();
    let back = GroupManifest::from_json(&text).unwrap();
    assert!(manifest_report(&z.group, &back, None).unwrap().all_passed());
    let mut wrong = back;
    wrong.expected.designated_centralizer_order = Some(16);
    let err = manifest_report(&z.group, &wrong, None).unwrap_err();
    assert!(err.is_theorem_violation());
    assert!(construct("extraspecial", &kv(&[("p", "3"), ("order", "27"), ("exponent", "p")])).is_ok());
    assert!(construct("unitriangular", &kv(&[("n", "4")])).is_err());
    assert!(construct("extraspecial", &kv(&[("p", "3"), ("order", "28")])).is_err());
}

#[test]
fn corpus_manifests_hold() {
    let corpus = builtin_corpus().unwrap();
    assert!(corpus.len() >= 25);
    for z in corpus {
        assert!(z.check_manifest().unwrap().all_passed(), "{}", z.name());
    }
}
