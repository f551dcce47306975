use std::collections::HashSet;
use std::hash::Hash;

use super::detect::is_anticentral;
use crate::error::{Error, Result};
use crate::limits;
use crate::perm::{ActionSet, PermGroup, Permutation};
use crate::report::{ReportBuilder, VerificationReport, Witness};
use crate::structure::{centralizer, derived_subgroup, is_supplement, normalizer};

/// The unique point of `omega` fixed by anticentral `a`, when `G'` is
/// transitive on `omega`.
pub fn fixed_point_analysis<P>(omega: &ActionSet<P>, g: &PermGroup, a: &Permutation) -> Result<P>
where
    P: Clone + Eq + Hash + std::fmt::Debug,
{
    if !is_anticentral(g, a)? {
        return Err(Error::precondition(format!("{a} is not anticentral")));
    }
    let derived = derived_subgroup(g);
    if !omega.is_transitive_under(&derived)? {
        return Err(Error::precondition("the derived subgroup is not transitive on the set"));
    }
    let fixed = omega.fixed_points(a);
    if fixed.len() == 1 {
        return Ok(fixed.into_iter().next().unwrap());
    }
    let mut b = ReportBuilder::new(g, "supplements");
    b.fail(
        "unique-fixed-point",
        "a fixes exactly one point of a G'-transitive G-set",
        format!("{} fixed points among {}", fixed.len(), omega.len()),
        Witness::element(a),
    );
    Err(Error::TheoremViolation(Box::new(b.into_report())))
}

/// Checks for a supplement `H` of `G'` containing anticentral `a`:
/// `[a, H] = H' = H ∩ G'`, `a` anticentral in `H`, `{x : a in H^x} = H`,
/// `C_G(a) <= H`, `N_G(H) = H`, and abnormality `x in <H, H^x>`.
pub fn supplement_properties(g: &PermGroup, h: &PermGroup, a: &Permutation) -> Result<VerificationReport> {
    h.check_subgroup_of(g)?;
    if !h.contains(a) {
        return Err(Error::precondition(format!("{a} is not in the supplement")));
    }
    if !is_supplement(g, h)? {
        return Err(Error::precondition("H G' != G"));
    }
    if !is_anticentral(g, a)? {
        return Err(Error::precondition(format!("{a} is not anticentral")));
    }
    let mut b = ReportBuilder::new(g, "supplements");
    let wh = || Witness::element(a).with_subgroup(h);

    let derived = derived_subgroup(g);
    let h_els = h.elements()?;
    let commutators: HashSet<Permutation> = h_els.iter().map(|x| a.commutator_unchecked(x)).collect();
    let h_derived = derived_subgroup(h);
    let meet = h.intersection(&derived)?;
    let hd: HashSet<Permutation> = h_derived.elements()?.iter().cloned().collect();
    let mt: HashSet<Permutation> = meet.elements()?.iter().cloned().collect();
    b.check(
        "commutator-set-equalities",
        "[a, H] = H' = H ∩ G'",
        commutators == hd && hd == mt,
        format!("|[a,H]| = {}, |H'| = {}, |H ∩ G'| = {}", commutators.len(), hd.len(), mt.len()),
        wh,
    );
    b.check(
        "anticentral-in-supplement",
        "a is anticentral in H",
        is_anticentral(h, a)?,
        "",
        wh,
    );

    let g_els = g.elements()?;
    let conjugators: Vec<&Permutation> = g_els
        .iter()
        .filter(|x| h.contains(&a.conjugate_by(&x.inverse())))
        .collect();
    let bad = conjugators.iter().find(|x| !h.contains(x));
    b.check(
        "conjugates-containing-a",
        "{x : a in H^x} = H",
        conjugators.len() as u64 == h.order() && bad.is_none(),
        format!("{} conjugating elements", conjugators.len()),
        || match bad {
            Some(x) => wh().with_element(x),
            None => wh(),
        },
    );
    let c = centralizer(g, a)?;
    b.check(
        "centralizer-inside",
        "C_G(a) <= H",
        c.is_subgroup_of(h),
        format!("|C_G(a)| = {}", c.order()),
        || wh().with_subgroup(&c),
    );
    let n = normalizer(g, h)?;
    b.check(
        "self-normalizing",
        "N_G(H) = H",
        n.order() == h.order(),
        format!("|N_G(H)| = {}", n.order()),
        || wh().with_subgroup(&n),
    );

    let exhaustive = g.order() <= limits::LATTICE_LIMIT;
    let stride = if exhaustive {
        1
    } else {
        (g_els.len() / limits::LATTICE_LIMIT as usize).max(1)
    };
    b.regime(if exhaustive { "exhaustive" } else { "sampled" });
    let bad = g_els
        .iter()
        .step_by(stride)
        .find(|x| !h.join(&h.conjugate(x)).contains(x));
    b.check(
        "abnormal",
        "x in <H, H^x> for all x in G",
        bad.is_none(),
        format!("{} elements tested", g_els.len().div_ceil(stride)),
        || match bad {
            Some(x) => wh().with_element(x),
            None => wh(),
        },
    );
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::coset_action;
    use crate::structure::{conjugates, sylow_subgroup};

    fn grp(gens: &[&str], n: usize) -> PermGroup {
        PermGroup::from_cycles(n, gens).unwrap()
    }
    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn fixed_points() {
        let s3 = grp(&["(1 2)", "(1 2 3)"], 3);
        let h = grp(&["(1 2)"], 3);
        let (omega, _) = coset_action(&s3, &h).unwrap();
        let fixed = fixed_point_analysis(&omega, &s3, &p("(1 2)", 3)).unwrap();
        assert_eq!(omega.index_of(&fixed), Some(0));

        let (one, _) = coset_action(&s3, &s3).unwrap();
        assert!(fixed_point_analysis(&one, &s3, &p("(1 2)", 3)).is_ok());

        let a4 = grp(&["(1 2 3)", "(2 3 4)"], 4);
        let a = p("(1 2 3)", 4);
        let syl = conjugates(&a4, &sylow_subgroup(&a4, 3).unwrap()).unwrap();
        assert_eq!(syl.len(), 4);
        let fixed = fixed_point_analysis(&syl, &a4, &a).unwrap();
        assert!(fixed.contains(&a));

        // S3 acting on its points: A3 is transitive, but (1 2 3) is not anticentral
        let nat = ActionSet::natural(s3.clone());
        assert!(matches!(
            fixed_point_analysis(&nat, &s3, &p("(1 2 3)", 3)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn supplements() {
        let s3 = grp(&["(1 2)", "(1 2 3)"], 3);
        let a = p("(1 2)", 3);
        assert!(supplement_properties(&s3, &grp(&["(1 2)"], 3), &a).unwrap().all_passed());
        assert!(supplement_properties(&s3, &s3, &a).unwrap().all_passed());
        let a4 = grp(&["(1 2 3)", "(2 3 4)"], 4);
        let a = p("(1 2 3)", 4);
        assert!(supplement_properties(&a4, &grp(&["(1 2 3)"], 4), &a).unwrap().all_passed());
        let v4 = grp(&["(1 2)(3 4)", "(1 3)(2 4)"], 4);
        assert!(supplement_properties(&a4, &v4, &p("(1 2)(3 4)", 4)).is_err());
    }
}
