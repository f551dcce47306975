use std::collections::BTreeMap;

use serde::Serialize;

use super::carter::c_chain;
use super::detect::is_anticentral;
use crate::arith::{pi_part, prime_divisors};
use crate::error::{Error, Result};
use crate::limits;
use crate::perm::{PermGroup, Permutation};
use crate::report::{ReportBuilder, VerificationReport, Witness};
use crate::structure::{
    check_normal, conjugates, group_from_key, is_invariant_under, is_solvable, normalizer,
    product_order, sylow_subgroup,
};

fn require_anticentral(g: &PermGroup, a: &Permutation) -> Result<()> {
    if !is_anticentral(g, a)? {
        return Err(Error::precondition(format!("{a} is not anticentral")));
    }
    Ok(())
}

/// All Sylow `p`-subgroups of `n` that `a` normalizes.
fn invariant_sylows(n: &PermGroup, a: &Permutation, p: u64) -> Result<Vec<PermGroup>> {
    let s = sylow_subgroup(n, p)?;
    let set = conjugates(n, &s)?;
    Ok(set
        .fixed_points(a)
        .iter()
        .map(|k| group_from_key(n.degree(), k))
        .collect())
}

/// The unique Sylow `p`-subgroup of the normal subgroup `n` normalized by
/// anticentral `a`. Every Sylow `p`-subgroup of `n` is scanned.
pub fn invariant_sylow(g: &PermGroup, n: &PermGroup, a: &Permutation, p: u64) -> Result<PermGroup> {
    check_normal(g, n)?;
    require_anticentral(g, a)?;
    let fixed = invariant_sylows(n, a, p)?;
    if fixed.len() == 1 {
        return Ok(fixed.into_iter().next().unwrap());
    }
    let mut b = ReportBuilder::new(g, "sylow-hall");
    let mut w = Witness::element(a).with_subgroup(n);
    for s in &fixed {
        w = w.with_subgroup(s);
    }
    b.fail(
        "unique-invariant-sylow",
        "a normalizes exactly one Sylow p-subgroup of N",
        format!("p = {p}: {} invariant Sylow subgroups", fixed.len()),
        w,
    );
    Err(Error::TheoremViolation(Box::new(b.into_report())))
}

/// Hall `π`-subgroups of `owner`, keyed by the sorted prime set `π`.
#[derive(Debug, Clone, Serialize)]
pub struct HallSystem {
    #[serde(serialize_with = "as_generators")]
    pub owner: PermGroup,
    pub primes: Vec<u64>,
    #[serde(serialize_with = "map_as_generators")]
    pub subgroups: BTreeMap<Vec<u64>, PermGroup>,
}

fn as_generators<S: serde::Serializer>(g: &PermGroup, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&g.generators_string())
}

fn map_as_generators<S: serde::Serializer>(
    m: &BTreeMap<Vec<u64>, PermGroup>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(m.len()))?;
    for (k, v) in m {
        let key: Vec<String> = k.iter().map(|p| p.to_string()).collect();
        map.serialize_entry(&format!("{{{}}}", key.join(",")), &v.generators_string())?;
    }
    map.end()
}

impl HallSystem {
    pub fn get(&self, primes: &[u64]) -> Option<&PermGroup> {
        let mut key = primes.to_vec();
        key.sort_unstable();
        self.subgroups.get(&key)
    }

    /// The Sylow basis: the members for single primes.
    pub fn sylow_basis(&self) -> Vec<&PermGroup> {
        self.primes.iter().map(|&p| &self.subgroups[&vec![p]]).collect()
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }
}

fn subsets(primes: &[u64]) -> Vec<Vec<u64>> {
    (0..1usize << primes.len())
        .map(|mask| {
            primes
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect()
        })
        .collect()
}

fn join_all<'a>(degree: usize, groups: impl IntoIterator<Item = &'a PermGroup>) -> PermGroup {
    groups
        .into_iter()
        .fold(PermGroup::trivial(degree), |acc, h| acc.join(h))
}

fn build_hall_system(g: &PermGroup, n: &PermGroup, a: &Permutation) -> Result<(HallSystem, ReportBuilder)> {
    check_normal(g, n)?;
    if !is_solvable(n) {
        return Err(Error::Unsupported("Hall systems need a solvable normal subgroup".into()));
    }
    require_anticentral(g, a)?;
    let primes = prime_divisors(n.order());
    let mut sylows = BTreeMap::new();
    for &p in &primes {
        sylows.insert(p, invariant_sylow(g, n, a, p)?);
    }
    // complement basis: K_p generated by the Sylows for the other primes
    let complements: BTreeMap<u64, PermGroup> = primes
        .iter()
        .map(|&p| {
            let others = sylows.iter().filter(|(&q, _)| q != p).map(|(_, s)| s);
            (p, join_all(n.degree(), others))
        })
        .collect();

    let mut b = ReportBuilder::new(g, "sylow-hall");
    let mut subgroups = BTreeMap::new();
    for pi in subsets(&primes) {
        let h = join_all(n.degree(), pi.iter().map(|p| &sylows[p]));
        let target = pi_part(n.order(), &pi);
        let id = format!("hall-{pi:?}");
        b.check(
            &format!("{id}-order"),
            "the invariant Hall subgroup has the pi-part of |N| as order",
            h.order() == target,
            format!("|H| = {}, expected {target}", h.order()),
            || Witness::subgroup(&h),
        );
        let meet = primes
            .iter()
            .filter(|p| !pi.contains(p))
            .try_fold(n.clone(), |acc, p| acc.intersection(&complements[p]))?;
        b.check(
            &format!("{id}-complement-meet"),
            "the Hall subgroup is the intersection of the complements for primes outside pi",
            meet.same_group(&h),
            format!("|meet| = {}", meet.order()),
            || Witness::subgroup(&h).with_subgroup(&meet),
        );
        b.check(
            &format!("{id}-invariant"),
            "a normalizes the Hall subgroup",
            is_invariant_under(&h, a),
            "",
            || Witness::element(a).with_subgroup(&h),
        );
        if !pi.is_empty() && pi.len() < primes.len() && n.order() <= limits::SCAN_LIMIT {
            let fixed = conjugates(n, &h)?.fixed_points(a).len();
            b.check(
                &format!("{id}-unique"),
                "a normalizes exactly one Hall pi-subgroup of N",
                fixed == 1,
                format!("{fixed} invariant conjugates"),
                || Witness::element(a).with_subgroup(&h),
            );
        }
        subgroups.insert(pi, h);
    }
    let keys: Vec<&Vec<u64>> = subgroups.keys().collect();
    let mut bad = None;
    'outer: for (i, x) in keys.iter().enumerate() {
        for y in &keys[i + 1..] {
            let (h, k) = (&subgroups[*x], &subgroups[*y]);
            if product_order(h, k)? != h.join(k).order() {
                bad = Some((h.clone(), k.clone()));
                break 'outer;
            }
        }
    }
    b.check(
        "hall-permutable",
        "members of the Hall system permute pairwise",
        bad.is_none(),
        format!("{} members", subgroups.len()),
        || {
            let (h, k) = bad.clone().unwrap();
            Witness::subgroup(&h).with_subgroup(&k)
        },
    );
    Ok((
        HallSystem {
            owner: n.clone(),
            primes,
            subgroups,
        },
        b,
    ))
}

/// The Hall system of the solvable normal subgroup `n` whose members are
/// all normalized by anticentral `a`.
pub fn hall_system(g: &PermGroup, n: &PermGroup, a: &Permutation) -> Result<HallSystem> {
    let (system, b) = build_hall_system(g, n, a)?;
    b.finish()?;
    Ok(system)
}

/// The checks behind [`hall_system`] as a report.
pub fn hall_system_report(g: &PermGroup, n: &PermGroup, a: &Permutation) -> Result<VerificationReport> {
    let (_, b) = build_hall_system(g, n, a)?;
    b.finish()
}

/// `C^inf(a)` equals the intersection of `N_G(P)` over the `a`-invariant
/// Sylow subgroups `P`, one per prime.
pub fn sylow_normalizer_identity(g: &PermGroup, a: &Permutation) -> Result<VerificationReport> {
    require_anticentral(g, a)?;
    let d = c_chain(g, a)?.limit;
    let mut meet = g.clone();
    for p in prime_divisors(g.order()) {
        let s = invariant_sylow(g, g, a, p)?;
        meet = meet.intersection(&normalizer(g, &s)?)?;
    }
    let mut b = ReportBuilder::new(g, "sylow-hall");
    let differing = if meet.same_group(&d) {
        None
    } else {
        let els = if meet.order() >= d.order() { meet.elements()? } else { d.elements()? };
        els.iter().find(|x| meet.contains(x) != d.contains(x)).cloned()
    };
    b.check(
        "limit-is-normalizer-meet",
        "C^inf(a) is the intersection of the normalizers of the a-invariant Sylow subgroups",
        differing.is_none(),
        format!("|C^inf(a)| = {}, |meet| = {}", d.order(), meet.order()),
        || {
            let w = Witness::element(a).with_subgroup(&d).with_subgroup(&meet);
            match &differing {
                Some(x) => w.with_element(x),
                None => w,
            }
        },
    );
    b.finish()
}

/// For a supplement `H` of `G'` containing anticentral `a`: the `a`-invariant
/// Sylow `p`-subgroup `P` of `G` meets `H` in the `a`-invariant Sylow
/// `p`-subgroup `S` of `H`.
pub fn sylow_meet_supplement(g: &PermGroup, h: &PermGroup, a: &Permutation, p: u64) -> Result<VerificationReport> {
    h.check_subgroup_of(g)?;
    h.check_member(a)?;
    if !crate::structure::is_supplement(g, h)? {
        return Err(Error::precondition("H G' != G"));
    }
    require_anticentral(g, a)?;
    let mut b = ReportBuilder::new(g, "sylow-hall");
    let in_h = is_anticentral(h, a)?;
    b.check(
        "anticentral-in-supplement",
        "a is anticentral in H",
        in_h,
        "",
        || Witness::element(a).with_subgroup(h),
    );
    if in_h {
        let big = invariant_sylow(g, g, a, p)?;
        let small = invariant_sylow(h, h, a, p)?;
        let meet = big.intersection(h)?;
        b.check(
            "sylow-meets-supplement",
            "P ∩ H = S for the a-invariant Sylow subgroups",
            meet.same_group(&small),
            format!("p = {p}: |P| = {}, |P ∩ H| = {}, |S| = {}", big.order(), meet.order(), small.order()),
            || Witness::element(a).with_subgroup(&big).with_subgroup(&small),
        );
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(gens: &[&str], n: usize) -> PermGroup {
        PermGroup::from_cycles(n, gens).unwrap()
    }
    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn invariant_sylows_of_small_groups() {
        let a4 = grp(&["(1 2 3)", "(2 3 4)"], 4);
        let a = p("(1 2 3)", 4);
        assert!(invariant_sylow(&a4, &a4, &a, 3).unwrap().same_group(&grp(&["(1 2 3)"], 4)));
        assert_eq!(invariant_sylow(&a4, &a4, &a, 2).unwrap().order(), 4);
        let s3s3 = grp(&["(1 2)", "(1 2 3)", "(4 5)", "(4 5 6)"], 6);
        let a = p("(1 2)(4 5)", 6);
        let s = invariant_sylow(&s3s3, &s3s3, &a, 2).unwrap();
        assert!(s.same_group(&grp(&["(1 2)", "(4 5)"], 6)));
    }

    #[test]
    fn hall_systems() {
        let s3 = grp(&["(1 2)", "(1 2 3)"], 3);
        let h = hall_system(&s3, &s3, &p("(1 2)", 3)).unwrap();
        assert_eq!(h.len(), 4);
        assert!(h.get(&[2]).unwrap().same_group(&grp(&["(1 2)"], 3)));
        assert_eq!(h.get(&[3]).unwrap().order(), 3);
        assert_eq!(h.get(&[]).unwrap().order(), 1);

        let s3a4 = grp(&["(1 2)", "(1 2 3)", "(4 5 6)", "(5 6 7)"], 7);
        let a = p("(1 2)(4 5 6)", 7);
        let h = hall_system(&s3a4, &s3a4, &a).unwrap();
        assert_eq!(h.get(&[2]).unwrap().order(), 8);
        assert_eq!(h.get(&[3]).unwrap().order(), 9);
        assert_eq!(h.get(&[2, 3]).unwrap().order(), 72);
        assert!(hall_system_report(&s3a4, &s3a4, &a).unwrap().all_passed());
    }

    #[test]
    fn normalizer_identity_and_meet() {
        let a4 = grp(&["(1 2 3)", "(2 3 4)"], 4);
        let a = p("(1 2 3)", 4);
        assert!(sylow_normalizer_identity(&a4, &a).unwrap().all_passed());
        let s3 = grp(&["(1 2)", "(1 2 3)"], 3);
        assert!(sylow_normalizer_identity(&s3, &p("(1 2)", 3)).unwrap().all_passed());
        let h = grp(&["(1 2 3)"], 4);
        assert!(sylow_meet_supplement(&a4, &h, &a, 2).unwrap().all_passed());
        assert!(sylow_meet_supplement(&a4, &a4, &a, 3).unwrap().all_passed());
    }
}
