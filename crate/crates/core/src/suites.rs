//! Named verification suites run on one group at a time.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::anticentral::{
    carter_verify, c_chain, cyclic_sylow_complement_check, direct_product_check, equivalence_sweep,
    find_anticentral_classes, fixed_point_analysis, hall_system_report, hereditary_checks,
    invariant_class_bijection, invariant_sylow, normal_sylow_criteria, solvability_contrapositive,
    supplement_properties, sylow_meet_supplement, sylow_normalizer_identity, CarterVerifier,
    ChiefCriterion,
};
use crate::arith::prime_divisors;
use crate::chartab::character_table;
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::perm::{coset_action, PermGroup, Permutation};
use crate::report::{ReportBuilder, VerificationReport, Witness};
use crate::structure::{derived_series, derived_subgroup, is_normal, is_solvable, sylow_subgroup};

/// Default order limit for suites that need no character table.
pub const DEFAULT_MAX_ORDER: u64 = 2000;
/// Default order limit for suites that build a character table.
pub const DEFAULT_CHARTAB_MAX_ORDER: u64 = 300;
/// Anticentral class representatives examined per group by the costlier suites.
pub const REPS_PER_GROUP: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Equivalences,
    Supplements,
    Carter,
    SylowHall,
    PComplement,
    NormalSylow,
    InvariantClasses,
    ChiefFactors,
    Solvability,
    Hereditary,
    Chartab,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Equivalences,
        Suite::Supplements,
        Suite::Carter,
        Suite::SylowHall,
        Suite::PComplement,
        Suite::NormalSylow,
        Suite::InvariantClasses,
        Suite::ChiefFactors,
        Suite::Solvability,
        Suite::Hereditary,
        Suite::Chartab,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::Equivalences => "equivalences",
            Suite::Supplements => "supplements",
            Suite::Carter => "carter",
            Suite::SylowHall => "sylow-hall",
            Suite::PComplement => "p-complement",
            Suite::NormalSylow => "normal-sylow",
            Suite::InvariantClasses => "invariant-classes",
            Suite::ChiefFactors => "chief-factors",
            Suite::Solvability => "solvability",
            Suite::Hereditary => "hereditary",
            Suite::Chartab => "chartab",
        }
    }

    pub fn uses_character_table(self) -> bool {
        self == Suite::Chartab
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .copied()
            .find(|x| x.id() == s)
            .ok_or_else(|| {
                let ids: Vec<&str> = Suite::ALL.iter().map(|x| x.id()).collect();
                Error::InvalidParameters(format!("unknown suite `{s}`; expected one of {}", ids.join(", ")))
            })
    }
}

/// Parse a comma-separated suite list; unknown ids are rejected.
pub fn parse_suites(text: &str) -> Result<Vec<Suite>> {
    let mut out: Vec<Suite> = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect::<Result<_>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_order: u64,
    pub chartab_max_order: u64,
    /// Strategy for per-element sweeps inside one group.
    pub exec: Exec,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_order: DEFAULT_MAX_ORDER,
            chartab_max_order: DEFAULT_CHARTAB_MAX_ORDER,
            exec: Exec::Sequential,
        }
    }
}

impl SuiteConfig {
    /// One limit for every suite.
    pub fn with_max_order(mut self, m: u64) -> Self {
        self.max_order = m;
        self.chartab_max_order = m;
        self
    }

    pub fn limit(&self, suite: Suite) -> u64 {
        if suite.uses_character_table() {
            self.chartab_max_order
        } else {
            self.max_order
        }
    }

    pub fn applies(&self, suite: Suite, g: &PermGroup) -> bool {
        g.order() <= self.limit(suite)
    }
}

/// Run one suite. Capacity errors become skipped records; theorem
/// violations are recorded as failures; other errors propagate.
pub fn run_suite(suite: Suite, g: &PermGroup, config: &SuiteConfig) -> Result<VerificationReport> {
    let mut b = ReportBuilder::new(g, suite.id());
    let result = match suite {
        Suite::Equivalences => equivalences(g, config),
        Suite::Supplements => supplements(g),
        Suite::Carter => carter(g),
        Suite::SylowHall => sylow_hall(g),
        Suite::PComplement => p_complement(g),
        Suite::NormalSylow => normal_sylow(g),
        Suite::InvariantClasses => per_rep(g, "invariant-classes", usize::MAX, invariant_class_bijection),
        Suite::ChiefFactors => chief_factors(g),
        Suite::Solvability => solvability_contrapositive(g),
        Suite::Hereditary => hereditary(g),
        Suite::Chartab => chartab(g),
    };
    b.absorb(suite.id(), suite.id(), result)?;
    Ok(b.into_report())
}

fn anticentral_reps(g: &PermGroup, limit: usize) -> Result<Vec<Permutation>> {
    Ok(find_anticentral_classes(g)?
        .into_iter()
        .take(limit)
        .map(|c| c.representative)
        .collect())
}

fn merge(b: &mut ReportBuilder, id: &str, r: Result<VerificationReport>) -> Result<()> {
    b.absorb(id, id, r).map(|_| ())
}

fn per_rep<F>(g: &PermGroup, suite: &str, limit: usize, f: F) -> Result<VerificationReport>
where
    F: Fn(&PermGroup, &Permutation) -> Result<VerificationReport>,
{
    let mut b = ReportBuilder::new(g, suite);
    for a in anticentral_reps(g, limit)? {
        merge(&mut b, suite, f(g, &a))?;
    }
    b.finish()
}

fn equivalences(g: &PermGroup, config: &SuiteConfig) -> Result<VerificationReport> {
    let with_chars = g.order() <= config.chartab_max_order;
    let certs = equivalence_sweep(g, with_chars, config.exec)?;
    let derived = derived_subgroup(g);
    let nonabelian = !g.is_abelian();
    let mut b = ReportBuilder::new(g, "equivalences");
    let disagree = certs.iter().find(|c| !c.conditions_agree());
    b.check(
        "conditions-agree",
        "centralizer, class-coset, commutator-set and character conditions agree",
        disagree.is_none(),
        format!(
            "{} elements, character condition {}",
            certs.len(),
            if with_chars { "evaluated" } else { "not evaluated" }
        ),
        || Witness::element(&disagree.unwrap().element),
    );
    let small = certs.iter().find(|c| c.centralizer_order < c.commutator_index);
    b.check(
        "centralizer-lower-bound",
        "|C_G(a)| >= |G:G'| for every element",
        small.is_none(),
        "",
        || Witness::element(&small.unwrap().element),
    );
    let inside = certs
        .iter()
        .find(|c| nonabelian && c.is_anticentral() && derived.contains(&c.element));
    b.check(
        "anticentral-outside-derived",
        "in a nonabelian group anticentral elements lie outside G'",
        inside.is_none(),
        format!("{} anticentral elements", certs.iter().filter(|c| c.is_anticentral()).count()),
        || Witness::element(&inside.unwrap().element),
    );
    b.finish()
}

fn supplements(g: &PermGroup) -> Result<VerificationReport> {
    let mut b = ReportBuilder::new(g, "supplements");
    for a in anticentral_reps(g, REPS_PER_GROUP)? {
        let d = c_chain(g, &a)?.limit;
        merge(&mut b, "supplements", supplement_properties(g, &d, &a))?;
        merge(&mut b, "supplements", supplement_properties(g, g, &a))?;
        let (cosets, _) = coset_action(g, &d)?;
        match fixed_point_analysis(&cosets, g, &a) {
            Ok(point) => {
                b.check(
                    "fixed-coset",
                    "a fixes exactly one coset of D, namely D",
                    cosets.index_of(&point) == Some(0),
                    format!("{} cosets", cosets.len()),
                    || Witness::element(&a).with_subgroup(&d),
                );
            }
            Err(e) => merge(&mut b, "fixed-coset", Err(e))?,
        }
    }
    b.finish()
}

fn carter(g: &PermGroup) -> Result<VerificationReport> {
    let reps = anticentral_reps(g, usize::MAX)?;
    let mut b = ReportBuilder::new(g, "carter");
    if reps.is_empty() {
        return b.finish();
    }
    let verifier = CarterVerifier::new(g)?;
    b.regime(verifier.regime());
    for a in &reps {
        merge(&mut b, "carter", verifier.verify(a))?;
    }
    b.finish()
}

fn sylow_hall(g: &PermGroup) -> Result<VerificationReport> {
    let mut b = ReportBuilder::new(g, "sylow-hall");
    let solvable = is_solvable(g);
    let derived = derived_subgroup(g);
    for a in anticentral_reps(g, REPS_PER_GROUP)? {
        for p in prime_divisors(g.order()) {
            match invariant_sylow(g, g, &a, p) {
                Ok(s) => {
                    b.pass(
                        "unique-invariant-sylow",
                        "a normalizes exactly one Sylow p-subgroup",
                        format!("p = {p}, |P| = {}", s.order()),
                    );
                }
                Err(e) => merge(&mut b, "unique-invariant-sylow", Err(e))?,
            }
        }
        merge(&mut b, "sylow-normalizers", sylow_normalizer_identity(g, &a))?;
        if solvable {
            merge(&mut b, "hall-system", hall_system_report(g, g, &a))?;
            if !derived.is_trivial() {
                merge(&mut b, "hall-system", hall_system_report(g, &derived, &a))?;
            }
        }
        let d = c_chain(g, &a)?.limit;
        for p in prime_divisors(g.order()) {
            merge(&mut b, "sylow-meet", sylow_meet_supplement(g, &d, &a, p))?;
        }
    }
    b.finish()
}

fn has_cyclic_sylow(n: &PermGroup, p: u64) -> Result<bool> {
    let s = sylow_subgroup(n, p)?;
    Ok(s.elements()?.iter().any(|x| x.order() == s.order()))
}

fn p_complement(g: &PermGroup) -> Result<VerificationReport> {
    let mut b = ReportBuilder::new(g, "p-complement");
    let reps = anticentral_reps(g, REPS_PER_GROUP)?;
    if reps.is_empty() {
        return b.finish();
    }
    let normals: Vec<PermGroup> = derived_series(g).into_iter().skip(1).filter(|n| !n.is_trivial()).collect();
    for a in &reps {
        for n in &normals {
            for p in prime_divisors(n.order()) {
                if has_cyclic_sylow(n, p)? {
                    merge(&mut b, "p-complement", cyclic_sylow_complement_check(g, a, n, p))?;
                }
            }
        }
    }
    b.finish()
}

fn normal_sylow(g: &PermGroup) -> Result<VerificationReport> {
    let mut b = ReportBuilder::new(g, "normal-sylow");
    let classes = crate::structure::conjugacy_classes(g)?;
    for p in prime_divisors(g.order()) {
        let s = sylow_subgroup(g, p)?;
        if !is_normal(g, &s) {
            continue;
        }
        for c in classes.iter() {
            merge(
                &mut b,
                "normal-sylow",
                normal_sylow_criteria(g, &c.representative, p, None).map(|(_, r)| r),
            )?;
        }
    }
    b.finish()
}

fn chief_factors(g: &PermGroup) -> Result<VerificationReport> {
    let mut b = ReportBuilder::new(g, "chief-factors");
    if !is_solvable(g) {
        return b.finish();
    }
    let criterion = ChiefCriterion::new(g)?;
    let els = g.elements()?;
    let mut mismatches = 0usize;
    let mut first = None;
    for x in els.iter() {
        let predicted = criterion.criterion(x)?;
        let actual = crate::anticentral::is_anticentral(g, x)?;
        if predicted != actual {
            mismatches += 1;
            first.get_or_insert_with(|| x.clone());
        }
    }
    b.check(
        "chief-factor-criterion",
        "the chief-factor criterion matches anticentrality element by element",
        mismatches == 0,
        format!("{} elements, {mismatches} mismatches", els.len()),
        || Witness::element(first.as_ref().unwrap()),
    );
    b.finish()
}

fn hereditary(g: &PermGroup) -> Result<VerificationReport> {
    let mut b = ReportBuilder::new(g, "hereditary");
    let mut subjects = anticentral_reps(g, REPS_PER_GROUP)?;
    subjects.push(g.identity());
    let s3 = PermGroup::from_cycles(3, &["(1 2)", "(1 2 3)"])?;
    let t = Permutation::parse("(1 2)", 3)?;
    for a in &subjects {
        merge(&mut b, "quotients", hereditary_checks(g, a))?;
        merge(&mut b, "direct-product", direct_product_check(g, a, &s3, &t))?;
        merge(&mut b, "direct-product", direct_product_check(g, a, &s3, &s3.identity()))?;
    }
    b.finish()
}

fn chartab(g: &PermGroup) -> Result<VerificationReport> {
    let t = character_table(g)?;
    let mut b = ReportBuilder::new(g, "chartab");
    b.dixon_prime(t.prime());
    let sum: u64 = t.degrees().iter().map(|d| d * d).sum();
    b.check(
        "degree-sum",
        "the squared degrees sum to |G|",
        sum == g.order(),
        format!("degrees {:?}", t.degrees()),
        || Witness::subgroup(g),
    );
    let derived = derived_subgroup(g);
    let index = g.order() / derived.order();
    b.check(
        "linear-count",
        "the number of linear characters is |G:G'|",
        t.linear_count() as u64 == index,
        format!("{} linear characters", t.linear_count()),
        || Witness::subgroup(g),
    );
    if !find_anticentral_classes(g)?.is_empty() {
        let mut bad = None;
        let mut norms = Vec::new();
        for chi in t.nonlinear() {
            let norm = t.restriction_norm(g, &derived, chi)?;
            if norm <= Ratio::from_integer(1) && bad.is_none() {
                bad = Some(chi);
            }
            norms.push(norm.to_string());
        }
        b.check(
            "nonlinear-restrictions-reducible",
            "with an anticentral element, every nonlinear character restricts reducibly to G'",
            bad.is_none(),
            format!("norms [{}]", norms.join(", ")),
            || Witness::subgroup(&derived),
        );
    }
    b.finish()
}

/// All applicable suites on one group, merged into one report.
pub fn run_suites(g: &PermGroup, suites: &[Suite], config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    suites
        .iter()
        .filter(|s| config.applies(**s, g))
        .map(|&s| run_suite(s, g, config))
        .collect()
}

/// Carter checks for one element, convenient for callers without a verifier.
pub fn carter_for(g: &PermGroup, a: &Permutation) -> Result<VerificationReport> {
    carter_verify(g, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::CheckStatus;

    #[test]
    fn suite_ids_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.id().parse::<Suite>().unwrap(), s);
        }
        assert!(parse_suites("carter,nope").is_err());
        assert_eq!(parse_suites("carter, chartab,carter").unwrap(), vec![Suite::Carter, Suite::Chartab]);
    }

    #[test]
    fn all_suites_on_small_groups() {
        let groups = [
            PermGroup::from_cycles(4, &["(1 2 3)", "(2 3 4)"]).unwrap(),
            PermGroup::from_cycles(4, &["(1 2 3 4)", "(1 3)"]).unwrap(),
            PermGroup::from_cycles(5, &["(1 2 3 4 5)", "(1 2 3)"]).unwrap(),
        ];
        let config = SuiteConfig::default();
        for g in &groups {
            for r in run_suites(g, &Suite::ALL, &config).unwrap() {
                assert!(r.all_passed(), "{}", r.to_json());
            }
        }
        let r = run_suite(Suite::Carter, &groups[0], &config).unwrap();
        assert!(r.count(CheckStatus::Pass) >= 7);
    }
}
