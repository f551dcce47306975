use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::carter::c_chain;
use super::detect::{class_size, find_anticentral_classes, is_anticentral};
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};
use crate::report::{ReportBuilder, VerificationReport, Witness};
use crate::structure::{
    center, chief_series, chief_series_through, conjugacy_classes, derived_series, derived_subgroup, is_solvable,
    FactorKind, Quotient,
};
use crate::zoo::direct_product;

/// `z -> z^G` maps `Z(D)` bijectively onto the `G`-classes that are single
/// `G'`-classes, and each such class meets `C_G(a)` in one element.
pub fn invariant_class_bijection(g: &PermGroup, a: &Permutation) -> Result<VerificationReport> {
    if !is_anticentral(g, a)? {
        return Err(Error::precondition(format!("{a} is not anticentral")));
    }
    let d = c_chain(g, a)?.limit;
    let zd = center(&d)?;
    let classes = conjugacy_classes(g)?;
    let derived = derived_subgroup(g);
    let invariant: BTreeSet<usize> = (0..classes.len())
        .filter(|&i| {
            let c = &classes[i];
            class_size(&derived, &c.representative) == c.size
        })
        .collect();
    let mut image = BTreeSet::new();
    let mut collision = None;
    for z in zd.elements()?.iter() {
        let ci = classes
            .class_index(z)
            .ok_or_else(|| Error::internal("centre of D not inside G"))?;
        if !image.insert(ci) && collision.is_none() {
            collision = Some(z.clone());
        }
    }
    let mut b = ReportBuilder::new(g, "invariant-classes");
    let reps = |set: &BTreeSet<usize>| -> Vec<String> {
        set.iter().map(|&i| classes[i].representative.to_string()).collect()
    };
    b.check(
        "center-to-invariant-classes",
        "z -> z^G is a bijection from Z(D) onto the G-classes that are G'-classes",
        collision.is_none() && image == invariant,
        format!(
            "|Z(D)| = {}, images {:?}, invariant classes {:?}",
            zd.order(),
            reps(&image),
            reps(&invariant)
        ),
        || {
            let w = Witness::element(a).with_subgroup(&zd);
            match &collision {
                Some(z) => w.with_element(z),
                None => w,
            }
        },
    );
    let bad = invariant
        .iter()
        .find(|&&i| classes.members(i).iter().filter(|x| x.commutes_with(a)).count() != 1);
    b.check(
        "invariant-class-meets-centralizer-once",
        "a fixes exactly one element of each invariant class",
        bad.is_none(),
        format!("{} invariant classes", invariant.len()),
        || Witness::element(a).with_element(&classes[*bad.unwrap()].representative),
    );
    b.finish()
}

/// Per-factor outcome of the chief-factor criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorOutcome {
    /// Orders of `K` and `N` for the factor `N/K`.
    pub lower: u64,
    pub upper: u64,
    pub central: bool,
    /// Whether the factor takes part in the criterion.
    pub relevant: bool,
    pub holds: bool,
}

struct Level {
    term: PermGroup,
    /// `None` when the term is trivial: the group itself stands in for the quotient.
    quotient: Option<Quotient>,
}

/// Shared chief series and quotients for evaluating the chief-factor
/// criterion on many elements.
pub struct ChiefCriterion {
    group: PermGroup,
    derived: PermGroup,
    levels: Vec<Level>,
    kinds: Vec<FactorKind>,
}

impl ChiefCriterion {
    pub fn new(g: &PermGroup) -> Result<Self> {
        let derived = derived_subgroup(g);
        let series = chief_series_through(g, &derived)?;
        let levels = series
            .terms
            .iter()
            .map(|t| {
                let quotient = if t.is_trivial() { None } else { Some(Quotient::new(g, t)?) };
                Ok(Level { term: t.clone(), quotient })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ChiefCriterion {
            group: g.clone(),
            derived,
            levels,
            kinds: series.factor_kinds,
        })
    }

    fn image(&self, level: usize) -> &PermGroup {
        match &self.levels[level].quotient {
            Some(q) => q.image(),
            None => &self.group,
        }
    }

    fn project(&self, level: usize, x: &Permutation) -> Result<Permutation> {
        match &self.levels[level].quotient {
            Some(q) => q.project(x),
            None => Ok(x.clone()),
        }
    }

    /// `|{g : [a, g] in N}|` for the `level`-th term `N`, computed in `G/N`.
    fn preimage_centralizer_order(&self, level: usize, a: &Permutation) -> Result<u64> {
        let img = self.image(level);
        let abar = self.project(level, a)?;
        let c = img.order() / class_size(img, &abar);
        Ok(c * self.levels[level].term.order())
    }

    /// Evaluate both conditions on every chief factor.
    pub fn factors(&self, a: &Permutation) -> Result<Vec<FactorOutcome>> {
        self.group.check_member(a)?;
        let mut out = Vec::new();
        for (i, kind) in self.kinds.iter().enumerate() {
            let lower = &self.levels[i].term;
            let upper = &self.levels[i + 1].term;
            let central = *kind == FactorKind::Central;
            let (relevant, holds) = if central {
                if upper.is_subgroup_of(&self.derived) {
                    let below = self.preimage_centralizer_order(i, a)?;
                    let above = self.preimage_centralizer_order(i + 1, a)?;
                    (true, below < above)
                } else {
                    (false, true)
                }
            } else {
                // fixed points of a on N/K, counted in G/K
                let abar = self.project(i, a)?;
                let mut fixed = 0;
                let mut seen = BTreeSet::new();
                for x in upper.elements()?.iter() {
                    let xbar = self.project(i, x)?;
                    if seen.insert(xbar.clone()) && xbar.commutes_with(&abar) {
                        fixed += 1;
                    }
                }
                (true, fixed == 1)
            };
            out.push(FactorOutcome {
                lower: lower.order(),
                upper: upper.order(),
                central,
                relevant,
                holds,
            });
        }
        Ok(out)
    }

    /// Both conditions hold on every relevant factor.
    pub fn criterion(&self, a: &Permutation) -> Result<bool> {
        Ok(self.factors(a)?.iter().all(|f| f.holds))
    }

    pub fn check(&self, a: &Permutation) -> Result<VerificationReport> {
        let factors = self.factors(a)?;
        let predicted = factors.iter().all(|f| f.holds);
        let actual = is_anticentral(&self.group, a)?;
        let first_bad = factors.iter().find(|f| !f.holds);
        let mut b = ReportBuilder::new(&self.group, "chief-factors");
        b.check(
            "chief-factor-criterion",
            "a is fixed-point-free on noncentral chief factors and enlarges centralizers across central factors in G' iff a is anticentral",
            predicted == actual,
            format!(
                "criterion {predicted}, anticentral {actual}{}",
                first_bad.map_or(String::new(), |f| format!(", first failing factor {}/{}", f.upper, f.lower))
            ),
            || Witness::element(a),
        );
        b.finish()
    }
}

impl std::fmt::Debug for ChiefCriterion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ChiefCriterion")
            .field("series", &self.levels.iter().map(|l| l.term.order()).collect::<Vec<_>>())
            .finish()
    }
}

/// The chief-factor criterion for one element of a solvable group.
pub fn chief_factor_criterion(g: &PermGroup, a: &Permutation) -> Result<VerificationReport> {
    ChiefCriterion::new(g)?.check(a)
}

/// A group with anticentral elements is solvable.
pub fn solvability_contrapositive(g: &PermGroup) -> Result<VerificationReport> {
    let classes = find_anticentral_classes(g)?;
    let solvable = is_solvable(g);
    let mut b = ReportBuilder::new(g, "solvability");
    b.check(
        "anticentral-implies-solvable",
        "a group containing anticentral elements is solvable",
        classes.is_empty() || solvable,
        format!("solvable {solvable}, {} anticentral classes", classes.len()),
        || match classes.first() {
            Some(c) => Witness::element(&c.representative),
            None => Witness::default(),
        },
    );
    b.finish()
}

/// Normal subgroups used for quotient checks: the chief series when `G` is
/// solvable, otherwise the derived series and the centre.
fn normal_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let mut out: Vec<PermGroup> = if is_solvable(g) {
        chief_series(g)?.terms
    } else {
        let mut v = derived_series(g);
        v.push(center(g)?);
        v
    };
    let mut seen = BTreeMap::new();
    out.retain(|n| !n.is_trivial() && seen.insert(n.order(), n.clone()).is_none_or(|m| !m.same_group(n)));
    Ok(out)
}

/// `a` anticentral in `G` implies `aN` anticentral in `G/N` for the normal
/// subgroups `N` of [`normal_subgroups`].
pub fn hereditary_checks(g: &PermGroup, a: &Permutation) -> Result<VerificationReport> {
    g.check_member(a)?;
    let anticentral = is_anticentral(g, a)?;
    let mut b = ReportBuilder::new(g, "hereditary");
    for n in normal_subgroups(g)? {
        let q = Quotient::new(g, &n)?;
        let abar = q.project(a)?;
        let image_ac = is_anticentral(q.image(), &abar)?;
        b.check(
            &format!("quotient-by-{}", n.order()),
            "the image of an anticentral element in a quotient is anticentral",
            !anticentral || image_ac,
            format!("|N| = {}, anticentral in G {anticentral}, in G/N {image_ac}", n.order()),
            || Witness::element(a).with_subgroup(&n),
        );
    }
    b.finish()
}

/// `(a, b)` is anticentral in `G x H` iff `a` and `b` are anticentral.
pub fn direct_product_check(g: &PermGroup, a: &Permutation, h: &PermGroup, b: &Permutation) -> Result<VerificationReport> {
    let ga = is_anticentral(g, a)?;
    let hb = is_anticentral(h, b)?;
    let gh = direct_product(g, h);
    let ab = a.direct_sum(b);
    let both = is_anticentral(&gh, &ab)?;
    let mut r = ReportBuilder::new(&gh, "hereditary");
    r.check(
        "direct-product",
        "(a, b) is anticentral in G x H iff a and b are anticentral",
        both == (ga && hb),
        format!("G: {ga}, H: {hb}, product: {both}"),
        || Witness::element(&ab),
    );
    r.finish()
}
