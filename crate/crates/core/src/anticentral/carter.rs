use std::collections::HashSet;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use super::detect::is_anticentral;
use crate::error::{Error, Result};
use crate::limits;
use crate::perm::{PermGroup, Permutation};
use crate::report::{ReportBuilder, VerificationReport, Witness};
use crate::structure::{
    conjugacy_classes, derived_subgroup, is_nilpotent, is_solvable, normalizer, product_order,
    CayleyTable, SubgroupLattice,
};

/// `C^0 = {1}`, `C^(i+1) = {x : [a, x] in C^i}`, up to stabilization.
#[derive(Debug, Clone)]
pub struct CChain {
    pub element: Permutation,
    /// Each level sorted; `levels[0]` is the identity alone.
    pub levels: Vec<Vec<Permutation>>,
    /// The subgroup generated by the last level.
    pub limit: PermGroup,
    /// Whether the last level is already a subgroup.
    pub closed: bool,
}

impl CChain {
    pub fn limit(&self) -> &PermGroup {
        &self.limit
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.len()).collect()
    }
}

pub fn c_chain(g: &PermGroup, a: &Permutation) -> Result<CChain> {
    g.check_member(a)?;
    let els = g.elements()?;
    let mut levels = vec![vec![g.identity()]];
    let mut current: HashSet<Permutation> = levels[0].iter().cloned().collect();
    loop {
        let next: Vec<Permutation> = els
            .iter()
            .filter(|x| current.contains(&a.commutator_unchecked(x)))
            .cloned()
            .collect();
        if next.len() == current.len() {
            break;
        }
        current = next.iter().cloned().collect();
        levels.push(next);
    }
    let last = levels.last().unwrap();
    let limit = PermGroup::from_elements(g.degree(), last.iter());
    let closed = limit.order() as usize == last.len();
    Ok(CChain {
        element: a.clone(),
        levels,
        limit,
        closed,
    })
}

struct LatticeData {
    table: Arc<CayleyTable>,
    lattice: SubgroupLattice,
    nilpotent: Vec<bool>,
    supplement: Vec<bool>,
    /// Indices of nilpotent self-normalizing subgroups.
    carter: Vec<usize>,
}

/// Checks on `D = C^inf(a)` for anticentral `a`, sharing per-group work.
///
/// Up to [`limits::LATTICE_LIMIT`] the full subgroup lattice is searched;
/// above it, subgroups generated by `a` and one or two class
/// representatives are sampled.
pub struct CarterVerifier {
    group: PermGroup,
    derived: PermGroup,
    solvable: bool,
    lattice: Option<LatticeData>,
}

pub const REGIME_EXHAUSTIVE: &str = "exhaustive-lattice";
pub const REGIME_SAMPLED: &str = "sampled-supplements";

impl CarterVerifier {
    pub fn new(g: &PermGroup) -> Result<Self> {
        let derived = derived_subgroup(g);
        let lattice = if g.order() <= limits::LATTICE_LIMIT {
            let table = Arc::new(CayleyTable::new(g)?);
            let lattice = SubgroupLattice::all(table.clone())?;
            let dbits = table.bits_of(&derived)?;
            let n = g.order() as usize;
            let d = derived.order() as usize;
            let mut nilpotent = Vec::with_capacity(lattice.len());
            let mut supplement = Vec::with_capacity(lattice.len());
            let mut carter = Vec::new();
            for (i, h) in lattice.iter().enumerate() {
                let nil = lattice.is_nilpotent(h);
                let meet = h.members.intersection(&dbits).count();
                nilpotent.push(nil);
                supplement.push(h.order() * d / meet == n);
                if nil && lattice.is_self_normalizing(h) {
                    carter.push(i);
                }
            }
            Some(LatticeData {
                table,
                lattice,
                nilpotent,
                supplement,
                carter,
            })
        } else {
            None
        };
        Ok(CarterVerifier {
            solvable: is_solvable(g),
            group: g.clone(),
            derived,
            lattice,
        })
    }

    pub fn regime(&self) -> &'static str {
        if self.lattice.is_some() {
            REGIME_EXHAUSTIVE
        } else {
            REGIME_SAMPLED
        }
    }

    /// Number of subgroups searched exhaustively, if any.
    pub fn lattice_size(&self) -> Option<usize> {
        self.lattice.as_ref().map(|l| l.lattice.len())
    }

    pub fn verify(&self, a: &Permutation) -> Result<VerificationReport> {
        let g = &self.group;
        if !is_anticentral(g, a)? {
            return Err(Error::precondition(format!("{a} is not anticentral")));
        }
        let chain = c_chain(g, a)?;
        let d = chain.limit.clone();
        let mut b = ReportBuilder::new(g, "carter");
        b.regime(self.regime());
        let wa = || Witness::element(a);
        b.check(
            "limit-is-subgroup",
            "C^inf(a) is a subgroup",
            chain.closed,
            format!("levels {:?}", chain.level_sizes()),
            || wa().with_subgroup(&d),
        );
        let nil = is_nilpotent(&d);
        let self_norm = normalizer(g, &d)?.order() == d.order();
        b.check(
            "nilpotent-self-normalizing",
            "D is nilpotent and N_G(D) = D",
            nil && self_norm,
            format!("|D| = {}, nilpotent {nil}, self-normalizing {self_norm}", d.order()),
            || wa().with_subgroup(&d),
        );
        b.check(
            "supplements-derived",
            "D G' = G",
            product_order(&d, &self.derived)? == g.order(),
            "",
            || wa().with_subgroup(&d),
        );
        match &self.lattice {
            Some(data) => self.exhaustive(&mut b, data, a, &d)?,
            None => self.sampled(&mut b, a, &d)?,
        }
        b.finish()
    }

    fn exhaustive(&self, b: &mut ReportBuilder, data: &LatticeData, a: &Permutation, d: &PermGroup) -> Result<()> {
        let t = &data.table;
        let ai = t.index_of(a).ok_or_else(|| Error::NotMember(a.to_string()))?;
        let dbits = t.bits_of(d)?;
        let mut bad_supp = None;
        let mut bad_nil = None;
        let mut bad_unique = None;
        let mut searched = 0;
        for (i, h) in data.lattice.iter().enumerate() {
            if !h.contains(ai) {
                continue;
            }
            searched += 1;
            let contains_d = h.members.is_superset(&dbits);
            let inside_d = dbits.is_superset(&h.members);
            if data.supplement[i] && !contains_d && bad_supp.is_none() {
                bad_supp = Some(i);
            }
            if data.nilpotent[i] && !inside_d && bad_nil.is_none() {
                bad_nil = Some(i);
            }
            if data.nilpotent[i] && data.supplement[i] && h.members != dbits && bad_unique.is_none() {
                bad_unique = Some(i);
            }
        }
        let lat = &data.lattice;
        let witness = |i: Option<usize>| {
            let w = Witness::element(a).with_subgroup(d);
            match i {
                Some(i) => w.with_subgroup(&lat.to_group(lat.get(i).unwrap())),
                None => w,
            }
        };
        let detail = format!("{searched} subgroups containing a");
        b.check(
            "supplements-contain-limit",
            "every supplement of G' containing a contains D",
            bad_supp.is_none(),
            detail.clone(),
            || witness(bad_supp),
        );
        b.check(
            "nilpotent-overgroups-inside-limit",
            "every nilpotent subgroup containing a lies in D",
            bad_nil.is_none(),
            detail.clone(),
            || witness(bad_nil),
        );
        b.check(
            "unique-nilpotent-supplement",
            "D is the only nilpotent supplement of G' containing a",
            bad_unique.is_none(),
            detail,
            || witness(bad_unique),
        );
        if self.solvable {
            let n = t.len();
            let conjugates: HashSet<FixedBitSet> = (0..n).map(|x| t.conjugate(&dbits, x)).collect();
            let bad = data
                .carter
                .iter()
                .copied()
                .find(|&i| !conjugates.contains(&lat.get(i).unwrap().members));
            b.check(
                "carter-subgroups-conjugate",
                "every nilpotent self-normalizing subgroup is conjugate to D",
                bad.is_none(),
                format!("{} nilpotent self-normalizing subgroups", data.carter.len()),
                || witness(bad),
            );
        }
        Ok(())
    }

    fn sampled(&self, b: &mut ReportBuilder, a: &Permutation, d: &PermGroup) -> Result<()> {
        let g = &self.group;
        let classes = conjugacy_classes(g)?;
        let reps: Vec<&Permutation> = classes.iter().map(|c| &c.representative).collect();
        let base = PermGroup::from_elements(g.degree(), [a]);
        let mut samples: Vec<PermGroup> = reps.iter().map(|x| base.closure(x)).collect();
        let few = &reps[..reps.len().min(8)];
        for (i, x) in few.iter().enumerate() {
            for y in &few[i + 1..] {
                samples.push(base.closure(x).closure(y));
            }
        }
        let mut bad_supp = None;
        let mut bad_nil = None;
        let mut bad_unique = None;
        for h in &samples {
            let supp = product_order(h, &self.derived)? == g.order();
            let nil = is_nilpotent(h);
            let contains_d = d.is_subgroup_of(h);
            let inside_d = h.is_subgroup_of(d);
            if supp && !contains_d && bad_supp.is_none() {
                bad_supp = Some(h.clone());
            }
            if nil && !inside_d && bad_nil.is_none() {
                bad_nil = Some(h.clone());
            }
            if nil && supp && !(contains_d && inside_d) && bad_unique.is_none() {
                bad_unique = Some(h.clone());
            }
        }
        let witness = |h: &Option<PermGroup>| {
            let w = Witness::element(a).with_subgroup(d);
            match h {
                Some(h) => w.with_subgroup(h),
                None => w,
            }
        };
        let detail = format!("{} sampled subgroups containing a", samples.len());
        b.check(
            "supplements-contain-limit",
            "every supplement of G' containing a contains D",
            bad_supp.is_none(),
            detail.clone(),
            || witness(&bad_supp),
        );
        b.check(
            "nilpotent-overgroups-inside-limit",
            "every nilpotent subgroup containing a lies in D",
            bad_nil.is_none(),
            detail.clone(),
            || witness(&bad_nil),
        );
        b.check(
            "unique-nilpotent-supplement",
            "D is the only nilpotent supplement of G' containing a",
            bad_unique.is_none(),
            detail,
            || witness(&bad_unique),
        );
        Ok(())
    }
}

/// All checks on `D = C^inf(a)` for one anticentral element.
pub fn carter_verify(g: &PermGroup, a: &Permutation) -> Result<VerificationReport> {
    CarterVerifier::new(g)?.verify(a)
}
