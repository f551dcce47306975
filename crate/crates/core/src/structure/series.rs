use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::PermGroup;

use super::classes::conjugacy_classes;
use super::subgroups::{commutator_subgroup, derived_subgroup, normal_closure_unchecked};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    Derived,
    LowerCentral,
    UpperCentral,
    Chief,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorKind {
    Central,
    Noncentral,
}

#[derive(Debug, Clone)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// Descending for derived and lower central series, ascending otherwise.
    pub terms: Vec<PermGroup>,
    /// Chief series only: `factor_kinds[i]` describes `terms[i+1]/terms[i]`.
    pub factor_kinds: Vec<FactorKind>,
    pub is_solvable: bool,
    pub is_nilpotent: bool,
    pub nilpotency_class: Option<usize>,
}

impl SeriesReport {
    pub fn orders(&self) -> Vec<u64> {
        self.terms.iter().map(|t| t.order()).collect()
    }
}

/// `G ⊇ G' ⊇ G'' ⊇ ...` until it stabilizes.
pub fn derived_series(g: &PermGroup) -> Vec<PermGroup> {
    let mut terms = vec![g.clone()];
    loop {
        let last = terms.last().unwrap();
        let next = derived_subgroup(last);
        if next.order() == last.order() {
            return terms;
        }
        terms.push(next);
    }
}

/// `K_1 = G`, `K_{i+1} = [K_i, G]` until it stabilizes.
pub fn lower_central_series(g: &PermGroup) -> Vec<PermGroup> {
    let mut terms = vec![g.clone()];
    loop {
        let last = terms.last().unwrap();
        let next = commutator_subgroup(g, last, g);
        if next.order() == last.order() {
            return terms;
        }
        terms.push(next);
    }
}

/// `Z_0 = 1`, `Z_{i+1} = {x : [x, g] ∈ Z_i for all g}` until it stabilizes.
pub fn upper_central_series(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let mut terms = vec![PermGroup::trivial(g.degree())];
    loop {
        let last = terms.last().unwrap().clone();
        let next = g.filter_subgroup(|x| {
            g.generators()
                .iter()
                .all(|s| last.contains(&x.commutator_unchecked(s)))
        })?;
        if next.order() == last.order() {
            return Ok(terms);
        }
        terms.push(next);
    }
}

pub fn is_solvable(g: &PermGroup) -> bool {
    derived_series(g).last().unwrap().order() == 1
}

pub fn is_nilpotent(g: &PermGroup) -> bool {
    lower_central_series(g).last().unwrap().order() == 1
}

/// Length of the lower central series, if `g` is nilpotent.
pub fn nilpotency_class(g: &PermGroup) -> Option<usize> {
    let lcs = lower_central_series(g);
    (lcs.last().unwrap().order() == 1).then(|| lcs.len() - 1)
}

pub fn series_report(g: &PermGroup, kind: SeriesKind) -> Result<SeriesReport> {
    if kind == SeriesKind::Chief {
        return chief_series(g);
    }
    let derived = derived_series(g);
    let lower = lower_central_series(g);
    let is_solvable = derived.last().unwrap().order() == 1;
    let is_nilpotent = lower.last().unwrap().order() == 1;
    let nilpotency_class = is_nilpotent.then(|| lower.len() - 1);
    let terms = match kind {
        SeriesKind::Derived => derived,
        SeriesKind::LowerCentral => lower,
        SeriesKind::UpperCentral => upper_central_series(g)?,
        SeriesKind::Chief => unreachable!(),
    };
    Ok(SeriesReport {
        kind,
        terms,
        factor_kinds: Vec::new(),
        is_solvable,
        is_nilpotent,
        nilpotency_class,
    })
}

/// `1 = N_0 < N_1 < ... < N_k = G` with each `N_{i+1}/N_i` minimal normal in
/// `G/N_i`. Each step takes the normal closure of `N_i` and one class
/// representative, keeping the smallest result (ties: least representative).
pub fn chief_series(g: &PermGroup) -> Result<SeriesReport> {
    chief_series_through(g, g)
}

/// A chief series with `n` among its terms; `n` must be normal in `g`.
pub fn chief_series_through(g: &PermGroup, n: &PermGroup) -> Result<SeriesReport> {
    if !n.is_subgroup_of(g) || !super::is_normal(g, n) {
        return Err(Error::precondition("the prescribed term is not a normal subgroup"));
    }
    if !is_solvable(g) {
        return Err(Error::Unsupported(
            "chief series requested for a nonsolvable group".into(),
        ));
    }
    let classes = conjugacy_classes(g)?;
    let mut terms = vec![PermGroup::trivial(g.degree())];
    let mut factor_kinds = Vec::new();
    while terms.last().unwrap().order() < g.order() {
        let current = terms.last().unwrap().clone();
        let target = if current.order() < n.order() { n } else { g };
        let mut best: Option<PermGroup> = None;
        for c in classes.iter() {
            let x = &c.representative;
            if current.contains(x) || !target.contains(x) {
                continue;
            }
            let mut seeds = current.generators().to_vec();
            seeds.push(x.clone());
            let m = normal_closure_unchecked(g, &seeds);
            if best.as_ref().is_none_or(|b| m.order() < b.order()) {
                let minimal = m.order() / current.order();
                best = Some(m);
                if crate::arith::is_prime(minimal) {
                    break;
                }
            }
        }
        let next = best.ok_or_else(|| Error::internal("no chief factor above a proper term"))?;
        let central = g.generators().iter().all(|s| {
            next.generators()
                .iter()
                .all(|m| current.contains(&m.commutator_unchecked(s)))
        });
        factor_kinds.push(if central {
            FactorKind::Central
        } else {
            FactorKind::Noncentral
        });
        terms.push(next);
    }
    let lower = lower_central_series(g);
    let is_nilpotent = lower.last().unwrap().order() == 1;
    Ok(SeriesReport {
        kind: SeriesKind::Chief,
        terms,
        factor_kinds,
        is_solvable: true,
        is_nilpotent,
        nilpotency_class: is_nilpotent.then(|| lower.len() - 1),
    })
}
