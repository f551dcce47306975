use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

use crate::chartab::{character_table, CharacterTable};
use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::perm::{Elements, PermGroup, Permutation};
use crate::report::{ReportBuilder, Witness};
use crate::structure::{conjugacy_classes, derived_subgroup, Classes, ConjClass};

/// `|G : G'|`.
pub fn commutator_index(g: &PermGroup) -> u64 {
    g.order() / derived_subgroup(g).order()
}

/// Size of the conjugacy class of `a`, by orbit enumeration.
pub fn class_size(g: &PermGroup, a: &Permutation) -> u64 {
    let mut seen = HashSet::new();
    seen.insert(a.clone());
    let mut queue = vec![a.clone()];
    while let Some(x) = queue.pop() {
        for s in g.generators() {
            let y = x.conjugate_by(s);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen.len() as u64
}

/// `|C_G(a)| = |G : G'|`, tested as `|a^G| * |G : G'| = |G|`.
pub fn is_anticentral(g: &PermGroup, a: &Permutation) -> Result<bool> {
    g.check_member(a)?;
    Ok(class_size(g, a) * commutator_index(g) == g.order())
}

/// The four equivalent conditions evaluated independently for one element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnticentralCertificate {
    pub element: Permutation,
    pub centralizer_order: u64,
    pub commutator_index: u64,
    /// `|C_G(a)| = |G : G'|`.
    pub centralizer_condition: bool,
    /// `a^G = a G'` as sets.
    pub class_coset_condition: bool,
    /// `{[a, g] : g in G} = G'` as sets.
    pub commutator_condition: bool,
    /// Every nonlinear irreducible character vanishes at `a`; `None` when
    /// no character table was computed.
    pub character_condition: Option<bool>,
    /// An element of `a G'` outside `a^G`, when there is one.
    pub class_coset_witness: Option<Permutation>,
}

impl AnticentralCertificate {
    pub fn is_anticentral(&self) -> bool {
        self.centralizer_condition
    }

    /// True iff every evaluated condition gives the same answer.
    pub fn conditions_agree(&self) -> bool {
        let c = self.centralizer_condition;
        self.class_coset_condition == c
            && self.commutator_condition == c
            && self.character_condition.is_none_or(|v| v == c)
    }
}

/// Shared data for evaluating the equivalent conditions on many elements of
/// one group.
pub struct EquivalenceChecker {
    group: PermGroup,
    elements: Arc<Elements>,
    classes: Arc<Classes>,
    derived: PermGroup,
    derived_elements: Arc<Elements>,
    index: u64,
    table: Option<CharacterTable>,
}

impl EquivalenceChecker {
    /// With `with_characters` the character table is built as well.
    pub fn new(g: &PermGroup, with_characters: bool) -> Result<Self> {
        let elements = g.elements()?;
        let classes = conjugacy_classes(g)?;
        let derived = derived_subgroup(g);
        let derived_elements = derived.elements()?;
        let table = if with_characters {
            Some(character_table(g)?)
        } else {
            None
        };
        Ok(EquivalenceChecker {
            group: g.clone(),
            elements,
            classes,
            index: g.order() / derived.order(),
            derived,
            derived_elements,
            table,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn derived(&self) -> &PermGroup {
        &self.derived
    }

    pub fn table(&self) -> Option<&CharacterTable> {
        self.table.as_ref()
    }

    pub fn commutator_index(&self) -> u64 {
        self.index
    }

    /// Evaluate all conditions; disagreement is reported, not raised.
    pub fn certificate(&self, a: &Permutation) -> Result<AnticentralCertificate> {
        let ci = self
            .classes
            .class_index(a)
            .ok_or_else(|| Error::NotMember(a.to_string()))?;
        let order = self.group.order();
        let class = &self.classes[ci];
        let centralizer_order = order / class.size;

        let a_inv = a.inverse();
        let class_in_coset = self
            .classes
            .members(ci)
            .iter()
            .all(|c| self.derived.contains(&(&a_inv * c)));
        let class_coset_witness = self
            .derived_elements
            .iter()
            .map(|d| a * d)
            .find(|ad| self.classes.class_index(ad) != Some(ci));
        let class_coset_condition = class_in_coset && class_coset_witness.is_none();

        let commutators: HashSet<Permutation> = self
            .elements
            .iter()
            .map(|x| a.commutator_unchecked(x))
            .collect();
        let commutator_condition = commutators.len() == self.derived_elements.len()
            && commutators.iter().all(|c| self.derived_elements.index_of(c).is_some());

        let character_condition = match &self.table {
            Some(t) => Some(t.nonlinear_vanish_at(ci)?),
            None => None,
        };

        Ok(AnticentralCertificate {
            element: a.clone(),
            centralizer_order,
            commutator_index: self.index,
            centralizer_condition: centralizer_order == self.index,
            class_coset_condition,
            commutator_condition,
            character_condition,
            class_coset_witness,
        })
    }

    /// Like [`certificate`](Self::certificate) but a disagreement between the
    /// conditions, or a centralizer smaller than `|G:G'|`, is a theorem violation.
    pub fn check(&self, a: &Permutation) -> Result<AnticentralCertificate> {
        let cert = self.certificate(a)?;
        if cert.conditions_agree() && cert.centralizer_order >= cert.commutator_index {
            return Ok(cert);
        }
        let mut b = ReportBuilder::new(&self.group, "equivalences");
        b.check(
            "conditions-agree",
            "centralizer, class-coset, commutator-set and character conditions agree",
            cert.conditions_agree(),
            format!("{cert:?}"),
            || Witness::element(a),
        );
        b.check(
            "centralizer-lower-bound",
            "|C_G(a)| >= |G:G'|",
            cert.centralizer_order >= cert.commutator_index,
            format!("{} vs {}", cert.centralizer_order, cert.commutator_index),
            || Witness::element(a),
        );
        Err(Error::TheoremViolation(Box::new(b.into_report())))
    }
}

/// All four conditions for one element, raising a theorem violation if
/// they disagree. The character condition is evaluated when `with_characters`.
pub fn equivalence_report(g: &PermGroup, a: &Permutation, with_characters: bool) -> Result<AnticentralCertificate> {
    g.check_member(a)?;
    EquivalenceChecker::new(g, with_characters)?.check(a)
}

/// Certificates for every element, in sorted element order.
pub fn equivalence_sweep(g: &PermGroup, with_characters: bool, exec: Exec) -> Result<Vec<AnticentralCertificate>> {
    let checker = EquivalenceChecker::new(g, with_characters)?;
    let els = g.elements()?;
    par::map(els.as_slice(), exec, |a| checker.certificate(a))
        .into_iter()
        .collect()
}

/// Classes whose representatives are anticentral.
pub fn find_anticentral_classes(g: &PermGroup) -> Result<Vec<ConjClass>> {
    let classes = conjugacy_classes(g)?;
    let index = commutator_index(g);
    let order = g.order();
    Ok(classes
        .iter()
        .filter(|c| c.centralizer_order(order) == index)
        .cloned()
        .collect())
}

/// For every element in sorted order, whether it is anticentral, with the
/// centralizer order counted directly.
pub fn classify_elements(g: &PermGroup, exec: Exec) -> Result<Vec<bool>> {
    let els = g.elements()?;
    let index = commutator_index(g) as usize;
    Ok(par::map(els.as_slice(), exec, |a| {
        els.iter().filter(|x| x.commutes_with(a)).count() == index
    }))
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
    fn detection() {
        let c6 = grp(&["(1 2 3 4 5 6)"], 6);
        assert!(c6.elements().unwrap().iter().all(|x| is_anticentral(&c6, x).unwrap()));
        let s4 = grp(&["(1 2 3 4)", "(1 2)"], 4);
        assert!(s4.elements().unwrap().iter().all(|x| !is_anticentral(&s4, x).unwrap()));
        let a4 = grp(&["(1 2 3)", "(2 3 4)"], 4);
        assert!(is_anticentral(&a4, &p("(1 2 3)", 4)).unwrap());
        assert!(is_anticentral(&a4, &p("(1 2)", 4)).is_err());
    }

    #[test]
    fn certificates() {
        let d8 = grp(&["(1 2 3 4)", "(1 3)"], 4);
        let c = equivalence_report(&d8, &p("(1 2 3 4)", 4), true).unwrap();
        assert!(c.centralizer_condition && c.class_coset_condition && c.commutator_condition);
        assert_eq!(c.character_condition, Some(true));
        let id = equivalence_report(&d8, &d8.identity(), true).unwrap();
        assert!(!id.centralizer_condition && !id.class_coset_condition);
        assert_eq!(id.character_condition, Some(false));
        assert!(id.class_coset_witness.is_some());
        let a4 = grp(&["(1 2 3)", "(2 3 4)"], 4);
        let c = equivalence_report(&a4, &p("(1 2)(3 4)", 4), true).unwrap();
        assert_eq!(c.centralizer_order, 4);
        assert!(!c.commutator_condition && c.conditions_agree());
    }

    #[test]
    fn sweeps_agree() {
        let a4 = grp(&["(1 2 3)", "(2 3 4)"], 4);
        let seq = classify_elements(&a4, Exec::Sequential).unwrap();
        let par = classify_elements(&a4, Exec::Parallel).unwrap();
        assert_eq!(seq, par);
        assert_eq!(seq.iter().filter(|&&b| b).count(), 8);
        let certs = equivalence_sweep(&a4, true, Exec::Parallel).unwrap();
        assert!(certs.iter().all(|c| c.conditions_agree()));
        let classes = find_anticentral_classes(&a4).unwrap();
        assert_eq!(classes.len(), 2);
        let s5 = grp(&["(1 2 3 4 5)", "(1 2)"], 5);
        assert!(find_anticentral_classes(&s5).unwrap().is_empty());
    }
}
