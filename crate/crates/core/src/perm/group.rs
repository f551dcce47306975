use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::{Permutation, StabChain};
use crate::error::{Error, Result};
use crate::limits;
use crate::structure::Classes;

/// Enumerated elements of a group, sorted lexicographically by image table.
#[derive(Debug)]
pub struct Elements {
    list: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
}

impl Elements {
    fn new(mut list: Vec<Permutation>) -> Self {
        list.sort_unstable();
        let index = list
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        Elements { list, index }
    }

    pub fn as_slice(&self) -> &[Permutation] {
        &self.list
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.list.iter()
    }
}

impl std::ops::Index<usize> for Elements {
    type Output = Permutation;

    fn index(&self, i: usize) -> &Permutation {
        &self.list[i]
    }
}

/// A permutation group given by generators.
///
/// The stabilizer chain and the element list are built on first use and
/// then shared by clones; concurrent readers see either nothing or the
/// finished value.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    name: Option<Arc<str>>,
    chain: OnceLock<Arc<StabChain>>,
    elements: OnceLock<Arc<Elements>>,
    pub(crate) derived: OnceLock<Arc<PermGroup>>,
    pub(crate) classes: OnceLock<Arc<Classes>>,
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameters("degree must be positive".into()));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        Ok(Self::new_unchecked(degree, gens))
    }

    pub(crate) fn new_unchecked(degree: usize, gens: Vec<Permutation>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_identity()).collect();
        PermGroup {
            degree,
            gens,
            name: None,
            chain: OnceLock::new(),
            elements: OnceLock::new(),
            derived: OnceLock::new(),
            classes: OnceLock::new(),
        }
    }

    fn from_chain(degree: usize, gens: Vec<Permutation>, chain: StabChain) -> Self {
        let g = Self::new_unchecked(degree, gens);
        let _ = g.chain.set(Arc::new(chain));
        g
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new_unchecked(degree, Vec::new())
    }

    /// Parse generators in cycle notation.
    pub fn from_cycles(degree: usize, gens: &[&str]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|s| Permutation::parse(s, degree))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    /// Smallest group containing `elements`, generated greedily: an element
    /// becomes a generator only if it is not already in the group so far.
    pub fn from_elements<'a>(degree: usize, elements: impl IntoIterator<Item = &'a Permutation>) -> Self {
        let mut chain = StabChain::trivial(degree);
        let mut gens = Vec::new();
        for x in elements {
            if chain.extend(x) {
                gens.push(x.clone());
            }
        }
        Self::from_chain(degree, gens, chain)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(Arc::from(name.into()));
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    /// The base and strong generating set, built on first use.
    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| Arc::new(StabChain::from_generators(self.degree, &self.gens)))
    }

    pub fn has_chain(&self) -> bool {
        self.chain.get().is_some()
    }

    pub fn order(&self) -> u64 {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.chain().contains(p)
    }

    /// Membership with a degree check.
    pub fn membership_test(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(self.chain().contains(p))
    }

    pub fn check_member(&self, p: &Permutation) -> Result<()> {
        if self.membership_test(p)? {
            Ok(())
        } else {
            Err(Error::NotMember(p.to_string()))
        }
    }

    /// Error unless `self` is a subgroup of `g`.
    pub fn check_subgroup_of(&self, g: &PermGroup) -> Result<()> {
        if self.degree != g.degree {
            return Err(Error::DegreeMismatch {
                left: g.degree,
                right: self.degree,
            });
        }
        match self.gens.iter().find(|x| !g.contains(x)) {
            None => Ok(()),
            Some(x) => Err(Error::NotSubgroup(format!("generator {x} lies outside the group"))),
        }
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        self.degree == g.degree && self.gens.iter().all(|x| g.contains(x))
    }

    /// Equality as sets of permutations.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// All elements, sorted, subject to the global enumeration bound.
    pub fn elements(&self) -> Result<Arc<Elements>> {
        self.elements_with_bound(limits::enumeration_bound())
    }

    pub fn elements_with_bound(&self, bound: u64) -> Result<Arc<Elements>> {
        let order = self.order();
        if order > bound {
            return Err(Error::Capacity { order, bound });
        }
        Ok(self
            .elements
            .get_or_init(|| Arc::new(Elements::new(self.chain().elements())))
            .clone())
    }

    /// All elements exactly once, in lexicographic order of image tables.
    pub fn elements_enumerate(&self, bound: u64) -> Result<Vec<Permutation>> {
        Ok(self.elements_with_bound(bound)?.as_slice().to_vec())
    }

    /// `<self, g>`.
    pub fn closure(&self, g: &Permutation) -> PermGroup {
        if self.contains(g) {
            return self.clone();
        }
        let mut chain = self.chain().clone();
        chain.extend(g);
        let mut gens = self.gens.clone();
        gens.push(g.clone());
        Self::from_chain(self.degree, gens, chain)
    }

    /// `<self, other>`.
    pub fn join(&self, other: &PermGroup) -> PermGroup {
        let mut chain = self.chain().clone();
        let mut gens = self.gens.clone();
        for g in &other.gens {
            if chain.extend(g) {
                gens.push(g.clone());
            }
        }
        Self::from_chain(self.degree, gens, chain)
    }

    /// `g^-1 self g`.
    pub fn conjugate(&self, g: &Permutation) -> PermGroup {
        Self::new_unchecked(
            self.degree,
            self.gens.iter().map(|x| x.conjugate_by(g)).collect(),
        )
    }

    /// Subgroup of elements satisfying `pred`. The predicate must define a
    /// subgroup; elements are visited in sorted order.
    pub fn filter_subgroup<F>(&self, pred: F) -> Result<PermGroup>
    where
        F: Fn(&Permutation) -> bool,
    {
        let els = self.elements()?;
        let mut chain = StabChain::trivial(self.degree);
        let mut gens = Vec::new();
        for x in els.iter() {
            if !chain.contains(x) && pred(x) {
                chain.extend(x);
                gens.push(x.clone());
            }
        }
        Ok(Self::from_chain(self.degree, gens, chain))
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .enumerate()
            .all(|(i, a)| self.gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> Result<u64> {
        use num_integer::Integer;
        let els = self.elements()?;
        Ok(els.iter().fold(1u64, |e, x| e.lcm(&x.order())))
    }

    /// Elements of `self` that are also in `other`, as a subgroup.
    pub fn intersection(&self, other: &PermGroup) -> Result<PermGroup> {
        let (small, big) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        small.filter_subgroup(|x| big.contains(x))
    }

    pub fn generators_string(&self) -> String {
        if self.gens.is_empty() {
            return "<>".into();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        format!("<{}>", parts.join(", "))
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("generators", &self.generators_string())
            .finish()
    }
}
