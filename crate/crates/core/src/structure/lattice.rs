use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::arith::{p_part, prime_divisors};
use crate::error::{Error, Result};
use crate::limits;
use crate::perm::{Elements, PermGroup, Permutation};

/// Multiplication table of a small group over its sorted element list.
#[derive(Debug)]
pub struct CayleyTable {
    elements: Arc<Elements>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    identity: usize,
    degree: usize,
}

impl CayleyTable {
    /// Errors with a capacity error above [`limits::LATTICE_LIMIT`].
    pub fn new(g: &PermGroup) -> Result<Self> {
        let order = g.order();
        if order > limits::LATTICE_LIMIT {
            return Err(Error::Capacity {
                order,
                bound: limits::LATTICE_LIMIT,
            });
        }
        let elements = g.elements()?;
        let n = elements.len();
        let mut mul = Vec::with_capacity(n * n);
        for x in elements.iter() {
            for y in elements.iter() {
                mul.push(elements.index_of(&(x * y)).expect("closed under products") as u32);
            }
        }
        let identity = elements.index_of(&g.identity()).expect("identity present");
        let inv = (0..n)
            .map(|i| (0..n).find(|&j| mul[i * n + j] as usize == identity).unwrap() as u32)
            .collect();
        let orders = elements.iter().map(|x| x.order() as u32).collect();
        Ok(CayleyTable {
            elements,
            mul,
            inv,
            orders,
            identity,
            degree: g.degree(),
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, x: &Permutation) -> Option<usize> {
        self.elements.index_of(x)
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.len() + j] as usize
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    pub fn element_order(&self, i: usize) -> u64 {
        self.orders[i] as u64
    }

    /// `g^-1 h g`.
    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), h), g)
    }

    /// The subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> FixedBitSet {
        self.extend(&self.singleton(self.identity), gens)
    }

    /// The subgroup generated by the subgroup `base` and `gens`.
    fn extend(&self, base: &FixedBitSet, gens: &[usize]) -> FixedBitSet {
        let mut bits = base.clone();
        let mut queue: VecDeque<usize> = base.ones().collect();
        while let Some(e) = queue.pop_front() {
            for &s in gens {
                let f = self.mul(e, s);
                if !bits.contains(f) {
                    bits.insert(f);
                    queue.push_back(f);
                }
            }
        }
        bits
    }

    fn singleton(&self, i: usize) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(self.len());
        b.insert(i);
        b
    }

    pub fn bits_of(&self, h: &PermGroup) -> Result<FixedBitSet> {
        let mut b = FixedBitSet::with_capacity(self.len());
        for x in h.elements()?.iter() {
            let i = self
                .index_of(x)
                .ok_or_else(|| Error::NotSubgroup(h.generators_string()))?;
            b.insert(i);
        }
        Ok(b)
    }

    pub fn to_group(&self, bits: &FixedBitSet) -> PermGroup {
        PermGroup::from_elements(self.degree, bits.ones().map(|i| &self.elements[i]))
    }

    /// Nilpotent iff for every prime the number of `p`-elements equals the
    /// `p`-part of the order.
    pub fn is_nilpotent(&self, bits: &FixedBitSet) -> bool {
        let order = bits.count_ones(..) as u64;
        prime_divisors(order).into_iter().all(|p| {
            let count = bits
                .ones()
                .filter(|&i| p_part(self.element_order(i), p) == self.element_order(i))
                .count() as u64;
            count == p_part(order, p)
        })
    }

    pub fn normalizes(&self, g: usize, bits: &FixedBitSet) -> bool {
        bits.ones().all(|h| bits.contains(self.conj(h, g)))
    }

    /// `N_G(H)` as a bitset.
    pub fn normalizer(&self, bits: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.len());
        for g in 0..self.len() {
            if bits.contains(g) || self.normalizes(g, bits) {
                out.insert(g);
            }
        }
        out
    }

    pub fn conjugate(&self, bits: &FixedBitSet, g: usize) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.len());
        for h in bits.ones() {
            out.insert(self.conj(h, g));
        }
        out
    }
}

/// A subgroup in a [`SubgroupLattice`].
#[derive(Debug, Clone)]
pub struct LatticeSubgroup {
    pub members: FixedBitSet,
    /// Element indices generating the subgroup.
    pub generators: Vec<usize>,
}

impl LatticeSubgroup {
    pub fn order(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }
}

/// Upper bound on the number of subgroups a lattice may hold.
pub const MAX_LATTICE_SIZE: usize = 200_000;

/// Subgroups of a small group obtained by cyclic extension: start from a
/// seed subgroup and repeatedly join with cyclic subgroups.
#[derive(Debug)]
pub struct SubgroupLattice {
    table: Arc<CayleyTable>,
    subgroups: Vec<LatticeSubgroup>,
}

impl SubgroupLattice {
    /// Every subgroup of the group.
    pub fn all(table: Arc<CayleyTable>) -> Result<Self> {
        Self::containing(table, &[])
    }

    /// Every subgroup containing `seeds`.
    pub fn containing(table: Arc<CayleyTable>, seeds: &[usize]) -> Result<Self> {
        let n = table.len();
        let mut cyclic_seen = HashSet::new();
        let mut cyclic = Vec::new();
        for x in 0..n {
            let c = table.closure(&[x]);
            if cyclic_seen.insert(c.clone()) {
                cyclic.push((x, c));
            }
        }
        let seed = LatticeSubgroup {
            members: table.closure(seeds),
            generators: seeds.to_vec(),
        };
        let mut seen = HashSet::new();
        seen.insert(seed.members.clone());
        let mut subgroups = vec![seed];
        let mut i = 0;
        while i < subgroups.len() {
            for (x, c) in &cyclic {
                let current = &subgroups[i];
                if current.members.is_superset(c) {
                    continue;
                }
                let joined = table.extend(&current.members, &{
                    let mut g = current.generators.clone();
                    g.push(*x);
                    g
                });
                if seen.insert(joined.clone()) {
                    let mut generators = current.generators.clone();
                    generators.push(*x);
                    subgroups.push(LatticeSubgroup {
                        members: joined,
                        generators,
                    });
                    if subgroups.len() > MAX_LATTICE_SIZE {
                        return Err(Error::Capacity {
                            order: subgroups.len() as u64,
                            bound: MAX_LATTICE_SIZE as u64,
                        });
                    }
                }
            }
            i += 1;
        }
        subgroups.sort_by_key(|s| s.order());
        Ok(SubgroupLattice { table, subgroups })
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&LatticeSubgroup> {
        self.subgroups.get(i)
    }

    /// Subgroups in ascending order of size.
    pub fn iter(&self) -> std::slice::Iter<'_, LatticeSubgroup> {
        self.subgroups.iter()
    }

    pub fn is_nilpotent(&self, h: &LatticeSubgroup) -> bool {
        self.table.is_nilpotent(&h.members)
    }

    pub fn is_self_normalizing(&self, h: &LatticeSubgroup) -> bool {
        (0..self.table.len()).all(|g| h.contains(g) || !self.table.normalizes(g, &h.members))
    }

    pub fn to_group(&self, h: &LatticeSubgroup) -> PermGroup {
        self.table.to_group(&h.members)
    }
}
