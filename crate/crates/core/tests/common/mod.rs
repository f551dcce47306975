//! Brute-force reference computations on raw image vectors. Nothing here
//! calls into the library's algorithms; only generator images are read.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use acg_core::{PermGroup, Permutation};

pub type Img = Vec<u32>;

/// x then y.
pub fn mul(x: &[u32], y: &[u32]) -> Img {
    x.iter().map(|&i| y[i as usize]).collect()
}

pub fn inv(x: &[u32]) -> Img {
    let mut out = vec![0; x.len()];
    for (i, &j) in x.iter().enumerate() {
        out[j as usize] = i as u32;
    }
    out
}

pub fn identity(n: usize) -> Img {
    (0..n as u32).collect()
}

/// x^-1 y^-1 x y.
pub fn comm(x: &[u32], y: &[u32]) -> Img {
    mul(&mul(&inv(x), &inv(y)), &mul(x, y))
}

pub fn elem_order(x: &[u32]) -> u64 {
    let id = identity(x.len());
    let mut y = x.to_vec();
    let mut k = 1;
    while y != id {
        y = mul(&y, x);
        k += 1;
    }
    k
}

/// Every product of the generators, by breadth-first search.
pub fn closure(degree: usize, gens: &[Img]) -> Vec<Img> {
    let id = identity(degree);
    let mut seen: HashSet<Img> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = mul(&x, s);
            if seen.insert(y.clone()) {
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    out.sort();
    out
}

pub fn img(p: &Permutation) -> Img {
    p.images().to_vec()
}

pub fn to_perm(x: &[u32]) -> Permutation {
    Permutation::from_images(x.to_vec()).unwrap()
}

/// A group as the sorted list of all its elements.
pub struct Oracle {
    pub degree: usize,
    pub elements: Vec<Img>,
    index: HashMap<Img, usize>,
}

impl Oracle {
    pub fn new(g: &PermGroup) -> Self {
        let gens: Vec<Img> = g.generators().iter().map(img).collect();
        Self::from_elements(g.degree(), closure(g.degree(), &gens))
    }

    pub fn from_elements(degree: usize, mut elements: Vec<Img>) -> Self {
        elements.sort();
        elements.dedup();
        let index = elements.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        Oracle { degree, elements, index }
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, x: &[u32]) -> bool {
        self.index.contains_key(x)
    }

    pub fn element_set(&self) -> HashSet<Img> {
        self.elements.iter().cloned().collect()
    }

    pub fn centralizer(&self, a: &[u32]) -> Vec<Img> {
        self.elements
            .iter()
            .filter(|x| mul(a, x) == mul(x, a))
            .cloned()
            .collect()
    }

    /// The subgroup generated by all commutators.
    pub fn derived(&self) -> Oracle {
        let comms: HashSet<Img> = self
            .elements
            .iter()
            .flat_map(|x| self.elements.iter().map(move |y| comm(x, y)))
            .collect();
        let gens: Vec<Img> = comms.into_iter().collect();
        Oracle::from_elements(self.degree, closure(self.degree, &gens))
    }

    pub fn center(&self) -> Vec<Img> {
        self.elements
            .iter()
            .filter(|z| self.elements.iter().all(|x| mul(z, x) == mul(x, z)))
            .cloned()
            .collect()
    }

    /// Conjugacy classes as sorted member lists, sorted by least member.
    pub fn classes(&self) -> Vec<Vec<Img>> {
        let mut done = vec![false; self.elements.len()];
        let mut out = Vec::new();
        for (i, a) in self.elements.iter().enumerate() {
            if done[i] {
                continue;
            }
            let mut cls: Vec<Img> = self
                .elements
                .iter()
                .map(|g| mul(&mul(&inv(g), a), g))
                .collect::<HashSet<_>>()
                .into_iter()
                .collect();
            cls.sort();
            for c in &cls {
                done[self.index[c]] = true;
            }
            out.push(cls);
        }
        out
    }

    pub fn commutator_index(&self) -> u64 {
        self.order() / self.derived().order()
    }

    /// |C_G(a)| = |G:G'|.
    pub fn is_anticentral(&self, a: &[u32], index: u64) -> bool {
        self.centralizer(a).len() as u64 == index
    }

    /// Is `sub` a subgroup that is a Sylow p-subgroup of this group?
    pub fn is_sylow(&self, sub: &[Img], p: u64) -> bool {
        let mut part = 1;
        let mut n = self.order();
        while n.is_multiple_of(p) {
            part *= p;
            n /= p;
        }
        let set: HashSet<&Img> = sub.iter().collect();
        sub.len() as u64 == part
            && sub.iter().all(|x| self.contains(x))
            && sub.iter().all(|x| sub.iter().all(|y| set.contains(&mul(x, y))))
    }
}

pub fn set_of(g: &PermGroup) -> HashSet<Img> {
    g.elements().unwrap().iter().map(img).collect()
}
