use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

use super::subgroups::check_normal;

/// `G/N` realized by the regular action of `G` on the right cosets of `N`.
///
/// Coset 0 is `N` itself; coset `i` is named by its least element.
#[derive(Debug, Clone)]
pub struct Quotient {
    group: PermGroup,
    kernel: PermGroup,
    image: PermGroup,
    reps: Vec<Permutation>,
    coset_of: HashMap<Permutation, u32>,
}

impl Quotient {
    pub fn new(g: &PermGroup, n: &PermGroup) -> Result<Self> {
        check_normal(g, n)?;
        let g_els = g.elements()?;
        let n_els = n.elements()?;
        let mut coset_of: HashMap<Permutation, u32> = HashMap::with_capacity(g_els.len());
        let mut reps = Vec::new();
        for x in g_els.iter() {
            if coset_of.contains_key(x) {
                continue;
            }
            let k = reps.len() as u32;
            for y in n_els.iter() {
                coset_of.insert(y * x, k);
            }
            reps.push(x.clone());
        }
        let index = reps.len();
        let mut q = Quotient {
            group: g.clone(),
            kernel: n.clone(),
            image: PermGroup::trivial(index),
            reps,
            coset_of,
        };
        let gens = g
            .generators()
            .iter()
            .map(|s| q.project_unchecked(s))
            .collect();
        q.image = PermGroup::new(index, gens)?;
        if q.image.order() as usize != index {
            return Err(Error::internal("coset action is not regular"));
        }
        Ok(q)
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn kernel(&self) -> &PermGroup {
        &self.kernel
    }

    /// The quotient as a permutation group on `|G:N|` points.
    pub fn image(&self) -> &PermGroup {
        &self.image
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    pub fn coset_index(&self, x: &Permutation) -> Result<usize> {
        self.coset_of
            .get(x)
            .map(|&i| i as usize)
            .ok_or_else(|| Error::NotMember(x.to_string()))
    }

    pub fn representative(&self, coset: usize) -> &Permutation {
        &self.reps[coset]
    }

    fn project_unchecked(&self, x: &Permutation) -> Permutation {
        let images = self
            .reps
            .iter()
            .map(|r| self.coset_of[&(r * x)])
            .collect();
        Permutation::from_images_unchecked(images)
    }

    /// The image of `x` in the quotient.
    pub fn project(&self, x: &Permutation) -> Result<Permutation> {
        self.group.check_member(x)?;
        Ok(self.project_unchecked(x))
    }

    /// Some preimage of a quotient element.
    pub fn lift(&self, q: &Permutation) -> Permutation {
        self.reps[q.image(0)].clone()
    }

    /// Full preimage of a subgroup of the image.
    pub fn preimage(&self, sub: &PermGroup) -> PermGroup {
        let lifts: Vec<Permutation> = sub.generators().iter().map(|q| self.lift(q)).collect();
        let mut out = self.kernel.clone();
        for l in &lifts {
            out = out.closure(l);
        }
        out
    }
}

/// `G/N` with its projection.
pub fn quotient_group(g: &PermGroup, n: &PermGroup) -> Result<Quotient> {
    Quotient::new(g, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::subgroups::{center, derived_subgroup};

    fn grp(gens: &[&str], n: usize) -> PermGroup {
        PermGroup::from_cycles(n, gens).unwrap()
    }

    #[test]
    fn examples() {
        let s3 = grp(&["(1 2)", "(1 2 3)"], 3);
        let a3 = derived_subgroup(&s3);
        assert_eq!(quotient_group(&s3, &a3).unwrap().image().order(), 2);
        assert_eq!(quotient_group(&s3, &s3).unwrap().image().order(), 1);
        let d8 = grp(&["(1 2 3 4)", "(1 3)"], 4);
        let z = center(&d8).unwrap();
        let q = quotient_group(&d8, &z).unwrap();
        assert_eq!(q.image().order(), 4);
        assert!(q.image().is_abelian());
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let s4 = grp(&["(1 2 3 4)", "(1 2)"], 4);
        let v4 = grp(&["(1 2)(3 4)", "(1 3)(2 4)"], 4);
        let q = quotient_group(&s4, &v4).unwrap();
        let els = s4.elements().unwrap();
        for x in els.iter().step_by(5) {
            for y in els.iter().step_by(7) {
                let lhs = q.project(&(x * y)).unwrap();
                let rhs = &q.project(x).unwrap() * &q.project(y).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        let sub = PermGroup::from_elements(q.index(), &[q.project(&els[3]).unwrap()]);
        let pre = q.preimage(&sub);
        assert_eq!(pre.order(), 4 * sub.order());
    }

    #[test]
    fn rejects_non_normal() {
        let s3 = grp(&["(1 2)", "(1 2 3)"], 3);
        let h = grp(&["(1 2)"], 3);
        assert!(matches!(quotient_group(&s3, &h), Err(Error::NotNormal(_))));
    }
}
