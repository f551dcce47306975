use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use super::{PermGroup, Permutation};
use crate::error::{Error, Result};

type Action<P> = Arc<dyn Fn(&P, &Permutation) -> P + Send + Sync>;

/// A finite set with a right action of a permutation group.
///
/// The action map must satisfy `act(act(x, g), h) == act(x, g*h)`; closure
/// of the point set under the generators is checked on construction.
#[derive(Clone)]
pub struct ActionSet<P> {
    points: Vec<P>,
    index: HashMap<P, usize>,
    group: PermGroup,
    action: Action<P>,
}

impl<P> ActionSet<P>
where
    P: Clone + Eq + Hash + fmt::Debug,
{
    pub fn new<F>(group: PermGroup, points: Vec<P>, action: F) -> Result<Self>
    where
        F: Fn(&P, &Permutation) -> P + Send + Sync + 'static,
    {
        let index: HashMap<P, usize> = points
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        if index.len() != points.len() {
            return Err(Error::InvalidParameters("repeated point in G-set".into()));
        }
        let set = ActionSet {
            points,
            index,
            group,
            action: Arc::new(action),
        };
        for p in &set.points {
            for g in set.group.generators() {
                let q = set.act(p, g);
                if !set.index.contains_key(&q) {
                    return Err(Error::InvalidParameters(format!(
                        "point set not closed under the action: {p:?} maps to {q:?}"
                    )));
                }
            }
        }
        Ok(set)
    }

    /// The orbit of `seed` under `group`, as a G-set.
    pub fn from_orbit<F>(group: PermGroup, seed: P, action: F) -> Self
    where
        F: Fn(&P, &Permutation) -> P + Send + Sync + 'static,
    {
        let mut points = vec![seed.clone()];
        let mut index = HashMap::new();
        index.insert(seed, 0usize);
        let mut i = 0;
        while i < points.len() {
            for g in group.generators() {
                let q = action(&points[i], g);
                if !index.contains_key(&q) {
                    index.insert(q.clone(), points.len());
                    points.push(q);
                }
            }
            i += 1;
        }
        ActionSet {
            points,
            index,
            group,
            action: Arc::new(action),
        }
    }

    pub fn points(&self) -> &[P] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn index_of(&self, p: &P) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn act(&self, p: &P, g: &Permutation) -> P {
        (self.action)(p, g)
    }

    fn check_point(&self, p: &P) -> Result<usize> {
        self.index_of(p)
            .ok_or_else(|| Error::UnknownPoint(format!("{p:?}")))
    }

    /// Orbit of `point` under the acting group.
    pub fn orbit_of(&self, point: &P) -> Result<Vec<P>> {
        self.orbit_under(point, &self.group)
    }

    /// Orbit of `point` under a subgroup (or any group acting compatibly).
    pub fn orbit_under(&self, point: &P, sub: &PermGroup) -> Result<Vec<P>> {
        let start = self.check_point(point)?;
        let mut seen = vec![false; self.points.len()];
        seen[start] = true;
        let mut orbit = vec![self.points[start].clone()];
        let mut i = 0;
        while i < orbit.len() {
            for g in sub.generators() {
                let q = self.act(&orbit[i], g);
                let j = self.check_point(&q)?;
                if !seen[j] {
                    seen[j] = true;
                    orbit.push(q);
                }
            }
            i += 1;
        }
        Ok(orbit)
    }

    /// Orbits of the acting group, in order of first point.
    pub fn orbits(&self) -> Vec<Vec<P>> {
        let mut seen = vec![false; self.points.len()];
        let mut out = Vec::new();
        for i in 0..self.points.len() {
            if seen[i] {
                continue;
            }
            let orbit = self.orbit_of(&self.points[i]).expect("own point");
            for q in &orbit {
                seen[self.index[q]] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive_under(&self, sub: &PermGroup) -> Result<bool> {
        if self.points.is_empty() {
            return Ok(true);
        }
        Ok(self.orbit_under(&self.points[0], sub)?.len() == self.points.len())
    }

    pub fn fixed_points(&self, g: &Permutation) -> Vec<P> {
        self.points
            .iter()
            .filter(|p| &self.act(p, g) == *p)
            .cloned()
            .collect()
    }

    /// The permutation induced by `g` on point indices.
    pub fn permutation_of(&self, g: &Permutation) -> Result<Permutation> {
        let images = self
            .points
            .iter()
            .map(|p| self.check_point(&self.act(p, g)).map(|i| i as u32))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images).map_err(|_| {
            Error::internal("action does not induce a permutation of the points")
        })
    }

    /// Image of the acting group in `Sym(points)`.
    pub fn image_group(&self) -> Result<PermGroup> {
        let gens = self
            .group
            .generators()
            .iter()
            .map(|g| self.permutation_of(g))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(self.points.len().max(1), gens)
    }
}

impl ActionSet<usize> {
    /// The natural action on `{0, .., degree-1}`.
    pub fn natural(group: PermGroup) -> Self {
        let n = group.degree();
        ActionSet::new(group, (0..n).collect(), |&p, g| g.image(p)).expect("natural action is closed")
    }
}

impl ActionSet<Permutation> {
    /// Conjugation action `x -> g^-1 x g` on the class of `x`.
    pub fn conjugation_orbit(group: PermGroup, x: Permutation) -> Self {
        ActionSet::from_orbit(group, x, |y, g| y.conjugate_by(g))
    }
}

impl<P: fmt::Debug> fmt::Debug for ActionSet<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ActionSet")
            .field("points", &self.points.len())
            .field("group", &self.group)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a4() -> PermGroup {
        PermGroup::from_cycles(4, &["(1 2 3)", "(2 3 4)"]).unwrap()
    }

    #[test]
    fn natural_orbit() {
        let set = ActionSet::natural(a4());
        assert_eq!(set.orbit_of(&0).unwrap().len(), 4);
        let triv = ActionSet::natural(PermGroup::trivial(3));
        assert_eq!(triv.orbit_of(&2).unwrap(), vec![2]);
        assert!(matches!(set.orbit_of(&9), Err(Error::UnknownPoint(_))));
    }

    #[test]
    fn conjugation_on_three_cycles() {
        let x = Permutation::parse("(1 2 3)", 4).unwrap();
        let set = ActionSet::conjugation_orbit(a4(), x.clone());
        assert_eq!(set.orbit_of(&x).unwrap().len(), 4);
    }

    #[test]
    fn orbits_partition() {
        let g = PermGroup::from_cycles(6, &["(1 2)", "(3 4 5)"]).unwrap();
        let set = ActionSet::natural(g);
        let orbits = set.orbits();
        assert_eq!(orbits.iter().map(|o| o.len()).sum::<usize>(), 6);
        assert_eq!(orbits.len(), 3);
    }

    #[test]
    fn rejects_unclosed_point_sets() {
        let r = ActionSet::new(a4(), vec![0usize, 1], |&p, g: &Permutation| g.image(p));
        assert!(r.is_err());
    }
}
