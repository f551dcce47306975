use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::limits;
use crate::perm::{ActionSet, PermGroup, Permutation};

pub fn is_normal(g: &PermGroup, n: &PermGroup) -> bool {
    n.generators()
        .iter()
        .all(|x| g.generators().iter().all(|s| n.contains(&x.conjugate_by(s))))
}

/// Error unless `n` is a normal subgroup of `g`.
pub fn check_normal(g: &PermGroup, n: &PermGroup) -> Result<()> {
    n.check_subgroup_of(g)?;
    if !is_normal(g, n) {
        return Err(Error::NotNormal(n.generators_string()));
    }
    Ok(())
}

/// Smallest normal subgroup of `g` containing `s`.
pub fn normal_closure(g: &PermGroup, s: &[Permutation]) -> Result<PermGroup> {
    for x in s {
        g.check_member(x)?;
    }
    Ok(normal_closure_unchecked(g, s))
}

pub(crate) fn normal_closure_unchecked(g: &PermGroup, s: &[Permutation]) -> PermGroup {
    let mut n = PermGroup::from_elements(g.degree(), s);
    let mut queue: Vec<Permutation> = n.generators().to_vec();
    while let Some(x) = queue.pop() {
        for t in g.generators() {
            let c = x.conjugate_by(t);
            if !n.contains(&c) {
                n = n.closure(&c);
                queue.push(c);
            }
        }
    }
    n
}

/// `G'`, the normal closure of the commutators of generator pairs.
pub fn derived_subgroup(g: &PermGroup) -> PermGroup {
    if let Some(d) = g.derived.get() {
        return (**d).clone();
    }
    let gens = g.generators();
    let mut comms = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = a.commutator_unchecked(b);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    let d = normal_closure_unchecked(g, &comms);
    (**g.derived.get_or_init(|| Arc::new(d))).clone()
}

/// `[H, K]` for `H, K` normal in `g`.
pub fn commutator_subgroup(g: &PermGroup, h: &PermGroup, k: &PermGroup) -> PermGroup {
    let mut comms = Vec::new();
    for a in h.generators() {
        for b in k.generators() {
            let c = a.commutator_unchecked(b);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    normal_closure_unchecked(g, &comms)
}

pub fn center(g: &PermGroup) -> Result<PermGroup> {
    g.filter_subgroup(|x| g.generators().iter().all(|s| x.commutes_with(s)))
}

/// `C_G(x)`: a scan for small groups, orbit-stabilizer above
/// [`limits::EXHAUSTIVE_CENTRALIZER_LIMIT`].
pub fn centralizer(g: &PermGroup, x: &Permutation) -> Result<PermGroup> {
    g.check_member(x)?;
    if g.order() <= limits::EXHAUSTIVE_CENTRALIZER_LIMIT {
        centralizer_exhaustive(g, x)
    } else {
        Ok(centralizer_orbit_stabilizer(g, x))
    }
}

pub fn centralizer_exhaustive(g: &PermGroup, x: &Permutation) -> Result<PermGroup> {
    g.filter_subgroup(|y| y.commutes_with(x))
}

/// Stabilizer of `x` in the conjugation action, generated by Schreier
/// generators of the orbit.
pub fn centralizer_orbit_stabilizer(g: &PermGroup, x: &Permutation) -> PermGroup {
    let mut transversal: HashMap<Permutation, Permutation> = HashMap::new();
    let mut orbit = vec![x.clone()];
    transversal.insert(x.clone(), g.identity());
    let mut schreier = Vec::new();
    let mut i = 0;
    while i < orbit.len() {
        let y = orbit[i].clone();
        let ty = transversal[&y].clone();
        for s in g.generators() {
            let z = y.conjugate_by(s);
            let tys = &ty * s;
            match transversal.get(&z) {
                Some(tz) => {
                    let sg = &tys * &tz.inverse();
                    if !sg.is_identity() {
                        schreier.push(sg);
                    }
                }
                None => {
                    transversal.insert(z.clone(), tys);
                    orbit.push(z);
                }
            }
        }
        i += 1;
    }
    PermGroup::from_elements(g.degree(), &schreier)
}

/// Elements of `g` commuting with every element of `h`.
pub fn centralizer_of_subgroup(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    g.filter_subgroup(|y| h.generators().iter().all(|x| y.commutes_with(x)))
}

/// `N_G(H)`.
pub fn normalizer(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    h.check_subgroup_of(g)?;
    if is_normal(g, h) {
        return Ok(g.clone());
    }
    let els = g.elements()?;
    let mut n = h.clone();
    for y in els.iter() {
        if n.contains(y) {
            continue;
        }
        if h.generators().iter().all(|x| h.contains(&x.conjugate_by(y))) {
            n = n.closure(y);
        }
    }
    Ok(n)
}

/// `|HK| = |H||K| / |H ∩ K|`.
pub fn product_order(h: &PermGroup, k: &PermGroup) -> Result<u64> {
    let i = h.intersection(k)?;
    Ok(h.order() * k.order() / i.order())
}

/// True iff `H G' = G`.
pub fn is_supplement(g: &PermGroup, h: &PermGroup) -> Result<bool> {
    h.check_subgroup_of(g)?;
    let d = derived_subgroup(g);
    Ok(product_order(h, &d)? == g.order())
}

/// Sorted element list of a subgroup, used as a canonical key.
pub type SubgroupKey = Arc<[Permutation]>;

pub fn subgroup_key(h: &PermGroup) -> Result<SubgroupKey> {
    Ok(Arc::from(h.elements()?.as_slice()))
}

fn conjugate_key(key: &SubgroupKey, g: &Permutation) -> SubgroupKey {
    let mut v: Vec<Permutation> = key.iter().map(|x| x.conjugate_by(g)).collect();
    v.sort_unstable();
    Arc::from(v)
}

/// The conjugates of `h` under `g`, as a G-set on element keys (first point is `h`).
pub fn conjugates(g: &PermGroup, h: &PermGroup) -> Result<ActionSet<SubgroupKey>> {
    h.check_subgroup_of(g)?;
    let seed = subgroup_key(h)?;
    Ok(ActionSet::from_orbit(g.clone(), seed, conjugate_key))
}

pub fn group_from_key(degree: usize, key: &SubgroupKey) -> PermGroup {
    PermGroup::from_elements(degree, key.iter())
}

/// True iff `h^x = h`.
pub fn is_invariant_under(h: &PermGroup, x: &Permutation) -> bool {
    h.generators().iter().all(|y| h.contains(&y.conjugate_by(x)))
}
