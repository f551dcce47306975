use crate::arith::{is_prime, p_part};
use crate::error::{Error, Result};
use crate::perm::PermGroup;

use super::subgroups::{conjugates, group_from_key, normalizer};

/// A Sylow `p`-subgroup, grown one factor of `p` at a time inside iterated
/// normalizers. At each step the first element `x` of `N_G(P)` (in sorted
/// order) with `x ∉ P` and `x^p ∈ P` is adjoined.
pub fn sylow_subgroup(g: &PermGroup, p: u64) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(Error::InvalidParameters(format!("{p} is not prime")));
    }
    let order = g.order();
    let target = p_part(order, p);
    if target == order {
        return Ok(g.clone());
    }
    let mut sylow = PermGroup::trivial(g.degree());
    while sylow.order() < target {
        let n = normalizer(g, &sylow)?;
        let els = n.elements()?;
        let x = els
            .iter()
            .find(|x| !sylow.contains(x) && sylow.contains(&x.pow(p as i64)))
            .ok_or_else(|| Error::internal("normalizer quotient has no element of order p"))?;
        sylow = sylow.closure(x);
    }
    Ok(sylow)
}

/// All Sylow `p`-subgroups, as conjugates of one of them.
pub fn all_sylow_subgroups(g: &PermGroup, p: u64) -> Result<Vec<PermGroup>> {
    let s = sylow_subgroup(g, p)?;
    let set = conjugates(g, &s)?;
    Ok(set
        .points()
        .iter()
        .map(|k| group_from_key(g.degree(), k))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(gens: &[&str], n: usize) -> PermGroup {
        PermGroup::from_cycles(n, gens).unwrap()
    }

    #[test]
    fn examples() {
        let s3 = grp(&["(1 2)", "(1 2 3)"], 3);
        let p3 = sylow_subgroup(&s3, 3).unwrap();
        assert!(p3.same_group(&grp(&["(1 2 3)"], 3)));
        assert_eq!(sylow_subgroup(&s3, 5).unwrap().order(), 1);
        let a4 = grp(&["(1 2 3)", "(2 3 4)"], 4);
        let v4 = grp(&["(1 2)(3 4)", "(1 3)(2 4)"], 4);
        assert!(sylow_subgroup(&a4, 2).unwrap().same_group(&v4));
        assert!(sylow_subgroup(&a4, 4).is_err());
    }

    #[test]
    fn counts() {
        let s4 = grp(&["(1 2 3 4)", "(1 2)"], 4);
        assert_eq!(all_sylow_subgroups(&s4, 2).unwrap().len(), 3);
        assert_eq!(all_sylow_subgroups(&s4, 3).unwrap().len(), 4);
        let s5 = grp(&["(1 2 3 4 5)", "(1 2)"], 5);
        assert_eq!(sylow_subgroup(&s5, 2).unwrap().order(), 8);
        assert_eq!(all_sylow_subgroups(&s5, 5).unwrap().len(), 6);
    }
}
