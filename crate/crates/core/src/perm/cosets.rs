use super::{ActionSet, PermGroup, Permutation};
use crate::error::Result;

/// Right cosets `Hx`, each named by its lexicographically least element.
pub type CosetSet = ActionSet<Permutation>;

/// Action of `g` on the right cosets of `h`.
///
/// Returns the coset G-set (first point is `H` itself) and the induced
/// permutation group on `|G:H|` points, whose kernel is the core of `H`.
pub fn coset_action(g: &PermGroup, h: &PermGroup) -> Result<(CosetSet, PermGroup)> {
    h.check_subgroup_of(g)?;
    let h_elements = h.elements()?;
    let canonical = move |x: &Permutation| -> Permutation {
        h_elements
            .iter()
            .map(|y| y * x)
            .min()
            .expect("subgroup has an identity")
    };
    let seed = g.identity();
    let set = ActionSet::from_orbit(g.clone(), seed, move |c, x| canonical(&(c * x)));
    let image = set.image_group()?;
    Ok((set, image))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(gens: &[&str], n: usize) -> PermGroup {
        PermGroup::from_cycles(n, gens).unwrap()
    }

    #[test]
    fn s3_on_cosets_of_a_transposition() {
        let s3 = grp(&["(1 2)", "(1 2 3)"], 3);
        let h = grp(&["(1 2)"], 3);
        let (set, image) = coset_action(&s3, &h).unwrap();
        assert_eq!(set.len(), 3);
        assert_eq!(image.order(), 6);
    }

    #[test]
    fn whole_group_gives_one_point() {
        let s3 = grp(&["(1 2)", "(1 2 3)"], 3);
        let (set, image) = coset_action(&s3, &s3).unwrap();
        assert_eq!(set.len(), 1);
        assert_eq!(image.order(), 1);
    }

    #[test]
    fn d8_on_cosets_of_center() {
        let d8 = grp(&["(1 2 3 4)", "(1 3)"], 4);
        let z = grp(&["(1 3)(2 4)"], 4);
        let (set, image) = coset_action(&d8, &z).unwrap();
        assert_eq!(set.len(), 4);
        assert_eq!(image.order(), 4);
    }

    #[test]
    fn rejects_non_subgroups() {
        let a4 = grp(&["(1 2 3)", "(2 3 4)"], 4);
        let h = grp(&["(1 2)"], 4);
        assert!(coset_action(&a4, &h).is_err());
    }
}
