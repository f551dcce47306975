use serde::Serialize;

use super::detect::is_anticentral;
use crate::arith::{ext_gcd, is_prime, p_part};
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};
use crate::report::{ReportBuilder, VerificationReport, Witness};
use crate::structure::{check_normal, derived_subgroup, is_normal, sylow_subgroup};

fn is_p_element(x: &Permutation, p: u64) -> bool {
    let o = x.order();
    p_part(o, p) == o
}

fn is_p_prime_element(x: &Permutation, p: u64) -> bool {
    !x.order().is_multiple_of(p)
}

/// For `N ⊴ G` inside `G'` with cyclic Sylow `p`-subgroup and anticentral
/// `a`: the `p'`-elements of `N` form a normal subgroup of index `|N|_p`.
pub fn cyclic_sylow_complement_check(
    g: &PermGroup,
    a: &Permutation,
    n: &PermGroup,
    p: u64,
) -> Result<VerificationReport> {
    if !is_prime(p) {
        return Err(Error::InvalidParameters(format!("{p} is not prime")));
    }
    check_normal(g, n)?;
    if !n.is_subgroup_of(&derived_subgroup(g)) {
        return Err(Error::precondition("N is not contained in G'"));
    }
    let sylow = sylow_subgroup(n, p)?;
    let s_els = sylow.elements()?;
    if !s_els.iter().any(|x| x.order() == sylow.order()) {
        return Err(Error::precondition(format!("the Sylow {p}-subgroup of N is not cyclic")));
    }
    if !is_anticentral(g, a)? {
        return Err(Error::precondition(format!("{a} is not anticentral")));
    }
    let n_els = n.elements()?;
    let p_prime: Vec<&Permutation> = n_els.iter().filter(|x| is_p_prime_element(x, p)).collect();
    let complement = PermGroup::from_elements(n.degree(), p_prime.iter().copied());
    let expected = n.order() / p_part(n.order(), p);
    let mut b = ReportBuilder::new(g, "p-complement");
    b.check(
        "p-prime-elements-form-subgroup",
        "the p'-elements of N form a subgroup of index |N|_p",
        p_prime.len() as u64 == expected && complement.order() == expected,
        format!("{} p'-elements, generated subgroup of order {}, expected {expected}", p_prime.len(), complement.order()),
        || Witness::element(a).with_subgroup(&complement),
    );
    b.check(
        "complement-normal",
        "the p-complement is normal in G",
        is_normal(g, &complement),
        "",
        || Witness::subgroup(&complement),
    );
    b.finish()
}

/// `a = x k = k x` with `x` a `p`-element and `k` a `p'`-element, both powers of `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecomposedElement {
    pub element: Permutation,
    pub prime: u64,
    pub p_part: Permutation,
    pub p_prime_part: Permutation,
}

impl DecomposedElement {
    /// With `|a| = p^e m`, `s p^e + t m = 1`: `x = a^(t m)`, `k = a^(s p^e)`.
    pub fn new(a: &Permutation, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParameters(format!("{p} is not prime")));
        }
        let o = a.order();
        let pe = p_part(o, p);
        let m = o / pe;
        let (_, s, t) = ext_gcd(pe as i64, m as i64);
        Ok(DecomposedElement {
            element: a.clone(),
            prime: p,
            p_part: a.pow(t * m as i64),
            p_prime_part: a.pow(s * pe as i64),
        })
    }
}

/// A complement of the normal Sylow subgroup `p_sub` containing `k`, grown
/// greedily by `p'`-elements in sorted order.
fn complement_containing(g: &PermGroup, p_sub: &PermGroup, k: &Permutation, p: u64) -> Result<PermGroup> {
    let target = g.order() / p_sub.order();
    let mut h = PermGroup::trivial(g.degree()).closure(k);
    let els = g.elements()?;
    loop {
        let before = h.order();
        for y in els.iter() {
            if h.order() == target {
                return Ok(h);
            }
            if h.contains(y) || !is_p_prime_element(y, p) {
                continue;
            }
            let bigger = h.closure(y);
            if !bigger.order().is_multiple_of(p) {
                h = bigger;
            }
        }
        if h.order() == target {
            return Ok(h);
        }
        if h.order() == before {
            return Err(Error::internal("no complement of the normal Sylow subgroup found"));
        }
    }
}

/// Outcome of the four conditions for an element relative to a normal Sylow subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NormalSylowConditions {
    /// `k` anticentral in `K`.
    pub complement_part: bool,
    /// `x` anticentral in `C_P(k)`.
    pub sylow_part: bool,
    /// `C_P(k) ∩ P' = C_P(k)'`.
    pub derived_meet: bool,
    /// `C_P(K) = C_P(k)`.
    pub centralizers_agree: bool,
}

impl NormalSylowConditions {
    pub fn all(&self) -> bool {
        self.complement_part && self.sylow_part && self.derived_meet && self.centralizers_agree
    }
}

/// For `G` with a normal Sylow `p`-subgroup `P`: decompose `a = x k`, pick a
/// complement `K` containing `k` (or use `complement`), and check that the
/// four conditions hold together exactly when `a` is anticentral.
pub fn normal_sylow_criteria(
    g: &PermGroup,
    a: &Permutation,
    p: u64,
    complement: Option<&PermGroup>,
) -> Result<(NormalSylowConditions, VerificationReport)> {
    g.check_member(a)?;
    let p_sub = sylow_subgroup(g, p)?;
    if !is_normal(g, &p_sub) {
        return Err(Error::precondition(format!("the Sylow {p}-subgroup is not normal")));
    }
    let dec = DecomposedElement::new(a, p)?;
    let (x, k) = (&dec.p_part, &dec.p_prime_part);
    let kk = match complement {
        Some(c) => {
            c.check_subgroup_of(g)?;
            if c.order() * p_sub.order() != g.order() || !c.contains(k) {
                return Err(Error::precondition("K is not a complement containing the p'-part of a"));
            }
            c.clone()
        }
        None => complement_containing(g, &p_sub, k, p)?,
    };
    let cpk = p_sub.filter_subgroup(|y| y.commutes_with(k))?;
    let cpkk = p_sub.filter_subgroup(|y| kk.generators().iter().all(|z| y.commutes_with(z)))?;
    let p_derived = derived_subgroup(&p_sub);
    let cond = NormalSylowConditions {
        complement_part: is_anticentral(&kk, k)?,
        sylow_part: is_anticentral(&cpk, x)?,
        derived_meet: cpk.intersection(&p_derived)?.same_group(&derived_subgroup(&cpk)),
        centralizers_agree: cpkk.same_group(&cpk),
    };
    debug_assert!(is_p_element(x, p));
    let anticentral = is_anticentral(g, a)?;
    let mut b = ReportBuilder::new(g, "normal-sylow");
    b.check(
        "normal-sylow-criteria",
        "the four normal Sylow conditions hold together iff a is anticentral",
        cond.all() == anticentral,
        format!("{cond:?}, anticentral {anticentral}"),
        || Witness::element(a).with_element(x).with_element(k).with_subgroup(&kk),
    );
    let report = b.finish()?;
    Ok((cond, report))
}
