use std::fmt;
use std::ops::Mul;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of `{0, .., degree-1}` stored as an image table.
///
/// Points are 0-based internally and 1-based in cycle notation. Products use
/// the right action: `p * q` applies `p` first, so `x^(pq) = (x^p)^q`.
/// Ordering is lexicographic on the image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Build from a 0-based image table, checking it is a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &x) in images.iter().enumerate() {
            let x = x as usize;
            if x >= n {
                return Err(Error::Parse {
                    offset: i,
                    message: format!("image {} out of range for degree {n}", x + 1),
                });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::Parse {
                    offset: i,
                    message: format!("image {} repeated", x + 1),
                });
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Build from a 1-based image table.
    pub fn from_one_based(images: &[u32]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::Parse {
                offset: images.iter().position(|&x| x == 0).unwrap(),
                message: "point 0 in a 1-based image table".into(),
            });
        }
        Self::from_images(images.iter().map(|&x| x - 1).collect())
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Build from 0-based cycles. Points must be distinct.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::Parse {
                        offset: k,
                        message: format!("point {} out of range for degree {degree}", p + 1),
                    });
                }
                if std::mem::replace(&mut used[p], true) {
                    return Err(Error::Parse {
                        offset: k,
                        message: format!("repeated point {}", p + 1),
                    });
                }
                images[p] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Parse whitespace- or comma-separated disjoint cycles of 1-based points.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut used = vec![false; degree];
        let bytes = text.as_bytes();
        let mut i = 0;
        let mut current: Option<Vec<usize>> = None;
        while i < bytes.len() {
            let c = bytes[i];
            match c {
                b'(' => {
                    if current.is_some() {
                        return Err(parse_err(i, "nested '('"));
                    }
                    current = Some(Vec::new());
                    i += 1;
                }
                b')' => match current.take() {
                    Some(cycle) => {
                        cycles.push(cycle);
                        i += 1;
                    }
                    None => return Err(parse_err(i, "unmatched ')'")),
                },
                b' ' | b'\t' | b',' | b'\r' | b'\n' => i += 1,
                b'0'..=b'9' => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let Some(cycle) = current.as_mut() else {
                        return Err(parse_err(start, "point outside of a cycle"));
                    };
                    let point: usize = text[start..i]
                        .parse()
                        .map_err(|_| parse_err(start, "point does not fit in an integer"))?;
                    if point == 0 || point > degree {
                        return Err(parse_err(
                            start,
                            format!("point {point} out of range 1..={degree}"),
                        ));
                    }
                    if std::mem::replace(&mut used[point - 1], true) {
                        return Err(parse_err(start, format!("repeated point {point}")));
                    }
                    cycle.push(point - 1);
                }
                _ => {
                    return Err(parse_err(
                        i,
                        format!("unexpected character {:?}", text[i..].chars().next().unwrap()),
                    ))
                }
            }
        }
        if current.is_some() {
            return Err(parse_err(text.len(), "unclosed '('"));
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i)
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        Ok(self * other)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        let mut out = vec![0u32; self.degree()];
        for (j, &x) in self.images.iter().enumerate() {
            out[g.images[j] as usize] = g.images[x as usize];
        }
        Permutation {
            images: out.into_boxed_slice(),
        }
    }

    /// `[self, g] = self^-1 g^-1 self g`, so that `self * [self, g] = self^g`.
    pub fn commutator(&self, g: &Self) -> Result<Self> {
        self.check_degree(g)?;
        Ok(self.commutator_unchecked(g))
    }

    pub(crate) fn commutator_unchecked(&self, g: &Self) -> Self {
        &self.inverse() * &self.conjugate_by(g)
    }

    /// True when `self * g == g * self`.
    pub fn commutes_with(&self, g: &Self) -> bool {
        self.images
            .iter()
            .zip(g.images.iter())
            .all(|(&a, &b)| g.images[a as usize] == self.images[b as usize])
    }

    pub fn pow(&self, exp: i64) -> Self {
        let n = self.degree();
        let ord = self.order() as i64;
        let e = exp.rem_euclid(ord.max(1)) as u64;
        let mut out = vec![0u32; n];
        // walk each cycle once
        let mut done = vec![false; n];
        let mut cycle = Vec::new();
        for start in 0..n {
            if done[start] {
                continue;
            }
            cycle.clear();
            let mut p = start;
            while !done[p] {
                done[p] = true;
                cycle.push(p as u32);
                p = self.images[p] as usize;
            }
            let len = cycle.len();
            let shift = (e % len as u64) as usize;
            for (k, &q) in cycle.iter().enumerate() {
                out[q as usize] = cycle[(k + shift) % len];
            }
        }
        Permutation {
            images: out.into_boxed_slice(),
        }
    }

    /// Element order: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .into_iter()
            .fold(1u64, |acc, l| acc.lcm(&(l as u64)))
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles_all().into_iter().map(|c| c.len()).collect()
    }

    fn cycles_all(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut done = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if done[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !done[p] {
                done[p] = true;
                cycle.push(p);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Nontrivial cycles, 0-based, each starting at its least point, sorted by
    /// least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles_all().into_iter().filter(|c| c.len() > 1).collect()
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Restrict to the points `offset..offset+len`, which must be invariant.
    pub fn restrict(&self, offset: usize, len: usize) -> Option<Self> {
        let mut out = Vec::with_capacity(len);
        for p in offset..offset + len {
            let x = self.images[p] as usize;
            if x < offset || x >= offset + len {
                return None;
            }
            out.push((x - offset) as u32);
        }
        Some(Permutation {
            images: out.into_boxed_slice(),
        })
    }

    /// Disjoint union action of `self` on the first points and `other` after.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let off = self.degree() as u32;
        let images: Vec<u32> = self
            .images
            .iter()
            .copied()
            .chain(other.images.iter().map(|&x| x + off))
            .collect();
        Permutation {
            images: images.into_boxed_slice(),
        }
    }
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

impl<'a> Mul<&'a Permutation> for &'a Permutation {
    type Output = Permutation;

    /// Right action product. Panics on degree mismatch; use
    /// [`Permutation::compose`] for a checked version.
    fn mul(self, rhs: &'a Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| rhs.images[x as usize])
                .collect(),
        }
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Permutation::from_one_based(&v)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.images.iter().map(|&x| x + 1).collect()
    }
}

/// Canonical cycle notation: 1-based, cycles sorted by least point, `()` for
/// the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn parse_cycle() {
        let x = p("(1 2 3)", 4);
        assert_eq!(Vec::<u32>::from(x), vec![2, 3, 1, 4]);
    }

    #[test]
    fn parse_empty_is_identity() {
        assert_eq!(p("", 5), Permutation::identity(5));
        assert_eq!(p("()", 5), Permutation::identity(5));
        assert_eq!(p("  ", 2), Permutation::identity(2));
    }

    #[test]
    fn parse_errors() {
        match Permutation::parse("(1 2)(1 3)", 3) {
            Err(Error::Parse { offset, message }) => {
                assert_eq!(offset, 6);
                assert!(message.contains("repeated point 1"), "{message}");
            }
            other => panic!("{other:?}"),
        }
        match Permutation::parse("(1 5)", 4) {
            Err(Error::Parse { offset: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            Permutation::parse("(1 2", 4),
            Err(Error::Parse { offset: 4, .. })
        ));
        assert!(matches!(
            Permutation::parse("1 2)", 4),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(
            Permutation::parse("((1 2))", 4),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(Permutation::parse("(1 x)", 4).is_err());
        assert!(Permutation::parse("(0 1)", 4).is_err());
    }

    #[test]
    fn right_action_product() {
        let a = p("(1 2)", 3);
        let b = p("(2 3)", 3);
        assert_eq!(a.compose(&b).unwrap(), p("(1 3 2)", 3));
        // 1 -> 2 under a, then 2 -> 3 under b
        assert_eq!((&a * &b).image(0), 2);
    }

    #[test]
    fn identity_and_inverse_laws() {
        let x = p("(1 4 2)(3 5)", 6);
        let e = Permutation::identity(6);
        assert_eq!(&x * &e, x);
        assert_eq!(&x * &x.inverse(), e);
    }

    #[test]
    fn degree_mismatch() {
        let a = p("(1 2)", 3);
        let b = p("(1 2)", 4);
        assert!(matches!(a.compose(&b), Err(Error::DegreeMismatch { .. })));
        assert!(matches!(a.commutator(&b), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn commutator_convention() {
        let a = p("(1 2)", 3);
        let g = p("(1 3)", 3);
        assert_eq!(a.commutator(&g).unwrap(), p("(1 3 2)", 3));
        assert!(a.commutator(&a).unwrap().is_identity());
        // a * [a, g] = a^g
        assert_eq!(&a * &a.commutator(&g).unwrap(), a.conjugate_by(&g));
    }

    #[test]
    fn conjugation_matches_products() {
        let x = p("(1 2 3 4)", 5);
        let g = p("(2 5)(1 3)", 5);
        assert_eq!(x.conjugate_by(&g), &(&g.inverse() * &x) * &g);
    }

    #[test]
    fn order_and_powers() {
        let x = p("(1 2 3)(4 5)", 5);
        assert_eq!(x.order(), 6);
        assert!(x.pow(6).is_identity());
        assert_eq!(x.pow(-1), x.inverse());
        assert_eq!(x.pow(7), x);
        assert_eq!(x.pow(2), &x * &x);
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(p("(3 1 2)(5 4)", 5).to_string(), "(1 2 3)(4 5)");
        assert_eq!(p("(5 4) (3 1 2)", 5).to_string(), "(1 2 3)(4 5)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!(p("(2)", 3).to_string(), "()");
    }

    #[test]
    fn serde_one_based() {
        let x = p("(1 3)", 3);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, "[3,2,1]");
        let y: Permutation = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
        assert!(serde_json::from_str::<Permutation>("[1,1,2]").is_err());
    }
}
