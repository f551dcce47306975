use super::field::GaloisField;
use crate::arith::{is_prime, is_prime_power};
use crate::error::{Error, Result};
use crate::perm::{coset_action, PermGroup, Permutation};
use crate::structure::Quotient;

/// Largest permutation degree a constructor may produce.
pub const DEGREE_BUDGET: usize = 4096;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

fn perm(images: Vec<u32>) -> Permutation {
    Permutation::from_images(images).expect("constructed images form a bijection")
}

fn perm_from_fn(n: usize, f: impl Fn(usize) -> usize) -> Permutation {
    perm((0..n).map(|i| f(i) as u32).collect())
}

fn group(degree: usize, gens: Vec<Permutation>) -> PermGroup {
    PermGroup::new(degree, gens).expect("generators share the degree")
}

/// `C_m ⋊ <r>` acting on `Z/m` by `i -> i + 1` and `i -> r i`.
/// Returns the group with the two generators.
pub fn affine_cyclic(m: usize, r: usize) -> Result<(PermGroup, Permutation, Permutation)> {
    if m < 2 || num_integer::gcd(m, r) != 1 {
        return Err(invalid(format!("{r} is not a unit modulo {m}")));
    }
    let x = perm_from_fn(m, |i| (i + 1) % m);
    let y = perm_from_fn(m, |i| i * r % m);
    Ok((group(m, vec![x.clone(), y.clone()]), x, y))
}

/// Right regular representation of `<x, y | x^m, y^s = x^t, x^y = x^r>` on
/// its `m s` normal forms `x^i y^j`.
pub fn metacyclic(m: u64, s: u64, t: u64, r: u64) -> Result<(PermGroup, Permutation, Permutation)> {
    if m < 1 || s < 1 || t >= m.max(1) {
        return Err(invalid("metacyclic parameters need m, s >= 1 and t < m"));
    }
    let r = r % m;
    let rinv = (0..m).find(|&v| v * r % m == 1 % m).ok_or_else(|| invalid(format!("{r} is not a unit modulo {m}")))?;
    let pow_mod = |b: u64, e: u64| (0..e).fold(1 % m, |acc, _| acc * b % m);
    if pow_mod(r, s) != 1 % m || !(t * (m + r - 1)).is_multiple_of(m) {
        return Err(invalid("metacyclic relations are inconsistent: need r^s = 1 and t (r - 1) = 0 mod m"));
    }
    let n = (m * s) as usize;
    if n > DEGREE_BUDGET {
        return Err(invalid(format!("order {n} exceeds the degree budget {DEGREE_BUDGET}")));
    }
    let mul = |(i, j): (u64, u64), (k, l): (u64, u64)| -> (u64, u64) {
        let mut e = (i + k * pow_mod(rinv, j)) % m;
        let mut f = j + l;
        if f >= s {
            f -= s;
            e = (e + t) % m;
        }
        (e, f)
    };
    let encode = |(i, j): (u64, u64)| (i + m * j) as usize;
    let decode = |c: usize| (c as u64 % m, c as u64 / m);
    let right = |g: (u64, u64)| perm_from_fn(n, |c| encode(mul(decode(c), g)));
    let x = right((1 % m, 0));
    let y = right((0, 1 % s));
    let g = group(n, vec![x.clone(), y.clone()]);
    if g.order() != m * s {
        return Err(invalid("metacyclic relations do not define a group of order m s"));
    }
    Ok((g, x, y))
}

pub fn abelian_group(factors: &[u64]) -> Result<PermGroup> {
    if let Some(f) = factors.iter().find(|&&f| f < 2) {
        return Err(invalid(format!("invariant factor {f} is less than 2")));
    }
    let degree: u64 = factors.iter().sum();
    if degree as usize > DEGREE_BUDGET {
        return Err(invalid("degree budget exceeded"));
    }
    if factors.is_empty() {
        return Ok(PermGroup::trivial(1));
    }
    let degree = degree as usize;
    let mut gens = Vec::new();
    let mut offset = 0;
    for &f in factors {
        let f = f as usize;
        gens.push(perm_from_fn(degree, |i| {
            if i >= offset && i < offset + f {
                offset + (i - offset + 1) % f
            } else {
                i
            }
        }));
        offset += f;
    }
    Ok(group(degree, gens))
}

/// Disjoint union action; the first factor moves the first points.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let ida = a.identity();
    let idb = b.identity();
    let gens = a
        .generators()
        .iter()
        .map(|x| x.direct_sum(&idb))
        .chain(b.generators().iter().map(|y| ida.direct_sum(y)))
        .collect();
    let g = group(a.degree() + b.degree(), gens);
    match (a.name(), b.name()) {
        (Some(x), Some(y)) => g.with_name(format!("{x}x{y}")),
        _ => g,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoGroupKind {
    Dihedral,
    Quaternion,
    Semidihedral,
}

impl std::str::FromStr for TwoGroupKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dihedral" | "d" => Ok(TwoGroupKind::Dihedral),
            "quaternion" | "q" => Ok(TwoGroupKind::Quaternion),
            "semidihedral" | "sd" => Ok(TwoGroupKind::Semidihedral),
            _ => Err(invalid(format!("unknown 2-group kind `{s}`"))),
        }
    }
}

/// Dihedral and semidihedral groups act on `order/2` points, generalized
/// quaternion groups regularly.
pub fn two_generated_2group(kind: TwoGroupKind, order: u64) -> Result<PermGroup> {
    let min = if kind == TwoGroupKind::Semidihedral { 16 } else { 8 };
    if order < min || is_prime_power(order).map(|(p, _)| p) != Some(2) {
        return Err(invalid(format!("order {order} must be a power of 2 and at least {min}")));
    }
    let n = order / 2;
    Ok(match kind {
        TwoGroupKind::Dihedral => affine_cyclic(n as usize, n as usize - 1)?.0,
        TwoGroupKind::Semidihedral => affine_cyclic(n as usize, n as usize / 2 - 1)?.0,
        TwoGroupKind::Quaternion => metacyclic(n, 2, n / 2, n - 1)?.0,
    })
}

/// The Heisenberg group `(u, v) -> (u + a, v + c + b u)` on `F_p^2`, with a
/// generator of its centre.
fn heisenberg(p: usize) -> (PermGroup, Permutation) {
    let n = p * p;
    let enc = |u: usize, v: usize| u + p * v;
    let x = perm_from_fn(n, |i| enc((i % p + 1) % p, i / p));
    let y = perm_from_fn(n, |i| enc(i % p, (i / p + i % p) % p));
    let z = perm_from_fn(n, |i| enc(i % p, (i / p + 1) % p));
    (group(n, vec![x, y]), z)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExponentType {
    /// Exponent `p` for odd `p`; the dihedral-type block for `p = 2`.
    Small,
    /// Exponent `p^2` for odd `p`; the quaternion-type block for `p = 2`.
    Large,
}

impl std::str::FromStr for ExponentType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "p" | "plus" | "+" | "dihedral" => Ok(ExponentType::Small),
            "p2" | "p^2" | "minus" | "-" | "quaternion" => Ok(ExponentType::Large),
            _ => Err(invalid(format!("unknown exponent type `{s}`"))),
        }
    }
}

/// An extraspecial group of order `p^3` with a central generator.
fn extraspecial_block(p: u64, kind: ExponentType) -> Result<(PermGroup, Permutation)> {
    Ok(match (p, kind) {
        (2, ExponentType::Small) => {
            let (g, x, _) = affine_cyclic(4, 3)?;
            (g, x.pow(2))
        }
        (2, ExponentType::Large) => {
            let (g, x, _) = metacyclic(4, 2, 2, 3)?;
            (g, x.pow(2))
        }
        (_, ExponentType::Small) => heisenberg(p as usize),
        (_, ExponentType::Large) => {
            let (g, x, _) = affine_cyclic((p * p) as usize, (1 + p) as usize)?;
            (g, x.pow(p as i64))
        }
    })
}

/// `(A x B) / <(z_a, z_b^-1)>` acting on the cosets of a subgroup chosen to
/// meet the glued centre trivially.
fn central_product(a: &PermGroup, za: &Permutation, b: &PermGroup, zb: &Permutation) -> Result<PermGroup> {
    let d = direct_product(a, b);
    let glue = za.direct_sum(&zb.inverse());
    let centre = za.direct_sum(&b.identity());
    let mut h = PermGroup::trivial(d.degree()).closure(&glue);
    for y in d.elements()?.iter() {
        if h.contains(y) {
            continue;
        }
        let bigger = h.closure(y);
        if !bigger.contains(&centre) {
            h = bigger;
        }
    }
    Ok(coset_action(&d, &h)?.1)
}

/// Extraspecial groups of order `p^3` and `p^5`; order `p^5` is the central
/// product of a block of the requested type with a block of the other type
/// (`p = 2`: with `D8`; odd `p`: with the exponent-`p` block).
pub fn extraspecial(p: u64, order: u64, kind: ExponentType) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(invalid(format!("{p} is not prime")));
    }
    if order == p.pow(3) {
        return Ok(extraspecial_block(p, kind)?.0);
    }
    if order != p.pow(5) {
        return Err(invalid(format!("extraspecial order must be {} or {}", p.pow(3), p.pow(5))));
    }
    let (a, za) = extraspecial_block(p, ExponentType::Small)?;
    let (b, zb) = extraspecial_block(p, kind)?;
    central_product(&a, &za, &b, &zb)
}

/// `UT(n, q)` acting on row vectors of `GF(q)^n`, with the element whose
/// matrix has ones on the diagonal and superdiagonal.
pub fn unitriangular(n: usize, q: u64) -> Result<(PermGroup, Permutation)> {
    if n < 2 {
        return Err(invalid("unitriangular needs n >= 2"));
    }
    let f = GaloisField::new(q)?;
    let qs = f.order();
    let degree = (qs as u64)
        .checked_pow(n as u32)
        .filter(|&d| d as usize <= DEGREE_BUDGET)
        .ok_or_else(|| invalid(format!("q^n exceeds the degree budget {DEGREE_BUDGET}")))? as usize;
    let decode = |c: usize| -> Vec<usize> { (0..n).map(|i| c / qs.pow(i as u32) % qs).collect() };
    let encode = |v: &[usize]| -> usize { v.iter().rev().fold(0, |acc, &x| acc * qs + x) };
    let mut gens = Vec::new();
    for i in 0..n - 1 {
        for lambda in f.additive_basis() {
            // v (I + lambda e_{i,i+1})
            gens.push(perm_from_fn(degree, |c| {
                let mut v = decode(c);
                v[i + 1] = f.add(v[i + 1], f.mul(v[i], lambda));
                encode(&v)
            }));
        }
    }
    let a = perm_from_fn(degree, |c| {
        let v = decode(c);
        let w: Vec<usize> = (0..n).map(|j| if j == 0 { v[0] } else { f.add(v[j], v[j - 1]) }).collect();
        encode(&w)
    });
    Ok((group(degree, gens), a))
}

/// `SL(2, 3)` on the 8 nonzero row vectors of `F_3^2`, with an element of
/// order 3 and the central involution.
pub fn sl23() -> (PermGroup, Permutation, Permutation) {
    let vectors: Vec<(u32, u32)> = (0..9).map(|i| (i % 3, i / 3)).filter(|&v| v != (0, 0)).collect();
    let index = |v: (u32, u32)| vectors.iter().position(|&w| w == v).unwrap();
    let act = |f: &dyn Fn(u32, u32) -> (u32, u32)| perm_from_fn(8, |i| {
        let (a, b) = vectors[i];
        index(f(a, b))
    });
    let upper = act(&|a, b| (a, (a + b) % 3));
    let lower = act(&|a, b| ((a + b) % 3, b));
    let minus = act(&|a, b| ((3 - a) % 3, (3 - b) % 3));
    (group(8, vec![upper.clone(), lower]), upper, minus)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderEightKind {
    D8,
    Q8,
}

impl std::str::FromStr for OrderEightKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "D8" | "DIHEDRAL" => Ok(OrderEightKind::D8),
            "Q8" | "QUATERNION" => Ok(OrderEightKind::Q8),
            _ => Err(invalid(format!("unknown group of order 8 `{s}`"))),
        }
    }
}

/// `(SL(2,3) x E) / <(-1, z)>` in its regular action on 96 points, with the
/// image of `(x, y)`: `x` of order 3 and `y` a noncentral element of `E`.
pub fn central_product_sl23_e(kind: OrderEightKind) -> Result<(PermGroup, Permutation)> {
    let (s, x, minus) = sl23();
    let (e, r, z) = match kind {
        OrderEightKind::D8 => {
            let (g, r, _) = affine_cyclic(4, 3)?;
            let z = r.pow(2);
            (g, r, z)
        }
        OrderEightKind::Q8 => {
            let (g, r, _) = metacyclic(4, 2, 2, 3)?;
            let z = r.pow(2);
            (g, r, z)
        }
    };
    let d = direct_product(&s, &e);
    let glue = PermGroup::trivial(d.degree()).closure(&minus.direct_sum(&z));
    let q = Quotient::new(&d, &glue)?;
    let a = q.project(&x.direct_sum(&r))?;
    Ok((q.image().clone(), a))
}

/// `<inversion> ⋉ K` for odd abelian `K` with the given invariant factors,
/// acting on `K`; returns the inversion.
pub fn fpf_semidirect(factors: &[u64]) -> Result<(PermGroup, Permutation)> {
    if factors.is_empty() || factors.iter().any(|&f| f < 2) {
        return Err(invalid("need at least one invariant factor, each at least 2"));
    }
    let n: u64 = factors.iter().product();
    if n.is_multiple_of(2) {
        return Err(invalid(format!("|K| = {n} is even, so inversion has fixed points")));
    }
    if n as usize > DEGREE_BUDGET {
        return Err(invalid("degree budget exceeded"));
    }
    let n = n as usize;
    let fs: Vec<usize> = factors.iter().map(|&f| f as usize).collect();
    let decode = |mut c: usize| -> Vec<usize> {
        fs.iter()
            .map(|&f| {
                let d = c % f;
                c /= f;
                d
            })
            .collect()
    };
    let encode = |v: &[usize]| -> usize { v.iter().zip(&fs).rev().fold(0, |acc, (&x, &f)| acc * f + x) };
    let mut gens: Vec<Permutation> = (0..fs.len())
        .map(|k| {
            perm_from_fn(n, |c| {
                let mut v = decode(c);
                v[k] = (v[k] + 1) % fs[k];
                encode(&v)
            })
        })
        .collect();
    let alpha = perm_from_fn(n, |c| {
        let v: Vec<usize> = decode(c).iter().zip(&fs).map(|(&x, &f)| (f - x) % f).collect();
        encode(&v)
    });
    gens.push(alpha.clone());
    Ok((group(n, gens), alpha))
}

pub fn symmetric(n: usize) -> Result<PermGroup> {
    if n == 0 || n > DEGREE_BUDGET {
        return Err(invalid(format!("degree {n} out of range")));
    }
    let mut gens = vec![perm_from_fn(n, |i| (i + 1) % n)];
    if n > 2 {
        gens.push(perm_from_fn(n, |i| match i {
            0 => 1,
            1 => 0,
            _ => i,
        }));
    }
    Ok(group(n, gens))
}

pub fn alternating(n: usize) -> Result<PermGroup> {
    if n == 0 || n > DEGREE_BUDGET {
        return Err(invalid(format!("degree {n} out of range")));
    }
    let gens = (2..n)
        .map(|k| {
            perm_from_fn(n, |i| match i {
                0 => 1,
                1 => k,
                _ if i == k => 0,
                _ => i,
            })
        })
        .collect();
    Ok(group(n, gens))
}

/// `C_p ⋊ C_d` on `p` points, with the complement generator of order `d`.
pub fn frobenius(p: u64, d: u64) -> Result<(PermGroup, Permutation)> {
    if !is_prime(p) || d == 0 || !(p - 1).is_multiple_of(d) {
        return Err(invalid(format!("need p prime and d dividing p - 1, got p = {p}, d = {d}")));
    }
    let r = (1..p)
        .find(|&r| {
            let mut x = r;
            let mut k = 1;
            while x != 1 {
                x = x * r % p;
                k += 1;
            }
            k == d
        })
        .expect("F_p^* is cyclic");
    let (g, _, y) = affine_cyclic(p as usize, r as usize)?;
    Ok((g, y))
}

/// `C_p ≀ C_p` on `p^2` points.
pub fn wreath_pp(p: u64) -> Result<PermGroup> {
    if !is_prime(p) || (p * p) as usize > DEGREE_BUDGET {
        return Err(invalid(format!("{p} is not a usable prime")));
    }
    let p = p as usize;
    let n = p * p;
    let base = perm_from_fn(n, |i| if i < p { (i + 1) % p } else { i });
    let top = perm_from_fn(n, |i| (i + p) % n);
    Ok(group(n, vec![base, top]))
}

/// `PSL(2, 7)` on the projective line `F_7 ∪ {∞}`, with `∞` as point 8.
pub fn psl27() -> PermGroup {
    const INF: usize = 7;
    let shift = perm_from_fn(8, |i| if i == INF { INF } else { (i + 1) % 7 });
    let inv7 = |x: usize| (1..7).find(|&y| x * y % 7 == 1).unwrap();
    let flip = perm_from_fn(8, |i| match i {
        INF => 0,
        0 => INF,
        x => (7 - inv7(x)) % 7,
    });
    group(8, vec![shift, flip])
}
