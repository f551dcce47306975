use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use crate::arith::prime_divisors;
use crate::error::{Error, Result};

pub fn euler_phi(m: u64) -> u64 {
    prime_divisors(m)
        .into_iter()
        .fold(m, |acc, p| acc / p * (p - 1))
}

/// The `m`-th cyclotomic polynomial, coefficients from degree 0 up.
pub fn cyclotomic_polynomial(m: u64) -> Arc<[i64]> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<[i64]>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 divided by every proper divisor's polynomial
    let mut poly = vec![0i64; m as usize + 1];
    poly[0] = -1;
    poly[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            poly = divide_monic(&poly, &cyclotomic_polynomial(d));
        }
    }
    let p: Arc<[i64]> = Arc::from(poly);
    cache.write().unwrap().insert(m, p.clone());
    p
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for k in (dd..num.len()).rev() {
        let c = rem[k];
        if c != 0 {
            quot[k - dd] = c;
            for (i, &d) in den.iter().enumerate() {
                rem[k - dd + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// An element of `Z[z]` with `z` a primitive `conductor`-th root of unity,
/// stored by its coordinates in the basis `1, z, ..., z^(phi-1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicValue {
    conductor: u64,
    coeffs: Vec<i64>,
}

impl CyclotomicValue {
    pub fn zero(conductor: u64) -> Self {
        CyclotomicValue {
            conductor,
            coeffs: vec![0; euler_phi(conductor) as usize],
        }
    }

    pub fn from_integer(conductor: u64, c: i64) -> Self {
        let mut v = Self::zero(conductor);
        v.coeffs[0] = c;
        v
    }

    /// `sum_k powers[k] z^k` for any length of `powers`.
    pub fn from_powers(conductor: u64, powers: &[i64]) -> Self {
        let m = conductor as usize;
        let mut folded = vec![0i64; m.max(1)];
        for (k, &c) in powers.iter().enumerate() {
            folded[k % m.max(1)] += c;
        }
        Self::reduced(conductor, folded)
    }

    /// `z^k`.
    pub fn root_of_unity(conductor: u64, k: i64) -> Self {
        let mut powers = vec![0i64; conductor as usize];
        powers[k.rem_euclid(conductor as i64) as usize] = 1;
        Self::reduced(conductor, powers)
    }

    /// Coordinates in the power basis; errors if the length is not `phi(conductor)`.
    pub fn from_coefficients(conductor: u64, coeffs: Vec<i64>) -> Result<Self> {
        if conductor == 0 || coeffs.len() as u64 != euler_phi(conductor) {
            return Err(Error::InvalidParameters(format!(
                "{} coefficients for conductor {conductor}",
                coeffs.len()
            )));
        }
        Ok(CyclotomicValue { conductor, coeffs })
    }

    fn reduced(conductor: u64, mut poly: Vec<i64>) -> Self {
        let phi = cyclotomic_polynomial(conductor);
        let deg = phi.len() - 1;
        for k in (deg..poly.len()).rev() {
            let c = poly[k];
            if c != 0 {
                for (i, &p) in phi.iter().enumerate() {
                    poly[k - deg + i] -= c * p;
                }
            }
        }
        poly.resize(deg, 0);
        CyclotomicValue {
            conductor,
            coeffs: poly,
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        self.coeffs[1..]
            .iter()
            .all(|&c| c == 0)
            .then_some(self.coeffs[0])
    }

    /// Complex conjugate: `z -> z^-1`.
    pub fn conj(&self) -> Self {
        let m = self.conductor as usize;
        let mut powers = vec![0i64; m];
        for (k, &c) in self.coeffs.iter().enumerate() {
            powers[(m - k) % m] += c;
        }
        Self::reduced(self.conductor, powers)
    }

    /// `|x|^2 = x * conj(x)`.
    pub fn norm_squared(&self) -> Self {
        self * &self.conj()
    }

    /// Image under `z -> zeta` in `F_q`, where `zeta` has order `conductor`.
    pub fn reduce_mod(&self, q: u64, zeta: u64) -> u64 {
        let mut acc = 0u64;
        let mut pw = 1u64;
        for &c in &self.coeffs {
            acc = (acc + c.rem_euclid(q as i64) as u64 * pw) % q;
            pw = pw * zeta % q;
        }
        acc
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.conductor, other.conductor,
            "cyclotomic values with different conductors"
        );
    }

    /// Dense export form `c0+c1*z^1+...`.
    pub fn to_dense_string(&self) -> String {
        let mut s = self.coeffs[0].to_string();
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            s.push_str(&format!("+{c}*z^{k}"));
        }
        s
    }

    /// Inverse of [`to_dense_string`](Self::to_dense_string).
    pub fn parse_dense(text: &str, conductor: u64) -> Result<Self> {
        let bad = |m: String| Error::Parse {
            offset: 0,
            message: m,
        };
        let mut coeffs = Vec::new();
        for (k, term) in text.trim().split('+').enumerate() {
            let c = if k == 0 {
                term
            } else {
                term.strip_suffix(&format!("*z^{k}"))
                    .ok_or_else(|| bad(format!("term {k} of {text:?} is not c*z^{k}")))?
            };
            coeffs.push(
                c.trim()
                    .parse::<i64>()
                    .map_err(|e| bad(format!("{c:?}: {e}")))?,
            );
        }
        Self::from_coefficients(conductor, coeffs)
    }
}

impl Add for &CyclotomicValue {
    type Output = CyclotomicValue;

    fn add(self, other: &CyclotomicValue) -> CyclotomicValue {
        self.check_same(other);
        CyclotomicValue {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CyclotomicValue {
    type Output = CyclotomicValue;

    fn sub(self, other: &CyclotomicValue) -> CyclotomicValue {
        self.check_same(other);
        CyclotomicValue {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CyclotomicValue {
    type Output = CyclotomicValue;

    fn neg(self) -> CyclotomicValue {
        CyclotomicValue {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &CyclotomicValue {
    type Output = CyclotomicValue;

    fn mul(self, other: &CyclotomicValue) -> CyclotomicValue {
        self.check_same(other);
        let n = self.coeffs.len();
        let mut prod = vec![0i64; 2 * n - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        CyclotomicValue::reduced(self.conductor, prod)
    }
}

impl fmt::Display for CyclotomicValue {
    /// Compact form, omitting zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.unsigned_abs();
            match (k, mag) {
                (0, _) => write!(f, "{sign}{mag}")?,
                (1, 1) => write!(f, "{sign}z")?,
                (1, _) => write!(f, "{sign}{mag}*z")?,
                (_, 1) => write!(f, "{sign}z^{k}")?,
                _ => write!(f, "{sign}{mag}*z^{k}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [z^{}=1]", self.conductor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials() {
        assert_eq!(&*cyclotomic_polynomial(1), &[-1, 1]);
        assert_eq!(&*cyclotomic_polynomial(4), &[1, 0, 1]);
        assert_eq!(&*cyclotomic_polynomial(6), &[1, -1, 1]);
        assert_eq!(&*cyclotomic_polynomial(12), &[1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(1), 1);
    }

    #[test]
    fn sum_of_roots_vanishes() {
        for m in [1u64, 2, 3, 4, 6, 8, 12, 15] {
            let all: Vec<i64> = vec![1; m as usize];
            let s = CyclotomicValue::from_powers(m, &all);
            assert_eq!(s.is_zero(), m > 1, "m = {m}");
        }
    }

    #[test]
    fn arithmetic() {
        let m = 12;
        let z = CyclotomicValue::root_of_unity(m, 1);
        let mut p = CyclotomicValue::from_integer(m, 1);
        for _ in 0..12 {
            p = &p * &z;
        }
        assert_eq!(p.as_integer(), Some(1));
        assert_eq!((&z * &z.conj()).as_integer(), Some(1));
        // z^3 is i: i^2 = -1
        let i = CyclotomicValue::root_of_unity(m, 3);
        assert_eq!((&i * &i).as_integer(), Some(-1));
        let w = CyclotomicValue::root_of_unity(3, 1);
        // 1 + w + w^2 = 0 so |w|^2 = 1 and w + conj(w) = -1
        assert_eq!((&w + &w.conj()).as_integer(), Some(-1));
        assert_eq!(w.norm_squared().as_integer(), Some(1));
        assert_eq!(format!("{}", &w - &CyclotomicValue::from_integer(3, 2)), "-2+z");
        assert_eq!(format!("{}", CyclotomicValue::zero(5)), "0");
    }

    #[test]
    fn dense_round_trip() {
        let v = CyclotomicValue::from_coefficients(12, vec![2, 0, -1, 3]).unwrap();
        let s = v.to_dense_string();
        assert_eq!(s, "2+0*z^1+-1*z^2+3*z^3");
        assert_eq!(CyclotomicValue::parse_dense(&s, 12).unwrap(), v);
        assert!(CyclotomicValue::parse_dense("1+2*z^2", 12).is_err());
    }

    #[test]
    fn reduction_mod_q() {
        // 37 ≡ 1 mod 12; 2 is a primitive root so 2^3 has order 12
        let zeta = 8;
        let z = CyclotomicValue::root_of_unity(12, 5);
        let expected = (0..5).fold(1u64, |a, _| a * zeta % 37);
        assert_eq!(z.reduce_mod(37, zeta), expected);
    }
}
