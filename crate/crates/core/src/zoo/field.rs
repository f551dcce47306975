use crate::arith::is_prime_power;
use crate::error::{Error, Result};

/// `GF(q)` with elements `0..q`, where `c0 + c1 p + ...` stands for
/// `c0 + c1 t + ...` modulo a fixed monic irreducible of degree `k`.
#[derive(Debug, Clone)]
pub struct GaloisField {
    p: u64,
    k: u32,
    q: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
}

fn digits(x: usize, p: u64, k: u32) -> Vec<u64> {
    let mut x = x as u64;
    (0..k)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u64], p: u64) -> usize {
    d.iter().rev().fold(0u64, |acc, &c| acc * p + c) as usize
}

/// Remainder of `a` modulo the monic `m`; coefficients low degree first.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - dm;
            for (i, &c) in m[..dm].iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - lead * c % p) % p;
            }
        }
    }
    r
}

fn is_irreducible(m: &[u64], p: u64) -> bool {
    let k = m.len() - 1;
    for d in 1..=k / 2 {
        for low in 0..p.pow(d as u32) as usize {
            let mut f = digits(low, p, d as u32);
            f.push(1);
            if poly_rem(m, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl GaloisField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, k) = is_prime_power(q)
            .ok_or_else(|| Error::InvalidParameters(format!("{q} is not a prime power")))?;
        let qs = q as usize;
        let modulus = (0..qs)
            .map(|low| {
                let mut m = digits(low, p, k);
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p))
            .expect("an irreducible polynomial of every degree exists");
        let mut add = vec![0u32; qs * qs];
        let mut mul = vec![0u32; qs * qs];
        for x in 0..qs {
            let dx = digits(x, p, k);
            for y in 0..qs {
                let dy = digits(y, p, k);
                let s: Vec<u64> = dx.iter().zip(&dy).map(|(a, b)| (a + b) % p).collect();
                add[x * qs + y] = undigits(&s, p) as u32;
                let mut prod = vec![0u64; 2 * k as usize];
                for (i, a) in dx.iter().enumerate() {
                    for (j, b) in dy.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + a * b) % p;
                    }
                }
                let mut r = poly_rem(&prod, &modulus, p);
                r.resize(k as usize, 0);
                mul[x * qs + y] = undigits(&r, p) as u32;
            }
        }
        Ok(GaloisField { p, k, q: qs, add, mul })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// `1, t, ..., t^(k-1)`: a basis over the prime field.
    pub fn additive_basis(&self) -> Vec<usize> {
        (0..self.k).map(|i| self.p.pow(i) as usize).collect()
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.q + y] as usize
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.q + y] as usize
    }
}
