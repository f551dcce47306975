//! Arithmetic and linear algebra over a prime field `F_q` with `q < 2^32`.

use crate::arith::{is_prime, prime_divisors};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    q: u64,
}

impl Fp {
    pub fn new(q: u64) -> Self {
        debug_assert!(is_prime(q) && q < (1 << 32));
        Fp { q }
    }

    pub fn modulus(self) -> u64 {
        self.q
    }

    pub fn reduce(self, x: i64) -> u64 {
        x.rem_euclid(self.q as i64) as u64
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.q - b) % self.q
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.q
    }

    pub fn neg(self, a: u64) -> u64 {
        (self.q - a) % self.q
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.q;
        a %= self.q;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Inverse of a nonzero element.
    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.q));
        self.pow(a, self.q - 2)
    }

    /// Least generator of the multiplicative group.
    pub fn primitive_root(self) -> u64 {
        let ps = prime_divisors(self.q - 1);
        (1..self.q)
            .find(|&g| ps.iter().all(|&p| self.pow(g, (self.q - 1) / p) != 1))
            .expect("prime fields have primitive roots")
    }
}

/// Least prime `q` with `q ≡ 1 (mod m)` and `q > min`.
pub fn least_prime_congruent_one(m: u64, min: u64) -> u64 {
    let mut q = min + 1;
    while q % m != 1 % m {
        q += 1;
    }
    while !is_prime(q) {
        q += m;
    }
    q
}

pub type Matrix = Vec<Vec<u64>>;

/// Row-reduce in place, drop zero rows, and return the pivot columns.
pub fn rref(f: Fp, rows: &mut Matrix) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let factor = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : A x = 0}`.
pub fn nullspace(f: Fp, a: &Matrix, ncols: usize) -> Matrix {
    let mut rows = a.clone();
    let pivots = rref(f, &mut rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0; ncols];
            v[fc] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = f.neg(row[fc]);
            }
            v
        })
        .collect()
}

/// Characteristic polynomial `det(xI - A)`, coefficients from degree 0 up,
/// via reduction to upper Hessenberg form.
pub fn charpoly(f: Fp, a: &Matrix) -> Vec<u64> {
    let n = a.len();
    let mut h = a.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let inv = f.inv(h[j + 1][j]);
        for k in j + 2..n {
            let u = f.mul(h[k][j], inv);
            if u == 0 {
                continue;
            }
            for c in 0..n {
                let t = f.mul(u, h[j + 1][c]);
                h[k][c] = f.sub(h[k][c], t);
            }
            for row in h.iter_mut() {
                let t = f.mul(u, row[k]);
                row[j + 1] = f.add(row[j + 1], t);
            }
        }
    }
    let mut p: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        // (x - h[m][m]) p_m
        let mut next = vec![0; m + 2];
        for (d, &c) in p[m].iter().enumerate() {
            next[d + 1] = f.add(next[d + 1], c);
            next[d] = f.sub(next[d], f.mul(h[m][m], c));
        }
        let mut prod = 1;
        for i in (0..m).rev() {
            prod = f.mul(prod, h[i + 1][i]);
            let coef = f.mul(h[i][m], prod);
            if coef != 0 {
                for (d, &c) in p[i].iter().enumerate() {
                    next[d] = f.sub(next[d], f.mul(coef, c));
                }
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

pub fn poly_eval(f: Fp, poly: &[u64], x: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Distinct roots in `F_q`, ascending, with multiplicities.
pub fn roots(f: Fp, poly: &[u64]) -> Vec<(u64, usize)> {
    let mut out = Vec::new();
    for x in 0..f.modulus() {
        if poly_eval(f, poly, x) != 0 {
            continue;
        }
        let mut mult = 0;
        let mut cur = poly.to_vec();
        loop {
            let (quot, rem) = divide_linear(f, &cur, x);
            if rem != 0 {
                break;
            }
            mult += 1;
            cur = quot;
        }
        out.push((x, mult));
    }
    out
}

/// Synthetic division by `(t - x)`.
fn divide_linear(f: Fp, poly: &[u64], x: u64) -> (Vec<u64>, u64) {
    if poly.len() <= 1 {
        return (Vec::new(), poly.first().copied().unwrap_or(0));
    }
    let n = poly.len() - 1;
    let mut quot = vec![0; n];
    let mut carry = 0;
    for d in (0..=n).rev() {
        let v = f.add(poly[d], f.mul(carry, x));
        if d == 0 {
            return (quot, v);
        }
        quot[d - 1] = v;
        carry = v;
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det(f: Fp, mut m: Matrix) -> u64 {
        let n = m.len();
        let mut d = 1;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| m[i][c] != 0) else {
                return 0;
            };
            if p != c {
                m.swap(p, c);
                d = f.neg(d);
            }
            d = f.mul(d, m[c][c]);
            let inv = f.inv(m[c][c]);
            for i in c + 1..n {
                let u = f.mul(m[i][c], inv);
                for k in c..n {
                    let t = f.mul(u, m[c][k]);
                    m[i][k] = f.sub(m[i][k], t);
                }
            }
        }
        d
    }

    #[test]
    fn charpoly_matches_determinant() {
        let f = Fp::new(101);
        let mut seed = 7u64;
        for n in 1..7 {
            let a: Matrix = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                            if (seed >> 60) < 5 { 0 } else { (seed >> 33) % 101 }
                        })
                        .collect()
                })
                .collect();
            let p = charpoly(f, &a);
            assert_eq!(p.len(), n + 1);
            for x in [0, 1, 5, 77] {
                let xi: Matrix = (0..n)
                    .map(|i| (0..n).map(|j| f.sub(if i == j { x } else { 0 }, a[i][j])).collect())
                    .collect();
                assert_eq!(poly_eval(f, &p, x), det(f, xi));
            }
        }
    }

    #[test]
    fn roots_and_nullspace() {
        let f = Fp::new(13);
        // (t-2)^2 (t-5)
        let p = vec![f.reduce(-20), 24 % 13, f.reduce(-9), 1];
        assert_eq!(roots(f, &p), vec![(2, 2), (5, 1)]);
        let a = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = nullspace(f, &a, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let s: u64 = v.iter().zip(&a[0]).map(|(x, y)| x * y).sum();
            assert_eq!(s % 13, 0);
        }
    }

    #[test]
    fn primes_and_roots_of_unity() {
        assert_eq!(least_prime_congruent_one(12, 19), 37);
        assert_eq!(least_prime_congruent_one(1, 2), 3);
        let f = Fp::new(37);
        let g = f.primitive_root();
        assert_eq!(g, 2);
        assert_eq!(f.pow(g, 36), 1);
    }
}
