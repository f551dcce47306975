use std::sync::Arc;

use num_rational::Ratio;

use super::cyclotomic::CyclotomicValue;
use super::modp::{charpoly, least_prime_congruent_one, nullspace, roots, rref, Fp, Matrix};
use crate::arith::isqrt;
use crate::error::{Error, Result};
use crate::perm::PermGroup;
use crate::structure::{check_normal, conjugacy_classes, derived_subgroup, Classes, ConjClass};

/// Irreducible characters of a group, exactly.
///
/// Rows are characters, columns are conjugacy classes in the order of
/// [`conjugacy_classes`]. The trivial character is row 0 and rows are sorted
/// by degree. Every value has conductor equal to the group exponent.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    classes: Arc<Classes>,
    group_order: u64,
    conductor: u64,
    prime: u64,
    values: Vec<Vec<CyclotomicValue>>,
    degrees: Vec<u64>,
    linear_count: usize,
    inverse_class: Vec<usize>,
}

impl CharacterTable {
    pub fn classes(&self) -> &Classes {
        &self.classes
    }

    pub fn class_list(&self) -> &[ConjClass] {
        self.classes.as_slice()
    }

    pub fn class_sizes(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.size).collect()
    }

    /// Number of irreducible characters (equal to the number of classes).
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// The prime used for the modular eigenvector computation.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn linear_count(&self) -> usize {
        self.linear_count
    }

    pub fn row(&self, chi: usize) -> &[CyclotomicValue] {
        &self.values[chi]
    }

    /// Indices of the characters of degree > 1.
    pub fn nonlinear(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.degrees[i] > 1)
    }

    fn check_indices(&self, chi: usize, class: usize) -> Result<()> {
        if chi >= self.len() {
            return Err(Error::IndexOutOfRange(format!("character {chi} of {}", self.len())));
        }
        if class >= self.len() {
            return Err(Error::IndexOutOfRange(format!("class {class} of {}", self.len())));
        }
        Ok(())
    }

    pub fn value(&self, chi: usize, class: usize) -> Result<&CyclotomicValue> {
        self.check_indices(chi, class)?;
        Ok(&self.values[chi][class])
    }

    /// Exact test `chi(g) = 0` for `g` in the given class.
    pub fn is_zero_at(&self, chi: usize, class: usize) -> Result<bool> {
        Ok(self.value(chi, class)?.is_zero())
    }

    /// True iff every nonlinear character vanishes on the class.
    pub fn nonlinear_vanish_at(&self, class: usize) -> Result<bool> {
        self.check_indices(0, class)?;
        Ok(self.nonlinear().all(|chi| self.values[chi][class].is_zero()))
    }

    /// `sum_chi chi(g_i) conj(chi(g_j))`, which is `|C_G(g_i)|` for `i = j`
    /// and 0 otherwise.
    pub fn orthogonality_check(&self, i: usize, j: usize) -> Result<i64> {
        self.check_indices(0, i)?;
        self.check_indices(0, j)?;
        let mut acc = CyclotomicValue::zero(self.conductor);
        for row in &self.values {
            acc = &acc + &(&row[i] * &row[j].conj());
        }
        acc.as_integer()
            .ok_or_else(|| Error::internal(format!("column inner product {acc} is not rational")))
    }

    /// `<chi_N, chi_N>_N = (1/|N|) sum_{n in N} |chi(n)|^2`.
    pub fn restriction_norm(&self, g: &PermGroup, n: &PermGroup, chi: usize) -> Result<Ratio<i64>> {
        if g.order() != self.group_order {
            return Err(Error::precondition("character table belongs to a different group"));
        }
        check_normal(g, n)?;
        self.check_indices(chi, 0)?;
        let mut acc = CyclotomicValue::zero(self.conductor);
        for (k, c) in self.classes.iter().enumerate() {
            if n.contains(&c.representative) {
                let term = self.values[chi][k].norm_squared();
                acc = &acc + &(&term * &CyclotomicValue::from_integer(self.conductor, c.size as i64));
            }
        }
        let total = acc
            .as_integer()
            .ok_or_else(|| Error::internal(format!("restricted norm {acc} is not rational")))?;
        Ok(Ratio::new(total, n.order() as i64))
    }

    /// Text export: a comment line with the conductor, a row of class sizes,
    /// then one row per character of dense values.
    pub fn export(&self) -> String {
        let mut out = format!("# conductor {}\n", self.conductor);
        let sizes: Vec<String> = self.class_sizes().iter().map(|s| s.to_string()).collect();
        out.push_str(&sizes.join(","));
        out.push('\n');
        for row in &self.values {
            let cells: Vec<String> = row.iter().map(|v| v.to_dense_string()).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Exact consistency checks; any failure is an internal error.
    fn verify(&self, commutator_index: u64) -> Result<()> {
        let n = self.group_order;
        let sum_sq: u64 = self.degrees.iter().map(|d| d * d).sum();
        if sum_sq != n {
            return Err(Error::internal(format!("sum of squared degrees {sum_sq} != {n}")));
        }
        if self.linear_count as u64 != commutator_index {
            return Err(Error::internal(format!(
                "{} linear characters but |G:G'| = {commutator_index}",
                self.linear_count
            )));
        }
        let r = self.len();
        let conj: Vec<Vec<CyclotomicValue>> = self
            .values
            .iter()
            .map(|row| row.iter().map(|v| v.conj()).collect())
            .collect();
        let sizes: Vec<CyclotomicValue> = self
            .classes
            .iter()
            .map(|c| CyclotomicValue::from_integer(self.conductor, c.size as i64))
            .collect();
        for a in 0..r {
            let weighted: Vec<CyclotomicValue> =
                (0..r).map(|k| &self.values[a][k] * &sizes[k]).collect();
            for b in a..r {
                let mut acc = CyclotomicValue::zero(self.conductor);
                for k in 0..r {
                    acc = &acc + &(&weighted[k] * &conj[b][k]);
                }
                let expected = if a == b { n as i64 } else { 0 };
                if acc.as_integer() != Some(expected) {
                    return Err(Error::internal(format!(
                        "row orthogonality fails for characters {a}, {b}: {acc}"
                    )));
                }
            }
        }
        for i in 0..r {
            for j in i..r {
                let mut acc = CyclotomicValue::zero(self.conductor);
                for (row, crow) in self.values.iter().zip(&conj) {
                    acc = &acc + &(&row[i] * &crow[j]);
                }
                let expected = if i == j {
                    (n / self.classes[i].size) as i64
                } else {
                    0
                };
                if acc.as_integer() != Some(expected) {
                    return Err(Error::internal(format!(
                        "column orthogonality fails for classes {i}, {j}: {acc}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn inverse_class(&self, class: usize) -> usize {
        self.inverse_class[class]
    }
}

/// A parsed table export.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExportedTable {
    pub conductor: u64,
    pub class_sizes: Vec<u64>,
    pub rows: Vec<Vec<CyclotomicValue>>,
}

pub fn parse_export(text: &str) -> Result<ExportedTable> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let fmt_err = |line: usize, message: String| Error::Format {
        line: line + 1,
        message,
    };
    let (ln, head) = lines.next().ok_or_else(|| fmt_err(0, "empty table".into()))?;
    let conductor = head
        .trim()
        .strip_prefix("# conductor ")
        .and_then(|s| s.trim().parse::<u64>().ok())
        .ok_or_else(|| fmt_err(ln, "expected '# conductor <m>'".into()))?;
    let (ln, sizes) = lines.next().ok_or_else(|| fmt_err(ln + 1, "missing class sizes".into()))?;
    let class_sizes = sizes
        .split(',')
        .map(|s| s.trim().parse::<u64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| fmt_err(ln, e.to_string()))?;
    let mut rows = Vec::new();
    for (ln, line) in lines {
        let row = line
            .split(',')
            .map(|cell| CyclotomicValue::parse_dense(cell, conductor))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| fmt_err(ln, e.to_string()))?;
        if row.len() != class_sizes.len() {
            return Err(fmt_err(ln, format!("{} values for {} classes", row.len(), class_sizes.len())));
        }
        rows.push(row);
    }
    Ok(ExportedTable {
        conductor,
        class_sizes,
        rows,
    })
}

/// `M[k][l]` = number of `x` in class `j` with `x^-1 z_l` in class `k`,
/// where `z_l` is the representative of class `l`.
fn class_matrix(classes: &Classes, j: usize) -> Matrix {
    let r = classes.len();
    let mut m = vec![vec![0u64; r]; r];
    for (l, cl) in classes.iter().enumerate() {
        for x in classes.members(j) {
            let y = &x.inverse() * &cl.representative;
            let k = classes.class_index(&y).expect("product stays in the group");
            m[k][l] += 1;
        }
    }
    m
}

/// Split a subspace (rows of `basis`, in reduced echelon form) into
/// eigenspaces of the column action of `m`.
fn split(f: Fp, m: &Matrix, basis: &Matrix) -> Result<Vec<Matrix>> {
    let mut rows = basis.clone();
    let pivots = rref(f, &mut rows);
    let d = rows.len();
    // coordinates of m * b_i on the pivot columns
    let r: Matrix = rows
        .iter()
        .map(|b| {
            pivots
                .iter()
                .map(|&k| {
                    m[k].iter()
                        .zip(b)
                        .fold(0, |acc, (&mk, &bl)| f.add(acc, f.mul(mk % f.modulus(), bl)))
                })
                .collect()
        })
        .collect();
    let eig = roots(f, &charpoly(f, &r));
    let total: usize = eig.iter().map(|&(_, mult)| mult).sum();
    if total != d {
        return Err(Error::internal(format!(
            "class matrix has {total} eigenvalues in F_{} on a space of dimension {d}",
            f.modulus()
        )));
    }
    if eig.len() == 1 {
        return Ok(vec![rows]);
    }
    let mut out = Vec::new();
    let mut dims = 0;
    for (lambda, _) in eig {
        // c R = lambda c
        let a: Matrix = (0..d)
            .map(|x| {
                (0..d)
                    .map(|y| {
                        let v = r[y][x];
                        if x == y { f.sub(v, lambda) } else { v }
                    })
                    .collect()
            })
            .collect();
        let coords = nullspace(f, &a, d);
        dims += coords.len();
        let mut space: Matrix = coords
            .iter()
            .map(|c| {
                let mut v = vec![0u64; basis[0].len()];
                for (ci, b) in c.iter().zip(&rows) {
                    if *ci != 0 {
                        for (vk, bk) in v.iter_mut().zip(b) {
                            *vk = f.add(*vk, f.mul(*ci, *bk));
                        }
                    }
                }
                v
            })
            .collect();
        rref(f, &mut space);
        out.push(space);
    }
    if dims != d {
        return Err(Error::internal("class matrix is not diagonalizable on a common eigenspace"));
    }
    Ok(out)
}

/// The character table by simultaneous diagonalization of the class
/// matrices over `F_q`, `q` the least prime `≡ 1 mod exp(G)` exceeding
/// `2 sqrt|G|`, followed by lifting to cyclotomic integers through the
/// eigenvalue multiplicities of each element.
pub fn character_table(g: &PermGroup) -> Result<CharacterTable> {
    let classes = conjugacy_classes(g)?;
    let n = g.order();
    let r = classes.len();
    let e = g.exponent()?;
    let q = least_prime_congruent_one(e, isqrt(4 * n));
    let f = Fp::new(q);

    let mut spaces: Vec<Matrix> = vec![(0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect()];
    for j in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let m = class_matrix(&classes, j);
        let mut next = Vec::new();
        for s in spaces {
            if s.len() == 1 {
                next.push(s);
            } else {
                next.extend(split(f, &m, &s)?);
            }
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(Error::internal("class matrices do not separate the characters"));
    }

    let inverse_class: Vec<usize> = classes
        .iter()
        .map(|c| classes.class_index(&c.representative.inverse()).unwrap())
        .collect();
    let sizes_inv: Vec<u64> = classes.iter().map(|c| f.inv(c.size % q)).collect();
    let zeta = f.pow(f.primitive_root(), (q - 1) / e);
    let power_classes: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| {
            let o = c.representative.order() as i64;
            (0..o)
                .map(|i| classes.class_index(&c.representative.pow(i)).unwrap())
                .collect()
        })
        .collect();

    let mut chars: Vec<(u64, Vec<CyclotomicValue>)> = Vec::with_capacity(r);
    for s in &spaces {
        let w = &s[0];
        if w[0] == 0 {
            return Err(Error::internal("eigenvector vanishes on the identity class"));
        }
        let norm = f.inv(w[0]);
        let w: Vec<u64> = w.iter().map(|&x| f.mul(x, norm)).collect();
        let sum = (0..r).fold(0, |acc, j| {
            f.add(acc, f.mul(f.mul(w[j], w[inverse_class[j]]), sizes_inv[j]))
        });
        if sum == 0 {
            return Err(Error::internal("degenerate degree equation"));
        }
        let d2 = f.mul(n % q, f.inv(sum));
        let degree = (1..=isqrt(n))
            .find(|&d| d * d % q == d2)
            .ok_or_else(|| Error::internal("degree is not a square root of a divisor of |G|"))?;
        let modular: Vec<u64> = (0..r)
            .map(|j| f.mul(f.mul(w[j], degree % q), sizes_inv[j]))
            .collect();
        let mut values = Vec::with_capacity(r);
        for j in 0..r {
            let o = power_classes[j].len() as u64;
            let step = e / o;
            let inv_o = f.inv(o % q);
            let mut powers = vec![0i64; e as usize];
            let mut total = 0u64;
            for k in 0..o {
                let mut acc = 0;
                for (i, &cls) in power_classes[j].iter().enumerate() {
                    let exp = (e - (i as u64 * k * step) % e) % e;
                    acc = f.add(acc, f.mul(modular[cls], f.pow(zeta, exp)));
                }
                let mult = f.mul(acc, inv_o);
                if mult > degree {
                    return Err(Error::internal("eigenvalue multiplicity exceeds the degree"));
                }
                total += mult;
                powers[(k * step) as usize] += mult as i64;
            }
            if total != degree {
                return Err(Error::internal("eigenvalue multiplicities do not sum to the degree"));
            }
            let v = CyclotomicValue::from_powers(e, &powers);
            if v.reduce_mod(q, zeta) != modular[j] {
                return Err(Error::internal("lifted value disagrees with its reduction"));
            }
            values.push(v);
        }
        chars.push((degree, values));
    }
    let one = CyclotomicValue::from_integer(e, 1);
    chars.sort_by(|(da, va), (db, vb)| {
        let ta = !va.iter().all(|v| *v == one);
        let tb = !vb.iter().all(|v| *v == one);
        (da, ta, va.iter().map(|v| v.coefficients()).collect::<Vec<_>>())
            .cmp(&(db, tb, vb.iter().map(|v| v.coefficients()).collect::<Vec<_>>()))
    });
    let degrees: Vec<u64> = chars.iter().map(|(d, _)| *d).collect();
    let linear_count = degrees.iter().filter(|&&d| d == 1).count();
    let table = CharacterTable {
        classes,
        group_order: n,
        conductor: e,
        prime: q,
        values: chars.into_iter().map(|(_, v)| v).collect(),
        degrees,
        linear_count,
        inverse_class,
    };
    let index = n / derived_subgroup(g).order();
    table.verify(index)?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(gens: &[&str], n: usize) -> PermGroup {
        PermGroup::from_cycles(n, gens).unwrap()
    }

    #[test]
    fn s3_table() {
        let s3 = grp(&["(1 2)", "(1 2 3)"], 3);
        let t = character_table(&s3).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 2]);
        assert_eq!(t.linear_count(), 2);
        let cl = t.classes().class_index(&Permutation::parse("(1 2)", 3).unwrap()).unwrap();
        assert!(t.is_zero_at(2, cl).unwrap());
        assert!(!t.is_zero_at(0, cl).unwrap());
        assert_eq!(t.orthogonality_check(cl, cl).unwrap(), 2);
        assert_eq!(t.orthogonality_check(0, 0).unwrap(), 6);
        let other = (0..3).find(|&k| k != cl && k != 0).unwrap();
        assert_eq!(t.orthogonality_check(cl, other).unwrap(), 0);
        assert!(t.is_zero_at(3, 0).is_err());
    }

    use crate::perm::Permutation;

    #[test]
    fn abelian_tables() {
        for gens in [vec!["(1 2 3 4 5 6)"], vec!["(1 2 3 4)", "(5 6)"]] {
            let g = grp(&gens, 6);
            let t = character_table(&g).unwrap();
            assert_eq!(t.len() as u64, g.order());
            assert!(t.degrees().iter().all(|&d| d == 1));
        }
    }

    #[test]
    fn d8_and_quaternion() {
        let d8 = grp(&["(1 2 3 4)", "(1 3)"], 4);
        let t = character_table(&d8).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 1, 1, 2]);
        let z = d8.generators()[0].pow(2);
        let zc = t.classes().class_index(&z).unwrap();
        for k in 0..t.len() {
            let central = k == 0 || k == zc;
            assert_eq!(t.is_zero_at(4, k).unwrap(), !central);
        }
        let centre = crate::structure::center(&d8).unwrap();
        assert_eq!(t.restriction_norm(&d8, &centre, 4).unwrap(), Ratio::from_integer(4));
        assert_eq!(t.restriction_norm(&d8, &centre, 1).unwrap(), Ratio::from_integer(1));
    }

    #[test]
    fn a4_s4_a5() {
        let a4 = grp(&["(1 2 3)", "(2 3 4)"], 4);
        let t = character_table(&a4).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 1, 3]);
        assert_eq!(t.conductor(), 6);
        let v4 = grp(&["(1 2)(3 4)", "(1 3)(2 4)"], 4);
        assert_eq!(t.restriction_norm(&a4, &v4, 3).unwrap(), Ratio::from_integer(3));
        let s4 = grp(&["(1 2 3 4)", "(1 2)"], 4);
        assert_eq!(character_table(&s4).unwrap().degrees(), &[1, 1, 2, 3, 3]);
        let a5 = grp(&["(1 2 3 4 5)", "(1 2 3)"], 5);
        let t = character_table(&a5).unwrap();
        assert_eq!(t.degrees(), &[1, 3, 3, 4, 5]);
        assert_eq!(t.conductor(), 30);
    }

    #[test]
    fn export_round_trip() {
        let a4 = grp(&["(1 2 3)", "(2 3 4)"], 4);
        let t = character_table(&a4).unwrap();
        let text = t.export();
        assert!(text.starts_with("# conductor 6\n1,"));
        let mut sizes = t.class_sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 4, 4]);
        let back = parse_export(&text).unwrap();
        assert_eq!(back.conductor, 6);
        assert_eq!(back.class_sizes, t.class_sizes());
        for (i, row) in back.rows.iter().enumerate() {
            assert_eq!(row.as_slice(), t.row(i));
        }
    }
}
