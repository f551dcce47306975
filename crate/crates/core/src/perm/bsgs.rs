//! Deterministic Schreier–Sims.
//!
//! Level `i` holds generators of the pointwise stabilizer of the first `i`
//! base points together with the orbit of base point `i` and an explicit
//! transversal (one coset representative per orbit point). New base points
//! are the first point moved by the residue that needs them.

use super::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[p]` maps the base point to `p`.
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
        }
    }
}

/// Base and strong generating set certificate.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn trivial(degree: usize) -> Self {
        StabChain {
            degree,
            levels: Vec::new(),
        }
    }

    pub fn from_generators<'a>(degree: usize, gens: impl IntoIterator<Item = &'a Permutation>) -> Self {
        let mut chain = StabChain::trivial(degree);
        for g in gens {
            chain.extend(g);
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Product of the transversal lengths.
    pub fn order(&self) -> u64 {
        self.levels
            .iter()
            .fold(1u64, |acc, l| acc.saturating_mul(l.orbit.len() as u64))
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Strip `g` through the chain starting at `start`. Returns the residue
    /// and the level where stripping stopped (`levels.len()` if it went
    /// through every level).
    fn strip(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let beta = h.image(level.base);
            match &level.transversal[beta] {
                Some(u) => h = &h * &u.inverse(),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, depth) = self.strip(g, 0);
        depth == self.levels.len() && h.is_identity()
    }

    /// Add `g` to the group. Returns true if the group grew.
    pub fn extend(&mut self, g: &Permutation) -> bool {
        assert_eq!(g.degree(), self.degree, "degree mismatch in stabilizer chain");
        if self.contains(g) {
            return false;
        }
        self.extend_from(0, g.clone());
        true
    }

    fn extend_from(&mut self, start: usize, g: Permutation) {
        let (h, depth) = self.strip(&g, start);
        if depth == self.levels.len() {
            let Some(b) = h.first_moved() else {
                return;
            };
            self.levels.push(Level::new(b, self.degree));
        }
        for l in (start..=depth).rev() {
            self.add_generator(l, h.clone());
        }
    }

    fn add_generator(&mut self, l: usize, h: Permutation) {
        let mut schreier = Vec::new();
        {
            let level = &mut self.levels[l];
            level.gens.push(h);
            let new_gen = level.gens.len() - 1;
            let old_len = level.orbit.len();
            let mut i = 0;
            while i < level.orbit.len() {
                let p = level.orbit[i];
                let range = if i < old_len {
                    new_gen..new_gen + 1
                } else {
                    0..level.gens.len()
                };
                for gi in range {
                    let s = &level.gens[gi];
                    let q = s.image(p);
                    let up_s = level.transversal[p].as_ref().expect("orbit point without transversal") * s;
                    match &level.transversal[q] {
                        None => {
                            level.transversal[q] = Some(up_s);
                            level.orbit.push(q);
                        }
                        Some(uq) => {
                            let sg = &up_s * &uq.inverse();
                            if !sg.is_identity() {
                                schreier.push(sg);
                            }
                        }
                    }
                }
                i += 1;
            }
        }
        for sg in schreier {
            self.extend_from(l + 1, sg);
        }
    }

    /// Every element exactly once, in no particular order.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        // g = u_{k-1} ... u_1 u_0
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for x in &out {
                for &p in &level.orbit {
                    next.push(x * level.transversal[p].as_ref().unwrap());
                }
            }
            out = next;
        }
        out
    }

    /// Transversal element sending the `i`-th base point to `point`.
    pub fn transversal(&self, level: usize, point: usize) -> Option<&Permutation> {
        self.levels.get(level)?.transversal[point].as_ref()
    }
}
