//! Permutation groups on a few dozen points via a Schreier–Sims stabilizer
//! chain.

use crate::error::{Error, Result};

/// A permutation of `0..degree`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<u8>);

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm((0..degree as u8).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Apply `self`, then `next`.
    pub fn then(&self, next: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| next.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn fixes(&self, x: usize) -> bool {
        self.apply(x) == x
    }
}

struct Level {
    base: usize,
    gens: Vec<Perm>,
    /// `transversal[p]` maps the base point to `p`.
    transversal: Vec<Option<Perm>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Level {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Perm::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            transversal,
            orbit: vec![base],
        }
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.transversal.len();
        self.transversal = vec![None; degree];
        self.transversal[self.base] = Some(Perm::identity(degree));
        self.orbit = vec![self.base];
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            let u = self.transversal[p].clone().expect("orbit point has transversal");
            for s in &self.gens {
                let q = s.apply(p);
                if self.transversal[q].is_none() {
                    self.transversal[q] = Some(u.then(s));
                    self.orbit.push(q);
                }
            }
            i += 1;
        }
    }
}

/// Base and strong generating set for the group generated by some permutations.
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(degree: usize, generators: &[Perm]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        for g in generators {
            assert_eq!(g.degree(), degree);
            let (residue, level) = chain.sift(g, 0);
            if !residue.is_identity() {
                chain.add_strong_generator(residue, level);
            }
        }
        chain.complete();
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Group order as the product of basic orbit lengths.
    pub fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.sift(g, 0).0.is_identity()
    }

    /// Orbit of `x` under the whole group.
    pub fn orbit_of(&self, x: usize) -> Vec<usize> {
        let gens: Vec<&Perm> = self.levels.first().map(|l| l.gens.iter().collect()).unwrap_or_default();
        let mut seen = vec![false; self.degree];
        seen[x] = true;
        let mut orbit = vec![x];
        let mut i = 0;
        while i < orbit.len() {
            let p = orbit[i];
            for g in &gens {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    /// Every group element, provided the order does not exceed `cap`.
    pub fn elements(&self, cap: u64) -> Result<Vec<Perm>> {
        let order = self.order();
        if order > cap {
            return Err(Error::Capacity { order, cap });
        }
        let mut out = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for x in &out {
                for &p in &level.orbit {
                    next.push(x.then(level.transversal[p].as_ref().unwrap()));
                }
            }
            out = next;
        }
        Ok(out)
    }

    fn sift(&self, g: &Perm, start: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let image = h.apply(level.base);
            match &level.transversal[image] {
                Some(u) => h = h.then(&u.inverse()),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    /// Adds `h`, which fixes the base points of levels `< level`.
    fn add_strong_generator(&mut self, h: Perm, level: usize) {
        if level == self.levels.len() {
            let moved = (0..self.degree).find(|&x| !h.fixes(x)).expect("non-identity");
            self.levels.push(Level::new(moved, self.degree));
        }
        for l in &mut self.levels[..=level] {
            l.gens.push(h.clone());
            l.rebuild_orbit();
        }
    }

    fn complete(&mut self) {
        'restart: loop {
            for i in (0..self.levels.len()).rev() {
                let level = &self.levels[i];
                let mut pending = None;
                'search: for &p in &level.orbit {
                    let u = level.transversal[p].as_ref().unwrap();
                    for s in &level.gens {
                        let q = s.apply(p);
                        let uq = level.transversal[q].as_ref().unwrap();
                        let schreier = u.then(s).then(&uq.inverse());
                        let (residue, at) = self.sift(&schreier, i + 1);
                        if !residue.is_identity() {
                            pending = Some((residue, at));
                            break 'search;
                        }
                    }
                }
                if let Some((residue, at)) = pending {
                    self.add_strong_generator(residue, at);
                    continue 'restart;
                }
            }
            return;
        }
    }
}
