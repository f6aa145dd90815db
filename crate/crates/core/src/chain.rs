//! Deterministic Schreier–Sims stabilizer chains.
//!
//! Base points are chosen as the smallest point moved by the generator that
//! forces a new level, so chains (and everything derived from them) are
//! reproducible. A forced base prefix supports point-stabilizer extraction.

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// One level of the chain: a base point, the strong generators whose first
/// moved base point is this one, and the Schreier tree of the fundamental
/// orbit under all generators stored at this level or deeper.
#[derive(Debug)]
pub(crate) struct Level {
    pub base: usize,
    pub gens: Vec<Permutation>,
    pub orbit: Vec<usize>,
    /// `tree[p] = (previous point, generator id)` along the orbit BFS;
    /// generator ids index `Chain::gen_at`'s flattened view for this level.
    tree: Vec<Option<(usize, usize)>>,
    in_orbit: Vec<bool>,
}

#[derive(Debug)]
pub(crate) struct Chain {
    degree: usize,
    pub levels: Vec<Level>,
}

impl Chain {
    /// Builds a chain for the group generated by `gens`, optionally forcing
    /// the first base points (used for stabilizer extraction).
    pub fn build(degree: usize, gens: &[Permutation], forced_prefix: &[usize]) -> Result<Chain> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        for &b in forced_prefix {
            if b >= degree {
                return Err(Error::PointOutOfRange { point: b, degree });
            }
        }
        let mut chain = Chain {
            degree,
            levels: Vec::new(),
        };
        for &b in forced_prefix {
            chain.push_level(b);
        }
        for g in gens {
            if !g.is_identity() {
                chain.place_generator(g.clone());
            }
        }
        chain.complete();
        Ok(chain)
    }

    fn push_level(&mut self, base: usize) {
        self.levels.push(Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            tree: vec![None; self.degree],
            in_orbit: vec![false; self.degree],
        });
    }

    /// Stores a non-identity strong generator at the first level whose base
    /// it moves, creating a new level if it fixes every current base.
    /// Returns the level index and recomputes the affected orbits.
    fn place_generator(&mut self, g: Permutation) -> usize {
        debug_assert!(!g.is_identity());
        let j = self
            .levels
            .iter()
            .position(|lv| g.image(lv.base) != lv.base)
            .unwrap_or_else(|| {
                let b = g.smallest_moved_point().expect("non-identity");
                self.push_level(b);
                self.levels.len() - 1
            });
        self.levels[j].gens.push(g);
        for i in 0..=j {
            self.recompute_orbit(i);
        }
        j
    }

    /// Generators acting at level `i`: those stored at level `i` or deeper
    /// (they fix every base point above `i`). Deterministic order.
    fn gens_at(&self, i: usize) -> Vec<&Permutation> {
        self.levels[i..]
            .iter()
            .flat_map(|lv| lv.gens.iter())
            .collect()
    }

    fn recompute_orbit(&mut self, i: usize) {
        let gens: Vec<Permutation> = self.gens_at(i).into_iter().cloned().collect();
        let base = self.levels[i].base;
        let lv = &mut self.levels[i];
        lv.orbit.clear();
        lv.tree.iter_mut().for_each(|t| *t = None);
        lv.in_orbit.iter_mut().for_each(|b| *b = false);
        lv.orbit.push(base);
        lv.in_orbit[base] = true;
        let mut head = 0;
        while head < lv.orbit.len() {
            let p = lv.orbit[head];
            head += 1;
            for (gi, g) in gens.iter().enumerate() {
                let q = g.image(p);
                if !lv.in_orbit[q] {
                    lv.in_orbit[q] = true;
                    lv.tree[q] = Some((p, gi));
                    lv.orbit.push(q);
                }
            }
        }
    }

    /// Coset representative mapping the level's base to `p`.
    pub fn representative(&self, i: usize, p: usize) -> Option<Permutation> {
        let lv = &self.levels[i];
        if !lv.in_orbit[p] {
            return None;
        }
        let gens = self.gens_at(i);
        let mut path = Vec::new();
        let mut cur = p;
        while cur != lv.base {
            let (prev, gi) = lv.tree[cur].expect("orbit point has tree entry");
            path.push(gi);
            cur = prev;
        }
        let mut rep = Permutation::identity(self.degree);
        for &gi in path.iter().rev() {
            rep = rep.prod(gens[gi]);
        }
        Some(rep)
    }

    /// Divides `g` by coset representatives starting at level `from`.
    /// Returns the identity residue as `Ok(())`, or the level where sifting
    /// stopped together with the non-identity residue.
    fn sift_from(
        &self,
        from: usize,
        g: Permutation,
    ) -> std::result::Result<(), (usize, Permutation)> {
        let mut residue = g;
        for i in from..self.levels.len() {
            if residue.is_identity() {
                return Ok(());
            }
            let p = residue.image(self.levels[i].base);
            if p == self.levels[i].base {
                continue;
            }
            match self.representative(i, p) {
                Some(rep) => residue = residue.prod(&rep.inverse()),
                None => return Err((i, residue)),
            }
        }
        if residue.is_identity() {
            Ok(())
        } else {
            Err((self.levels.len(), residue))
        }
    }

    /// Verifies every Schreier generator level by level, inserting residues
    /// as new strong generators until the chain is complete.
    fn complete(&mut self) {
        if self.levels.is_empty() {
            return;
        }
        let mut i = self.levels.len() - 1;
        loop {
            match self.violating_residue(i) {
                Some(residue) => {
                    let j = self.place_generator(residue);
                    debug_assert!(j > i || self.levels.len() - 1 == j);
                    i = j;
                }
                None => {
                    if i == 0 {
                        return;
                    }
                    i -= 1;
                }
            }
        }
    }

    /// Full transversal of a level, built incrementally along the orbit's
    /// discovery order (one product per point, no tree walks).
    fn transversal(&self, i: usize) -> Vec<Option<Permutation>> {
        let gens = self.gens_at(i);
        let lv = &self.levels[i];
        let mut reps: Vec<Option<Permutation>> = vec![None; self.degree];
        reps[lv.base] = Some(Permutation::identity(self.degree));
        for &p in &lv.orbit {
            if reps[p].is_some() {
                continue;
            }
            let (prev, gi) = lv.tree[p].expect("non-base orbit point has tree entry");
            let rep = reps[prev]
                .as_ref()
                .expect("discovery order visits parents first")
                .prod(gens[gi]);
            reps[p] = Some(rep);
        }
        reps
    }

    /// First Schreier generator of level `i` that does not sift to the
    /// identity through the deeper levels, if any.
    fn violating_residue(&self, i: usize) -> Option<Permutation> {
        let gens = self.gens_at(i);
        let reps = self.transversal(i);
        for idx in 0..self.levels[i].orbit.len() {
            let p = self.levels[i].orbit[idx];
            let up = reps[p].as_ref().expect("orbit point has representative");
            for g in &gens {
                let q = g.image(p);
                let uq = reps[q].as_ref().expect("orbit is closed under generators");
                let schreier = up.prod(g).prod(&uq.inverse());
                if let Err((_, residue)) = self.sift_from(i + 1, schreier) {
                    return Some(residue);
                }
            }
        }
        None
    }

    pub fn order(&self) -> Result<u128> {
        let mut order: u128 = 1;
        for lv in &self.levels {
            order = order
                .checked_mul(lv.orbit.len() as u128)
                .ok_or(Error::Capacity {
                    what: "group order",
                    actual: u128::MAX,
                    cap: u128::MAX,
                })?;
        }
        Ok(order)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.sift_from(0, g.clone()).is_ok()
    }

    /// Strong generators fixing the first `k` base points, i.e. generators of
    /// the pointwise stabilizer of those points. Requires the chain to have
    /// been built with that prefix forced.
    pub fn stabilizer_gens(&self, k: usize) -> Vec<Permutation> {
        self.levels[k.min(self.levels.len())..]
            .iter()
            .flat_map(|lv| lv.gens.iter().cloned())
            .collect()
    }

    /// All group elements in deterministic order (outer loop over the top
    /// fundamental orbit). Caller enforces any cardinality cap.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut current = vec![Permutation::identity(self.degree)];
        for i in (0..self.levels.len()).rev() {
            let mut next = Vec::with_capacity(current.len() * self.levels[i].orbit.len());
            for idx in 0..self.levels[i].orbit.len() {
                let p = self.levels[i].orbit[idx];
                let u = self.representative(i, p).expect("orbit representative");
                for h in &current {
                    next.push(h.prod(&u));
                }
            }
            current = next;
        }
        current
    }

    /// Orbit partition of the level-`i` subgroup: point to class representative
    /// (smallest point in the class).
    pub fn level_orbit_partition(&self, i: usize) -> Vec<usize> {
        let gens = self.gens_at(i);
        orbit_partition(self.degree, &gens)
    }
}

/// Point-to-representative orbit partition under a generator list.
pub(crate) fn orbit_partition(degree: usize, gens: &[&Permutation]) -> Vec<usize> {
    let mut rep = vec![usize::MAX; degree];
    for start in 0..degree {
        if rep[start] != usize::MAX {
            continue;
        }
        let mut queue = vec![start];
        rep[start] = start;
        let mut head = 0;
        while head < queue.len() {
            let p = queue[head];
            head += 1;
            for g in gens {
                let q = g.image(p);
                if rep[q] == usize::MAX {
                    rep[q] = start;
                    queue.push(q);
                }
            }
        }
    }
    rep
}
