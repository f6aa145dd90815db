//! Permutations of `{0, …, n-1}` stored as image tables.
//!
//! The action is on the right throughout: `p * q` means apply `p` first,
//! then `q`, matching the `ω^{pq} = (ω^p)^q` convention.

use std::fmt;

use num::integer::lcm;

use crate::error::{Error, Result};

/// A bijection of `{0, …, n-1}` where `n` is the degree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity on `degree` points.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from an image table, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || std::mem::replace(&mut seen[img], true) {
                return Err(Error::NotAPermutation(n));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    ///
    /// Cycles need not cover all points; omitted points are fixed. Repeated
    /// points (within or across cycles) are rejected.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p >= degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if std::mem::replace(&mut moved[p], true) {
                    return Err(Error::Parse(format!("point {p} repeated in cycles")));
                }
            }
            for i in 0..cycle.len() {
                images[cycle[i]] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a point, `ω^g`.
    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// `self` followed by `other` (right action: apply `self` first).
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.prod(other))
    }

    /// Unchecked composition for internal use where degrees are known equal.
    pub(crate) fn prod(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// `g^x = x⁻¹ g x`.
    pub fn conjugate_by(&self, x: &Permutation) -> Permutation {
        x.inverse().prod(self).prod(x)
    }

    /// Order of the permutation: lcm of its cycle lengths.
    pub fn order(&self) -> u128 {
        let mut result: u128 = 1;
        for cycle in self.cycles() {
            result = lcm(result, cycle.len() as u128);
        }
        result
    }

    /// Points fixed by the permutation, ascending.
    pub fn fixed_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &img)| i == img)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn num_fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &img)| i == img)
            .count()
    }

    /// Smallest point moved by the permutation, if any.
    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &img)| i != img)
            .map(|(i, _)| i)
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by
    /// smallest point. This is the canonical cycle decomposition used by
    /// `Display`.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Parses cycle notation like `(0 1 2)(3 4)`; `()` is the identity.
    ///
    /// The degree must be given because cycle notation does not determine it.
    pub fn parse_cycles(degree: usize, s: &str) -> Result<Permutation> {
        let s = s.trim();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s;
        if s.is_empty() {
            return Err(Error::Parse("empty cycle expression".into()));
        }
        while !rest.is_empty() {
            let Some(open) = rest.find('(') else {
                return Err(Error::Parse(format!("expected '(' in {rest:?}")));
            };
            if !rest[..open].trim().is_empty() {
                return Err(Error::Parse(format!("unexpected text {:?}", &rest[..open])));
            }
            let Some(close) = rest[open..].find(')') else {
                return Err(Error::Parse(format!("unclosed cycle in {rest:?}")));
            };
            let inner = &rest[open + 1..open + close];
            let mut cycle = Vec::new();
            for tok in inner.split([' ', ',']).filter(|t| !t.is_empty()) {
                let p: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad point {tok:?}")))?;
                cycle.push(p);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = &rest[open + close + 1..];
        }
        Permutation::from_cycles(degree, &cycles)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} deg {}", self, self.degree())
    }
}
