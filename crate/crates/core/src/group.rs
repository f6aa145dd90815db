//! Permutation groups with stabilizer-chain queries.
//!
//! A group is a degree plus a generating set; the chain is built lazily on
//! first use and the group is immutable afterwards, so all queries are safe
//! to run concurrently.

use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Elements are enumerated (for conjugacy classes, exponent, fixity) only up
/// to this group order.
pub const ELEMENT_ENUMERATION_CAP: u128 = 1_000_000;

#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<Chain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain: OnceLock::new(),
        }
    }
}

impl PermGroup {
    /// Builds a group from generators of the given degree. An empty list is
    /// normalized to the trivial group.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Invalid("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let generators = if generators.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            generators
        };
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Result<Self> {
        PermGroup::new(degree, Vec::new())
    }

    /// The symmetric group in its natural action.
    pub fn symmetric(degree: usize) -> Result<Self> {
        if degree <= 1 {
            return PermGroup::trivial(degree.max(1));
        }
        let transposition = Permutation::from_cycles(degree, &[vec![0, 1]])?;
        let cycle = Permutation::from_cycles(degree, &[(0..degree).collect()])?;
        PermGroup::new(degree, vec![transposition, cycle])
    }

    /// The cyclic group generated by the full cycle `(0 1 … n-1)`.
    pub fn cyclic(degree: usize) -> Result<Self> {
        if degree <= 1 {
            return PermGroup::trivial(degree.max(1));
        }
        let cycle = Permutation::from_cycles(degree, &[(0..degree).collect()])?;
        PermGroup::new(degree, vec![cycle])
    }

    /// The dihedral group of order `2n` acting on `n` points.
    pub fn dihedral(degree: usize) -> Result<Self> {
        if degree < 3 {
            return Err(Error::Invalid("dihedral action needs degree >= 3".into()));
        }
        let rotation = Permutation::from_cycles(degree, &[(0..degree).collect()])?;
        let reflection =
            Permutation::from_images((0..degree).map(|i| (degree - i) % degree).collect())?;
        PermGroup::new(degree, vec![rotation, reflection])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub(crate) fn chain(&self) -> &Chain {
        self.chain
            .get_or_init(|| Chain::build(self.degree, &self.generators, &[]).expect("validated"))
    }

    /// Group order via the stabilizer chain.
    pub fn order(&self) -> u128 {
        self.chain().order().expect("order within u128")
    }

    /// Membership test by sifting through the chain.
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, p.degree()));
        }
        Ok(self.chain().contains(p))
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermGroup) -> Result<bool> {
        for g in other.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_group_as(&self, other: &PermGroup) -> Result<bool> {
        Ok(self.order() == other.order() && self.contains_group(other)?)
    }

    /// The orbit of a point, ascending.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let mut orbit = self.orbit_unsorted(point);
        orbit.sort_unstable();
        Ok(orbit)
    }

    fn orbit_unsorted(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut queue = vec![point];
        seen[point] = true;
        let mut head = 0;
        while head < queue.len() {
            let p = queue[head];
            head += 1;
            for g in &self.generators {
                let q = g.image(p);
                if !seen[q] {
                    seen[q] = true;
                    queue.push(q);
                }
            }
        }
        queue
    }

    /// All orbits, each ascending, ordered by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.degree];
        let mut orbits = Vec::new();
        for p in 0..self.degree {
            if assigned[p] {
                continue;
            }
            let orbit = self.orbit(p).expect("point in range");
            for &q in &orbit {
                assigned[q] = true;
            }
            orbits.push(orbit);
        }
        orbits
    }

    pub fn num_orbits(&self) -> usize {
        self.orbits().len()
    }

    /// Point stabilizer with generators obtained from the chain built with
    /// the point as forced first base (Schreier generators reduced by
    /// sifting).
    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let chain = Chain::build(self.degree, &self.generators, &[point])?;
        PermGroup::new(self.degree, chain.stabilizer_gens(1))
    }

    /// Pointwise stabilizer of a list of points, by iterated stabilization.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup> {
        for &p in points {
            if p >= self.degree {
                return Err(Error::PointOutOfRange {
                    point: p,
                    degree: self.degree,
                });
            }
        }
        let chain = Chain::build(self.degree, &self.generators, points)?;
        PermGroup::new(self.degree, chain.stabilizer_gens(points.len()))
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit_unsorted(0).len() == self.degree
    }

    /// Semiregular: every point stabilizer is trivial, equivalently every
    /// orbit has length `|G|`.
    pub fn is_semiregular(&self) -> bool {
        let order = self.order();
        self.orbits().iter().all(|o| o.len() as u128 == order)
    }

    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.is_semiregular()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(|g| g.is_identity())
    }

    /// All elements in deterministic chain order; errors above `cap`.
    pub fn elements_capped(&self, cap: u128) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > cap {
            return Err(Error::Capacity {
                what: "group order for element enumeration",
                actual: order,
                cap,
            });
        }
        Ok(self.chain().elements())
    }

    pub fn elements(&self) -> Result<Vec<Permutation>> {
        self.elements_capped(ELEMENT_ENUMERATION_CAP)
    }

    /// Parses the group file format: a `degree n` line, then one generator
    /// per line in cycle notation or as `img i0 i1 …`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<PermGroup> {
        let mut degree: Option<usize> = None;
        let mut gens = Vec::new();
        for raw in text.lines() {
            let line = match raw.find('#') {
                Some(pos) => raw[..pos].trim(),
                None => raw.trim(),
            };
            if line.is_empty() {
                continue;
            }
            match degree {
                None => {
                    let Some(rest) = line.strip_prefix("degree") else {
                        return Err(Error::Parse(format!(
                            "expected 'degree n' first, found {line:?}"
                        )));
                    };
                    let n: usize = rest
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad degree in {line:?}")))?;
                    if n == 0 {
                        return Err(Error::Parse("degree must be positive".into()));
                    }
                    degree = Some(n);
                }
                Some(n) => {
                    if let Some(rest) = line.strip_prefix("img") {
                        let images: Vec<usize> = rest
                            .split_whitespace()
                            .map(|t| {
                                t.parse::<usize>()
                                    .map_err(|_| Error::Parse(format!("bad image {t:?}")))
                            })
                            .collect::<Result<_>>()?;
                        if images.len() != n {
                            return Err(Error::Parse(format!(
                                "image list has length {} but degree is {n}",
                                images.len()
                            )));
                        }
                        gens.push(Permutation::from_images(images)?);
                    } else {
                        gens.push(Permutation::parse_cycles(n, line)?);
                    }
                }
            }
        }
        let Some(n) = degree else {
            return Err(Error::Parse("missing 'degree n' line".into()));
        };
        PermGroup::new(n, gens)
    }

    /// Canonical printing: `degree n` then one cycle-notation line per
    /// generator. `parse` of the output reproduces it byte for byte.
    pub fn print(&self) -> String {
        let mut out = String::new();
        writeln!(out, "degree {}", self.degree).unwrap();
        for g in &self.generators {
            writeln!(out, "{g}").unwrap();
        }
        out
    }
}
