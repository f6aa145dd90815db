//! Suborbits, orbital (di)graphs, Higman's primitivity criterion, and the
//! graph-side transitivity hierarchy.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::structure::{is_primitive, is_quasiprimitive};

/// A suborbit together with its orbital digraph.
#[derive(Debug, Clone)]
pub struct OrbitalSpec {
    /// Base point ω.
    pub base: usize,
    /// Representative δ of the suborbit.
    pub rep: usize,
    /// The suborbit δ^{G_ω}, ascending.
    pub suborbit: Vec<usize>,
    /// Whether the arc set is closed under reversal.
    pub self_paired: bool,
    /// The G-orbit of the arc (ω, δ), sorted.
    pub arcs: Vec<(usize, usize)>,
    /// The underlying undirected orbital graph; present iff self-paired.
    pub graph: Option<SimpleGraph>,
    degree: usize,
}

impl OrbitalSpec {
    /// Weak connectivity of the digraph: connectivity of the underlying
    /// undirected graph.
    pub fn is_connected(&self) -> bool {
        arcs_weakly_connected(self.degree, &self.arcs)
    }

    /// Arc-list export with a header recording (ω, δ, self_paired).
    pub fn export(&self) -> String {
        let mut out = String::new();
        writeln!(out, "omega {}", self.base).unwrap();
        writeln!(out, "delta {}", self.rep).unwrap();
        writeln!(out, "self_paired {}", self.self_paired).unwrap();
        writeln!(out, "vertices {}", self.degree).unwrap();
        writeln!(out, "arcs {}", self.arcs.len()).unwrap();
        for &(u, v) in &self.arcs {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

fn arcs_weakly_connected(degree: usize, arcs: &[(usize, usize)]) -> bool {
    let mut adjacency = vec![Vec::new(); degree];
    for &(u, v) in arcs {
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    let mut seen = vec![false; degree];
    let mut queue = vec![0];
    seen[0] = true;
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for &v in &adjacency[u] {
            if !seen[v] {
                seen[v] = true;
                queue.push(v);
            }
        }
    }
    queue.len() == degree
}

/// Orbital digraph for the pair (ω, δ): the G-orbit of the ordered pair under
/// the componentwise action.
pub fn orbital_digraph(group: &PermGroup, omega: usize, delta: usize) -> Result<OrbitalSpec> {
    let n = group.degree();
    if omega >= n || delta >= n {
        return Err(Error::PointOutOfRange {
            point: omega.max(delta),
            degree: n,
        });
    }
    if omega == delta {
        return Err(Error::Invalid("orbital pair needs distinct points".into()));
    }
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut queue = vec![(omega, delta)];
    seen.insert((omega, delta));
    let mut head = 0;
    while head < queue.len() {
        let (u, v) = queue[head];
        head += 1;
        for g in group.generators() {
            let next = (g.image(u), g.image(v));
            if seen.insert(next) {
                queue.push(next);
            }
        }
    }
    let mut arcs: Vec<(usize, usize)> = seen.iter().copied().collect();
    arcs.sort_unstable();
    let self_paired = arcs.iter().all(|&(u, v)| seen.contains(&(v, u)));
    let mut suborbit: Vec<usize> = arcs
        .iter()
        .filter(|&&(u, _)| u == omega)
        .map(|&(_, v)| v)
        .collect();
    suborbit.sort_unstable();
    let graph = if self_paired {
        let edges: Vec<(usize, usize)> = arcs.iter().filter(|&&(u, v)| u < v).copied().collect();
        Some(SimpleGraph::from_edges(n, &edges)?)
    } else {
        None
    };
    Ok(OrbitalSpec {
        base: omega,
        rep: delta,
        suborbit,
        self_paired,
        arcs,
        graph,
        degree: n,
    })
}

/// All suborbits of a transitive group at ω: the orbits of the stabilizer
/// G_ω on the remaining points, each wrapped with its orbital digraph.
/// Ordered by smallest suborbit element.
pub fn suborbits(group: &PermGroup, omega: usize) -> Result<Vec<OrbitalSpec>> {
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    if omega >= group.degree() {
        return Err(Error::PointOutOfRange {
            point: omega,
            degree: group.degree(),
        });
    }
    let stabilizer = group.point_stabilizer(omega)?;
    let mut specs = Vec::new();
    for orbit in stabilizer.orbits() {
        if orbit == [omega] {
            continue;
        }
        specs.push(orbital_digraph(group, omega, orbit[0])?);
    }
    Ok(specs)
}

/// Both sides of Higman's criterion, computed independently: primitivity via
/// the block algorithm and connectivity of every orbital digraph. The two
/// must always agree.
pub fn higman_check(group: &PermGroup) -> Result<(bool, bool)> {
    let primitive = is_primitive(group)?;
    let all_connected = suborbits(group, 0)?.iter().all(|s| s.is_connected());
    Ok((primitive, all_connected))
}

/// Transitivity flags of a group acting on a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransitivityProfile {
    pub vertex: bool,
    pub edge: bool,
    pub arc: bool,
    pub two_arc: bool,
    pub local_arc: bool,
    pub locally_quasiprimitive: bool,
}

/// The induced action of the vertex stabilizer on the neighborhood.
#[derive(Debug, Clone)]
pub struct LocalAction {
    /// Permutation group on `{0, …, deg(v)-1}` via ascending neighbor order.
    pub group: PermGroup,
    pub stabilizer_order: u128,
    pub kernel_order: u128,
}

/// The group `G_v^{Γ(v)}`: the vertex stabilizer restricted to the
/// neighborhood of `v` in ascending vertex order.
pub fn local_action(graph: &SimpleGraph, group: &PermGroup, v: usize) -> Result<LocalAction> {
    ensure_acts_on(graph, group)?;
    if v >= graph.n_vertices() {
        return Err(Error::PointOutOfRange {
            point: v,
            degree: graph.n_vertices(),
        });
    }
    let neighbors = graph.neighbors(v);
    if neighbors.is_empty() {
        return Err(Error::Invalid(format!("vertex {v} has no neighbors")));
    }
    let position: std::collections::HashMap<usize, usize> =
        neighbors.iter().enumerate().map(|(i, &u)| (u, i)).collect();
    let stabilizer = group.point_stabilizer(v)?;
    let mut restricted = Vec::new();
    for g in stabilizer.generators() {
        let images: Vec<usize> = neighbors.iter().map(|&u| position[&g.image(u)]).collect();
        restricted.push(Permutation::from_images(images)?);
    }
    let local = PermGroup::new(neighbors.len(), restricted)?;
    let stabilizer_order = stabilizer.order();
    let kernel_order = stabilizer_order / local.order();
    Ok(LocalAction {
        group: local,
        stabilizer_order,
        kernel_order,
    })
}

pub(crate) fn ensure_acts_on(graph: &SimpleGraph, group: &PermGroup) -> Result<()> {
    if group.degree() != graph.n_vertices() {
        return Err(Error::DegreeMismatch(group.degree(), graph.n_vertices()));
    }
    for g in group.generators() {
        if !graph.is_automorphism(g) {
            return Err(Error::NotAutomorphism);
        }
    }
    Ok(())
}

/// Orbit of a set element under an action given by generator images.
fn one_orbit_covers<T, F>(start: T, total: usize, gens: &[Permutation], act: F) -> bool
where
    T: std::hash::Hash + Eq + Copy,
    F: Fn(&Permutation, T) -> T,
{
    let mut seen: HashSet<T> = HashSet::new();
    let mut queue = vec![start];
    seen.insert(start);
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for g in gens {
            let y = act(g, x);
            if seen.insert(y) {
                queue.push(y);
            }
        }
    }
    seen.len() == total
}

/// Computes all transitivity flags by one-orbit tests. The group must act on
/// the graph as automorphisms.
pub fn transitivity_profile(graph: &SimpleGraph, group: &PermGroup) -> Result<TransitivityProfile> {
    ensure_acts_on(graph, group)?;
    let gens = group.generators();
    let n = graph.n_vertices();

    let vertex = group.is_transitive();

    let edges = graph.edges();
    let edge = edges.is_empty()
        || one_orbit_covers(edges[0], edges.len(), gens, |g, (u, v): (usize, usize)| {
            let (a, b) = (g.image(u), g.image(v));
            (a.min(b), a.max(b))
        });

    let arcs = graph.arcs();
    let arc = arcs.is_empty()
        || one_orbit_covers(arcs[0], arcs.len(), gens, |g, (u, v): (usize, usize)| {
            (g.image(u), g.image(v))
        });

    let mut two_arcs = Vec::new();
    for v in 0..n {
        for &u in graph.neighbors(v) {
            for &w in graph.neighbors(v) {
                if u != w {
                    two_arcs.push((u, v, w));
                }
            }
        }
    }
    let two_arc = two_arcs.is_empty()
        || one_orbit_covers(
            two_arcs[0],
            two_arcs.len(),
            gens,
            |g, (u, v, w): (usize, usize, usize)| (g.image(u), g.image(v), g.image(w)),
        );

    let mut local_arc = true;
    let mut locally_quasiprimitive = true;
    for orbit in group.orbits() {
        let v = orbit[0];
        if graph.degree_of(v) == 0 {
            local_arc = false;
            locally_quasiprimitive = false;
            break;
        }
        let local = local_action(graph, group, v)?;
        if !local.group.is_transitive() {
            local_arc = false;
            locally_quasiprimitive = false;
        } else if !is_quasiprimitive(&local.group)? {
            locally_quasiprimitive = false;
        }
    }

    Ok(TransitivityProfile {
        vertex,
        edge,
        arc,
        two_arc,
        local_arc,
        locally_quasiprimitive,
    })
}
