//! Orbit counting on graph quotients and the rank-versus-Betti inequality
//! for semiregular actions.

use std::collections::BTreeMap;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::group::PermGroup;
use crate::orbital::ensure_acts_on;
use crate::report::{BoundReport, LemmaId, ReportValue};
use crate::structure::group_rank;

/// Counts of group orbits on vertices and on unordered edges.
pub fn quotient_counts(graph: &SimpleGraph, group: &PermGroup) -> Result<(usize, usize)> {
    ensure_acts_on(graph, group)?;
    let vertex_orbits = group.num_orbits();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut edge_orbits = 0;
    for edge in graph.edges() {
        if seen.contains(&edge) {
            continue;
        }
        edge_orbits += 1;
        let mut queue = vec![edge];
        seen.insert(edge);
        let mut head = 0;
        while head < queue.len() {
            let (u, v) = queue[head];
            head += 1;
            for g in group.generators() {
                let (a, b) = (g.image(u), g.image(v));
                let next = (a.min(b), a.max(b));
                if seen.insert(next) {
                    queue.push(next);
                }
            }
        }
    }
    Ok((vertex_orbits, edge_orbits))
}

/// `rank(G) ≤ |E(Γ)/G| - |V(Γ)/G| + 1` for a group acting semiregularly on
/// the vertices of a connected graph.
pub fn check_cover_rank(
    instance_id: &str,
    graph: &SimpleGraph,
    group: &PermGroup,
) -> Result<BoundReport> {
    if !graph.is_connected() {
        return Err(Error::Hypothesis("connected"));
    }
    ensure_acts_on(graph, group)?;
    if !group.is_semiregular() {
        return Err(Error::Hypothesis("semiregular"));
    }
    let rank = group_rank(group)?;
    let (vertex_orbits, edge_orbits) = quotient_counts(graph, group)?;
    // The quotient of a connected graph is connected, so its Betti number
    // edge_orbits - vertex_orbits + 1 is non-negative.
    let bound = (edge_orbits + 1 - vertex_orbits) as u128;
    let context: BTreeMap<String, String> = [
        ("|G|".to_string(), group.order().to_string()),
        ("vertex_orbits".to_string(), vertex_orbits.to_string()),
        ("edge_orbits".to_string(), edge_orbits.to_string()),
    ]
    .into_iter()
    .collect();
    Ok(BoundReport {
        instance_id: instance_id.to_string(),
        lemma_id: LemmaId::Lcover,
        lhs: ReportValue::Integer(rank as u128),
        rhs: ReportValue::Integer(bound),
        holds: rank as u128 <= bound,
        context,
    })
}
