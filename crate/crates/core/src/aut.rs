//! Graph automorphism groups by backtracking over an equitable vertex
//! coloring.
//!
//! The group is assembled level by level: fix a target vertex in the first
//! non-singleton color cell, recurse for its stabilizer, then search one
//! automorphism per remaining cell member not yet reachable, which yields a
//! base-and-strong-generating structure without enumerating the group.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Automorphism search is capped at this vertex count; larger graphs must
/// bring their groups from constructions.
pub const AUT_SEARCH_CAP: usize = 128;

/// Full automorphism group of the graph.
pub fn automorphism_group(graph: &SimpleGraph) -> Result<PermGroup> {
    let n = graph.n_vertices();
    if n == 0 {
        return Err(Error::Invalid("graph has no vertices".into()));
    }
    if n > AUT_SEARCH_CAP {
        return Err(Error::Capacity {
            what: "vertices for automorphism search",
            actual: n as u128,
            cap: AUT_SEARCH_CAP as u128,
        });
    }
    let mut fixed = Vec::new();
    let gens = stabilizer_tower(graph, &mut fixed);
    debug_assert!(gens.iter().all(|g| graph.is_automorphism(g)));
    PermGroup::new(n, gens)
}

/// Generators of the pointwise stabilizer of `fixed` in `Aut(graph)`.
fn stabilizer_tower(graph: &SimpleGraph, fixed: &mut Vec<usize>) -> Vec<Permutation> {
    let colors = refined_coloring(graph, fixed);
    let Some(target) = first_non_singleton(&colors) else {
        return Vec::new();
    };
    fixed.push(target);
    let mut gens = stabilizer_tower(graph, fixed);
    fixed.pop();

    let cell: Vec<usize> = (0..graph.n_vertices())
        .filter(|&v| colors[v] == colors[target] && v != target)
        .collect();
    let mut orbit = orbit_of(graph.n_vertices(), target, &gens);
    for w in cell {
        if orbit[w] {
            continue;
        }
        if let Some(a) = find_automorphism(graph, fixed, &colors, target, w) {
            gens.push(a);
            orbit = orbit_of(graph.n_vertices(), target, &gens);
        }
    }
    gens
}

fn orbit_of(n: usize, start: usize, gens: &[Permutation]) -> Vec<bool> {
    let mut seen = vec![false; n];
    let mut queue = vec![start];
    seen[start] = true;
    let mut head = 0;
    while head < queue.len() {
        let p = queue[head];
        head += 1;
        for g in gens {
            let q = g.image(p);
            if !seen[q] {
                seen[q] = true;
                queue.push(q);
            }
        }
    }
    seen
}

/// Equitable refinement of the coloring that gives each vertex in `fixed`
/// its own color: vertices are repeatedly split by the multiset of neighbor
/// colors until stable. Color ids are assigned in sorted signature order, so
/// the result is deterministic.
fn refined_coloring(graph: &SimpleGraph, fixed: &[usize]) -> Vec<usize> {
    let n = graph.n_vertices();
    let mut colors = vec![0usize; n];
    for (i, &v) in fixed.iter().enumerate() {
        colors[v] = i + 1;
    }
    loop {
        let mut signatures: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut neighbor_colors: Vec<usize> =
                graph.neighbors(v).iter().map(|&u| colors[u]).collect();
            neighbor_colors.sort_unstable();
            signatures.push((colors[v], neighbor_colors));
        }
        let mut sorted: Vec<&(usize, Vec<usize>)> = signatures.iter().collect();
        sorted.sort();
        sorted.dedup();
        let new_count = sorted.len();
        let old_count = {
            let mut cs: Vec<usize> = colors.clone();
            cs.sort_unstable();
            cs.dedup();
            cs.len()
        };
        let next: Vec<usize> = signatures
            .iter()
            .map(|sig| sorted.binary_search(&sig).expect("own signature"))
            .collect();
        colors = next;
        if new_count == old_count {
            return colors;
        }
    }
}

/// Smallest vertex of the lowest-id color cell with at least two members.
fn first_non_singleton(colors: &[usize]) -> Option<usize> {
    let max_color = colors.iter().copied().max().unwrap_or(0);
    let mut count = vec![0usize; max_color + 1];
    for &c in colors {
        count[c] += 1;
    }
    let cell = count.iter().position(|&n| n >= 2)?;
    (0..colors.len()).find(|&v| colors[v] == cell)
}

/// Searches for one automorphism fixing `fixed` pointwise and mapping
/// `source` to `target`, consistent with the coloring.
fn find_automorphism(
    graph: &SimpleGraph,
    fixed: &[usize],
    colors: &[usize],
    source: usize,
    target: usize,
) -> Option<Permutation> {
    let n = graph.n_vertices();
    let mut mapping: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    for &v in fixed {
        mapping[v] = Some(v);
        used[v] = true;
    }
    if used[target] {
        return None;
    }
    mapping[source] = Some(target);
    used[target] = true;
    if !extend(graph, colors, &mut mapping, &mut used) {
        return None;
    }
    let images: Vec<usize> = mapping.into_iter().map(|m| m.expect("complete")).collect();
    let perm = Permutation::from_images(images).expect("bijection by construction");
    debug_assert!(graph.is_automorphism(&perm));
    Some(perm)
}

fn extend(
    graph: &SimpleGraph,
    colors: &[usize],
    mapping: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
) -> bool {
    let n = graph.n_vertices();
    // Prefer a vertex adjacent to the mapped part: its candidates are
    // confined to one neighborhood.
    let next = (0..n)
        .filter(|&v| mapping[v].is_none())
        .find(|&v| graph.neighbors(v).iter().any(|&u| mapping[u].is_some()))
        .or_else(|| (0..n).find(|&v| mapping[v].is_none()));
    let Some(v) = next else {
        return true; // complete
    };
    let candidates: Vec<usize> = match graph.neighbors(v).iter().find_map(|&u| mapping[u]) {
        Some(anchor_image) => graph.neighbors(anchor_image).to_vec(),
        None => (0..n).collect(),
    };
    'cand: for u in candidates {
        if used[u] || colors[u] != colors[v] {
            continue;
        }
        for (x, image) in mapping.iter().enumerate() {
            if let Some(mx) = image {
                if graph.has_edge(v, x) != graph.has_edge(u, *mx) {
                    continue 'cand;
                }
            }
        }
        mapping[v] = Some(u);
        used[u] = true;
        if extend(graph, colors, mapping, used) {
            return true;
        }
        mapping[v] = None;
        used[u] = false;
    }
    false
}
