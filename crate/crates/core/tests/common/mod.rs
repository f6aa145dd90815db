//! Brute-force reference implementations shared by the integration tests.
//! Everything here enumerates; nothing touches the stabilizer-chain code
//! paths it is used to check.

#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::OnceLock;

use orbifix::catalog::{builtin_catalog, CatalogEntry};
use orbifix::graph::SimpleGraph;
use orbifix::group::PermGroup;
use orbifix::perm::Permutation;

/// Closure of the generating set under multiplication, as a sorted vector.
pub fn closure_elements(group: &PermGroup) -> Vec<Permutation> {
    let n = group.degree();
    let identity = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = vec![identity.clone()];
    seen.insert(identity);
    let mut head = 0;
    while head < queue.len() {
        let current = queue[head].clone();
        head += 1;
        for g in group.generators() {
            let next = current.compose(g).expect("equal degrees");
            if seen.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort_unstable();
    elements
}

pub fn brute_order(group: &PermGroup) -> u128 {
    closure_elements(group).len() as u128
}

/// Orbit partition computed from the element list, not from generator BFS.
pub fn brute_orbits(elements: &[Permutation], degree: usize) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; degree];
    let mut orbits = Vec::new();
    for p in 0..degree {
        if assigned[p] {
            continue;
        }
        let mut orbit: Vec<usize> = elements.iter().map(|g| g.image(p)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &q in &orbit {
            assigned[q] = true;
        }
        orbits.push(orbit);
    }
    orbits
}

pub fn brute_stabilizer_order(elements: &[Permutation], point: usize) -> u128 {
    elements.iter().filter(|g| g.image(point) == point).count() as u128
}

/// Maximum fixed-point count over all non-identity elements.
pub fn brute_max_fix(elements: &[Permutation]) -> usize {
    elements
        .iter()
        .filter(|g| !g.is_identity())
        .map(|g| g.num_fixed_points())
        .max()
        .expect("non-trivial group")
}

pub fn brute_exponent(elements: &[Permutation]) -> u128 {
    elements
        .iter()
        .fold(1u128, |acc, g| num::integer::lcm(acc, g.order()))
}

/// Counts all adjacency-preserving bijections by plain backtracking with no
/// refinement, candidate images tried in ascending order.
pub fn brute_automorphism_count(graph: &SimpleGraph) -> u128 {
    fn extend(graph: &SimpleGraph, mapping: &mut Vec<Option<usize>>, used: &mut Vec<bool>) -> u128 {
        let n = graph.n_vertices();
        let Some(v) = (0..n).find(|&v| mapping[v].is_none()) else {
            return 1;
        };
        let mut count = 0;
        'cand: for u in 0..n {
            if used[u] || graph.degree_of(u) != graph.degree_of(v) {
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
            count += extend(graph, mapping, used);
            mapping[v] = None;
            used[u] = false;
        }
        count
    }
    let n = graph.n_vertices();
    extend(graph, &mut vec![None; n], &mut vec![false; n])
}

/// All normal subgroups, as the join-closure of the cyclic normal closures
/// of every element. Every normal subgroup is the join of the closures of
/// its elements, so this enumeration is complete.
pub fn brute_normal_subgroups(group: &PermGroup) -> Vec<PermGroup> {
    let elements = closure_elements(group);
    let mut subgroups: Vec<(u128, PermGroup)> = Vec::new();
    let push_unique = |subgroups: &mut Vec<(u128, PermGroup)>, candidate: PermGroup| {
        let order = candidate.order();
        let duplicate = subgroups
            .iter()
            .any(|(o, g)| *o == order && g.contains_group(&candidate).unwrap());
        if !duplicate {
            subgroups.push((order, candidate));
        }
    };
    for e in &elements {
        let closure = orbifix::structure::normal_closure(group, e).expect("member");
        push_unique(&mut subgroups, closure);
    }
    loop {
        let snapshot: Vec<PermGroup> = subgroups.iter().map(|(_, g)| g.clone()).collect();
        let before = subgroups.len();
        for a in &snapshot {
            for b in &snapshot {
                let mut gens = a.generators().to_vec();
                gens.extend_from_slice(b.generators());
                let join = PermGroup::new(group.degree(), gens).expect("same degree");
                push_unique(&mut subgroups, join);
            }
        }
        if subgroups.len() == before {
            break;
        }
    }
    subgroups.into_iter().map(|(_, g)| g).collect()
}

/// The built-in catalog, loaded once per test binary.
pub fn shared_catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| builtin_catalog().expect("builtin catalog loads"))
}
