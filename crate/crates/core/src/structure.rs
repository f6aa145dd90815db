//! Structural subgroups and quantities: conjugacy classes, centralizers,
//! normal closures, the center, the exponent, the subgroup generated by all
//! point stabilizers, primitivity and quasiprimitivity, and the rank (size of
//! a smallest generating set).

use std::collections::HashMap;

use num::integer::lcm;

use crate::chain::Chain;
use crate::error::{Error, Result};
use crate::group::{PermGroup, ELEMENT_ENUMERATION_CAP};
use crate::perm::Permutation;

/// Rank search enumerates all elements, so it carries a tighter cap.
pub const RANK_CAP: u128 = 10_000;

/// Conjugation orbit of `g` under `group`, sorted. Errors if `g` lies outside
/// the group.
pub fn conjugacy_class(group: &PermGroup, g: &Permutation) -> Result<Vec<Permutation>> {
    if !group.contains(g)? {
        return Err(Error::NotInGroup);
    }
    let (mut class, _) = conjugation_orbit(group, g)?;
    class.sort_unstable();
    Ok(class)
}

/// Conjugates in discovery order plus the Schreier tree `(previous index,
/// generator index)` per element.
type ConjugationOrbit = (Vec<Permutation>, Vec<Option<(usize, usize)>>);

/// BFS of the conjugation orbit.
fn conjugation_orbit(group: &PermGroup, g: &Permutation) -> Result<ConjugationOrbit> {
    let gens = group.generators();
    let mut orbit = vec![g.clone()];
    let mut tree = vec![None];
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(g.clone(), 0);
    let mut head = 0;
    while head < orbit.len() {
        let current = orbit[head].clone();
        for (gi, s) in gens.iter().enumerate() {
            let conj = current.conjugate_by(s);
            if !index.contains_key(&conj) {
                index.insert(conj.clone(), orbit.len());
                tree.push(Some((head, gi)));
                orbit.push(conj);
                if orbit.len() as u128 > ELEMENT_ENUMERATION_CAP {
                    return Err(Error::Capacity {
                        what: "conjugacy class size",
                        actual: orbit.len() as u128,
                        cap: ELEMENT_ENUMERATION_CAP,
                    });
                }
            }
        }
        head += 1;
    }
    Ok((orbit, tree))
}

/// Conjugating word for the orbit element at `idx`: a group element `x` with
/// `g^x` equal to that conjugate.
fn conjugating_element(
    group: &PermGroup,
    tree: &[Option<(usize, usize)>],
    idx: usize,
) -> Permutation {
    let mut path = Vec::new();
    let mut cur = idx;
    while let Some((prev, gi)) = tree[cur] {
        path.push(gi);
        cur = prev;
    }
    let mut x = Permutation::identity(group.degree());
    for &gi in path.iter().rev() {
        x = x.prod(&group.generators()[gi]);
    }
    x
}

/// Centralizer of `g` in `group`; `g` must lie in the group.
pub fn centralizer(group: &PermGroup, g: &Permutation) -> Result<PermGroup> {
    if !group.contains(g)? {
        return Err(Error::NotInGroup);
    }
    centralizer_in(group, g)
}

/// Stabilizer of `g` under conjugation by `group`, via Schreier generators on
/// the conjugation orbit. `g` need not be a member (used by `center`).
fn centralizer_in(group: &PermGroup, g: &Permutation) -> Result<PermGroup> {
    let group_order = group.order();
    let (orbit, tree) = conjugation_orbit(group, g)?;
    let orbit_len = orbit.len() as u128;
    let target = group_order / orbit_len;
    debug_assert_eq!(group_order % orbit_len, 0);

    let index: HashMap<&Permutation, usize> =
        orbit.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut cgens: Vec<Permutation> = Vec::new();
    let mut chain = Chain::build(group.degree(), &cgens, &[])?;
    'outer: for (idx, element) in orbit.iter().enumerate() {
        let u = conjugating_element(group, &tree, idx);
        for s in group.generators() {
            let conj = element.conjugate_by(s);
            let target_idx = index[&conj];
            let v = conjugating_element(group, &tree, target_idx);
            // u s v^-1 maps g to the conjugate and back: it centralizes g.
            let schreier = u.prod(s).prod(&v.inverse());
            debug_assert_eq!(g.conjugate_by(&schreier), *g);
            if !chain.contains(&schreier) {
                cgens.push(schreier);
                chain = Chain::build(group.degree(), &cgens, &[])?;
                if chain.order()? == target {
                    break 'outer;
                }
            }
        }
    }
    PermGroup::new(group.degree(), cgens)
}

/// Smallest normal subgroup of `group` containing `g`.
pub fn normal_closure(group: &PermGroup, g: &Permutation) -> Result<PermGroup> {
    if !group.contains(g)? {
        return Err(Error::NotInGroup);
    }
    normal_closure_of(group, vec![g.clone()])
}

/// Smallest normal subgroup of `group` containing all the seed elements.
pub(crate) fn normal_closure_of(group: &PermGroup, seeds: Vec<Permutation>) -> Result<PermGroup> {
    let mut ngens: Vec<Permutation> = Vec::new();
    let mut chain = Chain::build(group.degree(), &ngens, &[])?;
    let mut queue: Vec<Permutation> = seeds;
    let mut head = 0;
    while head < queue.len() {
        let current = queue[head].clone();
        head += 1;
        if chain.contains(&current) {
            continue;
        }
        ngens.push(current.clone());
        chain = Chain::build(group.degree(), &ngens, &[])?;
        for x in group.generators() {
            queue.push(current.conjugate_by(x));
        }
    }
    PermGroup::new(group.degree(), ngens)
}

/// Center of the group, computed as iterated centralizers of the generators.
pub fn center(group: &PermGroup) -> Result<PermGroup> {
    let mut z = group.clone();
    for g in group.generators() {
        if g.is_identity() {
            continue;
        }
        z = centralizer_in(&z, g)?;
    }
    Ok(z)
}

/// Conjugacy class representatives in deterministic enumeration order, the
/// identity first. Errors above the element-enumeration cap.
pub fn conjugacy_class_reps(group: &PermGroup) -> Result<Vec<Permutation>> {
    let elements = group.elements()?;
    let mut classified: std::collections::HashSet<Permutation> = std::collections::HashSet::new();
    let mut reps = vec![Permutation::identity(group.degree())];
    classified.insert(Permutation::identity(group.degree()));
    for e in elements {
        if classified.contains(&e) {
            continue;
        }
        reps.push(e.clone());
        let (class, _) = conjugation_orbit(group, &e)?;
        classified.extend(class);
    }
    Ok(reps)
}

/// Exponent of the group: lcm of element orders, computed over conjugacy
/// class representatives (order is a class function).
pub fn exponent(group: &PermGroup) -> Result<u128> {
    let mut result: u128 = 1;
    for rep in conjugacy_class_reps(group)? {
        result = lcm(result, rep.order());
    }
    Ok(result)
}

/// The subgroup generated by all point stabilizers. Computed as the normal
/// closure of the stabilizers of one representative per orbit; conjugacy of
/// stabilizers within an orbit makes this equal to the definition.
pub fn plus_subgroup(group: &PermGroup) -> Result<PermGroup> {
    let mut seeds = Vec::new();
    for orbit in group.orbits() {
        let stab = group.point_stabilizer(orbit[0])?;
        for g in stab.generators() {
            if !g.is_identity() {
                seeds.push(g.clone());
            }
        }
    }
    normal_closure_of(group, seeds)
}

/// Finest `G`-congruence containing the pair `{a, b}`: each merge propagates
/// to generator images, so the result is the minimal block system through the
/// pair. Returns the class representative per point.
pub(crate) fn block_closure(degree: usize, gens: &[Permutation], a: usize, b: usize) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..degree).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut queue = vec![(a, b)];
    while let Some((x, y)) = queue.pop() {
        let rx = find(&mut parent, x);
        let ry = find(&mut parent, y);
        if rx == ry {
            continue;
        }
        let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
        parent[hi] = lo;
        for g in gens {
            queue.push((g.image(x), g.image(y)));
        }
    }
    (0..degree).map(|p| find(&mut parent, p)).collect()
}

/// Primitivity via minimal block systems: imprimitive iff some pair `{0, δ}`
/// closes to a block of size strictly between 1 and the degree.
pub fn is_primitive(group: &PermGroup) -> Result<bool> {
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let n = group.degree();
    if n == 1 {
        return Ok(true);
    }
    for delta in 1..n {
        let reps = block_closure(n, group.generators(), 0, delta);
        let block_size = reps.iter().filter(|&&r| r == reps[0]).count();
        if block_size < n {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Quasiprimitivity: every nontrivial normal subgroup is transitive. Every
/// such subgroup contains the normal closure of one of its nontrivial
/// elements, so it suffices that every class representative has a transitive
/// normal closure.
pub fn is_quasiprimitive(group: &PermGroup) -> Result<bool> {
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    for rep in conjugacy_class_reps(group)? {
        if rep.is_identity() {
            continue;
        }
        if !normal_closure(group, &rep)?.is_transitive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Size of a smallest generating set. The first pick ranges over class
/// representatives only (rank is invariant under conjugating a whole tuple);
/// later picks range over all elements, pruned by the order they can still
/// reach.
pub fn group_rank(group: &PermGroup) -> Result<usize> {
    let order = group.order();
    if order > RANK_CAP {
        return Err(Error::Capacity {
            what: "group order for rank search",
            actual: order,
            cap: RANK_CAP,
        });
    }
    if order == 1 {
        return Ok(0);
    }
    let reps: Vec<Permutation> = conjugacy_class_reps(group)?
        .into_iter()
        .filter(|p| !p.is_identity())
        .collect();
    let elements: Vec<Permutation> = group
        .elements_capped(RANK_CAP)?
        .into_iter()
        .filter(|p| !p.is_identity())
        .collect();
    let max_rank = (128 - order.leading_zeros()) as usize; // floor(log2) + 1
    for k in 1..=max_rank {
        if search_tuple(group, &reps, &elements, order, &mut Vec::new(), k)? {
            return Ok(k);
        }
    }
    unreachable!("every group is generated by at most log2(order) elements")
}

/// Degree cap for the brute-force permutation-isomorphism search.
pub const PERM_ISO_CAP: usize = 8;

/// Whether two permutation groups of the same degree are permutation
/// isomorphic, by brute-force search for a conjugating relabeling of the
/// points. Light structural checks (order, degree) short-circuit the search.
pub fn is_permutation_isomorphic(a: &PermGroup, b: &PermGroup) -> Result<bool> {
    if a.degree() != b.degree() {
        return Ok(false);
    }
    if a.order() != b.order() {
        return Ok(false);
    }
    let degree = a.degree();
    if degree > PERM_ISO_CAP {
        return Err(Error::Capacity {
            what: "degree for permutation-isomorphism search",
            actual: degree as u128,
            cap: PERM_ISO_CAP as u128,
        });
    }
    let mut relabeling: Vec<usize> = (0..degree).collect();
    loop {
        let c = Permutation::from_images(relabeling.clone()).expect("permutation of the points");
        let conjugated = a.generators().iter().map(|g| g.conjugate_by(&c));
        let mut all_inside = true;
        for g in conjugated {
            if !b.contains(&g)? {
                all_inside = false;
                break;
            }
        }
        // Equal orders make containment of the conjugated generators enough.
        if all_inside {
            return Ok(true);
        }
        if !next_lexicographic(&mut relabeling) {
            return Ok(false);
        }
    }
}

fn next_lexicographic(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
        return false;
    };
    let j = (i + 1..n)
        .rev()
        .find(|&j| perm[j] > perm[i])
        .expect("exists");
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

fn search_tuple(
    group: &PermGroup,
    reps: &[Permutation],
    elements: &[Permutation],
    order: u128,
    partial: &mut Vec<Permutation>,
    remaining: usize,
) -> Result<bool> {
    let current = Chain::build(group.degree(), partial, &[])?;
    let current_order = current.order()?;
    if current_order == order {
        // Shorter tuples pad out to length k, so reaching the full group
        // with picks to spare still succeeds.
        return Ok(true);
    }
    if remaining == 0 {
        return Ok(false);
    }
    let candidates: &[Permutation] = if partial.is_empty() { reps } else { elements };
    for cand in candidates {
        if current.contains(cand) {
            continue;
        }
        partial.push(cand.clone());
        let found = search_tuple(group, reps, elements, order, partial, remaining - 1)?;
        partial.pop();
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}
