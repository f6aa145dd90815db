//! Fixed-point sets, fixed-point ratios, and relative fixity.
//!
//! Ratios are exact rationals throughout. Relative fixity is computed over
//! conjugacy class representatives when the group is small enough to
//! enumerate; beyond that cap an exact branch-and-bound over the stabilizer
//! chain takes over, pruning cosets by the number of points they can still
//! fix.

use crate::error::{Error, Result};
use crate::group::{PermGroup, ELEMENT_ENUMERATION_CAP};
use crate::perm::Permutation;
use crate::structure::conjugacy_class_reps;
use crate::Rational;

/// The fixed points of a permutation, ascending.
pub fn fix_set(g: &Permutation) -> Vec<usize> {
    g.fixed_points()
}

/// Exact fixed-point ratio `|Fix(g)| / degree`.
pub fn fixed_point_ratio(g: &Permutation) -> Rational {
    assert!(g.degree() >= 1, "ratio needs at least one point");
    Rational::new(g.num_fixed_points() as u64, g.degree() as u64)
}

/// Relative fixity of a group: the maximum fixed-point ratio over its
/// non-identity elements, with one maximizing witness.
#[derive(Debug, Clone)]
pub struct Fixity {
    /// Maximum number of fixed points of a non-identity element.
    pub fixity: usize,
    /// `fixity / degree`, exact.
    pub rfx: Rational,
    pub witness: Permutation,
}

/// Computes the relative fixity. Small groups go through conjugacy class
/// representatives (the ratio is a class function); others through the
/// chain search. Errors on the trivial group.
pub fn relative_fixity(group: &PermGroup) -> Result<Fixity> {
    let order = group.order();
    if order <= 1 {
        return Err(Error::TrivialGroup);
    }
    let (fixity, witness) = if order <= ELEMENT_ENUMERATION_CAP {
        let mut best: Option<(usize, Permutation)> = None;
        for rep in conjugacy_class_reps(group)? {
            if rep.is_identity() {
                continue;
            }
            let fixed = rep.num_fixed_points();
            if best.as_ref().is_none_or(|(b, _)| fixed > *b) {
                best = Some((fixed, rep));
            }
        }
        best.expect("non-trivial group has a non-identity class")
    } else {
        max_fix_search(group)
    };
    Ok(Fixity {
        fixity,
        rfx: Rational::new(fixity as u64, group.degree() as u64),
        witness,
    })
}

/// Exact maximum of `|Fix(g)|` over non-identity `g`, by depth-first search
/// over base-point images in the stabilizer chain. A node at depth `d` is
/// the coset `h · u` with `h` in the level-`d` subgroup; a point can only be
/// fixed if `u⁻¹` sends it inside its own level-`d` orbit, which bounds the
/// subtree.
fn max_fix_search(group: &PermGroup) -> (usize, Permutation) {
    let chain = group.chain();
    let depth = chain.levels.len();
    let n = group.degree();
    let partitions: Vec<Vec<usize>> = (0..=depth)
        .map(|i| chain.level_orbit_partition(i))
        .collect();

    struct State<'a> {
        chain: &'a crate::chain::Chain,
        partitions: Vec<Vec<usize>>,
        depth: usize,
        n: usize,
        best: Option<(usize, Permutation)>,
    }

    fn go(
        state: &mut State,
        d: usize,
        partial: Permutation,
        partial_inv: Permutation,
        trivial: bool,
    ) {
        if d == state.depth {
            if trivial {
                return; // the identity element
            }
            let fixed = partial.num_fixed_points();
            if state.best.as_ref().is_none_or(|(b, _)| fixed > *b) {
                state.best = Some((fixed, partial));
            }
            return;
        }
        let part = &state.partitions[d];
        let bound = (0..state.n)
            .filter(|&p| part[p] == part[partial_inv.image(p)])
            .count();
        if let Some((b, _)) = &state.best {
            if bound <= *b {
                return;
            }
        }
        let base = state.chain.levels[d].base;
        for idx in 0..state.chain.levels[d].orbit.len() {
            let p = state.chain.levels[d].orbit[idx];
            let u = state
                .chain
                .representative(d, p)
                .expect("orbit point has representative");
            let next = u.prod(&partial);
            let next_inv = partial_inv.prod(&u.inverse());
            go(state, d + 1, next, next_inv, trivial && p == base);
        }
    }

    let mut state = State {
        chain,
        partitions,
        depth,
        n,
        best: None,
    };
    go(
        &mut state,
        0,
        Permutation::identity(n),
        Permutation::identity(n),
        true,
    );
    state
        .best
        .expect("non-trivial group has a non-identity element")
}

/// The imprimitive wreath action behind the fixity `|Ω| - 2` example: `n`
/// layers of `m` points, a symmetric group on every layer, and a cyclic
/// rotation of the layers. Point `(i, a)` is encoded as `i*m + a`.
pub fn wreath_group(n: usize, m: usize) -> Result<PermGroup> {
    if n < 2 || m < 2 {
        return Err(Error::Invalid(
            "wreath action needs n >= 2 and m >= 2".into(),
        ));
    }
    let degree = n * m;
    let transposition = Permutation::from_cycles(degree, &[vec![0, 1]])?;
    let layer_cycle = Permutation::from_cycles(degree, &[(0..m).collect()])?;
    let rotation = Permutation::from_images(
        (0..degree)
            .map(|p| {
                let (i, a) = (p / m, p % m);
                ((i + 1) % n) * m + a
            })
            .collect(),
    )?;
    PermGroup::new(degree, vec![transposition, layer_cycle, rotation])
}

/// Constructs the wreath action on `n*m` points and returns it with its
/// relative fixity, which the construction makes `(nm-2)/(nm)`.
pub fn wreath_example(n: usize, m: usize) -> Result<(PermGroup, Rational)> {
    let group = wreath_group(n, m)?;
    let fixity = relative_fixity(&group)?;
    Ok((group, fixity.rfx))
}
