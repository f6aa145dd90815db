//! Seeded random permutations and groups for property sweeps.

use rand::Rng;

use crate::group::PermGroup;
use crate::perm::Permutation;

/// Uniform random permutation by Fisher–Yates.
pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, degree: usize) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    for i in (1..degree).rev() {
        let j = rng.random_range(0..=i);
        images.swap(i, j);
    }
    Permutation::from_images(images).expect("shuffle is a bijection")
}

/// Group generated by `n_gens` uniform random permutations.
pub fn random_group<R: Rng + ?Sized>(rng: &mut R, degree: usize, n_gens: usize) -> PermGroup {
    let gens: Vec<Permutation> = (0..n_gens)
        .map(|_| random_permutation(rng, degree))
        .collect();
    PermGroup::new(degree, gens).expect("degrees match")
}

/// Random transitive group: resamples until transitive, falling back to
/// adjoining the full cycle if the draw never lands.
pub fn random_transitive_group<R: Rng + ?Sized>(
    rng: &mut R,
    degree: usize,
    n_gens: usize,
) -> PermGroup {
    for _ in 0..50 {
        let group = random_group(rng, degree, n_gens);
        if group.is_transitive() {
            return group;
        }
    }
    let mut gens: Vec<Permutation> = (0..n_gens.saturating_sub(1))
        .map(|_| random_permutation(rng, degree))
        .collect();
    gens.push(Permutation::from_cycles(degree, &[(0..degree).collect()]).expect("valid cycle"));
    PermGroup::new(degree, gens).expect("degrees match")
}
