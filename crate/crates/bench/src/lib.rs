//! Shared inputs for the benchmarks.

use liefour_core::{GaussianRational, Matrix, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` seeded random Gaussian-rational matrices.
pub fn random_matrices(seed: u64, dim: usize, count: usize) -> Vec<Matrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            Matrix::from_fn(dim, |_, _| {
                let re = GaussianRational::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4));
                let im = GaussianRational::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4));
                Scalar::constant(&re + &(&im * &GaussianRational::i()))
            })
        })
        .collect()
}
