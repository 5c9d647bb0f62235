use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Minimum spacing between sampled real roots, keeping the targets well
/// conditioned.
const MIN_GAP: f64 = 0.05;

/// `count` sorted simple roots drawn uniformly from `[0.5, 3.5]`.
pub fn random_real_roots(count: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut roots: Vec<f64> = (0..count).map(|_| rng.random_range(0.5..3.5)).collect();
        roots.sort_by(f64::total_cmp);
        if roots.windows(2).all(|w| w[1] - w[0] >= MIN_GAP) {
            return roots;
        }
    }
}

/// `count` roots drawn uniformly in modulus from `[0.5, 2]` and in argument.
pub fn random_annulus_roots(count: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let r = rng.random_range(0.5..2.0);
            Complex64::from_polar(r, rng.random_range(0.0..std::f64::consts::TAU))
        })
        .collect()
}
