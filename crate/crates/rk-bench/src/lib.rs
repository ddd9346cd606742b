//! Shared fixtures for the benchmark targets.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rk_core::ComplexMatrix;

/// Seeded upper-triangular matrix with spectral radius below 0.92.
pub fn bench_triangular(dim: usize, seed: u64) -> ComplexMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = ComplexMatrix::zero(dim).unwrap();
    for i in 0..dim {
        let r = rng.gen_range(0.5..0.92);
        let th = rng.gen_range(0.0..std::f64::consts::TAU);
        m[(i, i)] = Complex64::from_polar(r, th);
        for j in i + 1..dim {
            m[(i, j)] = Complex64::new(rng.gen_range(-0.3..0.3), rng.gen_range(-0.3..0.3));
        }
    }
    m
}

/// Seeded dense matrix scaled to roughly unit operator norm.
pub fn bench_dense(dim: usize, seed: u64) -> ComplexMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries: Vec<Complex64> = (0..dim * dim)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let m = ComplexMatrix::new(dim, entries).unwrap();
    let scale = 1.0 / (dim as f64).sqrt();
    m.scale(Complex64::new(scale, 0.0))
}
