//! Seeded random inputs for tests, oracles and the sampling CLI commands.

use ndarray::Array2;
use num_complex::Complex;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cmatrix::{dagger, CMat};
use crate::lagrangians::{FieldSample, Metric, Signature};
use crate::Scalar;

/// Deterministic RNG used everywhere sampling is needed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform scalar in [-scale, scale].
pub fn uniform<T: Scalar, R: Rng>(rng: &mut R, scale: f64) -> T {
    T::of(rng.gen_range(-scale..scale))
}

/// Random complex matrix with entries uniform in the unit square.
pub fn random_cmat<T: Scalar, R: Rng>(rng: &mut R, n: usize) -> CMat<T> {
    Array2::from_shape_fn((n, n), |_| {
        Complex::new(uniform(rng, 1.0), uniform(rng, 1.0))
    })
}

/// Random anti-Hermitian matrix, `x - x†`.
pub fn random_antihermitian<T: Scalar, R: Rng>(rng: &mut R, n: usize, scale: f64) -> CMat<T> {
    let x: CMat<T> = Array2::from_shape_fn((n, n), |_| {
        Complex::new(uniform(rng, scale), uniform(rng, scale))
    });
    &x - &dagger(&x)
}

/// Random antisymmetric real d×d array.
pub fn random_antisymmetric<T: Scalar, R: Rng>(rng: &mut R, d: usize, scale: f64) -> Array2<T> {
    let x = Array2::from_shape_fn((d, d), |_| uniform::<T, _>(rng, scale));
    &x - &x.t()
}

/// Random unitary, from Gram-Schmidt on a random complex matrix.
pub fn random_unitary<T: Scalar, R: Rng>(rng: &mut R, n: usize) -> CMat<T> {
    let a = random_cmat::<T, _>(rng, n);
    let mut q: Vec<Vec<Complex<T>>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut v: Vec<Complex<T>> = (0..n).map(|i| a[[i, j]]).collect();
        for u in &q {
            let proj = u
                .iter()
                .zip(v.iter())
                .fold(Complex::new(T::zero(), T::zero()), |s, (&ui, &vi)| {
                    s + ui.conj() * vi
                });
            for (vi, &ui) in v.iter_mut().zip(u.iter()) {
                *vi = *vi - proj * ui;
            }
        }
        let norm = v
            .iter()
            .fold(T::zero(), |s, z| s + z.norm_sqr())
            .sqrt();
        for vi in v.iter_mut() {
            *vi = *vi / Complex::new(norm, T::zero());
        }
        q.push(v);
    }
    Array2::from_shape_fn((n, n), |(i, j)| q[j][i])
}

/// Random field sample: N antisymmetric field strengths on a flat metric.
pub fn random_field_sample<T: Scalar, R: Rng>(
    rng: &mut R,
    d: usize,
    n_gen: usize,
    scale: f64,
    signature: Signature,
    beta: T,
) -> FieldSample<T> {
    let f = (0..n_gen)
        .map(|_| random_antisymmetric(rng, d, scale))
        .collect();
    FieldSample {
        metric: Metric::flat(d, signature),
        f,
        beta,
    }
}
