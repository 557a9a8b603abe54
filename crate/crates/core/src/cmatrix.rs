//! Small dense complex matrix helpers.
//!
//! Everything here operates on `ndarray::Array2<Complex<T>>` matrices of desk
//! scale (the largest determinant in the crate is over a `2 d n` dimensional
//! space, about 32×32), so a plain partial-pivot LU with no blocking is all
//! that is needed.

use ndarray::Array2;
use num_complex::Complex;

use crate::Scalar;

/// Dense complex matrix.
pub type CMat<T> = Array2<Complex<T>>;

/// n×n identity.
pub fn eye<T: Scalar>(n: usize) -> CMat<T> {
    Array2::from_shape_fn((n, n), |(i, j)| {
        if i == j {
            Complex::new(T::one(), T::zero())
        } else {
            Complex::new(T::zero(), T::zero())
        }
    })
}

/// n×n zero matrix.
pub fn zeros<T: Scalar>(n: usize) -> CMat<T> {
    Array2::from_elem((n, n), Complex::new(T::zero(), T::zero()))
}

/// Conjugate transpose.
pub fn dagger<T: Scalar>(a: &CMat<T>) -> CMat<T> {
    a.t().mapv(|z| z.conj())
}

/// Commutator `[a, b] = ab - ba`.
pub fn commutator<T: Scalar>(a: &CMat<T>, b: &CMat<T>) -> CMat<T> {
    a.dot(b) - b.dot(a)
}

/// Anticommutator `{a, b} = ab + ba`.
pub fn anticommutator<T: Scalar>(a: &CMat<T>, b: &CMat<T>) -> CMat<T> {
    a.dot(b) + b.dot(a)
}

/// Kronecker product; dimensions multiply.
pub fn kron<T: Scalar>(a: &CMat<T>, b: &CMat<T>) -> CMat<T> {
    let (ra, ca) = a.dim();
    let (rb, cb) = b.dim();
    Array2::from_shape_fn((ra * rb, ca * cb), |(i, j)| {
        a[[i / rb, j / cb]] * b[[i % rb, j % cb]]
    })
}

/// Trace.
pub fn trace<T: Scalar>(a: &CMat<T>) -> Complex<T> {
    a.diag().iter().fold(Complex::new(T::zero(), T::zero()), |s, &z| s + z)
}

/// Frobenius norm.
pub fn fro_norm<T: Scalar>(a: &CMat<T>) -> T {
    a.iter().map(|z| z.norm_sqr()).fold(T::zero(), |s, x| s + x).sqrt()
}

/// Largest entry modulus.
pub fn max_norm<T: Scalar>(a: &CMat<T>) -> T {
    a.iter().map(|z| z.norm()).fold(T::zero(), T::max)
}

/// Deviation from anti-Hermiticity, `max |(a + a†)_ij|`.
pub fn antihermiticity_defect<T: Scalar>(a: &CMat<T>) -> T {
    max_norm(&(a + &dagger(a)))
}

/// Determinant by partial-pivot LU factorization.
pub fn det<T: Scalar>(a: &CMat<T>) -> Complex<T> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "determinant of a non-square matrix");
    let mut lu = a.clone();
    let mut d = Complex::new(T::one(), T::zero());
    for k in 0..n {
        // pivot on the largest modulus in column k
        let mut p = k;
        let mut best = lu[[k, k]].norm();
        for i in k + 1..n {
            let m = lu[[i, k]].norm();
            if m > best {
                best = m;
                p = i;
            }
        }
        if best == T::zero() {
            return Complex::new(T::zero(), T::zero());
        }
        if p != k {
            for j in 0..n {
                let t = lu[[k, j]];
                lu[[k, j]] = lu[[p, j]];
                lu[[p, j]] = t;
            }
            d = -d;
        }
        let piv = lu[[k, k]];
        d = d * piv;
        for i in k + 1..n {
            let f = lu[[i, k]] / piv;
            lu[[i, k]] = f;
            for j in k + 1..n {
                let s = lu[[k, j]];
                lu[[i, j]] = lu[[i, j]] - f * s;
            }
        }
    }
    d
}

/// `tr(a^p)` for p = 1..=pmax, returned as `traces[p-1]`.
pub fn power_traces<T: Scalar>(a: &CMat<T>, pmax: usize) -> Vec<Complex<T>> {
    let mut out = Vec::with_capacity(pmax);
    let mut acc = a.clone();
    for p in 1..=pmax {
        out.push(trace(&acc));
        if p < pmax {
            acc = acc.dot(a);
        }
    }
    out
}

/// Real part of a complex scalar that is real up to roundoff; panics in debug
/// builds when the imaginary part is not negligible.
pub fn real_part<T: Scalar>(z: Complex<T>, scale: T) -> T {
    debug_assert!(
        z.im.abs() <= T::of(1e-8) * (scale + z.re.abs() + T::one()),
        "imaginary residue {:?} on a quantity expected real",
        z.im
    );
    z.re
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn kron_shapes_and_identity() {
        let a: CMat<f64> = eye(1);
        assert_eq!(kron(&a, &a), eye(1));
        let b: CMat<f64> = eye(2);
        let m: CMat<f64> = eye(3);
        assert_eq!(kron(&b, &m).dim(), (6, 6));
    }

    #[test]
    fn kron_mixed_product() {
        let mut rng = crate::sample::rng(3);
        let a = crate::sample::random_cmat(&mut rng, 2);
        let b = crate::sample::random_cmat(&mut rng, 3);
        let cm = crate::sample::random_cmat(&mut rng, 2);
        let d = crate::sample::random_cmat(&mut rng, 3);
        let lhs = kron(&a, &b).dot(&kron(&cm, &d));
        let rhs = kron(&a.dot(&cm), &b.dot(&d));
        assert!(fro_norm(&(lhs - rhs)) < 1e-12);
    }

    #[test]
    fn det_small_cases() {
        let mut m: CMat<f64> = zeros(2);
        m[[0, 0]] = c(1.0, 0.0);
        m[[0, 1]] = c(2.0, 0.0);
        m[[1, 0]] = c(3.0, 0.0);
        m[[1, 1]] = c(4.0, 0.0);
        assert!((det(&m) - c(-2.0, 0.0)).norm() < 1e-14);
        // complex 3x3 against cofactor expansion
        let mut rng = crate::sample::rng(11);
        let a = crate::sample::random_cmat(&mut rng, 3);
        let cof = a[[0, 0]] * (a[[1, 1]] * a[[2, 2]] - a[[1, 2]] * a[[2, 1]])
            - a[[0, 1]] * (a[[1, 0]] * a[[2, 2]] - a[[1, 2]] * a[[2, 0]])
            + a[[0, 2]] * (a[[1, 0]] * a[[2, 1]] - a[[1, 1]] * a[[2, 0]]);
        assert!((det(&a) - cof).norm() < 1e-12);
    }

    #[test]
    fn det_multiplicative() {
        let mut rng = crate::sample::rng(5);
        let a = crate::sample::random_cmat(&mut rng, 5);
        let b = crate::sample::random_cmat(&mut rng, 5);
        let lhs = det(&a.dot(&b));
        let rhs = det(&a) * det(&b);
        assert!((lhs - rhs).norm() < 1e-10 * (1.0 + rhs.norm()));
    }
}
