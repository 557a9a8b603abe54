//! Quadrature: adaptive Simpson on closures, composite Simpson on
//! non-uniform stored grids.

use crate::Scalar;

fn simpson_panel<T: Scalar, F: Fn(T) -> T>(f: &F, a: T, fa: T, b: T, fb: T) -> (T, T, T) {
    let m = (a + b) / T::of(2.0);
    let fm = f(m);
    let s = (b - a) / T::of(6.0) * (fa + T::of(4.0) * fm + fb);
    (m, fm, s)
}

fn adapt<T: Scalar, F: Fn(T) -> T>(
    f: &F,
    a: T,
    fa: T,
    b: T,
    fb: T,
    whole: T,
    m: T,
    fm: T,
    tol: T,
    depth: usize,
) -> T {
    let (lm, flm, left) = simpson_panel(f, a, fa, m, fm);
    let (rm, frm, right) = simpson_panel(f, m, fm, b, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= T::of(15.0) * tol {
        left + right + delta / T::of(15.0)
    } else {
        let half = tol / T::of(2.0);
        adapt(f, a, fa, m, fm, left, lm, flm, half, depth - 1)
            + adapt(f, m, fm, b, fb, right, rm, frm, half, depth - 1)
    }
}

/// Adaptive Simpson integral of `f` over `[a, b]` to absolute tolerance `tol`.
pub fn adaptive_simpson<T: Scalar, F: Fn(T) -> T>(f: F, a: T, b: T, tol: T) -> T {
    let fa = f(a);
    let fb = f(b);
    let (m, fm, whole) = simpson_panel(&f, a, fa, b, fb);
    adapt(&f, a, fa, b, fb, whole, m, fm, tol, 48)
}

/// Composite Simpson on a non-uniform grid of `(x, f(x))` samples.
///
/// Fits a quadratic through consecutive point triples; falls back to the
/// trapezoid rule on a final unpaired interval. Needs at least two samples.
pub fn simpson_nonuniform<T: Scalar>(points: &[(T, T)]) -> Option<T> {
    if points.len() < 2 {
        return None;
    }
    let mut total = T::zero();
    let mut i = 0;
    while i + 2 < points.len() {
        let (x0, f0) = points[i];
        let (x1, f1) = points[i + 1];
        let (x2, f2) = points[i + 2];
        let h0 = x1 - x0;
        let h1 = x2 - x1;
        let h = h0 + h1;
        // exact for quadratics on unequal spacing
        let six = T::of(6.0);
        total = total
            + h / six
                * ((T::of(2.0) - h1 / h0) * f0
                    + h * h / (h0 * h1) * f1
                    + (T::of(2.0) - h0 / h1) * f2);
        i += 2;
    }
    if i + 1 < points.len() {
        let (x0, f0) = points[i];
        let (x1, f1) = points[i + 1];
        total = total + (x1 - x0) * (f0 + f1) / T::of(2.0);
    }
    Some(total)
}
