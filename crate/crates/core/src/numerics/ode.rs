//! Adaptive embedded Runge-Kutta integration (Dormand-Prince 5(4)).
//!
//! The integrator runs forward or backward in the independent variable,
//! reports every accepted step to an observer, and lets the observer stop
//! the run early (used for blow-up guards and singular-curve events).

use thiserror::Error;

use crate::Scalar;

#[derive(Debug, Error)]
pub enum OdeError {
    #[error("step size underflow at t = {t}")]
    StepUnderflow { t: f64 },
    #[error("exceeded {0} steps")]
    TooManySteps(usize),
}

/// Observer verdict after an accepted step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Control {
    Continue,
    Stop,
}

#[derive(Debug, Clone, Copy)]
pub struct OdeOptions<T> {
    pub rtol: T,
    pub atol: T,
    pub max_steps: usize,
    /// Initial step magnitude; defaults to |t1 - t0| / 100.
    pub h_init: Option<T>,
}

impl<T: Scalar> Default for OdeOptions<T> {
    fn default() -> Self {
        OdeOptions {
            rtol: T::of(1e-10),
            atol: T::of(1e-12),
            max_steps: 2_000_000,
            h_init: None,
        }
    }
}

/// Outcome of an integration run.
#[derive(Debug, Clone)]
pub struct OdeResult<T> {
    pub t: T,
    pub y: Vec<T>,
    pub steps: usize,
    /// True when the observer requested an early stop.
    pub stopped: bool,
}

// Dormand-Prince 5(4) tableau.
const A: [[f64; 6]; 6] = [
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
const C: [f64; 6] = [1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

/// Integrates `dy/dt = f(t, y)` from `t0` to `t1` (either direction).
///
/// `observer` is called with every accepted `(t, y)` including the initial
/// state; returning [`Control::Stop`] ends the run at that point.
pub fn integrate<T, F, O>(
    mut f: F,
    t0: T,
    t1: T,
    y0: &[T],
    opts: &OdeOptions<T>,
    mut observer: O,
) -> Result<OdeResult<T>, OdeError>
where
    T: Scalar,
    F: FnMut(T, &[T], &mut [T]),
    O: FnMut(T, &[T]) -> Control,
{
    let dim = y0.len();
    let dir = if t1 >= t0 { T::one() } else { -T::one() };
    let span = (t1 - t0).abs();
    let mut h = opts.h_init.unwrap_or(span / T::of(100.0)).min(span);
    let mut t = t0;
    let mut y = y0.to_vec();

    if observer(t, &y) == Control::Stop {
        return Ok(OdeResult { t, y, steps: 0, stopped: true });
    }

    let mut k = vec![vec![T::zero(); dim]; 7];
    let mut steps = 0usize;
    f(t, &y, &mut k[0]);

    while (t1 - t) * dir > T::zero() {
        if steps >= opts.max_steps {
            return Err(OdeError::TooManySteps(opts.max_steps));
        }
        h = h.min((t1 - t).abs());
        if h <= (T::epsilon() * T::of(16.0)) * t.abs().max(T::one()) {
            return Err(OdeError::StepUnderflow { t: t.lossy_f64() });
        }
        let hs = h * dir;

        let mut ytmp = vec![T::zero(); dim];
        for (stage, arow) in A.iter().enumerate() {
            for i in 0..dim {
                let mut acc = T::zero();
                for (j, kj) in k.iter().enumerate().take(stage + 1) {
                    let aij = T::of(arow[j]);
                    if arow[j] != 0.0 {
                        acc = acc + aij * kj[i];
                    }
                }
                ytmp[i] = y[i] + hs * acc;
            }
            let ts = t + hs * T::of(C[stage]);
            let (head, tail) = k.split_at_mut(stage + 1);
            let _ = head;
            f(ts, &ytmp, &mut tail[0]);
        }
        // 5th order solution is stage 6 combination (FSAL: k[6] = f at y_new)
        let ynew = ytmp.clone();

        // embedded error estimate
        let mut errsq = T::zero();
        for i in 0..dim {
            let mut e = T::zero();
            for (j, kj) in k.iter().enumerate() {
                if E[j] != 0.0 {
                    e = e + T::of(E[j]) * kj[i];
                }
            }
            e = e * hs;
            let sc = opts.atol + opts.rtol * y[i].abs().max(ynew[i].abs());
            let q = e / sc;
            errsq = errsq + q * q;
        }
        let err = (errsq / T::of(dim as f64)).sqrt();

        if err <= T::one() {
            t = t + hs;
            y = ynew;
            k[0] = k[6].clone(); // FSAL
            steps += 1;
            if observer(t, &y) == Control::Stop {
                return Ok(OdeResult { t, y, steps, stopped: true });
            }
        }
        let order_root = T::of(0.2);
        let fac = if err == T::zero() {
            T::of(5.0)
        } else {
            (T::of(0.9) * err.powf(-order_root)).max(T::of(0.2)).min(T::of(5.0))
        };
        h = h * fac;
    }
    Ok(OdeResult { t, y, steps, stopped: false })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_oscillator_roundtrip() {
        let opts = OdeOptions::default();
        let res = integrate(
            |_t, y: &[f64], dy: &mut [f64]| {
                dy[0] = y[1];
                dy[1] = -y[0];
            },
            0.0,
            2.0 * std::f64::consts::PI,
            &[1.0, 0.0],
            &opts,
            |_, _| Control::Continue,
        )
        .unwrap();
        assert!((res.y[0] - 1.0).abs() < 1e-8);
        assert!(res.y[1].abs() < 1e-8);
    }

    #[test]
    fn backward_integration() {
        let opts = OdeOptions::default();
        let res = integrate(
            |_t, y: &[f64], dy: &mut [f64]| dy[0] = y[0],
            1.0,
            0.0,
            &[std::f64::consts::E],
            &opts,
            |_, _| Control::Continue,
        )
        .unwrap();
        assert!((res.y[0] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn observer_stops_early() {
        let opts = OdeOptions::default();
        let res = integrate(
            |_t, _y: &[f64], dy: &mut [f64]| dy[0] = 1.0,
            0.0,
            10.0,
            &[0.0],
            &opts,
            |_t, y| if y[0] > 1.0 { Control::Stop } else { Control::Continue },
        )
        .unwrap();
        assert!(res.stopped);
        assert!(res.t < 10.0);
    }
}
