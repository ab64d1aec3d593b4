//! The flat barrier `U(x_n) = (n+1)² x_n^{1/(n+1)} − x_n^{2−1/(n+1)}` for
//! arbitrary bounded convex domains normalized to diameter ≤ 1. It depends
//! on the height above the supporting hyperplane only, and satisfies
//!
//! `U (1 + U_n²) F[U] = U·U_nn + n(1 + U_n²) ≤ −6n² + 3n + 2 < 0`
//!
//! on `(0, 1]`, so `F[U] < 0` with a dimension-only margin.

use super::BarrierError;

/// Flat barrier value, derivatives and the sign certificate
/// `lhs = U·U_nn + n(1 + U_n²)`.
#[derive(Clone, Copy, Debug)]
pub struct FlatBarrier {
    pub u: f64,
    pub u_n: f64,
    pub u_nn: f64,
    pub lhs: f64,
}

/// The certified upper bound for `lhs`: `−6n² + 3n + 2`.
pub fn flat_barrier_bound(n: usize) -> f64 {
    let n = n as f64;
    -6.0 * n * n + 3.0 * n + 2.0
}

/// Evaluate the flat barrier at height `x_n ∈ (0, 1]`.
pub fn eval_flat_barrier(n: usize, x_n: f64) -> Result<FlatBarrier, BarrierError> {
    if n < 2 {
        return Err(BarrierError::BadParams(format!("dimension must be >= 2, got {n}")));
    }
    if !(x_n > 0.0 && x_n <= 1.0) {
        return Err(BarrierError::BadParams(format!(
            "flat barrier is defined for x_n in (0, 1], got {x_n}"
        )));
    }
    let nf = n as f64;
    let beta = 1.0 / (nf + 1.0);
    let u = (nf + 1.0) * (nf + 1.0) * x_n.powf(beta) - x_n.powf(2.0 - beta);
    let u_n = (nf + 1.0) * x_n.powf(beta - 1.0) - (2.0 - beta) * x_n.powf(1.0 - beta);
    let u_nn =
        -nf * x_n.powf(beta - 2.0) - (2.0 - beta) * (1.0 - beta) * x_n.powf(-beta);
    let lhs = u * u_nn + nf * (1.0 + u_n * u_n);
    Ok(FlatBarrier { u, u_n, u_nn, lhs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_at_one_for_n_two() {
        let f = eval_flat_barrier(2, 1.0).unwrap();
        assert!((f.u - 8.0).abs() < 1e-12); // 9 − 1
    }

    #[test]
    fn positive_near_zero() {
        for n in 2..=5 {
            let f = eval_flat_barrier(n, 1e-12).unwrap();
            assert!(f.u > 0.0);
        }
    }

    #[test]
    fn lhs_below_dimensional_bound() {
        for n in 2..=5usize {
            let bound = flat_barrier_bound(n);
            for k in 1..=10_000 {
                let x = k as f64 / 10_000.0;
                let f = eval_flat_barrier(n, x).unwrap();
                assert!(
                    f.lhs <= bound + 1e-9,
                    "n = {n}, x = {x}: lhs = {} > {bound}",
                    f.lhs
                );
            }
        }
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let h = 1e-7;
        for &x in &[0.2, 0.5, 0.9] {
            let f = eval_flat_barrier(3, x).unwrap();
            let u = |x: f64| eval_flat_barrier(3, x).unwrap().u;
            let fd_n = (u(x + h) - u(x - h)) / (2.0 * h);
            let fd_nn = (u(x + h) - 2.0 * u(x) + u(x - h)) / (h * h);
            assert!((f.u_n - fd_n).abs() < 1e-5 * fd_n.abs().max(1.0));
            assert!((f.u_nn - fd_nn).abs() < 1e-3 * fd_nn.abs().max(1.0));
        }
    }

    #[test]
    fn domain_guard() {
        assert!(eval_flat_barrier(2, 0.0).is_err());
        assert!(eval_flat_barrier(2, 1.1).is_err());
        assert!(eval_flat_barrier(1, 0.5).is_err());
    }
}
