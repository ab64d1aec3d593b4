//! The power barrier `W(r, x_n) = ((x_n/ε)^{2/a} − r²)^{1/b}` with
//! `r = |x'|`, its analytic derivatives, the eight-term decomposition of
//! `(1 + W_r² + W_n²)·F[W]`, and the `ε` selection rule.

use serde::Serialize;

use super::{BarrierError, BarrierParams};

/// Safety shave applied to the derived `ε`; keeps the sign inequalities
/// strict under rounding.
const EPSILON_SAFETY: f64 = 1.0 - 1e-9;

/// `W` and its first and second cylindrical derivatives at `(r, x_n)`.
#[derive(Clone, Copy, Debug)]
pub struct WDerivatives {
    pub w: f64,
    pub w_r: f64,
    pub w_n: f64,
    pub w_rr: f64,
    pub w_rn: f64,
    pub w_nn: f64,
}

/// The eight summands of `(1 + W_r² + W_n²)·F[W]` and their sum. For `b = 2`
/// the pairs `(J₃, J₄)` cancel exactly and `(J₁, J₇)`, `(J₂, J₈)` combine.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct JDecomposition {
    pub j: [f64; 8],
    pub i_plus_j: f64,
    /// `1 + W_r² + W_n²`.
    pub prefactor: f64,
}

/// Common powers of `W` and `x_n/ε` shared by every evaluation.
struct Kernel {
    w: f64,
    p: f64,
    inv_e: f64,
}

fn kernel(params: &BarrierParams, r: f64, x_n: f64) -> Result<Kernel, BarrierError> {
    if !(x_n > 0.0) {
        return Err(BarrierError::NonpositiveHeight);
    }
    if r < 0.0 {
        return Err(BarrierError::BadParams(format!("radius must be nonnegative, got {r}")));
    }
    let inv_e = 1.0 / params.epsilon;
    let p = x_n * inv_e;
    let radicand = p.powf(2.0 / params.a) - r * r;
    if !(radicand > 0.0) {
        return Err(BarrierError::OutsideSupport);
    }
    Ok(Kernel { w: radicand.powf(1.0 / params.b), p, inv_e })
}

/// `W(r, x_n) = ((x_n/ε)^{2/a} − r²)^{1/b}`.
pub fn eval_w(params: &BarrierParams, r: f64, x_n: f64) -> Result<f64, BarrierError> {
    kernel(params, r, x_n).map(|k| k.w)
}

/// The five closed-form derivatives.
pub fn eval_w_derivatives(
    params: &BarrierParams,
    r: f64,
    x_n: f64,
) -> Result<WDerivatives, BarrierError> {
    let (a, b) = (params.a, params.b);
    let k = kernel(params, r, x_n)?;
    let (w, p, inv_e) = (k.w, k.p, k.inv_e);

    let w1b = w.powf(1.0 - b);
    let w12b = w.powf(1.0 - 2.0 * b);

    let w_r = -(2.0 / b) * w1b * r;
    let w_n = (2.0 / (a * b)) * w1b * p.powf(2.0 / a - 1.0) * inv_e;
    let w_rr = (4.0 * (1.0 - b) / (b * b)) * w12b * r * r - (2.0 / b) * w1b;
    let w_nn = (4.0 * (1.0 - b) / (a * a * b * b)) * w12b * p.powf(4.0 / a - 2.0) * inv_e * inv_e
        + (2.0 * (2.0 - a) / (a * a * b)) * w1b * p.powf(2.0 / a - 2.0) * inv_e * inv_e;
    let w_rn = (4.0 * (b - 1.0) / (a * b * b)) * w12b * p.powf(2.0 / a - 1.0) * r * inv_e;

    Ok(WDerivatives { w, w_r, w_n, w_rr, w_rn, w_nn })
}

/// The eight-term decomposition of `(1 + W_r² + W_n²)·F[W]`.
pub fn eval_j_decomposition(
    params: &BarrierParams,
    r: f64,
    x_n: f64,
) -> Result<JDecomposition, BarrierError> {
    let (a, b) = (params.a, params.b);
    let n = params.n as f64;
    let k = kernel(params, r, x_n)?;
    let (w, p) = (k.w, k.p);
    let inv_e2 = k.inv_e * k.inv_e;

    let w1b = w.powf(1.0 - b);
    let w12b = w.powf(1.0 - 2.0 * b);
    let w33b = w.powf(3.0 - 3.0 * b);
    let w22b = w.powf(2.0 - 2.0 * b);
    let p42 = p.powf(4.0 / a - 2.0);
    let p22 = p.powf(2.0 / a - 2.0);
    let r2 = r * r;

    let j = [
        4.0 * (n + 1.0 - b) / (b * b) * w12b * r2,
        (1.0 - n) * (2.0 / b) * w1b,
        (1.0 - n) * (8.0 / (a * a * b * b * b)) * w33b * p42 * inv_e2,
        4.0 * (n + 1.0 - b) / (a * a * b * b) * w12b * p42 * inv_e2,
        2.0 * (2.0 - a) / (a * a * b) * w1b * p22 * inv_e2,
        8.0 * (2.0 - a) / (a * a * b * b * b) * w33b * r2 * p22 * inv_e2,
        (2.0 - n) * (8.0 / (b * b * b)) * w33b * r2,
        n / w,
    ];
    // Adjacent grouping keeps the b = 2 cancellation of J₃ + J₄ exact.
    let i_plus_j = ((j[0] + j[1]) + (j[2] + j[3])) + ((j[4] + j[5]) + (j[6] + j[7]));
    let prefactor =
        1.0 + (4.0 / (b * b)) * w22b * r2 + (4.0 / (a * a * b * b)) * w22b * p42 * inv_e2;

    Ok(JDecomposition { j, i_plus_j, prefactor })
}

/// `F[W]` via the decomposition: `(I + J) / (1 + W_r² + W_n²)`.
pub fn eval_f_of_w(params: &BarrierParams, r: f64, x_n: f64) -> Result<f64, BarrierError> {
    let d = eval_j_decomposition(params, r, x_n)?;
    Ok(d.i_plus_j / d.prefactor)
}

/// `F[W]` assembled directly from the operator and the five derivatives:
/// `ΔW − W_iW_jW_ij/(1+|∇W|²) + n/W` with the cylindrical Laplacian
/// `(n−2)W_r/r + W_rr + W_nn`. Independent algebraic route used to
/// cross-check [`eval_f_of_w`].
pub fn eval_f_direct(params: &BarrierParams, r: f64, x_n: f64) -> Result<f64, BarrierError> {
    let b = params.b;
    let n = params.n as f64;
    let d = eval_w_derivatives(params, r, x_n)?;
    // W_r / r stays finite on the axis: −(2/b) W^{1−b}.
    let wr_over_r = -(2.0 / b) * d.w.powf(1.0 - b);
    let laplacian = (n - 2.0) * wr_over_r + d.w_rr + d.w_nn;
    let g = 1.0 + d.w_r * d.w_r + d.w_n * d.w_n;
    let quad = d.w_r * d.w_r * d.w_rr + 2.0 * d.w_r * d.w_n * d.w_rn + d.w_n * d.w_n * d.w_nn;
    Ok(laplacian - quad / g + n / d.w)
}

/// The `ε` making the global power barrier a super-solution on an
/// `(a, η)`-type domain of diameter `d_Ω`:
///
/// `ε = min{ η, ((a−2)/a²)^{a/2} · d_Ω^{1−a} } · (1 − 1e−9)`.
///
/// The first term keeps `W ≥ 0` on the boundary (support covers the
/// domain), the second makes the sign bracket
/// `1 + ((2−a)/a²) x_n^{2/a−2} ε^{−2/a}` nonpositive up to `x_n = d_Ω`.
pub fn choose_epsilon(a: f64, eta: f64, d_omega: f64) -> Result<f64, BarrierError> {
    if !(a > 2.0) {
        return Err(BarrierError::WrongFamily(format!(
            "epsilon selection applies to the a > 2 regime, got a = {a}"
        )));
    }
    if !(eta > 0.0 && d_omega > 0.0) {
        return Err(BarrierError::BadParams(
            "eta and the diameter must be positive".to_string(),
        ));
    }
    let sign_bound = ((a - 2.0) / (a * a)).powf(a / 2.0) * d_omega.powf(1.0 - a);
    Ok(eta.min(sign_bound) * EPSILON_SAFETY)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn global(a: f64, eps: f64, n: usize) -> BarrierParams {
        BarrierParams::power_global(a, eps, n).unwrap()
    }

    #[test]
    fn w_plug_in_values() {
        // ((1)^{2/3})^{1/2} = 1
        let p = global(3.0, 1.0, 2);
        assert!((eval_w(&p, 0.0, 1.0).unwrap() - 1.0).abs() < 1e-15);
        // a=4: 16^{1/2} = 4, then sqrt 4 = 2.
        let p = global(4.0, 1.0, 2);
        assert!((eval_w(&p, 0.0, 16.0).unwrap() - 2.0).abs() < 1e-14);
    }

    #[test]
    fn w_outside_support_errors() {
        let p = global(3.0, 1.0, 2);
        assert!(matches!(eval_w(&p, 2.0, 1e-6), Err(BarrierError::OutsideSupport)));
        assert!(matches!(eval_w(&p, 0.0, 0.0), Err(BarrierError::NonpositiveHeight)));
    }

    #[test]
    fn derivatives_vanish_on_axis() {
        let p = global(3.0, 1.0, 2);
        let d = eval_w_derivatives(&p, 0.0, 1.0).unwrap();
        assert_eq!(d.w_r, 0.0);
        assert_eq!(d.w_rn, 0.0);
    }

    /// Central finite differences of `eval_w` confirm all five closed forms.
    #[test]
    fn derivatives_match_finite_differences() {
        let cases = [
            (global(3.0, 0.037, 2), 0.3, 0.8),
            (global(2.5, 0.2, 3), 0.1, 0.5),
            (BarrierParams::power_local(1.5, 2.5, 2).unwrap(), 0.05, 0.2),
        ];
        let h = 1e-6;
        for (p, r, xn) in cases {
            let d = eval_w_derivatives(&p, r, xn).unwrap();
            let w = |r: f64, xn: f64| eval_w(&p, r, xn).unwrap();
            let fd_r = (w(r + h, xn) - w(r - h, xn)) / (2.0 * h);
            let fd_n = (w(r, xn + h) - w(r, xn - h)) / (2.0 * h);
            let fd_rr = (w(r + h, xn) - 2.0 * w(r, xn) + w(r - h, xn)) / (h * h);
            let fd_nn = (w(r, xn + h) - 2.0 * w(r, xn) + w(r, xn - h)) / (h * h);
            let fd_rn = (w(r + h, xn + h) - w(r + h, xn - h) - w(r - h, xn + h)
                + w(r - h, xn - h))
                / (4.0 * h * h);
            assert!((d.w_r - fd_r).abs() <= 1e-6 * fd_r.abs().max(1.0), "w_r");
            assert!((d.w_n - fd_n).abs() <= 1e-6 * fd_n.abs().max(1.0), "w_n");
            assert!((d.w_rr - fd_rr).abs() <= 1e-4 * fd_rr.abs().max(1.0), "w_rr");
            assert!((d.w_nn - fd_nn).abs() <= 1e-4 * fd_nn.abs().max(1.0), "w_nn");
            assert!((d.w_rn - fd_rn).abs() <= 1e-4 * fd_rn.abs().max(1.0), "w_rn");
        }
    }

    /// Worked example: a=2 (taken in the raw formulas), b=2, ε=1, r=0.6,
    /// x_n=1 gives W = 0.8 and W_n = (2/(ab))·W^{−1} = 0.625, matching the
    /// derivative of sqrt(x_n − r²) directly.
    #[test]
    fn w_n_closed_form_value() {
        let p = BarrierParams {
            family: super::super::BarrierFamily::PowerGlobal,
            a: 2.0,
            b: 2.0,
            epsilon: 1.0,
            n: 2,
        };
        let d = eval_w_derivatives(&p, 0.6, 1.0).unwrap();
        assert!((d.w - 0.8).abs() < 1e-15);
        assert!((d.w_n - 0.625).abs() < 1e-14, "w_n = {}", d.w_n);
    }

    #[test]
    fn j3_plus_j4_cancels_for_b_two() {
        let p = global(2.5, 0.1, 3);
        for &(r, xn) in &[(0.0, 0.4), (0.2, 0.9), (0.05, 0.1)] {
            let d = eval_j_decomposition(&p, r, xn).unwrap();
            assert_eq!(d.j[2] + d.j[3], 0.0, "J3+J4 at ({r}, {xn})");
        }
    }

    /// For b = 2 the whole sum collapses to
    /// `W^{−3}(x_n/ε)^{2/a}·[1 + (2−a)/a² · x_n^{2/a−2} ε^{−2/a}]`.
    #[test]
    fn collapsed_form_matches_sum() {
        let p = global(3.0, 1.0 / 27.0, 2);
        for &(r, xn) in &[(0.1, 0.5), (0.0, 0.2), (0.4, 0.8)] {
            let d = eval_j_decomposition(&p, r, xn).unwrap();
            let w = eval_w(&p, r, xn).unwrap();
            let s = (xn / p.epsilon).powf(2.0 / p.a);
            let bracket = 1.0
                + (2.0 - p.a) / (p.a * p.a)
                    * xn.powf(2.0 / p.a - 2.0)
                    * (1.0 / p.epsilon).powf(2.0 / p.a);
            let collapsed = w.powf(-3.0) * s * bracket;
            let rel = (d.i_plus_j - collapsed).abs() / collapsed.abs();
            assert!(rel < 1e-12, "rel = {rel:.3e} at ({r}, {xn})");
        }
    }

    #[test]
    fn f_routes_agree() {
        let cases = [
            (global(3.0, 0.03, 2), 0.3, 0.8),
            (global(10.0, 0.5, 5), 0.7, 0.9),
            (BarrierParams::power_local(1.2, 2.8, 3).unwrap(), 0.01, 0.05),
        ];
        for (p, r, xn) in cases {
            let via_sum = eval_f_of_w(&p, r, xn).unwrap();
            let direct = eval_f_direct(&p, r, xn).unwrap();
            let rel = (via_sum - direct).abs() / direct.abs().max(1e-300);
            assert!(rel < 1e-10, "rel = {rel:.3e}");
        }
    }

    #[test]
    fn epsilon_selection_examples() {
        // Second (sign) term binds: ((a−2)/a²)^{a/2} d^{1−a}.
        let e = choose_epsilon(3.0, 1.0, 1.0).unwrap();
        assert!((e - (1.0f64 / 27.0) * EPSILON_SAFETY).abs() < 1e-18);
        let e = choose_epsilon(4.0, 10.0, 1.0).unwrap();
        assert!((e - (1.0f64 / 64.0) * EPSILON_SAFETY).abs() < 1e-17);
        // First (eta) term binds.
        let e = choose_epsilon(3.0, 0.001, 1.0).unwrap();
        assert!((e - 0.001 * EPSILON_SAFETY).abs() < 1e-18);
        assert!(choose_epsilon(2.0, 1.0, 1.0).is_err());
    }

    /// An oversized ε flips the sign bracket near the top of the domain.
    #[test]
    fn oversized_epsilon_turns_f_positive() {
        let a = 2.5;
        let d_omega = 1.0;
        let eps_ok = choose_epsilon(a, 10.0, d_omega).unwrap();
        let p_bad = global(a, eps_ok * 4.0, 2);
        let f = eval_f_of_w(&p_bad, 0.05, d_omega).unwrap();
        assert!(f > 0.0, "expected positive F, got {f}");
        let p_good = global(a, eps_ok, 2);
        let f = eval_f_of_w(&p_good, 0.05, d_omega).unwrap();
        assert!(f <= 0.0, "expected nonpositive F, got {f}");
    }
}
