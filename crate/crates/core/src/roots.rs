//! Projective roots of the determinant cubic.

use crate::forms::{BinaryCubic, Direction};
use crate::scalar::{re, Scalar, Tolerance};

/// Distinct projective roots of a homogeneous binary cubic that is not
/// identically zero. Roots at (1:0) and (0:1) come from exact deflation of
/// vanishing leading/trailing coefficients; the remaining polynomial of
/// degree <= 3 is solved in closed form and each root Newton-polished.
pub fn cubic_directions(cubic: &BinaryCubic, tol: &Tolerance, pencil_scale: f64) -> Vec<Direction> {
    let thr = tol.threshold(pencil_scale, 3);
    let mut coeffs: Vec<Scalar> = vec![cubic.c3, cubic.c2, cubic.c1, cubic.c0];
    let mut roots: Vec<Direction> = Vec::new();

    // leading zeros: root at beta = 0, i.e. (1:0)
    while coeffs.len() > 1 && coeffs[0].norm() <= thr {
        coeffs.remove(0);
        if roots.is_empty() {
            roots.push(Direction::new(re(1.0), re(0.0)));
        }
    }
    let had_infinity = !roots.is_empty();
    // trailing zeros: root at alpha = 0, i.e. (0:1)
    let mut had_origin = false;
    while coeffs.len() > 1 && coeffs[coeffs.len() - 1].norm() <= thr {
        coeffs.pop();
        had_origin = true;
    }
    if had_origin {
        roots.push(Direction::new(re(0.0), re(1.0)));
    }

    // coeffs now describes g(t) with t = alpha/beta, nonzero ends
    let finite = match coeffs.len() {
        1 => Vec::new(),
        2 => vec![-coeffs[1] / coeffs[0]],
        3 => solve_quadratic(coeffs[0], coeffs[1], coeffs[2]),
        4 => solve_cubic(coeffs[0], coeffs[1], coeffs[2], coeffs[3]),
        _ => unreachable!(),
    };
    for t in finite {
        let t = polish(&coeffs, t);
        roots.push(Direction::new(t, re(1.0)).normalized());
    }

    // deduplicate projectively
    let mut distinct: Vec<Direction> = Vec::new();
    for r in roots {
        if !distinct.iter().any(|d| d.proj_eq(&r, tol)) {
            distinct.push(r.normalized());
        }
    }
    let _ = had_infinity;
    distinct
}

fn polish(coeffs: &[Scalar], mut t: Scalar) -> Scalar {
    for _ in 0..24 {
        let mut f = re(0.0);
        let mut df = re(0.0);
        for &c in coeffs {
            df = df * t + f;
            f = f * t + c;
        }
        if df.norm() == 0.0 {
            break;
        }
        let step = f / df;
        t -= step;
        if step.norm() <= 1e-15 * t.norm().max(1.0) {
            break;
        }
    }
    t
}

/// Roots of a*t^2 + b*t + c with a stable branch choice for the square root.
fn solve_quadratic(a: Scalar, b: Scalar, c: Scalar) -> Vec<Scalar> {
    let disc = b * b - 4.0 * a * c;
    let sq = disc.sqrt();
    // pick the sign that avoids cancellation in b + sq
    let s = if (b.conj() * sq).re >= 0.0 { sq } else { -sq };
    let q = -(b + s) / 2.0;
    if q.norm() > 0.0 {
        vec![q / a, c / q]
    } else {
        // b and disc both vanish: double root at 0 of the shifted poly
        vec![re(0.0), re(0.0)]
    }
}

/// Roots of a*t^3 + b*t^2 + c*t + d via Cardano over C.
fn solve_cubic(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Vec<Scalar> {
    // depress: t = s - b/(3a), s^3 + p s + q = 0
    let shift = b / (3.0 * a);
    let p = c / a - shift * shift * 3.0;
    let q = d / a - shift * (c / a) + shift * shift * shift * 2.0;

    let half_q = q / 2.0;
    let disc = half_q * half_q + (p / 3.0) * (p / 3.0) * (p / 3.0);
    let sq = disc.sqrt();
    // choose the branch maximizing |u^3| for stability
    let u3a = -half_q + sq;
    let u3b = -half_q - sq;
    let u3 = if u3a.norm() >= u3b.norm() { u3a } else { u3b };

    if u3.norm() == 0.0 {
        // triple root
        return vec![-shift, -shift, -shift];
    }
    let u = u3.powf(1.0 / 3.0);
    let omega = Scalar::new(-0.5, 0.75f64.sqrt());
    let mut out = Vec::with_capacity(3);
    let mut uk = u;
    for _ in 0..3 {
        let s = uk - p / (3.0 * uk);
        out.push(s - shift);
        uk *= omega;
    }
    out
}
