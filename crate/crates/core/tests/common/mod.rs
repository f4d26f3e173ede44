//! Shared helpers for the integration suites: an exact integer-arithmetic
//! determinant oracle and seeded random generators for Gaussian-integer
//! forms. The oracle is independent of the library's floating-point path.

#![allow(dead_code)]

use conic_pencil::{LinearForm3, Scalar, TernaryQuadratic};
use rand::Rng;

/// Gaussian integer as a pair (re, im).
pub type GInt = (i64, i64);

fn gmul(a: GInt, b: GInt) -> GInt {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn gadd(a: GInt, b: GInt) -> GInt {
    (a.0 + b.0, a.1 + b.1)
}

fn gsub(a: GInt, b: GInt) -> GInt {
    (a.0 - b.0, a.1 - b.1)
}

/// Exact determinant of a 3x3 Gaussian-integer matrix.
pub fn det3_exact(m: &[[GInt; 3]; 3]) -> GInt {
    let minor = |r: usize, c: usize| -> GInt {
        let rows: Vec<usize> = (0..3).filter(|x| *x != r).collect();
        let cols: Vec<usize> = (0..3).filter(|x| *x != c).collect();
        gsub(
            gmul(m[rows[0]][cols[0]], m[rows[1]][cols[1]]),
            gmul(m[rows[0]][cols[1]], m[rows[1]][cols[0]]),
        )
    };
    let mut acc = (0, 0);
    for c in 0..3 {
        let term = gmul(m[0][c], minor(0, c));
        acc = if c == 1 { gsub(acc, term) } else { gadd(acc, term) };
    }
    acc
}

/// Doubled matrix 2*M(p) of an integer-coefficient form; always integral.
pub fn doubled_matrix(c: &[GInt; 6]) -> [[GInt; 3]; 3] {
    let [cxx, cyy, czz, cxy, cxz, cyz] = *c;
    let two = |v: GInt| (2 * v.0, 2 * v.1);
    [
        [two(cxx), cxy, cxz],
        [cxy, two(cyy), cyz],
        [cxz, cyz, two(czz)],
    ]
}

/// det(M(p)) * 8 computed exactly in Gaussian integers.
pub fn det_times8_exact(c: &[GInt; 6]) -> GInt {
    det3_exact(&doubled_matrix(c))
}

/// The four coefficients of det(alpha*2M(p) + beta*2M(q)), each exact and
/// equal to 8 times the corresponding coefficient of the pencil cubic.
pub fn pencil_cubic_times8_exact(p: &[GInt; 6], q: &[GInt; 6]) -> [GInt; 4] {
    let a = doubled_matrix(p);
    let b = doubled_matrix(q);
    let col = |m: &[[GInt; 3]; 3], j: usize| [m[0][j], m[1][j], m[2][j]];
    let det_cols = |c0: [GInt; 3], c1: [GInt; 3], c2: [GInt; 3]| {
        let m = [
            [c0[0], c1[0], c2[0]],
            [c0[1], c1[1], c2[1]],
            [c0[2], c1[2], c2[2]],
        ];
        det3_exact(&m)
    };
    let c3 = det_cols(col(&a, 0), col(&a, 1), col(&a, 2));
    let c2 = gadd(
        gadd(
            det_cols(col(&b, 0), col(&a, 1), col(&a, 2)),
            det_cols(col(&a, 0), col(&b, 1), col(&a, 2)),
        ),
        det_cols(col(&a, 0), col(&a, 1), col(&b, 2)),
    );
    let c1 = gadd(
        gadd(
            det_cols(col(&a, 0), col(&b, 1), col(&b, 2)),
            det_cols(col(&b, 0), col(&a, 1), col(&b, 2)),
        ),
        det_cols(col(&b, 0), col(&b, 1), col(&a, 2)),
    );
    let c0 = det_cols(col(&b, 0), col(&b, 1), col(&b, 2));
    [c3, c2, c1, c0]
}

pub fn gint_to_scalar(g: GInt) -> Scalar {
    Scalar::new(g.0 as f64, g.1 as f64)
}

pub fn form_from_gints(c: &[GInt; 6]) -> TernaryQuadratic {
    TernaryQuadratic::from_coeffs([
        gint_to_scalar(c[0]),
        gint_to_scalar(c[1]),
        gint_to_scalar(c[2]),
        gint_to_scalar(c[3]),
        gint_to_scalar(c[4]),
        gint_to_scalar(c[5]),
    ])
}

/// Small Gaussian integer with components in [-3, 3].
pub fn random_gint<R: Rng>(rng: &mut R) -> GInt {
    (rng.gen_range(-3..=3), rng.gen_range(-3..=3))
}

pub fn random_scalar_gint<R: Rng>(rng: &mut R) -> Scalar {
    gint_to_scalar(random_gint(rng))
}

/// A nonzero line with small Gaussian-integer coefficients.
pub fn random_line<R: Rng>(rng: &mut R) -> LinearForm3 {
    loop {
        let l = LinearForm3::new(
            random_scalar_gint(rng),
            random_scalar_gint(rng),
            random_scalar_gint(rng),
        );
        if l.coeffs().iter().any(|c| c.norm() > 0.0) {
            return l;
        }
    }
}

/// A nonzero quadratic form with small Gaussian-integer coefficients,
/// returned with its exact coefficient list.
pub fn random_int_form<R: Rng>(rng: &mut R) -> ([GInt; 6], TernaryQuadratic) {
    loop {
        let c = [
            random_gint(rng),
            random_gint(rng),
            random_gint(rng),
            random_gint(rng),
            random_gint(rng),
            random_gint(rng),
        ];
        if c.iter().any(|&(a, b)| a != 0 || b != 0) {
            return (c, form_from_gints(&c));
        }
    }
}

/// Cross product line = w x point vanishes at the point; resamples until
/// the line is nonzero.
pub fn random_line_through<R: Rng>(rng: &mut R, point: &[Scalar; 3]) -> LinearForm3 {
    loop {
        let w = [
            random_scalar_gint(rng),
            random_scalar_gint(rng),
            random_scalar_gint(rng),
        ];
        let c = conic_pencil::forms::cross(&w, point);
        if c.iter().any(|v| v.norm() > 0.0) {
            return LinearForm3::new(c[0], c[1], c[2]);
        }
    }
}

/// Scales `l` so it matches the normalization of `reference` (both assumed
/// projectively equal); lets coefficients be compared entrywise.
pub fn align_to(l: &LinearForm3, reference: &LinearForm3) -> LinearForm3 {
    let rc = reference.coeffs();
    let lc = l.coeffs();
    let mut k = 0;
    for i in 1..3 {
        if rc[i].norm() > rc[k].norm() {
            k = i;
        }
    }
    let s = rc[k] / lc[k];
    l.scale_by(s)
}
