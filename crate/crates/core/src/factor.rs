//! Factorization of a single quadratic form into linear forms.

use crate::error::{Error, Result};
use crate::forms::{cross, invert3, LinearForm3, TernaryQuadratic};
use crate::scalar::{re, Scalar, Tolerance};

/// A splitting p = l1 * l2; the scalar multiplier is absorbed into `l1`
/// and the pair is ordered lexicographically on normalized coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitPair {
    pub l1: LinearForm3,
    pub l2: LinearForm3,
}

impl SplitPair {
    /// Canonicalizes: both factors are normalized to leading coefficient 1,
    /// sorted, and the combined scalar goes into `l1`.
    pub fn new(a: LinearForm3, b: LinearForm3) -> Self {
        let (sa, na) = a.normalized();
        let (sb, nb) = b.normalized();
        let total = sa * sb;
        let (first, second) = if lex_le(&na, &nb) { (na, nb) } else { (nb, na) };
        SplitPair {
            l1: first.scale_by(total),
            l2: second,
        }
    }

    pub fn lines(&self) -> [LinearForm3; 2] {
        [self.l1, self.l2]
    }

    /// Set equality up to projective scaling of each factor.
    pub fn proj_eq(&self, other: &SplitPair, tol: &Tolerance) -> bool {
        (self.l1.proj_eq(&other.l1, tol) && self.l2.proj_eq(&other.l2, tol))
            || (self.l1.proj_eq(&other.l2, tol) && self.l2.proj_eq(&other.l1, tol))
    }
}

fn lex_le(a: &LinearForm3, b: &LinearForm3) -> bool {
    for (x, y) in a.coeffs().iter().zip(b.coeffs().iter()) {
        if x.re != y.re {
            return x.re < y.re;
        }
        if x.im != y.im {
            return x.im < y.im;
        }
    }
    true
}

/// A binary linear form cs*s + ct*t.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinaryLinear {
    pub cs: Scalar,
    pub ct: Scalar,
}

/// Factors A*s^2 + B*s*t + C*t^2 into two binary linear forms via the
/// quadratic formula; A = 0 yields the root at infinity exactly.
pub fn factor_binary_quadratic(
    a: Scalar,
    b: Scalar,
    c: Scalar,
    tol: &Tolerance,
) -> Result<(BinaryLinear, BinaryLinear)> {
    let scale = [a, b, c].iter().map(|v| v.norm()).fold(0.0, f64::max);
    if [a, b, c].iter().all(|v| tol.is_zero(*v, 1.0, 1)) {
        return Err(Error::ZeroForm);
    }
    if tol.is_zero(a, scale, 1) {
        // f = t * (B s + C t)
        return Ok((
            BinaryLinear {
                cs: re(0.0),
                ct: re(1.0),
            },
            BinaryLinear { cs: b, ct: c },
        ));
    }
    // roots of A u^2 + B u + C, stable branch for the square root
    let disc = b * b - 4.0 * a * c;
    let sq = disc.sqrt();
    let s = if (b.conj() * sq).re >= 0.0 { sq } else { -sq };
    let q = -(b + s) / 2.0;
    let (r1, r2) = if q.norm() > 0.0 {
        (q / a, c / q)
    } else {
        (re(0.0), re(0.0))
    };
    Ok((
        BinaryLinear {
            cs: a,
            ct: -a * r1,
        },
        BinaryLinear {
            cs: re(1.0),
            ct: -r2,
        },
    ))
}

/// Degeneracy decision with the raw determinant as witness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Degeneracy {
    pub degenerate: bool,
    pub det: Scalar,
}

/// True iff det(M(p)) vanishes at degree 3 of p's coefficient scale.
pub fn is_degenerate(p: &TernaryQuadratic, tol: &Tolerance) -> Result<Degeneracy> {
    if p.is_zero(tol) {
        return Err(Error::ZeroForm);
    }
    let det = p.to_matrix().det();
    Ok(Degeneracy {
        degenerate: tol.is_zero(det, p.coeff_scale(), 3),
        det,
    })
}

/// Splits a degenerate form into two linear forms.
///
/// Rank 1: the form is a scaled square of its largest matrix row.
/// Rank 2: a kernel vector (the singular point) is completed to a basis,
/// the form pulled back to a binary form, factored, and pushed forward.
pub fn factor_ternary_quadratic(p: &TernaryQuadratic, tol: &Tolerance) -> Result<SplitPair> {
    let deg = is_degenerate(p, tol)?;
    if !deg.degenerate {
        return Err(Error::NotDegenerate { det: deg.det });
    }
    let m = p.to_matrix();
    let scale = p.coeff_scale();

    if m.max_minor2() <= tol.threshold(scale, 2) {
        // rank 1: M = u u^t with u = row_k / sqrt(m_kk); a rank-1 symmetric
        // matrix always has a nonzero diagonal entry
        let mut k = 0;
        for i in 1..3 {
            if m.diag[i].norm() > m.diag[k].norm() {
                k = i;
            }
        }
        let s = m.diag[k].sqrt();
        let row = m.row(k);
        let l = LinearForm3::new(row[0] / s, row[1] / s, row[2] / s);
        return Ok(SplitPair::new(l, l));
    }

    // rank 2: kernel vector from the largest cross product of matrix rows
    // (the adjugate of a rank-2 symmetric matrix has rank 1, its columns
    // are these cross products)
    let rows = [m.row(0), m.row(1), m.row(2)];
    let candidates = [
        cross(&rows[1], &rows[2]),
        cross(&rows[2], &rows[0]),
        cross(&rows[0], &rows[1]),
    ];
    let mut v = candidates[0];
    for c in &candidates[1..] {
        if c.iter().map(|x| x.norm()).fold(0.0, f64::max)
            > v.iter().map(|x| x.norm()).fold(0.0, f64::max)
        {
            v = *c;
        }
    }
    let vmax = v.iter().map(|x| x.norm()).fold(0.0, f64::max);
    debug_assert!(vmax > 0.0);
    let mut k = 0;
    for i in 1..3 {
        if v[i].norm() > v[k].norm() {
            k = i;
        }
    }
    let v = [v[0] / v[k], v[1] / v[k], v[2] / v[k]];

    // basis: the two coordinate axes other than v's largest component,
    // then v itself; det of T is +-v[k] = +-1
    let (i0, i1) = match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let mut t = [[re(0.0); 3]; 3];
    t[i0][0] = re(1.0);
    t[i1][1] = re(1.0);
    for r in 0..3 {
        t[r][2] = v[r];
    }

    let pulled = p.substitute_linear(&t);
    let (bl1, bl2) = factor_binary_quadratic(pulled.cxx, pulled.cxy, pulled.cyy, tol)?;

    let tinv = invert3(&t, tol).expect("basis completion is invertible");
    let push = |bl: &BinaryLinear| {
        let row = [bl.cs, bl.ct, re(0.0)];
        let mut out = [re(0.0); 3];
        for (j, o) in out.iter_mut().enumerate() {
            for (k, r) in row.iter().enumerate() {
                *o += *r * tinv[k][j];
            }
        }
        LinearForm3::new(out[0], out[1], out[2])
    };
    Ok(SplitPair::new(push(&bl1), push(&bl2)))
}

/// Coefficient-wise expansion of l1 * l2; the verification oracle for every
/// splitting in this module.
pub fn expand_product(l1: &LinearForm3, l2: &LinearForm3) -> TernaryQuadratic {
    TernaryQuadratic {
        cxx: l1.a * l2.a,
        cyy: l1.b * l2.b,
        czz: l1.c * l2.c,
        cxy: l1.a * l2.b + l1.b * l2.a,
        cxz: l1.a * l2.c + l1.c * l2.a,
        cyz: l1.b * l2.c + l1.c * l2.b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: [f64; 6]) -> TernaryQuadratic {
        TernaryQuadratic::from_coeffs([re(c[0]), re(c[1]), re(c[2]), re(c[3]), re(c[4]), re(c[5])])
    }

    fn lf(a: f64, b: f64, c: f64) -> LinearForm3 {
        LinearForm3::new(re(a), re(b), re(c))
    }

    fn binary_product(l: &BinaryLinear, m: &BinaryLinear) -> (Scalar, Scalar, Scalar) {
        (l.cs * m.cs, l.cs * m.ct + l.ct * m.cs, l.ct * m.ct)
    }

    #[test]
    fn binary_perfect_powers() {
        let tol = Tolerance::default();
        // s^2
        let (l, m) = factor_binary_quadratic(re(1.0), re(0.0), re(0.0), &tol).unwrap();
        let (a, b, c) = binary_product(&l, &m);
        assert!((a - re(1.0)).norm() < 1e-12 && b.norm() < 1e-12 && c.norm() < 1e-12);
        // (s+t)^2
        let (l, m) = factor_binary_quadratic(re(1.0), re(2.0), re(1.0), &tol).unwrap();
        let (a, b, c) = binary_product(&l, &m);
        assert!((a - re(1.0)).norm() < 1e-12);
        assert!((b - re(2.0)).norm() < 1e-12);
        assert!((c - re(1.0)).norm() < 1e-12);
    }

    #[test]
    fn binary_generic_and_zero() {
        let tol = Tolerance::default();
        // 2s^2 + 3st + t^2 = (2s+t)(s+t)
        let (l, m) = factor_binary_quadratic(re(2.0), re(3.0), re(1.0), &tol).unwrap();
        let (a, b, c) = binary_product(&l, &m);
        assert!((a - re(2.0)).norm() < 1e-12);
        assert!((b - re(3.0)).norm() < 1e-12);
        assert!((c - re(1.0)).norm() < 1e-12);

        assert_eq!(
            factor_binary_quadratic(re(0.0), re(0.0), re(0.0), &tol),
            Err(Error::ZeroForm)
        );
    }

    #[test]
    fn binary_leading_zero_root_at_infinity() {
        let tol = Tolerance::default();
        // st + t^2 = t(s + t)
        let (l, m) = factor_binary_quadratic(re(0.0), re(1.0), re(1.0), &tol).unwrap();
        let (a, b, c) = binary_product(&l, &m);
        assert!(a.norm() < 1e-12);
        assert!((b - re(1.0)).norm() < 1e-12);
        assert!((c - re(1.0)).norm() < 1e-12);
    }

    #[test]
    fn degeneracy_worked_examples() {
        let tol = Tolerance::default();
        // 2x^2 + 2xy + 2xz + y^2 + yz is irreducible, det = -1/2
        let irred = q([2.0, 1.0, 0.0, 2.0, 2.0, 1.0]);
        let d = is_degenerate(&irred, &tol).unwrap();
        assert!(!d.degenerate);
        assert!((d.det - re(-0.5)).norm() < 1e-12);
        // (x+y)(x+y+z)
        let split = q([1.0, 1.0, 0.0, 2.0, 1.0, 1.0]);
        assert!(is_degenerate(&split, &tol).unwrap().degenerate);
        // unit sphere
        let sphere = q([1.0, 1.0, 1.0, 0.0, 0.0, 0.0]);
        let d = is_degenerate(&sphere, &tol).unwrap();
        assert!(!d.degenerate);
        assert!((d.det - re(1.0)).norm() < 1e-12);
        assert_eq!(is_degenerate(&TernaryQuadratic::zero(), &tol), Err(Error::ZeroForm));
    }

    #[test]
    fn factor_worked_examples() {
        let tol = Tolerance::default();
        // x(x+z)
        let s = factor_ternary_quadratic(&q([1.0, 0.0, 0.0, 0.0, 1.0, 0.0]), &tol).unwrap();
        let want = SplitPair::new(lf(1.0, 0.0, 0.0), lf(1.0, 0.0, 1.0));
        assert!(s.proj_eq(&want, &tol));
        // (x+y)(x+y+z)
        let s = factor_ternary_quadratic(&q([1.0, 1.0, 0.0, 2.0, 1.0, 1.0]), &tol).unwrap();
        let want = SplitPair::new(lf(1.0, 1.0, 0.0), lf(1.0, 1.0, 1.0));
        assert!(s.proj_eq(&want, &tol));
        // x^2: rank-1 branch
        let s = factor_ternary_quadratic(&q([1.0, 0.0, 0.0, 0.0, 0.0, 0.0]), &tol).unwrap();
        assert!(s.l1.proj_eq(&lf(1.0, 0.0, 0.0), &tol));
        assert!(s.l2.proj_eq(&lf(1.0, 0.0, 0.0), &tol));
    }

    #[test]
    fn factor_rejects_nondegenerate() {
        let tol = Tolerance::default();
        let sphere = q([1.0, 1.0, 1.0, 0.0, 0.0, 0.0]);
        match factor_ternary_quadratic(&sphere, &tol) {
            Err(Error::NotDegenerate { det }) => assert!((det - re(1.0)).norm() < 1e-12),
            other => panic!("expected NotDegenerate, got {other:?}"),
        }
    }

    #[test]
    fn factorization_reproduces_input() {
        let tol = Tolerance::default();
        let inputs = [
            q([1.0, 0.0, 0.0, 0.0, 1.0, 0.0]),
            q([1.0, 1.0, 0.0, 2.0, 1.0, 1.0]),
            q([0.0, 0.0, 0.0, 1.0, 0.0, 0.0]), // xy
            q([0.0, 1.0, 0.0, 2.0, 0.0, 1.0]), // y(2x+y+z)
            q([1.0, -1.0, 0.0, 0.0, 0.0, 0.0]), // (x-y)(x+y)
        ];
        for p in &inputs {
            let s = factor_ternary_quadratic(p, &tol).unwrap();
            let back = expand_product(&s.l1, &s.l2);
            for (a, b) in p.coeffs().iter().zip(back.coeffs().iter()) {
                assert!(
                    (a - b).norm() <= tol.threshold(p.coeff_scale(), 2),
                    "mismatch for {p:?}: {a} vs {b}"
                );
            }
        }
    }

    #[test]
    fn expand_product_examples() {
        assert_eq!(
            expand_product(&lf(1.0, 0.0, 0.0), &lf(1.0, 0.0, 1.0)),
            q([1.0, 0.0, 0.0, 0.0, 1.0, 0.0])
        );
        assert_eq!(
            expand_product(&lf(1.0, 1.0, 0.0), &lf(1.0, 1.0, 1.0)),
            q([1.0, 1.0, 0.0, 2.0, 1.0, 1.0])
        );
        assert_eq!(
            expand_product(&lf(0.0, 0.0, 1.0), &lf(0.0, 0.0, 1.0)),
            q([0.0, 0.0, 1.0, 0.0, 0.0, 0.0])
        );
    }

    #[test]
    fn split_pair_ordering_deterministic() {
        let tol = Tolerance::default();
        let a = lf(1.0, 0.0, 1.0);
        let b = lf(1.0, 0.0, 0.0);
        let p1 = SplitPair::new(a, b);
        let p2 = SplitPair::new(b, a);
        assert_eq!(p1, p2);
        assert!(p1.l1.proj_eq(&b, &tol)); // x sorts before x + z
    }

    #[test]
    fn exact_integer_oracle_agreement() {
        // det(2M) is integral for integer coefficients; its zeroness must
        // agree with the floating-point degeneracy test
        let tol = Tolerance::default();
        let cases = [
            [1i64, 1, 0, 2, 1, 1],
            [2, 1, 0, 2, 2, 1],
            [1, 0, 0, 0, 1, 0],
            [1, 1, 1, 0, 0, 0],
            [0, 1, 0, 2, 0, 1],
        ];
        for c in &cases {
            let p = q([
                c[0] as f64,
                c[1] as f64,
                c[2] as f64,
                c[3] as f64,
                c[4] as f64,
                c[5] as f64,
            ]);
            let m = [
                [2 * c[0] as i128, c[3] as i128, c[4] as i128],
                [c[3] as i128, 2 * c[1] as i128, c[5] as i128],
                [c[4] as i128, c[5] as i128, 2 * c[2] as i128],
            ];
            let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            let d = is_degenerate(&p, &tol).unwrap();
            assert_eq!(det == 0, d.degenerate, "oracle disagreement for {c:?}");
        }
    }
}
