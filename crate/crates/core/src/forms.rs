//! Value types for linear forms, quadratic forms and their symmetric
//! matrices, plus the substitution and determinant machinery.
//!
//! The fixed monomial order (x^2, y^2, z^2, xy, xz, yz) is the canonical
//! serialization order everywhere.

use crate::scalar::{max_norm, proportional, re, Scalar, Tolerance};

/// A linear form a*x + b*y + c*z, i.e. a projective line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearForm3 {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
}

impl LinearForm3 {
    pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Self {
        LinearForm3 { a, b, c }
    }

    pub fn coeffs(&self) -> [Scalar; 3] {
        [self.a, self.b, self.c]
    }

    pub fn coeff_scale(&self) -> f64 {
        max_norm(&self.coeffs())
    }

    pub fn is_zero(&self, tol: &Tolerance) -> bool {
        self.coeffs().iter().all(|c| tol.is_zero(*c, 1.0, 1))
    }

    /// Splits the form as `scale * normalized`, where the first
    /// largest-magnitude coefficient of `normalized` is exactly 1.
    pub fn normalized(&self) -> (Scalar, LinearForm3) {
        let cs = self.coeffs();
        let mut k = 0;
        for i in 1..3 {
            if cs[i].norm() > cs[k].norm() {
                k = i;
            }
        }
        let s = cs[k];
        if s.norm() == 0.0 {
            return (re(0.0), *self);
        }
        (s, LinearForm3::new(cs[0] / s, cs[1] / s, cs[2] / s))
    }

    /// Projective equality: one form is a nonzero multiple of the other.
    pub fn proj_eq(&self, other: &LinearForm3, tol: &Tolerance) -> bool {
        proportional(&self.coeffs(), &other.coeffs(), tol)
    }

    pub fn eval(&self, x: Scalar, y: Scalar, z: Scalar) -> Scalar {
        self.a * x + self.b * y + self.c * z
    }

    pub fn scale_by(&self, s: Scalar) -> LinearForm3 {
        LinearForm3::new(self.a * s, self.b * s, self.c * s)
    }

    /// Affine restriction z = 1.
    pub fn dehomogenize(&self) -> LinearForm2 {
        LinearForm2 {
            a: self.a,
            b: self.b,
            c: self.c,
        }
    }
}

/// An affine linear form a*x + b*y + c.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearForm2 {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
}

/// Cross product of coefficient vectors; for two lines this is their
/// intersection point in homogeneous coordinates.
pub fn cross(u: &[Scalar; 3], v: &[Scalar; 3]) -> [Scalar; 3] {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

/// Homogeneous ternary quadratic form, coefficients in the order
/// x^2, y^2, z^2, xy, xz, yz.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TernaryQuadratic {
    pub cxx: Scalar,
    pub cyy: Scalar,
    pub czz: Scalar,
    pub cxy: Scalar,
    pub cxz: Scalar,
    pub cyz: Scalar,
}

impl TernaryQuadratic {
    pub fn new(
        cxx: Scalar,
        cyy: Scalar,
        czz: Scalar,
        cxy: Scalar,
        cxz: Scalar,
        cyz: Scalar,
    ) -> Self {
        TernaryQuadratic {
            cxx,
            cyy,
            czz,
            cxy,
            cxz,
            cyz,
        }
    }

    pub fn zero() -> Self {
        let z = re(0.0);
        TernaryQuadratic::new(z, z, z, z, z, z)
    }

    pub fn coeffs(&self) -> [Scalar; 6] {
        [self.cxx, self.cyy, self.czz, self.cxy, self.cxz, self.cyz]
    }

    pub fn from_coeffs(c: [Scalar; 6]) -> Self {
        TernaryQuadratic::new(c[0], c[1], c[2], c[3], c[4], c[5])
    }

    pub fn coeff_scale(&self) -> f64 {
        max_norm(&self.coeffs())
    }

    pub fn is_zero(&self, tol: &Tolerance) -> bool {
        self.coeffs().iter().all(|c| tol.is_zero(*c, 1.0, 1))
    }

    /// alpha * p + beta * q.
    pub fn combine(p: &Self, q: &Self, alpha: Scalar, beta: Scalar) -> Self {
        let a = p.coeffs();
        let b = q.coeffs();
        let mut out = [re(0.0); 6];
        for i in 0..6 {
            out[i] = alpha * a[i] + beta * b[i];
        }
        Self::from_coeffs(out)
    }

    pub fn to_matrix(&self) -> SymMatrix3 {
        SymMatrix3 {
            diag: [self.cxx, self.cyy, self.czz],
            off: [self.cxy / 2.0, self.cxz / 2.0, self.cyz / 2.0],
        }
    }

    pub fn evaluate(&self, x: Scalar, y: Scalar, z: Scalar) -> Scalar {
        self.cxx * x * x
            + self.cyy * y * y
            + self.czz * z * z
            + self.cxy * x * y
            + self.cxz * x * z
            + self.cyz * y * z
    }

    /// Pullback p∘T: the form whose matrix is T^t M(p) T. `t` is in
    /// row-major order and may be singular.
    pub fn substitute_linear(&self, t: &[[Scalar; 3]; 3]) -> TernaryQuadratic {
        let m = self.to_matrix();
        // n[i][j] = sum_k sum_l t[k][i] m[k][l] t[l][j], upper triangle only
        let mut n = [[re(0.0); 3]; 3];
        for i in 0..3 {
            for j in i..3 {
                let mut acc = re(0.0);
                for k in 0..3 {
                    for l in 0..3 {
                        acc += t[k][i] * m.get(k, l) * t[l][j];
                    }
                }
                n[i][j] = acc;
            }
        }
        SymMatrix3 {
            diag: [n[0][0], n[1][1], n[2][2]],
            off: [n[0][1], n[0][2], n[1][2]],
        }
        .to_quadratic()
    }

    /// Substitutes z = 1.
    pub fn dehomogenize(&self) -> BivariateQuadratic {
        BivariateQuadratic {
            cxx: self.cxx,
            cyy: self.cyy,
            c0: self.czz,
            cxy: self.cxy,
            cx: self.cxz,
            cy: self.cyz,
        }
    }
}

/// Affine bivariate quadratic cxx*x^2 + cyy*y^2 + cxy*xy + cx*x + cy*y + c0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BivariateQuadratic {
    pub cxx: Scalar,
    pub cyy: Scalar,
    pub c0: Scalar,
    pub cxy: Scalar,
    pub cx: Scalar,
    pub cy: Scalar,
}

impl BivariateQuadratic {
    pub fn new(cxx: Scalar, cyy: Scalar, c0: Scalar, cxy: Scalar, cx: Scalar, cy: Scalar) -> Self {
        BivariateQuadratic {
            cxx,
            cyy,
            c0,
            cxy,
            cx,
            cy,
        }
    }

    pub fn zero() -> Self {
        let z = re(0.0);
        BivariateQuadratic::new(z, z, z, z, z, z)
    }

    pub fn coeffs(&self) -> [Scalar; 6] {
        [self.cxx, self.cyy, self.c0, self.cxy, self.cx, self.cy]
    }

    pub fn coeff_scale(&self) -> f64 {
        max_norm(&self.coeffs())
    }

    /// Monomial x^i y^j maps to x^i y^j z^(2-i-j).
    pub fn homogenize(&self) -> TernaryQuadratic {
        TernaryQuadratic {
            cxx: self.cxx,
            cyy: self.cyy,
            czz: self.c0,
            cxy: self.cxy,
            cxz: self.cx,
            cyz: self.cy,
        }
    }

    /// True degree 2: the degree-2 part is not identically zero.
    pub fn has_true_degree_two(&self, tol: &Tolerance) -> bool {
        let scale = self.coeff_scale();
        ![self.cxx, self.cyy, self.cxy]
            .iter()
            .all(|c| tol.is_zero(*c, scale, 1))
    }

    pub fn evaluate(&self, x: Scalar, y: Scalar) -> Scalar {
        self.homogenize().evaluate(x, y, re(1.0))
    }
}

/// Symmetric 3x3 matrix of a ternary quadratic form; the off-diagonal
/// entries are stored once as (m01, m02, m12).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymMatrix3 {
    pub diag: [Scalar; 3],
    pub off: [Scalar; 3],
}

impl SymMatrix3 {
    pub fn get(&self, i: usize, j: usize) -> Scalar {
        if i == j {
            self.diag[i]
        } else {
            match (i.min(j), i.max(j)) {
                (0, 1) => self.off[0],
                (0, 2) => self.off[1],
                (1, 2) => self.off[2],
                _ => unreachable!(),
            }
        }
    }

    pub fn row(&self, i: usize) -> [Scalar; 3] {
        [self.get(i, 0), self.get(i, 1), self.get(i, 2)]
    }

    pub fn to_quadratic(&self) -> TernaryQuadratic {
        TernaryQuadratic {
            cxx: self.diag[0],
            cyy: self.diag[1],
            czz: self.diag[2],
            cxy: self.off[0] * 2.0,
            cxz: self.off[1] * 2.0,
            cyz: self.off[2] * 2.0,
        }
    }

    pub fn det(&self) -> Scalar {
        det_columns(&self.col(0), &self.col(1), &self.col(2))
    }

    pub fn col(&self, j: usize) -> [Scalar; 3] {
        // symmetric, so columns equal rows
        self.row(j)
    }

    /// Largest magnitude over all 2x2 minors.
    pub fn max_minor2(&self) -> f64 {
        let mut best = 0.0f64;
        for i0 in 0..3 {
            for i1 in (i0 + 1)..3 {
                for j0 in 0..3 {
                    for j1 in (j0 + 1)..3 {
                        let m = self.get(i0, j0) * self.get(i1, j1)
                            - self.get(i0, j1) * self.get(i1, j0);
                        best = best.max(m.norm());
                    }
                }
            }
        }
        best
    }
}

/// Determinant of the 3x3 matrix with the given columns.
pub fn det_columns(c0: &[Scalar; 3], c1: &[Scalar; 3], c2: &[Scalar; 3]) -> Scalar {
    c0[0] * (c1[1] * c2[2] - c1[2] * c2[1]) - c1[0] * (c0[1] * c2[2] - c0[2] * c2[1])
        + c2[0] * (c0[1] * c1[2] - c0[2] * c1[1])
}

/// Inverse of a general 3x3 matrix via the adjugate. Returns `None` when
/// the determinant vanishes under the tolerance.
pub fn invert3(t: &[[Scalar; 3]; 3], tol: &Tolerance) -> Option<[[Scalar; 3]; 3]> {
    let c0 = [t[0][0], t[1][0], t[2][0]];
    let c1 = [t[0][1], t[1][1], t[2][1]];
    let c2 = [t[0][2], t[1][2], t[2][2]];
    let det = det_columns(&c0, &c1, &c2);
    let scale = t.iter().flatten().map(|v| v.norm()).fold(0.0, f64::max);
    if tol.is_zero(det, scale, 3) {
        return None;
    }
    let mut inv = [[re(0.0); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let mut sub = [re(0.0); 4];
            let mut k = 0;
            for r in 0..3 {
                if r == j {
                    continue;
                }
                for c in 0..3 {
                    if c == i {
                        continue;
                    }
                    sub[k] = t[r][c];
                    k += 1;
                }
            }
            let cof = sub[0] * sub[3] - sub[1] * sub[2];
            let sign = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
            inv[i][j] = cof * sign / det;
        }
    }
    Some(inv)
}

/// Homogeneous cubic c3*a^3 + c2*a^2 b + c1*a b^2 + c0*b^3 in (alpha, beta).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinaryCubic {
    pub c3: Scalar,
    pub c2: Scalar,
    pub c1: Scalar,
    pub c0: Scalar,
}

impl BinaryCubic {
    pub fn coeffs(&self) -> [Scalar; 4] {
        [self.c3, self.c2, self.c1, self.c0]
    }

    pub fn evaluate(&self, alpha: Scalar, beta: Scalar) -> Scalar {
        ((self.c3 * alpha + self.c2 * beta) * alpha + self.c1 * beta * beta) * alpha
            + self.c0 * beta * beta * beta
    }

    /// Identically-zero test at degree 3 of the generating pencil's
    /// coefficient scale.
    pub fn is_identically_zero(&self, tol: &Tolerance, pencil_scale: f64) -> bool {
        self.coeffs()
            .iter()
            .all(|c| tol.is_zero(*c, pencil_scale, 3))
    }
}

/// Expansion of det(alpha * M(p) + beta * M(q)) by multilinearity in the
/// columns: four mixed-determinant terms per coefficient group, no sampling.
pub fn det_pencil_cubic(p: &TernaryQuadratic, q: &TernaryQuadratic) -> BinaryCubic {
    let a = p.to_matrix();
    let b = q.to_matrix();
    let ac = [a.col(0), a.col(1), a.col(2)];
    let bc = [b.col(0), b.col(1), b.col(2)];
    let c3 = det_columns(&ac[0], &ac[1], &ac[2]);
    let c2 = det_columns(&bc[0], &ac[1], &ac[2])
        + det_columns(&ac[0], &bc[1], &ac[2])
        + det_columns(&ac[0], &ac[1], &bc[2]);
    let c1 = det_columns(&ac[0], &bc[1], &bc[2])
        + det_columns(&bc[0], &ac[1], &bc[2])
        + det_columns(&bc[0], &bc[1], &ac[2]);
    let c0 = det_columns(&bc[0], &bc[1], &bc[2]);
    BinaryCubic { c3, c2, c1, c0 }
}

/// A projective direction (alpha : beta) in the pencil.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction {
    pub alpha: Scalar,
    pub beta: Scalar,
}

impl Direction {
    pub fn new(alpha: Scalar, beta: Scalar) -> Self {
        Direction { alpha, beta }
    }

    /// Scales so the larger component becomes exactly 1.
    pub fn normalized(&self) -> Direction {
        let s = if self.alpha.norm() >= self.beta.norm() {
            self.alpha
        } else {
            self.beta
        };
        if s.norm() == 0.0 {
            return *self;
        }
        Direction::new(self.alpha / s, self.beta / s)
    }

    /// Projective equality / collinearity: alpha1*beta2 - alpha2*beta1
    /// vanishes at degree 1 (directions are compared after normalization,
    /// so the scale is 1).
    pub fn proj_eq(&self, other: &Direction, tol: &Tolerance) -> bool {
        let a = self.normalized();
        let b = other.normalized();
        tol.is_zero(a.alpha * b.beta - b.alpha * a.beta, 1.0, 1)
    }
}
