//! Classification of pencils alpha*p + beta*q.
//!
//! The determinant cubic det(alpha*M(p) + beta*M(q)) is the primary
//! decision device: it vanishes identically exactly when every combination
//! splits, and otherwise its projective zeros are the factorizable
//! directions. The structural conditions (shared linear factor, concurrent
//! factor lines) are computed as witnesses and audits.

use crate::error::{Error, Result};
use crate::factor::{expand_product, factor_ternary_quadratic, is_degenerate, SplitPair};
use crate::forms::{
    cross, det_pencil_cubic, BinaryCubic, BivariateQuadratic, Direction, LinearForm2, LinearForm3,
    TernaryQuadratic,
};
use crate::roots::cubic_directions;
use crate::scalar::{proportional, re, Scalar, Tolerance};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    AllFactorizable,
    Finite,
}

/// Structural reasons for an all-factorizable pencil.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reason {
    CommonFactor,
    ConcurrentLines,
}

/// Bivariate structural reasons.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BivariateReason {
    APrime,
    BPrime,
    CPrime,
}

/// Geometry of the four factor lines of a bivariate product pencil.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineGeometry {
    CommonFactor,
    Parallel,
    Coincident,
}

/// A factorizable direction together with the splitting of its combination.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FactorableDirection {
    pub direction: Direction,
    pub split: SplitPair,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PencilReport {
    pub verdict: Verdict,
    pub reasons: Vec<Reason>,
    pub common_line: Option<LinearForm3>,
    pub concurrency_point: Option<[Scalar; 3]>,
    pub directions: Vec<FactorableDirection>,
    pub det_cubic: BinaryCubic,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BivariateReport {
    pub verdict: Verdict,
    pub reasons: Vec<BivariateReason>,
    pub line_geometry: Option<LineGeometry>,
    pub common_line: Option<LinearForm2>,
    pub concurrency_point: Option<[Scalar; 3]>,
    pub directions: Vec<FactorableDirection>,
    pub det_cubic: BinaryCubic,
}

/// True iff the two coefficient 6-vectors are not proportional.
pub fn check_linear_independence(
    p: &TernaryQuadratic,
    q: &TernaryQuadratic,
    tol: &Tolerance,
) -> bool {
    !proportional(&p.coeffs(), &q.coeffs(), tol)
}

/// Factors both generators and looks for a shared projective line.
pub fn check_common_line(
    p: &TernaryQuadratic,
    q: &TernaryQuadratic,
    tol: &Tolerance,
) -> Result<Option<LinearForm3>> {
    let sp = factor_ternary_quadratic(p, tol)?;
    let sq = factor_ternary_quadratic(q, tol)?;
    for lp in sp.lines() {
        for lq in sq.lines() {
            if lp.proj_eq(&lq, tol) {
                return Ok(Some(lp.normalized().1));
            }
        }
    }
    Ok(None)
}

/// Common projective point of four lines, if their 4x3 coefficient matrix
/// has rank <= 2.
pub fn check_concurrency(lines: &[LinearForm3; 4], tol: &Tolerance) -> Option<[Scalar; 3]> {
    let rows: Vec<[Scalar; 3]> = lines.iter().map(|l| l.normalized().1.coeffs()).collect();
    // rank <= 2 iff every 3-subset has vanishing determinant
    for skip in 0..4 {
        let picked: Vec<&[Scalar; 3]> = rows
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, r)| r)
            .collect();
        let det = crate::forms::det_columns(picked[0], picked[1], picked[2]);
        if !tol.is_zero(det, 1.0, 3) {
            return None;
        }
    }
    // point: cross product of the two most independent lines
    let mut best: ([Scalar; 3], f64) = ([re(0.0); 3], 0.0);
    for i in 0..4 {
        for j in (i + 1)..4 {
            let c = cross(&rows[i], &rows[j]);
            let n = c.iter().map(|x| x.norm()).fold(0.0, f64::max);
            if n > best.1 {
                best = (c, n);
            }
        }
    }
    if best.1 > tol.threshold(1.0, 2) {
        return Some(normalize_point(best.0));
    }
    // all four lines pairwise proportional: any point on the common line
    let l = rows[0];
    let axes = [
        [re(1.0), re(0.0), re(0.0)],
        [re(0.0), re(1.0), re(0.0)],
        [re(0.0), re(0.0), re(1.0)],
    ];
    let mut pt = cross(&l, &axes[0]);
    for e in &axes[1..] {
        let c = cross(&l, e);
        if c.iter().map(|x| x.norm()).fold(0.0, f64::max)
            > pt.iter().map(|x| x.norm()).fold(0.0, f64::max)
        {
            pt = c;
        }
    }
    Some(normalize_point(pt))
}

fn normalize_point(p: [Scalar; 3]) -> [Scalar; 3] {
    let mut k = 0;
    for i in 1..3 {
        if p[i].norm() > p[k].norm() {
            k = i;
        }
    }
    if p[k].norm() == 0.0 {
        return p;
    }
    [p[0] / p[k], p[1] / p[k], p[2] / p[k]]
}

/// Outcome of the direction search.
#[derive(Debug, Clone, PartialEq)]
pub enum DirectionsOutcome {
    All,
    Finite(Vec<Direction>),
}

/// Either every direction is factorizable, or the distinct projective roots
/// of the determinant cubic (at most 3).
pub fn factorizable_directions(
    p: &TernaryQuadratic,
    q: &TernaryQuadratic,
    tol: &Tolerance,
) -> Result<DirectionsOutcome> {
    if !check_linear_independence(p, q, tol) {
        return Err(Error::DependentGenerators);
    }
    let cubic = det_pencil_cubic(p, q);
    let scale = p.coeff_scale().max(q.coeff_scale());
    if cubic.is_identically_zero(tol, scale) {
        return Ok(DirectionsOutcome::All);
    }
    Ok(DirectionsOutcome::Finite(cubic_directions(
        &cubic, tol, scale,
    )))
}

/// Full classification with witnesses.
pub fn classify_pencil(
    p: &TernaryQuadratic,
    q: &TernaryQuadratic,
    tol: &Tolerance,
) -> Result<PencilReport> {
    let outcome = factorizable_directions(p, q, tol)?;
    let cubic = det_pencil_cubic(p, q);
    match outcome {
        DirectionsOutcome::All => {
            // the generators themselves sit in the pencil at (1:0), (0:1),
            // so both must split when the cubic vanishes identically
            let sp = factor_ternary_quadratic(p, tol).map_err(|_| Error::InternalInconsistency)?;
            let sq = factor_ternary_quadratic(q, tol).map_err(|_| Error::InternalInconsistency)?;
            let mut reasons = Vec::new();
            let mut common_line = None;
            for lp in sp.lines() {
                for lq in sq.lines() {
                    if common_line.is_none() && lp.proj_eq(&lq, tol) {
                        common_line = Some(lp.normalized().1);
                    }
                }
            }
            if common_line.is_some() {
                reasons.push(Reason::CommonFactor);
            }
            let four = [sp.l1, sp.l2, sq.l1, sq.l2];
            let concurrency_point = check_concurrency(&four, tol);
            if concurrency_point.is_some() {
                reasons.push(Reason::ConcurrentLines);
            }
            if reasons.is_empty() {
                return Err(Error::InternalInconsistency);
            }
            Ok(PencilReport {
                verdict: Verdict::AllFactorizable,
                reasons,
                common_line,
                concurrency_point,
                directions: Vec::new(),
                det_cubic: cubic,
            })
        }
        DirectionsOutcome::Finite(dirs) => {
            let mut directions = Vec::new();
            for d in dirs {
                let combo = TernaryQuadratic::combine(p, q, d.alpha, d.beta);
                if let Ok(split) = factor_ternary_quadratic(&combo, tol) {
                    directions.push(FactorableDirection {
                        direction: d,
                        split,
                    });
                }
            }
            Ok(PencilReport {
                verdict: Verdict::Finite,
                reasons: Vec::new(),
                common_line: None,
                concurrency_point: None,
                directions,
                det_cubic: cubic,
            })
        }
    }
}

/// Checks the product-pencil statement: two noncollinear factorizable
/// directions with all components nonzero force the whole pencil to split,
/// with a shared factor or concurrent lines as the explanation.
pub fn check_product_pencil_theorem(
    p: &SplitPair,
    q: &SplitPair,
    d1: &Direction,
    d2: &Direction,
    tol: &Tolerance,
) -> Result<Vec<Reason>> {
    if d1.proj_eq(d2, tol) {
        return Err(Error::PreconditionFailed(
            "directions are collinear".into(),
        ));
    }
    for d in [d1, d2] {
        let n = d.normalized();
        if tol.is_zero(n.alpha, 1.0, 1) || tol.is_zero(n.beta, 1.0, 1) {
            return Err(Error::PreconditionFailed(
                "direction has a zero component".into(),
            ));
        }
    }
    let pf = expand_product(&p.l1, &p.l2);
    let qf = expand_product(&q.l1, &q.l2);
    if !check_linear_independence(&pf, &qf, tol) {
        return Err(Error::PreconditionFailed(
            "generators are linearly dependent".into(),
        ));
    }
    for d in [d1, d2] {
        let combo = TernaryQuadratic::combine(&pf, &qf, d.alpha, d.beta);
        let deg = is_degenerate(&combo, tol)?;
        if !deg.degenerate {
            return Err(Error::PreconditionFailed(format!(
                "combination at ({}, {}) is not degenerate (det = {})",
                d.alpha, d.beta, deg.det
            )));
        }
    }
    let report = classify_pencil(&pf, &qf, tol)?;
    if report.verdict != Verdict::AllFactorizable {
        return Err(Error::InternalInconsistency);
    }
    Ok(report.reasons)
}

/// Bivariate classification through the homogenized pencil.
pub fn classify_bivariate_pencil(
    p: &BivariateQuadratic,
    q: &BivariateQuadratic,
    tol: &Tolerance,
) -> Result<BivariateReport> {
    if !p.has_true_degree_two(tol) || !q.has_true_degree_two(tol) {
        return Err(Error::DegreeTooLow);
    }
    let ph = p.homogenize();
    let qh = q.homogenize();
    let hrep = classify_pencil(&ph, &qh, tol)?;

    match hrep.verdict {
        Verdict::AllFactorizable => {
            let mut reasons = Vec::new();
            let common_line = hrep.common_line.map(|l| l.dehomogenize());
            if common_line.is_some() {
                reasons.push(BivariateReason::APrime);
            }
            let mut line_geometry = None;
            if hrep.reasons.contains(&Reason::ConcurrentLines) {
                // b' exactly when a substitution form loses its (x, y) part
                // after z = 1, i.e. a factor line is projectively z
                let sp = factor_ternary_quadratic(&ph, tol)?;
                let sq = factor_ternary_quadratic(&qh, tol)?;
                let line_z = LinearForm3::new(re(0.0), re(0.0), re(1.0));
                let has_z = sp
                    .lines()
                    .iter()
                    .chain(sq.lines().iter())
                    .any(|l| l.proj_eq(&line_z, tol));
                reasons.push(if has_z {
                    BivariateReason::BPrime
                } else {
                    BivariateReason::CPrime
                });
                if let Some(pt) = hrep.concurrency_point {
                    let n = normalize_point(pt);
                    line_geometry = Some(if tol.is_zero(n[2], 1.0, 1) {
                        LineGeometry::Parallel
                    } else {
                        LineGeometry::Coincident
                    });
                }
            } else if common_line.is_some() {
                line_geometry = Some(LineGeometry::CommonFactor);
            }
            Ok(BivariateReport {
                verdict: Verdict::AllFactorizable,
                reasons,
                line_geometry,
                common_line,
                concurrency_point: hrep.concurrency_point,
                directions: Vec::new(),
                det_cubic: hrep.det_cubic,
            })
        }
        Verdict::Finite => Ok(BivariateReport {
            verdict: Verdict::Finite,
            reasons: Vec::new(),
            line_geometry: None,
            common_line: None,
            concurrency_point: None,
            directions: hrep.directions,
            det_cubic: hrep.det_cubic,
        }),
    }
}
