//! Canonical printing of forms and report serialization.

use serde::{Deserialize, Serialize};

use crate::forms::{BivariateQuadratic, LinearForm2, LinearForm3, TernaryQuadratic};
use crate::pencil::{
    BivariateReason, BivariateReport, LineGeometry, PencilReport, Reason, Verdict,
};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

/// Renders a scalar with minimal digits: "2", "-0.5", "i", "2i", "1+2i".
pub fn fmt_scalar(c: Scalar) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else if c.re == 0.0 {
        fmt_imag(c.im)
    } else if c.im < 0.0 {
        format!("{}-{}", c.re, fmt_imag(-c.im))
    } else {
        format!("{}+{}", c.re, fmt_imag(c.im))
    }
}

fn fmt_imag(im: f64) -> String {
    if im == 1.0 {
        "i".to_string()
    } else {
        format!("{im}i")
    }
}

/// Joins (coefficient, monomial) terms into a canonical string; zero terms
/// are omitted and an all-zero polynomial prints as "0".
fn join_terms(terms: &[(Scalar, &str)]) -> String {
    let mut out = String::new();
    for &(c, mono) in terms {
        if c == Scalar::new(0.0, 0.0) {
            continue;
        }
        let (neg, body) = render_term(c, mono);
        if out.is_empty() {
            if neg {
                out.push('-');
            }
            out.push_str(&body);
        } else {
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn render_term(c: Scalar, mono: &str) -> (bool, String) {
    // pure real and pure imaginary coefficients carry their sign into the
    // joiner; full complex coefficients stay parenthesized
    if c.im == 0.0 {
        let neg = c.re < 0.0;
        let mag = c.re.abs();
        let body = if mono.is_empty() {
            format!("{mag}")
        } else if mag == 1.0 {
            mono.to_string()
        } else {
            format!("{mag}*{mono}")
        };
        (neg, body)
    } else if c.re == 0.0 {
        let neg = c.im < 0.0;
        let coeff = fmt_imag(c.im.abs());
        let body = if mono.is_empty() {
            coeff
        } else {
            format!("{coeff}*{mono}")
        };
        (neg, body)
    } else {
        let coeff = format!("({})", fmt_scalar(c));
        let body = if mono.is_empty() {
            coeff
        } else {
            format!("{coeff}*{mono}")
        };
        (false, body)
    }
}

/// Canonical string in the order x^2, y^2, z^2, xy, xz, yz.
pub fn format_ternary(p: &TernaryQuadratic) -> String {
    join_terms(&[
        (p.cxx, "x^2"),
        (p.cyy, "y^2"),
        (p.czz, "z^2"),
        (p.cxy, "x*y"),
        (p.cxz, "x*z"),
        (p.cyz, "y*z"),
    ])
}

/// Canonical string in the order x^2, y^2, 1, xy, x, y (the ternary order
/// restricted to z = 1).
pub fn format_bivariate(p: &BivariateQuadratic) -> String {
    join_terms(&[
        (p.cxx, "x^2"),
        (p.cyy, "y^2"),
        (p.c0, ""),
        (p.cxy, "x*y"),
        (p.cx, "x"),
        (p.cy, "y"),
    ])
}

pub fn format_linear3(l: &LinearForm3) -> String {
    join_terms(&[(l.a, "x"), (l.b, "y"), (l.c, "z")])
}

pub fn format_linear2(l: &LinearForm2) -> String {
    join_terms(&[(l.a, "x"), (l.b, "y"), (l.c, "")])
}

impl std::fmt::Display for TernaryQuadratic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_ternary(self))
    }
}

impl std::fmt::Display for BivariateQuadratic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_bivariate(self))
    }
}

impl std::fmt::Display for LinearForm3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_linear3(self))
    }
}

impl std::fmt::Display for LinearForm2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&format_linear2(self))
    }
}

/// Wire schema for serialized reports; complex numbers are [re, im] pairs.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ReportJson {
    pub schema: u32,
    pub verdict: String,
    pub reasons: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub common_line: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub concurrency_point: Option<[[f64; 2]; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line_geometry: Option<String>,
    pub directions: Vec<DirectionJson>,
    pub det_cubic: [[f64; 2]; 4],
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct DirectionJson {
    pub alpha: [f64; 2],
    pub beta: [f64; 2],
    pub factors: [String; 2],
}

fn pair(c: Scalar) -> [f64; 2] {
    [c.re, c.im]
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::AllFactorizable => "ALL_FACTORIZABLE",
        Verdict::Finite => "FINITE",
    }
}

fn reason_str(r: Reason) -> &'static str {
    match r {
        Reason::CommonFactor => "COMMON_FACTOR",
        Reason::ConcurrentLines => "CONCURRENT_LINES",
    }
}

fn bivariate_reason_str(r: BivariateReason) -> &'static str {
    match r {
        BivariateReason::APrime => "A_PRIME",
        BivariateReason::BPrime => "B_PRIME",
        BivariateReason::CPrime => "C_PRIME",
    }
}

fn geometry_str(g: LineGeometry) -> &'static str {
    match g {
        LineGeometry::CommonFactor => "COMMON_FACTOR",
        LineGeometry::Parallel => "PARALLEL",
        LineGeometry::Coincident => "COINCIDENT",
    }
}

pub fn pencil_report_json(r: &PencilReport) -> ReportJson {
    ReportJson {
        schema: 1,
        verdict: verdict_str(r.verdict).to_string(),
        reasons: r.reasons.iter().map(|x| reason_str(*x).to_string()).collect(),
        common_line: r.common_line.as_ref().map(format_linear3),
        concurrency_point: r.concurrency_point.map(|p| [pair(p[0]), pair(p[1]), pair(p[2])]),
        line_geometry: None,
        directions: r
            .directions
            .iter()
            .map(|d| DirectionJson {
                alpha: pair(d.direction.alpha),
                beta: pair(d.direction.beta),
                factors: [format_linear3(&d.split.l1), format_linear3(&d.split.l2)],
            })
            .collect(),
        det_cubic: [
            pair(r.det_cubic.c3),
            pair(r.det_cubic.c2),
            pair(r.det_cubic.c1),
            pair(r.det_cubic.c0),
        ],
    }
}

pub fn bivariate_report_json(r: &BivariateReport) -> ReportJson {
    ReportJson {
        schema: 1,
        verdict: verdict_str(r.verdict).to_string(),
        reasons: r
            .reasons
            .iter()
            .map(|x| bivariate_reason_str(*x).to_string())
            .collect(),
        common_line: r.common_line.as_ref().map(format_linear2),
        concurrency_point: r.concurrency_point.map(|p| [pair(p[0]), pair(p[1]), pair(p[2])]),
        line_geometry: r.line_geometry.map(|g| geometry_str(g).to_string()),
        directions: r
            .directions
            .iter()
            .map(|d| DirectionJson {
                alpha: pair(d.direction.alpha),
                beta: pair(d.direction.beta),
                factors: [
                    format_linear2(&d.split.l1.dehomogenize()),
                    format_linear2(&d.split.l2.dehomogenize()),
                ],
            })
            .collect(),
        det_cubic: [
            pair(r.det_cubic.c3),
            pair(r.det_cubic.c2),
            pair(r.det_cubic.c1),
            pair(r.det_cubic.c0),
        ],
    }
}

fn render_json(j: &ReportJson) -> String {
    serde_json::to_string_pretty(j).expect("report serialization cannot fail")
}

fn render_text(j: &ReportJson) -> String {
    let mut out = String::new();
    out.push_str(&format!("verdict: {}\n", j.verdict));
    if !j.reasons.is_empty() {
        out.push_str(&format!("reasons: {}\n", j.reasons.join(", ")));
    }
    if let Some(l) = &j.common_line {
        out.push_str(&format!("common line: {l}\n"));
    }
    if let Some(p) = &j.concurrency_point {
        out.push_str(&format!(
            "concurrency point: ({} : {} : {})\n",
            fmt_scalar(Scalar::new(p[0][0], p[0][1])),
            fmt_scalar(Scalar::new(p[1][0], p[1][1])),
            fmt_scalar(Scalar::new(p[2][0], p[2][1])),
        ));
    }
    if let Some(g) = &j.line_geometry {
        out.push_str(&format!("line geometry: {g}\n"));
    }
    if !j.directions.is_empty() {
        out.push_str("factorizable directions:\n");
        for d in &j.directions {
            out.push_str(&format!(
                "  ({} : {}) -> ({})({})\n",
                fmt_scalar(Scalar::new(d.alpha[0], d.alpha[1])),
                fmt_scalar(Scalar::new(d.beta[0], d.beta[1])),
                d.factors[0],
                d.factors[1],
            ));
        }
    }
    out.push_str(&format!(
        "det cubic: [{}, {}, {}, {}]\n",
        fmt_scalar(Scalar::new(j.det_cubic[0][0], j.det_cubic[0][1])),
        fmt_scalar(Scalar::new(j.det_cubic[1][0], j.det_cubic[1][1])),
        fmt_scalar(Scalar::new(j.det_cubic[2][0], j.det_cubic[2][1])),
        fmt_scalar(Scalar::new(j.det_cubic[3][0], j.det_cubic[3][1])),
    ));
    out
}

pub fn serialize_pencil_report(r: &PencilReport, format: ReportFormat) -> String {
    let j = pencil_report_json(r);
    match format {
        ReportFormat::Json => render_json(&j),
        ReportFormat::Text => render_text(&j),
    }
}

pub fn serialize_bivariate_report(r: &BivariateReport, format: ReportFormat) -> String {
    let j = bivariate_report_json(r);
    match format {
        ReportFormat::Json => render_json(&j),
        ReportFormat::Text => render_text(&j),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ternary;
    use crate::pencil::classify_pencil;
    use crate::scalar::{re, Tolerance};

    #[test]
    fn canonical_formatting() {
        let p = parse_ternary("x^2 + x*z").unwrap();
        assert_eq!(format_ternary(&p), "x^2 + x*z");
        let s = parse_ternary("(x+y)(x+y+z)").unwrap();
        assert_eq!(format_ternary(&s), "x^2 + y^2 + 2*x*y + x*z + y*z");
        assert_eq!(format_ternary(&TernaryQuadratic::zero()), "0");
    }

    #[test]
    fn format_parse_roundtrip() {
        let inputs = [
            "x^2 + x*z",
            "2*x^2 - 0.5*y^2 + z^2",
            "i*x^2 + y*z",
            "(1+2i)*x*y - z^2",
        ];
        for s in inputs {
            let p = parse_ternary(s).unwrap();
            let printed = format_ternary(&p);
            assert_eq!(parse_ternary(&printed).unwrap(), p, "roundtrip of {s}");
        }
    }

    #[test]
    fn counterexample_report_json() {
        let tol = Tolerance::default();
        let p = parse_ternary("x(x+z)").unwrap();
        let q = parse_ternary("y(2x+y+z)").unwrap();
        let rep = classify_pencil(&p, &q, &tol).unwrap();
        let json = serialize_pencil_report(&rep, ReportFormat::Json);
        let parsed: ReportJson = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed.schema, 1);
        assert_eq!(parsed.verdict, "FINITE");
        assert_eq!(parsed.directions.len(), 3);
    }

    #[test]
    fn all_factorizable_report_fields() {
        let tol = Tolerance::default();
        let p = parse_ternary("x*y").unwrap();
        let q = parse_ternary("x*z").unwrap();
        let rep = classify_pencil(&p, &q, &tol).unwrap();
        let json = serialize_pencil_report(&rep, ReportFormat::Json);
        let parsed: ReportJson = serde_json::from_str(&json).unwrap();
        assert!(parsed.reasons.contains(&"COMMON_FACTOR".to_string()));
        assert_eq!(parsed.common_line.as_deref(), Some("x"));
        let text = serialize_pencil_report(&rep, ReportFormat::Text);
        assert!(text.contains("ALL_FACTORIZABLE"));
        assert!(text.contains("common line: x"));
    }

    #[test]
    fn scalar_rendering() {
        assert_eq!(fmt_scalar(re(2.0)), "2");
        assert_eq!(fmt_scalar(re(-0.5)), "-0.5");
        assert_eq!(fmt_scalar(Scalar::new(0.0, 1.0)), "i");
        assert_eq!(fmt_scalar(Scalar::new(0.0, -2.0)), "-2i");
        assert_eq!(fmt_scalar(Scalar::new(1.0, -2.0)), "1-2i");
    }
}
