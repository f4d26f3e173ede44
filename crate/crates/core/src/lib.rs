//! Factorization of complex quadratic forms and classification of pencils
//! of conics.
//!
//! A ternary quadratic form splits into two linear forms exactly when its
//! symmetric matrix is singular. For a pencil `alpha*p + beta*q` of two
//! linearly independent forms, either every combination splits (the
//! generators share a linear factor, or all four factor lines pass through
//! a common point) or at most three projective directions do — the roots
//! of the determinant cubic `det(alpha*M(p) + beta*M(q))`.
//!
//! All types are immutable values and every operation is a pure function.

pub mod error;
pub mod factor;
pub mod forms;
pub mod parse;
pub mod pencil;
pub mod report;
pub mod roots;
pub mod scalar;

pub use error::{Error, Result};
pub use factor::{
    expand_product, factor_binary_quadratic, factor_ternary_quadratic, is_degenerate, Degeneracy,
    SplitPair,
};
pub use forms::{
    det_pencil_cubic, BinaryCubic, BivariateQuadratic, Direction, LinearForm2, LinearForm3,
    SymMatrix3, TernaryQuadratic,
};
pub use parse::{parse_bivariate, parse_polynomial, parse_ternary, ParseMode, ParsedPoly};
pub use pencil::{
    check_common_line, check_concurrency, check_linear_independence, check_product_pencil_theorem,
    classify_bivariate_pencil, classify_pencil, factorizable_directions, BivariateReason,
    BivariateReport, DirectionsOutcome, FactorableDirection, LineGeometry, PencilReport, Reason,
    Verdict,
};
pub use report::{
    format_bivariate, format_linear2, format_linear3, format_ternary, serialize_bivariate_report,
    serialize_pencil_report, ReportFormat, ReportJson,
};
pub use scalar::{Scalar, Tolerance};
