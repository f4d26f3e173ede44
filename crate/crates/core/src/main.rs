use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use conic_pencil::report::fmt_scalar;
use conic_pencil::{
    classify_bivariate_pencil, classify_pencil, expand_product, factor_ternary_quadratic,
    format_bivariate, format_linear2, format_linear3, format_ternary, is_degenerate,
    parse_bivariate, parse_ternary, serialize_bivariate_report, serialize_pencil_report, Direction,
    Error, ReportFormat, Scalar, SplitPair, TernaryQuadratic, Tolerance, Verdict,
};

#[derive(Parser)]
#[command(
    name = "conic-pencil",
    about = "Factor degenerate quadratic forms over C and classify pencils of conics"
)]
struct Cli {
    /// Relative tolerance for all near-zero decisions
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Variable mode: h3 = homogeneous in x,y,z; a2 = affine in x,y.
    /// Inferred from the presence of z when omitted.
    #[arg(long, global = true, value_enum)]
    mode: Option<Mode>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Mode {
    H3,
    A2,
}

#[derive(Subcommand)]
enum Command {
    /// Factor a single quadratic form or report it irreducible
    Factor { poly: String },
    /// Classify the pencil alpha*p + beta*q
    Pencil { p: String, q: String },
    /// Reproduce the built-in counterexample pencils end to end
    Demo,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    // argument errors are input errors (exit 1); help/version exit 0
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if !(cli.tolerance > 0.0 && cli.tolerance.is_finite()) {
        eprintln!("error: tolerance must be a positive finite number");
        return 1;
    }
    let tol = Tolerance::new(cli.tolerance);
    let fmt = match cli.format {
        Format::Text => ReportFormat::Text,
        Format::Json => ReportFormat::Json,
    };
    match &cli.command {
        Command::Factor { poly } => cmd_factor(poly, cli.mode, &tol, fmt),
        Command::Pencil { p, q } => cmd_pencil(p, q, cli.mode, &tol, fmt),
        Command::Demo => cmd_demo(&tol),
    }
}

fn infer_mode(mode: Option<Mode>, inputs: &[&str]) -> Mode {
    mode.unwrap_or_else(|| {
        if inputs.iter().any(|s| s.contains('z')) {
            Mode::H3
        } else {
            Mode::A2
        }
    })
}

fn fail(err: &Error) -> i32 {
    eprintln!("error: {err}");
    1
}

fn cmd_factor(poly: &str, mode: Option<Mode>, tol: &Tolerance, fmt: ReportFormat) -> i32 {
    let mode = infer_mode(mode, &[poly]);
    let (form, affine) = match mode {
        Mode::H3 => match parse_ternary(poly) {
            Ok(p) => (p, false),
            Err(e) => return fail(&e),
        },
        Mode::A2 => match parse_bivariate(poly) {
            Ok(p) => (p.homogenize(), true),
            Err(e) => return fail(&e),
        },
    };
    let deg = match is_degenerate(&form, tol) {
        Ok(d) => d,
        Err(e) => return fail(&e),
    };
    if !deg.degenerate {
        match fmt {
            ReportFormat::Text => println!("irreducible (det = {})", fmt_scalar(deg.det)),
            ReportFormat::Json => println!(
                "{}",
                json!({
                    "schema": 1,
                    "verdict": "IRREDUCIBLE",
                    "det": [deg.det.re, deg.det.im],
                })
            ),
        }
        return 2;
    }
    let split = match factor_ternary_quadratic(&form, tol) {
        Ok(s) => s,
        Err(e) => return fail(&e),
    };
    let factors = split_strings(&split, affine);
    match fmt {
        ReportFormat::Text => println!("({})({})", factors[0], factors[1]),
        ReportFormat::Json => println!(
            "{}",
            json!({
                "schema": 1,
                "verdict": "FACTORABLE",
                "factors": factors,
                "det": [deg.det.re, deg.det.im],
            })
        ),
    }
    0
}

fn split_strings(split: &SplitPair, affine: bool) -> [String; 2] {
    if affine {
        [
            format_linear2(&split.l1.dehomogenize()),
            format_linear2(&split.l2.dehomogenize()),
        ]
    } else {
        [format_linear3(&split.l1), format_linear3(&split.l2)]
    }
}

fn cmd_pencil(p: &str, q: &str, mode: Option<Mode>, tol: &Tolerance, fmt: ReportFormat) -> i32 {
    let mode = infer_mode(mode, &[p, q]);
    let (verdict, rendered) = match mode {
        Mode::H3 => {
            let (pp, qq) = match (parse_ternary(p), parse_ternary(q)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => return fail(&e),
            };
            match classify_pencil(&pp, &qq, tol) {
                Ok(rep) => (rep.verdict, serialize_pencil_report(&rep, fmt)),
                Err(e) => return fail(&e),
            }
        }
        Mode::A2 => {
            let (pp, qq) = match (parse_bivariate(p), parse_bivariate(q)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => return fail(&e),
            };
            match classify_bivariate_pencil(&pp, &qq, tol) {
                Ok(rep) => (rep.verdict, serialize_bivariate_report(&rep, fmt)),
                Err(e) => return fail(&e),
            }
        }
    };
    print!("{rendered}");
    if !rendered.ends_with('\n') {
        println!();
    }
    match verdict {
        Verdict::AllFactorizable => 0,
        Verdict::Finite => 3,
    }
}

fn cmd_demo(tol: &Tolerance) -> i32 {
    let mut ok = true;
    let trial_dirs = [(1.0, 0.0), (0.0, 1.0), (1.0, 1.0), (2.0, 1.0)];

    println!("== homogeneous counterexample ==");
    let p = parse_ternary("x(x+z)").expect("builtin input");
    let q = parse_ternary("y(2x+y+z)").expect("builtin input");
    println!("p = {}", format_ternary(&p));
    println!("q = {}", format_ternary(&q));
    let cubic = conic_pencil::det_pencil_cubic(&p, &q);
    println!(
        "det cubic: [{}, {}, {}, {}]",
        fmt_scalar(cubic.c3),
        fmt_scalar(cubic.c2),
        fmt_scalar(cubic.c1),
        fmt_scalar(cubic.c0)
    );
    for (a, b) in trial_dirs {
        let combo = TernaryQuadratic::combine(&p, &q, Scalar::new(a, 0.0), Scalar::new(b, 0.0));
        let expect_split = (a, b) != (2.0, 1.0);
        ok &= show_combination(&combo, a, b, expect_split, false, tol);
    }
    match classify_pencil(&p, &q, tol) {
        Ok(rep) if rep.verdict == Verdict::Finite && rep.directions.len() == 3 => {
            println!("classification: FINITE with 3 directions");
            let want = SplitPair::new(
                conic_pencil::LinearForm3::new(Scalar::new(1.0, 0.0), Scalar::new(1.0, 0.0), Scalar::new(0.0, 0.0)),
                conic_pencil::LinearForm3::new(Scalar::new(1.0, 0.0), Scalar::new(1.0, 0.0), Scalar::new(1.0, 0.0)),
            );
            let d11 = rep.directions.iter().find(|d| {
                d.direction
                    .proj_eq(&Direction::new(Scalar::new(1.0, 0.0), Scalar::new(1.0, 0.0)), tol)
            });
            match d11 {
                Some(d) if d.split.proj_eq(&want, tol) => {}
                _ => {
                    println!("MISMATCH: (1,1) does not factor as (x + y)(x + y + z)");
                    ok = false;
                }
            }
        }
        other => {
            println!("MISMATCH: expected FINITE with 3 directions, got {other:?}");
            ok = false;
        }
    }

    println!();
    println!("== bivariate counterexample ==");
    let pb = parse_bivariate("x(x+1)").expect("builtin input");
    let qb = parse_bivariate("y(2x+y+1)").expect("builtin input");
    println!("p = {}", format_bivariate(&pb));
    println!("q = {}", format_bivariate(&qb));
    for (a, b) in trial_dirs {
        let combo = TernaryQuadratic::combine(
            &pb.homogenize(),
            &qb.homogenize(),
            Scalar::new(a, 0.0),
            Scalar::new(b, 0.0),
        );
        let expect_split = (a, b) != (2.0, 1.0);
        ok &= show_combination(&combo, a, b, expect_split, true, tol);
    }
    match classify_bivariate_pencil(&pb, &qb, tol) {
        Ok(rep) if rep.verdict == Verdict::Finite && rep.directions.len() == 3 => {
            println!("classification: FINITE with 3 directions");
        }
        other => {
            println!("MISMATCH: expected FINITE with 3 directions, got {other:?}");
            ok = false;
        }
    }

    println!();
    if ok {
        println!("all outcomes confirmed");
        0
    } else {
        println!("some outcomes did NOT match");
        1
    }
}

fn show_combination(
    combo: &TernaryQuadratic,
    a: f64,
    b: f64,
    expect_split: bool,
    affine: bool,
    tol: &Tolerance,
) -> bool {
    let label = if affine {
        format_bivariate(&combo.dehomogenize())
    } else {
        format_ternary(combo)
    };
    match factor_ternary_quadratic(combo, tol) {
        Ok(split) => {
            let back = expand_product(&split.l1, &split.l2);
            let residual: f64 = combo
                .coeffs()
                .iter()
                .zip(back.coeffs().iter())
                .map(|(x, y)| (x - y).norm())
                .fold(0.0, f64::max);
            let f = split_strings(&split, affine);
            println!("({a}, {b}): {label} = ({})({})", f[0], f[1]);
            if !expect_split {
                println!("MISMATCH: ({a}, {b}) was expected to be irreducible");
            }
            expect_split && residual <= tol.threshold(combo.coeff_scale(), 2)
        }
        Err(Error::NotDegenerate { det }) => {
            println!("({a}, {b}): {label} is irreducible (det = {})", fmt_scalar(det));
            if expect_split {
                println!("MISMATCH: ({a}, {b}) was expected to factor");
            }
            !expect_split
        }
        Err(e) => {
            println!("({a}, {b}): unexpected error: {e}");
            false
        }
    }
}
