//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar:
//!   expr   := term (('+' | '-') term)*
//!   term   := ['-'] factor (('*')? factor)*
//!   factor := atom ('^' uint)?
//!   atom   := number | 'i' | 'x' | 'y' | 'z' | '(' expr ')'
//!
//! Implicit multiplication is permitted between adjacent factors, so
//! "x(x+z)" and "2xy" parse as written.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::forms::{BivariateQuadratic, TernaryQuadratic};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseMode {
    Homogeneous3,
    Affine2,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParsedPoly {
    Ternary(TernaryQuadratic),
    Bivariate(BivariateQuadratic),
}

/// Expression tree produced by the grammar above.
#[derive(Debug, Clone, PartialEq)]
pub enum PolyAst {
    Number(f64),
    Imaginary,
    Var(char),
    Neg(Box<PolyAst>),
    Sum(Box<PolyAst>, Box<PolyAst>),
    Diff(Box<PolyAst>, Box<PolyAst>),
    Product(Box<PolyAst>, Box<PolyAst>),
    Power(Box<PolyAst>, u32),
}

pub fn parse_polynomial(text: &str, mode: ParseMode) -> Result<ParsedPoly> {
    let ast = parse_ast(text, mode)?;
    let monomials = expand(&ast);
    // monomials of degree > 2 that survived expansion are errors in both modes
    for (&(i, j, k), &c) in &monomials {
        let deg = i + j + k;
        if c != Scalar::new(0.0, 0.0) && deg > 2 {
            return Err(Error::Degree(format!(
                "monomial of degree {deg} exceeds degree 2"
            )));
        }
    }
    match mode {
        ParseMode::Homogeneous3 => {
            let mut p = TernaryQuadratic::zero();
            for (&(i, j, k), &c) in &monomials {
                if c == Scalar::new(0.0, 0.0) {
                    continue;
                }
                if i + j + k != 2 {
                    return Err(Error::Degree(format!(
                        "inhomogeneous input: monomial of degree {} in homogeneous mode",
                        i + j + k
                    )));
                }
                match (i, j, k) {
                    (2, 0, 0) => p.cxx += c,
                    (0, 2, 0) => p.cyy += c,
                    (0, 0, 2) => p.czz += c,
                    (1, 1, 0) => p.cxy += c,
                    (1, 0, 1) => p.cxz += c,
                    (0, 1, 1) => p.cyz += c,
                    _ => unreachable!(),
                }
            }
            Ok(ParsedPoly::Ternary(p))
        }
        ParseMode::Affine2 => {
            let mut p = BivariateQuadratic::zero();
            for (&(i, j, k), &c) in &monomials {
                if c == Scalar::new(0.0, 0.0) {
                    continue;
                }
                debug_assert_eq!(k, 0, "z rejected at parse time in affine mode");
                match (i, j) {
                    (2, 0) => p.cxx += c,
                    (0, 2) => p.cyy += c,
                    (0, 0) => p.c0 += c,
                    (1, 1) => p.cxy += c,
                    (1, 0) => p.cx += c,
                    (0, 1) => p.cy += c,
                    _ => unreachable!(),
                }
            }
            Ok(ParsedPoly::Bivariate(p))
        }
    }
}

pub fn parse_ternary(text: &str) -> Result<TernaryQuadratic> {
    match parse_polynomial(text, ParseMode::Homogeneous3)? {
        ParsedPoly::Ternary(p) => Ok(p),
        ParsedPoly::Bivariate(_) => unreachable!(),
    }
}

pub fn parse_bivariate(text: &str) -> Result<BivariateQuadratic> {
    match parse_polynomial(text, ParseMode::Affine2)? {
        ParsedPoly::Bivariate(p) => Ok(p),
        ParsedPoly::Ternary(_) => unreachable!(),
    }
}

fn parse_ast(text: &str, mode: ParseMode) -> Result<PolyAst> {
    if text.trim().is_empty() {
        return Err(Error::Syntax {
            offset: 0,
            message: "empty input".into(),
        });
    }
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        mode,
    };
    let ast = p.expr()?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(ast)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    mode: ParseMode,
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<PolyAst> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = PolyAst::Sum(Box::new(acc), Box::new(self.term()?));
                }
                b'-' => {
                    self.pos += 1;
                    acc = PolyAst::Diff(Box::new(acc), Box::new(self.term()?));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<PolyAst> {
        let negate = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = PolyAst::Product(Box::new(acc), Box::new(self.factor()?));
                }
                Some(c) if starts_atom(c) => {
                    acc = PolyAst::Product(Box::new(acc), Box::new(self.factor()?));
                }
                _ => break,
            }
        }
        Ok(if negate {
            PolyAst::Neg(Box::new(acc))
        } else {
            acc
        })
    }

    fn factor(&mut self) -> Result<PolyAst> {
        let atom = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let exp = self.uint()?;
            return Ok(PolyAst::Power(Box::new(atom), exp));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<PolyAst> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(PolyAst::Imaginary)
            }
            Some(v @ (b'x' | b'y')) => {
                self.pos += 1;
                Ok(PolyAst::Var(v as char))
            }
            Some(b'z') => {
                if self.mode == ParseMode::Affine2 {
                    return Err(Error::Variable {
                        offset: self.pos,
                        var: 'z',
                    });
                }
                self.pos += 1;
                Ok(PolyAst::Var('z'))
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => {
                let start = self.pos;
                while self
                    .bytes
                    .get(self.pos)
                    .is_some_and(|b| b.is_ascii_digit())
                {
                    self.pos += 1;
                }
                if self.bytes.get(self.pos) == Some(&b'.') {
                    self.pos += 1;
                    while self
                        .bytes
                        .get(self.pos)
                        .is_some_and(|b| b.is_ascii_digit())
                    {
                        self.pos += 1;
                    }
                }
                let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                match s.parse::<f64>() {
                    Ok(v) => Ok(PolyAst::Number(v)),
                    Err(_) => Err(Error::Syntax {
                        offset: start,
                        message: format!("invalid number '{s}'"),
                    }),
                }
            }
            Some(_) => Err(self.err("expected number, variable, 'i' or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn uint(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a nonnegative integer exponent"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        s.parse::<u32>().map_err(|_| Error::Syntax {
            offset: start,
            message: format!("exponent '{s}' out of range"),
        })
    }
}

fn starts_atom(c: u8) -> bool {
    matches!(c, b'(' | b'i' | b'x' | b'y' | b'z') || c.is_ascii_digit() || c == b'.'
}

type Monomials = HashMap<(u32, u32, u32), Scalar>;

fn expand(ast: &PolyAst) -> Monomials {
    match ast {
        PolyAst::Number(v) => singleton((0, 0, 0), Scalar::new(*v, 0.0)),
        PolyAst::Imaginary => singleton((0, 0, 0), Scalar::new(0.0, 1.0)),
        PolyAst::Var('x') => singleton((1, 0, 0), Scalar::new(1.0, 0.0)),
        PolyAst::Var('y') => singleton((0, 1, 0), Scalar::new(1.0, 0.0)),
        PolyAst::Var('z') => singleton((0, 0, 1), Scalar::new(1.0, 0.0)),
        PolyAst::Var(_) => unreachable!(),
        PolyAst::Neg(a) => expand(a).into_iter().map(|(k, v)| (k, -v)).collect(),
        PolyAst::Sum(a, b) => add(expand(a), &expand(b), Scalar::new(1.0, 0.0)),
        PolyAst::Diff(a, b) => add(expand(a), &expand(b), Scalar::new(-1.0, 0.0)),
        PolyAst::Product(a, b) => mul(&expand(a), &expand(b)),
        PolyAst::Power(a, n) => {
            let base = expand(a);
            let mut acc = singleton((0, 0, 0), Scalar::new(1.0, 0.0));
            for _ in 0..*n {
                acc = mul(&acc, &base);
            }
            acc
        }
    }
}

fn singleton(key: (u32, u32, u32), value: Scalar) -> Monomials {
    let mut m = HashMap::new();
    m.insert(key, value);
    m
}

fn add(mut a: Monomials, b: &Monomials, sign: Scalar) -> Monomials {
    for (k, v) in b {
        *a.entry(*k).or_insert(Scalar::new(0.0, 0.0)) += sign * v;
    }
    a
}

fn mul(a: &Monomials, b: &Monomials) -> Monomials {
    let mut out = HashMap::new();
    for ((i1, j1, k1), v1) in a {
        for ((i2, j2, k2), v2) in b {
            *out.entry((i1 + i2, j1 + j2, k1 + k2))
                .or_insert(Scalar::new(0.0, 0.0)) += v1 * v2;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::re;

    fn q(c: [f64; 6]) -> TernaryQuadratic {
        TernaryQuadratic::from_coeffs([re(c[0]), re(c[1]), re(c[2]), re(c[3]), re(c[4]), re(c[5])])
    }

    #[test]
    fn worked_example_inputs() {
        assert_eq!(
            parse_ternary("x(x+z)").unwrap(),
            q([1.0, 0.0, 0.0, 0.0, 1.0, 0.0])
        );
        assert_eq!(
            parse_bivariate("y(2x+y+1)").unwrap(),
            BivariateQuadratic::new(re(0.0), re(1.0), re(0.0), re(2.0), re(0.0), re(1.0))
        );
        assert_eq!(
            parse_ternary("y(2x+y+z)").unwrap(),
            q([0.0, 1.0, 0.0, 2.0, 0.0, 1.0])
        );
    }

    #[test]
    fn implicit_multiplication_and_powers() {
        assert_eq!(
            parse_ternary("2x^2+2xy+2xz+y^2+yz").unwrap(),
            q([2.0, 1.0, 0.0, 2.0, 2.0, 1.0])
        );
        assert_eq!(
            parse_ternary("(x+y)(x+y+z)").unwrap(),
            q([1.0, 1.0, 0.0, 2.0, 1.0, 1.0])
        );
        assert_eq!(
            parse_ternary("(x + y)^2").unwrap(),
            q([1.0, 1.0, 0.0, 2.0, 0.0, 0.0])
        );
    }

    #[test]
    fn complex_coefficients() {
        let p = parse_ternary("i*x^2 + 2i*x*y").unwrap();
        assert_eq!(p.cxx, Scalar::new(0.0, 1.0));
        assert_eq!(p.cxy, Scalar::new(0.0, 2.0));
        let p = parse_bivariate("(1+2i)x + 0.5").unwrap();
        assert_eq!(p.cx, Scalar::new(1.0, 2.0));
        assert_eq!(p.c0, re(0.5));
    }

    #[test]
    fn inhomogeneous_rejected() {
        assert!(matches!(
            parse_polynomial("x + 1", ParseMode::Homogeneous3),
            Err(Error::Degree(_))
        ));
        assert!(matches!(
            parse_polynomial("x^3", ParseMode::Homogeneous3),
            Err(Error::Degree(_))
        ));
        // cancellation down to degree <= 2 is fine
        assert_eq!(
            parse_ternary("x^2 + x*y*z - x*y*z").unwrap(),
            q([1.0, 0.0, 0.0, 0.0, 0.0, 0.0])
        );
    }

    #[test]
    fn variable_z_rejected_in_affine_mode() {
        match parse_polynomial("x + z", ParseMode::Affine2) {
            Err(Error::Variable { offset, var }) => {
                assert_eq!(var, 'z');
                assert_eq!(offset, 4);
            }
            other => panic!("expected VariableError, got {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        match parse_ternary("x^") {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected SyntaxError, got {other:?}"),
        }
        assert!(matches!(parse_ternary("(x+y"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_ternary(""), Err(Error::Syntax { .. })));
        assert!(matches!(parse_ternary("x++y"), Err(Error::Syntax { .. })));
    }
}
