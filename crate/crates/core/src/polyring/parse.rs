//! Text syntax for polynomials: `3/2*x0^2*y - x1^3`.
//!
//! A polynomial is a signed sum of terms; a term is a `*`-separated product
//! of factors; a factor is an integer, a fraction `p/q`, or a variable with
//! an optional non-negative integer exponent. No floats, no parentheses.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Rational, WeightedPoly};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Token::Plus)),
            '-' => out.push((start, Token::Minus)),
            '*' => out.push((start, Token::Star)),
            '/' => out.push((start, Token::Slash)),
            '^' => out.push((start, Token::Caret)),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i] == b'.' || bytes[i] == b'e' || bytes[i] == b'E') {
                    return Err(Error::parse_at(text, i, "floating-point literals are not allowed"));
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Token::Int(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or(c);
                return Err(Error::parse_at(text, start, format!("unexpected character '{ch}'")));
            }
        }
        i += 1;
    }
    Ok(out)
}

/// Coefficient and `(variable, exponent)` factors of one term.
type RawTerm = (Rational, Vec<(usize, u32)>);

struct Parser<'a> {
    text: &'a str,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    vars: Vec<String>,
    infer: bool,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.text.len(), |(o, _)| *o)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse_at(self.text, self.offset(), msg)
    }

    fn var_index(&mut self, name: &str) -> Result<usize> {
        if let Some(i) = self.vars.iter().position(|v| v == name) {
            return Ok(i);
        }
        if self.infer {
            self.vars.push(name.to_string());
            return Ok(self.vars.len() - 1);
        }
        Err(self.error(format!("undeclared variable '{name}'")))
    }

    /// Terms as (coefficient, exponent list by variable index).
    fn polynomial(&mut self) -> Result<Vec<RawTerm>> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some(Token::Minus) => {
                self.next();
                -Rational::one()
            }
            Some(Token::Plus) => {
                self.next();
                Rational::one()
            }
            None => return Err(self.error("empty polynomial")),
            _ => Rational::one(),
        };
        loop {
            let (c, e) = self.term()?;
            terms.push((sign * c, e));
            sign = match self.next() {
                None => break,
                Some(Token::Plus) => Rational::one(),
                Some(Token::Minus) => -Rational::one(),
                Some(_) => {
                    self.pos -= 1;
                    return Err(self.error("expected '+', '-' or end of input"));
                }
            };
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<RawTerm> {
        let mut coeff = Rational::one();
        let mut exps = Vec::new();
        loop {
            match self.next() {
                Some(Token::Int(n)) => {
                    let mut value = Rational::from_integer(n);
                    if self.peek() == Some(&Token::Slash) {
                        self.next();
                        match self.next() {
                            Some(Token::Int(d)) if !d.is_zero() => value /= Rational::from_integer(d),
                            Some(Token::Int(_)) => {
                                self.pos -= 1;
                                return Err(self.error("division by zero"));
                            }
                            _ => {
                                self.pos -= 1;
                                return Err(self.error("expected integer denominator"));
                            }
                        }
                    }
                    coeff *= value;
                }
                Some(Token::Ident(name)) => {
                    self.pos -= 1;
                    let idx = self.var_index(&name)?;
                    self.pos += 1;
                    let mut e = 1u32;
                    if self.peek() == Some(&Token::Caret) {
                        self.next();
                        match self.next() {
                            Some(Token::Int(n)) => {
                                e = u32::try_from(n).map_err(|_| {
                                    self.pos -= 1;
                                    self.error("exponent too large")
                                })?;
                            }
                            _ => {
                                self.pos -= 1;
                                return Err(self.error("expected non-negative integer exponent"));
                            }
                        }
                    }
                    exps.push((idx, e));
                }
                _ => {
                    self.pos -= 1;
                    return Err(self.error("expected a number or a variable"));
                }
            }
            if self.peek() == Some(&Token::Star) {
                self.next();
            } else {
                break;
            }
        }
        Ok((coeff, exps))
    }
}

fn build(nvars: usize, terms: Vec<RawTerm>) -> WeightedPoly {
    WeightedPoly::from_terms(
        nvars,
        terms.into_iter().map(|(c, es)| {
            let mut e = vec![0u32; nvars];
            for (i, a) in es {
                e[i] += a;
            }
            (Monomial::new(e), c)
        }),
    )
}

/// Parses `text` over the declared variables, in order.
pub fn parse_poly(text: &str, vars: &[String]) -> Result<WeightedPoly> {
    let mut p = Parser {
        text,
        tokens: tokenize(text)?,
        pos: 0,
        vars: vars.to_vec(),
        infer: false,
    };
    let terms = p.polynomial()?;
    Ok(build(vars.len(), terms))
}

/// Parses `text`, declaring variables in order of first appearance.
pub fn parse_poly_infer(text: &str) -> Result<(WeightedPoly, Vec<String>)> {
    let mut p = Parser {
        text,
        tokens: tokenize(text)?,
        pos: 0,
        vars: Vec::new(),
        infer: true,
    };
    let terms = p.polynomial()?;
    let vars = p.vars;
    Ok((build(vars.len(), terms), vars))
}

/// Exact rational literal: `3`, `-4/5`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::parse_at(text, 0, format!("'{text}' is not an exact rational"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{rat, ratio};

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_rational_coefficients() {
        let f = parse_poly("3/2*x0^2*y - x1^3", &names(&["x0", "x1", "y"])).unwrap();
        assert_eq!(f.coeff(&Monomial::new(vec![2, 0, 1])), ratio(3, 2));
        assert_eq!(f.coeff(&Monomial::new(vec![0, 3, 0])), rat(-1));
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn infers_variable_order() {
        let (f, vars) = parse_poly_infer("x^2 - u^2 - y^3 + v^3").unwrap();
        assert_eq!(vars, names(&["x", "u", "y", "v"]));
        assert_eq!(f.coeff(&Monomial::new(vec![0, 0, 3, 0])), rat(-1));
    }

    #[test]
    fn double_sign_is_rejected() {
        assert!(parse_poly_infer("2*x + -1/2").is_err());
    }

    #[test]
    fn product_of_factors() {
        let (f, _) = parse_poly_infer("2*x*x*3 - 1/2").unwrap();
        assert_eq!(f.coeff(&Monomial::new(vec![2])), rat(6));
        assert_eq!(f.coeff(&Monomial::new(vec![0])), ratio(-1, 2));
    }

    #[test]
    fn rejects_floats_and_unknowns() {
        assert!(matches!(parse_poly_infer("1.5*x"), Err(Error::Parse { column: 2, .. })));
        assert!(matches!(
            parse_poly("x + q", &names(&["x"])),
            Err(Error::Parse { line: 1, column: 5, .. })
        ));
        assert!(parse_poly_infer("x^").is_err());
        assert!(parse_poly_infer("").is_err());
        assert!(parse_poly_infer("x $ y").is_err());
        assert!(parse_poly_infer("1/0*x").is_err());
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("4/5").unwrap(), ratio(4, 5));
        assert_eq!(parse_rational(" -6 ").unwrap(), rat(-6));
        assert!(parse_rational("0.8").is_err());
        assert!(parse_rational("1/0").is_err());
    }
}
