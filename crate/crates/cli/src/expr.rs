//! Class expressions: `-3*CP3 + 8*CP1*CP2 - 5*CP1^3` and friends.
//!
//! ```text
//! expr   := [sign] term (sign term)*
//! term   := rat ['*' factor ('*' factor)*] | factor ('*' factor)*
//! factor := ('CP' | 'P' | 'X' | 'x' | 'p') int ['^' int]
//! rat    := int ['/' int]
//! sign   := '+' | '-' | '−'
//! ```
//!
//! `CP<k>` and `P<k>` name the same generator. The other symbols name the
//! generators of separate rings and cannot be mixed with `P` in one expression.

use std::fmt;

use cobord_core::{GradedPoly, Monomial, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    /// Projective-space classes, printed `P<k>`.
    Cobordism,
    /// Images under `φ_W`, printed `X<k>`.
    W,
    /// W-generators, printed `x<k>`.
    WGenerators,
    /// Höhn parameters, printed `p<k>`.
    Hoehn,
}

impl Ring {
    pub fn symbol(self) -> &'static str {
        match self {
            Ring::Cobordism => "P",
            Ring::W => "X",
            Ring::WGenerators => "x",
            Ring::Hoehn => "p",
        }
    }
}

/// A parsed expression, normalised to a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassExpr {
    pub ring: Ring,
    pub poly: GradedPoly,
}

impl fmt::Display for ClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poly.display_with(self.ring.symbol()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("zero denominator at line {line}, column {column}")]
    ZeroDenominator { line: usize, column: usize },

    #[error("term of weight {weight} exceeds max degree {cap}")]
    OverCap { weight: usize, cap: usize },
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    cap: usize,
    ring: Option<Ring>,
}

impl Parser {
    fn new(text: &str, cap: usize) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            cap,
            ring: None,
        }
    }

    fn location(&self, at: usize) -> (usize, usize) {
        let mut line = 1;
        let mut column = 1;
        for &c in &self.chars[..at.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        (line, column)
    }

    fn error_at(&self, at: usize, message: impl Into<String>) -> ParseError {
        let (line, column) = self.location(at);
        ParseError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek()? {
            '+' => {
                self.pos += 1;
                Some(false)
            }
            '-' | '\u{2212}' => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> Option<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| (start, self.chars[start..self.pos].iter().collect()))
    }

    fn small_int(&mut self, what: &str) -> Result<(usize, usize), ParseError> {
        let at = self.pos;
        let (start, s) = self
            .digits()
            .ok_or_else(|| self.error_at(at, format!("expected {what}")))?;
        let n = s
            .parse::<usize>()
            .map_err(|_| self.error_at(start, format!("{what} is too large")))?;
        Ok((start, n))
    }

    fn rational(&mut self) -> Result<Option<Rational>, ParseError> {
        let Some((_, num)) = self.digits() else {
            return Ok(None);
        };
        let num: BigInt = num.parse().expect("digits");
        if self.peek() != Some('/') {
            return Ok(Some(Rational::from_integer(num)));
        }
        self.pos += 1;
        let at = {
            self.skip_ws();
            self.pos
        };
        let (_, den) = self
            .digits()
            .ok_or_else(|| self.error_at(at, "expected a denominator"))?;
        let den: BigInt = den.parse().expect("digits");
        if den.is_zero() {
            let (line, column) = self.location(at);
            return Err(ParseError::ZeroDenominator { line, column });
        }
        Ok(Some(Rational::new(num, den)))
    }

    fn factor(&mut self) -> Result<(usize, u32), ParseError> {
        self.skip_ws();
        let at = self.pos;
        let rest: String = self.chars[self.pos..].iter().take(2).collect();
        let (ring, len) = if rest.starts_with("CP") {
            (Ring::Cobordism, 2)
        } else {
            match rest.chars().next() {
                Some('P') => (Ring::Cobordism, 1),
                Some('X') => (Ring::W, 1),
                Some('x') => (Ring::WGenerators, 1),
                Some('p') => (Ring::Hoehn, 1),
                Some(c) => return Err(self.error_at(at, format!("unexpected '{c}'"))),
                None => return Err(self.error_at(at, "unexpected end of input")),
            }
        };
        match self.ring {
            Some(r) if r != ring => {
                return Err(self.error_at(
                    at,
                    format!("cannot mix {} and {} generators", r.symbol(), ring.symbol()),
                ))
            }
            _ => self.ring = Some(ring),
        }
        self.pos += len;
        if !self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            return Err(self.error_at(self.pos, "expected a generator index"));
        }
        let (start, k) = self.small_int("generator index")?;
        if k == 0 {
            return Err(self.error_at(start, "generator indices start at 1"));
        }
        if k > self.cap {
            return Err(ParseError::OverCap {
                weight: k,
                cap: self.cap,
            });
        }
        let mut e = 1u32;
        if self.peek() == Some('^') {
            self.pos += 1;
            let (start, n) = self.small_int("exponent")?;
            e = u32::try_from(n).map_err(|_| self.error_at(start, "exponent is too large"))?;
        }
        Ok((k, e))
    }

    fn term(&mut self) -> Result<(Monomial, Rational), ParseError> {
        let mut coeff = Rational::one();
        let mut exps: Vec<u32> = Vec::new();
        let mut need_factor = true;
        if let Some(c) = self.rational()? {
            coeff = c;
            if self.peek() != Some('*') {
                need_factor = false;
            } else {
                self.pos += 1;
            }
        }
        if need_factor {
            loop {
                let (k, e) = self.factor()?;
                if exps.len() < k {
                    exps.resize(k, 0);
                }
                exps[k - 1] += e;
                if self.peek() != Some('*') {
                    break;
                }
                self.pos += 1;
            }
        }
        Ok((Monomial::from_exponents(exps), coeff))
    }

    fn expr(&mut self) -> Result<ClassExpr, ParseError> {
        let mut terms = Vec::new();
        let mut negative = self.sign().unwrap_or(false);
        loop {
            let (m, c) = self.term()?;
            let w = m.weight();
            if w > self.cap {
                return Err(ParseError::OverCap {
                    weight: w,
                    cap: self.cap,
                });
            }
            terms.push((m, if negative { -c } else { c }));
            match self.sign() {
                Some(neg) => negative = neg,
                None => break,
            }
        }
        if let Some(c) = self.peek() {
            return Err(self.error_at(self.pos, format!("unexpected '{c}'")));
        }
        Ok(ClassExpr {
            ring: self.ring.unwrap_or(Ring::Cobordism),
            poly: GradedPoly::from_terms(terms, self.cap),
        })
    }
}

/// Parses an expression whose monomials all have weight at most `cap`.
pub fn parse_class(text: &str, cap: usize) -> Result<ClassExpr, ParseError> {
    Parser::new(text, cap).expr()
}

/// Canonical text; `parse_class(&print_class(e), cap) == e`.
pub fn print_class(e: &ClassExpr) -> String {
    e.to_string()
}

/// Parses an expression in the `P` ring.
pub fn parse_cobordism(text: &str, cap: usize) -> Result<GradedPoly, ParseError> {
    let e = parse_class(text, cap)?;
    if e.ring != Ring::Cobordism {
        return Err(ParseError::Syntax {
            line: 1,
            column: 1,
            message: format!("expected CP or P generators, found {}", e.ring.symbol()),
        });
    }
    Ok(e.poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cobord_core::rational::qf;

    fn p(s: &str) -> GradedPoly {
        parse_cobordism(s, 8).unwrap()
    }

    #[test]
    fn y2_expression() {
        let y2 = p("CP2 - 9/8*CP1^2");
        let expect = GradedPoly::var(2, 8) - GradedPoly::var(1, 8).pow(2).scale(&qf(9, 8));
        assert_eq!(y2, expect);
    }

    #[test]
    fn repeated_factors_merge() {
        assert_eq!(p("CP1*CP1"), p("CP1^2"));
        assert_eq!(p("P1 * CP1"), p("CP1^2"));
    }

    #[test]
    fn zero_index_is_rejected() {
        assert!(matches!(
            parse_class("CP0", 8),
            Err(ParseError::Syntax {
                line: 1,
                column: 3,
                ..
            })
        ));
    }

    #[test]
    fn zero_denominator() {
        assert!(matches!(
            parse_class("1/0*CP1", 8),
            Err(ParseError::ZeroDenominator { line: 1, column: 3 })
        ));
    }

    #[test]
    fn error_locations_track_lines() {
        match parse_class("CP1 +\n  CP2 $", 8) {
            Err(ParseError::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 7)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn signs_and_constants() {
        assert_eq!(p("−CP1 + 3/2"), p("3/2-P1"));
        assert_eq!(p("-2"), GradedPoly::constant(qf(-2, 1), 8));
        assert_eq!(p("+CP1-CP1"), GradedPoly::zero(8));
    }

    #[test]
    fn rings_do_not_mix() {
        assert!(parse_class("X1 + P1", 8).is_err());
        assert_eq!(parse_class("X1^2 - 3*X3", 8).unwrap().ring, Ring::W);
    }

    #[test]
    fn weight_over_cap() {
        assert_eq!(
            parse_class("CP3^2", 4),
            Err(ParseError::OverCap { weight: 6, cap: 4 })
        );
    }

    #[test]
    fn canonical_round_trip() {
        for s in [
            "-5/2*P1^3+4*P1*P2-3/2*P3",
            "0",
            "3/2",
            "X1^2-X3",
            "p1*p2-2*p3",
        ] {
            let e = parse_class(s, 8).unwrap();
            assert_eq!(print_class(&e), s);
            assert_eq!(parse_class(&print_class(&e), 8).unwrap(), e);
        }
    }
}
