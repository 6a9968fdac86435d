//! Text form of series: `x + 3*x^(1/2) - 2*x^(-1)`.
//!
//! ```text
//! series := term (('+'|'-') term)* [('+') 'O' '(' 'x' '^' '(' rat ')' ')']
//! term   := rat | rat '*' 'x' ['^' '(' rat ')'] | 'x' ['^' '(' rat ')']
//! rat    := ['-'] int ['/' int]
//! ```
//!
//! The trailing `O(x^(r))` records a precision floor `r`; a series that is
//! only a floor prints as `O(x^(r))` alone.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::HahnSeries;
use crate::rational::Rational;
use crate::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { offset: self.pos, message: message.into() })
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(format!("expected '{}'", byte as char))
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected digits");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("non-empty digit run"))
    }

    fn rat(&mut self) -> Result<Rational> {
        let negative = self.peek() == Some(b'-');
        if negative {
            self.pos += 1;
        }
        let numer = self.int()?;
        let denom = if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            let d = self.int()?;
            if d.is_zero() {
                return Err(Error::Syntax { offset: at, message: "zero denominator".into() });
            }
            d
        } else {
            BigInt::one()
        };
        let r = Rational::new(numer, denom);
        Ok(if negative { -r } else { r })
    }

    /// `'^' '(' rat ')'` if present, else exponent 1.
    fn exponent(&mut self) -> Result<Rational> {
        if self.peek() != Some(b'^') {
            return Ok(Rational::one());
        }
        self.pos += 1;
        self.expect(b'(')?;
        let e = self.rat()?;
        self.expect(b')')?;
        Ok(e)
    }

    /// A term, or `None` for the trailing `O(...)`.
    fn term(&mut self) -> Result<Option<(Rational, Rational)>> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(Some((self.exponent()?, Rational::one())))
            }
            Some(b'O') => Ok(None),
            Some(b'-') | Some(b'0'..=b'9') => {
                let c = self.rat()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.expect(b'x')?;
                    Ok(Some((self.exponent()?, c)))
                } else {
                    Ok(Some((Rational::zero(), c)))
                }
            }
            Some(_) => self.fail("expected a term"),
            None => self.fail("unexpected end of input"),
        }
    }

    fn big_o(&mut self) -> Result<Rational> {
        self.expect(b'O')?;
        self.expect(b'(')?;
        self.expect(b'x')?;
        self.expect(b'^')?;
        self.expect(b'(')?;
        let f = self.rat()?;
        self.expect(b')')?;
        self.expect(b')')?;
        Ok(f)
    }

    fn series(&mut self) -> Result<HahnSeries> {
        let mut terms = Vec::new();
        let mut floor = None;
        let mut negate = false;
        loop {
            match self.term()? {
                Some((e, c)) => terms.push((e, if negate { -c } else { c })),
                None => {
                    if negate {
                        return self.fail("a floor term cannot be subtracted");
                    }
                    floor = Some(self.big_o()?);
                    break;
                }
            }
            match self.peek() {
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                None => break,
                Some(_) => return self.fail("expected '+' or '-'"),
            }
            self.pos += 1;
        }
        if self.peek().is_some() {
            return self.fail("trailing input");
        }
        if let Some(f) = &floor {
            if let Some((e, _)) = terms.iter().find(|(e, c)| e <= f && !c.is_zero()) {
                return self.fail(format!("term x^({e}) lies at or below the floor {f}"));
            }
        }
        Ok(HahnSeries::from_terms(terms, floor))
    }
}

/// Parses the text form; errors carry the byte offset of the problem.
pub fn parse_series(text: &str) -> Result<HahnSeries> {
    Parser { src: text.as_bytes(), pos: 0 }.series()
}

impl FromStr for HahnSeries {
    type Err = Error;
    fn from_str(s: &str) -> Result<HahnSeries> {
        parse_series(s)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &Rational) -> fmt::Result {
    if e.is_one() {
        write!(f, "x")
    } else {
        write!(f, "x^({e})")
    }
}

impl fmt::Display for HahnSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return match &self.floor {
                None => write!(f, "0"),
                Some(fl) => write!(f, "O(x^({fl}))"),
            };
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let shown = if k == 0 {
                c.clone()
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
                c.abs()
            };
            if e.is_zero() {
                write!(f, "{shown}")?;
            } else {
                if !shown.is_one() {
                    write!(f, "{shown}*")?;
                }
                write_monomial(f, e)?;
            }
        }
        if let Some(fl) = &self.floor {
            write!(f, " + O(x^({fl}))")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn parses_example() {
        let a = parse_series("x + 3*x^(1/2) - 2*x^(-1)").unwrap();
        assert_eq!(a.terms(), &[(int(1), int(1)), (rat(1, 2), int(3)), (int(-1), int(-2))]);
        assert_eq!(a.to_string(), "x + 3*x^(1/2) - 2*x^(-1)");
    }

    #[test]
    fn canonical_forms() {
        for text in [
            "0",
            "x",
            "-1*x",
            "1/2",
            "-3",
            "x^(2) - x + 1",
            "-1/2*x^(-1/3) + 7*x^(-5)",
            "O(x^(-2))",
            "x - 1 + O(x^(-3))",
        ] {
            assert_eq!(parse_series(text).unwrap().to_string(), text);
        }
    }

    #[test]
    fn lenient_input() {
        assert_eq!(parse_series("1 + x").unwrap().to_string(), "x + 1");
        assert_eq!(parse_series("x+x").unwrap().to_string(), "2*x");
        assert_eq!(parse_series("x - x").unwrap().to_string(), "0");
        assert_eq!(parse_series("x - -1").unwrap().to_string(), "x + 1");
    }

    #[test]
    fn syntax_errors() {
        let err = parse_series("x + + 1").unwrap_err();
        assert!(matches!(err, Error::Syntax { offset: 4, .. }), "{err:?}");
        assert!(matches!(parse_series(""), Err(Error::Syntax { offset: 0, .. })));
        assert!(matches!(parse_series("1/0"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_series("x^2"), Err(Error::Syntax { offset: 2, .. })));
        assert!(parse_series("x + 1 + O(x^(1))").is_err());
        assert!(parse_series("x - O(x^(-1))").is_err());
        assert!(parse_series("x y").is_err());
    }
}
