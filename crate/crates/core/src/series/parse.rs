//! Reader for polynomial text such as `z^3 + 3*z^2 + 2*z` or `1/2*t - 4`.
//!
//! Grammar (whitespace between tokens is ignored):
//!
//! ```text
//! expr  := sign? term (sign term)*
//! term  := coeff ('*' mono)? | mono
//! coeff := digits ('/' digits)?
//! mono  := ident ('^' digits)?
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Rat, SeriesError, TruncatedSeries};

/// Largest exponent accepted in polynomial text.
pub const MAX_EXPONENT: usize = 1 << 16;

/// A parsed polynomial together with the truncation metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedSeries {
    pub series: TruncatedSeries,
    /// Name of the variable used in the text, if any term mentioned one.
    pub variable: Option<String>,
    /// Set when terms of degree `>= precision` were discarded.
    pub truncated: bool,
}

/// Parses `text` into its full coefficient list (no truncation) and the
/// variable it used. `variable`, when given, is enforced.
pub fn parse_polynomial(
    text: &str,
    variable: Option<&str>,
) -> Result<(Vec<Rat>, Option<String>), SeriesError> {
    Parser::new(text, variable).terms()
}

/// Parses `text` in whatever single variable it uses.
pub fn parse_series(text: &str, precision: usize) -> Result<ParsedSeries, SeriesError> {
    Parser::new(text, None).run(precision)
}

/// Parses `text`, requiring every monomial to use `variable`.
pub fn parse_series_in(
    text: &str,
    variable: &str,
    precision: usize,
) -> Result<ParsedSeries, SeriesError> {
    Parser::new(text, Some(variable)).run(precision)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

struct Parser<'a> {
    text: &'a str,
    expected_var: Option<&'a str>,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    variable: Option<String>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, expected_var: Option<&'a str>) -> Self {
        Parser {
            text,
            expected_var,
            toks: Vec::new(),
            pos: 0,
            variable: expected_var.map(str::to_owned),
        }
    }

    fn syntax(position: usize, message: impl Into<String>) -> SeriesError {
        SeriesError::Syntax {
            position,
            message: message.into(),
        }
    }

    fn lex(&mut self) -> Result<(), SeriesError> {
        let chars: Vec<(usize, char)> = self.text.char_indices().collect();
        let mut i = 0;
        while i < chars.len() {
            let (at, c) = chars[i];
            match c {
                c if c.is_whitespace() => i += 1,
                '+' | '-' | '*' | '/' | '^' => {
                    let tok = match c {
                        '+' => Tok::Plus,
                        '-' => Tok::Minus,
                        '*' => Tok::Star,
                        '/' => Tok::Slash,
                        _ => Tok::Caret,
                    };
                    self.toks.push((at, tok));
                    i += 1;
                }
                c if c.is_ascii_digit() => {
                    let start = i;
                    while i < chars.len() && chars[i].1.is_ascii_digit() {
                        i += 1;
                    }
                    let digits: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                    let n = digits
                        .parse::<BigInt>()
                        .map_err(|_| Self::syntax(at, "bad integer"))?;
                    self.toks.push((at, Tok::Num(n)));
                }
                c if c.is_alphabetic() || c == '_' => {
                    let start = i;
                    while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                        i += 1;
                    }
                    let name: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                    self.toks.push((at, Tok::Ident(name)));
                }
                other => return Err(Self::syntax(at, format!("unexpected character '{other}'"))),
            }
        }
        Ok(())
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map_or(self.text.len(), |&(at, _)| at)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn integer(&mut self) -> Result<BigInt, SeriesError> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(n),
            _ => Err(Self::syntax(at, "expected an integer")),
        }
    }

    fn exponent_of(&mut self) -> Result<usize, SeriesError> {
        let at = self.here();
        let name = match self.bump() {
            Some(Tok::Ident(name)) => name,
            _ => return Err(Self::syntax(at, "expected a variable")),
        };
        match &self.variable {
            Some(v) if *v != name => {
                let msg = match self.expected_var {
                    Some(_) => format!("expected variable '{v}', found '{name}'"),
                    None => format!("mixed variables '{v}' and '{name}'"),
                };
                return Err(Self::syntax(at, msg));
            }
            Some(_) => {}
            None => self.variable = Some(name),
        }
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let at = self.here();
            let k = self.integer()?;
            return usize::try_from(k)
                .ok()
                .filter(|&k| k <= MAX_EXPONENT)
                .ok_or_else(|| Self::syntax(at, format!("exponent exceeds {MAX_EXPONENT}")));
        }
        Ok(1)
    }

    fn term(&mut self) -> Result<(Rat, usize), SeriesError> {
        match self.peek() {
            Some(Tok::Num(_)) => {
                let numer = self.integer()?;
                let mut denom = BigInt::from(1);
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let at = self.here();
                    denom = self.integer()?;
                    if denom.is_zero() {
                        return Err(SeriesError::ZeroDenominator { position: at });
                    }
                }
                let c = Rat::new(numer, denom);
                if self.peek() == Some(&Tok::Star) {
                    self.bump();
                    let k = self.exponent_of()?;
                    return Ok((c, k));
                }
                Ok((c, 0))
            }
            Some(Tok::Ident(_)) => Ok((Rat::from_integer(1.into()), self.exponent_of()?)),
            _ => Err(Self::syntax(self.here(), "expected a term")),
        }
    }

    fn run(self, precision: usize) -> Result<ParsedSeries, SeriesError> {
        if precision == 0 {
            return Err(SeriesError::ZeroPrecision);
        }
        let (coeffs, variable) = self.terms()?;
        let truncated = coeffs.iter().skip(precision).any(|c| !c.is_zero());
        Ok(ParsedSeries {
            series: TruncatedSeries::from_polynomial(coeffs, precision),
            variable,
            truncated,
        })
    }

    fn terms(mut self) -> Result<(Vec<Rat>, Option<String>), SeriesError> {
        self.lex()?;
        if self.toks.is_empty() {
            return Err(Self::syntax(0, "empty expression"));
        }
        let mut coeffs: Vec<Rat> = Vec::new();
        let mut first = true;
        while self.pos < self.toks.len() {
            let negative = match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    false
                }
                Some(Tok::Minus) => {
                    self.bump();
                    true
                }
                _ if first => false,
                _ => return Err(Self::syntax(self.here(), "expected '+' or '-'")),
            };
            first = false;
            let (c, k) = self.term()?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rat::zero());
            }
            if negative {
                coeffs[k] -= c;
            } else {
                coeffs[k] += c;
            }
        }
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Ok((coeffs, self.variable))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, rat};

    #[test]
    fn simple_polynomials() {
        let p = parse_series("t^2 - 1", 8).unwrap();
        assert_eq!(p.series, TruncatedSeries::from_integers(&[-1, 0, 1], 8));
        assert!(!p.truncated);

        let node = parse_series("z^3 + 3*z^2 + 2*z", 16).unwrap();
        assert_eq!(node.series.coeffs()[1], int(2));
        assert_eq!(node.series.coeffs()[2], int(3));
        assert_eq!(node.series.coeffs()[3], int(1));
        assert_eq!(node.variable.as_deref(), Some("z"));

        let half = parse_series("1/2*t", 4).unwrap();
        assert_eq!(half.series.coeffs()[1], rat(1, 2));
    }

    #[test]
    fn truncation_flag() {
        let p = parse_series("1 + t^9", 4).unwrap();
        assert!(p.truncated);
        assert!(!p.series.is_exact());
        assert_eq!(p.series.precision(), 4);
    }

    #[test]
    fn whitespace_and_signs() {
        let p = parse_series("  - 2 *t ^ 3+ t -t ", 6).unwrap();
        assert_eq!(p.series, TruncatedSeries::from_integers(&[0, 0, 0, -2], 6));
    }

    #[test]
    fn errors_report_position() {
        assert_eq!(
            parse_series("1/0*t", 4),
            Err(SeriesError::ZeroDenominator { position: 2 })
        );
        match parse_series("t^2 ++ 1", 4) {
            Err(SeriesError::Syntax { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_series("t + z", 4),
            Err(SeriesError::Syntax { position: 4, .. })
        ));
        assert!(matches!(
            parse_series_in("t + 1", "z", 4),
            Err(SeriesError::Syntax { position: 0, .. })
        ));
        assert!(matches!(
            parse_series("2 t", 4),
            Err(SeriesError::Syntax { .. })
        ));
        assert!(matches!(
            parse_series("", 4),
            Err(SeriesError::Syntax { .. })
        ));
        assert!(matches!(
            parse_series("t^99999999", 4),
            Err(SeriesError::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_series("t#", 4),
            Err(SeriesError::Syntax { position: 1, .. })
        ));
    }
}
