//! Upside-down arithmetic identities.
//!
//! An equation is `side = side`, each side a `+`/`-` chain of unsigned decimal
//! literals. Turning the text through 180° reverses the whole token sequence
//! and maps every digit through the strobogrammatic digit map; the operators
//! look the same upside down. An upside-down identity is true both ways up.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::digits::strobo_digit;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquationError {
    /// Positions are character offsets into the input text, starting at 0.
    #[error("syntax error at position {position}: {message}")]
    Syntax {
        position: usize,
        message: &'static str,
    },
    #[error("digit {ch} at position {position} cannot be turned upside down")]
    NonRotatable { ch: char, position: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A signed literal. The first term of a side is always `Plus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub sign: Sign,
    /// Decimal digits, leading zeros kept.
    pub literal: String,
}

impl Term {
    pub fn value(&self) -> BigInt {
        let v: BigInt = self.literal.parse().expect("literal holds digits only");
        match self.sign {
            Sign::Plus => v,
            Sign::Minus => -v,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    raw: String,
    left: Vec<Term>,
    right: Vec<Term>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Valid,
    Invalid,
    NonRotatable,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Valid => "valid",
            Verdict::Invalid => "invalid",
            Verdict::NonRotatable => "non-rotatable",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

enum Token {
    Literal(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, EquationError> {
    let mut tokens: Vec<(usize, Token)> = Vec::new();
    let mut prev_digit = false;
    for (pos, ch) in text.chars().enumerate() {
        match ch {
            '0'..='9' => {
                if prev_digit {
                    if let Some((_, Token::Literal(s))) = tokens.last_mut() {
                        s.push(ch);
                    }
                } else {
                    tokens.push((pos, Token::Literal(ch.to_string())));
                }
                prev_digit = true;
                continue;
            }
            '+' | '=' => tokens.push((pos, Token::Op(ch))),
            '-' | '\u{2212}' => tokens.push((pos, Token::Op('-'))),
            c if c.is_whitespace() => {}
            _ => {
                return Err(EquationError::Syntax {
                    position: pos,
                    message: "illegal character",
                })
            }
        }
        prev_digit = false;
    }
    Ok(tokens)
}

/// Parses `side '=' side` where `side := term (('+' | '-') term)*`.
/// Whitespace between tokens is ignored; `−` (U+2212) is accepted for `-`.
pub fn parse_equation(text: &str) -> Result<Equation, EquationError> {
    let tokens = tokenize(text)?;
    let end = text.chars().count();
    let mut sides: Vec<Vec<Term>> = vec![Vec::new()];
    let mut pending: Option<Sign> = Some(Sign::Plus);
    let mut seen_eq = false;
    for (pos, tok) in tokens {
        match (tok, pending) {
            (Token::Literal(literal), Some(sign)) => {
                sides.last_mut().unwrap().push(Term { sign, literal });
                pending = None;
            }
            (Token::Literal(_), None) => {
                return Err(EquationError::Syntax {
                    position: pos,
                    message: "expected an operator",
                })
            }
            (Token::Op(_), Some(_)) => {
                return Err(EquationError::Syntax {
                    position: pos,
                    message: "expected a number",
                })
            }
            (Token::Op('='), None) => {
                if seen_eq {
                    return Err(EquationError::Syntax {
                        position: pos,
                        message: "second '='",
                    });
                }
                seen_eq = true;
                sides.push(Vec::new());
                pending = Some(Sign::Plus);
            }
            (Token::Op(op), None) => {
                pending = Some(if op == '+' { Sign::Plus } else { Sign::Minus });
            }
        }
    }
    if pending.is_some() {
        return Err(EquationError::Syntax {
            position: end,
            message: "expected a number",
        });
    }
    if !seen_eq {
        return Err(EquationError::Syntax {
            position: end,
            message: "missing '='",
        });
    }
    let right = sides.pop().unwrap();
    let left = sides.pop().unwrap();
    Ok(Equation {
        raw: text.to_string(),
        left,
        right,
    })
}

impl std::str::FromStr for Equation {
    type Err = EquationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_equation(s)
    }
}

impl Equation {
    /// The text this equation was parsed from.
    pub fn raw(&self) -> &str {
        &self.raw
    }

    pub fn left(&self) -> &[Term] {
        &self.left
    }

    pub fn right(&self) -> &[Term] {
        &self.right
    }

    /// Value of each side and whether they agree.
    pub fn evaluate(&self) -> (BigInt, BigInt, bool) {
        let l: BigInt = self.left.iter().map(Term::value).sum();
        let r: BigInt = self.right.iter().map(Term::value).sum();
        let eq = l == r;
        (l, r, eq)
    }

    /// The equation read upside down. Errors name the first digit of the raw
    /// text outside {0, 1, 2, 5, 6, 8, 9}.
    pub fn rotate(&self) -> Result<Equation, EquationError> {
        for (position, ch) in self.raw.chars().enumerate() {
            if let Some(d) = ch.to_digit(10) {
                if strobo_digit(d as u8).is_none() {
                    return Err(EquationError::NonRotatable { ch, position });
                }
            }
        }
        let turned: String = self
            .to_string()
            .chars()
            .rev()
            .map(|c| match c.to_digit(10) {
                Some(d) => char::from(b'0' + strobo_digit(d as u8).expect("checked above")),
                None => c,
            })
            .collect();
        Ok(parse_equation(&turned).expect("reversal preserves the grammar"))
    }
}

/// Canonical text: no whitespace, ASCII `-`.
impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |f: &mut fmt::Formatter<'_>, terms: &[Term]| -> fmt::Result {
            for (i, t) in terms.iter().enumerate() {
                if i > 0 {
                    write!(f, "{}", t.sign.symbol())?;
                }
                f.write_str(&t.literal)?;
            }
            Ok(())
        };
        side(f, &self.left)?;
        f.write_str("=")?;
        side(f, &self.right)
    }
}

pub fn evaluate(eq: &Equation) -> (BigInt, BigInt, bool) {
    eq.evaluate()
}

pub fn rotate_equation(eq: &Equation) -> Result<Equation, EquationError> {
    eq.rotate()
}

/// Valid when the equation holds both ways up. Syntax errors are returned;
/// an unrotatable digit gives [`Verdict::NonRotatable`].
pub fn is_upside_down_identity(text: &str) -> Result<Verdict, EquationError> {
    let eq = parse_equation(text)?;
    let turned = match eq.rotate() {
        Ok(t) => t,
        Err(EquationError::NonRotatable { .. }) => return Ok(Verdict::NonRotatable),
        Err(e) => return Err(e),
    };
    if eq.evaluate().2 && turned.evaluate().2 {
        Ok(Verdict::Valid)
    } else {
        Ok(Verdict::Invalid)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(s: &str) -> Equation {
        s.parse().unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn parse_terms() {
        let e = eq("10+1=11");
        assert_eq!(e.left().len(), 2);
        assert_eq!(e.left()[1].literal, "1");
        assert_eq!(e.right()[0].literal, "11");
        let e = eq(" 2+1 = 1+2 ");
        assert_eq!(e.to_string(), "2+1=1+2");
        assert_eq!(eq("007=7").left()[0].literal, "007");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let pos = |s: &str| match parse_equation(s) {
            Err(EquationError::Syntax { position, .. }) => position,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(pos("1+=2"), 2);
        assert_eq!(pos("1+2"), 3);
        assert_eq!(pos("1=2=3"), 3);
        assert_eq!(pos("1=2+"), 4);
        assert_eq!(pos("1*2=2"), 1);
        assert_eq!(pos("-1=1"), 0);
        assert_eq!(pos("1 2=3"), 2);
        assert_eq!(pos("=1"), 0);
    }

    #[test]
    fn evaluation() {
        assert_eq!(eq("10+1=11").evaluate(), (big(11), big(11), true));
        assert_eq!(eq("2+1=1+2").evaluate(), (big(3), big(3), true));
        assert_eq!(eq("9\u{2212}6=2").evaluate(), (big(3), big(2), false));
        let huge = eq("99999999999999999999999+1=100000000000000000000000");
        assert!(huge.evaluate().2);
    }

    #[test]
    fn rotation() {
        assert_eq!(eq("10+1=11").rotate().unwrap().to_string(), "11=1+01");
        assert_eq!(eq("2+1=1+2").rotate().unwrap().to_string(), "2+1=1+2");
        assert_eq!(eq("6+9=9+6").rotate().unwrap().to_string(), "9+6=6+9");
        assert_eq!(eq("1196=9611").rotate().unwrap().to_string(), "1196=9611");
        assert_eq!(
            eq("3+1=4").rotate(),
            Err(EquationError::NonRotatable {
                ch: '3',
                position: 0
            })
        );
    }

    #[test]
    fn verdicts() {
        assert_eq!(is_upside_down_identity("2+1=1+2"), Ok(Verdict::Valid));
        assert_eq!(is_upside_down_identity("6+9=9+6"), Ok(Verdict::Valid));
        assert_eq!(is_upside_down_identity("10+1=11"), Ok(Verdict::Invalid));
        assert_eq!(is_upside_down_identity("3+1=4"), Ok(Verdict::NonRotatable));
        assert!(is_upside_down_identity("1+=2").is_err());
    }
}
