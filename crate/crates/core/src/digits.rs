//! Digit alphabets, fixed-width digit strings and the two glyph maps
//! (180° rotation and left-right mirror) of seven-segment digits.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Longest digit string whose value is guaranteed to fit in an `i64`.
pub const MAX_WIDTH: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DigitError {
    #[error("alphabet must hold between 2 and 10 digits, got {0}")]
    AlphabetSize(usize),
    #[error("duplicate digit {0} in alphabet")]
    DuplicateDigit(u8),
    #[error("'{0}' is not a decimal digit")]
    NotADigit(char),
    #[error("digit string width must be between 1 and {MAX_WIDTH}, got {0}")]
    BadWidth(usize),
    #[error("digit {digit} at position {position} has no 180° rotation")]
    NonRotatable { digit: u8, position: usize },
    #[error("digit {digit} at position {position} has no mirror image")]
    NonMirrorable { digit: u8, position: usize },
}

/// 180° rotation of a single seven-segment digit. Defined on {0,1,2,5,6,8,9}.
pub fn strobo_digit(d: u8) -> Option<u8> {
    match d {
        0 | 1 | 2 | 5 | 8 => Some(d),
        6 => Some(9),
        9 => Some(6),
        _ => None,
    }
}

/// Left-right reflection of a single seven-segment digit. Defined on {0,1,2,5,8}.
pub fn mirror_digit(d: u8) -> Option<u8> {
    match d {
        0 | 1 | 8 => Some(d),
        2 => Some(5),
        5 => Some(2),
        _ => None,
    }
}

/// An ascending set of distinct decimal digits.
///
/// The position of a digit in the set is its *index*; constructions work on
/// indices and only translate to digits when a square is assembled.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitAlphabet {
    digits: Vec<u8>,
}

impl DigitAlphabet {
    /// Builds an alphabet from digits in any order. Duplicates are rejected.
    pub fn new(digits: &[u8]) -> Result<Self, DigitError> {
        if !(2..=10).contains(&digits.len()) {
            return Err(DigitError::AlphabetSize(digits.len()));
        }
        let mut sorted = digits.to_vec();
        sorted.sort_unstable();
        if let Some(&d) = sorted.iter().find(|&&d| d > 9) {
            return Err(DigitError::NotADigit(char::from(b'0'.wrapping_add(d))));
        }
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(DigitError::DuplicateDigit(w[0]));
        }
        Ok(DigitAlphabet { digits: sorted })
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn contains(&self, d: u8) -> bool {
        self.index_of(d).is_some()
    }

    pub fn index_of(&self, d: u8) -> Option<usize> {
        self.digits.binary_search(&d).ok()
    }

    /// Digit at `index`. Panics when out of range.
    pub fn digit(&self, index: usize) -> u8 {
        self.digits[index]
    }

    /// Image of the alphabet under the 180° digit map, if every digit rotates.
    pub fn strobo_image(&self) -> Result<DigitAlphabet, DigitError> {
        let image = self
            .digits
            .iter()
            .enumerate()
            .map(|(position, &digit)| {
                strobo_digit(digit).ok_or(DigitError::NonRotatable { digit, position })
            })
            .collect::<Result<Vec<_>, _>>()?;
        DigitAlphabet::new(&image)
    }

    /// Image of the alphabet under the mirror digit map, if every digit mirrors.
    pub fn mirror_image(&self) -> Result<DigitAlphabet, DigitError> {
        let image = self
            .digits
            .iter()
            .enumerate()
            .map(|(position, &digit)| {
                mirror_digit(digit).ok_or(DigitError::NonMirrorable { digit, position })
            })
            .collect::<Result<Vec<_>, _>>()?;
        DigitAlphabet::new(&image)
    }
}

impl fmt::Display for DigitAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for DigitAlphabet {
    type Err = DigitError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = parse_digits(s)?;
        DigitAlphabet::new(&digits)
    }
}

/// A fixed-width digit string. Leading zeros are part of the string, so
/// `"0012"` and `"12"` are different strings with the same value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DigitString {
    digits: Vec<u8>,
}

impl DigitString {
    pub fn new(digits: Vec<u8>) -> Result<Self, DigitError> {
        if digits.is_empty() || digits.len() > MAX_WIDTH {
            return Err(DigitError::BadWidth(digits.len()));
        }
        if let Some(&d) = digits.iter().find(|&&d| d > 9) {
            return Err(DigitError::NotADigit(char::from(b'0'.wrapping_add(d))));
        }
        Ok(DigitString { digits })
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn width(&self) -> usize {
        self.digits.len()
    }

    /// Positional value, most significant digit first.
    pub fn value(&self) -> i64 {
        self.digits
            .iter()
            .fold(0i64, |acc, &d| acc * 10 + i64::from(d))
    }

    /// Reads the string upside down: reverse the digits and rotate each one.
    pub fn strobo(&self) -> Result<DigitString, DigitError> {
        self.transform(strobo_digit, |digit, position| DigitError::NonRotatable {
            digit,
            position,
        })
    }

    /// Reads the string in a mirror: reverse the digits and reflect each one.
    pub fn mirror(&self) -> Result<DigitString, DigitError> {
        self.transform(mirror_digit, |digit, position| DigitError::NonMirrorable {
            digit,
            position,
        })
    }

    fn transform(
        &self,
        map: fn(u8) -> Option<u8>,
        err: fn(u8, usize) -> DigitError,
    ) -> Result<DigitString, DigitError> {
        let mapped = self
            .digits
            .iter()
            .enumerate()
            .map(|(position, &d)| map(d).ok_or_else(|| err(d, position)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(DigitString {
            digits: mapped.into_iter().rev().collect(),
        })
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for DigitString {
    type Err = DigitError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DigitString::new(parse_digits(s)?)
    }
}

fn parse_digits(s: &str) -> Result<Vec<u8>, DigitError> {
    s.chars()
        .map(|c| {
            c.to_digit(10)
                .map(|d| d as u8)
                .ok_or(DigitError::NotADigit(c))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(s: &str) -> DigitString {
        s.parse().unwrap()
    }

    #[test]
    fn value_keeps_leading_zeros_significant_only_for_identity() {
        assert_eq!(ds("0012").value(), 12);
        assert_eq!(ds("9611").value(), 9611);
        assert_eq!(ds("00").value(), 0);
        assert_ne!(ds("0012"), ds("12"));
        assert_eq!(ds("0012").width(), 4);
    }

    #[test]
    fn strobo_examples() {
        assert_eq!(ds("69").strobo().unwrap(), ds("69"));
        assert_eq!(ds("2001").strobo().unwrap(), ds("1002"));
        assert_eq!(ds("1196").strobo().unwrap(), ds("9611"));
        assert_eq!(
            ds("137").strobo(),
            Err(DigitError::NonRotatable {
                digit: 3,
                position: 1
            })
        );
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(ds("2").mirror().unwrap(), ds("5"));
        assert_eq!(ds("101").mirror().unwrap(), ds("101"));
        assert_eq!(ds("25").mirror().unwrap(), ds("25"));
        assert!(matches!(
            ds("69").mirror(),
            Err(DigitError::NonMirrorable {
                digit: 6,
                position: 0
            })
        ));
    }

    #[test]
    fn digit_maps_are_involutions() {
        for d in 0..10u8 {
            if let Some(r) = strobo_digit(d) {
                assert_eq!(strobo_digit(r), Some(d));
            }
            if let Some(m) = mirror_digit(d) {
                assert_eq!(mirror_digit(m), Some(d));
            }
        }
        let rotatable: Vec<u8> = (0..10).filter(|&d| strobo_digit(d).is_some()).collect();
        assert_eq!(rotatable, vec![0, 1, 2, 5, 6, 8, 9]);
        let mirrorable: Vec<u8> = (0..10).filter(|&d| mirror_digit(d).is_some()).collect();
        assert_eq!(mirrorable, vec![0, 1, 2, 5, 8]);
    }

    #[test]
    fn exhaustive_involution_up_to_width_four() {
        for width in 1..=4u32 {
            for n in 0..10u32.pow(width) {
                let s = format!("{n:0w$}", w = width as usize);
                let x = ds(&s);
                if let Ok(r) = x.strobo() {
                    assert_eq!(r.strobo().unwrap(), x);
                    assert_eq!(r.width(), x.width());
                }
                if let Ok(m) = x.mirror() {
                    assert_eq!(m.mirror().unwrap(), x);
                }
            }
        }
    }

    #[test]
    fn strobo_palindromes_of_fixed_digits_keep_their_value() {
        for s in ["0", "1", "2", "5", "8", "121", "2552", "80108"] {
            let x = ds(s);
            assert_eq!(x.strobo().unwrap().value(), x.value());
        }
    }

    #[test]
    fn alphabet_is_sorted_and_indexed() {
        let a: DigitAlphabet = "9210".parse().unwrap();
        assert_eq!(a.digits(), &[0, 1, 2, 9]);
        assert_eq!(a.index_of(9), Some(3));
        assert_eq!(a.index_of(6), None);
        assert_eq!(a.to_string(), "0129");
        for (i, &d) in a.digits().iter().enumerate() {
            assert_eq!(a.index_of(d), Some(i));
            assert_eq!(a.digit(i), d);
        }
    }

    #[test]
    fn alphabet_rejects_bad_input() {
        assert_eq!(
            "0".parse::<DigitAlphabet>(),
            Err(DigitError::AlphabetSize(1))
        );
        assert_eq!(
            "011".parse::<DigitAlphabet>(),
            Err(DigitError::DuplicateDigit(1))
        );
        assert_eq!(
            "0a".parse::<DigitAlphabet>(),
            Err(DigitError::NotADigit('a'))
        );
    }

    #[test]
    fn alphabet_images() {
        let a: DigitAlphabet = "0129".parse().unwrap();
        assert_eq!(a.strobo_image().unwrap().to_string(), "0126");
        let b: DigitAlphabet = "012".parse().unwrap();
        assert_eq!(b.mirror_image().unwrap().to_string(), "015");
        assert!(a.mirror_image().is_err());
    }

    #[test]
    fn width_limits() {
        assert_eq!(DigitString::new(vec![]), Err(DigitError::BadWidth(0)));
        assert!(DigitString::new(vec![9; MAX_WIDTH]).is_ok());
        assert_eq!(ds("999999999999999999").value(), 999_999_999_999_999_999);
    }
}
