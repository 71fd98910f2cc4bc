//! The square file format.
//!
//! ```text
//! order=3 width=2 alphabet=012
//! 21 00 12
//! 02 11 20
//! 10 22 01
//! ```
//!
//! One header line, then `order` lines of `order` whitespace-separated tokens,
//! each `width` digits long. Files are written with single spaces, LF line
//! endings and a trailing newline.

use thiserror::Error;

use crate::digits::{DigitAlphabet, DigitString, MAX_WIDTH};
use crate::square::Square;

/// A malformed square file. Lines are numbered from 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FileError {
    pub line: usize,
    pub message: String,
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, FileError> {
    Err(FileError {
        line,
        message: message.into(),
    })
}

struct Header {
    order: usize,
    width: usize,
    alphabet: DigitAlphabet,
}

fn parse_header(text: &str) -> Result<Header, FileError> {
    let mut order = None;
    let mut width = None;
    let mut alphabet = None;
    for field in text.split_whitespace() {
        let Some((key, value)) = field.split_once('=') else {
            return fail(1, format!("expected key=value, found {field:?}"));
        };
        let slot = match key {
            "order" => &mut order,
            "width" => &mut width,
            "alphabet" => &mut alphabet,
            _ => return fail(1, format!("unknown header key {key:?}")),
        };
        if slot.replace(value).is_some() {
            return fail(1, format!("duplicate header key {key:?}"));
        }
    }
    let number = |name: &str, v: Option<&str>| -> Result<usize, FileError> {
        let Some(v) = v else {
            return fail(1, format!("missing {name}"));
        };
        match v.parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => fail(1, format!("{name} must be a positive integer, found {v:?}")),
        }
    };
    let order = number("order", order)?;
    let width = number("width", width)?;
    if width > MAX_WIDTH {
        return fail(1, format!("width {width} exceeds {MAX_WIDTH}"));
    }
    let Some(alpha) = alphabet else {
        return fail(1, "missing alphabet");
    };
    let digits: Vec<u8> = match alpha
        .chars()
        .map(|c| c.to_digit(10))
        .collect::<Option<Vec<_>>>()
    {
        Some(d) => d.into_iter().map(|d| d as u8).collect(),
        None => return fail(1, format!("alphabet must be digits, found {alpha:?}")),
    };
    if digits.windows(2).any(|w| w[0] >= w[1]) {
        return fail(
            1,
            format!("alphabet digits must be strictly ascending, found {alpha:?}"),
        );
    }
    let alphabet = DigitAlphabet::new(&digits).or_else(|e| fail(1, e.to_string()))?;
    Ok(Header {
        order,
        width,
        alphabet,
    })
}

/// Parses a square file.
pub fn read_square(text: &str) -> Result<Square, FileError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let Some((_, header)) = lines.next() else {
        return fail(1, "empty file");
    };
    let Header {
        order,
        width,
        alphabet,
    } = parse_header(header)?;
    let mut rows = Vec::with_capacity(order);
    for (lineno, line) in lines {
        if rows.len() == order {
            if line.trim().is_empty() {
                continue;
            }
            return fail(lineno, format!("more than {order} rows"));
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != order {
            return fail(
                lineno,
                format!("expected {order} entries, found {}", tokens.len()),
            );
        }
        let mut row = Vec::with_capacity(order);
        for tok in tokens {
            let ds: DigitString = tok
                .parse()
                .or_else(|_| fail(lineno, format!("{tok:?} is not a digit string")))?;
            if ds.width() != width {
                return fail(
                    lineno,
                    format!("{tok:?} has width {}, expected {width}", ds.width()),
                );
            }
            if let Some(d) = ds.digits().iter().find(|&&d| !alphabet.contains(d)) {
                return fail(
                    lineno,
                    format!("{tok:?} uses digit {d}, outside alphabet {alphabet}"),
                );
            }
            row.push(ds);
        }
        rows.push(row);
    }
    if rows.len() != order {
        return fail(
            text.lines().count() + 1,
            format!("expected {order} rows, found {}", rows.len()),
        );
    }
    Square::new(alphabet, rows).or_else(|e| fail(1, e.to_string()))
}

/// Serialises a square in the file format.
pub fn write_square(sq: &Square) -> String {
    format!(
        "order={} width={} alphabet={}\n{}",
        sq.order(),
        sq.width(),
        sq.alphabet(),
        sq
    )
}
