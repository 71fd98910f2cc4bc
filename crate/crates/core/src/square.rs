//! The square data model: an N×N grid of equal-width digit strings over one
//! alphabet, with the 180° rotation and mirror transforms.

use std::fmt;

use thiserror::Error;

use crate::digits::{DigitAlphabet, DigitError, DigitString};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SquareError {
    #[error("square must have at least one row")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("cell ({row}, {col}) has width {width}, expected {expected}")]
    WidthMismatch {
        row: usize,
        col: usize,
        width: usize,
        expected: usize,
    },
    #[error("cell ({row}, {col}) uses digit {digit}, which is outside the alphabet")]
    OutsideAlphabet { row: usize, col: usize, digit: u8 },
}

/// A cell whose entry could not be transformed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BadCell {
    pub row: usize,
    pub col: usize,
    pub digit: u8,
    pub position: usize,
}

impl fmt::Display for BadCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}) digit {} at position {}",
            self.row, self.col, self.digit, self.position
        )
    }
}

fn list_cells(cells: &[BadCell]) -> String {
    cells
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("entries do not rotate: {}", list_cells(.0))]
    NonRotatable(Vec<BadCell>),
    #[error("entries have no mirror image: {}", list_cells(.0))]
    NonMirrorable(Vec<BadCell>),
    #[error("alphabet digit {0} has no image under the transform")]
    Alphabet(u8),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Square {
    order: usize,
    width: usize,
    alphabet: DigitAlphabet,
    cells: Vec<DigitString>,
}

impl Square {
    /// Builds a square from rows, checking shape, widths and alphabet.
    pub fn new(alphabet: DigitAlphabet, rows: Vec<Vec<DigitString>>) -> Result<Self, SquareError> {
        let order = rows.len();
        if order == 0 {
            return Err(SquareError::Empty);
        }
        let width = rows[0].first().map(DigitString::width).unwrap_or(0);
        let mut cells = Vec::with_capacity(order * order);
        for (row, entries) in rows.into_iter().enumerate() {
            if entries.len() != order {
                return Err(SquareError::RaggedRow {
                    row,
                    len: entries.len(),
                    expected: order,
                });
            }
            cells.extend(entries);
        }
        Square::from_cells(order, width, alphabet, cells)
    }

    /// Builds a square from `order * order` cells in row-major order.
    pub fn from_cells(
        order: usize,
        width: usize,
        alphabet: DigitAlphabet,
        cells: Vec<DigitString>,
    ) -> Result<Self, SquareError> {
        if order == 0 {
            return Err(SquareError::Empty);
        }
        if cells.len() != order * order {
            let row = cells.len() / order;
            return Err(SquareError::RaggedRow {
                row,
                len: cells.len() % order,
                expected: order,
            });
        }
        for (idx, cell) in cells.iter().enumerate() {
            let (row, col) = (idx / order, idx % order);
            if cell.width() != width {
                return Err(SquareError::WidthMismatch {
                    row,
                    col,
                    width: cell.width(),
                    expected: width,
                });
            }
            if let Some(&digit) = cell.digits().iter().find(|&&d| !alphabet.contains(d)) {
                return Err(SquareError::OutsideAlphabet { row, col, digit });
            }
        }
        Ok(Square {
            order,
            width,
            alphabet,
            cells,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn alphabet(&self) -> &DigitAlphabet {
        &self.alphabet
    }

    pub fn get(&self, row: usize, col: usize) -> &DigitString {
        &self.cells[row * self.order + col]
    }

    pub fn value(&self, row: usize, col: usize) -> i64 {
        self.get(row, col).value()
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> &[DigitString] {
        &self.cells
    }

    pub fn rows(&self) -> impl Iterator<Item = &[DigitString]> {
        self.cells.chunks(self.order)
    }

    /// True when the entries are exactly all `n^k` strings over the alphabet.
    pub fn is_combination_complete(&self) -> bool {
        let n = self.alphabet.len() as u128;
        if n.checked_pow(self.width as u32) != Some((self.order * self.order) as u128) {
            return false;
        }
        let mut sorted: Vec<&DigitString> = self.cells.iter().collect();
        sorted.sort_unstable();
        // Every entry is over the alphabet with the right width, so N² = n^k
        // distinct entries cover every combination.
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    /// The square read upside down: `out[i][j] = strobo(in[N-1-i][N-1-j])`.
    pub fn rotate180(&self) -> Result<Square, TransformError> {
        let n = self.order;
        let cells = self.map_cells(
            |i, j| (n - 1 - i, n - 1 - j),
            DigitString::strobo,
            TransformError::NonRotatable,
        )?;
        let alphabet = self.alphabet.strobo_image().map_err(alphabet_error)?;
        Ok(Square {
            order: n,
            width: self.width,
            alphabet,
            cells,
        })
    }

    /// The square seen in a mirror: `out[i][j] = mirror(in[i][N-1-j])`.
    pub fn mirror(&self) -> Result<Square, TransformError> {
        let n = self.order;
        let cells = self.map_cells(
            |i, j| (i, n - 1 - j),
            DigitString::mirror,
            TransformError::NonMirrorable,
        )?;
        let alphabet = self.alphabet.mirror_image().map_err(alphabet_error)?;
        Ok(Square {
            order: n,
            width: self.width,
            alphabet,
            cells,
        })
    }

    /// Strict fixed point of the rotation, `rotate180(sq) == sq`.
    pub fn is_rotation_fixed(&self) -> bool {
        self.rotate180().map(|r| r == *self).unwrap_or(false)
    }

    fn map_cells(
        &self,
        source: impl Fn(usize, usize) -> (usize, usize),
        map: fn(&DigitString) -> Result<DigitString, DigitError>,
        err: fn(Vec<BadCell>) -> TransformError,
    ) -> Result<Vec<DigitString>, TransformError> {
        let n = self.order;
        let mut cells = Vec::with_capacity(n * n);
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let (si, sj) = source(i, j);
                match map(self.get(si, sj)) {
                    Ok(ds) => cells.push(ds),
                    Err(
                        DigitError::NonRotatable { digit, position }
                        | DigitError::NonMirrorable { digit, position },
                    ) => bad.push(BadCell {
                        row: si,
                        col: sj,
                        digit,
                        position,
                    }),
                    Err(other) => unreachable!("digit map failed with {other}"),
                }
            }
        }
        if bad.is_empty() {
            Ok(cells)
        } else {
            bad.sort_by_key(|c| (c.row, c.col));
            Err(err(bad))
        }
    }
}

fn alphabet_error(e: DigitError) -> TransformError {
    match e {
        DigitError::NonRotatable { digit, .. } | DigitError::NonMirrorable { digit, .. } => {
            TransformError::Alphabet(digit)
        }
        other => unreachable!("alphabet image failed with {other}"),
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let line = row
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}
