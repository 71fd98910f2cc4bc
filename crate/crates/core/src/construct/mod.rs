//! Constructions.
//!
//! Two-digit squares of order n come from a pair of orthogonal Latin squares
//! ([`latin`]). Four-digit bimagic squares of order n² come from an invertible
//! linear scheme over GF(n) that maps cell coordinates to digit indices
//! ([`scheme`]).

mod latin;
mod scheme;

use thiserror::Error;

use crate::digits::{DigitAlphabet, DigitString, MAX_WIDTH};
use crate::square::SquareError;
use crate::verify::LineFamily;

pub use latin::{
    build_latin_pair, build_two_algorism, has_transversal_diagonals, is_latin, middle_is_mean,
    DiagPolicy, LatinPair,
};
pub use scheme::{
    assemble, build_four_algorism, build_four_algorism_with, meets_goals, search_scheme,
    search_scheme_with, Scheme, SearchOptions,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("unsupported base order {0}; only 3, 4 and 5 are built")]
    UnsupportedOrder(usize),
    #[error("alphabet has {alphabet} digits but the scheme works over {ring} elements")]
    AlphabetMismatch { alphabet: usize, ring: usize },
    #[error("scheme matrix is singular")]
    Singular,
    #[error("no scheme of order {n} satisfies goals {goals}")]
    NotFound { n: usize, goals: GoalSet },
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Square(#[from] SquareError),
}

/// Line families a four-digit construction must make balanced and
/// pair-orthogonal. Rows and columns are always included.
///
/// Broken diagonals only need balance: they carry a carry/borrow term that
/// rules out pair orthogonality for every invertible linear scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GoalSet {
    diag: bool,
    antidiag: bool,
    blocks: bool,
    pandiag: bool,
}

impl GoalSet {
    /// Rows and columns only.
    pub fn rows_cols() -> GoalSet {
        GoalSet {
            diag: false,
            antidiag: false,
            blocks: false,
            pandiag: false,
        }
    }

    /// Rows, columns and both principal diagonals.
    pub fn magic() -> GoalSet {
        GoalSet::rows_cols().with_diagonals()
    }

    /// Rows, columns, both diagonals and aligned blocks.
    pub fn full() -> GoalSet {
        GoalSet::magic().with_blocks()
    }

    pub fn with_diagonals(self) -> GoalSet {
        GoalSet {
            diag: true,
            antidiag: true,
            ..self
        }
    }

    pub fn with_diag(self) -> GoalSet {
        GoalSet { diag: true, ..self }
    }

    pub fn with_antidiag(self) -> GoalSet {
        GoalSet {
            antidiag: true,
            ..self
        }
    }

    pub fn with_blocks(self) -> GoalSet {
        GoalSet {
            blocks: true,
            ..self
        }
    }

    pub fn with_pandiag(self) -> GoalSet {
        GoalSet {
            pandiag: true,
            ..self
        }
    }

    pub fn diag(&self) -> bool {
        self.diag
    }

    pub fn antidiag(&self) -> bool {
        self.antidiag
    }

    pub fn blocks(&self) -> bool {
        self.blocks
    }

    pub fn pandiag(&self) -> bool {
        self.pandiag
    }

    /// Families that must be balanced and pair-orthogonal.
    pub fn paired_families(&self) -> Vec<LineFamily> {
        let mut out = vec![LineFamily::Rows, LineFamily::Columns];
        if self.diag {
            out.push(LineFamily::MainDiagonal);
        }
        if self.antidiag {
            out.push(LineFamily::AntiDiagonal);
        }
        if self.blocks {
            out.push(LineFamily::Blocks);
        }
        out
    }
}

impl Default for GoalSet {
    fn default() -> Self {
        GoalSet::full()
    }
}

impl std::fmt::Display for GoalSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut names = vec!["rows", "cols"];
        for (on, name) in [
            (self.diag, "diag"),
            (self.antidiag, "antidiag"),
            (self.blocks, "blocks"),
            (self.pandiag, "pandiag"),
        ] {
            if on {
                names.push(name);
            }
        }
        write!(f, "{{{}}}", names.join(", "))
    }
}

/// Every `n^width` string over the alphabet, in lexicographic order of digit
/// indices (the alphabet is ascending, so this is also numeric order).
///
/// # Panics
///
/// If `width` is 0 or larger than [`MAX_WIDTH`].
pub fn enumerate_numbers(alphabet: &DigitAlphabet, width: usize) -> Vec<DigitString> {
    assert!(
        (1..=MAX_WIDTH).contains(&width),
        "width must be between 1 and {MAX_WIDTH}"
    );
    let n = alphabet.len();
    let count = n.pow(width as u32);
    (0..count)
        .map(|mut code| {
            let mut digits = vec![0u8; width];
            for slot in digits.iter_mut().rev() {
                *slot = alphabet.digit(code % n);
                code /= n;
            }
            DigitString::new(digits).expect("width checked above")
        })
        .collect()
}
