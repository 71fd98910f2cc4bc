//! Upside-down magic and bimagic squares whose entries are fixed-width digit
//! strings over small digit alphabets.
//!
//! The crate is split by concern:
//!
//! - [`digits`]: alphabets, digit strings and the 180° / mirror digit maps.
//! - [`square`]: the square data model and its whole-square transforms.
//! - [`render`]: seven-segment ASCII drawing.
//! - [`verify`]: line sums and property classification.
//! - [`field`]: the small finite rings used by the constructions.
//! - [`construct`]: orthogonal Latin pairs and linear-scheme bimagic squares.
//! - [`equation`]: upside-down arithmetic identities.
//! - [`cli`]: the square file format, JSON reports and command handlers.

pub mod cli;
pub mod construct;
pub mod digits;
pub mod equation;
pub mod field;
pub mod render;
pub mod square;
pub mod verify;

pub use construct::{
    assemble, build_four_algorism, build_latin_pair, build_two_algorism, enumerate_numbers,
    search_scheme, search_scheme_with, ConstructError, DiagPolicy, GoalSet, LatinPair, Scheme,
    SearchOptions,
};
pub use digits::{DigitAlphabet, DigitError, DigitString};
pub use equation::{parse_equation, Equation, EquationError, Verdict};

pub use field::Ring;
pub use square::{BadCell, Square, SquareError, TransformError};
pub use verify::{
    check_balance, check_pair_orthogonality, classify, expected_sums, line_profile, LineFamily,
    PropertyReport, SumPair, VerifyError,
};
