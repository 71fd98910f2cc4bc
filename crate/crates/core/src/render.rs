//! Seven-segment ASCII rendering.
//!
//! Glyphs use the classic underscore-and-pipe layout. At scale `s` a glyph is
//! `s + 2` columns wide and `2s + 1` lines tall:
//!
//! ```text
//!  _     _  _     _  _  _  _  _
//! | |  | _| _||_||_ |_   ||_||_|
//! |_|  ||_  _|  | _||_|  ||_| _|
//! ```
//!
//! Segments are named `a` (top), `b` (upper right), `c` (lower right),
//! `d` (bottom), `e` (lower left), `f` (upper left) and `g` (middle).

use crate::digits::DigitString;
use crate::square::Square;

/// Blank columns between neighbouring cells of a rendered square.
pub const CELL_GAP: usize = 2;

/// A set of lit segments, bit 0 = `a` through bit 6 = `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segments(u8);

impl Segments {
    pub const A: u8 = 1 << 0;
    pub const B: u8 = 1 << 1;
    pub const C: u8 = 1 << 2;
    pub const D: u8 = 1 << 3;
    pub const E: u8 = 1 << 4;
    pub const F: u8 = 1 << 5;
    pub const G: u8 = 1 << 6;

    const TABLE: [u8; 10] = [
        Self::A | Self::B | Self::C | Self::D | Self::E | Self::F,
        Self::B | Self::C,
        Self::A | Self::B | Self::G | Self::E | Self::D,
        Self::A | Self::B | Self::G | Self::C | Self::D,
        Self::F | Self::G | Self::B | Self::C,
        Self::A | Self::F | Self::G | Self::C | Self::D,
        Self::A | Self::F | Self::G | Self::E | Self::D | Self::C,
        Self::A | Self::B | Self::C,
        0x7f,
        Self::A | Self::B | Self::C | Self::D | Self::F | Self::G,
    ];

    /// Canonical segment set of a decimal digit. Panics for `d > 9`.
    pub fn of_digit(d: u8) -> Segments {
        Segments(Self::TABLE[usize::from(d)])
    }

    pub fn from_bits(bits: u8) -> Segments {
        Segments(bits & 0x7f)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn has(self, seg: u8) -> bool {
        self.0 & seg != 0
    }

    /// Digit whose canonical glyph is exactly this set, if any.
    pub fn digit(self) -> Option<u8> {
        Self::TABLE
            .iter()
            .position(|&t| t == self.0)
            .map(|d| d as u8)
    }

    /// The same glyph turned through 180°: a↔d, b↔e, c↔f, g fixed.
    pub fn rotated(self) -> Segments {
        const PAIRS: [(u8, u8); 3] = [
            (Segments::A, Segments::D),
            (Segments::B, Segments::E),
            (Segments::C, Segments::F),
        ];
        let mut out = self.0 & Self::G;
        for (x, y) in PAIRS {
            if self.has(x) {
                out |= y;
            }
            if self.has(y) {
                out |= x;
            }
        }
        Segments(out)
    }
}

/// Lines of a single glyph at the given scale, each exactly `scale + 2` wide.
pub fn glyph(seg: Segments, scale: usize) -> Vec<String> {
    let scale = scale.max(1);
    let bar = |on: bool| if on { "_" } else { " " }.repeat(scale);
    let side = |on: bool| if on { '|' } else { ' ' };
    let mut lines = Vec::with_capacity(2 * scale + 1);
    lines.push(format!(" {} ", bar(seg.has(Segments::A))));
    for r in 1..=scale {
        let mid = bar(r == scale && seg.has(Segments::G));
        lines.push(format!(
            "{}{}{}",
            side(seg.has(Segments::F)),
            mid,
            side(seg.has(Segments::B))
        ));
    }
    for r in 1..=scale {
        let mid = bar(r == scale && seg.has(Segments::D));
        lines.push(format!(
            "{}{}{}",
            side(seg.has(Segments::E)),
            mid,
            side(seg.has(Segments::C))
        ));
    }
    lines
}

/// Side-by-side glyphs for a run of segment sets, without trimming.
fn glyph_row(segs: &[Segments], scale: usize) -> Vec<String> {
    let height = 2 * scale.max(1) + 1;
    let mut lines = vec![String::new(); height];
    for &seg in segs {
        for (line, part) in lines.iter_mut().zip(glyph(seg, scale)) {
            line.push_str(&part);
        }
    }
    lines
}

fn finish(lines: impl IntoIterator<Item = String>) -> String {
    let mut out = String::new();
    for line in lines {
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Renders arbitrary segment sets, one glyph each, trailing spaces trimmed.
pub fn render_segments(segs: &[Segments], scale: usize) -> String {
    finish(glyph_row(segs, scale))
}

/// Renders a digit string as adjacent glyphs.
pub fn render_digits(ds: &DigitString, scale: usize) -> String {
    let segs: Vec<Segments> = ds.digits().iter().map(|&d| Segments::of_digit(d)).collect();
    render_segments(&segs, scale)
}

/// Renders a whole square: cells separated by [`CELL_GAP`] blank columns and
/// square rows separated by one blank line.
pub fn render_square(sq: &Square, scale: usize) -> String {
    let gap = " ".repeat(CELL_GAP);
    let mut blocks = Vec::with_capacity(sq.order());
    for row in sq.rows() {
        let cells: Vec<Vec<String>> = row
            .iter()
            .map(|ds| {
                let segs: Vec<Segments> =
                    ds.digits().iter().map(|&d| Segments::of_digit(d)).collect();
                glyph_row(&segs, scale)
            })
            .collect();
        let height = cells[0].len();
        let lines: Vec<String> = (0..height)
            .map(|l| {
                cells
                    .iter()
                    .map(|c| c[l].as_str())
                    .collect::<Vec<_>>()
                    .join(&gap)
            })
            .collect();
        blocks.push(finish(lines));
    }
    blocks.join("\n")
}

/// Reads rendered glyphs back into segment sets. `text` must be the output of
/// [`render_segments`] or [`render_digits`] at the same scale.
pub fn decode_glyphs(text: &str, scale: usize) -> Vec<Segments> {
    let scale = scale.max(1);
    let glyph_width = scale + 2;
    let lines: Vec<Vec<char>> = text.lines().map(|l| l.chars().collect()).collect();
    let width = lines.iter().map(Vec::len).max().unwrap_or(0);
    let count = width.div_ceil(glyph_width);
    let at = |line: usize, col: usize| {
        lines
            .get(line)
            .and_then(|l| l.get(col))
            .copied()
            .unwrap_or(' ')
    };
    (0..count)
        .map(|g| {
            let x0 = g * glyph_width;
            let right = x0 + scale + 1;
            let mut bits = 0u8;
            if at(0, x0 + 1) == '_' {
                bits |= Segments::A;
            }
            if at(1, x0) == '|' {
                bits |= Segments::F;
            }
            if at(1, right) == '|' {
                bits |= Segments::B;
            }
            if at(scale, x0 + 1) == '_' {
                bits |= Segments::G;
            }
            if at(scale + 1, x0) == '|' {
                bits |= Segments::E;
            }
            if at(scale + 1, right) == '|' {
                bits |= Segments::C;
            }
            if at(2 * scale, x0 + 1) == '_' {
                bits |= Segments::D;
            }
            Segments(bits)
        })
        .collect()
}
