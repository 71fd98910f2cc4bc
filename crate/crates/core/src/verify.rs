//! Line sums and property classification.
//!
//! A *line* is any list of cells whose values are summed: a row, a column, a
//! principal diagonal, a broken (wrap-around) diagonal, an aligned block, or
//! the whole grid. For each line two sums are tracked: `s1` (values) and `s2`
//! (squared values).

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::digits::DigitAlphabet;
use crate::square::Square;

/// Above this many strings `expected_sums` switches from enumeration to the
/// closed form.
pub const ENUMERATION_LIMIT: u128 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{family} are not defined for order {order}")]
    BadFamily { family: LineFamily, order: usize },
    #[error("totals S1={s1} S2={s2} are not divisible by order {order}")]
    NotDivisible { s1: i128, s2: i128, order: usize },
    #[error(
        "pair orthogonality needs order n² and width 4 (order {order}, width {width}, n = {n})"
    )]
    Unsupported {
        order: usize,
        width: usize,
        n: usize,
    },
    #[error("order and width must be positive")]
    EmptyShape,
    #[error("sums overflow 128-bit arithmetic")]
    Overflow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LineFamily {
    Rows,
    Columns,
    #[serde(rename = "diagonal")]
    MainDiagonal,
    #[serde(rename = "antidiagonal")]
    AntiDiagonal,
    /// Both wrap-around directions: first the N lines `(i, i+c)`, then the N
    /// lines `(i, c-i)`, indices mod N.
    #[serde(rename = "broken")]
    BrokenDiagonals,
    /// Aligned b×b blocks of a b²×b² square, row-major by block.
    Blocks,
    /// The whole grid as a single line.
    Whole,
}

impl LineFamily {
    pub fn name(self) -> &'static str {
        match self {
            LineFamily::Rows => "rows",
            LineFamily::Columns => "columns",
            LineFamily::MainDiagonal => "diagonal",
            LineFamily::AntiDiagonal => "antidiagonal",
            LineFamily::BrokenDiagonals => "broken",
            LineFamily::Blocks => "blocks",
            LineFamily::Whole => "whole",
        }
    }

    /// Cell coordinates of every line in the family.
    pub fn lines(self, order: usize) -> Result<Vec<Vec<(usize, usize)>>, VerifyError> {
        let n = order;
        let lines = match self {
            LineFamily::Rows => (0..n).map(|i| (0..n).map(|j| (i, j)).collect()).collect(),
            LineFamily::Columns => (0..n).map(|j| (0..n).map(|i| (i, j)).collect()).collect(),
            LineFamily::MainDiagonal => vec![(0..n).map(|i| (i, i)).collect()],
            LineFamily::AntiDiagonal => vec![(0..n).map(|i| (i, n - 1 - i)).collect()],
            LineFamily::BrokenDiagonals => {
                let down = (0..n).map(|c| (0..n).map(|i| (i, (i + c) % n)).collect());
                let up = (0..n).map(|c| (0..n).map(|i| (i, (c + n - i) % n)).collect());
                down.chain(up).collect()
            }
            LineFamily::Blocks => {
                let b = block_side(n).ok_or(VerifyError::BadFamily {
                    family: self,
                    order: n,
                })?;
                let mut lines = Vec::with_capacity(n);
                for bi in 0..b {
                    for bj in 0..b {
                        let cells = (0..b)
                            .flat_map(|i| (0..b).map(move |j| (bi * b + i, bj * b + j)))
                            .collect();
                        lines.push(cells);
                    }
                }
                lines
            }
            LineFamily::Whole => vec![(0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()],
        };
        Ok(lines)
    }
}

impl fmt::Display for LineFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Side of the aligned blocks, when `order` is a perfect square.
pub fn block_side(order: usize) -> Option<usize> {
    let b = (order as f64).sqrt().round() as usize;
    (b * b == order && b > 0).then_some(b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SumPair {
    pub s1: i128,
    pub s2: i128,
}

/// `s1` and `s2` of every line of `family`.
pub fn line_profile(sq: &Square, family: LineFamily) -> Result<Vec<SumPair>, VerifyError> {
    Ok(family
        .lines(sq.order())?
        .iter()
        .map(|line| {
            line.iter().fold(SumPair { s1: 0, s2: 0 }, |acc, &(i, j)| {
                let v = i128::from(sq.value(i, j));
                SumPair {
                    s1: acc.s1 + v,
                    s2: acc.s2 + v * v,
                }
            })
        })
        .collect())
}

/// Line sums every arrangement of all `n^width` strings into an `order`-square
/// must have: the grand totals divided by `order`.
///
/// For the 9×9 square over {0,1,2} this gives S2 = 17169495. The figure
/// 17169395 that is sometimes quoted for that square is 100 short; any
/// bimagic arrangement of the 81 numbers is forced to 154525455 / 9.
pub fn expected_sums(
    alphabet: &DigitAlphabet,
    width: usize,
    order: usize,
) -> Result<SumPair, VerifyError> {
    if width == 0 || order == 0 {
        return Err(VerifyError::EmptyShape);
    }
    let count = (alphabet.len() as u128)
        .checked_pow(width as u32)
        .ok_or(VerifyError::Overflow)?;
    let (t1, t2) = if count <= ENUMERATION_LIMIT {
        enumerated_totals(alphabet, width)
    } else {
        closed_form_totals(alphabet, width)?
    };
    let order = order as i128;
    if t1 % order != 0 || t2 % order != 0 {
        return Err(VerifyError::NotDivisible {
            s1: t1,
            s2: t2,
            order: order as usize,
        });
    }
    Ok(SumPair {
        s1: t1 / order,
        s2: t2 / order,
    })
}

/// Σ value and Σ value² over every string, by walking all of them.
pub fn enumerated_totals(alphabet: &DigitAlphabet, width: usize) -> (i128, i128) {
    let n = alphabet.len();
    let mut idx = vec![0usize; width];
    let (mut t1, mut t2) = (0i128, 0i128);
    loop {
        let v = idx
            .iter()
            .fold(0i128, |acc, &k| acc * 10 + i128::from(alphabet.digit(k)));
        t1 += v;
        t2 += v * v;
        // odometer, last position fastest
        let mut p = width;
        loop {
            if p == 0 {
                return (t1, t2);
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < n {
                break;
            }
            idx[p] = 0;
        }
    }
}

/// Σ value and Σ value² from digit moments: with weights w_p = 10^(k-1-p),
/// Σv = n^(k-1)·Σa·Σw and Σv² = n^(k-1)·Σa²·Σw² + n^(k-2)·(Σa)²·Σ_{p≠q} w_p w_q.
pub fn closed_form_totals(
    alphabet: &DigitAlphabet,
    width: usize,
) -> Result<(i128, i128), VerifyError> {
    let n = alphabet.len() as i128;
    let a1: i128 = alphabet.digits().iter().map(|&d| i128::from(d)).sum();
    let a2: i128 = alphabet
        .digits()
        .iter()
        .map(|&d| i128::from(d).pow(2))
        .sum();
    let k = width as u32;
    let ov = || VerifyError::Overflow;
    let mut w1 = 0i128;
    let mut w2 = 0i128;
    for p in 0..k {
        let w = 10i128.checked_pow(p).ok_or_else(ov)?;
        w1 = w1.checked_add(w).ok_or_else(ov)?;
        w2 = w2
            .checked_add(w.checked_mul(w).ok_or_else(ov)?)
            .ok_or_else(ov)?;
    }
    let cross = w1
        .checked_mul(w1)
        .and_then(|x| x.checked_sub(w2))
        .ok_or_else(ov)?;
    let pow = |e: u32| n.checked_pow(e).ok_or_else(ov);
    let t1 = pow(k - 1)?
        .checked_mul(a1)
        .and_then(|x| x.checked_mul(w1))
        .ok_or_else(ov)?;
    let diag = pow(k - 1)?
        .checked_mul(a2)
        .and_then(|x| x.checked_mul(w2))
        .ok_or_else(ov)?;
    let off = if k >= 2 {
        pow(k - 2)?
            .checked_mul(a1 * a1)
            .and_then(|x| x.checked_mul(cross))
            .ok_or_else(ov)?
    } else {
        0
    };
    Ok((t1, diag.checked_add(off).ok_or_else(ov)?))
}

/// True iff in every line each alphabet digit occurs equally often at every
/// digit position (N/n times in a line of N cells).
pub fn check_balance(sq: &Square, family: LineFamily) -> Result<bool, VerifyError> {
    let n = sq.alphabet().len();
    let indices = digit_indices(sq);
    let lines = family.lines(sq.order())?;
    Ok(lines.iter().all(|line| {
        if line.len() % n != 0 {
            return false;
        }
        let want = line.len() / n;
        (0..sq.width()).all(|p| {
            let mut counts = vec![0usize; n];
            for &(i, j) in line {
                counts[indices[i * sq.order() + j][p]] += 1;
            }
            counts.iter().all(|&c| c == want)
        })
    }))
}

/// True iff in every line, for every pair of digit positions p < q, each of
/// the n² ordered digit pairs occurs equally often (once per line of N = n²
/// cells). Defined for four-digit squares of order n².
pub fn check_pair_orthogonality(sq: &Square, family: LineFamily) -> Result<bool, VerifyError> {
    let n = sq.alphabet().len();
    if sq.width() != 4 || sq.order() != n * n {
        return Err(VerifyError::Unsupported {
            order: sq.order(),
            width: sq.width(),
            n,
        });
    }
    let indices = digit_indices(sq);
    let lines = family.lines(sq.order())?;
    Ok(lines.iter().all(|line| {
        if line.len() % (n * n) != 0 {
            return false;
        }
        let want = line.len() / (n * n);
        (0..4).all(|p| {
            (p + 1..4).all(|q| {
                let mut counts = vec![0usize; n * n];
                for &(i, j) in line {
                    let d = &indices[i * sq.order() + j];
                    counts[d[p] * n + d[q]] += 1;
                }
                counts.iter().all(|&c| c == want)
            })
        })
    }))
}

fn digit_indices(sq: &Square) -> Vec<Vec<usize>> {
    let alphabet = sq.alphabet();
    sq.cells()
        .iter()
        .map(|ds| {
            ds.digits()
                .iter()
                .map(|&d| {
                    alphabet
                        .index_of(d)
                        .expect("square digits lie in its alphabet")
                })
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub semi_magic: bool,
    pub magic: bool,
    pub bimagic: bool,
    pub block_magic: bool,
    pub pandiagonal: bool,
    pub upside_down_closed: bool,
    pub universal: bool,
    pub balanced: bool,
    pub pair_orthogonal: bool,
    pub combination_complete: bool,
}

/// A row, column or principal diagonal whose `s1` differs from the square's
/// dominant line sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LineFailure {
    pub family: LineFamily,
    pub index: usize,
    pub s1: i128,
    pub s2: i128,
}

/// `s1` / `s2` of a square when they are consistent, `None` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LineSums {
    pub s1: Option<i128>,
    pub s2: Option<i128>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    /// Common row/column sum; present iff semi-magic.
    pub s1: Option<i128>,
    /// Common sum of squares; present iff bimagic.
    pub s2: Option<i128>,
    pub flags: Flags,
    pub failures: Vec<LineFailure>,
    /// Sums of the upside-down square, when every entry rotates.
    pub rotated: Option<LineSums>,
    /// Why the square could not be rotated, if it could not.
    pub rotation_note: Option<String>,
}

/// Magic level of a square from its rows, columns and principal diagonals.
struct Levels {
    semi: bool,
    magic: bool,
    bimagic: bool,
    s1: Option<i128>,
    s2: Option<i128>,
}

fn profile(sq: &Square, family: LineFamily) -> Vec<SumPair> {
    line_profile(sq, family).expect("rows, columns and diagonals exist for every order")
}

fn levels(sq: &Square) -> Levels {
    let rows = profile(sq, LineFamily::Rows);
    let cols = profile(sq, LineFamily::Columns);
    let diag = profile(sq, LineFamily::MainDiagonal);
    let anti = profile(sq, LineFamily::AntiDiagonal);
    let first = rows[0];
    let semi = rows.iter().chain(&cols).all(|p| p.s1 == first.s1);
    let magic = semi && diag[0].s1 == first.s1 && anti[0].s1 == first.s1;
    let bimagic = magic
        && rows
            .iter()
            .chain(&cols)
            .chain(&diag)
            .chain(&anti)
            .all(|p| p.s2 == first.s2);
    Levels {
        semi,
        magic,
        bimagic,
        s1: semi.then_some(first.s1),
        s2: bimagic.then_some(first.s2),
    }
}

/// Most common `s1` among rows and columns; ties go to the smallest value.
fn dominant_s1(sums: &[SumPair]) -> i128 {
    let mut counts: HashMap<i128, usize> = HashMap::new();
    for p in sums {
        *counts.entry(p.s1).or_default() += 1;
    }
    counts
        .into_iter()
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
        .map(|(s, _)| s)
        .unwrap_or(0)
}

fn all_true(
    sq: &Square,
    families: &[LineFamily],
    check: fn(&Square, LineFamily) -> Result<bool, VerifyError>,
) -> bool {
    families.iter().all(|&f| matches!(check(sq, f), Ok(true)))
}

/// The families that define magic: rows, columns and both principal diagonals.
pub const MAGIC_FAMILIES: [LineFamily; 4] = [
    LineFamily::Rows,
    LineFamily::Columns,
    LineFamily::MainDiagonal,
    LineFamily::AntiDiagonal,
];

/// Classifies a square against every property: semi-magic, magic, bimagic,
/// block-magic, pandiagonal, upside-down closure and universality, plus the
/// balance and pair-orthogonality conditions on rows, columns and diagonals.
///
/// Upside-down closure means the rotated square reaches the same level
/// (semi-magic, magic or bimagic) as the square itself, possibly with other
/// sums. Universal means magic, upside-down closed, and magic in a mirror.
pub fn classify(sq: &Square) -> PropertyReport {
    let lv = levels(sq);
    let mut flags = Flags {
        semi_magic: lv.semi,
        magic: lv.magic,
        bimagic: lv.bimagic,
        combination_complete: sq.is_combination_complete(),
        ..Flags::default()
    };

    if let Some(s1) = lv.s1 {
        if let Ok(blocks) = line_profile(sq, LineFamily::Blocks) {
            flags.block_magic = blocks
                .iter()
                .all(|p| p.s1 == s1 && lv.s2.is_none_or(|s2| p.s2 == s2));
        }
        flags.pandiagonal = lv.magic
            && profile(sq, LineFamily::BrokenDiagonals)
                .iter()
                .all(|p| p.s1 == s1);
    }

    let (rotated, rotation_note) = match sq.rotate180() {
        Ok(rot) => {
            let rl = levels(&rot);
            flags.upside_down_closed =
                lv.semi && rl.semi && (!lv.magic || rl.magic) && (!lv.bimagic || rl.bimagic);
            (
                Some(LineSums {
                    s1: rl.s1,
                    s2: rl.s2,
                }),
                None,
            )
        }
        Err(e) => (None, Some(e.to_string())),
    };

    flags.universal = lv.magic
        && flags.upside_down_closed
        && sq.mirror().map(|m| levels(&m).magic).unwrap_or(false);

    flags.balanced = all_true(sq, &MAGIC_FAMILIES, check_balance);
    flags.pair_orthogonal = all_true(sq, &MAGIC_FAMILIES, check_pair_orthogonality);

    let failures = line_failures(sq);

    PropertyReport {
        s1: lv.s1,
        s2: lv.s2,
        flags,
        failures,
        rotated,
        rotation_note,
    }
}

fn line_failures(sq: &Square) -> Vec<LineFailure> {
    let rows = profile(sq, LineFamily::Rows);
    let cols = profile(sq, LineFamily::Columns);
    let mut both = rows.clone();
    both.extend_from_slice(&cols);
    let reference = dominant_s1(&both);
    let mut failures = Vec::new();
    for family in MAGIC_FAMILIES {
        for (index, p) in profile(sq, family).into_iter().enumerate() {
            if p.s1 != reference {
                failures.push(LineFailure {
                    family,
                    index,
                    s1: p.s1,
                    s2: p.s2,
                });
            }
        }
    }
    failures
}
