//! Linear schemes for four-digit squares of order n².
//!
//! Cell (i, j) of an n²×n² square is written as coordinates
//! `x = (i1, i2, j1, j2)` with `i = n·i1 + i2`, `j = n·j1 + j2`. A scheme is an
//! invertible 4×4 matrix `A` and offset `b` over GF(n); the cell holds the
//! digit indices `A·x + b`. Invertibility makes the square use each of the n⁴
//! strings exactly once.
//!
//! Along a row, `(j1, j2)` sweeps GF(n)² while `(i1, i2)` is fixed, so the
//! digits at positions p and q are `M·(j1, j2) + const` where `M` holds rows
//! p, q of columns 3, 4 of `A`. The pair of positions is balanced and
//! pair-orthogonal on every row iff `M` is invertible. Columns use columns
//! 1, 2; blocks use columns 2, 4; the main diagonal uses `(A1 + A3, A2 + A4)`
//! and the anti-diagonal `(A1 - A3, A2 - A4)`. Requiring every 2×2 minor of
//! these projections to be nonzero is therefore exactly balance plus pair
//! orthogonality on each family, which forces S1 and S2 to be constant there
//! whatever the digit values are.
//!
//! Broken diagonals pick up a carry from `i2 + c2 ≥ n` and are only required
//! to be balanced. Balance of one digit position depends on one row of `A`;
//! each candidate row is checked by counting its digits along all 2n²
//! broken diagonals. For GF(4) rows pass but no admissible matrix exists.

use std::fmt;

use rayon::prelude::*;

use crate::digits::{DigitAlphabet, DigitString};
use crate::field::Ring;
use crate::square::Square;
use crate::verify::{check_balance, check_pair_orthogonality, classify, LineFamily};

use super::{ConstructError, GoalSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Scheme {
    ring: Ring,
    matrix: [[u8; 4]; 4],
    offset: [u8; 4],
}

impl Scheme {
    pub fn new(ring: Ring, matrix: [[u8; 4]; 4], offset: [u8; 4]) -> Result<Self, ConstructError> {
        let n = ring.order();
        let in_range = matrix.iter().flatten().chain(&offset).all(|&e| e < n);
        if !in_range || ring.rank(&matrix) != 4 {
            return Err(ConstructError::Singular);
        }
        Ok(Scheme {
            ring,
            matrix,
            offset,
        })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn matrix(&self) -> &[[u8; 4]; 4] {
        &self.matrix
    }

    pub fn offset(&self) -> &[u8; 4] {
        &self.offset
    }

    /// Row-major matrix coefficients followed by the offset.
    pub fn coefficients(&self) -> Vec<u8> {
        self.matrix
            .iter()
            .flatten()
            .chain(&self.offset)
            .copied()
            .collect()
    }

    /// Digit indices of cell (i, j).
    pub fn digit_indices(&self, i: usize, j: usize) -> [u8; 4] {
        let n = usize::from(self.ring.order());
        let x = [(i / n) as u8, (i % n) as u8, (j / n) as u8, (j % n) as u8];
        let mut d = [0u8; 4];
        for (p, slot) in d.iter_mut().enumerate() {
            *slot = self
                .ring
                .add(self.ring.dot(&self.matrix[p], &x), self.offset[p]);
        }
        d
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect();
        let offset: String = self.offset.iter().map(|e| e.to_string()).collect();
        write!(f, "{} A={} b={}", self.ring, rows.join(","), offset)
    }
}

/// The n²×n² square a scheme produces over `alphabet`.
pub fn assemble(scheme: &Scheme, alphabet: &DigitAlphabet) -> Result<Square, ConstructError> {
    let n = usize::from(scheme.ring.order());
    if alphabet.len() != n {
        return Err(ConstructError::AlphabetMismatch {
            alphabet: alphabet.len(),
            ring: n,
        });
    }
    let order = n * n;
    let cells = (0..order)
        .flat_map(|i| (0..order).map(move |j| (i, j)))
        .map(|(i, j)| {
            let digits = scheme
                .digit_indices(i, j)
                .iter()
                .map(|&k| alphabet.digit(usize::from(k)))
                .collect();
            DigitString::new(digits).expect("four digits")
        })
        .collect();
    Ok(Square::from_cells(order, 4, alphabet.clone(), cells)?)
}

/// The verifier's verdict on a built square: balance and pair orthogonality
/// on every paired family, balance on broken diagonals when requested, and
/// the matching classification flags.
pub fn meets_goals(sq: &Square, goals: &GoalSet) -> bool {
    let paired = goals.paired_families().into_iter().all(|f| {
        matches!(check_balance(sq, f), Ok(true))
            && matches!(check_pair_orthogonality(sq, f), Ok(true))
    });
    if !paired {
        return false;
    }
    if goals.pandiag() && !matches!(check_balance(sq, LineFamily::BrokenDiagonals), Ok(true)) {
        return false;
    }
    let flags = classify(sq).flags;
    flags.semi_magic
        && (!(goals.diag() && goals.antidiag()) || (flags.magic && flags.bimagic))
        && (!goals.blocks() || flags.block_magic)
        && (!goals.pandiag() || flags.pandiagonal)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

/// Search with the index alphabet `0..n` standing in for the digits.
pub fn search_scheme(n: usize, goals: GoalSet) -> Result<Scheme, ConstructError> {
    let digits: Vec<u8> = (0..n as u8).collect();
    let alphabet = DigitAlphabet::new(&digits).map_err(|_| ConstructError::UnsupportedOrder(n))?;
    search_scheme_with(&alphabet, goals, &SearchOptions::default())
}

/// Lexicographically first scheme (row-major matrix, then offset) that passes
/// the structural prunes and whose assembled square passes [`meets_goals`].
///
/// Offsets other than zero are only tried once every matrix has failed with
/// the zero offset. The first matrix row is searched in parallel; the result
/// is the same for any number of threads.
pub fn search_scheme_with(
    alphabet: &DigitAlphabet,
    goals: GoalSet,
    options: &SearchOptions,
) -> Result<Scheme, ConstructError> {
    let n = alphabet.len();
    let ring = Ring::for_order(n).ok_or(ConstructError::UnsupportedOrder(n))?;
    let search = Search::new(ring, goals);
    let run = || {
        let zero = |m: &[[u8; 4]; 4]| search.accept(m, [0; 4], alphabet);
        if let Some(s) = search.first_matrix(&zero) {
            return Some(s);
        }
        let offsets = all_offsets(ring);
        let shifted = |m: &[[u8; 4]; 4]| {
            offsets
                .iter()
                .skip(1)
                .find_map(|&b| search.accept(m, b, alphabet))
        };
        search.first_matrix(&shifted)
    };
    let found = match options.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| ConstructError::ThreadPool(e.to_string()))?
            .install(run),
        None => run(),
    };
    found.ok_or(ConstructError::NotFound { n, goals })
}

/// Builds the bimagic square of order n² over `alphabet`.
pub fn build_four_algorism(
    alphabet: &DigitAlphabet,
    goals: GoalSet,
) -> Result<Square, ConstructError> {
    build_four_algorism_with(alphabet, goals, &SearchOptions::default()).map(|(_, sq)| sq)
}

/// Like [`build_four_algorism`], also returning the scheme used.
pub fn build_four_algorism_with(
    alphabet: &DigitAlphabet,
    goals: GoalSet,
    options: &SearchOptions,
) -> Result<(Scheme, Square), ConstructError> {
    let scheme = search_scheme_with(alphabet, goals, options)?;
    let sq = assemble(&scheme, alphabet)?;
    Ok((scheme, sq))
}

fn all_offsets(ring: Ring) -> Vec<[u8; 4]> {
    let n = ring.order();
    (0..usize::from(n).pow(4))
        .map(|mut code| {
            let mut b = [0u8; 4];
            for slot in b.iter_mut().rev() {
                *slot = (code % usize::from(n)) as u8;
                code /= usize::from(n);
            }
            b
        })
        .collect()
}

/// A candidate matrix row with its 2-vector projections, one per paired family.
#[derive(Debug, Clone)]
struct Candidate {
    row: [u8; 4],
    projections: Vec<(u8, u8)>,
}

/// Why a matrix fails the structural prunes.
#[cfg_attr(not(test), allow(dead_code))]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Prune {
    /// A digit position is constant along some line of the family.
    Unbalanced(LineFamily),
    /// Two digit positions are dependent along the lines of the family.
    Dependent(LineFamily),
    Singular,
}

struct Search {
    ring: Ring,
    goals: GoalSet,
    families: Vec<LineFamily>,
    candidates: Vec<Candidate>,
}

impl Search {
    fn new(ring: Ring, goals: GoalSet) -> Search {
        let families = goals.paired_families();
        let mut search = Search {
            ring,
            goals,
            families,
            candidates: Vec::new(),
        };
        let n = ring.order();
        let mut candidates = Vec::new();
        for code in 1..usize::from(n).pow(4) {
            let mut row = [0u8; 4];
            let mut c = code;
            for slot in row.iter_mut().rev() {
                *slot = (c % usize::from(n)) as u8;
                c /= usize::from(n);
            }
            if search.row_prune(&row).is_none() {
                candidates.push(Candidate {
                    row,
                    projections: search.projections(&row),
                });
            }
        }
        search.candidates = candidates;
        search
    }

    fn projection(&self, family: LineFamily, r: &[u8; 4]) -> (u8, u8) {
        let ring = self.ring;
        match family {
            LineFamily::Rows => (r[2], r[3]),
            LineFamily::Columns => (r[0], r[1]),
            LineFamily::Blocks => (r[1], r[3]),
            LineFamily::MainDiagonal => (ring.add(r[0], r[2]), ring.add(r[1], r[3])),
            LineFamily::AntiDiagonal => (ring.sub(r[0], r[2]), ring.sub(r[1], r[3])),
            LineFamily::BrokenDiagonals | LineFamily::Whole => {
                unreachable!("not a paired family")
            }
        }
    }

    fn projections(&self, r: &[u8; 4]) -> Vec<(u8, u8)> {
        self.families
            .iter()
            .map(|&f| self.projection(f, r))
            .collect()
    }

    /// Conditions a single row must meet on its own.
    fn row_prune(&self, r: &[u8; 4]) -> Option<Prune> {
        for &family in &self.families {
            if self.projection(family, r) == (0, 0) {
                return Some(Prune::Unbalanced(family));
            }
        }
        if self.goals.pandiag() && !self.balanced_on_broken_diagonals(r) {
            return Some(Prune::Unbalanced(LineFamily::BrokenDiagonals));
        }
        None
    }

    /// Every digit appears n times along every broken diagonal, by direct count.
    fn balanced_on_broken_diagonals(&self, r: &[u8; 4]) -> bool {
        let n = usize::from(self.ring.order());
        let order = n * n;
        let digit = |i: usize, j: usize| {
            let x = [(i / n) as u8, (i % n) as u8, (j / n) as u8, (j % n) as u8];
            usize::from(self.ring.dot(r, &x))
        };
        (0..order).all(|c| {
            let mut down = vec![0usize; n];
            let mut up = vec![0usize; n];
            for i in 0..order {
                down[digit(i, (i + c) % order)] += 1;
                up[digit(i, (c + order - i) % order)] += 1;
            }
            down.iter().chain(&up).all(|&k| k == n)
        })
    }

    fn compatible(&self, a: &Candidate, b: &Candidate) -> Option<LineFamily> {
        self.families
            .iter()
            .zip(a.projections.iter().zip(&b.projections))
            .find(|(_, (pa, pb))| self.ring.det2(**pa, **pb) == 0)
            .map(|(&f, _)| f)
    }

    /// Full structural check of a matrix, for testing prune soundness.
    #[cfg(test)]
    pub(crate) fn prune(&self, m: &[[u8; 4]; 4]) -> Option<Prune> {
        if self.ring.rank(m) != 4 {
            return Some(Prune::Singular);
        }
        for r in m {
            if let Some(p) = self.row_prune(r) {
                return Some(p);
            }
        }
        let cands: Vec<Candidate> = m
            .iter()
            .map(|r| Candidate {
                row: *r,
                projections: self.projections(r),
            })
            .collect();
        for p in 0..4 {
            for q in p + 1..4 {
                if let Some(f) = self.compatible(&cands[p], &cands[q]) {
                    return Some(Prune::Dependent(f));
                }
            }
        }
        None
    }

    fn accept(
        &self,
        m: &[[u8; 4]; 4],
        offset: [u8; 4],
        alphabet: &DigitAlphabet,
    ) -> Option<Scheme> {
        let scheme = Scheme::new(self.ring, *m, offset).ok()?;
        let sq = assemble(&scheme, alphabet).ok()?;
        meets_goals(&sq, &self.goals).then_some(scheme)
    }

    /// Depth-first over matrix rows in lexicographic order; the first row is
    /// split across the rayon pool and reduced to the earliest hit.
    fn first_matrix<F>(&self, try_matrix: &F) -> Option<Scheme>
    where
        F: Fn(&[[u8; 4]; 4]) -> Option<Scheme> + Sync,
    {
        (0..self.candidates.len())
            .into_par_iter()
            .find_map_first(|first| {
                let mut chosen = vec![first];
                self.descend(&mut chosen, try_matrix)
            })
    }

    fn descend<F>(&self, chosen: &mut Vec<usize>, try_matrix: &F) -> Option<Scheme>
    where
        F: Fn(&[[u8; 4]; 4]) -> Option<Scheme>,
    {
        if chosen.len() == 4 {
            let m = [
                self.candidates[chosen[0]].row,
                self.candidates[chosen[1]].row,
                self.candidates[chosen[2]].row,
                self.candidates[chosen[3]].row,
            ];
            return try_matrix(&m);
        }
        for next in 0..self.candidates.len() {
            let cand = &self.candidates[next];
            if chosen
                .iter()
                .any(|&c| self.compatible(&self.candidates[c], cand).is_some())
            {
                continue;
            }
            let mut rows: Vec<[u8; 4]> = chosen.iter().map(|&c| self.candidates[c].row).collect();
            rows.push(cand.row);
            if self.ring.rank(&rows) != rows.len() {
                continue;
            }
            chosen.push(next);
            if let Some(s) = self.descend(chosen, try_matrix) {
                return Some(s);
            }
            chosen.pop();
        }
        None
    }
}
