//! The three small finite fields used by the constructions.
//!
//! Elements are stored as `u8` in `0..order`. For GF(3) and GF(5) this is the
//! residue itself. For GF(4) = GF(2)[x]/(x²+x+1) the two bits are the
//! polynomial coefficients, so 0 ↔ 0, 1 ↔ 1, 2 ↔ x and 3 ↔ x+1. Under both
//! encodings an element is also the index of an alphabet digit.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ring {
    Gf3,
    Gf4,
    Gf5,
}

const GF4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl Ring {
    pub fn for_order(n: usize) -> Option<Ring> {
        match n {
            3 => Some(Ring::Gf3),
            4 => Some(Ring::Gf4),
            5 => Some(Ring::Gf5),
            _ => None,
        }
    }

    pub fn order(self) -> u8 {
        match self {
            Ring::Gf3 => 3,
            Ring::Gf4 => 4,
            Ring::Gf5 => 5,
        }
    }

    pub fn elements(self) -> impl Iterator<Item = u8> {
        0..self.order()
    }

    pub fn add(self, a: u8, b: u8) -> u8 {
        match self {
            Ring::Gf4 => a ^ b,
            _ => (a + b) % self.order(),
        }
    }

    pub fn neg(self, a: u8) -> u8 {
        match self {
            Ring::Gf4 => a,
            _ => (self.order() - a) % self.order(),
        }
    }

    pub fn sub(self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn mul(self, a: u8, b: u8) -> u8 {
        match self {
            Ring::Gf4 => GF4_MUL[usize::from(a)][usize::from(b)],
            _ => (a * b) % self.order(),
        }
    }

    /// Index reversal `k ↦ order-1-k`. In every one of these fields it equals
    /// `e - k` with `e` the element of index order-1, so it is affine with
    /// linear part -1.
    pub fn reverse_index(self, k: u8) -> u8 {
        self.order() - 1 - k
    }

    /// Dot product of two equal-length vectors.
    pub fn dot(self, a: &[u8], b: &[u8]) -> u8 {
        a.iter()
            .zip(b)
            .fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    /// Determinant of a 2×2 matrix given by its rows.
    pub fn det2(self, r0: (u8, u8), r1: (u8, u8)) -> u8 {
        self.sub(self.mul(r0.0, r1.1), self.mul(r0.1, r1.0))
    }

    /// Rank of a set of vectors, by Gaussian elimination.
    pub fn rank(self, rows: &[[u8; 4]]) -> usize {
        let mut m: Vec<[u8; 4]> = rows.to_vec();
        let mut rank = 0;
        for col in 0..4 {
            let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = self.inv(m[rank][col]);
            for x in m[rank].iter_mut() {
                *x = self.mul(*x, inv);
            }
            let pivot_row = m[rank];
            for (r, row) in m.iter_mut().enumerate() {
                if r != rank && row[col] != 0 {
                    let factor = row[col];
                    for (x, &p) in row.iter_mut().zip(&pivot_row) {
                        *x = self.sub(*x, self.mul(factor, p));
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u8) -> u8 {
        assert_ne!(a, 0, "zero has no inverse");
        self.elements()
            .find(|&b| self.mul(a, b) == 1)
            .expect("every nonzero element of a field is invertible")
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order())
    }
}
