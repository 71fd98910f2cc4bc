#![allow(dead_code)]

use std::collections::HashMap;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

use updown::construct::{build_four_algorism_with, build_two_algorism, GoalSet, SearchOptions};
use updown::{DigitAlphabet, DigitString, Square};

pub const ROTATABLE: [u8; 7] = [0, 1, 2, 5, 6, 8, 9];
pub const MIRRORABLE: [u8; 5] = [0, 1, 2, 5, 8];

pub fn alpha(s: &str) -> DigitAlphabet {
    s.parse().unwrap()
}

/// A random square of order 2..=6 and width 1..=4 over a random subset of
/// `pool`.
pub fn random_square(rng: &mut StdRng, pool: &[u8]) -> Square {
    let order = rng.gen_range(2..=6);
    let width = rng.gen_range(1..=4);
    let size = rng.gen_range(2..=pool.len());
    let chosen: Vec<u8> = pool.choose_multiple(rng, size).copied().collect();
    let alphabet = DigitAlphabet::new(&chosen).unwrap();
    let cells = (0..order * order)
        .map(|_| {
            let d = (0..width).map(|_| *chosen.choose(rng).unwrap()).collect();
            DigitString::new(d).unwrap()
        })
        .collect();
    Square::from_cells(order, width, alphabet, cells).unwrap()
}

/// Plain line sums, written without the library's line machinery.
pub struct Naive {
    pub semi: bool,
    pub magic: bool,
    pub bimagic: bool,
    pub pandiagonal: bool,
    pub s1: Option<i128>,
    pub s2: Option<i128>,
}

pub fn naive(sq: &Square) -> Naive {
    let n = sq.order();
    let v = |i: usize, j: usize| i128::from(sq.value(i, j));
    let mut lines: Vec<Vec<i128>> = Vec::new();
    for i in 0..n {
        lines.push((0..n).map(|j| v(i, j)).collect());
    }
    for j in 0..n {
        lines.push((0..n).map(|i| v(i, j)).collect());
    }
    let rc = lines.len();
    lines.push((0..n).map(|i| v(i, i)).collect());
    lines.push((0..n).map(|i| v(i, n - 1 - i)).collect());
    let sum = |l: &Vec<i128>| l.iter().sum::<i128>();
    let sq_sum = |l: &Vec<i128>| l.iter().map(|x| x * x).sum::<i128>();
    let t = sum(&lines[0]);
    let t2 = sq_sum(&lines[0]);
    let semi = lines[..rc].iter().all(|l| sum(l) == t);
    let magic = semi && lines.iter().all(|l| sum(l) == t);
    let bimagic = magic && lines.iter().all(|l| sq_sum(l) == t2);
    let mut pandiagonal = magic;
    for c in 0..n {
        let down: i128 = (0..n).map(|i| v(i, (i + c) % n)).sum();
        let up: i128 = (0..n).map(|i| v(i, (c + n - i) % n)).sum();
        pandiagonal &= down == t && up == t;
    }
    Naive {
        semi,
        magic,
        bimagic,
        pandiagonal,
        s1: semi.then_some(t),
        s2: bimagic.then_some(t2),
    }
}

pub fn built() -> Vec<Square> {
    let opts = SearchOptions::default();
    let mut out = Vec::new();
    for (a, goals) in [
        ("012", GoalSet::full()),
        ("169", GoalSet::full()),
        ("0129", GoalSet::full()),
        ("01269", GoalSet::full().with_pandiag()),
    ] {
        out.push(build_four_algorism_with(&alpha(a), goals, &opts).unwrap().1);
    }
    for a in ["012", "0129", "01269"] {
        out.push(build_two_algorism(&alpha(a)).unwrap());
    }
    out
}

/// Replaces every digit through a random injection into 0..=9.
pub fn relabel(sq: &Square, rng: &mut StdRng) -> Square {
    let old = sq.alphabet().digits();
    let mut pool: Vec<u8> = (0..10).collect();
    pool.shuffle(rng);
    let map: HashMap<u8, u8> = old.iter().copied().zip(pool.iter().copied()).collect();
    let alphabet = DigitAlphabet::new(&pool[..old.len()]).unwrap();
    let cells = sq
        .cells()
        .iter()
        .map(|ds| DigitString::new(ds.digits().iter().map(|d| map[d]).collect()).unwrap())
        .collect();
    Square::from_cells(sq.order(), sq.width(), alphabet, cells).unwrap()
}

/// One of the eight symmetries of the square, then a swap of two cells when
/// `swap` is set.
pub fn reshape(sq: &Square, sym: u8, swap: Option<(usize, usize)>) -> Square {
    let n = sq.order();
    let mut cells: Vec<DigitString> = (0..n * n)
        .map(|k| {
            let (mut i, mut j) = (k / n, k % n);
            if sym & 1 != 0 {
                std::mem::swap(&mut i, &mut j);
            }
            if sym & 2 != 0 {
                i = n - 1 - i;
            }
            if sym & 4 != 0 {
                j = n - 1 - j;
            }
            sq.get(i, j).clone()
        })
        .collect();
    if let Some((a, b)) = swap {
        cells.swap(a % (n * n), b % (n * n));
    }
    Square::from_cells(n, sq.width(), sq.alphabet().clone(), cells).unwrap()
}
