use crate::digits::{DigitAlphabet, DigitString};
use crate::field::Ring;
use crate::square::Square;

use super::ConstructError;

/// How the principal diagonals of a Latin pair were handled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagPolicy {
    /// Every symbol appears once on both diagonals of both squares.
    Transversal,
    /// One square is constant on a diagonal, at the middle symbol. The built
    /// square is magic only if that digit is the alphabet mean.
    ConstantAtMean,
    None,
}

/// Two orthogonal Latin squares of order n over symbols `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinPair {
    order: usize,
    first: Vec<Vec<u8>>,
    second: Vec<Vec<u8>>,
    policy: DiagPolicy,
}

impl LatinPair {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn first(&self) -> &[Vec<u8>] {
        &self.first
    }

    pub fn second(&self) -> &[Vec<u8>] {
        &self.second
    }

    pub fn policy(&self) -> DiagPolicy {
        self.policy
    }

    pub fn is_orthogonal(&self) -> bool {
        let n = self.order;
        let mut seen = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                let k = usize::from(self.first[i][j]) * n + usize::from(self.second[i][j]);
                if std::mem::replace(&mut seen[k], true) {
                    return false;
                }
            }
        }
        true
    }
}

/// Every symbol is below `n` and none repeats.
fn all_distinct(n: usize, symbols: impl Iterator<Item = u8>) -> bool {
    let mut seen = vec![false; n];
    let mut symbols = symbols;
    symbols.all(|s| usize::from(s) < n && !std::mem::replace(&mut seen[usize::from(s)], true))
}

pub fn is_latin(sq: &[Vec<u8>]) -> bool {
    let n = sq.len();
    (0..n).all(|i| all_distinct(n, sq[i].iter().copied()))
        && (0..n).all(|j| all_distinct(n, (0..n).map(|i| sq[i][j])))
}

/// Both principal diagonals carry every symbol once.
pub fn has_transversal_diagonals(sq: &[Vec<u8>]) -> bool {
    let n = sq.len();
    all_distinct(n, (0..n).map(|i| sq[i][i])) && all_distinct(n, (0..n).map(|i| sq[i][n - 1 - i]))
}

fn tabulate(n: usize, f: impl Fn(usize, usize) -> u8) -> Vec<Vec<u8>> {
    (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect()
}

/// An orthogonal Latin pair for n ∈ {3, 4, 5}.
///
/// - n = 3: `L1 = i + j + 2`, `L2 = i + 2j + 1` (mod 3). No pair of order 3
///   has transversal diagonals, so `L1` is constant 1 on the anti-diagonal and
///   `L2` constant 1 on the main diagonal.
/// - n = 4: the first pair of linear forms `L1 = a·i + b·j`, `L2 = c·i + d·j`
///   over GF(4), with (a, b, c, d) in lexicographic order, whose four
///   diagonals are all transversals.
/// - n = 5: `L1 = 2i + j`, `L2 = i + 2j` (mod 5).
pub fn build_latin_pair(n: usize) -> Result<LatinPair, ConstructError> {
    let pair = match n {
        3 => LatinPair {
            order: 3,
            first: tabulate(3, |i, j| ((i + j + 2) % 3) as u8),
            second: tabulate(3, |i, j| ((i + 2 * j + 1) % 3) as u8),
            policy: DiagPolicy::ConstantAtMean,
        },
        4 => search_gf4_pair(),
        5 => LatinPair {
            order: 5,
            first: tabulate(5, |i, j| ((2 * i + j) % 5) as u8),
            second: tabulate(5, |i, j| ((i + 2 * j) % 5) as u8),
            policy: DiagPolicy::Transversal,
        },
        _ => return Err(ConstructError::UnsupportedOrder(n)),
    };
    debug_assert!(is_latin(&pair.first) && is_latin(&pair.second) && pair.is_orthogonal());
    Ok(pair)
}

fn search_gf4_pair() -> LatinPair {
    let ring = Ring::Gf4;
    let form = |a: u8, b: u8| {
        tabulate(4, move |i, j| {
            ring.add(ring.mul(a, i as u8), ring.mul(b, j as u8))
        })
    };
    for a in 1..4 {
        for b in 1..4 {
            let first = form(a, b);
            if !is_latin(&first) || !has_transversal_diagonals(&first) {
                continue;
            }
            for c in 1..4 {
                for d in 1..4 {
                    let pair = LatinPair {
                        order: 4,
                        first: first.clone(),
                        second: form(c, d),
                        policy: DiagPolicy::Transversal,
                    };
                    if is_latin(&pair.second)
                        && has_transversal_diagonals(&pair.second)
                        && pair.is_orthogonal()
                    {
                        return pair;
                    }
                }
            }
        }
    }
    unreachable!("GF(4) has a doubly diagonal orthogonal pair")
}

/// The two-digit square of order n: cell (i, j) is
/// `alphabet[L1[i][j]]` followed by `alphabet[L2[i][j]]`.
///
/// Always combination-complete and semi-magic. For n = 4, 5 it is magic;
/// for n = 3 it is magic exactly when the middle digit is the alphabet mean.
pub fn build_two_algorism(alphabet: &DigitAlphabet) -> Result<Square, ConstructError> {
    let n = alphabet.len();
    let pair = build_latin_pair(n)?;
    let cells = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| {
            let digits = vec![
                alphabet.digit(usize::from(pair.first[i][j])),
                alphabet.digit(usize::from(pair.second[i][j])),
            ];
            DigitString::new(digits).expect("two digits")
        })
        .collect();
    Ok(Square::from_cells(n, 2, alphabet.clone(), cells)?)
}

/// True when the middle digit of a three-digit alphabet is its mean, which is
/// what the constant-diagonal policy needs.
pub fn middle_is_mean(alphabet: &DigitAlphabet) -> bool {
    let d = alphabet.digits();
    let sum: u32 = d.iter().map(|&x| u32::from(x)).sum();
    d.len() == 3 && u32::from(d[1]) * 3 == sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{classify, line_profile, LineFamily};

    fn alpha(s: &str) -> DigitAlphabet {
        s.parse().unwrap()
    }

    #[test]
    fn order_three_pair() {
        let p = build_latin_pair(3).unwrap();
        assert_eq!(p.policy(), DiagPolicy::ConstantAtMean);
        assert!(is_latin(p.first()) && is_latin(p.second()) && p.is_orthogonal());
        let main2: Vec<u8> = (0..3).map(|i| p.second()[i][i]).collect();
        assert_eq!(main2, vec![1, 1, 1]);
        let mut main1: Vec<u8> = (0..3).map(|i| p.first()[i][i]).collect();
        main1.sort();
        assert_eq!(main1, vec![0, 1, 2]);
        let anti1: Vec<u8> = (0..3).map(|i| p.first()[i][2 - i]).collect();
        assert_eq!(anti1, vec![1, 1, 1]);
    }

    #[test]
    fn order_four_and_five_pairs_are_doubly_diagonal() {
        for n in [4, 5] {
            let p = build_latin_pair(n).unwrap();
            assert_eq!(p.policy(), DiagPolicy::Transversal);
            assert!(p.is_orthogonal());
            assert!(has_transversal_diagonals(p.first()));
            assert!(has_transversal_diagonals(p.second()));
        }
        let p5 = build_latin_pair(5).unwrap();
        assert_eq!(p5.first()[1][0], 2);
        assert_eq!(p5.second()[1][0], 1);
        // first GF(4) pair in (a, b, c, d) order: i + x·j and i + (x+1)·j
        let p4 = build_latin_pair(4).unwrap();
        assert_eq!(p4.first()[0], vec![0, 2, 3, 1]);
        assert_eq!(p4.second()[0], vec![0, 3, 1, 2]);
        assert_eq!(
            build_latin_pair(6),
            Err(ConstructError::UnsupportedOrder(6))
        );
    }

    #[test]
    fn two_algorism_012_is_magic() {
        let sq = build_two_algorism(&alpha("012")).unwrap();
        assert_eq!(sq.to_string(), "21 00 12\n02 11 20\n10 22 01\n");
        let r = classify(&sq);
        assert!(r.flags.magic && r.flags.combination_complete);
        assert_eq!(r.s1, Some(33));
    }

    #[test]
    fn two_algorism_169_fails_only_on_diagonals() {
        let sq = build_two_algorism(&alpha("169")).unwrap();
        let r = classify(&sq);
        assert!(r.flags.semi_magic && !r.flags.magic);
        assert_eq!(r.s1, Some(176));
        let diag = line_profile(&sq, LineFamily::MainDiagonal).unwrap()[0].s1;
        let anti = line_profile(&sq, LineFamily::AntiDiagonal).unwrap()[0].s1;
        assert_eq!((diag, anti), (178, 196));
        assert!(!middle_is_mean(&alpha("169")));
    }

    #[test]
    fn two_algorism_larger_orders() {
        let r4 = classify(&build_two_algorism(&alpha("0129")).unwrap());
        assert!(r4.flags.magic);
        assert_eq!(r4.s1, Some(132));
        let r5 = classify(&build_two_algorism(&alpha("01269")).unwrap());
        assert!(r5.flags.magic && r5.flags.pandiagonal);
        assert_eq!(r5.s1, Some(198));
    }

    #[test]
    fn three_digit_alphabets_follow_the_mean_rule() {
        // every 3-digit alphabet: magic iff middle digit is the mean,
        // otherwise only the two principal diagonals deviate
        for a in 0..10u8 {
            for b in a + 1..10 {
                for c in b + 1..10 {
                    let alphabet = DigitAlphabet::new(&[a, b, c]).unwrap();
                    let sq = build_two_algorism(&alphabet).unwrap();
                    let r = classify(&sq);
                    assert!(r.flags.semi_magic && r.flags.combination_complete);
                    assert_eq!(r.flags.magic, middle_is_mean(&alphabet), "{alphabet}");
                    if !r.flags.magic {
                        assert_eq!(r.failures.len(), 2);
                        assert!(r.failures.iter().all(|f| matches!(
                            f.family,
                            LineFamily::MainDiagonal | LineFamily::AntiDiagonal
                        )));
                    }
                }
            }
        }
    }
}
