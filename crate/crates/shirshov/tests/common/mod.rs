//! Helpers shared by the integration suites: golden fixtures, a seeded
//! generator for reproducible random words, and an independent semistandard
//! tableau counter used to cross-check class counts.
//!
//! Each suite uses a different subset, hence the blanket dead-code allow.
#![allow(dead_code)]

use shirshov::rewriting::Rule;
use shirshov::words::{parse_word, Letter, Word};

pub fn w(text: &str) -> Word {
    parse_word(text, 9).unwrap()
}

/// The eleven rules of the rank-3 basis, as published.
pub const GOLDEN_RANK3_RULES: [(&str, &str); 11] = [
    ("332", "323"),
    ("322", "232"),
    ("331", "313"),
    ("311", "131"),
    ("221", "212"),
    ("211", "121"),
    ("231", "213"),
    ("312", "132"),
    ("3212", "2321"),
    ("32131", "31321"),
    ("32321", "32132"),
];

pub fn golden_rank3_rules() -> Vec<Rule> {
    GOLDEN_RANK3_RULES
        .iter()
        .map(|(lhs, rhs)| Rule::new(w(lhs), w(rhs)).unwrap())
        .collect()
}

/// The 27 published ambiguity superposition words for the rank-3 basis,
/// in list order.
pub const GOLDEN_AMBIGUITY_WORDS: [&str; 27] = [
    "3322",    // (332)2 = 3(322)
    "33221",   // (332)21 = 33(221)
    "33211",   // (332)11 = 33(211)
    "33231",   // (332)31 = 33(231)
    "33212",   // (332)12 = 3(3212)
    "332131",  // (332)131 = 3(32131)
    "332321",  // (332)321 = 3(32321)
    "3221",    // (322)1 = 3(221)
    "32221",   // (322)21 = 32(221)
    "32211",   // (322)11 = 32(211)
    "32231",   // (322)31 = 32(231)
    "3311",    // (331)1 = 3(311)
    "3312",    // (331)2 = 3(312)
    "2311",    // 2(311) = (231)1
    "321311",  // 321(311) = (32131)1
    "2211",    // (221)1 = 2(211)
    "31221",   // 31(221) = (312)21
    "321221",  // 321(221) = (3212)21
    "31211",   // 31(211) = (312)11
    "321211",  // 321(211) = (3212)11
    "323211",  // 323(211) = (32321)1
    "2312",    // (231)2 = 2(312)
    "31231",   // 31(231) = (312)31
    "321231",  // 321(231) = (3212)31
    "321312",  // 321(312) = (32131)2
    "323212",  // 32(3212) = (32321)2
    "3232131", // 32(32131) = (32321)31
];

/// SplitMix64: small, seeded, deterministic.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    pub fn word(&mut self, alphabet: u32, max_len: usize) -> Word {
        let len = self.below(max_len + 1);
        (0..len)
            .map(|_| Letter::new(1 + self.below(alphabet as usize) as u32))
            .collect()
    }
}

/// Counts semistandard Young tableaux with `cells` cells and entries in
/// `1..=n` by direct enumeration over shapes and fillings. Independent of
/// the crate's tableau code.
pub fn count_ssyt(n: u32, cells: usize) -> usize {
    let mut total = 0;
    let mut shape = Vec::new();
    enumerate_partitions(cells, cells, &mut shape, &mut |shape| {
        if shape.len() <= n as usize {
            total += count_fillings(shape, n);
        }
    });
    total
}

fn enumerate_partitions(
    remaining: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if remaining == 0 {
        visit(current);
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        enumerate_partitions(remaining - part, part, current, visit);
        current.pop();
    }
}

fn count_fillings(shape: &[usize], n: u32) -> usize {
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len]).collect();
    fill_cell(shape, n, &mut grid, 0, 0)
}

fn fill_cell(shape: &[usize], n: u32, grid: &mut Vec<Vec<u32>>, row: usize, col: usize) -> usize {
    if row == shape.len() {
        return 1;
    }
    let (next_row, next_col) = if col + 1 < shape[row] {
        (row, col + 1)
    } else {
        (row + 1, 0)
    };
    let lower = if col > 0 { grid[row][col - 1] } else { 1 }
        .max(if row > 0 { grid[row - 1][col] + 1 } else { 1 });
    let mut total = 0;
    for entry in lower..=n {
        grid[row][col] = entry;
        total += fill_cell(shape, n, grid, next_row, next_col);
    }
    grid[row][col] = 0;
    total
}
