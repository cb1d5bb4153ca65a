//! Letters and words of a free monoid, the degree-lexicographic order,
//! text formats, and the decreasing-subsequence statistic.
//!
//! Letters are positive integers `1..=n` where `n` is the alphabet size of
//! the ambient context. Words do not carry the alphabet themselves; range
//! checks happen at parse and construction boundaries.

use std::cmp::Ordering;
use std::error::Error;
use std::fmt;

/// A single generator of the free monoid, numbered from 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u32);

impl Letter {
    /// Wraps a generator index.
    ///
    /// Panics if `value` is 0; letters are numbered from 1. Range checks
    /// against an alphabet are the caller's job (see [`parse_word`]).
    pub fn new(value: u32) -> Self {
        assert!(value >= 1, "letters are numbered from 1");
        Letter(value)
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite word over the free monoid, possibly empty.
///
/// `Ord` is the degree-lexicographic order: shorter words first, equal
/// lengths compared letterwise with `1 < 2 < ... < n`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree-lexicographic comparison: length first, then letterwise.
    pub fn deglex_cmp(&self, other: &Word) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Returns a copy with `self[start..start + len]` replaced by `replacement`.
    pub fn replace_factor(&self, start: usize, len: usize, replacement: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() - len + replacement.len());
        letters.extend_from_slice(&self.0[..start]);
        letters.extend_from_slice(&replacement.0);
        letters.extend_from_slice(&self.0[start + len..]);
        Word(letters)
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }

    /// True iff `factor` occurs as a (contiguous) factor of `self`.
    pub fn contains_factor(&self, factor: &Word) -> bool {
        if factor.is_empty() {
            return true;
        }
        if factor.len() > self.len() {
            return false;
        }
        self.0.windows(factor.len()).any(|win| win == &factor.0[..])
    }

    pub fn max_letter(&self) -> Option<Letter> {
        self.0.iter().copied().max()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deglex_cmp(other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "ε");
        }
        if self.0.iter().all(|l| l.0 <= 9) {
            for l in &self.0 {
                write!(f, "{}", l.0)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|l| l.0.to_string()).collect();
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Errors from word parsing and letter validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordError {
    LetterOutOfRange { value: u32, alphabet: u32 },
    MalformedInteger { token: String },
    EmptyToken,
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::LetterOutOfRange { value, alphabet } => {
                write!(f, "letter {value} out of range 1..={alphabet}")
            }
            WordError::MalformedInteger { token } => {
                write!(f, "malformed integer {token:?}")
            }
            WordError::EmptyToken => write!(f, "empty token where a word was expected"),
        }
    }
}

impl Error for WordError {}

fn check_range(value: u32, alphabet: u32) -> Result<Letter, WordError> {
    if value == 0 || value > alphabet {
        Err(WordError::LetterOutOfRange { value, alphabet })
    } else {
        Ok(Letter(value))
    }
}

/// Parses a word in one of the two text formats.
///
/// A contiguous digit string is read one letter per digit, but only when
/// `alphabet <= 9` (otherwise the compact form is ambiguous and rejected).
/// Anything else is read as whitespace-separated integers. The empty string
/// is the empty word.
pub fn parse_word(text: &str, alphabet: u32) -> Result<Word, WordError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Word::empty());
    }
    let compact = alphabet <= 9
        && !trimmed.contains(char::is_whitespace)
        && trimmed.bytes().all(|b| b.is_ascii_digit());
    if compact {
        trimmed
            .bytes()
            .map(|b| check_range(u32::from(b - b'0'), alphabet))
            .collect()
    } else {
        trimmed
            .split_whitespace()
            .map(|token| {
                let value: u32 = token.parse().map_err(|_| WordError::MalformedInteger {
                    token: token.to_string(),
                })?;
                check_range(value, alphabet)
            })
            .collect()
    }
}

/// Canonical text form: compact digits when `alphabet <= 9`, otherwise
/// space-separated integers. Inverse of [`parse_word`] for valid words.
pub fn format_word(word: &Word, alphabet: u32) -> String {
    if alphabet <= 9 {
        word.letters().iter().map(|l| l.to_string()).collect()
    } else {
        let parts: Vec<String> = word.letters().iter().map(|l| l.to_string()).collect();
        parts.join(" ")
    }
}

/// Length of the longest strictly decreasing (not necessarily contiguous)
/// subsequence; 0 for the empty word.
///
/// Direct dynamic programming, deliberately independent of the tableau code
/// so the two can cross-validate (the statistic equals the row count of the
/// word's tableau).
pub fn max_decreasing_subsequence(word: &Word) -> usize {
    let letters = word.letters();
    let mut best = vec![0usize; letters.len()];
    let mut answer = 0;
    for i in 0..letters.len() {
        let mut here = 1;
        for j in 0..i {
            if letters[j] > letters[i] {
                here = here.max(best[j] + 1);
            }
        }
        best[i] = here;
        answer = answer.max(here);
    }
    answer
}
