//! Independent brute-force ground truth: congruence classes by exhaustive
//! relation application, equality testing, minimal representatives, and
//! class counting.
//!
//! Deliberately exponential and budgeted; no pruning heuristics. When a
//! budget trips the oracle fails loudly rather than truncating.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::error::Error;
use std::fmt;

use crate::completion::Presentation;
use crate::words::{Letter, Word};

/// Caps on a closure computation. `max_expansions` counts words taken off
/// the search frontier, across the whole call for the counting operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_class_size: usize,
    pub max_expansions: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_class_size: 200_000,
            max_expansions: 2_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    ClassTooLarge { limit: usize },
    ExpansionBudgetExceeded { limit: usize },
    DegreeTooLarge { alphabet: u32, degree: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::ClassTooLarge { limit } => {
                write!(f, "congruence class exceeds the budget of {limit} words")
            }
            OracleError::ExpansionBudgetExceeded { limit } => {
                write!(f, "closure exceeds the budget of {limit} expansions")
            }
            OracleError::DegreeTooLarge { alphabet, degree } => {
                write!(
                    f,
                    "alphabet {alphabet} at degree {degree} exceeds the enumeration budget"
                )
            }
        }
    }
}

impl Error for OracleError {}

/// A full congruence class: every word reachable from the seed by applying
/// relations in both directions at every position. All members share the
/// seed's length (relations are homogeneous).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceClass {
    members: BTreeSet<Word>,
}

#[allow(clippy::len_without_is_empty)] // a class always contains its seed
impl CongruenceClass {
    pub fn members(&self) -> &BTreeSet<Word> {
        &self.members
    }

    /// The deglex-least member.
    pub fn min(&self) -> &Word {
        self.members.iter().next().expect("classes are never empty")
    }

    /// Number of members; classes are never empty.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.members.contains(word)
    }
}

/// Every word one relation application away from `word`, in either
/// direction, at any position. Sorted and deduplicated.
pub fn relation_neighbors(presentation: &Presentation, word: &Word) -> Vec<Word> {
    let mut out = BTreeSet::new();
    for (a, b) in presentation.relations() {
        for (pattern, replacement) in [(a, b), (b, a)] {
            if pattern.len() > word.len() {
                continue;
            }
            for pos in 0..=word.len() - pattern.len() {
                if &word.letters()[pos..pos + pattern.len()] == pattern.letters() {
                    out.insert(word.replace_factor(pos, pattern.len(), replacement));
                }
            }
        }
    }
    out.into_iter().collect()
}

struct ClosureCounters<'a> {
    budget: &'a OracleBudget,
    expansions: usize,
}

impl<'a> ClosureCounters<'a> {
    fn new(budget: &'a OracleBudget) -> Self {
        ClosureCounters {
            budget,
            expansions: 0,
        }
    }
}

/// Breadth-first closure of `seed` under the relations. Shared counters let
/// the counting operations spread one budget over many classes.
fn close(
    presentation: &Presentation,
    seed: &Word,
    counters: &mut ClosureCounters<'_>,
) -> Result<BTreeSet<Word>, OracleError> {
    let letter_permuting = presentation.is_letter_permuting();
    let seed_content = sorted_letters(seed);
    let mut members: BTreeSet<Word> = BTreeSet::new();
    let mut frontier: VecDeque<Word> = VecDeque::new();
    members.insert(seed.clone());
    frontier.push_back(seed.clone());
    while let Some(word) = frontier.pop_front() {
        counters.expansions += 1;
        if counters.expansions > counters.budget.max_expansions {
            return Err(OracleError::ExpansionBudgetExceeded {
                limit: counters.budget.max_expansions,
            });
        }
        for neighbor in relation_neighbors(presentation, &word) {
            if members.contains(&neighbor) {
                continue;
            }
            if letter_permuting {
                debug_assert_eq!(
                    sorted_letters(&neighbor),
                    seed_content,
                    "letter-permuting relations must preserve letter content"
                );
            }
            if members.len() >= counters.budget.max_class_size {
                return Err(OracleError::ClassTooLarge {
                    limit: counters.budget.max_class_size,
                });
            }
            members.insert(neighbor.clone());
            frontier.push_back(neighbor);
        }
    }
    Ok(members)
}

fn sorted_letters(word: &Word) -> Vec<u32> {
    let mut letters: Vec<u32> = word.letters().iter().map(|l| l.value()).collect();
    letters.sort_unstable();
    letters
}

/// The full congruence class of `w` under the presentation's relations.
pub fn congruence_class(
    presentation: &Presentation,
    word: &Word,
    budget: &OracleBudget,
) -> Result<CongruenceClass, OracleError> {
    let mut counters = ClosureCounters::new(budget);
    let members = close(presentation, word, &mut counters)?;
    Ok(CongruenceClass { members })
}

/// True iff `u` and `v` represent the same monoid element.
pub fn equal_in_monoid(
    presentation: &Presentation,
    u: &Word,
    v: &Word,
    budget: &OracleBudget,
) -> Result<bool, OracleError> {
    if u == v {
        return Ok(true);
    }
    if u.len() != v.len() {
        // Homogeneous relations preserve length.
        return Ok(false);
    }
    Ok(congruence_class(presentation, u, budget)?.contains(v))
}

/// The deglex-least word representing the same element as `w`.
pub fn minimal_word(
    presentation: &Presentation,
    word: &Word,
    budget: &OracleBudget,
) -> Result<Word, OracleError> {
    Ok(congruence_class(presentation, word, budget)?.min().clone())
}

/// True iff some member of `w`'s class starts with `prefix`.
pub fn class_prefix_check(
    presentation: &Presentation,
    word: &Word,
    prefix: &Word,
    budget: &OracleBudget,
) -> Result<bool, OracleError> {
    Ok(congruence_class(presentation, word, budget)?
        .members()
        .iter()
        .any(|member| member.starts_with(prefix)))
}

/// Number of distinct congruence classes among all words of the given
/// length.
pub fn count_classes(
    presentation: &Presentation,
    degree: usize,
    budget: &OracleBudget,
) -> Result<usize, OracleError> {
    Ok(class_minima(presentation, degree, budget)?.len())
}

/// The deglex-least member of every class of the given degree, in deglex
/// order. One closure per class, so the cost is linear in the number of
/// words of that length.
pub fn class_minima(
    presentation: &Presentation,
    degree: usize,
    budget: &OracleBudget,
) -> Result<Vec<Word>, OracleError> {
    let alphabet = presentation.alphabet();
    let total = (alphabet as u128)
        .checked_pow(degree as u32)
        .unwrap_or(u128::MAX);
    if total > budget.max_expansions as u128 {
        return Err(OracleError::DegreeTooLarge { alphabet, degree });
    }
    let mut counters = ClosureCounters::new(budget);
    let mut seen: HashSet<Word> = HashSet::new();
    let mut minima = Vec::new();
    for word in words_of_length(alphabet, degree) {
        if seen.contains(&word) {
            continue;
        }
        let members = close(presentation, &word, &mut counters)?;
        // Words are visited in deglex order, so the seed is the minimum.
        debug_assert_eq!(members.iter().next(), Some(&word));
        minima.push(word);
        seen.extend(members);
    }
    Ok(minima)
}

/// All words of the given length over `1..=alphabet`, in deglex order.
pub fn words_of_length(alphabet: u32, length: usize) -> impl Iterator<Item = Word> {
    WordCounter {
        alphabet,
        next: if alphabet == 0 && length > 0 {
            None
        } else {
            Some(vec![1u32; length])
        },
    }
}

struct WordCounter {
    alphabet: u32,
    next: Option<Vec<u32>>,
}

impl Iterator for WordCounter {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let word: Word = current.iter().map(|&v| Letter::new(v)).collect();
        // Odometer increment from the right.
        let mut digits = current;
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                self.next = None;
                break;
            }
            pos -= 1;
            if digits[pos] < self.alphabet {
                digits[pos] += 1;
                for d in &mut digits[pos + 1..] {
                    *d = 1;
                }
                self.next = Some(digits);
                break;
            }
        }
        Some(word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plactic::knuth_presentation;
    use crate::words::parse_word;

    fn w(text: &str) -> Word {
        parse_word(text, 9).unwrap()
    }

    fn knuth(n: u32) -> Presentation {
        knuth_presentation(n).unwrap()
    }

    fn budget() -> OracleBudget {
        OracleBudget::default()
    }

    #[test]
    fn class_examples() {
        let class = congruence_class(&knuth(3), &w("121"), &budget()).unwrap();
        let members: Vec<Word> = class.members().iter().cloned().collect();
        assert_eq!(members, vec![w("121"), w("211")]);
        assert_eq!(class.min(), &w("121"));

        let class = congruence_class(&knuth(4), &w("32431"), &budget()).unwrap();
        for member in ["32431", "34231", "34213", "32413", "32143"] {
            assert!(class.contains(&w(member)), "class misses {member}");
        }

        let class = congruence_class(&knuth(3), &w("21"), &budget()).unwrap();
        assert_eq!(class.len(), 1);
    }

    #[test]
    fn equality_examples() {
        assert!(equal_in_monoid(&knuth(4), &w("323431"), &w("321343"), &budget()).unwrap());
        assert!(equal_in_monoid(&knuth(3), &w("121"), &w("211"), &budget()).unwrap());
        assert!(!equal_in_monoid(&knuth(3), &w("12"), &w("21"), &budget()).unwrap());
    }

    #[test]
    fn minimal_word_examples() {
        assert_eq!(minimal_word(&knuth(4), &w("32343"), &budget()).unwrap(), w("32343"));
        assert_eq!(minimal_word(&knuth(4), &w("23431"), &budget()).unwrap(), w("23431"));
        assert_eq!(minimal_word(&knuth(3), &w("3321"), &budget()).unwrap(), w("3213"));
    }

    #[test]
    fn count_classes_examples() {
        assert_eq!(count_classes(&knuth(3), 0, &budget()).unwrap(), 1);
        assert_eq!(count_classes(&knuth(3), 2, &budget()).unwrap(), 9);
        assert_eq!(count_classes(&knuth(3), 3, &budget()).unwrap(), 19);
    }

    #[test]
    fn prefix_examples() {
        assert!(!class_prefix_check(&knuth(4), &w("23431"), &w("1"), &budget()).unwrap());
        assert!(!class_prefix_check(&knuth(4), &w("23431"), &w("21"), &budget()).unwrap());
        assert!(class_prefix_check(&knuth(3), &w("211"), &w("1"), &budget()).unwrap());
    }

    #[test]
    fn budgets_fail_loudly() {
        let tiny = OracleBudget {
            max_class_size: 2,
            max_expansions: 1_000,
        };
        assert_eq!(
            congruence_class(&knuth(3), &w("321321"), &tiny),
            Err(OracleError::ClassTooLarge { limit: 2 })
        );
        let tiny = OracleBudget {
            max_class_size: 1_000,
            max_expansions: 3,
        };
        assert_eq!(
            congruence_class(&knuth(3), &w("321321"), &tiny),
            Err(OracleError::ExpansionBudgetExceeded { limit: 3 })
        );
        let tiny = OracleBudget {
            max_class_size: 1_000,
            max_expansions: 100,
        };
        assert_eq!(
            count_classes(&knuth(3), 7, &tiny),
            Err(OracleError::DegreeTooLarge {
                alphabet: 3,
                degree: 7
            })
        );
    }

    #[test]
    fn neighbors_are_single_moves() {
        let neighbors = relation_neighbors(&knuth(3), &w("3212"));
        // 321|2 via 321->? no relation; positions: 3212 contains 212=221 and 321? The
        // Knuth relations of degree 3 apply at positions 0 and 1.
        assert!(neighbors.contains(&w("3221"))); // 212 -> 221 at position 1
        assert!(!neighbors.contains(&w("3212")));
    }

    #[test]
    fn word_enumeration_order() {
        let all: Vec<Word> = words_of_length(2, 2).collect();
        assert_eq!(all, vec![w("11"), w("12"), w("21"), w("22")]);
        let none: Vec<Word> = words_of_length(0, 3).collect();
        assert!(none.is_empty());
        let empty: Vec<Word> = words_of_length(0, 0).collect();
        assert_eq!(empty, vec![Word::empty()]);
    }
}
