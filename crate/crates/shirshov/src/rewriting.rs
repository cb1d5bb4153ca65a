//! Oriented homogeneous rewrite rules over deglex, deterministic
//! normalization, ambiguity (critical-pair) enumeration, and confluence
//! checking.
//!
//! All rules replace a word by a strictly deglex-smaller word of the same
//! length, so every reduction sequence terminates: each step strictly
//! decreases the word in deglex.

use std::error::Error;
use std::fmt;

use crate::words::{format_word, parse_word, Letter, Word};

/// One oriented monomial reduction `lhs -> rhs` with `lhs > rhs` in deglex
/// and `|lhs| = |rhs|` (homogeneity).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rule {
    lhs: Word,
    rhs: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleError {
    EqualSides,
    InhomogeneousRelation { left_len: usize, right_len: usize },
    /// The stated lhs is deglex-smaller than the rhs.
    ReversedOrientation,
}

impl fmt::Display for RuleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleError::EqualSides => write!(f, "relation has equal sides"),
            RuleError::InhomogeneousRelation {
                left_len,
                right_len,
            } => write!(
                f,
                "relation is not homogeneous (lengths {left_len} and {right_len})"
            ),
            RuleError::ReversedOrientation => {
                write!(f, "rule lhs is deglex-smaller than its rhs")
            }
        }
    }
}

impl Error for RuleError {}

impl Rule {
    /// Builds a rule with the orientation as given, validating the invariants.
    pub fn new(lhs: Word, rhs: Word) -> Result<Rule, RuleError> {
        if lhs.len() != rhs.len() {
            return Err(RuleError::InhomogeneousRelation {
                left_len: lhs.len(),
                right_len: rhs.len(),
            });
        }
        if lhs == rhs {
            return Err(RuleError::EqualSides);
        }
        if lhs < rhs {
            return Err(RuleError::ReversedOrientation);
        }
        Ok(Rule { lhs, rhs })
    }

    pub fn lhs(&self) -> &Word {
        &self.lhs
    }

    pub fn rhs(&self) -> &Word {
        &self.rhs
    }
}

/// Orients an unordered relation by deglex: the greater side becomes the lhs.
pub fn make_rule(a: Word, b: Word) -> Result<Rule, RuleError> {
    if a.len() != b.len() {
        return Err(RuleError::InhomogeneousRelation {
            left_len: a.len(),
            right_len: b.len(),
        });
    }
    if a == b {
        return Err(RuleError::EqualSides);
    }
    if a > b {
        Rule::new(a, b)
    } else {
        Rule::new(b, a)
    }
}

/// Prefix trie over the rule lhs words.
///
/// At a fixed position all matching lhs are prefixes of the same text, so
/// distinct matches have distinct lengths and the shortest match is the
/// deglex-smallest. The trie returns that one directly.
struct MatchTrie {
    nodes: Vec<TrieNode>,
}

struct TrieNode {
    children: Vec<(Letter, u32)>,
    rule: Option<u32>,
}

impl MatchTrie {
    fn build(rules: &[Rule]) -> Self {
        let mut trie = MatchTrie {
            nodes: vec![TrieNode {
                children: Vec::new(),
                rule: None,
            }],
        };
        for (index, rule) in rules.iter().enumerate() {
            let mut node = 0usize;
            for &letter in rule.lhs().letters() {
                node = match trie.nodes[node]
                    .children
                    .iter()
                    .find(|(l, _)| *l == letter)
                {
                    Some(&(_, next)) => next as usize,
                    None => {
                        let next = trie.nodes.len();
                        trie.nodes.push(TrieNode {
                            children: Vec::new(),
                            rule: None,
                        });
                        trie.nodes[node].children.push((letter, next as u32));
                        next
                    }
                };
            }
            trie.nodes[node].rule = Some(index as u32);
        }
        trie
    }

    /// Shortest (hence deglex-smallest) rule lhs matching at `pos`.
    fn shortest_match_at(&self, letters: &[Letter], pos: usize) -> Option<(usize, usize)> {
        let mut node = 0usize;
        for (depth, &letter) in letters[pos..].iter().enumerate() {
            node = self.nodes[node]
                .children
                .iter()
                .find(|(l, _)| *l == letter)
                .map(|&(_, next)| next as usize)?;
            if let Some(rule) = self.nodes[node].rule {
                return Some((rule as usize, depth + 1));
            }
        }
        None
    }
}

/// The superposition of two rule occurrences: either a proper overlap of
/// their lhs words or one lhs contained in the other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ambiguity {
    /// The superposition word in which both lhs occur.
    pub word: Word,
    /// Index of the rule whose occurrence starts first (the outer rule for
    /// containments starting at 0).
    pub left_rule: usize,
    pub right_rule: usize,
    pub left_pos: usize,
    pub right_pos: usize,
    pub kind: AmbiguityKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmbiguityKind {
    Overlap,
    Containment,
}

/// One rewriting step: `rule` applied at `position`, yielding `word_after`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub position: usize,
    pub rule: usize,
    pub word_after: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

/// Result of resolving every ambiguity of a system: for each one, both
/// one-step descendants reduced to normal form.
#[derive(Debug, Clone)]
pub struct ConfluenceReport {
    pub resolved: Vec<ResolvedAmbiguity>,
    pub unresolved: Vec<UnresolvedAmbiguity>,
}

#[derive(Debug, Clone)]
pub struct ResolvedAmbiguity {
    pub ambiguity: Ambiguity,
    pub normal_form: Word,
}

#[derive(Debug, Clone)]
pub struct UnresolvedAmbiguity {
    pub ambiguity: Ambiguity,
    pub left_normal_form: Word,
    pub right_normal_form: Word,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.unresolved.is_empty()
    }

    /// All enumerated superposition words, resolved and unresolved.
    pub fn superposition_words(&self) -> Vec<Word> {
        self.resolved
            .iter()
            .map(|r| r.ambiguity.word.clone())
            .chain(self.unresolved.iter().map(|u| u.ambiguity.word.clone()))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SystemError {
    DuplicateLhs { lhs: Word },
    LetterOutOfRange { value: u32, alphabet: u32 },
}

impl fmt::Display for SystemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemError::DuplicateLhs { lhs } => {
                write!(f, "two rules share the lhs {lhs:?}")
            }
            SystemError::LetterOutOfRange { value, alphabet } => {
                write!(f, "rule letter {value} out of range 1..={alphabet}")
            }
        }
    }
}

impl Error for SystemError {}

/// A finite set of rules with a fixed deterministic reduction strategy.
///
/// Immutable after construction; all operations are pure.
pub struct RewriteSystem {
    alphabet: u32,
    rules: Vec<Rule>,
    trie: MatchTrie,
    max_lhs_len: usize,
}

impl RewriteSystem {
    /// Sorts the rules by deglex of lhs and builds the matcher. Rejects
    /// duplicate lhs words and letters outside the alphabet.
    pub fn new(alphabet: u32, mut rules: Vec<Rule>) -> Result<Self, SystemError> {
        rules.sort_by(|a, b| a.lhs().deglex_cmp(b.lhs()));
        for pair in rules.windows(2) {
            if pair[0].lhs() == pair[1].lhs() {
                return Err(SystemError::DuplicateLhs {
                    lhs: pair[0].lhs().clone(),
                });
            }
        }
        for rule in &rules {
            for side in [rule.lhs(), rule.rhs()] {
                if let Some(letter) = side.max_letter() {
                    if letter.value() > alphabet {
                        return Err(SystemError::LetterOutOfRange {
                            value: letter.value(),
                            alphabet,
                        });
                    }
                }
            }
        }
        let trie = MatchTrie::build(&rules);
        let max_lhs_len = rules.iter().map(|r| r.lhs().len()).max().unwrap_or(0);
        Ok(RewriteSystem {
            alphabet,
            rules,
            trie,
            max_lhs_len,
        })
    }

    pub fn empty(alphabet: u32) -> Self {
        RewriteSystem::new(alphabet, Vec::new()).expect("empty system is always valid")
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    /// Rules in deglex order of lhs.
    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn is_irreducible(&self, word: &Word) -> bool {
        let letters = word.letters();
        (0..letters.len()).all(|pos| self.trie.shortest_match_at(letters, pos).is_none())
    }

    /// Reduces `word` to an irreducible form.
    ///
    /// Strategy: scan positions left to right; at the first position where
    /// any lhs matches, apply the rule with deglex-smallest lhs (the
    /// shortest match there); restart the scan from
    /// `max(0, position - longest lhs length + 1)`. The strategy is fixed so
    /// traces and step counts are reproducible.
    pub fn reduce(&self, word: &Word) -> Word {
        self.reduce_inner(word, false).0
    }

    /// Same normal form as [`reduce`](Self::reduce), with every step recorded.
    pub fn reduce_traced(&self, word: &Word) -> (Word, ReductionTrace) {
        self.reduce_inner(word, true)
    }

    fn reduce_inner(&self, word: &Word, record: bool) -> (Word, ReductionTrace) {
        let mut trace = ReductionTrace::default();
        if self.rules.is_empty() {
            return (word.clone(), trace);
        }
        let mut letters: Vec<Letter> = word.letters().to_vec();
        let mut pos = 0;
        while pos < letters.len() {
            match self.trie.shortest_match_at(&letters, pos) {
                Some((rule_index, match_len)) => {
                    let rule = &self.rules[rule_index];
                    // Homogeneity keeps positions stable across steps.
                    letters[pos..pos + match_len].copy_from_slice(rule.rhs().letters());
                    if record {
                        trace.steps.push(ReductionStep {
                            position: pos,
                            rule: rule_index,
                            word_after: Word::from_letters(letters.clone()),
                        });
                    }
                    pos = pos.saturating_sub(self.max_lhs_len - 1);
                }
                None => pos += 1,
            }
        }
        (Word::from_letters(letters), trace)
    }

    /// Every proper overlap and containment between ordered rule pairs,
    /// including a rule with itself (coincident occurrences excluded).
    /// Sorted by deglex of the superposition word, then offsets.
    pub fn critical_pairs(&self) -> Vec<Ambiguity> {
        let mut out = Vec::new();
        for (i, left) in self.rules.iter().enumerate() {
            for (j, right) in self.rules.iter().enumerate() {
                for sup in superpositions(left.lhs(), right.lhs()) {
                    out.push(Ambiguity {
                        word: sup.word,
                        left_rule: i,
                        right_rule: j,
                        left_pos: 0,
                        right_pos: sup.right_pos,
                        kind: sup.kind,
                    });
                }
            }
        }
        out.sort_by(|a, b| {
            a.word
                .deglex_cmp(&b.word)
                .then(a.left_pos.cmp(&b.left_pos))
                .then(a.right_pos.cmp(&b.right_pos))
                .then(a.left_rule.cmp(&b.left_rule))
                .then(a.right_rule.cmp(&b.right_rule))
        });
        out
    }

    /// The two one-step rewrites of the superposition word.
    pub fn descendants(&self, ambiguity: &Ambiguity) -> (Word, Word) {
        let left = &self.rules[ambiguity.left_rule];
        let right = &self.rules[ambiguity.right_rule];
        let from_left =
            ambiguity
                .word
                .replace_factor(ambiguity.left_pos, left.lhs().len(), left.rhs());
        let from_right =
            ambiguity
                .word
                .replace_factor(ambiguity.right_pos, right.lhs().len(), right.rhs());
        (from_left, from_right)
    }

    /// Reduces both descendants of every ambiguity; an ambiguity resolves
    /// when they share a normal form. The system is confluent iff all do.
    pub fn check_confluence(&self) -> ConfluenceReport {
        let mut resolved = Vec::new();
        let mut unresolved = Vec::new();
        for ambiguity in self.critical_pairs() {
            let (from_left, from_right) = self.descendants(&ambiguity);
            let left_normal_form = self.reduce(&from_left);
            let right_normal_form = self.reduce(&from_right);
            if left_normal_form == right_normal_form {
                resolved.push(ResolvedAmbiguity {
                    ambiguity,
                    normal_form: left_normal_form,
                });
            } else {
                unresolved.push(UnresolvedAmbiguity {
                    ambiguity,
                    left_normal_form,
                    right_normal_form,
                });
            }
        }
        ConfluenceReport {
            resolved,
            unresolved,
        }
    }
}

pub(crate) struct Superposition {
    pub word: Word,
    /// Start of the right occurrence; the left occurrence starts at 0.
    pub right_pos: usize,
    pub kind: AmbiguityKind,
}

/// Superpositions of the ordered pair (`left` at offset 0, `right` after it):
/// proper overlaps (a nonempty proper suffix of `left` equals a prefix of
/// `right`) and containments of `right` inside `left`.
pub(crate) fn superpositions(left: &Word, right: &Word) -> Vec<Superposition> {
    let a = left.letters();
    let b = right.letters();
    let mut out = Vec::new();
    let max_overlap = a.len().min(b.len()).saturating_sub(1);
    for overlap in 1..=max_overlap {
        if a[a.len() - overlap..] == b[..overlap] {
            let mut letters = a.to_vec();
            letters.extend_from_slice(&b[overlap..]);
            out.push(Superposition {
                word: Word::from_letters(letters),
                right_pos: a.len() - overlap,
                kind: AmbiguityKind::Overlap,
            });
        }
    }
    if b.len() < a.len() {
        for pos in 0..=a.len() - b.len() {
            if &a[pos..pos + b.len()] == b {
                out.push(Superposition {
                    word: left.clone(),
                    right_pos: pos,
                    kind: AmbiguityKind::Containment,
                });
            }
        }
    }
    out
}

/// Renders one rule as `LHS -> RHS` in the word text format.
pub fn format_rule(rule: &Rule, alphabet: u32) -> String {
    format!(
        "{} -> {}",
        format_word(rule.lhs(), alphabet),
        format_word(rule.rhs(), alphabet)
    )
}

/// Renders a rule list as an `alphabet N` header plus one `LHS -> RHS` line
/// per rule; the inverse of [`parse_rules`].
pub fn format_rules(alphabet: u32, rules: &[Rule]) -> String {
    let mut text = format!("alphabet {alphabet}\n");
    for rule in rules {
        text.push_str(&format_rule(rule, alphabet));
        text.push('\n');
    }
    text
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RulesParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for RulesParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl Error for RulesParseError {}

/// Parses a rules file: an optional `alphabet N` first line (falling back to
/// `default_alphabet` when absent), then one `LHS -> RHS` rule per line.
/// Blank lines and `#` comments are ignored.
pub fn parse_rules(
    text: &str,
    default_alphabet: Option<u32>,
) -> Result<(u32, Vec<Rule>), RulesParseError> {
    let mut alphabet: Option<u32> = None;
    let mut rules = Vec::new();
    let mut saw_content = false;
    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        if !saw_content {
            saw_content = true;
            if let Some(rest) = line.strip_prefix("alphabet") {
                let rest = rest.trim();
                let n: u32 = rest.parse().map_err(|_| RulesParseError {
                    line: line_no,
                    message: format!("malformed alphabet size {rest:?}"),
                })?;
                alphabet = Some(n);
                continue;
            }
        }
        let n = alphabet.or(default_alphabet).ok_or_else(|| RulesParseError {
            line: line_no,
            message: "alphabet unknown: add an `alphabet N` header line".to_string(),
        })?;
        alphabet = Some(n);
        let (lhs_text, rhs_text) = line.split_once("->").ok_or_else(|| RulesParseError {
            line: line_no,
            message: "expected `LHS -> RHS`".to_string(),
        })?;
        let lhs = parse_side(lhs_text, n, line_no)?;
        let rhs = parse_side(rhs_text, n, line_no)?;
        let rule = Rule::new(lhs, rhs).map_err(|e| RulesParseError {
            line: line_no,
            message: e.to_string(),
        })?;
        rules.push(rule);
    }
    let n = alphabet.or(default_alphabet).ok_or_else(|| RulesParseError {
        line: 1,
        message: "alphabet unknown: add an `alphabet N` header line".to_string(),
    })?;
    Ok((n, rules))
}

fn parse_side(text: &str, alphabet: u32, line_no: usize) -> Result<Word, RulesParseError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(RulesParseError {
            line: line_no,
            message: crate::words::WordError::EmptyToken.to_string(),
        });
    }
    parse_word(trimmed, alphabet).map_err(|e| RulesParseError {
        line: line_no,
        message: e.to_string(),
    })
}

pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => line[..pos].trim(),
        None => line.trim(),
    }
}
