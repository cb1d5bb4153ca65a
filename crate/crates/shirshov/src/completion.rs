//! Gröbner–Shirshov / Knuth–Bendix completion of homogeneous monoid
//! presentations under deglex, with degree bounds and interreduction.
//!
//! All relations are binomial with unit coefficients, so completion lives
//! entirely at the string level: a critical pair either resolves or yields
//! one new oriented rule.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::error::Error;
use std::fmt;

use crate::rewriting::{
    make_rule, strip_comment, superpositions, Rule, RewriteSystem, UnresolvedAmbiguity,
};
use crate::words::{format_word, parse_word, Word};

/// A homogeneous monoid presentation: an alphabet size and a finite set of
/// unordered relation pairs of equal-length words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    alphabet: u32,
    relations: Vec<(Word, Word)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PresentationError {
    LetterOutOfRange { value: u32, alphabet: u32 },
    DegenerateRelation { word: Word },
    InhomogeneousRelation { left: Word, right: Word },
}

impl fmt::Display for PresentationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresentationError::LetterOutOfRange { value, alphabet } => {
                write!(f, "letter {value} out of range 1..={alphabet}")
            }
            PresentationError::DegenerateRelation { word } => {
                write!(f, "relation {word:?} = {word:?} has equal sides")
            }
            PresentationError::InhomogeneousRelation { left, right } => {
                write!(f, "relation {left:?} = {right:?} is not homogeneous")
            }
        }
    }
}

impl Error for PresentationError {}

impl Presentation {
    /// Validates and canonicalizes the relation pairs: each stored with the
    /// deglex-smaller side first, sorted and deduplicated.
    pub fn new(
        alphabet: u32,
        pairs: impl IntoIterator<Item = (Word, Word)>,
    ) -> Result<Self, PresentationError> {
        let mut relations = Vec::new();
        for (a, b) in pairs {
            for side in [&a, &b] {
                if let Some(letter) = side.max_letter() {
                    if letter.value() > alphabet {
                        return Err(PresentationError::LetterOutOfRange {
                            value: letter.value(),
                            alphabet,
                        });
                    }
                }
            }
            if a.len() != b.len() {
                return Err(PresentationError::InhomogeneousRelation { left: a, right: b });
            }
            if a == b {
                return Err(PresentationError::DegenerateRelation { word: a });
            }
            let pair = if a < b { (a, b) } else { (b, a) };
            relations.push(pair);
        }
        relations.sort();
        relations.dedup();
        Ok(Presentation {
            alphabet,
            relations,
        })
    }

    pub fn empty(alphabet: u32) -> Self {
        Presentation {
            alphabet,
            relations: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    /// Canonicalized relation pairs, deglex-smaller side first.
    pub fn relations(&self) -> &[(Word, Word)] {
        &self.relations
    }

    /// The relations oriented into rules by deglex.
    pub fn oriented_rules(&self) -> Vec<Rule> {
        self.relations
            .iter()
            .map(|(small, large)| {
                make_rule(large.clone(), small.clone())
                    .expect("presentation invariants guarantee orientable relations")
            })
            .collect()
    }

    /// True iff every relation merely permutes letters (equal multisets on
    /// both sides). Knuth and Chinese relations have this property, which
    /// makes letter content a congruence invariant.
    pub fn is_letter_permuting(&self) -> bool {
        self.relations.iter().all(|(a, b)| {
            let mut left: Vec<u32> = a.letters().iter().map(|l| l.value()).collect();
            let mut right: Vec<u32> = b.letters().iter().map(|l| l.value()).collect();
            left.sort_unstable();
            right.sort_unstable();
            left == right
        })
    }

    /// Parses the presentation file format: a line `alphabet N`, then one
    /// relation `WORD = WORD` per line. Blank lines and `#` comments are
    /// ignored.
    pub fn parse(text: &str) -> Result<Self, PresentationParseError> {
        let mut alphabet: Option<u32> = None;
        let mut pairs = Vec::new();
        for (index, raw) in text.lines().enumerate() {
            let line_no = index + 1;
            let line = strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            match alphabet {
                None => {
                    let rest = line.strip_prefix("alphabet").ok_or_else(|| {
                        PresentationParseError {
                            line: line_no,
                            message: "expected `alphabet N` header line".to_string(),
                        }
                    })?;
                    let rest = rest.trim();
                    alphabet = Some(rest.parse().map_err(|_| PresentationParseError {
                        line: line_no,
                        message: format!("malformed alphabet size {rest:?}"),
                    })?);
                }
                Some(n) => {
                    let (left, right) =
                        line.split_once('=').ok_or_else(|| PresentationParseError {
                            line: line_no,
                            message: "expected `WORD = WORD`".to_string(),
                        })?;
                    let left = parse_relation_side(left, n, line_no)?;
                    let right = parse_relation_side(right, n, line_no)?;
                    pairs.push((left, right, line_no));
                }
            }
        }
        let alphabet = alphabet.ok_or(PresentationParseError {
            line: 1,
            message: "missing `alphabet N` header line".to_string(),
        })?;
        let mut presentation = Presentation::empty(alphabet);
        for (left, right, line_no) in pairs {
            let one = Presentation::new(alphabet, [(left, right)]).map_err(|e| {
                PresentationParseError {
                    line: line_no,
                    message: e.to_string(),
                }
            })?;
            presentation.relations.extend(one.relations);
        }
        presentation.relations.sort();
        presentation.relations.dedup();
        Ok(presentation)
    }

    /// Inverse of [`parse`](Self::parse).
    pub fn to_text(&self) -> String {
        let mut text = format!("alphabet {}\n", self.alphabet);
        for (small, large) in &self.relations {
            text.push_str(&format!(
                "{} = {}\n",
                format_word(small, self.alphabet),
                format_word(large, self.alphabet)
            ));
        }
        text
    }
}

fn parse_relation_side(
    text: &str,
    alphabet: u32,
    line_no: usize,
) -> Result<Word, PresentationParseError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(PresentationParseError {
            line: line_no,
            message: crate::words::WordError::EmptyToken.to_string(),
        });
    }
    parse_word(trimmed, alphabet).map_err(|e| PresentationParseError {
        line: line_no,
        message: e.to_string(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for PresentationParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl Error for PresentationParseError {}

/// Optional resource limits for [`complete`]. Needed because completion of
/// some presentations never terminates unbounded.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CompletionLimits {
    /// Longest lhs length a discovered rule may have.
    pub max_degree: Option<usize>,
    /// Cap on the total number of rules in the system.
    pub max_rules: Option<usize>,
    /// Cap on the number of critical pairs examined.
    pub max_pairs: Option<usize>,
}

impl CompletionLimits {
    pub fn none() -> Self {
        CompletionLimits::default()
    }

    pub fn degree(max_degree: usize) -> Self {
        CompletionLimits {
            max_degree: Some(max_degree),
            ..CompletionLimits::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompletionStatus {
    /// No unresolved ambiguities remain: the rule set is a Gröbner–Shirshov
    /// basis for the presentation.
    Complete,
    DegreeBounded,
    RuleBounded,
    PairBounded,
}

impl CompletionStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CompletionStatus::Complete => "complete",
            CompletionStatus::DegreeBounded => "degree_bounded",
            CompletionStatus::RuleBounded => "rule_bounded",
            CompletionStatus::PairBounded => "pair_bounded",
        }
    }
}

impl fmt::Display for CompletionStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CompletionStats {
    /// Critical pairs whose descendants were reduced and compared.
    pub pairs_examined: usize,
    /// Rules adopted from unresolved critical pairs.
    pub rules_added: usize,
    /// Longest lhs in the final system.
    pub max_lhs_degree: usize,
    /// Unresolved pairs whose rule would exceed the degree bound.
    pub pairs_over_degree: usize,
}

pub struct CompletionResult {
    pub system: RewriteSystem,
    pub status: CompletionStatus,
    pub stats: CompletionStats,
}

/// Identity of an ambiguity that survives rule-set changes: the lhs words
/// themselves rather than rule indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PairKey {
    word: Word,
    left_pos: usize,
    right_pos: usize,
    left_lhs: Word,
    right_lhs: Word,
}

/// The active rule set during completion, kept interreduced at all times:
/// no lhs contains another lhs as a factor and every rhs is irreducible
/// with respect to the whole set.
struct ActiveRules {
    alphabet: u32,
    rules: BTreeMap<Word, Word>,
}

impl ActiveRules {
    fn new(alphabet: u32) -> Self {
        ActiveRules {
            alphabet,
            rules: BTreeMap::new(),
        }
    }

    fn system(&self) -> RewriteSystem {
        let rules = self
            .rules
            .iter()
            .map(|(lhs, rhs)| {
                Rule::new(lhs.clone(), rhs.clone()).expect("active rules stay oriented")
            })
            .collect();
        RewriteSystem::new(self.alphabet, rules).expect("active rules stay disjoint on lhs")
    }

    /// Feeds equations through reduction and insertion until the queue is
    /// empty, keeping the set interreduced. Rules whose lhs becomes
    /// reducible are dropped and their content re-queued, which re-orients
    /// it through `make_rule` when it resurfaces.
    fn absorb(&mut self, mut queue: VecDeque<(Word, Word)>) {
        while let Some((a, b)) = queue.pop_front() {
            let system = self.system();
            let left = system.reduce(&a);
            let right = system.reduce(&b);
            if left == right {
                continue;
            }
            let rule = make_rule(left, right)
                .expect("distinct homogeneous normal forms are orientable");
            let lhs = rule.lhs().clone();
            let rhs = rule.rhs().clone();
            let displaced: Vec<Word> = self
                .rules
                .keys()
                .filter(|existing| existing.contains_factor(&lhs))
                .cloned()
                .collect();
            for key in displaced {
                let value = self.rules.remove(&key).expect("key came from the map");
                queue.push_back((key, value));
            }
            self.rules.insert(lhs.clone(), rhs);
            // Renormalize surviving right-hand sides against the new rule.
            let system = self.system();
            let stale: Vec<(Word, Word)> = self
                .rules
                .iter()
                .filter(|(key, value)| **key != lhs && value.contains_factor(&lhs))
                .map(|(key, value)| (key.clone(), system.reduce(value)))
                .collect();
            for (key, value) in stale {
                self.rules.insert(key, value);
            }
        }
    }

    fn len(&self) -> usize {
        self.rules.len()
    }
}

/// Simplifies a rule list to an equivalent interreduced one: no lhs contains
/// another lhs as a factor or equals it, and every rhs is irreducible with
/// respect to the other rules. The congruence generated is unchanged.
pub fn interreduce(rules: Vec<Rule>) -> Vec<Rule> {
    let alphabet = rules
        .iter()
        .flat_map(|r| [r.lhs().max_letter(), r.rhs().max_letter()])
        .flatten()
        .map(|l| l.value())
        .max()
        .unwrap_or(0);
    let mut active = ActiveRules::new(alphabet);
    let queue: VecDeque<(Word, Word)> = rules
        .into_iter()
        .map(|r| (r.lhs().clone(), r.rhs().clone()))
        .collect();
    active.absorb(queue);
    active.system().rules().to_vec()
}

/// Runs completion on a presentation.
///
/// Starting from the oriented relations, repeatedly picks the outstanding
/// ambiguity with the deglex-smallest superposition word, reduces both
/// descendants, and when the normal forms differ adopts the oriented rule
/// between them, interreducing after every insertion. Stops when every
/// ambiguity of the final system resolves (`Complete`) or a limit trips.
/// Candidate rules whose lhs would exceed `max_degree` are never added;
/// the pairs they come from are counted in the stats.
///
/// Deterministic for a fixed input.
pub fn complete(presentation: &Presentation, limits: &CompletionLimits) -> CompletionResult {
    let mut active = ActiveRules::new(presentation.alphabet());
    let seed: VecDeque<(Word, Word)> = presentation
        .relations()
        .iter()
        .map(|(a, b)| (a.clone(), b.clone()))
        .collect();
    active.absorb(seed);

    let mut stats = CompletionStats::default();
    let mut processed: HashSet<PairKey> = HashSet::new();
    let mut pending: BTreeSet<PairKey> = BTreeSet::new();
    let mut system = active.system();
    enqueue_all_pairs(&system, &processed, &mut pending);

    let status = 'run: loop {
        while let Some(key) = pending.pop_first() {
            // Stale when either lhs has been interreduced away.
            if !active.rules.contains_key(&key.left_lhs)
                || !active.rules.contains_key(&key.right_lhs)
            {
                processed.insert(key);
                continue;
            }
            if let Some(max_pairs) = limits.max_pairs {
                if stats.pairs_examined >= max_pairs {
                    break 'run CompletionStatus::PairBounded;
                }
            }
            stats.pairs_examined += 1;
            processed.insert(key.clone());
            let left = key
                .word
                .replace_factor(key.left_pos, key.left_lhs.len(), &active.rules[&key.left_lhs]);
            let right = key.word.replace_factor(
                key.right_pos,
                key.right_lhs.len(),
                &active.rules[&key.right_lhs],
            );
            let left = system.reduce(&left);
            let right = system.reduce(&right);
            if left == right {
                continue;
            }
            let candidate =
                make_rule(left, right).expect("distinct homogeneous normal forms are orientable");
            if let Some(max_degree) = limits.max_degree {
                if candidate.lhs().len() > max_degree {
                    continue;
                }
            }
            stats.rules_added += 1;
            active.absorb(VecDeque::from([(
                candidate.lhs().clone(),
                candidate.rhs().clone(),
            )]));
            system = active.system();
            enqueue_all_pairs(&system, &processed, &mut pending);
            if let Some(max_rules) = limits.max_rules {
                if active.len() > max_rules {
                    break 'run CompletionStatus::RuleBounded;
                }
            }
        }

        // Queue drained: verify against the final system. Pairs that
        // resolved against an earlier rule set may have drifted, so any
        // still-unresolved ambiguity within the degree bound goes back in.
        let report = system.check_confluence();
        if report.unresolved.is_empty() {
            break CompletionStatus::Complete;
        }
        let mut requeued = false;
        let mut over_degree = 0usize;
        for unresolved in &report.unresolved {
            if rule_within_degree(unresolved, limits.max_degree) {
                let key = key_of(&system, unresolved);
                processed.remove(&key);
                pending.insert(key);
                requeued = true;
            } else {
                over_degree += 1;
            }
        }
        if !requeued {
            stats.pairs_over_degree = over_degree;
            break CompletionStatus::DegreeBounded;
        }
    };

    // A tripped limit can still leave a confluent system behind; the status
    // must agree with check_confluence either way.
    let status = match status {
        CompletionStatus::RuleBounded | CompletionStatus::PairBounded
            if system.check_confluence().is_confluent() =>
        {
            CompletionStatus::Complete
        }
        other => other,
    };

    stats.max_lhs_degree = system
        .rules()
        .iter()
        .map(|r| r.lhs().len())
        .max()
        .unwrap_or(0);
    CompletionResult {
        system,
        status,
        stats,
    }
}

fn rule_within_degree(unresolved: &UnresolvedAmbiguity, max_degree: Option<usize>) -> bool {
    match max_degree {
        // Normal forms are homogeneous with equal length, so either one is
        // the candidate lhs length.
        Some(limit) => unresolved.left_normal_form.len() <= limit,
        None => true,
    }
}

fn key_of(system: &RewriteSystem, unresolved: &UnresolvedAmbiguity) -> PairKey {
    let ambiguity = &unresolved.ambiguity;
    PairKey {
        word: ambiguity.word.clone(),
        left_pos: ambiguity.left_pos,
        right_pos: ambiguity.right_pos,
        left_lhs: system.rules()[ambiguity.left_rule].lhs().clone(),
        right_lhs: system.rules()[ambiguity.right_rule].lhs().clone(),
    }
}

fn enqueue_all_pairs(
    system: &RewriteSystem,
    processed: &HashSet<PairKey>,
    pending: &mut BTreeSet<PairKey>,
) {
    for left in system.rules() {
        for right in system.rules() {
            for sup in superpositions(left.lhs(), right.lhs()) {
                let key = PairKey {
                    word: sup.word,
                    left_pos: 0,
                    right_pos: sup.right_pos,
                    left_lhs: left.lhs().clone(),
                    right_lhs: right.lhs().clone(),
                };
                if !processed.contains(&key) {
                    pending.insert(key);
                }
            }
        }
    }
}
