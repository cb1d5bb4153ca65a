//! Degree-lexicographic string rewriting over free monoids.
//!
//! The crate computes and verifies Gröbner–Shirshov bases of homogeneous
//! monoid presentations: orienting relations into rewrite rules, running
//! Knuth–Bendix style completion with degree bounds and interreduction,
//! enumerating ambiguities, and checking confluence. Plactic monoids are
//! built in — Knuth presentations, Schensted insertion, semistandard Young
//! tableaux and the column-reading standard form — together with a
//! brute-force congruence oracle used to cross-validate everything else.
//!
//! The rank-3 plactic presentation completes to a finite 11-rule confluent
//! system; from rank 4 on, completion keeps producing rules at every degree
//! and can only be run under a bound.

pub mod completion;
pub mod oracle;
pub mod plactic;
pub mod rewriting;
pub mod words;

pub use completion::{
    complete, interreduce, CompletionLimits, CompletionResult, CompletionStats, CompletionStatus,
    Presentation,
};
pub use plactic::{
    chinese_presentation, column_factors, column_reading, is_rank3_normal_form,
    knuth_presentation, tableau_of_word, theorem2_witness, Tableau, Theorem2Witness,
};
pub use rewriting::{make_rule, Ambiguity, AmbiguityKind, ConfluenceReport, Rule, RewriteSystem};
pub use words::{
    format_word, max_decreasing_subsequence, parse_word, Letter, Word, WordError,
};
