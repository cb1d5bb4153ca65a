//! Embedded fixtures for the verification commands: the published rank-3
//! rule set and its 27 ambiguity superpositions. Kept as literal text so
//! verify-thm1 checks the engine against the record, not against itself.

use shirshov::rewriting::{Rule, RulesParseError};
use shirshov::words::{parse_word, Word};

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

pub const GOLDEN_AMBIGUITY_WORDS: [&str; 27] = [
    "3322", "33221", "33211", "33231", "33212", "332131", "332321", "3221", "32221", "32211",
    "32231", "3311", "3312", "2311", "321311", "2211", "31221", "321221", "31211", "321211",
    "323211", "2312", "31231", "321231", "321312", "323212", "3232131",
];

pub fn golden_rules() -> Vec<Rule> {
    GOLDEN_RANK3_RULES
        .iter()
        .map(|(lhs, rhs)| {
            Rule::new(parse_word(lhs, 3).unwrap(), parse_word(rhs, 3).unwrap())
                .expect("golden rules are well formed")
        })
        .collect()
}

pub fn golden_ambiguity_words() -> Vec<Word> {
    GOLDEN_AMBIGUITY_WORDS
        .iter()
        .map(|text| parse_word(text, 3).unwrap())
        .collect()
}

/// Test hook: when `SHIRSHOV_GOLDEN_RULES` names a rules file, verify-thm1
/// checks the engine against that file instead of the embedded fixture.
pub fn effective_golden_rules() -> Result<Vec<Rule>, String> {
    match std::env::var("SHIRSHOV_GOLDEN_RULES") {
        Ok(path) => {
            let text =
                std::fs::read_to_string(&path).map_err(|e| format!("{path}: {e}"))?;
            let (_, rules) = shirshov::rewriting::parse_rules(&text, Some(3))
                .map_err(|e: RulesParseError| format!("{path}: {e}"))?;
            Ok(rules)
        }
        Err(_) => Ok(golden_rules()),
    }
}
