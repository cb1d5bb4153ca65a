//! Checks the engine against the published rank-3 record: completion must
//! land on exactly the fixed 11 rules, the system must be confluent, and
//! all 27 recorded ambiguity superpositions must appear and resolve.

use std::collections::BTreeSet;
use std::time::Instant;

use serde_json::json;
use shirshov::plactic::knuth_presentation;
use shirshov::words::Word;
use shirshov::{complete, CompletionLimits, CompletionStatus};

use crate::commands::{exit, words_as_strings};
use crate::golden::{effective_golden_rules, golden_ambiguity_words};
use crate::report::{OutputFormat, Report};

pub fn run(format: OutputFormat) -> Result<u8, String> {
    let started = Instant::now();
    let golden = effective_golden_rules()?;
    let presentation = knuth_presentation(3).map_err(|e| e.to_string())?;
    let result = complete(&presentation, &CompletionLimits::none());

    let found: BTreeSet<(Word, Word)> = result
        .system
        .rules()
        .iter()
        .map(|r| (r.lhs().clone(), r.rhs().clone()))
        .collect();
    let expected: BTreeSet<(Word, Word)> = golden
        .iter()
        .map(|r| (r.lhs().clone(), r.rhs().clone()))
        .collect();
    let rendered = |pairs: Vec<&(Word, Word)>| -> Vec<String> {
        pairs
            .into_iter()
            .map(|(lhs, rhs)| {
                format!(
                    "{} -> {}",
                    shirshov::format_word(lhs, 3),
                    shirshov::format_word(rhs, 3)
                )
            })
            .collect()
    };
    let missing = rendered(expected.difference(&found).collect());
    let unexpected = rendered(found.difference(&expected).collect());
    let rules_match = missing.is_empty() && unexpected.is_empty();

    let report_conf = result.system.check_confluence();
    let superpositions: BTreeSet<Word> = report_conf.superposition_words().into_iter().collect();
    let resolved: BTreeSet<Word> = report_conf
        .resolved
        .iter()
        .map(|r| r.ambiguity.word.clone())
        .collect();
    let mut ambiguities_missing = Vec::new();
    let mut ambiguities_unresolved = Vec::new();
    for word in golden_ambiguity_words() {
        if !superpositions.contains(&word) {
            ambiguities_missing.push(word);
        } else if !resolved.contains(&word) {
            ambiguities_unresolved.push(word);
        }
    }

    let pass = result.status == CompletionStatus::Complete
        && rules_match
        && report_conf.unresolved.is_empty()
        && ambiguities_missing.is_empty()
        && ambiguities_unresolved.is_empty();
    let verdict = if pass { "PASS" } else { "FAIL" };

    let payload = json!({
        "completion_status": result.status.as_str(),
        "rules_expected": expected.len(),
        "rules_found": found.len(),
        "rules_match": rules_match,
        "missing_rules": missing.clone(),
        "unexpected_rules": unexpected.clone(),
        "ambiguity_count": superpositions.len(),
        "unresolved_count": report_conf.unresolved.len(),
        "golden_ambiguities_missing": words_as_strings(ambiguities_missing.clone(), 3),
        "golden_ambiguities_unresolved": words_as_strings(ambiguities_unresolved.clone(), 3),
        "verdict": verdict,
    });

    let mut text = format!(
        "completion: {} with {} rules (expected {})\n",
        result.status,
        found.len(),
        expected.len()
    );
    if !rules_match {
        for rule in &missing {
            text.push_str(&format!("expected rule not found: {rule}\n"));
        }
        for rule in &unexpected {
            text.push_str(&format!("rule not in the record: {rule}\n"));
        }
    }
    text.push_str(&format!(
        "ambiguities: {} enumerated, {} unresolved\n",
        superpositions.len(),
        report_conf.unresolved.len()
    ));
    for word in &ambiguities_missing {
        text.push_str(&format!("recorded ambiguity {word:?} not enumerated\n"));
    }
    for word in &ambiguities_unresolved {
        text.push_str(&format!("recorded ambiguity {word:?} does not resolve\n"));
    }
    text.push_str(&format!("verdict: {verdict}\n"));

    let report = Report::new(
        "verify-thm1",
        json!({}),
        payload,
        if pass { "pass" } else { "fail" },
        started,
    );
    report.print(format, &text);
    Ok(if pass { exit::OK } else { exit::FAIL })
}
