//! Enumerates the irreducible words of one degree under the completed
//! rank-3 system, checks each against the two normal-form families, and
//! compares the count with the oracle's class count.

use std::time::Instant;

use serde_json::json;
use shirshov::oracle::{count_classes, words_of_length, OracleBudget, OracleError};
use shirshov::plactic::{is_rank3_normal_form, knuth_presentation};
use shirshov::words::{format_word, Word};
use shirshov::{complete, CompletionLimits};

use crate::commands::exit;
use crate::report::{OutputFormat, Report};

pub struct Options {
    pub n: u32,
    pub degree: usize,
    pub format: OutputFormat,
}

pub fn run(options: Options) -> Result<u8, String> {
    let started = Instant::now();
    if options.n != 3 {
        return Err(format!(
            "--n {} unsupported: the normal-form families are specific to rank 3",
            options.n
        ));
    }
    let presentation = knuth_presentation(3).map_err(|e| e.to_string())?;
    let system = complete(&presentation, &CompletionLimits::none()).system;
    let budget = OracleBudget::default();
    let inputs = json!({ "n": options.n, "degree": options.degree });

    let oracle_count = match count_classes(&presentation, options.degree, &budget) {
        Ok(count) => count,
        Err(err @ OracleError::DegreeTooLarge { .. }) => {
            let payload = json!({ "error": err.to_string() });
            let report = Report::new("normal-forms", inputs, payload, "budget_exceeded", started);
            report.print(options.format, &format!("{err}\n"));
            return Ok(exit::BUDGET);
        }
        Err(err) => return Err(err.to_string()),
    };

    let normal_forms: Vec<Word> = words_of_length(3, options.degree)
        .filter(|word| system.reduce(word) == *word)
        .collect();
    let family_mismatches: Vec<String> = normal_forms
        .iter()
        .filter(|word| !is_rank3_normal_form(word).unwrap_or(false))
        .map(|word| format_word(word, 3))
        .collect();
    let counts_agree = normal_forms.len() == oracle_count;
    let pass = counts_agree && family_mismatches.is_empty();

    let rendered: Vec<String> = normal_forms.iter().map(|w| format_word(w, 3)).collect();
    let payload = json!({
        "degree": options.degree,
        "normal_form_count": normal_forms.len(),
        "oracle_class_count": oracle_count,
        "counts_agree": counts_agree,
        "family_mismatches": family_mismatches,
        "normal_forms": rendered,
    });

    let mut text = format!(
        "degree {}: {} irreducible words, oracle counts {} classes ({})\n",
        options.degree,
        normal_forms.len(),
        oracle_count,
        if counts_agree { "agree" } else { "MISMATCH" }
    );
    for word in &family_mismatches {
        text.push_str(&format!("irreducible word {word} outside both families\n"));
    }
    text.push_str(&rendered.join("\n"));
    if !rendered.is_empty() {
        text.push('\n');
    }

    let report = Report::new(
        "normal-forms",
        inputs,
        payload,
        if pass { "pass" } else { "fail" },
        started,
    );
    report.print(options.format, &text);
    Ok(if pass { exit::OK } else { exit::FAIL })
}
