use std::time::Instant;

use serde_json::json;
use shirshov::rewriting::format_rule;
use shirshov::{complete, CompletionLimits, CompletionStatus};

use crate::commands::exit;
use crate::input::load_presentation;
use crate::report::{OutputFormat, Report};

pub struct Options {
    pub source: String,
    pub limits: CompletionLimits,
    pub format: OutputFormat,
}

pub fn run(options: Options) -> Result<u8, String> {
    let started = Instant::now();
    let presentation = load_presentation(&options.source)?;
    let result = complete(&presentation, &options.limits);
    let alphabet = presentation.alphabet();

    let rules: Vec<String> = result
        .system
        .rules()
        .iter()
        .map(|r| format_rule(r, alphabet))
        .collect();
    let inputs = json!({
        "presentation": options.source,
        "degree_bound": options.limits.max_degree,
        "max_rules": options.limits.max_rules,
        "max_pairs": options.limits.max_pairs,
    });
    let payload = json!({
        "alphabet": alphabet,
        "rule_count": rules.len(),
        "rules": rules,
        "stats": {
            "pairs_examined": result.stats.pairs_examined,
            "rules_added": result.stats.rules_added,
            "max_lhs_degree": result.stats.max_lhs_degree,
            "pairs_over_degree": result.stats.pairs_over_degree,
        },
    });

    // The text rendering doubles as a rules file: header, comments, rules.
    let mut text = format!("alphabet {alphabet}\n");
    text.push_str(&format!("# status: {}\n", result.status));
    text.push_str(&format!(
        "# pairs examined: {}, rules added: {}, max lhs degree: {}, pairs over degree: {}\n",
        result.stats.pairs_examined,
        result.stats.rules_added,
        result.stats.max_lhs_degree,
        result.stats.pairs_over_degree
    ));
    for rule in &rules {
        text.push_str(rule);
        text.push('\n');
    }

    let report = Report::new(
        "complete",
        inputs,
        payload,
        result.status.as_str(),
        started,
    );
    report.print(options.format, &text);
    Ok(if result.status == CompletionStatus::Complete {
        exit::OK
    } else {
        exit::BUDGET
    })
}
