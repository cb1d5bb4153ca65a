use std::time::Instant;

use serde_json::json;
use shirshov::oracle::{
    class_prefix_check, congruence_class, equal_in_monoid, minimal_word, OracleBudget,
    OracleError,
};
use shirshov::words::{format_word, parse_word};

use crate::commands::{exit, words_as_strings};
use crate::input::load_presentation;
use crate::report::{OutputFormat, Report};

pub enum Query {
    Class { word: String },
    Equal { left: String, right: String },
    Min { word: String },
    Prefix { word: String, prefix: String },
}

pub struct Options {
    pub source: String,
    pub query: Query,
    pub budget: OracleBudget,
    pub format: OutputFormat,
}

pub fn run(options: Options) -> Result<u8, String> {
    let started = Instant::now();
    let presentation = load_presentation(&options.source)?;
    let alphabet = presentation.alphabet();
    let parse = |text: &str| parse_word(text, alphabet).map_err(|e| e.to_string());

    let (subcommand, inputs, outcome) = match &options.query {
        Query::Class { word } => {
            let w = parse(word)?;
            let inputs = json!({ "presentation": options.source, "word": word });
            let outcome = congruence_class(&presentation, &w, &options.budget).map(|class| {
                let members = words_as_strings(class.members().iter().cloned(), alphabet);
                let min = format_word(class.min(), alphabet);
                let text = format!(
                    "class of {}: {} members, min {}\n{}\n",
                    format_word(&w, alphabet),
                    class.len(),
                    min,
                    members.join("\n")
                );
                (
                    json!({
                        "class_size": class.len(),
                        "min": min,
                        "members": members,
                    }),
                    text,
                )
            });
            ("oracle class", inputs, outcome)
        }
        Query::Equal { left, right } => {
            let lw = parse(left)?;
            let rw = parse(right)?;
            let inputs =
                json!({ "presentation": options.source, "left": left, "right": right });
            let outcome =
                equal_in_monoid(&presentation, &lw, &rw, &options.budget).map(|equal| {
                    (
                        json!({ "equal": equal }),
                        format!("equal in monoid: {equal}\n"),
                    )
                });
            ("oracle equal", inputs, outcome)
        }
        Query::Min { word } => {
            let w = parse(word)?;
            let inputs = json!({ "presentation": options.source, "word": word });
            let outcome = minimal_word(&presentation, &w, &options.budget).map(|min| {
                let min = format_word(&min, alphabet);
                (json!({ "minimal": min.clone() }), format!("minimal word: {min}\n"))
            });
            ("oracle min", inputs, outcome)
        }
        Query::Prefix { word, prefix } => {
            let w = parse(word)?;
            let p = parse(prefix)?;
            let inputs =
                json!({ "presentation": options.source, "word": word, "prefix": prefix });
            let outcome =
                class_prefix_check(&presentation, &w, &p, &options.budget).map(|found| {
                    (
                        json!({ "has_member_with_prefix": found }),
                        format!("class member with that prefix: {found}\n"),
                    )
                });
            ("oracle prefix", inputs, outcome)
        }
    };

    match outcome {
        Ok((payload, text)) => {
            let report = Report::new(subcommand, inputs, payload, "ok", started);
            report.print(options.format, &text);
            Ok(exit::OK)
        }
        Err(err @ (OracleError::ClassTooLarge { .. }
        | OracleError::ExpansionBudgetExceeded { .. }
        | OracleError::DegreeTooLarge { .. })) => {
            let payload = json!({ "error": err.to_string() });
            let report = Report::new(subcommand, inputs, payload, "budget_exceeded", started);
            report.print(options.format, &format!("{err}\n"));
            Ok(exit::BUDGET)
        }
    }
}
