use std::time::Instant;

use serde_json::json;
use shirshov::rewriting::format_rule;
use shirshov::words::{format_word, parse_word};

use crate::commands::exit;
use crate::input::load_system;
use crate::report::{OutputFormat, Report};

pub struct Options {
    pub source: String,
    pub word: String,
    pub trace: bool,
    pub alphabet: Option<u32>,
    pub format: OutputFormat,
}

pub fn run(options: Options) -> Result<u8, String> {
    let started = Instant::now();
    let system = load_system(&options.source, options.alphabet)?;
    let alphabet = system.alphabet();
    let word = parse_word(&options.word, alphabet).map_err(|e| e.to_string())?;
    let (normal_form, trace) = system.reduce_traced(&word);

    let steps: Vec<serde_json::Value> = trace
        .steps
        .iter()
        .map(|step| {
            json!({
                "position": step.position,
                "rule": format_rule(&system.rules()[step.rule], alphabet),
                "word_after": format_word(&step.word_after, alphabet),
            })
        })
        .collect();
    let inputs = json!({
        "system": options.source,
        "word": options.word,
        "trace": options.trace,
    });
    let mut payload = json!({
        "alphabet": alphabet,
        "word": format_word(&word, alphabet),
        "normal_form": format_word(&normal_form, alphabet),
        "step_count": steps.len(),
    });
    if options.trace {
        payload["steps"] = serde_json::Value::Array(steps.clone());
    }

    let mut text = String::new();
    if options.trace {
        for (index, step) in steps.iter().enumerate() {
            text.push_str(&format!(
                "step {}: position {}, {}  =>  {}\n",
                index + 1,
                step["position"],
                step["rule"].as_str().unwrap_or_default(),
                step["word_after"].as_str().unwrap_or_default(),
            ));
        }
    }
    text.push_str(&format!(
        "normal form: {}\n",
        format_word(&normal_form, alphabet)
    ));

    let report = Report::new("reduce", inputs, payload, "ok", started);
    report.print(options.format, &text);
    Ok(exit::OK)
}
