use std::time::Instant;

use serde_json::json;
use shirshov::plactic::{column_factors, tableau_of_word};
use shirshov::words::{format_word, max_decreasing_subsequence, parse_word, Word};

use crate::commands::exit;
use crate::report::{OutputFormat, Report};

pub struct Options {
    pub word: String,
    pub alphabet: u32,
    pub format: OutputFormat,
}

pub fn run(options: Options) -> Result<u8, String> {
    let started = Instant::now();
    let word = parse_word(&options.word, options.alphabet).map_err(|e| e.to_string())?;
    let tableau = tableau_of_word(&word);
    let factors = column_factors(&tableau);

    let rows: Vec<String> = tableau
        .rows()
        .iter()
        .map(|row| {
            format_word(
                &Word::from_letters(row.clone()),
                options.alphabet,
            )
        })
        .collect();
    let factor_strings: Vec<String> = factors
        .iter()
        .map(|f| format_word(f, options.alphabet))
        .collect();
    let standard_form: String = factor_strings
        .iter()
        .map(|f| format!("({f})"))
        .collect::<Vec<_>>()
        .join("");
    let statistic = max_decreasing_subsequence(&word);

    let inputs = json!({ "word": options.word, "n": options.alphabet });
    let payload = json!({
        "word": format_word(&word, options.alphabet),
        "rows": rows,
        "column_factors": factor_strings,
        "standard_form": standard_form,
        "row_count": tableau.row_count(),
        "cell_count": tableau.cell_count(),
        "max_decreasing_subsequence": statistic,
    });

    let mut text = String::new();
    if rows.is_empty() {
        text.push_str("empty tableau\n");
    } else {
        for row in &rows {
            text.push_str(row);
            text.push('\n');
        }
    }
    text.push_str(&format!("standard form: {standard_form}\n"));
    text.push_str(&format!("max decreasing subsequence: {statistic}\n"));

    let report = Report::new("tableau", inputs, payload, "ok", started);
    report.print(options.format, &text);
    Ok(exit::OK)
}
