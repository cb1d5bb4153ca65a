//! Input resolution: presentations and rewrite systems come from files or
//! from the built-in names `knuth:N` and `chinese:N`, so the reproduction
//! commands need no files on disk.

use std::fs;

use shirshov::plactic::{chinese_presentation, knuth_presentation};
use shirshov::rewriting::{parse_rules, Rule, RewriteSystem};
use shirshov::Presentation;

/// Loads a presentation from a built-in name or a presentation file.
pub fn load_presentation(source: &str) -> Result<Presentation, String> {
    if let Some(n) = builtin_rank(source, "knuth:")? {
        return knuth_presentation(n).map_err(|e| format!("{source}: {e}"));
    }
    if let Some(n) = builtin_rank(source, "chinese:")? {
        return chinese_presentation(n).map_err(|e| format!("{source}: {e}"));
    }
    let text = fs::read_to_string(source).map_err(|e| format!("{source}: {e}"))?;
    Presentation::parse(&text).map_err(|e| format!("{source}: {e}"))
}

fn builtin_rank(source: &str, prefix: &str) -> Result<Option<u32>, String> {
    match source.strip_prefix(prefix) {
        Some(rest) => {
            let n = rest
                .parse()
                .map_err(|_| format!("{source}: malformed rank {rest:?}"))?;
            Ok(Some(n))
        }
        None => Ok(None),
    }
}

/// Loads a rewrite system for the reduce command. A built-in name or a
/// presentation file contributes its relations oriented by deglex (no
/// completion is run); a rules file is taken as-is. File kinds are told
/// apart by their line shape: `LHS -> RHS` versus `WORD = WORD`.
pub fn load_system(source: &str, alphabet_flag: Option<u32>) -> Result<RewriteSystem, String> {
    if source.starts_with("knuth:") || source.starts_with("chinese:") {
        let presentation = load_presentation(source)?;
        return system_of(presentation.alphabet(), presentation.oriented_rules());
    }
    let text = fs::read_to_string(source).map_err(|e| format!("{source}: {e}"))?;
    if looks_like_rules(&text) {
        let (alphabet, rules) =
            parse_rules(&text, alphabet_flag).map_err(|e| format!("{source}: {e}"))?;
        system_of(alphabet, rules)
    } else {
        let presentation = Presentation::parse(&text).map_err(|e| format!("{source}: {e}"))?;
        system_of(presentation.alphabet(), presentation.oriented_rules())
    }
}

fn looks_like_rules(text: &str) -> bool {
    text.lines()
        .map(|line| match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        })
        .any(|line| line.contains("->"))
}

fn system_of(alphabet: u32, rules: Vec<Rule>) -> Result<RewriteSystem, String> {
    RewriteSystem::new(alphabet, rules).map_err(|e| e.to_string())
}
