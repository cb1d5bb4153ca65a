//! Command-line front end for the shirshov toolkit.
//!
//! Every command prints a single structured JSON report on stdout (or a
//! human-readable rendering with `--format text`) and exits with 0 on
//! success/PASS, 1 on usage or parse errors, 2 on verification failure,
//! and 3 when a resource limit or oracle budget cut the run short.

mod commands;
mod golden;
mod input;
mod report;

use std::collections::HashMap;
use std::process::ExitCode;

use commands::{complete, normal_forms, oracle, reduce, tableau, verify_thm1, verify_thm2};
use report::OutputFormat;
use shirshov::oracle::OracleBudget;
use shirshov::CompletionLimits;

const USAGE: &str = "usage: shirshov <command> [options]

commands:
  complete <presentation> [--degree-bound N] [--max-rules N] [--max-pairs N]
      Run completion; print the rules, status and stats.
  reduce <system> <word> [--trace] [--n N]
      Normalize a word under a rules file, a presentation (relations
      oriented by deglex) or a built-in presentation.
  verify-thm1
      Check completion of knuth:3 against the recorded 11-rule basis and
      its 27 ambiguity superpositions.
  verify-thm2 [--n N] [--max-i I] [--degree-bound D]
      Verify the rank >= 4 witness facts and the bounded completion rules
      (defaults: --n 4 --max-i 3 --degree-bound 9).
  normal-forms --degree D [--n 3]
      Enumerate rank-3 irreducible words of one degree and compare them
      with the two normal-form families and the oracle class count.
  tableau <word> [--n N]
      Print the Schensted tableau, its standard form and the decreasing
      statistic.
  oracle class <presentation> <word>
  oracle equal <presentation> <word> <word>
  oracle min <presentation> <word>
  oracle prefix <presentation> <word> <prefix>
      Brute-force congruence queries ([--max-class-size N]
      [--max-expansions N] adjust the budget).

Presentations are files or the built-ins knuth:N and chinese:N.
Every command accepts --format structured|text (default structured).";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match dispatch(&args) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(commands::exit::USAGE)
        }
    }
}

fn dispatch(args: &[String]) -> Result<u8, String> {
    let Some(command) = args.first() else {
        println!("{USAGE}");
        return Ok(commands::exit::USAGE);
    };
    let rest = &args[1..];
    match command.as_str() {
        "complete" => {
            let parsed = Parsed::parse(
                rest,
                &[],
                &["--degree-bound", "--max-rules", "--max-pairs", "--format"],
            )?;
            let source = parsed.one_positional("presentation")?;
            complete::run(complete::Options {
                source,
                limits: CompletionLimits {
                    max_degree: positive(parsed.numeric("--degree-bound")?, "--degree-bound")?,
                    max_rules: positive(parsed.numeric("--max-rules")?, "--max-rules")?,
                    max_pairs: positive(parsed.numeric("--max-pairs")?, "--max-pairs")?,
                },
                format: parsed.format()?,
            })
        }
        "reduce" => {
            let parsed = Parsed::parse(rest, &["--trace"], &["--n", "--format"])?;
            let (source, word) = parsed.two_positionals("system", "word")?;
            reduce::run(reduce::Options {
                source,
                word,
                trace: parsed.boolean("--trace"),
                alphabet: parsed.numeric::<u32>("--n")?,
                format: parsed.format()?,
            })
        }
        "verify-thm1" => {
            let parsed = Parsed::parse(rest, &[], &["--format"])?;
            parsed.no_positionals()?;
            verify_thm1::run(parsed.format()?)
        }
        "verify-thm2" => {
            let parsed =
                Parsed::parse(rest, &[], &["--n", "--max-i", "--degree-bound", "--format"])?;
            parsed.no_positionals()?;
            verify_thm2::run(verify_thm2::Options {
                n: parsed.numeric("--n")?.unwrap_or(4),
                max_i: positive(parsed.numeric("--max-i")?, "--max-i")?.unwrap_or(3),
                degree_bound: positive(parsed.numeric("--degree-bound")?, "--degree-bound")?
                    .unwrap_or(9),
                format: parsed.format()?,
            })
        }
        "normal-forms" => {
            let parsed = Parsed::parse(rest, &[], &["--n", "--degree", "--format"])?;
            parsed.no_positionals()?;
            let degree = parsed
                .numeric("--degree")?
                .ok_or_else(|| "normal-forms requires --degree".to_string())?;
            normal_forms::run(normal_forms::Options {
                n: parsed.numeric("--n")?.unwrap_or(3),
                degree,
                format: parsed.format()?,
            })
        }
        "tableau" => {
            let parsed = Parsed::parse(rest, &[], &["--n", "--format"])?;
            let word = parsed.one_positional("word")?;
            tableau::run(tableau::Options {
                word,
                alphabet: parsed.numeric("--n")?.unwrap_or(9),
                format: parsed.format()?,
            })
        }
        "oracle" => {
            let Some(sub) = rest.first() else {
                return Err("oracle requires a subcommand: class, equal, min or prefix".into());
            };
            let parsed = Parsed::parse(
                &rest[1..],
                &[],
                &["--max-class-size", "--max-expansions", "--format"],
            )?;
            let mut budget = OracleBudget::default();
            if let Some(limit) = parsed.numeric("--max-class-size")? {
                budget.max_class_size = limit;
            }
            if let Some(limit) = parsed.numeric("--max-expansions")? {
                budget.max_expansions = limit;
            }
            let (source, query) = match sub.as_str() {
                "class" => {
                    let (source, word) = parsed.two_positionals("presentation", "word")?;
                    (source, oracle::Query::Class { word })
                }
                "equal" => {
                    let (source, left, right) =
                        parsed.three_positionals("presentation", "word", "word")?;
                    (source, oracle::Query::Equal { left, right })
                }
                "min" => {
                    let (source, word) = parsed.two_positionals("presentation", "word")?;
                    (source, oracle::Query::Min { word })
                }
                "prefix" => {
                    let (source, word, prefix) =
                        parsed.three_positionals("presentation", "word", "prefix")?;
                    (source, oracle::Query::Prefix { word, prefix })
                }
                other => {
                    return Err(format!(
                        "unknown oracle subcommand {other:?} (expected class, equal, min or prefix)"
                    ))
                }
            };
            oracle::run(oracle::Options {
                source,
                query,
                budget,
                format: parsed.format()?,
            })
        }
        "help" | "--help" | "-h" => {
            println!("{USAGE}");
            Ok(commands::exit::OK)
        }
        other => Err(format!("unknown command {other:?}; try `shirshov help`")),
    }
}

fn positive(value: Option<usize>, flag: &str) -> Result<Option<usize>, String> {
    match value {
        Some(0) => Err(format!("flag {flag} must be positive")),
        other => Ok(other),
    }
}

/// Minimal argument splitter: boolean flags, `--key value` / `--key=value`
/// pairs, and positionals, with unknown flags rejected.
struct Parsed {
    positionals: Vec<String>,
    values: HashMap<String, String>,
    booleans: Vec<String>,
}

impl Parsed {
    fn parse(
        args: &[String],
        boolean_flags: &[&str],
        value_flags: &[&str],
    ) -> Result<Parsed, String> {
        let mut parsed = Parsed {
            positionals: Vec::new(),
            values: HashMap::new(),
            booleans: Vec::new(),
        };
        let mut iter = args.iter();
        while let Some(arg) = iter.next() {
            if arg.starts_with("--") {
                let (name, inline_value) = match arg.split_once('=') {
                    Some((name, value)) => (name.to_string(), Some(value.to_string())),
                    None => (arg.clone(), None),
                };
                if boolean_flags.contains(&name.as_str()) {
                    if inline_value.is_some() {
                        return Err(format!("flag {name} takes no value"));
                    }
                    parsed.booleans.push(name);
                } else if value_flags.contains(&name.as_str()) {
                    let value = match inline_value {
                        Some(value) => value,
                        None => iter
                            .next()
                            .ok_or_else(|| format!("flag {name} needs a value"))?
                            .clone(),
                    };
                    parsed.values.insert(name, value);
                } else {
                    return Err(format!("unknown flag {name}"));
                }
            } else {
                parsed.positionals.push(arg.clone());
            }
        }
        Ok(parsed)
    }

    fn boolean(&self, flag: &str) -> bool {
        self.booleans.iter().any(|b| b == flag)
    }

    fn numeric<T: std::str::FromStr>(&self, flag: &str) -> Result<Option<T>, String> {
        match self.values.get(flag) {
            Some(text) => text
                .parse()
                .map(Some)
                .map_err(|_| format!("flag {flag} has malformed value {text:?}")),
            None => Ok(None),
        }
    }

    fn format(&self) -> Result<OutputFormat, String> {
        match self.values.get("--format") {
            Some(text) => OutputFormat::parse(text),
            None => Ok(OutputFormat::Structured),
        }
    }

    fn no_positionals(&self) -> Result<(), String> {
        if self.positionals.is_empty() {
            Ok(())
        } else {
            Err(format!("unexpected argument {:?}", self.positionals[0]))
        }
    }

    fn one_positional(&self, name: &str) -> Result<String, String> {
        match self.positionals.as_slice() {
            [one] => Ok(one.clone()),
            _ => Err(format!("expected exactly one argument: <{name}>")),
        }
    }

    fn two_positionals(&self, first: &str, second: &str) -> Result<(String, String), String> {
        match self.positionals.as_slice() {
            [a, b] => Ok((a.clone(), b.clone())),
            _ => Err(format!("expected two arguments: <{first}> <{second}>")),
        }
    }

    fn three_positionals(
        &self,
        first: &str,
        second: &str,
        third: &str,
    ) -> Result<(String, String, String), String> {
        match self.positionals.as_slice() {
            [a, b, c] => Ok((a.clone(), b.clone(), c.clone())),
            _ => Err(format!(
                "expected three arguments: <{first}> <{second}> <{third}>"
            )),
        }
    }
}
