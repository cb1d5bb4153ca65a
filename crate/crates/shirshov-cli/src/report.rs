//! The structured report every command emits: one JSON document on stdout,
//! or a human-readable rendering behind `--format text`.
//!
//! Reports are deterministic for deterministic commands; `elapsed_ms` is the
//! only field that varies between identical invocations.

use std::time::Instant;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Structured,
    Text,
}

impl OutputFormat {
    pub fn parse(text: &str) -> Result<OutputFormat, String> {
        match text {
            "structured" => Ok(OutputFormat::Structured),
            "text" => Ok(OutputFormat::Text),
            other => Err(format!(
                "unknown format {other:?} (expected `structured` or `text`)"
            )),
        }
    }
}

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: serde_json::Value,
    pub digest: String,
    pub payload: serde_json::Value,
    pub status: String,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn new(
        command: &str,
        inputs: serde_json::Value,
        payload: serde_json::Value,
        status: &str,
        started: Instant,
    ) -> Report {
        let digest = fnv1a_hex(&format!("{command}\n{inputs}"));
        Report {
            command: command.to_string(),
            inputs,
            digest,
            payload,
            status: status.to_string(),
            elapsed_ms: started.elapsed().as_millis(),
        }
    }

    /// Prints the report: the JSON document, or `text` when requested.
    pub fn print(&self, format: OutputFormat, text: &str) {
        match format {
            OutputFormat::Structured => {
                println!(
                    "{}",
                    serde_json::to_string_pretty(self).expect("reports always serialize")
                );
            }
            OutputFormat::Text => {
                print!("{text}");
                if !text.ends_with('\n') {
                    println!();
                }
            }
        }
    }
}

/// FNV-1a over the canonical input string; enough to spot input drift.
pub fn fnv1a_hex(text: &str) -> String {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in text.bytes() {
        hash ^= u64::from(byte);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{hash:016x}")
}
