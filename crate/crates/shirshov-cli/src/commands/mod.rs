pub mod complete;
pub mod normal_forms;
pub mod oracle;
pub mod reduce;
pub mod tableau;
pub mod verify_thm1;
pub mod verify_thm2;

use shirshov::words::{format_word, Word};

/// Exit codes shared by every command.
pub mod exit {
    pub const OK: u8 = 0;
    pub const USAGE: u8 = 1;
    pub const FAIL: u8 = 2;
    pub const BUDGET: u8 = 3;
}

pub fn words_as_strings(words: impl IntoIterator<Item = Word>, alphabet: u32) -> Vec<String> {
    words
        .into_iter()
        .map(|w| format_word(&w, alphabet))
        .collect()
}
