//! Text formats: group configs and words.

mod config;
mod word;

pub use config::{format_config, load_config, parse_config};
pub use word::{format_word, parse_reduced, parse_word};
