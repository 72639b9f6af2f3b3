//! Parser combinators over the state-threading calculus, and the scenario /
//! event-trace file formats built from them.

pub mod combinators;
pub mod formats;

use thiserror::Error;

pub use combinators::{
    p_and_then, p_attempt, p_blanks, p_blanks1, p_choice, p_eof, p_expect, p_fail, p_identifier,
    p_left, p_literal, p_many, p_many1, p_map, p_not_eof, p_optional, p_position, p_right,
    p_satisfy, p_succeed, p_uint, parse_with, ParseOutcome, Parser, ParserState,
};
pub use formats::{parse_scenario, parse_trace, serialize_scenario, serialize_trace};

/// A located parse or validation failure.
///
/// `offset` is the canonical byte position; `line` (1-based) is derived from
/// it for display.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at line {line}, offset {offset}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(input: &str, offset: usize, message: impl Into<String>) -> Self {
        let offset = offset.min(input.len());
        let line = input.as_bytes()[..offset]
            .iter()
            .filter(|&&b| b == b'\n')
            .count()
            + 1;
        ParseError {
            line,
            offset,
            message: message.into(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_numbers_follow_offset() {
        let text = "a\nbb\n\nc";
        assert_eq!(ParseError::new(text, 0, "x").line, 1);
        assert_eq!(ParseError::new(text, 2, "x").line, 2);
        assert_eq!(ParseError::new(text, 6, "x").line, 4);
        assert_eq!(ParseError::new(text, 99, "x").offset, text.len());
    }
}
