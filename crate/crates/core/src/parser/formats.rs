//! Scenario and event-trace files.
//!
//! Both formats are line oriented. `#` starts a comment that runs to the end
//! of the line and blank lines are ignored.
//!
//! ```text
//! # scenario
//! trigger_duration 2
//! layer birds 2 4
//!
//! # trace
//! jump 3
//! jump 5
//! ```

use std::collections::HashSet;

use super::combinators::*;
use super::ParseError;
use crate::calculus::inject;
use crate::pipeline::{EventTrace, Layer, ModelError, Scenario};
use crate::Time;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Directive {
    TriggerDuration(u64),
    Layer(Layer),
    Jump(Time),
}

/// A directive together with the byte offset of its first character.
type Located = (usize, Directive);

fn comment() -> Parser<()> {
    p_map(
        p_right(p_literal("#"), p_many(p_satisfy(|c| c != '\n'))),
        |_| (),
    )
}

fn end_of_line() -> Parser<()> {
    let newline = p_map(
        p_right(p_optional(p_literal("\r")), p_literal("\n")),
        |_| (),
    );
    p_expect(p_choice(newline, p_eof()), "end of line")
}

/// Trailing blanks, an optional comment and the line terminator.
fn line_rest() -> Parser<()> {
    p_right(p_blanks(), p_right(p_optional(comment()), end_of_line()))
}

/// Keyword-dispatched directive: an identifier selects the parser for the
/// rest of the line from `table`.
fn directive(table: Vec<(&'static str, Parser<Directive>)>) -> Parser<Located> {
    p_and_then(p_position(), move |at: usize| {
        let table = table.clone();
        p_and_then(p_identifier(), move |keyword: String| {
            match table.iter().find(|(name, _)| *name == keyword) {
                Some((_, body)) => p_map(body.clone(), move |d| (at, d)),
                None => inject(ParseOutcome::Failure {
                    message: format!("unknown directive `{keyword}`"),
                    at,
                }),
            }
        })
    })
}

fn trigger_body() -> Parser<Directive> {
    p_map(p_right(p_blanks1(), p_uint()), Directive::TriggerDuration)
}

fn layer_body() -> Parser<Directive> {
    let name = p_right(p_blanks1(), p_identifier());
    let number = || p_right(p_blanks1(), p_uint());
    let (period, frames) = (number(), number());
    p_and_then(name, move |name: String| {
        let frames = frames.clone();
        p_and_then(period.clone(), move |period: u64| {
            let name = name.clone();
            p_map(frames.clone(), move |frames: u64| {
                Directive::Layer(Layer::new(name.clone(), period, frames))
            })
        })
    })
}

fn jump_body() -> Parser<Directive> {
    p_map(p_right(p_blanks1(), p_uint()), Directive::Jump)
}

/// One line: blank, comment-only, or a single directive.
fn line(directive: Parser<Located>) -> Parser<Option<Located>> {
    let blank = p_map(line_rest(), |_| None);
    let filled = p_left(p_map(directive, Some), line_rest());
    p_right(p_not_eof(), p_right(p_blanks(), p_choice(blank, filled)))
}

/// Every line up to the end of input. If a line fails, its failure is the
/// parse result.
fn file(directive: Parser<Located>) -> Parser<Vec<Located>> {
    let one = line(directive);
    let lines = p_map(p_many(one.clone()), |ls: Vec<Option<Located>>| {
        ls.into_iter().flatten().collect::<Vec<_>>()
    });
    p_left(lines, p_choice(p_eof(), p_map(one, |_| ())))
}

fn parse_directives(
    text: &str,
    table: Vec<(&'static str, Parser<Directive>)>,
) -> Result<Vec<Located>, ParseError> {
    match parse_with(&file(directive(table)), text).0 {
        ParseOutcome::Success(ds) => Ok(ds),
        ParseOutcome::Failure { message, at } => Err(ParseError::new(text, at, message)),
    }
}

pub fn parse_trace(text: &str) -> Result<EventTrace, ParseError> {
    let directives = parse_directives(text, vec![("jump", jump_body())])?;
    let mut ticks: Vec<Time> = Vec::with_capacity(directives.len());
    for (at, d) in directives {
        let Directive::Jump(t) = d else {
            unreachable!("trace grammar only yields jumps")
        };
        if ticks.last().is_some_and(|&prev| t <= prev) {
            return Err(ParseError::new(
                text,
                at,
                ModelError::NonIncreasingTick(t).to_string(),
            ));
        }
        ticks.push(t);
    }
    EventTrace::new(ticks).map_err(|e| ParseError::new(text, text.len(), e.to_string()))
}

pub fn parse_scenario(text: &str) -> Result<Scenario, ParseError> {
    let directives = parse_directives(
        text,
        vec![
            ("trigger_duration", trigger_body()),
            ("layer", layer_body()),
        ],
    )?;
    let mut duration = None;
    let mut layers = Vec::new();
    let mut names = HashSet::new();
    for (at, d) in directives {
        let fail = |message: String| Err(ParseError::new(text, at, message));
        match d {
            Directive::TriggerDuration(_) if duration.is_some() => {
                return fail("duplicate trigger_duration".to_string());
            }
            Directive::TriggerDuration(0) => {
                return fail(ModelError::ZeroTriggerDuration.to_string());
            }
            Directive::TriggerDuration(n) => duration = Some(n),
            Directive::Layer(layer) => {
                let error = if !names.insert(layer.name.clone()) {
                    Some(ModelError::DuplicateLayerName(layer.name.clone()))
                } else if layer.period == 0 {
                    Some(ModelError::ZeroPeriod(layer.name.clone()))
                } else if layer.frames == 0 {
                    Some(ModelError::ZeroFrames(layer.name.clone()))
                } else {
                    None
                };
                if let Some(e) = error {
                    return fail(e.to_string());
                }
                layers.push(layer);
            }
            Directive::Jump(_) => unreachable!("scenario grammar never yields jumps"),
        }
    }
    let Some(duration) = duration else {
        return Err(ParseError::new(
            text,
            text.len(),
            "missing trigger_duration".to_string(),
        ));
    };
    Scenario::new(duration, layers).map_err(|e| ParseError::new(text, text.len(), e.to_string()))
}

pub fn serialize_scenario(sc: &Scenario) -> String {
    let mut out = format!("trigger_duration {}\n", sc.trigger_duration());
    for layer in sc.layers() {
        out.push_str(&format!(
            "layer {} {} {}\n",
            layer.name, layer.period, layer.frames
        ));
    }
    out
}

pub fn serialize_trace(trace: &EventTrace) -> String {
    trace
        .jump_ticks()
        .iter()
        .map(|t| format!("jump {t}\n"))
        .collect()
}
