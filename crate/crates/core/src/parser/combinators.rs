//! Parser combinators as actions over a parse cursor.
//!
//! A [`Parser<A>`] is an [`Action`] whose state is a [`ParserState`] and whose
//! value is a [`ParseOutcome<A>`]. Failure is an ordinary value, so the plain
//! state-threading calculus is used unchanged: every combinator here is
//! written with `bind`, `inject`, `fmap`, `get`, `put` and `run`.
//!
//! A parser that fails leaves the cursor where it started.

use std::fmt;
use std::sync::Arc;

use crate::calculus::{bind, fmap, get, inject, put, run, Action};

/// Input text plus a byte offset into it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParserState {
    input: Arc<str>,
    offset: usize,
}

impl ParserState {
    pub fn new(input: &str) -> Self {
        ParserState {
            input: Arc::from(input),
            offset: 0,
        }
    }

    /// # Panics
    ///
    /// If `offset` is past the end of `input` or not on a char boundary.
    pub fn at(input: &str, offset: usize) -> Self {
        assert!(
            input.is_char_boundary(offset),
            "offset {offset} is not a char boundary"
        );
        ParserState {
            input: Arc::from(input),
            offset,
        }
    }

    pub fn input(&self) -> &str {
        &self.input
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn remaining(&self) -> &str {
        &self.input[self.offset..]
    }

    pub fn peek(&self) -> Option<char> {
        self.remaining().chars().next()
    }

    pub fn at_end(&self) -> bool {
        self.offset == self.input.len()
    }

    /// Moves the cursor forward by `bytes`.
    pub fn advanced(&self, bytes: usize) -> Self {
        let offset = self.offset + bytes;
        debug_assert!(self.input.is_char_boundary(offset));
        ParserState {
            input: Arc::clone(&self.input),
            offset,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ParseOutcome<A> {
    Success(A),
    Failure { message: String, at: usize },
}

impl<A> ParseOutcome<A> {
    pub fn is_success(&self) -> bool {
        matches!(self, ParseOutcome::Success(_))
    }

    pub fn map<B>(self, f: impl FnOnce(A) -> B) -> ParseOutcome<B> {
        match self {
            ParseOutcome::Success(a) => ParseOutcome::Success(f(a)),
            ParseOutcome::Failure { message, at } => ParseOutcome::Failure { message, at },
        }
    }

    pub fn success(self) -> Option<A> {
        match self {
            ParseOutcome::Success(a) => Some(a),
            ParseOutcome::Failure { .. } => None,
        }
    }
}

impl<A: fmt::Debug> fmt::Display for ParseOutcome<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseOutcome::Success(a) => write!(f, "success {a:?}"),
            ParseOutcome::Failure { message, at } => write!(f, "failure at {at}: {message}"),
        }
    }
}

pub type Parser<A> = Action<ParserState, ParseOutcome<A>>;

/// Values a parser can yield. Injection clones the value on every run.
pub trait ParseValue: Clone + Send + Sync + 'static {}
impl<T: Clone + Send + Sync + 'static> ParseValue for T {}

/// Always succeeds with `value`, consuming nothing.
pub fn p_succeed<A: ParseValue>(value: A) -> Parser<A> {
    inject(ParseOutcome::Success(value))
}

/// Fails with `message` at the current offset.
pub fn p_fail<A: ParseValue>(message: impl Into<String>) -> Parser<A> {
    let message = message.into();
    fmap(
        move |st: ParserState| ParseOutcome::Failure {
            message: message.clone(),
            at: st.offset(),
        },
        get(),
    )
}

/// The current byte offset.
pub fn p_position() -> Parser<usize> {
    fmap(|st: ParserState| ParseOutcome::Success(st.offset()), get())
}

/// Runs `p`; on failure puts the cursor back where `p` started.
pub fn p_attempt<A: ParseValue>(p: Parser<A>) -> Parser<A> {
    bind(
        move |start: ParserState| {
            bind(
                move |outcome: ParseOutcome<A>| match outcome {
                    ParseOutcome::Success(_) => inject(outcome),
                    failure => bind(move |()| inject(failure.clone()), put(start.clone())),
                },
                p.clone(),
            )
        },
        get(),
    )
}

/// Consumes one character satisfying `pred`.
pub fn p_satisfy(pred: impl Fn(char) -> bool + Send + Sync + 'static) -> Parser<char> {
    bind(
        move |st: ParserState| match st.peek() {
            None => inject(ParseOutcome::Failure {
                message: "unexpected end of input".to_string(),
                at: st.offset(),
            }),
            Some(c) if pred(c) => bind(
                move |()| inject(ParseOutcome::Success(c)),
                put(st.advanced(c.len_utf8())),
            ),
            Some(c) => inject(ParseOutcome::Failure {
                message: format!("unexpected character {c:?}"),
                at: st.offset(),
            }),
        },
        get(),
    )
}

/// Matches `word` exactly.
///
/// # Panics
///
/// If `word` is empty.
pub fn p_literal(word: &str) -> Parser<String> {
    assert!(!word.is_empty(), "p_literal needs a non-empty word");
    let word = word.to_string();
    bind(
        move |st: ParserState| {
            if st.remaining().starts_with(word.as_str()) {
                let matched = word.clone();
                bind(
                    move |()| inject(ParseOutcome::Success(matched.clone())),
                    put(st.advanced(word.len())),
                )
            } else {
                inject(ParseOutcome::Failure {
                    message: format!("expected `{word}`"),
                    at: st.offset(),
                })
            }
        },
        get(),
    )
}

/// Sequencing: runs `p`, then the parser `f` builds from its value.
pub fn p_and_then<A, B, F>(p: Parser<A>, f: F) -> Parser<B>
where
    A: ParseValue,
    B: ParseValue,
    F: Fn(A) -> Parser<B> + Send + Sync + 'static,
{
    p_attempt(bind(
        move |outcome: ParseOutcome<A>| match outcome {
            ParseOutcome::Success(a) => f(a),
            ParseOutcome::Failure { message, at } => inject(ParseOutcome::Failure { message, at }),
        },
        p,
    ))
}

/// Applies `f` to a successful value.
pub fn p_map<A, B, F>(p: Parser<A>, f: F) -> Parser<B>
where
    A: 'static,
    B: 'static,
    F: Fn(A) -> B + Send + Sync + 'static,
{
    fmap(move |outcome: ParseOutcome<A>| outcome.map(&f), p)
}

/// Runs `a` then `b`, keeping `b`'s value.
pub fn p_right<A: ParseValue, B: ParseValue>(a: Parser<A>, b: Parser<B>) -> Parser<B> {
    p_and_then(a, move |_| b.clone())
}

/// Runs `a` then `b`, keeping `a`'s value.
pub fn p_left<A: ParseValue, B: ParseValue>(a: Parser<A>, b: Parser<B>) -> Parser<A> {
    p_and_then(a, move |x: A| p_map(b.clone(), move |_| x.clone()))
}

/// Tries `a`; if it fails, restores the cursor and tries `b`. A failure of
/// both reports `b`'s failure.
pub fn p_choice<A: ParseValue>(a: Parser<A>, b: Parser<A>) -> Parser<A> {
    let b = p_attempt(b);
    bind(
        move |start: ParserState| {
            let b = b.clone();
            bind(
                move |outcome: ParseOutcome<A>| match outcome {
                    ParseOutcome::Success(_) => inject(outcome),
                    ParseOutcome::Failure { .. } => {
                        let b = b.clone();
                        bind(move |()| b.clone(), put(start.clone()))
                    }
                },
                a.clone(),
            )
        },
        get(),
    )
}

/// Zero or more repetitions of `p`. Fails only if `p` succeeds without
/// consuming input.
pub fn p_many<A: ParseValue>(p: Parser<A>) -> Parser<Vec<A>> {
    bind(
        move |start: ParserState| {
            let mut items = Vec::new();
            let mut cursor = start;
            loop {
                let out = run(&p, cursor.clone());
                match out.value {
                    ParseOutcome::Success(item) => {
                        if out.state.offset() <= cursor.offset() {
                            return inject(ParseOutcome::Failure {
                                message: "non-progressing parser".to_string(),
                                at: cursor.offset(),
                            });
                        }
                        items.push(item);
                        cursor = out.state;
                    }
                    ParseOutcome::Failure { .. } => break,
                }
            }
            bind(
                move |()| inject(ParseOutcome::Success(items.clone())),
                put(cursor),
            )
        },
        get(),
    )
}

/// One or more repetitions of `p`.
pub fn p_many1<A: ParseValue>(p: Parser<A>) -> Parser<Vec<A>> {
    let rest = p_many(p.clone());
    p_and_then(p, move |first: A| {
        p_map(rest.clone(), move |mut tail: Vec<A>| {
            tail.insert(0, first.clone());
            tail
        })
    })
}

/// `Some(value)` if `p` succeeds, `None` (consuming nothing) otherwise.
pub fn p_optional<A: ParseValue>(p: Parser<A>) -> Parser<Option<A>> {
    p_choice(p_map(p, Some), p_succeed(None))
}

/// Succeeds only at the end of input.
pub fn p_eof() -> Parser<()> {
    fmap(
        |st: ParserState| {
            if st.at_end() {
                ParseOutcome::Success(())
            } else {
                ParseOutcome::Failure {
                    message: "expected end of input".to_string(),
                    at: st.offset(),
                }
            }
        },
        get(),
    )
}

/// Succeeds, consuming nothing, unless at the end of input.
pub fn p_not_eof() -> Parser<()> {
    fmap(
        |st: ParserState| {
            if st.at_end() {
                ParseOutcome::Failure {
                    message: "unexpected end of input".to_string(),
                    at: st.offset(),
                }
            } else {
                ParseOutcome::Success(())
            }
        },
        get(),
    )
}

/// Replaces a failure's message with `expected <what>`, keeping its position.
pub fn p_expect<A: 'static>(p: Parser<A>, what: &str) -> Parser<A> {
    let message = format!("expected {what}");
    fmap(
        move |outcome: ParseOutcome<A>| match outcome {
            ParseOutcome::Failure { at, .. } => ParseOutcome::Failure {
                message: message.clone(),
                at,
            },
            success => success,
        },
        p,
    )
}

/// A decimal integer that fits in `u64`.
pub fn p_uint() -> Parser<u64> {
    let digits = p_expect(p_many1(p_satisfy(|c| c.is_ascii_digit())), "integer");
    p_and_then(p_position(), move |at: usize| {
        p_and_then(digits.clone(), move |ds: Vec<char>| {
            let text: String = ds.into_iter().collect();
            match text.parse::<u64>() {
                Ok(n) => p_succeed(n),
                Err(_) => inject(ParseOutcome::Failure {
                    message: format!("integer {text} out of range"),
                    at,
                }),
            }
        })
    })
}

/// `[A-Za-z][A-Za-z0-9_]*`
pub fn p_identifier() -> Parser<String> {
    let head = p_expect(p_satisfy(|c| c.is_ascii_alphabetic()), "identifier");
    let tail = p_many(p_satisfy(|c| c.is_ascii_alphanumeric() || c == '_'));
    p_and_then(head, move |first: char| {
        p_map(tail.clone(), move |rest: Vec<char>| {
            std::iter::once(first).chain(rest).collect::<String>()
        })
    })
}

/// Spaces and tabs, possibly none.
pub fn p_blanks() -> Parser<()> {
    p_map(p_many(p_satisfy(|c| c == ' ' || c == '\t')), |_| ())
}

/// At least one space or tab.
pub fn p_blanks1() -> Parser<()> {
    p_map(
        p_expect(p_many1(p_satisfy(|c| c == ' ' || c == '\t')), "whitespace"),
        |_| (),
    )
}

/// Runs `p` on the whole of `input`, returning the outcome and final cursor.
pub fn parse_with<A>(p: &Parser<A>, input: &str) -> (ParseOutcome<A>, ParserState) {
    run(p, ParserState::new(input)).into_tuple()
}
