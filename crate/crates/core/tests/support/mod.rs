//! Independent oracles and fuzz generators shared by the integration tests.
//!
//! Nothing here goes through the calculus: the law oracle evaluates the
//! affine samples with plain arithmetic and the reference simulator is a
//! mutable loop.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use statethread::calculus::ValueStatePair;
use statethread::laws::{Affine, Case, Linear, NestedSample, Observed, SampleAction};
use statethread::parser::{
    p_and_then, p_choice, p_identifier, p_literal, p_many, p_many1, p_map, p_right, p_satisfy,
    p_uint, Parser,
};
use statethread::pipeline::{EventTrace, Layer, Scenario};

fn affine(f: &Affine, x: i64, s: i64) -> (i64, i64) {
    (
        f.a.wrapping_mul(x)
            .wrapping_add(f.b.wrapping_mul(s))
            .wrapping_add(f.c),
        f.d.wrapping_mul(s)
            .wrapping_add(f.e.wrapping_mul(x))
            .wrapping_add(f.k),
    )
}

fn linear(p: &Linear, x: i64) -> i64 {
    p.scale.wrapping_mul(x).wrapping_add(p.offset)
}

fn sample_action(m: &SampleAction, s: i64) -> (i64, i64) {
    let (x, s1) = affine(&m.first, m.seed, s);
    affine(&m.second, x, s1)
}

fn nested(mmm: &NestedSample, s: i64) -> (i64, i64) {
    let (x, s1) = affine(&mmm.outer, mmm.seed, s);
    let (y, s2) = affine(&mmm.middle, x, s1);
    affine(&mmm.inner, x.wrapping_add(y), s2)
}

/// The value both sides of a law must produce under a lawful triple.
pub fn lawful_outcome(case: &Case) -> Observed {
    let (value, state) = match case {
        Case::LeftIdentity { f, x, s } => affine(f, *x, *s),
        Case::RightIdentity { m, s }
        | Case::FunctorIdentity { m, s }
        | Case::UnitNaturality { m, s } => sample_action(m, *s),
        Case::Associativity { f, g, m, s } => {
            let (x, s1) = sample_action(m, *s);
            let (y, s2) = affine(f, x, s1);
            affine(g, y, s2)
        }
        Case::FunctorComposition { g, h, m, s } => {
            let (x, s1) = sample_action(m, *s);
            (linear(h, linear(g, x)), s1)
        }
        Case::FmapCoherence { p, m, s } => {
            let (x, s1) = sample_action(m, *s);
            (linear(p, x), s1)
        }
        Case::BindCoherence { f, m, s } => {
            let (x, s1) = sample_action(m, *s);
            affine(f, x, s1)
        }
        Case::MultNaturality { mmm, s } => nested(mmm, *s),
        Case::Expansion { g, h, x, s } => {
            let (y, t) = affine(g, *x, *s);
            affine(h, y, t)
        }
    };
    ValueStatePair { value, state }
}

/// Straight-line simulator: one mutable `since`, one loop.
pub fn reference_simulate(sc: &Scenario, trace: &EventTrace, n_ticks: u64, dt: u64) -> Vec<String> {
    let jumps = trace.jump_ticks();
    let duration = sc.trigger_duration();
    let mut since: Option<u64> = None;
    let mut lines = Vec::new();
    for i in 0..n_ticks {
        let t = i * dt;
        if let Some(start) = since {
            if t - start >= duration {
                since = None;
            }
        }
        if since.is_none() && jumps.contains(&t) {
            since = Some(t);
        }
        let mut line = format!("t={t}");
        for layer in sc.layers() {
            line += &format!(" {}[{}]", layer.name, (t / layer.period) % layer.frames);
        }
        if let Some(start) = since {
            line += &format!(" +overlay[{}]", t - start);
        }
        lines.push(line);
    }
    lines
}

const NAME_POOL: &[&str] = &[
    "birds", "frogs", "owls", "deer", "fox", "Rabbit", "bee_2", "a", "Z9", "moth",
];

/// A scenario with at most 4 layers, period ≤ 5, frames ≤ 8.
pub fn random_scenario(rng: &mut ChaCha8Rng) -> Scenario {
    let count = rng.random_range(1..=4);
    let mut names: Vec<&str> = NAME_POOL.to_vec();
    names.shuffle(rng);
    let layers = names[..count]
        .iter()
        .map(|name| Layer::new(*name, rng.random_range(1..=5), rng.random_range(1..=8)))
        .collect();
    Scenario::new(rng.random_range(1..=10), layers).expect("generated scenario is valid")
}

/// Strictly increasing jump ticks below `horizon`.
pub fn random_trace(rng: &mut ChaCha8Rng, horizon: u64) -> EventTrace {
    let density = rng.random_range(0.0..0.4);
    let ticks = (0..horizon).filter(|_| rng.random_bool(density)).collect();
    EventTrace::new(ticks).expect("generated trace is increasing")
}

/// Small parsers covering each combinator family, for cursor checks.
pub fn probe_parsers() -> Vec<(&'static str, Parser<String>)> {
    let show = |p: Parser<Vec<char>>| p_map(p, |cs: Vec<char>| cs.into_iter().collect::<String>());
    vec![
        ("literal", p_literal("ab")),
        ("identifier", p_identifier()),
        ("uint", p_map(p_uint(), |n| n.to_string())),
        ("many", show(p_many(p_satisfy(|c| c == 'a')))),
        ("many1", show(p_many1(p_satisfy(|c| c.is_ascii_digit())))),
        ("choice", p_choice(p_literal("ab"), p_literal("ba"))),
        (
            "sequence",
            p_and_then(p_literal("a"), |_| p_right(p_literal("b"), p_literal("1"))),
        ),
    ]
}
