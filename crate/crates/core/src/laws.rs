//! Executable checks of the monad / Kleisli-triple laws.
//!
//! Laws are stated point-free, but function equality is undecidable, so every
//! check here is extensional: it draws integer transfer functions, actions,
//! values and states from a seeded generator and compares the two sides of
//! the law under [`run`](crate::calculus::run) with exact integer equality.
//!
//! The operations under test are supplied through the [`Triple`] trait.
//! [`CoreTriple`] is the calculus from [`crate::calculus`]; [`mutants`] holds
//! deliberately broken triples the checks must reject.
//!
//! Generated transfer functions come from the affine family
//! `x ↦ λs.(a·x + b·s + c, d·s + e·x + k)` ([`Affine`]), and generated actions
//! are two affine steps bound onto an injected seed value ([`SampleAction`]).

use std::fmt;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::calculus::{self, Action, ValueStatePair};

/// Observable outcome of running an integer action.
pub type Observed = ValueStatePair<i64, i64>;

/// Range of the coefficients drawn for [`Affine`] and [`Linear`].
pub const COEFFICIENT_RANGE: RangeInclusive<i64> = -3..=3;

/// Upper bound on the counterexamples kept in a [`LawReport`].
pub const MAX_COUNTEREXAMPLES: usize = 10;

/// The injection / binding / mapping operations whose laws are checked.
///
/// The state type is fixed to `i64`. `join` is not part of the triple; the
/// default delegates to [`calculus::join`].
pub trait Triple: Clone + Send + Sync + 'static {
    fn inject<A>(&self, x: A) -> Action<i64, A>
    where
        A: Clone + Send + Sync + 'static;

    fn bind<A, B, F>(&self, f: F, m: Action<i64, A>) -> Action<i64, B>
    where
        A: 'static,
        B: 'static,
        F: Fn(A) -> Action<i64, B> + Send + Sync + 'static;

    fn fmap<A, B, F>(&self, f: F, m: Action<i64, A>) -> Action<i64, B>
    where
        A: 'static,
        B: 'static,
        F: Fn(A) -> B + Send + Sync + 'static;

    fn join<A: 'static>(&self, mm: Action<i64, Action<i64, A>>) -> Action<i64, A> {
        calculus::join(mm)
    }
}

/// The calculus itself.
#[derive(Debug, Clone, Copy, Default)]
pub struct CoreTriple;

impl Triple for CoreTriple {
    fn inject<A>(&self, x: A) -> Action<i64, A>
    where
        A: Clone + Send + Sync + 'static,
    {
        calculus::inject(x)
    }

    fn bind<A, B, F>(&self, f: F, m: Action<i64, A>) -> Action<i64, B>
    where
        A: 'static,
        B: 'static,
        F: Fn(A) -> Action<i64, B> + Send + Sync + 'static,
    {
        calculus::bind(f, m)
    }

    fn fmap<A, B, F>(&self, f: F, m: Action<i64, A>) -> Action<i64, B>
    where
        A: 'static,
        B: 'static,
        F: Fn(A) -> B + Send + Sync + 'static,
    {
        calculus::fmap(f, m)
    }
}

/// Broken triples used to show the checks have teeth.
pub mod mutants {
    use super::{CoreTriple, Triple};
    use crate::calculus::Action;

    /// `bind` that returns the continuation's value but keeps the state `m` left
    /// behind, discarding the continuation's post-state.
    #[derive(Debug, Clone, Copy, Default)]
    pub struct StateDroppingBind;

    /// `inject` that increments the state instead of passing it through.
    #[derive(Debug, Clone, Copy, Default)]
    pub struct StateBumpingInject;

    /// `bind` that applies the continuation's state change before `m`'s.
    #[derive(Debug, Clone, Copy, Default)]
    pub struct OrderSwappingBind;

    /// `fmap` that re-wraps the mapped value at the original state, dropping
    /// the post-state of `m`.
    #[derive(Debug, Clone, Copy, Default)]
    pub struct StateDroppingFmap;

    /// `fmap` that runs `m` at the successor of the incoming state.
    #[derive(Debug, Clone, Copy, Default)]
    pub struct PreIncrementFmap;

    macro_rules! core_inject {
        () => {
            fn inject<A>(&self, x: A) -> Action<i64, A>
            where
                A: Clone + Send + Sync + 'static,
            {
                CoreTriple.inject(x)
            }
        };
    }

    macro_rules! core_bind {
        () => {
            fn bind<A, B, F>(&self, f: F, m: Action<i64, A>) -> Action<i64, B>
            where
                A: 'static,
                B: 'static,
                F: Fn(A) -> Action<i64, B> + Send + Sync + 'static,
            {
                CoreTriple.bind(f, m)
            }
        };
    }

    macro_rules! core_fmap {
        () => {
            fn fmap<A, B, F>(&self, f: F, m: Action<i64, A>) -> Action<i64, B>
            where
                A: 'static,
                B: 'static,
                F: Fn(A) -> B + Send + Sync + 'static,
            {
                CoreTriple.fmap(f, m)
            }
        };
    }

    impl Triple for StateDroppingBind {
        core_inject!();
        core_fmap!();

        fn bind<A, B, F>(&self, f: F, m: Action<i64, A>) -> Action<i64, B>
        where
            A: 'static,
            B: 'static,
            F: Fn(A) -> Action<i64, B> + Send + Sync + 'static,
        {
            Action::new(move |s| {
                let (x, after_m) = m.run(s).into_tuple();
                let (y, _) = f(x).run(after_m).into_tuple();
                (y, after_m)
            })
        }
    }

    impl Triple for StateBumpingInject {
        core_bind!();
        core_fmap!();

        fn inject<A>(&self, x: A) -> Action<i64, A>
        where
            A: Clone + Send + Sync + 'static,
        {
            Action::new(move |s: i64| (x.clone(), s.wrapping_add(1)))
        }
    }

    impl Triple for OrderSwappingBind {
        core_inject!();
        core_fmap!();

        fn bind<A, B, F>(&self, f: F, m: Action<i64, A>) -> Action<i64, B>
        where
            A: 'static,
            B: 'static,
            F: Fn(A) -> Action<i64, B> + Send + Sync + 'static,
        {
            Action::new(move |s| {
                let (x, _) = m.run(s).into_tuple();
                let (y, after_f) = f(x).run(s).into_tuple();
                let (_, after_m) = m.run(after_f).into_tuple();
                (y, after_m)
            })
        }
    }

    impl Triple for StateDroppingFmap {
        core_inject!();
        core_bind!();

        fn fmap<A, B, F>(&self, f: F, m: Action<i64, A>) -> Action<i64, B>
        where
            A: 'static,
            B: 'static,
            F: Fn(A) -> B + Send + Sync + 'static,
        {
            Action::new(move |s| {
                let (x, _) = m.run(s).into_tuple();
                (f(x), s)
            })
        }
    }

    impl Triple for PreIncrementFmap {
        core_inject!();
        core_bind!();

        fn fmap<A, B, F>(&self, f: F, m: Action<i64, A>) -> Action<i64, B>
        where
            A: 'static,
            B: 'static,
            F: Fn(A) -> B + Send + Sync + 'static,
        {
            Action::new(move |s: i64| {
                let (x, next) = m.run(s.wrapping_add(1)).into_tuple();
                (f(x), next)
            })
        }
    }
}

/// Sampling parameters shared by every check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleConfig {
    pub seed: u64,
    pub samples: usize,
    pub state_range: RangeInclusive<i64>,
    pub value_range: RangeInclusive<i64>,
}

impl SampleConfig {
    pub fn new(seed: u64, samples: usize) -> Self {
        SampleConfig {
            seed,
            samples,
            ..SampleConfig::default()
        }
    }
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            seed: 0,
            samples: 1000,
            state_range: -100..=100,
            value_range: -100..=100,
        }
    }
}

/// Transfer function `x ↦ λs.(a·x + b·s + c, d·s + e·x + k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Affine {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
    pub k: i64,
}

impl Affine {
    pub fn eval(&self, x: i64, s: i64) -> (i64, i64) {
        let value = self
            .a
            .wrapping_mul(x)
            .wrapping_add(self.b.wrapping_mul(s))
            .wrapping_add(self.c);
        let state = self
            .d
            .wrapping_mul(s)
            .wrapping_add(self.e.wrapping_mul(x))
            .wrapping_add(self.k);
        (value, state)
    }

    pub fn transfer(self) -> impl Fn(i64) -> Action<i64, i64> + Clone + Send + Sync + 'static {
        move |x| Action::new(move |s| self.eval(x, s))
    }

    fn sample(rng: &mut ChaCha8Rng) -> Self {
        Affine {
            a: rng.random_range(COEFFICIENT_RANGE),
            b: rng.random_range(COEFFICIENT_RANGE),
            c: rng.random_range(COEFFICIENT_RANGE),
            d: rng.random_range(COEFFICIENT_RANGE),
            e: rng.random_range(COEFFICIENT_RANGE),
            k: rng.random_range(COEFFICIENT_RANGE),
        }
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{},{},{},{},{}]",
            self.a, self.b, self.c, self.d, self.e, self.k
        )
    }
}

/// Non-contextual function `x ↦ scale·x + offset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Linear {
    pub scale: i64,
    pub offset: i64,
}

impl Linear {
    pub fn apply(&self, x: i64) -> i64 {
        self.scale.wrapping_mul(x).wrapping_add(self.offset)
    }

    fn sample(rng: &mut ChaCha8Rng) -> Self {
        Linear {
            scale: rng.random_range(COEFFICIENT_RANGE),
            offset: rng.random_range(COEFFICIENT_RANGE),
        }
    }
}

impl fmt::Display for Linear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.scale, self.offset)
    }
}

/// The action `bind(second, first(seed))`, built with the calculus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SampleAction {
    pub seed: i64,
    pub first: Affine,
    pub second: Affine,
}

impl SampleAction {
    pub fn action(&self) -> Action<i64, i64> {
        calculus::bind(self.second.transfer(), (self.first.transfer())(self.seed))
    }
}

impl fmt::Display for SampleAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m{{x0={} f1={} f2={}}}",
            self.seed, self.first, self.second
        )
    }
}

/// A three-level action:
/// `fmap(x ↦ fmap(y ↦ inner(x + y), middle(x)), outer(seed))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NestedSample {
    pub seed: i64,
    pub outer: Affine,
    pub middle: Affine,
    pub inner: Affine,
}

impl NestedSample {
    #[allow(clippy::type_complexity)]
    pub fn action(&self) -> Action<i64, Action<i64, Action<i64, i64>>> {
        let middle = self.middle.transfer();
        let inner = self.inner.transfer();
        calculus::fmap(
            move |x: i64| {
                let inner = inner.clone();
                calculus::fmap(move |y: i64| inner(x.wrapping_add(y)), middle(x))
            },
            (self.outer.transfer())(self.seed),
        )
    }
}

impl fmt::Display for NestedSample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "mmm{{x0={} outer={} middle={} inner={}}}",
            self.seed, self.outer, self.middle, self.inner
        )
    }
}

/// The laws, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    LeftIdentity,
    RightIdentity,
    Associativity,
    Functor,
    Coherence,
    Naturality,
    Expansion,
}

impl Law {
    pub const ALL: [Law; 7] = [
        Law::LeftIdentity,
        Law::RightIdentity,
        Law::Associativity,
        Law::Functor,
        Law::Coherence,
        Law::Naturality,
        Law::Expansion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::LeftIdentity => "left_identity",
            Law::RightIdentity => "right_identity",
            Law::Associativity => "associativity",
            Law::Functor => "functor",
            Law::Coherence => "coherence",
            Law::Naturality => "naturality",
            Law::Expansion => "expansion",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One concrete instance of a law: the sampled inputs for a single equation.
///
/// [`Case::evaluate`] returns `(expected, actual)`; the equation holds when
/// they are equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    /// `bind(f, inject(x))` against `f(x)`.
    LeftIdentity { f: Affine, x: i64, s: i64 },
    /// `bind(inject, m)` against `m`.
    RightIdentity { m: SampleAction, s: i64 },
    /// `bind(g, bind(f, m))` against `bind(x ↦ bind(g, f(x)), m)`.
    Associativity {
        f: Affine,
        g: Affine,
        m: SampleAction,
        s: i64,
    },
    /// `fmap(id, m)` against `m`.
    FunctorIdentity { m: SampleAction, s: i64 },
    /// `fmap(h, fmap(g, m))` against `fmap(h ∘ g, m)`.
    FunctorComposition {
        g: Linear,
        h: Linear,
        m: SampleAction,
        s: i64,
    },
    /// `fmap(p, m)` against `bind(inject ∘ p, m)`.
    FmapCoherence { p: Linear, m: SampleAction, s: i64 },
    /// `join(fmap(f, m))` against `bind(f, m)`.
    BindCoherence { f: Affine, m: SampleAction, s: i64 },
    /// `join(fmap(inject, m))` against `join(inject(m))`.
    UnitNaturality { m: SampleAction, s: i64 },
    /// `join(fmap(join, mmm))` against `join(join(mmm))`.
    MultNaturality { mmm: NestedSample, s: i64 },
    /// `bind(h, bind(g, inject(x)))` against the unfolded let-chain.
    Expansion {
        g: Affine,
        h: Affine,
        x: i64,
        s: i64,
    },
}

impl Case {
    pub fn evaluate<T: Triple>(&self, t: &T) -> (Observed, Observed) {
        match *self {
            Case::LeftIdentity { f, x, s } => {
                let expected = (f.transfer())(x).run(s);
                let actual = t.bind(f.transfer(), t.inject(x)).run(s);
                (expected, actual)
            }
            Case::RightIdentity { m, s } => {
                let expected = m.action().run(s);
                let unit = t.clone();
                let actual = t.bind(move |x| unit.inject(x), m.action()).run(s);
                (expected, actual)
            }
            Case::Associativity { f, g, m, s } => {
                let inner = t.clone();
                let gt = g.transfer();
                let ft = f.transfer();
                let expected = t
                    .bind(move |x| inner.bind(gt.clone(), ft(x)), m.action())
                    .run(s);
                let actual = t
                    .bind(g.transfer(), t.bind(f.transfer(), m.action()))
                    .run(s);
                (expected, actual)
            }
            Case::FunctorIdentity { m, s } => {
                let expected = m.action().run(s);
                let actual = t.fmap(|x: i64| x, m.action()).run(s);
                (expected, actual)
            }
            Case::FunctorComposition { g, h, m, s } => {
                let composed = calculus::compose(move |y| h.apply(y), move |x| g.apply(x));
                let expected = t.fmap(composed, m.action()).run(s);
                let actual = t
                    .fmap(move |y| h.apply(y), t.fmap(move |x| g.apply(x), m.action()))
                    .run(s);
                (expected, actual)
            }
            Case::FmapCoherence { p, m, s } => {
                let unit = t.clone();
                let expected = t.bind(move |x| unit.inject(p.apply(x)), m.action()).run(s);
                let actual = t.fmap(move |x| p.apply(x), m.action()).run(s);
                (expected, actual)
            }
            Case::BindCoherence { f, m, s } => {
                let expected = t.bind(f.transfer(), m.action()).run(s);
                let actual = t.join(t.fmap(f.transfer(), m.action())).run(s);
                (expected, actual)
            }
            Case::UnitNaturality { m, s } => {
                let expected = t.join(t.inject(m.action())).run(s);
                let unit = t.clone();
                let actual = t.join(t.fmap(move |x| unit.inject(x), m.action())).run(s);
                (expected, actual)
            }
            Case::MultNaturality { mmm, s } => {
                let expected = t.join(t.join(mmm.action())).run(s);
                let flatten = t.clone();
                let actual = t
                    .join(t.fmap(move |mm| flatten.join(mm), mmm.action()))
                    .run(s);
                (expected, actual)
            }
            Case::Expansion { g, h, x, s } => {
                let expected = {
                    let (x, s1) = t.inject(x).run(s).into_tuple();
                    let (y, t1) = (g.transfer())(x).run(s1).into_tuple();
                    (h.transfer())(y).run(t1)
                };
                let actual = t
                    .bind(h.transfer(), t.bind(g.transfer(), t.inject(x)))
                    .run(s);
                (expected, actual)
            }
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Case::LeftIdentity { f, x, s } => write!(out, "(f={f} x={x} s={s})"),
            Case::RightIdentity { m, s } => write!(out, "({m} s={s})"),
            Case::Associativity { f, g, m, s } => write!(out, "(f={f} g={g} {m} s={s})"),
            Case::FunctorIdentity { m, s } => write!(out, "(fmap-id {m} s={s})"),
            Case::FunctorComposition { g, h, m, s } => {
                write!(out, "(fmap-compose g={g} h={h} {m} s={s})")
            }
            Case::FmapCoherence { p, m, s } => write!(out, "(fmap-bind p={p} {m} s={s})"),
            Case::BindCoherence { f, m, s } => write!(out, "(bind-join f={f} {m} s={s})"),
            Case::UnitNaturality { m, s } => write!(out, "(unit {m} s={s})"),
            Case::MultNaturality { mmm, s } => write!(out, "(mult {mmm} s={s})"),
            Case::Expansion { g, h, x, s } => write!(out, "(g={g} h={h} x={x} s={s})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub case: Case,
    pub expected: Observed,
    pub actual: Observed,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "  CE inputs={} expected={} actual={}",
            self.case, self.expected, self.actual
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub law: Law,
    pub checked: usize,
    pub passed: bool,
    pub counterexamples: Vec<Counterexample>,
}

impl LawReport {
    pub fn law_name(&self) -> &'static str {
        self.law.name()
    }
}

/// Renders the `LAW ...` line followed by one `  CE ...` line per counterexample.
impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LAW {} {} checked={} counterexamples={}",
            self.law,
            if self.passed { "PASS" } else { "FAIL" },
            self.checked,
            self.counterexamples.len()
        )?;
        for ce in &self.counterexamples {
            write!(f, "\n{ce}")?;
        }
        Ok(())
    }
}

struct Sampler<'a> {
    rng: ChaCha8Rng,
    cfg: &'a SampleConfig,
}

impl<'a> Sampler<'a> {
    fn new(cfg: &'a SampleConfig) -> Self {
        assert!(
            !cfg.state_range.is_empty() && !cfg.value_range.is_empty(),
            "sample ranges must be non-empty"
        );
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(cfg.seed),
            cfg,
        }
    }

    fn value(&mut self) -> i64 {
        self.rng.random_range(self.cfg.value_range.clone())
    }

    fn state(&mut self) -> i64 {
        self.rng.random_range(self.cfg.state_range.clone())
    }

    fn affine(&mut self) -> Affine {
        Affine::sample(&mut self.rng)
    }

    fn linear(&mut self) -> Linear {
        Linear::sample(&mut self.rng)
    }

    fn action(&mut self) -> SampleAction {
        SampleAction {
            seed: self.value(),
            first: self.affine(),
            second: self.affine(),
        }
    }

    fn nested(&mut self) -> NestedSample {
        NestedSample {
            seed: self.value(),
            outer: self.affine(),
            middle: self.affine(),
            inner: self.affine(),
        }
    }
}

fn check_cases<T, G>(law: Law, t: &T, cfg: &SampleConfig, mut draw: G) -> LawReport
where
    T: Triple,
    G: FnMut(&mut Sampler<'_>) -> Vec<Case>,
{
    let mut sampler = Sampler::new(cfg);
    let mut counterexamples = Vec::new();
    let mut failed = false;
    for _ in 0..cfg.samples {
        for case in draw(&mut sampler) {
            let (expected, actual) = case.evaluate(t);
            if expected != actual {
                failed = true;
                if counterexamples.len() < MAX_COUNTEREXAMPLES {
                    counterexamples.push(Counterexample {
                        case,
                        expected,
                        actual,
                    });
                }
            }
        }
    }
    LawReport {
        law,
        checked: cfg.samples,
        passed: !failed,
        counterexamples,
    }
}

pub fn check_left_identity<T: Triple>(t: &T, cfg: &SampleConfig) -> LawReport {
    check_cases(Law::LeftIdentity, t, cfg, |r| {
        vec![Case::LeftIdentity {
            f: r.affine(),
            x: r.value(),
            s: r.state(),
        }]
    })
}

pub fn check_right_identity<T: Triple>(t: &T, cfg: &SampleConfig) -> LawReport {
    check_cases(Law::RightIdentity, t, cfg, |r| {
        vec![Case::RightIdentity {
            m: r.action(),
            s: r.state(),
        }]
    })
}

pub fn check_associativity<T: Triple>(t: &T, cfg: &SampleConfig) -> LawReport {
    check_cases(Law::Associativity, t, cfg, |r| {
        vec![Case::Associativity {
            f: r.affine(),
            g: r.affine(),
            m: r.action(),
            s: r.state(),
        }]
    })
}

/// Identity and composition laws for `fmap`.
pub fn check_functor_laws<T: Triple>(t: &T, cfg: &SampleConfig) -> LawReport {
    check_cases(Law::Functor, t, cfg, |r| {
        let m = r.action();
        let s = r.state();
        vec![
            Case::FunctorIdentity { m, s },
            Case::FunctorComposition {
                g: r.linear(),
                h: r.linear(),
                m,
                s,
            },
        ]
    })
}

/// `fmap` agrees with `bind(inject ∘ f)`, and `bind` agrees with `join ∘ fmap`.
pub fn check_coherence<T: Triple>(t: &T, cfg: &SampleConfig) -> LawReport {
    check_cases(Law::Coherence, t, cfg, |r| {
        let m = r.action();
        let s = r.state();
        vec![
            Case::FmapCoherence {
                p: r.linear(),
                m,
                s,
            },
            Case::BindCoherence {
                f: r.affine(),
                m,
                s,
            },
        ]
    })
}

/// Unit and multiplication coherence of `inject` and `join` with `fmap`.
pub fn check_naturality<T: Triple>(t: &T, cfg: &SampleConfig) -> LawReport {
    check_cases(Law::Naturality, t, cfg, |r| {
        vec![
            Case::UnitNaturality {
                m: r.action(),
                s: r.state(),
            },
            Case::MultNaturality {
                mmm: r.nested(),
                s: r.state(),
            },
        ]
    })
}

/// Two chained binds equal the hand-unfolded let-chain.
pub fn check_expansion(cfg: &SampleConfig) -> LawReport {
    check_expansion_with(&CoreTriple, cfg)
}

pub fn check_expansion_with<T: Triple>(t: &T, cfg: &SampleConfig) -> LawReport {
    check_cases(Law::Expansion, t, cfg, |r| {
        vec![Case::Expansion {
            g: r.affine(),
            h: r.affine(),
            x: r.value(),
            s: r.state(),
        }]
    })
}

/// Runs every check in [`Law::ALL`] order.
pub fn check_all<T: Triple>(t: &T, cfg: &SampleConfig) -> Vec<LawReport> {
    Law::ALL.iter().map(|law| check_law(*law, t, cfg)).collect()
}

pub fn check_law<T: Triple>(law: Law, t: &T, cfg: &SampleConfig) -> LawReport {
    match law {
        Law::LeftIdentity => check_left_identity(t, cfg),
        Law::RightIdentity => check_right_identity(t, cfg),
        Law::Associativity => check_associativity(t, cfg),
        Law::Functor => check_functor_laws(t, cfg),
        Law::Coherence => check_coherence(t, cfg),
        Law::Naturality => check_naturality(t, cfg),
        Law::Expansion => check_expansion_with(t, cfg),
    }
}
