//! The state-threading calculus.
//!
//! An [`Action<S, A>`] wraps a pure function `S -> (A, S)`: a value that still
//! needs a state to be observed. Plain values enter the calculus through
//! [`inject`], and functions from plain values to actions ([`TransferFn`]) are
//! sequenced with [`bind`], which threads the state from one step into the
//! next. [`fmap`] applies a non-contextual function inside an action and
//! [`join`] flattens an action that yields another action.
//!
//! ```
//! use statethread::calculus::{bind, inject, run, Action};
//!
//! let step = |x: i64| Action::new(move |s: i64| (x + s, s + 1));
//! let out = run(&bind(step, inject(3)), 10);
//! assert_eq!((out.value, out.state), (13, 11));
//! ```
//!
//! Actions never compare structurally. Two actions are considered equal when
//! they produce equal [`ValueStatePair`]s under [`run`] for every state of
//! interest; [`agree_on`] performs that comparison over a finite sample.

use std::fmt;
use std::sync::Arc;

type StepFn<S, A> = dyn Fn(S) -> (A, S) + Send + Sync;

/// A pure contextual computation from a state to a value and the next state.
pub struct Action<S, A> {
    step: Arc<StepFn<S, A>>,
}

impl<S, A> Clone for Action<S, A> {
    fn clone(&self) -> Self {
        Action {
            step: Arc::clone(&self.step),
        }
    }
}

impl<S, A> fmt::Debug for Action<S, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Action(<fn>)")
    }
}

impl<S, A> Action<S, A> {
    /// Wraps a state transition. The function must be referentially transparent.
    pub fn new<F>(step: F) -> Self
    where
        F: Fn(S) -> (A, S) + Send + Sync + 'static,
    {
        Action {
            step: Arc::new(step),
        }
    }

    /// Evaluates the action at `state`.
    pub fn run(&self, state: S) -> ValueStatePair<S, A> {
        let (value, state) = (self.step)(state);
        ValueStatePair { value, state }
    }
}

impl<S: 'static, A: 'static> Action<S, A> {
    /// Method form of [`bind`].
    pub fn and_then<B, F>(self, f: F) -> Action<S, B>
    where
        B: 'static,
        F: Fn(A) -> Action<S, B> + Send + Sync + 'static,
    {
        bind(f, self)
    }

    /// Method form of [`fmap`].
    pub fn map<B, F>(self, f: F) -> Action<S, B>
    where
        B: 'static,
        F: Fn(A) -> B + Send + Sync + 'static,
    {
        fmap(f, self)
    }
}

/// The result of running an action: the produced value and the state after it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ValueStatePair<S, A> {
    pub value: A,
    pub state: S,
}

impl<S, A> ValueStatePair<S, A> {
    pub fn into_tuple(self) -> (A, S) {
        (self.value, self.state)
    }
}

impl<S: fmt::Display, A: fmt::Display> fmt::Display for ValueStatePair<S, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.value, self.state)
    }
}

/// A shareable function from a plain value to an action.
///
/// The free functions in this module accept any closure of the right shape;
/// `TransferFn` is the owned, clonable form used when a transfer function has
/// to be stored or returned.
pub struct TransferFn<S, A, B> {
    apply: Arc<dyn Fn(A) -> Action<S, B> + Send + Sync>,
}

impl<S, A, B> Clone for TransferFn<S, A, B> {
    fn clone(&self) -> Self {
        TransferFn {
            apply: Arc::clone(&self.apply),
        }
    }
}

impl<S, A, B> fmt::Debug for TransferFn<S, A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("TransferFn(<fn>)")
    }
}

impl<S: 'static, A: 'static, B: 'static> TransferFn<S, A, B> {
    pub fn new<F>(f: F) -> Self
    where
        F: Fn(A) -> Action<S, B> + Send + Sync + 'static,
    {
        TransferFn { apply: Arc::new(f) }
    }

    pub fn apply(&self, x: A) -> Action<S, B> {
        (self.apply)(x)
    }

    /// Unwraps into a plain closure, e.g. to hand it to [`bind`].
    pub fn into_fn(self) -> impl Fn(A) -> Action<S, B> + Clone + Send + Sync + 'static {
        move |x| (self.apply)(x)
    }
}

/// Wraps a plain value into an action that leaves the state untouched.
pub fn inject<S, A>(x: A) -> Action<S, A>
where
    A: Clone + Send + Sync + 'static,
{
    Action::new(move |s| (x.clone(), s))
}

/// Evaluates `m` at the concrete state `s0`.
pub fn run<S, A>(m: &Action<S, A>, s0: S) -> ValueStatePair<S, A> {
    m.run(s0)
}

/// Runs `m`, then feeds its value and post-state into `f`.
pub fn bind<S, A, B, F>(f: F, m: Action<S, A>) -> Action<S, B>
where
    S: 'static,
    A: 'static,
    B: 'static,
    F: Fn(A) -> Action<S, B> + Send + Sync + 'static,
{
    Action::new(move |s| {
        let (x, next) = (m.step)(s);
        (f(x).step)(next)
    })
}

/// Applies a non-contextual function to the value of `m`, keeping `m`'s post-state.
pub fn fmap<S, A, B, F>(f: F, m: Action<S, A>) -> Action<S, B>
where
    S: 'static,
    A: 'static,
    B: 'static,
    F: Fn(A) -> B + Send + Sync + 'static,
{
    Action::new(move |s| {
        let (x, next) = (m.step)(s);
        (f(x), next)
    })
}

/// Plain function composition: `compose(b, a)(z) == b(a(z))`.
pub fn compose<A, B, C>(
    b: impl Fn(B) -> C + Send + Sync + 'static,
    a: impl Fn(A) -> B + Send + Sync + 'static,
) -> impl Fn(A) -> C + Send + Sync + 'static {
    move |z| b(a(z))
}

/// Kleisli composition: `x ↦ bind(g, f(x))`.
pub fn kleisli<S, A, B, C, G, F>(g: G, f: F) -> TransferFn<S, A, C>
where
    S: 'static,
    A: 'static,
    B: 'static,
    C: 'static,
    G: Fn(B) -> Action<S, C> + Clone + Send + Sync + 'static,
    F: Fn(A) -> Action<S, B> + Send + Sync + 'static,
{
    TransferFn::new(move |x| bind(g.clone(), f(x)))
}

/// Flattens an action whose value is itself an action.
pub fn join<S, A>(mm: Action<S, Action<S, A>>) -> Action<S, A>
where
    S: 'static,
    A: 'static,
{
    Action::new(move |s| {
        let (m, next) = (mm.step)(s);
        (m.step)(next)
    })
}

/// Observes the current state.
pub fn get<S>() -> Action<S, S>
where
    S: Clone + 'static,
{
    Action::new(|s: S| (s.clone(), s))
}

/// Replaces the state with `s1`.
pub fn put<S>(s1: S) -> Action<S, ()>
where
    S: Clone + Send + Sync + 'static,
{
    Action::new(move |_| ((), s1.clone()))
}

/// Extensional equality over a finite sample of states.
pub fn agree_on<S, A>(lhs: &Action<S, A>, rhs: &Action<S, A>, states: &[S]) -> bool
where
    S: Clone + PartialEq,
    A: PartialEq,
{
    states
        .iter()
        .all(|s| lhs.run(s.clone()) == rhs.run(s.clone()))
}
