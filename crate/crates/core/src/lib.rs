//! Composable stateful computations.
//!
//! * [`calculus`]: actions over a threaded state, with `inject`, `bind`,
//!   `fmap`, `join`, `compose`, `kleisli`, `get` and `put`.
//! * [`laws`]: randomized, exact checks of the monad laws against any
//!   [`laws::Triple`], including deliberately broken ones.
//! * [`classify`]: constant, time-driven, input-driven and stateful systems,
//!   all lifted to one transfer-function shape.
//! * [`pipeline`]: a deterministic animation pipeline whose generator threads
//!   its trigger status through the calculus.
//! * [`parser`]: parser combinators over a cursor state, and the scenario and
//!   event-trace file formats.
//! * [`cli`]: the `laws`, `simulate` and `check` commands behind the binary.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod calculus;
pub mod classify;
pub mod cli;
pub mod laws;
pub mod parser;
pub mod pipeline;

/// Discrete time, in ticks.
pub type Time = u64;
