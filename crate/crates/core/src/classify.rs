//! The four system classes and their lifting into stateful transfer functions.
//!
//! A constant, time-driven or input-driven system is a special case of a
//! system with internal status: [`lift`] turns each into a [`TransferFn`] that
//! never reads or writes the state, so all four can be driven by the same
//! [`run_system`] loop.

use std::fmt;
use std::sync::Arc;

use crate::calculus::{bind, inject, Action, TransferFn};
use crate::Time;

/// Input type `I`, output type `V`, internal status `S`.
pub enum SystemClass<S, I, V> {
    /// Class 0: the output is a constant.
    Constant(V),
    /// Class 1: the output is a function of the current tick. Build with
    /// [`SystemClass::time_driven`], which pins the input type to [`Time`].
    TimeDriven(Arc<dyn Fn(I) -> V + Send + Sync>),
    /// Class 2: the output is a function of the input.
    InputDriven(Arc<dyn Fn(I) -> V + Send + Sync>),
    /// Class 3: the output depends on the input and the internal status.
    Stateful(TransferFn<S, I, V>),
}

impl<S, I, V: Clone> Clone for SystemClass<S, I, V> {
    fn clone(&self) -> Self {
        match self {
            SystemClass::Constant(c) => SystemClass::Constant(c.clone()),
            SystemClass::TimeDriven(f) => SystemClass::TimeDriven(Arc::clone(f)),
            SystemClass::InputDriven(f) => SystemClass::InputDriven(Arc::clone(f)),
            SystemClass::Stateful(f) => SystemClass::Stateful(f.clone()),
        }
    }
}

impl<S, I, V: fmt::Debug> fmt::Debug for SystemClass<S, I, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemClass::Constant(c) => f.debug_tuple("Constant").field(c).finish(),
            SystemClass::TimeDriven(_) => f.write_str("TimeDriven(<fn>)"),
            SystemClass::InputDriven(_) => f.write_str("InputDriven(<fn>)"),
            SystemClass::Stateful(_) => f.write_str("Stateful(<fn>)"),
        }
    }
}

impl<S, V> SystemClass<S, Time, V> {
    pub fn time_driven(f: impl Fn(Time) -> V + Send + Sync + 'static) -> Self {
        SystemClass::TimeDriven(Arc::new(f))
    }
}

impl<S: 'static, I: 'static, V: 'static> SystemClass<S, I, V> {
    pub fn constant(c: V) -> Self {
        SystemClass::Constant(c)
    }

    pub fn input_driven(f: impl Fn(I) -> V + Send + Sync + 'static) -> Self {
        SystemClass::InputDriven(Arc::new(f))
    }

    pub fn stateful(f: impl Fn(I) -> Action<S, V> + Send + Sync + 'static) -> Self {
        SystemClass::Stateful(TransferFn::new(f))
    }

    /// Class number, 0 to 3.
    pub fn class(&self) -> u8 {
        match self {
            SystemClass::Constant(_) => 0,
            SystemClass::TimeDriven(_) => 1,
            SystemClass::InputDriven(_) => 2,
            SystemClass::Stateful(_) => 3,
        }
    }
}

/// Lifts any system into a class-3 transfer function.
pub fn lift<S, I, V>(sys: SystemClass<S, I, V>) -> TransferFn<S, I, V>
where
    S: 'static,
    I: 'static,
    V: Clone + Send + Sync + 'static,
{
    match sys {
        SystemClass::Constant(c) => TransferFn::new(move |_| inject(c.clone())),
        SystemClass::TimeDriven(f) | SystemClass::InputDriven(f) => {
            TransferFn::new(move |x| inject(f(x)))
        }
        SystemClass::Stateful(f) => f,
    }
}

/// Feeds `inputs` through `f` in order, threading the state from `s0`.
///
/// Returns the outputs and the final state.
pub fn run_system<S, I, V>(
    f: &TransferFn<S, I, V>,
    inputs: impl IntoIterator<Item = I>,
    s0: S,
) -> (Vec<V>, S)
where
    S: 'static,
    I: Clone + Send + Sync + 'static,
    V: 'static,
{
    let mut state = s0;
    let mut outputs = Vec::new();
    for x in inputs {
        let step = f.clone();
        let out = bind(move |x| step.apply(x), inject(x)).run(state);
        outputs.push(out.value);
        state = out.state;
    }
    (outputs, state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::run;
    use proptest::prelude::*;

    fn counter() -> TransferFn<i64, i64, i64> {
        TransferFn::new(|x: i64| Action::new(move |s: i64| (x + s, s + 1)))
    }

    #[test]
    fn lifted_lower_classes_leave_state_alone() {
        let c = lift(SystemClass::<i64, i64, i64>::constant(7));
        assert_eq!(run(&c.apply(123), 4).into_tuple(), (7, 4));

        let t = lift(SystemClass::<i64, Time, Time>::time_driven(|t| 2 * t));
        assert_eq!(run(&t.apply(3), 4).into_tuple(), (6, 4));

        let x = lift(SystemClass::<i64, i64, i64>::input_driven(|x| x + 1));
        assert_eq!(run(&x.apply(4), 4).into_tuple(), (5, 4));
    }

    #[test]
    fn stateful_lift_is_identity() {
        let f = lift(SystemClass::stateful(|x: i64| {
            Action::new(move |s: i64| (x * s, s - 1))
        }));
        assert_eq!(run(&f.apply(3), 5).into_tuple(), (15, 4));
    }

    #[test]
    fn class_numbers() {
        assert_eq!(SystemClass::<(), i64, i64>::constant(1).class(), 0);
        assert_eq!(SystemClass::<(), Time, Time>::time_driven(|t| t).class(), 1);
        assert_eq!(SystemClass::<(), i64, i64>::input_driven(|x| x).class(), 2);
        assert_eq!(SystemClass::<(), i64, i64>::stateful(inject).class(), 3);
    }

    #[test]
    fn run_system_examples() {
        let c = lift(SystemClass::<i64, i64, i64>::constant(1));
        assert_eq!(run_system(&c, [9, 9, 9], 0), (vec![1, 1, 1], 0));
        assert_eq!(run_system(&counter(), [10, 10], 0), (vec![10, 11], 2));
        assert_eq!(run_system(&counter(), Vec::<i64>::new(), 5), (vec![], 5));
    }

    proptest! {
        #[test]
        fn singleton_matches_one_bind(x in -100i64..100, s in -100i64..100) {
            let f = counter();
            let g = f.clone();
            let single = run(&bind(move |x| g.apply(x), inject(x)), s);
            prop_assert_eq!(run_system(&f, [x], s), (vec![single.value], single.state));
        }

        #[test]
        fn threading_is_sequential(
            a in prop::collection::vec(-50i64..50, 0..12),
            b in prop::collection::vec(-50i64..50, 0..12),
            s0 in -50i64..50,
        ) {
            let f = counter();
            let (ya, sa) = run_system(&f, a.clone(), s0);
            let (yb, sb) = run_system(&f, b.clone(), sa);
            let whole: Vec<i64> = a.into_iter().chain(b).collect();
            let (yall, sall) = run_system(&f, whole, s0);
            prop_assert_eq!(yall, ya.into_iter().chain(yb).collect::<Vec<_>>());
            prop_assert_eq!(sall, sb);
        }
    }
}
