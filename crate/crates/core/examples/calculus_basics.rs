// Injection, binding, mapping, joining and Kleisli composition on an
// integer counter state.
//
// ```bash
// cargo run -p statethread --example calculus_basics
// ```

use statethread::calculus::{bind, compose, fmap, get, inject, join, kleisli, put, run, Action};

/// Adds the state to its input and bumps the state.
fn accumulate(x: i64) -> Action<i64, i64> {
    Action::new(move |s| (x + s, s + 1))
}

fn double_tick(x: i64) -> Action<i64, i64> {
    Action::new(move |s| (x * 2, s + 1))
}

fn inc_scale(y: i64) -> Action<i64, i64> {
    Action::new(move |s| (y + 1, s * 10))
}

fn main() {
    let out = run(&inject(7), 100);
    println!("inject 7 at 100        -> ({}, {})", out.value, out.state);

    let out = run(&bind(accumulate, inject(3)), 10);
    println!("bind accumulate (3†)   -> ({}, {})", out.value, out.state);

    // Two transfer functions chained through bind, and the same chain as one
    // Kleisli arrow.
    let chained = bind(inc_scale, bind(double_tick, inject(3)));
    let arrow = kleisli(inc_scale, double_tick);
    let (a, b) = (run(&chained, 1), run(&arrow.apply(3), 1));
    println!("h # g # 3† at 1        -> ({}, {})", a.value, a.state);
    println!("(h <=< g) 3 at 1       -> ({}, {})", b.value, b.state);

    // fmap keeps the post-state of the mapped action.
    let ticking = Action::new(|s: i64| (s, s + 1));
    let out = run(&fmap(|x: i64| x + 1, ticking), 0);
    println!("fmap (+1) ticking at 0 -> ({}, {})", out.value, out.state);

    let nested = Action::new(|s: i64| (Action::new(|t: i64| (t, t + 1)), s + 10));
    let out = run(&join(nested), 0);
    println!("join nested at 0       -> ({}, {})", out.value, out.state);

    let plus_then_double = compose(|x: i64| x * 2, |x: i64| x + 1);
    println!("compose (*2) (+1) 3    -> {}", plus_then_double(3));

    // A little stateful program: read, replace, read again.
    let program = get::<i64>().and_then(|before| {
        put(before * 3).and_then(move |()| get().map(move |after| (before, after)))
    });
    let out = run(&program, 5);
    println!(
        "get/put/get at 5       -> {:?}, final state {}",
        out.value, out.state
    );
}
