// Checks the monad laws of the built-in calculus, then shows the same
// checks catching deliberately broken implementations.
//
// ```bash
// cargo run -p statethread --example law_check
// ```

use statethread::laws::mutants::{
    OrderSwappingBind, PreIncrementFmap, StateBumpingInject, StateDroppingBind, StateDroppingFmap,
};
use statethread::laws::{check_all, CoreTriple, SampleConfig, Triple};

fn report<T: Triple>(label: &str, t: &T, cfg: &SampleConfig) {
    println!("== {label}");
    for r in check_all(t, cfg) {
        // Keep the output short: first counterexample only.
        let mut lines = r.to_string().lines().map(str::to_owned).collect::<Vec<_>>();
        lines.truncate(2);
        println!("{}", lines.join("\n"));
    }
    println!();
}

fn main() {
    let cfg = SampleConfig::new(42, 500);
    report("core", &CoreTriple, &cfg);
    report(
        "bind dropping the continuation's state",
        &StateDroppingBind,
        &cfg,
    );
    report("inject bumping the state", &StateBumpingInject, &cfg);
    report(
        "bind applying effects out of order",
        &OrderSwappingBind,
        &cfg,
    );
    report("fmap dropping the post-state", &StateDroppingFmap, &cfg);
    report("fmap pre-incrementing the state", &PreIncrementFmap, &cfg);
}
