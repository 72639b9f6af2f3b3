// The four system classes lifted into one transfer-function shape and
// driven over the same input sequence.
//
// ```bash
// cargo run -p statethread --example system_classes
// ```

use statethread::calculus::Action;
use statethread::classify::{lift, run_system, SystemClass};
use statethread::Time;

fn main() {
    let inputs: Vec<Time> = vec![0, 1, 2, 3, 4, 5];

    let systems: Vec<(&str, SystemClass<u64, Time, u64>)> = vec![
        ("constant", SystemClass::constant(7)),
        ("time-driven", SystemClass::time_driven(|t| t * t)),
        ("input-driven", SystemClass::input_driven(|x| x + 100)),
        (
            // Running total of everything seen so far.
            "stateful",
            SystemClass::stateful(|x: u64| Action::new(move |total: u64| (total + x, total + x))),
        ),
    ];

    for (label, sys) in systems {
        let class = sys.class();
        let f = lift(sys);
        let (outputs, final_state) = run_system(&f, inputs.clone(), 0);
        println!("class {class} {label:<12} outputs={outputs:?} final_state={final_state}");
    }
}
