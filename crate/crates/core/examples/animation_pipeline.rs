// Drives the animation pipeline from the scenario and trace files in
// `data/`, printing both the rendered frame log and the frame XML.
//
// ```bash
// cargo run -p statethread --example animation_pipeline
// cargo run -p statethread --example animation_pipeline -- data/forest.scenario data/forest.trace 20
// ```

use std::path::PathBuf;

use statethread::calculus::run;
use statethread::parser::{parse_scenario, parse_trace};
use statethread::pipeline::{
    capture_image, emit_frame_xml, frame_db, simulate, simulate_frames, step, AnimStatus,
};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn main() {
    play(std::env::args().skip(1).collect());
}

/// `[scenario [trace [ticks]]]`, defaulting to the birds fixture.
fn play(args: Vec<String>) {
    let mut args = args.into_iter();
    let scenario_path = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| data("birds.scenario"));
    let trace_path = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| data("birds.trace"));
    let ticks: u64 = args
        .next()
        .map(|n| n.parse().expect("tick count"))
        .unwrap_or(6);

    let scenario = parse_scenario(&std::fs::read_to_string(&scenario_path).expect("scenario file"))
        .unwrap_or_else(|e| panic!("{}: {e}", scenario_path.display()));
    let trace = parse_trace(&std::fs::read_to_string(&trace_path).expect("trace file"))
        .unwrap_or_else(|e| panic!("{}: {e}", trace_path.display()));

    println!("-- frame log");
    for frame in simulate(&scenario, &trace, ticks, 1) {
        println!("{frame}");
    }

    println!("-- frame xml");
    for fi in simulate_frames(&scenario, &trace, ticks, 1) {
        println!("{}", emit_frame_xml(&fi));
    }

    // One tick by hand: the step action is a value until it meets a status.
    let first_jump = trace.jump_ticks().first().copied().unwrap_or(0);
    let tick = step(&scenario, &trace, first_jump);
    let out = run(&tick, AnimStatus::Normal);
    println!(
        "-- single step at t={first_jump}: {} -> {:?}",
        out.value, out.state
    );

    let layer = &scenario.layers()[0];
    println!(
        "-- stub units: {} {}",
        capture_image(first_jump).0,
        frame_db(&layer.name, layer.frame_at(first_jump)).0
    );
}
