// Parser combinators written with the same calculus, used on a small
// key-value language and on the scenario format.
//
// ```bash
// cargo run -p statethread --example parsing
// ```

use statethread::parser::{
    p_and_then, p_blanks, p_choice, p_eof, p_identifier, p_left, p_literal, p_many, p_map, p_right,
    p_uint, parse_scenario, parse_with, serialize_scenario, ParseOutcome, Parser,
};

/// `name = 12;` repeated.
fn assignments() -> Parser<Vec<(String, u64)>> {
    let lexeme = |p: Parser<String>| p_left(p, p_blanks());
    let number = p_left(p_uint(), p_blanks());
    let assignment = p_and_then(lexeme(p_identifier()), move |name: String| {
        let number = number.clone();
        p_right(
            lexeme(p_literal("=")),
            p_left(
                p_map(number, move |n| (name.clone(), n)),
                p_left(p_literal(";"), p_blanks()),
            ),
        )
    });
    p_left(p_right(p_blanks(), p_many(assignment)), p_eof())
}

fn main() {
    let p = assignments();
    for input in ["a = 1; bb=22;  c_3 = 333;", "a = 1; b = ;"] {
        match parse_with(&p, input).0 {
            ParseOutcome::Success(pairs) => println!("{input:?} -> {pairs:?}"),
            ParseOutcome::Failure { message, at } => {
                println!("{input:?} -> failure at byte {at}: {message}")
            }
        }
    }

    let keyword = p_choice(p_literal("jump"), p_literal("layer"));
    println!(
        "choice on \"layer x\" -> {}",
        parse_with(&keyword, "layer x").0
    );

    let text = "trigger_duration 3\nlayer birds 2 4 # wings\n\nlayer frogs 3 2\n";
    let scenario = parse_scenario(text).expect("valid scenario");
    print!("round trip:\n{}", serialize_scenario(&scenario));

    for bad in [
        "layer birds 2 4\n",
        "trigger_duration 2\nlayer a 1 1\nlayer a 1 1\n",
        "trigger_duration 2\nlayer birds two 4\n",
    ] {
        println!("{}", parse_scenario(bad).unwrap_err());
    }
}
