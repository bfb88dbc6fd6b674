// Driving the command-line interface from code and reading its JSON.

use metacover::cli::run;

pub fn run_example() -> metacover::Result<()> {
    let out = run([
        "metacover",
        "--json",
        "dim",
        "sqrt",
        "--n",
        "2",
        "--c",
        "0",
        "--r0",
        "1",
        "--m",
        "2",
        "--s",
        "1",
        "--oracle",
    ]);
    print!("{}", out.stdout);
    let parsed: serde_json::Value =
        serde_json::from_str(&out.stdout).map_err(|e| metacover::Error::Parse(e.to_string()))?;
    println!("exit {} with value {}", out.code, parsed["value"]);

    let out = run([
        "metacover",
        "check",
        "oracle",
        "--n-max",
        "2",
        "--m-max",
        "2",
        "--r-max",
        "2",
    ]);
    print!("{}", out.stdout);
    Ok(())
}

fn main() -> metacover::Result<()> {
    run_example()
}
