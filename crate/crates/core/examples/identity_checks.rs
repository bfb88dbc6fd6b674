// The binomial and cyclotomic identities behind the dimension formulas,
// checked by enumeration.

use metacover::whittaker::check_identities;

pub fn run_example() -> metacover::Result<()> {
    let checks = check_identities(6, 6);
    let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
    println!("{} checks, {} failed", checks.len(), failed.len());
    for c in failed {
        println!("FAILED {} n={} s={} size={}", c.identity, c.n, c.s, c.size);
    }
    Ok(())
}

fn main() -> metacover::Result<()> {
    run_example()
}
