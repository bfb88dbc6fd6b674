// Determinantal expansions of L(rho,[a,b]) and Z(rho,[a,b]) and the change
// of basis between them.

use metacover::segments::{linked, tadic_expand_L, tadic_expand_Z};
use metacover::{GrothendieckElement, Kind, Segment};

pub fn run_example() -> metacover::Result<()> {
    let seg: Segment = "rho/1/0:[0,2]".parse()?;
    let l = tadic_expand_L(&seg);
    println!("L({seg}) = {l}");
    println!("Z({seg}) = {}", tadic_expand_Z(&seg));

    let back = l.to_other_basis();
    assert_eq!(back, GrothendieckElement::basis_element(Kind::L, seg.clone()));
    println!("expanding back gives {back}");

    let a: Segment = "rho/1/0:[0,1]".parse()?;
    let b: Segment = "rho/1/0:[1,2]".parse()?;
    println!("{a} and {b} linked: {}", linked(&a, &b));
    Ok(())
}

fn main() -> metacover::Result<()> {
    run_example()
}
