// Germ values at torsion points of the torus.

use metacover::germ::{germ_L, germ_Z, germ_term, weyl_stabilizer_order};
use metacover::{CuspidalLabel, ProductTerm, Segment, TorusPoint};

pub fn run_example() -> metacover::Result<()> {
    let n = 3;
    let rho = CuspidalLabel::new("rho", 1, 1)?;
    let seg = Segment::with_length(rho.clone(), 0.into(), 2)?;

    for x in TorusPoint::all(n, 2) {
        println!(
            "x = {x}: |W_x| = {}, c_Z = {}, c_L = {}",
            weyl_stabilizer_order(&x),
            germ_Z(&seg, &x)?.pretty(),
            germ_L(&seg, &x)?.pretty(),
        );
    }

    let chi = Segment::with_length(rho, 0.into(), 1)?;
    let term = ProductTerm::new(vec![chi.clone(), chi]);
    let x = TorusPoint::new(n, &[0, 1])?;
    println!("c_(chi x chi)({x}) = {}", germ_term(&term, &x)?.pretty());
    Ok(())
}

fn main() -> metacover::Result<()> {
    run_example()
}
