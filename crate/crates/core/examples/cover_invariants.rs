// Gcd invariants, the center and metaplectic tensor product multiplicities
// of a Kazhdan-Patterson cover.

use metacover::cover::{center_membership, multiplicities, torus_lift_multiplicity_check};
use metacover::{Composition, CoverParams, LocalFieldModel};

pub fn run_example() -> metacover::Result<()> {
    let model = LocalFieldModel::new(7, 3)?;
    let cover = CoverParams::new(3, 3, 1)?;
    println!("cover {cover}: d_r = {}, d'_r = {}", cover.d_r(), cover.d_prime_r());
    println!("lambda I_r central iff lambda^{} is a cube", cover.center_exponent());

    let central: Vec<String> = model
        .nth_power_classes()
        .filter(|&x| center_membership(&cover, &model, x).unwrap_or(false))
        .map(|x| x.to_string())
        .collect();
    println!("central classes mod cubes: {}", central.join(" "));

    for beta in Composition::all(3) {
        let m = multiplicities(&cover, &model, &beta)?;
        println!("beta {beta}: n = {}, m = {}, M = {}", m.n_beta, m.m_beta, m.big_m_beta);
    }
    assert!(torus_lift_multiplicity_check(&cover, &model)?);
    Ok(())
}

fn main() -> metacover::Result<()> {
    run_example()
}
