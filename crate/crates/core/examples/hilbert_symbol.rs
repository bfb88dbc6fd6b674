// Tame Hilbert symbols, n-th power membership and power-subgroup indices.

use metacover::local_field::{hilbert_symbol, index_power_subgroup, is_nth_power};
use metacover::LocalFieldModel;

pub fn run_example() -> metacover::Result<()> {
    let model = LocalFieldModel::new(7, 3)?;
    let pi = model.uniformizer();
    let g = model.unit_generator();

    println!("model {model}");
    println!("(pi, pi) = {}", hilbert_symbol(&model, pi, pi));
    println!("(pi, g)  = {}", hilbert_symbol(&model, pi, g));
    println!("(g, pi)  = {}", hilbert_symbol(&model, g, pi));

    for x in [model.class(0, 3), model.class(1, 0), model.class(3, 6)] {
        println!("{x} is a cube: {}", is_nth_power(&model, x, 3)?);
    }
    println!("[F^x : F^x3] = {}", index_power_subgroup(&model, 3)?);

    // Fields with q = 1 mod n only; 9 = 0 mod 3 is rejected.
    assert!(LocalFieldModel::new(9, 3).is_err());
    let smallest = LocalFieldModel::smallest_for(3)?;
    println!("smallest tame field for n = 3 has q = {}", smallest.q());
    Ok(())
}

fn main() -> metacover::Result<()> {
    run_example()
}
