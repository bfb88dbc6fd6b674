// The 2-cocycle of a cover restricted to the diagonal torus, and the
// commutators of lifted torus elements.

use metacover::cover::{commutator_torus, torus_cocycle};
use metacover::{CoverParams, LocalFieldModel, TorusClass};

pub fn run_example() -> metacover::Result<()> {
    let model = LocalFieldModel::new(7, 3)?;
    let (pi, g, one) = (model.uniformizer(), model.unit_generator(), model.one());
    let x = TorusClass::new(vec![pi, one]);
    let y = TorusClass::new(vec![one, g]);

    for c in 0..3 {
        let cover = CoverParams::new(2, 3, c)?;
        println!(
            "c = {c}: sigma(x, y) = {}, sigma(y, x) = {}, [x, y] = {}",
            torus_cocycle(&cover, &model, &x, &y)?,
            torus_cocycle(&cover, &model, &y, &x)?,
            commutator_torus(&cover, &model, &x, &y)?,
        );
    }
    Ok(())
}

fn main() -> metacover::Result<()> {
    run_example()
}
