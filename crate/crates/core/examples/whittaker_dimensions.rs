// Whittaker dimensions from closed forms and from enumeration of torus
// points.

use metacover::whittaker::{
    dim_L_closed, dim_Z_closed, dim_product, dim_sqrt_bruteforce, dim_sqrt_closed, label_of_order,
};
use metacover::{CoverParams, LocalFieldModel};
use num_bigint::BigInt;

pub fn run_example() -> metacover::Result<()> {
    let model = LocalFieldModel::smallest_for(3)?;
    for (r0, m, s) in [(1, 1, 1), (1, 2, 1), (1, 3, 1), (1, 3, 3), (2, 2, 1)] {
        let cover = CoverParams::new(r0 * m, 3, 0)?;
        let closed = dim_sqrt_closed(&cover, r0, m, s)?;
        let brute = dim_sqrt_bruteforce(&cover, &model, r0, m, &label_of_order(3, r0, s)?)?;
        println!("r0={r0} m={m} s={s}: closed {closed}, oracle {brute}");
    }

    for k in 1..=4 {
        let cover = CoverParams::new(k, 3, 0)?;
        println!(
            "k={k}: dim L = {}, dim Z = {}",
            dim_L_closed(&cover, 1, 1, k)?.value,
            dim_Z_closed(&cover, 1, 1, k)?.value
        );
    }

    let cover = CoverParams::new(2, 2, 0)?;
    let one = BigInt::from(1);
    let ps = dim_product(&cover, &[(1, one.clone()), (1, one)])?;
    println!("genuine principal series of the double cover of GL_2: {}", ps.value);
    Ok(())
}

fn main() -> metacover::Result<()> {
    run_example()
}
