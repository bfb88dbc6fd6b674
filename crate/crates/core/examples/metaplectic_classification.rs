// Square-integrable genuine representations of covers through their image
// under the metaplectic correspondence, reducibility points and Jacquet
// modules.

use metacover::segments::{jacquet_L_metaplectic, mc_sqrt_classify, s_of_cuspidal_cover};
use metacover::{CoverParams, CuspidalLabel, Segment};

pub fn run_example() -> metacover::Result<()> {
    // omega_rho has order 2 on mu_4.
    let rho = CuspidalLabel::new("rho", 1, 2)?;
    let cover = CoverParams::new(4, 4, 0)?;
    let label = mc_sqrt_classify(&cover, &rho, 0.into(), 3.into())?;
    println!("{label}");
    println!("m' = {}, cuspidal = {}", label.m_prime, label.cuspidal);

    let odd = CoverParams::new(3, 4, 0)?;
    match mc_sqrt_classify(&odd, &rho, 0.into(), 2.into()) {
        Ok(_) => unreachable!("order 2 does not divide 3"),
        Err(e) => println!("[0,2]: {e}"),
    }

    println!("s(rho~) for m = 1, n = 3: {}", s_of_cuspidal_cover(3, 1)?);

    let seg: Segment = "rho~/2/0:[0,1]".parse()?;
    for l in 0..=4 {
        println!("r_(l={l}) L({seg}) = {}", jacquet_L_metaplectic(&seg, 4, l)?);
    }
    Ok(())
}

fn main() -> metacover::Result<()> {
    run_example()
}
