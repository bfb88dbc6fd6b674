// Exact arithmetic in Z[zeta_n].

use metacover::cyclotomic::phi_n;
use metacover::CycInt;

pub fn run_example() -> metacover::Result<()> {
    for n in [1, 4, 6, 12] {
        let phi: Vec<String> = phi_n(n).iter().map(ToString::to_string).collect();
        println!("Phi_{n} coefficients: {}", phi.join(" "));
    }

    let z = CycInt::from_root(4, 1);
    println!("in Z[zeta_4]: zeta * zeta = {}", (&z * &z).pretty());

    let sum = (0..3).fold(CycInt::zero(3), |acc, k| acc + CycInt::from_root(3, k));
    println!("1 + zeta_3 + zeta_3^2 = {:?}", sum.is_rational_integer());

    let w: CycInt = "2,0,-1,1;12".parse()?;
    println!("{} squared is {}", w.pretty(), w.pow(2).pretty());
    Ok(())
}

fn main() -> metacover::Result<()> {
    run_example()
}
