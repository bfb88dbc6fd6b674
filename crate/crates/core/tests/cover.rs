use metacover::cover::{
    big_m_beta, center_membership, commutator_torus, m_beta, multiplicities, n_beta, torus_cocycle,
    torus_lift_multiplicity_check,
};
use metacover::local_field::{hilbert_symbol, index_power_subgroup, is_nth_power};
use metacover::{Composition, CoverParams, FieldClass, LocalFieldModel, TorusClass};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

/// Tori whose entries run over `{1, pi, g, pi g^{-1}}`.
fn torus_sample(model: &LocalFieldModel, r: usize) -> Vec<TorusClass> {
    let base = [
        model.one(),
        model.uniformizer(),
        model.unit_generator(),
        model.class(1, -1),
    ];
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<FieldClass>| {
                base.iter().map(move |&b| {
                    let mut next = prefix.clone();
                    next.push(b);
                    next
                })
            })
            .collect();
    }
    out.into_iter().map(TorusClass::new).collect()
}

#[test]
fn cocycle_identity_on_torus_triples() {
    let model = LocalFieldModel::new(7, 3).unwrap();
    for r in 1..=3 {
        let tori = torus_sample(&model, r);
        for c in 0..3 {
            let cover = CoverParams::new(r, 3, c).unwrap();
            let s = |a: &TorusClass, b: &TorusClass| torus_cocycle(&cover, &model, a, b).unwrap();
            for x in &tori {
                for y in &tori {
                    let xy = x.mul(&model, y).unwrap();
                    for z in &tori {
                        let yz = y.mul(&model, z).unwrap();
                        assert_eq!(s(x, y).mul(s(&xy, z)), s(x, &yz).mul(s(y, z)), "r={r} c={c}");
                    }
                }
            }
        }
    }
}

#[test]
fn center_criterion_matches_commutators() {
    for n in 1..=4u64 {
        let model = LocalFieldModel::smallest_for(n).unwrap();
        for r in 1..=4 {
            for c in 0..n as i64 {
                let cover = CoverParams::new(r, n, c).unwrap();
                let gens = TorusClass::generators(&model, r);
                for lambda in model.nth_power_classes() {
                    let scalar = TorusClass::scalar(lambda, r);
                    let commutes = gens
                        .iter()
                        .all(|t| commutator_torus(&cover, &model, &scalar, t).unwrap().is_one());
                    assert_eq!(
                        center_membership(&cover, &model, lambda).unwrap(),
                        commutes,
                        "{cover} {lambda}"
                    );
                }
            }
        }
    }
}

#[test]
fn commutator_examples() {
    let m = LocalFieldModel::new(7, 3).unwrap();
    let cover = CoverParams::new(2, 3, 0).unwrap();
    let a = TorusClass::new(vec![m.uniformizer(), m.one()]);
    let b = TorusClass::new(vec![m.one(), m.unit_generator()]);
    assert_eq!(commutator_torus(&cover, &m, &a, &b).unwrap().exponent(), 2);
    assert!(commutator_torus(&cover, &m, &a, &a).unwrap().is_one());
}

#[test]
fn scalar_commutator_formula() {
    // [lambda I, t] = prod_i (lambda, t_i)^{2rc + r - 1}
    let model = LocalFieldModel::new(13, 4).unwrap();
    for r in 1..=3 {
        for c in 0..4 {
            let cover = CoverParams::new(r, 4, c).unwrap();
            for lambda in model.nth_power_classes() {
                for t in torus_sample(&model, r) {
                    let got = commutator_torus(&cover, &model, &TorusClass::scalar(lambda, r), &t).unwrap();
                    let expected = t
                        .entries()
                        .iter()
                        .fold(metacover::RootOfUnity::one(4), |acc, &ti| {
                            acc.mul(hilbert_symbol(&model, lambda, ti))
                        })
                        .pow(cover.center_exponent() as i64);
                    assert_eq!(got, expected);
                }
            }
        }
    }
}

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

/// `[F^xa : F^xn]` counted on the class group `F^x / F^xn`.
fn power_index(model: &LocalFieldModel, a: u64) -> BigInt {
    let count = model
        .nth_power_classes()
        .filter(|&x| is_nth_power(model, x, a).unwrap())
        .count();
    BigInt::from(count)
}

#[test]
fn multiplicity_identities() {
    for n in 1..=6u64 {
        let model = LocalFieldModel::smallest_for(n).unwrap();
        for c in 0..=5i64 {
            for r in 1..=6 {
                let cover = CoverParams::new(r, n, c).unwrap();
                let d_r = cover.d_r();
                for beta in Composition::all(r) {
                    let mult = multiplicities(&cover, &model, &beta).unwrap();
                    let blocks: Vec<CoverParams> =
                        beta.parts().iter().map(|&ri| cover.with_rank(ri).unwrap()).collect();

                    let mut prod_m = BigInt::from(1);
                    for block in &blocks {
                        prod_m *= m_beta(block, &model, &Composition::new(vec![block.r()]).unwrap()).unwrap();
                    }
                    assert_eq!(mult.big_m_beta, &mult.n_beta * prod_m, "M = n prod m, {cover} {beta}");

                    // n_beta^2 [F^x(n/d_r) : F^xn] = prod_i [F^x : F^x(n/d'_{r_i})]
                    let mut rhs = BigInt::from(1);
                    for block in &blocks {
                        rhs *= index_power_subgroup(&model, n / block.d_prime_r()).unwrap();
                    }
                    assert_eq!(
                        &mult.n_beta * &mult.n_beta * power_index(&model, n / d_r),
                        rhs,
                        "{cover} {beta}"
                    );

                    // prod d_{r_i} M_beta [F^x(n/d_r) : F^xn] = d_r [F^x : F^xn]^k
                    let prod_d: BigInt = blocks.iter().map(|b| big(b.d_r())).product();
                    let full = big(index_power_subgroup(&model, n).unwrap()).pow(beta.len() as u32);
                    assert_eq!(
                        prod_d * &mult.big_m_beta * power_index(&model, n / d_r),
                        big(d_r) * full
                    );
                }
                assert!(torus_lift_multiplicity_check(&cover, &model).unwrap());
            }
        }
    }
}

#[test]
fn multiplicity_examples() {
    let m3 = LocalFieldModel::new(7, 3).unwrap();
    let cover = CoverParams::new(2, 3, 2).unwrap();
    assert_eq!(n_beta(&cover, &m3, &Composition::torus(2)).unwrap(), big(3));
    let m2 = LocalFieldModel::new(3, 2).unwrap();
    let cover = CoverParams::new(2, 2, 0).unwrap();
    let beta = Composition::new(vec![2]).unwrap();
    assert_eq!(n_beta(&cover, &m2, &beta).unwrap(), big(1));
    assert_eq!(m_beta(&cover, &m2, &beta).unwrap(), big(4));
    assert_eq!(big_m_beta(&cover, &m2, &beta).unwrap(), big(4));
}

proptest! {
    #[test]
    fn c_matters_only_mod_n(r in 1usize..8, n in 1u64..9, c in -50i64..50, shift in -5i64..5) {
        let a = CoverParams::new(r, n, c).unwrap();
        let b = CoverParams::new(r, n, c + shift * n as i64).unwrap();
        prop_assert_eq!(a, b);
        let lift = 2 * r as i64 * c + r as i64 - 1;
        prop_assert_eq!(a.d_r(), n.gcd(&lift.unsigned_abs()));
        prop_assert_eq!(a.d_prime_r(), n.gcd(&(r as u64)));
    }

    #[test]
    fn gl1_cocycle_is_symbol_power(c in 0i64..6, v1 in -5i64..5, e1 in 0i64..12, v2 in -5i64..5, e2 in 0i64..12) {
        let model = LocalFieldModel::new(13, 6).unwrap();
        let cover = CoverParams::new(1, 6, c).unwrap();
        let (x, y) = (model.class(v1, e1), model.class(v2, e2));
        let s = torus_cocycle(&cover, &model, &TorusClass::new(vec![x]), &TorusClass::new(vec![y])).unwrap();
        prop_assert_eq!(s, hilbert_symbol(&model, x, y).pow(c));
    }

    #[test]
    fn cocycle_is_bimultiplicative(
        c in 0i64..4,
        xs in prop::collection::vec((-3i64..4, 0i64..12), 3),
        ys in prop::collection::vec((-3i64..4, 0i64..12), 3),
        zs in prop::collection::vec((-3i64..4, 0i64..12), 3),
    ) {
        let model = LocalFieldModel::new(13, 4).unwrap();
        let cover = CoverParams::new(3, 4, c).unwrap();
        let t = |v: &[(i64, i64)]| TorusClass::new(v.iter().map(|&(a, b)| model.class(a, b)).collect());
        let (x, y, z) = (t(&xs), t(&ys), t(&zs));
        let s = |a: &TorusClass, b: &TorusClass| torus_cocycle(&cover, &model, a, b).unwrap();
        prop_assert_eq!(s(&x.mul(&model, &y).unwrap(), &z), s(&x, &z).mul(s(&y, &z)));
        prop_assert_eq!(s(&x, &y.mul(&model, &z).unwrap()), s(&x, &y).mul(s(&x, &z)));
    }
}
