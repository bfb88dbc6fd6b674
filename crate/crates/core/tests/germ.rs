use itertools::Itertools;
use metacover::combinat::factorial;
use metacover::germ::{
    germ_L, germ_L_weyl_sum, germ_Z, germ_element, germ_term, germ_term_weyl_sum, weyl_stabilizer_order,
};
use metacover::segments::tadic_expand_L;
use metacover::{CuspidalLabel, CycInt, Kind, ProductTerm, Segment, TorusPoint};
use num_bigint::BigInt;
use proptest::prelude::*;

fn seg(name: &str, r0: usize, k: u64, a: i64, m: usize) -> Segment {
    Segment::with_length(CuspidalLabel::new(name, r0, k).unwrap(), a.into(), m).unwrap()
}

fn int(v: CycInt) -> i64 {
    i64::try_from(v.is_rational_integer().unwrap()).unwrap()
}

/// The Weyl sum with the factors taken in the given order and each block
/// evaluated by `germ_Z`.
fn weyl_sum_in_order(factors: &[Segment], x: &TorusPoint) -> CycInt {
    let n = x.n();
    let r = x.rank();
    let mut total = CycInt::zero(n);
    for w in (0..r).permutations(r) {
        let permuted: Vec<i64> = w.iter().map(|&i| x.exps()[i] as i64).collect();
        let mut value = CycInt::one(n);
        let mut start = 0;
        for f in factors {
            let block = TorusPoint::new(n, &permuted[start..start + f.rank()]).unwrap();
            start += f.rank();
            value = value * germ_Z(f, &block).unwrap().scale(&weyl_stabilizer_order(&block));
        }
        total = total + value;
    }
    let den: BigInt = weyl_stabilizer_order(x) * factors.iter().map(|f| factorial(f.rank() as u64)).product::<BigInt>();
    total.div_exact(&den).expect("the Weyl sum is divisible")
}

#[test]
fn worked_examples() {
    let chi = seg("chi", 1, 0, 0, 1);
    let two = ProductTerm::new(vec![chi.clone(), chi.clone()]);
    assert_eq!(int(germ_term(&two, &TorusPoint::new(2, &[0, 1]).unwrap()).unwrap()), 2);
    assert_eq!(int(germ_term(&two, &TorusPoint::new(2, &[0, 0]).unwrap()).unwrap()), 1);
    assert_eq!(
        int(germ_L(&seg("rho", 1, 0, 0, 2), &TorusPoint::new(2, &[0, 0]).unwrap()).unwrap()),
        1
    );
    assert_eq!(
        int(germ_L(&seg("rho", 1, 1, 0, 2), &TorusPoint::new(2, &[0, 1]).unwrap()).unwrap()),
        -1
    );
    assert_eq!(
        int(germ_Z(&seg("rho", 1, 0, 0, 2), &TorusPoint::new(2, &[0, 1]).unwrap()).unwrap()),
        1
    );
    assert_eq!(
        int(germ_Z(&seg("rho", 1, 0, 0, 2), &TorusPoint::new(2, &[0, 0]).unwrap()).unwrap()),
        0
    );
}

#[test]
fn products_are_symmetric_and_match_weyl_sum() {
    // Factor pools of total rank <= 5 mixing labels, ranks and lengths.
    let pool = [
        seg("a", 1, 0, 0, 1),
        seg("a", 1, 1, 0, 2),
        seg("b", 2, 1, 0, 1),
        seg("b", 1, 2, 1, 1),
        seg("c", 1, 1, 0, 3),
    ];
    for n in 1..=3u64 {
        for size in 1..=3 {
            for factors in pool.iter().cloned().combinations_with_replacement(size) {
                let rank: usize = factors.iter().map(Segment::rank).sum();
                if rank > 5 {
                    continue;
                }
                let term = ProductTerm::new(factors.clone());
                for x in TorusPoint::all(n, rank) {
                    let fast = germ_term(&term, &x).unwrap();
                    assert_eq!(fast, germ_term_weyl_sum(Kind::Z, &term, &x).unwrap());
                    for order in factors.iter().cloned().permutations(size) {
                        assert_eq!(fast, weyl_sum_in_order(&order, &x), "{x}");
                    }
                }
            }
        }
    }
}

#[test]
fn l_germ_matches_weyl_sum_expansion() {
    for n in 1..=3u64 {
        for (r0, max_m) in [(1, 5), (2, 2)] {
            for m in 1..=max_m {
                for k in 0..n {
                    let s = seg("rho", r0, k, 0, m);
                    for x in TorusPoint::all(n, s.rank()) {
                        let via_elem = germ_element(&tadic_expand_L(&s), &x).unwrap();
                        let fast = germ_L(&s, &x).unwrap();
                        assert_eq!(fast, via_elem);
                        assert_eq!(fast, germ_L_weyl_sum(&s, &x).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn cuspidal_case_is_supported_on_scalars() {
    for n in 1..=4u64 {
        for r0 in 1..=4 {
            for k in 0..n {
                let s = seg("rho", r0, k, 0, 1);
                for x in TorusPoint::all(n, r0) {
                    let l = germ_L(&s, &x).unwrap();
                    assert_eq!(l, germ_Z(&s, &x).unwrap());
                    let e = x.exps()[0];
                    if x.exps().iter().all(|&y| y == e) {
                        assert_eq!(l, CycInt::from_root(n, (k * e) as i64));
                    } else {
                        assert!(l.is_zero());
                    }
                }
            }
        }
    }
}

#[test]
fn rank_mismatch_is_an_error() {
    let s = seg("rho", 2, 0, 0, 2);
    let x = TorusPoint::new(3, &[0, 1, 2]).unwrap();
    assert!(germ_Z(&s, &x).is_err());
    assert!(germ_L(&s, &x).is_err());
    assert!(germ_term(&ProductTerm::single(s), &x).is_err());
}

proptest! {
    #[test]
    fn germs_depend_only_on_the_exponent_multiset(
        n in 1u64..5,
        r0 in 1usize..3,
        m in 1usize..4,
        k in 0u64..5,
        seed in prop::collection::vec(0i64..5, 6),
        perm_seed in any::<u64>(),
    ) {
        let s = seg("rho", r0, k % n, 0, m);
        prop_assume!(s.rank() <= 5);
        let exps: Vec<i64> = seed[..s.rank()].to_vec();
        let mut shuffled = exps.clone();
        // Deterministic shuffle from the seed.
        let mut state = perm_seed;
        for i in (1..shuffled.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            shuffled.swap(i, (state >> 33) as usize % (i + 1));
        }
        let x = TorusPoint::new(n, &exps).unwrap();
        let y = TorusPoint::new(n, &shuffled).unwrap();
        prop_assert_eq!(germ_Z(&s, &x).unwrap(), germ_Z(&s, &y).unwrap());
        prop_assert_eq!(germ_L(&s, &x).unwrap(), germ_L(&s, &y).unwrap());
        prop_assert_eq!(weyl_stabilizer_order(&x), weyl_stabilizer_order(&y));
    }
}
