use metacover::combinat::compositions;
use metacover::segments::{
    jacquet_L_metaplectic, linked, mc_sqrt_classify, s_of_cuspidal_cover, tadic_expand_L, tadic_expand_Z, Endpoint,
};
use metacover::{CoverParams, CuspidalLabel, Error, GrothendieckElement, Kind, ProductTerm, Segment};
use num_bigint::BigInt;
use num_rational::Ratio;
use proptest::prelude::*;

fn label(name: &str, r0: usize, k: u64) -> CuspidalLabel {
    CuspidalLabel::new(name, r0, k).unwrap()
}

fn seg_strategy(max_m: usize) -> impl Strategy<Value = Segment> {
    (1usize..=max_m, -6i64..6, 1i64..4, 1usize..4, 0u64..6)
        .prop_map(|(m, num, den, r0, k)| Segment::with_length(label("rho", r0, k), Ratio::new(num, den), m).unwrap())
}

/// Expansion coefficients recomputed from the composition list alone.
fn expected_expansion(seg: &Segment, kind: Kind) -> GrothendieckElement {
    let m = seg.m();
    let mut out = GrothendieckElement::zero(kind);
    for parts in compositions(m) {
        let mut start = seg.a();
        let mut factors = Vec::new();
        for &p in &parts {
            let end = start + Endpoint::from_integer(p as i64 - 1);
            factors.push(Segment::new(seg.rho().clone(), start, end).unwrap());
            start = end + Endpoint::from_integer(1);
        }
        let sign = if (m - parts.len()).is_multiple_of(2) { 1 } else { -1 };
        out.add_term(ProductTerm::new(factors), BigInt::from(sign));
    }
    out
}

#[test]
fn expansions_are_involutive_up_to_length_six() {
    for m in 1..=6 {
        let s = Segment::with_length(label("rho", 2, 1), 3.into(), m).unwrap();
        let l = tadic_expand_L(&s);
        let z = tadic_expand_Z(&s);
        assert_eq!(l.len(), 1 << (m - 1));
        assert_eq!(z.len(), 1 << (m - 1));
        assert_eq!(l, expected_expansion(&s, Kind::Z));
        assert_eq!(z, expected_expansion(&s, Kind::L));
        assert_eq!(
            l.to_other_basis(),
            GrothendieckElement::basis_element(Kind::L, s.clone())
        );
        assert_eq!(z.to_other_basis(), GrothendieckElement::basis_element(Kind::Z, s));
    }
}

#[test]
fn composition_counts_up_to_ten() {
    for m in 1..=10 {
        let s = Segment::with_length(label("rho", 1, 0), 0.into(), m).unwrap();
        assert_eq!(tadic_expand_L(&s).len(), 1 << (m - 1));
        assert_eq!(tadic_expand_Z(&s).len(), 1 << (m - 1));
    }
}

#[test]
fn products_of_expansions_collect() {
    // L([0,0]) L([1,1]) expanded is Z([0,0]) Z([1,1]) with coefficient 1.
    let s0 = Segment::with_length(label("rho", 1, 0), 0.into(), 1).unwrap();
    let s1 = Segment::with_length(label("rho", 1, 0), 1.into(), 1).unwrap();
    let mut elem = GrothendieckElement::zero(Kind::L);
    elem.add_term(ProductTerm::new(vec![s1.clone(), s0.clone()]), BigInt::from(3));
    let z = elem.to_other_basis();
    assert_eq!(z.len(), 1);
    assert_eq!(z.coefficient(&ProductTerm::new(vec![s0, s1])), BigInt::from(3));
}

#[test]
fn jacquet_support_matches_divisibility() {
    for r in 1..=12usize {
        for m in metacover::combinat::divisors(r as u64) {
            let s = Segment::with_length(label("rho", 1, 0), 0.into(), m as usize).unwrap();
            let nonzero: Vec<usize> = (0..=r)
                .filter(|&l| !jacquet_L_metaplectic(&s, r, l).unwrap().is_zero())
                .collect();
            assert_eq!(nonzero.len(), m as usize + 1, "r={r} m={m}");
            assert!(nonzero.iter().all(|&l| (m as usize * l).is_multiple_of(r)));
        }
    }
}

#[test]
fn classification_rank_accounting() {
    for n in 1..=8u64 {
        for k in 0..n {
            for r0 in 1..=3 {
                for m in 1..=8 {
                    let rho = label("rho", r0, k);
                    let cover = CoverParams::new(r0 * m, n, 0).unwrap();
                    let s = rho.order(n) as usize;
                    match mc_sqrt_classify(&cover, &rho, 0.into(), Endpoint::from_integer(m as i64 - 1)) {
                        Ok(l) => {
                            assert_eq!(m % s, 0);
                            assert_eq!(l.rho_cover_rank(), r0 * s);
                            assert_eq!(r0 * m, l.rho_cover_rank() * l.m_prime);
                            assert_eq!(l.cuspidal, s == m);
                        }
                        Err(e) => {
                            assert_eq!(
                                e,
                                Error::NotMetic {
                                    s: s as u64,
                                    m: m as u64
                                }
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn classification_requires_matching_rank() {
    let cover = CoverParams::new(5, 2, 0).unwrap();
    assert!(mc_sqrt_classify(&cover, &label("rho", 1, 0), 0.into(), 1.into()).is_err());
}

#[test]
fn reducibility_point_is_reduced() {
    assert_eq!(s_of_cuspidal_cover(4, 2).unwrap(), Ratio::new(1, 2));
    assert_eq!(*s_of_cuspidal_cover(6, 4).unwrap().denom(), 3);
    assert!(s_of_cuspidal_cover(0, 1).is_err());
}

proptest! {
    #[test]
    fn segment_text_round_trips(s in seg_strategy(8)) {
        prop_assert_eq!(s.to_string().parse::<Segment>().unwrap(), s);
    }

    #[test]
    fn linkage_is_symmetric_and_irreflexive(a in seg_strategy(5), shift in -6i64..6, m in 1usize..6) {
        let b = Segment::with_length(a.rho().clone(), a.a() + Endpoint::from_integer(shift), m).unwrap();
        prop_assert_eq!(linked(&a, &b), linked(&b, &a));
        prop_assert!(!linked(&a, &a));
        // Brute force on integer points of the common line.
        let pts = |s: &Segment| -> Vec<i64> {
            let start = (s.a() - a.a()).to_integer();
            (start..start + s.m() as i64).collect()
        };
        let (pa, pb) = (pts(&a), pts(&b));
        let mut union: Vec<i64> = pa.iter().chain(&pb).copied().collect();
        union.sort_unstable();
        union.dedup();
        let contiguous = union.windows(2).all(|w| w[1] == w[0] + 1);
        let a_in_b = pa.iter().all(|x| pb.contains(x));
        let b_in_a = pb.iter().all(|x| pa.contains(x));
        prop_assert_eq!(linked(&a, &b), contiguous && !a_in_b && !b_in_a);
    }

    #[test]
    fn expansion_terms_preserve_rank(s in seg_strategy(7)) {
        let l = tadic_expand_L(&s);
        prop_assert_eq!(l.len(), 1 << (s.m() - 1));
        for (term, _) in l.terms() {
            prop_assert_eq!(term.rank(), s.rank());
        }
        prop_assert_eq!(l.to_other_basis(), GrothendieckElement::basis_element(Kind::L, s));
    }
}
