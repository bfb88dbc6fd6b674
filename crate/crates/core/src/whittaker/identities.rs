//! Checkers for the combinatorial identities behind the closed forms. Each
//! one evaluates the left side by direct enumeration and compares it with
//! the right side.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{binomial, compositions};
use crate::cyclotomic::{CycInt, GroupRing};

fn divides(d: u64, m: u64) -> bool {
    d != 0 && m.is_multiple_of(d)
}

/// `(1/m!) sum over pairwise-distinct (zeta_1..zeta_m) in mu_n^m of
/// prod omega(zeta_j)`, with `omega` of order `s`, equals
/// `(-1)^{(s+1)m/s} C(n/s, m/s)` when `s | m` and 0 otherwise.
///
/// The `m!` orderings of each set of distinct roots contribute equally, so
/// the sum runs over `m`-subsets of `mu_n`.
pub fn check_distinct_tuple_sum(n: u64, s: u64, m: u64) -> bool {
    if !divides(s, n) {
        return false;
    }
    let step = (n / s) as i64;
    let mut lhs = GroupRing::zero(n);
    for subset in (0..n as i64).combinations(m as usize) {
        lhs.add_monomial(step * subset.iter().sum::<i64>(), 1);
    }
    let rhs = if divides(s, m) {
        let sign = if ((s + 1) * (m / s)).is_multiple_of(2) { 1 } else { -1 };
        binomial(n / s, m / s) * sign
    } else {
        BigInt::zero()
    };
    lhs.evaluate() == CycInt::from_integer(n, rhs)
}

fn composition_sum(total: u64, term: impl Fn(u64) -> BigInt) -> BigInt {
    compositions(total as usize)
        .into_iter()
        .map(|parts| {
            parts
                .into_iter()
                .map(|p| {
                    let sign = if p % 2 == 1 { 1 } else { -1 };
                    term(p as u64) * sign
                })
                .product::<BigInt>()
        })
        .sum()
}

/// `sum over compositions (m'_i) of m/s of prod (-1)^{m'_i - 1} C(n/s, m'_i)
/// = C(m/s + n/s - 1, m/s)`.
pub fn check_stars_bars(n: u64, s: u64, m: u64) -> bool {
    if !divides(s, n) || !divides(s, m) {
        return false;
    }
    let (ns, ms) = (n / s, m / s);
    composition_sum(ms, |p| binomial(ns, p)) == binomial(ms + ns - 1, ms)
}

/// `sum over compositions (k_i) of k of prod (-1)^{k_i - 1} C(k_i + n/s - 1, k_i)
/// = C(n/s, k)`.
pub fn check_lz_inversion(n: u64, s: u64, k: u64) -> bool {
    if !divides(s, n) || k == 0 {
        return false;
    }
    let ns = n / s;
    composition_sum(k, |p| binomial(p + ns - 1, p)) == binomial(ns, k)
}

/// `prod_{j=1}^{s} (zeta_0^j X + 1)^{n/s} = ((-1)^{s+1} X^s + 1)^{n/s}` in
/// `Z[zeta_n][X]`, with `zeta_0 = zeta_n^{n/s}` of order `s`.
pub fn check_genfun_poly(n: u64, s: u64) -> bool {
    if !divides(s, n) {
        return false;
    }
    let ns = n / s;
    let step = ns as i64;
    // Coefficients of X^i, each kept in the group ring of mu_n.
    let mut lhs = vec![GroupRing::monomial(n, 0, 1)];
    for j in 1..=s as i64 {
        for _ in 0..ns {
            let mut next = vec![GroupRing::zero(n); lhs.len() + 1];
            for (i, coeff) in lhs.iter().enumerate() {
                next[i].add_assign(coeff);
                next[i + 1].add_assign(&coeff.mul(&GroupRing::monomial(n, step * j, 1)));
            }
            lhs = next;
        }
    }
    let lead = if s % 2 == 1 { BigInt::one() } else { -BigInt::one() };
    let mut rhs = vec![BigInt::zero(); (s * ns + 1) as usize];
    for t in 0..=ns {
        rhs[(t * s) as usize] = binomial(ns, t) * num_traits::pow(lead.clone(), t as usize);
    }
    lhs.len() == rhs.len()
        && lhs
            .iter()
            .zip(&rhs)
            .all(|(l, r)| l.evaluate() == CycInt::from_integer(n, r.clone()))
}

/// One identity check and its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub identity: &'static str,
    pub n: u64,
    pub s: u64,
    /// `m` for the tuple and stars-and-bars checks, `k` for the inversion,
    /// unused (0) for the polynomial identity.
    pub size: u64,
    pub passed: bool,
}

/// Runs all four checkers for every `n <= n_max`, `s | n` and sizes up to
/// `size_max` (restricted to `s | m` for stars-and-bars).
pub fn check_identities(n_max: u64, size_max: u64) -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for s in crate::combinat::divisors(n) {
            out.push(IdentityCheck {
                identity: "genfun_poly",
                n,
                s,
                size: 0,
                passed: check_genfun_poly(n, s),
            });
            for size in 1..=size_max {
                out.push(IdentityCheck {
                    identity: "distinct_tuple_sum",
                    n,
                    s,
                    size,
                    passed: check_distinct_tuple_sum(n, s, size),
                });
                if size % s == 0 {
                    out.push(IdentityCheck {
                        identity: "stars_bars",
                        n,
                        s,
                        size,
                        passed: check_stars_bars(n, s, size),
                    });
                }
                out.push(IdentityCheck {
                    identity: "lz_inversion",
                    n,
                    s,
                    size,
                    passed: check_lz_inversion(n, s, size),
                });
            }
        }
    }
    out
}
