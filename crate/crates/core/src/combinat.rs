//! Small combinatorial helpers shared by the enumeration kernels.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Returns `(p, f)` with `q = p^f`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let (mut f, mut rest) = (0, q);
    while rest % p == 0 {
        rest /= p;
        f += 1;
    }
    Some((p, f))
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n).into_iter().fold(n, |acc, p| acc / p * (p - 1))
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All compositions of `m` (ordered sequences of positive parts), in
/// lexicographic order of the part sequence. There are `2^(m-1)` of them
/// for `m >= 1`.
pub fn compositions(m: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in 1..=rest {
            prefix.push(part);
            go(rest - part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        go(m, &mut Vec::new(), &mut out);
    }
    out
}

/// All multisets of size `size` drawn from `0..n`, as count vectors of
/// length `n`.
pub fn multisets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(idx: usize, rest: usize, counts: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if idx + 1 == counts.len() {
            counts[idx] = rest;
            out.push(counts.clone());
            counts[idx] = 0;
            return;
        }
        for take in (0..=rest).rev() {
            counts[idx] = take;
            go(idx + 1, rest - take, counts, out);
        }
        counts[idx] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if size == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(0, size, &mut vec![0; n], &mut out);
    out
}
