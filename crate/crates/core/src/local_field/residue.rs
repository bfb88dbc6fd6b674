//! Concrete model of the residue field F_q with a fixed multiplicative
//! generator, stored as discrete log/exp tables.
//!
//! Elements are packed integers: for `q = p^f` the element
//! `c_0 + c_1 X + ... + c_{f-1} X^{f-1}` of `F_p[X]/(P)` is stored as
//! `c_0 + c_1 p + ... + c_{f-1} p^{f-1}`. For `f = 1` this is the residue
//! itself.

use crate::combinat::prime_factors;
use crate::error::{Error, Result};

/// Tables are built eagerly, so keep `q` modest.
pub const MAX_TABLE_Q: u64 = 1 << 20;

#[derive(Debug, Clone)]
pub struct ResidueField {
    p: u64,
    f: u32,
    q: u64,
    /// Monic modulus, low degree first (length f + 1). `[-g, 1]` when f = 1.
    modulus: Vec<u64>,
    exp: Vec<u64>,
    log: Vec<u64>,
}

impl ResidueField {
    /// Builds F_{p^f} with its canonical generator: the smallest primitive
    /// root when `f = 1`, otherwise the class of `X` modulo the first monic
    /// primitive polynomial in packed-coefficient order.
    pub fn new(p: u64, f: u32) -> Result<Self> {
        let q = p
            .checked_pow(f)
            .filter(|&q| q <= MAX_TABLE_Q)
            .ok_or_else(|| Error::InvalidModel(format!("residue field {p}^{f} too large to tabulate")))?;
        let modulus = if f == 1 {
            let g = smallest_primitive_root(p);
            vec![(p - g) % p, 1]
        } else {
            first_primitive_polynomial(p, f)
        };
        let exp = power_table(p, f, &modulus);
        debug_assert_eq!(exp.len() as u64, q - 1);
        let mut log = vec![u64::MAX; q as usize];
        for (i, &x) in exp.iter().enumerate() {
            log[x as usize] = i as u64;
        }
        Ok(Self {
            p,
            f,
            q,
            modulus,
            exp,
            log,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn one(&self) -> u64 {
        1
    }

    /// The canonical generator as a packed element.
    pub fn generator(&self) -> u64 {
        self.exp[1 % self.exp.len()]
    }

    /// `g^k` for the canonical generator `g`.
    pub fn pow_generator(&self, k: u64) -> u64 {
        self.exp[(k % (self.q - 1)) as usize]
    }

    /// Discrete log base the canonical generator; `None` for zero or
    /// out-of-range input.
    pub fn log(&self, x: u64) -> Option<u64> {
        match self.log.get(x as usize) {
            Some(&l) if l != u64::MAX => Some(l),
            _ => None,
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match (self.log(a), self.log(b)) {
            (Some(la), Some(lb)) => self.pow_generator(la + lb),
            _ => 0,
        }
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        self.log(a).map(|l| self.pow_generator(self.q - 1 - l))
    }

    pub fn pow(&self, a: u64, k: i64) -> Option<u64> {
        let l = self.log(a)? as i128;
        let order = (self.q - 1) as i128;
        Some(self.pow_generator((l * k as i128).rem_euclid(order) as u64))
    }

    /// `-1` as a packed element.
    pub fn minus_one(&self) -> u64 {
        // Negate each base-p digit of 1.
        if self.p == 2 {
            1
        } else {
            self.p - 1
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: u64) -> Option<u64> {
        let l = self.log(a)?;
        let qm1 = self.q - 1;
        Some(qm1 / num_integer::gcd(l, qm1))
    }
}

fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    let m = m as u128;
    let (mut acc, mut b) = (1u128, base as u128 % m);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

fn smallest_primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&l| mod_pow(g, (p - 1) / l, p) != 1))
        .expect("every prime has a primitive root")
}

fn unpack(x: u64, p: u64, f: u32) -> Vec<u64> {
    let mut digits = Vec::with_capacity(f as usize);
    let mut rest = x;
    for _ in 0..f {
        digits.push(rest % p);
        rest /= p;
    }
    digits
}

fn pack(digits: &[u64], p: u64) -> u64 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Multiplies a packed element by the generator (the class of `X`, or `g`
/// when f = 1) and reduces.
fn times_generator(x: u64, p: u64, f: u32, modulus: &[u64]) -> u64 {
    if f == 1 {
        // modulus = [-g, 1]
        let g = (p - modulus[0]) % p;
        return ((x as u128 * g as u128) % p as u128) as u64;
    }
    let f = f as usize;
    let mut digits = unpack(x, p, f as u32);
    let top = digits[f - 1];
    for i in (1..f).rev() {
        digits[i] = digits[i - 1];
    }
    digits[0] = 0;
    // X^f = -(m_0 + ... + m_{f-1} X^{f-1})
    for (i, d) in digits.iter_mut().enumerate() {
        *d = (*d + (p - modulus[i]) % p * top) % p;
    }
    pack(&digits, p)
}

fn power_table(p: u64, f: u32, modulus: &[u64]) -> Vec<u64> {
    let q = p.pow(f);
    let mut out = Vec::with_capacity((q - 1) as usize);
    let mut x = 1u64;
    loop {
        out.push(x);
        x = times_generator(x, p, f, modulus);
        if x == 1 || out.len() as u64 > q {
            break;
        }
    }
    out
}

fn first_primitive_polynomial(p: u64, f: u32) -> Vec<u64> {
    let q = p.pow(f);
    // Candidates: constant term nonzero, packed order on (m_0, ..., m_{f-1}).
    for packed in 0..q {
        let mut modulus = unpack(packed, p, f);
        if modulus[0] == 0 {
            continue;
        }
        modulus.push(1);
        if power_table(p, f, &modulus).len() as u64 == q - 1 {
            return modulus;
        }
    }
    unreachable!("a primitive polynomial of every degree exists")
}
