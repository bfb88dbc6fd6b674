//! Exact arithmetic in `Z[zeta_n] = Z[X]/(Phi_n)`.
//!
//! [`CycInt`] stores the canonical representative of degree `< phi(n)`.
//! [`GroupRing`] is the group ring `Z[Z/n]`, which the enumeration kernels
//! accumulate into before a single evaluation into `Z[zeta_n]`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::combinat::divisors;
use crate::error::{Error, Result};

/// `Phi_n`, low degree first, obtained by dividing `X^n - 1` by `Phi_d` for
/// every proper divisor `d` of `n`.
pub fn phi_n(n: u64) -> Vec<BigInt> {
    assert!(n > 0, "phi_n: n must be positive");
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = BigInt::from(-1);
    poly[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d != n {
            poly = div_exact_monic(&poly, &tables(d).phi);
        }
    }
    poly
}

/// Quotient of `a` by the monic `b`; the remainder must vanish.
fn div_exact_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for i in (0..quot.len()).rev() {
        let lead = rem[i + db].clone();
        if lead.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &lead * bj;
        }
        quot[i] = lead;
    }
    assert!(rem.iter().all(Zero::is_zero), "cyclotomic division left a remainder");
    quot
}

/// Reduces an arbitrary integer polynomial modulo the monic `m`.
fn reduce_monic(mut poly: Vec<BigInt>, m: &[BigInt]) -> Vec<BigInt> {
    let dm = m.len() - 1;
    if poly.len() > dm {
        for i in (dm..poly.len()).rev() {
            let lead = std::mem::take(&mut poly[i]);
            if lead.is_zero() {
                continue;
            }
            for (j, mj) in m[..dm].iter().enumerate() {
                poly[i - dm + j] -= &lead * mj;
            }
        }
    }
    poly.resize(dm, BigInt::zero());
    poly
}

struct Tables {
    phi: Vec<BigInt>,
    /// Canonical form of `zeta_n^j` for `j in 0..n`.
    roots: Vec<Vec<BigInt>>,
}

fn tables(n: u64) -> Arc<Tables> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Tables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().expect("cyclotomic cache poisoned").get(&n) {
        return t.clone();
    }
    let phi = if n == 1 {
        vec![BigInt::from(-1), BigInt::one()]
    } else {
        phi_n(n)
    };
    let degree = phi.len() - 1;
    let roots = (0..n as usize)
        .map(|j| {
            let mut mono = vec![BigInt::zero(); j.max(degree) + 1];
            mono[j] = BigInt::one();
            reduce_monic(mono, &phi)
        })
        .collect();
    let t = Arc::new(Tables { phi, roots });
    cache
        .write()
        .expect("cyclotomic cache poisoned")
        .entry(n)
        .or_insert(t)
        .clone()
}

/// An element of `Z[zeta_n]` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    n: u64,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    pub fn zero(n: u64) -> Self {
        let degree = tables(n).phi.len() - 1;
        Self {
            n,
            coeffs: vec![BigInt::zero(); degree],
        }
    }

    pub fn one(n: u64) -> Self {
        Self::from_integer(n, 1)
    }

    pub fn from_integer(n: u64, value: impl Into<BigInt>) -> Self {
        let mut out = Self::zero(n);
        out.coeffs[0] = value.into();
        out
    }

    /// `zeta_n^k`.
    pub fn from_root(n: u64, k: i64) -> Self {
        let j = k.rem_euclid(n as i64) as usize;
        Self {
            n,
            coeffs: tables(n).roots[j].clone(),
        }
    }

    /// The image of `zeta_s^j` under `mu_s -> mu_n`, `zeta_s = zeta_n^{n/s}`.
    pub fn from_root_of_order(n: u64, s: u64, j: i64) -> Result<Self> {
        if s == 0 || !n.is_multiple_of(s) {
            return Err(Error::invalid(format!("mu_{s} does not embed in mu_{n}")));
        }
        Ok(Self::from_root(n, j.rem_euclid(s as i64) * (n / s) as i64))
    }

    /// Reduces an integer polynomial in `zeta_n` (low degree first).
    pub fn from_poly(n: u64, poly: Vec<BigInt>) -> Self {
        let t = tables(n);
        Self {
            n,
            coeffs: reduce_monic(poly, &t.phi),
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The integer value when every non-constant coefficient vanishes.
    pub fn is_rational_integer(&self) -> Option<BigInt> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RingMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { n: self.n, coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { n: self.n, coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut prod = vec![BigInt::zero(); self.coeffs.len() * 2];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        Ok(Self::from_poly(self.n, prod))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Division by a nonzero rational integer, exact in `Z[zeta_n]`.
    pub fn div_exact(&self, d: &BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::InexactDivision("division by zero in Z[zeta_n]"));
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::InexactDivision("Z[zeta_n]"));
            }
            coeffs.push(q);
        }
        Ok(Self { n: self.n, coeffs })
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.n), |acc, _| &acc * self)
    }

    /// Human-readable rendering, e.g. `2 - 3*z + z^2` with `z = zeta_n`.
    pub fn pretty(&self) -> String {
        if let Some(v) = self.is_rational_integer() {
            return v.to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            if i == 0 {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycInt({self})")
    }
}

/// Textual form `c0,c1,...;n`.
impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "{};{}", body.join(","), self.n)
    }
}

impl FromStr for CycInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (body, n) = s
            .rsplit_once(';')
            .ok_or_else(|| Error::parse(format!("expected \"c0,c1,...;n\", got {s:?}")))?;
        let n: u64 = n
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Error::parse(format!("bad ring index in {s:?}")))?;
        let poly = body
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::parse(format!("bad coefficient {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_poly(n, poly))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        /// Panics when the operands live in different cyclotomic rings; use
        /// the `checked_*` method to get an error instead.
        impl $trait<&CycInt> for &CycInt {
            type Output = CycInt;
            fn $method(self, rhs: &CycInt) -> CycInt {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait for CycInt {
            type Output = CycInt;
            fn $method(self, rhs: CycInt) -> CycInt {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        -&self
    }
}

/// An element of the group ring `Z[Z/n]`: integer weights on the exponents
/// `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRing {
    n: u64,
    weights: Vec<BigInt>,
}

impl GroupRing {
    pub fn zero(n: u64) -> Self {
        Self {
            n,
            weights: vec![BigInt::zero(); n as usize],
        }
    }

    pub fn monomial(n: u64, k: i64, weight: impl Into<BigInt>) -> Self {
        let mut out = Self::zero(n);
        out.add_monomial(k, weight);
        out
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn weights(&self) -> &[BigInt] {
        &self.weights
    }

    pub fn is_zero(&self) -> bool {
        self.weights.iter().all(Zero::is_zero)
    }

    pub fn add_monomial(&mut self, k: i64, weight: impl Into<BigInt>) {
        let j = k.rem_euclid(self.n as i64) as usize;
        self.weights[j] += weight.into();
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.n, other.n, "group ring mismatch");
        for (a, b) in self.weights.iter_mut().zip(&other.weights) {
            *a += b;
        }
    }

    /// `self += weight * other`.
    pub fn add_scaled(&mut self, other: &Self, weight: &BigInt) {
        assert_eq!(self.n, other.n, "group ring mismatch");
        for (a, b) in self.weights.iter_mut().zip(&other.weights) {
            if !b.is_zero() {
                *a += b * weight;
            }
        }
    }

    /// Convolution product.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "group ring mismatch");
        let n = self.n as usize;
        let mut out = Self::zero(self.n);
        for (i, a) in self.weights.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.weights.iter().enumerate() {
                if !b.is_zero() {
                    out.weights[(i + j) % n] += a * b;
                }
            }
        }
        out
    }

    /// The ring map `Z[Z/n] -> Z[zeta_n]`, `[k] -> zeta_n^k`.
    pub fn evaluate(&self) -> CycInt {
        let t = tables(self.n);
        let mut coeffs = vec![BigInt::zero(); t.phi.len() - 1];
        for (w, root) in self.weights.iter().zip(&t.roots) {
            if w.is_zero() {
                continue;
            }
            for (c, r) in coeffs.iter_mut().zip(root) {
                if !r.is_zero() {
                    *c += w * r;
                }
            }
        }
        CycInt { n: self.n, coeffs }
    }
}
