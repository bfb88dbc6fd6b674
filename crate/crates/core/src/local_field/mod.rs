//! The multiplicative group of a tame p-adic field, modulo principal units.
//!
//! An element of `F^x` is recorded by its valuation and the discrete log of
//! its residue with respect to a fixed generator `g` of `F_q^x`. That is all
//! the tame Hilbert symbol, `n`-th power membership and the index
//! `[F^x : F^xm]` ever look at, as long as `gcd(n, p) = 1`.
//!
//! The symbol uses the usual tame formula
//!
//! ```text
//! (x, y)_n = ((-1)^{v(x)v(y)} x^{v(y)} / y^{v(x)} mod p_F)^{(q-1)/n}
//! ```
//!
//! expressed as an exponent of `zeta = g^{(q-1)/n}`. The faithful character
//! `eps` of `mu_n` is fixed as `eps(zeta^k) = zeta_n^k`.
//!
//! Sign convention: this is the symbol itself, not its inverse. A consumer
//! working with the inverse symbol as Steinberg symbol should flip the sign
//! of the cover twist `c`.

mod residue;

pub use residue::{ResidueField, MAX_TABLE_Q};

use std::fmt;
use std::str::FromStr;

use crate::combinat::{is_prime, prime_power};
use crate::error::{Error, Result};

/// `F` with residue field `F_q` (`q = p^f`), together with the cover degree
/// `n`. Construction enforces the tame condition `q = 1 mod n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LocalFieldModel {
    p: u64,
    f: u32,
    q: u64,
    n: u64,
    /// Unit exponents are taken with respect to `g^twist` where `g` is the
    /// canonical generator. Always a unit mod `q - 1`.
    twist: u64,
}

impl LocalFieldModel {
    pub fn from_prime_power(p: u64, f: u32, n: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidModel(format!("{p} is not prime")));
        }
        if f == 0 {
            return Err(Error::InvalidModel("residue degree must be positive".into()));
        }
        if n == 0 {
            return Err(Error::InvalidModel("cover degree must be positive".into()));
        }
        let q = p
            .checked_pow(f)
            .filter(|&q| q < (1 << 62))
            .ok_or_else(|| Error::InvalidModel(format!("{p}^{f} is too large")))?;
        if (q - 1) % n != 0 {
            return Err(Error::WildModel(format!(
                "q = {q} is not 1 mod n = {n}, so mu_n is not contained in F"
            )));
        }
        Ok(Self { p, f, q, n, twist: 1 })
    }

    /// `q` must be a prime power.
    pub fn new(q: u64, n: u64) -> Result<Self> {
        let (p, f) = prime_power(q).ok_or_else(|| Error::InvalidModel(format!("{q} is not a prime power")))?;
        Self::from_prime_power(p, f, n)
    }

    /// The model over the smallest prime power `q = 1 mod n`.
    pub fn smallest_for(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidModel("cover degree must be positive".into()));
        }
        let mut q = n + 1;
        loop {
            if prime_power(q).is_some() {
                return Self::new(q, n);
            }
            q += n;
        }
    }

    /// Same field, but unit exponents measured against `g^u` instead of `g`.
    pub fn with_generator_twist(self, u: u64) -> Result<Self> {
        let order = self.q - 1;
        if num_integer::gcd(u % order.max(1), order) != 1 && order > 1 {
            return Err(Error::invalid(format!("g^{u} does not generate F_{}^x", self.q)));
        }
        Ok(Self {
            twist: if order == 1 { 1 } else { u % order },
            ..self
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

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn generator_twist(&self) -> u64 {
        self.twist
    }

    /// Order of the residue multiplicative group.
    pub fn unit_order(&self) -> u64 {
        self.q - 1
    }

    /// Unit exponent of `-1`: `(q - 1)/2` for odd `q`, `0` in characteristic 2.
    pub fn minus_one_exponent(&self) -> u64 {
        if self.q % 2 == 1 {
            (self.q - 1) / 2
        } else {
            0
        }
    }

    pub fn class(&self, valuation: i64, unit_exponent: i64) -> FieldClass {
        FieldClass {
            valuation,
            unit_exponent: unit_exponent.rem_euclid(self.unit_order() as i64) as u64,
        }
    }

    pub fn one(&self) -> FieldClass {
        self.class(0, 0)
    }

    /// The class of a uniformizer.
    pub fn uniformizer(&self) -> FieldClass {
        self.class(1, 0)
    }

    /// The class of the residue generator.
    pub fn unit_generator(&self) -> FieldClass {
        self.class(0, 1)
    }

    pub fn mul(&self, x: FieldClass, y: FieldClass) -> FieldClass {
        self.class(
            x.valuation + y.valuation,
            x.unit_exponent as i64 + y.unit_exponent as i64,
        )
    }

    pub fn pow(&self, x: FieldClass, k: i64) -> FieldClass {
        let order = self.unit_order() as i128;
        let e = (x.unit_exponent as i128 * k as i128).rem_euclid(order);
        self.class(x.valuation * k, e as i64)
    }

    pub fn inv(&self, x: FieldClass) -> FieldClass {
        self.pow(x, -1)
    }

    /// `-x`.
    pub fn neg(&self, x: FieldClass) -> FieldClass {
        self.mul(x, self.class(0, self.minus_one_exponent() as i64))
    }

    /// Every class with `0 <= v < n`, paired with every unit exponent.
    pub fn classes(&self) -> impl Iterator<Item = FieldClass> + '_ {
        let n = self.n as i64;
        let order = self.unit_order() as i64;
        (0..n).flat_map(move |v| (0..order).map(move |e| self.class(v, e)))
    }

    /// Representatives of `F^x / F^xn`: `(v, e)` with `0 <= v, e < n`.
    pub fn nth_power_classes(&self) -> impl Iterator<Item = FieldClass> + '_ {
        let n = self.n as i64;
        (0..n).flat_map(move |v| (0..n).map(move |e| self.class(v, e)))
    }

    /// Builds the residue field tables for this model.
    pub fn residue_field(&self) -> Result<ResidueField> {
        ResidueField::new(self.p, self.f)
    }

    /// The class of `pi^v * u` for a nonzero packed residue `u`.
    pub fn class_of_residue(&self, field: &ResidueField, valuation: i64, unit: u64) -> Result<FieldClass> {
        let log = field
            .log(unit)
            .ok_or_else(|| Error::invalid(format!("{unit} is not a nonzero residue")))?;
        // log_{g^t}(u) = log_g(u) * t^{-1} mod (q - 1)
        let order = self.unit_order();
        let inv_twist = mod_inverse(self.twist % order.max(1), order).unwrap_or(0);
        let e = (log as u128 * inv_twist as u128 % order.max(1) as u128) as i64;
        Ok(self.class(valuation, e))
    }

    /// The residue of the unit part `g_t^e`, with `g_t = g^twist`.
    pub fn unit_residue(&self, field: &ResidueField, x: FieldClass) -> u64 {
        let order = self.unit_order() as u128;
        let k = x.unit_exponent as u128 * self.twist as u128 % order;
        field.pow_generator(k as u64)
    }

    /// The element of `mu_n` (inside `F_q^x`) denoted by `zeta^k`, where
    /// `zeta = g_t^{(q-1)/n}`.
    pub fn root_residue(&self, field: &ResidueField, root: RootOfUnity) -> u64 {
        let step = self.unit_order() / self.n;
        let x = self.class(0, (root.exponent * step) as i64);
        self.unit_residue(field, x)
    }

    pub(crate) fn check_degree(&self, n: u64) -> Result<()> {
        if n != self.n {
            return Err(Error::invalid(format!(
                "field model is for n = {}, cover has n = {n}",
                self.n
            )));
        }
        Ok(())
    }
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, a as i128);
    while new_r != 0 {
        let quotient = r / new_r;
        (t, new_t) = (new_t, t - quotient * new_t);
        (r, new_r) = (new_r, r - quotient * new_r);
    }
    (r == 1).then(|| t.rem_euclid(m as i128) as u64)
}

impl fmt::Display for LocalFieldModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{};{}", self.p, self.f, self.n)
    }
}

impl FromStr for LocalFieldModel {
    type Err = Error;

    /// `"p^f;n"`, or `"q;n"` with `q` a prime power.
    fn from_str(s: &str) -> Result<Self> {
        let (field, n) = s
            .split_once(';')
            .ok_or_else(|| Error::parse(format!("expected \"p^f;n\", got {s:?}")))?;
        let n: u64 = parse_int(n, "n")?;
        match field.split_once('^') {
            Some((p, f)) => Self::from_prime_power(parse_int(p, "p")?, parse_int(f, "f")?, n),
            None => Self::new(parse_int(field, "q")?, n),
        }
    }
}

fn parse_int<T: FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim().parse().map_err(|_| Error::parse(format!("bad {what}: {s:?}")))
}

/// The coset `pi^v g^e (1 + p_F)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldClass {
    valuation: i64,
    unit_exponent: u64,
}

impl FieldClass {
    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    /// Reduced into `[0, q - 1)`.
    pub fn unit_exponent(&self) -> u64 {
        self.unit_exponent
    }

    /// Parses `"v:e"`; the unit exponent is reduced mod `q - 1` of `model`.
    pub fn parse(s: &str, model: &LocalFieldModel) -> Result<Self> {
        let (v, e) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(format!("expected \"v:e\", got {s:?}")))?;
        Ok(model.class(parse_int(v, "valuation")?, parse_int(e, "unit exponent")?))
    }
}

impl fmt::Display for FieldClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.valuation, self.unit_exponent)
    }
}

/// `zeta^k` in `mu_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootOfUnity {
    exponent: u64,
    n: u64,
}

impl RootOfUnity {
    pub fn new(n: u64, exponent: i64) -> Self {
        Self {
            exponent: exponent.rem_euclid(n as i64) as u64,
            n,
        }
    }

    pub fn one(n: u64) -> Self {
        Self::new(n, 0)
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        Self::new(self.n, (self.exponent + other.exponent) as i64)
    }

    pub fn inv(self) -> Self {
        Self::new(self.n, -(self.exponent as i64))
    }

    pub fn pow(self, k: i64) -> Self {
        let e = (self.exponent as i128 * k as i128).rem_euclid(self.n as i128);
        Self::new(self.n, e as i64)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zeta_{}^{}", self.n, self.exponent)
    }
}

/// The tame `n`-th order Hilbert symbol as an exponent of `zeta`.
pub fn hilbert_symbol(model: &LocalFieldModel, x: FieldClass, y: FieldClass) -> RootOfUnity {
    let n = model.n as i128;
    let (vx, vy) = (x.valuation as i128, y.valuation as i128);
    let (ex, ey) = (x.unit_exponent as i128, y.unit_exponent as i128);
    let e_minus_one = model.minus_one_exponent() as i128;
    let exponent = (e_minus_one % n) * (vx % n) % n * (vy % n) + (vy % n) * (ex % n) - (vx % n) * (ey % n);
    RootOfUnity::new(model.n, exponent.rem_euclid(n) as i64)
}

/// Whether `x` lies in `F^xm`. Requires `m | n`, which makes the answer
/// visible on class data.
pub fn is_nth_power(model: &LocalFieldModel, x: FieldClass, m: u64) -> Result<bool> {
    if m == 0 || !model.n.is_multiple_of(m) {
        return Err(Error::PowerNotDividingDegree { m, n: model.n });
    }
    let m = m as i64;
    Ok(x.valuation.rem_euclid(m) == 0 && x.unit_exponent.is_multiple_of(m as u64))
}

/// `d_F(m) = m |m|^{-1/2}`, which is `m` in the tame range `gcd(m, p) = 1`.
pub fn d_f(model: &LocalFieldModel, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::invalid("d_F needs a positive argument"));
    }
    if m.is_multiple_of(model.p) {
        return Err(Error::WildCase { p: model.p, m });
    }
    Ok(m)
}

/// `[F^x : F^xm] = d_F(m)^2` for `m | n`.
pub fn index_power_subgroup(model: &LocalFieldModel, m: u64) -> Result<u64> {
    if m == 0 || !model.n.is_multiple_of(m) {
        return Err(Error::PowerNotDividingDegree { m, n: model.n });
    }
    let d = d_f(model, m)?;
    Ok(d * d)
}
