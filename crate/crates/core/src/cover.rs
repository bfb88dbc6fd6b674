//! Arithmetic of the Kazhdan-Patterson cover `G~_r` of `GL_r(F)`: the gcd
//! invariants `d_r` and `d'_r`, the center, the block multiplicities of
//! the metaplectic tensor product, and the 2-cocycle on the diagonal torus.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::local_field::{hilbert_symbol, is_nth_power, FieldClass, LocalFieldModel, RootOfUnity};

/// `(r, n, c)` with `c` stored mod `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoverParams {
    r: usize,
    n: u64,
    c: u64,
}

impl CoverParams {
    pub fn new(r: usize, n: u64, c: i64) -> Result<Self> {
        if r == 0 {
            return Err(Error::invalid("rank r must be positive"));
        }
        if n == 0 {
            return Err(Error::invalid("cover degree n must be positive"));
        }
        Ok(Self {
            r,
            n,
            c: c.rem_euclid(n as i64) as u64,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    /// The cover of `GL_{r'}` with the same `n` and `c`.
    pub fn with_rank(&self, r: usize) -> Result<Self> {
        Self::new(r, self.n, self.c as i64)
    }

    /// `2rc + r - 1` reduced mod `n`: `lambda I_r` is central iff
    /// `lambda` raised to this power is an `n`-th power.
    pub fn center_exponent(&self) -> u64 {
        let (r, n, c) = (self.r as u128, self.n as u128, self.c as u128);
        ((2 * r * c + r - 1) % n) as u64
    }

    /// `d_r = gcd(n, 2rc + r - 1)`.
    pub fn d_r(&self) -> u64 {
        self.n.gcd(&self.center_exponent())
    }

    /// `d'_r = gcd(n, r)`.
    pub fn d_prime_r(&self) -> u64 {
        self.n.gcd(&(self.r as u64))
    }
}

impl fmt::Display for CoverParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(r={}, n={}, c={})", self.r, self.n, self.c)
    }
}

/// A composition `(r_1, ..., r_k)`, indexing a standard Levi subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::invalid("a composition needs at least one part, all positive"));
        }
        Ok(Self { parts })
    }

    /// `(1, ..., 1)`: the diagonal torus.
    pub fn torus(r: usize) -> Self {
        Self {
            parts: vec![1; r.max(1)],
        }
    }

    /// Every composition of `r`.
    pub fn all(r: usize) -> Vec<Self> {
        crate::combinat::compositions(r)
            .into_iter()
            .map(|parts| Self { parts })
            .collect()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    fn check_against(&self, cover: &CoverParams) -> Result<()> {
        if self.total() != cover.r {
            return Err(Error::invalid(format!(
                "composition {self} sums to {}, cover has r = {}",
                self.total(),
                cover.r
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim_matches(|c| c == '(' || c == ')')
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(format!("bad part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// `diag(x_1, ..., x_r)` with each `x_i` a field class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusClass {
    entries: Vec<FieldClass>,
}

impl TorusClass {
    pub fn new(entries: Vec<FieldClass>) -> Self {
        Self { entries }
    }

    /// `lambda I_r`.
    pub fn scalar(lambda: FieldClass, r: usize) -> Self {
        Self {
            entries: vec![lambda; r],
        }
    }

    /// `diag(1, ..., x, ..., 1)` with `x` at position `i`.
    pub fn single(model: &LocalFieldModel, r: usize, i: usize, x: FieldClass) -> Self {
        let mut entries = vec![model.one(); r];
        entries[i] = x;
        Self { entries }
    }

    pub fn entries(&self) -> &[FieldClass] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn mul(&self, model: &LocalFieldModel, other: &Self) -> Result<Self> {
        check_len(self.len(), other.len())?;
        Ok(Self {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| model.mul(a, b))
                .collect(),
        })
    }

    /// The generators `diag(.., pi, ..)` and `diag(.., g, ..)` of the class
    /// torus.
    pub fn generators(model: &LocalFieldModel, r: usize) -> Vec<Self> {
        (0..r)
            .flat_map(|i| {
                [model.uniformizer(), model.unit_generator()]
                    .into_iter()
                    .map(move |x| Self::single(model, r, i, x))
            })
            .collect()
    }
}

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::LengthMismatch { expected, got });
    }
    Ok(())
}

/// `lambda I_r` lies in the image of the center of `G~_r`.
pub fn center_membership(cover: &CoverParams, model: &LocalFieldModel, lambda: FieldClass) -> Result<bool> {
    model.check_degree(cover.n)?;
    let power = model.pow(lambda, cover.center_exponent() as i64);
    is_nth_power(model, power, cover.n)
}

/// `sigma^(c)(x, y)` on the diagonal torus: block restriction with all
/// blocks of size one, and `(x, y)^c` on each `GL_1`.
pub fn torus_cocycle(
    cover: &CoverParams,
    model: &LocalFieldModel,
    x: &TorusClass,
    y: &TorusClass,
) -> Result<RootOfUnity> {
    model.check_degree(cover.n)?;
    check_len(cover.r, x.len())?;
    check_len(cover.r, y.len())?;
    let n = cover.n as i128;
    let c = cover.c as i128;
    let h = |a: FieldClass, b: FieldClass| hilbert_symbol(model, a, b).exponent() as i128;
    let (xs, ys) = (x.entries(), y.entries());
    let mut exponent = 0i128;
    for i in 0..cover.r {
        exponent += c * h(xs[i], ys[i]);
        for j in i + 1..cover.r {
            exponent += (c + 1) * h(xs[i], ys[j]) + c * h(xs[j], ys[i]);
        }
        exponent %= n;
    }
    Ok(RootOfUnity::new(cover.n, exponent as i64))
}

/// The commutator `[s(a), s(b)] = sigma(a, b) sigma(b, a)^{-1}` of torus
/// lifts.
pub fn commutator_torus(
    cover: &CoverParams,
    model: &LocalFieldModel,
    a: &TorusClass,
    b: &TorusClass,
) -> Result<RootOfUnity> {
    let ab = torus_cocycle(cover, model, a, b)?;
    let ba = torus_cocycle(cover, model, b, a)?;
    Ok(ab.mul(ba.inv()))
}

/// `n_beta`, `m_beta` and `M_beta` for one composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multiplicities {
    pub n_beta: BigInt,
    pub m_beta: BigInt,
    pub big_m_beta: BigInt,
}

fn tame_d_f(model: &LocalFieldModel, x: &BigInt) -> Result<BigInt> {
    if (x % model.p()).is_zero() {
        return Err(Error::WildCase {
            p: model.p(),
            m: u64::try_from(x).unwrap_or(u64::MAX),
        });
    }
    Ok(x.clone())
}

fn exact_ratio(what: &'static str, num: BigInt, den: BigInt) -> Result<BigInt> {
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() || q <= BigInt::zero() {
        return Err(Error::NonIntegral {
            what,
            numerator: num.to_string(),
            denominator: den.to_string(),
        });
    }
    Ok(q)
}

struct BlockData {
    k: u32,
    d_r: BigInt,
    prod_d_prime: BigInt,
    prod_d: BigInt,
}

fn block_data(cover: &CoverParams, model: &LocalFieldModel, beta: &Composition) -> Result<BlockData> {
    model.check_degree(cover.n)?;
    beta.check_against(cover)?;
    let mut prod_d_prime = BigInt::one();
    let mut prod_d = BigInt::one();
    for &ri in beta.parts() {
        let block = cover.with_rank(ri)?;
        prod_d_prime *= block.d_prime_r();
        prod_d *= block.d_r();
    }
    Ok(BlockData {
        k: beta.len() as u32,
        d_r: BigInt::from(cover.d_r()),
        prod_d_prime,
        prod_d,
    })
}

/// `n_beta = d_F(n^k) / d_F(d_r prod d'_{r_i})`.
pub fn n_beta(cover: &CoverParams, model: &LocalFieldModel, beta: &Composition) -> Result<BigInt> {
    let b = block_data(cover, model, beta)?;
    let n = BigInt::from(cover.n);
    exact_ratio(
        "n_beta",
        tame_d_f(model, &n.pow(b.k))?,
        tame_d_f(model, &(&b.d_r * &b.prod_d_prime))?,
    )
}

/// `m_beta = d_F(n^k prod d'_{r_i}) / d_F(d_r)`.
pub fn m_beta(cover: &CoverParams, model: &LocalFieldModel, beta: &Composition) -> Result<BigInt> {
    let b = block_data(cover, model, beta)?;
    let n = BigInt::from(cover.n);
    exact_ratio(
        "m_beta",
        tame_d_f(model, &(n.pow(b.k) * &b.prod_d_prime))?,
        tame_d_f(model, &b.d_r)?,
    )
}

/// `M_beta = d_F(n^{2k}) / d_F(d_r prod d_{r_i})`.
pub fn big_m_beta(cover: &CoverParams, model: &LocalFieldModel, beta: &Composition) -> Result<BigInt> {
    let b = block_data(cover, model, beta)?;
    let n = BigInt::from(cover.n);
    exact_ratio(
        "M_beta",
        tame_d_f(model, &n.pow(2 * b.k))?,
        tame_d_f(model, &(&b.d_r * &b.prod_d))?,
    )
}

pub fn multiplicities(cover: &CoverParams, model: &LocalFieldModel, beta: &Composition) -> Result<Multiplicities> {
    Ok(Multiplicities {
        n_beta: n_beta(cover, model, beta)?,
        m_beta: m_beta(cover, model, beta)?,
        big_m_beta: big_m_beta(cover, model, beta)?,
    })
}

/// The torus case of the genuine-character lift needs
/// `n_{(1,...,1)} = n^r / d_r`.
pub fn torus_lift_multiplicity_check(cover: &CoverParams, model: &LocalFieldModel) -> Result<bool> {
    let torus = Composition::torus(cover.r);
    let got = n_beta(cover, model, &torus)?;
    let expected = BigInt::from(cover.n).pow(cover.r as u32) / BigInt::from(cover.d_r());
    Ok(got == expected)
}
