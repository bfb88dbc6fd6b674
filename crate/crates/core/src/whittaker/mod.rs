//! Dimensions of spaces of Whittaker functionals for genuine representations
//! of Kazhdan-Patterson covers.
//!
//! Closed forms are given for the square-integrable `L(rho~, [0, m'-1])`,
//! for the `L` and `Z` families on a cuspidal `rho~`, and for
//! Bernstein-Zelevinsky products. [`dim_sqrt_bruteforce`] recomputes the
//! square-integrable case from germ values at the torsion points of the
//! torus, independently of the closed form.

mod identities;

pub use identities::{
    check_distinct_tuple_sum, check_genfun_poly, check_identities, check_lz_inversion, check_stars_bars, IdentityCheck,
};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::combinat::{binomial, factorial, multisets};
use crate::cover::CoverParams;
use crate::cyclotomic::GroupRing;
use crate::error::{Error, Result};
use crate::germ::{germ_L, germ_l_group_ring, weyl_discriminant, weyl_stabilizer_order, TorusPoint};
use crate::local_field::LocalFieldModel;
use crate::segments::{CuspidalLabel, Segment};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    ClosedForm,
    BruteForce,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::ClosedForm => "closed_form",
            Provenance::BruteForce => "brute_force",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A computed dimension. `conjectural` is set when the value depends on the
/// germ rule for `Z(rho, [a,b])` outside the range where it is proven.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimResult {
    pub value: BigRational,
    pub provenance: Provenance,
    pub conjectural: bool,
}

impl DimResult {
    fn integral(value: BigInt, provenance: Provenance, conjectural: bool) -> Self {
        Self {
            value: BigRational::from_integer(value),
            provenance,
            conjectural,
        }
    }

    /// The value when it is an integer (always, for results built here).
    pub fn as_integer(&self) -> Option<BigInt> {
        self.value.is_integer().then(|| self.value.to_integer())
    }
}

impl fmt::Display for DimResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}", self.value, self.provenance)?;
        if self.conjectural {
            f.write_str(", conjectural")?;
        }
        f.write_str(")")
    }
}

fn exact_div(what: &'static str, num: BigInt, den: BigInt) -> Result<BigInt> {
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::NonIntegral {
            what,
            numerator: num.to_string(),
            denominator: den.to_string(),
        });
    }
    Ok(q)
}

fn check_divides(what: &str, d: u64, m: u64) -> Result<()> {
    if d == 0 || !m.is_multiple_of(d) {
        return Err(Error::invalid(format!("{what}: {d} does not divide {m}")));
    }
    Ok(())
}

fn check_rank(cover: &CoverParams, expected: usize) -> Result<()> {
    if cover.r() != expected {
        return Err(Error::invalid(format!(
            "cover has r = {}, the representation lives on GL_{expected}",
            cover.r()
        )));
    }
    Ok(())
}

/// `d = C(m/s + n/s - 1, m/s) / d_r` for the square-integrable
/// `pi~` with `mc(pi~) = L(rho, [0, m-1])`, `rho` cuspidal of rank `r0`
/// with `omega_rho|mu_n` of order `s`.
pub fn dim_sqrt_closed(cover: &CoverParams, r0: usize, m: usize, s: u64) -> Result<DimResult> {
    let n = cover.n();
    check_divides("s | n", s, n)?;
    check_divides("s | m", s, m as u64)?;
    check_rank(cover, r0 * m)?;
    let mp = m as u64 / s;
    let value = exact_div("dim_sqrt", binomial(mp + n / s - 1, mp), cover.d_r().into())?;
    Ok(DimResult::integral(
        value,
        Provenance::ClosedForm,
        r0 > 1 && m as u64 > s,
    ))
}

/// `d = C(k + n/s - 1, k) / d_r` for `L(rho~, [0, k-1])` with `rho~` a
/// genuine cuspidal of rank `r0 * s`.
#[allow(non_snake_case)]
pub fn dim_L_closed(cover: &CoverParams, r0: usize, s: u64, k: usize) -> Result<DimResult> {
    let n = cover.n();
    check_divides("s | n", s, n)?;
    check_rank(cover, r0 * s as usize * k)?;
    let value = exact_div("dim_L", binomial(k as u64 + n / s - 1, k as u64), cover.d_r().into())?;
    Ok(DimResult::integral(value, Provenance::ClosedForm, r0 > 1 && k > 1))
}

/// `d = C(n/s, k) / d_r` for `Z(rho~, [0, k-1])`; zero once `k > n/s`.
#[allow(non_snake_case)]
pub fn dim_Z_closed(cover: &CoverParams, r0: usize, s: u64, k: usize) -> Result<DimResult> {
    let n = cover.n();
    check_divides("s | n", s, n)?;
    check_rank(cover, r0 * s as usize * k)?;
    let value = exact_div("dim_Z", binomial(n / s, k as u64), cover.d_r().into())?;
    Ok(DimResult::integral(value, Provenance::ClosedForm, r0 > 1 && k > 1))
}

/// Bernstein-Zelevinsky product of genuine representations of the blocks
/// `G~_{r_i}` with Whittaker dimensions `d_i`:
/// `d = prod_i d_{r_i} d_i / d_r`.
pub fn dim_product(cover: &CoverParams, parts: &[(usize, BigInt)]) -> Result<DimResult> {
    if parts.is_empty() {
        return Err(Error::invalid("a product needs at least one factor"));
    }
    check_rank(cover, parts.iter().map(|(r, _)| r).sum())?;
    let mut num = BigInt::one();
    for (ri, di) in parts {
        num *= BigInt::from(cover.with_rank(*ri)?.d_r()) * di;
    }
    let value = exact_div("dim_product", num, cover.d_r().into())?;
    Ok(DimResult::integral(value, Provenance::ClosedForm, false))
}

fn oracle_setup(
    cover: &CoverParams,
    model: &LocalFieldModel,
    r0: usize,
    m: usize,
    label: &CuspidalLabel,
) -> Result<Segment> {
    if model.n() != cover.n() {
        return Err(Error::invalid(format!(
            "model has n = {}, cover has n = {}",
            model.n(),
            cover.n()
        )));
    }
    if label.r0() != r0 {
        return Err(Error::invalid(format!("label has r0 = {}, expected {r0}", label.r0())));
    }
    check_rank(cover, r0 * m)?;
    let s = label.order(cover.n());
    if !(m as u64).is_multiple_of(s) {
        return Err(Error::NotMetic { s, m: m as u64 });
    }
    let seg = Segment::with_length(label.clone(), 0.into(), m)?;
    let origin = TorusPoint::new(cover.n(), &vec![0; cover.r()])?;
    weyl_discriminant(model, &origin)?;
    Ok(seg)
}

fn finish_oracle(cover: &CoverParams, total: &GroupRing, r0: usize, m: usize) -> Result<DimResult> {
    let total = total.evaluate();
    let total = total.is_rational_integer().ok_or_else(|| Error::NonIntegral {
        what: "oracle character sum",
        numerator: total.pretty(),
        denominator: "1".into(),
    })?;
    let den = BigInt::from(cover.d_r()) * factorial(cover.r() as u64);
    let value = exact_div("oracle dimension", total, den)?;
    Ok(DimResult::integral(value, Provenance::BruteForce, r0 > 1 && m > 1))
}

/// `d = (1 / (d_r r!)) sum_{x in mu_n^r} |W(G_x, T)| c_L(x)`, computed one
/// exponent multiset at a time: each multiset `M` stands for `r!/|W(G_x,T)|`
/// tuples, so it contributes `r! c_L(M)`.
pub fn dim_sqrt_bruteforce(
    cover: &CoverParams,
    model: &LocalFieldModel,
    r0: usize,
    m: usize,
    label: &CuspidalLabel,
) -> Result<DimResult> {
    let seg = oracle_setup(cover, model, r0, m, label)?;
    let n = cover.n();
    let sum = multisets(n as usize, cover.r())
        .into_par_iter()
        .map(|counts| germ_l_group_ring(&seg, &counts))
        .reduce(
            || GroupRing::zero(n),
            |mut a, b| {
                a.add_assign(&b);
                a
            },
        );
    let mut total = GroupRing::zero(n);
    total.add_scaled(&sum, &factorial(cover.r() as u64));
    finish_oracle(cover, &total, r0, m)
}

/// [`dim_sqrt_bruteforce`] summed over all `n^r` tuples, one germ
/// evaluation per tuple.
pub fn dim_sqrt_bruteforce_tuples(
    cover: &CoverParams,
    model: &LocalFieldModel,
    r0: usize,
    m: usize,
    label: &CuspidalLabel,
) -> Result<DimResult> {
    let seg = oracle_setup(cover, model, r0, m, label)?;
    let n = cover.n();
    let mut total = GroupRing::zero(n);
    for x in TorusPoint::all(n, cover.r()) {
        let value = germ_L(&seg, &x)?.scale(&weyl_stabilizer_order(&x));
        for (k, c) in value.coeffs().iter().enumerate() {
            total.add_monomial(k as i64, c.clone());
        }
    }
    finish_oracle(cover, &total, r0, m)
}

/// The cuspidal label used for an oracle run with character order `s`:
/// exponent `k = n/s`, so `omega(zeta^j) = zeta_n^{(n/s) j}`.
pub fn label_of_order(n: u64, r0: usize, s: u64) -> Result<CuspidalLabel> {
    check_divides("s | n", s, n)?;
    CuspidalLabel::new("rho", r0, (n / s) % n)
}

/// One comparison of the oracle with the closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleRecord {
    pub q: u64,
    pub n: u64,
    pub c: u64,
    pub r0: usize,
    pub m: usize,
    pub s: u64,
    pub closed: DimResult,
    pub brute: DimResult,
}

impl OracleRecord {
    pub fn agrees(&self) -> bool {
        self.closed.value == self.brute.value
    }
}

/// Parameter box for [`oracle_sweep`]: every `n <= n_max`, `c` in
/// `c_values`, `r0 <= r0_max`, `m <= m_max`, `s | gcd(n, m)` with
/// `r0 m <= r_max`, on the smallest tame field for each `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRange {
    pub n_max: u64,
    pub c_values: Vec<u64>,
    pub r0_max: usize,
    pub m_max: usize,
    pub r_max: usize,
}

impl SweepRange {
    pub fn tuples(&self) -> Vec<(u64, u64, usize, usize, u64)> {
        let mut out = Vec::new();
        for n in 1..=self.n_max {
            for &c in &self.c_values {
                for r0 in 1..=self.r0_max {
                    for m in 1..=self.m_max {
                        if r0 * m > self.r_max {
                            continue;
                        }
                        for s in crate::combinat::divisors(n.gcd(&(m as u64))) {
                            out.push((n, c, r0, m, s));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Compares [`dim_sqrt_bruteforce`] with [`dim_sqrt_closed`] on every
/// tuple of the range, in parallel.
pub fn oracle_sweep(range: &SweepRange) -> Result<Vec<OracleRecord>> {
    range
        .tuples()
        .into_par_iter()
        .map(|(n, c, r0, m, s)| {
            let model = LocalFieldModel::smallest_for(n)?;
            let cover = CoverParams::new(r0 * m, n, c as i64)?;
            let label = label_of_order(n, r0, s)?;
            Ok(OracleRecord {
                q: model.q(),
                n,
                c: cover.c(),
                r0,
                m,
                s,
                closed: dim_sqrt_closed(&cover, r0, m, s)?,
                brute: dim_sqrt_bruteforce(&cover, &model, r0, m, &label)?,
            })
        })
        .collect()
}
