//! Harish-Chandra germ values `c_pi(x)` at torsion points
//! `x = diag(zeta^{e_1}, ..., zeta^{e_r})` of the diagonal torus.
//!
//! `Z(rho, [a,b])` is evaluated by the rule: `c_Z(x)` vanishes unless `x` is
//! conjugate to `diag(zeta'_1 I_{r0}, ..., zeta'_m I_{r0})` with the
//! `zeta'_i` pairwise different, in which case it is
//! `omega_rho(zeta'_1) ... omega_rho(zeta'_m)`. This is proven for `r0 = 1`
//! and for cuspidal segments (`m = 1`); elsewhere it is conjectural, see
//! [`germ_z_is_conjectural`]. Products are evaluated by distributing the
//! exponent multiset of `x` over the factors, and `L(rho, [a,b])` through
//! its determinantal expansion.
//!
//! Values are computed in the group ring of `mu_n` and reduced to `Z[zeta_n]`
//! at the end.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::factorial;
use crate::cyclotomic::{CycInt, GroupRing};
use crate::error::{Error, Result};
use crate::local_field::LocalFieldModel;
use crate::segments::{tadic_expand_L, GrothendieckElement, Kind, ProductTerm, Segment};

/// `diag(zeta^{e_1}, ..., zeta^{e_r})` with `zeta` the distinguished
/// generator of `mu_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusPoint {
    n: u64,
    exps: Vec<u64>,
}

impl TorusPoint {
    pub fn new(n: u64, exps: &[i64]) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("n must be positive"));
        }
        let exps = exps.iter().map(|&e| e.rem_euclid(n as i64) as u64).collect();
        Ok(Self { n, exps })
    }

    /// The sorted point with `counts[e]` entries equal to `zeta^e`.
    pub fn from_counts(counts: &[usize]) -> Self {
        let exps = counts
            .iter()
            .enumerate()
            .flat_map(|(e, &c)| std::iter::repeat_n(e as u64, c))
            .collect();
        Self {
            n: counts.len() as u64,
            exps,
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn exps(&self) -> &[u64] {
        &self.exps
    }

    pub fn rank(&self) -> usize {
        self.exps.len()
    }

    /// Multiplicity of each exponent `0..n`.
    pub fn counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n as usize];
        for &e in &self.exps {
            counts[e as usize] += 1;
        }
        counts
    }

    /// Every point of `mu_n^r`, in lexicographic order.
    pub fn all(n: u64, r: usize) -> impl Iterator<Item = Self> {
        (0..r)
            .map(|_| 0..n)
            .multi_cartesian_product()
            .map(move |exps| Self { n, exps })
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps: Vec<String> = self.exps.iter().map(ToString::to_string).collect();
        write!(f, "({});{}", exps.join(","), self.n)
    }
}

impl FromStr for TorusPoint {
    type Err = Error;

    /// `e1,e2,...;n`.
    fn from_str(s: &str) -> Result<Self> {
        let (exps, n) = s
            .split_once(';')
            .ok_or_else(|| Error::parse(format!("expected e1,e2,...;n, got {s:?}")))?;
        let n = n.trim().parse().map_err(|_| Error::parse(format!("bad n in {s:?}")))?;
        Self::new(n, &parse_exponents(exps)?)
    }
}

/// Parses `e1,e2,...` (parentheses optional).
pub fn parse_exponents(s: &str) -> Result<Vec<i64>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|e| {
            e.trim()
                .parse()
                .map_err(|_| Error::parse(format!("bad exponent {e:?}")))
        })
        .collect()
}

/// `|W(G_x, T)| = prod_zeta mult_x(zeta)!`.
pub fn weyl_stabilizer_order(x: &TorusPoint) -> BigInt {
    stabilizer(&x.counts())
}

fn stabilizer(counts: &[usize]) -> BigInt {
    counts.iter().map(|&c| factorial(c as u64)).product()
}

/// The Weyl discriminant `Delta^G(x)` at a torsion point. In the tame case
/// distinct `mu_n` exponents reduce to distinct residues, so it is 1; the
/// model is passed to pin that assumption to a tame field with matching `n`.
pub fn weyl_discriminant(model: &LocalFieldModel, x: &TorusPoint) -> Result<i64> {
    if model.n() != x.n {
        return Err(Error::invalid(format!(
            "torus point lives in mu_{}, model has n = {}",
            x.n,
            model.n()
        )));
    }
    if !(model.q() - 1).is_multiple_of(x.n) {
        return Err(Error::WildModel(format!("{model}")));
    }
    Ok(1)
}

/// Whether evaluating `Z(seg)` uses the unproven part of the rule.
pub fn germ_z_is_conjectural(seg: &Segment) -> bool {
    seg.rho().r0() > 1 && seg.m() > 1
}

fn check_rank(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::LengthMismatch { expected, got });
    }
    Ok(())
}

/// Exponent of `c_Z(seg)` at the point with multiplicities `counts`, or
/// `None` when the value is zero.
fn z_exponent(seg: &Segment, counts: &[usize]) -> Option<u64> {
    let (r0, m) = (seg.rho().r0(), seg.m());
    let n = counts.len() as u64;
    let mut support = 0;
    let mut sum = 0u64;
    for (e, &c) in counts.iter().enumerate() {
        match c {
            0 => {}
            c if c == r0 => {
                support += 1;
                sum += e as u64;
            }
            _ => return None,
        }
    }
    (support == m).then(|| (seg.rho().k() % n) * (sum % n) % n)
}

fn basis_value(kind: Kind, seg: &Segment, counts: &[usize]) -> GroupRing {
    let n = counts.len() as u64;
    match kind {
        Kind::Z => match z_exponent(seg, counts) {
            Some(e) => GroupRing::monomial(n, e as i64, 1),
            None => GroupRing::zero(n),
        },
        Kind::L => {
            let mut out = GroupRing::zero(n);
            for (term, coeff) in tadic_expand_L(seg).terms() {
                out.add_scaled(&term_value(Kind::Z, term.factors(), counts), coeff);
            }
            out
        }
    }
}

/// Sub-multisets of `counts` of the given size, as count vectors.
fn sub_multisets(counts: &[usize], size: usize) -> Vec<Vec<usize>> {
    fn go(counts: &[usize], idx: usize, rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if idx == counts.len() {
            return;
        }
        for take in (0..=counts[idx].min(rest)).rev() {
            cur[idx] = take;
            go(counts, idx + 1, rest - take, cur, out);
        }
        cur[idx] = 0;
    }
    let mut out = Vec::new();
    go(counts, 0, size, &mut vec![0; counts.len()], &mut out);
    out
}

/// `sum over ordered splittings B_1 + ... + B_k = x of prod_i c_i(B_i)`,
/// which equals the Weyl-group average over `S_r` (see
/// [`germ_term_weyl_sum`]).
fn term_value(kind: Kind, factors: &[Segment], counts: &[usize]) -> GroupRing {
    let n = counts.len() as u64;
    let Some((first, rest)) = factors.split_first() else {
        return if counts.iter().all(|&c| c == 0) {
            GroupRing::monomial(n, 0, 1)
        } else {
            GroupRing::zero(n)
        };
    };
    if rest.is_empty() {
        return basis_value(kind, first, counts);
    }
    let mut out = GroupRing::zero(n);
    for block in sub_multisets(counts, first.rank()) {
        let head = basis_value(kind, first, &block);
        if head.is_zero() {
            continue;
        }
        let remaining: Vec<usize> = counts.iter().zip(&block).map(|(c, b)| c - b).collect();
        let tail = term_value(kind, rest, &remaining);
        if !tail.is_zero() {
            out.add_assign(&head.mul(&tail));
        }
    }
    out
}

/// `c_{Z(seg)}(x)`.
#[allow(non_snake_case)]
pub fn germ_Z(seg: &Segment, x: &TorusPoint) -> Result<CycInt> {
    check_rank(seg.rank(), x.rank())?;
    Ok(basis_value(Kind::Z, seg, &x.counts()).evaluate())
}

/// `c_{L(seg)}(x)`, via the expansion of `L` in products of `Z`'s.
#[allow(non_snake_case)]
pub fn germ_L(seg: &Segment, x: &TorusPoint) -> Result<CycInt> {
    check_rank(seg.rank(), x.rank())?;
    Ok(basis_value(Kind::L, seg, &x.counts()).evaluate())
}

/// `c_{pi_1 x ... x pi_k}(x)` for a product of `Z`'s.
pub fn germ_term(term: &ProductTerm, x: &TorusPoint) -> Result<CycInt> {
    germ_term_in(Kind::Z, term, x)
}

/// As [`germ_term`], with factors of the given kind.
pub fn germ_term_in(kind: Kind, term: &ProductTerm, x: &TorusPoint) -> Result<CycInt> {
    check_rank(term.rank(), x.rank())?;
    Ok(term_value(kind, term.factors(), &x.counts()).evaluate())
}

/// Germ value of a Grothendieck group element, extended linearly.
pub fn germ_element(elem: &GrothendieckElement, x: &TorusPoint) -> Result<CycInt> {
    let counts = x.counts();
    let mut out = GroupRing::zero(x.n);
    for (term, coeff) in elem.terms() {
        check_rank(term.rank(), x.rank())?;
        out.add_scaled(&term_value(elem.basis(), term.factors(), &counts), coeff);
    }
    Ok(out.evaluate())
}

/// The product germ by the defining Weyl sum
/// `(1 / (|W(G_x,T)| prod r_i!)) sum_{w in S_r} prod_i |W(G_{x_{w,i}},T)| c_i(x_{w,i})`,
/// where `x_{w,i}` is the `i`-th block of `w . x`. Costs `r!` evaluations;
/// meant as a reference for small `r`.
pub fn germ_term_weyl_sum(kind: Kind, term: &ProductTerm, x: &TorusPoint) -> Result<CycInt> {
    check_rank(term.rank(), x.rank())?;
    let n = x.n;
    let mut total = GroupRing::zero(n);
    for w in (0..x.rank()).permutations(x.rank()) {
        let permuted: Vec<u64> = w.iter().map(|&i| x.exps[i]).collect();
        let mut value = GroupRing::monomial(n, 0, 1);
        let mut start = 0;
        for seg in term.factors() {
            let block = &permuted[start..start + seg.rank()];
            start += seg.rank();
            let mut counts = vec![0; n as usize];
            for &e in block {
                counts[e as usize] += 1;
            }
            let factor = basis_value(kind, seg, &counts);
            value = value.mul(&factor);
            let stab = stabilizer(&counts);
            if !stab.is_one() {
                let mut scaled = GroupRing::zero(n);
                scaled.add_scaled(&value, &stab);
                value = scaled;
            }
            if value.is_zero() {
                break;
            }
        }
        total.add_assign(&value);
    }
    let denominator: BigInt = weyl_stabilizer_order(x)
        * term
            .factors()
            .iter()
            .map(|s| factorial(s.rank() as u64))
            .product::<BigInt>();
    total
        .evaluate()
        .div_exact(&denominator)
        .map_err(|_| Error::InexactDivision("Weyl sum of a product germ"))
}

/// `c_{L(seg)}(x)` with every product term evaluated by the Weyl sum.
#[allow(non_snake_case)]
pub fn germ_L_weyl_sum(seg: &Segment, x: &TorusPoint) -> Result<CycInt> {
    check_rank(seg.rank(), x.rank())?;
    let mut out = CycInt::zero(x.n);
    for (term, coeff) in tadic_expand_L(seg).terms() {
        let value = germ_term_weyl_sum(Kind::Z, term, x)?;
        out = out.checked_add(&value.scale(coeff))?;
    }
    Ok(out)
}

/// Exponent-multiset view used by the dimension oracle: `c_L` at the point
/// with multiplicities `counts`, left in the group ring.
pub(crate) fn germ_l_group_ring(seg: &Segment, counts: &[usize]) -> GroupRing {
    basis_value(Kind::L, seg, counts)
}
