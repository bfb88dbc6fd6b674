//! Cuspidal labels, Zelevinsky segments and the Grothendieck group they
//! span, with the determinantal change of basis between the `L` and `Z`
//! families and the bookkeeping for square-integrable lifts to covers.
//!
//! Representations are symbolic labels only. A segment carries its cuspidal
//! label and rational endpoints `a <= b` with `b - a` an integer.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::combinat::compositions;
use crate::cover::CoverParams;
use crate::error::{Error, Result};

/// A cuspidal representation `rho` of `GL_{r0}`, remembered by its name,
/// its rank and the exponent `k` with `omega_rho(zeta^j) = zeta_n^{kj}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CuspidalLabel {
    name: String,
    r0: usize,
    k: u64,
}

impl CuspidalLabel {
    pub fn new(name: impl Into<String>, r0: usize, k: u64) -> Result<Self> {
        let name = name.into();
        if r0 == 0 {
            return Err(Error::invalid("cuspidal rank r0 must be positive"));
        }
        if name.is_empty() || name.contains(['/', ':', '[', ']', ',', ' ']) {
            return Err(Error::invalid(format!("bad cuspidal name {name:?}")));
        }
        Ok(Self { name, r0, k })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn r0(&self) -> usize {
        self.r0
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// Order `s = n / gcd(n, k)` of the central character on `mu_n`.
    pub fn order(&self, n: u64) -> u64 {
        n / n.gcd(&(self.k % n))
    }
}

impl fmt::Display for CuspidalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}/{}", self.name, self.r0, self.k)
    }
}

impl FromStr for CuspidalLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut it = s.split('/');
        let (Some(name), Some(r0), Some(k), None) = (it.next(), it.next(), it.next(), it.next()) else {
            return Err(Error::parse(format!("expected name/r0/k, got {s:?}")));
        };
        let r0 = r0
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad r0 in {s:?}")))?;
        let k = k.trim().parse().map_err(|_| Error::parse(format!("bad k in {s:?}")))?;
        Self::new(name.trim(), r0, k)
    }
}

pub type Endpoint = Ratio<i64>;

/// `[a, b]` on the cuspidal line of `rho`: the twists `rho nu^a, ..., rho nu^b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Segment {
    rho: CuspidalLabel,
    a: Endpoint,
    b: Endpoint,
}

impl Segment {
    pub fn new(rho: CuspidalLabel, a: Endpoint, b: Endpoint) -> Result<Self> {
        let len = b - a;
        if !len.is_integer() || len.is_negative() {
            return Err(Error::invalid(format!(
                "[{a},{b}] is not a segment: b - a must be a nonnegative integer"
            )));
        }
        Ok(Self { rho, a, b })
    }

    /// `[a, a + m - 1]`.
    pub fn with_length(rho: CuspidalLabel, a: Endpoint, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::invalid("segment length must be positive"));
        }
        Self::new(rho, a, a + Endpoint::from_integer(m as i64 - 1))
    }

    pub fn rho(&self) -> &CuspidalLabel {
        &self.rho
    }

    pub fn a(&self) -> Endpoint {
        self.a
    }

    pub fn b(&self) -> Endpoint {
        self.b
    }

    /// `m = b - a + 1`.
    pub fn m(&self) -> usize {
        (self.b - self.a).to_integer() as usize + 1
    }

    /// `r0 * m`.
    pub fn rank(&self) -> usize {
        self.rho.r0 * self.m()
    }

    fn sub(&self, first: usize, last: usize) -> Self {
        let at = |i: usize| self.a + Endpoint::from_integer(i as i64);
        Self {
            rho: self.rho.clone(),
            a: at(first),
            b: at(last),
        }
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.rho.name, self.a, self.b, self.rho.r0, self.rho.k).cmp(&(
            &other.rho.name,
            other.a,
            other.b,
            other.rho.r0,
            other.rho.k,
        ))
    }
}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:[{},{}]", self.rho, self.a, self.b)
    }
}

impl FromStr for Segment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (label, interval) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(format!("expected name/r0/k:[a,b], got {s:?}")))?;
        let inner = interval
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::parse(format!("expected [a,b] in {s:?}")))?;
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| Error::parse(format!("expected [a,b] in {s:?}")))?;
        let endpoint = |t: &str| {
            t.trim()
                .parse::<Endpoint>()
                .map_err(|_| Error::parse(format!("bad endpoint {t:?}")))
        };
        Self::new(label.parse()?, endpoint(a)?, endpoint(b)?)
    }
}

/// Two segments on the same line are linked when their union is a segment
/// and neither contains the other. Segments on different lines never are.
pub fn linked(d1: &Segment, d2: &Segment) -> bool {
    if d1.rho != d2.rho || !(d2.a - d1.a).is_integer() {
        return false;
    }
    let one = Endpoint::one();
    let union_is_segment = d1.a.max(d2.a) <= d1.b.min(d2.b) + one;
    let contains = |x: &Segment, y: &Segment| x.a <= y.a && y.b <= x.b;
    union_is_segment && !contains(d1, d2) && !contains(d2, d1)
}

/// Which family a basis element belongs to: `Z(rho, [a,b])`, the unique
/// irreducible subrepresentation, or `L(rho, [a,b])`, the unique irreducible
/// quotient of `rho nu^a x ... x rho nu^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Z,
    L,
}

impl Kind {
    pub fn other(self) -> Self {
        match self {
            Kind::Z => Kind::L,
            Kind::L => Kind::Z,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Z => "Z",
            Kind::L => "L",
        })
    }
}

/// A commutative product of segments, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductTerm {
    factors: Vec<Segment>,
}

impl ProductTerm {
    pub fn new(mut factors: Vec<Segment>) -> Self {
        factors.sort();
        Self { factors }
    }

    pub fn single(seg: Segment) -> Self {
        Self { factors: vec![seg] }
    }

    pub fn factors(&self) -> &[Segment] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(Segment::rank).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.factors.iter().chain(&other.factors).cloned().collect())
    }

    fn render(&self, kind: Kind) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = self.factors.iter().map(|s| format!("{kind}({s})")).collect();
        parts.join(" * ")
    }
}

/// A finite integer combination of products of basis elements of one kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrothendieckElement {
    basis: Kind,
    terms: BTreeMap<ProductTerm, BigInt>,
}

impl GrothendieckElement {
    pub fn zero(basis: Kind) -> Self {
        Self {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_element(basis: Kind, seg: Segment) -> Self {
        let mut out = Self::zero(basis);
        out.add_term(ProductTerm::single(seg), BigInt::one());
        out
    }

    pub fn basis(&self) -> Kind {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ProductTerm, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, term: &ProductTerm) -> BigInt {
        self.terms.get(term).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, term: ProductTerm, coeff: BigInt) {
        match self.terms.entry(term) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                if !coeff.is_zero() {
                    e.insert(coeff);
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, weight: &BigInt) -> Result<()> {
        self.check_basis(other)?;
        for (term, c) in &other.terms {
            self.add_term(term.clone(), c * weight);
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_basis(other)?;
        let mut out = Self::zero(self.basis);
        for (t1, c1) in &self.terms {
            for (t2, c2) in &other.terms {
                out.add_term(t1.mul(t2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// Rewrites every factor through the determinantal formula and
    /// multiplies out.
    pub fn to_other_basis(&self) -> Self {
        let target = self.basis.other();
        let mut out = Self::zero(target);
        for (term, coeff) in &self.terms {
            let mut product = Self::zero(target);
            product.add_term(ProductTerm::new(Vec::new()), coeff.clone());
            for seg in term.factors() {
                product = product
                    .mul(&determinantal(seg, target))
                    .expect("both sides are in the target basis");
            }
            out.add_scaled(&product, &BigInt::one()).expect("same basis");
        }
        out
    }

    fn check_basis(&self, other: &Self) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::invalid(format!(
                "cannot combine elements in the {} and {} bases",
                self.basis, other.basis
            )));
        }
        Ok(())
    }
}

impl fmt::Display for GrothendieckElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (term, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            f.write_str(&term.render(self.basis))?;
        }
        Ok(())
    }
}

/// `sum over compositions (m_1..m_l) of m of (-1)^{m-l} prod_i X(rho, [a + t_{i-1}, a + t_i - 1])`
/// with `X` of kind `target` and `t_i` the partial sums.
fn determinantal(seg: &Segment, target: Kind) -> GrothendieckElement {
    let m = seg.m();
    let mut out = GrothendieckElement::zero(target);
    for parts in compositions(m) {
        let mut t = 0;
        let factors = parts
            .iter()
            .map(|&p| {
                let piece = seg.sub(t, t + p - 1);
                t += p;
                piece
            })
            .collect();
        let sign = if (m - parts.len()).is_multiple_of(2) { 1 } else { -1 };
        out.add_term(ProductTerm::new(factors), BigInt::from(sign));
    }
    out
}

/// `L(rho, [a,b])` as a signed sum of products of `Z`'s.
#[allow(non_snake_case)]
pub fn tadic_expand_L(seg: &Segment) -> GrothendieckElement {
    determinantal(seg, Kind::Z)
}

/// `Z(rho, [a,b])` as a signed sum of products of `L`'s.
#[allow(non_snake_case)]
pub fn tadic_expand_Z(seg: &Segment) -> GrothendieckElement {
    determinantal(seg, Kind::L)
}

/// A genuine square-integrable representation `L(rho~, [0, m'-1])` of a
/// cover, identified through its image `L(rho, [a, b])` under the
/// metaplectic correspondence. The central character is not recorded:
/// nothing computed from a label depends on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetaplecticSqrtLabel {
    pub cover: CoverParams,
    pub rho_cover_name: String,
    /// `L(rho, [a, a + s - 1])`, the cuspidal support block of `mc(rho~)`.
    pub mc_image: Segment,
    pub m_prime: usize,
    pub cuspidal: bool,
}

impl MetaplecticSqrtLabel {
    /// Rank of the cuspidal `rho~`, that is `r0 * s`.
    pub fn rho_cover_rank(&self) -> usize {
        self.mc_image.rank()
    }

    pub fn s(&self) -> usize {
        self.mc_image.m()
    }
}

impl fmt::Display for MetaplecticSqrtLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "L({},[0,{}]) on {} with mc(rho~) = L({})",
            self.rho_cover_name,
            self.m_prime - 1,
            self.cover,
            self.mc_image
        )
    }
}

/// Classifies the genuine square-integrable `pi~` with
/// `mc(pi~) = L(rho, [a, b])`. Requires the order `s` of `omega_rho` on
/// `mu_n` to divide `m = b - a + 1`.
pub fn mc_sqrt_classify(
    cover: &CoverParams,
    rho: &CuspidalLabel,
    a: Endpoint,
    b: Endpoint,
) -> Result<MetaplecticSqrtLabel> {
    let seg = Segment::new(rho.clone(), a, b)?;
    let m = seg.m();
    if cover.r() != seg.rank() {
        return Err(Error::invalid(format!(
            "cover rank {} does not match r0 * m = {}",
            cover.r(),
            seg.rank()
        )));
    }
    let s = rho.order(cover.n()) as usize;
    if m % s != 0 {
        return Err(Error::NotMetic {
            s: s as u64,
            m: m as u64,
        });
    }
    Ok(MetaplecticSqrtLabel {
        cover: *cover,
        rho_cover_name: format!("{}~", rho.name),
        mc_image: Segment::with_length(rho.clone(), a, s)?,
        m_prime: m / s,
        cuspidal: s == m,
    })
}

/// The reducibility point `s(rho~) = m / n` of a genuine cuspidal whose
/// image has cuspidal support of length `m`.
pub fn s_of_cuspidal_cover(n: u64, m: u64) -> Result<Ratio<i64>> {
    if n == 0 || m == 0 {
        return Err(Error::invalid("n and m must be positive"));
    }
    Ok(Ratio::new(m as i64, n as i64))
}

/// A Jacquet module computation: zero, or a single pair of segments with
/// `None` standing for the trivial representation of `GL_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JacquetTerm {
    Zero,
    Pair {
        top: Option<Segment>,
        bottom: Option<Segment>,
    },
}

impl JacquetTerm {
    pub fn is_zero(&self) -> bool {
        matches!(self, JacquetTerm::Zero)
    }
}

impl fmt::Display for JacquetTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: &Option<Segment>| s.as_ref().map_or("1".to_string(), |s| format!("L~({s})"));
        match self {
            JacquetTerm::Zero => f.write_str("0"),
            JacquetTerm::Pair { top, bottom } => write!(f, "({}, {})", side(top), side(bottom)),
        }
    }
}

/// The Jacquet module of `L(rho~, [a,b])` on a rank-`r` cover along the
/// parabolic with Levi `(l, r - l)`. Nonzero only when `r | ml`; then it is
/// `(L(rho~, [b - l' + 1, b]), L(rho~, [a, b - l']))` with `l' = ml / r`.
#[allow(non_snake_case)]
pub fn jacquet_L_metaplectic(seg: &Segment, r: usize, l: usize) -> Result<JacquetTerm> {
    let m = seg.m();
    if l > r {
        return Err(Error::invalid(format!("l = {l} exceeds r = {r}")));
    }
    if !r.is_multiple_of(m) {
        return Err(Error::invalid(format!("segment length {m} does not divide r = {r}")));
    }
    if !(m * l).is_multiple_of(r) {
        return Ok(JacquetTerm::Zero);
    }
    let lp = m * l / r;
    let top = (lp > 0).then(|| seg.sub(m - lp, m - 1));
    let bottom = (lp < m).then(|| seg.sub(0, m - lp - 1));
    Ok(JacquetTerm::Pair { top, bottom })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rho() -> CuspidalLabel {
        CuspidalLabel::new("rho", 1, 0).unwrap()
    }

    fn seg(a: i64, b: i64) -> Segment {
        Segment::new(rho(), a.into(), b.into()).unwrap()
    }

    #[test]
    fn textual_forms() {
        let s: Segment = "rho/2/1:[1/2,5/2]".parse().unwrap();
        assert_eq!(s.m(), 3);
        assert_eq!(s.rank(), 6);
        assert_eq!(s.to_string(), "rho/2/1:[1/2,5/2]");
        assert!("rho/2/1:[0,1/2]".parse::<Segment>().is_err());
        assert!("rho/2/1:[1,0]".parse::<Segment>().is_err());
        assert!("rho/2:[0,1]".parse::<Segment>().is_err());
    }

    #[test]
    fn linkage() {
        assert!(linked(&seg(0, 1), &seg(1, 2)));
        assert!(linked(&seg(0, 1), &seg(2, 3)));
        assert!(!linked(&seg(0, 2), &seg(1, 1)));
        assert!(!linked(&seg(0, 1), &seg(0, 1)));
        assert!(!linked(&seg(0, 0), &seg(2, 2)));
        let other = Segment::new(CuspidalLabel::new("sigma", 1, 0).unwrap(), 1.into(), 2.into()).unwrap();
        assert!(!linked(&seg(0, 1), &other));
        let half = Segment::new(rho(), Ratio::new(1, 2), Ratio::new(3, 2)).unwrap();
        assert!(!linked(&seg(0, 1), &half));
    }

    #[test]
    fn expansion_examples() {
        let one = tadic_expand_L(&seg(0, 0));
        assert_eq!(one.len(), 1);
        assert_eq!(one.coefficient(&ProductTerm::single(seg(0, 0))), BigInt::one());

        let two = tadic_expand_L(&seg(0, 1));
        assert_eq!(two.basis(), Kind::Z);
        assert_eq!(
            two.coefficient(&ProductTerm::new(vec![seg(1, 1), seg(0, 0)])),
            BigInt::one()
        );
        assert_eq!(two.coefficient(&ProductTerm::single(seg(0, 1))), BigInt::from(-1));
        assert_eq!(
            two.to_string(),
            "Z(rho/1/0:[0,0]) * Z(rho/1/0:[1,1]) - Z(rho/1/0:[0,1])"
        );

        let three = tadic_expand_L(&seg(0, 2));
        let signs: Vec<i64> = [
            vec![seg(0, 0), seg(1, 1), seg(2, 2)],
            vec![seg(0, 0), seg(1, 2)],
            vec![seg(0, 1), seg(2, 2)],
            vec![seg(0, 2)],
        ]
        .into_iter()
        .map(|f| i64::try_from(three.coefficient(&ProductTerm::new(f))).unwrap())
        .collect();
        assert_eq!(signs, vec![1, -1, -1, 1]);
    }

    #[test]
    fn double_expansion_is_identity() {
        for m in 1..=6 {
            let s = Segment::with_length(rho(), Ratio::new(-1, 2), m).unwrap();
            let back = tadic_expand_L(&s).to_other_basis();
            assert_eq!(back, GrothendieckElement::basis_element(Kind::L, s.clone()));
            let back = tadic_expand_Z(&s).to_other_basis();
            assert_eq!(back, GrothendieckElement::basis_element(Kind::Z, s));
        }
    }

    #[test]
    fn classification_examples() {
        let cover = CoverParams::new(2, 2, 0).unwrap();
        let label = mc_sqrt_classify(&cover, &rho(), 0.into(), 1.into()).unwrap();
        assert_eq!(label.m_prime, 2);
        assert_eq!(label.mc_image, seg(0, 0));
        assert!(!label.cuspidal);

        let odd = CuspidalLabel::new("chi", 1, 1).unwrap();
        let label = mc_sqrt_classify(&cover, &odd, 0.into(), 1.into()).unwrap();
        assert!(label.cuspidal);
        assert_eq!(label.m_prime, 1);
        assert_eq!(label.rho_cover_rank(), 2);

        let cover3 = CoverParams::new(3, 2, 0).unwrap();
        assert_eq!(
            mc_sqrt_classify(&cover3, &odd, 0.into(), 2.into()),
            Err(Error::NotMetic { s: 2, m: 3 })
        );
    }

    #[test]
    fn reducibility_points() {
        assert_eq!(s_of_cuspidal_cover(3, 3).unwrap(), Ratio::one());
        assert_eq!(s_of_cuspidal_cover(3, 1).unwrap(), Ratio::new(1, 3));
        assert_eq!(s_of_cuspidal_cover(1, 4).unwrap(), Ratio::from_integer(4));
    }

    #[test]
    fn jacquet_examples() {
        let s = seg(0, 1);
        assert_eq!(
            jacquet_L_metaplectic(&s, 4, 0).unwrap(),
            JacquetTerm::Pair {
                top: None,
                bottom: Some(s.clone())
            }
        );
        assert_eq!(
            jacquet_L_metaplectic(&s, 4, 2).unwrap(),
            JacquetTerm::Pair {
                top: Some(seg(1, 1)),
                bottom: Some(seg(0, 0))
            }
        );
        assert!(jacquet_L_metaplectic(&s, 4, 1).unwrap().is_zero());
        assert_eq!(
            jacquet_L_metaplectic(&s, 4, 4).unwrap(),
            JacquetTerm::Pair {
                top: Some(s.clone()),
                bottom: None
            }
        );
        assert!(jacquet_L_metaplectic(&s, 4, 5).is_err());
    }
}
