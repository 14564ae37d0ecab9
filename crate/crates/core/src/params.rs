//! Parameter coordinates: characters `χ`, Cherednik parameters `κ`, and the
//! unit-circle parameters `(q_0, q_1, u_r)` of the cyclotomic Hecke algebra.
//!
//! Unit-circle numbers `exp(2π√-1·t)` are stored additively as `t ∈ Q/Z`
//! ([`CircleElement`]), so every "is this product zero" question becomes an
//! exact congruence.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn is_integer(x: &BigRational) -> bool {
    x.denom().is_one()
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    t.parse::<BigRational>()
        .map_err(|_| Error::parse(format!("bad rational `{t}`; expected `a` or `a/b`")))
}

struct RatList<'a>(&'a [BigRational]);

impl fmt::Display for RatList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

/// `χ = Σ χ_i Tr_i`, stored as `(χ_0, …, χ_{ℓ-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalCharacter {
    values: Vec<BigRational>,
}

impl RationalCharacter {
    pub fn new(values: Vec<BigRational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParameter(
                "a character needs ℓ ≥ 1 entries".into(),
            ));
        }
        Ok(RationalCharacter { values })
    }

    pub fn zero(ell: usize) -> Self {
        RationalCharacter {
            values: vec![BigRational::zero(); ell],
        }
    }

    /// From `(numerator, denominator)` pairs. Panics on a zero denominator.
    pub fn from_fractions(pairs: &[(i64, i64)]) -> Self {
        RationalCharacter {
            values: pairs.iter().map(|&(n, d)| rat(n, d)).collect(),
        }
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn ell(&self) -> usize {
        self.values.len()
    }

    /// `χ` lies in the image of `X*(G)`, i.e. every `χ_i ∈ Z`.
    pub fn is_integral(&self) -> bool {
        self.values.iter().all(is_integer)
    }

    /// `δ·χ = Σ χ_i`.
    pub fn delta_pairing(&self) -> BigRational {
        self.values.iter().fold(BigRational::zero(), |a, b| a + b)
    }
}

impl fmt::Display for RationalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        RatList(&self.values).fmt(f)
    }
}

/// Comma-separated rationals: `1/5,1/7`.
impl FromStr for RationalCharacter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        RationalCharacter::new(values)
    }
}

impl Serialize for RationalCharacter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.values.iter().map(|v| v.to_string()))
    }
}

/// A point `(κ_{0,0}, κ_{0,1}, κ_0, …, κ_{ℓ-1})` of `𝔠`, where
/// `κ_{0,0} + κ_{0,1} = 0` and `Σ κ_i = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KappaParams {
    k00: BigRational,
    k01: BigRational,
    kappa: Vec<BigRational>,
}

impl KappaParams {
    pub fn new(k00: BigRational, k01: BigRational, kappa: Vec<BigRational>) -> Result<Self> {
        if kappa.is_empty() {
            return Err(Error::InvalidParameter("κ needs ℓ ≥ 1 entries".into()));
        }
        if !(&k00 + &k01).is_zero() {
            return Err(Error::InvalidParameter(format!(
                "κ00 + κ01 must vanish, got {k00} + {k01}"
            )));
        }
        let sum = kappa.iter().fold(BigRational::zero(), |a, b| a + b);
        if !sum.is_zero() {
            return Err(Error::InvalidParameter(format!(
                "κ_0 + ⋯ + κ_(ℓ-1) must vanish, got {sum}"
            )));
        }
        Ok(KappaParams { k00, k01, kappa })
    }

    /// `κ_{0,1}` is implied by `κ_{0,0} + κ_{0,1} = 0`.
    pub fn from_k00(k00: BigRational, kappa: Vec<BigRational>) -> Result<Self> {
        let k01 = -k00.clone();
        KappaParams::new(k00, k01, kappa)
    }

    pub fn k00(&self) -> &BigRational {
        &self.k00
    }

    pub fn k01(&self) -> &BigRational {
        &self.k01
    }

    pub fn kappa(&self) -> &[BigRational] {
        &self.kappa
    }

    pub fn ell(&self) -> usize {
        self.kappa.len()
    }

    /// `k = κ_{0,0} - κ_{0,1}`.
    pub fn k(&self) -> BigRational {
        &self.k00 - &self.k01
    }
}

/// `k00=1/3,k=1/4,-1/4`
impl fmt::Display for KappaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k00={},k={}", self.k00, RatList(&self.kappa))
    }
}

impl FromStr for KappaParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut k00 = None;
        let mut kappa: Option<Vec<BigRational>> = None;
        for token in s.split(',').map(str::trim) {
            if let Some(v) = token.strip_prefix("k00=") {
                if k00.replace(parse_rational(v)?).is_some() {
                    return Err(Error::parse("k00 given twice"));
                }
            } else if let Some(v) = token.strip_prefix("k=") {
                if kappa.is_some() {
                    return Err(Error::parse("k= given twice"));
                }
                kappa = Some(vec![parse_rational(v)?]);
            } else if let Some(list) = kappa.as_mut() {
                list.push(parse_rational(token)?);
            } else {
                return Err(Error::parse(format!(
                    "unexpected `{token}`; expected k00=<q>,k=<q>,<q>,…"
                )));
            }
        }
        let k00 = k00.ok_or_else(|| Error::parse("missing k00="))?;
        let kappa = kappa.ok_or_else(|| Error::parse("missing k="))?;
        KappaParams::from_k00(k00, kappa)
    }
}

impl Serialize for KappaParams {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("KappaParams", 3)?;
        st.serialize_field("k00", &self.k00.to_string())?;
        st.serialize_field("k01", &self.k01.to_string())?;
        st.serialize_field(
            "kappa",
            &self.kappa.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        )?;
        st.end()
    }
}

/// `exp(2π√-1·t)` with `t` reduced to `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircleElement {
    t: BigRational,
}

impl CircleElement {
    pub fn new(t: BigRational) -> Self {
        let t = &t - t.floor();
        CircleElement { t }
    }

    pub fn identity() -> Self {
        CircleElement {
            t: BigRational::zero(),
        }
    }

    /// `-1 = exp(π√-1)`.
    pub fn minus_one() -> Self {
        CircleElement { t: rat(1, 2) }
    }

    pub fn t(&self) -> &BigRational {
        &self.t
    }

    pub fn is_identity(&self) -> bool {
        self.t.is_zero()
    }

    pub fn inverse(&self) -> Self {
        CircleElement::new(-self.t.clone())
    }

    pub fn pow(&self, m: i64) -> Self {
        CircleElement::new(&self.t * BigRational::from_integer(m.into()))
    }
}

// The group law on the circle is addition of angles.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &CircleElement {
    type Output = CircleElement;

    fn mul(self, rhs: &CircleElement) -> CircleElement {
        CircleElement::new(&self.t + &rhs.t)
    }
}

impl Mul for CircleElement {
    type Output = CircleElement;

    fn mul(self, rhs: CircleElement) -> CircleElement {
        &self * &rhs
    }
}

impl fmt::Display for CircleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.t.fmt(f)
    }
}

impl Serialize for CircleElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.t)
    }
}

/// Parameters `(q_0, q_1, u_0, …, u_{ℓ-1})` of the cyclotomic Hecke algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeckeParams {
    pub q0: CircleElement,
    pub q1: CircleElement,
    pub u: Vec<CircleElement>,
}

impl HeckeParams {
    /// `q = -q_0 q_1^{-1}`.
    pub fn q(&self) -> CircleElement {
        &(&CircleElement::minus_one() * &self.q0) * &self.q1.inverse()
    }
}

/// χ from κ:
///
/// ```text
/// χ_0 = 1/ℓ + (κ_0 - κ_1) + (κ_{0,0} - κ_{0,1}) - 1
/// χ_i = 1/ℓ + (κ_i - κ_{i+1}),   1 ≤ i ≤ ℓ-1,  κ_ℓ = κ_0
/// ```
pub fn kappa_to_chi(kp: &KappaParams) -> RationalCharacter {
    let ell = kp.ell();
    let inv_ell = rat(1, ell as i64);
    let values = (0..ell)
        .map(|i| {
            let mut chi = &inv_ell + &kp.kappa[i] - &kp.kappa[(i + 1) % ell];
            if i == 0 {
                chi += kp.k() - BigRational::one();
            }
            chi
        })
        .collect();
    RationalCharacter { values }
}

/// Inverse of [`kappa_to_chi`], solving
/// `κ_i - κ_{i+1} = χ_i - 1/ℓ` (`i ≥ 1`), `Σ κ_i = 0`, `κ_{0,0} = -κ_{0,1} = (δ·χ)/2`.
pub fn chi_to_kappa(chi: &RationalCharacter) -> KappaParams {
    let ell = chi.ell();
    let inv_ell = rat(1, ell as i64);
    let k00 = chi.delta_pairing() / BigRational::from_integer(2.into());
    // κ_{r+1} = κ_1 - Σ_{j=1}^{r} (χ_j - 1/ℓ); indices taken mod ℓ, so r = ℓ-1 gives κ_0.
    let mut offsets = Vec::with_capacity(ell);
    let mut acc = BigRational::zero();
    for r in 0..ell {
        if r > 0 {
            acc -= &chi.values[r] - &inv_ell;
        }
        offsets.push(acc.clone());
    }
    let total = offsets.iter().fold(BigRational::zero(), |a, b| a + b);
    let kappa1 = -total / BigRational::from_integer((ell as i64).into());
    let mut kappa = vec![BigRational::zero(); ell];
    for (r, off) in offsets.iter().enumerate() {
        kappa[(r + 1) % ell] = &kappa1 + off;
    }
    KappaParams {
        k01: -k00.clone(),
        k00,
        kappa,
    }
}

/// `q_0 = e(κ_{0,0})`, `q_1 = -e(κ_{0,1})`, `u_r = ζ^{-r} e(κ_r)` with
/// `e(t) = exp(2π√-1·t)` and `ζ = e(1/ℓ)`.
pub fn hecke_params(kp: &KappaParams) -> HeckeParams {
    let ell = kp.ell() as i64;
    HeckeParams {
        q0: CircleElement::new(kp.k00.clone()),
        q1: CircleElement::new(&kp.k01 + rat(1, 2)),
        u: kp
            .kappa
            .iter()
            .enumerate()
            .map(|(r, kr)| CircleElement::new(kr - rat(r as i64, ell)))
            .collect(),
    }
}

/// Whether `Π_{m=1}^n (1 - q^m) Π_{i≠j} Π_{-n<d<n} (u_i - q^d u_j) ≠ 0`.
pub fn ariki_product_nonzero(q: &CircleElement, u: &[CircleElement], n: usize) -> bool {
    let n = n as i64;
    if (1..=n).any(|m| q.pow(m).is_identity()) {
        return false;
    }
    for (i, ui) in u.iter().enumerate() {
        for (j, uj) in u.iter().enumerate() {
            if i == j {
                continue;
            }
            // u_i = q^d u_j  ⇔  u_i u_j^{-1} q^{-d} = 1
            let ratio = ui * &uj.inverse();
            if (1 - n..n).any(|d| (&ratio * &q.pow(-d)).is_identity()) {
                return false;
            }
        }
    }
    true
}

/// Semi-simplicity of spherical category `O` for `H_κ(Z_ℓ ≀ S_n)`:
///
/// * `k + j/m ∉ Z` for `2 ≤ m ≤ n`, `gcd(j, m) = 1`, and
/// * `m·k + κ_j - κ_i + (i - j)/ℓ ∉ Z` for `-n < m < n`, `i ≠ j`,
///
/// where `k = κ_{0,0} - κ_{0,1}`.
pub fn cherednik_semisimple(kp: &KappaParams, n: usize) -> bool {
    let k = kp.k();
    let n = n as i64;
    for m in 2..=n {
        for j in 1..m {
            if j.gcd(&m) == 1 && is_integer(&(&k + rat(j, m))) {
                return false;
            }
        }
    }
    let ell = kp.ell() as i64;
    for (i, ki) in kp.kappa.iter().enumerate() {
        for (j, kj) in kp.kappa.iter().enumerate() {
            if i == j {
                continue;
            }
            let base = kj - ki + rat(i as i64 - j as i64, ell);
            for m in 1 - n..n {
                if is_integer(&(&base + &k * BigRational::from_integer(m.into()))) {
                    return false;
                }
            }
        }
    }
    true
}
