//! The root lattice `Z[Z_ℓ] ≅ Z^ℓ` of type `Ã_{ℓ-1}` and the finite root set `R_n`.
//!
//! Coordinate `r` of a [`DimVector`] is the multiplicity of `ε_r`, identified
//! with `σ^r` in the group algebra. Multiplication by `σ^i` is the cyclic
//! rotation [`DimVector::rotate`].

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::params::RationalCharacter;

/// An element of `Z^ℓ`, optionally framed by a multiple of `ε_∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector {
    coords: Vec<i64>,
    framing: i64,
}

impl DimVector {
    pub fn new(coords: Vec<i64>) -> Self {
        DimVector { coords, framing: 0 }
    }

    pub fn framed(coords: Vec<i64>, framing: i64) -> Self {
        DimVector { coords, framing }
    }

    pub fn zero(ell: usize) -> Self {
        DimVector::new(vec![0; ell])
    }

    /// The basis vector `ε_r`.
    pub fn unit(ell: usize, r: usize) -> Self {
        let mut coords = vec![0; ell];
        coords[r % ell] = 1;
        DimVector::new(coords)
    }

    pub fn ell(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn framing(&self) -> i64 {
        self.framing
    }

    pub fn with_framing(mut self, framing: i64) -> Self {
        self.framing = framing;
        self
    }

    /// The underlying cycle vector with the `ε_∞` coordinate dropped.
    pub fn unframed(&self) -> DimVector {
        DimVector::new(self.coords.clone())
    }

    /// Sum of the cycle coordinates (the framing is not counted).
    pub fn total(&self) -> i64 {
        self.coords.iter().sum()
    }

    /// Multiplication by `σ^shift`: coordinate `r` moves to `r + shift mod ℓ`.
    pub fn rotate(&self, shift: i64) -> DimVector {
        let ell = self.ell();
        if ell == 0 {
            return self.clone();
        }
        let s = shift.rem_euclid(ell as i64) as usize;
        let mut coords = vec![0; ell];
        for (r, &c) in self.coords.iter().enumerate() {
            coords[(r + s) % ell] = c;
        }
        DimVector {
            coords,
            framing: self.framing,
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.framing >= 0 && self.coords.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.framing == 0 && self.coords.iter().all(|&c| c == 0)
    }

    /// Coordinate-wise `self ≤ other`, framing included.
    pub fn le_coordwise(&self, other: &DimVector) -> bool {
        self.framing <= other.framing && self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b)
    }

    fn check_same_ell(&self, other: &DimVector) {
        assert_eq!(self.ell(), other.ell(), "lattice vectors of different rank");
    }
}

impl Add for &DimVector {
    type Output = DimVector;

    fn add(self, rhs: &DimVector) -> DimVector {
        self.check_same_ell(rhs);
        DimVector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
            framing: self.framing + rhs.framing,
        }
    }
}

impl Add for DimVector {
    type Output = DimVector;

    fn add(self, rhs: DimVector) -> DimVector {
        &self + &rhs
    }
}

impl AddAssign<&DimVector> for DimVector {
    fn add_assign(&mut self, rhs: &DimVector) {
        self.check_same_ell(rhs);
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            *a += b;
        }
        self.framing += rhs.framing;
    }
}

impl Sub for &DimVector {
    type Output = DimVector;

    fn sub(self, rhs: &DimVector) -> DimVector {
        self + &(-rhs)
    }
}

impl Sub for DimVector {
    type Output = DimVector;

    fn sub(self, rhs: DimVector) -> DimVector {
        &self - &rhs
    }
}

impl Neg for &DimVector {
    type Output = DimVector;

    fn neg(self) -> DimVector {
        DimVector {
            coords: self.coords.iter().map(|c| -c).collect(),
            framing: -self.framing,
        }
    }
}

impl Neg for DimVector {
    type Output = DimVector;

    fn neg(self) -> DimVector {
        -&self
    }
}

impl Mul<&DimVector> for i64 {
    type Output = DimVector;

    fn mul(self, rhs: &DimVector) -> DimVector {
        DimVector {
            coords: rhs.coords.iter().map(|c| self * c).collect(),
            framing: self * rhs.framing,
        }
    }
}

impl Mul<DimVector> for i64 {
    type Output = DimVector;

    fn mul(self, rhs: DimVector) -> DimVector {
        self * &rhs
    }
}

/// `(1,0,1)`, or `inf+(1,0,1)` when framed once; `kinf+(..)` for framing `k > 1`.
impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.framing {
            0 => {}
            1 => f.write_str("inf+")?,
            k => write!(f, "{k}inf+")?,
        }
        f.write_str("(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for DimVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (framing, body) = match s.find("inf+") {
            Some(pos) => {
                let prefix = s[..pos].trim();
                let k = if prefix.is_empty() {
                    1
                } else {
                    prefix
                        .parse::<i64>()
                        .map_err(|_| Error::parse(format!("bad framing multiplicity in `{s}`")))?
                };
                (k, &s[pos + 4..])
            }
            None => (0, s),
        };
        let inner = body
            .trim()
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| Error::parse(format!("dimension vector `{s}` must be parenthesized")))?;
        let coords = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|t| {
                    t.trim().parse::<i64>().map_err(|_| {
                        Error::parse(format!("bad coordinate `{}` in `{s}`", t.trim()))
                    })
                })
                .collect::<Result<Vec<_>>>()?
        };
        Ok(DimVector { coords, framing })
    }
}

impl Serialize for DimVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The minimal imaginary root `δ = ε_0 + ⋯ + ε_{ℓ-1}`.
pub fn delta(ell: usize) -> DimVector {
    DimVector::new(vec![1; ell])
}

/// `ε_i + ⋯ + ε_j` for `i ≤ j`.
fn segment(ell: usize, i: usize, j: usize) -> DimVector {
    let mut v = DimVector::zero(ell);
    for r in i..=j {
        v.coords[r] = 1;
    }
    v
}

/// The hyperplane root set `R_n` for a fixed `n` and cycle length `ℓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSet {
    roots: Vec<DimVector>,
    n: usize,
    ell: usize,
}

impl RootSet {
    pub fn roots(&self) -> &[DimVector] {
        &self.roots
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, DimVector> {
        self.roots.iter()
    }

    /// `n + (2n-1)·ℓ(ℓ-1)/2`.
    pub fn expected_len(n: usize, ell: usize) -> usize {
        if n == 0 {
            return 0;
        }
        n + (2 * n - 1) * ell * (ell - 1) / 2
    }
}

impl<'a> IntoIterator for &'a RootSet {
    type Item = &'a DimVector;
    type IntoIter = std::slice::Iter<'a, DimVector>;

    fn into_iter(self) -> Self::IntoIter {
        self.roots.iter()
    }
}

/// `R_n = {α ∈ R⁺ : ε_0·α < n} ∪ {nδ}`, written out as the union of
///
/// * `mδ` for `1 ≤ m ≤ n`,
/// * `mδ + ε_i + ⋯ + ε_j` for `0 ≤ m ≤ n-1`, `1 ≤ i ≤ j ≤ ℓ-1`,
/// * `mδ - ε_i - ⋯ - ε_j` for `1 ≤ m ≤ n-1`, `1 ≤ i ≤ j ≤ ℓ-1`,
///
/// in that order. `n = 0` yields the empty set.
pub fn generate_rn(n: usize, ell: usize) -> RootSet {
    assert!(ell >= 1, "cycle length must be positive");
    let d = delta(ell);
    let mut roots: Vec<DimVector> = Vec::with_capacity(RootSet::expected_len(n, ell));
    let mut push = |v: DimVector| {
        if !roots.contains(&v) {
            roots.push(v);
        }
    };
    for m in 1..=n as i64 {
        push(m * &d);
    }
    for m in 0..n as i64 {
        for i in 1..ell {
            for j in i..ell {
                push(&(m * &d) + &segment(ell, i, j));
            }
        }
    }
    for m in 1..n as i64 {
        for i in 1..ell {
            for j in i..ell {
                push(&(m * &d) - &segment(ell, i, j));
            }
        }
    }
    RootSet { roots, n, ell }
}

/// The exact pairing `χ·α = Σ χ_i α_i`; the framing coordinate is ignored.
pub fn pair(chi: &RationalCharacter, alpha: &DimVector) -> Result<BigRational> {
    if chi.ell() != alpha.ell() {
        return Err(Error::DimensionMismatch {
            expected: alpha.ell(),
            found: chi.ell(),
        });
    }
    Ok(chi
        .values()
        .iter()
        .zip(alpha.coords())
        .filter(|(_, &a)| a != 0)
        .fold(BigRational::zero(), |acc, (c, &a)| {
            acc + c * BigRational::from_integer(a.into())
        }))
}

/// Whether `χ·α ∈ Z`.
pub fn is_integral_pairing(chi: &RationalCharacter, alpha: &DimVector) -> Result<bool> {
    Ok(pair(chi, alpha)?.denom().is_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(s: &str) -> RationalCharacter {
        s.parse().unwrap()
    }

    fn dv(s: &str) -> DimVector {
        s.parse().unwrap()
    }

    fn q(s: &str) -> BigRational {
        s.parse().unwrap()
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(1), dv("(1)"));
        assert_eq!(delta(3), dv("(1,1,1)"));
        assert_eq!(2 * delta(2), dv("(2,2)"));
    }

    #[test]
    fn rotation_is_multiplication_by_sigma() {
        let e0 = DimVector::unit(3, 0);
        assert_eq!(e0.rotate(1), DimVector::unit(3, 1));
        assert_eq!(e0.rotate(-1), DimVector::unit(3, 2));
        assert_eq!(dv("(1,2,3)").rotate(4), dv("(3,1,2)"));
    }

    #[test]
    fn rn_small_cases() {
        let r = generate_rn(2, 1);
        assert_eq!(r.roots(), &[dv("(1)"), dv("(2)")]);

        let r = generate_rn(2, 2);
        let expected = [
            dv("(1,1)"),
            dv("(2,2)"),
            dv("(0,1)"),
            dv("(1,2)"),
            dv("(1,0)"),
        ];
        assert_eq!(r.roots(), &expected);

        let r = generate_rn(1, 2);
        assert_eq!(r.roots(), &[dv("(1,1)"), dv("(0,1)")]);
    }

    #[test]
    fn rn_size_formula() {
        for n in 1..=6 {
            for ell in 1..=6 {
                assert_eq!(generate_rn(n, ell).len(), RootSet::expected_len(n, ell));
            }
        }
        assert!(generate_rn(0, 3).is_empty());
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pair(&chi("0,0"), &dv("(3,5)")).unwrap(), q("0"));
        assert_eq!(pair(&chi("1/5,1/7"), &delta(2)).unwrap(), q("12/35"));
        let alpha = &delta(2) - &DimVector::unit(2, 1);
        assert_eq!(pair(&chi("1/5,1/7"), &alpha).unwrap(), q("1/5"));
    }

    #[test]
    fn pairing_ignores_framing() {
        let v = dv("inf+(1,1)");
        assert_eq!(pair(&chi("1/5,1/7"), &v).unwrap(), q("12/35"));
    }

    #[test]
    fn pairing_dimension_mismatch() {
        let err = pair(&chi("1/2"), &delta(2)).unwrap_err();
        assert_eq!(
            err,
            Error::DimensionMismatch {
                expected: 2,
                found: 1
            }
        );
    }

    #[test]
    fn integrality_examples() {
        assert!(is_integral_pairing(&chi("1/2"), &dv("(2)")).unwrap());
        assert!(!is_integral_pairing(&chi("1/2"), &dv("(1)")).unwrap());
        assert!(is_integral_pairing(&chi("0,0"), &dv("(7,-3)")).unwrap());
    }

    #[test]
    fn text_syntax() {
        let v = dv("inf+(1,0,1)");
        assert_eq!(v.framing(), 1);
        assert_eq!(v.coords(), &[1, 0, 1]);
        assert_eq!(v.to_string(), "inf+(1,0,1)");
        assert_eq!(dv(" ( -1 , 2 ) ").to_string(), "(-1,2)");
        assert_eq!(dv("2inf+(0)").framing(), 2);
        assert!("1,0".parse::<DimVector>().is_err());
        assert!("(1,x)".parse::<DimVector>().is_err());
    }
}
