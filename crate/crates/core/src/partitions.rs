//! Partitions, `ℓ`-multipartitions and their (shifted) `ℓ`-residues.
//!
//! The box in column `i` of row `j` of a Young diagram has content `j - i`.
//! Enumeration orders are fixed: partitions by size and then reverse
//! lexicographically, so `[2]` precedes `[1,1]`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootlattice::DimVector;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Fails unless `parts` is weakly decreasing with no zero entries.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParameter(format!(
                "partition {parts:?} has a zero part"
            )));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Boxes of the Young diagram, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = DiagramBox> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |column| DiagramBox { column, row: r + 1 }))
    }

    pub fn contains(&self, b: DiagramBox) -> bool {
        b.row >= 1 && b.row <= self.len() && b.column >= 1 && b.column <= self.parts[b.row - 1]
    }
}

/// Size first, then reverse lexicographic on the parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.parts.iter().join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| {
                Error::parse(format!("partition `{s}` must be bracketed, e.g. [2,1]"))
            })?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(format!("bad part `{}` in `{s}`", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::parse(e.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An `ℓ`-tuple of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidParameter(
                "a multipartition needs at least one component".into(),
            ));
        }
        Ok(MultiPartition { components })
    }

    pub fn empty(ell: usize) -> Self {
        assert!(ell >= 1, "cycle length must be positive");
        MultiPartition {
            components: vec![Partition::empty(); ell],
        }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i]
    }

    pub fn ell(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// True when every component is empty.
    pub fn is_empty(&self) -> bool {
        self.components.iter().all(Partition::is_empty)
    }

    fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(Partition::size).collect()
    }
}

/// Total size, then component sizes in reverse lexicographic order, then the
/// components themselves.
impl Ord for MultiPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.sizes().cmp(&self.sizes()))
            .then_with(|| self.components.cmp(&other.components))
    }
}

impl PartialOrd for MultiPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.components.iter().join(";"))
    }
}

impl FromStr for MultiPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let components = s
            .split(';')
            .map(str::parse)
            .collect::<Result<Vec<Partition>>>()?;
        MultiPartition::new(components)
    }
}

impl Serialize for MultiPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Position `(column i, row j)` of a box in a Young diagram, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DiagramBox {
    pub column: usize,
    pub row: usize,
}

impl DiagramBox {
    pub fn new(column: usize, row: usize) -> Self {
        DiagramBox { column, row }
    }
}

/// `ct(□) = j - i`.
pub fn content(b: DiagramBox) -> i64 {
    b.row as i64 - b.column as i64
}

/// `res_ℓ(λ) = Σ_{□ ∈ λ} σ^{ct(□)}`.
pub fn residue(lambda: &Partition, ell: usize) -> DimVector {
    assert!(ell >= 1, "cycle length must be positive");
    let mut coords = vec![0i64; ell];
    for b in lambda.boxes() {
        coords[content(b).rem_euclid(ell as i64) as usize] += 1;
    }
    DimVector::new(coords)
}

/// `sres_ℓ(ν) = Σ_i σ^i res_ℓ(ν^{(i)})`.
pub fn shifted_residue(nu: &MultiPartition, ell: usize) -> Result<DimVector> {
    if nu.ell() != ell {
        return Err(Error::DimensionMismatch {
            expected: ell,
            found: nu.ell(),
        });
    }
    let mut total = DimVector::zero(ell);
    for (i, p) in nu.components().iter().enumerate() {
        total += &residue(p, ell).rotate(i as i64);
    }
    Ok(total)
}

/// Partitions of exactly `n` in reverse lexicographic order.
#[derive(Clone, Debug)]
pub struct PartitionsOf {
    next: Option<Vec<usize>>,
}

impl PartitionsOf {
    pub fn new(n: usize) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        PartitionsOf { next: Some(first) }
    }
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Successor: lower the last part > 1 by one, then refill the tail
        // greedily with parts no larger than the lowered value.
        if let Some(k) = current.iter().rposition(|&p| p > 1) {
            let mut succ = current[..k].to_vec();
            let v = current[k] - 1;
            let mut rest = current[k + 1..].iter().sum::<usize>() + 1;
            succ.push(v);
            while rest > 0 {
                let p = rest.min(v);
                succ.push(p);
                rest -= p;
            }
            self.next = Some(succ);
        }
        Some(Partition { parts: current })
    }
}

/// Every partition of size `0..=max_size`, by size and then reverse lexicographically.
pub fn enumerate_partitions(max_size: usize) -> impl Iterator<Item = Partition> {
    (0..=max_size).flat_map(PartitionsOf::new)
}

/// Compositions of `n` into `parts` nonnegative summands, reverse lexicographic.
fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut tail in compositions(n - first, parts - 1) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// The set `P_ℓ(n)` of `ℓ`-multipartitions of total size `n`, in the order of
/// [`MultiPartition`]'s `Ord`.
pub fn enumerate_multipartitions(n: usize, ell: usize) -> impl Iterator<Item = MultiPartition> {
    assert!(ell >= 1, "cycle length must be positive");
    compositions(n, ell).into_iter().flat_map(|sizes| {
        sizes
            .into_iter()
            .map(|s| PartitionsOf::new(s).collect::<Vec<_>>())
            .multi_cartesian_product()
            .map(|components| MultiPartition { components })
    })
}
