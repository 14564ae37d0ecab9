//! Orbit labels `(λ; ν)` of the enhanced cyclic nilpotent cone.
//!
//! `Q(n, ℓ)` is the set of pairs with `res_ℓ(λ) + sres_ℓ(ν) = nδ`. A
//! representative of the orbit `O_(λ;ν)` splits as one framed indecomposable
//! (dimension vector `ε_∞ + res_ℓ(λ)`) plus one string module per row of each
//! `ν^(i)`. The string attached to row `j` of `ν^(i)` has dimension vector
//! `Σ_{□ in row j} σ^{i + ct(□)}`, so the strings of `ν^(i)` add up to
//! `σ^i res_ℓ(ν^(i))`.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_rational::BigRational;
use serde::Serialize;

use crate::abelian::{cokernel, FGAbelianGroup, IntMatrix};
use crate::error::{Error, Result};
use crate::params::RationalCharacter;
use crate::partitions::{
    enumerate_multipartitions, enumerate_partitions, residue, shifted_residue, MultiPartition,
    Partition,
};
use crate::rootlattice::{delta, is_integral_pairing, DimVector};

/// A pair `(λ; ν) ∈ Q(n, ℓ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbitLabel {
    lambda: Partition,
    nu: MultiPartition,
    n: usize,
    ell: usize,
}

impl OrbitLabel {
    /// Validates `res_ℓ(λ) + sres_ℓ(ν) = nδ` and recovers `n`.
    pub fn new(lambda: Partition, nu: MultiPartition) -> Result<Self> {
        let ell = nu.ell();
        let total = lambda.size() + nu.size();
        if !total.is_multiple_of(ell) {
            return Err(Error::InvalidLabel(format!(
                "({lambda}; {nu}): |λ| + |ν| = {total} is not a multiple of ℓ = {ell}"
            )));
        }
        let n = total / ell;
        let sum = &residue(&lambda, ell) + &shifted_residue(&nu, ell)?;
        if sum != n as i64 * delta(ell) {
            return Err(Error::InvalidLabel(format!(
                "({lambda}; {nu}): res + sres = {sum}, not {n}δ"
            )));
        }
        Ok(OrbitLabel { lambda, nu, n, ell })
    }

    /// As [`OrbitLabel::new`], additionally requiring the given `n`.
    pub fn with_n(lambda: Partition, nu: MultiPartition, n: usize) -> Result<Self> {
        let label = OrbitLabel::new(lambda, nu)?;
        if label.n != n {
            return Err(Error::InvalidLabel(format!(
                "({}; {}) lies in Q({}, {}), not Q({n}, {})",
                label.lambda, label.nu, label.n, label.ell, label.ell
            )));
        }
        Ok(label)
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn nu(&self) -> &MultiPartition {
        &self.nu
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.ell
    }
}

impl std::fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}; {})", self.lambda, self.nu)
    }
}

/// `|λ|` descending, `λ` reverse lexicographic, then `ν` in multipartition order.
impl Ord for OrbitLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.ell)
            .cmp(&(other.n, other.ell))
            .then_with(|| other.lambda.size().cmp(&self.lambda.size()))
            .then_with(|| other.lambda.parts().cmp(self.lambda.parts()))
            .then_with(|| self.nu.cmp(&other.nu))
    }
}

impl PartialOrd for OrbitLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The string module attached to row `row` of `ν^(start)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StringSummand {
    pub start: usize,
    pub row: usize,
    pub dim_vector: DimVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SummandDecomposition {
    pub framed: DimVector,
    pub strings: Vec<StringSummand>,
}

impl SummandDecomposition {
    /// `framed + Σ strings`.
    pub fn total(&self) -> DimVector {
        self.strings
            .iter()
            .fold(self.framed.clone(), |acc, s| &acc + &s.dim_vector)
    }
}

/// Dimension vector of row `row` (1-based, length `len`) of a diagram placed at
/// component `start`: `Σ_{c=1}^{len} σ^{start + row - c}`.
fn row_string(ell: usize, start: usize, row: usize, len: usize) -> DimVector {
    let mut coords = vec![0i64; ell];
    for c in 1..=len {
        let r = (start as i64 + row as i64 - c as i64).rem_euclid(ell as i64) as usize;
        coords[r] += 1;
    }
    DimVector::new(coords)
}

pub fn decompose(label: &OrbitLabel) -> SummandDecomposition {
    let ell = label.ell;
    let framed = residue(&label.lambda, ell).with_framing(1);
    let strings = label
        .nu
        .components()
        .iter()
        .enumerate()
        .flat_map(|(i, p)| {
            p.parts()
                .iter()
                .enumerate()
                .map(move |(r, &len)| StringSummand {
                    start: i,
                    row: r + 1,
                    dim_vector: row_string(ell, i, r + 1, len),
                })
        })
        .collect();
    SummandDecomposition { framed, strings }
}

fn distinct_string_vectors(decomp: &SummandDecomposition) -> Vec<DimVector> {
    let mut cols: Vec<DimVector> = Vec::new();
    for s in &decomp.strings {
        if !cols.contains(&s.dim_vector) {
            cols.push(s.dim_vector.clone());
        }
    }
    cols
}

/// `π_1(O_(λ;ν))`: the cokernel of the matrix whose columns are the dimension
/// vectors of the non-framed summands, inside `Z^ℓ`.
pub fn fundamental_group(label: &OrbitLabel) -> FGAbelianGroup {
    let cols = distinct_string_vectors(&decompose(label));
    cokernel(&IntMatrix::from_columns(label.ell, &cols))
}

/// Whether `χ·β ∈ Z` for every string summand `β`.
pub fn admits_monodromic_local_system(label: &OrbitLabel, chi: &RationalCharacter) -> Result<bool> {
    if chi.ell() != label.ell {
        return Err(Error::DimensionMismatch {
            expected: label.ell,
            found: chi.ell(),
        });
    }
    for s in decompose(label).strings {
        if !is_integral_pairing(chi, &s.dim_vector)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Partitions placed at component `start` whose rotated residue fits under
/// `budget`, together with that residue. Rows are added one at a time so a
/// branch is cut as soon as one coordinate overflows.
fn fitting_partitions(ell: usize, start: usize, budget: &[i64]) -> Vec<(Partition, Vec<i64>)> {
    fn grow(
        ell: usize,
        start: usize,
        budget: &[i64],
        rows: &mut Vec<usize>,
        used: &mut Vec<i64>,
        out: &mut Vec<(Partition, Vec<i64>)>,
    ) {
        out.push((
            Partition::new(rows.clone()).expect("rows are weakly decreasing"),
            used.clone(),
        ));
        let row = rows.len() as i64 + 1;
        let max_len = rows.last().copied().unwrap_or(usize::MAX);
        let mut added = Vec::new();
        for len in 1..=max_len {
            let r = (start as i64 + row - len as i64).rem_euclid(ell as i64) as usize;
            if used[r] >= budget[r] {
                break;
            }
            used[r] += 1;
            added.push(r);
            rows.push(len);
            grow(ell, start, budget, rows, used, out);
            rows.pop();
        }
        for r in added {
            used[r] -= 1;
        }
    }
    let mut out = Vec::new();
    grow(
        ell,
        start,
        budget,
        &mut Vec::new(),
        &mut vec![0; ell],
        &mut out,
    );
    out
}

fn fill_components(
    ell: usize,
    i: usize,
    remaining: &mut [i64],
    chosen: &mut Vec<Partition>,
    out: &mut Vec<MultiPartition>,
) {
    if i == ell {
        if remaining.iter().all(|&x| x == 0) {
            out.push(MultiPartition::new(chosen.clone()).expect("ℓ ≥ 1 components"));
        }
        return;
    }
    for (p, used) in fitting_partitions(ell, i, remaining) {
        for (rem, u) in remaining.iter_mut().zip(&used) {
            *rem -= u;
        }
        chosen.push(p);
        fill_components(ell, i + 1, remaining, chosen, out);
        chosen.pop();
        for (rem, u) in remaining.iter_mut().zip(&used) {
            *rem += u;
        }
    }
}

/// All of `Q(n, ℓ)`, ordered by [`OrbitLabel`]'s `Ord`: `λ` from largest to
/// smallest, then `ν`.
pub fn enumerate_orbits(n: usize, ell: usize) -> Vec<OrbitLabel> {
    assert!(ell >= 1, "cycle length must be positive");
    let target = n as i64;
    let mut labels = Vec::new();
    for lambda in enumerate_partitions(n * ell) {
        let res = residue(&lambda, ell);
        if res.coords().iter().any(|&c| c > target) {
            continue;
        }
        let mut remaining: Vec<i64> = res.coords().iter().map(|c| target - c).collect();
        let mut nus = Vec::new();
        fill_components(
            ell,
            0,
            &mut remaining,
            &mut Vec::with_capacity(ell),
            &mut nus,
        );
        labels.extend(nus.into_iter().map(|nu| OrbitLabel {
            lambda: lambda.clone(),
            nu,
            n,
            ell,
        }));
    }
    labels.sort();
    labels
}

/// `Q_χ(n, ℓ)`: the orbits carrying a `(G, χ)`-monodromic local system.
pub fn enumerate_q_chi(n: usize, ell: usize, chi: &RationalCharacter) -> Result<Vec<OrbitLabel>> {
    let catalog = OrbitCatalog::new(n, ell);
    catalog
        .admissible(chi)
        .map(|labels| labels.into_iter().cloned().collect())
}

/// `Q(n, ℓ)` together with each orbit's decomposition, for answering many
/// character queries against one `(n, ℓ)`.
///
/// Distinct string vectors across the whole catalog are interned, so a query
/// pairs `χ` with each of them once.
#[derive(Clone, Debug)]
pub struct OrbitCatalog {
    n: usize,
    ell: usize,
    labels: Vec<OrbitLabel>,
    decompositions: Vec<SummandDecomposition>,
    vectors: Vec<DimVector>,
    summands: Vec<Vec<u32>>,
    multipartition_count: usize,
}

impl OrbitCatalog {
    pub fn new(n: usize, ell: usize) -> Self {
        let labels = enumerate_orbits(n, ell);
        let decompositions: Vec<_> = labels.iter().map(decompose).collect();
        let mut index: HashMap<DimVector, u32> = HashMap::new();
        let mut vectors = Vec::new();
        let summands = decompositions
            .iter()
            .map(|d| {
                let mut ids: Vec<u32> = d
                    .strings
                    .iter()
                    .map(|s| {
                        *index.entry(s.dim_vector.clone()).or_insert_with(|| {
                            vectors.push(s.dim_vector.clone());
                            (vectors.len() - 1) as u32
                        })
                    })
                    .collect();
                ids.sort_unstable();
                ids.dedup();
                ids
            })
            .collect();
        OrbitCatalog {
            n,
            ell,
            labels,
            decompositions,
            vectors,
            summands,
            multipartition_count: enumerate_multipartitions(n, ell).count(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn labels(&self) -> &[OrbitLabel] {
        &self.labels
    }

    pub fn decompositions(&self) -> &[SummandDecomposition] {
        &self.decompositions
    }

    /// `|Q(n, ℓ)|`.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// `|P_ℓ(n)|`, counted by enumeration.
    pub fn multipartition_count(&self) -> usize {
        self.multipartition_count
    }

    /// Per orbit, whether it admits a `(G, χ)`-monodromic local system.
    pub fn monodromic_flags(&self, chi: &RationalCharacter) -> Result<Vec<bool>> {
        if chi.ell() != self.ell {
            return Err(Error::DimensionMismatch {
                expected: self.ell,
                found: chi.ell(),
            });
        }
        let integral = self
            .vectors
            .iter()
            .map(|v| is_integral_pairing(chi, v))
            .collect::<Result<Vec<bool>>>()?;
        Ok(self
            .summands
            .iter()
            .map(|ids| ids.iter().all(|&k| integral[k as usize]))
            .collect())
    }

    pub fn admissible(&self, chi: &RationalCharacter) -> Result<Vec<&OrbitLabel>> {
        let flags = self.monodromic_flags(chi)?;
        Ok(self
            .labels
            .iter()
            .zip(flags)
            .filter_map(|(l, ok)| ok.then_some(l))
            .collect())
    }

    /// `|Q_χ(n, ℓ)|`, the number of simple objects.
    pub fn count_admissible(&self, chi: &RationalCharacter) -> Result<usize> {
        Ok(self
            .monodromic_flags(chi)?
            .into_iter()
            .filter(|&b| b)
            .count())
    }

    /// Pairings `χ·β` for the distinct string vectors `β` in this catalog.
    pub fn string_pairings(
        &self,
        chi: &RationalCharacter,
    ) -> Result<Vec<(DimVector, BigRational)>> {
        self.vectors
            .iter()
            .map(|v| Ok((v.clone(), crate::rootlattice::pair(chi, v)?)))
            .collect()
    }
}
