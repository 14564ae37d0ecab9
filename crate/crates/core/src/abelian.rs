//! Integer matrices, Smith normal form, and finitely generated abelian groups.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::rootlattice::DimVector;

/// A dense `rows × cols` integer matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows·cols");
        IntMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    /// The `rows × columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[DimVector]) -> Self {
        let mut m = IntMatrix::zeros(rows, columns.len());
        for (c, v) in columns.iter().enumerate() {
            assert_eq!(v.ell(), rows, "column of wrong length");
            for (r, &x) in v.coords().iter().enumerate() {
                m[(r, c)] = BigInt::from(x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    /// The matrix whose columns are `self`'s columns taken in the given order
    /// (repeats allowed).
    pub fn select_columns(&self, order: &[usize]) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, order.len());
        for (new, &old) in order.iter().enumerate() {
            for r in 0..self.rows {
                m[(r, new)] = self[(r, old)].clone();
            }
        }
        m
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    out[(r, c)] += a * &rhs[(k, c)];
                }
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !a[(r, k)].is_zero()) {
                    Some(r) => {
                        a.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    /// Whether every off-diagonal entry vanishes.
    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self[(r, c)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += factor · row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for c in 0..self.cols {
            let v = &self[(src, c)] * factor;
            self[(dst, c)] += v;
        }
    }

    /// col[dst] += factor · col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for r in 0..self.rows {
            let v = &self[(r, src)] * factor;
            self[(r, dst)] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -&self[(r, c)];
            self[(r, c)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// `U · M · V = D` with `U`, `V` unimodular and `D` diagonal,
/// `d_1 | d_2 | ⋯`, all `d_k ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d.diagonal()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.d.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // Pivot on the entry of least absolute value in the trailing block.
            // Re-selecting every round, rather than chasing remainders, keeps
            // intermediate entries from blowing up.
            let pivot = (t..rows)
                .flat_map(|r| (t..cols).map(move |c| (r, c)))
                .filter(|&(r, c)| !d[(r, c)].is_zero())
                .min_by(|&a, &b| d[a].magnitude().cmp(d[b].magnitude()));
            let Some((pr, pc)) = pivot else { break };
            d.swap_rows(t, pr);
            u.swap_rows(t, pr);
            d.swap_cols(t, pc);
            v.swap_cols(t, pc);

            let mut clear = true;
            for r in t + 1..rows {
                if d[(r, t)].is_zero() {
                    continue;
                }
                let q = -d[(r, t)].div_floor(&d[(t, t)]);
                d.add_row_multiple(r, t, &q);
                u.add_row_multiple(r, t, &q);
                clear &= d[(r, t)].is_zero();
            }
            for c in t + 1..cols {
                if d[(t, c)].is_zero() {
                    continue;
                }
                let q = -d[(t, c)].div_floor(&d[(t, t)]);
                d.add_col_multiple(c, t, &q);
                v.add_col_multiple(c, t, &q);
                clear &= d[(t, c)].is_zero();
            }
            if !clear {
                continue;
            }
            // Row and column are clear. Enforce d_t | every trailing entry.
            let bad = (t + 1..rows)
                .flat_map(|r| (t + 1..cols).map(move |c| (r, c)))
                .find(|&(r, c)| !d[(r, c)].is_multiple_of(&d[(t, t)]));
            match bad {
                Some((r, _)) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, r, &one);
                    u.add_row_multiple(t, r, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { u, d, v }
}

/// `Z^free_rank ⊕ Z/d_1 ⊕ ⋯ ⊕ Z/d_t` with `2 ≤ d_1 | d_2 | ⋯ | d_t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FGAbelianGroup {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl FGAbelianGroup {
    pub fn trivial() -> Self {
        FGAbelianGroup {
            free_rank: 0,
            invariant_factors: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        FGAbelianGroup {
            free_rank: rank,
            invariant_factors: Vec::new(),
        }
    }

    /// `Z/d`; `d = 0` gives `Z`, `d = ±1` the trivial group.
    pub fn cyclic(d: impl Into<BigInt>) -> Self {
        FGAbelianGroup::from_diagonal(1, &[d.into()])
    }

    /// The quotient of `Z^ambient_rank` by the span of `diag · e_k`. Zero
    /// entries (and missing ones) become free summands, units are dropped.
    /// The nonzero entries must already form a divisibility chain.
    pub fn from_diagonal(ambient_rank: usize, diag: &[BigInt]) -> Self {
        let nonzero: Vec<BigInt> = diag
            .iter()
            .filter(|x| !x.is_zero())
            .map(|x| x.abs())
            .collect();
        debug_assert!(nonzero.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        FGAbelianGroup {
            free_rank: ambient_rank - nonzero.len(),
            invariant_factors: nonzero.into_iter().filter(|x| !x.is_one()).collect(),
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }
}

/// `Z^2 x Z/2 x Z/4`; the trivial group prints as `1`, `Z^1` as `Z`.
impl fmt::Display for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("1");
        }
        let mut pieces = Vec::new();
        match self.free_rank {
            0 => {}
            1 => pieces.push("Z".to_string()),
            r => pieces.push(format!("Z^{r}")),
        }
        pieces.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        f.write_str(&pieces.join(" x "))
    }
}

struct FactorList<'a>(&'a [BigInt]);

impl Serialize for FactorList<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for d in self.0 {
            match d.to_u64() {
                Some(x) => seq.serialize_element(&x)?,
                None => seq.serialize_element(&d.to_string())?,
            }
        }
        seq.end()
    }
}

/// `{"free_rank": r, "invariant_factors": [d1, …]}`; factors beyond `u64`
/// are written as decimal strings.
impl Serialize for FGAbelianGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("FGAbelianGroup", 2)?;
        st.serialize_field("free_rank", &self.free_rank)?;
        st.serialize_field("invariant_factors", &FactorList(&self.invariant_factors))?;
        st.end()
    }
}

/// `coker(M: Z^cols → Z^rows)`.
pub fn cokernel(m: &IntMatrix) -> FGAbelianGroup {
    let snf = smith_normal_form(m);
    FGAbelianGroup::from_diagonal(m.rows(), &snf.invariant_factors())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d, "U·M·V ≠ D for {m}");
        assert!(s.d.is_diagonal());
        assert!(s.u.determinant().abs().is_one());
        assert!(s.v.determinant().abs().is_one());
        let diag = s.d.diagonal();
        assert!(diag.iter().all(|x| !x.is_negative()));
        assert!(
            diag.windows(2).all(|w| w[1].is_multiple_of(&w[0])),
            "{diag:?}"
        );
        s
    }

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn snf_examples() {
        assert_eq!(
            check(&IntMatrix::from_rows(&[[2]])).d.diagonal(),
            ints(&[2])
        );
        assert_eq!(
            check(&IntMatrix::from_rows(&[[1], [1]])).d,
            IntMatrix::from_rows(&[[1], [0]])
        );
        assert_eq!(
            check(&IntMatrix::from_rows(&[[2, 4], [6, 8]])).d.diagonal(),
            ints(&[2, 4])
        );
        // non-divisible diagonal input needs the gcd fix-up
        assert_eq!(
            check(&IntMatrix::from_rows(&[[2, 0], [0, 3]])).d.diagonal(),
            ints(&[1, 6])
        );
        assert_eq!(
            check(&IntMatrix::from_rows(&[[0, 0, 0], [0, -4, 6]]))
                .d
                .diagonal(),
            ints(&[2, 0])
        );
    }

    #[test]
    fn snf_empty_matrices() {
        for (r, c) in [(0, 0), (3, 0), (0, 2)] {
            let s = check(&IntMatrix::zeros(r, c));
            assert_eq!(s.rank(), 0);
        }
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(cokernel(&IntMatrix::zeros(3, 0)), FGAbelianGroup::free(3));
        assert_eq!(
            cokernel(&IntMatrix::from_rows(&[[2]])),
            FGAbelianGroup::cyclic(2)
        );
        assert_eq!(
            cokernel(&IntMatrix::from_rows(&[[1], [1]])),
            FGAbelianGroup::free(1)
        );
        assert_eq!(
            cokernel(&IntMatrix::from_rows(&[[6, 4]])),
            FGAbelianGroup::cyclic(2)
        );
        assert_eq!(
            cokernel(&IntMatrix::from_rows(&[[3, 5]])),
            FGAbelianGroup::trivial()
        );
    }

    #[test]
    fn group_text_and_json() {
        assert_eq!(FGAbelianGroup::trivial().to_string(), "1");
        assert_eq!(FGAbelianGroup::free(1).to_string(), "Z");
        assert_eq!(FGAbelianGroup::free(2).to_string(), "Z^2");
        assert_eq!(FGAbelianGroup::cyclic(2).to_string(), "Z/2");
        let g = FGAbelianGroup::from_diagonal(4, &ints(&[1, 2, 4]));
        assert_eq!(g.to_string(), "Z x Z/2 x Z/4");
        assert_eq!(g.torsion_order(), BigInt::from(8));
        assert_eq!(FGAbelianGroup::cyclic(0), FGAbelianGroup::free(1));
        assert_eq!(FGAbelianGroup::cyclic(-1), FGAbelianGroup::trivial());
    }

    #[test]
    fn bareiss_determinant() {
        let m = IntMatrix::from_rows(&[[2, 4], [6, 8]]);
        assert_eq!(m.determinant(), BigInt::from(-8));
        let m = IntMatrix::from_rows(&[[0, 1, 2], [1, 0, 3], [4, -3, 8]]);
        assert_eq!(m.determinant(), BigInt::from(-2));
        let m = IntMatrix::from_rows(&[[1, 2], [2, 4]]);
        assert_eq!(m.determinant(), BigInt::zero());
    }

    #[test]
    fn entries_stay_small_on_a_dense_full_rank_matrix() {
        // Chasing remainders as pivots once blew this up to megabit entries.
        let m = IntMatrix::from_rows(&[
            [8, -6, -4, -9, 7, -1],
            [2, 0, -9, -2, -5, 4],
            [-7, 9, -2, -6, -7, -4],
            [-3, -4, -5, -2, 7, 9],
            [-7, -4, 0, 3, 9, 7],
            [8, 8, -8, -7, 6, -2],
        ]);
        let s = check(&m);
        assert_eq!(s.invariant_factors(), ints(&[1, 1, 1, 1, 1, 617683]));
        let widest =
            s.u.entries
                .iter()
                .chain(&s.v.entries)
                .map(BigInt::bits)
                .max();
        assert!(widest < Some(128), "{widest:?}");
    }
}
