//! Exact integer linear algebra: dense arbitrary-precision matrices, Smith and
//! Hermite normal forms, finitely generated abelian groups presented as
//! `Z^k / columns(relations)`, and subgroups thereof.
//!
//! Everything here is deterministic: pivots are chosen by smallest nonzero
//! absolute value with ties broken by lowest row, then lowest column, so a
//! fixed input always produces the same decomposition.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix over the integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

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
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged row lengths".into()));
        }
        let entries = rows.iter().flatten().map(|&v| BigInt::from(v)).collect();
        IntMatrix::new(r, c, entries)
    }

    /// Builds a matrix whose columns are the given ambient vectors.
    pub fn from_columns(ambient: usize, columns: &[Vec<BigInt>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != ambient) {
            return Err(Error::DimensionMismatch(format!(
                "column length differs from ambient rank {ambient}"
            )));
        }
        let mut m = IntMatrix::zeros(ambient, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(
                "row counts differ in hstack".into(),
            ));
        }
        let mut m = IntMatrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(m)
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(dst, j) + q * self.get(src, j);
            self.set(dst, j, v);
        }
    }

    /// col[dst] += q * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, dst) + q * self.get(i, src);
            self.set(i, dst, v);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j);
            self.set(r, j, v);
        }
    }

    fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, c);
            self.set(i, c, v);
        }
    }

    /// Determinant by cofactor expansion; fine for the small square matrices
    /// used here (fan ranks and grading ambients).
    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(
                "determinant of a non-square matrix".into(),
            ));
        }
        fn rec(m: &IntMatrix, cols: &mut Vec<usize>, row: usize) -> BigInt {
            if cols.is_empty() {
                return BigInt::one();
            }
            let mut acc = BigInt::zero();
            for pos in 0..cols.len() {
                let c = cols[pos];
                let a = m.get(row, c).clone();
                if a.is_zero() {
                    continue;
                }
                cols.remove(pos);
                let minor = rec(m, cols, row + 1);
                cols.insert(pos, c);
                if pos % 2 == 0 {
                    acc += a * minor;
                } else {
                    acc -= a * minor;
                }
            }
            acc
        }
        let mut cols: Vec<usize> = (0..self.cols).collect();
        Ok(rec(self, &mut cols, 0))
    }

    /// Inverse of a unimodular matrix (|det| = 1), via the adjugate.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        let d = self.det()?;
        if !d.abs().is_one() {
            return Err(Error::Internal(format!(
                "matrix is not unimodular (det {d})"
            )));
        }
        let n = self.rows;
        let mut inv = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                // cofactor C_ji for the adjugate
                let mut sub = IntMatrix::zeros(n - 1, n - 1);
                for (ri, r) in (0..n).filter(|&r| r != j).enumerate() {
                    for (ci, c) in (0..n).filter(|&c| c != i).enumerate() {
                        sub.set(ri, ci, self.get(r, c).clone());
                    }
                }
                let mut cof = sub.det()?;
                if (i + j) % 2 == 1 {
                    cof = -cof;
                }
                inv.set(i, j, &cof * &d);
            }
        }
        Ok(inv)
    }
}

/// Smith normal form `U * A * V = D` with unimodular `U`, `V` and diagonal `D`
/// whose nonnegative entries form a divisibility chain.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d.get(i, i).clone()).collect()
    }
}

/// Pivot search over the trailing submatrix starting at `(t, t)`: smallest
/// nonzero absolute value, ties broken by lowest row then lowest column.
fn find_pivot(m: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    let mut best_abs = BigInt::zero();
    for i in t..m.rows() {
        for j in t..m.cols() {
            let v = m.get(i, j);
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            if best.is_none() || a < best_abs {
                best = Some((i, j));
                best_abs = a;
            }
        }
    }
    best
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let mut d = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut v = IntMatrix::identity(a.cols());
    let steps = a.rows().min(a.cols());
    let mut rank = 0;
    for t in 0..steps {
        'outer: while let Some((pi, pj)) = find_pivot(&d, t) {
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            // clear the pivot column
            for i in t + 1..d.rows() {
                if !d.get(i, t).is_zero() {
                    let q = -(d.get(i, t) / d.get(t, t));
                    d.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                }
            }
            if (t + 1..d.rows()).any(|i| !d.get(i, t).is_zero()) {
                continue; // remainders left behind; re-pivot
            }
            // clear the pivot row
            for j in t + 1..d.cols() {
                if !d.get(t, j).is_zero() {
                    let q = -(d.get(t, j) / d.get(t, t));
                    d.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                }
            }
            if (t + 1..d.cols()).any(|j| !d.get(t, j).is_zero()) {
                continue;
            }
            // enforce divisibility of the trailing block by the pivot
            let p = d.get(t, t).clone();
            for i in t + 1..d.rows() {
                for j in t + 1..d.cols() {
                    if !(d.get(i, j) % &p).is_zero() {
                        d.add_row_multiple(t, i, &BigInt::one());
                        u.add_row_multiple(t, i, &BigInt::one());
                        continue 'outer;
                    }
                }
            }
            break;
        }
        if d.get(t, t).is_zero() {
            break;
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        rank = t + 1;
    }
    SmithForm { u, d, v, rank }
}

/// Column echelon form of the column lattice: the returned matrix has the
/// same column span over Z, pivot rows strictly increasing across columns,
/// positive pivots, and entries left of each pivot reduced into `[0, pivot)`.
/// Zero columns are dropped.
pub fn column_echelon_form(m: &IntMatrix) -> IntMatrix {
    let mut h = m.clone();
    let mut pivot_col = 0;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for r in 0..h.rows() {
        if pivot_col == h.cols() {
            break;
        }
        loop {
            // smallest nonzero |entry| in row r among columns >= pivot_col
            let mut best: Option<usize> = None;
            let mut best_abs = BigInt::zero();
            for j in pivot_col..h.cols() {
                let val = h.get(r, j);
                if val.is_zero() {
                    continue;
                }
                let a = val.abs();
                if best.is_none() || a < best_abs {
                    best = Some(j);
                    best_abs = a;
                }
            }
            let Some(j) = best else {
                break;
            };
            h.swap_cols(pivot_col, j);
            let mut finished = true;
            for j in pivot_col + 1..h.cols() {
                if !h.get(r, j).is_zero() {
                    let q = -(h.get(r, j) / h.get(r, pivot_col));
                    h.add_col_multiple(j, pivot_col, &q);
                    if !h.get(r, j).is_zero() {
                        finished = false;
                    }
                }
            }
            if finished {
                break;
            }
        }
        if !h.get(r, pivot_col).is_zero() {
            if h.get(r, pivot_col).is_negative() {
                h.negate_col(pivot_col);
            }
            let p = h.get(r, pivot_col).clone();
            for j in 0..pivot_col {
                let q = -h.get(r, j).div_floor(&p);
                h.add_col_multiple(j, pivot_col, &q);
            }
            pivots.push((r, pivot_col));
            pivot_col += 1;
        }
    }
    // keep pivot columns only
    let keep: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut out = IntMatrix::zeros(h.rows(), keep.len());
    for (nj, &j) in keep.iter().enumerate() {
        for i in 0..h.rows() {
            out.set(i, nj, h.get(i, j).clone());
        }
    }
    out
}

/// Rank of the column lattice (equals the rank over Q).
pub fn rank(m: &IntMatrix) -> usize {
    column_echelon_form(m).cols()
}

/// Whether `v` lies in the column span of an echelon form produced by
/// [`column_echelon_form`].
pub fn echelon_contains(echelon: &IntMatrix, v: &[BigInt]) -> Result<bool> {
    if v.len() != echelon.rows() {
        return Err(Error::DimensionMismatch(format!(
            "vector length {} against ambient rank {}",
            v.len(),
            echelon.rows()
        )));
    }
    let mut rem: Vec<BigInt> = v.to_vec();
    let mut col = 0;
    for r in 0..echelon.rows() {
        if col < echelon.cols() && !echelon.get(r, col).is_zero() {
            let p = echelon.get(r, col);
            if !(&rem[r] % p).is_zero() {
                return Ok(false);
            }
            let q = &rem[r] / p;
            if !q.is_zero() {
                for i in r..echelon.rows() {
                    rem[i] -= &q * echelon.get(i, col);
                }
            }
            col += 1;
        } else if !rem[r].is_zero() {
            return Ok(false);
        }
    }
    Ok(rem.iter().all(Zero::is_zero))
}

/// Integer basis of the kernel of `m` (columns), computed from the Smith
/// transform: the trailing columns of `V` span the kernel saturated in Z^cols.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let mut out = IntMatrix::zeros(m.cols(), m.cols() - snf.rank);
    for (nj, j) in (snf.rank..m.cols()).enumerate() {
        for i in 0..m.cols() {
            out.set(i, nj, snf.v.get(i, j).clone());
        }
    }
    out
}

/// Group order of `Z^k / columns(m)`: finite iff the columns have full rank.
pub fn cokernel_order(m: &IntMatrix) -> GroupIndex {
    let snf = smith_normal_form(m);
    if snf.rank < m.rows() {
        return GroupIndex::Infinite;
    }
    let mut order = BigUint::one();
    for d in snf.diagonal() {
        order *= d.magnitude();
    }
    GroupIndex::Finite(order)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupIndex {
    Finite(BigUint),
    Infinite,
}

impl GroupIndex {
    pub fn is_finite(&self) -> bool {
        matches!(self, GroupIndex::Finite(_))
    }

    pub fn finite(&self) -> Option<&BigUint> {
        match self {
            GroupIndex::Finite(n) => Some(n),
            GroupIndex::Infinite => None,
        }
    }
}

/// Finitely generated abelian group presented as `Z^k / columns(relations)`.
#[derive(Debug, Clone)]
pub struct FgAbelianGroup {
    ambient_rank: usize,
    relations: IntMatrix,
    smith: SmithForm,
    relations_echelon: IntMatrix,
    invariant_factors: Vec<BigUint>,
}

impl FgAbelianGroup {
    pub fn new(ambient_rank: usize, relations: IntMatrix) -> Result<Self> {
        if relations.rows() != ambient_rank {
            return Err(Error::DimensionMismatch(format!(
                "relation columns live in Z^{}, expected Z^{ambient_rank}",
                relations.rows()
            )));
        }
        let smith = smith_normal_form(&relations);
        let mut invariant_factors: Vec<BigUint> = smith
            .diagonal()
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .map(|d| d.magnitude().clone())
            .collect();
        for _ in smith.rank..ambient_rank {
            invariant_factors.push(BigUint::zero());
        }
        let relations_echelon = column_echelon_form(&relations);
        Ok(FgAbelianGroup {
            ambient_rank,
            relations,
            smith,
            relations_echelon,
            invariant_factors,
        })
    }

    /// The free group `Z^k`.
    pub fn free(rank: usize) -> Self {
        FgAbelianGroup::new(rank, IntMatrix::zeros(rank, 0)).expect("free group")
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    /// Invariant factors of the group: nontrivial torsion in divisibility
    /// order, then one zero per free factor.
    pub fn invariant_factors(&self) -> &[BigUint] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.ambient_rank - self.smith.rank
    }

    pub fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.ambient_rank]
    }

    /// Whether two ambient vectors represent the same group element.
    pub fn same_class(&self, a: &[BigInt], b: &[BigInt]) -> Result<bool> {
        if a.len() != self.ambient_rank || b.len() != self.ambient_rank {
            return Err(Error::DimensionMismatch("ambient vector length".into()));
        }
        let diff: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        echelon_contains(&self.relations_echelon, &diff)
    }

    pub fn is_zero_class(&self, a: &[BigInt]) -> Result<bool> {
        self.same_class(a, &self.zero())
    }

    /// Reduction data for reporting: canonical torsion/free coordinates.
    pub fn presentation(&self) -> QuotientPresentation {
        let u = self.smith.u.clone();
        let mut torsion_rows = Vec::new();
        let mut torsion_moduli = Vec::new();
        for (i, d) in self.smith.diagonal().iter().enumerate() {
            if !d.is_zero() && !d.is_one() {
                torsion_rows.push(i);
                torsion_moduli.push(d.magnitude().clone());
            }
        }
        let free_rows: Vec<usize> = (self.smith.rank..self.ambient_rank).collect();
        // Normalize the sign of each free coordinate functional so the first
        // nonzero coefficient is positive.
        let mut u_norm = u.clone();
        for &r in &free_rows {
            let flip = (0..u_norm.cols())
                .map(|j| u_norm.get(r, j))
                .find(|v| !v.is_zero())
                .map(Signed::is_negative)
                .unwrap_or(false);
            if flip {
                u_norm.negate_row(r);
            }
        }
        QuotientPresentation {
            u: u_norm,
            torsion_rows,
            torsion_moduli,
            free_rows,
            ambient_rank: self.ambient_rank,
        }
    }
}

/// Canonical coordinates on a quotient `Z^k / L`: torsion coordinates reduced
/// modulo their invariant factor, free coordinates with a deterministic sign.
#[derive(Debug, Clone)]
pub struct QuotientPresentation {
    u: IntMatrix,
    torsion_rows: Vec<usize>,
    torsion_moduli: Vec<BigUint>,
    free_rows: Vec<usize>,
    ambient_rank: usize,
}

impl QuotientPresentation {
    pub fn free_rank(&self) -> usize {
        self.free_rows.len()
    }

    pub fn torsion_moduli(&self) -> &[BigUint] {
        &self.torsion_moduli
    }

    /// Reduced coordinates of an ambient vector: torsion parts then free parts.
    pub fn reduce(&self, v: &[BigInt]) -> Result<(Vec<BigUint>, Vec<BigInt>)> {
        if v.len() != self.ambient_rank {
            return Err(Error::DimensionMismatch("ambient vector length".into()));
        }
        let uv = self.u.mul_vec(v)?;
        let torsion = self
            .torsion_rows
            .iter()
            .zip(&self.torsion_moduli)
            .map(|(&r, m)| {
                uv[r]
                    .mod_floor(&BigInt::from(m.clone()))
                    .magnitude()
                    .clone()
            })
            .collect();
        let free = self.free_rows.iter().map(|&r| uv[r].clone()).collect();
        Ok((torsion, free))
    }

    /// Ambient representative with the given free coordinates and zero torsion.
    pub fn free_section(&self, coords: &[BigInt]) -> Result<Vec<BigInt>> {
        if coords.len() != self.free_rows.len() {
            return Err(Error::DimensionMismatch("free coordinate count".into()));
        }
        let u_inv = self.u.inverse_unimodular()?;
        let mut v = vec![BigInt::zero(); self.ambient_rank];
        for (c, &r) in coords.iter().zip(&self.free_rows) {
            for i in 0..self.ambient_rank {
                v[i] += u_inv.get(i, r) * c;
            }
        }
        Ok(v)
    }
}

/// Subgroup of an [`FgAbelianGroup`], generated by ambient representatives.
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: FgAbelianGroup,
    generators: IntMatrix,
    echelon: IntMatrix,
    index: GroupIndex,
}

impl Subgroup {
    pub fn new(parent: FgAbelianGroup, generators: IntMatrix) -> Result<Self> {
        if generators.rows() != parent.ambient_rank() {
            return Err(Error::DimensionMismatch(format!(
                "generators live in Z^{}, expected Z^{}",
                generators.rows(),
                parent.ambient_rank()
            )));
        }
        let stacked = generators.hstack(parent.relations())?;
        let echelon = column_echelon_form(&stacked);
        let index = cokernel_order(&stacked);
        Ok(Subgroup {
            parent,
            generators,
            echelon,
            index,
        })
    }

    /// The whole parent group as a subgroup of itself.
    pub fn full(parent: FgAbelianGroup) -> Self {
        let gens = IntMatrix::identity(parent.ambient_rank());
        Subgroup::new(parent, gens).expect("full subgroup")
    }

    pub fn parent(&self) -> &FgAbelianGroup {
        &self.parent
    }

    pub fn generators(&self) -> &IntMatrix {
        &self.generators
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        if v.len() != self.parent.ambient_rank() {
            return Err(Error::DimensionMismatch(format!(
                "vector length {} against ambient rank {}",
                v.len(),
                self.parent.ambient_rank()
            )));
        }
        echelon_contains(&self.echelon, v)
    }

    pub fn index(&self) -> &GroupIndex {
        &self.index
    }

    /// Least `m >= 1` with `m * v` in the subgroup; exists iff the index is
    /// finite, and is then bounded by it.
    pub fn element_order(&self, v: &[BigInt]) -> Result<BigUint> {
        let GroupIndex::Finite(index) = &self.index else {
            return Err(Error::InfiniteIndex);
        };
        let mut acc = vec![BigInt::zero(); v.len()];
        let mut m = BigUint::one();
        loop {
            for (a, x) in acc.iter_mut().zip(v) {
                *a += x;
            }
            if self.contains(&acc)? {
                return Ok(m);
            }
            if &m > index {
                return Err(Error::Internal(
                    "element order exceeded the subgroup index".into(),
                ));
            }
            m += BigUint::one();
        }
    }
}

/// Orders of the given ambient vectors in `parent / subgroup`.
pub fn quotient_order_table(h: &Subgroup, vectors: &[Vec<BigInt>]) -> Result<Vec<BigUint>> {
    vectors.iter().map(|v| h.element_order(v)).collect()
}

/// Whether the columns of `m` span all of `Z^rows`.
pub fn spans_ambient(m: &IntMatrix) -> bool {
    matches!(cokernel_order(m), GroupIndex::Finite(n) if n.is_one())
}
