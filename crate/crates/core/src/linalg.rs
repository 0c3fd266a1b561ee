//! Exact linear algebra over scalars.
//!
//! Elimination (rank, nullspace) is only done for parameter-free matrices;
//! determinants work over rational functions as well.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{ParameterAssignment, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    context: "matrix row",
                    expected: c,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols: c, data })
    }

    /// Matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
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

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.data.iter().all(Scalar::is_rational)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn instantiate(&self, values: &ParameterAssignment) -> Result<Matrix> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.instantiate(values)).collect::<Result<_>>()?,
        })
    }

    fn rational_rows(&self) -> Result<Vec<Vec<BigRational>>> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|s| s.as_rational().cloned().ok_or(Error::ParametricEntries))
                    .collect()
            })
            .collect()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> Result<(Matrix, Vec<usize>)> {
        let mut rows = self.rational_rows()?;
        let pivots = rref_in_place(&mut rows, self.cols);
        let data = rows.into_iter().flatten().map(Scalar::from_rational).collect();
        Ok((
            Matrix {
                rows: self.rows,
                cols: self.cols,
                data,
            },
            pivots,
        ))
    }

    pub fn rank(&self) -> Result<usize> {
        let mut sparse = SparseEchelon::new(self.cols);
        for row in self.rational_rows()? {
            sparse.insert(SparseVec::from_dense(&row));
        }
        Ok(sparse.rank())
    }

    /// Basis of `{ v : M v = 0 }`, one vector per free column.
    pub fn nullspace(&self) -> Result<Vec<Vec<Scalar>>> {
        let mut rows = self.rational_rows()?;
        let pivots = rref_in_place(&mut rows, self.cols);
        Ok(nullspace_from_rref(&rows, &pivots, self.cols)
            .into_iter()
            .map(|v| v.into_iter().map(Scalar::from_rational).collect())
            .collect())
    }

    /// Determinant by Gaussian elimination over the
    /// field of rational functions.
    pub fn determinant(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                context: "determinant of a non-square matrix",
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != col {
                for c in 0..n {
                    a.data.swap(p * n + c, col * n + c);
                }
                det = -det;
            }
            let pivot = a.get(col, col).clone();
            det = &det * &pivot;
            let inv = pivot.recip()?;
            for r in col + 1..n {
                let f = a.get(r, col);
                if f.is_zero() {
                    continue;
                }
                let f = f * &inv;
                for c in col..n {
                    let v = a.get(col, c);
                    if !v.is_zero() {
                        let delta = &f * v;
                        a.data[r * n + c] -= delta;
                    }
                }
            }
        }
        Ok(det)
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// `acc += c * v`, skipping zero terms.
pub fn add_scaled(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

fn rref_in_place(rows: &mut [Vec<BigRational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn nullspace_from_rref(rows: &[Vec<BigRational>], pivots: &[usize], cols: usize) -> Vec<Vec<BigRational>> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for f in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![BigRational::zero(); cols];
        v[f] = BigRational::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -rows[r][f].clone();
        }
        basis.push(v);
    }
    basis
}

/// Sparse rational vector, entries sorted by index with no zeros stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec(Vec<(usize, BigRational)>);

impl SparseVec {
    pub fn new() -> Self {
        SparseVec(Vec::new())
    }

    pub fn from_dense(v: &[BigRational]) -> Self {
        SparseVec(
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        )
    }

    /// Build from unsorted entries, summing duplicates.
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, BigRational)>) -> Self {
        let mut map: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (i, x) in entries {
            *map.entry(i).or_insert_with(BigRational::zero) += x;
        }
        SparseVec(map.into_iter().filter(|(_, x)| !x.is_zero()).collect())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[(usize, BigRational)] {
        &self.0
    }

    pub fn to_dense(&self, len: usize) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); len];
        for (i, x) in &self.0 {
            v[*i] = x.clone();
        }
        v
    }

    fn lead(&self) -> Option<usize> {
        self.0.first().map(|e| e.0)
    }

    fn get(&self, i: usize) -> Option<&BigRational> {
        self.0.binary_search_by_key(&i, |e| e.0).ok().map(|k| &self.0[k].1)
    }

    /// `self - f * other`.
    fn axpy(&self, f: &BigRational, other: &SparseVec) -> SparseVec {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let a = self.0.get(i);
            let b = other.0.get(j);
            match (a, b) {
                (Some(x), Some(y)) if x.0 == y.0 => {
                    let v = &x.1 - f * &y.1;
                    if !v.is_zero() {
                        out.push((x.0, v));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(x), Some(y)) if x.0 < y.0 => {
                    out.push(x.clone());
                    i += 1;
                }
                (Some(x), None) => {
                    out.push(x.clone());
                    i += 1;
                }
                (_, Some(y)) => {
                    out.push((y.0, -(f * &y.1)));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        SparseVec(out)
    }
}

/// Incremental row echelon form over sparse rational rows.
///
/// Used for rank computations on large, very sparse coboundary matrices.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    cols: usize,
    pivots: BTreeMap<usize, SparseVec>,
}

impl SparseEchelon {
    pub fn new(cols: usize) -> Self {
        SparseEchelon {
            cols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `v` against the current pivots; the remainder has no pivot lead.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut pos = 0;
        while pos < v.0.len() {
            let c = v.0[pos].0;
            if let Some(p) = self.pivots.get(&c) {
                let f = v.0[pos].1.clone();
                v = v.axpy(&f, p);
            } else {
                pos += 1;
            }
        }
        v
    }

    /// Insert a row; returns `true` if it increased the rank.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = v;
        // only the leading entry needs to avoid existing pivots
        while let Some(c) = v.lead() {
            match self.pivots.get(&c) {
                Some(p) => {
                    let f = v.0[0].1.clone();
                    v = v.axpy(&f, p);
                }
                None => {
                    let inv = v.0[0].1.recip();
                    for e in v.0.iter_mut() {
                        e.1 *= &inv;
                    }
                    self.pivots.insert(c, v);
                    return true;
                }
            }
        }
        false
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut v = v.clone();
        while let Some(c) = v.lead() {
            match self.pivots.get(&c) {
                Some(p) => {
                    let f = v.0[0].1.clone();
                    v = v.axpy(&f, p);
                }
                None => return false,
            }
        }
        true
    }

    /// Basis of the orthogonal complement `{ x : r . x = 0 for all rows r }`,
    /// i.e. the nullspace of the matrix whose rows were inserted.
    pub fn nullspace(&self) -> Vec<SparseVec> {
        // back-substitute into reduced form, highest pivot first
        let mut reduced: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (&c, row) in self.pivots.iter().rev() {
            let mut r = row.clone();
            let mut pos = 1;
            while pos < r.0.len() {
                let k = r.0[pos].0;
                if let Some(p) = reduced.get(&k) {
                    let f = r.0[pos].1.clone();
                    r = r.axpy(&f, p);
                } else {
                    pos += 1;
                }
            }
            reduced.insert(c, r);
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|c| !reduced.contains_key(c)) {
            let mut entries = vec![(f, BigRational::one())];
            for (&p, row) in &reduced {
                if let Some(x) = row.get(f) {
                    entries.push((p, -x.clone()));
                }
            }
            basis.push(SparseVec::from_entries(entries));
        }
        basis
    }
}

/// Rank and kernel basis of the matrix with the given sparse columns.
pub fn column_kernel(nrows: usize, columns: &[SparseVec]) -> (usize, Vec<SparseVec>) {
    let mut rows: Vec<Vec<(usize, BigRational)>> = vec![Vec::new(); nrows];
    for (c, col) in columns.iter().enumerate() {
        for (r, x) in col.entries() {
            rows[*r].push((c, x.clone()));
        }
    }
    let mut ech = SparseEchelon::new(columns.len());
    for row in rows {
        if !row.is_empty() {
            ech.insert(SparseVec::from_entries(row));
        }
    }
    (ech.rank(), ech.nullspace())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank().unwrap(), 2);
        let ns = a.nullspace().unwrap();
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).iter().all(Scalar::is_zero));
    }

    #[test]
    fn determinant_rational_and_parametric() {
        assert_eq!(m(&[&[2, 1], &[1, 3]]).determinant().unwrap(), Scalar::int(5));
        let r = Scalar::param("r");
        let a = Matrix::from_rows(vec![vec![r.clone(), Scalar::one()], vec![Scalar::one(), r.clone()]]).unwrap();
        let expected = &(&r * &r) - &Scalar::one();
        assert_eq!(a.determinant().unwrap(), expected);
    }

    #[test]
    fn parametric_elimination_is_refused() {
        let a = Matrix::from_rows(vec![vec![Scalar::param("t")]]).unwrap();
        assert!(matches!(a.rank(), Err(Error::ParametricEntries)));
    }

    fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec(-3i64..=3, r * c)))
    }

    proptest! {
        #[test]
        fn nullspace_is_kernel_and_rank_nullity((r, c, xs) in small_matrix()) {
            let a = Matrix::from_rows(
                xs.chunks(c).map(|row| row.iter().map(|&x| Scalar::int(x)).collect()).collect(),
            ).unwrap();
            let ns = a.nullspace().unwrap();
            for v in &ns {
                prop_assert!(a.mul_vec(v).iter().all(Scalar::is_zero));
            }
            let rank = a.rank().unwrap();
            prop_assert_eq!(rank + ns.len(), c);
            prop_assert_eq!(a.rref().unwrap().1.len(), rank);
            prop_assert!(rank <= r);
        }

        #[test]
        fn sparse_nullspace_matches_dense((_r, c, xs) in small_matrix()) {
            let rows: Vec<Vec<BigRational>> = xs
                .chunks(c)
                .map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect();
            let mut ech = SparseEchelon::new(c);
            for row in &rows {
                ech.insert(SparseVec::from_dense(row));
            }
            let ns = ech.nullspace();
            prop_assert_eq!(ns.len() + ech.rank(), c);
            for v in &ns {
                let d = v.to_dense(c);
                for row in &rows {
                    let s: BigRational = row.iter().zip(&d).map(|(a, b)| a * b).sum();
                    prop_assert!(s.is_zero());
                }
            }
        }
    }
}
