//! Sparse and dense exact linear algebra over [`Scalar`].

use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// Row-major sparse matrix; rows map column index to a nonzero entry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, Scalar>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BTreeMap::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal((0..n).map(|_| Scalar::one()))
    }

    pub fn diagonal(entries: impl IntoIterator<Item = Scalar>) -> Self {
        let entries: Vec<Scalar> = entries.into_iter().collect();
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, s) in entries.into_iter().enumerate() {
            m.set(i, i, s);
        }
        m
    }

    /// Column `j` of the result is basis vector `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let mut m = Self::zeros(perm.len(), perm.len());
        for (j, &i) in perm.iter().enumerate() {
            m.set(i, j, Scalar::one());
        }
        m
    }

    pub fn from_columns(rows: usize, cols: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, s) in c.iter().enumerate() {
                m.set(i, j, s.clone());
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i].get(&j).cloned().unwrap_or_default()
    }

    pub fn entry(&self, i: usize, j: usize) -> Option<&Scalar> {
        self.data[i].get(&j)
    }

    pub fn set(&mut self, i: usize, j: usize, s: Scalar) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        if s.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, s);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        let row = &mut self.data[i];
        match row.get_mut(&j) {
            Some(x) => {
                let y = &*x + s;
                if y.is_zero() {
                    row.remove(&j);
                } else {
                    *x = y;
                }
            }
            None => {
                row.insert(j, s.clone());
            }
        }
    }

    pub fn row(&self, i: usize) -> &BTreeMap<usize, Scalar> {
        &self.data[i]
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, s)| (i, *j, s)))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self
                .data
                .iter()
                .enumerate()
                .all(|(i, r)| r.len() == 1 && r.get(&i).is_some_and(Scalar::is_one))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for (i, row) in self.data.iter().enumerate() {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (k, a) in row {
                for (j, b) in &other.data[*k] {
                    let t = a * b;
                    match acc.get_mut(j) {
                        Some(x) => *x = &*x + &t,
                        None => {
                            acc.insert(*j, t);
                        }
                    }
                }
            }
            acc.retain(|_, s| !s.is_zero());
            out.data[i] = acc;
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| row.iter().map(|(j, a)| a * &v[*j]).sum())
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (i, j, s) in other.entries() {
            out.add_to(i, j, s);
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        if s.is_zero() {
            return Matrix::zeros(self.rows, self.cols);
        }
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|r| r.iter().map(|(j, x)| (*j, x * s)).collect())
                .collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for (i, j, s) in self.entries() {
            out.data[j].insert(i, s.clone());
        }
        out
    }

    /// Kronecker product with row/column index `a*dim_b + b`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for (i, j, a) in self.entries() {
            for (k, l, b) in other.entries() {
                out.data[i * other.rows + k].insert(j * other.cols + l, a * b);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Matrix {
        assert!(self.is_square());
        (0..n).fold(Matrix::identity(self.rows), |acc, _| acc.mul(self))
    }

    pub fn commutes_with(&self, other: &Matrix) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// Submatrix on the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<Scalar>> {
        rows.iter()
            .map(|&i| cols.iter().map(|&j| self.get(i, j)).collect())
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Exact inverse, computed block by block over the connected
    /// components of the nonzero pattern. `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        // union-find over rows (0..n) and columns (n..2n)
        let mut parent: Vec<usize> = (0..2 * n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for (i, j, _) in self.entries() {
            let a = find(&mut parent, i);
            let b = find(&mut parent, n + j);
            if a != b {
                parent[a] = b;
            }
        }
        let mut comps: BTreeMap<usize, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for x in 0..2 * n {
            let r = find(&mut parent, x);
            let e = comps.entry(r).or_default();
            if x < n {
                e.0.push(x);
            } else {
                e.1.push(x - n);
            }
        }
        let mut out = Matrix::zeros(n, n);
        for (rows, cols) in comps.values() {
            if rows.len() != cols.len() {
                return None;
            }
            let block = self.select(rows, cols);
            let inv = dense_inverse(&block)?;
            // inverse maps rows-space back to cols-space
            for (a, &c) in cols.iter().enumerate() {
                for (b, &r) in rows.iter().enumerate() {
                    if !inv[a][b].is_zero() {
                        out.data[c].insert(r, inv[a][b].clone());
                    }
                }
            }
        }
        Some(out)
    }
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut [Vec<Scalar>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].checked_inv().unwrap();
        if !inv.is_one() {
            for x in m[r].iter_mut().skip(c) {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Scalar>]) -> usize {
    let mut w = m.to_vec();
    rref(&mut w).len()
}

/// Basis of `{x : m x = 0}`; `cols` is needed when `m` has no rows.
pub fn nullspace(m: &[Vec<Scalar>], cols: usize) -> Vec<Vec<Scalar>> {
    let mut w = m.to_vec();
    let pivots = rref(&mut w);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&w[r][f];
            }
            v
        })
        .collect()
}

pub fn dense_inverse(m: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Scalar>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            assert_eq!(r.len(), n);
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Coordinates of vectors in the span of a fixed independent family.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    basis: Vec<Vec<Scalar>>,
    pivot_rows: Vec<usize>,
    inv: Vec<Vec<Scalar>>,
}

impl SpanSolver {
    /// `basis` must be linearly independent.
    pub fn new(basis: Vec<Vec<Scalar>>) -> Self {
        if basis.is_empty() {
            return Self {
                basis,
                pivot_rows: Vec::new(),
                inv: Vec::new(),
            };
        }
        let dim = basis[0].len();
        // rows of the transpose: pivots give independent coordinates
        let mut t: Vec<Vec<Scalar>> = basis.clone();
        let pivot_rows = rref(&mut t);
        assert_eq!(pivot_rows.len(), basis.len(), "span basis is dependent");
        let sub: Vec<Vec<Scalar>> = pivot_rows
            .iter()
            .map(|&r| basis.iter().map(|b| b[r].clone()).collect())
            .collect();
        let inv = dense_inverse(&sub).expect("pivot minor is invertible");
        debug_assert!(pivot_rows.iter().all(|&r| r < dim));
        Self {
            basis,
            pivot_rows,
            inv,
        }
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Coordinates of `v`, or `None` when `v` is outside the span.
    pub fn solve(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if self.basis.is_empty() {
            return v.iter().all(Scalar::is_zero).then(Vec::new);
        }
        let rhs: Vec<&Scalar> = self.pivot_rows.iter().map(|&r| &v[r]).collect();
        let coords: Vec<Scalar> = self
            .inv
            .iter()
            .map(|row| row.iter().zip(&rhs).map(|(a, b)| a * *b).sum())
            .collect();
        for (i, x) in v.iter().enumerate() {
            let recon: Scalar = self
                .basis
                .iter()
                .zip(&coords)
                .map(|(b, c)| &b[i] * c)
                .sum();
            if &recon != x {
                return None;
            }
        }
        Some(coords)
    }
}
