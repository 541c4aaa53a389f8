//! Dense exact linear algebra over a [`Scalar`] field: reduced row echelon
//! form, kernels, solving, determinants, inverses, and incremental span
//! bases. Everything is plain Gaussian elimination with exact division;
//! matrices at desk scale are tiny.

use crate::error::{Error, Result};
use crate::scalar::{FieldDescriptor, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub field: FieldDescriptor,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zero(field: FieldDescriptor, rows: usize, cols: usize) -> Self {
        Mat {
            field,
            rows,
            cols,
            data: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: FieldDescriptor, n: usize) -> Self {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_rows(field: FieldDescriptor, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        Mat { field, rows: r, cols: c, data }
    }

    /// Columns given as coefficient vectors.
    pub fn from_cols(field: FieldDescriptor, cols: &[Vec<Scalar>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |col| col.len());
        let mut m = Mat::zero(field, r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![Scalar::zero(self.field); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() || v[j].is_zero() {
                    continue;
                }
                out[i] = out[i].add(&a.mul(&v[j]));
            }
        }
        out
    }

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = vec![];
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = self.get(r, c).inverse().expect("pivot is nonzero");
            for j in c..self.cols {
                let v = self.get(r, j).mul(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let factor = self.get(i, c).clone();
                for j in c..self.cols {
                    let v = self.get(i, j).sub(&factor.mul(self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data
                .swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel `{x : Ax = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = vec![];
        for &fc in &free {
            let mut v = vec![Scalar::zero(self.field); self.cols];
            v[fc] = Scalar::one(self.field);
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = m.get(r, fc).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `Ax = b`; returns one solution if the system is consistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zero(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(self.field); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let mut det = Scalar::one(self.field);
        for c in 0..m.cols {
            let Some(pr) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return Scalar::zero(self.field);
            };
            if pr != c {
                m.swap_rows(c, pr);
                det = det.neg();
            }
            let pivot = m.get(c, c).clone();
            det = det.mul(&pivot);
            let inv = pivot.inverse().expect("pivot is nonzero");
            for i in c + 1..m.rows {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).mul(&inv);
                for j in c..m.cols {
                    let v = m.get(i, j).sub(&factor.mul(m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zero(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one(self.field));
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::NotInvertible);
        }
        let mut inv = Mat::zero(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }
}

/// An incrementally built subspace basis kept in reduced echelon form.
#[derive(Debug, Clone)]
pub struct Span {
    pub field: FieldDescriptor,
    ambient: usize,
    /// Echelonized rows and their pivot columns.
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new(field: FieldDescriptor, ambient: usize) -> Self {
        Span { field, ambient, rows: vec![], pivots: vec![] }
    }

    pub fn from_vectors(field: FieldDescriptor, ambient: usize, vecs: &[Vec<Scalar>]) -> Self {
        let mut s = Span::new(field, ambient);
        for v in vecs {
            s.insert(v.clone());
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Reduce `v` against the span; returns the residue.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for j in 0..self.ambient {
                v[j] = v[j].sub(&factor.mul(&row[j]));
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(|c| c.is_zero())
    }

    /// Insert a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[p].inverse().expect("leading entry nonzero");
        for c in v.iter_mut() {
            *c = c.mul(&inv);
        }
        // Back-substitute into existing rows to keep reduced form.
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for j in 0..self.ambient {
                row[j] = row[j].sub(&factor.mul(&v[j]));
            }
        }
        let at = self.pivots.iter().position(|&q| q > p).unwrap_or(self.pivots.len());
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Coordinates of `v` in terms of an explicit generating set whose span
    /// equals this span; uses plain solving on the generator matrix.
    pub fn is_zero_space(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Signature data of a symmetric matrix computed by congruence
/// (symmetric Gaussian elimination with diagonal pivoting).
#[derive(Debug, Clone)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
    pub pivots: Vec<Scalar>,
}

/// Inertia of a symmetric matrix over an ordered exact field (the
/// rationals). Panics if a sign comparison is needed over a field
/// without order; classification only ever calls this over `Q`.
pub fn symmetric_inertia(a: &Mat, sign_of: impl Fn(&Scalar) -> i8) -> Inertia {
    assert_eq!(a.rows, a.cols);
    let n = a.rows;
    let mut m = a.clone();
    let mut active: Vec<usize> = (0..n).collect();
    let mut pos = 0;
    let mut neg = 0;
    let mut pivots = vec![];
    while !active.is_empty() {
        // prefer a nonzero diagonal pivot
        let diag = active
            .iter()
            .position(|&i| !m.get(i, i).is_zero());
        match diag {
            Some(k) => {
                let i = active[k];
                let pivot = m.get(i, i).clone();
                match sign_of(&pivot) {
                    1 => pos += 1,
                    -1 => neg += 1,
                    _ => unreachable!("pivot is nonzero"),
                }
                pivots.push(pivot.clone());
                let inv = pivot.inverse().expect("nonzero pivot");
                active.remove(k);
                let others = active.clone();
                let factors: Vec<Scalar> =
                    others.iter().map(|&r| m.get(r, i).mul(&inv)).collect();
                for (ri, &r) in others.iter().enumerate() {
                    if factors[ri].is_zero() {
                        continue;
                    }
                    for &c in &others {
                        let v = m.get(r, c).sub(&factors[ri].mul(m.get(i, c)));
                        m.set(r, c, v);
                    }
                }
                for &r in &others {
                    m.set(r, i, Scalar::zero(m.field));
                    m.set(i, r, Scalar::zero(m.field));
                }
            }
            None => {
                // all remaining diagonals vanish: either the block is zero
                // (kernel) or an off-diagonal entry forces indefiniteness
                let mut found = None;
                'outer: for (ai, &i) in active.iter().enumerate() {
                    for &j in active.iter().skip(ai + 1) {
                        if !m.get(i, j).is_zero() {
                            found = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                match found {
                    None => break,
                    Some((i, j)) => {
                        // add row/col j into i to expose a nonzero diagonal
                        let twice = m.get(i, j).add(m.get(j, i));
                        m.set(i, i, twice);
                        for &c in active.iter().filter(|&&c| c != i && c != j) {
                            let v = m.get(i, c).add(m.get(j, c));
                            m.set(i, c, v.clone());
                            m.set(c, i, v);
                        }
                        // diagonal at i is now 2*a_ij != 0 in char 0
                    }
                }
            }
        }
    }
    Inertia {
        positive: pos,
        negative: neg,
        zero: n - pos - neg,
        pivots,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldDescriptor {
        FieldDescriptor::Rationals
    }

    fn s(k: i64) -> Scalar {
        Scalar::from_integer(k, q())
    }

    #[test]
    fn rref_and_kernel() {
        // x + 2y = 0 has kernel spanned by (-2, 1)
        let m = Mat::from_rows(q(), vec![vec![s(1), s(2)]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![s(-2), s(1)]);
    }

    #[test]
    fn solve_and_inverse() {
        let m = Mat::from_rows(q(), vec![vec![s(2), s(1)], vec![s(1), s(1)]]);
        let x = m.solve(&[s(3), s(2)]).unwrap();
        assert_eq!(m.apply(&x), vec![s(3), s(2)]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.matmul(&inv), Mat::identity(q(), 2));
        assert_eq!(m.determinant(), s(1));
        let singular = Mat::from_rows(q(), vec![vec![s(1), s(2)], vec![s(2), s(4)]]);
        assert_eq!(singular.determinant(), s(0));
        assert!(singular.inverse().is_err());
        assert!(singular.solve(&[s(0), s(1)]).is_none());
    }

    #[test]
    fn span_membership() {
        let mut span = Span::new(q(), 3);
        assert!(span.insert(vec![s(1), s(1), s(0)]));
        assert!(span.insert(vec![s(0), s(1), s(1)]));
        assert!(!span.insert(vec![s(1), s(2), s(1)]));
        assert!(span.contains(&[s(2), s(3), s(1)]));
        assert!(!span.contains(&[s(0), s(0), s(1)]));
        assert_eq!(span.dim(), 2);
    }

    #[test]
    fn inertia_signs() {
        let sign = |x: &Scalar| x.rational_sign().unwrap();
        // A2 Tits matrix is positive definite
        let a2 = Mat::from_rows(q(), vec![vec![s(2), s(-1)], vec![s(-1), s(2)]]);
        let i = symmetric_inertia(&a2, sign);
        assert_eq!((i.positive, i.negative, i.zero), (2, 0, 0));
        // double edge: semidefinite with 1-dim kernel
        let a1t = Mat::from_rows(q(), vec![vec![s(2), s(-2)], vec![s(-2), s(2)]]);
        let i = symmetric_inertia(&a1t, sign);
        assert_eq!((i.positive, i.negative, i.zero), (1, 0, 1));
        // indefinite
        let ind = Mat::from_rows(q(), vec![vec![s(0), s(1)], vec![s(1), s(0)]]);
        let i = symmetric_inertia(&ind, sign);
        assert_eq!((i.positive, i.negative), (1, 1));
    }
}
