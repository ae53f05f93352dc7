//! Dense matrices over the Gaussian rationals.
//!
//! Every operation is exact; determinants run through fraction-free
//! Bareiss elimination so no rounding can ever occur. Structural checks
//! (hermitian, skew-symmetric) are decidable equalities.

use crate::error::{Error, Result};
use crate::scalar::GaussianRational;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>, // row-major
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<GaussianRational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![GaussianRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, GaussianRational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    /// Square matrix from integer rows; panics on ragged input.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| GaussianRational::from_int(rows[i][j]))
    }

    pub fn diagonal(entries: &[GaussianRational]) -> Self {
        let n = entries.len();
        let mut m = Self::zero(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
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

    pub fn at(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussianRational) {
        self.entries[i * self.cols + j] = v;
    }

    /// Row-major flat view; the vectorization used by span closure.
    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).conj())
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.conj_transpose()
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square() && self.transpose() == -self
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(|e| e.is_real())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * c)
    }

    pub fn trace(&self) -> Result<GaussianRational> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut t = GaussianRational::zero();
        for i in 0..self.rows {
            t += self.at(i, i);
        }
        Ok(t)
    }

    /// ab − ba.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        &(a * b) - &(b * a)
    }

    /// Standard Kronecker product; dimensions multiply.
    pub fn kronecker(&self, other: &Self) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            self.at(i / other.rows, j / other.cols) * other.at(i % other.rows, j % other.cols)
        })
    }

    /// Principal submatrix on a strictly increasing, in-range anchor set
    /// (0-based row/column indices).
    pub fn principal_submatrix(&self, anchors: &[usize]) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        for w in anchors.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidParameter(format!(
                    "anchors must be strictly increasing, got {:?}",
                    anchors
                )));
            }
        }
        if let Some(&last) = anchors.last() {
            if last >= self.rows {
                return Err(Error::InvalidParameter(format!(
                    "anchor {last} out of range for order {}",
                    self.rows
                )));
            }
        }
        Ok(Self::from_fn(anchors.len(), anchors.len(), |i, j| {
            self.at(anchors[i], anchors[j]).clone()
        }))
    }

    /// Symmetric permutation P·M·Pᵀ: entry (i, j) of the result is the
    /// (perm[i], perm[j]) entry of self.
    pub fn permute_symmetric(&self, perm: &[usize]) -> Result<Self> {
        if !self.is_square() || perm.len() != self.rows {
            return Err(Error::Dimension(format!(
                "permutation of length {} on {}x{} matrix",
                perm.len(),
                self.rows,
                self.cols
            )));
        }
        Ok(Self::from_fn(self.rows, self.rows, |i, j| self.at(perm[i], perm[j]).clone()))
    }

    /// Square block extraction: the (bi, bj) block of the given size.
    pub fn block(&self, bi: usize, bj: usize, size: usize) -> Self {
        Self::from_fn(size, size, |i, j| self.at(bi * size + i, bj * size + j).clone())
    }

    /// Assemble from a grid of equally sized square blocks.
    pub fn from_blocks(blocks: &[Vec<ExactMatrix>]) -> Result<Self> {
        let brows = blocks.len();
        let bcols = blocks.first().map_or(0, |r| r.len());
        let size = blocks
            .first()
            .and_then(|r| r.first())
            .map(|b| b.rows)
            .ok_or_else(|| Error::Dimension("empty block grid".into()))?;
        for row in blocks {
            if row.len() != bcols {
                return Err(Error::Dimension("ragged block grid".into()));
            }
            for b in row {
                if b.rows != size || b.cols != size {
                    return Err(Error::Dimension("blocks must be square and equally sized".into()));
                }
            }
        }
        Ok(Self::from_fn(brows * size, bcols * size, |i, j| {
            blocks[i / size][j / size].at(i % size, j % size).clone()
        }))
    }

    pub fn block_diag(blocks: &[&ExactMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut m = Self::zero(n, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(off + i, off + j, b.at(i, j).clone());
                }
            }
            off += b.rows;
        }
        m
    }

    /// Exact determinant via fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<GaussianRational> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(GaussianRational::one());
        }
        let mut a = self.entries.clone();
        let idx = |i: usize, j: usize| i * n + j;
        let mut sign = false;
        let mut prev = GaussianRational::one();
        for k in 0..n - 1 {
            if a[idx(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !a[idx(r, k)].is_zero()) {
                    Some(r) => {
                        for j in 0..n {
                            a.swap(idx(k, j), idx(r, j));
                        }
                        sign = !sign;
                    }
                    None => return Ok(GaussianRational::zero()),
                }
            }
            let pivot = a[idx(k, k)].clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &(&pivot * &a[idx(i, j)]) - &(&a[idx(i, k)] * &a[idx(k, j)]);
                    a[idx(i, j)] = &t / &prev;
                }
                a[idx(i, k)] = GaussianRational::zero();
            }
            prev = pivot;
        }
        let d = a[idx(n - 1, n - 1)].clone();
        Ok(if sign { -d } else { d })
    }

    /// Exact rank via Gaussian elimination over the Gaussian rationals.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<GaussianRational>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let inv = a[rank][col].inv().expect("nonzero pivot");
            for j in col..self.cols {
                a[rank][j] = &a[rank][j] * &inv;
            }
            for r in 0..self.rows {
                if r != rank && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in col..self.cols {
                        let t = &a[r][j] - &(&f * &a[rank][j]);
                        a[r][j] = t;
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

/// 2×2 blocks used throughout: α = diag(1, −1), β = antidiag(1, 1),
/// U = rotation generator with U² = −I.
pub fn alpha() -> ExactMatrix {
    ExactMatrix::from_int_rows(&[&[1, 0], &[0, -1]])
}

pub fn beta() -> ExactMatrix {
    ExactMatrix::from_int_rows(&[&[0, 1], &[1, 0]])
}

pub fn u_rotation() -> ExactMatrix {
    ExactMatrix::from_int_rows(&[&[0, -1], &[1, 0]])
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix add shape");
        ExactMatrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + rhs.at(i, j))
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sub shape");
        ExactMatrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) - rhs.at(i, j))
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix mul shape");
        ExactMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = GaussianRational::zero();
            for k in 0..self.cols {
                if !self.at(i, k).is_zero() && !rhs.at(k, j).is_zero() {
                    acc += &(self.at(i, k) * rhs.at(k, j));
                }
            }
            acc
        })
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix::from_fn(self.rows, self.cols, |i, j| -self.at(i, j))
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{}{}", self.at(i, j), if j + 1 < self.cols { ", " } else { "" })?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Scalar multiple of the identity, useful in block constructions.
pub fn scalar_matrix(n: usize, c: &GaussianRational) -> ExactMatrix {
    let mut m = ExactMatrix::zero(n, n);
    for i in 0..n {
        m.set(i, i, c.clone());
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    #[test]
    fn det_identity_and_2x2() {
        assert_eq!(ExactMatrix::identity(4).det().unwrap(), GaussianRational::one());
        let m = ExactMatrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.det().unwrap(), GaussianRational::from_int(-2));
    }

    #[test]
    fn det_requires_square() {
        let m = ExactMatrix::zero(2, 3);
        assert!(matches!(m.det(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn det_with_pivot_search() {
        let m = ExactMatrix::from_int_rows(&[&[0, 1, 2], &[1, 0, 3], &[4, 5, 0]]);
        // cofactor expansion: 0·(0−15) − 1·(0−12) + 2·(5−0) = 22; row swap flips sign twice
        assert_eq!(m.det().unwrap(), GaussianRational::from_int(22));
        let singular = ExactMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.det().unwrap(), GaussianRational::zero());
    }

    #[test]
    fn structural_checks() {
        assert!(u_rotation().is_skew_symmetric());
        assert!(alpha().is_hermitian());
        assert!(beta().is_hermitian());
        let i_times = ExactMatrix::from_fn(2, 2, |i, j| {
            if i == 0 && j == 1 {
                GaussianRational::i()
            } else if i == 1 && j == 0 {
                -GaussianRational::i()
            } else {
                GaussianRational::zero()
            }
        });
        assert!(i_times.is_hermitian());
        assert!(!i_times.is_real());
    }

    #[test]
    fn kronecker_identity_factor() {
        let m = ExactMatrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        let k = ExactMatrix::identity(2).kronecker(&m);
        assert_eq!(k, ExactMatrix::block_diag(&[&m, &m]));
    }

    #[test]
    fn principal_submatrix_paper_example() {
        let m = ExactMatrix::from_int_rows(&[
            &[1, 2, 3, 4],
            &[2, 5, 6, 7],
            &[3, 6, 8, 9],
            &[4, 7, 9, 0],
        ]);
        // anchors {1,3} in the paper's 1-based notation are {0,2} here
        let s = m.principal_submatrix(&[0, 2]).unwrap();
        assert_eq!(s, ExactMatrix::from_int_rows(&[&[1, 3], &[3, 8]]));
        assert_eq!(m.principal_submatrix(&[0, 1, 2, 3]).unwrap(), m);
        let single = m.principal_submatrix(&[2]).unwrap();
        assert_eq!(single.at(0, 0), &GaussianRational::from_int(8));
        assert!(m.principal_submatrix(&[2, 1]).is_err());
        assert!(m.principal_submatrix(&[1, 4]).is_err());
        assert!(m.principal_submatrix(&[1, 1]).is_err());
    }

    #[test]
    fn rank_small() {
        let m = ExactMatrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(ExactMatrix::identity(5).rank(), 5);
        assert_eq!(ExactMatrix::zero(3, 3).rank(), 0);
    }

    #[test]
    fn trace_and_commutator() {
        let c = ExactMatrix::commutator(&alpha(), &beta());
        assert_eq!(c, ExactMatrix::from_int_rows(&[&[0, 2], &[-2, 0]]));
        assert_eq!(c.trace().unwrap(), GaussianRational::zero());
        assert_eq!(alpha().trace().unwrap(), GaussianRational::from_rational(rat_int(0)));
    }
}
