//! Dense square matrices of [`Scalar`]s.
//!
//! Storage is dense row-major, but multiplication skips zero entries; the
//! operator matrices handled here are overwhelmingly sparse.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Scalar};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            entries: vec![Scalar::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Matrix::scalar(dim, Scalar::one())
    }

    /// `s·1`.
    pub fn scalar(dim: usize, s: Scalar) -> Self {
        let mut m = Matrix::zeros(dim);
        if !s.is_zero() {
            for k in 0..dim {
                m.entries[k * dim + k] = s.clone();
            }
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                entries.push(f(r, c));
            }
        }
        Matrix { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "matrix rows must all have length {dim}"
            )));
        }
        Ok(Matrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience for constant matrices written with small integers.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let dim = rows.len();
        Matrix::from_fn(dim, |r, c| Scalar::from_int(rows[r][c]))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.dim + c] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    /// The `s` with `self = s·1`, if the matrix is a multiple of the identity.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.dim == 0 {
            return Some(Scalar::zero());
        }
        let d = self.get(0, 0).clone();
        for r in 0..self.dim {
            for c in 0..self.dim {
                let e = self.get(r, c);
                let ok = if r == c { *e == d } else { e.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(d)
    }

    /// The constant `λ` with `self = λ·other`, if `other ≠ 0` and one exists.
    pub fn constant_ratio(&self, other: &Matrix) -> Option<GaussianRational> {
        if self.dim != other.dim {
            return None;
        }
        let k = other.entries.iter().position(|e| !e.is_zero())?;
        let lambda = self.entries[k].constant_ratio(&other.entries[k])?;
        (other.scale_const(&lambda) == *self).then_some(lambda)
    }

    pub fn check_same_dim(&self, other: &Matrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.dim, self.dim, other.dim, other.dim
            )));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_dim(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Matrix) -> Matrix {
        let n = self.dim;
        let row_support: Vec<Vec<usize>> = (0..n)
            .map(|k| (0..n).filter(|&j| !other.get(k, j).is_zero()).collect())
            .collect();
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for (k, support) in row_support.iter().enumerate() {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for &j in support {
                    let prod = a * other.get(k, j);
                    out.entries[i * n + j] += &prod;
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn scale_const(&self, c: &GaussianRational) -> Matrix {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.dim, |r, c| self.get(c, r).clone())
    }

    /// Conjugate transpose; symbols are real.
    pub fn adjoint(&self) -> Matrix {
        Matrix::from_fn(self.dim, |r, c| self.get(c, r).conj())
    }

    /// `AB − BA`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        Ok(&self.try_mul(other)? - &other.mul_unchecked(self))
    }

    /// `AB + BA`.
    pub fn anticommutator(&self, other: &Matrix) -> Result<Matrix> {
        Ok(&self.try_mul(other)? + &other.mul_unchecked(self))
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (n, m) = (self.dim, other.dim);
        Matrix::from_fn(n * m, |r, c| {
            let a = self.get(r / m, c / m);
            if a.is_zero() {
                Scalar::zero()
            } else {
                a * other.get(r % m, c % m)
            }
        })
    }

    pub fn pow(&self, exp: u32) -> Matrix {
        let mut acc = Matrix::identity(self.dim);
        for _ in 0..exp {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Sparse JSON rendering used in reports: the nonzero entries only.
    pub fn to_sparse_json(&self) -> Value {
        let nonzero: Vec<Value> = (0..self.dim)
            .flat_map(|r| (0..self.dim).map(move |c| (r, c)))
            .filter(|&(r, c)| !self.get(r, c).is_zero())
            .map(|(r, c)| json!([r, c, self.get(r, c).to_string()]))
            .collect();
        json!({ "dim": self.dim, "nonzero": nonzero })
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    /// Panics on mismatched dimensions; use [`Matrix::check_same_dim`] first
    /// when sizes come from input.
    fn add(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        Matrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        Matrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        self.mul_unchecked(rhs)
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.map(|e| -e)
    }
}

impl std::ops::AddAssign<&Matrix> for Matrix {
    fn add_assign(&mut self, rhs: &Matrix) {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        for (a, b) in self.entries.iter_mut().zip(&rhs.entries) {
            *a += b;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        let a = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        assert_eq!(&a * &Matrix::identity(2), a);
        assert_eq!(&Matrix::identity(2) * &a, a);
    }

    #[test]
    fn sparse_product_matches_hand_value() {
        let a = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
        let b = Matrix::from_ints(&[&[0, 0], &[1, 0]]);
        assert_eq!(&a * &b, Matrix::from_ints(&[&[1, 0], &[0, 0]]));
        assert_eq!(a.anticommutator(&b).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = Matrix::identity(2);
        let b = Matrix::identity(3);
        assert!(matches!(a.try_mul(&b), Err(Error::DimensionMismatch(_))));
        assert!(Matrix::from_rows(vec![vec![Scalar::one()], vec![]]).is_err());
    }

    #[test]
    fn scalar_detection() {
        assert_eq!(
            Matrix::scalar(3, Scalar::symbol("z")).as_scalar(),
            Some(Scalar::symbol("z"))
        );
        assert_eq!(Matrix::from_ints(&[&[1, 0], &[0, 2]]).as_scalar(), None);
    }

    #[test]
    fn kron_dimensions_and_values() {
        let a = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&Matrix::identity(2));
        assert_eq!(k.dim(), 4);
        assert!(k.get(0, 2).is_one());
        assert!(k.get(0, 1).is_zero());
    }
}
