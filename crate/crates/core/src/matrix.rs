//! Dense square matrices over exact integers or reals.
//!
//! Everything the operator calculus needs (`A`, `A²`, `W`, the triadic and
//! open parts, quotient matrices) is stored row-major in a [`SquareMatrix`].
//! Integer matrices use checked 64-bit arithmetic so that identities are
//! compared exactly.

use std::fmt::{self, Debug, Display, Write as _};
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};

/// Entry type of a [`SquareMatrix`].
pub trait Scalar: Copy + Default + PartialEq + PartialOrd + Debug + Display + Send + Sync {
    fn zero() -> Self {
        Self::default()
    }
    fn checked_add(self, rhs: Self) -> Option<Self>;
    fn checked_sub(self, rhs: Self) -> Option<Self>;
    fn checked_mul(self, rhs: Self) -> Option<Self>;
    fn to_f64(self) -> f64;
    fn from_count(count: i64) -> Self;
    /// Exact half of an even integer, plain half of a real.
    fn half(self) -> Self;
}

impl Scalar for i64 {
    fn checked_add(self, rhs: Self) -> Option<Self> {
        i64::checked_add(self, rhs)
    }
    fn checked_sub(self, rhs: Self) -> Option<Self> {
        i64::checked_sub(self, rhs)
    }
    fn checked_mul(self, rhs: Self) -> Option<Self> {
        i64::checked_mul(self, rhs)
    }
    fn to_f64(self) -> f64 {
        self as f64
    }
    fn from_count(count: i64) -> Self {
        count
    }
    fn half(self) -> Self {
        self / 2
    }
}

impl Scalar for f64 {
    fn checked_add(self, rhs: Self) -> Option<Self> {
        Some(self + rhs)
    }
    fn checked_sub(self, rhs: Self) -> Option<Self> {
        Some(self - rhs)
    }
    fn checked_mul(self, rhs: Self) -> Option<Self> {
        Some(self * rhs)
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn from_count(count: i64) -> Self {
        count as f64
    }
    fn half(self) -> Self {
        self / 2.0
    }
}

#[derive(Clone, PartialEq)]
pub struct SquareMatrix<T> {
    order: usize,
    entries: Vec<T>,
}

pub type IntMatrix = SquareMatrix<i64>;
pub type RealMatrix = SquareMatrix<f64>;

impl<T: Scalar> SquareMatrix<T> {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            entries: vec![T::zero(); order * order],
        }
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        Self { order, entries }
    }

    /// Builds a matrix from rows; every row must have length `rows.len()`.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let order = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != order) {
            return Err(Error::InvalidParameter(format!(
                "row {bad} has length {} in a matrix of order {order}",
                rows[bad].len()
            )));
        }
        Ok(Self {
            order,
            entries: rows.concat(),
        })
    }

    pub fn diagonal(values: &[T]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        // chunks_exact panics on a zero chunk size
        self.entries.chunks_exact(self.order.max(1)).take(self.order)
    }

    pub fn diag(&self) -> Vec<T> {
        (0..self.order).map(|i| self[(i, i)]).collect()
    }

    /// First position `(i, j)` with `self[(i,j)] != self[(j,i)]`, if any.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        (0..self.order)
            .flat_map(|i| (i + 1..self.order).map(move |j| (i, j)))
            .find(|&(i, j)| self[(i, j)] != self[(j, i)])
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetry().is_none()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, |i, j| self[(j, i)])
    }

    pub fn map<U: Scalar>(&self, mut f: impl FnMut(T) -> U) -> SquareMatrix<U> {
        SquareMatrix {
            order: self.order,
            entries: self.entries.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn to_real(&self) -> RealMatrix {
        self.map(Scalar::to_f64)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        let n = self.order;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == T::zero() {
                    continue;
                }
                for j in 0..n {
                    let prod = a.checked_mul(rhs[(k, j)]).ok_or(Error::Overflow("matrix product"))?;
                    let cell = &mut out.entries[i * n + j];
                    *cell = cell.checked_add(prod).ok_or(Error::Overflow("matrix product"))?;
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a.checked_add(b), "matrix sum")
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a.checked_sub(b), "matrix difference")
    }

    /// Entrywise (Hadamard) product.
    pub fn hadamard(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a.checked_mul(b), "Hadamard product")
    }

    pub fn trace(&self) -> Result<T> {
        self.diag()
            .into_iter()
            .try_fold(T::zero(), |acc, x| acc.checked_add(x))
            .ok_or(Error::Overflow("trace"))
    }

    pub fn sum(&self) -> Result<T> {
        self.entries
            .iter()
            .try_fold(T::zero(), |acc, &x| acc.checked_add(x))
            .ok_or(Error::Overflow("matrix sum"))
    }

    /// Sum of the entries off the main diagonal.
    pub fn off_diagonal_sum(&self) -> Result<T> {
        let mut acc = T::zero();
        for i in 0..self.order {
            for j in 0..self.order {
                if i != j {
                    acc = acc.checked_add(self[(i, j)]).ok_or(Error::Overflow("matrix sum"))?;
                }
            }
        }
        Ok(acc)
    }

    /// Squared Frobenius norm, `Σ x²`.
    pub fn frobenius_sq(&self) -> Result<T> {
        self.entries
            .iter()
            .try_fold(T::zero(), |acc, &x| x.checked_mul(x).and_then(|sq| acc.checked_add(sq)))
            .ok_or(Error::Overflow("Frobenius norm"))
    }

    pub fn row_sums(&self) -> Result<Vec<T>> {
        self.rows()
            .map(|r| {
                r.iter()
                    .try_fold(T::zero(), |acc, &x| acc.checked_add(x))
                    .ok_or(Error::Overflow("row sum"))
            })
            .collect()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.entries
    }

    /// Dense CSV: one matrix row per line, comma separated, no header.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.rows() {
            let mut first = true;
            for x in row {
                if !first {
                    out.push(',');
                }
                first = false;
                write!(out, "{x}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Coordinate triples `i,j,value` for every nonzero entry, row-major,
    /// under an `i,j,value` header.
    pub fn to_coordinates(&self) -> String {
        let mut out = String::from("i,j,value\n");
        for i in 0..self.order {
            for j in 0..self.order {
                let x = self[(i, j)];
                if x != T::zero() {
                    writeln!(out, "{i},{j},{x}").unwrap();
                }
            }
        }
        out
    }

    fn check_order(&self, rhs: &Self) -> Result<()> {
        if self.order != rhs.order {
            return Err(Error::InvalidParameter(format!(
                "matrix orders differ ({} vs {})",
                self.order, rhs.order
            )));
        }
        Ok(())
    }

    fn zip_with(
        &self,
        rhs: &Self,
        f: impl Fn(T, T) -> Option<T>,
        what: &'static str,
    ) -> Result<Self> {
        self.check_order(rhs)?;
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(&a, &b)| f(a, b).ok_or(Error::Overflow(what)))
            .collect::<Result<_>>()?;
        Ok(Self {
            order: self.order,
            entries,
        })
    }
}

impl<T> Index<(usize, usize)> for SquareMatrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.order && j < self.order, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.order + j]
    }
}

impl<T> IndexMut<(usize, usize)> for SquareMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.order && j < self.order, "index ({i}, {j}) out of bounds");
        &mut self.entries[i * self.order + j]
    }
}

impl<T: Debug> Debug for SquareMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SquareMatrix({}x{}) [", self.order, self.order)?;
        for i in 0..self.order {
            writeln!(f, "  {:?}", &self.entries[i * self.order..(i + 1) * self.order])?;
        }
        write!(f, "]")
    }
}
