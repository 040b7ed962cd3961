//! Matrices with a row/column parity layout.

use crate::error::{Error, Result};
use crate::grassmann::{GrassmannElement, Parity};
use crate::linalg::{Matrix, Ring};

#[derive(Clone, PartialEq)]
pub struct SuperMatrix<T> {
    pub entries: Matrix<T>,
    pub row_parity: Vec<Parity>,
    pub col_parity: Vec<Parity>,
}

impl<T: Ring> std::fmt::Debug for SuperMatrix<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.entries)
    }
}

impl<T: Ring> SuperMatrix<T> {
    pub fn new(entries: Matrix<T>, row_parity: Vec<Parity>, col_parity: Vec<Parity>) -> Result<Self> {
        if entries.rows() != row_parity.len() || entries.cols() != col_parity.len() {
            return Err(Error::Dimension("parity layout does not match the matrix".into()));
        }
        Ok(SuperMatrix { entries, row_parity, col_parity })
    }

    /// Parity an entry must have in an even supermatrix.
    pub fn block_parity(&self, i: usize, j: usize) -> Parity {
        if self.row_parity[i] == self.col_parity[j] {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.col_parity != o.row_parity {
            return Err(Error::Dimension("block layouts do not chain".into()));
        }
        Ok(SuperMatrix {
            entries: self.entries.mul(&o.entries)?,
            row_parity: self.row_parity.clone(),
            col_parity: o.col_parity.clone(),
        })
    }

    pub fn pow(&self, k: usize) -> Result<Self> {
        Ok(SuperMatrix { entries: self.entries.pow(k)?, ..self.clone() })
    }
}

impl SuperMatrix<GrassmannElement> {
    /// Diagonal blocks even, off-diagonal blocks odd.
    pub fn is_even(&self) -> bool {
        (0..self.entries.rows()).all(|i| {
            (0..self.entries.cols()).all(|j| {
                let x = self.entries.get(i, j);
                x.is_zero() || x.parity() == Some(self.block_parity(i, j))
            })
        })
    }
}
