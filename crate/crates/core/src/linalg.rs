//! Dense matrices over exact rings.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::grassmann::{GrassmannElement, PhasedElement};
use crate::scalar::{format_scalar, int, parse_rational, Rational, Scalar};

/// Minimal ring interface for matrix entries. `zero_like`/`one_like` take a
/// sample so that registry-carrying entries know where they live.
pub trait Ring: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn scale_rat(&self, r: &Rational) -> Self;
    fn render(&self) -> String;
}

pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn scale_rat(&self, r: &Rational) -> Self {
        self * r
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl Ring for Scalar {
    fn zero_like(&self) -> Self {
        Scalar::zero()
    }
    fn one_like(&self) -> Self {
        Scalar::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn scale_rat(&self, r: &Rational) -> Self {
        Scalar::new(&self.re * r, &self.im * r)
    }
    fn render(&self) -> String {
        format_scalar(self)
    }
}

impl Field for Scalar {
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| Scalar::inv(self))
    }
}

impl Ring for GrassmannElement {
    fn zero_like(&self) -> Self {
        GrassmannElement::zero(self.registry())
    }
    fn one_like(&self) -> Self {
        GrassmannElement::one(self.registry())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn vanishes(&self) -> bool {
        GrassmannElement::is_zero(self)
    }
    fn scale_rat(&self, r: &Rational) -> Self {
        GrassmannElement::scale_rat(self, r)
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Ring for PhasedElement {
    fn zero_like(&self) -> Self {
        PhasedElement::zero(self.registry())
    }
    fn one_like(&self) -> Self {
        PhasedElement::one(self.registry())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn vanishes(&self) -> bool {
        PhasedElement::is_zero(self)
    }
    fn scale_rat(&self, r: &Rational) -> Self {
        self.map(|g| g.scale_rat(r))
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

/// Dual numbers `a + bε` with `ε² = 0`, used for first-order expansions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dual {
    pub re: Rational,
    pub eps: Rational,
}

impl Dual {
    pub fn new(re: Rational, eps: Rational) -> Self {
        Dual { re, eps }
    }
}

impl Ring for Dual {
    fn zero_like(&self) -> Self {
        Dual::new(Rational::zero(), Rational::zero())
    }
    fn one_like(&self) -> Self {
        Dual::new(Rational::one(), Rational::zero())
    }
    fn add(&self, o: &Self) -> Self {
        Dual::new(&self.re + &o.re, &self.eps + &o.eps)
    }
    fn mul(&self, o: &Self) -> Self {
        Dual::new(&self.re * &o.re, &self.re * &o.eps + &self.eps * &o.re)
    }
    fn neg(&self) -> Self {
        Dual::new(-self.re.clone(), -self.eps.clone())
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.eps)
    }
    fn scale_rat(&self, r: &Rational) -> Self {
        Dual::new(&self.re * r, &self.eps * r)
    }
    fn render(&self) -> String {
        format!("{}+{}ε", self.re, self.eps)
    }
}

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RatMatrix = Matrix<Rational>;

impl<T: Ring> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl<T: Ring> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!("{} entries for a {rows}×{cols} matrix", data.len())));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// All entries equal to `sample.zero_like()`.
    pub fn zeros(rows: usize, cols: usize, sample: &T) -> Self {
        Matrix { rows, cols, data: vec![sample.zero_like(); rows * cols] }
    }

    pub fn identity(n: usize, sample: &T) -> Self {
        let mut m = Self::zeros(n, n, sample);
        for i in 0..n {
            m.set(i, i, sample.one_like());
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

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U: Ring>(&self, f: impl Fn(&T) -> Result<U>) -> Result<Matrix<U>> {
        let data = self.data.iter().map(f).collect::<Result<Vec<U>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    fn same_shape(&self, o: &Self) -> Result<()> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::Dimension(format!(
                "{}×{} against {}×{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::neg)
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        self.map(|x| x.scale_rat(r))
    }

    /// Product with a custom entry multiplication `(a_ij, b_jk) ↦ a_ij·b_jk`.
    pub fn mul_with(&self, o: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let sample = self.data.first().or(o.data.first()).ok_or_else(|| Error::Dimension("empty matrix".into()))?;
        let mut data = Vec::with_capacity(self.rows * o.cols);
        for i in 0..self.rows {
            for k in 0..o.cols {
                let mut acc = sample.zero_like();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    let b = o.get(j, k);
                    if a.vanishes() || b.vanishes() {
                        continue;
                    }
                    acc = acc.add(&f(a, b));
                }
                data.push(acc);
            }
        }
        Ok(Matrix { rows: self.rows, cols: o.cols, data })
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.mul_with(o, |a, b| a.mul(b))
    }

    pub fn pow(&self, k: usize) -> Result<Self> {
        let mut out = Self::identity(self.rows, &self.data[0]);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// `AB − BA`.
    pub fn commutator(&self, o: &Self) -> Result<Self> {
        self.mul(o)?.sub(&o.mul(self)?)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::vanishes)
    }

    /// `Σ_k N^k/k!` for a nilpotent `N`; errors if `N^{n+1} ≠ 0`.
    pub fn exp_nilpotent(&self) -> Result<Self> {
        let sample = &self.data[0];
        let mut out = Self::identity(self.rows, sample);
        let mut power = Self::identity(self.rows, sample);
        for k in 1..=self.rows + 1 {
            power = power.mul(self)?.scale_rat(&Rational::new(1.into(), (k as i64).into()));
            if power.is_zero() {
                return Ok(out);
            }
            out = out.add(&power)?;
        }
        Err(Error::NotNilpotent("matrix power does not vanish".into()))
    }

    /// Inverse of `I + N` with `N` nilpotent, by a finite Neumann series.
    pub fn unipotent_inverse(&self) -> Result<Self> {
        let sample = &self.data[0];
        let id = Self::identity(self.rows, sample);
        let n = self.sub(&id)?;
        let mut out = id.clone();
        let mut power = id;
        for _ in 0..self.rows + 1 {
            power = power.mul(&n)?.neg();
            if power.is_zero() {
                return Ok(out);
            }
            out = out.add(&power)?;
        }
        Err(Error::NotNilpotent("matrix is not unipotent".into()))
    }

    pub fn render(&self) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let cells: Vec<String> = (0..self.cols).map(|j| self.get(i, j).render()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

impl<T: Field> Matrix<T> {
    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let sample = self.data.first().ok_or_else(|| Error::Dimension("empty matrix".into()))?;
        let mut a = self.clone();
        let mut det = sample.one_like();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a.get(r, col).vanishes()) else {
                return Ok(sample.zero_like());
            };
            if p != col {
                for j in 0..n {
                    let t = a.get(p, j).clone();
                    a.set(p, j, a.get(col, j).clone());
                    a.set(col, j, t);
                }
                det = det.neg();
            }
            let pivot = a.get(col, col).clone();
            det = det.mul(&pivot);
            let pinv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                let f = a.get(r, col).mul(&pinv);
                if f.vanishes() {
                    continue;
                }
                for j in col..n {
                    let v = a.get(r, j).sub(&f.mul(a.get(col, j)));
                    a.set(r, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let sample = self.data.first().ok_or_else(|| Error::Dimension("empty matrix".into()))?.clone();
        let mut a = self.clone();
        let mut b = Self::identity(n, &sample);
        for col in 0..n {
            let p = (col..n).find(|&r| !a.get(r, col).vanishes()).ok_or(Error::Singular)?;
            for m in [&mut a, &mut b] {
                for j in 0..n {
                    let t = m.get(p, j).clone();
                    m.set(p, j, m.get(col, j).clone());
                    m.set(col, j, t);
                }
            }
            let pinv = a.get(col, col).inv().expect("nonzero pivot");
            for m in [&mut a, &mut b] {
                for j in 0..n {
                    let v = m.get(col, j).mul(&pinv);
                    m.set(col, j, v);
                }
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col).clone();
                if f.vanishes() {
                    continue;
                }
                for j in 0..n {
                    let va = a.get(r, j).sub(&f.mul(a.get(col, j)));
                    a.set(r, j, va);
                    let vb = b.get(r, j).sub(&f.mul(b.get(col, j)));
                    b.set(r, j, vb);
                }
            }
        }
        Ok(b)
    }

    /// Determinants of the top-left `k×k` blocks, `k = 1..n`.
    pub fn leading_minors(&self) -> Result<Vec<T>> {
        (1..=self.rows)
            .map(|k| {
                let mut data = Vec::with_capacity(k * k);
                for i in 0..k {
                    for j in 0..k {
                        data.push(self.get(i, j).clone());
                    }
                }
                Matrix { rows: k, cols: k, data }.det()
            })
            .collect()
    }
}

impl RatMatrix {
    /// Rows of `"p/q"` strings, the JSON layout for matrices.
    pub fn from_strings(rows: &[Vec<String>]) -> Result<Self> {
        let parsed = rows.iter().map(|r| r.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
        if parsed.is_empty() {
            return Ok(Self::zeros(0, 0, &Rational::zero()));
        }
        Self::from_rows(parsed)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect()).collect()
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .expect("rectangular integer rows")
    }

    /// Block diagonal of `k` copies of `[[0,1],[-1,0]]`.
    pub fn canonical_symplectic(m: usize) -> Self {
        let mut g = Self::zeros(m, m, &Rational::zero());
        for b in 0..m / 2 {
            g.set(2 * b, 2 * b + 1, Rational::one());
            g.set(2 * b + 1, 2 * b, -Rational::one());
        }
        g
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..self.cols).all(|j| *self.get(i, j) == -self.get(j, i).clone()))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Coefficients `c_0..c_n` of `det(xI − A) = Σ c_k x^k`, by Faddeev–LeVerrier.
    pub fn char_poly(&self) -> Result<Vec<Rational>> {
        if !self.is_square() {
            return Err(Error::Dimension("characteristic polynomial of a non-square matrix".into()));
        }
        let n = self.rows;
        let zero = Rational::zero();
        let mut coeffs = vec![zero.clone(); n + 1];
        coeffs[n] = Rational::one();
        let id = Self::identity(n, &zero);
        let mut m = Self::zeros(n, n, &zero);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            m = self.mul(&m)?.add(&id.scale_rat(&coeffs[n - k + 1]))?;
            let am = self.mul(&m)?;
            let trace = (0..n).fold(zero.clone(), |acc, i| acc + am.get(i, i));
            coeffs[n - k] = -trace / int(k as i64);
        }
        Ok(coeffs)
    }

    /// Sylvester criterion: every leading minor strictly positive.
    pub fn is_positive_definite(&self) -> Result<bool> {
        if !self.is_symmetric() {
            return Err(Error::Dimension("positive definiteness needs a symmetric matrix".into()));
        }
        Ok(self.leading_minors()?.iter().all(Signed::is_positive))
    }
}

impl Matrix<Scalar> {
    pub fn is_hermitian(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..self.cols).all(|j| *self.get(i, j) == self.get(j, i).conj()))
    }

    /// Sylvester criterion for a Hermitian matrix (its minors are real).
    pub fn is_positive_definite(&self) -> Result<bool> {
        if !self.is_hermitian() {
            return Err(Error::Dimension("positive definiteness needs a Hermitian matrix".into()));
        }
        Ok(self.leading_minors()?.iter().all(|d| d.im.is_zero() && d.re.is_positive()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn determinant_and_inverse() {
        let a = RatMatrix::from_ints(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(a.det().unwrap(), int(18));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), RatMatrix::identity(3, &int(0)));
        let sing = RatMatrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(sing.det().unwrap(), int(0));
        assert_eq!(sing.inverse().unwrap_err(), Error::Singular);
    }

    #[test]
    fn char_poly_matches_trace_and_det() {
        let a = RatMatrix::from_ints(&[&[2, 1], &[1, 2]]);
        // x² − 4x + 3
        assert_eq!(a.char_poly().unwrap(), vec![int(3), int(-4), int(1)]);
        let b = RatMatrix::from_ints(&[&[1, 2, 0], &[0, 1, 5], &[3, 0, 2]]);
        let c = b.char_poly().unwrap();
        assert_eq!(c[0], -b.det().unwrap());
        assert_eq!(c[2], int(-4));
    }

    #[test]
    fn sylvester_examples() {
        assert!(RatMatrix::from_ints(&[&[2, 1], &[1, 2]]).is_positive_definite().unwrap());
        assert!(!RatMatrix::from_ints(&[&[1, 0], &[0, -1]]).is_positive_definite().unwrap());
        assert!(RatMatrix::from_ints(&[&[0, 1], &[2, 0]]).is_positive_definite().is_err());
    }

    #[test]
    fn nilpotent_exponential() {
        let n = RatMatrix::from_ints(&[&[0, 2, 1], &[0, 0, 3], &[0, 0, 0]]);
        let e = n.exp_nilpotent().unwrap();
        // I + N + N²/2, N² has a single entry 6 at (0,2)
        assert_eq!(e.get(0, 2), &int(4));
        let inv = e.unipotent_inverse().unwrap();
        assert_eq!(e.mul(&inv).unwrap(), RatMatrix::identity(3, &int(0)));
        assert_eq!(rat(1, 2) * int(2), int(1));
    }

    #[test]
    fn dual_numbers_square_eps_to_zero() {
        let e = Dual::new(int(0), int(1));
        assert!(e.mul(&e).vanishes());
    }
}
