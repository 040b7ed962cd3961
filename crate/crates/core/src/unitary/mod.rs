//! Finite-dimensional super-Hilbert spaces, the super Stone–von Neumann
//! existence test and the Harish-Chandra pair of the super-Heisenberg group.

pub mod checks;
pub mod hc;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmann::Parity;
use crate::linalg::{Matrix, RatMatrix};
use crate::scalar::{imag_unit, Rational, Scalar};

/// `ℋ = ℋ₀ ⊕ ℋ₁` with a positive-definite Hermitian gram matrix per block.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperHilbertSpace {
    gram_even: Matrix<Scalar>,
    gram_odd: Matrix<Scalar>,
}

/// A vector with even and odd coordinate blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperVector {
    pub even: Vec<Scalar>,
    pub odd: Vec<Scalar>,
}

impl SuperVector {
    /// `None` when both blocks are nonzero. The zero vector counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let e = self.even.iter().any(|x| !x.is_zero());
        let o = self.odd.iter().any(|x| !x.is_zero());
        match (e, o) {
            (true, true) => None,
            (false, true) => Some(Parity::Odd),
            _ => Some(Parity::Even),
        }
    }
}

fn check_gram(g: &Matrix<Scalar>, which: &str) -> Result<()> {
    if g.rows() == 0 {
        return Ok(());
    }
    if !g.is_positive_definite()? {
        return Err(Error::Dimension(format!("{which} gram matrix is not positive definite")));
    }
    Ok(())
}

impl SuperHilbertSpace {
    pub fn new(gram_even: Matrix<Scalar>, gram_odd: Matrix<Scalar>) -> Result<Self> {
        check_gram(&gram_even, "even")?;
        check_gram(&gram_odd, "odd")?;
        Ok(SuperHilbertSpace { gram_even, gram_odd })
    }

    /// Identity grams on `C^{p|q}`.
    pub fn standard(dim_even: usize, dim_odd: usize) -> Self {
        let one = Scalar::one();
        SuperHilbertSpace { gram_even: Matrix::identity(dim_even, &one), gram_odd: Matrix::identity(dim_odd, &one) }
    }

    pub fn dim_even(&self) -> usize {
        self.gram_even.rows()
    }

    pub fn dim_odd(&self) -> usize {
        self.gram_odd.rows()
    }

    /// Unit vector `e_k` (even) or `f_k` (odd).
    pub fn basis_vector(&self, parity: Parity, k: usize) -> SuperVector {
        let zero = Scalar::zero();
        let mut v = SuperVector { even: vec![zero.clone(); self.dim_even()], odd: vec![zero; self.dim_odd()] };
        let one = Scalar::one();
        match parity {
            Parity::Even => v.even[k] = one,
            Parity::Odd => v.odd[k] = one,
        }
        v
    }

    /// `<v,w>`: zero across parities, `(v,w)` on ℋ₀ and `i(v,w)` on ℋ₁, with
    /// `(v,w) = Σ conj(v_i) G_ij w_j`.
    pub fn form(&self, v: &SuperVector, w: &SuperVector) -> Result<Scalar> {
        let (pv, pw) = match (v.parity(), w.parity()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::NonHomogeneous("super Hermitian form needs homogeneous vectors".into())),
        };
        if v.even.len() != self.dim_even() || v.odd.len() != self.dim_odd() || w.even.len() != self.dim_even() || w.odd.len() != self.dim_odd() {
            return Err(Error::Dimension(format!("space has dimension ({}|{})", self.dim_even(), self.dim_odd())));
        }
        if pv != pw {
            return Ok(Scalar::zero());
        }
        let (g, x, y) = match pv {
            Parity::Even => (&self.gram_even, &v.even, &w.even),
            Parity::Odd => (&self.gram_odd, &v.odd, &w.odd),
        };
        let mut acc = Scalar::zero();
        for i in 0..x.len() {
            for j in 0..y.len() {
                acc += x[i].conj() * g.get(i, j) * &y[j];
            }
        }
        Ok(if pv == Parity::Odd { acc * imag_unit() } else { acc })
    }
}

/// `Ω` on `V = V₀ ⊕ V₁` with the character `χ(t) = e^{iβt}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SupersymplecticFormData {
    pub omega_even: RatMatrix,
    pub omega_odd: RatMatrix,
    pub beta: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SvnVerdict {
    /// A unique irreducible unitary representation with character χ.
    ExistsUnique,
    /// No unitary representation with character χ.
    None,
}

impl std::fmt::Display for SvnVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SvnVerdict::ExistsUnique => "ExistsUnique",
            SvnVerdict::None => "None",
        })
    }
}

impl SupersymplecticFormData {
    pub fn new(omega_even: RatMatrix, omega_odd: RatMatrix, beta: Rational) -> Result<Self> {
        if omega_even.rows() > 0 && !omega_even.is_antisymmetric() {
            return Err(Error::NotAntisymmetric);
        }
        if omega_odd.rows() > 0 && !omega_odd.is_symmetric() {
            return Err(Error::Dimension("Ω on V₁ must be symmetric".into()));
        }
        Ok(SupersymplecticFormData { omega_even, omega_odd, beta })
    }

    /// Positive definiteness of `Ω|_{V₁×V₁}` by leading minors.
    pub fn verdict(&self) -> Result<SvnVerdict> {
        if !self.beta.is_positive() {
            return Err(Error::NonPositiveBeta(self.beta.clone()));
        }
        if self.omega_odd.rows() == 0 || self.omega_odd.is_positive_definite()? {
            Ok(SvnVerdict::ExistsUnique)
        } else {
            Ok(SvnVerdict::None)
        }
    }
}

/// `{"beta":"1","omega_odd":[["1","0"],["0","1"]],"omega_even":[...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson {
    pub beta: String,
    pub omega_odd: Vec<Vec<String>>,
    #[serde(default)]
    pub omega_even: Vec<Vec<String>>,
}

impl FormJson {
    pub fn to_form(&self) -> Result<SupersymplecticFormData> {
        SupersymplecticFormData::new(
            RatMatrix::from_strings(&self.omega_even)?,
            RatMatrix::from_strings(&self.omega_odd)?,
            crate::scalar::parse_rational(&self.beta)?,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn form_examples() {
        let h = SuperHilbertSpace::standard(2, 2);
        let e = h.basis_vector(Parity::Even, 0);
        let f = h.basis_vector(Parity::Odd, 0);
        assert_eq!(h.form(&e, &f).unwrap(), Scalar::zero());
        assert_eq!(h.form(&e, &e).unwrap(), Scalar::new(int(1), int(0)));
        assert_eq!(h.form(&f, &f).unwrap(), imag_unit());
        let mixed = SuperVector { even: e.even.clone(), odd: f.odd.clone() };
        assert!(matches!(h.form(&mixed, &e), Err(Error::NonHomogeneous(_))));
    }

    #[test]
    fn verdict_examples() {
        let v = |rows: &[&[i64]], beta: i64| SupersymplecticFormData::new(RatMatrix::zeros(0, 0, &int(0)), RatMatrix::from_ints(rows), int(beta)).unwrap().verdict();
        assert_eq!(v(&[&[1, 0], &[0, 1]], 1).unwrap(), SvnVerdict::ExistsUnique);
        assert_eq!(v(&[&[1, 0], &[0, -1]], 1).unwrap(), SvnVerdict::None);
        assert_eq!(v(&[&[2, 1], &[1, 2]], 1).unwrap(), SvnVerdict::ExistsUnique);
        assert!(matches!(v(&[&[1]], 0), Err(Error::NonPositiveBeta(_))));
    }

    #[test]
    fn form_json_round_trip() {
        let text = r#"{"beta":"1","omega_odd":[["1","0"],["0","1"]],"omega_even":[["0","1"],["-1","0"]]}"#;
        let j: FormJson = serde_json::from_str(text).unwrap();
        assert_eq!(j.to_form().unwrap().verdict().unwrap(), SvnVerdict::ExistsUnique);
        let bad: FormJson = serde_json::from_str(r#"{"beta":"1","omega_odd":[["1","2"],["0","1"]]}"#).unwrap();
        assert!(bad.to_form().is_err());
    }
}
