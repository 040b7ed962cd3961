//! The classical Heisenberg group in polarized and symmetric coordinates.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::scalar::{rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeisenbergTuple {
    pub p: Vec<Rational>,
    pub q: Vec<Rational>,
    pub t: Rational,
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

fn vadd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn vneg(a: &[Rational]) -> Vec<Rational> {
    a.iter().map(|x| -x.clone()).collect()
}

impl HeisenbergTuple {
    pub fn new(p: Vec<Rational>, q: Vec<Rational>, t: Rational) -> Result<Self> {
        if p.is_empty() || p.len() != q.len() {
            return Err(Error::Dimension(format!("p has length {}, q has length {}", p.len(), q.len())));
        }
        Ok(HeisenbergTuple { p, q, t })
    }

    pub fn identity(n: usize) -> Self {
        HeisenbergTuple { p: vec![Rational::zero(); n], q: vec![Rational::zero(); n], t: Rational::zero() }
    }

    pub fn n(&self) -> usize {
        self.p.len()
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.n() != o.n() {
            return Err(Error::Dimension(format!("n = {} against n = {}", self.n(), o.n())));
        }
        Ok(())
    }

    /// `(p+p′, q+q′, t+t′+p·q′)`.
    pub fn compose_polarized(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(HeisenbergTuple { p: vadd(&self.p, &o.p), q: vadd(&self.q, &o.q), t: &self.t + &o.t + dot(&self.p, &o.q) })
    }

    /// `(p+p′, q+q′, t+t′+½(p·q′ − p′·q))`.
    pub fn compose_symmetric(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let omega = dot(&self.p, &o.q) - dot(&o.p, &self.q);
        Ok(HeisenbergTuple {
            p: vadd(&self.p, &o.p),
            q: vadd(&self.q, &o.q),
            t: &self.t + &o.t + omega * rat(1, 2),
        })
    }

    /// Exponential coordinates to polarized ones: `(p, q, t + ½p·q)`.
    pub fn h_exp(&self) -> Self {
        HeisenbergTuple { p: self.p.clone(), q: self.q.clone(), t: &self.t + dot(&self.p, &self.q) * rat(1, 2) }
    }

    pub fn inverse_polarized(&self) -> Self {
        HeisenbergTuple { p: vneg(&self.p), q: vneg(&self.q), t: -self.t.clone() + dot(&self.p, &self.q) }
    }

    pub fn inverse_symmetric(&self) -> Self {
        HeisenbergTuple { p: vneg(&self.p), q: vneg(&self.q), t: -self.t.clone() }
    }

    /// The strictly upper triangular `m(p,q,t)` of size `n+2`.
    pub fn algebra_matrix(&self) -> RatMatrix {
        let n = self.n();
        let mut m = RatMatrix::zeros(n + 2, n + 2, &Rational::zero());
        for j in 0..n {
            m.set(0, j + 1, self.p[j].clone());
            m.set(j + 1, n + 1, self.q[j].clone());
        }
        m.set(0, n + 1, self.t.clone());
        m
    }

    /// `M(p,q,t) = 1 + m(p,q,t)`.
    pub fn group_matrix(&self) -> RatMatrix {
        let n = self.n();
        RatMatrix::identity(n + 2, &Rational::one()).add(&self.algebra_matrix()).expect("same shape")
    }

    /// Reads `(p,q,t)` back from a matrix of the form `1 + m`.
    pub fn from_group_matrix(m: &RatMatrix) -> Result<Self> {
        let n = m.rows().checked_sub(2).ok_or_else(|| Error::Dimension("matrix too small".into()))?;
        let want = HeisenbergTuple {
            p: (0..n).map(|j| m.get(0, j + 1).clone()).collect(),
            q: (0..n).map(|j| m.get(j + 1, n + 1).clone()).collect(),
            t: m.get(0, n + 1).clone(),
        };
        if want.group_matrix() != *m {
            return Err(Error::Dimension("matrix is not of Heisenberg form".into()));
        }
        Ok(want)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn h(p: i64, q: i64, t: i64) -> HeisenbergTuple {
        HeisenbergTuple::new(vec![int(p)], vec![int(q)], int(t)).unwrap()
    }

    #[test]
    fn polarized_examples() {
        assert_eq!(h(1, 0, 0).compose_polarized(&h(0, 1, 0)).unwrap(), h(1, 1, 1));
        assert_eq!(h(0, 0, 0).compose_polarized(&h(3, 5, 7)).unwrap(), h(3, 5, 7));
        assert_eq!(h(1, 2, 0).compose_polarized(&h(3, 4, 0)).unwrap(), h(4, 6, 4));
    }

    #[test]
    fn symmetric_examples() {
        let got = h(1, 0, 0).compose_symmetric(&h(0, 1, 0)).unwrap();
        assert_eq!(got.t, rat(1, 2));
        let g = h(2, 3, 5);
        assert_eq!(g.compose_symmetric(&g).unwrap(), h(4, 6, 10));
        assert_eq!(h(1, 2, 0).compose_symmetric(&h(3, 4, 0)).unwrap(), h(4, 6, -1));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(h(1, 1, 0).h_exp().t, rat(1, 2));
        assert_eq!(h(4, 0, 3).h_exp(), h(4, 0, 3));
        assert_eq!(h(2, 3, 1).h_exp(), h(2, 3, 4));
        // matrix exponential oracle
        let e = h(2, 3, 1).algebra_matrix().exp_nilpotent().unwrap();
        assert_eq!(HeisenbergTuple::from_group_matrix(&e).unwrap(), h(2, 3, 4));
    }

    #[test]
    fn dimension_mismatch() {
        let a = h(1, 1, 1);
        let b = HeisenbergTuple::identity(2);
        assert!(a.compose_polarized(&b).is_err());
        assert!(HeisenbergTuple::new(vec![int(1)], vec![], int(0)).is_err());
    }
}
