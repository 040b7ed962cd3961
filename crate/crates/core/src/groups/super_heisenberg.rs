//! Even super-Heisenberg group: supermatrix realization, polarized and ⋄ laws,
//! the fermionic block μ and the supersymplectic form.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grassmann::{GeneratorRegistry, GrassmannElement, Parity};
use crate::linalg::Matrix;
use crate::scalar::{rat, Rational};

use super::heisenberg::dot;
use super::supermatrix::SuperMatrix;

/// `(p, q, Π, Θ, t)` with `p, q` rational, `Π, Θ` odd and `t` even.
/// `n = 0` gives the fermionic group.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperHeisenbergTuple {
    pub p: Vec<Rational>,
    pub q: Vec<Rational>,
    pub pi: Vec<GrassmannElement>,
    pub theta: Vec<GrassmannElement>,
    pub t: GrassmannElement,
}

fn odd_dot(a: &[GrassmannElement], b: &[GrassmannElement], reg: &Arc<GeneratorRegistry>) -> GrassmannElement {
    a.iter().zip(b).fold(GrassmannElement::zero(reg), |acc, (x, y)| &acc + &(x * y))
}

fn gadd(a: &[GrassmannElement], b: &[GrassmannElement]) -> Vec<GrassmannElement> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn radd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `B(v,v′) = Π·Θ′ + Θ·Π′` on odd-sector pairs `(Π, Θ)`.
pub fn supersymplectic_b(
    pi: &[GrassmannElement],
    theta: &[GrassmannElement],
    pi2: &[GrassmannElement],
    theta2: &[GrassmannElement],
    reg: &Arc<GeneratorRegistry>,
) -> GrassmannElement {
    &odd_dot(pi, theta2, reg) + &odd_dot(theta, pi2, reg)
}

/// The fermionic block `μ(Π,Θ,t)`: row 0 is `(0, t, Π)`, the odd rows carry `Θ`
/// in column 1.
pub fn fermionic_mu(
    pi: &[GrassmannElement],
    theta: &[GrassmannElement],
    t: &GrassmannElement,
) -> Result<SuperMatrix<GrassmannElement>> {
    let m = pi.len();
    if theta.len() != m {
        return Err(Error::Dimension(format!("Π has length {m}, Θ has length {}", theta.len())));
    }
    for x in pi.iter().chain(theta) {
        if !x.is_odd() {
            return Err(Error::Parity { expected: "odd", found: x.to_string() });
        }
    }
    if !t.is_even() {
        return Err(Error::Parity { expected: "even", found: t.to_string() });
    }
    let mut e = Matrix::zeros(m + 2, m + 2, t);
    e.set(0, 1, t.clone());
    for j in 0..m {
        e.set(0, 2 + j, pi[j].clone());
        e.set(2 + j, 1, theta[j].clone());
    }
    let par: Vec<Parity> = [Parity::Even, Parity::Even].into_iter().chain(std::iter::repeat(Parity::Odd).take(m)).collect();
    SuperMatrix::new(e, par.clone(), par)
}

impl SuperHeisenbergTuple {
    pub fn new(
        p: Vec<Rational>,
        q: Vec<Rational>,
        pi: Vec<GrassmannElement>,
        theta: Vec<GrassmannElement>,
        t: GrassmannElement,
    ) -> Result<Self> {
        if p.len() != q.len() || pi.len() != theta.len() {
            return Err(Error::Dimension("p/q or Π/Θ lengths differ".into()));
        }
        for x in pi.iter().chain(&theta) {
            if !x.same_registry(&t) {
                return Err(Error::RegistryMismatch);
            }
            if !x.is_odd() {
                return Err(Error::Parity { expected: "odd", found: x.to_string() });
            }
        }
        if !t.is_even() {
            return Err(Error::Parity { expected: "even", found: t.to_string() });
        }
        Ok(SuperHeisenbergTuple { p, q, pi, theta, t })
    }

    pub fn identity(n: usize, m: usize, reg: &Arc<GeneratorRegistry>) -> Self {
        let z = GrassmannElement::zero(reg);
        SuperHeisenbergTuple {
            p: vec![Rational::from_integer(0.into()); n],
            q: vec![Rational::from_integer(0.into()); n],
            pi: vec![z.clone(); m],
            theta: vec![z.clone(); m],
            t: z,
        }
    }

    pub fn registry(&self) -> &Arc<GeneratorRegistry> {
        self.t.registry()
    }

    pub fn n(&self) -> usize {
        self.p.len()
    }

    pub fn m(&self) -> usize {
        self.pi.len()
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.n() != o.n() || self.m() != o.m() {
            return Err(Error::Dimension(format!(
                "(n,m) = ({},{}) against ({},{})",
                self.n(),
                self.m(),
                o.n(),
                o.m()
            )));
        }
        if !self.t.same_registry(&o.t) {
            return Err(Error::RegistryMismatch);
        }
        Ok(())
    }

    fn pq(&self, o: &Self) -> Rational {
        dot(&self.p, &o.q)
    }

    fn pi_theta(&self, o: &Self) -> GrassmannElement {
        odd_dot(&self.pi, &o.theta, self.registry())
    }

    fn sum_with(&self, o: &Self, t: GrassmannElement) -> Self {
        SuperHeisenbergTuple {
            p: radd(&self.p, &o.p),
            q: radd(&self.q, &o.q),
            pi: gadd(&self.pi, &o.pi),
            theta: gadd(&self.theta, &o.theta),
            t,
        }
    }

    /// `t + t′ + p·q′ + Π·Θ′`.
    pub fn compose_polarized(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let reg = self.registry();
        let t = &(&(&self.t + &o.t) + &GrassmannElement::rational(reg, self.pq(o))) + &self.pi_theta(o);
        Ok(self.sum_with(o, t))
    }

    /// `t + t′ + ½(p·q′ − q·p′) + ½(Π·Θ′ + Θ·Π′)`.
    pub fn compose_diamond(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let reg = self.registry();
        let half = rat(1, 2);
        let omega = (self.pq(o) - dot(&self.q, &o.p)) * &half;
        let b = supersymplectic_b(&self.pi, &self.theta, &o.pi, &o.theta, reg).scale_rat(&half);
        let t = &(&(&self.t + &o.t) + &GrassmannElement::rational(reg, omega)) + &b;
        Ok(self.sum_with(o, t))
    }

    fn negated(&self, t: GrassmannElement) -> Self {
        SuperHeisenbergTuple {
            p: self.p.iter().map(|x| -x.clone()).collect(),
            q: self.q.iter().map(|x| -x.clone()).collect(),
            pi: self.pi.iter().map(|x| -x).collect(),
            theta: self.theta.iter().map(|x| -x).collect(),
            t,
        }
    }

    pub fn inverse_polarized(&self) -> Self {
        let reg = self.registry();
        let t = &(&(-&self.t) + &GrassmannElement::rational(reg, self.pq(self))) + &self.pi_theta(self);
        self.negated(t)
    }

    pub fn inverse_diamond(&self) -> Self {
        self.negated(-&self.t)
    }

    /// Diamond coordinates to polarized ones: `t ↦ t + ½(p·q + Π·Θ)`.
    pub fn diamond_to_polarized(&self) -> Self {
        let reg = self.registry();
        let half = rat(1, 2);
        let shift = &GrassmannElement::rational(reg, self.pq(self) * &half) + &self.pi_theta(self).scale_rat(&half);
        SuperHeisenbergTuple { t: &self.t + &shift, ..self.clone() }
    }

    fn layout(&self) -> Vec<Parity> {
        let n = self.n();
        std::iter::repeat(Parity::Even).take(n + 2).chain(std::iter::repeat(Parity::Odd).take(self.m())).collect()
    }

    /// Strictly upper part: row 0 is `(0, p, t, Π)`, the `q` column and the
    /// `Θ` entries sit in column `n+1`.
    pub fn algebra_matrix(&self) -> SuperMatrix<GrassmannElement> {
        let n = self.n();
        let m = self.m();
        let reg = self.registry();
        let size = n + m + 2;
        let mut e = Matrix::zeros(size, size, &self.t);
        for j in 0..n {
            e.set(0, 1 + j, GrassmannElement::rational(reg, self.p[j].clone()));
            e.set(1 + j, n + 1, GrassmannElement::rational(reg, self.q[j].clone()));
        }
        e.set(0, n + 1, self.t.clone());
        for k in 0..m {
            e.set(0, n + 2 + k, self.pi[k].clone());
            e.set(n + 2 + k, n + 1, self.theta[k].clone());
        }
        let layout = self.layout();
        SuperMatrix { entries: e, row_parity: layout.clone(), col_parity: layout }
    }

    /// `M(p,q,Π,Θ,t) = 1 + X(p,q,Π,Θ,t)`.
    pub fn group_matrix(&self) -> SuperMatrix<GrassmannElement> {
        let x = self.algebra_matrix();
        let id = Matrix::identity(x.entries.rows(), &self.t);
        SuperMatrix { entries: id.add(&x.entries).expect("same shape"), ..x }
    }

    /// Reads the tuple back from a matrix of the form `1 + X`.
    pub fn from_group_matrix(mat: &SuperMatrix<GrassmannElement>, n: usize, m: usize) -> Result<Self> {
        let e = &mat.entries;
        if e.rows() != n + m + 2 {
            return Err(Error::Dimension("matrix size does not match (n, m)".into()));
        }
        let scalar = |x: &GrassmannElement| -> Result<Rational> {
            if !x.is_scalar() || !num_traits::Zero::is_zero(&x.body().im) {
                return Err(Error::Dimension(format!("expected a rational entry, got {x}")));
            }
            Ok(x.body().re)
        };
        let g = SuperHeisenbergTuple {
            p: (0..n).map(|j| scalar(e.get(0, 1 + j))).collect::<Result<_>>()?,
            q: (0..n).map(|j| scalar(e.get(1 + j, n + 1))).collect::<Result<_>>()?,
            pi: (0..m).map(|k| e.get(0, n + 2 + k).clone()).collect(),
            theta: (0..m).map(|k| e.get(n + 2 + k, n + 1).clone()).collect(),
            t: e.get(0, n + 1).clone(),
        };
        if g.group_matrix().entries != *e {
            return Err(Error::Dimension("matrix is not of super-Heisenberg form".into()));
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::Role;

    fn reg() -> Arc<GeneratorRegistry> {
        GeneratorRegistry::builder()
            .block("pi", "Π", 2, Role::Parameter)
            .block("theta", "Θ", 2, Role::Parameter)
            .build()
            .unwrap()
    }

    fn g(r: &Arc<GeneratorRegistry>, i: usize) -> GrassmannElement {
        GrassmannElement::generator(r, i)
    }

    #[test]
    fn mu_cubes_to_zero_and_squares_to_pi_theta() {
        let r = reg();
        let pi = vec![g(&r, 0)];
        let th = vec![g(&r, 2)];
        let t = GrassmannElement::rational(&r, rat(3, 1));
        let mu = fermionic_mu(&pi, &th, &t).unwrap();
        assert!(mu.is_even());
        assert!(mu.pow(3).unwrap().entries.is_zero());
        let z = GrassmannElement::zero(&r);
        let mu0 = fermionic_mu(&pi, &th, &z).unwrap();
        let sq = mu0.pow(2).unwrap().entries;
        assert_eq!(sq.get(0, 1), &(&g(&r, 0) * &g(&r, 2)));
        let others = (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).filter(|&(i, j)| (i, j) != (0, 1));
        for (i, j) in others {
            assert!(sq.get(i, j).is_zero());
        }
        let central = fermionic_mu(&[z.clone()], &[z.clone()], &t).unwrap();
        assert!(central.pow(2).unwrap().entries.is_zero());
        assert!(fermionic_mu(&[t.clone()], &[z.clone()], &z).is_err());
    }

    #[test]
    fn fermionic_polarized_example() {
        let r = reg();
        let z = GrassmannElement::zero(&r);
        let a = SuperHeisenbergTuple::new(vec![], vec![], vec![g(&r, 0)], vec![z.clone()], z.clone()).unwrap();
        let b = SuperHeisenbergTuple::new(vec![], vec![], vec![z.clone()], vec![g(&r, 2)], z.clone()).unwrap();
        let c = a.compose_polarized(&b).unwrap();
        assert_eq!(c.t, &g(&r, 0) * &g(&r, 2));
        let d = a.compose_diamond(&b).unwrap();
        assert_eq!(d.t, (&g(&r, 0) * &g(&r, 2)).scale_rat(&rat(1, 2)));
    }

    #[test]
    fn b_of_v_with_itself() {
        let r = reg();
        let pi = vec![g(&r, 0)];
        let th = vec![g(&r, 2)];
        // ΘΠ = −ΠΘ for odd entries, so the two halves cancel
        assert!(supersymplectic_b(&pi, &th, &pi, &th, &r).is_zero());
        let b = supersymplectic_b(&pi, &[GrassmannElement::zero(&r)], &[GrassmannElement::zero(&r)], &th, &r);
        assert_eq!(b, &g(&r, 0) * &g(&r, 2));
    }

    #[test]
    fn round_trip_through_matrix() {
        let r = reg();
        let t = &g(&r, 0) * &g(&r, 3);
        let x = SuperHeisenbergTuple::new(vec![rat(1, 2)], vec![rat(-3, 1)], vec![g(&r, 0)], vec![g(&r, 2)], t).unwrap();
        let m = x.group_matrix();
        assert!(m.is_even());
        assert_eq!(SuperHeisenbergTuple::from_group_matrix(&m, 1, 1).unwrap(), x);
    }
}
