//! The odd Heisenberg group with oddonic time and its oddonic Schrödinger action.

use std::fmt;
use std::str::FromStr;

use super::{Oddon, OddonKind};
use crate::error::{Error, Result};
use crate::grassmann::GrassmannElement;
use crate::scalar::{factorial_inv, i_times, int, rat, Rational};
use crate::superfunctions::dot;
use crate::transforms::shift;

/// `(p, Θ, τ)` with `p = 1̂Π` even, `Θ` odd and `τ` an oddon.
#[derive(Debug, Clone, PartialEq)]
pub struct OddHeisenbergElement {
    pub p: Vec<Oddon>,
    pub theta: Vec<GrassmannElement>,
    pub tau: Oddon,
}

/// `B⁽¹⁾(v,v′) = p^jΘ′_j − Θ_j p′^j` with ordinary oddon products.
pub fn odd_b1(p: &[Oddon], theta: &[GrassmannElement], p2: &[Oddon], theta2: &[GrassmannElement]) -> Result<Oddon> {
    if p.len() != theta.len() || p2.len() != theta2.len() || p.len() != p2.len() {
        return Err(Error::Dimension("B⁽¹⁾ needs vectors of one length".into()));
    }
    let s = p.first().ok_or_else(|| Error::Dimension("empty vector".into()))?;
    let mut acc = Oddon::zero(s.kind(), s.registry());
    for j in 0..p.len() {
        let x = p[j].try_mul(&Oddon::plain(s.kind(), theta2[j].clone()))?;
        let y = Oddon::plain(s.kind(), theta[j].clone()).try_mul(&p2[j])?;
        acc = acc.try_add(&x)?.try_sub(&y)?;
    }
    Ok(acc)
}

impl OddHeisenbergElement {
    pub fn new(p: Vec<Oddon>, theta: Vec<GrassmannElement>, tau: Oddon) -> Result<Self> {
        if p.len() != theta.len() {
            return Err(Error::Dimension(format!("p has length {}, Θ has length {}", p.len(), theta.len())));
        }
        if p.iter().any(|x| x.kind() != tau.kind()) {
            return Err(Error::KindMismatch);
        }
        if let Some(x) = p.iter().find(|x| !x.is_zero() && x.parity() != Some(crate::grassmann::Parity::Even)) {
            return Err(Error::Parity { expected: "even oddon", found: x.to_string() });
        }
        if let Some(x) = theta.iter().find(|x| !x.is_odd()) {
            return Err(Error::Parity { expected: "odd", found: x.to_string() });
        }
        Ok(OddHeisenbergElement { p, theta, tau })
    }

    /// `p = 1̂Π` and `τ = t·1̂`.
    pub fn from_pi(pi: &[GrassmannElement], theta: Vec<GrassmannElement>, t: Rational) -> Result<Self> {
        let reg = theta
            .first()
            .or(pi.first())
            .map(|x| x.registry().clone())
            .ok_or_else(|| Error::Dimension("empty vector".into()))?;
        let p = pi.iter().map(|x| Oddon::hatted(OddonKind::Real, x.clone())).collect();
        OddHeisenbergElement::new(p, theta, Oddon::unit(OddonKind::Real, &reg).scale_rat(&t))
    }

    pub fn identity(m: usize, reg: &std::sync::Arc<crate::grassmann::GeneratorRegistry>) -> Self {
        let zero = Oddon::zero(OddonKind::Real, reg);
        OddHeisenbergElement { p: vec![zero.clone(); m], theta: vec![GrassmannElement::zero(reg); m], tau: zero }
    }

    pub fn m(&self) -> usize {
        self.p.len()
    }

    pub fn b1(&self, o: &Self) -> Result<Oddon> {
        odd_b1(&self.p, &self.theta, &o.p, &o.theta)
    }

    /// `(v+v′, τ+τ′+½B⁽¹⁾(v,v′))`.
    pub fn compose(&self, o: &Self) -> Result<Self> {
        if self.m() != o.m() {
            return Err(Error::Dimension(format!("m={} against m={}", self.m(), o.m())));
        }
        let p = self.p.iter().zip(&o.p).map(|(x, y)| x.try_add(y)).collect::<Result<_>>()?;
        let theta = self.theta.iter().zip(&o.theta).map(|(x, y)| x + y).collect();
        let tau = self.tau.try_add(&o.tau)?.try_add(&self.b1(o)?.scale_rat(&rat(1, 2)))?;
        Ok(OddHeisenbergElement { p, theta, tau })
    }

    /// `Π` with `p = 1̂Π`; refuses any other shape of `p`.
    pub fn pi(&self) -> Result<Vec<GrassmannElement>> {
        self.p
            .iter()
            .map(|x| {
                if x.a().is_zero() && (x.b().is_zero() || x.b().is_odd()) {
                    Ok(x.b().clone())
                } else {
                    Err(Error::Parity { expected: "p = 1̂Π with Π odd", found: x.to_string() })
                }
            })
            .collect()
    }

    /// `t` with `τ = t·1̂` for a rational `t`.
    pub fn time(&self) -> Result<Rational> {
        let t = self.tau.b();
        if !self.tau.a().is_zero() || !t.is_scalar() || !num_traits::Zero::is_zero(&t.body().im) {
            return Err(Error::Parity { expected: "τ = t·1̂ with rational t", found: self.tau.to_string() });
        }
        Ok(t.body().re)
    }
}

/// `i1̂(Θ·ζ)F + Π·∂F`: the generator `ι̂(ΘX + ΠD)`, `D = ι̂∂`, `ι̂ = i·1̂`.
fn odd_generator(pi: &[GrassmannElement], theta: &[GrassmannElement], zetas: &[usize], f: &Oddon) -> Result<Oddon> {
    let reg = f.registry();
    let zeta: Vec<GrassmannElement> = zetas.iter().map(|&j| GrassmannElement::generator(reg, j)).collect();
    let mult = Oddon::hatted(OddonKind::Real, dot(theta, &zeta).scale(&i_times(int(1))));
    let mut out = mult.try_mul(f)?;
    for (p, &j) in pi.iter().zip(zetas) {
        out = out.try_add(&f.left_derivative(j).left_mul(p)?)?;
    }
    Ok(out)
}

/// `exp_*[ι̂(ΘX+ΠD)] ∗ f` as an operator series: `Σ T_n/n!` with `T_0 = f`
/// and `T_n = A(1̂·T_{n−1})`. Needs `t = 0`; `exp_*(ι̂t)` is not ∗-nilpotent.
pub fn odd_pi_operator(g: &OddHeisenbergElement, f: &GrassmannElement, zetas: &[usize]) -> Result<Oddon> {
    if g.m() != zetas.len() {
        return Err(Error::Dimension(format!("group element for m={}, function of {} variables", g.m(), zetas.len())));
    }
    let pi = g.pi()?;
    if !num_traits::Zero::is_zero(&g.time()?) {
        return Err(Error::NotNilpotent(format!("exp_* of ι̂t with t = {} does not terminate", g.time()?)));
    }
    let reg = f.registry().clone();
    let unit = Oddon::unit(OddonKind::Real, &reg);
    let f0 = Oddon::plain(OddonKind::Real, f.clone());
    let mut out = f0.clone();
    let mut term = odd_generator(&pi, &g.theta, zetas, &unit.try_mul(&f0)?)?;
    for n in 1..=2 * reg.len() + 2 {
        if term.is_zero() {
            return Ok(out);
        }
        out = out.try_add(&term.scale_rat(&factorial_inv(n)))?;
        term = odd_generator(&pi, &g.theta, zetas, &unit.try_mul(&term)?)?;
    }
    Err(Error::NotNilpotent("operator series does not terminate".into()))
}

/// How the scalar in front of the closed-form exponent is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// The plain imaginary unit `i`.
    Printed,
    /// The odd imaginary unit `ι̂ = i·1̂`, matching the operator side.
    Hatted,
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClosedForm::Printed => "printed",
            ClosedForm::Hatted => "hatted",
        })
    }
}

impl FromStr for ClosedForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "printed" => Ok(ClosedForm::Printed),
            "hatted" => Ok(ClosedForm::Hatted),
            other => Err(Error::Parse(format!("unknown closed form `{other}` (printed, hatted)"))),
        }
    }
}

/// `exp_*[c(t + Θζ + ½Θ∗p)] ∗ f(ζ + 1̂p)` with `c = i` or `c = ι̂`.
pub fn odd_pi_closed(g: &OddHeisenbergElement, f: &GrassmannElement, zetas: &[usize], form: ClosedForm) -> Result<Oddon> {
    let reg = f.registry().clone();
    let unit = Oddon::unit(OddonKind::Real, &reg);
    let zeta: Vec<GrassmannElement> = zetas.iter().map(|&j| GrassmannElement::generator(&reg, j)).collect();
    let mut inner = Oddon::plain(OddonKind::Real, dot(&g.theta, &zeta));
    let mut shift_by = Vec::new();
    for (p, th) in g.p.iter().zip(&g.theta) {
        let th_star_p = Oddon::plain(OddonKind::Real, th.clone()).star(p)?;
        inner = inner.try_add(&th_star_p.scale_rat(&rat(1, 2)))?;
        let s = unit.try_mul(p)?;
        if !s.b().is_zero() {
            return Err(Error::Parity { expected: "p = 1̂Π", found: p.to_string() });
        }
        shift_by.push(s.a().clone());
    }
    inner = inner.try_add(&Oddon::plain(OddonKind::Real, GrassmannElement::rational(&reg, g.time()?)))?;
    let i = i_times(int(1));
    let exponent = match form {
        ClosedForm::Printed => inner.scale(&i),
        ClosedForm::Hatted => unit.scale(&i).try_mul(&inner)?,
    };
    let moved = shift(f, zetas, &shift_by)?;
    exponent.odd_exp()?.star(&Oddon::plain(OddonKind::Real, moved))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::{GeneratorRegistry, Role};

    #[test]
    fn tau_squares_to_t_squared() {
        let reg = GeneratorRegistry::zetas(1).unwrap();
        let tau = Oddon::unit(OddonKind::Real, &reg).scale_rat(&rat(2, 3));
        assert_eq!(tau.try_mul(&tau).unwrap(), Oddon::one(OddonKind::Real, &reg).scale_rat(&rat(4, 9)));
    }

    #[test]
    fn identity_acts_as_star_unit() {
        let reg = GeneratorRegistry::builder()
            .generator("ζ", Role::Zeta)
            .generator("Π", Role::Parameter)
            .generator("Θ", Role::Parameter)
            .build()
            .unwrap();
        let f = GrassmannElement::generator(&reg, 0);
        let g = OddHeisenbergElement::identity(1, &reg);
        let out = odd_pi_operator(&g, &f, &[0]).unwrap();
        assert_eq!(out, Oddon::plain(OddonKind::Real, f));
    }

    #[test]
    fn nonzero_time_is_refused_by_the_operator_series() {
        let reg = GeneratorRegistry::builder().generator("ζ", Role::Zeta).generator("Θ", Role::Parameter).build().unwrap();
        let g = OddHeisenbergElement::from_pi(&[GrassmannElement::zero(&reg)], vec![GrassmannElement::generator(&reg, 1)], rat(1, 2)).unwrap();
        assert!(matches!(odd_pi_operator(&g, &GrassmannElement::one(&reg), &[0]), Err(Error::NotNilpotent(_))));
    }
}
