//! The π₁ representation of the fermionic Heisenberg group, the Weyl operators,
//! and the Grassmannian Fourier–Wigner transform.

pub mod bargmann;
pub mod checks;

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::grassmann::{GrassmannElement, PhasedElement};
use crate::scalar::{imag_unit, rat, Rational, Scalar};
use crate::superfunctions::dot;

/// `(Π, Θ, t)` in FH_m. The body of `t` is a real phase, its soul an even
/// nilpotent parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct FHGroupElement {
    pub pi: Vec<GrassmannElement>,
    pub theta: Vec<GrassmannElement>,
    pub t: GrassmannElement,
}

impl FHGroupElement {
    pub fn new(pi: Vec<GrassmannElement>, theta: Vec<GrassmannElement>, t: GrassmannElement) -> Result<Self> {
        if pi.len() != theta.len() {
            return Err(Error::Dimension(format!("Π has length {}, Θ has length {}", pi.len(), theta.len())));
        }
        if let Some(x) = pi.iter().chain(&theta).find(|x| !x.is_odd()) {
            return Err(Error::Parity { expected: "odd", found: x.to_string() });
        }
        if !t.is_even() {
            return Err(Error::Parity { expected: "even", found: t.to_string() });
        }
        if !t.body().im.is_zero() {
            return Err(Error::Parity { expected: "real central parameter", found: t.to_string() });
        }
        Ok(FHGroupElement { pi, theta, t })
    }

    pub fn m(&self) -> usize {
        self.pi.len()
    }

    /// `B(v,v′) = Π·Θ′ + Θ·Π′`.
    pub fn b(&self, o: &Self) -> GrassmannElement {
        &dot(&self.pi, &o.theta) + &dot(&self.theta, &o.pi)
    }

    /// `(Π+Π′, Θ+Θ′, t+t′+½B(v,v′))`.
    pub fn diamond(&self, o: &Self) -> Result<Self> {
        if self.m() != o.m() {
            return Err(Error::Dimension(format!("m={} against m={}", self.m(), o.m())));
        }
        let t = &(&self.t + &o.t) + &self.b(o).scale_rat(&rat(1, 2));
        FHGroupElement::new(add(&self.pi, &o.pi), add(&self.theta, &o.theta), t)
    }
}

pub(crate) fn add(a: &[GrassmannElement], b: &[GrassmannElement]) -> Vec<GrassmannElement> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn scaled(a: &[GrassmannElement], r: &Rational) -> Vec<GrassmannElement> {
    a.iter().map(|x| x.scale_rat(r)).collect()
}

/// `ζ_j ↦ ζ_j + shift_j`.
pub fn shift(f: &GrassmannElement, zetas: &[usize], by: &[GrassmannElement]) -> Result<GrassmannElement> {
    let map: BTreeMap<usize, GrassmannElement> = zetas.iter().copied().zip(by.iter().cloned()).collect();
    f.substitute_shift(&map)
}

/// `π₁(Π,Θ,t) f(ζ) = e^{i(t+Θζ+½ΘΠ)} f(ζ+Π)`.
pub fn pi1_apply(g: &FHGroupElement, f: &GrassmannElement, zetas: &[usize]) -> Result<PhasedElement> {
    if g.m() != zetas.len() {
        return Err(Error::Dimension(format!("group element for m={}, function of {} variables", g.m(), zetas.len())));
    }
    let zeta: Vec<GrassmannElement> = zetas.iter().map(|&j| GrassmannElement::generator(f.registry(), j)).collect();
    let exponent = &(&g.t.soul() + &dot(&g.theta, &zeta)) + &dot(&g.theta, &g.pi).scale_rat(&rat(1, 2));
    let factor = exponent.scale(&imag_unit()).exp_nil()?;
    Ok(PhasedElement::phase(g.t.body().re, factor.try_mul(&shift(f, zetas, &g.pi)?)?))
}

/// π₁ on a phase-carrying function; phases add.
pub fn pi1_apply_phased(g: &FHGroupElement, f: &PhasedElement, zetas: &[usize]) -> Result<PhasedElement> {
    let mut out = PhasedElement::zero(f.registry());
    for (phi, part) in f.parts() {
        let moved = pi1_apply(g, part, zetas)?;
        out = out.try_add(&PhasedElement::phase(phi.clone(), GrassmannElement::one(f.registry())).try_mul(&moved)?)?;
    }
    Ok(out)
}

/// `Σ_n A^n f / n!` for a nilpotent operator `A`.
pub fn operator_exp(f: &GrassmannElement, op: impl Fn(&GrassmannElement) -> GrassmannElement) -> Result<GrassmannElement> {
    let limit = f.registry().len() + 2;
    let mut out = f.clone();
    let mut term = f.clone();
    for n in 1..=limit {
        term = op(&term).scale_rat(&rat(1, n as i64));
        if term.is_zero() {
            return Ok(out);
        }
        out = &out + &term;
    }
    Err(Error::NotNilpotent(format!("operator series did not terminate within {limit} terms")))
}

/// `iΘX`: multiplication by `i Σ Θ_j ζ_j`.
pub fn theta_x(theta: &[GrassmannElement], zetas: &[usize], f: &GrassmannElement) -> GrassmannElement {
    let zeta: Vec<GrassmannElement> = zetas.iter().map(|&j| GrassmannElement::generator(f.registry(), j)).collect();
    &dot(theta, &zeta).scale(&imag_unit()) * f
}

/// `iΠD` with `D_j = −i∂_j`, that is `Σ Π_j ∂_j`.
pub fn pi_d(pi: &[GrassmannElement], zetas: &[usize], f: &GrassmannElement) -> GrassmannElement {
    pi.iter().zip(zetas).fold(GrassmannElement::zero(f.registry()), |acc, (p, &j)| &acc + &(p * &f.left_derivative(j)))
}

/// `e^{i(ΘX+ΠD)} f` as an operator series.
pub fn weyl_operator(
    pi: &[GrassmannElement],
    theta: &[GrassmannElement],
    zetas: &[usize],
    f: &GrassmannElement,
) -> Result<GrassmannElement> {
    operator_exp(f, |h| &theta_x(theta, zetas, h) + &pi_d(pi, zetas, h))
}

/// `c · e^{iΘX} e^{iΠD} f` with `c = e^{κ ΘΠ}`, every factor its own series.
pub fn weyl_factorized(
    pi: &[GrassmannElement],
    theta: &[GrassmannElement],
    zetas: &[usize],
    f: &GrassmannElement,
    kappa: &Scalar,
) -> Result<GrassmannElement> {
    let shifted = operator_exp(f, |h| pi_d(pi, zetas, h))?;
    let multiplied = operator_exp(&shifted, |h| theta_x(theta, zetas, h))?;
    let c = dot(theta, pi).scale(kappa).exp_nil()?;
    Ok(&c * &multiplied)
}

/// The Fourier–Wigner transform
/// `V(f,g)(Π,Θ) = ∫dζ f*(ζ−½Π) e^{iΘζ} g(ζ+½Π)`.
pub fn fourier_wigner(
    f: &GrassmannElement,
    g: &GrassmannElement,
    zetas: &[usize],
    pi: &[usize],
    theta: &[usize],
) -> Result<GrassmannElement> {
    let reg = f.registry().clone();
    if !f.same_registry(g) {
        return Err(Error::RegistryMismatch);
    }
    if pi.len() != zetas.len() || theta.len() != zetas.len() {
        return Err(Error::Dimension("Π and Θ must have one generator per variable".into()));
    }
    let reserved: Vec<usize> = pi.iter().chain(theta).copied().collect();
    for &r in &reserved {
        if zetas.contains(&r) || f.uses_any(&[r]) || g.uses_any(&[r]) {
            return Err(Error::GeneratorCollision(reg.label(r).to_string()));
        }
    }
    let pis: Vec<GrassmannElement> = pi.iter().map(|&j| GrassmannElement::generator(&reg, j)).collect();
    let thetas: Vec<GrassmannElement> = theta.iter().map(|&j| GrassmannElement::generator(&reg, j)).collect();
    let zeta: Vec<GrassmannElement> = zetas.iter().map(|&j| GrassmannElement::generator(&reg, j)).collect();
    let left = shift(&f.star(), zetas, &scaled(&pis, &rat(-1, 2)))?;
    let right = shift(g, zetas, &scaled(&pis, &rat(1, 2)))?;
    let phase = dot(&thetas, &zeta).scale(&imag_unit()).exp_nil()?;
    Ok((&(&left * &phase) * &right).berezin(zetas))
}

/// `V(f,g)` evaluated at `Π = Θ = 0`.
pub fn at_origin(v: &GrassmannElement, pi: &[usize], theta: &[usize]) -> Result<GrassmannElement> {
    let zero = GrassmannElement::zero(v.registry());
    let map: BTreeMap<usize, GrassmannElement> = pi.iter().chain(theta).map(|&j| (j, zero.clone())).collect();
    v.substitute(&map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::{GeneratorRegistry, Role};
    use crate::scalar::{cplx, int};
    use std::sync::Arc;

    fn reg1() -> Arc<GeneratorRegistry> {
        GeneratorRegistry::builder()
            .block("zeta", "ζ", 1, Role::Zeta)
            .block("pi", "Π", 1, Role::Parameter)
            .block("theta", "Θ", 1, Role::Parameter)
            .build()
            .unwrap()
    }

    #[test]
    fn pi1_examples() {
        let reg = reg1();
        let (z, p, t) =
            (GrassmannElement::generator(&reg, 0), GrassmannElement::generator(&reg, 1), GrassmannElement::generator(&reg, 2));
        let zero = GrassmannElement::zero(&reg);
        let central = FHGroupElement::new(vec![zero.clone()], vec![zero.clone()], GrassmannElement::rational(&reg, rat(1, 3)))
            .unwrap();
        assert_eq!(pi1_apply(&central, &z, &[0]).unwrap(), PhasedElement::phase(rat(1, 3), z.clone()));

        let g = FHGroupElement::new(vec![p.clone()], vec![zero.clone()], zero.clone()).unwrap();
        assert_eq!(pi1_apply(&g, &z, &[0]).unwrap(), PhasedElement::from(&z + &p));

        // m=1: e^{iΘζ + (i/2)ΘΠ}·1 = 1 + iΘζ + (i/2)ΘΠ, since Θ² = 0
        let g = FHGroupElement::new(vec![p.clone()], vec![t.clone()], zero).unwrap();
        let one = GrassmannElement::one(&reg);
        let expect = &(&one + &(&t * &z).scale(&imag_unit())) + &(&t * &p).scale(&cplx(int(0), rat(1, 2)));
        assert_eq!(pi1_apply(&g, &one, &[0]).unwrap(), PhasedElement::from(expect));
    }

    #[test]
    fn pi1_rejects_bad_parity() {
        let reg = reg1();
        let even = GrassmannElement::one(&reg);
        let zero = GrassmannElement::zero(&reg);
        assert!(FHGroupElement::new(vec![even], vec![zero.clone()], zero).is_err());
    }

    #[test]
    fn fw_examples() {
        let reg = reg1();
        let one = GrassmannElement::one(&reg);
        let z = GrassmannElement::generator(&reg, 0);
        let (p, t) = (GrassmannElement::generator(&reg, 1), GrassmannElement::generator(&reg, 2));
        // ∫dζ (1 + iΘζ) = ∂_ζ(iΘζ) = −iΘ
        assert_eq!(fourier_wigner(&one, &one, &[0], &[1], &[2]).unwrap(), t.scale(&-imag_unit()));
        // ∫dζ (1 + iΘζ)(ζ + ½Π) = 1 + (i/2)ΠΘ
        let v = fourier_wigner(&one, &z, &[0], &[1], &[2]).unwrap();
        assert_eq!(v, &one + &(&p * &t).scale(&cplx(int(0), rat(1, 2))));
        assert_eq!(at_origin(&v, &[1], &[2]).unwrap(), one.clone());
        assert_eq!(
            fourier_wigner(&p, &one, &[0], &[1], &[2]),
            Err(Error::GeneratorCollision("Π1".into()))
        );
    }
}
