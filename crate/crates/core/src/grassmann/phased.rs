//! Finite sums `Σ U(φ)·g_φ` with `U(φ) = e^{iφ}` kept symbolic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::Zero;

use super::element::GrassmannElement;
use super::registry::GeneratorRegistry;
use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct PhasedElement {
    reg: Arc<GeneratorRegistry>,
    parts: BTreeMap<Rational, GrassmannElement>,
}

impl fmt::Debug for PhasedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PhasedElement({self})")
    }
}

impl PhasedElement {
    pub fn zero(reg: &Arc<GeneratorRegistry>) -> Self {
        PhasedElement { reg: reg.clone(), parts: BTreeMap::new() }
    }

    pub fn one(reg: &Arc<GeneratorRegistry>) -> Self {
        Self::from(GrassmannElement::one(reg))
    }

    /// `U(phi)·g`.
    pub fn phase(phi: Rational, g: GrassmannElement) -> Self {
        let reg = g.registry().clone();
        let mut parts = BTreeMap::new();
        if !g.is_zero() {
            parts.insert(phi, g);
        }
        PhasedElement { reg, parts }
    }

    pub fn registry(&self) -> &Arc<GeneratorRegistry> {
        &self.reg
    }

    pub fn parts(&self) -> &BTreeMap<Rational, GrassmannElement> {
        &self.parts
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// The weight at phase 0 when nothing else is present.
    pub fn as_unphased(&self) -> Option<GrassmannElement> {
        match self.parts.len() {
            0 => Some(GrassmannElement::zero(&self.reg)),
            1 => self.parts.get(&Rational::zero()).cloned(),
            _ => None,
        }
    }

    fn insert(&mut self, phi: Rational, g: GrassmannElement) {
        let merged = match self.parts.remove(&phi) {
            Some(h) => &h + &g,
            None => g,
        };
        if !merged.is_zero() {
            self.parts.insert(phi, merged);
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if !(Arc::ptr_eq(&self.reg, &other.reg) || *self.reg == *other.reg) {
            return Err(Error::RegistryMismatch);
        }
        let mut out = self.clone();
        for (phi, g) in &other.parts {
            out.insert(phi.clone(), g.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero(&self.reg);
        for (phi, g) in &self.parts {
            for (psi, h) in &other.parts {
                out.insert(phi + psi, g.try_mul(h)?);
            }
        }
        Ok(out)
    }

    /// Applies a linear map to every weight, keeping phases.
    pub fn map(&self, f: impl Fn(&GrassmannElement) -> GrassmannElement) -> Self {
        let mut out = Self::zero(&self.reg);
        for (phi, g) in &self.parts {
            out.insert(phi.clone(), f(g));
        }
        out
    }

    pub fn try_map(&self, f: impl Fn(&GrassmannElement) -> Result<GrassmannElement>) -> Result<Self> {
        let mut out = Self::zero(&self.reg);
        for (phi, g) in &self.parts {
            out.insert(phi.clone(), f(g)?);
        }
        Ok(out)
    }

    pub fn mul_element(&self, g: &GrassmannElement) -> Self {
        self.map(|h| h * g)
    }

    pub fn element_mul(&self, g: &GrassmannElement) -> Self {
        self.map(|h| g * h)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        self.map(|h| h.scale(c))
    }

    /// `U(φ) ↦ U(−φ)` together with the super-conjugation of each weight.
    pub fn star(&self) -> Self {
        let mut out = Self::zero(&self.reg);
        for (phi, g) in &self.parts {
            out.insert(-phi.clone(), g.star());
        }
        out
    }

    pub fn berezin(&self, vars: &[usize]) -> Self {
        self.map(|g| g.berezin(vars))
    }
}

impl From<GrassmannElement> for PhasedElement {
    fn from(g: GrassmannElement) -> Self {
        PhasedElement::phase(Rational::zero(), g)
    }
}

impl fmt::Display for PhasedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        for (n, (phi, g)) in self.parts.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            if phi.is_zero() {
                write!(f, "({g})")?;
            } else {
                write!(f, "U({phi})·({g})")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a PhasedElement> for &'a PhasedElement {
    type Output = PhasedElement;
    fn add(self, rhs: &'a PhasedElement) -> PhasedElement {
        self.try_add(rhs).expect("registry mismatch in phased addition")
    }
}

impl<'a> Sub<&'a PhasedElement> for &'a PhasedElement {
    type Output = PhasedElement;
    fn sub(self, rhs: &'a PhasedElement) -> PhasedElement {
        self.try_add(&-rhs).expect("registry mismatch in phased subtraction")
    }
}

impl<'a> Mul<&'a PhasedElement> for &'a PhasedElement {
    type Output = PhasedElement;
    fn mul(self, rhs: &'a PhasedElement) -> PhasedElement {
        self.try_mul(rhs).expect("registry mismatch in phased product")
    }
}

impl Neg for &PhasedElement {
    type Output = PhasedElement;
    fn neg(self) -> PhasedElement {
        self.map(|g| -g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn phases_add_under_multiplication() {
        let r = GeneratorRegistry::zetas(2).unwrap();
        let one = GrassmannElement::one(&r);
        let a = PhasedElement::phase(rat(1, 2), one.clone());
        let b = PhasedElement::phase(rat(1, 3), GrassmannElement::generator(&r, 0));
        let ab = &a * &b;
        assert_eq!(ab, PhasedElement::phase(rat(5, 6), GrassmannElement::generator(&r, 0)));
        let inv = PhasedElement::phase(rat(-1, 2), one.clone());
        assert_eq!(&a * &inv, PhasedElement::one(&r));
    }

    #[test]
    fn star_inverts_phase() {
        let r = GeneratorRegistry::zetas(1).unwrap();
        let x = PhasedElement::phase(rat(2, 1), GrassmannElement::generator(&r, 0));
        let s = x.star();
        assert_eq!(s.parts().keys().next(), Some(&rat(-2, 1)));
        assert_eq!(s.star(), x);
    }

    #[test]
    fn cancellation_removes_parts() {
        let r = GeneratorRegistry::zetas(1).unwrap();
        let x = PhasedElement::phase(rat(1, 1), GrassmannElement::one(&r));
        assert!((&x - &x).is_zero());
    }
}
