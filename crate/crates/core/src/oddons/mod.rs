//! Oddons: Grassmann coefficients extended by an odd unit.
//!
//! A real oddon is `a + 1̂b` with `1̂² = 1`; a complex oddon is `a + ι̂b` with
//! `ι̂² = −1`. Both units anticommute with odd Grassmann elements, so moving
//! the unit past `a` applies the parity map `J`.

pub mod checks;
pub mod heisenberg;
pub mod matrix;
pub mod transforms;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmann::json::{element_from_json, element_to_json, ElementJson};
use crate::grassmann::{GeneratorRegistry, GrassmannElement, Parity};
use crate::linalg::Ring;
use crate::scalar::{factorial_inv, Rational, Scalar};
use crate::verify::compare::Comparable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OddonKind {
    /// Unit `1̂` with `1̂² = 1`.
    Real,
    /// Unit `ι̂` with `ι̂² = −1`.
    Complex,
}

impl OddonKind {
    pub fn unit_label(self) -> &'static str {
        match self {
            OddonKind::Real => "1̂",
            OddonKind::Complex => "ι̂",
        }
    }
}

#[derive(Clone, PartialEq)]
pub struct Oddon {
    kind: OddonKind,
    a: GrassmannElement,
    b: GrassmannElement,
}

impl fmt::Debug for Oddon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Oddon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u = self.kind.unit_label();
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{u}·({})", self.b),
            (false, false) => write!(f, "{} + {u}·({})", self.a, self.b),
        }
    }
}

impl Oddon {
    pub fn new(kind: OddonKind, a: GrassmannElement, b: GrassmannElement) -> Result<Self> {
        if !a.same_registry(&b) {
            return Err(Error::RegistryMismatch);
        }
        Ok(Oddon { kind, a, b })
    }

    /// `a` with no unit part.
    pub fn plain(kind: OddonKind, a: GrassmannElement) -> Self {
        let b = GrassmannElement::zero(a.registry());
        Oddon { kind, a, b }
    }

    /// `unit·b`.
    pub fn hatted(kind: OddonKind, b: GrassmannElement) -> Self {
        let a = GrassmannElement::zero(b.registry());
        Oddon { kind, a, b }
    }

    pub fn zero(kind: OddonKind, reg: &Arc<GeneratorRegistry>) -> Self {
        Self::plain(kind, GrassmannElement::zero(reg))
    }

    pub fn one(kind: OddonKind, reg: &Arc<GeneratorRegistry>) -> Self {
        Self::plain(kind, GrassmannElement::one(reg))
    }

    /// The odd unit itself, which is also the unit of the ∗-product.
    pub fn unit(kind: OddonKind, reg: &Arc<GeneratorRegistry>) -> Self {
        Self::hatted(kind, GrassmannElement::one(reg))
    }

    pub fn kind(&self) -> OddonKind {
        self.kind
    }

    pub fn a(&self) -> &GrassmannElement {
        &self.a
    }

    pub fn b(&self) -> &GrassmannElement {
        &self.b
    }

    pub fn registry(&self) -> &Arc<GeneratorRegistry> {
        self.a.registry()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.kind != o.kind {
            return Err(Error::KindMismatch);
        }
        if !self.a.same_registry(&o.a) {
            return Err(Error::RegistryMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(Oddon { kind: self.kind, a: &self.a + &o.a, b: &self.b + &o.b })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&o.negate())
    }

    pub fn negate(&self) -> Self {
        Oddon { kind: self.kind, a: -&self.a, b: -&self.b }
    }

    /// `rr′ = aa′ ± J(b)b′ + unit(J(a)b′ + ba′)`, with `+` for `1̂` and `−` for `ι̂`.
    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let jb_b = &self.b.parity_map() * &o.b;
        let a = match self.kind {
            OddonKind::Real => &(&self.a * &o.a) + &jb_b,
            OddonKind::Complex => &(&self.a * &o.a) - &jb_b,
        };
        let b = &(&self.a.parity_map() * &o.b) + &(&self.b * &o.a);
        Ok(Oddon { kind: self.kind, a, b })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Oddon { kind: self.kind, a: self.a.scale(c), b: self.b.scale(c) }
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        Oddon { kind: self.kind, a: self.a.scale_rat(r), b: self.b.scale_rat(r) }
    }

    /// Left multiplication by a Grassmann element.
    pub fn left_mul(&self, g: &GrassmannElement) -> Result<Self> {
        Self::plain(self.kind, g.clone()).try_mul(self)
    }

    /// `(a₀ + unit·b₁)`.
    pub fn even_part(&self) -> Self {
        Oddon { kind: self.kind, a: self.a.even_part(), b: self.b.odd_part() }
    }

    /// `(a₁ + unit·b₀)`.
    pub fn odd_part(&self) -> Self {
        Oddon { kind: self.kind, a: self.a.odd_part(), b: self.b.even_part() }
    }

    /// Parity of a homogeneous oddon, counting the unit as odd.
    pub fn parity(&self) -> Option<Parity> {
        match (self.even_part().is_zero(), self.odd_part().is_zero()) {
            (_, true) => Some(Parity::Even),
            (true, false) => Some(Parity::Odd),
            (false, false) => None,
        }
    }

    /// Inverse of an even oddon whose `a` has nonzero body, by a finite
    /// Neumann series around that body.
    pub fn inverse(&self) -> Result<Self> {
        if self.parity() != Some(Parity::Even) {
            return Err(Error::NonHomogeneous(format!("inverse needs an even oddon, got {self}")));
        }
        let body = self.a.body();
        if num_traits::Zero::is_zero(&body) {
            return Err(Error::NotInvertible);
        }
        let binv = body.inv();
        let reg = self.registry().clone();
        let one = Self::one(self.kind, &reg);
        let n = self.scale(&binv).try_sub(&one)?;
        let mut out = one.clone();
        let mut power = one;
        for _ in 0..=reg.len() + 1 {
            power = power.try_mul(&n)?.negate();
            if power.is_zero() {
                return Ok(out.scale(&binv));
            }
            out = out.try_add(&power)?;
        }
        Err(Error::NotNilpotent(format!("Neumann series of {self} does not terminate")))
    }

    fn star_kind(&self) -> Result<()> {
        match self.kind {
            OddonKind::Real => Ok(()),
            OddonKind::Complex => Err(Error::WrongMode("the ∗-product is defined for real oddons".into())),
        }
    }

    /// `r ∗ r′ = r·1̂·r′`.
    pub fn star(&self, o: &Self) -> Result<Self> {
        self.star_kind()?;
        self.try_mul(&Self::unit(self.kind, self.registry()))?.try_mul(o)
    }

    /// `1̂ + Σ_{n≥1} q^{∗n}/n!`, finite because `q` is ∗-nilpotent.
    pub fn odd_exp(&self) -> Result<Self> {
        self.star_kind()?;
        let reg = self.registry().clone();
        let mut out = Self::unit(self.kind, &reg);
        let mut power = out.clone();
        for n in 1..=reg.len() + 2 {
            power = power.star(self)?;
            if power.is_zero() {
                return Ok(out);
            }
            out = out.try_add(&power.scale_rat(&factorial_inv(n)))?;
        }
        Err(Error::NotNilpotent(format!("{self} is not ∗-nilpotent")))
    }

    /// Left derivative in generator `j`; it passes the odd unit with a sign.
    pub fn left_derivative(&self, j: usize) -> Self {
        Oddon { kind: self.kind, a: self.a.left_derivative(j), b: -&self.b.left_derivative(j) }
    }

    /// Berezin integral over `vars`, applied componentwise with the unit
    /// moved out to the left.
    pub fn berezin(&self, vars: &[usize]) -> Self {
        let b = self.b.berezin(vars);
        let b = if vars.len() % 2 == 1 { -&b } else { b };
        Oddon { kind: self.kind, a: self.a.berezin(vars), b }
    }
}

impl Ring for Oddon {
    fn zero_like(&self) -> Self {
        Oddon::zero(self.kind, self.registry())
    }
    fn one_like(&self) -> Self {
        Oddon::one(self.kind, self.registry())
    }
    fn add(&self, o: &Self) -> Self {
        self.try_add(o).expect("oddon kinds and registries agree")
    }
    fn mul(&self, o: &Self) -> Self {
        self.try_mul(o).expect("oddon kinds and registries agree")
    }
    fn neg(&self) -> Self {
        self.negate()
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn scale_rat(&self, r: &Rational) -> Self {
        Oddon::scale_rat(self, r)
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Comparable for Oddon {
    fn render(&self) -> String {
        self.to_string()
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn scaled(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
    fn minus(&self, o: &Self) -> Self {
        self.try_sub(o).expect("oddon kinds and registries agree")
    }
    fn ratio_candidate(&self, rhs: &Self) -> Option<Scalar> {
        if let Some((m, c)) = rhs.a.terms().iter().next() {
            return Some(self.a.coefficient(*m) / c);
        }
        let (m, c) = rhs.b.terms().iter().next()?;
        Some(self.b.coefficient(*m) / c)
    }
    fn left_factor(&self, rhs: &Self) -> Option<Self> {
        self.try_mul(&rhs.inverse().ok()?).ok()
    }
    fn times(&self, rhs: &Self) -> Option<Self> {
        self.try_mul(rhs).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddonJson {
    pub kind: OddonKind,
    pub a: ElementJson,
    pub b: ElementJson,
}

pub fn oddon_to_json(r: &Oddon) -> OddonJson {
    OddonJson { kind: r.kind, a: element_to_json(&r.a), b: element_to_json(&r.b) }
}

pub fn oddon_from_json(reg: &Arc<GeneratorRegistry>, j: &OddonJson) -> Result<Oddon> {
    Oddon::new(j.kind, element_from_json(reg, &j.a)?, element_from_json(reg, &j.b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn reg2() -> Arc<GeneratorRegistry> {
        GeneratorRegistry::zetas(2).unwrap()
    }

    #[test]
    fn units_square_to_plus_and_minus_one() {
        let reg = reg2();
        let u = Oddon::unit(OddonKind::Real, &reg);
        assert_eq!(u.try_mul(&u).unwrap(), Oddon::one(OddonKind::Real, &reg));
        let v = Oddon::unit(OddonKind::Complex, &reg);
        assert_eq!(v.try_mul(&v).unwrap(), Oddon::one(OddonKind::Complex, &reg).negate());
    }

    #[test]
    fn unit_anticommutes_with_odd_generators() {
        let reg = reg2();
        let u = Oddon::unit(OddonKind::Real, &reg);
        let z = Oddon::plain(OddonKind::Real, GrassmannElement::generator(&reg, 0));
        assert_eq!(u.try_mul(&z).unwrap(), z.try_mul(&u).unwrap().negate());
        assert_eq!(u.try_mul(&z).unwrap(), Oddon::hatted(OddonKind::Real, GrassmannElement::generator(&reg, 0)));
    }

    #[test]
    fn inverse_examples() {
        let reg = reg2();
        let two = Oddon::plain(OddonKind::Real, GrassmannElement::rational(&reg, int(2)));
        assert_eq!(two.inverse().unwrap(), Oddon::plain(OddonKind::Real, GrassmannElement::rational(&reg, rat(1, 2))));
        let r = Oddon::new(OddonKind::Real, GrassmannElement::one(&reg), GrassmannElement::generator(&reg, 0)).unwrap();
        let inv = r.inverse().unwrap();
        assert_eq!(r.try_mul(&inv).unwrap(), Oddon::one(OddonKind::Real, &reg));
        assert!(Oddon::unit(OddonKind::Real, &reg).inverse().is_err());
    }

    #[test]
    fn star_unit_and_exp_of_zero() {
        let reg = reg2();
        let u = Oddon::unit(OddonKind::Real, &reg);
        let one = Oddon::one(OddonKind::Real, &reg);
        assert_eq!(one.star(&one).unwrap(), u);
        let r = Oddon::new(OddonKind::Real, GrassmannElement::generator(&reg, 1), GrassmannElement::generator(&reg, 0)).unwrap();
        assert_eq!(u.star(&r).unwrap(), r);
        assert_eq!(r.star(&u).unwrap(), r);
        assert_eq!(Oddon::zero(OddonKind::Real, &reg).odd_exp().unwrap(), u);
    }

    #[test]
    fn kinds_do_not_mix() {
        let reg = reg2();
        let a = Oddon::one(OddonKind::Real, &reg);
        let b = Oddon::one(OddonKind::Complex, &reg);
        assert_eq!(a.try_mul(&b), Err(Error::KindMismatch));
    }

    #[test]
    fn json_round_trip() {
        let reg = reg2();
        let r = Oddon::new(OddonKind::Complex, GrassmannElement::one(&reg), GrassmannElement::generator(&reg, 1)).unwrap();
        let j = oddon_to_json(&r);
        assert_eq!(oddon_from_json(&reg, &j).unwrap(), r);
        assert!(serde_json::to_string(&j).unwrap().contains("\"kind\":\"complex\""));
    }
}
