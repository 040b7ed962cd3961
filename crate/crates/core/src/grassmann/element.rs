//! Sparse Grassmann elements over exact complex rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::phased::PhasedElement;
use super::registry::GeneratorRegistry;
use crate::error::{Error, Result};
use crate::scalar::{format_scalar, imag_unit, real, Rational, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_mask(mask: u32) -> Parity {
        if mask.count_ones() % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

/// Sign of `ζ^a ζ^b` relative to `ζ^{a∪b}`: parity of the inversion count.
pub fn merge_sign(a: u32, b: u32) -> bool {
    let mut rest = b;
    let mut inversions = 0u32;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        let above = if j >= 31 { 0 } else { a >> (j + 1) };
        inversions += above.count_ones();
    }
    inversions % 2 == 1
}

fn below(j: usize) -> u32 {
    (1u32 << j) - 1
}

#[derive(Clone)]
pub struct GrassmannElement {
    reg: Arc<GeneratorRegistry>,
    terms: BTreeMap<u32, Scalar>,
}

impl fmt::Debug for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GrassmannElement({self})")
    }
}

impl PartialEq for GrassmannElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_registry(other) && self.terms == other.terms
    }
}

impl Eq for GrassmannElement {}

impl GrassmannElement {
    pub fn zero(reg: &Arc<GeneratorRegistry>) -> Self {
        GrassmannElement { reg: reg.clone(), terms: BTreeMap::new() }
    }

    pub fn one(reg: &Arc<GeneratorRegistry>) -> Self {
        Self::scalar(reg, Scalar::one())
    }

    pub fn scalar(reg: &Arc<GeneratorRegistry>, c: Scalar) -> Self {
        Self::monomial(reg, 0, c)
    }

    pub fn rational(reg: &Arc<GeneratorRegistry>, r: Rational) -> Self {
        Self::scalar(reg, real(r))
    }

    /// The generator with index `i` (0-based).
    pub fn generator(reg: &Arc<GeneratorRegistry>, i: usize) -> Self {
        assert!(i < reg.len(), "generator index {i} out of range");
        Self::monomial(reg, 1 << i, Scalar::one())
    }

    pub fn monomial(reg: &Arc<GeneratorRegistry>, mask: u32, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mask, c);
        }
        GrassmannElement { reg: reg.clone(), terms }
    }

    /// Ordered product of generators, e.g. `[1, 0]` gives `ζ2ζ1 = −ζ1ζ2`.
    pub fn product_of(reg: &Arc<GeneratorRegistry>, indices: &[usize]) -> Self {
        indices
            .iter()
            .fold(Self::one(reg), |acc, &i| &acc * &Self::generator(reg, i))
    }

    pub(crate) fn from_terms(reg: &Arc<GeneratorRegistry>, terms: BTreeMap<u32, Scalar>) -> Self {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        GrassmannElement { reg: reg.clone(), terms }
    }

    pub fn registry(&self) -> &Arc<GeneratorRegistry> {
        &self.reg
    }

    pub fn same_registry(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.reg, &other.reg) || *self.reg == *other.reg
    }

    pub fn terms(&self) -> &BTreeMap<u32, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, mask: u32) -> Scalar {
        self.terms.get(&mask).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn body(&self) -> Scalar {
        self.coefficient(0)
    }

    pub fn soul(&self) -> Self {
        let mut out = self.clone();
        out.terms.remove(&0);
        out
    }

    /// True when the element is a multiple of the unit.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|&m| m == 0)
    }

    pub fn support(&self) -> u32 {
        self.terms.keys().fold(0, |a, &m| a | m)
    }

    /// Parity of a homogeneous element; `None` for mixed elements. Zero is even.
    pub fn parity(&self) -> Option<Parity> {
        let mut seen: Option<Parity> = None;
        for &m in self.terms.keys() {
            let p = Parity::of_mask(m);
            match seen {
                None => seen = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(seen.unwrap_or(Parity::Even))
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Some(Parity::Even)
    }

    pub fn is_odd(&self) -> bool {
        self.is_zero() || self.parity() == Some(Parity::Odd)
    }

    fn filter(&self, keep: impl Fn(u32) -> bool) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| keep(**m)).map(|(m, c)| (*m, c.clone())).collect();
        GrassmannElement { reg: self.reg.clone(), terms }
    }

    pub fn even_part(&self) -> Self {
        self.filter(|m| m.count_ones() % 2 == 0)
    }

    pub fn odd_part(&self) -> Self {
        self.filter(|m| m.count_ones() % 2 == 1)
    }

    /// Terms whose monomial avoids every generator in `mask`.
    pub fn without(&self, mask: u32) -> Self {
        self.filter(|m| m & mask == 0)
    }

    fn map_coeffs(&self, f: impl Fn(u32, &Scalar) -> Scalar) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (*m, f(*m, c))).collect();
        Self::from_terms(&self.reg, terms)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.reg);
        }
        self.map_coeffs(|_, x| x * c)
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        self.scale(&real(r.clone()))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if !self.same_registry(other) {
            return Err(Error::RegistryMismatch);
        }
        let mut terms: BTreeMap<u32, Scalar> = BTreeMap::new();
        for (&a, x) in &self.terms {
            for (&b, y) in &other.terms {
                if a & b != 0 {
                    continue;
                }
                let p = x * y;
                let slot = terms.entry(a | b).or_insert_with(Scalar::zero);
                if merge_sign(a, b) {
                    *slot = &*slot - p;
                } else {
                    *slot = &*slot + p;
                }
            }
        }
        Ok(Self::from_terms(&self.reg, terms))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if !self.same_registry(other) {
            return Err(Error::RegistryMismatch);
        }
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let slot = terms.entry(*m).or_insert_with(Scalar::zero);
            *slot = &*slot + c;
        }
        Ok(Self::from_terms(&self.reg, terms))
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(&self.reg), |acc, _| &acc * self)
    }

    /// Super-conjugation: conjugate coefficients, multiply the odd part by −i.
    pub fn star(&self) -> Self {
        let minus_i = -imag_unit();
        self.map_coeffs(|m, c| {
            let cc = c.conj();
            if m.count_ones() % 2 == 1 {
                cc * &minus_i
            } else {
                cc
            }
        })
    }

    /// Coefficient-wise complex conjugation only.
    pub fn conj(&self) -> Self {
        self.map_coeffs(|_, c| c.conj())
    }

    /// `J(a₀ + a₁) = a₀ − a₁`.
    pub fn parity_map(&self) -> Self {
        self.map_coeffs(|m, c| if m.count_ones() % 2 == 1 { -c.clone() } else { c.clone() })
    }

    /// Left derivative in the generator with index `j`.
    pub fn left_derivative(&self, j: usize) -> Self {
        let bit = 1u32 << j;
        let mut terms = BTreeMap::new();
        for (&m, c) in &self.terms {
            if m & bit == 0 {
                continue;
            }
            let sign = (m & below(j)).count_ones() % 2 == 1;
            terms.insert(m ^ bit, if sign { -c.clone() } else { c.clone() });
        }
        Self::from_terms(&self.reg, terms)
    }

    /// Berezin integral `∫ dζ_{v_k} … dζ_{v_1}`: the derivative in `vars[0]` acts first.
    pub fn berezin(&self, vars: &[usize]) -> Self {
        let need = vars.iter().fold(0u32, |a, &v| a | (1 << v));
        let mut terms: BTreeMap<u32, Scalar> = BTreeMap::new();
        for (&m, c) in &self.terms {
            if m & need != need {
                continue;
            }
            let mut mask = m;
            let mut sign = false;
            for &v in vars {
                sign ^= (mask & below(v)).count_ones() % 2 == 1;
                mask ^= 1 << v;
            }
            let slot = terms.entry(mask).or_insert_with(Scalar::zero);
            if sign {
                *slot = &*slot - c;
            } else {
                *slot = &*slot + c;
            }
        }
        Self::from_terms(&self.reg, terms)
    }

    /// `Σ a^k / k!` for an even element with zero body.
    pub fn exp_nil(&self) -> Result<Self> {
        if !self.is_even() {
            return Err(Error::NotNilpotent(format!("odd or mixed exponent {self}")));
        }
        if !self.body().is_zero() {
            return Err(Error::NotNilpotent(format!("exponent has body {}", format_scalar(&self.body()))));
        }
        let mut out = Self::one(&self.reg);
        let mut power = Self::one(&self.reg);
        let mut k = 1i64;
        loop {
            power = (&power * self).scale_rat(&Rational::new(1.into(), k.into()));
            if power.is_zero() {
                return Ok(out);
            }
            out = &out + &power;
            k += 1;
        }
    }

    /// `U(phase)·exp(a)` for an even nilpotent `a`.
    pub fn exp_nilpotent(&self, phase: Rational) -> Result<PhasedElement> {
        Ok(PhasedElement::phase(phase, self.exp_nil()?))
    }

    /// Algebra homomorphism sending generator `j` to `images[j]`; other
    /// generators are fixed. Every image must be odd.
    pub fn substitute(&self, images: &BTreeMap<usize, GrassmannElement>) -> Result<Self> {
        for (j, v) in images {
            if !v.same_registry(self) {
                return Err(Error::RegistryMismatch);
            }
            if !v.is_odd() {
                return Err(Error::Parity { expected: "odd", found: format!("image of generator {} is {v}", j + 1) });
            }
        }
        let moved = images.keys().fold(0u32, |a, &j| a | (1 << j));
        let mut out = Self::zero(&self.reg);
        for (&m, c) in &self.terms {
            if m & moved == 0 {
                out = &out + &Self::monomial(&self.reg, m, c.clone());
                continue;
            }
            let mut term = Self::scalar(&self.reg, c.clone());
            let mut rest = m;
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let factor = match images.get(&j) {
                    Some(v) => v.clone(),
                    None => Self::generator(&self.reg, j),
                };
                term = &term * &factor;
                if term.is_zero() {
                    break;
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// `ζ_j ↦ ζ_j + shifts[j]`.
    pub fn substitute_shift(&self, shifts: &BTreeMap<usize, GrassmannElement>) -> Result<Self> {
        let mut images = BTreeMap::new();
        for (&j, v) in shifts {
            if !v.same_registry(self) {
                return Err(Error::RegistryMismatch);
            }
            images.insert(j, &Self::generator(&self.reg, j) + v);
        }
        for (j, v) in shifts {
            if !v.is_odd() {
                return Err(Error::Parity { expected: "odd", found: format!("shift of generator {} is {v}", j + 1) });
            }
        }
        self.substitute(&images)
    }

    /// Inverse by a finite Neumann series around the body.
    pub fn inverse(&self) -> Result<Self> {
        let b = self.body();
        if b.is_zero() {
            return Err(Error::NotInvertible);
        }
        let binv = b.inv();
        let n = self.soul().scale(&binv);
        let mut out = Self::one(&self.reg);
        let mut power = Self::one(&self.reg);
        loop {
            power = -(&power * &n);
            if power.is_zero() {
                break;
            }
            out = &out + &power;
        }
        Ok(out.scale(&binv))
    }

    /// The same element viewed over a structurally identical or larger
    /// registry whose first generators coincide with ours.
    pub fn rebase(&self, reg: &Arc<GeneratorRegistry>) -> Result<Self> {
        let n = self.reg.len();
        if reg.len() < n || (0..n).any(|i| reg.generator(i) != self.reg.generator(i)) {
            return Err(Error::RegistryMismatch);
        }
        Ok(GrassmannElement { reg: reg.clone(), terms: self.terms.clone() })
    }

    pub fn uses_any(&self, indices: &[usize]) -> bool {
        let mask = indices.iter().fold(0u32, |a, &i| a | (1 << i));
        self.support() & mask != 0
    }

    fn monomial_label(&self, mask: u32) -> String {
        (0..self.reg.len()).filter(|i| mask >> i & 1 == 1).map(|i| self.reg.label(i)).collect()
    }
}

impl fmt::Display for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<u32> = self.terms.keys().copied().collect();
        keys.sort_by_key(|m| (m.count_ones(), *m));
        for (n, m) in keys.iter().enumerate() {
            let c = &self.terms[m];
            if n > 0 {
                write!(f, " + ")?;
            }
            if *m == 0 {
                write!(f, "{}", format_scalar(c))?;
            } else if c.is_one() {
                write!(f, "{}", self.monomial_label(*m))?;
            } else {
                write!(f, "{}·{}", format_scalar(c), self.monomial_label(*m))?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a GrassmannElement> for &'a GrassmannElement {
            type Output = GrassmannElement;
            fn $method(self, rhs: &'a GrassmannElement) -> GrassmannElement {
                let f: fn(&GrassmannElement, &GrassmannElement) -> GrassmannElement = $body;
                f(self, rhs)
            }
        }
        impl $tr<GrassmannElement> for GrassmannElement {
            type Output = GrassmannElement;
            fn $method(self, rhs: GrassmannElement) -> GrassmannElement {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.try_add(b).expect("registry mismatch in Grassmann addition"));
binop!(Sub, sub, |a, b| a.try_add(&-b).expect("registry mismatch in Grassmann subtraction"));
binop!(Mul, mul, |a, b| a.try_mul(b).expect("registry mismatch in Grassmann product"));

impl Neg for &GrassmannElement {
    type Output = GrassmannElement;
    fn neg(self) -> GrassmannElement {
        self.map_coeffs(|_, c| -c.clone())
    }
}

impl Neg for GrassmannElement {
    type Output = GrassmannElement;
    fn neg(self) -> GrassmannElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::registry::Role;
    use crate::scalar::{cplx, int, rat, s};

    fn reg(n: usize) -> Arc<GeneratorRegistry> {
        GeneratorRegistry::zetas(n).unwrap()
    }

    fn z(r: &Arc<GeneratorRegistry>, i: usize) -> GrassmannElement {
        GrassmannElement::generator(r, i)
    }

    #[test]
    fn products_follow_merge_signs() {
        let r = reg(3);
        assert_eq!(&z(&r, 0) * &z(&r, 1), GrassmannElement::monomial(&r, 0b11, s(1, 1)));
        assert_eq!(&z(&r, 1) * &z(&r, 0), GrassmannElement::monomial(&r, 0b11, s(-1, 1)));
        assert!((&z(&r, 1) * &z(&r, 1)).is_zero());
        let x = GrassmannElement::one(&r) + &z(&r, 0) * &z(&r, 1);
        let want = GrassmannElement::one(&r) + GrassmannElement::monomial(&r, 0b11, s(2, 1));
        assert_eq!(&x * &x, want);
    }

    #[test]
    fn star_examples() {
        let r = reg(2);
        assert_eq!(z(&r, 0).star(), z(&r, 0).scale(&-imag_unit()));
        let z12 = &z(&r, 0) * &z(&r, 1);
        assert_eq!(z12.star(), z12);
        let c = GrassmannElement::scalar(&r, cplx(int(2), int(3)));
        assert_eq!(c.star(), GrassmannElement::scalar(&r, cplx(int(2), int(-3))));
    }

    #[test]
    fn parity_map_examples() {
        let r = reg(3);
        let x = GrassmannElement::one(&r) + z(&r, 0) + GrassmannElement::product_of(&r, &[0, 1, 2]);
        let want = GrassmannElement::one(&r) - z(&r, 0) - GrassmannElement::product_of(&r, &[0, 1, 2]);
        assert_eq!(x.parity_map(), want);
        assert_eq!(z(&r, 0).parity_map(), -z(&r, 0));
    }

    #[test]
    fn berezin_examples() {
        let r = GeneratorRegistry::builder()
            .block("zeta", "ζ", 2, Role::Zeta)
            .block("theta", "Θ", 1, Role::Parameter)
            .build()
            .unwrap();
        let z12 = GrassmannElement::product_of(&r, &[0, 1]);
        assert_eq!(z12.berezin(&[0, 1]), GrassmannElement::one(&r));
        assert!(z(&r, 0).berezin(&[0, 1]).is_zero());
        let t = z(&r, 2);
        assert_eq!((&t * &z12).berezin(&[0, 1]), t);
        // one variable: ∫dζ Θζ = −Θ
        assert_eq!((&t * &z(&r, 0)).berezin(&[0]), -t.clone());
    }

    #[test]
    fn derivative_examples() {
        let r = reg(2);
        let z12 = GrassmannElement::product_of(&r, &[0, 1]);
        assert_eq!(z12.left_derivative(0), z(&r, 1));
        assert_eq!(z12.left_derivative(1), -z(&r, 0));
        assert!(GrassmannElement::one(&r).left_derivative(0).is_zero());
    }

    #[test]
    fn exp_examples() {
        let r = reg(4);
        let a = GrassmannElement::product_of(&r, &[0, 1]);
        assert_eq!(a.exp_nil().unwrap(), GrassmannElement::one(&r) + a.clone());
        let b = GrassmannElement::product_of(&r, &[2, 3]);
        let want = GrassmannElement::one(&r) + a.clone() + b.clone() + GrassmannElement::product_of(&r, &[0, 1, 2, 3]);
        assert_eq!((&a + &b).exp_nil().unwrap(), want);
        let e = GrassmannElement::zero(&r).exp_nilpotent(rat(1, 3)).unwrap();
        assert_eq!(e, PhasedElement::phase(rat(1, 3), GrassmannElement::one(&r)));
        assert!(z(&r, 0).exp_nil().is_err());
        assert!(GrassmannElement::one(&r).exp_nil().is_err());
    }

    #[test]
    fn shift_examples() {
        let r = GeneratorRegistry::builder()
            .block("zeta", "ζ", 2, Role::Zeta)
            .block("pi", "Π", 2, Role::Parameter)
            .build()
            .unwrap();
        let shifts: BTreeMap<usize, GrassmannElement> = [(0, z(&r, 2)), (1, z(&r, 3))].into_iter().collect();
        assert_eq!(z(&r, 0).substitute_shift(&shifts).unwrap(), z(&r, 0) + z(&r, 2));
        let got = GrassmannElement::product_of(&r, &[0, 1]).substitute_shift(&shifts).unwrap();
        let want = GrassmannElement::product_of(&r, &[0, 1])
            + GrassmannElement::product_of(&r, &[0, 3])
            + GrassmannElement::product_of(&r, &[2, 1])
            + GrassmannElement::product_of(&r, &[2, 3]);
        assert_eq!(got, want);
        let one = GrassmannElement::one(&r);
        assert_eq!(one.substitute_shift(&shifts).unwrap(), one);
        let bad: BTreeMap<usize, GrassmannElement> = [(0, GrassmannElement::one(&r))].into_iter().collect();
        assert!(z(&r, 0).substitute_shift(&bad).is_err());
    }

    #[test]
    fn inverse_by_neumann_series() {
        let r = reg(3);
        let x = GrassmannElement::rational(&r, int(2)) + z(&r, 0) + GrassmannElement::product_of(&r, &[1, 2]);
        assert_eq!(&x * &x.inverse().unwrap(), GrassmannElement::one(&r));
        assert_eq!(z(&r, 0).inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn registry_mismatch_is_an_error() {
        let a = z(&reg(2), 0);
        let other = GeneratorRegistry::builder().block("p", "Π", 2, Role::Parameter).build().unwrap();
        assert_eq!(a.try_mul(&z(&other, 0)), Err(Error::RegistryMismatch));
    }

    #[test]
    fn display_uses_labels() {
        let r = reg(2);
        let x = GrassmannElement::one(&r) + GrassmannElement::product_of(&r, &[0, 1]).scale(&s(1, 2));
        assert_eq!(x.to_string(), "1 + 1/2·ζ1ζ2");
    }
}
