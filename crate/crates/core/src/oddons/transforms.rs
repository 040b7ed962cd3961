//! Odd Fourier–Wigner and odd Bargmann transforms, evaluated in oddon arithmetic.

use std::sync::Arc;

use super::{Oddon, OddonKind};
use crate::error::{Error, Result};
use crate::grassmann::{GeneratorRegistry, GrassmannElement};
use crate::linalg::RatMatrix;
use crate::scalar::{i_times, int, rat, Rational};
use crate::superfunctions::{dot, pf_inv_sqrt};
use crate::transforms::bargmann::composite_z;

/// `f` with `ζ_k ↦ ζ_k + shifts_k`, where the shifts are oddons; each
/// monomial is expanded as an ordered oddon product.
pub fn substitute_oddon(f: &GrassmannElement, zetas: &[usize], shifts: &[Oddon], kind: OddonKind) -> Result<Oddon> {
    if zetas.len() != shifts.len() {
        return Err(Error::Dimension(format!("{} variables, {} shifts", zetas.len(), shifts.len())));
    }
    let reg = f.registry().clone();
    let mut out = Oddon::zero(kind, &reg);
    for (&mask, c) in f.terms() {
        let mut term = Oddon::one(kind, &reg);
        for i in (0..reg.len()).filter(|i| mask >> i & 1 == 1) {
            let gen = Oddon::plain(kind, GrassmannElement::generator(&reg, i));
            let factor = match zetas.iter().position(|&z| z == i) {
                Some(k) => gen.try_add(&shifts[k])?,
                None => gen,
            };
            term = term.try_mul(&factor)?;
        }
        out = out.try_add(&term.scale(c))?;
    }
    Ok(out)
}

fn support(xs: impl IntoIterator<Item = GrassmannElement>) -> u32 {
    xs.into_iter().fold(0, |acc, x| acc | x.support())
}

/// `V(f,g)(p,Θ) = ∫dζ f*(ζ−½1̂p) e^{iΘζ} g(ζ+½1̂p)` with every product taken
/// in the oddon algebra.
pub fn odd_fourier_wigner(
    f: &GrassmannElement,
    g: &GrassmannElement,
    zetas: &[usize],
    p: &[Oddon],
    theta: &[GrassmannElement],
) -> Result<Oddon> {
    let reg = f.registry().clone();
    let params = support(p.iter().flat_map(|x| [x.a().clone(), x.b().clone()]).chain(theta.iter().cloned()));
    let clash = (f.support() | g.support()) & params;
    if clash != 0 {
        return Err(Error::GeneratorCollision(reg.label(clash.trailing_zeros() as usize).to_string()));
    }
    let kind = OddonKind::Real;
    let unit = Oddon::unit(kind, &reg);
    let half: Vec<Oddon> = p.iter().map(|x| Ok(unit.try_mul(x)?.scale_rat(&rat(1, 2)))).collect::<Result<_>>()?;
    let minus: Vec<Oddon> = half.iter().map(Oddon::negate).collect();
    let left = substitute_oddon(&f.star(), zetas, &minus, kind)?;
    let right = substitute_oddon(g, zetas, &half, kind)?;
    let zeta: Vec<GrassmannElement> = zetas.iter().map(|&j| GrassmannElement::generator(&reg, j)).collect();
    let phase = Oddon::plain(kind, dot(theta, &zeta).scale(&i_times(int(1))).exp_nil()?);
    Ok(left.try_mul(&phase)?.try_mul(&right)?.berezin(zetas))
}

/// The odd Bargmann image: `2^{log2_prefactor}·integral`. The prefactor is
/// `2^{−m/4}`, kept as an exponent because it is irrational at m = 2.
#[derive(Debug, Clone, PartialEq)]
pub struct OddBargmannValue {
    pub log2_prefactor: Rational,
    pub integral: Oddon,
}

impl std::fmt::Display for OddBargmannValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "2^({})·[{}]", self.log2_prefactor, self.integral)
    }
}

/// Kernel data for the odd Bargmann transform: `Ĝ = 1̂A` with `A = G/2` and
/// `z_k = 1̂(AΠ + iΘ)_k`.
pub struct OddBargmann {
    reg: Arc<GeneratorRegistry>,
    zetas: Vec<usize>,
    kernel: Oddon,
}

impl OddBargmann {
    pub fn new(reg: &Arc<GeneratorRegistry>, zetas: &[usize], pi: &[usize], theta: &[usize], g: &RatMatrix) -> Result<Self> {
        let m = zetas.len();
        if g.rows() != m || pi.len() != m || theta.len() != m {
            return Err(Error::Dimension(format!("G is {}×{}, m = {m}", g.rows(), g.cols())));
        }
        pf_inv_sqrt(g)?;
        let kind = OddonKind::Real;
        let a = g.scale_rat(&rat(1, 2));
        let a_inv = a.inverse()?;
        let unit = Oddon::unit(kind, reg);
        let z: Vec<Oddon> = composite_z(reg, &a, pi, theta).into_iter().map(|x| Oddon::hatted(kind, x)).collect();
        let zeta: Vec<Oddon> = zetas.iter().map(|&j| Oddon::plain(kind, GrassmannElement::generator(reg, j))).collect();
        let mut quad = Oddon::zero(kind, reg);
        let mut dual = Oddon::zero(kind, reg);
        let mut lin = Oddon::zero(kind, reg);
        for i in 0..m {
            lin = lin.try_add(&zeta[i].try_mul(&z[i])?)?;
            for j in 0..m {
                let aij = a.get(i, j);
                if !num_traits::Zero::is_zero(aij) {
                    quad = quad.try_add(&zeta[i].try_mul(&unit)?.try_mul(&zeta[j])?.scale_rat(aij))?;
                }
                let bij = a_inv.get(i, j);
                if !num_traits::Zero::is_zero(bij) {
                    dual = dual.try_add(&z[i].try_mul(&unit)?.try_mul(&z[j])?.scale_rat(bij))?;
                }
            }
        }
        let exponent = quad.scale_rat(&rat(1, 2)).try_sub(&lin)?.try_sub(&dual.scale_rat(&rat(1, 4)))?;
        Ok(OddBargmann { reg: reg.clone(), zetas: zetas.to_vec(), kernel: exponent.odd_exp()? })
    }

    /// `e_*^{½ζĜζ − ζz − ¼zĜ⁻¹z}`.
    pub fn kernel(&self) -> &Oddon {
        &self.kernel
    }

    /// `2^{−m/4} ∫dζ kernel·f(ζ)`.
    pub fn transform(&self, f: &GrassmannElement) -> Result<OddBargmannValue> {
        if !f.same_registry(&GrassmannElement::zero(&self.reg)) {
            return Err(Error::RegistryMismatch);
        }
        let integral = self.kernel.try_mul(&Oddon::plain(OddonKind::Real, f.clone()))?.berezin(&self.zetas);
        Ok(OddBargmannValue { log2_prefactor: Rational::new((-(self.zetas.len() as i64)).into(), 4.into()), integral })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::Role;

    fn reg1() -> Arc<GeneratorRegistry> {
        GeneratorRegistry::builder()
            .generator("ζ", Role::Zeta)
            .generator("Π", Role::Parameter)
            .generator("Θ", Role::Parameter)
            .build()
            .unwrap()
    }

    #[test]
    fn substitution_without_shift_is_identity() {
        let reg = reg1();
        let f = &GrassmannElement::generator(&reg, 0) * &GrassmannElement::generator(&reg, 2);
        let zero = Oddon::zero(OddonKind::Real, &reg);
        assert_eq!(substitute_oddon(&f, &[0], &[zero], OddonKind::Real).unwrap(), Oddon::plain(OddonKind::Real, f));
    }

    #[test]
    fn odd_fw_at_zero_parameters_is_the_inner_product() {
        let reg = reg1();
        let one = GrassmannElement::one(&reg);
        let zero = Oddon::zero(OddonKind::Real, &reg);
        let v = odd_fourier_wigner(&one, &GrassmannElement::generator(&reg, 0), &[0], &[zero], &[GrassmannElement::zero(&reg)]).unwrap();
        assert_eq!(v, Oddon::one(OddonKind::Real, &reg));
    }

    #[test]
    fn odd_bargmann_of_zero() {
        let reg = GeneratorRegistry::builder()
            .block("zeta", "ζ", 2, Role::Zeta)
            .block("pi", "Π", 2, Role::Parameter)
            .block("theta", "Θ", 2, Role::Parameter)
            .build()
            .unwrap();
        let b = OddBargmann::new(&reg, &[0, 1], &[2, 3], &[4, 5], &RatMatrix::canonical_symplectic(2)).unwrap();
        let v = b.transform(&GrassmannElement::zero(&reg)).unwrap();
        assert!(v.integral.is_zero());
        assert_eq!(v.log2_prefactor, Rational::new((-1).into(), 2.into()));
    }
}
