//! Bargmann transform, the Fock-space pairing and the β action.
//!
//! Everything works with `A = G/2`, the bilinear matrix of the Gaussian
//! exponent: `½ζGζ` (pairwise sum) equals `½ζᵀAζ` (full sum).

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grassmann::{GeneratorRegistry, GrassmannElement, PhasedElement};
use crate::linalg::RatMatrix;
use crate::scalar::{cplx, i_times, imag_unit, rat, two_pow, Rational, Scalar};
use crate::superfunctions::{bilinear, dot, generators, pf_inv_sqrt};

/// How the `z` variables are realized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZMode {
    /// `z_k = A_kj Π_j + iΘ_k` over parameter generators.
    Composite,
    /// Independent `z_k`, `z*_k` generators.
    Abstract,
}

/// Gaussian weight in the Fock pairing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FockWeight {
    /// `e^{−½‖z‖²}` as printed.
    Literal,
    /// `e^{−i‖z‖²}`, the weight that makes the transform isometric.
    Isometric,
}

/// Form of the β action on Fock functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaForm {
    /// The two exponential factors only.
    Printed,
    /// The two factors times the translation `F(z+w)`.
    Translated,
}

#[derive(Debug, Clone)]
pub struct BargmannContext {
    reg: Arc<GeneratorRegistry>,
    zetas: Vec<usize>,
    g: RatMatrix,
    a: RatMatrix,
    a_inv: RatMatrix,
    mode: ZMode,
    z: Vec<GrassmannElement>,
    zstar: Vec<GrassmannElement>,
    z_gens: Vec<usize>,
    zstar_gens: Vec<usize>,
    weight: FockWeight,
    calibration: Option<Scalar>,
}

impl BargmannContext {
    fn base(zetas: &[usize], g: &RatMatrix) -> Result<(RatMatrix, RatMatrix)> {
        if g.rows() != zetas.len() {
            return Err(Error::Dimension(format!("{}×{} matrix for {} variables", g.rows(), g.cols(), zetas.len())));
        }
        pf_inv_sqrt(g)?;
        let a = g.scale_rat(&rat(1, 2));
        let a_inv = a.inverse().map_err(|_| Error::Singular)?;
        Ok((a, a_inv))
    }

    /// `z_k = A_kj Π_j + iΘ_k`, `z*_k` its super-star.
    pub fn composite(
        reg: &Arc<GeneratorRegistry>,
        zetas: &[usize],
        pi: &[usize],
        theta: &[usize],
        g: &RatMatrix,
    ) -> Result<Self> {
        let (a, a_inv) = Self::base(zetas, g)?;
        let z = composite_z(reg, &a, pi, theta);
        let zstar = z.iter().map(GrassmannElement::star).collect();
        Ok(BargmannContext {
            reg: reg.clone(),
            zetas: zetas.to_vec(),
            g: g.clone(),
            a,
            a_inv,
            mode: ZMode::Composite,
            z,
            zstar,
            z_gens: Vec::new(),
            zstar_gens: Vec::new(),
            weight: FockWeight::Literal,
            calibration: None,
        })
    }

    pub fn abstract_mode(
        reg: &Arc<GeneratorRegistry>,
        zetas: &[usize],
        z_gens: &[usize],
        zstar_gens: &[usize],
        g: &RatMatrix,
    ) -> Result<Self> {
        let (a, a_inv) = Self::base(zetas, g)?;
        if z_gens.len() != zetas.len() || zstar_gens.len() != zetas.len() {
            return Err(Error::Dimension("one z and one z* generator per variable".into()));
        }
        Ok(BargmannContext {
            reg: reg.clone(),
            zetas: zetas.to_vec(),
            g: g.clone(),
            a,
            a_inv,
            mode: ZMode::Abstract,
            z: generators(reg, z_gens),
            zstar: generators(reg, zstar_gens),
            z_gens: z_gens.to_vec(),
            zstar_gens: zstar_gens.to_vec(),
            weight: FockWeight::Literal,
            calibration: None,
        })
    }

    pub fn with_weight(mut self, weight: FockWeight) -> Self {
        self.weight = weight;
        self.calibration = None;
        self
    }

    pub fn mode(&self) -> ZMode {
        self.mode
    }

    pub fn registry(&self) -> &Arc<GeneratorRegistry> {
        &self.reg
    }

    pub fn zetas(&self) -> &[usize] {
        &self.zetas
    }

    pub fn g(&self) -> &RatMatrix {
        &self.g
    }

    pub fn a_inv(&self) -> &RatMatrix {
        &self.a_inv
    }

    pub fn z(&self) -> &[GrassmannElement] {
        &self.z
    }

    pub fn zstar(&self) -> &[GrassmannElement] {
        &self.zstar
    }

    pub fn z_gens(&self) -> &[usize] {
        &self.z_gens
    }

    pub fn calibration(&self) -> Option<&Scalar> {
        self.calibration.as_ref()
    }

    /// `z_I = z_{i1}…z_{ik}` for a 1-based multi-index.
    pub fn z_monomial(&self, indices: &[usize]) -> GrassmannElement {
        indices.iter().fold(GrassmannElement::one(&self.reg), |acc, &i| &acc * &self.z[i - 1])
    }

    /// `e^{½ζᵀAζ − ζ·z − ¼zᵀA⁻¹z}`.
    pub fn kernel(&self) -> Result<GrassmannElement> {
        let zeta = generators(&self.reg, &self.zetas);
        let exponent = &(&bilinear(&zeta, &self.a, &zeta).scale_rat(&rat(1, 2)) - &dot(&zeta, &self.z))
            - &bilinear(&self.z, &self.a_inv, &self.z).scale_rat(&rat(1, 4));
        exponent.exp_nil()
    }

    fn prefactor(&self) -> Result<Rational> {
        if self.zetas.len() % 2 == 1 {
            return Err(Error::OddSize(self.zetas.len()));
        }
        Ok(two_pow(-(self.zetas.len() as i64) / 2))
    }

    /// `(Bf)(z) = 2^{−m/2} ∫dζ e^{…} f(ζ)`.
    pub fn transform(&self, f: &GrassmannElement) -> Result<GrassmannElement> {
        let k = self.kernel()?;
        Ok(k.try_mul(f)?.berezin(&self.zetas).scale_rat(&self.prefactor()?))
    }

    pub fn transform_phased(&self, f: &PhasedElement) -> Result<PhasedElement> {
        f.try_map(|g| self.transform(g))
    }

    /// `‖z‖² = ½ z*ᵀA⁻¹z`.
    pub fn norm_sq(&self) -> GrassmannElement {
        bilinear(&self.zstar, &self.a_inv, &self.z).scale_rat(&rat(1, 2))
    }

    pub fn weight_element(&self) -> Result<GrassmannElement> {
        let c = match self.weight {
            FockWeight::Literal => cplx(rat(-1, 2), Rational::zero()),
            FockWeight::Isometric => -imag_unit(),
        };
        self.norm_sq().scale(&c).exp_nil()
    }

    /// Conjugation of Fock functions. In abstract mode it swaps `z_k ↔ z*_k`,
    /// conjugates coefficients and reverses products.
    pub fn fock_star(&self, f: &GrassmannElement) -> Result<GrassmannElement> {
        if self.mode == ZMode::Composite {
            return Ok(f.star());
        }
        let mut swap: BTreeMap<usize, usize> = BTreeMap::new();
        for (&a, &b) in self.z_gens.iter().zip(&self.zstar_gens) {
            swap.insert(a, b);
            swap.insert(b, a);
        }
        let mut out = GrassmannElement::zero(&self.reg);
        for (&mask, c) in f.terms() {
            let mut idx: Vec<usize> = (0..self.reg.len()).filter(|i| mask >> i & 1 == 1).collect();
            if let Some(&i) = idx.iter().find(|i| !swap.contains_key(i)) {
                return Err(Error::Parse(format!("Fock function uses non-Fock generator {}", self.reg.label(i))));
            }
            idx.reverse();
            let img: Vec<usize> = idx.iter().map(|i| swap[i]).collect();
            out = &out + &GrassmannElement::product_of(&self.reg, &img).scale(&c.conj());
        }
        Ok(out)
    }

    /// `−(i/2)^m ∫ dz dz* W(z) F*(z) G(z)` before calibration.
    fn raw_inner(&self, f: &GrassmannElement, g: &GrassmannElement) -> Result<GrassmannElement> {
        if self.mode != ZMode::Abstract {
            return Err(Error::WrongMode("the Fock pairing needs independent z, z* generators".into()));
        }
        let m = self.zetas.len();
        let measure = -crate::scalar::pow(&i_times(rat(1, 2)), m as i32);
        let vars: Vec<usize> = self.z_gens.iter().chain(&self.zstar_gens).copied().collect();
        let integrand = self.weight_element()?.try_mul(&self.fock_star(f)?)?.try_mul(g)?;
        Ok(integrand.berezin(&vars).scale(&measure))
    }

    /// Fixes the overall constant so that `<1,1>_F = 1`.
    pub fn calibrate(mut self) -> Result<Self> {
        let one = GrassmannElement::one(&self.reg);
        let raw = self.raw_inner(&one, &one)?;
        if !raw.is_scalar() || raw.body().is_zero() {
            return Err(Error::Uncalibrated(format!("<1,1> = {raw} is not a nonzero number")));
        }
        self.calibration = Some(Scalar::one() / raw.body());
        Ok(self)
    }

    pub fn fock_inner(&self, f: &GrassmannElement, g: &GrassmannElement) -> Result<GrassmannElement> {
        let c = self.calibration.as_ref().ok_or_else(|| Error::Uncalibrated("call calibrate() first".into()))?;
        Ok(self.raw_inner(f, g)?.scale(c))
    }

    /// `(β(w,t)F)(z) = U(t) e^{−(i/2)‖w‖²} e^{−(i/2) zᵀA⁻¹w*} F(z [+ w])`.
    pub fn beta_apply(
        &self,
        w: &[GrassmannElement],
        t: Rational,
        f: &GrassmannElement,
        form: BetaForm,
    ) -> Result<PhasedElement> {
        if self.mode != ZMode::Abstract {
            return Err(Error::WrongMode("β acts on functions of independent z generators".into()));
        }
        for x in w {
            if let Some(&j) = self.z_gens.iter().chain(&self.zstar_gens).find(|&&j| x.uses_any(&[j])) {
                return Err(Error::GeneratorCollision(self.reg.label(j).to_string()));
            }
        }
        let wstar: Vec<GrassmannElement> = w.iter().map(GrassmannElement::star).collect();
        let norm = bilinear(&wstar, &self.a_inv, w).scale_rat(&rat(1, 2));
        let minus_half_i = i_times(rat(-1, 2));
        let f1 = norm.scale(&minus_half_i).exp_nil()?;
        let f2 = bilinear(&self.z, &self.a_inv, &wstar).scale(&minus_half_i).exp_nil()?;
        let moved = match form {
            BetaForm::Printed => f.clone(),
            BetaForm::Translated => {
                let map: BTreeMap<usize, GrassmannElement> = self.z_gens.iter().copied().zip(w.iter().cloned()).collect();
                f.substitute_shift(&map)?
            }
        };
        Ok(PhasedElement::phase(t, f1.try_mul(&f2)?.try_mul(&moved)?))
    }

    /// Abstract `z, z*` generators replaced by composite expressions.
    pub fn to_composite(&self, f: &GrassmannElement, composite: &BargmannContext) -> Result<GrassmannElement> {
        if self.mode != ZMode::Abstract || composite.mode != ZMode::Composite {
            return Err(Error::WrongMode("conversion runs from abstract to composite".into()));
        }
        let mut map = BTreeMap::new();
        for (k, &j) in self.z_gens.iter().enumerate() {
            map.insert(j, composite.z[k].clone());
        }
        for (k, &j) in self.zstar_gens.iter().enumerate() {
            map.insert(j, composite.zstar[k].clone());
        }
        f.substitute(&map)
    }
}

/// `z_k = Σ_j A_kj Π_j + iΘ_k`.
pub fn composite_z(reg: &Arc<GeneratorRegistry>, a: &RatMatrix, pi: &[usize], theta: &[usize]) -> Vec<GrassmannElement> {
    let pis = generators(reg, pi);
    (0..theta.len())
        .map(|k| {
            let lin = pis.iter().enumerate().fold(GrassmannElement::zero(reg), |acc, (j, p)| &acc + &p.scale_rat(a.get(k, j)));
            &lin + &GrassmannElement::generator(reg, theta[k]).scale(&imag_unit())
        })
        .collect()
}

/// `w = Aρ + iσ`.
pub fn beta_parameter(reg: &Arc<GeneratorRegistry>, g: &RatMatrix, rho: &[usize], sigma: &[usize]) -> Vec<GrassmannElement> {
    composite_z(reg, &g.scale_rat(&rat(1, 2)), rho, sigma)
}

/// `Im x = (x − x̄)/(2i)` with coefficient-wise conjugation.
pub fn imaginary_part(x: &GrassmannElement) -> GrassmannElement {
    (x - &x.conj()).scale(&i_times(rat(-1, 2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::Role;

    fn abstract_ctx() -> BargmannContext {
        let reg = GeneratorRegistry::builder()
            .block("zeta", "ζ", 2, Role::Zeta)
            .block("z", "z", 2, Role::FockZ)
            .block("zstar", "z*", 2, Role::FockZStar)
            .build()
            .unwrap();
        BargmannContext::abstract_mode(&reg, &[0, 1], &[2, 3], &[4, 5], &RatMatrix::canonical_symplectic(2)).unwrap()
    }

    #[test]
    fn transform_of_zero_and_gaussian() {
        let ctx = abstract_ctx();
        let reg = ctx.registry().clone();
        assert!(ctx.transform(&GrassmannElement::zero(&reg)).unwrap().is_zero());
        let w = crate::superfunctions::gaussian(&reg, &[0, 1], ctx.g()).unwrap();
        assert_eq!(ctx.transform(&w).unwrap(), GrassmannElement::rational(&reg, rat(1, 2)));
    }

    #[test]
    fn fock_star_is_antimultiplicative() {
        let ctx = abstract_ctx();
        let reg = ctx.registry().clone();
        let z1 = GrassmannElement::generator(&reg, 2);
        let z2 = GrassmannElement::generator(&reg, 3);
        let lhs = ctx.fock_star(&(&z1 * &z2)).unwrap();
        let rhs = &ctx.fock_star(&z2).unwrap() * &ctx.fock_star(&z1).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(ctx.fock_star(&z1.scale(&imag_unit())).unwrap(), GrassmannElement::generator(&reg, 4).scale(&-imag_unit()));
    }

    #[test]
    fn calibration_anchor() {
        let ctx = abstract_ctx().calibrate().unwrap();
        let one = GrassmannElement::one(ctx.registry());
        assert_eq!(ctx.fock_inner(&one, &one).unwrap(), one);
        assert!(matches!(abstract_ctx().fock_inner(&one, &one), Err(Error::Uncalibrated(_))));
    }
}
