//! Superfunctions of `m` odd variables: the Berezin inner product, Pfaffians,
//! the Grassmann Gaussian and the super-Hermite family.

pub mod checks;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grassmann::{GeneratorRegistry, GrassmannElement, Parity, PhasedElement};
use crate::linalg::RatMatrix;
use crate::scalar::{rat, rational_sqrt, Rational};

/// `<f,g> = ∫dζ f*(ζ) g(ζ)` over the listed variables.
pub fn q_inner(f: &GrassmannElement, g: &GrassmannElement, zetas: &[usize]) -> Result<GrassmannElement> {
    Ok(f.star().try_mul(g)?.berezin(zetas))
}

/// Same pairing for phase-carrying functions; conjugation flips every phase.
pub fn q_inner_phased(f: &PhasedElement, g: &PhasedElement, zetas: &[usize]) -> Result<PhasedElement> {
    Ok(f.star().try_mul(g)?.berezin(zetas))
}

/// Monomials `ζ^I` for every subset `I`, ordered by degree and then bitmask.
pub fn monomial_basis(reg: &Arc<GeneratorRegistry>, zetas: &[usize]) -> Vec<GrassmannElement> {
    let mut subsets: Vec<u32> = (0..1u32 << zetas.len()).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    subsets
        .into_iter()
        .map(|s| {
            let idx: Vec<usize> = (0..zetas.len()).filter(|k| s >> k & 1 == 1).map(|k| zetas[k]).collect();
            GrassmannElement::product_of(reg, &idx)
        })
        .collect()
}

pub fn basis_label(reg: &Arc<GeneratorRegistry>, f: &GrassmannElement) -> String {
    match f.terms().keys().next() {
        Some(&0) | None => "1".into(),
        Some(&m) => (0..reg.len()).filter(|i| m >> i & 1 == 1).map(|i| reg.label(i)).collect(),
    }
}

pub fn dot(a: &[GrassmannElement], b: &[GrassmannElement]) -> GrassmannElement {
    let reg = a.first().or(b.first()).expect("nonempty vectors").registry().clone();
    a.iter().zip(b).fold(GrassmannElement::zero(&reg), |acc, (x, y)| &acc + &(x * y))
}

/// `Σ_ij a_i M_ij b_j`.
pub fn bilinear(a: &[GrassmannElement], m: &RatMatrix, b: &[GrassmannElement]) -> GrassmannElement {
    let reg = a[0].registry().clone();
    let mut out = GrassmannElement::zero(&reg);
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let c = m.get(i, j);
            if !c.is_zero() {
                out = &out + &(x * y).scale_rat(c);
            }
        }
    }
    out
}

/// `ζGζ = Σ_{i<j} G_ij ζ_i ζ_j`.
pub fn pairwise_form(v: &[GrassmannElement], g: &RatMatrix) -> GrassmannElement {
    let reg = v[0].registry().clone();
    let mut out = GrassmannElement::zero(&reg);
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            let c = g.get(i, j);
            if !c.is_zero() {
                out = &out + &(&v[i] * &v[j]).scale_rat(c);
            }
        }
    }
    out
}

pub fn generators(reg: &Arc<GeneratorRegistry>, idx: &[usize]) -> Vec<GrassmannElement> {
    idx.iter().map(|&i| GrassmannElement::generator(reg, i)).collect()
}

fn check_antisymmetric(g: &RatMatrix) -> Result<()> {
    if !g.is_square() {
        return Err(Error::Dimension(format!("{}×{} matrix is not square", g.rows(), g.cols())));
    }
    if !g.is_antisymmetric() {
        return Err(Error::NotAntisymmetric);
    }
    Ok(())
}

/// Pfaffian by expansion along the first row.
pub fn pfaffian(g: &RatMatrix) -> Result<Rational> {
    check_antisymmetric(g)?;
    if g.rows() % 2 == 1 {
        return Err(Error::OddSize(g.rows()));
    }
    let idx: Vec<usize> = (0..g.rows()).collect();
    Ok(pf_rows(g, &idx))
}

fn pf_rows(g: &RatMatrix, idx: &[usize]) -> Rational {
    if idx.is_empty() {
        return Rational::one();
    }
    let mut total = Rational::zero();
    for k in 1..idx.len() {
        let a = g.get(idx[0], idx[k]);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().enumerate().filter(|&(p, _)| p + 1 != k).map(|(_, &r)| r).collect();
        let term = a * pf_rows(g, &rest);
        if k % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `(Pf G)^{-1/2}`, defined when `Pf G` is the square of a nonzero rational.
pub fn pf_inv_sqrt(g: &RatMatrix) -> Result<Rational> {
    let pf = pfaffian(g)?;
    match rational_sqrt(&pf) {
        Some(r) if !r.is_zero() => Ok(r.recip()),
        _ => Err(Error::NonSquarePfaffian(pf)),
    }
}

/// `ω₀ = (Pf G)^{-1/2} e^{½ζGζ}`.
pub fn gaussian(reg: &Arc<GeneratorRegistry>, zetas: &[usize], g: &RatMatrix) -> Result<GrassmannElement> {
    if g.rows() != zetas.len() {
        return Err(Error::Dimension(format!("{}×{} matrix for {} variables", g.rows(), g.cols(), zetas.len())));
    }
    let norm = pf_inv_sqrt(g)?;
    let z = generators(reg, zetas);
    Ok(pairwise_form(&z, g).scale_rat(&rat(1, 2)).exp_nil()?.scale_rat(&norm))
}

/// Super-Hermite polynomials `h^I = H_k e^{−½ζGζ} ∂_{i1}(…∂_{ik} e^{ζGζ})`,
/// all `2^m` of them built up front.
#[derive(Debug, Clone)]
pub struct HermiteFamily {
    reg: Arc<GeneratorRegistry>,
    zetas: Vec<usize>,
    g: RatMatrix,
    normalization: BTreeMap<usize, Rational>,
    polys: BTreeMap<u32, GrassmannElement>,
}

impl HermiteFamily {
    pub fn new(reg: &Arc<GeneratorRegistry>, zetas: &[usize], g: &RatMatrix) -> Result<Self> {
        if g.rows() != zetas.len() {
            return Err(Error::Dimension(format!("{}×{} matrix for {} variables", g.rows(), g.cols(), zetas.len())));
        }
        if pfaffian(g)?.is_zero() {
            return Err(Error::Singular);
        }
        let z = generators(reg, zetas);
        let q = pairwise_form(&z, g);
        let up = q.exp_nil()?;
        let down = q.scale_rat(&rat(-1, 2)).exp_nil()?;
        let mut polys = BTreeMap::new();
        for s in 0..1u32 << zetas.len() {
            let mut e = up.clone();
            for k in (0..zetas.len()).rev().filter(|k| s >> k & 1 == 1) {
                e = e.left_derivative(zetas[k]);
            }
            polys.insert(s, &down * &e);
        }
        Ok(HermiteFamily { reg: reg.clone(), zetas: zetas.to_vec(), g: g.clone(), normalization: BTreeMap::new(), polys })
    }

    /// Sets `H_k`; the default is 1.
    pub fn with_normalization(mut self, k: usize, h: Rational) -> Self {
        self.normalization.insert(k, h);
        self
    }

    pub fn normalization(&self, k: usize) -> Rational {
        self.normalization.get(&k).cloned().unwrap_or_else(Rational::one)
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.g
    }

    pub fn registry(&self) -> &Arc<GeneratorRegistry> {
        &self.reg
    }

    /// All strictly increasing 1-based multi-indices, by degree then lexicographically.
    pub fn multi_indices(&self) -> Vec<Vec<usize>> {
        let m = self.zetas.len();
        let mut out: Vec<Vec<usize>> =
            (0..1u32 << m).map(|s| (0..m).filter(|k| s >> k & 1 == 1).map(|k| k + 1).collect()).collect();
        out.sort_by(|a: &Vec<usize>, b| (a.len(), a).cmp(&(b.len(), b)));
        out
    }

    /// `h^I` for a strictly increasing 1-based multi-index.
    pub fn get(&self, indices: &[usize]) -> Result<GrassmannElement> {
        let mut mask = 0u32;
        for (p, &i) in indices.iter().enumerate() {
            if i == 0 || i > self.zetas.len() {
                return Err(Error::UnknownGenerator(i));
            }
            if mask >> (i - 1) & 1 == 1 {
                return Err(Error::RepeatedIndex(i));
            }
            if p > 0 && indices[p - 1] > i {
                return Err(Error::UnorderedIndex(indices.to_vec()));
            }
            mask |= 1 << (i - 1);
        }
        Ok(self.polys[&mask].scale_rat(&self.normalization(indices.len())))
    }

    pub fn parity_of(indices: &[usize]) -> Parity {
        if indices.len() % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, s};

    fn reg2() -> Arc<GeneratorRegistry> {
        GeneratorRegistry::zetas(2).unwrap()
    }

    #[test]
    fn inner_product_examples() {
        let reg = reg2();
        let top = GrassmannElement::product_of(&reg, &[0, 1]);
        let one = GrassmannElement::one(&reg);
        assert!(q_inner(&top, &top, &[0, 1]).unwrap().is_zero());
        assert_eq!(q_inner(&one, &top, &[0, 1]).unwrap(), one);
        assert!(q_inner(&GrassmannElement::zero(&reg), &top, &[0, 1]).unwrap().is_zero());
    }

    #[test]
    fn pfaffian_examples() {
        let a = RatMatrix::from_ints(&[&[0, 7], &[-7, 0]]);
        assert_eq!(pfaffian(&a).unwrap(), int(7));
        assert_eq!(pfaffian(&RatMatrix::canonical_symplectic(6)).unwrap(), int(1));
        assert_eq!(pfaffian(&RatMatrix::from_ints(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]])), Err(Error::OddSize(3)));
        assert_eq!(pfaffian(&RatMatrix::from_ints(&[&[0, 1], &[1, 0]])), Err(Error::NotAntisymmetric));
        // Pf = a12 a34 − a13 a24 + a14 a23
        let g = RatMatrix::from_ints(&[&[0, 1, 2, 3], &[-1, 0, 4, 5], &[-2, -4, 0, 6], &[-3, -5, -6, 0]]);
        assert_eq!(pfaffian(&g).unwrap(), int(6 - 10 + 12));
    }

    #[test]
    fn gaussian_examples() {
        let reg = reg2();
        let g = RatMatrix::canonical_symplectic(2);
        let w = gaussian(&reg, &[0, 1], &g).unwrap();
        let expect = &GrassmannElement::one(&reg) + &GrassmannElement::product_of(&reg, &[0, 1]).scale_rat(&rat(1, 2));
        assert_eq!(w, expect);
        assert_eq!(q_inner(&w, &w, &[0, 1]).unwrap(), GrassmannElement::one(&reg));

        let w4 = gaussian(&reg, &[0, 1], &g.scale_rat(&int(4))).unwrap();
        assert_eq!(w4.body(), s(1, 2));
        assert_eq!(q_inner(&w4, &w4, &[0, 1]).unwrap(), GrassmannElement::one(&reg));

        let bad = gaussian(&reg, &[0, 1], &g.scale_rat(&int(2)));
        assert_eq!(bad, Err(Error::NonSquarePfaffian(int(2))));
    }

    #[test]
    fn hermite_examples() {
        let reg = reg2();
        let fam = HermiteFamily::new(&reg, &[0, 1], &RatMatrix::canonical_symplectic(2)).unwrap();
        // the empty derivative leaves e^{−½ζGζ}e^{ζGζ} = e^{½ζGζ}
        let half = GrassmannElement::product_of(&reg, &[0, 1]).scale_rat(&rat(1, 2));
        assert_eq!(fam.get(&[]).unwrap(), &GrassmannElement::one(&reg) + &half);
        // e^{ζ1ζ2} = 1 + ζ1ζ2, ∂1 gives ζ2, times e^{−½ζ1ζ2} leaves ζ2
        assert_eq!(fam.get(&[1]).unwrap(), GrassmannElement::generator(&reg, 1));
        assert_eq!(fam.get(&[2]).unwrap(), -GrassmannElement::generator(&reg, 0));
        // ∂1∂2(1 + ζ1ζ2) = ∂1(−ζ1) = −1, so h^{12} = −e^{−½ζ1ζ2}
        let top = GrassmannElement::product_of(&reg, &[0, 1]).scale_rat(&rat(1, 2));
        assert_eq!(fam.get(&[1, 2]).unwrap(), &top - &GrassmannElement::one(&reg));
        assert_eq!(fam.get(&[1, 1]), Err(Error::RepeatedIndex(1)));
        assert_eq!(fam.get(&[2, 1]), Err(Error::UnorderedIndex(vec![2, 1])));
        assert_eq!(fam.get(&[3]), Err(Error::UnknownGenerator(3)));
        let scaled = fam.clone().with_normalization(1, int(3));
        assert_eq!(scaled.get(&[1]).unwrap(), GrassmannElement::generator(&reg, 1).scale_rat(&int(3)));
        assert_eq!(fam.multi_indices(), vec![vec![], vec![1], vec![2], vec![1, 2]]);
    }
}
