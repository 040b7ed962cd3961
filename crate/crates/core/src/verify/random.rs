//! Seeded generators for randomized exact cases.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::grassmann::{GeneratorRegistry, GrassmannElement, Parity};
use crate::linalg::RatMatrix;
use crate::scalar::{cplx, rat, Rational, Scalar};

pub type CaseRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CaseRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Numerator in `-5..=5`, denominator in `1..=4`.
pub fn small_rational(rng: &mut CaseRng) -> Rational {
    rat(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

pub fn nonzero_rational(rng: &mut CaseRng) -> Rational {
    loop {
        let r = small_rational(rng);
        if r != rat(0, 1) {
            return r;
        }
    }
}

pub fn small_scalar(rng: &mut CaseRng) -> Scalar {
    let im = if rng.gen_bool(0.5) { small_rational(rng) } else { rat(0, 1) };
    cplx(small_rational(rng), im)
}

pub fn rational_vec(rng: &mut CaseRng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| small_rational(rng)).collect()
}

fn random_mask(rng: &mut CaseRng, gens: &[usize], parity: Option<Parity>) -> u32 {
    loop {
        let mut mask = 0u32;
        for &g in gens {
            if rng.gen_bool(0.4) {
                mask |= 1 << g;
            }
        }
        if parity.map_or(true, |p| Parity::of_mask(mask) == p) {
            return mask;
        }
    }
}

/// Up to `max_terms` random monomials in `gens`.
pub fn element(rng: &mut CaseRng, reg: &Arc<GeneratorRegistry>, gens: &[usize], max_terms: usize) -> GrassmannElement {
    let k = rng.gen_range(1..=max_terms.max(1));
    (0..k).fold(GrassmannElement::zero(reg), |acc, _| {
        let mask = random_mask(rng, gens, None);
        &acc + &GrassmannElement::monomial(reg, mask, small_scalar(rng))
    })
}

pub fn homogeneous(
    rng: &mut CaseRng,
    reg: &Arc<GeneratorRegistry>,
    gens: &[usize],
    parity: Parity,
    max_terms: usize,
) -> GrassmannElement {
    if parity == Parity::Odd && gens.is_empty() {
        return GrassmannElement::zero(reg);
    }
    let k = rng.gen_range(1..=max_terms.max(1));
    (0..k).fold(GrassmannElement::zero(reg), |acc, _| {
        let mask = random_mask(rng, gens, Some(parity));
        &acc + &GrassmannElement::monomial(reg, mask, small_scalar(rng))
    })
}

/// Odd element: a random linear combination of `gens` plus at most one cubic term.
pub fn odd_element(rng: &mut CaseRng, reg: &Arc<GeneratorRegistry>, gens: &[usize]) -> GrassmannElement {
    let mut out = GrassmannElement::zero(reg);
    for &g in gens {
        if rng.gen_bool(0.7) {
            out = &out + &GrassmannElement::generator(reg, g).scale_rat(&small_rational(rng));
        }
    }
    if gens.len() >= 3 && rng.gen_bool(0.3) {
        let mut pick: Vec<usize> = gens.to_vec();
        pick.shuffle(rng);
        out = &out + &GrassmannElement::product_of(reg, &pick[..3]).scale_rat(&small_rational(rng));
    }
    out
}

/// Even element with zero body built from pairs of `gens`.
pub fn even_soul(rng: &mut CaseRng, reg: &Arc<GeneratorRegistry>, gens: &[usize]) -> GrassmannElement {
    let mut out = GrassmannElement::zero(reg);
    if gens.len() < 2 {
        return out;
    }
    for _ in 0..rng.gen_range(0..=2) {
        let mut pick: Vec<usize> = gens.to_vec();
        pick.shuffle(rng);
        out = &out + &GrassmannElement::product_of(reg, &pick[..2]).scale_rat(&small_rational(rng));
    }
    out
}

pub fn antisymmetric(rng: &mut CaseRng, m: usize) -> RatMatrix {
    let mut g = RatMatrix::zeros(m, m, &rat(0, 1));
    for i in 0..m {
        for j in i + 1..m {
            let x = small_rational(rng);
            g.set(i, j, x.clone());
            g.set(j, i, -x);
        }
    }
    g
}

pub fn symmetric(rng: &mut CaseRng, m: usize) -> RatMatrix {
    let mut g = RatMatrix::zeros(m, m, &rat(0, 1));
    for i in 0..m {
        for j in i..m {
            let x = small_rational(rng);
            g.set(i, j, x.clone());
            g.set(j, i, x);
        }
    }
    g
}
