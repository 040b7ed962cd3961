//! Executable checks for the Grassmann core: ring laws, grading, star, J,
//! Berezin integration, shifts and nilpotent exponentials.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::One;

use super::{GeneratorRegistry, GrassmannElement, Parity};
use crate::scalar::{imag_unit, Scalar};
use crate::verify::compare::{compare_cases, Case};
use crate::verify::random::{self, CaseRng};
use crate::verify::report::CheckRecord;

fn monomials(reg: &Arc<GeneratorRegistry>, n: usize) -> Vec<GrassmannElement> {
    (0u32..1 << n).map(|mask| GrassmannElement::monomial(reg, mask, Scalar::one())).collect()
}

fn label(mask: u32) -> String {
    format!("m{mask:#x}")
}

/// Sign of `ζ_A ζ_B` by sorting the concatenated index list with adjacent
/// swaps; zero when an index repeats.
pub fn bubble_sign(a: u32, b: u32) -> i32 {
    if a & b != 0 {
        return 0;
    }
    let mut idx: Vec<u32> = (0..32).filter(|i| a >> i & 1 == 1).chain((0..32).filter(|i| b >> i & 1 == 1)).collect();
    let mut swaps = 0;
    for i in 0..idx.len() {
        for j in 0..idx.len() - 1 - i {
            if idx[j] > idx[j + 1] {
                idx.swap(j, j + 1);
                swaps += 1;
            }
        }
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

fn sign_of(p: Parity, q: Parity) -> Scalar {
    let s: i64 = if p == Parity::Odd && q == Parity::Odd { -1 } else { 1 };
    Scalar::from(crate::scalar::int(s))
}

/// Monomial products against the sorting oracle, exhaustive on `N = n`.
pub fn product_oracle(n: usize) -> CheckRecord {
    let reg = GeneratorRegistry::zetas(n).expect("small registry");
    let mono = monomials(&reg, n);
    let mut cases = Vec::new();
    for (a, x) in mono.iter().enumerate() {
        for (b, y) in mono.iter().enumerate() {
            let s = bubble_sign(a as u32, b as u32);
            let want = GrassmannElement::monomial(&reg, (a | b) as u32, Scalar::from(crate::scalar::int(s as i64)));
            cases.push(Case::new(format!("{}·{}", label(a as u32), label(b as u32)), x * y, want));
        }
    }
    compare_cases("core.product_oracle", "ζ_Aζ_B = sign(sort(A,B))·ζ_{A∪B}", &format!("all monomial pairs, N={n}"), &cases)
}

/// Associativity: exhaustive monomial triples at `N = n`, then random triples.
pub fn associativity(rng: &mut CaseRng, n: usize, count: usize) -> CheckRecord {
    let reg = GeneratorRegistry::zetas(n).expect("small registry");
    let gens: Vec<usize> = (0..n).collect();
    let mono = monomials(&reg, n);
    let mut cases = Vec::new();
    for (a, x) in mono.iter().enumerate() {
        for (b, y) in mono.iter().enumerate() {
            let xy = x * y;
            for (c, z) in mono.iter().enumerate() {
                cases.push(Case::new(format!("{a},{b},{c}"), &xy * z, x * &(y * z)));
            }
        }
    }
    let exhaustive = cases.len();
    for k in 0..count {
        let (x, y, z) = (random::element(rng, &reg, &gens, 5), random::element(rng, &reg, &gens, 5), random::element(rng, &reg, &gens, 5));
        cases.push(Case::new(format!("random #{k}"), &(&x * &y) * &z, &x * &(&y * &z)));
    }
    compare_cases(
        "core.associativity",
        "(ab)c = a(bc)",
        &format!("{exhaustive} monomial triples at N={n} and {count} random triples"),
        &cases,
    )
}

/// `ab = (−1)^{|a||b|}ba` on monomial pairs at `N = n` and random homogeneous pairs.
pub fn graded_commutativity(rng: &mut CaseRng, n: usize, count: usize) -> CheckRecord {
    let reg = GeneratorRegistry::zetas(n).expect("small registry");
    let gens: Vec<usize> = (0..n).collect();
    let mono = monomials(&reg, n);
    let mut cases = Vec::new();
    for (a, x) in mono.iter().enumerate() {
        for (b, y) in mono.iter().enumerate() {
            let s = sign_of(Parity::of_mask(a as u32), Parity::of_mask(b as u32));
            cases.push(Case::new(format!("{a},{b}"), x * y, (y * x).scale(&s)));
        }
    }
    for k in 0..count {
        let (p, q) = (if k % 2 == 0 { Parity::Even } else { Parity::Odd }, if k % 4 < 2 { Parity::Even } else { Parity::Odd });
        let x = random::homogeneous(rng, &reg, &gens, p, 4);
        let y = random::homogeneous(rng, &reg, &gens, q, 4);
        cases.push(Case::new(format!("random #{k}"), &x * &y, (&y * &x).scale(&sign_of(p, q))));
    }
    compare_cases(
        "core.graded_commutativity",
        "ab = (−1)^{|a||b|} ba",
        &format!("all monomial pairs at N={n} and {count} random homogeneous pairs"),
        &cases,
    )
}

/// `star` is a conjugate-linear involution and reverses products.
pub fn star_laws(rng: &mut CaseRng, n: usize, count: usize) -> CheckRecord {
    let reg = GeneratorRegistry::zetas(n).expect("small registry");
    let gens: Vec<usize> = (0..n).collect();
    let mono = monomials(&reg, n);
    let mut cases = Vec::new();
    for (a, x) in mono.iter().enumerate() {
        cases.push(Case::new(format!("**{a}"), x.star().star(), x.clone()));
        for (b, y) in mono.iter().enumerate() {
            cases.push(Case::new(format!("({a}·{b})*"), (x * y).star(), &y.star() * &x.star()));
        }
    }
    for k in 0..count {
        let (x, y) = (random::element(rng, &reg, &gens, 5), random::element(rng, &reg, &gens, 5));
        let c = random::small_scalar(rng);
        cases.push(Case::new(format!("random #{k} involution"), x.star().star(), x.clone()));
        cases.push(Case::new(format!("random #{k} antimultiplicative"), (&x * &y).star(), &y.star() * &x.star()));
        cases.push(Case::new(format!("random #{k} conjugate-linear"), x.scale(&c).star(), x.star().scale(&c.conj())));
    }
    compare_cases(
        "core.star",
        "a** = a, (ca)* = c̄a*, (ab)* = b*a*",
        &format!("all monomials and pairs at N={n} and {count} random cases"),
        &cases,
    )
}

/// `J(ab) = J(a)J(b)` and `J² = id`.
pub fn parity_automorphism(rng: &mut CaseRng, n: usize, count: usize) -> CheckRecord {
    let reg = GeneratorRegistry::zetas(n).expect("small registry");
    let gens: Vec<usize> = (0..n).collect();
    let mono = monomials(&reg, n);
    let mut cases = Vec::new();
    for (a, x) in mono.iter().enumerate() {
        cases.push(Case::new(format!("JJ{a}"), x.parity_map().parity_map(), x.clone()));
        for (b, y) in mono.iter().enumerate() {
            cases.push(Case::new(format!("J({a}·{b})"), (x * y).parity_map(), &x.parity_map() * &y.parity_map()));
        }
    }
    for k in 0..count {
        let (x, y) = (random::element(rng, &reg, &gens, 5), random::element(rng, &reg, &gens, 5));
        cases.push(Case::new(format!("random #{k}"), (&x * &y).parity_map(), &x.parity_map() * &y.parity_map()));
        cases.push(Case::new(format!("random #{k} J²"), x.parity_map().parity_map(), x.clone()));
    }
    compare_cases(
        "core.parity_automorphism",
        "J(ab) = J(a)J(b), J² = id",
        &format!("all monomials and pairs at N={n} and {count} random cases"),
        &cases,
    )
}

/// `∫dζ ∂_j f = 0` for random `f` and every integrated `j`.
pub fn berezin_kills_derivatives(rng: &mut CaseRng, count: usize) -> CheckRecord {
    let reg = GeneratorRegistry::zetas(5).expect("small registry");
    let all: Vec<usize> = (0..5).collect();
    let vars = [0, 1, 2];
    let mut cases = Vec::new();
    for k in 0..count {
        let f = random::element(rng, &reg, &all, 6);
        for &j in &vars {
            cases.push(Case::new(format!("#{k} ∂{j}"), f.left_derivative(j).berezin(&vars), GrassmannElement::zero(&reg)));
        }
    }
    let top = GrassmannElement::product_of(&reg, &vars);
    cases.push(Case::new("∫ζ1ζ2ζ3", top.berezin(&vars), GrassmannElement::one(&reg)));
    compare_cases(
        "core.berezin_derivative",
        "∫dζ ∂_j f = 0, ∫dζ₃dζ₂dζ₁ ζ₁ζ₂ζ₃ = 1",
        &format!("{count} random f over 5 generators, integrating ζ1..ζ3"),
        &cases,
    )
}

/// `shift(fg) = shift(f)shift(g)` with odd shifts in fresh generators.
pub fn shift_homomorphism(rng: &mut CaseRng, count: usize) -> CheckRecord {
    let reg = GeneratorRegistry::zetas(6).expect("small registry");
    let (vars, params) = ([0, 1, 2], [3, 4, 5]);
    let mut cases = Vec::new();
    for k in 0..count {
        let shifts: BTreeMap<usize, GrassmannElement> = vars.iter().map(|&v| (v, random::odd_element(rng, &reg, &params))).collect();
        let f = random::element(rng, &reg, &vars, 4);
        let g = random::element(rng, &reg, &vars, 4);
        let lhs = (&f * &g).substitute_shift(&shifts).expect("odd shifts");
        let rhs = &f.substitute_shift(&shifts).expect("odd shifts") * &g.substitute_shift(&shifts).expect("odd shifts");
        cases.push(Case::new(format!("#{k}"), lhs, rhs));
    }
    compare_cases("core.shift_homomorphism", "shift(fg) = shift(f)·shift(g)", &format!("{count} random pairs"), &cases)
}

/// `exp(a)exp(b) = exp(a+b)` for even nilpotents, which commute.
pub fn exp_law(rng: &mut CaseRng, count: usize) -> CheckRecord {
    let reg = GeneratorRegistry::zetas(6).expect("small registry");
    let gens: Vec<usize> = (0..6).collect();
    let mut cases = Vec::new();
    for k in 0..count {
        let a = random::even_soul(rng, &reg, &gens);
        let b = random::even_soul(rng, &reg, &gens).scale(&imag_unit());
        let lhs = &a.exp_nil().expect("nilpotent") * &b.exp_nil().expect("nilpotent");
        cases.push(Case::new(format!("#{k}"), lhs, (&a + &b).exp_nil().expect("nilpotent")));
    }
    compare_cases("core.exp_law", "exp(a)exp(b) = exp(a+b), a, b even nilpotent", &format!("{count} random pairs"), &cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bubble_sign_examples() {
        assert_eq!(bubble_sign(0b01, 0b10), 1);
        assert_eq!(bubble_sign(0b10, 0b01), -1);
        assert_eq!(bubble_sign(0b11, 0b01), 0);
        // ζ2ζ3 · ζ1 = ζ1ζ2ζ3 after two swaps
        assert_eq!(bubble_sign(0b110, 0b001), 1);
    }

    #[test]
    fn small_core_records_pass() {
        let mut r = random::rng(5);
        for rec in [
            product_oracle(3),
            associativity(&mut r, 3, 20),
            graded_commutativity(&mut r, 3, 20),
            star_laws(&mut r, 3, 20),
            parity_automorphism(&mut r, 3, 20),
            berezin_kills_derivatives(&mut r, 10),
            shift_homomorphism(&mut r, 10),
            exp_law(&mut r, 10),
        ] {
            assert!(rec.passed(), "{}: {:?}", rec.name, rec.discrepancy_factor);
        }
    }
}
