//! Executable checks for the superfunction module.

use num_traits::Zero;

use crate::error::Result;
use crate::grassmann::{GeneratorRegistry, GrassmannElement};
use crate::linalg::RatMatrix;
use crate::scalar::{format_scalar, imag_unit, int, s, Scalar};
use crate::verify::compare::{compare_cases, Case};
use crate::verify::random::{self, CaseRng};
use crate::verify::report::CheckRecord;

use super::{basis_label, gaussian, monomial_basis, pfaffian, q_inner, HermiteFamily};

fn zeta_range(m: usize) -> Vec<usize> {
    (0..m).collect()
}

/// The three worked values of `<f,g>` at m=2.
pub fn inner_examples() -> CheckRecord {
    let reg = GeneratorRegistry::zetas(2).expect("small registry");
    let z = zeta_range(2);
    let top = GrassmannElement::product_of(&reg, &[0, 1]);
    let one = GrassmannElement::one(&reg);
    let zero = GrassmannElement::zero(&reg);
    let cases = vec![
        Case::new("<ζ1ζ2,ζ1ζ2>", q_inner(&top, &top, &z).expect("same registry"), zero.clone()),
        Case::new("<1,ζ1ζ2>", q_inner(&one, &top, &z).expect("same registry"), one.clone()),
        Case::new("<0,ζ1ζ2>", q_inner(&zero, &top, &z).expect("same registry"), zero),
    ];
    compare_cases("superfunctions.inner.examples", "<f,g> = ∫dζ f*(ζ)g(ζ)", "m=2 worked values", &cases)
}

/// `∂⁺ = i∂` and `ζ̂⁺ = −iζ` on every monomial pair, plus random functions.
pub fn adjoints(rng: &mut CaseRng, m: usize, random_pairs: usize) -> Vec<CheckRecord> {
    let reg = GeneratorRegistry::zetas(m).expect("small registry");
    let z = zeta_range(m);
    let basis = monomial_basis(&reg, &z);
    let mut pairs: Vec<(String, GrassmannElement, GrassmannElement)> = Vec::new();
    for f in &basis {
        for g in &basis {
            pairs.push((format!("{},{}", basis_label(&reg, f), basis_label(&reg, g)), f.clone(), g.clone()));
        }
    }
    for k in 0..random_pairs {
        let f = random::element(rng, &reg, &z, 4);
        let g = random::element(rng, &reg, &z, 4);
        pairs.push((format!("random #{k}"), f, g));
    }
    let i = imag_unit();
    let mut d_cases = Vec::new();
    let mut x_cases = Vec::new();
    for (label, f, g) in &pairs {
        for (jj, &j) in z.iter().enumerate() {
            let lhs = q_inner(&f.left_derivative(j), g, &z).expect("same registry");
            let rhs = q_inner(f, &g.left_derivative(j).scale(&i), &z).expect("same registry");
            d_cases.push(Case::new(format!("j={} {label}", jj + 1), lhs, rhs));
            let zj = GrassmannElement::generator(&reg, j);
            let lhs = q_inner(&(&zj * f), g, &z).expect("same registry");
            let rhs = q_inner(f, &(&zj * g).scale(&-i.clone()), &z).expect("same registry");
            x_cases.push(Case::new(format!("j={} {label}", jj + 1), lhs, rhs));
        }
    }
    let inputs = format!("all monomial pairs and {random_pairs} random pairs, m={m}");
    vec![
        compare_cases(&format!("superfunctions.adjoint_derivative.m{m}"), "<∂_j f, g> = <f, i∂_j g>", &inputs, &d_cases),
        compare_cases(&format!("superfunctions.adjoint_multiplication.m{m}"), "<ζ_j f, g> = <f, −iζ_j g>", &inputs, &x_cases),
    ]
}

/// Conjugate-linear in the first slot, linear in the second.
pub fn sesquilinear(rng: &mut CaseRng, m: usize, count: usize) -> CheckRecord {
    let reg = GeneratorRegistry::zetas(m).expect("small registry");
    let z = zeta_range(m);
    let mut cases = Vec::new();
    for k in 0..count {
        let f = random::element(rng, &reg, &z, 4);
        let g = random::element(rng, &reg, &z, 4);
        let c = random::small_scalar(rng);
        let base = q_inner(&f, &g, &z).expect("same registry");
        let first = q_inner(&f.scale(&c), &g, &z).expect("same registry");
        cases.push(Case::new(format!("#{k} first"), first, base.scale(&c.conj())));
        let second = q_inner(&f, &g.scale(&c), &z).expect("same registry");
        cases.push(Case::new(format!("#{k} second"), second, base.scale(&c)));
    }
    compare_cases(
        &format!("superfunctions.inner_sesquilinear.m{m}"),
        "<cf,g> = c̄<f,g>, <f,cg> = c<f,g>",
        &format!("{count} random pairs and scalars, m={m}"),
        &cases,
    )
}

/// `Pf(G)² = det(G)` on random antisymmetric matrices.
pub fn pfaffian_squared(rng: &mut CaseRng, sizes: &[usize], count: usize) -> CheckRecord {
    let mut cases = Vec::new();
    for k in 0..count {
        let m = sizes[k % sizes.len()];
        let g = random::antisymmetric(rng, m);
        let pf = pfaffian(&g).expect("even antisymmetric");
        cases.push(Case::new(format!("#{k} m={m}"), &pf * &pf, g.det().expect("square")));
    }
    compare_cases(
        "superfunctions.pfaffian_squared",
        "Pf(G)² = det(G)",
        &format!("{count} random antisymmetric matrices, m ∈ {sizes:?}"),
        &cases,
    )
}

/// `<ω₀,ω₀> = 1` for the canonical form and for 4·canonical.
pub fn gaussian_normalization(m: usize) -> CheckRecord {
    let name = format!("superfunctions.gaussian_normalization.m{m}");
    let identity = "<ω₀,ω₀> = 1, ω₀ = (Pf G)^{−½} e^{½ζGζ}";
    let inputs = format!("canonical G and 4·canonical G, m={m}");
    let run = || -> Result<CheckRecord> {
        let reg = GeneratorRegistry::zetas(m)?;
        let z = zeta_range(m);
        let mut cases = Vec::new();
        for (label, scale) in [("canonical", 1), ("4·canonical", 4)] {
            let g = RatMatrix::canonical_symplectic(m).scale_rat(&int(scale));
            let w = gaussian(&reg, &z, &g)?;
            cases.push(Case::new(label, q_inner(&w, &w, &z)?, GrassmannElement::one(&reg)));
        }
        Ok(compare_cases(&name, identity, &inputs, &cases))
    };
    run().unwrap_or_else(|e| CheckRecord::error(&name, identity, &inputs, e.to_string()))
}

/// `(ω₀ − body)^{⌈m/2⌉+1} = 0`.
pub fn gaussian_nilpotent(m: usize) -> CheckRecord {
    let reg = GeneratorRegistry::zetas(m).expect("small registry");
    let z = zeta_range(m);
    let w = gaussian(&reg, &z, &RatMatrix::canonical_symplectic(m)).expect("Pf = 1");
    let soul = w.soul();
    let k = m.div_ceil(2) + 1;
    let cases = vec![Case::new(format!("power {k}"), soul.pow(k), GrassmannElement::zero(&reg))];
    compare_cases(
        &format!("superfunctions.gaussian_nilpotent.m{m}"),
        "(ω₀ − body ω₀)^{⌈m/2⌉+1} = 0",
        &format!("canonical G, m={m}"),
        &cases,
    )
}

/// A Pfaffian that is not a rational square is refused with its value.
pub fn gaussian_gate() -> CheckRecord {
    let reg = GeneratorRegistry::zetas(2).expect("small registry");
    let g = RatMatrix::from_ints(&[&[0, 2], &[-2, 0]]);
    let out = gaussian(&reg, &[0, 1], &g);
    let ok = matches!(&out, Err(crate::Error::NonSquarePfaffian(v)) if *v == int(2));
    CheckRecord::boolean(
        "superfunctions.gaussian_gate",
        "Pf G = 2 is not a rational square: refused",
        "G = [[0,2],[-2,0]]",
        1,
        ok,
        format!("{out:?}"),
        "Err(NonSquarePfaffian(2))".into(),
    )
}

/// Every `h^I` is homogeneous of parity `|I| mod 2`.
pub fn hermite_parity(m: usize) -> CheckRecord {
    let reg = GeneratorRegistry::zetas(m).expect("small registry");
    let fam = HermiteFamily::new(&reg, &zeta_range(m), &RatMatrix::canonical_symplectic(m)).expect("Pf = 1");
    let idx = fam.multi_indices();
    let bad: Vec<String> = idx
        .iter()
        .filter(|i| {
            let h = fam.get(i).expect("valid index");
            h.is_zero() || h.parity() != Some(HermiteFamily::parity_of(i))
        })
        .map(|i| format!("{i:?}"))
        .collect();
    CheckRecord::boolean(
        &format!("superfunctions.hermite_parity.m{m}"),
        "parity(h^{I_k}) = k mod 2",
        &format!("all {} multi-indices, canonical G, m={m}", idx.len()),
        idx.len(),
        bad.is_empty(),
        if bad.is_empty() { "all homogeneous with parity k mod 2".into() } else { format!("violations at {}", bad.join(" ")) },
        "all homogeneous with parity k mod 2".into(),
    )
}

/// Gram matrix `<h^I, h^J>` in multi-index order.
pub fn hermite_gram(fam: &HermiteFamily, zetas: &[usize]) -> Result<Vec<Vec<Scalar>>> {
    let idx = fam.multi_indices();
    let mut out = Vec::new();
    for a in &idx {
        let mut row = Vec::new();
        for b in &idx {
            row.push(q_inner(&fam.get(a)?, &fam.get(b)?, zetas)?.body());
        }
        out.push(row);
    }
    Ok(out)
}

pub fn render_grid(grid: &[Vec<Scalar>]) -> String {
    let rows: Vec<String> =
        grid.iter().map(|r| format!("[{}]", r.iter().map(format_scalar).collect::<Vec<_>>().join(", "))).collect();
    format!("[{}]", rows.join(", "))
}

/// The Hermite Gram matrix at m=2 against its hand-expanded value.
pub fn hermite_gram_check() -> CheckRecord {
    let reg = GeneratorRegistry::zetas(2).expect("small registry");
    let fam = HermiteFamily::new(&reg, &[0, 1], &RatMatrix::canonical_symplectic(2)).expect("Pf = 1");
    let gram = hermite_gram(&fam, &[0, 1]).expect("same registry");
    let (o, z, i) = (s(1, 1), Scalar::zero(), imag_unit());
    let expect = vec![
        vec![o.clone(), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), -i.clone(), z.clone()],
        vec![z.clone(), i, z.clone(), z.clone()],
        vec![z.clone(), z.clone(), z, -o],
    ];
    CheckRecord::boolean(
        "superfunctions.hermite_gram.m2",
        "<h^I, h^J> over I,J ⊆ {1,2}",
        "canonical G, m=2",
        16,
        gram == expect,
        render_grid(&gram),
        render_grid(&expect),
    )
}
