//! Executable checks for π₁, the Fourier–Wigner transform, the Bargmann
//! transform, the Fock pairing and the β action.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::Result;
use crate::grassmann::{GeneratorRegistry, GrassmannElement, PhasedElement, Role};
use crate::linalg::RatMatrix;
use crate::scalar::{cplx, i_times, int, rat, Scalar};
use crate::superfunctions::{
    basis_label, dot, gaussian, generators, monomial_basis, q_inner, q_inner_phased, HermiteFamily,
};
use crate::verify::compare::{compare_cases, Case};
use crate::verify::report::CheckRecord;

use super::bargmann::{beta_parameter, imaginary_part, BargmannContext, BetaForm, FockWeight};
use super::{at_origin, fourier_wigner, pi1_apply, pi1_apply_phased, weyl_factorized, weyl_operator, FHGroupElement};

/// Registry with `m` variables ζ followed by parameter blocks of size `m`.
pub fn registry(m: usize, blocks: &[(&str, &str, Role)]) -> Result<Arc<GeneratorRegistry>> {
    let mut b = GeneratorRegistry::builder().block("zeta", "ζ", m, Role::Zeta);
    for &(name, prefix, role) in blocks {
        b = b.block(name, prefix, m, role);
    }
    b.build()
}

fn or_error(name: &str, identity: &str, inputs: &str, r: Result<CheckRecord>) -> CheckRecord {
    r.unwrap_or_else(|e| CheckRecord::error(name, identity, inputs, e.to_string()))
}

fn or_errors(name: &str, identity: &str, inputs: &str, r: Result<Vec<CheckRecord>>) -> Vec<CheckRecord> {
    r.unwrap_or_else(|e| vec![CheckRecord::error(name, identity, inputs, e.to_string())])
}

fn gens(reg: &Arc<GeneratorRegistry>, block: &str) -> Vec<GrassmannElement> {
    generators(reg, reg.block(block))
}

fn zero_vec(reg: &Arc<GeneratorRegistry>, m: usize) -> Vec<GrassmannElement> {
    vec![GrassmannElement::zero(reg); m]
}

fn group(reg: &Arc<GeneratorRegistry>, pi: &str, theta: &str, t: crate::Rational) -> Result<FHGroupElement> {
    FHGroupElement::new(gens(reg, pi), gens(reg, theta), GrassmannElement::rational(reg, t))
}

fn unphased(p: PhasedElement) -> GrassmannElement {
    p.as_unphased().expect("phase-free value")
}

/// π₁(g)π₁(g′) against π₁(g′⋄g) (passes) and π₁(g⋄g′) (reported).
pub fn pi1_homomorphism(m: usize) -> Vec<CheckRecord> {
    let name = format!("transforms.pi1.homomorphism.m{m}");
    let identity = "π₁(g)π₁(g′) = π₁(g′⋄g) on the monomial basis";
    let inputs = format!("g=(Π,Θ,1/3), g′=(Π′,Θ′,1/5), all basis monomials, m={m}");
    let run = || -> Result<Vec<CheckRecord>> {
        let reg = registry(
            m,
            &[
                ("pi", "Π", Role::Parameter),
                ("theta", "Θ", Role::Parameter),
                ("pi2", "Π′", Role::Parameter),
                ("theta2", "Θ′", Role::Parameter),
            ],
        )?;
        let z = reg.block("zeta").to_vec();
        let g = group(&reg, "pi", "theta", rat(1, 3))?;
        let h = group(&reg, "pi2", "theta2", rat(1, 5))?;
        let mut opposite = Vec::new();
        let mut literal = Vec::new();
        for f in monomial_basis(&reg, &z) {
            let label = basis_label(&reg, &f);
            let lhs = pi1_apply_phased(&g, &pi1_apply(&h, &f, &z)?, &z)?;
            opposite.push(Case::new(label.clone(), lhs.clone(), pi1_apply(&h.diamond(&g)?, &f, &z)?));
            literal.push(Case::new(label, lhs, pi1_apply(&g.diamond(&h)?, &f, &z)?));
        }
        Ok(vec![
            compare_cases(&name, identity, &inputs, &opposite),
            compare_cases(
                &format!("transforms.pi1.homomorphism_literal_order.m{m}"),
                "π₁(g)π₁(g′) = π₁(g⋄g′) on the monomial basis",
                &inputs,
                &literal,
            ),
        ])
    };
    or_errors(&name, identity, &inputs, run())
}

/// `<π₁(g)f, π₁(g)h> = <f,h>` on every basis pair.
pub fn pi1_unitarity(m: usize) -> CheckRecord {
    let name = format!("transforms.pi1.unitarity.m{m}");
    let identity = "<π₁(g)f, π₁(g)h> = <f,h>";
    let inputs = format!("g=(Π,Θ,1/3), all basis pairs, m={m}");
    let run = || -> Result<CheckRecord> {
        let reg = registry(m, &[("pi", "Π", Role::Parameter), ("theta", "Θ", Role::Parameter)])?;
        let z = reg.block("zeta").to_vec();
        let g = group(&reg, "pi", "theta", rat(1, 3))?;
        let basis = monomial_basis(&reg, &z);
        let mut cases = Vec::new();
        for f in &basis {
            let pf = pi1_apply(&g, f, &z)?;
            for h in &basis {
                let lhs = q_inner_phased(&pf, &pi1_apply(&g, h, &z)?, &z)?;
                let rhs = PhasedElement::from(q_inner(f, h, &z)?);
                cases.push(Case::new(format!("{},{}", basis_label(&reg, f), basis_label(&reg, h)), lhs, rhs));
            }
        }
        Ok(compare_cases(&name, identity, &inputs, &cases))
    };
    or_error(&name, identity, &inputs, run())
}

/// The three worked values of π₁ at m=1.
pub fn pi1_examples() -> CheckRecord {
    let name = "transforms.pi1.examples";
    let identity = "π₁(Π,Θ,t)f(ζ) = e^{i(t+Θζ+½ΘΠ)} f(ζ+Π)";
    let inputs = "m=1: central element, pure shift, π₁(Π,Θ,0)1";
    let run = || -> Result<CheckRecord> {
        let reg = registry(1, &[("pi", "Π", Role::Parameter), ("theta", "Θ", Role::Parameter)])?;
        let (z, p, t) = (gens(&reg, "zeta"), gens(&reg, "pi"), gens(&reg, "theta"));
        let zero = zero_vec(&reg, 1);
        let one = GrassmannElement::one(&reg);
        let central = FHGroupElement::new(zero.clone(), zero.clone(), GrassmannElement::rational(&reg, rat(2, 7)))?;
        let shift = FHGroupElement::new(p.clone(), zero.clone(), GrassmannElement::zero(&reg))?;
        let full = FHGroupElement::new(p.clone(), t.clone(), GrassmannElement::zero(&reg))?;
        let expansion = &(&one + &(&t[0] * &z[0]).scale(&i_times(int(1)))) + &(&t[0] * &p[0]).scale(&i_times(rat(1, 2)));
        let cases = vec![
            Case::new("central on ζ", pi1_apply(&central, &z[0], &[0])?, PhasedElement::phase(rat(2, 7), z[0].clone())),
            Case::new("shift on ζ", pi1_apply(&shift, &z[0], &[0])?, PhasedElement::from(&z[0] + &p[0])),
            Case::new("(Π,Θ,0) on 1", pi1_apply(&full, &one, &[0])?, PhasedElement::from(expansion)),
        ];
        Ok(compare_cases(name, identity, inputs, &cases))
    };
    or_error(name, identity, inputs, run())
}

/// `e^{i(ΘX+ΠD)} = e^{(i/2)ΘΠ} e^{iΘX} e^{iΠD}` as operator series, the same
/// with the printed `e^{½ΘΠ}`, and agreement with the closed form of π₁.
pub fn weyl(m: usize) -> Vec<CheckRecord> {
    let name = format!("transforms.weyl_factorization.m{m}");
    let identity = "e^{i(ΘX+ΠD)} = e^{(i/2)ΘΠ} e^{iΘX} e^{iΠD}, D = −i∂";
    let inputs = format!("all basis monomials with (Π,Θ), (Π,0), (0,Θ), m={m}");
    let run = || -> Result<Vec<CheckRecord>> {
        let reg = registry(m, &[("pi", "Π", Role::Parameter), ("theta", "Θ", Role::Parameter)])?;
        let z = reg.block("zeta").to_vec();
        let (p, t, zero) = (gens(&reg, "pi"), gens(&reg, "theta"), zero_vec(&reg, m));
        let half_i = i_times(rat(1, 2));
        let half = cplx(rat(1, 2), int(0));
        let mut main = Vec::new();
        let mut printed = Vec::new();
        let mut closed = Vec::new();
        for f in monomial_basis(&reg, &z) {
            let label = basis_label(&reg, &f);
            for (tag, pi, theta) in [("generic", &p, &t), ("Θ=0", &p, &zero), ("Π=0", &zero, &t)] {
                let lhs = weyl_operator(pi, theta, &z, &f)?;
                main.push(Case::new(format!("{label} {tag}"), lhs, weyl_factorized(pi, theta, &z, &f, &half_i)?));
            }
            let lhs = weyl_operator(&p, &t, &z, &f)?;
            printed.push(Case::new(label.clone(), lhs.clone(), weyl_factorized(&p, &t, &z, &f, &half)?));
            let g = FHGroupElement::new(p.clone(), t.clone(), GrassmannElement::zero(&reg))?;
            closed.push(Case::new(label, lhs, unphased(pi1_apply(&g, &f, &z)?)));
        }
        Ok(vec![
            compare_cases(&name, identity, &inputs, &main),
            compare_cases(
                &format!("transforms.weyl_factorization_printed.m{m}"),
                "e^{i(ΘX+ΠD)} = e^{½ΘΠ} e^{iΘX} e^{iΠD}",
                &format!("all basis monomials, m={m}"),
                &printed,
            ),
            compare_cases(
                &format!("transforms.weyl_closed_form.m{m}"),
                "e^{i(ΘX+ΠD)} f = e^{i(Θζ+½ΘΠ)} f(ζ+Π)",
                &format!("all basis monomials, m={m}"),
                &closed,
            ),
        ])
    };
    or_errors(&name, identity, &inputs, run())
}

fn fw_registry(m: usize) -> Result<Arc<GeneratorRegistry>> {
    registry(m, &[("pi", "Π", Role::Parameter), ("theta", "Θ", Role::Parameter)])
}

/// `V(f,g)(0,0) = <f,g>` on every basis pair.
pub fn fw_origin(m: usize) -> CheckRecord {
    let name = format!("transforms.fw.origin.m{m}");
    let identity = "V(f,g)(0,0) = <f,g>";
    let inputs = format!("all basis pairs, m={m}");
    let run = || -> Result<CheckRecord> {
        let reg = fw_registry(m)?;
        let (z, pi, th) = (reg.block("zeta").to_vec(), reg.block("pi").to_vec(), reg.block("theta").to_vec());
        let basis = monomial_basis(&reg, &z);
        let mut cases = Vec::new();
        for f in &basis {
            for g in &basis {
                let v = fourier_wigner(f, g, &z, &pi, &th)?;
                let label = format!("{},{}", basis_label(&reg, f), basis_label(&reg, g));
                cases.push(Case::new(label, at_origin(&v, &pi, &th)?, q_inner(f, g, &z)?));
            }
        }
        Ok(compare_cases(&name, identity, &inputs, &cases))
    };
    or_error(&name, identity, &inputs, run())
}

/// Hand-expanded values at m=1.
pub fn fw_examples() -> CheckRecord {
    let name = "transforms.fw.examples";
    let identity = "V(f,g)(Π,Θ) = ∫dζ f*(ζ−½Π) e^{iΘζ} g(ζ+½Π)";
    let inputs = "m=1: V(1,1), V(1,ζ)";
    let run = || -> Result<CheckRecord> {
        let reg = fw_registry(1)?;
        let (z, p, t) = (gens(&reg, "zeta"), gens(&reg, "pi"), gens(&reg, "theta"));
        let one = GrassmannElement::one(&reg);
        let cases = vec![
            Case::new("V(1,1)", fourier_wigner(&one, &one, &[0], &[1], &[2])?, t[0].scale(&i_times(int(-1)))),
            Case::new(
                "V(1,ζ)",
                fourier_wigner(&one, &z[0], &[0], &[1], &[2])?,
                &one + &(&p[0] * &t[0]).scale(&i_times(rat(1, 2))),
            ),
        ];
        Ok(compare_cases(name, identity, inputs, &cases))
    };
    or_error(name, identity, inputs, run())
}

/// `<V(f₁,g₁),V(f₂,g₂)> = (−1)^{|f₁||f₂|+(|f₁|+|f₂|)|g₂|} <g₁,g₂><f₁,f₂>*`
/// over all homogeneous monomial quadruples.
pub fn fw_inner(m: usize) -> CheckRecord {
    let name = format!("transforms.fw.inner_identity.m{m}");
    let identity = "<V(f₁,g₁),V(f₂,g₂)> = (−1)^{|f₁||f₂|+(|f₁|+|f₂|)|g₂|} <g₁,g₂><f₁,f₂>*";
    let inputs = format!("all monomial quadruples, Π then Θ integration order, m={m}");
    let run = || -> Result<CheckRecord> {
        let reg = fw_registry(m)?;
        let (z, pi, th) = (reg.block("zeta").to_vec(), reg.block("pi").to_vec(), reg.block("theta").to_vec());
        let vars: Vec<usize> = pi.iter().chain(&th).copied().collect();
        let basis: Vec<(GrassmannElement, usize)> = monomial_basis(&reg, &z)
            .into_iter()
            .map(|f| {
                let d = f.terms().keys().next().map_or(0, |k| k.count_ones() as usize);
                (f, d % 2)
            })
            .collect();
        let mut v = BTreeMap::new();
        for (a, (f, _)) in basis.iter().enumerate() {
            for (b, (g, _)) in basis.iter().enumerate() {
                v.insert((a, b), fourier_wigner(f, g, &z, &pi, &th)?);
            }
        }
        let mut cases = Vec::new();
        for (i1, (f1, p1)) in basis.iter().enumerate() {
            for (j1, (g1, _)) in basis.iter().enumerate() {
                for (i2, (f2, p2)) in basis.iter().enumerate() {
                    for (j2, (g2, q2)) in basis.iter().enumerate() {
                        let lhs = q_inner(&v[&(i1, j1)], &v[&(i2, j2)], &vars)?;
                        let sign = (p1 * p2 + (p1 + p2) * q2) % 2 == 1;
                        let mut rhs = &q_inner(g1, g2, &z)? * &q_inner(f1, f2, &z)?.star();
                        if sign {
                            rhs = -rhs;
                        }
                        let label = [f1, g1, f2, g2].iter().map(|x| basis_label(&reg, x)).collect::<Vec<_>>().join(",");
                        cases.push(Case::new(label, lhs, rhs));
                    }
                }
            }
        }
        Ok(compare_cases(&name, identity, &inputs, &cases))
    };
    or_error(&name, identity, &inputs, run())
}

fn covariance_registry() -> Result<Arc<GeneratorRegistry>> {
    GeneratorRegistry::builder()
        .generator("ζ", Role::Zeta)
        .generator("Π", Role::Parameter)
        .generator("Θ", Role::Parameter)
        .generator("α", Role::Parameter)
        .generator("β", Role::Parameter)
        .generator("γ", Role::Parameter)
        .generator("δ", Role::Parameter)
        .build()
}

/// `V(π₁(γ,δ)f, π₁(α,β)g)(Π,Θ) = e^{−½(−Πβ−Θα+γΠ+δΘ+γβ+δα)} V(f,g)(Π+α−γ, Θ+β−δ)`
/// at m=1 on every basis pair, plus the α=β=γ=δ=0 collapse.
pub fn fw_covariance() -> Vec<CheckRecord> {
    let name = "transforms.fw.covariance";
    let identity = "V(π₁(γ,δ)f, π₁(α,β)g)(Π,Θ) = e^{−½(−Πβ−Θα+γΠ+δΘ+γβ+δα)} V(f,g)(Π+α−γ, Θ+β−δ)";
    let inputs = "m=1, fresh odd α,β,γ,δ, all basis pairs";
    let run = || -> Result<Vec<CheckRecord>> {
        let reg = covariance_registry()?;
        let e: Vec<GrassmannElement> = (0..7).map(|i| GrassmannElement::generator(&reg, i)).collect();
        let (pi, th, al, be, ga, de) = (&e[1], &e[2], &e[3], &e[4], &e[5], &e[6]);
        let zero = GrassmannElement::zero(&reg);
        let exponent = [(pi, be, -1), (th, al, -1), (ga, pi, 1), (de, th, 1), (ga, be, 1), (de, al, 1)]
            .iter()
            .fold(zero.clone(), |acc, (x, y, s)| &acc + &(*x * *y).scale_rat(&int(*s)));
        let printed = exponent.scale_rat(&rat(-1, 2)).exp_nil()?;
        let derived = [(th, al), (pi, be), (th, ga), (pi, de), (be, ga), (al, de)]
            .iter()
            .fold(zero.clone(), |acc, (x, y)| &acc + &(*x * *y))
            .scale(&i_times(rat(-1, 2)))
            .exp_nil()?;
        let mut shift = BTreeMap::new();
        shift.insert(1, &(pi + al) - ga);
        shift.insert(2, &(th + be) - de);
        let zeros = BTreeMap::from([(3, zero.clone()), (4, zero.clone()), (5, zero.clone()), (6, zero.clone())]);
        let g_left = FHGroupElement::new(vec![ga.clone()], vec![de.clone()], zero.clone())?;
        let g_right = FHGroupElement::new(vec![al.clone()], vec![be.clone()], zero.clone())?;
        let basis = monomial_basis(&reg, &[0]);
        let mut cases = Vec::new();
        let mut trivial = Vec::new();
        let mut corrected = Vec::new();
        for f in &basis {
            for g in &basis {
                let label = format!("{},{}", basis_label(&reg, f), basis_label(&reg, g));
                let lhs = fourier_wigner(
                    &unphased(pi1_apply(&g_left, f, &[0])?),
                    &unphased(pi1_apply(&g_right, g, &[0])?),
                    &[0],
                    &[1],
                    &[2],
                )?;
                let v = fourier_wigner(f, g, &[0], &[1], &[2])?;
                let moved = v.substitute(&shift)?;
                corrected.push(Case::new(label.clone(), lhs.clone(), derived.try_mul(&moved)?));
                let rhs = printed.try_mul(&moved)?;
                trivial.push(Case::new(label.clone(), lhs.substitute(&zeros)?, rhs.substitute(&zeros)?));
                cases.push(Case::new(label, lhs, rhs));
            }
        }
        Ok(vec![
            compare_cases(name, identity, inputs, &cases),
            compare_cases(
                "transforms.fw.covariance_derived",
                "V(π₁(γ,δ)f, π₁(α,β)g)(Π,Θ) = e^{−(i/2)(Θα+Πβ+Θγ+Πδ+βγ+αδ)} V(f,g)(Π+α−γ, Θ+β−δ)",
                inputs,
                &corrected,
            ),
            compare_cases(
                "transforms.fw.covariance_trivial",
                "α=β=γ=δ=0: V(f,g) = V(f,g)",
                "m=1, all basis pairs",
                &trivial,
            ),
        ])
    };
    or_errors(name, identity, inputs, run())
}

/// ζ, Π, Θ blocks: enough for the composite transform.
pub fn composite_registry(m: usize) -> Result<Arc<GeneratorRegistry>> {
    registry(m, &[("pi", "Π", Role::Parameter), ("theta", "Θ", Role::Parameter)])
}

/// ζ, z, z* blocks, plus ρ, σ when `with_shift`.
pub fn abstract_registry(m: usize, with_shift: bool) -> Result<Arc<GeneratorRegistry>> {
    let mut blocks = vec![("z", "z", Role::FockZ), ("zstar", "z*", Role::FockZStar)];
    if with_shift {
        blocks.extend([("rho", "ρ", Role::Parameter), ("sigma", "σ", Role::Parameter)]);
    }
    registry(m, &blocks)
}

pub fn abstract_context(reg: &Arc<GeneratorRegistry>, g: &RatMatrix) -> Result<BargmannContext> {
    BargmannContext::abstract_mode(reg, reg.block("zeta"), reg.block("z"), reg.block("zstar"), g)
}

pub fn composite_context(reg: &Arc<GeneratorRegistry>, g: &RatMatrix) -> Result<BargmannContext> {
    BargmannContext::composite(reg, reg.block("zeta"), reg.block("pi"), reg.block("theta"), g)
}

/// `B h^I ∝ z_I` with one global constant, compared with `2^{m/2} H_k z_I`.
pub fn bargmann_hermite(g: &RatMatrix) -> CheckRecord {
    let m = g.rows();
    let name = format!("transforms.bargmann.hermite.m{m}");
    let identity = "(B h^I)(z) = 2^{m/2} H_k z_I";
    let inputs = format!("all multi-indices, H_k = 1, G = {}", g.render());
    let run = || -> Result<CheckRecord> {
        let reg = abstract_registry(m, false)?;
        let ctx = abstract_context(&reg, g)?;
        let fam = HermiteFamily::new(&reg, reg.block("zeta"), g)?;
        let target = crate::scalar::two_pow(m as i64 / 2);
        let mut cases = Vec::new();
        for idx in fam.multi_indices() {
            let lhs = ctx.transform(&fam.get(&idx)?)?;
            let rhs = ctx.z_monomial(&idx).scale_rat(&(&target * fam.normalization(idx.len())));
            cases.push(Case::new(format!("I={idx:?}"), lhs, rhs));
        }
        Ok(compare_cases(&name, identity, &inputs, &cases))
    };
    or_error(&name, identity, &inputs, run())
}

/// B(0) = 0, `B(ω₀)` as a number, and linearity over complex scalars.
pub fn bargmann_basics(g: &RatMatrix) -> CheckRecord {
    let m = g.rows();
    let name = format!("transforms.bargmann.linearity.m{m}");
    let identity = "B(af + bg) = aBf + bBg, B0 = 0";
    let inputs = format!("basis pairs with scalars (2−i, 1/3), G = {}", g.render());
    let run = || -> Result<CheckRecord> {
        let reg = abstract_registry(m, false)?;
        let ctx = abstract_context(&reg, g)?;
        let z = reg.block("zeta");
        let basis = monomial_basis(&reg, z);
        let (a, b) = (cplx(int(2), int(-1)), cplx(rat(1, 3), int(0)));
        let mut cases = vec![Case::new("B0", ctx.transform(&GrassmannElement::zero(&reg))?, GrassmannElement::zero(&reg))];
        for f in &basis {
            for h in &basis {
                let lhs = ctx.transform(&(&f.scale(&a) + &h.scale(&b)))?;
                let rhs = &ctx.transform(f)?.scale(&a) + &ctx.transform(h)?.scale(&b);
                cases.push(Case::new(format!("{},{}", basis_label(&reg, f), basis_label(&reg, h)), lhs, rhs));
            }
        }
        Ok(compare_cases(&name, identity, &inputs, &cases))
    };
    or_error(&name, identity, &inputs, run())
}

/// `V(ω₀,f)(Π,Θ) = e^{−½‖z‖²}(Bf)(z)` in composite mode, and the weight
/// `(Pf G)^{−½} 2^{m/2} e^{−(i/2)‖z‖²}` that actually links the two.
pub fn bargmann_fw(g: &RatMatrix) -> Vec<CheckRecord> {
    let m = g.rows();
    let name = format!("transforms.bargmann.fw_relation.m{m}");
    let identity = "V(ω₀,f)(Π,Θ) = e^{−½‖z‖²}(Bf)(z), ‖z‖² = ½z*A⁻¹z";
    let inputs = format!("all basis monomials, composite z, G = {}", g.render());
    let run = || -> Result<Vec<CheckRecord>> {
        let reg = composite_registry(m)?;
        let ctx = composite_context(&reg, g)?;
        let (z, pi, th) = (reg.block("zeta"), reg.block("pi"), reg.block("theta"));
        let w0 = gaussian(&reg, z, g)?;
        let printed = ctx.norm_sq().scale_rat(&rat(-1, 2)).exp_nil()?;
        let derived = ctx.norm_sq().scale(&i_times(rat(-1, 2))).exp_nil()?
            .scale_rat(&(crate::scalar::two_pow(m as i64 / 2) * crate::superfunctions::pf_inv_sqrt(g)?));
        let mut cases = Vec::new();
        let mut corrected = Vec::new();
        for f in monomial_basis(&reg, z) {
            let lhs = fourier_wigner(&w0, &f, z, pi, th)?;
            let bf = ctx.transform(&f)?;
            corrected.push(Case::new(basis_label(&reg, &f), lhs.clone(), derived.try_mul(&bf)?));
            cases.push(Case::new(basis_label(&reg, &f), lhs, printed.try_mul(&bf)?));
        }
        Ok(vec![
            compare_cases(&name, identity, &inputs, &cases),
            compare_cases(
                &format!("transforms.bargmann.fw_relation_derived.m{m}"),
                "V(ω₀,f)(Π,Θ) = (Pf G)^{−½} 2^{m/2} e^{−(i/2)‖z‖²}(Bf)(z)",
                &inputs,
                &corrected,
            ),
        ])
    };
    or_errors(&name, identity, &inputs, run())
}

fn fock_gram(ctx: &BargmannContext, m: usize) -> Result<Vec<Case<GrassmannElement>>> {
    let reg = ctx.registry().clone();
    let idx: Vec<Vec<usize>> = {
        let mut v: Vec<Vec<usize>> =
            (0..1u32 << m).map(|s| (0..m).filter(|k| s >> k & 1 == 1).map(|k| k + 1).collect()).collect();
        v.sort_by(|a: &Vec<usize>, b| (a.len(), a).cmp(&(b.len(), b)));
        v
    };
    let mut cases = Vec::new();
    for a in &idx {
        for b in &idx {
            let lhs = ctx.fock_inner(&ctx.z_monomial(a), &ctx.z_monomial(b))?;
            let rhs = GrassmannElement::rational(&reg, if a == b { int(1) } else { int(0) });
            cases.push(Case::new(format!("<z{a:?},z{b:?}>"), lhs, rhs));
        }
    }
    Ok(cases)
}

/// After `<1,1>_F = 1`, `<z_I,z_J>_F = δ_IJ` with the printed weight.
pub fn fock_orthonormality(g: &RatMatrix) -> Vec<CheckRecord> {
    let m = g.rows();
    let name = format!("transforms.fock.orthonormality.m{m}");
    let identity = "<z_I, z_J>_F = δ_IJ, weight e^{−½‖z‖²}, calibrated <1,1>_F = 1";
    let inputs = format!("all multi-index pairs, abstract z, G = {}", g.render());
    let run = || -> Result<Vec<CheckRecord>> {
        let reg = abstract_registry(m, false)?;
        let ctx = abstract_context(&reg, g)?.with_weight(FockWeight::Literal).calibrate()?;
        let one = GrassmannElement::one(&reg);
        let anchor = vec![Case::new("<1,1>", ctx.fock_inner(&one, &one)?, one.clone())];
        Ok(vec![
            compare_cases(&name, identity, &inputs, &fock_gram(&ctx, m)?),
            compare_cases(
                &format!("transforms.fock.calibration.m{m}"),
                "<1,1>_F = 1 after calibration",
                &format!("calibration constant {}", crate::scalar::format_scalar(ctx.calibration().expect("calibrated"))),
                &anchor,
            ),
        ])
    };
    or_errors(&name, identity, &inputs, run())
}

/// With the weight `e^{−i‖z‖²}` the transform is an isometry onto its image,
/// up to the square of its kernel prefactor `2^{−m/2}`.
pub fn fock_isometry(g: &RatMatrix) -> CheckRecord {
    let m = g.rows();
    let name = format!("transforms.fock.isometry.m{m}");
    let identity = "<Bf, Bg>_F = 2^{−m}<f,g>, weight e^{−i‖z‖²}, calibrated <1,1>_F = 1";
    let inputs = format!("all basis pairs, abstract z, G = {}", g.render());
    let run = || -> Result<CheckRecord> {
        let reg = abstract_registry(m, false)?;
        let ctx = abstract_context(&reg, g)?.with_weight(FockWeight::Isometric).calibrate()?;
        let z = reg.block("zeta");
        let basis = monomial_basis(&reg, z);
        let images: Vec<GrassmannElement> = basis.iter().map(|f| ctx.transform(f)).collect::<Result<_>>()?;
        let mut cases = Vec::new();
        for (f, bf) in basis.iter().zip(&images) {
            for (h, bh) in basis.iter().zip(&images) {
                let label = format!("{},{}", basis_label(&reg, f), basis_label(&reg, h));
                let rhs = q_inner(f, h, z)?.scale_rat(&crate::scalar::two_pow(-(m as i64)));
                cases.push(Case::new(label, ctx.fock_inner(bf, bh)?, rhs));
            }
        }
        Ok(compare_cases(&name, identity, &inputs, &cases))
    };
    or_error(&name, identity, &inputs, run())
}

/// `β(w,t)∘B = B∘π₁(ρ,σ,t)` with `w = Aρ + iσ`, in both β forms.
pub fn beta_intertwining(g: &RatMatrix) -> Vec<CheckRecord> {
    let m = g.rows();
    let name = format!("transforms.beta.intertwining.m{m}");
    let identity = "β(w,t) B f = B π₁(ρ,σ,t) f, β(w)F = e^{−(i/2)‖w‖²} e^{−(i/2)zA⁻¹w*} F(z+w)";
    let inputs = format!("all basis monomials and ω₀, w = Aρ+iσ, t = 1/3, G = {}", g.render());
    let run = || -> Result<Vec<CheckRecord>> {
        let reg = abstract_registry(m, true)?;
        let ctx = abstract_context(&reg, g)?;
        let z = reg.block("zeta");
        let w = beta_parameter(&reg, g, reg.block("rho"), reg.block("sigma"));
        let t = rat(1, 3);
        let h = FHGroupElement::new(gens(&reg, "rho"), gens(&reg, "sigma"), GrassmannElement::rational(&reg, t.clone()))?;
        let mut inputs_f = monomial_basis(&reg, z);
        inputs_f.push(gaussian(&reg, z, g)?);
        let mut translated = Vec::new();
        let mut printed = Vec::new();
        for f in &inputs_f {
            let label = if f.terms().len() > 1 { "ω₀".to_string() } else { basis_label(&reg, f) };
            let bf = ctx.transform(f)?;
            let rhs = ctx.transform_phased(&pi1_apply(&h, f, z)?)?;
            translated.push(Case::new(label.clone(), ctx.beta_apply(&w, t.clone(), &bf, BetaForm::Translated)?, rhs.clone()));
            printed.push(Case::new(label, ctx.beta_apply(&w, t.clone(), &bf, BetaForm::Printed)?, rhs));
        }
        Ok(vec![
            compare_cases(&name, identity, &inputs, &translated),
            compare_cases(
                &format!("transforms.beta.intertwining_printed.m{m}"),
                "β(w,t) B f = B π₁(ρ,σ,t) f, β(w)F = e^{−(i/2)‖w‖²} e^{−(i/2)zA⁻¹w*} F(z)",
                &inputs,
                &printed,
            ),
        ])
    };
    or_errors(&name, identity, &inputs, run())
}

/// Central increment of the z-form group law against the ⋄ law:
/// `½Im(−(i/2)z*A⁻¹z′) = ½B(v,v′)`.
pub fn z_group_law(g: &RatMatrix) -> CheckRecord {
    let m = g.rows();
    let name = format!("transforms.beta.z_group_law.m{m}");
    let identity = "Im(−(i/2) z*A⁻¹z′) = B(v,v′), z = AΠ+iΘ, z′ = AΠ′+iΘ′";
    let inputs = format!("symbolic (Π,Θ), (Π′,Θ′), G = {}", g.render());
    let run = || -> Result<CheckRecord> {
        let reg = registry(
            m,
            &[
                ("pi", "Π", Role::Parameter),
                ("theta", "Θ", Role::Parameter),
                ("pi2", "Π′", Role::Parameter),
                ("theta2", "Θ′", Role::Parameter),
            ],
        )?;
        let a = g.scale_rat(&rat(1, 2));
        let a_inv = a.inverse()?;
        let z1 = super::bargmann::composite_z(&reg, &a, reg.block("pi"), reg.block("theta"));
        let z2 = super::bargmann::composite_z(&reg, &a, reg.block("pi2"), reg.block("theta2"));
        let z1s: Vec<GrassmannElement> = z1.iter().map(GrassmannElement::star).collect();
        let x = crate::superfunctions::bilinear(&z1s, &a_inv, &z2).scale(&i_times(rat(-1, 2)));
        let b = &dot(&gens(&reg, "pi"), &gens(&reg, "theta2")) + &dot(&gens(&reg, "theta"), &gens(&reg, "pi2"));
        Ok(compare_cases(&name, identity, &inputs, &[Case::new("symbolic", imaginary_part(&x), b)]))
    };
    or_error(&name, identity, &inputs, run())
}

pub fn scalar_render(c: &Scalar) -> String {
    crate::scalar::format_scalar(c)
}
