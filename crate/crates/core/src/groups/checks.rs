//! Executable checks for the group laws.

use std::sync::Arc;

use crate::error::Result;
use crate::grassmann::{GeneratorRegistry, GrassmannElement, Role};
use crate::linalg::Matrix;
use crate::scalar::{int, rat};
use crate::verify::compare::{compare_cases, Case};
use crate::verify::random::{self, CaseRng};
use crate::verify::report::CheckRecord;

use super::heisenberg::{dot, HeisenbergTuple};
use super::super_heisenberg::{fermionic_mu, supersymplectic_b, SuperHeisenbergTuple};

fn random_h(rng: &mut CaseRng, n: usize) -> HeisenbergTuple {
    HeisenbergTuple {
        p: random::rational_vec(rng, n),
        q: random::rational_vec(rng, n),
        t: random::small_rational(rng),
    }
}

fn or_error(name: &str, identity: &str, inputs: &str, r: Result<CheckRecord>) -> CheckRecord {
    r.unwrap_or_else(|e| CheckRecord::error(name, identity, inputs, e.to_string()))
}

/// Polarized law against `M(g)M(g′)`.
pub fn polarized_matrix(rng: &mut CaseRng, n: usize, count: usize) -> CheckRecord {
    let name = format!("groups.heisenberg.polarized_matrix.n{n}");
    let identity = "M(p,q,t)M(p′,q′,t′) = M(p+p′, q+q′, t+t′+p·q′)";
    let inputs = format!("{count} random rational pairs, n={n}");
    let mut run = || -> Result<CheckRecord> {
        let mut cases = Vec::new();
        for k in 0..count {
            let (a, b) = (random_h(rng, n), random_h(rng, n));
            let lhs = a.group_matrix().mul(&b.group_matrix())?;
            cases.push(Case::new(format!("#{k}"), lhs, a.compose_polarized(&b)?.group_matrix()));
        }
        Ok(compare_cases(&name, identity, &inputs, &cases))
    };
    or_error(&name, identity, &inputs, run())
}

/// Symmetric law in exponential coordinates: `e^{m(a)}e^{m(b)} = e^{m(a∘b)}`.
pub fn symmetric_exp(rng: &mut CaseRng, n: usize, count: usize) -> CheckRecord {
    let name = format!("groups.heisenberg.symmetric_exp.n{n}");
    let identity = "e^{m(a)} e^{m(b)} = e^{m(a∘b)}, ∘ with t+t′+½(pq′−p′q)";
    let inputs = format!("{count} random rational pairs, n={n}");
    let mut run = || -> Result<CheckRecord> {
        let mut cases = Vec::new();
        for k in 0..count {
            let (a, b) = (random_h(rng, n), random_h(rng, n));
            let lhs = a.algebra_matrix().exp_nilpotent()?.mul(&b.algebra_matrix().exp_nilpotent()?)?;
            let rhs = a.compose_symmetric(&b)?.algebra_matrix().exp_nilpotent()?;
            cases.push(Case::new(format!("#{k}"), lhs, rhs));
        }
        Ok(compare_cases(&name, identity, &inputs, &cases))
    };
    or_error(&name, identity, &inputs, run())
}

/// `h_exp` against the exponential of the nilpotent `m(p,q,t)`, and the
/// intertwining `h_exp(a)∘h_exp(b) = h_exp(a∘b)`.
pub fn h_exp(rng: &mut CaseRng, n: usize, count: usize) -> Vec<CheckRecord> {
    let inputs = format!("{count} random rational tuples, n={n}");
    let mut exp_cases = Vec::new();
    let mut hom_cases = Vec::new();
    for k in 0..count {
        let (a, b) = (random_h(rng, n), random_h(rng, n));
        let e = a.algebra_matrix().exp_nilpotent().expect("nilpotent");
        exp_cases.push(Case::new(format!("#{k}"), e, a.h_exp().group_matrix()));
        let lhs = a.h_exp().compose_polarized(&b.h_exp()).expect("same n").group_matrix();
        let rhs = a.compose_symmetric(&b).expect("same n").h_exp().group_matrix();
        hom_cases.push(Case::new(format!("#{k}"), lhs, rhs));
    }
    vec![
        compare_cases(&format!("groups.heisenberg.h_exp.n{n}"), "e^{m(p,q,t)} = M(p,q,t+½p·q)", &inputs, &exp_cases),
        compare_cases(
            &format!("groups.heisenberg.h_exp_intertwines.n{n}"),
            "h_exp(a) ∘polarized h_exp(b) = h_exp(a ∘symmetric b)",
            &inputs,
            &hom_cases,
        ),
    ]
}

/// `m(p,q,t)m(p′,q′,t′) = m(0,0,p·q′)` and `[P_j,Q_k] = δ_jk T`.
pub fn lie_algebra_product(rng: &mut CaseRng, n: usize, count: usize) -> Vec<CheckRecord> {
    let inputs = format!("{count} random rational pairs, n={n}");
    let mut cases = Vec::new();
    for k in 0..count {
        let (a, b) = (random_h(rng, n), random_h(rng, n));
        let lhs = a.algebra_matrix().mul(&b.algebra_matrix()).expect("square");
        let c = HeisenbergTuple { p: vec![int(0); n], q: vec![int(0); n], t: dot(&a.p, &b.q) };
        cases.push(Case::new(format!("#{k}"), lhs, c.algebra_matrix()));
    }
    let mut comm = Vec::new();
    for j in 0..n {
        for k in 0..n {
            let mut pj = HeisenbergTuple::identity(n);
            pj.p[j] = int(1);
            let mut qk = HeisenbergTuple::identity(n);
            qk.q[k] = int(1);
            let lhs = pj.algebra_matrix().commutator(&qk.algebra_matrix()).expect("square");
            let mut t = HeisenbergTuple::identity(n);
            t.t = if j == k { int(1) } else { int(0) };
            comm.push(Case::new(format!("P{}Q{}", j + 1, k + 1), lhs, t.algebra_matrix()));
        }
    }
    vec![
        compare_cases(&format!("groups.heisenberg.algebra_product.n{n}"), "m(p,q,t)m(p′,q′,t′) = m(0,0,p·q′)", &inputs, &cases),
        compare_cases(
            &format!("groups.heisenberg.canonical_commutators.n{n}"),
            "[P_j, Q_k] = δ_jk T",
            &format!("all index pairs, n={n}"),
            &comm,
        ),
    ]
}

/// Associativity and inverses of both classical laws.
pub fn classical_axioms(rng: &mut CaseRng, n: usize, count: usize) -> Vec<CheckRecord> {
    let inputs = format!("{count} random rational triples, n={n}");
    let mut pol = Vec::new();
    let mut sym = Vec::new();
    let mut inv = Vec::new();
    for k in 0..count {
        let (a, b, c) = (random_h(rng, n), random_h(rng, n), random_h(rng, n));
        let l = a.compose_polarized(&b).and_then(|x| x.compose_polarized(&c)).expect("same n");
        let r = b.compose_polarized(&c).and_then(|x| a.compose_polarized(&x)).expect("same n");
        pol.push(Case::new(format!("#{k}"), l.group_matrix(), r.group_matrix()));
        let l = a.compose_symmetric(&b).and_then(|x| x.compose_symmetric(&c)).expect("same n");
        let r = b.compose_symmetric(&c).and_then(|x| a.compose_symmetric(&x)).expect("same n");
        sym.push(Case::new(format!("#{k}"), l.group_matrix(), r.group_matrix()));
        let e = HeisenbergTuple::identity(n).group_matrix();
        let x = a.compose_polarized(&a.inverse_polarized()).expect("same n").group_matrix();
        let y = a.compose_symmetric(&a.inverse_symmetric()).expect("same n").group_matrix();
        let z = a.group_matrix().unipotent_inverse().expect("unipotent");
        inv.push(Case::new(format!("#{k} polarized"), x, e.clone()));
        inv.push(Case::new(format!("#{k} symmetric"), y, e.clone()));
        inv.push(Case::new(format!("#{k} matrix"), z, a.inverse_polarized().group_matrix()));
    }
    vec![
        compare_cases(&format!("groups.heisenberg.associative_polarized.n{n}"), "(ab)c = a(bc)", &inputs, &pol),
        compare_cases(&format!("groups.heisenberg.associative_symmetric.n{n}"), "(ab)c = a(bc)", &inputs, &sym),
        compare_cases(&format!("groups.heisenberg.inverses.n{n}"), "g∘g⁻¹ = e; M(g)⁻¹ = M(g⁻¹)", &inputs, &inv),
    ]
}

/// Registry with `copies` blocks of `Π`, `Θ` of length `m`.
pub fn odd_registry(m: usize, copies: usize) -> Result<Arc<GeneratorRegistry>> {
    let primes = ["", "′", "″"];
    let mut b = GeneratorRegistry::builder();
    for c in 0..copies {
        let suffix = primes.get(c).copied().unwrap_or("‴");
        b = b
            .block(&format!("pi{c}"), &format!("Π{suffix}"), m, Role::Parameter)
            .block(&format!("theta{c}"), &format!("Θ{suffix}"), m, Role::Parameter);
    }
    b.build()
}

/// `μ(Π,Θ,t)³ = 0` with generic odd entries and an even `t`.
pub fn mu_nilpotent(rng: &mut CaseRng, m: usize) -> CheckRecord {
    let name = format!("groups.fermionic.mu_cubed.m{m}");
    let identity = "μ(Π,Θ,t)³ = 0";
    let inputs = format!("generic Π, Θ, t = rational + even soul, m={m}");
    let mut run = || -> Result<CheckRecord> {
        let reg = odd_registry(m, 1)?;
        let pi: Vec<_> = reg.block("pi0").iter().map(|&i| GrassmannElement::generator(&reg, i)).collect();
        let th: Vec<_> = reg.block("theta0").iter().map(|&i| GrassmannElement::generator(&reg, i)).collect();
        let all: Vec<usize> = (0..reg.len()).collect();
        let t = &GrassmannElement::rational(&reg, random::nonzero_rational(rng)) + &random::even_soul(rng, &reg, &all);
        let mu = fermionic_mu(&pi, &th, &t)?;
        let cube = mu.pow(3)?.entries;
        let square = mu.pow(2)?.entries;
        let zero = Matrix::zeros(m + 2, m + 2, &t);
        let mut rec = compare_cases(&name, identity, &inputs, &[Case::new("generic", cube, zero)]);
        if square.is_zero() {
            rec.lhs.push_str(" (μ² vanished too: degenerate input)");
        }
        Ok(rec)
    };
    or_error(&name, identity, &inputs, run())
}

fn random_sh(rng: &mut CaseRng, reg: &Arc<GeneratorRegistry>, n: usize, copy: usize) -> SuperHeisenbergTuple {
    let pi_gens = reg.block(&format!("pi{copy}")).to_vec();
    let th_gens = reg.block(&format!("theta{copy}")).to_vec();
    let own: Vec<usize> = pi_gens.iter().chain(&th_gens).copied().collect();
    let pool: Vec<usize> = own.clone();
    SuperHeisenbergTuple {
        p: random::rational_vec(rng, n),
        q: random::rational_vec(rng, n),
        pi: pi_gens.iter().map(|_| random::odd_element(rng, reg, &pool)).collect(),
        theta: th_gens.iter().map(|_| random::odd_element(rng, reg, &pool)).collect(),
        t: &GrassmannElement::rational(reg, random::small_rational(rng)) + &random::even_soul(rng, reg, &own),
    }
}

/// Polarized super law against the supermatrix product, the ⋄ law against it
/// after `t ↦ t + ½(pq + ΠΘ)`, and the exponential form of ⋄.
pub fn super_laws(rng: &mut CaseRng, m: usize, count: usize) -> Vec<CheckRecord> {
    let n = m;
    let inputs = format!("{count} random pairs, n=m={m}");
    let reg = odd_registry(m, 3).expect("registry fits");
    let mut pol = Vec::new();
    let mut dia = Vec::new();
    let mut expo = Vec::new();
    let mut assoc = Vec::new();
    let mut inv = Vec::new();
    for k in 0..count {
        let a = random_sh(rng, &reg, n, 0);
        let b = random_sh(rng, &reg, n, 1);
        let c = random_sh(rng, &reg, n, 2);
        let lhs = a.group_matrix().mul(&b.group_matrix()).expect("layout").entries;
        pol.push(Case::new(format!("#{k}"), lhs, a.compose_polarized(&b).expect("dims").group_matrix().entries));
        let l = a.compose_diamond(&b).expect("dims").diamond_to_polarized();
        let r = a.diamond_to_polarized().compose_polarized(&b.diamond_to_polarized()).expect("dims");
        dia.push(Case::new(format!("#{k}"), l.group_matrix().entries, r.group_matrix().entries));
        let ea = a.algebra_matrix().entries.exp_nilpotent().expect("nilpotent");
        let eb = b.algebra_matrix().entries.exp_nilpotent().expect("nilpotent");
        let eab = a.compose_diamond(&b).expect("dims").algebra_matrix().entries.exp_nilpotent().expect("nilpotent");
        expo.push(Case::new(format!("#{k}"), ea.mul(&eb).expect("square"), eab));
        for (label, f) in [
            ("polarized", SuperHeisenbergTuple::compose_polarized as fn(&_, &_) -> _),
            ("diamond", SuperHeisenbergTuple::compose_diamond),
        ] {
            let l = f(&f(&a, &b).expect("dims"), &c).expect("dims");
            let r = f(&a, &f(&b, &c).expect("dims")).expect("dims");
            assoc.push(Case::new(format!("#{k} {label}"), l.group_matrix().entries, r.group_matrix().entries));
        }
        let e = SuperHeisenbergTuple::identity(n, m, &reg).group_matrix().entries;
        let x = a.compose_polarized(&a.inverse_polarized()).expect("dims").group_matrix().entries;
        let y = a.compose_diamond(&a.inverse_diamond()).expect("dims").group_matrix().entries;
        let z = a.group_matrix().entries.unipotent_inverse().expect("unipotent");
        inv.push(Case::new(format!("#{k} polarized"), x, e.clone()));
        inv.push(Case::new(format!("#{k} diamond"), y, e));
        inv.push(Case::new(format!("#{k} matrix"), z, a.inverse_polarized().group_matrix().entries));
    }
    vec![
        compare_cases(
            &format!("groups.super.polarized_matrix.m{m}"),
            "M(g)M(g′) = M(p+p′, q+q′, Π+Π′, Θ+Θ′, t+t′+p·q′+Π·Θ′)",
            &inputs,
            &pol,
        ),
        compare_cases(
            &format!("groups.super.diamond_vs_polarized.m{m}"),
            "φ(g⋄g′) = φ(g)∘φ(g′), φ: t ↦ t+½(p·q+Π·Θ)",
            &inputs,
            &dia,
        ),
        compare_cases(
            &format!("groups.super.diamond_exponential.m{m}"),
            "e^{X(g)} e^{X(g′)} = e^{X(g⋄g′)}",
            &inputs,
            &expo,
        ),
        compare_cases(&format!("groups.super.associative.m{m}"), "(ab)c = a(bc) for polarized and ⋄", &inputs, &assoc),
        compare_cases(&format!("groups.super.inverses.m{m}"), "g g⁻¹ = e; M(g)⁻¹ = M(g⁻¹)", &inputs, &inv),
    ]
}

/// `[X(Π,Θ,t), X(Π′,Θ′,t′)] = X(0,0,Π·Θ′+Θ·Π′)`, fermionic examples of both laws,
/// and the reduction of ⋄ to the symmetric law.
pub fn super_examples(rng: &mut CaseRng, m: usize) -> Vec<CheckRecord> {
    let reg = odd_registry(m, 2).expect("registry fits");
    let z = GrassmannElement::zero(&reg);
    let gens = |b: &str| -> Vec<GrassmannElement> {
        reg.block(b).iter().map(|&i| GrassmannElement::generator(&reg, i)).collect()
    };
    let (pi, th, pi2, th2) = (gens("pi0"), gens("theta0"), gens("pi1"), gens("theta1"));
    let zeros = vec![z.clone(); m];
    let t1 = GrassmannElement::rational(&reg, random::small_rational(rng));
    let t2 = GrassmannElement::rational(&reg, random::small_rational(rng));
    let a = SuperHeisenbergTuple::new(vec![], vec![], pi.clone(), th.clone(), t1.clone()).expect("valid");
    let b = SuperHeisenbergTuple::new(vec![], vec![], pi2.clone(), th2.clone(), t2.clone()).expect("valid");
    let comm = a.algebra_matrix().entries.commutator(&b.algebra_matrix().entries).expect("square");
    let bval = supersymplectic_b(&pi, &th, &pi2, &th2, &reg);
    let want = SuperHeisenbergTuple::new(vec![], vec![], zeros.clone(), zeros.clone(), bval).expect("valid");
    let mut out = vec![compare_cases(
        &format!("groups.super.supercommutator.m{m}"),
        "[(Π,Θ,t),(Π′,Θ′,t′)] = (0, 0, Π·Θ′+Θ·Π′)",
        "generic odd generators",
        &[Case::new("generic", comm, want.algebra_matrix().entries)],
    )];

    let pa = SuperHeisenbergTuple::new(vec![], vec![], pi.clone(), zeros.clone(), z.clone()).expect("valid");
    let pb = SuperHeisenbergTuple::new(vec![], vec![], zeros.clone(), th2.clone(), z.clone()).expect("valid");
    let pt = pa.compose_polarized(&pb).expect("dims").t;
    let dt = pa.compose_diamond(&pb).expect("dims").t;
    let pth = pi.iter().zip(&th2).fold(z.clone(), |acc, (x, y)| &acc + &(x * y));
    out.push(compare_cases(
        &format!("groups.super.pure_odd_products.m{m}"),
        "M(Π,0,0)M(0,Θ′,0) = M(Π,Θ′,Π·Θ′); (Π,0,0)⋄(0,Θ′,0) has t = ½Π·Θ′",
        "generic odd generators",
        &[
            Case::new("polarized", pt, pth.clone()),
            Case::new("diamond", dt, pth.scale_rat(&rat(1, 2))),
        ],
    ));

    let mut red = Vec::new();
    for k in 0..20 {
        let ha = random_h(rng, m);
        let hb = random_h(rng, m);
        let lift = |h: &HeisenbergTuple| {
            SuperHeisenbergTuple::new(
                h.p.clone(),
                h.q.clone(),
                zeros.clone(),
                zeros.clone(),
                GrassmannElement::rational(&reg, h.t.clone()),
            )
            .expect("valid")
        };
        let d = lift(&ha).compose_diamond(&lift(&hb)).expect("dims");
        let s = lift(&ha.compose_symmetric(&hb).expect("dims"));
        red.push(Case::new(format!("#{k}"), d.group_matrix().entries, s.group_matrix().entries));
    }
    out.push(compare_cases(
        &format!("groups.super.bosonic_reduction.m{m}"),
        "⋄ with Π = Θ = 0 is the symmetric law",
        "20 random rational pairs",
        &red,
    ));
    out
}

/// Graded symmetry of `B`. A vector in the odd directions whose entries have
/// parity `e` is homogeneous of degree `e + 1`.
pub fn b_symmetry(rng: &mut CaseRng, m: usize) -> Vec<CheckRecord> {
    let reg = odd_registry(m, 2).expect("registry fits");
    let all: Vec<usize> = (0..reg.len()).collect();
    let mut shifted = Vec::new();
    let mut literal = Vec::new();
    let mut diag = Vec::new();
    for (ea, eb) in [(0u32, 0u32), (0, 1), (1, 0), (1, 1)] {
        for k in 0..10 {
            let entry = |rng: &mut CaseRng, e: u32| -> GrassmannElement {
                if e == 1 {
                    random::odd_element(rng, &reg, &all)
                } else {
                    &GrassmannElement::rational(&reg, random::small_rational(rng)) + &random::even_soul(rng, &reg, &all)
                }
            };
            let v: Vec<Vec<GrassmannElement>> = (0..2).map(|_| (0..m).map(|_| entry(rng, ea)).collect()).collect();
            let w: Vec<Vec<GrassmannElement>> = (0..2).map(|_| (0..m).map(|_| entry(rng, eb)).collect()).collect();
            let bvw = supersymplectic_b(&v[0], &v[1], &w[0], &w[1], &reg);
            let bwv = supersymplectic_b(&w[0], &w[1], &v[0], &v[1], &reg);
            let label = format!("entries ({ea},{eb}) #{k}");
            let sign_shift = if ((ea + 1) * (eb + 1)) % 2 == 1 { 1 } else { -1 };
            let sign_lit = if (ea * eb) % 2 == 1 { 1 } else { -1 };
            shifted.push(Case::new(label.clone(), bvw.clone(), bwv.scale_rat(&int(sign_shift))));
            literal.push(Case::new(label, bvw, bwv.scale_rat(&int(sign_lit))));
            if ea == 1 && eb == 1 {
                diag.push(Case::new(
                    format!("#{k}"),
                    supersymplectic_b(&v[0], &v[1], &v[0], &v[1], &reg),
                    GrassmannElement::zero(&reg),
                ));
            }
        }
    }
    vec![
        compare_cases(
            &format!("groups.super.b_graded_symmetry.m{m}"),
            "B(v,v′) = −(−1)^{|v||v′|} B(v′,v), |v| = entry parity + 1",
            "10 random pairs per entry-parity combination",
            &shifted,
        ),
        compare_cases(
            &format!("groups.super.b_graded_symmetry_entry_parity.m{m}"),
            "B(v,v′) = −(−1)^{|v||v′|} B(v′,v), |v| = entry parity",
            "10 random pairs per entry-parity combination",
            &literal,
        ),
        compare_cases(
            &format!("groups.super.b_diagonal.m{m}"),
            "B(v,v) = Π·Θ + Θ·Π = 0 for odd entries",
            "10 random odd-entry vectors",
            &diag,
        ),
    ]
}
