//! Executable checks for the super-Hilbert form, the existence criterion and
//! the Harish-Chandra pair.

use num_traits::{Signed, Zero};

use super::hc::{ad, basis, basis_parity, coordinates, d_sigma, element, graded_bracket, group_element, SLOTS};
use super::{SuperHilbertSpace, SuperVector, SupersymplecticFormData, SvnVerdict};
use crate::grassmann::Parity;
use crate::linalg::{Matrix, RatMatrix};
use crate::scalar::{int, rat, Rational, Scalar};
use crate::verify::compare::{compare_cases, Case};
use crate::verify::random::{self, CaseRng};
use crate::verify::report::CheckRecord;

fn random_gram(rng: &mut CaseRng, n: usize) -> Matrix<Scalar> {
    let b: Vec<Scalar> = (0..n * n).map(|_| random::small_scalar(rng)).collect();
    let mut g = Matrix::zeros(n, n, &Scalar::zero());
    for i in 0..n {
        for j in 0..n {
            let mut acc = if i == j { Scalar::new(int(1), int(0)) } else { Scalar::zero() };
            for k in 0..n {
                acc += b[k * n + i].conj() * &b[k * n + j];
            }
            g.set(i, j, acc);
        }
    }
    g
}

fn random_vector(rng: &mut CaseRng, h: &SuperHilbertSpace, parity: Parity) -> SuperVector {
    let zero = Scalar::zero();
    let mut v = SuperVector { even: vec![zero.clone(); h.dim_even()], odd: vec![zero; h.dim_odd()] };
    let block = match parity {
        Parity::Even => &mut v.even,
        Parity::Odd => &mut v.odd,
    };
    for x in block.iter_mut() {
        *x = random::small_scalar(rng);
    }
    v
}

fn sign(p: Parity, q: Parity) -> Scalar {
    if p == Parity::Odd && q == Parity::Odd {
        Scalar::new(int(-1), int(0))
    } else {
        Scalar::new(int(1), int(0))
    }
}

/// `conj<v,w> = (−1)^{|v||w|}<w,v>` on basis pairs and random homogeneous
/// vectors under random positive gram matrices, plus the worked values.
pub fn form_laws(rng: &mut CaseRng, count: usize) -> Vec<CheckRecord> {
    let mut cases = Vec::new();
    let parities = [Parity::Even, Parity::Odd];
    for n in 0..count {
        let (p, q) = (1 + n % 3, 1 + (n / 3) % 3);
        let h = SuperHilbertSpace::new(random_gram(rng, p), random_gram(rng, q)).expect("positive grams");
        for &pv in &parities {
            for &pw in &parities {
                let dims = |par| if par == Parity::Even { p } else { q };
                for i in 0..dims(pv) {
                    for j in 0..dims(pw) {
                        let (v, w) = (h.basis_vector(pv, i), h.basis_vector(pw, j));
                        let lhs = h.form(&v, &w).expect("homogeneous").conj();
                        cases.push(Case::new(format!("#{n} basis {pv:?}{i},{pw:?}{j}"), lhs, sign(pv, pw) * h.form(&w, &v).expect("homogeneous")));
                    }
                }
                let (v, w) = (random_vector(rng, &h, pv), random_vector(rng, &h, pw));
                let lhs = h.form(&v, &w).expect("homogeneous").conj();
                cases.push(Case::new(format!("#{n} random {pv:?},{pw:?}"), lhs, sign(pv, pw) * h.form(&w, &v).expect("homogeneous")));
            }
        }
    }
    let h = SuperHilbertSpace::standard(1, 1);
    let (e, f) = (h.basis_vector(Parity::Even, 0), h.basis_vector(Parity::Odd, 0));
    let value = |v: &SuperVector, w: &SuperVector| h.form(v, w).expect("homogeneous");
    let examples = vec![
        Case::new("<e₁,f₁>", value(&e, &f), Scalar::zero()),
        Case::new("<e₁,e₁>", value(&e, &e), Scalar::new(int(1), int(0))),
        Case::new("<f₁,f₁>", value(&f, &f), Scalar::new(int(0), int(1))),
    ];
    let mixed = SuperVector { even: e.even.clone(), odd: f.odd.clone() };
    let refused = h.form(&mixed, &e).is_err();
    vec![
        compare_cases(
            "unitary.form.conjugate_symmetry",
            "conj<v,w> = (−1)^{|v||w|}<w,v>",
            &format!("{count} random spaces of dimension up to (3|3), all basis pairs and random homogeneous vectors"),
            &cases,
        ),
        compare_cases("unitary.form.examples", "<e,f> = 0, <e₁,e₁> = 1, <f₁,f₁> = i", "identity grams on C^{1|1}", &examples),
        CheckRecord::boolean(
            "unitary.form.homogeneity_gate",
            "<v,w> needs homogeneous v and w",
            "v = e₁ + f₁",
            1,
            refused,
            if refused { "refused".into() } else { "accepted".into() },
            "refused".into(),
        ),
    ]
}

/// Eigenvalue-sign oracle: a real symmetric matrix is positive definite iff
/// the coefficients of `det(xI − A)` strictly alternate in sign.
pub fn char_poly_positive(a: &RatMatrix) -> bool {
    let c = a.char_poly().expect("square");
    let n = a.rows();
    c.iter().enumerate().all(|(k, ck)| if (n - k) % 2 == 0 { ck.is_positive() } else { ck.is_negative() })
}

fn random_symmetric(rng: &mut CaseRng, n: usize, style: usize) -> RatMatrix {
    if style == 0 {
        return random::symmetric(rng, n);
    }
    let b = random::symmetric(rng, n);
    let mut g = b.transpose().mul(&b).expect("square");
    if style == 2 {
        for i in 0..n {
            let d = g.get(i, i) + rat(1, 3);
            g.set(i, i, d);
        }
    }
    g
}

/// Sylvester verdict against the characteristic-polynomial oracle on random
/// symmetric matrices up to 4×4, and the worked verdicts.
pub fn svn_laws(rng: &mut CaseRng, count: usize) -> Vec<CheckRecord> {
    let mut mismatches = Vec::new();
    let mut exists = 0;
    for n in 0..count {
        let a = random_symmetric(rng, 1 + n % 4, n % 3);
        let form = SupersymplecticFormData::new(RatMatrix::zeros(0, 0, &int(0)), a.clone(), int(1)).expect("symmetric");
        let verdict = form.verdict().expect("beta > 0");
        let oracle = if char_poly_positive(&a) { SvnVerdict::ExistsUnique } else { SvnVerdict::None };
        exists += usize::from(verdict == SvnVerdict::ExistsUnique);
        if verdict != oracle {
            mismatches.push(format!("#{n} {}: minors {verdict}, eigenvalue signs {oracle}", a.render()));
        }
    }
    let ok = mismatches.is_empty();
    let oracle = CheckRecord::boolean(
        "unitary.svn.eigenvalue_oracle",
        "ExistsUnique ⇔ all leading minors > 0 ⇔ char-poly coefficients alternate strictly",
        &format!("{count} random symmetric matrices of size 1..4 ({exists} positive definite)"),
        count,
        ok,
        if ok { "verdicts agree".into() } else { mismatches.join("; ") },
        "verdicts agree".into(),
    );
    let empty = RatMatrix::zeros(0, 0, &int(0));
    let verdict = |rows: &[&[i64]], beta: Rational| {
        SupersymplecticFormData::new(empty.clone(), RatMatrix::from_ints(rows), beta).and_then(|f| f.verdict())
    };
    let checks = [
        ("identity", verdict(&[&[1, 0], &[0, 1]], int(1)).ok(), Some(SvnVerdict::ExistsUnique)),
        ("diag(1,−1)", verdict(&[&[1, 0], &[0, -1]], int(1)).ok(), Some(SvnVerdict::None)),
        ("[[2,1],[1,2]]", verdict(&[&[2, 1], &[1, 2]], int(1)).ok(), Some(SvnVerdict::ExistsUnique)),
        ("β = 0", verdict(&[&[1]], int(0)).ok(), None),
    ];
    let bad: Vec<String> = checks
        .iter()
        .filter(|(_, got, want)| got != want)
        .map(|(l, got, want)| format!("{l}: {got:?} against {want:?}"))
        .collect();
    let show = |v: &Option<SvnVerdict>| v.map_or("error".to_string(), |v| v.to_string());
    let examples = CheckRecord::boolean(
        "unitary.svn.examples",
        "identity ↦ ExistsUnique, diag(1,−1) ↦ None, [[2,1],[1,2]] ↦ ExistsUnique, β ≤ 0 refused",
        "four worked forms",
        checks.len(),
        bad.is_empty(),
        checks.iter().map(|(l, got, _)| format!("{l}: {}", show(got))).collect::<Vec<_>>().join(", "),
        checks.iter().map(|(l, _, want)| format!("{l}: {}", show(want))).collect::<Vec<_>>().join(", "),
    );
    vec![oracle, examples]
}

fn coord_matrix(c: [Rational; 4]) -> RatMatrix {
    RatMatrix::from_rows(vec![c.to_vec()]).expect("row")
}

/// Ad closure against the hand formula `(a,b,c,α) ↦ (a, b, c − y·a + x·b, α)`,
/// Ad as a bracket automorphism, the central action, the bracket table,
/// graded Jacobi, `dσ(X)Y = [X,Y]` and `[α,α]₊`.
pub fn hc_laws(rng: &mut CaseRng, count: usize) -> Vec<CheckRecord> {
    let b = basis();
    let mut closure = Vec::new();
    let mut auto = Vec::new();
    let mut central = Vec::new();
    let mut closure_errors = Vec::new();
    for n in 0..count {
        let (x, y, t) = (random::small_rational(rng), random::small_rational(rng), random::small_rational(rng));
        let g = group_element(&x, &y, &t);
        let z = group_element(&int(0), &int(0), &t);
        for (k, bk) in b.iter().enumerate() {
            let name = SLOTS[k].0;
            match ad(&g, bk).and_then(|m| coordinates(&m)) {
                Ok(c) => {
                    let mut want = [int(0), int(0), int(0), int(0)];
                    want[k] = int(1);
                    if k == 0 {
                        want[2] = -y.clone();
                    }
                    if k == 1 {
                        want[2] = x.clone();
                    }
                    closure.push(Case::new(format!("#{n} Ad(g){name}"), coord_matrix(c), coord_matrix(want)));
                }
                Err(e) => closure_errors.push(format!("#{n} Ad(g){name}: {e}")),
            }
            central.push(Case::new(format!("#{n} Ad(z){name}"), ad(&z, bk).expect("invertible"), bk.clone()));
            for (l, bl) in b.iter().enumerate() {
                let (pk, pl) = (basis_parity(k), basis_parity(l));
                let lhs = ad(&g, &graded_bracket(bk, pk, bl, pl).expect("4×4")).expect("invertible");
                let rhs = graded_bracket(&ad(&g, bk).expect("invertible"), pk, &ad(&g, bl).expect("invertible"), pl).expect("4×4");
                auto.push(Case::new(format!("#{n} {name},{}", SLOTS[l].0), lhs, rhs));
            }
        }
    }
    let inputs = format!("{count} random (x,y,t), all basis elements");
    let closure_rec = if closure_errors.is_empty() {
        compare_cases("unitary.hc.ad_closure", "Ad(g)Y = gYg⁻¹ ∈ sh(3|1) with coordinates (a, b, c − ya + xb, α)", &inputs, &closure)
    } else {
        CheckRecord::boolean("unitary.hc.ad_closure", "Ad(g)Y ∈ sh(3|1)", &inputs, closure.len(), false, closure_errors.join("; "), "inside".into())
    };

    let mut table = Vec::new();
    let mut jacobi = Vec::new();
    let mut dsig = Vec::new();
    let c = [int(0), int(0), int(1), int(0)];
    for k in 0..4 {
        for l in 0..4 {
            let br = graded_bracket(&b[k], basis_parity(k), &b[l], basis_parity(l)).expect("4×4");
            let want = match (k, l) {
                (0, 1) => element(&c),
                (1, 0) => element(&c).neg(),
                _ => RatMatrix::zeros(4, 4, &int(0)),
            };
            table.push(Case::new(format!("[{},{}]", SLOTS[k].0, SLOTS[l].0), br.clone(), want));
            if basis_parity(k) == Parity::Even {
                let d = d_sigma(&b[k], &b[l]).expect("dual arithmetic");
                dsig.push(Case::new(format!("dσ({}){}", SLOTS[k].0, SLOTS[l].0), d, br));
            }
            for m in 0..4 {
                let (p, q, r) = (basis_parity(k), basis_parity(l), basis_parity(m));
                let s = |u: Parity, v: Parity| if u == Parity::Odd && v == Parity::Odd { int(-1) } else { int(1) };
                let term = |x: usize, px: Parity, y: usize, py: Parity, z: usize, pz: Parity| {
                    let inner = graded_bracket(&b[y], py, &b[z], pz).expect("4×4");
                    let pyz = if py == pz { Parity::Even } else { Parity::Odd };
                    graded_bracket(&b[x], px, &inner, pyz).expect("4×4").scale_rat(&s(px, pz))
                };
                let sum = term(k, p, l, q, m, r).add(&term(l, q, m, r, k, p)).and_then(|x| x.add(&term(m, r, k, p, l, q))).expect("4×4");
                jacobi.push(Case::new(format!("{},{},{}", SLOTS[k].0, SLOTS[l].0, SLOTS[m].0), sum, RatMatrix::zeros(4, 4, &int(0))));
            }
        }
    }
    let alpha = &b[3];
    let anti = graded_bracket(alpha, Parity::Odd, alpha, Parity::Odd).expect("4×4");
    let anti_in = coordinates(&anti);
    vec![
        closure_rec,
        compare_cases("unitary.hc.ad_automorphism", "Ad(g)[X,Y] = [Ad(g)X, Ad(g)Y]", &inputs, &auto),
        compare_cases("unitary.hc.center_trivial", "Ad(z)Y = Y for z = (0,0,t)", &inputs, &central),
        compare_cases("unitary.hc.bracket_table", "[a,b] = c, all other basis brackets vanish", "all 16 ordered basis pairs", &table),
        compare_cases(
            "unitary.hc.graded_jacobi",
            "(−1)^{|X||Z|}[X,[Y,Z]] + (−1)^{|Y||X|}[Y,[Z,X]] + (−1)^{|Z||Y|}[Z,[X,Y]] = 0",
            "all 64 basis triples",
            &jacobi,
        ),
        compare_cases("unitary.hc.dsigma", "d/dε Ad(I+εX)Y = [X,Y] for even X", "even X ∈ {a,b,c}, all basis Y, dual numbers", &dsig),
        CheckRecord::boolean(
            "unitary.hc.odd_anticommutator",
            "[α,α]₊ = 2α² ∈ sh(3|1)",
            "α = E03",
            1,
            anti_in.is_ok(),
            match &anti_in {
                Ok(c) => format!("coordinates ({}, {}, {}, {})", c[0], c[1], c[2], c[3]),
                Err(e) => e.to_string(),
            },
            "inside sh(3|1)".into(),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::random::rng;

    #[test]
    fn oracle_agrees_on_fixed_matrices() {
        assert!(char_poly_positive(&RatMatrix::from_ints(&[&[2, 1], &[1, 2]])));
        assert!(!char_poly_positive(&RatMatrix::from_ints(&[&[1, 0], &[0, -1]])));
        assert!(!char_poly_positive(&RatMatrix::from_ints(&[&[1, 1], &[1, 1]])));
    }

    #[test]
    fn all_unitary_records_pass() {
        let mut r = rng(11);
        let mut recs = form_laws(&mut r, 6);
        recs.extend(svn_laws(&mut r, 30));
        recs.extend(hc_laws(&mut r, 5));
        for c in &recs {
            assert!(c.passed(), "{} failed: {} vs {}", c.name, c.lhs, c.rhs);
        }
    }
}
