//! Randomized invariants checked with proptest.

use std::sync::Arc;

use proptest::prelude::*;

use superheis_core::grassmann::json::{element_from_json, element_to_json};
use superheis_core::linalg::RatMatrix;
use superheis_core::oddons::{oddon_from_json, oddon_to_json, Oddon, OddonKind};
use superheis_core::scalar::{cplx, int};
use superheis_core::superfunctions::pfaffian;
use superheis_core::unitary::{SupersymplecticFormData, SvnVerdict};
use superheis_core::{GeneratorRegistry, GrassmannElement, Parity, Rational, Scalar};

const N: usize = 5;

fn reg() -> Arc<GeneratorRegistry> {
    GeneratorRegistry::zetas(N).unwrap()
}

fn build(terms: &[(u32, i64, i64)]) -> GrassmannElement {
    let r = reg();
    terms.iter().fold(GrassmannElement::zero(&r), |acc, &(mask, re, im)| {
        &acc + &GrassmannElement::monomial(&r, mask, cplx(int(re), int(im)))
    })
}

fn element() -> impl Strategy<Value = GrassmannElement> {
    prop::collection::vec((0u32..1 << N, -3i64..=3, -3i64..=3), 0..7).prop_map(|t| build(&t))
}

fn homogeneous(p: Parity) -> impl Strategy<Value = GrassmannElement> {
    element().prop_map(move |x| match p {
        Parity::Even => x.even_part(),
        Parity::Odd => x.odd_part(),
    })
}

fn sign(p: Option<Parity>, q: Option<Parity>) -> Scalar {
    if p == Some(Parity::Odd) && q == Some(Parity::Odd) {
        cplx(int(-1), int(0))
    } else {
        cplx(int(1), int(0))
    }
}

fn antisymmetric(n: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(-4i64..=4, n * (n - 1) / 2).prop_map(move |upper| {
        let mut rows = vec![vec![0i64; n]; n];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                rows[i][j] = upper[k];
                rows[j][i] = -upper[k];
                k += 1;
            }
        }
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        RatMatrix::from_ints(&refs)
    })
}

/// Pfaffian as a signed sum over perfect matchings, signs from inversion
/// counts of the flattened pair list.
fn matching_sum(g: &RatMatrix) -> Rational {
    fn matchings(free: Vec<usize>) -> Vec<Vec<(usize, usize)>> {
        if free.is_empty() {
            return vec![vec![]];
        }
        let first = free[0];
        let mut out = Vec::new();
        for k in 1..free.len() {
            let rest: Vec<usize> = free.iter().enumerate().filter(|&(p, _)| p != 0 && p != k).map(|(_, &v)| v).collect();
            for mut m in matchings(rest) {
                m.insert(0, (first, free[k]));
                out.push(m);
            }
        }
        out
    }
    let mut total = int(0);
    for m in matchings((0..g.rows()).collect()) {
        let flat: Vec<usize> = m.iter().flat_map(|&(i, j)| [i, j]).collect();
        let inversions = (0..flat.len()).flat_map(|a| (a + 1..flat.len()).map(move |b| (a, b))).filter(|&(a, b)| flat[a] > flat[b]).count();
        let mut term = int(if inversions % 2 == 0 { 1 } else { -1 });
        for (i, j) in m {
            term *= g.get(i, j).clone();
        }
        total += term;
    }
    total
}

fn oddon(kind: OddonKind) -> impl Strategy<Value = Oddon> {
    (element(), element()).prop_map(move |(a, b)| Oddon::new(kind, a, b).unwrap())
}

fn kind() -> impl Strategy<Value = OddonKind> {
    prop_oneof![Just(OddonKind::Real), Just(OddonKind::Complex)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative_and_distributive(x in element(), y in element(), z in element()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn graded_commutativity(p in prop_oneof![Just(Parity::Even), Just(Parity::Odd)],
                            q in prop_oneof![Just(Parity::Even), Just(Parity::Odd)],
                            x in element(), y in element()) {
        let (x, y) = (if p == Parity::Even { x.even_part() } else { x.odd_part() }, if q == Parity::Even { y.even_part() } else { y.odd_part() });
        prop_assert_eq!(&x * &y, (&y * &x).scale(&sign(Some(p), Some(q))));
    }

    #[test]
    fn odd_elements_square_to_zero(x in homogeneous(Parity::Odd)) {
        prop_assert!((&x * &x).is_zero());
    }

    #[test]
    fn star_is_an_antimultiplicative_involution(x in element(), y in element()) {
        prop_assert_eq!(x.star().star(), x.clone());
        prop_assert_eq!((&x * &y).star(), &y.star() * &x.star());
    }

    #[test]
    fn parity_map_is_an_involutive_automorphism(x in element(), y in element()) {
        prop_assert_eq!((&x * &y).parity_map(), &x.parity_map() * &y.parity_map());
        prop_assert_eq!(x.parity_map(), &x.even_part() + &(-&x.odd_part()));
    }

    #[test]
    fn left_derivative_is_a_graded_derivation(j in 0..N, x in homogeneous(Parity::Odd), y in element()) {
        let lhs = (&x * &y).left_derivative(j);
        let rhs = &(&x.left_derivative(j) * &y) + &(-&(&x * &y.left_derivative(j)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn berezin_kills_total_derivatives(j in 0..3usize, x in element()) {
        prop_assert!(x.left_derivative(j).berezin(&[0, 1, 2]).is_zero());
    }

    #[test]
    fn exponential_of_even_soul_is_invertible(x in homogeneous(Parity::Even)) {
        let a = x.soul();
        let e = a.exp_nil().unwrap();
        prop_assert_eq!(&e * &(-&a).exp_nil().unwrap(), GrassmannElement::one(&reg()));
        prop_assert_eq!(e.inverse().unwrap(), (-&a).exp_nil().unwrap());
    }

    #[test]
    fn inverse_when_body_nonzero(body in 1i64..5, x in element()) {
        let y = &x.soul() + &GrassmannElement::scalar(&reg(), cplx(int(body), int(0)));
        prop_assert_eq!(&y * &y.inverse().unwrap(), GrassmannElement::one(&reg()));
    }

    #[test]
    fn element_json_round_trips(x in element()) {
        let j = element_to_json(&x);
        let text = serde_json::to_string(&j).unwrap();
        prop_assert_eq!(element_from_json(&reg(), &serde_json::from_str(&text).unwrap()).unwrap(), x);
    }

    #[test]
    fn pfaffian_matches_matching_sum(g in prop_oneof![Just(2usize), Just(4), Just(6)].prop_flat_map(antisymmetric)) {
        let pf = pfaffian(&g).unwrap();
        prop_assert_eq!(&pf, &matching_sum(&g));
        prop_assert_eq!(&pf * &pf, g.det().unwrap());
    }

    #[test]
    fn oddon_product_is_associative(k in kind(), x in oddon(OddonKind::Real), y in oddon(OddonKind::Real), z in oddon(OddonKind::Real)) {
        let retag = |o: &Oddon| Oddon::new(k, o.a().clone(), o.b().clone()).unwrap();
        let (x, y, z) = (retag(&x), retag(&y), retag(&z));
        prop_assert!(x.try_mul(&y).unwrap().try_mul(&z).unwrap() == x.try_mul(&y.try_mul(&z).unwrap()).unwrap());
    }

    #[test]
    fn unit_anticommutes_with_odd_elements(k in kind(), q in homogeneous(Parity::Odd)) {
        let u = Oddon::unit(k, &reg());
        let q = Oddon::plain(k, q);
        prop_assert!(u.try_mul(&q).unwrap() == q.try_mul(&u).unwrap().negate());
    }

    #[test]
    fn even_oddon_inverse(k in kind(), body in 1i64..4, a in homogeneous(Parity::Even), b in homogeneous(Parity::Odd)) {
        let a = &a.soul() + &GrassmannElement::scalar(&reg(), cplx(int(body), int(0)));
        let r = Oddon::new(k, a, b).unwrap();
        prop_assert!(r.try_mul(&r.inverse().unwrap()).unwrap() == Oddon::one(k, &reg()));
    }

    #[test]
    fn oddon_json_round_trips(k in kind(), x in oddon(OddonKind::Real)) {
        let x = Oddon::new(k, x.a().clone(), x.b().clone()).unwrap();
        let text = serde_json::to_string(&oddon_to_json(&x)).unwrap();
        prop_assert!(oddon_from_json(&reg(), &serde_json::from_str(&text).unwrap()).unwrap() == x);
    }

    #[test]
    fn svn_verdict_is_congruence_invariant(d in prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 1..=4),
                                            shear in prop::collection::vec(-3i64..=3, 6)) {
        // P is unit upper triangular, so PᵀDP is congruent to D and has the
        // same inertia.
        let n = d.len();
        let mut p = vec![vec![0i64; n]; n];
        let mut k = 0;
        for i in 0..n {
            p[i][i] = 1;
            for j in i + 1..n {
                p[i][j] = shear[k];
                k += 1;
            }
        }
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                m[i][j] = (0..n).map(|l| p[l][i] * d[l] * p[l][j]).sum();
            }
        }
        let refs: Vec<&[i64]> = m.iter().map(|r| r.as_slice()).collect();
        let form = SupersymplecticFormData::new(RatMatrix::zeros(0, 0, &int(0)), RatMatrix::from_ints(&refs), int(1)).unwrap();
        let want = if d.iter().all(|&x| x > 0) { SvnVerdict::ExistsUnique } else { SvnVerdict::None };
        prop_assert_eq!(form.verdict().unwrap(), want);
    }
}
