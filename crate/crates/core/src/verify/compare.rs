//! Multi-case comparison: pass, one constant factor, or a case-dependent difference.

use num_traits::Zero;

use super::report::{CheckRecord, Discrepancy, DiscrepancyKind, Verdict};
use crate::grassmann::{GrassmannElement, PhasedElement};
use crate::linalg::{Matrix, Ring};
use crate::scalar::{format_scalar, real, Rational, Scalar};

pub trait Comparable: Clone + PartialEq {
    fn render(&self) -> String;
    fn is_zero_value(&self) -> bool;
    fn scaled(&self, c: &Scalar) -> Self;
    fn minus(&self, o: &Self) -> Self;
    /// `c` with `self = c·rhs`, read off one nonzero coefficient of `rhs`.
    fn ratio_candidate(&self, rhs: &Self) -> Option<Scalar>;
    /// `f` with `self = f·rhs`, when `rhs` is invertible.
    fn left_factor(&self, _rhs: &Self) -> Option<Self> {
        None
    }
    fn times(&self, _rhs: &Self) -> Option<Self> {
        None
    }
}

impl Comparable for Scalar {
    fn render(&self) -> String {
        format_scalar(self)
    }
    fn is_zero_value(&self) -> bool {
        Zero::is_zero(self)
    }
    fn scaled(&self, c: &Scalar) -> Self {
        self * c
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn ratio_candidate(&self, rhs: &Self) -> Option<Scalar> {
        (!Zero::is_zero(rhs)).then(|| self / rhs)
    }
}

impl Comparable for Rational {
    fn render(&self) -> String {
        self.to_string()
    }
    fn is_zero_value(&self) -> bool {
        Zero::is_zero(self)
    }
    fn scaled(&self, c: &Scalar) -> Self {
        assert!(Zero::is_zero(&c.im), "complex factor on a rational");
        self * &c.re
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn ratio_candidate(&self, rhs: &Self) -> Option<Scalar> {
        (!Zero::is_zero(rhs)).then(|| real(self / rhs))
    }
}

impl Comparable for GrassmannElement {
    fn render(&self) -> String {
        self.to_string()
    }
    fn is_zero_value(&self) -> bool {
        GrassmannElement::is_zero(self)
    }
    fn scaled(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn ratio_candidate(&self, rhs: &Self) -> Option<Scalar> {
        let (m, c) = rhs.terms().iter().next()?;
        Some(self.coefficient(*m) / c)
    }
    fn left_factor(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().ok().map(|inv| self * &inv)
    }
    fn times(&self, rhs: &Self) -> Option<Self> {
        Some(self * rhs)
    }
}

impl Comparable for PhasedElement {
    fn render(&self) -> String {
        self.to_string()
    }
    fn is_zero_value(&self) -> bool {
        PhasedElement::is_zero(self)
    }
    fn scaled(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn ratio_candidate(&self, rhs: &Self) -> Option<Scalar> {
        let (phi, g) = rhs.parts().iter().next()?;
        let (m, c) = g.terms().iter().next()?;
        let mine = self.parts().get(phi)?.coefficient(*m);
        Some(mine / c)
    }
    fn left_factor(&self, rhs: &Self) -> Option<Self> {
        let g = rhs.as_unphased()?;
        let inv = PhasedElement::from(g.inverse().ok()?);
        Some(self * &inv)
    }
    fn times(&self, rhs: &Self) -> Option<Self> {
        Some(self * rhs)
    }
}

impl<T: Ring + Comparable> Comparable for Matrix<T> {
    fn render(&self) -> String {
        Matrix::render(self)
    }
    fn is_zero_value(&self) -> bool {
        Matrix::is_zero(self)
    }
    fn scaled(&self, c: &Scalar) -> Self {
        self.map(|x| x.scaled(c))
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o).expect("same shape")
    }
    fn ratio_candidate(&self, rhs: &Self) -> Option<Scalar> {
        let k = rhs.entries().iter().position(|x| !x.is_zero_value())?;
        self.entries()[k].ratio_candidate(&rhs.entries()[k])
    }
}

/// One named case: its label and both sides.
pub struct Case<T> {
    pub label: String,
    pub lhs: T,
    pub rhs: T,
}

impl<T> Case<T> {
    pub fn new(label: impl Into<String>, lhs: T, rhs: T) -> Self {
        Case { label: label.into(), lhs, rhs }
    }
}

/// Folds a set of cases into one record. Equal on every case gives `pass`.
/// Otherwise a scalar factor, then an element factor, is read off the first
/// usable case and verified on every case; failing both, the first nonzero
/// difference is reported.
pub fn compare_cases<T: Comparable>(name: &str, identity: &str, inputs: &str, cases: &[Case<T>]) -> CheckRecord {
    let n = cases.len();
    let (lhs0, rhs0) = match cases.iter().find(|c| c.lhs != c.rhs).or(cases.first()) {
        Some(c) => (format!("[{}] {}", c.label, c.lhs.render()), c.rhs.render()),
        None => (String::new(), String::new()),
    };
    let record = |verdict, discrepancy_factor| CheckRecord {
        name: name.to_string(),
        identity: identity.to_string(),
        inputs: inputs.to_string(),
        cases: n,
        lhs: lhs0.clone(),
        rhs: rhs0.clone(),
        verdict,
        discrepancy_factor,
    };
    if cases.iter().all(|c| c.lhs == c.rhs) {
        return record(Verdict::Pass, None);
    }
    let scalar = cases
        .iter()
        .filter(|c| !c.rhs.is_zero_value())
        .find_map(|c| c.lhs.ratio_candidate(&c.rhs))
        .filter(|k| !Zero::is_zero(k) && cases.iter().all(|c| c.lhs == c.rhs.scaled(k)));
    if let Some(k) = scalar {
        return record(
            Verdict::ExactDiscrepancy,
            Some(Discrepancy { kind: DiscrepancyKind::Factor, value: format_scalar(&k) }),
        );
    }
    let element = cases
        .iter()
        .find_map(|c| c.lhs.left_factor(&c.rhs))
        .filter(|f| cases.iter().all(|c| f.times(&c.rhs).as_ref() == Some(&c.lhs)));
    if let Some(f) = element {
        return record(
            Verdict::ExactDiscrepancy,
            Some(Discrepancy { kind: DiscrepancyKind::Factor, value: f.render() }),
        );
    }
    let bad = cases.iter().find(|c| c.lhs != c.rhs).expect("some case differs");
    record(
        Verdict::ExactDiscrepancy,
        Some(Discrepancy {
            kind: DiscrepancyKind::Difference,
            value: format!("[{}] lhs − rhs = {}", bad.label, bad.lhs.minus(&bad.rhs).render()),
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::GeneratorRegistry;
    use crate::scalar::s;

    #[test]
    fn constant_scalar_factor_is_found() {
        let r = GeneratorRegistry::zetas(2).unwrap();
        let a = GrassmannElement::generator(&r, 0);
        let b = GrassmannElement::generator(&r, 1);
        let cases = vec![Case::new("a", a.scale(&s(-1, 1)), a.clone()), Case::new("b", b.scale(&s(-1, 1)), b.clone())];
        let rec = compare_cases("t", "x = y", "", &cases);
        assert_eq!(rec.verdict, Verdict::ExactDiscrepancy);
        assert_eq!(rec.factor(), Some("-1"));
    }

    #[test]
    fn varying_factor_is_a_difference() {
        let r = GeneratorRegistry::zetas(2).unwrap();
        let a = GrassmannElement::generator(&r, 0);
        let b = GrassmannElement::generator(&r, 1);
        let cases = vec![Case::new("a", a.scale(&s(2, 1)), a.clone()), Case::new("b", b.scale(&s(3, 1)), b.clone())];
        let rec = compare_cases("t", "x = y", "", &cases);
        assert!(!rec.constant_factor());
    }

    #[test]
    fn element_factor_is_found() {
        let r = GeneratorRegistry::zetas(2).unwrap();
        let one = GrassmannElement::one(&r);
        let f = &one + &GrassmannElement::product_of(&r, &[0, 1]);
        let g = &one + &GrassmannElement::generator(&r, 0);
        let cases = vec![Case::new("1", f.clone(), one.clone()), Case::new("g", &f * &g, g.clone())];
        let rec = compare_cases("t", "x = y", "", &cases);
        assert_eq!(rec.factor(), Some("1 + ζ1ζ2"));
    }

    #[test]
    fn equal_cases_pass() {
        let cases = vec![Case::new("x", s(1, 2), s(1, 2))];
        assert!(compare_cases("t", "", "", &cases).passed());
    }
}
