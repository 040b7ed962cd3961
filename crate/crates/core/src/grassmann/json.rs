//! JSON form of elements: 1-based generator indices, `p/q` rational strings.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::element::GrassmannElement;
use super::phased::PhasedElement;
use super::registry::GeneratorRegistry;
use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub indices: Vec<usize>,
    pub re: String,
    pub im: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhasedPartJson {
    pub phase: String,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhasedJson {
    pub parts: Vec<PhasedPartJson>,
}

fn terms_to_json(g: &GrassmannElement) -> Vec<TermJson> {
    g.terms()
        .iter()
        .map(|(&mask, c)| TermJson {
            indices: (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect(),
            re: format_rational(&c.re),
            im: format_rational(&c.im),
        })
        .collect()
}

fn terms_from_json(reg: &Arc<GeneratorRegistry>, terms: &[TermJson], at: &str) -> Result<GrassmannElement> {
    let mut out: BTreeMap<u32, Scalar> = BTreeMap::new();
    for (n, t) in terms.iter().enumerate() {
        let here = format!("{at}terms[{n}]");
        let mut mask = 0u32;
        let mut sorted = t.indices.clone();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Parse(format!("{here}: repeated generator index {}", w[0])));
            }
        }
        for &i in &t.indices {
            if i == 0 || i > reg.len() {
                return Err(Error::Parse(format!("{here}: generator index {i} outside 1..={}", reg.len())));
            }
            mask |= 1 << (i - 1);
        }
        let re = parse_rational(&t.re).map_err(|e| Error::Parse(format!("{here}.re: {e}")))?;
        let im = parse_rational(&t.im).map_err(|e| Error::Parse(format!("{here}.im: {e}")))?;
        // indices may be listed in any order; the listed product fixes the sign
        let ordered = GrassmannElement::product_of(reg, &t.indices.iter().map(|i| i - 1).collect::<Vec<_>>());
        let c = Complex::new(re, im) * ordered.coefficient(mask);
        let slot = out.entry(mask).or_insert_with(num_traits::Zero::zero);
        *slot = &*slot + c;
    }
    Ok(GrassmannElement::from_terms(reg, out))
}

pub fn element_to_json(g: &GrassmannElement) -> ElementJson {
    ElementJson { terms: terms_to_json(g) }
}

pub fn element_from_json(reg: &Arc<GeneratorRegistry>, j: &ElementJson) -> Result<GrassmannElement> {
    terms_from_json(reg, &j.terms, "")
}

pub fn element_from_value(reg: &Arc<GeneratorRegistry>, v: &serde_json::Value, at: &str) -> Result<GrassmannElement> {
    let j: ElementJson =
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("{at}: {e}")))?;
    terms_from_json(reg, &j.terms, &format!("{at}."))
}

pub fn phased_to_json(p: &PhasedElement) -> PhasedJson {
    PhasedJson {
        parts: p
            .parts()
            .iter()
            .map(|(phi, g)| PhasedPartJson { phase: format_rational(phi), terms: terms_to_json(g) })
            .collect(),
    }
}

pub fn phased_from_json(reg: &Arc<GeneratorRegistry>, j: &PhasedJson) -> Result<PhasedElement> {
    let mut out = PhasedElement::zero(reg);
    for (n, part) in j.parts.iter().enumerate() {
        let phi = parse_rational(&part.phase).map_err(|e| Error::Parse(format!("parts[{n}].phase: {e}")))?;
        let g = terms_from_json(reg, &part.terms, &format!("parts[{n}]."))?;
        out = out.try_add(&PhasedElement::phase(phi, g))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{cplx, rat};

    #[test]
    fn element_round_trip() {
        let reg = GeneratorRegistry::zetas(3).unwrap();
        let g = GrassmannElement::monomial(&reg, 0b011, cplx(rat(1, 2), rat(-3, 4)))
            + GrassmannElement::monomial(&reg, 0b100, cplx(rat(0, 1), rat(1, 1)));
        let j = element_to_json(&g);
        assert_eq!(j.terms[0].indices, vec![1, 2]);
        assert_eq!(j.terms[0].re, "1/2");
        assert_eq!(j.terms[0].im, "-3/4");
        let text = serde_json::to_string(&j).unwrap();
        let back: ElementJson = serde_json::from_str(&text).unwrap();
        assert_eq!(element_from_json(&reg, &back).unwrap(), g);
        assert_eq!(serde_json::to_string(&element_to_json(&element_from_json(&reg, &back).unwrap())).unwrap(), text);
    }

    #[test]
    fn unordered_indices_carry_their_sign() {
        let reg = GeneratorRegistry::zetas(2).unwrap();
        let j: ElementJson = serde_json::from_str(r#"{"terms":[{"indices":[2,1],"re":"1","im":"0"}]}"#).unwrap();
        assert_eq!(element_from_json(&reg, &j).unwrap(), -GrassmannElement::product_of(&reg, &[0, 1]));
    }

    #[test]
    fn rejects_bad_input_with_position() {
        let reg = GeneratorRegistry::zetas(2).unwrap();
        let j: ElementJson = serde_json::from_str(r#"{"terms":[{"indices":[3],"re":"1","im":"0"}]}"#).unwrap();
        let e = element_from_json(&reg, &j).unwrap_err().to_string();
        assert!(e.contains("terms[0]"), "{e}");
        let j: ElementJson = serde_json::from_str(r#"{"terms":[{"indices":[1],"re":"0.5","im":"0"}]}"#).unwrap();
        assert!(element_from_json(&reg, &j).is_err());
    }

    #[test]
    fn phased_round_trip() {
        let reg = GeneratorRegistry::zetas(1).unwrap();
        let p = PhasedElement::phase(rat(1, 3), GrassmannElement::generator(&reg, 0))
            .try_add(&PhasedElement::one(&reg))
            .unwrap();
        let j = phased_to_json(&p);
        assert_eq!(phased_from_json(&reg, &j).unwrap(), p);
    }
}
