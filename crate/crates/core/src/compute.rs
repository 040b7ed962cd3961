//! One-shot computations on JSON inputs, looked up by kind name.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::grassmann::json::{element_from_value, element_to_json};
use crate::grassmann::GeneratorRegistry;
use crate::linalg::RatMatrix;
use crate::oddons::{oddon_from_json, oddon_to_json, OddonJson};
use crate::superfunctions::pfaffian;
use crate::transforms::checks::{composite_context, composite_registry, registry};
use crate::transforms::fourier_wigner;
use crate::grassmann::Role;

pub trait ComputeKind: Send + Sync {
    fn name(&self) -> &'static str;
    /// Shape of the expected input, shown in usage errors.
    fn input_hint(&self) -> &'static str;
    fn compute(&self, input: &Value) -> Result<Value>;
}

fn field<'a>(input: &'a Value, key: &str) -> Result<&'a Value> {
    input.get(key).ok_or_else(|| Error::Parse(format!("missing field `{key}`")))
}

fn matrix(input: &Value, key: &str) -> Result<RatMatrix> {
    let rows: Vec<Vec<String>> =
        serde_json::from_value(field(input, key)?.clone()).map_err(|e| Error::Parse(format!("{key}: {e}")))?;
    RatMatrix::from_strings(&rows).map_err(|e| Error::Parse(format!("{key}: {e}")))
}

fn small_int(input: &Value, key: &str, max: usize) -> Result<usize> {
    let n = field(input, key)?.as_u64().ok_or_else(|| Error::Parse(format!("{key}: expected a positive integer")))?;
    if n == 0 || n as usize > max {
        return Err(Error::Parse(format!("{key}: {n} is outside 1..={max}")));
    }
    Ok(n as usize)
}

fn labels(reg: &GeneratorRegistry) -> Value {
    json!(reg.labels())
}

struct Pfaffian;
struct Fw;
struct Bargmann;
struct OddonMul;

impl ComputeKind for Pfaffian {
    fn name(&self) -> &'static str {
        "pfaffian"
    }
    fn input_hint(&self) -> &'static str {
        r#"{"G": [["0","1"],["-1","0"]]}"#
    }
    fn compute(&self, input: &Value) -> Result<Value> {
        let g = matrix(input, "G")?;
        Ok(json!({ "pfaffian": pfaffian(&g)?.to_string(), "det": g.det()?.to_string() }))
    }
}

impl ComputeKind for Fw {
    fn name(&self) -> &'static str {
        "fw"
    }
    fn input_hint(&self) -> &'static str {
        r#"{"m": 1, "f": {"terms": [...]}, "g": {"terms": [...]}} over generators ζ1..ζm, Π1..Πm, Θ1..Θm"#
    }
    fn compute(&self, input: &Value) -> Result<Value> {
        let m = small_int(input, "m", 4)?;
        let reg = registry(m, &[("pi", "Π", Role::Parameter), ("theta", "Θ", Role::Parameter)])?;
        let f = element_from_value(&reg, field(input, "f")?, "f")?;
        let g = element_from_value(&reg, field(input, "g")?, "g")?;
        let v = fourier_wigner(&f, &g, reg.block("zeta"), reg.block("pi"), reg.block("theta"))?;
        Ok(json!({ "generators": labels(&reg), "value": element_to_json(&v) }))
    }
}

impl ComputeKind for Bargmann {
    fn name(&self) -> &'static str {
        "bargmann"
    }
    fn input_hint(&self) -> &'static str {
        r#"{"G": [[...]], "f": {"terms": [...]}} over generators ζ1..ζm, Π1..Πm, Θ1..Θm"#
    }
    fn compute(&self, input: &Value) -> Result<Value> {
        let g = matrix(input, "G")?;
        let reg = composite_registry(g.rows())?;
        let ctx = composite_context(&reg, &g)?;
        let f = element_from_value(&reg, field(input, "f")?, "f")?;
        let v = ctx.transform(&f)?;
        Ok(json!({ "generators": labels(&reg), "value": element_to_json(&v) }))
    }
}

#[derive(Serialize, Deserialize)]
struct OddonMulInput {
    n: usize,
    left: OddonJson,
    right: OddonJson,
}

impl ComputeKind for OddonMul {
    fn name(&self) -> &'static str {
        "oddon-mul"
    }
    fn input_hint(&self) -> &'static str {
        r#"{"n": 2, "left": {"kind":"real","a":{...},"b":{...}}, "right": {...}} over generators ζ1..ζn"#
    }
    fn compute(&self, input: &Value) -> Result<Value> {
        let parsed: OddonMulInput = serde_json::from_value(input.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let reg = GeneratorRegistry::zetas(parsed.n)?;
        let l = oddon_from_json(&reg, &parsed.left).map_err(|e| Error::Parse(format!("left: {e}")))?;
        let r = oddon_from_json(&reg, &parsed.right).map_err(|e| Error::Parse(format!("right: {e}")))?;
        Ok(json!({ "generators": labels(&reg), "product": oddon_to_json(&l.try_mul(&r)?) }))
    }
}

pub struct ComputeRegistry {
    kinds: Vec<Box<dyn ComputeKind>>,
}

impl Default for ComputeRegistry {
    fn default() -> Self {
        ComputeRegistry { kinds: vec![Box::new(Fw), Box::new(Bargmann), Box::new(Pfaffian), Box::new(OddonMul)] }
    }
}

impl ComputeRegistry {
    pub fn register(&mut self, kind: Box<dyn ComputeKind>) {
        self.kinds.push(kind);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.kinds.iter().map(|k| k.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn ComputeKind> {
        self.kinds.iter().find(|k| k.name() == name).map(|k| k.as_ref())
    }

    pub fn run(&self, name: &str, input: &Value) -> Result<Value> {
        let kind = self
            .get(name)
            .ok_or_else(|| Error::Parse(format!("unknown compute kind `{name}` (expected one of {})", self.names().join(", "))))?;
        kind.compute(input)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pfaffian_of_canonical_four() {
        let out = ComputeRegistry::default()
            .run("pfaffian", &json!({"G": [["0","1","0","0"],["-1","0","0","0"],["0","0","0","1"],["0","0","-1","0"]]}))
            .unwrap();
        assert_eq!(out["pfaffian"], "1");
        assert_eq!(out["det"], "1");
    }

    #[test]
    fn fw_of_ones_at_m1() {
        let one = json!({"terms": [{"indices": [], "re": "1", "im": "0"}]});
        let out = ComputeRegistry::default().run("fw", &json!({"m": 1, "f": one, "g": one})).unwrap();
        // −iΘ1: Θ1 is generator 3 after ζ1, Π1
        assert_eq!(out["value"], json!({"terms": [{"indices": [3], "re": "0", "im": "-1"}]}));
    }

    #[test]
    fn oddon_mul_of_unit_and_zeta() {
        let zero = json!({"terms": []});
        let one = json!({"terms": [{"indices": [], "re": "1", "im": "0"}]});
        let z1 = json!({"terms": [{"indices": [1], "re": "1", "im": "0"}]});
        let input = json!({"n": 1, "left": {"kind": "real", "a": zero, "b": one}, "right": {"kind": "real", "a": z1, "b": zero}});
        let out = ComputeRegistry::default().run("oddon-mul", &input).unwrap();
        assert_eq!(out["product"], json!({"kind": "real", "a": {"terms": []}, "b": {"terms": [{"indices": [1], "re": "1", "im": "0"}]}}));
    }

    #[test]
    fn schema_errors_carry_positions() {
        let bad = json!({"m": 1, "f": {"terms": [{"indices": [9], "re": "1", "im": "0"}]}, "g": {"terms": []}});
        let err = ComputeRegistry::default().run("fw", &bad).unwrap_err().to_string();
        assert!(err.contains("f.terms[0]"), "{err}");
        assert!(ComputeRegistry::default().run("nope", &json!({})).is_err());
    }
}
