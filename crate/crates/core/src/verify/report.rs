//! Check records and suite reports.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    ExactDiscrepancy,
    Error,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiscrepancyKind {
    /// One exact factor relates both sides on every case.
    Factor,
    /// No single factor exists; `value` holds the first nonzero difference.
    Difference,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub kind: DiscrepancyKind,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    /// The identity being checked, written out as a formula.
    pub identity: String,
    pub inputs: String,
    pub cases: usize,
    pub lhs: String,
    pub rhs: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancy_factor: Option<Discrepancy>,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Pass, or an exact discrepancy explained by one constant factor.
    pub fn constant_factor(&self) -> bool {
        match self.verdict {
            Verdict::Pass => true,
            Verdict::ExactDiscrepancy => {
                matches!(&self.discrepancy_factor, Some(d) if d.kind == DiscrepancyKind::Factor)
            }
            Verdict::Error => false,
        }
    }

    pub fn factor(&self) -> Option<&str> {
        match &self.discrepancy_factor {
            Some(d) if d.kind == DiscrepancyKind::Factor => Some(&d.value),
            _ => None,
        }
    }

    pub fn error(name: &str, identity: &str, inputs: &str, message: String) -> Self {
        CheckRecord {
            name: name.to_string(),
            identity: identity.to_string(),
            inputs: inputs.to_string(),
            cases: 0,
            lhs: message,
            rhs: String::new(),
            verdict: Verdict::Error,
            discrepancy_factor: None,
        }
    }

    /// Single boolean outcome with rendered sides.
    pub fn boolean(name: &str, identity: &str, inputs: &str, cases: usize, ok: bool, lhs: String, rhs: String) -> Self {
        CheckRecord {
            name: name.to_string(),
            identity: identity.to_string(),
            inputs: inputs.to_string(),
            cases,
            lhs: lhs.clone(),
            rhs: rhs.clone(),
            verdict: if ok { Verdict::Pass } else { Verdict::ExactDiscrepancy },
            discrepancy_factor: (!ok).then(|| Discrepancy {
                kind: DiscrepancyKind::Difference,
                value: format!("{lhs} ≠ {rhs}"),
            }),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub exact_discrepancy: usize,
    pub error: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Convention {
    pub name: &'static str,
    pub value: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportConfig {
    pub suite: String,
    pub m: usize,
    pub seed: u64,
    pub g: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub config: ReportConfig,
    pub summary: Summary,
    pub checks: Vec<CheckRecord>,
    pub conventions: Vec<Convention>,
}

impl Report {
    pub fn new(config: ReportConfig, mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let mut summary = Summary { total: checks.len(), ..Summary::default() };
        for c in &checks {
            match c.verdict {
                Verdict::Pass => summary.pass += 1,
                Verdict::ExactDiscrepancy => summary.exact_discrepancy += 1,
                Verdict::Error => summary.error += 1,
            }
        }
        Report { config, summary, checks, conventions: conventions() }
    }

    pub fn has_errors(&self) -> bool {
        self.summary.error > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Sign and normalization choices every computation inherits.
pub fn conventions() -> Vec<Convention> {
    vec![
        Convention { name: "berezin", value: "∫dζ_m…dζ_1 ζ_1…ζ_m = 1; the derivative in ζ_1 acts first" },
        Convention { name: "derivative", value: "left derivative, sign (−1)^(generators before j)" },
        Convention { name: "star", value: "conjugate coefficients, odd part times −i, (ab)* = b*a*" },
        Convention { name: "quadratic_form", value: "ζGζ = Σ_{i<j} G_ij ζ_i ζ_j" },
        Convention { name: "hermite", value: "h^I = H_k e^{−½ζGζ} ∂_{i1}(…∂_{ik} e^{ζGζ}), H_k = 1 by default" },
        Convention { name: "bargmann", value: "A = G/2 bilinear; z_k = A_kj Π_j + iΘ_k; kernel e^{½ζᵀAζ − ζz − ¼zᵀA⁻¹z}; prefactor 2^{−m/2}" },
        Convention { name: "fock_norm", value: "‖z‖² = ½ z*ᵀA⁻¹z with the super-star; measure over z_1..z_m then z*_1..z*_m" },
        Convention { name: "fw_inner_variables", value: "integration order Π_1..Π_m then Θ_1..Θ_m" },
        Convention { name: "pi1_order", value: "π₁(g)π₁(g′) compared with π₁(g′⋄g)" },
        Convention { name: "odd_star_matrix", value: "(A∗B)_ik = Σ_j A_ij·1̂·B_jk, unit 1̂·Id" },
        Convention { name: "complex_oddon", value: "ι̂ = i·1̂ over complex coefficients" },
        Convention { name: "phase", value: "U(φ) = e^{iφ} kept symbolic, U(φ)U(φ′) = U(φ+φ′)" },
    ]
}
