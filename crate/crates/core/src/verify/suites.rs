//! Named verification suites behind one registry of trait objects.

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::verify::random::{rng, CaseRng};
use crate::verify::report::{CheckRecord, Report, ReportConfig};
use crate::{grassmann, groups, oddons, superfunctions, transforms, unitary};

/// Largest `m` a suite accepts.
pub const MAX_M: usize = 4;

/// Inputs shared by every suite. `m = None` runs the default sweep of each
/// suite; `Some(m)` restricts dimension-indexed checks to that `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteContext {
    pub m: Option<usize>,
    pub g: Option<RatMatrix>,
    pub seed: u64,
}

impl SuiteContext {
    pub fn new(m: Option<usize>, g: Option<RatMatrix>, seed: u64) -> Result<Self> {
        if let Some(m) = m {
            if m == 0 || m > MAX_M {
                return Err(Error::Dimension(format!("m = {m} is outside 1..={MAX_M}")));
            }
        }
        if let (Some(m), Some(g)) = (m, &g) {
            if g.rows() != m || g.cols() != m {
                return Err(Error::Dimension(format!("G is {}×{} but m = {m}", g.rows(), g.cols())));
            }
        }
        if let Some(g) = &g {
            if !g.is_antisymmetric() {
                return Err(Error::NotAntisymmetric);
            }
        }
        Ok(SuiteContext { m, g, seed })
    }

    /// The requested `m`, or `default`.
    pub fn dims(&self, default: &[usize]) -> Vec<usize> {
        match self.m {
            Some(m) => vec![m],
            None => default.to_vec(),
        }
    }

    /// The supplied form, else the canonical one at `m` (default 2).
    pub fn form(&self) -> RatMatrix {
        self.g.clone().unwrap_or_else(|| RatMatrix::canonical_symplectic(self.m.unwrap_or(2)))
    }

    /// Per-suite generator, so a suite draws the same cases alone or inside `all`.
    pub fn rng_for(&self, salt: u64) -> CaseRng {
        rng(self.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }

    fn g_label(&self) -> String {
        match &self.g {
            Some(g) => g.render(),
            None => format!("canonical({})", self.m.unwrap_or(2)),
        }
    }
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self, ctx: &SuiteContext) -> Vec<CheckRecord>;
}

struct Core;
struct Groups;
struct Superfunctions;
struct Fw;
struct Pi1;
struct Bargmann;
struct Oddons;
struct Unitary;

impl Suite for Core {
    fn name(&self) -> &'static str {
        "core"
    }
    fn description(&self) -> &'static str {
        "Grassmann ring laws, grading, star, J, Berezin, shifts, exponentials"
    }
    fn run(&self, ctx: &SuiteContext) -> Vec<CheckRecord> {
        use grassmann::checks::*;
        let mut r = ctx.rng_for(1);
        vec![
            product_oracle(6),
            associativity(&mut r, 6, 500),
            graded_commutativity(&mut r, 6, 500),
            star_laws(&mut r, 6, 500),
            parity_automorphism(&mut r, 6, 500),
            berezin_kills_derivatives(&mut r, 100),
            shift_homomorphism(&mut r, 200),
            exp_law(&mut r, 100),
        ]
    }
}

impl Suite for Groups {
    fn name(&self) -> &'static str {
        "groups"
    }
    fn description(&self) -> &'static str {
        "classical and super Heisenberg group laws"
    }
    fn run(&self, ctx: &SuiteContext) -> Vec<CheckRecord> {
        use groups::checks::*;
        let mut r = ctx.rng_for(2);
        let mut out = vec![polarized_matrix(&mut r, 1, 200), symmetric_exp(&mut r, 1, 200)];
        out.extend(h_exp(&mut r, 1, 200));
        out.extend(lie_algebra_product(&mut r, 1, 200));
        out.extend(classical_axioms(&mut r, 1, 200));
        for m in ctx.dims(&[1, 2, 3]) {
            out.push(mu_nilpotent(&mut r, m));
        }
        for m in ctx.dims(&[1, 2]) {
            out.extend(super_laws(&mut r, m, 50));
            out.extend(super_examples(&mut r, m));
            out.extend(b_symmetry(&mut r, m));
        }
        out
    }
}

impl Suite for Superfunctions {
    fn name(&self) -> &'static str {
        "superfunctions"
    }
    fn description(&self) -> &'static str {
        "inner product, adjoints, Pfaffian, Gaussian vacuum, super-Hermite family"
    }
    fn run(&self, ctx: &SuiteContext) -> Vec<CheckRecord> {
        use superfunctions::checks::*;
        let mut r = ctx.rng_for(3);
        let mut out = vec![inner_examples(), pfaffian_squared(&mut r, &[2, 4, 6], 100), gaussian_gate(), hermite_gram_check()];
        for m in ctx.dims(&[1, 2]) {
            out.extend(adjoints(&mut r, m, 50));
            out.push(sesquilinear(&mut r, m, 50));
        }
        for m in ctx.dims(&[2, 4]).into_iter().filter(|m| m % 2 == 0) {
            out.push(gaussian_normalization(m));
            out.push(gaussian_nilpotent(m));
        }
        for m in ctx.dims(&[2]).into_iter().filter(|m| m % 2 == 0) {
            out.push(hermite_parity(m));
        }
        out
    }
}

impl Suite for Fw {
    fn name(&self) -> &'static str {
        "fw"
    }
    fn description(&self) -> &'static str {
        "Fourier–Wigner transform: origin value, sign identity, covariance"
    }
    fn run(&self, ctx: &SuiteContext) -> Vec<CheckRecord> {
        use transforms::checks::*;
        let mut out = vec![fw_examples()];
        out.extend(fw_covariance());
        for m in ctx.dims(&[1, 2]) {
            out.push(fw_origin(m));
            out.push(fw_inner(m));
        }
        out
    }
}

impl Suite for Pi1 {
    fn name(&self) -> &'static str {
        "pi1"
    }
    fn description(&self) -> &'static str {
        "Schrödinger-type representation: homomorphism, unitarity, Weyl factorization"
    }
    fn run(&self, ctx: &SuiteContext) -> Vec<CheckRecord> {
        use transforms::checks::*;
        let mut out = vec![pi1_examples()];
        for m in ctx.dims(&[1, 2]) {
            out.extend(pi1_homomorphism(m));
            out.push(pi1_unitarity(m));
        }
        for m in ctx.dims(&[1, 2, 3]) {
            out.extend(weyl(m));
        }
        out
    }
}

impl Suite for Bargmann {
    fn name(&self) -> &'static str {
        "bargmann"
    }
    fn description(&self) -> &'static str {
        "Bargmann transform, Fock space, β intertwining"
    }
    fn run(&self, ctx: &SuiteContext) -> Vec<CheckRecord> {
        use transforms::checks::*;
        let g = ctx.form();
        let mut out = vec![bargmann_hermite(&g), bargmann_basics(&g), fock_isometry(&g), z_group_law(&g)];
        out.extend(bargmann_fw(&g));
        out.extend(fock_orthonormality(&g));
        out.extend(beta_intertwining(&g));
        out
    }
}

impl Suite for Oddons {
    fn name(&self) -> &'static str {
        "oddons"
    }
    fn description(&self) -> &'static str {
        "oddon algebra, odd exponent law, odd Heisenberg group, odd transforms"
    }
    fn run(&self, ctx: &SuiteContext) -> Vec<CheckRecord> {
        use oddons::checks::*;
        let mut r = ctx.rng_for(8);
        let mut out = mul_laws(&mut r, 500);
        out.extend(unit_laws());
        out.extend(even_closure());
        out.extend(inverse_laws(&mut r, 100));
        out.extend(star_laws(&mut r, 100));
        out.push(tau_square());
        out.extend(placement_search(&mut r, 20));
        for m in ctx.dims(&[1, 2]) {
            out.extend(exp_law(m));
            out.extend(odd_pi(m));
            out.push(odd_fw(m));
        }
        out.extend(b1_laws(&mut r, 2, 50));
        out.extend(group_laws(&mut r, 2, 100));
        let g = ctx.form();
        if g.rows() % 2 == 0 && g.rows() <= 2 {
            out.push(odd_bargmann(&mut r, &g, 50));
        }
        out
    }
}

impl Suite for Unitary {
    fn name(&self) -> &'static str {
        "unitary"
    }
    fn description(&self) -> &'static str {
        "super-Hilbert form, super Stone–von Neumann criterion, sh(3|1)"
    }
    fn run(&self, ctx: &SuiteContext) -> Vec<CheckRecord> {
        use unitary::checks::*;
        let mut r = ctx.rng_for(9);
        let mut out = form_laws(&mut r, 20);
        out.extend(svn_laws(&mut r, 100));
        out.extend(hc_laws(&mut r, 20));
        out
    }
}

/// The registered suites; `all` runs each of them in registration order.
pub struct SuiteRegistry {
    suites: Vec<Box<dyn Suite>>,
}

impl Default for SuiteRegistry {
    fn default() -> Self {
        SuiteRegistry {
            suites: vec![
                Box::new(Core),
                Box::new(Groups),
                Box::new(Superfunctions),
                Box::new(Fw),
                Box::new(Bargmann),
                Box::new(Pi1),
                Box::new(Oddons),
                Box::new(Unitary),
            ],
        }
    }
}

impl SuiteRegistry {
    pub fn register(&mut self, suite: Box<dyn Suite>) {
        self.suites.push(suite);
    }

    /// Suite names plus `all`.
    pub fn names(&self) -> Vec<&'static str> {
        self.suites.iter().map(|s| s.name()).chain(std::iter::once("all")).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn Suite> {
        self.suites.iter().find(|s| s.name() == name).map(|s| s.as_ref())
    }

    pub fn describe(&self) -> Vec<(&'static str, &'static str)> {
        self.suites.iter().map(|s| (s.name(), s.description())).collect()
    }

    pub fn run(&self, name: &str, ctx: &SuiteContext) -> Result<Report> {
        let checks = if name == "all" {
            self.suites.iter().flat_map(|s| s.run(ctx)).collect()
        } else {
            self.get(name)
                .ok_or_else(|| Error::Parse(format!("unknown suite `{name}` (expected one of {})", self.names().join(", "))))?
                .run(ctx)
        };
        let config = ReportConfig { suite: name.to_string(), m: ctx.m.unwrap_or(0), seed: ctx.seed, g: ctx.g_label() };
        Ok(Report::new(config, checks))
    }
}

/// `SuiteRegistry::default().run(..)`.
pub fn run_suite(name: &str, ctx: &SuiteContext) -> Result<Report> {
    SuiteRegistry::default().run(name, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_refused() {
        let ctx = SuiteContext::new(None, None, 1).unwrap();
        assert!(run_suite("bogus", &ctx).is_err());
        assert!(SuiteRegistry::default().names().contains(&"all"));
    }

    #[test]
    fn context_validation() {
        assert!(SuiteContext::new(Some(5), None, 0).is_err());
        assert!(SuiteContext::new(Some(2), Some(RatMatrix::canonical_symplectic(4)), 0).is_err());
        assert!(SuiteContext::new(Some(2), Some(RatMatrix::from_ints(&[&[1, 0], &[0, 1]])), 0).is_err());
    }
}
