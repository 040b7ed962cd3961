//! Prints one PASS/FAIL line per acceptance criterion and exits nonzero if a
//! criterion expected to hold does not. Criterion 8 is known to be
//! unattainable: it must print `FAIL (unattainable)` and keep failing.

use std::collections::BTreeMap;
use std::process::ExitCode;

use superheis_core::verify::report::{CheckRecord, Report};
use superheis_core::verify::suites::{run_suite, SuiteContext};

const SEED: u64 = 20240601;

struct Reports(BTreeMap<&'static str, Report>);

impl Reports {
    fn rec(&self, name: &str) -> &CheckRecord {
        self.0
            .values()
            .find_map(|r| r.check(name))
            .unwrap_or_else(|| panic!("no check record named {name}"))
    }

    fn all_pass(&self, names: &[&str]) -> Result<(), String> {
        let bad: Vec<String> = names
            .iter()
            .filter(|n| !self.rec(n).passed())
            .map(|n| format!("{n}: {:?}", self.rec(n).verdict))
            .collect();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(bad.join("; "))
        }
    }

    fn constant(&self, names: &[&str]) -> Result<Vec<String>, String> {
        let mut notes = Vec::new();
        for n in names {
            let r = self.rec(n);
            if !r.constant_factor() {
                return Err(format!("{n}: not a pass and no constant factor"));
            }
            if let Some(f) = r.factor() {
                notes.push(format!("{n} factor {f}"));
            }
        }
        Ok(notes)
    }
}

fn cases(rec: &CheckRecord) -> usize {
    rec.cases
}

fn main() -> ExitCode {
    let ctx = SuiteContext::new(None, None, SEED).expect("default context");
    let all = run_suite("all", &ctx).expect("all suites");
    let r = Reports(BTreeMap::from([("all", all)]));

    let mut outcomes: Vec<(u32, &str, Result<String, String>)> = Vec::new();

    let c1 = ["core.product_oracle", "core.associativity", "core.graded_commutativity", "core.star", "core.parity_automorphism"];
    outcomes.push((
        1,
        "Grassmann core laws, exhaustive N=6 plus random",
        r.all_pass(&c1).and_then(|_| {
            let n = cases(r.rec("core.associativity"));
            if n >= 262_144 + 500 {
                Ok(format!("{n} associativity cases"))
            } else {
                Err(format!("only {n} associativity cases"))
            }
        }),
    ));

    let c2 = [
        "groups.heisenberg.polarized_matrix.n1",
        "groups.heisenberg.symmetric_exp.n1",
        "groups.heisenberg.algebra_product.n1",
        "groups.heisenberg.h_exp.n1",
        "groups.heisenberg.h_exp_intertwines.n1",
        "groups.heisenberg.associative_polarized.n1",
        "groups.heisenberg.associative_symmetric.n1",
        "groups.heisenberg.inverses.n1",
    ];
    outcomes.push((2, "classical group laws, 200 random", r.all_pass(&c2).map(|_| String::new())));

    outcomes.push((
        3,
        "μ³ = 0 for m = 1, 2, 3",
        r.all_pass(&["groups.fermionic.mu_cubed.m1", "groups.fermionic.mu_cubed.m2", "groups.fermionic.mu_cubed.m3"]).map(|_| String::new()),
    ));

    let c4: Vec<String> = [1, 2]
        .iter()
        .flat_map(|m| {
            ["polarized_matrix", "diamond_vs_polarized", "diamond_exponential", "associative", "inverses"]
                .map(|k| format!("groups.super.{k}.m{m}"))
        })
        .collect();
    outcomes.push((4, "super-Heisenberg laws, m = n ∈ {1,2}", r.all_pass(&c4.iter().map(String::as_str).collect::<Vec<_>>()).map(|_| String::new())));

    let c5 = [
        "transforms.pi1.homomorphism.m1",
        "transforms.pi1.homomorphism.m2",
        "transforms.pi1.unitarity.m1",
        "transforms.pi1.unitarity.m2",
        "transforms.weyl_factorization.m1",
        "transforms.weyl_factorization.m2",
        "transforms.weyl_factorization.m3",
    ];
    outcomes.push((5, "π₁ homomorphism and unitarity, Weyl factorization", r.all_pass(&c5).map(|_| String::new())));

    outcomes.push((
        6,
        "Fourier–Wigner origin, sign identity, covariance",
        r.all_pass(&["transforms.fw.origin.m1", "transforms.fw.origin.m2", "transforms.fw.covariance_derived"])
            .and_then(|_| r.constant(&["transforms.fw.inner_identity.m1", "transforms.fw.covariance"]))
            .map(|notes| notes.iter().map(|n| n.chars().take(60).collect::<String>()).collect::<Vec<_>>().join("; ")),
    ));

    outcomes.push((
        7,
        "Gaussian normalization, Pf² = det",
        r.all_pass(&["superfunctions.gaussian_normalization.m2", "superfunctions.gaussian_normalization.m4", "superfunctions.pfaffian_squared"])
            .map(|_| String::new()),
    ));

    let fock = r.all_pass(&["transforms.fock.orthonormality.m2"]).map(|_| String::new());
    outcomes.push((8, "Fock monomial orthonormality at m = 2", fock));

    outcomes.push((9, "Bargmann–Hermite single constant", r.constant(&["transforms.bargmann.hermite.m2"]).map(|n| n.join("; "))));

    outcomes.push((10, "β∘B = B∘π₁ at m = 2", r.constant(&["transforms.beta.intertwining.m2"]).map(|n| n.join("; "))));

    let c11 = [
        "oddons.mul_associativity.real",
        "oddons.mul_associativity.complex",
        "oddons.unit_anticommutes.real",
        "oddons.unit_anticommutes.complex",
        "oddons.inverse.real",
        "oddons.inverse.complex",
        "oddons.star_unit",
        "oddons.tau_square",
    ];
    outcomes.push((11, "oddon algebra laws", r.all_pass(&c11).map(|_| String::new())));

    outcomes.push((
        12,
        "odd exponent law",
        r.all_pass(&["oddons.exp_law_central.m1", "oddons.exp_law_central.m2"])
            .and_then(|_| r.constant(&["oddons.exp_law_increment_factor.m1", "oddons.exp_law_increment_factor.m2"]))
            .map(|n| n.join("; ")),
    ));

    outcomes.push((13, "odd FW reduces to even FW at m = 1", r.all_pass(&["oddons.fw_reduction.m1"]).map(|_| String::new())));

    outcomes.push((
        14,
        "SvN verdicts vs eigenvalue oracle and examples",
        r.all_pass(&["unitary.svn.eigenvalue_oracle", "unitary.svn.examples"]).and_then(|_| {
            let n = cases(r.rec("unitary.svn.eigenvalue_oracle"));
            if n >= 100 {
                Ok(format!("{n} random forms"))
            } else {
                Err(format!("only {n} random forms"))
            }
        }),
    ));

    outcomes.push((
        15,
        "sh(3|1) closure, Jacobi, Ad",
        r.all_pass(&["unitary.hc.ad_closure", "unitary.hc.bracket_table", "unitary.hc.graded_jacobi", "unitary.hc.ad_automorphism", "unitary.hc.dsigma"])
            .map(|_| String::new()),
    ));

    let once = r.0["all"].to_json();
    let again = run_suite("all", &ctx).expect("all").to_json();
    outcomes.push((
        16,
        "byte-identical JSON for equal seed and config",
        if again == once { Ok(format!("{} bytes", once.len())) } else { Err("reports differ".into()) },
    ));

    let mut ok = true;
    for (n, what, res) in &outcomes {
        match (n, res) {
            (8, Ok(_)) => {
                println!("criterion 8: UNEXPECTED PASS {what} (recorded as unattainable; update the ledger)");
                ok = false;
            }
            (8, Err(e)) => println!("criterion 8: FAIL (unattainable) {what} [{e}]"),
            (_, Ok(note)) if note.is_empty() => println!("criterion {n}: PASS {what}"),
            (_, Ok(note)) => println!("criterion {n}: PASS {what} [{note}]"),
            (_, Err(e)) => {
                println!("criterion {n}: FAIL {what} [{e}]");
                ok = false;
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
