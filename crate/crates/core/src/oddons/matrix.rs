//! Oddon matrices under the ∗-product.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Oddon, OddonKind};
use crate::error::{Error, Result};
use crate::grassmann::GrassmannElement;
use crate::linalg::{Matrix, Ring};
use crate::scalar::factorial_inv;

/// Where `1̂` sits in each entry product of a matrix ∗-product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Placement {
    /// `Σ 1̂·A_ij·B_jk`
    Left,
    /// `Σ A_ij·1̂·B_jk`
    Middle,
    /// `Σ A_ij·B_jk·1̂`
    Right,
}

impl Placement {
    pub const ALL: [Placement; 3] = [Placement::Left, Placement::Middle, Placement::Right];
    /// The placement used everywhere else.
    pub const FROZEN: Placement = Placement::Middle;
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Placement::Left => "left",
            Placement::Middle => "middle",
            Placement::Right => "right",
        })
    }
}

impl FromStr for Placement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Placement::Left),
            "middle" => Ok(Placement::Middle),
            "right" => Ok(Placement::Right),
            other => Err(Error::Parse(format!("unknown placement `{other}` (left, middle, right)"))),
        }
    }
}

pub type OddonMatrix = Matrix<Oddon>;

fn sample(a: &OddonMatrix) -> Result<&Oddon> {
    a.entries().first().ok_or_else(|| Error::Dimension("empty matrix".into()))
}

/// `A ∗ B` with the unit inserted at `placement`.
pub fn star_mul(a: &OddonMatrix, b: &OddonMatrix, placement: Placement) -> Result<OddonMatrix> {
    let s = sample(a)?;
    if s.kind() != OddonKind::Real {
        return Err(Error::WrongMode("the ∗-product is defined for real oddons".into()));
    }
    let u = Oddon::unit(s.kind(), s.registry());
    match placement {
        Placement::Left => a.mul_with(b, |x, y| u.mul(x).mul(y)),
        Placement::Middle => a.mul_with(b, |x, y| x.mul(&u).mul(y)),
        Placement::Right => a.mul_with(b, |x, y| x.mul(y).mul(&u)),
    }
}

/// `1̂·Id`, the two-sided ∗-unit under middle placement.
pub fn star_identity(n: usize, s: &Oddon) -> OddonMatrix {
    let mut out = Matrix::zeros(n, n, s);
    for i in 0..n {
        out.set(i, i, Oddon::unit(s.kind(), s.registry()));
    }
    out
}

/// `1̂·Id + Σ_{n≥1} A^{∗n}/n!`, stopping at the first vanishing power.
pub fn matrix_odd_exp(a: &OddonMatrix, placement: Placement) -> Result<OddonMatrix> {
    let s = sample(a)?.clone();
    if !a.is_square() {
        return Err(Error::Dimension("∗-exponential needs a square matrix".into()));
    }
    let mut out = star_identity(a.rows(), &s);
    let mut power = a.clone();
    let cap = a.rows() + s.registry().len() + 2;
    for n in 1..=cap {
        if power.is_zero() {
            return Ok(out);
        }
        out = out.add(&power.scale_rat(&factorial_inv(n)))?;
        power = star_mul(&power, a, placement)?;
    }
    Err(Error::NotNilpotent("matrix is not ∗-nilpotent".into()))
}

/// The odd analogue of `μ`: row 0 is `(0, τ, p)`, rows `2..` carry `Θ` in
/// column 1.
pub fn odd_mu(p: &[Oddon], theta: &[GrassmannElement], tau: &Oddon) -> Result<OddonMatrix> {
    let m = p.len();
    if theta.len() != m {
        return Err(Error::Dimension(format!("p has length {m}, Θ has length {}", theta.len())));
    }
    let mut out = Matrix::zeros(m + 2, m + 2, &tau.zero_like());
    out.set(0, 1, tau.clone());
    for j in 0..m {
        out.set(0, 2 + j, p[j].clone());
        out.set(2 + j, 1, Oddon::plain(tau.kind(), theta[j].clone()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::{GeneratorRegistry, Role};
    use crate::scalar::rat;

    #[test]
    fn mu_star_cubes_vanish_and_exp_terminates() {
        let reg = GeneratorRegistry::builder()
            .block("pi", "Π", 2, Role::Parameter)
            .block("theta", "Θ", 2, Role::Parameter)
            .build()
            .unwrap();
        let p: Vec<Oddon> =
            (0..2).map(|j| Oddon::hatted(OddonKind::Real, GrassmannElement::generator(&reg, j))).collect();
        let th: Vec<GrassmannElement> = (2..4).map(|j| GrassmannElement::generator(&reg, j)).collect();
        let tau = Oddon::unit(OddonKind::Real, &reg).scale_rat(&rat(1, 3));
        let mu = odd_mu(&p, &th, &tau).unwrap();
        let sq = star_mul(&mu, &mu, Placement::Middle).unwrap();
        assert!(!sq.is_zero());
        assert!(star_mul(&sq, &mu, Placement::Middle).unwrap().is_zero());
        let e = matrix_odd_exp(&mu, Placement::Middle).unwrap();
        assert_eq!(*e.get(0, 0), Oddon::unit(OddonKind::Real, &reg));
    }

    #[test]
    fn placement_names_round_trip() {
        for p in Placement::ALL {
            assert_eq!(p.to_string().parse::<Placement>().unwrap(), p);
        }
        assert!("top".parse::<Placement>().is_err());
    }
}
