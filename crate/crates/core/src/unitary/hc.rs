//! The Harish-Chandra pair `(H₃, sh(3|1))` as 4×4 matrices with rows and
//! columns 0..2 even and 3 odd.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::grassmann::Parity;
use crate::linalg::{Dual, Matrix, RatMatrix};
use crate::scalar::{int, Rational};

/// Slots of the algebra basis: `a = E01`, `b = E12`, `c = E02`, `α = E03`.
pub const SLOTS: [(&str, usize, usize); 4] = [("a", 0, 1), ("b", 1, 2), ("c", 0, 2), ("α", 0, 3)];

fn row_parity(i: usize) -> usize {
    usize::from(i == 3)
}

pub fn unit(i: usize, j: usize) -> RatMatrix {
    let mut e = RatMatrix::zeros(4, 4, &int(0));
    e.set(i, j, int(1));
    e
}

pub fn basis() -> Vec<RatMatrix> {
    SLOTS.iter().map(|&(_, i, j)| unit(i, j)).collect()
}

pub fn basis_parity(k: usize) -> Parity {
    let (_, i, j) = SLOTS[k];
    if (row_parity(i) + row_parity(j)) % 2 == 0 {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// `a·E01 + b·E12 + c·E02 + α·E03`.
pub fn element(coords: &[Rational; 4]) -> RatMatrix {
    let mut out = RatMatrix::zeros(4, 4, &int(0));
    for (k, &(_, i, j)) in SLOTS.iter().enumerate() {
        out.set(i, j, coords[k].clone());
    }
    out
}

/// Coordinates of `x` in the basis, or the first entry outside the algebra.
pub fn coordinates(x: &RatMatrix) -> Result<[Rational; 4]> {
    for i in 0..4 {
        for j in 0..4 {
            if !x.get(i, j).is_zero() && !SLOTS.iter().any(|&(_, a, b)| (a, b) == (i, j)) {
                return Err(Error::Dimension(format!("entry ({i},{j}) = {} lies outside sh(3|1)", x.get(i, j))));
            }
        }
    }
    Ok(SLOTS.map(|(_, i, j)| x.get(i, j).clone()))
}

/// `[X,Y] = XY − (−1)^{|X||Y|} YX` for homogeneous `X`, `Y`.
pub fn graded_bracket(x: &RatMatrix, px: Parity, y: &RatMatrix, py: Parity) -> Result<RatMatrix> {
    let xy = x.mul(y)?;
    let yx = y.mul(x)?;
    if px == Parity::Odd && py == Parity::Odd {
        xy.add(&yx)
    } else {
        xy.sub(&yx)
    }
}

/// `g = I + xE01 + yE12 + tE02`.
pub fn group_element(x: &Rational, y: &Rational, t: &Rational) -> RatMatrix {
    let mut g = RatMatrix::identity(4, &int(0));
    g.set(0, 1, x.clone());
    g.set(1, 2, y.clone());
    g.set(0, 2, t.clone());
    g
}

/// `Ad(g)Y = gYg⁻¹`.
pub fn ad(g: &RatMatrix, y: &RatMatrix) -> Result<RatMatrix> {
    g.mul(y)?.mul(&g.inverse()?)
}

/// First-order part of `Ad(I + εX)Y`, computed over dual numbers.
pub fn d_sigma(x: &RatMatrix, y: &RatMatrix) -> Result<RatMatrix> {
    let zero = Dual::new(int(0), int(0));
    let id = Matrix::identity(4, &zero);
    let lift = |m: &RatMatrix, eps: bool| m.map(|v| if eps { Dual::new(int(0), v.clone()) } else { Dual::new(v.clone(), int(0)) });
    let g = id.add(&lift(x, true))?;
    let g_inv = id.sub(&lift(x, true))?;
    if g.mul(&g_inv)? != id {
        return Err(Error::Singular);
    }
    let out = g.mul(&lift(y, false))?.mul(&g_inv)?;
    if out.map(|d| d.re.clone()) != *y {
        return Err(Error::Dimension("zeroth order of Ad(I+εX)Y differs from Y".into()));
    }
    Ok(out.map(|d| d.eps.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_and_b_bracket_to_c() {
        let b = basis();
        let br = graded_bracket(&b[0], Parity::Even, &b[1], Parity::Even).unwrap();
        assert_eq!(br, b[2]);
        assert_eq!(basis_parity(3), Parity::Odd);
    }

    #[test]
    fn coordinates_reject_outside_entries() {
        assert!(coordinates(&unit(1, 3)).is_err());
        let c = [int(1), int(2), int(3), int(4)];
        assert_eq!(coordinates(&element(&c)).unwrap(), c);
    }
}
