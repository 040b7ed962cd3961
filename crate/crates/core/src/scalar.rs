//! Exact complex-rational scalars and their text form.

use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;
pub type Scalar = Complex<Rational>;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn real(r: Rational) -> Scalar {
    Complex::new(r, Rational::zero())
}

pub fn cplx(re: Rational, im: Rational) -> Scalar {
    Complex::new(re, im)
}

pub fn s(numer: i64, denom: i64) -> Scalar {
    real(rat(numer, denom))
}

pub fn imag_unit() -> Scalar {
    Complex::new(Rational::zero(), Rational::one())
}

pub fn i_times(r: Rational) -> Scalar {
    Complex::new(Rational::zero(), r)
}

/// Parses `"p/q"` or `"p"`; decimals and zero denominators are rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    if t.is_empty() || t.contains('.') || t.contains('e') || t.contains('E') {
        return Err(Error::Parse(format!("`{text}` is not a p/q rational")));
    }
    if let Some((_, d)) = t.split_once('/') {
        if BigInt::from_str(d.trim()).map(|d| d.is_zero()).unwrap_or(false) {
            return Err(Error::Parse(format!("`{text}` has a zero denominator")));
        }
    }
    Rational::from_str(t).map_err(|_| Error::Parse(format!("`{text}` is not a p/q rational")))
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Human-readable form used in reports, e.g. `1/2`, `-i`, `(1/2-3/4i)`.
pub fn format_scalar(c: &Scalar) -> String {
    let re = &c.re;
    let im = &c.im;
    if im.is_zero() {
        return re.to_string();
    }
    let im_part = if im.is_one() {
        "i".to_string()
    } else if (-im).is_one() {
        "-i".to_string()
    } else {
        format!("{im}i")
    };
    if re.is_zero() {
        return im_part;
    }
    let sign = if im.is_negative() { "" } else { "+" };
    format!("({re}{sign}{im_part})")
}

/// Integer power of a scalar; negative exponents invert.
pub fn pow(c: &Scalar, e: i32) -> Scalar {
    let mut out = Scalar::one();
    let base = if e < 0 { c.inv() } else { c.clone() };
    for _ in 0..e.unsigned_abs() {
        out = out * base.clone();
    }
    out
}

/// Exact square root of a nonnegative rational when it exists.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

pub fn two_pow(e: i64) -> Rational {
    let two = int(2);
    let mut out = Rational::one();
    for _ in 0..e.unsigned_abs() {
        out *= &two;
    }
    if e < 0 {
        out.recip()
    } else {
        out
    }
}

pub fn factorial_inv(k: usize) -> Rational {
    let mut f = BigInt::one();
    for i in 2..=k {
        f *= i;
    }
    Rational::new(BigInt::one(), f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
    }

    #[test]
    fn rejects_decimals_and_zero_denominators() {
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn formats_scalars() {
        assert_eq!(format_scalar(&s(1, 2)), "1/2");
        assert_eq!(format_scalar(&imag_unit()), "i");
        assert_eq!(format_scalar(&-imag_unit()), "-i");
        assert_eq!(format_scalar(&cplx(rat(1, 2), rat(-3, 4))), "(1/2-3/4i)");
    }

    #[test]
    fn square_roots() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&int(2)), None);
        assert_eq!(rational_sqrt(&int(-4)), None);
    }
}
