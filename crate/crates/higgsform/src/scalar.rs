//! Exact Gaussian-rational scalars.
//!
//! Every coefficient in this crate is a complex number whose real and
//! imaginary parts are arbitrary-precision rationals, so algebraic identities
//! can be checked with `==` instead of tolerances.

use num::bigint::BigInt;
use num::complex::Complex;
use num::rational::BigRational;
use num::traits::{One, Zero};

/// Exact rational number.
pub type Rat = BigRational;

/// Exact Gaussian rational: `re + im·i` with both parts rational.
pub type Scalar = Complex<Rat>;

/// Rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from an integer.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Real scalar from an integer.
pub fn sint(n: i64) -> Scalar {
    Scalar::new(rint(n), Rat::zero())
}

/// Real scalar `n/d`.
pub fn srat(n: i64, d: i64) -> Scalar {
    Scalar::new(rat(n, d), Rat::zero())
}

/// Scalar from a rational.
pub fn from_rat(r: Rat) -> Scalar {
    Scalar::new(r, Rat::zero())
}

/// Scalar `re + im·i` from two rationals.
pub fn gauss(re: Rat, im: Rat) -> Scalar {
    Scalar::new(re, im)
}

/// The imaginary unit.
pub fn i_unit() -> Scalar {
    Scalar::new(Rat::zero(), Rat::one())
}

/// `0`.
pub fn zero() -> Scalar {
    Scalar::zero()
}

/// `1`.
pub fn one() -> Scalar {
    Scalar::one()
}

/// Complex conjugate.
pub fn conj(s: &Scalar) -> Scalar {
    Scalar::new(s.re.clone(), -s.im.clone())
}

/// `|s|² = s·conj(s)`, always a real rational.
pub fn norm_sqr(s: &Scalar) -> Rat {
    &s.re * &s.re + &s.im * &s.im
}

/// Renders a rational as `p/q`, or plain `p` when the denominator is one.
pub fn rat_str(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders a scalar compactly: `2`, `i`, `-3/2i`, `1+i`, `1/2-2i`.
pub fn scalar_str(s: &Scalar) -> String {
    if s.im.is_zero() {
        return rat_str(&s.re);
    }
    let im_part = if s.im.is_one() {
        "i".to_string()
    } else if (-s.im.clone()).is_one() {
        "-i".to_string()
    } else {
        format!("{}i", rat_str(&s.im))
    };
    if s.re.is_zero() {
        im_part
    } else if s.im.is_negative() {
        format!("{}{}", rat_str(&s.re), im_part)
    } else {
        format!("{}+{}", rat_str(&s.re), im_part)
    }
}

/// Parses a rational from `p`, `p/q`, or decimal-free signed integers.
pub fn parse_rat(text: &str) -> Result<Rat, String> {
    let t = text.trim();
    if t.is_empty() {
        return Err("empty rational".to_string());
    }
    match t.split_once('/') {
        None => t
            .parse::<BigInt>()
            .map(Rat::from_integer)
            .map_err(|e| format!("bad integer {t:?}: {e}")),
        Some((num, den)) => {
            let n = num
                .trim()
                .parse::<BigInt>()
                .map_err(|e| format!("bad numerator {num:?}: {e}"))?;
            let d = den
                .trim()
                .parse::<BigInt>()
                .map_err(|e| format!("bad denominator {den:?}: {e}"))?;
            if d.is_zero() {
                return Err(format!("zero denominator in {t:?}"));
            }
            Ok(Rat::new(n, d))
        }
    }
}

trait IsNegative {
    fn is_negative(&self) -> bool;
}

impl IsNegative for Rat {
    fn is_negative(&self) -> bool {
        use num::traits::Signed;
        Signed::is_negative(self)
    }
}
