//! Arbitrary-precision rational scalars.
//!
//! Every geometric quantity in the crate is a [`Rational`]: a reduced
//! fraction with positive denominator (the canonical form is maintained by
//! the underlying `num` types after every operation). Parsing and formatting
//! use the `num/den` syntax shared by the point-file and matrix-triplet
//! formats; a bare integer is accepted as `num/1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar: reduced fraction, denominator > 0.
pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `num/den` or a bare integer `num`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational".to_string());
    }
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| format!("bad integer `{s}`"))?;
            Ok(Rational::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num
                .parse()
                .map_err(|_| format!("bad numerator `{num}`"))?;
            let d: BigInt = den
                .parse()
                .map_err(|_| format!("bad denominator `{den}`"))?;
            if d.is_zero() {
                return Err(format!("zero denominator in `{s}`"));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Formats as `num/den`, or bare `num` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Sum of a slice of rationals.
pub fn rational_sum<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> Rational {
    xs.into_iter().fold(Rational::zero(), |a, b| a + b)
}

/// True when every entry is ≥ 0.
pub fn all_nonnegative(xs: &[Rational]) -> bool {
    xs.iter().all(|x| !x.is_negative())
}
