//! Exact bivariate polynomials and rational functions over the rationals.

mod factor;
mod poly;
mod ratfunc;
mod upoly;

pub use factor::{factor_univariate, ord_p, Factorization, DEFAULT_DEGREE_CAP};
pub use poly::{Monomial, Poly};
pub use ratfunc::RatFunc;
pub use upoly::UPoly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar.
pub type Q = BigRational;

/// One of the two coordinate variables. `t` in univariate contexts is `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::X => Var::Y,
            Var::Y => Var::X,
        }
    }
}

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as `p/q` in lowest terms, integers without `/1`.
pub fn fmt_q(v: &Q) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Positive generator of the additive group spanned by the given rationals,
/// or `None` when all are zero.
pub fn rational_gcd<'a, I: IntoIterator<Item = &'a Q>>(values: I) -> Option<Q> {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    let mut any = false;
    for v in values {
        if v.is_zero() {
            continue;
        }
        any = true;
        num = num.gcd(v.numer());
        den = den.lcm(v.denom());
    }
    any.then(|| Q::new(num.abs(), den))
}
