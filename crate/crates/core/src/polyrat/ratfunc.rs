use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Poly, Var, Q};
use crate::error::{Error, Result};

/// Rational function `num/den` in lowest terms with a graded-lex monic
/// denominator, so equal values have equal representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
            }
        };
        let lc = den.leading_coeff();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    /// `num/den` for coprime parts, only making the denominator monic.
    fn coprime(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let lc = den.leading_coeff();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    /// `num / (rest * g)` where `num` can only share factors with `g`.
    fn cancel_against(num: Poly, rest: Poly, g: Poly) -> Self {
        if g.is_constant() || num.is_zero() {
            return RatFunc::coprime(num, &rest * &g);
        }
        let h = num.gcd(&g);
        if h.is_one() {
            return RatFunc::coprime(num, &rest * &g);
        }
        let num = num.div_exact(&h).expect("gcd divides");
        let g = g.div_exact(&h).expect("gcd divides");
        RatFunc::coprime(num, &rest * &g)
    }

    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        RatFunc { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn var(v: Var) -> Self {
        RatFunc::from_poly(Poly::var(v))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<Q> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    pub fn involves(&self, v: Var) -> bool {
        self.num.involves(v) || self.den.involves(v)
    }

    /// Variable of a nonconstant function of exactly one variable.
    pub fn sole_var(&self) -> Option<Var> {
        match (self.involves(Var::X), self.involves(Var::Y)) {
            (true, false) => Some(Var::X),
            (false, true) => Some(Var::Y),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Q) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn recip(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::coprime(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, e: i32) -> RatFunc {
        let base = if e < 0 { self.recip().expect("nonzero base for negative power") } else { self.clone() };
        let k = e.unsigned_abs();
        RatFunc { num: base.num.pow(k), den: base.den.pow(k) }
    }

    /// Partial derivative by the quotient rule.
    pub fn partial(&self, v: Var) -> RatFunc {
        let dn = self.num.partial(v);
        if self.den.is_constant() {
            return RatFunc { num: dn, den: self.den.clone() };
        }
        let dd = self.den.partial(v);
        let g = self.den.gcd(&dd);
        let (b, db) = if g.is_constant() {
            (self.den.clone(), dd)
        } else {
            (self.den.div_exact(&g).expect("gcd divides"), dd.div_exact(&g).expect("gcd divides"))
        };
        let top = &(&dn * &b) - &(&self.num * &db);
        if g.is_constant() {
            // a squarefree denominator leaves nothing to cancel
            RatFunc::coprime(top, &self.den * &b)
        } else {
            RatFunc::normalized(top, &self.den * &b)
        }
    }

    pub fn eval(&self, x: &Q, y: &Q) -> Option<Q> {
        let d = self.den.eval(x, y);
        (!d.is_zero()).then(|| self.num.eval(x, y) / d)
    }

    /// True when rendering produces a top-level sum (needs parentheses as a factor).
    pub fn is_sum(&self) -> bool {
        self.den.is_one() && self.num.num_terms() > 1
    }

    pub fn render_with(&self, names: [&str; 2]) -> String {
        if self.den.is_one() {
            return self.num.render_with(names);
        }
        let num = self.num.render_with(names);
        let num = if self.num.num_terms() > 1 { format!("({num})") } else { num };
        let den = self.den.render_with(names);
        let bare_den = self.den.is_monomial() && self.den.sole_var().is_some();
        if bare_den {
            format!("{num}/{den}")
        } else {
            format!("{num}/({den})")
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::cancel_against(&self.num + &rhs.num, Poly::one(), self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RatFunc::coprime(num, &self.den * &rhs.den);
        }
        let b = self.den.div_exact(&g).expect("gcd divides");
        let d = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &d) + &(&rhs.num * &b);
        RatFunc::cancel_against(num, &b * &d, g)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel: a/b * c/d with gcd(a, b) = gcd(c, d) = 1
        let split = |n: &Poly, d: &Poly| -> (Poly, Poly) {
            if n.is_constant() || d.is_constant() {
                return (n.clone(), d.clone());
            }
            let g = n.gcd(d);
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (n.div_exact(&g).expect("gcd divides"), d.div_exact(&g).expect("gcd divides"))
            }
        };
        let (a, d) = split(&self.num, &rhs.den);
        let (c, b) = split(&rhs.num, &self.den);
        RatFunc::coprime(&a * &c, &b * &d)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(["x", "y"]))
    }
}
