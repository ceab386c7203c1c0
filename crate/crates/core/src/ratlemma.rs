//! Constructive algorithms on univariate rational functions: the
//! logarithmic-derivative obstruction and the power decomposition of a
//! proportional pair.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyrat::{factor_univariate, fmt_q, ord_p, Poly, RatFunc, Var, DEFAULT_DEGREE_CAP, Q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecomposeResult {
    pub theta: RatFunc,
    pub s: i64,
    pub t: i64,
    pub c1: Q,
    pub c2: Q,
    pub mu: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecomposeReport {
    pub theta: String,
    pub s: i64,
    pub t: i64,
    pub c1: String,
    pub c2: String,
    pub mu: String,
}

impl DecomposeResult {
    pub fn report(&self) -> DecomposeReport {
        DecomposeReport {
            theta: self.theta.render_with(["t", "t"]),
            s: self.s,
            t: self.t,
            c1: fmt_q(&self.c1),
            c2: fmt_q(&self.c2),
            mu: fmt_q(&self.mu),
        }
    }
}

fn univariate_var(fs: &[&RatFunc]) -> Result<Var> {
    let mut var = None;
    for f in fs {
        if f.involves(Var::X) && f.involves(Var::Y) {
            return Err(Error::MultivariateInput);
        }
        if let Some(v) = f.sole_var() {
            if var.is_some_and(|w| w != v) {
                return Err(Error::MultivariateInput);
            }
            var = Some(v);
        }
    }
    Ok(var.unwrap_or(Var::X))
}

/// The constant `mu` with `mu * phi' * psi = phi * psi'`.
pub fn proportionality_ratio(phi: &RatFunc, psi: &RatFunc) -> Result<Q> {
    let v = univariate_var(&[phi, psi])?;
    if phi.is_constant() || psi.is_constant() {
        return Err(Error::ConstantInput);
    }
    let lhs = &phi.partial(v) * psi;
    let rhs = phi * &psi.partial(v);
    let mu = rhs.div(&lhs).map_err(|_| Error::NotProportional)?;
    mu.constant_value().ok_or(Error::NotProportional)
}

/// Monic irreducible factors with exponents, over numerator and denominator.
fn exponents(f: &RatFunc) -> Result<(Q, Vec<(Poly, i64)>)> {
    let num = factor_univariate(f.num(), DEFAULT_DEGREE_CAP)?;
    let den = factor_univariate(f.den(), DEFAULT_DEGREE_CAP)?;
    let mut out: Vec<(Poly, i64)> = num.factors.iter().map(|(p, e)| (p.clone(), *e as i64)).collect();
    out.extend(den.factors.iter().map(|(p, e)| (p.clone(), -(*e as i64))));
    out.sort_by_key(|(p, _)| p.to_string());
    Ok((num.unit / den.unit, out))
}

/// `phi = c1 * theta^s`, `psi = c2 * theta^t` with `s > 0` and `gcd(s, t) = 1`.
pub fn power_decompose(phi: &RatFunc, psi: &RatFunc) -> Result<DecomposeResult> {
    let mu = proportionality_ratio(phi, psi)?;
    if mu.is_zero() {
        return Err(Error::NotProportional);
    }
    let s = mu.denom().clone();
    let t = mu.numer().clone();
    let (u1, e1) = exponents(phi)?;
    let (u2, e2) = exponents(psi)?;
    if e1.iter().map(|f| &f.0).ne(e2.iter().map(|f| &f.0)) {
        let show = |m: &[(Poly, i64)]| m.iter().map(|f| f.0.to_string()).collect::<Vec<_>>().join(", ");
        return Err(Error::FactorMismatch(format!("[{}] vs [{}]", show(&e1), show(&e2))));
    }
    let mut theta = RatFunc::one();
    for ((p, k), (_, l)) in e1.iter().zip(&e2) {
        let k = BigInt::from(*k);
        let l = BigInt::from(*l);
        if !(&k % &s).is_zero() || &k / &s * &t != l {
            return Err(Error::FactorMismatch(format!("exponents of {p} are not in ratio {}", fmt_q(&mu))));
        }
        let r: i64 = (&k / &s).try_into().map_err(|_| Error::InvalidInput("exponent overflow".into()))?;
        theta = &theta * &RatFunc::from_poly(p.clone()).pow(r as i32);
    }
    let s: i64 = s.try_into().map_err(|_| Error::InvalidInput("exponent overflow".into()))?;
    let t: i64 = t.try_into().map_err(|_| Error::InvalidInput("exponent overflow".into()))?;
    debug_assert!(s > 0 && s.gcd(&t) == 1);
    Ok(DecomposeResult { theta, s, t, c1: u1, c2: u2, mu })
}

/// An irreducible `p` with `ord_p(phi) != 0` and `ord_p(phi'/phi) = -1`.
pub fn log_derivative_obstruction(phi: &RatFunc) -> Result<(Poly, i64)> {
    let v = univariate_var(&[phi])?;
    if phi.is_constant() {
        return Err(Error::ConstantInput);
    }
    let (_, ex) = exponents(phi)?;
    let logd = phi.partial(v).div(phi)?;
    for (p, _) in &ex {
        let o = ord_p(&logd, p)?;
        if o == -1 {
            return Ok((p.clone(), o));
        }
    }
    Err(Error::NoWitness)
}

/// Reconstructs `c * theta^e`.
pub fn power(theta: &RatFunc, c: &Q, e: i64) -> RatFunc {
    theta.pow(e as i32).scale(c)
}
