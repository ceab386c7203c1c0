use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::upoly::divisors;
use super::{Poly, RatFunc, UPoly, Var, Q};
use crate::error::{Error, Result};

pub const DEFAULT_DEGREE_CAP: usize = 12;

/// Factorization over the rationals: `unit * prod factor^exp`, factors monic,
/// irreducible and pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Q,
    pub var: Var,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> Poly {
        let mut acc = Poly::constant(self.unit.clone());
        for (f, e) in &self.factors {
            acc = &acc * &f.pow(*e);
        }
        acc
    }
}

/// Factors a univariate polynomial into irreducibles over the rationals,
/// splitting off rational roots before falling back to Kronecker's method.
pub fn factor_univariate(p: &Poly, cap: usize) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    if p.involves(Var::X) && p.involves(Var::Y) {
        return Err(Error::MultivariateInput);
    }
    let var = p.sole_var().unwrap_or(Var::X);
    let u = p.to_upoly(var).expect("univariate");
    let degree = u.degree().unwrap_or(0);
    if degree > cap {
        return Err(Error::DegreeCapExceeded { degree, cap });
    }
    let mut factors: Vec<(UPoly, u32)> = Vec::new();
    for (part, mult) in u.squarefree() {
        for f in split_squarefree(&part) {
            factors.push((f, mult as u32));
        }
    }
    factors.sort_by_key(|a| upoly_key(&a.0));
    Ok(Factorization {
        unit: u.lead(),
        var,
        factors: factors.into_iter().map(|(f, e)| (Poly::from_upoly(&f, var), e)).collect(),
    })
}

fn upoly_key(u: &UPoly) -> (usize, Vec<Q>) {
    (u.degree().unwrap_or(0), u.coeffs().to_vec())
}

/// Irreducible monic factors of a monic square-free polynomial.
fn split_squarefree(f: &UPoly) -> Vec<UPoly> {
    let mut out = Vec::new();
    let mut rest = f.monic();
    for r in rest.rational_roots() {
        let lin = UPoly::linear_root(&r);
        rest = rest.div_rem(&lin).0;
        out.push(lin);
    }
    let mut stack = vec![rest];
    while let Some(g) = stack.pop() {
        let deg = g.degree().unwrap_or(0);
        if deg == 0 {
            continue;
        }
        match kronecker_split(&g) {
            Some(h) => {
                let (q, _) = g.div_rem(&h);
                stack.push(h);
                stack.push(q.monic());
            }
            None => out.push(g.monic()),
        }
    }
    out
}

/// Finds a proper monic factor of degree >= 2 of a square-free polynomial with
/// no rational roots, or `None` if it is irreducible.
fn kronecker_split(g: &UPoly) -> Option<UPoly> {
    let deg = g.degree()?;
    if deg < 4 {
        return None;
    }
    let ints = g.primitive_integer();
    let f = UPoly::from_integers(&ints);
    let lead = ints.last().cloned().unwrap_or_else(BigInt::one);
    for d in 2..=deg / 2 {
        let points = interpolation_points(&f, d + 1);
        let choices: Vec<Vec<BigInt>> = points
            .iter()
            .enumerate()
            .map(|(i, (_, v))| {
                let ds = divisors(v);
                if i == 0 {
                    ds
                } else {
                    ds.iter().flat_map(|x| [x.clone(), -x.clone()]).collect()
                }
            })
            .collect();
        let mut idx = vec![0usize; choices.len()];
        loop {
            let vals: Vec<Q> = idx.iter().zip(&choices).map(|(&i, c)| Q::from_integer(c[i].clone())).collect();
            let xs: Vec<Q> = points.iter().map(|(a, _)| a.clone()).collect();
            let cand = lagrange(&xs, &vals);
            if cand.degree() == Some(d) && cand.coeffs().iter().all(|c| c.is_integer()) {
                let lc = cand.lead().to_integer();
                if (&lead % &lc).is_zero() {
                    let (_, rem) = f.div_rem(&cand);
                    if rem.is_zero() {
                        return Some(cand.monic());
                    }
                }
            }
            // odometer
            let mut k = 0;
            loop {
                if k == idx.len() {
                    break;
                }
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
    }
    None
}

/// Integer points with nonzero value, preferring values with few divisors.
fn interpolation_points(f: &UPoly, count: usize) -> Vec<(Q, BigInt)> {
    let span = 3 * count as i64 + 6;
    let mut cands: Vec<(usize, i64, BigInt)> = (-span..=span)
        .filter_map(|a| {
            let v = f.eval(&Q::from_integer(a.into())).to_integer();
            (!v.is_zero()).then(|| (divisors(&v).len(), a, v))
        })
        .collect();
    cands.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.abs().cmp(&b.1.abs())).then(a.1.cmp(&b.1)));
    cands.into_iter().take(count).map(|(_, a, v)| (Q::from_integer(a.into()), v.abs())).collect()
}

fn lagrange(xs: &[Q], ys: &[Q]) -> UPoly {
    let mut acc = UPoly::zero();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut term = UPoly::constant(yi.clone());
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                let lin = UPoly::linear_root(xj);
                term = &term * &lin.scale(&(xi - xj).recip());
            }
        }
        acc = &acc + &term;
    }
    acc
}

/// Exponent of the irreducible univariate `p` in `f`.
pub fn ord_p(f: &RatFunc, p: &Poly) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    if p.involves(Var::X) && p.involves(Var::Y) {
        return Err(Error::MultivariateInput);
    }
    if p.is_constant() {
        return Err(Error::ReducibleModulus);
    }
    let fac = factor_univariate(p, DEFAULT_DEGREE_CAP)?;
    if fac.factors.len() != 1 || fac.factors[0].1 != 1 {
        return Err(Error::ReducibleModulus);
    }
    Ok(multiplicity(f.num(), p) as i64 - multiplicity(f.den(), p) as i64)
}

fn multiplicity(a: &Poly, p: &Poly) -> u32 {
    let mut k = 0;
    let mut cur = a.clone();
    while let Some(qt) = cur.div_exact(p) {
        cur = qt;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyrat::q;

    fn t_poly(c: &[i64]) -> Poly {
        Poly::from_upoly(&UPoly::from_ints(c), Var::X)
    }

    #[test]
    fn factors_t3_plus_t2() {
        let f = factor_univariate(&t_poly(&[0, 0, 1, 1]), DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(f.unit, q(1));
        assert_eq!(f.factors, vec![(t_poly(&[0, 1]), 2), (t_poly(&[1, 1]), 1)]);
    }

    #[test]
    fn t2_minus_2_is_irreducible() {
        let f = factor_univariate(&t_poly(&[-2, 0, 1]), DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(f.factors, vec![(t_poly(&[-2, 0, 1]), 1)]);
    }

    #[test]
    fn t4_minus_1() {
        let f = factor_univariate(&t_poly(&[-1, 0, 0, 0, 1]), DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(f.factors, vec![(t_poly(&[-1, 1]), 1), (t_poly(&[1, 1]), 1), (t_poly(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn kronecker_splits_product_of_quadratics() {
        // (t^2 + 1)(t^2 - 2)(t^2 + t + 3)
        let p = &(&t_poly(&[1, 0, 1]) * &t_poly(&[-2, 0, 1])) * &t_poly(&[3, 1, 1]);
        let f = factor_univariate(&p.scale(&q(6)), DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(f.unit, q(6));
        assert_eq!(f.factors.len(), 3);
        assert_eq!(f.expand(), p.scale(&q(6)));
    }

    #[test]
    fn degree_cap_and_multivariate_rejected() {
        let big = t_poly(&[1; 14]);
        assert!(matches!(factor_univariate(&big, 12), Err(Error::DegreeCapExceeded { .. })));
        let xy = &Poly::var(Var::X) * &Poly::var(Var::Y);
        assert_eq!(factor_univariate(&xy, 12), Err(Error::MultivariateInput));
    }

    #[test]
    fn ord_examples() {
        let t = t_poly(&[0, 1]);
        let f = RatFunc::from_poly(t_poly(&[0, 0, 1, 1]));
        assert_eq!(ord_p(&f, &t).unwrap(), 2);
        assert_eq!(ord_p(&RatFunc::from_poly(t_poly(&[0, 0, 1])), &t_poly(&[1, 1])).unwrap(), 0);
        let two_over_t = RatFunc::new(t_poly(&[2]), t.clone()).unwrap();
        assert_eq!(ord_p(&two_over_t, &t).unwrap(), -1);
        assert_eq!(ord_p(&f, &t_poly(&[0, 0, 1])), Err(Error::ReducibleModulus));
        assert_eq!(ord_p(&RatFunc::zero(), &t), Err(Error::ZeroInput));
    }
}
