use num_traits::One;

use super::tables::sl3_matrices;
use super::types::{Sl2Variant, TheoremType};
use crate::error::Result;
use crate::polyrat::{q, RatFunc, Var, Q};
use crate::vectorfield::Derivation;

fn x() -> RatFunc {
    RatFunc::var(Var::X)
}

fn y() -> RatFunc {
    RatFunc::var(Var::Y)
}

fn factorial(n: usize) -> Q {
    (1..=n as i64).map(q).product()
}

fn dx(f: RatFunc) -> Derivation {
    Derivation::new(f, RatFunc::zero())
}

fn dy(f: RatFunc) -> Derivation {
    Derivation::new(RatFunc::zero(), f)
}

/// `y^k` for a possibly negative `k`.
fn ypow(k: i64) -> RatFunc {
    y().pow(k as i32)
}

/// `(y^i / i!) dx` for `i = 0..=n`.
fn divided_chain(n: usize) -> Vec<Derivation> {
    (0..=n).map(|i| dx(ypow(i as i64).scale(&(Q::one() / factorial(i))))).collect()
}

fn sl2_in(v: Var) -> Vec<Derivation> {
    let t = RatFunc::var(v);
    let mk = |f: RatFunc| match v {
        Var::X => dx(f),
        Var::Y => dy(f),
    };
    vec![mk(RatFunc::one()), mk(-&(&t * &t)), mk(t.scale(&q(-2)))]
}

fn euler() -> Derivation {
    Derivation::new(x(), y())
}

/// The vector field of the projective action of a 3x3 matrix.
fn projective_field(m: &crate::linalg::QMatrix) -> Derivation {
    let coords = [x(), y(), RatFunc::one()];
    let w: Vec<RatFunc> =
        (0..3).map(|i| (0..3).fold(RatFunc::zero(), |acc, j| &acc + &coords[j].scale(m.get(i, j)))).collect();
    Derivation::new(&w[0] - &(&x() * &w[2]), &w[1] - &(&y() * &w[2]))
}

/// Explicit planar vector fields realizing `t`, in table basis order.
pub fn realize(t: &TheoremType) -> Result<Vec<Derivation>> {
    t.validate()?;
    let out = match t {
        TheoremType::T1 { n } => (0..*n).map(|i| dx(ypow(i as i64))).collect(),
        TheoremType::T2 { n } => {
            let mut v: Vec<Derivation> = (0..*n).map(|i| dx(ypow(i as i64))).collect();
            v.push(dx(-&x()));
            v
        }
        TheoremType::T3 { n, lambda } => {
            let mut v = divided_chain(*n);
            let f = if *lambda == 1 { Derivation::new(-&x(), RatFunc::one()) } else { dy(RatFunc::one()) };
            v.push(f);
            v
        }
        TheoremType::T4 { beta, m, .. } => {
            let mut v: Vec<Derivation> = m.iter().map(|&k| dx(ypow(k))).collect();
            v.push(Derivation::new(-&x(), y().scale(beta)));
            v
        }
        TheoremType::T5 { n, beta, gamma } => {
            let mut v = divided_chain(*n);
            v.push(dy(RatFunc::one()));
            let b = &x().scale(beta) + &ypow(*n as i64 + 1).scale(gamma);
            v.push(Derivation::new(b, y()));
            v
        }
        TheoremType::T6 { n } => {
            let mut v = divided_chain(*n);
            v.push(dx(-&x()));
            v.push(dy(RatFunc::one()));
            v
        }
        TheoremType::T7 { beta, m, .. } => {
            let mut v: Vec<Derivation> = m.iter().map(|&k| dx(ypow(k))).collect();
            v.push(dx(-&x()));
            v.push(Derivation::new(-&x(), y().scale(beta)));
            v
        }
        TheoremType::T8 { n, alpha, beta } => {
            let gamma = TheoremType::t8_gamma(*n, alpha, beta);
            let top = ypow(*n as i64 + 1).scale(&(Q::one() / factorial(n + 1)));
            let mut v = divided_chain(*n);
            v.push(dy(RatFunc::one()));
            v.push(dx(&-&x() - &top.scale(alpha)));
            v.push(Derivation::new(&x().scale(beta) + &top.scale(&gamma), -&y()));
            v
        }
        TheoremType::T9 { variant } => {
            let mut v = sl2_in(Var::X);
            if *variant == Sl2Variant::Sl2Sl2 {
                v.extend(sl2_in(Var::Y));
            }
            v
        }
        TheoremType::T10 => sl3_matrices().iter().map(projective_field).collect(),
        TheoremType::T11 { m } => {
            let mut v = gl2_part();
            v.truncate(3);
            v.extend(module_part(*m));
            v
        }
        TheoremType::T12 { m } if *m == 0 => {
            let mut v = sl2_in(Var::X);
            v.push(dy(-&y()));
            v.push(dy(RatFunc::one()));
            v
        }
        TheoremType::T12 { m } => {
            let mut v = gl2_part();
            v.extend(module_part(*m));
            v
        }
    };
    Ok(out)
}

/// `x dy, y dx, x dx - y dy, x dx + y dy`.
fn gl2_part() -> Vec<Derivation> {
    vec![dy(x()), dx(y()), Derivation::new(x(), -&y()), euler()]
}

/// `x^(m-k) y^k (x dx + y dy)` for `k = 0..=m`.
fn module_part(m: usize) -> Vec<Derivation> {
    (0..=m).map(|k| euler().scale(&(&x().pow((m - k) as i32) * &ypow(k as i64)))).collect()
}
