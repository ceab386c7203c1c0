//! Derivations `a dx + b dy` of the rational function field in two variables.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::polyrat::{RatFunc, Var, Q};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Derivation {
    pub coef_x: RatFunc,
    pub coef_y: RatFunc,
}

impl Derivation {
    pub fn new(coef_x: RatFunc, coef_y: RatFunc) -> Self {
        Derivation { coef_x, coef_y }
    }

    pub fn zero() -> Self {
        Derivation::new(RatFunc::zero(), RatFunc::zero())
    }

    pub fn dx() -> Self {
        Derivation::new(RatFunc::one(), RatFunc::zero())
    }

    pub fn dy() -> Self {
        Derivation::new(RatFunc::zero(), RatFunc::one())
    }

    pub fn coef(&self, v: Var) -> &RatFunc {
        match v {
            Var::X => &self.coef_x,
            Var::Y => &self.coef_y,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coef_x.is_zero() && self.coef_y.is_zero()
    }

    pub fn apply(&self, f: &RatFunc) -> RatFunc {
        let mut acc = RatFunc::zero();
        if !self.coef_x.is_zero() {
            acc = &acc + &(&self.coef_x * &f.partial(Var::X));
        }
        if !self.coef_y.is_zero() {
            acc = &acc + &(&self.coef_y * &f.partial(Var::Y));
        }
        acc
    }

    /// The commutator `[self, other]`, computed componentwise.
    pub fn bracket(&self, other: &Derivation) -> Derivation {
        Derivation::new(
            &self.apply(&other.coef_x) - &other.apply(&self.coef_x),
            &self.apply(&other.coef_y) - &other.apply(&self.coef_y),
        )
    }

    /// `f * self`.
    pub fn scale(&self, f: &RatFunc) -> Derivation {
        Derivation::new(f * &self.coef_x, f * &self.coef_y)
    }

    pub fn scale_q(&self, c: &Q) -> Derivation {
        Derivation::new(self.coef_x.scale(c), self.coef_y.scale(c))
    }

    /// The 2x2 coefficient determinant with `other`; zero iff the two are
    /// proportional over the function field.
    pub fn cross(&self, other: &Derivation) -> RatFunc {
        &(&self.coef_x * &other.coef_y) - &(&self.coef_y * &other.coef_x)
    }

    pub fn render_with(&self, names: [&str; 2]) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (c, basis) in [(&self.coef_x, "dx"), (&self.coef_y, "dy")] {
            if c.is_zero() {
                continue;
            }
            let term = if c.is_one() {
                basis.to_string()
            } else if (-c).is_one() {
                format!("-{basis}")
            } else if c.is_sum() {
                format!("({}) {basis}", c.render_with(names))
            } else {
                format!("{} {basis}", c.render_with(names))
            };
            parts.push(term);
        }
        if parts.is_empty() {
            return "0".to_string();
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        out
    }
}

/// Rank of the span over the function field: 0, 1 or 2.
pub fn rank_over_r(ds: &[Derivation]) -> usize {
    let nonzero: Vec<&Derivation> = ds.iter().filter(|d| !d.is_zero()).collect();
    let Some(first) = nonzero.first() else {
        return 0;
    };
    if nonzero.iter().all(|d| first.cross(d).is_zero()) {
        1
    } else {
        2
    }
}

impl Add for &Derivation {
    type Output = Derivation;
    fn add(self, rhs: &Derivation) -> Derivation {
        Derivation::new(&self.coef_x + &rhs.coef_x, &self.coef_y + &rhs.coef_y)
    }
}

impl Sub for &Derivation {
    type Output = Derivation;
    fn sub(self, rhs: &Derivation) -> Derivation {
        Derivation::new(&self.coef_x - &rhs.coef_x, &self.coef_y - &rhs.coef_y)
    }
}

impl Neg for &Derivation {
    type Output = Derivation;
    fn neg(self) -> Derivation {
        Derivation::new(-&self.coef_x, -&self.coef_y)
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(["x", "y"]))
    }
}
