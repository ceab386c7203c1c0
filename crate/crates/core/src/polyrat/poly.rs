use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{fmt_q, UPoly, Var, Q};

/// Exponent pair of `x^i y^j`, ordered graded-lexicographically with `x > y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub fn degree(&self) -> u32 {
        self.x + self.y
    }

    pub fn exp(&self, v: Var) -> u32 {
        match v {
            Var::X => self.x,
            Var::Y => self.y,
        }
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.x <= other.x && self.y <= other.y
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse bivariate polynomial with rational coefficients. Zero coefficients
/// are never stored, so equal polynomials have identical term maps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Q>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Poly::monomial(Monomial::ONE, c)
    }

    pub fn monomial(m: Monomial, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::X => Poly::monomial(Monomial::new(1, 0), Q::one()),
            Var::Y => Poly::monomial(Monomial::new(0, 1), Q::one()),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Q)>>(terms: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let remove = {
            let e = self.terms.entry(m).or_insert_with(Q::zero);
            *e += c;
            e.is_zero()
        };
        if remove {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    /// Constant value, if the polynomial is constant (zero included).
    pub fn constant_value(&self) -> Option<Q> {
        if self.is_zero() {
            Some(Q::zero())
        } else if self.is_constant() {
            self.terms.get(&Monomial::ONE).cloned()
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// Leading term under graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Q {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Q::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Variable of a nonconstant polynomial in exactly one variable.
    pub fn sole_var(&self) -> Option<Var> {
        match (self.involves(Var::X), self.involves(Var::Y)) {
            (true, false) => Some(Var::X),
            (false, true) => Some(Var::Y),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    fn mul_monomial(&self, mono: Monomial, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, v)| (Monomial::new(m.x + mono.x, m.y + mono.y), v * c)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scales so the graded-lex leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, c)) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    pub fn partial(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            let dm = match v {
                Var::X => Monomial::new(m.x - 1, m.y),
                Var::Y => Monomial::new(m.x, m.y - 1),
            };
            out.add_term(dm, c * Q::from_integer(e.into()));
        }
        out
    }

    pub fn eval(&self, x: &Q, y: &Q) -> Q {
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            acc += c * pow_q(x, m.x) * pow_q(y, m.y);
        }
        acc
    }

    /// Exact quotient by `d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.leading()?;
        let (dm, dc) = (*dm, dc.clone());
        if d.is_monomial() {
            let mut terms = BTreeMap::new();
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return None;
                }
                terms.insert(Monomial::new(m.x - dm.x, m.y - dm.y), c / &dc);
            }
            return Some(Poly { terms });
        }
        let mut rem = self.clone();
        let mut quo = Poly::zero();
        while let Some((rm, rc)) = rem.leading() {
            if !dm.divides(rm) {
                return None;
            }
            let qm = Monomial::new(rm.x - dm.x, rm.y - dm.y);
            let qc = rc / &dc;
            rem = &rem - &d.mul_monomial(qm, &qc);
            quo.add_term(qm, qc);
        }
        Some(quo)
    }

    /// Coefficients with respect to `v`, as polynomials in the other variable.
    pub fn coeffs_in(&self, v: Var) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let rest = match v {
                Var::X => Monomial::new(0, m.y),
                Var::Y => Monomial::new(m.x, 0),
            };
            out.entry(m.exp(v)).or_default().add_term(rest, c.clone());
        }
        out
    }

    /// Dense univariate view, when only `v` occurs.
    pub fn to_upoly(&self, v: Var) -> Option<UPoly> {
        if self.involves(v.other()) {
            return None;
        }
        let deg = self.degree_in(v).unwrap_or(0) as usize;
        let mut c = vec![Q::zero(); deg + 1];
        for (m, val) in &self.terms {
            c[m.exp(v) as usize] = val.clone();
        }
        Some(UPoly::new(c))
    }

    pub fn from_upoly(u: &UPoly, v: Var) -> Poly {
        Poly::from_terms(u.coeffs().iter().enumerate().map(|(i, c)| {
            let m = match v {
                Var::X => Monomial::new(i as u32, 0),
                Var::Y => Monomial::new(0, i as u32),
            };
            (m, c.clone())
        }))
    }

    /// Greatest common divisor with graded-lex leading coefficient 1.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Poly::one();
        }
        if self.is_monomial() || other.is_monomial() {
            return monomial_gcd(self, other);
        }
        for v in [Var::X, Var::Y] {
            if !self.involves(v.other()) && !other.involves(v.other()) {
                let a = self.to_upoly(v).expect("univariate");
                let b = other.to_upoly(v).expect("univariate");
                return Poly::from_upoly(&a.gcd(&b), v);
            }
        }
        for v in [Var::X, Var::Y] {
            if specialized_gcd_degree(self, other, v) == Some(0) {
                let (ca, _) = split_content(self, v);
                let (cb, _) = split_content(other, v);
                return ca.gcd(&cb);
            }
        }
        let (ca, pa) = split_content(self, Var::X);
        let (cb, pb) = split_content(other, Var::X);
        let content = ca.gcd(&cb);
        let g = primitive_gcd(pa, pb);
        (&content * &g).monic()
    }

    /// Renders with custom variable names (used to show `t` for univariate work).
    pub fn render_with(&self, names: [&str; 2]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Q::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = render_monomial(m, names);
            if mono.is_empty() {
                out.push_str(&fmt_q(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&fmt_q(&abs));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

fn render_monomial(m: &Monomial, names: [&str; 2]) -> String {
    let mut parts = Vec::new();
    for (e, name) in [(m.x, names[0]), (m.y, names[1])] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

pub(crate) fn pow_q(b: &Q, e: u32) -> Q {
    let mut acc = Q::one();
    for _ in 0..e {
        acc *= b;
    }
    acc
}

fn monomial_gcd(a: &Poly, b: &Poly) -> Poly {
    let (mono, other) = if a.is_monomial() { (a, b) } else { (b, a) };
    let (m, _) = mono.leading().expect("nonzero");
    let mut gx = m.x;
    let mut gy = m.y;
    for (t, _) in other.terms() {
        gx = gx.min(t.x);
        gy = gy.min(t.y);
    }
    Poly::monomial(Monomial::new(gx, gy), Q::one())
}

/// Splits `p` into (content in the other variable, primitive part) with
/// respect to `v`.
fn split_content(p: &Poly, v: Var) -> (Poly, Poly) {
    let w = v.other();
    let mut content = Poly::zero();
    for c in p.coeffs_in(v).values() {
        let cu = c.to_upoly(w).expect("coefficient in other variable");
        let cur = content.to_upoly(w).expect("content in other variable");
        content = Poly::from_upoly(&cur.gcd(&cu), w);
        if content.is_one() {
            break;
        }
    }
    let prim = p.div_exact(&content).expect("content divides");
    (content, prim)
}

/// `p` with the variable other than `v` set to `t`.
fn specialize(p: &Poly, v: Var, t: &Q) -> UPoly {
    let deg = p.degree_in(v).unwrap_or(0) as usize;
    let mut c = vec![Q::zero(); deg + 1];
    for (m, val) in &p.terms {
        c[m.exp(v) as usize] += val * pow_q(t, m.exp(v.other()));
    }
    UPoly::new(c)
}

/// An upper bound for the degree in `v` of `gcd(a, b)`, from a point where
/// neither leading coefficient in `v` vanishes.
fn specialized_gcd_degree(a: &Poly, b: &Poly, v: Var) -> Option<usize> {
    let (da, db) = (a.degree_in(v)?, b.degree_in(v)?);
    for t in [3i64, -2, 5, 1, -7, 0] {
        let t = Q::from_integer(t.into());
        let (ua, ub) = (specialize(a, v, &t), specialize(b, v, &t));
        if ua.degree() == Some(da as usize) && ub.degree() == Some(db as usize) {
            return ua.gcd(&ub).degree();
        }
    }
    None
}

fn lead_coeff_in(p: &Poly, v: Var) -> (u32, Poly) {
    let cs = p.coeffs_in(v);
    let (d, c) = cs.into_iter().next_back().expect("nonzero");
    (d, c)
}

/// Gcd of polynomials primitive in `x` over `Q[y]`: images at `y = t` are
/// scaled to the gcd of the leading coefficients, interpolated in `y` and
/// confirmed by division.
fn primitive_gcd(a: Poly, b: Poly) -> Poly {
    let (v, w) = (Var::X, Var::Y);
    let in_y = |p: &Poly| p.to_upoly(w).expect("coefficient in y");
    let la = in_y(&lead_coeff_in(&a, v).1);
    let lb = in_y(&lead_coeff_in(&b, v).1);
    let gamma = la.gcd(&lb);
    let bound = a.degree_in(w).unwrap_or(0).min(b.degree_in(w).unwrap_or(0)) as usize + gamma.degree().unwrap_or(0);
    let mut images: Vec<(Q, UPoly)> = Vec::new();
    let mut deg = usize::MAX;
    for t in (1i64..).flat_map(|k| [k, -k]) {
        let t = Q::from_integer(t.into());
        if la.eval(&t).is_zero() || lb.eval(&t).is_zero() {
            continue;
        }
        let g = specialize(&a, v, &t).gcd(&specialize(&b, v, &t));
        let d = g.degree().expect("nonzero");
        if d == 0 {
            return Poly::one();
        }
        if d > deg {
            continue;
        }
        if d < deg {
            deg = d;
            images.clear();
        }
        images.push((t.clone(), g.scale(&gamma.eval(&t))));
        if images.len() <= bound {
            continue;
        }
        let mut terms = Vec::new();
        for k in 0..=deg {
            let pts: Vec<(Q, Q)> = images.iter().map(|(t, g)| (t.clone(), g.coeffs()[k].clone())).collect();
            let c = Poly::from_upoly(&UPoly::interpolate(&pts), w);
            terms.extend(c.terms.into_iter().map(|(m, c)| (Monomial::new(k as u32, m.y), c)));
        }
        let cand = split_content(&Poly::from_terms(terms), v).1.monic();
        if a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
            return cand;
        }
    }
    unreachable!("evaluation points are unbounded")
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(Monomial::new(ma.x + mb.x, ma.y + mb.y), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(["x", "y"]))
    }
}
