use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Q;

/// Dense univariate polynomial over the rationals, coefficients low to high.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UPoly {
    c: Vec<Q>,
}

impl UPoly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|v| v.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(Q::one())
    }

    pub fn constant(v: Q) -> Self {
        UPoly::new(vec![v])
    }

    /// The monic linear polynomial `t - r`.
    pub fn linear_root(r: &Q) -> Self {
        UPoly::new(vec![-r.clone(), Q::one()])
    }

    pub fn from_ints(c: &[i64]) -> Self {
        UPoly::new(c.iter().map(|&v| Q::from_integer(v.into())).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Q {
        self.c.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().recip();
        UPoly::new(self.c.iter().map(|v| v * &l).collect())
    }

    pub fn scale(&self, s: &Q) -> UPoly {
        UPoly::new(self.c.iter().map(|v| v * s).collect())
    }

    pub fn eval(&self, t: &Q) -> Q {
        let mut acc = Q::zero();
        for v in self.c.iter().rev() {
            acc = acc * t + v;
        }
        acc
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(self.c.iter().enumerate().skip(1).map(|(i, v)| v * Q::from_integer(BigInt::from(i))).collect())
    }

    pub fn pow(&self, e: u32) -> UPoly {
        let mut acc = UPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.c.len() - 1;
        if self.c.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let inv = d.lead().recip();
        let mut r = self.c.clone();
        let mut qv = vec![Q::zero(); r.len() - dd];
        for k in (0..qv.len()).rev() {
            let coef = &r[k + dd] * &inv;
            if !coef.is_zero() {
                for (j, dv) in d.c.iter().enumerate() {
                    r[k + j] -= &coef * dv;
                }
            }
            qv[k] = coef;
        }
        r.truncate(dd);
        (UPoly::new(qv), UPoly::new(r))
    }

    /// The polynomial of degree below `points.len()` through the given
    /// points, which must have distinct abscissae.
    pub fn interpolate(points: &[(Q, Q)]) -> UPoly {
        let mut coef: Vec<Q> = points.iter().map(|p| p.1.clone()).collect();
        for j in 1..points.len() {
            for i in (j..points.len()).rev() {
                coef[i] = (&coef[i] - &coef[i - 1]) / (&points[i].0 - &points[i - j].0);
            }
        }
        let mut out = UPoly::zero();
        for i in (0..points.len()).rev() {
            out = &(&out * &UPoly::linear_root(&points[i].0)) + &UPoly::constant(coef[i].clone());
        }
        out
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Square-free decomposition (Yun): monic `(a_i, i)` with `self = lead * prod a_i^i`.
    pub fn squarefree(&self) -> Vec<(UPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let mut c = df.div_rem(&a0).0;
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_rem(&a).0;
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Primitive integer coefficient vector (positive leading coefficient).
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let mut den = BigInt::one();
        for v in &self.c {
            den = den.lcm(v.denom());
        }
        let ints: Vec<BigInt> = self.c.iter().map(|v| (v * Q::from_integer(den.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        if g.is_zero() {
            return ints;
        }
        let sign = if ints.last().is_some_and(|v| v.is_negative()) { -BigInt::one() } else { BigInt::one() };
        ints.into_iter().map(|v| v / &g * &sign).collect()
    }

    pub fn from_integers(c: &[BigInt]) -> UPoly {
        UPoly::new(c.iter().map(|v| Q::from_integer(v.clone())).collect())
    }

    /// Distinct rational roots, ascending.
    pub fn rational_roots(&self) -> Vec<Q> {
        let mut roots = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return roots;
        }
        let mut f = self.clone();
        if f.c[0].is_zero() {
            roots.push(Q::zero());
            let k = f.c.iter().take_while(|v| v.is_zero()).count();
            f = UPoly::new(f.c[k..].to_vec());
        }
        if f.degree().unwrap_or(0) > 0 {
            let g = f.div_rem(&f.gcd(&f.derivative())).0;
            let an = Q::from_integer(g.primitive_integer().last().expect("nonzero").abs());
            let width = (&an * &an).recip();
            let sturm = sturm_sequence(&g);
            let lead = g.lead();
            let bound = Q::one() + g.c.iter().map(|v| (v / &lead).abs()).max().expect("nonzero");
            let mut stack = vec![(-bound.clone(), bound)];
            while let Some((lo, hi)) = stack.pop() {
                let count = sign_changes(&sturm, &lo) - sign_changes(&sturm, &hi);
                if count == 0 {
                    continue;
                }
                if count == 1 && &hi - &lo < width {
                    // at most one rational with denominator dividing an fits
                    let cand = simplest_between(&lo, &hi);
                    if g.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                    continue;
                }
                let mid = (&lo + &hi) / Q::from_integer(2.into());
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
        roots.sort();
        roots.dedup();
        roots
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, r: &Q) -> usize {
        let lin = UPoly::linear_root(r);
        let mut f = self.clone();
        let mut k = 0;
        while !f.is_zero() {
            let (qv, rem) = f.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            f = qv;
            k += 1;
        }
        k
    }
}

fn sturm_sequence(g: &UPoly) -> Vec<UPoly> {
    let mut seq = vec![g.clone(), g.derivative()];
    loop {
        let n = seq.len();
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        if r.is_zero() {
            return seq;
        }
        seq.push(-&r);
    }
}

fn sign_changes(seq: &[UPoly], t: &Q) -> usize {
    let signs: Vec<bool> = seq.iter().map(|p| p.eval(t)).filter(|v| !v.is_zero()).map(|v| v.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// The rational of least denominator in `[lo, hi]`.
fn simplest_between(lo: &Q, hi: &Q) -> Q {
    if !lo.is_positive() && !hi.is_negative() {
        return Q::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    let next = &fl + Q::one();
    if &next <= hi {
        return next;
    }
    fl + simplest_between(&(hi - lo.floor()).recip(), &(lo - lo.floor()).recip()).recip()
}

/// Positive divisors of a nonzero integer by trial division.
pub(crate) fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.c.len().max(rhs.c.len());
        UPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.c.get(i).cloned().unwrap_or_else(Q::zero);
                    let b = rhs.c.get(i).cloned().unwrap_or_else(Q::zero);
                    a + b
                })
                .collect(),
        )
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        self + &(-rhs)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.c.iter().map(|v| -v.clone()).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Q::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
}
