#![allow(dead_code)]

pub mod golden;
pub mod oracle;

use planar_lie::polyrat::{q, qr, Monomial, Poly, RatFunc, Var, Q};
use planar_lie::vectorfield::Derivation;
use proptest::prelude::*;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_q(r: &mut ChaCha8Rng) -> Q {
    qr(r.gen_range(-4..=4), r.gen_range(1..=3))
}

pub fn nonzero_q(r: &mut ChaCha8Rng) -> Q {
    loop {
        let c = small_q(r);
        if c != q(0) {
            return c;
        }
    }
}

/// Bivariate polynomial of total degree at most `deg`, with a few terms.
pub fn poly(r: &mut ChaCha8Rng, deg: u32) -> Poly {
    let terms = r.gen_range(1..=3);
    Poly::from_terms((0..terms).map(|_| {
        let d = r.gen_range(0..=deg);
        let a = r.gen_range(0..=d);
        (Monomial::new(a, d - a), small_q(r))
    }))
}

pub fn upoly(r: &mut ChaCha8Rng, deg: u32) -> Poly {
    Poly::from_terms((0..=deg).map(|d| (Monomial::new(d, 0), small_q(r))))
}

/// Polynomial coefficients most of the time, a simple denominator now and then.
pub fn ratfunc(r: &mut ChaCha8Rng, deg: u32) -> RatFunc {
    let num = RatFunc::from_poly(poly(r, deg));
    if r.gen_bool(0.25) {
        let v = if r.gen_bool(0.5) { Var::X } else { Var::Y };
        let den = &RatFunc::var(v) + &RatFunc::constant(q(r.gen_range(1..=3)));
        num.div(&den).expect("nonzero")
    } else {
        num
    }
}

pub fn derivation(r: &mut ChaCha8Rng, deg: u32) -> Derivation {
    Derivation::new(ratfunc(r, deg), ratfunc(r, deg))
}

pub fn arb_poly(deg: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec((0..=deg, 0..=deg, -5i64..=5, 1i64..=4), 1..=4).prop_map(move |ts| {
        Poly::from_terms(ts.into_iter().map(|(a, b, n, d)| {
            let b = b.min(deg - a.min(deg));
            (Monomial::new(a.min(deg), b), qr(n, d))
        }))
    })
}

pub fn arb_ratfunc(deg: u32) -> impl Strategy<Value = RatFunc> {
    (arb_poly(deg), prop::option::of(arb_poly(1))).prop_map(|(n, d)| {
        let n = RatFunc::from_poly(n);
        match d {
            Some(d) if !d.is_zero() => n.div(&RatFunc::from_poly(d)).expect("nonzero"),
            _ => n,
        }
    })
}

pub fn arb_derivation(deg: u32) -> impl Strategy<Value = Derivation> {
    (arb_ratfunc(deg), arb_ratfunc(deg)).prop_map(|(a, b)| Derivation::new(a, b))
}
