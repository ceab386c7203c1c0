//! Rational-linear dependence among derivations, decided by clearing to a
//! common polynomial denominator and comparing coefficient vectors.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::polyrat::{Monomial, Poly, RatFunc, Q};
use crate::vectorfield::Derivation;

type Key = (u8, Monomial);
type SparseVec = BTreeMap<Key, Q>;

/// Polynomial `f * den`, assuming the denominator of `f` divides `den`.
fn cleared(f: &RatFunc, den: &Poly) -> Option<Poly> {
    if f.is_zero() {
        return Some(Poly::zero());
    }
    let k = den.div_exact(f.den())?;
    Some(f.num() * &k)
}

fn lcm(a: &Poly, b: &Poly) -> Poly {
    if b.div_exact(a).is_some() {
        return b.monic();
    }
    if a.div_exact(b).is_some() {
        return a.monic();
    }
    let g = a.gcd(b);
    (&a.div_exact(&g).expect("gcd divides") * b).monic()
}

fn linearize(d: &Derivation, den: &Poly) -> Option<SparseVec> {
    let mut out = SparseVec::new();
    for (idx, c) in [(0u8, &d.coef_x), (1u8, &d.coef_y)] {
        let p = cleared(c, den)?;
        for (m, v) in p.terms() {
            out.insert((idx, *m), v.clone());
        }
    }
    Some(out)
}

fn axpy(target: &mut SparseVec, a: &Q, x: &SparseVec) {
    for (k, v) in x {
        let e = target.entry(*k).or_insert_with(Q::zero);
        *e -= a * v;
        if e.is_zero() {
            target.remove(k);
        }
    }
}

/// Incrementally maintained independent set of derivations with an echelon
/// form for membership and coordinate queries.
#[derive(Debug, Clone)]
pub struct DerivationSpan {
    den: Poly,
    elems: Vec<Derivation>,
    /// Echelon rows keyed by pivot (largest key), each with its combination
    /// over `elems`.
    rows: HashMap<Key, (SparseVec, Vec<Q>)>,
}

impl Default for DerivationSpan {
    fn default() -> Self {
        DerivationSpan { den: Poly::one(), elems: Vec::new(), rows: HashMap::new() }
    }
}

impl DerivationSpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.elems.len()
    }

    pub fn elems(&self) -> &[Derivation] {
        &self.elems
    }

    pub fn into_elems(self) -> Vec<Derivation> {
        self.elems
    }

    fn widen(&mut self, d: &Derivation) {
        let mut den = self.den.clone();
        for c in [&d.coef_x, &d.coef_y] {
            if !c.is_zero() && den.div_exact(c.den()).is_none() {
                den = lcm(&den, c.den());
            }
        }
        if den != self.den {
            self.den = den;
            let elems = std::mem::take(&mut self.elems);
            self.rows.clear();
            for e in elems {
                let added = self.try_push(e);
                debug_assert!(added);
            }
        }
    }

    /// Residual of `v` after elimination, and the combination of `elems`
    /// that was subtracted.
    fn reduce(&self, mut v: SparseVec) -> (SparseVec, Vec<Q>) {
        let mut combo = vec![Q::zero(); self.elems.len()];
        let mut done: Vec<(Key, Q)> = Vec::new();
        while let Some((k, c)) = v.pop_last() {
            match self.rows.get(&k) {
                Some((row, rc)) => {
                    let a = &c / &row[&k];
                    let mut rest = row.clone();
                    rest.remove(&k);
                    axpy(&mut v, &a, &rest);
                    for (t, r) in combo.iter_mut().zip(rc) {
                        *t += &a * r;
                    }
                }
                None => done.push((k, c)),
            }
        }
        (done.into_iter().collect(), combo)
    }

    /// Adds `d` if it is independent of the current elements.
    pub fn try_push(&mut self, d: Derivation) -> bool {
        if d.is_zero() {
            return false;
        }
        self.widen(&d);
        let v = linearize(&d, &self.den).expect("denominator widened");
        let (res, combo) = self.reduce(v);
        if res.is_empty() {
            return false;
        }
        let n = self.elems.len();
        let mut rc: Vec<Q> = combo.into_iter().map(|c| -c).collect();
        rc.push(num_traits::One::one());
        for r in self.rows.values_mut() {
            r.1.resize(n + 1, Q::zero());
        }
        let pivot = *res.keys().next_back().expect("nonempty");
        self.rows.insert(pivot, (res, rc));
        self.elems.push(d);
        true
    }

    /// Coordinates of `d` over the elements, or `None` if outside the span.
    pub fn coordinates(&self, d: &Derivation) -> Option<Vec<Q>> {
        if d.is_zero() {
            return Some(vec![Q::zero(); self.elems.len()]);
        }
        let v = linearize(d, &self.den)?;
        let (res, combo) = self.reduce(v);
        res.is_empty().then_some(combo)
    }

    pub fn contains(&self, d: &Derivation) -> bool {
        self.coordinates(d).is_some()
    }
}

/// Element of the span with the given coordinates.
pub fn element(basis: &[Derivation], coords: &[Q]) -> Derivation {
    let mut acc = Derivation::zero();
    for (c, b) in coords.iter().zip(basis) {
        if !c.is_zero() {
            acc = &acc + &b.scale_q(c);
        }
    }
    acc
}

/// Basis of the rational relations `{c : sum c_i f_i = 0}` among functions.
pub fn function_relations(fs: &[RatFunc]) -> Vec<Vec<Q>> {
    let mut den = Poly::one();
    for f in fs {
        if !f.is_zero() && den.div_exact(f.den()).is_none() {
            den = lcm(&den, f.den());
        }
    }
    let polys: Vec<Poly> = fs.iter().map(|f| cleared(f, &den).expect("common denominator")).collect();
    let mut keys: Vec<Monomial> = polys.iter().flat_map(|p| p.terms().map(|(m, _)| *m)).collect();
    keys.sort();
    keys.dedup();
    if keys.is_empty() {
        return (0..fs.len())
            .map(|i| (0..fs.len()).map(|j| if i == j { Q::from_integer(1.into()) } else { Q::zero() }).collect())
            .collect();
    }
    let m = crate::linalg::QMatrix::from_fn(keys.len(), fs.len(), |r, c| polys[c].coeff(&keys[r]));
    m.kernel()
}
