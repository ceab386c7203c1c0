//! Small reference implementations that share no algorithms with the
//! library. Polynomial fields are plain coefficient maps and spans come from
//! elimination on sparse rows.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use planar_lie::polyrat::{Var, Q};
use planar_lie::vectorfield::Derivation;

pub type P = BTreeMap<(u32, u32), Q>;

#[derive(Debug, Clone, PartialEq)]
pub struct F {
    pub a: P,
    pub b: P,
}

fn clean(mut p: P) -> P {
    p.retain(|_, c| !c.is_zero());
    p
}

pub fn padd(p: &P, q: &P, s: &Q) -> P {
    let mut out = p.clone();
    for (m, c) in q {
        *out.entry(*m).or_insert_with(Q::zero) += c * s;
    }
    clean(out)
}

pub fn pmul(p: &P, q: &P) -> P {
    let mut out = P::new();
    for ((i, j), c) in p {
        for ((k, l), d) in q {
            *out.entry((i + k, j + l)).or_insert_with(Q::zero) += c * d;
        }
    }
    clean(out)
}

fn pdiff(p: &P, x: bool) -> P {
    let mut out = P::new();
    for (&(i, j), c) in p {
        let e = if x { i } else { j };
        if e > 0 {
            let m = if x { (i - 1, j) } else { (i, j - 1) };
            out.insert(m, c * Q::from_integer(e.into()));
        }
    }
    clean(out)
}

pub fn apply(f: &F, p: &P) -> P {
    padd(&pmul(&f.a, &pdiff(p, true)), &pmul(&f.b, &pdiff(p, false)), &Q::one())
}

pub fn bracket(u: &F, v: &F) -> F {
    let m1 = -Q::one();
    F { a: padd(&apply(u, &v.a), &apply(v, &u.a), &m1), b: padd(&apply(u, &v.b), &apply(v, &u.b), &m1) }
}

pub fn combo(fs: &[F], c: &[Q]) -> F {
    let mut out = F { a: P::new(), b: P::new() };
    for (f, k) in fs.iter().zip(c) {
        out.a = padd(&out.a, &f.a, k);
        out.b = padd(&out.b, &f.b, k);
    }
    out
}

/// Monomial list `(coef, x exponent, y exponent)`.
pub fn poly(terms: &[(Q, u32, u32)]) -> P {
    let mut out = P::new();
    for (c, i, j) in terms {
        *out.entry((*i, *j)).or_insert_with(Q::zero) += c;
    }
    clean(out)
}

/// Polynomial fields only.
pub fn from_derivation(d: &Derivation) -> F {
    let conv = |v: Var| -> P {
        let f = d.coef(v);
        assert!(f.den().is_one(), "oracle handles polynomial fields only");
        clean(f.num().terms().map(|(m, c)| ((m.exp(Var::X), m.exp(Var::Y)), c.clone())).collect())
    };
    F { a: conv(Var::X), b: conv(Var::Y) }
}

type Key = (u8, u32, u32);

fn flat(f: &F) -> BTreeMap<Key, Q> {
    let mut out = BTreeMap::new();
    for (&(i, j), c) in &f.a {
        out.insert((0, i, j), c.clone());
    }
    for (&(i, j), c) in &f.b {
        out.insert((1, i, j), c.clone());
    }
    out
}

/// Echelon rows over the rationals, each remembering its combination of the
/// inserted vectors.
#[derive(Default)]
pub struct Echelon {
    rows: Vec<(Key, BTreeMap<Key, Q>, Vec<Q>)>,
    count: usize,
}

impl Echelon {
    fn reduce(&self, mut v: BTreeMap<Key, Q>, mut comb: Vec<Q>) -> (BTreeMap<Key, Q>, Vec<Q>) {
        if comb.len() < self.count {
            comb.resize(self.count, Q::zero());
        }
        for (pivot, row, rc) in &self.rows {
            if let Some(c) = v.get(pivot).cloned() {
                for (k, x) in row {
                    *v.entry(*k).or_insert_with(Q::zero) -= &c * x;
                }
                for (i, x) in rc.iter().enumerate() {
                    comb[i] -= &c * x;
                }
                v.retain(|_, x| !x.is_zero());
            }
        }
        (v, comb)
    }

    /// Inserts `f`, returning whether it was independent.
    pub fn push(&mut self, f: &F) -> bool {
        let mut unit = vec![Q::zero(); self.count + 1];
        unit[self.count] = Q::one();
        let (v, comb) = self.reduce(flat(f), unit);
        let Some((&pivot, lead)) = v.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        let row: BTreeMap<Key, Q> = v.iter().map(|(k, x)| (*k, x * &inv)).collect();
        let mut rc: Vec<Q> = comb.iter().map(|x| x * &inv).collect();
        rc.resize(self.count + 1, Q::zero());
        for (_, r, c) in self.rows.iter_mut() {
            if let Some(x) = r.get(&pivot).cloned() {
                for (k, y) in &row {
                    *r.entry(*k).or_insert_with(Q::zero) -= &x * y;
                }
                r.retain(|_, y| !y.is_zero());
                c.resize(self.count + 1, Q::zero());
                for (i, y) in rc.iter().enumerate() {
                    c[i] -= &x * y;
                }
            }
        }
        self.rows.push((pivot, row, rc));
        self.count += 1;
        true
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Coordinates in the inserted vectors, assumed independent.
    pub fn coords(&self, f: &F) -> Option<Vec<Q>> {
        let (rest, comb) = self.reduce(flat(f), Vec::new());
        rest.is_empty().then(|| comb.into_iter().map(|x| -x).collect())
    }
}

pub enum Closure {
    Basis(Vec<F>),
    TooBig(usize),
}

/// Brackets all pairs until nothing new appears.
pub fn closure(gens: &[F], cap: usize) -> Closure {
    let mut span = Echelon::default();
    let mut basis: Vec<F> = Vec::new();
    for g in gens {
        if span.push(g) {
            basis.push(g.clone());
        }
    }
    let mut i = 0;
    while i < basis.len() {
        for j in 0..i {
            let w = bracket(&basis[j], &basis[i]);
            if span.push(&w) {
                basis.push(w);
                if basis.len() > cap {
                    return Closure::TooBig(basis.len());
                }
            }
        }
        i += 1;
    }
    Closure::Basis(basis)
}

/// `ad` matrices of a basis in its own coordinates, columns `[b_i, b_j]`.
pub fn ads(basis: &[F]) -> Vec<Vec<Vec<Q>>> {
    let mut span = Echelon::default();
    for b in basis {
        assert!(span.push(b), "basis is dependent");
    }
    let n = basis.len();
    (0..n)
        .map(|i| {
            let cols: Vec<Vec<Q>> =
                (0..n).map(|j| span.coords(&bracket(&basis[i], &basis[j])).expect("closed")).collect();
            (0..n).map(|r| (0..n).map(|c| cols[c][r].clone()).collect()).collect()
        })
        .collect()
}

pub fn killing(basis: &[F]) -> Vec<Vec<Q>> {
    let ad = ads(basis);
    let n = basis.len();
    let mut k = vec![vec![Q::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut t = Q::zero();
            for r in 0..n {
                for s in 0..n {
                    t += &ad[i][r][s] * &ad[j][s][r];
                }
            }
            k[i][j] = t;
        }
    }
    k
}

/// Sum over permutations; fine up to size eight.
pub fn det(m: &[Vec<Q>]) -> Q {
    fn go(m: &[Vec<Q>], row: usize, used: &mut Vec<bool>, sign: bool, acc: Q, out: &mut Q) {
        if acc.is_zero() {
            return;
        }
        if row == m.len() {
            if sign {
                *out -= acc;
            } else {
                *out += acc;
            }
            return;
        }
        for c in 0..m.len() {
            if used[c] {
                continue;
            }
            used[c] = true;
            let inversions = used[c + 1..].iter().filter(|u| **u).count();
            go(m, row + 1, used, sign ^ (inversions % 2 == 1), &acc * &m[row][c], out);
            used[c] = false;
        }
    }
    let mut out = Q::zero();
    go(m, 0, &mut vec![false; m.len()], false, Q::one(), &mut out);
    out
}

/// Rank by elimination on dense rows.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                let pivot = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}
