//! Witness bases for the nonsolvable forms: a split Cartan element, root
//! vectors and, when the radical is nonzero, a Levi factor.

use num_traits::{Signed, Zero};

use super::solvable::Built;
use super::util::*;
use crate::catalog::{Sl2Variant, TheoremType};
use crate::error::Result;
use crate::linalg::QMatrix;
use crate::polyrat::{q, Q};
use crate::structure::{lin, StructureConstants, Subspace};

/// Coefficient vectors tried, in order, when looking for a regular element.
fn candidates(k: usize) -> Vec<Vec<Q>> {
    let mut out = units(k);
    let coef = [1, -1, 2, -2, 3];
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            for c in coef {
                let mut v = vec![Q::zero(); k];
                v[i] = q(1);
                v[j] = q(c);
                out.push(v);
            }
        }
    }
    for w in 1..=4i64 {
        out.push((0..k as i64).map(|i| q(1 + w * i)).collect());
        out.push((0..k as i64).map(|i| q((i + 1) * (i + w))).collect());
    }
    out
}

/// Root decomposition of `ad x` on the subalgebra `space`, for `x` regular
/// and split: nonzero eigenvalues ascending, each with one root vector.
type Roots = Vec<(Q, Vec<Q>)>;

fn regular_element(sc: &StructureConstants, space: &[Vec<Q>], rank: usize) -> Option<Roots> {
    let dim = sc.dim();
    for c in candidates(space.len()) {
        let x = lin(&c, space, dim);
        let Ok(m) = sc.ad_on(&x, space) else { continue };
        let Ok(Some(pairs)) = diagonalize(&m) else { continue };
        let kernel = pairs.iter().find(|(v, _)| v.is_zero()).map_or(0, |(_, k)| k.len());
        if kernel != rank || pairs.iter().any(|(v, k)| !v.is_zero() && k.len() != 1) {
            continue;
        }
        return Some(
            pairs
                .into_iter()
                .filter(|(v, _)| !v.is_zero())
                .map(|(v, mut k)| (v, ambient(&k.remove(0), space, dim)))
                .collect(),
        );
    }
    None
}

fn root_vector(roots: &Roots, value: &Q) -> Result<Vec<Q>> {
    roots
        .iter()
        .find(|(v, _)| v == value)
        .map(|(_, e)| e.clone())
        .ok_or_else(|| not_in_catalog("root system is not of the expected shape"))
}

/// `(e, f, h)` with `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = h`, from root
/// vectors `e` and `f0` of opposite roots.
fn sl2_triple(sc: &StructureConstants, e: &[Q], f0: &[Q]) -> Result<[Vec<Q>; 3]> {
    let h0 = sc.bracket(e, f0);
    let c = coords(&sc.bracket(&h0, e), &[e.to_vec()])
        .map(|k| k[0].clone())
        .filter(|c| !c.is_zero())
        .ok_or_else(|| not_in_catalog("root vectors do not span an sl2"))?;
    let f = scaled(f0, &(q(2) / c));
    let h = sc.bracket(e, &f);
    Ok([e.to_vec(), f, h])
}

fn no_cartan() -> crate::error::Error {
    not_in_catalog("no split regular element among the search candidates")
}

/// Semisimple `L`: types 9 and 10.
pub(super) fn semisimple(sc: &StructureConstants) -> Result<Built> {
    let dim = sc.dim();
    let all = units(dim);
    match dim {
        3 => {
            let roots = regular_element(sc, &all, 1).ok_or_else(no_cartan)?;
            let a = roots[1].0.clone();
            let [e, f, h] = sl2_triple(sc, &root_vector(&roots, &a)?, &root_vector(&roots, &-&a)?)?;
            Ok((TheoremType::T9 { variant: Sl2Variant::Sl2 }, vec![e, f, h]))
        }
        6 => {
            let roots = regular_element(sc, &all, 2).ok_or_else(no_cartan)?;
            let mut basis = Vec::new();
            for (a, e) in roots.iter().filter(|(v, _)| v.is_positive()) {
                basis.extend(sl2_triple(sc, e, &root_vector(&roots, &-a)?)?);
            }
            if basis.len() != 6 {
                return Err(not_in_catalog("root system is not of type A1 + A1"));
            }
            Ok((TheoremType::T9 { variant: Sl2Variant::Sl2Sl2 }, basis))
        }
        8 => {
            let roots = regular_element(sc, &all, 2).ok_or_else(no_cartan)?;
            let pos: Vec<Q> = roots.iter().map(|r| r.0.clone()).filter(Signed::is_positive).collect();
            let simple: Vec<Q> = pos
                .iter()
                .filter(|p| !pos.iter().any(|a| pos.iter().any(|b| a != b && &(a + b) == *p)))
                .cloned()
                .collect();
            if pos.len() != 3 || simple.len() != 2 {
                return Err(not_in_catalog("root system is not of type A2"));
            }
            let [e12, e21, h1] =
                sl2_triple(sc, &root_vector(&roots, &simple[0])?, &root_vector(&roots, &-&simple[0])?)?;
            let [e23, e32, h2] =
                sl2_triple(sc, &root_vector(&roots, &simple[1])?, &root_vector(&roots, &-&simple[1])?)?;
            let e13 = sc.bracket(&e12, &e23);
            let e31 = sc.bracket(&e32, &e21);
            Ok((TheoremType::T10, vec![e12, e13, e23, e21, e31, e32, h1, h2]))
        }
        _ => Err(not_in_catalog(format!("semisimple algebra of dimension {dim}"))),
    }
}

/// Coordinates of `v` in the basis `frame`, dropping the first `skip`.
fn modulo(v: &[Q], frame: &QMatrix, skip: usize) -> Vec<Q> {
    frame.solve(v).expect("frame is a basis")[skip..].to_vec()
}

/// A complement of the radical `r` closed under brackets.
#[allow(clippy::needless_range_loop)]
fn levi_factor(sc: &StructureConstants, r: &Subspace) -> Result<Vec<Vec<Q>>> {
    let dim = sc.dim();
    let mut c = extend(&r.basis, &units(dim));
    let k = c.len();
    let mut full = c.clone();
    full.extend(r.basis.iter().cloned());
    let frame = QMatrix::from_cols(&full, dim);
    let mut s = vec![vec![vec![Q::zero(); k]; k]; k];
    for i in 0..k {
        for j in 0..k {
            s[i][j] = frame.solve(&sc.bracket(&c[i], &c[j])).expect("basis")[..k].to_vec();
        }
    }
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    let mut level = r.clone();
    while level.dim() > 0 {
        let next = sc.bracket_space(&level.basis, &level.basis);
        let mut nf = next.basis.clone();
        nf.extend(extend(&next.basis, &units(dim)));
        let nframe = QMatrix::from_cols(&nf, dim);
        let skip = next.dim();
        let w = &level.basis;
        let p = w.len();
        let mut cols: Vec<Vec<Q>> = Vec::new();
        for i in 0..k {
            for wt in w {
                let mut col = Vec::new();
                for &(a, b) in &pairs {
                    let mut v = vec![Q::zero(); dim];
                    if i == b {
                        v = axpy(&v, &q(1), &sc.bracket(&c[a], wt));
                    }
                    if i == a {
                        v = axpy(&v, &q(-1), &sc.bracket(&c[b], wt));
                    }
                    v = axpy(&v, &-&s[a][b][i], wt);
                    col.extend(modulo(&v, &nframe, skip));
                }
                cols.push(col);
            }
        }
        let mut rhs = Vec::new();
        for &(a, b) in &pairs {
            let mut resid = sc.bracket(&c[a], &c[b]);
            for (kk, ck) in c.iter().enumerate() {
                resid = axpy(&resid, &-&s[a][b][kk], ck);
            }
            rhs.extend(modulo(&resid, &nframe, skip).into_iter().map(|x| -x));
        }
        let rows = rhs.len();
        let m = QMatrix::from_cols(&cols, rows);
        let x = m.solve(&rhs).ok_or_else(|| not_in_catalog("no Levi factor"))?;
        for i in 0..k {
            let phi = lin(&x[i * p..(i + 1) * p], w, dim);
            c[i] = axpy(&c[i], &q(1), &phi);
        }
        level = next;
    }
    Ok(c)
}

/// Nonsolvable `L` with nonzero radical `r`: types 11 and 12.
pub(super) fn with_radical(sc: &StructureConstants, r: &Subspace) -> Result<Built> {
    let dim = sc.dim();
    let s = levi_factor(sc, r)?;
    if s.len() != 3 {
        return Err(not_in_catalog(format!("Levi factor of dimension {}", s.len())));
    }
    let roots = regular_element(sc, &s, 1).ok_or_else(no_cartan)?;
    let a = roots[1].0.clone();
    let [e, f, h] = sl2_triple(sc, &root_vector(&roots, &a)?, &root_vector(&roots, &-&a)?)?;
    let abelian = sc.is_abelian_space(r);
    let v = if abelian { r.clone() } else { sc.bracket_space(&r.basis, &r.basis) };
    let m = v.dim() - 1;
    let top = q(m as i64);
    let weights =
        simple_spectrum(&sc.ad_on(&h, &v.basis)?)?.ok_or_else(|| not_in_catalog("h does not act simply on V"))?;
    let v0 = weights
        .iter()
        .find(|(w, _)| *w == top)
        .map(|(_, x)| ambient(x, &v.basis, dim))
        .ok_or_else(|| not_in_catalog("V has no vector of highest weight"))?;
    let mut module = vec![v0];
    for k in 0..m {
        let next = scaled(&sc.bracket(&f, &module[k]), &recip(&q(k as i64 + 1)));
        module.push(next);
    }
    let mut basis = vec![e.clone(), f.clone(), h.clone()];
    if abelian {
        basis.extend(module);
        return Ok((TheoremType::T11 { m }, basis));
    }
    let mut eqs: Vec<Vec<Q>> = Vec::new();
    for x in [&e, &f, &h] {
        eqs.extend(sc.ad_on(x, &r.basis)?.row_vecs());
    }
    let cent = QMatrix::from_rows(&eqs).kernel();
    let z = cent
        .iter()
        .map(|c| ambient(c, &r.basis, dim))
        .find(|z| !v.contains(z))
        .ok_or_else(|| not_in_catalog("no central element of the radical outside V"))?;
    let c = scalar_of(&sc.ad_on(&z, &v.basis)?)
        .filter(|c| !c.is_zero())
        .ok_or_else(|| not_in_catalog("radical does not act on V by scalars"))?;
    basis.push(scaled(&z, &recip(&c)));
    basis.extend(module);
    Ok((TheoremType::T12 { m }, basis))
}
