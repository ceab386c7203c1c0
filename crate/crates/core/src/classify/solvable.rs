//! Witness bases for the solvable forms, built from an ideal `I`.

use num_traits::{One, Zero};

use super::util::*;
use crate::catalog::{present_affine, present_eigenvalues, TheoremType};
use crate::error::Result;
use crate::linalg::QMatrix;
use crate::polyrat::{q, Q};
use crate::structure::{StructureConstants, Subspace};

pub(super) type Built = (TheoremType, Vec<Vec<Q>>);

/// `I` abelian of codimension one: types 2, 3 and 4.
pub(super) fn abelian_codim_one(sc: &StructureConstants, a: &Subspace) -> Result<Built> {
    let dim = sc.dim();
    let comp = extend(&a.basis, &units(dim));
    if comp.len() != 1 || a.dim() == 0 {
        return Err(not_in_catalog("ideal is not of codimension one"));
    }
    let f0 = &comp[0];
    let m = sc.ad_on(f0, &a.basis)?;
    let n = a.dim();
    if let Some(lambda) = sole_eigenvalue(&m)? {
        let nil = &m - &QMatrix::identity(n).scale(&lambda);
        if nil.is_zero() && n >= 2 {
            if lambda.is_zero() {
                return Err(not_in_catalog("complement acts trivially on the ideal"));
            }
            let mut basis = a.basis.clone();
            basis.push(scaled(f0, &recip(&lambda)));
            return Ok((TheoremType::T2 { n }, basis));
        }
        let (lam, f) = if lambda.is_zero() { (0, f0.clone()) } else { (1, scaled(f0, &recip(&lambda))) };
        let nil = if lambda.is_zero() { nil } else { nil.scale(&recip(&lambda)) };
        let chain =
            single_block_chain(&nil).ok_or_else(|| not_in_catalog("several Jordan blocks for a single eigenvalue"))?;
        let mut basis: Vec<Vec<Q>> = chain.iter().map(|c| ambient(c, &a.basis, dim)).collect();
        basis.push(f);
        return Ok((TheoremType::T3 { n: n - 1, lambda: lam }, basis));
    }
    let pairs = simple_spectrum(&m)?.ok_or_else(|| not_in_catalog("ad f on I is neither a Jordan block nor simple"))?;
    let eigs: Vec<Q> = pairs.iter().map(|p| p.0.clone()).collect();
    let p = present_eigenvalues(&eigs).ok_or_else(|| not_in_catalog("eigenvalues admit no integer presentation"))?;
    let mut basis: Vec<Vec<Q>> = p.order.iter().map(|&i| ambient(&pairs[i].1, &a.basis, dim)).collect();
    basis.push(scaled(f0, &recip(&p.scale)));
    Ok((TheoremType::T4 { n: n - 1, beta: p.beta, m: p.m }, basis))
}

/// For a two-dimensional nonabelian `L/I`: `f` spanning the derived quotient
/// and `g` with `[g, f] = -f` modulo `I`.
fn affine_quotient(sc: &StructureConstants, i: &Subspace) -> Result<(Vec<Q>, Vec<Q>)> {
    let dim = sc.dim();
    let comp = extend(&i.basis, &units(dim));
    if comp.len() != 2 {
        return Err(not_in_catalog("ideal is not of codimension two"));
    }
    let f0 = sc.bracket(&comp[0], &comp[1]);
    if i.contains(&f0) {
        return Err(not_in_catalog("L/I is abelian"));
    }
    let mut span = vec![f0.clone()];
    span.extend(i.basis.iter().cloned());
    for c in &comp {
        let w = sc.bracket(c, &f0);
        let k = coords(&w, &span).ok_or_else(|| not_in_catalog("L/I is not an algebra"))?;
        if !k[0].is_zero() {
            return Ok((f0, scaled(c, &(-recip(&k[0])))));
        }
    }
    Err(not_in_catalog("L/I is abelian"))
}

/// `I` abelian of codimension two: type 5.
pub(super) fn abelian_codim_two(sc: &StructureConstants, a: &Subspace) -> Result<Built> {
    let dim = sc.dim();
    let (f0, g0) = affine_quotient(sc, a)?;
    let n = a.dim() - 1;
    let mf = sc.ad_on(&f0, &a.basis)?;
    if single_block_chain(&mf).is_none() {
        return Err(not_in_catalog("ad f on I is not a single nilpotent block"));
    }
    let pairs = simple_spectrum(&sc.ad_on(&g0, &a.basis)?)?.ok_or_else(|| not_in_catalog("ad g on I is not simple"))?;
    let (mu, top) = pairs.last().expect("nonempty").clone();
    let mut chain = vec![ambient(&top, &a.basis, dim)];
    for _ in 0..n {
        let next = sc.bracket(&f0, chain.last().expect("nonempty"));
        chain.push(next);
    }
    chain.reverse();
    let beta = q(n as i64) - &mu;
    // [g, f] + f in coordinates of the chain
    let resid = |g: &[Q], f: &[Q]| -> Result<Vec<Q>> {
        let w = axpy(&sc.bracket(g, f), &Q::one(), f);
        coords(&w, &chain).ok_or_else(|| not_in_catalog("[g, f] + f is not in I"))
    };
    let a0 = resid(&g0, &f0)?;
    let mut g = g0.clone();
    for j in 0..n {
        g = axpy(&g, &a0[j], &chain[j + 1]);
    }
    let an = resid(&g, &f0)?[n].clone();
    let slack = q(n as i64 + 1) - &beta;
    let (f, gamma) = if slack.is_zero() { (f0, an) } else { (axpy(&f0, &(-&an / &slack), &chain[n]), Q::zero()) };
    let mut basis = chain;
    basis.push(f);
    basis.push(g);
    Ok((TheoremType::T5 { n, beta, gamma }, basis))
}

/// The derived ideal `A = I'`, assumed abelian of codimension one in `I`, and
/// an element of `I` acting on it as the identity.
fn identity_on_derived(sc: &StructureConstants, i: &Subspace) -> Result<(Subspace, Vec<Q>)> {
    let a = sc.bracket_space(&i.basis, &i.basis);
    if a.dim() + 1 != i.dim() || !sc.is_abelian_space(&a) {
        return Err(not_in_catalog("I' is not an abelian hyperplane of I"));
    }
    let i0 = extend(&a.basis, &i.basis).remove(0);
    let c = scalar_of(&sc.ad_on(&i0, &a.basis)?)
        .filter(|c| !c.is_zero())
        .ok_or_else(|| not_in_catalog("I/I' does not act on I' by a scalar"))?;
    Ok((a, scaled(&i0, &recip(&c))))
}

/// `I` nonabelian of codimension one: types 6 and 7.
pub(super) fn nonabelian_codim_one(sc: &StructureConstants, i: &Subspace) -> Result<Built> {
    let dim = sc.dim();
    let (a, f) = identity_on_derived(sc, i)?;
    let comp = extend(&i.basis, &units(dim));
    if comp.len() != 1 {
        return Err(not_in_catalog("ideal is not of codimension one"));
    }
    let w = sc.bracket(&f, &comp[0]);
    if !a.contains(&w) {
        return Err(not_in_catalog("L/I' is not abelian"));
    }
    let g1: Vec<Q> = comp[0].iter().zip(&w).map(|(x, y)| x - y).collect();
    let m = sc.ad_on(&g1, &a.basis)?;
    let n = a.dim() - 1;
    if let Some(t) = sole_eigenvalue(&m)? {
        let nil = &m - &QMatrix::identity(a.dim()).scale(&t);
        let chain = single_block_chain(&nil).ok_or_else(|| not_in_catalog("ad g on I' has several Jordan blocks"))?;
        let g = axpy(&g1, &-t, &f);
        let mut basis: Vec<Vec<Q>> = chain.iter().map(|c| ambient(c, &a.basis, dim)).collect();
        basis.push(f);
        basis.push(g);
        return Ok((TheoremType::T6 { n }, basis));
    }
    let pairs = simple_spectrum(&m)?.ok_or_else(|| not_in_catalog("ad g on I' is not simple"))?;
    let vals: Vec<Q> = pairs.iter().map(|p| p.0.clone()).collect();
    let p = present_affine(&vals).ok_or_else(|| not_in_catalog("eigenvalues admit no integer presentation"))?;
    // g' = f + (g1 - origin f) / step acts on e_i by 1 + m_i
    let shifted = axpy(&g1, &-&p.origin, &f);
    let g = axpy(&f, &recip(&p.step), &shifted);
    let mut basis: Vec<Vec<Q>> = p.order.iter().map(|&k| ambient(&pairs[k].1, &a.basis, dim)).collect();
    basis.push(f);
    basis.push(g);
    Ok((TheoremType::T7 { n, beta: q(1), m: p.m }, basis))
}

/// `I` nonabelian of codimension two: type 8, in the normal form with
/// `alpha = beta = 0`.
pub(super) fn nonabelian_codim_two(sc: &StructureConstants, i: &Subspace) -> Result<Built> {
    let dim = sc.dim();
    let (a, g) = identity_on_derived(sc, i)?;
    if extend(&i.basis, &units(dim)).len() != 2 {
        return Err(not_in_catalog("ideal is not of codimension two"));
    }
    let z = Subspace::new(&sc.ad(&g).kernel(), dim);
    if z.dim() + a.dim() != dim {
        return Err(not_in_catalog("centralizer of g has the wrong dimension"));
    }
    let zd = sc.bracket_space(&z.basis, &z.basis);
    if zd.dim() != 1 {
        return Err(not_in_catalog("centralizer of g is not of the expected shape"));
    }
    let f = zd.basis[0].clone();
    let mut h0 = None;
    for v in &z.basis {
        let w = sc.bracket(v, &f);
        if let Some(k) = coords(&w, std::slice::from_ref(&f)) {
            if !k[0].is_zero() {
                h0 = Some(scaled(v, &recip(&k[0])));
                break;
            }
        }
    }
    let h0 = h0.ok_or_else(|| not_in_catalog("no element acts on f by a nonzero scalar"))?;
    let n = a.dim() - 1;
    if single_block_chain(&sc.ad_on(&f, &a.basis)?).is_none() {
        return Err(not_in_catalog("ad f on I' is not a single nilpotent block"));
    }
    let pairs =
        simple_spectrum(&sc.ad_on(&h0, &a.basis)?)?.ok_or_else(|| not_in_catalog("ad h on I' is not simple"))?;
    let (mu, bottom) = pairs[0].clone();
    let mut chain = vec![ambient(&bottom, &a.basis, dim)];
    for _ in 0..n {
        let next = sc.bracket(&f, chain.last().expect("nonempty"));
        chain.push(next);
    }
    chain.reverse();
    let h = axpy(&h0, &(-q(n as i64) - &mu), &g);
    let mut basis = chain;
    basis.push(f);
    basis.push(g);
    basis.push(h);
    Ok((TheoremType::T8 { n, alpha: q(0), beta: q(0) }, basis))
}
