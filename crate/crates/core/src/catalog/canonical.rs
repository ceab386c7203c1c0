use num_traits::{One, Signed, ToPrimitive, Zero};

use super::types::{Sl2Variant, TheoremType};
use crate::polyrat::{q, qr, rational_gcd, Q};

/// A presentation of distinct eigenvalues `lambda` as
/// `scale * (1 + beta m_i)`, where `m_i` belongs to `lambda[order[i]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenPresentation {
    pub beta: Q,
    pub m: Vec<i64>,
    pub order: Vec<usize>,
    pub scale: Q,
}

/// Presentation with `m_0 = 0`, the other `m_i` ascending and coprime. Among
/// the choices of the eigenvalue sent to 1 and the sign of `beta`, the one
/// with the smallest `(max |m_i|, number of negative m_i, sign of beta, m,
/// beta)` wins.
///
/// Returns `None` unless at least two pairwise distinct eigenvalues are given.
pub fn present_eigenvalues(eigs: &[Q]) -> Option<EigenPresentation> {
    let mut sorted = eigs.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != eigs.len() || eigs.len() < 2 {
        return None;
    }
    type Key = (i64, usize, bool, Vec<i64>, Q);
    let mut best: Option<(Key, EigenPresentation)> = None;
    for (j, lj) in eigs.iter().enumerate() {
        if lj.is_zero() {
            continue;
        }
        let v: Vec<Q> = eigs.iter().map(|l| l / lj - Q::one()).collect();
        let b0 = rational_gcd(&v)?;
        for sign in [1, -1] {
            let beta = &b0 * q(sign);
            let mut rest: Vec<(i64, usize)> = Vec::new();
            for (i, vi) in v.iter().enumerate() {
                if i != j {
                    rest.push((to_int(&(vi / &beta))?, i));
                }
            }
            rest.sort();
            let mut m = vec![0];
            let mut order = vec![j];
            for (k, i) in rest {
                m.push(k);
                order.push(i);
            }
            let key = (
                m.iter().map(|k| k.abs()).max().unwrap_or(0),
                m.iter().filter(|k| **k < 0).count(),
                beta.is_negative(),
                m.clone(),
                beta.clone(),
            );
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, EigenPresentation { beta, m, order, scale: lj.clone() }));
            }
        }
    }
    best.map(|(_, p)| p)
}

fn to_int(v: &Q) -> Option<i64> {
    if v.is_integer() {
        v.to_integer().to_i64()
    } else {
        None
    }
}

/// `(beta, m)` of [`present_eigenvalues`].
pub fn normalize_eigenvalues(eigs: &[Q]) -> Option<(Q, Vec<i64>)> {
    present_eigenvalues(eigs).map(|p| (p.beta, p.m))
}

/// A presentation of distinct values `lambda` as `origin + step * m_i`,
/// where `m_i` belongs to `lambda[order[i]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffinePresentation {
    pub m: Vec<i64>,
    pub order: Vec<usize>,
    pub origin: Q,
    pub step: Q,
}

/// Normal form up to affine maps: `m_0 = 0`, the rest ascending with
/// coprime differences, minimizing `(max |m_i|, number of negative m_i, m)`.
pub fn present_affine(values: &[Q]) -> Option<AffinePresentation> {
    let mut sorted = values.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != values.len() || values.is_empty() {
        return None;
    }
    let diffs: Vec<Q> = values.iter().map(|v| v - &values[0]).collect();
    let g = rational_gcd(&diffs).unwrap_or_else(Q::one);
    type Key = (i64, usize, Vec<i64>);
    let mut best: Option<(Key, AffinePresentation)> = None;
    for (j, origin) in values.iter().enumerate() {
        for sign in [1, -1] {
            let step = &g * q(sign);
            let mut rest: Vec<(i64, usize)> = Vec::new();
            for (i, v) in values.iter().enumerate() {
                if i != j {
                    rest.push((to_int(&((v - origin) / &step))?, i));
                }
            }
            rest.sort();
            let mut m = vec![0];
            let mut order = vec![j];
            for (k, i) in rest {
                m.push(k);
                order.push(i);
            }
            let key = (m.iter().map(|k| k.abs()).max().unwrap_or(0), m.iter().filter(|k| **k < 0).count(), m.clone());
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, AffinePresentation { m, order, origin: origin.clone(), step }));
            }
        }
    }
    best.map(|(_, p)| p)
}

/// Normal form of distinct integers up to `m -> s (m - m_j) / g`.
pub fn normalize_affine(m: &[i64]) -> Vec<i64> {
    let values: Vec<Q> = m.iter().map(|&k| q(k)).collect();
    present_affine(&values).map(|p| p.m).unwrap_or_default()
}

fn height(v: &Q) -> (num_bigint::BigInt, bool, Q) {
    (v.numer().abs().max(v.denom().clone()), v.is_negative(), v.clone())
}

fn t4_from_eigenvalues(eigs: &[Q]) -> TheoremType {
    let (beta, m) = normalize_eigenvalues(eigs).expect("distinct eigenvalues");
    TheoremType::T4 { n: m.len() - 1, beta, m }
}

/// The representative of the isomorphism class of `t` with the smallest
/// type index, with normalized parameters.
pub fn canonical_form(t: &TheoremType) -> TheoremType {
    match t {
        TheoremType::T3 { n: 0, lambda: 0 } => TheoremType::T1 { n: 2 },
        TheoremType::T3 { n: 0, .. } => TheoremType::T2 { n: 1 },
        TheoremType::T4 { beta, m, .. } => {
            let eigs: Vec<Q> = m.iter().map(|&k| Q::one() + beta * q(k)).collect();
            t4_from_eigenvalues(&eigs)
        }
        TheoremType::T5 { n: 0, beta, gamma } => {
            if beta.is_one() {
                if gamma.is_zero() {
                    TheoremType::T2 { n: 2 }
                } else {
                    TheoremType::T3 { n: 1, lambda: 1 }
                }
            } else {
                t4_from_eigenvalues(&[-beta.clone(), q(-1)])
            }
        }
        TheoremType::T5 { n, beta, gamma } => {
            let top = q(*n as i64 + 1);
            let mut beta = beta.clone();
            if *n == 1 && !beta.is_one() {
                let dual = &beta / (&beta - Q::one());
                if height(&dual) < height(&beta) {
                    beta = dual;
                }
            }
            let gamma = if beta == top && !gamma.is_zero() { Q::one() } else { Q::zero() };
            TheoremType::T5 { n: *n, beta, gamma }
        }
        TheoremType::T6 { n: 0 } => t4_from_eigenvalues(&[q(1), q(0)]),
        TheoremType::T6 { n: 1 } => TheoremType::T5 { n: 1, beta: q(1), gamma: q(0) },
        TheoremType::T7 { n, m, .. } => TheoremType::T7 { n: *n, beta: q(1), m: normalize_affine(m) },
        TheoremType::T8 { n: 0, .. } => TheoremType::T7 { n: 1, beta: q(1), m: normalize_affine(&[0, 1]) },
        TheoremType::T8 { n, .. } => TheoremType::T8 { n: *n, alpha: q(0), beta: q(0) },
        other => other.clone(),
    }
}

/// The standard parameter grid.
pub fn grid() -> Vec<TheoremType> {
    let betas = [q(1), q(2), q(-1), qr(1, 2)];
    let m_sets: [&[i64]; 2] = [&[0, 2, -1, 3, 1], &[-3, 1, 3, -2, 0]];
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push(TheoremType::T1 { n });
    }
    for n in 1..=4 {
        out.push(TheoremType::T2 { n });
    }
    for n in 0..=4 {
        for lambda in 0..=1 {
            out.push(TheoremType::T3 { n, lambda });
        }
    }
    for n in 1..=4 {
        for beta in &betas {
            for ms in &m_sets {
                out.push(TheoremType::T4 { n, beta: beta.clone(), m: ms[..=n].to_vec() });
            }
        }
    }
    for n in 0..=4 {
        for beta in &betas {
            for gamma in [q(0), q(1)] {
                out.push(TheoremType::T5 { n, beta: beta.clone(), gamma });
            }
        }
    }
    for n in 0..=4 {
        out.push(TheoremType::T6 { n });
    }
    for n in 1..=4 {
        for beta in &betas {
            for ms in &m_sets {
                out.push(TheoremType::T7 { n, beta: beta.clone(), m: ms[..=n].to_vec() });
            }
        }
    }
    for n in 0..=4 {
        for alpha in [q(0), q(1), q(-1)] {
            for beta in &betas {
                out.push(TheoremType::T8 { n, alpha: alpha.clone(), beta: beta.clone() });
            }
        }
    }
    out.push(TheoremType::T9 { variant: Sl2Variant::Sl2 });
    out.push(TheoremType::T9 { variant: Sl2Variant::Sl2Sl2 });
    out.push(TheoremType::T10);
    for m in 0..=3 {
        out.push(TheoremType::T11 { m });
    }
    for m in 0..=3 {
        out.push(TheoremType::T12 { m });
    }
    out
}
