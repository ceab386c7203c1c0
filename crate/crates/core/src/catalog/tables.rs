use num_traits::{One, Zero};

use super::types::{Sl2Variant, TheoremType};
use crate::error::Result;
use crate::linalg::QMatrix;
use crate::polyrat::{q, Q};
use crate::structure::StructureConstants;

struct Builder {
    sc: StructureConstants,
}

impl Builder {
    fn new(dim: usize) -> Self {
        Builder { sc: StructureConstants::zero(dim) }
    }

    /// `[b_i, b_j] += c b_k`
    fn rel(&mut self, i: usize, j: usize, k: usize, c: Q) {
        if !c.is_zero() {
            self.sc.add_entry(i, j, k, c);
        }
    }
}

/// Structure constants of the abstract form, in the order of
/// [`TheoremType::basis_names`].
pub fn abstract_table(t: &TheoremType) -> Result<StructureConstants> {
    t.validate()?;
    Ok(build(t, false))
}

/// Types 5 and 8 with the sign conventions `[g,f] = f - gamma e_n` and
/// `gamma = alpha (beta - n)`. Both violate the Jacobi identity once `n >= 1`;
/// every other type is returned unchanged.
pub fn uncorrected_table(t: &TheoremType) -> Result<StructureConstants> {
    t.validate()?;
    Ok(build(t, true))
}

fn build(t: &TheoremType, uncorrected: bool) -> StructureConstants {
    let mut b = Builder::new(t.dim());
    let one = Q::one;
    match t {
        TheoremType::T1 { .. } => {}
        TheoremType::T2 { n } => {
            for i in 0..*n {
                b.rel(*n, i, i, one());
            }
        }
        TheoremType::T3 { n, lambda } => {
            let f = n + 1;
            for i in 0..=*n {
                b.rel(f, i, i, q(*lambda as i64));
                if i > 0 {
                    b.rel(f, i, i - 1, one());
                }
            }
        }
        TheoremType::T4 { n, beta, m } => {
            let f = n + 1;
            for (i, &mi) in m.iter().enumerate().take(n + 1) {
                b.rel(f, i, i, one() + beta * q(mi));
            }
        }
        TheoremType::T5 { n, beta, gamma } => {
            let (f, g) = (n + 1, n + 2);
            for i in 0..=*n {
                if i > 0 {
                    b.rel(f, i, i - 1, one());
                }
                b.rel(g, i, i, q(i as i64) - beta);
            }
            if uncorrected {
                b.rel(g, f, f, one());
                b.rel(g, f, *n, -gamma.clone());
            } else {
                b.rel(g, f, f, -one());
                b.rel(g, f, *n, gamma.clone());
            }
        }
        TheoremType::T6 { n } => {
            let (f, g) = (n + 1, n + 2);
            for i in 0..=*n {
                b.rel(f, i, i, one());
                if i > 0 {
                    b.rel(g, i, i - 1, one());
                }
            }
        }
        TheoremType::T7 { n, beta, m } => {
            let (f, g) = (n + 1, n + 2);
            for (i, &mi) in m.iter().enumerate().take(n + 1) {
                b.rel(f, i, i, one());
                b.rel(g, i, i, one() + beta * q(mi));
            }
        }
        TheoremType::T8 { n, alpha, beta } => {
            let (f, g, h) = (n + 1, n + 2, n + 3);
            let gamma =
                if uncorrected { alpha * (beta - q(*n as i64)) } else { TheoremType::t8_gamma(*n, alpha, beta) };
            for i in 0..=*n {
                if i > 0 {
                    b.rel(f, i, i - 1, one());
                }
                b.rel(g, i, i, one());
                b.rel(h, i, i, -(beta + q(i as i64)));
            }
            b.rel(g, f, *n, alpha.clone());
            b.rel(h, f, f, one());
            b.rel(h, f, *n, -gamma);
        }
        TheoremType::T9 { variant } => {
            sl2_into(&mut b, 0);
            if *variant == Sl2Variant::Sl2Sl2 {
                sl2_into(&mut b, 3);
            }
        }
        TheoremType::T10 => sl3_into(&mut b),
        TheoremType::T11 { m } => {
            sl2_into(&mut b, 0);
            module_into(&mut b, *m, 3);
        }
        TheoremType::T12 { m } => {
            sl2_into(&mut b, 0);
            module_into(&mut b, *m, 4);
            for k in 0..=*m {
                b.rel(3, 4 + k, 4 + k, one());
            }
        }
    }
    b.sc
}

/// `e, f, h` at `o, o+1, o+2`.
fn sl2_into(b: &mut Builder, o: usize) {
    let (e, f, h) = (o, o + 1, o + 2);
    b.rel(h, e, e, q(2));
    b.rel(h, f, f, q(-2));
    b.rel(e, f, h, q(1));
}

/// The irreducible module of highest weight `m` on `v_0..v_m` starting at `o`.
fn module_into(b: &mut Builder, m: usize, o: usize) {
    let (e, f, h) = (0, 1, 2);
    for k in 0..=m {
        b.rel(h, o + k, o + k, q(m as i64 - 2 * k as i64));
        if k < m {
            b.rel(f, o + k, o + k + 1, q(k as i64 + 1));
        }
        if k > 0 {
            b.rel(e, o + k, o + k - 1, q((m - k + 1) as i64));
        }
    }
}

/// Matrix units of sl3 in the order `E12, E13, E23, E21, E31, E32, H1, H2`.
pub fn sl3_matrices() -> Vec<QMatrix> {
    let unit = |i: usize, j: usize| {
        let mut m = QMatrix::zeros(3, 3);
        m.set(i, j, q(1));
        m
    };
    let mut out: Vec<QMatrix> =
        [(0, 1), (0, 2), (1, 2), (1, 0), (2, 0), (2, 1)].iter().map(|&(i, j)| unit(i, j)).collect();
    out.push(&unit(0, 0) - &unit(1, 1));
    out.push(&unit(1, 1) - &unit(2, 2));
    out
}

fn sl3_into(b: &mut Builder) {
    let mats = sl3_matrices();
    let flat: Vec<Vec<Q>> = mats
        .iter()
        .map(|m| (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| m.get(i, j).clone()).collect())
        .collect();
    let basis = QMatrix::from_cols(&flat, 9);
    for i in 0..8 {
        for j in i + 1..8 {
            let c = mats[i].commutator(&mats[j]);
            let v: Vec<Q> =
                (0..3).flat_map(|r| (0..3).map(move |s| (r, s))).map(|(r, s)| c.get(r, s).clone()).collect();
            let coords = basis.solve(&v).expect("sl3 is closed");
            for (k, x) in coords.into_iter().enumerate() {
                b.rel(i, j, k, x);
            }
        }
    }
}
