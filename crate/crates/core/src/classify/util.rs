use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{in_span, QMatrix};
use crate::polyrat::Q;
use crate::structure::{lin, StructureConstants};

pub(super) fn not_in_catalog(reason: impl Into<String>) -> Error {
    Error::NotInCatalog(reason.into())
}

pub(super) fn scaled(v: &[Q], c: &Q) -> Vec<Q> {
    v.iter().map(|x| x * c).collect()
}

/// `u + c v`
pub(super) fn axpy(u: &[Q], c: &Q, v: &[Q]) -> Vec<Q> {
    u.iter().zip(v).map(|(a, b)| a + c * b).collect()
}

/// Vectors from `pool` extending `base` to a basis of `span(base + pool)`.
pub(super) fn extend(base: &[Vec<Q>], pool: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let mut acc = base.to_vec();
    let mut out = Vec::new();
    for v in pool {
        if !in_span(v, &acc) {
            acc.push(v.clone());
            out.push(v.clone());
        }
    }
    out
}

pub(super) fn units(dim: usize) -> Vec<Vec<Q>> {
    QMatrix::identity(dim).row_vecs()
}

/// Coordinates of `v` in the independent family `basis`.
pub(super) fn coords(v: &[Q], basis: &[Vec<Q>]) -> Option<Vec<Q>> {
    if basis.is_empty() {
        return v.iter().all(Zero::is_zero).then(Vec::new);
    }
    QMatrix::from_cols(basis, v.len()).solve(v)
}

/// Structure constants in the basis `basis` (which must be a basis).
pub(super) fn rebase(sc: &StructureConstants, basis: &[Vec<Q>]) -> Result<StructureConstants> {
    let n = sc.dim();
    let m = QMatrix::from_cols(basis, n);
    if basis.len() != n || m.rank() != n {
        return Err(not_in_catalog("witness vectors do not form a basis"));
    }
    let mut out = StructureConstants::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            let w = sc.bracket(&basis[i], &basis[j]);
            let c = m.solve(&w).expect("invertible");
            out.set_bracket(i, j, &c);
        }
    }
    Ok(out)
}

/// For a nilpotent matrix with a single Jordan block, the chain
/// `v_0 <- v_1 <- ... <- v_top` with `N v_i = v_(i-1)` and `N v_0 = 0`.
pub(super) fn single_block_chain(n: &QMatrix) -> Option<Vec<Vec<Q>>> {
    let d = n.rows();
    if d == 0 || !n.is_nilpotent() || n.rank() + 1 != d {
        return None;
    }
    let image: Vec<Vec<Q>> = (0..d).map(|j| n.col(j)).collect();
    let top = units(d).into_iter().find(|u| !in_span(u, &image))?;
    let mut chain = vec![top];
    for _ in 1..d {
        let next = n.mul_vec(chain.last().expect("nonempty"));
        chain.push(next);
    }
    chain.reverse();
    Some(chain)
}

pub(super) type Eigenspaces = Vec<(Q, Vec<Vec<Q>>)>;

/// Eigenpairs of a matrix that is diagonalizable over the rationals, with
/// eigenvalues ascending. `None` when it is not.
pub(super) fn diagonalize(m: &QMatrix) -> Result<Option<Eigenspaces>> {
    let spec = m.rational_eigen()?;
    if !spec.split {
        return Err(Error::NonRationalSpectrum);
    }
    let n = m.rows();
    let mut out = Vec::new();
    let mut total = 0;
    for e in spec.eigen {
        let k = (m - &QMatrix::identity(n).scale(&e.value)).kernel();
        total += k.len();
        out.push((e.value, k));
    }
    Ok((total == n).then_some(out))
}

pub(super) type Eigenpair = (Q, Vec<Q>);

/// Distinct eigenvalues with one eigenvector each, when the matrix is
/// diagonalizable with a simple spectrum.
pub(super) fn simple_spectrum(m: &QMatrix) -> Result<Option<Vec<Eigenpair>>> {
    Ok(diagonalize(m)?.and_then(|pairs| {
        pairs.into_iter().map(|(v, mut k)| (k.len() == 1).then(|| (v, k.remove(0)))).collect::<Option<Vec<_>>>()
    }))
}

/// Single eigenvalue of a split matrix, if there is exactly one.
pub(super) fn sole_eigenvalue(m: &QMatrix) -> Result<Option<Q>> {
    let spec = m.rational_eigen()?;
    if !spec.split {
        return Err(Error::NonRationalSpectrum);
    }
    Ok((spec.eigen.len() == 1).then(|| spec.eigen[0].value.clone()))
}

/// `c` with `m = c I`, if `m` is scalar.
pub(super) fn scalar_of(m: &QMatrix) -> Option<Q> {
    let n = m.rows();
    if n == 0 {
        return None;
    }
    let c = m.get(0, 0).clone();
    (m == &QMatrix::identity(n).scale(&c)).then_some(c)
}

pub(super) fn ambient(coords: &[Q], space: &[Vec<Q>], dim: usize) -> Vec<Q> {
    lin(coords, space, dim)
}

pub(super) fn recip(c: &Q) -> Q {
    Q::one() / c
}
