//! Structure constants and the analyses that depend only on them.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::linalg::{combine, in_span, intersect, span_basis, QMatrix};
use crate::polyrat::{fmt_q, Q};

/// Dense table `c[i][j][k]` with `[b_i, b_j] = sum_k c[i][j][k] b_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructureConstants {
    dim: usize,
    c: Vec<Q>,
}

/// A subspace of the algebra given by independent coordinate vectors in
/// reduced echelon form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    pub basis: Vec<Vec<Q>>,
}

impl Subspace {
    pub fn new(vectors: &[Vec<Q>], dim: usize) -> Self {
        Subspace { basis: span_basis(vectors, dim) }
    }

    pub fn whole(dim: usize) -> Self {
        Subspace { basis: QMatrix::identity(dim).row_vecs() }
    }

    pub fn zero() -> Self {
        Subspace { basis: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        in_span(v, &self.basis)
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Predicates {
    pub abelian: bool,
    pub solvable: bool,
    pub nilpotent: bool,
    pub perfect: bool,
    pub center_dim: usize,
}

/// Lines spanned by simultaneous eigenvectors of the adjoint action.
/// Every nonzero vector of each returned eigenspace spans an ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealLines {
    pub all_lines: bool,
    pub eigenspaces: Vec<Subspace>,
}

impl StructureConstants {
    pub fn zero(dim: usize) -> Self {
        StructureConstants { dim, c: vec![Q::zero(); dim * dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Q {
        &self.c[self.idx(i, j, k)]
    }

    /// Sets `[b_i, b_j]` to `v`, and `[b_j, b_i]` to `-v`.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: &[Q]) {
        for (k, x) in v.iter().enumerate() {
            let a = self.idx(i, j, k);
            let b = self.idx(j, i, k);
            self.c[a] = x.clone();
            self.c[b] = -x.clone();
        }
    }

    /// Adds `c * b_k` to `[b_i, b_j]` (and antisymmetrically).
    pub fn add_entry(&mut self, i: usize, j: usize, k: usize, c: Q) {
        let a = self.idx(i, j, k);
        let b = self.idx(j, i, k);
        self.c[a] += &c;
        self.c[b] -= c;
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Q> {
        (0..self.dim).map(|k| self.get(i, j, k).clone()).collect()
    }

    pub fn bracket(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                let ab = a * b;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        *o += &ab * c;
                    }
                }
            }
        }
        out
    }

    /// Nonzero entries `(i, j, k, c)` with `i < j`.
    pub fn nonzero(&self) -> Vec<(usize, usize, usize, Q)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in 0..self.dim {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn nonzero_strings(&self) -> Vec<(usize, usize, usize, String)> {
        self.nonzero().into_iter().map(|(i, j, k, c)| (i, j, k, fmt_q(&c))).collect()
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.dim)
            .all(|i| (0..self.dim).all(|j| (0..self.dim).all(|k| *self.get(i, j, k) == -self.get(j, i, k).clone())))
    }

    pub fn satisfies_jacobi(&self) -> bool {
        let e = |i: usize| unit(self.dim, i);
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let a = self.bracket(&e(i), &self.basis_bracket(j, k));
                    let b = self.bracket(&e(j), &self.basis_bracket(k, i));
                    let c = self.bracket(&e(k), &self.basis_bracket(i, j));
                    if a.iter().zip(&b).zip(&c).any(|((x, y), z)| !(x + y + z).is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Matrix of `w -> [v, w]`.
    pub fn ad(&self, v: &[Q]) -> QMatrix {
        let cols: Vec<Vec<Q>> = (0..self.dim).map(|j| self.bracket(v, &unit(self.dim, j))).collect();
        QMatrix::from_cols(&cols, self.dim)
    }

    pub fn ad_basis(&self, i: usize) -> QMatrix {
        self.ad(&unit(self.dim, i))
    }

    /// Matrix of `ad v` restricted to an invariant subspace, in its basis.
    pub fn ad_on(&self, v: &[Q], space: &[Vec<Q>]) -> Result<QMatrix> {
        let m = QMatrix::from_cols(space, self.dim);
        let mut cols = Vec::with_capacity(space.len());
        for w in space {
            let img = self.bracket(v, w);
            cols.push(m.solve(&img).ok_or(Error::NotInSpan)?);
        }
        Ok(QMatrix::from_cols(&cols, space.len()))
    }

    /// Span of all brackets `[a, b]`.
    pub fn bracket_space(&self, a: &[Vec<Q>], b: &[Vec<Q>]) -> Subspace {
        let mut vs = Vec::new();
        for u in a {
            for v in b {
                let w = self.bracket(u, v);
                if w.iter().any(|x| !x.is_zero()) {
                    vs.push(w);
                }
            }
        }
        Subspace::new(&vs, self.dim)
    }

    pub fn derived(&self) -> Subspace {
        let all = Subspace::whole(self.dim);
        self.bracket_space(&all.basis, &all.basis)
    }

    /// Chain of distinct terms, starting at the whole algebra and ending at
    /// the first term that repeats.
    pub fn series(&self, kind: SeriesKind) -> Vec<Subspace> {
        let whole = Subspace::whole(self.dim);
        let mut out = vec![whole.clone()];
        loop {
            let last = out.last().expect("nonempty");
            let next = match kind {
                SeriesKind::Derived => self.bracket_space(&last.basis, &last.basis),
                SeriesKind::LowerCentral => self.bracket_space(&whole.basis, &last.basis),
            };
            if next.dim() == last.dim() {
                break;
            }
            let stop = next.dim() == 0;
            out.push(next);
            if stop {
                break;
            }
        }
        out
    }

    pub fn center(&self) -> Subspace {
        // v is central iff sum_i v_i c[i][j][k] = 0 for all j, k.
        let m = QMatrix::from_fn(self.dim * self.dim, self.dim, |r, i| {
            let (j, k) = (r / self.dim, r % self.dim);
            self.get(i, j, k).clone()
        });
        Subspace::new(&m.kernel(), self.dim)
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn predicates(&self) -> Predicates {
        let derived = self.series(SeriesKind::Derived);
        let lower = self.series(SeriesKind::LowerCentral);
        Predicates {
            abelian: self.is_abelian(),
            solvable: derived.last().is_some_and(|s| s.dim() == 0),
            nilpotent: lower.last().is_some_and(|s| s.dim() == 0),
            perfect: derived.len() == 1 && self.dim > 0,
            center_dim: self.center().dim(),
        }
    }

    pub fn killing_form(&self, exec: Exec) -> QMatrix {
        let ads: Vec<QMatrix> = exec.map(&(0..self.dim).collect::<Vec<_>>(), |&i| self.ad_basis(i));
        let pairs: Vec<(usize, usize)> = (0..self.dim).flat_map(|i| (i..self.dim).map(move |j| (i, j))).collect();
        let vals = exec.map(&pairs, |&(i, j)| trace_of_product(&ads[i], &ads[j]));
        let mut k = QMatrix::zeros(self.dim, self.dim);
        for ((i, j), v) in pairs.into_iter().zip(vals) {
            k.set(i, j, v.clone());
            k.set(j, i, v);
        }
        k
    }

    /// Solvable radical as the Killing-orthogonal complement of the derived
    /// algebra.
    pub fn radical(&self, exec: Exec) -> Subspace {
        let k = self.killing_form(exec);
        let derived = self.derived();
        if derived.dim() == 0 {
            return Subspace::whole(self.dim);
        }
        let rows: Vec<Vec<Q>> = derived.basis.iter().map(|w| k.mul_vec(w)).collect();
        Subspace::new(&QMatrix::from_rows(&rows).kernel(), self.dim)
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        (0..self.dim).all(|i| s.basis.iter().all(|v| s.contains(&self.bracket(&unit(self.dim, i), v))))
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.basis.iter().all(|u| s.basis.iter().all(|v| s.contains(&self.bracket(u, v))))
    }

    pub fn is_abelian_space(&self, s: &Subspace) -> bool {
        s.basis
            .iter()
            .enumerate()
            .all(|(i, u)| s.basis[i + 1..].iter().all(|v| self.bracket(u, v).iter().all(Zero::is_zero)))
    }

    /// Whether the subalgebra `s` is solvable.
    pub fn is_solvable_space(&self, s: &Subspace) -> bool {
        let mut cur = s.clone();
        loop {
            if cur.dim() == 0 {
                return true;
            }
            let next = self.bracket_space(&cur.basis, &cur.basis);
            if next.dim() == cur.dim() {
                return false;
            }
            cur = next;
        }
    }

    /// Structure constants of the subalgebra `s` in its own basis.
    pub fn restrict(&self, s: &Subspace) -> Result<StructureConstants> {
        let n = s.dim();
        let m = QMatrix::from_cols(&s.basis, self.dim);
        let mut out = StructureConstants::zero(n);
        for i in 0..n {
            for j in i + 1..n {
                let w = self.bracket(&s.basis[i], &s.basis[j]);
                let coords = m.solve(&w).ok_or(Error::NotInSpan)?;
                out.set_bracket(i, j, &coords);
            }
        }
        Ok(out)
    }

    /// Structure constants of the quotient by the ideal `r`, on a complement
    /// spanned by standard basis vectors.
    pub fn quotient(&self, r: &Subspace) -> Result<StructureConstants> {
        let mut comp: Vec<usize> = Vec::new();
        let mut acc = r.basis.clone();
        for i in 0..self.dim {
            let e = unit(self.dim, i);
            if !in_span(&e, &acc) {
                acc.push(e);
                comp.push(i);
            }
        }
        let n = comp.len();
        let mut cols: Vec<Vec<Q>> = comp.iter().map(|&i| unit(self.dim, i)).collect();
        cols.extend(r.basis.iter().cloned());
        let m = QMatrix::from_cols(&cols, self.dim);
        let mut out = StructureConstants::zero(n);
        for a in 0..n {
            for b in a + 1..n {
                let w = self.basis_bracket(comp[a], comp[b]);
                let coords = m.solve(&w).ok_or(Error::NotInSpan)?;
                out.set_bracket(a, b, &coords[..n]);
            }
        }
        Ok(out)
    }

    /// Joint rational eigenspaces of the adjoint action.
    pub fn one_dim_ideals(&self) -> Result<IdealLines> {
        if self.is_abelian() {
            return Ok(IdealLines { all_lines: true, eigenspaces: vec![Subspace::whole(self.dim)] });
        }
        let mut spaces = vec![Subspace::whole(self.dim)];
        for i in 0..self.dim {
            let ad = self.ad_basis(i);
            let spec = ad.rational_eigen()?;
            if !spec.split {
                return Err(Error::NonRationalSpectrum);
            }
            let mut next = Vec::new();
            for e in &spec.eigen {
                let shifted = &ad - &QMatrix::identity(self.dim).scale(&e.value);
                let eig = shifted.kernel();
                for s in &spaces {
                    let w = intersect(&s.basis, &eig, self.dim);
                    if !w.is_empty() {
                        next.push(Subspace { basis: w });
                    }
                }
            }
            spaces = next;
            if spaces.is_empty() {
                break;
            }
        }
        Ok(IdealLines { all_lines: false, eigenspaces: spaces })
    }
}

fn trace_of_product(a: &QMatrix, b: &QMatrix) -> Q {
    let n = a.rows();
    let mut t = Q::zero();
    for i in 0..n {
        for k in 0..n {
            let x = a.get(i, k);
            if !x.is_zero() {
                let y = b.get(k, i);
                if !y.is_zero() {
                    t += x * y;
                }
            }
        }
    }
    t
}

pub fn unit(dim: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    v[i] = Q::one();
    v
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `sum c_i v_i` for coordinate vectors.
pub fn lin(coeffs: &[Q], vectors: &[Vec<Q>], dim: usize) -> Vec<Q> {
    combine(coeffs, vectors, dim)
}
