use std::collections::HashMap;

use serde::Serialize;

use super::span::{element, function_relations, DerivationSpan};
use super::table::{IdealLines, Predicates, SeriesKind, StructureConstants, Subspace};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::linalg::QMatrix;
use crate::polyrat::Q;
use crate::vectorfield::Derivation;

pub const DEFAULT_DIM_CAP: usize = 16;

/// A finite-dimensional Lie algebra of derivations: an independent basis and
/// its structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    basis: Vec<Derivation>,
    sc: StructureConstants,
    span: SpanHandle,
}

/// Wrapper so the derivation span does not take part in equality.
#[derive(Debug, Clone)]
struct SpanHandle(DerivationSpan);

impl PartialEq for SpanHandle {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl Eq for SpanHandle {}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScExport {
    pub dim: usize,
    pub basis: Vec<String>,
    pub sc: Vec<(usize, usize, usize, String)>,
}

impl LieAlgebra {
    /// Smallest bracket-closed rational span containing `gens`.
    pub fn close(gens: &[Derivation], cap: usize, exec: Exec) -> Result<LieAlgebra> {
        if gens.is_empty() {
            return Err(Error::InvalidInput("empty generator list".into()));
        }
        let mut span = DerivationSpan::new();
        for g in gens {
            span.try_push(g.clone());
            if span.dim() > cap {
                return Err(Error::DimensionCapExceeded { cap });
            }
        }
        if span.dim() == 0 {
            return Err(Error::InvalidInput("generators are all zero".into()));
        }
        let mut brackets: HashMap<(usize, usize), Derivation> = HashMap::new();
        let mut done = 0;
        while done < span.dim() {
            let n = span.dim();
            let pairs: Vec<(usize, usize)> = (done.max(1)..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            let elems = span.elems().to_vec();
            let results = exec.map(&pairs, |&(i, j)| elems[i].bracket(&elems[j]));
            done = n;
            for (p, b) in pairs.into_iter().zip(results) {
                if span.try_push(b.clone()) && span.dim() > cap {
                    return Err(Error::DimensionCapExceeded { cap });
                }
                brackets.insert(p, b);
            }
        }
        let basis = span.elems().to_vec();
        let n = basis.len();
        let mut sc = StructureConstants::zero(n);
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let coords = exec.map(&pairs, |p| span.coordinates(&brackets[p]).expect("closed under brackets"));
        for ((i, j), c) in pairs.into_iter().zip(coords) {
            sc.set_bracket(i, j, &c);
        }
        Ok(LieAlgebra { basis, sc, span: SpanHandle(span) })
    }

    /// Algebra spanned by an already closed independent basis.
    pub fn from_basis(basis: &[Derivation], exec: Exec) -> Result<LieAlgebra> {
        let alg = LieAlgebra::close(basis, basis.len(), exec).map_err(|e| match e {
            Error::DimensionCapExceeded { .. } => Error::InvalidInput("basis is not closed".into()),
            e => e,
        })?;
        if alg.dim() != basis.len() {
            return Err(Error::InvalidInput("basis is not independent".into()));
        }
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Derivation] {
        &self.basis
    }

    pub fn sc(&self) -> &StructureConstants {
        &self.sc
    }

    pub fn coordinates(&self, d: &Derivation) -> Result<Vec<Q>> {
        self.span.0.coordinates(d).ok_or(Error::NotInSpan)
    }

    pub fn element(&self, coords: &[Q]) -> Derivation {
        element(&self.basis, coords)
    }

    pub fn ad_matrix(&self, v: &[Q]) -> QMatrix {
        self.sc.ad(v)
    }

    pub fn series(&self, kind: SeriesKind) -> Vec<Subspace> {
        self.sc.series(kind)
    }

    pub fn predicates(&self) -> Predicates {
        self.sc.predicates()
    }

    pub fn killing_form(&self, exec: Exec) -> QMatrix {
        self.sc.killing_form(exec)
    }

    pub fn radical(&self, exec: Exec) -> Subspace {
        self.sc.radical(exec)
    }

    pub fn one_dim_ideals(&self) -> Result<IdealLines> {
        self.sc.one_dim_ideals()
    }

    /// All elements of the algebra that are function multiples of `d1`.
    pub fn r_multiple_ideal(&self, d1: &Derivation) -> Result<Subspace> {
        if d1.is_zero() || self.coordinates(d1).is_err() {
            return Err(Error::NotMember);
        }
        let crosses: Vec<_> = self.basis.iter().map(|b| b.cross(d1)).collect();
        let s = Subspace::new(&function_relations(&crosses), self.dim());
        debug_assert!(self.sc.is_ideal(&s));
        Ok(s)
    }

    pub fn export(&self) -> ScExport {
        ScExport {
            dim: self.dim(),
            basis: self.basis.iter().map(ToString::to_string).collect(),
            sc: self.sc.nonzero_strings(),
        }
    }
}
