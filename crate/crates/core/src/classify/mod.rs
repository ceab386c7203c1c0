//! Decides which of the twelve families a closed algebra belongs to, and
//! exhibits a basis in which its structure constants are those of the family.

mod semisimple;
mod solvable;
mod util;

use serde::Serialize;

use crate::catalog::{abstract_table, canonical_form, diagonal_match, realize, TheoremType};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::polyrat::{fmt_q, Q};
use crate::structure::{LieAlgebra, StructureConstants, Subspace, DEFAULT_DIM_CAP};
use crate::vectorfield::rank_over_r;
use solvable::Built;
use util::{not_in_catalog, rebase, scaled, units};

/// Distinguished elements found along the way. `basis` lists coordinate
/// vectors, in the order of the abstract table of the recovered form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witnesses {
    pub d1: Option<Vec<Q>>,
    pub ideal: Option<Subspace>,
    pub basis: Vec<Vec<Q>>,
    pub names: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// Canonical representative of the isomorphism class.
    pub ttype: TheoremType,
    /// The form the witness basis realizes exactly.
    pub form: TheoremType,
    pub witnesses: Witnesses,
    /// Factors applied to the constructed basis so that it reproduces the
    /// abstract table of `form`.
    pub adjustment: Vec<Q>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedElement {
    pub name: String,
    pub element: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub d1: Option<String>,
    pub ideal: Option<Vec<String>>,
    pub basis: Vec<NamedElement>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    #[serde(rename = "type")]
    pub ttype: String,
    pub params: serde_json::Value,
    pub form: String,
    pub witnesses: WitnessReport,
    pub adjustment: Vec<String>,
}

impl Classification {
    pub fn report(&self, alg: &LieAlgebra) -> ClassifyReport {
        let show = |v: &Vec<Q>| alg.element(v).to_string();
        ClassifyReport {
            ttype: self.ttype.tag(),
            params: self.ttype.params_json(),
            form: self.form.to_string(),
            witnesses: WitnessReport {
                d1: self.witnesses.d1.as_ref().map(show),
                ideal: self.witnesses.ideal.as_ref().map(|s| s.basis.iter().map(show).collect()),
                basis: self
                    .witnesses
                    .names
                    .iter()
                    .zip(&self.witnesses.basis)
                    .map(|(n, v)| NamedElement { name: n.clone(), element: show(v) })
                    .collect(),
            },
            adjustment: self.adjustment.iter().map(fmt_q).collect(),
        }
    }
}

/// Rescaling factors making `basis` reproduce the table of `form` exactly.
fn confirm(sc: &StructureConstants, form: &TheoremType, basis: &[Vec<Q>]) -> Result<Vec<Q>> {
    let table = abstract_table(form)?;
    let got = rebase(sc, basis)?;
    diagonal_match(&table, &got)
        .ok_or_else(|| not_in_catalog(format!("witness basis does not reproduce the table of {form}")))
}

fn finish(
    sc: &StructureConstants,
    built: Built,
    d1: Option<Vec<Q>>,
    ideal: Option<Subspace>,
) -> Result<Classification> {
    let (form, basis) = built;
    let adjustment = confirm(sc, &form, &basis)?;
    let basis = basis.iter().zip(&adjustment).map(|(v, d)| scaled(v, d)).collect();
    Ok(Classification {
        ttype: canonical_form(&form),
        witnesses: Witnesses { d1, ideal, basis, names: form.basis_names() },
        form,
        adjustment,
    })
}

pub fn classify(alg: &LieAlgebra) -> Result<Classification> {
    classify_with(alg, Exec::default())
}

pub fn classify_with(alg: &LieAlgebra, exec: Exec) -> Result<Classification> {
    let sc = alg.sc();
    let dim = sc.dim();
    if dim == 0 {
        return Err(Error::InvalidInput("empty algebra".into()));
    }
    if sc.is_abelian() {
        return finish(sc, (TheoremType::T1 { n: dim }, units(dim)), None, None);
    }
    if !sc.predicates().solvable {
        let r = alg.radical(exec);
        let built = if r.dim() == 0 {
            semisimple::semisimple(sc)?
        } else {
            if dim - r.dim() != 3 {
                return Err(not_in_catalog(format!("Levi factor of dimension {}", dim - r.dim())));
            }
            semisimple::with_radical(sc, &r)?
        };
        return finish(sc, built, None, (r.dim() > 0).then_some(r));
    }
    if rank_over_r(alg.basis()) == 1 {
        let a = sc.derived();
        if !sc.is_abelian_space(&a) {
            return Err(not_in_catalog("rank one with a nonabelian derived algebra"));
        }
        let built = solvable::abelian_codim_one(sc, &a)?;
        return finish(sc, built, None, Some(a));
    }
    let lines = sc.one_dim_ideals()?;
    let mut reasons = Vec::new();
    for space in &lines.eigenspaces {
        for v in &space.basis {
            let i = alg.r_multiple_ideal(&alg.element(v))?;
            let abelian = sc.is_abelian_space(&i);
            let built = match (abelian, dim - i.dim()) {
                (true, 1) => solvable::abelian_codim_one(sc, &i),
                (true, 2) => solvable::abelian_codim_two(sc, &i),
                (false, 1) => solvable::nonabelian_codim_one(sc, &i),
                (false, 2) => solvable::nonabelian_codim_two(sc, &i),
                (_, c) => Err(not_in_catalog(format!("ideal RD1 of codimension {c}"))),
            };
            match built.and_then(|b| finish(sc, b, Some(v.clone()), Some(i))) {
                Ok(c) => return Ok(c),
                Err(Error::NotInCatalog(why)) => reasons.push(why),
                Err(e) => return Err(e),
            }
        }
    }
    if reasons.is_empty() {
        reasons.push("no one-dimensional ideal".into());
    }
    reasons.dedup();
    Err(Error::NotInCatalog(reasons.join("; ")))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundTrip {
    pub input: TheoremType,
    pub canonical: TheoremType,
    pub found: TheoremType,
    /// The classified type equals the canonical form of the input.
    pub matched: bool,
    /// The input is not its own canonical form.
    pub equivalent: bool,
}

/// Classifies the closure of the realization of `t`.
pub fn round_trip(t: &TheoremType) -> Result<RoundTrip> {
    round_trip_with(t, Exec::default())
}

pub fn round_trip_with(t: &TheoremType, exec: Exec) -> Result<RoundTrip> {
    let alg = LieAlgebra::close(&realize(t)?, DEFAULT_DIM_CAP, exec)?;
    let found = classify_with(&alg, exec)?.ttype;
    let canonical = canonical_form(t);
    Ok(RoundTrip { input: t.clone(), matched: found == canonical, equivalent: canonical != *t, canonical, found })
}
