use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::realize::realize;
use super::tables::abstract_table;
use super::types::TheoremType;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::polyrat::{fmt_q, Q};
use crate::structure::{LieAlgebra, StructureConstants};

/// One multiplicative constraint `prod d_v^e_v = ratio`.
#[derive(Debug, Clone)]
struct Constraint {
    exps: BTreeMap<usize, i32>,
    ratio: Q,
}

fn constraints(table: &StructureConstants, realized: &StructureConstants) -> Option<Vec<Constraint>> {
    let n = table.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let c = table.get(i, j, k);
                let r = realized.get(i, j, k);
                match (c.is_zero(), r.is_zero()) {
                    (true, true) => continue,
                    (false, false) => {}
                    _ => return None,
                }
                let mut exps = BTreeMap::new();
                *exps.entry(i).or_insert(0) += 1;
                *exps.entry(j).or_insert(0) += 1;
                *exps.entry(k).or_insert(0) -= 1;
                exps.retain(|_, e| *e != 0);
                out.push(Constraint { exps, ratio: c / r });
            }
        }
    }
    Some(out)
}

fn qpow(v: &Q, e: i32) -> Q {
    if e >= 0 {
        (0..e).fold(Q::one(), |acc, _| acc * v)
    } else {
        Q::one() / qpow(v, -e)
    }
}

fn propagate(cons: &[Constraint], d: &mut [Option<Q>]) -> bool {
    loop {
        let mut progress = false;
        for c in cons {
            let mut known = Q::one();
            let mut unknown = None;
            let mut count = 0;
            for (&v, &e) in &c.exps {
                match &d[v] {
                    Some(x) => known *= qpow(x, e),
                    None => {
                        count += 1;
                        unknown = Some((v, e));
                    }
                }
            }
            match (count, unknown) {
                (0, _) => {
                    if known != c.ratio {
                        return false;
                    }
                }
                (1, Some((v, e))) => {
                    // e is +1 or -1
                    let val = &c.ratio / &known;
                    d[v] = Some(if e == 1 { val } else { Q::one() / val });
                    progress = true;
                }
                _ => {}
            }
        }
        if !progress {
            return true;
        }
    }
}

fn solve_with_order(cons: &[Constraint], n: usize, order: &[usize]) -> Option<Vec<Q>> {
    let mut d: Vec<Option<Q>> = vec![None; n];
    if !propagate(cons, &mut d) {
        return None;
    }
    for &v in order {
        if d[v].is_none() {
            d[v] = Some(Q::one());
            if !propagate(cons, &mut d) {
                return None;
            }
        }
    }
    let d: Vec<Q> = d.into_iter().map(|x| x.unwrap_or_else(Q::one)).collect();
    let ok = cons.iter().all(|c| c.exps.iter().fold(Q::one(), |acc, (&v, &e)| acc * qpow(&d[v], e)) == c.ratio);
    ok.then_some(d)
}

/// Scalars `d` such that the rescaled basis `d_i r_i` of the realized algebra
/// has exactly the structure constants `table`.
pub fn diagonal_match(table: &StructureConstants, realized: &StructureConstants) -> Option<Vec<Q>> {
    let n = table.dim();
    if realized.dim() != n {
        return None;
    }
    let cons = constraints(table, realized)?;
    let forward: Vec<usize> = (0..n).collect();
    let mut orders = vec![forward.clone(), forward.iter().rev().copied().collect()];
    for first in 0..n {
        let mut o = vec![first];
        o.extend((0..n).filter(|&v| v != first));
        orders.push(o);
    }
    orders.into_iter().find_map(|o| solve_with_order(&cons, n, &o))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    #[serde(rename = "type")]
    pub ttype: String,
    pub params: serde_json::Value,
    pub matched: bool,
    pub basis: Vec<String>,
    pub realization: Vec<String>,
    /// Per-basis-vector factors `d_i`: the table basis is `d_i` times the
    /// realized field.
    pub adjustment: Vec<String>,
}

/// Checks that the realization of `t` spans an algebra whose structure
/// constants match the abstract table after a diagonal rescaling.
pub fn verify_realization(t: &TheoremType) -> Result<VerifyReport> {
    let table = abstract_table(t)?;
    let fields = realize(t)?;
    let alg = LieAlgebra::from_basis(&fields, Exec::Sequential)?;
    let d = diagonal_match(&table, alg.sc()).ok_or_else(|| {
        let show = |sc: &StructureConstants| {
            sc.nonzero_strings().iter().map(|(i, j, k, c)| format!("[{i},{j}]_{k}={c}")).collect::<Vec<_>>().join(" ")
        };
        Error::NoMatchWithinFamily(format!("table: {} | realized: {}", show(&table), show(alg.sc())))
    })?;
    Ok(VerifyReport {
        ttype: t.tag(),
        params: t.params_json(),
        matched: true,
        basis: t.basis_names(),
        realization: fields.iter().map(ToString::to_string).collect(),
        adjustment: d.iter().map(fmt_q).collect(),
    })
}
