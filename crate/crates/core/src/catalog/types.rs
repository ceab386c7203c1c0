use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polyrat::{fmt_q, q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sl2Variant {
    Sl2,
    Sl2Sl2,
}

/// The twelve catalog types with their parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TheoremType {
    T1 { n: usize },
    T2 { n: usize },
    T3 { n: usize, lambda: u8 },
    T4 { n: usize, beta: Q, m: Vec<i64> },
    T5 { n: usize, beta: Q, gamma: Q },
    T6 { n: usize },
    T7 { n: usize, beta: Q, m: Vec<i64> },
    T8 { n: usize, alpha: Q, beta: Q },
    T9 { variant: Sl2Variant },
    T10,
    T11 { m: usize },
    T12 { m: usize },
}

impl TheoremType {
    pub fn index(&self) -> u8 {
        match self {
            TheoremType::T1 { .. } => 1,
            TheoremType::T2 { .. } => 2,
            TheoremType::T3 { .. } => 3,
            TheoremType::T4 { .. } => 4,
            TheoremType::T5 { .. } => 5,
            TheoremType::T6 { .. } => 6,
            TheoremType::T7 { .. } => 7,
            TheoremType::T8 { .. } => 8,
            TheoremType::T9 { .. } => 9,
            TheoremType::T10 => 10,
            TheoremType::T11 { .. } => 11,
            TheoremType::T12 { .. } => 12,
        }
    }

    pub fn tag(&self) -> String {
        format!("T{}", self.index())
    }

    /// The derived constant `gamma = alpha * (beta + n + 1)` of type 8.
    pub fn t8_gamma(n: usize, alpha: &Q, beta: &Q) -> Q {
        alpha * (beta + q(n as i64 + 1))
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |s: &str| Err(Error::BadParameters(s.to_string()));
        match self {
            TheoremType::T1 { n } | TheoremType::T2 { n } if *n == 0 => bad("n must be at least 1"),
            TheoremType::T3 { lambda, .. } if *lambda > 1 => bad("lambda must be 0 or 1"),
            TheoremType::T4 { n, beta, m } | TheoremType::T7 { n, beta, m } => {
                if *n == 0 {
                    return bad("n must be at least 1");
                }
                if beta.is_zero() {
                    return bad("beta must be nonzero");
                }
                if m.len() != n + 1 {
                    return bad("m must have n+1 entries");
                }
                let mut s = m.clone();
                s.sort();
                s.dedup();
                if s.len() != m.len() {
                    return bad("m entries must be distinct");
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Dimension of the algebra.
    pub fn dim(&self) -> usize {
        match self {
            TheoremType::T1 { n } => *n,
            TheoremType::T2 { n } => n + 1,
            TheoremType::T3 { n, .. } | TheoremType::T4 { n, .. } => n + 2,
            TheoremType::T5 { n, .. } | TheoremType::T6 { n } | TheoremType::T7 { n, .. } => n + 3,
            TheoremType::T8 { n, .. } => n + 4,
            TheoremType::T9 { variant: Sl2Variant::Sl2 } => 3,
            TheoremType::T9 { variant: Sl2Variant::Sl2Sl2 } => 6,
            TheoremType::T10 => 8,
            TheoremType::T11 { m } => m + 4,
            TheoremType::T12 { m } => m + 5,
        }
    }

    /// Basis names in table order.
    pub fn basis_names(&self) -> Vec<String> {
        let es = |lo: usize, hi: usize| (lo..=hi).map(|i| format!("e{i}")).collect::<Vec<_>>();
        let with = |mut v: Vec<String>, extra: &[&str]| {
            v.extend(extra.iter().map(|s| s.to_string()));
            v
        };
        let vs = |m: usize| (0..=m).map(|k| format!("v{k}")).collect::<Vec<_>>();
        match self {
            TheoremType::T1 { n } => es(1, *n),
            TheoremType::T2 { n } => with(es(1, *n), &["f"]),
            TheoremType::T3 { n, .. } | TheoremType::T4 { n, .. } => with(es(0, *n), &["f"]),
            TheoremType::T5 { n, .. } | TheoremType::T6 { n } | TheoremType::T7 { n, .. } => {
                with(es(0, *n), &["f", "g"])
            }
            TheoremType::T8 { n, .. } => with(es(0, *n), &["f", "g", "h"]),
            TheoremType::T9 { variant: Sl2Variant::Sl2 } => with(vec![], &["e", "f", "h"]),
            TheoremType::T9 { variant: Sl2Variant::Sl2Sl2 } => with(vec![], &["e1", "f1", "h1", "e2", "f2", "h2"]),
            TheoremType::T10 => with(vec![], &["E12", "E13", "E23", "E21", "E31", "E32", "H1", "H2"]),
            TheoremType::T11 { m } => {
                with(vec!["e".into(), "f".into(), "h".into()], &[]).into_iter().chain(vs(*m)).collect()
            }
            TheoremType::T12 { m } => vec!["e", "f", "h", "z"].into_iter().map(String::from).chain(vs(*m)).collect(),
        }
    }

    /// Parameters as a JSON object with a fixed key order.
    pub fn params_json(&self) -> Value {
        let mut map = serde_json::Map::new();
        let mut put = |k: &str, v: Value| {
            map.insert(k.to_string(), v);
        };
        match self {
            TheoremType::T1 { n } | TheoremType::T2 { n } | TheoremType::T6 { n } => put("n", json!(n)),
            TheoremType::T3 { n, lambda } => {
                put("n", json!(n));
                put("lambda", json!(lambda));
            }
            TheoremType::T4 { n, beta, m } | TheoremType::T7 { n, beta, m } => {
                put("n", json!(n));
                put("beta", json!(fmt_q(beta)));
                put("m", json!(m));
            }
            TheoremType::T5 { n, beta, gamma } => {
                put("n", json!(n));
                put("beta", json!(fmt_q(beta)));
                put("gamma", json!(fmt_q(gamma)));
            }
            TheoremType::T8 { n, alpha, beta } => {
                put("n", json!(n));
                put("alpha", json!(fmt_q(alpha)));
                put("beta", json!(fmt_q(beta)));
                put("gamma", json!(fmt_q(&TheoremType::t8_gamma(*n, alpha, beta))));
            }
            TheoremType::T9 { variant } => put(
                "variant",
                json!(match variant {
                    Sl2Variant::Sl2 => "sl2",
                    Sl2Variant::Sl2Sl2 => "sl2+sl2",
                }),
            ),
            TheoremType::T10 => {}
            TheoremType::T11 { m } | TheoremType::T12 { m } => put("m", json!(m)),
        }
        Value::Object(map)
    }

    /// Builds a type from its tag and `key=value` parameters.
    pub fn from_params(tag: &str, params: &BTreeMap<String, String>) -> Result<TheoremType> {
        let get = |k: &str| params.get(k).map(String::as_str);
        let need = |k: &str| get(k).ok_or_else(|| Error::BadParameters(format!("missing parameter {k}")));
        let usize_of = |k: &str| -> Result<usize> {
            need(k)?.parse().map_err(|_| Error::BadParameters(format!("{k} must be a nonnegative integer")))
        };
        let q_of = |k: &str| -> Result<Q> {
            parse_q(need(k)?).ok_or_else(|| Error::BadParameters(format!("{k} must be rational")))
        };
        let q_or_zero = |k: &str| -> Result<Q> {
            if get(k).is_some() {
                q_of(k)
            } else {
                Ok(Q::zero())
            }
        };
        let m_of = || -> Result<Vec<i64>> {
            need("m")?
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::BadParameters("m must be a comma-separated integer list".into()))
                })
                .collect()
        };
        let t = match tag.to_ascii_uppercase().as_str() {
            "T1" => TheoremType::T1 { n: usize_of("n")? },
            "T2" => TheoremType::T2 { n: usize_of("n")? },
            "T3" => TheoremType::T3 {
                n: usize_of("n")?,
                lambda: usize_of("lambda")?
                    .try_into()
                    .map_err(|_| Error::BadParameters("lambda must be 0 or 1".into()))?,
            },
            "T4" => TheoremType::T4 { n: usize_of("n")?, beta: q_of("beta")?, m: m_of()? },
            "T5" => TheoremType::T5 { n: usize_of("n")?, beta: q_or_zero("beta")?, gamma: q_or_zero("gamma")? },
            "T6" => TheoremType::T6 { n: usize_of("n")? },
            "T7" => TheoremType::T7 { n: usize_of("n")?, beta: q_of("beta")?, m: m_of()? },
            "T8" => TheoremType::T8 { n: usize_of("n")?, alpha: q_or_zero("alpha")?, beta: q_or_zero("beta")? },
            "T9" => TheoremType::T9 {
                variant: match get("variant").unwrap_or("sl2") {
                    "sl2" => Sl2Variant::Sl2,
                    "sl2+sl2" | "sl2xsl2" => Sl2Variant::Sl2Sl2,
                    other => return Err(Error::BadParameters(format!("unknown variant {other}"))),
                },
            },
            "T10" => TheoremType::T10,
            "T11" => TheoremType::T11 { m: usize_of("m")? },
            "T12" => TheoremType::T12 { m: usize_of("m")? },
            other => return Err(Error::BadParameters(format!("unknown type {other}"))),
        };
        t.validate()?;
        Ok(t)
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a: num_bigint::BigInt = a.trim().parse().ok()?;
            let b: num_bigint::BigInt = b.trim().parse().ok()?;
            (!b.is_zero()).then(|| Q::new(a, b))
        }
        None => s.parse::<num_bigint::BigInt>().ok().map(Q::from_integer),
    }
}

impl fmt::Display for TheoremType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self.params_json();
        let obj = params.as_object().expect("object");
        let body: Vec<String> = obj
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                Value::Array(a) => format!("{k}=({})", a.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")),
                other => format!("{k}={other}"),
            })
            .collect();
        if body.is_empty() {
            write!(f, "{}", self.tag())
        } else {
            write!(f, "{}{{{}}}", self.tag(), body.join(", "))
        }
    }
}
