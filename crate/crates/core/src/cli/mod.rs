//! Command-line front end. Exit codes: 0 on success, 1 for usage and syntax
//! errors, 2 for domain errors (the error name goes to the diagnostic stream).

mod parse;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::json;

use crate::catalog::{abstract_table, realize, verify_realization, TheoremType};
use crate::classify::classify_with;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::polyrat::{fmt_q, Q};
use crate::ratlemma::{log_derivative_obstruction, power_decompose};
use crate::structure::{LieAlgebra, SeriesKind, StructureConstants, Subspace, DEFAULT_DIM_CAP};
use crate::vectorfield::Derivation;

pub use parse::{parse_derivation, parse_generators, parse_ratfunc};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Derived,
    Lower,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Lie bracket of two derivations.
    Bracket {
        #[arg(allow_hyphen_values = true)]
        d: String,
        #[arg(allow_hyphen_values = true)]
        e: String,
    },
    /// A derivation applied to a rational function.
    Apply {
        #[arg(allow_hyphen_values = true)]
        d: String,
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Closure of a semicolon-separated generator list.
    Closure {
        #[arg(allow_hyphen_values = true)]
        gens: String,
    },
    /// Type of the closure of the generators.
    Classify {
        #[arg(allow_hyphen_values = true)]
        gens: String,
    },
    /// Derived or lower central series of the closure.
    Series {
        #[arg(allow_hyphen_values = true)]
        gens: String,
        #[arg(long, value_enum, default_value = "derived")]
        kind: Kind,
    },
    /// Killing form of the closure.
    Killing {
        #[arg(allow_hyphen_values = true)]
        gens: String,
    },
    /// Solvable radical of the closure.
    Radical {
        #[arg(allow_hyphen_values = true)]
        gens: String,
    },
    /// Eigenspaces whose lines are one-dimensional ideals.
    Ideals {
        #[arg(allow_hyphen_values = true)]
        gens: String,
    },
    /// The ideal of elements that are function multiples of D1.
    Rmul {
        #[arg(allow_hyphen_values = true)]
        gens: String,
        #[arg(allow_hyphen_values = true)]
        d1: String,
    },
    /// Realization or abstract table of a catalog type, e.g. `T4 n=1 beta=1 m=0,2`.
    Catalog { ttype: String, params: Vec<String> },
    /// phi = c1 theta^s, psi = c2 theta^t for a proportional pair.
    #[command(name = "ratlemma-decompose")]
    RatlemmaDecompose {
        #[arg(allow_hyphen_values = true)]
        phi: String,
        #[arg(allow_hyphen_values = true)]
        psi: String,
    },
    /// An irreducible p with ord_p(phi'/phi) = -1.
    #[command(name = "ratlemma-obstruct")]
    RatlemmaObstruct {
        #[arg(allow_hyphen_values = true)]
        phi: String,
    },
}

#[derive(Debug, Parser)]
#[command(name = "planar-lie", version, about = "Lie algebras of planar rational vector fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Dimension cap for closures.
    #[arg(long, global = true, default_value_t = DEFAULT_DIM_CAP)]
    cap: usize,
    #[arg(long, global = true)]
    json: bool,
    /// Check the realization against the abstract table (catalog only).
    #[arg(long, global = true)]
    verify: bool,
}

/// Options shared by every command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub cap: usize,
    pub format: Format,
    pub verify: bool,
    pub exec: Exec,
}

impl Default for Options {
    fn default() -> Self {
        Options { cap: DEFAULT_DIM_CAP, format: Format::Text, verify: false, exec: Exec::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 1, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let opts = Options {
        cap: cli.cap,
        format: if cli.json { Format::Json } else { Format::Text },
        verify: cli.verify,
        exec: Exec::default(),
    };
    match run(&cli.command, &opts) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(e) => Outcome {
            code: if e.is_usage() { 1 } else { 2 },
            stdout: String::new(),
            stderr: format!("{}: {e}\n", e.name()),
        },
    }
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn close(gens: &str, opts: &Options) -> Result<LieAlgebra> {
    LieAlgebra::close(&parse_generators(gens)?, opts.cap, opts.exec)
}

fn show_space(alg: &LieAlgebra, s: &Subspace) -> Vec<String> {
    s.basis.iter().map(|v| alg.element(v).to_string()).collect()
}

/// `sum c_k b_k` with basis names `b_k`.
fn show_combination(v: &[Q], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in v.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            let _ = write!(out, "{}*", fmt_q(&abs));
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn table_text(sc: &StructureConstants, names: &[String]) -> String {
    let mut out = String::new();
    let n = sc.dim();
    for i in 0..n {
        for j in i + 1..n {
            let v = sc.basis_bracket(i, j);
            if v.iter().any(|c| !c.is_zero()) {
                let _ = writeln!(out, "[{}, {}] = {}", names[i], names[j], show_combination(&v, names));
            }
        }
    }
    out
}

#[derive(Serialize)]
struct TableJson {
    dim: usize,
    basis: Vec<String>,
    sc: Vec<(usize, usize, usize, String)>,
}

fn parse_params(params: &[String]) -> Result<BTreeMap<String, String>> {
    params
        .iter()
        .map(|p| {
            p.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| Error::InvalidInput(format!("parameter {p} is not of the form key=value")))
        })
        .collect()
}

/// Executes one command and renders its result.
pub fn run(cmd: &Command, opts: &Options) -> Result<String> {
    let json = opts.format == Format::Json;
    match cmd {
        Command::Bracket { d, e } => {
            let b = parse_derivation(d)?.bracket(&parse_derivation(e)?);
            Ok(if json { pretty(&json!({ "bracket": b.to_string() })) } else { format!("{b}\n") })
        }
        Command::Apply { d, f } => {
            let v = parse_derivation(d)?.apply(&parse_ratfunc(f)?);
            Ok(if json { pretty(&json!({ "value": v.to_string() })) } else { format!("{v}\n") })
        }
        Command::Closure { gens } => {
            let alg = close(gens, opts)?;
            if json {
                return Ok(pretty(&alg.export()));
            }
            let names: Vec<String> = (0..alg.dim()).map(|i| format!("b{i}")).collect();
            let mut out = format!("dim {}\n", alg.dim());
            for (n, b) in names.iter().zip(alg.basis()) {
                let _ = writeln!(out, "{n} = {b}");
            }
            out.push_str(&table_text(alg.sc(), &names));
            Ok(out)
        }
        Command::Classify { gens } => {
            let alg = close(gens, opts)?;
            let c = classify_with(&alg, opts.exec)?;
            let rep = c.report(&alg);
            if json {
                return Ok(pretty(&rep));
            }
            let mut out = format!("{}\nform {}\n", c.ttype, c.form);
            if let Some(d1) = &rep.witnesses.d1 {
                let _ = writeln!(out, "D1 = {d1}");
            }
            if let Some(i) = &rep.witnesses.ideal {
                let _ = writeln!(out, "ideal = <{}>", i.join("; "));
            }
            for e in &rep.witnesses.basis {
                let _ = writeln!(out, "{} = {}", e.name, e.element);
            }
            Ok(out)
        }
        Command::Series { gens, kind } => {
            let alg = close(gens, opts)?;
            let (k, label) = match kind {
                Kind::Derived => (SeriesKind::Derived, "derived"),
                Kind::Lower => (SeriesKind::LowerCentral, "lower"),
            };
            let terms = alg.series(k);
            if json {
                let t: Vec<_> = terms.iter().map(|s| json!({ "dim": s.dim(), "basis": show_space(&alg, s) })).collect();
                return Ok(pretty(&json!({ "kind": label, "terms": t })));
            }
            let mut out = String::new();
            for (i, s) in terms.iter().enumerate() {
                let _ = writeln!(out, "{i}: dim {} <{}>", s.dim(), show_space(&alg, s).join("; "));
            }
            Ok(out)
        }
        Command::Killing { gens } => {
            let alg = close(gens, opts)?;
            let k = alg.killing_form(opts.exec);
            let rank = k.rank();
            let nondeg = rank == alg.dim();
            if json {
                let m: Vec<Vec<String>> = k.row_vecs().iter().map(|r| r.iter().map(fmt_q).collect()).collect();
                return Ok(pretty(&json!({ "dim": alg.dim(), "matrix": m, "rank": rank, "nondegenerate": nondeg })));
            }
            Ok(format!("{k}rank {rank}\nnondegenerate {nondeg}\n"))
        }
        Command::Radical { gens } => {
            let alg = close(gens, opts)?;
            let r = alg.radical(opts.exec);
            let abelian = alg.sc().is_abelian_space(&r);
            if json {
                return Ok(pretty(&json!({ "dim": r.dim(), "basis": show_space(&alg, &r), "abelian": abelian })));
            }
            Ok(format!("dim {}\nabelian {abelian}\n<{}>\n", r.dim(), show_space(&alg, &r).join("; ")))
        }
        Command::Ideals { gens } => {
            let alg = close(gens, opts)?;
            let lines = alg.one_dim_ideals()?;
            let spaces: Vec<Vec<String>> = lines.eigenspaces.iter().map(|s| show_space(&alg, s)).collect();
            if json {
                return Ok(pretty(&json!({ "all_lines": lines.all_lines, "eigenspaces": spaces })));
            }
            let mut out = format!("all lines {}\n", lines.all_lines);
            for s in &spaces {
                let _ = writeln!(out, "<{}>", s.join("; "));
            }
            Ok(out)
        }
        Command::Rmul { gens, d1 } => {
            let alg = close(gens, opts)?;
            let d: Derivation = parse_derivation(d1)?;
            let i = alg.r_multiple_ideal(&d)?;
            let abelian = alg.sc().is_abelian_space(&i);
            let codim = alg.dim() - i.dim();
            if json {
                return Ok(pretty(&json!({
                    "d1": d.to_string(),
                    "dim": i.dim(),
                    "codim": codim,
                    "abelian": abelian,
                    "basis": show_space(&alg, &i),
                })));
            }
            Ok(format!("dim {} codim {codim}\nabelian {abelian}\n<{}>\n", i.dim(), show_space(&alg, &i).join("; ")))
        }
        Command::Catalog { ttype, params } => {
            let t = TheoremType::from_params(ttype, &parse_params(params)?)?;
            if opts.verify {
                let rep = verify_realization(&t)?;
                if json {
                    return Ok(pretty(&rep));
                }
                return Ok(format!("{t}\nmatched {}\nadjustment ({})\n", rep.matched, rep.adjustment.join(", ")));
            }
            let names = t.basis_names();
            if json {
                let sc = abstract_table(&t)?;
                return Ok(pretty(&TableJson { dim: sc.dim(), basis: names, sc: sc.nonzero_strings() }));
            }
            let mut out = String::new();
            for (n, d) in names.iter().zip(realize(&t)?) {
                let _ = writeln!(out, "{n} = {d}");
            }
            Ok(out)
        }
        Command::RatlemmaDecompose { phi, psi } => {
            let r = power_decompose(&parse_ratfunc(phi)?, &parse_ratfunc(psi)?)?.report();
            if json {
                return Ok(pretty(&r));
            }
            Ok(format!("theta = {}\ns = {}\nt = {}\nc1 = {}\nc2 = {}\nmu = {}\n", r.theta, r.s, r.t, r.c1, r.c2, r.mu))
        }
        Command::RatlemmaObstruct { phi } => {
            let (p, ord) = log_derivative_obstruction(&parse_ratfunc(phi)?)?;
            let p = p.render_with(["t", "t"]);
            if json {
                return Ok(pretty(&json!({ "p": p, "ord": ord })));
            }
            Ok(format!("p = {p}\nord {ord}\n"))
        }
    }
}
