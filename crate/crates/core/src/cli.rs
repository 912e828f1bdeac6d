//! Command-line front end. [`run_from`] parses arguments and returns the
//! exit code together with everything that should be printed.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::checks::{CheckKind, CheckOptions, CheckReport};
use crate::error::{Error, Result};
use crate::flag::Flag;
use crate::invariants::{
    dual_basis_invariant, dual_two_point, peterson_lift, three_point, two_point, ThreePointMethod,
};
use crate::qbg::{DegreeFilter, Qbg};
use crate::qls::{is_ls, kappa_zeta, qls_weight};
use crate::ring::{chevalley_nos, chevalley_parabolic, Basis, GroupAlgElem, QkClass};
use crate::rootsys::{CorootVec, ParabolicSubset};
use crate::weyl::ElemId;

#[derive(Parser, Debug)]
#[command(name = "qkflag", version, about = "Quantum K-theory of flag manifolds via quantum Bruhat graphs")]
struct Cli {
    /// Print the root system of --type as JSON instead of running the command.
    #[arg(long, global = true)]
    dump_rootsys: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dump the quantum Bruhat graph.
    Qbg {
        #[command(flatten)]
        target: Target,
        /// Keep only the edges of QBG_{a varpi_i}, with a = k/N.
        #[arg(long, value_name = "k/N")]
        a_lambda: Option<String>,
    },
    /// Enumerate the quantum LS paths of shape varpi_i.
    Qls {
        #[command(flatten)]
        target: Target,
        /// Keep only LS paths.
        #[arg(long)]
        ls_only: bool,
        /// Add wt, iota and, with -w, kappa and zeta for the start -w.
        #[arg(long)]
        stats: bool,
    },
    /// Expand O^{s_i} * O^w in QK_T(G/P).
    Chevalley {
        #[command(flatten)]
        target: Target,
        /// Sum over pairs (eta, v) instead of path tuples (K = I only).
        #[arg(long)]
        via_qls: bool,
    },
    /// K-theoretic Gromov-Witten invariants.
    Kgw {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value = "reduced")]
        method: String,
        /// Evaluate against the dual basis (O^x)^vee (K = I only).
        #[arg(long)]
        dual_basis: bool,
        /// Compute the 2-point invariant <O^w, O_x>_d.
        #[arg(long)]
        two_point: bool,
    },
    /// Run exhaustive checks.
    Check {
        /// Which check to run, or "all" for the acceptance suite.
        #[arg(default_value = "all")]
        name: String,
        #[arg(long, default_value_t = 2)]
        degree_cap: i64,
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Ignored by check; accepted so --dump-rootsys can name a type.
        #[arg(long = "type", value_name = "TYPE")]
        lie_type: Option<String>,
    },
    /// Peterson lift of a degree on G/P to G/B.
    Lift {
        #[command(flatten)]
        target: Target,
    },
}

#[derive(Args, Debug)]
struct Target {
    /// Cartan type such as G2 or A3.
    #[arg(long = "type", value_name = "TYPE")]
    lie_type: String,
    /// Nodes of K, comma separated and 1-based; default all.
    #[arg(long = "K", value_name = "NODES")]
    k: Option<String>,
    /// Node i, 1-based.
    #[arg(short = 'i')]
    i: Option<usize>,
    /// Element w as a word such as 2,1,2 or e.
    #[arg(short = 'w')]
    w: Option<String>,
    /// Element x as a word.
    #[arg(short = 'x')]
    x: Option<String>,
    /// Degree over the nodes of K, comma separated.
    #[arg(short = 'd', allow_hyphen_values = true)]
    d: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Set every e^mu to 1.
    #[arg(long)]
    nonequivariant: bool,
    /// Display exponents in fundamental-weight coordinates.
    #[arg(long)]
    weight_basis: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
    Dot,
}

struct Ctx {
    flag: Flag,
    k: ParabolicSubset,
    basis: Basis,
}

impl Target {
    fn context(&self) -> Result<Ctx> {
        let flag = Flag::parse(&self.lie_type)?;
        let k = match &self.k {
            Some(s) => ParabolicSubset::parse(s, flag.rank()).map_err(|e| flag_error("--K", e))?,
            None => ParabolicSubset::full(flag.rank()),
        };
        let basis = if self.weight_basis { Basis::Weight } else { Basis::Root };
        Ok(Ctx { flag, k, basis })
    }

    fn node(&self, flag: &Flag) -> Result<usize> {
        let i = self.i.ok_or_else(|| Error::Parse("-i is required".into()))?;
        if i == 0 || i > flag.rank() {
            return Err(Error::Parse(format!("-i {i} is out of range 1..={}", flag.rank())));
        }
        Ok(i - 1)
    }

    fn elem(&self, flag: &Flag, value: &Option<String>, name: &str) -> Result<ElemId> {
        let s = value.as_deref().ok_or_else(|| Error::Parse(format!("{name} is required")))?;
        flag.parse_elem(s).map_err(|e| flag_error(name, e))
    }

    fn degree(&self, ctx: &Ctx) -> Result<CorootVec> {
        CorootVec::parse_over(self.d.as_deref().unwrap_or(""), ctx.k).map_err(|e| flag_error("-d", e))
    }
}

fn flag_error(name: &str, e: Error) -> Error {
    Error::Parse(format!("{name}: {e}"))
}

/// Parses `args` (program name first) and runs the command.
pub fn run_from<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match run(cli) {
        Ok(out) => out,
        Err(e) => (2, format!("error: {e}\n")),
    }
}

fn run(cli: Cli) -> Result<(i32, String)> {
    if cli.dump_rootsys {
        let t = match &cli.command {
            Command::Qbg { target, .. }
            | Command::Qls { target, .. }
            | Command::Chevalley { target, .. }
            | Command::Kgw { target, .. }
            | Command::Lift { target } => Some(target.lie_type.clone()),
            Command::Check { lie_type, .. } => lie_type.clone(),
        };
        let t = t.ok_or_else(|| Error::Parse("--dump-rootsys needs --type".into()))?;
        let rs = crate::rootsys::RootSystem::parse(&t)?;
        return Ok((0, pretty(&serde_json::to_value(rs.dump()).expect("dump serializes"))));
    }
    match cli.command {
        Command::Qbg { target, a_lambda } => cmd_qbg(&target, a_lambda.as_deref()).map(ok),
        Command::Qls { target, ls_only, stats } => cmd_qls(&target, ls_only, stats).map(ok),
        Command::Chevalley { target, via_qls } => cmd_chevalley(&target, via_qls).map(ok),
        Command::Kgw { target, method, dual_basis, two_point } => {
            cmd_kgw(&target, &method, dual_basis, two_point).map(ok)
        }
        Command::Check { name, degree_cap, max_rank, format, .. } => {
            cmd_check(&name, CheckOptions { degree_cap, max_rank }, format)
        }
        Command::Lift { target } => cmd_lift(&target).map(ok),
    }
}

fn ok(s: String) -> (i32, String) {
    (0, s)
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn parse_fraction(s: &str) -> Result<(i64, i64)> {
    let bad = || Error::Parse(format!("--a-lambda: expected k/N, got {s:?}"));
    let (a, b) = s.split_once('/').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn cmd_qbg(t: &Target, a_lambda: Option<&str>) -> Result<String> {
    let ctx = t.context()?;
    let g = ctx.flag.group();
    let filter = match a_lambda {
        Some(s) => {
            let (num, den) = parse_fraction(s)?;
            Some(DegreeFilter::new(t.node(&ctx.flag)?, num, den).map_err(|e| flag_error("--a-lambda", e))?)
        }
        None => None,
    };
    let owned;
    let graph = if ctx.k.is_full() {
        ctx.flag.paths().graph()
    } else {
        owned = Qbg::build(g, ctx.k.complement())?;
        &owned
    };
    Ok(match t.format {
        Format::Dot => graph.to_dot(g, filter),
        Format::Json => pretty(&graph.to_json(g, filter)),
        Format::Tsv | Format::Text => graph.to_tsv(g, filter),
    })
}

fn cmd_qls(t: &Target, ls_only: bool, stats: bool) -> Result<String> {
    let ctx = t.context()?;
    let flag = &ctx.flag;
    let g = flag.group();
    let rs = flag.root_system();
    let i = t.node(flag)?;
    let shape = flag.shape(i)?;
    let v = match &t.w {
        Some(_) => Some(t.elem(flag, &t.w, "-w")?),
        None => None,
    };
    let mut rows = Vec::new();
    for eta in flag.qls(i)?.iter() {
        if ls_only && !is_ls(&shape, rs, eta)? {
            continue;
        }
        let mut row = serde_json::json!({ "path": eta.to_json(g) });
        if stats {
            row["wt"] = serde_json::to_value(qls_weight(&shape, eta)?).expect("weight serializes");
            row["iota"] = g.word_string(eta.initial()).into();
            if let Some(v) = v {
                let (kappa, zeta) = kappa_zeta(flag, &shape, eta, v)?;
                row["kappa"] = g.word_string(kappa).into();
                row["zeta"] = serde_json::to_value(zeta).expect("coroot serializes");
            }
        }
        rows.push((eta.describe(g), row));
    }
    Ok(match t.format {
        Format::Json => pretty(&serde_json::Value::Array(rows.into_iter().map(|(_, r)| r).collect())),
        _ => {
            let mut s = String::new();
            for (text, row) in rows {
                s.push_str(&text);
                if stats {
                    let _ = write!(s, "\twt={}\tiota={}", row["wt"], row["iota"].as_str().unwrap_or(""));
                    if row.get("kappa").is_some() {
                        let _ = write!(s, "\tkappa={}\tzeta={}", row["kappa"].as_str().unwrap_or(""), row["zeta"]);
                    }
                }
                s.push('\n');
            }
            s
        }
    })
}

fn render_class(class: &QkClass, ctx: &Ctx, format: Format) -> String {
    let g = ctx.flag.group();
    match format {
        Format::Json => pretty(&class.to_json(g)),
        Format::Tsv => class.to_tsv(g),
        _ => class.format(g, ctx.basis),
    }
}

fn cmd_chevalley(t: &Target, via_qls: bool) -> Result<String> {
    let ctx = t.context()?;
    let flag = &ctx.flag;
    let i = t.node(flag)?;
    let w = t.elem(flag, &t.w, "-w")?;
    let mut class = if via_qls {
        if !ctx.k.is_full() {
            return Err(Error::Parse("--via-qls needs K = I".into()));
        }
        chevalley_nos(flag, i, w)?
    } else {
        chevalley_parabolic(flag, i, w, ctx.k)?
    };
    if t.nonequivariant {
        class = class.specialize();
    }
    Ok(render_class(&class, &ctx, t.format))
}

fn render_value(v: &GroupAlgElem, ctx: &Ctx, t: &Target) -> String {
    let rs = ctx.flag.root_system();
    if t.nonequivariant {
        let n = v.specialize();
        return match t.format {
            Format::Json => pretty(&serde_json::json!({ "value": n })),
            _ => format!("{n}\n"),
        };
    }
    match t.format {
        Format::Json => pretty(&serde_json::json!({ "value": v.to_json(), "text": v.format(rs, ctx.basis) })),
        _ => format!("{}\n", v.format(rs, ctx.basis)),
    }
}

fn cmd_kgw(t: &Target, method: &str, dual: bool, two: bool) -> Result<String> {
    let ctx = t.context()?;
    let flag = &ctx.flag;
    let method: ThreePointMethod = method.parse().map_err(|e| flag_error("--method", e))?;
    let w = t.elem(flag, &t.w, "-w")?;
    let x = t.elem(flag, &t.x, "-x")?;
    let d = t.degree(&ctx)?;
    if dual && !ctx.k.is_full() {
        return Err(Error::Parse("--dual-basis needs K = I".into()));
    }
    let value = match (two, dual) {
        (true, true) => dual_two_point(flag, w, x, &d)?,
        (true, false) => two_point(flag, w, x, &d, ctx.k)?,
        (false, true) => dual_basis_invariant(flag, t.node(flag)?, w, x, &d, method)?,
        (false, false) => three_point(flag, t.node(flag)?, w, x, &d, ctx.k, method)?,
    };
    Ok(render_value(&value, &ctx, t))
}

fn cmd_lift(t: &Target) -> Result<String> {
    let ctx = t.context()?;
    let d = t.degree(&ctx)?;
    let lift = peterson_lift(&ctx.flag, &d, ctx.k)?;
    Ok(match t.format {
        Format::Json => pretty(&serde_json::to_value(&lift).expect("coroot serializes")),
        _ => format!("{lift}\n"),
    })
}

/// Runs the named checks; `"all"` means the acceptance suite.
pub fn run_checks(name: &str, opts: &CheckOptions) -> Result<Vec<(CheckKind, CheckReport)>> {
    let kinds: Vec<CheckKind> = if name == "all" { CheckKind::ACCEPTANCE.to_vec() } else { vec![name.parse()?] };
    Ok(kinds.into_iter().map(|k| (k, k.run(opts))).collect())
}

fn cmd_check(name: &str, opts: CheckOptions, format: Format) -> Result<(i32, String)> {
    let reports = run_checks(name, &opts)?;
    let code = if reports.iter().all(|(_, r)| r.passed()) { 0 } else { 1 };
    let out = match format {
        Format::Json => {
            let v: Vec<serde_json::Value> = reports.iter().map(|(_, r)| r.to_json()).collect();
            pretty(&serde_json::Value::Array(v))
        }
        _ => {
            let mut s = String::new();
            for (k, r) in &reports {
                let verdict = if r.passed() { "pass" } else { "FAIL" };
                let _ = writeln!(s, "{verdict} {k}: {} ({} instances)", r.claim, r.instances);
                for f in &r.failures {
                    let _ = writeln!(s, "    {f}");
                }
            }
            s
        }
    };
    Ok((code, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String) {
        run_from(std::iter::once("qkflag").chain(args.iter().copied()))
    }

    #[test]
    fn lift_example() {
        assert_eq!(run(&["lift", "--type", "A2", "--K", "1", "-d", "1"]), (0, "[1,0]\n".into()));
    }

    #[test]
    fn kgw_example() {
        let out = run(&["kgw", "--type", "G2", "-i", "2", "-w", "2,1,2,1,2", "-x", "e", "-d", "1,2", "--method", "reduced"]);
        assert_eq!(out, (0, "1 + e^[-3,-2]\n".into()));
    }

    #[test]
    fn errors_name_the_flag() {
        let (code, out) = run(&["kgw", "--type", "G2", "-i", "2", "-w", "3", "-x", "e"]);
        assert_eq!(code, 2);
        assert!(out.contains("-w"), "{out}");
        let (code, out) = run(&["lift", "--type", "A2", "--K", "1", "-d", "1,1"]);
        assert_eq!(code, 2);
        assert!(out.contains("-d"), "{out}");
    }
}
