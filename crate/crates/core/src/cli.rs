//! The `sct` command-line tool.
//!
//! Exit status is 0 on success, 1 when the input fails a mathematical
//! validation (a JSON report is printed on standard output) and 2 on usage
//! errors.

use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::CharacterTable;
use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupSpec, Subgroup, DEFAULT_MAX_ORDER};
use crate::lattice::{enumerate_sup, sct_meet};
use crate::products::{direct_product, star_product, wedge_product, DirectProduct, WedgeContext};
use crate::sct::{sct_join, theory_m, NormalContext, SupercharacterTheory, TheoryDescription};
use crate::superinduction::superinduce;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "sct", version, about = "Supercharacter theories of finite groups")]
pub struct Cli {
    /// Group: shorthand such as `symmetric:3xcyclic:2`, inline JSON, or a JSON file.
    #[arg(long, global = true)]
    group: Option<String>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    /// Worker threads for enumeration (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Character table.
    Table,
    /// Conjugacy classes.
    Classes,
    /// All supercharacter theories.
    Enumerate,
    /// Validate a theory given as JSON (`classes`, optionally `chars`).
    Verify {
        #[arg(long)]
        theory: String,
    },
    /// Join of two theories.
    Join {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Meet of two theories, via the enumerated lattice.
    Meet {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// `C * D` over the normal subgroup generated by `--n`.
    /// Defaults: `C = Conj_G(N)`, `D = m(G/N)`.
    Star {
        #[arg(long)]
        n: String,
        #[arg(long)]
        c: Option<String>,
        #[arg(long)]
        d: Option<String>,
    },
    /// Wedge product over `N ≤ M`; `C` is a theory of `M`, `D` of `G/N`.
    Wedge {
        #[arg(long)]
        n: String,
        #[arg(long)]
        m: String,
        #[arg(long)]
        c: String,
        #[arg(long)]
        d: String,
    },
    /// Direct product with a second group. Defaults to `m` on both factors.
    Direct {
        #[arg(long)]
        right: String,
        #[arg(long)]
        c: Option<String>,
        #[arg(long)]
        d: Option<String>,
    },
    /// `C_N` for the subgroup generated by `--n`. Defaults to `C = m(G)`.
    Restrict {
        #[arg(long)]
        n: String,
        #[arg(long)]
        theory: Option<String>,
    },
    /// `C^{G/N}` for the subgroup generated by `--n`. Defaults to `C = m(G)`.
    Deflate {
        #[arg(long)]
        n: String,
        #[arg(long)]
        theory: Option<String>,
    },
    /// Superinduce `--phi` (one value per element of `H`, in increasing
    /// element order) from the subgroup generated by `--h`.
    Superinduce {
        #[arg(long)]
        h: String,
        #[arg(long)]
        phi: String,
        #[arg(long)]
        theory: Option<String>,
    },
    /// Hasse diagram of the lattice.
    Hasse,
}

enum Failure {
    Usage(String),
    Validation(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(_)
            | Error::InvalidGroup(_)
            | Error::OrderOverflow { .. }
            | Error::ClassCapExceeded { .. } => Failure::Usage(e.to_string()),
            other => Failure::Validation(other),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn read_arg(arg: &str) -> CliResult<String> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    let path = arg.strip_prefix('@').unwrap_or(arg);
    if Path::new(path).is_file() {
        return std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")));
    }
    Ok(arg.to_string())
}

fn parse_group(arg: &str, max_order: usize) -> CliResult<FiniteGroup> {
    let text = read_arg(arg)?;
    let spec = if text.trim_start().starts_with('{') {
        serde_json::from_str::<GroupSpec>(&text).map_err(|e| Failure::Usage(format!("bad group JSON: {e}")))?
    } else {
        GroupSpec::parse_shorthand(text.trim())?
    };
    Ok(spec.build_with_max(max_order)?)
}

fn parse_gens(g: &FiniteGroup, arg: &str) -> CliResult<Subgroup> {
    let gens = arg
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .ok()
                .filter(|&x| x < g.order())
                .ok_or_else(|| Failure::Usage(format!("bad element index {s:?}")))
        })
        .collect::<CliResult<Vec<usize>>>()?;
    Ok(g.subgroup_closure(&gens))
}

fn parse_theory(table: &Arc<CharacterTable>, arg: &str) -> CliResult<SupercharacterTheory> {
    let text = read_arg(arg)?;
    let desc: TheoryDescription =
        serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("bad theory JSON: {e}")))?;
    desc.into_theory(table).map_err(|e| match e {
        Error::InvalidInput(msg) => Failure::Validation(Error::InvalidInput(msg)),
        other => Failure::from(other),
    })
}

fn parse_value(v: &Value) -> CliResult<Cyclotomic> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(Cyclotomic::from_int)
            .ok_or_else(|| Failure::Usage(format!("{n} is not an integer; use \"p/q\""))),
        Value::String(s) => s
            .parse::<Rational>()
            .map(Cyclotomic::from_rational)
            .map_err(|_| Failure::Usage(format!("bad rational {s:?}"))),
        Value::Object(_) => {
            serde_json::from_value(v.clone()).map_err(|e| Failure::Usage(format!("bad cyclotomic: {e}")))
        }
        _ => Err(Failure::Usage(
            "function values must be numbers, strings or cyclotomics".into(),
        )),
    }
}

fn theory_text(c: &SupercharacterTheory) -> String {
    format!("|C|={} K={} X={}", c.len(), c.classes(), c.chars())
}

struct Ctx {
    format: Format,
    max_order: usize,
    group: Option<String>,
}

impl Ctx {
    fn group(&self) -> CliResult<FiniteGroup> {
        let arg = self
            .group
            .as_deref()
            .ok_or_else(|| Failure::Usage("--group is required".into()))?;
        parse_group(arg, self.max_order)
    }

    fn table(&self) -> CliResult<Arc<CharacterTable>> {
        Ok(CharacterTable::shared(&self.group()?)?)
    }

    fn emit(&self, out: &mut dyn Write, value: &impl Serialize, text: impl FnOnce() -> String) -> CliResult<()> {
        let s = match self.format {
            Format::Json => serde_json::to_string_pretty(value).expect("serializable"),
            _ => text(),
        };
        writeln!(out, "{s}").map_err(|e| Failure::Usage(e.to_string()))
    }
}

fn run_command(cli: Cli, out: &mut dyn Write) -> CliResult<()> {
    let default_format = if matches!(cli.command, Command::Hasse) {
        Format::Dot
    } else {
        Format::Json
    };
    let ctx = Ctx {
        format: cli.format.unwrap_or(default_format),
        max_order: cli.max_order,
        group: cli.group,
    };
    match cli.command {
        Command::Table => {
            let t = ctx.table()?;
            ctx.emit(out, &*t, || {
                let mut s = format!("degrees {:?}\n", t.degrees());
                for row in t.rows() {
                    let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                    s.push_str(&cells.join("\t"));
                    s.push('\n');
                }
                s.trim_end().to_string()
            })
        }
        Command::Classes => {
            let g = ctx.group()?;
            let value = json!({
                "group": g.fingerprint(),
                "order": g.order(),
                "classes": g.classes().blocks(),
                "sizes": (0..g.num_classes()).map(|c| g.class_size(c)).collect::<Vec<_>>(),
            });
            ctx.emit(out, &value, || g.classes().to_string())
        }
        Command::Enumerate => {
            let t = ctx.table()?;
            let lattice = enumerate_sup(&t)?;
            let value = json!({
                "group": t.group().fingerprint(),
                "count": lattice.len(),
                "theories": lattice.theories(),
            });
            ctx.emit(out, &value, || {
                lattice
                    .theories()
                    .iter()
                    .map(theory_text)
                    .collect::<Vec<_>>()
                    .join("\n")
            })
        }
        Command::Verify { theory } => {
            let t = ctx.table()?;
            let c = parse_theory(&t, &theory)?;
            ctx.emit(out, &json!({ "valid": true, "theory": c }), || {
                format!("valid {}", theory_text(&c))
            })
        }
        Command::Join { a, b } => {
            let t = ctx.table()?;
            let j = sct_join(&parse_theory(&t, &a)?, &parse_theory(&t, &b)?)?;
            ctx.emit(out, &j, || theory_text(&j))
        }
        Command::Meet { a, b } => {
            let t = ctx.table()?;
            let (a, b) = (parse_theory(&t, &a)?, parse_theory(&t, &b)?);
            let lattice = enumerate_sup(&t)?;
            let m = sct_meet(&a, &b, &lattice)?;
            ctx.emit(out, &m, || theory_text(&m))
        }
        Command::Star { n, c, d } => {
            let t = ctx.table()?;
            let sub = parse_gens(t.group(), &n)?;
            let nc = NormalContext::new(&t, &sub)?;
            let c = match c {
                Some(s) => parse_theory(nc.normal_table(), &s)?,
                None => nc.conj_theory()?,
            };
            let d = match d {
                Some(s) => parse_theory(nc.quotient_table(), &s)?,
                None => theory_m(nc.quotient_table()),
            };
            let e = star_product(&c, &d, &nc)?;
            ctx.emit(out, &e, || theory_text(&e))
        }
        Command::Wedge { n, m, c, d } => {
            let t = ctx.table()?;
            let (ns, ms) = (parse_gens(t.group(), &n)?, parse_gens(t.group(), &m)?);
            let w = WedgeContext::new(&t, &ns, &ms)?;
            let c = parse_theory(w.upper().normal_table(), &c)?;
            let d = parse_theory(w.lower().quotient_table(), &d)?;
            let e = wedge_product(&c, &d, &w)?;
            ctx.emit(out, &e, || theory_text(&e))
        }
        Command::Direct { right, c, d } => {
            let left = ctx.table()?;
            let right = CharacterTable::shared(&parse_group(&right, ctx.max_order)?)?;
            let c = match c {
                Some(s) => parse_theory(&left, &s)?,
                None => theory_m(&left),
            };
            let d = match d {
                Some(s) => parse_theory(&right, &s)?,
                None => theory_m(&right),
            };
            let dp = DirectProduct::new(&left, &right)?;
            let e = direct_product(&c, &d, &dp)?;
            ctx.emit(out, &e, || theory_text(&e))
        }
        Command::Restrict { n, theory } => {
            let t = ctx.table()?;
            let nc = NormalContext::new(&t, &parse_gens(t.group(), &n)?)?;
            let c = theory.map_or_else(|| Ok(theory_m(&t)), |s| parse_theory(&t, &s))?;
            let r = nc.restrict(&c)?;
            let value = json!({ "subgroup": nc.normal().members(), "theory": r });
            ctx.emit(out, &value, || theory_text(&r))
        }
        Command::Deflate { n, theory } => {
            let t = ctx.table()?;
            let nc = NormalContext::new(&t, &parse_gens(t.group(), &n)?)?;
            let c = theory.map_or_else(|| Ok(theory_m(&t)), |s| parse_theory(&t, &s))?;
            let r = nc.deflate(&c)?;
            let value = json!({ "cosets": nc.quotient().cosets(), "theory": r });
            ctx.emit(out, &value, || theory_text(&r))
        }
        Command::Superinduce { h, phi, theory } => {
            let t = ctx.table()?;
            let sub = parse_gens(t.group(), &h)?;
            let c = theory.map_or_else(|| Ok(theory_m(&t)), |s| parse_theory(&t, &s))?;
            let raw: Value =
                serde_json::from_str(&read_arg(&phi)?).map_err(|e| Failure::Usage(format!("bad --phi JSON: {e}")))?;
            let values = raw
                .as_array()
                .ok_or_else(|| Failure::Usage("--phi must be a JSON array".into()))?
                .iter()
                .map(parse_value)
                .collect::<CliResult<Vec<_>>>()?;
            let f = superinduce(&c, &sub, &values)?;
            let value = json!({
                "subgroup": sub.members(),
                "superclasses": c.classes().blocks(),
                "values": f.values(),
            });
            ctx.emit(out, &value, || {
                f.values().iter().map(|v| v.to_string()).collect::<Vec<_>>().join("\t")
            })
        }
        Command::Hasse => {
            let t = ctx.table()?;
            let lattice = enumerate_sup(&t)?;
            match ctx.format {
                Format::Dot => write!(out, "{}", lattice.to_dot()).map_err(|e| Failure::Usage(e.to_string())),
                _ => ctx.emit(out, &lattice, || {
                    lattice
                        .hasse()
                        .iter()
                        .map(|(a, b)| format!("{a} -> {b}"))
                        .collect::<Vec<_>>()
                        .join("\n")
                }),
            }
        }
    }
}

fn report(e: &Error) -> Value {
    match e {
        Error::Theory(v) => json!({ "valid": false, "kind": "theory", "violation": v, "message": e.to_string() }),
        Error::Schur(v) => json!({ "valid": false, "kind": "schur", "violation": v, "message": e.to_string() }),
        Error::Precondition(_) => json!({ "valid": false, "kind": "precondition", "message": e.to_string() }),
        Error::NotNormal | Error::NotSuperNormal => {
            json!({ "valid": false, "kind": "normality", "message": e.to_string() })
        }
        _ => json!({ "valid": false, "kind": "error", "message": e.to_string() }),
    }
}

/// Runs the tool on `args` (including the program name), writing results to `out`
/// and diagnostics to standard error. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                eprint!("{e}");
            }
            return code;
        }
    };
    if cli.threads > 0 {
        // a global pool can only be installed once per process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global();
    }
    match run_command(cli, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Validation(e)) => {
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&report(&e)).expect("serializable")
            );
            1
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    run(std::env::args_os(), &mut lock)
}

/// Convenience for callers that want the result instead of an exit code.
pub fn run_to_string(args: &[&str]) -> Result<(i32, String)> {
    let mut buf = Vec::new();
    let code = run(args.iter().copied(), &mut buf);
    String::from_utf8(buf)
        .map(|s| (code, s))
        .map_err(|e| Error::Internal(e.to_string()))
}
