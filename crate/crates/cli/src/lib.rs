//! Command-line front end: expression parsing, maps and brackets, membership
//! checks, bases and dimension tables.

pub mod parse;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lq_core::bimould::{ari, beta};
use lq_core::brackets::{bracket_a, delta, ihara_bracket};
use lq_core::embedding::{pi_y, theta, theta_x, theta_y};
use lq_core::hopfmaps::{from_dbi, pi0, rho, s0, sec, tau, tau_dbi, to_dbi};
use lq_core::ncpoly::{balanced_quasi_shuffle, gr_d, shuffle};
use lq_core::spaces::{self, dim_table_with, is_in_lq, is_in_ls, DimEntry, Limits, Space};
use lq_core::{Alphabet, NcPoly};

pub use parse::{parse_expr, parse_poly, Expr, ParseError};

#[derive(Debug, Parser)]
#[command(name = "lq", version, about = "Exact computations in the Lie algebras lq and ls")]
struct Cli {
    /// Presentation of results that lie in the D alphabet.
    #[arg(long = "as", value_enum, global = true, default_value = "b")]
    present: Presentation,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Presentation {
    B,
    Dbi,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Shuffle product.
    Shuffle {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Balanced quasi-shuffle product.
    Stuffle {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Lie bracket.
    Bracket {
        #[arg(long = "type", value_enum)]
        kind: BracketKind,
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Apply a linear map.
    Map {
        #[arg(long, value_enum)]
        name: MapName,
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Membership test.
    Member {
        #[arg(long, value_enum)]
        space: SpaceArg,
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Basis of one bigraded cell.
    Basis {
        #[arg(long, value_enum)]
        space: SpaceArg,
        #[arg(long)]
        weight: u32,
        #[arg(long)]
        depth: u32,
    },
    /// Dimension table.
    Dims {
        #[arg(long, value_enum)]
        space: SpaceArg,
        #[arg(long)]
        max_weight: u32,
        #[arg(long)]
        max_depth: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BracketKind {
    #[value(name = "A")]
    A,
    Ihara,
    Ari,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapName {
    Tau,
    Pi0,
    Sec,
    Rho,
    #[value(name = "S0")]
    S0,
    Taudbi,
    Delta,
    #[value(name = "grD")]
    GrD,
    #[value(name = "piY")]
    PiY,
    #[value(name = "thetaX")]
    ThetaX,
    #[value(name = "thetaY")]
    ThetaY,
    Theta,
    Beta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpaceArg {
    Lq,
    Ls,
}

impl From<SpaceArg> for Space {
    fn from(s: SpaceArg) -> Space {
        match s {
            SpaceArg::Lq => Space::Lq,
            SpaceArg::Ls => Space::Ls,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<lq_core::Error> for Failure {
    fn from(e: lq_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = std::result::Result<String, Failure>;

/// Resource ceilings, overridden by `LQ_MAX_WEIGHT` and `LQ_MAX_DEPTH`.
pub fn limits_from_env(get: impl Fn(&str) -> Option<String>) -> Result<Limits, String> {
    let mut limits = Limits::default();
    for (var, slot) in [
        ("LQ_MAX_WEIGHT", &mut limits.max_weight),
        ("LQ_MAX_DEPTH", &mut limits.max_depth),
    ] {
        if let Some(v) = get(var) {
            *slot = v
                .trim()
                .parse()
                .map_err(|_| format!("{var} must be a non-negative integer, got `{v}`"))?;
        }
    }
    Ok(limits)
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, limits: &Limits, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    match execute(&cli, limits) {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            EXIT_OK
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DOMAIN
        }
    }
}

fn execute(cli: &Cli, limits: &Limits) -> Outcome {
    let as_dbi = cli.present == Presentation::Dbi;
    match &cli.command {
        Command::Shuffle { p, q } => {
            let (p, q) = parse_pair(p, q)?;
            Ok(shuffle(&p, &q)?.to_string())
        }
        Command::Stuffle { p, q } => {
            let (p, q) = parse_pair(p, q)?;
            Ok(balanced_quasi_shuffle(&p, &q)?.to_string())
        }
        Command::Bracket { kind, p, q } => bracket(*kind, p, q, as_dbi),
        Command::Map { name, p } => map(*name, p, as_dbi),
        Command::Member { space, p } => {
            let p = parse_expr(p)?;
            let report = match space {
                SpaceArg::Lq => is_in_lq(&p.poly)?,
                SpaceArg::Ls => is_in_ls(&p.poly)?,
            };
            Ok(match report.failure {
                None => report.member.to_string(),
                Some(f) => format!("{}\n{f}", report.member),
            })
        }
        Command::Basis {
            space,
            weight,
            depth,
        } => {
            let basis = spaces::basis((*space).into(), *weight, *depth, limits)?;
            let mut lines = vec![format!("dim {}", basis.dim())];
            for p in &basis.basis {
                let shown = match (space, as_dbi) {
                    (SpaceArg::Lq, false) => from_dbi(p)?,
                    _ => p.clone(),
                };
                lines.push(shown.to_string());
            }
            Ok(lines.join("\n"))
        }
        Command::Dims {
            space,
            max_weight,
            max_depth,
            format,
        } => {
            let table = dim_table_with((*space).into(), *max_weight, *max_depth, limits)?;
            Ok(render_dims((*space).into(), &table, *format))
        }
    }
}

fn parse_pair(p: &str, q: &str) -> std::result::Result<(NcPoly, NcPoly), Failure> {
    let (p, q) = (parse_expr(p)?, parse_expr(q)?);
    let a = p.alphabet.or(q.alphabet).unwrap_or(Alphabet::B);
    let p = parse_poly_in(p, a);
    let q = parse_poly_in(q, a);
    Ok((p, q))
}

/// Re-homes a letter-free expression into `alphabet`.
fn parse_poly_in(e: Expr, alphabet: Alphabet) -> NcPoly {
    match e.alphabet {
        Some(_) => e.poly,
        None => NcPoly::monomial(e.poly.constant_term(), lq_core::Word::empty(alphabet)),
    }
}

/// Expresses `p` in the `D` alphabet, converting from `b` if necessary.
fn in_dbi(p: NcPoly) -> std::result::Result<NcPoly, Failure> {
    Ok(match p.alphabet() {
        Alphabet::B => to_dbi(&p)?,
        _ => p,
    })
}

/// Expresses `p` in the `b` alphabet, converting from `D` if necessary.
fn in_b(p: NcPoly) -> std::result::Result<NcPoly, Failure> {
    Ok(match p.alphabet() {
        Alphabet::Dbi => from_dbi(&p)?,
        _ => p,
    })
}

/// `D`-alphabet results computed from `b`-alphabet input go back to `b`
/// unless `--as dbi` is set.
fn present(result: NcPoly, input: Alphabet, as_dbi: bool) -> Outcome {
    let shown = match (result.alphabet(), as_dbi) {
        (Alphabet::Dbi, false) if input == Alphabet::B => from_dbi(&result)?,
        (Alphabet::B, true) => to_dbi(&result)?,
        _ => result,
    };
    Ok(shown.to_string())
}

fn bracket(kind: BracketKind, p: &str, q: &str, as_dbi: bool) -> Outcome {
    let (p, q) = parse_pair(p, q)?;
    let input = p.alphabet();
    match kind {
        BracketKind::A => {
            let (p, q) = if p.alphabet() == q.alphabet() {
                (p, q)
            } else {
                (in_b(p)?, in_b(q)?)
            };
            present(bracket_a(&p, &q)?, input, as_dbi)
        }
        BracketKind::Ihara => Ok(ihara_bracket(&p, &q)?.to_string()),
        BracketKind::Ari => {
            let (p, q) = (in_dbi(p)?, in_dbi(q)?);
            Ok(ari(&beta(&p)?, &beta(&q)?).to_string())
        }
    }
}

fn map(name: MapName, p: &str, as_dbi: bool) -> Outcome {
    let default = match name {
        MapName::Taudbi | MapName::Delta | MapName::Beta => Alphabet::Dbi,
        MapName::PiY | MapName::ThetaX | MapName::Theta => Alphabet::X,
        MapName::ThetaY => Alphabet::Y,
        _ => Alphabet::B,
    };
    let p = parse_poly(p, default)?;
    let input = p.alphabet();
    let result = match name {
        MapName::Tau => tau(&in_b(p)?)?,
        MapName::Pi0 => pi0(&in_b(p)?)?,
        MapName::Sec => sec(&in_b(p)?)?,
        MapName::Rho => rho(&in_b(p)?)?,
        MapName::S0 => s0(&in_b(p)?)?,
        MapName::GrD => gr_d(&p),
        MapName::Taudbi => tau_dbi(&in_dbi(p)?)?,
        MapName::Delta => delta(&in_dbi(p)?)?,
        MapName::PiY => pi_y(&p)?,
        MapName::ThetaX => theta_x(&p)?,
        MapName::ThetaY => theta_y(&p)?,
        MapName::Theta => theta(&p)?,
        MapName::Beta => return Ok(beta(&in_dbi(p)?)?.to_string()),
    };
    present(result, input, as_dbi)
}

#[derive(Serialize)]
struct DimsJson {
    space: String,
    entries: Vec<DimJson>,
}

#[derive(Serialize)]
struct DimJson {
    weight: u32,
    depth: u32,
    dim: usize,
}

fn render_dims(space: Space, table: &[DimEntry], format: Format) -> String {
    match format {
        Format::Json => {
            let doc = DimsJson {
                space: space.to_string(),
                entries: table
                    .iter()
                    .map(|e| DimJson {
                        weight: e.weight,
                        depth: e.depth,
                        dim: e.dim,
                    })
                    .collect(),
            };
            serde_json::to_string(&doc).expect("plain data serializes")
        }
        Format::Csv => {
            let mut lines = vec!["weight,depth,dim".to_string()];
            lines.extend(
                table
                    .iter()
                    .map(|e| format!("{},{},{}", e.weight, e.depth, e.dim)),
            );
            lines.join("\n")
        }
        Format::Table => {
            let max_depth = table.iter().map(|e| e.depth).max().unwrap_or(0);
            let max_weight = table.iter().map(|e| e.weight).max().unwrap_or(0);
            let mut header = format!("{:>6}", "k\\d");
            for d in 0..=max_depth {
                header.push_str(&format!(" {d:>4}"));
            }
            let mut lines = vec![header];
            for k in 0..=max_weight {
                let mut line = format!("{:>6}", k);
                for d in 0..=max_depth {
                    let dim = table
                        .iter()
                        .find(|e| (e.weight, e.depth) == (k, d))
                        .map_or(0, |e| e.dim);
                    line.push_str(&format!(" {dim:>4}"));
                }
                lines.push(line);
            }
            lines.join("\n")
        }
    }
}
