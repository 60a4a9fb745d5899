//! Command-line definitions and dispatch.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use reciprocity_core::curve::{verify_gf_global, verify_residue_theorem, verify_residues_local, verify_wrl, verify_wrl_local, RationalFunction, VerificationReport};
use reciprocity_core::symbols::{cc_symbol, gf_cocycle_local, lie_cocycle_via_commutator, local_commutator, residue_coefficient, tame_symbol_signed, tate_residue, LoopAlgebraElement};
use reciprocity_core::{Field, FieldElem, LaurentSeries, Matrix, Ring, DEFAULT_SEED};

use crate::factored::parse_factored;
use crate::local_data::read_local_data;
use crate::parse::{eval, parse_expr, parse_in, parse_matrix, symbols, Target};
use crate::report;
use crate::spec::{parse_field, parse_ring};
use crate::sweep::{sweep, Check};
use crate::targets::{Constants, Functions, Series};
use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "reciprocity", version, about = "Exact tame, Contou-Carrere and residue symbols, with global reciprocity checks on the projective line")]
pub struct Cli {
    /// Coefficient field: Q, Fp, Fq or Fq:modulus (e.g. F9:u^2+1).
    #[arg(long, global = true, default_value = "Q")]
    pub field: String,

    /// Field that symbol values are normed or traced down to (default: the coefficient field).
    #[arg(long, global = true)]
    pub over: Option<String>,

    /// Coefficients kept above the valuation when dividing series.
    #[arg(long, global = true, default_value_t = 32)]
    pub prec: i64,

    /// Seed for random instances; RECIPROCITY_SEED takes precedence.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Signed tame symbol of two Laurent series in z.
    SymbolTame(Pair),
    /// Contou-Carrere symbol over an Artinian algebra.
    SymbolCc(CcArgs),
    /// Residues of f dg: per place for functions of x, or of two series in z.
    Residue(Global),
    /// Tate's residue of f dg from window operators.
    TateResidue(TateArgs),
    /// Local Gelfand-Fuchs cocycle of two loop-algebra elements.
    CocycleGf(Pair),
    /// Weil reciprocity for two rational functions.
    VerifyWrl(Global),
    /// The residue theorem for f dg.
    VerifyResidues(Global),
    /// Global vanishing of the Gelfand-Fuchs cocycle for S*f and T*g.
    VerifyGf(GfArgs),
    /// Seeded random verification instances.
    Sweep(SweepArgs),
}

#[derive(Args, Debug)]
pub struct Pair {
    #[arg(short)]
    pub f: String,
    #[arg(short)]
    pub g: String,
}

#[derive(Args, Debug)]
pub struct CcArgs {
    /// Artinian algebra, e.g. "Q[e1,e2]/(e1^2,e2^2)".
    #[arg(long)]
    pub ring: String,
    #[arg(short)]
    pub f: String,
    #[arg(short)]
    pub g: String,
}

#[derive(Args, Debug)]
pub struct Global {
    #[arg(short)]
    pub f: Option<String>,
    #[arg(short)]
    pub g: Option<String>,
    /// Treat top-level polynomial factors as declared irreducible.
    #[arg(long)]
    pub factored: bool,
    /// JSON file of local expansions at the places of some curve.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["f", "g", "factored"])]
    pub local_data: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct TateArgs {
    #[arg(short)]
    pub f: String,
    #[arg(short)]
    pub g: String,
    /// Half-width of the window (default: the smallest valid one).
    #[arg(long)]
    pub window: Option<usize>,
}

#[derive(Args, Debug)]
pub struct GfArgs {
    /// Constant matrix S, e.g. "[[1,2],[0,1]]".
    #[arg(short = 'S', long = "s-matrix")]
    pub s: String,
    /// Constant matrix T.
    #[arg(short = 'T', long = "t-matrix")]
    pub t: String,
    #[arg(short)]
    pub f: String,
    #[arg(short)]
    pub g: String,
    #[arg(long)]
    pub factored: bool,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, value_enum, default_value_t = Check::All)]
    pub check: Check,
}

/// Result of one command: text and JSON renderings plus the verdict.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub verified: bool,
}

impl Output {
    fn value(input: Value, value: String) -> Self {
        Output { text: format!("{value}\n"), json: json!({"input": input, "value": value}), verified: true }
    }

    fn report(input: Value, r: &VerificationReport) -> Self {
        Output { text: report::to_text(r), json: report::to_json(input, r), verified: r.verified }
    }
}

/// `--seed`, overridden by `RECIPROCITY_SEED` when set.
pub fn resolve_seed(flag: Option<u64>, env: Option<&str>) -> Result<u64, CliError> {
    match env.map(str::trim).filter(|s| !s.is_empty()) {
        Some(s) => {
            let parsed = match s.strip_prefix("0x") {
                Some(hex) => u64::from_str_radix(hex, 16),
                None => s.parse(),
            };
            parsed.map_err(|_| CliError::Input(format!("RECIPROCITY_SEED: '{s}' is not a 64-bit integer")))
        }
        None => Ok(flag.unwrap_or(DEFAULT_SEED)),
    }
}

fn parse_with<T: Target>(t: &T, what: &str, text: &str) -> Result<T::Value, CliError> {
    parse_in(t, text).map_err(|err| CliError::Parse { what: what.into(), text: text.into(), err })
}

fn function(k: &Field, what: &str, text: &str, factored: bool) -> Result<RationalFunction, CliError> {
    if factored {
        return Ok(parse_factored(k, what, text)?.0);
    }
    parse_with(&Functions::new(k), what, text)
}

fn required<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str, CliError> {
    v.as_deref().ok_or_else(|| CliError::Input(format!("{flag} is required unless --local-data is given")))
}

fn mentions_z(text: &str) -> bool {
    parse_expr(text).map(|e| symbols(&e).iter().any(|s| s == "z")).unwrap_or(false)
}

fn loop_element(k: &Field, prec: i64, what: &str, text: &str) -> Result<LoopAlgebraElement, CliError> {
    let rows = parse_matrix(text).map_err(|err| CliError::Parse { what: what.into(), text: text.into(), err })?;
    let target = Series::over_field(k, prec);
    let n = rows.len();
    let mut entries = Vec::with_capacity(n * n);
    for e in rows.iter().flatten() {
        entries.push(eval(&target, e).map_err(|err| CliError::Parse { what: what.into(), text: text.into(), err })?);
    }
    Ok(LoopAlgebraElement::from_entries(n, entries)?)
}

fn constant_matrix(k: &Field, what: &str, text: &str) -> Result<Matrix<Field>, CliError> {
    let rows = parse_matrix(text).map_err(|err| CliError::Parse { what: what.into(), text: text.into(), err })?;
    let target = Constants { field: k.clone() };
    let values: Vec<Vec<FieldElem>> = rows
        .iter()
        .map(|row| row.iter().map(|e| eval(&target, e)).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()
        .map_err(|err| CliError::Parse { what: what.into(), text: text.into(), err })?;
    Ok(Matrix::from_rows(k, values)?)
}

fn global_report(cli: &Cli, k: &Field, args: &Global, residues: bool) -> Result<Output, CliError> {
    let name = if residues { "verify-residues" } else { "verify-wrl" };
    if let Some(path) = &args.local_data {
        let (base, data) = read_local_data(path, k, cli.prec)?;
        let r = if residues { verify_residues_local(&base, &data)? } else { verify_wrl_local(&base, &data)? };
        let input = json!({"command": name, "field": base.to_string(), "local_data": path.display().to_string()});
        return Ok(Output::report(input, &r));
    }
    let (ft, gt) = (required(&args.f, "-f")?, required(&args.g, "-g")?);
    let f = function(k, "-f", ft, args.factored)?;
    let g = function(k, "-g", gt, args.factored)?;
    let r = if residues { verify_residue_theorem(&f, &g)? } else { verify_wrl(&f, &g)? };
    let input = json!({"command": name, "field": k.to_string(), "f": f.to_string(), "g": g.to_string(), "factored": args.factored});
    Ok(Output::report(input, &r))
}

pub fn run(cli: &Cli, seed_env: Option<&str>) -> Result<Output, CliError> {
    let k = parse_field(&cli.field)?;
    let over = match &cli.over {
        Some(s) => parse_field(s)?,
        None => k.clone(),
    };
    let series = Series::over_field(&k, cli.prec);
    let local_input = |cmd: &str, f: &LaurentSeries<Field>, g: &LaurentSeries<Field>| {
        json!({"command": cmd, "field": k.to_string(), "over": over.to_string(), "f": f.to_string(), "g": g.to_string()})
    };
    match &cli.command {
        Command::SymbolTame(p) => {
            let f = parse_with(&series, "-f", &p.f)?;
            let g = parse_with(&series, "-g", &p.g)?;
            let value = tame_symbol_signed(&f, &g, &over)?;
            let commutator = local_commutator(&f, &g, &over)?;
            let mut out = Output::value(local_input("symbol-tame", &f, &g), over.display(&value).to_string());
            out.json["commutator"] = json!(over.display(&commutator).to_string());
            Ok(out)
        }
        Command::SymbolCc(a) => {
            let r = parse_ring(&a.ring)?;
            let base = match &cli.over {
                Some(s) => parse_field(s)?,
                None => r.base().clone(),
            };
            let target = Series::over_algebra(&r, cli.prec);
            let f = parse_with(&target, "-f", &a.f)?;
            let g = parse_with(&target, "-g", &a.g)?;
            let value = cc_symbol(&f, &g, &base)?;
            let input = json!({"command": "symbol-cc", "ring": value.ring.to_string(), "f": f.to_string(), "g": g.to_string()});
            Ok(Output::value(input, value.to_string()))
        }
        Command::Residue(args) => {
            let local = args.local_data.is_none() && [&args.f, &args.g].iter().any(|t| t.as_deref().is_some_and(mentions_z));
            if !local {
                return global_report(cli, &k, args, true);
            }
            let f = parse_with(&series, "-f", required(&args.f, "-f")?)?;
            let g = parse_with(&series, "-g", required(&args.g, "-g")?)?;
            let value = residue_coefficient(&f, &g, &over)?;
            Ok(Output::value(local_input("residue", &f, &g), over.display(&value).to_string()))
        }
        Command::TateResidue(a) => {
            let f = parse_with(&series, "-f", &a.f)?;
            let g = parse_with(&series, "-g", &a.g)?;
            let bound = |s: &LaurentSeries<Field>| (s.pole_order() + s.high().unwrap_or(0).max(0)) as usize;
            let window = a.window.unwrap_or_else(|| bound(&f).max(bound(&g)));
            let tate = tate_residue(&f, &g, window, &over)?;
            let coefficient = residue_coefficient(&f, &g, &over)?;
            let commutator = lie_cocycle_via_commutator(&f, &g, &over)?;
            let verified = tate == coefficient && coefficient == commutator;
            let show = |v: &FieldElem| over.display(v).to_string();
            let mut text = format!("{}\n", show(&tate));
            if !verified {
                text += &format!("VIOLATED: residue coefficient {}, commutator cocycle {}\n", show(&coefficient), show(&commutator));
            }
            let mut input = local_input("tate-residue", &f, &g);
            input["window"] = json!(window);
            let json = json!({"input": input, "value": show(&tate), "residue_coefficient": show(&coefficient), "commutator": show(&commutator), "verified": verified});
            Ok(Output { text, json, verified })
        }
        Command::CocycleGf(p) => {
            let a = loop_element(&k, cli.prec, "-f", &p.f)?;
            let b = loop_element(&k, cli.prec, "-g", &p.g)?;
            let value = gf_cocycle_local(&a, &b, &over)?;
            let input = json!({"command": "cocycle-gf", "field": k.to_string(), "f": p.f, "g": p.g});
            Ok(Output::value(input, over.display(&value).to_string()))
        }
        Command::VerifyWrl(args) => global_report(cli, &k, args, false),
        Command::VerifyResidues(args) => global_report(cli, &k, args, true),
        Command::VerifyGf(a) => {
            let s = constant_matrix(&k, "-S", &a.s)?;
            let t = constant_matrix(&k, "-T", &a.t)?;
            let f = function(&k, "-f", &a.f, a.factored)?;
            let g = function(&k, "-g", &a.g, a.factored)?;
            let r = verify_gf_global(&s, &t, &f, &g)?;
            let input = json!({"command": "verify-gf", "field": k.to_string(), "S": a.s, "T": a.t, "f": f.to_string(), "g": g.to_string()});
            Ok(Output::report(input, &r))
        }
        Command::Sweep(a) => {
            let seed = resolve_seed(cli.seed, seed_env)?;
            Ok(sweep(&k, a.count, seed, a.check))
        }
    }
}
