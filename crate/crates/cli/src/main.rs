//! `skewprim`: search, construct and check quantum operations from the shell.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use skewprim::freealg::{braided_coproduct, coproduct, parse_polynomial, Polynomial};
use skewprim::ops::{self, identities};
use skewprim::pairing::PairingContext;
use skewprim::primcheck::{
    brute_force_multilinear_space, is_left_primitive_wrt, is_right_primitive_wrt, is_skew_primitive, left_obstruction,
    right_obstruction,
};
use skewprim::{presets, Error};

#[derive(Parser)]
#[command(name = "skewprim", version, about = "Exact quantum operations on skew primitive elements")]
struct Cli {
    #[command(flatten)]
    source: Source,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// Context file (header `n=<arity> field=<spec>`, then `p i j <value>` lines).
    #[arg(long, global = true, conflicts_with = "preset")]
    context: Option<String>,
    /// Preset context, e.g. `pareigis:n=4` or `drinfeld-jimbo:cartan=A2`.
    #[arg(long, global = true)]
    preset: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Basis of all multilinear operations in the context's variables.
    Space {
        /// Cross-check against the brute-force coproduct solve.
        #[arg(long)]
        oracle: bool,
        /// Print only the dimension.
        #[arg(long)]
        dim_only: bool,
    },
    /// Whether a polynomial is skew primitive.
    Check {
        polynomial: String,
        /// Also report left and right primitivity with respect to this variable.
        #[arg(long)]
        wrt: Option<String>,
    },
    /// Build a named operation.
    Construct {
        #[arg(value_enum)]
        kind: Kind,
        /// Degree in the second variable (binary) or exponent (unary).
        #[arg(long)]
        n: Option<usize>,
        /// First variable (unary, binary, serre).
        #[arg(long)]
        x: Option<String>,
        /// Second variable (binary, serre).
        #[arg(long)]
        y: Option<String>,
        /// Arguments separated by `;`; defaults to the generators.
        #[arg(long)]
        args: Option<String>,
        /// Root of unity for the Pareigis operation; searched when omitted.
        #[arg(long)]
        zeta: Option<String>,
        /// Cartan entry for the Serre operation.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<i64>,
        /// Symmetrizer entry for the Serre operation.
        #[arg(long, default_value_t = 1)]
        d: u32,
        /// Parameter q for the Serre operation.
        #[arg(long)]
        q: Option<String>,
    },
    /// Coproduct of a polynomial.
    Expand {
        polynomial: String,
        /// Use the braided coproduct instead.
        #[arg(long)]
        braided: bool,
    },
    /// Check a named identity exactly.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(identities::IDENTITY_NAMES))]
        identity: String,
    },
    /// Print the context file of a preset.
    Preset {
        /// Preset name, optionally with `:key=value,...` options.
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<u32>,
        /// Cartan type (A2, B3, G2, ...) or matrix `[[2,-1],[-1,2]]`.
        #[arg(long)]
        cartan: Option<String>,
        /// Include the variables `k_i = 1 - K_i`.
        #[arg(long)]
        with_k: bool,
        /// Bicharacter table for the color preset.
        #[arg(long)]
        table: Option<String>,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        q: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Unary,
    Binary,
    Bilinear,
    Trilinear,
    Quadrilinear,
    Pareigis,
    Serre,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => 2,
            Error::ContextInconsistent(_) | Error::DivisionByZero => 3,
            Error::NotGroupHomogeneous => 5,
            Error::Undefined(_) => 6,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

type CliResult = Result<String, Failure>;

fn load_context(source: &Source) -> Result<PairingContext, Failure> {
    match (&source.context, &source.preset) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).map_err(|e| Failure { code: 2, message: format!("cannot read {path}: {e}") })?;
            Ok(PairingContext::parse(&text)?)
        }
        (None, Some(spec)) => Ok(presets::from_spec(spec)?),
        (None, None) => Err(Failure { code: 2, message: "a context is required: pass --context FILE or --preset SPEC".into() }),
    }
}

fn variable(ctx: &PairingContext, name: &str) -> Result<usize, Failure> {
    if let Some(i) = ctx.names().iter().position(|n| n == name) {
        return Ok(i);
    }
    name.strip_prefix('x')
        .and_then(|k| k.parse::<usize>().ok())
        .filter(|&k| k >= 1 && k <= ctx.n())
        .map(|k| k - 1)
        .ok_or_else(|| Failure { code: 2, message: format!("unknown variable {name}") })
}

fn parse_args(ctx: &PairingContext, args: &Option<String>, arity: usize) -> Result<Vec<Polynomial>, Failure> {
    let list = match args {
        None => ops::generators(ctx).into_iter().take(arity).collect::<Vec<_>>(),
        Some(text) => text.split(';').map(|t| parse_polynomial(ctx, t.trim())).collect::<Result<Vec<_>, _>>()?,
    };
    if list.len() != arity {
        return Err(Error::ArityMismatch { expected: arity, found: list.len() }.into());
    }
    Ok(list)
}

fn cmd_space(ctx: &PairingContext, oracle: bool, dim_only: bool) -> CliResult {
    let space = ops::multilinear_space(ctx)?;
    let mut out = format!("dim {}", space.dim());
    if oracle {
        let agree = space.same_span(&brute_force_multilinear_space(ctx)?);
        out.push_str(if agree { " AGREE" } else { " DISAGREE" });
        if !agree {
            return Err(Failure { code: 4, message: out });
        }
    }
    if !dim_only {
        for w in &space.elements {
            out.push('\n');
            out.push_str(&w.render(ctx));
        }
    }
    Ok(out)
}

fn cmd_check(ctx: &PairingContext, text: &str, wrt: &Option<String>) -> CliResult {
    let w = parse_polynomial(ctx, text)?;
    let report = is_skew_primitive(ctx, &w)?;
    let mut out = if report.verdict {
        "primitive".to_string()
    } else {
        format!("not-primitive\ndefect: {}", report.defect.render(ctx))
    };
    if let Some(v) = wrt {
        let x = variable(ctx, v)?;
        let yes = |b: bool| if b { "yes" } else { "no" };
        let left = is_left_primitive_wrt(ctx, &w, x)?;
        let right = is_right_primitive_wrt(ctx, &w, x)?;
        out.push_str(&format!("\nleft-primitive wrt {v}: {}", yes(left)));
        if !left {
            out.push_str(&format!("\n  obstruction: {}", left_obstruction(ctx, &w, x)?.render(ctx)));
        }
        out.push_str(&format!("\nright-primitive wrt {v}: {}", yes(right)));
        if !right {
            out.push_str(&format!("\n  obstruction: {}", right_obstruction(ctx, &w, x)?.render(ctx)));
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn cmd_construct(
    ctx: &PairingContext,
    kind: Kind,
    n: Option<usize>,
    x: &Option<String>,
    y: &Option<String>,
    args: &Option<String>,
    zeta: &Option<String>,
    a: Option<i64>,
    d: u32,
    q: &Option<String>,
) -> CliResult {
    let var_or = |v: &Option<String>, default: usize| -> Result<usize, Failure> {
        match v {
            Some(name) => variable(ctx, name),
            None if default < ctx.n() => Ok(default),
            None => Err(Error::ArityMismatch { expected: default + 1, found: ctx.n() }.into()),
        }
    };
    let w = match kind {
        Kind::Unary => {
            let arg = match args {
                Some(_) => parse_args(ctx, args, 1)?.remove(0),
                None => Polynomial::var(ctx, var_or(x, 0)?),
            };
            ops::main_unary(ctx, &arg)?
        }
        Kind::Binary => {
            let (xi, yi) = (var_or(x, 0)?, var_or(y, 1)?);
            let n = n.ok_or_else(|| Failure { code: 2, message: "binary needs --n".into() })?;
            ops::binary_one_linear(ctx, xi, yi, n)?
                .ok_or_else(|| Failure { code: 6, message: format!("no operation linear in x of degree {n} in y exists") })?
        }
        Kind::Bilinear => {
            let v = parse_args(ctx, args, 2)?;
            ops::main_bilinear(ctx, &v[0], &v[1])?
        }
        Kind::Trilinear => {
            let v = parse_args(ctx, args, 3)?;
            ops::main_trilinear(ctx, &v[0], &v[1], &v[2])?
        }
        Kind::Quadrilinear => ops::main_quadrilinear(ctx, &parse_args(ctx, args, 4)?)?,
        Kind::Pareigis => {
            let z = match zeta {
                Some(t) => ctx.parse_scalar(t)?,
                None => ops::pareigis_root(ctx)
                    .ok_or_else(|| Failure { code: 6, message: "no suitable root of unity in the field".into() })?,
            };
            ops::pareigis(ctx, &z)?
        }
        Kind::Serre => {
            let (xi, yi) = (var_or(x, 0)?, var_or(y, 1)?);
            let a = a.ok_or_else(|| Failure { code: 2, message: "serre needs --a".into() })?;
            let q = ctx.parse_scalar(q.as_deref().ok_or_else(|| Failure { code: 2, message: "serre needs --q".into() })?)?;
            ops::serre(ctx, xi, yi, a, d, &q)?
        }
    };
    Ok(w.render(ctx))
}

fn cmd_expand(ctx: &PairingContext, text: &str, braided: bool) -> CliResult {
    let w = parse_polynomial(ctx, text)?;
    let t = if braided { braided_coproduct(ctx, &w)? } else { coproduct(ctx, &w)? };
    Ok(t.render(ctx))
}

fn cmd_verify(ctx: &PairingContext, name: &str) -> CliResult {
    let report = identities::verify(ctx, name)?;
    if report.passed() {
        Ok(report.to_string())
    } else {
        Err(Failure { code: 7, message: report.to_string() })
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_preset(
    name: &str,
    n: Option<usize>,
    m: Option<u32>,
    cartan: &Option<String>,
    with_k: bool,
    table: &Option<String>,
    field: &Option<String>,
    q: &Option<String>,
) -> CliResult {
    let mut opts: Vec<String> = Vec::new();
    let (base, inline) = name.split_once(':').unwrap_or((name, ""));
    if !inline.is_empty() {
        opts.push(inline.to_string());
    }
    let mut push = |k: &str, v: Option<String>| {
        if let Some(v) = v {
            opts.push(format!("{k}={v}"));
        }
    };
    push("n", n.map(|v| v.to_string()));
    push("m", m.map(|v| v.to_string()));
    push("cartan", cartan.clone());
    push("table", table.clone());
    push("field", field.clone());
    push("q", q.clone());
    if with_k {
        opts.push("k".into());
    }
    let spec = if opts.is_empty() { base.to_string() } else { format!("{base}:{}", opts.join(",")) };
    let ctx = presets::from_spec(&spec)?;
    Ok(ctx.to_text().trim_end().to_string())
}

fn run(cli: Cli) -> CliResult {
    if let Command::Preset { name, n, m, cartan, with_k, table, field, q } = &cli.command {
        return cmd_preset(name, *n, *m, cartan, *with_k, table, field, q);
    }
    let ctx = load_context(&cli.source)?;
    match &cli.command {
        Command::Space { oracle, dim_only } => cmd_space(&ctx, *oracle, *dim_only),
        Command::Check { polynomial, wrt } => cmd_check(&ctx, polynomial, wrt),
        Command::Construct { kind, n, x, y, args, zeta, a, d, q } => cmd_construct(&ctx, *kind, *n, x, y, args, zeta, *a, *d, q),
        Command::Expand { polynomial, braided } => cmd_expand(&ctx, polynomial, *braided),
        Command::Verify { identity } => cmd_verify(&ctx, identity),
        Command::Preset { .. } => unreachable!("handled above"),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
