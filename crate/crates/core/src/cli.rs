//! Command-line front end. Every command builds a JSON value; text output is rendered
//! from that value.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::census::{enumerate_borel, CensusRecord};
use crate::components::{component_lower_bound, conjecture_min_deglex_check, max_hilbert_function};
use crate::error::{Error, Result};
use crate::extensor::{check_persistence, dd_compare, eisenbud_compare, DdMethod, ExtensorTerm};
use crate::grassmann::{
    delta_support, generic_initial_extensor, gin_ideal, ideal_hilbert_function, initial_extensor,
    HomogeneousPolynomial, Subspace, DEFAULT_SUPPORT_BUDGET,
};
use crate::hilbert::{check_admissible, gotzmann_decompose, HilbertPolynomial};
use crate::ideal::{DegreeSlice, MonomialIdeal};
use crate::order::TermOrder;

/// Environment variable holding the default worker count.
pub const JOBS_ENV: &str = "DGIN_JOBS";

#[derive(Parser, Debug)]
#[command(
    name = "dgin",
    version,
    about = "Borel ideals, extensor terms and double-generic initial ideals"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write results to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads (default: $DGIN_JOBS, else all cores).
    #[arg(long, env = JOBS_ENV, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Gotzmann decomposition and number of a Hilbert polynomial.
    Gotzmann {
        #[arg(long)]
        poly: String,
        /// Also check admissibility in P^n.
        #[arg(long)]
        n: Option<usize>,
    },
    /// All saturated strongly stable ideals with the given Hilbert polynomial.
    Enumerate(CensusArgs),
    /// The ≺≺-maximal Borel terms in degree r.
    Maximal(OrderedCensusArgs),
    /// Lower bounds on the number of components.
    Bound(OrderedCensusArgs),
    /// Compare two extensor terms.
    Compare(CompareArgs),
    /// Generic initial ideal of a homogeneous ideal.
    Gin(GinArgs),
    /// Initial and generic initial extensor of a subspace.
    Ginext(SubspaceArgs),
    /// Extensor terms with nonzero Plücker coordinate.
    Support(SupportArgs),
    /// Hilbert function of a monomial ideal or of the ideal generated by a subspace.
    Hilb(HilbArgs),
    /// Full census report.
    Report(OrderedCensusArgs),
    /// Evidence for the deglex minimal Hilbert function conjecture.
    Conjecture(CensusArgs),
}

#[derive(Args, Debug)]
struct CensusArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    poly: String,
}

#[derive(Args, Debug)]
struct OrderedCensusArgs {
    #[command(flatten)]
    census: CensusArgs,
    /// lex, deglex, degrevlex or weight:w0,...,wn
    #[arg(long, default_value = "degrevlex")]
    order: String,
}

#[derive(Args, Debug)]
struct CompareArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "degrevlex")]
    order: String,
    /// First term, e.g. "[x2^2, x1*x2, x1^2]".
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
    /// sorted, counting, symmdiff or matching
    #[arg(long, default_value = "sorted")]
    method: String,
}

#[derive(Args, Debug)]
struct RandomArgs {
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 8)]
    trials: usize,
}

#[derive(Args, Debug)]
struct GinArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "degrevlex")]
    order: String,
    /// Semicolon-separated homogeneous generators.
    #[arg(long)]
    gens: String,
    /// Degree bound for the degreewise reconstruction.
    #[arg(long)]
    upto: Option<u32>,
    #[command(flatten)]
    random: RandomArgs,
}

#[derive(Args, Debug)]
struct SubspaceArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "degrevlex")]
    order: String,
    /// Semicolon-separated basis polynomials of one degree.
    #[arg(long)]
    subspace: String,
    #[command(flatten)]
    random: RandomArgs,
}

#[derive(Args, Debug)]
struct SupportArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "degrevlex")]
    order: String,
    #[arg(long)]
    subspace: String,
    #[arg(long, default_value_t = DEFAULT_SUPPORT_BUDGET)]
    budget: u64,
}

#[derive(Args, Debug)]
struct HilbArgs {
    #[arg(long)]
    n: usize,
    /// Comma-separated monomial generators.
    #[arg(
        long,
        conflicts_with = "subspace",
        required_unless_present = "subspace"
    )]
    ideal: Option<String>,
    #[arg(long)]
    subspace: Option<String>,
    /// Last degree to tabulate.
    #[arg(long, default_value_t = 10)]
    upto: u32,
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::Dimension(_)
        | Error::Parameter(_)
        | Error::Unsupported(_)
        | Error::UndefinedMin => 2,
        Error::Admissibility(_) | Error::Resource { .. } | Error::NotStabilized(_) => 3,
        Error::Genericity(_) => 4,
        Error::Precondition(_) => 1,
    }
}

/// Runs the command line `args` (program name first). Results go to `out` or the
/// `--output` file, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    if let Some(jobs) = cli.jobs {
        // Only the first configuration wins; later calls in the same process are ignored.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global();
    }
    let result = execute(&cli).map(|value| match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => render_text(&cli.command, &value),
    });
    match result {
        Ok(text) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, text),
                None => out.write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(err, "error: cannot write output: {e}");
                    1
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn flag<T>(name: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { pos, msg } => Error::Parse {
            pos,
            msg: format!("--{name}: {msg}"),
        },
        e => e,
    })
}

fn poly(text: &str) -> Result<HilbertPolynomial> {
    flag("poly", text.parse())
}

fn order(text: &str, n: usize) -> Result<TermOrder> {
    let o: TermOrder = flag("order", text.parse())?;
    o.validate(n + 1)?;
    Ok(o)
}

fn seed(cli: &Cli, r: &RandomArgs) -> Result<u64> {
    match (r.seed, cli.format) {
        (Some(s), _) => Ok(s),
        (None, Format::Json) => Err(Error::Parameter(
            "--seed is required with --format json".into(),
        )),
        (None, Format::Text) => Ok(0),
    }
}

fn execute(cli: &Cli) -> Result<Value> {
    match &cli.command {
        Command::Gotzmann { poly: p, n } => {
            let p = poly(p)?;
            let dec = match n {
                Some(n) => check_admissible(&p, *n)?,
                None => gotzmann_decompose(&p)?,
            };
            Ok(json!({ "p": p.to_string(), "r": dec.len(), "decomposition": dec.0 }))
        }
        Command::Enumerate(a) => {
            let p = poly(&a.poly)?;
            let r = check_admissible(&p, a.n)?.len() as u32;
            let records = enumerate_borel(&p, a.n)?
                .iter()
                .map(|i| CensusRecord::new(i, r))
                .collect::<Result<Vec<_>>>()?;
            Ok(serde_json::to_value(records).expect("serializable"))
        }
        Command::Maximal(a) => {
            let rep = census_report(a)?;
            let maximal: Vec<Value> = rep
                .maximal
                .iter()
                .map(|&i| json!({ "index": i, "generators": rep.census[i].generator_strings() }))
                .collect();
            Ok(
                json!({ "p": rep.p, "order": rep.order, "r": rep.r, "count": rep.count, "maximal": maximal }),
            )
        }
        Command::Bound(a) => {
            let rep = census_report(a)?;
            Ok(json!({ "bound_basic": rep.bound_basic, "bound_refined": rep.bound_refined }))
        }
        Command::Report(a) => {
            let rep = census_report(a)?;
            let mut value = serde_json::to_value(&rep).expect("serializable");
            if *rep.order() == TermOrder::DegRevLex {
                value["max_hilbert"] =
                    serde_json::to_value(max_hilbert_function(&rep)?).expect("serializable");
            }
            Ok(value)
        }
        Command::Compare(a) => {
            let o = order(&a.order, a.n)?;
            let method: DdMethod = flag("method", a.method.parse())?;
            let ta = ExtensorTerm::new(flag("a", DegreeSlice::parse(&a.a, a.n + 1))?, o.clone())?;
            let tb = ExtensorTerm::new(flag("b", DegreeSlice::parse(&a.b, a.n + 1))?, o)?;
            let verdict = dd_compare(&ta, &tb, method)?;
            let eisenbud = match eisenbud_compare(&ta, &tb)? {
                std::cmp::Ordering::Less => "less",
                std::cmp::Ordering::Equal => "equal",
                std::cmp::Ordering::Greater => "greater",
            };
            let persistence = if ta.is_borel() && tb.is_borel() {
                check_persistence(&ta, &tb).ok().map(|r| r.persistent())
            } else {
                None
            };
            Ok(json!({ "verdict": verdict, "eisenbud": eisenbud, "persistent": persistence }))
        }
        Command::Gin(a) => {
            let o = order(&a.order, a.n)?;
            let gens = a
                .gens
                .split(';')
                .map(|f| flag("gens", HomogeneousPolynomial::parse(f, a.n + 1)))
                .collect::<Result<Vec<_>>>()?;
            let s = seed(cli, &a.random)?;
            let gin = gin_ideal(&gens, &o, s, a.upto, a.random.trials)?;
            Ok(json!({
                "order": o.to_string(),
                "seed": s,
                "generators": gin.generator_strings(),
                "regularity": gin.regularity()?,
            }))
        }
        Command::Ginext(a) => {
            let o = order(&a.order, a.n)?;
            let v = flag("subspace", Subspace::parse(&a.subspace, a.n + 1))?;
            let s = seed(cli, &a.random)?;
            let init = initial_extensor(&v, &o)?;
            let gin = generic_initial_extensor(&v, &o, s, a.random.trials)?;
            Ok(json!({
                "order": o.to_string(),
                "seed": s,
                "initial": init.wedge_string(),
                "generic": gin.wedge_string(),
            }))
        }
        Command::Support(a) => {
            let o = order(&a.order, a.n)?;
            let v = flag("subspace", Subspace::parse(&a.subspace, a.n + 1))?;
            let terms: Vec<String> = delta_support(&v, &o, a.budget)?
                .iter()
                .map(ExtensorTerm::wedge_string)
                .collect();
            Ok(json!({ "support": terms }))
        }
        Command::Hilb(a) => {
            if let Some(text) = &a.ideal {
                let i = flag("ideal", MonomialIdeal::parse(text, a.n + 1))?;
                let hp = i.hilbert_polynomial()?;
                Ok(json!({
                    "hilbert_function": i.hilbert_function_upto(a.upto),
                    "hilbert_polynomial": hp.to_string(),
                }))
            } else {
                let text = a.subspace.as_deref().expect("clap requires one input");
                let v = flag("subspace", Subspace::parse(text, a.n + 1))?;
                Ok(json!({
                    "from_degree": v.degree(),
                    "ideal_dimensions": ideal_hilbert_function(&v, a.upto)?,
                }))
            }
        }
        Command::Conjecture(a) => {
            let report = conjecture_min_deglex_check(&poly(&a.poly)?, a.n)?;
            Ok(serde_json::to_value(report).expect("serializable"))
        }
    }
}

fn census_report(a: &OrderedCensusArgs) -> Result<crate::components::CensusReport> {
    let p = poly(&a.census.poly)?;
    let o = order(&a.order, a.census.n)?;
    component_lower_bound(&p, a.census.n, &o)
}

fn render_text(command: &Command, v: &Value) -> String {
    let mut s = match command {
        Command::Gotzmann { .. } => v["r"].to_string(),
        Command::Enumerate(_) => lines(
            v.as_array()
                .unwrap()
                .iter()
                .map(|r| ideal_text(&r["generators"])),
        ),
        Command::Maximal(_) => lines(
            v["maximal"]
                .as_array()
                .unwrap()
                .iter()
                .map(|m| ideal_text(&m["generators"])),
        ),
        Command::Bound(_) => format!(
            "bound_basic={} bound_refined={}",
            v["bound_basic"],
            scalar(&v["bound_refined"])
        ),
        Command::Compare(_) => scalar(&v["verdict"]),
        Command::Gin(_) => ideal_text(&v["generators"]),
        Command::Ginext(_) => format!(
            "initial {}\ngeneric {}",
            scalar(&v["initial"]),
            scalar(&v["generic"])
        ),
        Command::Support(_) => lines(v["support"].as_array().unwrap().iter().map(scalar)),
        Command::Report(_) => {
            let maximal: Vec<u64> = v["maximal"]
                .as_array()
                .unwrap()
                .iter()
                .map(|i| i.as_u64().unwrap())
                .collect();
            let rows = v["ideals"]
                .as_array()
                .unwrap()
                .iter()
                .enumerate()
                .map(|(i, rec)| {
                    let mark = if maximal.contains(&(i as u64)) {
                        "*"
                    } else {
                        " "
                    };
                    format!(
                        "{mark}{i:>4}  reg {:>2}  {}",
                        rec["regularity"],
                        ideal_text(&rec["generators"])
                    )
                });
            format!(
                "{}
{}",
                aligned(v),
                lines(rows)
            )
        }
        _ => aligned(v),
    };
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "unset".into(),
        v => v.to_string(),
    }
}

fn ideal_text(gens: &Value) -> String {
    let parts: Vec<String> = gens.as_array().unwrap().iter().map(scalar).collect();
    format!("({})", parts.join(", "))
}

fn lines(items: impl Iterator<Item = String>) -> String {
    items.collect::<Vec<_>>().join("\n")
}

/// `key  value` lines with keys padded to a common width.
fn aligned(v: &Value) -> String {
    let Value::Object(map) = v else {
        return scalar(v);
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    map.iter()
        .map(|(k, x)| {
            let shown = match x {
                Value::Array(items) if items.iter().all(|i| !i.is_object()) => {
                    items.iter().map(compact).collect::<Vec<_>>().join(" ")
                }
                Value::Array(items) => format!("{} entries below", items.len()),
                Value::Object(_) => compact(x),
                x => scalar(x),
            };
            format!("{k:width$}  {shown}")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn compact(v: &Value) -> String {
    match v {
        Value::Array(items) => format!(
            "[{}]",
            items.iter().map(compact).collect::<Vec<_>>().join(",")
        ),
        Value::Object(_) => v.to_string(),
        v => scalar(v),
    }
}
