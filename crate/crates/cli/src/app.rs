use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use ramify_core::frobenius::{search_tuple_with, FrobeniusConstraint, SearchOptions, TupleStatus};
use ramify_core::rules::{check_number_field, NumberFieldVerdict, RulesConfig};
use ramify_core::{FiniteGroup, GroupError, SearchError};

use crate::report::{FfReport, NfReport, SweepReport, SweepRow, TablesReport, SCHEMA};
use crate::spec::{GroupSpec, SpecError};
use crate::tables::{regression_rows, Section};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_REGRESSION: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;

const GROUP_HELP: &str = "Group spec: C(n), D(2n) (argument is the order), S(n), A(n), SL32, \
FSD(q,n), SDP(k,m,u) (Z/k ⋊ Z/m acting by x -> x^u), perm[(1 2 3)(4 5), (1 2)] \
(1-based cycles, composed left to right), prod(spec,spec)";

#[derive(Parser, Debug)]
#[command(
    name = "ramify",
    version,
    about = "Group-theoretic obstructions for Galois groups ramified at a single prime",
    after_help = "Exit codes: 0 ran, 2 usage error, 3 regression mismatch, 4 search budget exceeded.\n\
                  EXCLUDED verdicts are proofs; INCONCLUSIVE means a necessary condition passes, \
                  not that the group occurs."
)]
pub struct Cli {
    /// Worker threads for searches and sweeps (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Search for tame Frobenius tuples over F_q(t) ramified at one prime of degree d.
    CheckFf(CheckFf),
    /// Apply the number-field exclusion rules for groups ramified only at p.
    CheckNf(CheckNf),
    /// Run a check over a family of groups.
    Sweep(Sweep),
    /// Re-run every published example and compare with the expected verdicts.
    PaperTables(PaperTables),
    /// Parse a group spec and print its normal form and order.
    Parse(ParseCmd),
}

#[derive(Args, Debug)]
pub struct FfArgs {
    /// Size of the constant field F_q (a prime power).
    #[arg(long)]
    pub q: u64,
    /// Degree d of the ramified prime as a divisor (not a count of primes).
    #[arg(long)]
    pub fdeg: usize,
    /// Permit tame ramification at infinity.
    #[arg(long)]
    pub allow_infinity: bool,
    /// Node budget for the tuple search.
    #[arg(long, default_value_t = SearchOptions::default().node_budget)]
    pub budget: u64,
}

#[derive(Args, Debug)]
pub struct CheckFf {
    #[arg(long, help = GROUP_HELP)]
    pub group: String,
    #[command(flatten)]
    pub ff: FfArgs,
    /// Print the report as JSON.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct CheckNf {
    #[arg(long, help = GROUP_HELP)]
    pub group: String,
    /// The single ramified prime.
    #[arg(long)]
    pub p: u64,
    /// TOML file with discriminant-table extensions and registry overrides.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Dihedral,
    Symmetric,
    Alternating,
    Fsd,
    Cyclic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct Sweep {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Smallest parameter: the order for dihedral, n for S(n)/A(n)/C(n),
    /// the extension degree n for FSD(q,n).
    #[arg(long)]
    pub min: Option<u64>,
    /// Largest parameter, same meaning as --min.
    #[arg(long)]
    pub max: u64,
    /// Constant field size; selects the function-field check.
    #[arg(long)]
    pub q: Option<u64>,
    /// Degree of the ramified prime (function-field check).
    #[arg(long)]
    pub fdeg: Option<usize>,
    #[arg(long)]
    pub allow_infinity: bool,
    /// Ramified prime; selects the number-field check.
    #[arg(long)]
    pub p: Option<u64>,
    /// Base field size for the fsd family (defaults to --q).
    #[arg(long)]
    pub field: Option<u64>,
    #[arg(long, default_value_t = SearchOptions::default().node_budget)]
    pub budget: u64,
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Emit::Text)]
    pub emit: Emit,
}

#[derive(Args, Debug)]
pub struct PaperTables {
    /// Restrict to function-field (ff) or number-field (nf) rows.
    #[arg(long, value_enum)]
    pub only: Option<Section>,
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct ParseCmd {
    #[arg(long, help = GROUP_HELP)]
    pub group: String,
    #[arg(long)]
    pub json: bool,
}

/// Error carrying the exit code it maps to.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }
}

impl From<SpecError> for Failure {
    fn from(e: SpecError) -> Self {
        Failure::usage(e)
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        let code = match e {
            SearchError::SearchBudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Output sink; tests capture it in memory.
pub struct Io<'a> {
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, io: &mut Io<'_>) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(io.err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    match pool.install(|| dispatch(cli.command)) {
        Ok((code, text)) => {
            if let Err(e) = io.out.write_all(text.as_bytes()) {
                let _ = writeln!(io.err, "error: {e}");
                return 1;
            }
            code
        }
        Err(f) => {
            let _ = writeln!(io.err, "error: {}", f.message);
            f.code
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn load_config(path: &Option<PathBuf>) -> Result<RulesConfig, Failure> {
    match path {
        Some(p) => RulesConfig::from_path(p).map_err(Failure::usage),
        None => Ok(RulesConfig::default()),
    }
}

fn build(text: &str) -> Result<FiniteGroup, Failure> {
    let spec = GroupSpec::parse(text).map_err(SpecError::from)?;
    Ok(spec.build().map_err(SpecError::from)?)
}

fn search_options(budget: u64) -> SearchOptions {
    SearchOptions {
        node_budget: budget,
        ..SearchOptions::default()
    }
}

fn dispatch(cmd: Command) -> Result<(u8, String), Failure> {
    match cmd {
        Command::CheckFf(c) => {
            let g = build(&c.group)?;
            let constraint = FrobeniusConstraint::new(c.ff.q, c.ff.fdeg, c.ff.allow_infinity)?;
            let verdict = search_tuple_with(&g, &constraint, &search_options(c.ff.budget))?;
            let report = FfReport::new(&g, constraint, verdict);
            let text = if c.json {
                to_json(&report)
            } else {
                report.render_text()
            };
            Ok((EXIT_OK, text))
        }
        Command::CheckNf(c) => {
            let cfg = load_config(&c.config)?;
            let g = build(&c.group)?;
            let report = check_number_field(&g, c.p, &cfg).map_err(Failure::usage)?;
            let report = NfReport::new(&g, report);
            let text = if c.json {
                to_json(&report)
            } else {
                report.render_text()
            };
            Ok((EXIT_OK, text))
        }
        Command::Sweep(s) => sweep(s),
        Command::PaperTables(t) => {
            let cfg = load_config(&t.config)?;
            let report =
                TablesReport::new(regression_rows(t.only, &cfg, &SearchOptions::default()));
            let text = if t.json {
                to_json(&report)
            } else {
                report.render_text()
            };
            Ok((
                if report.failed == 0 {
                    EXIT_OK
                } else {
                    EXIT_REGRESSION
                },
                text,
            ))
        }
        Command::Parse(p) => {
            let spec = GroupSpec::parse(&p.group).map_err(SpecError::from)?;
            let g = spec.build().map_err(SpecError::from)?;
            let text = if p.json {
                to_json(&serde_json::json!({
                    "schema": SCHEMA,
                    "command": "parse",
                    "spec": spec.to_string(),
                    "order": g.order(),
                    "degree": g.degree(),
                    "generators": g.generators().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                }))
            } else {
                format!(
                    "{spec}\norder {} on {} points\ngenerators: {}\n",
                    g.order(),
                    g.degree(),
                    g.generators()
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            };
            Ok((EXIT_OK, text))
        }
    }
}

enum Mode {
    Ff(FrobeniusConstraint, SearchOptions),
    Nf(u64, RulesConfig),
}

fn family_members(s: &Sweep) -> Result<Vec<(u64, GroupSpec)>, Failure> {
    let default_min = match s.family {
        Family::Dihedral => 2,
        Family::Symmetric | Family::Alternating => 3,
        Family::Fsd | Family::Cyclic => 1,
    };
    let min = s.min.unwrap_or(default_min);
    if min > s.max {
        return Err(Failure::usage(format!(
            "--min {min} exceeds --max {}",
            s.max
        )));
    }
    let size = |v: u64| usize::try_from(v).map_err(|_| Failure::usage("parameter out of range"));
    let mut out = Vec::new();
    for v in min..=s.max {
        let spec = match s.family {
            Family::Dihedral if v % 2 == 0 && v > 0 => GroupSpec::Dihedral(size(v)?),
            Family::Dihedral => continue,
            Family::Symmetric => GroupSpec::Symmetric(size(v)?),
            Family::Alternating => GroupSpec::Alternating(size(v)?),
            Family::Cyclic => GroupSpec::Cyclic(size(v)?),
            Family::Fsd => {
                let q = s.field.or(s.q).ok_or_else(|| {
                    Failure::usage("the fsd family needs --field or --q for the base field")
                })?;
                let n = u32::try_from(v).map_err(|_| Failure::usage("parameter out of range"))?;
                GroupSpec::FieldSemidirect(q, n)
            }
        };
        out.push((v, spec));
    }
    Ok(out)
}

fn sweep(s: Sweep) -> Result<(u8, String), Failure> {
    let mode = match (s.q, s.fdeg, s.p) {
        (Some(q), Some(d), None) => Mode::Ff(
            FrobeniusConstraint::new(q, d, s.allow_infinity)?,
            search_options(s.budget),
        ),
        (None, None, Some(p)) => Mode::Nf(p, load_config(&s.config)?),
        _ => {
            return Err(Failure::usage(
                "give either --q and --fdeg (function field) or --p (number field)",
            ))
        }
    };
    let members = family_members(&s)?;
    let groups: Vec<(u64, FiniteGroup)> = members
        .into_iter()
        .map(|(v, spec)| {
            let g = spec
                .build()
                .map_err(|e: GroupError| Failure::usage(format!("{spec}: {e}")))?;
            Ok((v, g))
        })
        .collect::<Result<_, Failure>>()?;

    // indexed collect keeps rows in parameter order
    let rows: Vec<Result<(SweepRow, bool), Failure>> = groups
        .par_iter()
        .map(|(v, g)| {
            let start = Instant::now();
            let (verdict, detail, over_budget) = match &mode {
                Mode::Ff(c, opts) => match search_tuple_with(g, c, opts) {
                    Ok(t) => {
                        let verdict = match t.status {
                            TupleStatus::Excluded => "Excluded",
                            TupleStatus::TuplesExist => "TuplesExist",
                        };
                        let detail = format!(
                            "{} class vectors, {} nodes",
                            t.classes_searched, t.nodes_visited
                        );
                        (verdict.to_string(), detail, false)
                    }
                    Err(e @ SearchError::SearchBudgetExceeded { .. }) => {
                        ("BudgetExceeded".to_string(), e.to_string(), true)
                    }
                    Err(e) => return Err(Failure::usage(e)),
                },
                Mode::Nf(p, cfg) => {
                    let r = check_number_field(g, *p, cfg).map_err(Failure::usage)?;
                    let fired: Vec<String> = r.rules_fired().map(|o| o.rule.to_string()).collect();
                    let verdict = match r.verdict {
                        NumberFieldVerdict::Excluded => "Excluded",
                        NumberFieldVerdict::Inconclusive => "Inconclusive",
                    };
                    (verdict.to_string(), fired.join(" "), false)
                }
            };
            Ok((
                SweepRow {
                    parameter: *v,
                    group: g.label(),
                    order: g.order(),
                    verdict,
                    detail,
                    elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
                },
                over_budget,
            ))
        })
        .collect();
    let mut any_over = false;
    let mut table = Vec::new();
    for r in rows {
        let (row, over) = r?;
        any_over |= over;
        table.push(row);
    }
    let report = SweepReport {
        schema: SCHEMA,
        command: "sweep".into(),
        family: format!("{:?}", s.family).to_lowercase(),
        mode: match mode {
            Mode::Ff(c, _) => format!(
                "function field q={} d={}{}",
                c.q,
                c.d,
                if c.allow_infinity {
                    " infinity allowed"
                } else {
                    ""
                }
            ),
            Mode::Nf(p, _) => format!("number field p={p}"),
        },
        rows: table,
    };
    let text = match s.emit {
        Emit::Text => report.render_text(),
        Emit::Json => to_json(&report),
        Emit::Csv => report.render_csv().map_err(Failure::usage)?,
    };
    Ok((if any_over { EXIT_BUDGET } else { EXIT_OK }, text))
}
