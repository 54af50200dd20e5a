use std::ffi::OsString;
use std::path::PathBuf;

use clap::Parser;
use log::info;
use markoff_hurwitz as mh;
use mh::{OrbitGraph, Params, Point, ReduceOptions};
use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::args::{Cli, Command, Common, PointArg};
use crate::dto::{self, EquivDoc, FdDoc, GraphDoc, OrbitsDoc, ReduceDoc, SolveDoc, VerifyDoc};
use crate::render::{render, Report};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] mh::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(mh::Error::NotOnVariety { .. }) => 3,
            CliError::Core(mh::Error::ReductionStuck { .. }) => 4,
            CliError::Core(_) => 2,
        }
    }
}

/// What the binary should do: print `body` to the destination, `diagnostics`
/// to stderr, and exit with `code`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub body: String,
    pub diagnostics: String,
    pub out: Option<PathBuf>,
}

impl Outcome {
    fn failure(code: i32, message: String) -> Self {
        Self {
            code,
            body: String::new(),
            diagnostics: message,
            out: None,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    body: text,
                    diagnostics: String::new(),
                    out: None,
                }
            } else {
                Outcome::failure(code, text)
            };
        }
    };
    let out = cli.command.common().out.clone();
    match execute(&cli.command) {
        Ok((code, report)) => match render(&report, cli.command.common().format) {
            Ok(body) => Outcome {
                code,
                body,
                diagnostics: warnings_of(&report).concat(),
                out,
            },
            Err(e) => Outcome::failure(e.exit_code(), format!("error: {e}\n")),
        },
        Err(e) => Outcome::failure(e.exit_code(), format!("error: {e}\n")),
    }
}

fn warnings_of(report: &Report) -> Vec<String> {
    let (notice, warnings) = match report {
        Report::Reduce(d) => (&d.notice, None),
        Report::Equiv(d) => (&d.notice, None),
        Report::Solve(d) => (&d.notice, None),
        Report::Fd(d) => (&d.notice, None),
        Report::Orbits(d) => (&d.notice, Some(&d.warnings)),
        Report::Graph(d) => (&d.notice, Some(&d.warnings)),
        Report::Verify(d) => (&d.notice, None),
    };
    let mut lines: Vec<String> = notice.iter().map(|n| format!("notice: {n}\n")).collect();
    lines.extend(
        warnings
            .into_iter()
            .flatten()
            .map(|w| format!("warning: {w}\n")),
    );
    lines
}

fn notice(a: &BigInt) -> String {
    format!(
        "a = {a} is negative; mapped (x1, ..., xn; a) to (-x1, ..., xn; -a), results are for a = {}",
        -a
    )
}

/// Validated parameters with the sign of `a` made positive.
fn params(common: &Common) -> Result<(Params, Option<String>), CliError> {
    let given = Params::new(common.a.clone(), common.k.clone(), common.n)?;
    if given.a().is_negative() {
        let flipped = Params::new(-&common.a, common.k.clone(), common.n)?;
        Ok((flipped, Some(notice(&common.a))))
    } else {
        Ok((given, None))
    }
}

/// Validates `point` against the given parameters, then applies the
/// coefficient flip when `a < 0`.
fn point(common: &Common, point: &PointArg) -> Result<(Params, Point, Option<String>), CliError> {
    let given = Params::new(common.a.clone(), common.k.clone(), common.n)?;
    if point.0.len() != common.n {
        return Err(CliError::Usage(format!(
            "point has {} coordinates, expected {}",
            point.0.len(),
            common.n
        )));
    }
    let p = given.point(point.0.iter().cloned())?;
    if given.a().is_negative() {
        let (p, flipped) = mh::negate_a_transform(&p, &given)?;
        Ok((flipped, p, Some(notice(&common.a))))
    } else {
        Ok((given, p, None))
    }
}

fn open_warnings(g: &OrbitGraph) -> Vec<String> {
    g.components
        .iter()
        .filter(|c| c.open)
        .map(|c| {
            format!(
                "component of {} has neighbours above height {}; it may merge with others beyond the bound",
                c.representative, g.height_bound
            )
        })
        .collect()
}

fn execute(command: &Command) -> Result<(i32, Report), CliError> {
    info!("running {}", command.name());
    let workers = command.common().workers;
    match command {
        Command::Reduce {
            common,
            point: arg,
            max_steps,
        } => {
            let (params, p, notice) = point(common, arg)?;
            let opts = ReduceOptions {
                max_steps: *max_steps,
            };
            let r = mh::reduce_with(&p, &params, &opts)?;
            Ok((
                0,
                Report::Reduce(ReduceDoc::new(&params, notice, p.coords(), &r)),
            ))
        }
        Command::Equiv {
            common,
            point: args,
        } => {
            let [first, second] = args.as_slice() else {
                return Err(CliError::Usage(format!(
                    "equiv takes exactly two --point values, got {}",
                    args.len()
                )));
            };
            let (params, p, notice) = point(common, first)?;
            let (_, q, _) = point(common, second)?;
            let rp = mh::reduce(&p, &params)?;
            let rq = mh::reduce(&q, &params)?;
            let word = mh::equivalence_word(&p, &q, &params)?;
            let doc = EquivDoc {
                command: "equiv".into(),
                params: (&params).into(),
                notice,
                points: [dto::coords(p.coords()), dto::coords(q.coords())],
                representatives: [
                    dto::coords(rp.representative.coords()),
                    dto::coords(rq.representative.coords()),
                ],
                equivalent: word.is_some(),
                word: word.as_deref().map(dto::word),
            };
            Ok((0, Report::Equiv(doc)))
        }
        Command::Solve { common, height_max } => {
            let (params, notice) = params(common)?;
            let set = mh::with_workers(workers, || mh::enumerate_solutions(&params, *height_max))?;
            let strata = set
                .points
                .iter()
                .map(|q| mh::stratum_member(q, &params))
                .collect::<Result<Vec<_>, _>>()?;
            Ok((0, Report::Solve(SolveDoc::new(&set, notice, &strata))))
        }
        Command::Fd { common, cap } => {
            let (params, notice) = params(common)?;
            let set = mh::with_workers(workers, || mh::enumerate_fd(&params, *cap))?;
            Ok((0, Report::Fd(FdDoc::new(&set, notice))))
        }
        Command::Orbits { common, height_max } => {
            let (params, notice) = params(common)?;
            let g = mh::with_workers(workers, || mh::orbit_graph(&params, *height_max))?;
            let warnings = open_warnings(&g);
            Ok((0, Report::Orbits(OrbitsDoc::new(&g, notice, warnings))))
        }
        Command::Graph { common, height_max } => {
            let (params, notice) = params(common)?;
            let g = mh::with_workers(workers, || mh::orbit_graph(&params, *height_max))?;
            let warnings = open_warnings(&g);
            Ok((
                0,
                Report::Graph(GraphDoc::new(&g, "graph", notice, warnings)),
            ))
        }
        Command::Verify {
            common,
            height_max,
            samples,
            seed,
        } => {
            let (params, notice) = params(common)?;
            let (report, compat) = mh::with_workers(workers, || {
                let report = mh::verify_fundamental_domain(&params, *height_max)?;
                let compat = mh::markoff_compat_check(*samples, *seed)?;
                Ok::<_, mh::Error>((report, compat))
            })?;
            let doc = VerifyDoc::new(&report, &compat, notice);
            let code = if doc.passed { 0 } else { 1 };
            Ok((code, Report::Verify(doc)))
        }
    }
}
