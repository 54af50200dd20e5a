use std::fmt::Write as _;

use num_traits::Signed;
use serde::Serialize;

use crate::args::Format;
use crate::dto::{
    Coords, EquivDoc, FdDoc, GraphDoc, MoveDto, OrbitsDoc, PointRow, ReduceDoc, SolveDoc, Tag,
    VerifyDoc,
};
use crate::run::CliError;

/// One command's result, ready for any output format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Report {
    Reduce(ReduceDoc),
    Equiv(EquivDoc),
    Solve(SolveDoc),
    Fd(FdDoc),
    Orbits(OrbitsDoc),
    Graph(GraphDoc),
    Verify(VerifyDoc),
}

impl Report {
    fn command(&self) -> &str {
        match self {
            Report::Reduce(d) => &d.command,
            Report::Equiv(d) => &d.command,
            Report::Solve(d) => &d.command,
            Report::Fd(d) => &d.command,
            Report::Orbits(d) => &d.command,
            Report::Graph(d) => &d.command,
            Report::Verify(d) => &d.command,
        }
    }
}

pub fn render(report: &Report, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(json(report)),
        Format::Csv => csv_rows(report).map(|rows| csv(&rows)),
        Format::Dot => match report {
            Report::Graph(g) => Ok(dot(g)),
            other => Err(unsupported(other, "dot")),
        },
        Format::Text => Ok(text(report)),
    }
}

fn unsupported(report: &Report, format: &str) -> CliError {
    CliError::Usage(format!("{} has no {format} output", report.command()))
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

fn json(report: &Report) -> String {
    match report {
        Report::Reduce(d) => to_json(d),
        Report::Equiv(d) => to_json(d),
        Report::Solve(d) => to_json(d),
        Report::Fd(d) => to_json(d),
        Report::Orbits(d) => to_json(d),
        Report::Graph(d) => to_json(d),
        Report::Verify(d) => to_json(d),
    }
}

pub fn tuple(c: &Coords) -> String {
    let parts: Vec<String> = c.iter().map(|d| d.0.to_string()).collect();
    format!("({})", parts.join(","))
}

fn tag(t: &Option<Tag>) -> &'static str {
    t.map_or("", |t| t.0.tag())
}

fn moves(word: &[MoveDto]) -> String {
    let parts: Vec<String> = word
        .iter()
        .map(|m| markoff_hurwitz::Move::from(m).to_string())
        .collect();
    if parts.is_empty() {
        "(empty)".into()
    } else {
        parts.join(" ")
    }
}

fn csv_rows(report: &Report) -> Result<Vec<PointRow>, CliError> {
    Ok(match report {
        Report::Reduce(d) => vec![PointRow {
            coords: d.representative.clone(),
            height: d.final_height.clone(),
            stratum: Some(d.stratum),
        }],
        Report::Solve(d) => d.points.clone(),
        Report::Fd(d) => {
            let mut rows = d.finite_members.clone();
            for f in &d.infinite_families {
                rows.extend(f.members.iter().map(|c| PointRow {
                    coords: c.clone(),
                    height: height(c),
                    stratum: Some(Tag(markoff_hurwitz::Stratum::S2Pos)),
                }));
            }
            rows.sort_by(|x, y| x.coords.cmp(&y.coords));
            rows
        }
        Report::Orbits(d) => d
            .orbits
            .iter()
            .map(|o| PointRow {
                coords: o.representative.clone(),
                height: height(&o.representative),
                stratum: Some(o.stratum),
            })
            .collect(),
        Report::Graph(d) => {
            let mut strata = vec![None; d.vertices.len()];
            for c in &d.components {
                if let Some(v) = d.vertices.iter().find(|v| v.coords == c.representative) {
                    strata[v.id] = Some(c.stratum);
                }
            }
            d.vertices
                .iter()
                .map(|v| PointRow {
                    coords: v.coords.clone(),
                    height: v.height.clone(),
                    stratum: strata[v.id],
                })
                .collect()
        }
        other @ (Report::Equiv(_) | Report::Verify(_)) => return Err(unsupported(other, "csv")),
    })
}

fn height(c: &Coords) -> crate::dto::Dec {
    crate::dto::Dec(c.iter().map(|d| d.0.abs()).sum())
}

fn csv(rows: &[PointRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["coords", "height", "stratum"])
        .expect("writing to memory");
    for r in rows {
        w.write_record([
            tuple(&r.coords),
            r.height.0.to_string(),
            tag(&r.stratum).into(),
        ])
        .expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("csv output is UTF-8")
}

fn dot(g: &GraphDoc) -> String {
    let mut color = vec![0usize; g.vertices.len()];
    for (i, c) in g.components.iter().enumerate() {
        for &v in &c.vertices {
            color[v] = i % 9 + 1;
        }
    }
    let mut s = String::new();
    let _ = writeln!(s, "graph orbits {{");
    let _ = writeln!(
        s,
        "  // a={} k={} n={} height<={}",
        g.params.a.0, g.params.k.0, g.params.n, g.height_bound
    );
    let _ = writeln!(s, "  node [style=filled, colorscheme=set19];");
    for v in &g.vertices {
        let _ = writeln!(
            s,
            "  v{} [label=\"{}\\nh={}\", fillcolor={}];",
            v.id,
            tuple(&v.coords),
            v.height.0,
            color[v.id]
        );
    }
    for e in &g.edges {
        let label = if e.source_index == e.target_index {
            e.source_index.to_string()
        } else {
            format!("{}/{}", e.source_index, e.target_index)
        };
        let _ = writeln!(s, "  v{} -- v{} [label=\"{label}\"];", e.source, e.target);
    }
    s.push_str("}\n");
    s
}

fn text(report: &Report) -> String {
    let mut s = String::new();
    let header = |s: &mut String, p: &crate::dto::ParamsDto, notice: &Option<String>| {
        let _ = writeln!(s, "a = {}, k = {}, n = {}", p.a.0, p.k.0, p.n);
        if let Some(n) = notice {
            let _ = writeln!(s, "notice: {n}");
        }
    };
    match report {
        Report::Reduce(d) => {
            header(&mut s, &d.params, &d.notice);
            let _ = writeln!(s, "input          {}", tuple(&d.input));
            let _ = writeln!(
                s,
                "representative {} {}",
                tuple(&d.representative),
                d.stratum.0
            );
            let _ = writeln!(s, "steps          {}", d.steps);
            let _ = writeln!(
                s,
                "height         {} -> {}",
                d.initial_height.0, d.final_height.0
            );
            let _ = writeln!(s, "word           {}", moves(&d.word));
        }
        Report::Equiv(d) => {
            let _ = writeln!(s, "{}", d.equivalent);
            if let Some(w) = &d.word {
                let _ = writeln!(s, "{}", moves(w));
            }
        }
        Report::Solve(d) => {
            header(&mut s, &d.params, &d.notice);
            let _ = writeln!(
                s,
                "{} points with height <= {}",
                d.points.len(),
                d.height_bound
            );
            for p in &d.points {
                let _ = writeln!(
                    s,
                    "{} h={} {}",
                    tuple(&p.coords),
                    p.height.0,
                    tag(&p.stratum)
                );
            }
        }
        Report::Fd(d) => {
            header(&mut s, &d.params, &d.notice);
            let _ = writeln!(
                s,
                "{} finite members (cap {})",
                d.finite_members.len(),
                d.cap
            );
            for p in &d.finite_members {
                let _ = writeln!(s, "{} {}", tuple(&p.coords), tag(&p.stratum));
            }
            for f in &d.infinite_families {
                let _ = writeln!(s, "family {}", f.pattern);
            }
            if d.truncated {
                let _ = writeln!(s, "truncated at the cap");
            }
        }
        Report::Orbits(d) => {
            header(&mut s, &d.params, &d.notice);
            for o in &d.orbits {
                let members: Vec<String> = o.members.iter().map(tuple).collect();
                let open = if o.open { " open" } else { "" };
                let _ = writeln!(
                    s,
                    "{} {}{}: {}",
                    tuple(&o.representative),
                    o.stratum.0,
                    open,
                    members.join(" ")
                );
            }
        }
        Report::Graph(d) => {
            header(&mut s, &d.params, &d.notice);
            let _ = writeln!(
                s,
                "{} vertices, {} edges, {} components, {} frontier markers",
                d.vertices.len(),
                d.edges.len(),
                d.components.len(),
                d.frontier.len()
            );
            for e in &d.edges {
                let _ = writeln!(
                    s,
                    "{} -[{}/{}]- {}",
                    tuple(&d.vertices[e.source].coords),
                    e.source_index,
                    e.target_index,
                    tuple(&d.vertices[e.target].coords)
                );
            }
        }
        Report::Verify(d) => {
            header(&mut s, &d.params, &d.notice);
            for c in d.checks.iter().chain(&d.compat.checks) {
                let verdict = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "{verdict} {} ({} checked)", c.name, c.checked);
                for x in &c.counterexamples {
                    let _ = writeln!(s, "  {x}");
                }
            }
            let _ = writeln!(
                s,
                "{}",
                if d.passed {
                    "all checks passed"
                } else {
                    "FAILED"
                }
            );
        }
    }
    s
}
