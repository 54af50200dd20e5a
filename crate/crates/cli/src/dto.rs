//! Wire formats. Integers travel as decimal strings so that no consumer
//! truncates them; strata are uppercase tags; moves are tagged unions
//! `{"vieta": i}`, `{"dsign": [s, t]}`, `{"perm": [sigma(1), ..., sigma(n)]}`.

use markoff_hurwitz::{
    CheckResult, CompatReport, Component, FamilyDescriptor, FamilyKind, FdSet, Move, NormalPoint,
    OrbitGraph, Params, ReductionResult, SolutionSet, Stratum, VerificationReport,
};
use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An arbitrary-precision integer serialized as a decimal string.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Dec(pub BigInt);

impl Serialize for Dec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Dec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map(Dec).map_err(serde::de::Error::custom)
    }
}

impl From<&BigInt> for Dec {
    fn from(v: &BigInt) -> Self {
        Dec(v.clone())
    }
}

pub type Coords = Vec<Dec>;

pub fn coords(values: &[BigInt]) -> Coords {
    values.iter().map(Dec::from).collect()
}

pub fn to_bigints(c: &[Dec]) -> Vec<BigInt> {
    c.iter().map(|d| d.0.clone()).collect()
}

/// Stratum tag with serde support.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tag(pub Stratum);

impl Serialize for Tag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.0.tag())
    }
}

impl<'de> Deserialize<'de> for Tag {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map(Tag).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum MoveDto {
    #[serde(rename = "vieta")]
    Vieta(usize),
    #[serde(rename = "dsign")]
    DoubleSign([usize; 2]),
    #[serde(rename = "perm")]
    Permute(Vec<usize>),
}

impl From<&Move> for MoveDto {
    fn from(m: &Move) -> Self {
        match m {
            Move::Vieta(i) => MoveDto::Vieta(*i),
            Move::DoubleSign(s, t) => MoveDto::DoubleSign([*s, *t]),
            Move::Permute(sigma) => MoveDto::Permute(sigma.clone()),
        }
    }
}

impl From<&MoveDto> for Move {
    fn from(m: &MoveDto) -> Self {
        match m {
            MoveDto::Vieta(i) => Move::Vieta(*i),
            MoveDto::DoubleSign([s, t]) => Move::DoubleSign(*s, *t),
            MoveDto::Permute(sigma) => Move::Permute(sigma.clone()),
        }
    }
}

pub fn word(moves: &[Move]) -> Vec<MoveDto> {
    moves.iter().map(MoveDto::from).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsDto {
    pub a: Dec,
    pub k: Dec,
    pub n: usize,
}

impl From<&Params> for ParamsDto {
    fn from(p: &Params) -> Self {
        Self {
            a: p.a().into(),
            k: p.k().into(),
            n: p.n(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRow {
    pub coords: Coords,
    pub height: Dec,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub stratum: Option<Tag>,
}

impl PointRow {
    pub fn new(q: &NormalPoint, stratum: Option<Stratum>) -> Self {
        Self {
            coords: coords(q.coords()),
            height: Dec(q.height()),
            stratum: stratum.map(Tag),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDto {
    pub point: Coords,
    pub height: Dec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReduceDoc {
    pub command: String,
    pub params: ParamsDto,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub notice: Option<String>,
    pub input: Coords,
    pub representative: Coords,
    pub stratum: Tag,
    pub word: Vec<MoveDto>,
    pub steps: usize,
    pub initial_height: Dec,
    pub final_height: Dec,
    pub trace: Vec<TraceDto>,
}

impl ReduceDoc {
    pub fn new(
        params: &Params,
        notice: Option<String>,
        input: &[BigInt],
        r: &ReductionResult,
    ) -> Self {
        Self {
            command: "reduce".into(),
            params: params.into(),
            notice,
            input: coords(input),
            representative: coords(r.representative.coords()),
            stratum: Tag(r.stratum),
            word: word(&r.word),
            steps: r.vieta_steps(),
            initial_height: r.initial_height().into(),
            final_height: r.final_height().into(),
            trace: r
                .trace
                .iter()
                .map(|t| TraceDto {
                    point: coords(t.point.coords()),
                    height: (&t.height).into(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivDoc {
    pub command: String,
    pub params: ParamsDto,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub notice: Option<String>,
    pub points: [Coords; 2],
    pub representatives: [Coords; 2],
    pub equivalent: bool,
    /// Carries the first point onto the second; absent when inequivalent.
    pub word: Option<Vec<MoveDto>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveDoc {
    pub command: String,
    pub params: ParamsDto,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub notice: Option<String>,
    pub height_bound: u64,
    pub points: Vec<PointRow>,
}

impl SolveDoc {
    pub fn new(set: &SolutionSet, notice: Option<String>, strata: &[Option<Stratum>]) -> Self {
        Self {
            command: "solve".into(),
            params: (&set.params).into(),
            notice,
            height_bound: set.height_bound,
            points: set
                .points
                .iter()
                .zip(strata)
                .map(|(q, s)| PointRow::new(q, *s))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDto {
    pub kind: String,
    pub pattern: String,
    pub min_parameter: u64,
    /// Members with parameter up to the cap.
    pub members: Vec<Coords>,
}

impl From<&FamilyDescriptor> for FamilyDto {
    fn from(f: &FamilyDescriptor) -> Self {
        Self {
            kind: match f.kind {
                FamilyKind::OnesTwoPair => "ONES_TWO_PAIR".into(),
                FamilyKind::OnesPair => "ONES_PAIR".into(),
            },
            pattern: f.pattern(),
            min_parameter: f.min_parameter(),
            members: f.members.iter().map(|q| coords(q.coords())).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FdDoc {
    pub command: String,
    pub params: ParamsDto,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub notice: Option<String>,
    pub cap: u64,
    pub finite_members: Vec<PointRow>,
    pub infinite_families: Vec<FamilyDto>,
    pub truncated: bool,
}

impl FdDoc {
    pub fn new(set: &FdSet, notice: Option<String>) -> Self {
        Self {
            command: "fd".into(),
            params: (&set.params).into(),
            notice,
            cap: set.cap,
            finite_members: set
                .finite_members
                .iter()
                .map(|(q, s)| PointRow::new(q, Some(*s)))
                .collect(),
            infinite_families: set.infinite_families.iter().map(FamilyDto::from).collect(),
            truncated: set.truncated,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDto {
    pub representative: Coords,
    pub stratum: Tag,
    pub open: bool,
    pub vertices: Vec<usize>,
}

impl From<&Component> for ComponentDto {
    fn from(c: &Component) -> Self {
        Self {
            representative: coords(c.representative.coords()),
            stratum: Tag(c.stratum),
            open: c.open,
            vertices: c.vertices.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDto {
    pub id: usize,
    pub coords: Coords,
    pub height: Dec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDto {
    pub source: usize,
    pub source_index: usize,
    pub target: usize,
    pub target_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrontierDto {
    pub vertex: usize,
    pub index: usize,
    pub neighbour: Coords,
    pub neighbour_height: Dec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub command: String,
    pub params: ParamsDto,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub notice: Option<String>,
    pub height_bound: u64,
    pub vertices: Vec<VertexDto>,
    pub edges: Vec<EdgeDto>,
    pub frontier: Vec<FrontierDto>,
    pub components: Vec<ComponentDto>,
    pub warnings: Vec<String>,
}

impl GraphDoc {
    pub fn new(
        g: &OrbitGraph,
        command: &str,
        notice: Option<String>,
        warnings: Vec<String>,
    ) -> Self {
        Self {
            command: command.into(),
            params: (&g.params).into(),
            notice,
            height_bound: g.height_bound,
            vertices: g
                .vertices
                .iter()
                .enumerate()
                .map(|(id, q)| VertexDto {
                    id,
                    coords: coords(q.coords()),
                    height: Dec(q.height()),
                })
                .collect(),
            edges: g
                .edges
                .iter()
                .map(|e| EdgeDto {
                    source: e.source,
                    source_index: e.source_index,
                    target: e.target,
                    target_index: e.target_index,
                })
                .collect(),
            frontier: g
                .frontier
                .iter()
                .map(|f| FrontierDto {
                    vertex: f.vertex,
                    index: f.index,
                    neighbour: coords(f.neighbour.coords()),
                    neighbour_height: (&f.neighbour_height).into(),
                })
                .collect(),
            components: g.components.iter().map(ComponentDto::from).collect(),
            warnings,
        }
    }
}

/// Orbit partition: components with their member points spelled out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDto {
    pub representative: Coords,
    pub stratum: Tag,
    pub open: bool,
    pub members: Vec<Coords>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitsDoc {
    pub command: String,
    pub params: ParamsDto,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub notice: Option<String>,
    pub height_bound: u64,
    pub orbits: Vec<OrbitDto>,
    pub warnings: Vec<String>,
}

impl OrbitsDoc {
    pub fn new(g: &OrbitGraph, notice: Option<String>, warnings: Vec<String>) -> Self {
        Self {
            command: "orbits".into(),
            params: (&g.params).into(),
            notice,
            height_bound: g.height_bound,
            orbits: g
                .components
                .iter()
                .map(|c| OrbitDto {
                    representative: coords(c.representative.coords()),
                    stratum: Tag(c.stratum),
                    open: c.open,
                    members: c
                        .vertices
                        .iter()
                        .map(|&v| coords(g.vertices[v].coords()))
                        .collect(),
                })
                .collect(),
            warnings,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDto {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub counterexamples: Vec<String>,
}

impl From<&CheckResult> for CheckDto {
    fn from(c: &CheckResult) -> Self {
        Self {
            name: c.name.into(),
            passed: c.passed,
            checked: c.checked,
            counterexamples: c.counterexamples.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatDto {
    pub sample_count: usize,
    pub checks: Vec<CheckDto>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub command: String,
    pub params: ParamsDto,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub notice: Option<String>,
    pub height_bound: u64,
    pub solutions: usize,
    pub components: usize,
    pub fd_members: usize,
    pub checks: Vec<CheckDto>,
    pub compat: CompatDto,
    pub passed: bool,
}

impl VerifyDoc {
    pub fn new(report: &VerificationReport, compat: &CompatReport, notice: Option<String>) -> Self {
        Self {
            command: "verify".into(),
            params: (&report.params).into(),
            notice,
            height_bound: report.height_bound,
            solutions: report.solutions,
            components: report.components,
            fd_members: report.fd_members,
            checks: report.checks.iter().map(CheckDto::from).collect(),
            compat: CompatDto {
                sample_count: compat.sample_count,
                checks: compat.checks.iter().map(CheckDto::from).collect(),
            },
            passed: report.passed() && compat.passed(),
        }
    }
}
