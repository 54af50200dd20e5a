//! Bounded orbit graphs.
//!
//! Vertices are the normal points of height at most the bound. Vieta indices
//! at a vertex are grouped by absolute value of the coordinate: indices with
//! equal `|x_i|` are exchanged by a sign/permutation symmetry fixing the
//! vertex, so they lead to the same neighbour class. Each class is labelled by
//! its largest index. An edge joins the half-edge `(u, i)` to the half-edge
//! `(v, j)` that undoes it; exact Vieta fixed points are not edges.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::enumeration::solutions::enumerate_solutions;
use crate::error::Result;
use crate::moves::Move;
use crate::normal::{normalize_coords, NormalPoint};
use crate::reduction::reduce;
use crate::stratum::Stratum;
use crate::variety::Params;

/// Undirected edge between vertex slots, with the Vieta index used at each end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub source: usize,
    pub source_index: usize,
    pub target: usize,
    pub target_index: usize,
}

/// A Vieta neighbour above the height bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontierMarker {
    pub vertex: usize,
    pub index: usize,
    pub neighbour: NormalPoint,
    pub neighbour_height: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Vertex slots, ascending.
    pub vertices: Vec<usize>,
    /// Reduction of the component's smallest vertex.
    pub representative: NormalPoint,
    pub stratum: Stratum,
    /// Some vertex has a neighbour beyond the bound, so the full orbit may
    /// join this component to others.
    pub open: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitGraph {
    pub params: Params,
    pub height_bound: u64,
    pub vertices: Vec<NormalPoint>,
    pub edges: Vec<Edge>,
    pub frontier: Vec<FrontierMarker>,
    pub components: Vec<Component>,
}

impl OrbitGraph {
    pub fn vertex_index(&self, q: &NormalPoint) -> Option<usize> {
        self.vertices.binary_search(q).ok()
    }

    /// Component slot of every vertex.
    pub fn component_of(&self) -> Vec<usize> {
        let mut of = vec![0; self.vertices.len()];
        for (c, comp) in self.components.iter().enumerate() {
            for &v in &comp.vertices {
                of[v] = c;
            }
        }
        of
    }
}

/// Largest index (1-based) whose coordinate has the same absolute value as slot `i`.
fn index_class(coords: &[BigInt], i: usize) -> usize {
    let magnitude = coords[i - 1].magnitude();
    let mut j = i;
    while j < coords.len() && coords[j].magnitude() == magnitude {
        j += 1;
    }
    j
}

enum HalfEdge {
    Inner(Edge),
    Frontier(FrontierMarker),
}

fn half_edges(
    params: &Params,
    vertices: &[NormalPoint],
    u: usize,
    bound: &BigInt,
) -> Vec<HalfEdge> {
    let coords = vertices[u].coords();
    let n = coords.len();
    let mut out = Vec::new();
    for i in (1..=n).filter(|&i| index_class(coords, i) == i) {
        let mut image = coords.to_vec();
        Move::Vieta(i).apply_unchecked(params.a(), &mut image);
        if image == coords {
            continue;
        }
        let normalized = normalize_coords(image);
        let j = index_class(&normalized.coords, normalized.position[i - 1] + 1);
        let neighbour = NormalPoint::trusted(normalized.coords);
        let height = neighbour.height();
        if &height > bound {
            out.push(HalfEdge::Frontier(FrontierMarker {
                vertex: u,
                index: i,
                neighbour,
                neighbour_height: height,
            }));
            continue;
        }
        let v = vertices
            .binary_search(&neighbour)
            .expect("bounded neighbour missing from the solution set");
        // orient so both ends produce the same key
        let edge = if (u, i) <= (v, j) {
            Edge {
                source: u,
                source_index: i,
                target: v,
                target_index: j,
            }
        } else {
            Edge {
                source: v,
                source_index: j,
                target: u,
                target_index: i,
            }
        };
        out.push(HalfEdge::Inner(edge));
    }
    out
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub fn orbit_graph(params: &Params, height_bound: u64) -> Result<OrbitGraph> {
    let vertices = enumerate_solutions(params, height_bound)?.points;
    let bound = BigInt::from(height_bound);
    let halves: Vec<Vec<HalfEdge>> = (0..vertices.len())
        .into_par_iter()
        .map(|u| half_edges(params, &vertices, u, &bound))
        .collect();

    let mut edges = BTreeSet::new();
    let mut frontier = Vec::new();
    for half in halves.into_iter().flatten() {
        match half {
            HalfEdge::Inner(e) => {
                edges.insert(e);
            }
            HalfEdge::Frontier(f) => frontier.push(f),
        }
    }

    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    for e in &edges {
        let (ra, rb) = (find(&mut parent, e.source), find(&mut parent, e.target));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..vertices.len() {
        let root = find(&mut parent, v);
        groups.entry(root).or_default().push(v);
    }
    let open_vertices: BTreeSet<usize> = frontier.iter().map(|f| f.vertex).collect();

    let groups: Vec<Vec<usize>> = groups.into_values().collect();
    let components = groups
        .into_par_iter()
        .map(|members| {
            let reduced = reduce(&vertices[members[0]].to_point(), params)?;
            Ok(Component {
                open: members.iter().any(|v| open_vertices.contains(v)),
                vertices: members,
                representative: reduced.representative,
                stratum: reduced.stratum,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(OrbitGraph {
        params: params.clone(),
        height_bound,
        vertices,
        edges: edges.into_iter().collect(),
        frontier,
        components,
    })
}
