//! Gadget constructions from hypergraph coloring (and from R-role coloring
//! onto an edge with one loop) to k-role coloring, with the explicit
//! coloring maps in both directions.
//!
//! Vertex numbering is fixed so files are reproducible: for hypergraph
//! gadgets the hypergraph vertices `q` come first as `0..|Q|`, the hyperedge
//! vertices follow as `|Q| + s`, and the added vertices are appended: all
//! `b_q` ascending by `q` then all `a_q` (k = 3); one pendant per `s` (k = 4);
//! per `s` its pendant path from the vertex next to `s` outward (k >= 5).
//! The almost-bipartite gadget keeps the original ids and appends `a, b, c`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{
    extract_role_graph, verify_k_role, verify_r_role, Color, RoleColoring, RoleGraph,
};
use crate::graph::{bipartition, BipartiteCheck, Graph};
use crate::hypergraph::{is_proper_coloring, Hypergraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("hypergraph has no hyperedges")]
    EmptyHypergraph,
    #[error("hypergraph is not 3-uniform")]
    NotThreeUniform,
    #[error("pendant-path gadget needs k >= 5, got {0}")]
    KTooSmall(Color),
    #[error("almost-bipartite gadget needs a connected bipartite graph")]
    NotConnectedBipartite,
    #[error("pivot {pivot} out of range for n = {n}")]
    PivotOutOfRange { pivot: usize, n: usize },
    #[error("operation does not apply to a {0} gadget")]
    GadgetMismatch(GadgetKind),
    #[error("source coloring is not valid for this gadget: {0}")]
    InvalidBeta(String),
    #[error("role coloring is not a valid {k}-role coloring of the gadget")]
    InvalidAlpha { k: Color },
    #[error("cannot extract a source coloring: {0}")]
    CannotExtract(String),
    #[error("hypergraph vertex {0} lies in no hyperedge")]
    UncoveredVertex(usize),
    #[error("line {line}: malformed tag")]
    MalformedTag { line: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GadgetKind {
    Incidence,
    K3,
    K4,
    KPath { k: Color },
    AlmostBipartite { pivot: usize },
}

impl GadgetKind {
    /// Number of role colors the gadget is built for.
    pub fn role_colors(&self) -> Option<Color> {
        match *self {
            GadgetKind::Incidence => None,
            GadgetKind::K3 => Some(3),
            GadgetKind::K4 => Some(4),
            GadgetKind::KPath { k } => Some(k),
            GadgetKind::AlmostBipartite { .. } => Some(2),
        }
    }

    /// Number of colors of the source coloring (hypergraph or R-role).
    pub fn source_colors(&self) -> Option<Color> {
        match self {
            GadgetKind::Incidence => None,
            GadgetKind::K3 | GadgetKind::KPath { .. } | GadgetKind::AlmostBipartite { .. } => {
                Some(2)
            }
            GadgetKind::K4 => Some(3),
        }
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GadgetKind::Incidence => write!(f, "incidence"),
            GadgetKind::K3 => write!(f, "k3"),
            GadgetKind::K4 => write!(f, "k4"),
            GadgetKind::KPath { k } => write!(f, "kpath(k={k})"),
            GadgetKind::AlmostBipartite { pivot } => write!(f, "almost(pivot={pivot})"),
        }
    }
}

/// What a gadget vertex stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum VertexRole {
    Q(usize),
    S(usize),
    Bq(usize),
    Aq(usize),
    PendantS(usize),
    /// `p^s_j`, `1 <= j <= k - 3`; `j = k - 3` is adjacent to `s`.
    PathS {
        s: usize,
        j: usize,
    },
    GadgetA,
    GadgetB,
    GadgetC,
    Pivot,
    /// A vertex of the original graph other than the pivot.
    Base(usize),
}

impl fmt::Display for VertexRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexRole::Q(q) => write!(f, "Q({q})"),
            VertexRole::S(s) => write!(f, "S({s})"),
            VertexRole::Bq(q) => write!(f, "Bq({q})"),
            VertexRole::Aq(q) => write!(f, "Aq({q})"),
            VertexRole::PendantS(s) => write!(f, "PendantS({s})"),
            VertexRole::PathS { s, j } => write!(f, "PathS({s},{j})"),
            VertexRole::GadgetA => write!(f, "GadgetA"),
            VertexRole::GadgetB => write!(f, "GadgetB"),
            VertexRole::GadgetC => write!(f, "GadgetC"),
            VertexRole::Pivot => write!(f, "Pivot"),
            VertexRole::Base(v) => write!(f, "Base({v})"),
        }
    }
}

impl FromStr for VertexRole {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        let plain = match s {
            "GadgetA" => Some(VertexRole::GadgetA),
            "GadgetB" => Some(VertexRole::GadgetB),
            "GadgetC" => Some(VertexRole::GadgetC),
            "Pivot" => Some(VertexRole::Pivot),
            _ => None,
        };
        if let Some(r) = plain {
            return Ok(r);
        }
        let (name, rest) = s.split_once('(').ok_or(())?;
        let args = rest.strip_suffix(')').ok_or(())?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse().map_err(|_| ()))
            .collect::<Result<_, _>>()?;
        match (name, &nums[..]) {
            ("Q", &[q]) => Ok(VertexRole::Q(q)),
            ("S", &[s]) => Ok(VertexRole::S(s)),
            ("Bq", &[q]) => Ok(VertexRole::Bq(q)),
            ("Aq", &[q]) => Ok(VertexRole::Aq(q)),
            ("PendantS", &[s]) => Ok(VertexRole::PendantS(s)),
            ("PathS", &[s, j]) => Ok(VertexRole::PathS { s, j }),
            ("Base", &[v]) => Ok(VertexRole::Base(v)),
            _ => Err(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GadgetSource {
    Hypergraph(Hypergraph),
    Graph(Graph),
}

/// A constructed instance together with the role of every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetGraph {
    pub graph: Graph,
    pub roles: Vec<VertexRole>,
    pub kind: GadgetKind,
    pub source: GadgetSource,
}

impl GadgetGraph {
    fn hypergraph(&self) -> Option<&Hypergraph> {
        match &self.source {
            GadgetSource::Hypergraph(h) => Some(h),
            GadgetSource::Graph(_) => None,
        }
    }

    /// Vertices tagged `Q`, in order (`q` itself for hypergraph gadgets).
    pub fn q_vertices(&self) -> Vec<usize> {
        self.vertices_where(|r| matches!(r, VertexRole::Q(_)))
    }

    pub fn s_vertices(&self) -> Vec<usize> {
        self.vertices_where(|r| matches!(r, VertexRole::S(_)))
    }

    pub fn vertices_where(&self, pred: impl Fn(&VertexRole) -> bool) -> Vec<usize> {
        (0..self.roles.len())
            .filter(|&v| pred(&self.roles[v]))
            .collect()
    }

    /// Pendant path of hyperedge `s`, listed `p^s_1, ..., p^s_{k-3}`.
    pub fn pendant_path(&self, s: usize) -> Vec<usize> {
        let mut path: Vec<(usize, usize)> = (0..self.roles.len())
            .filter_map(|v| match self.roles[v] {
                VertexRole::PathS { s: t, j } if t == s => Some((j, v)),
                _ => None,
            })
            .collect();
        path.sort_unstable();
        path.into_iter().map(|(_, v)| v).collect()
    }

    /// The graph format followed by one `# tag <vertex> <role>` line per
    /// vertex.
    pub fn to_text(&self) -> String {
        let mut out = self.graph.to_text();
        for (v, role) in self.roles.iter().enumerate() {
            out.push_str(&format!("# tag {v} {role}\n"));
        }
        out
    }
}

/// Reads the `# tag` lines of a gadget file, in file order.
pub fn parse_tags(text: &str) -> Result<Vec<(usize, VertexRole)>, ReductionError> {
    text.lines()
        .enumerate()
        .filter_map(|(i, l)| l.trim().strip_prefix("# tag ").map(|rest| (i + 1, rest)))
        .map(|(line, rest)| {
            let (v, role) = rest
                .split_once(' ')
                .ok_or(ReductionError::MalformedTag { line })?;
            let v = v
                .parse()
                .map_err(|_| ReductionError::MalformedTag { line })?;
            let role = role
                .trim()
                .parse()
                .map_err(|_| ReductionError::MalformedTag { line })?;
            Ok((v, role))
        })
        .collect()
}

/// The role graph with colors `{1, 2}`, edge `(1, 2)` and a loop on 1.
pub fn edge_with_one_loop() -> RoleGraph {
    RoleGraph::new(2, &[(1, 1), (1, 2)]).unwrap()
}

/// Bipartite incidence graph: `q` is adjacent to `s` iff `q` lies in `s`.
pub fn incidence_graph(h: &Hypergraph) -> Result<GadgetGraph, ReductionError> {
    if h.m() == 0 {
        return Err(ReductionError::EmptyHypergraph);
    }
    let nq = h.n();
    let mut edges = Vec::new();
    for (s, e) in h.edges().iter().enumerate() {
        for &q in e {
            edges.push((q, nq + s));
        }
    }
    let graph = Graph::from_edges(nq + h.m(), &edges).expect("incidence edges are simple");
    let roles = (0..nq)
        .map(VertexRole::Q)
        .chain((0..h.m()).map(VertexRole::S))
        .collect();
    Ok(GadgetGraph {
        graph,
        roles,
        kind: GadgetKind::Incidence,
        source: GadgetSource::Hypergraph(h.clone()),
    })
}

fn uniform_incidence(h: &Hypergraph) -> Result<GadgetGraph, ReductionError> {
    let gg = incidence_graph(h)?;
    if !h.is_uniform(3) {
        return Err(ReductionError::NotThreeUniform);
    }
    Ok(gg)
}

/// Incidence graph plus a path `q - b_q - a_q` hanging from every `q`.
pub fn build_k3_instance(h: &Hypergraph) -> Result<GadgetGraph, ReductionError> {
    let mut gg = uniform_incidence(h)?;
    let nq = h.n();
    let b: Vec<usize> = (0..nq).map(|_| gg.graph.add_vertex()).collect();
    let a: Vec<usize> = (0..nq).map(|_| gg.graph.add_vertex()).collect();
    for q in 0..nq {
        gg.graph.add_edge(q, b[q]);
        gg.graph.add_edge(b[q], a[q]);
    }
    gg.roles.extend((0..nq).map(VertexRole::Bq));
    gg.roles.extend((0..nq).map(VertexRole::Aq));
    gg.kind = GadgetKind::K3;
    Ok(gg)
}

/// Incidence graph plus one pendant vertex on every `s`.
pub fn build_k4_instance(h: &Hypergraph) -> Result<GadgetGraph, ReductionError> {
    let mut gg = incidence_graph(h)?;
    let nq = h.n();
    for s in 0..h.m() {
        let p = gg.graph.add_vertex();
        gg.graph.add_edge(nq + s, p);
        gg.roles.push(VertexRole::PendantS(s));
    }
    gg.kind = GadgetKind::K4;
    Ok(gg)
}

/// Incidence graph plus a pendant path `p^s_1 - ... - p^s_{k-3}` on every
/// `s`, attached through `(p^s_{k-3}, s)`.
pub fn build_kpath_instance(h: &Hypergraph, k: Color) -> Result<GadgetGraph, ReductionError> {
    if k < 5 {
        return Err(ReductionError::KTooSmall(k));
    }
    let mut gg = uniform_incidence(h)?;
    let nq = h.n();
    let len = k as usize - 3;
    for s in 0..h.m() {
        let mut prev = nq + s;
        for j in (1..=len).rev() {
            let p = gg.graph.add_vertex();
            gg.graph.add_edge(prev, p);
            gg.roles.push(VertexRole::PathS { s, j });
            prev = p;
        }
    }
    gg.kind = GadgetKind::KPath { k };
    Ok(gg)
}

/// `g` plus vertices `a, b, c` and edges `(a,b), (a,c), (x,a), (x,b)`.
pub fn build_almost_bipartite(g: &Graph, pivot: usize) -> Result<GadgetGraph, ReductionError> {
    if pivot >= g.n() {
        return Err(ReductionError::PivotOutOfRange { pivot, n: g.n() });
    }
    if !g.is_connected() || matches!(bipartition(g), BipartiteCheck::NotBipartite { .. }) {
        return Err(ReductionError::NotConnectedBipartite);
    }
    let mut graph = g.clone();
    let a = graph.add_vertex();
    let b = graph.add_vertex();
    let c = graph.add_vertex();
    graph.add_edge(a, b);
    graph.add_edge(a, c);
    graph.add_edge(pivot, a);
    graph.add_edge(pivot, b);
    let mut roles: Vec<VertexRole> = (0..g.n())
        .map(|v| {
            if v == pivot {
                VertexRole::Pivot
            } else {
                VertexRole::Base(v)
            }
        })
        .collect();
    roles.extend([
        VertexRole::GadgetA,
        VertexRole::GadgetB,
        VertexRole::GadgetC,
    ]);
    Ok(GadgetGraph {
        graph,
        roles,
        kind: GadgetKind::AlmostBipartite { pivot },
        source: GadgetSource::Graph(g.clone()),
    })
}

fn check_covered(gg: &GadgetGraph) -> Result<(), ReductionError> {
    if let Some(h) = gg.hypergraph() {
        if let Some(q) = uncovered_vertex(h) {
            return Err(ReductionError::UncoveredVertex(q));
        }
    }
    Ok(())
}

/// Smallest hypergraph vertex contained in no hyperedge.
pub fn uncovered_vertex(h: &Hypergraph) -> Option<usize> {
    let mut covered = vec![false; h.n()];
    for e in h.edges() {
        for &q in e {
            covered[q] = true;
        }
    }
    covered.iter().position(|&c| !c)
}

fn check_beta(gg: &GadgetGraph, beta: &RoleColoring) -> Result<(), ReductionError> {
    let want = gg
        .kind
        .source_colors()
        .ok_or(ReductionError::GadgetMismatch(gg.kind))?;
    check_covered(gg)?;
    if beta.k() != want {
        return Err(ReductionError::InvalidBeta(format!(
            "expected {want} colors, got {}",
            beta.k()
        )));
    }
    let ok = match &gg.source {
        GadgetSource::Hypergraph(h) => is_proper_coloring(h, beta, true),
        GadgetSource::Graph(g) => {
            beta.len() == g.n()
                && verify_r_role(g, &edge_with_one_loop(), beta)
                    .map(|v| v.is_valid())
                    .unwrap_or(false)
        }
    };
    if !ok {
        return Err(ReductionError::InvalidBeta(format!("{beta}")));
    }
    Ok(())
}

/// Lifts a source coloring to the gadget's role coloring. Hypergraph
/// gadgets need every vertex to lie in a hyperedge.
///
/// * k = 3: `q -> beta(q)`, `s -> 3`, `b_q -> 3`, `a_q ->` the other of
///   `{1, 2}`.
/// * k = 4: `q -> beta(q)`, `s -> 4`, `p^s ->` the color missing from
///   `beta(N(s))` when two colors appear there, else 1.
/// * k >= 5: `q -> beta(q)`, `s -> 3`, `p^s_{k-3} -> 4`,
///   `p^s_j -> k - j + 1` for `j <= k - 4`.
/// * almost bipartite: `beta` on `g`; then `a -> 1, b, c -> 2` if the pivot
///   has color 1, else `a, b -> 1, c -> 2`.
pub fn lift_coloring(
    gg: &GadgetGraph,
    beta: &RoleColoring,
) -> Result<RoleColoring, ReductionError> {
    check_beta(gg, beta)?;
    let n = gg.graph.n();
    let mut alpha: Vec<Color> = vec![0; n];
    let k = gg.kind.role_colors().expect("checked by check_beta");
    match gg.kind {
        GadgetKind::AlmostBipartite { pivot } => {
            for (v, role) in gg.roles.iter().enumerate() {
                alpha[v] = match role {
                    VertexRole::Base(_) | VertexRole::Pivot => beta.color(v),
                    VertexRole::GadgetA => 1,
                    VertexRole::GadgetB => {
                        if beta.color(pivot) == 1 {
                            2
                        } else {
                            1
                        }
                    }
                    VertexRole::GadgetC => 2,
                    _ => unreachable!(),
                };
            }
        }
        _ => {
            let h = gg.hypergraph().expect("hypergraph gadget");
            for (v, role) in gg.roles.iter().enumerate() {
                alpha[v] = match (*role, gg.kind) {
                    (VertexRole::Q(q), _) => beta.color(q),
                    (VertexRole::S(_), GadgetKind::K4) => 4,
                    (VertexRole::S(_), _) => 3,
                    (VertexRole::Bq(_), _) => 3,
                    (VertexRole::Aq(q), _) => 3 - beta.color(q),
                    (VertexRole::PendantS(s), _) => {
                        let mut seen: Vec<Color> =
                            h.edges()[s].iter().map(|&q| beta.color(q)).collect();
                        seen.sort_unstable();
                        seen.dedup();
                        if seen.len() == 2 {
                            (1..=3).find(|c| !seen.contains(c)).unwrap()
                        } else {
                            1
                        }
                    }
                    (VertexRole::PathS { j, .. }, GadgetKind::KPath { k }) => {
                        if j == k as usize - 3 {
                            4
                        } else {
                            k - j as Color + 1
                        }
                    }
                    (role, kind) => unreachable!("{role} in {kind} gadget"),
                };
            }
        }
    }
    Ok(RoleColoring::from_raw(alpha, k))
}

/// Recovers a source coloring from a valid role coloring of the gadget.
///
/// * k = 3 and k >= 5: `alpha` restricted to `Q`, relabeled to `{1, 2}`.
///   Requires exactly two colors on `Q`.
/// * k = 4: with three colors on `Q`, `alpha` restricted to `Q`; with two,
///   the same after moving one vertex to the third color (the smallest `q`
///   whose color class on `Q` has another member, so that every color stays
///   in use).
/// * almost bipartite: `alpha` restricted to `g`, relabeled so that the
///   looped role is 1, and re-verified against the edge-with-loop role graph.
///
/// Anything else is `CannotExtract`.
pub fn extract_beta(
    gg: &GadgetGraph,
    alpha: &RoleColoring,
) -> Result<RoleColoring, ReductionError> {
    let k = gg
        .kind
        .role_colors()
        .ok_or(ReductionError::GadgetMismatch(gg.kind))?;
    let valid = alpha.k() == k
        && verify_k_role(&gg.graph, alpha)
            .map(|v| v.is_valid())
            .unwrap_or(false);
    if !valid {
        return Err(ReductionError::InvalidAlpha { k });
    }
    check_covered(gg)?;

    if let GadgetSource::Graph(g) = &gg.source {
        let r = extract_role_graph(&gg.graph, alpha);
        let looped = (1..=2)
            .find(|&c| r.has_edge(c, c))
            .ok_or_else(|| ReductionError::CannotExtract("role graph has no loop".to_string()))?;
        let colors = (0..g.n())
            .map(|v| if alpha.color(v) == looped { 1 } else { 2 })
            .collect();
        let beta = RoleColoring::from_raw(colors, 2);
        let ok = verify_r_role(g, &edge_with_one_loop(), &beta)
            .map(|v| v.is_valid())
            .unwrap_or(false);
        if !ok {
            return Err(ReductionError::CannotExtract(format!(
                "restriction {beta} is not an R-role coloring of the base graph"
            )));
        }
        return Ok(beta);
    }

    let h = gg.hypergraph().expect("hypergraph gadget");
    let q_colors: Vec<Color> = gg.q_vertices().iter().map(|&v| alpha.color(v)).collect();
    let restricted = RoleColoring::from_raw(q_colors, k).canonical();
    let used = restricted.k();
    let beta = match (gg.kind, used) {
        (GadgetKind::K3 | GadgetKind::KPath { .. }, 2) => restricted,
        (GadgetKind::K4, 3) => restricted,
        (GadgetKind::K4, 2) => {
            let mut colors = restricted.into_vec();
            let movable = (0..colors.len())
                .find(|&q| (0..colors.len()).any(|p| p != q && colors[p] == colors[q]))
                .ok_or_else(|| ReductionError::CannotExtract("no movable vertex".into()))?;
            colors[movable] = 3;
            RoleColoring::from_raw(colors, 3)
        }
        (kind, used) => {
            return Err(ReductionError::CannotExtract(format!(
                "{used} colors on Q in a {kind} gadget"
            )))
        }
    };
    if !is_proper_coloring(h, &beta, true) {
        return Err(ReductionError::CannotExtract(format!(
            "restriction {beta} has a monochromatic hyperedge"
        )));
    }
    Ok(beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn single() -> Hypergraph {
        Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap()
    }

    fn col(v: &[Color], k: Color) -> RoleColoring {
        RoleColoring::new(v.to_vec(), k).unwrap()
    }

    #[test]
    fn incidence_examples() {
        let gg = incidence_graph(&single()).unwrap();
        assert_eq!(gg.graph, star(3).relabel(&[3, 0, 1, 2]));
        let fano = incidence_graph(&Hypergraph::fano()).unwrap();
        assert_eq!((fano.graph.n(), fano.graph.m()), (14, 21));
        let empty = Hypergraph::new(3, vec![]).unwrap();
        assert_eq!(
            incidence_graph(&empty),
            Err(ReductionError::EmptyHypergraph)
        );
    }

    #[test]
    fn structural_counts() {
        let k3 = build_k3_instance(&single()).unwrap();
        assert_eq!((k3.graph.n(), k3.graph.m()), (10, 9));
        assert_eq!(
            build_k3_instance(&Hypergraph::fano()).unwrap().graph.n(),
            28
        );
        let k4 = build_k4_instance(&single()).unwrap();
        assert_eq!((k4.graph.n(), k4.graph.m()), (5, 4));
        assert_eq!(
            k4.vertices_where(|r| matches!(r, VertexRole::PendantS(_))),
            vec![4]
        );
        let k5 = build_kpath_instance(&single(), 5).unwrap();
        assert_eq!((k5.graph.n(), k5.graph.m()), (6, 5));
        let k6 = build_kpath_instance(&single(), 6).unwrap();
        assert_eq!((k6.graph.n(), k6.graph.m()), (7, 6));
        assert_eq!(
            build_kpath_instance(&single(), 4),
            Err(ReductionError::KTooSmall(4))
        );
        let bad = Hypergraph::new(3, vec![vec![0, 1]]).unwrap();
        assert_eq!(
            build_k3_instance(&bad),
            Err(ReductionError::NotThreeUniform)
        );
    }

    #[test]
    fn almost_bipartite_shape() {
        let gg = build_almost_bipartite(&path(2), 0).unwrap();
        assert_eq!((gg.graph.n(), gg.graph.m()), (5, 5));
        assert!(matches!(
            bipartition(&gg.graph),
            BipartiteCheck::NotBipartite { .. }
        ));
        let b = gg.vertices_where(|r| *r == VertexRole::GadgetB)[0];
        let keep: Vec<usize> = (0..gg.graph.n()).filter(|&v| v != b).collect();
        assert!(matches!(
            bipartition(&gg.graph.induced(&keep)),
            BipartiteCheck::Bipartite(_)
        ));
        assert_eq!(
            build_almost_bipartite(&complete(3), 0),
            Err(ReductionError::NotConnectedBipartite)
        );
        assert_eq!(
            build_almost_bipartite(&path(2), 2),
            Err(ReductionError::PivotOutOfRange { pivot: 2, n: 2 })
        );
    }

    #[test]
    fn k3_lift() {
        let gg = build_k3_instance(&single()).unwrap();
        let alpha = lift_coloring(&gg, &col(&[1, 1, 2], 2)).unwrap();
        // Q, S, b_0..b_2, a_0..a_2
        assert_eq!(alpha.as_slice(), &[1, 1, 2, 3, 3, 3, 3, 2, 2, 1]);
        assert!(verify_k_role(&gg.graph, &alpha).unwrap().is_valid());
        assert_eq!(
            extract_role_graph(&gg.graph, &alpha).edges(),
            vec![(1, 3), (2, 3)]
        );
        assert_eq!(extract_beta(&gg, &alpha).unwrap().as_slice(), &[1, 1, 2]);
    }

    #[test]
    fn k4_lift() {
        let gg = build_k4_instance(&single()).unwrap();
        let alpha = lift_coloring(&gg, &col(&[1, 2, 3], 3)).unwrap();
        assert_eq!(alpha.as_slice(), &[1, 2, 3, 4, 1]);
        assert!(verify_k_role(&gg.graph, &alpha).unwrap().is_valid());
        assert_eq!(extract_beta(&gg, &alpha).unwrap().as_slice(), &[1, 2, 3]);
    }

    #[test]
    fn k4_extraction_with_two_colors_on_q() {
        let gg = build_k4_instance(&single()).unwrap();
        // q0 alone in its class: q1 is the first vertex that can move.
        let alpha = col(&[1, 2, 2, 3, 4], 4);
        assert!(verify_k_role(&gg.graph, &alpha).unwrap().is_valid());
        assert_eq!(extract_beta(&gg, &alpha).unwrap().as_slice(), &[1, 3, 2]);
    }

    #[test]
    fn kpath_lift() {
        let gg = build_kpath_instance(&single(), 5).unwrap();
        let alpha = lift_coloring(&gg, &col(&[1, 1, 2], 2)).unwrap();
        let path = gg.pendant_path(0);
        let along: Vec<Color> = path.iter().map(|&v| alpha.color(v)).collect();
        assert_eq!(along, vec![5, 4]);
        assert!(verify_k_role(&gg.graph, &alpha).unwrap().is_valid());
        assert_eq!(extract_beta(&gg, &alpha).unwrap().as_slice(), &[1, 1, 2]);
    }

    #[test]
    fn lift_rejects_bad_input() {
        let gg = build_k3_instance(&single()).unwrap();
        assert!(matches!(
            lift_coloring(&gg, &col(&[1, 1, 1], 2)),
            Err(ReductionError::InvalidBeta(_))
        ));
        assert!(matches!(
            lift_coloring(&gg, &col(&[1, 2, 3], 3)),
            Err(ReductionError::InvalidBeta(_))
        ));
        let inc = incidence_graph(&single()).unwrap();
        assert_eq!(
            lift_coloring(&inc, &col(&[1, 1, 2], 2)),
            Err(ReductionError::GadgetMismatch(GadgetKind::Incidence))
        );
    }

    #[test]
    fn extract_rejects_invalid_alpha() {
        let gg = build_k3_instance(&single()).unwrap();
        let bogus = RoleColoring::from_raw(vec![1; 10], 3);
        assert_eq!(
            extract_beta(&gg, &bogus),
            Err(ReductionError::InvalidAlpha { k: 3 })
        );
    }

    #[test]
    fn almost_bipartite_lift() {
        let r0 = edge_with_one_loop();
        let not_r0 = col(&[1, 1, 2, 2], 2);
        assert!(!verify_r_role(&cycle(4), &r0, &not_r0).unwrap().is_valid());
        let p = path(4);
        let beta = col(&[2, 1, 1, 2], 2);
        assert!(verify_r_role(&p, &r0, &beta).unwrap().is_valid());
        for pivot in 0..4 {
            let gg = build_almost_bipartite(&p, pivot).unwrap();
            let alpha = lift_coloring(&gg, &beta).unwrap();
            assert!(verify_k_role(&gg.graph, &alpha).unwrap().is_valid());
            assert_eq!(extract_beta(&gg, &alpha).unwrap(), beta);
        }
    }

    #[test]
    fn uncovered_vertices_rejected() {
        let h = Hypergraph::new(4, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(uncovered_vertex(&h), Some(3));
        let gg = build_k4_instance(&h).unwrap();
        assert_eq!(
            lift_coloring(&gg, &col(&[1, 2, 3, 1], 3)),
            Err(ReductionError::UncoveredVertex(3))
        );
    }

    #[test]
    fn tag_round_trip() {
        let gg = build_kpath_instance(&single(), 6).unwrap();
        let text = gg.to_text();
        assert!(text.ends_with("# tag 6 PathS(0,1)\n"));
        let tags = parse_tags(&text).unwrap();
        assert_eq!(tags.len(), gg.roles.len());
        for (v, role) in tags {
            assert_eq!(gg.roles[v], role);
        }
        assert_eq!(Graph::parse(&text).unwrap(), gg.graph);
    }
}
