//! Role colorings, role graphs and their verification.
//!
//! A `k`-role coloring is a surjective map onto `1..=k` in which two vertices
//! of the same color see the same *set* of colors in their neighborhoods. An
//! `R`-role coloring additionally pins that set: every vertex colored `c`
//! must see exactly `N_R(c)`. Colors are 1-based everywhere.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{parse_edge_list, parse_numbers, Graph, GraphError};

pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("vertex {vertex} has color {color}, outside 1..={k}")]
    ColorOutOfRange {
        vertex: usize,
        color: Color,
        k: Color,
    },
    #[error("coloring has {found} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("color count must be positive")]
    ZeroColors,
    #[error("coloring file must contain exactly one line of colors")]
    MalformedColoring,
    #[error("role-connectivity check requires a connected graph")]
    GraphDisconnected,
    #[error(transparent)]
    RoleGraph(#[from] GraphError),
}

/// Total map from vertices to colors in `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RoleColoring {
    colors: Vec<Color>,
    k: Color,
}

impl RoleColoring {
    pub fn new(colors: Vec<Color>, k: Color) -> Result<Self, ColoringError> {
        if k == 0 {
            return Err(ColoringError::ZeroColors);
        }
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(ColoringError::ColorOutOfRange { vertex, color, k });
        }
        Ok(RoleColoring { colors, k })
    }

    /// Uses the largest color present as `k` (1 for an empty coloring).
    pub fn from_colors(colors: Vec<Color>) -> Result<Self, ColoringError> {
        let k = colors.iter().copied().max().unwrap_or(1).max(1);
        RoleColoring::new(colors, k)
    }

    /// Vertex `i` gets color `i + 1`.
    pub fn identity(n: usize) -> Self {
        RoleColoring {
            colors: (1..=n as Color).collect(),
            k: (n as Color).max(1),
        }
    }

    pub(crate) fn from_raw(colors: Vec<Color>, k: Color) -> Self {
        debug_assert!(colors.iter().all(|&c| c >= 1 && c <= k));
        RoleColoring { colors, k }
    }

    pub fn k(&self) -> Color {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.colors
    }

    pub fn into_vec(self) -> Vec<Color> {
        self.colors
    }

    /// Sorted distinct colors in use.
    pub fn image(&self) -> Vec<Color> {
        let mut seen = vec![false; self.k as usize + 1];
        for &c in &self.colors {
            seen[c as usize] = true;
        }
        (1..=self.k).filter(|&c| seen[c as usize]).collect()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.k as usize
    }

    /// Relabels colors by order of first appearance (restricted growth form).
    pub fn canonical(&self) -> RoleColoring {
        let mut map = vec![0; self.k as usize + 1];
        let mut next = 0;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if map[c as usize] == 0 {
                    next += 1;
                    map[c as usize] = next;
                }
                map[c as usize]
            })
            .collect();
        RoleColoring {
            colors,
            k: next.max(1),
        }
    }

    /// Coloring file format: one line of space-separated colors.
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        parts.join(" ")
    }

    /// Reads the coloring file format. With `k = None` the largest color is
    /// taken as the color count.
    pub fn parse(text: &str, k: Option<Color>) -> Result<Self, ColoringError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let line = lines.next().unwrap_or("");
        if lines.next().is_some() {
            return Err(ColoringError::MalformedColoring);
        }
        let colors: Vec<Color> = parse_numbers(line)
            .ok_or(ColoringError::MalformedColoring)?
            .into_iter()
            .map(|c| Color::try_from(c).unwrap_or(Color::MAX))
            .collect();
        match k {
            Some(k) => RoleColoring::new(colors, k),
            None => RoleColoring::from_colors(colors),
        }
    }
}

impl fmt::Display for RoleColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Graph on the colors `1..=colors`; loops allowed. A loop on `c` puts `c`
/// into its own neighborhood and adds one to its degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoleGraph {
    adj: Vec<Vec<Color>>,
}

impl RoleGraph {
    pub fn new(colors: Color, edges: &[(Color, Color)]) -> Result<Self, ColoringError> {
        let mut adj = vec![Vec::new(); colors as usize];
        for &(a, b) in edges {
            for (vertex, c) in [(0, a), (1, b)] {
                if c == 0 || c > colors {
                    return Err(ColoringError::ColorOutOfRange {
                        vertex,
                        color: c,
                        k: colors,
                    });
                }
            }
            adj[a as usize - 1].push(b);
            adj[b as usize - 1].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(RoleGraph { adj })
    }

    pub fn colors(&self) -> Color {
        self.adj.len() as Color
    }

    /// `N_R(c)`, sorted.
    pub fn neighbors(&self, c: Color) -> &[Color] {
        &self.adj[c as usize - 1]
    }

    pub fn degree(&self, c: Color) -> usize {
        self.adj[c as usize - 1].len()
    }

    pub fn has_edge(&self, a: Color, b: Color) -> bool {
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// Edges `(a, b)` with `a <= b` in lexicographic order.
    pub fn edges(&self) -> Vec<(Color, Color)> {
        (1..=self.colors())
            .flat_map(|a| {
                self.neighbors(a)
                    .iter()
                    .filter(move |&&b| b >= a)
                    .map(move |&b| (a, b))
            })
            .collect()
    }

    /// Connectivity over distinct colors; loops play no part.
    pub fn is_connected(&self) -> bool {
        let k = self.adj.len();
        if k == 0 {
            return true;
        }
        let mut seen = vec![false; k];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(c) = stack.pop() {
            for &d in &self.adj[c] {
                let d = d as usize - 1;
                if !seen[d] {
                    seen[d] = true;
                    stack.push(d);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Role-graph file format: the graph format with loops allowed. Vertex
    /// `i` of the file is color `i + 1`.
    pub fn parse(text: &str) -> Result<Self, ColoringError> {
        let (n, lines) = parse_edge_list(text)?;
        let mut seen = std::collections::BTreeMap::new();
        for &(line, u, v) in &lines {
            if let Some(_first) = seen.insert((u.min(v), u.max(v)), line) {
                return Err(GraphError::DuplicateEdge {
                    line,
                    u: u.min(v),
                    v: u.max(v),
                }
                .into());
            }
        }
        let edges: Vec<(Color, Color)> = lines
            .iter()
            .map(|&(_, u, v)| (u as Color + 1, v as Color + 1))
            .collect();
        RoleGraph::new(n as Color, &edges)
    }

    pub fn to_text(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.colors(), edges.len());
        for (a, b) in edges {
            out.push_str(&format!("{} {}\n", a - 1, b - 1));
        }
        out
    }
}

/// Why a coloring fails the definition. Witnesses are the lexicographically
/// first ones under vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Violation {
    NotSurjective {
        missing: Vec<Color>,
    },
    /// `u < v` share a color but see different color sets.
    NeighborhoodMismatch {
        u: usize,
        v: usize,
        colors_u: Vec<Color>,
        colors_v: Vec<Color>,
    },
    /// `vertex` sees `found` instead of `N_R(color)`.
    LocalSurjectivityFailure {
        vertex: usize,
        expected: Vec<Color>,
        found: Vec<Color>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotSurjective { missing } => {
                write!(f, "not surjective: colors {missing:?} unused")
            }
            Violation::NeighborhoodMismatch {
                u,
                v,
                colors_u,
                colors_v,
            } => write!(
                f,
                "neighborhood mismatch: vertices {u} and {v} share a color but see {colors_u:?} and {colors_v:?}"
            ),
            Violation::LocalSurjectivityFailure {
                vertex,
                expected,
                found,
            } => write!(
                f,
                "vertex {vertex} sees {found:?} but its role requires {expected:?}"
            ),
        }
    }
}

impl Violation {
    /// Re-evaluates the witness against the definition; `true` when it is a
    /// genuine counterexample.
    pub fn recheck(&self, g: &Graph, c: &RoleColoring, r: Option<&RoleGraph>) -> bool {
        match self {
            Violation::NotSurjective { missing } => {
                let image = c.image();
                let k = r.map_or(c.k(), RoleGraph::colors);
                !missing.is_empty() && missing.iter().all(|m| *m <= k && !image.contains(m))
            }
            Violation::NeighborhoodMismatch { u, v, .. } => {
                c.color(*u) == c.color(*v)
                    && neighborhood_colors(g, c, *u) != neighborhood_colors(g, c, *v)
            }
            Violation::LocalSurjectivityFailure { vertex, .. } => match r {
                Some(r) => neighborhood_colors(g, c, *vertex) != r.neighbors(c.color(*vertex)),
                None => false,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Violation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Verdict::Valid => None,
            Verdict::Invalid(v) => Some(v),
        }
    }
}

/// Sorted distinct colors on `N(v)`.
pub fn neighborhood_colors(g: &Graph, c: &RoleColoring, v: usize) -> Vec<Color> {
    let mut cols: Vec<Color> = g.neighbors(v).iter().map(|&w| c.color(w)).collect();
    cols.sort_unstable();
    cols.dedup();
    cols
}

/// Flat table of per-vertex neighborhood color bitsets.
struct NeighborhoodSets {
    words: usize,
    bits: Vec<u64>,
}

impl NeighborhoodSets {
    fn build(g: &Graph, c: &RoleColoring) -> Self {
        let words = (c.k() as usize + 64) / 64;
        let mut bits = vec![0u64; words * g.n()];
        for v in 0..g.n() {
            let row = &mut bits[v * words..(v + 1) * words];
            for &w in g.neighbors(v) {
                let col = c.color(w) as usize;
                row[col / 64] |= 1 << (col % 64);
            }
        }
        NeighborhoodSets { words, bits }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }
}

fn check_length(g: &Graph, c: &RoleColoring) -> Result<(), ColoringError> {
    if c.len() != g.n() {
        return Err(ColoringError::LengthMismatch {
            expected: g.n(),
            found: c.len(),
        });
    }
    Ok(())
}

fn missing_colors(c: &RoleColoring, k: Color) -> Vec<Color> {
    let mut seen = vec![false; k as usize + 1];
    for &col in c.as_slice() {
        if col <= k {
            seen[col as usize] = true;
        }
    }
    (1..=k).filter(|&col| !seen[col as usize]).collect()
}

/// Checks the `k`-role definition with `k = c.k()`.
pub fn verify_k_role(g: &Graph, c: &RoleColoring) -> Result<Verdict, ColoringError> {
    check_length(g, c)?;
    let missing = missing_colors(c, c.k());
    if !missing.is_empty() {
        return Ok(Verdict::Invalid(Violation::NotSurjective { missing }));
    }
    let sets = NeighborhoodSets::build(g, c);
    // Representative = first vertex of each color; the earliest mismatching
    // class representative gives the lexicographically first pair.
    let mut rep = vec![usize::MAX; c.k() as usize + 1];
    let mut best: Option<(usize, usize)> = None;
    for v in 0..g.n() {
        let col = c.color(v) as usize;
        let r = rep[col];
        if r == usize::MAX {
            rep[col] = v;
        } else if sets.row(r) != sets.row(v) && best.is_none_or(|(bu, _)| r < bu) {
            best = Some((r, v));
        }
    }
    Ok(match best {
        None => Verdict::Valid,
        Some((u, v)) => Verdict::Invalid(Violation::NeighborhoodMismatch {
            u,
            v,
            colors_u: neighborhood_colors(g, c, u),
            colors_v: neighborhood_colors(g, c, v),
        }),
    })
}

/// The role graph induced by `c`: one edge per pair of colors joined by an
/// edge of `g`, loops included.
pub fn extract_role_graph(g: &Graph, c: &RoleColoring) -> RoleGraph {
    let k = c.k() as usize;
    let mut adj = vec![Vec::new(); k];
    for (u, v) in g.edges() {
        let (a, b) = (c.color(u), c.color(v));
        adj[a as usize - 1].push(b);
        adj[b as usize - 1].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    RoleGraph { adj }
}

/// Checks that `c` is a surjective, locally surjective homomorphism onto `r`.
pub fn verify_r_role(g: &Graph, r: &RoleGraph, c: &RoleColoring) -> Result<Verdict, ColoringError> {
    check_length(g, c)?;
    if let Some((vertex, &color)) = c
        .as_slice()
        .iter()
        .enumerate()
        .find(|(_, &col)| col > r.colors())
    {
        return Err(ColoringError::ColorOutOfRange {
            vertex,
            color,
            k: r.colors(),
        });
    }
    let missing = missing_colors(c, r.colors());
    if !missing.is_empty() {
        return Ok(Verdict::Invalid(Violation::NotSurjective { missing }));
    }
    for u in 0..g.n() {
        let found = neighborhood_colors(g, c, u);
        let expected = r.neighbors(c.color(u));
        if found != expected {
            return Ok(Verdict::Invalid(Violation::LocalSurjectivityFailure {
                vertex: u,
                expected: expected.to_vec(),
                found,
            }));
        }
    }
    Ok(Verdict::Valid)
}

/// Every vertex has degree at least the degree of its role.
pub fn check_degree_bound(g: &Graph, c: &RoleColoring, r: &RoleGraph) -> bool {
    (0..g.n()).all(|u| {
        let col = c.color(u);
        col <= r.colors() && g.degree(u) >= r.degree(col)
    })
}

/// Role graph connectivity. Only meaningful for connected `g`.
pub fn check_role_connectivity(
    g: &Graph,
    _c: &RoleColoring,
    r: &RoleGraph,
) -> Result<bool, ColoringError> {
    if !g.is_connected() {
        return Err(ColoringError::GraphDisconnected);
    }
    Ok(r.is_connected())
}
