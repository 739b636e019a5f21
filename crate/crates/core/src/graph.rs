//! Simple undirected graphs over `0..n`, the text format, and the structural
//! recognizers used by the rest of the crate (connectivity, bipartiteness,
//! the chain property and the universal/pendant bookkeeping on top of it).

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// Errors raised while reading a graph file or building a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: malformed header, expected \"n m\"")]
    MalformedHeader { line: usize },
    #[error("line {line}: malformed edge line, expected \"u v\"")]
    MalformedEdge { line: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: header declares {declared} edges but {found} were given")]
    EdgeCountMismatch {
        line: usize,
        declared: usize,
        found: usize,
    },
    #[error("missing header line")]
    MissingHeader,
}

/// A simple undirected graph. Vertex ids are `0..n`; adjacency lists are
/// kept sorted so iteration order is deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Self-loops, duplicates and
    /// out-of-range endpoints are rejected; the reported line is the 1-based
    /// index into `edges`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let lined: Vec<_> = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (i + 1, u, v))
            .collect();
        Graph::build(n, &lined)
    }

    /// Bulk construction from `(line, u, v)` triples: push, then sort each
    /// list. Duplicates are reported at the later of the two lines.
    fn build(n: usize, edges: &[(usize, usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut keyed = Vec::with_capacity(edges.len());
        for &(line, u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { line, vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { line, vertex: u });
            }
            keyed.push((u.min(v), u.max(v), line));
        }
        keyed.sort_unstable();
        if let Some(w) = keyed
            .windows(2)
            .filter(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1))
            .min_by_key(|w| w[1].2)
        {
            return Err(GraphError::DuplicateEdge {
                line: w[1].2,
                u: w[1].0,
                v: w[1].1,
            });
        }
        for &(u, v, _) in &keyed {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            adj,
            m: keyed.len(),
        })
    }

    pub(crate) fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange {
                    line: 0,
                    vertex: w,
                    n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { line: 0, vertex: u });
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(GraphError::DuplicateEdge {
                line: 0,
                u: u.min(v),
                v: u.max(v),
            }),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.m += 1;
                Ok(())
            }
        }
    }

    /// Adds a fresh isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Adds edge `{u, v}`; panics on invalid input, which only happens on
    /// programmer error inside the gadget builders.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge in builder");
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    /// Induced subgraph on `keep` (in the given order); vertex `keep[i]`
    /// becomes `i`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.n(), &edges).expect("relabel needs a permutation")
    }

    /// Parses the graph text format.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let (n, edges) = parse_edge_list(text)?;
        Graph::build(n, &edges)
    }

    /// Serializes in the graph text format, edges in lexicographic order.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// At most one connected component; the empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

pub(crate) type LineEdge = (usize, usize, usize);

/// Shared reader for the graph and role-graph formats. Range and count
/// checks are done here; loop and duplicate policy is left to the caller.
/// Edges come back as `(line, u, v)`.
pub(crate) fn parse_edge_list(text: &str) -> Result<(usize, Vec<LineEdge>), GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(GraphError::MissingHeader)?;
    let nums = parse_numbers(header).ok_or(GraphError::MalformedHeader { line: hline })?;
    let [n, declared] = nums[..] else {
        return Err(GraphError::MalformedHeader { line: hline });
    };

    let mut items = Vec::with_capacity(declared);
    let mut last = hline;
    for (line, l) in lines {
        last = line;
        let nums = parse_numbers(l).ok_or(GraphError::MalformedEdge { line })?;
        let [u, v] = nums[..] else {
            return Err(GraphError::MalformedEdge { line });
        };
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { line, vertex: w, n });
            }
        }
        items.push((line, u, v));
    }
    if items.len() != declared {
        return Err(GraphError::EdgeCountMismatch {
            line: last,
            declared,
            found: items.len(),
        });
    }
    Ok((n, items))
}

pub(crate) fn parse_numbers(line: &str) -> Option<Vec<usize>> {
    line.split_whitespace().map(|t| t.parse().ok()).collect()
}

/// A two-coloring of the vertices with every edge crossing between the parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub part_x: Vec<usize>,
    pub part_y: Vec<usize>,
}

impl Bipartition {
    /// The same bipartition with the roles of the parts exchanged.
    pub fn swapped(&self) -> Bipartition {
        Bipartition {
            part_x: self.part_y.clone(),
            part_y: self.part_x.clone(),
        }
    }

    /// `side[v]` is `false` for X and `true` for Y.
    pub fn sides(&self, n: usize) -> Vec<bool> {
        let mut side = vec![false; n];
        for &y in &self.part_y {
            side[y] = true;
        }
        side
    }
}

/// Result of [`bipartition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BipartiteCheck {
    Bipartite(Bipartition),
    /// An odd closed walk `w[0], w[1], ..., w[len-1], w[0]`.
    NotBipartite {
        odd_cycle: Vec<usize>,
    },
}

/// BFS two-coloring. Each component's BFS root is its smallest vertex and
/// the root's side goes to X.
pub fn bipartition(g: &Graph) -> BipartiteCheck {
    bipartition_counted(g, &mut ProbeCount::default()).0
}

/// [`bipartition`] plus the number of components, counting adjacency reads.
pub(crate) fn bipartition_counted(g: &Graph, probes: &mut ProbeCount) -> (BipartiteCheck, usize) {
    let n = g.n();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut components = 0;
    for root in 0..n {
        probes.0 += 1;
        if side[root].is_some() {
            continue;
        }
        components += 1;
        side[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &w in g.neighbors(u) {
                probes.0 += 1;
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        parent[w] = u;
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => {
                        let cycle = odd_cycle(&parent, u, w);
                        return (
                            BipartiteCheck::NotBipartite { odd_cycle: cycle },
                            components,
                        );
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let (mut part_x, mut part_y) = (Vec::new(), Vec::new());
    for (v, s) in side.into_iter().enumerate() {
        if s == Some(true) {
            part_y.push(v);
        } else {
            part_x.push(v);
        }
    }
    (
        BipartiteCheck::Bipartite(Bipartition { part_x, part_y }),
        components,
    )
}

/// Joins the BFS-tree paths from `u` and `w` (same side, adjacent) at their
/// lowest common ancestor.
fn odd_cycle(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let path_to_root = |mut v: usize| {
        let mut p = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            p.push(v);
        }
        p
    };
    let pu = path_to_root(u);
    let pw = path_to_root(w);
    let anc: BTreeSet<usize> = pu.iter().copied().collect();
    let lca_w = pw.iter().position(|v| anc.contains(v)).unwrap();
    let lca = pw[lca_w];
    let lca_u = pu.iter().position(|&v| v == lca).unwrap();
    let mut cycle: Vec<usize> = pu[..=lca_u].to_vec();
    cycle.extend(pw[..lca_w].iter().rev());
    cycle
}

/// Induced `2K2` witness: edges `(u, w)`, `(v, z)`, non-edges `(u, z)`,
/// `(v, w)`, with `u, v` in X and `w, z` in Y.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness2K2 {
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub z: usize,
}

impl Witness2K2 {
    /// Re-checks the four adjacencies directly.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let Witness2K2 { u, v, w, z } = *self;
        let distinct = BTreeSet::from([u, v, w, z]).len() == 4;
        distinct
            && g.has_edge(u, w)
            && g.has_edge(v, z)
            && !g.has_edge(u, z)
            && !g.has_edge(v, w)
            && !g.has_edge(u, v)
            && !g.has_edge(w, z)
    }
}

/// Counts adjacency-list reads so recognition cost can be asserted.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct ProbeCount(pub u64);

/// Checks that the X-side neighborhoods are nested under inclusion. X is
/// sorted by degree and each neighborhood is tested against its successor.
pub fn is_chain(g: &Graph, bp: &Bipartition) -> Result<(), Witness2K2> {
    is_chain_counted(g, bp, &mut ProbeCount::default())
}

pub(crate) fn is_chain_counted(
    g: &Graph,
    bp: &Bipartition,
    probes: &mut ProbeCount,
) -> Result<(), Witness2K2> {
    let order = sort_by_degree(g, &bp.part_x);
    let mut mark = vec![usize::MAX; g.n()];
    for pair in order.windows(2) {
        let (u, v) = (pair[0], pair[1]);
        for &z in g.neighbors(v) {
            mark[z] = v;
        }
        probes.0 += g.degree(v) as u64;
        for &w in g.neighbors(u) {
            probes.0 += 1;
            if mark[w] != v {
                let z = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .find(|&z| !g.has_edge(u, z))
                    .expect("larger neighborhood must have a private vertex");
                return Err(Witness2K2 { u, v, w, z });
            }
        }
    }
    Ok(())
}

/// Stable counting sort by degree.
fn sort_by_degree(g: &Graph, vs: &[usize]) -> Vec<usize> {
    let max = vs.iter().map(|&v| g.degree(v)).max().unwrap_or(0);
    let mut buckets = vec![Vec::new(); max + 1];
    for &v in vs {
        buckets[g.degree(v)].push(v);
    }
    buckets.into_iter().flatten().collect()
}

/// Universal, pendant and degree-two sets of a chain graph with respect to a
/// fixed bipartition. "Universal" means adjacent to every vertex of the
/// opposite part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStructure {
    pub bipartition: Bipartition,
    pub universal_x: Vec<usize>,
    pub universal_y: Vec<usize>,
    pub pendant_x: Vec<usize>,
    pub pendant_y: Vec<usize>,
    /// Degree-two vertices of Y; only filled when `|X| = 2`.
    pub degree_two_y: Vec<usize>,
}

impl ChainStructure {
    pub fn x(&self) -> &[usize] {
        &self.bipartition.part_x
    }

    pub fn y(&self) -> &[usize] {
        &self.bipartition.part_y
    }

    /// The structure seen from the other side.
    pub fn swapped(&self, g: &Graph) -> ChainStructure {
        chain_structure(g, &self.bipartition.swapped())
    }
}

pub fn chain_structure(g: &Graph, bp: &Bipartition) -> ChainStructure {
    chain_structure_counted(g, bp, &mut ProbeCount::default())
}

pub(crate) fn chain_structure_counted(
    g: &Graph,
    bp: &Bipartition,
    probes: &mut ProbeCount,
) -> ChainStructure {
    let (nx, ny) = (bp.part_x.len(), bp.part_y.len());
    let mut deg = |v: usize| {
        probes.0 += 1;
        g.degree(v)
    };
    let mut universal_x = Vec::new();
    let mut pendant_x = Vec::new();
    for &x in &bp.part_x {
        let d = deg(x);
        if d == ny {
            universal_x.push(x);
        }
        if d == 1 {
            pendant_x.push(x);
        }
    }
    let mut universal_y = Vec::new();
    let mut pendant_y = Vec::new();
    let mut degree_two_y = Vec::new();
    for &y in &bp.part_y {
        let d = deg(y);
        if d == nx {
            universal_y.push(y);
        }
        if d == 1 {
            pendant_y.push(y);
        }
        if nx == 2 && d == 2 {
            degree_two_y.push(y);
        }
    }
    ChainStructure {
        bipartition: bp.clone(),
        universal_x,
        universal_y,
        pendant_x,
        pendant_y,
        degree_two_y,
    }
}

/// Named small graphs used throughout tests and examples.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// `K_{a,b}` with the `a` side first.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Graph {
        complete_bipartite(1, leaves)
    }

    /// Two disjoint edges `{0,1}`, `{2,3}`.
    pub fn two_k2() -> Graph {
        Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()
    }
}
