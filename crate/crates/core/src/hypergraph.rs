//! Hypergraphs and their (proper, non-monochromatic) colorings.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::coloring::{Color, RoleColoring};
use crate::graph::parse_numbers;
use crate::solver::{
    check_mode, solve_with, Search, SolveError, SolveMode, SolveResult, SolverConfig,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("missing header line")]
    MissingHeader,
    #[error("line {line}: malformed header, expected \"n m\"")]
    MalformedHeader { line: usize },
    #[error("line {line}: malformed hyperedge, expected \"t v1 ... vt\"")]
    MalformedEdge { line: usize },
    #[error("line {line}: hyperedge declares {declared} vertices but lists {found}")]
    SizeMismatch {
        line: usize,
        declared: usize,
        found: usize,
    },
    #[error("line {line}: empty hyperedge")]
    EmptyEdge { line: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: vertex {vertex} repeated inside a hyperedge")]
    RepeatedVertex { line: usize, vertex: usize },
    #[error("header declares {declared} hyperedges but {found} were given")]
    EdgeCountMismatch { declared: usize, found: usize },
}

/// `n` vertices and a list of nonempty hyperedges, each stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Validates and sorts each hyperedge. Errors report the 1-based edge
    /// index as the line.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        let mut out = Vec::with_capacity(edges.len());
        for (i, mut e) in edges.into_iter().enumerate() {
            let line = i + 1;
            if e.is_empty() {
                return Err(HypergraphError::EmptyEdge { line });
            }
            if let Some(&vertex) = e.iter().find(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange { line, vertex, n });
            }
            e.sort_unstable();
            if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
                return Err(HypergraphError::RepeatedVertex { line, vertex: w[0] });
            }
            out.push(e);
        }
        Ok(Hypergraph { n, edges: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn is_uniform(&self, q: usize) -> bool {
        self.edges.iter().all(|e| e.len() == q)
    }

    /// Connected in the sense that the incidence graph is connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut v: usize) -> usize {
            while p[v] != v {
                p[v] = p[p[v]];
                v = p[v];
            }
            v
        }
        for e in &self.edges {
            for w in e.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a] = b;
            }
        }
        let root = find(&mut parent, 0);
        (0..self.n).all(|v| find(&mut parent, v) == root)
    }

    /// Hypergraph file format: `n m`, then `t v1 ... vt` per hyperedge.
    pub fn parse(text: &str) -> Result<Self, HypergraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(HypergraphError::MissingHeader)?;
        let nums = parse_numbers(header).ok_or(HypergraphError::MalformedHeader { line: hline })?;
        let [n, m] = nums[..] else {
            return Err(HypergraphError::MalformedHeader { line: hline });
        };
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            let nums = parse_numbers(l).ok_or(HypergraphError::MalformedEdge { line })?;
            let Some((&t, rest)) = nums.split_first() else {
                return Err(HypergraphError::MalformedEdge { line });
            };
            if t != rest.len() {
                return Err(HypergraphError::SizeMismatch {
                    line,
                    declared: t,
                    found: rest.len(),
                });
            }
            if t == 0 {
                return Err(HypergraphError::EmptyEdge { line });
            }
            if let Some(&vertex) = rest.iter().find(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange { line, vertex, n });
            }
            let set: BTreeSet<usize> = rest.iter().copied().collect();
            if set.len() != rest.len() {
                let vertex = *rest
                    .iter()
                    .find(|v| rest.iter().filter(|w| w == v).count() > 1)
                    .unwrap();
                return Err(HypergraphError::RepeatedVertex { line, vertex });
            }
            edges.push(rest.to_vec());
        }
        if edges.len() != m {
            return Err(HypergraphError::EdgeCountMismatch {
                declared: m,
                found: edges.len(),
            });
        }
        Hypergraph::new(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for e in &self.edges {
            out.push_str(&e.len().to_string());
            for v in e {
                out.push_str(&format!(" {v}"));
            }
            out.push('\n');
        }
        out
    }

    /// The seven lines of the Fano plane.
    pub fn fano() -> Self {
        let lines = [
            [0, 1, 2],
            [0, 3, 4],
            [0, 5, 6],
            [1, 3, 5],
            [1, 4, 6],
            [2, 3, 6],
            [2, 4, 5],
        ];
        Hypergraph::new(7, lines.iter().map(|l| l.to_vec()).collect()).unwrap()
    }
}

/// No hyperedge is monochromatic, and with `surjective` every color in
/// `1..=beta.k()` is used.
pub fn is_proper_coloring(h: &Hypergraph, beta: &RoleColoring, surjective: bool) -> bool {
    beta.len() == h.n()
        && h.edges()
            .iter()
            .all(|e| e.iter().any(|&v| beta.color(v) != beta.color(e[0])))
        && (!surjective || beta.is_surjective())
}

/// Decides hypergraph `k`-colorability. `surjective` additionally requires
/// every color to be used, which the gadget extractions rely on. Witnesses
/// are the lexicographically smallest colorings; counts are over all
/// labeled colorings.
pub fn hypergraph_k_colorable(
    h: &Hypergraph,
    k: Color,
    mode: SolveMode,
    surjective: bool,
    config: &SolverConfig,
) -> Result<SolveResult, SolveError> {
    if k == 0 {
        return Err(SolveError::ZeroColors);
    }
    check_mode(mode)?;
    solve_with(config, mode, k, || HypergraphSearch::new(h, k, surjective))
}

struct HypergraphSearch<'h> {
    h: &'h Hypergraph,
    k: Color,
    surjective: bool,
    /// Hyperedges indexed by their largest vertex.
    closing: Vec<Vec<usize>>,
    color: Vec<Color>,
    uses: Vec<u32>,
    distinct: Color,
    trail: Vec<usize>,
}

impl<'h> HypergraphSearch<'h> {
    fn new(h: &'h Hypergraph, k: Color, surjective: bool) -> Self {
        let mut closing = vec![Vec::new(); h.n()];
        for (i, e) in h.edges().iter().enumerate() {
            closing[*e.last().unwrap()].push(i);
        }
        HypergraphSearch {
            h,
            k,
            surjective,
            closing,
            color: vec![0; h.n()],
            uses: vec![0; k as usize],
            distinct: 0,
            trail: Vec::new(),
        }
    }
}

impl Search for HypergraphSearch<'_> {
    fn n(&self) -> usize {
        self.h.n()
    }

    fn max_color(&self, _v: usize) -> Color {
        self.k
    }

    fn assign(&mut self, v: usize, c: Color) -> bool {
        self.color[v] = c;
        self.trail.push(v);
        let slot = &mut self.uses[c as usize - 1];
        *slot += 1;
        if *slot == 1 {
            self.distinct += 1;
        }
        if self.surjective && self.h.n() - (v + 1) < (self.k - self.distinct) as usize {
            return false;
        }
        self.closing[v].iter().all(|&i| {
            let e = &self.h.edges()[i];
            e.iter().any(|&w| self.color[w] != c)
        })
    }

    fn mark(&self) -> usize {
        self.trail.len()
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().unwrap();
            let slot = &mut self.uses[self.color[v] as usize - 1];
            *slot -= 1;
            if *slot == 0 {
                self.distinct -= 1;
            }
            self.color[v] = 0;
        }
    }

    fn accept(&self) -> bool {
        !self.surjective || self.distinct == self.k
    }

    fn colors(&self) -> &[Color] {
        &self.color
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single() -> Hypergraph {
        Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap()
    }

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn single_edge_two_colorable() {
        let r = hypergraph_k_colorable(&single(), 2, SolveMode::Witness, true, &cfg()).unwrap();
        assert_eq!(r.certificate.unwrap().as_slice(), &[1, 1, 2]);
    }

    #[test]
    fn one_color_never_suffices() {
        let r = hypergraph_k_colorable(&single(), 1, SolveMode::Decision, false, &cfg()).unwrap();
        assert!(!r.answer);
    }

    #[test]
    fn fano_not_two_colorable() {
        let r = hypergraph_k_colorable(&Hypergraph::fano(), 2, SolveMode::Count, false, &cfg())
            .unwrap();
        assert_eq!(r.count, Some(0));
        assert!(Hypergraph::fano().is_uniform(3));
        assert!(Hypergraph::fano().is_connected());
    }

    #[test]
    fn surjectivity_flag() {
        // 3 colors on a single triple: 3^3 - 3 non-constant maps, of which
        // the 6 bijections use all three colors.
        let all = hypergraph_k_colorable(&single(), 3, SolveMode::Count, false, &cfg()).unwrap();
        let onto = hypergraph_k_colorable(&single(), 3, SolveMode::Count, true, &cfg()).unwrap();
        assert_eq!(all.count, Some(24));
        assert_eq!(onto.count, Some(6));
    }

    #[test]
    fn parse_and_errors() {
        let h = Hypergraph::parse("# h\n4 2\n3 0 1 2\n3 1 2 3\n").unwrap();
        assert_eq!(h.m(), 2);
        assert_eq!(Hypergraph::parse(&h.to_text()).unwrap(), h);
        assert_eq!(
            Hypergraph::parse("3 1\n3 0 1"),
            Err(HypergraphError::SizeMismatch {
                line: 2,
                declared: 3,
                found: 2
            })
        );
        assert_eq!(
            Hypergraph::parse("3 1\n2 0 0"),
            Err(HypergraphError::RepeatedVertex { line: 2, vertex: 0 })
        );
        assert_eq!(
            Hypergraph::parse("3 1\n0"),
            Err(HypergraphError::EmptyEdge { line: 2 })
        );
        assert_eq!(
            Hypergraph::parse("3 2\n1 0"),
            Err(HypergraphError::EdgeCountMismatch {
                declared: 2,
                found: 1
            })
        );
        assert!(matches!(
            Hypergraph::parse("3 1\n1 5"),
            Err(HypergraphError::VertexOutOfRange { vertex: 5, .. })
        ));
    }

    #[test]
    fn proper_coloring_check() {
        let h = single();
        assert!(is_proper_coloring(
            &h,
            &RoleColoring::new(vec![1, 1, 2], 2).unwrap(),
            true
        ));
        assert!(!is_proper_coloring(
            &h,
            &RoleColoring::new(vec![2, 2, 2], 2).unwrap(),
            false
        ));
        assert!(!is_proper_coloring(
            &h,
            &RoleColoring::new(vec![1, 1, 2], 3).unwrap(),
            true
        ));
    }
}
