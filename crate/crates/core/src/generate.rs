//! Instance generators for tests, benches and the CLI harness: set
//! partitions, non-isomorphic small graphs, random graphs, chain graphs and
//! 3-uniform hypergraphs. All randomness is seeded.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::Color;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every restricted growth string of length `n` with exactly `k` blocks, in
/// lexicographic order, colors 1-based.
pub fn restricted_growth_strings(n: usize, k: usize) -> Vec<Vec<Color>> {
    fn rec(s: &mut Vec<Color>, max: Color, n: usize, k: Color, out: &mut Vec<Vec<Color>>) {
        let left = n - s.len();
        if left == 0 {
            if max == k {
                out.push(s.clone());
            }
            return;
        }
        if (k - max) as usize > left {
            return;
        }
        for c in 1..=(max + 1).min(k) {
            s.push(c);
            rec(s, max.max(c), n, k, out);
            s.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n && (k > 0 || n == 0) {
        rec(&mut Vec::with_capacity(n), 0, n, k as Color, &mut out);
    }
    out
}

/// Largest adjacency code of `g` over all orderings that list vertices by
/// non-increasing degree. Two graphs with at most 11 vertices are isomorphic
/// iff their codes and vertex counts agree.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical_code supports n <= 11");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    // Degree class boundaries: position i may take any vertex of its class.
    let class_of: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let mut best = 0u64;
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];

    fn code(g: &Graph, perm: &[usize]) -> u64 {
        let mut c = 0u64;
        for i in 0..perm.len() {
            for j in (i + 1)..perm.len() {
                c = (c << 1) | g.has_edge(perm[i], perm[j]) as u64;
            }
        }
        c
    }

    fn rec(
        g: &Graph,
        class_of: &[usize],
        perm: &mut Vec<usize>,
        used: &mut [bool],
        best: &mut u64,
    ) {
        let i = perm.len();
        if i == class_of.len() {
            *best = (*best).max(code(g, perm));
            return;
        }
        for v in 0..g.n() {
            if !used[v] && g.degree(v) == class_of[i] {
                used[v] = true;
                perm.push(v);
                rec(g, class_of, perm, used, best);
                perm.pop();
                used[v] = false;
            }
        }
    }

    rec(g, &class_of, &mut perm, &mut used, &mut best);
    best
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// built by adding a vertex to every representative on `n - 1` vertices.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for size in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..(1 << (size - 1)) {
                let mut h = g.clone();
                let v = h.add_vertex();
                for u in 0..v {
                    if mask >> u & 1 == 1 {
                        h.add_edge(u, v);
                    }
                }
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

/// G(n, p).
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("simple")
}

/// A coloring with each vertex uniform in `1..=k`.
pub fn random_colors<R: Rng>(rng: &mut R, n: usize, k: Color) -> Vec<Color> {
    (0..n).map(|_| rng.gen_range(1..=k)).collect()
}

/// A random permutation of `0..n`.
pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// Connected bipartite graph on `n >= 2` vertices: a random side split, a
/// random spanning tree across the sides, and each further cross edge with
/// probability `p`. Vertex ids are shuffled.
pub fn random_connected_bipartite<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    assert!(n >= 2, "need at least two vertices");
    let a = rng.gen_range(1..n);
    let side = |v: usize| v < a;
    let mut edges = HashSet::new();
    edges.insert((0, a));
    let mut placed = [vec![a], vec![0]];
    let mut rest: Vec<usize> = (1..n).filter(|&v| v != a).collect();
    rest.shuffle(rng);
    for v in rest {
        let s = side(v) as usize;
        let u = *placed[1 - s].choose(rng).expect("both sides seeded");
        edges.insert((u.min(v), u.max(v)));
        placed[s].push(v);
    }
    for u in 0..a {
        for v in a..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    let g = Graph::from_edges(n, &edges).expect("simple");
    let perm = random_permutation(rng, n);
    g.relabel(&perm)
}

/// The chain graph with `|X| = degrees.len()`, `|Y| = b`, where X vertex
/// `i` (id `i`) is adjacent to Y vertices `0..degrees[i]` (ids `|X| + j`).
pub fn chain_from_degrees(b: usize, degrees: &[usize]) -> Graph {
    let a = degrees.len();
    let mut edges = Vec::new();
    for (i, &d) in degrees.iter().enumerate() {
        assert!(d <= b);
        for j in 0..d {
            edges.push((i, a + j));
        }
    }
    Graph::from_edges(a + b, &edges).expect("simple")
}

/// Every connected chain graph with exactly `n >= 2` vertices, one per
/// (|X|, |Y|, non-increasing X degree sequence with maximum |Y|). Both
/// orientations of a split are listed, so some graphs appear twice.
pub fn connected_chain_graphs(n: usize) -> Vec<Graph> {
    fn seqs(len: usize, max: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let top = cur.last().copied().unwrap_or(max);
        for d in 1..=top {
            cur.push(d);
            seqs(len, max, out, cur);
            cur.pop();
        }
    }
    let mut graphs = Vec::new();
    for a in 1..n {
        let b = n - a;
        let mut all = Vec::new();
        seqs(a - 1, b, &mut all, &mut Vec::new());
        for rest in all {
            let mut degrees = vec![b];
            degrees.extend(rest);
            graphs.push(chain_from_degrees(b, &degrees));
        }
    }
    graphs
}

/// Random chain graph on `n` vertices: a random connected chain graph on
/// `n - isolated` vertices plus `isolated` isolated vertices, ids shuffled.
pub fn random_chain_graph<R: Rng>(rng: &mut R, n: usize, isolated: usize) -> Graph {
    let core = n - isolated;
    assert!(
        core >= 2,
        "need a connected part with at least two vertices"
    );
    let a = rng.gen_range(1..core);
    let b = core - a;
    let mut degrees: Vec<usize> = (0..a).map(|_| rng.gen_range(1..=b)).collect();
    degrees[0] = b;
    degrees.sort_unstable_by(|x, y| y.cmp(x));
    let mut g = chain_from_degrees(b, &degrees);
    for _ in 0..isolated {
        g.add_vertex();
    }
    let perm = random_permutation(rng, n);
    g.relabel(&perm)
}

/// A random 3-uniform hypergraph on `nq >= 3` vertices with `ns` hyperedges,
/// drawn with repetition allowed.
pub fn random_three_uniform<R: Rng>(rng: &mut R, nq: usize, ns: usize) -> Hypergraph {
    assert!(nq >= 3);
    let edges = (0..ns)
        .map(|_| rand::seq::index::sample(rng, nq, 3).into_vec())
        .collect();
    Hypergraph::new(nq, edges).expect("valid triples")
}

/// Every 3-uniform hypergraph on `nq` labelled vertices with `ns` distinct
/// hyperedges.
pub fn all_three_uniform(nq: usize, ns: usize) -> Vec<Hypergraph> {
    let mut triples = Vec::new();
    for a in 0..nq {
        for b in (a + 1)..nq {
            for c in (b + 1)..nq {
                triples.push(vec![a, b, c]);
            }
        }
    }
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(
        triples: &[Vec<usize>],
        from: usize,
        ns: usize,
        nq: usize,
        pick: &mut Vec<usize>,
        out: &mut Vec<Hypergraph>,
    ) {
        if pick.len() == ns {
            let edges = pick.iter().map(|&i| triples[i].clone()).collect();
            out.push(Hypergraph::new(nq, edges).expect("valid triples"));
            return;
        }
        for i in from..triples.len() {
            pick.push(i);
            rec(triples, i + 1, ns, nq, pick, out);
            pick.pop();
        }
    }
    rec(&triples, 0, ns, nq, &mut pick, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bipartition, is_chain, BipartiteCheck};

    #[test]
    fn rgs_counts_are_stirling_numbers() {
        assert_eq!(restricted_growth_strings(4, 3).len(), 6);
        assert_eq!(restricted_growth_strings(5, 2).len(), 15);
        assert_eq!(restricted_growth_strings(6, 3).len(), 90);
        assert_eq!(restricted_growth_strings(3, 4).len(), 0);
        assert_eq!(restricted_growth_strings(3, 2)[0], vec![1, 1, 2]);
    }

    #[test]
    fn graph_counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=6).map(|n| nonisomorphic_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn canonical_code_is_relabeling_invariant() {
        let mut r = rng(3);
        for _ in 0..50 {
            let g = random_graph(&mut r, 7, 0.4);
            let perm = random_permutation(&mut r, 7);
            assert_eq!(canonical_code(&g), canonical_code(&g.relabel(&perm)));
        }
    }

    #[test]
    fn generated_bipartite_graphs_are_connected_bipartite() {
        let mut r = rng(5);
        for n in 2..=10 {
            for _ in 0..20 {
                let g = random_connected_bipartite(&mut r, n, 0.3);
                assert_eq!(g.n(), n);
                assert!(g.is_connected());
                assert!(matches!(bipartition(&g), BipartiteCheck::Bipartite(_)));
            }
        }
    }

    #[test]
    fn generated_chain_graphs_are_chain() {
        let mut r = rng(9);
        for n in 2..=8 {
            for g in connected_chain_graphs(n) {
                assert!(g.is_connected());
                let BipartiteCheck::Bipartite(bp) = bipartition(&g) else {
                    panic!()
                };
                assert!(is_chain(&g, &bp).is_ok());
            }
        }
        for _ in 0..50 {
            let g = random_chain_graph(&mut r, 12, 2);
            let BipartiteCheck::Bipartite(bp) = bipartition(&g) else {
                panic!()
            };
            assert!(is_chain(&g, &bp).is_ok());
            assert_eq!(g.components().len(), 3);
        }
    }

    #[test]
    fn hypergraph_enumeration() {
        assert_eq!(all_three_uniform(4, 2).len(), 6);
        assert_eq!(all_three_uniform(5, 4).len(), 210);
        let h = random_three_uniform(&mut rng(1), 5, 4);
        assert!(h.is_uniform(3) && h.m() == 4);
    }
}
