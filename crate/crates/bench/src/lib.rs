//! Seeded benchmark inputs shared by the benches in `benches/`.

use rolecolor::generate::{
    random_chain_graph, random_connected_bipartite, random_graph, random_three_uniform, rng,
};
use rolecolor::{Graph, Hypergraph};

/// `count` graphs from G(n, p), fixed seed.
pub fn random_graphs(n: usize, p: f64, count: usize) -> Vec<Graph> {
    let mut r = rng(n as u64);
    (0..count).map(|_| random_graph(&mut r, n, p)).collect()
}

/// Connected chain graphs on `n` vertices.
pub fn chain_graphs(n: usize, count: usize) -> Vec<Graph> {
    let mut r = rng(1000 + n as u64);
    (0..count)
        .map(|_| random_chain_graph(&mut r, n, 0))
        .collect()
}

pub fn bipartite_graphs(n: usize, count: usize) -> Vec<Graph> {
    let mut r = rng(2000 + n as u64);
    (0..count)
        .map(|_| random_connected_bipartite(&mut r, n, 0.3))
        .collect()
}

pub fn hypergraphs(nq: usize, ns: usize, count: usize) -> Vec<Hypergraph> {
    let mut r = rng(3000 + (nq * 10 + ns) as u64);
    (0..count)
        .map(|_| random_three_uniform(&mut r, nq, ns))
        .collect()
}
