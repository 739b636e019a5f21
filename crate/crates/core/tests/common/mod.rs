//! Brute-force oracles. Each one re-derives its answer straight from the
//! definitions and shares no code with the library beyond the graph type.
#![allow(dead_code)]

use rolecolor::{Color, Graph, Hypergraph};

fn nbr_colors(g: &Graph, c: &[Color], v: usize) -> Vec<Color> {
    let mut s: Vec<Color> = g.neighbors(v).iter().map(|&u| c[u]).collect();
    s.sort_unstable();
    s.dedup();
    s
}

/// Every map `0..n -> 1..=k`, in odometer order.
pub fn all_maps(n: usize, k: Color) -> impl Iterator<Item = Vec<Color>> {
    let total = (k as u64).checked_pow(n as u32).expect("small instance");
    (0..total).map(move |mut i| {
        (0..n)
            .map(|_| {
                let d = (i % k as u64) as Color + 1;
                i /= k as u64;
                d
            })
            .collect()
    })
}

/// Every set partition of `0..n`, as a block label per vertex starting at 1,
/// built by placing each vertex into an existing block or a new one.
pub fn all_partitions(n: usize) -> Vec<Vec<Color>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in out {
            let blocks = p.iter().copied().max().unwrap_or(0);
            for b in 1..=blocks + 1 {
                let mut q = p.clone();
                q.push(b);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

pub fn k_of(c: &[Color]) -> Color {
    c.iter().copied().max().unwrap_or(0)
}

/// The k-role definition: every color used, and any two vertices of the
/// same color see the same set of colors.
pub fn is_k_role(g: &Graph, c: &[Color], k: Color) -> bool {
    let used: std::collections::BTreeSet<Color> = c.iter().copied().collect();
    if used.len() != k as usize || used.iter().any(|&x| x < 1 || x > k) {
        return false;
    }
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            if c[u] == c[v] && nbr_colors(g, c, u) != nbr_colors(g, c, v) {
                return false;
            }
        }
    }
    true
}

/// Number of k-role partitions of `g` (colorings up to renaming colors).
pub fn k_role_partitions(g: &Graph, k: Color) -> u64 {
    all_partitions(g.n())
        .into_iter()
        .filter(|p| k_of(p) == k && is_k_role(g, p, k))
        .count() as u64
}

/// Same count via all `k^n` maps divided by `k!`.
pub fn k_role_maps_over_factorial(g: &Graph, k: Color) -> u64 {
    let valid = all_maps(g.n(), k).filter(|c| is_k_role(g, c, k)).count() as u64;
    let fact: u64 = (1..=k as u64).product();
    assert_eq!(valid % fact, 0);
    valid / fact
}

/// Role graph as an adjacency matrix over colors `1..=k` (index 0 unused).
pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(k: Color, edges: &[(Color, Color)]) -> Matrix {
    let mut m = vec![vec![false; k as usize + 1]; k as usize + 1];
    for &(a, b) in edges {
        m[a as usize][b as usize] = true;
        m[b as usize][a as usize] = true;
    }
    m
}

/// R-role definition: surjective onto the colors and, for every vertex, the
/// set of neighbor colors equals the role-graph neighborhood of its color.
pub fn is_r_role(g: &Graph, r: &Matrix, c: &[Color]) -> bool {
    let k = r.len() - 1;
    let used: std::collections::BTreeSet<Color> = c.iter().copied().collect();
    if used.len() != k {
        return false;
    }
    (0..g.n()).all(|v| {
        let want: Vec<Color> = (1..=k as Color)
            .filter(|&b| r[c[v] as usize][b as usize])
            .collect();
        nbr_colors(g, c, v) == want
    })
}

pub fn r_role_exists(g: &Graph, r: &Matrix) -> bool {
    let k = (r.len() - 1) as Color;
    all_maps(g.n(), k).any(|c| is_r_role(g, r, &c))
}

/// The edge `(1,2)` with a loop on 1.
pub fn edge_with_loop() -> Matrix {
    matrix(2, &[(1, 1), (1, 2)])
}

/// Proper (no monochromatic hyperedge) colorings with `k` colors.
pub fn hypergraph_colorings(h: &Hypergraph, k: Color, surjective: bool) -> u64 {
    all_maps(h.n(), k)
        .filter(|c| {
            let proper = h.edges().iter().all(|e| e.iter().any(|&v| c[v] != c[e[0]]));
            let onto = !surjective || (1..=k).all(|x| c.contains(&x));
            proper && onto
        })
        .count() as u64
}

/// Looks at every 4-subset for two disjoint edges with no edge between them.
pub fn has_induced_2k2(g: &Graph) -> bool {
    let n = g.n();
    let e = |a, b| g.has_edge(a, b);
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    let induced = [(a, b), (a, c), (a, d), (b, c), (b, d), (c, d)]
                        .iter()
                        .filter(|&&(x, y)| e(x, y))
                        .copied()
                        .collect::<Vec<_>>();
                    if induced.len() != 2 {
                        continue;
                    }
                    let (p, q) = (induced[0], induced[1]);
                    if p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1 {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Two-coloring by trying every side assignment.
pub fn is_bipartite(g: &Graph) -> bool {
    all_maps(g.n(), 2).any(|c| g.edges().all(|(u, v)| c[u] != c[v])) || g.n() == 0
}
