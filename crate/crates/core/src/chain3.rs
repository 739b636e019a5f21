//! Polynomial 3-role decision for bipartite chain graphs.
//!
//! A chain graph on at least three vertices is 3-role colorable exactly when
//! one of five structural conditions holds:
//!
//! 1. it is disconnected;
//! 2. one side has a single vertex;
//! 3. one side has two vertices, both universal;
//! 4. one side has two vertices, the other more than two of which at least
//!    two are not pendants;
//! 5. both sides have at least three vertices.
//!
//! Each yes-case comes with an explicit coloring. Certificates are always
//! re-verified; a failed certificate falls back to exact search and is
//! flagged on the decision.

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{verify_k_role, Color, RoleColoring, Verdict, Violation};
use crate::generate::restricted_growth_strings;
use crate::graph::{
    bipartition_counted, chain_structure_counted, is_chain_counted, BipartiteCheck, ChainStructure,
    Graph, ProbeCount, Witness2K2,
};
use crate::solver::{solve_k_role, SolveError, SolveMode, SolverConfig};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Chain3Error {
    #[error("graph is not bipartite (odd closed walk {odd_cycle:?})")]
    NotBipartite { odd_cycle: Vec<usize> },
    #[error("graph is not a chain graph (induced 2K2 on edges ({}, {}) and ({}, {}))", .0.u, .0.w, .0.v, .0.z)]
    NotChain(Witness2K2),
    #[error("condition for case {case:?} / {sub_case:?} does not hold")]
    ConditionNotSatisfied { case: ChainCase, sub_case: SubCase },
    #[error("constructed certificate failed and the exact fallback did not finish: {0}")]
    InternalCertificateFailure(SolveError),
    #[error("graph is not isomorphic to P4")]
    NotP4,
}

/// Which of the five conditions matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ChainCase {
    Disconnected,
    SingletonSide,
    TwoUniversal,
    TwoSideWithTail,
    BothSidesLarge,
    None,
}

/// The construction used within a case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SubCase {
    Edgeless,
    OneEdgedComponent,
    Star,
    BothUniversal,
    /// `|X| = 2` without pendants in Y.
    TailNoPendants,
    /// `|X| = 2` with pendants in Y.
    TailPendantsY,
    LargeNoPendants,
    LargePendantsX,
    LargePendantsY,
    /// Pendants on both sides and some edge avoids both universal vertices.
    LargePendantsBothCore,
    /// Pendants on both sides and every edge meets a universal vertex.
    LargePendantsBothDoubleStar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainDecision {
    pub answer: bool,
    pub case: ChainCase,
    pub sub_case: Option<SubCase>,
    /// The matched condition was read with X and Y exchanged.
    pub swapped: bool,
    pub certificate: Option<RoleColoring>,
    /// The case coloring failed verification and exact search decided.
    pub fallback: bool,
    /// Adjacency reads spent on recognition and the condition checks.
    pub probes: u64,
}

/// Decides 3-role colorability of a bipartite chain graph.
pub fn decide_chain3(g: &Graph) -> Result<ChainDecision, Chain3Error> {
    let mut probes = ProbeCount::default();
    let (check, components) = bipartition_counted(g, &mut probes);
    let bp = match check {
        BipartiteCheck::Bipartite(bp) => bp,
        BipartiteCheck::NotBipartite { odd_cycle } => {
            return Err(Chain3Error::NotBipartite { odd_cycle })
        }
    };
    is_chain_counted(g, &bp, &mut probes).map_err(Chain3Error::NotChain)?;

    let no = |probes: ProbeCount| ChainDecision {
        answer: false,
        case: ChainCase::None,
        sub_case: None,
        swapped: false,
        certificate: None,
        fallback: false,
        probes: probes.0,
    };
    if g.n() < 3 {
        return Ok(no(probes));
    }

    let cs = chain_structure_counted(g, &bp, &mut probes);
    let matched = if components > 1 {
        Some((ChainCase::Disconnected, false))
    } else {
        let flipped = chain_structure_counted(g, &bp.swapped(), &mut probes);
        [
            ChainCase::SingletonSide,
            ChainCase::TwoUniversal,
            ChainCase::TwoSideWithTail,
            ChainCase::BothSidesLarge,
        ]
        .into_iter()
        .find_map(|case| {
            if condition_holds(&cs, case, true) {
                Some((case, false))
            } else if condition_holds(&flipped, case, true) {
                Some((case, true))
            } else {
                None
            }
        })
    };

    let Some((case, swapped)) = matched else {
        return Ok(no(probes));
    };
    let oriented = if swapped { cs.swapped(g) } else { cs };
    let sub = classify_sub_case(g, &oriented, case).expect("matched case has a sub-case");
    let coloring = construct_case_coloring(g, &oriented, case, sub)?;

    let verified = verify_k_role(g, &coloring)
        .map(|v| v.is_valid())
        .unwrap_or(false);
    if verified {
        return Ok(ChainDecision {
            answer: true,
            case,
            sub_case: Some(sub),
            swapped,
            certificate: Some(coloring),
            fallback: false,
            probes: probes.0,
        });
    }

    log::warn!(
        "chain3: {case:?}/{sub:?} coloring failed verification, falling back to exact search on {g:?}"
    );
    let exact = solve_k_role(g, 3, SolveMode::Witness, &SolverConfig::default())
        .map_err(Chain3Error::InternalCertificateFailure)?;
    Ok(ChainDecision {
        answer: exact.answer,
        case: if exact.answer { case } else { ChainCase::None },
        sub_case: exact.answer.then_some(sub),
        swapped,
        certificate: exact.certificate,
        fallback: true,
        probes: probes.0,
    })
}

/// Whether `case`'s condition holds with the sides as given in `cs`. For
/// conditions 2 to 4 only the X-side reading is tested; callers try the
/// swapped structure themselves. `connected` is assumed for cases 2 to 5.
fn condition_holds(cs: &ChainStructure, case: ChainCase, connected: bool) -> bool {
    let (nx, ny) = (cs.x().len(), cs.y().len());
    match case {
        ChainCase::Disconnected => !connected,
        ChainCase::SingletonSide => nx == 1,
        ChainCase::TwoUniversal => nx == 2 && cs.universal_x.len() == 2,
        ChainCase::TwoSideWithTail => nx == 2 && ny > 2 && ny - cs.pendant_y.len() > 1,
        ChainCase::BothSidesLarge => nx >= 3 && ny >= 3,
        ChainCase::None => false,
    }
}

/// The construction that applies to `case` on `g` with sides as in `cs`, or
/// `None` if the case's condition fails.
pub fn classify_sub_case(g: &Graph, cs: &ChainStructure, case: ChainCase) -> Option<SubCase> {
    if g.n() < 3 {
        return None;
    }
    let connected = g.is_connected();
    if case != ChainCase::Disconnected && !connected {
        return None;
    }
    if !condition_holds(cs, case, connected) {
        return None;
    }
    let (px, py) = (!cs.pendant_x.is_empty(), !cs.pendant_y.is_empty());
    Some(match case {
        ChainCase::Disconnected if g.m() == 0 => SubCase::Edgeless,
        ChainCase::Disconnected => SubCase::OneEdgedComponent,
        ChainCase::SingletonSide => SubCase::Star,
        ChainCase::TwoUniversal => SubCase::BothUniversal,
        ChainCase::TwoSideWithTail if !py => SubCase::TailNoPendants,
        ChainCase::TwoSideWithTail => SubCase::TailPendantsY,
        ChainCase::BothSidesLarge => match (px, py) {
            (false, false) => SubCase::LargeNoPendants,
            (true, false) => SubCase::LargePendantsX,
            (false, true) => SubCase::LargePendantsY,
            (true, true) => {
                let (x, y) = (cs.universal_x[0], cs.universal_y[0]);
                let core = g.edges().any(|(a, b)| a != x && a != y && b != x && b != y);
                if core {
                    SubCase::LargePendantsBothCore
                } else {
                    SubCase::LargePendantsBothDoubleStar
                }
            }
        },
        ChainCase::None => return None,
    })
}

/// Builds the case coloring. Ties ("some vertex", "one neighbor") go to the
/// smallest vertex id.
pub fn construct_case_coloring(
    g: &Graph,
    cs: &ChainStructure,
    case: ChainCase,
    sub_case: SubCase,
) -> Result<RoleColoring, Chain3Error> {
    if classify_sub_case(g, cs, case) != Some(sub_case) {
        return Err(Chain3Error::ConditionNotSatisfied { case, sub_case });
    }
    let n = g.n();
    let mut col: Vec<Color> = vec![0; n];
    let paint = |col: &mut Vec<Color>, vs: &[usize], c: Color| {
        for &v in vs {
            col[v] = c;
        }
    };
    let (x, y) = (cs.x(), cs.y());

    match sub_case {
        SubCase::Edgeless => {
            col.fill(3);
            col[0] = 1;
            col[1] = 2;
        }
        SubCase::OneEdgedComponent => {
            col.fill(3);
            let comp = g
                .components()
                .into_iter()
                .find(|c| c.len() > 1)
                .expect("disconnected chain graph with edges");
            let side = cs.bipartition.sides(n);
            for v in comp {
                col[v] = if side[v] { 2 } else { 1 };
            }
        }
        SubCase::Star => {
            col.fill(3);
            col[x[0]] = 1;
            col[y[0]] = 2;
        }
        SubCase::BothUniversal => {
            paint(&mut col, y, 3);
            col[x[0]] = 1;
            col[x[1]] = 2;
        }
        SubCase::TailNoPendants => {
            let (u, v) = universal_first(cs);
            paint(&mut col, y, 2);
            col[u] = 1;
            col[v] = 3;
        }
        SubCase::TailPendantsY => {
            let (u, v) = universal_first(cs);
            paint(&mut col, y, 3);
            paint(&mut col, &cs.pendant_y, 1);
            col[u] = 2;
            col[v] = 2;
            let t = cs
                .degree_two_y
                .iter()
                .copied()
                .find(|&t| g.has_edge(v, t))
                .ok_or(Chain3Error::ConditionNotSatisfied { case, sub_case })?;
            col[t] = 1;
        }
        SubCase::LargeNoPendants => {
            paint(&mut col, x, 3);
            paint(&mut col, y, 2);
            col[cs.universal_x[0]] = 1;
        }
        SubCase::LargePendantsX => {
            paint(&mut col, y, 1);
            paint(&mut col, x, 3);
            col[cs.universal_x[0]] = 2;
        }
        SubCase::LargePendantsY => {
            paint(&mut col, x, 1);
            paint(&mut col, y, 3);
            col[cs.universal_y[0]] = 2;
        }
        SubCase::LargePendantsBothCore => {
            col.fill(3);
            paint(&mut col, &cs.pendant_x, 1);
            paint(&mut col, &cs.pendant_y, 1);
            col[cs.universal_x[0]] = 2;
            col[cs.universal_y[0]] = 2;
        }
        SubCase::LargePendantsBothDoubleStar => {
            col.fill(1);
            let (ux, uy) = (cs.universal_x[0], cs.universal_y[0]);
            col[ux] = 2;
            col[uy] = 2;
            for hub in [ux, uy] {
                // The smallest free neighbor keeps color 1; the next gets 3.
                let second = g
                    .neighbors(hub)
                    .iter()
                    .copied()
                    .filter(|&w| w != ux && w != uy)
                    .nth(1)
                    .ok_or(Chain3Error::ConditionNotSatisfied { case, sub_case })?;
                col[second] = 3;
            }
        }
    }
    debug_assert!(col.iter().all(|&c| (1..=3).contains(&c)));
    Ok(RoleColoring::from_raw(col, 3))
}

/// `(u, v)` for `|X| = 2` with `u` universal (smallest id if both are).
fn universal_first(cs: &ChainStructure) -> (usize, usize) {
    let u = cs.universal_x[0];
    let v = if cs.x()[0] == u { cs.x()[1] } else { cs.x()[0] };
    (u, v)
}

/// Exhaustive refutation for `P4`: every canonical 3-partition with the
/// violation it commits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct P4Refutation {
    pub partitions: Vec<(RoleColoring, Violation)>,
    /// Exact-solver count of valid canonical 3-role colorings (always 0).
    pub solver_count: u64,
}

pub fn p4_no_certificate(g: &Graph) -> Result<P4Refutation, Chain3Error> {
    let mut degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    if g.n() != 4 || g.m() != 3 || !g.is_connected() || degrees != [1, 1, 2, 2] {
        return Err(Chain3Error::NotP4);
    }
    let mut partitions = Vec::new();
    for colors in restricted_growth_strings(4, 3) {
        let c = RoleColoring::from_raw(colors, 3);
        match verify_k_role(g, &c).expect("coloring matches graph") {
            Verdict::Invalid(v) => partitions.push((c, v)),
            Verdict::Valid => unreachable!("P4 has a 3-role coloring {c}"),
        }
    }
    let solver_count = solve_k_role(g, 3, SolveMode::Count, &SolverConfig::default())
        .map_err(Chain3Error::InternalCertificateFailure)?
        .count
        .unwrap_or(0);
    Ok(P4Refutation {
        partitions,
        solver_count,
    })
}
