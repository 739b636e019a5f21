use std::fs;
use std::path::Path;

use rolecolor::chain3::ChainDecision;
use rolecolor::generate::{
    random_chain_graph, random_connected_bipartite, random_three_uniform, rng,
};
use rolecolor::hypergraph::hypergraph_k_colorable;
use rolecolor::reductions::{
    build_almost_bipartite, build_k3_instance, build_k4_instance, build_kpath_instance,
    edge_with_one_loop, GadgetGraph,
};
use rolecolor::{
    bipartition, chain_structure, decide_chain3, extract_role_graph, is_chain, solve_k_role,
    solve_r_role, verify_k_role, BipartiteCheck, Graph, Hypergraph, RoleColoring, RoleGraph,
    SolveMode, SolveResult, SolverConfig, Verdict,
};
use serde_json::json;

use crate::report::{input, Failure, Report};
use crate::{Cli, Command, Gadget, HarnessCheck, Mode};

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Graph::parse(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_coloring(path: &Path, k: Option<u32>) -> Result<RoleColoring, Failure> {
    RoleColoring::parse(&read(path)?, k)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_hypergraph(path: &Path) -> Result<Hypergraph, Failure> {
    Hypergraph::parse(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn solve_mode(mode: Mode) -> SolveMode {
    match mode {
        Mode::Decision => SolveMode::Decision,
        Mode::Witness => SolveMode::Witness,
        Mode::Count => SolveMode::Count,
    }
}

fn config(cli: &Cli, budget: u64) -> SolverConfig {
    SolverConfig::default()
        .with_budget(budget)
        .with_threads(cli.threads.max(1))
}

pub fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Verify { graph, coloring, k } => {
            let g = read_graph(graph)?;
            let c = read_coloring(coloring, Some(*k))?;
            verify(&g, &c)
        }
        Command::Rolegraph { graph, coloring } => {
            let g = read_graph(graph)?;
            let c = read_coloring(coloring, None)?;
            if c.len() != g.n() {
                return Err(Failure::Input(format!(
                    "coloring has {} entries for {} vertices",
                    c.len(),
                    g.n()
                )));
            }
            let r = extract_role_graph(&g, &c);
            let mut report = Report::new(true);
            report.text = r.to_text();
            report
                .extra(
                    "role_graph",
                    json!({ "colors": r.colors(), "edges": r.edges() }),
                )
                .stat("n", g.n())
                .stat("m", g.m());
            Ok(report)
        }
        Command::Solve {
            graph,
            k,
            mode,
            budget,
            check_certificate,
        } => {
            let g = read_graph(graph)?;
            if let Some(path) = check_certificate {
                let c = read_coloring(path, Some(*k))?;
                return verify(&g, &c);
            }
            let result = solve_k_role(&g, *k, solve_mode(*mode), &config(cli, *budget))?;
            Ok(solve_report(result, g.n(), g.m()))
        }
        Command::Rrole {
            graph,
            rolegraph,
            mode,
            budget,
        } => {
            let g = read_graph(graph)?;
            let r = RoleGraph::parse(&read(rolegraph)?)
                .map_err(|e| Failure::Input(format!("{}: {e}", rolegraph.display())))?;
            let result = solve_r_role(&g, &r, solve_mode(*mode), &config(cli, *budget))?;
            Ok(solve_report(result, g.n(), g.m()))
        }
        Command::Chain3 { graph } => {
            let g = read_graph(graph)?;
            let d = decide_chain3(&g).map_err(input)?;
            Ok(chain3_report(&d))
        }
        Command::Recognize { graph } => recognize(&read_graph(graph)?),
        Command::Reduce { gadget, output } => {
            let gg = match gadget {
                Gadget::K3 { input: p } => build_k3_instance(&read_hypergraph(p)?),
                Gadget::K4 { input: p } => build_k4_instance(&read_hypergraph(p)?),
                Gadget::Kpath { k, input: p } => build_kpath_instance(&read_hypergraph(p)?, *k),
                Gadget::Almost { pivot, input: p } => {
                    build_almost_bipartite(&read_graph(p)?, *pivot)
                }
            }
            .map_err(input)?;
            reduce(&gg, output.as_deref())
        }
        Command::Hgcolor {
            hypergraph,
            k,
            mode,
            non_surjective,
            budget,
        } => {
            let h = read_hypergraph(hypergraph)?;
            let result = hypergraph_k_colorable(
                &h,
                *k,
                solve_mode(*mode),
                !non_surjective,
                &config(cli, *budget),
            )?;
            Ok(solve_report(result, h.n(), h.m()))
        }
        Command::Harness { check, count, k } => harness(cli, *check, *count, *k),
    }
}

fn verify(g: &Graph, c: &RoleColoring) -> Result<Report, Failure> {
    let verdict = verify_k_role(g, c).map_err(input)?;
    let mut report = Report::new(verdict.is_valid());
    match verdict {
        Verdict::Valid => {
            report.line("valid");
        }
        Verdict::Invalid(v) => {
            report.line(format!("invalid: {v}"));
            report.violation = Some(v);
        }
    }
    report.stat("n", g.n()).stat("k", c.k());
    Ok(report)
}

fn solve_report(result: SolveResult, n: usize, m: usize) -> Report {
    let mut report = Report::new(result.answer);
    report.line(if result.answer { "yes" } else { "no" });
    if let Some(count) = result.count {
        report.line(format!("count {count}"));
        report.extra("count", count);
    }
    if let Some(c) = result.certificate {
        report.line(c.to_text());
        report.certificate = Some(c.into_vec());
    }
    report.stat("n", n).stat("m", m).stat("nodes", result.nodes);
    report
}

fn chain3_report(d: &ChainDecision) -> Report {
    let mut report = Report::new(d.answer);
    let case = format!("{:?}", d.case);
    report.line(if d.answer { "yes" } else { "no" });
    report.line(format!("case {case}"));
    if let Some(sub) = d.sub_case {
        report.line(format!("sub-case {sub:?}"));
        report.extra("sub_case", format!("{sub:?}"));
    }
    if d.swapped {
        report.line("sides swapped");
    }
    report.extra("swapped", d.swapped);
    if let Some(c) = &d.certificate {
        report.line(c.to_text());
        report.certificate = Some(c.as_slice().to_vec());
    }
    report.case = Some(case);
    report.stat("probes", d.probes).stat("fallback", d.fallback);
    report
}

fn recognize(g: &Graph) -> Result<Report, Failure> {
    let mut report = Report::new(false);
    report.stat("n", g.n()).stat("m", g.m());
    let bp = match bipartition(g) {
        BipartiteCheck::NotBipartite { odd_cycle } => {
            report.line("not bipartite");
            report.line(format!("odd cycle {odd_cycle:?}"));
            report
                .extra("bipartite", false)
                .extra("odd_cycle", odd_cycle);
            return Ok(report);
        }
        BipartiteCheck::Bipartite(bp) => bp,
    };
    report.line("bipartite");
    report.line(format!("X {:?}", bp.part_x));
    report.line(format!("Y {:?}", bp.part_y));
    report
        .extra("bipartite", true)
        .extra("part_x", &bp.part_x)
        .extra("part_y", &bp.part_y);
    if let Err(w) = is_chain(g, &bp) {
        report.line(format!(
            "not a chain graph: induced 2K2 ({}, {}), ({}, {})",
            w.u, w.w, w.v, w.z
        ));
        report
            .extra("chain", false)
            .extra("induced_2k2", [w.u, w.w, w.v, w.z]);
        return Ok(report);
    }
    let cs = chain_structure(g, &bp);
    report.answer = true;
    report.line("chain graph");
    for (name, set) in [
        ("universal_x", &cs.universal_x),
        ("universal_y", &cs.universal_y),
        ("pendant_x", &cs.pendant_x),
        ("pendant_y", &cs.pendant_y),
    ] {
        report.line(format!("{name} {set:?}"));
        report.extra(name, set);
    }
    report.extra("chain", true);
    Ok(report)
}

fn reduce(gg: &GadgetGraph, output: Option<&Path>) -> Result<Report, Failure> {
    let text = gg.to_text();
    let mut report = Report::new(true);
    match output {
        Some(path) => {
            fs::write(path, &text)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            report.line(format!("wrote {}", path.display()));
            report.extra("output", path.display().to_string());
        }
        None => report.text = text.clone(),
    }
    report
        .extra("gadget", gg.kind.to_string())
        .extra("graph", text)
        .stat("n", gg.graph.n())
        .stat("m", gg.graph.m());
    Ok(report)
}

fn harness(cli: &Cli, check: HarnessCheck, count: usize, k: u32) -> Result<Report, Failure> {
    use rand::Rng;
    let cfg = config(cli, rolecolor::solver::DEFAULT_NODE_BUDGET);
    let mut r = rng(cli.seed);
    let mut agree = 0usize;
    let mut mismatches = Vec::new();
    for i in 0..count {
        let (lhs, rhs, what) = match check {
            HarnessCheck::K3 | HarnessCheck::K4 | HarnessCheck::Kpath => {
                let (max_q, max_s) = if check == HarnessCheck::K3 {
                    (5, 4)
                } else {
                    (4, 3)
                };
                let nq = r.gen_range(3..=max_q);
                let ns = r.gen_range(1..=max_s);
                let h = random_three_uniform(&mut r, nq, ns);
                let (gg, role_k, source_k) = match check {
                    HarnessCheck::K3 => (build_k3_instance(&h), 3, 2),
                    HarnessCheck::K4 => (build_k4_instance(&h), 4, 3),
                    _ => (build_kpath_instance(&h, k), k, 2),
                };
                let gg = gg.map_err(input)?;
                let lhs =
                    hypergraph_k_colorable(&h, source_k, SolveMode::Decision, true, &cfg)?.answer;
                let rhs = solve_k_role(&gg.graph, role_k, SolveMode::Decision, &cfg)?.answer;
                (lhs, rhs, format!("{:?}", h.edges()))
            }
            HarnessCheck::Almost => {
                let n = r.gen_range(2..=10);
                let g = random_connected_bipartite(&mut r, n, 0.3);
                let pivot = r.gen_range(0..n);
                let gg = build_almost_bipartite(&g, pivot).map_err(input)?;
                let lhs =
                    solve_r_role(&g, &edge_with_one_loop(), SolveMode::Decision, &cfg)?.answer;
                let rhs = solve_k_role(&gg.graph, 2, SolveMode::Decision, &cfg)?.answer;
                (
                    lhs,
                    rhs,
                    format!("{:?} pivot {pivot}", g.edges().collect::<Vec<_>>()),
                )
            }
            HarnessCheck::Chain3 => {
                let n = r.gen_range(3..=14);
                let g = random_chain_graph(&mut r, n, 0);
                let lhs = decide_chain3(&g).map_err(input)?.answer;
                let rhs = solve_k_role(&g, 3, SolveMode::Decision, &cfg)?.answer;
                (lhs, rhs, format!("{:?}", g.edges().collect::<Vec<_>>()))
            }
        };
        if lhs == rhs {
            agree += 1;
        } else {
            mismatches.push(json!({ "instance": i, "input": what, "source": lhs, "target": rhs }));
        }
    }
    let mut report = Report::new(mismatches.is_empty());
    report.line(format!(
        "{agree} of {count} instances agree (seed {})",
        cli.seed
    ));
    for m in &mismatches {
        report.line(format!("mismatch {m}"));
    }
    report
        .extra("mismatches", mismatches)
        .stat("instances", count)
        .stat("agree", agree)
        .stat("seed", cli.seed);
    Ok(report)
}
