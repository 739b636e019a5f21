//! Exact search for k-role and R-role colorings.
//!
//! k-role search runs over restricted growth strings: vertices are assigned
//! in ascending id order, vertex `v` may take any color already opened or the
//! next unopened one. Each set partition into `k` blocks is therefore seen
//! exactly once, so counts are up to color permutation and the first
//! solution found is the lexicographically smallest canonical coloring.
//!
//! With pruning enabled the search maintains, per color class, a lower bound
//! on its role-graph neighborhood (`required`) and, once some member has all
//! of its neighbors colored, the exact neighborhood. Three cuts follow:
//! the degree bound `|required(c)| <= min deg` over the class, early
//! neighborhood mismatch against the exact set, and surjectivity (fewer
//! remaining vertices than unopened colors). None of them changes the answer.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::coloring::{verify_k_role, verify_r_role, Color, RoleColoring, RoleGraph};
use crate::graph::Graph;

/// Largest color count the bitset search supports.
pub const MAX_SEARCH_COLORS: Color = 64;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveMode {
    Decision,
    Witness,
    Count,
    /// Collect up to `limit` solutions in search order.
    Enumerate(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub node_budget: u64,
    pub pruning: bool,
    pub threads: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            node_budget: DEFAULT_NODE_BUDGET,
            pruning: true,
            threads: 1,
        }
    }
}

impl SolverConfig {
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.node_budget = budget;
        self
    }

    pub fn without_pruning(mut self) -> Self {
        self.pruning = false;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("node budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("color count must be at least 1")]
    ZeroColors,
    #[error("search supports at most {MAX_SEARCH_COLORS} colors, got {0}")]
    TooManyColors(Color),
    #[error("enumeration limit must be at least 1")]
    ZeroLimit,
    #[error("role graph has no colors")]
    EmptyRoleGraph,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SolveResult {
    pub answer: bool,
    /// Present in witness mode when the answer is yes.
    pub certificate: Option<RoleColoring>,
    /// Present in count and enumerate modes.
    pub count: Option<u64>,
    /// Present in enumerate mode.
    pub solutions: Vec<RoleColoring>,
    /// Search-tree size; diagnostics only.
    pub nodes: u64,
}

/// Decides whether `g` has a `k`-role coloring.
pub fn solve_k_role(
    g: &Graph,
    k: Color,
    mode: SolveMode,
    config: &SolverConfig,
) -> Result<SolveResult, SolveError> {
    if k == 0 {
        return Err(SolveError::ZeroColors);
    }
    check_mode(mode)?;
    let n = g.n();
    if (k as usize) > n {
        return Ok(finish(mode, Vec::new(), 0, k));
    }
    if (k as usize) == n {
        // The only partition into n blocks; singletons always satisfy the
        // definition.
        let id: Vec<Color> = (1..=k).collect();
        return Ok(finish(mode, vec![id], 0, k));
    }
    if k > MAX_SEARCH_COLORS {
        return Err(SolveError::TooManyColors(k));
    }
    solve_with(config, mode, k, || KRoleSearch::new(g, k, config.pruning))
}

/// Decides whether `g` has an `r`-role coloring (a surjective, locally
/// surjective homomorphism onto `r`).
pub fn solve_r_role(
    g: &Graph,
    r: &RoleGraph,
    mode: SolveMode,
    config: &SolverConfig,
) -> Result<SolveResult, SolveError> {
    check_mode(mode)?;
    let k = r.colors();
    if k == 0 {
        return Err(SolveError::EmptyRoleGraph);
    }
    if k > MAX_SEARCH_COLORS {
        return Err(SolveError::TooManyColors(k));
    }
    if (k as usize) > g.n() {
        return Ok(finish(mode, Vec::new(), 0, k));
    }
    solve_with(config, mode, k, || RRoleSearch::new(g, r, config.pruning))
}

/// Runs a search and packages the result; `k` is the color count stamped on
/// returned colorings.
pub(crate) fn solve_with<S, F>(
    config: &SolverConfig,
    mode: SolveMode,
    k: Color,
    make: F,
) -> Result<SolveResult, SolveError>
where
    S: Search,
    F: Fn() -> S + Sync,
{
    let (solutions, count, nodes) = run(config, mode, make)?;
    let mut result = finish(mode, solutions, nodes, k);
    if matches!(mode, SolveMode::Count) {
        result.count = Some(count);
        result.answer = count > 0;
    }
    Ok(result)
}

/// 1-role colorability: every neighborhood maps to `{1}` or every one to the
/// empty set.
pub fn one_role_decision(g: &Graph) -> bool {
    g.n() >= 1 && (g.m() == 0 || g.min_degree().unwrap_or(0) >= 1)
}

/// Calls `visit` on every canonical k-role coloring, in search order, until
/// it breaks. Returns the node count.
pub fn for_each_k_role(
    g: &Graph,
    k: Color,
    config: &SolverConfig,
    mut visit: impl FnMut(&[Color]) -> ControlFlow<()>,
) -> Result<u64, SolveError> {
    if k == 0 {
        return Err(SolveError::ZeroColors);
    }
    let n = g.n();
    if (k as usize) > n {
        return Ok(0);
    }
    if (k as usize) == n {
        let id: Vec<Color> = (1..=k).collect();
        let _ = visit(&id);
        return Ok(0);
    }
    if k > MAX_SEARCH_COLORS {
        return Err(SolveError::TooManyColors(k));
    }
    let counter = NodeCounter::new(config.node_budget);
    let mut search = KRoleSearch::new(g, k, config.pruning);
    dfs(&mut search, &counter, 0, &mut visit)?;
    Ok(counter.flush_total())
}

pub(crate) fn check_mode(mode: SolveMode) -> Result<(), SolveError> {
    if mode == SolveMode::Enumerate(0) {
        return Err(SolveError::ZeroLimit);
    }
    Ok(())
}

pub(crate) fn finish(
    mode: SolveMode,
    solutions: Vec<Vec<Color>>,
    nodes: u64,
    k: Color,
) -> SolveResult {
    let answer = !solutions.is_empty();
    let to_coloring = |s: Vec<Color>| RoleColoring::from_raw(s, k);
    match mode {
        SolveMode::Decision => SolveResult {
            answer,
            nodes,
            ..Default::default()
        },
        SolveMode::Witness => SolveResult {
            answer,
            certificate: solutions.into_iter().next().map(to_coloring),
            nodes,
            ..Default::default()
        },
        SolveMode::Count | SolveMode::Enumerate(_) => {
            let count = solutions.len() as u64;
            let solutions = if matches!(mode, SolveMode::Enumerate(_)) {
                solutions.into_iter().map(to_coloring).collect()
            } else {
                Vec::new()
            };
            SolveResult {
                answer,
                count: Some(count),
                solutions,
                nodes,
                ..Default::default()
            }
        }
    }
}

/// Runs a search under `mode`, optionally splitting into independent
/// subtrees. Returns (collected solutions, total count, nodes).
fn run<S, F>(
    config: &SolverConfig,
    mode: SolveMode,
    make: F,
) -> Result<(Vec<Vec<Color>>, u64, u64), SolveError>
where
    S: Search,
    F: Fn() -> S + Sync,
{
    let counter = NodeCounter::new(config.node_budget);
    let keep = match mode {
        SolveMode::Decision | SolveMode::Witness => 1,
        SolveMode::Count => 0,
        SolveMode::Enumerate(limit) => limit,
    };

    if config.threads <= 1 {
        let mut search = make();
        let (sols, count) = collect(&mut search, &counter, 0, mode, keep)?;
        return Ok((sols, count, counter.flush_total()));
    }

    // Split on prefixes of a fixed depth, chosen so there are a few subtrees
    // per thread; prefixes come out in search order.
    let mut search = make();
    let n = search.n();
    let mut prefixes: Vec<Vec<Color>> = Vec::new();
    let mut depth = 0;
    while depth < n && prefixes.len() < config.threads * 8 {
        depth += 1;
        prefixes.clear();
        dfs_prefixes(&mut search, depth, &mut prefixes);
    }
    if depth == 0 || depth >= n {
        let (sols, count) = collect(&mut search, &counter, 0, mode, keep)?;
        return Ok((sols, count, counter.flush_total()));
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .expect("thread pool");
    let shared = counter.atomic();
    let solve_prefix = |prefix: &Vec<Color>| {
        let mut s = make();
        for (v, &c) in prefix.iter().enumerate() {
            let ok = s.assign(v, c);
            debug_assert!(ok, "prefix replay must succeed");
        }
        let local = NodeCounter::with_parent(shared, config.node_budget);
        let out = collect(&mut s, &local, prefix.len(), mode, keep);
        local.flush_total();
        out
    };

    if keep == 1 {
        // Decision and witness: the first prefix in search order that has a
        // solution holds the lexicographically smallest one.
        let first = pool.install(|| {
            prefixes
                .par_iter()
                .find_map_first(|p| match solve_prefix(p) {
                    Ok((sols, _)) if sols.is_empty() => None,
                    other => Some(other),
                })
        });
        return match first {
            None => Ok((Vec::new(), 0, counter.total())),
            Some(res) => {
                let (sols, count) = res?;
                Ok((sols, count, counter.total()))
            }
        };
    }

    let per_prefix: Vec<_> = pool.install(|| prefixes.par_iter().map(solve_prefix).collect());
    let mut sols = Vec::new();
    let mut total = 0;
    for part in per_prefix {
        let (s, c) = part?;
        total += c;
        for sol in s {
            if keep == 0 || sols.len() < keep {
                sols.push(sol);
            }
        }
    }
    if matches!(mode, SolveMode::Enumerate(_)) {
        total = sols.len() as u64;
    }
    Ok((sols, total, counter.total()))
}

fn collect<S: Search>(
    search: &mut S,
    counter: &NodeCounter,
    start: usize,
    mode: SolveMode,
    keep: usize,
) -> Result<(Vec<Vec<Color>>, u64), SolveError> {
    let mut sols = Vec::new();
    let mut count = 0u64;
    dfs(search, counter, start, &mut |colors: &[Color]| {
        count += 1;
        if keep == 0 {
            return ControlFlow::Continue(());
        }
        sols.push(colors.to_vec());
        if sols.len() >= keep && !matches!(mode, SolveMode::Count) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok((sols, count))
}

/// Budget accounting shared by parallel subtrees; local counts are flushed
/// to the shared total in batches.
struct NodeCounter<'p> {
    shared: SharedCount<'p>,
    local: std::cell::Cell<u64>,
    budget: u64,
}

enum SharedCount<'p> {
    Own(AtomicU64),
    Parent(&'p AtomicU64),
}

const FLUSH_EVERY: u64 = 1024;

impl<'p> NodeCounter<'p> {
    fn new(budget: u64) -> Self {
        NodeCounter {
            shared: SharedCount::Own(AtomicU64::new(0)),
            local: std::cell::Cell::new(0),
            budget,
        }
    }

    fn atomic(&self) -> &AtomicU64 {
        match &self.shared {
            SharedCount::Own(a) => a,
            SharedCount::Parent(a) => a,
        }
    }

    fn with_parent(shared: &'p AtomicU64, budget: u64) -> Self {
        NodeCounter {
            shared: SharedCount::Parent(shared),
            local: std::cell::Cell::new(0),
            budget,
        }
    }

    fn tick(&self) -> Result<(), SolveError> {
        let local = self.local.get() + 1;
        self.local.set(local);
        if local >= FLUSH_EVERY {
            self.atomic().fetch_add(local, Ordering::Relaxed);
            self.local.set(0);
        }
        if self.atomic().load(Ordering::Relaxed) + self.local.get() > self.budget {
            return Err(SolveError::BudgetExceeded {
                budget: self.budget,
            });
        }
        Ok(())
    }

    fn flush_total(&self) -> u64 {
        let local = self.local.replace(0);
        self.atomic().fetch_add(local, Ordering::Relaxed) + local
    }

    fn total(&self) -> u64 {
        self.atomic().load(Ordering::Relaxed) + self.local.get()
    }
}

/// One level of the vertex-by-vertex search.
pub(crate) trait Search {
    fn n(&self) -> usize;
    /// Largest color that may be tried at vertex `v` given the prefix.
    fn max_color(&self, v: usize) -> Color;
    /// Assigns `v := c` and propagates; `false` means the branch is dead.
    /// State must be restored with `undo_to` either way.
    fn assign(&mut self, v: usize, c: Color) -> bool;
    fn mark(&self) -> usize;
    fn undo_to(&mut self, mark: usize);
    /// Final check on a complete assignment.
    fn accept(&self) -> bool;
    fn colors(&self) -> &[Color];
}

/// Iterative DFS from depth `start` (vertices `0..start` already assigned).
fn dfs<S: Search>(
    search: &mut S,
    counter: &NodeCounter,
    start: usize,
    visit: &mut dyn FnMut(&[Color]) -> ControlFlow<()>,
) -> Result<(), SolveError> {
    let n = search.n();
    if start == n {
        if search.accept() {
            let _ = visit(search.colors());
        }
        return Ok(());
    }
    // next[d]: next color to try at depth d; marks[d]: trail mark before d.
    let mut next = vec![1 as Color; n + 1];
    let mut marks = vec![0usize; n + 1];
    let mut d = start;
    marks[d] = search.mark();
    loop {
        if d == n {
            if search.accept() && visit(search.colors()).is_break() {
                search.undo_to(marks[start]);
                return Ok(());
            }
            d -= 1;
            search.undo_to(marks[d]);
            continue;
        }
        let c = next[d];
        if c > search.max_color(d) {
            if d == start {
                search.undo_to(marks[start]);
                return Ok(());
            }
            d -= 1;
            search.undo_to(marks[d]);
            continue;
        }
        next[d] = c + 1;
        if let Err(e) = counter.tick() {
            search.undo_to(marks[start]);
            return Err(e);
        }
        if search.assign(d, c) {
            d += 1;
            next[d] = 1;
            marks[d] = search.mark();
        } else {
            search.undo_to(marks[d]);
        }
    }
}

/// Collects all consistent prefixes of length `depth`, in search order.
fn dfs_prefixes<S: Search>(search: &mut S, depth: usize, out: &mut Vec<Vec<Color>>) {
    fn rec<S: Search>(s: &mut S, v: usize, depth: usize, out: &mut Vec<Vec<Color>>) {
        if v == depth {
            out.push(s.colors()[..depth].to_vec());
            return;
        }
        for c in 1..=s.max_color(v) {
            let mark = s.mark();
            if s.assign(v, c) {
                rec(s, v + 1, depth, out);
            }
            s.undo_to(mark);
        }
    }
    rec(search, 0, depth, out);
}

#[derive(Debug, Clone, Copy)]
enum Undo {
    Color(usize),
    Partial(usize, u64),
    Open(usize),
    Required(usize, u64),
    MinDeg(usize, u32),
    Exact(usize, Option<u64>),
    Used(usize, Color),
    Use(Color),
}

fn bit(c: Color) -> u64 {
    1u64 << (c - 1)
}

struct KRoleSearch<'g> {
    g: &'g Graph,
    k: Color,
    pruning: bool,
    color: Vec<Color>,
    /// Colors among already-colored neighbors.
    partial: Vec<u64>,
    /// Uncolored neighbor count.
    open: Vec<u32>,
    /// Per class (index `c - 1`): union of members' partial sets.
    required: Vec<u64>,
    min_deg: Vec<u32>,
    exact: Vec<Option<u64>>,
    /// `used[v]`: number of colors opened by vertices `0..v`.
    used: Vec<Color>,
    trail: Vec<Undo>,
}

impl<'g> KRoleSearch<'g> {
    fn new(g: &'g Graph, k: Color, pruning: bool) -> Self {
        let n = g.n();
        KRoleSearch {
            g,
            k,
            pruning,
            color: vec![0; n],
            partial: vec![0; n],
            open: (0..n).map(|v| g.degree(v) as u32).collect(),
            required: vec![0; k as usize],
            min_deg: vec![u32::MAX; k as usize],
            exact: vec![None; k as usize],
            used: vec![0; n + 1],
            trail: Vec::new(),
        }
    }

    fn grow_required(&mut self, cls: usize, bits: u64) -> bool {
        let old = self.required[cls];
        let new = old | bits;
        if new != old {
            self.trail.push(Undo::Required(cls, old));
            self.required[cls] = new;
        }
        new.count_ones() <= self.min_deg[cls]
    }

    /// Checks vertex `u` against its class's exact neighborhood, fixing the
    /// exact set when `u` has just closed.
    fn check_vertex(&mut self, u: usize, upto: usize) -> bool {
        let cls = self.color[u] as usize - 1;
        let p = self.partial[u];
        match self.exact[cls] {
            Some(ex) => {
                if self.open[u] == 0 {
                    ex == p
                } else {
                    p & !ex == 0 && (ex & !p).count_ones() <= self.open[u]
                }
            }
            None if self.open[u] == 0 => {
                self.trail.push(Undo::Exact(cls, None));
                self.exact[cls] = Some(p);
                if self.required[cls] & !p != 0 {
                    return false;
                }
                let c = self.color[u];
                (0..=upto).all(|x| {
                    self.color[x] != c || {
                        let px = self.partial[x];
                        px & !p == 0 && (p & !px).count_ones() <= self.open[x]
                    }
                })
            }
            None => true,
        }
    }
}

impl Search for KRoleSearch<'_> {
    fn n(&self) -> usize {
        self.g.n()
    }

    fn max_color(&self, v: usize) -> Color {
        (self.used[v] + 1).min(self.k)
    }

    fn assign(&mut self, v: usize, c: Color) -> bool {
        let g = self.g;
        self.color[v] = c;
        self.trail.push(Undo::Color(v));
        let opened = self.used[v].max(c);
        self.trail.push(Undo::Used(v + 1, self.used[v + 1]));
        self.used[v + 1] = opened;

        let n = g.n();
        if self.pruning && n - (v + 1) < (self.k - opened) as usize {
            return false;
        }

        let b = bit(c);
        for &w in g.neighbors(v) {
            self.trail.push(Undo::Partial(w, self.partial[w]));
            self.partial[w] |= b;
            self.trail.push(Undo::Open(w));
            self.open[w] -= 1;
        }
        if !self.pruning {
            return true;
        }

        let cls = c as usize - 1;
        let deg = g.degree(v) as u32;
        if deg < self.min_deg[cls] {
            self.trail.push(Undo::MinDeg(cls, self.min_deg[cls]));
            self.min_deg[cls] = deg;
        }
        if !self.grow_required(cls, self.partial[v]) {
            return false;
        }
        for &w in g.neighbors(v) {
            if w > v {
                break;
            }
            let cw = self.color[w] as usize - 1;
            if !self.grow_required(cw, b) || !self.check_vertex(w, v) {
                return false;
            }
        }
        self.check_vertex(v, v)
    }

    fn mark(&self) -> usize {
        self.trail.len()
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                Undo::Color(v) => self.color[v] = 0,
                Undo::Partial(w, old) => self.partial[w] = old,
                Undo::Open(w) => self.open[w] += 1,
                Undo::Required(c, old) => self.required[c] = old,
                Undo::MinDeg(c, old) => self.min_deg[c] = old,
                Undo::Exact(c, old) => self.exact[c] = old,
                Undo::Used(i, old) => self.used[i] = old,
                Undo::Use(_) => unreachable!("R-role undo entry in k-role trail"),
            }
        }
    }

    fn accept(&self) -> bool {
        if self.used[self.g.n()] != self.k {
            return false;
        }
        if self.pruning {
            debug_assert!(verify_k_role(
                self.g,
                &RoleColoring::from_raw(self.color.clone(), self.k)
            )
            .unwrap()
            .is_valid());
            return true;
        }
        verify_k_role(self.g, &RoleColoring::from_raw(self.color.clone(), self.k))
            .map(|v| v.is_valid())
            .unwrap_or(false)
    }

    fn colors(&self) -> &[Color] {
        &self.color
    }
}

struct RRoleSearch<'g> {
    g: &'g Graph,
    r: &'g RoleGraph,
    k: Color,
    pruning: bool,
    /// `N_R(c)` as a bitset, index `c - 1`.
    role_nbrs: Vec<u64>,
    color: Vec<Color>,
    partial: Vec<u64>,
    open: Vec<u32>,
    /// How many assigned vertices carry each color.
    uses: Vec<u32>,
    distinct: Color,
    trail: Vec<Undo>,
}

impl<'g> RRoleSearch<'g> {
    fn new(g: &'g Graph, r: &'g RoleGraph, pruning: bool) -> Self {
        let k = r.colors();
        let role_nbrs = (1..=k)
            .map(|c| r.neighbors(c).iter().fold(0u64, |acc, &d| acc | bit(d)))
            .collect();
        let n = g.n();
        RRoleSearch {
            g,
            r,
            k,
            pruning,
            role_nbrs,
            color: vec![0; n],
            partial: vec![0; n],
            open: (0..n).map(|v| g.degree(v) as u32).collect(),
            uses: vec![0; k as usize],
            distinct: 0,
            trail: Vec::new(),
        }
    }

    fn vertex_ok(&self, u: usize) -> bool {
        let need = self.role_nbrs[self.color[u] as usize - 1];
        let p = self.partial[u];
        p & !need == 0 && (need & !p).count_ones() <= self.open[u]
    }
}

impl Search for RRoleSearch<'_> {
    fn n(&self) -> usize {
        self.g.n()
    }

    fn max_color(&self, _v: usize) -> Color {
        self.k
    }

    fn assign(&mut self, v: usize, c: Color) -> bool {
        let g = self.g;
        self.color[v] = c;
        self.trail.push(Undo::Color(v));
        self.trail.push(Undo::Use(c));
        self.uses[c as usize - 1] += 1;
        if self.uses[c as usize - 1] == 1 {
            self.distinct += 1;
        }

        let b = bit(c);
        for &w in g.neighbors(v) {
            self.trail.push(Undo::Partial(w, self.partial[w]));
            self.partial[w] |= b;
            self.trail.push(Undo::Open(w));
            self.open[w] -= 1;
        }
        if !self.pruning {
            return true;
        }
        if g.n() - (v + 1) < (self.k - self.distinct) as usize {
            return false;
        }
        for &w in g.neighbors(v) {
            if w > v {
                break;
            }
            if !self.vertex_ok(w) {
                return false;
            }
        }
        self.vertex_ok(v)
    }

    fn mark(&self) -> usize {
        self.trail.len()
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                Undo::Color(v) => self.color[v] = 0,
                Undo::Partial(w, old) => self.partial[w] = old,
                Undo::Open(w) => self.open[w] += 1,
                Undo::Use(c) => {
                    let slot = &mut self.uses[c as usize - 1];
                    *slot -= 1;
                    if *slot == 0 {
                        self.distinct -= 1;
                    }
                }
                _ => unreachable!("k-role undo entry in R-role trail"),
            }
        }
    }

    fn accept(&self) -> bool {
        if self.distinct != self.k {
            return false;
        }
        let c = RoleColoring::from_raw(self.color.clone(), self.k);
        if self.pruning {
            debug_assert!(verify_r_role(self.g, self.r, &c).unwrap().is_valid());
            return true;
        }
        verify_r_role(self.g, self.r, &c)
            .map(|v| v.is_valid())
            .unwrap_or(false)
    }

    fn colors(&self) -> &[Color] {
        &self.color
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn p4_has_no_three_role_coloring() {
        let r = solve_k_role(&path(4), 3, SolveMode::Witness, &cfg()).unwrap();
        assert!(!r.answer);
        assert!(r.certificate.is_none());
    }

    #[test]
    fn k_equals_n_gives_identity() {
        let g = path(5);
        let r = solve_k_role(&g, 5, SolveMode::Witness, &cfg()).unwrap();
        assert_eq!(r.certificate.unwrap(), RoleColoring::identity(5));
        assert!(
            !solve_k_role(&g, 6, SolveMode::Decision, &cfg())
                .unwrap()
                .answer
        );
    }

    #[test]
    fn p4_two_roles() {
        // Two partitions survive: the bipartition and ends versus middle.
        let r = solve_k_role(&path(4), 2, SolveMode::Witness, &cfg()).unwrap();
        assert_eq!(r.certificate.unwrap().as_slice(), &[1, 2, 1, 2]);
        let r = solve_k_role(&path(4), 2, SolveMode::Count, &cfg()).unwrap();
        assert_eq!(r.count, Some(2));
    }

    #[test]
    fn zero_colors_and_limits_rejected() {
        assert_eq!(
            solve_k_role(&path(3), 0, SolveMode::Decision, &cfg()),
            Err(SolveError::ZeroColors)
        );
        assert_eq!(
            solve_k_role(&path(3), 2, SolveMode::Enumerate(0), &cfg()),
            Err(SolveError::ZeroLimit)
        );
    }

    #[test]
    fn budget_is_reported_not_folded_into_no() {
        let g = cycle(12);
        let err = solve_k_role(&g, 5, SolveMode::Count, &cfg().with_budget(10)).unwrap_err();
        assert_eq!(err, SolveError::BudgetExceeded { budget: 10 });
    }

    #[test]
    fn r_role_examples() {
        let k2 = RoleGraph::new(2, &[(1, 2)]).unwrap();
        assert!(
            solve_r_role(&path(2), &k2, SolveMode::Decision, &cfg())
                .unwrap()
                .answer
        );
        let r0 = RoleGraph::new(2, &[(1, 1), (1, 2)]).unwrap();
        let r = solve_r_role(&path(3), &r0, SolveMode::Count, &cfg()).unwrap();
        assert_eq!(r.count, Some(0));
    }

    #[test]
    fn one_role_examples() {
        assert!(one_role_decision(&cycle(4)));
        assert!(one_role_decision(&Graph::empty(3)));
        assert!(!one_role_decision(
            &Graph::from_edges(3, &[(0, 1)]).unwrap()
        ));
    }

    #[test]
    fn enumerate_respects_limit_and_order() {
        let g = cycle(6);
        let all = solve_k_role(&g, 3, SolveMode::Enumerate(1000), &cfg()).unwrap();
        let two = solve_k_role(&g, 3, SolveMode::Enumerate(2), &cfg()).unwrap();
        assert_eq!(two.solutions[..], all.solutions[..2]);
        let mut sorted = all.solutions.clone();
        sorted.sort();
        assert_eq!(sorted, all.solutions);
    }

    #[test]
    fn threads_do_not_change_results() {
        let g = cycle(10);
        for mode in [
            SolveMode::Witness,
            SolveMode::Count,
            SolveMode::Enumerate(7),
        ] {
            let seq = solve_k_role(&g, 3, mode, &cfg()).unwrap();
            let par = solve_k_role(&g, 3, mode, &cfg().with_threads(4)).unwrap();
            assert_eq!(seq.answer, par.answer);
            assert_eq!(seq.certificate, par.certificate);
            assert_eq!(seq.count, par.count);
            assert_eq!(seq.solutions, par.solutions);
        }
    }
}
