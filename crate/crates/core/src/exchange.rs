//! Partitions whose first parts are maximum-order strictly degenerate
//! subhypergraphs.
//!
//! [`exchange_to_max`] starts from any `f`-partition `(G_1, ..., G_p)` and a
//! maximum-order strictly `f_1`-degenerate set `G1*`. While the rest
//! `G2* = V - G1*` admits no `(f_2, ..., f_p)`-partition, it swaps one vertex
//! of a non-partitionable ("bad") component of `G2*` into `G1*` and one
//! vertex of the witness core out, keeping `G1*` strictly degenerate and of
//! maximum order. Each swap strictly decreases the potential
//!
//! ```text
//! (-|G_1 ∩ G1*|, number of bad components, m)
//! ```
//!
//! where `m` is the least witness distance (see [`exchange_to_max`]), so the
//! loop terminates; the engine asserts all of this as it runs.

use std::fmt;

use itertools::Itertools;

use crate::budget::{DegreeBudget, VectorFunction};
use crate::degeneracy::{is_strictly_degenerate_within, witness_core_within};
use crate::error::{Error, Result};
use crate::hardpair::HardPairCertificate;
use crate::hypergraph::{Hypergraph, Vertex, VertexSet};
use crate::solver::{solve, ComponentOutcome, Partition, SolveOptions, SolveOutcome, Verdict};

/// Largest instance [`max_strictly_degenerate_subhypergraph`] accepts by
/// default.
pub const DEFAULT_MAX_ORDER_VERTICES: usize = 20;

/// A maximum-cardinality vertex set inducing a strictly `f1`-degenerate
/// subhypergraph; the lexicographically smallest such set.
///
/// Vertices with `f1(v) = 0` never qualify, and vertices with
/// `d_G(v) < f1(v)` belong to every maximum set, so only the remaining
/// vertices are searched, largest subsets first.
pub fn max_strictly_degenerate_subhypergraph(
    g: &Hypergraph,
    f1: &DegreeBudget,
    max_vertices: usize,
) -> Result<VertexSet> {
    f1.check_len(g)?;
    let n = g.vertex_count();
    let h = f1.as_slice();
    let forced: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) < h[v]).collect();
    let free: Vec<Vertex> = g
        .vertices()
        .filter(|&v| h[v] > 0 && g.degree(v) >= h[v])
        .collect();
    if free.len() > max_vertices {
        return Err(Error::BudgetExceeded {
            needed: free.len() as u128,
            budget: max_vertices as u128,
        });
    }
    let mut mask = vec![false; n];
    for size in (0..=free.len()).rev() {
        for chosen in free.iter().copied().combinations(size) {
            mask.iter_mut().for_each(|m| *m = false);
            for &v in forced.iter().chain(&chosen) {
                mask[v] = true;
            }
            if is_strictly_degenerate_within(g, &mask, h) {
                return Ok(VertexSet::from_mask(&mask));
            }
        }
    }
    Err(Error::Invariant(
        "the empty set is always strictly degenerate".into(),
    ))
}

/// Lexicographic potential `(-|G_1 ∩ G1*|, |K|, m)`, stored as the
/// non-negated overlap and compared accordingly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Potential {
    pub overlap: usize,
    pub bad_components: usize,
    pub distance: usize,
}

impl Potential {
    fn key(&self) -> (std::cmp::Reverse<usize>, usize, usize) {
        (
            std::cmp::Reverse(self.overlap),
            self.bad_components,
            self.distance,
        )
    }

    pub fn is_below(&self, other: &Potential) -> bool {
        self.key() < other.key()
    }
}

impl fmt::Display for Potential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(-{}, {}, {})",
            self.overlap, self.bad_components, self.distance
        )
    }
}

/// One swap of the exchange loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeStep {
    pub v_star: Vertex,
    /// The vertex leaving `G1*`: `w*` when `m = 1`, else `u*`.
    pub removed: Vertex,
    pub w_star: Vertex,
    pub bad_components: usize,
    pub distance: usize,
    pub potential: Potential,
    /// `G1*` after the swap.
    pub g1_star: VertexSet,
}

/// Record of one [`exchange_to_max`] run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExchangeTrace {
    pub max_order: usize,
    pub initial_g1_star: VertexSet,
    pub steps: Vec<ExchangeStep>,
}

impl ExchangeTrace {
    pub fn iterations(&self) -> usize {
        self.steps.len()
    }

    /// `n (n + 2)^2`.
    pub fn iteration_cap(n: usize) -> usize {
        n * (n + 2) * (n + 2)
    }

    /// `iter k: v*=..., removed=..., |K|=..., m=..., potential=(a,b,c)`,
    /// 1-based vertex ids.
    pub fn lines(&self) -> Vec<String> {
        self.steps
            .iter()
            .enumerate()
            .map(|(k, s)| {
                format!(
                    "iter {}: v*={}, removed={}, |K|={}, m={}, potential={}",
                    k + 1,
                    s.v_star + 1,
                    s.removed + 1,
                    s.bad_components,
                    s.distance,
                    s.potential
                )
            })
            .collect()
    }
}

/// State of the loop for the current `G1*`.
enum Probe {
    /// `G2*` is partitionable; parts indexed from 1 (0 is `G1*`).
    Done(Vec<usize>),
    Stuck {
        bad: Vec<ComponentOutcome>,
    },
}

struct Engine<'a> {
    g: &'a Hypergraph,
    f: &'a VectorFunction,
    tail: VectorFunction,
    first: Vec<usize>,
    tail_sum: Vec<usize>,
    base_first: VertexSet,
}

impl<'a> Engine<'a> {
    fn new(g: &'a Hypergraph, f: &'a VectorFunction, base: &Partition) -> Result<Self> {
        f.check_hypothesis(g)?;
        if f.parts() < 2 {
            return Err(Error::Precondition(
                "the exchange needs at least two parts".into(),
            ));
        }
        if !crate::solver::verify_partition(g, f, base) {
            return Err(Error::InvalidPartition);
        }
        Ok(Self {
            g,
            f,
            tail: f.drop_first()?,
            first: f.coordinate(0).as_slice().to_vec(),
            tail_sum: g.vertices().map(|v| f.total(v) - f.get(v, 0)).collect(),
            base_first: base.members(0),
        })
    }

    fn probe(&self, g1_star: &VertexSet) -> Result<Probe> {
        let g = self.g;
        let n = g.vertex_count();
        let rest: VertexSet = g.vertices().filter(|&v| !g1_star.contains(v)).collect();
        let rest_mask = rest.mask(n);
        // Every vertex outside a maximal G1* is already saturated by it, so
        // the remaining budgets cover the remaining degrees.
        for v in &rest {
            if g.degree_within(v, &rest_mask) > self.tail_sum[v] {
                return Err(Error::Invariant(format!(
                    "vertex {} has more remaining degree than remaining budget",
                    v + 1
                )));
            }
        }
        let local = g.induced(&rest)?;
        let outcome = solve(
            &local.graph,
            &self.tail.restrict(&local.ids),
            SolveOptions::default(),
        )?;
        if let Some(partition) = outcome.partition() {
            let mut part_of = vec![0usize; n];
            for (i, &v) in local.ids.iter().enumerate() {
                part_of[v] = partition.part_of(i) + 1;
            }
            return Ok(Probe::Done(part_of));
        }
        let mut bad = Vec::new();
        for comp in outcome.components {
            if let Verdict::Obstruction(cert) = comp.verdict {
                let vertices = local.to_ambient(&comp.vertices);
                let cert: HardPairCertificate = cert.relabel(&local.ids);
                bad.push(ComponentOutcome {
                    verdict: Verdict::Obstruction(cert),
                    vertices,
                });
            }
        }
        for comp in &bad {
            let mask = comp.vertices.mask(n);
            if comp
                .vertices
                .iter()
                .any(|v| g.degree_within(v, &mask) != self.tail_sum[v])
            {
                return Err(Error::Invariant("a bad component is not regular".into()));
            }
            if comp.vertices.intersection_len(&self.base_first) == 0 {
                return Err(Error::Invariant(
                    "a bad component misses the first part of the base partition".into(),
                ));
            }
        }
        Ok(Probe::Stuck { bad })
    }

    /// Minimum over `(v*, w*)` of the witness distance, as
    /// `(m, v*, w*, core)`; ties go to the smallest `(v*, w*)`.
    fn best_triple(
        &self,
        g1_star: &VertexSet,
        bad: &[ComponentOutcome],
    ) -> Result<(usize, Vertex, Vertex, VertexSet)> {
        let g = self.g;
        let n = g.vertex_count();
        let candidates: VertexSet = bad
            .iter()
            .flat_map(|c| c.vertices.iter())
            .filter(|&v| self.base_first.contains(v))
            .collect();
        let mut best: Option<(usize, Vertex, Vertex, VertexSet)> = None;
        for v_star in &candidates {
            let core = witness_core_within(g, g1_star, v_star, &self.first)
                .map_err(|e| Error::Invariant(e.to_string()))?;
            if !core.contains(v_star) {
                return Err(Error::Invariant("witness core misses v*".into()));
            }
            let core_mask = core.mask(n);
            let dist = g.distances_within(v_star, &core_mask);
            let mut found = false;
            for w_star in core.iter().filter(|&w| !self.base_first.contains(w)) {
                found = true;
                let m = dist[w_star]
                    .ok_or_else(|| Error::Invariant("witness core is disconnected".into()))?;
                let better = match &best {
                    None => true,
                    Some((bm, bv, bw, _)) => (m, v_star, w_star) < (*bm, *bv, *bw),
                };
                if better {
                    best = Some((m, v_star, w_star, core.clone()));
                }
            }
            if !found {
                return Err(Error::Invariant(
                    "witness core lies inside the first base part".into(),
                ));
            }
        }
        best.ok_or_else(|| Error::Invariant("no bad component meets the first base part".into()))
    }
}

/// Turns a valid `f`-partition into one whose first part is a maximum-order
/// strictly `f_1`-degenerate subhypergraph.
///
/// Each round looks at the bad components of `G2*`. For every `v*` in them
/// that belongs to the first part of `base`, `H` is the stuck core of
/// `G1* + v*` under `f_1` and `w*` ranges over `H` outside that part. With
/// `m` the least `dist_H(v*, w*)`: if `m = 1`, `w*` is swapped out; else the
/// first vertex `u*` after `v*` on the lexicographically smallest shortest
/// `(v*, w*)`-path in `H` is.
pub fn exchange_to_max(
    g: &Hypergraph,
    f: &VectorFunction,
    base: &Partition,
) -> Result<(Partition, ExchangeTrace)> {
    exchange_to_max_with_limit(g, f, base, DEFAULT_MAX_ORDER_VERTICES)
}

pub fn exchange_to_max_with_limit(
    g: &Hypergraph,
    f: &VectorFunction,
    base: &Partition,
    max_vertices: usize,
) -> Result<(Partition, ExchangeTrace)> {
    let engine = Engine::new(g, f, base)?;
    let lex_max = max_strictly_degenerate_subhypergraph(g, &f.coordinate(0), max_vertices)?;
    let max_order = lex_max.len();
    let start = if engine.base_first.len() == max_order {
        engine.base_first.clone()
    } else {
        lex_max
    };
    run_exchange(&engine, base, start, max_order)
}

/// Like [`exchange_to_max`], but the loop starts from `start`, which must
/// be a maximum-order strictly `f_1`-degenerate vertex set.
pub fn exchange_from(
    g: &Hypergraph,
    f: &VectorFunction,
    base: &Partition,
    start: &VertexSet,
    max_vertices: usize,
) -> Result<(Partition, ExchangeTrace)> {
    let engine = Engine::new(g, f, base)?;
    let n = g.vertex_count();
    if start.iter().any(|v| v >= n) {
        return Err(Error::Precondition(
            "start set names a missing vertex".into(),
        ));
    }
    let max_order = max_strictly_degenerate_subhypergraph(g, &f.coordinate(0), max_vertices)?.len();
    if start.len() != max_order || !is_strictly_degenerate_within(g, &start.mask(n), &engine.first)
    {
        return Err(Error::Precondition(
            "start set is not a maximum strictly degenerate set".into(),
        ));
    }
    run_exchange(&engine, base, start.clone(), max_order)
}

fn run_exchange(
    engine: &Engine<'_>,
    base: &Partition,
    start: VertexSet,
    max_order: usize,
) -> Result<(Partition, ExchangeTrace)> {
    let g = engine.g;
    let n = g.vertex_count();
    let mut g1_star = start;
    let mut trace = ExchangeTrace {
        max_order,
        initial_g1_star: g1_star.clone(),
        steps: Vec::new(),
    };
    if g1_star == engine.base_first {
        return Ok((base.clone(), trace));
    }

    let cap = ExchangeTrace::iteration_cap(n);
    let mut previous: Option<Potential> = None;
    loop {
        let bad = match engine.probe(&g1_star)? {
            Probe::Done(mut part_of) => {
                for v in &g1_star {
                    part_of[v] = 0;
                }
                return Ok((Partition::new(engine.f.parts(), part_of)?, trace));
            }
            Probe::Stuck { bad } => bad,
        };
        if trace.steps.len() >= cap {
            return Err(Error::Invariant(format!(
                "exchange exceeded {cap} iterations"
            )));
        }
        let (m, v_star, w_star, core) = engine.best_triple(&g1_star, &bad)?;
        let potential = Potential {
            overlap: g1_star.intersection_len(&engine.base_first),
            bad_components: bad.len(),
            distance: m,
        };
        if let Some(prev) = previous {
            if !potential.is_below(&prev) {
                return Err(Error::Invariant(format!(
                    "potential did not decrease: {potential} after {prev}"
                )));
            }
        }
        previous = Some(potential);

        let removed = if m == 1 {
            w_star
        } else {
            let core_mask = core.mask(n);
            let to_target = g.distances_within(w_star, &core_mask);
            let shares_edge = |u: Vertex| {
                g.incident_edges(v_star)
                    .iter()
                    .any(|&e| g.edge_inside(e, &core_mask) && g.edges()[e].contains(&u))
            };
            core.iter()
                .find(|&u| u != v_star && to_target[u] == Some(m - 1) && shares_edge(u))
                .ok_or_else(|| Error::Invariant("no shortest path leaves v*".into()))?
        };
        g1_star.insert(v_star);
        g1_star.remove(removed);
        if g1_star.len() != max_order
            || !is_strictly_degenerate_within(g, &g1_star.mask(n), &engine.first)
        {
            return Err(Error::Invariant(
                "swapped set is not a maximum strictly degenerate set".into(),
            ));
        }
        trace.steps.push(ExchangeStep {
            v_star,
            removed,
            w_star,
            bad_components: bad.len(),
            distance: m,
            potential,
            g1_star: g1_star.clone(),
        });
    }
}

/// One level of [`sequential_max_partition`]: the first part fixed and the
/// trace of the exchange that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    /// Vertex ids of the hypergraph the exchange ran on (ambient ids).
    pub domain: VertexSet,
    pub part: VertexSet,
    pub trace: ExchangeTrace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequentialOutcome {
    pub outcome: SolveOutcome,
    /// Per component, the exchange levels `1..p-1` (empty for obstructions).
    pub levels: Vec<Vec<Level>>,
}

impl SequentialOutcome {
    pub fn trace_lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (c, levels) in self.levels.iter().enumerate() {
            for (i, level) in levels.iter().enumerate() {
                out.push(format!("# component {} part {}", c + 1, i + 1));
                out.extend(level.trace.lines());
            }
        }
        out
    }
}

/// An `f`-partition in which, for `i = 1, ..., p-1`, part `i` is a
/// maximum-order strictly `f_i`-degenerate subhypergraph of what parts
/// `1..i-1` leave over. Hard components are reported as obstructions.
pub fn sequential_max_partition(g: &Hypergraph, f: &VectorFunction) -> Result<SequentialOutcome> {
    sequential_max_partition_with_limit(g, f, DEFAULT_MAX_ORDER_VERTICES)
}

pub fn sequential_max_partition_with_limit(
    g: &Hypergraph,
    f: &VectorFunction,
    max_vertices: usize,
) -> Result<SequentialOutcome> {
    let mut outcome = solve(g, f, SolveOptions::default())?;
    let mut all_levels = Vec::with_capacity(outcome.components.len());
    for comp in &mut outcome.components {
        let Verdict::Partitioned(parts) = &comp.verdict else {
            all_levels.push(Vec::new());
            continue;
        };
        let local = g.induced(&comp.vertices)?;
        let fl = f.restrict(&local.ids);
        let seed = Partition::new(f.parts(), parts.clone())?;
        let (final_parts, levels) = maximize_levels(&local.graph, &fl, seed, max_vertices)?;
        comp.verdict = Verdict::Partitioned(final_parts);
        all_levels.push(
            levels
                .into_iter()
                .map(|l| Level {
                    domain: local.to_ambient(&l.domain),
                    part: local.to_ambient(&l.part),
                    trace: l.trace,
                })
                .collect(),
        );
    }
    Ok(SequentialOutcome {
        outcome,
        levels: all_levels,
    })
}

/// Runs the exchange on `g`, fixes the first part, and repeats on the rest
/// with `(f_2, ..., f_p)`, reusing the partition found for the rest.
fn maximize_levels(
    g: &Hypergraph,
    f: &VectorFunction,
    seed: Partition,
    max_vertices: usize,
) -> Result<(Vec<usize>, Vec<Level>)> {
    let n = g.vertex_count();
    let p = f.parts();
    let mut part_of = vec![p - 1; n];
    let mut levels = Vec::new();
    let mut domain = VertexSet::full(n);
    let mut graph = g.clone();
    let mut ids: Vec<Vertex> = g.vertices().collect();
    let mut budget = f.clone();
    let mut current = seed;
    for level in 0..p.saturating_sub(1) {
        let (improved, trace) =
            exchange_to_max_with_limit(&graph, &budget, &current, max_vertices)?;
        let first = improved.members(0);
        for v in &first {
            part_of[ids[v]] = level;
        }
        levels.push(Level {
            domain: domain.clone(),
            part: first.iter().map(|v| ids[v]).collect(),
            trace,
        });
        let rest: VertexSet = graph.vertices().filter(|&v| !first.contains(v)).collect();
        let local = graph.induced(&rest)?;
        let tail = budget.restrict(&local.ids).drop_first()?;
        // Maximality of the first part leaves every remaining vertex with
        // enough budget for its remaining degree.
        if let Some(v) = tail.hypothesis_violation(&local.graph) {
            return Err(Error::Invariant(format!(
                "vertex {} lost budget coverage after fixing part {}",
                ids[local.ids[v]] + 1,
                level + 1
            )));
        }
        let next_seed: Vec<usize> = local.ids.iter().map(|&v| improved.part_of(v) - 1).collect();
        current = Partition::new(tail.parts(), next_seed)?;
        ids = local.ids.iter().map(|&v| ids[v]).collect();
        domain = ids.iter().copied().collect();
        graph = local.graph;
        budget = tail;
    }
    for (local, &v) in ids.iter().enumerate() {
        part_of[v] = p - 1 + current.part_of(local);
    }
    Ok((part_of, levels))
}

/// Constant budgets `f_i(v) = d_i`, delegated to
/// [`sequential_max_partition`]. Requires a connected hypergraph with
/// `Δ >= 1`, `p >= 2`, all `d_i >= 1` and `d_1 + ... + d_p >= Δ`.
pub fn corollary_partition(g: &Hypergraph, d: &[usize]) -> Result<SequentialOutcome> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let max_degree = g.max_degree();
    if max_degree == 0 {
        return Err(Error::Precondition(
            "maximum degree must be at least 1".into(),
        ));
    }
    if d.len() < 2 || d.contains(&0) {
        return Err(Error::Precondition("need p >= 2 positive values".into()));
    }
    if d.iter().sum::<usize>() < max_degree {
        return Err(Error::Precondition(format!(
            "values sum to {} below the maximum degree {max_degree}",
            d.iter().sum::<usize>()
        )));
    }
    sequential_max_partition(g, &VectorFunction::constant(g.vertex_count(), d)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{greedy_partition, verify_partition};

    fn vf(n: usize, row: &[usize]) -> VectorFunction {
        VectorFunction::constant(n, row).unwrap()
    }

    fn k4_minus_edge() -> Hypergraph {
        Hypergraph::new(4, [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3]]).unwrap()
    }

    #[test]
    fn max_order_examples() {
        let c5 = Hypergraph::cycle(1, 5).unwrap();
        let s =
            max_strictly_degenerate_subhypergraph(&c5, &DegreeBudget::constant(5, 2), 20).unwrap();
        assert_eq!(s.as_slice(), &[0, 1, 2, 3]);
        let s =
            max_strictly_degenerate_subhypergraph(&c5, &DegreeBudget::constant(5, 1), 20).unwrap();
        assert_eq!(s.as_slice(), &[0, 2]);
        let k4 = Hypergraph::complete(2, 4).unwrap();
        let all =
            max_strictly_degenerate_subhypergraph(&k4, &DegreeBudget::constant(4, 7), 20).unwrap();
        assert_eq!(all, VertexSet::full(4));
        assert!(
            max_strictly_degenerate_subhypergraph(&c5, &DegreeBudget::constant(5, 1), 3).is_err()
        );
    }

    #[test]
    fn exchange_on_c5() {
        let c5 = Hypergraph::cycle(1, 5).unwrap();
        let f = vf(5, &[2, 1]);
        let base = greedy_partition(&c5, &f).unwrap();
        let (p, trace) = exchange_to_max(&c5, &f, &base).unwrap();
        assert!(verify_partition(&c5, &f, &p));
        assert_eq!(p.part_sizes(), vec![4, 1]);
        assert_eq!(trace.max_order, 4);
    }

    #[test]
    fn exchange_keeps_a_maximal_base() {
        let c5 = Hypergraph::cycle(1, 5).unwrap();
        let f = vf(5, &[2, 1]);
        let base = Partition::new(2, vec![1, 0, 0, 0, 0]).unwrap();
        let (p, trace) = exchange_to_max(&c5, &f, &base).unwrap();
        assert_eq!(p, base);
        assert_eq!(trace.iterations(), 0);
    }

    #[test]
    fn exchange_on_k4_minus_edge() {
        let g = k4_minus_edge();
        let f = vf(4, &[1, 1, 1]);
        let base = Partition::new(3, vec![0, 1, 2, 2]).unwrap();
        assert!(verify_partition(&g, &f, &base));
        let (p, _) = exchange_to_max(&g, &f, &base).unwrap();
        assert!(verify_partition(&g, &f, &p));
        assert_eq!(p.members(0).as_slice(), &[2, 3]);
    }

    #[test]
    fn exchange_rejects_bad_input() {
        let c5 = Hypergraph::cycle(1, 5).unwrap();
        let bad = Partition::new(2, vec![0; 5]).unwrap();
        assert_eq!(
            exchange_to_max(&c5, &vf(5, &[1, 1]), &bad).unwrap_err(),
            Error::InvalidPartition
        );
        let one = Partition::new(1, vec![0; 5]).unwrap();
        assert!(exchange_to_max(&c5, &vf(5, &[3]), &one).is_err());
    }

    #[test]
    fn sequential_examples() {
        let c5 = Hypergraph::cycle(1, 5).unwrap();
        let out = sequential_max_partition(&c5, &vf(5, &[2, 1])).unwrap();
        assert_eq!(out.outcome.partition().unwrap().part_sizes(), vec![4, 1]);

        let out = sequential_max_partition(&c5, &vf(5, &[1, 1])).unwrap();
        assert_eq!(out.outcome.obstructions().count(), 1);

        let g = k4_minus_edge();
        let out = sequential_max_partition(&g, &vf(4, &[1, 1, 1])).unwrap();
        assert_eq!(out.outcome.partition().unwrap().part_sizes(), vec![2, 1, 1]);
    }

    #[test]
    fn constant_budget_examples() {
        let k4 = Hypergraph::complete(1, 4).unwrap();
        assert_eq!(
            corollary_partition(&k4, &[1, 1, 1])
                .unwrap()
                .outcome
                .obstructions()
                .count(),
            1
        );
        let c7 = Hypergraph::cycle(1, 7).unwrap();
        assert_eq!(
            corollary_partition(&c7, &[1, 1])
                .unwrap()
                .outcome
                .obstructions()
                .count(),
            1
        );
        let c6 = Hypergraph::cycle(1, 6).unwrap();
        let out = corollary_partition(&c6, &[1, 1]).unwrap();
        assert_eq!(out.outcome.partition().unwrap().part_sizes(), vec![3, 3]);
        assert!(corollary_partition(&c6, &[1]).is_err());
        assert!(corollary_partition(&c6, &[1, 0]).is_err());
        assert!(corollary_partition(&Hypergraph::edgeless(1), &[1, 1]).is_err());
    }
}
