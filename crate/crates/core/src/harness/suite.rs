//! Named verification suites. Each criterion produces a [`CriterionReport`];
//! `hyperpart suite` and the `acceptance` test target print one line per
//! report.

use std::fmt;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::graphs::{connected_simple_graphs, random_bounded_degree_graph};
use super::{
    all_tight, compositions, random_budgets, random_composition, random_connected_hypergraph,
    tight_count,
};
use crate::budget::{DegreeBudget, VectorFunction};
use crate::degeneracy::{
    coloring_number, is_strictly_degenerate_within, peel, peel_randomized, replay_order, PeelResult,
};
use crate::error::{Error, Result};
use crate::exchange::{
    corollary_partition, exchange_from, exchange_to_max, sequential_max_partition, ExchangeTrace,
    DEFAULT_MAX_ORDER_VERTICES,
};
use crate::hardpair::{
    check_certificate, is_tight, merge_pairs, recognize, CertificateKind, HardPairCertificate,
};
use crate::hypergraph::{Hypergraph, Vertex, VertexSet};
use crate::solver::{brute_force_partitionable, solve, verify_partition, Partition, SolveOptions};

const ORACLE_BUDGET: u128 = crate::solver::DEFAULT_BRUTE_FORCE_BUDGET;
const KEPT_FAILURES: usize = 20;

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: &'static str,
    pub name: &'static str,
    pub checked: usize,
    pub failure_count: usize,
    /// The first few failure messages.
    pub failures: Vec<String>,
    pub elapsed: Duration,
    pub time_limit: Option<Duration>,
    pub detail: String,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
            && self.checked > 0
            && self.time_limit.is_none_or(|limit| self.elapsed < limit)
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {:<16} checked={} failures={} time={:.1}s",
            self.id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.checked,
            self.failure_count,
            self.elapsed.as_secs_f64()
        )?;
        if let Some(limit) = self.time_limit {
            write!(f, " (limit {}s)", limit.as_secs())?;
        }
        if !self.detail.is_empty() {
            write!(f, " {}", self.detail)?;
        }
        Ok(())
    }
}

struct Tally {
    checked: usize,
    failure_count: usize,
    failures: Vec<String>,
    started: Instant,
}

impl Tally {
    fn new() -> Self {
        Self {
            checked: 0,
            failure_count: 0,
            failures: Vec::new(),
            started: Instant::now(),
        }
    }

    fn record(&mut self, outcome: std::result::Result<(), String>) {
        self.checked += 1;
        if let Err(message) = outcome {
            self.failure_count += 1;
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(message);
            }
        }
    }

    fn finish(
        self,
        id: &'static str,
        name: &'static str,
        limit: Option<Duration>,
        detail: String,
    ) -> CriterionReport {
        CriterionReport {
            id,
            name,
            checked: self.checked,
            failure_count: self.failure_count,
            failures: self.failures,
            elapsed: self.started.elapsed(),
            time_limit: limit,
            detail,
        }
    }
}

fn describe(g: &Hypergraph, f: &VectorFunction) -> String {
    let edges: Vec<String> = g
        .edges()
        .iter()
        .map(|e| {
            e.iter()
                .map(|v| (v + 1).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    let rows: Vec<String> = f.rows().iter().map(|r| format!("{r:?}")).collect();
    format!(
        "n={} edges=[{}] f=[{}]",
        g.vertex_count(),
        edges.join(", "),
        rows.join(" ")
    )
}

fn err(e: Error) -> String {
    e.to_string()
}

/// Exhaustive-subset oracle: is `G[set]` strictly `h`-degenerate? Removes
/// low-degree vertices until none is left or none qualifies.
fn degenerate_mask(g: &Hypergraph, set: u32, h: &[usize]) -> bool {
    let mut s = set;
    while s != 0 {
        let inside = |e: &[Vertex]| e.iter().all(|&v| s >> v & 1 == 1);
        let low = (0..g.vertex_count()).find(|&v| {
            s >> v & 1 == 1
                && g.incident_edges(v)
                    .iter()
                    .filter(|&&e| inside(&g.edges()[e]))
                    .count()
                    < h[v]
        });
        match low {
            Some(v) => s &= !(1 << v),
            None => return false,
        }
    }
    true
}

/// Every maximum-order vertex set inducing a strictly `h`-degenerate
/// subhypergraph.
fn maximum_sets(g: &Hypergraph, h: &[usize]) -> Vec<VertexSet> {
    let good: Vec<u32> = (0u32..1 << g.vertex_count())
        .filter(|&s| degenerate_mask(g, s, h))
        .collect();
    let best = good.iter().map(|s| s.count_ones()).max().unwrap_or(0);
    good.into_iter()
        .filter(|s| s.count_ones() == best)
        .map(|s| g.vertices().filter(|&v| s >> v & 1 == 1).collect())
        .collect()
}

/// Largest order of a strictly `h`-degenerate induced subhypergraph, by
/// enumerating every vertex subset.
fn max_order_oracle(g: &Hypergraph, h: &[usize]) -> usize {
    (0u32..1 << g.vertex_count())
        .filter(|&s| degenerate_mask(g, s, h))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Solver, brute force and recognizer agree on a connected pair. Returns
/// whether the pair is partitionable.
fn dichotomy_check(g: &Hypergraph, f: &VectorFunction) -> std::result::Result<bool, String> {
    let outcome = solve(g, f, SolveOptions::default()).map_err(err)?;
    let brute = brute_force_partitionable(g, f, ORACLE_BUDGET).map_err(err)?;
    let hard = recognize(g, f).map_err(err)?;
    let solved = outcome.is_partitioned();
    if solved != brute.is_some() || solved != hard.is_none() {
        return Err(format!(
            "disagreement: solve={solved} brute={} hard={} on {}",
            brute.is_some(),
            hard.is_some(),
            describe(g, f)
        ));
    }
    if let Some(p) = &brute {
        if !verify_partition(g, f, p) {
            return Err(format!(
                "brute-force partition fails verification on {}",
                describe(g, f)
            ));
        }
    }
    if solved {
        let p = outcome
            .partition()
            .ok_or("partitioned outcome without a partition")?;
        if !verify_partition(g, f, &p) {
            return Err(format!(
                "solver partition fails verification on {}",
                describe(g, f)
            ));
        }
    } else {
        if !is_tight(g, f) {
            return Err(format!(
                "obstruction on a pair that is not tight: {}",
                describe(g, f)
            ));
        }
        for cert in outcome.obstructions().chain(hard.as_ref()) {
            check_certificate(g, f, cert)
                .map_err(|e| format!("certificate rejected ({e}) on {}", describe(g, f)))?;
        }
    }
    Ok(solved)
}

/// AC1: solve, brute force and the recognizer agree on small instances.
pub fn ac1_dichotomy() -> CriterionReport {
    let mut tally = Tally::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0xac1);
    let (mut partitioned, mut hard) = (0usize, 0usize);
    let mut run = |tally: &mut Tally, g: &Hypergraph, f: &VectorFunction| {
        let outcome = dichotomy_check(g, f);
        match outcome {
            Ok(true) => partitioned += 1,
            Ok(false) => hard += 1,
            Err(_) => {}
        }
        tally.record(outcome.map(|_| ()));
    };

    for n in 1..=5 {
        for g in connected_simple_graphs(n) {
            for f in all_tight(&g, 2) {
                run(&mut tally, &g, &f);
            }
            if tight_count(&g, 3) <= 5000 {
                for f in all_tight(&g, 3) {
                    run(&mut tally, &g, &f);
                }
            } else {
                for _ in 0..500 {
                    run(&mut tally, &g, &random_budgets(&mut rng, &g, 3, 0));
                }
            }
            for p in [2, 3] {
                for _ in 0..20 {
                    run(&mut tally, &g, &random_budgets(&mut rng, &g, p, 2));
                }
            }
        }
    }

    for i in 0..600 {
        let n = rng.gen_range(2..=7);
        let g = random_connected_hypergraph(&mut rng, n, 3, 2);
        let p = rng.gen_range(2..=3);
        let slack = if i % 2 == 0 { 0 } else { 2 };
        run(&mut tally, &g, &random_budgets(&mut rng, &g, p, slack));
    }

    let mut families = Vec::new();
    for t in 1..=2 {
        for n in 3..=6 {
            families.push(Hypergraph::complete(t, n).expect("valid family"));
            families.push(Hypergraph::cycle(t, n).expect("valid family"));
        }
        for (a, b) in [(3, 3), (3, 4), (4, 3)] {
            let left = Hypergraph::complete(t, a).expect("valid family");
            let right = Hypergraph::cycle(t, b + 2).expect("valid family");
            families.push(
                Hypergraph::merge_at(&left, 0, &right, 0)
                    .expect("valid merge")
                    .graph,
            );
        }
    }
    for g in &families {
        for p in [2, 3] {
            if p == 2 || g.vertex_count() <= 6 {
                for row in compositions(g.max_degree(), p) {
                    if let Ok(f) = VectorFunction::constant(g.vertex_count(), &row) {
                        if f.hypothesis_violation(g).is_none() {
                            run(&mut tally, g, &f);
                        }
                    }
                }
            }
            for _ in 0..10 {
                run(&mut tally, g, &random_budgets(&mut rng, g, p, 0));
            }
        }
    }

    let detail = format!("partitionable={partitioned} hard={hard}");
    tally.finish("AC1", "dichotomy", Some(Duration::from_secs(300)), detail)
}

/// AC2: budgeted complete multigraphs are obstructions and stop being so
/// after one edge is deleted.
pub fn ac2_complete_family() -> CriterionReport {
    let mut tally = Tally::new();
    for delta in 3..=5usize {
        for t in 1..=2usize {
            if delta % t != 0 {
                continue;
            }
            let n = delta / t + 1;
            let g = Hypergraph::complete(t, n).expect("valid family");
            let mut reduced_edges = g.edges().to_vec();
            reduced_edges.remove(0);
            let reduced = Hypergraph::new(n, reduced_edges).expect("valid edges");
            for p in 2..n {
                for counts in compositions(n - 1, p) {
                    if counts.iter().filter(|&&c| c > 0).count() < 2 {
                        continue;
                    }
                    let row: Vec<usize> = counts.iter().map(|c| t * c).collect();
                    let f = VectorFunction::constant(n, &row).expect("valid row");
                    tally.record(complete_case(&g, &reduced, &f, t, &counts));
                }
            }
        }
    }
    tally.finish("AC2", "complete-family", None, String::new())
}

fn complete_case(
    g: &Hypergraph,
    reduced: &Hypergraph,
    f: &VectorFunction,
    t: usize,
    counts: &[usize],
) -> std::result::Result<(), String> {
    if dichotomy_check(g, f)? {
        return Err(format!("expected an obstruction on {}", describe(g, f)));
    }
    let outcome = solve(g, f, SolveOptions::default()).map_err(err)?;
    let kinds: Vec<&CertificateKind> = outcome.obstructions().map(|c| &c.kind).collect();
    let expected = CertificateKind::Complete {
        t,
        n: g.vertex_count(),
        counts: counts.to_vec(),
    };
    if kinds != [&expected] {
        return Err(format!(
            "unexpected certificate {kinds:?} on {}",
            describe(g, f)
        ));
    }
    if !dichotomy_check(reduced, f)? {
        return Err(format!(
            "deleting an edge left an obstruction: {}",
            describe(reduced, f)
        ));
    }
    Ok(())
}

/// AC3: budgeted multicycles are obstructions exactly when odd.
pub fn ac3_cycles() -> CriterionReport {
    let mut tally = Tally::new();
    for t in 1..=2usize {
        for n in 3..=9usize {
            let g = Hypergraph::cycle(t, n).expect("valid family");
            for p in 2..=3usize {
                for k in 0..p {
                    for l in k + 1..p {
                        let mut row = vec![0; p];
                        row[k] = t;
                        row[l] = t;
                        let f = VectorFunction::constant(n, &row).expect("valid row");
                        tally.record(cycle_case(&g, &f, t, n, (k, l)));
                    }
                }
            }
        }
    }
    tally.finish("AC3", "cycles", None, String::new())
}

fn cycle_case(
    g: &Hypergraph,
    f: &VectorFunction,
    t: usize,
    n: usize,
    (k, l): (usize, usize),
) -> std::result::Result<(), String> {
    let partitionable = dichotomy_check(g, f)?;
    if partitionable == (n % 2 == 1) {
        return Err(format!(
            "odd={} but partitionable={partitionable} on {}",
            n % 2 == 1,
            describe(g, f)
        ));
    }
    if partitionable {
        return Ok(());
    }
    let outcome = solve(g, f, SolveOptions::default()).map_err(err)?;
    let cert = outcome.obstructions().next().ok_or("missing certificate")?;
    let ok = match &cert.kind {
        CertificateKind::Complete {
            t: ct,
            n: 3,
            counts,
        } if n == 3 => *ct == t && counts[k] == 1 && counts[l] == 1,
        CertificateKind::OddCycle {
            t: ct,
            n: cn,
            k: ck,
            l: cl,
        } => *ct == t && *cn == n && (*ck, *cl) == (k, l),
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(format!(
            "unexpected certificate {:?} on {}",
            cert.kind,
            describe(g, f)
        ))
    }
}

/// An exchange run kept for the mechanics check.
#[derive(Clone, Debug)]
pub struct TraceRecord {
    pub label: String,
    pub graph: Hypergraph,
    pub first: Vec<usize>,
    /// First part of the base partition, when known.
    pub base_first: Option<VertexSet>,
    pub trace: ExchangeTrace,
}

fn restrict_graph(
    g: &Hypergraph,
    keep: &VertexSet,
) -> std::result::Result<(Hypergraph, Vec<Vertex>), String> {
    let induced = g.induced(keep).map_err(err)?;
    Ok((induced.graph, induced.ids))
}

/// Records every level of a sequential run on a connected hypergraph.
fn collect_levels(
    g: &Hypergraph,
    f: &VectorFunction,
    levels: &[crate::exchange::Level],
    label: &str,
    out: &mut Vec<TraceRecord>,
) -> std::result::Result<(), String> {
    for (i, level) in levels.iter().enumerate() {
        let (graph, ids) = restrict_graph(g, &level.domain)?;
        out.push(TraceRecord {
            label: format!("{label} level {}", i + 1),
            graph,
            first: ids.iter().map(|&v| f.get(v, i)).collect(),
            base_first: None,
            trace: level.trace.clone(),
        });
    }
    Ok(())
}

/// Checks the part sizes of a sequential run against the subset oracle.
fn check_levels(
    g: &Hypergraph,
    f: &VectorFunction,
    partition: &Partition,
) -> std::result::Result<(), String> {
    let mut remaining = VertexSet::full(g.vertex_count());
    for i in 0..f.parts() - 1 {
        let (graph, ids) = restrict_graph(g, &remaining)?;
        let h: Vec<usize> = ids.iter().map(|&v| f.get(v, i)).collect();
        let best = max_order_oracle(&graph, &h);
        let part = partition.members(i);
        if part.len() != best {
            return Err(format!(
                "part {} has {} vertices, maximum is {best}, on {}",
                i + 1,
                part.len(),
                describe(g, f)
            ));
        }
        for v in &part {
            remaining.remove(v);
        }
    }
    Ok(())
}

fn max_order_case(
    g: &Hypergraph,
    f: &VectorFunction,
    every_base: bool,
    traces: &mut Vec<TraceRecord>,
    hard: &mut usize,
) -> std::result::Result<(), String> {
    let seq = sequential_max_partition(g, f).map_err(err)?;
    let brute = brute_force_partitionable(g, f, ORACLE_BUDGET).map_err(err)?;
    let Some(partition) = seq.outcome.partition() else {
        *hard += 1;
        return match brute {
            None => Ok(()),
            Some(_) => Err(format!(
                "obstruction reported on a partitionable pair {}",
                describe(g, f)
            )),
        };
    };
    let brute =
        brute.ok_or_else(|| format!("brute force finds no partition on {}", describe(g, f)))?;
    if !verify_partition(g, f, &partition) {
        return Err(format!(
            "sequential partition fails verification on {}",
            describe(g, f)
        ));
    }
    check_levels(g, f, &partition)?;
    let label = describe(g, f);
    collect_levels(g, f, &seq.levels[0], &label, traces)?;

    let (improved, trace) = exchange_to_max(g, f, &brute).map_err(err)?;
    if !verify_partition(g, f, &improved) {
        return Err(format!("exchange result fails verification on {label}"));
    }
    let best = max_order_oracle(g, f.coordinate(0).as_slice());
    if improved.members(0).len() != best {
        return Err(format!(
            "exchange from brute force gives part 1 of size {}, maximum is {best}, on {label}",
            improved.members(0).len()
        ));
    }
    traces.push(TraceRecord {
        label: format!("{label} from brute force"),
        graph: g.clone(),
        first: f.coordinate(0).as_slice().to_vec(),
        base_first: Some(brute.members(0)),
        trace,
    });
    if every_base {
        for base in all_partitions(g, f) {
            let (improved, trace) = exchange_to_max(g, f, &base).map_err(err)?;
            if !verify_partition(g, f, &improved) || improved.members(0).len() != best {
                return Err(format!(
                    "exchange from {:?} is not maximum on {label}",
                    base.assignment()
                ));
            }
            traces.push(TraceRecord {
                label: format!("{label} from {:?}", base.assignment()),
                graph: g.clone(),
                first: f.coordinate(0).as_slice().to_vec(),
                base_first: Some(base.members(0)),
                trace,
            });
        }
    }
    Ok(())
}

/// Every `f`-partition of a small hypergraph.
fn all_partitions(g: &Hypergraph, f: &VectorFunction) -> Vec<Partition> {
    let (n, p) = (g.vertex_count(), f.parts());
    let mut out = Vec::new();
    let mut digits = vec![0usize; n];
    loop {
        let candidate = Partition::new(p, digits.clone()).expect("digits below p");
        if verify_partition(g, f, &candidate) {
            out.push(candidate);
        }
        let Some(i) = (0..n).rev().find(|&i| digits[i] + 1 < p) else {
            return out;
        };
        digits[i] += 1;
        digits[i + 1..].iter_mut().for_each(|d| *d = 0);
    }
}

/// AC4: part sizes of sequential maximization match exhaustive maxima.
/// On graphs with at most six vertices the exchange also runs from every
/// valid base partition. Returns the exchange traces for [`ac6_exchange`].
pub fn ac4_max_order(max_n: usize) -> (CriterionReport, Vec<TraceRecord>) {
    let mut tally = Tally::new();
    let mut traces = Vec::new();
    let mut hard = 0;
    for n in 1..=max_n {
        for g in connected_simple_graphs(n) {
            let delta = g.max_degree();
            let mut rows: Vec<Vec<usize>> = Vec::new();
            for total in [delta, delta + 1] {
                rows.extend(compositions(total, 2));
            }
            rows.extend(compositions(delta, 3));
            for row in rows {
                let f = VectorFunction::constant(n, &row).expect("valid row");
                let every_base = n <= 6 && (row.len() == 2 || n <= 5);
                let outcome = max_order_case(&g, &f, every_base, &mut traces, &mut hard);
                tally.record(outcome);
            }
        }
    }
    let detail = format!("hard-skipped={hard} exchange-runs={}", traces.len());
    (
        tally.finish("AC4", "max-order", Some(Duration::from_secs(600)), detail),
        traces,
    )
}

fn subcubic_case(
    g: &Hypergraph,
    d: [usize; 2],
    traces: &mut Vec<TraceRecord>,
) -> std::result::Result<(), String> {
    let f = VectorFunction::constant(g.vertex_count(), &d).expect("valid row");
    let seq = corollary_partition(g, &d).map_err(err)?;
    let partition = seq
        .outcome
        .partition()
        .ok_or_else(|| format!("unexpected obstruction on {}", describe(g, &f)))?;
    let parts: Vec<VertexSet> = (0..2).map(|i| partition.members(i)).collect();
    for (i, part) in parts.iter().enumerate() {
        let (graph, _) = restrict_graph(g, part)?;
        let col = coloring_number(&graph);
        if col > d[i] {
            return Err(format!(
                "part {} has coloring number {col} > {} on {}",
                i + 1,
                d[i],
                describe(g, &f)
            ));
        }
    }
    let best = max_order_oracle(g, &vec![d[0]; g.vertex_count()]);
    if parts[0].len() != best {
        return Err(format!(
            "part 1 has {} vertices, maximum is {best}, on {}",
            parts[0].len(),
            describe(g, &f)
        ));
    }
    collect_levels(g, &f, &seq.levels[0], &describe(g, &f), traces)
}

/// AC5: subcubic graphs without `K_4` split into a maximum part of
/// coloring number at most `d_1` and a rest of coloring number at most `d_2`.
pub fn ac5_subcubic(instances: usize) -> (CriterionReport, Vec<TraceRecord>) {
    let mut tally = Tally::new();
    let mut traces = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0xac5);
    for _ in 0..instances {
        let n = rng.gen_range(5..=8);
        let g = random_bounded_degree_graph(&mut rng, n, 3);
        for d in [[1, 2], [2, 1]] {
            tally.record(subcubic_case(&g, d, &mut traces));
        }
    }
    (tally.finish("AC5", "subcubic", None, String::new()), traces)
}

fn check_trace(record: &TraceRecord) -> std::result::Result<(), String> {
    let g = &record.graph;
    let n = g.vertex_count();
    let trace = &record.trace;
    let fail = |what: String| Err(format!("{what} in run {}", record.label));
    if trace.iterations() > ExchangeTrace::iteration_cap(n) {
        return fail(format!("{} iterations exceed the cap", trace.iterations()));
    }
    let mut current = trace.initial_g1_star.clone();
    let mut previous = None;
    if current.len() != trace.max_order
        || !is_strictly_degenerate_within(g, &current.mask(n), &record.first)
    {
        return fail("initial set is not a maximum strictly degenerate set".into());
    }
    for (k, step) in trace.steps.iter().enumerate() {
        if let Some(base) = &record.base_first {
            if step.potential.overlap != current.intersection_len(base) {
                return fail(format!("iteration {} reports a wrong overlap", k + 1));
            }
        }
        if let Some(prev) = previous {
            if !step.potential.is_below(&prev) {
                return fail(format!(
                    "potential {} does not drop below {prev}",
                    step.potential
                ));
            }
        }
        previous = Some(step.potential);
        let mut expected = current.clone();
        expected.insert(step.v_star);
        expected.remove(step.removed);
        if step.g1_star != expected {
            return fail(format!("iteration {} is not the recorded swap", k + 1));
        }
        current = step.g1_star.clone();
        if current.len() != trace.max_order {
            return fail(format!("size changed at iteration {}", k + 1));
        }
        if !is_strictly_degenerate_within(g, &current.mask(n), &record.first) {
            return fail(format!(
                "set is not strictly degenerate after iteration {}",
                k + 1
            ));
        }
    }
    Ok(())
}

/// Exchange runs from every valid base partition of random hypergraphs
/// with near-tight budgets. Failures of the run itself come back as
/// messages.
pub fn exchange_stress(instances: usize) -> (Vec<TraceRecord>, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(0xac6);
    let mut traces = Vec::new();
    let mut failures = Vec::new();
    for _ in 0..instances {
        let p = rng.gen_range(2..=3);
        let (g, f) = if rng.gen_bool(0.5) {
            let n = rng.gen_range(3..=6);
            let g = random_connected_hypergraph(&mut rng, n, 3, 2);
            let f = random_budgets(&mut rng, &g, p, 1);
            (g, f)
        } else {
            // One unit of slack on a hard pair.
            let (g, f) = random_hard_pair(&mut rng, p);
            let v = rng.gen_range(0..g.vertex_count());
            let mut row = f.row(v).to_vec();
            row[rng.gen_range(0..p)] += 1;
            (g, f.with_row(v, row))
        };
        if g.vertex_count() > 7 || recognize(&g, &f).ok().flatten().is_some() {
            continue;
        }
        let maxima = maximum_sets(&g, f.coordinate(0).as_slice());
        for base in all_partitions(&g, &f) {
            for start in &maxima {
                match exchange_from(&g, &f, &base, start, DEFAULT_MAX_ORDER_VERTICES) {
                    Ok((improved, trace)) => {
                        if !verify_partition(&g, &f, &improved)
                            || improved.members(0).len() != start.len()
                        {
                            failures.push(format!(
                                "exchange from {:?} is not maximum on {}",
                                base.assignment(),
                                describe(&g, &f)
                            ));
                        }
                        traces.push(TraceRecord {
                            label: format!(
                                "{} from {:?} starting at {start:?}",
                                describe(&g, &f),
                                base.assignment()
                            ),
                            graph: g.clone(),
                            first: f.coordinate(0).as_slice().to_vec(),
                            base_first: Some(base.members(0)),
                            trace,
                        });
                    }
                    Err(e) => failures.push(format!("{e} on {}", describe(&g, &f))),
                }
            }
        }
    }
    (traces, failures)
}

/// AC6: every recorded exchange keeps its invariants. `run_failures` are
/// errors raised by the runs themselves.
pub fn ac6_exchange(traces: &[TraceRecord], run_failures: Vec<String>) -> CriterionReport {
    let mut tally = Tally::new();
    for failure in run_failures {
        tally.record(Err(failure));
    }
    for record in traces {
        tally.record(check_trace(record));
    }
    let active = traces.iter().filter(|r| r.trace.iterations() > 0).count();
    let longest = traces
        .iter()
        .map(|r| r.trace.iterations())
        .max()
        .unwrap_or(0);
    let total: usize = traces.iter().map(|r| r.trace.iterations()).sum();
    let far: usize = traces
        .iter()
        .map(|r| r.trace.steps.iter().filter(|s| s.distance >= 2).count())
        .sum();
    let detail = format!(
        "runs={} runs-with-swaps={active} swaps={total} far-swaps={far} longest={longest}",
        traces.len()
    );
    tally.finish("AC6", "exchange", None, detail)
}

/// AC7: randomized peeling always gets stuck on the same core.
pub fn ac7_core_determinism() -> CriterionReport {
    let mut tally = Tally::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0xac7);
    let mut nonempty = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=12);
        let g = super::random_hypergraph(&mut rng, n, 4, 2);
        let h = DegreeBudget::new(
            g.vertices()
                .map(|v| rng.gen_range(0..=g.degree(v) + 1))
                .collect(),
        );
        let reference = peel(&g, &h);
        if let PeelResult::Order(order) = &reference {
            tally.record(if replay_order(&g, &h, order) {
                Ok(())
            } else {
                Err("reference order does not replay".into())
            });
        }
        let core = reference.core();
        if !core.is_empty() {
            nonempty += 1;
        }
        let mask = core.mask(n);
        tally.record(
            if core.iter().all(|v| g.degree_within(v, &mask) >= h.get(v)) {
                Ok(())
            } else {
                Err(format!("core {core:?} has a removable vertex"))
            },
        );
        for _ in 0..1000 {
            let other = peel_randomized(&g, &h, &mut rng).core();
            tally.record(if other == core {
                Ok(())
            } else {
                Err(format!("core {other:?} differs from {core:?}"))
            });
        }
    }
    tally.finish(
        "AC7",
        "core-determinism",
        None,
        format!("nonempty-cores={nonempty}"),
    )
}

fn random_leaf<R: Rng>(rng: &mut R, p: usize) -> (Hypergraph, VectorFunction) {
    match rng.gen_range(0..3) {
        0 => {
            let g = loop {
                let n = rng.gen_range(2..=5);
                let g = random_connected_hypergraph(rng, n, 3, 2);
                if g.is_block() {
                    break g;
                }
            };
            let part = rng.gen_range(0..p);
            let rows = g
                .vertices()
                .map(|v| {
                    (0..p)
                        .map(|i| if i == part { g.degree(v) } else { 0 })
                        .collect()
                })
                .collect();
            let f = VectorFunction::new(p, rows).expect("rows have p entries");
            (g, f)
        }
        1 => {
            let t = rng.gen_range(1..=2);
            let n = rng.gen_range(3..=5);
            let counts = loop {
                let c = random_composition(rng, n - 1, p);
                if c.iter().filter(|&&x| x > 0).count() >= 2 {
                    break c;
                }
            };
            let row: Vec<usize> = counts.iter().map(|c| t * c).collect();
            let g = Hypergraph::complete(t, n).expect("valid family");
            let f = VectorFunction::constant(n, &row).expect("valid row");
            (g, f)
        }
        _ => {
            let t = rng.gen_range(1..=2);
            let n = if rng.gen_bool(0.5) { 5 } else { 7 };
            let k = rng.gen_range(0..p);
            let l = (k + rng.gen_range(1..p)) % p;
            let mut row = vec![0; p];
            row[k] = t;
            row[l] = t;
            let g = Hypergraph::cycle(t, n).expect("valid family");
            let f = VectorFunction::constant(n, &row).expect("valid row");
            (g, f)
        }
    }
}

/// A random hard pair glued from one to four leaves.
pub fn random_hard_pair<R: Rng>(rng: &mut R, p: usize) -> (Hypergraph, VectorFunction) {
    let (mut g, mut f) = random_leaf(rng, p);
    for _ in 0..rng.gen_range(0..=3) {
        let (leaf, leaf_f) = random_leaf(rng, p);
        let at = rng.gen_range(0..g.vertex_count());
        let leaf_at = rng.gen_range(0..leaf.vertex_count());
        let (merged, merged_f) =
            merge_pairs((&g, &f), at, (&leaf, &leaf_f), leaf_at).expect("valid merge");
        g = merged.graph;
        f = merged_f;
    }
    (g, f)
}

fn nth_node<'a>(
    cert: &'a mut HardPairCertificate,
    k: &mut usize,
) -> Option<&'a mut HardPairCertificate> {
    if *k == 0 {
        return Some(cert);
    }
    *k -= 1;
    match &mut cert.kind {
        CertificateKind::Merge { left, right, .. } => {
            if let Some(node) = nth_node(left, k) {
                return Some(node);
            }
            nth_node(right, k)
        }
        _ => None,
    }
}

fn node_count(cert: &HardPairCertificate) -> usize {
    2 * cert.leaf_count() - 1
}

fn pick_node<'a, R: Rng, F: Fn(&HardPairCertificate) -> bool>(
    rng: &mut R,
    cert: &'a mut HardPairCertificate,
    wanted: F,
) -> Option<&'a mut HardPairCertificate> {
    let total = node_count(cert);
    let candidates: Vec<usize> = (0..total)
        .filter(|&i| {
            let mut k = i;
            let mut probe = cert.clone();
            nth_node(&mut probe, &mut k).is_some_and(|node| wanted(node))
        })
        .collect();
    let &choice = candidates.get(rng.gen_range(0..candidates.len().max(1)))?;
    let mut k = choice;
    nth_node(cert, &mut k)
}

fn other_index<R: Rng>(rng: &mut R, p: usize, avoid: &[usize]) -> Option<usize> {
    let options: Vec<usize> = (0..p).filter(|i| !avoid.contains(i)).collect();
    (!options.is_empty()).then(|| options[rng.gen_range(0..options.len())])
}

fn mutate_leaf<R: Rng>(rng: &mut R, node: &mut HardPairCertificate, p: usize) {
    match &mut node.kind {
        CertificateKind::Block { part } => *part = other_index(rng, p, &[*part]).expect("p >= 2"),
        CertificateKind::Complete { t, n, counts } => match rng.gen_range(0..3) {
            0 => *t += 1,
            1 => *n += 1,
            _ => {
                let from = (0..p).find(|&i| counts[i] > 0).expect("non-zero count");
                let to = other_index(rng, p, &[from]).expect("p >= 2");
                counts[from] -= 1;
                counts[to] += 1;
            }
        },
        CertificateKind::OddCycle { t, n, k, l } => match rng.gen_range(0..3) {
            0 => *t += 1,
            1 => *n += 2,
            _ => match other_index(rng, p, &[*k, *l]) {
                Some(i) => *k = i,
                None => *t = t.saturating_sub(1),
            },
        },
        CertificateKind::Merge { .. } => unreachable!("leaves only"),
    }
}

/// Applies one random mutation; returns its category.
fn mutate<R: Rng>(rng: &mut R, cert: &mut HardPairCertificate, n: usize, p: usize) -> &'static str {
    let has_merge = cert.leaf_count() > 1;
    let choice = rng.gen_range(0..if has_merge { 3 } else { 2 });
    match choice {
        0 => {
            let node = pick_node(rng, cert, |c| {
                !matches!(c.kind, CertificateKind::Merge { .. })
            })
            .expect("a leaf");
            mutate_leaf(rng, node, p);
            "leaf-parameter"
        }
        1 => {
            let node = pick_node(rng, cert, |_| true).expect("a node");
            if let (CertificateKind::Merge { v_star, .. }, true) =
                (&mut node.kind, rng.gen_bool(0.3))
            {
                *v_star = (*v_star + rng.gen_range(1..n)) % n;
            } else {
                let pos = rng.gen_range(0..node.vertices.len());
                node.vertices[pos] = (node.vertices[pos] + rng.gen_range(1..n)) % n;
            }
            "embedding"
        }
        _ => {
            let node = pick_node(rng, cert, |c| {
                matches!(c.kind, CertificateKind::Merge { .. })
            })
            .expect("a merge");
            if let CertificateKind::Merge {
                left_share,
                right_share,
                ..
            } = &mut node.kind
            {
                let (from, to) = if rng.gen_bool(0.5) {
                    (left_share, right_share)
                } else {
                    (right_share, left_share)
                };
                let i = (0..p)
                    .find(|&i| from[i] > 0)
                    .expect("a glued budget is non-zero");
                from[i] -= 1;
                if rng.gen_bool(0.5) {
                    to[i] += 1;
                } else {
                    let j = other_index(rng, p, &[i]).expect("p >= 2");
                    from[j] += 1;
                }
            }
            "merge-share"
        }
    }
}

/// AC8: recognizer certificates validate, and single mutations of them are
/// rejected.
pub fn ac8_certificates() -> CriterionReport {
    let mut tally = Tally::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0xac8);
    let mut pool = Vec::new();
    for _ in 0..300 {
        let p = rng.gen_range(2..=3);
        let (g, f) = random_hard_pair(&mut rng, p);
        let outcome = recognize(&g, &f).map_err(err).and_then(|cert| {
            let cert = cert
                .ok_or_else(|| format!("glued hard pair not recognized: {}", describe(&g, &f)))?;
            check_certificate(&g, &f, &cert)
                .map_err(|e| format!("certificate rejected ({e}) on {}", describe(&g, &f)))?;
            let solved = solve(&g, &f, SolveOptions::default()).map_err(err)?;
            if solved.is_partitioned() {
                return Err(format!(
                    "solver partitions a hard pair: {}",
                    describe(&g, &f)
                ));
            }
            Ok(cert)
        });
        match outcome {
            Ok(cert) => {
                tally.record(Ok(()));
                pool.push((g, f, cert));
            }
            Err(e) => tally.record(Err(e)),
        }
    }
    let mut counts = std::collections::BTreeMap::new();
    if !pool.is_empty() {
        for _ in 0..1000 {
            let (g, f, cert) = &pool[rng.gen_range(0..pool.len())];
            let mut mutated = cert.clone();
            let kind = mutate(&mut rng, &mut mutated, g.vertex_count(), f.parts());
            *counts.entry(kind).or_insert(0usize) += 1;
            tally.record(match check_certificate(g, f, &mutated) {
                Err(_) => Ok(()),
                Ok(()) => Err(format!(
                    "{kind} mutation accepted:\n{mutated}on {}",
                    describe(g, f)
                )),
            });
        }
    }
    let detail = counts
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ");
    tally.finish(
        "AC8",
        "certificates",
        None,
        format!("pairs={} mutations: {detail}", pool.len()),
    )
}

pub use super::plumbing::ac9_plumbing;

/// Names accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "dichotomy",
    "complete-family",
    "cycles",
    "max-order",
    "subcubic",
    "exchange",
    "core-determinism",
    "certificates",
    "plumbing",
    "all",
];

/// Where the plumbing suite finds its fixtures and the CLI binary.
#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    pub fixtures: PathBuf,
    pub binary: Option<PathBuf>,
}

/// Runs a named suite, calling `report` as each criterion finishes.
pub fn run_suite(
    name: &str,
    config: &SuiteConfig,
    mut report: impl FnMut(&CriterionReport),
) -> Result<Vec<CriterionReport>> {
    if !SUITES.contains(&name) {
        return Err(Error::Precondition(format!(
            "unknown suite `{name}`; expected one of {}",
            SUITES.join(", ")
        )));
    }
    let wants = |s: &str| name == "all" || name == s;
    let mut out = Vec::new();
    let mut push = |r: CriterionReport| {
        report(&r);
        out.push(r);
    };
    if wants("dichotomy") {
        push(ac1_dichotomy());
    }
    if wants("complete-family") {
        push(ac2_complete_family());
    }
    if wants("cycles") {
        push(ac3_cycles());
    }
    let mut traces = Vec::new();
    if wants("max-order") || name == "exchange" {
        let (r, t) = ac4_max_order(7);
        traces.extend(t);
        if wants("max-order") {
            push(r);
        }
    }
    if wants("subcubic") || name == "exchange" {
        let (r, t) = ac5_subcubic(200);
        traces.extend(t);
        if wants("subcubic") {
            push(r);
        }
    }
    if wants("exchange") {
        let (stress, failures) = exchange_stress(1000);
        traces.extend(stress);
        push(ac6_exchange(&traces, failures));
    }
    if wants("core-determinism") {
        push(ac7_core_determinism());
    }
    if wants("certificates") {
        push(ac8_certificates());
    }
    if wants("plumbing") {
        push(ac9_plumbing(&config.fixtures, config.binary.as_deref()));
    }
    Ok(out)
}

/// Default fixture directory of the source tree.
pub fn default_fixtures() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_oracle_matches_known_maxima() {
        let c5 = Hypergraph::cycle(1, 5).unwrap();
        assert_eq!(max_order_oracle(&c5, &[2; 5]), 4);
        assert_eq!(max_order_oracle(&c5, &[1; 5]), 2);
        let k4 = Hypergraph::complete(1, 4).unwrap();
        assert_eq!(max_order_oracle(&k4, &[3; 4]), 3);
    }

    #[test]
    fn generated_pairs_are_hard() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let (g, f) = random_hard_pair(&mut rng, 2);
            assert!(recognize(&g, &f).unwrap().is_some(), "{}", describe(&g, &f));
        }
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nope", &SuiteConfig::default(), |_| {}).is_err());
    }

    #[test]
    fn small_suites_pass() {
        for r in [ac2_complete_family(), ac3_cycles()] {
            assert!(r.passed(), "{r}\n{:#?}", r.failures);
        }
        let (r, traces) = ac4_max_order(4);
        assert!(r.passed(), "{r}\n{:#?}", r.failures);
        let r = ac6_exchange(&traces, Vec::new());
        assert!(r.passed(), "{r}\n{:#?}", r.failures);
        let (traces, failures) = exchange_stress(30);
        let r = ac6_exchange(&traces, failures);
        assert!(r.passed(), "{r}\n{:#?}", r.failures);
    }
}
