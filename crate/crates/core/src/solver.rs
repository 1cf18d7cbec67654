//! Deciding and constructing `f`-partitions.
//!
//! An `f`-partition assigns every vertex to one of `p` parts so that part
//! `i` induces a strictly `f_i`-degenerate subhypergraph. For a connected
//! hypergraph whose budgets cover every degree, either such a partition
//! exists or the pair is hard; [`solve`] returns one or the other for each
//! component.

use std::fmt;

use crate::budget::VectorFunction;
use crate::degeneracy::{is_strictly_degenerate_within, peel, PeelResult};
use crate::error::{Error, Result};
use crate::hardpair::{recognize, HardPairCertificate};
use crate::hypergraph::{content_lines, parse_numbers, Hypergraph, Vertex, VertexSet};

pub const DEFAULT_BRUTE_FORCE_BUDGET: u128 = 20_000_000;

/// Total assignment of vertices to parts `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    p: usize,
    part_of: Vec<usize>,
}

impl Partition {
    pub fn new(p: usize, part_of: Vec<usize>) -> Result<Self> {
        if p == 0 {
            return Err(Error::NoParts);
        }
        if let Some(&part) = part_of.iter().find(|&&i| i >= p) {
            return Err(Error::PartOutOfRange { part: part + 1, p });
        }
        Ok(Self { p, part_of })
    }

    pub fn parts(&self) -> usize {
        self.p
    }

    pub fn len(&self) -> usize {
        self.part_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.part_of.is_empty()
    }

    pub fn part_of(&self, v: Vertex) -> usize {
        self.part_of[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.part_of
    }

    pub fn members(&self, part: usize) -> VertexSet {
        (0..self.part_of.len())
            .filter(|&v| self.part_of[v] == part)
            .collect()
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.p];
        for &i in &self.part_of {
            sizes[i] += 1;
        }
        sizes
    }

    /// Lines `vertex part`, both 1-based, one per vertex.
    pub fn parse(text: &str, n: usize, p: usize) -> Result<Self> {
        let mut part_of = vec![usize::MAX; n];
        for (line, content) in content_lines(text) {
            let [v, part] = parse_numbers(line, content)?[..] else {
                return Err(Error::Parse {
                    line,
                    message: "expected \"vertex part\"".into(),
                });
            };
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if part == 0 || part > p {
                return Err(Error::PartOutOfRange { part, p });
            }
            if part_of[v - 1] != usize::MAX {
                return Err(Error::Parse {
                    line,
                    message: format!("vertex {v} assigned twice"),
                });
            }
            part_of[v - 1] = part - 1;
        }
        if let Some(v) = part_of.iter().position(|&i| i == usize::MAX) {
            return Err(Error::Parse {
                line: 0,
                message: format!("vertex {} has no part", v + 1),
            });
        }
        Self::new(p, part_of)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, part) in self.part_of.iter().enumerate() {
            writeln!(f, "{} {}", v + 1, part + 1)?;
        }
        Ok(())
    }
}

/// What [`solve`] found for one component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Parts of the component's vertices, aligned with
    /// [`ComponentOutcome::vertices`].
    Partitioned(Vec<usize>),
    /// The component is a hard pair; ids are ambient.
    Obstruction(HardPairCertificate),
    /// Exhaustive search found no partition. Only produced for components
    /// whose budgets fall below their degrees (forced mode).
    Infeasible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentOutcome {
    pub vertices: VertexSet,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub n: usize,
    pub p: usize,
    pub components: Vec<ComponentOutcome>,
}

impl SolveOutcome {
    /// The assembled partition when every component is partitioned.
    pub fn partition(&self) -> Option<Partition> {
        let mut part_of = vec![0; self.n];
        for c in &self.components {
            let Verdict::Partitioned(parts) = &c.verdict else {
                return None;
            };
            for (v, &i) in c.vertices.iter().zip(parts) {
                part_of[v] = i;
            }
        }
        Some(Partition { p: self.p, part_of })
    }

    pub fn obstructions(&self) -> impl Iterator<Item = &HardPairCertificate> {
        self.components.iter().filter_map(|c| match &c.verdict {
            Verdict::Obstruction(cert) => Some(cert),
            _ => None,
        })
    }

    pub fn is_partitioned(&self) -> bool {
        self.components
            .iter()
            .all(|c| matches!(c.verdict, Verdict::Partitioned(_)))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveOptions {
    /// Search for a partition even where budgets fall below degrees.
    pub force: bool,
}

/// Whether `partition` is an `f`-partition of `g`.
pub fn verify_partition(g: &Hypergraph, f: &VectorFunction, partition: &Partition) -> bool {
    let n = g.vertex_count();
    if partition.len() != n || f.len() != n || partition.parts() != f.parts() {
        return false;
    }
    (0..f.parts()).all(|i| {
        let mask: Vec<bool> = partition.part_of.iter().map(|&j| j == i).collect();
        is_strictly_degenerate_within(g, &mask, f.coordinate(i).as_slice())
    })
}

/// Builds an `f`-partition of a strictly `(f_1 + ... + f_p)`-degenerate
/// hypergraph: peel to an elimination order, then re-insert vertices in
/// reverse, each into the first part `i` where it has fewer than `f_i(v)`
/// neighbouring edges. Such a part exists because the vertex had fewer
/// than `f_1(v) + ... + f_p(v)` edges when it was peeled.
pub fn greedy_partition(g: &Hypergraph, f: &VectorFunction) -> Result<Partition> {
    f.check_len(g)?;
    let order = match peel(g, &f.sum_budget()) {
        PeelResult::Order(order) => order,
        PeelResult::Core(core) => {
            return Err(Error::NotDegenerate {
                core: core.into_vec(),
            })
        }
    };
    let n = g.vertex_count();
    let p = f.parts();
    let mut part_of = vec![usize::MAX; n];
    let mut inside = vec![0usize; p];
    for &v in order.iter().rev() {
        inside.iter_mut().for_each(|c| *c = 0);
        for &e in g.incident_edges(v) {
            let mut others = g.edges()[e]
                .iter()
                .filter(|&&w| w != v)
                .map(|&w| part_of[w]);
            let first = others.next().unwrap_or(usize::MAX);
            if first != usize::MAX && others.all(|i| i == first) {
                inside[first] += 1;
            }
        }
        let part = (0..p)
            .find(|&i| inside[i] < f.get(v, i))
            .ok_or_else(|| Error::Invariant(format!("no part accepts vertex {}", v + 1)))?;
        part_of[v] = part;
    }
    Partition::new(p, part_of)
}

/// Exhaustive search over all `p^n` assignments in lexicographic order
/// (vertex 1 most significant); returns the first valid one.
pub fn brute_force_partitionable(
    g: &Hypergraph,
    f: &VectorFunction,
    budget: u128,
) -> Result<Option<Partition>> {
    f.check_len(g)?;
    let n = g.vertex_count();
    let p = f.parts();
    let needed = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut candidate = Partition {
        p,
        part_of: vec![0; n],
    };
    loop {
        if verify_partition(g, f, &candidate) {
            return Ok(Some(candidate));
        }
        let digits = &mut candidate.part_of;
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// Depth-first search over part assignments, vertices in order of
/// decreasing degree, parts in increasing order. A branch is cut as soon
/// as the part just extended stops being strictly degenerate on the
/// decided vertices.
pub fn backtracking_partition(g: &Hypergraph, f: &VectorFunction) -> Result<Option<Partition>> {
    f.check_len(g)?;
    let n = g.vertex_count();
    let p = f.parts();
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let coords: Vec<Vec<usize>> = (0..p)
        .map(|i| f.coordinate(i).as_slice().to_vec())
        .collect();
    let mut masks = vec![vec![false; n]; p];
    let mut part_of = vec![0usize; n];

    fn go(
        depth: usize,
        g: &Hypergraph,
        order: &[Vertex],
        coords: &[Vec<usize>],
        masks: &mut [Vec<bool>],
        part_of: &mut [usize],
    ) -> bool {
        let Some(&v) = order.get(depth) else {
            return true;
        };
        for i in 0..coords.len() {
            if coords[i][v] == 0 {
                continue;
            }
            masks[i][v] = true;
            if is_strictly_degenerate_within(g, &masks[i], &coords[i]) {
                part_of[v] = i;
                if go(depth + 1, g, order, coords, masks, part_of) {
                    return true;
                }
            }
            masks[i][v] = false;
        }
        false
    }

    if go(0, g, &order, &coords, &mut masks, &mut part_of) {
        Ok(Some(Partition::new(p, part_of)?))
    } else {
        Ok(None)
    }
}

/// Partition or obstruction for every component of `g`.
///
/// Without `force`, budgets must cover degrees everywhere. Components with
/// slack somewhere are strictly degenerate and handled greedily; tight
/// components are either recognized as hard or searched exhaustively,
/// which cannot fail for a pair that is not hard.
pub fn solve(g: &Hypergraph, f: &VectorFunction, options: SolveOptions) -> Result<SolveOutcome> {
    f.check_len(g)?;
    if !options.force {
        f.check_hypothesis(g)?;
    }
    let mut components = Vec::new();
    for comp in g.components() {
        let local = g.induced(&comp)?;
        let fl = f.restrict(&local.ids);
        let verdict = solve_connected(&local.graph, &fl)?;
        let verdict = match verdict {
            Verdict::Obstruction(cert) => Verdict::Obstruction(cert.relabel(&local.ids)),
            other => other,
        };
        components.push(ComponentOutcome {
            vertices: comp,
            verdict,
        });
    }
    Ok(SolveOutcome {
        n: g.vertex_count(),
        p: f.parts(),
        components,
    })
}

fn solve_connected(g: &Hypergraph, f: &VectorFunction) -> Result<Verdict> {
    let covered = f.hypothesis_violation(g).is_none();
    match greedy_partition(g, f) {
        Ok(partition) => return Ok(Verdict::Partitioned(partition.part_of)),
        Err(Error::NotDegenerate { .. }) => {}
        Err(e) => return Err(e),
    }
    if covered {
        if let Some(cert) = recognize(g, f)? {
            return Ok(Verdict::Obstruction(cert));
        }
    }
    match backtracking_partition(g, f)? {
        Some(partition) => Ok(Verdict::Partitioned(partition.part_of)),
        None if covered => Err(Error::Invariant(
            "a pair that is not hard has no partition".into(),
        )),
        None => Ok(Verdict::Infeasible),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hardpair::CertificateKind;

    fn vf(n: usize, row: &[usize]) -> VectorFunction {
        VectorFunction::constant(n, row).unwrap()
    }

    fn k4_minus_edge() -> Hypergraph {
        Hypergraph::new(4, [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3]]).unwrap()
    }

    #[test]
    fn verify_examples() {
        let c4 = Hypergraph::cycle(1, 4).unwrap();
        let coloring = Partition::new(2, vec![0, 1, 0, 1]).unwrap();
        assert!(verify_partition(&c4, &vf(4, &[1, 1]), &coloring));
        let k4 = Hypergraph::complete(1, 4).unwrap();
        let f = vf(4, &[1, 1, 1]);
        for bits in 0..81usize {
            let parts = (0..4).map(|v| bits / 3usize.pow(v) % 3).collect();
            assert!(!verify_partition(
                &k4,
                &f,
                &Partition::new(3, parts).unwrap()
            ));
        }
        let all_first = Partition::new(2, vec![0; 4]).unwrap();
        assert!(verify_partition(&k4, &vf(4, &[4, 0]), &all_first));
    }

    #[test]
    fn greedy_examples() {
        let c5 = Hypergraph::cycle(1, 5).unwrap();
        let f = vf(5, &[2, 1]);
        let p = greedy_partition(&c5, &f).unwrap();
        assert!(verify_partition(&c5, &f, &p));

        let one = greedy_partition(&Hypergraph::edgeless(1), &vf(1, &[1, 0])).unwrap();
        assert_eq!(one.assignment(), &[0]);

        let g = k4_minus_edge();
        let f = vf(4, &[1, 1, 1]);
        let p = greedy_partition(&g, &f).unwrap();
        assert!(verify_partition(&g, &f, &p));

        let k4 = Hypergraph::complete(1, 4).unwrap();
        assert!(matches!(
            greedy_partition(&k4, &vf(4, &[1, 1, 1])),
            Err(Error::NotDegenerate { .. })
        ));
    }

    #[test]
    fn solve_examples() {
        let c5 = Hypergraph::cycle(1, 5).unwrap();
        let out = solve(&c5, &vf(5, &[1, 1]), SolveOptions::default()).unwrap();
        let cert = out.obstructions().next().unwrap();
        assert!(matches!(
            cert.kind,
            CertificateKind::OddCycle { t: 1, n: 5, .. }
        ));

        let c4 = Hypergraph::cycle(1, 4).unwrap();
        let out = solve(&c4, &vf(4, &[1, 1]), SolveOptions::default()).unwrap();
        assert!(verify_partition(
            &c4,
            &vf(4, &[1, 1]),
            &out.partition().unwrap()
        ));

        let k3 = Hypergraph::complete(2, 3).unwrap();
        let out = solve(&k3, &vf(3, &[2, 2]), SolveOptions::default()).unwrap();
        let cert = out.obstructions().next().unwrap();
        assert!(matches!(
            cert.kind,
            CertificateKind::Complete { t: 2, n: 3, .. }
        ));
        assert_eq!(
            brute_force_partitionable(&k3, &vf(3, &[2, 2]), 1000).unwrap(),
            None
        );
    }

    #[test]
    fn solve_rejects_or_forces_below_hypothesis() {
        let k4 = Hypergraph::complete(1, 4).unwrap();
        let f = vf(4, &[1, 1]);
        assert!(matches!(
            solve(&k4, &f, SolveOptions::default()),
            Err(Error::Hypothesis { vertex: 0, .. })
        ));
        let out = solve(&k4, &f, SolveOptions { force: true }).unwrap();
        assert_eq!(out.components[0].verdict, Verdict::Infeasible);

        // Two parts of budget 2 cover K4 minus nothing: forests.
        let out = solve(&k4, &vf(4, &[2, 0]), SolveOptions { force: true }).unwrap();
        assert_eq!(out.components[0].verdict, Verdict::Infeasible);
        let c4 = Hypergraph::cycle(1, 4).unwrap();
        let out = solve(&c4, &vf(4, &[1, 0, 0, 0]), SolveOptions { force: true });
        assert!(out.unwrap().components[0].verdict == Verdict::Infeasible);
    }

    #[test]
    fn solve_handles_components_separately() {
        let g =
            Hypergraph::new(8, [[0, 1], [1, 2], [0, 2], [3, 4], [4, 5], [5, 6], [6, 3]]).unwrap();
        let f = vf(8, &[1, 1]);
        let out = solve(&g, &f, SolveOptions::default()).unwrap();
        assert_eq!(out.components.len(), 3);
        assert!(matches!(out.components[0].verdict, Verdict::Obstruction(_)));
        assert!(matches!(out.components[1].verdict, Verdict::Partitioned(_)));
        assert!(out.partition().is_none());
        let cert = out.obstructions().next().unwrap();
        assert_eq!(cert.vertices, vec![0, 1, 2]);
    }

    #[test]
    fn brute_force_examples() {
        let k4 = Hypergraph::complete(1, 4).unwrap();
        assert_eq!(
            brute_force_partitionable(&k4, &vf(4, &[1, 1, 1]), 1000).unwrap(),
            None
        );
        let c4 = Hypergraph::cycle(1, 4).unwrap();
        let p = brute_force_partitionable(&c4, &vf(4, &[1, 1]), 1000)
            .unwrap()
            .unwrap();
        assert_eq!(p.assignment(), &[0, 1, 0, 1]);
        let empty = brute_force_partitionable(&Hypergraph::edgeless(0), &vf(0, &[1]), 1).unwrap();
        assert_eq!(empty.unwrap().len(), 0);
        assert!(matches!(
            brute_force_partitionable(&c4, &vf(4, &[1, 1]), 15),
            Err(Error::BudgetExceeded { needed: 16, .. })
        ));
    }

    #[test]
    fn partition_text() {
        let p = Partition::new(2, vec![0, 1, 0]).unwrap();
        assert_eq!(p.to_string(), "1 1\n2 2\n3 1\n");
        assert_eq!(Partition::parse(&p.to_string(), 3, 2).unwrap(), p);
        assert!(Partition::parse("1 1\n", 2, 2).is_err());
        assert!(Partition::parse("1 3\n", 1, 2).is_err());
    }
}
