//! Strict degeneracy by peeling.
//!
//! A hypergraph is strictly `h`-degenerate when every non-empty
//! subhypergraph has a vertex `v` of degree at most `h(v) - 1`. Peeling
//! repeatedly deletes such a vertex. Degrees only go down as vertices leave,
//! so a removable vertex stays removable and the set of vertices that are
//! never removed does not depend on the order: it is the largest vertex set
//! inducing a subhypergraph with `d(w) >= h(w)` everywhere (the stuck core).

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use rand::Rng;

use crate::budget::DegreeBudget;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PeelResult {
    /// Every vertex was eliminated, in this order.
    Order(Vec<Vertex>),
    /// Peeling got stuck; these vertices remain.
    Core(VertexSet),
}

impl PeelResult {
    pub fn is_order(&self) -> bool {
        matches!(self, PeelResult::Order(_))
    }

    /// The stuck core, empty when peeling succeeded.
    pub fn core(&self) -> VertexSet {
        match self {
            PeelResult::Order(_) => VertexSet::new(),
            PeelResult::Core(c) => c.clone(),
        }
    }
}

trait Pool {
    fn push(&mut self, v: Vertex);
    fn pop(&mut self) -> Option<Vertex>;
}

struct SmallestFirst(BinaryHeap<Reverse<Vertex>>);

impl Pool for SmallestFirst {
    fn push(&mut self, v: Vertex) {
        self.0.push(Reverse(v));
    }

    fn pop(&mut self) -> Option<Vertex> {
        self.0.pop().map(|Reverse(v)| v)
    }
}

struct RandomPick<'r, R: Rng> {
    items: Vec<Vertex>,
    rng: &'r mut R,
}

impl<R: Rng> Pool for RandomPick<'_, R> {
    fn push(&mut self, v: Vertex) {
        self.items.push(v);
    }

    fn pop(&mut self) -> Option<Vertex> {
        if self.items.is_empty() {
            return None;
        }
        let i = self.rng.gen_range(0..self.items.len());
        Some(self.items.swap_remove(i))
    }
}

fn peel_core(g: &Hypergraph, mask: &[bool], h: &[usize], pool: &mut impl Pool) -> PeelResult {
    let n = g.vertex_count();
    let mut alive = mask.to_vec();
    let mut edge_alive: Vec<bool> = (0..g.edge_count())
        .map(|e| g.edge_inside(e, mask))
        .collect();
    let mut deg = vec![0usize; n];
    let mut queued = vec![false; n];
    for (e, edge) in g.edges().iter().enumerate() {
        if edge_alive[e] {
            for &v in edge {
                deg[v] += 1;
            }
        }
    }
    let mut remaining = 0;
    for v in 0..n {
        if alive[v] {
            remaining += 1;
            if deg[v] < h[v] {
                queued[v] = true;
                pool.push(v);
            }
        }
    }
    let mut order = Vec::with_capacity(remaining);
    while let Some(v) = pool.pop() {
        alive[v] = false;
        order.push(v);
        for &e in g.incident_edges(v) {
            if !edge_alive[e] {
                continue;
            }
            edge_alive[e] = false;
            for &w in &g.edges()[e] {
                if w == v {
                    continue;
                }
                deg[w] -= 1;
                if alive[w] && !queued[w] && deg[w] < h[w] {
                    queued[w] = true;
                    pool.push(w);
                }
            }
        }
    }
    if order.len() == remaining {
        PeelResult::Order(order)
    } else {
        PeelResult::Core(VertexSet::from_mask(&alive))
    }
}

/// Peels `G[mask]` against the ambient budget `h`, always removing the
/// smallest removable vertex.
pub fn peel_within(g: &Hypergraph, mask: &[bool], h: &[usize]) -> PeelResult {
    peel_core(g, mask, h, &mut SmallestFirst(BinaryHeap::new()))
}

/// Peels `G` against `h`, always removing the smallest removable vertex.
///
/// Panics if `h` does not have one entry per vertex.
pub fn peel(g: &Hypergraph, h: &DegreeBudget) -> PeelResult {
    assert_eq!(
        h.len(),
        g.vertex_count(),
        "budget length must match vertex count"
    );
    peel_within(g, &vec![true; g.vertex_count()], h.as_slice())
}

/// Like [`peel`] but picks uniformly among the removable vertices.
pub fn peel_randomized<R: Rng>(g: &Hypergraph, h: &DegreeBudget, rng: &mut R) -> PeelResult {
    assert_eq!(
        h.len(),
        g.vertex_count(),
        "budget length must match vertex count"
    );
    let mut pool = RandomPick {
        items: Vec::new(),
        rng,
    };
    peel_core(g, &vec![true; g.vertex_count()], h.as_slice(), &mut pool)
}

pub fn is_strictly_degenerate(g: &Hypergraph, h: &DegreeBudget) -> bool {
    peel(g, h).is_order()
}

pub fn is_strictly_degenerate_within(g: &Hypergraph, mask: &[bool], h: &[usize]) -> bool {
    peel_within(g, mask, h).is_order()
}

/// Replays an elimination order: true iff it covers every vertex exactly
/// once and each vertex has residual degree at most `h(v) - 1` when removed.
pub fn replay_order(g: &Hypergraph, h: &DegreeBudget, order: &[Vertex]) -> bool {
    let n = g.vertex_count();
    if order.len() != n {
        return false;
    }
    let mut present = vec![true; n];
    for &v in order {
        if v >= n || !present[v] || g.degree_within(v, &present) >= h.get(v) {
            return false;
        }
        present[v] = false;
    }
    true
}

/// `1 +` the largest minimum degree over all subhypergraphs; `0` for the
/// empty hypergraph.
///
/// Repeatedly deletes a vertex of minimum degree (smallest id on ties); the
/// largest minimum degree seen along the way is the maximum over all
/// subhypergraphs.
pub fn coloring_number(g: &Hypergraph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let mut deg = g.degrees();
    let mut alive = vec![true; n];
    let mut edge_alive = vec![true; g.edge_count()];
    let mut queue: BTreeSet<(usize, Vertex)> = g.vertices().map(|v| (deg[v], v)).collect();
    let mut best = 0;
    while let Some((d, v)) = queue.pop_first() {
        best = best.max(d);
        alive[v] = false;
        for &e in g.incident_edges(v) {
            if !edge_alive[e] {
                continue;
            }
            edge_alive[e] = false;
            for &w in &g.edges()[e] {
                if w != v && alive[w] {
                    queue.remove(&(deg[w], w));
                    deg[w] -= 1;
                    queue.insert((deg[w], w));
                }
            }
        }
    }
    best + 1
}

/// The stuck core of `G* + v` under `f1`, where `G*` is a maximal strictly
/// `f1`-degenerate subhypergraph and `v` the added vertex. An empty core
/// means `G*` was not maximal.
pub fn witness_core(g1_star_plus_v: &Hypergraph, f1: &DegreeBudget) -> Result<VertexSet> {
    f1.check_len(g1_star_plus_v)?;
    match peel(g1_star_plus_v, f1) {
        PeelResult::Core(core) => Ok(core),
        PeelResult::Order(_) => Err(Error::Precondition(
            "G* + v is strictly degenerate, so G* was not maximal".into(),
        )),
    }
}

/// [`witness_core`] on the ambient hypergraph: the stuck core of
/// `G[set + v]` under `f1`.
pub fn witness_core_within(
    g: &Hypergraph,
    set: &VertexSet,
    v: Vertex,
    f1: &[usize],
) -> Result<VertexSet> {
    let mut mask = set.mask(g.vertex_count());
    mask[v] = true;
    match peel_within(g, &mask, f1) {
        PeelResult::Core(core) => Ok(core),
        PeelResult::Order(_) => Err(Error::Precondition(format!(
            "adding vertex {v} keeps the set strictly degenerate, so it was not maximal"
        ))),
    }
}

/// `d_G(v) = h(v)` for every vertex.
pub fn is_h_regular(g: &Hypergraph, h: &DegreeBudget) -> bool {
    h.len() == g.vertex_count() && g.vertices().all(|v| g.degree(v) == h.get(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn set(v: &[Vertex]) -> VertexSet {
        v.iter().copied().collect()
    }

    /// Straight from the definition: every non-empty subset has a vertex of
    /// induced degree below its budget.
    fn degenerate_by_subsets(g: &Hypergraph, h: &DegreeBudget) -> bool {
        let n = g.vertex_count();
        (1u32..1 << n).all(|bits| {
            let mask: Vec<bool> = (0..n).map(|v| bits >> v & 1 == 1).collect();
            (0..n).any(|v| mask[v] && g.degree_within(v, &mask) < h.get(v))
        })
    }

    /// Largest min degree over all non-empty induced subhypergraphs.
    fn col_by_subsets(g: &Hypergraph) -> usize {
        let n = g.vertex_count();
        if n == 0 {
            return 0;
        }
        (1u32..1 << n)
            .map(|bits| {
                let mask: Vec<bool> = (0..n).map(|v| bits >> v & 1 == 1).collect();
                (0..n)
                    .filter(|&v| mask[v])
                    .map(|v| g.degree_within(v, &mask))
                    .min()
                    .unwrap()
            })
            .max()
            .unwrap()
            + 1
    }

    #[test]
    fn triangle() {
        let c3 = Hypergraph::cycle(1, 3).unwrap();
        assert_eq!(
            peel(&c3, &DegreeBudget::constant(3, 2)),
            PeelResult::Core(set(&[0, 1, 2]))
        );
        match peel(&c3, &DegreeBudget::constant(3, 3)) {
            PeelResult::Order(o) => assert_eq!(o, vec![0, 1, 2]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn k4_with_one_large_budget() {
        let k4 = Hypergraph::complete(1, 4).unwrap();
        let h = DegreeBudget::new(vec![4, 0, 0, 0]);
        assert_eq!(peel(&k4, &h), PeelResult::Core(set(&[1, 2, 3])));
    }

    #[test]
    fn degeneracy_examples() {
        assert!(is_strictly_degenerate(
            &Hypergraph::edgeless(0),
            &DegreeBudget::new(vec![])
        ));
        for (t, n) in [(1, 3), (1, 4), (2, 4), (3, 3)] {
            let g = Hypergraph::complete(t, n).unwrap();
            assert!(!is_strictly_degenerate(
                &g,
                &DegreeBudget::constant(n, t * (n - 1))
            ));
        }
        let c4 = Hypergraph::cycle(1, 4).unwrap();
        assert!(!is_strictly_degenerate(&c4, &DegreeBudget::constant(4, 2)));
        assert!(is_strictly_degenerate(
            &c4,
            &DegreeBudget::new(vec![3, 2, 2, 2])
        ));
    }

    #[test]
    fn coloring_numbers() {
        assert_eq!(coloring_number(&Hypergraph::edgeless(0)), 0);
        assert_eq!(coloring_number(&Hypergraph::edgeless(3)), 1);
        assert_eq!(coloring_number(&Hypergraph::complete(1, 4).unwrap()), 4);
        assert_eq!(coloring_number(&Hypergraph::complete(2, 4).unwrap()), 7);
        assert_eq!(coloring_number(&Hypergraph::cycle(1, 6).unwrap()), 3);
        let e = Hypergraph::new(3, [vec![0, 1, 2]]).unwrap();
        assert_eq!(coloring_number(&e), 2);
    }

    #[test]
    fn witness_cores() {
        // u = 0 in G*, v = 1 attached by one edge.
        let g = Hypergraph::new(2, [[0, 1]]).unwrap();
        assert_eq!(
            witness_core(&g, &DegreeBudget::new(vec![1, 1])).unwrap(),
            set(&[0, 1])
        );
        let lone = Hypergraph::edgeless(1);
        assert_eq!(
            witness_core(&lone, &DegreeBudget::new(vec![0])).unwrap(),
            set(&[0])
        );
        let c5 = Hypergraph::cycle(1, 5).unwrap();
        let core = witness_core_within(&c5, &set(&[0, 1, 2, 3]), 4, &[2; 5]).unwrap();
        assert_eq!(core, VertexSet::full(5));
        assert!(witness_core(&lone, &DegreeBudget::new(vec![1])).is_err());
    }

    #[test]
    fn regularity() {
        assert!(is_h_regular(
            &Hypergraph::cycle(3, 5).unwrap(),
            &DegreeBudget::constant(5, 6)
        ));
        assert!(is_h_regular(
            &Hypergraph::complete(1, 4).unwrap(),
            &DegreeBudget::constant(4, 3)
        ));
        let p3 = Hypergraph::new(3, [[0, 1], [1, 2]]).unwrap();
        assert!(!is_h_regular(&p3, &DegreeBudget::constant(3, 2)));
    }

    #[test]
    fn peel_matches_definition_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = 1 + rng.gen_range(0..6);
            let g = crate::harness::random_hypergraph(&mut rng, n, 3, 2);
            let h = DegreeBudget::new(
                g.vertices()
                    .map(|v| rng.gen_range(0..=g.degree(v) + 1))
                    .collect(),
            );
            let result = peel(&g, &h);
            assert_eq!(result.is_order(), degenerate_by_subsets(&g, &h));
            if let PeelResult::Order(order) = &result {
                assert!(replay_order(&g, &h, order));
            }
            assert_eq!(coloring_number(&g), col_by_subsets(&g));
        }
    }

    #[test]
    fn replay_rejects_bad_orders() {
        let p3 = Hypergraph::new(3, [[0, 1], [1, 2]]).unwrap();
        let h = DegreeBudget::constant(3, 2);
        assert!(replay_order(&p3, &h, &[0, 1, 2]));
        assert!(!replay_order(
            &p3,
            &DegreeBudget::constant(3, 1),
            &[0, 1, 2]
        ));
        assert!(!replay_order(&p3, &h, &[0, 1]));
        assert!(!replay_order(&p3, &h, &[0, 0, 1]));
    }
}
