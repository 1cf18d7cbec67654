//! Small simple graphs: exhaustive enumeration up to isomorphism and
//! random bounded-degree samples.

use std::collections::HashSet;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::hypergraph::Hypergraph;

/// Adjacency bitmasks of a simple graph on at most 8 vertices.
type Adjacency = Vec<u16>;

fn pair_bit(a: usize, b: usize) -> u64 {
    let (i, j) = (a.min(b), a.max(b));
    1 << (j * (j - 1) / 2 + i)
}

fn encode(adj: &Adjacency, perm: &[usize]) -> u64 {
    let mut code = 0;
    for (a, &row) in adj.iter().enumerate() {
        for b in 0..a {
            if row >> b & 1 == 1 {
                code |= pair_bit(perm[a], perm[b]);
            }
        }
    }
    code
}

fn decode(n: usize, code: u64) -> Adjacency {
    let mut adj = vec![0u16; n];
    for j in 0..n {
        for i in 0..j {
            if code & pair_bit(i, j) != 0 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

/// Smallest code over all relabelings that order vertices by an
/// isomorphism-invariant key (degree, then sorted neighbour degrees).
fn canonical_code(adj: &Adjacency) -> u64 {
    let n = adj.len();
    let deg: Vec<u32> = adj.iter().map(|r| r.count_ones()).collect();
    let key = |v: usize| {
        let mut nd: Vec<u32> = (0..n)
            .filter(|&w| adj[v] >> w & 1 == 1)
            .map(|w| deg[w])
            .collect();
        nd.sort_unstable();
        (deg[v], nd)
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| key(v));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match cells.last_mut() {
            Some(cell) if key(cell[0]) == key(v) => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }

    fn search(
        cells: &[Vec<usize>],
        next: usize,
        perm: &mut [usize],
        adj: &Adjacency,
        best: &mut u64,
    ) {
        let Some((cell, rest)) = cells.split_first() else {
            *best = (*best).min(encode(adj, perm));
            return;
        };
        for order in cell.iter().permutations(cell.len()) {
            for (k, &&v) in order.iter().enumerate() {
                perm[v] = next + k;
            }
            search(rest, next + cell.len(), perm, adj, best);
        }
    }

    let mut best = u64::MAX;
    let mut perm = vec![0; n];
    search(&cells, 0, &mut perm, adj, &mut best);
    best
}

/// All simple graphs on `n <= 8` vertices up to isomorphism, as canonical
/// adjacency lists.
fn all_graphs(n: usize) -> Vec<Adjacency> {
    assert!(n <= 8, "enumeration is limited to 8 vertices");
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut level: Vec<Adjacency> = vec![vec![0]];
    for k in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for adj in &level {
            for nbrs in 0u16..1 << k {
                let mut grown: Adjacency = adj.clone();
                grown.push(nbrs);
                for (v, row) in grown.iter_mut().enumerate().take(k) {
                    if nbrs >> v & 1 == 1 {
                        *row |= 1 << k;
                    }
                }
                let code = canonical_code(&grown);
                if seen.insert(code) {
                    next.push(code);
                }
            }
        }
        next.sort_unstable();
        level = next.into_iter().map(|code| decode(k + 1, code)).collect();
    }
    level
}

fn to_hypergraph(adj: &Adjacency) -> Hypergraph {
    let n = adj.len();
    let edges = (0..n).flat_map(|a| {
        (a + 1..n)
            .filter(move |&b| adj[a] >> b & 1 == 1)
            .map(move |b| [a, b])
    });
    Hypergraph::new(n, edges).expect("simple graph edges are valid")
}

/// Every connected simple graph on `n` vertices, one per isomorphism class,
/// in a deterministic order.
pub fn connected_simple_graphs(n: usize) -> Vec<Hypergraph> {
    all_graphs(n)
        .iter()
        .map(to_hypergraph)
        .filter(|g| n > 0 && g.is_connected())
        .collect()
}

/// Every simple graph on `n` vertices up to isomorphism.
pub fn simple_graphs(n: usize) -> Vec<Hypergraph> {
    all_graphs(n).iter().map(to_hypergraph).collect()
}

/// Whether the simple graph contains `K_k` as a subgraph.
pub fn contains_clique(g: &Hypergraph, k: usize) -> bool {
    fn extend(g: &Hypergraph, clique: &mut Vec<usize>, candidates: &[usize], k: usize) -> bool {
        if clique.len() == k {
            return true;
        }
        for (i, &v) in candidates.iter().enumerate() {
            let nbrs = g.neighbors(v);
            let rest: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|w| nbrs.binary_search(w).is_ok())
                .collect();
            clique.push(v);
            if extend(g, clique, &rest, k) {
                return true;
            }
            clique.pop();
        }
        false
    }
    let all: Vec<usize> = g.vertices().collect();
    extend(g, &mut Vec::new(), &all, k)
}

/// Random connected simple graph on `n` vertices with maximum degree
/// exactly `max_degree` and no `K_{max_degree+1}`.
pub fn random_bounded_degree_graph<R: Rng>(rng: &mut R, n: usize, max_degree: usize) -> Hypergraph {
    assert!(n > max_degree + 1, "need room for a graph without K_(Δ+1)");
    let mut pairs: Vec<[usize; 2]> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| [a, b]))
        .collect();
    loop {
        pairs.shuffle(rng);
        let keep = rng.gen_range(0.4..=1.0);
        let mut deg = vec![0; n];
        let mut edges = Vec::new();
        for &[a, b] in &pairs {
            if deg[a] < max_degree && deg[b] < max_degree && rng.gen_bool(keep) {
                deg[a] += 1;
                deg[b] += 1;
                edges.push([a, b]);
            }
        }
        let g = Hypergraph::new(n, edges).expect("valid pairs");
        if g.is_connected() && g.max_degree() == max_degree && !contains_clique(&g, max_degree + 1)
        {
            return g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn counts_match_known_sequences() {
        // Graphs and connected graphs on n unlabeled vertices.
        let all = [1, 2, 4, 11, 34, 156];
        let connected = [1, 1, 2, 6, 21, 112];
        for n in 1..=6 {
            assert_eq!(simple_graphs(n).len(), all[n - 1], "n = {n}");
            assert_eq!(
                connected_simple_graphs(n).len(),
                connected[n - 1],
                "n = {n}"
            );
        }
    }

    #[test]
    fn cliques() {
        assert!(contains_clique(&Hypergraph::complete(1, 4).unwrap(), 4));
        assert!(!contains_clique(&Hypergraph::cycle(1, 5).unwrap(), 3));
    }

    #[test]
    fn bounded_degree_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 5..=8 {
            let g = random_bounded_degree_graph(&mut rng, n, 3);
            assert!(g.is_connected());
            assert_eq!(g.max_degree(), 3);
            assert!(!contains_clique(&g, 4));
        }
    }
}
