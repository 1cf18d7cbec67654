//! Instance generators and the verification suites behind `hyperpart suite`.

pub mod graphs;
pub mod plumbing;
pub mod suite;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::budget::VectorFunction;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};

/// Random hypergraph on `n` vertices: a random number of distinct edges of
/// size `2..=max_edge_size`, each repeated `1..=max_multiplicity` times.
pub fn random_hypergraph<R: Rng>(
    rng: &mut R,
    n: usize,
    max_edge_size: usize,
    max_multiplicity: usize,
) -> Hypergraph {
    if n < 2 {
        return Hypergraph::edgeless(n);
    }
    let distinct = rng.gen_range(0..=2 * n);
    let vertices: Vec<Vertex> = (0..n).collect();
    let mut edges = Vec::new();
    for _ in 0..distinct {
        let size = rng.gen_range(2..=max_edge_size.min(n).max(2));
        let edge: Vec<Vertex> = vertices.choose_multiple(rng, size).copied().collect();
        for _ in 0..rng.gen_range(1..=max_multiplicity.max(1)) {
            edges.push(edge.clone());
        }
    }
    Hypergraph::new(n, edges).expect("generated edges are valid")
}

/// Like [`random_hypergraph`] but retried until connected.
pub fn random_connected_hypergraph<R: Rng>(
    rng: &mut R,
    n: usize,
    max_edge_size: usize,
    max_multiplicity: usize,
) -> Hypergraph {
    loop {
        let g = random_hypergraph(rng, n, max_edge_size, max_multiplicity);
        if g.is_connected() {
            return g;
        }
    }
}

/// Uniformly random way to write `total` as an ordered sum of `parts`
/// non-negative integers.
pub fn random_composition<R: Rng>(rng: &mut R, total: usize, parts: usize) -> Vec<usize> {
    let slots = total + parts - 1;
    let mut bars: Vec<usize> = rand::seq::index::sample(rng, slots, parts - 1).into_vec();
    bars.sort_unstable();
    let mut out = Vec::with_capacity(parts);
    let mut prev = 0;
    for (i, &b) in bars.iter().enumerate() {
        out.push(b - prev - if i == 0 { 0 } else { 1 });
        prev = b;
    }
    out.push(slots - prev - if bars.is_empty() { 0 } else { 1 });
    out
}

/// Budgets whose sum at `v` is drawn from `[d(v), d(v) + slack]`, split
/// uniformly among the `p` parts.
pub fn random_budgets<R: Rng>(
    rng: &mut R,
    g: &Hypergraph,
    p: usize,
    slack: usize,
) -> VectorFunction {
    let rows = g
        .vertices()
        .map(|v| {
            let total = g.degree(v) + rng.gen_range(0..=slack);
            random_composition(rng, total, p)
        })
        .collect();
    VectorFunction::new(p, rows).expect("rows have p entries")
}

/// Every ordered way to write `total` as a sum of `parts` non-negative
/// integers, lexicographically.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for x in 0..=total {
            prefix.push(x);
            go(total - x, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        go(total, parts, &mut Vec::new(), &mut out);
    }
    out
}

/// Number of tight vector functions of `g` with `p` parts.
pub fn tight_count(g: &Hypergraph, p: usize) -> u128 {
    g.vertices()
        .map(|v| compositions(g.degree(v), p).len() as u128)
        .product()
}

/// Every tight vector function of `g` with `p` parts.
pub fn all_tight(g: &Hypergraph, p: usize) -> Vec<VectorFunction> {
    let per_vertex: Vec<Vec<Vec<usize>>> =
        g.vertices().map(|v| compositions(g.degree(v), p)).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; g.vertex_count()];
    loop {
        let rows = idx
            .iter()
            .zip(&per_vertex)
            .map(|(&i, c)| c[i].clone())
            .collect();
        out.push(VectorFunction::new(p, rows).expect("rows have p entries"));
        let mut v = idx.len();
        loop {
            if v == 0 {
                return out;
            }
            v -= 1;
            idx[v] += 1;
            if idx[v] < per_vertex[v].len() {
                break;
            }
            idx[v] = 0;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    Complete {
        t: usize,
        n: usize,
    },
    Cycle {
        t: usize,
        n: usize,
    },
    /// `tK_n` and `tK_m` glued at their first vertices.
    Merge {
        t: usize,
        n: usize,
        m: usize,
    },
    Random {
        n: usize,
        max_edge_size: usize,
        max_multiplicity: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BudgetSpec {
    None,
    Constant(Vec<usize>),
    /// Sums in `[d(v), d(v) + 2]`, split uniformly over `p` parts.
    Random {
        p: usize,
    },
}

/// A reproducible instance: generator, budgets and the seed for both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceSpec {
    pub generator: Generator,
    pub budgets: BudgetSpec,
    pub seed: u64,
}

impl InstanceSpec {
    pub fn build(&self) -> Result<(Hypergraph, Option<VectorFunction>)> {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(self.seed);
        let g = match self.generator {
            Generator::Complete { t, n } => Hypergraph::complete(t, n)?,
            Generator::Cycle { t, n } => Hypergraph::cycle(t, n)?,
            Generator::Merge { t, n, m } => {
                Hypergraph::merge_at(
                    &Hypergraph::complete(t, n)?,
                    0,
                    &Hypergraph::complete(t, m)?,
                    0,
                )?
                .graph
            }
            Generator::Random {
                n,
                max_edge_size,
                max_multiplicity,
            } => {
                if max_edge_size < 2 {
                    return Err(Error::Precondition(
                        "edges need at least two vertices".into(),
                    ));
                }
                random_connected_hypergraph(&mut rng, n, max_edge_size, max_multiplicity)
            }
        };
        let f = match &self.budgets {
            BudgetSpec::None => None,
            BudgetSpec::Constant(values) => {
                Some(VectorFunction::constant(g.vertex_count(), values)?)
            }
            BudgetSpec::Random { p } => {
                if *p == 0 {
                    return Err(Error::NoParts);
                }
                Some(random_budgets(&mut rng, &g, *p, 2))
            }
        };
        Ok((g, f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn compositions_are_complete() {
        assert_eq!(compositions(2, 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(compositions(3, 3).len(), 10);
        assert_eq!(compositions(0, 1), vec![vec![0]]);
    }

    #[test]
    fn random_compositions_sum_up() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let total = rng.gen_range(0..6);
            let parts = rng.gen_range(1..4);
            let c = random_composition(&mut rng, total, parts);
            assert_eq!(c.len(), parts);
            assert_eq!(c.iter().sum::<usize>(), total);
        }
    }

    #[test]
    fn tight_enumeration() {
        let p3 = Hypergraph::new(3, [[0, 1], [1, 2]]).unwrap();
        let all = all_tight(&p3, 2);
        assert_eq!(all.len() as u128, tight_count(&p3, 2));
        assert_eq!(all.len(), 2 * 3 * 2);
        assert!(all.iter().all(|f| crate::hardpair::is_tight(&p3, f)));
    }

    #[test]
    fn specs_are_deterministic() {
        let spec = InstanceSpec {
            generator: Generator::Random {
                n: 6,
                max_edge_size: 3,
                max_multiplicity: 2,
            },
            budgets: BudgetSpec::Random { p: 3 },
            seed: 11,
        };
        let (g, f) = spec.build().unwrap();
        assert_eq!(spec.build().unwrap(), (g.clone(), f.clone()));
        assert!(g.is_connected());
        let f = f.unwrap();
        assert!(g
            .vertices()
            .all(|v| (g.degree(v)..=g.degree(v) + 2).contains(&f.total(v))));

        let (g, _) = InstanceSpec {
            generator: Generator::Merge { t: 1, n: 3, m: 4 },
            budgets: BudgetSpec::None,
            seed: 0,
        }
        .build()
        .unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 9));
    }
}
