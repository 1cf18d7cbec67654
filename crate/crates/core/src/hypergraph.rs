//! Finite hypergraphs with parallel edges and no loops.
//!
//! Vertices are dense indices `0..n`. The text formats used by the CLI are
//! 1-based; conversion happens only at the parsing and printing boundary.
//!
//! Deleting a vertex removes every edge that contains it, so `G - X` is the
//! subhypergraph induced by the complement of `X`. Under this convention a
//! hyperedge with three or more vertices makes every one of its vertices
//! separating (see [`Hypergraph::separating_vertices`]). Blocks are therefore
//! defined through cut vertices at which the edge set actually splits
//! (see [`Hypergraph::cut_vertices`]).

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A sorted set of distinct vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// Builds a set from a membership mask.
    pub fn from_mask(mask: &[bool]) -> Self {
        Self(
            mask.iter()
                .enumerate()
                .filter_map(|(v, &inside)| inside.then_some(v))
                .collect(),
        )
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.0 {
            mask[v] = true;
        }
        mask
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.iter().filter(|&v| other.contains(v)).count()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, Vertex>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

/// Hypergraph in canonical form: every edge sorted ascending, the edge list
/// sorted lexicographically, parallel edges adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<Vertex>>,
    incidence: Vec<Vec<usize>>,
}

/// An induced subhypergraph relabeled to `0..k`, with `ids[i]` the ambient
/// vertex behind local vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Hypergraph,
    pub ids: Vec<Vertex>,
}

impl Induced {
    pub fn to_ambient(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.ids[v]).collect()
    }
}

/// Result of [`Hypergraph::merge_at`]. The merged vertex is vertex 0;
/// `left[v]` / `right[v]` give the new id of vertex `v` of each input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Merged {
    pub graph: Hypergraph,
    pub left: Vec<Vertex>,
    pub right: Vec<Vertex>,
}

/// Block structure of a connected hypergraph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<VertexSet>,
    /// Vertices shared by two or more blocks.
    pub cut_vertices: VertexSet,
}

impl Hypergraph {
    pub fn new<E, I>(n: usize, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = Vertex>,
    {
        let mut canonical = Vec::new();
        for edge in edges {
            let mut edge: Vec<Vertex> = edge.into_iter().collect();
            edge.sort_unstable();
            if let Some(&v) = edge.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
                let vertex = w[0];
                return Err(Error::Loop { edge, vertex });
            }
            if edge.len() < 2 {
                return Err(Error::EdgeTooSmall(edge));
            }
            canonical.push(edge);
        }
        Ok(Self::from_canonical_edges(n, canonical))
    }

    /// `edges` must already satisfy the hypergraph invariants.
    fn from_canonical_edges(n: usize, mut edges: Vec<Vec<Vertex>>) -> Self {
        edges.sort();
        let mut incidence = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            for &v in e {
                incidence[v].push(i);
            }
        }
        Self {
            n,
            edges,
            incidence,
        }
    }

    pub fn edgeless(n: usize) -> Self {
        Self::from_canonical_edges(n, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    /// Indices (into [`Hypergraph::edges`]) of the edges containing `v`.
    pub fn incident_edges(&self, v: Vertex) -> &[usize] {
        &self.incidence[v]
    }

    /// Number of edges containing `v`, counted with multiplicity.
    ///
    /// Panics if `v` is not a vertex; see [`Hypergraph::checked_degree`].
    pub fn degree(&self, v: Vertex) -> usize {
        self.incidence[v].len()
    }

    pub fn checked_degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.degree(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Distinct vertices sharing at least one edge with `v`.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.incidence[v]
            .iter()
            .flat_map(|&e| self.edges[e].iter().copied())
            .filter(|&w| w != v)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Whether every vertex of edge `e` lies in `mask`.
    pub(crate) fn edge_inside(&self, e: usize, mask: &[bool]) -> bool {
        self.edges[e].iter().all(|&v| mask[v])
    }

    /// Degree of `v` in the subhypergraph induced by `mask`.
    pub fn degree_within(&self, v: Vertex, mask: &[bool]) -> usize {
        self.incidence[v]
            .iter()
            .filter(|&&e| self.edge_inside(e, mask))
            .count()
    }

    /// The subhypergraph induced by `set`: exactly the edges with all of
    /// their vertices in `set`, relabeled in increasing id order.
    pub fn induced(&self, set: &VertexSet) -> Result<Induced> {
        if let Some(v) = set.iter().find(|&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let mut local = vec![usize::MAX; self.n];
        for (i, v) in set.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.iter().all(|&v| local[v] != usize::MAX))
            .map(|e| e.iter().map(|&v| local[v]).collect())
            .collect();
        Ok(Induced {
            graph: Self::from_canonical_edges(set.len(), edges),
            ids: set.as_slice().to_vec(),
        })
    }

    /// `G - X`.
    pub fn without(&self, removed: &VertexSet) -> Result<Induced> {
        self.induced(&self.vertices().filter(|&v| !removed.contains(v)).collect())
    }

    /// Connected components ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&vec![true; self.n])
    }

    /// Components of the subhypergraph induced by `mask`.
    pub fn components_within(&self, mask: &[bool]) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in self.vertices() {
            if !mask[start] || seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &e in &self.incidence[v] {
                    if !self.edge_inside(e, mask) {
                        continue;
                    }
                    for &w in &self.edges[e] {
                        if !seen[w] {
                            seen[w] = true;
                            comp.push(w);
                        }
                    }
                }
            }
            out.push(comp.into());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Breadth-first distances from `source` inside the subhypergraph induced
    /// by `mask`, where two vertices are adjacent if they share an edge.
    ///
    /// A shortest walk in this adjacency is always a hyperpath: a repeated
    /// vertex could be short-cut, and if the same edge were used at steps
    /// `i < j` then `v_i` and `v_{j+1}` would share it, again giving a
    /// shorter walk. So breadth-first distance equals hyperpath distance.
    pub fn distances_within(&self, source: Vertex, mask: &[bool]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        if !mask[source] {
            return dist;
        }
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].unwrap_or_default();
            for &e in &self.incidence[v] {
                if !self.edge_inside(e, mask) {
                    continue;
                }
                for &w in &self.edges[e] {
                    if dist[w].is_none() {
                        dist[w] = Some(dv + 1);
                        queue.push_back(w);
                    }
                }
            }
        }
        dist
    }

    /// Length of a shortest `(v, w)`-hyperpath, `None` when there is none.
    pub fn distance(&self, v: Vertex, w: Vertex) -> Result<Option<usize>> {
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        if v == w {
            return Err(Error::SameVertex(v));
        }
        Ok(self.distances_within(v, &vec![true; self.n])[w])
    }

    /// Vertices `v` for which `G - v` has at least two components.
    ///
    /// Removing `v` drops every edge through `v`, so each vertex of a lone
    /// hyperedge of size three or more is separating.
    pub fn separating_vertices(&self) -> Result<VertexSet> {
        self.require_connected_nonempty()?;
        let mut mask = vec![true; self.n];
        let mut out = VertexSet::new();
        for v in self.vertices() {
            mask[v] = false;
            if self.components_within(&mask).len() >= 2 {
                out.insert(v);
            }
            mask[v] = true;
        }
        Ok(out)
    }

    /// Groups of `G[mask] - v` that stay apart once the edges through `v`
    /// are put back: components of `G[mask] - v`, merged whenever a single
    /// edge through `v` touches several of them. Ordered by smallest vertex.
    pub fn split_groups_within(&self, v: Vertex, mask: &[bool]) -> Vec<VertexSet> {
        let mut rest = mask.to_vec();
        rest[v] = false;
        let comps = self.components_within(&rest);
        let mut comp_of = vec![usize::MAX; self.n];
        for (i, c) in comps.iter().enumerate() {
            for w in c {
                comp_of[w] = i;
            }
        }
        let mut parent: Vec<usize> = (0..comps.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &e in &self.incidence[v] {
            if !self.edge_inside(e, mask) {
                continue;
            }
            let mut touched = self.edges[e]
                .iter()
                .filter(|&&w| w != v)
                .map(|&w| comp_of[w]);
            if let Some(first) = touched.next() {
                for c in touched {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, c));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut groups: Vec<Vec<Vertex>> = vec![Vec::new(); comps.len()];
        for (i, c) in comps.iter().enumerate() {
            let root = find(&mut parent, i);
            groups[root].extend(c.iter());
        }
        let mut out: Vec<VertexSet> = groups
            .into_iter()
            .filter(|g| !g.is_empty())
            .map(VertexSet::from)
            .collect();
        out.sort();
        out
    }

    /// Cut vertices of `G[mask]`: vertices at which the subhypergraph splits
    /// into two edge-disjoint parts, each with at least one other vertex.
    /// These are the articulation points of the vertex-edge incidence graph.
    pub fn cut_vertices_within(&self, mask: &[bool]) -> VertexSet {
        (0..self.n)
            .filter(|&v| mask[v] && self.split_groups_within(v, mask).len() >= 2)
            .collect()
    }

    pub fn cut_vertices(&self) -> Result<VertexSet> {
        self.require_connected_nonempty()?;
        Ok(self.cut_vertices_within(&vec![true; self.n]))
    }

    /// Whether the hypergraph is connected and has no cut vertex.
    pub fn is_block(&self) -> bool {
        self.n >= 1
            && self.is_connected()
            && self.cut_vertices_within(&vec![true; self.n]).is_empty()
    }

    /// Decomposes a connected hypergraph into blocks by splitting at cut
    /// vertices recursively. Every edge lies in exactly one block and two
    /// blocks share at most one vertex, which is a cut vertex.
    pub fn blocks(&self) -> Result<BlockDecomposition> {
        if self.n == 0 {
            return Ok(BlockDecomposition::default());
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut blocks = Vec::new();
        self.split_blocks(VertexSet::full(self.n), &mut blocks);
        blocks.sort();
        let mut count = vec![0usize; self.n];
        for b in &blocks {
            for v in b {
                count[v] += 1;
            }
        }
        let cut_vertices = self.vertices().filter(|&v| count[v] >= 2).collect();
        Ok(BlockDecomposition {
            blocks,
            cut_vertices,
        })
    }

    fn split_blocks(&self, set: VertexSet, out: &mut Vec<VertexSet>) {
        let mask = set.mask(self.n);
        for v in set.iter() {
            let groups = self.split_groups_within(v, &mask);
            if groups.len() >= 2 {
                for g in groups {
                    let mut part = g;
                    part.insert(v);
                    self.split_blocks(part, out);
                }
                return;
            }
        }
        out.push(set);
    }

    fn require_connected_nonempty(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Empty);
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(())
    }

    /// `tK_n`: every pair of the `n` vertices joined by `t` parallel edges.
    pub fn complete(t: usize, n: usize) -> Result<Self> {
        if t == 0 || n == 0 {
            return Err(Error::Precondition("tK_n needs t >= 1 and n >= 1".into()));
        }
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for _ in 0..t {
                    edges.push(vec![a, b]);
                }
            }
        }
        Ok(Self::from_canonical_edges(n, edges))
    }

    /// `tC_n`: the cycle `0, 1, ..., n-1` with every edge repeated `t` times.
    pub fn cycle(t: usize, n: usize) -> Result<Self> {
        if t == 0 || n < 3 {
            return Err(Error::Precondition("tC_n needs t >= 1 and n >= 3".into()));
        }
        let mut edges = Vec::new();
        for a in 0..n {
            let b = (a + 1) % n;
            for _ in 0..t {
                edges.push(vec![a.min(b), a.max(b)]);
            }
        }
        Ok(Self::from_canonical_edges(n, edges))
    }

    /// Glues `left` and `right` by identifying `left_vertex` with
    /// `right_vertex`. The merged vertex becomes 0, then come the remaining
    /// vertices of `left` and of `right`, each in increasing order.
    pub fn merge_at(
        left: &Hypergraph,
        left_vertex: Vertex,
        right: &Hypergraph,
        right_vertex: Vertex,
    ) -> Result<Merged> {
        left.check_vertex(left_vertex)?;
        right.check_vertex(right_vertex)?;
        let mut next = 1;
        let mut relabel = |g: &Hypergraph, pivot: Vertex| -> Vec<Vertex> {
            g.vertices()
                .map(|v| {
                    if v == pivot {
                        0
                    } else {
                        next += 1;
                        next - 1
                    }
                })
                .collect()
        };
        let left_ids = relabel(left, left_vertex);
        let right_ids = relabel(right, right_vertex);
        let n = left.n + right.n - 1;
        let edges = left
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| left_ids[v]).collect::<Vec<_>>())
            .chain(
                right
                    .edges
                    .iter()
                    .map(|e| e.iter().map(|&v| right_ids[v]).collect()),
            );
        Ok(Merged {
            graph: Self::new(n, edges)?,
            left: left_ids,
            right: right_ids,
        })
    }

    /// Reads the text format: a header line `n m`, then `m` lines of
    /// 1-based vertex ids, one hyperedge per line. Lines starting with `#`
    /// and blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (line_no, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            message: "missing header line \"n m\"".into(),
        })?;
        let header = parse_numbers(line_no, header)?;
        let [n, m] = header[..] else {
            return Err(Error::Parse {
                line: line_no,
                message: "header must be \"n m\"".into(),
            });
        };
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (line_no, line) = lines.next().ok_or(Error::Parse {
                line: 0,
                message: format!("expected {m} edge lines, found {}", edges.len()),
            })?;
            let ids = parse_numbers(line_no, line)?;
            let mut edge = Vec::with_capacity(ids.len());
            for id in ids {
                if id == 0 || id > n {
                    return Err(Error::VertexOutOfRange { vertex: id, n });
                }
                edge.push(id - 1);
            }
            edges.push(edge);
        }
        if let Some((line_no, _)) = lines.next() {
            return Err(Error::Parse {
                line: line_no,
                message: format!("unexpected content after {m} edges"),
            });
        }
        Self::new(n, edges).map_err(|e| match e {
            Error::Loop { edge, vertex } => Error::Loop {
                edge: edge.iter().map(|v| v + 1).collect(),
                vertex: vertex + 1,
            },
            Error::EdgeTooSmall(edge) => Error::EdgeTooSmall(edge.iter().map(|v| v + 1).collect()),
            other => other,
        })
    }

    /// Canonical text form, inverse of [`Hypergraph::parse`].
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.edges.len())?;
        for e in &self.edges {
            let line: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Hypergraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("expected a non-negative integer, found {tok:?}"),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[Vertex]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn two_triangles() -> Hypergraph {
        let k3 = Hypergraph::complete(1, 3).unwrap();
        Hypergraph::merge_at(&k3, 0, &k3, 0).unwrap().graph
    }

    #[test]
    fn degrees_of_generated_families() {
        let g = Hypergraph::complete(2, 3).unwrap();
        assert!(g.vertices().all(|v| g.degree(v) == 4));
        let c = Hypergraph::cycle(1, 5).unwrap();
        assert!(c.vertices().all(|v| c.degree(v) == 2));
        assert_eq!(Hypergraph::edgeless(1).degree(0), 0);
        assert!(Hypergraph::edgeless(1).checked_degree(1).is_err());
    }

    #[test]
    fn generator_sizes() {
        let k4 = Hypergraph::complete(1, 4).unwrap();
        assert_eq!((k4.vertex_count(), k4.edge_count()), (4, 6));
        let c = Hypergraph::cycle(2, 5).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count()), (5, 10));
        assert!(c.vertices().all(|v| c.degree(v) == 4));
        let m = two_triangles();
        assert_eq!((m.vertex_count(), m.edge_count()), (5, 6));
        assert_eq!(m.degree(0), 4);
        assert!(Hypergraph::cycle(1, 2).is_err());
    }

    #[test]
    fn induced_drops_edges_leaving_the_set() {
        let k4 = Hypergraph::complete(1, 4).unwrap();
        let sub = k4.induced(&set(&[0, 2, 3])).unwrap();
        assert_eq!(sub.graph, Hypergraph::complete(1, 3).unwrap());
        assert_eq!(sub.ids, vec![0, 2, 3]);
        assert_eq!(k4.induced(&VertexSet::full(4)).unwrap().graph, k4);

        let e = Hypergraph::new(3, [vec![0, 1, 2]]).unwrap();
        let sub = e.induced(&set(&[0, 1])).unwrap();
        assert_eq!((sub.graph.vertex_count(), sub.graph.edge_count()), (2, 0));
        assert!(e.induced(&set(&[5])).is_err());
    }

    #[test]
    fn components_and_distance() {
        let k3 = Hypergraph::complete(1, 3).unwrap();
        let two = Hypergraph::new(
            6,
            k3.edges()
                .iter()
                .cloned()
                .chain(k3.edges().iter().map(|e| e.iter().map(|v| v + 3).collect())),
        )
        .unwrap();
        assert_eq!(two.components(), vec![set(&[0, 1, 2]), set(&[3, 4, 5])]);
        assert_eq!(two.distance(0, 4).unwrap(), None);
        assert!(Hypergraph::edgeless(0).components().is_empty());

        let c5 = Hypergraph::cycle(1, 5).unwrap();
        assert_eq!(c5.components().len(), 1);
        assert_eq!(c5.distance(0, 2).unwrap(), Some(2));
        assert_eq!(c5.distance(0, 1).unwrap(), Some(1));
        assert_eq!(c5.distance(1, 1), Err(Error::SameVertex(1)));
    }

    #[test]
    fn separating_vertices_follow_deletion_semantics() {
        assert_eq!(two_triangles().separating_vertices().unwrap(), set(&[0]));
        assert!(Hypergraph::complete(1, 4)
            .unwrap()
            .separating_vertices()
            .unwrap()
            .is_empty());
        let e = Hypergraph::new(3, [vec![0, 1, 2]]).unwrap();
        assert_eq!(e.separating_vertices().unwrap(), set(&[0, 1, 2]));
        // ...but a lone hyperedge does not split, so it is a block.
        assert!(e.cut_vertices().unwrap().is_empty());
        assert!(e.is_block());
        assert_eq!(
            Hypergraph::edgeless(2).separating_vertices(),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn blocks_of_small_examples() {
        let d = two_triangles().blocks().unwrap();
        assert_eq!(d.blocks, vec![set(&[0, 1, 2]), set(&[0, 3, 4])]);
        assert_eq!(d.cut_vertices, set(&[0]));

        let c7 = Hypergraph::cycle(2, 7).unwrap().blocks().unwrap();
        assert_eq!(c7.blocks.len(), 1);

        let path = Hypergraph::new(3, [[0, 1], [1, 2]]).unwrap();
        let d = path.blocks().unwrap();
        assert_eq!(d.blocks, vec![set(&[0, 1]), set(&[1, 2])]);

        // Edge {0,1,2} plus pendant edge {2,3}: vertex 2 is a cut vertex.
        let h = Hypergraph::new(4, [vec![0, 1, 2], vec![2, 3]]).unwrap();
        let d = h.blocks().unwrap();
        assert_eq!(d.blocks, vec![set(&[0, 1, 2]), set(&[2, 3])]);
        assert_eq!(d.cut_vertices, set(&[2]));
    }

    #[test]
    fn parse_and_serialize() {
        let g = Hypergraph::parse("3 1\n1 2 3\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[vec![0, 1, 2]]);

        let text = "# comment\n4 3\n\n3 4\n1 2\n1 2\n";
        let g = Hypergraph::parse(text).unwrap();
        assert_eq!(g.to_text(), "4 3\n1 2\n1 2\n3 4\n");
        assert_eq!(Hypergraph::parse(&g.to_text()).unwrap(), g);

        assert!(matches!(
            Hypergraph::parse("2 1\n1 1\n"),
            Err(Error::Loop { .. })
        ));
        assert!(matches!(
            Hypergraph::parse("2 1\n1 3\n"),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            Hypergraph::parse("2 1\n1\n"),
            Err(Error::EdgeTooSmall(_))
        ));
        assert!(matches!(
            Hypergraph::parse("2 2\n1 2\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Hypergraph::parse("2 x\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Hypergraph::parse("2 1\n1 2\n1 2\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(Hypergraph::parse(""), Err(Error::Parse { .. })));
    }
}
