//! Hard pairs: the obstructions to `f`-partitions of connected hypergraphs
//! whose budgets cover every degree.
//!
//! A connected pair `(G, f)` is hard when it is one of
//!
//! 1. a block where one coordinate carries the whole degree,
//!    `f_j(v) = d_G(v)` and every other coordinate is zero;
//! 2. `tK_n` (`n >= 3`) with `f(v) = (t n_1, ..., t n_p)` at every vertex,
//!    `n_1 + ... + n_p = n - 1` and at least two `n_i` non-zero;
//! 3. `tC_n` (`n >= 5` odd) with `f_k = f_l = t` for two indices `k != l`
//!    and all other coordinates zero;
//! 4. two hard pairs glued at one vertex whose budget is the sum of the two
//!    glued budgets.
//!
//! `tC_3` equals `tK_3` and is reported by case 2.
//!
//! Certificates name ambient vertex ids, so validation needs no isomorphism
//! search. A merge node records the glued vertex once (both sides already
//! refer to it by its ambient id) together with how its budget is shared.

use std::collections::HashMap;
use std::fmt;

use crate::budget::VectorFunction;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CertificateKind {
    /// Case 1 with concentrating coordinate `part` (0-based).
    Block { part: usize },
    /// Case 2: `tK_n` with `f = t * counts` at every vertex.
    Complete {
        t: usize,
        n: usize,
        counts: Vec<usize>,
    },
    /// Case 3: `tC_n` with `f_k = f_l = t` (0-based `k`, `l`).
    OddCycle {
        t: usize,
        n: usize,
        k: usize,
        l: usize,
    },
    /// Case 4: glued at `v_star`, which gets `left_share` on the left side
    /// and `right_share` on the right.
    Merge {
        left: Box<HardPairCertificate>,
        right: Box<HardPairCertificate>,
        v_star: Vertex,
        left_share: Vec<usize>,
        right_share: Vec<usize>,
    },
}

/// A node of a hard-pair certificate tree. `vertices` is the ambient vertex
/// set covered by the node: sorted, except for odd cycles where it lists the
/// cycle in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HardPairCertificate {
    pub vertices: Vec<Vertex>,
    pub kind: CertificateKind,
}

impl HardPairCertificate {
    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// Number of leaves (blocks) in the tree.
    pub fn leaf_count(&self) -> usize {
        match &self.kind {
            CertificateKind::Merge { left, right, .. } => left.leaf_count() + right.leaf_count(),
            _ => 1,
        }
    }

    /// Rewrites every vertex id through `map`.
    pub fn relabel(&self, map: &[Vertex]) -> Self {
        let kind = match &self.kind {
            CertificateKind::Merge {
                left,
                right,
                v_star,
                left_share,
                right_share,
            } => CertificateKind::Merge {
                left: Box::new(left.relabel(map)),
                right: Box::new(right.relabel(map)),
                v_star: map[*v_star],
                left_share: left_share.clone(),
                right_share: right_share.clone(),
            },
            leaf => leaf.clone(),
        };
        let mut vertices: Vec<Vertex> = self.vertices.iter().map(|&v| map[v]).collect();
        if !matches!(kind, CertificateKind::OddCycle { .. }) {
            vertices.sort_unstable();
        }
        Self { vertices, kind }
    }

    fn write_tree(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        let indent = "  ".repeat(depth);
        let ids: Vec<String> = self.vertices.iter().map(|v| (v + 1).to_string()).collect();
        let ids = ids.join(" ");
        match &self.kind {
            CertificateKind::Block { part } => writeln!(f, "{indent}block(j={}) [{ids}]", part + 1),
            CertificateKind::Complete { t, n, counts } => writeln!(
                f,
                "{indent}complete(t={t}, n={n}, n_i=({})) [{ids}]",
                join(counts)
            ),
            CertificateKind::OddCycle { t, n, k, l } => writeln!(
                f,
                "{indent}odd-cycle(t={t}, n={n}, k={}, l={}) [{ids}]",
                k + 1,
                l + 1
            ),
            CertificateKind::Merge {
                left,
                right,
                v_star,
                left_share,
                right_share,
            } => {
                writeln!(
                    f,
                    "{indent}merge(v*={}, left=({}), right=({})) [{ids}]",
                    v_star + 1,
                    join(left_share),
                    join(right_share)
                )?;
                left.write_tree(f, depth + 1)?;
                right.write_tree(f, depth + 1)
            }
        }
    }
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Indented tree, one node per line, 1-based vertex ids and part indices.
impl fmt::Display for HardPairCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_tree(f, 0)
    }
}

/// `f_1(v) + ... + f_p(v) = d_G(v)` at every vertex.
pub fn is_tight(g: &Hypergraph, f: &VectorFunction) -> bool {
    f.len() == g.vertex_count() && g.vertices().all(|v| f.total(v) == g.degree(v))
}

/// Leaf structure of a block, independent of budgets.
enum Shape {
    /// All edges have size two and every pair has multiplicity `t`.
    Complete {
        t: usize,
    },
    /// All edges have size two and form a cycle with multiplicity `t`,
    /// listed in cycle order.
    Cycle {
        t: usize,
        order: Vec<Vertex>,
    },
    Other,
}

/// Recognizes `tK_n` and `tC_n` (`n >= 3`) on local ids `0..k`.
fn shape(g: &Hypergraph) -> Shape {
    let k = g.vertex_count();
    if k < 3 || g.edges().iter().any(|e| e.len() != 2) {
        return Shape::Other;
    }
    let mut mult = vec![vec![0usize; k]; k];
    for e in g.edges() {
        mult[e[0]][e[1]] += 1;
        mult[e[1]][e[0]] += 1;
    }
    let t = g.edges().first().map_or(0, |e| mult[e[0]][e[1]]);
    if t == 0 || g.edges().iter().any(|e| mult[e[0]][e[1]] != t) {
        return Shape::Other;
    }
    let pairs = g.edge_count() / t;
    if pairs == k * (k - 1) / 2 {
        return Shape::Complete { t };
    }
    let nbrs: Vec<Vec<Vertex>> = (0..k)
        .map(|v| (0..k).filter(|&w| mult[v][w] > 0).collect())
        .collect();
    if pairs != k || nbrs.iter().any(|n| n.len() != 2) {
        return Shape::Other;
    }
    let mut order = vec![0];
    let mut prev = 0;
    let mut cur = nbrs[0][0];
    while cur != 0 {
        order.push(cur);
        let next = if nbrs[cur][0] == prev {
            nbrs[cur][1]
        } else {
            nbrs[cur][0]
        };
        prev = cur;
        cur = next;
    }
    if order.len() == k {
        Shape::Cycle { t, order }
    } else {
        Shape::Other
    }
}

/// Leaf classification of a block given with local ids; `ids` maps local to
/// ambient vertices.
fn classify_local(
    b: &Hypergraph,
    f: &VectorFunction,
    ids: &[Vertex],
) -> Option<HardPairCertificate> {
    let k = b.vertex_count();
    let p = f.parts();
    let sorted_ids = || {
        let mut v = ids.to_vec();
        v.sort_unstable();
        v
    };
    if let Some(part) = (0..p).find(|&j| {
        b.vertices()
            .all(|v| (0..p).all(|i| f.get(v, i) == if i == j { b.degree(v) } else { 0 }))
    }) {
        return Some(HardPairCertificate {
            vertices: sorted_ids(),
            kind: CertificateKind::Block { part },
        });
    }
    if k == 0 || b.vertices().any(|v| f.row(v) != f.row(0)) {
        return None;
    }
    let row = f.row(0);
    match shape(b) {
        Shape::Complete { t } => {
            if row.iter().any(|x| x % t != 0) {
                return None;
            }
            let counts: Vec<usize> = row.iter().map(|x| x / t).collect();
            let nonzero = counts.iter().filter(|&&c| c > 0).count();
            (counts.iter().sum::<usize>() == k - 1 && nonzero >= 2).then(|| HardPairCertificate {
                vertices: sorted_ids(),
                kind: CertificateKind::Complete { t, n: k, counts },
            })
        }
        Shape::Cycle { t, order } if k >= 5 && k % 2 == 1 => {
            let carriers: Vec<usize> = (0..p).filter(|&i| row[i] != 0).collect();
            match carriers[..] {
                [k_idx, l_idx] if row[k_idx] == t && row[l_idx] == t => Some(HardPairCertificate {
                    vertices: order.iter().map(|&v| ids[v]).collect(),
                    kind: CertificateKind::OddCycle {
                        t,
                        n: k,
                        k: k_idx,
                        l: l_idx,
                    },
                }),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Classifies a block against cases 1 to 3, returning a leaf certificate
/// over the block's own vertex ids.
pub fn classify_block(b: &Hypergraph, f: &VectorFunction) -> Result<Option<HardPairCertificate>> {
    f.check_len(b)?;
    if b.vertex_count() == 0 {
        return Err(Error::Empty);
    }
    if !b.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some(v) = b.cut_vertices()?.first() {
        return Err(Error::NotABlock(v));
    }
    let ids: Vec<Vertex> = b.vertices().collect();
    Ok(classify_local(b, f, &ids))
}

type MemoKey = (VertexSet, Vec<Vec<usize>>);

struct Recognizer<'a> {
    g: &'a Hypergraph,
    memo: HashMap<MemoKey, Option<HardPairCertificate>>,
}

impl Recognizer<'_> {
    /// Is `(G[set], f|set)` a hard pair? `f` is indexed by ambient vertex.
    fn run(&mut self, set: VertexSet, f: &VectorFunction) -> Option<HardPairCertificate> {
        let key: MemoKey = (set.clone(), set.iter().map(|v| f.row(v).to_vec()).collect());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let result = self.search(&set, f);
        self.memo.insert(key, result.clone());
        result
    }

    fn search(&mut self, set: &VertexSet, f: &VectorFunction) -> Option<HardPairCertificate> {
        let g = self.g;
        let n = g.vertex_count();
        let mask = set.mask(n);
        // Every hard pair is tight: leaves are by construction, and gluing
        // adds degrees and budgets at the glued vertex alike.
        if set.iter().any(|v| f.total(v) != g.degree_within(v, &mask)) {
            return None;
        }
        let cut = set.iter().find_map(|v| {
            let groups = g.split_groups_within(v, &mask);
            (groups.len() >= 2).then_some((v, groups))
        });
        let Some((v_star, groups)) = cut else {
            let local = g.induced(set).ok()?;
            let f_local = f.restrict_set(set);
            return classify_local(&local.graph, &f_local, &local.ids);
        };
        // Splitting off any one group is complete: a hard pair is a tree of
        // leaf blocks, and the leaves on either side of the cut glue up into
        // hard pairs on their own.
        for group in groups {
            let mut left = group.clone();
            left.insert(v_star);
            let right: VertexSet = set.iter().filter(|&v| !group.contains(v)).collect();
            let left_degree = g.degree_within(v_star, &left.mask(n));
            let total = f.row(v_star).to_vec();
            for share in allocations(&total, left_degree) {
                let rest: Vec<usize> = total.iter().zip(&share).map(|(a, b)| a - b).collect();
                let Some(l) = self.run(left.clone(), &f.with_row(v_star, share.clone())) else {
                    continue;
                };
                let Some(r) = self.run(right.clone(), &f.with_row(v_star, rest.clone())) else {
                    continue;
                };
                return Some(HardPairCertificate {
                    vertices: set.as_slice().to_vec(),
                    kind: CertificateKind::Merge {
                        left: Box::new(l),
                        right: Box::new(r),
                        v_star,
                        left_share: share,
                        right_share: rest,
                    },
                });
            }
        }
        None
    }
}

/// All vectors `a` with `a <= bound` coordinatewise and `sum(a) = target`,
/// in lexicographic order.
fn allocations(bound: &[usize], target: usize) -> Vec<Vec<usize>> {
    fn go(bound: &[usize], target: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = prefix.len();
        if i == bound.len() {
            if target == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let room: usize = bound[i + 1..].iter().sum();
        let lo = target.saturating_sub(room);
        for x in lo..=bound[i].min(target) {
            prefix.push(x);
            go(bound, target - x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(bound, target, &mut Vec::new(), &mut out);
    out
}

/// Decides whether a connected pair `(G, f)` is hard, returning a
/// certificate when it is.
pub fn recognize(g: &Hypergraph, f: &VectorFunction) -> Result<Option<HardPairCertificate>> {
    f.check_len(g)?;
    if g.vertex_count() == 0 {
        return Err(Error::Empty);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_tight(g, f) {
        return Ok(None);
    }
    let mut rec = Recognizer {
        g,
        memo: HashMap::new(),
    };
    Ok(rec.run(VertexSet::full(g.vertex_count()), f))
}

/// Glues two pairs at `left_vertex` / `right_vertex` (case 4). The merged
/// vertex gets the sum of both budgets; ids follow [`Hypergraph::merge_at`].
pub fn merge_pairs(
    left: (&Hypergraph, &VectorFunction),
    left_vertex: Vertex,
    right: (&Hypergraph, &VectorFunction),
    right_vertex: Vertex,
) -> Result<(crate::hypergraph::Merged, VectorFunction)> {
    let (g1, f1) = left;
    let (g2, f2) = right;
    f1.check_len(g1)?;
    f2.check_len(g2)?;
    if f1.parts() != f2.parts() {
        return Err(Error::LengthMismatch {
            what: "vector function parts",
            got: f2.parts(),
            expected: f1.parts(),
        });
    }
    let merged = Hypergraph::merge_at(g1, left_vertex, g2, right_vertex)?;
    let mut rows = vec![vec![0; f1.parts()]; merged.graph.vertex_count()];
    for v in g1.vertices() {
        for (acc, x) in rows[merged.left[v]].iter_mut().zip(f1.row(v)) {
            *acc += x;
        }
    }
    for v in g2.vertices() {
        for (acc, x) in rows[merged.right[v]].iter_mut().zip(f2.row(v)) {
            *acc += x;
        }
    }
    let f = VectorFunction::new(f1.parts(), rows)?;
    Ok((merged, f))
}

/// Verifies a certificate literally against `(G, f)`. The error names the
/// first failed check.
pub fn check_certificate(
    g: &Hypergraph,
    f: &VectorFunction,
    cert: &HardPairCertificate,
) -> std::result::Result<(), String> {
    if f.len() != g.vertex_count() {
        return Err("vector function length does not match the hypergraph".into());
    }
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err("hypergraph must be non-empty and connected".into());
    }
    if cert.vertex_set() != VertexSet::full(g.vertex_count()) {
        return Err("root does not cover every vertex exactly".into());
    }
    check_node(g, f, cert)
}

fn check_node(
    g: &Hypergraph,
    f: &VectorFunction,
    cert: &HardPairCertificate,
) -> std::result::Result<(), String> {
    let n = g.vertex_count();
    let p = f.parts();
    let set = cert.vertex_set();
    if set.len() != cert.vertices.len() || set.iter().any(|v| v >= n) {
        return Err(format!("node vertex list {:?} is invalid", cert.vertices));
    }
    let mask = set.mask(n);
    let inner_edges: Vec<&Vec<Vertex>> = g
        .edges()
        .iter()
        .filter(|e| e.iter().all(|&v| mask[v]))
        .collect();
    let deg = |v: Vertex| g.degree_within(v, &mask);
    let multiplicity = |a: Vertex, b: Vertex| {
        inner_edges
            .iter()
            .filter(|e| e[..] == [a.min(b), a.max(b)])
            .count()
    };

    match &cert.kind {
        CertificateKind::Block { part } => {
            if *part >= p {
                return Err(format!("block index {} out of range", part + 1));
            }
            if set.is_empty()
                || g.components_within(&mask).len() != 1
                || !g.cut_vertices_within(&mask).is_empty()
            {
                return Err("case 1 leaf is not a block".into());
            }
            for v in &set {
                for i in 0..p {
                    let want = if i == *part { deg(v) } else { 0 };
                    if f.get(v, i) != want {
                        return Err(format!("case 1 budget mismatch at vertex {}", v + 1));
                    }
                }
            }
            Ok(())
        }
        CertificateKind::Complete {
            t,
            n: order,
            counts,
        } => {
            if *order < 3 || *order != set.len() || *t == 0 {
                return Err("case 2 leaf needs n >= 3, t >= 1 and n matching its vertices".into());
            }
            if counts.len() != p
                || counts.iter().sum::<usize>() != order - 1
                || counts.iter().filter(|&&c| c > 0).count() < 2
            {
                return Err("case 2 counts must sum to n-1 with at least two non-zero".into());
            }
            if inner_edges.iter().any(|e| e.len() != 2)
                || inner_edges.len() != t * order * (order - 1) / 2
            {
                return Err("case 2 leaf is not tK_n".into());
            }
            let vs = set.as_slice();
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    if multiplicity(a, b) != *t {
                        return Err("case 2 leaf is not tK_n".into());
                    }
                }
            }
            for v in &set {
                if (0..p).any(|i| f.get(v, i) != t * counts[i]) {
                    return Err(format!("case 2 budget mismatch at vertex {}", v + 1));
                }
            }
            Ok(())
        }
        CertificateKind::OddCycle { t, n: order, k, l } => {
            if *order < 5 || order % 2 == 0 || *order != set.len() || *t == 0 {
                return Err(
                    "case 3 leaf needs odd n >= 5, t >= 1 and n matching its vertices".into(),
                );
            }
            if k == l || *k >= p || *l >= p {
                return Err("case 3 needs two distinct indices in range".into());
            }
            if inner_edges.iter().any(|e| e.len() != 2) || inner_edges.len() != t * order {
                return Err("case 3 leaf is not tC_n".into());
            }
            let cyc = &cert.vertices;
            for i in 0..*order {
                if multiplicity(cyc[i], cyc[(i + 1) % order]) != *t {
                    return Err("case 3 leaf is not tC_n in the listed order".into());
                }
            }
            for v in &set {
                for i in 0..p {
                    let want = if i == *k || i == *l { *t } else { 0 };
                    if f.get(v, i) != want {
                        return Err(format!("case 3 budget mismatch at vertex {}", v + 1));
                    }
                }
            }
            Ok(())
        }
        CertificateKind::Merge {
            left,
            right,
            v_star,
            left_share,
            right_share,
        } => {
            let (ls, rs) = (left.vertex_set(), right.vertex_set());
            if !set.contains(*v_star) || !ls.contains(*v_star) || !rs.contains(*v_star) {
                return Err("merge vertex must lie on both sides".into());
            }
            if ls.intersection_len(&rs) != 1 {
                return Err("merged sides must share exactly the merge vertex".into());
            }
            let union: VertexSet = ls.iter().chain(rs.iter()).collect();
            if union != set {
                return Err("merged sides do not cover the node".into());
            }
            let (lm, rm) = (ls.mask(n), rs.mask(n));
            if inner_edges
                .iter()
                .any(|e| !e.iter().all(|&v| lm[v]) && !e.iter().all(|&v| rm[v]))
            {
                return Err("an edge crosses the merge".into());
            }
            if left_share.len() != p || right_share.len() != p {
                return Err("merge shares have the wrong length".into());
            }
            if (0..p).any(|i| left_share[i] + right_share[i] != f.get(*v_star, i)) {
                return Err(format!(
                    "merge shares do not add up to the budget of vertex {}",
                    v_star + 1
                ));
            }
            check_node(g, &f.with_row(*v_star, left_share.clone()), left)?;
            check_node(g, &f.with_row(*v_star, right_share.clone()), right)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vf(n: usize, row: &[usize]) -> VectorFunction {
        VectorFunction::constant(n, row).unwrap()
    }

    #[test]
    fn tightness() {
        assert!(is_tight(
            &Hypergraph::complete(1, 4).unwrap(),
            &vf(4, &[1, 1, 1])
        ));
        assert!(!is_tight(
            &Hypergraph::cycle(1, 5).unwrap(),
            &vf(5, &[2, 1])
        ));
        assert!(is_tight(&Hypergraph::edgeless(1), &vf(1, &[0, 0])));
    }

    #[test]
    fn classify_examples() {
        let k4 = Hypergraph::complete(1, 4).unwrap();
        let c = classify_block(&k4, &vf(4, &[1, 2])).unwrap().unwrap();
        assert_eq!(
            c.kind,
            CertificateKind::Complete {
                t: 1,
                n: 4,
                counts: vec![1, 2]
            }
        );

        let c5 = Hypergraph::cycle(2, 5).unwrap();
        let c = classify_block(&c5, &vf(5, &[2, 2])).unwrap().unwrap();
        assert_eq!(
            c.kind,
            CertificateKind::OddCycle {
                t: 2,
                n: 5,
                k: 0,
                l: 1
            }
        );
        assert!(check_certificate(&c5, &vf(5, &[2, 2]), &c).is_ok());

        let h = Hypergraph::new(4, [vec![0, 1, 2], vec![1, 2, 3], vec![0, 3]]).unwrap();
        let f =
            VectorFunction::new(2, h.vertices().map(|v| vec![h.degree(v), 0]).collect()).unwrap();
        let c = classify_block(&h, &f).unwrap().unwrap();
        assert_eq!(c.kind, CertificateKind::Block { part: 0 });

        // tC_3 is reported as tK_3.
        let c3 = Hypergraph::cycle(2, 3).unwrap();
        let c = classify_block(&c3, &vf(3, &[2, 2])).unwrap().unwrap();
        assert!(matches!(
            c.kind,
            CertificateKind::Complete { t: 2, n: 3, .. }
        ));

        let path = Hypergraph::new(3, [[0, 1], [1, 2]]).unwrap();
        assert_eq!(
            classify_block(&path, &vf(3, &[1, 1])),
            Err(Error::NotABlock(1))
        );
    }

    #[test]
    fn recognize_examples() {
        let k3 = Hypergraph::complete(1, 3).unwrap();
        let (m, f) = merge_pairs((&k3, &vf(3, &[1, 1])), 0, (&k3, &vf(3, &[1, 1])), 0).unwrap();
        assert_eq!(f.row(0), &[2, 2]);
        let cert = recognize(&m.graph, &f).unwrap().unwrap();
        match &cert.kind {
            CertificateKind::Merge { left, right, .. } => {
                assert!(matches!(left.kind, CertificateKind::Complete { .. }));
                assert!(matches!(right.kind, CertificateKind::Complete { .. }));
            }
            other => panic!("{other:?}"),
        }
        assert!(check_certificate(&m.graph, &f, &cert).is_ok());

        let c4 = Hypergraph::cycle(1, 4).unwrap();
        assert_eq!(recognize(&c4, &vf(4, &[1, 1])).unwrap(), None);

        let single = recognize(&Hypergraph::edgeless(1), &vf(1, &[0, 0]))
            .unwrap()
            .unwrap();
        assert_eq!(single.kind, CertificateKind::Block { part: 0 });

        assert_eq!(
            recognize(&Hypergraph::edgeless(2), &vf(2, &[0])),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn lone_hyperedge_is_a_block() {
        let e = Hypergraph::new(3, [vec![0, 1, 2]]).unwrap();
        let cert = recognize(&e, &vf(3, &[1, 0])).unwrap().unwrap();
        assert_eq!(cert.kind, CertificateKind::Block { part: 0 });
    }

    #[test]
    fn validator_rejects_broken_leaves() {
        let k4 = Hypergraph::complete(1, 4).unwrap();
        let f = vf(4, &[3, 0, 0]);
        let bad = HardPairCertificate {
            vertices: vec![0, 1, 2, 3],
            kind: CertificateKind::Complete {
                t: 1,
                n: 4,
                counts: vec![3, 0, 0],
            },
        };
        assert!(check_certificate(&k4, &f, &bad).is_err());

        let c3 = Hypergraph::cycle(1, 3).unwrap();
        let bad = HardPairCertificate {
            vertices: vec![0, 1, 2],
            kind: CertificateKind::OddCycle {
                t: 1,
                n: 3,
                k: 0,
                l: 1,
            },
        };
        assert!(check_certificate(&c3, &vf(3, &[1, 1]), &bad).is_err());
    }

    #[test]
    fn allocation_enumeration() {
        assert_eq!(allocations(&[2, 1], 2), vec![vec![1, 1], vec![2, 0]]);
        assert!(allocations(&[1, 1], 3).is_empty());
        assert_eq!(allocations(&[0, 0], 0), vec![vec![0, 0]]);
    }

    #[test]
    fn certificate_text() {
        let k3 = Hypergraph::complete(1, 3).unwrap();
        let (m, f) = merge_pairs((&k3, &vf(3, &[1, 1])), 0, (&k3, &vf(3, &[1, 1])), 0).unwrap();
        let cert = recognize(&m.graph, &f).unwrap().unwrap();
        assert_eq!(
            cert.to_string(),
            "merge(v*=1, left=(1,1), right=(1,1)) [1 2 3 4 5]\n  \
             complete(t=1, n=3, n_i=(1,1)) [1 2 3]\n  \
             complete(t=1, n=3, n_i=(1,1)) [1 4 5]\n"
        );
    }
}
