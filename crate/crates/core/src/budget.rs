//! Per-vertex degree budgets: scalar (`h`) and vector-valued (`f`).

use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::{content_lines, parse_numbers, Hypergraph, Vertex, VertexSet};

/// Scalar budget `h(v)` for every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeBudget(Vec<usize>);

impl DegreeBudget {
    pub fn new(values: Vec<usize>) -> Self {
        Self(values)
    }

    pub fn constant(n: usize, value: usize) -> Self {
        Self(vec![value; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: Vertex) -> usize {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn restrict(&self, ids: &[Vertex]) -> Self {
        Self(ids.iter().map(|&v| self.0[v]).collect())
    }

    pub(crate) fn check_len(&self, g: &Hypergraph) -> Result<()> {
        if self.0.len() != g.vertex_count() {
            return Err(Error::LengthMismatch {
                what: "degree budget",
                got: self.0.len(),
                expected: g.vertex_count(),
            });
        }
        Ok(())
    }

    /// One integer per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        for (line, content) in content_lines(text) {
            let nums = parse_numbers(line, content)?;
            if nums.len() != 1 {
                return Err(Error::Parse {
                    line,
                    message: "expected exactly one integer".into(),
                });
            }
            values.push(nums[0]);
        }
        Ok(Self(values))
    }
}

impl fmt::Display for DegreeBudget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.0 {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A vector function: `p` non-negative budgets `(f_1(v), ..., f_p(v))` per
/// vertex. Part indices are 0-based in the API.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorFunction {
    p: usize,
    rows: Vec<Vec<usize>>,
}

impl VectorFunction {
    pub fn new(p: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        if p == 0 {
            return Err(Error::NoParts);
        }
        if let Some(row) = rows.iter().find(|r| r.len() != p) {
            return Err(Error::LengthMismatch {
                what: "vector function row",
                got: row.len(),
                expected: p,
            });
        }
        Ok(Self { p, rows })
    }

    /// The same vector at every vertex.
    pub fn constant(n: usize, values: &[usize]) -> Result<Self> {
        Self::new(values.len(), vec![values.to_vec(); n])
    }

    pub fn parts(&self) -> usize {
        self.p
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row(&self, v: Vertex) -> &[usize] {
        &self.rows[v]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn get(&self, v: Vertex, part: usize) -> usize {
        self.rows[v][part]
    }

    /// `f_1(v) + ... + f_p(v)`.
    pub fn total(&self, v: Vertex) -> usize {
        self.rows[v].iter().sum()
    }

    pub fn sum_budget(&self) -> DegreeBudget {
        DegreeBudget((0..self.rows.len()).map(|v| self.total(v)).collect())
    }

    /// The scalar budget `f_part`.
    pub fn coordinate(&self, part: usize) -> DegreeBudget {
        DegreeBudget(self.rows.iter().map(|r| r[part]).collect())
    }

    /// `(f_2, ..., f_p)`; requires `p >= 2`.
    pub fn drop_first(&self) -> Result<Self> {
        if self.p < 2 {
            return Err(Error::NoParts);
        }
        Ok(Self {
            p: self.p - 1,
            rows: self.rows.iter().map(|r| r[1..].to_vec()).collect(),
        })
    }

    pub fn restrict(&self, ids: &[Vertex]) -> Self {
        Self {
            p: self.p,
            rows: ids.iter().map(|&v| self.rows[v].clone()).collect(),
        }
    }

    pub fn restrict_set(&self, set: &VertexSet) -> Self {
        self.restrict(set.as_slice())
    }

    pub fn with_row(&self, v: Vertex, row: Vec<usize>) -> Self {
        let mut out = self.clone();
        out.rows[v] = row;
        out
    }

    pub(crate) fn check_len(&self, g: &Hypergraph) -> Result<()> {
        if self.rows.len() != g.vertex_count() {
            return Err(Error::LengthMismatch {
                what: "vector function",
                got: self.rows.len(),
                expected: g.vertex_count(),
            });
        }
        Ok(())
    }

    /// First vertex `v` with `f_1(v) + ... + f_p(v) < d_G(v)`, if any.
    pub fn hypothesis_violation(&self, g: &Hypergraph) -> Option<Vertex> {
        g.vertices().find(|&v| self.total(v) < g.degree(v))
    }

    pub fn check_hypothesis(&self, g: &Hypergraph) -> Result<()> {
        self.check_len(g)?;
        match self.hypothesis_violation(g) {
            None => Ok(()),
            Some(v) => Err(Error::Hypothesis {
                vertex: v,
                budget: self.total(v),
                degree: g.degree(v),
            }),
        }
    }

    /// Header `n p`, then `n` lines of `p` integers.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (line_no, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            message: "missing header line \"n p\"".into(),
        })?;
        let [n, p] = parse_numbers(line_no, header)?[..] else {
            return Err(Error::Parse {
                line: line_no,
                message: "header must be \"n p\"".into(),
            });
        };
        let mut rows = Vec::with_capacity(n);
        for (line, content) in lines {
            let row = parse_numbers(line, content)?;
            if row.len() != p {
                return Err(Error::Parse {
                    line,
                    message: format!("expected {p} integers, found {}", row.len()),
                });
            }
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::Parse {
                line: 0,
                message: format!("expected {n} rows, found {}", rows.len()),
            });
        }
        Self::new(p, rows).map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })
    }
}

impl fmt::Display for VectorFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows.len(), self.p)?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_vector_function() {
        let f = VectorFunction::parse("3 2\n1 1\n# c\n2 0\n0 2\n").unwrap();
        assert_eq!(f.parts(), 2);
        assert_eq!(f.row(1), &[2, 0]);
        assert_eq!(f.total(2), 2);
        assert_eq!(VectorFunction::parse(&f.to_string()).unwrap(), f);
        assert!(VectorFunction::parse("2 2\n1 1\n").is_err());
        assert!(VectorFunction::parse("1 2\n1 1 1\n").is_err());
        assert!(VectorFunction::parse("1 0\n\n").is_err());
    }

    #[test]
    fn parse_degree_budget() {
        let h = DegreeBudget::parse("1\n2\n3\n").unwrap();
        assert_eq!(h.as_slice(), &[1, 2, 3]);
        assert!(DegreeBudget::parse("1 2\n").is_err());
    }

    #[test]
    fn drop_first_and_hypothesis() {
        let g = Hypergraph::cycle(1, 5).unwrap();
        let f = VectorFunction::constant(5, &[1, 1]).unwrap();
        assert!(f.check_hypothesis(&g).is_ok());
        let tail = f.drop_first().unwrap();
        assert_eq!(tail.parts(), 1);
        assert_eq!(tail.hypothesis_violation(&g), Some(0));
        assert!(tail.drop_first().is_err());
    }
}
