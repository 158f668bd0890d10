//! Symmetric two-valued relation matrices with `+`/`-` text forms.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::graph::SmallGraph;
use crate::{Error, Result};

/// Distant points are `+`, neighbor points `-`. Under the Pauli reading
/// `+` means non-commuting and `-` commuting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Distant,
    Neighbor,
}

impl Relation {
    pub fn symbol(self) -> char {
        match self {
            Relation::Distant => '+',
            Relation::Neighbor => '-',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            '+' => Some(Relation::Distant),
            // the reference table is typeset with a real minus sign
            '-' | '\u{2212}' => Some(Relation::Neighbor),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationMatrix {
    n: usize,
    cells: Vec<Relation>,
}

/// One disagreeing cell between two relation matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellDiff {
    pub row: usize,
    pub col: usize,
    pub expected: char,
    pub actual: char,
}

impl RelationMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Relation) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                cells.push(f(i, j));
            }
        }
        Self { n, cells }
    }

    /// Parses rows of `+`/`-` characters.
    pub fn from_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let n = rows.len();
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let parsed: Option<Vec<Relation>> =
                row.as_ref().chars().map(Relation::from_symbol).collect();
            let parsed = parsed.ok_or_else(|| {
                Error::Parse(format!("row {} has a symbol other than +/-", i + 1))
            })?;
            if parsed.len() != n {
                return Err(Error::Parse(format!(
                    "row {} has {} cells, expected {n}",
                    i + 1,
                    parsed.len()
                )));
            }
            cells.extend(parsed);
        }
        Ok(Self { n, cells })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Relation {
        self.cells[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, r: Relation) {
        self.cells[i * self.n + j] = r;
    }

    pub fn row_string(&self, i: usize) -> String {
        (0..self.n).map(|j| self.get(i, j).symbol()).collect()
    }

    pub fn rows(&self) -> Vec<String> {
        (0..self.n).map(|i| self.row_string(i)).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Submatrix on the given indices, in the given order.
    pub fn induced(&self, indices: &[usize]) -> Self {
        Self::from_fn(indices.len(), |i, j| self.get(indices[i], indices[j]))
    }

    /// Off-diagonal count of `r` in row `i`.
    pub fn count_in_row(&self, i: usize, r: Relation) -> usize {
        (0..self.n)
            .filter(|&j| j != i && self.get(i, j) == r)
            .count()
    }

    /// Unordered pairs `i < j` with relation `r`.
    pub fn pair_count(&self, r: Relation) -> usize {
        (0..self.n)
            .map(|i| (0..i).filter(|&j| self.get(i, j) == r).count())
            .sum()
    }

    /// The graph whose edges are the off-diagonal cells equal to `r`.
    ///
    /// Panics if the matrix has more than [`SmallGraph::MAX_VERTICES`] rows.
    pub fn graph_of(&self, r: Relation) -> SmallGraph {
        let mut g = SmallGraph::new(self.n);
        for i in 0..self.n {
            for j in 0..i {
                if self.get(i, j) == r {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn diff(&self, actual: &Self) -> Vec<CellDiff> {
        assert_eq!(self.n, actual.n, "relation sizes differ");
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                let (e, a) = (self.get(i, j), actual.get(i, j));
                if e != a {
                    out.push(CellDiff {
                        row: i,
                        col: j,
                        expected: e.symbol(),
                        actual: a.symbol(),
                    });
                }
            }
        }
        out
    }

    /// Rows `j <= i` only, one string per row.
    pub fn lower_triangle(&self) -> Vec<String> {
        (0..self.n)
            .map(|i| (0..=i).map(|j| self.get(i, j).symbol()).collect())
            .collect()
    }

    /// CSV with a header row and a label column, cells `+` or `-`.
    pub fn to_csv(&self, labels: &[String]) -> String {
        assert_eq!(labels.len(), self.n);
        let mut out = String::new();
        for l in labels {
            out.push(',');
            out.push_str(l);
        }
        out.push('\n');
        for (i, l) in labels.iter().enumerate() {
            out.push_str(l);
            for j in 0..self.n {
                out.push(',');
                out.push(self.get(i, j).symbol());
            }
            out.push('\n');
        }
        out
    }

    /// Inverse of [`to_csv`](Self::to_csv). Returns the labels and the matrix.
    pub fn from_csv(text: &str) -> Result<(Vec<String>, Self)> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty CSV".into()))?;
        let labels: Vec<String> = header
            .split(',')
            .skip(1)
            .map(|s| s.trim().to_string())
            .collect();
        let mut rows = Vec::new();
        for (i, line) in lines.enumerate() {
            let mut fields = line.split(',').map(str::trim);
            let label = fields.next().unwrap_or_default();
            if labels.get(i).map(String::as_str) != Some(label) {
                return Err(Error::Parse(format!(
                    "row {} label `{label}` does not match header",
                    i + 1
                )));
            }
            let row: String = fields.collect();
            rows.push(row);
        }
        if rows.len() != labels.len() {
            return Err(Error::Parse(format!(
                "{} rows for {} columns",
                rows.len(),
                labels.len()
            )));
        }
        Ok((labels, Self::from_rows(&rows)?))
    }

    /// Undirected DOT graph with an edge for every off-diagonal `edges` cell.
    pub fn to_dot(&self, name: &str, labels: &[String], edges: Relation) -> String {
        assert_eq!(labels.len(), self.n);
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{name}\" {{");
        for l in labels {
            let _ = writeln!(out, "  \"{l}\";");
        }
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.get(i, j) == edges {
                    let _ = writeln!(out, "  \"{}\" -- \"{}\";", labels[i], labels[j]);
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// `C1`, `C2`, ... labels.
pub fn c_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("C{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::REFERENCE_RELATION;

    #[test]
    fn pair_count_of_35_points() {
        let line = crate::projline::enumerate_line(&crate::ring::build_m2f2());
        let m = line.relation_matrix();
        let distant = m.pair_count(Relation::Distant);
        assert_eq!(distant + m.pair_count(Relation::Neighbor), 35 * 34 / 2);
        // the points distant from (1,0) are the (a,1), one per ring element
        assert_eq!(distant, 35 * 16 / 2);
    }

    #[test]
    fn reference_table_shape() {
        let m = RelationMatrix::from_rows(&REFERENCE_RELATION).unwrap();
        assert_eq!(m.size(), 15);
        assert!(m.is_symmetric());
        for i in 0..15 {
            assert_eq!(m.get(i, i), Relation::Neighbor);
            assert_eq!(m.count_in_row(i, Relation::Neighbor), 6);
            assert_eq!(m.count_in_row(i, Relation::Distant), 8);
        }
    }

    #[test]
    fn csv_round_trip() {
        let m = RelationMatrix::from_rows(&REFERENCE_RELATION).unwrap();
        let labels = c_labels(15);
        let csv = m.to_csv(&labels);
        assert!(csv.starts_with(",C1,C2,"));
        assert!(csv.lines().nth(1).unwrap().starts_with("C1,-,-,-,-,+,+"));
        let (l2, m2) = RelationMatrix::from_csv(&csv).unwrap();
        assert_eq!((l2, m2), (labels, m));
    }

    #[test]
    fn csv_errors() {
        assert!(RelationMatrix::from_csv("").is_err());
        assert!(RelationMatrix::from_csv(",A,B\nA,-,+\nB,+,x\n").is_err());
        assert!(RelationMatrix::from_csv(",A,B\nA,-,+\n").is_err());
        assert!(RelationMatrix::from_csv(",A,B\nB,-,+\nA,+,-\n").is_err());
    }

    #[test]
    fn diff_reports_cells() {
        let a = RelationMatrix::from_rows(&["-+", "+-"]).unwrap();
        let mut b = a.clone();
        b.set(0, 1, Relation::Neighbor);
        let d = a.diff(&b);
        assert_eq!(
            d,
            vec![CellDiff {
                row: 0,
                col: 1,
                expected: '+',
                actual: '-'
            }]
        );
    }

    #[test]
    fn dot_has_one_edge_per_pair() {
        let a = RelationMatrix::from_rows(&["-+-", "+--", "---"]).unwrap();
        let dot = a.to_dot("g", &c_labels(3), Relation::Distant);
        assert_eq!(dot.matches(" -- ").count(), 1);
        assert!(dot.contains("\"C1\" -- \"C2\""));
    }
}
