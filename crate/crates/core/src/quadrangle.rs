//! Point-line incidence structures and the generalized quadrangle of order
//! two.
//!
//! The quadrangle is not hard-coded: [`build_gq_from_graph`] recovers its lines
//! as the triangles of a collinearity graph, which works because in GQ(2,2)
//! every pair of collinear points has exactly one common neighbor.

use std::fmt;
use std::ops::ControlFlow;

use serde::Serialize;
use serde_json::json;

use crate::graph::{bits, mask_of, SmallGraph};
use crate::{Error, Result, SCHEMA_VERSION};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceStructure {
    labels: Vec<String>,
    lines: Vec<Vec<usize>>,
}

impl IncidenceStructure {
    /// Each line is stored sorted; line order is kept.
    pub fn new(labels: Vec<String>, lines: Vec<Vec<usize>>) -> Self {
        assert!(labels.len() <= SmallGraph::MAX_VERTICES);
        let lines = lines
            .into_iter()
            .map(|mut l| {
                assert!(
                    l.iter().all(|&p| p < labels.len()),
                    "line point out of range"
                );
                l.sort_unstable();
                l
            })
            .collect();
        Self { labels, lines }
    }

    /// Points named `C1`, `C2`, ...
    pub fn with_c_labels(num_points: usize, lines: Vec<Vec<usize>>) -> Self {
        Self::new(crate::relation::c_labels(num_points), lines)
    }

    pub fn num_points(&self) -> usize {
        self.labels.len()
    }

    pub fn point_mask(&self) -> u32 {
        (1u32 << self.num_points()) - 1
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, p: usize) -> &str {
        &self.labels[p]
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn line(&self, i: usize) -> &[usize] {
        &self.lines[i]
    }

    pub fn line_mask(&self, i: usize) -> u32 {
        mask_of(self.lines[i].iter().copied())
    }

    pub fn lines_through(&self, p: usize) -> Vec<usize> {
        (0..self.lines.len())
            .filter(|&i| self.lines[i].contains(&p))
            .collect()
    }

    pub fn line_labels(&self) -> Vec<String> {
        (1..=self.lines.len()).map(|i| format!("L{i}")).collect()
    }

    /// Points adjacent iff they share a line.
    pub fn collinearity_graph(&self) -> SmallGraph {
        let mut g = SmallGraph::new(self.num_points());
        for line in &self.lines {
            for (i, &p) in line.iter().enumerate() {
                for &q in &line[..i] {
                    if p != q && !g.has_edge(p, q) {
                        g.add_edge(p, q);
                    }
                }
            }
        }
        g
    }

    pub fn names(&self, points: &[usize]) -> Vec<String> {
        points.iter().map(|&p| self.labels[p].clone()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "schema": SCHEMA_VERSION,
            "points": self.labels,
            "lines": self.lines.iter().map(|l| self.names(l)).collect::<Vec<_>>(),
        })
    }
}

/// Recovers lines as the triangles of `g`; every edge must lie in exactly one
/// triangle and the result must satisfy the GQ(2,2) axioms.
pub fn build_gq_from_graph(g: &SmallGraph) -> Result<IncidenceStructure> {
    for (u, v) in g.edges() {
        let common = g.common_neighbors(u, v);
        if common != 1 {
            return Err(Error::NotQuadrangleGraph(format!(
                "edge C{}-C{} lies in {common} triangles",
                u + 1,
                v + 1
            )));
        }
    }
    let lines = g.triangles().into_iter().map(Vec::from).collect();
    let s = IncidenceStructure::with_c_labels(g.order(), lines);
    let report = validate_gq_axioms(&s);
    match report.violations.first() {
        None => Ok(s),
        Some(v) => Err(Error::NotQuadrangleGraph(v.to_string())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AxiomViolation {
    LineSize {
        line: usize,
        size: usize,
    },
    PointDegree {
        point: usize,
        lines: usize,
    },
    SharedLines {
        p: usize,
        q: usize,
        lines: usize,
    },
    Transversal {
        point: usize,
        line: usize,
        collinear: usize,
    },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AxiomViolation::LineSize { line, size } => {
                write!(f, "line L{} has {size} points", line + 1)
            }
            AxiomViolation::PointDegree { point, lines } => {
                write!(f, "point {} is on {lines} lines", point + 1)
            }
            AxiomViolation::SharedLines { p, q, lines } => {
                write!(f, "points {} and {} share {lines} lines", p + 1, q + 1)
            }
            AxiomViolation::Transversal {
                point,
                line,
                collinear,
            } => write!(
                f,
                "point {} is collinear with {collinear} points of line L{}",
                point + 1,
                line + 1
            ),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub points: usize,
    pub lines: usize,
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the order-(2,2) axioms: three points per line, three lines per
/// point, at most one line through two points, and for every point off a
/// line exactly one point of the line collinear with it.
pub fn validate_gq_axioms(s: &IncidenceStructure) -> AxiomReport {
    let n = s.num_points();
    let mut violations = Vec::new();
    for (i, l) in s.lines().iter().enumerate() {
        if l.len() != 3 {
            violations.push(AxiomViolation::LineSize {
                line: i,
                size: l.len(),
            });
        }
    }
    for p in 0..n {
        let k = s.lines_through(p).len();
        if k != 3 {
            violations.push(AxiomViolation::PointDegree { point: p, lines: k });
        }
    }
    let masks: Vec<u32> = (0..s.lines().len()).map(|i| s.line_mask(i)).collect();
    for p in 0..n {
        for q in p + 1..n {
            let pq = 1u32 << p | 1 << q;
            let shared = masks.iter().filter(|&&m| m & pq == pq).count();
            if shared > 1 {
                violations.push(AxiomViolation::SharedLines {
                    p,
                    q,
                    lines: shared,
                });
            }
        }
    }
    let g = s.collinearity_graph();
    for (li, &m) in masks.iter().enumerate() {
        for p in 0..n {
            if m >> p & 1 == 1 {
                continue;
            }
            let collinear = (g.neighbor_mask(p) & m).count_ones() as usize;
            if collinear != 1 {
                violations.push(AxiomViolation::Transversal {
                    point: p,
                    line: li,
                    collinear,
                });
            }
        }
    }
    AxiomReport {
        points: n,
        lines: s.lines().len(),
        violations,
    }
}

/// Point sets meeting every line in exactly one point, or (when
/// `allow_full`) either one point or the whole line. Branches line by line.
/// Points on no line are left out.
fn line_constrained_sets(s: &IncidenceStructure, allow_full: bool) -> Vec<u32> {
    fn go(
        masks: &[u32],
        i: usize,
        inside: u32,
        outside: u32,
        allow_full: bool,
        out: &mut Vec<u32>,
    ) {
        let Some(&m) = masks.get(i) else {
            out.push(inside);
            return;
        };
        let known_in = m & inside;
        let known_out = m & outside;
        let unknown = m & !(inside | outside);
        if allow_full && known_out == 0 {
            go(masks, i + 1, inside | m, outside, allow_full, out);
        }
        match known_in.count_ones() {
            0 => {
                for p in bits(unknown) {
                    let bit = 1u32 << p;
                    go(
                        masks,
                        i + 1,
                        inside | bit,
                        outside | (unknown & !bit),
                        allow_full,
                        out,
                    );
                }
            }
            1 => go(masks, i + 1, inside, outside | unknown, allow_full, out),
            _ => {}
        }
    }
    let masks: Vec<u32> = (0..s.lines().len()).map(|i| s.line_mask(i)).collect();
    let mut out = Vec::new();
    go(&masks, 0, 0, 0, allow_full, &mut out);
    let all = s.point_mask();
    out.retain(|&m| m != all);
    out.sort_by_key(|&m| mask_key(m));
    out
}

/// Sort key: size, then sorted members.
fn mask_key(m: u32) -> (u32, Vec<usize>) {
    (m.count_ones(), bits(m).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HyperplaneKind {
    Ovoid,
    PerpSet { center: usize },
    Grid,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hyperplane {
    pub kind: HyperplaneKind,
    /// Sorted point ids.
    pub points: Vec<usize>,
}

impl Hyperplane {
    pub fn mask(&self) -> u32 {
        mask_of(self.points.iter().copied())
    }
}

/// All ovoids: sets meeting each line in exactly one point.
pub fn enumerate_ovoids(s: &IncidenceStructure) -> Vec<Hyperplane> {
    line_constrained_sets(s, false)
        .into_iter()
        .map(|m| Hyperplane {
            kind: HyperplaneKind::Ovoid,
            points: bits(m).collect(),
        })
        .collect()
}

/// All sets of pairwise disjoint lines covering every point, as sorted line
/// ids. Exact cover by backtracking on the lowest uncovered point.
pub fn enumerate_spreads(s: &IncidenceStructure) -> Vec<Vec<usize>> {
    fn go(
        s: &IncidenceStructure,
        masks: &[u32],
        full: u32,
        covered: u32,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if covered == full {
            let mut spread = chosen.clone();
            spread.sort_unstable();
            out.push(spread);
            return;
        }
        let p = (!covered & full).trailing_zeros() as usize;
        for li in s.lines_through(p) {
            if masks[li] & covered == 0 {
                chosen.push(li);
                go(s, masks, full, covered | masks[li], chosen, out);
                chosen.pop();
            }
        }
    }
    let n = s.num_points();
    if n == 0 {
        return Vec::new();
    }
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let masks: Vec<u32> = (0..s.lines().len()).map(|i| s.line_mask(i)).collect();
    let mut out = Vec::new();
    go(s, &masks, full, 0, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Rows and columns (line ids) of a grid hyperplane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GridPattern {
    pub rows: [usize; 3],
    pub cols: [usize; 3],
}

/// The lines contained in `points`, if they form a 3x3 grid: two classes of
/// three pairwise disjoint lines, each row meeting each column once.
pub fn grid_pattern(s: &IncidenceStructure, points: &[usize]) -> Option<GridPattern> {
    let h = mask_of(points.iter().copied());
    let inside: Vec<usize> = (0..s.lines().len())
        .filter(|&i| s.line_mask(i) & !h == 0)
        .collect();
    if inside.len() != 6 || points.len() != 9 {
        return None;
    }
    let first = s.line_mask(inside[0]);
    let (rows, cols): (Vec<usize>, Vec<usize>) = inside
        .iter()
        .partition(|&&l| l == inside[0] || s.line_mask(l) & first == 0);
    if rows.len() != 3 || cols.len() != 3 {
        return None;
    }
    for &r in &rows {
        for &c in &cols {
            if (s.line_mask(r) & s.line_mask(c)).count_ones() != 1 {
                return None;
            }
        }
    }
    for group in [&rows, &cols] {
        if group.iter().map(|&l| s.line_mask(l)).fold(0, |a, m| a | m) != h {
            return None;
        }
    }
    Some(GridPattern {
        rows: [rows[0], rows[1], rows[2]],
        cols: [cols[0], cols[1], cols[2]],
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperplaneCatalog {
    pub ovoids: Vec<Hyperplane>,
    pub perp_sets: Vec<Hyperplane>,
    pub grids: Vec<Hyperplane>,
}

impl HyperplaneCatalog {
    pub fn total(&self) -> usize {
        self.ovoids.len() + self.perp_sets.len() + self.grids.len()
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        (self.ovoids.len(), self.perp_sets.len(), self.grids.len())
    }

    pub fn to_json(&self, s: &IncidenceStructure, spreads: &[Vec<usize>]) -> serde_json::Value {
        let line_labels = s.line_labels();
        json!({
            "schema": SCHEMA_VERSION,
            "lines": s.lines().iter().enumerate().map(|(i, l)| json!({"id": line_labels[i], "points": s.names(l)})).collect::<Vec<_>>(),
            "ovoids": self.ovoids.iter().map(|h| s.names(&h.points)).collect::<Vec<_>>(),
            "perp_sets": self.perp_sets.iter().map(|h| {
                let HyperplaneKind::PerpSet { center } = h.kind else { unreachable!() };
                json!({"center": s.label(center), "ids": s.names(&h.points)})
            }).collect::<Vec<_>>(),
            "grids": self.grids.iter().map(|h| s.names(&h.points)).collect::<Vec<_>>(),
            "spreads": spreads.iter().map(|sp| sp.iter().map(|&l| line_labels[l].clone()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// Every geometric hyperplane, classified. Fails if one is neither an ovoid,
/// a perp-set nor a grid.
pub fn enumerate_hyperplanes(s: &IncidenceStructure) -> Result<HyperplaneCatalog> {
    let g = s.collinearity_graph();
    let mut catalog = HyperplaneCatalog {
        ovoids: Vec::new(),
        perp_sets: Vec::new(),
        grids: Vec::new(),
    };
    for m in line_constrained_sets(s, true) {
        let points: Vec<usize> = bits(m).collect();
        let contains_line = (0..s.lines().len()).any(|i| s.line_mask(i) & !m == 0);
        let center = points
            .iter()
            .copied()
            .find(|&c| g.neighbor_mask(c) | 1 << c == m);
        if points.len() == 5 && !contains_line {
            catalog.ovoids.push(Hyperplane {
                kind: HyperplaneKind::Ovoid,
                points,
            });
        } else if let (7, Some(center)) = (points.len(), center) {
            catalog.perp_sets.push(Hyperplane {
                kind: HyperplaneKind::PerpSet { center },
                points,
            });
        } else if grid_pattern(s, &points).is_some() {
            catalog.grids.push(Hyperplane {
                kind: HyperplaneKind::Grid,
                points,
            });
        } else {
            return Err(Error::UnclassifiedHyperplane(points));
        }
    }
    catalog.perp_sets.sort_by_key(|h| match h.kind {
        HyperplaneKind::PerpSet { center } => center,
        _ => unreachable!(),
    });
    Ok(catalog)
}

/// Collinearity graph on the points outside `ovoid`. Vertex `i` of the graph
/// is point `vertices[i]`.
pub fn complement_graph_of_ovoid(
    s: &IncidenceStructure,
    ovoid: &[usize],
) -> (SmallGraph, Vec<usize>) {
    let vertices: Vec<usize> = (0..s.num_points()).filter(|p| !ovoid.contains(p)).collect();
    (s.collinearity_graph().induced(&vertices), vertices)
}

/// Isomorphism onto [`SmallGraph::petersen`], after the cheap invariants
/// (10 vertices, cubic, girth 5) pass.
pub fn petersen_isomorphism(g: &SmallGraph) -> Option<Vec<usize>> {
    if g.order() != 10 || g.regular_degree() != Some(3) || g.girth() != Some(5) {
        return None;
    }
    g.find_isomorphism(&SmallGraph::petersen())
}

pub fn is_petersen(g: &SmallGraph) -> bool {
    petersen_isomorphism(g).is_some()
}

/// Points become lines and lines become points; line `p` of the dual is the
/// pencil of lines through point `p`.
pub fn dual(s: &IncidenceStructure) -> IncidenceStructure {
    let lines = (0..s.num_points()).map(|p| s.lines_through(p)).collect();
    IncidenceStructure::new(s.line_labels(), lines)
}

/// The same points with the given lines deleted.
pub fn remove_lines(s: &IncidenceStructure, removed: &[usize]) -> IncidenceStructure {
    let lines = (0..s.lines().len())
        .filter(|i| !removed.contains(i))
        .map(|i| s.line(i).to_vec())
        .collect();
    IncidenceStructure::new(s.labels().to_vec(), lines)
}

/// Dual of the structure left after deleting a spread: its points are the
/// ten remaining lines and its "lines" are two-line pencils, i.e. the edges
/// of a graph on those ten lines.
pub fn spread_removal_dual(s: &IncidenceStructure, spread: &[usize]) -> IncidenceStructure {
    let rest = remove_lines(s, spread);
    let kept: Vec<String> = (0..s.lines().len())
        .filter(|i| !spread.contains(i))
        .map(|i| format!("L{}", i + 1))
        .collect();
    let d = dual(&rest);
    IncidenceStructure::new(kept, d.lines().to_vec())
}

/// Graph whose edges are the two-point lines of `s`; `None` if some line
/// does not have exactly two points.
pub fn two_point_lines_graph(s: &IncidenceStructure) -> Option<SmallGraph> {
    let mut g = SmallGraph::new(s.num_points());
    for l in s.lines() {
        match l.as_slice() {
            [a, b] if a != b => g.add_edge(*a, *b),
            _ => return None,
        }
    }
    Some(g)
}

/// A point bijection taking the lines of `a` exactly onto the lines of `b`.
pub fn find_incidence_isomorphism(
    a: &IncidenceStructure,
    b: &IncidenceStructure,
) -> Option<Vec<usize>> {
    if a.num_points() != b.num_points() || a.lines().len() != b.lines().len() {
        return None;
    }
    let mut target: Vec<u32> = (0..b.lines().len()).map(|i| b.line_mask(i)).collect();
    target.sort_unstable();
    let mut found = None;
    a.collinearity_graph()
        .for_each_isomorphism(&b.collinearity_graph(), |map| {
            let mut image: Vec<u32> = a
                .lines()
                .iter()
                .map(|l| mask_of(l.iter().map(|&p| map[p])))
                .collect();
            image.sort_unstable();
            if image == target {
                found = Some(map.to_vec());
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
    found
}
