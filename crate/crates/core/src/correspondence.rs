//! Checks tying the three pictures of the fifteen points together: the
//! sub-configuration of the projective line over `M2(GF(2))`, the
//! commutation relations of the two-qubit Pauli operators, and the
//! generalized quadrangle of order two.
//!
//! Every check produces a [`Check`] line; a [`CorrespondenceReport`] collects
//! them into sections and renders as JSON or as a plain-text certificate.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use crate::fixtures::{
    M2F2_ADD, M2F2_LINE_REPRESENTATIVES, M2F2_MUL, M2F2_UNITS, REFERENCE_RELATION,
    SUBCONFIG_REPRESENTATIVES,
};
use crate::graph::SmallGraph;
use crate::pauli::{
    self, commutation_table, commutes, mermin_square_check, standard_labeling, MerminReport,
    PauliLabeling, PauliOp,
};
use crate::projline::{
    self, enumerate_line, simultaneous_subconfig, ProjectiveLine, SubConfiguration,
};
use crate::quadrangle::{
    self, build_gq_from_graph, complement_graph_of_ovoid, enumerate_hyperplanes, enumerate_ovoids,
    enumerate_spreads, grid_pattern, petersen_isomorphism, validate_gq_axioms, HyperplaneCatalog,
    IncidenceStructure,
};
use crate::relation::{c_labels, Relation, RelationMatrix};
use crate::ring::{build_m2f2, build_small_rings, units, validate_ring, RingSpec};
use crate::{Result, SCHEMA_VERSION};

/// Seed for the sampled transitivity check.
pub const TRANSITIVITY_SEED: u64 = 0x5eed_0002;
/// Number of sampled distant triples in the transitivity check.
pub const TRANSITIVITY_SAMPLES: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    /// What object the check is about.
    pub anchor: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        anchor: impl Into<String>,
        passed: bool,
        detail: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            anchor: anchor.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Section {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Section {
    fn new(title: &str) -> Self {
        Self {
            title: title.to_string(),
            checks: Vec::new(),
        }
    }

    fn check(
        &mut self,
        name: impl Into<String>,
        anchor: &str,
        passed: bool,
        detail: impl Into<String>,
    ) -> bool {
        self.checks.push(Check::new(name, anchor, passed, detail));
        passed
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// A disagreeing cell between two of the 15x15 matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledDiff {
    /// `"<expected source> vs <actual source>"`.
    pub comparison: String,
    pub row: String,
    pub col: String,
    pub expected: char,
    pub actual: char,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorrespondenceReport {
    pub reference_match: bool,
    pub diffs: Vec<LabeledDiff>,
    pub sections: Vec<Section>,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.reference_match && self.sections.iter().all(Section::passed)
    }

    pub fn checks(&self) -> impl Iterator<Item = &Check> {
        self.sections.iter().flat_map(|s| &s.checks)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "schema": SCHEMA_VERSION,
            "passed": self.passed(),
            "reference_match": self.reference_match,
            "diffs": self.diffs,
            "sections": self.sections,
        })
    }

    /// One line per check. The header line can be left out for byte-level
    /// comparisons.
    pub fn to_certificate(&self, header: bool) -> String {
        let mut out = String::new();
        if header {
            out.push_str("# ringline verification certificate\n");
        }
        for s in &self.sections {
            let _ = writeln!(out, "## {}", s.title);
            for c in &s.checks {
                let _ = writeln!(
                    out,
                    "{}  {}  [{}]  {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.anchor,
                    c.detail
                );
            }
        }
        if !self.diffs.is_empty() {
            out.push_str("## differing cells\n");
            for d in &self.diffs {
                let _ = writeln!(
                    out,
                    "{}: {},{} expected {} got {}",
                    d.comparison, d.row, d.col, d.expected, d.actual
                );
            }
        }
        let total = self.checks().count();
        let failed = self.checks().filter(|c| !c.passed).count();
        let _ = writeln!(
            out,
            "RESULT: {} ({} checks, {} failed)",
            if self.passed() { "PASS" } else { "FAIL" },
            total,
            failed
        );
        out
    }
}

/// The fifteen-point configuration seen three ways, built once and shared by
/// all checks.
#[derive(Clone, Debug)]
pub struct TwoQubitModel {
    pub line: ProjectiveLine,
    pub sub: SubConfiguration,
    /// Induced distant/neighbor relation on C1..C15.
    pub geometry: RelationMatrix,
    pub labeling: PauliLabeling,
    /// Quadrangle whose lines are the triangles of the neighbor graph.
    pub gq: IncidenceStructure,
}

impl TwoQubitModel {
    /// Uses `U = (1,0)`, `V = (0,1)` and the standard labeling.
    pub fn build() -> Result<Self> {
        Self::with_labeling(standard_labeling())
    }

    pub fn with_labeling(labeling: PauliLabeling) -> Result<Self> {
        let line = enumerate_line(&build_m2f2());
        let u = line.point_of_labels(1, 0)?;
        let v = line.point_of_labels(0, 1)?;
        Self::with_points(line, u, v, labeling)
    }

    pub fn with_points(
        line: ProjectiveLine,
        u: usize,
        v: usize,
        labeling: PauliLabeling,
    ) -> Result<Self> {
        let sub = simultaneous_subconfig(&line, u, v)?;
        let geometry = sub.relation(&line);
        let gq = build_gq_from_graph(&geometry.graph_of(Relation::Neighbor))?;
        Ok(Self {
            line,
            sub,
            geometry,
            labeling,
            gq,
        })
    }

    pub fn op(&self, c: usize) -> PauliOp {
        self.labeling.get(c)
    }

    pub fn names(&self, ids: &[usize]) -> String {
        ids.iter()
            .map(|&i| format!("C{}", i + 1))
            .collect::<Vec<_>>()
            .join(",")
    }
}

pub fn reference_relation() -> RelationMatrix {
    RelationMatrix::from_rows(&REFERENCE_RELATION).expect("fixture parses")
}

/// Relation-preserving bijection between two relation matrices.
pub fn relation_isomorphism(a: &RelationMatrix, b: &RelationMatrix) -> Option<Vec<usize>> {
    a.graph_of(Relation::Neighbor)
        .find_isomorphism(&b.graph_of(Relation::Neighbor))
}

fn labeled_diffs(
    comparison: &str,
    expected: &RelationMatrix,
    actual: &RelationMatrix,
) -> Vec<LabeledDiff> {
    expected
        .diff(actual)
        .into_iter()
        .map(|d| LabeledDiff {
            comparison: comparison.to_string(),
            row: format!("C{}", d.row + 1),
            col: format!("C{}", d.col + 1),
            expected: d.expected,
            actual: d.actual,
        })
        .collect()
}

/// Compares the geometric relation and the commutation table cell by cell
/// with each other and with the reference table.
pub fn verify_reference_table() -> Result<CorrespondenceReport> {
    let model = TwoQubitModel::build()?;
    Ok(verify_reference_table_with(&model, &reference_relation()))
}

pub fn verify_reference_table_with(
    model: &TwoQubitModel,
    reference: &RelationMatrix,
) -> CorrespondenceReport {
    let mut section = Section::new("reference table");
    let commutation = commutation_table(&model.labeling);
    let collinear = model.gq.collinearity_graph();
    let from_gq = RelationMatrix::from_fn(15, |i, j| {
        if i == j || collinear.has_edge(i, j) {
            Relation::Neighbor
        } else {
            Relation::Distant
        }
    });

    let mut diffs = Vec::new();
    if reference.size() != 15 {
        section.check(
            "reference table is 15x15",
            "reference relation table",
            false,
            format!("{}x{}", reference.size(), reference.size()),
        );
        return CorrespondenceReport {
            reference_match: false,
            diffs,
            sections: vec![section],
        };
    }
    for (name, expected, actual) in [
        ("reference vs geometry", reference, &model.geometry),
        ("reference vs commutation", reference, &commutation),
        ("geometry vs commutation", &model.geometry, &commutation),
        ("geometry vs quadrangle", &model.geometry, &from_gq),
    ] {
        let d = labeled_diffs(name, expected, actual);
        section.check(
            format!("{name}: cells agree"),
            "distant = non-commuting = non-collinear",
            d.is_empty(),
            format!("{} of 225 cells differ", d.len()),
        );
        diffs.extend(d);
    }
    let diagonal = (0..15).all(|i| {
        model.geometry.get(i, i) == Relation::Neighbor && commutes(model.op(i), model.op(i))
    });
    section.check(
        "diagonal is neighbor and self-commuting",
        "reflexive neighbor convention",
        diagonal,
        "15 cells",
    );
    let counts = (0..15).all(|i| {
        model.geometry.count_in_row(i, Relation::Neighbor) == 6
            && model.geometry.count_in_row(i, Relation::Distant) == 8
    });
    section.check(
        "every point has 6 neighbors and 8 distant points",
        "sub-configuration degrees",
        counts,
        "15 rows",
    );
    CorrespondenceReport {
        reference_match: diffs.is_empty(),
        diffs,
        sections: vec![section],
    }
}

fn line_relation(r: &RingSpec) -> RelationMatrix {
    enumerate_line(r).relation_matrix().clone()
}

fn all_distant(m: &RelationMatrix) -> bool {
    (0..m.size()).all(|i| m.count_in_row(i, Relation::Distant) == m.size() - 1)
}

/// Two triples of the distant family such that each, with `U` and `V`, is
/// five pairwise distant points, and every cross pair is neighbor.
pub fn find_gf4_split(model: &TwoQubitModel) -> Option<([usize; 3], [usize; 3])> {
    let six = &model.sub.distant;
    if six.len() != 6 {
        return None;
    }
    let line = &model.line;
    let (u, v) = (model.sub.u, model.sub.v);
    // the first point always goes in the first triple
    for a in 1..6 {
        for b in a + 1..6 {
            let first = [0, a, b];
            let second: Vec<usize> = (1..6).filter(|i| *i != a && *i != b).collect();
            let second = [second[0], second[1], second[2]];
            let lifted = |t: [usize; 3]| t.map(|i| six[i]);
            let (p, q) = (lifted(first), lifted(second));
            let ok = [p, q]
                .iter()
                .all(|t| line.is_pairwise_distant(&[t[0], t[1], t[2], u, v]))
                && p.iter()
                    .all(|&x| q.iter().all(|&y| line.relation(x, y) == Relation::Neighbor));
            if ok {
                return Some((first.map(|i| i), second));
            }
        }
    }
    None
}

/// The 9 + 6 split: the neighbor family is a copy of the line over
/// `GF(2)xGF(2)` carrying a Mermin square, and the distant family is two
/// copies of the line over `GF(4)` (minus `U`, `V`) that commute with each other.
pub fn factorization_9_6(model: &TwoQubitModel) -> Section {
    let mut s = Section::new("factorization 9+6");
    let small = build_small_rings();
    let nine: Vec<usize> = (6..15).collect();
    let grid_rel = model.geometry.induced(&nine);
    let iso = relation_isomorphism(&grid_rel, &line_relation(&small.gf2xgf2));
    s.check(
        "neighbor family is isomorphic to the line over GF(2)xGF(2)",
        "nine-point grid",
        iso.is_some(),
        match &iso {
            Some(m) => format!(
                "C7..C15 -> points {:?}",
                m.iter().map(|p| p + 1).collect::<Vec<_>>()
            ),
            None => "no relation-preserving bijection".into(),
        },
    );
    let degrees = (0..9).all(|i| {
        grid_rel.count_in_row(i, Relation::Neighbor) == 4
            && grid_rel.count_in_row(i, Relation::Distant) == 4
    });
    s.check(
        "each grid point has 4 neighbors and 4 distant points among the nine",
        "nine-point grid",
        degrees,
        "9 rows",
    );
    let is_hyperplane = enumerate_hyperplanes(&model.gq)
        .map(|c| c.grids.iter().any(|h| h.points == nine))
        .unwrap_or(false);
    s.check(
        "the nine points form a grid hyperplane of the quadrangle",
        "nine-point grid",
        is_hyperplane,
        model.names(&nine),
    );

    let split = find_gf4_split(model);
    let gf4 = line_relation(&small.gf4);
    match split {
        Some((a, b)) => {
            let detail = format!("{{{}}} and {{{}}}", model.names(&a), model.names(&b));
            s.check(
                "distant family splits into two commuting triples",
                "two GF(4) lines through U and V",
                true,
                detail,
            );
            for t in [a, b] {
                let five = [
                    model.sub.distant[t[0]],
                    model.sub.distant[t[1]],
                    model.sub.distant[t[2]],
                    model.sub.u,
                    model.sub.v,
                ];
                let rel = model.line.relation_matrix().induced(&five);
                s.check(
                    format!(
                        "{{{}}} with U, V is isomorphic to the line over GF(4)",
                        model.names(&t)
                    ),
                    "two GF(4) lines through U and V",
                    all_distant(&rel) && relation_isomorphism(&rel, &gf4).is_some(),
                    "5 pairwise distant points",
                );
            }
        }
        None => {
            s.check(
                "distant family splits into two commuting triples",
                "two GF(4) lines through U and V",
                false,
                "no split found",
            );
        }
    }

    let grid = [[6, 7, 8], [9, 10, 11], [12, 13, 14]].map(|row| row.map(|c| model.op(c)));
    match mermin_square_check(&grid) {
        Ok(r) => {
            s.check(
                "C7..C15 in rows of three form a magic Mermin square",
                "Mermin square",
                r.magic,
                mermin_detail(&r),
            );
        }
        Err(e) => {
            s.check(
                "C7..C15 in rows of three form a magic Mermin square",
                "Mermin square",
                false,
                e.to_string(),
            );
        }
    }
    s
}

fn mermin_detail(r: &MerminReport) -> String {
    let f = |s: &[pauli::Sign; 3]| {
        s.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    format!("rows {} / columns {}", f(&r.row_signs), f(&r.col_signs))
}

/// The 10 + 5 split: every ovoid is five mutually non-commuting operators, a
/// copy of the line over `GF(4)`, and its complement is the Petersen graph.
pub fn factorization_10_5(model: &TwoQubitModel) -> Section {
    let mut s = Section::new("factorization 10+5");
    let gf4 = line_relation(&build_small_rings().gf4);
    let ovoids = enumerate_ovoids(&model.gq);
    s.check(
        "the quadrangle has six ovoids",
        "ovoids",
        ovoids.len() == 6,
        format!("{} found", ovoids.len()),
    );
    for o in &ovoids {
        let name = model.names(&o.points);
        let ops: Vec<PauliOp> = o.points.iter().map(|&c| model.op(c)).collect();
        let non_commuting = ops
            .iter()
            .enumerate()
            .all(|(i, &a)| ops[..i].iter().all(|&b| !commutes(a, b)));
        let rel = model.geometry.induced(&o.points);
        let as_gf4 = all_distant(&rel) && relation_isomorphism(&rel, &gf4).is_some();
        let (g, verts) = complement_graph_of_ovoid(&model.gq, &o.points);
        let witness = petersen_isomorphism(&g);
        let witness_text = witness
            .as_ref()
            .map(|m| {
                verts
                    .iter()
                    .zip(m)
                    .map(|(&p, &k)| format!("C{}->{}", p + 1, k))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .unwrap_or_else(|| "no isomorphism".into());
        s.check(
            format!("ovoid {{{name}}} is mutually non-commuting"),
            "ovoid",
            non_commuting,
            format!("{:?}", ops),
        );
        s.check(
            format!("ovoid {{{name}}} is isomorphic to the line over GF(4)"),
            "ovoid",
            as_gf4,
            "5 pairwise distant",
        );
        s.check(
            format!("complement of {{{name}}} is the Petersen graph"),
            "Petersen graph",
            witness.is_some(),
            witness_text,
        );
    }
    s
}

/// The six points commuting with `x` pair up into three commuting pairs and
/// reproduce the line over `GF(2)[x]/(x^2)`; with `x` they form a perp-set.
pub fn perp_subline_check(model: &TwoQubitModel, x: usize) -> Section {
    let mut s = Section::new(&format!("perp-set of C{}", x + 1));
    let six: Vec<usize> = (0..15)
        .filter(|&y| y != x && model.geometry.get(x, y) == Relation::Neighbor)
        .collect();
    let rel = model.geometry.induced(&six);
    let mut pairs = Vec::new();
    for i in 0..six.len() {
        for j in i + 1..six.len() {
            if rel.get(i, j) == Relation::Neighbor {
                pairs.push([six[i], six[j]]);
            }
        }
    }
    let commuting = six.iter().all(|&y| commutes(model.op(x), model.op(y)));
    s.check(
        format!("six operators commute with C{}", x + 1),
        "perp-set",
        six.len() == 6 && commuting,
        model.names(&six),
    );
    let three_pairs = pairs.len() == 3 && {
        let mut covered: Vec<usize> = pairs.iter().flatten().copied().collect();
        covered.sort_unstable();
        covered == six
    };
    s.check(
        "they form exactly three neighbor pairs",
        "perp-set",
        three_pairs,
        pairs
            .iter()
            .map(|p| format!("{{{}}}", model.names(p)))
            .collect::<Vec<_>>()
            .join(" "),
    );
    let dual_line = line_relation(&build_small_rings().gf2_dual);
    s.check(
        "isomorphic to the line over GF(2)[x]/(x^2)",
        "perp-set",
        relation_isomorphism(&rel, &dual_line).is_some(),
        "6 points, relation-preserving bijection",
    );
    let mut with_center = six.clone();
    with_center.push(x);
    with_center.sort_unstable();
    let is_perp_hyperplane = enumerate_hyperplanes(&model.gq)
        .map(|c| {
            c.perp_sets.iter().any(|h| {
                h.points == with_center
                    && h.kind == quadrangle::HyperplaneKind::PerpSet { center: x }
            })
        })
        .unwrap_or(false);
    s.check(
        "with its center it is a perp-set hyperplane",
        "geometric hyperplane",
        is_perp_hyperplane,
        model.names(&with_center),
    );
    s
}

/// A Mermin arrangement of a grid hyperplane: the first magic one in
/// lexicographic order of the flattened point ids.
pub fn mermin_arrangement(
    model: &TwoQubitModel,
    points: &[usize],
) -> Option<([[usize; 3]; 3], MerminReport)> {
    let gp = grid_pattern(&model.gq, points)?;
    let perms = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut candidates = Vec::new();
    for (rows, cols) in [(gp.rows, gp.cols), (gp.cols, gp.rows)] {
        for rp in perms {
            for cp in perms {
                let cell = |i: usize, j: usize| {
                    let m = model.gq.line_mask(rows[rp[i]]) & model.gq.line_mask(cols[cp[j]]);
                    m.trailing_zeros() as usize
                };
                let grid = [0, 1, 2].map(|i| [0, 1, 2].map(|j| cell(i, j)));
                candidates.push(grid);
            }
        }
    }
    candidates.sort();
    candidates.into_iter().find_map(|grid| {
        let ops = grid.map(|row| row.map(|c| model.op(c)));
        match mermin_square_check(&ops) {
            Ok(r) if r.magic => Some((grid, r)),
            _ => None,
        }
    })
}

/// Spreads as operator triples.
pub fn spread_operators(model: &TwoQubitModel, spread: &[usize]) -> Vec<[PauliOp; 3]> {
    spread
        .iter()
        .map(|&l| {
            let pts = model.gq.line(l);
            [model.op(pts[0]), model.op(pts[1]), model.op(pts[2])]
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrinityRow {
    pub hyperplane: String,
    pub subline: String,
    pub operators: String,
    pub count: usize,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrinityReport {
    pub rows: Vec<TrinityRow>,
    pub section: Section,
}

/// The three kinds of hyperplane, each matched with a projective line over a
/// ring of order four and a family of operators; plus the spread/MUB check.
pub fn trinity_report(model: &TwoQubitModel) -> Result<TrinityReport> {
    let mut s = Section::new("hyperplanes, sub-lines and operator sets");
    let small = build_small_rings();
    let catalog = enumerate_hyperplanes(&model.gq)?;
    let (no, np, ng) = catalog.counts();
    s.check(
        "hyperplane counts",
        "geometric hyperplanes",
        (no, np, ng) == (6, 15, 10),
        format!("{no} ovoids, {np} perp-sets, {ng} grids"),
    );

    let gf4 = line_relation(&small.gf4);
    let ovoids_ok = catalog.ovoids.iter().all(|h| {
        let rel = model.geometry.induced(&h.points);
        all_distant(&rel) && relation_isomorphism(&rel, &gf4).is_some()
    });
    s.check(
        "every ovoid is a line over GF(4) of mutually non-commuting operators",
        "ovoid",
        ovoids_ok,
        format!("{no} checked"),
    );

    let dual_line = line_relation(&small.gf2_dual);
    let perps_ok = catalog.perp_sets.iter().all(|h| {
        let quadrangle::HyperplaneKind::PerpSet { center } = h.kind else {
            return false;
        };
        let six: Vec<usize> = h.points.iter().copied().filter(|&p| p != center).collect();
        six.iter().all(|&p| commutes(model.op(center), model.op(p)))
            && relation_isomorphism(&model.geometry.induced(&six), &dual_line).is_some()
    });
    s.check(
        "every perp-set minus its center is a line over GF(2)[x]/(x^2) of operators commuting with the center",
        "perp-set",
        perps_ok,
        format!("{np} checked"),
    );

    let grid_line = line_relation(&small.gf2xgf2);
    let mut grids_ok = true;
    for h in &catalog.grids {
        let iso = relation_isomorphism(&model.geometry.induced(&h.points), &grid_line).is_some();
        let arrangement = mermin_arrangement(model, &h.points);
        let ok = iso && arrangement.is_some();
        grids_ok &= ok;
        let detail = match &arrangement {
            Some((g, r)) => format!(
                "{} / {} / {}; {}",
                model.names(&g[0]),
                model.names(&g[1]),
                model.names(&g[2]),
                mermin_detail(r)
            ),
            None => "no magic arrangement".into(),
        };
        s.check(
            format!(
                "grid {{{}}} is a magic Mermin square",
                model.names(&h.points)
            ),
            "grid",
            ok,
            detail,
        );
    }

    let spreads = enumerate_spreads(&model.gq);
    let mut mub_ok = spreads.len() == 6;
    for sp in &spreads {
        let ops = spread_operators(model, sp);
        let report = pauli::mub_spread_report(&ops);
        let passed = report.as_ref().map(|r| r.passed()).unwrap_or(false);
        mub_ok &= passed;
        let detail = match &report {
            Ok(r) => format!(
                "{} projectors, {} pairs, {} failures",
                r.projectors,
                r.pairs_checked,
                r.failures.len()
            ),
            Err(e) => e.to_string(),
        };
        let names: Vec<String> = ops
            .iter()
            .map(|t| format!("{{{} {} {}}}", t[0], t[1], t[2]))
            .collect();
        s.check(
            format!("spread {} gives mutually unbiased bases", names.join(" ")),
            "spread",
            passed,
            detail,
        );
    }

    let rows = vec![
        TrinityRow {
            hyperplane: "ovoid".into(),
            subline: "P1(GF(4))".into(),
            operators: "five mutually non-commuting operators".into(),
            count: no,
            verified: ovoids_ok && no == 6,
        },
        TrinityRow {
            hyperplane: "perp-set minus center".into(),
            subline: "P1(GF(2)[x]/(x^2))".into(),
            operators: "six operators commuting with a given one".into(),
            count: np,
            verified: perps_ok && np == 15,
        },
        TrinityRow {
            hyperplane: "grid".into(),
            subline: "P1(GF(2)xGF(2))".into(),
            operators: "nine operators of a Mermin square".into(),
            count: ng,
            verified: grids_ok && ng == 10,
        },
        TrinityRow {
            hyperplane: "spread".into(),
            subline: "-".into(),
            operators: "five commuting triples with mutually unbiased bases".into(),
            count: spreads.len(),
            verified: mub_ok,
        },
    ];
    Ok(TrinityReport { rows, section: s })
}

fn ring_section() -> Section {
    let mut s = Section::new("ring M2(GF(2))");
    let r = build_m2f2();
    let add_ok = (0..16).all(|x| (0..16).all(|y| r.add_rows()[x][y] == M2F2_ADD[x][y] as usize));
    let mul_ok = (0..16).all(|x| (0..16).all(|y| r.mul_rows()[x][y] == M2F2_MUL[x][y] as usize));
    s.check(
        "addition table equals the reference",
        "ring tables",
        add_ok,
        "256 cells",
    );
    s.check(
        "multiplication table equals the reference",
        "ring tables",
        mul_ok,
        "256 cells",
    );
    let us: Vec<usize> = units(&r).iter().map(|u| u.index()).collect();
    s.check(
        "units are 1,2,9,11,12,13",
        "units and zero-divisors",
        us == M2F2_UNITS.map(usize::from),
        format!("{} units, {} zero-divisors", us.len(), 16 - us.len()),
    );
    let report = validate_ring(&r);
    s.check(
        "ring axioms and representation hold",
        "ring tables",
        report.is_valid(),
        format!("{} violations", report.violations.len()),
    );
    s
}

fn census_section(model: &TwoQubitModel) -> Section {
    let mut s = Section::new("line census");
    let line = &model.line;
    s.check(
        "35 points, each an orbit of 6 pairs",
        "P1(M2(GF(2)))",
        line.len() == 35 && line.points().iter().all(|p| p.members().len() == 6),
        format!("{} points", line.len()),
    );
    let reps: Vec<Option<usize>> = M2F2_LINE_REPRESENTATIVES
        .iter()
        .map(|&(a, b)| line.point_of_labels(a.into(), b.into()).ok())
        .collect();
    let mut hit: Vec<usize> = reps.iter().flatten().copied().collect();
    hit.sort_unstable();
    hit.dedup();
    s.check(
        "listed representatives hit all 35 points once",
        "point representatives",
        hit.len() == 35 && reps.iter().all(Option::is_some),
        format!("{} distinct", hit.len()),
    );
    let small = build_small_rings();
    for (r, expected) in [
        (&small.gf4, 5),
        (&small.gf2xgf2, 9),
        (&small.gf2_dual, 6),
        (&small.gf2, 3),
    ] {
        let l = enumerate_line(r);
        let mut ok = l.len() == expected;
        let mut detail = format!("{} points", l.len());
        if r.name() == "gf4" {
            ok &= all_distant(l.relation_matrix());
            detail.push_str(", pairwise distant");
        }
        if r.name() == "gf2-dual" {
            let neighbor_pairs = l.relation_matrix().pair_count(Relation::Neighbor);
            ok &= neighbor_pairs == 3;
            detail.push_str(&format!(", {neighbor_pairs} neighbor pairs"));
        }
        s.check(
            format!("line over {} has {expected} points", r.name()),
            "sub-lines",
            ok,
            detail,
        );
    }
    s
}

fn subconfig_section(model: &TwoQubitModel) -> Section {
    let mut s = Section::new("sub-configuration");
    let line = &model.line;
    let expected: Vec<usize> = SUBCONFIG_REPRESENTATIVES
        .iter()
        .map(|&(a, b)| {
            line.point_of_labels(a.into(), b.into())
                .unwrap_or(usize::MAX)
        })
        .collect();
    s.check(
        "distant family is C1..C6 in order",
        "simultaneously distant to U and V",
        model.sub.distant == expected[..6],
        format!("{} points", model.sub.distant.len()),
    );
    s.check(
        "neighbor family is C7..C15 in order",
        "simultaneously neighbor to U and V",
        model.sub.neighbor == expected[6..],
        format!("{} points", model.sub.neighbor.len()),
    );
    let clique = model.geometry.graph_of(Relation::Neighbor).max_clique();
    s.check(
        "largest set of pairwise neighbors has 3 points",
        "sub-configuration",
        clique.len() == 3,
        model.names(&clique),
    );
    s
}

fn quadrangle_section(model: &TwoQubitModel) -> (Section, Option<HyperplaneCatalog>) {
    let mut s = Section::new("generalized quadrangle");
    let gq = &model.gq;
    let axioms = validate_gq_axioms(gq);
    s.check(
        "neighbor triangles give 15 points on 15 lines",
        "GQ(2,2)",
        gq.num_points() == 15 && gq.lines().len() == 15,
        format!("{} lines", gq.lines().len()),
    );
    s.check(
        "GQ(2,2) axioms hold",
        "GQ(2,2)",
        axioms.is_valid(),
        format!("{} violations", axioms.violations.len()),
    );
    let srg = gq.collinearity_graph().strongly_regular_parameters();
    s.check(
        "collinearity graph is SRG(15,6,1,3)",
        "GQ(2,2)",
        srg == Some((15, 6, 1, 3)),
        match srg {
            Some((n, k, l, m)) => format!("SRG({n},{k},{l},{m})"),
            None => "not strongly regular".into(),
        },
    );
    let d = quadrangle::dual(gq);
    let iso = quadrangle::find_incidence_isomorphism(gq, &d);
    s.check(
        "quadrangle is isomorphic to its dual",
        "self-duality",
        iso.is_some(),
        iso.map(|m| {
            format!(
                "C_i -> L_j: {:?}",
                m.iter().map(|j| j + 1).collect::<Vec<_>>()
            )
        })
        .unwrap_or_else(|| "none".into()),
    );
    let catalog = enumerate_hyperplanes(gq);
    let spreads = enumerate_spreads(gq);
    let dual_ovoids = enumerate_ovoids(&d).len();
    match &catalog {
        Ok(c) => {
            let (o, p, g) = c.counts();
            s.check(
                "6 ovoids, 15 perp-sets, 10 grids",
                "geometric hyperplanes",
                (o, p, g) == (6, 15, 10) && c.total() == 31,
                format!("{o}+{p}+{g} = {}", c.total()),
            );
        }
        Err(e) => {
            s.check(
                "6 ovoids, 15 perp-sets, 10 grids",
                "geometric hyperplanes",
                false,
                e.to_string(),
            );
        }
    }
    s.check(
        "6 spreads, matching the ovoids of the dual",
        "spreads",
        spreads.len() == 6 && dual_ovoids == spreads.len(),
        format!("{} spreads, {dual_ovoids} dual ovoids", spreads.len()),
    );
    (s, catalog.ok())
}

fn transitivity_section(model: &TwoQubitModel) -> Section {
    let mut s = Section::new("GL(2,R) transitivity");
    let line = &model.line;
    let gl = line.general_linear_group().len();
    s.check(
        "|GL(2, M2(GF(2)))| = 20160",
        "GL(2,R)",
        gl == 20160,
        format!("{gl}"),
    );
    let std = line.standard_triple();
    let samples = projline::sample_distant_triples(line, TRANSITIVITY_SAMPLES, TRANSITIVITY_SEED);
    let found = samples
        .iter()
        .filter(|t| projline::gl2_transitivity_witness(line, std, **t).is_ok())
        .count();
    s.check(
        "standard triple maps onto every sampled distant triple",
        "GL(2,R) transitivity",
        found == samples.len() && samples.len() == TRANSITIVITY_SAMPLES,
        format!(
            "{found}/{} witnesses (seed {TRANSITIVITY_SEED:#x})",
            samples.len()
        ),
    );
    s
}

/// Every check in the crate, in one report.
pub fn verify_all() -> Result<CorrespondenceReport> {
    verify_all_with(&reference_relation())
}

/// [`verify_all`] against a caller-supplied reference table.
pub fn verify_all_with(reference: &RelationMatrix) -> Result<CorrespondenceReport> {
    let model = TwoQubitModel::build()?;
    let reference_check = verify_reference_table_with(&model, reference);
    let mut sections = vec![
        ring_section(),
        census_section(&model),
        subconfig_section(&model),
    ];
    sections.extend(reference_check.sections);
    let (gq_section, _) = quadrangle_section(&model);
    sections.push(gq_section);
    sections.push(factorization_9_6(&model));
    sections.push(factorization_10_5(&model));
    let mut perp = Section::new("perp-sets");
    for x in 0..15 {
        let p = perp_subline_check(&model, x);
        perp.check(
            p.title.clone(),
            "perp-set",
            p.passed(),
            format!("{} checks", p.checks.len()),
        );
    }
    sections.push(perp);
    sections.push(trinity_report(&model)?.section);
    sections.push(transitivity_section(&model));
    Ok(CorrespondenceReport {
        reference_match: reference_check.reference_match,
        diffs: reference_check.diffs,
        sections,
    })
}

/// Wraps a single section as a report.
pub fn section_report(section: Section) -> CorrespondenceReport {
    CorrespondenceReport {
        reference_match: true,
        diffs: Vec::new(),
        sections: vec![section],
    }
}

/// Neighbor graph of the fifteen points under the standard construction.
pub fn neighbor_graph(model: &TwoQubitModel) -> SmallGraph {
    model.geometry.graph_of(Relation::Neighbor)
}

/// `C1..C15`.
pub fn point_labels() -> Vec<String> {
    c_labels(15)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model() -> TwoQubitModel {
        TwoQubitModel::build().unwrap()
    }

    #[test]
    fn reference_matches() {
        let r = verify_reference_table().unwrap();
        assert!(r.reference_match, "{:?}", r.diffs);
        assert!(r.diffs.is_empty());
        assert!(r.passed());
    }

    #[test]
    fn swapped_labeling_is_caught() {
        let m = TwoQubitModel::with_labeling(standard_labeling().swapped(0, 1)).unwrap();
        let r = verify_reference_table_with(&m, &reference_relation());
        assert!(!r.reference_match);
        assert!(!r.diffs.is_empty());
        assert!(r
            .diffs
            .iter()
            .all(|d| d.comparison != "reference vs geometry"));
    }

    #[test]
    fn gf4_split_is_c1_c5_c6() {
        let m = model();
        let (a, b) = find_gf4_split(&m).unwrap();
        assert_eq!(m.names(&a), "C1,C5,C6");
        assert_eq!(m.names(&b), "C2,C3,C4");
    }

    #[test]
    fn factorizations_pass() {
        let m = model();
        let s = factorization_9_6(&m);
        assert!(s.passed(), "{:#?}", s);
        let s = factorization_10_5(&m);
        assert!(s.passed(), "{:#?}", s);
        assert_eq!(s.checks.len(), 1 + 3 * 6);
    }

    #[test]
    fn perp_of_c13() {
        let m = model();
        let s = perp_subline_check(&m, 12);
        assert!(s.passed(), "{:#?}", s);
        assert_eq!(s.checks[1].detail, "{C4,C5} {C7,C10} {C14,C15}");
    }

    #[test]
    fn every_perp_passes() {
        let m = model();
        assert!((0..15).all(|x| perp_subline_check(&m, x).passed()));
    }

    #[test]
    fn trinity_passes() {
        let t = trinity_report(&model()).unwrap();
        assert!(t.section.passed(), "{:#?}", t.section);
        let counts: Vec<usize> = t.rows.iter().map(|r| r.count).collect();
        assert_eq!(counts, vec![6, 15, 10, 6]);
    }

    #[test]
    fn certificate_text() {
        let r = verify_reference_table().unwrap();
        let text = r.to_certificate(false);
        assert!(text.starts_with("## reference table"));
        assert!(text.ends_with("RESULT: PASS (6 checks, 0 failed)\n"));
        assert!(r.to_certificate(true).starts_with("# ringline"));
    }
}
