//! Batch command-line front end. [`run`] parses arguments, prints to standard
//! output and returns the process exit code: 0 on success, 1 when a
//! verification fails, 2 on usage or input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::correspondence::{
    self, factorization_10_5, factorization_9_6, perp_subline_check, reference_relation,
    section_report, spread_operators, trinity_report, verify_reference_table_with,
    CorrespondenceReport, TwoQubitModel,
};
use crate::pauli::{commutation_table, mermin_square_check, mub_spread_report};
use crate::projline::{enumerate_line, format_pair, simultaneous_subconfig, ProjectiveLine};
use crate::quadrangle::{
    complement_graph_of_ovoid, enumerate_hyperplanes, enumerate_ovoids, enumerate_spreads,
    petersen_isomorphism, validate_gq_axioms, HyperplaneKind,
};
use crate::relation::{c_labels, Relation, RelationMatrix};
use crate::ring::{ring_by_name, units, validate_ring, RingSpec};
use crate::{Error, SCHEMA_VERSION};

#[derive(Parser, Debug)]
#[command(
    name = "ringline",
    version,
    about = "Projective ring lines, two-qubit Paulis and GQ(2,2)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ring tables and axiom checks.
    Ring {
        action: RingAction,
        /// m2f2, gf2, gf4, gf2xgf2 or gf2-dual.
        name: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Points and relations of a projective line.
    Line {
        action: LineAction,
        #[arg(long, default_value = "m2f2")]
        ring: String,
        /// First base point as `a,b` (element labels).
        #[arg(long, default_value = "1,0")]
        u: String,
        #[arg(long, default_value = "0,1")]
        v: String,
        /// Which relation becomes an edge in DOT output.
        #[arg(long, value_enum, default_value = "neighbor")]
        edges: EdgeKind,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The generalized quadrangle on the fifteen points.
    Gq {
        action: GqAction,
        /// Ovoid index for `petersen`.
        #[arg(long, default_value_t = 0)]
        ovoid: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Two-qubit Pauli operators.
    Pauli {
        action: PauliAction,
        /// Spread index for `mub`; all spreads when omitted.
        #[arg(long)]
        spread: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run verification checks and print a certificate.
    Verify {
        target: VerifyTarget,
        /// Reference relation table as CSV (C1..C15 header, `+`/`-` cells).
        #[arg(long)]
        fixture: Option<PathBuf>,
        /// Leave out the certificate header line.
        #[arg(long)]
        no_header: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Write one object to a file.
    Export {
        #[arg(long, value_enum)]
        what: ExportObject,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EdgeKind {
    Neighbor,
    Distant,
}

impl From<EdgeKind> for Relation {
    fn from(e: EdgeKind) -> Self {
        match e {
            EdgeKind::Neighbor => Relation::Neighbor,
            EdgeKind::Distant => Relation::Distant,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RingAction {
    Show,
    Validate,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LineAction {
    Enumerate,
    Relations,
    Subconfig,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GqAction {
    Build,
    Axioms,
    Ovoids,
    Spreads,
    Hyperplanes,
    Petersen,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PauliAction {
    Table,
    Mermin,
    Mub,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VerifyTarget {
    Table2,
    Factor96,
    Factor105,
    Trinity,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExportObject {
    Ring,
    Line,
    Relations,
    Subconfig,
    Gq,
    Hyperplanes,
    Spreads,
    Petersen,
    Commutation,
    Certificate,
}

/// Rendered output plus whether every check in it passed.
struct Output {
    body: String,
    ok: bool,
}

impl Output {
    fn ok(body: String) -> Self {
        Self { body, ok: true }
    }

    fn json(v: Value) -> Self {
        Self::ok(pretty(&v))
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Input(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn unsupported(cmd: &str, f: Format) -> CliError {
    CliError::Usage(format!("`{cmd}` has no {f:?} output").to_lowercase())
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(out) => {
            print!("{}", out.body);
            if out.ok {
                0
            } else {
                1
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Input(e)) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(cmd: Command) -> CliResult<Output> {
    match cmd {
        Command::Ring {
            action,
            name,
            format,
        } => {
            let r = ring_by_name(&name)?;
            match action {
                RingAction::Show => ring_show(&r, format),
                RingAction::Validate => ring_validate(&r, format),
            }
        }
        Command::Line {
            action,
            ring,
            u,
            v,
            edges,
            format,
        } => {
            let line = enumerate_line(&ring_by_name(&ring)?);
            match action {
                LineAction::Enumerate => line_enumerate(&line, format),
                LineAction::Relations => line_relations(&line, edges.into(), format),
                LineAction::Subconfig => line_subconfig(&line, &u, &v, edges.into(), format),
            }
        }
        Command::Gq {
            action,
            ovoid,
            format,
        } => {
            let model = TwoQubitModel::build()?;
            match action {
                GqAction::Build => gq_build(&model, format),
                GqAction::Axioms => gq_axioms(&model, format),
                GqAction::Ovoids => gq_ovoids(&model, format),
                GqAction::Spreads => gq_spreads(&model, format),
                GqAction::Hyperplanes => gq_hyperplanes(&model, format),
                GqAction::Petersen => gq_petersen(&model, ovoid, format),
            }
        }
        Command::Pauli {
            action,
            spread,
            format,
        } => {
            let model = TwoQubitModel::build()?;
            match action {
                PauliAction::Table => pauli_table(&model, format),
                PauliAction::Mermin => pauli_mermin(&model, format),
                PauliAction::Mub => pauli_mub(&model, spread, format),
            }
        }
        Command::Verify {
            target,
            fixture,
            no_header,
            format,
        } => verify(target, fixture, !no_header, format),
        Command::Export { what, format, out } => {
            let rendered = export(what, format)?;
            std::fs::write(&out, &rendered.body).map_err(|e| CliError::Input(e.into()))?;
            Ok(Output {
                body: format!("wrote {}\n", out.display()),
                ok: rendered.ok,
            })
        }
    }
}

fn export(what: ExportObject, format: Format) -> CliResult<Output> {
    let m2f2 = || ring_by_name("m2f2");
    match what {
        ExportObject::Ring => ring_show(&m2f2()?, format),
        ExportObject::Line => line_enumerate(&enumerate_line(&m2f2()?), format),
        ExportObject::Relations => {
            line_relations(&enumerate_line(&m2f2()?), Relation::Neighbor, format)
        }
        ExportObject::Subconfig => line_subconfig(
            &enumerate_line(&m2f2()?),
            "1,0",
            "0,1",
            Relation::Neighbor,
            format,
        ),
        ExportObject::Gq => gq_build(&TwoQubitModel::build()?, format),
        ExportObject::Hyperplanes => gq_hyperplanes(&TwoQubitModel::build()?, format),
        ExportObject::Spreads => gq_spreads(&TwoQubitModel::build()?, format),
        ExportObject::Petersen => gq_petersen(&TwoQubitModel::build()?, 0, format),
        ExportObject::Commutation => pauli_table(&TwoQubitModel::build()?, format),
        ExportObject::Certificate => verify(VerifyTarget::All, None, false, format),
    }
}

fn table_text(title: &str, rows: &[Vec<usize>]) -> String {
    let mut out = format!("{title}\n");
    let n = rows.len();
    out.push_str("    |");
    for j in 0..n {
        let _ = write!(out, "{j:>3}");
    }
    out.push('\n');
    out.push_str(&format!("----+{}\n", "-".repeat(3 * n)));
    for (i, row) in rows.iter().enumerate() {
        let _ = write!(out, "{i:>3} |");
        for x in row {
            let _ = write!(out, "{x:>3}");
        }
        out.push('\n');
    }
    out
}

fn ring_show(r: &RingSpec, format: Format) -> CliResult<Output> {
    match format {
        Format::Json => Ok(Output::json(serde_json::to_value(r).map_err(Error::from)?)),
        Format::Text => {
            let us: Vec<String> = units(r).iter().map(|u| u.index().to_string()).collect();
            let mut out = format!("ring {} of order {}\n", r.name(), r.order());
            out.push_str(&table_text("addition", &r.add_rows()));
            out.push_str(&table_text("multiplication", &r.mul_rows()));
            let _ = writeln!(out, "units: {}", us.join(" "));
            Ok(Output::ok(out))
        }
        Format::Csv => {
            let mut out = String::from("table,x");
            for j in 0..r.order() {
                let _ = write!(out, ",{j}");
            }
            out.push('\n');
            for (name, rows) in [("add", r.add_rows()), ("mul", r.mul_rows())] {
                for (i, row) in rows.iter().enumerate() {
                    let _ = write!(out, "{name},{i}");
                    for x in row {
                        let _ = write!(out, ",{x}");
                    }
                    out.push('\n');
                }
            }
            Ok(Output::ok(out))
        }
        Format::Dot => Err(unsupported("ring show", format)),
    }
}

fn ring_validate(r: &RingSpec, format: Format) -> CliResult<Output> {
    let report = validate_ring(r);
    let ok = report.is_valid();
    let body = match format {
        Format::Json => pretty(&json!({
            "schema": SCHEMA_VERSION,
            "ring": report.ring,
            "order": report.order,
            "valid": ok,
            "violations": report.violations,
        })),
        Format::Text => {
            let mut out = format!(
                "ring {}: {} ({} violations)\n",
                r.name(),
                if ok { "valid" } else { "INVALID" },
                report.violations.len()
            );
            for v in &report.violations {
                let _ = writeln!(out, "  {v}");
            }
            out
        }
        _ => return Err(unsupported("ring validate", format)),
    };
    Ok(Output { body, ok })
}

fn orbit_text(line: &ProjectiveLine, id: usize) -> String {
    line.point(id)
        .members()
        .iter()
        .map(|&p| format_pair(p))
        .collect::<Vec<_>>()
        .join(" ")
}

fn line_enumerate(line: &ProjectiveLine, format: Format) -> CliResult<Output> {
    let labels = line.labels();
    match format {
        Format::Json => Ok(Output::json(line.to_json())),
        Format::Text => {
            let mut out = format!(
                "projective line over {}: {} points\n",
                line.ring().name(),
                line.len()
            );
            for (i, l) in labels.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "{l:>4}  {:<8} {}",
                    format_pair(line.point(i).canonical()),
                    orbit_text(line, i)
                );
            }
            Ok(Output::ok(out))
        }
        Format::Csv => {
            let mut out = String::from("id,canonical,orbit\n");
            for (i, l) in labels.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "{l},\"{}\",\"{}\"",
                    format_pair(line.point(i).canonical()),
                    orbit_text(line, i)
                );
            }
            Ok(Output::ok(out))
        }
        Format::Dot => Err(unsupported("line enumerate", format)),
    }
}

fn relation_output(
    m: &RelationMatrix,
    labels: &[String],
    name: &str,
    edges: Relation,
    format: Format,
) -> Output {
    match format {
        Format::Csv => Output::ok(m.to_csv(labels)),
        Format::Dot => Output::ok(m.to_dot(name, labels, edges)),
        Format::Json => Output::json(json!({
            "schema": SCHEMA_VERSION,
            "labels": labels,
            "rows": m.rows(),
        })),
        Format::Text => {
            let mut out = String::new();
            for (i, l) in labels.iter().enumerate() {
                let _ = writeln!(out, "{l:>4}  {}", m.row_string(i));
            }
            Output::ok(out)
        }
    }
}

fn line_relations(line: &ProjectiveLine, edges: Relation, format: Format) -> CliResult<Output> {
    Ok(relation_output(
        line.relation_matrix(),
        &line.labels(),
        &format!("P1({})", line.ring().name()),
        edges,
        format,
    ))
}

fn parse_pair(line: &ProjectiveLine, text: &str) -> CliResult<usize> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [a, b] = parts[..] else {
        return Err(CliError::Usage(format!("expected `a,b`, got `{text}`")));
    };
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| CliError::Usage(format!("`{s}` is not an element label")))
    };
    Ok(line.point_of_labels(parse(a)?, parse(b)?)?)
}

fn line_subconfig(
    line: &ProjectiveLine,
    u: &str,
    v: &str,
    edges: Relation,
    format: Format,
) -> CliResult<Output> {
    let (u, v) = (parse_pair(line, u)?, parse_pair(line, v)?);
    let sub = simultaneous_subconfig(line, u, v)?;
    let points = sub.points();
    let labels = c_labels(points.len());
    let rel = sub.relation(line);
    match format {
        Format::Json => Ok(Output::json(json!({
            "schema": SCHEMA_VERSION,
            "ring": line.ring().name(),
            "u": format_pair(line.point(u).canonical()),
            "v": format_pair(line.point(v).canonical()),
            "points": points.iter().zip(&labels).enumerate().map(|(i, (&p, l))| json!({
                "id": l,
                "family": if i < sub.distant.len() { "distant" } else { "neighbor" },
                "canonical": format_pair(line.point(p).canonical()),
                "orbit": line.point(p).members().iter().map(|&q| format_pair(q)).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "relation": rel.rows(),
        }))),
        Format::Text => {
            let mut out = format!(
                "U = {}, V = {}\n",
                format_pair(line.point(u).canonical()),
                format_pair(line.point(v).canonical())
            );
            for (title, fam, offset) in [
                ("distant to both", &sub.distant, 0),
                ("neighbor to both", &sub.neighbor, sub.distant.len()),
            ] {
                let _ = writeln!(out, "{title}: {} points", fam.len());
                for (k, &p) in fam.iter().enumerate() {
                    let _ = writeln!(out, "{:>4}  {}", labels[offset + k], orbit_text(line, p));
                }
            }
            out.push_str("relation\n");
            out.push_str(&relation_output(&rel, &labels, "", edges, Format::Text).body);
            Ok(Output::ok(out))
        }
        Format::Csv | Format::Dot => Ok(relation_output(
            &rel,
            &labels,
            "subconfiguration",
            edges,
            format,
        )),
    }
}

fn gq_build(model: &TwoQubitModel, format: Format) -> CliResult<Output> {
    let gq = &model.gq;
    match format {
        Format::Json => Ok(Output::json(gq.to_json())),
        Format::Dot => Ok(Output::ok(
            gq.collinearity_graph().to_dot("GQ(2,2)", gq.labels()),
        )),
        Format::Csv => {
            let mut out = String::from("line,p1,p2,p3\n");
            for (l, pts) in gq.line_labels().iter().zip(gq.lines()) {
                let _ = writeln!(out, "{l},{}", gq.names(pts).join(","));
            }
            Ok(Output::ok(out))
        }
        Format::Text => {
            let mut out = format!("{} points, {} lines\n", gq.num_points(), gq.lines().len());
            for (l, pts) in gq.line_labels().iter().zip(gq.lines()) {
                let ops: Vec<String> = pts.iter().map(|&p| model.op(p).to_string()).collect();
                let _ = writeln!(
                    out,
                    "{l:>4}  {}  ({})",
                    gq.names(pts).join(" "),
                    ops.join(" ")
                );
            }
            Ok(Output::ok(out))
        }
    }
}

fn gq_axioms(model: &TwoQubitModel, format: Format) -> CliResult<Output> {
    let report = validate_gq_axioms(&model.gq);
    let ok = report.is_valid();
    let srg = model.gq.collinearity_graph().strongly_regular_parameters();
    let body = match format {
        Format::Json => pretty(&json!({
            "schema": SCHEMA_VERSION,
            "valid": ok,
            "violations": report.violations,
            "srg": srg,
        })),
        Format::Text => {
            let mut out = format!("GQ(2,2) axioms: {}\n", if ok { "hold" } else { "VIOLATED" });
            for v in &report.violations {
                let _ = writeln!(out, "  {v:?}");
            }
            let _ = writeln!(out, "collinearity graph parameters: {srg:?}");
            out
        }
        _ => return Err(unsupported("gq axioms", format)),
    };
    Ok(Output { body, ok })
}

fn gq_ovoids(model: &TwoQubitModel, format: Format) -> CliResult<Output> {
    let gq = &model.gq;
    let ovoids = enumerate_ovoids(gq);
    match format {
        Format::Json => Ok(Output::json(json!({
            "schema": SCHEMA_VERSION,
            "ovoids": ovoids.iter().map(|o| gq.names(&o.points)).collect::<Vec<_>>(),
        }))),
        Format::Csv => {
            let mut out = String::from("ovoid,p1,p2,p3,p4,p5\n");
            for (i, o) in ovoids.iter().enumerate() {
                let _ = writeln!(out, "{i},{}", gq.names(&o.points).join(","));
            }
            Ok(Output::ok(out))
        }
        Format::Text => {
            let mut out = format!("{} ovoids\n", ovoids.len());
            for (i, o) in ovoids.iter().enumerate() {
                let ops: Vec<String> = o.points.iter().map(|&p| model.op(p).to_string()).collect();
                let _ = writeln!(
                    out,
                    "{i:>3}  {}  ({})",
                    gq.names(&o.points).join(" "),
                    ops.join(" ")
                );
            }
            Ok(Output::ok(out))
        }
        Format::Dot => Err(unsupported("gq ovoids", format)),
    }
}

fn gq_spreads(model: &TwoQubitModel, format: Format) -> CliResult<Output> {
    let gq = &model.gq;
    let spreads = enumerate_spreads(gq);
    let line_labels = gq.line_labels();
    let names = |sp: &[usize]| {
        sp.iter()
            .map(|&l| line_labels[l].clone())
            .collect::<Vec<_>>()
    };
    match format {
        Format::Json => Ok(Output::json(json!({
            "schema": SCHEMA_VERSION,
            "spreads": spreads.iter().map(|sp| json!({
                "lines": names(sp),
                "points": sp.iter().map(|&l| gq.names(gq.line(l))).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        }))),
        Format::Csv => {
            let mut out = String::from("spread,l1,l2,l3,l4,l5\n");
            for (i, sp) in spreads.iter().enumerate() {
                let _ = writeln!(out, "{i},{}", names(sp).join(","));
            }
            Ok(Output::ok(out))
        }
        Format::Text => {
            let mut out = format!("{} spreads\n", spreads.len());
            for (i, sp) in spreads.iter().enumerate() {
                let triples: Vec<String> = spread_operators(model, sp)
                    .iter()
                    .map(|t| format!("{{{} {} {}}}", t[0], t[1], t[2]))
                    .collect();
                let _ = writeln!(
                    out,
                    "{i:>3}  {}  {}",
                    names(sp).join(" "),
                    triples.join(" ")
                );
            }
            Ok(Output::ok(out))
        }
        Format::Dot => Err(unsupported("gq spreads", format)),
    }
}

fn gq_hyperplanes(model: &TwoQubitModel, format: Format) -> CliResult<Output> {
    let gq = &model.gq;
    let catalog = enumerate_hyperplanes(gq)?;
    let spreads = enumerate_spreads(gq);
    match format {
        Format::Json => Ok(Output::json(catalog.to_json(gq, &spreads))),
        Format::Csv => {
            let mut out = String::from("kind,center,points\n");
            for h in catalog
                .ovoids
                .iter()
                .chain(&catalog.perp_sets)
                .chain(&catalog.grids)
            {
                let (kind, center) = match h.kind {
                    HyperplaneKind::Ovoid => ("ovoid", String::new()),
                    HyperplaneKind::PerpSet { center } => {
                        ("perp_set", gq.label(center).to_string())
                    }
                    HyperplaneKind::Grid => ("grid", String::new()),
                };
                let _ = writeln!(out, "{kind},{center},{}", gq.names(&h.points).join(" "));
            }
            Ok(Output::ok(out))
        }
        Format::Text => {
            let (o, p, g) = catalog.counts();
            let mut out = format!(
                "{} hyperplanes: {o} ovoids, {p} perp-sets, {g} grids\n",
                catalog.total()
            );
            for h in &catalog.ovoids {
                let _ = writeln!(out, "ovoid     {}", gq.names(&h.points).join(" "));
            }
            for h in &catalog.perp_sets {
                if let HyperplaneKind::PerpSet { center } = h.kind {
                    let _ = writeln!(
                        out,
                        "perp {:<4} {}",
                        gq.label(center),
                        gq.names(&h.points).join(" ")
                    );
                }
            }
            for h in &catalog.grids {
                let _ = writeln!(out, "grid      {}", gq.names(&h.points).join(" "));
            }
            let _ = writeln!(out, "{} spreads", spreads.len());
            Ok(Output::ok(out))
        }
        Format::Dot => Err(unsupported("gq hyperplanes", format)),
    }
}

fn gq_petersen(model: &TwoQubitModel, ovoid: usize, format: Format) -> CliResult<Output> {
    let gq = &model.gq;
    let ovoids = enumerate_ovoids(gq);
    let o = ovoids.get(ovoid).ok_or_else(|| {
        CliError::Usage(format!(
            "ovoid index {ovoid} out of range (0..{})",
            ovoids.len()
        ))
    })?;
    let (g, verts) = complement_graph_of_ovoid(gq, &o.points);
    let witness = petersen_isomorphism(&g);
    let ok = witness.is_some();
    let labels = gq.names(&verts);
    let body = match format {
        Format::Dot => g.to_dot("petersen", &labels),
        Format::Json => pretty(&json!({
            "schema": SCHEMA_VERSION,
            "ovoid": gq.names(&o.points),
            "vertices": labels,
            "edges": g.edges().iter().map(|&(a, b)| [labels[a].clone(), labels[b].clone()]).collect::<Vec<_>>(),
            "petersen": ok,
            "isomorphism": witness.as_ref().map(|w| labels.iter().cloned().zip(w.iter().copied()).collect::<Vec<_>>()),
        })),
        Format::Text => {
            let mut out = format!("ovoid {}\n", gq.names(&o.points).join(" "));
            let _ = writeln!(
                out,
                "complement: {} vertices, {} edges, degree {:?}, girth {:?}",
                g.order(),
                g.edge_count(),
                g.regular_degree(),
                g.girth()
            );
            match &witness {
                Some(w) => {
                    out.push_str("isomorphic to the Petersen graph:");
                    for (l, k) in labels.iter().zip(w) {
                        let _ = write!(out, " {l}->{k}");
                    }
                    out.push('\n');
                }
                None => out.push_str("NOT isomorphic to the Petersen graph\n"),
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("a,b\n");
            for (a, b) in g.edges() {
                let _ = writeln!(out, "{},{}", labels[a], labels[b]);
            }
            out
        }
    };
    Ok(Output { body, ok })
}

fn pauli_table(model: &TwoQubitModel, format: Format) -> CliResult<Output> {
    let m = commutation_table(&model.labeling);
    let labels = c_labels(15);
    if format == Format::Text {
        let mut out = String::new();
        for (i, l) in labels.iter().enumerate() {
            let _ = writeln!(out, "{l:>4} {}  {}", model.op(i), m.row_string(i));
        }
        return Ok(Output::ok(out));
    }
    if format == Format::Json {
        return Ok(Output::json(json!({
            "schema": SCHEMA_VERSION,
            "labels": labels,
            "operators": model.labeling.ops(),
            "rows": m.rows(),
        })));
    }
    Ok(relation_output(
        &m,
        &labels,
        "commutation",
        Relation::Neighbor,
        format,
    ))
}

fn pauli_mermin(model: &TwoQubitModel, format: Format) -> CliResult<Output> {
    let ids = [[6, 7, 8], [9, 10, 11], [12, 13, 14]];
    let grid = ids.map(|row| row.map(|c| model.op(c)));
    let report = mermin_square_check(&grid)?;
    let ok = report.magic;
    let body = match format {
        Format::Json => pretty(&json!({
            "schema": SCHEMA_VERSION,
            "grid": ids.map(|row| row.map(|c| format!("C{}", c + 1))),
            "operators": grid,
            "row_signs": report.row_signs,
            "col_signs": report.col_signs,
            "magic": ok,
        })),
        Format::Text => {
            let mut out = String::new();
            for (i, row) in grid.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "{} {} {}   {}",
                    row[0], row[1], row[2], report.row_signs[i]
                );
            }
            let _ = writeln!(
                out,
                "{}",
                report.col_signs.map(|s| format!("{s:>2}")).join(" ")
            );
            let _ = writeln!(out, "magic: {ok}");
            out
        }
        _ => return Err(unsupported("pauli mermin", format)),
    };
    Ok(Output { body, ok })
}

fn pauli_mub(model: &TwoQubitModel, spread: Option<usize>, format: Format) -> CliResult<Output> {
    let spreads = enumerate_spreads(&model.gq);
    let chosen: Vec<usize> = match spread {
        Some(i) if i < spreads.len() => vec![i],
        Some(i) => {
            return Err(CliError::Usage(format!(
                "spread index {i} out of range (0..{})",
                spreads.len()
            )))
        }
        None => (0..spreads.len()).collect(),
    };
    let mut ok = true;
    let mut rows = Vec::new();
    for i in chosen {
        let ops = spread_operators(model, &spreads[i]);
        let r = mub_spread_report(&ops)?;
        ok &= r.passed();
        rows.push((i, ops, r));
    }
    let body = match format {
        Format::Json => pretty(&json!({
            "schema": SCHEMA_VERSION,
            "spreads": rows.iter().map(|(i, ops, r)| json!({
                "id": i,
                "triples": ops,
                "report": r,
                "passed": r.passed(),
            })).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut out = String::new();
            for (i, ops, r) in &rows {
                let triples: Vec<String> = ops
                    .iter()
                    .map(|t| format!("{{{} {} {}}}", t[0], t[1], t[2]))
                    .collect();
                let _ = writeln!(
                    out,
                    "spread {i}: {}  {} ({} projectors, {} pairs)",
                    triples.join(" "),
                    if r.passed() { "unbiased" } else { "FAILED" },
                    r.projectors,
                    r.pairs_checked
                );
                for f in &r.failures {
                    let _ = writeln!(out, "  {f}");
                }
            }
            out
        }
        _ => return Err(unsupported("pauli mub", format)),
    };
    Ok(Output { body, ok })
}

fn load_fixture(path: Option<PathBuf>) -> CliResult<RelationMatrix> {
    let Some(path) = path else {
        return Ok(reference_relation());
    };
    let text = std::fs::read_to_string(&path).map_err(Error::from)?;
    let (labels, m) = RelationMatrix::from_csv(&text)?;
    if labels != c_labels(15) {
        return Err(CliError::Input(Error::Parse(format!(
            "{}: expected header C1..C15",
            path.display()
        ))));
    }
    Ok(m)
}

fn verify(
    target: VerifyTarget,
    fixture: Option<PathBuf>,
    header: bool,
    format: Format,
) -> CliResult<Output> {
    let reference = load_fixture(fixture)?;
    let model = TwoQubitModel::build()?;
    let mut extra = None;
    let report: CorrespondenceReport = match target {
        VerifyTarget::Table2 => verify_reference_table_with(&model, &reference),
        VerifyTarget::Factor96 => {
            let mut r = section_report(factorization_9_6(&model));
            r.sections.push(perp_subline_check(&model, 12));
            r
        }
        VerifyTarget::Factor105 => section_report(factorization_10_5(&model)),
        VerifyTarget::Trinity => {
            let t = trinity_report(&model)?;
            extra = Some(t.rows.clone());
            section_report(t.section)
        }
        VerifyTarget::All => correspondence::verify_all_with(&reference)?,
    };
    let ok = report.passed();
    let body = match format {
        Format::Json => {
            let mut v = report.to_json();
            if let Some(rows) = &extra {
                v["rows"] = json!(rows);
            }
            pretty(&v)
        }
        Format::Text => {
            let mut out = report.to_certificate(header);
            if let Some(rows) = &extra {
                out.push_str("## summary\n");
                for r in rows {
                    let _ = writeln!(
                        out,
                        "{:<22} {:<20} {:>3}  {}  {}",
                        r.hyperplane,
                        r.subline,
                        r.count,
                        if r.verified { "ok" } else { "FAIL" },
                        r.operators
                    );
                }
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("section,check,passed,detail\n");
            for s in &report.sections {
                for c in &s.checks {
                    let _ = writeln!(
                        out,
                        "\"{}\",\"{}\",{},\"{}\"",
                        s.title,
                        c.name,
                        c.passed,
                        c.detail.replace('"', "'")
                    );
                }
            }
            for d in &report.diffs {
                let _ = writeln!(
                    out,
                    "\"diff\",\"{}: {},{}\",false,\"expected {} got {}\"",
                    d.comparison, d.row, d.col, d.expected, d.actual
                );
            }
            out
        }
        Format::Dot => return Err(unsupported("verify", format)),
    };
    Ok(Output { body, ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(args: &[&str]) -> i32 {
        run(std::iter::once("ringline").chain(args.iter().copied()))
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(code(&["frobnicate"]), 2);
        assert_eq!(code(&["ring", "show", "z7"]), 2);
        assert_eq!(code(&["ring", "show", "m2f2", "--format", "dot"]), 2);
        assert_eq!(code(&["line", "subconfig", "--u", "1,0", "--v", "1,0"]), 2);
        assert_eq!(code(&["gq", "petersen", "--ovoid", "9"]), 2);
    }

    #[test]
    fn help_exits_0() {
        assert_eq!(code(&["--help"]), 0);
    }

    #[test]
    fn verify_reference_table_passes() {
        assert_eq!(code(&["verify", "table2", "--no-header"]), 0);
    }
}
