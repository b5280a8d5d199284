//! `normcx`: build the normal-disc chain complex of a triangulation, export
//! its boundary matrix, and classify quadrilateral coordinates.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Result};
use clap::{Args, Parser, Subcommand};
use normcx::linalg::smith_normal_form;
use normcx::{
    boundary_matrix, build_link, matching_equations, parse_triangulation, Classification, NormalCoordinates,
    QuadCoordinates, QuadSolver, SparseMatrix, Triangulation,
};
use serde_json::{json, Value};

const EXIT_NOT_NORMAL: u8 = 3;
const EXIT_SPUN: u8 = 2;
const EXIT_INPUT: u8 = 1;
const EXIT_USAGE: u8 = 64;
const EXIT_INVALID_TRIANGULATION: u8 = 65;
const EXIT_UNREADABLE: u8 = 66;

#[derive(Parser)]
#[command(name = "normcx", version, about = "Normal surfaces as cycles of the normal-disc chain complex")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TriArg {
    /// Triangulation JSON file
    #[arg(long, value_name = "FILE")]
    tri: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Check gluing data and summarize vertex, edge and face classes
    Validate {
        #[command(flatten)]
        tri: TriArg,
        #[arg(long)]
        json: bool,
    },
    /// Describe the link of every vertex class
    Links {
        #[command(flatten)]
        tri: TriArg,
        #[arg(long)]
        json: bool,
    },
    /// Print the disc boundary matrix as `row col value` triplets
    Matrix {
        #[command(flatten)]
        tri: TriArg,
        /// Print the matching equations (one row per arc) instead
        #[arg(long)]
        equations: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether quad coordinates extend to a normal surface
    Classify {
        #[command(flatten)]
        tri: TriArg,
        /// Quad coordinates JSON file
        #[arg(long, value_name = "FILE")]
        quads: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check that normal coordinates are admissible and satisfy every matching equation
    Verify {
        #[command(flatten)]
        tri: TriArg,
        /// Normal coordinates JSON file
        #[arg(long, value_name = "FILE")]
        coords: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print Smith invariant factors of a boundary matrix or a triplet file
    Snf {
        /// Triangulation JSON file: factors of the boundary matrix and of each link
        #[arg(long, value_name = "FILE", required_unless_present = "matrix", conflicts_with = "matrix")]
        tri: Option<PathBuf>,
        /// Matrix in `rows cols nnz` triplet format
        #[arg(long, value_name = "FILE")]
        matrix: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

/// An error carrying the process exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for Failure {}

fn fail(code: u8, message: impl Into<String>) -> anyhow::Error {
    anyhow!(Failure { code, message: message.into() })
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| fail(EXIT_UNREADABLE, format!("cannot read {}: {e}", path.display())))
}

fn load_triangulation(path: &Path) -> Result<Triangulation> {
    parse_triangulation(&read(path)?).map_err(|e| fail(EXIT_INVALID_TRIANGULATION, format!("{}: {e}", path.display())))
}

fn input_error(path: &Path, e: normcx::Error) -> anyhow::Error {
    fail(EXIT_INPUT, format!("{}: {e}", path.display()))
}

/// Text or JSON output plus the exit code it implies.
struct Report {
    text: String,
    json: Value,
    code: u8,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, code: 0 }
    }
}

fn validate(tri: &Triangulation) -> Report {
    let mut text = String::new();
    let orientation: Vec<i32> = (0..tri.tet_count()).map(|t| tri.orientation(t)).collect();
    writeln!(text, "tetrahedra {}", tri.tet_count()).unwrap();
    writeln!(text, "components {}", tri.component_count()).unwrap();
    writeln!(text, "vertices {}", tri.vertex_count()).unwrap();
    writeln!(text, "edges {}", tri.edge_count()).unwrap();
    writeln!(text, "faces {}", tri.face_count()).unwrap();
    let signs: Vec<&str> = orientation.iter().map(|&o| if o > 0 { "+" } else { "-" }).collect();
    writeln!(text, "orientation {}", signs.join(" ")).unwrap();

    let mut vertices = vec![Vec::new(); tri.vertex_count()];
    let mut edges = vec![Vec::new(); tri.edge_count()];
    for tet in 0..tri.tet_count() {
        for v in 0..4 {
            vertices[tri.vertex_class(tet, v)].push((tet, v));
            for w in v + 1..4 {
                edges[tri.edge_class(tet, v, w)].push((tet, tri.edge_direction(tet, v, w)));
            }
        }
    }
    for (class, members) in vertices.iter().enumerate() {
        let list: Vec<String> = members.iter().map(|(t, v)| format!("{t}:{v}")).collect();
        writeln!(text, "vertex {class} corners {}", list.join(" ")).unwrap();
    }
    for (class, members) in edges.iter().enumerate() {
        let list: Vec<String> = members.iter().map(|(t, (a, b))| format!("{t}:{a}{b}")).collect();
        writeln!(text, "edge {class} degree {} occurrences {}", members.len(), list.join(" ")).unwrap();
    }
    let faces: Vec<[(usize, usize); 2]> = (0..tri.face_count()).map(|f| tri.face_sides(f)).collect();
    for (class, [(t0, f0), (t1, f1)]) in faces.iter().enumerate() {
        writeln!(text, "face {class} sides {t0}:{f0} {t1}:{f1}").unwrap();
    }
    let json = json!({
        "tetrahedra": tri.tet_count(),
        "components": tri.component_count(),
        "orientation": orientation,
        "vertices": vertices,
        "edges": edges.iter().map(|m| m.iter().map(|(t, (a, b))| json!([t, a, b])).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "faces": faces,
    });
    Report::ok(text, json)
}

fn links(tri: &Triangulation) -> Result<Report> {
    let mut text = String::new();
    let mut rows = Vec::new();
    for v in 0..tri.vertex_count() {
        let l = build_link(tri, v)?;
        writeln!(
            text,
            "vertex {v} triangles {} chi {} genus {} sphere {}",
            l.triangles.len(),
            l.euler_characteristic,
            l.genus,
            l.is_sphere
        )
        .unwrap();
        rows.push(json!({
            "vertex": v,
            "triangles": l.triangles.len(),
            "chi": l.euler_characteristic,
            "genus": l.genus,
            "sphere": l.is_sphere,
        }));
    }
    Ok(Report::ok(text, Value::Array(rows)))
}

fn matrix_report(m: &SparseMatrix) -> Report {
    let triplets: Vec<[i64; 3]> = m.triplets().into_iter().map(|(r, c, v)| [r as i64, c as i64, v]).collect();
    let json = json!({ "rows": m.nrows(), "cols": m.ncols(), "nnz": m.nnz(), "triplets": triplets });
    Report::ok(m.to_triplet_text(), json)
}

fn classify(tri: &Triangulation, q: &QuadCoordinates) -> normcx::Result<Report> {
    let solver = QuadSolver::new(tri)?;
    let result = solver.lift(q)?;
    let mut text = String::new();
    let (name, code) = match result.classification {
        Classification::Normal => ("Normal", 0),
        Classification::SpunNormal => ("SpunNormal", EXIT_SPUN),
        Classification::NotNormal => ("NotNormal", EXIT_NOT_NORMAL),
    };
    writeln!(text, "classification {name}").unwrap();
    if let Some(xi) = &result.canonical_lift {
        for (tet, row) in xi.coords.iter().enumerate() {
            let row: Vec<String> = row.iter().map(i64::to_string).collect();
            writeln!(text, "tet {tet} coords {}", row.join(" ")).unwrap();
        }
        for (v, shift) in &result.per_vertex_shift {
            writeln!(text, "vertex {v} boundary test passed, shift {shift}").unwrap();
        }
    }
    for failure in &result.cycle_failures {
        let defects: Vec<String> = failure.defects.iter().map(|(lv, c)| format!("{} ({c:+})", lv.describe())).collect();
        writeln!(text, "vertex {} cycle test failed at {}", failure.vertex, defects.join(", ")).unwrap();
    }
    for failure in &result.boundary_failures {
        let reason = match failure.reason {
            normcx::Solution::NoRationalSolution => "not a rational boundary",
            normcx::Solution::NotIntegral => "not an integral boundary",
            normcx::Solution::Integral(_) => unreachable!("integral witnesses are not failures"),
        };
        writeln!(text, "vertex {} genus {} boundary test failed: {reason}", failure.vertex, failure.genus).unwrap();
    }
    Ok(Report { text, json: serde_json::to_value(&result).expect("serializable"), code })
}

fn verify(tri: &Triangulation, x: &NormalCoordinates) -> normcx::Result<Report> {
    let report = QuadSolver::new(tri)?.verify(x)?;
    let mut text = String::new();
    writeln!(text, "{}", if report.is_valid() { "valid" } else { "invalid" }).unwrap();
    for &(tet, slot) in &report.negative {
        writeln!(text, "negative coefficient at tet {tet} slot {slot}").unwrap();
    }
    for &tet in &report.mixed {
        writeln!(text, "tet {tet} carries more than one quad type").unwrap();
    }
    for &(arc, c) in &report.violated_arcs {
        writeln!(text, "violated {}: boundary {c:+}", tri.describe_arc(arc)).unwrap();
    }
    let code = if report.is_valid() { 0 } else { EXIT_NOT_NORMAL };
    Ok(Report { text, json: serde_json::to_value(&report).expect("serializable"), code })
}

fn factors_line(label: &str, m: &SparseMatrix) -> (String, Value) {
    let s = smith_normal_form(&m.to_dense());
    let factors: Vec<String> = s.invariant_factors().iter().take(s.rank).map(|f| f.to_string()).collect();
    let text = format!("{label} {}x{} rank {} factors {}\n", m.nrows(), m.ncols(), s.rank, factors.join(" "));
    let json = json!({ "name": label, "rows": m.nrows(), "cols": m.ncols(), "rank": s.rank, "factors": factors });
    (text, json)
}

fn snf(tri: Option<&Path>, matrix: Option<&Path>) -> Result<Report> {
    let mut text = String::new();
    let mut rows = Vec::new();
    if let Some(path) = matrix {
        let m = SparseMatrix::from_triplet_text(&read(path)?).map_err(|e| input_error(path, e))?;
        let (t, j) = factors_line("matrix", &m);
        text.push_str(&t);
        rows.push(j);
    }
    if let Some(path) = tri {
        let tri = load_triangulation(path)?;
        let d = boundary_matrix(&tri);
        let (t, j) = factors_line("boundary", &d);
        text.push_str(&t);
        rows.push(j);
        for v in 0..tri.vertex_count() {
            let link = build_link(&tri, v)?;
            let (t, j) = factors_line(&format!("link {v}"), &link.boundary_matrix(&d));
            text.push_str(&t);
            rows.push(j);
        }
    }
    Ok(Report::ok(text, Value::Array(rows)))
}

fn execute(command: Command) -> Result<(Report, bool)> {
    Ok(match command {
        Command::Validate { tri, json } => (validate(&load_triangulation(&tri.tri)?), json),
        Command::Links { tri, json } => (links(&load_triangulation(&tri.tri)?)?, json),
        Command::Matrix { tri, equations, json } => {
            let t = load_triangulation(&tri.tri)?;
            let m = if equations { matching_equations(&t) } else { boundary_matrix(&t) };
            (matrix_report(&m), json)
        }
        Command::Classify { tri, quads, json } => {
            let t = load_triangulation(&tri.tri)?;
            let q = QuadCoordinates::from_json(&read(&quads)?).map_err(|e| input_error(&quads, e))?;
            (classify(&t, &q).map_err(|e| input_error(&quads, e))?, json)
        }
        Command::Verify { tri, coords, json } => {
            let t = load_triangulation(&tri.tri)?;
            let x = NormalCoordinates::from_json(&read(&coords)?).map_err(|e| input_error(&coords, e))?;
            (verify(&t, &x).map_err(|e| input_error(&coords, e))?, json)
        }
        Command::Snf { tri, matrix, json } => (snf(tri.as_deref(), matrix.as_deref())?, json),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli.command) {
        Ok((report, as_json)) => {
            if as_json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable"));
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(report.code)
        }
        Err(e) => {
            let code = e.downcast_ref::<Failure>().map_or(EXIT_INPUT, |f| f.code);
            eprintln!("normcx: {e:#}");
            ExitCode::from(code)
        }
    }
}
