//! Quadrilateral coordinates and their normal completions.
//!
//! Quad coordinates `ζ` extend to a normal surface exactly when, for every
//! vertex `v`, the part of `∂ζ` on the arcs linking `v` bounds in the link
//! `S(v)`. On links that are spheres it suffices to be a cycle; when some
//! projection is a cycle but not a boundary, `ζ` describes a spun-normal
//! surface. Completions are unique up to adding vertex links, and the
//! canonical one uses the fewest triangles around each vertex.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::chain::{boundary_matrix, Chain1, Chain2, SparseMatrix};
use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form_with, PivotOrder, SmithDecomposition, Solution};
use crate::link::{build_links, projection, LinkVertex, VertexLink};
use crate::triangulation::Triangulation;

/// Coefficients of `Q1, Q2, Q3` per tetrahedron.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadCoordinates {
    pub quads: Vec<[i64; 3]>,
}

/// Coefficients of `T0 T1 T2 T3 Q1 Q2 Q3` per tetrahedron.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalCoordinates {
    pub coords: Vec<[i64; 7]>,
}

impl QuadCoordinates {
    pub fn zeros(tets: usize) -> Self {
        QuadCoordinates { quads: vec![[0; 3]; tets] }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::MalformedInput(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn to_chain(&self) -> Chain2 {
        Chain2::from_parts(&vec![[0; 4]; self.quads.len()], &self.quads)
    }
}

impl NormalCoordinates {
    pub fn from_chain(chain: &Chain2) -> Self {
        NormalCoordinates { coords: chain.0.chunks(7).map(|c| c.try_into().expect("7 coefficients")).collect() }
    }

    pub fn to_chain(&self) -> Chain2 {
        Chain2(self.coords.iter().flatten().copied().collect())
    }

    pub fn quad_part(&self) -> QuadCoordinates {
        QuadCoordinates { quads: self.coords.iter().map(|c| [c[4], c[5], c[6]]).collect() }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::MalformedInput(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AdmissibilityReport {
    /// `(tetrahedron, quad type 1..=3)` with a negative coefficient
    pub negative: Vec<(usize, usize)>,
    /// tetrahedra carrying two or more quad types
    pub mixed: Vec<usize>,
}

impl AdmissibilityReport {
    pub fn is_admissible(&self) -> bool {
        self.negative.is_empty() && self.mixed.is_empty()
    }

    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        for &(tet, k) in &self.negative {
            parts.push(format!("tet {tet} quad Q{k} is negative"));
        }
        for &tet in &self.mixed {
            parts.push(format!("tet {tet} carries more than one quad type"));
        }
        parts.join("; ")
    }
}

pub fn check_admissible(q: &QuadCoordinates) -> AdmissibilityReport {
    let mut report = AdmissibilityReport::default();
    for (tet, row) in q.quads.iter().enumerate() {
        for (k, &c) in row.iter().enumerate() {
            if c < 0 {
                report.negative.push((tet, k + 1));
            }
        }
        if row.iter().filter(|&&c| c != 0).count() > 1 {
            report.mixed.push(tet);
        }
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Classification {
    Normal,
    SpunNormal,
    NotNormal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleFailure {
    pub vertex: usize,
    /// link 0-cells where the boundary of the projected chain is nonzero
    pub defects: Vec<(LinkVertex, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryFailure {
    pub vertex: usize,
    pub genus: i64,
    pub reason: Solution,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftResult {
    pub classification: Classification,
    pub canonical_lift: Option<NormalCoordinates>,
    /// multiple of `[S(v)]` removed from the solver's witness at each vertex
    pub per_vertex_shift: BTreeMap<usize, i64>,
    pub cycle_failures: Vec<CycleFailure>,
    pub boundary_failures: Vec<BoundaryFailure>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    /// `(tetrahedron, disc slot 0..7)` with a negative coefficient
    pub negative: Vec<(usize, usize)>,
    pub mixed: Vec<usize>,
    /// arcs whose matching equation fails, with the boundary coefficient
    pub violated_arcs: Vec<(usize, i64)>,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.negative.is_empty() && self.mixed.is_empty() && self.violated_arcs.is_empty()
    }
}

struct LinkSystem {
    link: VertexLink,
    edge_boundary: SparseMatrix,
    smith: SmithDecomposition,
}

/// Precomputed boundary matrix and per-link Smith decompositions, reused
/// across many quad vectors on one triangulation.
pub struct QuadSolver<'a> {
    tri: &'a Triangulation,
    boundary: SparseMatrix,
    links: Vec<LinkSystem>,
}

impl<'a> QuadSolver<'a> {
    pub fn new(tri: &'a Triangulation) -> Result<Self> {
        Self::with_pivot_order(tri, PivotOrder::LowestIndex)
    }

    pub fn with_pivot_order(tri: &'a Triangulation, order: PivotOrder) -> Result<Self> {
        let boundary = boundary_matrix(tri);
        let links = build_links(tri)?
            .into_iter()
            .map(|link| {
                let d2 = link.boundary_matrix(&boundary).to_dense();
                LinkSystem {
                    edge_boundary: link.edge_boundary_matrix(tri),
                    smith: smith_normal_form_with(&d2, order),
                    link,
                }
            })
            .collect();
        Ok(QuadSolver { tri, boundary, links })
    }

    pub fn triangulation(&self) -> &Triangulation {
        self.tri
    }

    pub fn boundary(&self) -> &SparseMatrix {
        &self.boundary
    }

    pub fn link(&self, vertex: usize) -> &VertexLink {
        &self.links[vertex].link
    }

    fn check_len(&self, q: &QuadCoordinates) -> Result<()> {
        if q.quads.len() != self.tri.tet_count() {
            return Err(Error::Dimension { expected: self.tri.tet_count(), found: q.quads.len() });
        }
        Ok(())
    }

    fn system(&self, vertex: usize) -> Result<&LinkSystem> {
        self.links.get(vertex).ok_or(Error::OutOfRange { index: vertex, limit: self.links.len() })
    }

    fn quad_boundary(&self, q: &QuadCoordinates) -> Result<Chain1> {
        self.check_len(q)?;
        Ok(Chain1(self.boundary.apply(&q.to_chain().0)?))
    }

    /// `∂̄_v ζ`: the boundary of `q` projected onto the arcs linking `vertex`.
    pub fn partial_boundary(&self, q: &QuadCoordinates, vertex: usize) -> Result<Chain1> {
        let sys = self.system(vertex)?;
        Ok(projection(&sys.link, &self.quad_boundary(q)?))
    }

    fn defects(&self, sys: &LinkSystem, dq: &Chain1) -> Result<Vec<(LinkVertex, i64)>> {
        let local = sys.link.local_chain(dq);
        let image = sys.edge_boundary.apply(&local)?;
        Ok(image.into_iter().enumerate().filter(|&(_, c)| c != 0).map(|(k, c)| (sys.link.vertices[k], c)).collect())
    }

    /// Whether `∂̄_v ζ` is a 1-cycle of the link.
    pub fn cycle_test(&self, q: &QuadCoordinates, vertex: usize) -> Result<bool> {
        let sys = self.system(vertex)?;
        Ok(self.defects(sys, &self.quad_boundary(q)?)?.is_empty())
    }

    fn witness(&self, sys: &LinkSystem, dq: &Chain1) -> Result<std::result::Result<Vec<i64>, Solution>> {
        let rhs: Vec<BigInt> = sys.link.local_chain(dq).into_iter().map(|c| BigInt::from(-c)).collect();
        match sys.smith.solve(&rhs)? {
            Solution::Integral(x) => {
                let x = x.iter().map(|c| c.to_i64().ok_or(Error::Overflow)).collect::<Result<_>>()?;
                Ok(Ok(x))
            }
            other => Ok(Err(other)),
        }
    }

    /// Whether `∂̄_v ζ` bounds in the link. On success returns triangle
    /// coefficients `ζ′(v)`, aligned with the link's `triangles`, with
    /// `∂₂(v) ζ′(v) = −∂̄_v ζ`.
    pub fn boundary_test(&self, q: &QuadCoordinates, vertex: usize) -> Result<Option<Vec<i64>>> {
        let sys = self.system(vertex)?;
        Ok(self.witness(sys, &self.quad_boundary(q)?)?.ok())
    }

    pub fn lift(&self, q: &QuadCoordinates) -> Result<LiftResult> {
        self.check_len(q)?;
        let report = check_admissible(q);
        if !report.is_admissible() {
            return Err(Error::Inadmissible(report.describe()));
        }
        let dq = self.quad_boundary(q)?;
        let mut result = LiftResult {
            classification: Classification::Normal,
            canonical_lift: None,
            per_vertex_shift: BTreeMap::new(),
            cycle_failures: Vec::new(),
            boundary_failures: Vec::new(),
        };
        for sys in &self.links {
            let defects = self.defects(sys, &dq)?;
            if !defects.is_empty() {
                result.cycle_failures.push(CycleFailure { vertex: sys.link.vertex, defects });
            }
        }
        if !result.cycle_failures.is_empty() {
            result.classification = Classification::NotNormal;
            return Ok(result);
        }

        let mut xi = q.to_chain();
        for sys in &self.links {
            match self.witness(sys, &dq)? {
                Ok(w) => {
                    let m = w.iter().copied().min().unwrap_or(0);
                    for (&d, &c) in sys.link.triangles.iter().zip(&w) {
                        xi.0[d] = c - m;
                    }
                    result.per_vertex_shift.insert(sys.link.vertex, m);
                }
                Err(reason) => result.boundary_failures.push(BoundaryFailure {
                    vertex: sys.link.vertex,
                    genus: sys.link.genus,
                    reason,
                }),
            }
        }
        if !result.boundary_failures.is_empty() {
            result.classification = Classification::SpunNormal;
            result.per_vertex_shift.clear();
            return Ok(result);
        }
        debug_assert!(self.boundary.apply(&xi.0).map(|b| b.iter().all(|&c| c == 0)).unwrap_or(false));
        result.canonical_lift = Some(NormalCoordinates::from_chain(&xi));
        Ok(result)
    }

    pub fn verify(&self, x: &NormalCoordinates) -> Result<VerifyReport> {
        if x.coords.len() != self.tri.tet_count() {
            return Err(Error::Dimension { expected: self.tri.tet_count(), found: x.coords.len() });
        }
        let mut report = VerifyReport::default();
        for (tet, row) in x.coords.iter().enumerate() {
            for (slot, &c) in row.iter().enumerate() {
                if c < 0 {
                    report.negative.push((tet, slot));
                }
            }
        }
        report.mixed = check_admissible(&x.quad_part()).mixed;
        let b = self.boundary.apply(&x.to_chain().0)?;
        report.violated_arcs = b.into_iter().enumerate().filter(|&(_, c)| c != 0).collect();
        Ok(report)
    }
}

pub fn partial_boundary(tri: &Triangulation, q: &QuadCoordinates, vertex: usize) -> Result<Chain1> {
    QuadSolver::new(tri)?.partial_boundary(q, vertex)
}

pub fn cycle_test(tri: &Triangulation, q: &QuadCoordinates, vertex: usize) -> Result<bool> {
    QuadSolver::new(tri)?.cycle_test(q, vertex)
}

pub fn boundary_test(tri: &Triangulation, q: &QuadCoordinates, vertex: usize) -> Result<Option<Vec<i64>>> {
    QuadSolver::new(tri)?.boundary_test(q, vertex)
}

pub fn lift(tri: &Triangulation, q: &QuadCoordinates) -> Result<LiftResult> {
    QuadSolver::new(tri)?.lift(q)
}

pub fn verify_normal(tri: &Triangulation, x: &NormalCoordinates) -> Result<VerifyReport> {
    QuadSolver::new(tri)?.verify(x)
}
