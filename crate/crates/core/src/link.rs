//! Vertex links. The normal triangles cutting off a vertex class form a
//! closed surface `S(v)`; its arcs and triangles span a subcomplex of the
//! arc/disc chain complex, on which the boundary map restricts to the
//! simplicial boundary of `S(v)`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::chain::{boundary_of_disc, Chain1, Chain2, SparseMatrix};
use crate::error::{Error, Result};
use crate::perm::face_vertices;
use crate::triangulation::Triangulation;

/// A 0-cell of a vertex link: the end of an edge class at the vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LinkVertex {
    pub edge: usize,
    /// true if the edge's head (rather than its tail) lies at the vertex
    pub head: bool,
}

impl LinkVertex {
    fn at(tri: &Triangulation, tet: usize, corner: usize, other: usize) -> Self {
        LinkVertex {
            edge: tri.edge_class(tet, corner, other),
            head: tri.edge_direction(tet, corner, other).1 == corner,
        }
    }

    pub fn describe(&self) -> String {
        format!("{} of edge {}", if self.head { "head" } else { "tail" }, self.edge)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexLink {
    pub vertex: usize,
    /// disc indices of the link triangles, increasing
    pub triangles: Vec<usize>,
    /// arc indices, increasing
    pub arcs: Vec<usize>,
    /// for each entry of `arcs`, the two link triangles it bounds
    pub adjacency: Vec<[usize; 2]>,
    pub vertices: Vec<LinkVertex>,
    pub euler_characteristic: i64,
    pub genus: i64,
    pub is_sphere: bool,
}

/// `[S(v)]`: coefficient one on every triangle of the link.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FundamentalClass {
    pub vertex: usize,
    pub chain: Chain2,
}

pub fn build_link(tri: &Triangulation, vertex: usize) -> Result<VertexLink> {
    if vertex >= tri.vertex_count() {
        return Err(Error::OutOfRange { index: vertex, limit: tri.vertex_count() });
    }
    let bad = |reason: String| Error::BadLink { vertex, reason };

    let mut triangles = Vec::new();
    let mut vertices = BTreeSet::new();
    let mut incidences = vec![Vec::new(); tri.arc_count()];
    for tet in 0..tri.tet_count() {
        for corner in 0..4 {
            if tri.vertex_class(tet, corner) != vertex {
                continue;
            }
            let disc = 7 * tet + corner;
            triangles.push(disc);
            for face in (0..4).filter(|&f| f != corner) {
                incidences[tri.arc_index(tet, face, corner)].push(disc);
            }
            for other in (0..4).filter(|&w| w != corner) {
                vertices.insert(LinkVertex::at(tri, tet, corner, other));
            }
        }
    }

    let arcs: Vec<usize> = (0..tri.arc_count()).filter(|&a| tri.arc(a).vertex == vertex).collect();
    let mut adjacency = Vec::with_capacity(arcs.len());
    for &a in &arcs {
        match incidences[a][..] {
            [x, y] => adjacency.push([x, y]),
            ref other => return Err(bad(format!("{} bounds {} link triangles", tri.describe_arc(a), other.len()))),
        }
    }

    // connectivity of triangles through shared arcs
    let mut seen = vec![false; triangles.len()];
    let pos = |d: usize| triangles.binary_search(&d).expect("link triangle");
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(k) = stack.pop() {
        for [x, y] in &adjacency {
            let (x, y) = (pos(*x), pos(*y));
            for (from, to) in [(x, y), (y, x)] {
                if from == k && !seen[to] {
                    seen[to] = true;
                    stack.push(to);
                }
            }
        }
    }
    if let Some(k) = seen.iter().position(|s| !s) {
        return Err(bad(format!("triangle disc {} is not connected to disc {}", triangles[k], triangles[0])));
    }

    let chi = vertices.len() as i64 - arcs.len() as i64 + triangles.len() as i64;
    if chi > 2 || chi % 2 != 0 {
        return Err(bad(format!("Euler characteristic {chi} is not that of a closed orientable surface")));
    }
    Ok(VertexLink {
        vertex,
        triangles,
        arcs,
        adjacency,
        vertices: vertices.into_iter().collect(),
        euler_characteristic: chi,
        genus: (2 - chi) / 2,
        is_sphere: chi == 2,
    })
}

/// Builds every vertex link in vertex class order.
pub fn build_links(tri: &Triangulation) -> Result<Vec<VertexLink>> {
    (0..tri.vertex_count()).map(|v| build_link(tri, v)).collect()
}

pub fn fundamental_class(tri: &Triangulation, link: &VertexLink) -> FundamentalClass {
    let mut chain = Chain2::zeros(tri.tet_count());
    for &d in &link.triangles {
        chain.0[d] = 1;
    }
    FundamentalClass { vertex: link.vertex, chain }
}

/// Zeroes every coefficient on arcs outside the link.
pub fn projection(link: &VertexLink, chain: &Chain1) -> Chain1 {
    let mut out = Chain1::zeros(chain.len());
    for &a in &link.arcs {
        out.0[a] = chain.0[a];
    }
    out
}

/// Boundary of the link triangle cutting off `corner` of `tet`, computed
/// from the orientation the triangle inherits as the face opposite `corner`
/// (outward normal first), with arcs oriented along their edges.
fn intrinsic_boundary(tri: &Triangulation, tet: usize, corner: usize) -> Chain1 {
    let mut out = Chain1::zeros(tri.arc_count());
    let opposite = face_vertices(corner);
    let face_sign = tri.orientation(tet) * if corner.is_multiple_of(2) { 1 } else { -1 };
    for (k, &omitted) in opposite.iter().enumerate() {
        // the edge of the oriented triangle missing `omitted`, increasing order
        let mut rest = opposite.iter().copied().filter(|&x| x != omitted);
        let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
        let (tail, _) = tri.edge_direction(tet, a, b);
        let along = if tail == a { 1 } else { -1 };
        let coefficient = face_sign * if k % 2 == 0 { 1 } else { -1 } * along;
        out.0[tri.arc_index(tet, omitted, corner)] += i64::from(coefficient);
    }
    out
}

/// Checks that the disc boundary map restricted to the link's triangles is
/// the simplicial boundary of the oriented link surface: supports stay on
/// the link's arcs, signs match the intrinsic orientation, and every arc
/// appears in exactly two triangle boundaries with opposite signs.
pub fn link_boundary_restriction_check(tri: &Triangulation, link: &VertexLink) -> bool {
    let mut arc_total = vec![0i64; tri.arc_count()];
    let mut arc_hits = vec![0usize; tri.arc_count()];
    for &d in &link.triangles {
        let Ok(b) = boundary_of_disc(tri, d) else { return false };
        if b.support().iter().any(|a| link.arcs.binary_search(a).is_err()) {
            return false;
        }
        if b != intrinsic_boundary(tri, d / 7, d % 7) {
            return false;
        }
        for face in (0..4).filter(|&f| f != d % 7) {
            let a = tri.arc_index(d / 7, face, d % 7);
            arc_total[a] += crate::chain::epsilon(tri, d / 7, face, d % 7).map_or(0, i64::from);
            arc_hits[a] += 1;
        }
    }
    link.arcs.iter().all(|&a| arc_hits[a] == 2 && arc_total[a] == 0)
}

impl VertexLink {
    /// `∂₂(v)`: rows are `self.arcs`, columns `self.triangles`.
    pub fn boundary_matrix(&self, boundary: &SparseMatrix) -> SparseMatrix {
        boundary.restrict(&self.arcs, &self.triangles)
    }

    /// `∂₁(v)`: rows are `self.vertices`, columns `self.arcs`. An arc runs
    /// from the end of the edge joining its corner to the tail of the
    /// opposite edge, to the end of the edge joining its corner to the head.
    pub fn edge_boundary_matrix(&self, tri: &Triangulation) -> SparseMatrix {
        let columns = self
            .arcs
            .iter()
            .map(|&a| {
                let arc = tri.arc(a);
                let (tail, head) = tri.arc_direction(a);
                let row = |w| {
                    let lv = LinkVertex::at(tri, arc.tet, arc.corner, w);
                    self.vertices.binary_search(&lv).expect("link vertex")
                };
                vec![(row(head), 1), (row(tail), -1)]
            })
            .collect();
        SparseMatrix::from_columns(self.vertices.len(), columns)
    }

    /// Restricts a global 1-chain to this link's arcs, in `self.arcs` order.
    pub fn local_chain(&self, chain: &Chain1) -> Vec<i64> {
        self.arcs.iter().map(|&a| chain.0[a]).collect()
    }
}
