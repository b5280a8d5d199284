//! Face-pairing data for closed orientable 3-pseudo-manifolds and the
//! skeleton derived from it: vertex, edge and face classes, tetrahedron
//! orientations and a canonical orientation of every edge class.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::index::Arc;
use crate::link;
use crate::perm::{edge_index, face_vertices, opposite_edge, Perm4, EDGES};

/// Partner of a face slot: face `face` of tetrahedron `tet`, with `perm`
/// carrying local vertices of the source tetrahedron to local vertices of
/// the target (the omitted vertex goes to the omitted vertex).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FaceGluing {
    pub tet: usize,
    pub face: usize,
    pub perm: Perm4,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    gluings: Vec<[FaceGluing; 4]>,
    orientation: Vec<i32>,
    component: Vec<usize>,
    components: usize,
    vertex_of: Vec<[usize; 4]>,
    vertex_reps: Vec<(usize, usize)>,
    edge_of: Vec<[usize; 6]>,
    edge_reps: Vec<(usize, usize)>,
    // true when the class direction runs from the smaller to the larger
    // local label in this tetrahedron
    edge_forward: Vec<[bool; 6]>,
    face_of: Vec<[usize; 4]>,
    face_reps: Vec<[(usize, usize); 2]>,
    to_canonical: Vec<[Perm4; 4]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    tets: usize,
    gluings: Vec<Vec<Option<GluingEntry>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GluingEntry {
    tet: usize,
    face: usize,
    corners: [usize; 3],
}

/// Parses the JSON gluing format and validates the result.
pub fn parse_triangulation(input: &str) -> Result<Triangulation> {
    let doc: Document = serde_json::from_str(input).map_err(|e| Error::Malformed(e.to_string()))?;
    if doc.tets == 0 {
        return Err(Error::Empty);
    }
    if doc.gluings.len() != doc.tets {
        return Err(Error::Malformed(format!(
            "\"tets\" is {} but {} gluing rows are given",
            doc.tets,
            doc.gluings.len()
        )));
    }
    let mut raw = Vec::with_capacity(doc.tets);
    for (tet, row) in doc.gluings.iter().enumerate() {
        if row.len() > 4 {
            return Err(Error::Malformed(format!("tetrahedron {tet} has {} face entries", row.len())));
        }
        let mut faces = [None; 4];
        for (face, entry) in row.iter().enumerate() {
            let Some(entry) = entry else { continue };
            if entry.face > 3 {
                return Err(Error::Malformed(format!(
                    "face {face} of tetrahedron {tet} targets face slot {}",
                    entry.face
                )));
            }
            let perm =
                Perm4::from_face_corners(face, entry.corners).filter(|p| p.apply(face) == entry.face).ok_or_else(
                    || Error::BadCorners { tet, face, target_face: entry.face, corners: entry.corners.to_vec() },
                )?;
            faces[face] = Some(FaceGluing { tet: entry.tet, face: entry.face, perm });
        }
        raw.push(faces);
    }
    Triangulation::from_partial_gluings(raw)
}

/// Assigns ±1 to every tetrahedron so that every gluing reverses the induced
/// face orientations. The least tetrahedron of each component gets +1.
/// Returns the signs and the component of each tetrahedron.
pub fn orient(gluings: &[[FaceGluing; 4]]) -> Result<(Vec<i32>, Vec<usize>)> {
    let t = gluings.len();
    let mut sign = vec![0i32; t];
    let mut component = vec![usize::MAX; t];
    let mut next_component = 0;
    let mut queue = VecDeque::new();
    for root in 0..t {
        if sign[root] != 0 {
            continue;
        }
        sign[root] = 1;
        component[root] = next_component;
        queue.push_back(root);
        while let Some(tet) = queue.pop_front() {
            for (face, g) in gluings[tet].iter().enumerate() {
                let want = -sign[tet] * g.perm.sign();
                if sign[g.tet] == 0 {
                    sign[g.tet] = want;
                    component[g.tet] = next_component;
                    queue.push_back(g.tet);
                } else if sign[g.tet] != want {
                    return Err(Error::NonOrientable { tet, face });
                }
            }
        }
        next_component += 1;
    }
    Ok((sign, component))
}

impl Triangulation {
    /// Builds a triangulation from complete face pairings.
    pub fn new(gluings: Vec<[FaceGluing; 4]>) -> Result<Self> {
        Self::from_partial_gluings(gluings.into_iter().map(|row| row.map(Some)).collect())
    }

    /// Builds a triangulation where `None` marks a face left unglued, which
    /// is rejected.
    pub fn from_partial_gluings(raw: Vec<[Option<FaceGluing>; 4]>) -> Result<Self> {
        let t = raw.len();
        if t == 0 {
            return Err(Error::Empty);
        }
        for (tet, row) in raw.iter().enumerate() {
            if let Some(face) = row.iter().position(Option::is_none) {
                return Err(Error::UngluedFace { tet, face });
            }
        }
        let mut gluings = Vec::with_capacity(t);
        for (tet, row) in raw.iter().enumerate() {
            let mut out = [FaceGluing { tet: 0, face: 0, perm: Perm4::IDENTITY }; 4];
            for face in 0..4 {
                let g = row[face].ok_or(Error::UngluedFace { tet, face })?;
                if g.tet >= t {
                    return Err(Error::BadTarget { tet, face, target: g.tet });
                }
                if g.face > 3 || g.perm.apply(face) != g.face {
                    let corners = face_vertices(face).map(|v| g.perm.apply(v)).to_vec();
                    return Err(Error::BadCorners { tet, face, target_face: g.face, corners });
                }
                if g.tet == tet && g.face == face {
                    return Err(Error::SelfGluedFace { tet, face });
                }
                out[face] = g;
            }
            gluings.push(out);
        }
        for (tet, row) in gluings.iter().enumerate() {
            for (face, g) in row.iter().enumerate() {
                let back = gluings[g.tet][g.face];
                if back.tet != tet || back.face != face || back.perm != g.perm.inverse() {
                    return Err(Error::NotInvolutive { tet, face, partner_tet: g.tet, partner_face: g.face });
                }
            }
        }
        Self::assemble(gluings)
    }

    fn assemble(gluings: Vec<[FaceGluing; 4]>) -> Result<Self> {
        let t = gluings.len();
        let (orientation, component) = orient(&gluings)?;
        let components = component.iter().max().map_or(0, |c| c + 1);

        // faces: the lexicographically smaller slot of each pair is canonical
        let mut face_of = vec![[usize::MAX; 4]; t];
        let mut face_reps = Vec::new();
        let mut to_canonical = vec![[Perm4::IDENTITY; 4]; t];
        for tet in 0..t {
            for face in 0..4 {
                if face_of[tet][face] != usize::MAX {
                    continue;
                }
                let g = gluings[tet][face];
                let id = face_reps.len();
                face_reps.push([(tet, face), (g.tet, g.face)]);
                face_of[tet][face] = id;
                face_of[g.tet][g.face] = id;
                to_canonical[g.tet][g.face] = g.perm.inverse();
            }
        }

        // vertices
        let mut vertex_of = vec![[usize::MAX; 4]; t];
        let mut vertex_reps = Vec::new();
        for tet in 0..t {
            for v in 0..4 {
                if vertex_of[tet][v] != usize::MAX {
                    continue;
                }
                let id = vertex_reps.len();
                vertex_reps.push((tet, v));
                vertex_of[tet][v] = id;
                let mut stack = vec![(tet, v)];
                while let Some((i, a)) = stack.pop() {
                    for (f, g) in gluings[i].iter().enumerate() {
                        if f == a {
                            continue;
                        }
                        let b = g.perm.apply(a);
                        if vertex_of[g.tet][b] == usize::MAX {
                            vertex_of[g.tet][b] = id;
                            stack.push((g.tet, b));
                        }
                    }
                }
            }
        }

        // edges, with direction transported along the gluings
        let mut edge_of = vec![[usize::MAX; 6]; t];
        let mut edge_forward = vec![[true; 6]; t];
        let mut edge_reps = Vec::new();
        for tet in 0..t {
            for e in 0..6 {
                if edge_of[tet][e] != usize::MAX {
                    continue;
                }
                let id = edge_reps.len();
                edge_reps.push((tet, e));
                edge_of[tet][e] = id;
                edge_forward[tet][e] = true;
                let mut stack = vec![(tet, e)];
                while let Some((i, ei)) = stack.pop() {
                    let [a, b] = EDGES[ei];
                    let fwd = edge_forward[i][ei];
                    for (f, g) in gluings[i].iter().enumerate() {
                        if f == a || f == b {
                            continue;
                        }
                        let (ia, ib) = (g.perm.apply(a), g.perm.apply(b));
                        let ej = edge_index(ia, ib);
                        let target_fwd = fwd ^ (ia > ib);
                        if edge_of[g.tet][ej] == usize::MAX {
                            edge_of[g.tet][ej] = id;
                            edge_forward[g.tet][ej] = target_fwd;
                            stack.push((g.tet, ej));
                        } else if edge_forward[g.tet][ej] != target_fwd {
                            return Err(Error::ReversedEdge { edge: id, tet: g.tet });
                        }
                    }
                }
            }
        }

        let tri = Triangulation {
            gluings,
            orientation,
            component,
            components,
            vertex_of,
            vertex_reps,
            edge_of,
            edge_reps,
            edge_forward,
            face_of,
            face_reps,
            to_canonical,
        };
        for v in 0..tri.vertex_count() {
            link::build_link(&tri, v)?;
        }
        Ok(tri)
    }

    /// Returns a copy whose edge classes carry the canonical orientation:
    /// each class is directed from the smaller to the larger local label in
    /// its least `(tetrahedron, vertex pair)` representative.
    pub fn orient_edges(&self) -> Self {
        let mut out = self.clone();
        for class in 0..self.edge_count() {
            let (tet, e) = self.edge_reps[class];
            if !self.edge_forward[tet][e] {
                out = out.flip_edge(class);
            }
        }
        out
    }

    /// Returns a copy with the orientation of one edge class reversed.
    pub fn flip_edge(&self, class: usize) -> Self {
        let mut out = self.clone();
        for (edges, fwd) in self.edge_of.iter().zip(out.edge_forward.iter_mut()) {
            for e in 0..6 {
                if edges[e] == class {
                    fwd[e] = !fwd[e];
                }
            }
        }
        out
    }

    /// Renumbers tetrahedron `i` as `tet_map[i]` and its local vertex `v` as
    /// `vertex_maps[i].apply(v)`. The result describes the same complex.
    pub fn relabel(&self, tet_map: &[usize], vertex_maps: &[Perm4]) -> Result<Self> {
        let t = self.tet_count();
        if tet_map.len() != t || vertex_maps.len() != t {
            return Err(Error::Dimension { expected: t, found: tet_map.len().min(vertex_maps.len()) });
        }
        let mut seen = vec![false; t];
        for &i in tet_map {
            if i >= t || seen[i] {
                return Err(Error::OutOfRange { index: i, limit: t });
            }
            seen[i] = true;
        }
        let mut raw = vec![[None; 4]; t];
        for i in 0..t {
            let rho = vertex_maps[i];
            for f in 0..4 {
                let g = self.gluings[i][f];
                let rho_j = vertex_maps[g.tet];
                let perm = rho_j.compose(g.perm).compose(rho.inverse());
                raw[tet_map[i]][rho.apply(f)] =
                    Some(FaceGluing { tet: tet_map[g.tet], face: rho_j.apply(g.face), perm });
            }
        }
        Self::from_partial_gluings(raw)
    }

    pub fn to_json(&self) -> String {
        let doc = Document {
            tets: self.tet_count(),
            gluings: self
                .gluings
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .map(|(face, g)| {
                            Some(GluingEntry {
                                tet: g.tet,
                                face: g.face,
                                corners: face_vertices(face).map(|v| g.perm.apply(v)),
                            })
                        })
                        .collect()
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }

    pub fn tet_count(&self) -> usize {
        self.gluings.len()
    }

    pub fn gluing(&self, tet: usize, face: usize) -> FaceGluing {
        self.gluings[tet][face]
    }

    pub fn gluings(&self) -> &[[FaceGluing; 4]] {
        &self.gluings
    }

    /// +1 when local order 0123 is positively oriented.
    pub fn orientation(&self, tet: usize) -> i32 {
        self.orientation[tet]
    }

    pub fn component(&self, tet: usize) -> usize {
        self.component[tet]
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_reps.len()
    }

    pub fn vertex_class(&self, tet: usize, v: usize) -> usize {
        self.vertex_of[tet][v]
    }

    pub fn vertex_rep(&self, class: usize) -> (usize, usize) {
        self.vertex_reps[class]
    }

    pub fn edge_count(&self) -> usize {
        self.edge_reps.len()
    }

    pub fn edge_class(&self, tet: usize, a: usize, b: usize) -> usize {
        self.edge_of[tet][edge_index(a, b)]
    }

    /// Least representative `(tetrahedron, [a, b])`, with `a < b`.
    pub fn edge_rep(&self, class: usize) -> (usize, [usize; 2]) {
        let (tet, e) = self.edge_reps[class];
        (tet, EDGES[e])
    }

    /// `(tail, head)` of the oriented edge `{a, b}` in local labels of `tet`.
    pub fn edge_direction(&self, tet: usize, a: usize, b: usize) -> (usize, usize) {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        if self.edge_forward[tet][edge_index(a, b)] {
            (lo, hi)
        } else {
            (hi, lo)
        }
    }

    pub fn face_count(&self) -> usize {
        self.face_reps.len()
    }

    pub fn face_class(&self, tet: usize, face: usize) -> usize {
        self.face_of[tet][face]
    }

    /// The two face slots of a face class; the first is canonical.
    pub fn face_sides(&self, class: usize) -> [(usize, usize); 2] {
        self.face_reps[class]
    }

    pub fn arc_count(&self) -> usize {
        3 * self.face_count()
    }

    pub fn disc_count(&self) -> usize {
        7 * self.tet_count()
    }

    /// Index of the normal arc in face slot `face` of `tet` linking local
    /// vertex `corner`.
    pub fn arc_index(&self, tet: usize, face: usize, corner: usize) -> usize {
        debug_assert_ne!(face, corner);
        let class = self.face_of[tet][face];
        let (ct, cf) = self.face_reps[class][0];
        let c = self.to_canonical[tet][face].apply(corner);
        debug_assert_eq!(ct, self.face_reps[class][0].0);
        let pos = face_vertices(cf).iter().position(|&x| x == c).expect("corner in face");
        3 * class + pos
    }

    pub fn arc(&self, index: usize) -> Arc {
        let face = index / 3;
        let (tet, slot) = self.face_reps[face][0];
        let corner = face_vertices(slot)[index % 3];
        Arc { index, face, tet, slot, corner, vertex: self.vertex_of[tet][corner] }
    }

    /// `(tail, head)` of the edge opposite the arc's corner, in the local
    /// labels of the arc's canonical face slot.
    pub fn arc_direction(&self, index: usize) -> (usize, usize) {
        let arc = self.arc(index);
        let [a, b] = opposite_edge(arc.slot, arc.corner);
        self.edge_direction(arc.tet, a, b)
    }

    pub fn describe_arc(&self, index: usize) -> String {
        let a = self.arc(index);
        format!(
            "arc {} (face {}, corner {} of tet {} face {}, vertex {})",
            index, a.face, a.corner, a.tet, a.slot, a.vertex
        )
    }
}
