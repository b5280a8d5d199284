//! Small triangulations used throughout the tests, benches and docs.

use std::collections::HashMap;

use crate::perm::{face_vertices, Perm4};
use crate::triangulation::{FaceGluing, Triangulation};

fn join(rows: &mut [[Option<FaceGluing>; 4]], tet: usize, face: usize, other: usize, perm: Perm4) {
    rows[tet][face] = Some(FaceGluing { tet: other, face: perm.apply(face), perm });
    rows[other][perm.apply(face)] = Some(FaceGluing { tet, face, perm: perm.inverse() });
}

fn perm(images: [usize; 4]) -> Perm4 {
    Perm4::new(images).expect("valid permutation")
}

/// Two tetrahedra with every face glued to the same face of the other by
/// the identity: a triangulation of the 3-sphere.
pub fn doubled_tetrahedron() -> Triangulation {
    let mut rows = vec![[None; 4]; 2];
    for face in 0..4 {
        join(&mut rows, 0, face, 1, Perm4::IDENTITY);
    }
    Triangulation::from_partial_gluings(rows).expect("doubled tetrahedron is valid")
}

/// The two-tetrahedron ideal triangulation of the figure-eight knot
/// complement. One vertex, with torus link.
pub fn figure_eight() -> Triangulation {
    let mut rows = vec![[None; 4]; 2];
    join(&mut rows, 0, 0, 1, perm([1, 3, 0, 2]));
    join(&mut rows, 0, 1, 1, perm([2, 0, 3, 1]));
    join(&mut rows, 0, 2, 1, perm([0, 3, 2, 1]));
    join(&mut rows, 0, 3, 1, perm([2, 1, 0, 3]));
    Triangulation::from_partial_gluings(rows).expect("figure-eight is valid")
}

const THREE_TET: &str = r#"{"tets":3,"gluings":[
[{"tet":1,"face":0,"corners":[3,1,2]},{"tet":2,"face":3,"corners":[0,1,2]},{"tet":1,"face":1,"corners":[0,3,2]},{"tet":2,"face":0,"corners":[1,3,2]}],
[{"tet":0,"face":0,"corners":[2,3,1]},{"tet":0,"face":2,"corners":[0,3,1]},{"tet":2,"face":2,"corners":[3,1,0]},{"tet":2,"face":1,"corners":[0,3,2]}],
[{"tet":0,"face":3,"corners":[0,2,1]},{"tet":1,"face":3,"corners":[0,2,1]},{"tet":1,"face":2,"corners":[3,1,0]},{"tet":0,"face":1,"corners":[0,2,3]}]]}"#;

const THREE_TET_FOLDED: &str = r#"{"tets":3,"gluings":[
[{"tet":0,"face":2,"corners":[1,0,3]},{"tet":2,"face":2,"corners":[1,0,3]},{"tet":0,"face":0,"corners":[2,1,3]},{"tet":2,"face":3,"corners":[1,2,0]}],
[{"tet":2,"face":0,"corners":[2,1,3]},{"tet":2,"face":1,"corners":[2,0,3]},{"tet":1,"face":3,"corners":[1,2,0]},{"tet":1,"face":2,"corners":[3,0,1]}],
[{"tet":1,"face":0,"corners":[2,1,3]},{"tet":1,"face":1,"corners":[2,0,3]},{"tet":0,"face":1,"corners":[2,0,3]},{"tet":0,"face":3,"corners":[2,0,1]}]]}"#;

/// A closed one-vertex triangulation with three tetrahedra and four edges;
/// every face is glued to a different tetrahedron.
pub fn three_tet() -> Triangulation {
    crate::triangulation::parse_triangulation(THREE_TET).expect("three-tetrahedron fixture is valid")
}

/// Another closed one-vertex three-tetrahedron triangulation, in which two
/// face classes are glued within a single tetrahedron. Some normal
/// triangles meet the same arc class twice, so their boundary columns
/// cancel down to a single entry.
pub fn three_tet_folded() -> Triangulation {
    crate::triangulation::parse_triangulation(THREE_TET_FOLDED).expect("folded fixture is valid")
}

/// Glues tetrahedra given by global vertex labels along equal faces. Each
/// triple of labels must occur in exactly two tetrahedra.
pub fn from_simplices(tets: &[[usize; 4]]) -> Option<Triangulation> {
    let mut faces: HashMap<[usize; 3], Vec<(usize, usize)>> = HashMap::new();
    for (i, t) in tets.iter().enumerate() {
        for f in 0..4 {
            let mut key = face_vertices(f).map(|v| t[v]);
            key.sort();
            faces.entry(key).or_default().push((i, f));
        }
    }
    let mut rows = vec![[None; 4]; tets.len()];
    for sides in faces.values() {
        let [(i, f), (j, g)] = sides[..] else { return None };
        let mut images = [0; 4];
        for v in 0..4 {
            images[v] = if v == f { g } else { tets[j].iter().position(|&x| x == tets[i][v])? };
        }
        let p = Perm4::new(images)?;
        rows[i][f] = Some(FaceGluing { tet: j, face: g, perm: p });
        rows[j][g] = Some(FaceGluing { tet: i, face: f, perm: p.inverse() });
    }
    Triangulation::from_partial_gluings(rows).ok()
}

/// The boundary of the 4-simplex: five tetrahedra, five vertices, a
/// simplicial 3-sphere.
pub fn pentachoron_boundary() -> Triangulation {
    let tets: Vec<[usize; 4]> = (0..5)
        .map(|skip| {
            let mut t = [0; 4];
            for (slot, v) in t.iter_mut().zip((0..5).filter(|&v| v != skip)) {
                *slot = v;
            }
            t
        })
        .collect();
    from_simplices(&tets).expect("boundary of the 4-simplex is valid")
}

pub fn all() -> Vec<Triangulation> {
    vec![doubled_tetrahedron(), figure_eight(), three_tet(), pentachoron_boundary()]
}
