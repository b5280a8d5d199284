mod common;

use normcx::linalg::IntMatrix;
use normcx::{
    boundary_matrix, build_link, fixtures, fundamental_class, kernel_basis, projection, smith_normal_form, Chain1,
    Triangulation,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// First homology of the dual cell complex (tetrahedra, faces, edges),
/// which deformation retracts onto the manifold with vertex neighbourhoods
/// removed. Returns (free rank, torsion coefficients).
#[allow(clippy::needless_range_loop)]
fn dual_first_homology(tri: &Triangulation) -> (usize, Vec<BigInt>) {
    let t = tri.tet_count();
    // ∂1: a dual edge runs from the canonical side's tetrahedron to the other.
    let mut d1 = vec![vec![0i64; tri.face_count()]; t];
    for f in 0..tri.face_count() {
        let [(a, _), (b, _)] = tri.face_sides(f);
        d1[b][f] += 1;
        d1[a][f] -= 1;
    }
    // ∂2: walk once around each edge, crossing faces.
    let mut d2 = vec![vec![0i64; tri.edge_count()]; tri.face_count()];
    for e in 0..tri.edge_count() {
        let (tet, [a, b]) = tri.edge_rep(e);
        let mut rest = (0..4).filter(|&x| x != a && x != b);
        let (c, d) = (rest.next().unwrap(), rest.next().unwrap());
        let start = (tet, a, b, c, d);
        let mut state = start;
        loop {
            let (i, a, b, c, d) = state;
            let f = tri.face_class(i, c);
            d2[f][e] += if tri.face_sides(f)[0] == (i, c) { 1 } else { -1 };
            let g = tri.gluing(i, c);
            let p = g.perm;
            state = (g.tet, p.apply(a), p.apply(b), p.apply(d), p.apply(c));
            if state == start {
                break;
            }
        }
    }
    let d1 = IntMatrix::from_rows(&d1);
    let d2 = IntMatrix::from_rows(&d2);
    assert!((&d1 * &d2).is_zero());
    let rank1 = smith_normal_form(&d1).rank;
    let s2 = smith_normal_form(&d2);
    let free = tri.face_count() - rank1 - s2.rank;
    let torsion = s2.invariant_factors().into_iter().take(s2.rank).filter(|x| !x.is_one()).collect();
    (free, torsion)
}

#[test]
fn dual_homology_identifies_the_fixtures() {
    assert_eq!(dual_first_homology(&fixtures::figure_eight()), (1, vec![]));
    assert_eq!(dual_first_homology(&fixtures::doubled_tetrahedron()), (0, vec![]));
    assert_eq!(dual_first_homology(&fixtures::pentachoron_boundary()), (0, vec![]));
    assert_eq!(dual_first_homology(&fixtures::three_tet()), (0, vec![]));
}

#[test]
fn link_counts() {
    let expect = [
        ("doubled", fixtures::doubled_tetrahedron(), vec![(2, 2); 4]),
        ("figure-eight", fixtures::figure_eight(), vec![(8, 0)]),
        ("three-tet", fixtures::three_tet(), vec![(12, 2)]),
        ("pentachoron", fixtures::pentachoron_boundary(), vec![(4, 2); 5]),
    ];
    for (name, tri, counts) in expect {
        let got: Vec<(usize, i64)> = (0..tri.vertex_count())
            .map(|v| {
                let l = build_link(&tri, v).unwrap();
                (l.triangles.len(), l.euler_characteristic)
            })
            .collect();
        assert_eq!(got, counts, "{name}");
    }
}

#[test]
fn every_arc_and_triangle_belongs_to_one_link() {
    for tri in fixtures::all() {
        let mut arcs = vec![0; tri.arc_count()];
        let mut discs = vec![0; tri.disc_count()];
        for v in 0..tri.vertex_count() {
            let l = build_link(&tri, v).unwrap();
            assert_eq!(2 * l.arcs.len(), 3 * l.triangles.len());
            assert_eq!(
                l.euler_characteristic,
                l.vertices.len() as i64 - l.arcs.len() as i64 + l.triangles.len() as i64
            );
            l.arcs.iter().for_each(|&a| arcs[a] += 1);
            l.triangles.iter().for_each(|&d| discs[d] += 1);
        }
        assert!(arcs.iter().all(|&c| c == 1));
        assert!((0..tri.disc_count()).all(|d| discs[d] == usize::from(d % 7 < 4)));
    }
}

#[test]
fn triangle_classes_match_flood_fill() {
    for tri in fixtures::all() {
        let mut ours: Vec<Vec<usize>> =
            (0..tri.vertex_count()).map(|v| build_link(&tri, v).unwrap().triangles).collect();
        ours.sort();
        let mut theirs = common::triangle_vertex_classes(&tri);
        theirs.sort();
        assert_eq!(ours, theirs);
    }
}

#[test]
fn projections_sum_to_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for tri in fixtures::all() {
        let links: Vec<_> = (0..tri.vertex_count()).map(|v| build_link(&tri, v).unwrap()).collect();
        for _ in 0..100 {
            let c = Chain1((0..tri.arc_count()).map(|_| rng.gen_range(-5..=5)).collect());
            let mut sum = vec![0i64; c.len()];
            for l in &links {
                let p = projection(l, &c);
                assert_eq!(projection(l, &p), p);
                sum.iter_mut().zip(&p.0).for_each(|(s, x)| *s += x);
            }
            assert_eq!(sum, c.0);
        }
    }
}

#[test]
fn second_homology_of_each_link_is_its_fundamental_class() {
    for tri in fixtures::all() {
        let d = boundary_matrix(&tri);
        for v in 0..tri.vertex_count() {
            let l = build_link(&tri, v).unwrap();
            let local = l.boundary_matrix(&d).to_dense();
            let kernel = kernel_basis(&local);
            assert_eq!(kernel.len(), 1);
            let k = &kernel[0];
            let sign = if k[0].is_negative() { -BigInt::one() } else { BigInt::one() };
            assert!(k.iter().all(|x| *x == sign));
            let s = fundamental_class(&tri, &l);
            assert!(d.apply(&s.chain.0).unwrap().iter().all(|&c| c == 0));
        }
    }
}

#[test]
fn link_boundary_squares_to_zero_and_solves_zero() {
    for tri in fixtures::all() {
        let d = boundary_matrix(&tri);
        for v in 0..tri.vertex_count() {
            let l = build_link(&tri, v).unwrap();
            let d2 = l.boundary_matrix(&d).to_dense();
            let d1 = l.edge_boundary_matrix(&tri).to_dense();
            assert!((&d1 * &d2).is_zero());
            // first homology of the link has rank 2 × genus
            let s1 = smith_normal_form(&d1);
            let s2 = smith_normal_form(&d2);
            assert_eq!(l.arcs.len() - s1.rank - s2.rank, 2 * l.genus as usize);
            assert!(s2.invariant_factors().iter().take(s2.rank).all(|x| x.is_one()));
            let zero = vec![BigInt::zero(); l.arcs.len()];
            assert_eq!(s2.solve(&zero).unwrap().integral(), Some(vec![BigInt::zero(); l.triangles.len()]));
        }
    }
}
